//! Theorem verifiers, family recognition, and exhaustive enumeration.

mod canon;
mod classify;
mod enumerate;
mod recognize;
mod theorems;

pub use canon::{canonical_form, canonical_labeling, isomorphic, Canonical};
pub use classify::{classify_exhaustive, summarize, without_timing, Classification, ClassificationRow, TheoremSummary};
pub use enumerate::{enumerate_connected, enumerate_trees, enumeration_ceiling, DEFAULT_CEILING, TREE_CEILING};
pub use recognize::{
    diameter_three_equality_specs, diameter_two_equality_specs, recognize_family, FamilyIndex,
};
pub use theorems::{
    check_complete_minus_star_spectrum, check_diameter_two_auxiliary, check_gn3_deletions,
    check_gna_deletions, in_class_g, spot_values, sufficient_condition_witness,
    sufficient_condition_witness_capped, verify_bound, verify_bound_facts, verify_gndt_strictness,
    GraphFacts,
};
