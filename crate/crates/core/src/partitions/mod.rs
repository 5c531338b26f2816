//! Equitable partitions and quotient matrices.

mod parametric;
mod quotient;

pub use parametric::{
    check_deletion_multiplicities, parametric_instance, parametric_polynomial, sign_claims,
    verify_parametric_identity, ParametricFamily, RootLocation, SignClaim,
};
pub use quotient::{
    check_quotient_containment, is_equitable, quotient_matrix, row_sums, Partition, QuotientMatrix,
};
