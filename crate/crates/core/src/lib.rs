//! Laplacian spectra of small graphs: construction of parametric families,
//! floating-point and exact spectra, interval counting, equitable partitions,
//! and verifiers for eigenvalue-distribution bounds in terms of the diameter.

pub mod error;
pub mod exact;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod lab;
pub mod matrix;
pub mod partitions;
pub mod paths;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use family::{make_family, FamilyKind, FamilySpec};
pub use graph::Graph;
pub use interval::{Interval, RatInterval, RealInterval};
pub use report::{TheoremId, TheoremReport};
