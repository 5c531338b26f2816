//! Dense floating-point spectra.

mod checks;
mod export;
mod jacobi;
mod spectrum;

pub use checks::{
    check_cauchy_interlacing, check_complement_duality, check_double_star, check_edge_interlacing,
    check_weyl, doob_tree_bound, real_laplacian, zero_multiplicity_is_components,
};
pub use export::{spectra_csv, spectrum_record, IntervalRecord, SpectrumRecord};
pub use jacobi::{jacobi, off_diagonal_norm, symmetric_eigenvalues, Eigen};
pub use spectrum::{
    count_interval, default_tol, matrix_spectrum, path_spectrum_closed_form, spectrum,
    IntervalCount, Spectrum,
};
