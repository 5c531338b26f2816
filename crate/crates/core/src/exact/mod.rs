//! Exact arithmetic: characteristic polynomials, square-free decomposition,
//! and Sturm counting. No floating point is used here.

mod charpoly;
mod count;
mod poly;
mod sturm;

pub use charpoly::{char_poly, char_poly_rational};
pub use count::{eigenvalue_multiplicity_exact, exact_interval_count, ExactSpectrum, IntegerCounts};
pub use poly::{IntPolynomial, RationalPolynomial};
pub use sturm::{is_square_free, square_free_parts, sturm_count, RootCounter, SturmChain};
