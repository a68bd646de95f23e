//! Exact linear algebra over the rationals.

pub mod kernel;
pub mod poly;
pub mod polymat;
pub mod scalar;
pub mod sparse;
pub mod subspace;

pub use kernel::{mat_kernel, rank};
pub use poly::Poly;
pub use polymat::PolyMatrix;
pub use scalar::{frac, parse_rational, rat, Rational};
pub use sparse::SparseMatrix;
pub use subspace::{span_closure, Subspace};

/// Formal derivative of a polynomial.
pub fn poly_derivative(p: &Poly) -> Poly {
    p.derivative()
}
