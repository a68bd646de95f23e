//! Exact arithmetic for evaluation modules of the Yangian `Y(gl_n)` and the
//! irreducibility of their tensor products.
//!
//! * [`linalg`]: rationals, sparse and polynomial matrices, kernels, spans.
//! * [`weight`]: highest weights, content sets and the pairwise criterion.
//! * [`gt`]: Gelfand–Tsetlin bases and the `gl_n` action on them.
//! * [`yangian`]: the Yangian action on tensor products, quantum minors.
//! * [`irreducibility`]: the brute-force oracle, witness vectors and grid
//!   cross-validation.

pub mod error;
pub mod gt;
pub mod irreducibility;
pub mod linalg;
pub mod weight;
pub mod yangian;

pub use error::{Error, Result};
pub use gt::{GlnModule, GtPattern};
pub use linalg::{Poly, PolyMatrix, Rational, SparseMatrix, Subspace};
pub use weight::{multi_irreducible, pair_irreducible, HighestWeight};
pub use yangian::ModuleSpace;
