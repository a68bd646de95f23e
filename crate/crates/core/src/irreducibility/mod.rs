//! Deciding irreducibility by direct computation, explicit reducibility
//! witnesses, and cross-validation of the criterion.

pub mod oracle;
pub mod validation;
pub mod witness;

pub use oracle::{cyclic_span, decide, decide_capped, is_cyclic, singular_space, Verdict, DEFAULT_CAP};
pub use validation::{cross_validate, CaseRecord, GridSpec, ValidationReport};
pub use witness::{build_witness, WitnessReport};
