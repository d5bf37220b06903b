//! Large-degree behaviour of the expected number of local maxima below a
//! level, for unit increment variances.

pub mod expansion;
pub mod integrals;
pub mod kernel;
pub mod reference;

pub use expansion::{
    coefficients, log_term, theorem_expansion, theorem_expansion_for, Coefficients,
    ExpansionResult, LogPower,
};
pub use integrals::{h_integral, subtraction, IntegralResult, Selector, Subtraction};
pub use kernel::{h_kernel, KernelId};
pub use reference::{
    reference_constants, ConstantKind, ReferenceConstant, ReferenceIntegral, REFERENCE_INTEGRALS,
};
