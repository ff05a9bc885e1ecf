//! Independent extended-precision reference implementations, used to
//! validate the engine.
//!
//! Everything here works in double-double arithmetic (about 31 digits) and
//! shares no series code with the engine.

mod complex;
mod dd;
mod functions;
mod polylog;
mod taylor;

pub use complex::ExtendedComplex;
pub use dd::ExtendedReal;
pub use functions::{bernoulli_oracle, oracle_gamma, oracle_zeta, stieltjes_oracle};
pub use polylog::{
    extended_sum, identity_residuals, negint_closed_form, negint_numerator, oracle_polylog,
    oracle_polylog_series, IdentityResiduals, NEGINT_MAX,
};
pub use taylor::{taylor_coefficients_oracle, TAYLOR_ORACLE_MAX_ORDER};
