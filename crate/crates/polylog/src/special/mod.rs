//! Standard special functions consumed by the polylogarithm evaluator.
//!
//! | Function | Domain |
//! |----------|--------|
//! | [`complex_gamma`] | complex `s`, poles at non-positive integers |
//! | [`polygamma`] | orders `0..=4`, real `x > 0` |
//! | [`riemann_zeta`] | complex `s != 1` |
//! | [`hurwitz_zeta`] | real `s != 1`, real `q > 0` |
//! | [`dirichlet_eta`] | complex `s` |
//! | [`dirichlet_beta`] | real `s` |

mod gamma;
mod polygamma;
pub(crate) mod trig;
mod zeta;

pub use gamma::complex_gamma;
pub use polygamma::{polygamma, POLYGAMMA_MAX_ORDER};
pub use zeta::{dirichlet_beta, dirichlet_eta, hurwitz_zeta, riemann_zeta};
