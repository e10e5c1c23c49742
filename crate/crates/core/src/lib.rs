//! Exact Alexander polynomials of braid closures computed through the vector
//! representation of `U_q(gl(1|1))`, together with the full-twist expansion
//! of a twisted family and its stabilization series.
//!
//! Everything is computed in the variable `q`; the Alexander variable is
//! `t = q^2` and only affects display.

pub mod braidrep;
pub mod cli;
pub mod error;
pub mod exactring;
pub mod glrep;
pub mod highwt;
pub mod matrix;
pub mod twistcalc;
pub mod verify;

pub use braidrep::BraidWord;
pub use error::{Error, Result};
pub use exactring::{LaurentPoly, LaurentSeries, RationalFunc, Variable};
pub use twistcalc::AlexanderValue;
