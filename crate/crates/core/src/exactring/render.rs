use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Display variable. Everything is computed in `q`; `t = q^2` only changes
/// how exponents are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variable {
    Q,
    #[default]
    T,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::Q => "q",
            Variable::T => "t",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Variable::Q),
            "t" => Ok(Variable::T),
            other => Err(Error::InvalidArgument(format!("unknown variable {other:?}"))),
        }
    }
}

/// Exponent of `q^exp` written in the display variable; odd `q`-exponents
/// become exact halves in `t` (`"-1/2"`).
pub fn exponent_label(exp: i64, var: Variable) -> String {
    match var {
        Variable::Q => exp.to_string(),
        Variable::T if exp % 2 == 0 => (exp / 2).to_string(),
        Variable::T => format!("{exp}/2"),
    }
}

/// Inverse of [`exponent_label`], returning the `q`-exponent.
pub fn parse_exponent_label(label: &str, var: Variable) -> Result<i64> {
    let bad = || Error::InvalidArgument(format!("bad exponent {label:?}"));
    match var {
        Variable::Q => label.parse().map_err(|_| bad()),
        Variable::T => match label.split_once('/') {
            Some((num, "2")) => {
                let e: i64 = num.parse().map_err(|_| bad())?;
                if e % 2 == 0 {
                    return Err(bad());
                }
                Ok(e)
            }
            Some(_) => Err(bad()),
            None => label.parse::<i64>().map(|e| 2 * e).map_err(|_| bad()),
        },
    }
}

fn power_text(exp: i64, var: Variable) -> String {
    let label = exponent_label(exp, var);
    match label.as_str() {
        "1" => var.name().to_string(),
        l if l.contains('/') => format!("{}^({l})", var.name()),
        l => format!("{}^{l}", var.name()),
    }
}

/// Classical notation in increasing degree, e.g. `t^-1 - 1 + t`.
pub fn poly_text(p: &LaurentPoly, var: Variable) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag: BigInt = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power_text(e, var));
        } else {
            out.push_str(&format!("{mag}*{}", power_text(e, var)));
        }
    }
    out
}
