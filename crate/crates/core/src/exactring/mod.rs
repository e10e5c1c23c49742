//! Exact scalars: Laurent polynomials in `q` over the integers, their
//! fraction field, and truncated Laurent series.

mod dense;
mod laurent;
mod rational;
pub mod render;
mod series;

use std::fmt::Debug;

pub use laurent::LaurentPoly;
pub use rational::RationalFunc;
pub use render::Variable;
pub use series::LaurentSeries;

/// `a / b` in `Z[q, q^{-1}]`, failing when the quotient is not a Laurent
/// polynomial.
pub fn lp_exact_div(a: &LaurentPoly, b: &LaurentPoly) -> crate::Result<LaurentPoly> {
    a.exact_div(b)
}

/// Canonical reduced fraction `num / den`.
pub fn rf_reduce(num: LaurentPoly, den: LaurentPoly) -> crate::Result<RationalFunc> {
    RationalFunc::new(num, den)
}

/// Expansion of `f` in increasing powers of `q`, `precision` exponents wide.
pub fn series_of_rf(f: &RationalFunc, precision: usize) -> crate::Result<LaurentSeries> {
    LaurentSeries::from_rational(f, precision)
}

/// Least common multiple of the polynomial parts of `a` and `b` (powers of
/// `q` are units and dropped); positive constant term.
pub fn poly_lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, da) = a.to_dense();
    let (_, db) = b.to_dense();
    if da.is_empty() || db.is_empty() {
        return LaurentPoly::zero();
    }
    let g = dense::gcd(&da, &db);
    let quot = dense::div_exact(&da, &g).expect("gcd divides");
    let l = LaurentPoly::from_dense(0, &quot) * LaurentPoly::from_dense(0, &db);
    if l.coeff(0) < 0.into() {
        -l
    } else {
        l
    }
}

/// Coefficient ring for vectors and matrices. Both scalar types qualify; the
/// braid action never divides, so it can run over [`LaurentPoly`] directly.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + From<LaurentPoly> {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `c * q^e`.
    fn monomial(c: i64, e: i64) -> Self {
        Self::from(LaurentPoly::monomial(c, e))
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for RationalFunc {
    fn zero() -> Self {
        RationalFunc::zero()
    }
    fn one() -> Self {
        RationalFunc::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn quantum_integer(n: i64) -> LaurentPoly {
    let k = n.abs();
    let p: LaurentPoly = (0..k).map(|i| LaurentPoly::monomial(1, k - 1 - 2 * i)).sum();
    if n < 0 {
        -p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_of_cyclotomic_like_factors() {
        let a = LaurentPoly::from_terms([(0, 1), (4, -1)]);
        let b = LaurentPoly::from_terms([(0, 1), (6, -1)]);
        let l = poly_lcm(&a, &b);
        // (1 - q^4)(1 - q^6) / (1 - q^2)
        let expect = (&a * &b).exact_div(&LaurentPoly::from_terms([(0, 1), (2, -1)])).unwrap();
        assert_eq!(l, expect);
        assert!(l.exact_div(&a).is_ok() && l.exact_div(&b).is_ok());
    }

    #[test]
    fn quantum_integer_times_q_minus_inverse() {
        let qq = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        for n in -4..=4 {
            let lhs = &quantum_integer(n) * &qq;
            let rhs = LaurentPoly::from_terms([(n, 1), (-n, -1)]);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
