use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::dense;
use super::laurent::{forward_owned, LaurentPoly};
use crate::error::{Error, Result};

/// Element of `Q(q)` kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator are coprime, the denominator
/// is an ordinary polynomial with positive constant term, and any power of
/// `q` lives in the numerator. Equal values
/// therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (ln, n) = num.to_dense();
        let (ld, d) = den.to_dense();
        let g = dense::gcd(&n, &d);
        let mut n = dense::div_exact(&n, &g).expect("gcd divides numerator");
        let mut d = dense::div_exact(&d, &g).expect("gcd divides denominator");
        if d[0] < num_bigint::BigInt::zero() {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = -&*x;
            }
        }
        Self {
            num: LaurentPoly::from_dense(ln - ld, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(coeff, exp))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<LaurentPoly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.den)
        }
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<LaurentPoly> for RationalFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Zero for RationalFunc {
    fn zero() -> Self {
        RationalFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunc::is_zero(self)
    }
}

impl One for RationalFunc {
    fn one() -> Self {
        RationalFunc::one()
    }
}

impl<'a> Add<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunc::from_poly(&self.num + &rhs.num);
            }
            return RationalFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunc> for &'a RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunc::from_poly(&self.num * &rhs.num);
        }
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        RationalFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        -&self
    }
}

forward_owned!(RationalFunc, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn cancels_common_factor() {
        let f = RationalFunc::new(lp(&[(2, 1), (0, -1)]), lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(f.numer(), &lp(&[(1, 1), (0, 1)]));
        assert!(f.denom().is_one());
    }

    #[test]
    fn q_power_moves_to_numerator() {
        // q^-2 / (q^-2 - q^2) = 1 / (1 - q^4)
        let f = RationalFunc::new(lp(&[(-2, 1)]), lp(&[(-2, 1), (2, -1)])).unwrap();
        assert_eq!(f.denom(), &lp(&[(0, 1), (4, -1)]));
        assert!(f.numer().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunc::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(RationalFunc::zero().inv(), Err(Error::ZeroDenominator));
    }

    #[test]
    fn integer_content_reduced() {
        let f = RationalFunc::new(lp(&[(0, 2)]), lp(&[(0, 4), (1, 4)])).unwrap();
        assert_eq!(f.numer(), &lp(&[(0, 1)]));
        assert_eq!(f.denom(), &lp(&[(0, 2), (1, 2)]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-5i64..5, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn arb_nonzero() -> impl Strategy<Value = LaurentPoly> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunc> {
        (arb_poly(), arb_nonzero()).prop_map(|(n, d)| RationalFunc::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn self_quotient_is_one(p in arb_nonzero()) {
            prop_assert_eq!(RationalFunc::new(p.clone(), p).unwrap(), RationalFunc::one());
        }

        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RationalFunc::one());
            }
        }

        #[test]
        fn normalization_is_idempotent(a in arb_rf()) {
            let again = RationalFunc::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(again, a);
        }

        #[test]
        fn canonical_denominator(a in arb_rf()) {
            let d = a.denom();
            prop_assert!(d.coeff(0) > 0.into());
            prop_assert_eq!(d.min_exp(), Some(0));
        }
    }
}
