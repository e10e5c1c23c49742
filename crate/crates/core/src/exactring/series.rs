use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, RationalFunc};
use crate::error::{Error, Result};

/// Truncated Laurent series in `q`: `sum_i coeffs[i] * q^(lowest + i)`,
/// exact for the `coeffs.len()` retained exponents and unknown beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    lowest: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    /// Expands `f` in increasing powers of `q`, keeping `precision`
    /// consecutive exponents starting at the lowest nonzero one.
    ///
    /// Coefficients stay integral only when the canonical denominator has
    /// constant term 1, which holds for every denominator this crate builds
    /// (products of `1 - q^k` factors); other inputs are rejected.
    pub fn from_rational(f: &RationalFunc, precision: usize) -> Result<Self> {
        assert!(precision >= 1, "precision must be positive");
        if f.is_zero() {
            return Ok(Self {
                lowest: 0,
                coeffs: vec![BigInt::zero(); precision],
            });
        }
        let (low, num) = f.numer().to_dense();
        let (_, den) = f.denom().to_dense();
        let d0 = &den[0];
        if !d0.abs().is_one() {
            return Err(Error::NonUnitSeriesDenominator(d0.clone()));
        }
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(precision);
        for i in 0..precision {
            let mut acc = num.get(i).cloned().unwrap_or_default();
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                acc -= dj * &coeffs[i - j];
            }
            // d0 is a unit
            let (c, _) = acc.div_rem(d0);
            coeffs.push(c);
        }
        Ok(Self { lowest: low, coeffs })
    }

    pub fn from_parts(lowest: i64, coeffs: Vec<BigInt>) -> Self {
        Self { lowest, coeffs }
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Number of retained consecutive exponents.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// First exponent that is no longer known exactly.
    pub fn horizon(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of `q^exp`, or `None` past the retained window.
    pub fn coeff(&self, exp: i64) -> Option<BigInt> {
        if exp < self.lowest {
            return Some(BigInt::zero());
        }
        self.coeffs.get((exp - self.lowest) as usize).cloned()
    }

    /// `self * q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            lowest: self.lowest + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// The first `k` nonzero terms as `(exponent, coefficient)`, or fewer if
    /// the window holds fewer.
    pub fn leading_terms(&self, k: usize) -> Vec<(i64, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .take(k)
            .map(|(i, c)| (self.lowest + i as i64, c.clone()))
            .collect()
    }

    /// Product with a polynomial, kept on the same window.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let shift = p.min_exp().unwrap_or(0);
        let mut out = vec![BigInt::zero(); self.coeffs.len()];
        for (e, c) in p.terms() {
            let off = (e - shift) as usize;
            for (i, s) in self.coeffs.iter().enumerate() {
                if i + off < out.len() {
                    out[i + off] += c * s;
                }
            }
        }
        Self {
            lowest: self.lowest + shift,
            coeffs: out,
        }
    }

    /// The retained window as a polynomial.
    pub fn truncation(&self) -> LaurentPoly {
        LaurentPoly::from_dense(self.lowest, &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| c.into()).collect()
    }

    /// Long division of `num` by `den` (both ordinary polynomials with
    /// `den[0] = 1`), written independently of the library routine.
    fn long_division_oracle(num: &[i64], den: &[i64], n: usize) -> Vec<i64> {
        let mut rem: Vec<i64> = num.to_vec();
        rem.resize(n + den.len(), 0);
        let mut out = Vec::new();
        for i in 0..n {
            let c = rem[i] / den[0];
            out.push(c);
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        out
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunc::new(LaurentPoly::one(), lp(&[(0, 1), (1, -1)])).unwrap();
        let s = LaurentSeries::from_rational(&f, 6).unwrap();
        assert_eq!(s.lowest(), 0);
        assert_eq!(s.coeffs(), ints(&[1, 1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn two_strand_unlink_series() {
        // (1 - t)/(1 - t^2) in q
        let f = RationalFunc::new(lp(&[(0, 1), (2, -1)]), lp(&[(0, 1), (4, -1)])).unwrap();
        let s = LaurentSeries::from_rational(&f, 8).unwrap();
        let oracle = long_division_oracle(&[1, 0, -1], &[1, 0, 0, 0, -1], 8);
        assert_eq!(oracle, vec![1, 0, -1, 0, 1, 0, -1, 0]);
        assert_eq!(s.coeffs(), ints(&oracle).as_slice());
    }

    #[test]
    fn three_strand_denominator() {
        // 1 - 2t^3 + 2t^9 - t^12, t = q^2
        let den = lp(&[(0, 1), (6, -2), (18, 2), (24, -1)]);
        let f = RationalFunc::new(LaurentPoly::one(), den.clone()).unwrap();
        let s = LaurentSeries::from_rational(&f, 40).unwrap();
        // in t: 1/(1-2t^3+2t^9-t^12) = 1 + 2t^3 + 4t^6 + 6t^9 + ...
        let mut dense_den = vec![0i64; 25];
        dense_den[0] = 1;
        dense_den[6] = -2;
        dense_den[18] = 2;
        dense_den[24] = -1;
        let oracle = long_division_oracle(&[1], &dense_den, 40);
        assert_eq!(s.coeffs(), ints(&oracle).as_slice());
        assert_eq!(s.coeff(6), Some(2.into()));
        assert_eq!(s.coeff(12), Some(4.into()));
        assert_eq!(s.coeff(18), Some(6.into()));
        // multiplying back recovers 1 on the window
        let back = s.mul_poly(&den);
        assert_eq!(back.truncation(), LaurentPoly::one());
    }

    #[test]
    fn rejects_non_unit_constant() {
        let f = RationalFunc::new(LaurentPoly::one(), lp(&[(0, 2), (1, 1)])).unwrap();
        assert!(matches!(
            LaurentSeries::from_rational(&f, 3),
            Err(Error::NonUnitSeriesDenominator(_))
        ));
    }

    #[test]
    fn laurent_numerator_sets_lowest() {
        let f = RationalFunc::new(lp(&[(-3, 1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        let s = LaurentSeries::from_rational(&f, 4).unwrap();
        assert_eq!(s.lowest(), -3);
        assert_eq!(s.coeff(-4), Some(0.into()));
        assert_eq!(s.coeff(0), Some(1.into()));
        assert_eq!(s.coeff(1), None);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn series_times_denominator_is_numerator(
            num in prop::collection::vec((-3i64..4, -3i64..4), 1..5),
            den_tail in prop::collection::vec((1i64..6, -2i64..3), 0..4),
        ) {
            let num = LaurentPoly::from_terms(num);
            prop_assume!(!num.is_zero());
            let den = &LaurentPoly::one() + &LaurentPoly::from_terms(den_tail);
            prop_assume!(den.coeff(0).is_one());
            let f = RationalFunc::new(num, den).unwrap();
            let s = LaurentSeries::from_rational(&f, 12).unwrap();
            let back = s.mul_poly(f.denom());
            let lo = back.lowest();
            for e in lo..back.horizon() {
                prop_assert_eq!(back.coeff(e).unwrap(), f.numer().coeff(e));
            }
        }
    }
}
