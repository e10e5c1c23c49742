//! Alexander polynomials of braid closures and of families with full twists
//! inserted.
//!
//! With `x_i = q^{n(n-1-2i)}` the eigenvalue of the full twist on the `i`-th
//! weight summand, `Φ(τ^m) = Σ_i x_i^m π_i`. Inverting the Vandermonde
//! system `B_{ij} = x_j^i` expresses each `π_i` through `Φ(τ^0), …,
//! Φ(τ^{n-1})`, so
//!
//! ```text
//! Δ(L_m) = Σ_j f_{m,j}(q) Δ(L_j),   f_{m,j} = Σ_i x_i^m C_{ij},   C = B^{-1}.
//! ```

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::braidrep::{apply_braid, full_twist_word, torus_word, BraidWord};
use crate::error::{Error, Result};
use crate::exactring::{poly_lcm, LaurentPoly, LaurentSeries, RationalFunc};
use crate::glrep::{BasisState, SuperVector};
use crate::matrix::Matrix;

/// An Alexander polynomial in `q` (`t = q^2`) with the word it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderValue {
    pub poly: LaurentPoly,
    pub word: BraidWord,
}

impl AlexanderValue {
    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn is_knot(&self) -> bool {
        self.word.component_count() == 1
    }

    /// Equal up to an overall sign.
    pub fn agrees_up_to_sign(&self, other: &LaurentPoly) -> bool {
        self.poly == *other || self.poly == -other
    }
}

/// Partial trace with strand `open` fixed to `v_{open}`:
/// `Σ_{b_1 = open} (Π_{p≥2} μ_{b_p}) <b|Φ(w)|b>` with `μ_0 = q`, `μ_1 = -q`.
pub fn closure_with_open(w: &BraidWord, open: bool) -> Result<LaurentPoly> {
    let n = w.n();
    let states: Vec<BasisState> = BasisState::all(n).filter(|b| b.bit(1) == open).collect();
    let terms: Result<Vec<LaurentPoly>> = states
        .par_iter()
        .map(|&b| {
            let img = apply_braid(&SuperVector::<LaurentPoly>::basis(b), w)?;
            let diag = img.coeff(b);
            if diag.is_zero() {
                return Ok(diag);
            }
            let closed_ones = b.ones() - usize::from(open);
            let sign = if closed_ones % 2 == 0 { 1 } else { -1 };
            Ok(&diag * &LaurentPoly::monomial(sign, n as i64 - 1))
        })
        .collect();
    Ok(terms?.into_iter().sum())
}

/// Alexander polynomial of the closure of `w`.
pub fn closure_scalar(w: &BraidWord) -> Result<AlexanderValue> {
    Ok(AlexanderValue {
        poly: closure_with_open(w, false)?,
        word: w.clone(),
    })
}

/// `base · τ^m`.
pub fn twisted_word(base: &BraidWord, m: usize) -> Result<BraidWord> {
    base.concat(&full_twist_word(base.n(), m)?)
}

/// `B` and `C = B^{-1}` for `n` strands.
#[derive(Debug, Clone)]
pub struct TwistCoeffMatrix {
    pub n: usize,
    pub b: Matrix<LaurentPoly>,
    pub c: Matrix<RationalFunc>,
}

impl TwistCoeffMatrix {
    /// `x_i = q^{n(n-1-2i)}` as a `q`-exponent.
    pub fn node_exponent(&self, i: usize) -> i64 {
        node_exponent(self.n, i)
    }
}

pub fn node_exponent(n: usize, i: usize) -> i64 {
    let n = n as i64;
    n * (n - 1 - 2 * i as i64)
}

/// Coefficients of `Π_{j∈roots}(X - q^{e_j})` in increasing degree.
fn monic_from_roots(roots: impl Iterator<Item = i64>) -> Vec<LaurentPoly> {
    let mut p = vec![LaurentPoly::one()];
    for e in roots {
        let mut next = vec![LaurentPoly::zero(); p.len() + 1];
        for (d, c) in p.iter().enumerate() {
            next[d + 1] = &next[d + 1] + c;
            next[d] = &next[d] - &(c * &LaurentPoly::monomial(1, e));
        }
        p = next;
    }
    p
}

fn build_twist_matrix(n: usize) -> TwistCoeffMatrix {
    let b = Matrix::from_fn(n, n, |i, j| LaurentPoly::monomial(1, i as i64 * node_exponent(n, j)));
    // Lagrange basis: row k of C holds the coefficients of
    // Π_{j≠k} (X - x_j) / (x_k - x_j).
    let mut c = Matrix::zeros(n, n);
    for k in 0..n {
        let xk = node_exponent(n, k);
        let others = (0..n).filter(|&j| j != k).map(|j| node_exponent(n, j));
        let num = monic_from_roots(others.clone());
        let den: LaurentPoly = others.fold(LaurentPoly::one(), |acc, e| &acc * &(&LaurentPoly::monomial(1, xk) - &LaurentPoly::monomial(1, e)));
        for (i, a) in num.into_iter().enumerate() {
            c.set(k, i, RationalFunc::new(a, den.clone()).expect("distinct nodes"));
        }
    }
    TwistCoeffMatrix { n, b, c }
}

/// Exact `B(n)` and its inverse, cached per `n`.
pub fn vandermonde_and_inverse(n: usize) -> Result<Arc<TwistCoeffMatrix>> {
    if n < 2 {
        return Err(Error::InvalidArgument("twist coefficients need at least 2 strands".into()));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TwistCoeffMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(build_twist_matrix(n));
    Ok(cache.lock().expect("cache lock").entry(n).or_insert(built).clone())
}

/// `f_{m,j} = Σ_i x_i^m C_{ij}`, brought over a common denominator and
/// divided out exactly. A remainder is reported, never dropped.
pub fn twist_coeff_f(m: usize, j: usize, n: usize) -> Result<LaurentPoly> {
    let tc = vandermonde_and_inverse(n)?;
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j as i64, n });
    }
    let den = (0..n).fold(LaurentPoly::one(), |acc, i| poly_lcm(&acc, tc.c.get(i, j).denom()));
    let mut num = LaurentPoly::zero();
    for i in 0..n {
        let cij = tc.c.get(i, j);
        if cij.is_zero() {
            continue;
        }
        let cofactor = den.exact_div(cij.denom())?;
        let xm = LaurentPoly::monomial(1, m as i64 * tc.node_exponent(i));
        num += &(&(&xm * cij.numer()) * &cofactor);
    }
    num.exact_div(&den)
}

/// `[f_{m,0}, …, f_{m,n-1}]`.
pub fn twist_coeffs(m: usize, n: usize) -> Result<Vec<LaurentPoly>> {
    if n == 0 {
        return Err(Error::InvalidArgument("twist coefficients need at least 1 strand".into()));
    }
    (0..n).map(|j| twist_coeff_f(m, j, n)).collect()
}

/// `Δ(L_0), …, Δ(L_{n-1})` for `L_j` the closure of `base · τ^j`.
pub fn base_family(base: &BraidWord) -> Result<Vec<LaurentPoly>> {
    (0..base.n())
        .into_par_iter()
        .map(|j| Ok(closure_scalar(&twisted_word(base, j)?)?.poly))
        .collect()
}

/// `Δ(L_m)` through the twist expansion.
pub fn alexander_twist_formula(base: &BraidWord, m: usize) -> Result<AlexanderValue> {
    let deltas = base_family(base)?;
    alexander_from_family(base, &deltas, m)
}

/// As [`alexander_twist_formula`] with `Δ(L_0), …, Δ(L_{n-1})` supplied.
pub fn alexander_from_family(base: &BraidWord, deltas: &[LaurentPoly], m: usize) -> Result<AlexanderValue> {
    let n = base.n();
    if deltas.len() != n {
        return Err(Error::StrandMismatch {
            expected: n,
            found: deltas.len(),
        });
    }
    let f = twist_coeffs(m, n)?;
    let poly = f.iter().zip(deltas).map(|(a, b)| a * b).sum();
    Ok(AlexanderValue {
        poly,
        word: twisted_word(base, m)?,
    })
}

/// One row of a formula-versus-direct comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub m: usize,
    pub formula: LaurentPoly,
    pub direct: LaurentPoly,
}

impl FormulaCheck {
    pub fn matches(&self) -> bool {
        self.formula == self.direct
    }
}

/// Twist formula and direct closure for each `m`, in parallel.
pub fn formula_table(base: &BraidWord, ms: &[usize]) -> Result<Vec<FormulaCheck>> {
    let deltas = base_family(base)?;
    ms.par_iter()
        .map(|&m| {
            let formula = alexander_from_family(base, &deltas, m)?.poly;
            let direct = closure_scalar(&twisted_word(base, m)?)?.poly;
            Ok(FormulaCheck { m, formula, direct })
        })
        .collect()
}

/// Direct `Δ(L_m)` for each `m`, in parallel.
pub fn family(base: &BraidWord, ms: &[usize]) -> Result<Vec<(usize, AlexanderValue)>> {
    ms.par_iter()
        .map(|&m| Ok((m, closure_scalar(&twisted_word(base, m)?)?)))
        .collect()
}

/// `Δ(L_m)` leading terms follow `q^{per_m · m} · h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftRule {
    pub per_m: i64,
}

impl ShiftRule {
    pub fn q_exponent(self, m: usize) -> i64 {
        self.per_m * m as i64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilizationResult {
    pub n: usize,
    /// Every `h_r = Σ_j C_{rj} Δ(L_j)`, `r = 0..n`.
    pub components: Vec<RationalFunc>,
    /// Largest `r ≥ (n-1)/2` with `h_r ≠ 0`; `None` when they all vanish.
    pub r: Option<usize>,
    pub series: Option<LaurentSeries>,
    pub shift: Option<ShiftRule>,
}

impl StabilizationResult {
    pub fn h(&self) -> Option<&RationalFunc> {
        self.r.map(|r| &self.components[r])
    }
}

/// `h_r` for all `r`.
pub fn h_components(tc: &TwistCoeffMatrix, deltas: &[LaurentPoly]) -> Vec<RationalFunc> {
    (0..tc.n)
        .map(|r| {
            deltas
                .iter()
                .enumerate()
                .fold(RationalFunc::zero(), |acc, (j, d)| &acc + &(tc.c.get(r, j) * &RationalFunc::from(d.clone())))
        })
        .collect()
}

/// The stabilization series of the family `base · τ^m`, expanded over
/// `precision` consecutive `q`-exponents.
pub fn stabilization_series(base: &BraidWord, precision: usize) -> Result<StabilizationResult> {
    if precision == 0 {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let n = base.n();
    let tc = vandermonde_and_inverse(n)?;
    let deltas = base_family(base)?;
    let components = h_components(&tc, &deltas);
    let lowest_r = n / 2; // ⌈(n-1)/2⌉
    let r = (lowest_r..n).rev().find(|&r| !components[r].is_zero());
    let (series, shift) = match r {
        Some(r) => (
            Some(LaurentSeries::from_rational(&components[r], precision)?),
            Some(ShiftRule {
                per_m: node_exponent(n, r),
            }),
        ),
        None => (None, None),
    };
    Ok(StabilizationResult {
        n,
        components,
        r,
        series,
        shift,
    })
}

/// `g_j = C_{n-1,j}`: `f_{m,j}` agrees with `q^{-mn(n-1)} g_j` in its
/// lowest terms for large `m`.
pub fn g_coefficient(j: usize, n: usize) -> Result<RationalFunc> {
    let tc = vandermonde_and_inverse(n)?;
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j as i64, n });
    }
    Ok(tc.c.get(n - 1, j).clone())
}

pub fn g_series(j: usize, n: usize, precision: usize) -> Result<LaurentSeries> {
    LaurentSeries::from_rational(&g_coefficient(j, n)?, precision)
}

/// Whether the first `k` nonzero terms of `poly` equal those of
/// `q^shift · series`.
pub fn leading_terms_agree(poly: &LaurentPoly, series: &LaurentSeries, shift: i64, k: usize) -> bool {
    let want = series.shift(shift).leading_terms(k);
    if want.len() < k {
        return false;
    }
    let got: Vec<_> = poly.terms().take(k).map(|(e, c)| (e, c.clone())).collect();
    got == want
}

fn one_minus_q(e: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (e, -1)])
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Closed-form Alexander polynomial of the torus knot or link `T(n, l)`,
/// for `l` coprime to `n` or divisible by `n`.
pub fn torus_oracle(n: usize, l: usize) -> Result<AlexanderValue> {
    if n < 2 || l == 0 {
        return Err(Error::InvalidArgument("torus oracle needs n ≥ 2 and l ≥ 1".into()));
    }
    let (ni, li) = (n as i64, l as i64);
    let poly = if gcd(n, l) == 1 {
        let num = &(&one_minus_q(2 * li * ni) * &one_minus_q(2)) * &LaurentPoly::monomial(1, -(li - 1) * (ni - 1));
        let den = &one_minus_q(2 * li) * &one_minus_q(2 * ni);
        num.exact_div(&den)?
    } else if l.is_multiple_of(n) {
        let mut num = &one_minus_q(2) * &LaurentPoly::monomial(1, -(li - 1) * (ni - 1));
        for _ in 1..n {
            num = &num * &one_minus_q(2 * li);
        }
        num.exact_div(&one_minus_q(2 * ni))?
    } else {
        return Err(Error::InvalidArgument(format!(
            "torus oracle covers l coprime to n or divisible by n; got n={n}, l={l}"
        )));
    };
    Ok(AlexanderValue {
        poly,
        word: torus_word(n, l)?,
    })
}
