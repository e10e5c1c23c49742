//! Braid words and their action on `V^{⊗n}` through the R-matrix.
//!
//! Words act left to right: the first letter is applied first. Letter `g`
//! is `σ_g`, letter `-g` is `σ_g^{-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::Coeff;
use crate::glrep::{BasisState, SuperVector, MAX_STRANDS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::InvalidArgument(format!(
                "strand count must be in 1..={MAX_STRANDS}, got {n}"
            )));
        }
        for &g in &letters {
            check_letter(g, n)?;
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Parses whitespace- or comma-separated signed generator indices. Error
    /// positions count tokens from 1.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        let tokens = text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty());
        for (i, tok) in tokens.enumerate() {
            let err = |reason: String| Error::BraidParse {
                position: i + 1,
                token: tok.to_string(),
                reason,
            };
            let g: i32 = tok.parse().map_err(|_| err("not an integer".into()))?;
            if g == 0 {
                return Err(err("generator index 0 is not allowed".into()));
            }
            if g.unsigned_abs() as usize >= n {
                return Err(err(format!("index out of range for {n} strands (need 1..={})", n.saturating_sub(1))));
            }
            letters.push(g);
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// Reversed word with flipped signs.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    pub fn pow(&self, e: usize) -> Self {
        Self {
            n: self.n,
            letters: self.letters.repeat(e),
        }
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<Self> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// The word in `B_{n+1}` with `σ_n^{sign}` appended.
    pub fn stabilize(&self, sign: i32) -> Result<Self> {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        let mut letters = self.letters.clone();
        letters.push(sign * self.n as i32);
        Self::new(self.n + 1, letters)
    }

    /// Image of each strand start (0-based) under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        // pos[s] = current position of strand s
        let mut pos: Vec<usize> = (0..self.n).collect();
        for &g in &self.letters {
            let t = g.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == t {
                    *p = t + 1;
                } else if *p == t + 1 {
                    *p = t;
                }
            }
        }
        pos
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_letter(g: i32, n: usize) -> Result<()> {
    if g == 0 || g.unsigned_abs() as usize >= n {
        return Err(Error::IndexOutOfRange { index: g as i64, n });
    }
    Ok(())
}

/// `(σ_{n-1} … σ_1)^l`, whose closure is the torus link `T(n, l)`.
pub fn torus_word(n: usize, l: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidArgument("torus word needs at least 2 strands".into()));
    }
    let cycle: Vec<i32> = (1..n as i32).rev().collect();
    BraidWord::new(n, cycle.repeat(l))
}

/// `m` full twists on `n` strands: `(σ_{n-1} … σ_1)^{nm}`.
pub fn full_twist_word(n: usize, m: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::InvalidArgument("full twist needs at least 2 strands".into()));
    }
    torus_word(n, n * m)
}

/// Image of one basis state under `R̂^{sign}` on factors `t, t+1`.
pub fn crossing_on_state<S: Coeff>(b: BasisState, t: usize, sign: i32) -> Vec<(BasisState, S)> {
    let x = b.bit(t);
    let y = b.bit(t + 1);
    let swapped = b.with_bit(t, y).with_bit(t + 1, x);
    let s = sign as i64;
    match (x, y) {
        (false, false) => vec![(b, S::monomial(1, s))],
        (true, true) => vec![(b, S::monomial(-1, -s))],
        // R̂: v1v0 -> v0v1,  R̂^{-1}: v0v1 -> v1v0
        (true, false) if sign > 0 => vec![(swapped, S::one())],
        (false, true) if sign < 0 => vec![(swapped, S::one())],
        // R̂: v0v1 -> v1v0 + (q - q^{-1}) v0v1
        // R̂^{-1}: v1v0 -> v0v1 - (q - q^{-1}) v1v0
        _ => {
            let diag = S::monomial(s, 1).add(&S::monomial(-s, -1));
            vec![(swapped, S::one()), (b, diag)]
        }
    }
}

/// `R̂^{sign}` on tensor factors `t` and `t + 1` (1-indexed).
pub fn apply_crossing<S: Coeff>(v: &SuperVector<S>, t: usize, sign: i32) -> Result<SuperVector<S>> {
    if t == 0 || t >= v.n() {
        return Err(Error::IndexOutOfRange {
            index: t as i64,
            n: v.n(),
        });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("crossing sign must be ±1, got {sign}")));
    }
    Ok(v.map_states(|b| crossing_on_state(b, t, sign)))
}

/// `Φ(w)(v)`, letters applied first to last.
pub fn apply_braid<S: Coeff>(v: &SuperVector<S>, w: &BraidWord) -> Result<SuperVector<S>> {
    if v.n() != w.n() {
        return Err(Error::StrandMismatch {
            expected: w.n(),
            found: v.n(),
        });
    }
    let mut out = v.clone();
    for &g in w.letters() {
        out = out.map_states(|b| crossing_on_state(b, g.unsigned_abs() as usize, g.signum()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::LaurentPoly;
    use crate::glrep::{apply_cartan, apply_e, apply_f};
    use proptest::prelude::*;

    type V = SuperVector<LaurentPoly>;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(word("1 1 1", 2).letters(), &[1, 1, 1]);
        assert_eq!(word("2, 1 2,1", 3).letters(), &[2, 1, 2, 1]);
        assert_eq!(word("  ", 3).len(), 0);
        assert_eq!(word("-1 2 -2", 3).exponent_sum(), -1);
        match BraidWord::parse("1 3", 2) {
            Err(Error::BraidParse { position, token, .. }) => {
                assert_eq!(position, 2);
                assert_eq!(token, "3");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(BraidWord::parse("1 0", 3), Err(Error::BraidParse { position: 2, .. })));
        assert!(matches!(BraidWord::parse("x", 3), Err(Error::BraidParse { position: 1, .. })));
        assert!(matches!(BraidWord::parse("-3", 3), Err(Error::BraidParse { .. })));
    }

    #[test]
    fn display_round_trip() {
        let w = word("2 -1 3 1", 4);
        assert_eq!(word(&w.to_string(), 4), w);
    }

    #[test]
    fn twist_words() {
        assert_eq!(full_twist_word(2, 1).unwrap().to_string(), "1 1");
        let t3 = full_twist_word(3, 1).unwrap();
        assert_eq!(t3.to_string(), "2 1 2 1 2 1");
        assert_eq!(t3.exponent_sum(), 6);
        assert_eq!(full_twist_word(4, 2).unwrap().len(), 24);
        assert!(full_twist_word(1, 1).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(word("1 1 1", 2).component_count(), 1);
        assert_eq!(word("1 1", 2).component_count(), 2);
        assert_eq!(BraidWord::identity(3).unwrap().component_count(), 3);
        assert_eq!(torus_word(3, 4).unwrap().component_count(), 1);
        assert_eq!(torus_word(3, 3).unwrap().component_count(), 3);
        assert_eq!(word("1", 2).stabilize(-1).unwrap().component_count(), 1);
    }

    fn st(s: &str) -> BasisState {
        BasisState::from_bits(s.len(), u64::from_str_radix(s, 2).unwrap())
    }

    #[test]
    fn r_matrix_entries() {
        let r = |s: &str, sign| apply_crossing(&V::basis(st(s)), 1, sign).unwrap();
        let q = |e| LaurentPoly::monomial(1, e);
        let qq = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        assert_eq!(r("00", 1), V::from_terms(2, [(st("00"), q(1))]));
        assert_eq!(r("10", 1), V::basis(st("01")));
        assert_eq!(r("01", 1), V::from_terms(2, [(st("10"), q(0)), (st("01"), qq.clone())]));
        assert_eq!(r("11", 1), V::from_terms(2, [(st("11"), -q(-1))]));
        assert_eq!(r("10", -1), V::from_terms(2, [(st("01"), q(0)), (st("10"), -qq)]));
        for s in ["00", "01", "10", "11"] {
            let x = V::basis(st(s));
            let y = apply_crossing(&apply_crossing(&x, 1, 1).unwrap(), 1, -1).unwrap();
            assert_eq!(y, x);
        }
    }

    #[test]
    fn crossing_range_checked() {
        let x = V::basis(st("000"));
        assert!(apply_crossing(&x, 0, 1).is_err());
        assert!(apply_crossing(&x, 3, 1).is_err());
        assert!(apply_braid(&x, &word("1", 2)).is_err());
    }

    #[test]
    fn braid_relations_on_basis() {
        for n in 2..=5 {
            for b in BasisState::all(n) {
                let x = V::basis(b);
                for t in 1..n - 1 {
                    let a = word(&format!("{} {} {}", t, t + 1, t), n);
                    let c = word(&format!("{} {} {}", t + 1, t, t + 1), n);
                    assert_eq!(apply_braid(&x, &a).unwrap(), apply_braid(&x, &c).unwrap());
                }
                for s in 1..n {
                    for t in s + 2..n {
                        let a = word(&format!("{s} {t}"), n);
                        let c = word(&format!("{t} {s}"), n);
                        assert_eq!(apply_braid(&x, &a).unwrap(), apply_braid(&x, &c).unwrap());
                    }
                }
            }
        }
    }

    pub(crate) fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        let g = (1..n as i32).prop_flat_map(|t| prop_oneof![Just(t), Just(-t)]);
        prop::collection::vec(g, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    }

    fn arb_case() -> impl Strategy<Value = (V, BraidWord)> {
        (2usize..=5).prop_flat_map(|n| {
            let v = prop::collection::vec((0u64..(1 << n), -2i64..3, -2i64..3), 1..5).prop_map(move |t| {
                V::from_terms(n, t.into_iter().map(|(b, e, c)| (BasisState::from_bits(n, b), LaurentPoly::monomial(c, e))))
            });
            (v, arb_word(n, 6))
        })
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_identity((v, w) in arb_case()) {
            let y = apply_braid(&apply_braid(&v, &w).unwrap(), &w.inverse()).unwrap();
            prop_assert_eq!(y, v);
        }

        #[test]
        fn preserves_weight((v, w) in arb_case()) {
            let y = apply_braid(&v, &w).unwrap();
            for k in 0..=v.n() {
                let part = |x: &V| V::from_terms(x.n(), x.terms().filter(|(s, _)| s.ones() == k).map(|(s, c)| (s, c.clone())));
                prop_assert_eq!(apply_braid(&part(&v), &w).unwrap(), part(&y));
            }
        }

        #[test]
        fn equivariant((v, w) in arb_case()) {
            let phi = |x: &V| apply_braid(x, &w).unwrap();
            prop_assert_eq!(phi(&apply_e(&v)), apply_e(&phi(&v)));
            prop_assert_eq!(phi(&apply_f(&v)), apply_f(&phi(&v)));
            prop_assert_eq!(phi(&apply_cartan(&v, (1, 0))), apply_cartan(&phi(&v), (1, 0)));
        }

        #[test]
        fn permutation_is_bijection(w in (2usize..6).prop_flat_map(|n| arb_word(n, 8))) {
            let mut p = w.permutation();
            p.sort();
            prop_assert_eq!(p, (0..w.n()).collect::<Vec<_>>());
        }
    }
}
