//! The super vector space `V^{⊗n}` for the vector representation `V` of
//! `U_q(gl(1|1))`, with the actions of `E`, `F` and the Cartan part.
//!
//! `V` has basis `v_0` (even) and `v_1` (odd). A basis state of `V^{⊗n}` is
//! a bitstring, bit `p` (1-indexed, left to right) set when factor `p` is
//! `v_1`. On the tensor power, `E` and `F` act through the iterated
//! coproducts
//!
//! ```text
//! Δ^{n-1}(E) = Σ_p 1^{⊗(p-1)} ⊗ E ⊗ (K^{-1})^{⊗(n-p)}
//! Δ^{n-1}(F) = Σ_p K^{⊗(p-1)} ⊗ F ⊗ 1^{⊗(n-p)}
//! ```
//!
//! with the Koszul sign `(-1)^{Σ_{i<p} b_i}` for moving the odd operator past
//! the first `p - 1` factors. `K` acts by `q` on both `v_0` and `v_1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactring::{Coeff, LaurentPoly, RationalFunc};

/// Largest supported strand count (bits live in a `u64`).
pub const MAX_STRANDS: usize = 63;

/// Basis tensor `v_{b_1} ⊗ … ⊗ v_{b_n}`.
///
/// Ordered lexicographically by bitstring, factor 1 most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    n: u8,
    bits: u64,
}

impl BasisState {
    /// `bits` holds factor `p` at bit `n - p`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= MAX_STRANDS, "at most {MAX_STRANDS} strands");
        assert!(n == 64 || bits >> n == 0, "bits beyond strand count");
        Self { n: n as u8, bits }
    }

    /// State with `v_1` exactly at the given 1-indexed positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Self {
        let mut s = Self::from_bits(n, 0);
        for &p in positions {
            s = s.with_bit(p, true);
        }
        s
    }

    pub fn all_zero(n: usize) -> Self {
        Self::from_bits(n, 0)
    }

    pub fn all_one(n: usize) -> Self {
        Self::from_bits(n, (1u64 << n) - 1)
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn raw_bits(self) -> u64 {
        self.bits
    }

    fn mask(self, p: usize) -> u64 {
        debug_assert!((1..=self.n()).contains(&p));
        1u64 << (self.n() - p)
    }

    /// Whether factor `p` (1-indexed) is `v_1`.
    pub fn bit(self, p: usize) -> bool {
        self.bits & self.mask(p) != 0
    }

    pub fn with_bit(self, p: usize, value: bool) -> Self {
        let m = self.mask(p);
        let bits = if value { self.bits | m } else { self.bits & !m };
        Self { n: self.n, bits }
    }

    /// Number of `v_1` factors, `k`.
    pub fn ones(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn parity(self) -> u32 {
        self.bits.count_ones() % 2
    }

    /// Number of `v_1` factors strictly before position `p`.
    pub fn ones_before(self, p: usize) -> usize {
        let above = !((self.mask(p) << 1).wrapping_sub(1));
        (self.bits & above).count_ones() as usize
    }

    pub fn weight(self) -> Weight {
        let k = self.ones() as i64;
        Weight {
            c1: self.n as i64 - k,
            c2: k,
        }
    }

    /// 1-indexed positions holding `v_1`.
    pub fn positions(self) -> Vec<usize> {
        (1..=self.n()).filter(|&p| self.bit(p)).collect()
    }

    /// All `2^n` states in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = BasisState> {
        (0..(1u64 << n)).map(move |b| BasisState::from_bits(n, b))
    }

    /// `self ⊗ other`.
    pub fn concat(self, other: BasisState) -> BasisState {
        BasisState::from_bits(self.n() + other.n(), (self.bits << other.n) | other.bits)
    }
}

impl fmt::Debug for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}>")
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.n() {
            f.write_str(if self.bit(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Weight `c1 ε_1 + c2 ε_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight {
    pub c1: i64,
    pub c2: i64,
}

impl Weight {
    /// `<h, λ>` for `h = a1 h_1 + a2 h_2`.
    pub fn pair(self, h: (i64, i64)) -> i64 {
        h.0 * self.c1 + h.1 * self.c2
    }
}

/// Sparse element of `V^{⊗n}`.
#[derive(Clone, PartialEq)]
pub struct SuperVector<S: Coeff = LaurentPoly> {
    n: usize,
    terms: BTreeMap<BasisState, S>,
}

impl<S: Coeff> SuperVector<S> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_STRANDS);
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(state: BasisState) -> Self {
        let mut v = Self::zero(state.n());
        v.terms.insert(state, S::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisState, S)>>(n: usize, terms: I) -> Self {
        let mut v = Self::zero(n);
        for (s, c) in terms {
            v.add_term(s, c);
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisState, &S)> + '_ {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn coeff(&self, state: BasisState) -> S {
        self.terms.get(&state).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, state: BasisState, c: S) {
        assert_eq!(state.n(), self.n, "state from a different tensor power");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(state) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        self.map(|c| c.mul(k))
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(s, c)| (*s, f(c))))
    }

    /// `self ⊗ other` (plain tensor of vectors; no operator crosses a factor,
    /// so no sign appears).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.concat(b), x.mul(y));
            }
        }
        out
    }

    /// The set of weights occurring in `self`.
    pub fn weights(&self) -> Vec<Weight> {
        let mut w: Vec<Weight> = self.terms.keys().map(|s| s.weight()).collect();
        w.dedup();
        w.sort_by_key(|w| w.c2);
        w.dedup();
        w
    }

    /// Linear map defined on basis states.
    pub fn map_states(&self, f: impl Fn(BasisState) -> Vec<(BasisState, S)>) -> Self {
        let mut out = Self::zero(self.n);
        for (s, c) in self.terms() {
            for (t, k) in f(s) {
                out.add_term(t, c.mul(&k));
            }
        }
        out
    }

    pub fn convert<T: Coeff + From<S>>(&self) -> SuperVector<T> {
        SuperVector::from_terms(self.n, self.terms.iter().map(|(s, c)| (*s, T::from(c.clone()))))
    }
}

impl SuperVector<LaurentPoly> {
    pub fn to_rational(&self) -> SuperVector<RationalFunc> {
        self.convert()
    }
}

impl<S: Coeff> fmt::Debug for SuperVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c:?}){s:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `E` on `V^{⊗n}`: every `v_1` at position `p` becomes `v_0`, with
/// coefficient `(-1)^{#ones before p} q^{-(n-p)}`.
pub fn apply_e<S: Coeff>(v: &SuperVector<S>) -> SuperVector<S> {
    let n = v.n();
    v.map_states(|b| {
        (1..=n)
            .filter(|&p| b.bit(p))
            .map(|p| {
                let sign = if b.ones_before(p) % 2 == 0 { 1 } else { -1 };
                (b.with_bit(p, false), S::monomial(sign, -((n - p) as i64)))
            })
            .collect()
    })
}

/// `F` on `V^{⊗n}`: every `v_0` at position `p` becomes `v_1`, with
/// coefficient `(-1)^{#ones before p} q^{p-1}`.
pub fn apply_f<S: Coeff>(v: &SuperVector<S>) -> SuperVector<S> {
    let n = v.n();
    v.map_states(|b| {
        (1..=n)
            .filter(|&p| !b.bit(p))
            .map(|p| {
                let sign = if b.ones_before(p) % 2 == 0 { 1 } else { -1 };
                (b.with_bit(p, true), S::monomial(sign, (p - 1) as i64))
            })
            .collect()
    })
}

/// `q^h` for `h = a1 h_1 + a2 h_2`: scales each state by `q^{<h, weight>}`.
pub fn apply_cartan<S: Coeff>(v: &SuperVector<S>, h: (i64, i64)) -> SuperVector<S> {
    v.map_states(|b| vec![(b, S::monomial(1, b.weight().pair(h)))])
}

/// `K = q^{h_1 + h_2}`.
pub fn apply_k<S: Coeff>(v: &SuperVector<S>) -> SuperVector<S> {
    apply_cartan(v, (1, 1))
}

/// `K^{-1}`.
pub fn apply_k_inv<S: Coeff>(v: &SuperVector<S>) -> SuperVector<S> {
    apply_cartan(v, (-1, -1))
}

/// The weight of `v` if it is a highest weight vector: killed by `E` and
/// supported on a single weight. Zero and mixed-weight inputs give `None`.
pub fn is_highest_weight<S: Coeff>(v: &SuperVector<S>) -> Option<Weight> {
    let weights = v.weights();
    if weights.len() != 1 || !apply_e(v).is_zero() {
        return None;
    }
    Some(weights[0])
}

/// `E(v_1^{⊗m})` as a vector of `V^{⊗m}`.
pub fn e_of_all_ones(m: usize) -> SuperVector<LaurentPoly> {
    apply_e(&SuperVector::basis(BasisState::all_one(m)))
}
