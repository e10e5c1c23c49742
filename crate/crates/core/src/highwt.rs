//! Highest weight vectors of `V^{⊗n}` and the braid action on them.
//!
//! `H_k` is the space of `E`-killed vectors of weight `(n-k)ε_1 + kε_2`. It
//! has a basis `φ(s)` indexed by strings `s = (a_1, b_1, a_2, …, b_l,
//! a_{l+1})`, equivalently by `k`-subsets of `{1, …, n-1}`, and is
//! identified with `Λ^k H_1`. Under that identification a generator acts on
//! `H_k` as `q^{-(k-1)}` times its diagonal action on the wedge power, so
//! every `H_k` matrix is a scaled compound of the `H_1` matrix.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::braidrep::{apply_braid, BraidWord};
use crate::error::{Error, Result};
use crate::exactring::{Coeff, LaurentPoly, RationalFunc};
use crate::glrep::{apply_f, e_of_all_ones, BasisState, SuperVector};
use crate::matrix::{k_subsets, Matrix};

/// Composition `(a_1, b_1, a_2, …, b_l, a_{l+1})` of `n` with every
/// `b_j ≥ 2`; it labels a basis vector of `H_k`, `k = Σ (b_j - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistString {
    entries: Vec<usize>,
}

impl TwistString {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "a string has odd length (a_1, b_1, …, a_{{l+1}}), got {} entries",
                entries.len()
            )));
        }
        if entries.iter().skip(1).step_by(2).any(|&b| b < 2) {
            return Err(Error::InvalidArgument("every block length b_j must be at least 2".into()));
        }
        if entries.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidArgument("a string must have positive total length".into()));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Strand count, `Σ a_i + Σ b_j`.
    pub fn n(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `Σ (b_j - 1)`.
    pub fn k(&self) -> usize {
        self.block_lengths().map(|b| b - 1).sum()
    }

    pub fn block_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().skip(1).step_by(2).copied()
    }

    pub fn gaps(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().step_by(2).copied()
    }

    /// `(c_j, b_j)` per block, `c_j` being the number of factors before it.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        for pair in self.entries.chunks(2) {
            offset += pair[0];
            if let Some(&b) = pair.get(1) {
                out.push((offset, b));
                offset += b;
            }
        }
        out
    }

    pub fn to_wedge(&self) -> WedgeIndex {
        let mut indices = Vec::with_capacity(self.k());
        for (c, b) in self.blocks() {
            indices.extend(c + 1..c + b);
        }
        WedgeIndex { n: self.n(), indices }
    }

    pub fn from_wedge(w: &WedgeIndex) -> Self {
        let mut entries = Vec::new();
        let mut end = 0; // c_j + b_j of the previous block
        let idx = &w.indices;
        let mut i = 0;
        while i < idx.len() {
            let start = idx[i];
            let mut len = 1;
            while i + len < idx.len() && idx[i + len] == start + len {
                len += 1;
            }
            let c = start - 1;
            entries.push(c - end);
            entries.push(len + 1);
            end = c + len + 1;
            i += len;
        }
        entries.push(w.n - end);
        Self { entries }
    }
}

impl fmt::Display for TwistString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Increasing subset `{i_1 < … < i_k}` of `{1, …, n-1}`, standing for
/// `e_{i_1} ∧ … ∧ e_{i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeIndex {
    n: usize,
    indices: Vec<usize>,
}

impl WedgeIndex {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidArgument("wedge indices must be strictly increasing".into()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange { index: i as i64, n });
        }
        Ok(Self { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one strand".into()));
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k as i64, n });
    }
    Ok(())
}

/// Wedge indices of `S_k` in lexicographic order.
pub fn enumerate_wedges(n: usize, k: usize) -> Result<Vec<WedgeIndex>> {
    check_k(n, k)?;
    Ok(k_subsets(n - 1, k)
        .into_iter()
        .map(|s| WedgeIndex {
            n,
            indices: s.into_iter().map(|i| i + 1).collect(),
        })
        .collect())
}

/// All of `S_k`, ordered lexicographically by wedge index.
pub fn enumerate_strings(n: usize, k: usize) -> Result<Vec<TwistString>> {
    Ok(enumerate_wedges(n, k)?.iter().map(TwistString::from_wedge).collect())
}

/// `v_0^{⊗a_1} ⊗ E(v_1^{⊗b_1}) ⊗ v_0^{⊗a_2} ⊗ …`.
pub fn phi_of_string(s: &TwistString) -> SuperVector<LaurentPoly> {
    let zeros = |a: usize| SuperVector::basis(BasisState::all_zero(a));
    let mut out = zeros(0);
    for (i, &x) in s.entries().iter().enumerate() {
        let piece = if i % 2 == 0 { zeros(x) } else { e_of_all_ones(x) };
        out = out.tensor(&piece);
    }
    out
}

/// The componentwise super product: `v_0` is the unit, `v_1 · v_1 = 0`,
/// with sign `(-1)^{Σ_{i<j} β_i α_j}` for `α · β`.
pub fn graded_product<S: Coeff>(x: &SuperVector<S>, y: &SuperVector<S>) -> SuperVector<S> {
    assert_eq!(x.n(), y.n());
    let n = x.n();
    let mut out = SuperVector::zero(n);
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            if a.raw_bits() & b.raw_bits() != 0 {
                continue;
            }
            let mut sign = 0;
            for i in 1..=n {
                if b.bit(i) {
                    sign += (i + 1..=n).filter(|&j| a.bit(j)).count();
                }
            }
            let prod = c.mul(d);
            let prod = if sign % 2 == 0 { prod } else { prod.neg() };
            out.add_term(BasisState::from_bits(n, a.raw_bits() | b.raw_bits()), prod);
        }
    }
    out
}

/// `e_i = -w_i + q^{-1} w_{i+1}` as a vector of `V^{⊗n}`.
pub fn h1_vector(n: usize, i: usize) -> SuperVector<LaurentPoly> {
    SuperVector::from_terms(
        n,
        [
            (BasisState::from_positions(n, &[i]), LaurentPoly::monomial(-1, 0)),
            (BasisState::from_positions(n, &[i + 1]), LaurentPoly::monomial(1, -1)),
        ],
    )
}

/// Image of `e_{i_1} ∧ … ∧ e_{i_k}` in `V^{⊗n}`, by expanding each `e_i`
/// into `w`'s and multiplying.
pub fn psi_wedge(w: &WedgeIndex) -> SuperVector<LaurentPoly> {
    let mut out = SuperVector::basis(BasisState::all_zero(w.n()));
    for &i in w.indices() {
        out = graded_product(&out, &h1_vector(w.n(), i));
    }
    out
}

/// Linear extension of [`psi_wedge`] to a combination of wedge monomials.
pub fn psi_combination<S: Coeff>(n: usize, v: &BTreeMap<Vec<usize>, S>) -> SuperVector<S> {
    let mut out = SuperVector::zero(n);
    for (idx, c) in v {
        let w = WedgeIndex::new(n, idx.clone()).expect("valid wedge");
        for (s, x) in psi_wedge(&w).terms() {
            out.add_term(s, S::from(x.clone()).mul(c));
        }
    }
    out
}

/// `(M e_{i_1}) ∧ … ∧ (M e_{i_k})` expanded and re-sorted into the
/// standard wedge basis; `M` acts on `H_1` with column `j` the image of
/// `e_{j+1}`.
pub fn wedge_image<S: Coeff>(m: &Matrix<S>, w: &WedgeIndex) -> BTreeMap<Vec<usize>, S> {
    let mut acc: BTreeMap<Vec<usize>, S> = BTreeMap::from([(Vec::new(), S::one())]);
    for &i in w.indices() {
        let mut next: BTreeMap<Vec<usize>, S> = BTreeMap::new();
        for (seq, c) in &acc {
            for r in 0..m.rows() {
                let a = m.get(r, i - 1);
                let idx = r + 1;
                if a.is_zero() || seq.contains(&idx) {
                    continue;
                }
                let above = seq.iter().filter(|&&x| x > idx).count();
                let mut s = seq.clone();
                let pos = s.partition_point(|&x| x < idx);
                s.insert(pos, idx);
                let mut term = c.mul(a);
                if above % 2 == 1 {
                    term = term.neg();
                }
                let e = next.entry(s).or_insert_with(S::zero);
                *e = e.add(&term);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// Matrix of `σ_t^{sign}` on `H_1` in the basis `e_1, …, e_{n-1}`.
pub fn h1_generator_matrix(n: usize, t: usize, sign: i32) -> Result<Matrix<LaurentPoly>> {
    if t == 0 || t >= n {
        return Err(Error::IndexOutOfRange { index: t as i64, n });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("crossing sign must be ±1, got {sign}")));
    }
    let s = sign as i64;
    let d = n - 1;
    let mut m = Matrix::zeros(d, d);
    // columns are 0-based: column j-1 holds the image of e_j
    for j in 1..=d {
        let c = j - 1;
        if j == t {
            m.set(c, c, LaurentPoly::monomial(-1, -s));
        } else {
            m.set(c, c, LaurentPoly::monomial(1, s));
            if j + 1 == t || j == t + 1 {
                m.set(t - 1, c, LaurentPoly::one());
            }
        }
    }
    Ok(m)
}

/// Matrix of `Φ(w)` on `H_1`.
pub fn h1_word_matrix(w: &BraidWord) -> Result<Matrix<LaurentPoly>> {
    let d = w.n().saturating_sub(1);
    let mut acc = Matrix::identity(d);
    for &g in w.letters() {
        acc = h1_generator_matrix(w.n(), g.unsigned_abs() as usize, g.signum())?.mul(&acc);
    }
    Ok(acc)
}

/// Matrix of `Φ(w)` on `H_k` in the `φ(S_k)` basis:
/// `q^{-(k-1)·e(w)}` times the `k`-th compound of the `H_1` matrix, `e(w)`
/// the exponent sum.
pub fn hk_braid_matrix(w: &BraidWord, k: usize) -> Result<Matrix<LaurentPoly>> {
    check_k(w.n(), k)?;
    let compound = h1_word_matrix(w)?.compound(k);
    let shift = -(k as i64 - 1) * w.exponent_sum();
    Ok(compound.scale(&LaurentPoly::monomial(1, shift)))
}

/// Coordinates of `v ∈ H_k` in the `φ(S_k)` basis.
///
/// `φ(s_I)` carries `(-1)^k` at the state with ones at `I` and otherwise
/// only states of larger position sum, so coordinates peel off from the
/// smallest state without division. Fails if `v ∉ H_k`.
pub fn coordinates_in_hk<S: Coeff>(v: &SuperVector<S>, k: usize) -> Result<Vec<S>> {
    let n = v.n();
    check_k(n, k)?;
    let wedges = enumerate_wedges(n, k)?;
    let lookup: HashMap<Vec<usize>, usize> = wedges.iter().enumerate().map(|(i, w)| (w.indices().to_vec(), i)).collect();
    let sign = if k.is_multiple_of(2) { S::one() } else { S::one().neg() };
    let mut coords = vec![S::zero(); wedges.len()];
    let mut rest = v.clone();
    while let Some(state) = rest.terms().map(|(s, _)| s).min_by_key(|s| (s.positions().iter().sum::<usize>(), *s)) {
        let pos = state.positions();
        let Some(&i) = lookup.get(&pos) else {
            return Err(Error::InvalidArgument(format!("vector has a component outside H_{k} (state {state})")));
        };
        let c = rest.coeff(state).mul(&sign);
        let basis = phi_of_string(&TwistString::from_wedge(&wedges[i]));
        for (s, x) in basis.terms() {
            rest.add_term(s, S::from(x.clone()).mul(&c).neg());
        }
        coords[i] = coords[i].add(&c);
    }
    Ok(coords)
}

/// `H_k` matrix of `Φ(w)` computed by acting on `V^{⊗n}` and reading
/// coordinates back.
pub fn hk_action_direct(w: &BraidWord, k: usize) -> Result<Matrix<LaurentPoly>> {
    let strings = enumerate_strings(w.n(), k)?;
    let d = strings.len();
    let mut m = Matrix::zeros(d, d);
    for (j, s) in strings.iter().enumerate() {
        let img = apply_braid(&phi_of_string(s), w)?;
        for (i, c) in coordinates_in_hk(&img, k)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Change of basis for the states with `j` ones: columns are `φ(S_j)`
/// followed by `Fφ(S_{j-1})`.
struct WeightBlock {
    index: HashMap<BasisState, usize>,
    highest: usize,
    inverse: Matrix<RationalFunc>,
    columns: Vec<SuperVector<RationalFunc>>,
}

impl WeightBlock {
    fn build(n: usize, j: usize) -> Result<Self> {
        let states: Vec<BasisState> = BasisState::all(n).filter(|s| s.ones() == j).collect();
        let index: HashMap<BasisState, usize> = states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut columns: Vec<SuperVector<LaurentPoly>> = Vec::new();
        if j < n {
            columns.extend(enumerate_strings(n, j)?.iter().map(phi_of_string));
        }
        let highest = columns.len();
        if j > 0 {
            columns.extend(enumerate_strings(n, j - 1)?.iter().map(|s| apply_f(&phi_of_string(s))));
        }
        if columns.len() != states.len() {
            return Err(Error::Identity(format!("weight block {j} of n={n} has the wrong dimension")));
        }
        let mut a = Matrix::zeros(states.len(), states.len());
        for (c, v) in columns.iter().enumerate() {
            for (s, x) in v.terms() {
                a.set(index[&s], c, RationalFunc::from(x.clone()));
            }
        }
        let inverse = a.inverse().map_err(|_| Error::Identity(format!("weight block {j} of n={n} is singular")))?;
        Ok(Self {
            index,
            highest,
            inverse,
            columns: columns.iter().map(|v| v.convert()).collect(),
        })
    }
}

type BlockCache = Mutex<HashMap<(usize, usize), Arc<WeightBlock>>>;

fn weight_block(n: usize, j: usize) -> Result<Arc<WeightBlock>> {
    static CACHE: OnceLock<BlockCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache lock").get(&(n, j)) {
        return Ok(b.clone());
    }
    // built outside the lock; a racing duplicate build is harmless
    let block = Arc::new(WeightBlock::build(n, j)?);
    Ok(cache.lock().expect("cache lock").entry((n, j)).or_insert(block).clone())
}

/// Component of `v` in `W_k = H_k ⊕ F(H_k)`.
pub fn project_pik(v: &SuperVector<RationalFunc>, k: usize) -> Result<SuperVector<RationalFunc>> {
    let n = v.n();
    check_k(n, k)?;
    let mut out = SuperVector::zero(n);
    // H_k lives in block k (first columns), F(H_k) in block k+1 (last columns)
    for (j, from_highest) in [(k, true), (k + 1, false)] {
        let block = weight_block(n, j)?;
        let mut x = vec![RationalFunc::zero(); block.index.len()];
        let mut any = false;
        for (s, c) in v.terms().filter(|(s, _)| s.ones() == j) {
            x[block.index[&s]] = c.clone();
            any = true;
        }
        if !any {
            continue;
        }
        let coords = block.inverse.apply(&x);
        let range = if from_highest { 0..block.highest } else { block.highest..coords.len() };
        for i in range {
            if !coords[i].is_zero() {
                out = out.add(&block.columns[i].scale(&coords[i]));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidrep::full_twist_word;
    use crate::glrep::{apply_e, is_highest_weight, Weight};

    fn ts(e: &[usize]) -> TwistString {
        TwistString::new(e.to_vec()).unwrap()
    }

    /// All strings of S_k by brute force over compositions of n.
    fn brute_strings(n: usize, k: usize) -> Vec<TwistString> {
        fn go(rem: usize, gap_next: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if gap_next {
                for a in 0..=rem {
                    cur.push(a);
                    if a == rem {
                        out.push(cur.clone());
                    } else {
                        go(rem - a, false, cur, out);
                    }
                    cur.pop();
                }
            } else {
                for b in 2..=rem {
                    cur.push(b);
                    go(rem - b, true, cur, out);
                    cur.pop();
                }
            }
        }
        let mut all = Vec::new();
        go(n, true, &mut Vec::new(), &mut all);
        all.into_iter().map(|e| ts(&e)).filter(|s| s.k() == k).collect()
    }

    #[test]
    fn string_examples() {
        assert_eq!(enumerate_strings(3, 1).unwrap(), vec![ts(&[0, 2, 1]), ts(&[1, 2, 0])]);
        for n in 1..6 {
            assert_eq!(enumerate_strings(n, 0).unwrap(), vec![ts(&[n])]);
        }
        assert_eq!(enumerate_strings(4, 3).unwrap(), vec![ts(&[0, 4, 0])]);
        assert!(enumerate_strings(3, 3).is_err());
        assert!(TwistString::new(vec![0, 1, 2]).is_err());
        assert!(TwistString::new(vec![0, 2]).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=7 {
            for k in 0..n {
                let mut fast = enumerate_strings(n, k).unwrap();
                let mut slow = brute_strings(n, k);
                fast.sort();
                slow.sort();
                assert_eq!(fast, slow, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(ts(&[1, 2, 0]).to_wedge().indices(), &[2]);
        let w = WedgeIndex::new(3, vec![1, 2]).unwrap();
        assert_eq!(TwistString::from_wedge(&w), ts(&[0, 3, 0]));
        let w = WedgeIndex::new(6, vec![1, 3, 4]).unwrap();
        assert_eq!(TwistString::from_wedge(&w), ts(&[0, 2, 0, 3, 1]));
        for n in 1..=7 {
            for k in 0..n {
                for s in enumerate_strings(n, k).unwrap() {
                    assert_eq!(TwistString::from_wedge(&s.to_wedge()), s);
                    assert_eq!(s.n(), n);
                    assert_eq!(s.k(), k);
                }
            }
        }
    }

    fn st(s: &str) -> BasisState {
        BasisState::from_bits(s.len(), u64::from_str_radix(s, 2).unwrap())
    }

    #[test]
    fn phi_examples() {
        let e1 = phi_of_string(&ts(&[0, 2, 2]));
        let expect = SuperVector::from_terms(
            4,
            [(st("0100"), LaurentPoly::monomial(1, -1)), (st("1000"), LaurentPoly::monomial(-1, 0))],
        );
        assert_eq!(e1, expect);
        assert_eq!(phi_of_string(&ts(&[4])), SuperVector::basis(BasisState::all_zero(4)));
        assert_eq!(phi_of_string(&ts(&[0, 3, 0])), e_of_all_ones(3));
        assert_eq!(h1_vector(4, 1), e1);
    }

    #[test]
    fn phi_is_highest_weight_and_equals_psi() {
        for n in 1..=6 {
            for k in 0..n {
                for s in enumerate_strings(n, k).unwrap() {
                    let v = phi_of_string(&s);
                    assert!(apply_e(&v).is_zero());
                    assert_eq!(
                        is_highest_weight(&v),
                        Some(Weight {
                            c1: (n - k) as i64,
                            c2: k as i64
                        })
                    );
                    assert_eq!(psi_wedge(&s.to_wedge()), v, "{s}");
                }
            }
        }
    }

    #[test]
    fn graded_product_is_antisymmetric_on_w() {
        let n = 4;
        let w = |i| SuperVector::<LaurentPoly>::basis(BasisState::from_positions(n, &[i]));
        for i in 1..=n {
            assert!(graded_product(&w(i), &w(i)).is_zero());
            for j in i + 1..=n {
                assert_eq!(graded_product(&w(i), &w(j)), graded_product(&w(j), &w(i)).neg());
            }
        }
    }

    #[test]
    fn h1_generator_action_n3() {
        let m = h1_generator_matrix(3, 1, 1).unwrap();
        let q = |c, e| LaurentPoly::monomial(c, e);
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![q(-1, -1), q(1, 0)], vec![LaurentPoly::zero(), q(1, 1)]])
        );
        for n in 2..=6 {
            for t in 1..n {
                let a = h1_generator_matrix(n, t, 1).unwrap();
                let b = h1_generator_matrix(n, t, -1).unwrap();
                assert!(a.mul(&b).is_identity());
            }
        }
        assert!(h1_generator_matrix(3, 3, 1).is_err());
    }

    fn words(n: usize) -> Vec<BraidWord> {
        let mut out = vec![BraidWord::identity(n).unwrap()];
        for t in 1..n as i32 {
            out.push(BraidWord::new(n, vec![t]).unwrap());
            out.push(BraidWord::new(n, vec![-t]).unwrap());
        }
        out.push(BraidWord::new(n, (1..n as i32).chain((1..n as i32).map(|g| -g)).collect()).unwrap());
        out
    }

    #[test]
    fn compound_action_matches_direct() {
        for n in 2..=5 {
            for k in 0..n {
                for w in words(n) {
                    assert_eq!(hk_braid_matrix(&w, k).unwrap(), hk_action_direct(&w, k).unwrap(), "n={n} k={k} w={w}");
                }
            }
        }
    }

    #[test]
    fn wedge_image_matches_compound() {
        let w = BraidWord::parse("1 -2 3 2", 4).unwrap();
        let m = h1_word_matrix(&w).unwrap();
        for k in 0..4 {
            let c = m.compound(k);
            for (j, wj) in enumerate_wedges(4, k).unwrap().iter().enumerate() {
                let img = wedge_image(&m, wj);
                for (i, wi) in enumerate_wedges(4, k).unwrap().iter().enumerate() {
                    let got = img.get(wi.indices()).cloned().unwrap_or_else(LaurentPoly::zero);
                    assert_eq!(&got, c.get(i, j));
                }
            }
        }
    }

    #[test]
    fn full_twist_scalar_on_hk() {
        for n in 2..=5 {
            let tau = full_twist_word(n, 1).unwrap();
            for k in 0..n {
                let m = hk_braid_matrix(&tau, k).unwrap();
                let d = m.rows();
                let e = (n * (n - 1)) as i64 - 2 * (n * k) as i64;
                assert_eq!(m, Matrix::identity(d).scale(&LaurentPoly::monomial(1, e)));
            }
        }
    }

    #[test]
    fn coordinates_reject_foreign_vectors() {
        let v = SuperVector::<LaurentPoly>::basis(st("001"));
        assert!(coordinates_in_hk(&v, 1).is_err());
    }

    #[test]
    fn projections_on_basis() {
        for n in 2..=4 {
            for k in 0..n {
                for s in enumerate_strings(n, k).unwrap() {
                    let v = phi_of_string(&s).to_rational();
                    for kk in 0..n {
                        let p = project_pik(&v, kk).unwrap();
                        if kk == k {
                            assert_eq!(p, v);
                        } else {
                            assert!(p.is_zero());
                        }
                    }
                    let fv = apply_f(&v);
                    assert_eq!(project_pik(&fv, k).unwrap(), fv);
                }
            }
        }
    }
}
