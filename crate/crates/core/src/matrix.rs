//! Small dense matrices over the exact coefficient rings.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactring::{Coeff, LaurentPoly, RationalFunc};

#[derive(Clone, PartialEq)]
pub struct Matrix<S: Coeff> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Coeff> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(k)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc.add(&a.mul(b)) })
            })
            .collect()
    }

    pub fn convert<T: Coeff + From<S>>(&self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().cloned().map(T::from).collect(),
        }
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square());
        let mut memo = MinorCache { memo: HashMap::new() };
        let all = mask_of(&(0..self.rows).collect::<Vec<_>>());
        memo.minor(self, all, all)
    }

    /// The `k`-th compound matrix: entry `(I, J)` is the minor on rows `I`
    /// and columns `J`, with `k`-subsets in lexicographic order.
    pub fn compound(&self, k: usize) -> Self {
        let rsets = k_subsets(self.rows, k);
        let csets = k_subsets(self.cols, k);
        let rmasks: Vec<u64> = rsets.iter().map(|s| mask_of(s)).collect();
        let cmasks: Vec<u64> = csets.iter().map(|s| mask_of(s)).collect();
        let mut memo = MinorCache { memo: HashMap::new() };
        let mut out = Self::zeros(rsets.len(), csets.len());
        for (i, &rm) in rmasks.iter().enumerate() {
            for (j, &cm) in cmasks.iter().enumerate() {
                out.set(i, j, memo.minor(self, rm, cm));
            }
        }
        out
    }
}

/// Memoized minors keyed by (row mask, column mask); cofactor expansion
/// along the first row of each minor.
struct MinorCache<S> {
    memo: HashMap<(u64, u64), S>,
}

impl<S: Coeff> MinorCache<S> {
    fn minor(&mut self, m: &Matrix<S>, rows: u64, cols: u64) -> S {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        if rows == 0 {
            return S::one();
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r);
        let mut acc = S::zero();
        let mut parity = false;
        let mut cm = cols;
        while cm != 0 {
            let c = cm.trailing_zeros() as usize;
            cm &= cm - 1;
            let a = m.get(r, c);
            if !a.is_zero() {
                let sub = self.minor(m, rest, cols & !(1 << c));
                if !sub.is_zero() {
                    let term = a.mul(&sub);
                    acc = if parity { acc.sub(&term) } else { acc.add(&term) };
                }
            }
            parity = !parity;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

/// All `k`-subsets of `0..m` as increasing vectors, lexicographic.
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

impl Matrix<RationalFunc> {
    /// Row echelon form by Gaussian elimination; returns the pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                RationalFunc::one()
            } else {
                RationalFunc::zero()
            }
        });
        let pivots = aug.eliminate();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Identity("matrix is singular".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }
}

impl Matrix<LaurentPoly> {
    pub fn to_rational(&self) -> Matrix<RationalFunc> {
        self.convert()
    }
}

impl<S: Coeff> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type M = Matrix<LaurentPoly>;

    fn lp(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(k_subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn determinant_by_hand() {
        // [[q, 1], [1, q^-1]] -> 1 - 1 = 0 ; [[q, 2], [1, q]] -> q^2 - 2
        let a = M::from_rows(vec![vec![lp(1, 1), lp(1, 0)], vec![lp(1, 0), lp(1, -1)]]);
        assert!(a.determinant().is_zero());
        let b = M::from_rows(vec![vec![lp(1, 1), lp(2, 0)], vec![lp(1, 0), lp(1, 1)]]);
        assert_eq!(b.determinant(), LaurentPoly::from_terms([(2, 1), (0, -2)]));
    }

    #[test]
    fn compound_extremes() {
        let a = M::from_fn(3, 3, |i, j| lp((i * 3 + j) as i64 % 4 - 1, i as i64 - j as i64));
        assert_eq!(a.compound(1), a);
        let top = a.compound(3);
        assert_eq!(top.rows(), 1);
        assert_eq!(top.get(0, 0), &a.determinant());
        assert_eq!(a.compound(0), M::identity(1));
    }

    #[test]
    fn inverse_and_rank() {
        let a = M::from_rows(vec![vec![lp(1, 1), lp(2, 0)], vec![lp(1, 0), lp(1, 1)]]).to_rational();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.rank(), 2);
        let s = M::from_rows(vec![vec![lp(1, 1), lp(1, 0)], vec![lp(1, 0), lp(1, -1)]]).to_rational();
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_err());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = M> {
        prop::collection::vec((-2i64..3, -2i64..3), n * n)
            .prop_map(move |v| M::from_fn(n, n, |i, j| lp(v[i * n + j].0, v[i * n + j].1)))
    }

    proptest! {
        #[test]
        fn compound_is_multiplicative((a, b, k) in (1usize..5).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), 0..=n))) {
            prop_assert_eq!(a.mul(&b).compound(k), a.compound(k).mul(&b.compound(k)));
        }

        #[test]
        fn pow_matches_repeated_mul(a in arb_matrix(3), e in 0u64..5) {
            let mut acc = M::identity(3);
            for _ in 0..e {
                acc = acc.mul(&a);
            }
            prop_assert_eq!(a.pow(e), acc);
        }
    }
}
