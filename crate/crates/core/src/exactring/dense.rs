//! Dense univariate integer polynomials, `p[i]` the coefficient of `x^i`.
//!
//! These are the working representation for division and gcd; callers keep
//! every vector trimmed (no trailing zeros, empty for zero).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&p);
    if !c.is_zero() && !c.is_one() {
        for x in &mut p {
            *x /= &c;
        }
    }
    p
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qc * bj;
        }
        quot[i] = qc;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[j + shift] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Largest `g` such that every nonzero coefficient of every input sits at a
/// multiple of `g`.
fn exponent_stride(polys: &[&[BigInt]]) -> usize {
    let mut g = 0usize;
    for p in polys {
        for (i, c) in p.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&i);
            }
        }
    }
    g.max(1)
}

fn compress(p: &[BigInt], stride: usize) -> Vec<BigInt> {
    p.iter().step_by(stride).cloned().collect()
}

fn expand(p: &[BigInt], stride: usize) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); (p.len() - 1) * stride + 1];
    for (i, c) in p.iter().enumerate() {
        out[i * stride] = c.clone();
    }
    out
}

/// Gcd in `Z[x]` with positive leading coefficient (zero iff both are zero).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    // x -> x^s commutes with the Euclidean algorithm.
    let stride = exponent_stride(&[a, b]);
    let (a, b) = (compress(a, stride), compress(b, stride));
    let c = content(&a).gcd(&content(&b));
    let mut u = primitive_part(a);
    let mut v = primitive_part(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        if v.len() == 1 {
            u = vec![BigInt::one()];
            break;
        }
        let r = primitive_part(pseudo_rem(&u, &v));
        u = v;
        v = r;
    }
    let mut g = primitive_part(u);
    for x in &mut g {
        *x *= &c;
    }
    normalize_sign(expand(&g, stride))
}

fn normalize_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(Signed::is_negative) {
        for x in &mut p {
            *x = -&*x;
        }
    }
    p
}
