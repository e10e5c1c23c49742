//! Structural identity checks, runnable from the command line up to a
//! strand bound. Each check returns an outcome instead of panicking so the
//! caller can report all of them.

use crate::braidrep::{apply_braid, full_twist_word, torus_word, BraidWord};
use crate::error::Result;
use crate::exactring::{LaurentPoly, RationalFunc};
use crate::glrep::{apply_cartan, apply_e, apply_f, is_highest_weight, BasisState, SuperVector, Weight};
use crate::highwt::{enumerate_strings, h1_word_matrix, hk_action_direct, hk_braid_matrix, phi_of_string, project_pik};
use crate::matrix::Matrix;
use crate::twistcalc::{closure_scalar, formula_table, torus_oracle, twist_coeffs, vandermonde_and_inverse};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, r: Result<Option<String>>) -> CheckOutcome {
    match r {
        Ok(None) => CheckOutcome {
            name,
            passed: true,
            detail: String::new(),
        },
        Ok(Some(d)) => CheckOutcome {
            name,
            passed: false,
            detail: d,
        },
        Err(e) => CheckOutcome {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("letters in range")
}

/// Deterministic sample of words for `n` strands.
fn sample_words(n: usize) -> Vec<BraidWord> {
    let g: Vec<i32> = (1..n as i32).collect();
    let mut out = vec![BraidWord::identity(n).unwrap()];
    for &t in &g {
        out.push(word(n, &[t]));
        out.push(word(n, &[-t]));
    }
    let mixed: Vec<i32> = g.iter().enumerate().map(|(i, &t)| if i % 2 == 0 { t } else { -t }).collect();
    out.push(word(n, &mixed));
    out.push(word(n, &g.iter().rev().copied().chain(g.iter().copied()).collect::<Vec<_>>()));
    out
}

fn braid_relations(depth: usize) -> Result<Option<String>> {
    for n in 3..=depth {
        for b in BasisState::all(n) {
            let x = SuperVector::<LaurentPoly>::basis(b);
            for t in 1..n as i32 - 1 {
                let l = apply_braid(&x, &word(n, &[t, t + 1, t]))?;
                let r = apply_braid(&x, &word(n, &[t + 1, t, t + 1]))?;
                if l != r {
                    return Ok(Some(format!("σ{t}σ{}σ{t} on {b} (n={n})", t + 1)));
                }
                for s in t + 2..n as i32 {
                    if apply_braid(&x, &word(n, &[t, s]))? != apply_braid(&x, &word(n, &[s, t]))? {
                        return Ok(Some(format!("σ{t}σ{s} on {b} (n={n})")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn equivariance(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth {
        for w in sample_words(n) {
            for b in BasisState::all(n) {
                let x = SuperVector::<LaurentPoly>::basis(b);
                let phi = |v: &SuperVector| apply_braid(v, &w);
                if phi(&apply_e(&x))? != apply_e(&phi(&x)?)
                    || phi(&apply_f(&x))? != apply_f(&phi(&x)?)
                    || phi(&apply_cartan(&x, (1, 0)))? != apply_cartan(&phi(&x)?, (1, 0))
                {
                    return Ok(Some(format!("word {w} on {b}")));
                }
            }
        }
    }
    Ok(None)
}

fn highest_weight_basis(depth: usize) -> Result<Option<String>> {
    for n in 1..=depth {
        for k in 0..n {
            let strings = enumerate_strings(n, k)?;
            let expect = Weight {
                c1: (n - k) as i64,
                c2: k as i64,
            };
            let states: Vec<BasisState> = BasisState::all(n).filter(|s| s.ones() == k).collect();
            let mut m = Matrix::<RationalFunc>::zeros(strings.len(), states.len());
            for (i, s) in strings.iter().enumerate() {
                let v = phi_of_string(s);
                if is_highest_weight(&v) != Some(expect) {
                    return Ok(Some(format!("φ{s} is not highest weight {expect:?}")));
                }
                for (j, st) in states.iter().enumerate() {
                    m.set(i, j, v.coeff(*st).into());
                }
            }
            if m.rank() != strings.len() {
                return Ok(Some(format!("φ(S_{k}) dependent for n={n}")));
            }
        }
    }
    Ok(None)
}

fn compound_action(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth {
        for w in sample_words(n) {
            for k in 0..n {
                if hk_braid_matrix(&w, k)? != hk_action_direct(&w, k)? {
                    return Ok(Some(format!("H_{k} action of {w} (n={n})")));
                }
            }
        }
    }
    Ok(None)
}

fn full_twist(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth {
        let tau = full_twist_word(n, 1)?;
        for k in 0..n {
            let eig = LaurentPoly::monomial(1, (n * (n - 1)) as i64 - (2 * n * k) as i64);
            for s in enumerate_strings(n, k)? {
                let v = phi_of_string(&s);
                if apply_braid(&v, &tau)? != v.scale(&eig) {
                    return Ok(Some(format!("τ on φ{s}")));
                }
            }
        }
        // λ = σ_{n-1}…σ_1 as an operator, σ_1 acting first
        let lambda = h1_word_matrix(&BraidWord::new(n, (1..n as i32).collect())?)?;
        let c = n as i64 - 3;
        if lambda.pow(n as u64) != Matrix::identity(n - 1).scale(&LaurentPoly::monomial(1, n as i64 * c)) {
            return Ok(Some(format!("λ^n ≠ q^(n(n-3)) for n={n}")));
        }
    }
    Ok(None)
}

fn projections(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth.min(4) {
        let tau = full_twist_word(n, 1)?;
        for b in BasisState::all(n) {
            let x = SuperVector::<RationalFunc>::basis(b);
            let mut total = SuperVector::zero(n);
            let mut twisted = SuperVector::zero(n);
            for k in 0..n {
                let p = project_pik(&x, k)?;
                if project_pik(&p, k)? != p {
                    return Ok(Some(format!("π_{k} not idempotent on {b}")));
                }
                let eig = RationalFunc::monomial(1, (n * (n - 1)) as i64 - (2 * n * k) as i64);
                twisted = twisted.add(&p.scale(&eig));
                total = total.add(&p);
            }
            if total != x {
                return Ok(Some(format!("Σπ_k ≠ id on {b}")));
            }
            if apply_braid(&x, &tau)? != twisted {
                return Ok(Some(format!("τ ≠ Σ x_k π_k on {b}")));
            }
        }
    }
    Ok(None)
}

fn vandermonde(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth.max(2) {
        let tc = vandermonde_and_inverse(n)?;
        if !tc.b.to_rational().mul(&tc.c).is_identity() {
            return Ok(Some(format!("B·C ≠ I for n={n}")));
        }
        for m in 0..=10 {
            let f = twist_coeffs(m, n)?;
            if m < n && f.iter().enumerate().any(|(j, c)| *c != if j == m { LaurentPoly::one() } else { LaurentPoly::zero() }) {
                return Ok(Some(format!("f_{{{m},·,{n}}} is not an indicator")));
            }
        }
    }
    Ok(None)
}

fn twist_formula(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth.max(2) {
        for base in sample_words(n) {
            for row in formula_table(&base, &[0, 1, 2, 3, 4, 5])? {
                if !row.matches() {
                    return Ok(Some(format!("base {base} (n={n}) at m={}", row.m)));
                }
            }
        }
    }
    Ok(None)
}

fn torus(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth.max(2) {
        for l in 1..=2 * n + 1 {
            let Ok(oracle) = torus_oracle(n, l) else { continue };
            let direct = closure_scalar(&torus_word(n, l)?)?;
            let ok = if direct.is_knot() {
                direct.poly == oracle.poly
            } else {
                direct.agrees_up_to_sign(&oracle.poly)
            };
            if !ok {
                return Ok(Some(format!("T({n},{l})")));
            }
        }
    }
    Ok(None)
}

fn markov(depth: usize) -> Result<Option<String>> {
    for n in 2..=depth {
        let words = sample_words(n);
        for w in &words {
            let d = closure_scalar(w)?.poly;
            for g in &words {
                if closure_scalar(&w.conjugate(g)?)?.poly != d {
                    return Ok(Some(format!("conjugating {w} by {g}")));
                }
            }
            for sign in [1, -1] {
                if closure_scalar(&w.stabilize(sign)?)?.poly != d {
                    return Ok(Some(format!("stabilizing {w} with sign {sign}")));
                }
            }
        }
    }
    Ok(None)
}

/// Runs every check for strand counts up to `depth`.
pub fn run_checks(depth: usize) -> Vec<CheckOutcome> {
    vec![
        outcome("braid relations", braid_relations(depth)),
        outcome("equivariance", equivariance(depth)),
        outcome("highest weight basis", highest_weight_basis(depth)),
        outcome("compound action on H_k", compound_action(depth)),
        outcome("full twist eigenvalues", full_twist(depth)),
        outcome("weight projections", projections(depth)),
        outcome("vandermonde inverse and coefficients", vandermonde(depth)),
        outcome("twist formula", twist_formula(depth)),
        outcome("torus closed forms", torus(depth)),
        outcome("markov invariance", markov(depth)),
    ]
}
