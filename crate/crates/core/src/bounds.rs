//! Exact calculators for the closed-form bounds.
//!
//! Naming: `g` is the vertex count forcing a rainbow clique in an m-good
//! coloring; a "threshold" (`H`) is a number of points `n` that guarantees a
//! distinct-volume subset of size `t`; a "subset" bound (`h`) is the size `t`
//! guaranteed inside `n` points. Constants the theory only proves to exist
//! (`c`, `j`, the base threshold) are explicit parameters.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{out_of_range, Error};
use crate::rational::Rational;

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Floor of the real `k`-th root.
pub fn integer_root(n: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "root degree must be positive");
    n.nth_root(k)
}

/// `4 m t^(2k-1)`: enough vertices to force a rainbow `K_t^(k)` in any m-good
/// coloring of the complete k-uniform hypergraph.
pub fn g_upper(k: u64, m: u64, t: u64) -> Result<BigUint, Error> {
    if k < 2 {
        return Err(out_of_range("k", k, ">= 2"));
    }
    if m < 1 {
        return Err(out_of_range("m", m, ">= 1"));
    }
    if t < 1 {
        return Err(out_of_range("t", t, ">= 1"));
    }
    Ok(big(4) * big(m) * big(t).pow((2 * k - 1) as u32))
}

/// Largest `t` with `4 m t^(2k-1) <= n` (0 when none).
pub fn largest_t(n: u64, k: u64, m: u64) -> Result<u64, Error> {
    if k < 2 {
        return Err(out_of_range("k", k, ">= 2"));
    }
    if m < 1 {
        return Err(out_of_range("m", m, ">= 1"));
    }
    let q = big(n) / (big(4) * big(m));
    Ok(integer_root(&q, (2 * k - 1) as u32)
        .to_u64()
        .unwrap_or(u64::MAX))
}

/// `8 t^(2d+2)`, the threshold for simplices (`a = d + 1`); equals
/// `g_upper(d + 1, 2t, t)`.
pub fn simplex_threshold_upper(d: u64, t: u64) -> Result<BigUint, Error> {
    if d < 2 {
        return Err(out_of_range("d", d, ">= 2"));
    }
    if t < d + 1 {
        return Err(out_of_range("t", t, format!(">= d + 1 = {}", d + 1)));
    }
    Ok(big(8) * big(t).pow((2 * d + 2) as u32))
}

/// `floor(n^(1/(2d+2)) / 2)`.
pub fn simplex_subset_lower(d: u64, n: &BigUint) -> Result<BigUint, Error> {
    if d < 2 {
        return Err(out_of_range("d", d, ">= 2"));
    }
    Ok(integer_root(n, (2 * d + 2) as u32) / big(2))
}

/// `floor(c * n^(1/((2a-1)d)))` for a caller-supplied constant `c >= 0`.
pub fn general_subset_lower(a: u64, d: u64, n: &BigUint, c: &Rational) -> Result<BigUint, Error> {
    if a < 2 || a > d + 1 {
        return Err(out_of_range("a", a, format!("[2, d + 1 = {}]", d + 1)));
    }
    if c.is_negative() {
        return Err(out_of_range("c", c, ">= 0"));
    }
    if c.is_zero() {
        return Ok(BigUint::zero());
    }
    let e = ((2 * a - 1) * d) as u32;
    // y <= (p/q) n^(1/e)  <=>  y^e <= p^e n / q^e
    let p = c.numer().to_biguint().expect("c > 0");
    let q = c.denom().to_biguint().expect("denominator > 0");
    let radicand = p.pow(e) * n / q.pow(e);
    Ok(integer_root(&radicand, e))
}

/// Iterates `H_d = 4 j H_(d-1) t^(2a-1)` from `H_0 = base`.
pub fn general_threshold_recurrence(a: u64, d: u64, t: u64, j: u64, base: u64) -> Result<BigUint, Error> {
    if a < 2 {
        return Err(out_of_range("a", a, ">= 2"));
    }
    if t < 1 {
        return Err(out_of_range("t", t, ">= 1"));
    }
    if j < 1 {
        return Err(out_of_range("j", j, ">= 1"));
    }
    let step = big(4) * big(j) * big(t).pow((2 * a - 1) as u32);
    let mut h = big(base);
    for _ in 0..d {
        h = &h * &step;
    }
    Ok(h)
}

/// Upper bound on the number of same-colored edge pairs meeting in exactly
/// `s` vertices: `m n^(2k-s-1) / (2 s! ((k-s)!)^2)`.
pub fn as_upper(k: u64, m: u64, n: u64, s: u64) -> Result<Rational, Error> {
    if k < 2 {
        return Err(out_of_range("k", k, ">= 2"));
    }
    if s >= k {
        return Err(out_of_range("s", s, format!("[0, k - 1 = {}]", k - 1)));
    }
    let num = big(m) * big(n).pow((2 * k - s - 1) as u32);
    let fk = factorial(k - s);
    let den = big(2) * factorial(s) * &fk * &fk;
    Rational::new(num, den)
}

/// `4 m t^(2k) / n`, the bound on expected same-colored pairs in a random
/// `2t`-sample.
pub fn expected_conflict_bound(n: u64, k: u64, m: u64, t: u64) -> Result<Rational, Error> {
    for (what, v) in [("n", n), ("k", k), ("m", m), ("t", t)] {
        if v < 1 {
            return Err(out_of_range(what, v, ">= 1"));
        }
    }
    Rational::new(big(4) * big(m) * big(t).pow((2 * k) as u32), big(n))
}

/// One bound evaluation, as requested from the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundQuery {
    GUpper { k: u64, m: u64, t: u64 },
    LargestT { n: u64, k: u64, m: u64 },
    AsUpper { k: u64, m: u64, n: u64, s: u64 },
    ExpectedConflicts { n: u64, k: u64, m: u64, t: u64 },
    SimplexSubsetLower { d: u64, n: BigUint },
    SimplexThresholdUpper { d: u64, t: u64 },
    GeneralSubsetLower { a: u64, d: u64, n: BigUint, c: Rational },
    GeneralThresholdRecurrence { a: u64, d: u64, t: u64, j: u64, base: u64 },
}

impl BoundQuery {
    pub fn evaluate(&self) -> Result<Rational, Error> {
        let int = |b: BigUint| Rational::from_integer(num_bigint::BigInt::from(b));
        Ok(match self {
            BoundQuery::GUpper { k, m, t } => int(g_upper(*k, *m, *t)?),
            BoundQuery::LargestT { n, k, m } => Rational::from_integer(largest_t(*n, *k, *m)?),
            BoundQuery::AsUpper { k, m, n, s } => as_upper(*k, *m, *n, *s)?,
            BoundQuery::ExpectedConflicts { n, k, m, t } => expected_conflict_bound(*n, *k, *m, *t)?,
            BoundQuery::SimplexSubsetLower { d, n } => int(simplex_subset_lower(*d, n)?),
            BoundQuery::SimplexThresholdUpper { d, t } => int(simplex_threshold_upper(*d, *t)?),
            BoundQuery::GeneralSubsetLower { a, d, n, c } => int(general_subset_lower(*a, *d, n, c)?),
            BoundQuery::GeneralThresholdRecurrence { a, d, t, j, base } => {
                int(general_threshold_recurrence(*a, *d, *t, *j, *base)?)
            }
        })
    }
}
