//! Point-set constructions: grids, parallel lines, rational circles, random
//! rational clouds.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::Rng as _;

use crate::error::{out_of_range, Error};
use crate::geometry::PointSet;
use crate::rational::Rational;
use crate::rng;

/// Largest point count any generator will produce.
pub const MAX_POINTS: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Grid { d: usize, side: usize },
    Random { d: usize, n: usize, bound: u64, seed: u64, denominator: Option<u64> },
    ParallelLines { d: usize, n: usize },
    Sphere2d { n: usize },
    Collinear { d: usize, n: usize },
    CocircularPlusNoise { n_circle: usize, n_noise: usize, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<PointSet, Error> {
        match *self {
            GenSpec::Grid { d, side } => gen_grid(d, side),
            GenSpec::Random { d, n, bound, seed, denominator } => {
                gen_random(d, n, bound, seed, denominator)
            }
            GenSpec::ParallelLines { d, n } => gen_parallel_lines(d, n),
            GenSpec::Sphere2d { n } => gen_sphere2d(n),
            GenSpec::Collinear { d, n } => gen_collinear(d, n),
            GenSpec::CocircularPlusNoise { n_circle, n_noise, seed } => {
                gen_cocircular_plus_noise(n_circle, n_noise, seed)
            }
        }
    }
}

fn int(x: i64) -> Rational {
    Rational::from(x)
}

/// All integer points of `{0..side-1}^d`, row-major (last coordinate fastest).
pub fn gen_grid(d: usize, side: usize) -> Result<PointSet, Error> {
    if d == 0 {
        return Err(out_of_range("d", d, ">= 1"));
    }
    if side == 0 {
        return Err(out_of_range("side", side, ">= 1"));
    }
    let n = (side as u128)
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_POINTS as u128)
        .ok_or_else(|| Error::Guard(format!("grid {side}^{d} exceeds {MAX_POINTS} points")))?
        as usize;
    let coords = (0..n)
        .map(|mut idx| {
            let mut c = vec![Rational::zero(); d];
            for slot in c.iter_mut().rev() {
                *slot = int((idx % side) as i64);
                idx /= side;
            }
            c
        })
        .collect();
    PointSet::new(d, coords)
}

/// `n` points on `d` lines parallel to `e_d` through the vertices
/// `0, e_1, ..., e_{d-1}` of the standard simplex, equally spaced at unit
/// steps. Line sizes differ by at most one, larger lines first.
pub fn gen_parallel_lines(d: usize, n: usize) -> Result<PointSet, Error> {
    if d < 2 {
        return Err(out_of_range("d", d, ">= 2"));
    }
    if n < d {
        return Err(out_of_range("n", n, format!(">= d = {d}")));
    }
    let mut coords = Vec::with_capacity(n);
    for line in 0..d {
        let size = n / d + usize::from(line < n % d);
        for step in 0..size {
            let mut c = vec![Rational::zero(); d];
            if line > 0 {
                c[line - 1] = Rational::one();
            }
            c[d - 1] = int(step as i64);
            coords.push(c);
        }
    }
    PointSet::new(d, coords)
}

/// Rational point `((1-t^2)/(1+t^2), 2t/(1+t^2))` on the unit circle.
pub fn circle_point(t: &Rational) -> [Rational; 2] {
    let t2 = t * t;
    let denom = &Rational::one() + &t2;
    [
        &(&Rational::one() - &t2) / &denom,
        &(&int(2) * t) / &denom,
    ]
}

fn circle_params(n: usize) -> impl Iterator<Item = Rational> {
    (0..n).map(move |i| Rational::new(i as i64, n as i64).expect("n > 0"))
}

/// `n` points on the unit circle at parameters `i/n`, `i = 0..n`.
pub fn gen_sphere2d(n: usize) -> Result<PointSet, Error> {
    if n == 0 {
        return Err(out_of_range("n", n, ">= 1"));
    }
    PointSet::new(2, circle_params(n).map(|t| circle_point(&t).to_vec()).collect())
}

/// `n` points `(i, 0, ..., 0)`.
pub fn gen_collinear(d: usize, n: usize) -> Result<PointSet, Error> {
    if d == 0 {
        return Err(out_of_range("d", d, ">= 1"));
    }
    PointSet::new(
        d,
        (0..n)
            .map(|i| {
                let mut c = vec![Rational::zero(); d];
                c[0] = int(i as i64);
                c
            })
            .collect(),
    )
}

fn random_coord(rng: &mut rng::Rng, bound: u64, denominator: &BigInt, offset: &Rational) -> Rational {
    let k = rng.gen_range(0..=bound);
    let r = Rational::new(BigInt::from(k), denominator.clone()).expect("positive denominator");
    &r - offset
}

/// `n` seeded points with coordinates `k / denominator`, `k` uniform in
/// `0..=bound`. The denominator defaults to `bound^2`. Repeats are redrawn.
pub fn gen_random(
    d: usize,
    n: usize,
    bound: u64,
    seed: u64,
    denominator: Option<u64>,
) -> Result<PointSet, Error> {
    if d == 0 {
        return Err(out_of_range("d", d, ">= 1"));
    }
    if n == 0 {
        return Err(out_of_range("n", n, ">= 1"));
    }
    if n > MAX_POINTS {
        return Err(Error::Guard(format!("{n} points exceeds {MAX_POINTS}")));
    }
    let capacity = (bound as u128 + 1).checked_pow(d as u32).unwrap_or(u128::MAX);
    if (n as u128) > capacity {
        return Err(out_of_range("n", n, format!("<= {capacity} distinct lattice points")));
    }
    let den = denominator.unwrap_or_else(|| bound.saturating_mul(bound)).max(1);
    let den = BigInt::from(den);
    let zero = Rational::zero();
    let mut rng = rng::seeded(seed);
    let mut seen = HashSet::with_capacity(n);
    let mut coords = Vec::with_capacity(n);
    while coords.len() < n {
        let c: Vec<Rational> = (0..d).map(|_| random_coord(&mut rng, bound, &den, &zero)).collect();
        if seen.insert(c.clone()) {
            coords.push(c);
        }
    }
    PointSet::new(d, coords)
}

/// Origin (id 0), then `n_circle` unit-circle points at parameters `i/n_circle`,
/// then `n_noise` seeded points in `[-2, 2]^2` with denominator `10^6`.
pub fn gen_cocircular_plus_noise(n_circle: usize, n_noise: usize, seed: u64) -> Result<PointSet, Error> {
    if n_circle == 0 {
        return Err(out_of_range("n_circle", n_circle, ">= 1"));
    }
    const SCALE: u64 = 1_000_000;
    let mut coords: Vec<Vec<Rational>> = vec![vec![Rational::zero(), Rational::zero()]];
    coords.extend(circle_params(n_circle).map(|t| circle_point(&t).to_vec()));
    let mut seen: HashSet<Vec<Rational>> = coords.iter().cloned().collect();
    let den = BigInt::from(SCALE);
    let offset = int(2);
    let mut rng = rng::seeded(seed);
    let target = coords.len() + n_noise;
    while coords.len() < target {
        let c: Vec<Rational> = (0..2)
            .map(|_| random_coord(&mut rng, 4 * SCALE, &den, &offset))
            .collect();
        if seen.insert(c.clone()) {
            coords.push(c);
        }
    }
    PointSet::new(2, coords)
}
