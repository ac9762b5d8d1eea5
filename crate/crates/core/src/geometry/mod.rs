//! Exact rational points and squared simplex volumes.
//!
//! Volumes are always handled through their squares. For `a` points
//! `p_1..p_a` the squared `(a-1)`-volume is `det(G) / ((a-1)!)^2` with the
//! Gram matrix `G_ij = (p_i - p_a) . (p_j - p_a)`, which stays in the
//! rationals. [`squared_volume_cm`] computes the same quantity from the
//! Cayley-Menger bordered determinant and exists only as a cross-check.

mod format;
pub mod linalg;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{out_of_range, Error};
use crate::rational::Rational;

pub use format::{parse_point_set, write_point_set};

/// A point with its stable index in the owning [`PointSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub id: usize,
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Finite point set in R^d. Ids are `0..n`, coordinates are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    lattice: Lattice,
}

/// Coordinates times the common denominator `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Lattice {
    scale: BigInt,
    big: Vec<Vec<BigInt>>,
    /// Present when every entry fits comfortably in an `i64`.
    small: Option<Vec<Vec<i64>>>,
}

/// Bound on lattice entries for the `i128` path.
const SMALL_LIMIT: i64 = 1 << 40;

impl Lattice {
    fn new(points: &[Point]) -> Lattice {
        let scale = points
            .iter()
            .flat_map(|p| p.coords.iter())
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let big: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| p.coords.iter().map(|x| x.numer() * (&scale / x.denom())).collect())
            .collect();
        let small = big
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_i64().filter(|v| v.abs() < SMALL_LIMIT))
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>();
        Lattice { scale, big, small }
    }
}

impl PointSet {
    pub fn new(dim: usize, coords: Vec<Vec<Rational>>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(out_of_range("d", 0, "d >= 1"));
        }
        let mut seen: HashMap<&[Rational], usize> = HashMap::with_capacity(coords.len());
        for (i, c) in coords.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
            if let Some(&first) = seen.get(c.as_slice()) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(c.as_slice(), i);
        }
        let points: Vec<Point> = coords
            .into_iter()
            .enumerate()
            .map(|(id, coords)| Point { id, coords })
            .collect();
        let lattice = Lattice::new(&points);
        Ok(PointSet { dim, points, lattice })
    }

    /// Integer-coordinate convenience constructor.
    pub fn from_integers(dim: usize, coords: &[Vec<i64>]) -> Result<Self, Error> {
        PointSet::new(
            dim,
            coords
                .iter()
                .map(|c| c.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> &Point {
        &self.points[id]
    }

    pub fn coords(&self, id: usize) -> &[Rational] {
        &self.points[id].coords
    }

    /// New point set on the given ids, renumbered `0..ids.len()` in the given order.
    pub fn restrict(&self, ids: &[usize]) -> PointSet {
        let points: Vec<Point> = ids
            .iter()
            .enumerate()
            .map(|(id, &old)| Point {
                id,
                coords: self.points[old].coords.clone(),
            })
            .collect();
        let lattice = Lattice::new(&points);
        PointSet {
            dim: self.dim,
            points,
            lattice,
        }
    }

    /// Squared volume scaled to an integer: `squared_volume(ids)` times
    /// `volume_scale(ids.len())`. The factor depends only on the set and
    /// `a`, so these integers order and compare like the volumes.
    pub fn scaled_volume(&self, ids: &[usize]) -> BigInt {
        let rows = &self.lattice.big;
        let apex = &rows[ids[ids.len() - 1]];
        let edges: Vec<Vec<BigInt>> = ids[..ids.len() - 1]
            .iter()
            .map(|&i| rows[i].iter().zip(apex).map(|(x, y)| x - y).collect())
            .collect();
        let dot = |u: &[BigInt], v: &[BigInt]| u.iter().zip(v).fold(BigInt::zero(), |acc, (x, y)| acc + x * y);
        let gram = edges
            .iter()
            .map(|u| edges.iter().map(|v| dot(u, v)).collect())
            .collect();
        linalg::det_bareiss(gram)
    }

    /// As [`PointSet::scaled_volume`] in machine integers; `None` when the
    /// coordinates are too large or an intermediate overflows.
    pub fn scaled_volume_i128(&self, ids: &[usize]) -> Option<i128> {
        let rows = self.lattice.small.as_ref()?;
        let a = ids.len();
        let apex = &rows[ids[a - 1]];
        if a == 2 {
            let p = &rows[ids[0]];
            return p.iter().zip(apex).try_fold(0i128, |acc, (&x, &y)| {
                let t = (x - y) as i128;
                acc.checked_add(t * t)
            });
        }
        let mut edges = [[0i128; 8]; 8];
        let d = self.dim;
        if d > 8 {
            return None;
        }
        for (r, &i) in ids[..a - 1].iter().enumerate() {
            for k in 0..d {
                edges[r][k] = (rows[i][k] - apex[k]) as i128;
            }
        }
        let mut gram = vec![vec![0i128; a - 1]; a - 1];
        for i in 0..a - 1 {
            for j in i..a - 1 {
                let mut acc = 0i128;
                for k in 0..d {
                    acc = acc.checked_add(edges[i][k].checked_mul(edges[j][k])?)?;
                }
                gram[i][j] = acc;
                gram[j][i] = acc;
            }
        }
        linalg::det_bareiss_i128(gram)
    }

    /// `scale^(2(a-1)) ((a-1)!)^2`, the factor between scaled and true
    /// squared volumes of `a` points.
    pub fn volume_scale(&self, a: usize) -> BigInt {
        let f = factorial(a - 1);
        self.lattice.scale.pow(2 * (a as u32 - 1)) * &f * &f
    }

    /// Squared volume of the simplex on the given ids.
    pub fn squared_volume(&self, ids: &[usize]) -> Result<Rational, Error> {
        let pts: Vec<&[Rational]> = ids.iter().map(|&i| self.coords(i)).collect();
        squared_volume(&pts)
    }

    /// Validated list of ids: in range and duplicate-free.
    pub(crate) fn check_ids(&self, ids: &[usize]) -> Result<(), Error> {
        let mut seen = vec![false; self.len()];
        for &i in ids {
            if i >= self.len() {
                return Err(Error::InvalidSubset(format!(
                    "id {i} out of range for {} points",
                    self.len()
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidSubset(format!("id {i} repeated")));
            }
        }
        Ok(())
    }
}

fn check_simplex(pts: &[&[Rational]]) -> Result<usize, Error> {
    let a = pts.len();
    let d = pts.first().map(|p| p.len()).unwrap_or(0);
    if let Some(bad) = pts.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.len(),
        });
    }
    if a < 2 || a > d + 1 {
        return Err(out_of_range("a", a, format!("[2, {}]", d + 1)));
    }
    Ok(d)
}

fn diff(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    p.iter().zip(q).map(|(x, y)| x - y).collect()
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter()
        .zip(v)
        .fold(Rational::zero(), |acc, (x, y)| &acc + &(x * y))
}

pub fn squared_distance(p: &[Rational], q: &[Rational]) -> Rational {
    p.iter().zip(q).fold(Rational::zero(), |acc, (x, y)| {
        let t = x - y;
        &acc + &(&t * &t)
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Exact squared `(a-1)`-dimensional volume of the simplex on `a` points.
pub fn squared_volume(pts: &[&[Rational]]) -> Result<Rational, Error> {
    check_simplex(pts)?;
    let a = pts.len();
    if a == 2 {
        return Ok(squared_distance(pts[0], pts[1]));
    }
    let apex = pts[a - 1];
    let edges: Vec<Vec<Rational>> = pts[..a - 1].iter().map(|p| diff(p, apex)).collect();
    let gram: Vec<Vec<Rational>> = edges
        .iter()
        .map(|u| edges.iter().map(|v| dot(u, v)).collect())
        .collect();
    let f = factorial(a - 1);
    let scale = Rational::from_integer(&f * &f);
    Ok(&linalg::det_gauss(gram) / &scale)
}

/// Squared volume via the Cayley-Menger determinant; agrees with
/// [`squared_volume`] exactly.
pub fn squared_volume_cm(pts: &[&[Rational]]) -> Result<Rational, Error> {
    check_simplex(pts)?;
    let a = pts.len();
    let k = a - 1;
    // bordered matrix [[0, 1..1], [1, D]] with D_ij = |p_i - p_j|^2
    let mut cm = vec![vec![Rational::zero(); a + 1]; a + 1];
    for i in 1..=a {
        cm[0][i] = Rational::one();
        cm[i][0] = Rational::one();
    }
    for i in 0..a {
        for j in i + 1..a {
            let d2 = squared_distance(pts[i], pts[j]);
            cm[i + 1][j + 1] = d2.clone();
            cm[j + 1][i + 1] = d2;
        }
    }
    let det = linalg::det_laplace(&cm);
    // V_k^2 = (-1)^(k+1) det / (2^k (k!)^2)
    let f = factorial(k);
    let denom = Rational::from_integer((BigInt::from(1) << k) * &f * &f);
    let v = &det / &denom;
    Ok(if k % 2 == 1 { v } else { -v })
}

/// Dimension of the affine hull of `pts`.
pub fn affine_rank(pts: &[&[Rational]]) -> Result<usize, Error> {
    let first = pts.first().ok_or(Error::Empty)?;
    if let Some(bad) = pts.iter().find(|p| p.len() != first.len()) {
        return Err(Error::DimensionMismatch {
            expected: first.len(),
            got: bad.len(),
        });
    }
    Ok(linalg::rank(pts[1..].iter().map(|p| diff(p, first)).collect()))
}

/// `det[s_2 - s_1, ..., s_d - s_1, x - s_1]` for `d` base points in R^d.
/// Its sign tells which side of `aff(base)` the point `x` lies on.
pub fn oriented_volume(base: &[&[Rational]], x: &[Rational]) -> Result<Rational, Error> {
    let d = x.len();
    if base.len() != d {
        return Err(out_of_range("base size", base.len(), format!("= d = {d}")));
    }
    if let Some(bad) = base.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.len(),
        });
    }
    let origin = base[0];
    let mut rows: Vec<Vec<Rational>> = base[1..].iter().map(|p| diff(p, origin)).collect();
    rows.push(diff(x, origin));
    Ok(linalg::det_gauss(rows))
}
