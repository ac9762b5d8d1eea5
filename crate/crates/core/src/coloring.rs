//! The complete a-uniform volume coloring of a point set.
//!
//! Every a-subset of ids is an edge. Edges of non-zero squared volume are
//! colored by that volume; each zero-volume edge gets a color of its own.
//! Internally a color is a `u32` index into a sorted palette of distinct
//! volumes, with [`ZERO_COLOR`] standing for "unique zero color of this edge".

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{binomial, insert_sorted, subsets, BinomialTable};
use crate::error::{out_of_range, Error};
use crate::geometry::PointSet;
use crate::parallel;
use crate::rational::Rational;

pub const ZERO_COLOR: u32 = u32::MAX;

/// Canonical color of an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColorKey {
    /// Positive squared volume.
    Volume { value: Rational },
    /// Zero volume; unique to the (sorted) edge.
    ZeroUnique { edge: Vec<usize> },
}

impl ColorKey {
    pub fn volume(value: Rational) -> Self {
        ColorKey::Volume { value }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ColorKey::ZeroUnique { .. })
    }
}

/// Witness for the observed goodness: `extensions` all form `color` with `tuple`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub color: ColorKey,
    pub extensions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    /// Largest volume color class around any (a-1)-tuple. At least 1.
    pub observed_m: usize,
    /// `None` only when every edge has zero volume.
    pub witness: Option<Witness>,
    /// Set when the scan stopped early at the first class larger than this cap.
    pub exceeded_cap: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Coloring<'p> {
    points: &'p PointSet,
    a: usize,
    table: BinomialTable,
    /// Distinct non-zero volumes times `scale`, sorted.
    keys: Vec<BigInt>,
    scale: BigInt,
    palette: OnceLock<Vec<Rational>>,
    edges: Vec<u32>,
}

/// Sorted distinct non-zero keys and each value's palette index.
fn index_colors<K: Ord + Clone + Send + Sync>(values: Vec<K>, is_zero: impl Fn(&K) -> bool + Sync) -> (Vec<K>, Vec<u32>) {
    let mut keys: Vec<K> = values.iter().filter(|v| !is_zero(v)).cloned().collect();
    keys.sort_unstable();
    keys.dedup();
    let edges = parallel::map_collect(&values, |v| {
        if is_zero(v) {
            ZERO_COLOR
        } else {
            keys.binary_search(v).expect("value in palette") as u32
        }
    });
    (keys, edges)
}

/// Build the total coloring of all `C(n, a)` edges.
pub fn build_coloring(points: &PointSet, a: usize) -> Result<Coloring<'_>, Error> {
    let d = points.dim();
    if a < 2 || a > d + 1 {
        return Err(out_of_range("a", a, format!("[2, {}]", d + 1)));
    }
    let n = points.len();
    if n < a {
        return Err(Error::TooFewPoints { n, needed: a });
    }
    let total = binomial(n as u64, a as u64);
    if total >= ZERO_COLOR as u64 {
        return Err(Error::Guard(format!("{total} edges do not fit the coloring index")));
    }
    let table = BinomialTable::new(n, a);
    let edge_of = |rank: usize| {
        let mut edge = Vec::with_capacity(a);
        table.unrank(rank, a, n, &mut edge);
        edge
    };
    // Volumes are compared as integers scaled by a common factor.
    let small: Vec<Option<i128>> = parallel::map_range(total as usize, |rank| points.scaled_volume_i128(&edge_of(rank)));
    let (keys, edges) = if small.iter().all(Option::is_some) {
        let (keys, edges) = index_colors(small.into_iter().map(Option::unwrap).collect(), |v| *v == 0);
        (keys.into_iter().map(BigInt::from).collect::<Vec<_>>(), edges)
    } else {
        drop(small);
        let big: Vec<BigInt> = parallel::map_range(total as usize, |rank| points.scaled_volume(&edge_of(rank)));
        index_colors(big, |v| v.is_zero())
    };
    let scale = points.volume_scale(a);

    Ok(Coloring {
        points,
        a,
        table,
        keys,
        scale,
        palette: OnceLock::new(),
        edges,
    })
}

impl<'p> Coloring<'p> {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &'p PointSet {
        self.points
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Sorted distinct non-zero squared volumes.
    pub fn palette(&self) -> &[Rational] {
        self.palette
            .get_or_init(|| self.keys.iter().map(|k| self.unscale(k)).collect())
    }

    /// Number of distinct non-zero volumes.
    pub fn palette_len(&self) -> usize {
        self.keys.len()
    }

    fn unscale(&self, key: &BigInt) -> Rational {
        Rational::new(key.clone(), self.scale.clone()).expect("positive scale")
    }

    /// Internal color of a sorted edge.
    #[inline]
    pub fn color_id(&self, sorted_edge: &[usize]) -> u32 {
        self.edges[self.table.rank(sorted_edge)]
    }

    pub fn key_of(&self, id: u32, sorted_edge: &[usize]) -> ColorKey {
        if id == ZERO_COLOR {
            ColorKey::ZeroUnique {
                edge: sorted_edge.to_vec(),
            }
        } else {
            ColorKey::volume(self.unscale(&self.keys[id as usize]))
        }
    }

    /// Color of an edge given in any order.
    pub fn color(&self, edge: &[usize]) -> Result<ColorKey, Error> {
        let sorted = self.checked_sorted(edge, self.a)?;
        Ok(self.key_of(self.color_id(&sorted), &sorted))
    }

    fn checked_sorted(&self, ids: &[usize], len: usize) -> Result<Vec<usize>, Error> {
        if ids.len() != len {
            return Err(Error::InvalidSubset(format!(
                "expected {len} ids, got {}",
                ids.len()
            )));
        }
        self.points.check_ids(ids)?;
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        Ok(sorted)
    }

    /// Ids `v` outside `tuple` with `color(tuple + v) = gamma`, ascending.
    pub fn color_class(&self, tuple: &[usize], gamma: &ColorKey) -> Result<Vec<usize>, Error> {
        let tuple = self.checked_sorted(tuple, self.a - 1)?;
        match gamma {
            ColorKey::Volume { value } => {
                let scaled = value * &Rational::from_integer(self.scale.clone());
                if !scaled.is_integer() {
                    return Ok(Vec::new());
                }
                match self.keys.binary_search(scaled.numer()) {
                    Ok(id) => Ok(self.class_members(&tuple, id as u32)),
                    Err(_) => Ok(Vec::new()),
                }
            }
            ColorKey::ZeroUnique { edge } => {
                let mut edge = edge.clone();
                edge.sort_unstable();
                let extra: Vec<usize> = edge
                    .iter()
                    .copied()
                    .filter(|v| tuple.binary_search(v).is_err())
                    .collect();
                let contains_tuple = tuple.iter().all(|v| edge.binary_search(v).is_ok());
                if edge.len() == self.a
                    && contains_tuple
                    && extra.len() == 1
                    && extra[0] < self.n()
                    && self.color_id(&edge) == ZERO_COLOR
                {
                    Ok(extra)
                } else {
                    Ok(Vec::new())
                }
            }
        }
    }

    /// Members of a volume class around a sorted tuple.
    pub(crate) fn class_members(&self, tuple: &[usize], id: u32) -> Vec<usize> {
        let mut buf = Vec::with_capacity(self.a);
        (0..self.n())
            .filter(|v| tuple.binary_search(v).is_err())
            .filter(|&v| {
                insert_sorted(tuple, v, &mut buf);
                self.color_id(&buf) == id
            })
            .collect()
    }

    /// Largest volume class around a sorted tuple. Ties go to the
    /// lexicographically smallest extension list.
    pub(crate) fn largest_class(&self, tuple: &[usize]) -> Option<(u32, Vec<usize>)> {
        let mut buf = Vec::with_capacity(self.a);
        let mut colored: Vec<(u32, usize)> = (0..self.n())
            .filter(|v| tuple.binary_search(v).is_err())
            .filter_map(|v| {
                insert_sorted(tuple, v, &mut buf);
                let c = self.color_id(&buf);
                (c != ZERO_COLOR).then_some((c, v))
            })
            .collect();
        colored.sort_unstable();
        let mut best: Option<(u32, Vec<usize>)> = None;
        for run in colored.chunk_by(|x, y| x.0 == y.0) {
            let members: Vec<usize> = run.iter().map(|&(_, v)| v).collect();
            let better = match &best {
                None => true,
                Some((_, b)) => match members.len().cmp(&b.len()) {
                    Ordering::Greater => true,
                    Ordering::Equal => members < *b,
                    Ordering::Less => false,
                },
            };
            if better {
                best = Some((run[0].0, members));
            }
        }
        best
    }

    /// Exact m-goodness: the largest volume class over all (a-1)-tuples.
    ///
    /// Costs `O(C(n, a-1) * n)` color lookups. With `cap`, stops at the
    /// lexicographically first tuple whose largest class exceeds it.
    pub fn goodness(&self, cap: Option<usize>) -> GoodnessReport {
        let tuples: Vec<Vec<usize>> = subsets(self.n(), self.a - 1).collect();
        let witness_for = |tuple: &Vec<usize>, (id, ext): (u32, Vec<usize>)| {
            let mut edge = Vec::new();
            insert_sorted(tuple, ext[0], &mut edge);
            Witness {
                tuple: tuple.clone(),
                color: self.key_of(id, &edge),
                extensions: ext,
            }
        };

        if let Some(cap) = cap {
            let hit = parallel::find_map_first(&tuples, |t| {
                self.largest_class(t)
                    .filter(|(_, ext)| ext.len() > cap)
                    .map(|best| witness_for(t, best))
            });
            if let Some(w) = hit {
                return GoodnessReport {
                    observed_m: w.extensions.len(),
                    witness: Some(w),
                    exceeded_cap: Some(cap),
                };
            }
        }

        let per_tuple = parallel::map_collect(&tuples, |t| self.largest_class(t));
        let mut best: Option<(usize, (u32, Vec<usize>))> = None;
        for (i, cand) in per_tuple.into_iter().enumerate() {
            let Some(cand) = cand else { continue };
            // strict: earlier tuples win ties
            if best.as_ref().is_none_or(|(_, b)| cand.1.len() > b.1.len()) {
                best = Some((i, cand));
            }
        }
        match best {
            Some((i, cand)) => {
                let w = witness_for(&tuples[i], cand);
                GoodnessReport {
                    observed_m: w.extensions.len(),
                    witness: Some(w),
                    exceeded_cap: None,
                }
            }
            None => GoodnessReport {
                observed_m: 1,
                witness: None,
                exceeded_cap: None,
            },
        }
    }

    /// All edges in lexicographic order with their colors.
    pub fn edges(&self) -> impl Iterator<Item = (Vec<usize>, ColorKey)> + '_ {
        subsets(self.n(), self.a).map(move |e| {
            let key = self.key_of(self.color_id(&e), &e);
            (e, key)
        })
    }

    /// Number of edges per palette entry.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.keys.len()];
        for &c in &self.edges {
            if c != ZERO_COLOR {
                sizes[c as usize] += 1;
            }
        }
        sizes
    }

    pub fn zero_edges(&self) -> usize {
        self.edges.iter().filter(|&&c| c == ZERO_COLOR).count()
    }
}
