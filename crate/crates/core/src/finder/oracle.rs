//! Exhaustive maximum search and the greedy augmentation pass.

use std::collections::HashSet;

use crate::coloring::{build_coloring, Coloring, ZERO_COLOR};
use crate::combinatorics::{insert_sorted, subsets_of};
use crate::error::Error;
use crate::geometry::PointSet;

use super::{verify_subset, Variant};

/// Largest `n` the oracle accepts, per edge size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n_pairs: usize,
    pub max_n_triples: usize,
    pub max_n_other: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n_pairs: 12,
            max_n_triples: 10,
            max_n_other: 9,
        }
    }
}

impl OracleLimits {
    pub fn max_n(&self, a: usize) -> usize {
        match a {
            2 => self.max_n_pairs,
            3 => self.max_n_triples,
            _ => self.max_n_other,
        }
    }
}

/// Incremental validity state for a growing id set.
struct Growing<'c, 'p> {
    coloring: &'c Coloring<'p>,
    variant: Variant,
    chosen: Vec<usize>,
    used: HashSet<u32>,
}

impl<'c, 'p> Growing<'c, 'p> {
    fn new(coloring: &'c Coloring<'p>, variant: Variant) -> Self {
        Growing {
            coloring,
            variant,
            chosen: Vec::new(),
            used: HashSet::new(),
        }
    }

    /// Colors of the new edges `v` would create, or `None` if adding `v`
    /// breaks validity.
    fn new_colors(&self, v: usize) -> Option<Vec<u32>> {
        let a = self.coloring.a();
        if self.chosen.len() + 1 < a {
            return Some(Vec::new());
        }
        let mut fresh = Vec::new();
        let mut edge = Vec::with_capacity(a);
        for tuple in subsets_of(&self.chosen, a - 1) {
            insert_sorted(&tuple, v, &mut edge);
            let c = self.coloring.color_id(&edge);
            if c == ZERO_COLOR {
                if self.variant == Variant::HPrime {
                    return None;
                }
                continue;
            }
            if self.used.contains(&c) || fresh.contains(&c) {
                return None;
            }
            fresh.push(c);
        }
        Some(fresh)
    }

    fn push(&mut self, v: usize, colors: &[u32]) {
        let pos = self.chosen.partition_point(|&x| x < v);
        self.chosen.insert(pos, v);
        self.used.extend(colors.iter().copied());
    }

    fn pop(&mut self, v: usize, colors: &[u32]) {
        self.chosen.retain(|&x| x != v);
        for c in colors {
            self.used.remove(c);
        }
    }
}

fn search(state: &mut Growing<'_, '_>, start: usize, target: usize, n: usize) -> bool {
    if state.chosen.len() == target {
        return true;
    }
    let need = target - state.chosen.len();
    for v in start..n {
        if n - v < need {
            break;
        }
        if let Some(colors) = state.new_colors(v) {
            state.push(v, &colors);
            if search(state, v + 1, target, n) {
                return true;
            }
            state.pop(v, &colors);
        }
    }
    false
}

/// Lexicographically least maximum-cardinality valid subset.
///
/// Tries sizes from `n` downwards; within a size, a depth-first search in
/// lexicographic order that abandons a prefix as soon as it is invalid.
pub fn brute_force_max(
    points: &PointSet,
    a: usize,
    variant: Variant,
    limits: OracleLimits,
) -> Result<Vec<usize>, Error> {
    let n = points.len();
    if n > limits.max_n(a) {
        return Err(Error::Guard(format!(
            "oracle limited to n <= {} for a = {a}, got {n}",
            limits.max_n(a)
        )));
    }
    if n < a {
        return Ok((0..n).collect());
    }
    let coloring = build_coloring(points, a)?;
    for target in (0..=n).rev() {
        let mut state = Growing::new(&coloring, variant);
        if search(&mut state, 0, target, n) {
            return Ok(state.chosen);
        }
    }
    unreachable!("the empty set is always valid")
}

/// Add points in increasing id order whenever the result stays valid.
/// Returns the sorted superset.
pub fn greedy_augment(
    points: &PointSet,
    subset: &[usize],
    a: usize,
    variant: Variant,
) -> Result<Vec<usize>, Error> {
    points.check_ids(subset)?;
    if subset.len() >= a && !verify_subset(points, subset, a, variant)?.valid {
        return Err(Error::InvalidSubset("input subset is not valid".into()));
    }
    if points.len() < a {
        let mut all = subset.to_vec();
        all.sort_unstable();
        return Ok(all);
    }
    let coloring = build_coloring(points, a)?;
    let mut state = Growing::new(&coloring, Variant::H);
    state.variant = variant;
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    for &v in &sorted {
        let colors = state.new_colors(v).expect("input verified");
        state.push(v, &colors);
    }
    // rejection is permanent: validity is inherited by subsets
    for v in 0..points.len() {
        if state.chosen.binary_search(&v).is_ok() {
            continue;
        }
        if let Some(colors) = state.new_colors(v) {
            state.push(v, &colors);
        }
    }
    Ok(state.chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_grid;

    fn square() -> PointSet {
        PointSet::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn line(xs: &[i64]) -> PointSet {
        PointSet::from_integers(1, &xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    /// Plain enumeration of every subset, largest first.
    fn enumerate_max(points: &PointSet, a: usize, variant: Variant) -> usize {
        let n = points.len();
        (0..1u32 << n)
            .filter_map(|mask| {
                let ids: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let ok = ids.len() < a || verify_subset(points, &ids, a, variant).unwrap().valid;
                ok.then_some(ids.len())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_max(&square(), 2, Variant::H, OracleLimits::default()).unwrap().len(), 2);
        assert_eq!(
            brute_force_max(&line(&[0, 1, 3]), 2, Variant::H, OracleLimits::default()).unwrap(),
            vec![0, 1, 2]
        );
        let g = gen_grid(2, 3).unwrap();
        let best = brute_force_max(&g, 2, Variant::H, OracleLimits::default()).unwrap();
        assert_eq!(best.len(), 3);
        // lexicographically least: (0,0),(0,1),(1,2)
        assert_eq!(best, vec![0, 1, 5]);
    }

    #[test]
    fn oracle_matches_plain_enumeration() {
        for seed in 0..8 {
            let p = crate::generators::gen_random(2, 8, 3, seed, Some(1)).unwrap();
            for (a, variant) in [(2, Variant::H), (3, Variant::H), (3, Variant::HPrime)] {
                let best = brute_force_max(&p, a, variant, OracleLimits::default()).unwrap();
                assert_eq!(best.len(), enumerate_max(&p, a, variant), "seed {seed} a {a}");
                if best.len() >= a {
                    assert!(verify_subset(&p, &best, a, variant).unwrap().valid);
                }
            }
        }
    }

    #[test]
    fn oracle_guard() {
        let g = gen_grid(2, 4).unwrap();
        assert!(matches!(
            brute_force_max(&g, 2, Variant::H, OracleLimits::default()),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn augment_examples() {
        let p = line(&[0, 1, 3]);
        assert_eq!(greedy_augment(&p, &[0, 1], 2, Variant::H).unwrap(), vec![0, 1, 2]);
        assert_eq!(greedy_augment(&p, &[0, 1, 2], 2, Variant::H).unwrap(), vec![0, 1, 2]);
        let sq = square();
        // every other vertex sits at distance 1 from both diagonal ends
        assert_eq!(greedy_augment(&sq, &[0, 3], 2, Variant::H).unwrap(), vec![0, 3]);
        assert_eq!(greedy_augment(&sq, &[2], 2, Variant::H).unwrap(), vec![0, 2]);
        // nothing left to add
        let two = line(&[0, 5]);
        assert_eq!(greedy_augment(&two, &[1, 0], 2, Variant::H).unwrap(), vec![0, 1]);
        assert!(greedy_augment(&sq, &[0, 1, 2, 3], 2, Variant::H).is_err());
    }
}
