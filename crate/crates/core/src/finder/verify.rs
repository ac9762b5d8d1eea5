//! Independent certificate checks: exhaustive volume comparison and
//! general-position testing by affine rank.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::ColorKey;
use crate::combinatorics::{subsets, subsets_of};
use crate::error::{out_of_range, Error};
use crate::geometry::{affine_rank, PointSet};
use crate::parallel;
use crate::rational::Rational;

use super::Variant;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuplicateGroup {
    pub color: ColorKey,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub duplicate_groups: Vec<DuplicateGroup>,
    pub zero_edges: usize,
    pub edges_checked: usize,
}

/// Compare the squared volumes of all `C(|subset|, a)` edges.
pub fn verify_subset(
    points: &PointSet,
    subset: &[usize],
    a: usize,
    variant: Variant,
) -> Result<VerifyReport, Error> {
    points.check_ids(subset)?;
    if a < 2 || a > points.dim() + 1 {
        return Err(out_of_range("a", a, format!("[2, {}]", points.dim() + 1)));
    }
    if subset.len() < a {
        return Err(Error::InvalidSubset(format!(
            "{} ids cannot form an edge of size {a}",
            subset.len()
        )));
    }
    let mut ids = subset.to_vec();
    ids.sort_unstable();
    let edges: Vec<Vec<usize>> = subsets_of(&ids, a).collect();
    let volumes = parallel::map_collect(&edges, |e| {
        points.squared_volume(e).expect("arity checked")
    });

    let mut groups: BTreeMap<&Rational, Vec<Vec<usize>>> = BTreeMap::new();
    let mut zero_edges = 0;
    for (e, v) in edges.iter().zip(&volumes) {
        if v.is_zero() {
            zero_edges += 1;
        } else {
            groups.entry(v).or_default().push(e.clone());
        }
    }
    let duplicate_groups: Vec<DuplicateGroup> = groups
        .into_iter()
        .filter(|(_, es)| es.len() > 1)
        .map(|(v, edges)| DuplicateGroup {
            color: ColorKey::volume(v.clone()),
            edges,
        })
        .collect();
    let valid = duplicate_groups.is_empty() && (variant == Variant::H || zero_edges == 0);
    Ok(VerifyReport {
        valid,
        duplicate_groups,
        zero_edges,
        edges_checked: edges.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralPosition {
    pub ok: bool,
    /// Lexicographically first degenerate a-subset.
    pub witness: Option<Vec<usize>>,
}

/// True iff every a-subset spans an (a-1)-dimensional affine hull.
/// Exhaustive, `O(C(n, a))` rank computations.
pub fn general_position_check(points: &PointSet, a: usize) -> Result<GeneralPosition, Error> {
    if a < 2 || a > points.dim() + 1 {
        return Err(out_of_range("a", a, format!("[2, {}]", points.dim() + 1)));
    }
    let n = points.len();
    let firsts: Vec<usize> = (0..n).collect();
    let witness = parallel::find_map_first(&firsts, |&first| {
        subsets(n - first - 1, a - 1).find_map(|rest| {
            let mut edge = Vec::with_capacity(a);
            edge.push(first);
            edge.extend(rest.into_iter().map(|i| i + first + 1));
            let pts: Vec<&[Rational]> = edge.iter().map(|&i| points.coords(i)).collect();
            let rank = affine_rank(&pts).expect("non-empty");
            (rank < a - 1).then_some(edge)
        })
    });
    Ok(GeneralPosition {
        ok: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(xs: &[i64]) -> PointSet {
        PointSet::from_integers(1, &xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn distinct_line_distances() {
        let r = verify_subset(&line(&[0, 1, 3]), &[0, 1, 2], 2, Variant::H).unwrap();
        assert!(r.valid);
        assert_eq!(r.edges_checked, 3);
    }

    #[test]
    fn square_duplicates() {
        let p = PointSet::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
            .unwrap();
        let r = verify_subset(&p, &[0, 1, 2, 3], 2, Variant::H).unwrap();
        assert!(!r.valid);
        assert_eq!(r.duplicate_groups.len(), 2);
        assert_eq!(r.duplicate_groups[0].color, ColorKey::volume(1.into()));
        assert_eq!(r.duplicate_groups[0].edges.len(), 4);
        assert_eq!(r.duplicate_groups[1].color, ColorKey::volume(2.into()));
        assert_eq!(r.duplicate_groups[1].edges, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn zero_volume_handling() {
        let p = PointSet::from_integers(2, &[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap();
        let h = verify_subset(&p, &[0, 1, 2], 3, Variant::H).unwrap();
        assert!(h.valid);
        assert_eq!(h.zero_edges, 1);
        let hp = verify_subset(&p, &[0, 1, 2], 3, Variant::HPrime).unwrap();
        assert!(!hp.valid);
    }

    #[test]
    fn verify_errors() {
        let p = line(&[0, 1, 3]);
        assert!(verify_subset(&p, &[0], 2, Variant::H).is_err());
        assert!(verify_subset(&p, &[0, 0], 2, Variant::H).is_err());
        assert!(verify_subset(&p, &[0, 7], 2, Variant::H).is_err());
        assert!(verify_subset(&p, &[0, 1, 2], 3, Variant::H).is_err());
    }

    #[test]
    fn general_position_examples() {
        let col = PointSet::from_integers(2, &[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap();
        let g = general_position_check(&col, 3).unwrap();
        assert!(!g.ok);
        assert_eq!(g.witness, Some(vec![0, 1, 2]));
        let tri = PointSet::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert!(general_position_check(&tri, 3).unwrap().ok);
        assert!(general_position_check(&col, 2).unwrap().ok);
        assert!(general_position_check(&col, 4).is_err());
    }

    #[test]
    fn general_position_witness_is_lex_first() {
        let p = PointSet::from_integers(
            2,
            &[vec![0, 5], vec![3, 0], vec![1, 1], vec![7, 2], vec![2, 2], vec![3, 3]],
        )
        .unwrap();
        // (1,1),(2,2),(3,3) are ids 2, 4, 5; no earlier triple is collinear
        assert_eq!(general_position_check(&p, 3).unwrap().witness, Some(vec![2, 4, 5]));
    }
}
