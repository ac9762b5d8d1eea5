//! Distinct-volume subset search.
//!
//! Three modes share one contract: the returned subset always passes
//! [`verify_subset`] for the requested variant.
//!
//! * `Auto` computes the exact goodness `m` of the coloring, sets
//!   `t = max{t : 4 m t^(2a-1) <= n}` (at least `a`) and extracts a rainbow set.
//! * `Locus` follows the recursive proof structure. Each level checks the
//!   coloring for an (a-1)-tuple whose largest volume class exceeds a budget
//!   `m`. For `a = 2` that class lies on a sphere around the tuple's point and
//!   the search recurses into it. For `a = d + 1` the class lies on two
//!   hyperplanes parallel to the tuple's affine hull; the larger side is a
//!   set on which every volume vanishes. Other cases, and exhausted depth,
//!   fall back to `Auto`.
//! * `FixedM` is `Locus` with a caller budget at every level, using the
//!   sample-local bad-edge scan instead of the full goodness check.

mod oracle;
mod verify;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::{integer_root, largest_t};
use crate::coloring::{build_coloring, Coloring};
use crate::error::{out_of_range, Error};
use crate::geometry::{affine_rank, oriented_volume, squared_distance, PointSet};
use crate::rainbow::{self, Extraction, DEFAULT_MAX_RETRIES};
use crate::rational::Rational;

pub use oracle::{brute_force_max, greedy_augment, OracleLimits};
pub use verify::{general_position_check, verify_subset, DuplicateGroup, GeneralPosition, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Non-zero volumes pairwise distinct.
    H,
    /// All volumes distinct and non-zero; needs general position.
    HPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Mode {
    Auto,
    /// `m: None` uses the per-level default budget.
    Locus { m: Option<usize> },
    FixedM { m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FindRequest {
    pub a: usize,
    pub mode: Mode,
    pub variant: Variant,
    pub seed: u64,
    pub t_override: Option<usize>,
    pub max_retries: usize,
    /// Defaults to the dimension.
    pub recursion_depth_cap: Option<usize>,
    /// Run [`greedy_augment`] on rainbow results.
    pub augment: bool,
}

impl FindRequest {
    pub fn new(a: usize) -> Self {
        FindRequest {
            a,
            mode: Mode::Auto,
            variant: Variant::H,
            seed: 0,
            t_override: None,
            max_retries: DEFAULT_MAX_RETRIES,
            recursion_depth_cap: None,
            augment: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// All volume-colored edges distinct.
    Rainbow,
    /// Every a-subset has zero volume.
    AllZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocusKind {
    Sphere,
    Hyperplanes,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: LocusKind,
    pub level_points: usize,
    pub budget_m: usize,
    /// Witness tuple in original ids (empty for plain fallbacks).
    pub tuple: Vec<usize>,
    pub points_carried: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct FindStats {
    pub n: usize,
    pub edges: usize,
    pub retries_used: usize,
    pub conflicts_in_accepted_sample: u64,
    pub levels: usize,
    pub augmented_from: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FindResult {
    pub subset: Vec<usize>,
    pub certificate: Certificate,
    pub t_target: usize,
    pub observed_m: usize,
    pub recursion_trace: Vec<TraceStep>,
    pub seed: u64,
    pub stats: FindStats,
}

/// `max(a, floor(n^((2a-2)/(2a-1)) / 4))`.
pub fn default_level_budget(n: usize, a: usize) -> usize {
    let e = (2 * a - 1) as u32;
    let power = BigUint::from(n).pow((2 * a - 2) as u32);
    let m = integer_root(&power, e) / 4u32;
    let m: usize = m.try_into().unwrap_or(usize::MAX);
    m.max(a)
}

/// `max(a, largest t with 4 m t^(2a-1) <= n)`, or the override clamped to `a`.
pub fn target_t(n: usize, a: usize, m: usize, t_override: Option<usize>) -> usize {
    match t_override {
        Some(t) => t.max(a),
        None => (largest_t(n as u64, a as u64, m.max(1) as u64).expect("a >= 2, m >= 1") as usize).max(a),
    }
}

/// Witness produced at one level, in level-local ids.
struct LocusWitness {
    tuple: Vec<usize>,
    extensions: Vec<usize>,
}

struct Level {
    subset: Vec<usize>,
    certificate: Certificate,
    t_target: usize,
    retries_used: usize,
    conflicts: u64,
}

struct Search<'r> {
    req: &'r FindRequest,
    trace: Vec<TraceStep>,
    levels: usize,
}

pub fn find_subset(points: &PointSet, req: &FindRequest) -> Result<FindResult, Error> {
    let a = req.a;
    let d = points.dim();
    if a < 2 || a > d + 1 {
        return Err(out_of_range("a", a, format!("[2, {}]", d + 1)));
    }
    let n = points.len();
    if n < a {
        return Err(Error::TooFewPoints { n, needed: a });
    }
    if let Some(t) = req.t_override {
        if t > n {
            return Err(out_of_range("t", t, format!("<= n = {n}")));
        }
    }
    if req.variant == Variant::HPrime {
        let gp = general_position_check(points, a)?;
        if let Some(witness) = gp.witness {
            return Err(Error::NotGeneralPosition { a, witness });
        }
    }

    let coloring = build_coloring(points, a)?;
    let observed_m = coloring.goodness(None).observed_m;
    let mut search = Search {
        req,
        trace: Vec::new(),
        levels: 0,
    };
    let ids: Vec<usize> = (0..n).collect();
    let depth = req.recursion_depth_cap.unwrap_or(d);
    let level = match req.mode {
        Mode::Auto => {
            search.levels = 1;
            search.auto(&coloring, &ids, observed_m)?
        }
        Mode::Locus { .. } | Mode::FixedM { .. } => search.locus(&coloring, &ids, depth)?,
    };

    let mut subset = level.subset;
    subset.sort_unstable();
    let mut augmented_from = None;
    if req.augment && level.certificate == Certificate::Rainbow {
        let grown = greedy_augment(points, &subset, a, req.variant)?;
        if grown.len() > subset.len() {
            augmented_from = Some(subset.len());
        }
        subset = grown;
    }

    if subset.len() >= a {
        let report = verify_subset(points, &subset, a, req.variant)?;
        assert!(report.valid, "finder produced an invalid subset: {report:?}");
        if level.certificate == Certificate::AllZero {
            assert_eq!(report.zero_edges, report.edges_checked, "all-zero certificate violated");
        }
    }

    Ok(FindResult {
        subset,
        certificate: level.certificate,
        t_target: level.t_target,
        observed_m,
        recursion_trace: search.trace,
        seed: req.seed,
        stats: FindStats {
            n,
            edges: coloring.num_edges(),
            retries_used: level.retries_used,
            conflicts_in_accepted_sample: level.conflicts,
            levels: search.levels,
            augmented_from,
        },
    })
}

fn mapped(ids: &[usize], local: &[usize]) -> Vec<usize> {
    local.iter().map(|&i| ids[i]).collect()
}

impl Search<'_> {
    fn extraction(&self, ext: Extraction, ids: &[usize], t_target: usize) -> Result<Level, Error> {
        match ext {
            Extraction::Rainbow(r) => Ok(Level {
                subset: mapped(ids, &r.subset),
                certificate: Certificate::Rainbow,
                t_target,
                retries_used: r.retries_used,
                conflicts: r.conflicts_in_accepted_sample,
            }),
            Extraction::Failed(mut f) => {
                f.best.sample = mapped(ids, &f.best.sample);
                Err(Error::Extraction(Box::new(f)))
            }
            Extraction::BadEdge(_) => unreachable!("plain extraction never scans for bad edges"),
        }
    }

    /// Extraction at the observed goodness.
    fn auto(&self, coloring: &Coloring<'_>, ids: &[usize], observed_m: usize) -> Result<Level, Error> {
        let t = target_t(coloring.n(), coloring.a(), observed_m, self.req.t_override);
        let ext = rainbow::extract_rainbow(coloring, t, observed_m, self.req.seed, self.req.max_retries)?;
        self.extraction(ext, ids, t)
    }

    fn fallback(&mut self, coloring: &Coloring<'_>, ids: &[usize], budget: usize) -> Result<Level, Error> {
        self.trace.push(TraceStep {
            kind: LocusKind::Fallback,
            level_points: coloring.n(),
            budget_m: budget,
            tuple: Vec::new(),
            points_carried: coloring.n(),
        });
        let m = coloring.goodness(None).observed_m;
        self.auto(coloring, ids, m)
    }

    fn locus(&mut self, coloring: &Coloring<'_>, ids: &[usize], depth: usize) -> Result<Level, Error> {
        self.levels += 1;
        let a = coloring.a();
        let n = coloring.n();
        let m = match self.req.mode {
            Mode::FixedM { m } => m.max(1),
            Mode::Locus { m: Some(m) } => m.max(1),
            _ => default_level_budget(n, a),
        };
        let t = target_t(n, a, m, self.req.t_override);
        let (seed, retries) = (self.req.seed, self.req.max_retries);

        let witness = match self.req.mode {
            Mode::FixedM { .. } => match rainbow::extract_rainbow_fast(coloring, t, m, seed, retries)? {
                Extraction::BadEdge(w) => LocusWitness {
                    tuple: w.tuple,
                    extensions: w.extensions,
                },
                other => return self.extraction(other, ids, t),
            },
            _ => match coloring.goodness(Some(m)).witness.filter(|w| w.extensions.len() > m) {
                Some(w) => LocusWitness {
                    tuple: w.tuple,
                    extensions: w.extensions,
                },
                None => {
                    let ext = rainbow::extract_rainbow(coloring, t, m, seed, retries)?;
                    let found = self.extraction(ext, ids, t);
                    return self.prefer_flat(coloring, ids, m, t, found);
                }
            },
        };

        if depth == 0 {
            return self.fallback(coloring, ids, m);
        }
        let points = coloring.points();
        let d = points.dim();
        if a == 2 {
            self.sphere(coloring, ids, depth, m, witness)
        } else if a == d + 1 {
            self.hyperplanes(coloring, ids, m, t, witness)
        } else {
            self.fallback(coloring, ids, m)
        }
    }

    /// For `a = d + 1`, swap `found` for the largest point set on a common
    /// hyperplane if that is bigger. All its volumes vanish.
    fn prefer_flat(
        &mut self,
        coloring: &Coloring<'_>,
        ids: &[usize],
        m: usize,
        t: usize,
        found: Result<Level, Error>,
    ) -> Result<Level, Error> {
        let points = coloring.points();
        let d = points.dim();
        if self.req.variant != Variant::H || d < 2 || coloring.a() != d + 1 {
            return found;
        }
        let Some((tuple, members)) = largest_flat(points) else {
            return found;
        };
        let beaten = match &found {
            Ok(level) => level.subset.len() >= members.len(),
            Err(_) => members.len() < t,
        };
        if beaten {
            return found;
        }
        self.trace.push(TraceStep {
            kind: LocusKind::Hyperplanes,
            level_points: coloring.n(),
            budget_m: m,
            tuple: mapped(ids, &tuple),
            points_carried: members.len(),
        });
        Ok(Level {
            subset: mapped(ids, &members),
            certificate: Certificate::AllZero,
            t_target: t,
            retries_used: 0,
            conflicts: 0,
        })
    }

    fn sphere(
        &mut self,
        coloring: &Coloring<'_>,
        ids: &[usize],
        depth: usize,
        m: usize,
        w: LocusWitness,
    ) -> Result<Level, Error> {
        let points = coloring.points();
        let center = points.coords(w.tuple[0]);
        let radius = squared_distance(center, points.coords(w.extensions[0]));
        assert!(
            w.extensions
                .iter()
                .all(|&v| squared_distance(center, points.coords(v)) == radius),
            "sphere locus points must be equidistant from the center"
        );
        self.trace.push(TraceStep {
            kind: LocusKind::Sphere,
            level_points: coloring.n(),
            budget_m: m,
            tuple: mapped(ids, &w.tuple),
            points_carried: w.extensions.len(),
        });
        let sub_points = points.restrict(&w.extensions);
        let sub_ids = mapped(ids, &w.extensions);
        let sub = build_coloring(&sub_points, coloring.a())?;
        self.locus(&sub, &sub_ids, depth - 1)
    }

    fn hyperplanes(
        &mut self,
        coloring: &Coloring<'_>,
        ids: &[usize],
        m: usize,
        t: usize,
        w: LocusWitness,
    ) -> Result<Level, Error> {
        let points = coloring.points();
        let base: Vec<&[Rational]> = w.tuple.iter().map(|&i| points.coords(i)).collect();
        let (mut above, mut below) = (Vec::new(), Vec::new());
        for &v in &w.extensions {
            let side = oriented_volume(&base, points.coords(v))?;
            if side.is_positive() {
                above.push(v);
            } else if side.is_negative() {
                below.push(v);
            }
        }
        let larger = if below.len() > above.len() { below } else { above };
        self.trace.push(TraceStep {
            kind: LocusKind::Hyperplanes,
            level_points: coloring.n(),
            budget_m: m,
            tuple: mapped(ids, &w.tuple),
            points_carried: larger.len(),
        });

        let flat = (self.req.variant == Variant::H && larger.len() >= t).then(|| Level {
            subset: mapped(ids, &larger),
            certificate: Certificate::AllZero,
            t_target: t,
            retries_used: 0,
            conflicts: 0,
        });
        let observed = coloring.goodness(None).observed_m;
        match (flat, self.auto(coloring, ids, observed)) {
            (Some(flat), Ok(rainbow)) => Ok(if rainbow.subset.len() > flat.subset.len() {
                rainbow
            } else {
                flat
            }),
            (Some(flat), Err(_)) => Ok(flat),
            (None, res) => {
                self.trace.push(TraceStep {
                    kind: LocusKind::Fallback,
                    level_points: coloring.n(),
                    budget_m: m,
                    tuple: Vec::new(),
                    points_carried: coloring.n(),
                });
                res
            }
        }
    }
}

/// Skip the hyperplane scan beyond this many volume evaluations.
const FLAT_SCAN_LIMIT: u64 = 20_000_000;

/// Largest subset lying on one hyperplane, with the lex-first d-tuple
/// spanning it. `None` when the scan is too large or nothing spans.
pub fn largest_flat(points: &PointSet) -> Option<(Vec<usize>, Vec<usize>)> {
    let (n, d) = (points.len(), points.dim());
    if n < d || crate::combinatorics::binomial(n as u64, d as u64).saturating_mul(n as u64) > FLAT_SCAN_LIMIT {
        return None;
    }
    let tuples: Vec<Vec<usize>> = crate::combinatorics::subsets(n, d).collect();
    let flats = crate::parallel::map_collect(&tuples, |tuple| {
        let base: Vec<&[Rational]> = tuple.iter().map(|&i| points.coords(i)).collect();
        if affine_rank(&base).ok()? + 1 < d {
            return None;
        }
        let members: Vec<usize> = (0..n)
            .filter(|&x| oriented_volume(&base, points.coords(x)).is_ok_and(|v| v.is_zero()))
            .collect();
        Some(members)
    });
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for (tuple, members) in tuples.into_iter().zip(flats) {
        let Some(members) = members else { continue };
        if best.as_ref().is_none_or(|(_, b)| members.len() > b.len()) {
            best = Some((tuple, members));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn line(xs: &[i64]) -> PointSet {
        PointSet::from_integers(1, &xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    fn square() -> PointSet {
        PointSet::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    /// 40 points on the x-axis, two points on y = 5 and three scattered ones.
    pub(crate) fn line_with_parallel_pair() -> PointSet {
        let mut coords: Vec<Vec<Rational>> = (0..40).map(|i| vec![i.into(), 0.into()]).collect();
        for (x, y) in [("1/3", "5"), ("7/2", "5"), ("13/7", "-11/3"), ("-5/2", "17/9"), ("29/3", "2/7")] {
            coords.push(vec![x.parse().unwrap(), y.parse().unwrap()]);
        }
        PointSet::new(2, coords).unwrap()
    }

    #[test]
    fn budgets_and_targets() {
        assert_eq!(default_level_budget(45, 3), 5);
        assert_eq!(default_level_budget(10, 2), 2);
        // 1000^(2/3) / 4 = 25
        assert_eq!(default_level_budget(1000, 2), 25);
        assert_eq!(target_t(500, 2, 1, None), 5);
        assert_eq!(target_t(4, 2, 2, None), 2);
        assert_eq!(target_t(4, 2, 2, Some(1)), 2);
        assert_eq!(target_t(4, 2, 2, Some(3)), 3);
    }

    #[test]
    fn line_with_override_returns_everything() {
        let p = line(&[0, 1, 3]);
        let mut req = FindRequest::new(2);
        req.t_override = Some(3);
        let r = find_subset(&p, &req).unwrap();
        assert_eq!(r.subset, vec![0, 1, 2]);
        assert_eq!(r.certificate, Certificate::Rainbow);

        let r = find_subset(&p, &FindRequest::new(2)).unwrap();
        assert_eq!(r.t_target, 2);
        assert_eq!(r.observed_m, 1);
    }

    #[test]
    fn square_auto() {
        let r = find_subset(&square(), &FindRequest::new(2)).unwrap();
        assert_eq!(r.subset.len(), 2);
        assert_eq!(r.certificate, Certificate::Rainbow);
        assert_eq!(r.observed_m, 2);
    }

    #[test]
    fn augment_grows_rainbow_results() {
        let p = line(&[0, 1, 3, 7]);
        let mut req = FindRequest::new(2);
        req.augment = true;
        let r = find_subset(&p, &req).unwrap();
        assert_eq!(r.subset, vec![0, 1, 2, 3]);
        assert_eq!(r.stats.augmented_from, Some(2));
    }

    #[test]
    fn request_errors() {
        let p = square();
        assert!(find_subset(&p, &FindRequest::new(4)).is_err());
        let mut req = FindRequest::new(2);
        req.t_override = Some(5);
        assert!(find_subset(&p, &req).is_err());
        let mut req = FindRequest::new(2);
        req.t_override = Some(3);
        req.max_retries = 3;
        match find_subset(&p, &req) {
            Err(Error::Extraction(f)) => assert_eq!(f.samples_tried, 3),
            other => panic!("expected extraction failure, got {other:?}"),
        }
    }

    #[test]
    fn sphere_recursion_trace() {
        let p = generators::gen_cocircular_plus_noise(30, 100, 7).unwrap();
        let mut req = FindRequest::new(2);
        req.mode = Mode::Locus { m: Some(5) };
        let r = find_subset(&p, &req).unwrap();
        let first = &r.recursion_trace[0];
        assert_eq!(first.kind, LocusKind::Sphere);
        assert_eq!(first.tuple, vec![0]);
        assert_eq!(first.points_carried, 30);
        assert!(r.subset.iter().all(|&v| (1..=30).contains(&v)));
        assert!(verify_subset(&p, &r.subset, 2, Variant::H).unwrap().valid);
    }

    #[test]
    fn sphere_recursion_respects_depth_cap() {
        let p = generators::gen_cocircular_plus_noise(30, 20, 7).unwrap();
        let mut req = FindRequest::new(2);
        req.mode = Mode::Locus { m: Some(5) };
        req.recursion_depth_cap = Some(0);
        let r = find_subset(&p, &req).unwrap();
        assert_eq!(r.recursion_trace.len(), 1);
        assert_eq!(r.recursion_trace[0].kind, LocusKind::Fallback);
    }

    #[test]
    fn hyperplane_locus_gives_all_zero() {
        let p = line_with_parallel_pair();
        let mut req = FindRequest::new(3);
        req.mode = Mode::Locus { m: None };
        let r = find_subset(&p, &req).unwrap();
        assert_eq!(r.certificate, Certificate::AllZero);
        assert_eq!(r.subset, (0..40).collect::<Vec<_>>());
        assert_eq!(r.recursion_trace[0].kind, LocusKind::Hyperplanes);
        assert_eq!(r.recursion_trace[0].tuple, vec![40, 41]);
        for tri in crate::combinatorics::subsets_of(&r.subset, 3).take(200) {
            assert!(p.squared_volume(&tri).unwrap().is_zero());
        }
    }

    #[test]
    fn flat_scan_on_generic_extras() {
        let mut coords: Vec<Vec<i64>> = (0..40).map(|i| vec![i, 0]).collect();
        coords.extend([vec![3, 17], vec![-8, 5], vec![21, -13], vec![30, 29], vec![-2, -23]]);
        let p = PointSet::from_integers(2, &coords).unwrap();
        let (tuple, members) = largest_flat(&p).unwrap();
        assert_eq!(tuple, vec![0, 1]);
        assert_eq!(members, (0..40).collect::<Vec<_>>());

        let mut req = FindRequest::new(3);
        req.mode = Mode::Locus { m: None };
        let r = find_subset(&p, &req).unwrap();
        assert_eq!(r.certificate, Certificate::AllZero);
        assert_eq!(r.subset.len(), 40);
        // auto mode never looks for flats
        let r = find_subset(&p, &FindRequest::new(3)).unwrap();
        assert_eq!(r.certificate, Certificate::Rainbow);
    }

    #[test]
    fn flat_scan_skips_degenerate_tuples() {
        let p = PointSet::from_integers(
            3,
            &[vec![0, 0, 0], vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 0], vec![5, 7, 0], vec![1, 2, 3], vec![4, -1, 6]],
        )
        .unwrap();
        let (tuple, members) = largest_flat(&p).unwrap();
        assert_eq!(tuple, vec![0, 1, 3]);
        assert_eq!(members, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn hprime_rejects_degenerate_input() {
        let p = line_with_parallel_pair();
        let mut req = FindRequest::new(3);
        req.variant = Variant::HPrime;
        match find_subset(&p, &req) {
            Err(Error::NotGeneralPosition { witness, .. }) => assert_eq!(witness, vec![0, 1, 2]),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn hprime_on_general_position() {
        let p = generators::gen_random(2, 30, 1000, 4, None).unwrap();
        assert!(general_position_check(&p, 3).unwrap().ok);
        let mut req = FindRequest::new(3);
        req.variant = Variant::HPrime;
        let r = find_subset(&p, &req).unwrap();
        assert!(r.observed_m <= 4);
        let report = verify_subset(&p, &r.subset, 3, Variant::HPrime).unwrap();
        assert!(report.valid);
        assert_eq!(report.zero_edges, 0);
    }

    #[test]
    fn fixed_m_on_generic_points() {
        let p = generators::gen_random(2, 120, 1000, 8, None).unwrap();
        let mut req = FindRequest::new(2);
        req.mode = Mode::FixedM { m: 1 };
        let r = find_subset(&p, &req).unwrap();
        assert!(r.subset.len() >= 3);
        assert!(r.recursion_trace.is_empty());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn every_result_verifies(
            raw in proptest::collection::btree_set((0i64..6, 0i64..6), 3..14),
            a in 2usize..=3,
            mode_pick in 0usize..3,
            seed in 0u64..1000,
        ) {
            let coords: Vec<Vec<i64>> = raw.into_iter().map(|(x, y)| vec![x, y]).collect();
            let p = PointSet::from_integers(2, &coords).unwrap();
            let mut req = FindRequest::new(a);
            req.seed = seed;
            req.mode = [Mode::Auto, Mode::Locus { m: None }, Mode::FixedM { m: 2 }][mode_pick];
            match find_subset(&p, &req) {
                Ok(r) => {
                    let report = verify_subset(&p, &r.subset, a, Variant::H).unwrap();
                    proptest::prop_assert!(report.valid);
                    if r.certificate == Certificate::AllZero {
                        proptest::prop_assert_eq!(report.zero_edges, report.edges_checked);
                    }
                    proptest::prop_assert!(r.subset.windows(2).all(|w| w[0] < w[1]));
                }
                Err(Error::Extraction(_)) => {}
                Err(e) => proptest::prop_assert!(false, "unexpected error {}", e),
            }
        }
    }

    #[test]
    fn deterministic_given_request() {
        let p = generators::gen_grid(2, 5).unwrap();
        for mode in [Mode::Auto, Mode::Locus { m: None }, Mode::FixedM { m: 3 }] {
            let mut req = FindRequest::new(2);
            req.mode = mode;
            req.seed = 11;
            let x = find_subset(&p, &req);
            let y = find_subset(&p, &req);
            assert_eq!(format!("{x:?}"), format!("{y:?}"));
        }
    }
}
