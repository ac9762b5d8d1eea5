//! Rainbow-clique extraction by sampling and deletion.
//!
//! In an m-good coloring on `n >= 4 m t^(2a-1)` vertices, a uniform random
//! `2t`-subset contains at most `t` same-colored edge pairs in expectation.
//! [`extract_rainbow`] draws samples until one has at most `t` such pairs,
//! then deletes a vertex per remaining pair, leaving at least `t` vertices
//! whose volume-colored edges all differ.
//!
//! [`extract_rainbow_fast`] additionally scans each sample for a bad edge,
//! i.e. an (a-1)-tuple whose largest volume class exceeds `m`. Such a tuple
//! is returned to the caller, who can restrict the search to that locus.

use std::collections::BTreeMap;

use rand::SeedableRng;
use serde::Serialize;

use crate::coloring::{ColorKey, Coloring, ZERO_COLOR};
use crate::combinatorics::{insert_sorted, subsets, subsets_of};
use crate::error::Error;
use crate::parallel;
use crate::rng;

pub const DEFAULT_MAX_RETRIES: usize = 64;

/// Two distinct edges of equal volume color sharing `shared` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub shared: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictStats {
    pub sample: Vec<usize>,
    /// Empty when only counts were requested.
    pub pairs: Vec<ConflictPair>,
    pub pair_count: u64,
    /// Pair counts indexed by intersection size `0..a`.
    pub per_s_counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowResult {
    pub subset: Vec<usize>,
    pub retries_used: usize,
    pub seed: u64,
    pub conflicts_in_accepted_sample: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadEdgeWitness {
    pub edge: Vec<usize>,
    pub tuple: Vec<usize>,
    pub color: ColorKey,
    pub extensions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub samples_tried: usize,
    pub sample_size: usize,
    /// Largest conflict count a sample may have and still be accepted.
    pub accept_threshold: u64,
    /// Sample with the fewest conflict pairs (earliest on ties).
    pub best: ConflictStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Extraction {
    Rainbow(RainbowResult),
    BadEdge(BadEdgeWitness),
    Failed(Failure),
}

fn attempt_rng(seed: u64, attempt: usize) -> rng::Rng {
    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(attempt as u64);
    r
}

/// Same-colored volume edge pairs inside `sample`, grouped by color.
/// Pairs are listed only if `materialize`.
pub fn conflicts_within(coloring: &Coloring<'_>, sample: &[usize], materialize: bool) -> ConflictStats {
    let a = coloring.a();
    let mut sample = sample.to_vec();
    sample.sort_unstable();
    let mut colored: Vec<(u32, Vec<usize>)> = subsets_of(&sample, a)
        .filter_map(|e| {
            let c = coloring.color_id(&e);
            (c != ZERO_COLOR).then_some((c, e))
        })
        .collect();
    colored.sort_unstable();

    let mut per_s_counts = vec![0u64; a];
    let mut pairs = Vec::new();
    for group in colored.chunk_by(|x, y| x.0 == y.0) {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let s = shared(&group[i].1, &group[j].1);
                per_s_counts[s] += 1;
                if materialize {
                    pairs.push(ConflictPair {
                        first: group[i].1.clone(),
                        second: group[j].1.clone(),
                        shared: s,
                    });
                }
            }
        }
    }
    ConflictStats {
        sample,
        pairs,
        pair_count: per_s_counts.iter().sum(),
        per_s_counts,
    }
}

fn shared(x: &[usize], y: &[usize]) -> usize {
    x.iter().filter(|v| y.binary_search(v).is_ok()).count()
}

/// Draw a uniform `2t`-sample and list its conflict pairs.
pub fn sample_conflicts(coloring: &Coloring<'_>, t: usize, seed: u64) -> Result<ConflictStats, Error> {
    let n = coloring.n();
    if n < 2 * t {
        return Err(Error::TooFewPoints { n, needed: 2 * t });
    }
    let sample = rng::sample_ids(&mut attempt_rng(seed, 0), n, 2 * t);
    Ok(conflicts_within(coloring, &sample, true))
}

/// Exhaustive same-color pair counts over the whole coloring, by
/// intersection size `0..a`.
pub fn global_pair_counts(coloring: &Coloring<'_>) -> Vec<u64> {
    let all: Vec<usize> = (0..coloring.n()).collect();
    conflicts_within(coloring, &all, false).per_s_counts
}

/// Greedily delete the vertex in the most remaining pairs (smallest id on
/// ties) until no pair survives.
fn delete_conflicts(sample: &[usize], pairs: &[ConflictPair]) -> Vec<usize> {
    let mut alive: Vec<&ConflictPair> = pairs.iter().collect();
    let mut removed: Vec<usize> = Vec::new();
    while !alive.is_empty() {
        let mut cover: BTreeMap<usize, usize> = BTreeMap::new();
        for p in &alive {
            let mut verts = p.first.clone();
            verts.extend(&p.second);
            verts.sort_unstable();
            verts.dedup();
            for v in verts {
                *cover.entry(v).or_default() += 1;
            }
        }
        let (&victim, _) = cover
            .iter()
            .max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(x.0)))
            .expect("alive pairs cover some vertex");
        removed.push(victim);
        alive.retain(|p| !p.first.contains(&victim) && !p.second.contains(&victim));
    }
    sample.iter().copied().filter(|v| !removed.contains(v)).collect()
}

/// True when all volume-colored edges inside `ids` have distinct colors.
pub fn is_rainbow(coloring: &Coloring<'_>, ids: &[usize]) -> bool {
    conflicts_within(coloring, ids, false).pair_count == 0
}

fn check_budget(t: usize, m: usize) -> Result<(), Error> {
    if t == 0 {
        return Err(crate::error::out_of_range("t", t, ">= 1"));
    }
    if m == 0 {
        return Err(crate::error::out_of_range("m", m, ">= 1"));
    }
    Ok(())
}

fn trivial(coloring: &Coloring<'_>, t: usize, seed: u64) -> Option<RainbowResult> {
    (t <= coloring.a()).then(|| RainbowResult {
        subset: (0..t).collect(),
        retries_used: 0,
        seed,
        conflicts_in_accepted_sample: 0,
    })
}

fn run(
    coloring: &Coloring<'_>,
    t: usize,
    m: usize,
    seed: u64,
    max_retries: usize,
    scan_bad_edges: bool,
) -> Result<Extraction, Error> {
    check_budget(t, m)?;
    if let Some(r) = trivial(coloring, t, seed) {
        return Ok(Extraction::Rainbow(r));
    }
    let n = coloring.n();
    if n < t {
        return Err(Error::TooFewPoints { n, needed: t });
    }
    // with fewer than 2t points the whole set is the only sample
    let size = (2 * t).min(n);
    let threshold = (size - t) as u64;
    let attempts = max_retries.max(1);

    let mut best: Option<ConflictStats> = None;
    for attempt in 0..attempts {
        let sample = rng::sample_ids(&mut attempt_rng(seed, attempt), n, size);
        if scan_bad_edges {
            if let Some(w) = find_bad_edge(coloring, &sample, m) {
                return Ok(Extraction::BadEdge(w));
            }
        }
        let stats = conflicts_within(coloring, &sample, false);
        if stats.pair_count <= threshold {
            let full = conflicts_within(coloring, &sample, true);
            let subset = delete_conflicts(&full.sample, &full.pairs);
            assert!(subset.len() >= t, "deletion removes at most one vertex per pair");
            assert!(is_rainbow(coloring, &subset), "deletion leaves a rainbow set");
            return Ok(Extraction::Rainbow(RainbowResult {
                subset,
                retries_used: attempt,
                seed,
                conflicts_in_accepted_sample: full.pair_count,
            }));
        }
        if best.as_ref().is_none_or(|b| stats.pair_count < b.pair_count) {
            best = Some(stats);
        }
    }
    Ok(Extraction::Failed(Failure {
        seed,
        samples_tried: attempts,
        sample_size: size,
        accept_threshold: threshold,
        best: best.expect("at least one attempt"),
    }))
}

/// Sample-and-delete extraction of a rainbow set of size at least `t`.
///
/// `m` is only used for validation here; the expectation argument needs the
/// coloring to be m-good for `n >= 4 m t^(2a-1)`, but any coloring is
/// accepted and a run simply fails after `max_retries` rejected samples.
/// Returns either [`Extraction::Rainbow`] or [`Extraction::Failed`].
pub fn extract_rainbow(
    coloring: &Coloring<'_>,
    t: usize,
    m: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Extraction, Error> {
    run(coloring, t, m, seed, max_retries, false)
}

/// As [`extract_rainbow`], but every sample is first searched for a bad edge
/// with budget `m`; the first one found is returned instead.
pub fn extract_rainbow_fast(
    coloring: &Coloring<'_>,
    t: usize,
    m: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Extraction, Error> {
    run(coloring, t, m, seed, max_retries, true)
}

/// First (a-1)-tuple of `pool` (lexicographic) whose largest volume class
/// over the whole ground set exceeds `m`. The reported edge prefers an
/// extension inside `pool`.
pub fn find_bad_edge(coloring: &Coloring<'_>, pool: &[usize], m: usize) -> Option<BadEdgeWitness> {
    let mut pool = pool.to_vec();
    pool.sort_unstable();
    pool.dedup();
    let tuples: Vec<Vec<usize>> = subsets(pool.len(), coloring.a() - 1)
        .map(|idx| idx.into_iter().map(|i| pool[i]).collect())
        .collect();
    parallel::find_map_first(&tuples, |tuple| {
        let (id, extensions) = coloring.largest_class(tuple)?;
        if extensions.len() <= m {
            return None;
        }
        let pick = extensions
            .iter()
            .copied()
            .find(|v| pool.binary_search(v).is_ok())
            .unwrap_or(extensions[0]);
        let mut edge = Vec::new();
        insert_sorted(tuple, pick, &mut edge);
        Some(BadEdgeWitness {
            color: coloring.key_of(id, &edge),
            edge,
            tuple: tuple.clone(),
            extensions,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;
    use crate::coloring::build_coloring;
    use crate::generators;
    use crate::geometry::{squared_distance, PointSet};

    fn square() -> PointSet {
        PointSet::from_integers(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn line4() -> PointSet {
        PointSet::from_integers(1, &[vec![0], vec![1], vec![2], vec![3]]).unwrap()
    }

    /// Same-colored pairs by brute force over all pairs of edges.
    fn brute_pair_counts(c: &Coloring<'_>) -> Vec<u64> {
        let edges: Vec<(Vec<usize>, ColorKey)> = c.edges().collect();
        let mut counts = vec![0u64; c.a()];
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if !edges[i].1.is_zero() && edges[i].1 == edges[j].1 {
                    counts[shared(&edges[i].0, &edges[j].0)] += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn square_sample_has_seven_pairs() {
        let p = square();
        let c = build_coloring(&p, 2).unwrap();
        let stats = sample_conflicts(&c, 2, 0).unwrap();
        assert_eq!(stats.sample, vec![0, 1, 2, 3]);
        assert_eq!(stats.pair_count, 7);
        assert_eq!(stats.pairs.len(), 7);
        // 4 unit sides: 2 disjoint pairs, 4 adjacent; 2 diagonals: disjoint
        assert_eq!(stats.per_s_counts, vec![3, 4]);
        assert!(matches!(sample_conflicts(&c, 3, 0), Err(Error::TooFewPoints { .. })));
    }

    #[test]
    fn line_sample_contains_adjacent_pair() {
        let p = line4();
        let c = build_coloring(&p, 2).unwrap();
        let stats = sample_conflicts(&c, 2, 1).unwrap();
        assert!(stats.pairs.contains(&ConflictPair {
            first: vec![0, 1],
            second: vec![1, 2],
            shared: 1
        }));
    }

    #[test]
    fn distinct_colors_have_no_conflicts() {
        let p = generators::gen_random(2, 12, 1000, 3, None).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        assert_eq!(c.goodness(None).observed_m, 1);
        let stats = sample_conflicts(&c, 6, 11).unwrap();
        assert_eq!(stats.pair_count, 0);
        assert!(stats.pairs.is_empty());
    }

    #[test]
    fn global_counts_match_brute_force() {
        for seed in 0..5 {
            let p = generators::gen_random(2, 9, 3, seed, Some(1)).unwrap();
            for a in [2, 3] {
                let c = build_coloring(&p, a).unwrap();
                assert_eq!(global_pair_counts(&c), brute_pair_counts(&c));
            }
        }
        let g = generators::gen_grid(2, 3).unwrap();
        let c = build_coloring(&g, 2).unwrap();
        assert_eq!(global_pair_counts(&c), brute_pair_counts(&c));
    }

    #[test]
    fn trivial_when_t_at_most_a() {
        let p = square();
        let c = build_coloring(&p, 2).unwrap();
        let Extraction::Rainbow(r) = extract_rainbow(&c, 2, 1, 5, 4).unwrap() else {
            panic!("expected rainbow");
        };
        assert_eq!(r.subset, vec![0, 1]);
        assert_eq!(r.retries_used, 0);
        assert!(matches!(
            extract_rainbow_fast(&c, 1, 1, 5, 4).unwrap(),
            Extraction::Rainbow(_)
        ));
    }

    #[test]
    fn square_cannot_yield_three() {
        let p = square();
        let c = build_coloring(&p, 2).unwrap();
        let Extraction::Failed(f) = extract_rainbow(&c, 3, 1, 0, 4).unwrap() else {
            panic!("square has no distinct-distance triple");
        };
        assert_eq!(f.samples_tried, 4);
        assert_eq!(f.best.pair_count, 7);
    }

    #[test]
    fn generic_points_succeed() {
        let p = generators::gen_random(2, 200, 1_000_000, 17, None).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        assert!(p.len() as u64 >= bounds::g_upper(2, 1, 3).unwrap().try_into().unwrap_or(u64::MAX));
        for seed in 0..10 {
            let Extraction::Rainbow(r) = extract_rainbow(&c, 3, 1, seed, 64).unwrap() else {
                panic!("seed {seed} failed");
            };
            assert!(r.subset.len() >= 3);
            assert!(is_rainbow(&c, &r.subset));
            let Extraction::Rainbow(_) = extract_rainbow_fast(&c, 3, 1, seed, 64).unwrap() else {
                panic!("fast seed {seed} failed");
            };
        }
    }

    #[test]
    fn extraction_is_deterministic() {
        let p = generators::gen_grid(2, 6).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        for seed in 0..5 {
            assert_eq!(
                extract_rainbow(&c, 4, 1, seed, 16).unwrap(),
                extract_rainbow(&c, 4, 1, seed, 16).unwrap()
            );
        }
    }

    #[test]
    fn deletion_removes_at_most_one_vertex_per_pair() {
        let pairs = vec![
            ConflictPair { first: vec![0, 1], second: vec![1, 2], shared: 1 },
            ConflictPair { first: vec![1, 3], second: vec![4, 5], shared: 0 },
            ConflictPair { first: vec![6, 7], second: vec![8, 9], shared: 0 },
        ];
        let kept = delete_conflicts(&(0..10).collect::<Vec<_>>(), &pairs);
        // vertex 1 covers two pairs; then 6 is the smallest of the tied rest
        assert_eq!(kept, vec![0, 2, 3, 4, 5, 7, 8, 9]);
    }

    #[test]
    fn bad_edge_on_a_line() {
        let p = line4();
        let c = build_coloring(&p, 2).unwrap();
        let w = find_bad_edge(&c, &[0, 1, 2, 3], 1).unwrap();
        assert_eq!(w.tuple, vec![1]);
        assert_eq!(w.extensions, vec![0, 2]);
        assert_eq!(w.color, ColorKey::volume(1.into()));
        assert!(find_bad_edge(&c, &[0, 1, 2, 3], 2).is_none());

        let g = generators::gen_random(2, 5, 1000, 42, None).unwrap();
        let cg = build_coloring(&g, 2).unwrap();
        assert!(find_bad_edge(&cg, &[0, 1, 2, 3, 4], 1).is_none());
    }

    #[test]
    fn fast_extraction_reports_circle_center() {
        let p = generators::gen_cocircular_plus_noise(30, 0, 0).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        // t = 16 samples 31 of 31 points, so the center is always present
        let Extraction::BadEdge(w) = extract_rainbow_fast(&c, 16, 5, 0, 4).unwrap() else {
            panic!("expected a bad edge");
        };
        assert_eq!(w.tuple, vec![0]);
        assert_eq!(w.extensions.len(), 30);
        for &v in &w.extensions {
            assert_eq!(squared_distance(p.coords(0), p.coords(v)), 1.into());
        }
    }

    #[test]
    fn fast_witness_always_exceeds_budget() {
        let p = generators::gen_grid(2, 5).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        for m in 1..6 {
            for seed in 0..6 {
                if let Extraction::BadEdge(w) = extract_rainbow_fast(&c, 5, m, seed, 8).unwrap() {
                    assert!(w.extensions.len() > m);
                    assert_eq!(c.color_class(&w.tuple, &w.color).unwrap(), w.extensions);
                    assert!(w.edge.windows(2).all(|x| x[0] < x[1]));
                }
            }
        }
    }

    #[test]
    fn a_s_within_upper_bound_on_small_sets() {
        for seed in 0..6 {
            let p = generators::gen_random(2, 14, 4, seed, Some(1)).unwrap();
            for a in [2usize, 3] {
                let c = build_coloring(&p, a).unwrap();
                let m = c.goodness(None).observed_m as u64;
                for (s, &count) in global_pair_counts(&c).iter().enumerate() {
                    let bound = bounds::as_upper(a as u64, m, p.len() as u64, s as u64).unwrap();
                    assert!(crate::Rational::from(count as i64) <= bound, "a={a} s={s}");
                }
            }
        }
    }

    #[test]
    fn expected_conflicts_within_bound() {
        // n = 4 m t^(2k-1) with k = 2, m = 1, t = 3
        let (t, m) = (3usize, 1usize);
        let n = 4 * m * t.pow(3);
        let p = generators::gen_random(2, n, 1_000_000, 99, None).unwrap();
        let c = build_coloring(&p, 2).unwrap();
        assert!(c.goodness(None).observed_m <= m);
        let counts: Vec<f64> = (0..100)
            .map(|seed| sample_conflicts(&c, t, seed).unwrap().pair_count as f64)
            .collect();
        let mean = counts.iter().sum::<f64>() / counts.len() as f64;
        let var = counts.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (counts.len() - 1) as f64;
        let stderr = (var / counts.len() as f64).sqrt();
        assert!(mean <= t as f64 + 3.0 * stderr);
    }
}
