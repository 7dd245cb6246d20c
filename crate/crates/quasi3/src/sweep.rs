//! Parameter grids and seeded samplers for the lattice-path identities.
//! Instances are evaluated in parallel; results keep instance order.

use quasi3_core::arith::{binom, rat};
use quasi3_core::paths::{
    count_paths_dp, count_paths_formula, reflect, verify_thm1, verify_thm2, PathProblem, Point, Thm1Params, Thm1Report,
    Thm2Params, Thm2Report,
};
use quasi3_core::{ExactInteger, Monomial, Polynomial, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Largest endpoint coordinate in the exhaustive grids.
pub const GRID_BOUND: i64 = 12;

/// Every applicable Thm2 instance with `n` in `1..=3`, all endpoint
/// coordinates in `0..=GRID_BOUND`, step sizes `b, d` in `1..=3` and a
/// barrier `0 <= c + e <= 2 * GRID_BOUND + 1`.
pub fn thm2_grid() -> Vec<Thm2Params> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let nn = n as i64;
        for b in 1..=3 {
            for d in 1..=3 {
                for a in 0..=GRID_BOUND - b * nn {
                    for c in 0..=GRID_BOUND - d * nn {
                        for l in 0..=2 * GRID_BOUND + 1 {
                            let p = Thm2Params { a, b, c, d, e: l - c, n };
                            if p.applicability().is_ok() {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn run_thm2(params: &[Thm2Params], budget: u64) -> Vec<Thm2Report> {
    params.par_iter().map(|&p| verify_thm2(p, budget)).collect()
}

/// Applicable Thm1 tuples drawn from a seeded generator until `count` are
/// found or `max_draws` is exhausted. `alpha` and `beta` are nonzero so
/// starts and ends are distinct; sizes `k = 1, 2, 3` are equally represented.
pub fn thm1_samples(seed: u64, count: usize, max_draws: usize) -> Vec<Thm1Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let per_k = count.div_ceil(3);
    let mut filled = [0usize; 3];
    for _ in 0..max_draws {
        if out.len() == count {
            break;
        }
        let p = Thm1Params {
            c: rng.gen_range(0..=14),
            d: rng.gen_range(-3..=8),
            e: rng.gen_range(0..=12),
            alpha: nonzero(&mut rng, 3),
            beta: nonzero(&mut rng, 3),
            k: rng.gen_range(1..=3),
        };
        if filled[p.k - 1] < per_k && p.applicability().is_ok() && max_coordinate(&p) <= 2 * GRID_BOUND {
            filled[p.k - 1] += 1;
            out.push(p);
        }
    }
    out
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

fn max_coordinate(p: &Thm1Params) -> i64 {
    p.starts().into_iter().chain(p.ends()).map(|q| q.0.max(q.1)).max().unwrap_or(0)
}

pub fn run_thm1(params: &[Thm1Params], budget: u64) -> Vec<Thm1Report> {
    params.par_iter().map(|&p| verify_thm1(p, budget).expect("sampled tuples have nonzero denominators")).collect()
}

/// One configuration of the single-path reflection check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionCase {
    pub s: i64,
    pub t: i64,
    pub barrier: i64,
    pub formula: ExactInteger,
    pub dp: ExactInteger,
}

/// Compares the closed form with the DP for paths from `(s, s)` to
/// `(0, t)`, for every `s, t` in `0..=bound` and every barrier that leaves
/// both endpoints strictly on one side. Returns the number of
/// configurations checked and the mismatches.
pub fn reflection_grid(bound: i64) -> (usize, Vec<ReflectionCase>) {
    let cases: Vec<(i64, i64, i64)> = (0..=bound)
        .flat_map(|s| (0..=bound).flat_map(move |t| (0..=2 * bound + 1).map(move |l| (s, t, l))))
        .filter(|&(s, t, l)| {
            let (u, v) = (2 * s, t);
            (u < l && v < l) || (u > l && v > l)
        })
        .collect();
    let bad: Vec<ReflectionCase> = cases
        .par_iter()
        .filter_map(|&(s, t, l)| {
            let f = count_paths_formula(t, 0, s, 0, l - s, 1, 1);
            let dp = PathProblem::new((s, s), (0, t), Some(l)).map(|p| count_paths_dp(&p)).unwrap_or_default();
            (f != dp).then_some(ReflectionCase { s, t, barrier: l, formula: f, dp })
        })
        .collect();
    (cases.len(), bad)
}

/// Start, end and barrier of a single path count.
pub type Configuration = (Point, Point, i64);

fn free_count(from: Point, to: Point) -> ExactInteger {
    let (w, n) = (from.0 - to.0, to.1 - from.1);
    if w < 0 || n < 0 {
        ExactInteger::default()
    } else {
        binom(w + n, w)
    }
}

/// The reflection principle in general position: for every start and end
/// with coordinates in `0..=bound`, end reachable from start, and every
/// barrier with both endpoints strictly on one side, the DP count equals
/// the free count minus the free count to the reflected end. Returns the
/// number of configurations checked and the failing ones.
pub fn reflection_general(bound: i64) -> (usize, Vec<Configuration>) {
    let pairs: Vec<(Point, Point)> = (0..=bound)
        .flat_map(|x0| (0..=bound).map(move |y0| (x0, y0)))
        .flat_map(|s| (0..=s.0).flat_map(move |x1| (s.1..=bound).map(move |y1| (s, (x1, y1)))))
        .collect();
    let results: Vec<(usize, Vec<Configuration>)> = pairs
        .par_iter()
        .map(|&(s, e)| {
            let mut n = 0;
            let mut bad = Vec::new();
            for l in 0..=2 * bound + 1 {
                let (u, v) = (s.0 + s.1, e.0 + e.1);
                if !((u < l && v < l) || (u > l && v > l)) {
                    continue;
                }
                n += 1;
                let dp = count_paths_dp(&PathProblem::new(s, e, Some(l)).expect("reachable"));
                if dp != free_count(s, e) - free_count(s, reflect(e, l)) {
                    bad.push((s, e, l));
                }
            }
            (n, bad)
        })
        .collect();
    let n = results.iter().map(|r| r.0).sum();
    (n, results.into_iter().flat_map(|r| r.1).collect())
}

/// Random polynomial of total degree at most `max_deg` with small rational
/// coefficients.
pub fn random_polynomial(rng: &mut ChaCha8Rng, max_deg: u32) -> Polynomial {
    let terms = rng.gen_range(1..=10);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let a = rng.gen_range(0..=max_deg);
        let b = rng.gen_range(0..=max_deg - a);
        let c = rng.gen_range(0..=max_deg - a - b);
        let coeff = rat(rng.gen_range(-20..=20), rng.gen_range(1..=6));
        p.add_term(Monomial::new(a, b, c), coeff);
    }
    p
}

pub fn random_polynomials(seed: u64, count: usize, max_deg: u32) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_polynomial(&mut rng, max_deg)).collect()
}

/// Random Thm2 tuples, applicable or not, for the sweep report.
pub fn thm2_random(seed: u64, trials: usize) -> Vec<Thm2Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(1..=3usize);
            let (b, d) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let a = rng.gen_range(0..=GRID_BOUND - b * n as i64);
            let c = rng.gen_range(0..=GRID_BOUND - d * n as i64);
            let l = rng.gen_range(0..=2 * GRID_BOUND + 1);
            Thm2Params { a, b, c, d, e: l - c, n }
        })
        .collect()
}

/// Counts of each verdict among the given ones.
pub fn tally(verdicts: impl IntoIterator<Item = Verdict>) -> [usize; 3] {
    let mut t = [0; 3];
    for v in verdicts {
        t[match v {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Skipped => 2,
        }] += 1;
    }
    t
}
