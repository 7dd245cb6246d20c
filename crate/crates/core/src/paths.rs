//! Lattice paths with NORTH and WEST unit steps that avoid a diagonal
//! barrier `x + y = L`, and exact checks of the two binomial-determinant
//! identities that count non-intersecting families of such paths.
//!
//! "Avoid" is strict throughout: no vertex of a path, endpoints included,
//! may lie on the barrier.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binom, rat_int, ExactInteger, ExactRational};
use crate::linsys::{det_integer, BlockKind, Matrix};
use crate::Verdict;

pub type Point = (i64, i64);

/// Default cap on the product of individual path counts that a brute-force
/// family enumeration may face.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("end {end:?} is not reachable from {start:?} with NORTH/WEST steps")]
    Unreachable { start: Point, end: Point },
    #[error("{starts} start points but {ends} end points")]
    Mismatch { starts: usize, ends: usize },
    #[error("enumeration would face {required} path tuples, over the budget of {budget}")]
    BudgetExceeded { required: ExactInteger, budget: u64 },
    #[error("instance is inapplicable: {0}")]
    Inapplicable(Inapplicable),
}

/// Why an identity instance falls outside the range where it is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum Inapplicable {
    #[error("no paths requested")]
    Empty,
    #[error("an endpoint has a negative coordinate")]
    NegativeCoordinate,
    #[error("start and end sequences run in opposite directions")]
    CrossedOrientation,
    #[error("an endpoint lies on the barrier")]
    EndpointOnBarrier,
    #[error("the barrier separates some start from some end")]
    BarrierSeparates,
    #[error("a denominator binomial vanishes")]
    ZeroDenominator,
}

fn on_barrier(p: Point, barrier: Option<i64>) -> bool {
    barrier.is_some_and(|l| p.0 + p.1 == l)
}

/// One NORTH/WEST path from `start` to `end` avoiding `x + y = barrier`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathProblem {
    pub start: Point,
    pub end: Point,
    pub barrier: Option<i64>,
}

impl PathProblem {
    pub fn new(start: Point, end: Point, barrier: Option<i64>) -> Result<Self, PathError> {
        if end.0 > start.0 || end.1 < start.1 {
            return Err(PathError::Unreachable { start, end });
        }
        Ok(PathProblem { start, end, barrier })
    }

    /// Number of steps in every path.
    pub fn len(&self) -> u64 {
        ((self.start.0 - self.end.0) + (self.end.1 - self.start.1)) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Such instances always count zero; callers may want to flag them.
    pub fn endpoint_on_barrier(&self) -> bool {
        on_barrier(self.start, self.barrier) || on_barrier(self.end, self.barrier)
    }
}

/// Counts barrier-avoiding paths by dynamic programming over the rectangle
/// spanned by the endpoints, with every state on the barrier zeroed.
pub fn count_paths_dp(p: &PathProblem) -> ExactInteger {
    count_between(p.start, p.end, p.barrier)
}

/// Like [`count_paths_dp`] but returns zero for unreachable ends.
fn count_between(start: Point, end: Point, barrier: Option<i64>) -> ExactInteger {
    if end.0 > start.0 || end.1 < start.1 {
        return ExactInteger::zero();
    }
    let width = (start.0 - end.0) as usize + 1;
    let height = (end.1 - start.1) as usize + 1;
    // row[w] holds the count at (start.0 - w, y) for the current y.
    let mut row = alloc::vec![ExactInteger::zero(); width];
    for h in 0..height {
        let y = start.1 + h as i64;
        for w in 0..width {
            let x = start.0 - w as i64;
            if on_barrier((x, y), barrier) {
                row[w] = ExactInteger::zero();
                continue;
            }
            if h == 0 && w == 0 {
                row[0] = ExactInteger::one();
                continue;
            }
            // row[w] currently holds the value from below (y - 1).
            let from_east = if w > 0 { row[w - 1].clone() } else { ExactInteger::zero() };
            let from_south = if h > 0 { core::mem::take(&mut row[w]) } else { ExactInteger::zero() };
            row[w] = from_east + from_south;
        }
    }
    row[width - 1].clone()
}

/// Mirror image of `p` across the line `x + y = l`.
pub fn reflect(p: Point, l: i64) -> Point {
    (l - p.1, l - p.0)
}

/// `C(a+bi, c+dj) - C(a+bi, e-dj)`: the reflection-principle count of paths
/// from `(c+dj, c+dj)` to `(0, a+bi)` avoiding `x + y = c + e`, valid when
/// both endpoints lie strictly on the same side of the barrier.
pub fn count_paths_formula(a: i64, b: i64, c: i64, d: i64, e: i64, i: i64, j: i64) -> ExactInteger {
    let top = a + b * i;
    binom(top, c + d * j) - binom(top, e - d * j)
}

/// `k` paths joining `starts[t]` to `ends[t]`, all avoiding the barrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyProblem {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub barrier: Option<i64>,
}

struct Occupancy {
    min: Point,
    width: usize,
    cells: Vec<bool>,
}

impl Occupancy {
    fn index(&self, p: Point) -> usize {
        (p.1 - self.min.1) as usize * self.width + (p.0 - self.min.0) as usize
    }
}

/// Counts `k`-tuples of pairwise vertex-disjoint barrier-avoiding paths by
/// explicit enumeration. Refuses, with [`PathError::BudgetExceeded`], when
/// the product of the individual path counts exceeds `budget`.
pub fn count_families_bruteforce(fp: &FamilyProblem, budget: u64) -> Result<ExactInteger, PathError> {
    let k = fp.starts.len();
    if k != fp.ends.len() {
        return Err(PathError::Mismatch { starts: k, ends: fp.ends.len() });
    }
    if k == 0 {
        return Ok(ExactInteger::one());
    }
    let mut required = ExactInteger::one();
    for (s, e) in fp.starts.iter().zip(&fp.ends) {
        required *= count_between(*s, *e, fp.barrier);
    }
    if required.is_zero() {
        return Ok(required);
    }
    if required > ExactInteger::from(budget) {
        return Err(PathError::BudgetExceeded { required, budget });
    }
    let min_x = fp.ends.iter().map(|p| p.0).min().unwrap_or(0);
    let max_x = fp.starts.iter().map(|p| p.0).max().unwrap_or(0);
    let min_y = fp.starts.iter().map(|p| p.1).min().unwrap_or(0);
    let max_y = fp.ends.iter().map(|p| p.1).max().unwrap_or(0);
    let width = (max_x - min_x + 1) as usize;
    let height = (max_y - min_y + 1) as usize;
    let mut occ = Occupancy { min: (min_x, min_y), width, cells: alloc::vec![false; width * height] };
    let mut total = 0u64;
    place(fp, 0, fp.starts[0], &mut occ, &mut total);
    Ok(ExactInteger::from(total))
}

fn place(fp: &FamilyProblem, t: usize, pos: Point, occ: &mut Occupancy, total: &mut u64) {
    if on_barrier(pos, fp.barrier) {
        return;
    }
    let idx = occ.index(pos);
    if occ.cells[idx] {
        return;
    }
    occ.cells[idx] = true;
    let end = fp.ends[t];
    if pos == end {
        if t + 1 == fp.starts.len() {
            *total += 1;
        } else {
            place(fp, t + 1, fp.starts[t + 1], occ, total);
        }
    } else {
        if pos.1 < end.1 {
            place(fp, t, (pos.0, pos.1 + 1), occ, total);
        }
        if pos.0 > end.0 {
            place(fp, t, (pos.0 - 1, pos.1), occ, total);
        }
    }
    occ.cells[idx] = false;
}

fn check_family_geometry(starts: &[Point], ends: &[Point], barrier: i64, below_only: bool) -> Result<(), Inapplicable> {
    if starts.is_empty() {
        return Err(Inapplicable::Empty);
    }
    if starts.iter().chain(ends).any(|p| p.0 < 0 || p.1 < 0) {
        return Err(Inapplicable::NegativeCoordinate);
    }
    let monotone_dir = |pts: &[Point]| -> i32 {
        let ys: Vec<i64> = pts.iter().map(|p| p.1).collect();
        if ys.windows(2).all(|w| w[0] <= w[1]) {
            1
        } else if ys.windows(2).all(|w| w[0] >= w[1]) {
            -1
        } else {
            0
        }
    };
    let (ds, de) = (monotone_dir(starts), monotone_dir(ends));
    let constant = |pts: &[Point]| pts.windows(2).all(|w| w[0] == w[1]);
    if !(constant(starts) || constant(ends)) && (ds == 0 || de == 0 || ds != de) {
        return Err(Inapplicable::CrossedOrientation);
    }
    let sums = starts.iter().chain(ends).map(|p| p.0 + p.1);
    if sums.clone().any(|s| s == barrier) {
        return Err(Inapplicable::EndpointOnBarrier);
    }
    let all_below = sums.clone().all(|s| s < barrier);
    let all_above = !below_only && sums.clone().all(|s| s > barrier);
    if all_below || all_above {
        Ok(())
    } else {
        Err(Inapplicable::BarrierSeparates)
    }
}

/// Parameters of the determinant `det |C(a+bi, c+dj) - C(a+bi, e-dj)|`,
/// `i, j = 1..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm2Params {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub n: usize,
}

impl Thm2Params {
    pub fn matrix(&self) -> Matrix<ExactInteger> {
        let Thm2Params { a, b, c, d, e, n } = *self;
        Matrix::from_fn(n, n, |r, s| count_paths_formula(a, b, c, d, e, r as i64 + 1, s as i64 + 1))
    }

    /// `(c+dj, c+dj)` for `j = 1..n`.
    pub fn starts(&self) -> Vec<Point> {
        (1..=self.n as i64).map(|j| (self.c + self.d * j, self.c + self.d * j)).collect()
    }

    /// `(0, a+bi)` for `i = 1..n`.
    pub fn ends(&self) -> Vec<Point> {
        (1..=self.n as i64).map(|i| (0, self.a + self.b * i)).collect()
    }

    pub fn barrier(&self) -> i64 {
        self.c + self.e
    }

    pub fn family(&self) -> FamilyProblem {
        FamilyProblem { starts: self.starts(), ends: self.ends(), barrier: Some(self.barrier()) }
    }

    /// Whether every entry is a genuine path count and only the identity
    /// pairing admits disjoint families, i.e. where the identity is claimed.
    pub fn applicability(&self) -> Result<(), Inapplicable> {
        check_family_geometry(&self.starts(), &self.ends(), self.barrier(), false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm2Report {
    pub params: Thm2Params,
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub barrier: i64,
    pub det: ExactInteger,
    /// `None` when enumeration was over budget.
    pub family_count: Option<ExactInteger>,
    pub applicable: Result<(), Inapplicable>,
    /// `Skipped` when the family count is unavailable.
    pub verdict: Verdict,
}

pub fn verify_thm2(params: Thm2Params, budget: u64) -> Thm2Report {
    let det = det_integer(&params.matrix()).expect("square by construction");
    let fp = params.family();
    let family_count = count_families_bruteforce(&fp, budget).ok();
    let verdict = match &family_count {
        Some(c) => Verdict::from_bool(*c == det),
        None => Verdict::Skipped,
    };
    Thm2Report {
        params,
        starts: fp.starts,
        ends: fp.ends,
        barrier: params.barrier(),
        det,
        family_count,
        applicable: params.applicability(),
        verdict,
    }
}

/// Parameters of `det |C(C+αi, E+βj) - C(D-αi, E+βj)|`, `i, j = 1..k`.
/// Field `c` is `C`, `d` is `D`, `e` is `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm1Params {
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub alpha: i64,
    pub beta: i64,
    pub k: usize,
}

impl Thm1Params {
    pub fn matrix(&self) -> Matrix<ExactInteger> {
        let Thm1Params { c, d, e, alpha, beta, k } = *self;
        Matrix::from_fn(k, k, |r, s| {
            let (i, j) = (r as i64 + 1, s as i64 + 1);
            binom(c + alpha * i, e + beta * j) - binom(d - alpha * i, e + beta * j)
        })
    }

    /// `Π C(C+D, E+tβ) / Π C(C+D, C+tα)`; `None` when a denominator is zero.
    pub fn prefactor(&self) -> Option<ExactRational> {
        let top = self.c + self.d;
        let mut num = ExactInteger::one();
        let mut den = ExactInteger::one();
        for t in 1..=self.k as i64 {
            num *= binom(top, self.e + t * self.beta);
            den *= binom(top, self.c + t * self.alpha);
        }
        if den.is_zero() {
            None
        } else {
            Some(ExactRational::new(num, den))
        }
    }

    /// `(D - tα, D - tα)` for `t = 1..k`.
    pub fn starts(&self) -> Vec<Point> {
        (1..=self.k as i64).map(|t| (self.d - t * self.alpha, self.d - t * self.alpha)).collect()
    }

    /// `(0, C + D - E - tβ)` for `t = 1..k`.
    pub fn ends(&self) -> Vec<Point> {
        (1..=self.k as i64).map(|t| (0, self.c + self.d - self.e - t * self.beta)).collect()
    }

    pub fn barrier(&self) -> i64 {
        self.c + self.d
    }

    pub fn family(&self) -> FamilyProblem {
        FamilyProblem { starts: self.starts(), ends: self.ends(), barrier: Some(self.barrier()) }
    }

    /// Whether the instance is one where the factored identity is claimed.
    pub fn applicability(&self) -> Result<(), Inapplicable> {
        if self.prefactor().is_none() {
            return Err(Inapplicable::ZeroDenominator);
        }
        check_family_geometry(&self.starts(), &self.ends(), self.barrier(), true)
    }

    /// The instance whose matrix is the transpose of a diagonal block of
    /// the square coefficient submatrix for degree `d`: `α = -1`, `β = -2`,
    /// `D = -1`, `E = 2m + 1`.
    pub fn for_block(m: u32, d: u32, kind: BlockKind) -> Thm1Params {
        let (m, d) = (m as i64, d as i64);
        let (c, k) = match kind {
            BlockKind::Diagonal(f) => (d + 2 - f as i64, f as usize),
            BlockKind::Final => (d - m + 1, m as usize),
        };
        Thm1Params { c, d: -1, e: 2 * m + 1, alpha: -1, beta: -2, k }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm1Report {
    pub params: Thm1Params,
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub barrier: i64,
    pub det: ExactInteger,
    pub prefactor: ExactRational,
    pub family_count: Option<ExactInteger>,
    pub applicable: Result<(), Inapplicable>,
    pub verdict: Verdict,
}

/// Evaluates both sides of the factored identity. Zero denominators are
/// an error; an over-budget enumeration leaves the verdict `Skipped`.
pub fn verify_thm1(params: Thm1Params, budget: u64) -> Result<Thm1Report, PathError> {
    let prefactor = params.prefactor().ok_or(PathError::Inapplicable(Inapplicable::ZeroDenominator))?;
    let det = det_integer(&params.matrix()).expect("square by construction");
    let fp = params.family();
    let family_count = count_families_bruteforce(&fp, budget).ok();
    let verdict = match &family_count {
        Some(f) => Verdict::from_bool(rat_int(&det) == &prefactor * rat_int(f)),
        None => Verdict::Skipped,
    };
    Ok(Thm1Report {
        params,
        starts: fp.starts,
        ends: fp.ends,
        barrier: params.barrier(),
        det,
        prefactor,
        family_count,
        applicable: params.applicability(),
        verdict,
    })
}
