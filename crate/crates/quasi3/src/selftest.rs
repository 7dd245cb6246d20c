//! The ten acceptance criteria, each timed against its runtime limit.

use std::time::{Duration, Instant};

use num_traits::Zero;
use quasi3_core::arith::rat;
use quasi3_core::basis::{build_basis, BasisOptions, VerifyLevel};
use quasi3_core::group_ops::{verify_identities, Identity};
use quasi3_core::linsys::{build_system, det_integer, extract_blocks, nullspace, restrict_bm, BlockKind};
use quasi3_core::paths::{verify_thm1, Thm1Params};
use quasi3_core::quasi::{graded_qi_basis, hilbert_qi_dims, in_ideal_part, rank_modulo_ideal};
use quasi3_core::{build_a1, build_a2, det_exact, ExactInteger, Matrix, Monomial, Permutation, Polynomial, Verdict};
use serde::Serialize;

use crate::sweep;

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "golden polynomials", 1),
    (2, "golden matrix and blocks", 1),
    (3, "uniqueness of the null vector", 30),
    (4, "quasiinvariance and degrees", 60),
    (5, "Hilbert series dimensions", 60),
    (6, "quotient independence", 120),
    (7, "Thm2 exhaustive grid", 300),
    (8, "Thm1 block and sampled instances", 300),
    (9, "reflection principle", 30),
    (10, "group algebra identities", 10),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub verdict: String,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: u64,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<34} {:<4} {:>8.3}s / {:>3}s  {}",
            self.id,
            self.name,
            self.verdict.to_uppercase(),
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub budget: u64,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { budget: quasi3_core::paths::DEFAULT_BUDGET, seed: 2024 }
    }
}

pub fn run(id: u8, cfg: &SelftestConfig) -> Option<CriterionResult> {
    let &(_, name, limit) = CRITERIA.iter().find(|c| c.0 == id)?;
    let t0 = Instant::now();
    let (ok, detail) = match id {
        1 => golden_polynomials(),
        2 => golden_matrix(),
        3 => uniqueness(),
        4 => quasiinvariance(),
        5 => hilbert(),
        6 => independence(),
        7 => thm2_grid(cfg),
        8 => thm1(cfg),
        9 => reflection(),
        _ => identities(cfg),
    };
    let elapsed = t0.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit);
    let detail = if ok && !in_time { format!("{detail}; over time limit") } else { detail };
    Some(CriterionResult {
        id,
        name,
        verdict: Verdict::from_bool(ok && in_time).as_str().to_string(),
        detail,
        seconds: elapsed.as_secs_f64(),
        limit_seconds: limit,
    })
}

pub fn run_all(cfg: &SelftestConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run(c.0, cfg)).collect()
}

fn poly(terms: &[(u32, u32, u32, i64, i64)]) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|&(a, b, c, n, d)| (Monomial::new(a, b, c), rat(n, d))))
}

fn imat(rows: &[&[i64]]) -> Matrix<ExactInteger> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| ExactInteger::from(v)).collect()).collect())
}

fn golden_polynomials() -> (bool, String) {
    let expect = [
        poly(&[(4, 0, 0, 1, 1), (3, 1, 0, -2, 1), (3, 0, 1, -2, 1), (2, 1, 1, 6, 1)]),
        poly(&[(5, 0, 0, 1, 1), (4, 1, 0, -5, 3), (4, 0, 1, -5, 3), (3, 1, 1, 10, 3)]),
        poly(&[
            (7, 0, 0, 1, 1),
            (6, 1, 0, -7, 2),
            (6, 0, 1, -7, 2),
            (5, 1, 1, 14, 1),
            (5, 2, 0, 7, 2),
            (5, 0, 2, 7, 2),
            (4, 2, 1, -35, 2),
            (4, 1, 2, -35, 2),
            (3, 2, 2, 35, 1),
        ]),
        poly(&[
            (8, 0, 0, 1, 1),
            (7, 1, 0, -16, 5),
            (7, 0, 1, -16, 5),
            (6, 1, 1, 56, 5),
            (6, 2, 0, 14, 5),
            (6, 0, 2, 14, 5),
            (5, 2, 1, -56, 5),
            (5, 1, 2, -56, 5),
            (4, 2, 2, 14, 1),
        ]),
    ];
    let got = [build_a1(1), build_a2(1), build_a1(2), build_a2(2)];
    let names = ["A1(m=1)", "A2(m=1)", "A1(m=2)", "A2(m=2)"];
    let bad: Vec<&str> = names
        .iter()
        .zip(got.iter().zip(&expect))
        .filter(|(_, (g, e))| g.as_ref().ok() != Some(*e))
        .map(|t| *t.0)
        .collect();
    if bad.is_empty() {
        (true, "4/4 polynomials equal".into())
    } else {
        (false, format!("mismatch: {}", bad.join(", ")))
    }
}

fn golden_matrix() -> (bool, String) {
    let matrix = imat(&[
        &[252, 378, 126, 308, 182, 56, 273, 147, 75],
        &[0, 126, 56, 252, 133, 42, 378, 174, 75],
        &[0, 84, 56, 168, 147, 68, 252, 184, 125],
        &[0, 0, 0, 56, 21, 6, 168, 63, 19],
        &[0, 0, 0, 56, 35, 20, 168, 105, 66],
        &[0, 0, 0, 8, 6, 4, 21, 15, 11],
        &[0, 0, 0, 0, 0, 0, 21, 6, 1],
        &[0, 0, 0, 0, 0, 0, 35, 20, 10],
        &[0, 0, 0, 0, 0, 0, 7, 5, 3],
    ]);
    let blocks = [
        imat(&[&[252]]),
        imat(&[&[126, 56], &[84, 56]]),
        imat(&[&[56, 21, 6], &[56, 35, 20], &[8, 6, 4]]),
        imat(&[&[21, 6, 1], &[35, 20, 10], &[7, 5, 3]]),
    ];
    let bm = match build_system(3, 10).and_then(|s| restrict_bm(&s)) {
        Ok(bm) => bm,
        Err(e) => return (false, e.to_string()),
    };
    let row_order = [(0, 5), (1, 5), (1, 3), (2, 5), (2, 3), (2, 1), (3, 5), (3, 3), (3, 1)];
    let matrix_ok = bm.entries == matrix && bm.rows == row_order;
    let got = extract_blocks(3, 10).map(|s| s.blocks).unwrap_or_default();
    let blocks_ok = got.len() == 4 && got.iter().zip(&blocks).all(|(g, e)| &g.entries == e);
    (matrix_ok && blocks_ok, format!("9x9 matrix {}, 4 blocks {}", ok_str(matrix_ok), ok_str(blocks_ok)))
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "match"
    } else {
        "differ"
    }
}

fn uniqueness() -> (bool, String) {
    let mut bad = Vec::new();
    let mut n = 0;
    for m in 0..=6 {
        for d in [3 * m + 1, 3 * m + 2] {
            n += 1;
            let Ok(sys) = build_system(m, d) else {
                bad.push(format!("({m},{d}) build"));
                continue;
            };
            if nullspace(&sys).dim() != 1 {
                bad.push(format!("({m},{d}) dim"));
            }
            if m >= 1 {
                let det = restrict_bm(&sys).ok().and_then(|bm| det_exact(&bm.to_rational()).ok());
                if det.is_none_or(|v| v.is_zero()) {
                    bad.push(format!("({m},{d}) det"));
                }
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { format!("{n} systems, nullity 1, nonsingular B_m") } else { bad.join(" ") })
}

fn quasiinvariance() -> (bool, String) {
    let opts = BasisOptions { level: VerifyLevel::Quasi, ideal_max_m: 0 };
    let mut bad = Vec::new();
    for m in 0..=6 {
        match build_basis(m, opts) {
            Ok(r) => {
                let ok = [r.degree_verdict, r.quasi_verdict, r.s23_verdict].iter().all(|v| *v == Verdict::Pass);
                if !ok {
                    bad.push(format!("m={m}"));
                }
            }
            Err(e) => bad.push(format!("m={m}: {e}")),
        }
    }
    (bad.is_empty(), if bad.is_empty() { "m=0..6 pass".into() } else { bad.join(", ") })
}

fn hilbert() -> (bool, String) {
    let series = hilbert_qi_dims(1, 9);
    let computed: Vec<u64> = (0..=9).map(|d| graded_qi_basis(1, d).len() as u64).collect();
    (computed == series, format!("computed {computed:?}, series {series:?}"))
}

fn independence() -> (bool, String) {
    let a1 = build_a1(1).expect("m=1");
    let a2 = build_a2(1).expect("m=1");
    let s = Permutation::S12;
    let r1 = rank_modulo_ideal(&[a1.apply_perm(&s), a1], 1).ok();
    let r2 = rank_modulo_ideal(&[a2.apply_perm(&s), a2], 1).ok();
    let delta3 = quasi3_core::poly::vandermonde_power(3);
    let d_out = in_ideal_part(&delta3, 1) == Ok(false);
    let det = build_basis(0, BasisOptions::default()).ok().and_then(|r| r.coinvariant_det);
    let det_ok = det.as_ref().is_some_and(|d| !d.is_zero());
    let ok = r1 == Some(2) && r2 == Some(2) && d_out && det_ok;
    let det_s = det.map_or("none".to_string(), |d| d.to_string());
    (ok, format!("ranks mod ideal {r1:?}, {r2:?}; Delta^3 outside: {d_out}; m=0 det {det_s}"))
}

fn thm2_grid(cfg: &SelftestConfig) -> (bool, String) {
    let grid = sweep::thm2_grid();
    let reports = sweep::run_thm2(&grid, cfg.budget);
    let [pass, fail, skipped] = sweep::tally(reports.iter().map(|r| r.verdict));
    let by_n: Vec<usize> =
        (1..=3).map(|n| reports.iter().filter(|r| r.params.n == n && r.verdict == Verdict::Pass).count()).collect();
    (
        fail == 0 && pass >= 200,
        format!("{pass} applicable instances equal (n=1,2,3: {by_n:?}), {fail} differ, {skipped} over budget"),
    )
}

fn thm1(cfg: &SelftestConfig) -> (bool, String) {
    let mut block_pass = 0;
    let mut block_total = 0;
    let mut notes = Vec::new();
    for m in 1..=4u32 {
        for d in [3 * m + 1, 3 * m + 2] {
            let Ok(set) = extract_blocks(m, d) else {
                notes.push(format!("blocks ({m},{d})"));
                continue;
            };
            for b in &set.blocks {
                block_total += 1;
                let p = Thm1Params::for_block(m, d, b.kind);
                let det_match = det_integer(&p.matrix()).ok() == det_integer(&b.entries).ok();
                match verify_thm1(p, cfg.budget) {
                    Ok(r) if det_match && r.verdict != Verdict::Fail => {
                        if r.verdict == Verdict::Pass {
                            block_pass += 1;
                        }
                    }
                    _ => notes.push(format!("({m},{d},{:?})", b.kind)),
                }
            }
        }
    }
    let anchor = verify_thm1(Thm1Params::for_block(3, 10, BlockKind::Diagonal(2)), cfg.budget).ok();
    let anchor_ok = anchor.as_ref().is_some_and(|r| {
        r.det == ExactInteger::from(2352)
            && r.prefactor == rat(1176, 1)
            && r.family_count == Some(ExactInteger::from(2))
    });
    let samples = sweep::thm1_samples(cfg.seed, 75, 200_000);
    let reports = sweep::run_thm1(&samples, cfg.budget);
    let [pass, fail, skipped] = sweep::tally(reports.iter().map(|r| r.verdict));
    let nonzero = reports.iter().filter(|r| r.verdict == Verdict::Pass && !r.det.is_zero()).count();
    let ok = notes.is_empty() && anchor_ok && fail == 0 && pass >= 50;
    let mut detail = format!(
        "blocks {block_pass}/{block_total} enumerated and equal; 2352 = 1176 x 2 {}; samples {pass} equal ({nonzero} nonzero), {fail} differ, {skipped} over budget",
        ok_str(anchor_ok)
    );
    if !notes.is_empty() {
        detail.push_str(&format!("; failing blocks {}", notes.join(" ")));
    }
    (ok, detail)
}

fn reflection() -> (bool, String) {
    let (n, bad) = sweep::reflection_grid(14);
    let (g, gbad) = sweep::reflection_general(14);
    (
        bad.is_empty() && gbad.is_empty(),
        format!(
            "closed form {n} configurations, {} mismatches; general position {g} configurations, {} mismatches",
            bad.len(),
            gbad.len()
        ),
    )
}

fn identities(cfg: &SelftestConfig) -> (bool, String) {
    let samples = sweep::random_polynomials(cfg.seed, 100, 8);
    let checks = verify_identities(&samples);
    let algebra = checks.iter().filter(|c| c.sample.is_none()).count();
    let failed: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.identity.label()).collect();
    let ok = failed.is_empty() && algebra == Identity::ALL.len() && checks.len() == Identity::ALL.len() * 101;
    (
        ok,
        format!(
            "{} identities, algebra level plus 100 polynomials: {} checks, {} failed",
            Identity::ALL.len(),
            checks.len(),
            failed.len()
        ),
    )
}
