use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use quasi3::format::{
    int_matrix_json, labeled_matrix_text, labels_json, latex_grouped, latex_poly, poly_to_json, read_polynomial,
    system_json,
};
use quasi3::selftest::{self, SelftestConfig};
use quasi3::sweep;
use quasi3_core::basis::{build_basis, BasisOptions, BasisReport, VerifyLevel, ELEMENT_NAMES};
use quasi3_core::group_ops::verify_identities;
use quasi3_core::linsys::{build_system, det_integer, extract_blocks, restrict_bm, BlockKind};
use quasi3_core::paths::{
    count_families_bruteforce, count_paths_dp, verify_thm1, verify_thm2, FamilyProblem, Inapplicable, PathError,
    PathProblem, Point, Thm1Params, Thm1Report, Thm2Params, Thm2Report,
};
use quasi3_core::quasi::{graded_qi_basis, hilbert_qi_dims};
use quasi3_core::{is_quasiinvariant, ExactInteger, Verdict};
use serde_json::{json, Value};

const MAX_DIMS_DEGREE: u32 = 40;

#[derive(Parser, Debug)]
#[command(name = "quasi3", version, about = "Exact basis of the quasiinvariant quotient for S3")]
struct Cli {
    /// Write the output to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Degrees,
    Quasi,
    Full,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build the six basis elements and verify them.
    Basis {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "full")]
        verify: Level,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest m for which quotient independence is certified.
        #[arg(long, default_value_t = 2)]
        ideal_max_m: u32,
    },
    /// Test a polynomial (JSON term list or text expression) for m-quasiinvariance.
    Check {
        #[arg(long)]
        m: u32,
        /// Path to the polynomial file, `-` for stdin.
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The coefficient system of the ansatz in degree d.
    System(SystemArgs),
    /// Diagonal blocks of the square submatrix with their determinants.
    Blocks(MdArgs),
    /// Determinant of the square submatrix against the product of block determinants.
    Det(MdArgs),
    /// Graded dimensions of the quasiinvariants against the Hilbert series.
    Dims {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        max_degree: u32,
        /// Allow degrees above 40.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lattice path counts.
    Paths {
        #[command(subcommand)]
        cmd: PathsCmd,
    },
    /// Binomial determinant identities.
    Identity {
        #[command(subcommand)]
        cmd: IdentityCmd,
    },
    /// Group algebra identities on seeded random polynomials.
    Identities {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct MdArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    d: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct SystemArgs {
    #[command(flatten)]
    md: MdArgs,
    /// Restrict to the square submatrix without column [m,m].
    #[arg(long)]
    restrict_bm: bool,
    /// Also list the diagonal blocks.
    #[arg(long)]
    blocks: bool,
}

#[derive(Subcommand, Debug)]
enum PathsCmd {
    /// Count NORTH/WEST paths, optionally avoiding the line x + y = L.
    Count {
        #[arg(long, value_parser = parse_point)]
        start: Point,
        #[arg(long, value_parser = parse_point)]
        end: Point,
        #[arg(long)]
        barrier: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum IdentityCmd {
    /// Factored determinant identity; parameters C,D,E,alpha,beta,k.
    Thm1 {
        #[arg(long, value_parser = parse_list::<6>, allow_hyphen_values = true)]
        params: [i64; 6],
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Determinant as a family count; parameters a,b,c,d,e,n.
    Thm2 {
        #[arg(long, value_parser = parse_list::<6>, allow_hyphen_values = true)]
        params: [i64; 6],
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Random instances of both identities; JSON report.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let [x, y] = parse_list::<2>(s)?;
    Ok((x, y))
}

fn parse_list<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| format!("expected {N} comma-separated integers, got {}", v.len()))
}

/// Outcome of a subcommand.
enum Failure {
    Usage(String),
    Math,
}

type Run = Result<String, (String, Failure)>;

fn usage(msg: impl Into<String>) -> (String, Failure) {
    (String::new(), Failure::Usage(msg.into()))
}

fn finish(out: String, ok: bool) -> Run {
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Math))
    }
}

fn json_out(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let budget = match quasi3::budget_from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (out, code) = match dispatch(cli.cmd, budget) {
        Ok(out) => (out, 0),
        Err((out, Failure::Math)) => (out, 1),
        Err((out, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            (out, 2)
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(code)
}

fn dispatch(cmd: Cmd, budget: u64) -> Run {
    match cmd {
        Cmd::Basis { m, verify, format, ideal_max_m } => basis(m, verify, format, ideal_max_m),
        Cmd::Check { m, poly, format } => check(m, &poly, format),
        Cmd::System(a) => system(&a),
        Cmd::Blocks(a) => blocks(&a),
        Cmd::Det(a) => det(&a),
        Cmd::Dims { m, max_degree, force, format } => dims(m, max_degree, force, format),
        Cmd::Paths { cmd: PathsCmd::Count { start, end, barrier, format } } => paths_count(start, end, barrier, format),
        Cmd::Identity { cmd } => match cmd {
            IdentityCmd::Thm1 { params, format } => thm1(params, format, budget),
            IdentityCmd::Thm2 { params, format } => thm2(params, format, budget),
            IdentityCmd::Sweep { seed, trials } => identity_sweep(seed, trials, budget),
        },
        Cmd::Identities { samples, seed, max_degree, format } => identities(samples, seed, max_degree, format),
        Cmd::Selftest { only, seed, format } => run_selftest(only, seed, format, budget),
    }
}

fn basis(m: u32, verify: Level, format: Format, ideal_max_m: u32) -> Run {
    let level = match verify {
        Level::Degrees => VerifyLevel::Degrees,
        Level::Quasi => VerifyLevel::Quasi,
        Level::Full => VerifyLevel::Full,
    };
    let r = build_basis(m, BasisOptions { level, ideal_max_m })
        .map_err(|e| (String::new(), Failure::Usage(e.to_string())))?;
    let out = match format {
        Format::Json => json_out(&basis_json(&r)),
        Format::Text => basis_text(&r),
        Format::Latex => basis_latex(&r),
    };
    finish(out, r.all_pass())
}

fn basis_json(r: &BasisReport) -> Value {
    let elements: Vec<Value> = ELEMENT_NAMES
        .iter()
        .zip(&r.elements)
        .map(|(n, p)| json!({ "name": n, "degree": p.degree(), "poly": poly_to_json(p) }))
        .collect();
    let verdicts: serde_json::Map<String, Value> =
        r.verdicts().into_iter().map(|(k, v)| (k.to_string(), json!(v.as_str()))).collect();
    json!({
        "m": r.m,
        "elements": elements,
        "a1_coefficients": coefficients_json(&r.a1.cols, &r.a1.coeffs),
        "a2_coefficients": coefficients_json(&r.a2.cols, &r.a2.coeffs),
        "verdicts": verdicts,
    })
}

fn coefficients_json(cols: &[(u32, u32)], coeffs: &[quasi3_core::ExactRational]) -> Value {
    Value::Array(cols.iter().zip(coeffs).map(|(&(i, j), c)| json!({ "ij": [i, j], "c": c.to_string() })).collect())
}

fn basis_text(r: &BasisReport) -> String {
    let mut s = String::new();
    writeln!(s, "m = {}", r.m).unwrap();
    for ((name, p), d) in ELEMENT_NAMES.iter().zip(&r.elements).zip(r.expected_degrees) {
        writeln!(s, "{name} (degree {d}):\n  {p}").unwrap();
    }
    s.push_str("verdicts:\n");
    for (k, v) in r.verdicts() {
        writeln!(s, "  {k}: {v}").unwrap();
    }
    s
}

fn basis_latex(r: &BasisReport) -> String {
    let mut s = String::new();
    writeln!(s, "A_1 &= {} \\\\", latex_grouped(r.a1.d, &r.a1.cols, &r.a1.coeffs)).unwrap();
    writeln!(s, "A_2 &= {}", latex_grouped(r.a2.d, &r.a2.cols, &r.a2.coeffs)).unwrap();
    s
}

fn check(m: u32, path: &str, format: Format) -> Run {
    let src = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| usage(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
    };
    let p = read_polynomial(&src).map_err(|e| usage(format!("malformed polynomial in {path}: {e}")))?;
    let r = is_quasiinvariant(&p, m);
    let ok = r.is_quasiinvariant();
    let out = match format {
        Format::Json => {
            let pairs: Vec<Value> = r
                .pairs
                .iter()
                .map(|c| json!({ "pair": [c.i, c.j], "largest_power": c.largest_power, "divisible": c.divisible }))
                .collect();
            json_out(&json!({ "m": m, "poly": poly_to_json(&p), "pairs": pairs, "quasiinvariant": ok }))
        }
        Format::Latex => format!("{}\n", latex_poly(&p)),
        Format::Text => {
            let mut s = format!("polynomial: {p}\n");
            for c in &r.pairs {
                let pow = c.largest_power.map_or("infinite".to_string(), |k| k.to_string());
                writeln!(
                    s,
                    "  (1 - s{}{})P: largest power of (x{} - x{}) = {pow}, need {}: {}",
                    c.i,
                    c.j,
                    c.i,
                    c.j,
                    2 * m + 1,
                    Verdict::from_bool(c.divisible)
                )
                .unwrap();
            }
            writeln!(s, "{m}-quasiinvariant: {ok}").unwrap();
            s
        }
    };
    finish(out, ok)
}

fn system(a: &SystemArgs) -> Run {
    let MdArgs { m, d, format } = a.md;
    let mut sys = build_system(m, d).map_err(|e| usage(e.to_string()))?;
    if a.restrict_bm {
        sys = restrict_bm(&sys).map_err(|e| usage(e.to_string()))?;
    }
    let set = if a.blocks { Some(extract_blocks(m, d).map_err(|e| usage(e.to_string()))?) } else { None };
    let out = match format {
        Format::Json => {
            let mut v = system_json(&sys);
            v["restricted"] = json!(a.restrict_bm);
            if let Some(set) = &set {
                v["blocks"] = Value::Array(set.blocks.iter().map(block_json).collect());
            }
            json_out(&v)
        }
        _ => {
            let mut s = labeled_matrix_text(&sys.rows, &sys.cols, &sys.entries);
            if let Some(set) = &set {
                for b in &set.blocks {
                    writeln!(s, "\n{}", block_name(m, b.kind)).unwrap();
                    s.push_str(&labeled_matrix_text(&b.rows, &b.cols, &b.entries));
                }
            }
            s
        }
    };
    Ok(out)
}

fn block_name(m: u32, kind: BlockKind) -> String {
    match kind {
        BlockKind::Diagonal(f) => format!("B^{{{f},{m}}}"),
        BlockKind::Final => format!("B^{m}"),
    }
}

fn block_json(b: &quasi3_core::linsys::Block) -> Value {
    let kind = match b.kind {
        BlockKind::Diagonal(f) => json!({ "diagonal": f }),
        BlockKind::Final => json!("final"),
    };
    json!({
        "kind": kind,
        "rows": labels_json(&b.rows),
        "cols": labels_json(&b.cols),
        "entries": int_matrix_json(&b.entries),
    })
}

fn blocks(a: &MdArgs) -> Run {
    let set = extract_blocks(a.m, a.d).map_err(|e| usage(e.to_string()))?;
    let mut ok = true;
    let mut items = Vec::new();
    let mut s = String::new();
    for b in &set.blocks {
        let det = det_integer(&b.entries).expect("square");
        let closed = quasi3_core::linsys::block_closed_form(a.m, a.d, b.kind).is_ok_and(|c| c == b.entries);
        let thm1_det = det_integer(&Thm1Params::for_block(a.m, a.d, b.kind).matrix()).expect("square");
        let agree = closed && thm1_det == det && !det.is_zero();
        ok &= agree;
        let name = block_name(a.m, b.kind);
        let mut v = block_json(b);
        v["name"] = json!(name);
        v["det"] = json!(det.to_string());
        v["closed_form"] = json!(closed);
        v["binomial_determinant"] = json!(thm1_det.to_string());
        items.push(v);
        writeln!(s, "{name}  det = {det}  closed form {}  binomial determinant {thm1_det}", Verdict::from_bool(closed))
            .unwrap();
        s.push_str(&labeled_matrix_text(&b.rows, &b.cols, &b.entries));
    }
    let out = match a.format {
        Format::Json => json_out(&json!({ "m": a.m, "d": a.d, "blocks": items })),
        _ => s,
    };
    finish(out, ok)
}

fn det(a: &MdArgs) -> Run {
    let sys = build_system(a.m, a.d).map_err(|e| usage(e.to_string()))?;
    let bm = restrict_bm(&sys).map_err(|e| usage(e.to_string()))?;
    let full = det_integer(&bm.entries).expect("square");
    let set = extract_blocks(a.m, a.d).map_err(|e| usage(e.to_string()))?;
    let dets: Vec<ExactInteger> = set.blocks.iter().map(|b| det_integer(&b.entries).expect("square")).collect();
    let product: ExactInteger = dets.iter().product();
    let ok = product == full && !full.is_zero();
    let out = match a.format {
        Format::Json => json_out(&json!({
            "m": a.m,
            "d": a.d,
            "det": full.to_string(),
            "block_dets": dets.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "product": product.to_string(),
            "equal": product == full,
            "nonzero": !full.is_zero(),
        })),
        _ => {
            let list: Vec<String> = dets.iter().map(|d| d.to_string()).collect();
            format!(
                "det B_{} = {full}\nblock determinants: {}\nproduct = {product}\nequal: {}\n",
                a.m,
                list.join(", "),
                product == full
            )
        }
    };
    finish(out, ok)
}

fn dims(m: u32, max_degree: u32, force: bool, format: Format) -> Run {
    if max_degree > MAX_DIMS_DEGREE && !force {
        return Err(usage(format!("--max-degree {max_degree} exceeds {MAX_DIMS_DEGREE}; pass --force to run anyway")));
    }
    let series = hilbert_qi_dims(m, max_degree);
    let computed: Vec<u64> = (0..=max_degree).map(|d| graded_qi_basis(m, d).len() as u64).collect();
    let ok = series == computed;
    let out = match format {
        Format::Json => json_out(&json!({ "m": m, "computed": computed, "series": series, "equal": ok })),
        _ => {
            let mut s = format!("{:>6} {:>10} {:>10}\n", "degree", "computed", "series");
            for (d, (c, h)) in computed.iter().zip(&series).enumerate() {
                let mark = if c == h { "" } else { "  differ" };
                writeln!(s, "{d:>6} {c:>10} {h:>10}{mark}").unwrap();
            }
            s
        }
    };
    finish(out, ok)
}

fn paths_count(start: Point, end: Point, barrier: Option<i64>, format: Format) -> Run {
    let p = PathProblem::new(start, end, barrier).map_err(|e| usage(e.to_string()))?;
    let n = count_paths_dp(&p);
    let out = match format {
        Format::Json => json_out(&json!({
            "start": [start.0, start.1],
            "end": [end.0, end.1],
            "barrier": barrier,
            "endpoint_on_barrier": p.endpoint_on_barrier(),
            "count": n.to_string(),
        })),
        _ => format!("{n}\n"),
    };
    Ok(out)
}

fn applicability_str(a: &Result<(), Inapplicable>) -> String {
    match a {
        Ok(()) => "applicable".into(),
        Err(e) => format!("not applicable: {e}"),
    }
}

fn count_str(c: &Option<ExactInteger>) -> String {
    c.as_ref().map_or("unchecked (over budget)".into(), |c| c.to_string())
}

fn thm2_json(r: &Thm2Report) -> Value {
    let p = r.params;
    json!({
        "params": { "a": p.a, "b": p.b, "c": p.c, "d": p.d, "e": p.e, "n": p.n },
        "starts": r.starts,
        "ends": r.ends,
        "barrier": r.barrier,
        "det": r.det.to_string(),
        "family_count": r.family_count.as_ref().map(|c| c.to_string()),
        "applicable": r.applicable.is_ok(),
        "reason": r.applicable.err().map(|e| e.to_string()),
        "verdict": r.verdict.as_str(),
    })
}

fn thm1_json(r: &Thm1Report) -> Value {
    let p = r.params;
    json!({
        "params": { "C": p.c, "D": p.d, "E": p.e, "alpha": p.alpha, "beta": p.beta, "k": p.k },
        "starts": r.starts,
        "ends": r.ends,
        "barrier": r.barrier,
        "det": r.det.to_string(),
        "prefactor": r.prefactor.to_string(),
        "family_count": r.family_count.as_ref().map(|c| c.to_string()),
        "applicable": r.applicable.is_ok(),
        "reason": r.applicable.err().map(|e| e.to_string()),
        "verdict": r.verdict.as_str(),
    })
}

fn check_size(k: i64) -> Result<usize, (String, Failure)> {
    if (1..=12).contains(&k) {
        Ok(k as usize)
    } else {
        Err(usage(format!("matrix size must be in 1..=12, got {k}")))
    }
}

fn budget_note(family: &FamilyProblem, budget: u64) -> Option<String> {
    match count_families_bruteforce(family, budget) {
        Err(e @ PathError::BudgetExceeded { .. }) => Some(format!("{e}; set QUASI3_BUDGET to raise it")),
        _ => None,
    }
}

fn thm1(p: [i64; 6], format: Format, budget: u64) -> Run {
    let [c, d, e, alpha, beta, k] = p;
    let params = Thm1Params { c, d, e, alpha, beta, k: check_size(k)? };
    let r = verify_thm1(params, budget).map_err(|e| usage(e.to_string()))?;
    if let Some(note) = budget_note(&params.family(), budget) {
        eprintln!("note: {note}");
    }
    let claimed = r.applicable.is_ok();
    let out = match format {
        Format::Json => json_out(&thm1_json(&r)),
        _ => format!(
            "det = {}\nprefactor = {}\nfamily count = {}\n{}\nverdict: {}\n",
            r.det,
            r.prefactor,
            count_str(&r.family_count),
            applicability_str(&r.applicable),
            r.verdict
        ),
    };
    finish(out, !(claimed && r.verdict == Verdict::Fail))
}

fn thm2(p: [i64; 6], format: Format, budget: u64) -> Run {
    let [a, b, c, d, e, n] = p;
    let params = Thm2Params { a, b, c, d, e, n: check_size(n)? };
    let r = verify_thm2(params, budget);
    if let Some(note) = budget_note(&params.family(), budget) {
        eprintln!("note: {note}");
    }
    let claimed = r.applicable.is_ok();
    let out = match format {
        Format::Json => json_out(&thm2_json(&r)),
        _ => format!(
            "det = {}\nfamily count = {}\n{}\nverdict: {}\n",
            r.det,
            count_str(&r.family_count),
            applicability_str(&r.applicable),
            r.verdict
        ),
    };
    finish(out, !(claimed && r.verdict == Verdict::Fail))
}

fn identity_sweep(seed: u64, trials: usize, budget: u64) -> Run {
    let t2 = sweep::run_thm2(&sweep::thm2_random(seed, trials), budget);
    let t1 = sweep::run_thm1(&sweep::thm1_samples(seed, trials, trials * 2000), budget);
    let applicable_fail = t2.iter().any(|r| r.applicable.is_ok() && r.verdict == Verdict::Fail)
        || t1.iter().any(|r| r.verdict == Verdict::Fail);
    let [p2, f2, s2] = sweep::tally(t2.iter().filter(|r| r.applicable.is_ok()).map(|r| r.verdict));
    let [p1, f1, s1] = sweep::tally(t1.iter().map(|r| r.verdict));
    let v = json!({
        "seed": seed,
        "trials": trials,
        "budget": budget,
        "thm2": {
            "summary": { "applicable": p2 + f2 + s2, "pass": p2, "fail": f2, "unchecked": s2 },
            "instances": t2.iter().map(thm2_json).collect::<Vec<_>>(),
        },
        "thm1": {
            "summary": { "applicable": t1.len(), "pass": p1, "fail": f1, "unchecked": s1 },
            "instances": t1.iter().map(thm1_json).collect::<Vec<_>>(),
        },
    });
    finish(json_out(&v), !applicable_fail)
}

fn identities(samples: usize, seed: u64, max_degree: u32, format: Format) -> Run {
    let polys = sweep::random_polynomials(seed, samples, max_degree);
    let checks = verify_identities(&polys);
    let ok = checks.iter().all(|c| c.holds);
    let out = match format {
        Format::Json => {
            let items: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "identity": c.identity.label(), "sample": c.sample, "holds": c.holds }))
                .collect();
            json_out(&json!({ "seed": seed, "samples": samples, "checks": items, "all_hold": ok }))
        }
        _ => {
            let mut s = String::new();
            for id in quasi3_core::group_ops::Identity::ALL {
                let mine: Vec<_> = checks.iter().filter(|c| c.identity == id).collect();
                let alg = mine.iter().find(|c| c.sample.is_none()).is_some_and(|c| c.holds);
                let on = mine.iter().filter(|c| c.sample.is_some() && c.holds).count();
                writeln!(s, "{:<28} algebra {}  polynomials {on}/{samples}", id.label(), Verdict::from_bool(alg))
                    .unwrap();
            }
            s
        }
    };
    finish(out, ok)
}

fn run_selftest(only: Option<u8>, seed: u64, format: Format, budget: u64) -> Run {
    let cfg = SelftestConfig { budget, seed };
    let results = match only {
        Some(id) => vec![selftest::run(id, &cfg).ok_or_else(|| usage(format!("no criterion {id}; expected 1..=10")))?],
        None => selftest::run_all(&cfg),
    };
    let ok = results.iter().all(|r| r.passed());
    let out = match format {
        Format::Json => json_out(&json!({ "criteria": results, "all_pass": ok })),
        _ => results.iter().map(|r| r.line() + "\n").collect(),
    };
    finish(out, ok)
}
