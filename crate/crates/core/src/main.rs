//! Command-line surface: quartic/cubic/quadratic solvers, conic-pencil
//! geometry, the cubic-pencil computations, curve sampling, and an oracle
//! cross-check harness. Plain text by default, a single JSON document with
//! `--json`; all diagnostics go to stderr. Exit codes: 0 success, 1 bad
//! input, 2 numerical failure.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use pencilsolve::closed_form::{
    self, depress_quartic, resolvent_cubic, DepressedQuartic, QuarticCoeffs,
};
use pencilsolve::conic::{
    base_points, pencil_member, quartic_to_pencil, singular_members, split_degenerate_conic,
    solve_quartic_via_pencil, Conic, PencilOfConics,
};
use pencilsolve::cubic_pencil::{
    base_points_cubic, find_critical_points, infinite_critical_points, pencil_member_cubic,
    record_matches_row, reference_rows, sample_curve, CriticalPointRecord, CubicPencil,
    LambdaValue, SearchConfig,
};
use pencilsolve::error::{Error, Result};
use pencilsolve::oracle::{self, OracleConfig};
use pencilsolve::poly::{PencilParam, Poly1, ProjPoint, RootSet, CLUSTER_TOL};

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "pencilsolve",
    version,
    about = "Quartic solving through a pencil of conics, and the geometry behind it",
    propagate_version = true
)]
struct Cli {
    /// Emit a single JSON document on stdout instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Tolerance override (root matching for solve/verify, gradient
    /// tolerance for the critical-point search). Must be positive.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed override for every seeded computation (search and random trials).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed-form solvers (quadratic/cubic/quartic formulas).
    Formula,
    /// Quartic only: degenerate-conic splitting in the associated pencil.
    Pencil,
    /// Iterative simultaneous root finder.
    Oracle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a degree 1–4 polynomial from ascending coefficients.
    Solve {
        /// Ascending real coefficients: c0 c1 ... (constant term first).
        #[arg(allow_negative_numbers = true, num_args = 0.., value_name = "COEFF")]
        coeffs: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// JSON file with ascending complex coefficients; each entry is a
        /// number or a [re, im] pair. Either a bare array or {"coeffs": [...]}.
        #[arg(long, value_name = "FILE", conflicts_with = "coeffs")]
        input: Option<PathBuf>,
    },
    /// Resolvent cubic of the depressed quartic u⁴ + pu² + qu + r.
    Resolvent {
        #[arg(allow_negative_numbers = true)]
        p: f64,
        #[arg(allow_negative_numbers = true)]
        q: f64,
        #[arg(allow_negative_numbers = true)]
        r: f64,
    },
    /// Singular members of the quartic's conic pencil: each degenerate
    /// member with its line pair, plus the pencil's base points.
    PencilSingular {
        #[arg(allow_negative_numbers = true)]
        p: f64,
        #[arg(allow_negative_numbers = true)]
        q: f64,
        #[arg(allow_negative_numbers = true)]
        r: f64,
    },
    /// Intersect two conics (upper-triangle entries m00 m01 m02 m11 m12 m22
    /// for each) through the pencil they span.
    ConicsIntersect {
        /// Twelve reals: six entries of the first conic, then six of the second.
        #[arg(allow_negative_numbers = true, num_args = 0.., value_name = "ENTRY")]
        entries: Vec<f64>,
        /// JSON file {"c1": [6 entries], "c2": [6 entries]}; entries are
        /// numbers or [re, im] pairs.
        #[arg(long, value_name = "FILE", conflicts_with = "entries")]
        input: Option<PathBuf>,
    },
    /// Computations on the default pencil of cubics.
    E1 {
        #[command(subcommand)]
        sub: E1Cmd,
    },
    /// Sample the real locus of a pencil member on a window, as CSV.
    SampleCurve {
        /// Member parameter [mu : lambda], mu component.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        mu: f64,
        /// Member parameter [mu : lambda], lambda component.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        lambda: f64,
        /// Window: XMIN XMAX YMIN YMAX.
        #[arg(long, num_args = 4, allow_negative_numbers = true, required = true,
              value_names = ["XMIN", "XMAX", "YMIN", "YMAX"])]
        window: Vec<f64>,
        /// Number of x grid columns (≥ 2).
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Write to this file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Sample the conic pencil of the depressed quartic u⁴+pu²+qu+r
        /// instead of the default cubic pencil.
        #[arg(long, num_args = 3, allow_negative_numbers = true,
              value_names = ["P", "Q", "R"])]
        quartic: Option<Vec<f64>>,
    },
    /// Cross-check the solver pipelines against each other.
    Verify {
        /// Ascending real coefficients of one polynomial to check.
        #[arg(allow_negative_numbers = true, num_args = 0.., value_name = "COEFF")]
        coeffs: Vec<f64>,
        /// Run this many random monic trials instead of one explicit input.
        #[arg(long, value_name = "N", conflicts_with = "coeffs")]
        random: Option<usize>,
        /// Degree for --random trials (1–4).
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum E1Cmd {
    /// Critical points of the pencil's parameter map.
    CriticalPoints {
        /// Compare against the published two-significant-figure reference
        /// rows and print a verdict per row.
        #[arg(long)]
        check_table1: bool,
        /// Override the number of Newton start points.
        #[arg(long, value_name = "N")]
        seeds: Option<usize>,
    },
    /// The nine common points of the two spanning cubics.
    BasePoints,
}

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

/// `%.12g`: up to 12 significant digits, trailing zeros trimmed, scientific
/// notation outside the exponent range [−4, 12).
fn fmt_g12(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let formatted = format!("{:.11e}", v);
    let (mant, exp_str) = formatted.split_once('e').expect("float e-format");
    let exp: i32 = exp_str.parse().expect("float exponent");
    let digits: String = mant.chars().filter(char::is_ascii_digit).collect();
    let sign = if v < 0.0 { "-" } else { "" };
    if !(-4..12).contains(&exp) {
        let frac = digits[1..].trim_end_matches('0');
        let mantissa = if frac.is_empty() {
            digits[..1].to_string()
        } else {
            format!("{}.{}", &digits[..1], frac)
        };
        format!(
            "{sign}{mantissa}e{}{:02}",
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    } else if exp >= 0 {
        let k = exp as usize;
        let frac = digits[k + 1..].trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{}", &digits[..=k])
        } else {
            format!("{sign}{}.{}", &digits[..=k], frac)
        }
    } else {
        let padded = format!("{}{}", "0".repeat((-exp - 1) as usize), digits);
        format!("{sign}0.{}", padded.trim_end_matches('0'))
    }
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_g12(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_g12(z.re), fmt_g12(-z.im))
    } else {
        format!("{}+{}i", fmt_g12(z.re), fmt_g12(z.im))
    }
}

fn json_c(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn json_point(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|&c| json_c(c)).collect())
}

fn fmt_point(p: &ProjPoint) -> String {
    let [a, b, c] = p.coords();
    format!("[{} : {} : {}]", fmt_c(a), fmt_c(b), fmt_c(c))
}

fn print_json(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

// ---------------------------------------------------------------------------
// Shared pieces
// ---------------------------------------------------------------------------

fn parse_complex_entry(v: &Value) -> Option<Complex64> {
    match v {
        Value::Number(n) => Some(c64(n.as_f64()?)),
        Value::Array(parts) if parts.len() == 2 => {
            let re = parts[0].as_f64()?;
            let im = parts[1].as_f64()?;
            Some(Complex64::new(re, im))
        }
        _ => None,
    }
}

fn parse_complex_list(v: &Value) -> Option<Vec<Complex64>> {
    v.as_array()?.iter().map(parse_complex_entry).collect()
}

/// Read a JSON coefficient file: a bare array or {"coeffs": [...]}.
fn read_coeff_file(path: &Path) -> std::result::Result<Vec<Complex64>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| format!("{} is not JSON: {e}", path.display()))?;
    let list = match &doc {
        Value::Array(_) => parse_complex_list(&doc),
        Value::Object(map) => map.get("coeffs").and_then(parse_complex_list),
        _ => None,
    };
    list.ok_or_else(|| {
        format!(
            "{}: expected an array of coefficients (numbers or [re, im] pairs)",
            path.display()
        )
    })
}

fn root_set_json(rs: &RootSet) -> Value {
    Value::Array(
        rs.roots
            .iter()
            .map(|r| {
                json!({
                    "value": json_c(r.value),
                    "multiplicity": r.multiplicity,
                    "residual": r.residual,
                })
            })
            .collect(),
    )
}

fn print_root_set_plain(rs: &RootSet) {
    for r in &rs.roots {
        println!(
            "{}  (multiplicity {}, residual {})",
            fmt_c(r.value),
            r.multiplicity,
            fmt_g12(r.residual)
        );
    }
}

/// Best-case maximum pairwise distance over all pairings of two equal-length
/// multisets (None when the lengths differ). Exhaustive over permutations —
/// the degrees here are at most 4.
fn multiset_max_deviation(a: &[Complex64], b: &[Complex64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    fn assign(a: &[Complex64], b: &[Complex64], used: &mut [bool], i: usize) -> f64 {
        if i == a.len() {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        for j in 0..b.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            let rest = assign(a, b, used, i + 1);
            used[j] = false;
            best = best.min((a[i] - b[j]).norm().max(rest));
        }
        best
    }
    Some(assign(a, b, &mut vec![false; b.len()], 0))
}

/// Full quartic through the conic pencil: depress, solve geometrically,
/// undo the shift, and rebuild the root set against the original polynomial.
fn solve_full_quartic_via_pencil(p: &Poly1) -> Result<RootSet> {
    let monic = p.monic()?;
    let qc = QuarticCoeffs {
        a: monic.coeff(3),
        b: monic.coeff(2),
        c: monic.coeff(1),
        d: monic.coeff(0),
    };
    let dq = depress_quartic(&qc);
    let depressed = solve_quartic_via_pencil(&dq)?;
    let values: Vec<Complex64> = depressed.expanded().iter().map(|u| u + dq.shift).collect();
    Ok(RootSet::from_values(&values, CLUSTER_TOL, p))
}

fn oracle_config(seed: Option<u64>) -> OracleConfig {
    let mut cfg = OracleConfig::default();
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg
}

const REFERENCE_NOTE: &str = "note: for p=-7, q=6, r=0 a published rendering of this example \
prints \u{3bb}\u{b3} \u{2212} 15\u{3bb}\u{b2} + 49\u{3bb} \u{2212} 36 = 0, inconsistent with its \
own stated root \u{3bb} = 1; the coefficient formula gives \u{3bb}\u{b3} \u{2212} 14\u{3bb}\u{b2} \
+ 49\u{3bb} \u{2212} 36 = (\u{3bb}\u{2212}1)(\u{3bb}\u{2212}4)(\u{3bb}\u{2212}9).";

// ---------------------------------------------------------------------------
// Command handlers
// ---------------------------------------------------------------------------

fn cmd_solve(
    cli: &Cli,
    coeffs: &[f64],
    method: Method,
    input: &Option<PathBuf>,
) -> Result<i32> {
    let coeffs: Vec<Complex64> = if let Some(path) = input {
        match read_coeff_file(path) {
            Ok(c) => c,
            Err(msg) => {
                eprintln!("error: {msg}");
                return Ok(1);
            }
        }
    } else if coeffs.is_empty() {
        eprintln!("error: give ascending coefficients or --input FILE");
        return Ok(1);
    } else {
        coeffs.iter().map(|&v| c64(v)).collect()
    };

    let p = Poly1::new(coeffs);
    let degree = p.degree()?;
    let (rs, method_name) = match method {
        Method::Formula => (closed_form::solve_any(&p)?, "formula"),
        Method::Oracle => {
            if !(1..=4).contains(&degree) {
                return Err(Error::UnsupportedDegree(degree, "1 through 4"));
            }
            (oracle::all_roots(&p, &oracle_config(cli.seed))?, "oracle")
        }
        Method::Pencil => {
            if degree != 4 {
                eprintln!("error: --method pencil requires a quartic (degree 4), got degree {degree}");
                return Ok(1);
            }
            (solve_full_quartic_via_pencil(&p)?, "pencil")
        }
    };

    if cli.json {
        print_json(&json!({
            "command": "solve",
            "method": method_name,
            "degree": degree,
            "roots": root_set_json(&rs),
        }));
    } else {
        println!("degree {degree}, method {method_name}:");
        print_root_set_plain(&rs);
    }
    Ok(0)
}

fn cmd_resolvent(cli: &Cli, p: f64, q: f64, r: f64) -> Result<i32> {
    let dq = DepressedQuartic {
        p: c64(p),
        q: c64(q),
        r: c64(r),
        shift: c64(0.0),
    };
    let cubic = resolvent_cubic(&dq);
    let roots = closed_form::solve_any(&cubic)?;

    if cli.json {
        print_json(&json!({
            "command": "resolvent",
            "cubic_ascending": Value::Array(cubic.coeffs().iter().map(|&c| json_c(c)).collect()),
            "roots": root_set_json(&roots),
            "note": REFERENCE_NOTE,
        }));
    } else {
        println!(
            "resolvent cubic: \u{3bb}\u{b3} + ({})\u{3bb}\u{b2} + ({})\u{3bb} + ({})",
            fmt_c(cubic.coeff(2)),
            fmt_c(cubic.coeff(1)),
            fmt_c(cubic.coeff(0))
        );
        println!("roots:");
        print_root_set_plain(&roots);
        println!("{REFERENCE_NOTE}");
    }
    Ok(0)
}

fn cmd_pencil_singular(cli: &Cli, p: f64, q: f64, r: f64) -> Result<i32> {
    let dq = DepressedQuartic {
        p: c64(p),
        q: c64(q),
        r: c64(r),
        shift: c64(0.0),
    };
    let pc = quartic_to_pencil(&dq);
    let sm = singular_members(&pc)?;
    let repeated = sm.members.iter().any(|m| m.multiplicity > 1);
    if repeated {
        eprintln!(
            "warning: the determinant cubic has a repeated root; the pencil's \
             degenerate members are not distinct"
        );
    }

    let mut member_docs = Vec::new();
    let mut plain = String::new();
    for member in &sm.members {
        let (l1, l2) = split_degenerate_conic(&member.conic)?;
        let lambda_repr: Value = match member.param.lambda_affine() {
            Some(l) => json_c(l),
            None => json!("inf"),
        };
        member_docs.push(json!({
            "lambda": lambda_repr,
            "param": [json_c(member.param.mu()), json_c(member.param.lambda())],
            "multiplicity": member.multiplicity,
            "conic": Value::Array(member.conic.upper().iter().map(|&c| json_c(c)).collect()),
            "lines": [
                Value::Array(l1.coeffs().iter().map(|&c| json_c(c)).collect()),
                Value::Array(l2.coeffs().iter().map(|&c| json_c(c)).collect()),
            ],
        }));
        let lam = match member.param.lambda_affine() {
            Some(l) => fmt_c(l),
            None => "inf".to_string(),
        };
        plain.push_str(&format!(
            "singular member at \u{3bb} = {lam} (multiplicity {}):\n",
            member.multiplicity
        ));
        let e = member.conic.upper();
        plain.push_str(&format!(
            "  conic [m00,m01,m02,m11,m12,m22] = [{}, {}, {}, {}, {}, {}]\n",
            fmt_c(e[0]),
            fmt_c(e[1]),
            fmt_c(e[2]),
            fmt_c(e[3]),
            fmt_c(e[4]),
            fmt_c(e[5])
        ));
        let lc = l1.coeffs();
        plain.push_str(&format!(
            "  line: {}u + {}v + {}w = 0\n",
            fmt_c(lc[0]),
            fmt_c(lc[1]),
            fmt_c(lc[2])
        ));
        let lc = l2.coeffs();
        plain.push_str(&format!(
            "  line: {}u + {}v + {}w = 0\n",
            fmt_c(lc[0]),
            fmt_c(lc[1]),
            fmt_c(lc[2])
        ));
    }

    let points = base_points(&pc)?;
    let point_docs: Vec<Value> = points
        .iter()
        .map(|(pt, m)| {
            json!({
                "point": json_point(pt),
                "multiplicity": m,
            })
        })
        .collect();

    if cli.json {
        print_json(&json!({
            "command": "pencil-singular",
            "det_cubic_ascending": Value::Array(
                sm.det_cubic.coeffs().iter().map(|&c| json_c(c)).collect()
            ),
            "members": Value::Array(member_docs),
            "base_points": Value::Array(point_docs),
            "repeated_members": repeated,
        }));
    } else {
        print!("{plain}");
        println!("base points (on every member):");
        for (pt, m) in &points {
            println!("  {}  multiplicity {m}", fmt_point(pt));
        }
    }
    Ok(0)
}

fn cmd_conics_intersect(cli: &Cli, entries: &[f64], input: &Option<PathBuf>) -> Result<i32> {
    let (c1, c2) = if let Some(path) = input {
        let parse = || -> std::result::Result<(Conic, Conic), String> {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let doc: Value = serde_json::from_str(&text)
                .map_err(|e| format!("{} is not JSON: {e}", path.display()))?;
            let grab = |key: &str| -> std::result::Result<Conic, String> {
                let list = doc
                    .get(key)
                    .and_then(parse_complex_list)
                    .ok_or_else(|| format!("{}: missing conic \"{key}\"", path.display()))?;
                let entries: [Complex64; 6] = list
                    .try_into()
                    .map_err(|_| format!("conic \"{key}\" needs exactly 6 entries"))?;
                Ok(Conic::from_upper(entries))
            };
            Ok((grab("c1")?, grab("c2")?))
        };
        match parse() {
            Ok(pair) => pair,
            Err(msg) => {
                eprintln!("error: {msg}");
                return Ok(1);
            }
        }
    } else if entries.len() == 12 {
        let as_c = |s: &[f64]| -> [Complex64; 6] {
            [
                c64(s[0]),
                c64(s[1]),
                c64(s[2]),
                c64(s[3]),
                c64(s[4]),
                c64(s[5]),
            ]
        };
        (
            Conic::from_upper(as_c(&entries[..6])),
            Conic::from_upper(as_c(&entries[6..])),
        )
    } else {
        eprintln!(
            "error: give 12 entries (two conics' upper triangles) or --input FILE, got {}",
            entries.len()
        );
        return Ok(1);
    };

    let pc = PencilOfConics { c1, c2 };
    let points = base_points(&pc)?;

    if cli.json {
        let docs: Vec<Value> = points
            .iter()
            .map(|(pt, m)| {
                let affine = pt
                    .to_affine(2)
                    .map(|(x, y)| json!([json_c(x), json_c(y)]))
                    .unwrap_or(Value::Null);
                json!({
                    "point": json_point(pt),
                    "affine": affine,
                    "multiplicity": m,
                })
            })
            .collect();
        print_json(&json!({
            "command": "conics-intersect",
            "points": Value::Array(docs),
        }));
    } else {
        println!("intersection points (with multiplicity):");
        for (pt, m) in &points {
            match pt.to_affine(2) {
                Some((x, y)) => println!(
                    "  {}  multiplicity {m}  (affine x = {}, y = {})",
                    fmt_point(pt),
                    fmt_c(x),
                    fmt_c(y)
                ),
                None => println!("  {}  multiplicity {m}  (at infinity)", fmt_point(pt)),
            }
        }
    }
    Ok(0)
}

fn critical_record_json(r: &CriticalPointRecord) -> Value {
    let lambda = match r.lambda {
        LambdaValue::Finite(l) => json_c(l),
        LambdaValue::Infinity => json!("inf"),
    };
    json!({
        "x": json_c(r.x),
        "y": json_c(r.y),
        "lambda": lambda,
        "residual": r.residual,
    })
}

fn fmt_lambda(lv: LambdaValue) -> String {
    match lv {
        LambdaValue::Finite(l) => fmt_c(l),
        LambdaValue::Infinity => "inf".to_string(),
    }
}

fn cmd_e1_critical_points(cli: &Cli, check_table1: bool, seeds: Option<usize>) -> Result<i32> {
    let cp = CubicPencil::default();
    let mut cfg = SearchConfig::default();
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(t) = cli.tol {
        cfg.gradient_tol = t;
    }
    if let Some(n) = seeds {
        cfg.seed_count = n;
        if n < 500 {
            eprintln!(
                "warning: {n} seeds is far below the default 2000; incomplete coverage likely"
            );
        }
    }

    let records = find_critical_points(&cp, &cfg)?;
    let at_infinity = infinite_critical_points(&cp)?;

    // (row verdicts, critical points matching no row) when checking.
    let table_check: Option<(Vec<bool>, Vec<&CriticalPointRecord>)> = if check_table1 {
        let rows = reference_rows();
        let verdicts: Vec<bool> = rows
            .iter()
            .map(|row| records.iter().any(|r| record_matches_row(r, row)))
            .collect();
        let extras: Vec<&CriticalPointRecord> = records
            .iter()
            .filter(|r| !rows.iter().any(|row| record_matches_row(r, row)))
            .collect();
        Some((verdicts, extras))
    } else {
        None
    };

    if cli.json {
        let mut doc = json!({
            "command": "e1-critical-points",
            "records": Value::Array(records.iter().map(critical_record_json).collect()),
            "line_at_infinity": Value::Array(at_infinity.iter().map(json_point).collect()),
        });
        if let Some((verdicts, extras)) = &table_check {
            let rows = reference_rows();
            let row_docs: Vec<Value> = rows
                .iter()
                .zip(verdicts)
                .enumerate()
                .map(|(i, (row, &matched))| {
                    json!({
                        "row": i + 1,
                        "x": json_c(row.x),
                        "y": json_c(row.y),
                        "lambda": row.lambda_finite.map(json_c).unwrap_or(json!("inf")),
                        "matched": matched,
                    })
                })
                .collect();
            doc["table_check"] = json!({
                "rows": Value::Array(row_docs),
                "matched_count": verdicts.iter().filter(|&&m| m).count(),
                "row_count": rows.len(),
                "found_not_in_table": Value::Array(
                    extras.iter().map(|r| critical_record_json(r)).collect()
                ),
            });
        }
        print_json(&doc);
    } else {
        println!("critical points of the parameter map (chart z = 1):");
        for r in &records {
            println!(
                "  x = {}  y = {}  \u{3bb} = {}  residual {}",
                fmt_c(r.x),
                fmt_c(r.y),
                fmt_lambda(r.lambda),
                fmt_g12(r.residual)
            );
        }
        if at_infinity.is_empty() {
            println!("critical points on the line z = 0: none");
        } else {
            println!("critical points on the line z = 0:");
            for p in &at_infinity {
                println!("  {}", fmt_point(p));
            }
        }
        if let Some((verdicts, extras)) = &table_check {
            println!("reference-row check (two significant figures per component):");
            for (i, matched) in verdicts.iter().enumerate() {
                println!("  row {:2}: {}", i + 1, if *matched { "PASS" } else { "FAIL" });
            }
            println!(
                "matched {} of {} reference rows",
                verdicts.iter().filter(|&&m| m).count(),
                verdicts.len()
            );
            if !extras.is_empty() {
                println!("found critical points not in the reference table:");
                for r in extras {
                    println!(
                        "  x = {}  y = {}  \u{3bb} = {}",
                        fmt_c(r.x),
                        fmt_c(r.y),
                        fmt_lambda(r.lambda)
                    );
                }
            }
        }
    }
    Ok(0)
}

fn cmd_e1_base_points(cli: &Cli) -> Result<i32> {
    let cp = CubicPencil::default();
    let points = base_points_cubic(&cp)?;

    let residuals: Vec<(f64, f64)> = points
        .iter()
        .map(|(pt, _)| {
            let mags = pt.coords().map(|c| c.norm());
            let s1 = cp.f1.eval_abs(mags).max(1.0);
            let s2 = cp.f2.eval_abs(mags).max(1.0);
            (
                cp.f1.eval(pt).norm() / s1,
                cp.f2.eval(pt).norm() / s2,
            )
        })
        .collect();

    if cli.json {
        let docs: Vec<Value> = points
            .iter()
            .zip(&residuals)
            .map(|((pt, m), (r1, r2))| {
                let affine = pt
                    .to_affine(2)
                    .map(|(x, y)| json!([json_c(x), json_c(y)]))
                    .unwrap_or(Value::Null);
                json!({
                    "point": json_point(pt),
                    "affine": affine,
                    "multiplicity": m,
                    "residual_f1": r1,
                    "residual_f2": r2,
                })
            })
            .collect();
        print_json(&json!({
            "command": "e1-base-points",
            "points": Value::Array(docs),
        }));
    } else {
        println!("base points of the default cubic pencil:");
        for ((pt, m), (r1, r2)) in points.iter().zip(&residuals) {
            println!(
                "  {}  multiplicity {m}  residuals {} / {}",
                fmt_point(pt),
                fmt_g12(*r1),
                fmt_g12(*r2)
            );
        }
        let total: u32 = points.iter().map(|(_, m)| m).sum();
        println!("total (with multiplicity): {total}");
    }
    Ok(0)
}

fn cmd_sample_curve(
    cli: &Cli,
    mu: f64,
    lambda: f64,
    window: &[f64],
    grid: usize,
    out: &Option<PathBuf>,
    quartic: &Option<Vec<f64>>,
) -> Result<i32> {
    let w = (window[0], window[1], window[2], window[3]);
    if !(w.0.is_finite() && w.1.is_finite() && w.2.is_finite() && w.3.is_finite())
        || w.0 >= w.1
        || w.2 >= w.3
    {
        eprintln!("error: bad window: need XMIN < XMAX and YMIN < YMAX, all finite");
        return Ok(1);
    }
    if grid < 2 {
        eprintln!("error: --grid must be at least 2");
        return Ok(1);
    }

    let t = PencilParam::new(c64(mu), c64(lambda))?;
    let member = match quartic {
        Some(pqr) => {
            let dq = DepressedQuartic {
                p: c64(pqr[0]),
                q: c64(pqr[1]),
                r: c64(pqr[2]),
                shift: c64(0.0),
            };
            let pc = quartic_to_pencil(&dq);
            pencil_member(&pc, &t).to_homog()
        }
        None => pencil_member_cubic(&CubicPencil::default(), &t),
    };

    let points = sample_curve(&member, w, grid);

    let rendered = if cli.json {
        let doc = json!({
            "command": "sample-curve",
            "mu": mu,
            "lambda": lambda,
            "points": Value::Array(
                points.iter().map(|&(x, y)| json!([x, y])).collect()
            ),
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
    } else {
        let mut csv = String::from("x,y\n");
        for &(x, y) in &points {
            csv.push_str(&format!("{},{}\n", fmt_g12(x), fmt_g12(y)));
        }
        csv
    };

    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Ok(1);
            }
            if !cli.json {
                eprintln!("wrote {} points to {}", points.len(), path.display());
            }
        }
        None => {
            print!("{rendered}");
            std::io::stdout().flush().ok();
        }
    }
    Ok(0)
}

fn cmd_verify(
    cli: &Cli,
    coeffs: &[f64],
    random: Option<usize>,
    degree: usize,
) -> Result<i32> {
    let tol = cli.tol.unwrap_or(1e-8);
    let ocfg = oracle_config(cli.seed);

    // Compare one polynomial across every applicable pipeline; returns the
    // worst pairing deviation, or None on a multiset mismatch.
    let compare = |p: &Poly1| -> Result<Option<f64>> {
        let closed = closed_form::solve_any(p)?.expanded();
        let iterated = oracle::all_roots(p, &ocfg)?.expanded();
        let mut worst = match multiset_max_deviation(&closed, &iterated) {
            Some(d) => d,
            None => return Ok(None),
        };
        if p.degree()? == 4 {
            let pencil = solve_full_quartic_via_pencil(p)?.expanded();
            match multiset_max_deviation(&closed, &pencil) {
                Some(d) => worst = worst.max(d),
                None => return Ok(None),
            }
        }
        Ok(Some(worst))
    };

    let (label, trials, max_dev, failures) = if let Some(n) = random {
        if !(1..=4).contains(&degree) {
            eprintln!("error: --degree must be 1 through 4");
            return Ok(1);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0xA5EED));
        let mut max_dev: f64 = 0.0;
        let mut failures = 0usize;
        for _ in 0..n {
            let mut cs: Vec<Complex64> = (0..degree)
                .map(|_| {
                    let r = rng.gen::<f64>().sqrt();
                    let t = rng.gen::<f64>() * std::f64::consts::TAU;
                    Complex64::from_polar(r, t)
                })
                .collect();
            cs.push(c64(1.0));
            let p = Poly1::new(cs);
            match compare(&p)? {
                Some(d) if d <= tol => max_dev = max_dev.max(d),
                Some(d) => {
                    max_dev = max_dev.max(d);
                    failures += 1;
                }
                None => failures += 1,
            }
        }
        (format!("random degree-{degree}"), n, max_dev, failures)
    } else {
        if coeffs.is_empty() {
            eprintln!("error: give ascending coefficients or --random N");
            return Ok(1);
        }
        let p = Poly1::from_real(coeffs);
        match compare(&p)? {
            Some(d) if d <= tol => ("explicit".to_string(), 1, d, 0),
            Some(d) => ("explicit".to_string(), 1, d, 1),
            None => ("explicit".to_string(), 1, f64::INFINITY, 1),
        }
    };

    let pass = failures == 0;
    if cli.json {
        print_json(&json!({
            "command": "verify",
            "mode": label,
            "trials": trials,
            "tolerance": tol,
            "max_deviation": max_dev,
            "failures": failures,
            "pass": pass,
        }));
    } else {
        println!(
            "{}: {} trial(s), max deviation {}, tolerance {}",
            if pass { "PASS" } else { "FAIL" },
            trials,
            fmt_g12(max_dev),
            fmt_g12(tol)
        );
    }
    Ok(if pass { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Solve {
            coeffs,
            method,
            input,
        } => cmd_solve(cli, coeffs, *method, input),
        Cmd::Resolvent { p, q, r } => cmd_resolvent(cli, *p, *q, *r),
        Cmd::PencilSingular { p, q, r } => cmd_pencil_singular(cli, *p, *q, *r),
        Cmd::ConicsIntersect { entries, input } => cmd_conics_intersect(cli, entries, input),
        Cmd::E1 { sub } => match sub {
            E1Cmd::CriticalPoints {
                check_table1,
                seeds,
            } => cmd_e1_critical_points(cli, *check_table1, *seeds),
            E1Cmd::BasePoints => cmd_e1_base_points(cli),
        },
        Cmd::SampleCurve {
            mu,
            lambda,
            window,
            grid,
            out,
            quartic,
        } => cmd_sample_curve(cli, *mu, *lambda, window, *grid, out, quartic),
        Cmd::Verify {
            coeffs,
            random,
            degree,
        } => cmd_verify(cli, coeffs, *random, *degree),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Some(t) = cli.tol {
        if !t.is_finite() || t <= 0.0 {
            eprintln!("error: --tol must be a positive finite number");
            std::process::exit(1);
        }
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

#[cfg(test)]
mod tests {
    use super::{fmt_c, fmt_g12};
    use num_complex::Complex64;

    #[test]
    fn twelve_significant_digit_formatting() {
        for (value, expected) in [
            (0.0, "0"),
            (-0.0, "0"),
            (3.0, "3"),
            (100.0, "100"),
            (-110.0, "-110"),
            (0.05, "0.05"),
            (-0.00046, "-0.00046"),
            (1e-5, "1e-05"),
            (-2.5e-7, "-2.5e-07"),
            (1e12, "1e+12"),
            (123456789012345.0, "1.23456789012e+14"),
            (1.0000000000000002, "1"),
            (0.1, "0.1"),
            (2.0 / 3.0, "0.666666666667"),
            (-16.97532962950128, "-16.9753296295"),
            (1e11, "100000000000"),
        ] {
            assert_eq!(fmt_g12(value), expected, "formatting {value:e}");
        }
    }

    #[test]
    fn complex_formatting_drops_exact_zero_imaginary_parts() {
        assert_eq!(fmt_c(Complex64::new(2.0, 0.0)), "2");
        assert_eq!(fmt_c(Complex64::new(2.0, 1.0)), "2+1i");
        assert_eq!(fmt_c(Complex64::new(-0.5, -0.87)), "-0.5-0.87i");
        assert_eq!(fmt_c(Complex64::new(0.0, -2.0)), "0-2i");
    }
}
