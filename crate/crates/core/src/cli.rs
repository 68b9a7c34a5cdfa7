//! Command-line front end. Every command builds a JSON value first; the
//! human-readable output is rendered from that value.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::bounds::{
    check_bounds, compare_g, divisibility, g_from_zeta, g_poly, h_poly, subcode_average_identity, zero_count_audit,
    Inequality,
};
use crate::code::{parse_code, weight_distribution, LinearCode, WeightDistribution};
use crate::enumerator::{macwilliams, normalize};
use crate::error::{Error, Result};
use crate::exactmath::{rational_to_string, BiPoly, RatFun, Rational, UniPoly};
use crate::extremal::{check_ultraspherical, critical_circle_radii, extremal_sd_enumerator};
use crate::gf::field_new;
use crate::matroid::{
    check_greene, check_greene_normalized, check_greene_symmetric, clifford_check, find_two_disjoint_bases,
    greene_predict, is_self_complementary, normalized_enumerator_series, normalized_rank_gen, rank_gen_poly, rank_profile, wn_plus,
    CliffordMode, MAX_SUBSET_LENGTH,
};
use crate::zeta::{
    a_coefficient_bound, check_functional_eq, check_two_var_compat, two_var_functional_eq, two_var_zeta,
    zeta_from_enumerator_def1, zeta_of,
};

/// Environment variable capping the worker count (0 or absent: default).
pub const THREADS_ENV: &str = "CODEZETA_THREADS";

/// Samples used by `report` when the code is too long for an exhaustive
/// Clifford pass.
pub const REPORT_SAMPLES: u64 = 4096;

/// Largest dimension for which the binary-to-GF(4) Greene prediction is
/// checked against direct enumeration.
const EXTENSION_CHECK_MAX_K: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "codezeta", version, about = "Zeta functions, rank-generating polynomials and bounds for linear codes")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct CodeArg {
    /// Code file: `q n k`, then k rows of n symbols.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weight distribution, d and dual distance.
    Weights(CodeArg),
    /// Zeta polynomial by both routes, genera, functional equation.
    Zeta(CodeArg),
    /// Rank-generating polynomial, its normalized form and W+.
    Rankgen(CodeArg),
    /// Greene's identities.
    Greene(CodeArg),
    /// Two-variable zeta function.
    Twovar(CodeArg),
    /// g(w), h(w) and the divisibility bounds.
    Bounds(CodeArg),
    /// Clifford inequality 2r(A) >= |A| over column subsets.
    Clifford {
        #[command(flatten)]
        code: CodeArg,
        /// Visit every subset (default when n is small enough).
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Visit this many random subsets.
        #[arg(long, requires = "seed")]
        sample: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Synthesize an extremal self-dual weight enumerator.
    Extremal {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        n: usize,
        /// Also check the Gegenbauer identity and root radii (Type IV).
        #[arg(long)]
        ultraspherical: bool,
    },
    /// Everything above for one code.
    Report(CodeArg),
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub command: String,
    pub ok: bool,
    pub result: Value,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        json!({ "command": self.command, "ok": self.ok, "result": self.result })
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn uni(p: &UniPoly, var: &str) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "display": p.display_with(var),
    })
}

fn bi(p: &BiPoly, xv: &str, yv: &str) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(&(i, j), c)| json!({ xv: i, yv: j, "coeff": rat(c) }))
        .collect();
    json!({ "terms": terms, "display": p.display_with(xv, yv) })
}

fn ratfun(f: &RatFun, xv: &str, yv: &str) -> Value {
    json!({ "numerator": bi(&f.num, xv, yv), "denominator": bi(&f.den, xv, yv) })
}

fn ineq(i: &Inequality) -> Value {
    json!({ "lhs": i.lhs, "rhs": i.rhs, "holds": i.holds(), "slack": i.slack() })
}

fn one_based(v: &[usize]) -> Value {
    json!(v.iter().map(|j| j + 1).collect::<Vec<_>>())
}

fn distribution(wd: &WeightDistribution) -> Vec<Value> {
    wd.counts.iter().map(big).collect()
}

/// Reads and parses a code file.
pub fn load_code(path: &std::path::Path) -> Result<LinearCode> {
    parse_code(&std::fs::read_to_string(path)?)
}

struct Context {
    code: LinearCode,
    wd: WeightDistribution,
    dual: WeightDistribution,
}

impl Context {
    fn new(code: &LinearCode) -> Result<Self> {
        let wd = weight_distribution(code)?;
        let dual = macwilliams(&wd)?;
        Ok(Context { code: code.clone(), wd, dual })
    }

    fn nondegenerate(&self) -> bool {
        self.wd.d >= 2 && self.wd.d_dual >= 2
    }
}

fn weights_section(cx: &Context) -> (Value, bool) {
    let wd = &cx.wd;
    let v = json!({
        "q": wd.q, "n": wd.n, "k": wd.k, "d": wd.d, "d_dual": wd.d_dual,
        "counts": distribution(wd),
        "dual_counts": distribution(&cx.dual),
    });
    (v, true)
}

fn zeta_section(cx: &Context) -> Result<(Value, bool)> {
    let pc = zeta_of(&cx.wd)?;
    let (route2, agree) = match zeta_from_enumerator_def1(&cx.wd) {
        Ok(z) => (uni(&z.p, "T"), z.p == pc.p),
        Err(e) if e.is_check_failure() => (Value::Null, false),
        Err(e) => return Err(e),
    };
    let dual_zeta = if cx.wd.k < cx.wd.n { Some(zeta_of(&cx.dual)?) } else { None };
    let fe = dual_zeta.as_ref().map(|pd| check_functional_eq(&pc, pd));
    let at_one = pc.value_at_one();
    let degree = pc.p.degree().map_or(-1, |d| d as i64);
    let nondegenerate = cx.nondegenerate();
    let degree_ok = degree == pc.expected_degree();
    let at_one_ok = at_one.is_one();
    let ac = a_coefficient_bound(&pc, &normalize(&cx.wd).a_list)?;
    // degree, P(1) and the functional equation are claimed for d, d_dual >= 2
    let ok = agree
        && (!nondegenerate || (degree_ok && at_one_ok && fe != Some(false)))
        && (!ac.identity_applicable || ac.identity_holds)
        && ac.bound_holds;
    let v = json!({
        "p": uni(&pc.p, "T"),
        "nondegenerate": nondegenerate,
        "p_bivariate_route": route2,
        "routes_agree": agree,
        "degree": degree,
        "expected_degree": pc.expected_degree(),
        "degree_matches": degree_ok,
        "value_at_one": rat(&at_one),
        "g": pc.g,
        "g_dual": pc.g_dual,
        "p_dual": dual_zeta.as_ref().map(|pd| uni(&pd.p, "T")),
        "functional_equation": fe,
        "a_coefficient": {
            "a": rat(&ac.a),
            "identity_applicable": ac.identity_applicable,
            "identity_holds": ac.identity_holds,
            "bound": rat(&ac.bound),
            "bound_holds": ac.bound_holds,
        },
    });
    Ok((v, ok))
}

fn rankgen_section(cx: &Context) -> Result<(Value, bool)> {
    let profile = rank_profile(&cx.code)?;
    let w = profile.rank_gen();
    let wn = profile.normalized();
    let v = json!({
        "w": bi(&w.w, "x", "y"),
        "w_normalized": bi(&wn.wn, "x", "y"),
        "w_plus": ratfun(&wn_plus(&wn), "x", "y"),
    });
    Ok((v, true))
}

fn greene_section(cx: &Context) -> Result<(Value, bool)> {
    let w = rank_gen_poly(&cx.code)?;
    let wn = normalized_rank_gen(&cx.code)?;
    let plain = check_greene(&cx.wd, &w);
    let normalized = check_greene_normalized(&normalized_enumerator_series(&cx.wd), &wn, cx.wd.q)?;
    let symmetric = is_self_complementary(&cx.wd).then(|| check_greene_symmetric(&cx.wd, &wn));
    let extension = if cx.code.q() == 2 && cx.code.k() <= EXTENSION_CHECK_MAX_K {
        let lifted = cx.code.over_field(field_new(4)?)?;
        Some(greene_predict(&w, 4) == weight_distribution(&lifted)?.enumerator_poly())
    } else {
        None
    };
    let ok = plain && normalized && symmetric != Some(false) && extension != Some(false);
    let v = json!({
        "greene": plain,
        "greene_normalized": normalized,
        "greene_symmetric": symmetric,
        "extension_field_gf4": extension,
    });
    Ok((v, ok))
}

fn twovar_section(cx: &Context) -> Result<(Value, bool)> {
    let pc = zeta_of(&cx.wd)?;
    let wn = normalized_rank_gen(&cx.code)?;
    let z = two_var_zeta(&wn_plus(&wn), pc.g)?;
    let compatible = check_two_var_compat(&z, &pc);
    let nondegenerate = cx.nondegenerate();
    let v = json!({
        "z": ratfun(&z.value, "T", "u"),
        "nondegenerate": nondegenerate,
        "g": z.g,
        "compatible": compatible,
        "functional_equation": two_var_functional_eq(&z),
    });
    Ok((v, compatible || !nondegenerate))
}

fn bounds_section(cx: &Context) -> Result<(Value, bool)> {
    let a = normalize(&cx.wd);
    let d_dual = cx.wd.d_dual;
    let g = g_poly(&a, d_dual)?;
    let gz = g_from_zeta(&zeta_of(&cx.wd)?);
    let cmp = compare_g(&g, &gz);
    let c = divisibility(&cx.wd);
    let h = h_poly(&a, c, d_dual)?;
    let audit = zero_count_audit(&h.h, &a, c);
    let report = check_bounds(&cx.wd, &cx.dual);
    let subcode = subcode_average_identity(&a, d_dual);
    let ms = report.mallows_sloane.as_ref().map(|m| {
        json!({ "type": format!("{:?}", m.kind), "d": m.d, "bound": m.bound, "holds": m.holds(), "met": m.met(),
                "slack": m.bound as i64 - m.d as i64 })
    });
    // g = g_from_zeta is an identity only on nondegenerate codes
    let ok = report.passed() && (!cx.nondegenerate() || cmp.agree_from_two) && audit.degree_consistent && subcode;
    let v = json!({
        "g": uni(&g.g, "w"),
        "g_degree": g.degree(),
        "g_from_zeta": uni(&gz.g, "w"),
        "g_agree_from_w2": cmp.agree_from_two,
        "g_at_one": [rat(&cmp.at_one.0), rat(&cmp.at_one.1)],
        "c": c,
        "h": uni(&h.h, "w"),
        "h_degree_bound": h.degree_bound,
        "h_degree_drop": h.degree_drop,
        "zero_audit": {
            "integer_zeros": audit.integer_zeros,
            "attributable": audit.attributable,
            "bound": rat(&audit.bound),
            "meets_bound": audit.meets_bound,
            "degree_consistent": audit.degree_consistent,
        },
        "subcode_average_identity": subcode,
        "singleton": ineq(&report.singleton),
        "dual_distance": ineq(&report.dual_distance),
        "divisibility": ineq(&report.divisibility),
        "strong": report.strong.as_ref().map(ineq),
        "mallows_sloane": ms,
    });
    Ok((v, ok))
}

fn clifford_section(cx: &Context, mode: CliffordMode) -> Result<(Value, bool)> {
    let r = clifford_check(&cx.code, mode)?;
    let failed: Vec<Value> = r
        .decompositions
        .iter()
        .filter(|d| !d.ok)
        .take(8)
        .map(|d| json!({ "subset": one_based(&d.subset), "dim_on_subset": d.dim_on_subset,
                          "dim_on_complement": d.dim_on_complement, "predicted_dim": d.predicted_dim }))
        .collect();
    let bases = find_two_disjoint_bases(&cx.code).map(|(a, b)| json!([one_based(&a), one_based(&b)]));
    let mode_v = match mode {
        CliffordMode::Exhaustive => json!({ "exhaustive": true }),
        CliffordMode::Sample { count, seed } => json!({ "sample": count, "seed": seed }),
    };
    let v = json!({
        "class": r.class,
        "mode": mode_v,
        "visited": r.visited,
        "inequality_expected": r.inequality_expected,
        "violations": r.violations,
        "first_violation": r.first_violation.as_deref().map(one_based),
        "equality_witnesses": r.equality_witnesses,
        "decompositions_checked": r.decompositions.len(),
        "decompositions_ok": r.decompositions_ok(),
        "failed_decompositions": failed,
        "disjoint_bases": bases,
    });
    Ok((v, r.passed()))
}

/// Default Clifford mode for a code of length `n`.
pub fn default_clifford_mode(n: usize) -> CliffordMode {
    if n <= MAX_SUBSET_LENGTH {
        CliffordMode::Exhaustive
    } else {
        CliffordMode::Sample { count: REPORT_SAMPLES, seed: 0 }
    }
}

type Section<'a> = Box<dyn Fn() -> Result<(Value, bool)> + 'a>;

/// Runs one code command (`weights`, `zeta`, `rankgen`, `greene`, `twovar`,
/// `bounds`, `clifford`, `report`).
pub fn build_report(command: &str, code: &LinearCode, clifford: CliffordMode) -> Result<Outcome> {
    let cx = Context::new(code)?;
    let (result, ok) = match command {
        "weights" => weights_section(&cx),
        "zeta" => zeta_section(&cx)?,
        "rankgen" => rankgen_section(&cx)?,
        "greene" => greene_section(&cx)?,
        "twovar" => twovar_section(&cx)?,
        "bounds" => bounds_section(&cx)?,
        "clifford" => clifford_section(&cx, clifford)?,
        "report" => {
            let mut all = Map::new();
            let mut ok = true;
            let sections: [(&str, Section); 7] = [
                ("weights", Box::new(|| Ok(weights_section(&cx)))),
                ("zeta", Box::new(|| zeta_section(&cx))),
                ("rankgen", Box::new(|| rankgen_section(&cx))),
                ("greene", Box::new(|| greene_section(&cx))),
                ("twovar", Box::new(|| twovar_section(&cx))),
                ("bounds", Box::new(|| bounds_section(&cx))),
                ("clifford", Box::new(|| clifford_section(&cx, clifford))),
            ];
            for (name, f) in sections {
                let (v, sec_ok) = match f() {
                    Ok(r) => r,
                    Err(e) if e.is_check_failure() => (json!({ "error": e.to_string() }), false),
                    Err(e) => return Err(e),
                };
                ok &= sec_ok;
                all.insert(name.to_string(), json!({ "ok": sec_ok, "result": v }));
            }
            (Value::Object(all), ok)
        }
        other => return Err(Error::Usage(format!("unknown command '{other}'"))),
    };
    Ok(Outcome { command: command.to_string(), ok, result })
}

/// Synthesizes an extremal enumerator and, optionally, runs the Type IV
/// zeta-zero checks on it.
pub fn extremal_report(q: u32, c: usize, n: usize, ultraspherical: bool) -> Result<Outcome> {
    let e = extremal_sd_enumerator(q, c, n)?;
    let wd = e.to_distribution().ok();
    let self_invariant = wd.as_ref().is_some_and(|w| macwilliams(w).is_ok_and(|b| b.counts == w.counts));
    let divisible = e.counts.iter().enumerate().all(|(i, v)| i % c == 0 || num_traits::Zero::is_zero(v));
    let mut ok = e.nonnegative() && self_invariant && divisible;
    let mut result = json!({
        "q": q, "c": c, "n": n,
        "d": e.d,
        "bound": e.bound,
        "meets_bound": e.d == e.bound,
        "achieved_distance": e.achieved_distance(),
        "counts": e.counts.iter().map(rat).collect::<Vec<_>>(),
        "nonnegative": e.nonnegative(),
        "self_invariant": self_invariant,
        "divisible": divisible,
    });
    if ultraspherical {
        if (q, c) != (4, 2) || n < 6 || !(n - 3).is_multiple_of(3) || ((n - 3) / 3).is_multiple_of(2) {
            return Err(Error::Usage("--ultraspherical needs q=4, c=2 and n=3m+3 with m odd".into()));
        }
        let m = (n - 3) / 3;
        let wd = wd.ok_or_else(|| Error::CheckFailed("extremal enumerator is not integral".into()))?;
        let p = zeta_of(&wd)?;
        let u = check_ultraspherical(&p.p, m)?;
        let radii = if p.p.degree().unwrap_or(0) >= 1 { critical_circle_radii(&p.p)? } else { Vec::new() };
        let target = 1.0 / f64::from(q).sqrt();
        let on_circle = radii.iter().all(|r| (r - target).abs() <= 1e-9);
        ok &= u.holds && on_circle;
        result["ultraspherical"] = json!({
            "m": m,
            "p": uni(&p.p, "T"),
            "lambda": rat(&u.lambda),
            "holds": u.holds,
            "radii": radii,
            "on_circle": on_circle,
        });
    }
    Ok(Outcome { command: "extremal".into(), ok, result })
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::UnsupportedField(_) => "unsupported-field",
        Error::ElementOutOfRange { .. } => "element-out-of-range",
        Error::DivisionByZero(_) => "division-by-zero",
        Error::Parse { .. } => "parse",
        Error::RankDeficient { .. } => "rank-deficient",
        Error::InvalidParameters(_) => "invalid-parameters",
        Error::Capacity(_) => "capacity",
        Error::InvalidDistribution(_) => "invalid-distribution",
        Error::Inconsistent(_) => "inconsistent",
        Error::CheckFailed(_) => "check-failed",
        Error::Structural(_) => "structural",
        Error::Numerical(_) => "numerical",
        Error::Infeasible { .. } => "infeasible",
        Error::Ambiguous { .. } => "ambiguous",
        Error::Usage(_) => "usage",
        Error::Io(_) => "io",
    }
}

/// Exit code for an error: 1 for failed checks, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_check_failure() {
        1
    } else {
        2
    }
}

/// Text rendering of a JSON value, one `key: value` per line.
pub fn render_human(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            // polynomials print as their display string
            if let Some(Value::String(s)) = map.get("display") {
                out.push_str(&format!("{pad}{s}\n"));
                return;
            }
            for (k, x) in map {
                match (scalar(x), x) {
                    (Some(s), _) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    (None, Value::Object(m)) if m.get("display").is_some() => {
                        out.push_str(&format!("{pad}{k}: {}\n", m["display"].as_str().unwrap_or_default()))
                    }
                    (None, _) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("{THREADS_ENV} must be a non-negative integer, got '{raw}'")))?;
    if n > 0 {
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    configure_threads()?;
    let code_cmd = |name: &str, arg: &CodeArg, mode: Option<CliffordMode>| -> Result<Outcome> {
        let code = load_code(&arg.file)?;
        let mode = mode.unwrap_or_else(|| default_clifford_mode(code.n()));
        build_report(name, &code, mode)
    };
    match &cli.command {
        Command::Weights(a) => code_cmd("weights", a, None),
        Command::Zeta(a) => code_cmd("zeta", a, None),
        Command::Rankgen(a) => code_cmd("rankgen", a, None),
        Command::Greene(a) => code_cmd("greene", a, None),
        Command::Twovar(a) => code_cmd("twovar", a, None),
        Command::Bounds(a) => code_cmd("bounds", a, None),
        Command::Report(a) => code_cmd("report", a, None),
        Command::Clifford { code, exhaustive, sample, seed } => {
            let mode = match (exhaustive, sample) {
                (true, _) => Some(CliffordMode::Exhaustive),
                (false, Some(count)) => Some(CliffordMode::Sample { count: *count, seed: seed.unwrap_or(0) }),
                (false, None) => None,
            };
            code_cmd("clifford", code, mode)
        }
        Command::Extremal { q, c, n, ultraspherical } => extremal_report(*q, *c, *n, *ultraspherical),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the output. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.to_json()).expect("serializable") + "\n"
            } else {
                let status = if outcome.ok { "all checks pass" } else { "CHECK FAILED" };
                format!("{}: {status}\n{}", outcome.command, render_human(&outcome.result))
            };
            let _ = out.write_all(text.as_bytes());
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                let v = json!({ "ok": false, "error": { "kind": error_kind(&e), "message": e.to_string() } });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
