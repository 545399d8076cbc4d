mod render;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use sturmian_balance::charact::json_int;
use sturmian_balance::sweep::{theorem_table, verify_sweep};
use sturmian_balance::torus::discrepancy_check;
use sturmian_balance::words::prefix;
use sturmian_balance::{
    decide, decode, encode, parse_alpha, points_of_alpha, window_scan, BigAlpha, ContinuedFraction, Error, FastAlpha,
    LinearForm, OstrowskiRep, Result, Scalar,
};

use render::{approx, parse_digits, parse_int, parse_rational, sign_label, table, tsv};

#[derive(Parser)]
#[command(name = "sturmbal", version, about = "Balanced rectangles in Sturmian words, decided exactly")]
struct Cli {
    /// Slope: golden, sqrt2m1, pi4 or cf:a1,a2,...,aK
    #[arg(long, global = true, default_value = "golden")]
    alpha: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized work; every current command is deterministic
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Last starting index for rectangle weight scans
    #[arg(long = "i-max", global = true, default_value_t = 10_000)]
    i_max: u64,

    /// Use only the first DEPTH partial quotients
    #[arg(long, global = true)]
    depth: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Partial quotients, convergents and the sign of q_k·α − p_k
    Cf,
    /// Ostrowski digits of an integer, or the integer of a digit list
    Ostrowski {
        #[command(subcommand)]
        op: OstrowskiOp,
    },
    /// The first LEN symbols a_1 a_2 ... of the characteristic word
    Word {
        #[arg(long)]
        len: usize,
    },
    /// Rectangle weights T(i, m, n) over 1 <= i <= i-max
    Rect {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
    },
    /// Decide balancedness of m x n rectangles from the Ostrowski digits
    Balanced {
        #[arg(short)]
        m: String,
        #[arg(short)]
        n: String,
    },
    /// Count points of {ℓα : ℓ < m} in every interval of length {nα}
    Oracle {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        n: u64,
    },
    /// Compare the digit criterion with the interval oracle for all 2 <= m <= n <= max-n
    Verify {
        #[arg(long = "max-n", default_value_t = 60)]
        max_n: u64,
    },
    /// Verdict and case for every pair 2 <= m <= n <= max-n
    Scan {
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: u64,
    },
    /// Whether |#{ℓ < N : {ℓα} ∈ [x, x+d)} − N·d| < 1
    Discrepancy {
        #[arg(short = 'N')]
        big_n: usize,
        /// Left endpoint as a/b
        #[arg(long, default_value = "0")]
        x: String,
        /// Length {nα}
        #[arg(short, conflicts_with = "d", required_unless_present = "d")]
        n: Option<String>,
        /// Length as a rational a/b
        #[arg(long)]
        d: Option<String>,
    },
}

#[derive(Subcommand)]
enum OstrowskiOp {
    Encode { value: String },
    /// Digits lowest index first, e.g. 0,1,0,0,1
    Decode { digits: String },
}

fn load<T: Scalar>(spec: &str, depth: Option<usize>) -> Result<ContinuedFraction<T>> {
    let cf = parse_alpha::<T>(spec)?;
    match depth {
        Some(0) => Err(Error::InvalidArgument("depth must be at least 1".into())),
        Some(d) if d < cf.depth() => ContinuedFraction::new(cf.quotients()[..d].to_vec()),
        _ => Ok(cf),
    }
}

struct Ctx {
    alpha: String,
    format: Format,
    i_max: u64,
    depth: Option<usize>,
}

impl Ctx {
    fn big(&self) -> Result<BigAlpha> {
        load(&self.alpha, self.depth)
    }

    fn fast(&self) -> Result<FastAlpha> {
        load(&self.alpha, self.depth)
    }

    fn emit(&self, value: Value, text: impl FnOnce() -> String, tsv_rows: impl FnOnce() -> String) {
        let body = match self.format {
            Format::Json => serde_json::to_string_pretty(&value).expect("serializable"),
            Format::Text => text(),
            Format::Tsv => tsv_rows(),
        };
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = writeln!(io::stdout().lock(), "{body}");
    }
}

fn with_header(mut value: Value, alpha: &str) -> Value {
    let mut out = json!({ "schema": 1, "alpha": alpha });
    if let (Some(head), Some(body)) = (out.as_object_mut(), value.as_object_mut()) {
        head.append(body);
    }
    out
}

fn cmd_cf(ctx: &Ctx) -> Result<bool> {
    let cf = ctx.big()?;
    let mut rows = Vec::new();
    for k in 0..=cf.depth() {
        let a = if k == 0 { BigInt::from(0) } else { cf.quotient(k)?.clone() };
        let sign = match cf.sign(&cf.delta(k)?) {
            Ok(s) => sign_label(s).to_string(),
            Err(Error::InsufficientDepth { .. }) => "?".to_string(),
            Err(e) => return Err(e),
        };
        rows.push((k, a, cf.p(k)?.clone(), cf.q(k)?.clone(), sign));
    }
    let approx_alpha = approx(&cf, &LinearForm::alpha_multiple(BigInt::from(1)));
    let cells: Vec<Vec<String>> =
        rows.iter().map(|(k, a, p, q, s)| vec![k.to_string(), a.to_string(), p.to_string(), q.to_string(), s.clone()]).collect();
    let header = ["k", "a_k", "p_k", "q_k", "delta_sign"];
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(k, a, p, q, s)| json!({ "k": k, "a": json_int(a), "p": json_int(p), "q": json_int(q), "delta_sign": s }))
        .collect();
    ctx.emit(
        with_header(json!({ "depth": cf.depth(), "alpha_approx": approx_alpha, "rows": json_rows }), &ctx.alpha),
        || format!("alpha {approx_alpha}\n{}", table(&header, &cells)),
        || tsv(&header, &cells),
    );
    Ok(true)
}

fn digits_json(rep: &OstrowskiRep<BigInt>) -> Value {
    Value::Array(rep.digits().iter().map(json_int).collect())
}

fn cmd_ostrowski(ctx: &Ctx, op: &OstrowskiOp) -> Result<bool> {
    let cf = ctx.big()?;
    let (value, rep) = match op {
        OstrowskiOp::Encode { value } => {
            let n = parse_int(value)?;
            let rep = encode(&cf, &n)?;
            (n, rep)
        }
        OstrowskiOp::Decode { digits } => {
            let rep = OstrowskiRep::from_digits(&cf, parse_digits(digits)?)?;
            (decode(&cf, &rep)?, rep)
        }
    };
    let k0 = rep.k0().ok();
    let terms: Vec<String> = rep
        .digits()
        .iter()
        .enumerate()
        .filter(|(_, b)| **b != BigInt::from(0))
        .map(|(k, b)| if *b == BigInt::from(1) { format!("q_{k}") } else { format!("{b}·q_{k}") })
        .collect();
    let sum = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
    ctx.emit(
        with_header(
            json!({ "value": json_int(&value), "digits": digits_json(&rep), "k0": k0, "top": rep.top_index() }),
            &ctx.alpha,
        ),
        || format!("{value} = {sum}\ndigits {rep}"),
        || tsv(&["value", "digits"], &[vec![value.to_string(), rep.to_string()]]),
    );
    Ok(true)
}

fn cmd_word(ctx: &Ctx, len: usize) -> Result<bool> {
    let word: String = prefix(&ctx.fast()?, len)?.iter().map(|b| char::from(b'0' + b)).collect();
    ctx.emit(with_header(json!({ "len": len, "word": word }), &ctx.alpha), || word.clone(), || word.clone());
    Ok(true)
}

fn cmd_rect(ctx: &Ctx, m: u64, n: u64) -> Result<bool> {
    let report = window_scan(&ctx.fast()?, m, n, ctx.i_max)?;
    let weights = report.weights_seen();
    let listed = |sep: &str| weights.iter().map(u64::to_string).collect::<Vec<_>>().join(sep);
    let verdict = if report.proves_unbalanced() { "unbalanced" } else { "no third weight seen" };
    ctx.emit(
        with_header(report.to_json(), &ctx.alpha),
        || {
            let mut out = format!("weights: {}\n{verdict}", listed(" "));
            for (w, i) in &report.witnesses {
                out.push_str(&format!("\nweight {w} first at i = {i}"));
            }
            if report.depth_limited {
                out.push_str(&format!("\nscan stopped at i = {}: prefix too short", report.i_scanned));
            }
            out
        },
        || tsv(&["m", "n", "weights"], &[vec![m.to_string(), n.to_string(), listed(",")]]),
    );
    Ok(true)
}

fn cmd_balanced(ctx: &Ctx, m: &str, n: &str) -> Result<bool> {
    let cf = ctx.big()?;
    let verdict = decide(&cf, &parse_int(m)?, &parse_int(n)?)?;
    let label = verdict.case.label();
    ctx.emit(
        verdict.to_json(&ctx.alpha),
        || {
            let word = if verdict.balanced { "balanced" } else { "not balanced" };
            let mut extra = Vec::new();
            if let Some(big_m) = verdict.big_m {
                extra.push(format!("M = {big_m}"));
            }
            if let Some(t) = verdict.t {
                extra.push(format!("t = {t}"));
            }
            if let Some(a) = &verdict.a {
                extra.push(format!("a = {a}"));
            }
            let extra = if extra.is_empty() { String::new() } else { format!(", {}", extra.join(", ")) };
            format!(
                "{} x {}: {word} (case {label}{extra})\nm digits {}\nn digits {}",
                verdict.m, verdict.n, verdict.m_digits, verdict.n_digits
            )
        },
        || tsv(&["m", "n", "balanced", "case"], &[vec![verdict.m.to_string(), verdict.n.to_string(), verdict.balanced.to_string(), label.into()]]),
    );
    Ok(true)
}

fn cmd_oracle(ctx: &Ctx, m: u64, n: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let cf = ctx.fast()?;
    let set = points_of_alpha(&cf, m as usize)?;
    let verdict = set.interval_balance_oracle(&cf.frac_mul(&(n as i128))?)?;
    let counts: Vec<String> = verdict.counts_seen.iter().map(usize::to_string).collect();
    ctx.emit(
        with_header(json!({ "m": m, "n": n, "oracle": verdict.to_json() }), &ctx.alpha),
        || {
            let word = if verdict.balanced { "balanced" } else { "not balanced" };
            format!("{m} points, length {{{n}α}}: {word}\ncounts: {}", counts.join(" "))
        },
        || tsv(&["m", "n", "balanced", "counts"], &[vec![m.to_string(), n.to_string(), verdict.balanced.to_string(), counts.join(",")]]),
    );
    Ok(true)
}

fn cmd_verify(ctx: &Ctx, max_n: u64) -> Result<bool> {
    let report = verify_sweep(&ctx.fast()?, max_n, ctx.i_max)?;
    eprintln!("verify: {} pairs in {:.2}s", report.outcomes.len(), report.elapsed.as_secs_f64());
    let mismatches = report.mismatches().count();
    let contradictions = report.contradictions().count();
    let balanced: Vec<String> = report.balanced_pairs().map(|(m, n)| format!("({m},{n})")).collect();
    ctx.emit(
        report.to_json(&ctx.alpha),
        || {
            let mut out = format!(
                "pairs: {}\nmismatches: {mismatches}\ncontradictions: {contradictions}\nunbalanced without a third weight: {}\nbalanced: {}",
                report.outcomes.len(),
                report.unwitnessed().count(),
                balanced.join(" ")
            );
            for o in report.mismatches().chain(report.contradictions()) {
                out.push_str(&format!("\nMISMATCH m={} n={} theorem={} oracle={} scan_weights={}", o.m, o.n, o.theorem, o.oracle, o.scan_weights));
            }
            out
        },
        || {
            let rows: Vec<Vec<String>> = report
                .outcomes
                .iter()
                .map(|o| vec![o.m.to_string(), o.n.to_string(), o.theorem.to_string(), o.oracle.to_string(), o.scan_weights.to_string()])
                .collect();
            tsv(&["m", "n", "theorem", "oracle", "scan_weights"], &rows)
        },
    );
    Ok(report.is_clean())
}

fn cmd_scan(ctx: &Ctx, max_n: u64) -> Result<bool> {
    let rows = theorem_table(&ctx.fast()?, max_n)?;
    let cells: Vec<Vec<String>> =
        rows.iter().map(|v| vec![v.m.to_string(), v.n.to_string(), v.balanced.to_string(), v.case.label().into()]).collect();
    let header = ["m", "n", "balanced", "case"];
    let json_rows: Vec<Value> =
        rows.iter().map(|v| json!({ "m": json_int(&v.m), "n": json_int(&v.n), "balanced": v.balanced, "case": v.case.label() })).collect();
    ctx.emit(
        with_header(json!({ "max_n": max_n, "rows": json_rows }), &ctx.alpha),
        || table(&header, &cells),
        || tsv(&header, &cells),
    );
    Ok(true)
}

fn cmd_discrepancy(ctx: &Ctx, big_n: usize, x: &str, n: Option<&str>, d: Option<&str>) -> Result<bool> {
    let cf = ctx.big()?;
    let x = parse_rational(x)?;
    let d = match (n, d) {
        (Some(n), _) => cf.frac_mul(&parse_int(n)?)?,
        (None, Some(d)) => parse_rational(d)?,
        (None, None) => return Err(Error::InvalidArgument("give -n or --d".into())),
    };
    let minimal = discrepancy_check(&cf, big_n, &x, &d)?;
    let count = points_of_alpha(&cf, big_n)?.count_in_interval(&x, &d)?;
    let nd = d.scale(&BigInt::from(big_n))?;
    ctx.emit(
        with_header(json!({ "N": big_n, "count": count, "N_times_d": approx(&cf, &nd), "minimal": minimal }), &ctx.alpha),
        || format!("count {count}, N·d {}: {}", approx(&cf, &nd), if minimal { "within 1" } else { "off by 1 or more" }),
        || tsv(&["N", "count", "minimal"], &[vec![big_n.to_string(), count.to_string(), minimal.to_string()]]),
    );
    Ok(true)
}

fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { alpha: cli.alpha.clone(), format: cli.format, i_max: cli.i_max, depth: cli.depth };
    let _ = cli.seed;
    let start = Instant::now();
    let result = match &cli.command {
        Command::Cf => cmd_cf(&ctx),
        Command::Ostrowski { op } => cmd_ostrowski(&ctx, op),
        Command::Word { len } => cmd_word(&ctx, *len),
        Command::Rect { m, n } => cmd_rect(&ctx, *m, *n),
        Command::Balanced { m, n } => cmd_balanced(&ctx, m, n),
        Command::Oracle { m, n } => cmd_oracle(&ctx, *m, *n),
        Command::Verify { max_n } => cmd_verify(&ctx, *max_n),
        Command::Scan { max_n } => cmd_scan(&ctx, *max_n),
        Command::Discrepancy { big_n, x, n, d } => cmd_discrepancy(&ctx, *big_n, x, n.as_deref(), d.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification found mismatches ({:.2}s)", start.elapsed().as_secs_f64());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
