//! `knotcolor` command-line front end.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use knotcolor::arith::is_prime;
use knotcolor::codes::{FormatRegistry, GaussCode};
use knotcolor::coloring::{count_colorings, determinant, enumerate_colorings};
use knotcolor::obstruct::{check_main_theorem, corollary_family, not_symmetrically_related, ColoringInterval, Outcome};
use knotcolor::regression;
use knotcolor::symunion::{all_colorings_compatible, build_symmetric_union, MarkedDiagram};
use knotcolor::table;

const DEFAULT_PRIMES: [u64; 3] = [3, 5, 7];

#[derive(Parser)]
#[command(name = "knotcolor", version, about = "Fox colorings, determinants and symmetric unions of knot diagrams")]
struct Cli {
    /// Emit a single JSON document instead of text tables.
    #[arg(long, global = true)]
    json: bool,

    /// Comma-separated primes, e.g. 3,5,7.
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u64>>,

    /// Budget for brute-force enumeration, in candidate vectors.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant and coloring counts of a knot.
    Invariants { knot: String },
    /// Count (or list) the p-colorings of a knot.
    Colorings {
        knot: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        enumerate: bool,
    },
    /// Build a symmetric union from a marked diagram `<code>; inf@g; twist(n)@g; ...`.
    Symunion { diagram: String },
    /// Decide whether the coloring bounds rule out two knots being symmetrically related.
    Obstruct { knot1: String, knot2: String },
    /// Pairwise unrelated family with a common determinant.
    Family,
    /// Run the regression suite.
    Verify,
}

enum Failure {
    Usage(String),
    Compute(String),
}

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Compute(e.to_string())
}

struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    text: String,
    ok: bool,
}

fn resolve(token: &str) -> Result<GaussCode, Failure> {
    if let Some(rec) = table::lookup(token) {
        return Ok(rec.code());
    }
    if token.contains('_') {
        return Err(Failure::Usage(format!("unknown knot name '{token}'")));
    }
    FormatRegistry::default().parse_auto(token).map_err(|e| Failure::Usage(format!("cannot parse '{token}': {e}")))
}

fn check_primes(primes: &[u64]) -> Result<(), Failure> {
    match primes.iter().find(|&&p| !is_prime(p)) {
        Some(p) => Err(Failure::Usage(format!("{p} is not prime"))),
        None => Ok(()),
    }
}

fn interval_json(i: &ColoringInterval) -> Value {
    json!([i.lo.to_string(), i.hi.to_string()])
}

fn outcome_json(o: &Outcome) -> Value {
    match o {
        Outcome::DetMismatch { d1, d2 } => {
            json!({"kind": "DetMismatch", "det1": d1.to_string(), "det2": d2.to_string()})
        }
        Outcome::IntervalDisjoint { p, i1, i2 } => json!({
            "kind": "IntervalDisjoint",
            "p": p,
            "interval1": interval_json(i1),
            "interval2": interval_json(i2),
        }),
        Outcome::Inconclusive => json!({"kind": "Inconclusive"}),
    }
}

fn outcome_text(o: &Outcome) -> String {
    match o {
        Outcome::DetMismatch { d1, d2 } => format!("DetMismatch (det {d1} vs {d2})"),
        Outcome::IntervalDisjoint { p, i1, i2 } => {
            format!("IntervalDisjoint at p={p} ([{}, {}] vs [{}, {}])", i1.lo, i1.hi, i2.lo, i2.hi)
        }
        Outcome::Inconclusive => "Inconclusive".to_string(),
    }
}

fn invariants(knot: &str, primes: &[u64]) -> Result<Report, Failure> {
    let gauss = resolve(knot)?;
    let (code, _) = gauss.to_coloring_code();
    let det = determinant(&code);
    let mut rows = Vec::new();
    let mut text =
        format!("knot         {knot}\ncrossings    {}\ndeterminant  {det}\n\n  p  col_p\n", gauss.crossing_count());
    for &p in primes {
        let col = count_colorings(&code, p).map_err(compute)?;
        writeln!(text, "{p:>3}  {col}").unwrap();
        rows.push(json!({"p": p, "col": col.to_string()}));
    }
    Ok(Report {
        command: "invariants",
        inputs: json!({"knot": knot, "code": gauss.to_string(), "primes": primes}),
        results: json!({"crossings": gauss.crossing_count(), "determinant": det.to_string(), "colorings": rows}),
        text,
        ok: true,
    })
}

fn colorings(knot: &str, p: u64, enumerate: bool, limit: u64) -> Result<Report, Failure> {
    check_primes(&[p])?;
    let gauss = resolve(knot)?;
    let (code, _) = gauss.to_coloring_code();
    let count = count_colorings(&code, p).map_err(compute)?;
    let mut text = format!("knot     {knot}\nstrands  {}\ncol_{p}    {count}\n", code.strand_count());
    let mut results = json!({"strands": code.strand_count(), "count": count.to_string()});
    if enumerate {
        let list = enumerate_colorings(&code, p, limit).map_err(compute)?;
        text.push('\n');
        for v in &list {
            let row: Vec<String> = v.colors.iter().map(|c| c.to_string()).collect();
            writeln!(text, "{}", row.join(" ")).unwrap();
        }
        results["colorings"] = json!(list.iter().map(|v| v.colors.clone()).collect::<Vec<_>>());
    }
    Ok(Report {
        command: "colorings",
        inputs: json!({"knot": knot, "code": gauss.to_string(), "p": p, "enumerate": enumerate, "limit": limit}),
        results,
        text,
        ok: true,
    })
}

fn symunion(diagram: &str, primes: &[u64], limit: u64) -> Result<Report, Failure> {
    let m: MarkedDiagram = diagram.parse().map_err(|e| Failure::Usage(format!("cannot parse marked diagram: {e}")))?;
    let report = check_main_theorem(&m, primes).map_err(compute)?;
    let union = build_symmetric_union(&m).map_err(compute)?;
    let mut text = format!(
        "partial       {m}\ncrossings     {}\ndet(J)        {}\ndet(K)        {}\n\n  p  col_p(J)  col_p(K)  bound             compatible\n",
        report.union_crossings, report.det_partial, report.det_union
    );
    let mut rows = Vec::new();
    for row in &report.rows {
        let verdict = match all_colorings_compatible(&union, row.p, limit) {
            Ok((true, _)) => json!(true),
            Ok((false, _)) => json!(false),
            Err(e) => json!(format!("skipped: {e}")),
        };
        let shown = match &verdict {
            Value::Bool(b) => {
                if *b {
                    "yes".to_string()
                } else {
                    "no".to_string()
                }
            }
            other => other.as_str().unwrap_or_default().to_string(),
        };
        let bound = format!("[{}, {}]", row.interval.lo, row.interval.hi);
        writeln!(text, "{:>3}  {:>8}  {:>8}  {bound:<16}  {shown}", row.p, row.col_partial, row.col_union).unwrap();
        rows.push(json!({
            "p": row.p,
            "col_partial": row.col_partial.to_string(),
            "col_union": row.col_union.to_string(),
            "bound": interval_json(&row.interval),
            "compatible": verdict,
        }));
    }
    text.push_str("\nbounds hold\n");
    Ok(Report {
        command: "symunion",
        inputs: json!({"diagram": m.to_string(), "primes": primes, "limit": limit}),
        results: json!({
            "crossings": report.union_crossings,
            "code": union.gauss.to_string(),
            "det_partial": report.det_partial.to_string(),
            "det_union": report.det_union.to_string(),
            "bounds_hold": true,
            "rows": rows,
        }),
        text,
        ok: true,
    })
}

fn obstruct(k1: &str, k2: &str, primes: Option<&[u64]>) -> Result<Report, Failure> {
    let (c1, _) = resolve(k1)?.to_coloring_code();
    let (c2, _) = resolve(k2)?.to_coloring_code();
    let v = not_symmetrically_related(&c1, &c2, primes).map_err(compute)?;
    let mut text = format!("{k1} vs {k2}\nverdict  {}\nprimes   {:?}\n", outcome_text(&v.outcome), v.checked_primes);
    if v.is_conclusive() {
        text.push_str("not symmetrically related\n");
    }
    Ok(Report {
        command: "obstruct",
        inputs: json!({"knot1": k1, "knot2": k2, "primes": primes}),
        results: json!({
            "verdict": outcome_json(&v.outcome),
            "checked_primes": v.checked_primes,
            "conclusive": v.is_conclusive(),
        }),
        text,
        ok: true,
    })
}

fn bits_label(bits: &[u8]) -> String {
    bits.iter().map(|b| b.to_string()).collect()
}

fn family(primes: &[u64]) -> Result<Report, Failure> {
    let cert = corollary_family(primes).map_err(|e| match e {
        knotcolor::obstruct::ObstructError::BadParameter(msg) => Failure::Usage(msg),
        other => compute(other),
    })?;
    let mut text = format!("primes       {:?}\ndeterminant  {}\n\nbits  crossings", cert.primes, cert.common_det);
    for p in &cert.primes {
        write!(text, "  {:>10}", format!("col_{p}")).unwrap();
    }
    text.push('\n');
    let mut members = Vec::new();
    for mb in &cert.members {
        write!(text, "{:<4}  {:>9}", bits_label(&mb.bits), mb.crossings).unwrap();
        for p in &cert.primes {
            write!(text, "  {:>10}", mb.cols[p]).unwrap();
        }
        text.push('\n');
        let cols: serde_json::Map<String, Value> =
            mb.cols.iter().map(|(p, c)| (p.to_string(), json!(c.to_string()))).collect();
        members.push(json!({
            "bits": bits_label(&mb.bits),
            "crossings": mb.crossings,
            "det": mb.det.to_string(),
            "cols": cols,
        }));
    }
    text.push('\n');
    let mut pairs = Vec::new();
    for ((i, j), v) in &cert.pairwise_verdicts {
        let (a, b) = (bits_label(&cert.members[*i].bits), bits_label(&cert.members[*j].bits));
        writeln!(text, "{a} vs {b}  {}", outcome_text(&v.outcome)).unwrap();
        pairs.push(json!({"members": [a, b], "verdict": outcome_json(&v.outcome)}));
    }
    Ok(Report {
        command: "family",
        inputs: json!({"primes": primes}),
        results: json!({"determinant": cert.common_det.to_string(), "members": members, "pairs": pairs}),
        text,
        ok: true,
    })
}

fn verify() -> Report {
    let results: Vec<_> = regression::criteria().iter().map(|c| c.run()).collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut text = String::new();
    for r in &results {
        writeln!(text, "{r}").unwrap();
    }
    writeln!(text, "{} passed, {failed} failed", results.len() - failed).unwrap();
    let rows: Vec<Value> =
        results.iter().map(|r| json!({"id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail})).collect();
    Report {
        command: "verify",
        inputs: json!({}),
        results: json!({"criteria": rows, "failed": failed}),
        text,
        ok: failed == 0,
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if let Some(ps) = &cli.primes {
        check_primes(ps)?;
    }
    let primes = cli.primes.as_deref();
    match &cli.command {
        Command::Invariants { knot } => invariants(knot, primes.unwrap_or(&DEFAULT_PRIMES)),
        Command::Colorings { knot, p, enumerate } => colorings(knot, *p, *enumerate, cli.limit),
        Command::Symunion { diagram } => symunion(diagram, primes.unwrap_or(&DEFAULT_PRIMES), cli.limit),
        Command::Obstruct { knot1, knot2 } => obstruct(knot1, knot2, primes),
        Command::Family => family(primes.unwrap_or(&[3, 5])),
        Command::Verify => Ok(verify()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                let doc = json!({
                    "command": report.command,
                    "inputs": report.inputs,
                    "results": report.results,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("values serialize"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
