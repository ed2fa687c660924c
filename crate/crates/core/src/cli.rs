//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::analysis::{
    certify_smooth, irreducible_method_b, method_b_cost, singular_points, IrrMethod, Verdict,
    DEFAULT_FACTOR_BUDGET,
};
use crate::bipoly::{parse_bipoly, BiPoly};
use crate::bounds::{bound_parts, check_attainment, segre_degree};
use crate::error::Error;
use crate::families::{construct, Orientation};
use crate::filling::{decompose, is_filling};
use crate::geom::count_points;
use crate::gf::FieldSpec;
use crate::search::{census, min_bidegree_scan, CensusOptions};

/// Exit status for a failed check requested on the command line.
pub const EXIT_VERIFY: i32 = 1;
/// Exit status for bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "fillcurve",
    version,
    about = "Filling curves on P1 x P1 over finite fields"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized factorization steps (echoed in the output).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field order (canonical modulus).
    #[arg(long, conflicts_with = "field")]
    pub q: Option<u64>,
    /// Explicit field, e.g. "p=3,e=2,mod=[1,0,1]" or "q=9".
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Polynomial text, or @path to read it from a file.
    #[arg(long)]
    pub poly: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the minimal filling curve for q and verify it.
    Construct {
        #[arg(long)]
        q: u64,
        /// Swap the roles of X and Y.
        #[arg(long)]
        transposed: bool,
    },
    /// Check filling, smoothness, irreducibility and point count.
    Verify {
        #[command(flatten)]
        input: PolyArgs,
        /// Also list singular points over extensions up to this degree.
        #[arg(long)]
        oracle: Option<usize>,
        #[arg(long)]
        expect_filling: bool,
        #[arg(long)]
        expect_smooth: bool,
        #[arg(long)]
        expect_irreducible: bool,
    },
    /// Write a filling polynomial as f*K_X + g*K_Y.
    Decompose {
        #[command(flatten)]
        input: PolyArgs,
    },
    /// Classify every filling polynomial of one bi-degree.
    Census {
        #[command(flatten)]
        field: FieldArgs,
        /// Bi-degree as A,B.
        #[arg(long, value_parser = parse_pair)]
        bidegree: (usize, usize),
        /// Also certify smoothness of each candidate.
        #[arg(long)]
        smooth: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        partitions: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_exemplars: usize,
    },
    /// Existence table of irreducible filling polynomials by bi-degree.
    Scan {
        #[command(flatten)]
        field: FieldArgs,
        /// Largest bi-degree as A,B.
        #[arg(long, value_parser = parse_pair)]
        max: (usize, usize),
        /// Search cells that the degree lemma already rules out.
        #[arg(long)]
        brute_small: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Evaluate the point-count bound for curves in P^r.
    Bound {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u64,
    },
    /// Count zeros on P1 x P1 over GF(q^m).
    Count {
        #[command(flatten)]
        input: PolyArgs,
        #[arg(long, default_value_t = 1)]
        ext: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Describe a field.
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected A,B but got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

/// A failure with the exit status it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible { .. } | Error::NotFilling | Error::BidegreeTooSmall { .. } => {
                EXIT_VERIFY
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn resolve_field(args: &FieldArgs) -> Result<FieldSpec, Failure> {
    match (&args.q, &args.field) {
        (Some(q), None) => Ok(FieldSpec::from_order(*q)?),
        (None, Some(text)) => Ok(FieldSpec::parse(text)?),
        _ => Err(usage("give exactly one of --q or --field")),
    }
}

fn resolve_poly(args: &PolyArgs) -> Result<BiPoly, Failure> {
    let field = resolve_field(&args.field)?;
    let text = match args.poly.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        None => args.poly.clone(),
    };
    Ok(parse_bipoly(text.trim(), &field)?)
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| usage(e.to_string()))?;
    Ok(pool.install(f))
}

/// Irreducibility verdict reusing an existing smoothness verdict.
fn irreducibility(poly: &BiPoly, smooth: Verdict) -> (Option<bool>, Option<IrrMethod>) {
    if method_b_cost(poly) <= DEFAULT_FACTOR_BUDGET {
        if let Ok(r) = irreducible_method_b(poly, DEFAULT_FACTOR_BUDGET) {
            return (Some(r.irreducible), Some(IrrMethod::B));
        }
    }
    if smooth == Verdict::Smooth && poly.a() > 0 && poly.b() > 0 {
        return (Some(true), Some(IrrMethod::A));
    }
    (None, None)
}

struct Outcome {
    doc: Value,
    text: String,
    code: i32,
}

fn summary(poly: &BiPoly) -> Result<Value, Failure> {
    let filling = is_filling(poly)?;
    let cert = certify_smooth(poly);
    let (irreducible, method) = irreducibility(poly, cert.verdict);
    let points = count_points(poly, 1)?;
    Ok(json!({
        "filling": filling,
        "smooth": cert.verdict == Verdict::Smooth,
        "verdict": cert.verdict,
        "irreducible": irreducible,
        "irreducible_method": method,
        "points": points,
        "certificate": cert.to_json(),
    }))
}

fn text_lines(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, Failure> {
    let seed = cli.seed;
    match &cli.command {
        Command::Construct { q, transposed } => {
            let orientation = if *transposed {
                Orientation::Transposed
            } else {
                Orientation::Standard
            };
            let poly = construct(*q, orientation)?;
            let s = summary(&poly)?;
            let report = check_attainment(&poly)?;
            let doc = json!({
                "command": "construct",
                "seed": seed,
                "q": q,
                "orientation": orientation,
                "field": poly.field().describe(),
                "bidegree": [poly.a(), poly.b()],
                "polynomial": poly.to_text(),
                "summary": s,
                "bound": report,
            });
            let text = format!(
                "{}\n{}",
                poly.to_text(),
                text_lines(&[
                    ("bidegree", format!("({},{})", poly.a(), poly.b())),
                    ("filling", show(&s["filling"])),
                    ("smooth", show(&s["smooth"])),
                    ("irreducible", show(&s["irreducible"])),
                    ("points", show(&s["points"])),
                    (
                        "bound",
                        format!(
                            "{} (attained: {})",
                            report.bound,
                            report.attained.unwrap_or(false)
                        )
                    ),
                    ("seed", seed.to_string()),
                ])
            );
            Ok(Outcome { doc, text, code: 0 })
        }
        Command::Verify {
            input,
            oracle,
            expect_filling,
            expect_smooth,
            expect_irreducible,
        } => {
            let poly = resolve_poly(input)?;
            let s = summary(&poly)?;
            let mut failed = Vec::new();
            if *expect_filling && s["filling"] != json!(true) {
                failed.push("filling");
            }
            if *expect_smooth && s["smooth"] != json!(true) {
                failed.push("smooth");
            }
            if *expect_irreducible && s["irreducible"] != json!(true) {
                failed.push("irreducible");
            }
            let oracle_doc = match oracle {
                None => Value::Null,
                Some(m) => {
                    let levels = singular_points(&poly, *m)?;
                    Value::Array(
                        levels
                            .iter()
                            .map(|l| {
                                json!({
                                    "degree": l.degree,
                                    "points": l.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                                })
                            })
                            .collect(),
                    )
                }
            };
            let doc = json!({
                "command": "verify",
                "seed": seed,
                "field": poly.field().describe(),
                "bidegree": [poly.a(), poly.b()],
                "polynomial": poly.to_text(),
                "summary": s,
                "singular_points": oracle_doc,
                "failed_expectations": failed,
            });
            let mut lines = vec![
                ("bidegree", format!("({},{})", poly.a(), poly.b())),
                ("filling", show(&s["filling"])),
                ("verdict", show(&s["verdict"])),
                ("irreducible", show(&s["irreducible"])),
                ("points", show(&s["points"])),
            ];
            if let Value::Array(levels) = &doc["singular_points"] {
                for l in levels {
                    lines.push((
                        "singular points",
                        format!("m={} {}", l["degree"], l["points"]),
                    ));
                }
            }
            lines.push(("seed", seed.to_string()));
            if !failed.is_empty() {
                lines.push(("FAILED", failed.join(", ")));
            }
            let code = if failed.is_empty() { 0 } else { EXIT_VERIFY };
            Ok(Outcome {
                doc,
                text: text_lines(&lines),
                code,
            })
        }
        Command::Decompose { input } => {
            let poly = resolve_poly(input)?;
            let dec = decompose(&poly)?;
            let verified = dec.recombine() == poly;
            let mut doc = dec.to_json(&poly);
            doc["command"] = json!("decompose");
            doc["seed"] = json!(seed);
            doc["polynomial"] = json!(poly.to_text());
            let text = text_lines(&[
                ("f", dec.f.to_text()),
                ("g", dec.g.to_text()),
                ("verified", verified.to_string()),
            ]);
            Ok(Outcome {
                doc,
                text,
                code: if verified { 0 } else { EXIT_VERIFY },
            })
        }
        Command::Census {
            field,
            bidegree,
            smooth,
            jobs,
            partitions,
            max_exemplars,
        } => {
            let field = resolve_field(field)?;
            let opts = CensusOptions {
                jobs: *jobs,
                partitions: partitions.unwrap_or(if *jobs > 1 { 4 * jobs } else { 1 }),
                smooth: *smooth,
                max_exemplars: *max_exemplars,
                seed,
                ..CensusOptions::default()
            };
            let started = std::time::Instant::now();
            let r = census(&field, bidegree.0, bidegree.1, &opts)?;
            let _ = writeln!(err, "census finished in {:.2?}", started.elapsed());
            let mut doc = serde_json::to_value(&r).expect("serializable");
            doc["command"] = json!("census");
            let mut lines = vec![
                ("q", r.q.to_string()),
                ("bidegree", format!("({},{})", r.bidegree.0, r.bidegree.1)),
                ("space dimension", r.space_dimension.to_string()),
                ("candidates", r.candidates_scanned.to_string()),
                ("irreducible", r.n_irreducible.to_string()),
                ("reducible", r.n_reducible.to_string()),
                ("unknown", r.n_unknown.to_string()),
            ];
            if let Some(n) = r.n_smooth {
                lines.push(("smooth", n.to_string()));
            }
            for (rank, p) in &r.exemplars {
                lines.push(("exemplar", format!("#{rank} {p}")));
            }
            lines.push(("seed", seed.to_string()));
            Ok(Outcome {
                doc,
                text: text_lines(&lines),
                code: 0,
            })
        }
        Command::Scan {
            field,
            max,
            brute_small,
            jobs,
        } => {
            let field = resolve_field(field)?;
            let table = with_jobs(*jobs, || {
                min_bidegree_scan(&field, max.0, max.1, *brute_small)
            })?;
            let mut doc = serde_json::to_value(&table).expect("serializable");
            doc["command"] = json!("scan");
            doc["seed"] = json!(seed);
            let mut text = String::from("a\\b");
            for b in 0..=max.1 {
                text.push_str(&format!(" {b:>3}"));
            }
            text.push('\n');
            for a in 0..=max.0 {
                text.push_str(&format!("{a:>3}"));
                for b in 0..=max.1 {
                    let mark = match table.cell(a, b).map(|c| c.status) {
                        Some(crate::search::CellStatus::Exists) => "yes",
                        Some(crate::search::CellStatus::Empty) => "no",
                        Some(crate::search::CellStatus::Unknown) => "?",
                        _ => "-",
                    };
                    text.push_str(&format!(" {mark:>3}"));
                }
                text.push('\n');
            }
            text.push_str(&format!("seed: {seed}\n"));
            Ok(Outcome { doc, text, code: 0 })
        }
        Command::Bound { q, r, d } => {
            let parts = bound_parts(*q, *r, *d)?;
            let g = gcd(parts.numerator, parts.denominator);
            let quotient = format!("{}/{}", parts.numerator / g, parts.denominator / g);
            let doc = json!({
                "command": "bound",
                "seed": seed,
                "q": q,
                "r": r,
                "d": d,
                "numerator": parts.numerator,
                "denominator": parts.denominator,
                "quotient": quotient,
                "floor": parts.floor,
            });
            let text = text_lines(&[
                ("numerator", parts.numerator.to_string()),
                ("denominator", parts.denominator.to_string()),
                ("quotient", quotient),
                ("floor", parts.floor.to_string()),
            ]);
            Ok(Outcome { doc, text, code: 0 })
        }
        Command::Count { input, ext, jobs } => {
            let poly = resolve_poly(input)?;
            let n = with_jobs(*jobs, || count_points(&poly, *ext))??;
            let doc = json!({
                "command": "count",
                "seed": seed,
                "field": poly.field().describe(),
                "extension": ext,
                "bidegree": [poly.a(), poly.b()],
                "segre_degree": segre_degree(poly.a(), poly.b()),
                "points": n,
            });
            Ok(Outcome {
                doc,
                text: format!("{n}\n"),
                code: 0,
            })
        }
        Command::FieldInfo { field } => {
            let field = resolve_field(field)?;
            let mut doc = field.describe();
            doc["command"] = json!("field-info");
            doc["seed"] = json!(seed);
            doc["text"] = json!(field.to_string());
            let text = text_lines(&[
                ("field", field.to_string()),
                ("characteristic", field.characteristic().to_string()),
                (
                    "order",
                    field.order().map_or("too large".into(), |n| n.to_string()),
                ),
                ("generator", field.format(&field.generator())),
            ]);
            Ok(Outcome { doc, text, code: 0 })
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(&cli, err) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.doc).expect("serializable")
                )
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
