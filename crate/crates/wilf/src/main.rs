//! Command-line surface: invariants, enumeration, verification, root
//! finding, and bound tabulation.
//!
//! Exit codes: 0 clean, 1 a mathematical violation was found, 2 usage or
//! input error, 3 internal inconsistency.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wilf::bounds::{self, BoundContext, DEFAULT_E_MAX, DEFAULT_NONNEG_SLACK, DEFAULT_ROOT_TOL};
use wilf::enumerate::{self, ParallelConfig, SigmaFilter};
use wilf::semigroup::NumericalSemigroup;
use wilf::verify::{run_verification, write_report_to_path, ReportFormat};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wilf",
    version,
    about = "Numerical semigroup invariants, enumeration, and density-bound verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute f, g, e, m, density, gaps and atoms for a generator set.
    Invariants {
        /// Comma-separated generators, e.g. 6,9,20
        generators: String,
        #[arg(long)]
        json: bool,
    },
    /// Locate the root N of the auxiliary function and run the finite-range
    /// checks behind the e >= 8 bounds.
    Root {
        /// Bisection bracket width (0 < tol <= 1).
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
        /// Check F(floor(N), e) >= 0 exactly for e = 8..=emax.
        #[arg(long, default_value_t = DEFAULT_E_MAX)]
        emax: i64,
        /// Number of log-spaced monotonicity samples over [1, 10^6].
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
        /// Slack for the floating-point side of F(N, e) >= 0.
        #[arg(long, default_value_t = DEFAULT_NONNEG_SLACK)]
        slack: f64,
        #[arg(long)]
        json: bool,
    },
    /// Print one density lower bound (exact rational when available, log10
    /// otherwise).
    Bound {
        /// Embedding dimension.
        #[arg(long)]
        e: i64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Frobenius number (kind=zhai only).
        #[arg(long)]
        f: Option<i64>,
        /// Multiplicity (kind=zhai only).
        #[arg(long)]
        m: Option<i64>,
        /// Root bracket width for the N-based kinds.
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all numerical semigroups up to a genus bound.
    Enumerate {
        #[arg(long = "max-genus")]
        max_genus: u32,
        /// Keep only semigroups with this embedding dimension.
        #[arg(long)]
        e: Option<i64>,
        #[arg(long, value_enum, default_value_t = Emit::Counts)]
        emit: Emit,
        #[arg(long)]
        json: bool,
    },
    /// Verify every density inequality over all semigroups up to a genus
    /// bound; optionally write a CSV/JSON report.
    Verify {
        #[arg(long = "max-genus")]
        max_genus: u32,
        /// Keep only semigroups with this embedding dimension.
        #[arg(long)]
        e: Option<i64>,
        /// Report destination; without it only the summary is printed.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Worker threads (0 = machine parallelism).
        #[arg(long, env = "WILF_THREADS", default_value_t = 0)]
        threads: usize,
        /// Subtree split depth for the parallel walk.
        #[arg(long, default_value_t = 9)]
        split_depth: u32,
        /// Root bracket width.
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Zhai,
    Prop1a,
    Prop2a,
    Prop2b,
    Lemma2,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Emit {
    Counts,
    Stream,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn internal_error(msg: &str) -> ExitCode {
    eprintln!("internal error: {msg}");
    ExitCode::from(EXIT_INTERNAL)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Command::Invariants { generators, json } => cmd_invariants(&generators, json),
        Command::Root {
            tol,
            emax,
            grid,
            slack,
            json,
        } => cmd_root(tol, emax, grid, slack, json),
        Command::Bound {
            e,
            kind,
            f,
            m,
            tol,
            json,
        } => cmd_bound(e, kind, f, m, tol, json),
        Command::Enumerate {
            max_genus,
            e,
            emit,
            json,
        } => cmd_enumerate(max_genus, e, emit, json),
        Command::Verify {
            max_genus,
            e,
            out,
            format,
            threads,
            split_depth,
            tol,
            json,
        } => cmd_verify(
            max_genus,
            e,
            out.as_deref(),
            format,
            threads,
            split_depth,
            tol,
            json,
        ),
    }
}

fn parse_generators(input: &str) -> Result<Vec<i64>, String> {
    input
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| format!("cannot parse generator {tok:?} as an integer"))
        })
        .collect()
}

fn cmd_invariants(generators: &str, json: bool) -> ExitCode {
    let gens = match parse_generators(generators) {
        Ok(g) => g,
        Err(msg) => return usage_error(&msg),
    };
    let s = match NumericalSemigroup::from_generators(&gens) {
        Ok(s) => s,
        Err(err) => return usage_error(&err.to_string()),
    };
    let inv = s.invariants();
    if json {
        let out = json!({
            "f": inv.f,
            "g": inv.g,
            "e": inv.e,
            "m": inv.m,
            "density": inv.density,
            "atoms": s.atoms(),
            "gaps": s.gaps(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("f = {}", inv.f);
        println!("g = {}", inv.g);
        println!("e = {}", inv.e);
        println!("m = {}", inv.m);
        println!("density = {}", inv.density);
        println!("atoms = {}", join(s.atoms()));
        println!("gaps = {}", join(&s.gaps()));
    }
    ExitCode::SUCCESS
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_root(tol: f64, emax: i64, grid: usize, slack: f64, json: bool) -> ExitCode {
    if !(tol > 0.0 && tol <= 1.0) {
        return usage_error("--tol must satisfy 0 < tol <= 1");
    }
    if emax < 8 {
        return usage_error("--emax must be >= 8");
    }
    if grid < 2 {
        return usage_error("--grid must be >= 2");
    }
    let ctx = match bounds::find_n(tol) {
        Ok(ctx) => ctx,
        Err(err) => return internal_error(&err.to_string()),
    };
    let report = match bounds::check_lemma1(&ctx, emax, grid, slack) {
        Ok(r) => r,
        Err(err) => return internal_error(&err.to_string()),
    };
    let pass = |ok: bool| if ok { "PASS" } else { "FAIL" };
    if json {
        let out = json!({
            "n_floor": ctx.n_floor,
            "n_value": ctx.n_value,
            "bracket": [ctx.n_bracket.0, ctx.n_bracket.1],
            "tol": tol,
            "emax": emax,
            "grid": grid,
            "monotone_ok": report.monotone_ok,
            "exact_nonneg_ok": report.exact_failures.is_empty(),
            "float_nonneg_ok": report.float_failures.is_empty(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("floor(N) = {}", ctx.n_floor);
        println!(
            "bracket = [{:.9}, {:.9}] (width <= {:e})",
            ctx.n_bracket.0, ctx.n_bracket.1, tol
        );
        println!(
            "F(x,8) strictly decreasing over {} samples of [1, 1e6]: {}",
            grid,
            pass(report.monotone_ok)
        );
        println!(
            "F(floor(N), e) >= 0 exact for e=8..{}: {}",
            emax,
            pass(report.exact_failures.is_empty())
        );
        println!(
            "F(N, e) >= -{:e} float for e=8..{}: {}",
            slack,
            emax,
            pass(report.float_failures.is_empty())
        );
    }
    if report.all_ok() {
        ExitCode::SUCCESS
    } else {
        internal_error("exact sign tests contradict the computed bracket")
    }
}

fn cmd_bound(
    e: i64,
    kind: KindArg,
    f: Option<i64>,
    m: Option<i64>,
    tol: f64,
    json: bool,
) -> ExitCode {
    if !(tol > 0.0 && tol <= 1.0) {
        return usage_error("--tol must satisfy 0 < tol <= 1");
    }
    let need_ctx = matches!(kind, KindArg::Prop2a | KindArg::Prop2b | KindArg::Lemma2);
    let ctx = if need_ctx {
        match bounds::find_n(tol) {
            Ok(ctx) => Some(ctx),
            Err(err) => return internal_error(&err.to_string()),
        }
    } else {
        None
    };

    // (label, exact rational if any, log10 value)
    let (label, rational, log10): (String, Option<(i128, i128)>, f64) = match kind {
        KindArg::Zhai => {
            let (Some(f), Some(m)) = (f, m) else {
                return usage_error("--kind zhai requires --f and --m");
            };
            if f < 1 || m < 2 || e < 2 {
                return usage_error("zhai bound needs f >= 1, m >= 2, e >= 2");
            }
            let r = bounds::zhai_thm1_lb(f, m, e);
            let log10 = (*r.numer() as f64).log10() - (*r.denom() as f64).log10();
            (
                format!("zhai(f={f}, m={m}, e={e})"),
                Some((*r.numer(), *r.denom())),
                log10,
            )
        }
        KindArg::Prop1a => match bounds::prop1a_lb(e) {
            Ok(r) => {
                let log10 = (*r.numer() as f64).log10() - (*r.denom() as f64).log10();
                (
                    format!("prop1a(e={e})"),
                    Some((*r.numer(), *r.denom())),
                    log10,
                )
            }
            Err(err) => return usage_error(&err.to_string()),
        },
        KindArg::Prop2a => match bounds::prop2a_lb(e, ctx.as_ref().unwrap()) {
            Ok(v) => (format!("prop2a(e={e})"), None, v.log10()),
            Err(err) => return usage_error(&err.to_string()),
        },
        KindArg::Prop2b => match bounds::prop2b_lb_log10(e, ctx.as_ref().unwrap()) {
            Ok(b) => (format!("prop2b(e={e})"), None, b.log10_value),
            Err(err) => return usage_error(&err.to_string()),
        },
        KindArg::Lemma2 => match bounds::lemma2_bound_log10(e, ctx.as_ref().unwrap()) {
            Ok(b) => (format!("lemma2(e={e})"), None, b.log10_value),
            Err(err) => return usage_error(&err.to_string()),
        },
    };

    let linear = if (-300.0..=300.0).contains(&log10) {
        Some(10f64.powf(log10))
    } else {
        None
    };
    if json {
        let out = json!({
            "kind": label,
            "e": e,
            "rational": rational.map(|(n, d)| json!({"num": n.to_string(), "den": d.to_string()})),
            "log10": log10,
            "linear": linear,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        match rational {
            Some((n, d)) => println!("{label} = {n}/{d}"),
            None => match linear {
                Some(v) => println!("{label} = {v:e}"),
                None => println!("{label} underflows linear space"),
            },
        }
        if log10.is_finite() {
            println!("log10 = {log10:.6}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_enumerate(max_genus: u32, e: Option<i64>, emit: Emit, json: bool) -> ExitCode {
    if max_genus < 1 {
        return usage_error("--max-genus must be >= 1");
    }
    let filter = match SigmaFilter::from_option(e) {
        Ok(f) => f,
        Err(err) => return usage_error(&err.to_string()),
    };
    match emit {
        Emit::Counts => {
            let mut counts = vec![0u64; max_genus as usize + 1];
            enumerate::enumerate_by_genus(max_genus, &filter, |s| {
                counts[s.genus() as usize] += 1;
            });
            if json {
                let out = json!({
                    "max_genus": max_genus,
                    "filter_e": e,
                    "counts": counts[1..].to_vec(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                for (g, n) in counts.iter().enumerate().skip(1) {
                    println!("genus={g} count={n}");
                }
            }
        }
        Emit::Stream => {
            if json {
                let mut all = Vec::new();
                enumerate::enumerate_by_genus(max_genus, &filter, |s| {
                    all.push(s.atoms().to_vec());
                });
                println!("{}", serde_json::to_string_pretty(&json!(all)).unwrap());
            } else {
                enumerate::enumerate_by_genus(max_genus, &filter, |s| {
                    println!("{}", join(s.atoms()));
                });
            }
        }
    }
    ExitCode::SUCCESS
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    max_genus: u32,
    e: Option<i64>,
    out: Option<&std::path::Path>,
    format: FormatArg,
    threads: usize,
    split_depth: u32,
    tol: f64,
    json: bool,
) -> ExitCode {
    if max_genus < 1 {
        return usage_error("--max-genus must be >= 1");
    }
    if !(tol > 0.0 && tol <= 1.0) {
        return usage_error("--tol must satisfy 0 < tol <= 1");
    }
    let filter = match SigmaFilter::from_option(e) {
        Ok(f) => f,
        Err(err) => return usage_error(&err.to_string()),
    };
    let ctx: BoundContext = match bounds::find_n(tol) {
        Ok(ctx) => ctx,
        Err(err) => return internal_error(&err.to_string()),
    };
    let par = ParallelConfig {
        threads,
        split_depth,
    };
    let run = run_verification(max_genus, &filter, &ctx, &par);

    if let Some(path) = out {
        let fmt = match format {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
        };
        if let Err(err) = write_report_to_path(&run, fmt, path) {
            eprintln!("error: cannot write report to {}: {err}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }

    if json {
        let out = json!({
            "semigroups": run.semigroups,
            "violations": run.violation_count(),
            "max_genus": max_genus,
            "filter_e": e,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "semigroups={} violations={}",
            run.semigroups,
            run.violation_count()
        );
    }
    if run.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}
