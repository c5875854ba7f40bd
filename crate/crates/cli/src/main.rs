//! Command-line front end: expansion queries, identity-verification suites,
//! Hall-polynomial tables, and stability scans, with machine-readable
//! output.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification or stability
//! failure, 4 internal integrity error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symfunc::bases::{gen_e, gen_h, hl_b, hl_q, q_prod, schur, schurq, skew_b, skew_q};
use symfunc::error::Error;
use symfunc::linalg::m_in_p;
use symfunc::multipoly::{monomial_expansion, specialize_vars};
use symfunc::partition::{enumerate_partitions, Composition, Partition};
use symfunc::structure::{
    hall_g, hall_stability_scan, stability_scan, ScanFamily, StabilityReport,
};
use symfunc::symfunc::SymFunc;
use symfunc::tpoly::{parse_rational, rational_to_string, BigRational};
use symfunc::trational::TRational;
use symfunc::verify::{run_suite, SuiteConfig, SuiteOutcome, SUITES};

#[derive(Parser)]
#[command(
    name = "symfunc",
    version,
    about = "Exact Hall-Littlewood symmetric function kernel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of a named symmetric function
    Expand(ExpandArgs),
    /// Run a named identity-verification suite (or `all`)
    Verify(VerifyArgs),
    /// Print the table of Hall polynomials up to a weight bound
    HallTable(HallTableArgs),
    /// Scan a structure-coefficient sequence for stabilization
    Stability(StabilityArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// power-sum basis (the internal representation)
    P,
    /// monomial symmetric functions
    Monomial,
    /// products of the one-row generators q_n
    QProducts,
    /// polynomial in x_1..x_k (requires --vars)
    Vars,
}

#[derive(Args)]
struct ExpandArgs {
    /// family: h, e, p, m, q, b, schur, schurQ, Q, B, skewQ, skewB
    family: String,
    /// index as a JSON integer array, e.g. [3,1]
    index: String,
    /// inner (skew) index for skewQ/skewB
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, value_enum, default_value = "p")]
    target: Target,
    /// number of variables for --target vars
    #[arg(long)]
    vars: Option<usize>,
    /// evaluate coefficients at an exact rational t, e.g. 0 or -1 or 1/2
    #[arg(long, value_name = "p/q")]
    eval_t: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// weight ceiling guard (indices above it need --allow-large)
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
    /// acknowledge a run above the default weight ceiling
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// suite name (see --list) or `all`
    suite: String,
    #[arg(long)]
    max_weight: Option<u32>,
    /// seed for the randomized property suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// worker threads (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct HallTableArgs {
    /// table weight ceiling (above 6 needs --allow-large)
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
    /// evaluate each entry at an exact rational t (e.g. a prime, for
    /// subgroup counts)
    #[arg(long, value_name = "p/q")]
    eval_t: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    allow_large: bool,
    /// worker threads (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
}

#[derive(Args)]
struct StabilityArgs {
    /// outer index lambda as a JSON array
    lambda: String,
    /// fixed factor mu as a JSON array
    mu: String,
    /// prepended factor nu as a JSON array
    nu: String,
    /// largest sampled m (default: theorem bound + 4)
    #[arg(long)]
    m_max: Option<i64>,
    /// scan the Hall-polynomial sequence instead
    #[arg(long)]
    hall: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
        Command::HallTable(args) => cmd_hall_table(args),
        Command::Stability(args) => cmd_stability(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NonPolynomial(_) | Error::NonIntegral(_) | Error::SingularSystem => 4,
        _ => 2,
    }
}

fn parse_index(s: &str) -> Result<Composition, Error> {
    let v: serde_json::Value = serde_json::from_str(s)
        .map_err(|_| Error::InvalidArgument(format!("index {s:?} is not a JSON array")))?;
    Composition::from_json(&v)
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let c = parse_index(s)?;
    c.to_partition()
        .ok_or_else(|| Error::InvalidArgument(format!("{s} is not a partition")))
}

fn thread_pool(jobs: Option<u32>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n as usize);
    }
    builder.build().expect("thread pool")
}

// ---- expand ----

fn build_family(family: &str, index: &Composition, mu: Option<&str>) -> Result<SymFunc, Error> {
    let partition_index = || -> Result<Partition, Error> {
        index.to_partition().ok_or_else(|| {
            Error::InvalidArgument(format!(
                "family {family} needs a partition index, got {index}"
            ))
        })
    };
    match family {
        "h" => Ok(index
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &n| &acc * &gen_h(n))),
        "e" => Ok(index
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &n| &acc * &gen_e(n))),
        "p" => {
            let lam = partition_index()?;
            Ok(SymFunc::term(lam, TRational::one()))
        }
        "m" => m_in_p(&partition_index()?),
        "q" => Ok(q_prod(index)),
        "b" => Ok(q_prod(index).omega()),
        "schur" => Ok(schur(index)),
        "schurQ" => Ok(schurq(index)),
        "Q" => Ok(hl_q(index)),
        "B" => Ok(hl_b(index)),
        "skewQ" | "skewB" => {
            let lam = partition_index()?;
            let mu = parse_partition(mu.ok_or_else(|| {
                Error::InvalidArgument(format!("family {family} requires --mu"))
            })?)?;
            Ok(if family == "skewQ" {
                skew_q(&lam, &mu)
            } else {
                skew_b(&lam, &mu)
            })
        }
        other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
    }
}

fn eval_coeff(c: &TRational, t0: &Option<BigRational>) -> Result<TRational, Error> {
    match t0 {
        None => Ok(c.clone()),
        Some(v) => Ok(TRational::from_rational(c.eval_at(v)?)),
    }
}

fn cmd_expand(args: ExpandArgs) -> Result<ExitCode, Error> {
    let index = parse_index(&args.index)?;
    if index.positive_weight() as u32 > args.max_weight && !args.allow_large {
        return Err(Error::InvalidArgument(format!(
            "index weight {} exceeds the ceiling {}; pass --allow-large to proceed",
            index.positive_weight(),
            args.max_weight
        )));
    }
    let t0 = args.eval_t.as_deref().map(parse_rational).transpose()?;
    let f = build_family(&args.family, &index, args.mu.as_deref())?;

    match args.target {
        Target::P => {
            let f = match &t0 {
                None => f,
                Some(v) => f.specialize_t(v)?,
            };
            match args.format {
                Format::Json => println!("{}", f.to_json()),
                Format::Text => println!("{f}"),
            }
        }
        Target::Monomial => {
            let mut rows = Vec::new();
            if let Some(dmax) = f.degree() {
                for d in 0..=dmax {
                    let comp = f.homogeneous_component(d);
                    if comp.is_zero() {
                        continue;
                    }
                    for (lam, c) in monomial_expansion(&comp, d)? {
                        rows.push((lam, eval_coeff(&c, &t0)?));
                    }
                }
            }
            print_coeff_rows("m", &rows, args.format);
        }
        Target::QProducts => {
            let exp = symfunc::bases::q_expansion(&f)?;
            let mut rows = Vec::new();
            for (lam, c) in exp {
                rows.push((lam, eval_coeff(&c, &t0)?));
            }
            print_coeff_rows("q", &rows, args.format);
        }
        Target::Vars => {
            let k = args.vars.ok_or_else(|| {
                Error::InvalidArgument("--target vars requires --vars <k>".into())
            })?;
            if k == 0 {
                return Err(Error::InvalidArgument("--vars must be at least 1".into()));
            }
            let mut poly = specialize_vars(&f, k);
            if let Some(v) = &t0 {
                let mut pairs = Vec::with_capacity(poly.num_terms());
                for (e, c) in poly.terms() {
                    pairs.push((e.clone(), TRational::from_rational(c.eval_at(v)?)));
                }
                poly = symfunc::multipoly::MultiPoly::from_terms(k, pairs);
            }
            match args.format {
                Format::Json => println!("{}", poly.to_json()),
                Format::Text => println!("{poly}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_coeff_rows(prefix: &str, rows: &[(Partition, TRational)], format: Format) {
    match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(lam, c)| serde_json::json!({ "index": lam.to_json(), "coeff": c.to_json() }))
                .collect();
            println!("{}", serde_json::json!(v));
        }
        Format::Text => {
            if rows.is_empty() {
                println!("0");
            }
            for (lam, c) in rows {
                println!("{prefix}{lam}: {c}");
            }
        }
    }
}

// ---- verify ----

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let cfg = SuiteConfig {
        max_weight: args.max_weight,
        seed: args.seed,
    };
    let names: Vec<&str> = if args.suite == "all" {
        SUITES.to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let pool = thread_pool(args.jobs);
    let mut all_passed = true;
    for name in names {
        let outcome: SuiteOutcome = pool.install(|| run_suite(name, &cfg))?;
        match args.format {
            Format::Json => println!("{}", outcome.to_json()),
            Format::Text => {
                let status = if outcome.passed() { "pass" } else { "FAIL" };
                println!("{status} {} ({} checks)", outcome.suite, outcome.checks);
                for w in &outcome.warnings {
                    println!("  warning: {w}");
                }
                if let Some(f) = &outcome.failure {
                    println!("  failure: {f}");
                }
            }
        }
        if !outcome.passed() {
            all_passed = false;
            if args.format == Format::Text {
                // the machine-readable report of the first failure
                eprintln!("{}", outcome.to_json());
            }
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

// ---- hall-table ----

fn cmd_hall_table(args: HallTableArgs) -> Result<ExitCode, Error> {
    if args.max_weight > 6 && !args.allow_large {
        return Err(Error::InvalidArgument(format!(
            "table ceiling is 6; pass --allow-large to compute weight {}",
            args.max_weight
        )));
    }
    let t0 = args.eval_t.as_deref().map(parse_rational).transpose()?;
    let mut triples = Vec::new();
    for n in 0..=args.max_weight {
        for lam in enumerate_partitions(n) {
            for wm in 0..=n {
                for mu in enumerate_partitions(wm) {
                    for nu in enumerate_partitions(n - wm) {
                        triples.push((lam.clone(), mu.clone(), nu));
                    }
                }
            }
        }
    }
    let pool = thread_pool(args.jobs);
    let rows: Result<Vec<_>, Error> = pool.install(|| {
        use rayon::prelude::*;
        triples
            .par_iter()
            .map(|(lam, mu, nu)| hall_g(lam, mu, nu).map(|g| (lam, mu, nu, g)))
            .collect()
    });
    for (lam, mu, nu, g) in rows? {
        match (&t0, args.format) {
            (None, Format::Text) => println!("g[{lam};{mu},{nu}] = {g}"),
            (Some(v), Format::Text) => {
                println!("g[{lam};{mu},{nu}] = {}", rational_to_string(&g.eval(v)))
            }
            (None, Format::Json) => println!(
                "{}",
                serde_json::json!({
                    "lambda": lam.to_json(), "mu": mu.to_json(), "nu": nu.to_json(),
                    "g": g.to_json(),
                })
            ),
            (Some(v), Format::Json) => println!(
                "{}",
                serde_json::json!({
                    "lambda": lam.to_json(), "mu": mu.to_json(), "nu": nu.to_json(),
                    "g": rational_to_string(&g.eval(v)),
                })
            ),
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---- stability ----

fn cmd_stability(args: StabilityArgs) -> Result<ExitCode, Error> {
    let lam = parse_partition(&args.lambda)?;
    let mu = parse_partition(&args.mu)?;
    let nu = parse_partition(&args.nu)?;
    let bound = mu.first() as i64 + nu.first() as i64 + lam.weight() as i64
        - mu.weight() as i64
        - nu.weight() as i64;
    let m_max = args.m_max.unwrap_or(bound + 4);
    let report: StabilityReport = if args.hall {
        hall_stability_scan(&lam, &mu, &nu, m_max)?
    } else {
        stability_scan(&lam, &mu, &nu, m_max, ScanFamily::Q)?
    };
    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            println!(
                "sequence ({},{},{}), offset {}, bound {}",
                report.lambda, report.mu, report.nu, report.offset, report.theorem_bound
            );
            for (m, v) in &report.samples {
                println!("  a_{m} = {v}");
            }
            match (&report.onset, &report.stable_value) {
                (Some(m), Some(v)) => println!("onset {m}, stable value {v}"),
                _ => println!("no confirmed stabilization within m_max = {m_max}"),
            }
        }
    }
    let passed = if args.hall {
        report.onset.is_some()
    } else {
        report.within_bound()
    };
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}
