mod cache;
mod config;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use permlab::groebner::budget::with_deadline;
use permlab::permideal::Family;
use permlab::verify::{Check, CheckOptions, CheckReport};
use permlab::{Error, Ideal, Polynomial};

use cache::{DiskCache, Lookup};
use config::{CliConfig, OutputFormat};
use format::{script, text_lines, Cas, PolyList};

const SCHEMA_VERSION: u32 = 1;

/// Exact computations with permanental ideals of symmetric matrices.
#[derive(Parser)]
#[command(name = "permlab", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Monomial order: `diag-lex` or `qk-lex:<k>`.
    #[arg(long, global = true, default_value = "diag-lex")]
    order: String,
    /// Output format. Defaults to json for `check`, singular for `export`,
    /// text otherwise.
    #[arg(long, global = true, value_enum)]
    out: Option<OutputFormat>,
    /// Directory of the Groebner basis cache.
    #[arg(long, global = true, env = "PERMLAB_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget for the whole command.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    /// Enumerate every subset in the colon identities.
    #[arg(long, global = true)]
    exhaustive: bool,
    /// Buchberger without pair criteria, plus a full S-pair audit.
    #[arg(long, global = true)]
    paranoid: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of a family.
    Gen { family: String },
    /// Print the reduced Groebner basis of a family.
    Gb { family: String },
    /// Print the normal form of a polynomial modulo a family.
    Nf { polynomial: String, family: String },
    /// Run a named check, or `all`.
    Check { name: String },
    /// Print a Singular or Macaulay2 script computing the family's basis.
    Export { family: String },
}

/// How a command ended, mapped onto the process exit code.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = CliConfig::new(&cli.global).and_then(|config| {
        let deadline = config
            .budget_seconds
            .map(|s| Instant::now() + Duration::from_secs(s));
        with_deadline(deadline, || dispatch(&cli.command, &config))
    });
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(stats)) => {
                    eprintln!(
                    "error: budget exhausted: pairs {}, zero reductions {}, basis size {}, {} ms",
                    stats.pairs_processed, stats.reductions_to_zero, stats.basis_size, stats.elapsed_ms
                );
                    ExitCode::from(2)
                }
                _ => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn dispatch(command: &Command, config: &CliConfig) -> Result<Status> {
    match command {
        Command::Gen { family } => cmd_gen(family, config),
        Command::Gb { family } => cmd_gb(family, config),
        Command::Nf { polynomial, family } => cmd_nf(polynomial, family, config),
        Command::Check { name } => cmd_check(name, config),
        Command::Export { family } => cmd_export(family, config),
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn family_ideal(name: &str, config: &CliConfig) -> Result<(Family, Ideal)> {
    let family: Family = name.parse()?;
    let ideal = family
        .ideal(&config.spec()?)
        .with_context(|| format!("building {family}"))?;
    Ok((family, ideal.to_ring(&config.ring()?)?))
}

fn poly_list(
    command: &'static str,
    family: &Family,
    config: &CliConfig,
    polys: &[Polynomial],
) -> Result<String> {
    let list = PolyList {
        schema: SCHEMA_VERSION,
        command,
        family: family.to_string(),
        n: config.n,
        field: config.field.to_string(),
        order: order_name(config),
        size: polys.len(),
        polynomials: polys.iter().map(|p| p.to_string()).collect(),
    };
    Ok(serde_json::to_string_pretty(&list)? + "\n")
}

fn order_name(config: &CliConfig) -> String {
    match config.order {
        permlab::MonomialOrder::QkLex { k, .. } => format!("qk-lex:{k}"),
        _ => "diag-lex".into(),
    }
}

fn cmd_gen(name: &str, config: &CliConfig) -> Result<Status> {
    let (family, ideal) = family_ideal(name, config)?;
    let polys = ideal.generators();
    let text = match config.format(OutputFormat::Text) {
        OutputFormat::Text => text_lines(polys),
        OutputFormat::Json => poly_list("gen", &family, config, polys)?,
        f => script(
            Cas::from_format(f).unwrap(),
            ideal.ring(),
            config.n,
            polys,
            false,
        ),
    };
    emit(&text)?;
    Ok(Status::Ok)
}

/// Reduced basis through the disk cache, with statistics on stderr.
fn basis(ideal: &Ideal, config: &CliConfig) -> Result<std::sync::Arc<permlab::GroebnerBasis>> {
    let disk = DiskCache::new(&config.cache_dir);
    if config.paranoid {
        let options = permlab::groebner::GbOptions { paranoid: true };
        let (gb, stats) =
            permlab::groebner::reduced_groebner(ideal.ring(), ideal.generators(), &options)?;
        eprintln!(
            "gb: {} elements, pairs {}, zero reductions {}, {} ms, paranoid (cache bypassed)",
            gb.len(),
            stats.pairs_processed,
            stats.reductions_to_zero,
            stats.elapsed_ms
        );
        return Ok(std::sync::Arc::new(gb));
    }
    let lookup = disk.load(ideal);
    let (gb, stats) = ideal.groebner_traced()?;
    match (lookup, stats) {
        (Lookup::Hit, _) | (_, None) => eprintln!("gb: {} elements, cache hit", gb.len()),
        (Lookup::Miss, Some(stats)) => {
            eprintln!(
                "gb: {} elements, pairs {}, zero reductions {}, {} ms, cache miss",
                gb.len(),
                stats.pairs_processed,
                stats.reductions_to_zero,
                stats.elapsed_ms
            );
            if let Err(e) = disk.store(ideal, &gb) {
                eprintln!("warning: cache not written: {e:#}");
            }
        }
    }
    Ok(gb)
}

fn cmd_gb(name: &str, config: &CliConfig) -> Result<Status> {
    let (family, ideal) = family_ideal(name, config)?;
    let gb = basis(&ideal, config)?;
    let polys = gb.elements();
    let text = match config.format(OutputFormat::Text) {
        OutputFormat::Text => text_lines(polys),
        OutputFormat::Json => poly_list("gb", &family, config, polys)?,
        f => script(
            Cas::from_format(f).unwrap(),
            ideal.ring(),
            config.n,
            polys,
            false,
        ),
    };
    emit(&text)?;
    Ok(Status::Ok)
}

fn cmd_nf(text: &str, name: &str, config: &CliConfig) -> Result<Status> {
    let (family, ideal) = family_ideal(name, config)?;
    let f = Polynomial::parse(text, ideal.ring()).with_context(|| format!("parsing {text:?}"))?;
    let nf = basis(&ideal, config)?.normal_form(&f)?;
    let out = match config.format(OutputFormat::Text) {
        OutputFormat::Text => format!("{nf}\n"),
        OutputFormat::Json => {
            let v = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "command": "nf",
                "family": family.to_string(),
                "n": config.n,
                "field": config.field.to_string(),
                "order": order_name(config),
                "input": f.to_string(),
                "normalForm": nf.to_string(),
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        _ => bail!("nf supports --out text or json"),
    };
    emit(&out)?;
    Ok(Status::Ok)
}

fn cmd_export(name: &str, config: &CliConfig) -> Result<Status> {
    let (_, ideal) = family_ideal(name, config)?;
    let cas = Cas::from_format(config.format(OutputFormat::Singular))
        .ok_or_else(|| anyhow!("export supports --out singular or macaulay2"))?;
    emit(&script(
        cas,
        ideal.ring(),
        config.n,
        ideal.generators(),
        true,
    ))?;
    Ok(Status::Ok)
}

fn report_text(r: &CheckReport) -> String {
    let mut s = format!(
        "{} {} (n={}, {}): {}/{} assertions, {} ms\n",
        if r.passed { "PASS" } else { "FAIL" },
        r.check,
        r.n,
        r.field,
        r.assertions.iter().filter(|a| a.passed).count(),
        r.assertions.len(),
        r.total_ms
    );
    for a in &r.assertions {
        let mark = if a.passed { "ok  " } else { "FAIL" };
        s += &format!("  {mark} {}", a.name);
        if !a.witness.is_empty() {
            s += &format!(": {}", a.witness);
        }
        s.push('\n');
    }
    s
}

fn cmd_check(name: &str, config: &CliConfig) -> Result<Status> {
    let spec = config.spec()?;
    let opts = CheckOptions {
        seed: config.seed,
        exhaustive: config.exhaustive,
        paranoid: config.paranoid,
        ..Default::default()
    };
    let checks = if name == "all" {
        let mut run = Vec::new();
        for c in Check::suite(config.field) {
            match c.applicable(&spec) {
                Ok(()) => run.push(c),
                Err(e) => eprintln!("skip {c}: {e}"),
            }
        }
        run
    } else {
        vec![name.parse::<Check>()?]
    };
    let mut reports = Vec::new();
    for c in checks {
        let report = c.run(&spec, &opts)?;
        eprintln!(
            "{} {c}: {} ms",
            if report.passed { "pass" } else { "FAIL" },
            report.total_ms
        );
        reports.push(report);
    }
    let passed = reports.iter().all(|r| r.passed);
    let out = match config.format(OutputFormat::Json) {
        OutputFormat::Json if name == "all" => serde_json::to_string_pretty(&reports)? + "\n",
        OutputFormat::Json => serde_json::to_string_pretty(&reports[0])? + "\n",
        OutputFormat::Text => reports.iter().map(report_text).collect(),
        _ => bail!("check supports --out json or text"),
    };
    emit(&out)?;
    Ok(if passed { Status::Ok } else { Status::Failed })
}
