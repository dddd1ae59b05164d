//! `supersieve`: counts, generating functions, promotion orbits, strip
//! tilings, and cyclic sieving checks on Young tableaux.
//!
//! Exit status is 0 when every check passes, 1 when any check fails and 2 on
//! usage or input errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use supersieve_core::arith::divisors;
use supersieve_core::qalgebra::{maj_gf_hook, syt_count_hook};
use supersieve_core::sieve::{verify_theorem_b, RectangleSieve};
use supersieve_core::signed::{super_gf_product, verify_product_formula};
use supersieve_core::strips::{enumerate_bst, verify_content_residues, verify_mn};
use supersieve_core::tableaux::enumerate_syt;
use supersieve_core::{Partition, SignedTableau, StandardTableau};

use output::{emit, render_reports, Format, Report};

#[derive(Debug, Parser)]
#[command(name = "supersieve", version, about = "Cyclic sieving on standard and signed Young tableaux")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of standard tableaux by the hook formula and by enumeration.
    Count { shape: Partition },
    /// Major index generating function.
    Gf { shape: Partition },
    /// Super major index generating function, graded by the number of negatives.
    SuperGf {
        shape: Partition,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Promotion orbit of a tableau written as rows, e.g. `1,2,4/3,5/6,7`.
    Promote {
        tableau: StandardTableau,
        /// Negative entries, e.g. `3,6`. Switches to signed promotion.
        #[arg(long, value_delimiter = ',')]
        negatives: Option<Vec<u32>>,
    },
    /// Border strip tableaux with strips of one size.
    Bst {
        shape: Partition,
        #[arg(long)]
        strip_size: usize,
        /// Print every tiling, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification on one shape or sweep all shapes up to `--max-n`.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        args: VerifyArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    RectCsp,
    TrivialCsp,
    ProductFormula,
    ContentLemma,
    Mn,
    TheoremB,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    shape: Option<Partition>,
    #[arg(long, conflicts_with = "shape")]
    max_n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Divisor of n: root order for `mn`, strip size for `content-lemma`.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, hide = true)]
    perturb: bool,
}

/// Largest tableau count `count` will confirm by enumeration.
const ENUMERATION_LIMIT: u64 = 2_000_000;

enum Outcome {
    Passed,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Passed) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let (text, outcome) = match &cli.command {
        Command::Verify { check, args } => {
            let reports = verify(*check, args)?;
            let ok = reports.iter().all(Report::passed);
            let text = render_reports(&reports, cli.format)?;
            (text, if ok { Outcome::Passed } else { Outcome::Failed })
        }
        other => (compute(other, cli.format)?, Outcome::Passed),
    };
    emit(&text, cli.output.as_deref()).context("writing output")?;
    Ok(outcome)
}

fn compute(command: &Command, format: Format) -> anyhow::Result<String> {
    let value = match command {
        Command::Count { shape } => {
            let hook = syt_count_hook(shape);
            let enumerated = if hook <= ENUMERATION_LIMIT.into() {
                let count = enumerate_syt(shape).len();
                if hook != count.into() {
                    bail!("hook formula {hook} disagrees with enumeration {count} for {shape}");
                }
                Some(count)
            } else {
                None
            };
            if format == Format::Text {
                return Ok(match enumerated {
                    Some(_) => format!("{hook}\n"),
                    None => format!("{hook} (enumeration skipped above {ENUMERATION_LIMIT})\n"),
                });
            }
            json!({"shape": shape.to_string(), "n": shape.size(), "hook_formula": hook.to_string(), "enumerated": enumerated})
        }
        Command::Gf { shape } => {
            let f = maj_gf_hook(shape);
            if format == Format::Text {
                return Ok(format!("{f}\n"));
            }
            json!({"shape": shape.to_string(), "gf": f})
        }
        Command::SuperGf { shape, k } => {
            let gf = super_gf_product(shape);
            if let Some(k) = k {
                if *k > shape.size() {
                    bail!("k = {k} exceeds n = {}", shape.size());
                }
            }
            if format == Format::Text {
                let mut out = String::new();
                for (i, g) in gf.grades().iter().enumerate() {
                    if k.is_none_or(|k| k == i) {
                        out.push_str(&format!("t^{i}: {g}\n"));
                    }
                }
                return Ok(out);
            }
            match k {
                Some(k) => json!({"shape": shape.to_string(), "k": k, "gf": gf.grade(*k)}),
                None if format == Format::Json => return Ok(format!("{}\n", serde_json::to_string(&gf)?)),
                None => serde_json::to_value(&gf)?,
            }
        }
        Command::Promote { tableau, negatives } => {
            let (orbit, rendered) = match negatives {
                Some(neg) => {
                    let start = SignedTableau::new(tableau.clone(), neg.clone())?;
                    let orbit = orbit(start, SignedTableau::signed_promotion);
                    let rendered: Vec<String> = orbit.iter().map(ToString::to_string).collect();
                    (serde_json::to_value(&orbit)?, rendered)
                }
                None => {
                    let orbit = orbit(tableau.clone(), StandardTableau::promotion);
                    let rendered: Vec<String> = orbit.iter().map(ToString::to_string).collect();
                    (serde_json::to_value(&orbit)?, rendered)
                }
            };
            if format == Format::Text {
                let mut out = format!("orbit length {}\n", rendered.len());
                for t in rendered {
                    out.push('\n');
                    out.push_str(&t);
                    out.push('\n');
                }
                return Ok(out);
            }
            json!({"length": orbit.as_array().map_or(0, Vec::len), "orbit": orbit})
        }
        Command::Bst { shape, strip_size, list } => {
            if *strip_size == 0 {
                bail!("strip size must be positive");
            }
            let tilings = enumerate_bst(shape, *strip_size);
            if format == Format::Text {
                let mut out = format!("{} tilings of {shape} by strips of size {strip_size}\n", tilings.len());
                if *list {
                    for t in &tilings {
                        out.push_str(&format!("\n{t}\n"));
                    }
                }
                return Ok(out);
            }
            let mut value = json!({"shape": shape.to_string(), "strip_size": strip_size, "count": tilings.len()});
            if *list {
                value["tilings"] = serde_json::to_value(&tilings)?;
            }
            value
        }
        Command::Verify { .. } => unreachable!("handled by run"),
    };
    match format {
        Format::Json => Ok(format!("{value}\n")),
        Format::Csv => bail!("csv output is only available for verify"),
        Format::Text => unreachable!("text rendered above"),
    }
}

fn orbit<T: PartialEq + Clone>(start: T, step: impl Fn(&T) -> T) -> Vec<T> {
    let mut out = vec![start.clone()];
    let mut cur = step(&start);
    while cur != start {
        out.push(cur.clone());
        cur = step(&cur);
    }
    out
}

fn shapes(args: &VerifyArgs, rectangles_only: bool) -> anyhow::Result<Vec<Partition>> {
    match (&args.shape, args.max_n) {
        (Some(shape), _) => {
            if rectangles_only && shape.is_rectangular().is_none() {
                bail!("shape {shape} is not a rectangle");
            }
            Ok(vec![shape.clone()])
        }
        (None, Some(max_n)) => Ok((1..=max_n)
            .flat_map(Partition::all_of)
            .filter(|p| !rectangles_only || p.is_rectangular().is_some())
            .collect()),
        (None, None) => bail!("give a shape or --max-n"),
    }
}

fn ks(args: &VerifyArgs, n: usize) -> anyhow::Result<Vec<usize>> {
    match args.k {
        Some(k) if k > n => bail!("k = {k} exceeds n = {n}"),
        Some(k) => Ok(vec![k]),
        None => Ok((0..=n).collect()),
    }
}

fn divisor_choice(args: &VerifyArgs, n: usize) -> anyhow::Result<Vec<usize>> {
    match args.d {
        Some(d) if d == 0 || n % d != 0 => bail!("d = {d} does not divide n = {n}"),
        Some(d) => Ok(vec![d]),
        None => Ok(divisors(n)),
    }
}

fn verify(check: Check, args: &VerifyArgs) -> anyhow::Result<Vec<Report>> {
    if args.perturb && check != Check::RectCsp {
        bail!("--perturb only applies to rect-csp");
    }
    if check == Check::TheoremB && args.m.is_none() {
        bail!("theorem-b requires --m");
    }
    let rect = matches!(check, Check::RectCsp | Check::TrivialCsp);
    let mut reports = Vec::new();
    for shape in shapes(args, rect)? {
        let n = shape.size();
        let context = || format!("shape {shape}");
        match check {
            Check::RectCsp | Check::TrivialCsp => {
                let sieve = RectangleSieve::new(&shape).with_context(context)?;
                for k in ks(args, n)? {
                    let report = match check {
                        Check::RectCsp if args.perturb => sieve.verify_perturbed(k)?,
                        Check::RectCsp => sieve.verify_theorem_a(k)?,
                        _ => sieve.verify_trivial(k)?,
                    };
                    reports.push(Report::Csp(report));
                }
            }
            Check::ProductFormula => {
                let records = verify_product_formula(&shape, ks(args, n)?).with_context(context)?;
                reports.extend(records.into_iter().map(Report::ProductFormula));
            }
            Check::ContentLemma => {
                for s in divisor_choice(args, n)? {
                    reports.push(Report::Content(verify_content_residues(&shape, s)?));
                }
            }
            Check::Mn => {
                for d in divisor_choice(args, n)? {
                    reports.push(Report::Mn(verify_mn(&shape, n, d)?));
                }
            }
            Check::TheoremB => {
                let m = args.m.expect("checked above");
                if m == 0 {
                    bail!("--m must be at least 1");
                }
                for k in ks(args, n)? {
                    reports.push(Report::TheoremB(verify_theorem_b(&shape, m, k)?));
                }
            }
        }
    }
    Ok(reports)
}
