//! `mg`: growth tables, word problem, and verification suites for I2.

mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use i2_growth::mealy::{automaton_growth, minimize, MealyAutomaton, DEFAULT_MAX_STATES};
use i2_growth::rewrite::{reduce_quotient, reduce_traced, GenWord};
use i2_growth::semigroup::{
    ball_growth_oracle, hausdorff_sequence, quotient_order, quotient_order_formula,
    spherical_growth_oracle, DEFAULT_MAX_ELEMENTS, MAX_LEVEL,
};
use i2_growth::series::{growth_rows, GrowthRow};

use verify::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "mg", version, about = "Growth of the semigroup of the automaton I2")]
struct Cli {
    /// Output format; commands print plain text when it is not given.
    #[arg(long, global = true)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES)]
    max_states: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact growth coefficients and asymptotic ratios for n = 1..N.
    Growth {
        #[arg(long = "N")]
        big_n: usize,
        /// Also count by enumerating tables, for n up to --oracle-max.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 12)]
        oracle_max: usize,
    },
    /// Normal form of a word over 0 (f0) and 1 (f1).
    Reduce {
        word: String,
        /// Reduce in the level-n quotient instead.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Whether two words define the same element.
    Equal {
        left: String,
        right: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Order of the level-n quotient and its Hausdorff term.
    Quotient {
        #[arg(long)]
        n: u32,
        /// Also count the quotient by enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Run a verification suite; exits nonzero on failure.
    Verify {
        suite: Suite,
        #[command(flatten)]
        params: verify::Params,
    },
    /// Operations on an automaton file.
    Automaton {
        file: PathBuf,
        #[command(subcommand)]
        action: AutomatonAction,
    },
}

#[derive(Debug, Subcommand)]
enum AutomatonAction {
    /// Γ_A(1..N): state counts of the minimized powers.
    Growth {
        #[arg(long = "N")]
        big_n: usize,
    },
    Minimize,
    Product {
        #[arg(long = "with")]
        other: PathBuf,
    },
    Invertible,
}

fn parse_word(s: &str) -> Result<GenWord> {
    s.parse().with_context(|| format!("cannot parse word `{s}`"))
}

fn load_automaton(path: &Path) -> Result<MealyAutomaton> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.parse()
        .with_context(|| format!("malformed automaton file {}", path.display()))
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

#[derive(Serialize)]
struct ReportRow {
    #[serde(flatten)]
    row: GrowthRow,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_aut: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_ball: Option<usize>,
}

fn cmd_growth(cli: &Cli, big_n: usize, oracle: bool, oracle_max: usize) -> Result<bool> {
    if big_n == 0 {
        bail!("--N must be at least 1");
    }
    let i2 = MealyAutomaton::i2();
    // Oracle rows are independent; collecting keeps them in order of n.
    let rows: Vec<ReportRow> = growth_rows(big_n)?
        .into_par_iter()
        .map(|row| {
            let counted = oracle && row.n <= oracle_max;
            let oracle_aut = counted
                .then(|| spherical_growth_oracle(&i2, row.n, cli.max_elements))
                .transpose()?
                .map(|c| c.value);
            let oracle_ball = counted
                .then(|| ball_growth_oracle(&i2, row.n, cli.max_elements))
                .transpose()?
                .map(|c| c.value);
            Ok(ReportRow {
                row,
                oracle_aut,
                oracle_ball,
            })
        })
        .collect::<Result<_>>()?;

    let mut agree = true;
    if cli.format == Some(Format::Json) {
        for r in &rows {
            print_json(r)?;
        }
    } else {
        let extra = if oracle { ",oracle_aut,oracle_ball" } else { "" };
        println!("{}{extra}", GrowthRow::CSV_HEADER);
        for r in &rows {
            let mut line = r.row.to_csv();
            if oracle {
                let show = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
                line += &format!(",{},{}", show(r.oracle_aut), show(r.oracle_ball));
            }
            println!("{line}");
        }
    }
    for r in &rows {
        if let (Some(a), Some(b)) = (r.oracle_aut, r.oracle_ball) {
            if a.to_string() != r.row.gamma_aut || b.to_string() != r.row.gamma_ball {
                eprintln!("oracle disagrees with the series at n = {}", r.row.n);
                agree = false;
            }
        }
    }
    Ok(agree)
}

#[derive(Serialize)]
struct Reduced {
    word: String,
    normal_form: String,
    steps: Option<usize>,
}

fn cmd_reduce(cli: &Cli, word: &str, n: Option<u32>) -> Result<()> {
    let w = parse_word(word)?;
    let (nf, steps) = match n {
        Some(n) => (reduce_quotient(&w, n)?, None),
        None => {
            let r = reduce_traced(&w);
            (r.normal_form, Some(r.steps))
        }
    };
    let out = Reduced {
        word: nf.to_word().to_string(),
        normal_form: nf.to_string(),
        steps,
    };
    match cli.format {
        Some(Format::Json) => print_json(&out)?,
        Some(Format::Csv) => {
            println!("word,normal_form,steps");
            let steps = out.steps.map_or(String::new(), |s| s.to_string());
            println!("{},{},{steps}", out.word, out.normal_form.replace(',', " "));
        }
        None => println!("{}", out.word),
    }
    Ok(())
}

fn cmd_equal(cli: &Cli, left: &str, right: &str, n: Option<u32>) -> Result<()> {
    let (a, b) = (parse_word(left)?, parse_word(right)?);
    let equal = match n {
        Some(n) => reduce_quotient(&a, n)? == reduce_quotient(&b, n)?,
        None => i2_growth::rewrite::words_equal(&a, &b),
    };
    match cli.format {
        Some(Format::Json) => print_json(&serde_json::json!({ "equal": equal }))?,
        _ => println!("{equal}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct QuotientReport {
    n: u32,
    order: String,
    hausdorff_term: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<usize>,
}

fn cmd_quotient(cli: &Cli, n: u32, oracle: bool) -> Result<bool> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if oracle && n > MAX_LEVEL {
        bail!("--oracle needs n <= {MAX_LEVEL}");
    }
    let order = quotient_order_formula(n);
    let report = QuotientReport {
        n,
        order: order.to_string(),
        hausdorff_term: hausdorff_sequence(n)[n as usize - 1],
        enumerated: oracle
            .then(|| quotient_order(n, cli.max_elements))
            .transpose()?,
    };
    match cli.format {
        Some(Format::Json) => print_json(&report)?,
        Some(Format::Csv) => {
            println!("n,order,hausdorff_term,enumerated");
            let e = report.enumerated.map_or(String::new(), |e| e.to_string());
            println!("{},{},{},{e}", report.n, report.order, report.hausdorff_term);
        }
        None => {
            println!("order {}", report.order);
            println!("hausdorff_term {:.6}", report.hausdorff_term);
            if let Some(e) = report.enumerated {
                println!("enumerated {e}");
            }
        }
    }
    Ok(report
        .enumerated
        .is_none_or(|e| e.to_string() == report.order))
}

fn cmd_automaton(cli: &Cli, file: &Path, action: &AutomatonAction) -> Result<()> {
    let a = load_automaton(file)?;
    match action {
        AutomatonAction::Growth { big_n } => {
            let counts = automaton_growth(&a, *big_n, cli.max_states)?;
            match cli.format {
                Some(Format::Json) => {
                    for (i, c) in counts.iter().enumerate() {
                        print_json(&serde_json::json!({ "n": i + 1, "growth": c }))?;
                    }
                }
                Some(Format::Csv) => {
                    println!("n,growth");
                    for (i, c) in counts.iter().enumerate() {
                        println!("{},{c}", i + 1);
                    }
                }
                None => {
                    let items: Vec<String> = counts.iter().map(usize::to_string).collect();
                    println!("{}", items.join(","));
                }
            }
        }
        AutomatonAction::Minimize => print!("{}", minimize(&a)),
        AutomatonAction::Product { other } => {
            let b = load_automaton(other)?;
            print!("{}", a.product_capped(&b, cli.max_states)?);
        }
        AutomatonAction::Invertible => println!("{}", a.is_invertible()),
    }
    Ok(())
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var("MG_THREADS") {
        let threads: usize = value
            .parse()
            .with_context(|| format!("MG_THREADS must be a number, got `{value}`"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("cannot configure the worker pool")?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    configure_threads()?;
    match &cli.command {
        Command::Growth {
            big_n,
            oracle,
            oracle_max,
        } => cmd_growth(cli, *big_n, *oracle, *oracle_max),
        Command::Reduce { word, n } => cmd_reduce(cli, word, *n).map(|_| true),
        Command::Equal { left, right, n } => cmd_equal(cli, left, right, *n).map(|_| true),
        Command::Quotient { n, oracle } => cmd_quotient(cli, *n, *oracle),
        Command::Verify { suite, params } => verify::run(*suite, params, cli.format == Some(Format::Json)),
        Command::Automaton { file, action } => cmd_automaton(cli, file, action).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
