//! `cayley` — build the cubic Cayley graph family on alternating groups and
//! certify its defining properties.
//!
//! Exit codes: 0 = all asserted checks passed, 1 = usage or configuration
//! error, 2 = a verification check failed.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use cayley_core::certificate::{LemmaFilter, RunConfig};
use cayley_core::construction::Instance;
use cayley_core::explorer::{
    ball_to_dot, ball_to_json, bfs_ball, girth_report, GirthReport,
};
use cayley_core::lemmas::run_all;

#[derive(Parser)]
#[command(name = "cayley", version, about = "Verification tool for a family of cubic Cayley graphs on alternating groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification checks and emit a certificate.
    Verify(VerifyArgs),
    /// Explore a BFS ball of the Cayley graph around the identity.
    Ball(BallArgs),
    /// Print the generators and key elements of one instance.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance parameters, comma separated (e.g. `--m 4,5,6`).
    #[arg(long, value_delimiter = ',')]
    m: Vec<u32>,
    /// Inclusive range of parameters (e.g. `--m-range 4..8`).
    #[arg(long, value_name = "LO..HI")]
    m_range: Option<String>,
    /// Check ids to run (`all`, or a comma-separated subset of:
    /// lemma-2.1, lemma-2.2, lemma-2.3, lemma-3.1, displays, xyz8-cycles,
    /// transitive-hstar, word-witnesses, full-alternating,
    /// cubic-double-coset, fix-patterns, coset-ball).
    #[arg(long, default_value = "all")]
    lemmas: String,
    /// Seed for the seeded searches; echoed into the certificate.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Certificate output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest degree handled by the stabilizer chain.
    #[arg(long, default_value_t = 256)]
    bsgs_cap: usize,
    /// Largest double-coset closure, in elements.
    #[arg(long, default_value_t = 1 << 20)]
    closure_cap: usize,
    /// Radius of the per-instance ball check.
    #[arg(long, default_value_t = 6)]
    ball_radius: u32,
    /// Largest m for which the ball check runs.
    #[arg(long, default_value_t = 5)]
    ball_m_cap: u32,
    /// Word budget for the alternating-group certificate search.
    #[arg(long, default_value_t = 100_000)]
    jordan_budget: usize,
    /// Falsification control: corrupt the y table and expect failures.
    #[arg(long, default_value_t = false)]
    negative_control: bool,
}

#[derive(Args)]
struct BallArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    radius: u32,
    #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
    export: ExportFormat,
    #[arg(long, default_value_t = 2_000_000)]
    max_vertices: usize,
    /// Export path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    m: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1, // usage errors are exit 1, distinct from check failures
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Ball(args) => cmd_ball(args),
        Command::Construct(args) => cmd_construct(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn parse_m_range(range: &str) -> anyhow::Result<Vec<u32>> {
    let (lo, hi) = range
        .split_once("..")
        .with_context(|| format!("malformed range {range:?}, expected LO..HI"))?;
    let lo: u32 = lo.trim().parse().context("range start")?;
    let hi: u32 = hi.trim().parse().context("range end")?;
    if lo > hi {
        bail!("empty range {range:?}");
    }
    Ok((lo..=hi).collect())
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<i32> {
    if args.m.is_empty() && args.m_range.is_none() {
        bail!("give at least one parameter via --m or --m-range");
    }
    let mut m_values = args.m.clone();
    if let Some(range) = &args.m_range {
        m_values.extend(parse_m_range(range)?);
    }
    let lemmas = if args.lemmas.trim() == "all" {
        LemmaFilter::All
    } else {
        let ids: Vec<String> = args
            .lemmas
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        for id in &ids {
            if !cayley_core::lemmas::CHECK_IDS.contains(&id.as_str()) {
                bail!("unknown check id {id:?}");
            }
        }
        LemmaFilter::Ids(ids)
    };
    let config = RunConfig {
        m_values,
        seed: args.seed,
        bsgs_degree_cap: args.bsgs_cap,
        closure_cap: args.closure_cap,
        ball_radius: args.ball_radius,
        ball_m_cap: args.ball_m_cap,
        jordan_budget: args.jordan_budget,
        lemmas,
        negative_control: args.negative_control,
        ..RunConfig::default()
    };
    config.validate()?;

    let certificate = run_all(&config)?;
    let rendered = match args.format {
        Format::Json => certificate.to_json(),
        Format::Text => certificate.to_text(),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, rendered.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
            print!("{}", certificate.to_text());
            println!("certificate written to {}", path.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes())?;
        }
    }
    Ok(if certificate.passed() { 0 } else { 2 })
}

const BALL_RADIUS_CAP: u32 = 12;

fn cmd_ball(args: BallArgs) -> anyhow::Result<i32> {
    if args.radius > BALL_RADIUS_CAP {
        bail!("radius {} exceeds the cap of {BALL_RADIUS_CAP}", args.radius);
    }
    let inst = Instance::new(args.m)?;
    let ball = bfs_ball(&inst, args.radius, args.max_vertices)?;
    let rendered = match args.export {
        ExportFormat::Dot => ball_to_dot(&ball),
        ExportFormat::Json => ball_to_json(&ball),
    };

    let mut summary = String::new();
    summary.push_str(&format!(
        "m={} radius={} vertices={} edges={} truncated={}\n",
        args.m,
        args.radius,
        ball.vertex_count(),
        ball.edges.len(),
        ball.truncated
    ));
    summary.push_str(&format!("frontier sizes: {:?}\n", ball.frontier_sizes));
    match girth_report(&ball) {
        GirthReport::CycleFound { length, .. } => {
            summary.push_str(&format!("girth within ball: {length}\n"));
        }
        GirthReport::TreeToRadius { lower_bound } => {
            summary.push_str(&format!(
                "no cycle within the ball; girth at least {lower_bound}\n"
            ));
        }
    }

    match &args.out {
        Some(path) => {
            fs::write(path, rendered.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
            print!("{summary}");
            println!("export written to {}", path.display());
        }
        None => {
            print!("{rendered}");
            eprint!("{summary}");
        }
    }
    Ok(0)
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<i32> {
    let inst = Instance::new(args.m)?;
    let params = inst.params();
    println!("m = {}   |H| = {}   degree = {}", params.m(), params.group_order(), inst.degree());
    println!("h  = {}", params.h_element());
    if params.is_even_m() {
        println!("h1 = {}", params.h1_element()?);
    }
    for (name, gen) in inst.connection().gens() {
        let decomposition = gen.cycle_decomposition();
        let involution = gen.compose(gen)?.is_identity();
        println!(
            "{name}: parity {:?}, involution: {involution}, {} two-cycles, fixes {} points",
            gen.parity(),
            decomposition.cycles().len(),
            decomposition.fixed().len()
        );
        println!("  {name} = {decomposition}");
    }
    Ok(0)
}
