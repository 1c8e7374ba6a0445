mod config;
mod query;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use log::info;
use situnet::bln::{clamp_constraints, ground, marginals, BlnModel, InferenceParams};
use situnet::eval::{format_lines, format_table, GoldStandard};
use situnet::pipeline::{evaluate_scenario, generate, Generated, Resources};

use config::{read_seeds, Overrides, PipelineConfig};
use query::QueryPattern;

#[derive(Parser)]
#[command(
    name = "situnet",
    version,
    about = "Build and query situation-specific knowledge networks"
)]
struct Cli {
    /// Log progress (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the network and learned model for a seed list.
    Generate {
        #[arg(long)]
        config: PathBuf,
        /// Output directory (defaults to the config's `output`, else `out/` beside it).
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Answer queries against a saved model.
    Infer {
        #[arg(long)]
        model: PathBuf,
        /// Supplies method, sample count and seed defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Observed value, e.g. `IsA(obj1,sock)=true`.
        #[arg(long = "evidence")]
        evidence: Vec<String>,
        /// Variables to report, e.g. `AtLocation(obj1,*)`.
        #[arg(long = "query", required = true)]
        query: Vec<String>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Score one or more scenarios against their gold files.
    Evaluate {
        #[arg(long = "config", required = true)]
        config: Vec<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
}

/// A problem with how the command was invoked rather than with its data.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Generate { config, out, overrides } => cmd_generate(&config, out, &overrides),
        Command::Infer {
            model,
            config,
            evidence,
            query,
            overrides,
        } => cmd_infer(&model, config.as_deref(), &evidence, &query, &overrides),
        Command::Evaluate { config, overrides } => cmd_evaluate(&config, &overrides),
    }
}

fn load_config(path: &Path, overrides: &Overrides) -> Result<PipelineConfig> {
    let mut c = PipelineConfig::load(path)?;
    c.apply(overrides)?;
    c.validate()?;
    Ok(c)
}

/// Loads resources and seeds and runs every generation stage.
fn build(c: &PipelineConfig) -> Result<(Vec<String>, Generated)> {
    let seeds_path = c
        .seeds
        .as_ref()
        .ok_or_else(|| UsageError("no seeds file: set `seeds` in the config or pass --seeds".into()))?;
    let seeds = read_seeds(seeds_path)?;
    if seeds.is_empty() {
        return Err(UsageError(format!("seeds file {} lists no seed words", seeds_path.display())).into());
    }
    c.check_paths()?;
    let res = Resources::load(&c.paths, c.weighting)?;
    let generated = generate(&seeds, &res, &c.generate_params())?;
    Ok((seeds, generated))
}

fn cmd_generate(config: &Path, out: Option<PathBuf>, overrides: &Overrides) -> Result<()> {
    let c = load_config(config, overrides)?;
    let (_, g) = build(&c)?;
    let out = out
        .or_else(|| c.output.clone())
        .unwrap_or_else(|| config.parent().unwrap_or(Path::new(".")).join("out"));
    let files = [
        ("graph.tsv", g.graph.to_text()),
        ("model.bln", g.model.to_text()),
        ("senses.tsv", g.assignment.to_text()),
    ];
    fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
    for (name, text) in &files {
        let path = out.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    println!(
        "{}: {} nodes, {} edges, {} fragments, {} relation edges attached ({} dropped on sense mismatch)",
        c.name,
        g.graph.nodes.len(),
        g.graph.edges.len(),
        g.model.fragments.len(),
        g.attach.added,
        g.attach.sense_mismatch
    );
    println!("wrote graph.tsv, model.bln and senses.tsv to {}", out.display());
    Ok(())
}

fn cmd_infer(
    model_path: &Path,
    config: Option<&Path>,
    evidence: &[String],
    queries: &[String],
    overrides: &Overrides,
) -> Result<()> {
    let params: InferenceParams = match config {
        Some(p) => load_config(p, overrides)?.inference_params(),
        None => {
            let mut c = PipelineConfig::default();
            c.apply(overrides)?;
            c.validate()?;
            c.inference_params()
        }
    };
    let text = fs::read_to_string(model_path).with_context(|| format!("reading {}", model_path.display()))?;
    let model = BlnModel::from_text(&text).with_context(|| format!("parsing {}", model_path.display()))?;
    let evidence: Vec<_> = evidence
        .iter()
        .map(|e| query::parse_evidence(e))
        .collect::<Result<_>>()?;
    let patterns: Vec<QueryPattern> = queries.iter().map(|q| QueryPattern::parse(q)).collect::<Result<_>>()?;
    let objects = query::objects(&evidence, &patterns);
    if objects.is_empty() {
        return Err(UsageError("name at least one object in --evidence or --query".into()).into());
    }
    info!("grounding for objects {}", objects.join(", "));
    let net = ground(&model.declaration, &model.fragments, &objects, &model.constraints)?;
    let mut ev = query::resolve_evidence(&net, &evidence)?;
    clamp_constraints(&net, &mut ev);
    let ids = query::resolve_queries(&net, &patterns, queries)?;
    let probs = marginals(&net, &ids, &ev, &params)?;
    let mut rows: Vec<(f64, &str)> = probs.into_iter().zip(ids.iter().map(|&v| net.name(v))).collect();
    rows.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    for (p, name) in rows {
        println!("{p:.4}\t{name}");
    }
    Ok(())
}

fn cmd_evaluate(configs: &[PathBuf], overrides: &Overrides) -> Result<()> {
    let mut rows = Vec::new();
    for path in configs {
        let c = load_config(path, overrides)?;
        let gold_path = c
            .gold
            .as_ref()
            .ok_or_else(|| UsageError(format!("{}: no gold file configured", path.display())))?;
        let gold_text = fs::read_to_string(gold_path).with_context(|| format!("reading {}", gold_path.display()))?;
        let gold = GoldStandard::parse(&gold_text).with_context(|| format!("parsing {}", gold_path.display()))?;
        let (_, g) = build(&c)?;
        let (_, report) = evaluate_scenario(&g.model, &g.assignment, &gold, &c.inference_params())
            .with_context(|| format!("scenario {}", c.name))?;
        rows.push((c.name.clone(), report));
    }
    if rows.is_empty() {
        bail!("no scenarios to evaluate");
    }
    print!("{}", format_table(&rows));
    println!();
    print!("{}", format_lines(&rows));
    Ok(())
}
