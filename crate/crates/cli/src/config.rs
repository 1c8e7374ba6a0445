use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::Args;
use situnet::bln::{InferenceParams, Method, SimulationParams};
use situnet::netgen::CompressOptions;
use situnet::pipeline::{GenerateParams, ResourcePaths};
use situnet::relatedness::Weighting;

/// Offsets added to the master seed for each randomized stage.
pub const EVIDENCE_SEED_OFFSET: u64 = 1;
pub const INFERENCE_SEED_OFFSET: u64 = 2;

/// Command-line overrides; any flag given wins over the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// Seeds file, one word per line.
    #[arg(long)]
    pub seeds: Option<PathBuf>,
    /// Environment term used to prune locations.
    #[arg(long)]
    pub environment: Option<String>,
    #[arg(long)]
    pub min_children: Option<usize>,
    #[arg(long)]
    pub ic_threshold: Option<f64>,
    /// Weight of edge strength against relatedness when simulating evidence.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub pseudocount: Option<f64>,
    #[arg(long)]
    pub n_worlds: Option<usize>,
    /// Samples per query for the sampling methods.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_parser = ["exact", "lw", "gibbs"])]
    pub method: Option<String>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub name: String,
    pub paths: ResourcePaths,
    pub seeds: Option<PathBuf>,
    pub gold: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub environment: String,
    pub min_children: usize,
    pub ic_threshold: f64,
    pub alpha: f64,
    pub pseudocount: f64,
    pub n_worlds: usize,
    pub seed_prior: f64,
    pub max_parents: usize,
    pub weighting: Weighting,
    pub method: Method,
    pub samples: usize,
    pub burn_in: usize,
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        let g = GenerateParams::default();
        let i = InferenceParams::default();
        PipelineConfig {
            name: String::new(),
            paths: ResourcePaths::default(),
            seeds: None,
            gold: None,
            output: None,
            environment: g.environment,
            min_children: g.compress.min_children,
            ic_threshold: g.compress.ic_threshold,
            alpha: g.simulation.alpha,
            pseudocount: g.pseudocount,
            n_worlds: g.simulation.n_worlds,
            seed_prior: g.simulation.seed_prior,
            max_parents: g.max_parents,
            weighting: Weighting::RawCount,
            method: i.method,
            samples: i.samples,
            burn_in: i.burn_in,
            seed: 0,
        }
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| anyhow::anyhow!("{key}: cannot parse {value:?}: {e}"))
}

impl PipelineConfig {
    /// Parses `key = value` lines; relative paths resolve against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<PipelineConfig> {
        let mut entries = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .with_context(|| format!("line {}: expected key = value", i + 1))?;
            if entries.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                bail!("line {}: duplicate key {}", i + 1, k.trim());
            }
        }
        let path = |v: &str| base.join(v);
        let mut c = PipelineConfig::default();
        for (k, v) in &entries {
            match k.as_str() {
                "name" => c.name = v.clone(),
                "lexicon" => c.paths.lexicon = path(v),
                "edges" => c.paths.edges = path(v),
                "frequencies" => c.paths.frequencies = path(v),
                "stopwords" => c.paths.stopwords = path(v),
                "esa_corpus" => c.paths.esa_corpus = path(v),
                "seeds" => c.seeds = Some(path(v)),
                "gold" => c.gold = Some(path(v)),
                "output" => c.output = Some(path(v)),
                "environment" => c.environment = v.clone(),
                "min_children" => c.min_children = parse_value(k, v)?,
                "ic_threshold" => c.ic_threshold = parse_value(k, v)?,
                "alpha" => c.alpha = parse_value(k, v)?,
                "pseudocount" => c.pseudocount = parse_value(k, v)?,
                "n_worlds" => c.n_worlds = parse_value(k, v)?,
                "seed_prior" => c.seed_prior = parse_value(k, v)?,
                "max_parents" => c.max_parents = parse_value(k, v)?,
                "weighting" => c.weighting = parse_value(k, v)?,
                "method" => c.method = parse_value(k, v)?,
                "samples" => c.samples = parse_value(k, v)?,
                "burn_in" => c.burn_in = parse_value(k, v)?,
                "seed" => c.seed = parse_value(k, v)?,
                other => bail!("unknown config key {other:?}"),
            }
        }
        Ok(c)
    }

    pub fn load(file: &Path) -> Result<PipelineConfig> {
        let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        let base = file.parent().unwrap_or(Path::new("."));
        let mut c = PipelineConfig::parse(&text, base).with_context(|| format!("in {}", file.display()))?;
        if c.name.is_empty() {
            c.name = base
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| "scenario".into());
        }
        Ok(c)
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if let Some(v) = &o.seeds {
            self.seeds = Some(v.clone());
        }
        if let Some(v) = &o.environment {
            self.environment = v.clone();
        }
        if let Some(v) = o.min_children {
            self.min_children = v;
        }
        if let Some(v) = o.ic_threshold {
            self.ic_threshold = v;
        }
        if let Some(v) = o.alpha {
            self.alpha = v;
        }
        if let Some(v) = o.pseudocount {
            self.pseudocount = v;
        }
        if let Some(v) = o.n_worlds {
            self.n_worlds = v;
        }
        if let Some(v) = o.samples {
            self.samples = v;
        }
        if let Some(v) = &o.method {
            self.method = parse_value("method", v)?;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(self.min_children >= 1, "min_children must be at least 1");
        ensure!(
            self.ic_threshold.is_finite() && self.ic_threshold >= 0.0,
            "ic_threshold must be a non-negative number"
        );
        ensure!((0.0..=1.0).contains(&self.alpha), "alpha must lie in [0, 1]");
        ensure!((0.0..=1.0).contains(&self.seed_prior), "seed_prior must lie in [0, 1]");
        ensure!(
            self.pseudocount.is_finite() && self.pseudocount >= 0.0,
            "pseudocount must be a non-negative number"
        );
        ensure!(self.n_worlds >= 1, "n_worlds must be at least 1");
        ensure!(self.samples >= 1, "samples must be at least 1");
        ensure!((1..=24).contains(&self.max_parents), "max_parents must lie in 1..=24");
        Ok(())
    }

    /// Checks that every resource file named by the config exists.
    pub fn check_paths(&self) -> Result<()> {
        let p = &self.paths;
        for (key, path) in [
            ("lexicon", &p.lexicon),
            ("edges", &p.edges),
            ("frequencies", &p.frequencies),
            ("stopwords", &p.stopwords),
            ("esa_corpus", &p.esa_corpus),
        ] {
            ensure!(!path.as_os_str().is_empty(), "config does not set {key}");
            ensure!(path.exists(), "{key}: {} does not exist", path.display());
        }
        Ok(())
    }

    pub fn generate_params(&self) -> GenerateParams {
        GenerateParams {
            environment: self.environment.clone(),
            compress: CompressOptions {
                min_children: self.min_children,
                ic_threshold: self.ic_threshold,
                ..CompressOptions::default()
            },
            simulation: SimulationParams {
                alpha: self.alpha,
                n_worlds: self.n_worlds,
                seed_prior: self.seed_prior,
                seed: self.seed.wrapping_add(EVIDENCE_SEED_OFFSET),
            },
            pseudocount: self.pseudocount,
            max_parents: self.max_parents,
        }
    }

    pub fn inference_params(&self) -> InferenceParams {
        InferenceParams {
            method: self.method,
            samples: self.samples,
            burn_in: self.burn_in,
            seed: self.seed.wrapping_add(INFERENCE_SEED_OFFSET),
        }
    }
}

/// Reads a seeds file: one word per line, `#` starts a comment.
pub fn read_seeds(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}
