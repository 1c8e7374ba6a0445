//! End-to-end generation and evaluation over loaded resources.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use log::info;

use crate::bln::{
    ground, learn_cpfs, model_from_graph, simulate_evidence, BlnError, BlnModel, GroundNetwork, InferenceParams,
    SimulationParams, DEFAULT_MAX_PARENTS,
};
use crate::disambiguation::{disambiguate_seeds, SenseAssignment};
use crate::edges::{filter_multiword, ingest_edges, EdgeStore, IngestReport};
use crate::eval::{object_name, run_scenario, score, AccuracyReport, GoldStandard, ScenarioResults};
use crate::lexicon::{CorpusFrequencies, LexiconIndex};
use crate::netgen::{
    add_isa_paths, attach_locations_two_hop, attach_relations, compress, AttachReport, CompressOptions, ConceptGraph,
};
use crate::relatedness::{build_esa_index, read_corpus, EsaProvider, Weighting};
use crate::text::Stopwords;

#[derive(Debug, thiserror::Error)]
#[error("{stage}: {message}")]
pub struct PipelineError {
    pub stage: &'static str,
    pub message: String,
}

impl PipelineError {
    fn at<E: std::fmt::Display>(stage: &'static str) -> impl Fn(E) -> PipelineError {
        move |e| PipelineError {
            stage,
            message: e.to_string(),
        }
    }
}

/// Input file locations.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResourcePaths {
    pub lexicon: PathBuf,
    pub edges: PathBuf,
    pub frequencies: PathBuf,
    pub stopwords: PathBuf,
    pub esa_corpus: PathBuf,
}

/// Everything generation reads besides the seeds.
pub struct Resources {
    pub lexicon: LexiconIndex,
    pub store: EdgeStore,
    pub ingest: IngestReport,
    pub frequencies: CorpusFrequencies,
    pub stopwords: Stopwords,
    pub provider: EsaProvider,
}

fn open(path: &Path, stage: &'static str) -> Result<BufReader<File>, PipelineError> {
    File::open(path).map(BufReader::new).map_err(|e| PipelineError {
        stage,
        message: format!("{}: {e}", path.display()),
    })
}

impl Resources {
    pub fn load(paths: &ResourcePaths, weighting: Weighting) -> Result<Resources, PipelineError> {
        let lexicon = LexiconIndex::load_dir(&paths.lexicon).map_err(PipelineError::at("lexicon"))?;
        let stopwords =
            Stopwords::read(open(&paths.stopwords, "stopwords")?).map_err(PipelineError::at("stopwords"))?;
        let (raw, ingest) = ingest_edges(open(&paths.edges, "edges")?, "en").map_err(PipelineError::at("edges"))?;
        let store = filter_multiword(&raw, &lexicon);
        let frequencies = CorpusFrequencies::read(
            open(&paths.frequencies, "frequencies")?,
            &paths.frequencies.display().to_string(),
        )
        .map_err(PipelineError::at("frequencies"))?;
        let docs = read_corpus(open(&paths.esa_corpus, "relatedness")?).map_err(PipelineError::at("relatedness"))?;
        let index = build_esa_index(&docs, weighting, &stopwords, 1);
        info!(
            "loaded {} synsets, {} edges ({} lines read), {} ESA concepts",
            lexicon.len(),
            store.len(),
            ingest.lines,
            index.concepts().len()
        );
        Ok(Resources {
            lexicon,
            store,
            ingest,
            frequencies,
            provider: EsaProvider::new(index, stopwords.clone()),
            stopwords,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenerateParams {
    pub environment: String,
    pub compress: CompressOptions,
    pub simulation: SimulationParams,
    pub pseudocount: f64,
    pub max_parents: usize,
}

impl Default for GenerateParams {
    fn default() -> Self {
        GenerateParams {
            environment: String::new(),
            compress: CompressOptions::default(),
            simulation: SimulationParams::default(),
            pseudocount: 1.0,
            max_parents: DEFAULT_MAX_PARENTS,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub assignment: SenseAssignment,
    pub graph: ConceptGraph,
    pub model: BlnModel,
    pub attach: AttachReport,
}

/// Seeds to learned model: sense selection, IsA paths, compression,
/// relation and location attachment, model construction, simulated
/// evidence and table learning.
pub fn generate<S: AsRef<str>>(
    seeds: &[S],
    res: &Resources,
    params: &GenerateParams,
) -> Result<Generated, PipelineError> {
    let assignment = disambiguate_seeds(seeds, &res.lexicon).map_err(PipelineError::at("disambiguation"))?;
    let graph = add_isa_paths(&assignment, &res.lexicon);
    let graph = compress(&graph, &res.frequencies, &params.compress);
    let (graph, attach) = attach_relations(
        &graph,
        &res.store,
        &res.lexicon,
        &res.provider,
        &res.stopwords,
        &assignment,
    );
    let graph = attach_locations_two_hop(&graph, &res.store, &params.environment);
    graph.validate().map_err(|m| PipelineError {
        stage: "network",
        message: m,
    })?;
    info!(
        "network: {} nodes, {} edges ({} relation edges added, {} dropped for sense mismatch)",
        graph.nodes.len(),
        graph.edges.len(),
        attach.added,
        attach.sense_mismatch
    );
    let model = model_from_graph(&graph, params.max_parents).map_err(PipelineError::at("model"))?;
    let evidence =
        simulate_evidence(&graph, &res.provider, &params.simulation).map_err(PipelineError::at("evidence"))?;
    let fragments =
        learn_cpfs(&model.fragments, &evidence, params.pseudocount).map_err(PipelineError::at("learning"))?;
    Ok(Generated {
        assignment,
        graph,
        model: BlnModel { fragments, ..model },
        attach,
    })
}

/// Grounds `model` with one object per seed.
pub fn ground_for_seeds(model: &BlnModel, n_seeds: usize) -> Result<GroundNetwork, BlnError> {
    let objects: Vec<String> = (1..=n_seeds).map(object_name).collect();
    ground(&model.declaration, &model.fragments, &objects, &model.constraints)
}

/// Runs every seed's queries and scores them against `gold`.
pub fn evaluate_scenario(
    model: &BlnModel,
    assignment: &SenseAssignment,
    gold: &GoldStandard,
    params: &InferenceParams,
) -> Result<(ScenarioResults, AccuracyReport), PipelineError> {
    let seeds: Vec<&str> = assignment.words().collect();
    gold.check_seeds(&seeds).map_err(PipelineError::at("evaluation"))?;
    let net = ground_for_seeds(model, seeds.len()).map_err(PipelineError::at("grounding"))?;
    let results = run_scenario(&net, &seeds, params).map_err(PipelineError::at("inference"))?;
    let report = score(&results, gold, Some(assignment)).map_err(PipelineError::at("scoring"))?;
    Ok((results, report))
}
