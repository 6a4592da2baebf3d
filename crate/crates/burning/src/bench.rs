//! Benchmark harness: declarative manifests in, comparison reports out.
//!
//! A manifest lists instances (generated or loaded from files), the
//! algorithms to run, and a seed; the harness runs everything, verifies
//! every produced sequence before counting it, and emits a table, json, or
//! csv report. Published reference lengths ride along as manifest data so
//! the table can juxtapose them; they are never computed here.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::{apsp, DistanceMatrix};
use crate::generate;
use crate::graph::Graph;
use crate::io;
use crate::sequence::verify;
use crate::solver::{bgp, bgp_plus, greedy_known_b, TieBreak};
use crate::util::{mix_bytes, splitmix64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Bgp,
    BgpPlus,
    Alg1,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bgp => "bgp",
            Algorithm::BgpPlus => "bgp_plus",
            Algorithm::Alg1 => "alg1",
        }
    }
}

/// Published reference lengths for an instance, straight from the manifest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Published {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bonato: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaflss: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bgp: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bgp_plus: Option<u32>,
}

/// One benchmark instance: exactly one of `generator` or `file`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<PathBuf>,
    /// Declared vertex count; mismatches flag the row.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
    /// Known burning number, required by `alg1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub burning_number: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published: Option<Published>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchManifest {
    pub seed: u64,
    pub runs_per_instance: u32,
    pub algorithms: Vec<Algorithm>,
    #[serde(rename = "instance", default)]
    pub instances: Vec<InstanceSpec>,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("manifest {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("manifest: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("duplicate instance name {0:?}")]
    DuplicateName(String),
    #[error("instance {0:?} needs exactly one of `generator` or `file`")]
    AmbiguousSource(String),
    #[error("runs_per_instance must be at least 1")]
    ZeroRuns,
    #[error("no algorithms configured")]
    NoAlgorithms,
    #[error("report json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("report csv: {0}")]
    Csv(String),
}

impl BenchManifest {
    pub fn from_toml(text: &str) -> Result<BenchManifest, BenchError> {
        let manifest: BenchManifest = toml::from_str(text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    fn validate(&self) -> Result<(), BenchError> {
        if self.runs_per_instance == 0 {
            return Err(BenchError::ZeroRuns);
        }
        if self.algorithms.is_empty() {
            return Err(BenchError::NoAlgorithms);
        }
        let mut names = BTreeSet::new();
        for inst in &self.instances {
            if !names.insert(&inst.name) {
                return Err(BenchError::DuplicateName(inst.name.clone()));
            }
            if inst.generator.is_some() == inst.file.is_some() {
                return Err(BenchError::AmbiguousSource(inst.name.clone()));
            }
        }
        Ok(())
    }
}

pub fn load_manifest(path: &Path) -> Result<BenchManifest, BenchError> {
    let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.display().to_string(),
        source,
    })?;
    BenchManifest::from_toml(&text)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
}

/// Aggregates for one algorithm on one instance. Length fields are absent
/// when the algorithm could not run at all.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgoReport {
    pub algorithm: String,
    pub runs: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub best_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_length: Option<f64>,
    pub wall_time_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
    /// Declared shape did not match the resolved graph.
    pub flagged: bool,
    /// Every produced sequence passed verification.
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published: Option<Published>,
    pub algorithms: Vec<AlgoReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub environment: Environment,
    pub failed: bool,
    pub instances: Vec<InstanceReport>,
}

impl BenchReport {
    /// Nothing failed verification, no instance errored, no algorithm
    /// errored.
    pub fn ok(&self) -> bool {
        !self.failed
            && self.instances.iter().all(|i| {
                i.error.is_none() && i.algorithms.iter().all(|a| a.error.is_none())
            })
    }

    /// Zeroes every timing field; reports are otherwise deterministic for a
    /// fixed manifest, so this is what determinism checks compare.
    pub fn strip_timings(&mut self) {
        for inst in &mut self.instances {
            for algo in &mut inst.algorithms {
                algo.wall_time_ms = 0.0;
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<BenchReport, BenchError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Start vertex for a given run, derived so runs are reproducible and spread
/// across the vertex range.
fn derived_start(seed: u64, instance: &str, algorithm: &str, run: u32, n: usize) -> usize {
    let mut state = splitmix64(seed);
    state = mix_bytes(state, instance.as_bytes());
    state = mix_bytes(state, algorithm.as_bytes());
    state = splitmix64(state ^ u64::from(run));
    (state % n as u64) as usize
}

fn resolve_instance(
    spec: &InstanceSpec,
    seed: u64,
    base_dir: &Path,
) -> Result<Graph, String> {
    match (&spec.generator, &spec.file) {
        (Some(gen), None) => generate::from_spec(gen, seed).map_err(|e| e.to_string()),
        (None, Some(file)) => {
            let path = if file.is_absolute() {
                file.clone()
            } else {
                base_dir.join(file)
            };
            io::load_graph(&path, None)
                .map(|p| p.graph)
                .map_err(|e| e.to_string())
        }
        _ => Err("exactly one of `generator` or `file` required".to_string()),
    }
}

fn run_algorithm(
    algorithm: Algorithm,
    spec: &InstanceSpec,
    g: &Graph,
    dm: &DistanceMatrix,
    manifest: &BenchManifest,
) -> (AlgoReport, bool) {
    let tiebreak = TieBreak::LowestId;
    let started = Instant::now();
    let mut lengths: Vec<usize> = Vec::new();
    let mut all_valid = true;
    let mut error = None;
    match algorithm {
        Algorithm::Bgp => {
            for run in 0..manifest.runs_per_instance {
                let start =
                    derived_start(manifest.seed, &spec.name, algorithm.name(), run, g.n());
                match bgp(g, dm, start, &tiebreak) {
                    Ok(r) => {
                        all_valid &= r.valid;
                        lengths.push(r.sequence.len());
                    }
                    Err(e) => {
                        error = Some(e.to_string());
                        break;
                    }
                }
            }
        }
        Algorithm::BgpPlus => {
            // already best-of-all-starts: one run regardless of the knob
            match bgp_plus(g, dm, &tiebreak) {
                Ok(r) => {
                    all_valid &= r.valid;
                    lengths.push(r.sequence.len());
                }
                Err(e) => error = Some(e.to_string()),
            }
        }
        Algorithm::Alg1 => match spec.burning_number {
            Some(k) => {
                for run in 0..manifest.runs_per_instance {
                    let start =
                        derived_start(manifest.seed, &spec.name, algorithm.name(), run, g.n());
                    match greedy_known_b(dm, k, start, &tiebreak) {
                        Ok(s) => {
                            all_valid &= verify(&s, dm).unwrap_or(false);
                            lengths.push(s.len());
                        }
                        Err(e) => {
                            error = Some(e.to_string());
                            break;
                        }
                    }
                }
            }
            None => {
                error = Some("alg1 needs a declared `burning_number`".to_string());
            }
        },
    }
    let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    if error.is_some() {
        lengths.clear();
    }
    let report = AlgoReport {
        algorithm: algorithm.name().to_string(),
        runs: lengths.len() as u32,
        best_length: lengths.iter().min().copied(),
        worst_length: lengths.iter().max().copied(),
        mean_length: (!lengths.is_empty())
            .then(|| lengths.iter().sum::<usize>() as f64 / lengths.len() as f64),
        wall_time_ms,
        error,
    };
    // vacuously valid when nothing was produced; errors surface separately
    (report, all_valid)
}

fn run_instance(spec: &InstanceSpec, manifest: &BenchManifest, base_dir: &Path) -> InstanceReport {
    let g = match resolve_instance(spec, manifest.seed, base_dir) {
        Ok(g) => g,
        Err(error) => {
            return InstanceReport {
                name: spec.name.clone(),
                vertices: None,
                edges: None,
                flagged: false,
                verified: true, // vacuously: nothing was produced
                error: Some(error),
                published: spec.published,
                algorithms: Vec::new(),
            };
        }
    };
    let flagged = spec.vertices.is_some_and(|v| v != g.n())
        || spec.edges.is_some_and(|e| e != g.edge_count());
    let dm = apsp(&g);
    let mut verified = true;
    let mut algorithms = Vec::with_capacity(manifest.algorithms.len());
    for &algorithm in &manifest.algorithms {
        let (report, valid) = run_algorithm(algorithm, spec, &g, &dm, manifest);
        verified &= valid;
        algorithms.push(report);
    }
    InstanceReport {
        name: spec.name.clone(),
        vertices: Some(g.n()),
        edges: Some(g.edge_count()),
        flagged,
        verified,
        error: None,
        published: spec.published,
        algorithms,
    }
}

/// Runs every instance of the manifest and assembles the report in manifest
/// order. Instances run in parallel when the `parallel` feature is on.
pub fn run_benchmark(manifest: &BenchManifest, base_dir: &Path) -> BenchReport {
    let instances: Vec<InstanceReport> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            manifest
                .instances
                .par_iter()
                .map(|spec| run_instance(spec, manifest, base_dir))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            manifest
                .instances
                .iter()
                .map(|spec| run_instance(spec, manifest, base_dir))
                .collect()
        }
    };
    let failed = instances.iter().any(|i| !i.verified);
    BenchReport {
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: manifest.seed,
        },
        failed,
        instances,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

pub fn emit_report(report: &BenchReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => render_table(report),
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => to_csv(report),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Plain-text comparison table: one row per instance, published reference
/// columns first, then one column per computed algorithm (best length).
pub fn render_table(report: &BenchReport) -> String {
    let has_published = report.instances.iter().any(|i| i.published.is_some());
    let algo_names: Vec<String> = report
        .instances
        .iter()
        .flat_map(|i| i.algorithms.iter().map(|a| a.algorithm.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut header = vec!["instance".to_string(), "|V|".to_string(), "|E|".to_string()];
    if has_published {
        for name in ["bonato", "gaflss", "bgp(pub)", "bgp+(pub)"] {
            header.push(name.to_string());
        }
    }
    header.extend(algo_names.iter().cloned());
    header.push("status".to_string());

    let mut rows = vec![header];
    for inst in &report.instances {
        let mut row = vec![
            inst.name.clone(),
            opt(inst.vertices),
            opt(inst.edges),
        ];
        if has_published {
            let p = inst.published.unwrap_or_default();
            row.push(opt(p.bonato));
            row.push(opt(p.gaflss));
            row.push(opt(p.bgp));
            row.push(opt(p.bgp_plus));
        }
        for name in &algo_names {
            let cell = inst
                .algorithms
                .iter()
                .find(|a| &a.algorithm == name)
                .map(|a| match (&a.error, a.best_length) {
                    (Some(_), _) => "error".to_string(),
                    (None, best) => opt(best),
                })
                .unwrap_or_default();
            row.push(cell);
        }
        let status = if let Some(e) = &inst.error {
            format!("error: {e}")
        } else if !inst.verified {
            "UNVERIFIED".to_string()
        } else if inst.flagged {
            "flagged".to_string()
        } else {
            "ok".to_string()
        };
        row.push(status);
        rows.push(row);
    }

    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            if c == 0 || c + 1 == columns {
                line.push_str(&format!("{cell:<width$}", width = widths[c]));
            } else {
                line.push_str(&format!("{cell:>width$}", width = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const CSV_HEADER: [&str; 17] = [
    "instance",
    "algorithm",
    "vertices",
    "edges",
    "runs",
    "best_length",
    "worst_length",
    "mean_length",
    "wall_time_ms",
    "verified",
    "flagged",
    "instance_error",
    "algo_error",
    "pub_bonato",
    "pub_gaflss",
    "pub_bgp",
    "pub_bgp_plus",
];

/// Lossless csv rendering: environment in leading `#` comments, then one row
/// per instance x algorithm (or a bare row for errored instances).
pub fn to_csv(report: &BenchReport) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(CSV_HEADER).expect("csv write");
    for inst in &report.instances {
        let p = inst.published.unwrap_or_default();
        let base = |algo: Option<&AlgoReport>| -> Vec<String> {
            vec![
                inst.name.clone(),
                algo.map(|a| a.algorithm.clone()).unwrap_or_default(),
                opt(inst.vertices),
                opt(inst.edges),
                opt(algo.map(|a| a.runs)),
                opt(algo.and_then(|a| a.best_length)),
                opt(algo.and_then(|a| a.worst_length)),
                opt(algo.and_then(|a| a.mean_length)),
                opt(algo.map(|a| a.wall_time_ms)),
                inst.verified.to_string(),
                inst.flagged.to_string(),
                inst.error.clone().unwrap_or_default(),
                algo.and_then(|a| a.error.clone()).unwrap_or_default(),
                opt(p.bonato),
                opt(p.gaflss),
                opt(p.bgp),
                opt(p.bgp_plus),
            ]
        };
        if inst.algorithms.is_empty() {
            wtr.write_record(base(None)).expect("csv write");
        } else {
            for algo in &inst.algorithms {
                wtr.write_record(base(Some(algo))).expect("csv write");
            }
        }
    }
    let body = String::from_utf8(wtr.into_inner().expect("csv flush")).expect("utf8");
    format!(
        "# version {}\n# seed {}\n# failed {}\n{}",
        report.environment.version, report.environment.seed, report.failed, body
    )
}

fn csv_opt<T: std::str::FromStr>(field: &str) -> Result<Option<T>, BenchError> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse::<T>()
        .map(Some)
        .map_err(|_| BenchError::Csv(format!("bad field {field:?}")))
}

/// Inverse of [`to_csv`].
pub fn from_csv(text: &str) -> Result<BenchReport, BenchError> {
    let mut version = None;
    let mut seed = None;
    let mut failed = None;
    let mut body = String::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            match rest.split_once(' ') {
                Some(("version", v)) => version = Some(v.to_string()),
                Some(("seed", v)) => seed = v.parse().ok(),
                Some(("failed", v)) => failed = v.parse().ok(),
                _ => return Err(BenchError::Csv(format!("unknown comment {line:?}"))),
            }
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let (version, seed, failed) = match (version, seed, failed) {
        (Some(v), Some(s), Some(f)) => (v, s, f),
        _ => return Err(BenchError::Csv("missing environment comments".to_string())),
    };

    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let mut instances: Vec<InstanceReport> = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| BenchError::Csv(e.to_string()))?;
        if record.len() != 17 {
            return Err(BenchError::Csv(format!("expected 17 columns, got {}", record.len())));
        }
        let field = |i: usize| record.get(i).unwrap_or("");
        let name = field(0).to_string();
        if instances.last().map(|i: &InstanceReport| &i.name) != Some(&name) {
            let published = {
                let p = Published {
                    bonato: csv_opt(field(13))?,
                    gaflss: csv_opt(field(14))?,
                    bgp: csv_opt(field(15))?,
                    bgp_plus: csv_opt(field(16))?,
                };
                (p != Published::default()).then_some(p)
            };
            instances.push(InstanceReport {
                name,
                vertices: csv_opt(field(2))?,
                edges: csv_opt(field(3))?,
                flagged: field(10) == "true",
                verified: field(9) == "true",
                error: (!field(11).is_empty()).then(|| field(11).to_string()),
                published,
                algorithms: Vec::new(),
            });
        }
        if !field(1).is_empty() {
            let inst = instances.last_mut().expect("just pushed");
            inst.algorithms.push(AlgoReport {
                algorithm: field(1).to_string(),
                runs: csv_opt(field(4))?.unwrap_or(0),
                best_length: csv_opt(field(5))?,
                worst_length: csv_opt(field(6))?,
                mean_length: csv_opt(field(7))?,
                wall_time_ms: csv_opt(field(8))?.unwrap_or(0.0),
                error: (!field(12).is_empty()).then(|| field(12).to_string()),
            });
        }
    }
    Ok(BenchReport {
        environment: Environment { version, seed },
        failed,
        instances,
    })
}
