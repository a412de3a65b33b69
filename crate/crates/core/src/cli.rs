//! The `edgering` command line: load a graph, run the requested stages and
//! print the report as JSON (default), CSV or indented text.
//!
//! Exit codes: 0 success, 2 invariant violation, 3 input error, 4 resource
//! guard tripped.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::complex::HVector;
use crate::cone::{alpha_vector, canonical_generators_with, CanonicalReport, EnumerationOptions};
use crate::error::{Error, Result};
use crate::graph::{build_family, family_from_parts, is_bipartite, satisfies_odd_cycle_condition, Family, GnLabels, Graph};
use crate::groebner::{is_groebner_basis, MonomialOrder};
use crate::hilbert::{
    closed_form_h, family_walk_length, h_polynomial_pipeline, hilbert_function_value, semigroup_count, HilbertSource,
    DEFAULT_SEMIGROUP_CAP,
    PipelineOptions, PipelineReport,
};

/// Environment variable holding the default for `--threads`.
pub const THREADS_ENV: &str = "EDGERING_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "edgering", version, about = "Invariants of edge rings of finite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Full pipeline: generators, Gröbner basis, complex, h-vector, canonical module, verdicts.
    Analyze,
    /// h-vector from every available source, with Hilbert-function spot checks.
    Hvector,
    /// Toric generators, reduced Gröbner basis and initial ideal.
    Groebner,
    /// Initial complex: facets, f-vector, shelling.
    Complex,
    /// Minimal generators of the canonical module.
    Canonical,
    /// Gorenstein and almost Gorenstein verdicts.
    Verdicts,
    /// Built-in graph families.
    Families,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Built-in family: `gn`, `kmn` or `km` (or the compact `gn:4`, `kmn:2,3`, `km:5`).
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Family size parameter (`G_n`, `K_n`, second side of `K_{m,n}`).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// First side of `K_{m,n}`, or the size of `K_m`.
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Graph JSON file: `{"num_vertices": .., "edges": [[u, v], ..]}`.
    #[arg(long, global = true, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    /// Longest even closed walk enumerated for the toric generators.
    #[arg(long, global = true)]
    pub max_walk_len: Option<usize>,
    /// Degree bound for the canonical module search (default: number of vertices).
    #[arg(long, global = true)]
    pub max_degree: Option<u64>,
    /// Edge variables separated by commas, smallest first.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Drop cone points from the listed facets of the initial complex.
    #[arg(long, global = true)]
    pub suppress_cone_points: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 1)]
    pub threads: usize,
    /// Compare the Hilbert function with a semigroup count up to this degree.
    #[arg(long, global = true)]
    pub check_degrees: Option<usize>,
    /// Include per-stage wall-clock times (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) => EXIT_INVARIANT,
        Error::ResourceGuard(_) => EXIT_RESOURCE,
        Error::InvalidGraph(_)
        | Error::InvalidParameter(_)
        | Error::InvalidWalk(_)
        | Error::Unsupported(_)
        | Error::Io(_) => EXIT_INPUT,
    }
}

/// Entry point used by the binary.
pub fn main_exit_code() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`; errors go to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, &cli.opts).and_then(|v| render(&v, cli.opts.format)) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs one command and returns its report as a JSON value (object keys
/// sorted, so output is byte-stable).
pub fn execute(command: Command, opts: &Options) -> Result<Value> {
    if opts.threads == 0 {
        return Err(Error::InvalidParameter("--threads must be at least 1".into()));
    }
    match command {
        Command::Families => to_value(families_report(opts)?),
        Command::Groebner => groebner_report(&load(opts)?, opts),
        Command::Complex => complex_report(&load(opts)?, opts),
        Command::Hvector => {
            let loaded = load(opts)?;
            let h = h_stage(&loaded, opts)?;
            to_value(HvectorReport::from_stage(&h))
        }
        Command::Canonical => {
            let loaded = load(opts)?;
            let h = h_stage(&loaded, opts)?;
            to_value(canonical_stage(&loaded, &h.pipeline, opts)?)
        }
        Command::Verdicts => {
            let loaded = load(opts)?;
            let h = h_stage(&loaded, opts)?;
            let c = canonical_stage(&loaded, &h.pipeline, opts)?;
            to_value(VerdictReport::from(&c.report))
        }
        Command::Analyze => analyze(&load(opts)?, opts),
    }
}

fn to_value<T: Serialize>(t: T) -> Result<Value> {
    serde_json::to_value(t).map_err(|e| Error::InvariantViolation(format!("report serialization failed: {e}")))
}

struct Loaded {
    graph: Graph,
    family: Option<Family>,
    labels: Option<GnLabels>,
}

fn parse_family(opts: &Options) -> Result<Option<Family>> {
    let Some(name) = &opts.family else { return Ok(None) };
    if name.contains(':') {
        return name.parse().map(Some);
    }
    let missing = |flag: &str| Error::InvalidParameter(format!("--family {name} needs {flag}"));
    let params = match name.to_ascii_lowercase().as_str() {
        "gn" => vec![opts.n.ok_or_else(|| missing("--n"))?],
        "kmn" | "complete_bipartite" => vec![opts.m.ok_or_else(|| missing("--m"))?, opts.n.ok_or_else(|| missing("--n"))?],
        "km" | "complete" => vec![opts.m.or(opts.n).ok_or_else(|| missing("--m or --n"))?],
        _ => vec![],
    };
    family_from_parts(name, &params).map(Some)
}

fn load(opts: &Options) -> Result<Loaded> {
    if let Some(family) = parse_family(opts)? {
        let (graph, labels) = build_family(family)?;
        return Ok(Loaded {
            graph,
            family: Some(family),
            labels,
        });
    }
    let Some(path) = &opts.input else {
        return Err(Error::InvalidParameter("give either --family or --input".into()));
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(Loaded {
        graph: Graph::from_json(&text)?,
        family: None,
        labels: None,
    })
}

fn pipeline_options(loaded: &Loaded, opts: &Options) -> Result<PipelineOptions> {
    let g = &loaded.graph;
    let mut p = match loaded.family {
        Some(f) => PipelineOptions::for_family(f),
        None => PipelineOptions::for_graph(g),
    };
    if let Some(len) = opts.max_walk_len {
        p.max_walk_length = len;
        p.bound_is_complete = len >= 2 * g.num_vertices() || loaded.family.is_some_and(|f| len >= family_walk_length(f));
    }
    p.order = parse_order(g, opts)?;
    Ok(p)
}

fn parse_order(g: &Graph, opts: &Options) -> Result<Option<MonomialOrder>> {
    opts.order
        .as_deref()
        .map(|s| {
            let names: Vec<&str> = s.split(',').collect();
            MonomialOrder::from_names(&names, &g.edge_labels())
        })
        .transpose()
}

#[derive(Debug, Clone, Serialize)]
struct GraphSummary {
    family: Option<String>,
    num_vertices: usize,
    num_edges: usize,
    vertex_labels: Vec<String>,
    edges: Vec<String>,
    bipartite: bool,
    odd_cycle_condition: bool,
}

impl GraphSummary {
    fn new(loaded: &Loaded) -> Self {
        let g = &loaded.graph;
        GraphSummary {
            family: loaded.family.map(|f| f.to_string()),
            num_vertices: g.num_vertices(),
            num_edges: g.num_edges(),
            vertex_labels: (0..g.num_vertices()).map(|v| g.vertex_label(v)).collect(),
            edges: (0..g.num_edges())
                .map(|k| {
                    let [u, v] = g.edges()[k];
                    format!("{}={}-{}", g.edge_label(k), g.vertex_label(u), g.vertex_label(v))
                })
                .collect(),
            bipartite: is_bipartite(g).is_bipartite(),
            odd_cycle_condition: satisfies_odd_cycle_condition(g).holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct FamilyEntry {
    name: &'static str,
    usage: &'static str,
    description: &'static str,
    walk_length_bound: usize,
    closed_form: &'static str,
}

#[derive(Debug, Clone, Serialize)]
struct FamilyInstance {
    family: String,
    num_vertices: usize,
    num_edges: usize,
    closed_form_h: HVector,
}

#[derive(Debug, Clone, Serialize)]
struct FamiliesReport {
    families: Vec<FamilyEntry>,
    selected: Option<FamilyInstance>,
}

fn families_report(opts: &Options) -> Result<FamiliesReport> {
    let families = vec![
        FamilyEntry {
            name: "gn",
            usage: "--family gn --n N",
            description: "N triangles glued at one hub vertex (N >= 2)",
            walk_length_bound: family_walk_length(Family::Gn { n: 2 }),
            closed_form: "(1+t)^N - t",
        },
        FamilyEntry {
            name: "kmn",
            usage: "--family kmn --m M --n N",
            description: "complete bipartite graph K_{M,N}",
            walk_length_bound: family_walk_length(Family::CompleteBipartite { m: 2, n: 2 }),
            closed_form: "h_i = C(M-1,i) C(N-1,i)",
        },
        FamilyEntry {
            name: "km",
            usage: "--family km --m M",
            description: "complete graph K_M (M >= 3)",
            walk_length_bound: family_walk_length(Family::Complete { m: 3 }),
            closed_form: "1 + M(M-3)/2 t + sum_{i>=2} C(M,2i) t^i",
        },
    ];
    let selected = match parse_family(opts)? {
        Some(f) => {
            let (g, _) = build_family(f)?;
            Some(FamilyInstance {
                family: f.to_string(),
                num_vertices: g.num_vertices(),
                num_edges: g.num_edges(),
                closed_form_h: closed_form_h(f)?,
            })
        }
        None => None,
    };
    Ok(FamiliesReport { families, selected })
}

fn render_binomials(g: &Graph, bs: &[crate::toric::Binomial]) -> Vec<String> {
    let labels = g.edge_labels();
    bs.iter().map(|b| b.render(&labels)).collect()
}

fn groebner_report(loaded: &Loaded, opts: &Options) -> Result<Value> {
    #[derive(Serialize)]
    struct Report {
        graph: GraphSummary,
        order: Vec<String>,
        max_walk_length: usize,
        generators: Vec<String>,
        groebner_basis: Vec<String>,
        initial_ideal: Vec<String>,
        initial_ideal_squarefree: bool,
    }
    let g = &loaded.graph;
    let popts = pipeline_options(loaded, opts)?;
    let order = popts.order.clone().unwrap_or_else(|| MonomialOrder::identity(g.num_edges()));
    let generators = crate::toric::toric_generators_guarded(g, popts.max_walk_length, popts.walk_step_limit)?;
    let gb = crate::groebner::buchberger(&generators, &order)?;
    if let Some(fail) = is_groebner_basis(&gb, &order)? {
        return Err(Error::InvariantViolation(format!(
            "Buchberger output fails the criterion at pair ({}, {})",
            fail.i, fail.j
        )));
    }
    let ideal = crate::groebner::initial_ideal(&gb, &order)?;
    let labels = g.edge_labels();
    to_value(Report {
        graph: GraphSummary::new(loaded),
        order: order.priority().iter().map(|&v| labels[v].clone()).collect(),
        max_walk_length: popts.max_walk_length,
        generators: render_binomials(g, &generators),
        groebner_basis: render_binomials(g, &gb),
        initial_ideal: ideal.generators.iter().map(|m| m.render(&labels)).collect(),
        initial_ideal_squarefree: ideal.is_squarefree(),
    })
}

fn complex_report(loaded: &Loaded, opts: &Options) -> Result<Value> {
    #[derive(Serialize)]
    struct Shelling {
        valid: bool,
        failure_step: Option<usize>,
        order: Vec<usize>,
        r_values: Vec<usize>,
    }
    #[derive(Serialize)]
    struct Report {
        graph: GraphSummary,
        num_facets: usize,
        dim: isize,
        cone_points: Vec<String>,
        cone_points_suppressed: bool,
        facets: Vec<Vec<String>>,
        f_vector: Vec<u64>,
        h: HVector,
        shelling: Option<Shelling>,
        warnings: Vec<String>,
    }
    let popts = pipeline_options(loaded, opts)?;
    let r = h_polynomial_pipeline(&loaded.graph, &popts)?;
    let labels = loaded.graph.edge_labels();
    let names = |face: &[usize]| face.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>();
    let facets = if opts.suppress_cone_points {
        r.complex.suppressed_facets()
    } else {
        r.complex.facets()
    };
    to_value(Report {
        graph: GraphSummary::new(loaded),
        num_facets: r.complex.num_facets(),
        dim: r.complex.dim(),
        cone_points: names(&r.complex.cone_points()),
        cone_points_suppressed: opts.suppress_cone_points,
        facets: facets.iter().map(|f| names(f)).collect(),
        f_vector: r.f_vector.clone(),
        h: r.h_from_f.clone(),
        shelling: r.shelling.as_ref().map(|s| Shelling {
            valid: s.valid,
            failure_step: s.failure_step,
            order: s.order.clone(),
            r_values: s.r_values.clone(),
        }),
        warnings: r.warnings.clone(),
    })
}

#[derive(Debug, Clone, Serialize)]
struct SourceEntry {
    source: HilbertSource,
    h: HVector,
}

#[derive(Debug, Clone, Serialize)]
struct HilbertCheck {
    degree: usize,
    hilbert_function: u64,
    semigroup_count: u64,
}

struct HStage {
    pipeline: PipelineReport,
    sources: Vec<SourceEntry>,
    checks: Vec<HilbertCheck>,
}

/// The pipeline plus the closed form (for families) and semigroup spot
/// checks; any disagreement is an invariant violation.
fn h_stage(loaded: &Loaded, opts: &Options) -> Result<HStage> {
    let pipeline = h_polynomial_pipeline(&loaded.graph, &pipeline_options(loaded, opts)?)?;
    let mut sources: Vec<SourceEntry> = pipeline
        .hilbert_data()
        .into_iter()
        .map(|d| SourceEntry { source: d.source, h: d.h })
        .collect();
    if let Some(f) = loaded.family {
        let closed = closed_form_h(f)?;
        if closed != *pipeline.h() {
            return Err(Error::InvariantViolation(format!(
                "closed-form h {:?} differs from computed h {:?}",
                closed.trimmed(),
                pipeline.h().trimmed()
            )));
        }
        sources.push(SourceEntry {
            source: HilbertSource::ClosedForm,
            h: closed,
        });
    }
    let mut checks = Vec::new();
    let degrees = opts.check_degrees.map_or(0, |d| d + 1);
    // Refuse before counting anything if the top layer would exceed the cap.
    if let Some(top) = opts.check_degrees {
        let size = hilbert_function_value(pipeline.h(), top);
        if size > DEFAULT_SEMIGROUP_CAP as u128 {
            return Err(Error::ResourceGuard(format!(
                "degree {top} of the semigroup has {size} elements, above the cap of {DEFAULT_SEMIGROUP_CAP}"
            )));
        }
    }
    for degree in 0..degrees {
        let hf = u64::try_from(hilbert_function_value(pipeline.h(), degree))
            .map_err(|_| Error::ResourceGuard(format!("Hilbert function overflows at degree {degree}")))?;
        let count = semigroup_count(&loaded.graph, degree)?;
        if hf != count {
            return Err(Error::InvariantViolation(format!(
                "H({degree}) = {hf} from the h-vector but the semigroup has {count} elements"
            )));
        }
        checks.push(HilbertCheck {
            degree,
            hilbert_function: hf,
            semigroup_count: count,
        });
    }
    Ok(HStage {
        pipeline,
        sources,
        checks,
    })
}

#[derive(Debug, Clone, Serialize)]
struct HvectorReport {
    h: HVector,
    dim: usize,
    sources_agree: bool,
    hilbert_checks: Vec<HilbertCheck>,
    sources: Vec<SourceEntry>,
    warnings: Vec<String>,
}

impl HvectorReport {
    fn from_stage(s: &HStage) -> Self {
        HvectorReport {
            h: s.pipeline.h().clone(),
            dim: s.pipeline.dim,
            sources_agree: true,
            hilbert_checks: s.checks.clone(),
            sources: s.sources.clone(),
            warnings: s.pipeline.warnings.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct CanonicalOutput {
    #[serde(flatten)]
    report: CanonicalReport,
    /// For `G_n`: whether the generators are exactly the points `alpha_j`.
    alpha_witnesses_match: Option<bool>,
}

fn canonical_stage(loaded: &Loaded, pipeline: &PipelineReport, opts: &Options) -> Result<CanonicalOutput> {
    let g = &loaded.graph;
    let max_degree = opts.max_degree.unwrap_or(g.num_vertices() as u64);
    let enum_opts = EnumerationOptions {
        threads: opts.threads,
        ..Default::default()
    };
    let mut report = canonical_generators_with(g, pipeline.h(), max_degree, &enum_opts)?;
    let alpha_witnesses_match = loaded.labels.as_ref().map(|labels| {
        let mut alphas: Vec<Vec<i64>> = (1..labels.n).map(|j| alpha_vector(labels, j)).collect();
        let mut found: Vec<Vec<i64>> = report.generators.iter().map(|p| p.coords.clone()).collect();
        alphas.sort();
        found.sort();
        alphas == found
    });
    if alpha_witnesses_match == Some(false) {
        report
            .notes
            .push("canonical generators differ from the alpha_j witnesses".into());
    }
    Ok(CanonicalOutput {
        report,
        alpha_witnesses_match,
    })
}

#[derive(Debug, Clone, Serialize)]
struct VerdictReport {
    gorenstein: bool,
    almost_gorenstein: bool,
    cm_type: usize,
    e_tilde: i64,
    provisional: bool,
}

impl From<&CanonicalReport> for VerdictReport {
    fn from(r: &CanonicalReport) -> Self {
        VerdictReport {
            gorenstein: r.verdicts.gorenstein,
            almost_gorenstein: r.verdicts.almost_gorenstein,
            cm_type: r.cm_type,
            e_tilde: r.e_tilde,
            provisional: r.verdicts.provisional,
        }
    }
}

fn analyze(loaded: &Loaded, opts: &Options) -> Result<Value> {
    #[derive(Serialize)]
    struct Report {
        graph: GraphSummary,
        generator_count: usize,
        groebner_basis_size: usize,
        initial_ideal: Vec<String>,
        facet_count: usize,
        h: HVector,
        dim: usize,
        sources_agree: bool,
        h_sources: Vec<SourceEntry>,
        hilbert_checks: Vec<HilbertCheck>,
        canonical: Option<CanonicalOutput>,
        verdicts: Option<VerdictReport>,
        warnings: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        timings_us: Option<BTreeMap<&'static str, u64>>,
    }
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let mut opts = opts.clone();
    opts.check_degrees = opts.check_degrees.or(Some(2));
    let h = h_stage(loaded, &opts)?;
    timings.insert("h_vector", start.elapsed().as_micros() as u64);

    let g = &loaded.graph;
    let mut warnings = h.pipeline.warnings.clone();
    let start = Instant::now();
    let canonical = if is_bipartite(g).is_bipartite() {
        warnings.push("bipartite graph: canonical module computation skipped".into());
        None
    } else if !satisfies_odd_cycle_condition(g).holds() {
        warnings.push("odd cycle condition fails: canonical module computation skipped".into());
        None
    } else {
        Some(canonical_stage(loaded, &h.pipeline, &opts)?)
    };
    timings.insert("canonical", start.elapsed().as_micros() as u64);

    let labels = g.edge_labels();
    to_value(Report {
        graph: GraphSummary::new(loaded),
        generator_count: h.pipeline.generators.len(),
        groebner_basis_size: h.pipeline.groebner_basis.len(),
        initial_ideal: h.pipeline.initial_ideal.generators.iter().map(|m| m.render(&labels)).collect(),
        facet_count: h.pipeline.complex.num_facets(),
        h: h.pipeline.h().clone(),
        dim: h.pipeline.dim,
        sources_agree: true,
        h_sources: h.sources.clone(),
        hilbert_checks: h.checks.clone(),
        verdicts: canonical.as_ref().map(|c| VerdictReport::from(&c.report)),
        canonical,
        warnings,
        timings_us: opts.timings.then_some(timings),
    })
}

/// Renders a report value in the requested format.
pub fn render(v: &Value, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v)
                .map_err(|e| Error::InvariantViolation(format!("report serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(["key", "value"]).map_err(io)?;
            for (k, val) in rows {
                w.write_record([k, val]).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
        Format::Pretty => {
            let mut s = String::new();
            pretty(v, 0, &mut s);
            Ok(s)
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(items.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

/// One `(dotted.path, value)` row per scalar; arrays of scalars become one
/// space-separated cell.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, x)| flatten(&join(k), x, rows)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, rows)),
        _ => unreachable!("scalars handled above"),
    }
}

fn pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        pretty(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        pretty(x, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
