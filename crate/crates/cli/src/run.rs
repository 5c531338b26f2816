//! Execution of a [`CommandPlan`].

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use laplab::exact::ExactSpectrum;
use laplab::lab::{
    check_gn3_deletions, check_gna_deletions, classify_exhaustive, diameter_three_equality_specs,
    diameter_two_equality_specs, enumerate_connected, enumerate_trees, sufficient_condition_witness,
    summarize, verify_bound, verify_gndt_strictness, without_timing, Classification, FamilyIndex,
    GraphFacts, TheoremSummary,
};
use laplab::partitions::{
    check_quotient_containment, parametric_instance, verify_parametric_identity, Partition,
};
use laplab::paths::diameter;
use laplab::spectral::{
    check_cauchy_interlacing, check_complement_duality, check_double_star, check_edge_interlacing,
    doob_tree_bound, real_laplacian, spectra_csv, spectrum, spectrum_record, zero_multiplicity_is_components,
    SpectrumRecord,
};
use laplab::{graph6, make_family, Error, Graph, RatInterval, TheoremId, TheoremReport};
use serde::Serialize;
use serde_json::json;

use crate::plan::{CommandPlan, ExactMode, GraphSource, OutputFormat, Task, Verification};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
    Violation,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Violation => 2,
        }
    }
}

/// What a run produced: exit status, the serialised report, and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            status: Status::Error,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// A command's result in every format it supports, plus violation data.
struct Rendered {
    json: String,
    text: String,
    csv: Option<String>,
    graph6: Option<String>,
    violated: bool,
    /// (file stem, graph6 lines) written under `--certificates`.
    certificates: Vec<(String, Vec<String>)>,
}

impl Rendered {
    fn new(value: &impl Serialize, text: String) -> Self {
        Rendered {
            json: to_json(value),
            text,
            csv: None,
            graph6: None,
            violated: false,
            certificates: Vec::new(),
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

/// Runs the plan. Operational failures become exit status 1 with the
/// originating error text on stderr.
pub fn execute(plan: &CommandPlan) -> Outcome {
    let run = || render(plan);
    let rendered = match plan.jobs {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(run),
            Err(e) => return Outcome::error(e),
        },
        None => run(),
    };
    let rendered = match rendered {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let mut stderr = String::new();
    if let Some(dir) = &plan.certificates {
        match write_certificates(dir, &rendered.certificates) {
            Ok(count) if count > 0 => {
                let _ = writeln!(stderr, "wrote {count} certificate(s) to {}", dir.display());
            }
            Ok(_) => {}
            Err(e) => return Outcome::error(format!("writing certificates to {}: {e}", dir.display())),
        }
    }
    let stdout = match plan.output {
        OutputFormat::Json => rendered.json,
        OutputFormat::Text => rendered.text,
        OutputFormat::Csv => rendered.csv.unwrap_or_default(),
        OutputFormat::Graph6 => rendered.graph6.unwrap_or_default(),
    };
    Outcome {
        status: if rendered.violated { Status::Violation } else { Status::Ok },
        stdout,
        stderr,
    }
}

fn write_certificates(dir: &Path, files: &[(String, Vec<String>)]) -> std::io::Result<usize> {
    fs::create_dir_all(dir)?;
    let mut count = 0;
    for (stem, lines) in files.iter().filter(|f| !f.1.is_empty()) {
        let mut body = lines.join("\n");
        body.push('\n');
        fs::write(dir.join(format!("{stem}.g6")), body)?;
        count += lines.len();
    }
    Ok(count)
}

fn load(source: &GraphSource) -> Result<Graph, String> {
    match source {
        GraphSource::Graph6(s) => graph6::decode(s).map_err(|e| e.to_string()),
        GraphSource::EdgeFile(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?;
            Graph::from_edge_list(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
        GraphSource::Family(spec) => make_family(spec).map_err(|e| e.to_string()),
    }
}

fn render(plan: &CommandPlan) -> Result<Rendered, String> {
    let err = |e: Error| e.to_string();
    match &plan.task {
        Task::Family(spec) => {
            let g = make_family(spec).map_err(err)?;
            Ok(family_output(&spec.to_string(), &g))
        }
        Task::Spectrum { source, interval } => {
            let g = load(source)?;
            Ok(spectrum_output(&g, interval.as_ref(), plan.exact))
        }
        Task::Count { source, interval } => {
            let g = load(source)?;
            let c = count(&g, interval, plan.exact);
            let mut r = Rendered::new(&c, format!("{}\n", c.count));
            r.csv = Some(format!(
                "graph6,interval,count,method\n{},\"{}\",{},{}\n",
                c.graph6, c.interval, c.count, c.method
            ));
            Ok(r)
        }
        Task::Verify(v) => verify(v, plan.timing),
        Task::Enumerate { n, trees } => {
            let graphs = if *trees { enumerate_trees(*n) } else { enumerate_connected(*n) }.map_err(err)?;
            let codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
            let mut r = Rendered::new(
                &json!({"n": n, "trees": trees, "count": codes.len(), "graphs": codes}),
                format!("{}\n", codes.len()),
            );
            r.graph6 = Some(codes.iter().map(|c| format!("{c}\n")).collect());
            Ok(r)
        }
        Task::Classify { n } => {
            let c = classify_exhaustive(*n).map_err(err)?;
            let c = if plan.timing { c } else { without_timing(c) };
            Ok(classification_output(&c))
        }
        Task::Quotient { source, partition } => {
            let g = load(source)?;
            let p = Partition::new(g.order(), partition.clone()).map_err(err)?;
            quotient_output(&g, &p)
        }
        Task::ParametricQuotient { family, params } => {
            let (g, p) = parametric_instance(*family, params).map_err(err)?;
            quotient_output(&g, &p)
        }
    }
}

#[derive(Debug, Serialize)]
struct FamilyOutput {
    spec: String,
    graph6: String,
    n: usize,
    size: usize,
    diameter: Option<usize>,
    edges: Vec<(usize, usize)>,
}

fn family_output(spec: &str, g: &Graph) -> Rendered {
    let out = FamilyOutput {
        spec: spec.to_string(),
        graph6: graph6::encode(g),
        n: g.order(),
        size: g.size(),
        diameter: diameter(g).ok().map(|d| d.diameter),
        edges: g.edges().to_vec(),
    };
    let mut r = Rendered::new(&out, g.to_edge_list());
    r.graph6 = Some(format!("{}\n", out.graph6));
    r.csv = Some(
        std::iter::once("u,v\n".to_string())
            .chain(out.edges.iter().map(|(u, v)| format!("{u},{v}\n")))
            .collect(),
    );
    r
}

#[derive(Debug, Clone, Serialize)]
pub(crate) struct CountOutput {
    graph6: String,
    interval: String,
    count: usize,
    /// "float" or "exact".
    method: &'static str,
    /// An eigenvalue was within tolerance of an endpoint in floating point.
    boundary_warning: bool,
}

fn count(g: &Graph, interval: &RatInterval, mode: ExactMode) -> CountOutput {
    let float = spectrum(g).count(&interval.to_real());
    let (count, method) = if mode == ExactMode::Always || float.boundary_warning {
        (ExactSpectrum::of(g).count(interval), "exact")
    } else {
        (float.count, "float")
    };
    CountOutput {
        graph6: graph6::encode(g),
        interval: interval.to_string(),
        count,
        method,
        boundary_warning: float.boundary_warning,
    }
}

#[derive(Debug, Serialize)]
struct SpectrumOutput {
    #[serde(flatten)]
    record: SpectrumRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    char_poly: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interval_count: Option<CountOutput>,
}

fn spectrum_output(g: &Graph, interval: Option<&RatInterval>, mode: ExactMode) -> Rendered {
    let s = spectrum(g);
    let out = SpectrumOutput {
        record: spectrum_record(g, &s, None),
        char_poly: (mode == ExactMode::Always).then(|| ExactSpectrum::of(g).char_poly.to_decimal_strings()),
        interval_count: interval.map(|i| count(g, i, mode)),
    };
    let mut text: String = out.record.eigenvalues.iter().map(|v| format!("{v:.9}\n")).collect();
    if let Some(c) = &out.interval_count {
        let _ = writeln!(text, "count {} = {} ({})", c.interval, c.count, c.method);
    }
    let mut r = Rendered::new(&out, text);
    r.csv = Some(spectra_csv([(g, &s)]));
    r
}

fn report_text(r: &TheoremReport) -> String {
    let verdict = if r.undetermined {
        "undetermined"
    } else if !r.hypothesis_met {
        "hypothesis not met"
    } else if r.conclusion_holds {
        "holds"
    } else {
        "VIOLATED"
    };
    let mut s = format!(
        "{} {}: {verdict}{}\n",
        r.theorem_id,
        r.instance,
        if r.exact_verified { " (exact)" } else { "" }
    );
    for note in &r.notes {
        let _ = writeln!(s, "  note: {note}");
    }
    s
}

fn summary_text(s: &TheoremSummary) -> String {
    let mut t = format!(
        "{} n={}: checked {}, violations {}\n  hypothesis met {}, equality cases {}",
        s.theorem_id,
        s.n,
        s.checked,
        s.violations.len(),
        s.hypothesis_met,
        s.equality_graphs.len()
    );
    if s.undetermined > 0 {
        let _ = write!(t, ", undetermined {}", s.undetermined);
    }
    if let Some(ms) = s.runtime_ms {
        let _ = write!(t, ", {ms} ms");
    }
    t.push('\n');
    for v in &s.violations {
        let _ = writeln!(t, "  violation: {v}");
    }
    for note in &s.notes {
        let _ = writeln!(t, "  note: {note}");
    }
    t
}

fn certificate_lines(r: &TheoremReport) -> Vec<String> {
    if graph6::decode(&r.instance).is_ok() {
        return vec![r.instance.clone()];
    }
    match r.witness.get("graph6").and_then(|v| v.as_str()) {
        Some(g6) => vec![g6.to_string()],
        None => Vec::new(),
    }
}

fn reports_output(reports: Vec<TheoremReport>) -> Rendered {
    let text = reports.iter().map(report_text).collect();
    let mut r = if reports.len() == 1 {
        Rendered::new(&reports[0], text)
    } else {
        Rendered::new(&reports, text)
    };
    r.violated = reports.iter().any(TheoremReport::is_violation);
    for rep in reports.iter().filter(|rep| rep.is_violation()) {
        r.certificates.push((rep.theorem_id.code().to_string(), certificate_lines(rep)));
    }
    r
}

fn summary_output(s: &TheoremSummary) -> Rendered {
    let mut r = Rendered::new(s, summary_text(s));
    r.violated = !s.passed();
    r.certificates
        .push((format!("{}_n{}", s.theorem_id.code(), s.n), s.violations.clone()));
    r
}

fn verify(v: &Verification, timing: bool) -> Result<Rendered, String> {
    let err = |e: Error| e.to_string();
    let reports = match v {
        Verification::Graph {
            theorem,
            source,
            edge,
            keep,
            partition,
        } => {
            let g = load(source)?;
            vec![verify_graph(*theorem, &g, *edge, keep.as_deref(), partition.as_deref()).map_err(err)?]
        }
        Verification::Exhaustive { theorem, n } => {
            let mut s = exhaustive(*theorem, *n).map_err(err)?;
            if !timing {
                s.runtime_ms = None;
            }
            return Ok(summary_output(&s));
        }
        Verification::Strictness { n, d, t } => vec![verify_gndt_strictness(*n, *d, *t).map_err(err)?],
        Verification::Gn3Deletions { n } => check_gn3_deletions(*n).map_err(err)?,
        Verification::GnaDeletions { n, a } => vec![check_gna_deletions(*n, *a).map_err(err)?],
        Verification::Parametric { family, params } => {
            vec![verify_parametric_identity(*family, params).map_err(err)?]
        }
    };
    Ok(reports_output(reports))
}

fn verify_graph(
    id: TheoremId,
    g: &Graph,
    edge: Option<(usize, usize)>,
    keep: Option<&[usize]>,
    partition: Option<&[Vec<usize>]>,
) -> laplab::Result<TheoremReport> {
    use TheoremId::*;
    match id {
        AboveTwoLowerBound | HighTailBound | ShiftTwoBound | ShiftOneBound | ClassMembership => verify_bound(g, id),
        SufficientCondition => sufficient_condition_witness(g),
        DiameterTwoEquality | DiameterThreeEquality => equality_case(id, g),
        ComplementDuality => Ok(check_complement_duality(g)),
        ZeroMultiplicity => Ok(zero_multiplicity_is_components(g)),
        DoobTreeBound => Ok(doob_tree_bound(g)),
        DoubleStarSpectrum => Ok(check_double_star(g)),
        EdgeInterlacing => check_edge_interlacing(g, edge.expect("validated")),
        CauchyInterlacing => check_cauchy_interlacing(&real_laplacian(g), keep.expect("validated")),
        QuotientContainment => {
            let p = Partition::new(g.order(), partition.expect("validated").to_vec())?;
            check_quotient_containment(g, &p)
        }
        _ => Err(Error::Parameter(format!("{id} is not a per-graph statement"))),
    }
}

/// The fixed-diameter bound with its equality characterisation on one graph.
fn equality_case(id: TheoremId, g: &Graph) -> laplab::Result<TheoremReport> {
    let f = GraphFacts::new(g)?;
    let (n, d) = (f.n as i64, f.d as i64);
    let (want_d, lo, bound, specs) = if id == TheoremId::DiameterTwoEquality {
        (2, n - 1, n - 2, diameter_two_equality_specs(f.n))
    } else {
        (3, n - 2, n - 3, diameter_three_equality_specs(f.n))
    };
    let report = TheoremReport::new(id, f.graph6.clone());
    if d != want_d || (want_d == 3 && n < 5) {
        return Ok(report.hypothesis_not_met(format!("requires diameter {want_d}, got {d}")));
    }
    let count = f.m(lo, n, true, true) as i64;
    let family = FamilyIndex::new(&specs).get(g).map(|s| s.to_string());
    let equal = count == bound;
    let mut report = report.with_witness(json!({
        "interval": format!("[{lo},{n}]"),
        "count": count,
        "bound": bound,
        "equality": equal,
        "listed_family": family,
    }));
    report.conclusion_holds = count <= bound && equal == family.is_some();
    report.exact_verified = true;
    Ok(report)
}

fn exhaustive(id: TheoremId, n: usize) -> laplab::Result<TheoremSummary> {
    use rayon::prelude::*;
    let per_graph = |graphs: &[Graph], check: fn(&Graph) -> TheoremReport| -> Vec<TheoremReport> {
        graphs.par_iter().map(check).collect()
    };
    match id {
        TheoremId::DoobTreeBound => Ok(summarize(id, n, &per_graph(&enumerate_trees(n)?, doob_tree_bound))),
        TheoremId::ComplementDuality => Ok(summarize(
            id,
            n,
            &per_graph(&enumerate_connected(n)?, check_complement_duality),
        )),
        TheoremId::ZeroMultiplicity => Ok(summarize(
            id,
            n,
            &per_graph(&enumerate_connected(n)?, zero_multiplicity_is_components),
        )),
        _ => {
            let c = classify_exhaustive(n)?;
            c.summary(id)
                .cloned()
                .ok_or_else(|| Error::Parameter(format!("{id} is not part of the exhaustive classification")))
        }
    }
}

fn classification_output(c: &Classification) -> Rendered {
    let mut text = format!("n={}: {} connected graphs\n", c.n, c.total_graphs);
    let _ = writeln!(text, "{:>3} {:>8} {:>8} {:>9}", "d", "graphs", "class G", "equality");
    for row in &c.rows {
        let _ = writeln!(
            text,
            "{:>3} {:>8} {:>8} {:>9}",
            row.d,
            row.total_graphs,
            row.members_of_class_g,
            row.equality_graphs.len()
        );
    }
    for s in &c.summaries {
        text.push_str(&summary_text(s));
    }
    let mut r = Rendered::new(c, text);
    r.csv = Some(c.to_csv());
    r.violated = !c.passed();
    for s in &c.summaries {
        r.certificates
            .push((format!("{}_n{}", s.theorem_id.code(), s.n), s.violations.clone()));
    }
    r
}

fn quotient_output(g: &Graph, p: &Partition) -> Result<Rendered, String> {
    let report = check_quotient_containment(g, p).map_err(|e| e.to_string())?;
    let out = json!({
        "graph6": graph6::encode(g),
        "partition": p.blocks(),
        "equitable": report.hypothesis_met,
        "containment": report,
    });
    let mut text = format!("{}\n", graph6::encode(g));
    if let Some(rows) = report.witness.get("quotient").and_then(|q| q.as_array()) {
        for row in rows {
            let cells: Vec<&str> = row.as_array().into_iter().flatten().filter_map(|c| c.as_str()).collect();
            let _ = writeln!(text, "  {}", cells.join(" "));
        }
    }
    text.push_str(&report_text(&report));
    let mut r = Rendered::new(&out, text);
    r.violated = report.is_violation();
    Ok(r)
}
