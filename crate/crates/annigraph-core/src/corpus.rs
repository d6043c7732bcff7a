//! The built-in corpus of classified rings, the verification engine that
//! recomputes every claim, and deterministic report output.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::catalog::{planar_local_catalog, toroidal_local_catalog};
use crate::classify::predict_classification;
use crate::family::enumerate_family;
use crate::graph::{annihilator_graph, graph_stats, recognize_shape, Graph, GraphStats};
use crate::parse::{elaborate_str, parse_ring_expr};
use crate::ring::RingError;
use crate::topology::{
    find_subdivision, genus_lower_bound, min_genus, CompleteTarget, GenusBudget, MinGenusOutcome,
    SubdivisionOutcome,
};

/// What the classification asserts about one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub planar: bool,
    pub toroidal: bool,
    /// Exact genus when known; `None` together with both flags false means
    /// "at least 2".
    pub genus: Option<u32>,
    /// Optional shape assertion: `"K6"`, `"K2,3"`, or `"K3,6+C3"`.
    pub shape: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub expr: String,
    pub expected: Expected,
    pub source: String,
}

/// Structural validity of a corpus entry: the expression parses, the flags
/// are consistent, and an explicit genus matches the flags.
pub fn validate_entry(e: &CorpusEntry) -> Result<(), String> {
    parse_ring_expr(&e.expr).map_err(|err| format!("{}: {err}", e.expr))?;
    if e.expected.toroidal && e.expected.planar {
        return Err(format!("{}: toroidal entries cannot be planar", e.expr));
    }
    if let Some(g) = e.expected.genus {
        if (g == 0) != e.expected.planar {
            return Err(format!("{}: genus 0 must match the planar flag", e.expr));
        }
        if (g == 1) != e.expected.toroidal {
            return Err(format!("{}: genus 1 must match the toroidal flag", e.expr));
        }
    }
    Ok(())
}

fn entry(
    expr: &str,
    planar: bool,
    toroidal: bool,
    genus: Option<u32>,
    shape: Option<&str>,
    source: &str,
) -> CorpusEntry {
    CorpusEntry {
        expr: expr.to_string(),
        expected: Expected {
            planar,
            toroidal,
            genus,
            shape: shape.map(str::to_string),
        },
        source: source.to_string(),
    }
}

fn planar(expr: &str, shape: Option<&str>, source: &str) -> CorpusEntry {
    entry(expr, true, false, Some(0), shape, source)
}

fn toroidal(expr: &str, shape: Option<&str>, source: &str) -> CorpusEntry {
    entry(expr, false, true, Some(1), shape, source)
}

/// The built-in corpus: the finite planar classification (with the field
/// families spot-instantiated at small orders), the toroidal classification,
/// and the negative witnesses just beyond it.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    // local rings with planar annihilator graphs
    let planar_shape: &[(&str, &str)] = &[
        ("Z4", "K1"),
        ("Z2[x]/(x^2)", "K1"),
        ("Z9", "K2"),
        ("Z3[x]/(x^2)", "K2"),
        ("Z8", "K3"),
        ("Z2[x]/(x^3)", "K3"),
        ("Z4[x]/(x^2 - 2, 2*x)", "K3"),
        ("Z2[x,y]/(x^2, x*y, y^2)", "K3"),
        ("Z4[x]/(2*x, x^2)", "K3"),
        ("Z2[a,x]/(a^2 + a + 1, x^2)", "K3"),
        ("Z4[x]/(x^2 + x + 1)", "K3"),
        ("Z25", "K4"),
        ("Z5[x]/(x^2)", "K4"),
    ];
    for (expr, shape) in planar_shape {
        out.push(planar(
            expr,
            Some(shape),
            "planar classification: local ring",
        ));
    }
    debug_assert_eq!(planar_shape.len(), planar_local_catalog().len());

    // the two infinite planar families, spot-instantiated
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let field = if q.is_power_of_two() || q == 9 {
            format!("F{q}")
        } else {
            format!("Z{q}")
        };
        out.push(planar(
            &format!("Z2 x {field}"),
            Some(&format!("K1,{}", q - 1)),
            "planar classification: Z2 x field family",
        ));
        out.push(planar(
            &format!("Z3 x {field}"),
            Some(&format!("K2,{}", q - 1)),
            "planar classification: Z3 x field family",
        ));
    }

    out.push(planar(
        "Z2 x Z4",
        Some("K2,3"),
        "planar classification: non-reduced pair",
    ));
    out.push(planar(
        "Z2 x Z2[x]/(x^2)",
        Some("K2,3"),
        "planar classification: non-reduced pair",
    ));
    out.push(planar(
        "Z2 x Z2 x Z2",
        None,
        "planar classification: three factors",
    ));

    // toroidal reduced rings
    out.push(toroidal(
        "F7 x F4",
        Some("K3,6"),
        "toroidal classification: field pair",
    ));
    out.push(toroidal(
        "F5 x F5",
        Some("K4,4"),
        "toroidal classification: field pair",
    ));
    out.push(toroidal(
        "F5 x F4",
        Some("K3,4"),
        "toroidal classification: field pair",
    ));
    out.push(toroidal(
        "F4 x F4",
        Some("K3,3"),
        "toroidal classification: field pair",
    ));
    out.push(toroidal(
        "Z2 x Z2 x Z3",
        None,
        "toroidal classification: three factors",
    ));

    // toroidal non-reduced pairs
    out.push(toroidal(
        "Z4 x Z3",
        None,
        "toroidal classification: pair with F3",
    ));
    out.push(toroidal(
        "Z2[x]/(x^2) x Z3",
        None,
        "toroidal classification: pair with F3",
    ));

    // the 22 local rings with |m| in {7, 8}
    for expr in toroidal_local_catalog() {
        let shape = if expr == "Z49" || expr == "Z7[x]/(x^2)" {
            "K6"
        } else {
            "K7"
        };
        out.push(toroidal(
            expr,
            Some(shape),
            "toroidal classification: local catalog (|m| in {7,8})",
        ));
    }

    // negative witnesses
    out.push(entry(
        "Z2 x Z2 x Z2 x Z2",
        false,
        false,
        None,
        None,
        "negative witness: four factors are never planar",
    ));
    out.push(entry(
        "Z4 x F4",
        false,
        false,
        Some(2),
        Some("K3,6+C3"),
        "negative witness: just outside the toroidal pairs",
    ));
    out.push(entry(
        "Z4 x Z2",
        true,
        false,
        Some(0),
        Some("K2,3"),
        "planar witness with a recognized shape",
    ));

    debug_assert!(out.iter().all(|e| validate_entry(e).is_ok()));
    out
}

/// Shape assertions: `K<n>`, `K<m>,<n>`, or `K<m>,<n>+C3` (complete
/// bipartite with a triangle inside the larger part).
pub fn match_shape(g: &Graph, spec: &str) -> Result<bool, String> {
    let (body, with_triangle) = match spec.strip_suffix("+C3") {
        Some(b) => (b, true),
        None => (spec, false),
    };
    let body = body
        .strip_prefix('K')
        .ok_or_else(|| format!("unknown shape spec {spec}"))?;
    let parts: Vec<&str> = body.split(',').collect();
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.parse().map_err(|_| format!("bad shape spec {spec}")))
        .collect::<Result<_, _>>()?;
    let shape = recognize_shape(g);
    match (nums.as_slice(), with_triangle) {
        ([n], false) => Ok(shape.complete && g.n() == *n),
        ([m, n], false) => Ok(shape.complete_bipartite.map(|(a, b)| (a.len(), b.len()))
            == Some((*m.min(n), *m.max(n)))),
        ([m, n], true) => {
            let Some(parts) = shape.join_parts else {
                return Ok(false);
            };
            if parts.len() != 2 {
                return Ok(false);
            }
            let (small, big) = if parts[0].len() <= parts[1].len() {
                (&parts[0], &parts[1])
            } else {
                (&parts[1], &parts[0])
            };
            if small.len() != *m || big.len() != *n {
                return Ok(false);
            }
            let small_independent = g.induced(small).edge_count() == 0;
            let big_induced = g.induced(big);
            let triangle = big_induced.edge_count() == 3 && {
                let with_deg2: Vec<usize> = (0..big_induced.n())
                    .filter(|&v| big_induced.degree(v) == 2)
                    .collect();
                with_deg2.len() == 3
                    && big_induced.has_edge(with_deg2[0], with_deg2[1])
                    && big_induced.has_edge(with_deg2[0], with_deg2[2])
                    && big_induced.has_edge(with_deg2[1], with_deg2[2])
            };
            Ok(small_independent && triangle)
        }
        _ => Err(format!("unknown shape spec {spec}")),
    }
}

/// Exact-or-bounded genus finding for report rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GenusFinding {
    Exact(usize),
    AtLeast(usize),
    Unknown,
}

impl std::fmt::Display for GenusFinding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenusFinding::Exact(g) => write!(f, "{g}"),
            GenusFinding::AtLeast(g) => write!(f, ">={g}"),
            GenusFinding::Unknown => write!(f, "?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail(String),
    Inconclusive(String),
    Error(String),
}

impl Verdict {
    pub fn word(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail(_) => "FAIL",
            Verdict::Inconclusive(_) => "INCONCLUSIVE",
            Verdict::Error(_) => "ERROR",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(d) | Verdict::Inconclusive(d) | Verdict::Error(d) => Some(d),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EntryResult {
    pub entry: CorpusEntry,
    pub stats: Option<GraphStats>,
    pub genus: GenusFinding,
    pub verdict: Verdict,
    pub runtime: Duration,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub results: Vec<EntryResult>,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub errors: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0 && self.errors == 0 && !self.results.is_empty()
    }
}

/// Evidence that a graph has genus at least 2 without an exhaustive search:
/// the Euler bound, or a subdivision of a genus-2 graph.
fn cheap_genus_two_evidence(g: &Graph, cert_budget: u64) -> Option<(usize, String)> {
    let lb = genus_lower_bound(g);
    if lb >= 2 {
        return Some((lb, format!("Euler-girth lower bound {lb}")));
    }
    let e = g.edge_count();
    let candidates = [
        (CompleteTarget::Kmn(3, 7), 21, "K3,7"),
        (CompleteTarget::Kmn(4, 5), 20, "K4,5"),
        (CompleteTarget::Kn(8), 28, "K8"),
    ];
    for (target, edges, name) in candidates {
        if e < edges {
            continue;
        }
        if let SubdivisionOutcome::Found(w) = find_subdivision(g, target, cert_budget) {
            debug_assert!(crate::topology::validate_subdivision(g, &w));
            return Some((2, format!("subdivision of {name}")));
        }
    }
    None
}

/// Planar / toroidal / at-least-two / inconclusive, with evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GenusClassification {
    Planar,
    Toroidal,
    AtLeastTwo(String),
    Inconclusive,
}

pub fn classify_genus(g: &Graph, node_limit: u64) -> GenusClassification {
    if let Some((_, why)) = cheap_genus_two_evidence(g, 400_000) {
        return GenusClassification::AtLeastTwo(why);
    }
    let budget = GenusBudget {
        max_genus: 1,
        node_limit,
    };
    match min_genus(g, budget) {
        MinGenusOutcome::Exact(e) if e.genus == 0 => GenusClassification::Planar,
        MinGenusOutcome::Exact(e) if e.genus == 1 => GenusClassification::Toroidal,
        MinGenusOutcome::Exact(_) => unreachable!("bounded at 1"),
        MinGenusOutcome::ExceedsMax { .. } => {
            GenusClassification::AtLeastTwo("exhausted every genus-1 rotation system".into())
        }
        MinGenusOutcome::Exhausted { .. } => GenusClassification::Inconclusive,
    }
}

fn verify_one(e: &CorpusEntry, budget: GenusBudget) -> EntryResult {
    let start = Instant::now();
    let fail = |detail: String, stats: Option<GraphStats>, genus: GenusFinding, start: Instant| {
        EntryResult {
            entry: e.clone(),
            stats,
            genus,
            verdict: Verdict::Fail(detail),
            runtime: start.elapsed(),
        }
    };
    let ring = match elaborate_str(&e.expr) {
        Ok(r) => r,
        Err(err) => {
            return EntryResult {
                entry: e.clone(),
                stats: None,
                genus: GenusFinding::Unknown,
                verdict: Verdict::Error(err.to_string()),
                runtime: start.elapsed(),
            }
        }
    };
    let g = match annihilator_graph(&ring) {
        Ok(g) => g,
        Err(err) => {
            return EntryResult {
                entry: e.clone(),
                stats: None,
                genus: GenusFinding::Unknown,
                verdict: Verdict::Error(err.to_string()),
                runtime: start.elapsed(),
            }
        }
    };
    let stats = Some(graph_stats(&g));

    if let Some(shape) = &e.expected.shape {
        match match_shape(&g, shape) {
            Ok(true) => {}
            Ok(false) => {
                return fail(
                    format!("shape mismatch: expected {shape}"),
                    stats,
                    GenusFinding::Unknown,
                    start,
                )
            }
            Err(msg) => {
                return EntryResult {
                    entry: e.clone(),
                    stats,
                    genus: GenusFinding::Unknown,
                    verdict: Verdict::Error(msg),
                    runtime: start.elapsed(),
                }
            }
        }
    }

    let expected_genus = e.expected.genus.map(|g| g as usize).or({
        if e.expected.planar {
            Some(0)
        } else if e.expected.toroidal {
            Some(1)
        } else {
            None
        }
    });

    match expected_genus {
        Some(eg) => {
            let out = min_genus(
                &g,
                GenusBudget {
                    max_genus: eg,
                    node_limit: budget.node_limit,
                },
            );
            match out {
                MinGenusOutcome::Exact(emb) if emb.genus == eg => EntryResult {
                    entry: e.clone(),
                    stats,
                    genus: GenusFinding::Exact(eg),
                    verdict: Verdict::Pass,
                    runtime: start.elapsed(),
                },
                MinGenusOutcome::Exact(emb) => fail(
                    format!("computed genus {} but expected {eg}", emb.genus),
                    stats,
                    GenusFinding::Exact(emb.genus),
                    start,
                ),
                MinGenusOutcome::ExceedsMax { .. } => fail(
                    format!("genus exceeds the expected value {eg}"),
                    stats,
                    GenusFinding::AtLeast(eg + 1),
                    start,
                ),
                MinGenusOutcome::Exhausted { genus_at_least, .. } => EntryResult {
                    entry: e.clone(),
                    stats,
                    genus: GenusFinding::AtLeast(genus_at_least),
                    verdict: Verdict::Inconclusive("genus search budget exhausted".into()),
                    runtime: start.elapsed(),
                },
            }
        }
        None => match classify_genus(&g, budget.node_limit) {
            GenusClassification::AtLeastTwo(_) => EntryResult {
                entry: e.clone(),
                stats,
                genus: GenusFinding::AtLeast(2),
                verdict: Verdict::Pass,
                runtime: start.elapsed(),
            },
            GenusClassification::Planar => fail(
                "computed genus 0 but expected at least 2".into(),
                stats,
                GenusFinding::Exact(0),
                start,
            ),
            GenusClassification::Toroidal => fail(
                "computed genus 1 but expected at least 2".into(),
                stats,
                GenusFinding::Exact(1),
                start,
            ),
            GenusClassification::Inconclusive => EntryResult {
                entry: e.clone(),
                stats,
                genus: GenusFinding::Unknown,
                verdict: Verdict::Inconclusive("genus search budget exhausted".into()),
                runtime: start.elapsed(),
            },
        },
    }
}

/// Verifies every entry in order. Exhausted searches become INCONCLUSIVE,
/// never PASS.
pub fn run_corpus(entries: &[CorpusEntry], budget: GenusBudget) -> VerificationReport {
    let mut results = Vec::with_capacity(entries.len());
    let (mut passed, mut failed, mut inconclusive, mut errors) = (0, 0, 0, 0);
    for e in entries {
        if let Err(msg) = validate_entry(e) {
            errors += 1;
            results.push(EntryResult {
                entry: e.clone(),
                stats: None,
                genus: GenusFinding::Unknown,
                verdict: Verdict::Error(format!("invalid corpus entry: {msg}")),
                runtime: Duration::ZERO,
            });
            continue;
        }
        let r = verify_one(e, budget);
        match &r.verdict {
            Verdict::Pass => passed += 1,
            Verdict::Fail(_) => failed += 1,
            Verdict::Inconclusive(_) => inconclusive += 1,
            Verdict::Error(_) => errors += 1,
        }
        results.push(r);
    }
    VerificationReport {
        results,
        passed,
        failed,
        inconclusive,
        errors,
    }
}

/// One JSON object per line.
pub fn parse_corpus_jsonl(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let entry: CorpusEntry =
            serde_json::from_str(line).map_err(|e| format!("line {}: {e}", i + 1))?;
        out.push(entry);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn expected_display(e: &Expected) -> String {
    match e.genus {
        Some(g) => g.to_string(),
        None => {
            if e.planar {
                "0".into()
            } else if e.toroidal {
                "1".into()
            } else {
                ">=2".into()
            }
        }
    }
}

/// One row per entry in corpus order; deterministic, no timing data.
pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Markdown => {
            let mut out = String::from("# Verification report\n\n");
            out.push_str("| ring | V | E | genus | expected | verdict | source |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for r in &report.results {
                let (v, e) = r
                    .stats
                    .as_ref()
                    .map(|s| (s.order.to_string(), s.size.to_string()))
                    .unwrap_or_else(|| ("-".into(), "-".into()));
                let verdict = match r.verdict.detail() {
                    None => r.verdict.word().to_string(),
                    Some(d) => format!("{} ({d})", r.verdict.word()),
                };
                out.push_str(&format!(
                    "| `{}` | {} | {} | {} | {} | {} | {} |\n",
                    r.entry.expr,
                    v,
                    e,
                    r.genus,
                    expected_display(&r.entry.expected),
                    verdict,
                    r.entry.source
                ));
            }
            out.push_str(&format!(
                "\n{} entries: {} pass, {} fail, {} inconclusive, {} errors.\n",
                report.results.len(),
                report.passed,
                report.failed,
                report.inconclusive,
                report.errors
            ));
            out
        }
        ReportFormat::Csv => {
            let mut out =
                String::from("expr,vertices,edges,genus,expected,verdict,detail,source\n");
            for r in &report.results {
                let (v, e) = r
                    .stats
                    .as_ref()
                    .map(|s| (s.order.to_string(), s.size.to_string()))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    csv_quote(&r.entry.expr),
                    v,
                    e,
                    r.genus,
                    expected_display(&r.entry.expected),
                    r.verdict.word(),
                    csv_quote(r.verdict.detail().unwrap_or("")),
                    csv_quote(&r.entry.source)
                ));
            }
            out
        }
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct JsonEntry<'a> {
                expr: &'a str,
                vertices: Option<usize>,
                edges: Option<usize>,
                genus: String,
                expected: String,
                verdict: &'static str,
                detail: Option<&'a str>,
                source: &'a str,
            }
            #[derive(Serialize)]
            struct JsonReport<'a> {
                entries: Vec<JsonEntry<'a>>,
                passed: usize,
                failed: usize,
                inconclusive: usize,
                errors: usize,
            }
            let entries = report
                .results
                .iter()
                .map(|r| JsonEntry {
                    expr: &r.entry.expr,
                    vertices: r.stats.as_ref().map(|s| s.order),
                    edges: r.stats.as_ref().map(|s| s.size),
                    genus: r.genus.to_string(),
                    expected: expected_display(&r.entry.expected),
                    verdict: r.verdict.word(),
                    detail: r.verdict.detail(),
                    source: &r.entry.source,
                })
                .collect();
            let jr = JsonReport {
                entries,
                passed: report.passed,
                failed: report.failed,
                inconclusive: report.inconclusive,
                errors: report.errors,
            };
            let mut s = serde_json::to_string_pretty(&jr).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// One row of the classification consistency sweep.
#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub expr: String,
    pub order: usize,
    pub predicted_planar: bool,
    pub predicted_toroidal: bool,
    pub rule: String,
    pub computed: GenusClassification,
    /// `None` when the computation was inconclusive.
    pub consistent: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    pub mismatches: usize,
    pub inconclusive: usize,
}

/// Recomputes planarity/toroidality for every family member and compares
/// with the classification predicates.
pub fn run_survey(max_order: usize, node_limit: u64) -> Result<SurveyReport, RingError> {
    let family = enumerate_family(max_order)?;
    let mut rows = Vec::new();
    let mut mismatches = 0;
    let mut inconclusive = 0;
    for f in family {
        let prediction = predict_classification(&f.ring)?;
        let g = annihilator_graph(&f.ring).expect("family members have zero-divisors");
        let computed = classify_genus(&g, node_limit);
        let consistent = match &computed {
            GenusClassification::Planar => Some(prediction.planar && !prediction.toroidal),
            GenusClassification::Toroidal => Some(prediction.toroidal && !prediction.planar),
            GenusClassification::AtLeastTwo(_) => Some(!prediction.planar && !prediction.toroidal),
            GenusClassification::Inconclusive => None,
        };
        match consistent {
            Some(false) => mismatches += 1,
            None => inconclusive += 1,
            _ => {}
        }
        rows.push(SurveyRow {
            expr: f.expr,
            order: f.ring.order(),
            predicted_planar: prediction.planar,
            predicted_toroidal: prediction.toroidal,
            rule: prediction.rule,
            computed,
            consistent,
        });
    }
    Ok(SurveyReport {
        rows,
        mismatches,
        inconclusive,
    })
}

fn computed_display(c: &GenusClassification) -> String {
    match c {
        GenusClassification::Planar => "planar (genus 0)".into(),
        GenusClassification::Toroidal => "toroidal (genus 1)".into(),
        GenusClassification::AtLeastTwo(why) => format!("genus >= 2 ({why})"),
        GenusClassification::Inconclusive => "inconclusive".into(),
    }
}

pub fn emit_survey(report: &SurveyReport, format: ReportFormat) -> String {
    let verdict_word = |r: &SurveyRow| match r.consistent {
        Some(true) => "OK",
        Some(false) => "MISMATCH",
        None => "INCONCLUSIVE",
    };
    let predicted = |r: &SurveyRow| {
        if r.predicted_planar {
            "planar"
        } else if r.predicted_toroidal {
            "toroidal"
        } else {
            "neither"
        }
    };
    match format {
        ReportFormat::Markdown => {
            let mut out = String::from("# Classification consistency sweep\n\n");
            out.push_str("| ring | order | predicted | rule | computed | verdict |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "| `{}` | {} | {} | {} | {} | {} |\n",
                    r.expr,
                    r.order,
                    predicted(r),
                    r.rule,
                    computed_display(&r.computed),
                    verdict_word(r)
                ));
            }
            out.push_str(&format!(
                "\n{} rings: {} mismatches, {} inconclusive.\n",
                report.rows.len(),
                report.mismatches,
                report.inconclusive
            ));
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("expr,order,predicted,rule,computed,verdict\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    csv_quote(&r.expr),
                    r.order,
                    predicted(r),
                    csv_quote(&r.rule),
                    csv_quote(&computed_display(&r.computed)),
                    verdict_word(r)
                ));
            }
            out
        }
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct JsonRow<'a> {
                expr: &'a str,
                order: usize,
                predicted: &'a str,
                rule: &'a str,
                computed: String,
                verdict: &'a str,
            }
            #[derive(Serialize)]
            struct JsonSurvey<'a> {
                rows: Vec<JsonRow<'a>>,
                mismatches: usize,
                inconclusive: usize,
            }
            let rows = report
                .rows
                .iter()
                .map(|r| JsonRow {
                    expr: &r.expr,
                    order: r.order,
                    predicted: predicted(r),
                    rule: &r.rule,
                    computed: computed_display(&r.computed),
                    verdict: verdict_word(r),
                })
                .collect();
            let js = JsonSurvey {
                rows,
                mismatches: report.mismatches,
                inconclusive: report.inconclusive,
            };
            let mut s = serde_json::to_string_pretty(&js).expect("serializable");
            s.push('\n');
            s
        }
    }
}
