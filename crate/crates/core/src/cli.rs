//! Library side of the `polyhex` command: each subcommand is a function
//! returning serializable output, so the binary only parses flags and
//! prints.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::format::{from_graph6, from_json, to_dot, to_graph6};
use crate::graph::{
    count_perfect_matchings, cyclic_edge_connectivity, find_k33_subdivision, is_brace, is_brick,
    CyclicConnectivity, Graph,
};
use crate::pfaffian::{
    central_cycles, classify_pfaffian, first_violation, matching_count_by_determinant,
    pfaffian_search_report, Orientation, PfaffianReason,
};
use crate::polyhex::{
    build_polyhex, face_width_class, face_width_witness, is_planar_polyhex, named_graph,
    validate_polyhex, Family, FaceWidthClass, PolyhexSpec,
};
use crate::structure::find_ideal_tri_cut;

/// Largest `kq` accepted by an oracle sweep.
pub const ORACLE_SWEEP_LIMIT: usize = 32;

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t" | "torus" => Ok(Family::Torus),
            "ke" => Ok(Family::KleinBipartite),
            "ko" => Ok(Family::KleinNonBipartite),
            _ => Err(Error::Parse(format!("unknown family `{s}` (T, Ke or Ko)"))),
        }
    }
}

/// A spec from either a `T:k,q,t` string or the separate family and
/// parameter flags.
pub fn resolve_spec(
    text: Option<&str>,
    family: Option<Family>,
    k: Option<usize>,
    q: Option<usize>,
    t: Option<usize>,
) -> Result<PolyhexSpec> {
    match (text, family) {
        (Some(s), None) => s.parse(),
        (None, Some(f)) => {
            let k = k.ok_or_else(|| Error::Parse("--k is required with --family".into()))?;
            let q = q.ok_or_else(|| Error::Parse("--q is required with --family".into()))?;
            PolyhexSpec::new(f, k, q, t.unwrap_or(0))
        }
        (Some(_), Some(_)) => Err(Error::Parse("give a spec string or --family, not both".into())),
        (None, None) => Err(Error::Parse("missing spec (e.g. T:14,1,2 or --family T --k 14 --q 1 --t 2)".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFormat {
    Graph6,
    Dot,
    Json,
}

impl FromStr for GenFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" => Ok(GenFormat::Graph6),
            "dot" => Ok(GenFormat::Dot),
            "json" => Ok(GenFormat::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}` (graph6, dot or json)"))),
        }
    }
}

pub fn cmd_gen(spec: &PolyhexSpec, format: GenFormat) -> Result<String> {
    let e = build_polyhex(spec)?;
    Ok(match format {
        GenFormat::Graph6 => to_graph6(&e.graph) + "\n",
        GenFormat::Json => {
            serde_json::to_string_pretty(&e.to_json()).expect("embedding serialises") + "\n"
        }
        GenFormat::Dot => {
            let mut comments = vec![format!("{spec} on the {:?}", e.surface)];
            for f in &e.faces {
                comments.push(format!("face h({},{}): {:?}", f.label.0, f.label.1, f.boundary));
            }
            if !e.crossing_edges.is_empty() {
                let pairs: Vec<_> = e.crossing_edges.iter().map(|&x| e.graph.edge(x)).collect();
                comments.push(format!("E_0: {pairs:?}"));
            }
            to_dot(&e.graph, &spec.to_string(), &comments)
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyOutput {
    pub spec: PolyhexSpec,
    pub pfaffian: bool,
    pub reason: PfaffianReason,
    pub planar: bool,
    pub face_width_class: String,
    pub bipartite: bool,
}

pub fn cmd_classify(spec: &PolyhexSpec) -> ClassifyOutput {
    let c = classify_pfaffian(spec);
    ClassifyOutput {
        spec: *spec,
        pfaffian: c.is_pfaffian(),
        reason: c.reason,
        planar: is_planar_polyhex(spec),
        face_width_class: face_width_class(spec).to_string(),
        bipartite: spec.family() != Family::KleinNonBipartite,
    }
}

/// One row of the sweep. Oracle columns are `None` when the sweep ran
/// without `--oracle`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub spec: PolyhexSpec,
    pub n: usize,
    pub bipartite: bool,
    pub planar_formula: bool,
    pub planar_oracle: Option<bool>,
    pub fw_class: String,
    pub fw_witness: Option<bool>,
    pub brace: Option<bool>,
    pub brick: Option<bool>,
    pub cyclic_connectivity: Option<CyclicConnectivity>,
    pub pfaffian_theorem: bool,
    pub pfaffian_reason: PfaffianReason,
    pub pfaffian_oracle: Option<bool>,
    pub matchings_enum: Option<u64>,
    pub matchings_det: Option<u64>,
    pub tricut: Option<bool>,
    /// Names of failed agreement checks; empty when the row agrees.
    pub disagreements: Vec<&'static str>,
}

impl SweepRow {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_vertices: usize,
    pub oracle: bool,
    pub rows: Vec<SweepRow>,
}

pub const CSV_COLUMNS: [&str; 17] = [
    "spec",
    "n",
    "bipartite",
    "planar_formula",
    "planar_oracle",
    "fw_class",
    "fw_witness",
    "brace",
    "brick",
    "cyclic_connectivity",
    "pfaffian_theorem",
    "pfaffian_reason",
    "pfaffian_oracle",
    "matchings_enum",
    "matchings_det",
    "tricut",
    "agreement",
];

fn cell<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

impl SweepReport {
    pub fn has_disagreement(&self) -> bool {
        self.rows.iter().any(|r| !r.agrees())
    }

    pub fn disagreeing(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    /// The fixed-column CSV projection of [`SweepReport::to_json`].
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for r in &self.rows {
            let agreement = if r.agrees() {
                "ok".to_string()
            } else {
                format!("DISAGREE:{}", r.disagreements.join(";"))
            };
            w.write_record([
                r.spec.to_string(),
                r.n.to_string(),
                r.bipartite.to_string(),
                r.planar_formula.to_string(),
                cell(&r.planar_oracle),
                r.fw_class.clone(),
                cell(&r.fw_witness.map(|w| if w { "2" } else { ">=3" })),
                cell(&r.brace),
                cell(&r.brick),
                cell(&r.cyclic_connectivity),
                r.pfaffian_theorem.to_string(),
                r.pfaffian_reason.to_string(),
                cell(&r.pfaffian_oracle),
                cell(&r.matchings_enum),
                cell(&r.matchings_det),
                cell(&r.tricut),
                agreement,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 csv")
    }

    /// Writes `<base>.json` and `<base>.csv`.
    pub fn write(&self, base: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Io(e.to_string());
        std::fs::write(base.with_extension("json"), self.to_json()).map_err(io)?;
        std::fs::write(base.with_extension("csv"), self.to_csv()).map_err(io)?;
        Ok(())
    }
}

fn sweep_row(spec: &PolyhexSpec, oracle: bool) -> Result<SweepRow> {
    let class = classify_pfaffian(spec);
    let fw = face_width_class(spec);
    let mut row = SweepRow {
        spec: *spec,
        n: spec.vertex_count(),
        bipartite: spec.family() != Family::KleinNonBipartite,
        planar_formula: is_planar_polyhex(spec),
        planar_oracle: None,
        fw_class: fw.to_string(),
        fw_witness: None,
        brace: None,
        brick: None,
        cyclic_connectivity: None,
        pfaffian_theorem: class.is_pfaffian(),
        pfaffian_reason: class.reason,
        pfaffian_oracle: None,
        matchings_enum: None,
        matchings_det: None,
        tricut: None,
        disagreements: Vec::new(),
    };
    if !oracle {
        return Ok(row);
    }
    let e = build_polyhex(spec)?;
    let g = &e.graph;
    let mut bad = Vec::new();
    if !validate_polyhex(&e).passed() {
        bad.push("embedding");
    }
    if g.is_bipartite() != row.bipartite {
        bad.push("bipartite");
    }
    let planar = find_k33_subdivision(g)?.is_none();
    if planar != row.planar_formula {
        bad.push("planar");
    }
    let witness = face_width_witness(&e).is_some();
    if witness != (fw == FaceWidthClass::Two) {
        bad.push("face-width");
    }
    let search = pfaffian_search_report(g)?;
    let found = search.orientation.is_some();
    if found != row.pfaffian_theorem {
        bad.push("pfaffian");
    }
    let by_enum = count_perfect_matchings(g);
    let by_det = match &search.orientation {
        Some(d) => Some(
            u64::try_from(matching_count_by_determinant(d)?)
                .map_err(|_| Error::NotPerfectSquare("matching count overflows u64".into()))?,
        ),
        None => None,
    };
    if by_det.is_some_and(|c| c != by_enum) {
        bad.push("matchings");
    }
    let brace = row.bipartite.then(|| is_brace(g));
    let brick = (!row.bipartite).then(|| is_brick(g));
    let tricut = find_ideal_tri_cut(g)?.is_some();
    if row.bipartite && (brace != Some(true) || tricut) {
        bad.push("structure");
    }
    row.planar_oracle = Some(planar);
    row.fw_witness = Some(witness);
    row.brace = brace;
    row.brick = brick;
    row.cyclic_connectivity = Some(cyclic_edge_connectivity(g));
    row.pfaffian_oracle = Some(found);
    row.matchings_enum = Some(by_enum);
    row.matchings_det = by_det;
    row.tricut = Some(tricut);
    row.disagreements = bad;
    Ok(row)
}

/// Every valid spec with `kq <= max_vertices`, sorted by family and
/// parameters. With `oracle`, every formula column is checked against the
/// brute-force computation on the built graph.
pub fn cmd_sweep(max_vertices: usize, oracle: bool) -> Result<SweepReport> {
    if oracle && max_vertices > ORACLE_SWEEP_LIMIT {
        return Err(Error::SweepLimit {
            max_vertices,
            limit: ORACLE_SWEEP_LIMIT,
        });
    }
    let specs = PolyhexSpec::enumerate(max_vertices);
    let rows = specs
        .par_iter()
        .map(|s| sweep_row(s, oracle))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        max_vertices,
        oracle,
        rows,
    })
}

/// A spec string, a named graph, or a file holding an edge-list JSON or
/// graph6 graph.
pub fn load_graph(input: &str) -> Result<Graph> {
    if let Ok(spec) = input.parse::<PolyhexSpec>() {
        return Ok(build_polyhex(&spec)?.graph);
    }
    if let Ok(g) = named_graph(input) {
        return Ok(g);
    }
    let path = Path::new(input);
    if !path.exists() {
        return Err(Error::Parse(format!(
            "`{input}` is not a spec, a named graph (k33, cube, heawood, petersen) or a file"
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{input}: {e}")))?;
    let text = text.trim();
    if text.starts_with('{') {
        from_json(text)
    } else {
        from_graph6(text.trim_start_matches(">>graph6<<"))
    }
}

#[derive(Debug, Clone)]
pub enum PfaffianMode {
    Search,
    Verify(Orientation),
}

#[derive(Debug, Clone, Serialize)]
pub struct PfaffianOutput {
    pub mode: &'static str,
    pub pfaffian: bool,
    pub orientation: Option<Orientation>,
    pub central_cycles: usize,
    /// Switching classes examined (search mode).
    pub classes_checked: Option<u64>,
    /// First evenly oriented central cycle (verify mode).
    pub violation: Option<Vec<usize>>,
    pub matchings_enum: u64,
    pub matchings_det: Option<u64>,
}

pub fn cmd_pfaffian(g: &Graph, mode: PfaffianMode) -> Result<PfaffianOutput> {
    let matchings_enum = count_perfect_matchings(g);
    let det_count = |d: &Orientation| -> Result<u64> {
        u64::try_from(matching_count_by_determinant(d)?)
            .map_err(|_| Error::NotPerfectSquare("matching count overflows u64".into()))
    };
    match mode {
        PfaffianMode::Search => {
            let r = pfaffian_search_report(g)?;
            let matchings_det = r.orientation.as_ref().map(det_count).transpose()?;
            Ok(PfaffianOutput {
                mode: "search",
                pfaffian: r.orientation.is_some(),
                orientation: r.orientation,
                central_cycles: r.central_cycles,
                classes_checked: Some(r.classes_checked),
                violation: None,
                matchings_enum,
                matchings_det,
            })
        }
        PfaffianMode::Verify(d) => {
            if d.host() != g {
                return Err(Error::InvalidOrientation("orientation is for a different graph".into()));
            }
            let violation = first_violation(&d)?;
            let matchings_det = match violation {
                None => Some(det_count(&d)?),
                Some(_) => None,
            };
            Ok(PfaffianOutput {
                mode: "verify",
                pfaffian: violation.is_none(),
                central_cycles: central_cycles(g)?.len(),
                orientation: Some(d),
                classes_checked: None,
                violation: violation.map(|c| c.vertices().to_vec()),
                matchings_enum,
                matchings_det,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> PolyhexSpec {
        s.parse().unwrap()
    }

    #[test]
    fn gen_json_counts() {
        let out = cmd_gen(&spec("T:14,1,2"), GenFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["graph"]["n"], 14);
        assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 21);
        assert_eq!(v["faces"].as_array().unwrap().len(), 7);
        let ko = cmd_gen(&spec("Ko:4,4"), GenFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&ko).unwrap();
        assert_eq!(v["crossing_edges"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn gen_other_formats() {
        let g6 = cmd_gen(&spec("T:6,1,1"), GenFormat::Graph6).unwrap();
        assert_eq!(from_graph6(g6.trim()).unwrap().edge_count(), 9);
        let dot = cmd_gen(&spec("Ko:3,2"), GenFormat::Dot).unwrap();
        assert!(dot.contains("// face h(0,0)"));
        assert!(dot.contains("// E_0"));
    }

    #[test]
    fn resolve_spec_inputs() {
        assert_eq!(resolve_spec(Some("Ke:4,2"), None, None, None, None).unwrap(), spec("Ke:4,2"));
        let flags = resolve_spec(None, Some(Family::Torus), Some(14), Some(1), Some(2)).unwrap();
        assert_eq!(flags, spec("T:14,1,2"));
        assert!(resolve_spec(None, None, None, None, None).is_err());
        assert!(resolve_spec(None, Some(Family::Torus), Some(14), None, None).is_err());
        let excluded = resolve_spec(Some("T:2,3,0"), None, None, None, None).unwrap_err();
        assert!(excluded.to_string().contains("(2,q,t)"));
    }

    #[test]
    fn classify_examples() {
        let c = cmd_classify(&spec("T:14,1,2"));
        assert!(c.pfaffian);
        assert_eq!(c.reason, PfaffianReason::Heawood);
        let c = serde_json::to_value(cmd_classify(&spec("Ke:4,2"))).unwrap();
        assert_eq!(c["reason"], "planar");
        assert_eq!(cmd_classify(&spec("Ko:6,4")).reason, PfaffianReason::CrossCapOdd);
    }

    #[test]
    fn small_oracle_sweeps() {
        let r = cmd_sweep(14, true).unwrap();
        // single-layer tori where the closed forms are known to be wrong
        let odd: Vec<_> = r.disagreeing().map(|r| (r.spec.to_string(), r.disagreements.clone())).collect();
        assert_eq!(
            odd,
            [
                ("T:10,1,1", vec!["face-width"]),
                ("T:10,1,3", vec!["face-width"]),
                ("T:12,1,1", vec!["planar", "face-width", "pfaffian"]),
                ("T:12,1,4", vec!["planar", "face-width", "pfaffian"]),
                ("T:14,1,1", vec!["face-width"]),
                ("T:14,1,5", vec!["face-width"]),
            ]
            .map(|(s, d)| (s.to_string(), d))
        );
        assert!(r.rows.windows(2).all(|w| w[0].spec < w[1].spec));
        let k33 = r.rows.iter().find(|r| r.spec == spec("T:6,1,1")).unwrap();
        assert!(!k33.pfaffian_theorem);
        assert_eq!(k33.pfaffian_oracle, Some(false));
        assert_eq!(k33.matchings_enum, Some(6));
        let csv = r.to_csv();
        assert!(csv.starts_with(&CSV_COLUMNS.join(",")));
        assert_eq!(csv.lines().count(), r.rows.len() + 1);
    }

    #[test]
    fn sweep_limits_and_determinism() {
        assert!(matches!(cmd_sweep(40, true), Err(Error::SweepLimit { .. })));
        let a = cmd_sweep(40, false).unwrap().to_json();
        let b = cmd_sweep(40, false).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn pfaffian_search_and_verify() {
        let heawood = load_graph("heawood").unwrap();
        let out = cmd_pfaffian(&heawood, PfaffianMode::Search).unwrap();
        assert!(out.pfaffian);
        assert_eq!((out.matchings_enum, out.matchings_det), (24, Some(24)));

        let mut broken = out.orientation.unwrap();
        broken.reverse_edge(0);
        let out = cmd_pfaffian(&heawood, PfaffianMode::Verify(broken)).unwrap();
        assert!(!out.pfaffian);
        assert!(out.violation.is_some());

        let k33 = load_graph("T:6,1,1").unwrap();
        let out = cmd_pfaffian(&k33, PfaffianMode::Search).unwrap();
        assert!(!out.pfaffian);
        assert_eq!(out.classes_checked, Some(16));
    }

    #[test]
    fn load_graph_from_files() {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("g.json");
        std::fs::write(&json, r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
        assert_eq!(load_graph(json.to_str().unwrap()).unwrap().edge_count(), 4);
        let g6 = dir.path().join("g.g6");
        std::fs::write(&g6, "EFz_\n").unwrap();
        assert_eq!(load_graph(g6.to_str().unwrap()).unwrap().edge_count(), 9);
        assert!(load_graph("no-such-thing").is_err());
    }
}
