//! The single-graph subcommands.

use std::fmt::Write as _;
use std::path::Path;

use magnitude_core::dsl::parse_expr;
use magnitude_core::graph::parse_edge_list;
use magnitude_core::magnitude::{
    check_inclusion_exclusion, verify_weighting, whitney_weight_transform, IeReport, IeVerdict,
};
use magnitude_core::{
    magnitude_rational, weighting, Graph, MagnitudeResult, RationalFunction, TwistSpec,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::input::{load_graph, parse_selection};
use crate::render::{self, Format};

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub format: Format,
    pub order: usize,
    /// Skip the independent cross-checks.
    pub fast: bool,
    pub parallel: usize,
}

pub fn mag(expr: &str, s: &Settings) -> CliResult<String> {
    let g = load_graph(expr)?;
    Ok(render::rational(&magnitude_rational(&g), s.format))
}

pub fn series(expr: &str, s: &Settings) -> CliResult<String> {
    let g = load_graph(expr)?;
    let result = MagnitudeResult::compute(&g, Some(s.order), !s.fast)?;
    let series = result.series.expect("order was requested");
    Ok(render::series(&series, s.format))
}

pub fn weights_value(
    g: &Graph,
    format: Format,
    check: bool,
) -> CliResult<(Vec<Value>, RationalFunction)> {
    let w = weighting(g);
    if check && !verify_weighting(g, w.weights()) {
        return Err(CliError::Failure(
            "computed weighting fails its defining equations".into(),
        ));
    }
    let rows = w
        .weights()
        .iter()
        .enumerate()
        .map(|(v, f)| json!({"vertex": v, "label": g.label(v), "weight": render::rational_value(f, format)}))
        .collect();
    Ok((rows, w.total()))
}

pub fn weights(expr: &str, s: &Settings) -> CliResult<String> {
    let g = load_graph(expr)?;
    let (rows, total) = weights_value(&g, s.format, !s.fast)?;
    if s.format == Format::Json {
        return Ok(json!({"weights": rows, "total": render::rational_json(&total)}).to_string());
    }
    let mut out = String::new();
    for row in &rows {
        let weight = row["weight"].as_str().unwrap_or_default();
        writeln!(
            out,
            "{}\t{}\t{}",
            row["vertex"],
            row["label"].as_str().unwrap_or_default(),
            weight
        )
        .unwrap();
    }
    write!(out, "total\t{}", render::rational(&total, s.format)).unwrap();
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes_no(b: Option<bool>) -> &'static str {
    b.map_or("n/a (intersection not convex)", yes_no)
}

pub fn verdict_text(v: IeVerdict) -> &'static str {
    match v {
        IeVerdict::TheoremApplies => "theorem applies; identity holds",
        IeVerdict::IdentityHoldsAnyway => "hypotheses fail; identity holds",
        IeVerdict::IdentityFails => "hypotheses fail; identity fails",
    }
}

pub fn check_ie_report(expr: &str, g_spec: &str, h_spec: &str) -> CliResult<IeReport> {
    let x = load_graph(expr)?;
    let g = parse_selection(&x, g_spec)?;
    let h = parse_selection(&x, h_spec)?;
    if !g.union(&h)?.is_full() {
        return Err(CliError::Usage("G and H do not cover X".into()));
    }
    let report = check_inclusion_exclusion(&x, &g, &h)?;
    if report.theorem_applies() && !report.identity_holds {
        return Err(CliError::Failure(
            "hypotheses hold but inclusion-exclusion fails".into(),
        ));
    }
    Ok(report)
}

pub fn check_ie(expr: &str, g_spec: &str, h_spec: &str, s: &Settings) -> CliResult<String> {
    let r = check_ie_report(expr, g_spec, h_spec)?;
    if s.format == Format::Json {
        return Ok(serde_json::to_string(&r).expect("report serializes"));
    }
    let f = |x: &RationalFunction| render::rational(x, s.format);
    let predicted = &(&r.mag_g + &r.mag_h) - &r.mag_intersection;
    let mut out = String::new();
    writeln!(
        out,
        "intersection convex: {}",
        yes_no(r.intersection_convex)
    )
    .unwrap();
    writeln!(out, "H projects onto G∩H: {}", opt_yes_no(r.h_projects)).unwrap();
    writeln!(out, "G projects onto G∩H: {}", opt_yes_no(r.g_projects)).unwrap();
    writeln!(out, "|X| = {}", f(&r.mag_x)).unwrap();
    writeln!(out, "|G| = {}", f(&r.mag_g)).unwrap();
    writeln!(out, "|H| = {}", f(&r.mag_h)).unwrap();
    writeln!(out, "|G∩H| = {}", f(&r.mag_intersection)).unwrap();
    writeln!(out, "|G| + |H| - |G∩H| = {}", f(&predicted)).unwrap();
    write!(out, "verdict: {}", verdict_text(r.verdict)).unwrap();
    Ok(out)
}

/// A graph in a Whitney spec file: an expression (or edge-list path), or an
/// explicit edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    Expr(String),
    Explicit {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphSpec {
    /// Relative paths resolve against `base`, the spec file's directory.
    pub fn build(&self, base: &Path) -> CliResult<Graph> {
        match self {
            GraphSpec::Explicit { n, edges } => Ok(Graph::from_edge_list(*n, edges)?),
            GraphSpec::Expr(e) => {
                let path = base.join(e);
                if path.is_file() {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|err| CliError::Usage(format!("{}: {err}", path.display())))?;
                    return Ok(parse_edge_list(&text)?);
                }
                Ok(parse_expr(e)?.build_in(base)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhitneySpec {
    pub g: GraphSpec,
    pub g_plus: usize,
    pub g_minus: usize,
    pub h: GraphSpec,
    pub h_plus: usize,
    pub h_minus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhitneyReport {
    pub mag_x: RationalFunction,
    pub mag_y: RationalFunction,
    pub adjacent: bool,
    pub equal: bool,
    /// `None` when the gluing points are not adjacent.
    pub transform_verified: Option<bool>,
}

impl WhitneyReport {
    /// Adjacent gluing points force equal magnitudes and a valid transform.
    pub fn consistent(&self) -> bool {
        !self.adjacent || (self.equal && self.transform_verified == Some(true))
    }
}

pub fn whitney_report(spec: &WhitneySpec, base: &Path) -> CliResult<WhitneyReport> {
    let g = spec.g.build(base)?;
    let h = spec.h.build(base)?;
    let twist = TwistSpec::new(g, spec.g_plus, spec.g_minus, h, spec.h_plus, spec.h_minus)?.build();
    let mag_x = magnitude_rational(&twist.x);
    let mag_y = magnitude_rational(&twist.y);
    let adjacent = twist.gluing_points_adjacent();
    let transform_verified = if adjacent {
        let w = weighting(&twist.x);
        Some(match whitney_weight_transform(&twist, &w) {
            Ok(t) => verify_weighting(&twist.y, t.weights_y.weights()),
            Err(_) => false,
        })
    } else {
        None
    };
    Ok(WhitneyReport {
        equal: mag_x == mag_y,
        mag_x,
        mag_y,
        adjacent,
        transform_verified,
    })
}

pub fn read_whitney_spec(path: &Path) -> CliResult<WhitneySpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed spec {}: {e}", path.display())))
}

pub fn whitney(specfile: &Path, s: &Settings) -> CliResult<String> {
    let spec = read_whitney_spec(specfile)?;
    let base = specfile.parent().unwrap_or(Path::new("."));
    let r = whitney_report(&spec, base)?;
    let text = if s.format == Format::Json {
        serde_json::to_string(&r).expect("report serializes")
    } else {
        let transform = match r.transform_verified {
            Some(true) => "verified",
            Some(false) => "FAILED",
            None => "not applicable (gluing points not adjacent)",
        };
        format!(
            "|X| = {}\n|Y| = {}\ngluing points adjacent: {}\nmagnitudes equal: {}\nweight transform: {}",
            render::rational(&r.mag_x, s.format),
            render::rational(&r.mag_y, s.format),
            yes_no(r.adjacent),
            yes_no(r.equal),
            transform
        )
    };
    if !r.consistent() {
        return Err(CliError::Failure(format!(
            "{text}\nadjacent gluing points but the twist check failed"
        )));
    }
    Ok(text)
}
