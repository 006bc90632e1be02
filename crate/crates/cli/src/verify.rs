//! The built-in golden table: published identities recomputed from scratch.

use magnitude_core::magnitude::{connected_components_vs_mag_at_1, weighting, ClosedForm};
use magnitude_core::{
    magnitude_rational, magnitude_series_oracle, Family, Graph, RationalFunction, TruncatedSeries,
    TwistSpec,
};
use serde::Serialize;

use crate::render::{self, Format};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    /// Acceptance criterion the row belongs to; `None` for extra checks.
    pub criterion: Option<u8>,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

struct Table {
    rows: Vec<Row>,
    format: Format,
}

impl Table {
    fn text(
        &mut self,
        criterion: Option<u8>,
        name: impl Into<String>,
        expected: String,
        actual: String,
    ) {
        let pass = expected == actual;
        self.rows.push(Row {
            criterion,
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    /// Compares canonical forms, then records both renderings.
    fn rational(
        &mut self,
        criterion: impl Into<Option<u8>>,
        name: impl Into<String>,
        expected: &RationalFunction,
        actual: &RationalFunction,
    ) {
        let fmt = if self.format == Format::Latex {
            Format::Latex
        } else {
            Format::Plain
        };
        self.rows.push(Row {
            criterion: criterion.into(),
            name: name.into(),
            expected: render::rational(expected, fmt),
            actual: render::rational(actual, fmt),
            pass: expected == actual,
        });
    }
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::from_i64s(num, den).expect("nonzero denominator")
}

fn fam(f: Family) -> Graph {
    f.build().expect("valid family parameters")
}

fn mag(f: Family) -> RationalFunction {
    magnitude_rational(&fam(f))
}

fn differ(a: &RationalFunction, b: &RationalFunction) -> String {
    if a == b { "equal" } else { "differ" }.to_string()
}

/// The houses as a Whitney twist pair: a triangle with a pendant edge,
/// pointed at a triangle vertex and the far end of the pendant, glued to a
/// copy of itself both ways.
pub fn houses() -> TwistSpec {
    let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]).expect("valid edges");
    TwistSpec::new(g.clone(), 0, 3, g, 0, 3).expect("valid points")
}

pub fn two_triangles() -> Graph {
    let c3 = fam(Family::Cycle(3));
    c3.edge_glue((0, 1), &c3, (0, 1)).expect("C3 has edge 01")
}

pub fn golden_rows(format: Format) -> Vec<Row> {
    let mut t = Table {
        rows: Vec::new(),
        format,
    };

    for n in 1..=8 {
        let expected = ClosedForm::Complete(n).evaluate().expect("n >= 1");
        t.rational(1, format!("|K{n}|"), &expected, &mag(Family::Complete(n)));
    }
    for n in 1..=10 {
        let expected = ClosedForm::Cycle(n).evaluate().expect("n >= 1");
        t.rational(1, format!("|C{n}|"), &expected, &mag(Family::Cycle(n)));
    }
    for m in 1..=5 {
        for n in 1..=5 {
            let expected = ClosedForm::CompleteBipartite(m, n)
                .evaluate()
                .expect("m, n >= 1");
            t.rational(
                1,
                format!("|K{m},{n}|"),
                &expected,
                &mag(Family::CompleteBipartite(m, n)),
            );
        }
    }

    let petersen = fam(Family::Petersen);
    let mp = magnitude_rational(&petersen);
    t.rational(2, "|Petersen|", &rf(&[10], &[1, 3, 6]), &mp);
    let expected_series = TruncatedSeries::from_i64s(4, &[10, -30, 30, 90, -450]).to_string();
    let det_series =
        TruncatedSeries::from_rational(&mp, 4).map_or_else(|e| e.to_string(), |s| s.to_string());
    t.text(
        Some(2),
        "Petersen series to q^4 (determinant)",
        expected_series.clone(),
        det_series,
    );
    t.text(
        Some(2),
        "Petersen series to q^4 (walk expansion)",
        expected_series,
        magnitude_series_oracle(&petersen, 4).to_string(),
    );

    let w = fam(Family::WGraph);
    t.rational(3, "|W|", &rf(&[6], &[1, 4]), &magnitude_rational(&w));
    let at_one = connected_components_vs_mag_at_1(&w);
    let value = at_one
        .value_at_one
        .map_or("pole".to_string(), |v| v.to_string());
    t.text(
        Some(3),
        "|W|(1) vs k(W)",
        "6/5 vs 1".into(),
        format!("{value} vs {}", at_one.components),
    );
    let five_w = (0..5).fold(Graph::empty(), |acc, _| acc.disjoint_union(&w));
    let k5 = fam(Family::Complete(5));
    let six_k5 = (0..6).fold(Graph::empty(), |acc, _| acc.disjoint_union(&k5));
    let (m5w, m6k5) = (magnitude_rational(&five_w), magnitude_rational(&six_k5));
    t.rational(3, "|5W|", &rf(&[30], &[1, 4]), &m5w);
    t.rational(3, "|6K5|", &rf(&[30], &[1, 4]), &m6k5);
    t.text(
        Some(3),
        "|5W| vs |6K5|",
        "equal".into(),
        differ(&m5w, &m6k5),
    );
    t.text(
        Some(3),
        "k(5W) vs k(6K5)",
        "5 vs 6".into(),
        format!(
            "{} vs {}",
            five_w.component_count(),
            six_k5.component_count()
        ),
    );

    let twist = houses().build();
    let (mx, my) = (magnitude_rational(&twist.x), magnitude_rational(&twist.y));
    t.rational(
        4,
        "|X| houses, triangles on adjacent edges",
        &rf(&[6, 8, -2], &[1, 4, 5, 2]),
        &mx,
    );
    t.rational(
        4,
        "|Y| houses, triangles on opposite edges",
        &rf(&[6, -4], &[1, 2, 0, -1]),
        &my,
    );
    t.text(Some(4), "|X| vs |Y|", "differ".into(), differ(&mx, &my));
    t.text(
        Some(4),
        "houses gluing points adjacent",
        "no".into(),
        if twist.gluing_points_adjacent() {
            "yes"
        } else {
            "no"
        }
        .into(),
    );

    let two = magnitude_rational(&two_triangles());
    let naive = &(&mag(Family::Cycle(3)) + &mag(Family::Cycle(3))) - &mag(Family::Cycle(2));
    t.rational(5, "|two triangles|", &rf(&[4, -2], &[1, 2, -1]), &two);
    t.rational(5, "2|C3| - |C2|", &rf(&[4, 2], &[1, 3, 2]), &naive);
    t.text(
        Some(5),
        "|two triangles| vs 2|C3| - |C2|",
        "differ".into(),
        differ(&two, &naive),
    );

    let prism =
        magnitude_rational(&fam(Family::Complete(2)).cartesian_product(&fam(Family::Complete(3))));
    let k33 = mag(Family::CompleteBipartite(3, 3));
    let expected = rf(&[6], &[1, 1]) * rf(&[1], &[1, 2]);
    t.rational(6, "|K2 * K3|", &expected, &prism);
    t.rational(6, "|K3,3|", &expected, &k33);

    t.rational(None, "|E5|", &rf(&[5], &[1]), &mag(Family::Edgeless(5)));
    let p3 = mag(Family::Path(3));
    t.text(
        None,
        "P3 series to q^3",
        "3 -4 4 -4".into(),
        TruncatedSeries::from_rational(&p3, 3).map_or_else(|e| e.to_string(), |s| s.to_string()),
    );
    let wp3 = weighting(&fam(Family::Path(3)));
    let shown: Vec<String> = wp3.weights().iter().map(|f| f.to_string()).collect();
    t.text(
        None,
        "P3 weights",
        "1/(1+q) (1-q)/(1+q) 1/(1+q)".into(),
        shown.join(" "),
    );
    let forest = fam(Family::Path(4)).disjoint_union(&fam(Family::CompleteBipartite(1, 3)));
    let report = connected_components_vs_mag_at_1(&forest);
    t.text(
        None,
        "forest |G|(1) vs k(G)",
        "2 vs 2".into(),
        format!(
            "{} vs {}",
            report.value_at_one.map_or("pole".into(), |v| v.to_string()),
            report.components
        ),
    );

    t.rows
}

pub fn render_rows(rows: &[Row], format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string(rows).expect("rows serialize");
    }
    let mut lines: Vec<String> = rows
        .iter()
        .map(|r| {
            let criterion = r.criterion.map_or("-".to_string(), |c| c.to_string());
            let status = if r.pass { "PASS" } else { "FAIL" };
            format!(
                "{status}\t{criterion}\t{}\texpected {}\tactual {}",
                r.name, r.expected, r.actual
            )
        })
        .collect();
    let failed = rows.iter().filter(|r| !r.pass).count();
    lines.push(format!("{} rows, {} failed", rows.len(), failed));
    lines.join("\n")
}
