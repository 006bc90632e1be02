//! Plain, LaTeX and JSON renderings of the computed objects.

use clap::ValueEnum;
use magnitude_core::{RationalFunction, TruncatedSeries};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Json,
}

pub fn rational_json(f: &RationalFunction) -> Value {
    serde_json::to_value(f).expect("rational functions serialize")
}

pub fn series_json(s: &TruncatedSeries) -> Value {
    serde_json::to_value(s).expect("series serialize")
}

pub fn series_latex(s: &TruncatedSeries) -> String {
    let head = s.to_poly().to_latex();
    let tail = match s.order() + 1 {
        1 => "O(q)".to_string(),
        k => format!("O(q^{{{k}}})"),
    };
    if s.to_poly().is_zero() {
        tail
    } else {
        format!("{head} + {tail}")
    }
}

pub fn rational(f: &RationalFunction, format: Format) -> String {
    match format {
        Format::Plain => f.to_string(),
        Format::Latex => f.to_latex(),
        Format::Json => rational_json(f).to_string(),
    }
}

pub fn series(s: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Plain => s.to_string(),
        Format::Latex => series_latex(s),
        Format::Json => series_json(s).to_string(),
    }
}

/// A rational function as a JSON value: the schema object in JSON mode,
/// otherwise the rendered string.
pub fn rational_value(f: &RationalFunction, format: Format) -> Value {
    match format {
        Format::Json => rational_json(f),
        other => Value::String(rational(f, other)),
    }
}

pub fn series_value(s: &TruncatedSeries, format: Format) -> Value {
    match format {
        Format::Json => series_json(s),
        other => Value::String(series(s, other)),
    }
}
