//! JSONL batch processing: one job per input line, one record per output
//! line, in input order.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use magnitude_core::MagnitudeResult;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::commands::{weights_value, Settings};
use crate::error::{CliError, CliResult};
use crate::input::load_graph;
use crate::render::{self, Format};

/// One requested output: `"rational"`, `"weights"`, `"series"` (at the job
/// or global order) or `"series N"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputRequest {
    Rational,
    Series(Option<usize>),
    Weights,
}

impl fmt::Display for OutputRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputRequest::Rational => f.write_str("rational"),
            OutputRequest::Series(None) => f.write_str("series"),
            OutputRequest::Series(Some(n)) => write!(f, "series {n}"),
            OutputRequest::Weights => f.write_str("weights"),
        }
    }
}

impl std::str::FromStr for OutputRequest {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut words = s.split_whitespace();
        let out = match (words.next(), words.next()) {
            (Some("rational"), None) => OutputRequest::Rational,
            (Some("weights"), None) => OutputRequest::Weights,
            (Some("series"), None) => OutputRequest::Series(None),
            (Some("series"), Some(n)) => OutputRequest::Series(Some(
                n.parse().map_err(|_| format!("bad series order {n:?}"))?,
            )),
            _ => return Err(format!("unknown output {s:?}")),
        };
        if words.next().is_some() {
            return Err(format!("unknown output {s:?}"));
        }
        Ok(out)
    }
}

impl Serialize for OutputRequest {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OutputRequest {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

fn default_outputs() -> Vec<OutputRequest> {
    vec![OutputRequest::Rational]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobRecord {
    /// A string or a number, echoed back unchanged.
    pub id: Value,
    pub expr: String,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputRequest>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightsOutput {
    pub weights: Vec<Value>,
    pub total: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRecord {
    pub id: Value,
    pub expr: String,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rational: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsOutput>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorRecord {
    /// The job id when the line parsed far enough to have one.
    pub id: Value,
    /// 1-based input line number.
    pub line: usize,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OutputLine {
    Result(ResultRecord),
    Error(ErrorRecord),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub jobs: usize,
    pub ok: usize,
    pub errors: usize,
}

pub fn run_job(job: &JobRecord, s: &Settings) -> CliResult<ResultRecord> {
    if !(job.id.is_string() || job.id.is_number()) {
        return Err(CliError::Usage("id must be a string or a number".into()));
    }
    let start = Instant::now();
    let format = job.format.unwrap_or(Format::Json);
    let g = load_graph(&job.expr)?;
    let mut record = ResultRecord {
        id: job.id.clone(),
        expr: job.expr.clone(),
        format,
        rational: None,
        series: None,
        weights: None,
        elapsed_ms: 0.0,
    };
    for out in &job.outputs {
        match *out {
            OutputRequest::Rational => {
                let m = magnitude_core::magnitude_rational(&g);
                record.rational = Some(render::rational_value(&m, format));
            }
            OutputRequest::Series(n) => {
                let order = n.or(job.order).unwrap_or(s.order);
                let result = MagnitudeResult::compute(&g, Some(order), !s.fast)?;
                let series = result.series.expect("order was requested");
                record.series = Some(render::series_value(&series, format));
            }
            OutputRequest::Weights => {
                let (weights, total) = weights_value(&g, format, !s.fast)?;
                record.weights = Some(WeightsOutput {
                    weights,
                    total: render::rational_value(&total, format),
                });
            }
        }
    }
    record.elapsed_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    Ok(record)
}

fn process_line(index: usize, line: &str, s: &Settings) -> OutputLine {
    let error = |id: Value, e: String| {
        OutputLine::Error(ErrorRecord {
            id,
            line: index + 1,
            error: e,
        })
    };
    if line.trim().is_empty() {
        return error(Value::Null, "blank line".into());
    }
    let job: JobRecord = match serde_json::from_str(line) {
        Ok(job) => job,
        Err(e) => {
            // salvage the id for the error record when the line is an object
            let id = serde_json::from_str::<Value>(line)
                .ok()
                .and_then(|v| v.get("id").cloned())
                .unwrap_or(Value::Null);
            return error(id, format!("malformed job: {e}"));
        }
    };
    match run_job(&job, s) {
        Ok(r) => OutputLine::Result(r),
        Err(e) => error(job.id, e.to_string()),
    }
}

/// Runs every line of `input` on `s.parallel` worker threads; results come
/// back in input order.
pub fn run_lines(input: &str, s: &Settings) -> CliResult<Vec<OutputLine>> {
    let lines: Vec<&str> = input.lines().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(s.parallel.max(1))
        .build()
        .map_err(|e| CliError::Failure(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, line)| process_line(i, line, s))
            .collect()
    }))
}

/// Reads `input` and writes `output` (`-` for standard output).
pub fn run_files(
    input: &Path,
    output: &Path,
    s: &Settings,
    stdout: &mut dyn std::io::Write,
) -> CliResult<BatchSummary> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("{}: {e}", input.display())))?;
    let records = run_lines(&text, s)?;
    let mut body = String::new();
    let mut summary = BatchSummary {
        jobs: records.len(),
        ..BatchSummary::default()
    };
    for r in &records {
        match r {
            OutputLine::Result(_) => summary.ok += 1,
            OutputLine::Error(_) => summary.errors += 1,
        }
        body.push_str(&serde_json::to_string(r).expect("records serialize"));
        body.push('\n');
    }
    if output == Path::new("-") {
        stdout
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Failure(format!("stdout: {e}")))?;
    } else {
        std::fs::write(output, body)
            .map_err(|e| CliError::Usage(format!("{}: {e}", output.display())))?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn settings() -> Settings {
        Settings {
            format: Format::Plain,
            order: 4,
            fast: false,
            parallel: 2,
        }
    }

    #[test]
    fn output_requests() {
        assert_eq!("series 12".parse(), Ok(OutputRequest::Series(Some(12))));
        assert_eq!("series".parse(), Ok(OutputRequest::Series(None)));
        assert!("series x".parse::<OutputRequest>().is_err());
        assert!("rational 3".parse::<OutputRequest>().is_err());
        assert_eq!(OutputRequest::Series(Some(3)).to_string(), "series 3");
    }

    #[test]
    fn mixed_lines() {
        let input = concat!(
            r#"{"id":"a","expr":"W"}"#,
            "\n",
            "not json\n",
            "\n",
            r#"{"id":7,"expr":"P3","outputs":["series 3","weights"],"format":"plain"}"#,
            "\n",
            r#"{"id":"bad","expr":"K0"}"#,
        );
        let out = run_lines(input, &settings()).unwrap();
        assert_eq!(out.len(), 5);
        let OutputLine::Result(a) = &out[0] else {
            panic!("{:?}", out[0])
        };
        assert_eq!(
            a.rational,
            Some(serde_json::json!({"num": ["6"], "den": ["1", "4"]}))
        );
        assert!(matches!(&out[1], OutputLine::Error(e) if e.line == 2 && e.id.is_null()));
        assert!(matches!(&out[2], OutputLine::Error(e) if e.line == 3));
        let OutputLine::Result(p) = &out[3] else {
            panic!("{:?}", out[3])
        };
        assert_eq!(p.series, Some(Value::String("3 -4 4 -4".into())));
        let w = p.weights.as_ref().unwrap();
        assert_eq!(w.total, Value::String("(3-q)/(1+q)".into()));
        assert!(matches!(&out[4], OutputLine::Error(e) if e.id == "bad"));
    }

    #[test]
    fn empty_input() {
        assert!(run_lines("", &settings()).unwrap().is_empty());
    }
}
