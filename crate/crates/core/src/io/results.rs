//! Query result CSVs.
//!
//! Regression: `<features>,value,status`. Classification:
//! `<features>,label,degree,status`. Status is one of `ok`, `tie`,
//! `unclassified`, `out_of_domain` or `error`; the value columns are empty
//! for rows that could not be answered.

use std::io::Write;

use crate::error::{Error, Result};
use crate::io::csv::write_error;
use crate::learner::{Model, Prediction};

/// Number formatting for predicted values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueFormat {
    /// Fixed four decimals.
    #[default]
    Fixed4,
    /// Shortest representation that round-trips.
    Full,
}

pub fn format_value(v: f64, fmt: ValueFormat) -> String {
    match fmt {
        ValueFormat::Fixed4 => {
            let s = format!("{v:.4}");
            if s == "-0.0000" {
                "0.0000".to_owned()
            } else {
                s
            }
        }
        ValueFormat::Full => format!("{}", v + 0.0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultKind {
    Regression,
    Classification,
}

impl From<&Model> for ResultKind {
    fn from(m: &Model) -> Self {
        match m {
            Model::Regression(_) => ResultKind::Regression,
            Model::Classifier(_) => ResultKind::Classification,
        }
    }
}

fn status_of(err: &Error) -> &'static str {
    match err {
        Error::OutOfDomain { .. } => "out_of_domain",
        _ => "error",
    }
}

/// Writes one output row per query, in query order.
pub fn write_results<W: Write>(
    out: W,
    kind: ResultKind,
    names: &[String],
    queries: &[Vec<f64>],
    results: &[Result<Prediction>],
    fmt: ValueFormat,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = names.iter().map(String::as_str).collect();
    match kind {
        ResultKind::Regression => header.extend(["value", "status"]),
        ResultKind::Classification => header.extend(["label", "degree", "status"]),
    }
    w.write_record(&header).map_err(write_error)?;

    for (q, r) in queries.iter().zip(results) {
        let mut row: Vec<String> = q.iter().map(|v| format!("{v}")).collect();
        match (kind, r) {
            (_, Ok(Prediction::Regression(v))) => {
                row.push(format_value(*v, fmt));
                row.push("ok".into());
            }
            (_, Ok(Prediction::Classified { label, degree, tie, .. })) => {
                row.push(label.clone());
                row.push(format_value(degree.value(), fmt));
                row.push(if *tie { "tie" } else { "ok" }.into());
            }
            (_, Ok(Prediction::Unclassified)) => {
                row.push("UNCLASSIFIED".into());
                row.push(String::new());
                row.push("unclassified".into());
            }
            (ResultKind::Regression, Err(e)) => {
                row.push(String::new());
                row.push(status_of(e).into());
            }
            (ResultKind::Classification, Err(e)) => {
                row.push(String::new());
                row.push(String::new());
                row.push(status_of(e).into());
            }
        }
        w.write_record(&row).map_err(write_error)?;
    }
    w.flush().map_err(write_error)
}

/// Convenience wrapper returning the CSV bytes.
pub fn results_to_bytes(
    kind: ResultKind,
    names: &[String],
    queries: &[Vec<f64>],
    results: &[Result<Prediction>],
    fmt: ValueFormat,
) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_results(&mut buf, kind, names, queries, results, fmt)?;
    Ok(buf)
}
