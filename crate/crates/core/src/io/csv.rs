//! CSV datasets: a header row, feature columns, then one target column.

use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::learner::{LabeledExampleSet, Radii};

/// How to read the target column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetKind {
    Numeric,
    Labeled,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Targets {
    Numeric(Vec<f64>),
    Labeled(Vec<String>),
}

impl Targets {
    pub fn len(&self) -> usize {
        match self {
            Targets::Numeric(v) => v.len(),
            Targets::Labeled(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> TargetKind {
        match self {
            Targets::Numeric(_) => TargetKind::Numeric,
            Targets::Labeled(_) => TargetKind::Labeled,
        }
    }
}

/// Rows of `(point, target)` sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub feature_names: Vec<String>,
    pub target_name: String,
    pub points: Vec<Vec<f64>>,
    pub targets: Targets,
}

impl Dataset {
    pub fn dimension(&self) -> usize {
        self.feature_names.len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(point, value)` pairs for grid fitting.
    pub fn numeric_rows(&self) -> Result<Vec<(Vec<f64>, f64)>> {
        match &self.targets {
            Targets::Numeric(v) => Ok(self.points.iter().cloned().zip(v.iter().copied()).collect()),
            Targets::Labeled(_) => Err(Error::InvalidSpec("dataset has labels, not numeric targets".into())),
        }
    }

    pub fn labeled_set(&self, radii: Radii) -> Result<LabeledExampleSet> {
        let labels = match &self.targets {
            Targets::Labeled(l) => l.clone(),
            Targets::Numeric(v) => v.iter().map(|x| x.to_string()).collect(),
        };
        Ok(LabeledExampleSet {
            points: self.points.clone(),
            labels,
            radii,
        })
    }
}

fn position_line(pos: Option<&csv::Position>) -> u64 {
    pos.map_or(0, csv::Position::line)
}

fn map_csv_error(err: csv::Error) -> Error {
    let line = position_line(err.position());
    match err.into_kind() {
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => Error::DimensionMismatch {
            expected: expected_len as usize,
            actual: len as usize,
        },
        csv::ErrorKind::Io(e) => Error::Io {
            path: "<input>".into(),
            message: e.to_string(),
        },
        csv::ErrorKind::Utf8 { err, .. } => Error::Parse {
            line,
            column: err.field() + 1,
            message: "invalid UTF-8".into(),
        },
        other => Error::Parse {
            line,
            column: 0,
            message: format!("{other:?}"),
        },
    }
}

/// Failure while writing CSV output.
pub(crate) fn write_error(err: impl std::fmt::Display) -> Error {
    Error::Io {
        path: "<output>".into(),
        message: err.to_string(),
    }
}

fn reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(input)
}

fn parse_real(field: &str, line: u64, column: usize) -> Result<f64> {
    match field.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse {
            line,
            column,
            message: format!("'{field}' is not a finite real number"),
        }),
    }
}

/// Reads a dataset from any CSV source.
pub fn parse_dataset<R: Read>(input: R, kind: TargetKind) -> Result<Dataset> {
    let mut rdr = reader(input);
    let headers = rdr.headers().map_err(map_csv_error)?.clone();
    if headers.is_empty() || (headers.len() == 1 && headers[0].is_empty()) {
        return Err(Error::EmptyFile);
    }
    if headers.len() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: headers.len(),
        });
    }
    let n = headers.len() - 1;
    let feature_names: Vec<String> = headers.iter().take(n).map(str::to_owned).collect();
    let target_name = headers[n].to_owned();

    let mut points = Vec::new();
    let mut numeric = Vec::new();
    let mut labels = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(map_csv_error)?;
        let line = position_line(record.position());
        let point = record
            .iter()
            .take(n)
            .enumerate()
            .map(|(c, f)| parse_real(f, line, c + 1))
            .collect::<Result<Vec<_>>>()?;
        let target = &record[n];
        match kind {
            TargetKind::Numeric => numeric.push(parse_real(target, line, n + 1)?),
            TargetKind::Labeled => labels.push(target.to_owned()),
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(Error::EmptyFile);
    }
    let targets = match kind {
        TargetKind::Numeric => Targets::Numeric(numeric),
        TargetKind::Labeled => Targets::Labeled(labels),
    };
    Ok(Dataset {
        feature_names,
        target_name,
        points,
        targets,
    })
}

pub fn read_csv(path: impl AsRef<Path>, kind: TargetKind) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_dataset(BufReader::new(file), kind)
}

pub fn write_dataset<W: Write>(dataset: &Dataset, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = dataset.feature_names.clone();
    header.push(dataset.target_name.clone());
    w.write_record(&header).map_err(write_error)?;
    for (i, p) in dataset.points.iter().enumerate() {
        let mut row: Vec<String> = p.iter().map(f64::to_string).collect();
        row.push(match &dataset.targets {
            Targets::Numeric(v) => v[i].to_string(),
            Targets::Labeled(l) => l[i].clone(),
        });
        w.write_record(&row).map_err(write_error)?;
    }
    w.flush().map_err(write_error)
}

pub fn write_csv(dataset: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_dataset(dataset, std::io::BufWriter::new(file))
}

/// Query points: a header naming the features, then one point per row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct QuerySet {
    pub names: Vec<String>,
    pub points: Vec<Vec<f64>>,
}

/// Reads query points. An empty input is an empty query set. When
/// `dimension` is given the column count must match it.
pub fn parse_queries<R: Read>(input: R, dimension: Option<usize>) -> Result<QuerySet> {
    let mut rdr = reader(input);
    let headers = rdr.headers().map_err(map_csv_error)?.clone();
    if headers.is_empty() || (headers.len() == 1 && headers[0].is_empty()) {
        return Ok(QuerySet::default());
    }
    if let Some(n) = dimension {
        if headers.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: headers.len(),
            });
        }
    }
    let names: Vec<String> = headers.iter().map(str::to_owned).collect();
    let mut points = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(map_csv_error)?;
        let line = position_line(record.position());
        let point = record
            .iter()
            .enumerate()
            .map(|(c, f)| parse_real(f, line, c + 1))
            .collect::<Result<Vec<_>>>()?;
        points.push(point);
    }
    Ok(QuerySet { names, points })
}

pub fn read_queries(path: impl AsRef<Path>, dimension: Option<usize>) -> Result<QuerySet> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_queries(BufReader::new(file), dimension)
}

pub fn write_queries<W: Write>(queries: &QuerySet, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&queries.names).map_err(write_error)?;
    for p in &queries.points {
        w.write_record(p.iter().map(f64::to_string)).map_err(write_error)?;
    }
    w.flush().map_err(write_error)
}
