//! Versioned plain-text model files.
//!
//! ```text
//! adbi-model 1.0
//! kind grid
//! dimension 2
//! axis 21 -20.0 -18.0 ... 20.0
//! axis 21 -20.0 -18.0 ... 20.0
//! values 441
//! -800.0 -724.0 ...            (row-major, one line per last-axis run)
//! end
//! ```
//!
//! ```text
//! adbi-model 1.0
//! kind classifier
//! dimension 2
//! examples 2
//! example <label> <x_1> .. <x_n> <left_1> <right_1> .. <left_n> <right_n>
//! end
//! ```
//!
//! Reals are written as the shortest decimal that parses back to the same
//! `f64`, so a reload is bit-exact. Labels are percent-encoded: bytes other
//! than ASCII alphanumerics and `-_.:+/` become `%XX`, and the empty label is
//! written as a lone `%`. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::RegularGrid;
use crate::learner::{fit_classifier, LabeledExampleSet, Model, Radii, RegressionModel};

pub const MAGIC: &str = "adbi-model";
pub const FORMAT_MAJOR: u32 = 1;
pub const FORMAT_MINOR: u32 = 0;

fn encode_label(label: &str) -> String {
    if label.is_empty() {
        return "%".into();
    }
    let mut out = String::with_capacity(label.len());
    for b in label.bytes() {
        if b.is_ascii_alphanumeric() || b"-_.:+/".contains(&b) {
            out.push(b as char);
        } else {
            let _ = write!(out, "%{b:02X}");
        }
    }
    out
}

fn decode_label(token: &str) -> Result<String> {
    if token == "%" {
        return Ok(String::new());
    }
    let bytes = token.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = token
                .get(i + 1..i + 3)
                .and_then(|h| u8::from_str_radix(h, 16).ok())
                .ok_or_else(|| Error::CorruptFile(format!("bad label escape in '{token}'")))?;
            out.push(hex);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).map_err(|_| Error::CorruptFile(format!("label '{token}' is not UTF-8")))
}

fn real(v: f64) -> String {
    format!("{v:?}")
}

pub fn model_to_string(model: &Model) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{MAGIC} {FORMAT_MAJOR}.{FORMAT_MINOR}");
    match model {
        Model::Regression(m) => {
            let grid = m.grid();
            let _ = writeln!(s, "kind grid");
            let _ = writeln!(s, "dimension {}", grid.dimension());
            for axis in grid.axes() {
                let _ = write!(s, "axis {}", axis.len());
                for &v in axis.nodes() {
                    let _ = write!(s, " {}", real(v));
                }
                s.push('\n');
            }
            let _ = writeln!(s, "values {}", grid.values().len());
            let run = grid.axes().last().map_or(1, |a| a.len());
            for chunk in grid.values().chunks(run) {
                let line: Vec<String> = chunk.iter().map(|&v| real(v)).collect();
                let _ = writeln!(s, "{}", line.join(" "));
            }
        }
        Model::Classifier(m) => {
            let _ = writeln!(s, "kind classifier");
            let _ = writeln!(s, "dimension {}", m.dimension());
            let _ = writeln!(s, "examples {}", m.len());
            for e in m.examples() {
                let _ = write!(s, "example {}", encode_label(e.label));
                for &v in e.point {
                    let _ = write!(s, " {}", real(v));
                }
                for &(l, r) in e.radii {
                    let _ = write!(s, " {} {}", real(l), real(r));
                }
                s.push('\n');
            }
        }
    }
    s.push_str("end\n");
    s
}

pub fn write_model(model: &Model, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, model_to_string(model)).map_err(|e| Error::io(path, e))
}

pub fn read_model(path: impl AsRef<Path>) -> Result<Model> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| Error::CorruptFile("not UTF-8".into()))?;
    parse_model(text)
}

/// Non-blank, non-comment lines as `(line number, fields)`.
type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Tokens<'a> {
    lines: std::iter::Peekable<TokenLines<'a>>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
                .map(|(i, l)| (i, l.split_ascii_whitespace().collect())),
        );
        Self { lines: it.peekable() }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.lines
            .next()
            .ok_or_else(|| Error::CorruptFile(format!("truncated: expected {what}")))
    }

    /// Next line, which must start with `keyword`; returns the remaining tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, toks) = self.next_line(keyword)?;
        if toks.first() != Some(&keyword) {
            return Err(Error::CorruptFile(format!(
                "line {n}: expected '{keyword}', found '{}'",
                toks.first().unwrap_or(&"")
            )));
        }
        Ok((n, toks[1..].to_vec()))
    }
}

fn parse_count(tok: Option<&&str>, line: usize, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| Error::CorruptFile(format!("line {line}: bad {what} count")))
}

fn parse_real(tok: &str, line: usize) -> Result<f64> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::CorruptFile(format!("line {line}: '{tok}' is not a finite real"))),
    }
}

fn corrupt(err: Error) -> Error {
    match err {
        Error::CorruptFile(_) => err,
        other => Error::CorruptFile(other.to_string()),
    }
}

fn check_version(toks: &[&str], line: usize) -> Result<()> {
    if toks.len() != 2 || toks[0] != MAGIC {
        return Err(Error::CorruptFile(format!("line {line}: missing '{MAGIC}' header")));
    }
    let version = toks[1];
    let major = version
        .split_once('.')
        .map_or(version, |(m, _)| m)
        .parse::<u32>()
        .map_err(|_| Error::CorruptFile(format!("line {line}: bad version '{version}'")))?;
    if major != FORMAT_MAJOR {
        return Err(Error::SchemaVersionMismatch {
            found: version.to_owned(),
            supported: FORMAT_MAJOR,
        });
    }
    Ok(())
}

/// Parses a model file's contents.
pub fn parse_model(text: &str) -> Result<Model> {
    let mut t = Tokens::new(text);
    let (n, header) = t.next_line("header")?;
    check_version(&header, n)?;

    let (n, kind) = t.keyword("kind")?;
    let (dn, dim) = t.keyword("dimension")?;
    let dimension = parse_count(dim.first(), dn, "dimension")?;
    if dimension == 0 {
        return Err(Error::CorruptFile(format!("line {dn}: dimension must be positive")));
    }
    let model = match kind.as_slice() {
        ["grid"] => parse_grid(&mut t, dimension)?,
        ["classifier"] => parse_classifier(&mut t, dimension)?,
        _ => return Err(Error::CorruptFile(format!("line {n}: unknown model kind"))),
    };
    let (_, rest) = t.keyword("end")?;
    if !rest.is_empty() || t.lines.peek().is_some() {
        return Err(Error::CorruptFile("content after 'end'".into()));
    }
    Ok(model)
}

fn parse_grid(t: &mut Tokens<'_>, dimension: usize) -> Result<Model> {
    let mut axes = Vec::with_capacity(dimension.min(64));
    for _ in 0..dimension {
        let (n, toks) = t.keyword("axis")?;
        let len = parse_count(toks.first(), n, "axis")?;
        if toks.len() != len + 1 {
            return Err(Error::CorruptFile(format!("line {n}: axis declares {len} nodes")));
        }
        let nodes = toks[1..].iter().map(|s| parse_real(s, n)).collect::<Result<Vec<_>>>()?;
        axes.push(nodes);
    }
    let (n, toks) = t.keyword("values")?;
    let count = parse_count(toks.first(), n, "value")?;
    let mut values = Vec::with_capacity(count.min(1 << 16));
    while values.len() < count {
        let (n, toks) = t.next_line("values")?;
        if toks.first() == Some(&"end") {
            return Err(Error::CorruptFile(format!(
                "line {n}: {} of {count} values present",
                values.len()
            )));
        }
        for tok in toks {
            values.push(parse_real(tok, n)?);
        }
    }
    if values.len() != count {
        return Err(Error::CorruptFile(format!("more than {count} values")));
    }
    let grid = RegularGrid::new(axes, values).map_err(corrupt)?;
    Ok(Model::Regression(RegressionModel::from_grid(grid)))
}

fn parse_classifier(t: &mut Tokens<'_>, dimension: usize) -> Result<Model> {
    let (n, toks) = t.keyword("examples")?;
    let count = parse_count(toks.first(), n, "example")?;
    let cap = count.min(1 << 16);
    let mut points = Vec::with_capacity(cap);
    let mut labels = Vec::with_capacity(cap);
    let mut radii = Vec::with_capacity(cap);
    let fields = dimension
        .checked_mul(3)
        .and_then(|f| f.checked_add(1))
        .ok_or_else(|| Error::CorruptFile(format!("dimension {dimension} is too large")))?;
    for _ in 0..count {
        let (n, toks) = t.keyword("example")?;
        if toks.len() != fields {
            return Err(Error::CorruptFile(format!("line {n}: expected {fields} fields")));
        }
        labels.push(decode_label(toks[0])?);
        let nums = toks[1..].iter().map(|s| parse_real(s, n)).collect::<Result<Vec<_>>>()?;
        points.push(nums[..dimension].to_vec());
        radii.push(nums[dimension..].chunks(2).map(|c| (c[0], c[1])).collect());
    }
    let model = fit_classifier(&LabeledExampleSet {
        points,
        labels,
        radii: Radii::PerExample(radii),
    })
    .map_err(corrupt)?;
    Ok(Model::Classifier(model))
}

/// Convenience accessor used by front ends.
pub fn model_kind(model: &Model) -> &'static str {
    match model {
        Model::Regression(_) => "grid",
        Model::Classifier(_) => "classifier",
    }
}
