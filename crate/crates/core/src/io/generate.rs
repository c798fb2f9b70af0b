//! Synthetic datasets sampled on Cartesian grids.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::io::csv::{Dataset, Targets};

/// Built-in test functions.
///
/// * `neg_sum_squares`: `-(x_1^2 + ... + x_n^2)`, any dimension.
/// * `exp3`: `u = z * exp(-x^3 - y^3 - z^3)`, three dimensions. The exponent
///   uses cubes; the customary default domain is `[-2, 2]^3`.
/// * `peaks`: the two-dimensional peaks surface
///   `3(1-x)^2 e^{-x^2-(y+1)^2} - 10(x/5 - x^3 - y^5) e^{-x^2-y^2} - e^{-(x+1)^2-y^2}/3`.
/// * `affine:c0,c1,...,cn`: `c0 + c1 x_1 + ... + cn x_n`.
#[derive(Debug, Clone, PartialEq)]
pub enum TestFunction {
    NegSumSquares,
    Exp3,
    Peaks,
    Affine { intercept: f64, slopes: Vec<f64> },
}

impl TestFunction {
    /// Required dimension, if fixed.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            TestFunction::NegSumSquares => None,
            TestFunction::Exp3 => Some(3),
            TestFunction::Peaks => Some(2),
            TestFunction::Affine { slopes, .. } => Some(slopes.len()),
        }
    }

    pub fn eval(&self, p: &[f64]) -> Result<f64> {
        if let Some(n) = self.dimension() {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: p.len(),
                });
            }
        }
        Ok(match self {
            TestFunction::NegSumSquares => -p.iter().map(|x| x * x).sum::<f64>(),
            TestFunction::Exp3 => {
                let (x, y, z) = (p[0], p[1], p[2]);
                z * (-x.powi(3) - y.powi(3) - z.powi(3)).exp()
            }
            TestFunction::Peaks => {
                let (x, y) = (p[0], p[1]);
                3.0 * (1.0 - x).powi(2) * (-x * x - (y + 1.0).powi(2)).exp()
                    - 10.0 * (x / 5.0 - x.powi(3) - y.powi(5)) * (-x * x - y * y).exp()
                    - (-(x + 1.0).powi(2) - y * y).exp() / 3.0
            }
            TestFunction::Affine { intercept, slopes } => {
                intercept + slopes.iter().zip(p).map(|(c, x)| c * x).sum::<f64>()
            }
        })
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "neg_sum_squares" => return Ok(TestFunction::NegSumSquares),
            "exp3" => return Ok(TestFunction::Exp3),
            "peaks" => return Ok(TestFunction::Peaks),
            _ => {}
        }
        if let Some(coeffs) = s.strip_prefix("affine:") {
            let c = coeffs
                .split(',')
                .map(|t| t.trim().parse::<f64>().ok().filter(|v| v.is_finite()))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidSpec(format!("bad affine coefficients '{coeffs}'")))?;
            if c.len() < 2 {
                return Err(Error::InvalidSpec(
                    "affine needs an intercept and at least one slope".into(),
                ));
            }
            return Ok(TestFunction::Affine {
                intercept: c[0],
                slopes: c[1..].to_vec(),
            });
        }
        Err(Error::UnknownFunction(s.to_owned()))
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction::NegSumSquares => f.write_str("neg_sum_squares"),
            TestFunction::Exp3 => f.write_str("exp3"),
            TestFunction::Peaks => f.write_str("peaks"),
            TestFunction::Affine { intercept, slopes } => {
                write!(f, "affine:{intercept}")?;
                for s in slopes {
                    write!(f, ",{s}")?;
                }
                Ok(())
            }
        }
    }
}

/// Node list for one axis: `START:STOP:STEP` or `START:STOP:n=COUNT`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl AxisSpec {
    pub fn with_count(start: f64, stop: f64, count: usize) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(Error::InvalidSpec(format!(
                "axis range {start}..{stop} is empty or not finite"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidSpec(format!("axis needs at least 2 nodes, got {count}")));
        }
        Ok(Self { start, stop, count })
    }

    /// Evenly spaced nodes; the last equals `stop` exactly.
    pub fn nodes(&self) -> Vec<f64> {
        let last = self.count - 1;
        let span = self.stop - self.start;
        (0..self.count)
            .map(|i| {
                if i == last {
                    self.stop
                } else {
                    self.start + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

impl fmt::Display for AxisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:n={}", self.start, self.stop, self.count)
    }
}

impl FromStr for AxisSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidSpec(format!(
                "bad axis spec '{s}' (want START:STOP:STEP or START:STOP:n=COUNT)"
            ))
        };
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [start, stop, third] = parts[..] else {
            return Err(bad());
        };
        let start: f64 = start.trim().parse().map_err(|_| bad())?;
        let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
        let third = third.trim();
        if let Some(count) = third.strip_prefix("n=") {
            let count: usize = count.trim().parse().map_err(|_| bad())?;
            return Self::with_count(start, stop, count);
        }
        let step: f64 = third.parse().map_err(|_| bad())?;
        if !(step.is_finite() && step > 0.0) || !(start.is_finite() && stop.is_finite()) {
            return Err(bad());
        }
        let intervals = (stop - start) / step;
        let rounded = intervals.round();
        if rounded.is_nan() || rounded < 1.0 || (intervals - rounded).abs() > 1e-9 * rounded.max(1.0) || rounded > 1e8 {
            return Err(Error::InvalidSpec(format!(
                "step {step} does not divide {start}..{stop} into a whole number of intervals"
            )));
        }
        Self::with_count(start, stop, rounded as usize + 1)
    }
}

/// Cartesian product of the axis nodes, last axis varying fastest.
pub fn cartesian(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![Vec::with_capacity(axes.len())];
    for nodes in axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                nodes.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Samples `function` on the grid spanned by `axes`.
pub fn generate(function: &TestFunction, axes: &[AxisSpec]) -> Result<Dataset> {
    if axes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(n) = function.dimension() {
        if n != axes.len() {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: axes.len(),
            });
        }
    }
    let nodes: Vec<Vec<f64>> = axes.iter().map(AxisSpec::nodes).collect();
    let points = cartesian(&nodes);
    let values = points.iter().map(|p| function.eval(p)).collect::<Result<Vec<_>>>()?;
    Ok(Dataset {
        feature_names: (1..=axes.len()).map(|k| format!("x{k}")).collect(),
        target_name: "f".into(),
        points,
        targets: Targets::Numeric(values),
    })
}
