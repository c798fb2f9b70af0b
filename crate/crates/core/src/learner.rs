//! Instance-based learners built on approximation degrees.
//!
//! Regression stores regularly distributed examples as a grid and answers
//! queries by ADB interpolation. Classification stores scattered labelled
//! examples, each with a box-shaped strict approximation region, and returns
//! the label of the containing box with the highest degree, or nothing.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::degree::{vector_degree, ApproximationRegion, Degree};
use crate::error::{Error, Result};
use crate::grid::RegularGrid;
use crate::interp;

/// Outcome of a single query.
#[derive(Debug, Clone, PartialEq)]
pub enum Prediction {
    Regression(f64),
    Classified {
        label: String,
        degree: Degree,
        example_index: usize,
        /// Another containing example with a different label reached the same degree.
        tie: bool,
    },
    Unclassified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionModel {
    grid: RegularGrid,
}

impl RegressionModel {
    pub fn from_grid(grid: RegularGrid) -> Self {
        Self { grid }
    }

    pub fn grid(&self) -> &RegularGrid {
        &self.grid
    }

    pub fn dimension(&self) -> usize {
        self.grid.dimension()
    }

    pub fn predict(&self, query: &[f64]) -> Result<Prediction> {
        interp::interpolate(&self.grid, query).map(Prediction::Regression)
    }
}

fn bits_key(p: &[f64]) -> Vec<u64> {
    // +0.0 and -0.0 are the same coordinate
    p.iter().map(|&v| (v + 0.0).to_bits()).collect()
}

/// Builds a grid model from `(point, value)` examples that cover every
/// combination of the observed per-axis coordinates exactly once.
pub fn fit_regression(examples: &[(Vec<f64>, f64)]) -> Result<RegressionModel> {
    let (first, _) = examples.first().ok_or(Error::EmptyInput)?;
    let n = first.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut seen = HashSet::with_capacity(examples.len());
    for (row, (p, v)) in examples.iter().enumerate() {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        if !v.is_finite() {
            return Err(Error::NonFiniteValue(row));
        }
        if !seen.insert(bits_key(p)) {
            return Err(Error::DuplicatePoint(row));
        }
    }

    let mut axes: Vec<Vec<f64>> = (0..n)
        .map(|k| examples.iter().map(|(p, _)| p[k] + 0.0).collect())
        .collect();
    for nodes in &mut axes {
        nodes.sort_by(f64::total_cmp);
        nodes.dedup();
    }
    let shape: Vec<usize> = axes.iter().map(Vec::len).collect();
    let expected = shape
        .iter()
        .try_fold(1usize, |acc, &len| acc.checked_mul(len))
        .unwrap_or(usize::MAX);
    if expected != examples.len() {
        return Err(Error::IncompleteGrid {
            expected,
            present: examples.len(),
        });
    }

    let mut values = vec![0.0; expected];
    for (p, v) in examples {
        let mut flat = 0;
        for (k, nodes) in axes.iter().enumerate() {
            let i = nodes
                .binary_search_by(|probe| probe.total_cmp(&(p[k] + 0.0)))
                .expect("coordinate taken from this axis");
            flat = flat * shape[k] + i;
        }
        values[flat] = *v;
    }
    Ok(RegressionModel {
        grid: RegularGrid::new(axes, values)?,
    })
}

pub fn predict_regression(model: &RegressionModel, query: &[f64]) -> Result<Prediction> {
    model.predict(query)
}

/// Per-axis `(left, right)` radii of the strict approximation boxes.
#[derive(Debug, Clone, PartialEq)]
pub enum Radii {
    Global(Vec<(f64, f64)>),
    PerExample(Vec<Vec<(f64, f64)>>),
}

impl Radii {
    /// Half the median distance, per axis, from each example's coordinate
    /// to the nearest different coordinate on that axis.
    ///
    /// A heuristic only; fails when an axis has a single distinct value.
    pub fn default_for(points: &[Vec<f64>]) -> Result<Radii> {
        let n = points.first().map(Vec::len).ok_or(Error::EmptyInput)?;
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        let mut radii = Vec::with_capacity(n);
        for k in 0..n {
            let mut distinct: Vec<f64> = points.iter().map(|p| p[k]).collect();
            distinct.sort_by(f64::total_cmp);
            distinct.dedup();
            if distinct.len() < 2 || distinct.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidRadii(format!(
                    "cannot infer a radius for axis {k}: fewer than two distinct finite coordinates"
                )));
            }
            let mut spacing: Vec<f64> = points
                .iter()
                .map(|p| {
                    let i = distinct.partition_point(|&v| v < p[k]);
                    let below = i.checked_sub(1).map(|j| p[k] - distinct[j]);
                    let above = distinct.get(i + 1).map(|&v| v - p[k]);
                    match (below, above) {
                        (Some(a), Some(b)) => a.min(b),
                        (Some(a), None) => a,
                        (None, Some(b)) => b,
                        (None, None) => unreachable!("axis has at least two distinct values"),
                    }
                })
                .collect();
            spacing.sort_by(f64::total_cmp);
            let m = spacing.len();
            let median = if m % 2 == 1 {
                spacing[m / 2]
            } else {
                0.5 * (spacing[m / 2 - 1] + spacing[m / 2])
            };
            let r = 0.5 * median;
            radii.push((r, r));
        }
        Ok(Radii::Global(radii))
    }

    fn for_example(&self, i: usize) -> &[(f64, f64)] {
        match self {
            Radii::Global(r) => r,
            Radii::PerExample(r) => &r[i],
        }
    }
}

/// Scattered labelled examples with their strict approximation radii.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledExampleSet {
    pub points: Vec<Vec<f64>>,
    pub labels: Vec<String>,
    pub radii: Radii,
}

#[derive(Debug, Clone, PartialEq)]
struct BoxedExample {
    point: Vec<f64>,
    label: String,
    radii: Vec<(f64, f64)>,
    regions: Vec<ApproximationRegion>,
}

/// Queryable classifier. Examples keep their input order; that order is
/// the tie-break.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    examples: Vec<BoxedExample>,
    dimension: usize,
    /// Example indices sorted by the lower bound of their box on axis 0.
    by_lower: Vec<(f64, usize)>,
    max_width: f64,
}

/// One stored example as seen from outside the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleView<'a> {
    pub point: &'a [f64],
    pub label: &'a str,
    pub radii: &'a [(f64, f64)],
}

pub fn fit_classifier(set: &LabeledExampleSet) -> Result<ClassifierModel> {
    let n = set.points.first().map(Vec::len).ok_or(Error::EmptyInput)?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if set.labels.len() != set.points.len() {
        return Err(Error::DimensionMismatch {
            expected: set.points.len(),
            actual: set.labels.len(),
        });
    }
    if let Radii::PerExample(r) = &set.radii {
        if r.len() != set.points.len() {
            return Err(Error::InvalidRadii(format!(
                "{} radius sets for {} examples",
                r.len(),
                set.points.len()
            )));
        }
    }
    let mut examples = Vec::with_capacity(set.points.len());
    for (i, (p, label)) in set.points.iter().zip(&set.labels).enumerate() {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        let radii = set.radii.for_example(i);
        if radii.len() != n {
            return Err(Error::InvalidRadii(format!(
                "example {i}: {} radius pairs for dimension {n}",
                radii.len()
            )));
        }
        let mut regions = Vec::with_capacity(n);
        for (k, (&c, &(l, r))) in p.iter().zip(radii).enumerate() {
            let positive = l > 0.0 && r > 0.0 && l.is_finite() && r.is_finite();
            if !positive {
                return Err(Error::InvalidRadii(format!(
                    "example {i}, axis {k}: radii ({l}, {r}) must be positive and finite"
                )));
            }
            if !c.is_finite() {
                return Err(Error::InvalidRadii(format!(
                    "example {i}, axis {k}: coordinate {c} is not finite"
                )));
            }
            regions.push(ApproximationRegion::from_radii(c, l, r)?);
        }
        examples.push(BoxedExample {
            point: p.clone(),
            label: label.clone(),
            radii: radii.to_vec(),
            regions,
        });
    }
    Ok(ClassifierModel::index(examples, n))
}

impl ClassifierModel {
    fn index(examples: Vec<BoxedExample>, dimension: usize) -> Self {
        let mut by_lower: Vec<(f64, usize)> = examples
            .iter()
            .enumerate()
            .map(|(i, e)| (e.regions[0].lo(), i))
            .collect();
        by_lower.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let max_width = examples
            .iter()
            .map(|e| e.regions[0].hi() - e.regions[0].lo())
            .fold(0.0, f64::max);
        Self {
            examples,
            dimension,
            by_lower,
            max_width,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn examples(&self) -> impl Iterator<Item = ExampleView<'_>> {
        self.examples.iter().map(|e| ExampleView {
            point: &e.point,
            label: &e.label,
            radii: &e.radii,
        })
    }

    fn check_dimension(&self, query: &[f64]) -> Result<()> {
        if query.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                actual: query.len(),
            });
        }
        Ok(())
    }

    /// Strict degree of `query` to example `i`, `None` outside its box.
    pub fn degree_to(&self, i: usize, query: &[f64]) -> Option<Degree> {
        let per_axis: Vec<Option<Degree>> = self.examples[i]
            .regions
            .iter()
            .zip(query)
            .map(|(r, &q)| r.degree(q))
            .collect();
        vector_degree(&per_axis).ok().flatten()
    }

    fn decide(&self, query: &[f64], candidates: impl Iterator<Item = usize>) -> Prediction {
        let mut hits: Vec<(usize, Degree)> = candidates
            .filter_map(|i| self.degree_to(i, query).map(|d| (i, d)))
            .collect();
        hits.sort_by_key(|&(i, _)| i);
        let mut best: Option<(usize, Degree)> = None;
        for &(i, d) in &hits {
            if best.is_none_or(|(_, b)| d > b) {
                best = Some((i, d));
            }
        }
        match best {
            None => Prediction::Unclassified,
            Some((i, d)) => {
                let label = &self.examples[i].label;
                let tie = hits.iter().any(|&(j, dj)| dj == d && self.examples[j].label != *label);
                Prediction::Classified {
                    label: label.clone(),
                    degree: d,
                    example_index: i,
                    tie,
                }
            }
        }
    }

    /// Reference lookup: scans every example.
    pub fn classify_linear(&self, query: &[f64]) -> Result<Prediction> {
        self.check_dimension(query)?;
        Ok(self.decide(query, 0..self.examples.len()))
    }

    /// Indexed lookup; returns the same answer as [`Self::classify_linear`].
    pub fn classify(&self, query: &[f64]) -> Result<Prediction> {
        self.check_dimension(query)?;
        let q0 = query[0];
        if !q0.is_finite() {
            return Ok(Prediction::Unclassified);
        }
        // any box containing q0 starts no further than its width below q0
        let start = self.by_lower.partition_point(|&(lo, _)| lo < q0 - 2.0 * self.max_width);
        let end = self.by_lower.partition_point(|&(lo, _)| lo <= q0);
        let candidates = self.by_lower[start..end.max(start)].iter().map(|&(_, i)| i);
        Ok(self.decide(query, candidates))
    }
}

pub fn classify(model: &ClassifierModel, query: &[f64]) -> Result<Prediction> {
    model.classify(query)
}

/// Either kind of fitted model.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Regression(RegressionModel),
    Classifier(ClassifierModel),
}

impl Model {
    pub fn dimension(&self) -> usize {
        match self {
            Model::Regression(m) => m.dimension(),
            Model::Classifier(m) => m.dimension(),
        }
    }

    pub fn predict(&self, query: &[f64]) -> Result<Prediction> {
        match self {
            Model::Regression(m) => m.predict(query),
            Model::Classifier(m) => m.classify(query),
        }
    }

    /// Predicts every query, in order. `threads = None` runs on the calling
    /// thread; otherwise a dedicated pool of that many workers is used.
    /// Results never depend on the thread count.
    pub fn predict_batch(&self, queries: &[Vec<f64>], threads: Option<usize>) -> Vec<Result<Prediction>> {
        match threads {
            None | Some(0) | Some(1) => queries.iter().map(|q| self.predict(q)).collect(),
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| queries.par_iter().map(|q| self.predict(q)).collect()),
                Err(_) => queries.iter().map(|q| self.predict(q)).collect(),
            },
        }
    }
}
