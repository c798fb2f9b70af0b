//! Regularly distributed example data: an n-dimensional grid of base points.

use crate::degree::{vector_degree, ApproximationRegion, Degree};
use crate::error::{Error, Result};

/// Strictly increasing node coordinates along one axis, at least two of them.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    nodes: Vec<f64>,
}

impl Axis {
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        Self::validate(0, nodes)
    }

    fn validate(axis: usize, nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidAxis {
                axis,
                reason: format!("needs at least 2 nodes, got {}", nodes.len()),
            });
        }
        if let Some(bad) = nodes.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidAxis {
                axis,
                reason: format!("node {bad} is not finite"),
            });
        }
        if let Some(i) = nodes.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAxis {
                axis,
                reason: format!("nodes not strictly increasing at position {}", i + 1),
            });
        }
        Ok(Self { nodes })
    }

    #[inline]
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn first(&self) -> f64 {
        self.nodes[0]
    }

    #[inline]
    pub fn last(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Approximation region of node `i`: `[x_{i-1}, x_{i+1}]`, one-sided at
    /// the two ends.
    pub fn node_region(&self, i: usize) -> Result<ApproximationRegion> {
        let n = self.nodes.len();
        if i >= n {
            return Err(Error::IndexOutOfRange {
                axis: 0,
                index: i,
                len: n,
            });
        }
        let center = self.nodes[i];
        let lo = if i == 0 { center } else { self.nodes[i - 1] };
        let hi = if i + 1 == n { center } else { self.nodes[i + 1] };
        ApproximationRegion::from_bounds(lo, center, hi)
    }

    /// Node with the highest degree for `x`, ties going to the lower index.
    ///
    /// Only the two nodes bracketing `x` have regions containing it.
    pub fn nearest(&self, x: f64) -> Option<(usize, Degree)> {
        if !(self.first() <= x && x <= self.last()) {
            return None;
        }
        let upper = self.nodes.partition_point(|&n| n <= x);
        let i = upper.saturating_sub(1).min(self.nodes.len() - 2);
        // both bracketing regions contain x
        let lower = self.node_region(i).ok()?.degree(x)?;
        let higher = self.node_region(i + 1).ok()?.degree(x)?;
        if lower >= higher {
            Some((i, lower))
        } else {
            Some((i + 1, higher))
        }
    }
}

/// One index per axis, identifying a base point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridIndex(pub Vec<usize>);

impl GridIndex {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Axes plus a dense, row-major value tensor (last axis varies fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct RegularGrid {
    axes: Vec<Axis>,
    values: Vec<f64>,
    strides: Vec<usize>,
}

impl RegularGrid {
    pub fn new(axes: Vec<Vec<f64>>, values: Vec<f64>) -> Result<Self> {
        let axes = axes
            .into_iter()
            .enumerate()
            .map(|(k, nodes)| Axis::validate(k, nodes))
            .collect::<Result<Vec<_>>>()?;
        Self::from_axes(axes, values)
    }

    pub fn from_axes(axes: Vec<Axis>, values: Vec<f64>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::EmptyInput);
        }
        let expected = axes
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
            .ok_or(Error::ShapeMismatch {
                expected: usize::MAX,
                actual: values.len(),
            })?;
        if values.len() != expected {
            return Err(Error::ShapeMismatch {
                expected,
                actual: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        let mut strides = vec![1usize; axes.len()];
        for k in (0..axes.len() - 1).rev() {
            strides[k] = strides[k + 1] * axes[k + 1].len();
        }
        Ok(Self { axes, values, strides })
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.axes.len()
    }

    #[inline]
    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(Axis::len).collect()
    }

    #[inline]
    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn flat_index(&self, idx: &GridIndex) -> Result<usize> {
        let idx = idx.as_slice();
        if idx.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: idx.len(),
            });
        }
        let mut flat = 0;
        for (k, (&i, axis)) in idx.iter().zip(&self.axes).enumerate() {
            if i >= axis.len() {
                return Err(Error::IndexOutOfRange {
                    axis: k,
                    index: i,
                    len: axis.len(),
                });
            }
            flat += i * self.strides[k];
        }
        Ok(flat)
    }

    pub fn value_at(&self, idx: &GridIndex) -> Result<f64> {
        Ok(self.values[self.flat_index(idx)?])
    }

    /// Coordinates of the base point at `idx`.
    pub fn point_at(&self, idx: &GridIndex) -> Result<Vec<f64>> {
        self.flat_index(idx)?;
        Ok(idx
            .as_slice()
            .iter()
            .zip(&self.axes)
            .map(|(&i, a)| a.nodes()[i])
            .collect())
    }

    pub fn node_region(&self, axis: usize, i: usize) -> Result<ApproximationRegion> {
        let a = self
            .axes
            .get(axis)
            .ok_or(Error::IndexOutOfRange { axis, index: i, len: 0 })?;
        a.node_region(i).map_err(|e| match e {
            Error::IndexOutOfRange { index, len, .. } => Error::IndexOutOfRange { axis, index, len },
            other => other,
        })
    }

    pub(crate) fn check_query(&self, query: &[f64]) -> Result<()> {
        if query.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: query.len(),
            });
        }
        for (k, (&q, axis)) in query.iter().zip(&self.axes).enumerate() {
            if !(axis.first() <= q && q <= axis.last()) {
                return Err(Error::OutOfDomain {
                    axis: k,
                    value: q,
                    lo: axis.first(),
                    hi: axis.last(),
                });
            }
        }
        Ok(())
    }

    /// The base point whose strict approximation degree to `query` is
    /// highest, with that degree. Ties on an axis go to the lower index.
    ///
    /// Adjacent node degrees on an axis sum to one, so the per-axis nearest
    /// nodes jointly maximise the minimum-combined degree.
    pub fn nearest_node(&self, query: &[f64]) -> Result<(GridIndex, Degree)> {
        self.check_query(query)?;
        let mut idx = Vec::with_capacity(query.len());
        let mut degrees = Vec::with_capacity(query.len());
        for (&q, axis) in query.iter().zip(&self.axes) {
            let (i, d) = axis
                .nearest(q)
                .expect("component already checked against the axis range");
            idx.push(i);
            degrees.push(Some(d));
        }
        let d = vector_degree(&degrees)?.expect("all components are approximate");
        Ok((GridIndex(idx), d))
    }
}
