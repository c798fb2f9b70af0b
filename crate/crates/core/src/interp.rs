//! Approximation-degree-based (ADB) interpolation.
//!
//! In one dimension the degree of `x` to its nearest node `x_i` is carried
//! over to the function value: the value whose degree to `y_i` equals the
//! degree of `x` to `x_i`, on the side indicated by the neighbouring node on
//! `x`'s side. Along the half-interval between `x_i` and a neighbour this is
//! the secant through the two nodes.
//!
//! In n dimensions each axis is interpolated separately through the nearest
//! base point, holding the other coordinates fixed, and the per-axis values
//! are synthesised by the sum-times-difference formula
//! `y = sum_j y_j - (n - 1) y_0`.

use crate::degree::{ApproximationRegion, Side};
use crate::error::{Error, Result};
use crate::grid::{Axis, GridIndex, RegularGrid};

/// What to return when no reference point on the query's side is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fallback {
    /// Mean of the two candidate values.
    #[default]
    Average,
    /// The center value `y0`.
    Center,
}

/// Approximate `f(x)` from one known pair `(x0, y0)`.
///
/// `x_region` is the approximation region of `x0` and `y_region` that of
/// `y0`. The degree of `x` to `x0` is transferred to `y`, which yields one
/// candidate below and one above `y0`. A known `reference = (x*, y*)` lying
/// within `x_region` on the same side of `x0` as `x` picks the candidate on
/// `y*`'s side of `y0`; without one, `fallback` decides.
pub fn approximate_value(
    x_region: &ApproximationRegion,
    y_region: &ApproximationRegion,
    x: f64,
    reference: Option<(f64, f64)>,
    fallback: Fallback,
) -> Result<f64> {
    let x0 = x_region.center();
    let y0 = y_region.center();
    let d = x_region.degree(x).ok_or(Error::OutOfDomain {
        axis: 0,
        value: x,
        lo: x_region.lo(),
        hi: x_region.hi(),
    })?;
    if x == x0 {
        return Ok(y0);
    }
    // a zero-radius side collapses its candidate onto y0
    let candidate = |side| y_region.inverse_degree(d, side).unwrap_or(y0);

    let usable = reference.filter(|&(rx, _)| x_region.contains(rx) && rx != x0 && ((rx < x0) == (x < x0)));
    match usable {
        Some((_, ry)) if ry < y0 => Ok(candidate(Side::Left)),
        Some((_, ry)) if ry > y0 => Ok(candidate(Side::Right)),
        Some(_) => Ok(y0),
        None => match fallback {
            Fallback::Average => Ok(0.5 * (candidate(Side::Left) + candidate(Side::Right))),
            Fallback::Center => Ok(y0),
        },
    }
}

/// One-dimensional ADB interpolation from a base node toward one neighbour.
///
/// `x` must lie between the base and the neighbour (inclusive); in practice
/// it lies in the half-interval closer to the base. Returns `base_y` exactly
/// when `x == base_x`.
pub fn interp_axis(base_x: f64, base_y: f64, nbr_x: f64, nbr_y: f64, x: f64) -> Result<f64> {
    if base_x == nbr_x {
        return Err(Error::DegenerateNodes(base_x));
    }
    if x == base_x {
        return Ok(base_y);
    }
    let x_region = if nbr_x < base_x {
        ApproximationRegion::from_bounds(nbr_x, base_x, base_x)?
    } else {
        ApproximationRegion::from_bounds(base_x, base_x, nbr_x)?
    };
    let d = x_region.degree(x).ok_or(Error::OutOfDomain {
        axis: 0,
        value: x,
        lo: x_region.lo(),
        hi: x_region.hi(),
    })?;
    if base_y == nbr_y {
        return Ok(base_y);
    }
    let (y_region, side) = if nbr_y < base_y {
        (ApproximationRegion::from_bounds(nbr_y, base_y, base_y)?, Side::Left)
    } else {
        (ApproximationRegion::from_bounds(base_y, base_y, nbr_y)?, Side::Right)
    };
    y_region.inverse_degree(d, side)
}

/// Neighbour index on `x`'s side of node `base`, or `None` when `x` hits
/// the node exactly.
fn neighbour(axis: &Axis, base: usize, x: f64) -> Option<usize> {
    let bx = axis.nodes()[base];
    if x == bx {
        None
    } else if x > bx {
        Some(base + 1)
    } else {
        Some(base - 1)
    }
}

/// Piecewise ADB interpolation over a single axis.
pub fn interpolate_1d(axis: &Axis, values: &[f64], x: f64) -> Result<f64> {
    if values.len() != axis.len() {
        return Err(Error::ShapeMismatch {
            expected: axis.len(),
            actual: values.len(),
        });
    }
    let (base, _) = axis.nearest(x).ok_or(Error::OutOfDomain {
        axis: 0,
        value: x,
        lo: axis.first(),
        hi: axis.last(),
    })?;
    match neighbour(axis, base, x) {
        None => Ok(values[base]),
        Some(n) => interp_axis(axis.nodes()[base], values[base], axis.nodes()[n], values[n], x),
    }
}

/// `y0 + sum_j (y_j - y0)`, i.e. `sum_j y_j - (n - 1) y0`.
///
/// Accumulating differences keeps the result exactly `y0` when every
/// contribution equals it.
pub fn sum_times_difference(contributions: &[f64], base_value: f64) -> Result<f64> {
    match contributions {
        [] => Err(Error::EmptyInput),
        [only] => Ok(*only),
        _ => Ok(base_value + contributions.iter().map(|&c| c - base_value).sum::<f64>()),
    }
}

/// The one-dimensional value obtained along one axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisContribution {
    pub axis: usize,
    pub value: f64,
    /// Node index of the neighbour used along this axis; equals the base
    /// index when the query coordinate hits the base node.
    pub neighbor_index: usize,
}

/// Everything that goes into one n-dimensional interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct Breakdown {
    pub base: GridIndex,
    pub base_value: f64,
    pub contributions: Vec<AxisContribution>,
    pub value: f64,
}

/// Interpolates `query` and returns the intermediate per-axis values.
pub fn interpolate_breakdown(grid: &RegularGrid, query: &[f64]) -> Result<Breakdown> {
    let (base, _) = grid.nearest_node(query)?;
    let flat = grid.flat_index(&base)?;
    let base_value = grid.values()[flat];
    let strides = grid.strides();

    let mut contributions = Vec::with_capacity(query.len());
    for (j, (&q, axis)) in query.iter().zip(grid.axes()).enumerate() {
        let i = base.as_slice()[j];
        let c = match neighbour(axis, i, q) {
            None => AxisContribution {
                axis: j,
                value: base_value,
                neighbor_index: i,
            },
            Some(n) => {
                let nbr_flat = if n > i { flat + strides[j] } else { flat - strides[j] };
                let value = interp_axis(axis.nodes()[i], base_value, axis.nodes()[n], grid.values()[nbr_flat], q)?;
                AxisContribution {
                    axis: j,
                    value,
                    neighbor_index: n,
                }
            }
        };
        contributions.push(c);
    }
    let values: Vec<f64> = contributions.iter().map(|c| c.value).collect();
    let value = sum_times_difference(&values, base_value)?;
    Ok(Breakdown {
        base,
        base_value,
        contributions,
        value,
    })
}

/// n-dimensional ADB interpolation of `query` over `grid`.
pub fn interpolate(grid: &RegularGrid, query: &[f64]) -> Result<f64> {
    interpolate_breakdown(grid, query).map(|b| b.value)
}
