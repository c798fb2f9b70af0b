//! Approximation regions and approximation-degree functions.
//!
//! A value `x` is approximate to a center `x0` when it lies in the closed
//! region `[lo, hi]` around `x0`. The degree of approximation falls off
//! linearly from 1 at the center to 0 at either bound:
//!
//! ```text
//! A(x) = (x - lo) / (x0 - lo)   for x in [lo, x0]
//! A(x) = (x - hi) / (x0 - hi)   for x in [x0, hi]
//! ```
//!
//! For vectors, strict approximation is the component-wise conjunction, and
//! the combined degree is the minimum of the component degrees.

use std::fmt;

use crate::error::{Error, Result};

/// A degree of approximation in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value))
        } else {
            Err(Error::InvalidDegree(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Which side of the center a value lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The closed interval `[lo, hi]` around `center`.
///
/// Bounds are stored directly rather than as radii so that a region built
/// from grid nodes reproduces the node coordinates exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproximationRegion {
    lo: f64,
    center: f64,
    hi: f64,
}

impl ApproximationRegion {
    pub fn from_bounds(lo: f64, center: f64, hi: f64) -> Result<Self> {
        let valid = lo.is_finite() && center.is_finite() && hi.is_finite() && lo <= center && center <= hi && lo < hi;
        if !valid {
            return Err(Error::InvalidRegion {
                left: center - lo,
                right: hi - center,
            });
        }
        Ok(Self { lo, center, hi })
    }

    pub fn from_radii(center: f64, left_radius: f64, right_radius: f64) -> Result<Self> {
        let valid = left_radius >= 0.0 && right_radius >= 0.0 && left_radius + right_radius > 0.0;
        if !valid || !center.is_finite() {
            return Err(Error::InvalidRegion {
                left: left_radius,
                right: right_radius,
            });
        }
        Self::from_bounds(center - left_radius, center, center + right_radius)
    }

    #[inline]
    pub fn center(&self) -> f64 {
        self.center
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn left_radius(&self) -> f64 {
        self.center - self.lo
    }

    #[inline]
    pub fn right_radius(&self) -> f64 {
        self.hi - self.center
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Degree of `x` to the center, or `None` when `x` is outside the region.
    ///
    /// Boundary points are approximate with degree 0. On a zero-radius side
    /// only the center itself is reachable, with degree 1.
    pub fn degree(&self, x: f64) -> Option<Degree> {
        if !self.contains(x) {
            return None;
        }
        let d = if x == self.center {
            1.0
        } else if x < self.center {
            (x - self.lo) / (self.center - self.lo)
        } else {
            (x - self.hi) / (self.center - self.hi)
        };
        Some(Degree(d.clamp(0.0, 1.0)))
    }

    /// Side of the center that `x` lies on. The center itself counts as left
    /// when the left radius is nonzero.
    pub fn side_of(&self, x: f64) -> Side {
        if x < self.center || (x == self.center && self.lo < self.center) {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// The value on `side` whose degree is `d`.
    pub fn inverse_degree(&self, d: Degree, side: Side) -> Result<f64> {
        let d = d.value();
        if d == 1.0 {
            return Ok(self.center);
        }
        let bound = match side {
            Side::Left => self.lo,
            Side::Right => self.hi,
        };
        if bound == self.center {
            return Err(Error::ZeroRadiusSide { degree: d });
        }
        Ok(d * (self.center - bound) + bound)
    }
}

/// Degree of `x` to the center of `region`; `None` means not approximate.
pub fn approximation_degree(region: &ApproximationRegion, x: f64) -> Option<Degree> {
    region.degree(x)
}

pub fn inverse_degree(region: &ApproximationRegion, d: Degree, side: Side) -> Result<f64> {
    region.inverse_degree(d, side)
}

/// Combines per-component degrees of a vector into one degree.
///
/// Any non-approximate component makes the whole vector non-approximate;
/// otherwise the weakest component wins.
pub fn vector_degree(components: &[Option<Degree>]) -> Result<Option<Degree>> {
    if components.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut acc = Degree::ONE;
    for c in components {
        match c {
            None => return Ok(None),
            Some(d) if d.0 < acc.0 => acc = *d,
            Some(_) => {}
        }
    }
    Ok(Some(acc))
}
