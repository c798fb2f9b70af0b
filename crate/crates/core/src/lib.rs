//! Approximation-degree-based (ADB) interpolation and instance-based
//! learning.
//!
//! * [`degree`]: approximation regions and degree functions.
//! * [`grid`]: regular grids of base points.
//! * [`interp`]: 1D ADB interpolation and n-dimensional synthesis by the
//!   sum-times-difference formula.
//! * [`learner`]: grid regression and strict-region classification.
//! * [`io`]: CSV datasets, model files, result files and test functions.
//! * [`report`]: error statistics against a known function.
//!
//! ```
//! use adbi::learner::{fit_regression, Prediction};
//!
//! let rows: Vec<_> = [0.0, 1.0, 2.0].iter().map(|&x| (vec![x], 3.0 * x + 1.0)).collect();
//! let model = fit_regression(&rows).unwrap();
//! assert_eq!(model.predict(&[0.25]).unwrap(), Prediction::Regression(1.75));
//! ```

pub mod degree;
pub mod error;
pub mod grid;
pub mod interp;
pub mod io;
pub mod learner;
pub mod report;

pub use degree::{approximation_degree, inverse_degree, vector_degree, ApproximationRegion, Degree, Side};
pub use error::{Error, ErrorClass, Result};
pub use grid::{Axis, GridIndex, RegularGrid};
pub use interp::{interp_axis, interpolate, interpolate_1d, sum_times_difference};
pub use learner::{
    classify, fit_classifier, fit_regression, predict_regression, ClassifierModel, LabeledExampleSet, Model,
    Prediction, Radii, RegressionModel,
};
