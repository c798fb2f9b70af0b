//! Error statistics of a fitted model against a known function.

use crate::error::Result;
use crate::io::generate::TestFunction;
use crate::learner::{Model, Prediction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub samples: usize,
    /// Samples outside the model's domain; not counted in the statistics.
    pub skipped: usize,
    pub max_abs: f64,
    pub rms: f64,
    /// Sample at which `max_abs` was reached.
    pub worst_index: Option<usize>,
}

/// Compares `model` with `oracle` at every sample point.
pub fn error_report(model: &Model, oracle: &TestFunction, samples: &[Vec<f64>]) -> Result<ErrorReport> {
    let mut report = ErrorReport {
        samples: 0,
        skipped: 0,
        max_abs: 0.0,
        rms: 0.0,
        worst_index: None,
    };
    let mut sum_sq = 0.0;
    for (i, p) in samples.iter().enumerate() {
        let want = oracle.eval(p)?;
        let got = match model.predict(p) {
            Ok(Prediction::Regression(v)) => v,
            Ok(_) | Err(crate::Error::OutOfDomain { .. }) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let err = (got - want).abs();
        report.samples += 1;
        sum_sq += err * err;
        if report.worst_index.is_none() || err > report.max_abs {
            report.max_abs = err;
            report.worst_index = Some(i);
        }
    }
    if report.samples > 0 {
        report.rms = (sum_sq / report.samples as f64).sqrt();
    }
    Ok(report)
}
