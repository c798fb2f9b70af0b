use std::path::Path;

use adbi::io::{cartesian, generate, read_model, AxisSpec, TestFunction};
use adbi::learner::{fit_regression, Model};
use adbi::report::{error_report, ErrorReport};

use super::expand_axes;
use crate::CliError;

fn print_report(label: &str, r: &ErrorReport) {
    println!(
        "{label}  max_abs {:.6e}  rms {:.6e}  samples {}  skipped {}",
        r.max_abs, r.rms, r.samples, r.skipped
    );
}

pub fn run(
    model: Option<&Path>,
    oracle: &TestFunction,
    samples: &[AxisSpec],
    nodes: &[AxisSpec],
    dims: Option<usize>,
    tolerance: Option<f64>,
) -> anyhow::Result<()> {
    let mut reports = Vec::new();
    match (model, nodes.is_empty()) {
        (Some(_), false) => {
            return Err(CliError::Usage("give either a model file or --nodes, not both".into()).into());
        }
        (None, true) => {
            return Err(CliError::Usage("a model file or at least one --nodes spec is required".into()).into());
        }
        (Some(path), true) => {
            let model = read_model(path)?;
            let sample_axes = expand_axes(samples, dims.or(Some(model.dimension())).filter(|_| samples.len() == 1))?;
            let points = cartesian(&sample_axes.iter().map(AxisSpec::nodes).collect::<Vec<_>>());
            let r = error_report(&model, oracle, &points)?;
            print_report(&path.display().to_string(), &r);
            reports.push(r);
        }
        (None, false) => {
            let n = dims.or(oracle.dimension()).unwrap_or(samples.len().max(1));
            let sample_axes = expand_axes(samples, (samples.len() == 1).then_some(n))?;
            let points = cartesian(&sample_axes.iter().map(AxisSpec::nodes).collect::<Vec<_>>());
            for spec in nodes {
                let data = generate(oracle, &vec![*spec; n])?;
                let model = Model::Regression(fit_regression(&data.numeric_rows()?)?);
                let r = error_report(&model, oracle, &points)?;
                print_report(&format!("nodes {spec}"), &r);
                reports.push(r);
            }
            for (pair, specs) in reports.windows(2).zip(nodes.windows(2)) {
                let ratio = pair[0].max_abs / pair[1].max_abs;
                println!("ratio {} -> {}  {ratio:.4}", specs[0], specs[1]);
            }
        }
    }
    if let Some(tol) = tolerance {
        if let Some(worst) = reports.iter().map(|r| r.max_abs).reduce(f64::max) {
            if worst > tol {
                return Err(CliError::ToleranceExceeded {
                    max_abs: worst,
                    tolerance: tol,
                }
                .into());
            }
        }
        println!("within tolerance {tol}");
    }
    Ok(())
}
