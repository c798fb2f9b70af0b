use std::path::Path;

use adbi::io::{cartesian, read_model, write_results, AxisSpec, ResultKind, ValueFormat};
use adbi::learner::Model;

use super::{expand_axes, output};
use crate::CliError;

const DEFAULT_NODES: usize = 81;

fn default_grid(model: &Model) -> anyhow::Result<Vec<AxisSpec>> {
    let bounds: Vec<(f64, f64)> = match model {
        Model::Regression(m) => m.grid().axes().iter().map(|a| (a.first(), a.last())).collect(),
        Model::Classifier(m) => (0..m.dimension())
            .map(|k| {
                m.examples().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), e| {
                    (lo.min(e.point[k] - e.radii[k].0), hi.max(e.point[k] + e.radii[k].1))
                })
            })
            .collect(),
    };
    Ok(bounds
        .into_iter()
        .map(|(lo, hi)| AxisSpec::with_count(lo, hi, DEFAULT_NODES))
        .collect::<Result<_, _>>()?)
}

/// `AXIS=COORD` where AXIS is x, y, z, a 1-based index or `xK`.
fn parse_slice(spec: &str, dimension: usize) -> anyhow::Result<(usize, f64)> {
    let bad = || CliError::Usage(format!("bad --slice '{spec}' (want AXIS=COORD, e.g. z=0)"));
    let (axis, coord) = spec.split_once('=').ok_or_else(bad)?;
    let axis = axis.trim();
    let k = match axis {
        "x" => 0,
        "y" => 1,
        "z" => 2,
        _ => {
            let digits = axis.strip_prefix('x').unwrap_or(axis);
            digits
                .parse::<usize>()
                .ok()
                .and_then(|i| i.checked_sub(1))
                .ok_or_else(bad)?
        }
    };
    if k >= dimension {
        return Err(CliError::Usage(format!("--slice axis {axis} exceeds dimension {dimension}")).into());
    }
    let coord: f64 = coord.trim().parse().map_err(|_| bad())?;
    Ok((k, coord))
}

pub fn run(
    model_path: &Path,
    grid: &[AxisSpec],
    slices: &[String],
    flat: bool,
    out: Option<&Path>,
    full_precision: bool,
) -> anyhow::Result<()> {
    let model = read_model(model_path)?;
    let n = model.dimension();
    if n > 3 && !flat {
        return Err(adbi::Error::UnsupportedDimension(n).into());
    }
    let axes = if grid.is_empty() {
        default_grid(&model)?
    } else {
        expand_axes(grid, (grid.len() == 1).then_some(n))?
    };
    if axes.len() != n {
        return Err(CliError::Usage(format!("{} grid specs for a {n}-dimensional model", axes.len())).into());
    }
    let nodes: Vec<Vec<f64>> = axes.iter().map(AxisSpec::nodes).collect();

    let points = if slices.is_empty() {
        cartesian(&nodes)
    } else {
        let mut points = Vec::new();
        for s in slices {
            let (k, c) = parse_slice(s, n)?;
            let mut plane = nodes.clone();
            plane[k] = vec![c];
            points.extend(cartesian(&plane));
        }
        points
    };

    let results: Vec<_> = points.iter().map(|p| model.predict(p)).collect();
    let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let fmt = if full_precision {
        ValueFormat::Full
    } else {
        ValueFormat::Fixed4
    };
    write_results(output(out)?, ResultKind::from(&model), &names, &points, &results, fmt)?;
    eprintln!("{} rows", points.len());
    Ok(())
}
