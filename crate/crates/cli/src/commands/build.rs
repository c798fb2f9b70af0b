use std::path::Path;

use adbi::io::{read_csv, write_model, TargetKind};
use adbi::learner::{fit_classifier, fit_regression, Model, Radii};

use crate::{CliError, ModelKind};

/// `R`, `R1,R2,...` or `L1:R1,L2:R2,...`; a single entry covers every axis.
pub fn parse_radii(spec: &str, dimension: usize) -> anyhow::Result<Radii> {
    let bad = || CliError::Usage(format!("bad --radii '{spec}'"));
    let pairs = spec
        .split(',')
        .map(|item| {
            let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
            match item.split_once(':') {
                Some((l, r)) => Ok((num(l)?, num(r)?)),
                None => num(item).map(|r| (r, r)),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pairs = match pairs.len() {
        1 => vec![pairs[0]; dimension],
        n if n == dimension => pairs,
        n => {
            return Err(CliError::Usage(format!("--radii has {n} entries for dimension {dimension}")).into());
        }
    };
    Ok(Radii::Global(pairs))
}

fn describe_radii(r: &[(f64, f64)]) -> String {
    r.iter()
        .map(|(l, r)| format!("({l}, {r})"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(train: &Path, kind: ModelKind, radii: Option<&str>, out: &Path) -> anyhow::Result<()> {
    let model = match kind {
        ModelKind::Grid => {
            if radii.is_some() {
                return Err(CliError::Usage("--radii only applies to --kind classifier".into()).into());
            }
            let data = read_csv(train, TargetKind::Numeric)?;
            let model = fit_regression(&data.numeric_rows()?)?;
            let shape = model.grid().shape();
            let dims: Vec<String> = shape.iter().map(usize::to_string).collect();
            println!("{} axes, {} nodes", shape.len(), dims.join("×"));
            Model::Regression(model)
        }
        ModelKind::Classifier => {
            let data = read_csv(train, TargetKind::Labeled)?;
            let radii = match radii {
                Some(spec) => parse_radii(spec, data.dimension())?,
                None => {
                    let r = Radii::default_for(&data.points)?;
                    if let Radii::Global(pairs) = &r {
                        println!(
                            "default radii (half the median per-axis spacing): {}",
                            describe_radii(pairs)
                        );
                    }
                    r
                }
            };
            let model = fit_classifier(&data.labeled_set(radii)?)?;
            println!("{} examples, dimension {}", model.len(), model.dimension());
            Model::Classifier(model)
        }
    };
    write_model(&model, out)?;
    Ok(())
}
