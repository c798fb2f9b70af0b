use std::path::Path;

use adbi::io::{generate, write_dataset, AxisSpec, TestFunction};

use super::{expand_axes, output};

pub fn run(function: &TestFunction, axes: &[AxisSpec], dims: Option<usize>, out: Option<&Path>) -> anyhow::Result<()> {
    let axes = expand_axes(axes, dims.or(function.dimension().filter(|_| axes.len() == 1)))?;
    let dataset = generate(function, &axes)?;
    write_dataset(&dataset, output(out)?)?;
    if let Some(p) = out {
        eprintln!("wrote {} rows to {}", dataset.len(), p.display());
    }
    Ok(())
}
