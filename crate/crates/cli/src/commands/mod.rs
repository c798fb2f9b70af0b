pub mod bench;
pub mod build;
pub mod eval;
pub mod gen;
pub mod plotdata;
pub mod query;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use adbi::io::AxisSpec;

use crate::CliError;

/// One spec per axis, or a single spec replicated over `dims` axes.
pub fn expand_axes(specs: &[AxisSpec], dims: Option<usize>) -> anyhow::Result<Vec<AxisSpec>> {
    match (specs.len(), dims) {
        (0, _) => Err(CliError::Usage("at least one axis spec is required".into()).into()),
        (_, Some(0)) => Err(CliError::Usage("--dims must be positive".into()).into()),
        (1, Some(n)) => Ok(vec![specs[0]; n]),
        (k, Some(n)) if k != n => Err(CliError::Usage(format!("{k} axis specs given for --dims {n}")).into()),
        _ => Ok(specs.to_vec()),
    }
}

pub fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| adbi::Error::Io {
            path: p.to_owned(),
            message: e.to_string(),
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
