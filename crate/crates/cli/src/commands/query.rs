use std::path::Path;

use adbi::io::{read_model, read_queries, write_results, ResultKind, ValueFormat};

use super::output;

/// `threads`: `None` runs sequentially; `Some(None)` uses every core.
pub fn run(
    model: &Path,
    queries: &Path,
    out: Option<&Path>,
    threads: Option<Option<usize>>,
    full_precision: bool,
) -> anyhow::Result<()> {
    let model = read_model(model)?;
    let mut qs = read_queries(queries, Some(model.dimension()))?;
    if qs.names.is_empty() {
        qs.names = (1..=model.dimension()).map(|k| format!("x{k}")).collect();
    }
    let threads = threads.map(|t| t.unwrap_or_else(default_threads));
    let results = model.predict_batch(&qs.points, threads);
    let fmt = if full_precision {
        ValueFormat::Full
    } else {
        ValueFormat::Fixed4
    };
    write_results(
        output(out)?,
        ResultKind::from(&model),
        &qs.names,
        &qs.points,
        &results,
        fmt,
    )?;
    let flagged = results.iter().filter(|r| r.is_err()).count();
    if flagged > 0 {
        eprintln!("{flagged} of {} rows could not be answered", results.len());
    }
    Ok(())
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
