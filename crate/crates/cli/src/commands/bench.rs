use std::path::Path;
use std::time::Instant;

use adbi::io::{generate, read_model, read_queries, results_to_bytes, AxisSpec, ResultKind, TestFunction, ValueFormat};
use adbi::learner::{fit_regression, Model};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sha2::{Digest, Sha256};

use crate::CliError;

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Runs the batch once per thread count and returns the shared digest.
fn time_batch(model: &Model, names: &[String], queries: &[Vec<f64>], threads: &[usize]) -> anyhow::Result<String> {
    let mut reference: Option<(usize, String)> = None;
    for &t in threads {
        let start = Instant::now();
        let results = model.predict_batch(queries, Some(t));
        let elapsed = start.elapsed();
        let bytes = results_to_bytes(ResultKind::from(model), names, queries, &results, ValueFormat::Full)?;
        let digest = hex(&Sha256::digest(&bytes));
        let per_query = if queries.is_empty() {
            0.0
        } else {
            elapsed.as_secs_f64() * 1e9 / queries.len() as f64
        };
        println!(
            "threads {t:>3}  queries {}  wall {:.3} ms  per-query {per_query:.1} ns  sha256 {digest}",
            queries.len(),
            elapsed.as_secs_f64() * 1e3
        );
        match &reference {
            None => reference = Some((t, digest)),
            Some((t0, d0)) if *d0 != digest => {
                return Err(
                    CliError::Nondeterministic(format!("{t0} threads gave {d0}, {t} threads gave {digest}")).into(),
                );
            }
            Some(_) => {}
        }
    }
    Ok(reference.map(|(_, d)| d).unwrap_or_default())
}

pub fn run(
    model: Option<&Path>,
    queries: Option<&Path>,
    threads: &[usize],
    sweep_dims: &[usize],
    nodes_per_axis: usize,
    sweep_queries: usize,
) -> anyhow::Result<()> {
    if threads.is_empty() || threads.contains(&0) {
        return Err(CliError::Usage("--threads must list positive counts".into()).into());
    }
    match (model, queries) {
        (Some(m), Some(q)) => {
            let model = read_model(m)?;
            let mut qs = read_queries(q, Some(model.dimension()))?;
            if qs.names.is_empty() {
                qs.names = (1..=model.dimension()).map(|k| format!("x{k}")).collect();
            }
            let digest = time_batch(&model, &qs.names, &qs.points, threads)?;
            println!("identical results across {} configurations ({digest})", threads.len());
        }
        (None, None) if !sweep_dims.is_empty() => {}
        (None, None) => {
            return Err(CliError::Usage("give MODEL and QUERIES, or --sweep-dims".into()).into());
        }
        _ => return Err(CliError::Usage("MODEL and QUERIES go together".into()).into()),
    }

    if !sweep_dims.is_empty() {
        let axis = AxisSpec::with_count(-1.0, 1.0, nodes_per_axis)?;
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for &n in sweep_dims {
            let data = generate(&TestFunction::NegSumSquares, &vec![axis; n])?;
            let model = Model::Regression(fit_regression(&data.numeric_rows()?)?);
            let queries: Vec<Vec<f64>> = (0..sweep_queries)
                .map(|_| (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect())
                .collect();
            let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
            println!("dimension {n}: {} nodes", data.len());
            time_batch(&model, &names, &queries, threads)?;
        }
    }
    Ok(())
}
