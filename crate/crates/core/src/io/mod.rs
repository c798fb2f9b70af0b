//! Dataset ingestion, model persistence, result output and generators.

pub mod csv;
pub mod generate;
pub mod model_file;
pub mod results;

pub use self::csv::{
    parse_dataset, parse_queries, read_csv, read_queries, write_csv, write_dataset, write_queries, Dataset, QuerySet,
    TargetKind, Targets,
};
pub use generate::{cartesian, generate, AxisSpec, TestFunction};
pub use model_file::{model_to_string, parse_model, read_model, write_model};
pub use results::{format_value, results_to_bytes, write_results, ResultKind, ValueFormat};
