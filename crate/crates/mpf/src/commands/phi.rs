//! Exact rough-number counts against the phi law.

use mpf_law::predict_phi;

use crate::commands::compare::to_exact_nu;
use crate::config::JobConfig;
use crate::error::CliError;
use crate::sieve_store;
use crate::table::{Cell, Table};

pub fn run(
    config: &JobConfig,
    y: u64,
    k_min: u32,
    k_max: u32,
    window_a: f64,
) -> Result<(), CliError> {
    let x_int = config.require_x_int()?;
    let x = config.require_x()?;
    let kernel = config.kernel()?;
    let sieve = sieve_store::acquire(config, x_int)?;
    let mut table = Table::new(vec![
        "nu",
        "y",
        "k",
        "exact",
        "predicted",
        "ratio",
        "error_scale",
        "in_window",
    ]);
    for k in k_min..=k_max {
        let exact = sieve.count_phi(x_int, y, k, to_exact_nu(config.nu))?;
        let pred = predict_phi(config.nu, x, y as f64, k, window_a, &kernel)?;
        let ratio = if pred.value_f64() > 0.0 {
            Cell::F64(exact as f64 / pred.value_f64())
        } else {
            Cell::Na
        };
        table.push(vec![
            Cell::Str(config.nu.to_string()),
            Cell::U64(y),
            Cell::U64(k as u64),
            Cell::U64(exact),
            Cell::F64(pred.value_f64()),
            ratio,
            Cell::F64(pred.error_scale),
            Cell::Str(pred.in_window.to_string()),
        ]);
    }
    table.emit(config.out.as_deref(), config.format)
}
