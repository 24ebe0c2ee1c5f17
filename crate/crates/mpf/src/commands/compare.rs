//! Exact median counts against the local-law prediction, one row per prime
//! in the requested beta window, with a geometric-mean summary per regime.

use std::collections::BTreeMap;

use rayon::prelude::*;

use mpf_law::{predict_local_law, RegimeParams};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::sieve_store;
use crate::table::{Cell, Table};

pub fn run(config: &JobConfig, beta_min: f64, beta_max: f64) -> Result<(), CliError> {
    let x_int = config.require_x_int()?;
    let x = config.require_x()?;
    let kernel = config.kernel()?;
    let sieve = sieve_store::acquire(config, x_int)?;
    let spectrum = sieve.median_spectrum(x_int, to_exact_nu(config.nu))?;

    let log2x = if x >= 16.0 { x.ln().ln() } else { f64::NAN };
    let in_window = |p: u64| -> bool {
        let beta = (p as f64).ln().ln() / log2x;
        beta.is_nan() || (beta >= beta_min && beta <= beta_max)
    };
    let primes: Vec<u64> = sieve.primes().filter(|&p| in_window(p)).collect();

    let rows: Vec<Vec<Cell>> = primes
        .par_iter()
        .map(|&p| {
            let exact = spectrum.get(&p).map(|c| (c.total, c.odd_part, c.even_part));
            let (total, odd, even) = exact.unwrap_or((0, 0, 0));
            let beta = (p as f64).ln().ln() / log2x;
            match RegimeParams::from_xp(x, p)
                .and_then(|params| predict_local_law(config.nu, &params, &kernel))
            {
                Ok(pred) => {
                    let predicted = pred.value_f64();
                    let ratio = if predicted > 0.0 {
                        Cell::F64(total as f64 / predicted)
                    } else {
                        Cell::Na
                    };
                    vec![
                        Cell::Str("data".into()),
                        Cell::U64(p),
                        Cell::F64(beta),
                        Cell::F64(beta - 0.2),
                        Cell::Str(pred.regime.label.to_string()),
                        Cell::U64(total),
                        Cell::U64(odd),
                        Cell::U64(even),
                        Cell::F64(predicted),
                        ratio,
                        Cell::F64(pred.error_scale),
                        Cell::Str("ok".into()),
                    ]
                }
                Err(e) => vec![
                    Cell::Str("data".into()),
                    Cell::U64(p),
                    Cell::F64(beta),
                    Cell::F64(beta - 0.2),
                    Cell::Na,
                    Cell::U64(total),
                    Cell::U64(odd),
                    Cell::U64(even),
                    Cell::Na,
                    Cell::Na,
                    Cell::Na,
                    Cell::Str(e.to_string()),
                ],
            }
        })
        .collect();

    let mut table = Table::new(vec![
        "kind",
        "p",
        "beta",
        "delta",
        "regime",
        "exact",
        "odd",
        "even",
        "predicted",
        "ratio",
        "error_scale",
        "status",
    ]);
    // geometric mean of exact/predicted per regime over rows with both sides positive
    let mut acc: BTreeMap<String, (f64, u64)> = BTreeMap::new();
    for row in &rows {
        if let (Cell::Str(regime), Cell::F64(ratio)) = (&row[4], &row[9]) {
            if *ratio > 0.0 {
                let slot = acc.entry(regime.clone()).or_insert((0.0, 0));
                slot.0 += ratio.ln();
                slot.1 += 1;
            }
        }
    }
    for row in rows {
        table.push(row);
    }
    for (regime, (ln_sum, n)) in acc {
        let mut row = vec![Cell::Na; 12];
        row[0] = Cell::Str("summary".into());
        row[4] = Cell::Str(regime);
        row[9] = Cell::F64((ln_sum / n as f64).exp());
        row[11] = Cell::Str(format!("geometric mean of {n} ratios"));
        table.push(row);
    }
    table.emit(config.out.as_deref(), config.format)
}

pub(crate) fn to_exact_nu(nu: mpf_kernel::Nu) -> mpf_exact::Nu {
    match nu {
        mpf_kernel::Nu::Omega => mpf_exact::Nu::Omega,
        mpf_kernel::Nu::BigOmega => mpf_exact::Nu::BigOmega,
    }
}
