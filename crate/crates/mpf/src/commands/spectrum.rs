use crate::commands::compare::to_exact_nu;
use crate::config::JobConfig;
use crate::error::CliError;
use crate::sieve_store;
use crate::table::{Cell, Table};

pub fn run(config: &JobConfig) -> Result<(), CliError> {
    let x = config.require_x_int()?;
    let sieve = sieve_store::acquire(config, x)?;
    let spectrum = sieve.median_spectrum(x, to_exact_nu(config.nu))?;
    let log2x = (x as f64).ln().ln();
    let mut table = Table::new(vec!["p", "beta", "total", "odd", "even"]);
    for (p, c) in &spectrum {
        table.push(vec![
            Cell::U64(*p),
            Cell::F64((*p as f64).ln().ln() / log2x),
            Cell::U64(c.total),
            Cell::U64(c.odd_part),
            Cell::U64(c.even_part),
        ]);
    }
    table.emit(config.out.as_deref(), config.format)
}
