use crate::config::JobConfig;
use crate::error::CliError;
use crate::sieve_store;
use crate::table::{Cell, Table};

pub fn run(config: &JobConfig) -> Result<(), CliError> {
    let limit = config.require_x_int()?;
    let start = std::time::Instant::now();
    let sieve = sieve_store::acquire(config, limit)?;
    let elapsed = start.elapsed();
    let primes = sieve.primes().count() as u64;
    let mut table = Table::new(vec!["limit", "primes", "bytes", "seconds"]);
    table.push(vec![
        Cell::U64(sieve.limit()),
        Cell::U64(primes),
        Cell::U64((sieve.limit() + 1) * 4),
        Cell::F64(elapsed.as_secs_f64()),
    ]);
    table.emit(config.out.as_deref(), config.format)
}
