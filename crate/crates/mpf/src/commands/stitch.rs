//! Boundary agreement of the alternate laws along x = e^{e^k}.

use mpf_law::{stitch_gap, StitchSide};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};
use crate::StitchSideArg;

pub fn run(config: &JobConfig, k_min: u32, k_max: u32, side: StitchSideArg) -> Result<(), CliError> {
    if k_min < 2 || k_min > k_max {
        return Err(CliError::Config(format!(
            "need 2 <= k_min <= k_max, got [{k_min}, {k_max}]"
        )));
    }
    let kernel = config.kernel()?;
    let side = match side {
        StitchSideArg::Upper => StitchSide::Upper,
        StitchSideArg::Lower => StitchSide::Lower,
    };
    let mut table = Table::new(vec![
        "k",
        "log_x",
        "prime_digits",
        "delta_p",
        "gap",
        "scale_out",
        "scale_in",
    ]);
    for k in k_min..=k_max {
        let r = stitch_gap((k as f64).exp(), side, &kernel)?;
        table.push(vec![
            Cell::U64(k as u64),
            Cell::F64(r.log_x),
            Cell::U64(r.prime_digits as u64),
            Cell::F64(r.delta_p),
            Cell::F64(r.gap),
            Cell::F64(r.scale_out),
            Cell::F64(r.scale_in),
        ]);
    }
    table.emit(config.out.as_deref(), config.format)
}
