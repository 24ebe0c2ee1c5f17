//! Compute the constants table, print each value with its certified digit
//! count, and certify h against its six printed decimals.

use rug::Float;

use mpf_kernel::{EulerProductRequest, ProductKind};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

const H_REFERENCE: f64 = 1.201304;
const H_TOLERANCE: f64 = 5e-7;

pub fn run(config: &JobConfig) -> Result<(), CliError> {
    let kernel = config.kernel()?;
    let c = kernel.constants();
    let digits = c.achieved_precision();
    let shown = digits.min(40) as usize;

    let mut table = Table::new(vec!["constant", "value", "certified_digits"]);
    for (name, v) in [
        ("euler_gamma", c.euler_gamma()),
        ("mertens_kappa", c.mertens()),
        ("h", c.h_const()),
        ("c", c.c_const()),
    ] {
        println!("{name:>14} = {} ({digits} digits)", v.to_string_radix(10, Some(shown)));
        table.push(vec![
            Cell::Str(name.into()),
            Cell::Str(v.to_string_radix(10, Some(shown))),
            Cell::U64(digits as u64),
        ]);
    }

    // identity check: H_Omega(1) = e^gamma
    let h_omega_1 = kernel
        .euler_product(EulerProductRequest::new(
            ProductKind::BigOmega,
            1.0,
            config.prime_cutoff,
        ))?
        .value;
    let e_gamma = Float::with_val(h_omega_1.prec(), c.euler_gamma()).exp();
    let identity_gap = (Float::with_val(h_omega_1.prec(), &h_omega_1 - &e_gamma) / e_gamma)
        .abs()
        .to_f64();
    println!("H_Omega(1)/e^gamma - 1 = {identity_gap:e}");
    table.push(vec![
        Cell::Str("H_Omega(1)_identity_gap".into()),
        Cell::F64(identity_gap),
        Cell::U64(digits as u64),
    ]);

    // certification: h = H*_Omega(2) at the requested prime cutoff
    let h_at_cutoff = kernel
        .euler_product(EulerProductRequest::new(
            ProductKind::BigOmegaStar,
            2.0,
            config.prime_cutoff,
        ))?
        .to_f64();
    table.push(vec![
        Cell::Str("h_at_cutoff".into()),
        Cell::F64(h_at_cutoff),
        Cell::U64(digits as u64),
    ]);
    table.emit(config.out.as_deref(), config.format)?;

    if (h_at_cutoff - H_REFERENCE).abs() > H_TOLERANCE {
        return Err(CliError::Certification(format!(
            "h = {h_at_cutoff} differs from {H_REFERENCE} by more than {H_TOLERANCE}"
        )));
    }
    if identity_gap > 1e-12 {
        return Err(CliError::Certification(format!(
            "H_Omega(1) identity gap {identity_gap:e} above 1e-12"
        )));
    }
    println!("certified: h within {H_TOLERANCE} of {H_REFERENCE}");
    Ok(())
}
