//! Exact lambda coefficients against the four estimates, with window
//! flags and a worst-deviation summary.

use mpf_kernel::error_scale_r;
use mpf_smooth::{
    lambda_estimate, ArithmeticMode, CoefficientSeries, EstimateParams, LambdaVariant,
};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

pub fn run(
    config: &JobConfig,
    y: u64,
    k_max: u64,
    small_k_a: f64,
    big_k_eps: f64,
    rational: bool,
) -> Result<(), CliError> {
    let kernel = config.kernel()?;
    let params = EstimateParams {
        small_k_a,
        big_k_eps,
        ..EstimateParams::default()
    };
    let mode = if rational {
        ArithmeticMode::Rational
    } else {
        ArithmeticMode::Float(256)
    };
    let degree = CoefficientSeries::default_degree(y).max(k_max as usize);
    let nu = config.nu;
    let series = CoefficientSeries::build(nu, y, degree, mode)?;

    let mut table = Table::new(vec![
        "k",
        "exact",
        "unif",
        "small_k",
        "big_k",
        "medium_k",
        "omega_law",
        "R_scale",
        "windows",
    ]);
    let mut worst = 0f64;
    for k in 1..=k_max {
        let exact = series.coeff_f64(k as usize);
        let mut cells = vec![Cell::U64(k), Cell::F64(exact)];
        let mut windows = Vec::new();
        for variant in [
            LambdaVariant::Uniform,
            LambdaVariant::SmallK,
            LambdaVariant::BigK,
            LambdaVariant::MediumK,
            LambdaVariant::OmegaLaw,
        ] {
            match lambda_estimate(nu, k, y as f64, variant, &kernel, &params) {
                Ok(est) => {
                    if variant == LambdaVariant::Uniform && exact > 0.0 {
                        let dev = (est.value_f64() / exact - 1.0).abs()
                            / error_scale_r(k, y as f64)?;
                        worst = worst.max(dev);
                    }
                    windows.push(format!("{variant}:in"));
                    cells.push(Cell::F64(est.value_f64()));
                }
                Err(_) => {
                    cells.push(Cell::Na);
                }
            }
        }
        cells.push(Cell::F64(error_scale_r(k, y as f64)?));
        cells.push(Cell::Str(windows.join(" ")));
        table.push(cells);
    }
    // summary: worst normalized uniform deviation across the table
    table.push(vec![
        Cell::Str("max_dev_over_R".into()),
        Cell::F64(worst),
        Cell::Na,
        Cell::Na,
        Cell::Na,
        Cell::Na,
        Cell::Na,
        Cell::Na,
        Cell::Str(format!("nu={nu}")),
    ]);
    table.emit(config.out.as_deref(), config.format)
}
