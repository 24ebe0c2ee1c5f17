//! Mass identities, the enumeration cross-oracle, and agreement between the
//! exact tables and the asymptotic estimates.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use mpf_kernel::{error_scale_r, Kernel, Nu};
use mpf_smooth::{
    lambda_estimate, ArithmeticMode, CoefficientSeries, Coefficients, EstimateParams,
    LambdaVariant,
};

fn kernel() -> &'static Kernel {
    static KERNEL: OnceLock<Kernel> = OnceLock::new();
    KERNEL.get_or_init(Kernel::with_default_precision)
}

fn primes_to(y: u64) -> Vec<u64> {
    (2..=y).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

#[test]
fn omega_mass_identity_exact() {
    // sum_k lambda_omega(k, y) = prod_{q <= y} q/(q-1), exactly in Q.
    for y in [10u64, 50, 100] {
        let primes = primes_to(y);
        let t =
            CoefficientSeries::build(Nu::Omega, y, primes.len() + 2, ArithmeticMode::Rational)
                .unwrap();
        let Coefficients::Rational(c) = &t.coeffs else {
            panic!()
        };
        let mass: BigRational = c.iter().sum();
        let mut product = BigRational::one();
        for q in primes {
            product *= BigRational::new(BigInt::from(q), BigInt::from(q - 1));
        }
        assert_eq!(mass, product, "mass identity at y = {y}");
    }
}

#[test]
fn big_omega_mass_gap_halves() {
    // sum_{k <= K} lambda_Omega(k, y) climbs to prod (1 - 1/q)^{-1} with the
    // gap shrinking at least geometrically (ratio <= 0.55 per unit of K).
    let y = 50u64;
    let primes = primes_to(y);
    let mut product = BigRational::one();
    for &q in &primes {
        product *= BigRational::new(BigInt::from(q), BigInt::from(q - 1));
    }
    let log2y = ((y as f64).ln()).ln();
    let k_start = (4.0 * log2y).ceil() as usize;
    let t = CoefficientSeries::build(Nu::BigOmega, y, k_start + 8, ArithmeticMode::Rational)
        .unwrap();
    let Coefficients::Rational(c) = &t.coeffs else {
        panic!()
    };
    let mut gaps = Vec::new();
    for top in k_start..=k_start + 8 {
        let mass: BigRational = c[..=top].iter().sum();
        let gap = &product - &mass;
        assert!(gap > BigRational::new(BigInt::from(0), BigInt::from(1)));
        gaps.push(gap);
    }
    for w in gaps.windows(2) {
        let ratio = &w[1] / &w[0];
        let as_f64 = ratio.numer().to_string().parse::<f64>().unwrap()
            / ratio.denom().to_string().parse::<f64>().unwrap();
        assert!(as_f64 <= 0.55, "gap ratio {as_f64}");
    }
}

/// Depth-first enumeration of y-smooth integers n <= bound with nu(n) = k,
/// independent of the generating-product code path.
fn enumerate_smooth_sum(y: u64, k: u32, bound: u64, nu: Nu) -> f64 {
    let primes = primes_to(y);
    let mut total = 0.0;
    // stack of (value, prime index, remaining count)
    fn walk(n: u64, idx: usize, left: u32, primes: &[u64], bound: u64, nu: Nu, total: &mut f64) {
        if left == 0 {
            *total += 1.0 / n as f64;
            return;
        }
        for (j, &q) in primes.iter().enumerate().skip(idx) {
            if n > bound / q {
                break;
            }
            match nu {
                Nu::BigOmega => walk(n * q, j, left - 1, primes, bound, nu, total),
                Nu::Omega => {
                    // consume one distinct prime at any multiplicity
                    let mut m = n * q;
                    while m <= bound {
                        walk(m, j + 1, left - 1, primes, bound, nu, total);
                        if m > bound / q {
                            break;
                        }
                        m *= q;
                    }
                }
            }
        }
    }
    walk(1, 0, k, &primes, bound, nu, &mut total);
    total
}

#[test]
fn table_dominates_enumerated_partial_sums() {
    // The table value is the full infinite sum, so it must exceed any
    // finite enumeration, with the gap shrinking as the bound grows.
    for nu in [Nu::Omega, Nu::BigOmega] {
        for y in [20u64, 50] {
            let t = CoefficientSeries::build(nu, y, 8, ArithmeticMode::Rational).unwrap();
            for k in 1..=6u32 {
                let table = t.coeff_f64(k as usize);
                let small = enumerate_smooth_sum(y, k, 100_000, nu);
                let big = enumerate_smooth_sum(y, k, 1_000_000, nu);
                assert!(
                    table >= small - 1e-12,
                    "table below enumeration: nu={nu:?} y={y} k={k}"
                );
                assert!(table >= big - 1e-12);
                assert!(
                    table - big <= table - small + 1e-12,
                    "gap did not shrink: nu={nu:?} y={y} k={k}"
                );
            }
        }
    }
}

#[test]
fn uniform_estimate_tracks_exact_table_in_provable_window() {
    // The printed remainder R(k, y) absorbs the 1/ln y floor of the
    // prime-number-theorem input only while Q(k/Y) <= 1/2, i.e. k/Y <~ 2.16;
    // beyond that the saturation |lambda 2^k / (h ln^2 y) - 1| ~ c/ln y
    // dominates any multiple of R. Calibrate inside the provable window.
    let kernel = kernel();
    let params = EstimateParams::default();
    for y in [1_000u64, 10_000] {
        let log2y = ((y as f64).ln()).ln();
        let k_top = (4.0 * log2y).floor() as u64; // mu = k/Y <= 2
        let degree = CoefficientSeries::default_degree(y);
        let t =
            CoefficientSeries::build(Nu::BigOmega, y, degree, ArithmeticMode::Float(256)).unwrap();
        for k in 1..=k_top {
            let exact = t.coeff_f64(k as usize);
            let est =
                lambda_estimate(Nu::BigOmega, k, y as f64, LambdaVariant::Uniform, kernel, &params)
                    .unwrap();
            let dev = (est.value_f64() / exact - 1.0).abs();
            let scale = error_scale_r(k, y as f64).unwrap();
            assert!(
                dev <= 5.0 * scale,
                "uniform estimate at y = {y}, k = {k}: dev {dev}, scale {scale}"
            );
        }
    }
}

#[test]
fn uniform_k1_closed_form_and_prime_sum() {
    // lambda_Omega(1, y) = sum_{q <= y} 1/q exactly; the uniform estimate
    // reduces to H*_Omega(2/(1+Y)) (1+Y)/2.
    let kernel = kernel();
    let params = EstimateParams::default();
    let y = 100_000u64;
    let exact: f64 = primes_to(y).iter().map(|&q| 1.0 / q as f64).sum();
    let est = lambda_estimate(
        Nu::BigOmega,
        1,
        y as f64,
        LambdaVariant::Uniform,
        kernel,
        &params,
    )
    .unwrap();
    let scale = error_scale_r(1, y as f64).unwrap();
    let dev = (est.value_f64() / exact - 1.0).abs();
    assert!(dev <= 5.0 * scale, "dev {dev} vs scale {scale}");
}

#[test]
fn window_gating_errors() {
    let kernel = kernel();
    let params = EstimateParams::default();
    let y = 1000.0;
    // log2y ~ 1.93: small-k admits nothing above 2*1.93 - 1.39 ~ 2.47
    assert!(lambda_estimate(Nu::BigOmega, 10, y, LambdaVariant::SmallK, kernel, &params).is_err());
    assert!(lambda_estimate(Nu::BigOmega, 2, y, LambdaVariant::BigK, kernel, &params).is_err());
    assert!(lambda_estimate(Nu::BigOmega, 1, y, LambdaVariant::MediumK, kernel, &params).is_err());
    assert!(lambda_estimate(Nu::Omega, 3, y, LambdaVariant::Uniform, kernel, &params).is_err());
    assert!(lambda_estimate(Nu::BigOmega, 3, y, LambdaVariant::OmegaLaw, kernel, &params).is_err());
    // frozen value: h e^8 / 2^16 at ln y = e^4, k = 16
    let y_big = std::f64::consts::E.powf(std::f64::consts::E.powi(4));
    let est = lambda_estimate(Nu::BigOmega, 16, y_big, LambdaVariant::BigK, kernel, &params)
        .unwrap();
    let h = kernel.constants().h_const().to_f64();
    let want = h * (8.0f64).exp() / 65536.0;
    assert!((est.value_f64() / want - 1.0).abs() < 1e-12);
    assert!((want - 0.05464).abs() < 1e-4);
}

#[test]
fn regime_estimates_agree_where_windows_overlap() {
    let kernel = kernel();
    let params = EstimateParams::default();
    let y = 1e6f64;
    let log2y = y.ln().ln(); // ~ 2.63
    for k in 1..=20u64 {
        let unif =
            lambda_estimate(Nu::BigOmega, k, y, LambdaVariant::Uniform, kernel, &params).unwrap();
        for variant in [LambdaVariant::SmallK, LambdaVariant::BigK, LambdaVariant::MediumK] {
            let Ok(est) = lambda_estimate(Nu::BigOmega, k, y, variant, kernel, &params) else {
                continue;
            };
            let dev = (est.value_f64() / unif.value_f64() - 1.0).abs();
            let allowed = 5.0 * (est.error_scale + unif.error_scale);
            assert!(
                dev <= allowed,
                "k = {k} {variant}: dev {dev} vs {allowed} (log2y = {log2y})"
            );
        }
    }
}
