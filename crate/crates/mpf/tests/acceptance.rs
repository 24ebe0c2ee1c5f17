//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Exact constant reproduction, analytic identities, oracle equivalence,
//! calibrated-trend checks, inequality suites, and the phase-transition
//! consistency checks, each with its stated tolerance and runtime budget.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use rug::Float;

use mpf_exact::SpfSieve;
use mpf_kernel::{
    error_scale_r, q_entropy, EulerProductRequest, Kernel, Nu, PnRegime, ProductKind,
};
use mpf_law::{predict_local_law, predict_phi, stitch_gap, RegimeParams, StitchSide};
use mpf_smooth::{lambda_estimate, ArithmeticMode, CoefficientSeries, EstimateParams, LambdaVariant};

fn kernel() -> &'static Kernel {
    static KERNEL: OnceLock<Kernel> = OnceLock::new();
    KERNEL.get_or_init(Kernel::with_default_precision)
}

fn sieve_1e6() -> &'static SpfSieve {
    static SIEVE: OnceLock<SpfSieve> = OnceLock::new();
    SIEVE.get_or_init(|| SpfSieve::build_parallel(1_000_000).unwrap())
}

fn sieve_1e7() -> &'static SpfSieve {
    static SIEVE: OnceLock<SpfSieve> = OnceLock::new();
    SIEVE.get_or_init(|| SpfSieve::build_parallel(10_000_000).unwrap())
}

fn report(criterion: &str, pass: bool, detail: &str, elapsed: std::time::Duration) {
    println!(
        "criterion {criterion}: {} — {detail} ({:.2}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
}

fn to_exact(nu: Nu) -> mpf_exact::Nu {
    match nu {
        Nu::Omega => mpf_exact::Nu::Omega,
        Nu::BigOmega => mpf_exact::Nu::BigOmega,
    }
}

// 1. h = H*_Omega(2) within 5e-7 of 1.201304 at prime cutoff 1e7, < 10 s.
#[test]
fn c01_h_constant() {
    let start = Instant::now();
    let kernel = kernel();
    let h = kernel
        .euler_product(EulerProductRequest::new(ProductKind::BigOmegaStar, 2.0, 10_000_000))
        .unwrap()
        .to_f64();
    let elapsed = start.elapsed();
    let gap = (h - 1.201304).abs();
    let pass = gap <= 5e-7 && elapsed.as_secs_f64() < 10.0;
    report(
        "01 (h constant)",
        pass,
        &format!("h = {h:.12}, |h - 1.201304| = {gap:.2e}"),
        elapsed,
    );
    assert!(gap <= 5e-7, "h = {h} off by {gap}");
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
}

// 2. Analytic identities to 1e-12 relative, < 1 min total.
#[test]
fn c02_analytic_identities() {
    let start = Instant::now();
    let kernel = kernel();
    let bits = 320;
    let mut worst = 0f64;
    let mut track = |name: &str, rel: f64| {
        assert!(rel <= 1e-12, "{name}: relative gap {rel:e}");
        if rel > worst {
            worst = rel;
        }
    };

    let e_gamma = Float::with_val(bits, kernel.constants().euler_gamma()).exp();
    let h1 = kernel
        .euler_product(EulerProductRequest::new(ProductKind::BigOmega, 1.0, 10_000))
        .unwrap()
        .value;
    track(
        "H_Omega(1) = e^gamma",
        (Float::with_val(bits, &h1 - &e_gamma) / &e_gamma).abs().to_f64(),
    );

    for z in [0.0, 0.5, 1.0, 1.5] {
        let star = kernel
            .euler_product(EulerProductRequest::new(ProductKind::BigOmegaStar, z, 10_000))
            .unwrap()
            .value;
        let plain = kernel
            .euler_product(EulerProductRequest::new(ProductKind::BigOmega, z, 10_000))
            .unwrap()
            .value;
        let rhs = Float::with_val(bits, &plain * Float::with_val(bits, 1.0 - z / 2.0));
        track(
            "H*_Omega = (1 - z/2) H_Omega",
            (Float::with_val(bits, &star - &rhs) / rhs).abs().to_f64(),
        );
    }

    track(
        "f_Omega(1) = 1",
        (kernel.f_nu(Nu::BigOmega, 1.0).unwrap().to_f64() - 1.0).abs(),
    );
    let want = (2.0 / std::f64::consts::PI).sqrt();
    track(
        "rho_Omega(1/2) = sqrt(2/pi)",
        (kernel.rho_nu(Nu::BigOmega, 0.5).unwrap() / want - 1.0).abs(),
    );
    track(
        "rho_omega(1/2) = sqrt(2/pi)",
        (kernel.rho_nu(Nu::Omega, 0.5).unwrap() / want - 1.0).abs(),
    );
    let left: f64 = 0.5 * (1.0 - 3.0 * 0.2);
    let right = 1.0 - 2.0 * (0.2f64 * 0.8).sqrt();
    track("gamma_Omega(1/5) left branch", (left - 0.2).abs() / 0.2);
    track("gamma_Omega(1/5) right branch", (right - 0.2).abs() / 0.2);

    let elapsed = start.elapsed();
    let pass = elapsed.as_secs_f64() < 60.0;
    report(
        "02 (analytic identities)",
        pass,
        &format!("8 identities within 1e-12, worst {worst:.2e}"),
        elapsed,
    );
    assert!(pass, "took {elapsed:?}");
}

// 3. Sieve path vs trial-division recount at 1e5, exact; hand values;
//    spectrum mass at x in {10, 1e3, 1e6}; < 2 min.
#[test]
fn c03_oracle_equivalence() {
    let start = Instant::now();
    let sieve = sieve_1e6();

    fn factor_naive(mut n: u64) -> Vec<(u64, u32)> {
        let mut parts = Vec::new();
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                let mut e = 0;
                while n % d == 0 {
                    n /= d;
                    e += 1;
                }
                parts.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            parts.push((n, 1));
        }
        parts
    }

    let x = 100_000u64;
    for nu in [Nu::Omega, Nu::BigOmega] {
        let mut naive: BTreeMap<u64, u64> = BTreeMap::new();
        for n in 2..=x {
            let parts = factor_naive(n);
            let median = match nu {
                Nu::Omega => parts[(parts.len() + 1) / 2 - 1].0,
                Nu::BigOmega => {
                    let total: u32 = parts.iter().map(|&(_, e)| e).sum();
                    let target = total.div_ceil(2);
                    let mut seen = 0;
                    let mut med = 0;
                    for &(p, e) in &parts {
                        seen += e;
                        if seen >= target {
                            med = p;
                            break;
                        }
                    }
                    med
                }
            };
            *naive.entry(median).or_insert(0) += 1;
        }
        let spec = sieve.median_spectrum(x, to_exact(nu)).unwrap();
        assert_eq!(spec.len(), naive.len());
        for (p, c) in &spec {
            assert_eq!(c.total, naive[p], "recount mismatch at p = {p}, {nu}");
        }
    }

    // hand values
    let m = sieve.count_median(10, 2, mpf_exact::Nu::Omega).unwrap();
    assert_eq!(m.total, 5);
    let m = sieve.count_median(10, 3, mpf_exact::Nu::BigOmega).unwrap();
    assert_eq!(m.total, 2);

    for x in [10u64, 1_000, 1_000_000] {
        for nu in [mpf_exact::Nu::Omega, mpf_exact::Nu::BigOmega] {
            let mass: u64 = sieve
                .median_spectrum(x, nu)
                .unwrap()
                .values()
                .map(|c| c.total)
                .sum();
            assert_eq!(mass, x - 1, "mass at {x}");
        }
    }

    let elapsed = start.elapsed();
    let pass = elapsed.as_secs_f64() < 120.0;
    report(
        "03 (oracle equivalence)",
        pass,
        "sieve = trial division at 1e5 exactly; hand values and mass checks exact",
        elapsed,
    );
    assert!(pass, "took {elapsed:?}");
}

// 4. Uniform lambda estimate vs exact tables: single C <= 5 on
//    y in {1e3..1e6}, k = 1..20, and geometric-mean deviation strictly
//    decreasing in y; < 5 min.
//
// KNOWN RED: the printed remainder R(k, y) of the uniform estimate decays
// super-polynomially in k while the true deviation saturates at the
// Mertens-floor Theta(1/ln y) (lambda_Omega(k,y) 2^k increases to
// prod_{3<=q<=y} (1-2/q)^{-1} = h ln^2 y (1 + Theta(1/ln y)) as k grows),
// so no bounded C covers k up to 20 at y = 1e3. Within mu = k/(2 ln_2 y)
// <= 2 the bound is provable and C stays below 1 (see the smooth-series
// tests). The assertion is kept as stated and fails honestly.
#[test]
fn c04_lambda_cross_validation() {
    let start = Instant::now();
    let kernel = kernel();
    let params = EstimateParams::default();
    let mut single_c = 0f64;
    let mut geomeans = Vec::new();
    let mut geomeans_normalized = Vec::new();
    for y in [1_000u64, 10_000, 100_000, 1_000_000] {
        let degree = CoefficientSeries::default_degree(y).max(21);
        let table =
            CoefficientSeries::build(Nu::BigOmega, y, degree, ArithmeticMode::Float(256)).unwrap();
        let mut worst = (0f64, 0u64);
        let mut ln_sum = 0f64;
        let mut ln_sum_norm = 0f64;
        for k in 1..=20u64 {
            let exact = table.coeff_f64(k as usize);
            let est = lambda_estimate(Nu::BigOmega, k, y as f64, LambdaVariant::Uniform, kernel, &params)
                .unwrap();
            let dev = (est.value_f64() / exact - 1.0).abs();
            let c = dev / error_scale_r(k, y as f64).unwrap();
            if c > worst.0 {
                worst = (c, k);
            }
            ln_sum += dev.ln();
            ln_sum_norm += c.ln();
        }
        single_c = single_c.max(worst.0);
        geomeans.push((ln_sum / 20.0).exp());
        geomeans_normalized.push((ln_sum_norm / 20.0).exp());
        println!(
            "  y = {y:>7}: worst dev/R = {:.3e} at k = {}, geomean dev = {:.4e}, geomean dev/R = {:.4e}",
            worst.0, worst.1, *geomeans.last().unwrap(), *geomeans_normalized.last().unwrap()
        );
    }
    let decreasing = geomeans.windows(2).all(|w| w[1] < w[0]);
    let elapsed = start.elapsed();
    let pass = single_c <= 5.0 && decreasing && elapsed.as_secs_f64() < 300.0;
    report(
        "04 (lambda cross-validation)",
        pass,
        &format!(
            "single C = {single_c:.3e} (<= 5 required), geomean decreasing = {decreasing}"
        ),
        elapsed,
    );
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}");
    assert!(decreasing, "geometric-mean deviations {geomeans:?} not decreasing");
    assert!(
        single_c <= 5.0,
        "no calibrated C <= 5 exists: measured C = {single_c:.3e}; the printed \
         remainder omits the Mertens floor ~1/ln y that dominates for k >> 2 ln_2 y \
         (saturation of lambda 2^k at h ln^2 y); see the decisions ledger"
    );
}

// 5. Partial-exponential-sum estimates within calibrated C <= 3 on the
//    (v, rho) grid and the uniform band; < 1 min.
#[test]
fn c05_pn_regimes() {
    let start = Instant::now();
    let kernel = kernel();
    for &v in &[100.0f64, 400.0, 1600.0] {
        let bits = (3.0 * v) as u32 + 256;
        for &rho in &[0.3f64, 0.5, 2.0, 3.0] {
            let n = (rho * v).round() as u64;
            let regime = if rho < 1.0 { PnRegime::Small } else { PnRegime::Big };
            let exact = kernel.partial_exp_sum_with_bits(n, v, bits).unwrap();
            let est = kernel.pn_estimate_with_bits(regime, n, v, bits).unwrap();
            let rel = (Float::with_val(bits, &est / exact.value()) - 1u32).abs();
            let ln_scale = kernel.ln_pn_error_scale(regime, n, v).unwrap();
            let bound = Float::with_val(bits, ln_scale).exp() * 3u32;
            assert!(
                rel <= bound,
                "regime {regime:?} at (n, v) = ({n}, {v}): rel {rel} vs bound {bound}"
            );
        }
        for step in [-2.0f64, -1.0, 0.0, 1.0, 2.0] {
            let n = (v + step * v.sqrt()).round() as u64;
            let exact = kernel.partial_exp_sum(n, v).unwrap();
            let scaled = Float::with_val(320, exact.value() / kernel.big(v).exp()).to_f64();
            let phi = kernel.normal_cdf((n as f64 - v) / v.sqrt());
            assert!(
                (scaled - phi).abs() <= 3.0 / v.sqrt(),
                "uniform band at (n, v) = ({n}, {v})"
            );
        }
    }
    let elapsed = start.elapsed();
    let pass = elapsed.as_secs_f64() < 60.0;
    report(
        "05 (partial exponential sums)",
        pass,
        "all 12 grid points and 15 uniform-band points within C = 3",
        elapsed,
    );
    assert!(pass, "took {elapsed:?}");
}

// 6. Closed form of J_K vs adaptive quadrature within 5 e^{-K^2 a^(1/3)/8};
//    < 1 min.
#[test]
fn c06_j_integral() {
    let start = Instant::now();
    let kernel = kernel();

    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    // machine-precision complementary error function (Cody-style rational
    // pieces are overkill here; the continued-fraction/series pair reaches
    // ~1e-15, far beyond the 1e-3 the comparison needs) -- used so the
    // quadrature oracle avoids multiprecision calls in its inner loop
    fn phi_f64(v: f64) -> f64 {
        0.5 * erfc_f64(-v / std::f64::consts::SQRT_2)
    }
    fn erfc_f64(x: f64) -> f64 {
        if x < 0.0 {
            return 2.0 - erfc_f64(-x);
        }
        if x < 2.0 {
            // erf series: 2/sqrt(pi) x e^{-x^2} sum (2x^2)^k / (2k+1)!!
            let x2 = 2.0 * x * x;
            let mut term = 1.0f64;
            let mut sum = 1.0f64;
            let mut k = 1u32;
            while term > 1e-18 * sum {
                term *= x2 / (2 * k + 1) as f64;
                sum += term;
                k += 1;
            }
            let erf = 2.0 / std::f64::consts::PI.sqrt() * x * (-x * x).exp() * sum;
            1.0 - erf
        } else {
            // Lentz continued fraction for erfc: partial numerators k/2,
            // partial denominators x
            let mut f = x;
            let mut c = x;
            let mut d = 0.0f64;
            for i in 1..200 {
                let an = 0.5 * i as f64;
                d = x + an * d;
                if d.abs() < 1e-300 {
                    d = 1e-300;
                }
                c = x + an / c;
                d = 1.0 / d;
                let delta = c * d;
                f *= delta;
                if (delta - 1.0).abs() < 1e-17 {
                    break;
                }
            }
            (-x * x).exp() / (std::f64::consts::PI.sqrt() * f)
        }
    }

    // the scalar oracle must agree with the multiprecision CDF
    for v in [-4.0f64, -1.0, 0.0, 0.5, 2.0, 4.0] {
        assert!(
            (phi_f64(v) - kernel.normal_cdf(v)).abs() < 1e-12,
            "scalar CDF oracle off at {v}"
        );
    }

    let mut worst = 0f64;
    for k in [1.0f64, 2.0] {
        for a in [100.0f64, 1000.0] {
            let b_edge = 0.5 * k * a.powf(-1.0 / 3.0) / 2.0;
            for b in [0.0, b_edge, -b_edge] {
                let lim = k * a.powf(2.0 / 3.0);
                let f = |t: f64| phi_f64(t / a.sqrt()) * (b * t - t * t / (2.0 * a)).exp();
                let quad = simpson(&f, -lim, lim, 200_000);
                let closed = kernel.j_integral(k, a, b).unwrap();
                let rel = (closed / quad - 1.0).abs();
                let allowed = 5.0 * (-k * k * a.powf(1.0 / 3.0) / 8.0).exp();
                worst = worst.max(rel / allowed);
                assert!(
                    rel <= allowed,
                    "J({k}, {a}, {b}): rel {rel:e} vs allowed {allowed:e}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = elapsed.as_secs_f64() < 60.0;
    report(
        "06 (window integral)",
        pass,
        &format!("12 quadrature checks, worst rel/allowed = {worst:.3}"),
        elapsed,
    );
    assert!(pass, "took {elapsed:?}");
}

// 7. Phi local law: exact/predicted within [1 - C/ln u, 1 + C/ln u] with a
//    single C <= 5 at x = 1e6, y in {50, 100}, k in {2, 3, 4}, both nu;
//    < 2 min. Cells with y^k > x have exact count 0 and need C >= ln u.
#[test]
fn c07_phi_local_law() {
    let start = Instant::now();
    let kernel = kernel();
    let sieve = sieve_1e6();
    let x = 1_000_000u64;
    let mut needed = 0f64;
    for nu in [Nu::Omega, Nu::BigOmega] {
        for y in [50u64, 100] {
            let ln_u = ((x as f64).ln() / (y as f64).ln()).ln();
            for k in 2..=4u32 {
                let exact = sieve.count_phi(x, y, k, to_exact(nu)).unwrap();
                let pred = predict_phi(nu, x as f64, y as f64, k, 3.0, kernel).unwrap();
                let ratio = exact as f64 / pred.value_f64();
                let c = (ratio - 1.0).abs() * ln_u;
                needed = needed.max(c);
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = needed <= 5.0 && elapsed.as_secs_f64() < 120.0;
    report(
        "07 (phi local law)",
        pass,
        &format!("single calibrated C = {needed:.3} (<= 5)"),
        elapsed,
    );
    assert!(needed <= 5.0, "calibrated C = {needed}");
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
}

// 8. Inequality suites: Norton bounds, the Omega-tail bound with C <= 10,
//    Hardy-Ramanujan with c0 = 2, and the exponent inequality on a
//    1000-point grid with equality only at 1/5; < 3 min.
#[test]
fn c08_inequality_suites() {
    let start = Instant::now();
    let kernel = kernel();

    // Norton, both sides
    for &v in &[10.0f64, 100.0, 1000.0] {
        let bits = (3.0 * v) as u32 + 256;
        for &a in &[0.3f64, 0.5, 0.8] {
            let n = (a * v).floor() as u64;
            let lhs = kernel.partial_exp_sum_with_bits(n, v, bits).unwrap();
            let rhs = Float::with_val(bits, v * (1.0 - q_entropy(a).unwrap())).exp()
                / Float::with_val(bits, (1.0 - a) * (a * v).sqrt());
            assert!(lhs.value() < &rhs, "lower Norton at (a, v) = ({a}, {v})");
        }
        for &b in &[1.5f64, 2.0, 3.0] {
            let m = (b * v).ceil() as u64;
            let head = kernel.partial_exp_sum_with_bits(m - 1, v, bits).unwrap();
            let tail = Float::with_val(bits, v).exp() - head.value();
            let rhs = Float::with_val(bits, b).sqrt()
                * Float::with_val(bits, v * (1.0 - q_entropy(b).unwrap())).exp()
                / Float::with_val(bits, (b - 1.0) * (2.0 * std::f64::consts::PI * v).sqrt());
            assert!(tail < rhs, "upper Norton at (b, v) = ({b}, {v})");
        }
    }

    // Omega-tail and Hardy-Ramanujan at x = 1e6
    let sieve = sieve_1e6();
    let x = 1_000_000u64;
    let ln_x = (x as f64).ln();
    let lnln_x = ln_x.ln();
    let mut c_tail = 0f64;
    let mut c_hr = 0f64;
    let mut max_omega = 0u32;
    for k in 1..=20u32 {
        let (ge, eq) = sieve.tail_counts(x, k).unwrap();
        if k >= 5 {
            let bound = k as f64 * x as f64 * ln_x / (2f64).powi(k as i32);
            c_tail = c_tail.max(ge as f64 / bound);
        }
        if eq > 0 {
            max_omega = k;
            let lg: f64 = (1..k).map(|j| (j as f64).ln()).sum(); // ln (k-1)!
            let bound = x as f64 * ((k as f64 - 1.0) * (lnln_x + 2.0).ln() - lg).exp() / ln_x;
            c_hr = c_hr.max(eq as f64 / bound);
        }
    }
    assert!(c_tail <= 10.0, "Omega-tail constant {c_tail}");
    assert!(c_hr <= 10.0, "Hardy-Ramanujan constant {c_hr}");
    assert!(max_omega >= 7, "omega range at 1e6 should reach 7");

    // exponent inequality grid
    for i in 1..1000 {
        let v = i as f64 / 1000.0;
        let left = 0.5 * (1.0 - 3.0 * v);
        let mid = 1.0 - 2.0 * (v * (1.0 - v)).sqrt();
        let right = 1.0 - 4.0 * v - 2.0 * v * ((1.0 - v) / (4.0 * v)).ln();
        assert!(left <= mid + 1e-12 && mid <= right + 1e-12, "inequality at v = {v}");
        if (v - 0.2).abs() < 1e-12 {
            assert!((left - mid).abs() <= 1e-12 && (mid - right).abs() <= 1e-12);
        } else {
            assert!(mid - left > 1e-12 || right - mid > 1e-12, "equality off 1/5 at v = {v}");
        }
    }

    let elapsed = start.elapsed();
    let pass = elapsed.as_secs_f64() < 180.0;
    report(
        "08 (inequality suites)",
        pass,
        &format!("Norton 18/18; Omega-tail C = {c_tail:.3}; Hardy-Ramanujan C = {c_hr:.3}"),
        elapsed,
    );
    assert!(pass, "took {elapsed:?}");
}

// 9. Critical-point identity to 1e-12 and strictly decreasing stitch gap
//    along x = e^{e^k}, k = 4..10; < 1 min.
#[test]
fn c09_critical_identity_and_stitching() {
    let start = Instant::now();
    let kernel = kernel();

    let p = 1009u64;
    let log_p = (p as f64).ln();
    let params = RegimeParams::from_logs(log_p.powi(5), log_p).unwrap();
    let pred = predict_local_law(Nu::BigOmega, &params, kernel).unwrap();
    let bits = 320;
    let want = Float::with_val(bits, kernel.constants().c_const().to_f64().ln())
        + Float::with_val(bits, params.log_x)
        - Float::with_val(bits, log_p)
        - Float::with_val(bits, std::f64::consts::LN_2)
        - Float::with_val(bits, log_p.ln());
    let rel = (Float::with_val(bits, &pred.ln_value - want).exp() - 1u32)
        .abs()
        .to_f64();
    assert!(rel <= 1e-12, "critical-point identity: rel {rel:e}");

    let mut gaps = Vec::new();
    for k in 4..=10u32 {
        let r = stitch_gap((k as f64).exp(), StitchSide::Upper, kernel).unwrap();
        gaps.push(r.gap);
    }
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    let elapsed = start.elapsed();
    let pass = decreasing && elapsed.as_secs_f64() < 60.0;
    report(
        "09 (critical identity and stitching)",
        pass,
        &format!("identity rel = {rel:.2e}; gaps {gaps:.4?} strictly decreasing = {decreasing}"),
        elapsed,
    );
    assert!(decreasing, "stitch gaps {gaps:?}");
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
}

// 10. Dominance M_Omega >= M_omega for beta_p <= 1/5 at x = 1e6 and 1e7;
//     the 1e7 spectrum completes < 5 min and is bit-identical across
//     thread counts.
//
// KNOWN RED on the dominance clause: the underlying comparison is an
// asymptotic statement about main terms whose exponent advantage
// gamma_omega(beta) - (1-3 beta)/2 vanishes quadratically at beta = 1/5.
// At p = 5 (beta ~ 0.17-0.18) that advantage is (ln x)^0.004-ish while the
// prefactors favor the omega count, and the measured ratio climbs only
// ~0.03 per decade (0.801 at 1e5, 0.814 at 1e6, 0.839 at 1e7): dominance
// at p = 5 emerges only near x ~ 1e50. p in {2, 3} does dominate at 1e6
// and 1e7. The assertion is kept as stated and fails honestly.
#[test]
fn c10_dominance_and_determinism() {
    let start = Instant::now();

    let mut violations = Vec::new();
    for (x, sieve) in [(1_000_000u64, sieve_1e6()), (10_000_000, sieve_1e7())] {
        let log2x = (x as f64).ln().ln();
        let spec_omega = sieve.median_spectrum(x, mpf_exact::Nu::Omega).unwrap();
        let spec_big = sieve.median_spectrum(x, mpf_exact::Nu::BigOmega).unwrap();
        for (&p, c_omega) in &spec_omega {
            let beta = (p as f64).ln().ln() / log2x;
            if beta <= 0.2 {
                let big = spec_big.get(&p).map_or(0, |c| c.total);
                println!(
                    "  x = {x:>8}, p = {p}: M_Omega = {big:>8}, M_omega = {:>8}, ratio = {:.4}",
                    c_omega.total,
                    big as f64 / c_omega.total as f64
                );
                if big < c_omega.total {
                    violations.push((x, p, big, c_omega.total));
                }
            }
        }
    }

    // determinism of the 1e7 spectrum across thread counts, timed on the
    // widest pool
    let sieve = sieve_1e7();
    let timer = Instant::now();
    let reference = {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
        pool.install(|| sieve.median_spectrum(10_000_000, mpf_exact::Nu::BigOmega).unwrap())
    };
    let spectrum_time = timer.elapsed();
    for threads in [1usize, 3] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let got =
            pool.install(|| sieve.median_spectrum(10_000_000, mpf_exact::Nu::BigOmega).unwrap());
        assert_eq!(got, reference, "spectrum differs with {threads} threads");
    }
    assert!(
        spectrum_time.as_secs_f64() < 300.0,
        "1e7 spectrum took {spectrum_time:?}"
    );

    let elapsed = start.elapsed();
    report(
        "10 (dominance and determinism)",
        violations.is_empty(),
        &format!(
            "dominance violations: {violations:?}; 1e7 spectrum in {:.2}s, \
             identical on 1/3/8 threads",
            spectrum_time.as_secs_f64()
        ),
        elapsed,
    );
    assert!(
        violations.is_empty(),
        "M_Omega < M_omega below the critical point at {violations:?}; the \
         asymptotic dominance has not set in at desk scale for p = 5 \
         (see the decisions ledger)"
    );
}
