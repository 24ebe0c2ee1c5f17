//! Extended-precision analytic kernel for middle-prime-factor statistics.
//!
//! Provides the Euler products H_omega, H_Omega, H*_Omega and the constants
//! gamma, kappa (Mertens), h = H*_Omega(2) and c = 3h e^{-gamma/2}/sqrt(pi);
//! the special functions of the local laws (normal CDF, the Mills-type ratio
//! Psi, h_0, the negative Lambert branch, the entropy function Q and its
//! implicit roots); exact partial exponential sums P_n(v) with their three
//! asymptotic regimes; and the closed form of the critical-window integral.
//!
//! Everything is evaluated with MPFR at a configurable mantissa precision.
//! All operations are pure once the [`Kernel`] is built; the kernel itself
//! is immutable and can be shared freely across threads.

mod constants;
mod context;
mod error;
mod euler;
mod fnu;
mod jintegral;
mod pn;
mod primes;
mod special;

use rug::{float::Constant, Float};

pub use constants::ConstantsTable;
pub use context::{PrecisionContext, CONSTANT_BITS, DEFAULT_BITS, DEFAULT_TOLERANCE};
pub use error::{KernelError, Result};
pub use euler::{EulerProductRequest, EulerProductValue, ProductKind};
pub use pn::{error_scale_r, PnRegime, PnValue};
pub use special::{gamma_exponent, kappa_eps, lambert_w_m1, q_entropy, small_w};

/// Counting convention for prime factors: distinct (omega) or with
/// multiplicity (Omega).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nu {
    Omega,
    BigOmega,
}

impl std::fmt::Display for Nu {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Nu::Omega => write!(f, "omega"),
            Nu::BigOmega => write!(f, "Omega"),
        }
    }
}

impl std::str::FromStr for Nu {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "omega" | "w" => Ok(Nu::Omega),
            "Omega" | "bigomega" | "W" => Ok(Nu::BigOmega),
            other => Err(format!("unknown nu: {other} (expected omega or Omega)")),
        }
    }
}

/// Immutable evaluation context: precision, prime tables, and the shared
/// constants table.
pub struct Kernel {
    ctx: PrecisionContext,
    tables: constants::PrimeTables,
    constants: ConstantsTable,
    ln2: Float,
    sqrt_pi: Float,
}

impl Kernel {
    pub fn new(ctx: PrecisionContext) -> Result<Self> {
        let wbits = ctx.working_bits();
        let tables = constants::PrimeTables::build(wbits);
        let gamma = Float::with_val(wbits, Constant::Euler);
        let ln2 = Float::with_val(wbits, Constant::Log2);
        let sqrt_pi = constants::sqrt_pi(wbits);
        let mertens = constants::mertens_constant(&tables, &gamma);

        let mut kernel = Kernel {
            ctx,
            tables,
            constants: ConstantsTable::new(
                gamma.clone(),
                mertens.clone(),
                Float::with_val(wbits, 0),
                Float::with_val(wbits, 0),
                0,
            ),
            ln2,
            sqrt_pi,
        };

        // h = H*_Omega(2) computed through the pole-free product; the
        // request cutoff is irrelevant to accuracy here.
        let h = kernel
            .euler_product(EulerProductRequest::new(
                ProductKind::BigOmegaStar,
                2.0,
                constants::EXPLICIT_CAP,
            ))?
            .value;
        let h = Float::with_val(wbits, h);
        let c = {
            let e = Float::with_val(wbits, &gamma / -2f64).exp();
            Float::with_val(wbits, 3u32 * &h) * e / &kernel.sqrt_pi
        };

        // Certified decimal digits: limited by the prime-zeta truncation at
        // smax, the tail-moment truncation, and accumulated rounding across
        // the explicit product (~2^14 operations).
        let digits = {
            let truncation_bits = (kernel.tables.smax as f64 - 2.0)
                .min(6.69 * kernel.tail_order() as f64)
                .min(wbits as f64 - 14.0);
            (truncation_bits * std::f64::consts::LN_2 / std::f64::consts::LN_10).floor() as u32
        };
        kernel.constants = ConstantsTable::new(gamma, mertens, h, c, digits);
        Ok(kernel)
    }

    /// Kernel at the default 128-bit precision.
    pub fn with_default_precision() -> Self {
        Self::new(PrecisionContext::default()).expect("default context is valid")
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    /// Requested mantissa precision for returned values.
    pub fn bits(&self) -> u32 {
        self.ctx.bits()
    }

    pub fn tolerance(&self) -> f64 {
        self.ctx.tolerance()
    }

    pub(crate) fn working_bits(&self) -> u32 {
        self.ctx.working_bits()
    }

    pub fn constants(&self) -> &ConstantsTable {
        &self.constants
    }

    pub(crate) fn tables(&self) -> &constants::PrimeTables {
        &self.tables
    }

    pub(crate) fn ln2(&self) -> &Float {
        &self.ln2
    }

    /// Cutoff used for internal product evaluations. Accuracy does not
    /// depend on it (tails are summed analytically), so the smallest
    /// well-conditioned explicit range is used.
    pub fn default_prime_cutoff(&self) -> u32 {
        constants::EXPLICIT_FLOOR
    }

    /// Fresh Float at working precision.
    pub fn big(&self, v: f64) -> Float {
        Float::with_val(self.working_bits(), v)
    }
}
