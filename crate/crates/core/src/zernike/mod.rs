//! Zernike circle functions `Z_n^(m) = R_n^m(r)·A_m(φ)` and their algebra.

mod azimuthal;
mod convert;
mod expansion;
mod noll;
mod radial;

pub use azimuthal::{epsilon, AzimuthalSum, AzimuthalTerm};
pub use convert::{polynomial_to_zernike, zernike_to_polynomial};
pub use expansion::{ZernikeExpansion, ZernikeTerm};
pub use noll::{noll_index, noll_inverse};
pub use radial::{g_coefficient, RadialPoly};

/// Coefficients produced by products and conversions with magnitude below
/// this are treated as cancellation noise and dropped.
pub const PRUNE_TOLERANCE: f64 = 1e-12;

/// `|m| <= n` and `n - m` even.
pub fn is_valid_order(n: u32, m: i32) -> bool {
    m.unsigned_abs() <= n && (i64::from(n) - i64::from(m)) % 2 == 0
}

pub(crate) fn check_order(n: u32, m: i32) -> crate::Result<()> {
    if is_valid_order(n, m) {
        Ok(())
    } else {
        Err(crate::Error::InvalidOrder { n, m })
    }
}
