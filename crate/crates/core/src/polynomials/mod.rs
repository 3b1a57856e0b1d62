//! Sparse power-basis polynomials in one and two variables, and the
//! terminating Gaussian hypergeometric series as a univariate polynomial.
//!
//! Every polynomial is kept canonical: like terms merged, exact zeros
//! dropped, terms sorted. Structural equality is therefore mathematical
//! equality (up to the floating-point values of the coefficients).

mod bivariate;
mod hypergeom;
mod univariate;

pub use bivariate::{Monomial2, Polynomial2};
pub(crate) use hypergeom::scaled_series;
pub use hypergeom::Hypergeom21;
pub use univariate::{Monomial1, Polynomial1};

/// `binom(n, k)` by iterative multiplication of exact small ratios.
pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc
}
