//! Zernike circle functions over the unit disk.
//!
//! The crate covers evaluation of the orthonormal circle functions
//! `Z_n^(m)(r, φ) = R_n^m(r) A_m(φ)`, conversion between `(n, m)` and Noll's
//! single index `j`, linearization of products of Zernike expansions,
//! exact conversion to and from bivariate power-basis polynomials, and an
//! ordinary-least-squares fit of scattered samples that can be handed on to
//! the Zernike basis.
//!
//! Normalization is orthonormal over the disk with weight `r dr dφ`:
//!
//! ```text
//! ∫₀¹ r R_n^m R_n'^m dr = δ_nn'        ∫₀^2π A_m A_m' dφ = δ_mm'
//! ```
//!
//! ```
//! use zernike_core::{PointDisk, ZernikeExpansion, ZernikeTerm};
//!
//! let tilt = ZernikeExpansion::from(ZernikeTerm::new(1, 1, 1.0));
//! let square = &tilt * &tilt;
//! let pt = PointDisk::new(0.5, 0.0);
//! let direct = tilt.eval(pt) * tilt.eval(pt);
//! assert!((square.eval(pt) - direct).abs() < 1e-12);
//! ```

pub mod error;
pub mod fitting;
pub mod format;
pub mod geometry;
pub mod polynomials;
pub mod selftest;
pub mod zernike;

pub use error::{Error, Result};
pub use fitting::{fit, fit_to_zernike, load_samples, FitResult, SampleSet};
pub use geometry::{Point3, PointDisk};
pub use polynomials::{Hypergeom21, Monomial1, Monomial2, Polynomial1, Polynomial2};
pub use zernike::{
    g_coefficient, noll_index, noll_inverse, polynomial_to_zernike, zernike_to_polynomial,
    AzimuthalSum, AzimuthalTerm, RadialPoly, ZernikeExpansion, ZernikeTerm,
};
