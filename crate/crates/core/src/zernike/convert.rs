//! Exact conversion between Zernike expansions and the Cartesian power basis.

use nalgebra::{DMatrix, DVector};

use crate::polynomials::{binomial, Monomial2, Polynomial2};

use super::azimuthal::epsilon;
use super::{ZernikeExpansion, ZernikeTerm, PRUNE_TOLERANCE};

/// `x² + y²`
fn rho_squared() -> Polynomial2 {
    Polynomial2::new([Monomial2::unit(2, 0), Monomial2::unit(0, 2)])
}

/// `r^|m| cos(mφ)` for `m >= 0`, `r^|m| sin(|m|φ)` for `m < 0`: the real or
/// imaginary part of `(x + iy)^|m|`.
fn harmonic(m: i32) -> Polynomial2 {
    let am = m.unsigned_abs();
    let parity = if m >= 0 { 0 } else { 1 };
    Polynomial2::new((parity..=am).step_by(2).map(|l| {
        // i^l contributes (-1)^(l/2) to the real part (l even) and
        // (-1)^((l-1)/2) to the imaginary part (l odd)
        let sign = if (l / 2) % 2 == 0 { 1.0 } else { -1.0 };
        Monomial2::new(sign * binomial(am, l), am - l, l)
    }))
}

/// Power-basis image of `Z_n^(m)` with unit coefficient.
fn term_polynomial(n: u32, m: i32) -> Polynomial2 {
    let radial = ZernikeTerm::unit(n, m)
        .radial()
        .expect("valid order by construction");
    let am = m.unsigned_abs();
    let rho2 = rho_squared();
    let h = harmonic(m);
    let norm = 1.0 / (epsilon(m) * std::f64::consts::PI).sqrt();
    let mut out = Polynomial2::zero();
    // r^k = r^|m| (x² + y²)^((k - |m|)/2); integer arithmetic until the
    // final scaling
    let mut shell = h;
    let mut k = am;
    for t in radial.classical().terms() {
        while k < t.exponent {
            shell = &shell * &rho2;
            k += 2;
        }
        out += &shell.scale(t.coeff);
    }
    out.scale(radial.norm() * norm)
}

/// Expands `Σ c_{n,m} Z_n^(m)` in powers of `x` and `y`.
pub fn zernike_to_polynomial(e: &ZernikeExpansion) -> Polynomial2 {
    let mut out = Polynomial2::zero();
    for t in e.terms() {
        out += &term_polynomial(t.n(), t.m()).scale(t.coeff());
    }
    out.pruned(PRUNE_TOLERANCE)
}

/// Expands `Σ c_{p,q} x^p y^q` in Zernike functions. The largest radial
/// degree equals the total degree of `p`.
///
/// Coefficients below `1e-12 · max(1, Σ|c_{p,q}|)` are dropped as rounding
/// noise of the input.
///
/// Works from the top degree down: the homogeneous degree-`d` part of the
/// remainder is matched by the leading parts of `Z_d^m`, `m = -d, -d+2, …, d`,
/// which span the `d + 1` monomials of that degree. Subtracting their full
/// images leaves a remainder of lower degree.
pub fn polynomial_to_zernike(p: &Polynomial2) -> ZernikeExpansion {
    let Some(top) = p.total_degree() else {
        return ZernikeExpansion::default();
    };
    let scale = p
        .terms()
        .iter()
        .map(|t| t.coeff.abs())
        .sum::<f64>()
        .max(1.0);
    let mut remainder = p.clone();
    let mut terms = Vec::new();
    for d in (0..=top).rev() {
        let rhs = DVector::from_iterator(
            d as usize + 1,
            (0..=d).rev().map(|px| remainder.coeff(px, d - px)),
        );
        if rhs.iter().all(|&c| c == 0.0) {
            continue;
        }
        let orders: Vec<i32> = (0..=d).map(|i| 2 * i as i32 - d as i32).collect();
        let images: Vec<Polynomial2> = orders.iter().map(|&m| term_polynomial(d, m)).collect();
        let system = DMatrix::from_fn(d as usize + 1, d as usize + 1, |row, col| {
            let px = d - row as u32;
            images[col].coeff(px, d - px)
        });
        let coeffs = system
            .lu()
            .solve(&rhs)
            .expect("leading parts of Z_d^m span the degree-d monomials");
        for ((&m, image), &c) in orders.iter().zip(&images).zip(coeffs.iter()) {
            if c != 0.0 {
                remainder -= &image.scale(c);
                if c.abs() >= PRUNE_TOLERANCE * scale {
                    terms.push(ZernikeTerm::new(d, m, c));
                }
            }
        }
    }
    ZernikeExpansion::new(terms)
}
