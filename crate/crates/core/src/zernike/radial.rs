use crate::error::{Error, Result};
use crate::polynomials::{binomial, scaled_series, Monomial1, Polynomial1};

use super::check_order;

/// Orthonormal radial factor `R_n^m(r)`, expanded in powers of `r`:
///
/// ```text
/// R_n^m(r) = √(2n+2) (-1)^s C((n+|m|)/2, s) r^|m| ₂F₁(-s, 1+(n+|m|)/2; 1+|m|; r²),  s = (n-|m|)/2
/// ```
///
/// so that `∫₀¹ r R_n^m R_n'^m dr = δ_nn'` and `R_n^m(1) = √(2n+2)`.
///
/// The integer-coefficient classical polynomial (value 1 at `r = 1`) is kept
/// next to the normalized body; evaluation applies `√(2n+2)` last.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPoly {
    n: u32,
    m: i32,
    norm: f64,
    classical: Polynomial1,
    body: Polynomial1,
}

impl RadialPoly {
    pub fn new(n: u32, m: i32) -> Result<Self> {
        check_order(n, m)?;
        let am = m.unsigned_abs();
        let s = (n - am) / 2;
        let half_sum = (n + am) / 2;
        let sign = if s.is_multiple_of(2) { 1.0 } else { -1.0 };
        let series = scaled_series(
            -(s as i32),
            f64::from(1 + half_sum),
            f64::from(1 + am),
            sign * binomial(half_sum, s),
        )?;
        // z = r², times r^|m|
        let classical = Polynomial1::new(
            series
                .iter()
                .enumerate()
                .map(|(k, &c)| Monomial1::new(c, am + 2 * k as u32)),
        );
        let norm = (2.0 * f64::from(n) + 2.0).sqrt();
        let body = classical.scale(norm);
        Ok(Self {
            n,
            m,
            norm,
            classical,
            body,
        })
    }

    /// Radial function for the `D`-dimensional unit ball. Only `D = 2` is
    /// available.
    pub fn with_dimension(n: u32, m: i32, dimension: u32) -> Result<Self> {
        if dimension != 2 {
            return Err(Error::UnsupportedDimension(dimension));
        }
        Self::new(n, m)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// `√(2n+2)`
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// `R_n^m / √(2n+2)`; integer coefficients.
    pub fn classical(&self) -> &Polynomial1 {
        &self.classical
    }

    /// The orthonormal polynomial, `norm() · classical()`.
    pub fn body(&self) -> &Polynomial1 {
        &self.body
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.norm * self.classical.eval(r)
    }
}

/// Coefficient of `r^(n-2s)` in `R_n^m / √(2n+2)`.
fn classical_coeff(n: u32, am: u32, s: u32) -> f64 {
    let sign = if s.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * binomial(n - s, s) * binomial(n - 2 * s, (n - am) / 2 - s)
}

/// Linearization coefficient `g = ∫₀¹ r R_{n1}^{m1} R_{n2}^{m2} R_{n3}^{m3} dr`,
/// the weight of `R_{n3}^{m3}` in the expansion of `R_{n1}^{m1} R_{n2}^{m2}`.
///
/// Evaluated as a closed-form triple sum over the power-basis coefficients
/// of the three radial polynomials.
pub fn g_coefficient(n1: u32, m1: i32, n2: u32, m2: i32, n3: u32, m3: i32) -> Result<f64> {
    check_order(n1, m1)?;
    check_order(n2, m2)?;
    check_order(n3, m3)?;
    Ok(g_unchecked([
        (n1, m1.unsigned_abs()),
        (n2, m2.unsigned_abs()),
        (n3, m3.unsigned_abs()),
    ]))
}

pub(crate) fn g_unchecked(mut orders: [(u32, u32); 3]) -> f64 {
    // fixed summation order, so permuted arguments give identical bits
    orders.sort_unstable();
    let prefactor = (8.0
        * orders
            .iter()
            .map(|&(n, _)| f64::from(n + 1))
            .product::<f64>())
    .sqrt();
    let sum = g_sum_exact(orders).unwrap_or_else(|| g_sum_float(orders));
    prefactor * sum
}

fn binomial_exact(n: u32, k: u32) -> Option<i128> {
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(i128::from(n - i))? / i128::from(i + 1);
    }
    Some(acc)
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// The triple sum as an exact rational; `None` once i128 overflows.
fn g_sum_exact(orders: [(u32, u32); 3]) -> Option<f64> {
    let mut coeffs = Vec::with_capacity(3);
    for (n, am) in orders {
        let c = (0..=(n - am) / 2)
            .map(|s| {
                let v = binomial_exact(n - s, s)?
                    .checked_mul(binomial_exact(n - 2 * s, (n - am) / 2 - s)?)?;
                Some(if s % 2 == 0 { v } else { -v })
            })
            .collect::<Option<Vec<i128>>>()?;
        coeffs.push(c);
    }
    // group by s1 + s2 + s3, which fixes the denominator
    let mut by_shift = vec![0i128; coeffs.iter().map(Vec::len).sum::<usize>()];
    for (s1, &k1) in coeffs[0].iter().enumerate() {
        for (s2, &k2) in coeffs[1].iter().enumerate() {
            let k12 = k1.checked_mul(k2)?;
            for (s3, &k3) in coeffs[2].iter().enumerate() {
                let slot = &mut by_shift[s1 + s2 + s3];
                *slot = slot.checked_add(k12.checked_mul(k3)?)?;
            }
        }
    }
    let total: u32 = orders.iter().map(|o| o.0).sum();
    let (mut num, mut den) = (0i128, 1i128);
    for (shift, &coeff) in by_shift.iter().enumerate() {
        if coeff == 0 {
            continue;
        }
        let d = i128::from(2 + total - 2 * shift as u32);
        num = num.checked_mul(d)?.checked_add(coeff.checked_mul(den)?)?;
        den = den.checked_mul(d)?;
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
    }
    Some(num as f64 / den as f64)
}

fn g_sum_float(orders: [(u32, u32); 3]) -> f64 {
    let [(n1, a1), (n2, a2), (n3, a3)] = orders;
    let c1: Vec<f64> = (0..=(n1 - a1) / 2)
        .map(|s| classical_coeff(n1, a1, s))
        .collect();
    let c2: Vec<f64> = (0..=(n2 - a2) / 2)
        .map(|s| classical_coeff(n2, a2, s))
        .collect();
    let c3: Vec<f64> = (0..=(n3 - a3) / 2)
        .map(|s| classical_coeff(n3, a3, s))
        .collect();
    let total = n1 + n2 + n3;
    let mut sum = 0.0;
    for (s1, &k1) in c1.iter().enumerate() {
        for (s2, &k2) in c2.iter().enumerate() {
            let k12 = k1 * k2;
            for (s3, &k3) in c3.iter().enumerate() {
                let shift = 2 * (s1 + s2 + s3) as u32;
                sum += k12 * k3 / f64::from(2 + total - shift);
            }
        }
    }
    sum
}
