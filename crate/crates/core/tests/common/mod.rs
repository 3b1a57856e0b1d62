//! Reference computations that do not go through the library's code paths.
#![allow(dead_code)]

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[0, 1]`, by Newton iteration on the
/// three-term Legendre recurrence. Exact for polynomials of degree `< 2n`.
pub fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((x + 1.0) / 2.0, w / 2.0));
    }
    out
}

/// `∫₀¹ f(r) dr` with `n` Gauss–Legendre nodes.
pub fn integrate_unit(n: usize, f: impl Fn(f64) -> f64) -> f64 {
    gauss_legendre_unit(n).iter().map(|&(x, w)| w * f(x)).sum()
}

/// `∫₀^2π g(φ) dφ` by the trapezoidal rule on `n` uniform nodes; exact for
/// trigonometric polynomials of degree `< n`.
pub fn integrate_circle(n: usize, g: impl Fn(f64) -> f64) -> f64 {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|k| h * g(h * k as f64)).sum()
}

/// Noll's order by explicit enumeration: increasing `n`, then `|m|`; each
/// `|m| > 0` takes two consecutive indices, the even one for `m > 0`.
pub fn noll_enumeration(count: usize) -> Vec<(u32, i32)> {
    let mut out: Vec<(u32, i32)> = Vec::new();
    let mut n = 0u32;
    while out.len() < count {
        let mut am = n % 2;
        while am <= n {
            if am == 0 {
                out.push((n, 0));
            } else {
                let j = out.len() as u64 + 1;
                let a = am as i32;
                if j.is_multiple_of(2) {
                    out.push((n, a));
                    out.push((n, -a));
                } else {
                    out.push((n, -a));
                    out.push((n, a));
                }
            }
            am += 2;
        }
        n += 1;
    }
    out.truncate(count);
    out
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// `√(2n+2) Σ_s (-1)^s (n-s)! / (s! ((n+|m|)/2-s)! ((n-|m|)/2-s)!) r^(n-2s)`
pub fn radial_oracle(n: u32, m: i32, r: f64) -> f64 {
    let am = m.unsigned_abs();
    let classical: f64 = (0..=(n - am) / 2)
        .map(|s| {
            let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
            sign * factorial(n - s)
                / (factorial(s) * factorial((n + am) / 2 - s) * factorial((n - am) / 2 - s))
                * r.powi((n - 2 * s) as i32)
        })
        .sum();
    (2.0 * f64::from(n) + 2.0).sqrt() * classical
}

pub fn azimuthal_oracle(m: i32, phi: f64) -> f64 {
    if m > 0 {
        (f64::from(m) * phi).cos() / PI.sqrt()
    } else if m == 0 {
        1.0 / (2.0 * PI).sqrt()
    } else {
        (f64::from(-m) * phi).sin() / PI.sqrt()
    }
}

pub fn zernike_oracle(n: u32, m: i32, r: f64, phi: f64) -> f64 {
    radial_oracle(n, m, r) * azimuthal_oracle(m, phi)
}

/// `∫∫_disk f Z_n^(m) r dr dφ`, exact when `f·Z` is a polynomial of degree
/// below the node counts allow.
pub fn project_onto(n: u32, m: i32, f: impl Fn(f64, f64) -> f64) -> f64 {
    let radial = gauss_legendre_unit(24);
    integrate_circle(64, |phi| {
        radial
            .iter()
            .map(|&(r, w)| w * r * f(r, phi) * zernike_oracle(n, m, r, phi))
            .sum()
    })
}

/// Deterministic points in the open unit disk.
pub fn disk_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r: f64 = rng.gen_range(0.0f64..1.0).sqrt() * 0.999;
            let phi: f64 = rng.gen_range(-PI..PI);
            (r * phi.cos(), r * phi.sin())
        })
        .collect()
}

#[test]
fn quadrature_is_exact_on_monomials() {
    for n in 1..12 {
        for k in 0..2 * n {
            let got = integrate_unit(n, |x| x.powi(k as i32));
            assert!((got - 1.0 / (k as f64 + 1.0)).abs() < 1e-14, "n={n} k={k}");
        }
    }
}
