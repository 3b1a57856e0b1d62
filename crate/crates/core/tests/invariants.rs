mod common;

use std::f64::consts::PI;

use common::*;
use proptest::prelude::*;
use zernike_core::*;

fn valid_orders(max_n: u32) -> Vec<(u32, i32)> {
    (0..=max_n)
        .flat_map(|n| (-(n as i32)..=n as i32).step_by(2).map(move |m| (n, m)))
        .collect()
}

#[test]
fn radial_orthonormality() {
    for am in 0..=10u32 {
        for n in (am..=10).step_by(2) {
            let rn = RadialPoly::new(n, am as i32).unwrap();
            for n2 in (am..=10).step_by(2) {
                let rn2 = RadialPoly::new(n2, am as i32).unwrap();
                let nodes = (n + n2 + 2) as usize;
                let got = integrate_unit(nodes, |r| r * rn.eval(r) * rn2.eval(r));
                let want = if n == n2 { 1.0 } else { 0.0 };
                assert!((got - want).abs() < 1e-9, "n={n} n'={n2} m={am}: {got}");
            }
        }
    }
}

#[test]
fn radial_matches_factorial_form() {
    for (n, m) in valid_orders(16) {
        let radial = RadialPoly::new(n, m).unwrap();
        for k in 0..=10 {
            let r = f64::from(k) / 10.0;
            let want = radial_oracle(n, m, r);
            assert!((radial.eval(r) - want).abs() < 1e-9, "n={n} m={m} r={r}");
        }
    }
}

#[test]
fn azimuthal_orthonormality() {
    for m in -8..=8 {
        for m2 in -8..=8 {
            let a = AzimuthalTerm::unit(m);
            let b = AzimuthalTerm::unit(m2);
            let got = integrate_circle(64, |phi| a.eval(phi) * b.eval(phi));
            let want = if m == m2 { 1.0 } else { 0.0 };
            assert!((got - want).abs() < 1e-9, "m={m} m'={m2}: {got}");
        }
    }
}

#[test]
fn azimuthal_product_matches_direct_product() {
    for m in -5..=5 {
        for m2 in -5..=5 {
            let a = AzimuthalTerm::unit(m);
            let b = AzimuthalTerm::unit(m2);
            let sum = a.product(&b);
            for k in 0..32 {
                let phi = 2.0 * PI * f64::from(k) / 32.0 - 0.3;
                let want = azimuthal_oracle(m, phi) * azimuthal_oracle(m2, phi);
                assert!((sum.eval(phi) - want).abs() < 1e-12, "m={m} m'={m2}");
            }
        }
    }
}

#[test]
fn product_consistency() {
    let points = disk_points(20, 11);
    let orders = valid_orders(6);
    for &(n, m) in &orders {
        let a = ZernikeTerm::unit(n, m);
        for &(n2, m2) in &orders {
            let b = ZernikeTerm::unit(n2, m2);
            let product = a * b;
            for &(x, y) in &points {
                let pt = PointDisk::new(x, y);
                let (r, phi) = pt.polar();
                let want = zernike_oracle(n, m, r, phi) * zernike_oracle(n2, m2, r, phi);
                assert!(
                    (product.eval(pt) - want).abs() < 1e-9,
                    "({n},{m})x({n2},{m2}) at ({x},{y})"
                );
            }
        }
    }
}

#[test]
fn product_is_commutative_and_bilinear() {
    let a = ZernikeExpansion::from_noll_coefficients(&[0.3, -1.0, 0.5, 0.0, 2.0, 0.1, -0.4]);
    let b = ZernikeExpansion::from_noll_coefficients(&[1.0, 0.0, 0.2, -0.7, 0.0, 0.0, 0.0, 1.5]);
    let ab = &a * &b;
    let ba = &b * &a;
    assert_eq!(ab.len(), ba.len());
    for (s, t) in ab.terms().iter().zip(ba.terms()) {
        assert_eq!((s.n(), s.m()), (t.n(), t.m()));
        assert!((s.coeff() - t.coeff()).abs() < 1e-13);
    }
    let scaled = &a.scale(2.0) * &b;
    for t in ab.terms() {
        assert!((scaled.coeff(t.n(), t.m()) - 2.0 * t.coeff()).abs() < 1e-12);
    }
}

fn radial_orders(max_n: u32) -> Vec<(u32, i32)> {
    (0..=max_n)
        .flat_map(|n| (n % 2..=n).step_by(2).map(move |am| (n, am as i32)))
        .collect()
}

#[test]
fn g_permutation_symmetry() {
    let orders = radial_orders(6);
    for &a in &orders {
        for &b in &orders {
            for &c in &orders {
                let base = g_coefficient(a.0, a.1, b.0, b.1, c.0, c.1).unwrap();
                let perms = [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)];
                for (p, q, r) in perms {
                    let g = g_coefficient(p.0, p.1, q.0, q.1, r.0, r.1).unwrap();
                    assert!((g - base).abs() < 1e-12, "{a:?} {b:?} {c:?}");
                }
            }
        }
    }
}

#[test]
fn g_matches_quadrature() {
    let orders = radial_orders(6);
    let polys: Vec<RadialPoly> = orders
        .iter()
        .map(|&(n, m)| RadialPoly::new(n, m).unwrap())
        .collect();
    for (i, a) in orders.iter().enumerate() {
        for (j, b) in orders.iter().enumerate() {
            for (k, c) in orders.iter().enumerate() {
                let closed = g_coefficient(a.0, a.1, b.0, b.1, c.0, c.1).unwrap();
                let quad = integrate_unit(12, |r| {
                    r * polys[i].eval(r) * polys[j].eval(r) * polys[k].eval(r)
                });
                assert!((closed - quad).abs() < 1e-9, "{a:?} {b:?} {c:?}");
            }
        }
    }
}

#[test]
fn full_disk_orthonormality() {
    let radial = gauss_legendre_unit(24);
    let terms: Vec<ZernikeTerm> = (1..=36)
        .map(|j| ZernikeTerm::from_noll(j, 1.0).unwrap())
        .collect();
    for (i, a) in terms.iter().enumerate() {
        for (k, b) in terms.iter().enumerate().skip(i) {
            let got = integrate_circle(64, |phi| {
                radial
                    .iter()
                    .map(|&(r, w)| {
                        let pt = PointDisk::from_polar(r, phi);
                        w * r * a.eval(pt) * b.eval(pt)
                    })
                    .sum()
            });
            let want = if i == k { 1.0 } else { 0.0 };
            assert!((got - want).abs() < 1e-8, "j={} j'={}", i + 1, k + 1);
        }
    }
}

#[test]
fn monomial_round_trip() {
    for d in 0..=8u32 {
        for p in 0..=d {
            let mono: Polynomial2 = Monomial2::unit(p, d - p).into();
            let back = zernike_to_polynomial(&polynomial_to_zernike(&mono));
            for t in back.terms() {
                let want = if (t.x_exp, t.y_exp) == (p, d - p) {
                    1.0
                } else {
                    0.0
                };
                assert!((t.coeff - want).abs() < 1e-10, "x^{p} y^{}", d - p);
            }
            assert!((back.coeff(p, d - p) - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn zernike_round_trip() {
    for (n, m) in valid_orders(8) {
        let back = polynomial_to_zernike(&zernike_to_polynomial(&ZernikeTerm::unit(n, m).into()));
        assert_eq!(back.len(), 1, "({n},{m}) -> {back:?}");
        let t = back.terms()[0];
        assert_eq!((t.n(), t.m()), (n, m));
        assert!((t.coeff() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn noll_bijection() {
    for (n, m) in valid_orders(20) {
        assert_eq!(noll_inverse(noll_index(n, m).unwrap()), Ok((n, m)));
    }
    let enumerated = noll_enumeration(200);
    for j in 1..=200u64 {
        let (n, m) = noll_inverse(j).unwrap();
        assert_eq!(enumerated[j as usize - 1], (n, m));
        assert_eq!(noll_index(n, m), Ok(j));
        if j % 2 == 0 {
            assert!(m >= 0);
        } else if j > 1 {
            assert!(m <= 0);
        }
    }
}

#[test]
fn outside_disk_is_zero() {
    for (n, m) in valid_orders(8) {
        let t = ZernikeTerm::new(n, m, 3.0);
        for pt in [
            PointDisk::new(1.5, 0.0),
            PointDisk::new(1.0 + 1e-15, 0.0),
            PointDisk::new(-0.8, 0.7),
            PointDisk::new(0.0, -2.0),
        ] {
            assert_eq!(t.eval(pt), 0.0);
        }
    }
}

fn truth(coeffs: &[f64], order: u32) -> Polynomial2 {
    fitting::basis_exponents(order)
        .into_iter()
        .zip(coeffs)
        .map(|((p, q), &c)| Monomial2::new(c, p, q))
        .collect()
}

fn sampled(poly: &Polynomial2, count: usize, seed: u64) -> SampleSet {
    let pts = disk_points(count, seed);
    SampleSet::new(
        pts.into_iter()
            .map(|(x, y)| Point3::new(x, y, poly.eval(PointDisk::new(x, y))))
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fit_recovers_polynomial_truth(
        coeffs in prop::collection::vec(-3.0f64..3.0, 10),
        degree in 0u32..=3,
        extra in 0u32..=2,
        seed in 0u64..1000,
    ) {
        let basis = ((degree + 1) * (degree + 2) / 2) as usize;
        let poly = truth(&coeffs[..basis], degree);
        let order = degree + extra;
        let needed = ((order + 1) * (order + 2) / 2) as usize;
        let data = sampled(&poly, needed + 15, seed);
        let fit = fit(&data, order).unwrap();
        let scale = coeffs[..basis].iter().map(|c| c.abs()).fold(1.0, f64::max);
        for (p, q) in fitting::basis_exponents(order) {
            prop_assert!((fit.polynomial.coeff(p, q) - poly.coeff(p, q)).abs() < 1e-8 * scale);
        }
        prop_assert!(fit.residual_norm <= 1e-8 * scale);
    }

    #[test]
    fn residual_is_orthogonal_to_basis(seed in 0u64..1000, order in 0u32..=4) {
        let pts = disk_points(60, seed);
        let data = SampleSet::new(
            pts.iter()
                .map(|&(x, y)| Point3::new(x, y, (3.0 * x).sin() + (y * y).exp()))
                .collect(),
        ).unwrap();
        let fit = fit(&data, order).unwrap();
        let residuals: Vec<f64> = data.samples().iter().map(|s| fit.polynomial.residual(s)).collect();
        let rnorm = residuals.iter().map(|r| r * r).sum::<f64>().sqrt();
        prop_assert!((rnorm - fit.residual_norm).abs() < 1e-10);
        for (p, q) in fitting::basis_exponents(order) {
            let column: Vec<f64> = data.samples().iter()
                .map(|s| s.x.powi(p as i32) * s.y.powi(q as i32)).collect();
            let cnorm = column.iter().map(|c| c * c).sum::<f64>().sqrt();
            let dot: f64 = column.iter().zip(&residuals).map(|(c, r)| c * r).sum();
            prop_assert!(dot.abs() <= 1e-8 * cnorm * rnorm.max(1e-300) + 1e-12, "x^{p} y^{q}: {dot}");
        }
    }

    #[test]
    fn sample_on_fit_leaves_coefficients(seed in 0u64..1000, x in -0.7f64..0.7, y in -0.7f64..0.7) {
        let pts = disk_points(40, seed);
        let samples: Vec<Point3> = pts.iter()
            .map(|&(px, py)| Point3::new(px, py, (2.0 * px).cos() * py + px))
            .collect();
        let data = SampleSet::new(samples.clone()).unwrap();
        let before = fit(&data, 3).unwrap();
        let mut more = samples;
        more.push(Point3::new(x, y, before.polynomial.eval(PointDisk::new(x, y))));
        let after = fit(&SampleSet::new(more).unwrap(), 3).unwrap();
        for (p, q) in fitting::basis_exponents(3) {
            prop_assert!((before.polynomial.coeff(p, q) - after.polynomial.coeff(p, q)).abs() < 1e-9);
        }
    }

    #[test]
    fn fit_to_zernike_agrees_with_fit(seed in 0u64..1000, order in 0u32..=5) {
        let pts = disk_points(50, seed);
        let data = SampleSet::new(
            pts.iter().map(|&(x, y)| Point3::new(x, y, (x - y).tanh() + x * y)).collect(),
        ).unwrap();
        let poly = fit(&data, order).unwrap().polynomial;
        let zern = fit_to_zernike(&data, order).unwrap();
        for (x, y) in disk_points(25, seed + 1) {
            let pt = PointDisk::new(x, y);
            prop_assert!((zern.eval(pt) - poly.eval(pt)).abs() < 1e-9);
        }
    }

    #[test]
    fn conversion_preserves_values(
        coeffs in prop::collection::vec(-2.0f64..2.0, 1..28),
        seed in 0u64..1000,
    ) {
        let e = ZernikeExpansion::from_noll_coefficients(&coeffs);
        let p = zernike_to_polynomial(&e);
        let back = polynomial_to_zernike(&p);
        for (x, y) in disk_points(10, seed) {
            let pt = PointDisk::new(x, y);
            prop_assert!((p.eval(pt) - e.eval(pt)).abs() < 1e-10);
            prop_assert!((back.eval(pt) - e.eval(pt)).abs() < 1e-10);
        }
        for t in e.terms() {
            prop_assert!((back.coeff(t.n(), t.m()) - t.coeff()).abs() < 1e-10);
        }
    }
}
