//! Built-in consistency checks, runnable from the CLI.

use std::fmt;

use crate::geometry::PointDisk;
use crate::polynomials::Monomial2;
use crate::zernike::{
    noll_index, noll_inverse, polynomial_to_zernike, zernike_to_polynomial, ZernikeExpansion,
    ZernikeTerm,
};

/// Noll's table for `j = 1..=15` as `(j, n, m)`.
pub const NOLL_TABLE: [(u64, u32, i32); 15] = [
    (1, 0, 0),
    (2, 1, 1),
    (3, 1, -1),
    (4, 2, 0),
    (5, 2, -2),
    (6, 2, 2),
    (7, 3, -1),
    (8, 3, 1),
    (9, 3, -3),
    (10, 3, 3),
    (11, 4, 0),
    (12, 4, 2),
    (13, 4, -2),
    (14, 4, 4),
    (15, 4, -4),
];

pub const PRODUCT_MAX_ORDER: u32 = 6;
pub const PRODUCT_TOLERANCE: f64 = 1e-9;
pub const CONVERSION_MAX_ORDER: u32 = 8;
pub const CONVERSION_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    /// Passes when `max_error <= tolerance`; NaN fails.
    pub fn from_error(name: &'static str, max_error: f64, tolerance: f64, cases: usize) -> Self {
        Self {
            name,
            passed: max_error <= tolerance,
            detail: format!("{cases} cases, max error {max_error:.3e} (tolerance {tolerance:.0e})"),
        }
    }

    fn from_mismatches(name: &'static str, mismatches: Vec<String>, cases: usize) -> Self {
        let detail = if mismatches.is_empty() {
            format!("{cases} cases")
        } else {
            format!("{cases} cases, mismatches: {}", mismatches.join(", "))
        };
        Self {
            name,
            passed: mismatches.is_empty(),
            detail,
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfTestReport {
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `count` points spread over the open unit disk on a sunflower spiral.
pub fn scatter_points(count: usize) -> Vec<PointDisk> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|k| {
            let r = ((k as f64 + 0.5) / count as f64).sqrt();
            PointDisk::from_polar(r, golden * k as f64)
        })
        .collect()
}

fn valid_orders(max_n: u32) -> impl Iterator<Item = (u32, i32)> {
    (0..=max_n).flat_map(|n| (-(n as i32)..=n as i32).step_by(2).map(move |m| (n, m)))
}

pub fn check_noll_forward() -> CheckOutcome {
    let mismatches = NOLL_TABLE
        .iter()
        .filter(|&&(j, n, m)| noll_index(n, m) != Ok(j))
        .map(|&(j, n, m)| format!("({n},{m})->{j}"))
        .collect();
    CheckOutcome::from_mismatches("noll_forward", mismatches, NOLL_TABLE.len())
}

pub fn check_noll_inverse() -> CheckOutcome {
    let mut mismatches: Vec<String> = NOLL_TABLE
        .iter()
        .filter(|&&(j, n, m)| noll_inverse(j) != Ok((n, m)))
        .map(|&(j, n, m)| format!("{j}->({n},{m})"))
        .collect();
    let mut cases = NOLL_TABLE.len();
    for (n, m) in valid_orders(20) {
        cases += 1;
        if noll_index(n, m).and_then(noll_inverse) != Ok((n, m)) {
            mismatches.push(format!("round trip ({n},{m})"));
        }
    }
    CheckOutcome::from_mismatches("noll_inverse", mismatches, cases)
}

pub fn check_product_consistency() -> CheckOutcome {
    let points = scatter_points(20);
    let terms: Vec<ZernikeTerm> = valid_orders(PRODUCT_MAX_ORDER)
        .map(|(n, m)| ZernikeTerm::unit(n, m))
        .collect();
    let mut worst = 0.0f64;
    let mut cases = 0;
    for a in &terms {
        for b in &terms {
            let product = ZernikeExpansion::from(*a) * ZernikeExpansion::from(*b);
            for &pt in &points {
                let err = (product.eval(pt) - a.eval(pt) * b.eval(pt)).abs();
                worst = worst.max(err);
                cases += 1;
            }
        }
    }
    CheckOutcome::from_error("product_consistency", worst, PRODUCT_TOLERANCE, cases)
}

pub fn check_monomial_to_zernike() -> CheckOutcome {
    let points = scatter_points(25);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for d in 0..=CONVERSION_MAX_ORDER {
        for p in 0..=d {
            let mono = Monomial2::unit(p, d - p);
            let expansion = polynomial_to_zernike(&mono.into());
            for &pt in &points {
                worst = worst.max((expansion.eval(pt) - mono.eval(pt)).abs());
                cases += 1;
            }
        }
    }
    CheckOutcome::from_error("monomial_to_zernike", worst, CONVERSION_TOLERANCE, cases)
}

pub fn check_zernike_to_polynomial() -> CheckOutcome {
    let points = scatter_points(25);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for (n, m) in valid_orders(CONVERSION_MAX_ORDER) {
        let term = ZernikeTerm::unit(n, m);
        let poly = zernike_to_polynomial(&term.into());
        for &pt in &points {
            worst = worst.max((poly.eval(pt) - term.eval(pt)).abs());
            cases += 1;
        }
    }
    CheckOutcome::from_error("zernike_to_polynomial", worst, CONVERSION_TOLERANCE, cases)
}

pub fn run() -> SelfTestReport {
    SelfTestReport {
        checks: vec![
            check_noll_forward(),
            check_noll_inverse(),
            check_product_consistency(),
            check_monomial_to_zernike(),
            check_zernike_to_polynomial(),
        ],
    }
}
