use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::ops::{AddAssign, Mul, MulAssign};

use super::PRUNE_TOLERANCE;

/// Neumann factor: 2 for `m = 0`, 1 otherwise.
pub fn epsilon(m: i32) -> f64 {
    if m == 0 {
        2.0
    } else {
        1.0
    }
}

/// `c·A_m(φ)` with `A_m = cos(mφ)/√(ε_m π)` for `m >= 0` and
/// `A_m = sin(|m|φ)/√π` for `m < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AzimuthalTerm {
    pub m: i32,
    pub coeff: f64,
}

impl AzimuthalTerm {
    pub fn new(m: i32, coeff: f64) -> Self {
        Self { m, coeff }
    }

    pub fn unit(m: i32) -> Self {
        Self::new(m, 1.0)
    }

    /// Value at azimuth `phi` (radians).
    pub fn eval(&self, phi: f64) -> f64 {
        self.coeff * basis(self.m, phi)
    }

    /// Product as a sum of azimuthal functions.
    pub fn product(&self, other: &AzimuthalTerm) -> AzimuthalSum {
        let (m1, m2) = (self.m, other.m);
        let scale = self.coeff * other.coeff / (2.0 * (epsilon(m1) * epsilon(m2) * PI).sqrt());
        let terms = match (m1 >= 0, m2 >= 0) {
            (true, true) => {
                let diff = (m1 - m2).abs();
                let sum = m1 + m2;
                vec![
                    AzimuthalTerm::new(diff, scale * epsilon(diff).sqrt()),
                    AzimuthalTerm::new(sum, scale * epsilon(sum).sqrt()),
                ]
            }
            (true, false) => mixed(m1, m2.abs(), scale),
            (false, true) => mixed(m2, m1.abs(), scale),
            (false, false) => {
                let diff = (m1 - m2).abs();
                vec![
                    AzimuthalTerm::new(diff, scale * epsilon(diff).sqrt()),
                    AzimuthalTerm::new((m1 + m2).abs(), -scale),
                ]
            }
        };
        AzimuthalSum::new(terms)
    }
}

/// `cos(cφ)·sin(sφ)` case with `c >= 0`, `s > 0`.
fn mixed(cos_order: i32, sin_order: i32, scale: f64) -> Vec<AzimuthalTerm> {
    let mut terms = vec![AzimuthalTerm::new(-(cos_order + sin_order), scale)];
    let sign = (cos_order - sin_order).signum();
    // sgn(0) = 0: the difference term vanishes for equal orders
    if sign != 0 {
        terms.push(AzimuthalTerm::new(
            -(cos_order - sin_order).abs(),
            -f64::from(sign) * scale,
        ));
    }
    terms
}

fn basis(m: i32, phi: f64) -> f64 {
    if m >= 0 {
        (f64::from(m) * phi).cos() / (epsilon(m) * PI).sqrt()
    } else {
        (f64::from(m.abs()) * phi).sin() / PI.sqrt()
    }
}

/// `Σ_m c_m A_m(φ)`, one term per distinct `m`, sorted by `m`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AzimuthalSum {
    terms: Vec<AzimuthalTerm>,
}

impl AzimuthalSum {
    pub fn new(terms: impl IntoIterator<Item = AzimuthalTerm>) -> Self {
        let mut acc: BTreeMap<i32, f64> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.m).or_insert(0.0) += t.coeff;
        }
        Self {
            terms: acc
                .into_iter()
                .filter(|(_, c)| c.abs() >= PRUNE_TOLERANCE)
                .map(|(m, c)| AzimuthalTerm::new(m, c))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[AzimuthalTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: i32) -> f64 {
        self.terms
            .iter()
            .find(|t| t.m == m)
            .map_or(0.0, |t| t.coeff)
    }

    pub fn eval(&self, phi: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(phi)).sum()
    }
}

impl From<AzimuthalTerm> for AzimuthalSum {
    fn from(t: AzimuthalTerm) -> Self {
        Self::new([t])
    }
}

impl AddAssign<AzimuthalTerm> for AzimuthalSum {
    fn add_assign(&mut self, t: AzimuthalTerm) {
        *self = Self::new(self.terms.iter().copied().chain([t]));
    }
}

impl AddAssign<&AzimuthalSum> for AzimuthalSum {
    fn add_assign(&mut self, rhs: &AzimuthalSum) {
        *self = Self::new(self.terms.iter().chain(rhs.terms.iter()).copied());
    }
}

impl MulAssign<f64> for AzimuthalSum {
    fn mul_assign(&mut self, s: f64) {
        *self = Self::new(
            self.terms
                .iter()
                .map(|t| AzimuthalTerm::new(t.m, t.coeff * s)),
        );
    }
}

impl Mul<&AzimuthalSum> for &AzimuthalSum {
    type Output = AzimuthalSum;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &AzimuthalSum) -> AzimuthalSum {
        let mut out = AzimuthalSum::default();
        for a in &self.terms {
            for b in &rhs.terms {
                out += &a.product(b);
            }
        }
        out
    }
}
