use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use crate::error::{Error, Result};
use crate::geometry::PointDisk;
use crate::polynomials::Polynomial2;

use super::azimuthal::AzimuthalTerm;
use super::radial::{g_unchecked, RadialPoly};
use super::{is_valid_order, noll_index, noll_inverse, PRUNE_TOLERANCE};

/// `c·Z_n^(m)`.
///
/// Parameter pairs violating `|m| <= n` or the parity of `n - m` are kept
/// with a zero prefactor rather than rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZernikeTerm {
    n: u32,
    m: i32,
    coeff: f64,
}

impl ZernikeTerm {
    pub fn new(n: u32, m: i32, coeff: f64) -> Self {
        let coeff = if is_valid_order(n, m) { coeff } else { 0.0 };
        Self { n, m, coeff }
    }

    pub fn unit(n: u32, m: i32) -> Self {
        Self::new(n, m, 1.0)
    }

    pub fn from_noll(j: u64, coeff: f64) -> Result<Self> {
        let (n, m) = noll_inverse(j)?;
        Ok(Self::new(n, m, coeff))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn is_valid(&self) -> bool {
        is_valid_order(self.n, self.m)
    }

    pub fn noll_index(&self) -> Result<u64> {
        noll_index(self.n, self.m)
    }

    pub fn radial(&self) -> Result<RadialPoly> {
        RadialPoly::new(self.n, self.m)
    }

    pub fn azimuthal(&self) -> AzimuthalTerm {
        AzimuthalTerm::new(self.m, self.coeff)
    }

    /// Value at `pt`; exactly zero outside the closed unit disk (`r > 1`).
    pub fn eval(&self, pt: PointDisk) -> f64 {
        let (r, phi) = pt.polar();
        if r > 1.0 || self.coeff == 0.0 {
            return 0.0;
        }
        match self.radial() {
            Ok(radial) => radial.eval(r) * self.azimuthal().eval(phi),
            Err(_) => 0.0,
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.n, self.m, self.coeff * s)
    }

    pub fn try_div(&self, s: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(1.0 / s))
    }

    pub fn to_polynomial(&self) -> Polynomial2 {
        super::zernike_to_polynomial(&ZernikeExpansion::from(*self))
    }
}

impl Mul<f64> for ZernikeTerm {
    type Output = ZernikeTerm;

    fn mul(self, s: f64) -> ZernikeTerm {
        self.scale(s)
    }
}

impl MulAssign<f64> for ZernikeTerm {
    fn mul_assign(&mut self, s: f64) {
        *self = self.scale(s);
    }
}

impl Mul for ZernikeTerm {
    type Output = ZernikeExpansion;

    fn mul(self, rhs: ZernikeTerm) -> ZernikeExpansion {
        ZernikeExpansion::new(term_product(&self, &rhs))
    }
}

/// `Σ c_{n,m} Z_n^(m)` with distinct `(n, m)`, sorted by Noll index.
///
/// Invalid and negligible (`|c| < 1e-12`) terms are dropped on construction.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ZernikeExpansion {
    terms: Vec<ZernikeTerm>,
}

impl ZernikeExpansion {
    pub fn new(terms: impl IntoIterator<Item = ZernikeTerm>) -> Self {
        let mut acc: BTreeMap<u64, ZernikeTerm> = BTreeMap::new();
        for t in terms {
            let Ok(j) = t.noll_index() else { continue };
            acc.entry(j).and_modify(|e| e.coeff += t.coeff).or_insert(t);
        }
        Self {
            terms: acc
                .into_values()
                .filter(|t| t.coeff.abs() >= PRUNE_TOLERANCE)
                .collect(),
        }
    }

    /// Dense coefficients by Noll index, `coeffs[j - 1]` multiplying `Z_j`.
    pub fn from_noll_coefficients(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().enumerate().map(|(i, &c)| {
            let (n, m) = noll_inverse(i as u64 + 1).expect("index is positive");
            ZernikeTerm::new(n, m, c)
        }))
    }

    pub fn terms(&self) -> &[ZernikeTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, n: u32, m: i32) -> f64 {
        self.terms
            .iter()
            .find(|t| t.n == n && t.m == m)
            .map_or(0.0, |t| t.coeff)
    }

    /// Largest radial degree present.
    pub fn max_order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.n).max()
    }

    pub fn eval(&self, pt: PointDisk) -> f64 {
        self.terms.iter().map(|t| t.eval(pt)).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.terms.iter().map(|t| t.scale(s)))
    }

    pub fn try_div(&self, s: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(1.0 / s))
    }

    pub fn to_polynomial(&self) -> Polynomial2 {
        super::zernike_to_polynomial(self)
    }

    pub fn from_polynomial(p: &Polynomial2) -> Self {
        super::polynomial_to_zernike(p)
    }
}

/// Linearized product of two single terms.
fn term_product(a: &ZernikeTerm, b: &ZernikeTerm) -> Vec<ZernikeTerm> {
    let c = a.coeff * b.coeff;
    if c == 0.0 {
        return Vec::new();
    }
    let ra = (a.n, a.m.unsigned_abs());
    let rb = (b.n, b.m.unsigned_abs());
    let top = a.n + b.n;
    let azimuthal = AzimuthalTerm::unit(a.m).product(&AzimuthalTerm::unit(b.m));
    let mut out = Vec::new();
    for az in azimuthal.terms() {
        let am = az.m.unsigned_abs();
        for n in (am..=top).step_by(2) {
            let g = g_unchecked([ra, rb, (n, am)]);
            out.push(ZernikeTerm::new(n, az.m, c * az.coeff * g));
        }
    }
    out
}

impl From<ZernikeTerm> for ZernikeExpansion {
    fn from(t: ZernikeTerm) -> Self {
        Self::new([t])
    }
}

impl FromIterator<ZernikeTerm> for ZernikeExpansion {
    fn from_iter<I: IntoIterator<Item = ZernikeTerm>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl AddAssign<ZernikeTerm> for ZernikeExpansion {
    fn add_assign(&mut self, t: ZernikeTerm) {
        *self = Self::new(self.terms.iter().copied().chain([t]));
    }
}

impl AddAssign<&ZernikeExpansion> for ZernikeExpansion {
    fn add_assign(&mut self, rhs: &ZernikeExpansion) {
        *self = &*self + rhs;
    }
}

impl Add<&ZernikeExpansion> for &ZernikeExpansion {
    type Output = ZernikeExpansion;

    fn add(self, rhs: &ZernikeExpansion) -> ZernikeExpansion {
        ZernikeExpansion::new(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Sub<&ZernikeExpansion> for &ZernikeExpansion {
    type Output = ZernikeExpansion;

    fn sub(self, rhs: &ZernikeExpansion) -> ZernikeExpansion {
        self + &(-rhs)
    }
}

impl Neg for &ZernikeExpansion {
    type Output = ZernikeExpansion;

    fn neg(self) -> ZernikeExpansion {
        self.scale(-1.0)
    }
}

impl Mul<&ZernikeExpansion> for &ZernikeExpansion {
    type Output = ZernikeExpansion;

    fn mul(self, rhs: &ZernikeExpansion) -> ZernikeExpansion {
        ZernikeExpansion::new(
            self.terms
                .iter()
                .flat_map(|a| rhs.terms.iter().flat_map(move |b| term_product(a, b))),
        )
    }
}

impl Mul for ZernikeExpansion {
    type Output = ZernikeExpansion;

    fn mul(self, rhs: ZernikeExpansion) -> ZernikeExpansion {
        &self * &rhs
    }
}

impl MulAssign<&ZernikeExpansion> for ZernikeExpansion {
    fn mul_assign(&mut self, rhs: &ZernikeExpansion) {
        *self = &*self * rhs;
    }
}

impl MulAssign<f64> for ZernikeExpansion {
    fn mul_assign(&mut self, s: f64) {
        *self = self.scale(s);
    }
}
