use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::geometry::{Point3, PointDisk};

/// A single term `c·x^p·y^q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial2 {
    pub coeff: f64,
    pub x_exp: u32,
    pub y_exp: u32,
}

impl Monomial2 {
    pub fn new(coeff: f64, x_exp: u32, y_exp: u32) -> Self {
        Self {
            coeff,
            x_exp,
            y_exp,
        }
    }

    /// `x^p y^q` with unit coefficient.
    pub fn unit(x_exp: u32, y_exp: u32) -> Self {
        Self::new(1.0, x_exp, y_exp)
    }

    pub fn total_degree(&self) -> u32 {
        self.x_exp + self.y_exp
    }

    pub fn eval(&self, pt: PointDisk) -> f64 {
        self.coeff * pt.x.powi(self.x_exp as i32) * pt.y.powi(self.y_exp as i32)
    }

    pub fn try_div(self, s: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.coeff / s, self.x_exp, self.y_exp))
    }
}

impl Mul for Monomial2 {
    type Output = Monomial2;

    fn mul(self, rhs: Monomial2) -> Monomial2 {
        Monomial2::new(
            self.coeff * rhs.coeff,
            self.x_exp + rhs.x_exp,
            self.y_exp + rhs.y_exp,
        )
    }
}

impl Mul<f64> for Monomial2 {
    type Output = Monomial2;

    fn mul(self, s: f64) -> Monomial2 {
        Monomial2::new(self.coeff * s, self.x_exp, self.y_exp)
    }
}

/// Canonical term order: by total degree, then by descending power of `x`.
pub(crate) fn graded_order(a: (u32, u32), b: (u32, u32)) -> Ordering {
    (a.0 + a.1, Reverse(a.0)).cmp(&(b.0 + b.1, Reverse(b.0)))
}

/// `Σ c_{p,q} x^p y^q`, terms in graded order (see [`Polynomial2::terms`]).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial2 {
    terms: Vec<Monomial2>,
}

impl Polynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new([Monomial2::new(c, 0, 0)])
    }

    /// Collects arbitrary terms into canonical form.
    pub fn new(terms: impl IntoIterator<Item = Monomial2>) -> Self {
        let mut acc: BTreeMap<(u32, u32), f64> = BTreeMap::new();
        for t in terms {
            *acc.entry((t.x_exp, t.y_exp)).or_insert(0.0) += t.coeff;
        }
        let mut terms: Vec<Monomial2> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0.0)
            .map(|((p, q), c)| Monomial2::new(c, p, q))
            .collect();
        terms.sort_by(|a, b| graded_order((a.x_exp, a.y_exp), (b.x_exp, b.y_exp)));
        Self { terms }
    }

    /// Terms ordered by total degree `p + q`, and within a degree by
    /// descending `p` (so `x²` precedes `xy` precedes `y²`).
    pub fn terms(&self) -> &[Monomial2] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `p + q`; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(Monomial2::total_degree)
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> f64 {
        self.terms
            .binary_search_by(|t| graded_order((t.x_exp, t.y_exp), (x_exp, y_exp)))
            .map(|i| self.terms[i].coeff)
            .unwrap_or(0.0)
    }

    pub fn eval(&self, pt: PointDisk) -> f64 {
        self.terms.iter().map(|t| t.eval(pt)).sum()
    }

    /// Residual `z - p(x, y)` of a sample record.
    pub fn residual(&self, sample: &Point3) -> f64 {
        sample.z - self.eval(sample.planar())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.terms.iter().map(|&t| t * s))
    }

    pub fn try_div(&self, s: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(1.0 / s))
    }

    /// Integer power by repeated multiplication; `p^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(1.0);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops terms with `|coeff| < tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|t| t.coeff.abs() >= tol)
                .copied()
                .collect(),
        }
    }
}

impl From<Monomial2> for Polynomial2 {
    fn from(m: Monomial2) -> Self {
        Self::new([m])
    }
}

impl FromIterator<Monomial2> for Polynomial2 {
    fn from_iter<I: IntoIterator<Item = Monomial2>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl Add<&Polynomial2> for &Polynomial2 {
    type Output = Polynomial2;

    fn add(self, rhs: &Polynomial2) -> Polynomial2 {
        Polynomial2::new(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Sub<&Polynomial2> for &Polynomial2 {
    type Output = Polynomial2;

    fn sub(self, rhs: &Polynomial2) -> Polynomial2 {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial2> for &Polynomial2 {
    type Output = Polynomial2;

    fn mul(self, rhs: &Polynomial2) -> Polynomial2 {
        Polynomial2::new(
            self.terms
                .iter()
                .flat_map(|&a| rhs.terms.iter().map(move |&b| a * b)),
        )
    }
}

impl Neg for &Polynomial2 {
    type Output = Polynomial2;

    fn neg(self) -> Polynomial2 {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Polynomial2 {
    type Output = Polynomial2;

    fn mul(self, s: f64) -> Polynomial2 {
        self.scale(s)
    }
}

impl Add for Polynomial2 {
    type Output = Polynomial2;

    fn add(self, rhs: Polynomial2) -> Polynomial2 {
        &self + &rhs
    }
}

impl Sub for Polynomial2 {
    type Output = Polynomial2;

    fn sub(self, rhs: Polynomial2) -> Polynomial2 {
        &self - &rhs
    }
}

impl Mul for Polynomial2 {
    type Output = Polynomial2;

    fn mul(self, rhs: Polynomial2) -> Polynomial2 {
        &self * &rhs
    }
}

impl Neg for Polynomial2 {
    type Output = Polynomial2;

    fn neg(self) -> Polynomial2 {
        -&self
    }
}

impl AddAssign<Monomial2> for Polynomial2 {
    fn add_assign(&mut self, m: Monomial2) {
        *self = Polynomial2::new(self.terms.iter().copied().chain([m]));
    }
}

impl AddAssign<&Polynomial2> for Polynomial2 {
    fn add_assign(&mut self, rhs: &Polynomial2) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial2> for Polynomial2 {
    fn sub_assign(&mut self, rhs: &Polynomial2) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Polynomial2> for Polynomial2 {
    fn mul_assign(&mut self, rhs: &Polynomial2) {
        *self = &*self * rhs;
    }
}

impl MulAssign<f64> for Polynomial2 {
    fn mul_assign(&mut self, s: f64) {
        *self = self.scale(s);
    }
}
