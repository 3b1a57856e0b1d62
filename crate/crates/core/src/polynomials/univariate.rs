use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A single term `c·x^j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial1 {
    pub coeff: f64,
    pub exponent: u32,
}

impl Monomial1 {
    pub fn new(coeff: f64, exponent: u32) -> Self {
        Self { coeff, exponent }
    }

    /// `x^j` with unit coefficient.
    pub fn unit(exponent: u32) -> Self {
        Self::new(1.0, exponent)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeff * x.powi(self.exponent as i32)
    }

    pub fn try_div(self, s: f64) -> Result<Self> {
        if s == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.coeff / s, self.exponent))
    }
}

impl Mul for Monomial1 {
    type Output = Monomial1;

    fn mul(self, rhs: Monomial1) -> Monomial1 {
        Monomial1::new(self.coeff * rhs.coeff, self.exponent + rhs.exponent)
    }
}

impl Mul<f64> for Monomial1 {
    type Output = Monomial1;

    fn mul(self, s: f64) -> Monomial1 {
        Monomial1::new(self.coeff * s, self.exponent)
    }
}

/// `Σ_j c_j x^j`, sorted by ascending exponent.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial1 {
    terms: Vec<Monomial1>,
}

impl Polynomial1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new([Monomial1::new(c, 0)])
    }

    /// Collects arbitrary terms into canonical form.
    pub fn new(terms: impl IntoIterator<Item = Monomial1>) -> Self {
        let mut acc: BTreeMap<u32, f64> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.exponent).or_insert(0.0) += t.coeff;
        }
        Self::from_map(acc)
    }

    /// Dense coefficients, `coeffs[j]` multiplying `x^j`.
    pub fn from_coefficients(coeffs: &[f64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| Monomial1::new(c, j as u32)),
        )
    }

    fn from_map(acc: BTreeMap<u32, f64>) -> Self {
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0.0)
            .map(|(e, c)| Monomial1::new(c, e))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[Monomial1] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.exponent)
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.exponent)
    }

    pub fn coeff(&self, exponent: u32) -> f64 {
        self.terms
            .binary_search_by_key(&exponent, |t| t.exponent)
            .map(|i| self.terms[i].coeff)
            .unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        // Horner over the sparse exponents, highest first.
        let mut acc = 0.0;
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return 0.0,
        };
        for t in self.terms.iter().rev() {
            acc *= x.powi((prev - t.exponent) as i32);
            acc += t.coeff;
            prev = t.exponent;
        }
        acc * x.powi(prev as i32)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.terms.iter().map(|&t| t * s))
    }

    /// Replaces `x` with `x²`.
    pub fn substitute_square(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial1::new(t.coeff, 2 * t.exponent))
                .collect(),
        }
    }

    /// Multiplies by a single term.
    pub fn mul_monomial(&self, m: Monomial1) -> Self {
        Self::new(self.terms.iter().map(|&t| t * m))
    }
}

impl From<Monomial1> for Polynomial1 {
    fn from(m: Monomial1) -> Self {
        Self::new([m])
    }
}

impl Add<&Polynomial1> for &Polynomial1 {
    type Output = Polynomial1;

    fn add(self, rhs: &Polynomial1) -> Polynomial1 {
        Polynomial1::new(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Sub<&Polynomial1> for &Polynomial1 {
    type Output = Polynomial1;

    fn sub(self, rhs: &Polynomial1) -> Polynomial1 {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial1> for &Polynomial1 {
    type Output = Polynomial1;

    fn mul(self, rhs: &Polynomial1) -> Polynomial1 {
        Polynomial1::new(
            self.terms
                .iter()
                .flat_map(|&a| rhs.terms.iter().map(move |&b| a * b)),
        )
    }
}

impl Neg for &Polynomial1 {
    type Output = Polynomial1;

    fn neg(self) -> Polynomial1 {
        self.scale(-1.0)
    }
}

impl Add for Polynomial1 {
    type Output = Polynomial1;

    fn add(self, rhs: Polynomial1) -> Polynomial1 {
        &self + &rhs
    }
}

impl Sub for Polynomial1 {
    type Output = Polynomial1;

    fn sub(self, rhs: Polynomial1) -> Polynomial1 {
        &self - &rhs
    }
}

impl Mul for Polynomial1 {
    type Output = Polynomial1;

    fn mul(self, rhs: Polynomial1) -> Polynomial1 {
        &self * &rhs
    }
}

impl Neg for Polynomial1 {
    type Output = Polynomial1;

    fn neg(self) -> Polynomial1 {
        -&self
    }
}

impl Mul<f64> for &Polynomial1 {
    type Output = Polynomial1;

    fn mul(self, s: f64) -> Polynomial1 {
        self.scale(s)
    }
}

impl AddAssign<Monomial1> for Polynomial1 {
    fn add_assign(&mut self, m: Monomial1) {
        *self = Polynomial1::new(self.terms.iter().copied().chain([m]));
    }
}

impl AddAssign<&Polynomial1> for Polynomial1 {
    fn add_assign(&mut self, rhs: &Polynomial1) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial1> for Polynomial1 {
    fn sub_assign(&mut self, rhs: &Polynomial1) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Polynomial1> for Polynomial1 {
    fn mul_assign(&mut self, rhs: &Polynomial1) {
        *self = &*self * rhs;
    }
}

impl MulAssign<f64> for Polynomial1 {
    fn mul_assign(&mut self, s: f64) {
        *self = self.scale(s);
    }
}
