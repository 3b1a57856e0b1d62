use crate::error::{Error, Result};

use super::univariate::Polynomial1;

/// Terminating Gaussian hypergeometric series
///
/// ```text
/// ₂F₁(a, b; c; z) = Σ_{k=0}^{|a|} (a)_k (b)_k / ((c)_k k!) z^k,   a ∈ {0, -1, -2, ...}
/// ```
///
/// held as an expanded polynomial in `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergeom21 {
    a: i32,
    b: f64,
    c: f64,
    series: Vec<f64>,
    body: Polynomial1,
}

impl Hypergeom21 {
    pub fn new(a: i32, b: f64, c: f64) -> Result<Self> {
        if a > 0 {
            return Err(Error::NonTerminating(a));
        }
        let series = scaled_series(a, b, c, 1.0)?;
        let body = Polynomial1::from_coefficients(&series);
        Ok(Self {
            a,
            b,
            c,
            series,
            body,
        })
    }

    pub fn a(&self) -> i32 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// All `|a| + 1` series coefficients, including any that vanished.
    pub fn series(&self) -> &[f64] {
        &self.series
    }

    pub fn body(&self) -> &Polynomial1 {
        &self.body
    }

    pub fn into_polynomial(self) -> Polynomial1 {
        self.body
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.body.eval(z)
    }
}

/// Coefficients of `scale·₂F₁(a, b; c; z)`. Each step multiplies by the
/// numerator before dividing, so integer-valued coefficients with integer
/// parameters come out exact.
pub(crate) fn scaled_series(a: i32, b: f64, c: f64, scale: f64) -> Result<Vec<f64>> {
    let degree = a.unsigned_abs();
    let mut series = Vec::with_capacity(degree as usize + 1);
    let mut term = scale;
    series.push(term);
    for k in 0..degree {
        let kf = f64::from(k);
        let denom = (c + kf) * (kf + 1.0);
        if denom == 0.0 {
            return Err(Error::PochhammerZero { c, k: k + 1 });
        }
        term = term * ((f64::from(a) + kf) * (b + kf)) / denom;
        series.push(term);
    }
    Ok(series)
}

impl AsRef<Polynomial1> for Hypergeom21 {
    fn as_ref(&self) -> &Polynomial1 {
        &self.body
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_a_is_constant_one() {
        let h = Hypergeom21::new(0, 5.0, 3.0).unwrap();
        assert_eq!(h.body(), &Polynomial1::constant(1.0));
        assert_eq!(h.series().len(), 1);
    }

    #[test]
    fn single_step() {
        let h = Hypergeom21::new(-1, 2.0, 1.0).unwrap();
        assert_eq!(h.body(), &Polynomial1::from_coefficients(&[1.0, -2.0]));
        let h = Hypergeom21::new(-1, 3.0, 2.0).unwrap();
        assert_eq!(h.eval(0.25), 0.625);
    }

    #[test]
    fn rejects_positive_a() {
        assert_eq!(Hypergeom21::new(1, 1.0, 1.0), Err(Error::NonTerminating(1)));
    }

    #[test]
    fn rejects_vanishing_pochhammer() {
        // (c)_k with c = -1 vanishes at k = 2, inside a degree-3 series.
        assert!(matches!(
            Hypergeom21::new(-3, 1.0, -1.0),
            Err(Error::PochhammerZero { k: 2, .. })
        ));
        // c = -3 only vanishes at k = 4, past the end of a degree-3 series.
        assert!(Hypergeom21::new(-3, 1.0, -3.0).is_ok());
    }

    #[test]
    fn keeps_full_series_when_b_truncates() {
        // (b)_k = 0 for k >= 2 when b = -1.
        let h = Hypergeom21::new(-3, -1.0, 2.0).unwrap();
        assert_eq!(h.series().len(), 4);
        assert_eq!(h.body().degree(), Some(1));
    }

    fn pochhammer(x: f64, k: u32) -> f64 {
        (0..k).map(|i| x + f64::from(i)).product()
    }

    fn factorial(k: u32) -> f64 {
        (1..=k).map(f64::from).product()
    }

    proptest! {
        #[test]
        fn matches_textbook_series(s in 0u32..=15, b in 0.5f64..12.0, c in 0.5f64..12.0, z in -1.0f64..1.0) {
            let h = Hypergeom21::new(-(s as i32), b, c).unwrap();
            let terms: Vec<f64> = (0..=s)
                .map(|k| pochhammer(-f64::from(s), k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k)))
                .collect();
            let horner = terms.iter().rev().fold(0.0, |acc, &t| acc * z + t);
            let scale: f64 = terms.iter().enumerate().map(|(k, t)| (t * z.powi(k as i32)).abs()).sum();
            prop_assert!((h.eval(z) - horner).abs() <= 1e-13 * scale);
        }
    }
}
