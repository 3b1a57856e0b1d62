//! Ordinary least squares of scattered `(x, y, f)` samples onto the power
//! basis `x^p y^q`, `p + q <= K`, and the hand-off to Zernike coefficients.
//!
//! Going through the power basis is a convenience pipeline; regressing
//! directly onto Zernike functions would need fewer operations.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::format::{data_lines, parse_field};
use crate::geometry::Point3;
use crate::polynomials::{Monomial2, Polynomial2};
use crate::zernike::{polynomial_to_zernike, ZernikeExpansion};

/// Diagonal entries of the triangular factor below this fraction of the
/// largest one flag a rank-deficient design.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Observations `f(x, y)`, carried as `Point3 { x, y, z: f }`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    samples: Vec<Point3>,
}

impl SampleSet {
    pub fn new(samples: Vec<Point3>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyData);
        }
        if let Some(i) = samples.iter().position(|s| !s.is_finite()) {
            return Err(Error::NonFinite { line: i + 1 });
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[Point3] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Parses whitespace-separated `x y f` lines. `#` starts a comment; blank
/// lines are skipped.
pub fn load_samples(text: &str) -> Result<SampleSet> {
    let mut samples = Vec::new();
    for (line, fields) in data_lines(text) {
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 fields `x y f`, found {}", fields.len()),
            });
        }
        let x: f64 = parse_field(line, fields[0], "x")?;
        let y: f64 = parse_field(line, fields[1], "y")?;
        let f: f64 = parse_field(line, fields[2], "f")?;
        let p = Point3::new(x, y, f);
        if !p.is_finite() {
            return Err(Error::NonFinite { line });
        }
        samples.push(p);
    }
    SampleSet::new(samples)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub polynomial: Polynomial2,
    /// `sqrt(Σ residual²)`
    pub residual_norm: f64,
    pub sample_count: usize,
    pub basis_size: usize,
}

/// `(p, q)` with `p + q <= max_order`, by degree then descending `p`.
pub fn basis_exponents(max_order: u32) -> Vec<(u32, u32)> {
    (0..=max_order)
        .flat_map(|d| (0..=d).rev().map(move |p| (p, d - p)))
        .collect()
}

pub fn fit(data: &SampleSet, max_order: u32) -> Result<FitResult> {
    let basis = basis_exponents(max_order);
    let rows = data.len();
    let cols = basis.len();
    if rows < cols {
        return Err(Error::Underdetermined {
            samples: rows,
            unknowns: cols,
        });
    }
    let design = DMatrix::from_fn(rows, cols, |i, k| {
        let s = &data.samples[i];
        let (p, q) = basis[k];
        s.x.powi(p as i32) * s.y.powi(q as i32)
    });
    let values = DVector::from_iterator(rows, data.samples.iter().map(|s| s.z));

    let qr = design.clone().qr();
    let r = qr.r();
    let largest = r.diagonal().iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    for k in 0..cols {
        let ratio = if largest > 0.0 {
            r[(k, k)].abs() / largest
        } else {
            0.0
        };
        if ratio < RANK_TOLERANCE {
            let (p, q) = basis[k];
            return Err(Error::RankDeficient {
                column: k,
                p,
                q,
                ratio,
            });
        }
    }
    let projected = qr.q().transpose() * &values;
    let alpha = r
        .solve_upper_triangular(&projected)
        .expect("diagonal checked nonzero");

    let residual = &values - &design * &alpha;
    let polynomial = basis
        .iter()
        .zip(alpha.iter())
        .map(|(&(p, q), &c)| Monomial2::new(c, p, q))
        .collect();
    Ok(FitResult {
        polynomial,
        residual_norm: residual.norm(),
        sample_count: rows,
        basis_size: cols,
    })
}

/// Fits in the power basis, then converts the fit to Zernike functions.
pub fn fit_to_zernike(data: &SampleSet, max_order: u32) -> Result<ZernikeExpansion> {
    Ok(polynomial_to_zernike(&fit(data, max_order)?.polynomial))
}
