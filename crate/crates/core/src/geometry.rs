//! Cartesian points in the plane and in 3-space.

use std::f64::consts::PI;

/// A point in the plane, normally inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PointDisk {
    pub x: f64,
    pub y: f64,
}

impl PointDisk {
    pub const ORIGIN: PointDisk = PointDisk { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Builds a point from polar coordinates; `phi` in radians.
    pub fn from_polar(r: f64, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self { x: r * c, y: r * s }
    }

    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Azimuth in `(-π, π]`. The origin (of either zero sign) maps to 0.
    pub fn azimuth(&self) -> f64 {
        if self.x == 0.0 && self.y == 0.0 {
            return 0.0;
        }
        let phi = self.y.atan2(self.x);
        // atan2(-0.0, negative) lands on -π
        if phi == -PI {
            PI
        } else {
            phi
        }
    }

    /// `(radius, azimuth)`.
    pub fn polar(&self) -> (f64, f64) {
        (self.radius(), self.azimuth())
    }
}

/// A point in 3-space. In fitting, `z` carries the sampled value `f(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// The planar location `(x, y)`.
    pub fn planar(&self) -> PointDisk {
        PointDisk::new(self.x, self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}
