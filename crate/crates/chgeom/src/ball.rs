//! Points of the unit ball and its boundary sphere, and the invariant metric.

use nalgebra::{DVector, Complex};

use crate::{GeomError, Result};

pub type C64 = Complex<f64>;

/// Points must satisfy `|z| < 1 − INTERIOR_MARGIN`.
pub const INTERIOR_MARGIN: f64 = 1e-12;
/// Boundary points must satisfy `||b| − 1| ≤ SPHERE_TOL`.
pub const SPHERE_TOL: f64 = 1e-12;

/// `⟨a, b⟩ = Σ a_i · conj(b_i)`.
pub fn hermitian(a: &DVector<C64>, b: &DVector<C64>) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y.conj()).sum()
}

pub fn norm_sq(a: &DVector<C64>) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

/// Real coordinates `(Re z_1 … Re z_n, Im z_1 … Im z_n)`.
pub fn to_real(v: &DVector<C64>) -> DVector<f64> {
    let n = v.len();
    DVector::from_fn(2 * n, |i, _| if i < n { v[i].re } else { v[i - n].im })
}

pub fn from_real(v: &DVector<f64>) -> DVector<C64> {
    let n = v.len() / 2;
    DVector::from_fn(n, |i, _| C64::new(v[i], v[n + i]))
}

/// `|a|²|b|² − |⟨a,b⟩|²`, summed as `Σ_{i<j} |a_i b_j − a_j b_i|²` so the
/// result is never negative.
fn wedge_sq(a: &DVector<C64>, b: &DVector<C64>) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            s += (a[i] * b[j] - a[j] * b[i]).norm_sqr();
        }
    }
    s
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(GeomError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// A point of `CH^n` in the unit-ball model.
#[derive(Debug, Clone, PartialEq)]
pub struct CHPoint {
    z: DVector<C64>,
}

impl CHPoint {
    pub fn new(z: DVector<C64>) -> Result<Self> {
        if z.is_empty() {
            return Err(GeomError::InvalidArgument("points need n >= 1".into()));
        }
        let norm = norm_sq(&z).sqrt();
        if !norm.is_finite() || norm >= 1.0 - INTERIOR_MARGIN {
            return Err(GeomError::OutsideBall { norm });
        }
        Ok(Self { z })
    }

    pub fn from_slice(z: &[C64]) -> Result<Self> {
        Self::new(DVector::from_column_slice(z))
    }

    pub fn origin(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            z: DVector::zeros(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    pub fn coords(&self) -> &DVector<C64> {
        &self.z
    }

    pub fn norm(&self) -> f64 {
        norm_sq(&self.z).sqrt()
    }

    /// Homogeneous lift `(z, 1)`.
    pub fn lift(&self) -> DVector<C64> {
        let n = self.dim();
        DVector::from_fn(n + 1, |i, _| if i < n { self.z[i] } else { C64::new(1.0, 0.0) })
    }

    /// Euclidean distance of ball coordinates.
    pub fn euclidean_distance(&self, other: &CHPoint) -> f64 {
        (&self.z - &other.z).norm()
    }

    pub(crate) fn check_same_dim(&self, other: &CHPoint) -> Result<()> {
        check_dims(self.dim(), other.dim())
    }
}

/// A point of the sphere at infinity `S^{2n−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPoint {
    b: DVector<C64>,
}

impl BoundaryPoint {
    pub fn new(b: DVector<C64>) -> Result<Self> {
        if b.is_empty() {
            return Err(GeomError::InvalidArgument("points need n >= 1".into()));
        }
        let norm = norm_sq(&b).sqrt();
        if !((norm - 1.0).abs() <= SPHERE_TOL) {
            return Err(GeomError::OffSphere { norm });
        }
        Ok(Self { b })
    }

    /// Projects a nonzero vector onto the sphere.
    pub fn normalized(b: DVector<C64>) -> Result<Self> {
        let norm = norm_sq(&b).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(GeomError::OffSphere { norm });
        }
        Self::new(b / C64::new(norm, 0.0))
    }

    pub fn dim(&self) -> usize {
        self.b.len()
    }

    pub fn coords(&self) -> &DVector<C64> {
        &self.b
    }

    pub fn distance(&self, other: &BoundaryPoint) -> f64 {
        (&self.b - &other.b).norm()
    }
}

/// Distance with `cosh² d = |1 − ⟨x,y⟩|² / ((1 − |x|²)(1 − |y|²))`,
/// evaluated through the equivalent
/// `sinh² d = (|x − y|² − (|x|²|y|² − |⟨x,y⟩|²)) / ((1 − |x|²)(1 − |y|²))`.
pub fn dist(x: &CHPoint, y: &CHPoint) -> f64 {
    assert_eq!(x.dim(), y.dim(), "points of different dimension");
    let num = (norm_sq(&(&x.z - &y.z)) - wedge_sq(&x.z, &y.z)).max(0.0);
    let den = (1.0 - norm_sq(&x.z)) * (1.0 - norm_sq(&y.z));
    (num / den).sqrt().asinh()
}

/// Hermitian metric `h_x(v, w) = ⟨v,w⟩/(1−|x|²) + ⟨v,x⟩⟨x,w⟩/(1−|x|²)²`,
/// the complex Hessian of the potential `−log(1 − |z|²)`.
pub fn hermitian_metric(x: &CHPoint, v: &DVector<C64>, w: &DVector<C64>) -> C64 {
    let a = 1.0 - norm_sq(&x.z);
    hermitian(v, w) / a + hermitian(v, &x.z) * hermitian(&x.z, w) / (a * a)
}

/// Riemannian length `sqrt(h_x(v, v))` of a tangent vector at `x`.
pub fn tangent_norm(x: &CHPoint, v: &DVector<C64>) -> f64 {
    hermitian_metric(x, v, v).re.max(0.0).sqrt()
}
