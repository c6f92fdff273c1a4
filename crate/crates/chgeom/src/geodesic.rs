//! Geodesics and geodesic rays, computed by moving one endpoint to the origin
//! where geodesics are diameters.

use nalgebra::{DMatrix, DVector};

use crate::ball::{tangent_norm, BoundaryPoint, CHPoint, C64};
use crate::isometry::{act, boundary_act, j_product, push_tangent, Isometry};
use crate::{GeomError, Result};

/// Tolerance on `|v|_g − 1` for [`ray_endpoint`].
pub const UNIT_TOL: f64 = 1e-8;

/// An isometry sending the origin to `y`, from a `J`-orthonormal completion
/// of the normalized lift of `y`.
pub fn gadget(y: &CHPoint) -> Isometry {
    let n = y.dim();
    let scale = 1.0 / (1.0 - y.norm().powi(2)).sqrt();
    let timelike = y.lift() * C64::new(scale, 0.0);
    let mut cols: Vec<DVector<C64>> = Vec::with_capacity(n + 1);
    for k in 0..n {
        let mut v = DVector::from_fn(n + 1, |i, _| C64::new(f64::from(u8::from(i == k)), 0.0));
        // ⟨⟨Y, Y⟩⟩ = −1, so projecting off Y adds ⟨⟨v, Y⟩⟩ Y.
        v += &timelike * j_product(&v, &timelike);
        for u in &cols {
            v -= u * j_product(&v, u);
        }
        let norm = j_product(&v, &v).re.sqrt();
        cols.push(v / C64::new(norm, 0.0));
    }
    cols.push(timelike);
    let mut m = DMatrix::from_columns(&cols);
    let det = m.determinant();
    let fix = (det / det.norm()).conj();
    for i in 0..=n {
        m[(i, 0)] *= fix;
    }
    Isometry::from_matrix_unchecked(m)
}

/// `γ(y, z, t)`: constant-speed geodesic with `γ(0) = y` and `γ(1) = z`.
/// Parameters outside `[0, 1]` extend the geodesic.
pub fn geodesic(y: &CHPoint, z: &CHPoint, t: f64) -> Result<CHPoint> {
    y.check_same_dim(z)?;
    let g = gadget(y);
    let w = act(&g.inverse(), z)?;
    let r = w.norm();
    if r == 0.0 {
        return Ok(y.clone());
    }
    let s = (t * r.atanh()).tanh() / r;
    let p = CHPoint::new(w.coords() * C64::new(s, 0.0))?;
    act(&g, &p)
}

/// Endpoint on the sphere at infinity of the geodesic ray from `x` with
/// unit initial velocity `v`.
pub fn ray_endpoint(x: &CHPoint, v: &DVector<C64>) -> Result<BoundaryPoint> {
    if v.len() != x.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: x.dim(),
            found: v.len(),
        });
    }
    let norm = tangent_norm(x, v);
    if !((norm - 1.0).abs() <= UNIT_TOL) {
        return Err(GeomError::NotUnit { norm });
    }
    let g = gadget(x);
    let u = push_tangent(&g.inverse(), x, v)?;
    boundary_act(&g, &BoundaryPoint::normalized(u)?)
}
