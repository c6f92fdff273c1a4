//! `SU(n,1)` acting projectively on the ball and on its boundary sphere.

use nalgebra::{DMatrix, DVector};

use crate::ball::{BoundaryPoint, CHPoint, C64};
use crate::{GeomError, Result};

/// Tolerance on `‖g*Jg − J‖_F`.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Tolerance on `|det g − 1|`.
pub const DET_TOL: f64 = 1e-8;
/// Smallest admissible dehomogenization denominator.
pub const MIN_DENOMINATOR: f64 = 1e-14;

/// `J = diag(1, …, 1, −1)` of size `n + 1`.
pub fn j_form(n: usize) -> DMatrix<C64> {
    DMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i != j {
            C64::new(0.0, 0.0)
        } else if i < n {
            C64::new(1.0, 0.0)
        } else {
            C64::new(-1.0, 0.0)
        }
    })
}

/// `⟨⟨v, w⟩⟩ = Σ_{i<n} v_i conj(w_i) − v_n conj(w_n)`.
pub fn j_product(v: &DVector<C64>, w: &DVector<C64>) -> C64 {
    let n = v.len() - 1;
    let s: C64 = (0..n).map(|i| v[i] * w[i].conj()).sum();
    s - v[n] * w[n].conj()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    g: DMatrix<C64>,
}

impl Isometry {
    /// Validates `g*Jg = J` and `det g = 1`.
    pub fn new(g: DMatrix<C64>) -> Result<Self> {
        if g.nrows() != g.ncols() || g.nrows() < 2 {
            return Err(GeomError::NotIsometry(format!(
                "expected a square matrix of size >= 2, got {}x{}",
                g.nrows(),
                g.ncols()
            )));
        }
        let out = Self { g };
        let defect = out.defect();
        if !(defect <= UNITARITY_TOL) {
            return Err(GeomError::NotIsometry(format!("|g*Jg - J| = {defect:e}")));
        }
        let det = out.g.determinant();
        if !((det - C64::new(1.0, 0.0)).norm() <= DET_TOL) {
            return Err(GeomError::NotIsometry(format!("det = {det}")));
        }
        Ok(out)
    }

    pub(crate) fn from_matrix_unchecked(g: DMatrix<C64>) -> Self {
        Self { g }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            g: DMatrix::identity(n + 1, n + 1),
        }
    }

    /// `exp(X)` for `X` in `su(n,1)`: `X*J + JX = 0` and `tr X = 0`.
    pub fn from_algebra(x: &DMatrix<C64>) -> Result<Self> {
        if x.nrows() != x.ncols() || x.nrows() < 2 {
            return Err(GeomError::InvalidArgument("algebra element must be square".into()));
        }
        let n = x.nrows() - 1;
        let j = j_form(n);
        let scale = 1.0 + x.norm();
        let defect = (x.adjoint() * &j + &j * x).norm();
        if defect > 1e-12 * scale || x.trace().norm() > 1e-12 * scale {
            return Err(GeomError::InvalidArgument("matrix is not in su(n,1)".into()));
        }
        Self::new(x.exp())
    }

    /// Orthogonal projection of an arbitrary complex matrix onto `su(n,1)`.
    pub fn algebra_projection(m: &DMatrix<C64>) -> DMatrix<C64> {
        let n = m.nrows() - 1;
        let j = j_form(n);
        let mut x = (m - &j * m.adjoint() * &j) * C64::new(0.5, 0.0);
        let tr = x.trace() / C64::new((n + 1) as f64, 0.0);
        for i in 0..=n {
            x[(i, i)] -= tr;
        }
        x
    }

    pub fn n(&self) -> usize {
        self.g.nrows() - 1
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.g
    }

    /// `‖g*Jg − J‖_F`.
    pub fn defect(&self) -> f64 {
        let j = j_form(self.n());
        (self.g.adjoint() * &j * &self.g - j).norm()
    }

    /// `‖g − 1‖_F`.
    pub fn distance_to_identity(&self) -> f64 {
        (&self.g - DMatrix::<C64>::identity(self.n() + 1, self.n() + 1)).norm()
    }

    /// `g⁻¹ = J g* J`.
    pub fn inverse(&self) -> Self {
        let j = j_form(self.n());
        Self {
            g: &j * self.g.adjoint() * &j,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Self {
        assert_eq!(self.n(), other.n(), "isometries of different dimension");
        Self {
            g: &self.g * &other.g,
        }
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.n() {
            return Err(GeomError::DimensionMismatch {
                expected: self.n(),
                found: n,
            });
        }
        Ok(())
    }

    /// `g (v, 1)` split into its first `n` entries and the last one.
    fn apply_lift(&self, v: &DVector<C64>) -> (DVector<C64>, C64) {
        let n = self.n();
        let lift = DVector::from_fn(n + 1, |i, _| if i < n { v[i] } else { C64::new(1.0, 0.0) });
        let w = &self.g * lift;
        (w.rows(0, n).into_owned(), w[n])
    }
}

fn dehomogenize(top: DVector<C64>, den: C64) -> Result<DVector<C64>> {
    if !(den.norm() >= MIN_DENOMINATOR) {
        return Err(GeomError::Degenerate(den.norm()));
    }
    Ok(top / den)
}

/// `(z, 1) ↦ g (z, 1)`, dehomogenized.
pub fn act(g: &Isometry, x: &CHPoint) -> Result<CHPoint> {
    g.check_dim(x.dim())?;
    let (top, den) = g.apply_lift(x.coords());
    CHPoint::new(dehomogenize(top, den)?)
}

/// Action on null lifts `(b, 1)`. The image is renormalized after its
/// distance from the sphere is checked against `1e-10`.
pub fn boundary_act(g: &Isometry, b: &BoundaryPoint) -> Result<BoundaryPoint> {
    g.check_dim(b.dim())?;
    let (top, den) = g.apply_lift(b.coords());
    let image = dehomogenize(top, den)?;
    let norm = image.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(GeomError::OffSphere { norm });
    }
    BoundaryPoint::normalized(image)
}

/// Image of the tangent vector `v` at `x` under the differential of `g`:
/// with `g = [[A, b], [c, d]]` and `w = c·x + d`, `dx' = (A v − x' (c·v)) / w`.
pub fn push_tangent(g: &Isometry, x: &CHPoint, v: &DVector<C64>) -> Result<DVector<C64>> {
    g.check_dim(x.dim())?;
    g.check_dim(v.len())?;
    let n = g.n();
    let m = g.matrix();
    let image = act(g, x)?;
    let a = m.view((0, 0), (n, n));
    let c = m.view((n, 0), (1, n));
    let w = (c * x.coords())[0] + m[(n, n)];
    let cv = (c * v)[0];
    Ok((a * v - image.coords() * cv) / w)
}
