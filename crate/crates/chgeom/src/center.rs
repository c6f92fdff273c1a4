//! Chebyshev centers: the minimizer of `max_i d(m, x_i)`.
//!
//! Each iteration moves the current iterate to the origin, models every
//! `½ d(·, x_i)²` by its second-order expansion there, and takes the step of
//! the resulting minimax quadratic program, solved through its dual over the
//! probability simplex. Steps are safeguarded by backtracking on the maximum
//! distance.

use nalgebra::{DMatrix, DVector};

use crate::ball::{dist, from_real, to_real, CHPoint};
use crate::geodesic::{gadget, geodesic};
use crate::isometry::act;
use crate::{GeomError, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 200;

/// Largest number of candidate points entering the support enumeration.
const MAX_SUPPORT: usize = 12;
const HESSIAN_STEP: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct Center {
    pub point: CHPoint,
    /// `max_i d(point, x_i)`.
    pub radius: f64,
    /// `max_i d(point, x_i) − min_i d(point, x_i)`; zero exactly when the
    /// center is equidistant from every input point.
    pub equidistance_residual: f64,
    pub iterations: usize,
}

impl Center {
    fn at(point: CHPoint, points: &[CHPoint], iterations: usize) -> Self {
        let ds: Vec<f64> = points.iter().map(|p| dist(&point, p)).collect();
        let radius = ds.iter().copied().fold(0.0, f64::max);
        let min = ds.iter().copied().fold(f64::INFINITY, f64::min);
        Self {
            point,
            radius,
            equidistance_residual: radius - min,
            iterations,
        }
    }
}

/// Chebyshev center of `points`; iteration stops once the step falls below
/// `tol`.
pub fn center(points: &[CHPoint], tol: f64) -> Result<Center> {
    let first = points
        .first()
        .ok_or_else(|| GeomError::InvalidArgument("center of an empty set".into()))?;
    for p in points {
        first.check_same_dim(p)?;
    }
    if !(tol > 0.0) {
        return Err(GeomError::InvalidArgument("tolerance must be positive".into()));
    }
    if points.iter().all(|p| p == first) {
        return Ok(Center::at(first.clone(), points, 0));
    }
    let (a, b) = farthest_pair(points);
    let mid = geodesic(&points[a], &points[b], 0.5)?;
    if points.len() == 2 {
        return Ok(Center::at(mid, points, 0));
    }
    let mut m = mid;
    let mut lambda = vec![1.0 / points.len() as f64; points.len()];
    let mut step = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        let g = gadget(&m);
        let ginv = g.inverse();
        let ys = points.iter().map(|p| act(&ginv, p)).collect::<Result<Vec<_>>>()?;
        let model = LocalModel::new(&ys);
        let (xi, new_lambda, predicted) = model.step(&lambda);
        lambda = new_lambda;
        step = xi.norm();
        let f0 = model.max_value();
        let mut alpha = 1.0;
        let mut accepted = None;
        for _ in 0..60 {
            let trial = &xi * alpha;
            if trial.norm() < 0.9 {
                let cand = CHPoint::new(from_real(&trial))?;
                let f = ys.iter().map(|y| 0.5 * dist(&cand, y).powi(2)).fold(0.0, f64::max);
                let noise = 1e-14 * (1.0 + f0);
                if f <= f0 - 1e-4 * alpha * predicted || predicted <= noise {
                    accepted = Some(cand);
                    break;
                }
            }
            alpha *= 0.5;
        }
        let Some(cand) = accepted else {
            // No decrease above rounding level: the iterate is optimal to
            // working precision.
            return Ok(Center::at(m, points, it));
        };
        m = act(&g, &cand)?;
        if step * alpha < tol {
            return Ok(Center::at(m, points, it));
        }
    }
    Err(GeomError::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual: step,
    })
}

fn farthest_pair(points: &[CHPoint]) -> (usize, usize) {
    let mut best = (0, 0, -1.0);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist(&points[i], &points[j]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    (best.0, best.1)
}

/// Values, gradients and Hessians of `½ d(ξ, y_i)²` at `ξ = 0` in real
/// ball coordinates, where the chart is normal to first order.
struct LocalModel {
    values: Vec<f64>,
    grads: Vec<DVector<f64>>,
    hessians: Vec<DMatrix<f64>>,
}

impl LocalModel {
    fn new(ys: &[CHPoint]) -> Self {
        let dim = 2 * ys[0].dim();
        let origin = CHPoint::origin(ys[0].dim());
        let mut values = Vec::new();
        let mut grads = Vec::new();
        let mut hessians = Vec::new();
        for y in ys {
            let d = dist(&origin, y);
            values.push(0.5 * d * d);
            let r = y.norm();
            let g = if r > 0.0 { to_real(y.coords()) * (-d / r) } else { DVector::zeros(dim) };
            grads.push(g);
            hessians.push(fd_hessian(y, dim));
        }
        Self {
            values,
            grads,
            hessians,
        }
    }

    fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Minimizes `max_i (f_i + g_i·ξ) + ½ ξᵀWξ` with `W = Σ λ_i H_i`.
    /// Returns the step, the new multipliers and the predicted decrease.
    fn step(&self, lambda: &[f64]) -> (DVector<f64>, Vec<f64>, f64) {
        let dim = self.grads[0].len();
        let mut w = DMatrix::<f64>::zeros(dim, dim);
        for (l, h) in lambda.iter().zip(&self.hessians) {
            w += h * *l;
        }
        let mut mu = 1e-12 * (1.0 + w.norm());
        let chol = loop {
            let reg = &w + DMatrix::<f64>::identity(dim, dim) * mu;
            if let Some(c) = reg.cholesky() {
                break c;
            }
            mu *= 10.0;
        };
        let n = self.values.len();
        let gmat = DMatrix::from_columns(&self.grads);
        let winv_g = chol.solve(&gmat);
        let k = gmat.transpose() * &winv_g;
        let lam = solve_simplex_qp(&self.values, &k);
        let combo = &winv_g * DVector::from_column_slice(&lam);
        let xi = -combo;
        let model = (0..n)
            .map(|i| self.values[i] + self.grads[i].dot(&xi))
            .fold(f64::NEG_INFINITY, f64::max)
            + 0.5 * xi.dot(&(&w * &xi));
        let predicted = (self.max_value() - model).max(0.0);
        (xi, lam, predicted)
    }
}

fn fd_hessian(y: &CHPoint, dim: usize) -> DMatrix<f64> {
    let h = HESSIAN_STEP;
    let f = |v: &DVector<f64>| {
        let p = CHPoint::new(from_real(v)).expect("small displacement");
        0.5 * dist(&p, y).powi(2)
    };
    let e = |i: usize| {
        let mut v = DVector::zeros(dim);
        v[i] = h;
        v
    };
    let f0 = f(&DVector::zeros(dim));
    let mut out = DMatrix::zeros(dim, dim);
    for a in 0..dim {
        let (ea, ma) = (e(a), -e(a));
        out[(a, a)] = (f(&ea) - 2.0 * f0 + f(&ma)) / (h * h);
        for b in a + 1..dim {
            let eb = e(b);
            let v = (f(&(&ea + &eb)) - f(&(&ea - &eb)) - f(&(&eb - &ea)) + f(&(-&ea - &eb)))
                / (4.0 * h * h);
            out[(a, b)] = v;
            out[(b, a)] = v;
        }
    }
    out
}

/// Maximizes `fᵀλ − ½ λᵀKλ` over the probability simplex by checking the
/// KKT conditions on every support drawn from the largest entries of `f`.
fn solve_simplex_qp(f: &[f64], k: &DMatrix<f64>) -> Vec<f64> {
    let n = f.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f[b].total_cmp(&f[a]));
    order.truncate(MAX_SUPPORT);
    let scale = 1.0 + f.iter().map(|v| v.abs()).fold(0.0, f64::max) + k.amax();
    let dual = |lam: &[f64]| {
        let l = DVector::from_column_slice(lam);
        DVector::from_column_slice(f).dot(&l) - 0.5 * l.dot(&(k * &l))
    };
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut fallback = vec![0.0; n];
    fallback[order[0]] = 1.0;
    for mask in 1u32..(1 << order.len()) {
        let support: Vec<usize> = (0..order.len()).filter(|b| mask >> b & 1 == 1).map(|b| order[b]).collect();
        let s = support.len();
        let mut a = DMatrix::<f64>::zeros(s + 1, s + 1);
        let mut rhs = DVector::<f64>::zeros(s + 1);
        for (p, &i) in support.iter().enumerate() {
            for (q, &j) in support.iter().enumerate() {
                a[(p, q)] = k[(i, j)];
            }
            a[(p, s)] = 1.0;
            a[(s, p)] = 1.0;
            rhs[p] = f[i];
        }
        rhs[s] = 1.0;
        let Some(sol) = a.lu().solve(&rhs) else { continue };
        if sol.iter().any(|v| !v.is_finite()) || sol.rows(0, s).iter().any(|&v| v < -1e-12) {
            continue;
        }
        let mut lam = vec![0.0; n];
        for (p, &i) in support.iter().enumerate() {
            lam[i] = sol[p].max(0.0);
        }
        let total: f64 = lam.iter().sum();
        lam.iter_mut().for_each(|v| *v /= total);
        let nu = sol[s];
        let kl = k * DVector::from_column_slice(&lam);
        let complementary = (0..n)
            .filter(|i| !support.contains(i))
            .all(|i| f[i] - kl[i] <= nu + 1e-12 * scale);
        if !complementary {
            continue;
        }
        let value = dual(&lam);
        if best.as_ref().map_or(true, |(v, _)| value > *v) {
            best = Some((value, lam));
        }
    }
    best.map(|(_, l)| l).unwrap_or(fallback)
}

/// Shorthand for [`center`] at [`DEFAULT_TOL`], returning the point only.
pub fn center_point(points: &[CHPoint]) -> Result<CHPoint> {
    center(points, DEFAULT_TOL).map(|c| c.point)
}
