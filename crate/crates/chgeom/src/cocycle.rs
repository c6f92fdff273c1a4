//! Integrals of powers of the Kähler form over geodesic simplices, and the
//! group cochains they define.
//!
//! `Δ^j` is split into its `(j+1)!` chambers. On each chamber the simplex map
//! is smooth in cube coordinates (see [`SimplexMap::chamber_point`]), so a
//! tensor Gauss–Legendre rule applies; the chamber parametrization has a
//! Jacobian of constant sign, which fixes the orientation.

use gauss_quad::legendre::GaussLegendre;
use nalgebra::{DMatrix, DVector};

use crate::ball::{from_real, hermitian_metric, to_real, CHPoint};
use crate::isometry::{act, Isometry};
use crate::simplex::{chamber_barycentric, permutations, SimplexMap};
use crate::{GeomError, Result};

/// Central-difference step for derivatives of the simplex map.
pub const FD_STEP: f64 = 1e-5;

/// Coefficients `ω(e_a, e_b)` of the Kähler form `ω = −Im h` of the potential
/// `−log(1 − |z|²)` in real coordinates `(Re z, Im z)`. At the origin this
/// is the standard symplectic matrix `[[0, I], [−I, 0]]`.
pub fn kahler_form(x: &CHPoint) -> DMatrix<f64> {
    let dim = 2 * x.dim();
    let basis: Vec<_> = (0..dim)
        .map(|a| from_real(&DVector::from_fn(dim, |i, _| f64::from(u8::from(i == a)))))
        .collect();
    DMatrix::from_fn(dim, dim, |a, b| {
        if a == b {
            0.0
        } else {
            -hermitian_metric(x, &basis[a], &basis[b]).im
        }
    })
}

/// Pfaffian of an antisymmetric matrix of even size, by expansion along the
/// first row.
pub fn pfaffian(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    if n == 0 {
        return 1.0;
    }
    if n % 2 == 1 {
        return 0.0;
    }
    let mut total = 0.0;
    for j in 1..n {
        if m[(0, j)] == 0.0 {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&i| i != j).collect();
        let minor = DMatrix::from_fn(n - 2, n - 2, |a, b| m[(keep[a], keep[b])]);
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        total += sign * m[(0, j)] * pfaffian(&minor);
    }
    total
}

/// `ω^k(w_1, …, w_{2k}) = k! · Pf([ω(w_a, w_b)])` at `x`, vectors in real
/// coordinates.
pub fn form_power(x: &CHPoint, vectors: &[DVector<f64>]) -> f64 {
    let omega = kahler_form(x);
    let k = vectors.len() / 2;
    let gram = DMatrix::from_fn(vectors.len(), vectors.len(), |a, b| {
        vectors[a].dot(&(&omega * &vectors[b]))
    });
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    fact * pfaffian(&gram)
}

/// Nodes and weights on `[0, 1]`; order 1 is the midpoint rule.
fn rule(order: usize) -> Vec<(f64, f64)> {
    if order == 1 {
        return vec![(0.5, 1.0)];
    }
    GaussLegendre::new(order)
        .expect("order >= 2")
        .iter()
        .map(|(x, w)| (0.5 * (x + 1.0), 0.5 * w))
        .collect()
}

/// Sign of `det ∂(t_1…t_j)/∂(s_1…s_j)` on the chamber of `order`. The map is
/// multilinear in `s`, so central differences are exact.
fn chamber_orientation(order: &[usize]) -> f64 {
    let j = order.len() - 1;
    let mid = vec![0.5; j];
    let jac = DMatrix::from_fn(j, j, |a, b| {
        let (mut hi, mut lo) = (mid.clone(), mid.clone());
        hi[b] += 0.25;
        lo[b] -= 0.25;
        (chamber_barycentric(order, &hi)[a + 1] - chamber_barycentric(order, &lo)[a + 1]) / 0.5
    });
    jac.determinant().signum()
}

/// `∫_{Δ^j} σ^*(ω^k)` with `j = 2k`, using `quad_order` Gauss–Legendre nodes
/// per cube axis on every chamber.
pub fn simplex_integral(map: &SimplexMap, k: usize, quad_order: usize) -> Result<f64> {
    let j = map.dim();
    if 2 * k != j {
        return Err(GeomError::DegreeMismatch {
            form: 2 * k,
            simplex: j,
        });
    }
    if quad_order < 1 {
        return Err(GeomError::InvalidArgument("quadrature order must be >= 1".into()));
    }
    if j == 0 {
        return Ok(1.0);
    }
    let nodes = rule(quad_order);
    let mut total = 0.0;
    for order in permutations(j + 1) {
        let sign = chamber_orientation(&order);
        let mut chamber = 0.0;
        let mut idx = vec![0usize; j];
        loop {
            let s: Vec<f64> = idx.iter().map(|&i| nodes[i].0).collect();
            let weight: f64 = idx.iter().map(|&i| nodes[i].1).product();
            chamber += weight * integrand(map, &order, &s)?;
            let mut axis = 0;
            while axis < j {
                idx[axis] += 1;
                if idx[axis] < nodes.len() {
                    break;
                }
                idx[axis] = 0;
                axis += 1;
            }
            if axis == j {
                break;
            }
        }
        total += sign * chamber;
    }
    Ok(total)
}

fn integrand(map: &SimplexMap, order: &[usize], s: &[f64]) -> Result<f64> {
    let p = map.chamber_point(order, s)?;
    let mut partials = Vec::with_capacity(s.len());
    for a in 0..s.len() {
        let (mut hi, mut lo) = (s.to_vec(), s.to_vec());
        hi[a] += FD_STEP;
        lo[a] -= FD_STEP;
        let diff = map.chamber_point(order, &hi)?.coords() - map.chamber_point(order, &lo)?.coords();
        partials.push(to_real(&diff) / (2.0 * FD_STEP));
    }
    Ok(form_power(&p, &partials))
}

/// `C(f_0, …, f_j) = ∫_{Δ^j} σ(f_0 x, …, f_j x)^* ω^k` with `j = 2k`.
pub fn cocycle_eval(
    elements: &[Isometry],
    base: &CHPoint,
    k: usize,
    quad_order: usize,
) -> Result<f64> {
    if elements.is_empty() {
        return Err(GeomError::InvalidArgument("no group elements".into()));
    }
    if 2 * k + 1 != elements.len() {
        return Err(GeomError::DegreeMismatch {
            form: 2 * k,
            simplex: elements.len() - 1,
        });
    }
    let points = elements.iter().map(|g| act(g, base)).collect::<Result<Vec<_>>>()?;
    simplex_integral(&SimplexMap::new(points)?, k, quad_order)
}

/// Face values of the coboundary of `C` on `f_0 … f_{j+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coboundary {
    /// `C(f_0, …, f̂_i, …, f_{j+1})` for `i = 0 … j+1`.
    pub faces: Vec<f64>,
}

impl Coboundary {
    /// `|Σ_i (−1)^i C(face_i)|`.
    pub fn residual(&self) -> f64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { *c } else { -c })
            .sum::<f64>()
            .abs()
    }

    pub fn max_face(&self) -> f64 {
        self.faces.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

pub fn coboundary(
    elements: &[Isometry],
    base: &CHPoint,
    k: usize,
    quad_order: usize,
) -> Result<Coboundary> {
    if elements.len() != 2 * k + 2 {
        return Err(GeomError::DegreeMismatch {
            form: 2 * k,
            simplex: elements.len().saturating_sub(2),
        });
    }
    let faces = (0..elements.len())
        .map(|i| {
            let face: Vec<Isometry> = elements
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .map(|(_, g)| g.clone())
                .collect();
            cocycle_eval(&face, base, k, quad_order)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coboundary { faces })
}

pub fn coboundary_residual(
    elements: &[Isometry],
    base: &CHPoint,
    k: usize,
    quad_order: usize,
) -> Result<f64> {
    coboundary(elements, base, k, quad_order).map(|c| c.residual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::C64;

    #[test]
    fn standard_form_at_origin() {
        let w = kahler_form(&CHPoint::origin(2));
        let expected = DMatrix::from_row_slice(
            4,
            4,
            &[0., 0., 1., 0., 0., 0., 0., 1., -1., 0., 0., 0., 0., -1., 0., 0.],
        );
        assert_eq!(w, expected);
    }

    #[test]
    fn antisymmetric_everywhere() {
        let x = CHPoint::from_slice(&[C64::new(0.3, -0.1), C64::new(0.2, 0.5)]).unwrap();
        let w = kahler_form(&x);
        assert_eq!(w.transpose(), -w);
    }

    #[test]
    fn pfaffians() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 3.0, -3.0, 0.0]);
        assert_eq!(pfaffian(&m), 3.0);
        let j4 = kahler_form(&CHPoint::origin(2));
        // Pf([[0, I], [-I, 0]]) = (-1)^{n(n-1)/2}.
        assert_eq!(pfaffian(&j4), -1.0);
        let a = DMatrix::from_fn(4, 4, |i, j| (i as f64 - j as f64) * (1.0 + (i * j) as f64));
        let pf = pfaffian(&a);
        assert!((pf * pf - a.determinant()).abs() < 1e-9 * a.determinant().abs().max(1.0));
    }

    #[test]
    fn orientation_signs() {
        let signs: Vec<f64> = permutations(3).iter().map(|o| chamber_orientation(o)).collect();
        assert!(signs.iter().all(|s| s.abs() == 1.0));
        assert!(signs.contains(&1.0) && signs.contains(&-1.0));
    }

    #[test]
    fn degree_checks() {
        let o = CHPoint::origin(2);
        let id = Isometry::identity(2);
        assert!(matches!(
            cocycle_eval(&[id.clone(), id.clone()], &o, 1, 4),
            Err(GeomError::DegreeMismatch { .. })
        ));
        assert_eq!(cocycle_eval(&[id.clone(), id.clone(), id.clone()], &o, 1, 4).unwrap(), 0.0);
        assert_eq!(coboundary_residual(&vec![id; 4], &o, 1, 3).unwrap(), 0.0);
    }
}
