//! Geodesic simplices: the cone over the faces with apex the Chebyshev
//! center, built recursively from the vertex with the smallest barycentric
//! coordinate.
//!
//! For `t ∈ Δ^j` let `u` be the first index minimizing `t_u`. Then
//! `σ(x_0…x_j)(t) = γ(m, σ(face without x_u)(t'), 1 − (j+1) t_u)`, where `m`
//! is the center of all vertices. The face coordinates `t'` come from one of
//! two [`Rescaling`] rules.

use std::collections::HashMap;

use crate::ball::CHPoint;
use crate::center::{center, DEFAULT_TOL};
use crate::geodesic::geodesic;
use crate::{GeomError, Result};

/// Tolerance on negative coordinates and on `|Σ t_i − 1|`.
pub const BARYCENTRIC_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rescaling {
    /// `t'_i = (t_i − t_u) / (1 − (j+1) t_u)`: radial projection from the
    /// barycenter onto the face. Continuous across ties between minimal
    /// coordinates.
    #[default]
    Radial,
    /// `t'_i = t_i / (1 − t_u)`. Agrees with [`Rescaling::Radial`] on edges
    /// but jumps across ties once `j ≥ 2`.
    Proportional,
}

#[derive(Debug, Clone)]
pub struct SimplexMap {
    points: Vec<CHPoint>,
    centers: HashMap<u64, CHPoint>,
    rescaling: Rescaling,
}

fn mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

impl SimplexMap {
    pub fn new(points: Vec<CHPoint>) -> Result<Self> {
        Self::with_options(points, Rescaling::Radial, DEFAULT_TOL)
    }

    /// Computes the centers of every sub-tuple with at least two vertices.
    pub fn with_options(points: Vec<CHPoint>, rescaling: Rescaling, tol: f64) -> Result<Self> {
        if points.is_empty() || points.len() > 63 {
            return Err(GeomError::InvalidArgument(format!(
                "a simplex needs 1 to 63 vertices, got {}",
                points.len()
            )));
        }
        for p in &points {
            points[0].check_same_dim(p)?;
        }
        let mut centers = HashMap::new();
        for m in 1u64..(1 << points.len()) {
            if m.count_ones() < 2 {
                continue;
            }
            let subset: Vec<CHPoint> = (0..points.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| points[i].clone())
                .collect();
            centers.insert(m, center(&subset, tol)?.point);
        }
        Ok(Self {
            points,
            centers,
            rescaling,
        })
    }

    /// Simplex dimension `j`.
    pub fn dim(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[CHPoint] {
        &self.points
    }

    pub fn rescaling(&self) -> Rescaling {
        self.rescaling
    }

    /// Center of the vertices with the given indices.
    pub fn center_of(&self, indices: &[usize]) -> &CHPoint {
        if indices.len() == 1 {
            return &self.points[indices[0]];
        }
        &self.centers[&mask(indices)]
    }

    /// `σ(t)` for barycentric `t`.
    pub fn evaluate(&self, t: &[f64]) -> Result<CHPoint> {
        if t.len() != self.points.len() {
            return Err(GeomError::InvalidBarycentric(format!(
                "expected {} coordinates, got {}",
                self.points.len(),
                t.len()
            )));
        }
        if t.iter().any(|&v| !(v >= -BARYCENTRIC_TOL)) {
            return Err(GeomError::InvalidBarycentric("negative coordinate".into()));
        }
        let sum: f64 = t.iter().sum();
        if !((sum - 1.0).abs() <= BARYCENTRIC_TOL) {
            return Err(GeomError::InvalidBarycentric(format!("coordinates sum to {sum}")));
        }
        let indices: Vec<usize> = (0..self.points.len()).collect();
        let t: Vec<f64> = t.iter().map(|v| v.max(0.0)).collect();
        self.eval(&indices, &t)
    }

    fn eval(&self, indices: &[usize], t: &[f64]) -> Result<CHPoint> {
        if indices.len() == 1 {
            return Ok(self.points[indices[0]].clone());
        }
        let j = indices.len() - 1;
        let mut u = 0;
        for i in 1..=j {
            if t[i] < t[u] {
                u = i;
            }
        }
        let tu = t[u];
        let s = 1.0 - (j + 1) as f64 * tu;
        let apex = self.center_of(indices);
        if s <= 1e-15 {
            return Ok(apex.clone());
        }
        let denom = match self.rescaling {
            Rescaling::Radial => s,
            Rescaling::Proportional => 1.0 - tu,
        };
        let (mut face_idx, mut face_t) = (Vec::with_capacity(j), Vec::with_capacity(j));
        for i in (0..=j).filter(|&i| i != u) {
            face_idx.push(indices[i]);
            let v = match self.rescaling {
                Rescaling::Radial => t[i] - tu,
                Rescaling::Proportional => t[i],
            };
            face_t.push((v / denom).max(0.0));
        }
        let face = self.eval(&face_idx, &face_t)?;
        geodesic(apex, &face, s)
    }

    /// Number of chambers `(j+1)!`, one per ordering of the vertices.
    pub fn chamber_count(&self) -> usize {
        (1..=self.points.len()).product()
    }

    /// `σ` on the chamber `t_{π_0} ≤ t_{π_1} ≤ … ≤ t_{π_j}` in cube
    /// coordinates `s ∈ [0,1]^j` (see [`chamber_barycentric`]):
    /// `γ(m_{S_0}, γ(m_{S_1}, … γ(m_{S_{j−1}}, x_{π_j}, s_j) …, s_2), s_1)` with
    /// `S_l = {π_l, …, π_j}`. Only meaningful for [`Rescaling::Radial`].
    pub fn chamber_point(&self, order: &[usize], s: &[f64]) -> Result<CHPoint> {
        let j = self.dim();
        if order.len() != j + 1 || s.len() != j {
            return Err(GeomError::InvalidArgument(format!(
                "chamber of a {j}-simplex needs {} indices and {j} parameters",
                j + 1
            )));
        }
        let mut p = self.points[order[j]].clone();
        for level in (0..j).rev() {
            let mut subset = order[level..].to_vec();
            subset.sort_unstable();
            p = geodesic(self.center_of(&subset), &p, s[level])?;
        }
        Ok(p)
    }
}

/// Barycentric point of the chamber for `order` with cube coordinates `s`:
/// starting from the vertex `e_{π_j}`, each level sets
/// `t ← (1 − s_l) · B_{S_l} + s_l · t` with `B_S` the barycenter of `S_l`.
pub fn chamber_barycentric(order: &[usize], s: &[f64]) -> Vec<f64> {
    let j = order.len() - 1;
    assert_eq!(s.len(), j);
    let mut t = vec![0.0; j + 1];
    t[order[j]] = 1.0;
    for level in (0..j).rev() {
        let size = (j + 1 - level) as f64;
        let mut next: Vec<f64> = t.iter().map(|v| s[level] * v).collect();
        for &i in &order[level..] {
            next[i] += (1.0 - s[level]) / size;
        }
        t = next;
    }
    t
}

/// All orderings of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::C64;

    fn pt(v: &[(f64, f64)]) -> CHPoint {
        CHPoint::from_slice(&v.iter().map(|&(a, b)| C64::new(a, b)).collect::<Vec<_>>()).unwrap()
    }

    fn triangle() -> Vec<CHPoint> {
        vec![
            pt(&[(0.3, 0.1), (-0.2, 0.0)]),
            pt(&[(-0.4, 0.2), (0.1, 0.3)]),
            pt(&[(0.0, -0.5), (0.2, -0.1)]),
        ]
    }

    #[test]
    fn vertices_and_barycenter() {
        let map = SimplexMap::new(triangle()).unwrap();
        for i in 0..3 {
            let mut t = vec![0.0; 3];
            t[i] = 1.0;
            assert!(map.evaluate(&t).unwrap().euclidean_distance(&map.points()[i]) < 1e-12);
        }
        let bary = map.evaluate(&[1.0 / 3.0; 3]).unwrap();
        assert!(bary.euclidean_distance(map.center_of(&[0, 1, 2])) < 1e-12);
    }

    #[test]
    fn edge_barycenter_is_midpoint() {
        let pts = triangle();
        let map = SimplexMap::new(pts[..2].to_vec()).unwrap();
        let mid = geodesic(&pts[0], &pts[1], 0.5).unwrap();
        assert!(map.evaluate(&[0.5, 0.5]).unwrap().euclidean_distance(&mid) < 1e-12);
    }

    #[test]
    fn rejects_bad_coordinates() {
        let map = SimplexMap::new(triangle()).unwrap();
        assert!(map.evaluate(&[0.5, 0.5]).is_err());
        assert!(map.evaluate(&[0.5, 0.6, -0.1]).is_err());
        assert!(map.evaluate(&[0.5, 0.6, 0.1]).is_err());
    }

    #[test]
    fn chambers_agree_with_recursion() {
        let map = SimplexMap::new(triangle()).unwrap();
        assert_eq!(map.chamber_count(), 6);
        for order in permutations(3) {
            for s in [[0.2, 0.7], [0.9, 0.1], [0.5, 0.5]] {
                let t = chamber_barycentric(&order, &s);
                assert!((t.iter().sum::<f64>() - 1.0).abs() < 1e-15);
                let direct = map.evaluate(&t).unwrap();
                let cone = map.chamber_point(&order, &s).unwrap();
                assert!(direct.euclidean_distance(&cone) < 1e-12, "{order:?} {s:?}");
            }
        }
    }

    #[test]
    fn proportional_rule_jumps_across_ties() {
        let pts = vec![
            pt(&[(0.3, 0.1), (-0.2, 0.0)]),
            pt(&[(-0.4, 0.2), (0.1, 0.3)]),
            pt(&[(0.0, -0.5), (0.2, -0.1)]),
        ];
        let radial = SimplexMap::new(pts.clone()).unwrap();
        let prop = SimplexMap::with_options(pts, Rescaling::Proportional, DEFAULT_TOL).unwrap();
        let eps = 1e-9;
        let a = [0.2 - eps, 0.2 + eps, 0.6];
        let b = [0.2 + eps, 0.2 - eps, 0.6];
        let jump = |m: &SimplexMap| m.evaluate(&a).unwrap().euclidean_distance(&m.evaluate(&b).unwrap());
        assert!(jump(&radial) < 1e-7);
        assert!(jump(&prop) > 1e-3);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
    }
}
