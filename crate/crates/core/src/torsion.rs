//! Equivariant torsion of representation spheres.
//!
//! The basic series is
//!
//! ```text
//! Q(x) = Σ_{j≥1} (4j+1)! / (2^{4j} ((2j)!)²) · ζ(2j+1) · x^{2j}
//! ```
//!
//! in the normalized variable `x = α/(4π²)`. A torus orbit of weight `α`
//! contributes `Q(⟨α, v⟩)`, and the unit sphere of a representation without
//! zero weight carries one such orbit type per weight, counted with the
//! Euler number `m_α` of its quotient `CP^{m_α−1}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{Rational, ZetaPoly};
use crate::reps::{Representation, Weight};
use crate::sympoly::GradedPoly;
use crate::{Error, Result};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Coefficient of `ζ(2j+1) x^{2j}` in `Q`.
pub fn q_coefficient(j: u32) -> Rational {
    assert!(j >= 1);
    let num = factorial(4 * j + 1);
    let two_j = factorial(2 * j);
    let den = num_traits::pow(BigInt::from(2), 4 * j as usize) * &two_j * &two_j;
    Rational::new(num, den)
}

/// `Q` as a rank-1 jet through degree `max_deg`.
pub fn q_series(max_deg: u32) -> Result<GradedPoly> {
    if max_deg < 2 {
        return Err(Error::InvalidArgument(format!(
            "q_series needs max_deg >= 2, got {max_deg}"
        )));
    }
    Ok(q_jet(max_deg))
}

fn q_jet(max_deg: u32) -> GradedPoly {
    let mut q = GradedPoly::zero(1, max_deg);
    for j in (1..).take_while(|j| 2 * j <= max_deg) {
        let c = ZetaPoly::zeta(2 * j + 1, q_coefficient(j)).expect("odd index");
        q.add_term(vec![2 * j], c);
    }
    q
}

fn check_no_fixed_point(rep: &Representation) -> Result<()> {
    match rep.weights().find(|(w, _)| w.is_zero()) {
        Some((w, _)) => Err(Error::FixedPoint(w.clone())),
        None => Ok(()),
    }
}

/// `Σ_α m_α Q(⟨α, v⟩)` through degree `max_deg`, computed by substituting
/// the linear form `⟨α, v⟩` into the jet of `Q`.
pub fn torsion_series(rep: &Representation, max_deg: u32) -> Result<GradedPoly> {
    check_no_fixed_point(rep)?;
    let q = q_jet(max_deg);
    let mut total = GradedPoly::zero(rep.rank(), max_deg);
    for (w, m) in rep.weights() {
        let term = q.substitute(&[w.coords().to_vec()])?;
        total = total.add(&term.scale_rational(&Rational::from_integer(m.into())))?;
    }
    Ok(total)
}

/// Degree-`d` part of a torsion series.
pub fn homogeneous_component(t: &GradedPoly, d: u32) -> Result<GradedPoly> {
    t.homogeneous_component(d)
}

/// Torsion of the circle acting on `ℝ/(1/r)ℤ`: the rank-1 series with
/// coefficients `c_j · r^{2j} · ζ(2j+1)`.
pub fn circle_torsion(r: u32, max_deg: u32) -> Result<GradedPoly> {
    if r < 1 {
        return Err(Error::InvalidArgument("circle_torsion needs r >= 1".into()));
    }
    let mut out = GradedPoly::zero(1, max_deg);
    for j in (1..).take_while(|j| 2 * j <= max_deg) {
        let scale = num_traits::pow(BigInt::from(r), 2 * j as usize);
        let c = q_coefficient(j) * Rational::from_integer(scale);
        out.add_term(vec![2 * j], ZetaPoly::zeta(2 * j + 1, c).expect("odd index"));
    }
    Ok(out)
}

/// One-dimensional orbit type `T/T_α` in the unit sphere of a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    weight: Weight,
    multiplicity: u64,
    stabilizer_kernel: Vec<Vec<i64>>,
}

impl OrbitClass {
    pub fn new(weight: Weight, multiplicity: u64) -> Result<Self> {
        if weight.is_zero() {
            return Err(Error::FixedPoint(weight));
        }
        if multiplicity == 0 {
            return Err(Error::InvalidArgument("orbit multiplicity must be positive".into()));
        }
        let stabilizer_kernel = lattice_kernel(weight.coords());
        Ok(Self {
            weight,
            multiplicity,
            stabilizer_kernel,
        })
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Complex dimension of the quotient `CP^{m−1}`.
    pub fn quotient_dim(&self) -> u64 {
        self.multiplicity - 1
    }

    pub fn quotient(&self) -> String {
        format!("CP^{}", self.quotient_dim())
    }

    /// Euler characteristic of `CP^{m−1}`.
    pub fn euler_number(&self) -> u64 {
        self.multiplicity
    }

    pub fn stabilizer_corank(&self) -> usize {
        1
    }

    /// Basis of the integer lattice `{x : ⟨α, x⟩ = 0}`, spanning the Lie
    /// algebra of the identity component of the stabilizer.
    pub fn stabilizer_kernel(&self) -> &[Vec<i64>] {
        &self.stabilizer_kernel
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {}: m = {}, quotient {}, euler {}",
            self.weight,
            self.multiplicity,
            self.quotient(),
            self.euler_number()
        )
    }
}

/// Integer kernel basis of a nonzero row vector, by unimodular column
/// reduction (Euclid on the entries).
fn lattice_kernel(row: &[i64]) -> Vec<Vec<i64>> {
    let r = row.len();
    let mut a = row.to_vec();
    // Columns of u, stored as u[col][row].
    let mut u: Vec<Vec<i64>> = (0..r).map(|i| Weight::basis(r, i).0).collect();
    loop {
        let nonzero: Vec<usize> = (0..r).filter(|&i| a[i] != 0).collect();
        if nonzero.len() <= 1 {
            let pivot = nonzero.first().copied();
            return (0..r)
                .filter(|&i| Some(i) != pivot)
                .map(|i| u[i].clone())
                .collect();
        }
        let p = *nonzero.iter().min_by_key(|&&i| a[i].abs()).unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = a[j].div_euclid(a[p]);
            a[j] -= q * a[p];
            let (cp, cj) = (u[p].clone(), &mut u[j]);
            for (x, y) in cj.iter_mut().zip(&cp) {
                *x -= q * y;
            }
        }
    }
}

/// One orbit class per distinct weight.
pub fn equivariant_euler(rep: &Representation) -> Result<Vec<OrbitClass>> {
    check_no_fixed_point(rep)?;
    rep.weights()
        .map(|(w, m)| OrbitClass::new(w.clone(), m))
        .collect()
}

/// `Q(⟨α, v⟩)` for the orbit's weight, expanded term by term with the
/// multinomial theorem.
pub fn orbit_torsion(orbit: &OrbitClass, max_deg: u32) -> GradedPoly {
    let alpha = orbit.weight().coords();
    let rank = alpha.len();
    let mut out = GradedPoly::zero(rank, max_deg);
    for j in (1..).take_while(|j| 2 * j <= max_deg) {
        let d = 2 * j;
        let cj = q_coefficient(j);
        let dfact = factorial(d);
        for_each_composition(d, rank, &mut |a: &[u32]| {
            let mut c = dfact.clone();
            let mut denom = BigInt::one();
            for (&ai, &x) in a.iter().zip(alpha) {
                c *= num_traits::pow(BigInt::from(x), ai as usize);
                denom *= factorial(ai);
            }
            if c.is_zero() {
                return;
            }
            let coeff = &cj * Rational::new(c, denom);
            out.add_term(a.to_vec(), ZetaPoly::zeta(2 * j + 1, coeff).expect("odd index"));
        });
    }
    out
}

fn for_each_composition(d: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(rem: u32, idx: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if idx + 1 == cur.len() {
            cur[idx] = rem;
            f(cur);
            return;
        }
        for a in 0..=rem {
            cur[idx] = a;
            rec(rem - a, idx + 1, cur, f);
        }
    }
    let mut cur = vec![0; parts];
    rec(d, 0, &mut cur, f);
}

/// `Σ_o m_o · Q(⟨α_o, v⟩)` over orbit classes.
pub fn reassemble(orbits: &[OrbitClass], rank: usize, max_deg: u32) -> Result<GradedPoly> {
    let mut total = GradedPoly::zero(rank, max_deg);
    for o in orbits {
        let m = Rational::from_integer(o.multiplicity().into());
        total = total.add(&orbit_torsion(o, max_deg).scale_rational(&m))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::reps::std_rep;
    use crate::sympoly::power_sum;

    fn zeta(k: u32, n: i64, d: i64) -> ZetaPoly {
        ZetaPoly::zeta(k, rat(n, d)).unwrap()
    }

    #[test]
    fn q_coefficients() {
        assert_eq!(q_coefficient(1), rat(15, 8));
        assert_eq!(q_coefficient(2), rat(315, 128));
        assert_eq!(q_coefficient(3), rat(3003, 1024));
        let q = q_series(8).unwrap();
        assert_eq!(q.coefficient(&[2]), zeta(3, 15, 8));
        assert_eq!(q.coefficient(&[4]), zeta(5, 315, 128));
        for d in [1, 3, 5, 7] {
            assert!(q.coefficient(&[d]).is_zero());
        }
        assert!(q_series(1).is_err());
    }

    #[test]
    fn q_coefficients_are_positive_single_zeta() {
        let q = q_series(16).unwrap();
        assert_eq!(q.len(), 8);
        for (e, c) in q.terms() {
            let (coeff, k) = c.as_single_zeta().unwrap();
            assert!(*coeff > Rational::zero());
            assert_eq!(k, e[0] + 1);
        }
    }

    #[test]
    fn single_weight_rank_one() {
        for r in 1..=4i64 {
            let rep = Representation::from_weights(1, [(Weight(vec![r]), 1)]).unwrap();
            let t = torsion_series(&rep, 8).unwrap();
            for j in 1..=4u32 {
                let expected = q_coefficient(j) * Rational::from_integer(BigInt::from(r).pow(2 * j));
                assert_eq!(t.coefficient(&[2 * j]), ZetaPoly::zeta(2 * j + 1, expected).unwrap());
            }
        }
    }

    #[test]
    fn standard_rep_degree_two() {
        let t = torsion_series(&std_rep(3).unwrap(), 6).unwrap();
        let expected = power_sum(2, 3, 6).unwrap().scale(&zeta(3, 15, 8));
        assert_eq!(homogeneous_component(&t, 2).unwrap(), expected);
        assert!(homogeneous_component(&t, 3).unwrap().is_zero());
        assert!(homogeneous_component(&t, 0).unwrap().is_zero());
    }

    #[test]
    fn q_is_even() {
        let rep = Representation::from_weights(1, [(Weight(vec![1]), 1), (Weight(vec![-1]), 1)])
            .unwrap();
        let q = q_series(10).unwrap();
        assert_eq!(
            torsion_series(&rep, 10).unwrap(),
            q.scale_rational(&rat(2, 1))
        );
    }

    #[test]
    fn fixed_point_rejected() {
        let rep = Representation::from_weights(2, [(Weight(vec![0, 0]), 1)]).unwrap();
        assert_eq!(
            torsion_series(&rep, 4),
            Err(Error::FixedPoint(Weight(vec![0, 0])))
        );
        assert!(equivariant_euler(&rep).is_err());
        assert!(OrbitClass::new(Weight(vec![0, 0]), 1).is_err());
    }

    #[test]
    fn circle_examples() {
        assert_eq!(circle_torsion(1, 12).unwrap(), q_series(12).unwrap());
        assert_eq!(circle_torsion(2, 4).unwrap().coefficient(&[2]), zeta(3, 15, 2));
        assert_eq!(
            circle_torsion(3, 4).unwrap().coefficient(&[4]),
            zeta(5, 25515, 128)
        );
        assert!(circle_torsion(0, 4).is_err());
    }

    #[test]
    fn orbit_classes() {
        let orbits = equivariant_euler(&std_rep(3).unwrap()).unwrap();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.multiplicity() == 1 && o.quotient() == "CP^0"));

        let s = std_rep(2).unwrap();
        let orbits = equivariant_euler(&s.direct_sum(&s).unwrap()).unwrap();
        assert_eq!(orbits.len(), 2);
        assert!(orbits
            .iter()
            .all(|o| o.multiplicity() == 2 && o.quotient() == "CP^1" && o.euler_number() == 2));

        let orbits = equivariant_euler(&s.sym_power(2)).unwrap();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.multiplicity() == 1));
    }

    #[test]
    fn orbit_of_first_basis_weight_is_q_of_v1() {
        let o = OrbitClass::new(Weight(vec![1, 0]), 1).unwrap();
        let q = q_series(8).unwrap();
        let mut expected = GradedPoly::zero(2, 8);
        for (e, c) in q.terms() {
            expected.add_term(vec![e[0], 0], c.clone());
        }
        assert_eq!(orbit_torsion(&o, 8), expected);
    }

    #[test]
    fn reassembly_for_standard_rep() {
        let rep = std_rep(2).unwrap();
        let orbits = equivariant_euler(&rep).unwrap();
        assert_eq!(
            reassemble(&orbits, 2, 10).unwrap(),
            torsion_series(&rep, 10).unwrap()
        );
    }

    #[test]
    fn stabilizer_kernels() {
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        for w in [vec![1, 0], vec![2, 3], vec![4, -6, 10], vec![0, 0, 5]] {
            let o = OrbitClass::new(Weight(w.clone()), 1).unwrap();
            let k = o.stabilizer_kernel();
            assert_eq!(k.len(), w.len() - 1);
            assert!(k.iter().all(|v| dot(v, &w) == 0));
        }
        // (2,3): kernel generated by (3,-2) up to sign.
        let o = OrbitClass::new(Weight(vec![2, 3]), 1).unwrap();
        let v = &o.stabilizer_kernel()[0];
        assert_eq!(v[0].abs(), 3);
        assert_eq!(v[1].abs(), 2);
    }
}
