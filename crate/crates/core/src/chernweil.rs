//! Chern–Weil images of Weyl-invariant series.
//!
//! With the normalized variables read as Chern roots, a symmetric polynomial
//! of degree `j` becomes a class of cohomological degree `2j`, the power sum
//! `p_j` becomes `j! · ch^{[2j]}`, and the elementary symmetric polynomial
//! `e_k` becomes the Chern class `c_k`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::coeff::{Rational, ZetaPoly};
use crate::sympoly::{self, newton_rewrite, Exponents, GradedPoly, SymExpr};
use crate::torsion::factorial;
use crate::{Error, Result};

/// Polynomial in Chern classes `c1 … c_n` (`deg c_k = 2k`), truncated at
/// cohomological degree `max_degree`.
///
/// Equality compares the Chern-class presentation only; the optional
/// Chern-character presentation `Σ a_d · ch^{[d]}` is informational.
#[derive(Debug, Clone)]
pub struct CharClassExpr {
    chern: SymExpr,
    ch: Option<BTreeMap<u32, ZetaPoly>>,
}

impl PartialEq for CharClassExpr {
    fn eq(&self, other: &Self) -> bool {
        self.chern == other.chern
    }
}

impl Eq for CharClassExpr {}

impl CharClassExpr {
    /// Reads `e_k` as `c_k`; weighted degree `j` becomes cohomological `2j`.
    pub fn from_symmetric(expr: SymExpr) -> Self {
        Self {
            chern: expr,
            ch: None,
        }
    }

    pub fn zero(rank: usize, max_degree: u32) -> Self {
        Self::from_symmetric(SymExpr::zero(rank, max_degree / 2))
    }

    pub fn rank(&self) -> usize {
        self.chern.rank()
    }

    /// Cohomological truncation degree.
    pub fn max_degree(&self) -> u32 {
        2 * self.chern.max_degree()
    }

    pub fn is_zero(&self) -> bool {
        self.chern.is_zero()
    }

    /// Terms as `(exponents of c1 … c_n, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ZetaPoly)> {
        self.chern.terms()
    }

    pub fn coefficient(&self, exps: &[u32]) -> ZetaPoly {
        self.chern.coefficient(exps)
    }

    /// Underlying expression in elementary symmetric generators.
    pub fn as_symmetric(&self) -> &SymExpr {
        &self.chern
    }

    /// Part of cohomological degree `d` (zero for odd `d`).
    pub fn component(&self, d: u32) -> CharClassExpr {
        if d % 2 == 1 {
            return Self::from_symmetric(SymExpr::zero(self.rank(), self.chern.max_degree()));
        }
        Self::from_symmetric(self.chern.homogeneous_component(d / 2))
    }

    /// Cohomological degrees carrying nonzero terms, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self
            .terms()
            .map(|(e, _)| 2 * sympoly::weighted_degree(e))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `Σ a_d · ch^{[d]}` when known, keyed by cohomological degree.
    pub fn ch_presentation(&self) -> Option<&BTreeMap<u32, ZetaPoly>> {
        self.ch.as_ref()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_symmetric(self.chern.add(&other.chern))
    }

    pub fn scale(&self, c: &ZetaPoly) -> Self {
        Self::from_symmetric(self.chern.scale(c))
    }
}

impl fmt::Display for CharClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.chern.display_with("c"))
    }
}

/// Chern–Weil image of a symmetric series in `n` Chern roots.
pub fn cw_map(p: &GradedPoly, n: usize) -> Result<CharClassExpr> {
    Ok(CharClassExpr::from_symmetric(newton_rewrite(p, n)?))
}

/// Power sums `p_1 … p_k` in `e1 … e_n` by the Newton recursion
/// `p_m = Σ_{i=1}^{m−1} (−1)^{i−1} e_i p_{m−i} + (−1)^{m−1} m e_m`.
fn power_sums_in_elementary(n: usize, k: u32) -> Vec<SymExpr> {
    let gen = |i: usize| SymExpr::generator(n, k, i);
    let mut p: Vec<SymExpr> = vec![SymExpr::zero(n, k)];
    for m in 1..=k as usize {
        let mut acc = SymExpr::zero(n, k);
        for i in 1..m {
            let term = gen(i).mul(&p[m - i]);
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&term.scale_rational(&Rational::from_integer(sign.into())));
        }
        let sign: i64 = if m % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&gen(m).scale_rational(&Rational::from_integer((sign * m as i64).into())));
        p.push(acc);
    }
    p
}

/// `ch^{[2k]} = p_k(roots) / k!` in `c1 … c_n`.
pub fn ch_from_chern(n: usize, k: u32) -> Result<CharClassExpr> {
    if k < 1 {
        return Err(Error::InvalidArgument("ch_from_chern needs k >= 1".into()));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let pk = power_sums_in_elementary(n, k).pop().expect("k >= 1");
    let inv = Rational::new(BigInt::from(1), factorial(k));
    Ok(CharClassExpr::from_symmetric(pk.scale_rational(&inv)))
}

/// Coefficient of `ζ(2j+1) ch^{[4j]}` in the sphere-bundle torsion class:
/// `(4j+1)! / (2^{4j} (2j)!)`.
pub fn d_coefficient(j: u32) -> Rational {
    assert!(j >= 1);
    let den = num_traits::pow(BigInt::from(2), 4 * j as usize) * factorial(2 * j);
    Rational::new(factorial(4 * j + 1), den)
}

/// Torsion class of the unit sphere bundle of a rank-`n` Hermitian bundle:
/// `Σ_j d_j ζ(2j+1) ch^{[4j]}`, through cohomological degree `2 · max_deg`.
pub fn sphere_bundle_torsion_class(n: usize, max_deg: u32) -> Result<CharClassExpr> {
    if n < 1 {
        return Err(Error::InvalidArgument("sphere_bundle_torsion_class needs n >= 1".into()));
    }
    let mut chern = SymExpr::zero(n, max_deg);
    let mut ch = BTreeMap::new();
    for j in (1..).take_while(|j| 2 * j <= max_deg) {
        let coeff = ZetaPoly::zeta(2 * j + 1, d_coefficient(j)).expect("odd index");
        for (e, c) in ch_from_chern(n, 2 * j)?.terms() {
            chern.add_term(e.clone(), c * &coeff);
        }
        ch.insert(4 * j, coeff);
    }
    Ok(CharClassExpr {
        chern,
        ch: Some(ch),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::reps::std_rep;
    use crate::sympoly::power_sum;
    use crate::torsion::{q_coefficient, torsion_series};

    fn expr(n: usize, max: u32, terms: &[(&[u32], ZetaPoly)]) -> CharClassExpr {
        let mut s = SymExpr::zero(n, max);
        for (e, c) in terms {
            s.add_term(e.to_vec(), c.clone());
        }
        CharClassExpr::from_symmetric(s)
    }

    fn q(n: i64, d: i64) -> ZetaPoly {
        ZetaPoly::constant(rat(n, d))
    }

    #[test]
    fn power_sum_images() {
        let rank1 = cw_map(&power_sum(2, 1, 2).unwrap(), 1).unwrap();
        assert_eq!(rank1, expr(1, 2, &[(&[2], q(1, 1))]));
        assert_eq!(rank1.to_string(), "c1^2");
        let ch2 = ch_from_chern(1, 2).unwrap();
        assert_eq!(rank1, ch2.scale(&q(2, 1)));

        let rank3 = cw_map(&power_sum(2, 3, 2).unwrap(), 3).unwrap();
        assert_eq!(rank3, expr(3, 2, &[(&[2, 0, 0], q(1, 1)), (&[0, 1, 0], q(-2, 1))]));
    }

    #[test]
    fn standard_rep_degree_four() {
        for n in 2..=4 {
            let t = torsion_series(&std_rep(n).unwrap(), 2).unwrap();
            let image = cw_map(&t, n).unwrap();
            let mut e1sq = vec![0; n];
            e1sq[0] = 2;
            let mut e2 = vec![0; n];
            e2[1] = 1;
            let z3 = |a, b| ZetaPoly::zeta(3, rat(a, b)).unwrap();
            assert_eq!(image, expr(n, 2, &[(&e1sq, z3(15, 8)), (&e2, z3(-15, 4))]));
            assert_eq!(image.degrees(), vec![4]);
        }
    }

    #[test]
    fn chern_character_components() {
        assert_eq!(ch_from_chern(3, 1).unwrap(), expr(3, 1, &[(&[1, 0, 0], q(1, 1))]));
        assert_eq!(
            ch_from_chern(3, 2).unwrap(),
            expr(3, 2, &[(&[2, 0, 0], q(1, 2)), (&[0, 1, 0], q(-1, 1))])
        );
        assert_eq!(
            ch_from_chern(3, 3).unwrap(),
            expr(
                3,
                3,
                &[(&[3, 0, 0], q(1, 6)), (&[1, 1, 0], q(-1, 2)), (&[0, 0, 1], q(1, 2))]
            )
        );
        assert!(ch_from_chern(3, 0).is_err());
    }

    #[test]
    fn d_coefficients() {
        assert_eq!(d_coefficient(1), rat(15, 4));
        assert_eq!(d_coefficient(2), rat(945, 16));
        assert_eq!(d_coefficient(3), rat(135135, 64));
        for j in 1..=4 {
            assert_eq!(
                d_coefficient(j),
                q_coefficient(j) * Rational::from_integer(factorial(2 * j))
            );
        }
    }

    #[test]
    fn class_presentation_and_degrees() {
        let c = sphere_bundle_torsion_class(3, 8).unwrap();
        let ch = c.ch_presentation().unwrap();
        assert_eq!(ch.keys().copied().collect::<Vec<_>>(), vec![4, 8, 12, 16]);
        assert_eq!(c.max_degree(), 16);
        for d in (2..=16).step_by(4) {
            assert!(c.component(d).is_zero(), "degree {d}");
        }
        assert!(!c.component(4).is_zero());
    }

    #[test]
    fn two_paths_small() {
        for n in 1..=3 {
            let t = torsion_series(&std_rep(n).unwrap(), 8).unwrap();
            assert_eq!(cw_map(&t, n).unwrap(), sphere_bundle_torsion_class(n, 8).unwrap());
        }
    }
}
