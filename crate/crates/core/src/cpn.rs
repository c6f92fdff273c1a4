//! Cohomology of `CP^n`, the Chern character of its tangent bundle, and the
//! nonvanishing of the sphere-bundle torsion class there and, through a
//! proportionality model, on compact quotients of complex hyperbolic space.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chernweil::{d_coefficient, CharClassExpr};
use crate::coeff::{Rational, ZetaPoly};
use crate::reps::binomial;
use crate::sympoly::format_terms;
use crate::torsion::factorial;
use crate::{Error, Result};

/// Element `Σ_{p≤n} a_p H^p` of `ℚ[ζ][H]/(H^{n+1})`, with `deg H = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPnClass {
    n: usize,
    coeffs: Vec<ZetaPoly>,
}

impl CPnClass {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![ZetaPoly::zero(); n + 1],
        }
    }

    /// `c · H^p`; zero when `p > n`.
    pub fn monomial(n: usize, p: usize, c: ZetaPoly) -> Self {
        let mut out = Self::zero(n);
        if p <= n {
            out.coeffs[p] = c;
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of `H^p`; zero above the top degree.
    pub fn coefficient(&self, p: usize) -> ZetaPoly {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZetaPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j <= self.n {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &ZetaPoly) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::monomial(self.n, 0, ZetaPoly::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for CPnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(p, c)| {
            let mono = match p {
                0 => String::new(),
                1 => "H".to_string(),
                _ => format!("H^{p}"),
            };
            (mono, c)
        });
        write!(f, "{}", format_terms(terms))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("CP^n needs n >= 1".into()));
    }
    Ok(())
}

/// Components `ch^{[2p]}(T CP^n)` for `p = 0 … n`: `n` in degree 0 and
/// `(n+1)/p! · H^p` above.
pub fn ch_tcpn(n: usize) -> Result<Vec<CPnClass>> {
    check_n(n)?;
    Ok((0..=n).map(|p| ch_tcpn_component(n, p)).collect())
}

/// `ch^{[2p]}(T CP^n)`, zero for `p > n`.
pub fn ch_tcpn_component(n: usize, p: usize) -> CPnClass {
    if p == 0 {
        return CPnClass::monomial(n, 0, ZetaPoly::from(n as i64));
    }
    let c = Rational::new(BigInt::from(n + 1), factorial(p as u32));
    CPnClass::monomial(n, p, ZetaPoly::constant(c))
}

/// Total Chern class `(1 + H)^{n+1}` truncated at `H^{n+1}`.
pub fn chern_tcpn(n: usize) -> Result<CPnClass> {
    check_n(n)?;
    let mut out = CPnClass::zero(n);
    for p in 0..=n {
        out.coeffs[p] = ZetaPoly::from(binomial(n as u64 + 1, p as u64) as i64);
    }
    Ok(out)
}

/// Evaluates a characteristic class of a rank-`n` bundle on `T CP^n` by
/// substituting `c_k ↦ C(n+1, k) H^k` (the graded pieces of
/// [`chern_tcpn`]).
pub fn evaluate_on_cpn(expr: &CharClassExpr) -> Result<CPnClass> {
    let n = expr.rank();
    check_n(n)?;
    let total = chern_tcpn(n)?;
    let chern: Vec<CPnClass> = (1..=n)
        .map(|k| CPnClass::monomial(n, k, total.coefficient(k)))
        .collect();
    let mut out = CPnClass::zero(n);
    for (e, c) in expr.terms() {
        let mut acc = CPnClass::monomial(n, 0, c.clone());
        for (k, &a) in e.iter().enumerate() {
            acc = acc.mul(&chern[k].pow(a));
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// `T(S CP^n) = Σ_j d_j ζ(2j+1) (n+1)/(2j)! H^{2j}` for `2j ≤ max_deg`.
pub fn evaluate_torsion_class(n: usize, max_deg: u32) -> Result<CPnClass> {
    check_n(n)?;
    let mut out = CPnClass::zero(n);
    for j in (1..).take_while(|j| 2 * j <= max_deg) {
        let p = 2 * j as usize;
        if p > n {
            break;
        }
        let c = d_coefficient(j) * Rational::new(BigInt::from(n + 1), factorial(2 * j));
        out.coeffs[p] = ZetaPoly::zeta(2 * j + 1, c).expect("odd index");
    }
    Ok(out)
}

/// Degrees `4j` for `j = 1 … max(4, n/2 + 1)`, each mapped to whether
/// `T_{4j}(S CP^n)` is nonzero.
pub fn nonvanishing_report(n: usize) -> Result<BTreeMap<u32, bool>> {
    check_n(n)?;
    let top = 4.max(n as u32 / 2 + 1);
    let class = evaluate_torsion_class(n, 2 * top)?;
    Ok((1..=top)
        .map(|j| {
            let p = 2 * j as usize;
            (4 * j, p <= n && !class.coefficient(p).is_zero())
        })
        .collect())
}

/// Proportionality model for `B = Γ\CH^n`: `ch^{[2p]}(TB) = s^p κ_p ·
/// ch^{[2p]}(T CP^n)` with nonzero rational scales `κ_p` and a sign
/// convention `s = ±1` for the curvature flip under duality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityModel {
    n: usize,
    kappa: Vec<Rational>,
    flip_sign: bool,
}

impl DualityModel {
    /// `kappa[p]` for `p = 0 … n`; every entry must be nonzero.
    pub fn new(n: usize, kappa: Vec<Rational>, flip_sign: bool) -> Result<Self> {
        check_n(n)?;
        if kappa.len() != n + 1 {
            return Err(Error::InvalidModel(format!(
                "expected {} scales, got {}",
                n + 1,
                kappa.len()
            )));
        }
        if let Some(p) = kappa.iter().position(Zero::is_zero) {
            return Err(Error::InvalidModel(format!("scale kappa_{p} is zero")));
        }
        Ok(Self {
            n,
            kappa,
            flip_sign,
        })
    }

    /// All scales one, no sign flip.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new(n, vec![Rational::one(); n + 1], false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn factor(&self, p: usize) -> Rational {
        let k = self.kappa[p].clone();
        if self.flip_sign && p % 2 == 1 {
            -k
        } else {
            k
        }
    }

    /// `ch^{[2p]}(TB)` as a multiple of `H^p` in the compact dual's ring.
    pub fn ch_component(&self, p: usize) -> CPnClass {
        if p > self.n {
            return CPnClass::zero(self.n);
        }
        ch_tcpn_component(self.n, p).scale(&ZetaPoly::constant(self.factor(p)))
    }
}

/// Nonvanishing of `T_d(SB)` for `B = Γ\CH^n` in every even degree
/// `d ≤ 2 · max_deg`. Degrees `≡ 2 (mod 4)` always vanish; in degree `4k`
/// the class is `d_k ζ(2k+1) ch^{[4k]}(TB)`.
pub fn locally_symmetric_report(model: &DualityModel, max_deg: u32) -> BTreeMap<u32, bool> {
    let mut out = BTreeMap::new();
    for d in (2..=2 * max_deg).step_by(2) {
        let nonzero = if d % 4 == 0 {
            let k = d / 4;
            let coeff = ZetaPoly::zeta(2 * k + 1, d_coefficient(k)).expect("odd index");
            !model.ch_component(2 * k as usize).scale(&coeff).is_zero()
        } else {
            false
        };
        out.insert(d, nonzero);
    }
    out
}
