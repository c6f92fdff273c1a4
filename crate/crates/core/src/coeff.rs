//! Exact coefficients: rationals and polynomials in formal odd zeta values.
//!
//! A [`ZetaPoly`] is a finite sum `Σ q · z_{k1}^{a1} z_{k2}^{a2} …` where each
//! `z_k` stands for `ζ(k)` with `k` odd and at least 3, and `q` is rational.
//! Terms with zero coefficient are never stored, so structural equality is
//! mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for a small rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Monomial in the zeta symbols: map `k ↦ exponent` with `k` odd, `k ≥ 3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZetaMonomial(BTreeMap<u32, u32>);

impl ZetaMonomial {
    pub fn one() -> Self {
        Self(BTreeMap::new())
    }

    /// The single symbol `z_k`.
    pub fn symbol(k: u32) -> Result<Self> {
        check_symbol(k)?;
        Ok(Self(BTreeMap::from([(k, 1)])))
    }

    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, e) in iter {
            check_symbol(k)?;
            if e > 0 {
                *map.entry(k).or_insert(0) += e;
            }
        }
        Ok(Self(map))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    /// `Some(k)` when the monomial is exactly `z_k`.
    pub fn as_single_symbol(&self) -> Option<u32> {
        match self.0.iter().next() {
            Some((&k, &1)) if self.0.len() == 1 => Some(k),
            _ => None,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (&k, &e) in &other.0 {
            *map.entry(k).or_insert(0) += e;
        }
        Self(map)
    }
}

fn check_symbol(k: u32) -> Result<()> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "zeta symbol index must be odd and at least 3, got {k}"
        )));
    }
    Ok(())
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "z{k}")?;
            } else {
                write!(f, "z{k}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over ℚ in the formal symbols `z3, z5, z7, …`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ZetaPoly {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::term(ZetaMonomial::one(), q)
    }

    /// `q · z_k`.
    pub fn zeta(k: u32, q: Rational) -> Result<Self> {
        Ok(Self::term(ZetaMonomial::symbol(k)?, q))
    }

    pub fn term(monomial: ZetaMonomial, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(monomial, q);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &ZetaMonomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    /// Rational constant, if the polynomial has no zeta symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&ZetaMonomial::one()).cloned(),
            _ => None,
        }
    }

    /// `Some((q, k))` when the polynomial is exactly `q · z_k`.
    pub fn as_single_zeta(&self) -> Option<(&Rational, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, q) = self.terms.iter().next()?;
        m.as_single_symbol().map(|k| (q, k))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn add_term(&mut self, monomial: ZetaMonomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(monomial);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `q · other` in place.
    pub fn add_scaled(&mut self, other: &ZetaPoly, q: &Rational) {
        if q.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * q);
        }
    }
}

impl From<Rational> for ZetaPoly {
    fn from(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl From<i64> for ZetaPoly {
    fn from(n: i64) -> Self {
        Self::constant(rat_int(n))
    }
}

impl AddAssign<&ZetaPoly> for ZetaPoly {
    fn add_assign(&mut self, rhs: &ZetaPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&ZetaPoly> for ZetaPoly {
    fn sub_assign(&mut self, rhs: &ZetaPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &ZetaPoly {
    type Output = ZetaPoly;
    fn neg(self) -> ZetaPoly {
        ZetaPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for ZetaPoly {
            type Output = ZetaPoly;
            fn $method(self, rhs: ZetaPoly) -> ZetaPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes `q` as `a` or `a/b`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} * {}", fmt_rational(&mag), m)?;
            }
        }
        Ok(())
    }
}
