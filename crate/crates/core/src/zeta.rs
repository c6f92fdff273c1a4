//! High-precision values of ζ at odd integers and numeric substitution into
//! [`ZetaPoly`].
//!
//! ζ(s) is computed with the Borwein acceleration of the alternating series
//! `η(s) = Σ (-1)^k / (k+1)^s = (1 − 2^{1−s}) ζ(s)`:
//!
//! ```text
//! d_k = n Σ_{i=0}^{k} (n+i−1)! 4^i / ((n−i)! (2i)!)
//! ζ(s) = −1 / (d_n (1 − 2^{1−s})) Σ_{k=0}^{n−1} (−1)^k (d_k − d_n) / (k+1)^s + γ_n(s)
//! ```
//!
//! For real `s ≥ 3` the remainder obeys
//! `|γ_n(s)| ≤ 3 / ((3+√8)^n (1 − 2^{1−s})) ≤ 4 · (3+√8)^{−n}`, so each term of
//! `n` buys `log10(3+√8) ≈ 0.7655` decimal digits. Since `ζ(s) > 1` the same
//! bound holds for the relative error. The sum itself is carried in exact
//! rationals and rounded once.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{Rational, ZetaPoly};
use crate::decimal::Decimal;
use crate::{Error, Result};

const LOG10_BORWEIN_RATE: f64 = 0.765_551_025_117_361_6; // log10(3 + √8)

/// Number of Borwein terms guaranteeing `4 (3+√8)^{−n} ≤ 10^{−target}`.
fn terms_for(target_digits: u32) -> usize {
    ((target_digits as f64 + 4f64.log10()) / LOG10_BORWEIN_RATE).ceil() as usize + 1
}

/// `ζ(k)` for odd `k ≥ 3`, rounded to `digits` fractional digits.
///
/// Since `1 < ζ(k) < 2`, this carries `digits + 1` significant digits with an
/// error of at most `0.5 · 10^{−digits}` plus `10^{−digits−6}` of series
/// remainder.
pub fn zeta_eval(k: u32, digits: u32) -> Result<Decimal> {
    if k % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "zeta is only evaluated at odd integers, got {k}"
        )));
    }
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "zeta is only evaluated at odd integers >= 3, got {k}"
        )));
    }
    if digits < 1 {
        return Err(Error::InvalidArgument("digits must be positive".into()));
    }
    let value = zeta_rational_approx(k, digits + 6);
    Ok(Decimal::from_rational(&value, digits))
}

/// Rational approximation of ζ(s) with absolute error below `10^{−target}`.
fn zeta_rational_approx(s: u32, target: u32) -> Rational {
    let n = terms_for(target);
    let d = borwein_coefficients(n);
    let dn = &d[n];
    let mut sum = Rational::zero();
    for (k, dk) in d.iter().take(n).enumerate() {
        let denom = num_traits::pow(BigInt::from(k as u64 + 1), s as usize);
        let term = Rational::new(dk - dn, denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    // 1 − 2^{1−s} = (2^{s−1} − 1) / 2^{s−1}
    let p = num_traits::pow(BigInt::from(2), (s - 1) as usize);
    let factor = Rational::new(p.clone(), dn * (p - BigInt::one()));
    -(sum * factor)
}

/// `d_0, …, d_n`, all integers.
fn borwein_coefficients(n: usize) -> Vec<BigInt> {
    let nn = BigInt::from(n as u64);
    let mut out = Vec::with_capacity(n + 1);
    // term_i = (n+i−1)! 4^i / ((n−i)! (2i)!), updated multiplicatively.
    // term_0 = (n−1)!/n! = 1/n, so n · term_0 = 1.
    let mut term = Rational::new(BigInt::one(), nn.clone());
    let mut acc = Rational::zero();
    for i in 0..=n {
        if i > 0 {
            let i_b = BigInt::from(i as u64);
            // ratio term_i / term_{i−1} = (n+i−1)(n−i+1) 4 / ((2i−1)(2i))
            let num = (&nn + &i_b - 1) * (&nn - &i_b + 1) * 4;
            let den = (BigInt::from(2u32) * &i_b - 1) * (BigInt::from(2u32) * &i_b);
            term = term * Rational::new(num, den);
        }
        acc += &term;
        let dk = &acc * Rational::from_integer(nn.clone());
        debug_assert!(dk.is_integer());
        out.push(dk.to_integer());
    }
    out
}

/// Numeric value of `p` with every `z_k` replaced by `ζ(k)`, correct to
/// relative error `10^{1−digits}`, rounded to `digits` significant digits.
///
/// A constant polynomial is evaluated exactly before rounding.
pub fn zp_eval(p: &ZetaPoly, digits: u32) -> Decimal {
    let digits = digits.max(1);
    if let Some(q) = p.as_constant() {
        let exact = Decimal::from_rational(&q, digits + 40);
        return exact.round_significant(digits);
    }
    // Working precision: requested digits plus room for coefficient growth and
    // products of approximate factors.
    let max_coeff_digits = p
        .terms()
        .map(|(_, q)| (q.numer().to_string().len() + q.denom().to_string().len()) as u32)
        .max()
        .unwrap_or(1);
    let max_degree = p.terms().map(|(m, _)| m.degree()).max().unwrap_or(0);
    let work = digits + 12 + max_coeff_digits + 2 * max_degree;

    let mut values: BTreeMap<u32, Rational> = BTreeMap::new();
    for (m, _) in p.terms() {
        for (k, _) in m.exponents() {
            values
                .entry(k)
                .or_insert_with(|| zeta_rational_approx(k, work));
        }
    }
    let mut total = Rational::zero();
    for (m, q) in p.terms() {
        let mut t = q.clone();
        for (k, e) in m.exponents() {
            t *= num_traits::pow(values[&k].clone(), e as usize);
        }
        total += t;
    }
    Decimal::from_rational(&total, work).round_significant(digits)
}
