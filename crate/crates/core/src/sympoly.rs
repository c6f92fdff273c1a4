//! Truncated multivariate polynomials in normalized weight variables and their
//! rewriting in elementary symmetric generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::coeff::{fmt_rational, Rational, ZetaPoly};
use crate::{Error, Result};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Polynomial in `v1 … v_rank` with [`ZetaPoly`] coefficients, truncated:
/// only monomials of total degree `≤ max_degree` are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    rank: usize,
    max_degree: u32,
    terms: BTreeMap<Exponents, ZetaPoly>,
}

impl GradedPoly {
    pub fn zero(rank: usize, max_degree: u32) -> Self {
        assert!(rank >= 1, "polynomial rank must be positive");
        Self {
            rank,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, max_degree: u32, c: ZetaPoly) -> Self {
        let mut p = Self::zero(rank, max_degree);
        p.add_term(vec![0; rank], c);
        p
    }

    /// The variable `v_{index+1}`.
    pub fn variable(rank: usize, max_degree: u32, index: usize) -> Self {
        let mut e = vec![0; rank];
        e[index] = 1;
        Self::monomial(rank, max_degree, e, ZetaPoly::one())
    }

    /// `c · v^e`, dropped when it lies above the truncation degree.
    pub fn monomial(rank: usize, max_degree: u32, e: Exponents, c: ZetaPoly) -> Self {
        let mut p = Self::zero(rank, max_degree);
        p.add_term(e, c);
        p
    }

    /// Integer linear form `Σ coeffs[i] · v_{i+1}`.
    pub fn linear_form(max_degree: u32, coeffs: &[i64]) -> Self {
        let rank = coeffs.len();
        let mut p = Self::zero(rank, max_degree);
        for (i, &a) in coeffs.iter().enumerate() {
            let mut e = vec![0; rank];
            e[i] = 1;
            p.add_term(e, ZetaPoly::from(a));
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ZetaPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> ZetaPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Highest degree carrying a nonzero term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn add_term(&mut self, e: Exponents, c: ZetaPoly) {
        assert_eq!(e.len(), self.rank, "exponent length must equal rank");
        if c.is_zero() || total_degree(&e) > self.max_degree {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    /// Sum, truncated at the smaller of the two truncation degrees.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.truncate(self.max_degree.min(other.max_degree));
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, c: &ZetaPoly) -> Self {
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.scale(q));
        }
        out
    }

    fn map_coefficients(&self, f: impl Fn(&ZetaPoly) -> ZetaPoly) -> Self {
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), f(a));
        }
        out
    }

    /// Product, truncated at the smaller truncation degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let max = self.max_degree.min(other.max_degree);
        let mut out = Self::zero(self.rank, max);
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &other.terms {
                if da + total_degree(eb) > max {
                    continue;
                }
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.rank, self.max_degree, ZetaPoly::one());
        for _ in 0..k {
            out = out.mul(self).expect("same rank");
        }
        out
    }

    /// Drops every term above degree `d`; the result is truncated at
    /// `min(d, max_degree)`.
    pub fn truncate(&self, d: u32) -> Self {
        let max = d.min(self.max_degree);
        let mut out = Self::zero(self.rank, max);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Degree-`d` part.
    pub fn homogeneous_component(&self, d: u32) -> Result<Self> {
        if d > self.max_degree {
            return Err(Error::Truncation {
                degree: d,
                max_degree: self.max_degree,
            });
        }
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, c) in &self.terms {
            if total_degree(e) == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Relabels variables: `v_i ↦ v_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.rank];
            for (i, &a) in e.iter().enumerate() {
                f[perm[i]] = a;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Adjacent transpositions generate the symmetric group, so invariance
    /// under each `(v_i v_{i+1})` is checked. The error names the first
    /// violating transposition (1-based).
    pub fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.rank.saturating_sub(1) {
            let swapped = self.swap_variables(i, i + 1);
            if &swapped != self {
                return Err(Error::NotSymmetric {
                    first: i + 1,
                    second: i + 2,
                });
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    fn swap_variables(&self, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.rank).collect();
        perm.swap(a, b);
        self.permute(&perm)
    }

    /// Substitutes `v_i ↦ Σ_k images[i][k] · w_k`. All images must share the
    /// target rank. The result keeps this polynomial's truncation degree.
    pub fn substitute(&self, images: &[Vec<i64>]) -> Result<Self> {
        if images.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: images.len(),
            });
        }
        let target = images[0].len();
        if target == 0 {
            return Err(Error::InvalidArgument("empty linear form".into()));
        }
        if let Some(bad) = images.iter().find(|l| l.len() != target) {
            return Err(Error::RankMismatch {
                expected: target,
                found: bad.len(),
            });
        }
        let forms: Vec<GradedPoly> = images
            .iter()
            .map(|l| Self::linear_form(self.max_degree, l))
            .collect();
        let mut powers: Vec<Vec<GradedPoly>> = forms
            .iter()
            .map(|f| vec![Self::constant(target, self.max_degree, ZetaPoly::one()), f.clone()])
            .collect();
        let mut out = Self::zero(target, self.max_degree);
        for (e, c) in &self.terms {
            let mut acc = Self::constant(target, self.max_degree, c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i])?;
                    powers[i].push(next);
                }
                acc = acc.mul(&powers[i][a as usize])?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Writes the polynomial with variables named `{name}{i}`.
    pub fn display_with(&self, name: &str) -> String {
        format_terms(
            display_order(&self.terms, total_degree)
                .into_iter()
                .map(|(e, c)| (monomial_string(e, name, 1), c)),
        )
    }
}

/// Terms sorted by degree, then by descending exponent vector.
pub(crate) fn display_order(
    terms: &BTreeMap<Exponents, ZetaPoly>,
    degree: fn(&[u32]) -> u32,
) -> Vec<(&Exponents, &ZetaPoly)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|a, b| degree(a.0).cmp(&degree(b.0)).then_with(|| b.0.cmp(a.0)));
    v
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("v"))
    }
}

/// `v1^2*v3` style monomial; `first_index` is the label of position 0.
pub(crate) fn monomial_string(e: &[u32], name: &str, first_index: usize) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| {
            if a == 1 {
                format!("{name}{}", i + first_index)
            } else {
                format!("{name}{}^{a}", i + first_index)
            }
        })
        .collect();
    parts.join("*")
}

/// Joins `coefficient * monomial` pairs with explicit signs. Multi-term
/// coefficients are parenthesized.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a ZetaPoly)>,
{
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (mono, c) in terms {
        let (negative, body) = if c.len() == 1 {
            let (zm, q) = c.terms().next().unwrap();
            let mut factors = Vec::new();
            let mag = q.abs();
            if !mag.is_one() || (zm.is_one() && mono.is_empty()) {
                factors.push(fmt_rational(&mag));
            }
            if !zm.is_one() {
                factors.push(zm.to_string().replace('*', " * "));
            }
            if !mono.is_empty() {
                factors.push(mono.replace('*', " * "));
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            (q.is_negative(), factors.join(" * "))
        } else if mono.is_empty() {
            (false, format!("({c})"))
        } else {
            (false, format!("({c}) * {}", mono.replace('*', " * ")))
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `p_j = v1^j + … + v_r^j`.
pub fn power_sum(j: u32, rank: usize, max_degree: u32) -> Result<GradedPoly> {
    if j > max_degree {
        return Err(Error::Truncation {
            degree: j,
            max_degree,
        });
    }
    let mut p = GradedPoly::zero(rank, max_degree);
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = j;
        p.add_term(e, ZetaPoly::one());
    }
    Ok(p)
}

/// `e_k(v1, …, v_r)`; zero for `k > r`.
pub fn elementary(k: u32, rank: usize, max_degree: u32) -> GradedPoly {
    let mut p = GradedPoly::zero(rank, max_degree);
    for_each_subset(rank, k as usize, |subset| {
        let mut e = vec![0; rank];
        for &i in subset {
            e[i] = 1;
        }
        p.add_term(e, ZetaPoly::one());
    });
    p
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut f);
    }
}

/// Polynomial in abstract generators `e1 … e_n` (`deg e_k = k`) with
/// [`ZetaPoly`] coefficients, truncated at weighted degree `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpr {
    rank: usize,
    max_degree: u32,
    terms: BTreeMap<Exponents, ZetaPoly>,
}

/// Weighted degree `Σ k · a_k` of an exponent vector over `e1 … e_n`.
pub fn weighted_degree(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(i, &a)| (i as u32 + 1) * a).sum()
}

impl SymExpr {
    pub fn zero(rank: usize, max_degree: u32) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Self {
            rank,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, max_degree: u32, c: ZetaPoly) -> Self {
        let mut s = Self::zero(rank, max_degree);
        s.add_term(vec![0; rank], c);
        s
    }

    /// The generator `e_k`, or zero when `k > rank`.
    pub fn generator(rank: usize, max_degree: u32, k: usize) -> Self {
        let mut s = Self::zero(rank, max_degree);
        if (1..=rank).contains(&k) {
            let mut e = vec![0; rank];
            e[k - 1] = 1;
            s.add_term(e, ZetaPoly::one());
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ZetaPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> ZetaPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exponents, c: ZetaPoly) {
        assert_eq!(e.len(), self.rank);
        if c.is_zero() || weighted_degree(&e) > self.max_degree {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        out.max_degree = self.max_degree.min(other.max_degree);
        out.terms.retain(|e, _| weighted_degree(e) <= out.max_degree);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ZetaPoly) -> Self {
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&ZetaPoly::constant(q.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let max = self.max_degree.min(other.max_degree);
        let mut out = Self::zero(self.rank, max);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Part of weighted degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.rank, self.max_degree);
        for (e, c) in &self.terms {
            if weighted_degree(e) == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes `e_k ↦ e_k(v1, …, v_rank)`.
    pub fn expand(&self) -> GradedPoly {
        let gens: Vec<GradedPoly> = (1..=self.rank)
            .map(|k| elementary(k as u32, self.rank, self.max_degree))
            .collect();
        let mut out = GradedPoly::zero(self.rank, self.max_degree);
        for (e, c) in &self.terms {
            let mut acc = GradedPoly::constant(self.rank, self.max_degree, c.clone());
            for (k, &a) in e.iter().enumerate() {
                acc = acc.mul(&gens[k].pow(a)).expect("same rank");
            }
            out = out.add(&acc).expect("same rank");
        }
        out
    }

    /// Writes the expression with generators named `{name}{k}`.
    pub fn display_with(&self, name: &str) -> String {
        format_terms(
            display_order(&self.terms, weighted_degree)
                .into_iter()
                .map(|(e, c)| (monomial_string(e, name, 1), c)),
        )
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("e"))
    }
}

/// Rewrites a symmetric polynomial in the elementary symmetric generators.
///
/// A symmetric polynomial is determined by its coefficients on monomials
/// with nonincreasing exponents (partitions), so only those are tracked.
/// The lex-largest remaining partition `λ` is cancelled by
/// `e1^{λ1−λ2} e2^{λ2−λ3} ⋯ e_n^{λn}`, whose expansion in the monomial
/// symmetric basis is counted as 0-1 matrices with prescribed row and
/// column sums.
pub fn newton_rewrite(p: &GradedPoly, n: usize) -> Result<SymExpr> {
    if p.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: p.rank(),
        });
    }
    p.check_symmetric()?;

    let mut work: BTreeMap<Exponents, ZetaPoly> = p
        .terms()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();

    let mut out = SymExpr::zero(n, p.max_degree());
    let mut counter = MatrixCounter::default();
    let mut partitions_by_degree: HashMap<u32, Vec<Exponents>> = HashMap::new();

    while let Some((lambda, c)) = work.pop_last() {
        let mut e_exps = vec![0u32; n];
        for k in 0..n {
            let next = if k + 1 < n { lambda[k + 1] } else { 0 };
            e_exps[k] = lambda[k] - next;
        }
        // Row sums: generator e_k appears e_exps[k-1] times.
        let rows: Vec<u32> = e_exps
            .iter()
            .enumerate()
            .flat_map(|(k, &a)| std::iter::repeat(k as u32 + 1).take(a as usize))
            .collect();
        let d = total_degree(&lambda);
        let candidates = partitions_by_degree
            .entry(d)
            .or_insert_with(|| partitions(d, n));
        for nu in candidates.iter().filter(|nu| **nu < lambda) {
            if nu[0] as usize > rows.len() {
                continue;
            }
            let count = counter.count(&rows, nu);
            if count != 0 {
                let q = Rational::from_integer(BigInt::from(count));
                let entry = work.entry(nu.clone()).or_default();
                entry.add_scaled(&c, &-q);
                if entry.is_zero() {
                    work.remove(nu);
                }
            }
        }
        out.add_term(e_exps, c);
    }
    Ok(out)
}

/// Partitions of `d` with at most `n` parts, padded with zeros to length `n`.
fn partitions(d: u32, n: usize) -> Vec<Exponents> {
    fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if rem == 0 {
            let mut p = cur.clone();
            p.resize(cur.len() + slots, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=rem.min(max_part)).rev() {
            cur.push(part);
            rec(rem - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, n, &mut Vec::new(), &mut out);
    out
}

/// Counts 0-1 matrices with given row sums and column sums.
#[derive(Default)]
struct MatrixCounter {
    memo: HashMap<(Vec<u32>, Vec<u32>), u128>,
}

impl MatrixCounter {
    fn count(&mut self, rows: &[u32], cols: &[u32]) -> u128 {
        if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
            return 0;
        }
        let mut sorted = cols.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        self.count_sorted(rows, sorted)
    }

    fn count_sorted(&mut self, rows: &[u32], cols: Vec<u32>) -> u128 {
        let Some((&r, rest)) = rows.split_first() else {
            return u128::from(cols.iter().all(|&c| c == 0));
        };
        let key = (rows.to_vec(), cols.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let open: Vec<usize> = (0..cols.len()).filter(|&i| cols[i] > 0).collect();
        let mut total = 0u128;
        if r as usize <= open.len() {
            let mut subsets = Vec::new();
            for_each_subset(open.len(), r as usize, |s| subsets.push(s.to_vec()));
            for s in subsets {
                let mut next = cols.clone();
                for &i in &s {
                    next[open[i]] -= 1;
                }
                next.sort_unstable_by(|a, b| b.cmp(a));
                total += self.count_sorted(rest, next);
            }
        }
        self.memo.insert(key, total);
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    fn int(n: i64) -> ZetaPoly {
        ZetaPoly::from(n)
    }

    fn sym(n: usize, d: u32, terms: &[(&[u32], i64)]) -> SymExpr {
        let mut s = SymExpr::zero(n, d);
        for (e, c) in terms {
            s.add_term(e.to_vec(), int(*c));
        }
        s
    }

    #[test]
    fn power_sums() {
        let p = power_sum(1, 3, 4).unwrap();
        assert_eq!(p.to_string(), "v1 + v2 + v3");
        let p = power_sum(2, 2, 4).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&[2, 0]), ZetaPoly::one());
        for j in 1..=6 {
            assert_eq!(power_sum(2 * j, 5, 12).unwrap().len(), 5);
        }
        assert_eq!(
            power_sum(5, 2, 4),
            Err(Error::Truncation {
                degree: 5,
                max_degree: 4
            })
        );
    }

    #[test]
    fn newton_p2_rank2() {
        let s = newton_rewrite(&power_sum(2, 2, 4).unwrap(), 2).unwrap();
        assert_eq!(s, sym(2, 4, &[(&[2, 0], 1), (&[0, 1], -2)]));
    }

    #[test]
    fn newton_p3_rank3() {
        let s = newton_rewrite(&power_sum(3, 3, 6).unwrap(), 3).unwrap();
        let expected = sym(3, 6, &[(&[3, 0, 0], 1), (&[1, 1, 0], -3), (&[0, 0, 1], 3)]);
        assert_eq!(s, expected);
    }

    #[test]
    fn newton_e2() {
        let mut p = GradedPoly::zero(2, 4);
        p.add_term(vec![1, 1], ZetaPoly::one());
        let s = newton_rewrite(&p, 2).unwrap();
        assert_eq!(s, sym(2, 4, &[(&[0, 1], 1)]));
    }

    #[test]
    fn newton_rejects_asymmetric() {
        let mut p = GradedPoly::zero(3, 4);
        p.add_term(vec![2, 0, 0], int(1));
        p.add_term(vec![0, 2, 0], int(1));
        assert_eq!(
            newton_rewrite(&p, 3),
            Err(Error::NotSymmetric { first: 2, second: 3 })
        );
        assert!(matches!(
            newton_rewrite(&p, 2),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn symmetric_check() {
        assert!(power_sum(2, 2, 4).unwrap().is_symmetric());
        assert!(!GradedPoly::variable(2, 4, 0).is_symmetric());
    }

    #[test]
    fn substitute_scales() {
        let mut p = GradedPoly::zero(1, 4);
        p.add_term(vec![2], int(1));
        let q = p.substitute(&[vec![2]]).unwrap();
        assert_eq!(q.coefficient(&[2]), int(4));
        assert_eq!(q.len(), 1);
        assert!(p.substitute(&[vec![1], vec![1]]).is_err());
    }

    #[test]
    fn substitute_expands_binomial() {
        let mut p = GradedPoly::zero(1, 4);
        p.add_term(vec![2], int(1));
        let q = p.substitute(&[vec![1, 1]]).unwrap();
        assert_eq!(q.coefficient(&[2, 0]), int(1));
        assert_eq!(q.coefficient(&[1, 1]), int(2));
        assert_eq!(q.coefficient(&[0, 2]), int(1));
    }

    #[test]
    fn truncation() {
        let mut p = GradedPoly::zero(1, 8);
        p.add_term(vec![1], int(1));
        p.add_term(vec![5], int(1));
        let t = p.truncate(4);
        assert_eq!(t, GradedPoly::variable(1, 4, 0));
        assert_eq!(t.max_degree(), 4);
    }

    #[test]
    fn homogeneous_parts() {
        let p = power_sum(2, 2, 4).unwrap();
        assert_eq!(p.homogeneous_component(2).unwrap(), p);
        assert!(p.homogeneous_component(3).unwrap().is_zero());
        assert!(p.homogeneous_component(5).is_err());
    }

    #[test]
    fn partition_enumeration() {
        // p(6) = 11; with at most 3 parts there are 7.
        assert_eq!(partitions(6, 6).len(), 11);
        assert_eq!(partitions(6, 3).len(), 7);
        assert!(partitions(6, 3).windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn matrix_counts() {
        let mut c = MatrixCounter::default();
        // e1^2 = m_(2) + 2 m_(1,1)
        assert_eq!(c.count(&[1, 1], &[1, 1]), 2);
        assert_eq!(c.count(&[1, 1], &[2, 0]), 1);
        assert_eq!(c.count(&[2], &[2, 0]), 0);
    }

    #[test]
    fn sym_expr_arithmetic_and_display() {
        let e1 = SymExpr::generator(2, 4, 1);
        let e2 = SymExpr::generator(2, 4, 2);
        let s = e1.mul(&e1).add(&e2.scale_rational(&rat(-2, 1)));
        assert_eq!(s.to_string(), "e1^2 - 2 * e2");
        assert!(SymExpr::generator(2, 4, 3).is_zero());
        assert_eq!(s.expand(), power_sum(2, 2, 4).unwrap());
        let half = s.scale_rational(&rat(1, 2));
        assert_eq!(half.coefficient(&[2, 0]), ZetaPoly::constant(rat(1, 2)));
        assert_eq!(
            s.homogeneous_component(2).coefficient(&[0, 1]),
            ZetaPoly::constant(rat_int(-2))
        );
    }
}
