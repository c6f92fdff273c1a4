//! Unitary torus representations as weight multisets.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// A character of a rank-`r` torus, as an integer vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// The `i`-th standard basis weight (0-based).
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Self(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weights with multiplicities; the representation is the direct sum of the
/// corresponding one-dimensional characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    rank: usize,
    weights: BTreeMap<Weight, u64>,
}

impl Representation {
    /// The zero representation of a rank-`rank` torus.
    pub fn empty(rank: usize) -> Self {
        Self {
            rank,
            weights: BTreeMap::new(),
        }
    }

    /// Builds a representation from `(weight, multiplicity)` pairs, merging
    /// repeated weights. Zero multiplicities are dropped.
    pub fn from_weights<I>(rank: usize, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, u64)>,
    {
        let mut rep = Self::empty(rank);
        for (w, m) in weights {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: w.rank(),
                });
            }
            rep.insert(w, m);
        }
        Ok(rep)
    }

    fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.weights.entry(w).or_insert(0) += m;
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Distinct weights in sorted order, with multiplicities.
    pub fn weights(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    pub fn distinct_weights(&self) -> usize {
        self.weights.len()
    }

    pub fn has_zero_weight(&self) -> bool {
        self.weights.keys().any(Weight::is_zero)
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

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, m) in other.weights() {
            out.insert(w.clone(), m);
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::empty(self.rank);
        for (a, ma) in self.weights() {
            for (b, mb) in other.weights() {
                out.insert(a.add(b), ma * mb);
            }
        }
        Ok(out)
    }

    pub fn dual(&self) -> Self {
        let mut out = Self::empty(self.rank);
        for (w, m) in self.weights() {
            out.insert(w.neg(), m);
        }
        out
    }

    /// `Sym^k`: a basis vector is a multiset of `k` basis vectors. Choosing
    /// `c` of them from an `m`-dimensional weight space gives
    /// `C(m + c − 1, c)` vectors of weight `c · α`.
    pub fn sym_power(&self, k: u32) -> Self {
        self.graded_power(k, |m, c| binomial(m + c - 1, c))
    }

    /// `Λ^k`, with `C(m, c)` vectors of weight `c · α` per weight space.
    pub fn ext_power(&self, k: u32) -> Result<Self> {
        if u64::from(k) > self.dim() {
            return Err(Error::InvalidArgument(format!(
                "exterior power {k} exceeds dimension {}",
                self.dim()
            )));
        }
        Ok(self.graded_power(k, binomial))
    }

    fn graded_power(&self, k: u32, count: fn(u64, u64) -> u64) -> Self {
        let spaces: Vec<(&Weight, u64)> = self.weights().collect();
        let mut out = Self::empty(self.rank);
        fn rec(
            spaces: &[(&Weight, u64)],
            remaining: u64,
            acc: Weight,
            mult: u64,
            count: fn(u64, u64) -> u64,
            out: &mut Representation,
        ) {
            let Some(((w, m), rest)) = spaces.split_first() else {
                if remaining == 0 {
                    out.insert(acc, mult);
                }
                return;
            };
            for c in 0..=remaining {
                let ways = if c == 0 { 1 } else { count(*m, c) };
                if ways == 0 {
                    continue;
                }
                rec(rest, remaining - c, acc.add(&w.scale(c as i64)), mult * ways, count, out);
            }
        }
        rec(&spaces, u64::from(k), Weight::zero(self.rank), 1, count, &mut out);
        out
    }

    /// Pulls back along the torus homomorphism with weight map `w ↦ L·w`,
    /// `L` an `r' × r` integer matrix given by rows.
    pub fn restrict(&self, matrix: &[Vec<i64>]) -> Result<Self> {
        let target = matrix.len();
        if target == 0 {
            return Err(Error::InvalidArgument("restriction matrix has no rows".into()));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != self.rank) {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: row.len(),
            });
        }
        let mut out = Self::empty(target);
        for (w, m) in self.weights() {
            let image: Vec<i64> = matrix
                .iter()
                .map(|row| row.iter().zip(w.coords()).map(|(a, b)| a * b).sum())
                .collect();
            out.insert(Weight(image), m);
        }
        Ok(out)
    }
}

/// Standard representation of `U(n)` restricted to the diagonal torus.
pub fn std_rep(n: usize) -> Result<Representation> {
    if n < 1 {
        return Err(Error::InvalidArgument("std_rep needs n >= 1".into()));
    }
    Representation::from_weights(n, (0..n).map(|i| (Weight::basis(n, i), 1)))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights()
            .map(|(w, m)| if m == 1 { w.to_string() } else { format!("{w}:{m}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
