//! Graded results and their text and JSON renderings.
//!
//! JSON layout:
//!
//! ```json
//! {"variables": ["v1", "v2"],
//!  "components": {"4": [{"monomial": {"v1": 2}, "coeff": {"z3": [15, 8]}}]}}
//! ```
//!
//! Component keys are cohomological degrees. Numerators and denominators that
//! fit in an `i64` are JSON numbers, larger ones are decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use sphtorsion::chernweil::CharClassExpr;
use sphtorsion::coeff::fmt_rational;
use sphtorsion::cpn::CPnClass;
use sphtorsion::sympoly::GradedPoly;
use sphtorsion::zeta::zp_eval;
use sphtorsion::{Rational, ZetaMonomial, ZetaPoly};

/// A graded polynomial with [`ZetaPoly`] coefficients in named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graded {
    pub variables: Vec<String>,
    /// Cohomological degree ↦ terms `(exponents, coefficient)`.
    pub components: BTreeMap<u32, Vec<(Vec<u32>, ZetaPoly)>>,
}

fn indexed(name: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{name}{i}")).collect()
}

impl Graded {
    /// Variables `v1 … v_r` of cohomological degree 2.
    pub fn from_poly(p: &GradedPoly) -> Self {
        Self::collect(indexed("v", p.rank()), p.terms(), |e| 2 * e.iter().sum::<u32>())
    }

    /// Generators `c1 … c_n`, `c_k` of cohomological degree `2k`.
    pub fn from_class(c: &CharClassExpr) -> Self {
        Self::collect(indexed("c", c.rank()), c.terms(), |e| {
            2 * e.iter().enumerate().map(|(i, a)| (i as u32 + 1) * a).sum::<u32>()
        })
    }

    /// The hyperplane class `H` of cohomological degree 2.
    pub fn from_cpn(c: &CPnClass) -> Self {
        let coeffs: Vec<(Vec<u32>, ZetaPoly)> =
            (0..=c.n()).map(|p| (vec![p as u32], c.coefficient(p))).collect();
        Self::collect(vec!["H".into()], coeffs.iter().map(|(e, c)| (e, c)), |e| 2 * e[0])
    }

    fn collect<'a, I>(variables: Vec<String>, terms: I, degree: impl Fn(&[u32]) -> u32) -> Self
    where
        I: Iterator<Item = (&'a Vec<u32>, &'a ZetaPoly)>,
    {
        let mut components: BTreeMap<u32, Vec<(Vec<u32>, ZetaPoly)>> = BTreeMap::new();
        for (e, c) in terms {
            if !c.is_zero() {
                components.entry(degree(e)).or_default().push((e.clone(), c.clone()));
            }
        }
        for terms in components.values_mut() {
            terms.sort_by(|a, b| b.0.cmp(&a.0));
        }
        Self {
            variables,
            components,
        }
    }

    fn monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.variables)
            .filter(|(a, _)| **a > 0)
            .map(|(a, v)| if *a == 1 { v.clone() } else { format!("{v}^{a}") })
            .collect();
        parts.join(" * ")
    }

    /// One `T[d] = …` line per nonzero component; a single `T = 0` line when
    /// everything vanishes. With `digits`, coefficients are evaluated to that
    /// many significant digits.
    pub fn to_text(&self, digits: Option<u32>) -> String {
        if self.components.is_empty() {
            return "T = 0\n".into();
        }
        let mut out = String::new();
        for (d, terms) in &self.components {
            let rendered: Vec<(bool, String)> = terms
                .iter()
                .map(|(e, c)| {
                    let mono = self.monomial(e);
                    match digits {
                        Some(p) => numeric_term(c, &mono, p),
                        None => exact_term(c, &mono),
                    }
                })
                .collect();
            out.push_str(&format!("T[{d}] = {}\n", join_signed(&rendered)));
        }
        out
    }

    pub fn to_json(&self, digits: Option<u32>) -> Value {
        let mut comps = Map::new();
        for (d, terms) in &self.components {
            let list: Vec<Value> = terms
                .iter()
                .map(|(e, c)| {
                    let mono: Map<String, Value> = e
                        .iter()
                        .zip(&self.variables)
                        .filter(|(a, _)| **a > 0)
                        .map(|(a, v)| (v.clone(), json!(a)))
                        .collect();
                    let mut term = Map::new();
                    term.insert("monomial".into(), Value::Object(mono));
                    term.insert("coeff".into(), zeta_poly_json(c));
                    if let Some(p) = digits {
                        term.insert("numeric".into(), json!(zp_eval(c, p).to_string()));
                    }
                    Value::Object(term)
                })
                .collect();
            comps.insert(d.to_string(), Value::Array(list));
        }
        json!({ "variables": self.variables, "components": comps })
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let variables: Vec<String> = v
            .get("variables")
            .and_then(Value::as_array)
            .ok_or("missing \"variables\"")?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or("variable names must be strings"))
            .collect::<Result<_, _>>()?;
        let comps = v
            .get("components")
            .and_then(Value::as_object)
            .ok_or("missing \"components\"")?;
        let mut components = BTreeMap::new();
        for (key, terms) in comps {
            let d: u32 = key.parse().map_err(|_| format!("bad degree key {key:?}"))?;
            let mut out = Vec::new();
            for term in terms.as_array().ok_or("components must be lists")? {
                let mono = term
                    .get("monomial")
                    .and_then(Value::as_object)
                    .ok_or("term without \"monomial\"")?;
                let mut e = vec![0u32; variables.len()];
                for (name, a) in mono {
                    let i = variables
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| format!("unknown variable {name:?}"))?;
                    e[i] = a
                        .as_u64()
                        .and_then(|a| u32::try_from(a).ok())
                        .ok_or("exponents must be nonnegative integers")?;
                }
                let c = parse_zeta_poly(term.get("coeff").ok_or("term without \"coeff\"")?)?;
                out.push((e, c));
            }
            components.insert(d, out);
        }
        Ok(Self {
            variables,
            components,
        })
    }
}

fn exact_term(c: &ZetaPoly, mono: &str) -> (bool, String) {
    if c.len() != 1 {
        return if mono.is_empty() {
            (false, format!("({c})"))
        } else {
            (false, format!("({c}) * {mono}"))
        };
    }
    let (zm, q) = c.terms().next().expect("one term");
    let mut factors = Vec::new();
    if !q.abs().is_one() || (zm.is_one() && mono.is_empty()) {
        factors.push(fmt_rational(&q.abs()));
    }
    if !zm.is_one() {
        factors.push(zm.to_string().replace('*', " * "));
    }
    if !mono.is_empty() {
        factors.push(mono.to_string());
    }
    (q.is_negative(), factors.join(" * "))
}

fn numeric_term(c: &ZetaPoly, mono: &str, digits: u32) -> (bool, String) {
    let value = zp_eval(c, digits).to_string();
    let (negative, mag) = match value.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, value),
    };
    if mono.is_empty() {
        (negative, mag)
    } else {
        (negative, format!("{mag} * {mono}"))
    }
}

fn join_signed(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rational_json(q: &Rational) -> Value {
    json!([int_json(q.numer()), int_json(q.denom())])
}

/// `{"z3": [15, 8], "1": [1, 2], "z3*z5^2": [...]}`.
pub fn zeta_poly_json(c: &ZetaPoly) -> Value {
    Value::Object(c.terms().map(|(m, q)| (m.to_string(), rational_json(q))).collect())
}

fn parse_int(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("{n} is not an integer")),
        Value::String(s) => s.parse().map_err(|_| format!("{s:?} is not an integer")),
        _ => Err("expected an integer".into()),
    }
}

pub fn parse_rational(v: &Value) -> Result<Rational, String> {
    match v.as_array().map(Vec::as_slice) {
        Some([n, d]) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        _ => Err("expected [numerator, denominator]".into()),
    }
}

/// Inverse of the zeta-monomial display: `1`, `z3`, `z3^2*z5`.
pub fn parse_zeta_monomial(s: &str) -> Result<ZetaMonomial, String> {
    if s == "1" {
        return Ok(ZetaMonomial::one());
    }
    let mut exps = Vec::new();
    for factor in s.split('*') {
        let body = factor.strip_prefix('z').ok_or_else(|| format!("bad zeta factor {factor:?}"))?;
        let (k, e) = match body.split_once('^') {
            Some((k, e)) => (k, e),
            None => (body, "1"),
        };
        let k: u32 = k.parse().map_err(|_| format!("bad zeta index in {factor:?}"))?;
        let e: u32 = e.parse().map_err(|_| format!("bad exponent in {factor:?}"))?;
        exps.push((k, e));
    }
    ZetaMonomial::from_exponents(exps).map_err(|e| e.to_string())
}

pub fn parse_zeta_poly(v: &Value) -> Result<ZetaPoly, String> {
    let map = v.as_object().ok_or("coefficient must be an object")?;
    let mut out = ZetaPoly::zero();
    for (key, q) in map {
        out.add_term(parse_zeta_monomial(key)?, parse_rational(q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sphtorsion::coeff::rat;
    use sphtorsion::cpn::evaluate_torsion_class;

    #[test]
    fn cpn_text() {
        let g = Graded::from_cpn(&evaluate_torsion_class(2, 16).unwrap());
        assert_eq!(g.to_text(None), "T[4] = 45/8 * z3 * H^2\n");
        assert_eq!(g.to_text(Some(7)), "T[4] = 6.761570 * H^2\n");
    }

    #[test]
    fn large_numbers_become_strings() {
        let q = Rational::new(BigInt::from(10).pow(30), BigInt::from(7));
        let v = rational_json(&q);
        assert!(v[0].is_string() && v[1].is_number());
        assert_eq!(parse_rational(&v).unwrap(), q);
    }

    #[test]
    fn mixed_coefficients() {
        let mut c = ZetaPoly::zeta(3, rat(-1, 2)).unwrap();
        c.add_term(parse_zeta_monomial("z3^2*z5").unwrap(), rat(3, 1));
        c.add_term(ZetaMonomial::one(), rat(5, 4));
        assert_eq!(parse_zeta_poly(&zeta_poly_json(&c)).unwrap(), c);
        let (neg, body) = exact_term(&c, "v1");
        assert!(!neg && body.starts_with('(') && body.ends_with(") * v1"));
        assert_eq!(exact_term(&ZetaPoly::zeta(3, rat(-1, 1)).unwrap(), ""), (true, "z3".into()));
        assert_eq!(exact_term(&ZetaPoly::constant(rat(1, 1)), ""), (false, "1".into()));
    }

    #[test]
    fn zero_is_reported() {
        let g = Graded::from_cpn(&CPnClass::zero(1));
        assert_eq!(g.to_text(None), "T = 0\n");
    }
}
