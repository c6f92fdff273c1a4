//! Representation expressions.
//!
//! ```text
//! expr   := prod ('+' prod)*
//! prod   := atom ('*' atom)*
//! atom   := 'std(' INT ')' | 'dual(' expr ')' | 'sym' INT '(' expr ')'
//!         | 'ext' INT '(' expr ')' | '{' weight (',' weight)* '}' | '(' expr ')'
//! weight := '(' INT (',' INT)* ')' [':' INT]
//! ```
//!
//! `+` is direct sum and `*` is tensor product. Whitespace is ignored.

use std::fmt;

use sphtorsion::reps::{std_rep, Representation, Weight};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepExpr {
    Std(usize),
    Weights(Vec<(Vec<i64>, u64)>),
    Dual(Box<RepExpr>),
    Sum(Box<RepExpr>, Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Sym(u32, Box<RepExpr>),
    Ext(u32, Box<RepExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("rank mismatch at byte {offset}: left side has rank {left}, right side has rank {right}")]
    RankMismatch { offset: usize, left: usize, right: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            Self::Syntax { offset, .. } | Self::RankMismatch { offset, .. } => *offset,
        }
    }
}

impl RepExpr {
    /// Torus rank. Well-formed by construction when produced by [`parse_rep`].
    pub fn rank(&self) -> usize {
        match self {
            Self::Std(n) => *n,
            Self::Weights(ws) => ws.first().map_or(0, |(w, _)| w.len()),
            Self::Dual(e) | Self::Sym(_, e) | Self::Ext(_, e) => e.rank(),
            Self::Sum(a, _) | Self::Tensor(a, _) => a.rank(),
        }
    }

    pub fn evaluate(&self) -> sphtorsion::Result<Representation> {
        match self {
            Self::Std(n) => std_rep(*n),
            Self::Weights(ws) => {
                Representation::from_weights(self.rank(), ws.iter().map(|(w, m)| (Weight(w.clone()), *m)))
            }
            Self::Dual(e) => Ok(e.evaluate()?.dual()),
            Self::Sum(a, b) => a.evaluate()?.direct_sum(&b.evaluate()?),
            Self::Tensor(a, b) => a.evaluate()?.tensor(&b.evaluate()?),
            Self::Sym(k, e) => Ok(e.evaluate()?.sym_power(*k)),
            Self::Ext(k, e) => e.evaluate()?.ext_power(*k),
        }
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Std(n) => write!(f, "std({n})"),
            Self::Weights(ws) => {
                let parts: Vec<String> = ws
                    .iter()
                    .map(|(w, m)| {
                        let coords: Vec<String> = w.iter().map(i64::to_string).collect();
                        if *m == 1 {
                            format!("({})", coords.join(","))
                        } else {
                            format!("({}):{m}", coords.join(","))
                        }
                    })
                    .collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            Self::Dual(e) => write!(f, "dual({e})"),
            Self::Sum(a, b) => match **b {
                RepExpr::Sum(..) => write!(f, "{a} + ({b})"),
                _ => write!(f, "{a} + {b}"),
            },
            Self::Tensor(a, b) => {
                let left = match **a {
                    RepExpr::Sum(..) => format!("({a})"),
                    _ => a.to_string(),
                };
                let right = match **b {
                    RepExpr::Sum(..) | RepExpr::Tensor(..) => format!("({b})"),
                    _ => b.to_string(),
                };
                write!(f, "{left} * {right}")
            }
            Self::Sym(k, e) => write!(f, "sym{k}({e})"),
            Self::Ext(k, e) => write!(f, "ext{k}({e})"),
        }
    }
}

pub fn parse_rep(text: &str) -> Result<RepExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(e)
}

/// Parses and evaluates in one step; evaluation errors are reported as
/// strings.
pub fn parse_representation(text: &str) -> Result<Representation, String> {
    let e = parse_rep(text).map_err(|e| e.to_string())?;
    e.evaluate().map_err(|e| e.to_string())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{}', found '{}'", c as char, d as char))),
            None => Err(self.error(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError::Syntax {
                offset: start,
                message: "integer out of range".into(),
            })
    }

    fn positive(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let v = self.int()?;
        if v < 1 {
            return Err(ParseError::Syntax {
                offset: start,
                message: format!("{what} must be a positive integer"),
            });
        }
        Ok(v as u64)
    }

    fn expr(&mut self) -> Result<RepExpr, ParseError> {
        let mut left = self.prod()?;
        while self.peek() == Some(b'+') {
            let at = self.pos;
            self.pos += 1;
            let right = self.prod()?;
            check_ranks(at, &left, &right)?;
            left = RepExpr::Sum(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn prod(&mut self) -> Result<RepExpr, ParseError> {
        let mut left = self.atom()?;
        while self.peek() == Some(b'*') {
            let at = self.pos;
            self.pos += 1;
            let right = self.atom()?;
            check_ranks(at, &left, &right)?;
            left = RepExpr::Tensor(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<RepExpr, ParseError> {
        match self.peek() {
            None => Err(self.error("expected a representation, found end of input")),
            Some(b'{') => self.weights(),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(_) => {
                if self.keyword("std") {
                    self.expect(b'(')?;
                    let n = self.positive("rank")?;
                    self.expect(b')')?;
                    Ok(RepExpr::Std(n as usize))
                } else if self.keyword("dual") {
                    Ok(RepExpr::Dual(Box::new(self.parenthesized()?)))
                } else if self.keyword("sym") {
                    let k = self.power()?;
                    Ok(RepExpr::Sym(k, Box::new(self.parenthesized()?)))
                } else if self.keyword("ext") {
                    let k = self.power()?;
                    Ok(RepExpr::Ext(k, Box::new(self.parenthesized()?)))
                } else {
                    Err(self.error("expected std, dual, sym, ext, '{' or '('"))
                }
            }
        }
    }

    fn power(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let k = self.positive("power")?;
        u32::try_from(k).map_err(|_| ParseError::Syntax {
            offset: start,
            message: "power out of range".into(),
        })
    }

    fn parenthesized(&mut self) -> Result<RepExpr, ParseError> {
        self.expect(b'(')?;
        let e = self.expr()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn weights(&mut self) -> Result<RepExpr, ParseError> {
        self.expect(b'{')?;
        let mut out: Vec<(Vec<i64>, u64)> = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            let w = self.weight()?;
            if let Some((first, _)) = out.first() {
                if first.len() != w.0.len() {
                    return Err(ParseError::RankMismatch {
                        offset: at,
                        left: first.len(),
                        right: w.0.len(),
                    });
                }
            }
            out.push(w);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(RepExpr::Weights(out));
                }
                Some(c) => return Err(self.error(format!("expected ',' or '}}', found '{}'", c as char))),
                None => return Err(self.error("expected ',' or '}', found end of input")),
            }
        }
    }

    fn weight(&mut self) -> Result<(Vec<i64>, u64), ParseError> {
        self.expect(b'(')?;
        let mut coords = vec![self.int()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    coords.push(self.int()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(c) => return Err(self.error(format!("expected ',' or ')', found '{}'", c as char))),
                None => return Err(self.error("expected ',' or ')', found end of input")),
            }
        }
        let mult = if self.peek() == Some(b':') {
            self.pos += 1;
            self.positive("multiplicity")?
        } else {
            1
        };
        Ok((coords, mult))
    }
}

fn check_ranks(offset: usize, left: &RepExpr, right: &RepExpr) -> Result<(), ParseError> {
    if left.rank() != right.rank() {
        return Err(ParseError::RankMismatch {
            offset,
            left: left.rank(),
            right: right.rank(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(e: RepExpr) -> Box<RepExpr> {
        Box::new(e)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_rep("std(3)").unwrap(), RepExpr::Std(3));
        assert_eq!(
            parse_rep("sym2(std(2)) + dual(std(2))").unwrap(),
            RepExpr::Sum(b(RepExpr::Sym(2, b(RepExpr::Std(2)))), b(RepExpr::Dual(b(RepExpr::Std(2)))))
        );
        assert_eq!(
            parse_rep("{(1,0):2, (0,1)}").unwrap(),
            RepExpr::Weights(vec![(vec![1, 0], 2), (vec![0, 1], 1)])
        );
    }

    #[test]
    fn precedence_and_whitespace() {
        let e = parse_rep(" std(2) + std(2)*dual( std(2) ) ").unwrap();
        assert!(matches!(e, RepExpr::Sum(_, ref r) if matches!(**r, RepExpr::Tensor(..))));
        let g = parse_rep("(std(2) + std(2)) * std(2)").unwrap();
        assert!(matches!(g, RepExpr::Tensor(..)));
        assert_eq!(parse_rep(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn negative_weights() {
        let rep = parse_rep("{(1,-2), (-1, 2):3}").unwrap().evaluate().unwrap();
        assert_eq!(rep.dim(), 4);
        assert_eq!(rep.multiplicity(&Weight(vec![-1, 2])), 3);
    }

    #[test]
    fn error_offsets() {
        let err = parse_rep("std(2) + std(3)").unwrap_err();
        assert_eq!(err, ParseError::RankMismatch { offset: 7, left: 2, right: 3 });
        let msg = err.to_string();
        assert!(msg.contains("rank 2") && msg.contains("rank 3"));
        assert_eq!(parse_rep("std(2").unwrap_err().offset(), 5);
        assert_eq!(parse_rep("std(0)").unwrap_err().offset(), 4);
        assert_eq!(parse_rep("foo").unwrap_err().offset(), 0);
        assert_eq!(parse_rep("{(1,0), (1)}").unwrap_err().offset(), 8);
        assert!(parse_rep("std(2) std(2)").is_err());
        assert!(parse_rep("").is_err());
        assert!(parse_rep("{(1):0}").is_err());
    }

    #[test]
    fn evaluation() {
        let rep = parse_rep("ext2(std(4))").unwrap().evaluate().unwrap();
        assert_eq!(rep.dim(), 6);
        assert!(parse_rep("ext3(std(2))").unwrap().evaluate().is_err());
        let rep = parse_rep("std(2) * dual(std(2))").unwrap().evaluate().unwrap();
        assert!(rep.has_zero_weight());
    }
}
