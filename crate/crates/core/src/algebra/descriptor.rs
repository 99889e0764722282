//! Algebra descriptors: `E(n) | Mat(k) | Mat(k;zeta) | MatE(k,n) | MpqE(p,q,n) | T(d,d)`.
//!
//! The generator count of `E`, `MatE` and `MpqE` may be written as the
//! placeholder `n`, resolved against a truncation supplied by the caller.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grassmann::MAX_GENERATORS;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Grassmann(u32),
    Matrix { k: u32, zeta: bool },
    MatrixGrassmann(u32, u32),
    Mpq(u32, u32, u32),
    Tensor(Box<Descriptor>, Box<Descriptor>),
}

impl Descriptor {
    /// Dimension, `None` on overflow.
    pub fn dim(&self) -> Option<u128> {
        let pow2 = |n: u32| 1u128.checked_shl(n);
        match self {
            Descriptor::Grassmann(n) => pow2(*n),
            Descriptor::Matrix { k, .. } => Some(*k as u128 * *k as u128),
            Descriptor::MatrixGrassmann(k, n) => pow2(*n)?.checked_mul(*k as u128 * *k as u128),
            Descriptor::Mpq(p, q, n) => {
                let (p, q) = (*p as u128, *q as u128);
                if *n == 0 {
                    Some(p * p + q * q)
                } else {
                    pow2(n - 1)?.checked_mul((p + q) * (p + q))
                }
            }
            Descriptor::Tensor(a, b) => a.dim()?.checked_mul(b.dim()?),
        }
    }

    /// Generator counts of the Grassmann factors, left to right.
    pub fn grassmann_counts(&self) -> Vec<u32> {
        match self {
            Descriptor::Grassmann(n) | Descriptor::MatrixGrassmann(_, n) | Descriptor::Mpq(_, _, n) => {
                vec![*n]
            }
            Descriptor::Matrix { .. } => Vec::new(),
            Descriptor::Tensor(a, b) => {
                let mut v = a.grassmann_counts();
                v.extend(b.grassmann_counts());
                v
            }
        }
    }

    /// Cyclotomic conductor of the coefficient field.
    pub fn conductor(&self) -> Result<u32> {
        match self {
            Descriptor::Matrix { k, zeta: true } => Ok(*k),
            Descriptor::Tensor(a, b) => match (a.conductor()?, b.conductor()?) {
                (1, y) => Ok(y),
                (x, 1) => Ok(x),
                (x, y) if x == y => Ok(x),
                (x, y) => Err(Error::ConductorMismatch(x, y)),
            },
            _ => Ok(1),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Grassmann(n) => write!(f, "E({n})"),
            Descriptor::Matrix { k, zeta: false } => write!(f, "Mat({k})"),
            Descriptor::Matrix { k, zeta: true } => write!(f, "Mat({k};zeta)"),
            Descriptor::MatrixGrassmann(k, n) => write!(f, "MatE({k},{n})"),
            Descriptor::Mpq(p, q, n) => write!(f, "MpqE({p},{q},{n})"),
            Descriptor::Tensor(a, b) => write!(f, "T({a},{b})"),
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s, None)
    }
}

/// Parses a descriptor, substituting `truncation` for the placeholder `n`.
pub fn parse_descriptor(text: &str, truncation: Option<u32>) -> Result<Descriptor> {
    let mut p = Parser {
        text,
        pos: 0,
        truncation,
    };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(d)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    truncation: Option<u32>,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Descriptor(format!("{} (at position {}: {what})", self.text, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.rest().starts_with(|c: char| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn generators(&mut self) -> Result<u32> {
        self.skip_ws();
        let n = if self.rest().starts_with('n') {
            self.pos += 1;
            self.truncation
                .ok_or_else(|| self.err("placeholder `n` without a truncation"))?
        } else {
            self.number()?
        };
        if n > MAX_GENERATORS {
            return Err(self.err(&format!("at most {MAX_GENERATORS} generators")));
        }
        Ok(n)
    }

    fn positive(&mut self) -> Result<u32> {
        let k = self.number()?;
        if k == 0 {
            return Err(self.err("size must be positive"));
        }
        Ok(k)
    }

    fn descriptor(&mut self) -> Result<Descriptor> {
        let start = self.pos;
        let name = self.ident().to_string();
        self.expect('(')?;
        let d = match name.as_str() {
            "E" => Descriptor::Grassmann(self.generators()?),
            "Mat" => {
                let k = self.positive()?;
                self.skip_ws();
                let zeta = if self.rest().starts_with(';') {
                    self.pos += 1;
                    if self.ident() != "zeta" {
                        return Err(self.err("expected `zeta`"));
                    }
                    true
                } else {
                    false
                };
                Descriptor::Matrix { k, zeta }
            }
            "MatE" => {
                let k = self.positive()?;
                self.expect(',')?;
                Descriptor::MatrixGrassmann(k, self.generators()?)
            }
            "MpqE" => {
                let p = self.number()?;
                self.expect(',')?;
                let q = self.number()?;
                self.expect(',')?;
                if p + q == 0 {
                    return Err(self.err("p + q must be positive"));
                }
                Descriptor::Mpq(p, q, self.generators()?)
            }
            "T" => {
                let a = self.descriptor()?;
                self.expect(',')?;
                let b = self.descriptor()?;
                Descriptor::Tensor(Box::new(a), Box::new(b))
            }
            _ => {
                self.pos = start;
                return Err(self.err("unknown algebra"));
            }
        };
        self.expect(')')?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_dims() {
        for (s, dim) in [
            ("E(2)", 4u128),
            ("Mat(2)", 4),
            ("Mat(3;zeta)", 9),
            ("MatE(2,4)", 64),
            ("MpqE(1,1,2)", 8),
            ("MpqE(2,1,0)", 5),
            ("T(E(6),E(6))", 4096),
            ("T(Mat(2),T(E(1),E(2)))", 32),
        ] {
            let d: Descriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            assert_eq!(d.dim(), Some(dim), "{s}");
        }
        assert_eq!(
            parse_descriptor(" T( E(2) , Mat( 2 ; zeta ) ) ", None).unwrap().to_string(),
            "T(E(2),Mat(2;zeta))"
        );
        assert_eq!(Descriptor::Grassmann(64).dim(), Some(1 << 64));
    }

    #[test]
    fn placeholder() {
        assert_eq!(
            parse_descriptor("MpqE(1,1,n)", Some(6)).unwrap(),
            Descriptor::Mpq(1, 1, 6)
        );
        assert!(parse_descriptor("E(n)", None).is_err());
        let d = parse_descriptor("T(MatE(2,n),T(Mat(3),E(5)))", Some(4)).unwrap();
        assert_eq!(d.grassmann_counts(), vec![4, 5]);
    }

    #[test]
    fn conductors() {
        let c = |s: &str| s.parse::<Descriptor>().unwrap().conductor();
        assert_eq!(c("T(Mat(2;zeta),E(3))"), Ok(2));
        assert_eq!(c("Mat(3)"), Ok(1));
        assert_eq!(c("T(Mat(2;zeta),Mat(3;zeta))"), Err(Error::ConductorMismatch(2, 3)));
    }

    #[test]
    fn malformed() {
        for s in ["E(", "E(2", "F(2)", "Mat(0)", "Mat(2;z)", "MpqE(0,0,2)", "E(65)", "E(2)x", "T(E(1))"] {
            assert!(s.parse::<Descriptor>().is_err(), "{s}");
        }
    }
}
