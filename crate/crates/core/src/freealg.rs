//! The free associative algebra F⟨x1, x2, …⟩: words, polynomials, the text
//! grammar, multihomogeneous components and full multilinearization.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::coeff::{write_combination, Rational, Scalar};
use crate::error::{Error, Result};
use crate::perm::permutations;

/// A noncommutative monomial: the sequence of variable indices, `x_i ↦ i`.
/// The empty word is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn multidegree(&self) -> MultiDegree {
        let mut d = BTreeMap::new();
        for &x in &self.0 {
            *d.entry(x).or_insert(0) += 1;
        }
        MultiDegree(d)
    }
}

/// Length first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree in each variable; only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct MultiDegree(pub BTreeMap<u32, u32>);

impl MultiDegree {
    pub fn get(&self, var: u32) -> u32 {
        self.0.get(&var).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }
}

impl fmt::Display for MultiDegree {
    /// Positional vector over x1..x_max, e.g. `(2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.0.keys().next_back().copied().unwrap_or(0);
        write!(f, "(")?;
        for i in 1..=max {
            if i > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, ")")
    }
}

/// A finitely supported combination of words with coefficients in Q(ζ_k).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    conductor: u32,
    terms: BTreeMap<Word, Scalar>,
}

/// Selector for [`Poly::poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Commutator,
}

impl Poly {
    pub fn zero() -> Self {
        Self::zero_in(1)
    }

    pub fn zero_in(conductor: u32) -> Self {
        Poly {
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn var(i: u32) -> Self {
        Self::monomial(Word(vec![i]), Scalar::from_int(1))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero_in(c.conductor());
        p.add_term(w, c);
        p
    }

    /// Collects terms over conductor `k`, summing repeated words.
    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(k: u32, terms: I) -> Result<Self> {
        let mut p = Self::zero_in(k);
        for (w, c) in terms {
            if c.conductor() != k {
                return Err(Error::ConductorMismatch(c.conductor(), k));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
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

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).collect()
    }

    /// deg_{x_i}(f).
    pub fn degree_in(&self, var: u32) -> usize {
        self.terms
            .keys()
            .map(|w| w.0.iter().filter(|&&x| x == var).count())
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// The same polynomial over Q(ζ_k); coefficients must be rational unless
    /// already over conductor `k`.
    pub fn lift(&self, k: u32) -> Result<Poly> {
        if k == self.conductor {
            return Ok(self.clone());
        }
        let mut out = Poly::zero_in(k);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.lift(k)?);
        }
        Ok(out)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = Poly::zero_in(self.conductor);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// fg − gf.
    pub fn try_commutator(&self, other: &Poly) -> Result<Poly> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn poly_arith(f: &Poly, g: &Poly, op: PolyOp) -> Result<Poly> {
        match op {
            PolyOp::Add => f.try_add(g),
            PolyOp::Sub => f.try_sub(g),
            PolyOp::Mul => f.try_mul(g),
            PolyOp::Commutator => f.try_commutator(g),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        let mut out = Poly::zero_in(self.conductor);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.try_mul(c)?);
        }
        Ok(out)
    }

    /// Substitutes variables by variables (not necessarily injectively).
    /// Letters missing from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<u32, u32>) -> Poly {
        let mut out = Poly::zero_in(self.conductor);
        for (w, c) in &self.terms {
            let nw = Word(w.0.iter().map(|x| *map.get(x).unwrap_or(x)).collect());
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Partition of the terms by multidegree, by increasing total degree.
    pub fn multihomogeneous_components(&self) -> Vec<(MultiDegree, Poly)> {
        let mut parts: BTreeMap<MultiDegree, Poly> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.multidegree())
                .or_insert_with(|| Poly::zero_in(self.conductor))
                .terms
                .insert(w.clone(), c.clone());
        }
        let mut out: Vec<(MultiDegree, Poly)> = parts.into_iter().collect();
        out.sort_by_key(|(d, _)| d.total());
        out
    }

    /// The common multidegree when `self` is multihomogeneous and nonzero.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut it = self.terms.keys().map(Word::multidegree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The ordered variable list when every word uses the same variables,
    /// each exactly once. The zero polynomial is multilinear in no variables.
    pub fn is_multilinear(&self) -> Option<Vec<u32>> {
        let mut vars: Option<Vec<u32>> = None;
        for w in self.terms.keys() {
            let mut s = w.0.clone();
            s.sort_unstable();
            if s.windows(2).any(|p| p[0] == p[1]) {
                return None;
            }
            match &vars {
                None => vars = Some(s),
                Some(v) if *v == s => {}
                Some(_) => return None,
            }
        }
        Some(vars.unwrap_or_default())
    }

    /// Full multilinearization of a multihomogeneous polynomial. Each
    /// variable of degree d is replaced by d fresh variables numbered
    /// consecutively from `fresh_start` (variables taken in increasing order).
    pub fn multilinearize(&self, fresh_start: u32) -> Result<Linearization> {
        let Some(deg) = self.multidegree() else {
            if self.is_zero() {
                return Ok(Linearization {
                    poly: self.clone(),
                    origin: BTreeMap::new(),
                });
            }
            return Err(Error::NotMultihomogeneous);
        };
        let mut fresh: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        let mut origin = BTreeMap::new();
        let mut next = fresh_start;
        for (&var, &d) in &deg.0 {
            let ids: Vec<u32> = (next..next + d).collect();
            for &y in &ids {
                origin.insert(y, var);
            }
            next += d;
            fresh.insert(var, ids);
        }
        // Assignments of fresh variables to the occurrences of each variable.
        let choices: BTreeMap<u32, Vec<Vec<u32>>> = fresh
            .iter()
            .map(|(&var, ids)| {
                let perms = permutations(ids.len())
                    .into_iter()
                    .map(|p| p.into_iter().map(|i| ids[i]).collect())
                    .collect();
                (var, perms)
            })
            .collect();
        let vars: Vec<u32> = fresh.keys().copied().collect();
        let mut out = Poly::zero_in(self.conductor);
        for (w, c) in &self.terms {
            let mut pick = vec![0usize; vars.len()];
            loop {
                let mut used = vec![0usize; vars.len()];
                let nw: Vec<u32> = w
                    .0
                    .iter()
                    .map(|x| {
                        let vi = vars.binary_search(x).unwrap();
                        let y = choices[x][pick[vi]][used[vi]];
                        used[vi] += 1;
                        y
                    })
                    .collect();
                out.add_term(Word(nw), c.clone());
                // odometer over the per-variable permutation choices
                let mut i = 0;
                loop {
                    if i == vars.len() {
                        break;
                    }
                    pick[i] += 1;
                    if pick[i] < choices[&vars[i]].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == vars.len() {
                    break;
                }
            }
        }
        Ok(Linearization { poly: out, origin })
    }

    /// f·g for polynomials in disjoint sets of variables.
    pub fn disjoint_product(&self, other: &Poly) -> Result<Poly> {
        let shared: Vec<u32> = self
            .variables()
            .intersection(&other.variables())
            .copied()
            .collect();
        if !shared.is_empty() {
            return Err(Error::SharedVariables(shared));
        }
        self.try_mul(other)
    }

    /// The multilinear basis P_m over the given variables: all orderings, in
    /// lexicographic order of the permutation.
    pub fn multilinear_words(vars: &[u32]) -> Vec<Word> {
        permutations(vars.len())
            .into_iter()
            .map(|p| Word(p.into_iter().map(|i| vars[i]).collect()))
            .collect()
    }
}

/// Result of [`Poly::multilinearize`]: the linearized polynomial and, for each
/// fresh variable, the variable it replaced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    pub poly: Poly,
    pub origin: BTreeMap<u32, u32>,
}

impl Linearization {
    /// Substitutes every fresh variable back by its origin.
    pub fn collapse(&self) -> Poly {
        self.poly.rename(&self.origin)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            /// Panics on a conductor mismatch.
            fn $method(self, rhs: &Poly) -> Poly {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    /// Terms in length-then-lex order, e.g. `x1*x2 - 1/2*x2*x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |w: &Word| if w.is_empty() { String::new() } else { w.to_string() };
        write_combination(f, self.terms.iter().map(|(w, c)| (label(w), c)))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Parsing
//
//   poly     := ["+"|"-"] term (("+"|"-") term)*
//   term     := item ("*" item)*
//   item     := rational | var | "[" poly ("," poly)+ "]" | "(" poly ")"
//   var      := "x" digits
//   rational := digits ["/" digits]

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn poly(&mut self) -> Result<Poly> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if neg { -&first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.item()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.item()?;
        }
        Ok(acc)
    }

    fn item(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.digits();
                let mut text = num.to_string();
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return self.err("expected digits after '/'");
                    }
                    text = format!("{num}/{den}");
                }
                let r: Rational = text.parse().map_err(|e| match e {
                    Error::DivisionByZero => Error::Parse {
                        position: start,
                        message: "zero denominator".into(),
                    },
                    other => other,
                })?;
                Ok(Poly::constant(Scalar::rational(r)))
            }
            Some(b'x') => {
                self.pos += 1;
                let d = self.digits();
                if d.is_empty() {
                    return self.err("expected variable index after 'x'");
                }
                match d.parse::<u32>() {
                    Ok(i) if i >= 1 => Ok(Poly::var(i)),
                    _ => self.err("variable index must be a positive integer"),
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let mut acc = self.poly()?;
                let mut count = 1;
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    let next = self.poly()?;
                    acc = acc.try_commutator(&next)?;
                    count += 1;
                }
                if count < 2 {
                    return self.err("commutator needs at least two entries");
                }
                if self.peek() != Some(b']') {
                    return self.err("expected ']'");
                }
                self.pos += 1;
                Ok(acc)
            }
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the polynomial grammar; commutators are left-normed,
/// `[a,b,c] = [[a,b],c]`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let f = p.poly()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

pub fn format_poly(f: &Poly) -> String {
    f.to_string()
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
