//! The Grassmann algebra E(n) on anticommuting generators e_1, …, e_n.
//!
//! Basis monomials are bitmask blades: bit `i - 1` set means e_i occurs.
//! Products of blades follow e_i e_j = −e_j e_i and e_i e_i = 0.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{write_combination, Scalar};
use crate::error::{Error, Result};

/// Largest supported generator count (one bit per generator).
pub const MAX_GENERATORS: u32 = 64;

/// e_{i1}…e_{ik} with i1 < … < ik, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(pub u64);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    /// The generator e_i (1-based).
    pub fn generator(i: u32) -> Blade {
        assert!((1..=MAX_GENERATORS).contains(&i), "generator index out of range");
        Blade(1u64 << (i - 1))
    }

    pub fn from_indices(idx: &[u32]) -> Blade {
        Blade(idx.iter().fold(0, |m, &i| m | Blade::generator(i).0))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn indices(self) -> Vec<u32> {
        (0..64).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Highest generator index present, 0 for the unit.
    pub fn top(self) -> u32 {
        64 - self.0.leading_zeros()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// S·T: `None` when the supports meet, otherwise the sign
/// (−1)^{#{(s,t) ∈ S×T : s > t}} and the union.
#[inline]
pub fn blade_product(s: Blade, t: Blade) -> Option<(i8, Blade)> {
    if s.0 & t.0 != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = t.0;
    while rest != 0 {
        let b = rest.trailing_zeros();
        // generators of S above this generator of T
        inversions += (s.0 >> b).count_ones();
        rest &= rest - 1;
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, Blade(s.0 | t.0)))
}

/// An element of E(n).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    n: u32,
    terms: BTreeMap<Blade, Scalar>,
}

impl GrassmannElement {
    pub fn zero(n: u32) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        GrassmannElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: u32) -> Self {
        Self::blade(n, Blade::UNIT, Scalar::from_int(1))
    }

    pub fn generator(n: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= n, "generator e{i} outside E({n})");
        Self::blade(n, Blade::generator(i), Scalar::from_int(1))
    }

    pub fn blade(n: u32, b: Blade, c: Scalar) -> Self {
        let mut e = Self::zero(n);
        e.add_term(b, c);
        e
    }

    /// Builds an element from terms; every blade must lie in E(n).
    pub fn from_terms<I: IntoIterator<Item = (Blade, Scalar)>>(n: u32, terms: I) -> Result<Self> {
        let mut e = Self::zero(n);
        for (b, c) in terms {
            if b.top() > n {
                return Err(Error::GeneratorMismatch(b.top(), n));
            }
            e.add_term(b, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, b: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn generators(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (b, a) in &self.terms {
            out.add_term(*b, a.try_mul(c)?);
        }
        Ok(out)
    }

    /// Bilinear extension of [`blade_product`].
    pub fn g_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if let Some((sign, u)) = blade_product(*s, *t) {
                    let c = a.try_mul(b)?;
                    out.add_term(u, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.g_mul(other)?.try_sub(&other.g_mul(self)?)
    }

    /// (even part, odd part).
    pub fn graded_components(&self) -> (Self, Self) {
        let mut even = Self::zero(self.n);
        let mut odd = Self::zero(self.n);
        for (b, c) in &self.terms {
            let part = if b.is_even() { &mut even } else { &mut odd };
            part.terms.insert(*b, c.clone());
        }
        (even, odd)
    }

    /// Membership in Z(E) = E_0: the odd component vanishes.
    pub fn is_central(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }
}

impl fmt::Display for GrassmannElement {
    /// `e1e2 + 2*e3`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |b: &Blade| if b.0 == 0 { String::new() } else { b.to_string() };
        write_combination(f, self.terms.iter().map(|(b, c)| (label(b), c)))
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
