//! Exact scalars: arbitrary-precision rationals and the cyclotomic fields
//! Q(ζ_k) = Q[t]/Φ_k(t).
//!
//! Every [`Scalar`] carries its conductor `k`. Arithmetic between scalars of
//! different conductors is refused (`try_*` methods) or panics (operator
//! impls); rational values are moved into a larger field explicitly with
//! [`Scalar::lift`].

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// An element of Q, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n`, `-n`, `p/q` and `-p/q` with decimal digits.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
        if !digits(num) {
            return Err(bad(0, "expected digits"));
        }
        let mut n: BigInt = num.parse().map_err(|_| bad(0, "bad integer"))?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            Some(d) if digits(d) => d.parse().map_err(|_| bad(num.len() + 1, "bad integer"))?,
            Some(_) => return Err(bad(num.len() + 1, "expected digits after '/'")),
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on a zero divisor; see [`Rational::checked_div`].
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

type PhiCache = Mutex<HashMap<u32, Arc<Vec<BigInt>>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact quotient of integer polynomials (coefficients low to high) by a
/// monic divisor.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact division");
    quot
}

fn phi_shared(k: u32) -> Arc<Vec<BigInt>> {
    assert!(k >= 1, "cyclotomic index must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&k) {
        return p.clone();
    }
    // t^k - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            num = div_exact_monic(&num, &phi_shared(d));
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(k, p.clone());
    p
}

/// The k-th cyclotomic polynomial Φ_k(t), coefficients from the constant term
/// upwards.
pub fn cyclotomic_poly(k: u32) -> Vec<BigInt> {
    phi_shared(k).as_ref().clone()
}

/// deg Φ_k = φ(k).
pub fn cyclotomic_degree(k: u32) -> usize {
    phi_shared(k).len() - 1
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Q used for inversion.

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] * &lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i - db + j] = &rem[i - db + j] - &t;
        }
        quot[i - db] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => &x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

// ---------------------------------------------------------------------------

/// An element of Q(ζ_k), stored as the residue of a polynomial in ζ_k of
/// degree below φ(k). Conductor 1 is plain Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    conductor: u32,
    coeffs: SmallVec<[Rational; 1]>,
}

/// The binary operation selector of [`Scalar::field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero(k: u32) -> Self {
        Scalar {
            conductor: k,
            coeffs: smallvec![Rational::zero(); cyclotomic_degree(k)],
        }
    }

    pub fn one(k: u32) -> Self {
        Self::in_field(k, Rational::one())
    }

    /// A rational constant viewed in Q(ζ_k).
    pub fn in_field(k: u32, r: Rational) -> Self {
        let mut s = Self::zero(k);
        s.coeffs[0] = r;
        s
    }

    pub fn rational(r: Rational) -> Self {
        Scalar {
            conductor: 1,
            coeffs: smallvec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    /// Builds a residue from arbitrary coefficients (low to high), reducing
    /// modulo Φ_k.
    pub fn from_coeffs(k: u32, coeffs: Vec<Rational>) -> Self {
        reduce(k, coeffs)
    }

    /// ζ_k, the residue of t modulo Φ_k.
    pub fn primitive_root(k: u32) -> Self {
        reduce(k, vec![Rational::zero(), Rational::one()])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational number, when it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Moves the value into Q(ζ_k). Only rational values or values already
    /// over conductor `k` can be lifted.
    pub fn lift(&self, k: u32) -> Result<Scalar> {
        if self.conductor == k {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(r) => Ok(Scalar::in_field(k, r.clone())),
            None => Err(Error::ConductorMismatch(self.conductor, k)),
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn field_arith(a: &Scalar, b: &Scalar, op: FieldOp) -> Result<Scalar> {
        match op {
            FieldOp::Add => a.try_add(b),
            FieldOp::Sub => a.try_sub(b),
            FieldOp::Mul => a.try_mul(b),
            FieldOp::Div => a.try_div(b),
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn neg_ref(&self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        if self.coeffs.len() == 1 {
            return Scalar {
                conductor: self.conductor,
                coeffs: smallvec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        reduce(self.conductor, poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against Φ_k.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Scalar::in_field(self.conductor, r.inv()?));
        }
        let phi: Vec<Rational> = phi_shared(self.conductor)
            .iter()
            .map(|c| Rational(BigRational::from_integer(c.clone())))
            .collect();
        let mut a = self.coeffs.to_vec();
        trim(&mut a);
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_k is irreducible, so the gcd r0 is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let u: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(reduce(self.conductor, u))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `Some((negated, j))` when the value is `±ζ_k^j` with `0 <= j < k`.
    pub fn as_root_of_unity(&self) -> Option<(bool, u32)> {
        let z = Scalar::primitive_root(self.conductor);
        let minus = self.neg_ref();
        let mut powers = Vec::with_capacity(self.conductor as usize);
        let mut p = Scalar::one(self.conductor);
        for _ in 0..self.conductor {
            powers.push(p.clone());
            p = p.mul_unchecked(&z);
        }
        if let Some(j) = powers.iter().position(|p| p == self) {
            return Some((false, j as u32));
        }
        powers
            .iter()
            .position(|p| *p == minus)
            .map(|j| (true, j as u32))
    }
}

fn reduce(k: u32, mut p: Vec<Rational>) -> Scalar {
    let phi = phi_shared(k);
    let d = phi.len() - 1;
    if p.len() > d {
        for i in (d..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = p[i].clone();
            for (j, pj) in phi.iter().enumerate() {
                if pj.is_zero() {
                    continue;
                }
                let t = &c * &Rational(BigRational::from_integer(pj.clone()));
                p[i - d + j] = &p[i - d + j] - &t;
            }
        }
    }
    p.resize(d, Rational::zero());
    Scalar {
        conductor: k,
        coeffs: p.into_iter().collect(),
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, mono: &str) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if mono.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{a}*{mono}")
    }
}

/// Writes `a*u - b*v + …` with rational magnitudes pulled out of the signs;
/// an empty label stands for the unit and `0` is printed for no terms.
pub(crate) fn write_combination<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a Scalar)>,
{
    let mut first = true;
    for (label, c) in terms {
        let (neg, mag) = match c.as_rational() {
            Some(r) => (r.is_negative(), Some(r.abs())),
            None => (false, None),
        };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        match mag {
            Some(m) if label.is_empty() => write!(f, "{m}")?,
            Some(m) if m.is_one() => write!(f, "{label}")?,
            Some(m) => write!(f, "{m}*{label}")?,
            None if label.is_empty() => write!(f, "({c})")?,
            None => write!(f, "({c})*{label}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    /// Rationals print as `p/q`; other values as polynomials in `z` = ζ_k.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            write_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "{self}")
        } else {
            write!(f, "{self} [Q(z_{})]", self.conductor)
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics on a conductor mismatch.
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(s) => s,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&Rational::new(1, 2) + &Rational::new(1, 3), Rational::new(5, 6));
    }

    #[test]
    fn rational_literals() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("-4".parse::<Rational>().unwrap(), Rational::from_integer(-4));
        assert_eq!(Rational::new(2, -4).to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1/".parse::<Rational>().is_err());
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_products() {
        let z2 = Scalar::primitive_root(2);
        assert_eq!(z2.as_rational(), Some(&Rational::from_integer(-1)));
        assert!((&z2 * &z2).is_one());
        let z4 = Scalar::primitive_root(4);
        assert_eq!(&z4 * &z4, -Scalar::one(4));
        let z3 = Scalar::primitive_root(3);
        let s = &(&(&z3 * &z3) + &z3) + &Scalar::one(3);
        assert!(s.is_zero());
    }

    #[test]
    fn primitive_root_has_exact_order() {
        for k in 1..=12u32 {
            let z = Scalar::primitive_root(k);
            assert!(z.pow(k as u64).is_one(), "k = {k}");
            for j in 1..k {
                assert!(!z.pow(j as u64).is_one(), "k = {k}, j = {j}");
            }
        }
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let a = Scalar::primitive_root(3);
        let b = Scalar::primitive_root(4);
        assert_eq!(a.try_add(&b), Err(Error::ConductorMismatch(3, 4)));
        assert_eq!(
            Scalar::from_int(1).try_div(&Scalar::zero(1)),
            Err(Error::DivisionByZero)
        );
        assert!(a.lift(4).is_err());
        assert_eq!(Scalar::from_int(2).lift(4).unwrap(), Scalar::in_field(4, 2.into()));
    }

    #[test]
    fn root_of_unity_detection() {
        let z = Scalar::primitive_root(6);
        assert_eq!(z.pow(4).as_root_of_unity(), Some((false, 4)));
        assert_eq!((-z.pow(2)).as_root_of_unity(), Some((false, 5)));
        assert_eq!(Scalar::from_int(-1).as_root_of_unity(), Some((true, 0)));
        assert_eq!(Scalar::in_field(6, 2.into()).as_root_of_unity(), None);
    }

    #[test]
    fn display_forms() {
        let z = Scalar::primitive_root(3);
        assert_eq!(z.to_string(), "z");
        assert_eq!((&z * &z).to_string(), "-1 - z");
        assert_eq!(Scalar::rational(Rational::new(-3, 4)).to_string(), "-3/4");
    }

    fn scalar_strategy(k: u32) -> impl Strategy<Value = Scalar> {
        let d = cyclotomic_degree(k);
        prop::collection::vec((-6i64..=6, 1i64..=4), d)
            .prop_map(move |v| {
                Scalar::from_coeffs(k, v.into_iter().map(|(n, q)| Rational::new(n, q)).collect())
            })
    }

    fn field_cases() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        prop_oneof![Just(1u32), Just(2), Just(3), Just(4), Just(6)].prop_flat_map(|k| {
            (scalar_strategy(k), scalar_strategy(k), scalar_strategy(k))
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in field_cases()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
                prop_assert_eq!(&(&b / &a) * &a, b.clone());
            }
            prop_assert!((&a - &a).is_zero());
        }
    }
}
