//! Multilinear polynomials modulo the T-ideal of [x1,x2,x3].
//!
//! Every multilinear f is congruent to a combination of
//! x_{i_1}⋯x_{i_{m−2p}}[x_{j_1},x_{j_2}]⋯[x_{j_{2p−1}},x_{j_{2p}}] with
//! i_1 < … < i_{m−2p}, j_1 < … < j_{2p}. Rewriting rules:
//! - R1: commutators are central, u[v,w] = [v,w]u;
//! - R2: [u,v] = −[v,u];
//! - R3: [u,v][w,z] = −[u,w][v,z];
//! - R4: x_a x_b = x_b x_a + [x_a,x_b].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{Poly, Word};
use crate::grassmann::{Blade, GrassmannElement};
use crate::perm;

/// Commutator index set J, ordered by size, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Subset(pub Vec<u32>);

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    /// Variables of f in increasing order.
    pub vars: Vec<u32>,
    pub conductor: u32,
    /// β_J for nonzero coefficients; the prefix is vars \ J.
    pub coeffs: BTreeMap<Subset, Scalar>,
}

impl CanonicalForm {
    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// x_I [x_{j1},x_{j2}]⋯ for one index set.
    pub fn basis_poly(vars: &[u32], j: &Subset, conductor: u32) -> Poly {
        let one = Scalar::one(conductor);
        let prefix: Vec<u32> = vars.iter().copied().filter(|v| !j.0.contains(v)).collect();
        let mut p = Poly::monomial(Word(prefix), one.clone());
        for pair in j.0.chunks(2) {
            let x = Poly::monomial(Word(vec![pair[0]]), one.clone());
            let y = Poly::monomial(Word(vec![pair[1]]), one.clone());
            p = p
                .try_mul(&x.try_commutator(&y).expect("same field"))
                .expect("same field");
        }
        p
    }

    /// Σ_J β_J x_I [x_{j1},x_{j2}]⋯ as a polynomial.
    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero_in(self.conductor);
        for (j, c) in &self.coeffs {
            let term = Self::basis_poly(&self.vars, j, self.conductor)
                .scale(c)
                .expect("same field");
            out = out.try_add(&term).expect("same field");
        }
        out
    }

    /// All 2^{m−1} index sets J (even size) for the given variables, in key order.
    pub fn basis(vars: &[u32]) -> Vec<Subset> {
        let m = vars.len();
        let mut out: Vec<Subset> = (0u64..1 << m)
            .filter(|mask| mask.count_ones() % 2 == 0)
            .map(|mask| {
                Subset(
                    (0..m)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| vars[b])
                        .collect(),
                )
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for CanonicalForm {
    /// One `(J, β)` pair per line; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self
            .coeffs
            .iter()
            .map(|(j, c)| format!("({j}, {c})"))
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// Order in which R4 picks adjacent inversions and how commutator products
/// are normalized; both must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    /// Leftmost inversion first; commutators sorted by adjacent swaps (R2, R3).
    LeftmostFirst,
    /// Rightmost inversion first; commutators normalized by the sign of the
    /// sorting permutation.
    RightmostFirst,
}

/// (prefix length, prefix inversions, prefix, commutator pairs): R4 only ever
/// lowers this key, so popping the largest key merges equal terms before
/// they are expanded.
type Term = (usize, usize, Vec<u32>, Vec<(u32, u32)>);

fn term(prefix: Vec<u32>, comms: Vec<(u32, u32)>) -> Term {
    let inv = (0..prefix.len())
        .flat_map(|a| (a + 1..prefix.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| prefix[a] > prefix[b])
        .count();
    (prefix.len(), inv, prefix, comms)
}

pub fn canonical_form(f: &Poly) -> Result<CanonicalForm> {
    canonical_form_with(f, RewriteOrder::LeftmostFirst)
}

pub fn canonical_form_with(f: &Poly, order: RewriteOrder) -> Result<CanonicalForm> {
    let vars = f.is_multilinear().ok_or(Error::NotMultilinear)?;
    let k = f.conductor();
    let mut work: BTreeMap<Term, Scalar> = f
        .terms()
        .iter()
        .map(|(w, c)| (term(w.0.clone(), Vec::new()), c.clone()))
        .collect();
    let mut coeffs: BTreeMap<Subset, Scalar> = BTreeMap::new();
    let add = |map: &mut BTreeMap<Term, Scalar>, key: Term, c: Scalar| {
        let e = map.entry(key).or_insert_with(|| Scalar::zero(k));
        *e = &*e + &c;
    };
    while let Some(((_, _, prefix, comms), c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        let inversions: Vec<usize> = (0..prefix.len().saturating_sub(1))
            .filter(|&t| prefix[t] > prefix[t + 1])
            .collect();
        let pick = match order {
            RewriteOrder::LeftmostFirst => inversions.first(),
            RewriteOrder::RightmostFirst => inversions.last(),
        };
        match pick {
            Some(&t) => {
                let (a, b) = (prefix[t], prefix[t + 1]);
                let mut swapped = prefix.clone();
                swapped.swap(t, t + 1);
                add(&mut work, term(swapped, comms.clone()), c.clone());
                let mut shorter = prefix;
                shorter.drain(t..t + 2);
                let mut more = comms;
                more.push((a, b));
                add(&mut work, term(shorter, more), c);
            }
            None => {
                let (sign, j) = match order {
                    RewriteOrder::LeftmostFirst => normalize_by_swaps(&comms),
                    RewriteOrder::RightmostFirst => normalize_by_sign(&comms),
                };
                let c = if sign < 0 { -c } else { c };
                let e = coeffs.entry(Subset(j)).or_insert_with(|| Scalar::zero(k));
                *e = &*e + &c;
            }
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(CanonicalForm {
        vars,
        conductor: k,
        coeffs,
    })
}

/// R2 on each pair, then bubble sort of the flattened sequence: a swap inside
/// a pair is R2, a swap across neighbouring pairs is R3; each costs a sign.
fn normalize_by_swaps(comms: &[(u32, u32)]) -> (i8, Vec<u32>) {
    let mut sign = 1i8;
    let mut flat: Vec<u32> = Vec::with_capacity(2 * comms.len());
    for &(a, b) in comms {
        if a > b {
            sign = -sign;
            flat.extend([b, a]);
        } else {
            flat.extend([a, b]);
        }
    }
    let n = flat.len();
    for pass in 0..n {
        for t in 0..n.saturating_sub(1 + pass) {
            if flat[t] > flat[t + 1] {
                flat.swap(t, t + 1);
                sign = -sign;
            }
        }
    }
    (sign, flat)
}

fn normalize_by_sign(comms: &[(u32, u32)]) -> (i8, Vec<u32>) {
    let flat: Vec<u32> = comms.iter().flat_map(|&(a, b)| [a, b]).collect();
    let sign = perm::sign(&flat);
    let mut sorted = flat;
    sorted.sort_unstable();
    (sign, sorted)
}

/// True iff f lies in the T-ideal of [x1,x2,x3], i.e. f is an identity of E.
pub fn identity_of_e(f: &Poly) -> Result<bool> {
    Ok(canonical_form(f)?.is_zero())
}

/// A substitution into E(2m−2p) making f a nonzero central value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub substitution: BTreeMap<u32, GrassmannElement>,
    pub value: GrassmannElement,
    /// Half the size of the chosen index set J.
    pub p: usize,
    pub j: Subset,
}

impl fmt::Display for Witness {
    /// `x3 <- e5*e6` lines followed by the value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, x) in &self.substitution {
            let factors: Vec<String> = x
                .terms()
                .keys()
                .flat_map(|b| b.indices())
                .map(|i| format!("e{i}"))
                .collect();
            writeln!(f, "x{v} <- {}", factors.join("*"))?;
        }
        write!(f, "value = {}", self.value)
    }
}

/// f at a substitution of Grassmann elements over E(n).
pub fn evaluate_in_grassmann(
    f: &Poly,
    n: u32,
    subst: &BTreeMap<u32, GrassmannElement>,
) -> Result<GrassmannElement> {
    let mut out = GrassmannElement::zero(n);
    for (w, c) in f.terms() {
        let mut val = GrassmannElement::unit(n).scale(&Scalar::one(c.conductor()).try_mul(c)?)?;
        for v in w.letters() {
            let x = subst.get(v).ok_or(Error::MissingVariable(*v))?;
            val = val.g_mul(x)?;
        }
        out = out.try_add(&val)?;
    }
    Ok(out)
}

/// Minimal p with β_J ≠ 0, least J among those; prefix variables (increasing)
/// get e_{2t−1}e_{2t}, the commutator variables j_u get e_{2(m−2p)+u}.
pub fn grassmann_witness(f: &Poly) -> Result<Witness> {
    let cf = canonical_form(f)?;
    let (j, _) = cf.coeffs.iter().next().ok_or(Error::ZeroCanonicalForm)?;
    let m = cf.vars.len() as u32;
    let p = j.0.len() / 2;
    let n = 2 * m - 2 * p as u32;
    let k = f.conductor();
    let one = Scalar::one(k);
    let mut subst = BTreeMap::new();
    let prefix: Vec<u32> = cf.vars.iter().copied().filter(|v| !j.0.contains(v)).collect();
    for (t, v) in prefix.iter().enumerate() {
        let t = t as u32 + 1;
        subst.insert(
            *v,
            GrassmannElement::blade(n, Blade::from_indices(&[2 * t - 1, 2 * t]), one.clone()),
        );
    }
    let base = 2 * prefix.len() as u32;
    for (u, v) in j.0.iter().enumerate() {
        subst.insert(
            *v,
            GrassmannElement::blade(n, Blade::generator(base + u as u32 + 1), one.clone()),
        );
    }
    let value = evaluate_in_grassmann(f, n, &subst)?;
    debug_assert!(!value.is_zero() && value.is_central());
    Ok(Witness {
        substitution: subst,
        value,
        p,
        j: j.clone(),
    })
}
