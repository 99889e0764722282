//! Polynomial identities and central polynomials of finite-dimensional
//! algebras, tested by substituting basis tuples.
//!
//! A multilinear polynomial is an identity (central) iff it vanishes (takes
//! central values) on every tuple of basis elements. Other polynomials are
//! reduced to the full linearizations of their multihomogeneous components.
//! Spaces of such polynomials in P_m are computed exactly as nullspaces of
//! the constraint rows produced by basis tuples.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use num_traits::One;
use smallvec::SmallVec;

use crate::algebra::{Algebra, Assignment, Element, TupleSpace};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{Poly, Word};
use crate::linalg::{dense_from_sparse, sparse_from_dense, Echelon, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    /// f·g central.
    #[default]
    Central,
    /// f·g an identity.
    Identity,
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanMode::Central => "central",
            ScanMode::Identity => "identity",
        })
    }
}

/// Which basis tuples a scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TupleScan {
    /// One tuple per automorphism orbit (see [`Algebra::orbit_tuples`]).
    #[default]
    Orbits,
    /// Every tuple, in lexicographic order.
    Full,
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Largest degree of the polynomial spaces P_m.
    pub max_degree: usize,
    /// Largest number of basis tuples in one scan.
    pub max_tuples: u128,
    pub tuples: TupleScan,
    /// Random tuples fed before the verification pass of a product scan.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_degree: 4,
            max_tuples: 100_000_000,
            tuples: TupleScan::Orbits,
            samples: 256,
            seed: 0,
        }
    }
}

impl ScanConfig {
    fn space(&self, alg: &Algebra, arity: usize) -> Result<TupleSpace> {
        let count = tuple_count(alg, arity, self.tuples);
        if count > self.max_tuples {
            return Err(Error::TooManyTuples {
                count,
                cap: self.max_tuples,
            });
        }
        Ok(match self.tuples {
            TupleScan::Orbits => alg.orbit_tuples(arity),
            TupleScan::Full => TupleSpace::full(alg.dim(), arity).expect("count checked"),
        })
    }

    fn check_degree(&self, m: usize) -> Result<()> {
        if m > self.max_degree {
            Err(Error::DegreeCap {
                degree: m,
                cap: self.max_degree,
            })
        } else {
            Ok(())
        }
    }
}

/// Number of basis tuples a scan of the given arity visits.
pub fn tuple_count(alg: &Algebra, arity: usize, scan: TupleScan) -> u128 {
    match scan {
        TupleScan::Full => (0..arity).fold(1u128, |acc, _| acc.saturating_mul(alg.dim() as u128)),
        TupleScan::Orbits => alg.orbit_tuples(arity).len() as u128,
    }
}

/// A basis tuple on which a multilinear polynomial misbehaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The multilinear polynomial that was evaluated (a linearization when
    /// the input was not multilinear).
    pub poly: Poly,
    /// Variable ↦ basis index.
    pub assignment: Vec<(u32, usize)>,
    pub value: Element,
}

impl Counterexample {
    pub fn assignment_elements(&self, alg: &Algebra) -> Assignment {
        self.assignment
            .iter()
            .map(|&(v, i)| (v, alg.basis_element(i)))
            .collect()
    }

    /// `x1 <- e1, x2 <- e2`.
    pub fn describe(&self, alg: &Algebra) -> String {
        self.assignment
            .iter()
            .map(|&(v, i)| format!("x{v} <- {}", alg.label(i)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralClass {
    Identity,
    /// Central and not an identity; carries a nonzero value.
    ProperCentral(Counterexample),
    /// Carries a non-central value.
    NonCentral(Counterexample),
}

impl CentralClass {
    pub fn name(&self) -> &'static str {
        match self {
            CentralClass::Identity => "identity",
            CentralClass::ProperCentral(_) => "proper-central",
            CentralClass::NonCentral(_) => "non-central",
        }
    }
}

type IntVal = SmallVec<[(usize, i128); 8]>;

/// Evaluation context: the algebra with integer copies of the unit and the
/// generators when those have integral coordinates.
struct Ctx<'a> {
    alg: &'a Algebra,
    unit_int: Option<IntVal>,
    gens_int: Option<Vec<IntVal>>,
}

fn as_int(x: &Element) -> Option<IntVal> {
    x.coords()
        .iter()
        .map(|(i, c)| {
            let r = c.as_rational()?;
            if !r.denom().is_one() {
                return None;
            }
            i128::try_from(r.numer()).ok().map(|n| (*i, n))
        })
        .collect()
}

impl<'a> Ctx<'a> {
    fn new(alg: &'a Algebra) -> Self {
        Ctx {
            alg,
            unit_int: as_int(alg.unit()),
            gens_int: alg.generators().iter().map(as_int).collect(),
        }
    }
}

#[inline]
fn word_at(alg: &Algebra, word: &[usize], tuple: &[usize]) -> Option<(i8, usize)> {
    let (&first, rest) = word.split_first()?;
    let mut sign = 1i8;
    let mut idx = tuple[first];
    for &p in rest {
        let (s, i) = alg.mul_basis(idx, tuple[p])?;
        sign *= s;
        idx = i;
    }
    Some((sign, idx))
}

#[inline]
fn int_add(v: &mut IntVal, i: usize, c: i128) {
    if let Some(e) = v.iter_mut().find(|e| e.0 == i) {
        e.1 += c;
    } else {
        v.push((i, c));
    }
}

/// A polynomial with words rewritten as positions in a tuple.
struct Compiled {
    words: Vec<Vec<usize>>,
    coeffs: Vec<Scalar>,
    ints: Option<Vec<i128>>,
}

impl Compiled {
    fn new(f: &Poly, vars: &[u32]) -> Compiled {
        let words = f
            .terms()
            .keys()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|v| vars.binary_search(v).expect("variable listed"))
                    .collect()
            })
            .collect();
        let coeffs: Vec<Scalar> = f.terms().values().cloned().collect();
        let ints = coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational()?;
                if !r.denom().is_one() {
                    return None;
                }
                i128::try_from(r.numer()).ok()
            })
            .collect();
        Compiled {
            words,
            coeffs,
            ints,
        }
    }

    fn value_int(&self, ctx: &Ctx, ints: &[i128], tuple: &[usize]) -> Option<IntVal> {
        let mut v = IntVal::new();
        for (w, c) in self.words.iter().zip(ints) {
            if w.is_empty() {
                for &(i, u) in ctx.unit_int.as_ref()? {
                    int_add(&mut v, i, c * u);
                }
            } else if let Some((s, i)) = word_at(ctx.alg, w, tuple) {
                int_add(&mut v, i, i128::from(s) * c);
            }
        }
        v.retain(|e| e.1 != 0);
        Some(v)
    }

    fn value(&self, ctx: &Ctx, tuple: &[usize]) -> Element {
        let mut out = Element::zero();
        for (w, c) in self.words.iter().zip(&self.coeffs) {
            if w.is_empty() {
                out = out.add(&ctx.alg.unit().scale(c));
            } else if let Some((s, i)) = word_at(ctx.alg, w, tuple) {
                out.add_term(i, if s > 0 { c.clone() } else { -c });
            }
        }
        out
    }

    /// (nonzero, central) at one tuple.
    fn probe(&self, ctx: &Ctx, tuple: &[usize], need_central: bool) -> (bool, bool) {
        if let (Some(ints), Some(gens)) = (&self.ints, &ctx.gens_int) {
            if let Some(v) = self.value_int(ctx, ints, tuple) {
                if v.is_empty() {
                    return (false, true);
                }
                if !need_central {
                    return (true, true);
                }
                let alg = ctx.alg;
                let central = gens.iter().all(|g| {
                    let mut acc = IntVal::new();
                    for &(i, c) in &v {
                        for &(j, d) in g {
                            if let Some((s, o)) = alg.mul_basis(i, j) {
                                int_add(&mut acc, o, i128::from(s) * c * d);
                            }
                            if let Some((s, o)) = alg.mul_basis(j, i) {
                                int_add(&mut acc, o, -i128::from(s) * c * d);
                            }
                        }
                    }
                    acc.iter().all(|e| e.1 == 0)
                });
                return (true, central);
            }
        }
        let v = self.value(ctx, tuple);
        if v.is_zero() {
            return (false, true);
        }
        (true, !need_central || ctx.alg.is_central(&v))
    }
}

/// Index of the first tuple satisfying `pred`, in scan order.
fn first_match<F>(space: &TupleSpace, pred: F) -> Option<usize>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let arity = space.arity();
    (0..space.len())
        .into_par_iter()
        .with_min_len(64)
        .map_init(
            || vec![0usize; arity],
            |buf, i| {
                space.fill(i, buf);
                pred(buf)
            },
        )
        .position_first(|hit| hit)
}

fn lift_to(f: &Poly, alg: &Algebra) -> Result<Poly> {
    if f.conductor() == alg.conductor() {
        Ok(f.clone())
    } else {
        f.lift(alg.conductor())
    }
}

/// Multilinear polynomials whose joint vanishing (centrality) is equivalent
/// to that of f: f itself, or the full linearizations of its components.
pub fn multilinear_parts(f: &Poly) -> Result<Vec<Poly>> {
    if f.is_zero() {
        return Ok(Vec::new());
    }
    if f.is_multilinear().is_some() {
        return Ok(vec![f.clone()]);
    }
    let fresh = f.variables().last().copied().unwrap_or(0) + 1;
    f.multihomogeneous_components()
        .into_iter()
        .map(|(_, part)| {
            if part.is_multilinear().is_some() {
                Ok(part)
            } else {
                Ok(part.multilinearize(fresh)?.poly)
            }
        })
        .collect()
}

/// First tuple where the multilinear f is nonzero (`need_central = false`) or
/// non-central (`true`), with the first nonzero tuple as a by-product.
fn scan_multilinear(
    alg: &Algebra,
    f: &Poly,
    need_central: bool,
    cfg: &ScanConfig,
) -> Result<(Option<Counterexample>, Option<Counterexample>)> {
    let vars = f.is_multilinear().ok_or(Error::NotMultilinear)?;
    let space = cfg.space(alg, vars.len())?;
    let ctx = Ctx::new(alg);
    let comp = Compiled::new(f, &vars);
    let witness = |idx: usize| {
        let t = space.get(idx);
        Counterexample {
            poly: f.clone(),
            assignment: vars.iter().copied().zip(t.iter().copied()).collect(),
            value: comp.value(&ctx, &t),
        }
    };
    let nonzero = first_match(&space, |t| comp.probe(&ctx, t, false).0).map(witness);
    if !need_central || nonzero.is_none() {
        return Ok((nonzero, None));
    }
    let noncentral = first_match(&space, |t| !comp.probe(&ctx, t, true).1).map(witness);
    Ok((nonzero, noncentral))
}

/// Whether f vanishes on A, with the first counterexample otherwise.
pub fn is_identity(f: &Poly, alg: &Algebra, cfg: &ScanConfig) -> Result<IdentityCheck> {
    let f = lift_to(f, alg)?;
    for part in multilinear_parts(&f)? {
        let (nonzero, _) = scan_multilinear(alg, &part, false, cfg)?;
        if nonzero.is_some() {
            return Ok(IdentityCheck {
                holds: false,
                counterexample: nonzero,
            });
        }
    }
    Ok(IdentityCheck {
        holds: true,
        counterexample: None,
    })
}

pub fn classify_central(f: &Poly, alg: &Algebra, cfg: &ScanConfig) -> Result<CentralClass> {
    let f = lift_to(f, alg)?;
    let mut proper = None;
    for part in multilinear_parts(&f)? {
        let (nonzero, noncentral) = scan_multilinear(alg, &part, true, cfg)?;
        if let Some(w) = noncentral {
            return Ok(CentralClass::NonCentral(w));
        }
        if proper.is_none() {
            proper = nonzero;
        }
    }
    Ok(match proper {
        Some(w) => CentralClass::ProperCentral(w),
        None => CentralClass::Identity,
    })
}

/// A subspace of the multilinear polynomials P_m in the given variables,
/// stored as coordinate vectors over `words` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpace {
    pub vars: Vec<u32>,
    pub words: Vec<Word>,
    pub conductor: u32,
    pub basis: Vec<Vec<Scalar>>,
}

impl PolySpace {
    fn from_vectors(vars: Vec<u32>, conductor: u32, vectors: &[SparseVec]) -> PolySpace {
        let words = Poly::multilinear_words(&vars);
        let mut ech = Echelon::new(words.len(), conductor);
        for v in vectors {
            ech.insert(v);
        }
        let basis = ech
            .rref()
            .iter()
            .map(|r| dense_from_sparse(r, words.len(), conductor))
            .collect();
        PolySpace {
            vars,
            words,
            conductor,
            basis,
        }
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// dim P_m = m!.
    pub fn ambient_dim(&self) -> usize {
        self.words.len()
    }

    pub fn poly(&self, v: &[Scalar]) -> Poly {
        Poly::from_terms(
            self.conductor,
            self.words.iter().cloned().zip(v.iter().cloned()),
        )
        .expect("coefficients live in the space's field")
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.basis.iter().map(|v| self.poly(v)).collect()
    }

    /// Coordinates of f over the words; f must be multilinear in `vars`.
    pub fn coordinates(&self, f: &Poly) -> Result<Vec<Scalar>> {
        let f = if f.conductor() == self.conductor {
            f.clone()
        } else {
            f.lift(self.conductor)?
        };
        if !f.is_zero() && f.is_multilinear().as_deref() != Some(&self.vars[..]) {
            return Err(Error::NotMultilinear);
        }
        Ok(self
            .words
            .iter()
            .map(|w| f.coeff(w).cloned().unwrap_or_else(|| Scalar::zero(self.conductor)))
            .collect())
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.words.len(), self.conductor);
        for v in &self.basis {
            e.insert_dense(v);
        }
        e
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.echelon().contains(&sparse_from_dense(&self.coordinates(f)?)))
    }

    pub fn lift(&self, k: u32) -> Result<PolySpace> {
        let basis = self
            .basis
            .iter()
            .map(|v| v.iter().map(|c| c.lift(k)).collect())
            .collect::<Result<_>>()?;
        Ok(PolySpace {
            vars: self.vars.clone(),
            words: self.words.clone(),
            conductor: k,
            basis,
        })
    }
}

/// Unknown coefficients α_u of Σ_u α_u w_u·g, each unknown as its list of
/// (positions of w_u followed by a word of g, coefficient of that word).
struct Family {
    unknowns: Vec<Vec<(Vec<usize>, Scalar)>>,
}

impl Family {
    fn new(words: &[Word], tail: Option<&Poly>, vars: &[u32], k: u32) -> Family {
        let pos = |w: &Word| -> Vec<usize> {
            w.letters()
                .iter()
                .map(|v| vars.binary_search(v).expect("variable listed"))
                .collect()
        };
        let one = Poly::constant(Scalar::one(k));
        let tail = tail.unwrap_or(&one);
        let unknowns = words
            .iter()
            .map(|w| {
                tail.terms()
                    .iter()
                    .map(|(t, c)| (pos(&w.concat(t)), c.clone()))
                    .collect()
            })
            .collect();
        Family { unknowns }
    }

    /// Constraint rows (over the unknowns) contributed by one tuple,
    /// normalized to leading coefficient 1.
    fn rows(&self, ctx: &Ctx, tuple: &[usize], mode: ScanMode) -> Vec<SparseVec> {
        let alg = ctx.alg;
        let mut acc: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for (u, terms) in self.unknowns.iter().enumerate() {
            let mut val = Element::zero();
            for (w, c) in terms {
                if w.is_empty() {
                    val = val.add(&alg.unit().scale(c));
                } else if let Some((s, i)) = word_at(alg, w, tuple) {
                    val.add_term(i, if s > 0 { c.clone() } else { -c });
                }
            }
            match mode {
                ScanMode::Identity => {
                    for (i, c) in val.coords() {
                        acc.entry((0, *i)).or_default().push((u, c.clone()));
                    }
                }
                ScanMode::Central => {
                    for (k, g) in alg.generators().iter().enumerate() {
                        for (i, c) in val.coords() {
                            for (j, d) in g.coords() {
                                let cd = c * d;
                                if let Some((s, o)) = alg.mul_basis(*i, *j) {
                                    let t = if s > 0 { cd.clone() } else { -&cd };
                                    acc.entry((k, o)).or_default().push((u, t));
                                }
                                if let Some((s, o)) = alg.mul_basis(*j, *i) {
                                    let t = if s > 0 { -cd } else { cd };
                                    acc.entry((k, o)).or_default().push((u, t));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut rows = Vec::new();
        for entries in acc.into_values() {
            let mut row: SparseVec = Vec::with_capacity(entries.len());
            for (u, c) in entries {
                match row.last_mut() {
                    Some((v, x)) if *v == u => *x = &*x + &c,
                    _ => row.push((u, c)),
                }
            }
            row.retain(|(_, c)| !c.is_zero());
            if let Some((_, lead)) = row.first() {
                let inv = lead.inv().expect("nonzero");
                rows.push(row.into_iter().map(|(u, c)| (u, &c * &inv)).collect());
            }
        }
        rows
    }
}

const BATCH: usize = 2048;

/// Echelon state fed by tuple constraint rows.
struct Solver<'a> {
    ctx: Ctx<'a>,
    family: Family,
    mode: ScanMode,
    ech: Echelon,
    seen: HashSet<SparseVec>,
}

impl<'a> Solver<'a> {
    fn new(alg: &'a Algebra, family: Family, mode: ScanMode) -> Self {
        let n = family.unknowns.len();
        Solver {
            ctx: Ctx::new(alg),
            family,
            mode,
            ech: Echelon::new(n, alg.conductor()),
            seen: HashSet::new(),
        }
    }

    fn feed(&mut self, space: &TupleSpace, indices: &[usize]) {
        let arity = space.arity();
        let batches: Vec<Vec<SparseVec>> = indices
            .par_iter()
            .map_init(
                || vec![0usize; arity],
                |buf, &i| {
                    space.fill(i, buf);
                    self.family.rows(&self.ctx, buf, self.mode)
                },
            )
            .collect();
        for row in batches.into_iter().flatten() {
            if self.ech.is_full() {
                return;
            }
            if self.seen.insert(row.clone()) {
                self.ech.insert(&row);
            }
        }
    }

    /// Every tuple of the space in order, stopping once no unknown is free.
    fn full_pass(&mut self, space: &TupleSpace) {
        let idx: Vec<usize> = (0..space.len()).collect();
        for chunk in idx.chunks(BATCH) {
            if self.ech.is_full() {
                return;
            }
            self.feed(space, chunk);
        }
    }
}

fn solution_space(vars: Vec<u32>, solver: &Solver) -> PolySpace {
    PolySpace::from_vectors(vars, solver.ctx.alg.conductor(), &solver.ech.nullspace())
}

fn degree_vars(m: usize) -> Vec<u32> {
    (1..=m as u32).collect()
}

fn space_of(alg: &Algebra, m: usize, mode: ScanMode, cfg: &ScanConfig) -> Result<PolySpace> {
    cfg.check_degree(m)?;
    let vars = degree_vars(m);
    let space = cfg.space(alg, m)?;
    let words = Poly::multilinear_words(&vars);
    let mut solver = Solver::new(alg, Family::new(&words, None, &vars, alg.conductor()), mode);
    solver.full_pass(&space);
    Ok(solution_space(vars, &solver))
}

/// T(A) ∩ P_m.
pub fn identity_space(alg: &Algebra, m: usize, cfg: &ScanConfig) -> Result<PolySpace> {
    space_of(alg, m, ScanMode::Identity, cfg)
}

/// Central polynomials (identities included) in P_m.
pub fn central_space(alg: &Algebra, m: usize, cfg: &ScanConfig) -> Result<PolySpace> {
    space_of(alg, m, ScanMode::Central, cfg)
}

/// Bookkeeping of a product scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductStats {
    pub tuples: usize,
    pub samples: usize,
    pub rank_after_sampling: usize,
    pub rank: usize,
}

fn check_g(alg: &Algebra, r: usize, g: &Poly, cfg: &ScanConfig) -> Result<Vec<u32>> {
    let gvars = g.is_multilinear().ok_or(Error::NotMultilinear)?;
    let shared: Vec<u32> = gvars.iter().copied().filter(|&v| v >= 1 && v as usize <= r).collect();
    if !shared.is_empty() {
        return Err(Error::SharedVariables(shared));
    }
    if is_identity(g, alg, cfg)?.holds {
        return Err(Error::GIsIdentity);
    }
    Ok(gvars)
}

/// {f ∈ P_r : f·g central} (or f·g an identity), with scan statistics.
pub fn product_space_with_stats(
    alg: &Algebra,
    r: usize,
    g: &Poly,
    mode: ScanMode,
    cfg: &ScanConfig,
) -> Result<(PolySpace, ProductStats)> {
    cfg.check_degree(r)?;
    let g = lift_to(g, alg)?;
    let gvars = check_g(alg, r, &g, cfg)?;
    let fvars = degree_vars(r);
    let mut all: Vec<u32> = fvars.iter().chain(&gvars).copied().collect();
    all.sort_unstable();
    let space = cfg.space(alg, all.len())?;
    let words = Poly::multilinear_words(&fvars);
    let family = Family::new(&words, Some(&g), &all, alg.conductor());
    let mut solver = Solver::new(alg, family, mode);
    let samples = cfg.samples.min(space.len());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let picks: Vec<usize> = (0..samples).map(|_| rng.gen_range(0..space.len())).collect();
    solver.feed(&space, &picks);
    let rank_after_sampling = solver.ech.rank();
    // Every candidate violated somewhere contributes its row here, so the
    // span after this pass is the span of all constraints.
    solver.full_pass(&space);
    let stats = ProductStats {
        tuples: space.len(),
        samples,
        rank_after_sampling,
        rank: solver.ech.rank(),
    };
    Ok((solution_space(fvars, &solver), stats))
}

pub fn product_central_space(
    alg: &Algebra,
    r: usize,
    g: &Poly,
    mode: ScanMode,
    cfg: &ScanConfig,
) -> Result<PolySpace> {
    Ok(product_space_with_stats(alg, r, g, mode, cfg)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Contained,
    Counterexample,
}

/// The truncation used for Grassmann-based algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationNote {
    pub n: u32,
    pub n_default: u32,
    pub overridden: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub algebra: String,
    pub mode: ScanMode,
    pub r: usize,
    pub g: String,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    #[serde(rename = "dimC")]
    pub dim_c: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Basis of V, as polynomials.
    pub v_basis: Vec<String>,
    /// Every V basis vector times g re-checked on all tuples.
    pub verified: bool,
    pub stats: ProductStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<TruncationNote>,
}

/// V = {f ∈ P_r : f·g central (identity)} against C = central polynomials
/// (identities) of P_r: contained iff V ⊆ C.
pub fn primeness_scan(
    alg: &Algebra,
    r: usize,
    g: &Poly,
    mode: ScanMode,
    cfg: &ScanConfig,
) -> Result<ScanReport> {
    let (v, stats) = product_space_with_stats(alg, r, g, mode, cfg)?;
    let c = space_of(alg, r, mode, cfg)?;
    let c_ech = c.echelon();
    let outside = v
        .basis
        .iter()
        .find(|x| !c_ech.contains(&sparse_from_dense(x)))
        .map(|x| v.poly(x));
    let g = lift_to(g, alg)?;
    let verified = match outside {
        Some(_) => false,
        None => {
            let mut ok = true;
            for f in v.polys() {
                let fg = f.disjoint_product(&g)?;
                let good = match mode {
                    ScanMode::Identity => is_identity(&fg, alg, cfg)?.holds,
                    ScanMode::Central => {
                        !matches!(classify_central(&fg, alg, cfg)?, CentralClass::NonCentral(_))
                    }
                };
                ok &= good;
            }
            ok
        }
    };
    Ok(ScanReport {
        algebra: alg.descriptor().to_string(),
        mode,
        r,
        g: g.to_string(),
        dim_v: v.dim(),
        dim_c: c.dim(),
        verdict: if outside.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::Contained
        },
        counterexample: outside.map(|f| f.to_string()),
        v_basis: v.polys().iter().map(Poly::to_string).collect(),
        verified,
        stats,
        truncation: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal {
        dim: usize,
    },
    /// `poly` is an identity of one algebra and fails on the other.
    Differing {
        poly: Poly,
        identity_of: String,
        fails_on: String,
        counterexample: Counterexample,
    },
}

/// Compares T(A) ∩ P_m with T(B) ∩ P_m.
pub fn compare_identity_spaces(
    a: &Algebra,
    b: &Algebra,
    m: usize,
    cfg: &ScanConfig,
) -> Result<Comparison> {
    let mut sa = identity_space(a, m, cfg)?;
    let mut sb = identity_space(b, m, cfg)?;
    match (sa.conductor, sb.conductor) {
        (x, y) if x == y => {}
        (1, y) => sa = sa.lift(y)?,
        (x, 1) => sb = sb.lift(x)?,
        (x, y) => return Err(Error::ConductorMismatch(x, y)),
    }
    if sa.basis == sb.basis {
        return Ok(Comparison::Equal { dim: sa.dim() });
    }
    let (ea, eb) = (sa.echelon(), sb.echelon());
    let pick = |s: &PolySpace, other: &Echelon| {
        s.basis
            .iter()
            .find(|v| !other.contains(&sparse_from_dense(v)))
            .map(|v| s.poly(v))
    };
    let (poly, holds, fails) = match pick(&sa, &eb) {
        Some(f) => (f, a, b),
        None => (pick(&sb, &ea).expect("different echelon bases"), b, a),
    };
    let check = is_identity(&poly, fails, cfg)?;
    Ok(Comparison::Differing {
        poly,
        identity_of: holds.descriptor().to_string(),
        fails_on: fails.descriptor().to_string(),
        counterexample: check
            .counterexample
            .expect("not in the identity space of the other algebra"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::freealg::parse_poly;

    fn alg(s: &str) -> Algebra {
        build_algebra(s).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn cfg() -> ScanConfig {
        ScanConfig::default()
    }

    #[test]
    fn identity_examples() {
        assert!(is_identity(&p("[x1,x2,x3]"), &alg("E(6)"), &cfg()).unwrap().holds);
        let e4 = alg("E(4)");
        let r = is_identity(&p("[x1,x2]"), &e4, &cfg()).unwrap();
        let w = r.counterexample.unwrap();
        assert_eq!(w.describe(&e4), "x1 <- e1, x2 <- e2");
        assert_eq!(e4.display(&w.value).to_string(), "2*e1e2");
        let m2 = alg("Mat(2)");
        let full = ScanConfig {
            tuples: TupleScan::Full,
            ..cfg()
        };
        let w = is_identity(&p("[x1,x2]"), &m2, &full).unwrap().counterexample.unwrap();
        assert_eq!(w.describe(&m2), "x1 <- e11, x2 <- e12");
        // non-multilinear: x1^2 is not an identity of E, [x1,x2]^2 is
        assert!(!is_identity(&p("x1*x1"), &e4, &cfg()).unwrap().holds);
        assert!(is_identity(&p("[x1,x2]*[x1,x2]"), &e4, &cfg()).unwrap().holds);
        assert!(!is_identity(&p("3"), &e4, &cfg()).unwrap().holds);
    }

    #[test]
    fn central_examples() {
        let e6 = alg("E(6)");
        assert_eq!(classify_central(&p("[x1,x2]"), &e6, &cfg()).unwrap().name(), "proper-central");
        match classify_central(&p("x1"), &e6, &cfg()).unwrap() {
            CentralClass::NonCentral(w) => assert_eq!(w.describe(&e6), "x1 <- e1"),
            other => panic!("{other:?}"),
        }
        let m2 = alg("Mat(2)");
        assert_eq!(
            classify_central(&p("[x1,x2]*[x1,x2]"), &m2, &cfg()).unwrap().name(),
            "proper-central"
        );
        assert_eq!(classify_central(&p("[x1,x2,x3]"), &e6, &cfg()).unwrap().name(), "identity");
    }

    #[test]
    fn space_examples() {
        let e6 = alg("E(6)");
        assert_eq!(identity_space(&e6, 2, &cfg()).unwrap().dim(), 0);
        let i3 = identity_space(&e6, 3, &cfg()).unwrap();
        assert_eq!(i3.dim(), 2);
        assert!(i3.contains(&p("[x1,x2,x3]")).unwrap());
        assert_eq!(identity_space(&alg("Mat(2)"), 2, &cfg()).unwrap().dim(), 0);
        let c2 = central_space(&e6, 2, &cfg()).unwrap();
        assert_eq!(c2.dim(), 1);
        assert!(c2.contains(&p("[x1,x2]")).unwrap());
        assert_eq!(central_space(&alg("Mat(2)"), 1, &cfg()).unwrap().dim(), 0);
        let c3 = central_space(&e6, 3, &cfg()).unwrap();
        assert!(i3.polys().iter().all(|f| c3.contains(f).unwrap()));
        assert!(identity_space(&e6, 5, &cfg()).is_err());
    }

    #[test]
    fn product_space_examples() {
        let e6 = alg("E(6)");
        let v = product_central_space(&e6, 1, &p("x2"), ScanMode::Central, &cfg()).unwrap();
        assert_eq!(v.dim(), 0);
        let v = product_central_space(&e6, 2, &p("[x3,x4]"), ScanMode::Central, &cfg()).unwrap();
        assert!(v.contains(&p("[x1,x2]")).unwrap());
        let m2 = alg("Mat(2)");
        let v = product_central_space(&m2, 2, &p("x3"), ScanMode::Identity, &cfg()).unwrap();
        assert_eq!(v, identity_space(&m2, 2, &cfg()).unwrap());
        assert_eq!(v.dim(), 0);
        assert_eq!(
            product_central_space(&e6, 2, &p("[x3,x4,x5]"), ScanMode::Central, &cfg()),
            Err(Error::GIsIdentity)
        );
        assert_eq!(
            product_central_space(&e6, 2, &p("x2*x3"), ScanMode::Central, &cfg()),
            Err(Error::SharedVariables(vec![2]))
        );
    }

    #[test]
    fn scans_independent_of_seed() {
        let e6 = alg("E(6)");
        let a = primeness_scan(&e6, 2, &p("[x3,x4]"), ScanMode::Central, &cfg()).unwrap();
        let b = primeness_scan(
            &e6,
            2,
            &p("[x3,x4]"),
            ScanMode::Central,
            &ScanConfig { seed: 99, ..cfg() },
        )
        .unwrap();
        assert_eq!(a.v_basis, b.v_basis);
        assert_eq!(a.verdict, Verdict::Contained);
        assert!(a.verified);
    }

    #[test]
    fn comparisons() {
        let e6 = alg("E(6)");
        let m2 = alg("Mat(2)");
        assert_eq!(
            compare_identity_spaces(&e6, &e6, 3, &cfg()).unwrap(),
            Comparison::Equal { dim: 2 }
        );
        match compare_identity_spaces(&e6, &m2, 3, &cfg()).unwrap() {
            Comparison::Differing {
                poly,
                identity_of,
                fails_on,
                ..
            } => {
                assert_eq!(identity_of, "E(6)");
                assert_eq!(fails_on, "Mat(2)");
                assert!(identity_space(&e6, 3, &cfg()).unwrap().contains(&poly).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }
}
