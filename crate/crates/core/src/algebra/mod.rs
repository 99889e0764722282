//! Finite-dimensional associative algebras with a monomial basis: the product
//! of two basis elements is zero or ± one basis element.
//!
//! Basis layouts:
//! - `E(n)`: index = blade bitmask.
//! - `Mat(k)`: index = i·k + j for the matrix unit e_{i+1,j+1}.
//! - `MpqE(p,q,n)`: row-major over matrix units, blades of the matching
//!   parity in increasing bitmask order.
//! - `T(A,B)`: index = a·dim(B) + b.

mod descriptor;
mod tuples;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coeff::{write_combination, Scalar};
use crate::error::{Error, Result};
use crate::freealg::Poly;
use crate::grassmann::{blade_product, Blade};
use crate::linalg::{Echelon, SparseVec};

pub use descriptor::{parse_descriptor, Descriptor};
pub use tuples::TupleSpace;

pub const DEFAULT_DIM_CAP: usize = 4096;
/// Largest dimension with a materialized product table.
pub const TABLE_LIMIT: usize = 300;
const SAMPLED_TRIPLES: usize = 10_000;

/// A vector in an algebra, as sparse coordinates over its basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    coords: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// c·b_i.
    pub fn basis(i: usize, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(i, c);
        e
    }

    pub fn from_coords<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn coords(&self) -> &BTreeMap<usize, Scalar> {
        &self.coords
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.coords.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Adds c·b_i; panics if `c` lives in another field than the other
    /// coordinates.
    pub fn add_term(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&i) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    self.coords.remove(&i);
                }
            }
            None => {
                self.coords.insert(i, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (i, c) in &other.coords {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (i, c) in &other.coords {
            out.add_term(*i, -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element::from_coords(self.coords.iter().map(|(i, a)| (*i, a * c)))
    }

    pub fn lift(&self, k: u32) -> Result<Element> {
        let mut out = Element::zero();
        for (i, c) in &self.coords {
            out.coords.insert(*i, c.lift(k)?);
        }
        Ok(out)
    }

    pub fn from_sparse(v: SparseVec) -> Element {
        Element {
            coords: v.into_iter().collect(),
        }
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.coords.iter().map(|(i, c)| (*i, c.clone())).collect()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.coords.iter().map(|(i, c)| (format!("b{i}"), c)))
    }
}

/// Values for the variables of a polynomial, all in one algebra.
pub type Assignment = BTreeMap<u32, Element>;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub dim_cap: usize,
    /// Value substituted for the placeholder `n` in descriptors.
    pub truncation: Option<u32>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            dim_cap: DEFAULT_DIM_CAP,
            truncation: None,
        }
    }
}

/// Basis of M_{p,q}(E(n)): (row, column, blade), rows and columns 0-based.
#[derive(Clone, Debug)]
struct MpqBasis {
    p: u32,
    q: u32,
    n: u32,
    units: Vec<(u32, u32, Blade)>,
    index: HashMap<(u32, u32, Blade), usize>,
}

impl MpqBasis {
    fn new(p: u32, q: u32, n: u32) -> Self {
        let size = p + q;
        let mut units = Vec::new();
        for i in 0..size {
            for j in 0..size {
                let odd = (i < p) != (j < p);
                for mask in 0..1u64 << n {
                    let b = Blade(mask);
                    if b.is_even() != odd {
                        units.push((i, j, b));
                    }
                }
            }
        }
        let index = units.iter().enumerate().map(|(k, u)| (*u, k)).collect();
        MpqBasis {
            p,
            q,
            n,
            units,
            index,
        }
    }

    fn block(&self, i: u32) -> u32 {
        u32::from(i >= self.p)
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Grassmann(u32),
    Matrix(u32),
    Mpq(MpqBasis),
    Tensor(Arc<Algebra>, Arc<Algebra>),
}

/// Read-only view of how an algebra is built.
#[derive(Clone, Copy, Debug)]
pub enum Shape<'a> {
    Grassmann { n: u32 },
    Matrix { k: u32 },
    Mpq { p: u32, q: u32, n: u32 },
    Tensor(&'a Algebra, &'a Algebra),
}

/// A finite-dimensional unital associative algebra over Q(ζ_k) with
/// verified structure constants and a precomputed center.
#[derive(Clone, Debug)]
pub struct Algebra {
    descriptor: Descriptor,
    conductor: u32,
    kind: Kind,
    dim: usize,
    table: Option<Vec<i32>>,
    unit: Element,
    generators: Vec<Element>,
    center: Vec<Element>,
}

pub fn build_algebra(descriptor: &str) -> Result<Algebra> {
    build_algebra_with(descriptor, &BuildOptions::default())
}

pub fn build_algebra_with(descriptor: &str, opts: &BuildOptions) -> Result<Algebra> {
    let d = parse_descriptor(descriptor, opts.truncation)?;
    Algebra::from_descriptor(&d, opts.dim_cap)
}

/// The ordinary tensor product A ⊗ B. A factor over Q is base-changed to the
/// other factor's field.
pub fn tensor(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    tensor_with_cap(a, b, DEFAULT_DIM_CAP)
}

pub fn tensor_with_cap(a: &Algebra, b: &Algebra, dim_cap: usize) -> Result<Algebra> {
    let d = Descriptor::Tensor(Box::new(a.descriptor.clone()), Box::new(b.descriptor.clone()));
    check_cap(&d, dim_cap)?;
    let k = d.conductor()?;
    let rebase = |x: &Algebra| -> Result<Algebra> {
        if x.conductor == k {
            Ok(x.clone())
        } else {
            Algebra::construct(&x.descriptor, k)
        }
    };
    Algebra::finish(
        d,
        k,
        Kind::Tensor(Arc::new(rebase(a)?), Arc::new(rebase(b)?)),
    )
}

fn check_cap(d: &Descriptor, cap: usize) -> Result<()> {
    match d.dim() {
        Some(dim) if dim <= cap as u128 => Ok(()),
        Some(dim) => Err(Error::DimensionCap {
            dim: usize::try_from(dim).unwrap_or(usize::MAX),
            cap,
        }),
        None => Err(Error::DimensionCap {
            dim: usize::MAX,
            cap,
        }),
    }
}

#[inline]
fn pack(m: Option<(i8, usize)>) -> i32 {
    match m {
        None => 0,
        Some((s, i)) => i32::from(s) * (i as i32 + 1),
    }
}

#[inline]
fn unpack(v: i32) -> Option<(i8, usize)> {
    match v {
        0 => None,
        v if v > 0 => Some((1, v as usize - 1)),
        v => Some((-1, (-v) as usize - 1)),
    }
}

impl Algebra {
    pub fn from_descriptor(d: &Descriptor, dim_cap: usize) -> Result<Algebra> {
        check_cap(d, dim_cap)?;
        let k = d.conductor()?;
        Algebra::construct(d, k)
    }

    /// Builds `d` over Q(ζ_k); `k` must be the descriptor's own conductor
    /// unless the descriptor is over Q.
    fn construct(d: &Descriptor, k: u32) -> Result<Algebra> {
        let own = d.conductor()?;
        if own != 1 && own != k {
            return Err(Error::ConductorMismatch(own, k));
        }
        let kind = match d {
            Descriptor::Grassmann(n) => Kind::Grassmann(*n),
            Descriptor::Matrix { k: s, .. } => Kind::Matrix(*s),
            Descriptor::Mpq(p, q, n) => Kind::Mpq(MpqBasis::new(*p, *q, *n)),
            Descriptor::MatrixGrassmann(s, n) => Kind::Tensor(
                Arc::new(Algebra::construct(&Descriptor::Matrix { k: *s, zeta: false }, k)?),
                Arc::new(Algebra::construct(&Descriptor::Grassmann(*n), k)?),
            ),
            Descriptor::Tensor(a, b) => Kind::Tensor(
                Arc::new(Algebra::construct(a, k)?),
                Arc::new(Algebra::construct(b, k)?),
            ),
        };
        Algebra::finish(d.clone(), k, kind)
    }

    fn finish(descriptor: Descriptor, conductor: u32, kind: Kind) -> Result<Algebra> {
        let dim = match &kind {
            Kind::Grassmann(n) => 1usize << n,
            Kind::Matrix(s) => (*s as usize).pow(2),
            Kind::Mpq(b) => b.units.len(),
            Kind::Tensor(a, b) => a.dim * b.dim,
        };
        let mut alg = Algebra {
            descriptor,
            conductor,
            kind,
            dim,
            table: None,
            unit: Element::zero(),
            generators: Vec::new(),
            center: Vec::new(),
        };
        if dim <= TABLE_LIMIT {
            let table = (0..dim * dim)
                .map(|ij| pack(alg.structure_product(ij / dim, ij % dim)))
                .collect();
            alg.table = Some(table);
        }
        alg.unit = alg.build_unit();
        alg.check_associative()?;
        alg.check_unit()?;
        alg.generators = alg.build_generators();
        alg.center = alg.compute_center();
        Ok(alg)
    }

    fn structure_product(&self, i: usize, j: usize) -> Option<(i8, usize)> {
        match &self.kind {
            Kind::Grassmann(_) => blade_product(Blade(i as u64), Blade(j as u64))
                .map(|(s, b)| (s, b.0 as usize)),
            Kind::Matrix(s) => {
                let s = *s as usize;
                (i % s == j / s).then(|| (1, (i / s) * s + j % s))
            }
            Kind::Mpq(b) => {
                let (r1, c1, s1) = b.units[i];
                let (r2, c2, s2) = b.units[j];
                if c1 != r2 {
                    return None;
                }
                let (sign, u) = blade_product(s1, s2)?;
                let idx = b
                    .index
                    .get(&(r1, c2, u))
                    .expect("block parity is additive, so products stay in M_{p,q}(E)");
                Some((sign, *idx))
            }
            Kind::Tensor(a, b) => {
                let db = b.dim;
                let (sa, ia) = a.mul_basis(i / db, j / db)?;
                let (sb, ib) = b.mul_basis(i % db, j % db)?;
                Some((sa * sb, ia * db + ib))
            }
        }
    }

    /// b_i·b_j as `None` (zero) or `(sign, index)`.
    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(i8, usize)> {
        match &self.table {
            Some(t) => unpack(t[i * self.dim + j]),
            None => self.structure_product(i, j),
        }
    }

    fn one(&self) -> Scalar {
        Scalar::one(self.conductor)
    }

    fn build_unit(&self) -> Element {
        match &self.kind {
            Kind::Grassmann(_) => Element::basis(0, self.one()),
            Kind::Matrix(s) => {
                let s = *s as usize;
                Element::from_coords((0..s).map(|i| (i * s + i, self.one())))
            }
            Kind::Mpq(b) => Element::from_coords(
                (0..b.p + b.q).map(|i| (b.index[&(i, i, Blade::UNIT)], self.one())),
            ),
            Kind::Tensor(a, b) => self.tensor_product_of(&a.unit, &b.unit, b.dim),
        }
    }

    fn tensor_product_of(&self, x: &Element, y: &Element, db: usize) -> Element {
        let mut out = Element::zero();
        for (i, a) in &x.coords {
            for (j, b) in &y.coords {
                out.add_term(i * db + j, a * b);
            }
        }
        out
    }

    /// A generating set of the algebra as a unital algebra.
    fn build_generators(&self) -> Vec<Element> {
        let one = self.one();
        let basis = |i: usize| Element::basis(i, one.clone());
        match &self.kind {
            Kind::Grassmann(n) => (0..*n).map(|l| basis(1 << l)).collect(),
            Kind::Matrix(s) => {
                let s = *s as usize;
                (0..s.saturating_sub(1))
                    .flat_map(|i| [basis(i * s + i + 1), basis((i + 1) * s + i)])
                    .collect()
            }
            Kind::Mpq(b) => {
                let mut out = Vec::new();
                let size = b.p + b.q;
                for i in 0..size {
                    for j in 0..size {
                        if b.block(i) == b.block(j) {
                            out.push(basis(b.index[&(i, j, Blade::UNIT)]));
                        }
                    }
                }
                if b.p > 0 && b.q > 0 {
                    for l in 1..=b.n {
                        let e = Blade::generator(l);
                        out.push(basis(b.index[&(0, b.p, e)]));
                        out.push(basis(b.index[&(b.p, 0, e)]));
                    }
                } else {
                    for l in 1..=b.n {
                        for m in l + 1..=b.n {
                            out.push(basis(b.index[&(0, 0, Blade::from_indices(&[l, m]))]));
                        }
                    }
                }
                out
            }
            Kind::Tensor(a, b) => {
                let db = b.dim;
                let left = a.generators.iter().map(|g| self.tensor_product_of(g, &b.unit, db));
                let right = b.generators.iter().map(|g| self.tensor_product_of(&a.unit, g, db));
                left.chain(right).collect()
            }
        }
    }

    fn check_associative(&self) -> Result<()> {
        let assoc = |i: usize, j: usize, l: usize| -> bool {
            let left = self
                .mul_basis(i, j)
                .and_then(|(s, u)| self.mul_basis(u, l).map(|(t, w)| (s * t, w)));
            let right = self
                .mul_basis(j, l)
                .and_then(|(s, u)| self.mul_basis(i, u).map(|(t, w)| (s * t, w)));
            left == right
        };
        let d = self.dim;
        let bad = if d <= TABLE_LIMIT {
            (0..d).into_par_iter().find_first(|&i| {
                (0..d).any(|j| (0..d).any(|l| !assoc(i, j, l)))
            })
            .map(|i| {
                let (j, l) = (0..d)
                    .flat_map(|j| (0..d).map(move |l| (j, l)))
                    .find(|&(j, l)| !assoc(i, j, l))
                    .unwrap();
                (i, j, l)
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .find(|&(i, j, l)| !assoc(i, j, l))
        };
        match bad {
            Some((i, j, l)) => Err(Error::NotAssociative(i, j, l)),
            None => Ok(()),
        }
    }

    fn check_unit(&self) -> Result<()> {
        let bad = (0..self.dim).into_par_iter().find_first(|&i| {
            let b = Element::basis(i, self.one());
            self.product(&self.unit, &b) != b || self.product(&b, &self.unit) != b
        });
        match bad {
            Some(i) => Err(Error::BadUnit(i)),
            None => Ok(()),
        }
    }

    /// [b_i, x].
    fn commutator_with_basis(&self, i: usize, x: &Element) -> Element {
        let mut out = Element::zero();
        for (j, c) in &x.coords {
            if let Some((s, u)) = self.mul_basis(i, *j) {
                out.add_term(u, if s > 0 { c.clone() } else { -c });
            }
            if let Some((s, u)) = self.mul_basis(*j, i) {
                out.add_term(u, if s > 0 { -c } else { c.clone() });
            }
        }
        out
    }

    fn center_from(&self, gens: &[Element]) -> Vec<Element> {
        let per_gen: Vec<Vec<(usize, usize, Scalar)>> = gens
            .par_iter()
            .map(|g| {
                let mut entries = Vec::new();
                for i in 0..self.dim {
                    for (o, v) in self.commutator_with_basis(i, g).coords {
                        entries.push((o, i, v));
                    }
                }
                entries
            })
            .collect();
        let mut ech = Echelon::new(self.dim, self.conductor);
        for entries in per_gen {
            let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for (o, i, v) in entries {
                rows.entry(o).or_default().push((i, v));
            }
            for r in rows.values() {
                ech.insert(r);
            }
        }
        ech.nullspace().into_iter().map(Element::from_sparse).collect()
    }

    fn compute_center(&self) -> Vec<Element> {
        let center = self.center_from(&self.generators);
        let all_commute = center.par_iter().all(|z| {
            (0..self.dim).all(|i| self.commutator_with_basis(i, z).is_zero())
        });
        if all_commute {
            center
        } else {
            let basis: Vec<Element> = (0..self.dim).map(|i| Element::basis(i, self.one())).collect();
            self.center_from(&basis)
        }
    }

    /// Bilinear product without validation.
    pub(crate) fn product(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (i, a) in &x.coords {
            for (j, b) in &y.coords {
                if let Some((s, u)) = self.mul_basis(*i, *j) {
                    let c = a * b;
                    out.add_term(u, if s > 0 { c } else { -c });
                }
            }
        }
        out
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        for (i, c) in &x.coords {
            if *i >= self.dim {
                return Err(Error::AlgebraMismatch(format!(
                    "basis index {i} outside {} (dim {})",
                    self.descriptor, self.dim
                )));
            }
            if c.conductor() != self.conductor {
                return Err(Error::ConductorMismatch(c.conductor(), self.conductor));
            }
        }
        Ok(())
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.product(x, y))
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }

    /// Commutes with a generating set, hence with everything.
    pub fn is_central(&self, x: &Element) -> bool {
        self.generators
            .iter()
            .all(|g| self.product(x, g) == self.product(g, x))
    }

    /// f evaluated at the assignment; a polynomial over Q is read in the
    /// algebra's field.
    pub fn evaluate(&self, f: &Poly, s: &Assignment) -> Result<Element> {
        let f = if f.conductor() == self.conductor {
            f.clone()
        } else {
            f.lift(self.conductor)?
        };
        for v in f.variables() {
            let x = s.get(&v).ok_or(Error::MissingVariable(v))?;
            self.check_element(x)?;
        }
        let mut out = Element::zero();
        for (w, c) in f.terms() {
            let mut val = self.unit.clone();
            for v in w.letters() {
                if val.is_zero() {
                    break;
                }
                val = self.product(&val, &s[v]);
            }
            out = out.add(&val.scale(c));
        }
        Ok(out)
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(i, self.one())
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn center_basis(&self) -> &[Element] {
        &self.center
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn shape(&self) -> Shape<'_> {
        match &self.kind {
            Kind::Grassmann(n) => Shape::Grassmann { n: *n },
            Kind::Matrix(k) => Shape::Matrix { k: *k },
            Kind::Mpq(b) => Shape::Mpq {
                p: b.p,
                q: b.q,
                n: b.n,
            },
            Kind::Tensor(a, b) => Shape::Tensor(a, b),
        }
    }

    /// (row, column, blade) of a basis element of M_{p,q}(E(n)).
    pub fn mpq_unit(&self, i: usize) -> Option<(u32, u32, Blade)> {
        match &self.kind {
            Kind::Mpq(b) => b.units.get(i).copied(),
            _ => None,
        }
    }

    pub fn mpq_index(&self, row: u32, col: u32, blade: Blade) -> Option<usize> {
        match &self.kind {
            Kind::Mpq(b) => b.index.get(&(row, col, blade)).copied(),
            _ => None,
        }
    }

    /// x ⊗ y in a tensor product algebra.
    pub fn tensor_element(&self, x: &Element, y: &Element) -> Result<Element> {
        match &self.kind {
            Kind::Tensor(a, b) => {
                a.check_element(x)?;
                b.check_element(y)?;
                Ok(self.tensor_product_of(x, y, b.dim))
            }
            _ => Err(Error::AlgebraMismatch(format!(
                "{} is not a tensor product",
                self.descriptor
            ))),
        }
    }

    /// Group label of a homogeneous basis element for graded algebras: the
    /// Z_2-degree for E(n) and M_{p,q}(E(n)), pairs for tensor products.
    pub fn grade_tag(&self, i: usize) -> Option<String> {
        match &self.kind {
            Kind::Grassmann(_) => Some(if Blade(i as u64).is_even() { "0" } else { "1" }.into()),
            Kind::Matrix(_) => None,
            Kind::Mpq(b) => {
                let (r, c, _) = b.units[i];
                Some(if b.block(r) == b.block(c) { "0" } else { "1" }.into())
            }
            Kind::Tensor(a, b) => match (a.grade_tag(i / b.dim), b.grade_tag(i % b.dim)) {
                (Some(x), Some(y)) => Some(format!("({x},{y})")),
                (x, y) => x.or(y),
            },
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.kind {
            Kind::Grassmann(_) => Blade(i as u64).to_string(),
            Kind::Matrix(s) => matrix_unit_label(i as u32 / s, i as u32 % s, *s),
            Kind::Mpq(b) => {
                let (r, c, bl) = b.units[i];
                format!("{}⊗{bl}", matrix_unit_label(r, c, b.p + b.q))
            }
            Kind::Tensor(a, b) => format!("{}⊗{}", a.label(i / b.dim), b.label(i % b.dim)),
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }

    /// Displays an element in basis labels, e.g. `2*e1e2 - e11⊗e1`.
    pub fn display<'a>(&'a self, x: &'a Element) -> impl fmt::Display + 'a {
        ElementDisplay { alg: self, x }
    }
}

fn matrix_unit_label(r: u32, c: u32, size: u32) -> String {
    if size <= 9 {
        format!("e{}{}", r + 1, c + 1)
    } else {
        format!("e{},{}", r + 1, c + 1)
    }
}

struct ElementDisplay<'a> {
    alg: &'a Algebra,
    x: &'a Element,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |i: usize| {
            let l = self.alg.label(i);
            if l == "1" {
                String::new()
            } else {
                l
            }
        };
        write_combination(f, self.x.coords.iter().map(|(i, c)| (label(*i), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;

    fn alg(s: &str) -> Algebra {
        build_algebra(s).unwrap()
    }

    fn center_labels(a: &Algebra) -> Vec<String> {
        a.center_basis().iter().map(|z| a.display(z).to_string()).collect()
    }

    /// Center as the joint kernel of commutation with every basis element.
    fn brute_center_dim(a: &Algebra) -> usize {
        let basis: Vec<Element> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
        a.center_from(&basis).len()
    }

    #[test]
    fn grassmann_basis() {
        let e2 = alg("E(2)");
        assert_eq!(e2.dim(), 4);
        assert_eq!(e2.basis_labels(), vec!["1", "e1", "e2", "e1e2"]);
        assert_eq!(e2.mul_basis(2, 1), Some((-1, 3)));
    }

    #[test]
    fn mpq_basis_listing() {
        let m = alg("MpqE(1,1,2)");
        assert_eq!(
            m.basis_labels(),
            vec![
                "e11⊗1", "e11⊗e1e2", "e12⊗e1", "e12⊗e2", "e21⊗e1", "e21⊗e2", "e22⊗1",
                "e22⊗e1e2"
            ]
        );
        assert_eq!(m.display(m.unit()).to_string(), "e11⊗1 + e22⊗1");
    }

    #[test]
    fn mpq_closed_under_products() {
        for (p, q, n) in [(1, 1, 3), (2, 1, 3), (1, 2, 2), (2, 0, 2)] {
            let m = alg(&format!("MpqE({p},{q},{n})"));
            let size = p + q;
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    let (r1, c1, s1) = m.mpq_unit(i).unwrap();
                    let (r2, c2, s2) = m.mpq_unit(j).unwrap();
                    // product in M_{p+q}(E) computed directly
                    let direct = if c1 == r2 { blade_product(s1, s2) } else { None };
                    match (direct, m.mul_basis(i, j)) {
                        (None, None) => {}
                        (Some((s, u)), Some((t, k))) => {
                            assert_eq!(s, t);
                            assert_eq!(m.mpq_unit(k), Some((r1, c2, u)));
                        }
                        other => panic!("mismatch {other:?}"),
                    }
                    assert!(r1 < size && c2 < size);
                }
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let e2 = alg("E(2)");
        let f = parse_poly("[x1,x2]").unwrap();
        let s: Assignment = [(1, e2.basis_element(1)), (2, e2.basis_element(2))].into();
        assert_eq!(e2.display(&e2.evaluate(&f, &s).unwrap()).to_string(), "2*e1e2");
        let s: Assignment = [(1, e2.unit().clone())].into();
        assert_eq!(e2.evaluate(&parse_poly("x1").unwrap(), &s).unwrap(), *e2.unit());
        assert_eq!(
            e2.evaluate(&f, &s),
            Err(Error::MissingVariable(2))
        );
        let bad: Assignment = [(1, Element::basis(9, Scalar::from_int(1)))].into();
        assert!(matches!(
            e2.evaluate(&parse_poly("x1").unwrap(), &bad),
            Err(Error::AlgebraMismatch(_))
        ));
    }

    #[test]
    fn triple_commutator_vanishes_on_e4() {
        let e4 = alg("E(4)");
        let f = parse_poly("[x1,x2,x3]").unwrap();
        let mixed = |k: usize| {
            Element::from_coords((0..16).map(|i| (i, Scalar::from_int(((i * 7 + k * 3) % 5) as i64 - 2))))
        };
        for k in 0..20 {
            let s: Assignment = [(1, mixed(k)), (2, mixed(k + 1)), (3, mixed(2 * k + 5))].into();
            assert!(e4.evaluate(&f, &s).unwrap().is_zero());
        }
    }

    #[test]
    fn centers() {
        let e4 = alg("E(4)");
        assert_eq!(e4.center_basis().len(), 8);
        assert!(e4
            .center_basis()
            .iter()
            .all(|z| z.coords().keys().all(|&i| Blade(i as u64).is_even())));
        assert_eq!(center_labels(&alg("Mat(2)")), vec!["e11 + e22"]);
        // odd truncations keep the top blade central
        assert_eq!(alg("E(3)").center_basis().len(), 5);
        // the top blade kills every odd entry, so e11⊗e1e2 is central too
        let m = alg("MpqE(1,1,2)");
        assert_eq!(
            center_labels(&m),
            vec!["e11⊗e1e2", "e11⊗1 + e22⊗1", "e22⊗e1e2"]
        );
        for s in ["E(3)", "Mat(3)", "MpqE(1,1,2)", "MpqE(2,1,2)", "MpqE(2,0,3)", "T(Mat(2),E(3))", "Mat(1)", "E(0)"] {
            let a = alg(s);
            assert_eq!(a.center_basis().len(), brute_center_dim(&a), "{s}");
        }
    }

    #[test]
    fn tensor_products() {
        let t = alg("T(Mat(2),E(2))");
        assert_eq!(t.dim(), 16);
        assert_eq!(t.display(t.unit()).to_string(), "e11⊗1 + e22⊗1");
        let (a, b) = (alg("Mat(2)"), alg("E(2)"));
        let t2 = tensor(&a, &b).unwrap();
        assert_eq!(t2.descriptor().to_string(), "T(Mat(2),E(2))");
        for x in 0..4 {
            for y in 0..4 {
                let ax = t.tensor_element(&a.basis_element(x), b.unit()).unwrap();
                let by = t.tensor_element(a.unit(), &b.basis_element(y)).unwrap();
                assert!(t.commutator(&ax, &by).unwrap().is_zero());
            }
        }
        assert_eq!(alg("MatE(2,2)").center_basis().len(), 2);
        let z = tensor(&alg("Mat(2;zeta)"), &alg("E(1)")).unwrap();
        assert_eq!(z.conductor(), 2);
        assert_eq!(z.unit().coords().values().next().unwrap().conductor(), 2);
    }

    #[test]
    fn dimension_cap() {
        let opts = BuildOptions {
            dim_cap: 100,
            truncation: None,
        };
        assert_eq!(
            build_algebra_with("E(7)", &opts).unwrap_err(),
            Error::DimensionCap { dim: 128, cap: 100 }
        );
        assert!(build_algebra("E(13)").is_err());
        assert!(build_algebra("T(E(6),E(6))").is_ok());
    }

    #[test]
    fn grading_tags() {
        let t = alg("T(MpqE(1,1,1),E(1))");
        let tags: Vec<String> = (0..t.dim()).map(|i| t.grade_tag(i).unwrap()).collect();
        assert!(tags.contains(&"(1,0)".to_string()));
        assert_eq!(alg("Mat(2)").grade_tag(0), None);
        assert_eq!(alg("MatE(2,1)").grade_tag(1), Some("1".into()));
    }
}
