//! Regular decompositions A = A_1 ⊕ … ⊕ A_r: components commute up to fixed
//! scalars θ_{ij} (xy = θ_{ij}·yx for x ∈ A_i, y ∈ A_j), and every sequence of
//! components admits a nonzero product.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{build_algebra, tensor, Algebra, Element};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{Poly, Word};
use crate::linalg::Echelon;

/// Component indices d_1, …, d_n, 0-based.
pub type DegreeSequence = Vec<usize>;

pub type Theta = Vec<Vec<Scalar>>;

#[derive(Clone, Debug)]
pub struct RegularDecomposition {
    name: String,
    algebra: Arc<Algebra>,
    components: Vec<Vec<Element>>,
    labels: Vec<String>,
    theta: Theta,
    undetermined: Vec<(usize, usize)>,
}

/// Outcome of [`verify_p2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Report {
    pub theta: Theta,
    /// Pairs on which every product vanishes; their entry defaults to 1.
    pub undetermined: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1Outcome {
    /// Basis vectors x_i ∈ A_{d_i} and their nonzero product.
    Found { witness: Vec<Element>, product: Element },
    /// The search budget ran out or every basis tuple has zero product.
    Inconclusive { nodes: usize },
}

pub const P1_NODE_BUDGET: usize = 1_000_000;

impl RegularDecomposition {
    /// Checks P2 for the given components and stores the inferred θ.
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<Algebra>,
        components: Vec<Vec<Element>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let report = verify_p2(&algebra, &components)?;
        Ok(RegularDecomposition {
            name: name.into(),
            algebra,
            components,
            labels,
            theta: report.theta,
            undetermined: report.undetermined,
        })
    }

    /// Like [`RegularDecomposition::new`] with a known θ; the inferred entries
    /// must agree with it and undetermined entries take the known value.
    fn with_theta(
        name: String,
        algebra: Arc<Algebra>,
        components: Vec<Vec<Element>>,
        labels: Vec<String>,
        theta: Theta,
    ) -> Result<Self> {
        let report = verify_p2(&algebra, &components)?;
        for (i, row) in theta.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                if !report.undetermined.contains(&(i, j)) && report.theta[i][j] != *t {
                    return Err(Error::NotADecomposition(format!(
                        "{name}: inferred θ[{i}][{j}] = {} differs from {t}",
                        report.theta[i][j]
                    )));
                }
            }
        }
        Ok(RegularDecomposition {
            name,
            algebra,
            components,
            labels,
            theta,
            undetermined: report.undetermined,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn components(&self) -> &[Vec<Element>] {
        &self.components
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn theta(&self) -> &Theta {
        &self.theta
    }

    pub fn undetermined(&self) -> &[(usize, usize)] {
        &self.undetermined
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// A random element of A_i with small integer coordinates over the
    /// component basis, never zero.
    pub fn sample_component<R: Rng>(&self, i: usize, rng: &mut R) -> Element {
        let basis = &self.components[i];
        loop {
            let mut x = Element::zero();
            for b in basis {
                let c = rng.gen_range(-2i64..=2);
                if c != 0 && rng.gen_bool(0.5) {
                    x = x.add(&b.scale(&Scalar::in_field(self.algebra.conductor(), c.into())));
                }
            }
            if !x.is_zero() {
                return x;
            }
            if basis.len() == 1 {
                return basis[0].clone();
            }
        }
    }
}

/// xy = t·yx for one pair: `Ok(Some(t))`, `Ok(None)` when both vanish,
/// `Err(())` when no scalar works.
fn pair_ratio(alg: &Algebra, x: &Element, y: &Element) -> std::result::Result<Option<Scalar>, ()> {
    let xy = alg.mul(x, y).map_err(|_| ())?;
    let yx = alg.mul(y, x).map_err(|_| ())?;
    match yx.coords().iter().next() {
        None if xy.is_zero() => Ok(None),
        None => Err(()),
        Some((i, c)) => {
            let t = xy.coeff(*i).cloned().unwrap_or_else(|| Scalar::zero(c.conductor()));
            let t = t.try_div(c).map_err(|_| ())?;
            if t.is_zero() || yx.scale(&t) != xy {
                Err(())
            } else {
                Ok(Some(t))
            }
        }
    }
}

/// Infers θ from the first basis pair of each component pair with yx ≠ 0 and
/// checks xy = θ_{ij}·yx on all basis pairs.
pub fn verify_p2(alg: &Algebra, components: &[Vec<Element>]) -> Result<P2Report> {
    check_direct_sum(alg, components)?;
    let r = components.len();
    let one = Scalar::one(alg.conductor());
    let mut theta = vec![vec![one.clone(); r]; r];
    let mut undetermined = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let mut found: Option<Scalar> = None;
            for (a, x) in components[i].iter().enumerate() {
                for (b, y) in components[j].iter().enumerate() {
                    let violation = Error::P2Violation { i, j, x: a, y: b };
                    match pair_ratio(alg, x, y) {
                        Err(()) => return Err(violation),
                        Ok(None) => {}
                        Ok(Some(t)) => match &found {
                            None => found = Some(t),
                            Some(f) if *f == t => {}
                            Some(_) => return Err(violation),
                        },
                    }
                }
            }
            match found {
                Some(t) => theta[i][j] = t,
                None => undetermined.push((i, j)),
            }
        }
    }
    Ok(P2Report {
        theta,
        undetermined,
    })
}

fn check_direct_sum(alg: &Algebra, components: &[Vec<Element>]) -> Result<()> {
    let mut ech = Echelon::new(alg.dim(), alg.conductor());
    let mut count = 0;
    for (i, comp) in components.iter().enumerate() {
        for x in comp {
            alg.check_element(x)?;
            count += 1;
            if !ech.insert(&x.to_sparse()) {
                return Err(Error::NotADecomposition(format!(
                    "component {i} is not independent of the others"
                )));
            }
        }
    }
    if count != alg.dim() {
        return Err(Error::NotADecomposition(format!(
            "components span {count} of {} dimensions",
            alg.dim()
        )));
    }
    Ok(())
}

/// Backtracking search for basis vectors x_i ∈ A_{d_i} with x_1⋯x_n ≠ 0.
pub fn verify_p1(d: &RegularDecomposition, seq: &[usize]) -> Result<P1Outcome> {
    verify_p1_with_budget(d, seq, P1_NODE_BUDGET)
}

pub fn verify_p1_with_budget(
    d: &RegularDecomposition,
    seq: &[usize],
    budget: usize,
) -> Result<P1Outcome> {
    for &c in seq {
        if c >= d.len() {
            return Err(Error::IndexOutOfRange {
                index: c,
                bound: d.len(),
            });
        }
    }
    struct Search<'a> {
        d: &'a RegularDecomposition,
        seq: &'a [usize],
        nodes: usize,
        budget: usize,
        picked: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, prefix: &Element) -> Option<Element> {
            let depth = self.picked.len();
            if depth == self.seq.len() {
                return Some(prefix.clone());
            }
            let comp = &self.d.components[self.seq[depth]];
            for (k, x) in comp.iter().enumerate() {
                if self.nodes >= self.budget {
                    return None;
                }
                self.nodes += 1;
                let p = self.d.algebra.product(prefix, x);
                if p.is_zero() {
                    continue;
                }
                self.picked.push(k);
                if let Some(found) = self.go(&p) {
                    return Some(found);
                }
                self.picked.pop();
            }
            None
        }
    }
    let mut s = Search {
        d,
        seq,
        nodes: 0,
        budget,
        picked: Vec::new(),
    };
    let unit = d.algebra.unit().clone();
    Ok(match s.go(&unit) {
        Some(product) => P1Outcome::Found {
            witness: s
                .picked
                .iter()
                .zip(seq)
                .map(|(&k, &c)| d.components[c][k].clone())
                .collect(),
            product,
        },
        None => P1Outcome::Inconclusive { nodes: s.nodes },
    })
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || seen[s] {
            return Err(Error::BadPermutation(sigma.to_vec()));
        }
        seen[s] = true;
    }
    Ok(())
}

/// ε_σ = ∏_{k<l, σ(k)>σ(l)} θ_{d_{σ(k)}, d_{σ(l)}}, so that
/// a_{σ(1)}⋯a_{σ(n)} = ε_σ·a_1⋯a_n for a_i ∈ A_{d_i}.
pub fn epsilon_sigma(theta: &Theta, degrees: &[usize], sigma: &[usize]) -> Result<Scalar> {
    check_permutation(sigma)?;
    if degrees.len() != sigma.len() {
        return Err(Error::IndexOutOfRange {
            index: sigma.len(),
            bound: degrees.len(),
        });
    }
    let r = theta.len();
    for &d in degrees {
        if d >= r {
            return Err(Error::IndexOutOfRange { index: d, bound: r });
        }
    }
    let k = theta
        .first()
        .and_then(|row| row.first())
        .map_or(1, Scalar::conductor);
    let mut eps = Scalar::one(k);
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                eps = eps.try_mul(&theta[degrees[sigma[a]]][degrees[sigma[b]]])?;
            }
        }
    }
    Ok(eps)
}

/// f_a = Σ_σ ε_σ α_σ x_{σ(1)}⋯x_{σ(n)} for f = Σ_σ α_σ x_{σ(1)}⋯x_{σ(n)}.
/// The i-th smallest variable of f has degree `degrees[i]`.
pub fn transform_f_a(f: &Poly, theta: &Theta, degrees: &[usize]) -> Result<Poly> {
    let vars = f.is_multilinear().ok_or(Error::NotMultilinear)?;
    if vars.len() != degrees.len() && !f.is_zero() {
        return Err(Error::IndexOutOfRange {
            index: vars.len(),
            bound: degrees.len(),
        });
    }
    let k = theta
        .first()
        .and_then(|row| row.first())
        .map_or(f.conductor(), Scalar::conductor);
    let f = if f.conductor() == k { f.clone() } else { f.lift(k)? };
    let mut terms: Vec<(Word, Scalar)> = Vec::with_capacity(f.len());
    for (w, c) in f.terms() {
        let sigma: Vec<usize> = w
            .letters()
            .iter()
            .map(|v| vars.binary_search(v).expect("multilinear"))
            .collect();
        let eps = epsilon_sigma(theta, degrees, &sigma)?;
        terms.push((w.clone(), c.try_mul(&eps)?));
    }
    Poly::from_terms(k, terms)
}

/// Kronecker product of two commutation matrices, rows (i,k) in row-major order.
pub fn kronecker(a: &Theta, b: &Theta) -> Result<Theta> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for row_a in a {
        for row_b in b {
            let mut row = Vec::with_capacity(row_a.len() * row_b.len());
            for x in row_a {
                for y in row_b {
                    row.push(x.try_mul(y).or_else(|_| {
                        let c = x.conductor().max(y.conductor());
                        x.lift(c)?.try_mul(&y.lift(c)?)
                    })?);
                }
            }
            out.push(row);
        }
    }
    Ok(out)
}

/// Components A_i ⊗ B_k in row-major order with θ = M^A ⊗ M^B.
pub fn tensor_decomposition(
    da: &RegularDecomposition,
    db: &RegularDecomposition,
) -> Result<RegularDecomposition> {
    let t = Arc::new(tensor(&da.algebra, &db.algebra)?);
    let k = t.conductor();
    let (a, b) = match t.shape() {
        crate::algebra::Shape::Tensor(a, b) => (a.dim(), b.dim()),
        _ => unreachable!("tensor() builds a tensor product"),
    };
    debug_assert_eq!(a * b, t.dim());
    let mut components = Vec::new();
    let mut labels = Vec::new();
    for (ca, la) in da.components.iter().zip(&da.labels) {
        for (cb, lb) in db.components.iter().zip(&db.labels) {
            let mut comp = Vec::with_capacity(ca.len() * cb.len());
            for x in ca {
                for y in cb {
                    comp.push(t.tensor_element(&x.lift(k)?, &y.lift(k)?)?);
                }
            }
            components.push(comp);
            labels.push(format!("{la}⊗{lb}"));
        }
    }
    let lift_theta = |th: &Theta| -> Result<Theta> {
        th.iter()
            .map(|row| row.iter().map(|s| s.lift(k)).collect())
            .collect()
    };
    let theta = kronecker(&lift_theta(&da.theta)?, &lift_theta(&db.theta)?)?;
    RegularDecomposition::with_theta(
        format!("tensor({},{})", da.name, db.name),
        t,
        components,
        labels,
        theta,
    )
}

fn int_theta(rows: &[&[i64]]) -> Theta {
    rows.iter()
        .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
        .collect()
}

fn grassmann_decomposition(n: u32) -> Result<RegularDecomposition> {
    let alg = Arc::new(build_algebra(&format!("E({n})"))?);
    let (even, odd): (Vec<usize>, Vec<usize>) =
        (0..alg.dim()).partition(|&i| (i as u64).count_ones().is_multiple_of(2));
    let comps = vec![
        even.into_iter().map(|i| alg.basis_element(i)).collect(),
        odd.into_iter().map(|i| alg.basis_element(i)).collect(),
    ];
    RegularDecomposition::with_theta(
        format!("grassmann({n})"),
        alg,
        comps,
        vec!["E_0".into(), "E_1".into()],
        int_theta(&[&[1, 1], &[1, -1]]),
    )
}

fn matk_decomposition(k: u32) -> Result<RegularDecomposition> {
    let desc = if k <= 2 {
        format!("Mat({k})")
    } else {
        format!("Mat({k};zeta)")
    };
    let alg = Arc::new(build_algebra(&desc)?);
    let c = alg.conductor();
    let xi = match k {
        1 => Scalar::one(c),
        2 => Scalar::from_int(-1),
        _ => Scalar::primitive_root(k),
    };
    let s = k as usize;
    // X_a = diag(ξ^{k-1}, …, ξ, 1), X_b = e_{k,1} + Σ e_{i,i+1}
    let xa = Element::from_coords((0..s).map(|r| (r * s + r, xi.pow((s - 1 - r) as u64))));
    let xb = Element::from_coords(
        (0..s).map(|r| (r * s + (r + 1) % s, Scalar::one(c))),
    );
    let power = |x: &Element, e: u32| -> Element {
        (0..e).fold(alg.unit().clone(), |acc, _| alg.product(&acc, x))
    };
    let mut comps = Vec::new();
    let mut labels = Vec::new();
    for i in 0..k {
        for j in 0..k {
            comps.push(vec![alg.product(&power(&xa, i), &power(&xb, j))]);
            labels.push(format!("A_{i},{j}"));
        }
    }
    RegularDecomposition::new(format!("matk({k})"), alg, comps, labels)
}

fn m11e_decomposition(n: u32) -> Result<RegularDecomposition> {
    let alg = Arc::new(build_algebra(&format!("MpqE(1,1,{n})"))?);
    let one = Scalar::from_int(1);
    let neg = Scalar::from_int(-1);
    // coefficients of (e11, e22) or (e12, e21)
    let make = |diag: bool, a: &Scalar, b: &Scalar| -> Vec<Element> {
        let (p, q) = if diag { ((0, 0), (1, 1)) } else { ((0, 1), (1, 0)) };
        (0..1u64 << n)
            .map(crate::grassmann::Blade)
            .filter(|bl| bl.is_even() == diag)
            .map(|bl| {
                Element::from_coords([
                    (alg.mpq_index(p.0, p.1, bl).unwrap(), a.clone()),
                    (alg.mpq_index(q.0, q.1, bl).unwrap(), b.clone()),
                ])
            })
            .collect()
    };
    let comps = vec![
        make(true, &one, &one),
        make(true, &neg, &one),
        make(false, &one, &one),
        make(false, &neg, &one),
    ];
    RegularDecomposition::with_theta(
        format!("m11e({n})"),
        alg.clone(),
        comps,
        vec!["E_0I".into(), "E_0X_a".into(), "E_1X_b".into(), "E_1X_aX_b".into()],
        int_theta(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, -1, 1], &[1, -1, 1, -1]]),
    )
}

/// `grassmann(n)`, `matk(k)`, `m11e(n)` or `tensor(D1,D2)`.
pub fn builtin_decomposition(name: &str) -> Result<RegularDecomposition> {
    let name = name.trim();
    let bad = || Error::UnsupportedDecomposition(name.to_string());
    let (head, rest) = name.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let number = || inner.trim().parse::<u32>().map_err(|_| bad());
    match head.trim() {
        "grassmann" => {
            let n = number()?;
            if n > 12 {
                return Err(bad());
            }
            grassmann_decomposition(n)
        }
        "matk" => {
            let k = number()?;
            if k == 0 || k > 64 {
                return Err(bad());
            }
            matk_decomposition(k)
        }
        "m11e" => {
            let n = number()?;
            if n > 11 {
                return Err(bad());
            }
            m11e_decomposition(n)
        }
        "tensor" => {
            let split = top_level_comma(inner).ok_or_else(bad)?;
            let a = builtin_decomposition(&inner[..split])?;
            let b = builtin_decomposition(&inner[split + 1..])?;
            tensor_decomposition(&a, &b)
        }
        _ => Err(bad()),
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;

    fn show(theta: &Theta) -> Vec<Vec<String>> {
        theta
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn grassmann_theta() {
        let d = builtin_decomposition("grassmann(4)").unwrap();
        assert_eq!(show(d.theta()), ints(&[&[1, 1], &[1, -1]]));
        let r = verify_p2(d.algebra(), d.components()).unwrap();
        assert_eq!(r.theta, *d.theta());
        assert!(r.undetermined.is_empty());
        // E(1): e1·e1 = 0, so the odd diagonal entry cannot be inferred
        let d1 = builtin_decomposition("grassmann(1)").unwrap();
        assert_eq!(d1.undetermined(), &[(1, 1)]);
        assert_eq!(d1.theta()[1][1], Scalar::from_int(-1));
    }

    #[test]
    fn m11e_theta_matches_paper() {
        let d = builtin_decomposition("m11e(2)").unwrap();
        let paper = ints(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, -1, 1], &[1, -1, 1, -1]]);
        assert_eq!(show(d.theta()), paper);
        let r = verify_p2(d.algebra(), d.components()).unwrap();
        assert_eq!(show(&r.theta), paper);
        assert!(r.undetermined.is_empty());
    }

    #[test]
    fn matk_theta() {
        let d = builtin_decomposition("matk(2)").unwrap();
        // components A_00, A_01, A_10, A_11; X_a X_b = -X_b X_a
        assert_eq!(d.theta()[2][1], Scalar::from_int(-1));
        assert_eq!(
            d.algebra().display(&d.components()[2][0]).to_string(),
            "-e11 + e22"
        );
        let d3 = builtin_decomposition("matk(3)").unwrap();
        assert_eq!(d3.algebra().conductor(), 3);
        for i in 0..9 {
            assert!(d3.theta()[i][i].is_one());
            for j in 0..9 {
                assert!((&d3.theta()[i][j] * &d3.theta()[j][i]).is_one());
                assert!(d3.theta()[i][j].as_root_of_unity().is_some());
            }
        }
        assert!(d3.undetermined().is_empty());
    }

    #[test]
    fn mixed_parities_violate_p2() {
        let alg = build_algebra("E(2)").unwrap();
        let b = |i| alg.basis_element(i);
        let comps = vec![vec![b(0).add(&b(1))], vec![b(2)], vec![b(1), b(3)]];
        assert!(matches!(
            verify_p2(&alg, &comps),
            Err(Error::P2Violation { i: 0, j: 1, .. })
        ));
        let short = vec![vec![b(0)], vec![b(1)]];
        assert!(matches!(verify_p2(&alg, &short), Err(Error::NotADecomposition(_))));
    }

    #[test]
    fn p1_search() {
        let d = builtin_decomposition("grassmann(6)").unwrap();
        match verify_p1(&d, &[1, 1, 1]).unwrap() {
            P1Outcome::Found { witness, product } => {
                let labels: Vec<String> =
                    witness.iter().map(|x| d.algebra().display(x).to_string()).collect();
                assert_eq!(labels, vec!["e1", "e2", "e3"]);
                assert_eq!(d.algebra().display(&product).to_string(), "e1e2e3");
            }
            other => panic!("{other:?}"),
        }
        let d2 = builtin_decomposition("grassmann(2)").unwrap();
        assert!(matches!(
            verify_p1(&d2, &[1, 1, 1]).unwrap(),
            P1Outcome::Inconclusive { .. }
        ));
        let m = builtin_decomposition("matk(2)").unwrap();
        assert!(matches!(
            verify_p1(&m, &[3, 1, 2, 2, 0]).unwrap(),
            P1Outcome::Found { .. }
        ));
        assert!(verify_p1(&m, &[4]).is_err());
    }

    #[test]
    fn epsilon_examples() {
        let th = int_theta(&[&[1, 1], &[1, -1]]);
        assert!(epsilon_sigma(&th, &[1, 1, 1], &[0, 1, 2]).unwrap().is_one());
        assert_eq!(epsilon_sigma(&th, &[1, 1], &[1, 0]).unwrap(), Scalar::from_int(-1));
        assert_eq!(epsilon_sigma(&th, &[1, 0, 1], &[2, 1, 0]).unwrap(), Scalar::from_int(-1));
        assert!(epsilon_sigma(&th, &[0, 1], &[1, 1]).is_err());
        assert!(epsilon_sigma(&th, &[0, 2], &[1, 0]).is_err());
    }

    #[test]
    fn f_a_examples() {
        let th = int_theta(&[&[1, 1], &[1, -1]]);
        let f = parse_poly("x1*x2").unwrap();
        assert_eq!(transform_f_a(&f, &th, &[1, 1]).unwrap(), f);
        let g = parse_poly("x2*x1").unwrap();
        assert_eq!(transform_f_a(&g, &th, &[1, 1]).unwrap(), parse_poly("-x2*x1").unwrap());
        let h = parse_poly("[x1,x2,x3] + x3*x1*x2").unwrap();
        assert_eq!(transform_f_a(&h, &th, &[0, 0, 0]).unwrap(), h);
        assert!(transform_f_a(&parse_poly("x1*x1").unwrap(), &th, &[1, 1]).is_err());
    }

    #[test]
    fn tensor_theta_is_kronecker() {
        let d = builtin_decomposition("tensor(grassmann(2),grassmann(2))").unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(
            show(d.theta()),
            ints(&[&[1, 1, 1, 1], &[1, -1, 1, -1], &[1, 1, -1, -1], &[1, -1, -1, 1]])
        );
        let r = verify_p2(d.algebra(), d.components()).unwrap();
        assert_eq!(r.theta, *d.theta());
        let trivial = builtin_decomposition("matk(1)").unwrap();
        let g = builtin_decomposition("grassmann(3)").unwrap();
        let t = tensor_decomposition(&g, &trivial).unwrap();
        assert_eq!(t.theta(), g.theta());
        assert!(builtin_decomposition("foo(2)").is_err());
    }
}
