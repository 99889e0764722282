mod common;

use pi_core::perm::{permutations, sign};
use pi_core::regular::{
    builtin_decomposition, epsilon_sigma, kronecker, tensor_decomposition, transform_f_a, verify_p2,
    RegularDecomposition,
};
use pi_core::{tensor, Algebra, Assignment, Element, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn product(alg: &Algebra, xs: &[&Element]) -> Element {
    xs.iter()
        .fold(alg.unit().clone(), |acc, x| alg.mul(&acc, x).unwrap())
}

fn homogeneous(d: &RegularDecomposition, n: usize, rng: &mut ChaCha8Rng) -> (Vec<usize>, Vec<Element>) {
    let degrees: Vec<usize> = (0..n).map(|_| rng.gen_range(0..d.len())).collect();
    let xs = degrees.iter().map(|&i| d.sample_component(i, rng)).collect();
    (degrees, xs)
}

#[test]
fn builtins_are_consistent() {
    for name in ["grassmann(5)", "matk(2)", "matk(3)", "matk(4)", "m11e(3)", "tensor(grassmann(2),matk(2))"] {
        let d = builtin_decomposition(name).unwrap();
        let report = verify_p2(d.algebra(), d.components()).unwrap();
        assert_eq!(&report.theta, d.theta(), "{name}");
        let one = Scalar::one(d.algebra().conductor());
        for i in 0..d.len() {
            let tii = &d.theta()[i][i];
            assert!(*tii == one || *tii == -&one, "{name}");
            for j in 0..d.len() {
                if !report.undetermined.contains(&(i, j)) {
                    assert_eq!(d.theta()[i][j].try_mul(&d.theta()[j][i]).unwrap(), one, "{name}");
                }
            }
        }
    }
}

/// a_{σ(1)}⋯a_{σ(n)} = ε_σ·a_1⋯a_n on random homogeneous tuples.
#[test]
fn epsilon_matches_products() {
    let mut rng = common::rng(8);
    for name in ["grassmann(6)", "matk(2)", "matk(3)", "m11e(4)", "tensor(grassmann(3),matk(2))"] {
        let d = builtin_decomposition(name).unwrap();
        let alg = d.algebra();
        for n in 1..=5 {
            let perms = permutations(n);
            for _ in 0..100 {
                let (degrees, xs) = homogeneous(&d, n, &mut rng);
                let base = product(alg, &xs.iter().collect::<Vec<_>>());
                for sigma in &perms {
                    let permuted: Vec<&Element> = sigma.iter().map(|&i| &xs[i]).collect();
                    let eps = epsilon_sigma(d.theta(), &degrees, sigma).unwrap();
                    assert_eq!(product(alg, &permuted), base.scale(&eps), "{name} {degrees:?} {sigma:?}");
                }
            }
        }
    }
}

#[test]
fn odd_grassmann_epsilon_is_the_sign() {
    let d = builtin_decomposition("grassmann(6)").unwrap();
    for n in 1..=6 {
        let odd = vec![1; n];
        for sigma in permutations(n) {
            let eps = epsilon_sigma(d.theta(), &odd, &sigma).unwrap();
            assert_eq!(eps, Scalar::from_int(sign(&sigma).into()));
        }
    }
}

#[test]
fn kronecker_law() {
    for (a, b) in [("grassmann(4)", "grassmann(4)"), ("matk(2)", "grassmann(4)"), ("matk(2)", "m11e(2)"), ("matk(3)", "grassmann(2)")] {
        let da = builtin_decomposition(a).unwrap();
        let db = builtin_decomposition(b).unwrap();
        let t = tensor_decomposition(&da, &db).unwrap();
        let k = t.algebra().conductor();
        let kron: Vec<Vec<Scalar>> = kronecker(da.theta(), db.theta())
            .unwrap()
            .iter()
            .map(|r| r.iter().map(|s| s.lift(k).unwrap()).collect())
            .collect();
        assert_eq!(verify_p2(t.algebra(), t.components()).unwrap().theta, kron, "{a} ⊗ {b}");
    }
}

fn assignment(xs: &[Element]) -> Assignment {
    xs.iter().enumerate().map(|(i, x)| (i as u32 + 1, x.clone())).collect()
}

/// f(a⊗b) = (a_1⋯a_n) ⊗ f_a(b) = f_b(a) ⊗ (b_1⋯b_n).
#[test]
fn tensor_evaluation_proposition() {
    let mut rng = common::rng(9);
    for (a, b) in [("grassmann(6)", "grassmann(6)"), ("matk(2)", "grassmann(6)")] {
        let da = builtin_decomposition(a).unwrap();
        let db = builtin_decomposition(b).unwrap();
        let (aa, bb) = (da.algebra(), db.algebra());
        let t = tensor(aa, bb).unwrap();
        for i in 0..100 {
            let n = 1 + i % 4;
            let f = common::multilinear(&mut rng, n, 1 + i % 6);
            let (deg_a, xa) = homogeneous(&da, n, &mut rng);
            let (deg_b, xb) = homogeneous(&db, n, &mut rng);
            let xt: Vec<Element> = xa
                .iter()
                .zip(&xb)
                .map(|(x, y)| t.tensor_element(x, y).unwrap())
                .collect();
            let lhs = t.evaluate(&f, &assignment(&xt)).unwrap();
            let pa = product(aa, &xa.iter().collect::<Vec<_>>());
            let pb = product(bb, &xb.iter().collect::<Vec<_>>());
            let fa = transform_f_a(&f, da.theta(), &deg_a).unwrap();
            let fb = transform_f_a(&f, db.theta(), &deg_b).unwrap();
            let right = t
                .tensor_element(&pa, &bb.evaluate(&fa, &assignment(&xb)).unwrap())
                .unwrap();
            let left = t
                .tensor_element(&aa.evaluate(&fb, &assignment(&xa)).unwrap(), &pb)
                .unwrap();
            assert_eq!(lhs, right, "{a} ⊗ {b}: {f}");
            assert_eq!(lhs, left, "{a} ⊗ {b}: {f}");
        }
    }
}
