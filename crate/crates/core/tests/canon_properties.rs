mod common;

use pi_core::canon::{canonical_form, canonical_form_with, grassmann_witness, CanonicalForm, RewriteOrder};
use pi_core::linalg::{sparse_from_dense, Echelon};
use pi_core::pitest::{identity_space, is_identity, ScanConfig};
use pi_core::build_algebra;

fn cfg() -> ScanConfig {
    ScanConfig {
        max_degree: 5,
        ..ScanConfig::default()
    }
}

/// f minus the expansion of its canonical form vanishes on E(2m).
#[test]
fn rewriting_is_sound() {
    let mut rng = common::rng(1);
    let algebras: Vec<_> = (1..=5).map(|m| build_algebra(&format!("E({})", 2 * m)).unwrap()).collect();
    for i in 0..500 {
        let m = 1 + i % 5;
        let f = common::multilinear(&mut rng, m, 1 + i % 7);
        let cf = canonical_form(&f).unwrap();
        let rest = f.try_sub(&cf.to_poly()).unwrap();
        assert!(is_identity(&rest, &algebras[m - 1], &cfg()).unwrap().holds, "{f}");
    }
}

/// The 2^{m-1} canonical basis polynomials are independent modulo the
/// identities of E(2m).
#[test]
fn canonical_basis_is_independent() {
    for m in 1..=5usize {
        let e = build_algebra(&format!("E({})", 2 * m)).unwrap();
        let ids = identity_space(&e, m, &cfg()).unwrap();
        let vars: Vec<u32> = (1..=m as u32).collect();
        let basis = CanonicalForm::basis(&vars);
        assert_eq!(basis.len(), 1 << (m - 1));
        let mut ech = Echelon::new(ids.ambient_dim(), 1);
        for v in &ids.basis {
            ech.insert_dense(v);
        }
        for j in &basis {
            let p = CanonicalForm::basis_poly(&vars, j, 1);
            assert!(ech.insert(&sparse_from_dense(&ids.coordinates(&p).unwrap())), "m = {m}, J = {j}");
        }
        assert!(ech.is_full());
    }
}

#[test]
fn rewrite_orders_agree() {
    let mut rng = common::rng(2);
    for i in 0..100 {
        let m = 2 + i % 4;
        let f = common::multilinear(&mut rng, m, 2 + i % 6);
        assert_eq!(
            canonical_form_with(&f, RewriteOrder::LeftmostFirst).unwrap(),
            canonical_form_with(&f, RewriteOrder::RightmostFirst).unwrap(),
            "{f}"
        );
    }
}

#[test]
fn witnesses_are_central_and_nonzero() {
    let mut rng = common::rng(4);
    let mut done = 0;
    while done < 200 {
        let m = 1 + done % 5;
        let f = common::multilinear(&mut rng, m, 1 + done % 5);
        if canonical_form(&f).unwrap().is_zero() {
            continue;
        }
        let w = grassmann_witness(&f).unwrap();
        assert!(!w.value.is_zero(), "{f}");
        assert!(w.value.is_central(), "{f}");
        assert!(w.value.terms().keys().all(|b| b.is_even()), "{f}");
        done += 1;
    }
}
