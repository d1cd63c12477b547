mod common;

use codeideal::binomial::parse_binomial;
use codeideal::generators::{build_generalized_generators, build_ordinary_generators, word_of_binomial};
use codeideal::graver::{
    code_toric_ideal, extended_code_matrix, graver, graver_bruteforce, graver_generalized, graver_ordinary,
};
use codeideal::groebner::buchberger;
use codeideal::universal::{universal_basis, universal_basis_char2, universal_decision};
use codeideal::{FieldElement::Power, FieldElement::Zero, FiniteField, IdealKind, LinearCode, MonomialOrder};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{f3_code, gf2, gf3};

fn gf8() -> FiniteField {
    FiniteField::new(2, 3, &[1, 1, 0, 1], None).unwrap()
}

fn assert_matches_oracle(code: &LinearCode, kind: IdealKind) {
    let fast = graver(code, kind, &MonomialOrder::degrevlex()).unwrap();
    let oracle = graver_bruteforce(code, kind).unwrap();
    assert_eq!(fast.elements(), oracle.elements(), "q={} n={} k={} {kind:?}", code.field().q(), code.n(), code.k());
    fast.check_invariants().unwrap();
}

#[test]
fn gf8_ordinary_matches_oracle() {
    // the multiplication matrices of GF(8) are not symmetric, so these codes
    // pin down the orientation of the blocks of H_e
    for h in [[Power(1), Power(7)], [Power(3), Power(5)], [Power(7), Power(7)], [Power(2), Zero]] {
        let code = LinearCode::from_parity(gf8(), 2, vec![h.to_vec()]).unwrap();
        assert_matches_oracle(&code, IdealKind::Ordinary);
    }
}

#[test]
fn extension_fields_match_oracle() {
    let gf4 = FiniteField::new(2, 2, &[1, 1, 1], None).unwrap();
    let gf9 = FiniteField::new(3, 2, &[2, 1, 1], None).unwrap();
    for ff in [gf4.clone(), gf9] {
        for n in 1..=2 {
            for k in 0..=n {
                for g in common::rref_generators(&ff, n, k) {
                    let code = LinearCode::from_generator(ff.clone(), n, g).unwrap();
                    assert_matches_oracle(&code, IdealKind::Ordinary);
                }
            }
        }
    }
    for g in common::rref_generators(&gf4, 2, 1) {
        assert_matches_oracle(&LinearCode::from_generator(gf4.clone(), 2, g).unwrap(), IdealKind::Generalized);
    }
}

#[test]
fn small_generalized_ideals_match_oracle() {
    for ff in [gf2(), gf3()] {
        for n in 1..=2 {
            for k in 0..=n {
                for g in common::rref_generators(&ff, n, k) {
                    assert_matches_oracle(
                        &LinearCode::from_generator(ff.clone(), n, g).unwrap(),
                        IdealKind::Generalized,
                    );
                }
            }
        }
    }
}

#[test]
fn graver_basis_does_not_depend_on_the_order() {
    for code in common::sample_codes().iter().chain([&f3_code(), &common::f4_code()]) {
        let lex = graver_ordinary(code, &MonomialOrder::lex()).unwrap();
        let drl = graver_ordinary(code, &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(lex.elements(), drl.elements());
    }
}

#[test]
fn graver_elements_encode_codewords() {
    for (code, kind) in [(f3_code(), IdealKind::Ordinary), (common::f4_code(), IdealKind::Generalized)] {
        for b in graver(&code, kind, &MonomialOrder::degrevlex()).unwrap().elements() {
            assert!(word_of_binomial(&code, b, kind).unwrap().is_some());
        }
    }
}

#[test]
fn toric_generators_lie_in_the_lattice() {
    for (code, kind) in [(f3_code(), IdealKind::Ordinary), (common::f4_code(), IdealKind::Generalized)] {
        let m = extended_code_matrix(&code, kind);
        for b in &code_toric_ideal(&code, kind).unwrap() {
            assert!(m.mul_vec(&b.difference()).iter().all(|&x| x == 0));
        }
    }
}

/// Every reduced Gröbner basis, for any order, must lie in the universal basis.
#[test]
fn sampled_reduced_bases_lie_in_the_universal_basis() {
    let mut rng = StdRng::seed_from_u64(7);
    let f4 = common::f4_code();
    let cases = [
        (f3_code(), IdealKind::Ordinary, build_ordinary_generators(&f3_code()).unwrap()),
        (f4.clone(), IdealKind::Generalized, build_generalized_generators(&f4).unwrap()),
    ];
    for (code, kind, gens) in &cases {
        let gr = graver(code, *kind, &MonomialOrder::degrevlex()).unwrap();
        let u = universal_basis(&gr);
        let dim = gens.space().dim();
        for _ in 0..40 {
            let w: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..6)).collect();
            let tie = if rng.gen() { MonomialOrder::lex() } else { MonomialOrder::degrevlex() };
            let order = MonomialOrder::weighted(w, tie).unwrap();
            let g = buchberger(gens, &order).to_set();
            assert!(g.is_subset(u.elements()), "reduced basis escapes the universal basis");
        }
    }
}

/// `x1 - x3` divides both monomials of `x1x3^2 - 1` side-wise from the same
/// side, so no order puts that binomial in a reduced basis.
#[test]
fn f3_cubic_binomials_appear_in_no_reduced_basis() {
    let code = f3_code();
    let gens = build_ordinary_generators(&code).unwrap();
    let space = gens.space().clone();
    let cubics = ["x[1,1]*x[3,1]^2 - 1", "x[1,1]^2*x[3,1] - 1"].map(|l| parse_binomial(l, &space).unwrap());
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let w: Vec<i64> = (0..3).map(|_| rng.gen_range(0..10)).collect();
        let order = MonomialOrder::weighted(w, MonomialOrder::lex()).unwrap();
        let g = buchberger(&gens, &order).to_set();
        for c in &cubics {
            assert!(!g.contains(c));
        }
    }
    let u = universal_basis(&graver_ordinary(&code, &MonomialOrder::degrevlex()).unwrap());
    assert_eq!(u.len(), 10);
}

#[test]
fn universal_decision_ignores_input_orientation() {
    for (code, kind) in [(f3_code(), IdealKind::Ordinary), (common::f4_code(), IdealKind::Generalized)] {
        let gr = graver(&code, kind, &MonomialOrder::degrevlex()).unwrap();
        for g in gr.elements() {
            let a = universal_decision(g, &gr).map(|(b, _)| b);
            let b = universal_decision(&g.swapped(), &gr).map(|(b, _)| b);
            assert_eq!(a, b);
        }
    }
}

#[test]
fn char2_shortcut_agrees_with_cones() {
    let gf4 = FiniteField::new(2, 2, &[1, 1, 1], None).unwrap();
    let mut codes: Vec<LinearCode> = Vec::new();
    for n in 1..=3 {
        for k in 0..=n {
            codes.extend(
                common::rref_generators(&gf2(), n, k)
                    .into_iter()
                    .map(|g| LinearCode::from_generator(gf2(), n, g).unwrap()),
            );
        }
    }
    for g in common::rref_generators(&gf4, 2, 1) {
        codes.push(LinearCode::from_generator(gf4.clone(), 2, g).unwrap());
    }
    for code in &codes {
        let gr = graver_generalized(code, &MonomialOrder::degrevlex()).unwrap();
        assert_eq!(universal_basis(&gr).elements(), universal_basis_char2(&gr).unwrap().elements());
    }
}
