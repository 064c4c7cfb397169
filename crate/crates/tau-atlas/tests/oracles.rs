//! Frozen expected values: small products, known modules, and the worked
//! Hasse quivers for n = 2, 3 together with the μ_4…μ_1 chain at n = 4.

mod common;

use tau_atlas::algebra::{ideal_l, ideal_m, multiply_monomials, quotient_algebra};
use tau_atlas::ideal::{
    hom_from_ideal, hom_op_from_ideal, ideal_of_gen_word, ideal_of_word, ideal_summands, maximal_ideal,
};
use tau_atlas::rep::{in_fac, is_isomorphic, is_tau_rigid, tau, IsoOptions};
use tau_atlas::stt::{left_mutation, StructuralAtlas};
use tau_atlas::symgroup::{coset_factorize, parse_permutation, parse_word};
use tau_atlas::verify::Atlas;
use tau_atlas::{build_auslander, GenWord, Monomial, Permutation, QuiverRep, TwoSidedIdeal};

fn mono(start: usize, downs: usize, ups: usize) -> Monomial {
    Monomial { start, downs, ups }
}

fn loewy(m: &QuiverRep) -> String {
    m.fingerprint().loewy_string()
}

fn summand_strings(t: &TwoSidedIdeal) -> Vec<String> {
    ideal_summands(t).iter().map(loewy).collect()
}

fn word(s: &str) -> GenWord {
    parse_word(s).unwrap()
}

// ── Products ────────────────────────────────────────────────────────────

#[test]
fn monomial_products() {
    // a_1 b_2 = 0
    assert_eq!(multiply_monomials(mono(1, 0, 1), mono(2, 1, 0)), None);
    // b_2 a_1 is the loop at 2
    assert_eq!(multiply_monomials(mono(2, 1, 0), mono(1, 0, 1)), Some(mono(2, 1, 1)));
    // a_2 b_3 = b_2 a_1
    assert_eq!(multiply_monomials(mono(2, 0, 1), mono(3, 1, 0)), Some(mono(2, 1, 1)));
    // non-composable
    assert_eq!(multiply_monomials(mono(1, 0, 1), mono(1, 0, 0)), None);
    // idempotents act trivially
    assert_eq!(multiply_monomials(mono(3, 0, 0), mono(3, 2, 1)), Some(mono(3, 2, 1)));
    assert_eq!(multiply_monomials(mono(3, 2, 1), mono(2, 0, 0)), Some(mono(3, 2, 1)));
    // (3,1,1)(3,1,1) = (3,2,2), (3,2,1)(2,1,0) hits vertex 0
    assert_eq!(multiply_monomials(mono(3, 1, 1), mono(3, 1, 1)), Some(mono(3, 2, 2)));
    assert_eq!(multiply_monomials(mono(3, 2, 1), mono(2, 1, 0)), None);
    assert_eq!(multiply_monomials(mono(4, 0, 2), mono(6, 3, 0)), Some(mono(4, 3, 2)));
}

#[test]
fn block_dimensions() {
    for n in 1..=5 {
        let a = build_auslander(n, 2).unwrap();
        assert_eq!(a.dim(), n * (n + 1) * (2 * n + 1) / 6);
        for u in 0..n {
            for v in 0..n {
                assert_eq!(a.block(u, v).len(), (u + 1).min(v + 1));
            }
        }
        assert!(a.is_associative());
    }
}

#[test]
fn preprojective_dimensions() {
    let dims: Vec<usize> = (2..=4)
        .map(|n| {
            let a = build_auslander(n, 3).unwrap();
            quotient_algebra(&a, &ideal_l(&a)).unwrap().dim()
        })
        .collect();
    assert_eq!(dims, vec![4, 10, 20]);
}

// ── Modules ─────────────────────────────────────────────────────────────

#[test]
fn projectives_and_simples() {
    let a = build_auslander(3, 2).unwrap();
    let p: Vec<String> = (0..3).map(|i| loewy(&QuiverRep::projective(&a, i))).collect();
    assert_eq!(p, vec!["1.2.3", "2.13.2.3", "3.2.13.2.3"]);
    let a4 = build_auslander(4, 2).unwrap();
    assert_eq!(loewy(&QuiverRep::projective(&a4, 3)), "4.3.24.13.24.3.4");
    assert_eq!(QuiverRep::simple(&a, 1).dims(), &[0, 1, 0]);
}

#[test]
fn isomorphism_examples() {
    let a = build_auslander(2, 2).unwrap();
    let p1 = QuiverRep::projective(&a, 0);
    let rad_p2 = QuiverRep::projective(&a, 1).radical().0;
    assert!(is_isomorphic(&p1, &rad_p2));
    assert!(!is_isomorphic(&QuiverRep::simple(&a, 0), &QuiverRep::simple(&a, 1)));
    let a4 = build_auslander(4, 3).unwrap();
    let rad_p4 = QuiverRep::projective(&a4, 3).radical().0;
    assert!(is_isomorphic(&QuiverRep::projective(&a4, 2), &rad_p4));
}

#[test]
fn fac_examples() {
    let a = build_auslander(2, 2).unwrap();
    let p1 = QuiverRep::projective(&a, 0);
    let p2 = QuiverRep::projective(&a, 1);
    assert!(in_fac(&p1, &p1));
    assert!(in_fac(&QuiverRep::simple(&a, 1), &p2));
    let rad_p1 = p1.radical().0;
    assert!(!in_fac(&p1, &rad_p1));
}

#[test]
fn quotient_examples() {
    let a = build_auslander(4, 2).unwrap();
    let bar_p3 = QuiverRep::projective(&a, 2).act_quotient(&ideal_m(&a));
    assert_eq!(bar_p3.dims(), &[1, 1, 1, 0]);
    assert_eq!(loewy(&bar_p3), "3.2.1");
    let a2 = build_auslander(2, 2).unwrap();
    let p1 = QuiverRep::projective(&a2, 0);
    assert_eq!(p1.act_quotient(&ideal_l(&a2)).dims(), p1.dims());
    assert_eq!(p1.act_quotient(&TwoSidedIdeal::zero(&a2)).dims(), p1.dims());
}

#[test]
fn tau_examples() {
    let a = build_auslander(2, 2).unwrap();
    let s1 = QuiverRep::simple(&a, 0);
    let s2 = QuiverRep::simple(&a, 1);
    assert_eq!(loewy(&tau(&s1)), "2");
    assert_eq!(loewy(&tau(&s2)), "1");
    assert!(is_tau_rigid(&s1));
    assert!(is_tau_rigid(&QuiverRep::projective(&a, 0)));
    let a3 = build_auslander(3, 2).unwrap();
    let rad_p1 = ideal_summands(&maximal_ideal(&a3, 1).unwrap())[0].clone();
    assert_eq!(loewy(&rad_p1), "2.3");
    assert!(is_tau_rigid(&rad_p1));
}

// ── Ideals ──────────────────────────────────────────────────────────────

#[test]
fn maximal_ideal_summands() {
    let a = build_auslander(2, 2).unwrap();
    assert_eq!(summand_strings(&maximal_ideal(&a, 1).unwrap()), vec!["2", "2.1.2"]);
    let a3 = build_auslander(3, 2).unwrap();
    let i2 = maximal_ideal(&a3, 2).unwrap();
    assert_eq!(ideal_summands(&i2)[1].dims(), &[1, 1, 2]);
}

#[test]
fn hom_from_maximal_ideal() {
    let a = build_auslander(2, 2).unwrap();
    let i1 = maximal_ideal(&a, 1).unwrap();
    let whole = TwoSidedIdeal::whole(&a);
    // T = I_1: TI_1 = T, and Hom(I_1, T) grows back to Λ
    assert_eq!(hom_from_ideal(1, &i1).unwrap(), whole);
    assert_eq!(hom_op_from_ideal(1, &i1).unwrap(), whole);
    assert_eq!(hom_from_ideal(1, &whole).unwrap(), whole);
}

#[test]
fn tilting_ideals_n2() {
    common::check_tilt_example(&common::TILT_N2, &common::TILT_N2_ARROWS).unwrap();
}

#[test]
fn tilting_ideals_n3() {
    common::check_tilt_example(&common::TILT_N3, &common::TILT_N3_ARROWS).unwrap();
    let a = build_auslander(3, 2).unwrap();
    let braid = ideal_of_gen_word(&a, &word("2,1,2")).unwrap();
    assert_eq!(braid, ideal_of_gen_word(&a, &word("1,2,1")).unwrap());
}

#[test]
fn ideal_of_permutation() {
    let a = build_auslander(3, 2).unwrap();
    let w = parse_permutation("[2,3,1]").unwrap();
    let t = ideal_of_word(&a, &w).unwrap();
    // [2,3,1] = s_1s_2
    assert_eq!(t, ideal_of_gen_word(&a, &word("1,2")).unwrap());
    assert_eq!(summand_strings(&t), vec!["3", "13.2.3", "3.2.13.2.3"]);
    assert_eq!(ideal_of_word(&a, &Permutation::identity(3)).unwrap(), TwoSidedIdeal::whole(&a));
}

// ── Support τ-tilting ───────────────────────────────────────────────────

#[test]
fn stt_quiver_n2() {
    let atlas = Atlas::build(2, 2, 1, 0).unwrap();
    common::check_stt_example(&atlas, &common::STT_N2, &common::STT_N2_ARROWS).unwrap();
}

#[test]
fn stt_quiver_n3() {
    let atlas = Atlas::build(3, 2, 1, 0).unwrap();
    common::check_stt_example(&atlas, &common::STT_N3, &common::STT_N3_ARROWS).unwrap();
}

#[test]
fn mutation_chain_n4() {
    common::check_mu_chain(&common::structural(4)).unwrap();
    let w = parse_permutation("[2,3,4,5,1]").unwrap();
    let (i, v) = coset_factorize(&w);
    assert_eq!(i, 0);
    assert!(v.is_identity());
}

#[test]
fn mutation_examples_n2() {
    let a = build_auslander(2, 2).unwrap();
    let s = StructuralAtlas::build(&a, 1, IsoOptions::default()).unwrap();
    let top = s.mu_interval(s.tilt.find(&TwoSidedIdeal::whole(&a)).unwrap(), 2).unwrap();
    let first = left_mutation(&s.catalog, &top, 0).unwrap().unwrap();
    assert_eq!(common::pair_strings(&s.catalog, &first), vec!["2", "2.1.2"]);
    // from the S_2-only pair the last summand mutates to the zero pair
    let s2_only = left_mutation(&s.catalog, &first, 1).unwrap().unwrap();
    assert_eq!(common::pair_strings(&s.catalog, &s2_only), vec!["2"]);
    let zero = left_mutation(&s.catalog, &s2_only, 0).unwrap().unwrap();
    assert!(zero.modules().is_empty());
    assert_eq!(zero.complement(), vec![0, 1]);
    assert_eq!(left_mutation(&s.catalog, &zero, 0).unwrap(), None);
}
