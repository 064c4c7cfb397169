use proptest::prelude::*;

use tau_atlas::algebra::{ideal_l, two_sided_closure};
use tau_atlas::ideal::{ideal_product, left_mul_maximal, maximal_ideal, right_mul_maximal};
use tau_atlas::rep::{direct_sum, find_isomorphism, hom_dim, IsoOptions, IsoVerdict};
use tau_atlas::symgroup::{
    braid_neighbors, canonical_reduced_word, compose, coset_factorize, coset_prefix, evaluate_word, inversion_length,
    is_reduced, left_leq, parse_permutation, reduce_word,
};
use tau_atlas::{build_auslander, GenWord, Matrix, Permutation, QuiverRep, Subspace};

fn perm(max_m: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_m)
        .prop_flat_map(|m| Just((1..=m).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn word_in(m: usize, max_len: usize) -> impl Strategy<Value = GenWord> {
    prop::collection::vec(1..m, 0..=max_len).prop_map(GenWord::new)
}

fn pair_same_degree(max_m: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..=max_m).prop_flat_map(|m| {
        let p = Just((1..=m).collect::<Vec<usize>>()).prop_shuffle();
        (p.clone(), p).prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

proptest! {
    #[test]
    fn canonical_word_is_reduced(w in perm(7)) {
        let word = canonical_reduced_word(&w);
        prop_assert_eq!(word.len(), inversion_length(&w));
        prop_assert_eq!(evaluate_word(&word, w.degree()).unwrap(), w.clone());
        prop_assert!(is_reduced(&word, w.degree()).unwrap());
    }

    #[test]
    fn inverse_and_composition((u, w) in pair_same_degree(7)) {
        let m = w.degree();
        prop_assert!(compose(&w, &w.inverse()).unwrap().is_identity());
        prop_assert_eq!(inversion_length(&w.inverse()), inversion_length(&w));
        let uw = compose(&u, &w).unwrap();
        for i in 1..=m {
            prop_assert_eq!(uw.apply(i), u.apply(w.apply(i)));
        }
        prop_assert!(inversion_length(&uw) <= inversion_length(&u) + inversion_length(&w));
    }

    #[test]
    fn simple_multiplication(w in perm(7), k in 1usize..7) {
        let m = w.degree();
        prop_assume!(k < m);
        let s = Permutation::simple(m, k).unwrap();
        prop_assert_eq!(w.left_mul_simple(k), compose(&s, &w).unwrap());
        prop_assert_eq!(w.right_mul_simple(k), compose(&w, &s).unwrap());
        let d = inversion_length(&w.left_mul_simple(k)) as i64 - inversion_length(&w) as i64;
        prop_assert!(d == 1 || d == -1);
    }

    #[test]
    fn braid_moves_preserve_the_element(word in word_in(6, 10)) {
        let w = evaluate_word(&word, 6).unwrap();
        for nb in braid_neighbors(&word) {
            prop_assert_eq!(evaluate_word(&nb, 6).unwrap(), w.clone());
        }
    }

    #[test]
    fn reduction_is_reduced_and_equivalent(word in word_in(5, 14)) {
        let r = reduce_word(&word, 5).unwrap();
        prop_assert_eq!(evaluate_word(&r, 5).unwrap(), evaluate_word(&word, 5).unwrap());
        prop_assert!(is_reduced(&r, 5).unwrap());
        prop_assert!(r.len() <= word.len());
        prop_assert_eq!(r.len() % 2, word.len() % 2);
    }

    #[test]
    fn coset_factorization(w in perm(7)) {
        let m = w.degree();
        let (i, v) = coset_factorize(&w);
        prop_assert!(i < m);
        prop_assert_eq!(v.degree(), m - 1);
        let prefix = evaluate_word(&coset_prefix(i, m - 1), m).unwrap();
        prop_assert_eq!(compose(&prefix, &v.extend_to(m)).unwrap(), w.clone());
        prop_assert_eq!(inversion_length(&w), (m - 1 - i) + inversion_length(&v));
    }

    #[test]
    fn left_order_is_suffix_order(w in perm(6), k in 1usize..6) {
        let m = w.degree();
        prop_assume!(k < m);
        let up = w.left_mul_simple(k);
        let (lo, hi) = if inversion_length(&up) > inversion_length(&w) { (&w, &up) } else { (&up, &w) };
        prop_assert!(left_leq(lo, hi).unwrap());
        prop_assert!(!left_leq(hi, lo).unwrap());
        prop_assert!(left_leq(&Permutation::identity(m), &w).unwrap());
        prop_assert!(left_leq(&w, &Permutation::longest(m)).unwrap());
    }

    #[test]
    fn permutation_text_roundtrip(w in perm(9)) {
        prop_assert_eq!(parse_permutation(&w.to_string()).unwrap(), w);
    }
}

fn element(n: usize, p: u32) -> impl Strategy<Value = Vec<u32>> {
    let dim = n * (n + 1) * (2 * n + 1) / 6;
    prop::collection::vec(0..p, dim)
}

fn algebra_case() -> impl Strategy<Value = (usize, u32, Vec<u32>, Vec<u32>, Vec<u32>)> {
    (1usize..=4, prop_oneof![Just(2u32), Just(3u32), Just(5u32)])
        .prop_flat_map(|(n, p)| (Just(n), Just(p), element(n, p), element(n, p), element(n, p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_and_unital((n, p, x, y, z) in algebra_case()) {
        let a = build_auslander(n, p).unwrap();
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(&a.one(), &x), x.clone());
        prop_assert_eq!(a.mul(&x, &a.one()), x.clone());
        let sum: Vec<u32> = y.iter().zip(&z).map(|(&u, &v)| (u + v) % p).collect();
        let lhs = a.mul(&x, &sum);
        let rhs: Vec<u32> = a.mul(&x, &y).iter().zip(a.mul(&x, &z)).map(|(&u, v)| (u + v) % p).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closures_are_ideals((n, p, x, y, z) in algebra_case()) {
        let a = build_auslander(n, p).unwrap();
        let j = two_sided_closure(&a, &[x.clone()]);
        prop_assert!(j.contains(&x));
        prop_assert!(j.contains(&a.mul(&y, &a.mul(&x, &z))));
        let l = ideal_l(&a);
        prop_assert!(l.contains(&a.mul(&y, &a.mul(&l.space().basis().row_vecs().first().cloned().unwrap_or(a.zero()), &z))));
    }

    #[test]
    fn maximal_ideal_relations(n in 2usize..=4, i in 1usize..4, j in 1usize..4) {
        prop_assume!(i <= n && j <= n);
        let a = build_auslander(n, 2).unwrap();
        let ii = maximal_ideal(&a, i).unwrap();
        let jj = maximal_ideal(&a, j).unwrap();
        prop_assert_eq!(ideal_product(&ii, &ii).unwrap(), ii.clone());
        let ij = ideal_product(&ii, &jj).unwrap();
        prop_assert_eq!(left_mul_maximal(i, &jj).unwrap(), ij.clone());
        prop_assert_eq!(right_mul_maximal(&ii, j).unwrap(), ij.clone());
        if i.abs_diff(j) >= 2 {
            prop_assert_eq!(ij, ideal_product(&jj, &ii).unwrap());
        }
    }
}

fn matrix_of(p: u32, r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, r * c).prop_map(move |v| Matrix::from_fn(p, r, c, |i, j| v[i * c + j]))
}

fn matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| matrix_of(p, r, c))
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(3, 7)) {
        prop_assert_eq!(m.rank() + m.null_space().rows(), m.cols());
        prop_assert_eq!(m.rank() + m.left_null_space().rows(), m.rows());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ns = m.null_space();
        if ns.rows() > 0 {
            prop_assert!(m.mul(&ns.transpose()).is_zero());
        }
        let ls = m.left_null_space();
        if ls.rows() > 0 {
            prop_assert!(ls.mul(&m).is_zero());
        }
    }

    #[test]
    fn subspace_dimension_formula((a, b) in (1usize..=6).prop_flat_map(|c| (matrix_of(2, 3, c), matrix_of(2, 4, c)))) {
        let u = Subspace::span(&a);
        let v = Subspace::span(&b);
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.sum(&v).contains_space(&u));
        prop_assert!(u.contains_space(&u.intersect(&v)));
    }

    #[test]
    fn invertible_inverse(m in (1usize..=5).prop_flat_map(|k| matrix_of(5, k, k))) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(5, m.rows()));
        } else {
            prop_assert!(m.rank() < m.rows());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_is_additive(n in 1usize..=3, picks in prop::collection::vec((0usize..3, any::<bool>()), 1..4), target in 0usize..3) {
        let a = build_auslander(n, 3).unwrap();
        let mods: Vec<QuiverRep> = picks
            .iter()
            .filter(|(v, _)| *v < n)
            .map(|&(v, proj)| if proj { QuiverRep::projective(&a, v) } else { QuiverRep::simple(&a, v) })
            .collect();
        prop_assume!(!mods.is_empty() && target < n);
        let sum = direct_sum(&mods.iter().collect::<Vec<_>>());
        let y = QuiverRep::projective(&a, target);
        prop_assert_eq!(hom_dim(&sum, &y), mods.iter().map(|m| hom_dim(m, &y)).sum::<usize>());
        prop_assert_eq!(hom_dim(&y, &sum), mods.iter().map(|m| hom_dim(&y, m)).sum::<usize>());
        // Hom(P_v, M) = M e_v
        prop_assert_eq!(hom_dim(&y, &sum), sum.dim(target));
        prop_assert_eq!(find_isomorphism(&sum, &sum, &IsoOptions::default()).0, IsoVerdict::Isomorphic);
    }
}
