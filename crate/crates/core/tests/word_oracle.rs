mod common;

use common::*;
use proptest::prelude::*;
use welded_core::invariants::swap_word;
use welded_core::words::{braid_relations, mccool_relations, words_equal_in_bp};
use welded_core::*;

#[test]
fn mccool_relations_hold() {
    for n in 2..=4 {
        for (lhs, rhs) in mccool_relations(n) {
            assert!(words_equal_in_bp(&lhs, &rhs).unwrap(), "n = {n}: {lhs} != {rhs}");
        }
        for (lhs, rhs) in braid_relations(n) {
            assert!(words_equal_in_bp(&lhs, &rhs).unwrap(), "n = {n}: {lhs} != {rhs}");
        }
    }
}

#[test]
fn swaps_conjugate_generators_equivariantly() {
    for n in 2..=4 {
        for p in Permutation::all(n) {
            let s = swap_word(&p).unwrap();
            assert_eq!(s.permutation(), p);
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let lhs = s
                        .concat(&WeldedWord::conj(n, i, j).unwrap())
                        .unwrap()
                        .concat(&s.inverse())
                        .unwrap();
                    let rhs = WeldedWord::conj(n, p.apply(i), p.apply(j)).unwrap();
                    assert!(words_equal_in_bp(&lhs, &rhs).unwrap(), "{s} a{i}{j} {s}^-1");
                }
            }
        }
    }
}

#[test]
fn sigma_is_conjugation_then_swap() {
    for n in 2..=4 {
        for i in 1..n {
            let sigma = WeldedWord::sigma(n, i).unwrap();
            let split = WeldedWord::conj(n, i, i + 1)
                .unwrap()
                .concat(&WeldedWord::swap(n, i).unwrap())
                .unwrap();
            assert!(words_equal_in_bp(&sigma, &split).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn braid_words_fix_the_product(n in 2usize..=4, seed in braid_word(4, 10)) {
        let letters: Vec<Letter> = seed
            .letters()
            .iter()
            .copied()
            .filter(|l| matches!(l, Letter::Sigma { i, .. } if *i < n))
            .collect();
        let w = WeldedWord::from_letters(n, letters).unwrap();
        prop_assert!(w.as_automorphism().fixes_product());
        prop_assert!(w.is_braid());
    }

    #[test]
    fn images_are_conjugates_of_generators(w in welded_word(4, 10)) {
        let phi = w.as_automorphism();
        let p = w.permutation();
        prop_assert_eq!(phi.permutation().unwrap(), p.clone());
        for (k, img) in phi.images().iter().enumerate() {
            let l = img.letters();
            let mid = l.len() / 2;
            prop_assert_eq!(l.len() % 2, 1);
            prop_assert_eq!(l[mid], p.apply(k + 1) as i16);
            let head = FreeWord::from_letters(l[..mid].iter().copied());
            let tail = FreeWord::from_letters(l[mid + 1..].iter().copied());
            prop_assert_eq!(head.inverse(), tail);
        }
    }

    #[test]
    fn words_times_inverses_are_trivial(w in welded_word(3, 10)) {
        let id = WeldedWord::identity(3);
        prop_assert!(words_equal_in_bp(&w.concat(&w.inverse()).unwrap(), &id).unwrap());
        prop_assert!(words_equal_in_bp(&w.inverse().concat(&w).unwrap(), &id).unwrap());
    }

    #[test]
    fn word_text_roundtrip(w in welded_word(4, 8)) {
        prop_assert_eq!(WeldedWord::parse(&w.to_string(), 4).unwrap(), w);
    }

    #[test]
    fn automorphisms_compose(u in welded_word(3, 6), v in welded_word(3, 6)) {
        let uv = u.concat(&v).unwrap().as_automorphism();
        prop_assert_eq!(uv, u.as_automorphism().compose(&v.as_automorphism()).unwrap());
    }
}

#[test]
fn powers_expand_at_parse_time() {
    let w = WeldedWord::parse("a12^3 sig1^-2 s2", 3).unwrap();
    assert_eq!(w.len(), 6);
    let v = WeldedWord::parse("a12 a12 a12 sig1^-1 sig1^-1 s2", 3).unwrap();
    assert_eq!(w, v);
    assert!(WeldedWord::parse("a14", 3).is_err());
    assert!(WeldedWord::parse("s3", 3).is_err());
}

#[test]
fn group_ring_text() {
    let x = GroupRingElement::parse("1*[sig1] - 1*[s1]", 3).unwrap();
    assert_eq!(GroupRingElement::parse(&x.to_string(), 3).unwrap(), x);
}
