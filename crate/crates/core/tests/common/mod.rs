#![allow(dead_code)]

use proptest::prelude::*;
use welded_core::series::lie::LyndonBasis;
use welded_core::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

/// Sparse series over `al` with up to `terms` terms of degree `min..=cap`.
pub fn series(al: Alphabet, cap: usize, min: usize, terms: usize) -> impl Strategy<Value = TruncatedSeries> {
    let m = al.size() as u8;
    let term = (min..=cap).prop_flat_map(move |k| (proptest::collection::vec(0..m, k), rational()));
    proptest::collection::vec(term, 0..=terms).prop_map(move |ts| {
        let mut s = TruncatedSeries::zero(al.clone(), cap);
        for (w, c) in ts {
            s.add_term(Word::from_letters(&w), c);
        }
        s
    })
}

/// `1 + x` with `x` of positive degree.
pub fn unipotent(al: Alphabet, cap: usize, terms: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(al.clone(), cap, 1, terms).prop_map(move |x| TruncatedSeries::one(al.clone(), cap).add(&x).unwrap())
}

/// A random Lie element, given by Lyndon coordinates in each degree.
pub fn lie_element(al: Alphabet, cap: usize) -> impl Strategy<Value = TruncatedSeries> {
    let bases: Vec<LyndonBasis> = (1..=cap).map(|k| LyndonBasis::new(&al, k, cap).unwrap()).collect();
    let lens: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let coords = lens
        .into_iter()
        .map(|l| proptest::collection::vec(prop_oneof![3 => Just(q(0, 1)), 1 => rational()], l))
        .collect::<Vec<_>>();
    coords.prop_map(move |cs| {
        let mut x = TruncatedSeries::zero(al.clone(), cap);
        for (b, c) in bases.iter().zip(&cs) {
            x = x.add(&b.combine(c).unwrap()).unwrap();
        }
        x
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    let all = Permutation::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

pub fn welded_word(n: usize, max_len: usize) -> impl Strategy<Value = WeldedWord> {
    let letters = WeldedWord::alphabet(n);
    proptest::collection::vec(0..letters.len(), 0..=max_len)
        .prop_map(move |ix| WeldedWord::from_letters(n, ix.into_iter().map(|i| letters[i]).collect()).unwrap())
}

pub fn braid_word(n: usize, max_len: usize) -> impl Strategy<Value = WeldedWord> {
    proptest::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls
            .into_iter()
            .map(|(i, inverse)| Letter::Sigma { i, inverse })
            .collect();
        WeldedWord::from_letters(n, letters).unwrap()
    })
}
