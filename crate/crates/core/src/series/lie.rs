//! Lie elements of the free associative algebra.
//!
//! Detection uses the Dynkin map `theta(a1 a2 .. ak) = [..[a1, a2], .., ak]`:
//! a homogeneous element `x` of degree `k` is Lie iff `theta(x) = k x`.
//! Coordinates use the Lyndon basis with standard bracketing.

use num_traits::Zero;

use super::{Alphabet, Gen, TruncatedSeries, Word};
use crate::error::{Error, Result};
use crate::Rational;

/// Signed expansion of the left-normed bracket of the letters of `w`.
fn left_normed(w: &Word) -> Vec<(Word, i64)> {
    let letters = w.letters();
    let Some((&first, rest)) = letters.split_first() else {
        return Vec::new();
    };
    let mut terms = vec![(Word::letter(first), 1i64)];
    for &g in rest {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (u, c) in &terms {
            next.push((u.concat(&Word::letter(g)), *c));
            next.push((Word::letter(g).concat(u), -*c));
        }
        terms = next;
    }
    terms
}

impl TruncatedSeries {
    /// The Dynkin map applied word by word; the constant term maps to zero.
    pub fn dynkin(&self) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.alphabet.clone(), self.cap);
        for (w, c) in &self.coeffs {
            for (u, sign) in left_normed(w) {
                out.add_term(u, c * Rational::from_integer(sign.into()));
            }
        }
        out
    }

    /// Per-degree Lie verdicts for degrees `1..=cap`.
    pub fn lie_components(&self) -> Result<Vec<(usize, bool)>> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let theta = self.dynkin();
        Ok((1..=self.cap)
            .map(|k| {
                let x = self.homogeneous(k);
                let expected = x.scale(&Rational::from_integer(k.into()));
                (k, theta.homogeneous(k) == expected)
            })
            .collect())
    }

    /// True iff every homogeneous component is a Lie element.
    pub fn is_lie_element(&self) -> Result<bool> {
        Ok(self.lie_components()?.iter().all(|&(_, ok)| ok))
    }
}

/// Lyndon words of length `k` over `m` letters in lexicographic order (Duval).
pub fn lyndon_words(m: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if m == 0 || k == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    while !w.is_empty() {
        if w.len() == k {
            out.push(Word(w.iter().map(|&g| g as Gen).collect()));
        }
        let base = w.clone();
        while w.len() < k {
            w.push(base[w.len() % base.len()]);
        }
        while w.last() == Some(&(m - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

fn is_lyndon(w: &[Gen]) -> bool {
    (1..w.len()).all(|i| w < &w[i..])
}

/// Split a Lyndon word `w = u v` with `v` its longest proper Lyndon suffix.
pub fn standard_factorization(w: &Word) -> Option<(Word, Word)> {
    let l = w.letters();
    (1..l.len())
        .find(|&i| is_lyndon(&l[i..]))
        .map(|i| (Word::from_letters(&l[..i]), Word::from_letters(&l[i..])))
}

/// Standard bracketing of a Lyndon word, expanded in the free algebra.
pub fn lyndon_bracket(w: &Word, alphabet: &Alphabet, cap: usize) -> Result<TruncatedSeries> {
    if w.degree() == 1 {
        return Ok(TruncatedSeries::generator(alphabet.clone(), cap, w.letters()[0]));
    }
    let (u, v) = standard_factorization(w).ok_or_else(|| Error::InvalidWord("not a Lyndon word".into()))?;
    lyndon_bracket(&u, alphabet, cap)?.commutator(&lyndon_bracket(&v, alphabet, cap)?)
}

/// The Lyndon basis of the degree-`k` part of the free Lie algebra.
#[derive(Clone, Debug)]
pub struct LyndonBasis {
    alphabet: Alphabet,
    degree: usize,
    words: Vec<Word>,
    elements: Vec<TruncatedSeries>,
}

impl LyndonBasis {
    /// Elements are expanded at `cap`, which must be at least `degree`.
    pub fn new(alphabet: &Alphabet, degree: usize, cap: usize) -> Result<Self> {
        if degree > cap {
            return Err(Error::InsufficientCap {
                needed: degree,
                available: cap,
            });
        }
        let words = lyndon_words(alphabet.size(), degree);
        let elements = words
            .iter()
            .map(|w| lyndon_bracket(w, alphabet, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(LyndonBasis {
            alphabet: alphabet.clone(),
            degree,
            words,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn elements(&self) -> &[TruncatedSeries] {
        &self.elements
    }

    /// Bracket notation of the `i`-th basis element, e.g. `[A,[A,B]]`.
    pub fn label(&self, i: usize) -> String {
        fn go(w: &Word, al: &Alphabet) -> String {
            match standard_factorization(w) {
                None => al.name(w.letters()[0]),
                Some((u, v)) => format!("[{},{}]", go(&u, al), go(&v, al)),
            }
        }
        go(&self.words[i], &self.alphabet)
    }

    /// `sum c_i P_i` for coefficients in basis order.
    pub fn combine(&self, coeffs: &[Rational]) -> Result<TruncatedSeries> {
        let cap = self.elements.first().map_or(self.degree, |e| e.cap());
        let mut out = TruncatedSeries::zero(self.alphabet.clone(), cap);
        for (c, e) in coeffs.iter().zip(&self.elements) {
            out = out.add(&e.scale(c))?;
        }
        Ok(out)
    }

    /// Coordinates of a homogeneous Lie element of this degree.
    ///
    /// The lex-smallest word of the bracket of a Lyndon word `w` is `w` itself
    /// with coefficient one, so elimination is triangular.
    pub fn coordinates(&self, x: &TruncatedSeries) -> Result<Vec<Rational>> {
        let mut rest = x.homogeneous(self.degree);
        if rest.len() != x.len() {
            return Err(Error::NotGroupLike(format!(
                "element is not homogeneous of degree {}",
                self.degree
            )));
        }
        let mut coeffs = vec![Rational::zero(); self.words.len()];
        loop {
            let lowest = rest.terms().next().map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = lowest else { break };
            let i = self
                .words
                .binary_search_by(|probe| probe.letters().cmp(w.letters()))
                .map_err(|_| Error::NotGroupLike(format!("{x} is not a Lie element")))?;
            let e = if self.elements[i].cap() == rest.cap() {
                self.elements[i].clone()
            } else {
                self.elements[i].pad_to_cap(rest.cap())
            };
            rest = rest.sub(&e.scale(&c))?;
            coeffs[i] += c;
        }
        Ok(coeffs)
    }
}

/// Number of Lyndon words (dimension of the free Lie algebra) by Witt's formula.
pub fn witt_dimension(m: usize, k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    let mut total: i128 = 0;
    for d in 1..=k {
        if k.is_multiple_of(d) {
            total += mobius(d) as i128 * (m as i128).pow((k / d) as u32);
        }
    }
    (total / k as i128) as usize
}

fn mobius(mut d: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if d > 1 {
        result = -result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(text: &str, cap: usize) -> TruncatedSeries {
        TruncatedSeries::parse(text, &Alphabet::ab(), cap).unwrap()
    }

    #[test]
    fn commutator_is_lie() {
        assert!(ab("1*A.B - 1*B.A", 2).is_lie_element().unwrap());
        assert!(!ab("1*A.B", 2).is_lie_element().unwrap());
        assert_eq!(ab("1", 2).is_lie_element(), Err(Error::NonzeroConstant));
    }

    #[test]
    fn per_degree_verdicts() {
        let s = ab("1*A + 1*A.B", 3);
        assert_eq!(s.lie_components().unwrap(), vec![(1, true), (2, false), (3, true)]);
    }

    #[test]
    fn bch_is_lie() {
        let a = TruncatedSeries::generator(Alphabet::ab(), 4, 0);
        let b = TruncatedSeries::generator(Alphabet::ab(), 4, 1);
        let z = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap().log().unwrap();
        assert!(z.is_lie_element().unwrap());
        // the Lyndon expansion recovers it degree by degree
        for k in 1..=4 {
            let basis = LyndonBasis::new(&Alphabet::ab(), k, 4).unwrap();
            let c = basis.coordinates(&z.homogeneous(k)).unwrap();
            assert_eq!(basis.combine(&c).unwrap(), z.homogeneous(k));
        }
    }

    #[test]
    fn lyndon_counts_match_witt() {
        for m in 1..=4 {
            for k in 1..=6 {
                assert_eq!(lyndon_words(m, k).len(), witt_dimension(m, k), "m={m} k={k}");
            }
        }
        let words: Vec<String> = lyndon_words(2, 3)
            .iter()
            .map(|w| w.letters().iter().map(|g| g.to_string()).collect())
            .collect();
        assert_eq!(words, vec!["001", "011"]);
    }

    #[test]
    fn labels_use_standard_bracketing() {
        let basis = LyndonBasis::new(&Alphabet::ab(), 3, 3).unwrap();
        assert_eq!(basis.label(0), "[A,[A,B]]");
        assert_eq!(basis.label(1), "[[A,B],B]");
    }

    #[test]
    fn non_lie_coordinates_fail() {
        let basis = LyndonBasis::new(&Alphabet::ab(), 2, 2).unwrap();
        assert!(basis.coordinates(&ab("1*B.A", 2)).is_err());
        assert!(basis.coordinates(&ab("1*A", 2)).is_err());
    }
}
