//! Truncated noncommutative power series over the rationals.
//!
//! A [`TruncatedSeries`] is a finite map from words in an [`Alphabet`] to
//! nonzero rationals, together with an explicit degree cap. Every coefficient
//! of degree at most the cap is known exactly; nothing above it is stored.
//!
//! Invariants:
//! - no stored coefficient is zero
//! - no stored word is longer than the cap
//! - binary operations require equal alphabets and equal caps

mod analytic;
pub mod lie;
mod subst;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::Rational;

pub(crate) use text::text_word;
pub use text::{format_rational, parse_rational};

/// Index of a generator inside its alphabet.
pub type Gen = u8;

/// The generating set of a free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Symmetric chord generators `t_ij = t_ji`, `1 <= i < j <= n`.
    Chord(usize),
    /// Ordered generators `v_ij`, `1 <= i != j <= n`.
    Oriented(usize),
    /// Named generators, e.g. `A`, `B` for associator series.
    Abstract(Vec<String>),
}

impl Alphabet {
    /// The two-letter alphabet `{A, B}`.
    pub fn ab() -> Self {
        Alphabet::Abstract(vec!["A".to_string(), "B".to_string()])
    }

    pub fn size(&self) -> usize {
        match self {
            Alphabet::Chord(n) => n * n.saturating_sub(1) / 2,
            Alphabet::Oriented(n) => n * n.saturating_sub(1),
            Alphabet::Abstract(names) => names.len(),
        }
    }

    /// Number of strands for chord and oriented alphabets.
    pub fn strands(&self) -> Option<usize> {
        match self {
            Alphabet::Chord(n) | Alphabet::Oriented(n) => Some(*n),
            Alphabet::Abstract(_) => None,
        }
    }

    /// Generator index of `t_ij` (either order) or `v_ij`; indices are 1-based.
    pub fn pair_index(&self, i: usize, j: usize) -> Option<Gen> {
        match self {
            Alphabet::Chord(n) => {
                let (i, j) = if i < j { (i, j) } else { (j, i) };
                if i == 0 || i == j || j > *n {
                    return None;
                }
                let before: usize = (1..i).map(|a| n - a).sum();
                Some((before + (j - i - 1)) as Gen)
            }
            Alphabet::Oriented(n) => {
                if i == 0 || j == 0 || i == j || i > *n || j > *n {
                    return None;
                }
                let col = if j < i { j - 1 } else { j - 2 };
                Some(((i - 1) * (n - 1) + col) as Gen)
            }
            Alphabet::Abstract(_) => None,
        }
    }

    /// The 1-based index pair of a chord or oriented generator.
    pub fn pair(&self, g: Gen) -> Option<(usize, usize)> {
        let g = g as usize;
        match self {
            Alphabet::Chord(n) => {
                let mut k = g;
                for i in 1..*n {
                    let row = n - i;
                    if k < row {
                        return Some((i, i + 1 + k));
                    }
                    k -= row;
                }
                None
            }
            Alphabet::Oriented(n) => {
                if *n < 2 || g >= self.size() {
                    return None;
                }
                let i = g / (n - 1) + 1;
                let col = g % (n - 1);
                let j = if col + 1 < i { col + 1 } else { col + 2 };
                Some((i, j))
            }
            Alphabet::Abstract(_) => None,
        }
    }

    pub fn name(&self, g: Gen) -> String {
        match self {
            Alphabet::Chord(_) => {
                let (i, j) = self.pair(g).expect("generator in range");
                format!("t{i}{j}")
            }
            Alphabet::Oriented(_) => {
                let (i, j) = self.pair(g).expect("generator in range");
                format!("v{i}{j}")
            }
            Alphabet::Abstract(names) => names[g as usize].clone(),
        }
    }

    /// Resolve a generator name; chord names are canonicalized (`t21` is `t12`).
    pub fn lookup(&self, name: &str) -> Option<Gen> {
        match self {
            Alphabet::Chord(_) | Alphabet::Oriented(_) => {
                let prefix = if matches!(self, Alphabet::Chord(_)) { 't' } else { 'v' };
                let rest = name.strip_prefix(prefix)?;
                let digits: Vec<usize> = rest
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()?;
                if digits.len() != 2 {
                    return None;
                }
                self.pair_index(digits[0], digits[1])
            }
            Alphabet::Abstract(names) => names.iter().position(|n| n == name).map(|p| p as Gen),
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.size()).map(|g| g as Gen)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Chord(n) => write!(f, "chord({n})"),
            Alphabet::Oriented(n) => write!(f, "oriented({n})"),
            Alphabet::Abstract(names) => write!(f, "abstract{{{}}}", names.join(",")),
        }
    }
}

/// A monomial: a finite sequence of generator indices. Ordered by degree,
/// then lexicographically (deglex).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_letters(letters: &[Gen]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Position of this word among all words of its degree over `m` letters.
    pub fn rank(&self, m: usize) -> u64 {
        self.0.iter().fold(0u64, |acc, &g| acc * m as u64 + g as u64)
    }

    /// Inverse of [`Word::rank`].
    pub fn unrank(mut index: u64, degree: usize, m: usize) -> Word {
        let mut letters: SmallVec<[Gen; 8]> = SmallVec::from_elem(0, degree);
        for slot in letters.iter_mut().rev() {
            *slot = (index % m as u64) as Gen;
            index /= m as u64;
        }
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All words of the given degree over `m` letters, in deglex order.
pub fn words_of_degree(m: usize, degree: usize) -> impl Iterator<Item = Word> {
    let count = (m as u64).checked_pow(degree as u32).unwrap_or(0);
    (0..count).map(move |i| Word::unrank(i, degree, m))
}

/// A noncommutative power series known exactly up to degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    alphabet: Alphabet,
    cap: usize,
    coeffs: BTreeMap<Word, Rational>,
}

impl TruncatedSeries {
    pub fn zero(alphabet: Alphabet, cap: usize) -> Self {
        TruncatedSeries {
            alphabet,
            cap,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet, cap: usize) -> Self {
        Self::constant(alphabet, cap, Rational::one())
    }

    pub fn constant(alphabet: Alphabet, cap: usize, c: Rational) -> Self {
        Self::monomial(alphabet, cap, Word::empty(), c)
    }

    pub fn monomial(alphabet: Alphabet, cap: usize, word: Word, c: Rational) -> Self {
        let mut s = Self::zero(alphabet, cap);
        s.add_term(word, c);
        s
    }

    /// The series consisting of a single generator.
    pub fn generator(alphabet: Alphabet, cap: usize, g: Gen) -> Self {
        Self::monomial(alphabet, cap, Word::letter(g), Rational::one())
    }

    /// `t_ij` or `v_ij` by 1-based indices.
    pub fn pair_generator(alphabet: &Alphabet, cap: usize, i: usize, j: usize) -> Result<Self> {
        let g = alphabet
            .pair_index(i, j)
            .ok_or_else(|| Error::IndexOutOfRange(format!("({i},{j}) in {alphabet}")))?;
        Ok(Self::generator(alphabet.clone(), cap, g))
    }

    /// Build from terms, dropping zeros, summing repeats and discarding words above `cap`.
    pub fn from_terms(alphabet: Alphabet, cap: usize, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut s = Self::zero(alphabet, cap);
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> + ExactSizeIterator {
        self.coeffs.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Rational)> {
        self.coeffs.into_iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.coeffs.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().map(Word::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().map(Word::degree)
    }

    /// Add `c * w` in place. Words above the cap are ignored.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if w.degree() > self.cap || c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: other.alphabet.clone(),
            });
        }
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        TruncatedSeries {
            alphabet: self.alphabet.clone(),
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet.clone(), self.cap);
        }
        TruncatedSeries {
            alphabet: self.alphabet.clone(),
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Truncated product: the coefficient of `w` is the sum over splittings
    /// `w = u v` of `a(u) b(v)`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (u, a) in &self.coeffs {
            let room = self.cap - u.degree();
            for (v, b) in &other.coeffs {
                // deglex: once v is too long, every later v is too
                if v.degree() > room {
                    break;
                }
                let w = u.concat(v);
                let term = a * b;
                match acc.entry(w) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += term;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            alphabet: self.alphabet.clone(),
            cap: self.cap,
            coeffs: acc,
        })
    }

    /// Product of a nonempty sequence of factors.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a TruncatedSeries>) -> Result<Self> {
        let mut it = factors.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidWord("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, f| acc.mul(f))
    }

    /// `a b - b a`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut out = Self::one(self.alphabet.clone(), self.cap);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The homogeneous component of degree `k`.
    pub fn homogeneous(&self, k: usize) -> Self {
        TruncatedSeries {
            alphabet: self.alphabet.clone(),
            cap: self.cap,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.degree() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop everything above `cap`; `cap` must not exceed the current cap.
    pub fn truncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::InsufficientCap {
                needed: cap,
                available: self.cap,
            });
        }
        Ok(TruncatedSeries {
            alphabet: self.alphabet.clone(),
            cap,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| w.degree() <= cap)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    /// Reinterpret at a larger cap, declaring every coefficient between the
    /// old and the new cap to be zero. Only meaningful for polynomials that
    /// are known exactly.
    pub fn pad_to_cap(&self, cap: usize) -> Self {
        let mut out = self.clone();
        if cap < self.cap {
            out.coeffs.retain(|w, _| w.degree() <= cap);
        }
        out.cap = cap;
        out
    }

    /// Rebuild the same coefficients over another alphabet via a generator map.
    pub(crate) fn relabel(&self, alphabet: Alphabet, map: &[Gen]) -> Self {
        let mut out = Self::zero(alphabet, self.cap);
        for (w, c) in &self.coeffs {
            let image = Word(w.0.iter().map(|&g| map[g as usize]).collect());
            out.add_term(image, c.clone());
        }
        out
    }

    /// Embed a chord/oriented series on `n` strands into `m >= n` strands.
    pub fn stabilize(&self, strands: usize) -> Result<Self> {
        let target = match &self.alphabet {
            Alphabet::Chord(n) if *n <= strands => Alphabet::Chord(strands),
            Alphabet::Oriented(n) if *n <= strands => Alphabet::Oriented(strands),
            Alphabet::Abstract(_) => return Err(Error::AbstractAlphabet(self.alphabet.clone())),
            other => {
                return Err(Error::SizeMismatch {
                    left: other.strands().unwrap_or(0),
                    right: strands,
                })
            }
        };
        let map: Vec<Gen> = self
            .alphabet
            .generators()
            .map(|g| {
                let (i, j) = self.alphabet.pair(g).expect("pair alphabet");
                target.pair_index(i, j).expect("index in range")
            })
            .collect();
        Ok(self.relabel(target, &map))
    }

    /// Largest absolute numerator or denominator, a crude size measure.
    pub fn height(&self) -> Rational {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_series(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ab(cap: usize) -> (TruncatedSeries, TruncatedSeries) {
        (
            TruncatedSeries::generator(Alphabet::ab(), cap, 0),
            TruncatedSeries::generator(Alphabet::ab(), cap, 1),
        )
    }

    #[test]
    fn chord_indexing_roundtrips() {
        for n in 2..=6 {
            let al = Alphabet::Chord(n);
            for g in al.generators() {
                let (i, j) = al.pair(g).unwrap();
                assert!(i < j);
                assert_eq!(al.pair_index(i, j), Some(g));
                assert_eq!(al.pair_index(j, i), Some(g));
            }
            assert_eq!(al.size(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn oriented_indexing_roundtrips() {
        for n in 2..=5 {
            let al = Alphabet::Oriented(n);
            let mut seen = Vec::new();
            for g in al.generators() {
                let (i, j) = al.pair(g).unwrap();
                assert_ne!(i, j);
                assert_eq!(al.pair_index(i, j), Some(g));
                seen.push((i, j));
            }
            let mut sorted = seen.clone();
            sorted.sort();
            assert_eq!(seen, sorted, "generators enumerate pairs lexicographically");
        }
        assert_eq!(Alphabet::Oriented(3).name(2), "v21");
    }

    #[test]
    fn lookup_canonicalizes_chords() {
        let al = Alphabet::Chord(3);
        assert_eq!(al.lookup("t21"), al.lookup("t12"));
        assert_eq!(al.lookup("t11"), None);
        assert_eq!(al.lookup("v12"), None);
        assert_eq!(Alphabet::ab().lookup("B"), Some(1));
    }

    #[test]
    fn deglex_order() {
        let a = Word::from_letters(&[1]);
        let b = Word::from_letters(&[0, 0]);
        let c = Word::from_letters(&[0, 1]);
        assert!(Word::empty() < a && a < b && b < c);
        assert_eq!(Word::unrank(c.rank(2), 2, 2), c);
    }

    #[test]
    fn product_of_one_plus_generators() {
        let (a, b) = ab(2);
        let one = TruncatedSeries::one(Alphabet::ab(), 2);
        let p = one.add(&a).unwrap().mul(&one.add(&b).unwrap()).unwrap();
        let ab_word = a.mul(&b).unwrap();
        let expected = one.add(&a).unwrap().add(&b).unwrap().add(&ab_word).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn noncommutative_expansion() {
        let (a, b) = ab(2);
        let lhs = a.add(&b).unwrap().mul(&a.sub(&b).unwrap()).unwrap();
        let expected = a
            .mul(&a)
            .unwrap()
            .sub(&a.mul(&b).unwrap())
            .unwrap()
            .add(&b.mul(&a).unwrap())
            .unwrap()
            .sub(&b.mul(&b).unwrap())
            .unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn words_above_cap_are_dropped() {
        let (a, _) = ab(2);
        assert!(a.pow(3).unwrap().is_zero());
        assert_eq!(a.pow(2).unwrap().max_degree(), Some(2));
    }

    #[test]
    fn mismatches_are_errors() {
        let (a, _) = ab(2);
        let a3 = TruncatedSeries::generator(Alphabet::ab(), 3, 0);
        assert!(matches!(a.mul(&a3), Err(Error::CapMismatch { .. })));
        let t = TruncatedSeries::generator(Alphabet::Chord(3), 2, 0);
        assert!(matches!(a.add(&t), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn unit_law() {
        let (a, b) = ab(3);
        let x = a.mul(&b).unwrap().scale(&r(3, 7)).add(&a).unwrap();
        let one = TruncatedSeries::one(Alphabet::ab(), 3);
        assert_eq!(one.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&one).unwrap(), x);
    }

    #[test]
    fn stabilize_keeps_labels() {
        let t23 = TruncatedSeries::pair_generator(&Alphabet::Chord(3), 2, 2, 3).unwrap();
        let up = t23.stabilize(4).unwrap();
        assert_eq!(up.to_string(), "1*t23");
        assert_eq!(up.alphabet(), &Alphabet::Chord(4));
    }
}
