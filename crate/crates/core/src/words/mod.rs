//! Braid and welded-braid words.
//!
//! Tokens are `aIJ` (the conjugation `x_i -> x_j^-1 x_i x_j`), `sI` (the swap
//! of `x_i`, `x_{i+1}`) and `sigI` (the braid generator `a_{i,i+1} s_i`), each
//! with an optional exponent `^k`. Words multiply left to right as automorphisms
//! compose, so the word `u v` acts as `u ∘ v`.

mod free;
mod ring;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use free::{FreeGroupEndo, FreeWord};
pub use ring::GroupRingElement;

/// One generator or inverse generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Conj { i: usize, j: usize, inverse: bool },
    Swap(usize),
    Sigma { i: usize, inverse: bool },
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::Conj { i, j, inverse } => Letter::Conj {
                i,
                j,
                inverse: !inverse,
            },
            Letter::Swap(i) => Letter::Swap(i),
            Letter::Sigma { i, inverse } => Letter::Sigma { i, inverse: !inverse },
        }
    }

    fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            Letter::Conj { i, j, .. } => i != j && (1..=n).contains(&i) && (1..=n).contains(&j),
            Letter::Swap(i) | Letter::Sigma { i, .. } => i >= 1 && i < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidWord(format!("{self} on {n} strands")))
        }
    }

    /// The automorphism of the free group on `n` generators.
    pub fn automorphism(self, n: usize) -> FreeGroupEndo {
        match self {
            Letter::Conj { i, j, inverse } => FreeGroupEndo::conjugation(n, i, j, inverse),
            Letter::Swap(i) => FreeGroupEndo::swap(n, i),
            Letter::Sigma { i, inverse: false } => FreeGroupEndo::conjugation(n, i, i + 1, false)
                .compose(&FreeGroupEndo::swap(n, i))
                .expect("same size"),
            Letter::Sigma { i, inverse: true } => FreeGroupEndo::swap(n, i)
                .compose(&FreeGroupEndo::conjugation(n, i, i + 1, true))
                .expect("same size"),
        }
    }

    /// Image in the symmetric group.
    pub fn permutation(self, n: usize) -> Permutation {
        match self {
            Letter::Conj { .. } => Permutation::identity(n),
            Letter::Swap(i) | Letter::Sigma { i, .. } => Permutation::adjacent(n, i).expect("validated letter"),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Conj { i, j, inverse } => {
                if i > 9 || j > 9 {
                    write!(f, "a({i},{j})")?;
                } else {
                    write!(f, "a{i}{j}")?;
                }
                if inverse {
                    f.write_str("^-1")?;
                }
                Ok(())
            }
            Letter::Swap(i) => write!(f, "s{i}"),
            Letter::Sigma { i, inverse } => {
                write!(f, "sig{i}")?;
                if inverse {
                    f.write_str("^-1")?;
                }
                Ok(())
            }
        }
    }
}

/// A word in the welded generators on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeldedWord {
    n: usize,
    letters: Vec<Letter>,
}

impl WeldedWord {
    pub fn identity(n: usize) -> Self {
        WeldedWord { n, letters: Vec::new() }
    }

    pub fn from_letters(n: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            l.validate(n)?;
        }
        Ok(WeldedWord { n, letters })
    }

    /// `a_ij`.
    pub fn conj(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_letters(n, vec![Letter::Conj { i, j, inverse: false }])
    }

    /// `s_i`.
    pub fn swap(n: usize, i: usize) -> Result<Self> {
        Self::from_letters(n, vec![Letter::Swap(i)])
    }

    /// `sigma_i`.
    pub fn sigma(n: usize, i: usize) -> Result<Self> {
        Self::from_letters(n, vec![Letter::Sigma { i, inverse: false }])
    }

    /// All generators and inverse generators on `n` strands.
    pub fn alphabet(n: usize) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for inverse in [false, true] {
                    out.push(Letter::Conj { i, j, inverse });
                }
            }
        }
        for i in 1..n {
            out.push(Letter::Swap(i));
            for inverse in [false, true] {
                out.push(Letter::Sigma { i, inverse });
            }
        }
        out
    }

    /// Parse whitespace-separated tokens; `e` or an empty string is the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" || token == "1" {
                continue;
            }
            let (base, power) = match token.split_once('^') {
                Some((b, p)) => (
                    b,
                    p.parse::<i64>()
                        .map_err(|_| Error::InvalidWord(format!("bad exponent in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let letter = parse_base(base)?;
            letter.validate(n)?;
            let unit = if power < 0 { letter.inverse() } else { letter };
            letters.extend(std::iter::repeat_n(unit, power.unsigned_abs() as usize));
        }
        Ok(WeldedWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff only `sigma` tokens occur.
    pub fn is_braid(&self) -> bool {
        self.letters.iter().all(|l| matches!(l, Letter::Sigma { .. }))
    }

    pub fn concat(&self, other: &WeldedWord) -> Result<WeldedWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(WeldedWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> WeldedWord {
        WeldedWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The automorphism of the free group this word defines.
    pub fn as_automorphism(&self) -> FreeGroupEndo {
        self.letters.iter().fold(FreeGroupEndo::identity(self.n), |acc, l| {
            acc.compose(&l.automorphism(self.n)).expect("same size")
        })
    }

    /// Image in the symmetric group.
    pub fn permutation(&self) -> Permutation {
        self.letters.iter().fold(Permutation::identity(self.n), |acc, l| {
            acc.compose(&l.permutation(self.n)).expect("same size")
        })
    }
}

fn parse_base(base: &str) -> Result<Letter> {
    let bad = || Error::InvalidWord(format!("unknown token {base:?}"));
    let index = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = base.strip_prefix("sig") {
        return Ok(Letter::Sigma {
            i: index(rest)?,
            inverse: false,
        });
    }
    if let Some(rest) = base.strip_prefix('s') {
        return Ok(Letter::Swap(index(rest)?));
    }
    if let Some(rest) = base.strip_prefix('a') {
        let (i, j) = if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (i, j) = inner.split_once(',').ok_or_else(bad)?;
            (index(i.trim())?, index(j.trim())?)
        } else if rest.len() == 2 && rest.chars().all(|c| c.is_ascii_digit()) {
            (index(&rest[..1])?, index(&rest[1..])?)
        } else {
            return Err(bad());
        };
        return Ok(Letter::Conj { i, j, inverse: false });
    }
    Err(bad())
}

impl fmt::Display for WeldedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Equality in the braid-permutation group, decided by comparing automorphisms.
pub fn words_equal_in_bp(w1: &WeldedWord, w2: &WeldedWord) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::SizeMismatch {
            left: w1.n,
            right: w2.n,
        });
    }
    Ok(w1.as_automorphism() == w2.as_automorphism())
}

/// The pure braid generator
/// `alpha_ji = sig_{i-1} .. sig_{j+1} sig_j^2 sig_{j+1}^-1 .. sig_{i-1}^-1`.
pub fn pure_braid_generator(j: usize, i: usize, n: usize) -> Result<WeldedWord> {
    if !(1 <= j && j < i && i <= n) {
        return Err(Error::InvalidWord(format!(
            "pure braid generator needs 1 <= j < i <= n, got j={j}, i={i}, n={n}"
        )));
    }
    let mut letters = Vec::new();
    for k in (j + 1..i).rev() {
        letters.push(Letter::Sigma { i: k, inverse: false });
    }
    letters.push(Letter::Sigma { i: j, inverse: false });
    letters.push(Letter::Sigma { i: j, inverse: false });
    for k in j + 1..i {
        letters.push(Letter::Sigma { i: k, inverse: true });
    }
    WeldedWord::from_letters(n, letters)
}

/// The McCool relations (I), (II), (III) on `n` strands as pairs of words
/// that must be equal.
pub fn mccool_relations(n: usize) -> Vec<(WeldedWord, WeldedWord)> {
    let a = |i: usize, j: usize| WeldedWord::conj(n, i, j).expect("valid indices");
    let cat = |ws: &[&WeldedWord]| {
        ws.iter()
            .try_fold(WeldedWord::identity(n), |acc, w| acc.concat(w))
            .expect("same strands")
    };
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                // (I) a_ik a_jk = a_jk a_ik
                out.push((cat(&[&a(i, k), &a(j, k)]), cat(&[&a(j, k), &a(i, k)])));
                // (II) a_ij (a_ik a_jk) = (a_ik a_jk) a_ij
                let p = cat(&[&a(i, k), &a(j, k)]);
                out.push((cat(&[&a(i, j), &p]), cat(&[&p, &a(i, j)])));
                // (III) a_ij a_kl = a_kl a_ij
                for l in (1..=n).filter(|&l| l != i && l != j && l != k) {
                    out.push((cat(&[&a(i, j), &a(k, l)]), cat(&[&a(k, l), &a(i, j)])));
                }
            }
        }
    }
    out
}

/// The braid relations: far commutation and the three-term relation.
pub fn braid_relations(n: usize) -> Vec<(WeldedWord, WeldedWord)> {
    let s = |i: usize| WeldedWord::sigma(n, i).expect("valid index");
    let cat = |ws: &[&WeldedWord]| {
        ws.iter()
            .try_fold(WeldedWord::identity(n), |acc, w| acc.concat(w))
            .expect("same strands")
    };
    let mut out = Vec::new();
    for i in 1..n {
        if i + 1 < n {
            out.push((cat(&[&s(i + 1), &s(i), &s(i + 1)]), cat(&[&s(i), &s(i + 1), &s(i)])));
        }
        for j in i + 2..n {
            out.push((cat(&[&s(i), &s(j)]), cat(&[&s(j), &s(i)])));
        }
    }
    out
}
