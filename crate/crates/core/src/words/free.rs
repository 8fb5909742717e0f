use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A freely reduced word in `x_1^{±1}, .., x_n^{±1}`; letter `±i` is `x_i^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i16>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i16])
    }

    /// Build from letters, reducing as it goes.
    pub fn from_letters(letters: impl IntoIterator<Item = i16>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i16) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[i16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Exponent sum of each generator `x_1..x_n`.
    pub fn abelianization(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n];
        for &l in &self.0 {
            out[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of the free group, given by the images of `x_1, .., x_n`.
/// The product is composition: `(a * b)(x) = a(b(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeGroupEndo {
    images: Vec<FreeWord>,
}

impl FreeGroupEndo {
    pub fn identity(n: usize) -> Self {
        FreeGroupEndo {
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        FreeGroupEndo { images }
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// `x_i -> x_j^-1 x_i x_j` (or `x_j x_i x_j^-1` when `inverse`), fixing the rest.
    pub fn conjugation(n: usize, i: usize, j: usize, inverse: bool) -> Self {
        let mut e = Self::identity(n);
        let (i16i, i16j) = (i as i16, j as i16);
        e.images[i - 1] = if inverse {
            FreeWord::from_letters([i16j, i16i, -i16j])
        } else {
            FreeWord::from_letters([-i16j, i16i, i16j])
        };
        e
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap(n: usize, i: usize) -> Self {
        let mut e = Self::identity(n);
        e.images.swap(i - 1, i);
        e
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            out = if l > 0 { out.mul(img) } else { out.mul(&img.inverse()) };
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands() != other.strands() {
            return Err(Error::SizeMismatch {
                left: self.strands(),
                right: other.strands(),
            });
        }
        Ok(FreeGroupEndo {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        })
    }

    /// The permutation read off the abelianization: `x_i` maps to a conjugate
    /// of `x_{p(i)}`.
    pub fn permutation(&self) -> Result<Permutation> {
        let n = self.strands();
        let mut images = Vec::with_capacity(n);
        for w in &self.images {
            let ab = w.abelianization(n);
            let hits: Vec<usize> = (0..n).filter(|&k| ab[k] != 0).collect();
            match hits.as_slice() {
                [k] if ab[*k] == 1 => images.push(k + 1),
                _ => return Err(Error::InvalidWord(format!("{w} is not conjugate to a generator"))),
            }
        }
        Permutation::from_images(&images)
    }

    /// True iff `x_1 x_2 .. x_n` is fixed.
    pub fn fixes_product(&self) -> bool {
        let prod = FreeWord::from_letters(1..=self.strands() as i16);
        self.apply(&prod) == prod
    }
}

impl fmt::Display for FreeGroupEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {w}", k + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let w = FreeWord::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w, FreeWord::generator(3));
        assert!(w.mul(&w.inverse()).is_empty());
        assert_eq!(FreeWord::from_letters([-2, 1, 2]).to_string(), "x2^-1 x1 x2");
    }

    #[test]
    fn conjugation_and_inverse() {
        let a = FreeGroupEndo::conjugation(2, 1, 2, false);
        let b = FreeGroupEndo::conjugation(2, 1, 2, true);
        assert_eq!(a.to_string(), "x1 -> x2^-1 x1 x2, x2 -> x2");
        assert_eq!(a.compose(&b).unwrap(), FreeGroupEndo::identity(2));
        assert!(a.permutation().unwrap().is_identity());
    }

    #[test]
    fn swap_permutation() {
        let s = FreeGroupEndo::swap(3, 2);
        assert_eq!(s.permutation().unwrap().images(), vec![1, 3, 2]);
        assert!(!s.fixes_product());
    }
}
