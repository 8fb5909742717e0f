//! Permutations of `{1..n}` in one-line notation.
//!
//! The product is composition, `(p * q)(k) = p(q(k))`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based images `(p(1), .., p(n))`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&i| (i - 1) as u8).collect(),
        })
    }

    /// Parse one-line notation such as `312`; comma-separated images are
    /// accepted for more than nine strands.
    pub fn from_one_line(text: &str) -> Result<Self> {
        let text = text.trim();
        let images: Option<Vec<usize>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        match images {
            Some(images) if !images.is_empty() => Self::from_images(&images),
            _ => Err(Error::InvalidPermutation(text.to_string())),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)` on `n` strands.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s{i} on {n} strands")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The product `s_{i1} s_{i2} ..` of adjacent transpositions.
    pub fn from_transposition_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter()
            .try_fold(Self::identity(n), |acc, &i| acc.compose(&Self::adjacent(n, i)?))
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.size()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i as usize] = k as u8;
        }
        Permutation { images }
    }

    /// Extend to `m >= n` strands, fixing the new ones.
    pub fn extend(&self, m: usize) -> Result<Self> {
        if m < self.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: m,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.size() as u8..m as u8);
        Ok(Permutation { images })
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { "," } else { "" };
        let parts: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}
