use std::collections::HashMap;

use num_traits::Zero;

use super::{Alphabet, Gen, TruncatedSeries, Word};
use crate::error::{Error, Result};
use crate::perm::Permutation;

impl TruncatedSeries {
    /// Replace the `k`-th generator of `self` by `images[k]` and expand.
    ///
    /// Images must share one alphabet and cap and have zero constant term.
    /// The result lives at the images' cap, which may not exceed `self`'s.
    pub fn substitute(&self, images: &[TruncatedSeries]) -> Result<TruncatedSeries> {
        if images.len() != self.alphabet.size() {
            return Err(Error::SubstitutionArity(self.alphabet.size(), images.len()));
        }
        let first = images
            .first()
            .ok_or(Error::SubstitutionArity(self.alphabet.size(), 0))?;
        let (alphabet, cap) = (first.alphabet.clone(), first.cap);
        for img in images {
            if img.alphabet != alphabet {
                return Err(Error::AlphabetMismatch {
                    left: alphabet,
                    right: img.alphabet.clone(),
                });
            }
            if img.cap != cap {
                return Err(Error::CapMismatch {
                    left: cap,
                    right: img.cap,
                });
            }
            if !img.constant_term().is_zero() {
                return Err(Error::NonzeroConstant);
            }
        }
        if cap > self.cap {
            return Err(Error::InsufficientCap {
                needed: cap,
                available: self.cap,
            });
        }

        // prefix products are shared between words
        let mut memo: HashMap<Word, TruncatedSeries> = HashMap::new();
        memo.insert(Word::empty(), TruncatedSeries::one(alphabet.clone(), cap));
        let mut out = TruncatedSeries::zero(alphabet, cap);
        for (w, c) in &self.coeffs {
            // every image starts in degree >= 1
            if w.degree() > cap {
                break;
            }
            let value = image_of_word(w, images, &mut memo)?;
            out = out.add(&value.scale(c))?;
        }
        Ok(out)
    }

    /// Two-variable substitution `f(x, y)` for series over `{A, B}`.
    pub fn substitute2(&self, x: &TruncatedSeries, y: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.substitute(&[x.clone(), y.clone()])
    }

    /// The symmetric-group action `t_ij -> t_{p(i) p(j)}` (or `v_ij -> v_{p(i) p(j)}`),
    /// extended multiplicatively and linearly.
    pub fn act_permutation(&self, p: &Permutation) -> Result<TruncatedSeries> {
        let n = match &self.alphabet {
            Alphabet::Chord(n) | Alphabet::Oriented(n) => *n,
            Alphabet::Abstract(_) => return Err(Error::AbstractAlphabet(self.alphabet.clone())),
        };
        if p.size() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: p.size(),
            });
        }
        let map = permutation_generator_map(&self.alphabet, p);
        Ok(self.relabel(self.alphabet.clone(), &map))
    }

    /// Apply an arbitrary permutation of the generator indices, e.g. the swap
    /// `A <-> B` on an abstract alphabet.
    pub fn permute_generators(&self, images: &[Gen]) -> Result<TruncatedSeries> {
        let size = self.alphabet.size();
        let mut seen = vec![false; size];
        if images.len() != size {
            return Err(Error::SizeMismatch {
                left: size,
                right: images.len(),
            });
        }
        for &g in images {
            if g as usize >= size || std::mem::replace(&mut seen[g as usize], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(self.relabel(self.alphabet.clone(), images))
    }
}

/// Generator relabeling induced by a strand permutation.
pub(crate) fn permutation_generator_map(alphabet: &Alphabet, p: &Permutation) -> Vec<Gen> {
    alphabet
        .generators()
        .map(|g| {
            let (i, j) = alphabet.pair(g).expect("pair alphabet");
            alphabet
                .pair_index(p.apply(i), p.apply(j))
                .expect("permuted pair in range")
        })
        .collect()
}

fn image_of_word(
    w: &Word,
    images: &[TruncatedSeries],
    memo: &mut HashMap<Word, TruncatedSeries>,
) -> Result<TruncatedSeries> {
    if let Some(v) = memo.get(w) {
        return Ok(v.clone());
    }
    let letters = w.letters();
    let prefix = Word::from_letters(&letters[..letters.len() - 1]);
    let head = image_of_word(&prefix, images, memo)?;
    let value = head.mul(&images[*letters.last().expect("nonempty") as usize])?;
    memo.insert(w.clone(), value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord3(cap: usize, i: usize, j: usize) -> TruncatedSeries {
        TruncatedSeries::pair_generator(&Alphabet::Chord(3), cap, i, j).unwrap()
    }

    fn ab_series(text: &str, cap: usize) -> TruncatedSeries {
        TruncatedSeries::parse(text, &Alphabet::ab(), cap).unwrap()
    }

    #[test]
    fn substitute_word() {
        let f = ab_series("1 + 1*A.B", 3);
        let out = f.substitute2(&chord3(3, 1, 2), &chord3(3, 2, 3)).unwrap();
        assert_eq!(out.to_string(), "1 + 1*t12.t23");
    }

    #[test]
    fn substitute_sum() {
        let f = ab_series("1*A", 2);
        let x = chord3(2, 1, 3).add(&chord3(2, 2, 3)).unwrap();
        let out = f.substitute2(&x, &chord3(2, 1, 2)).unwrap();
        assert_eq!(out, x);
    }

    #[test]
    fn substitute_into_exp() {
        let a = TruncatedSeries::generator(Alphabet::ab(), 2, 0);
        let f = a.exp().unwrap();
        let t12 = chord3(2, 1, 2);
        let out = f.substitute2(&t12, &chord3(2, 2, 3)).unwrap();
        assert_eq!(out, t12.exp().unwrap());
    }

    #[test]
    fn substitute_rejects_bad_images() {
        let f = ab_series("1*A", 2);
        let one = TruncatedSeries::one(Alphabet::Chord(3), 2);
        assert_eq!(f.substitute2(&one, &chord3(2, 1, 2)), Err(Error::NonzeroConstant));
        let v = TruncatedSeries::pair_generator(&Alphabet::Oriented(3), 2, 1, 2).unwrap();
        assert!(matches!(
            f.substitute2(&v, &chord3(2, 1, 2)),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(matches!(
            f.substitute2(&chord3(3, 1, 2), &chord3(3, 2, 3)),
            Err(Error::InsufficientCap { .. })
        ));
    }

    #[test]
    fn permutation_action_on_chords() {
        let t12 = chord3(2, 1, 2);
        let p213 = Permutation::from_one_line("213").unwrap();
        let p312 = Permutation::from_one_line("312").unwrap();
        assert_eq!(t12.act_permutation(&p213).unwrap(), t12);
        assert_eq!(t12.act_permutation(&p312).unwrap(), chord3(2, 1, 3));
    }

    #[test]
    fn permutation_action_on_oriented() {
        let al = Alphabet::Oriented(3);
        let v12 = TruncatedSeries::pair_generator(&al, 2, 1, 2).unwrap();
        let v21 = TruncatedSeries::pair_generator(&al, 2, 2, 1).unwrap();
        let s1 = Permutation::adjacent(3, 1).unwrap();
        assert_eq!(v12.act_permutation(&s1).unwrap(), v21);
    }

    #[test]
    fn permutation_action_rejects_abstract() {
        let a = TruncatedSeries::generator(Alphabet::ab(), 2, 0);
        assert!(matches!(
            a.act_permutation(&Permutation::identity(2)),
            Err(Error::AbstractAlphabet(_))
        ));
    }

    #[test]
    fn swap_generators() {
        let f = ab_series("1*A.B - 1*B.A + 1/2*A", 2);
        let g = f.permute_generators(&[1, 0]).unwrap();
        assert_eq!(g.to_string(), "1/2*B - 1*A.B + 1*B.A");
        assert!(f.permute_generators(&[0, 0]).is_err());
    }
}
