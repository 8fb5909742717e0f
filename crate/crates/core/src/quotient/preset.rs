use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::series::{Alphabet, TruncatedSeries, Word};
use crate::Rational;

/// A family of quadratic relations on a free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelationPreset {
    /// `[t_ij, t_ik + t_jk]` and `[t_ij, t_kl]` for disjoint pairs.
    InfinitesimalArtin(usize),
    /// `[v_ik, v_jk]`, `[v_ij, v_ik + v_jk]` and `[v_ij, v_kl]`, indices distinct.
    OrientedArtin(usize),
    /// The subfamily with `i, j > k`, `i > j > k` and `i > j, k > l` respectively,
    /// over the full oriented alphabet.
    OrientedUpperTriangular(usize),
    /// No relations.
    Free(Alphabet),
}

impl RelationPreset {
    /// Parse a preset name: `artin`, `oriented`, `upper` (with `n`), or
    /// `free-chord`, `free-oriented` (with `n`), or `free-ab`.
    pub fn from_name(name: &str, n: usize) -> Result<Self> {
        let preset = match name {
            "artin" | "infinitesimal_artin" | "chord" => RelationPreset::InfinitesimalArtin(n),
            "oriented" | "oriented_artin" => RelationPreset::OrientedArtin(n),
            "upper" | "oriented_upper_triangular" => RelationPreset::OrientedUpperTriangular(n),
            "free-chord" => RelationPreset::Free(Alphabet::Chord(n)),
            "free-oriented" => RelationPreset::Free(Alphabet::Oriented(n)),
            "free-ab" => RelationPreset::Free(Alphabet::ab()),
            other => return Err(Error::parse(0, format!("unknown preset {other:?}"))),
        };
        Ok(preset)
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            RelationPreset::InfinitesimalArtin(n) => Alphabet::Chord(*n),
            RelationPreset::OrientedArtin(n) | RelationPreset::OrientedUpperTriangular(n) => Alphabet::Oriented(*n),
            RelationPreset::Free(al) => al.clone(),
        }
    }

    /// Strand count for chord and oriented presets.
    pub fn strands(&self) -> Option<usize> {
        self.alphabet().strands()
    }

    /// The relations, as homogeneous degree-2 series at cap 2, without duplicates
    /// up to scaling.
    pub fn relations(&self) -> Vec<TruncatedSeries> {
        let al = self.alphabet();
        let g = |i: usize, j: usize| TruncatedSeries::pair_generator(&al, 2, i, j).expect("pair");
        let comm = |a: &TruncatedSeries, b: &TruncatedSeries| a.commutator(b).expect("same cap");
        let sum = |a: TruncatedSeries, b: TruncatedSeries| a.add(&b).expect("same cap");
        let mut raw = Vec::new();
        match self {
            RelationPreset::InfinitesimalArtin(n) => {
                let n = *n;
                for i in 1..=n {
                    for j in i + 1..=n {
                        for k in (1..=n).filter(|&k| k != i && k != j) {
                            raw.push(comm(&g(i, j), &sum(g(i, k), g(j, k))));
                        }
                        for k in 1..=n {
                            for l in k + 1..=n {
                                if k != i && k != j && l != i && l != j {
                                    raw.push(comm(&g(i, j), &g(k, l)));
                                }
                            }
                        }
                    }
                }
            }
            RelationPreset::OrientedArtin(n) | RelationPreset::OrientedUpperTriangular(n) => {
                let n = *n;
                let upper = matches!(self, RelationPreset::OrientedUpperTriangular(_));
                let distinct = |xs: &[usize]| xs.iter().enumerate().all(|(a, x)| xs[a + 1..].iter().all(|y| y != x));
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            if !distinct(&[i, j, k]) {
                                continue;
                            }
                            // (I): unordered {i, j}
                            if i < j && (!upper || (i > k && j > k)) {
                                raw.push(comm(&g(i, k), &g(j, k)));
                            }
                            // (II): ordered (i, j)
                            if !upper || (i > j && j > k) {
                                raw.push(comm(&g(i, j), &sum(g(i, k), g(j, k))));
                            }
                            // (III)
                            for l in 1..=n {
                                if distinct(&[i, j, k, l]) && (!upper || (i > j && k > l)) {
                                    raw.push(comm(&g(i, j), &g(k, l)));
                                }
                            }
                        }
                    }
                }
            }
            RelationPreset::Free(_) => {}
        }
        dedup_up_to_scale(raw)
    }

    /// Relations as sparse vectors over degree-2 word ranks.
    pub(crate) fn relation_vectors(&self) -> Vec<SparseVec<u64>> {
        let m = self.alphabet().size();
        self.relations()
            .iter()
            .map(|r| r.terms().map(|(w, c)| (w.rank(m), c.clone())).collect())
            .collect()
    }

    /// A filesystem-safe identifier.
    pub fn slug(&self) -> String {
        match self {
            RelationPreset::InfinitesimalArtin(n) => format!("infinitesimal_artin-{n}"),
            RelationPreset::OrientedArtin(n) => format!("oriented_artin-{n}"),
            RelationPreset::OrientedUpperTriangular(n) => format!("oriented_upper_triangular-{n}"),
            RelationPreset::Free(al) => match al {
                Alphabet::Chord(n) => format!("free-chord-{n}"),
                Alphabet::Oriented(n) => format!("free-oriented-{n}"),
                Alphabet::Abstract(names) => format!("free-abstract-{}", names.join("_")),
            },
        }
    }
}

fn dedup_up_to_scale(raw: Vec<TruncatedSeries>) -> Vec<TruncatedSeries> {
    let mut seen: BTreeSet<Vec<(Word, Rational)>> = BTreeSet::new();
    let mut out = Vec::new();
    for r in raw {
        if r.is_zero() {
            continue;
        }
        let (_, lead) = r.terms().next_back().expect("nonzero");
        let norm = if lead.is_one() {
            r.clone()
        } else {
            r.scale(&lead.recip())
        };
        let key: Vec<(Word, Rational)> = norm.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        if seen.insert(key) {
            out.push(r);
        }
    }
    out
}

impl fmt::Display for RelationPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationPreset::InfinitesimalArtin(n) => write!(f, "infinitesimal_artin({n})"),
            RelationPreset::OrientedArtin(n) => write!(f, "oriented_artin({n})"),
            RelationPreset::OrientedUpperTriangular(n) => {
                write!(f, "oriented_upper_triangular({n})")
            }
            RelationPreset::Free(al) => write!(f, "free({al})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        assert_eq!(RelationPreset::InfinitesimalArtin(2).relations().len(), 0);
        assert_eq!(RelationPreset::InfinitesimalArtin(3).relations().len(), 3);
        // 12 three-index relations plus 3 disjoint-pair commutators
        assert_eq!(RelationPreset::InfinitesimalArtin(4).relations().len(), 15);
        assert_eq!(RelationPreset::OrientedArtin(2).relations().len(), 0);
        assert_eq!(RelationPreset::OrientedArtin(3).relations().len(), 9);
        assert_eq!(RelationPreset::OrientedArtin(4).relations().len(), 48);
    }

    #[test]
    fn upper_triangular_is_sublist() {
        for n in 2..=4 {
            let full = RelationPreset::OrientedArtin(n).relations();
            let upper = RelationPreset::OrientedUpperTriangular(n).relations();
            assert!(upper.len() < full.len() || n == 2);
            for r in &upper {
                assert!(full.iter().any(|f| f == r || f == &r.neg()), "{r}");
            }
        }
        // (I) with k = 1, (II) 321
        assert_eq!(RelationPreset::OrientedUpperTriangular(3).relations().len(), 2);
    }

    #[test]
    fn relations_are_quadratic() {
        for p in [RelationPreset::InfinitesimalArtin(4), RelationPreset::OrientedArtin(4)] {
            for r in p.relations() {
                assert_eq!(r.min_degree(), Some(2));
                assert_eq!(r.max_degree(), Some(2));
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(
            RelationPreset::from_name("oriented", 3).unwrap(),
            RelationPreset::OrientedArtin(3)
        );
        assert!(RelationPreset::from_name("nope", 3).is_err());
        assert_eq!(RelationPreset::OrientedArtin(3).to_string(), "oriented_artin(3)");
    }
}
