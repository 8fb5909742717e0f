//! Graded quotients of free algebras by quadratic relations.
//!
//! Each degree `k` is handled independently: the ideal slice is spanned by
//! all products `u r w` with `r` a relation and `deg u + 2 + deg w = k`, and
//! is put in reduced echelon form with the deglex-largest word as pivot.
//! The normal form of a pivot word is minus the rest of its row; every other
//! word is its own normal form.
//!
//! Invariants:
//! - normal forms are supported on non-pivot words only
//! - `dimension(k) = m^k - rank(k)` where `m` is the alphabet size
//! - a built basis is immutable apart from a lazily filled Lie span

mod cache;
mod preset;
mod store;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{add_entry, add_scaled, Echelon, SparseVec};
use crate::series::{Alphabet, TruncatedSeries, Word};
use crate::Rational;

pub use preset::RelationPreset;
pub use store::BasisStore;

/// Reduction data for one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSlice {
    degree: usize,
    /// Pivot word rank to the normal form of that word.
    reduction: BTreeMap<u64, SparseVec<u64>>,
}

impl DegreeSlice {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.reduction.len()
    }
}

/// Normal forms for a [`RelationPreset`] up to a degree cap.
#[derive(Debug)]
pub struct GradedQuotientBasis {
    preset: RelationPreset,
    alphabet: Alphabet,
    cap: usize,
    slices: Vec<DegreeSlice>,
    lie: OnceLock<Vec<Echelon<u64>>>,
}

fn word_count(m: usize, k: usize) -> u64 {
    (m as u64).pow(k as u32)
}

fn build_slice(relations: &[SparseVec<u64>], m: usize, k: usize) -> DegreeSlice {
    let mut ech: Echelon<u64> = Echelon::new();
    if k >= 2 && !relations.is_empty() {
        for a in 0..=k - 2 {
            let b = k - 2 - a;
            let (left, right) = (word_count(m, a), word_count(m, b));
            let shift_u = word_count(m, k - a);
            for u in 0..left {
                for w in 0..right {
                    for r in relations {
                        let v: SparseVec<u64> = r
                            .iter()
                            .map(|(&x, c)| (u * shift_u + x * right + w, c.clone()))
                            .collect();
                        ech.insert(v);
                    }
                }
            }
        }
    }
    let reduction = ech
        .into_reduced()
        .into_rows()
        .into_iter()
        .map(|(p, mut row)| {
            row.remove(&p);
            let nf = row.into_iter().map(|(k, c)| (k, -c)).collect();
            (p, nf)
        })
        .collect();
    DegreeSlice { degree: k, reduction }
}

impl GradedQuotientBasis {
    /// Build every degree up to `cap`, degrees in parallel.
    pub fn build(preset: RelationPreset, cap: usize) -> Self {
        let alphabet = preset.alphabet();
        let m = alphabet.size();
        let relations = preset.relation_vectors();
        let slices = (0..=cap)
            .into_par_iter()
            .map(|k| build_slice(&relations, m, k))
            .collect();
        GradedQuotientBasis {
            preset,
            alphabet,
            cap,
            slices,
            lie: OnceLock::new(),
        }
    }

    /// As [`GradedQuotientBasis::build`], reading and writing per-degree cache
    /// files under `dir`. Stale or unreadable files are rebuilt and replaced.
    pub fn build_cached(preset: RelationPreset, cap: usize, dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
        let alphabet = preset.alphabet();
        let m = alphabet.size();
        let relations = preset.relation_vectors();
        let slices = (0..=cap)
            .into_par_iter()
            .map(|k| match cache::load(dir, &preset, k) {
                Ok(slice) => Ok(slice),
                Err(_) => {
                    let slice = build_slice(&relations, m, k);
                    cache::store(dir, &preset, &slice)?;
                    Ok(slice)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedQuotientBasis {
            preset,
            alphabet,
            cap,
            slices,
            lie: OnceLock::new(),
        })
    }

    pub fn preset(&self) -> &RelationPreset {
        &self.preset
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn slice(&self, k: usize) -> Option<&DegreeSlice> {
        self.slices.get(k)
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if k > self.cap {
            return Err(Error::InsufficientCap {
                needed: k,
                available: self.cap,
            });
        }
        Ok(())
    }

    /// Dimension of the degree-`k` piece of the quotient.
    pub fn dimension(&self, k: usize) -> Result<u64> {
        self.check_degree(k)?;
        Ok(word_count(self.alphabet.size(), k) - self.slices[k].rank() as u64)
    }

    /// Dimensions for degrees `0..=cap`.
    pub fn dimensions(&self) -> Vec<u64> {
        (0..=self.cap).map(|k| self.dimension(k).expect("within cap")).collect()
    }

    pub fn is_pivot(&self, w: &Word) -> bool {
        self.slices
            .get(w.degree())
            .is_some_and(|s| s.reduction.contains_key(&w.rank(self.alphabet.size())))
    }

    /// Non-pivot words of degree `k`: a basis of the quotient in that degree.
    pub fn standard_words(&self, k: usize) -> Result<Vec<Word>> {
        self.check_degree(k)?;
        let m = self.alphabet.size();
        let red = &self.slices[k].reduction;
        Ok((0..word_count(m, k))
            .filter(|r| !red.contains_key(r))
            .map(|r| Word::unrank(r, k, m))
            .collect())
    }

    /// Normal form of a homogeneous vector of degree `k` over word ranks.
    pub fn normal_form_vec(&self, k: usize, v: SparseVec<u64>) -> Result<SparseVec<u64>> {
        self.check_degree(k)?;
        let red = &self.slices[k].reduction;
        if red.is_empty() {
            return Ok(v);
        }
        let mut out = SparseVec::new();
        for (r, c) in v {
            match red.get(&r) {
                Some(nf) => add_scaled(&mut out, &c, nf),
                None => add_entry(&mut out, r, c),
            }
        }
        Ok(out)
    }

    fn check_series(&self, s: &TruncatedSeries) -> Result<()> {
        if s.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: s.alphabet().clone(),
            });
        }
        if s.cap() > self.cap {
            return Err(Error::InsufficientCap {
                needed: s.cap(),
                available: self.cap,
            });
        }
        Ok(())
    }

    /// The canonical representative of `s` modulo the relation ideal.
    pub fn normal_form(&self, s: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_series(s)?;
        let m = self.alphabet.size();
        let mut by_degree: BTreeMap<usize, SparseVec<u64>> = BTreeMap::new();
        for (w, c) in s.terms() {
            by_degree.entry(w.degree()).or_default().insert(w.rank(m), c.clone());
        }
        let mut out = TruncatedSeries::zero(self.alphabet.clone(), s.cap());
        for (k, v) in by_degree {
            for (r, c) in self.normal_form_vec(k, v)? {
                out.add_term(Word::unrank(r, k, m), c);
            }
        }
        Ok(out)
    }

    pub fn equal_mod_relations(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<bool> {
        self.check_series(a)?;
        Ok(self.normal_form(&a.sub(b)?)?.is_zero())
    }

    /// Spans of the images of Lie elements, degree by degree, in normal form.
    pub fn lie_spans(&self) -> &[Echelon<u64>] {
        self.lie.get_or_init(|| self.compute_lie_spans())
    }

    fn compute_lie_spans(&self) -> Vec<Echelon<u64>> {
        let m = self.alphabet.size();
        let mut spans: Vec<Echelon<u64>> = vec![Echelon::new()];
        if self.cap == 0 {
            return spans;
        }
        let mut first = Echelon::new();
        for g in 0..m as u64 {
            first.insert(SparseVec::from([(g, Rational::one())]));
        }
        spans.push(first);
        for k in 2..=self.cap {
            let prev = &spans[k - 1];
            let mut next = Echelon::new();
            for g in 0..m as u64 {
                for (_, row) in prev.rows() {
                    let mut v = SparseVec::new();
                    for (&r, c) in row {
                        add_entry(&mut v, g * word_count(m, k - 1) + r, c.clone());
                        add_entry(&mut v, r * m as u64 + g, -c.clone());
                    }
                    let v = self.normal_form_vec(k, v).expect("within cap");
                    next.insert(v);
                }
            }
            spans.push(next);
        }
        spans
    }

    /// True iff every homogeneous component of `x` is, modulo relations, a Lie element.
    pub fn is_lie_mod(&self, x: &TruncatedSeries) -> Result<bool> {
        let nf = self.normal_form(x)?;
        if !nf.constant_term().is_zero() {
            return Ok(false);
        }
        let m = self.alphabet.size();
        let spans = self.lie_spans();
        for (k, span) in spans.iter().enumerate().take(nf.cap() + 1).skip(1) {
            let v: SparseVec<u64> = nf.homogeneous(k).terms().map(|(w, c)| (w.rank(m), c.clone())).collect();
            if !span.contains(v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Constant term one and a logarithm that is Lie modulo relations.
    pub fn is_group_like(&self, g: &TruncatedSeries) -> Result<bool> {
        match g.log() {
            Ok(l) => self.is_lie_mod(&l),
            Err(Error::ConstantNotOne) => Ok(false),
            Err(e) => Err(e),
        }
    }
}
