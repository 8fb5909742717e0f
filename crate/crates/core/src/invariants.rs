//! Finite-type machinery: orders of group-ring elements under the welded
//! representation, comparison of welded words, the doubling map
//! `t_ij -> v_ij + v_ji` from chord to oriented algebras, and dimension tables.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{kernel, SparseVec};
use crate::perm::Permutation;
use crate::quotient::{BasisStore, GradedQuotientBasis, RelationPreset};
use crate::represent::Representation;
use crate::semidirect::SemidirectSeries;
use crate::series::{Alphabet, TruncatedSeries};
use crate::words::{words_equal_in_bp, GroupRingElement, Letter, WeldedWord};
use crate::Rational;

/// A group-ring element with its welded image and the order of that image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub element: GroupRingElement,
    pub image: SemidirectSeries,
    /// Lowest degree with a nonzero component; `None` when the image
    /// vanishes through the cap.
    pub order: Option<usize>,
}

impl FiltrationReport {
    /// The lowest nonvanishing homogeneous part of the image.
    pub fn leading_term(&self) -> Option<SemidirectSeries> {
        self.order.map(|k| self.image.homogeneous(k))
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            Some(k) => writeln!(f, "order {k}")?,
            None => writeln!(f, "order above cap {}", self.image.cap())?,
        }
        write!(f, "image {}", self.image)
    }
}

/// The order of `xi` under the linear extension of `R_n ⊗ id`.
pub fn vassiliev_degree(
    xi: &GroupRingElement,
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
) -> Result<FiltrationReport> {
    vassiliev_degree_with(&Representation::welded(basis, cap)?, xi)
}

/// As [`vassiliev_degree`], reusing the cached images of `rep`.
pub fn vassiliev_degree_with(rep: &Representation, xi: &GroupRingElement) -> Result<FiltrationReport> {
    let image = rep.eval_ring(xi)?;
    Ok(FiltrationReport {
        element: xi.clone(),
        order: image.order(),
        image,
    })
}

/// Outcome of comparing two welded words through their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinction {
    pub cap: usize,
    /// Lowest degree where the images differ.
    pub first_difference: Option<usize>,
    /// Equality of the words as automorphisms of the free group.
    pub oracle_equal: bool,
}

impl Distinction {
    /// Distinct images never come from equal words.
    pub fn consistent(&self) -> bool {
        self.first_difference.is_none() || !self.oracle_equal
    }
}

impl fmt::Display for Distinction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_difference {
            Some(k) => write!(f, "differ at degree {k}")?,
            None => write!(f, "equal to cap {}", self.cap)?,
        }
        let oracle = if self.oracle_equal { "equal" } else { "distinct" };
        write!(f, "; oracle: {oracle}")
    }
}

pub fn distinguish(
    w1: &WeldedWord,
    w2: &WeldedWord,
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
) -> Result<Distinction> {
    distinguish_with(&Representation::welded(basis, cap)?, w1, w2)
}

/// As [`distinguish`], reusing the cached images of `rep`.
pub fn distinguish_with(rep: &Representation, w1: &WeldedWord, w2: &WeldedWord) -> Result<Distinction> {
    let oracle_equal = words_equal_in_bp(w1, w2)?;
    let diff = rep.eval(w1)?.sub(&rep.eval(w2)?)?;
    Ok(Distinction {
        cap: rep.cap(),
        first_difference: diff.order(),
        oracle_equal,
    })
}

/// The algebra map `t_ij -> v_ij + v_ji`, reduced to normal form in `target`.
pub fn doubling_map(x: &TruncatedSeries, target: &GradedQuotientBasis) -> Result<TruncatedSeries> {
    let n = match x.alphabet() {
        Alphabet::Chord(n) => *n,
        other => {
            return Err(Error::AlphabetMismatch {
                left: Alphabet::Chord(target.alphabet().strands().unwrap_or(0)),
                right: other.clone(),
            })
        }
    };
    if target.alphabet() != &Alphabet::Oriented(n) {
        return Err(Error::AlphabetMismatch {
            left: Alphabet::Oriented(n),
            right: target.alphabet().clone(),
        });
    }
    let al = target.alphabet();
    let cap = x.cap();
    let images = x
        .alphabet()
        .generators()
        .map(|g| {
            let (i, j) = x.alphabet().pair(g).expect("chord alphabet");
            TruncatedSeries::pair_generator(al, cap, i, j)?.add(&TruncatedSeries::pair_generator(al, cap, j, i)?)
        })
        .collect::<Result<Vec<_>>>()?;
    target.normal_form(&x.substitute(&images)?)
}

/// Kernel of the doubling map in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaKernel {
    pub n: usize,
    pub degree: usize,
    pub source_dim: usize,
    /// A basis of the kernel, as normal forms in the chord algebra.
    pub kernel: Vec<TruncatedSeries>,
}

impl DeltaKernel {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }
}

/// Largest number of degree-`k` oriented words [`delta_kernel`] accepts.
pub const DELTA_WORD_LIMIT: u64 = 25_000;

/// The kernel of `t_ij -> v_ij + v_ji` from the degree-`k` chord algebra on
/// `n` strands to the oriented one, refusing targets with more than
/// [`DELTA_WORD_LIMIT`] words.
pub fn delta_kernel(n: usize, k: usize, store: &BasisStore) -> Result<DeltaKernel> {
    delta_kernel_with_limit(n, k, DELTA_WORD_LIMIT, store)
}

/// As [`delta_kernel`] with an explicit word limit.
pub fn delta_kernel_with_limit(n: usize, k: usize, limit: u64, store: &BasisStore) -> Result<DeltaKernel> {
    let m = Alphabet::Oriented(n).size();
    let words = (m as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if words > limit {
        return Err(Error::IndexOutOfRange(format!(
            "degree {k} on {n} strands has {words} oriented words, above the limit {limit}"
        )));
    }
    let source = store.chord(n, k)?;
    let target = store.oriented(n, k)?;
    let words = source.standard_words(k)?;
    let images = words
        .iter()
        .map(|w| {
            let x = TruncatedSeries::monomial(
                source.alphabet().clone(),
                k,
                w.clone(),
                Rational::from_integer(1.into()),
            );
            let y = doubling_map(&x, &target)?;
            Ok(y.terms()
                .map(|(u, c)| (u.rank(m), c.clone()))
                .collect::<SparseVec<u64>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = kernel(&images)
        .into_iter()
        .map(|coeffs| TruncatedSeries::from_terms(source.alphabet().clone(), k, words.iter().cloned().zip(coeffs)))
        .collect();
    Ok(DeltaKernel {
        n,
        degree: k,
        source_dim: words.len(),
        kernel,
    })
}

/// Graded dimensions of one preset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRow {
    pub preset: RelationPreset,
    pub dims: Vec<u64>,
    /// `n! * dim` for presets stable under permutations: the dimensions
    /// after tensoring with the group algebra of the symmetric group.
    pub with_permutations: Option<Vec<u64>>,
}

pub fn hilbert_row(preset: RelationPreset, cap: usize, store: &BasisStore) -> Result<HilbertRow> {
    let dims = store.get(preset.clone(), cap)?.dimensions();
    let with_permutations = match preset {
        RelationPreset::InfinitesimalArtin(n) | RelationPreset::OrientedArtin(n) => {
            let fact: u64 = (1..=n as u64).product();
            Some(dims.iter().map(|d| d * fact).collect())
        }
        _ => None,
    };
    Ok(HilbertRow {
        preset,
        dims,
        with_permutations,
    })
}

/// The chord and oriented algebras on `n` strands side by side.
pub fn hilbert_table(n: usize, cap: usize, store: &BasisStore) -> Result<Vec<HilbertRow>> {
    [RelationPreset::InfinitesimalArtin(n), RelationPreset::OrientedArtin(n)]
        .into_iter()
        .map(|p| hilbert_row(p, cap, store))
        .collect()
}

/// A reduced word of adjacent swaps whose permutation is `p`.
pub fn swap_word(p: &Permutation) -> Result<WeldedWord> {
    let n = p.size();
    let mut q = p.clone();
    let mut tail = Vec::new();
    while let Some(i) = (1..n).find(|&i| q.apply(i) > q.apply(i + 1)) {
        q = q.compose(&Permutation::adjacent(n, i)?)?;
        tail.push(Letter::Swap(i));
    }
    tail.reverse();
    WeldedWord::from_letters(n, tail)
}

/// Outcome of [`check_splitting_identity`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplittingReport {
    pub samples: usize,
    pub failures: Vec<String>,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SplittingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} samples)", self.samples)
        } else {
            write!(
                f,
                "FAIL ({} of {} samples): {}",
                self.failures.len(),
                self.samples,
                self.failures[0]
            )
        }
    }
}

fn random_mccool_word(n: usize, rng: &mut impl Rng) -> Result<WeldedWord> {
    let len = rng.gen_range(1..=4);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            let j = loop {
                let j = rng.gen_range(1..=n);
                if j != i {
                    break j;
                }
            };
            Letter::Conj {
                i,
                j,
                inverse: rng.gen_bool(0.5),
            }
        })
        .collect();
    WeldedWord::from_letters(n, letters)
}

/// Sample basis-conjugating words `c` and permutations `s`, and check that
/// multiplying `(c - 1)^k` by `s` keeps its order, for `k` up to two. Also
/// check that every `a_ij - 1` has order exactly one.
pub fn check_splitting_identity(
    n: usize,
    cap: usize,
    samples: usize,
    seed: u64,
    store: &BasisStore,
) -> Result<SplittingReport> {
    let basis = store.oriented(n, cap)?;
    let rep = Representation::welded(&basis, cap)?;
    let one = GroupRingElement::one(n);
    let mut report = SplittingReport {
        samples,
        failures: Vec::new(),
    };
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let xi = GroupRingElement::from_word(WeldedWord::conj(n, i, j)?).sub(&one)?;
            let order = vassiliev_degree_with(&rep, &xi)?.order;
            if order != Some(1) {
                report.failures.push(format!("a{i}{j} - 1 has order {order:?}"));
            }
        }
    }
    let perms = Permutation::all(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c = random_mccool_word(n, &mut rng)?;
        let s = swap_word(perms.choose(&mut rng).expect("nonempty"))?;
        let base = GroupRingElement::from_word(c.clone()).sub(&one)?;
        let s = GroupRingElement::from_word(s);
        for k in 1..=cap.min(2) {
            let power = base.pow(k)?;
            let plain = vassiliev_degree_with(&rep, &power)?.order;
            let twisted = vassiliev_degree_with(&rep, &power.mul(&s)?)?.order;
            if plain != twisted {
                report.failures.push(format!(
                    "(({c}) - 1)^{k}: order {plain:?} becomes {twisted:?} after {s}"
                ));
            }
        }
    }
    Ok(report)
}
