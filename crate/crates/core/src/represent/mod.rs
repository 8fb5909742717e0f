//! Representations of braid and welded-braid words in semidirect algebras.
//!
//! Three families are available:
//! - welded: `a_ij -> exp(v_ij) ⊗ id`, `s_i -> 1 ⊗ s_i`, and `sigma_i` through
//!   `a_{i,i+1} s_i`, into the oriented algebra
//! - Drinfeld: `sigma_1 -> exp(t_12/2) ⊗ s_1` and `sigma_i` conjugated by
//!   `Φ(sum_{j<i} t_ji, t_{i,i+1})`, into the chord algebra
//! - the three-strand family fixed by `sigma_1` and `Δ -> exp(T) Ψ_t^-1 ⊗ 321`
//!
//! Generator images are computed once per [`Representation`]; a word is the
//! product of the images of its letters.

mod axioms;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quotient::{GradedQuotientBasis, RelationPreset};
use crate::semidirect::SemidirectSeries;
use crate::series::{Alphabet, TruncatedSeries};
use crate::words::{GroupRingElement, Letter, WeldedWord};
use crate::Rational;

pub use axioms::{check_family_axioms, AxiomCheck, FamilyReport};

/// Which representation to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Welded,
    /// Parametrized by a series `Φ(A, B)` with constant term one.
    Drinfeld(TruncatedSeries),
    /// Three strands, parametrized by a group-like `Ψ(A, B)` with no linear part.
    Rho3(TruncatedSeries),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Welded => "welded",
            Family::Drinfeld(_) => "drinfeld",
            Family::Rho3(_) => "rho3",
        }
    }

    /// The target algebra on `n` strands.
    pub fn preset(&self, n: usize) -> RelationPreset {
        match self {
            Family::Welded => RelationPreset::OrientedArtin(n),
            _ => RelationPreset::InfinitesimalArtin(n),
        }
    }

    /// Generators (not inverses) the family is defined on.
    pub fn generators(&self, n: usize) -> Vec<Letter> {
        let sigmas = (1..n).map(|i| Letter::Sigma { i, inverse: false });
        match self {
            Family::Welded => WeldedWord::alphabet(n)
                .into_iter()
                .filter(|l| {
                    !matches!(
                        l,
                        Letter::Conj { inverse: true, .. } | Letter::Sigma { inverse: true, .. }
                    )
                })
                .collect(),
            _ => sigmas.collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A representation with its generator images cached.
#[derive(Clone, Debug)]
pub struct Representation {
    family: Family,
    basis: Arc<GradedQuotientBasis>,
    n: usize,
    cap: usize,
    images: HashMap<Letter, SemidirectSeries>,
}

impl Representation {
    pub fn new(family: Family, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        let n = basis
            .preset()
            .strands()
            .ok_or_else(|| Error::AbstractAlphabet(basis.alphabet().clone()))?;
        if basis.preset() != &family.preset(n) {
            return Err(Error::ContextMismatch(format!(
                "{} family needs {}, got {}",
                family,
                family.preset(n),
                basis.preset()
            )));
        }
        let mut images = HashMap::new();
        for l in family.generators(n) {
            let img = match &family {
                Family::Welded => welded_image(basis, cap, l)?,
                Family::Drinfeld(phi) => drinfeld_image(basis, cap, phi, l)?,
                Family::Rho3(psi) => rho3_image(basis, cap, psi, l)?,
            };
            if l.inverse() != l {
                images.insert(l.inverse(), img.inverse()?);
            }
            images.insert(l, img);
        }
        Ok(Representation {
            family,
            basis: Arc::clone(basis),
            n,
            cap,
            images,
        })
    }

    /// The map `R_n ⊗ id` into the oriented algebra.
    pub fn welded(basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        Self::new(Family::Welded, basis, cap)
    }

    pub fn drinfeld(phi: &TruncatedSeries, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        Self::new(Family::Drinfeld(phi.clone()), basis, cap)
    }

    pub fn rho3(psi: &TruncatedSeries, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        Self::new(Family::Rho3(psi.clone()), basis, cap)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn basis(&self) -> &Arc<GradedQuotientBasis> {
        &self.basis
    }

    /// The cached image of one letter.
    pub fn image(&self, l: Letter) -> Result<&SemidirectSeries> {
        self.images
            .get(&l)
            .ok_or_else(|| Error::InvalidWord(format!("{l} is not in the domain of the {} family", self.family)))
    }

    pub fn eval(&self, w: &WeldedWord) -> Result<SemidirectSeries> {
        if w.strands() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: w.strands(),
            });
        }
        let mut out = SemidirectSeries::identity(&self.basis, self.cap)?;
        for &l in w.letters() {
            out = out.mul(self.image(l)?)?;
        }
        Ok(out)
    }

    /// Linear extension to the group ring.
    pub fn eval_ring(&self, x: &GroupRingElement) -> Result<SemidirectSeries> {
        let mut out = SemidirectSeries::zero(&self.basis, self.cap)?;
        for (w, c) in x.terms() {
            out = out.add(&self.eval(w)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Evaluate `R_n ⊗ id`.
pub fn eval_welded(w: &WeldedWord, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<SemidirectSeries> {
    Representation::welded(basis, cap)?.eval(w)
}

/// Evaluate the Drinfeld representation attached to `phi`.
pub fn eval_drinfeld(
    w: &WeldedWord,
    phi: &TruncatedSeries,
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
) -> Result<SemidirectSeries> {
    Representation::drinfeld(phi, basis, cap)?.eval(w)
}

/// Evaluate the three-strand representation attached to `psi`.
pub fn eval_rho3(
    w: &WeldedWord,
    psi: &TruncatedSeries,
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
) -> Result<SemidirectSeries> {
    Representation::rho3(psi, basis, cap)?.eval(w)
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

pub(crate) fn chord(alphabet: &Alphabet, cap: usize, i: usize, j: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::pair_generator(alphabet, cap, i, j)
}

/// `T = (t_12 + t_13 + t_23) / 2` in the chord algebra on three strands.
pub fn central_t(cap: usize) -> Result<TruncatedSeries> {
    let al = Alphabet::Chord(3);
    let sum = chord(&al, cap, 1, 2)?
        .add(&chord(&al, cap, 1, 3)?)?
        .add(&chord(&al, cap, 2, 3)?)?;
    Ok(sum.scale(&half()))
}

/// `f(t_12, t_23)` for a series `f` over `{A, B}`.
pub fn on_chords(f: &TruncatedSeries, cap: usize) -> Result<TruncatedSeries> {
    let al = Alphabet::Chord(3);
    f.substitute2(&chord(&al, cap, 1, 2)?, &chord(&al, cap, 2, 3)?)
}

fn welded_image(basis: &Arc<GradedQuotientBasis>, cap: usize, l: Letter) -> Result<SemidirectSeries> {
    let n = basis.preset().strands().unwrap_or(0);
    match l {
        Letter::Conj { i, j, inverse } => {
            let v = chord(basis.alphabet(), cap, i, j)?;
            let v = if inverse { v.neg() } else { v };
            SemidirectSeries::from_term(basis, v.exp()?, Permutation::identity(n))
        }
        Letter::Swap(i) => SemidirectSeries::permutation(basis, cap, Permutation::adjacent(n, i)?),
        Letter::Sigma { i, inverse } => {
            let a = welded_image(
                basis,
                cap,
                Letter::Conj {
                    i,
                    j: i + 1,
                    inverse: false,
                },
            )?;
            let s = welded_image(basis, cap, Letter::Swap(i))?;
            let sigma = a.mul(&s)?;
            if inverse {
                sigma.inverse()
            } else {
                Ok(sigma)
            }
        }
    }
}

fn check_parameter(f: &TruncatedSeries, cap: usize) -> Result<()> {
    if f.alphabet().size() != 2 || f.alphabet().strands().is_some() {
        return Err(Error::AlphabetMismatch {
            left: Alphabet::ab(),
            right: f.alphabet().clone(),
        });
    }
    if f.cap() < cap {
        return Err(Error::InsufficientCap {
            needed: cap,
            available: f.cap(),
        });
    }
    if !f.constant_term().is_one() {
        return Err(Error::ConstantNotOne);
    }
    Ok(())
}

fn drinfeld_image(
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
    phi: &TruncatedSeries,
    l: Letter,
) -> Result<SemidirectSeries> {
    check_parameter(phi, cap)?;
    let Letter::Sigma { i, inverse: false } = l else {
        return Err(Error::InvalidWord(format!("{l} is not a braid generator")));
    };
    let al = basis.alphabet();
    let n = basis.preset().strands().unwrap_or(0);
    let id = Permutation::identity(n);
    let t = chord(al, cap, i, i + 1)?;
    let core = SemidirectSeries::from_term(basis, t.scale(&half()).exp()?, Permutation::adjacent(n, i)?)?;
    if i == 1 {
        return Ok(core);
    }
    let mut x = TruncatedSeries::zero(al.clone(), cap);
    for j in 1..i {
        x = x.add(&chord(al, cap, j, i)?)?;
    }
    let phi_i = SemidirectSeries::from_term(basis, phi.substitute2(&x, &t)?, id)?;
    phi_i.inverse()?.mul(&core)?.mul(&phi_i)
}

/// Check that `psi` is an admissible parameter for the three-strand family:
/// constant term one, no linear part, Lie logarithm.
pub fn check_rho3_parameter(psi: &TruncatedSeries, cap: usize) -> Result<()> {
    check_parameter(psi, cap)?;
    let log = psi.log()?;
    if !log.homogeneous(1).is_zero() {
        return Err(Error::Normalization("parameter has a linear part".into()));
    }
    if !log.is_lie_element()? {
        return Err(Error::NotGroupLike("logarithm is not a Lie series".into()));
    }
    Ok(())
}

fn rho3_image(
    basis: &Arc<GradedQuotientBasis>,
    cap: usize,
    psi: &TruncatedSeries,
    l: Letter,
) -> Result<SemidirectSeries> {
    check_rho3_parameter(psi, cap)?;
    if basis.preset() != &RelationPreset::InfinitesimalArtin(3) {
        return Err(Error::ContextMismatch(format!(
            "the three-strand family needs {}, got {}",
            RelationPreset::InfinitesimalArtin(3),
            basis.preset()
        )));
    }
    let al = basis.alphabet();
    let h = half();
    match l {
        Letter::Sigma { i: 1, inverse: false } => {
            let e = chord(al, cap, 1, 2)?.scale(&h).exp()?;
            SemidirectSeries::from_term(basis, e, Permutation::adjacent(3, 1)?)
        }
        Letter::Sigma { i: 2, inverse: false } => {
            // exp(-t12/2) exp(T) 213(Φ)^-1 exp(-t13/2) ⊗ s2
            let phi = on_chords(psi, cap)?;
            let p213 = Permutation::from_one_line("213")?;
            let factors = [
                chord(al, cap, 1, 2)?.scale(&-h.clone()).exp()?,
                central_t(cap)?.exp()?,
                phi.act_permutation(&p213)?.inverse()?,
                chord(al, cap, 1, 3)?.scale(&-h).exp()?,
            ];
            let u = TruncatedSeries::product(&factors)?;
            SemidirectSeries::from_term(basis, u, Permutation::adjacent(3, 2)?)
        }
        other => Err(Error::InvalidWord(format!(
            "{other} is not a braid generator on 3 strands"
        ))),
    }
}

/// `ρΔ = exp(T) Ψ_t^-1 ⊗ 321`.
pub fn rho3_delta(psi: &TruncatedSeries, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<SemidirectSeries> {
    check_rho3_parameter(psi, cap)?;
    let g = central_t(cap)?.exp()?.mul(&on_chords(psi, cap)?.inverse()?)?;
    SemidirectSeries::from_term(basis, g, Permutation::from_one_line("321")?)
}

/// The component `u` of a single term `u ⊗ p`, checked against `p`.
pub(crate) fn single_component<'a>(x: &'a SemidirectSeries, p: &Permutation) -> Option<&'a TruncatedSeries> {
    x.single_term().filter(|(q, _)| *q == p).map(|(_, g)| g)
}
