//! Associator axioms, the degree-by-degree extension of semi-associators, and
//! the three-strand Yang-Baxter equivalences.
//!
//! A parameter is a series `Φ(A, B)` with constant term one. Its images in the
//! chord algebras are `Φ_t = Φ(t_12, t_23)` and permuted copies `ᵖΦ_t`, where a
//! permutation acts by `t_ij -> t_{p(i) p(j)}`. The hexagons and the pentagon
//! are the identities
//!
//! ```text
//! H3: exp((t13+t23)/2) = ³¹²Φ · exp(t13/2) · (¹³²Φ)⁻¹ · exp(t23/2) · Φ
//! H1: exp((t12+t13)/2) = (²³¹Φ)⁻¹ · exp(t13/2) · ²¹³Φ · exp(t12/2) · Φ⁻¹
//! P:  Φ(t12, t23+t24) Φ(t13+t23, t34) = Φ(t23, t34) Φ(t12+t13, t24+t34) Φ(t12, t23)
//! ```
//!
//! in the chord algebras on three and four strands.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_entry, solve_affine, AffineSolution, Echelon, SparseVec};
use crate::perm::Permutation;
use crate::quotient::BasisStore;
use crate::represent::{central_t, check_rho3_parameter, on_chords, rho3_delta, Representation};
use crate::semidirect::SemidirectSeries;
use crate::series::lie::LyndonBasis;
use crate::series::{Alphabet, TruncatedSeries, Word};
use crate::words::{pure_braid_generator, Letter, WeldedWord};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `log Φ` is a Lie series without linear part.
    AE,
    /// Swapping `A` and `B` inverts `Φ`.
    AS,
    H1,
    H3,
    P,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::AE, Axiom::AS, Axiom::H1, Axiom::H3, Axiom::P];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AE => "AE",
            Axiom::AS => "AS",
            Axiom::H1 => "H1",
            Axiom::H3 => "H3",
            Axiom::P => "P",
        };
        f.write_str(s)
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::parse(0, format!("unknown axiom {s:?}")))
    }
}

/// Result of checking one axiom at a cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub cap: usize,
    /// Lowest degree at which the residual is nonzero.
    pub failing_degree: Option<usize>,
    /// Difference of the two sides, in normal form. For AE it is the
    /// linear part plus the non-Lie part of `log Φ`.
    pub residual: TruncatedSeries,
}

impl AxiomVerdict {
    pub fn passed(&self) -> bool {
        self.failing_degree.is_none()
    }
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failing_degree {
            None => write!(f, "{}: pass (cap {})", self.axiom, self.cap),
            Some(d) => write!(
                f,
                "{}: FAIL at degree {d} (cap {}); residual {}",
                self.axiom,
                self.cap,
                self.residual.homogeneous(d)
            ),
        }
    }
}

fn check_parameter(phi: &TruncatedSeries, cap: usize) -> Result<()> {
    if phi.alphabet() != &Alphabet::ab() {
        return Err(Error::AlphabetMismatch {
            left: Alphabet::ab(),
            right: phi.alphabet().clone(),
        });
    }
    if phi.cap() < cap {
        return Err(Error::InsufficientCap {
            needed: cap,
            available: phi.cap(),
        });
    }
    if !phi.constant_term().is_one() {
        return Err(Error::ConstantNotOne);
    }
    Ok(())
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `A <-> B`.
pub fn swap_ab(phi: &TruncatedSeries) -> Result<TruncatedSeries> {
    phi.permute_generators(&[1, 0])
}

fn perm(one_line: &str) -> Permutation {
    Permutation::from_one_line(one_line).expect("valid permutation literal")
}

struct Chords {
    al: Alphabet,
    cap: usize,
}

impl Chords {
    fn new(n: usize, cap: usize) -> Self {
        Chords {
            al: Alphabet::Chord(n),
            cap,
        }
    }

    fn sum(&self, pairs: &[(usize, usize)]) -> Result<TruncatedSeries> {
        pairs
            .iter()
            .try_fold(TruncatedSeries::zero(self.al.clone(), self.cap), |acc, &(i, j)| {
                acc.add(&TruncatedSeries::pair_generator(&self.al, self.cap, i, j)?)
            })
    }

    /// `exp(sum / 2)`.
    fn half_exp(&self, pairs: &[(usize, usize)]) -> Result<TruncatedSeries> {
        self.sum(pairs)?.scale(&half()).exp()
    }
}

fn hexagon_residual(phi: &TruncatedSeries, axiom: Axiom, cap: usize) -> Result<TruncatedSeries> {
    let c = Chords::new(3, cap);
    let phi_t = on_chords(phi, cap)?;
    let act = |p: &str| phi_t.act_permutation(&perm(p));
    let (lhs, factors) = match axiom {
        Axiom::H3 => (
            c.half_exp(&[(1, 3), (2, 3)])?,
            [
                act("312")?,
                c.half_exp(&[(1, 3)])?,
                act("132")?.inverse()?,
                c.half_exp(&[(2, 3)])?,
                phi_t.clone(),
            ],
        ),
        Axiom::H1 => (
            c.half_exp(&[(1, 2), (1, 3)])?,
            [
                act("231")?.inverse()?,
                c.half_exp(&[(1, 3)])?,
                act("213")?,
                c.half_exp(&[(1, 2)])?,
                phi_t.inverse()?,
            ],
        ),
        _ => unreachable!("hexagon axiom"),
    };
    lhs.sub(&TruncatedSeries::product(&factors)?)
}

fn pentagon_residual(phi: &TruncatedSeries, cap: usize) -> Result<TruncatedSeries> {
    let c = Chords::new(4, cap);
    let f = |x: &[(usize, usize)], y: &[(usize, usize)]| phi.substitute2(&c.sum(x)?, &c.sum(y)?);
    let lhs = f(&[(1, 2)], &[(2, 3), (2, 4)])?.mul(&f(&[(1, 3), (2, 3)], &[(3, 4)])?)?;
    let rhs = TruncatedSeries::product(&[
        f(&[(2, 3)], &[(3, 4)])?,
        f(&[(1, 2), (1, 3)], &[(2, 4), (3, 4)])?,
        f(&[(1, 2)], &[(2, 3)])?,
    ])?;
    lhs.sub(&rhs)
}

fn exponential_residual(phi: &TruncatedSeries) -> Result<TruncatedSeries> {
    let log = phi.log()?;
    let mut out = log.homogeneous(1);
    let theta = log.dynkin();
    for k in 2..=log.cap() {
        let x = log.homogeneous(k);
        let lie = theta.homogeneous(k).scale(&Rational::new(1.into(), k.into()));
        out = out.add(&x.sub(&lie)?)?;
    }
    Ok(out)
}

/// The residual of `axiom` for `phi` at `cap`, reduced to normal form.
pub fn axiom_residual(phi: &TruncatedSeries, axiom: Axiom, cap: usize, store: &BasisStore) -> Result<TruncatedSeries> {
    check_parameter(phi, cap)?;
    let phi = phi.truncate(cap)?;
    match axiom {
        Axiom::AE => exponential_residual(&phi),
        Axiom::AS => swap_ab(&phi)?.sub(&phi.inverse()?),
        Axiom::H1 | Axiom::H3 => store.chord(3, cap)?.normal_form(&hexagon_residual(&phi, axiom, cap)?),
        Axiom::P => store.chord(4, cap)?.normal_form(&pentagon_residual(&phi, cap)?),
    }
}

/// Check one axiom for `phi` at `cap`.
pub fn check_axiom(phi: &TruncatedSeries, axiom: Axiom, cap: usize, store: &BasisStore) -> Result<AxiomVerdict> {
    let residual = axiom_residual(phi, axiom, cap, store)?;
    Ok(AxiomVerdict {
        axiom,
        cap,
        failing_degree: residual.min_degree(),
        residual,
    })
}

/// Affine solution set for the next degree of a semi-associator.
#[derive(Clone, Debug)]
pub struct Extension {
    degree: usize,
    lyndon: LyndonBasis,
    base_log: TruncatedSeries,
    solution: AffineSolution,
}

impl Extension {
    /// The degree being solved for.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coordinates are taken in this basis.
    pub fn lyndon(&self) -> &LyndonBasis {
        &self.lyndon
    }

    pub fn solution(&self) -> &AffineSolution {
        &self.solution
    }

    pub fn kernel_dim(&self) -> usize {
        self.solution.kernel.len()
    }

    /// `particular + sum_i coeffs[i] * kernel[i]`, in Lyndon coordinates.
    pub fn coordinates(&self, coeffs: &[Rational]) -> Result<Vec<Rational>> {
        if coeffs.len() != self.kernel_dim() {
            return Err(Error::SizeMismatch {
                left: self.kernel_dim(),
                right: coeffs.len(),
            });
        }
        let mut x = self.solution.particular.clone();
        for (c, v) in coeffs.iter().zip(&self.solution.kernel) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += c * vi;
            }
        }
        Ok(x)
    }

    /// The extended series `exp(log Φ + ℓ)` for Lyndon coordinates `x` of `ℓ`.
    pub fn associator(&self, x: &[Rational]) -> Result<TruncatedSeries> {
        candidate(&self.base_log, &self.lyndon, x)
    }

    /// The extension with every free parameter set to zero.
    pub fn particular(&self) -> Result<TruncatedSeries> {
        self.associator(&self.solution.particular)
    }

    /// The homogeneous Lie correction for Lyndon coordinates `x`.
    pub fn correction(&self, x: &[Rational]) -> Result<TruncatedSeries> {
        self.lyndon.combine(x)
    }
}

fn candidate(base_log: &TruncatedSeries, lyndon: &LyndonBasis, x: &[Rational]) -> Result<TruncatedSeries> {
    base_log.add(&lyndon.combine(x)?)?.exp()
}

fn check_hypotheses(phi: &TruncatedSeries, store: &BasisStore) -> Result<()> {
    let d = phi.cap();
    if d == 0 {
        return Err(Error::InsufficientCap {
            needed: 1,
            available: 0,
        });
    }
    for axiom in [Axiom::AE, Axiom::AS, Axiom::H3] {
        let v = check_axiom(phi, axiom, d, store)?;
        if let Some(degree) = v.failing_degree {
            return Err(Error::HypothesisFailed {
                axiom: axiom.to_string(),
                degree,
            });
        }
    }
    Ok(())
}

/// Lie corrections in the next `steps` degrees above the cap of `phi`, solved
/// together. Unknowns are the Lyndon coordinates of each degree in turn.
///
/// The residuals are affine in the unknowns: a product of two corrections
/// has degree at least `2(d+1)`, beyond `d + steps` when `steps <= d + 1`.
fn solve_next(
    phi: &TruncatedSeries,
    steps: usize,
    store: &BasisStore,
) -> Result<(Vec<LyndonBasis>, TruncatedSeries, AffineSolution)> {
    let d = phi.cap();
    debug_assert!(steps >= 1 && steps <= d + 1);
    let top = d + steps;
    let blocks = (d + 1..=top)
        .map(|k| LyndonBasis::new(&Alphabet::ab(), k, top))
        .collect::<Result<Vec<_>>>()?;
    let base_log = phi.log()?.pad_to_cap(top);
    let unknowns: usize = blocks.iter().map(LyndonBasis::len).sum();
    let candidate = |x: &[Rational]| -> Result<TruncatedSeries> {
        let mut log = base_log.clone();
        let mut offset = 0;
        for b in &blocks {
            log = log.add(&b.combine(&x[offset..offset + b.len()])?)?;
            offset += b.len();
        }
        log.exp()
    };
    let residuals = |x: &[Rational]| -> Result<Vec<TruncatedSeries>> {
        let cand = candidate(x)?;
        Ok(vec![
            axiom_residual(&cand, Axiom::AS, top, store)?,
            axiom_residual(&cand, Axiom::H3, top, store)?,
        ])
    };
    let zero = vec![Rational::zero(); unknowns];
    let r0 = residuals(&zero)?;
    let mut equations: BTreeMap<(usize, Word), SparseVec<usize>> = BTreeMap::new();
    for (tag, r) in r0.iter().enumerate() {
        for (w, c) in r.terms() {
            add_entry(equations.entry((tag, w.clone())).or_default(), 0, c.clone());
        }
    }
    for i in 0..unknowns {
        let mut x = zero.clone();
        x[i] = Rational::one();
        for (tag, (ri, r0)) in residuals(&x)?.iter().zip(&r0).enumerate() {
            for (w, c) in ri.sub(r0)?.terms() {
                add_entry(equations.entry((tag, w.clone())).or_default(), i + 1, c.clone());
            }
        }
    }
    let solution = solve_affine(equations.into_values(), unknowns, top)?;
    Ok((blocks, base_log, solution))
}

/// Solve for the degree-`d+1` Lie correction `ℓ` making `exp(log Φ + ℓ)` satisfy
/// AS and H3 through degree `d+1`, where `d` is the cap of `phi`.
///
/// `phi` must satisfy AE, AS and H3 at its own cap.
pub fn extend_semi_associator(phi: &TruncatedSeries, store: &BasisStore) -> Result<Extension> {
    check_hypotheses(phi, store)?;
    let (mut blocks, base_log, solution) = solve_next(phi, 1, store)?;
    Ok(Extension {
        degree: phi.cap() + 1,
        lyndon: blocks.remove(0),
        base_log,
        solution,
    })
}

/// Extend up to `degree`, one degree at a time, reporting the kernel
/// dimension of each single-degree solution set.
///
/// A particular solution can be obstructed one degree later, so each
/// correction is taken from a joint solve of the next two degrees with free
/// parameters set to zero. The result therefore extends at least one more
/// degree.
pub fn extend_to_degree(
    phi: &TruncatedSeries,
    degree: usize,
    store: &BasisStore,
) -> Result<(TruncatedSeries, Vec<(usize, usize)>)> {
    let mut current = phi.clone();
    let mut kernels = Vec::new();
    while current.cap() < degree {
        let ext = extend_semi_associator(&current, store)?;
        kernels.push((ext.degree(), ext.kernel_dim()));
        let (blocks, _, joint) = solve_next(&current, 2, store)?;
        current = ext.associator(&joint.particular[..blocks[0].len()])?;
    }
    Ok((current, kernels))
}

/// Result of comparing `ρΔ` with `ρσ₂ ρσ₁ ρσ₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbVerdict {
    pub cap: usize,
    pub failing_degree: Option<usize>,
    pub residual: SemidirectSeries,
}

impl YbVerdict {
    pub fn passed(&self) -> bool {
        self.failing_degree.is_none()
    }
}

/// Test the Yang-Baxter form `ρΔ = ρσ₂ ρσ₁ ρσ₂` of the three-strand family.
pub fn check_yang_baxter(psi: &TruncatedSeries, cap: usize, store: &BasisStore) -> Result<YbVerdict> {
    let basis = store.chord(3, cap)?;
    let rep = Representation::rho3(psi, &basis, cap)?;
    let s1 = rep.image(Letter::Sigma { i: 1, inverse: false })?;
    let s2 = rep.image(Letter::Sigma { i: 2, inverse: false })?;
    let residual = rho3_delta(psi, &basis, cap)?.sub(&SemidirectSeries::product([s2, s1, s2])?)?;
    Ok(YbVerdict {
        cap,
        failing_degree: residual.order(),
        residual,
    })
}

/// `ρΔ² = exp(2T) ⊗ id` at `cap`.
pub fn delta_squared_is_central(psi: &TruncatedSeries, cap: usize, store: &BasisStore) -> Result<bool> {
    let basis = store.chord(3, cap)?;
    let delta = rho3_delta(psi, &basis, cap)?;
    let expected = SemidirectSeries::from_term(
        &basis,
        central_t(cap)?.scale(&Rational::from_integer(2.into())).exp()?,
        Permutation::identity(3),
    )?;
    Ok(delta.pow(2)? == expected)
}

/// Whether the three-strand image of `σ₂` equals the Drinfeld image.
pub fn sigma2_images_agree(psi: &TruncatedSeries, cap: usize, store: &BasisStore) -> Result<bool> {
    let basis = store.chord(3, cap)?;
    let sigma2 = WeldedWord::sigma(3, 2)?;
    let rho = Representation::rho3(psi, &basis, cap)?.eval(&sigma2)?;
    let drinfeld = Representation::drinfeld(psi, &basis, cap)?.eval(&sigma2)?;
    Ok(rho == drinfeld)
}

/// Verdicts of the individual checks behind [`check_equivalences`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub cap: usize,
    pub yb: bool,
    pub h3: bool,
    pub h1: bool,
    pub antisymmetry: bool,
    pub delta_squared: bool,
    /// Compared only when AS and H3 hold.
    pub sigma2_agrees: Option<bool>,
}

impl EquivalenceReport {
    pub fn yb_iff_h3(&self) -> bool {
        self.yb == self.h3
    }

    pub fn yb_implies_as(&self) -> bool {
        !self.yb || self.antisymmetry
    }

    pub fn h1_iff_h3_under_as(&self) -> bool {
        !self.antisymmetry || self.h1 == self.h3
    }

    pub fn delta_squared_under_yb(&self) -> bool {
        !self.yb || self.delta_squared
    }

    /// Every implication holds.
    pub fn consistent(&self) -> bool {
        self.yb_iff_h3()
            && self.yb_implies_as()
            && self.h1_iff_h3_under_as()
            && self.delta_squared_under_yb()
            && self.sigma2_agrees != Some(false)
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |b: bool| if b { "pass" } else { "fail" };
        writeln!(f, "cap {}", self.cap)?;
        writeln!(
            f,
            "  YB {}  H3 {}  H1 {}  AS {}",
            v(self.yb),
            v(self.h3),
            v(self.h1),
            v(self.antisymmetry)
        )?;
        writeln!(f, "  delta^2 = exp(2T): {}", v(self.delta_squared))?;
        match self.sigma2_agrees {
            Some(b) => writeln!(f, "  sigma_2 images agree: {}", v(b))?,
            None => writeln!(f, "  sigma_2 images: not compared")?,
        }
        writeln!(
            f,
            "  YB <=> H3: {}  YB => AS: {}  H1 <=> H3 under AS: {}",
            v(self.yb_iff_h3()),
            v(self.yb_implies_as()),
            v(self.h1_iff_h3_under_as())
        )
    }
}

/// Run the three-strand checks for `psi` at `cap` and collect the verdicts.
pub fn check_equivalences(psi: &TruncatedSeries, cap: usize, store: &BasisStore) -> Result<EquivalenceReport> {
    check_rho3_parameter(psi, cap)?;
    let pass = |a: Axiom| -> Result<bool> { Ok(check_axiom(psi, a, cap, store)?.passed()) };
    let h3 = pass(Axiom::H3)?;
    let antisymmetry = pass(Axiom::AS)?;
    let sigma2_agrees = if h3 && antisymmetry {
        Some(sigma2_images_agree(psi, cap, store)?)
    } else {
        None
    };
    Ok(EquivalenceReport {
        cap,
        yb: check_yang_baxter(psi, cap, store)?.passed(),
        h3,
        h1: pass(Axiom::H1)?,
        antisymmetry,
        delta_squared: delta_squared_is_central(psi, cap, store)?,
        sigma2_agrees,
    })
}

/// With `μ_ij = ρα_ij - 1` for the three-strand family, check that the
/// constants and products of at most `cap` factors `μ` span the chord algebra
/// on three strands through degree `cap`.
pub fn check_expansion_property(psi: &TruncatedSeries, cap: usize, store: &BasisStore) -> Result<bool> {
    let basis = store.chord(3, cap)?;
    let rep = Representation::rho3(psi, &basis, cap)?;
    let id = Permutation::identity(3);
    let mut mus = Vec::new();
    for (j, i) in [(1, 2), (1, 3), (2, 3)] {
        let img = rep.eval(&pure_braid_generator(j, i, 3)?)?;
        let g = crate::represent::single_component(&img, &id)
            .ok_or_else(|| Error::NotGroupLike(format!("image of alpha_{j}{i} is not pure")))?;
        mus.push(g.sub(&TruncatedSeries::one(basis.alphabet().clone(), cap))?);
    }
    let m = basis.alphabet().size();
    let vector = |x: &TruncatedSeries| -> SparseVec<(usize, u64)> {
        x.terms().map(|(w, c)| ((w.degree(), w.rank(m)), c.clone())).collect()
    };
    let mut span: Echelon<(usize, u64)> = Echelon::new();
    let mut layer = vec![TruncatedSeries::one(basis.alphabet().clone(), cap)];
    span.insert(vector(&layer[0]));
    for _ in 0..cap {
        let mut next = Vec::new();
        for x in &layer {
            for mu in &mus {
                let y = basis.normal_form(&x.mul(mu)?)?;
                span.insert(vector(&y));
                next.push(y);
            }
        }
        layer = next;
    }
    let total: u64 = (0..=cap).map(|k| basis.dimension(k)).sum::<Result<u64>>()?;
    Ok(span.rank() as u64 == total)
}
