//! Elements of `Q ⋊ Q[S_n]` where `Q` is a chord or oriented quotient algebra.
//!
//! Multiplication is `(a ⊗ x)(b ⊗ y) = a · x(b) ⊗ xy`, with `x` acting on
//! generators through their strand indices. Components are stored in normal
//! form, so equality is map equality.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quotient::{GradedQuotientBasis, RelationPreset};
use crate::series::TruncatedSeries;
use crate::Rational;

/// A finite sum `sum_p g_p ⊗ p`.
#[derive(Clone, Debug)]
pub struct SemidirectSeries {
    n: usize,
    basis: Arc<GradedQuotientBasis>,
    cap: usize,
    terms: BTreeMap<Permutation, TruncatedSeries>,
}

impl PartialEq for SemidirectSeries {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.cap == other.cap
            && self.basis.preset() == other.basis.preset()
            && self.terms == other.terms
    }
}

impl Eq for SemidirectSeries {}

impl SemidirectSeries {
    /// The zero element over `basis`, truncated at `cap`.
    pub fn zero(basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        let n = match basis.preset() {
            RelationPreset::OrientedUpperTriangular(_) => {
                return Err(Error::ContextMismatch(format!(
                    "{} is not stable under permutations",
                    basis.preset()
                )))
            }
            p => p
                .strands()
                .ok_or_else(|| Error::AbstractAlphabet(basis.alphabet().clone()))?,
        };
        if cap > basis.cap() {
            return Err(Error::InsufficientCap {
                needed: cap,
                available: basis.cap(),
            });
        }
        Ok(SemidirectSeries {
            n,
            basis: Arc::clone(basis),
            cap,
            terms: BTreeMap::new(),
        })
    }

    /// `g ⊗ p`, with `g` reduced to normal form.
    pub fn from_term(basis: &Arc<GradedQuotientBasis>, g: TruncatedSeries, p: Permutation) -> Result<Self> {
        let mut out = Self::zero(basis, g.cap())?;
        if p.size() != out.n {
            return Err(Error::SizeMismatch {
                left: out.n,
                right: p.size(),
            });
        }
        let g = basis.normal_form(&g)?;
        if !g.is_zero() {
            out.terms.insert(p, g);
        }
        Ok(out)
    }

    /// `1 ⊗ p`.
    pub fn permutation(basis: &Arc<GradedQuotientBasis>, cap: usize, p: Permutation) -> Result<Self> {
        Self::from_term(basis, TruncatedSeries::one(basis.alphabet().clone(), cap), p)
    }

    /// `1 ⊗ id`.
    pub fn identity(basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        let n = basis.preset().strands().unwrap_or(0);
        Self::permutation(basis, cap, Permutation::identity(n))
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

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &TruncatedSeries)> {
        self.terms.iter()
    }

    pub fn component(&self, p: &Permutation) -> Option<&TruncatedSeries> {
        self.terms.get(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term `g ⊗ p`, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Permutation, &TruncatedSeries)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.basis.preset() != other.basis.preset() {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.basis.preset(),
                other.basis.preset()
            )));
        }
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    fn insert_sum(&mut self, p: Permutation, g: TruncatedSeries) -> Result<()> {
        let sum = match self.terms.remove(&p) {
            Some(old) => old.add(&g)?,
            None => g,
        };
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (p, g) in &other.terms {
            out.insert_sum(p.clone(), g.clone())?;
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.scale(&-Rational::from_integer(1.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        } else {
            for g in out.terms.values_mut() {
                *g = g.scale(c);
            }
        }
        out
    }

    /// The twisted product.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut acc: BTreeMap<Permutation, TruncatedSeries> = BTreeMap::new();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let twisted = a.mul(&b.act_permutation(x)?)?;
                let xy = x.compose(y)?;
                let entry = match acc.remove(&xy) {
                    Some(old) => old.add(&twisted)?,
                    None => twisted,
                };
                acc.insert(xy, entry);
            }
        }
        let mut out = Self::zero(&self.basis, self.cap)?;
        for (p, g) in acc {
            let g = self.basis.normal_form(&g)?;
            if !g.is_zero() {
                out.terms.insert(p, g);
            }
        }
        Ok(out)
    }

    /// Product of a nonempty sequence of factors.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a SemidirectSeries>) -> Result<Self> {
        let mut it = factors.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidWord("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, f| acc.mul(f))
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut out = Self::identity(&self.basis, self.cap)?;
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `(g ⊗ p)^-1 = p^-1(g^-1) ⊗ p^-1` for a single invertible term.
    pub fn inverse(&self) -> Result<Self> {
        let (p, g) = self.single_term().ok_or(Error::NotSingleTerm)?;
        let g_inv = g.inverse().map_err(|_| Error::NotSingleTerm)?;
        let p_inv = p.inverse();
        let twisted = g_inv.act_permutation(&p_inv)?;
        Self::from_term(&self.basis, twisted, p_inv)
    }

    /// Constant terms: the image in the group algebra of permutations.
    pub fn projection(&self) -> BTreeMap<Permutation, Rational> {
        self.terms
            .iter()
            .map(|(p, g)| (p.clone(), g.constant_term()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// The degree-`k` part of every component.
    pub fn homogeneous(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(p, g)| (p.clone(), g.homogeneous(k)))
            .filter(|(_, g)| !g.is_zero())
            .collect();
        out
    }

    /// Drop all components above degree `cap`.
    pub fn truncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::InsufficientCap {
                needed: cap,
                available: self.cap,
            });
        }
        let mut out = Self::zero(&self.basis, cap)?;
        for (p, g) in &self.terms {
            let g = g.truncate(cap)?;
            if !g.is_zero() {
                out.terms.insert(p.clone(), g);
            }
        }
        Ok(out)
    }

    /// Lowest degree carrying a nonzero coefficient in any component.
    pub fn order(&self) -> Option<usize> {
        self.terms.values().filter_map(TruncatedSeries::min_degree).min()
    }

    /// Embed into more strands through `target`, fixing the new strands.
    pub fn stabilize(&self, target: &Arc<GradedQuotientBasis>) -> Result<Self> {
        let mut out = Self::zero(target, self.cap)?;
        if out.n < self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: out.n,
            });
        }
        for (p, g) in &self.terms {
            let g = target.normal_form(&g.stabilize(out.n)?)?;
            out.insert_sum(p.extend(out.n)?, g)?;
        }
        Ok(out)
    }

    /// Parse `(series) ⊗ perm (+ (series) ⊗ perm)*`; `@` may stand for `⊗`.
    pub fn parse(text: &str, basis: &Arc<GradedQuotientBasis>, cap: usize) -> Result<Self> {
        let mut out = Self::zero(basis, cap)?;
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(out);
        }
        let mut rest = trimmed;
        let mut offset = 0;
        loop {
            rest = rest.trim_start();
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(offset, "expected '('"))?;
            let close = matching_paren(body).ok_or_else(|| Error::parse(offset, "unbalanced '('"))?;
            let series = TruncatedSeries::parse(&body[..close], basis.alphabet(), cap)?;
            let after = body[close + 1..].trim_start();
            let after = after
                .strip_prefix('⊗')
                .or_else(|| after.strip_prefix('@'))
                .ok_or_else(|| Error::parse(offset, "expected '⊗'"))?
                .trim_start();
            let end = after
                .find(|c: char| !(c.is_ascii_digit() || c == ','))
                .unwrap_or(after.len());
            let p = Permutation::from_one_line(&after[..end])?;
            out = out.add(&Self::from_term(basis, series, p)?)?;
            let tail = after[end..].trim_start();
            offset = trimmed.len() - tail.len();
            if tail.is_empty() {
                return Ok(out);
            }
            rest = tail
                .strip_prefix('+')
                .ok_or_else(|| Error::parse(offset, "expected '+'"))?;
        }
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' if depth == 0 => return Some(i),
            ')' => depth -= 1,
            _ => {}
        }
    }
    None
}

impl fmt::Display for SemidirectSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, g)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({g}) ⊗ {p}")?;
        }
        Ok(())
    }
}
