use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::WeldedWord;
use crate::error::{Error, Result};
use crate::series::{format_rational, parse_rational};
use crate::Rational;

/// A rational combination of welded words, kept in the spelling given.
/// Multiplication concatenates words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    n: usize,
    terms: BTreeMap<WeldedWord, Rational>,
}

impl GroupRingElement {
    pub fn zero(n: usize) -> Self {
        GroupRingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, spelled as the empty word.
    pub fn one(n: usize) -> Self {
        Self::from_word(WeldedWord::identity(n))
    }

    pub fn from_word(w: WeldedWord) -> Self {
        let mut out = Self::zero(w.strands());
        out.terms.insert(w, Rational::one());
        out
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeldedWord, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: WeldedWord, c: Rational) {
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        }
        out
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v)?, a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        (0..k).try_fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Parse `c * [word] (± c * [word])*`; the coefficient may be omitted.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut out = Self::zero(n);
        let mut rest = text.trim();
        if rest == "0" {
            return Ok(out);
        }
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            rest = rest.trim_start();
            let open = rest
                .find('[')
                .ok_or_else(|| Error::parse(text.len() - rest.len(), "expected '['"))?;
            let coeff_text = rest[..open].trim().trim_end_matches('*').trim();
            let coeff = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text)?
            };
            let close = rest[open..]
                .find(']')
                .ok_or_else(|| Error::parse(text.len() - rest.len(), "expected ']'"))?
                + open;
            let word = WeldedWord::parse(&rest[open + 1..close], n)?;
            out.add_term(word, sign.clone() * coeff);
            rest = rest[close + 1..].trim_start();
            if rest.is_empty() {
                return Ok(out);
            }
            sign = match rest.chars().next() {
                Some('+') => Rational::one(),
                Some('-') => -Rational::one(),
                _ => return Err(Error::parse(text.len() - rest.len(), "expected '+' or '-'")),
            };
            rest = &rest[1..];
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let word = if w.is_empty() { String::new() } else { w.to_string() };
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{}*[{word}]", format_rational(&c.abs()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_roundtrip() {
        let x = GroupRingElement::parse("1*[sig1] - 1*[s1]", 2).unwrap();
        assert_eq!(x.to_string(), "-1*[s1] + 1*[sig1]");
        assert_eq!(GroupRingElement::parse(&x.to_string(), 2).unwrap(), x);
        let y = GroupRingElement::parse("[a12] - 1/2*[]", 2).unwrap();
        assert_eq!(y.to_string(), "-1/2*[] + 1*[a12]");
        assert!(GroupRingElement::parse("1*[a13]", 2).is_err());
        assert!(GroupRingElement::parse("1*[s1", 2).is_err());
    }

    #[test]
    fn products_concatenate() {
        let x = GroupRingElement::parse("1*[sig1] - 1*[s1]", 3).unwrap();
        let y = GroupRingElement::parse("1*[sig2] - 1*[s2]", 3).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.terms().count(), 4);
        assert!(x.sub(&x).unwrap().is_zero());
        assert_eq!(x.pow(0).unwrap(), GroupRingElement::one(3));
    }
}
