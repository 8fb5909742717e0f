use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::Rational;

impl TruncatedSeries {
    /// `sum_{k <= cap} s^k / k!`; `s` must have zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let mut out = TruncatedSeries::one(self.alphabet.clone(), self.cap);
        let mut power = out.clone();
        for k in 1..=self.cap {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            let inv_fact = Rational::new(BigInt::one(), factorial(k));
            out = out.add(&power.scale(&inv_fact))?;
        }
        Ok(out)
    }

    /// `sum_{k >= 1} (-1)^{k+1} (g - 1)^k / k`; `g` must have constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantNotOne);
        }
        let one = TruncatedSeries::one(self.alphabet.clone(), self.cap);
        let x = self.sub(&one)?;
        let mut out = TruncatedSeries::zero(self.alphabet.clone(), self.cap);
        let mut power = one;
        for k in 1..=self.cap {
            power = power.mul(&x)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Rational::new(sign.into(), (k as i64).into())))?;
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotInvertible);
        }
        let c_inv = c.recip();
        let one = TruncatedSeries::one(self.alphabet.clone(), self.cap);
        // g = c (1 + x)  =>  g^-1 = c^-1 sum (-x)^k
        let minus_x = one.sub(&self.scale(&c_inv))?;
        let mut out = one.clone();
        let mut power = one;
        for _ in 1..=self.cap {
            power = power.mul(&minus_x)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out.scale(&c_inv))
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
