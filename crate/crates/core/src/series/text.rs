//! Text form of series: `term (+|- term)*`, `term := rational ["*" word]`,
//! `word := gen ("." gen)*`, rationals as `p` or `p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Alphabet, TruncatedSeries, Word};
use crate::error::{Error, Result};
use crate::Rational;

/// `p` or `p/q` in lowest terms with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("bad denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub(super) fn write_series(s: &TruncatedSeries, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if s.is_zero() {
        return f.write_str("0");
    }
    for (k, (w, c)) in s.terms().enumerate() {
        let mag = format_rational(&c.abs());
        match (k, c.is_negative()) {
            (0, false) => {}
            (0, true) => f.write_str("-")?,
            (_, false) => f.write_str(" + ")?,
            (_, true) => f.write_str(" - ")?,
        }
        f.write_str(&mag)?;
        if w.degree() > 0 {
            f.write_str("*")?;
            write_word(s.alphabet(), w, f)?;
        }
    }
    Ok(())
}

pub(crate) fn write_word(al: &Alphabet, w: &Word, f: &mut impl fmt::Write) -> fmt::Result {
    for (i, &g) in w.letters().iter().enumerate() {
        if i > 0 {
            f.write_char('.')?;
        }
        f.write_str(&al.name(g))?;
    }
    Ok(())
}

/// A word in the series grammar, e.g. `t12.t23`.
pub(crate) fn text_word(al: &Alphabet, w: &Word) -> String {
    let mut s = String::new();
    let _ = write_word(al, w, &mut s);
    s
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }
}

impl TruncatedSeries {
    /// Parse the text form over a known alphabet. Terms above `cap` are dropped;
    /// lines starting with `#` are ignored.
    pub fn parse(text: &str, alphabet: &Alphabet, cap: usize) -> Result<TruncatedSeries> {
        let body: String = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join(" ");
        let mut cur = Cursor { src: &body, pos: 0 };
        let mut out = TruncatedSeries::zero(alphabet.clone(), cap);
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(cur.err("empty series"));
        }
        let mut negative = cur.eat('-');
        if !negative {
            cur.eat('+');
        }
        loop {
            cur.skip_ws();
            let (coeff, word) = parse_term(&mut cur, alphabet)?;
            out.add_term(word, if negative { -coeff } else { coeff });
            cur.skip_ws();
            match cur.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return Err(cur.err(format!("unexpected {c:?}"))),
            }
            cur.pos += 1;
        }
        Ok(out)
    }
}

fn parse_term(cur: &mut Cursor<'_>, alphabet: &Alphabet) -> Result<(Rational, Word)> {
    let digits = cur.take_while(|c| c.is_ascii_digit());
    if digits.is_empty() {
        // bare word, coefficient 1
        let word = parse_word(cur, alphabet)?;
        return Ok((Rational::from_integer(1.into()), word));
    }
    let mut coeff: Rational = Rational::from_integer(digits.parse::<BigInt>().expect("digits"));
    cur.skip_ws();
    if cur.eat('/') {
        cur.skip_ws();
        let den = cur.take_while(|c| c.is_ascii_digit());
        if den.is_empty() {
            return Err(cur.err("expected denominator"));
        }
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(cur.err("zero denominator"));
        }
        coeff /= Rational::from_integer(den);
        cur.skip_ws();
    }
    if cur.eat('*') {
        cur.skip_ws();
        let word = parse_word(cur, alphabet)?;
        Ok((coeff, word))
    } else {
        Ok((coeff, Word::empty()))
    }
}

fn parse_word(cur: &mut Cursor<'_>, alphabet: &Alphabet) -> Result<Word> {
    let mut letters = Vec::new();
    loop {
        let start = cur.pos;
        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(cur.err("expected generator"));
        }
        let g = alphabet
            .lookup(name)
            .ok_or_else(|| Error::parse(start, format!("unknown generator {name:?} in {alphabet}")))?;
        letters.push(g);
        if !cur.eat('.') {
            break;
        }
    }
    Ok(Word::from_letters(&letters))
}
