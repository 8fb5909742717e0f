//! Series files: `#` comment lines, one of which may be `# cap K`, followed by
//! a series in the text grammar, possibly spread over several lines.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use welded_core::{Alphabet, TruncatedSeries};

pub fn parse(text: &str, alphabet: &Alphabet, cap_hint: Option<usize>) -> Result<TruncatedSeries> {
    let mut cap = None;
    let mut body = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("cap") {
                cap = Some(value.trim().parse::<usize>().context("bad cap header")?);
            }
        } else if !line.is_empty() {
            body.push(line);
        }
    }
    let cap = match (cap, cap_hint) {
        (Some(c), _) | (None, Some(c)) => c,
        (None, None) => bail!("no '# cap K' header and no --cap given"),
    };
    if body.is_empty() {
        bail!("no series found");
    }
    Ok(TruncatedSeries::parse(&body.join(" "), alphabet, cap)?)
}

pub fn read(path: &Path, alphabet: &Alphabet, cap_hint: Option<usize>) -> Result<TruncatedSeries> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text, alphabet, cap_hint).with_context(|| format!("parsing {}", path.display()))
}

pub fn render(s: &TruncatedSeries, comments: &[String]) -> String {
    let mut out = format!("# cap {}\n", s.cap());
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&s.to_string());
    out.push('\n');
    out
}

pub fn write(path: &Path, s: &TruncatedSeries, comments: &[String]) -> Result<()> {
    fs::write(path, render(s, comments)).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_body() {
        let s = parse("# cap 2\n# note\n1 + 1/24*A.B\n - 1/24*B.A\n", &Alphabet::ab(), None).unwrap();
        assert_eq!(s.cap(), 2);
        assert_eq!(s.to_string(), "1 + 1/24*A.B - 1/24*B.A");
        let back = parse(&render(&s, &["x".into()]), &Alphabet::ab(), None).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn cap_falls_back_to_flag() {
        assert_eq!(parse("1", &Alphabet::ab(), Some(3)).unwrap().cap(), 3);
        assert!(parse("1", &Alphabet::ab(), None).is_err());
        assert!(parse("# cap 2\n", &Alphabet::ab(), None).is_err());
    }
}
