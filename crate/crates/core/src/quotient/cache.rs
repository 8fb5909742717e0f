//! One text file per (preset, degree):
//!
//! ```text
//! welded-basis 1
//! preset oriented_artin(3)
//! degree 2
//! rank 9
//! v13.v23 = 1*v23.v13
//! ```
//!
//! Each row maps a pivot word to its normal form in the series grammar.
//! Files are written to a temporary name and renamed into place.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_traits::One;

use super::{DegreeSlice, RelationPreset};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::series::{text_word, TruncatedSeries, Word};

const MAGIC: &str = "welded-basis 1";

fn path_for(dir: &Path, preset: &RelationPreset, k: usize) -> PathBuf {
    dir.join(format!("{}.d{k}.basis", preset.slug()))
}

fn cache_err(msg: impl Into<String>) -> Error {
    Error::Cache(msg.into())
}

pub(super) fn store(dir: &Path, preset: &RelationPreset, slice: &DegreeSlice) -> Result<()> {
    let al = preset.alphabet();
    let m = al.size();
    let k = slice.degree;
    let mut body = String::new();
    let _ = writeln!(body, "{MAGIC}");
    let _ = writeln!(body, "preset {preset}");
    let _ = writeln!(body, "degree {k}");
    let _ = writeln!(body, "rank {}", slice.rank());
    for (&p, nf) in &slice.reduction {
        let rhs = TruncatedSeries::from_terms(
            al.clone(),
            k,
            nf.iter().map(|(&r, c)| (Word::unrank(r, k, m), c.clone())),
        );
        let _ = writeln!(body, "{} = {rhs}", text_word(&al, &Word::unrank(p, k, m)));
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| cache_err(e.to_string()))?;
    tmp.write_all(body.as_bytes()).map_err(|e| cache_err(e.to_string()))?;
    tmp.persist(path_for(dir, preset, k))
        .map_err(|e| cache_err(e.to_string()))?;
    Ok(())
}

pub(super) fn load(dir: &Path, preset: &RelationPreset, k: usize) -> Result<DegreeSlice> {
    let path = path_for(dir, preset, k);
    let text = std::fs::read_to_string(&path).map_err(|e| cache_err(e.to_string()))?;
    let mut lines = text.lines();
    let mut expect = |want: String| match lines.next() {
        Some(line) if line == want => Ok(()),
        other => Err(cache_err(format!(
            "{}: expected {want:?}, found {other:?}",
            path.display()
        ))),
    };
    expect(MAGIC.to_string())?;
    expect(format!("preset {preset}"))?;
    expect(format!("degree {k}"))?;
    let rank: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("rank "))
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| cache_err("missing rank"))?;
    let al = preset.alphabet();
    let m = al.size();
    let mut reduction = std::collections::BTreeMap::new();
    for line in lines {
        let (lhs, rhs) = line
            .split_once(" = ")
            .ok_or_else(|| cache_err(format!("bad row {line:?}")))?;
        let pivot = TruncatedSeries::parse(lhs, &al, k)?;
        let (w, _) = pivot
            .terms()
            .next()
            .filter(|(w, c)| pivot.len() == 1 && w.degree() == k && c.is_one())
            .ok_or_else(|| cache_err(format!("bad pivot {lhs:?}")))?;
        let nf: SparseVec<u64> = TruncatedSeries::parse(rhs, &al, k)?
            .into_terms()
            .map(|(w, c)| (w.rank(m), c))
            .collect();
        reduction.insert(w.rank(m), nf);
    }
    if reduction.len() != rank {
        return Err(cache_err(format!("{}: truncated file", path.display())));
    }
    Ok(DegreeSlice { degree: k, reduction })
}
