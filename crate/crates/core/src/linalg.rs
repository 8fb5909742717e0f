//! Sparse exact row echelon forms over the rationals.
//!
//! Each row is normalized so that its largest key (the pivot) has coefficient
//! one. Rows only contain keys at or below their pivot.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A sparse vector keyed by an ordered index.
pub type SparseVec<K> = BTreeMap<K, Rational>;

/// `acc[k] += c`, dropping the entry if it cancels.
pub fn add_entry<K: Ord>(acc: &mut SparseVec<K>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `acc += factor * row`.
pub fn add_scaled<K: Ord + Clone>(acc: &mut SparseVec<K>, factor: &Rational, row: &SparseVec<K>) {
    for (k, c) in row {
        add_entry(acc, k.clone(), factor * c);
    }
}

/// An incrementally built echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn row(&self, pivot: &K) -> Option<&SparseVec<K>> {
        self.rows.get(pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter()
    }

    /// Reduce `v` modulo the span; the result has no pivot keys.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().rev().find(|k| self.rows.contains_key(*k)),
                Some(b) => v
                    .range(..b.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k)),
            }
            .cloned();
            let Some(k) = next else { return v };
            let c = -v[&k].clone();
            add_scaled(&mut v, &c, &self.rows[&k]);
            bound = Some(k);
        }
    }

    /// Add `v` to the span. Returns the new pivot if the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<K> {
        let mut r = self.reduce(v);
        let (pivot, lead) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone()))?;
        if !lead.is_one() {
            let inv = lead.recip();
            for c in r.values_mut() {
                *c *= &inv;
            }
        }
        self.rows.insert(pivot.clone(), r);
        Some(pivot)
    }

    /// Back-substitute so that no row mentions another row's pivot.
    pub fn into_reduced(self) -> Self {
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        for (pivot, row) in self.rows {
            let partial = Echelon { rows: done };
            let mut tail = row;
            let lead = tail.remove(&pivot).expect("pivot entry");
            let mut tail = partial.reduce(tail);
            tail.insert(pivot.clone(), lead);
            done = partial.rows;
            done.insert(pivot, tail);
        }
        Echelon { rows: done }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Wrap rows that already satisfy the echelon invariant.
    pub fn from_rows(rows: BTreeMap<K, SparseVec<K>>) -> Self {
        Echelon { rows }
    }

    pub fn into_rows(self) -> BTreeMap<K, SparseVec<K>> {
        self.rows
    }
}

/// Solution set of an affine system: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solve `sum_i a_i x_i + b = 0` for each equation.
///
/// Equations are sparse maps with key `0` holding `b` and key `i + 1` holding
/// the coefficient of `x_i`. Free variables are set to zero in the particular
/// solution. Fails with [`Error::Inconsistent`] tagged by `degree`.
pub fn solve_affine(
    equations: impl IntoIterator<Item = SparseVec<usize>>,
    unknowns: usize,
    degree: usize,
) -> Result<AffineSolution> {
    let mut ech = Echelon::new();
    for eq in equations {
        if let Some(p) = ech.insert(eq) {
            if p == 0 {
                return Err(Error::Inconsistent(degree));
            }
        }
    }
    let ech = ech.into_reduced();
    let mut particular = vec![Rational::zero(); unknowns];
    for (&p, row) in ech.rows() {
        if let Some(b) = row.get(&0) {
            particular[p - 1] = -b.clone();
        }
    }
    let mut kernel = Vec::new();
    for f in 1..=unknowns {
        if ech.is_pivot(&f) {
            continue;
        }
        let mut v = vec![Rational::zero(); unknowns];
        v[f - 1] = Rational::one();
        for (&p, row) in ech.rows() {
            if let Some(a) = row.get(&f) {
                v[p - 1] = -a.clone();
            }
        }
        kernel.push(v);
    }
    Ok(AffineSolution { particular, kernel })
}

/// Key for augmented elimination: tags sort below image coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Tag(usize),
    Image(K),
}

/// A basis of `{c : sum_j c_j vectors[j] = 0}`.
pub fn kernel<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> Vec<Vec<Rational>> {
    let mut ech: Echelon<Aug<K>> = Echelon::new();
    for (j, v) in vectors.iter().enumerate() {
        let mut row: SparseVec<Aug<K>> = v.iter().map(|(k, c)| (Aug::Image(k.clone()), c.clone())).collect();
        row.insert(Aug::Tag(j), Rational::one());
        ech.insert(row);
    }
    ech.into_reduced()
        .rows()
        .filter(|(p, _)| matches!(p, Aug::Tag(_)))
        .map(|(_, row)| {
            let mut c = vec![Rational::zero(); vectors.len()];
            for (k, x) in row {
                if let Aug::Tag(j) = k {
                    c[*j] = x.clone();
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(entries: &[(usize, i64)]) -> SparseVec<usize> {
        entries.iter().map(|&(k, c)| (k, r(c))).collect()
    }

    #[test]
    fn rank_and_reduction() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(v(&[(1, 1), (2, 1)])), Some(2));
        assert_eq!(e.insert(v(&[(1, 2), (2, 2)])), None);
        assert_eq!(e.insert(v(&[(0, 1), (1, -1)])), Some(1));
        assert_eq!(e.rank(), 2);
        let red = e.reduce(v(&[(2, 3)]));
        assert_eq!(red, v(&[(0, -3)]));
    }

    #[test]
    fn reduced_rows_avoid_other_pivots() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 1), (1, 1), (3, 1)]));
        e.insert(v(&[(0, 1), (1, 1)]));
        let e = e.into_reduced();
        assert_eq!(e.row(&3).unwrap(), &v(&[(3, 1)]));
    }

    #[test]
    fn affine_unique() {
        // x0 + x1 = 3, x0 - x1 = 1
        let sol = solve_affine([v(&[(0, -3), (1, 1), (2, 1)]), v(&[(0, -1), (1, 1), (2, -1)])], 2, 1).unwrap();
        assert_eq!(sol.particular, vec![r(2), r(1)]);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn affine_free_variable() {
        let sol = solve_affine([v(&[(0, -2), (1, 1), (2, 1)])], 2, 1).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        let k = &sol.kernel[0];
        assert_eq!(&k[0] + &k[1], r(0));
        assert_eq!(&sol.particular[0] + &sol.particular[1], r(2));
    }

    #[test]
    fn affine_inconsistent() {
        let eqs = [v(&[(0, -1), (1, 1)]), v(&[(0, -2), (1, 1)])];
        assert_eq!(solve_affine(eqs, 1, 7), Err(Error::Inconsistent(7)));
    }

    #[test]
    fn kernel_basis() {
        let vs = vec![v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])];
        let k = kernel(&vs);
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0], &k[0][1]);
        assert_eq!(&k[0][2], &(-k[0][0].clone()));
    }
}
