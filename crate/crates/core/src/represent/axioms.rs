use std::fmt;

use num_traits::One;

use super::{chord, Family, Representation};
use crate::error::{Error, Result};
use crate::quotient::BasisStore;
use crate::semidirect::SemidirectSeries;
use crate::series::TruncatedSeries;
use crate::words::{braid_relations, mccool_relations, Letter};
use crate::Rational;

/// One named check with a short explanation of the outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`check_family_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: String,
    pub n: usize,
    pub cap: usize,
    pub checks: Vec<AxiomCheck>,
}

impl FamilyReport {
    /// The verdict of the check called `name`, if it was run.
    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} family, n = {}, cap = {}", self.family, self.n, self.cap)?;
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  {:<9} {verdict}  {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, failures: Vec<String>, ok_detail: String) -> AxiomCheck {
    match failures.first() {
        None => AxiomCheck {
            name,
            passed: true,
            detail: ok_detail,
        },
        Some(first) => AxiomCheck {
            name,
            passed: false,
            detail: format!("{} failure(s), first: {first}", failures.len()),
        },
    }
}

/// Check exponential type (E), symmetry (Σ), stability (S), the degree-one
/// normalization (N) and the defining relations of a family at `cap`.
///
/// Failures are reported in the result; errors mean the inputs are unusable.
pub fn check_family_axioms(family: &Family, n: usize, cap: usize, store: &BasisStore) -> Result<FamilyReport> {
    if matches!(family, Family::Rho3(_)) && n != 3 {
        return Err(Error::SizeMismatch { left: 3, right: n });
    }
    let basis = store.get(family.preset(n), cap)?;
    let rep = Representation::new(family.clone(), &basis, cap)?;
    let generators = family.generators(n);
    let mut checks = Vec::new();

    let mut bad = Vec::new();
    for &l in &generators {
        let img = rep.image(l)?;
        match img.single_term() {
            Some((_, g)) if basis.is_group_like(g)? => {}
            Some(_) => bad.push(format!("{l}: component is not group-like")),
            None => bad.push(format!("{l}: image is not a single term")),
        }
    }
    checks.push(check(
        "E",
        bad,
        format!("{} generator images group-like", generators.len()),
    ));

    let mut bad = Vec::new();
    for &l in &generators {
        let img = rep.image(l)?;
        match img.single_term() {
            Some((p, _)) if *p == l.permutation(n) => {}
            _ => bad.push(format!("{l}: permutation part differs from {}", l.permutation(n))),
        }
    }
    checks.push(check("Sigma", bad, "permutation parts match the projection".into()));

    checks.push(stability(family, n, cap, store, &rep)?);
    checks.push(normalization(family, n, &rep)?);

    let mut relations = braid_relations(n);
    if matches!(family, Family::Welded) {
        relations.extend(mccool_relations(n));
    }
    let mut bad = Vec::new();
    for (lhs, rhs) in &relations {
        if rep.eval(lhs)? != rep.eval(rhs)? {
            bad.push(format!("{lhs} = {rhs}"));
        }
    }
    checks.push(check("relations", bad, format!("{} relations hold", relations.len())));

    Ok(FamilyReport {
        family: family.name().to_string(),
        n,
        cap,
        checks,
    })
}

fn stability(family: &Family, n: usize, cap: usize, store: &BasisStore, rep: &Representation) -> Result<AxiomCheck> {
    if n < 3 {
        return Ok(check("S", Vec::new(), "no generators on fewer strands".into()));
    }
    let lower = match family {
        Family::Rho3(psi) => Family::Drinfeld(psi.clone()),
        other => other.clone(),
    };
    let lower_basis = store.get(lower.preset(n - 1), cap)?;
    let lower_rep = Representation::new(lower.clone(), &lower_basis, cap)?;
    let mut bad = Vec::new();
    for l in lower.generators(n - 1) {
        let embedded = lower_rep.image(l)?.stabilize(rep.basis())?;
        if &embedded != rep.image(l)? {
            bad.push(format!("{l} on {} strands", n - 1));
        }
    }
    Ok(check("S", bad, format!("images from {} strands embed", n - 1)))
}

fn normalization(family: &Family, n: usize, rep: &Representation) -> Result<AxiomCheck> {
    let basis = rep.basis();
    let al = basis.alphabet();
    let coefficient = match family {
        Family::Welded => Rational::one(),
        _ => Rational::new(1.into(), 2.into()),
    };
    let mut bad = Vec::new();
    for l in family.generators(n) {
        let (i, j) = match l {
            Letter::Conj { i, j, .. } => (i, j),
            Letter::Sigma { i, .. } => (i, i + 1),
            Letter::Swap(_) => continue,
        };
        let linear = chord(al, 1, i, j)?.scale(&coefficient);
        let expected = TruncatedSeries::one(al.clone(), 1).add(&linear)?;
        let expected = SemidirectSeries::from_term(basis, expected, l.permutation(n))?;
        if rep.image(l)?.truncate(1)? != expected {
            bad.push(format!("{l} is not {expected} to first order"));
        }
    }
    let what = match family {
        Family::Welded => "a_ij = 1 + v_ij and sigma_i = 1 + v_i,i+1 to first order",
        _ => "sigma_i = 1 + t_i,i+1/2 to first order",
    };
    Ok(check("N", bad, what.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Alphabet;

    #[test]
    fn welded_family_passes() {
        let store = BasisStore::new();
        let report = check_family_axioms(&Family::Welded, 3, 3, &store).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn trivial_drinfeld_parameter_breaks_braid_relation() {
        let store = BasisStore::new();
        let one = TruncatedSeries::one(Alphabet::ab(), 3);
        let report = check_family_axioms(&Family::Drinfeld(one), 3, 3, &store).unwrap();
        for name in ["E", "Sigma", "S", "N"] {
            assert_eq!(report.passed(name), Some(true), "{report}");
        }
        assert_eq!(report.passed("relations"), Some(false));
    }

    #[test]
    fn rho3_needs_three_strands() {
        let store = BasisStore::new();
        let one = TruncatedSeries::one(Alphabet::ab(), 2);
        assert!(check_family_axioms(&Family::Rho3(one), 4, 2, &store).is_err());
    }
}
