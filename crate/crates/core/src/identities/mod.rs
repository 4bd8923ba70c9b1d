//! Exhaustive exact verification of the finite identities over parameter grids.
//!
//! Every catalogue entry expands a [`Grid`] into independent cases, checks each one with
//! exact rational arithmetic (in parallel), and summarizes the run in a
//! [`VerificationReport`].

mod catalogue;
mod grid;
pub mod interp_det;
pub mod mpoly;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use catalogue::{catalogue, en_decay_ratio, rational_sample};
pub use grid::{Grid, GridSpec, GUARD_CASES};
pub use interp_det::{interp_det_solvable_k4, interp_det_unsolvable_k5_half, Branch, K4Solvability, K5Ledger};

use crate::error::{Error, Result};

/// The two sides of one case and whether they agree.
#[derive(Clone, Debug)]
pub struct Check {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Check {
    pub fn eq<T: PartialEq + std::fmt::Display>(lhs: T, rhs: T) -> Self {
        Check { holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

type CaseFn = Box<dyn Fn() -> Result<Check> + Send + Sync>;

/// A single parameter tuple and the check to run on it.
pub struct Case {
    pub params: Vec<(&'static str, String)>,
    run: CaseFn,
}

impl Case {
    pub fn new<F>(params: Vec<(&'static str, String)>, run: F) -> Self
    where
        F: Fn() -> Result<Check> + Send + Sync + 'static,
    {
        Case { params, run: Box::new(run) }
    }
}

/// A catalogue entry.
pub struct Identity {
    pub id: &'static str,
    /// What the identity says, in words.
    pub anchor: &'static str,
    pub default_grid: &'static str,
    cases: fn(&Grid) -> Result<Vec<Case>>,
}

impl Identity {
    pub fn cases(&self, grid: &Grid) -> Result<Vec<Case>> {
        let cases = (self.cases)(grid)?;
        if cases.len() > GUARD_CASES {
            return Err(Error::Guard(format!(
                "{} cases for `{}` exceed the limit of {GUARD_CASES}",
                cases.len(),
                self.id
            )));
        }
        Ok(cases)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub grid: String,
    pub cases_total: usize,
    pub cases_failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }
}

pub fn find_identity(id: &str) -> Result<&'static Identity> {
    catalogue()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs one identity over its default grid, with entries of `overrides` taking precedence.
pub fn verify(id: &str, overrides: Option<&str>) -> Result<VerificationReport> {
    let identity = find_identity(id)?;
    let grid = Grid::with_defaults(identity.default_grid, overrides.unwrap_or(""))?;
    let cases = identity.cases(&grid)?;
    let start = Instant::now();
    let outcomes: Vec<(usize, Check)> = cases
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let check = (c.run)().unwrap_or_else(|e| Check { lhs: format!("error: {e}"), rhs: String::new(), holds: false });
            (i, check)
        })
        .filter(|(_, c)| !c.holds)
        .collect();
    let first_failure = outcomes.first().map(|(i, c)| Failure {
        params: cases[*i].params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        lhs: c.lhs.clone(),
        rhs: c.rhs.clone(),
    });
    Ok(VerificationReport {
        identity: id.to_string(),
        grid: grid.to_string(),
        cases_total: cases.len(),
        cases_failed: outcomes.len(),
        first_failure,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Every catalogue entry on its default grid.
pub fn verify_all() -> Result<Vec<VerificationReport>> {
    catalogue().iter().map(|i| verify(i.id, None)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_complete_and_unique() {
        let ids: Vec<&str> = catalogue().iter().map(|i| i.id).collect();
        assert!(ids.len() >= 13);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in ["thm2-trunc", "lem10-duality", "hoffman-ihara-half", "en-decay", "conv-star", "conv-plain"] {
            assert!(ids.contains(&id), "{id}");
        }
    }

    #[test]
    fn default_grids_pass() {
        for i in catalogue() {
            let r = verify(i.id, None).unwrap();
            assert!(r.passed(), "{}: {:?}", i.id, r.first_failure);
            assert!(r.cases_total > 0, "{}", i.id);
        }
    }

    #[test]
    fn spot_values_and_errors() {
        let r = verify("thm2-trunc", Some("N=2,l2=0,r1=1,r2=1")).unwrap();
        assert_eq!(r.cases_total, 1);
        assert!(r.passed());
        let r = verify("lem7-findiff", Some("m=1,x=1")).unwrap();
        assert_eq!((r.cases_total, r.cases_failed), (1, 0));
        assert!(matches!(verify("no-such-id", None), Err(Error::UnknownIdentity(_))));
        assert!(matches!(verify("stuffle", Some("N<=100000")), Err(Error::Guard(_))));
        assert!(matches!(verify("stuffle", Some("q<=3")), Err(Error::Parse(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = verify("lem8-nested", Some("n<=3,k<=1,l<=1")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["identity"], "lem8-nested");
        assert_eq!(v["grid"], "n<=3,k<=1,l<=1");
        assert_eq!(v["cases_total"], 12);
        assert!(v.get("first_failure").is_none());
    }
}
