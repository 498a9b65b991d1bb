//! Enumeration of valid parameter tuples with `|parameter| ≤ bound`.
//!
//! Each pair `(p, q)` is taken up to the simultaneous sign flip
//! `(p, q) ↦ (−p, −q)`: when both signs are valid, only the one with `p > 0`
//! is kept. No other identifications are made.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::classify::{report, ClassificationReport};
use crate::families::{closed_form_r, Family, FamilyError, FamilyParams, PairParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Work-stealing over a thread pool; sequential without the `parallel`
    /// feature.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchFilter {
    #[serde(with = "crate::bigser::opt_uint")]
    pub r: Option<BigUint>,
    pub type_er: bool,
    pub eschenburg: bool,
}

impl SearchFilter {
    pub fn accepts(&self, rep: &ClassificationReport) -> bool {
        (self.r.is_none() || rep.r == self.r)
            && (!self.type_er || rep.is_type_er)
            && (!self.eschenburg || rep.eschenburg_ring)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub families: BTreeSet<Family>,
    pub bound: u32,
    pub filter: SearchFilter,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("at least one family must be selected")]
    NoFamilies,
    #[error("bound must be at least 1")]
    ZeroBound,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl SearchSpec {
    pub fn new(
        families: impl IntoIterator<Item = Family>,
        bound: u32,
        filter: SearchFilter,
    ) -> Result<Self, SearchError> {
        let families: BTreeSet<Family> = families.into_iter().collect();
        if families.is_empty() {
            return Err(SearchError::NoFamilies);
        }
        if bound == 0 {
            return Err(SearchError::ZeroBound);
        }
        Ok(SearchSpec {
            families,
            bound,
            filter,
        })
    }

    /// A stable textual form, used for cache keys.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SearchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let families: Vec<String> = self.families.iter().map(|x| x.to_string()).collect();
        write!(f, "families={};bound={}", families.join(","), self.bound)?;
        if let Some(r) = &self.filter.r {
            write!(f, ";r={r}")?;
        }
        write!(
            f,
            ";type_er={};eschenburg={}",
            self.filter.type_er, self.filter.eschenburg
        )
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Minus,
    Plus,
}

/// A pair whose companion slot is known to be valid, so that the tuple is
/// valid exactly when this slot is.
fn with_companion(family: Family, slot: Slot, p: i64, q: i64) -> FamilyParams {
    let companion = match family {
        Family::N => match slot {
            Slot::Minus => (2, 1),
            Slot::Plus => (1, 1),
        },
        _ => (1, 1),
    };
    let pp = match slot {
        Slot::Minus => PairParams::new(p, q, companion.0, companion.1),
        Slot::Plus => PairParams::new(companion.0, companion.1, p, q),
    };
    match family {
        Family::L => FamilyParams::L(pp),
        Family::M => FamilyParams::M(pp),
        Family::N => FamilyParams::N(pp),
        Family::O => unreachable!("O has a single pair"),
    }
}

fn values(bound: u32) -> impl Iterator<Item = i64> + Clone {
    let b = i64::from(bound);
    (-b..=b).filter(|&v| v != 0)
}

/// Valid `(p, q)` in one slot, one representative per sign class.
fn slot_pairs(family: Family, slot: Slot, bound: u32) -> Vec<(i64, i64)> {
    let valid = |p: i64, q: i64| with_companion(family, slot, p, q).is_valid();
    let mut out = Vec::new();
    for p in values(bound) {
        for q in values(bound) {
            if valid(p, q) && !(p < 0 && valid(-p, -q)) {
                out.push((p, q));
            }
        }
    }
    out
}

/// All valid tuples of one family, in sorted order.
pub fn enumerate_family(family: Family, bound: u32) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    if family == Family::O {
        for m in [1, 2] {
            for p in values(bound) {
                for q in values(bound) {
                    let params = FamilyParams::o(p, q, m);
                    if params.is_valid() && !(p < 0 && FamilyParams::o(-p, -q, m).is_valid()) {
                        out.push(params);
                    }
                }
            }
        }
    } else {
        let minus = slot_pairs(family, Slot::Minus, bound);
        let plus = slot_pairs(family, Slot::Plus, bound);
        for &(pm, qm) in &minus {
            for &(pp, qp) in &plus {
                let params = match family {
                    Family::L => FamilyParams::l(pm, qm, pp, qp),
                    Family::M => FamilyParams::m(pm, qm, pp, qp),
                    Family::N => FamilyParams::n(pm, qm, pp, qp),
                    Family::O => unreachable!(),
                };
                debug_assert!(params.is_valid(), "{params}");
                out.push(params);
            }
        }
    }
    out.sort();
    out
}

pub fn enumerate(spec: &SearchSpec) -> Vec<FamilyParams> {
    spec.families
        .iter()
        .flat_map(|&f| enumerate_family(f, spec.bound))
        .collect()
}

#[cfg(feature = "parallel")]
fn map_all<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Execution::Parallel => items.par_iter().map(f).collect(),
        Execution::Sequential => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn map_all<T, R, F>(items: &[T], _exec: Execution, f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Reports for the given tuples, in input order.
pub fn reports_for(params: &[FamilyParams], exec: Execution) -> Result<Vec<ClassificationReport>, FamilyError> {
    map_all(params, exec, report).into_iter().collect()
}

fn sort_key(rep: &ClassificationReport) -> (Family, Option<BigUint>, FamilyParams) {
    (rep.family, rep.r.clone(), rep.params)
}

/// Matching reports sorted by `(family, r, parameters)`, independent of the
/// execution strategy.
pub fn search(spec: &SearchSpec, exec: Execution) -> Result<Vec<ClassificationReport>, SearchError> {
    let mut candidates = enumerate(spec);
    if let Some(r) = &spec.filter.r {
        candidates.retain(|p| closed_form_r(p).map(|x| &x == r).unwrap_or(true));
    }
    let results = map_all(&candidates, exec, |p| {
        report(p).map(|rep| spec.filter.accepts(&rep).then_some(rep))
    });
    let mut out = Vec::new();
    for res in results {
        if let Some(rep) = res? {
            out.push(rep);
        }
    }
    out.sort_by_key(sort_key);
    Ok(out)
}
