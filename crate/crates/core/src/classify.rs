//! Which family members have cohomology type `E_r`, and which have the
//! cohomology ring of an Eschenburg space.
//!
//! A manifold has type `E_r` when `H⁰ = H² = H⁵ = H⁷ = Z`, `H⁴ = Z_r` with
//! `r ≥ 2` finite, all other groups vanish, and the square of a generator of
//! `H²` generates `H⁴`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::bigser;
use crate::families::{
    cohomology_table, fourth_cohomology_order, pi_star, Case, DegreeCertificate, Family, FamilyError, FamilyParams,
    GradedCohomology, PiStar, ProductStatement, ValidationError,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub claim: String,
    pub source: String,
}

fn cite(claim: impl Into<String>, source: impl Into<String>) -> Provenance {
    Provenance {
        claim: claim.into(),
        source: source.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub family: Family,
    pub params: FamilyParams,
    pub valid: bool,
    pub errors: Vec<ValidationError>,
    /// `H⁰ .. H⁷`; empty for invalid parameters.
    pub groups: Vec<AbelianGroup>,
    #[serde(with = "bigser::opt_uint")]
    pub r: Option<BigUint>,
    #[serde(rename = "is_type_Er")]
    pub is_type_er: bool,
    pub eschenburg_ring: bool,
    pub known_eschenburg_space: bool,
    pub ring_generators: Vec<String>,
    pub ring_complete: bool,
    pub provenance: Vec<Provenance>,
    pub ring_products: Vec<ProductStatement>,
    pub notes: Vec<String>,
    pub certificates: Vec<DegreeCertificate>,
    pub pi_star: Option<PiStar>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Type `E_r` verdict together with `r`.
pub fn is_type_er(params: &FamilyParams) -> Result<(bool, BigUint), FamilyError> {
    let r = fourth_cohomology_order(params)?;
    let verdict = match params {
        FamilyParams::L(_) => params.case() == Case::LOddPlus && !r.is_zero(),
        FamilyParams::M(_) => false,
        FamilyParams::N(_) => true,
        FamilyParams::O(op) => !(op.p.abs() == 1 && op.q.abs() == 1),
    };
    Ok((verdict, r))
}

pub fn has_eschenburg_ring(params: &FamilyParams) -> Result<bool, FamilyError> {
    let r = fourth_cohomology_order(params)?;
    Ok(match params {
        FamilyParams::N(_) => !r.is_one(),
        FamilyParams::O(op) => op.p % 2 == 0 || op.q % 2 == 0,
        FamilyParams::L(_) | FamilyParams::M(_) => false,
    })
}

/// `O(p, q : 2)` with `|p − q| = 1`, a literal pattern match.
pub fn known_eschenburg_space(params: &FamilyParams) -> bool {
    match params {
        FamilyParams::O(op) => op.m == 2 && (i128::from(op.p) - i128::from(op.q)).abs() == 1,
        _ => false,
    }
}

/// Structural test on a computed table: `(Z,0,Z,0,Z_r,Z,0,Z)` with
/// `2 ≤ r < ∞`, complete generators `x ∈ H²`, `y ∈ H⁵` and `x²` generating
/// `H⁴`.
pub fn has_type_er_shape(table: &GradedCohomology) -> bool {
    let z = AbelianGroup::integers();
    let g = &table.groups;
    let shape = g[0] == z
        && g[1].is_trivial()
        && g[2] == z
        && g[3].is_trivial()
        && g[4].is_cyclic()
        && g[4].is_finite()
        && g[4].torsion().len() == 1
        && g[5] == z
        && g[6].is_trivial()
        && g[7] == z;
    let ring = &table.ring;
    let generators = ring.generators.iter().any(|x| x.name == "x" && x.degree == 2)
        && ring.generators.iter().any(|y| y.name == "y" && y.degree == 5);
    shape && ring.complete && generators && ring.asserts("x^2", 4)
}

fn r_source(case: Case) -> &'static str {
    match case {
        Case::LOddPlus => "closed form ¼|p₊²q₋² − p₋²q₊²| for L with p₊ odd",
        Case::LEvenPlus => "closed form |p₊²q₋² − p₋²q₊²| for L with p₊ even",
        Case::M => "closed form ⅛|p₊²q₋² − p₋²q₊²| for M",
        Case::N => "closed form |p₋²q₊² − p₊²q₋²| for N",
        Case::OTrivial | Case::OTwisted => "closed form |p² − q²| for O",
    }
}

fn r_check_source(case: Case) -> &'static str {
    match case {
        Case::OTrivial => "|det π*| of the explicit matrix [[−q², −1], [p², 1]] and its Smith form",
        Case::OTwisted => "|det τ*|·|det μ*|/|det η*| with covering factors 2 and 2",
        Case::LOddPlus => "|det τ*|·|det μ*|/|det η*| with |det η*| = 4, |det μ*| = 1",
        Case::LEvenPlus => "|det τ*|·|det μ*|/|det η*| with |det η*| = 4, |det μ*| = 4 on the free part",
        Case::N => "|det τ*| with the net covering ratio 1",
        Case::M => "column determinant of τ* over |det η*| = 8",
    }
}

fn type_er_source(params: &FamilyParams) -> &'static str {
    match params {
        FamilyParams::L(_) => "type E_r criterion: L qualifies exactly when p₊ is odd and p₊²q₋² − p₋²q₊² ≠ 0",
        FamilyParams::M(_) => "type E_r criterion: M never qualifies (H² = 0)",
        FamilyParams::N(_) => "type E_r criterion: every N qualifies",
        FamilyParams::O(_) => "type E_r criterion: O qualifies unless |p| = |q| = 1",
    }
}

fn eschenburg_source(params: &FamilyParams) -> &'static str {
    match params {
        FamilyParams::N(_) => {
            "Eschenburg-ring criterion: N with |p₋²q₊² − p₊²q₋²| ≠ 1; redundant, since validity forces r odd and r ≥ 3"
        }
        FamilyParams::O(_) => "Eschenburg-ring criterion: O with p or q even",
        FamilyParams::L(_) => "Eschenburg-ring criterion: L is excluded (r even when of type E_r)",
        FamilyParams::M(_) => "Eschenburg-ring criterion: M is excluded (not of type E_r)",
    }
}

fn invalid_report(params: &FamilyParams, errors: Vec<ValidationError>) -> ClassificationReport {
    let provenance = errors.iter().map(|e| cite(e.message.clone(), e.rule.clone())).collect();
    ClassificationReport {
        family: params.family(),
        params: *params,
        valid: false,
        errors,
        groups: Vec::new(),
        r: None,
        is_type_er: false,
        eschenburg_ring: false,
        known_eschenburg_space: false,
        ring_generators: Vec::new(),
        ring_complete: false,
        provenance,
        ring_products: Vec::new(),
        notes: Vec::new(),
        certificates: Vec::new(),
        pi_star: None,
    }
}

/// Full report. Invalid parameters give `valid = false` and no analysis;
/// an internal disagreement between independent computations is an error.
pub fn report(params: &FamilyParams) -> Result<ClassificationReport, FamilyError> {
    if let Err(errors) = params.validate() {
        return Ok(invalid_report(params, errors));
    }
    let fail = |detail: String| FamilyError::Consistency {
        params: *params,
        detail,
    };
    let case = params.case();
    let table = cohomology_table(params)?;
    let ps = pi_star(params)?;
    let (type_er, r) = is_type_er(params)?;
    let eschenburg = has_eschenburg_ring(params)?;
    let known = known_eschenburg_space(params);

    if table.groups[4] != AbelianGroup::cyclic(r.clone()) {
        return Err(fail(format!("table H⁴ = {} disagrees with r = {r}", table.groups[4])));
    }
    if type_er != has_type_er_shape(&table) {
        return Err(fail(format!(
            "type E_r verdict {type_er} disagrees with the shape of the computed table"
        )));
    }
    if type_er && r < BigUint::from(2u32) {
        return Err(fail(format!("type E_r with r = {r}")));
    }
    if eschenburg && !(type_er && r.is_odd()) {
        return Err(fail(format!(
            "Eschenburg ring claimed with type E_r = {type_er}, r = {r}"
        )));
    }
    if known && !eschenburg {
        return Err(fail("known Eschenburg space without the Eschenburg ring".into()));
    }

    let mut provenance = vec![
        cite(format!("r = {r}"), r_source(case)),
        cite(format!("r = {r} (second route)"), r_check_source(case)),
        cite(
            format!("H⁴ = {}", table.groups[4]),
            "Z_0 = Z and Z_1 = 0 convention for H⁴ ≅ Z_r",
        ),
        cite(format!("H³ = {}", table.groups[3]), h3_source(case)),
        cite(format!("is_type_Er = {type_er}"), type_er_source(params)),
        cite(format!("eschenburg_ring = {eschenburg}"), eschenburg_source(params)),
    ];
    if known {
        provenance.push(cite(
            "known_eschenburg_space = true",
            "O(p, p ± 1 : 2) are known Eschenburg spaces",
        ));
    }
    for cert in &table.ring.certificates {
        provenance.push(cite(
            format!(
                "generator criterion at degree {}: verdict {}",
                cert.kappa, cert.certificate.verdict
            ),
            "generator criterion for double disk bundles with t = 2",
        ));
    }

    Ok(ClassificationReport {
        family: params.family(),
        params: *params,
        valid: true,
        errors: Vec::new(),
        groups: table.groups.to_vec(),
        r: Some(r),
        is_type_er: type_er,
        eschenburg_ring: eschenburg,
        known_eschenburg_space: known,
        ring_generators: table.ring.generators.iter().map(|g| g.name.clone()).collect(),
        ring_complete: table.ring.complete,
        provenance,
        ring_products: table.ring.products.clone(),
        notes: table.ring.notes.clone(),
        certificates: table.ring.certificates.clone(),
        pi_star: Some(ps),
    })
}

fn h3_source(case: Case) -> &'static str {
    match case {
        Case::LEvenPlus => "H³ ≅ Z_2 for L with p₊ even",
        Case::M => "H³ free of rank equal to the corank of π* (M is 2-connected)",
        Case::N => "H³ ≅ ker π* = 0 for N",
        _ => "H³ ≅ ker π*, rank from the Smith form",
    }
}
