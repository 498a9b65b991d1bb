//! Decision procedures extracted from the two long exact sequences of a
//! double disk bundle `X = D(B-) ∪ D(B+)`.
//!
//! Neither procedure models the spaces themselves. Callers pass the facts
//! they have established about the orbits and maps (group data, scalars,
//! boolean hypotheses), and the procedures refuse to conclude when a
//! hypothesis is missing.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::intlinalg::{IntegerMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactSeqError {
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl From<LinalgError> for ExactSeqError {
    fn from(e: LinalgError) -> Self {
        ExactSeqError::InvalidInput(e.to_string())
    }
}

/// Input to the cyclicity criterion at a fixed degree `κ`.
///
/// `free_map` is `π* = π-* − π+*` restricted to free parts,
/// `free(H^{κ-1}(B-) ⊕ H^{κ-1}(B+)) → free(H^{κ-1}(∂D))`, written as a matrix
/// acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayerVietorisInput {
    pub free_map: IntegerMatrix,
    /// `H^{κ-t}(B-)` is cyclic.
    pub source_is_cyclic_below: bool,
    /// `H^κ(B-)` and `H^κ(B+)` are both trivial.
    pub target_degree_groups_trivial: bool,
}

impl MayerVietorisInput {
    pub fn new(free_map: IntegerMatrix) -> Self {
        MayerVietorisInput {
            free_map,
            source_is_cyclic_below: true,
            target_degree_groups_trivial: true,
        }
    }
}

/// `H^κ(X) ≅ Z_r` with `r = |det π*|`, computed as the cokernel of the
/// restricted `π*` through its Smith normal form.
pub fn cyclic_lemma(input: &MayerVietorisInput) -> Result<AbelianGroup, ExactSeqError> {
    if !input.source_is_cyclic_below {
        return Err(ExactSeqError::HypothesisNotMet("H^(κ-t)(B-) must be cyclic"));
    }
    if !input.target_degree_groups_trivial {
        return Err(ExactSeqError::HypothesisNotMet("H^κ(B-) and H^κ(B+) must be trivial"));
    }
    let map = &input.free_map;
    if !map.is_square() {
        return Err(ExactSeqError::InvalidInput(format!(
            "restricted π* must be square (equal free ranks), got {}x{}",
            map.rows(),
            map.cols()
        )));
    }
    let cokernel = map.cokernel();
    // With equal ranks the cokernel is cyclic exactly when the hypotheses
    // hold; anything else means the caller's boundary data is inconsistent.
    if !cokernel.is_cyclic() {
        return Err(ExactSeqError::InvalidInput(format!(
            "cokernel {cokernel} of the restricted π* is not cyclic"
        )));
    }
    Ok(cokernel)
}

/// The free part of `ker π*`, which is `H^κ(X)` in the degrees where the
/// sequence identifies the two.
pub fn mv_kernel(input: &MayerVietorisInput) -> AbelianGroup {
    AbelianGroup::free(input.free_map.kernel_rank())
}

/// Data for the generator criterion: does `x ⌣ α` generate `H^κ(X)`?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorLemmaInput {
    /// Fiber dimension of the orientable disk bundle over `B-`.
    pub t: u32,
    pub kappa: u32,
    /// Order of the finite cyclic group `H^t(B+)`.
    #[serde(with = "crate::bigser::uint")]
    pub n: BigUint,
    pub h_kappa_x: AbelianGroup,
    /// Orders of the torsion summands of `H^{κ-t}(B-)`.
    #[serde(with = "crate::bigser::vec_uint")]
    pub torsion_orders_t: Vec<BigUint>,
    /// Coefficient of the free generator `γ` in `i-*(α)`.
    #[serde(with = "crate::bigser::int")]
    pub s: BigInt,
    /// `i+*: H^t(X) → H^t(B+)` is onto.
    pub surjects_onto_b_plus: bool,
    /// `i+*: H^κ(X) → H^κ(B+)` is zero.
    pub i_plus_star_zero_at_kappa: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCertificate {
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub surjectivity: bool,
    pub verdict: bool,
    pub narrative: Vec<String>,
}

pub fn generator_lemma_check(input: &GeneratorLemmaInput) -> Result<GeneratorCertificate, ExactSeqError> {
    if input.t == 0 {
        return Err(ExactSeqError::InvalidInput("fiber dimension t must be positive".into()));
    }
    if input.kappa <= input.t {
        return Err(ExactSeqError::InvalidInput(format!(
            "κ = {} must exceed t = {}",
            input.kappa, input.t
        )));
    }
    if input.n < BigUint::one() {
        return Err(ExactSeqError::InvalidInput("n must be at least 1".into()));
    }
    if input.torsion_orders_t.iter().any(|d| *d < BigUint::one()) {
        return Err(ExactSeqError::InvalidInput("torsion orders must be positive".into()));
    }
    let h = &input.h_kappa_x;
    if !h.is_cyclic() {
        return Err(ExactSeqError::InvalidInput(format!(
            "H^{}(X) = {h} is not cyclic",
            input.kappa
        )));
    }

    let (t, kappa) = (input.t, input.kappa);
    let mut narrative = Vec::new();
    if input.n.is_one() {
        narrative.push(format!(
            "note: H^{t}(B+) is trivial (n = 1); the free case reduces to |s| = 1"
        ));
    }

    let surjectivity = input.surjects_onto_b_plus;
    narrative.push(format!(
        "surjectivity: i+*: H^{t}(X) -> H^{t}(B+) = Z_{} is {}",
        input.n,
        if surjectivity { "onto" } else { "not known to be onto" }
    ));

    let nontrivial = !h.is_trivial();
    let condition1 = nontrivial && input.i_plus_star_zero_at_kappa;
    narrative.push(format!(
        "condition 1: H^{kappa}(X) = {h} is {}cyclic and nontrivial; i+* at degree {kappa} is {}",
        if nontrivial { "" } else { "not " },
        if input.i_plus_star_zero_at_kappa {
            "zero"
        } else {
            "not known to be zero"
        },
    ));

    let condition2 = match h.order().finite() {
        Some(order) => {
            let bad: Vec<String> = input
                .torsion_orders_t
                .iter()
                .filter(|d| !d.gcd(order).is_one())
                .map(|d| d.to_string())
                .collect();
            narrative.push(if bad.is_empty() {
                format!(
                    "condition 2: torsion orders [{}] of H^{}(B-) are prime to {order}",
                    fmt_list(&input.torsion_orders_t),
                    kappa - t
                )
            } else {
                format!(
                    "condition 2: torsion orders [{}] share a factor with {order}",
                    bad.join(", ")
                )
            });
            bad.is_empty()
        }
        None => {
            narrative.push(format!("condition 2: H^{kappa}(X) is free, no coprimality requirement"));
            true
        }
    };

    let s_abs = input.s.abs();
    let condition3 = match h.order().finite() {
        Some(order) => {
            let g = s_abs.magnitude().gcd(order);
            narrative.push(format!(
                "condition 3: H^{kappa}(X) finite of order {order}; gcd(s = {}, {order}) = {g}",
                input.s
            ));
            g.is_one()
        }
        None => {
            let ok = *s_abs.magnitude() == input.n;
            narrative.push(format!(
                "condition 3: H^{kappa}(X) infinite cyclic; |s| = {} {} n = {}",
                s_abs,
                if ok { "equals" } else { "differs from" },
                input.n
            ));
            ok
        }
    };

    let verdict = surjectivity && condition1 && condition2 && condition3;
    narrative.push(if verdict {
        format!("verdict: x ⌣ α generates H^{kappa}(X), x a generator of H^{t}(X)")
    } else {
        format!("verdict: criterion does not apply at degree {kappa}")
    });

    Ok(GeneratorCertificate {
        condition1,
        condition2,
        condition3,
        surjectivity,
        verdict,
        narrative,
    })
}

fn fmt_list(v: &[BigUint]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}
