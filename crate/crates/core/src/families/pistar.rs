//! The order `r` of `H⁴` by two independent routes.
//!
//! The matrix route builds `π*` on third cohomology (or its lift `τ*` to
//! `H³(S³ × S³)`) and takes a determinant. Lifting goes through the square
//!
//! ```text
//!   H³(G)     <--τ*--  H³(G/K-°) ⊕ H³(G/K+°)
//!     ^ η*                    ^ μ*
//!   H³(G/H)   <--π*--  H³(G/K-) ⊕ H³(G/K+)
//! ```
//!
//! so `|det π*| = |det τ*| · |det μ*| / |det η*|` on free parts. The closed
//! route evaluates the per-family polynomial directly. The two must agree.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Case, FamilyError, FamilyParams, PairParams};
use crate::bigser;
use crate::intlinalg::IntegerMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiStarKind {
    /// The matrix is `π*` itself on free parts (`O`, `m = 1`).
    Explicit,
    /// The matrix is `τ*`; `η*` and `μ*` determinants are known separately
    /// (`L`, and `O` with `m = 2`).
    CoverLevel,
    /// Only the net correction `|det μ*| / |det η*|` is recorded, taken from
    /// the published group computation (`N`, `M`). For `M` no matrix is kept.
    NetRatio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiStarFactorization {
    #[serde(with = "bigser::uint")]
    pub det_eta_abs: BigUint,
    #[serde(with = "bigser::int")]
    pub det_tau: BigInt,
    #[serde(with = "bigser::uint")]
    pub det_mu_abs: BigUint,
    #[serde(with = "bigser::uint")]
    pub resulting_r: BigUint,
}

impl PiStarFactorization {
    /// Fails when `|det τ*| · |det μ*|` is not divisible by `|det η*|`.
    pub fn new(det_eta_abs: BigUint, det_tau: BigInt, det_mu_abs: BigUint) -> Result<Self, String> {
        if det_eta_abs.is_zero() || det_mu_abs.is_zero() {
            return Err("η* and μ* must have nonzero determinant".into());
        }
        let numerator = det_tau.magnitude() * &det_mu_abs;
        let (resulting_r, rem) = numerator.div_rem(&det_eta_abs);
        if !rem.is_zero() {
            return Err(format!(
                "|det τ*|·|det μ*| = {numerator} is not divisible by |det η*| = {det_eta_abs}"
            ));
        }
        Ok(PiStarFactorization {
            det_eta_abs,
            det_tau,
            det_mu_abs,
            resulting_r,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiStar {
    pub kind: PiStarKind,
    pub matrix: Option<IntegerMatrix>,
    pub factorization: PiStarFactorization,
}

impl PiStar {
    /// Rank of `ker π*`. The covering maps are isomorphisms after tensoring
    /// with `Q`, so the lifted matrix has the same kernel rank.
    pub fn kernel_rank(&self) -> usize {
        match &self.matrix {
            Some(m) => m.kernel_rank(),
            None => usize::from(self.factorization.resulting_r.is_zero()),
        }
    }
}

fn sq(x: i64) -> BigInt {
    let x = BigInt::from(x);
    &x * &x
}

/// Columns `(−q-², p-²)` and `(−q+², p+²)`: the images of `τ-*` and `τ+*`.
fn tau_matrix(pp: &PairParams) -> IntegerMatrix {
    IntegerMatrix::new(
        2,
        2,
        vec![-sq(pp.q_minus), -sq(pp.q_plus), sq(pp.p_minus), sq(pp.p_plus)],
    )
    .expect("2x2 shape")
}

/// Columns `(−q², p²)` and `−(1, −1)`: images of `π-*` and `π+*` when
/// `G/K+ = S³` and the principal orbit is `S³ × S³`.
fn o_matrix(p: i64, q: i64) -> IntegerMatrix {
    IntegerMatrix::new(2, 2, vec![-sq(q), BigInt::from(-1), sq(p), BigInt::from(1)]).expect("2x2 shape")
}

pub fn pi_star(params: &FamilyParams) -> Result<PiStar, FamilyError> {
    params.require_valid()?;
    let consistency = |detail: String| FamilyError::Consistency {
        params: *params,
        detail,
    };
    let det = |m: &IntegerMatrix| m.determinant().expect("square matrix");
    let (kind, matrix, eta, mu): (PiStarKind, Option<IntegerMatrix>, u32, u32) = match (params, params.case()) {
        (FamilyParams::O(op), Case::OTrivial) => (PiStarKind::Explicit, Some(o_matrix(op.p, op.q)), 1, 1),
        // τ* here is the m = 1 π*; both covers have degree 2.
        (FamilyParams::O(op), Case::OTwisted) => (PiStarKind::CoverLevel, Some(o_matrix(op.p, op.q)), 2, 2),
        // η* has degree 4 from the lens-space cover; μ+* is an isomorphism
        // for p+ odd and multiplication by 4 on the free part for p+ even.
        (FamilyParams::L(pp), Case::LOddPlus) => (PiStarKind::CoverLevel, Some(tau_matrix(pp)), 4, 1),
        (FamilyParams::L(pp), Case::LEvenPlus) => (PiStarKind::CoverLevel, Some(tau_matrix(pp)), 4, 4),
        (FamilyParams::N(pp), Case::N) => (PiStarKind::NetRatio, Some(tau_matrix(pp)), 1, 1),
        (FamilyParams::M(_), Case::M) => (PiStarKind::NetRatio, None, 8, 1),
        _ => unreachable!("case selector matches family"),
    };
    let det_tau = match (&matrix, params) {
        (Some(m), _) => det(m),
        (None, FamilyParams::M(pp)) => {
            // the same column determinant, evaluated without building π*
            -sq(pp.q_minus) * sq(pp.p_plus) + sq(pp.q_plus) * sq(pp.p_minus)
        }
        (None, _) => unreachable!(),
    };
    let factorization = PiStarFactorization::new(eta.into(), det_tau, mu.into()).map_err(consistency)?;
    Ok(PiStar {
        kind,
        matrix,
        factorization,
    })
}

/// The closed-form order of `H⁴` for each family and subcase.
pub fn closed_form_r(params: &FamilyParams) -> Result<BigUint, FamilyError> {
    params.require_valid()?;
    let cross = |pp: &PairParams| (sq(pp.p_plus) * sq(pp.q_minus) - sq(pp.p_minus) * sq(pp.q_plus)).abs();
    let exact_div = |value: BigInt, by: u32| -> Result<BigUint, FamilyError> {
        let (quot, rem) = value.div_rem(&BigInt::from(by));
        if !rem.is_zero() {
            return Err(FamilyError::Consistency {
                params: *params,
                detail: format!("closed form {value}/{by} is not an integer"),
            });
        }
        Ok(quot.magnitude().clone())
    };
    match params {
        FamilyParams::L(pp) if params.case() == Case::LOddPlus => exact_div(cross(pp), 4),
        FamilyParams::L(pp) => Ok(cross(pp).magnitude().clone()),
        FamilyParams::M(pp) => exact_div(cross(pp), 8),
        FamilyParams::N(pp) => Ok(cross(pp).magnitude().clone()),
        FamilyParams::O(op) => Ok((sq(op.p) - sq(op.q)).magnitude().clone()),
    }
}

/// `r` with both routes cross-checked; disagreement is a hard error.
pub fn fourth_cohomology_order(params: &FamilyParams) -> Result<BigUint, FamilyError> {
    let closed = closed_form_r(params)?;
    let ps = pi_star(params)?;
    let fail = |detail: String| FamilyError::Consistency {
        params: *params,
        detail,
    };
    if ps.factorization.resulting_r != closed {
        return Err(fail(format!(
            "closed form r = {closed} but determinant route gives {}",
            ps.factorization.resulting_r
        )));
    }
    if ps.kind == PiStarKind::Explicit {
        let m = ps.matrix.as_ref().expect("explicit kind carries a matrix");
        let snf_product: BigUint = m.smith_normal_form().invariant_factors().iter().product();
        if snf_product != closed {
            return Err(fail(format!(
                "|det π*| via Smith form is {snf_product}, closed form {closed}"
            )));
        }
    }
    Ok(closed)
}
