use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{FamilyParams, OParams, PairParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Nonzero,
    Coprime,
    Congruence,
    Parity,
    MValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationError {
    pub constraint: Constraint,
    pub message: String,
    /// Where the rule comes from.
    pub rule: String,
}

const ISOTROPY: &str = "isotropy data for the family";
const COPRIME: &str = "circle parameters are relatively prime";
const NONZERO: &str = "circle parameters are nonzero";
const INTEGRAL_R: &str = "integrality of r = |p+²q-² − p-²q+²|/4 when p+ is odd";

fn err(constraint: Constraint, message: String, rule: &str) -> ValidationError {
    ValidationError {
        constraint,
        message,
        rule: rule.to_string(),
    }
}

fn is_odd(x: i64) -> bool {
    x % 2 != 0
}

fn one_mod_four(x: i64) -> bool {
    x.rem_euclid(4) == 1
}

fn check_pair(errors: &mut Vec<ValidationError>, sign: &str, p: i64, q: i64) {
    for (name, v) in [("p", p), ("q", q)] {
        if v == 0 {
            errors.push(err(
                Constraint::Nonzero,
                format!("{name}{sign} must be nonzero"),
                NONZERO,
            ));
        }
    }
    let g = i128::from(p).gcd(&i128::from(q));
    if g != 1 {
        errors.push(err(
            Constraint::Coprime,
            format!("gcd(p{sign}, q{sign}) = {g}, must be 1"),
            COPRIME,
        ));
    }
}

fn require(errors: &mut Vec<ValidationError>, ok: bool, constraint: Constraint, message: String, rule: &str) {
    if !ok {
        errors.push(err(constraint, message, rule));
    }
}

fn validate_pair(errors: &mut Vec<ValidationError>, pp: &PairParams) {
    check_pair(errors, "₋", pp.p_minus, pp.q_minus);
    check_pair(errors, "₊", pp.p_plus, pp.q_plus);
}

fn congruent(errors: &mut Vec<ValidationError>, name: &str, v: i64) {
    require(
        errors,
        one_mod_four(v),
        Constraint::Congruence,
        format!("{name} ≡ 1 mod 4 required (got {name} = {v})"),
        ISOTROPY,
    );
}

fn odd(errors: &mut Vec<ValidationError>, name: &str, v: i64) {
    require(
        errors,
        is_odd(v),
        Constraint::Parity,
        format!("{name} odd required (got {name} = {v})"),
        ISOTROPY,
    );
}

pub(super) fn validate(params: &FamilyParams) -> Result<(), Vec<ValidationError>> {
    let mut errors = Vec::new();
    match params {
        FamilyParams::L(pp) => {
            validate_pair(&mut errors, pp);
            congruent(&mut errors, "p₋", pp.p_minus);
            congruent(&mut errors, "q₋", pp.q_minus);
            if is_odd(pp.p_plus) {
                require(
                    &mut errors,
                    is_odd(pp.q_plus),
                    Constraint::Parity,
                    format!("q₊ odd required when p₊ is odd (got q₊ = {})", pp.q_plus),
                    INTEGRAL_R,
                );
            }
        }
        FamilyParams::M(pp) => {
            validate_pair(&mut errors, pp);
            congruent(&mut errors, "p₋", pp.p_minus);
            congruent(&mut errors, "q₋", pp.q_minus);
            congruent(&mut errors, "p₊", pp.p_plus);
            congruent(&mut errors, "q₊", pp.q_plus);
        }
        FamilyParams::N(pp) => {
            validate_pair(&mut errors, pp);
            odd(&mut errors, "p₋", pp.p_minus);
            odd(&mut errors, "q₋", pp.q_minus);
            odd(&mut errors, "q₊", pp.q_plus);
            require(
                &mut errors,
                !is_odd(pp.p_plus),
                Constraint::Parity,
                format!("p₊ even required (got p₊ = {})", pp.p_plus),
                ISOTROPY,
            );
        }
        FamilyParams::O(OParams { p, q, m }) => {
            check_pair(&mut errors, "", *p, *q);
            match m {
                1 => {}
                2 => require(
                    &mut errors,
                    !is_odd(*p),
                    Constraint::Parity,
                    format!("m = 2 requires p even (got p = {p})"),
                    ISOTROPY,
                ),
                _ => errors.push(err(
                    Constraint::MValue,
                    format!("m must be 1 or 2 (got m = {m})"),
                    ISOTROPY,
                )),
            }
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}
