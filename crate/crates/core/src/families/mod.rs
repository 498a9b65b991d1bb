//! The four families `L`, `M`, `N`, `O` of simply connected 7-manifolds with
//! a cohomogeneity-one `S³ × S³` action, indexed by integer parameters.
//!
//! Parameter strings follow `L(p-,q-)(p+,q+)`, `M(..)(..)`, `N(..)(..)` and
//! `O(p,q:m)`. Parsing is whitespace-insensitive and accepts signed integers;
//! validity (coprimality, congruences, parity) is a separate step so that
//! well-formed but invalid tuples can still be reported on.

mod orbits;
mod pistar;
mod table;
mod validate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use orbits::{orbit_cohomology, Orbit, OrbitCohomology};
pub use pistar::{closed_form_r, fourth_cohomology_order, pi_star, PiStar, PiStarFactorization, PiStarKind};
pub use table::{
    check_duality, cohomology_table, DegreeCertificate, GradedCohomology, ProductStatement, RingGenerator, RingNotes,
};
pub use validate::{Constraint, ValidationError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    L,
    M,
    N,
    O,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::L, Family::M, Family::N, Family::O];

    pub fn letter(self) -> char {
        match self {
            Family::L => 'L',
            Family::M => 'M',
            Family::N => 'N',
            Family::O => 'O',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = ParamsParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "L" | "l" => Ok(Family::L),
            "M" | "m" => Ok(Family::M),
            "N" | "n" => Ok(Family::N),
            "O" | "o" => Ok(Family::O),
            other => Err(ParamsParseError::new(
                other,
                "unknown family, expected one of L, M, N, O",
            )),
        }
    }
}

/// Parameters `(p-, q-)` and `(p+, q+)` of the two circle factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairParams {
    pub p_minus: i64,
    pub q_minus: i64,
    pub p_plus: i64,
    pub q_plus: i64,
}

impl PairParams {
    pub fn new(p_minus: i64, q_minus: i64, p_plus: i64, q_plus: i64) -> Self {
        PairParams {
            p_minus,
            q_minus,
            p_plus,
            q_plus,
        }
    }
}

/// Parameters of `O(p,q:m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OParams {
    pub p: i64,
    pub q: i64,
    pub m: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyParams {
    L(PairParams),
    M(PairParams),
    N(PairParams),
    O(OParams),
}

/// Which computation applies once a tuple is known to be valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `L` with `p+` odd.
    LOddPlus,
    /// `L` with `p+` even.
    LEvenPlus,
    M,
    N,
    /// `O` with `m = 1` (trivial principal isotropy).
    OTrivial,
    /// `O` with `m = 2`.
    OTwisted,
}

impl FamilyParams {
    pub fn l(p_minus: i64, q_minus: i64, p_plus: i64, q_plus: i64) -> Self {
        FamilyParams::L(PairParams::new(p_minus, q_minus, p_plus, q_plus))
    }

    pub fn m(p_minus: i64, q_minus: i64, p_plus: i64, q_plus: i64) -> Self {
        FamilyParams::M(PairParams::new(p_minus, q_minus, p_plus, q_plus))
    }

    pub fn n(p_minus: i64, q_minus: i64, p_plus: i64, q_plus: i64) -> Self {
        FamilyParams::N(PairParams::new(p_minus, q_minus, p_plus, q_plus))
    }

    pub fn o(p: i64, q: i64, m: i64) -> Self {
        FamilyParams::O(OParams { p, q, m })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilyParams::L(_) => Family::L,
            FamilyParams::M(_) => Family::M,
            FamilyParams::N(_) => Family::N,
            FamilyParams::O(_) => Family::O,
        }
    }

    pub fn pair(&self) -> Option<&PairParams> {
        match self {
            FamilyParams::L(pp) | FamilyParams::M(pp) | FamilyParams::N(pp) => Some(pp),
            FamilyParams::O(_) => None,
        }
    }

    /// Every violated constraint, or `Ok` for a valid tuple.
    pub fn validate(&self) -> Result<(), Vec<ValidationError>> {
        validate::validate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Subcase selector. Meaningful only for valid tuples.
    pub fn case(&self) -> Case {
        match self {
            FamilyParams::L(pp) if pp.p_plus % 2 != 0 => Case::LOddPlus,
            FamilyParams::L(_) => Case::LEvenPlus,
            FamilyParams::M(_) => Case::M,
            FamilyParams::N(_) => Case::N,
            FamilyParams::O(op) if op.m == 1 => Case::OTrivial,
            FamilyParams::O(_) => Case::OTwisted,
        }
    }

    pub(crate) fn require_valid(&self) -> Result<(), FamilyError> {
        self.validate()
            .map_err(|errors| FamilyError::Invalid { params: *self, errors })
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::O(op) => write!(f, "O({},{}:{})", op.p, op.q, op.m),
            _ => {
                let pp = self.pair().expect("pair family");
                write!(
                    f,
                    "{}({},{})({},{})",
                    self.family(),
                    pp.p_minus,
                    pp.q_minus,
                    pp.p_plus,
                    pp.q_plus
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse parameters {input:?}: {reason}")]
pub struct ParamsParseError {
    pub input: String,
    pub reason: String,
}

impl ParamsParseError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        ParamsParseError {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

impl FromStr for FamilyParams {
    type Err = ParamsParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let fail = |reason: &str| ParamsParseError::new(s, reason);
        let mut chars = compact.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| fail("empty input"))?
            .to_string()
            .parse()
            .map_err(|_| fail("unknown family, expected one of L, M, N, O"))?;
        let rest = chars.as_str();

        let int = |t: &str| -> Result<i64, ParamsParseError> {
            t.parse::<i64>()
                .map_err(|_| fail(&format!("{t:?} is not a 64-bit signed integer")))
        };

        if family == Family::O {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| fail("expected O(p,q:m)"))?;
            let (pq, m) = body.split_once(':').ok_or_else(|| fail("expected O(p,q:m)"))?;
            let (p, q) = pq.split_once(',').ok_or_else(|| fail("expected O(p,q:m)"))?;
            return Ok(FamilyParams::o(int(p)?, int(q)?, int(m)?));
        }

        let shape = || fail(&format!("expected {family}(p-,q-)(p+,q+)"));
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(shape)?;
        let (minus, plus) = body
            .split_once("),(")
            .or_else(|| body.split_once(")("))
            .ok_or_else(shape)?;
        let (pm, qm) = minus.split_once(',').ok_or_else(shape)?;
        let (pp, qp) = plus.split_once(',').ok_or_else(shape)?;
        let pair = PairParams::new(int(pm)?, int(qm)?, int(pp)?, int(qp)?);
        Ok(match family {
            Family::L => FamilyParams::L(pair),
            Family::M => FamilyParams::M(pair),
            Family::N => FamilyParams::N(pair),
            Family::O => unreachable!(),
        })
    }
}

/// Serialized as the canonical parameter string.
impl Serialize for FamilyParams {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyParams {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters {params}: {}", join_errors(.errors))]
    Invalid {
        params: FamilyParams,
        errors: Vec<ValidationError>,
    },
    #[error("no orbit cohomology table is available for {params} ({orbit:?})")]
    OrbitUnavailable { params: FamilyParams, orbit: Orbit },
    #[error("internal consistency failure for {params}: {detail}")]
    Consistency { params: FamilyParams, detail: String },
}

fn join_errors(errors: &[ValidationError]) -> String {
    errors.iter().map(|e| e.message.as_str()).collect::<Vec<_>>().join("; ")
}
