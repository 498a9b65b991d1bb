//! Integral cohomology of the orbits `G/K-`, `G/K+` and `G/H`.
//!
//! These are transcribed constants, not computations.
//! - `G/K-` is `S³ × S²` for `L` and `O`.
//! - `G/K+` for `L` and `N`: the orbit computations of Grove, Wilking and
//!   Ziller, split by the parity of `p+`.
//! - `L` principal orbit is `S³ × L₄(1,1)`.
//! - `O`: `G/K+` is `S³` (`m = 1`) or `ℝP³` (`m = 2`); `G/H` is `S³ × S³`
//!   or `S³ × ℝP³`.
//!
//! No tables are recorded for `M`; only its manifold-level groups are known
//! here.

use serde::{Deserialize, Serialize};

use super::{Case, FamilyError, FamilyParams};
use crate::abelian::AbelianGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orbit {
    KMinus,
    KPlus,
    Principal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCohomology {
    pub orbit: Orbit,
    /// Homeomorphism type, when it has a standard name.
    pub space: Option<&'static str>,
    /// `H^0, H^1, ...` up to the orbit dimension.
    pub groups: Vec<AbelianGroup>,
    pub orientable: bool,
}

/// `Z^free + Z_{t1} + ...`
fn g(free: usize, torsion: &[u32]) -> AbelianGroup {
    AbelianGroup::free(free).direct_sum(&AbelianGroup::from_factors(torsion.iter().map(|&d| d.into())))
}

fn table(spec: &[(usize, &[u32])]) -> Vec<AbelianGroup> {
    spec.iter().map(|&(f, t)| g(f, t)).collect()
}

fn s3_x_s2() -> Vec<AbelianGroup> {
    table(&[(1, &[]), (0, &[]), (1, &[]), (1, &[]), (0, &[]), (1, &[])])
}

pub fn orbit_cohomology(params: &FamilyParams, orbit: Orbit) -> Result<OrbitCohomology, FamilyError> {
    params.require_valid()?;
    let case = params.case();
    let (space, groups) = match (case, orbit) {
        (Case::M, _) => return Err(FamilyError::OrbitUnavailable { params: *params, orbit }),

        (Case::LOddPlus | Case::LEvenPlus | Case::OTrivial | Case::OTwisted, Orbit::KMinus) => {
            (Some("S³ × S²"), s3_x_s2())
        }
        (Case::LOddPlus, Orbit::KPlus) => (
            None,
            table(&[(1, &[]), (0, &[]), (0, &[2]), (1, &[]), (0, &[]), (0, &[2])]),
        ),
        (Case::LEvenPlus | Case::N, Orbit::KPlus) => (
            None,
            table(&[(1, &[]), (0, &[]), (0, &[4]), (1, &[2]), (0, &[]), (0, &[2])]),
        ),
        (Case::LOddPlus | Case::LEvenPlus, Orbit::Principal) => (
            Some("S³ × L₄(1,1)"),
            table(&[(1, &[]), (0, &[]), (0, &[4]), (2, &[]), (0, &[]), (0, &[4]), (1, &[])]),
        ),

        (Case::N, Orbit::KMinus) => (
            None,
            table(&[(1, &[]), (0, &[]), (1, &[2]), (1, &[]), (0, &[2]), (1, &[])]),
        ),
        (Case::N, Orbit::Principal) => (
            None,
            table(&[
                (1, &[]),
                (0, &[]),
                (0, &[2, 4]),
                (2, &[2]),
                (0, &[2]),
                (0, &[2, 4]),
                (1, &[]),
            ]),
        ),

        (Case::OTrivial, Orbit::KPlus) => (Some("S³"), table(&[(1, &[]), (0, &[]), (0, &[]), (1, &[])])),
        (Case::OTrivial, Orbit::Principal) => (
            Some("S³ × S³"),
            table(&[(1, &[]), (0, &[]), (0, &[]), (2, &[]), (0, &[]), (0, &[]), (1, &[])]),
        ),
        (Case::OTwisted, Orbit::KPlus) => (Some("ℝP³"), table(&[(1, &[]), (0, &[]), (0, &[2]), (1, &[])])),
        (Case::OTwisted, Orbit::Principal) => (
            Some("S³ × ℝP³"),
            table(&[(1, &[]), (0, &[]), (0, &[2]), (2, &[]), (0, &[]), (0, &[2]), (1, &[])]),
        ),
    };
    let orientable = match orbit {
        Orbit::KMinus | Orbit::Principal => true,
        Orbit::KPlus => matches!(case, Case::OTrivial | Case::OTwisted),
    };
    Ok(OrbitCohomology {
        orbit,
        space,
        groups,
        orientable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shown(o: &OrbitCohomology) -> Vec<String> {
        o.groups.iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn l_orbits() {
        let p = FamilyParams::l(1, 1, 1, 3);
        let km = orbit_cohomology(&p, Orbit::KMinus).unwrap();
        assert_eq!(shown(&km), ["Z", "0", "Z", "Z", "0", "Z"]);
        assert!(km.orientable);
        let kp = orbit_cohomology(&p, Orbit::KPlus).unwrap();
        assert_eq!(shown(&kp), ["Z", "0", "Z_2", "Z", "0", "Z_2"]);
        assert!(!kp.orientable);
        let kp = orbit_cohomology(&FamilyParams::l(1, 1, 2, 1), Orbit::KPlus).unwrap();
        assert_eq!(shown(&kp), ["Z", "0", "Z_4", "Z + Z_2", "0", "Z_2"]);
    }

    #[test]
    fn o_orbits() {
        let kp = orbit_cohomology(&FamilyParams::o(2, 1, 1), Orbit::KPlus).unwrap();
        assert_eq!(kp.space, Some("S³"));
        assert_eq!(shown(&kp), ["Z", "0", "0", "Z"]);
        assert!(kp.orientable);
        let h = orbit_cohomology(&FamilyParams::o(2, 3, 2), Orbit::Principal).unwrap();
        assert_eq!(shown(&h), ["Z", "0", "Z_2", "Z^2", "0", "Z_2", "Z"]);
    }

    #[test]
    fn n_principal_orbit() {
        let h = orbit_cohomology(&FamilyParams::n(1, 1, 2, 1), Orbit::Principal).unwrap();
        assert_eq!(shown(&h), ["Z", "0", "Z_2 + Z_4", "Z^2 + Z_2", "Z_2", "Z_2 + Z_4", "Z"]);
        let km = orbit_cohomology(&FamilyParams::n(1, 1, 2, 1), Orbit::KMinus).unwrap();
        assert_eq!(shown(&km), ["Z", "0", "Z + Z_2", "Z", "Z_2", "Z"]);
    }

    #[test]
    fn m_has_no_table() {
        assert!(matches!(
            orbit_cohomology(&FamilyParams::m(1, 1, 5, 1), Orbit::KMinus),
            Err(FamilyError::OrbitUnavailable { .. })
        ));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(matches!(
            orbit_cohomology(&FamilyParams::n(1, 1, 3, 1), Orbit::KMinus),
            Err(FamilyError::Invalid { .. })
        ));
    }
}
