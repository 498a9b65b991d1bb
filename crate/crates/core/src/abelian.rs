//! Finitely generated abelian groups in invariant-factor normal form.
//!
//! A group is stored as `Z^free_rank + Z_{d1} + ... + Z_{dk}` with
//! `2 <= d1 | d2 | ... | dk`. Every constructor normalizes, so structural
//! equality is group isomorphism. Cyclic factors follow the usual convention:
//! `Z_0` is the infinite cyclic group and `Z_1` is trivial.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigser;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AbelianError {
    #[error("cyclic factor orders must be non-negative, got {0}")]
    NegativeFactor(BigInt),
    #[error("cannot parse abelian group {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Order of a group: a positive integer, or infinite when there is a free part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigUint),
    Infinite,
}

impl Order {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawGroup")]
pub struct AbelianGroup {
    free_rank: usize,
    #[serde(with = "bigser::vec_uint")]
    torsion: Vec<BigUint>,
}

/// Deserialization shape; renormalized on the way in.
#[derive(Deserialize)]
struct RawGroup {
    free_rank: usize,
    #[serde(with = "bigser::vec_uint")]
    torsion: Vec<BigUint>,
}

impl From<RawGroup> for AbelianGroup {
    fn from(raw: RawGroup) -> Self {
        AbelianGroup::free(raw.free_rank).direct_sum(&AbelianGroup::from_factors(raw.torsion))
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// The infinite cyclic group `Z`.
    pub fn integers() -> Self {
        Self::free(1)
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z_r` under the `Z_0 = Z`, `Z_1 = 0` convention.
    pub fn cyclic(order: impl Into<BigUint>) -> Self {
        Self::from_factors([order.into()])
    }

    /// Normal form of a direct sum of cyclic groups given by their orders.
    ///
    /// Fails on negative entries; use [`AbelianGroup::from_factors`] when the
    /// factors are already known to be non-negative.
    pub fn normalize<I, T>(raw_factors: I) -> Result<Self, AbelianError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut unsigned = Vec::new();
        for raw in raw_factors {
            let raw: BigInt = raw.into();
            if raw.sign() == Sign::Minus {
                return Err(AbelianError::NegativeFactor(raw));
            }
            unsigned.push(raw.magnitude().clone());
        }
        Ok(Self::from_factors(unsigned))
    }

    pub fn from_factors<I: IntoIterator<Item = BigUint>>(raw_factors: I) -> Self {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for d in raw_factors {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        AbelianGroup {
            free_rank,
            torsion: divisor_chain(torsion),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors `d1 | d2 | ...` of the torsion subgroup.
    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn torsion_subgroup(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    /// The group as a list of cyclic orders (`0` for each free summand),
    /// suitable for feeding back into [`AbelianGroup::normalize`].
    pub fn factors(&self) -> Vec<BigUint> {
        std::iter::repeat_n(BigUint::zero(), self.free_rank)
            .chain(self.torsion.iter().cloned())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// A group is cyclic when it needs at most one generator.
    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.torsion.len() <= 1
    }

    /// Minimal number of generators.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: divisor_chain(torsion),
        }
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.torsion.iter().product())
        }
    }
}

impl Default for AbelianGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

/// Rewrites a list of torsion orders (all >= 2) into a divisor chain by
/// repeatedly replacing pairs with `(gcd, lcm)`, which preserves the group.
fn divisor_chain(mut orders: Vec<BigUint>) -> Vec<BigUint> {
    orders.sort();
    let n = orders.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if (&orders[j] % &orders[i]).is_zero() {
                continue;
            }
            let g = orders[i].gcd(&orders[j]);
            let l = &orders[i] / &g * &orders[j];
            orders[i] = g;
            orders[j] = l;
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::with_capacity(self.torsion.len() + 1);
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for AbelianGroup {
    type Err = AbelianError;

    /// Parses `0`, `Z`, `Z^r`, `Z_d` (or `Z_{d}`) summands joined by `+`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| AbelianError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        let mut factors = Vec::new();
        for term in compact.split('+') {
            if term == "0" {
                continue;
            }
            if term == "Z" {
                factors.push(BigUint::zero());
            } else if let Some(rank) = term.strip_prefix("Z^") {
                let rank: usize = rank.parse().map_err(|_| fail("bad free rank"))?;
                factors.extend(std::iter::repeat_n(BigUint::zero(), rank));
            } else if let Some(order) = term.strip_prefix("Z_") {
                let order = order.trim_start_matches('{').trim_end_matches('}');
                let order: BigUint = order.parse().map_err(|_| fail("bad cyclic order"))?;
                factors.push(order);
            } else {
                return Err(fail("unrecognized summand"));
            }
        }
        Ok(Self::from_factors(factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn zero_factor_is_free() {
        let g = AbelianGroup::normalize([0]).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion().is_empty());
        assert_eq!(g, AbelianGroup::integers());
    }

    #[test]
    fn ones_are_dropped() {
        assert_eq!(AbelianGroup::normalize([1, 1]).unwrap(), AbelianGroup::trivial());
    }

    #[test]
    fn four_six_gives_two_twelve() {
        let g = AbelianGroup::normalize([4, 6]).unwrap();
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), big(&[2, 12]).as_slice());
    }

    #[test]
    fn negative_factor_rejected() {
        assert!(matches!(
            AbelianGroup::normalize([3, -2]),
            Err(AbelianError::NegativeFactor(_))
        ));
    }

    #[test]
    fn direct_sums() {
        let z_z2 = AbelianGroup::normalize([0, 2]).unwrap();
        assert_eq!(z_z2.direct_sum(&AbelianGroup::trivial()), z_z2);
        let z2 = AbelianGroup::cyclic(2u32);
        let z4 = AbelianGroup::cyclic(4u32);
        assert_eq!(z2.direct_sum(&z4).torsion(), big(&[2, 4]).as_slice());
        let z3 = AbelianGroup::cyclic(3u32);
        assert_eq!(z2.direct_sum(&z3).torsion(), big(&[6]).as_slice());
    }

    #[test]
    fn orders() {
        assert_eq!(AbelianGroup::trivial().order(), Order::Finite(1u32.into()));
        let g = AbelianGroup::normalize([2, 4]).unwrap();
        assert_eq!(g.order(), Order::Finite(8u32.into()));
        assert_eq!(AbelianGroup::integers().order(), Order::Infinite);
    }

    #[test]
    fn cyclicity() {
        assert!(AbelianGroup::trivial().is_cyclic());
        assert!(AbelianGroup::cyclic(6u32).is_cyclic());
        assert!(AbelianGroup::normalize([2, 3]).unwrap().is_cyclic());
        assert!(!AbelianGroup::normalize([2, 2]).unwrap().is_cyclic());
        assert!(!AbelianGroup::normalize([0, 2]).unwrap().is_cyclic());
    }

    #[test]
    fn display_grammar() {
        assert_eq!(AbelianGroup::integers().to_string(), "Z");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::normalize([0, 2]).unwrap().to_string(), "Z + Z_2");
        assert_eq!(AbelianGroup::cyclic(56u32).to_string(), "Z_56");
        assert_eq!(
            AbelianGroup::normalize([0, 0, 4, 2]).unwrap().to_string(),
            "Z^2 + Z_2 + Z_4"
        );
    }

    #[test]
    fn parse_grammar() {
        for s in ["0", "Z", "Z + Z_2", "Z_56", "Z^2 + Z_2 + Z_4", "Z_2 + Z_6"] {
            let g: AbelianGroup = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!(
            "Z_{12}+Z_{4}".parse::<AbelianGroup>().unwrap().to_string(),
            "Z_4 + Z_12"
        );
        assert_eq!("Z_1 + Z_0".parse::<AbelianGroup>().unwrap(), AbelianGroup::integers());
        assert!("Q".parse::<AbelianGroup>().is_err());
        assert!("".parse::<AbelianGroup>().is_err());
    }

    #[test]
    fn json_form() {
        let g = AbelianGroup::normalize([0, 2]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"free_rank":1,"torsion":[2]}"#);
        let back: AbelianGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
