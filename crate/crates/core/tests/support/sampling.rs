//! Uniform sampling of valid parameter tuples by construction (congruence
//! and parity classes first, coprimality by rejection).
#![allow(dead_code)]

use cohomog7::families::{Family, FamilyParams};
use rand::Rng;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn one_mod_four<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = 4 * rng.gen_range(-(bound + 3) / 4..=(bound - 1) / 4) + 1;
        if v.abs() <= bound {
            return v;
        }
    }
}

fn odd<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = 2 * rng.gen_range(-(bound + 1) / 2..=(bound - 1) / 2) + 1;
        if v.abs() <= bound {
            return v;
        }
    }
}

fn nonzero<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn even<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = 2 * rng.gen_range(-bound / 2..=bound / 2);
        if v != 0 {
            return v;
        }
    }
}

fn coprime_pair<R: Rng>(rng: &mut R, mut draw: impl FnMut(&mut R) -> (i64, i64)) -> (i64, i64) {
    loop {
        let (p, q) = draw(rng);
        if gcd(p, q) == 1 {
            return (p, q);
        }
    }
}

/// A valid tuple of `family` with every `|parameter| ≤ bound` (`bound ≥ 2`).
pub fn random_valid<R: Rng>(rng: &mut R, family: Family, bound: i64) -> FamilyParams {
    let params = match family {
        Family::L => {
            let (pm, qm) = coprime_pair(rng, |r| (one_mod_four(r, bound), one_mod_four(r, bound)));
            let (pp, qp) = coprime_pair(rng, |r| {
                let p = nonzero(r, bound);
                let q = if p % 2 != 0 { odd(r, bound) } else { nonzero(r, bound) };
                (p, q)
            });
            FamilyParams::l(pm, qm, pp, qp)
        }
        Family::M => {
            let (pm, qm) = coprime_pair(rng, |r| (one_mod_four(r, bound), one_mod_four(r, bound)));
            let (pp, qp) = coprime_pair(rng, |r| (one_mod_four(r, bound), one_mod_four(r, bound)));
            FamilyParams::m(pm, qm, pp, qp)
        }
        Family::N => {
            let (pm, qm) = coprime_pair(rng, |r| (odd(r, bound), odd(r, bound)));
            let (pp, qp) = coprime_pair(rng, |r| (even(r, bound), odd(r, bound)));
            FamilyParams::n(pm, qm, pp, qp)
        }
        Family::O => {
            let m = rng.gen_range(1..=2);
            let (p, q) = coprime_pair(rng, |r| {
                let p = if m == 2 { even(r, bound) } else { nonzero(r, bound) };
                (p, nonzero(r, bound))
            });
            FamilyParams::o(p, q, m)
        }
    };
    assert!(params.is_valid(), "sampler produced invalid {params}");
    params
}

/// Like [`random_valid`] but with the `p+` odd/even subcase of `L` forced.
pub fn random_l_with_parity<R: Rng>(rng: &mut R, p_plus_odd: bool, bound: i64) -> FamilyParams {
    loop {
        let params = random_valid(rng, Family::L, bound);
        let pp = params.pair().unwrap().p_plus;
        if (pp % 2 != 0) == p_plus_odd {
            return params;
        }
    }
}
