mod support;

use cohomog7::abelian::AbelianGroup;
use cohomog7::classify::{has_eschenburg_ring, is_type_er, known_eschenburg_space, report};
use cohomog7::exactseq::{cyclic_lemma, mv_kernel, MayerVietorisInput};
use cohomog7::families::{
    cohomology_table, fourth_cohomology_order, orbit_cohomology, pi_star, Constraint, Family, FamilyError,
    FamilyParams, Orbit, PiStarKind,
};
use cohomog7::intlinalg::IntegerMatrix;
use cohomog7::search::{enumerate_family, search, Execution, SearchFilter, SearchSpec};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{oracle, sampling};

fn p(s: &str) -> FamilyParams {
    s.parse().unwrap()
}

fn groups(s: &str) -> Vec<String> {
    cohomology_table(&p(s))
        .unwrap()
        .groups
        .iter()
        .map(ToString::to_string)
        .collect()
}

fn r(s: &str) -> u64 {
    fourth_cohomology_order(&p(s)).unwrap().to_u64().unwrap()
}

#[test]
fn validation_examples() {
    assert!(p("L(1,1)(1,3)").is_valid());
    let errors = p("N(1,1)(3,1)").validate().unwrap_err();
    assert_eq!(errors.len(), 1);
    assert!(errors[0].message.contains("p₊ even required"));
    let errors = p("O(3,5:2)").validate().unwrap_err();
    assert_eq!(errors[0].constraint, Constraint::Parity);
    assert!(errors[0].message.contains("m = 2 requires p even"));
}

#[test]
fn pi_star_examples() {
    let o = pi_star(&p("O(2,1:1)")).unwrap();
    assert_eq!(o.kind, PiStarKind::Explicit);
    assert_eq!(
        o.matrix.unwrap(),
        IntegerMatrix::from_rows(&[[-1, -1], [4, 1]]).unwrap()
    );
    let o = pi_star(&p("O(1,1:1)")).unwrap();
    assert!(o.factorization.det_tau.is_zero());
    let l = pi_star(&p("L(1,1)(1,3)")).unwrap();
    assert_eq!(
        l.matrix.unwrap(),
        IntegerMatrix::from_rows(&[[-1, -9], [1, 1]]).unwrap()
    );
    assert_eq!(l.factorization.det_eta_abs, BigUint::from(4u32));
    assert_eq!(l.factorization.det_mu_abs, BigUint::from(1u32));
}

#[test]
fn fourth_cohomology_examples() {
    assert_eq!(r("L(1,1)(1,3)"), 2);
    assert_eq!(r("N(1,1)(2,1)"), 3);
    assert_eq!(r("O(2,3:2)"), 5);
    assert_eq!(r("M(1,1)(5,1)"), 3);
    assert_eq!(r("N(1,3)(2,1)"), 35);
}

#[test]
fn cohomology_table_examples() {
    assert_eq!(groups("N(1,1)(2,1)"), ["Z", "0", "Z", "0", "Z_3", "Z", "0", "Z"]);
    assert_eq!(groups("O(1,1:1)"), ["Z", "0", "Z", "Z", "Z", "Z", "0", "Z"]);
    assert_eq!(
        groups("L(1,1)(2,1)"),
        ["Z", "0", "Z", "Z_2", "Z_3", "Z + Z_2", "0", "Z"]
    );
    let t = cohomology_table(&p("N(1,1)(2,1)")).unwrap();
    assert!(t.ring.complete);
    assert_eq!(t.ring.generator_names(), ["x", "y"]);
    assert!(!cohomology_table(&p("L(1,1)(2,1)")).unwrap().ring.complete);
}

#[test]
fn orbit_examples() {
    let km = orbit_cohomology(&p("L(1,1)(1,3)"), Orbit::KMinus).unwrap();
    assert_eq!(km.groups.len(), 6);
    assert!(km.orientable);
    let kp = orbit_cohomology(&p("L(1,1)(1,3)"), Orbit::KPlus).unwrap();
    let shown: Vec<String> = kp.groups.iter().map(ToString::to_string).collect();
    assert_eq!(shown, ["Z", "0", "Z_2", "Z", "0", "Z_2"]);
    assert!(!kp.orientable);
    let s3 = orbit_cohomology(&p("O(2,1:1)"), Orbit::KPlus).unwrap();
    assert_eq!(s3.space, Some("S³"));
    assert!(s3.orientable);
    assert!(matches!(
        orbit_cohomology(&p("M(1,1)(5,1)"), Orbit::KPlus),
        Err(FamilyError::OrbitUnavailable { .. })
    ));
}

#[test]
fn classification_examples() {
    assert_eq!(is_type_er(&p("L(1,1)(1,3)")).unwrap(), (true, BigUint::from(2u32)));
    assert!(!is_type_er(&p("O(1,1:1)")).unwrap().0);
    assert!(!is_type_er(&p("L(1,1)(2,1)")).unwrap().0);
    assert!(has_eschenburg_ring(&p("N(1,1)(2,1)")).unwrap());
    assert!(has_eschenburg_ring(&p("O(2,3:2)")).unwrap());
    assert!(known_eschenburg_space(&p("O(2,3:2)")));
    assert!(!has_eschenburg_ring(&p("O(3,5:1)")).unwrap());

    let rep = report(&p("N(1,3)(2,1)")).unwrap();
    assert_eq!(rep.r, Some(BigUint::from(35u32)));
    assert!(rep.is_type_er && rep.eschenburg_ring);
    let rep = report(&p("M(1,1)(5,1)")).unwrap();
    assert!(!rep.is_type_er);
    assert!(rep.notes.iter().any(|n| n.contains("S³-bundle over S⁴")));
    let rep = report(&p("N(1,1)(3,1)")).unwrap();
    assert!(!rep.valid);
    assert!(rep.errors.iter().any(|e| e.message.contains("p₊ even required")));
}

#[test]
fn mayer_vietoris_examples() {
    let m = |rows: &[[i64; 2]; 2]| MayerVietorisInput::new(IntegerMatrix::from_rows(rows).unwrap());
    assert_eq!(
        cyclic_lemma(&m(&[[-1, -1], [4, 1]])).unwrap(),
        AbelianGroup::cyclic(3u32)
    );
    assert_eq!(cyclic_lemma(&m(&[[-1, -1], [1, 1]])).unwrap(), AbelianGroup::integers());
    assert_eq!(cyclic_lemma(&m(&[[1, 0], [0, 1]])).unwrap(), AbelianGroup::trivial());
    assert_eq!(mv_kernel(&m(&[[-1, -1], [4, 1]])), AbelianGroup::trivial());
    assert_eq!(mv_kernel(&m(&[[-1, -1], [1, 1]])), AbelianGroup::integers());
    assert_eq!(mv_kernel(&m(&[[0, 0], [0, 0]])), AbelianGroup::free(2));
    let mut flagged = m(&[[-1, -1], [4, 1]]);
    flagged.target_degree_groups_trivial = false;
    assert!(cyclic_lemma(&flagged).is_err());
}

#[test]
fn degree_four_is_the_explicit_cokernel_for_o_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = 0;
    while seen < 200 {
        let params = sampling::random_valid(&mut rng, Family::O, 12);
        let FamilyParams::O(o) = params else { unreachable!() };
        if o.m != 1 || o.p.abs() == o.q.abs() {
            continue;
        }
        seen += 1;
        let (pp, qq) = (i128::from(o.p * o.p), i128::from(o.q * o.q));
        let expected: Vec<u64> = oracle::cokernel2_invariants([[-qq, -1], [pp, 1]])
            .into_iter()
            .filter(|&d| d > 1)
            .collect();
        let h4 = cohomology_table(&params).unwrap().groups[4].clone();
        let got: Vec<u64> = h4.torsion().iter().map(|d| d.to_u64().unwrap()).collect();
        assert_eq!(got, expected, "{params}");
    }
}

#[test]
fn parity_sweeps() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let odd_l = sampling::random_l_with_parity(&mut rng, true, 99);
        assert!(fourth_cohomology_order(&odd_l).unwrap().is_even(), "{odd_l}");
        let even_l = sampling::random_l_with_parity(&mut rng, false, 99);
        assert!(fourth_cohomology_order(&even_l).unwrap().is_odd(), "{even_l}");
        let n = sampling::random_valid(&mut rng, Family::N, 99);
        let rn = fourth_cohomology_order(&n).unwrap();
        assert!(rn.is_odd() && rn >= BigUint::from(3u32), "{n}");
        let m = sampling::random_valid(&mut rng, Family::M, 99);
        assert!(fourth_cohomology_order(&m).is_ok(), "{m}");
    }
}

#[test]
fn search_examples() {
    let r3 = SearchFilter {
        r: Some(3u32.into()),
        ..Default::default()
    };
    let found = search(
        &SearchSpec::new([Family::N, Family::O], 3, r3).unwrap(),
        Execution::Parallel,
    )
    .unwrap();
    let names: Vec<String> = found.iter().map(|r| r.params.to_string()).collect();
    assert!(names.contains(&"N(1,1)(2,1)".into()) && names.contains(&"O(2,1:1)".into()));

    let er = SearchFilter {
        type_er: true,
        ..Default::default()
    };
    assert!(
        search(&SearchSpec::new([Family::L], 1, er).unwrap(), Execution::Parallel)
            .unwrap()
            .is_empty()
    );

    let m = search(
        &SearchSpec::new([Family::M], 5, SearchFilter::default()).unwrap(),
        Execution::Parallel,
    )
    .unwrap();
    assert!(m
        .iter()
        .any(|rep| rep.params == p("M(1,1)(5,1)") && rep.r == Some(3u32.into())));
}

#[test]
fn enumeration_is_complete_up_to_sign() {
    // every valid tuple at bound 4 is enumerated, or its pairwise sign flip is
    let bound = 4i64;
    let vals: Vec<i64> = (-bound..=bound).collect();
    for family in [Family::L, Family::M, Family::N] {
        let listed = enumerate_family(family, bound as u32);
        let mut count = 0;
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    for &d in &vals {
                        let make = |a, b, c, d| match family {
                            Family::L => FamilyParams::l(a, b, c, d),
                            Family::M => FamilyParams::m(a, b, c, d),
                            _ => FamilyParams::n(a, b, c, d),
                        };
                        let t = make(a, b, c, d);
                        if !t.is_valid() {
                            continue;
                        }
                        count += 1;
                        let variants = [t, make(-a, -b, c, d), make(a, b, -c, -d), make(-a, -b, -c, -d)];
                        assert!(variants.iter().any(|v| listed.contains(v)), "{t} missing");
                    }
                }
            }
        }
        assert!(listed.len() <= count);
        assert!(listed.iter().all(FamilyParams::is_valid));
    }
}

#[test]
fn filter_is_sound_and_complete() {
    let all = search(
        &SearchSpec::new([Family::N, Family::O], 5, SearchFilter::default()).unwrap(),
        Execution::Parallel,
    )
    .unwrap();
    for k in [3u32, 5, 8, 15] {
        let filter = SearchFilter {
            r: Some(k.into()),
            ..Default::default()
        };
        let filtered = search(
            &SearchSpec::new([Family::N, Family::O], 5, filter).unwrap(),
            Execution::Parallel,
        )
        .unwrap();
        let expected: Vec<_> = all.iter().filter(|rep| rep.r == Some(k.into())).cloned().collect();
        assert_eq!(filtered, expected);
    }
}
