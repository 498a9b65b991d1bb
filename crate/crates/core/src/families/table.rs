//! Full integral cohomology `H⁰ .. H⁷` of a family member, with what is known
//! about ring generators.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{pi_star, Case, FamilyError, FamilyParams, PiStarKind};
use crate::abelian::AbelianGroup;
use crate::exactseq::{
    cyclic_lemma, generator_lemma_check, mv_kernel, GeneratorCertificate, GeneratorLemmaInput, MayerVietorisInput,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingGenerator {
    pub name: String,
    pub degree: u32,
    pub description: String,
}

/// `product` generates `H^generates`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductStatement {
    pub product: String,
    pub generates: u32,
}

/// A generator-criterion run backing a product statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCertificate {
    pub kappa: u32,
    pub input: GeneratorLemmaInput,
    pub certificate: GeneratorCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RingNotes {
    pub generators: Vec<RingGenerator>,
    pub products: Vec<ProductStatement>,
    /// Whether `generators` is known to generate the whole ring.
    pub complete: bool,
    pub notes: Vec<String>,
    pub certificates: Vec<DegreeCertificate>,
}

impl RingNotes {
    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn asserts(&self, product: &str, degree: u32) -> bool {
        self.products
            .iter()
            .any(|p| p.product == product && p.generates == degree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCohomology {
    pub groups: [AbelianGroup; 8],
    pub ring: RingNotes,
}

impl GradedCohomology {
    /// Checks the shape forced by a closed simply connected orientable
    /// 7-manifold: `Z` at the ends, nothing in degrees 1 and 6, free ranks
    /// symmetric under `k ↦ 7 − k` and torsion under `k ↦ 8 − k`.
    pub fn new(groups: [AbelianGroup; 8], ring: RingNotes) -> Result<Self, String> {
        check_duality(&groups)?;
        Ok(GradedCohomology { groups, ring })
    }

    pub fn degree(&self, k: usize) -> &AbelianGroup {
        &self.groups[k]
    }
}

pub fn check_duality(groups: &[AbelianGroup; 8]) -> Result<(), String> {
    let z = AbelianGroup::integers();
    if groups[0] != z || groups[7] != z {
        return Err(format!("H⁰ = {} and H⁷ = {} must both be Z", groups[0], groups[7]));
    }
    if !groups[1].is_trivial() || !groups[6].is_trivial() {
        return Err(format!("H¹ = {} and H⁶ = {} must be trivial", groups[1], groups[6]));
    }
    for k in 0..8 {
        if groups[k].free_rank() != groups[7 - k].free_rank() {
            return Err(format!(
                "free rank of H^{k} = {} differs from H^{} = {}",
                groups[k],
                7 - k,
                groups[7 - k]
            ));
        }
    }
    for k in 2..=6 {
        if groups[k].torsion() != groups[8 - k].torsion() {
            return Err(format!(
                "torsion of H^{k} = {} differs from H^{} = {}",
                groups[k],
                8 - k,
                groups[8 - k]
            ));
        }
    }
    Ok(())
}

fn generator(name: &str, degree: u32, description: &str) -> RingGenerator {
    RingGenerator {
        name: name.into(),
        degree,
        description: description.into(),
    }
}

fn product(product: &str, generates: u32) -> ProductStatement {
    ProductStatement {
        product: product.into(),
        generates,
    }
}

/// Generator-criterion data at `t = 2`, with all boundary hypotheses
/// established case by case for the family.
fn certify(kappa: u32, n: u32, h: AbelianGroup, torsion: &[u32], s: i64) -> DegreeCertificate {
    let input = GeneratorLemmaInput {
        t: 2,
        kappa,
        n: n.into(),
        h_kappa_x: h,
        torsion_orders_t: torsion.iter().map(|&d| BigUint::from(d)).collect(),
        s: BigInt::from(s),
        surjects_onto_b_plus: true,
        i_plus_star_zero_at_kappa: true,
    };
    let certificate = generator_lemma_check(&input).expect("family certificate data is well formed");
    DegreeCertificate {
        kappa,
        input,
        certificate,
    }
}

fn x_and_y() -> Vec<RingGenerator> {
    vec![
        generator("x", 2, "generator of H²"),
        generator("y", 5, "generator of H⁵"),
    ]
}

pub fn cohomology_table(params: &FamilyParams) -> Result<GradedCohomology, FamilyError> {
    let ps = pi_star(params)?;
    let r = ps.factorization.resulting_r.clone();
    let consistency = |detail: String| FamilyError::Consistency {
        params: *params,
        detail,
    };

    let (h3, h4) = if ps.kind == PiStarKind::Explicit {
        let mv = MayerVietorisInput::new(ps.matrix.clone().expect("explicit kind carries a matrix"));
        let h4 = cyclic_lemma(&mv).map_err(|e| consistency(e.to_string()))?;
        (mv_kernel(&mv), h4)
    } else {
        (AbelianGroup::free(ps.kernel_rank()), AbelianGroup::cyclic(r.clone()))
    };
    if h4 != AbelianGroup::cyclic(r.clone()) {
        return Err(consistency(format!("H⁴ = {h4} but r = {r}")));
    }

    let z = AbelianGroup::integers;
    let zero = AbelianGroup::trivial;
    let z2 = || AbelianGroup::cyclic(2u32);
    let degenerate = r.is_zero();
    let mut ring = RingNotes::default();

    let groups: [AbelianGroup; 8] = match params.case() {
        Case::LOddPlus => {
            ring.generators = x_and_y();
            if degenerate {
                ring.complete = false;
                ring.notes
                    .push("r = 0: H³ and H⁴ are infinite cyclic, outside type E_r".into());
            } else {
                ring.complete = true;
                ring.products = vec![product("x^2", 4), product("xy", 7)];
                ring.notes.push(
                    "x² generates H⁴ by a mod 2 argument; the generator criterion fails at degree 4 (s = 2, r even)"
                        .into(),
                );
                ring.certificates = vec![certify(4, 2, h4.clone(), &[], 2), certify(7, 2, z(), &[], 2)];
            }
            [z(), zero(), z(), h3, h4, z(), zero(), z()]
        }
        Case::LEvenPlus => {
            ring.generators = vec![
                generator("x", 2, "generator of H²"),
                generator("y", 5, "generator of the free part of H⁵"),
                generator("ξ", 3, "generator of H³ ≅ Z_2"),
            ];
            ring.products = vec![product("x^2", 4), product("xy", 7)];
            ring.complete = false;
            ring.notes
                .push("whether x, y and ξ generate the whole ring is unknown".into());
            ring.certificates = vec![certify(4, 4, h4.clone(), &[], 1), certify(7, 4, z(), &[], 4)];
            [z(), zero(), z(), z2(), h4, z().direct_sum(&z2()), zero(), z()]
        }
        Case::M => {
            ring.generators = if r.is_one() {
                vec![generator("z", 7, "generator of H⁷")]
            } else {
                vec![
                    generator("y", 4, "generator of H⁴"),
                    generator("z", 7, "generator of H⁷"),
                ]
            };
            ring.complete = !degenerate;
            ring.notes.push("same cohomology ring as an S³-bundle over S⁴".into());
            if degenerate {
                ring.notes.push("r = 0: H³ and H⁴ are infinite cyclic".into());
            }
            [z(), zero(), zero(), h3, h4, zero(), zero(), z()]
        }
        Case::N => {
            ring.generators = x_and_y();
            ring.products = vec![product("x^2", 4), product("xy", 7)];
            ring.complete = true;
            ring.certificates = vec![certify(4, 4, h4.clone(), &[2], 1), certify(7, 4, z(), &[], 4)];
            [z(), zero(), z(), h3, h4, z(), zero(), z()]
        }
        Case::OTrivial | Case::OTwisted => {
            ring.generators = x_and_y();
            if degenerate {
                ring.complete = false;
                ring.notes
                    .push("|p| = |q| = 1: H³ and H⁴ are infinite cyclic, outside type E_r".into());
            } else {
                ring.complete = true;
                ring.products = vec![product("x^2", 4), product("xy", 7)];
            }
            [z(), zero(), z(), h3, h4, z(), zero(), z()]
        }
    };

    for cert in &ring.certificates {
        let claimed = if cert.kappa == 4 { "x^2" } else { "xy" };
        if cert.certificate.verdict && !ring.asserts(claimed, cert.kappa) {
            return Err(consistency(format!(
                "certificate at κ = {} is not reflected in the ring notes",
                cert.kappa
            )));
        }
    }
    GradedCohomology::new(groups, ring).map_err(consistency)
}
