//! Exact integral cohomology of the simply connected cohomogeneity-one
//! 7-manifolds `L`, `M`, `N`, `O`, and their classification against
//! cohomology type `E_r` and the Eschenburg-space ring.
//!
//! ```
//! use cohomog7::classify::report;
//! use cohomog7::families::FamilyParams;
//!
//! let params: FamilyParams = "N(1,1)(2,1)".parse().unwrap();
//! let rep = report(&params).unwrap();
//! assert_eq!(rep.groups[4].to_string(), "Z_3");
//! assert!(rep.is_type_er && rep.eschenburg_ring);
//! ```

pub mod abelian;
mod bigser;
pub mod classify;
pub mod exactseq;
pub mod families;
pub mod intlinalg;
pub mod search;

pub use abelian::AbelianGroup;
pub use classify::ClassificationReport;
pub use families::{Family, FamilyParams};
pub use intlinalg::IntegerMatrix;
