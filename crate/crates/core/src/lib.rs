//! Factorization invariants of numerical monoids and of block monoids over
//! cyclic groups.
//!
//! The crate enumerates factorization sets and derives from them lengths,
//! delta sets, distances, catenary degrees, the ∇ graph and Betti elements.
//! Scans over windows of a monoid estimate its set of catenary degrees, and
//! the [`verify`] harness checks known structural results about where the
//! extreme catenary degrees occur.
//!
//! ```
//! use catdeg::{catenary_degree, factorizations, NumericalMonoid};
//!
//! let s = NumericalMonoid::new(&[11, 36, 39]).unwrap();
//! let z = factorizations(&s, 450).unwrap();
//! assert_eq!(catenary_degree(&z).unwrap(), 16);
//! ```

pub mod block;
pub mod catenary;
pub mod cli;
pub mod factorization;
pub mod families;
pub mod monoid;
pub mod output;
mod spanning;
mod union_find;
pub mod verify;

pub use block::{
    atoms, catenary_set_sample, factorizations_block, theorem_fullset_witness, AtomTable,
    BlockError, ZeroSumSequence,
};
pub use catenary::{
    betti_elements, betti_via_cini, catenary_degree, catenary_degree_of, catenary_set_scan,
    check_sandwich, dividing_betti, nabla_components, sandwich_with, verify_nchain, BettiRecord,
    BettiReport, CatenaryError, CatenaryScan, DistanceGraph, SandwichCheck,
};
pub use factorization::{
    delta_set_monoid, distance, factorizations, gcd, AtomEvaluation, Factorization,
    FactorizationError, FactorizationSet,
};
pub use families::{
    arithmetic_family, largecat_family, unique_betti_family, FamilyError, FamilyPrediction,
};
pub use monoid::{membership_criterion_2gen, MonoidError, NumericalMonoid};
