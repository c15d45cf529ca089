//! Decide, search and classify nonseparating subsets of finite abelian groups
//! generated by two elements, and relate them to NET maps through the
//! quotient `Z² / 2Λ₁` of a sublattice.
//!
//! The crate is organised in three layers:
//!
//! * [`abelian`]: exact arithmetic in `Z/a ⊕ Z/b` (elements, subgroups,
//!   quotients, automorphisms) and the constructive subgroup-extension
//!   results used by the transfer lemmas.
//! * [`nonsep`]: coset numbers, the nonseparating decision procedure, the
//!   exhaustive search engine and orbit classification.
//! * [`netmap`]: sublattices of `Z²`, Smith normal form, the constant
//!   pullback criterion and degree reports.
//!
//! ```
//! use nonsep_core::{make_group, GroupElement, HSet, is_nonseparating};
//!
//! let a = make_group(3, 3).unwrap();
//! let reps = [(0, 1), (1, 0), (1, 1), (1, 2)].map(|(x, y)| GroupElement::new(x, y));
//! let h = HSet::new(&a, &reps).unwrap();
//! assert!(is_nonseparating(&a, &h).unwrap().nonseparating);
//! ```

pub mod abelian;
pub mod error;
pub mod fixtures;
pub mod limits;
pub mod netmap;
pub mod nonsep;
pub mod verify;

mod arith;
mod bitset;

pub use abelian::{
    automorphisms, basis_multiple, cyclic_subgroups_with_cyclic_quotient, element_order,
    extend_cyclic_subgroup, generator_lift, make_group, quotient_generators, quotient_invariants,
    two_torsion, Automorphism, BasisMultiple, GroupElement, GroupSpec, Subgroup,
};
pub use error::{Error, Result};
pub use limits::{set_size_bound, size_bound, DEFAULT_SIZE_BOUND};
pub use netmap::{
    constant_pullback_from_lattice, degree_report, groups_for_degree, lattice_quotient,
    mcmullen_parity_obstruction, rh_branched_cover_feasible, smith_normal_form, DegreeReport,
    LatticeQuotient, Matrix2, Snf, Sublattice,
};
pub use nonsep::{
    canonical_form, check_inheritance, classify_nonseparating, coset_numbers, enumerate_hsets,
    find_avoiding_cyclic, is_nonseparating, search_group, Context, CosetNumbers, HSet,
    NonsepChecker, Orbit, PairClass, SearchOptions, SearchReport, SymmetryGroup, Verdict,
};
