//! Exact arithmetic in finite abelian groups generated by two elements.

mod appendix;
mod automorphism;
mod group;
mod subgroup;

pub use appendix::{basis_multiple, extend_cyclic_subgroup, generator_lift, BasisMultiple};
pub use automorphism::{automorphisms, Automorphism};
pub use group::{element_order, make_group, two_torsion, GroupElement, GroupSpec, Presentation};
pub use subgroup::{
    cyclic_subgroups_with_cyclic_quotient, quotient_generators, quotient_invariants, Subgroup,
};
