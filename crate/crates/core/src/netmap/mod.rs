//! Sublattices of `Z²`, the quotient `Z² / 2Λ₁`, the constant-pullback
//! criterion and per-degree reports.

mod degree;
mod lattice;
mod obstruction;
mod snf;

pub use degree::{degree_report, degree_report_with, groups_for_degree, DegreeReport, DegreeWitness};
pub use lattice::{
    constant_pullback_from_lattice, lattice_quotient, LatticeQuotient, PullbackVerdict, Sublattice,
};
pub use obstruction::{mcmullen_parity_obstruction, rh_branched_cover_feasible};
pub use snf::{det, matmul, inverse_unimodular, smith_normal_form, Matrix2, Snf};
