//! Coset numbers, the nonseparating decision, exhaustive search and
//! classification up to `Aut(A) ⋉ A[2]`.

mod avoid;
mod check;
mod context;
pub(crate) mod hset;
mod inherit;
mod search;
mod symmetry;

pub use avoid::find_avoiding_cyclic;
pub use check::{is_nonseparating, NonsepChecker, Verdict, Witness};
pub use context::{coset_numbers, Context, CosetNumbers};
pub use hset::{enumerate_hsets, hset_count, pair_classes, HSet, PairClass};
pub use inherit::{check_inheritance, SubgroupPresentation};
pub use search::{
    classify_nonseparating, search_group, search_group_with, Orbit, SearchOptions, SearchReport,
};
pub use symmetry::{canonical_form, SymmetryGroup};
