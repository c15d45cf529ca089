use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::abelian::{quotient_generators, GroupSpec};
use crate::arith::inv_mod;
use crate::error::Result;
use crate::limits::ensure_within_bound;

use super::context::{Context, CosetNumbers};
use super::hset::HSet;

/// A failing context and the coset numbers it produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub context: Context,
    pub coset_numbers: CosetNumbers,
}

/// Result of the nonseparating decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub nonseparating: bool,
    /// First separating context in scan order; absent when nonseparating.
    pub witness: Option<Witness>,
}

/// Precomputed coset-number tables for every context of one group.
///
/// Contexts run over every cyclic `B` with cyclic quotient (ascending `|B|`)
/// and every generator coset of `A / B`. For each context the table maps an
/// element index to the coset number of its class.
#[derive(Clone, Debug)]
pub struct NonsepChecker {
    group: GroupSpec,
    contexts: Vec<Context>,
    /// `tables[k * order + i]` is the coset number of element `i` under context `k`.
    tables: Vec<u32>,
    /// First-occurrence indices of pairwise distinct tables.
    distinct: Vec<usize>,
}

impl NonsepChecker {
    pub fn new(group: &GroupSpec) -> Result<Self> {
        ensure_within_bound(group.order())?;
        let order = group.order() as usize;
        let mut contexts = Vec::new();
        let mut tables: Vec<u32> = Vec::new();
        for b in crate::abelian::cyclic_subgroups_with_cyclic_quotient(group)? {
            let b = Arc::new(b);
            let n = group.order() / b.order();
            let reps = quotient_generators(group, &b)?;
            // Coset index relative to the first generator.
            let g0 = reps[0];
            let mut index = vec![0u32; order];
            for j in 0..n {
                let base = group.mul(j, g0);
                for &e in b.elements() {
                    index[group.index(group.add(base, e))] = j as u32;
                }
            }
            for &r in &reps {
                let u = index[group.index(r)] as u64;
                let uinv = inv_mod(u, n).expect("generator coset index is a unit");
                tables.extend(index.iter().map(|&j| {
                    let k = (j as u64 * uinv) % n;
                    k.min(n - k) as u32
                }));
                contexts.push(Context::shared(group, b.clone(), r)?);
            }
        }
        let mut seen: HashMap<&[u32], usize> = HashMap::new();
        let mut distinct = Vec::new();
        for k in 0..contexts.len() {
            let t = &tables[k * order..(k + 1) * order];
            if let std::collections::hash_map::Entry::Vacant(v) = seen.entry(t) {
                v.insert(k);
                distinct.push(k);
            }
        }
        Ok(NonsepChecker { group: *group, contexts, tables, distinct })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Every context, in scan order.
    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    /// Number of contexts with pairwise distinct coset-number tables.
    pub fn distinct_context_count(&self) -> usize {
        self.distinct.len()
    }

    #[inline]
    fn table(&self, k: usize) -> &[u32] {
        let order = self.group.order() as usize;
        &self.tables[k * order..(k + 1) * order]
    }

    /// Coset numbers of `h` under context `k` (table lookup).
    pub fn coset_numbers_at(&self, k: usize, h: &HSet) -> CosetNumbers {
        let t = self.table(k);
        let reps = h.reps();
        CosetNumbers::from_unsorted(reps.map(|r| t[self.group.index(r)] as u64))
    }

    /// Decides the property and reports the first separating context.
    pub fn check(&self, h: &HSet) -> Verdict {
        let idx = h.reps().map(|r| self.group.index(r));
        match self.first_failure(&idx) {
            None => Verdict { nonseparating: true, witness: None },
            Some(k) => Verdict {
                nonseparating: false,
                witness: Some(Witness {
                    context: self.contexts[k].clone(),
                    coset_numbers: self.coset_numbers_at(k, h),
                }),
            },
        }
    }

    /// Fast path on element indices of the four class representatives.
    #[inline]
    pub fn is_nonseparating_indices(&self, idx: &[usize; 4]) -> bool {
        self.first_failure(idx).is_none()
    }

    /// A table that separates `c2` from `c3` also appears at its first
    /// occurrence, so scanning distinct tables finds the same first failure.
    #[inline]
    fn first_failure(&self, idx: &[usize; 4]) -> Option<usize> {
        let order = self.group.order() as usize;
        self.distinct.iter().copied().find(|&k| {
            let t = &self.tables[k * order..(k + 1) * order];
            separates([t[idx[0]], t[idx[1]], t[idx[2]], t[idx[3]]])
        })
    }
}

/// `c2 != c3` after sorting four values.
#[inline]
fn separates(mut c: [u32; 4]) -> bool {
    // sorting network
    if c[0] > c[1] {
        c.swap(0, 1);
    }
    if c[2] > c[3] {
        c.swap(2, 3);
    }
    if c[0] > c[2] {
        c.swap(0, 2);
    }
    if c[1] > c[3] {
        c.swap(1, 3);
    }
    if c[1] > c[2] {
        c.swap(1, 2);
    }
    c[1] != c[2]
}

/// Decides whether `h` is nonseparating in `group`.
pub fn is_nonseparating(group: &GroupSpec, h: &HSet) -> Result<Verdict> {
    Ok(NonsepChecker::new(group)?.check(h))
}
