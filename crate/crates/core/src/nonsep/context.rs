use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::abelian::{GroupElement, GroupSpec, Subgroup};
use crate::error::{Error, Result};

use super::hset::HSet;

/// A subgroup `B` with cyclic quotient together with an element whose
/// coset generates `A / B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    subgroup: Arc<Subgroup>,
    generator: GroupElement,
    quotient_order: u64,
}

impl Context {
    /// Validates `generator + B` as a generator of a cyclic `A / B`.
    pub fn new(group: &GroupSpec, subgroup: Subgroup, generator: GroupElement) -> Result<Self> {
        Context::shared(group, Arc::new(subgroup), generator)
    }

    pub(crate) fn shared(
        group: &GroupSpec,
        subgroup: Arc<Subgroup>,
        generator: GroupElement,
    ) -> Result<Self> {
        if subgroup.group() != group {
            return Err(Error::InvalidContext(format!("{subgroup} is not a subgroup of {group}")));
        }
        if !group.contains(generator) {
            return Err(Error::InvalidContext(format!("{generator} is not in {group}")));
        }
        let n = group.order() / subgroup.order();
        let (d1, _) = crate::abelian::quotient_invariants(group, &subgroup)?;
        if d1 != 1 {
            return Err(Error::InvalidContext(format!("{group} / {subgroup} is not cyclic")));
        }
        if subgroup.coset_order(generator) != n {
            return Err(Error::InvalidContext(format!(
                "{generator} + {subgroup} does not generate the quotient of order {n}"
            )));
        }
        Ok(Context { subgroup, generator, quotient_order: n })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn generator(&self) -> GroupElement {
        self.generator
    }

    /// Order `n` of `A / B`.
    pub fn quotient_order(&self) -> u64 {
        self.quotient_order
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "B = {} (order {}), A/B of order {}, generator {} + B",
            self.subgroup,
            self.subgroup.order(),
            self.quotient_order,
            self.generator
        )
    }
}

impl Serialize for Context {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            subgroup_generators: &'a [GroupElement],
            subgroup_order: u64,
            quotient_order: u64,
            generator: GroupElement,
        }
        Wire {
            subgroup_generators: self.subgroup.generators(),
            subgroup_order: self.subgroup.order(),
            quotient_order: self.quotient_order,
            generator: self.generator,
        }
        .serialize(s)
    }
}

/// The sorted quadruple `c1 <= c2 <= c3 <= c4`. Serialized as a 4-element list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CosetNumbers([u64; 4]);

impl CosetNumbers {
    pub fn from_unsorted(mut values: [u64; 4]) -> Self {
        values.sort_unstable();
        CosetNumbers(values)
    }

    pub fn values(&self) -> [u64; 4] {
        self.0
    }

    /// Whether the context separates `c2` from `c3`.
    pub fn separates(&self) -> bool {
        self.0[1] != self.0[2]
    }
}

impl fmt::Display for CosetNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c1, c2, c3, c4] = self.0;
        write!(f, "({c1},{c2},{c3},{c4})")
    }
}

/// Coset numbers of `h` relative to `ctx`: for each class `{±h_k}` the unique
/// `c` in `[0, n/2]` with `(c·gen + B) ∩ {±h_k}` nonempty.
///
/// `B` may be any subgroup with cyclic quotient, not only a cyclic one.
pub fn coset_numbers(group: &GroupSpec, ctx: &Context, h: &HSet) -> Result<CosetNumbers> {
    let ctx = Context::shared(group, ctx.subgroup.clone(), ctx.generator)?;
    let b = ctx.subgroup();
    let n = ctx.quotient_order;
    let mut values = [0; 4];
    for (slot, class) in values.iter_mut().zip(h.classes()) {
        let members = class.members(group);
        let hits: Vec<u64> = (0..=n / 2)
            .filter(|&c| {
                let base = group.mul(c, ctx.generator);
                members.iter().any(|&m| b.contains(group.sub(m, base)))
            })
            .collect();
        match hits.as_slice() {
            [c] => *slot = *c,
            _ => {
                return Err(Error::Internal(format!(
                    "class {class} meets {} cosets among 0..={} of {ctx}",
                    hits.len(),
                    n / 2
                )))
            }
        }
    }
    Ok(CosetNumbers::from_unsorted(values))
}
