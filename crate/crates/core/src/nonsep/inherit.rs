use std::collections::HashMap;

use crate::abelian::{element_order, GroupElement, GroupSpec, Subgroup};
use crate::error::{Error, Result};

use super::check::NonsepChecker;
use super::hset::HSet;

/// An explicit isomorphism `Z/a' ⊕ Z/b' → A'` onto a subgroup of `A`,
/// sending `(x, y)` to `x·u + y·v`.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    abstract_group: GroupSpec,
    u: GroupElement,
    v: GroupElement,
    inverse: HashMap<GroupElement, GroupElement>,
}

impl SubgroupPresentation {
    pub fn new(group: &GroupSpec, sub: &Subgroup) -> Result<Self> {
        if sub.group() != group {
            return Err(Error::InvalidSubgroup(format!("{sub} does not lie in {group}")));
        }
        if sub.generators().len() > 2 {
            return Err(Error::InvalidArgument(format!("{sub} needs more than two generators")));
        }
        let order = sub.order();
        let (e, v) = sub
            .elements()
            .iter()
            .map(|&g| (element_order(group, g), g))
            .max_by_key(|&(o, g)| (o, std::cmp::Reverse(g)))
            .expect("subgroups are nonempty");
        let a = order / e;
        if e % a != 0 {
            return Err(Error::InvalidArgument(format!("{sub} needs more than two generators")));
        }
        let abstract_group = GroupSpec::new(a, e)?;
        let u = sub
            .elements()
            .iter()
            .copied()
            .filter(|&g| element_order(group, g) == a || a == 1)
            .find(|&g| Subgroup::generated(group, &[g, v]).map(|s| s.order() == order).unwrap_or(false))
            .ok_or_else(|| Error::Internal(format!("no complement found in {sub}")))?;
        let mut inverse = HashMap::with_capacity(order as usize);
        for p in abstract_group.elements() {
            let img = group.add(group.mul(p.x, u), group.mul(p.y, v));
            if inverse.insert(img, p).is_some() {
                return Err(Error::Internal(format!("presentation of {sub} is not injective")));
            }
        }
        Ok(SubgroupPresentation { abstract_group, u, v, inverse })
    }

    /// The invariant-factor form of the subgroup.
    pub fn abstract_group(&self) -> &GroupSpec {
        &self.abstract_group
    }

    /// Images of `(1,0)` and `(0,1)`.
    pub fn basis(&self) -> (GroupElement, GroupElement) {
        (self.u, self.v)
    }

    pub fn to_ambient(&self, group: &GroupSpec, p: GroupElement) -> GroupElement {
        group.add(group.mul(p.x, self.u), group.mul(p.y, self.v))
    }

    pub fn from_ambient(&self, g: GroupElement) -> Option<GroupElement> {
        self.inverse.get(&g).copied()
    }

    /// Transports an H-set of `A` lying inside the subgroup.
    pub fn pull_back(&self, h: &HSet) -> Result<HSet> {
        let reps = h
            .reps()
            .iter()
            .map(|&g| {
                self.from_ambient(g)
                    .ok_or_else(|| Error::InvalidArgument(format!("{g} is not in the subgroup")))
            })
            .collect::<Result<Vec<_>>>()?;
        HSet::new(&self.abstract_group, &reps)
    }
}

/// Evaluates the property of `h` inside `A'` (via its own presentation) and
/// inside `A`. The two verdicts must agree; disagreement is an internal error.
pub fn check_inheritance(group: &GroupSpec, sub: &Subgroup, h: &HSet) -> Result<(bool, bool)> {
    let pres = SubgroupPresentation::new(group, sub)?;
    let inner = pres.pull_back(h)?;
    let in_sub = NonsepChecker::new(pres.abstract_group())?.check(&inner).nonseparating;
    let in_big = NonsepChecker::new(group)?.check(h).nonseparating;
    if in_sub != in_big {
        return Err(Error::Internal(format!(
            "{h} gives {in_sub} in {sub} but {in_big} in {group}"
        )));
    }
    Ok((in_sub, in_big))
}
