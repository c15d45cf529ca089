use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::ensure_within_bound;

use super::group::{element_order, GroupElement, GroupSpec};

/// A group automorphism, determined by the images of `(1,0)` and `(0,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub image_e1: GroupElement,
    pub image_e2: GroupElement,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism { image_e1: GroupElement::new(1, 0), image_e2: GroupElement::new(0, 1) }
    }

    /// Validates that the images define an automorphism of `group`.
    pub fn new(group: &GroupSpec, image_e1: GroupElement, image_e2: GroupElement) -> Result<Self> {
        let (e1, e2) = normalized_images(group, image_e1, image_e2);
        if !group.contains(e1) || !group.contains(e2) {
            return Err(Error::InvalidArgument("images must be reduced elements".into()));
        }
        if group.mul(group.a(), e1) != GroupElement::ZERO {
            return Err(Error::InvalidArgument(format!(
                "image of (1,0) must be {}-torsion",
                group.a()
            )));
        }
        if !generates(group, e1, e2) {
            return Err(Error::InvalidArgument("images do not generate the group".into()));
        }
        Ok(Automorphism { image_e1: e1, image_e2: e2 })
    }

    #[inline]
    pub fn apply(&self, group: &GroupSpec, g: GroupElement) -> GroupElement {
        group.add(group.mul(g.x, self.image_e1), group.mul(g.y, self.image_e2))
    }

    /// `self ∘ other`.
    pub fn compose(&self, group: &GroupSpec, other: &Automorphism) -> Automorphism {
        Automorphism {
            image_e1: self.apply(group, other.image_e1),
            image_e2: self.apply(group, other.image_e2),
        }
    }
}

/// For a cyclic group only `(0,1)` is a generator; `(1,0)` is the identity.
fn normalized_images(
    group: &GroupSpec,
    e1: GroupElement,
    e2: GroupElement,
) -> (GroupElement, GroupElement) {
    if group.is_cyclic() {
        (GroupElement::ZERO, e2)
    } else {
        (e1, e2)
    }
}

/// Whether `u` and `v` generate `group`: `|<u,v>| = |<v>| * ord(u mod <v>)`.
fn generates(group: &GroupSpec, u: GroupElement, v: GroupElement) -> bool {
    let cv = cyclic_members(group, v);
    let ov = element_order(group, v);
    generates_with(group, u, ov, &cv)
}

fn generates_with(group: &GroupSpec, u: GroupElement, ov: u64, cv: &BitSet) -> bool {
    let mut k = 1;
    let mut acc = u;
    while !cv.contains(group.index(acc)) {
        acc = group.add(acc, u);
        k += 1;
    }
    ov * k == group.order()
}

fn cyclic_members(group: &GroupSpec, v: GroupElement) -> BitSet {
    let mut set = BitSet::new(group.order() as usize);
    let mut acc = GroupElement::ZERO;
    while set.insert(group.index(acc)) {
        acc = group.add(acc, v);
    }
    set
}

/// Every automorphism of `group`: `image_e1` ranges over the `a`-torsion,
/// `image_e2` over all elements, keeping pairs that generate. Sorted by
/// `(image_e1, image_e2)`.
pub fn automorphisms(group: &GroupSpec) -> Result<Vec<Automorphism>> {
    ensure_within_bound(group.order())?;
    let a = group.a();
    let mut out = Vec::new();
    if group.is_cyclic() {
        for v in group.elements() {
            if element_order(group, v) == group.order() {
                out.push(Automorphism { image_e1: GroupElement::ZERO, image_e2: v });
            }
        }
        return Ok(out);
    }
    let a_torsion: Vec<GroupElement> =
        group.elements().filter(|&g| group.mul(a, g) == GroupElement::ZERO).collect();
    // Both images must have the orders of the basis elements they replace.
    let candidates_e2: Vec<(GroupElement, BitSet)> = group
        .elements()
        .filter(|&v| element_order(group, v) == group.b())
        .map(|v| (v, cyclic_members(group, v)))
        .collect();
    for &u in &a_torsion {
        if element_order(group, u) != a {
            continue;
        }
        for (v, cv) in &candidates_e2 {
            if generates_with(group, u, group.b(), cv) {
                out.push(Automorphism { image_e1: u, image_e2: *v });
            }
        }
    }
    Ok(out)
}
