use std::fmt;

use serde::Serialize;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::limits::ensure_within_bound;

/// The class `{h, -h}`, keyed by its lexicographically smaller member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PairClass {
    rep: GroupElement,
}

impl PairClass {
    pub fn new(group: &GroupSpec, h: GroupElement) -> Result<Self> {
        if !group.contains(h) {
            return Err(Error::InvalidHSet(format!("{h} is not an element of {group}")));
        }
        Ok(PairClass { rep: h.min(group.neg(h)) })
    }

    pub fn rep(&self) -> GroupElement {
        self.rep
    }

    /// Whether `2 rep = 0`, i.e. the class is a single element.
    pub fn is_singleton(&self, group: &GroupSpec) -> bool {
        group.neg(self.rep) == self.rep
    }

    /// The one or two members of the class.
    pub fn members(&self, group: &GroupSpec) -> Vec<GroupElement> {
        let neg = group.neg(self.rep);
        if neg == self.rep {
            vec![self.rep]
        } else {
            vec![self.rep, neg]
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

/// Four distinct pair classes, sorted. Pair classes partition the group, so
/// distinct classes are automatically disjoint.
///
/// Serialized as the list of the four representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HSet {
    classes: [PairClass; 4],
}

impl HSet {
    /// Builds an H-set from four class representatives (either sign).
    pub fn new(group: &GroupSpec, reps: &[GroupElement]) -> Result<Self> {
        if reps.len() != 4 {
            return Err(Error::InvalidHSet(format!("expected 4 classes, got {}", reps.len())));
        }
        let mut classes = [PairClass { rep: GroupElement::ZERO }; 4];
        for (slot, &h) in classes.iter_mut().zip(reps) {
            *slot = PairClass::new(group, h)?;
        }
        classes.sort();
        if classes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHSet(format!(
                "classes are not distinct: {}",
                classes.map(|c| c.to_string()).join(", ")
            )));
        }
        Ok(HSet { classes })
    }

    /// Builds from already-normalized, strictly increasing classes.
    pub(crate) fn from_sorted_classes(classes: [PairClass; 4]) -> Self {
        debug_assert!(classes.windows(2).all(|w| w[0] < w[1]));
        HSet { classes }
    }

    pub fn classes(&self) -> &[PairClass; 4] {
        &self.classes
    }

    pub fn reps(&self) -> [GroupElement; 4] {
        self.classes.map(|c| c.rep)
    }

    /// All members of the union, sorted (between 4 and 8 elements).
    pub fn elements(&self, group: &GroupSpec) -> Vec<GroupElement> {
        let mut out: Vec<_> = self.classes.iter().flat_map(|c| c.members(group)).collect();
        out.sort();
        out
    }

    /// The image of the set under an arbitrary map on elements, provided
    /// the map sends pair classes to pair classes and stays injective.
    pub(crate) fn map_classes(
        &self,
        group: &GroupSpec,
        f: impl Fn(GroupElement) -> GroupElement,
    ) -> HSet {
        let mut classes = self.classes.map(|c| {
            let g = f(c.rep);
            PairClass { rep: g.min(group.neg(g)) }
        });
        classes.sort_unstable();
        HSet { classes }
    }
}

impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All pair classes of `group`, sorted by representative.
pub fn pair_classes(group: &GroupSpec) -> Vec<PairClass> {
    group
        .elements()
        .filter(|&g| g <= group.neg(g))
        .map(|rep| PairClass { rep })
        .collect()
}

/// Every H-set of `group`, in lexicographic order of class indices.
pub fn enumerate_hsets(group: &GroupSpec) -> Result<impl Iterator<Item = HSet>> {
    ensure_within_bound(group.order())?;
    let classes = pair_classes(group);
    Ok(FourSubsets::new(classes.len()).map(move |[i, j, k, l]| {
        HSet::from_sorted_classes([classes[i], classes[j], classes[k], classes[l]])
    }))
}

/// Number of H-sets, `C(P, 4)`.
pub fn hset_count(group: &GroupSpec) -> u64 {
    let p = pair_classes(group).len() as u64;
    if p < 4 {
        0
    } else {
        p * (p - 1) * (p - 2) * (p - 3) / 24
    }
}

/// Lexicographic 4-subsets of `0..n`.
pub(crate) struct FourSubsets {
    n: usize,
    next: Option<[usize; 4]>,
}

impl FourSubsets {
    pub(crate) fn new(n: usize) -> Self {
        FourSubsets { n, next: (n >= 4).then_some([0, 1, 2, 3]) }
    }
}

impl Iterator for FourSubsets {
    type Item = [usize; 4];

    fn next(&mut self) -> Option<[usize; 4]> {
        let cur = self.next?;
        let mut nxt = cur;
        let mut i = 4;
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if nxt[i] < self.n - 4 + i {
                nxt[i] += 1;
                for j in i + 1..4 {
                    nxt[j] = nxt[j - 1] + 1;
                }
                break Some(nxt);
            }
        };
        Some(cur)
    }
}
