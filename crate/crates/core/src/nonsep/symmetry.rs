use std::collections::HashSet;

use crate::abelian::{automorphisms, two_torsion, Automorphism, GroupElement, GroupSpec};
use crate::error::Result;

use super::hset::{pair_classes, HSet};

/// The group `Aut(A) ⋉ A[2]` acting by `h ↦ φ(h) + t`.
///
/// Translation by a 2-torsion element commutes with negation, so the action
/// permutes pair classes and hence H-sets.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    group: GroupSpec,
    automorphisms: Vec<Automorphism>,
    translations: Vec<GroupElement>,
}

impl SymmetryGroup {
    pub fn new(group: &GroupSpec) -> Result<Self> {
        Ok(SymmetryGroup {
            group: *group,
            automorphisms: automorphisms(group)?,
            translations: two_torsion(group),
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.automorphisms
    }

    pub fn translations(&self) -> &[GroupElement] {
        &self.translations
    }

    /// `|Aut(A)| · |A[2]|`.
    pub fn len(&self) -> usize {
        self.automorphisms.len() * self.translations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn apply(&self, phi: &Automorphism, t: GroupElement, g: GroupElement) -> GroupElement {
        self.group.add(phi.apply(&self.group, g), t)
    }

    pub fn image(&self, phi: &Automorphism, t: GroupElement, h: &HSet) -> HSet {
        h.map_classes(&self.group, |g| self.apply(phi, t, g))
    }

    /// All images of `h`.
    pub fn images<'a>(&'a self, h: &'a HSet) -> impl Iterator<Item = HSet> + 'a {
        self.automorphisms.iter().flat_map(move |phi| {
            self.translations.iter().map(move |&t| self.image(phi, t, h))
        })
    }

    /// The orbit of `h`, sorted.
    pub fn orbit(&self, h: &HSet) -> Vec<HSet> {
        let set: HashSet<HSet> = self.images(h).collect();
        let mut out: Vec<_> = set.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Lexicographically least member of the orbit of `h`.
    pub fn canonical_form(&self, h: &HSet) -> HSet {
        self.images(h).min().expect("the identity is always present")
    }

    /// Indices (into `pair_classes`) of the least class of each class orbit.
    pub fn class_orbit_representatives(&self) -> Vec<usize> {
        let classes = pair_classes(&self.group);
        let mut class_of = vec![usize::MAX; self.group.order() as usize];
        for (i, c) in classes.iter().enumerate() {
            for m in c.members(&self.group) {
                class_of[self.group.index(m)] = i;
            }
        }
        let mut seen = vec![false; classes.len()];
        let mut reps = Vec::new();
        for i in 0..classes.len() {
            if seen[i] {
                continue;
            }
            reps.push(i);
            let g = classes[i].rep();
            for phi in &self.automorphisms {
                for &t in &self.translations {
                    seen[class_of[self.group.index(self.apply(phi, t, g))]] = true;
                }
            }
        }
        reps
    }
}

/// Lexicographic minimum of the `Aut(A) ⋉ A[2]` orbit of `h`.
pub fn canonical_form(group: &GroupSpec, h: &HSet) -> Result<HSet> {
    Ok(SymmetryGroup::new(group)?.canonical_form(h))
}
