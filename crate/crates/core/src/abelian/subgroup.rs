use std::fmt;
use std::hash::{Hash, Hasher};

use crate::arith::{lcm, units};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::ensure_within_bound;

use super::group::{element_order, GroupElement, GroupSpec};

/// A subgroup of a [`GroupSpec`], stored as its explicit element set.
///
/// `generators` is a minimal generating list (at most two elements; empty
/// for the trivial subgroup). For cyclic subgroups it is the
/// lexicographically smallest generator.
#[derive(Clone)]
pub struct Subgroup {
    group: GroupSpec,
    elements: Vec<GroupElement>,
    members: BitSet,
    generators: Vec<GroupElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("group", &self.group)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(group: &GroupSpec, gens: &[GroupElement]) -> Result<Subgroup> {
        for &g in gens {
            if !group.contains(g) {
                return Err(Error::InvalidArgument(format!("{g} is not an element of {group}")));
            }
        }
        let members = closure(group, gens);
        Ok(Subgroup::from_members(group, members))
    }

    pub fn cyclic(group: &GroupSpec, g: GroupElement) -> Result<Subgroup> {
        Subgroup::generated(group, &[g])
    }

    pub fn trivial(group: &GroupSpec) -> Subgroup {
        Subgroup::from_members(group, closure(group, &[]))
    }

    pub fn whole(group: &GroupSpec) -> Subgroup {
        Subgroup::from_members(group, closure(group, &group.standard_generators()))
    }

    /// Validates an explicit element list as a subgroup.
    pub fn from_elements(group: &GroupSpec, elements: &[GroupElement]) -> Result<Subgroup> {
        let mut members = BitSet::new(group.order() as usize);
        for &g in elements {
            if !group.contains(g) {
                return Err(Error::InvalidSubgroup(format!("{g} is not an element of {group}")));
            }
            members.insert(group.index(g));
        }
        if !members.contains(0) {
            return Err(Error::InvalidSubgroup("identity is missing".into()));
        }
        let idx: Vec<usize> = members.iter().collect();
        for &i in &idx {
            for &j in &idx {
                let s = group.add(group.element_at(i), group.element_at(j));
                if !members.contains(group.index(s)) {
                    return Err(Error::InvalidSubgroup(format!(
                        "not closed: {} + {} = {s} is missing",
                        group.element_at(i),
                        group.element_at(j)
                    )));
                }
            }
        }
        Ok(Subgroup::from_members(group, members))
    }

    fn from_members(group: &GroupSpec, members: BitSet) -> Subgroup {
        let elements: Vec<GroupElement> = members.iter().map(|i| group.element_at(i)).collect();
        let generators = minimal_generators(group, &elements, &members);
        Subgroup { group: *group, elements, members, generators }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_cyclic(&self) -> bool {
        self.generators.len() <= 1
    }

    #[inline]
    pub fn contains(&self, g: GroupElement) -> bool {
        self.group.contains(g) && self.members.contains(self.group.index(g))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.group != other.group {
            return Err(Error::InvalidArgument("subgroups of different groups".into()));
        }
        Ok(Subgroup::from_members(&self.group, self.members.intersection(&other.members)))
    }

    /// The lexicographically smallest generator of a cyclic subgroup.
    pub fn min_generator(&self) -> Option<GroupElement> {
        if self.is_cyclic() {
            Some(self.generators.first().copied().unwrap_or(GroupElement::ZERO))
        } else {
            None
        }
    }

    /// Least `k >= 1` with `k * g` in this subgroup.
    pub fn coset_order(&self, g: GroupElement) -> u64 {
        let mut k = 1;
        let mut acc = g;
        while !self.contains(acc) {
            acc = self.group.add(acc, g);
            k += 1;
        }
        k
    }

    /// Invariant factors `(d1, d2)` of `self / sub`, with `d1 | d2`.
    ///
    /// `d2` is the exponent of the quotient: the lcm of the coset orders of
    /// the generators of `self`.
    pub fn quotient_invariants_by(&self, sub: &Subgroup) -> Result<(u64, u64)> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::InvalidSubgroup(format!("{sub} is not contained in {self}")));
        }
        let index = self.order() / sub.order();
        let d2 = self.generators.iter().fold(1, |acc, &g| lcm(acc, sub.coset_order(g)));
        let d1 = index / d2;
        if d1 * d2 != index || d2 % d1 != 0 {
            return Err(Error::Internal(format!(
                "quotient of order {index} with exponent {d2} is not two-generated"
            )));
        }
        Ok((d1, d2))
    }

    /// Every cyclic subgroup `C` of `self` with `self / C` cyclic, sorted by
    /// `(|C|, smallest generator)`.
    pub fn cyclic_subgroups_with_cyclic_quotient(&self) -> Result<Vec<Subgroup>> {
        ensure_within_bound(self.group.order())?;
        let mut out = Vec::new();
        for &g in &self.elements {
            if !is_min_generator(&self.group, g) {
                continue;
            }
            let c = Subgroup::cyclic(&self.group, g)?;
            if self.quotient_invariants_by(&c)?.0 == 1 {
                out.push(c);
            }
        }
        out.sort_by_key(|c| (c.order(), c.min_generator()));
        Ok(out)
    }

    /// All subgroups of `self`, sorted by `(order, elements)`.
    pub fn subgroups(&self) -> Result<Vec<Subgroup>> {
        ensure_within_bound(self.group.order())?;
        let whole = Subgroup::whole(&self.group);
        let mut out: Vec<Subgroup> = if *self == whole {
            lattice_subgroups(&self.group)
        } else {
            all_subgroups_by_pairs(self)
        };
        out.sort_by(|s, t| (s.order(), &s.elements).cmp(&(t.order(), &t.elements)));
        Ok(out)
    }
}

/// `g` is the smallest generator of `<g>` iff `u*g >= g` for every unit `u`
/// modulo the order of `g`.
fn is_min_generator(group: &GroupSpec, g: GroupElement) -> bool {
    let o = element_order(group, g);
    units(o).into_iter().all(|u| group.mul(u, g) >= g)
}

fn closure(group: &GroupSpec, gens: &[GroupElement]) -> BitSet {
    let mut members = BitSet::new(group.order() as usize);
    members.insert(0);
    let mut frontier = vec![GroupElement::ZERO];
    while let Some(e) = frontier.pop() {
        for &g in gens {
            let s = group.add(e, g);
            if members.insert(group.index(s)) {
                frontier.push(s);
            }
        }
    }
    members
}

fn minimal_generators(
    group: &GroupSpec,
    elements: &[GroupElement],
    members: &BitSet,
) -> Vec<GroupElement> {
    let order = elements.len() as u64;
    if order == 1 {
        return Vec::new();
    }
    let exponent = elements.iter().map(|&g| element_order(group, g)).fold(1, lcm);
    if exponent == order {
        let g = elements
            .iter()
            .copied()
            .find(|&g| element_order(group, g) == order)
            .expect("cyclic group has a generator");
        return vec![g];
    }
    // Non-cyclic: the smallest element of maximal order, then the smallest
    // element completing it to a generating pair.
    let v = elements
        .iter()
        .copied()
        .find(|&g| element_order(group, g) == exponent)
        .expect("exponent is attained");
    let cv = closure(group, &[v]);
    for &u in elements {
        // |<u, v>| = |<v>| * (order of u modulo <v>)
        let mut k = 1;
        let mut acc = u;
        while !cv.contains(group.index(acc)) {
            acc = group.add(acc, u);
            k += 1;
        }
        if exponent * k == order {
            let pair = if u < v { [u, v] } else { [v, u] };
            debug_assert!(closure(group, &pair).is_subset(members));
            return pair.to_vec();
        }
    }
    unreachable!("subgroups of a two-generated abelian group are two-generated")
}

/// Subgroups of `Z/a ⊕ Z/b` correspond to lattices `L` with
/// `aZ ⊕ bZ ⊆ L ⊆ Z²`. Each such `L` has a unique basis
/// `(p, 0), (q, r)` with `0 <= q < p`, and contains `aZ ⊕ bZ` iff `p | a`,
/// `r | b` and `p | (b / r) q`.
fn lattice_subgroups(group: &GroupSpec) -> Vec<Subgroup> {
    let (a, b) = (group.a(), group.b());
    let divisors = |n: u64| (1..=n).filter(move |d| n % d == 0);
    let mut out = Vec::new();
    for p in divisors(a) {
        for r in divisors(b) {
            for q in 0..p {
                if ((b / r) * q) % p != 0 {
                    continue;
                }
                let gens = [GroupElement::new(p % a, 0), GroupElement::new(q % a, r % b)];
                out.push(Subgroup::from_members(group, closure(group, &gens)));
            }
        }
    }
    out
}

fn all_subgroups_by_pairs(sub: &Subgroup) -> Vec<Subgroup> {
    let group = sub.group;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (i, &u) in sub.elements.iter().enumerate() {
        for &v in &sub.elements[i..] {
            let s = Subgroup::from_members(&group, closure(&group, &[u, v]));
            if seen.insert(s.elements.clone()) {
                out.push(s);
            }
        }
    }
    out
}

/// Cyclic subgroups `B` of `A` with `A / B` cyclic, sorted by `(|B|, smallest generator)`.
pub fn cyclic_subgroups_with_cyclic_quotient(group: &GroupSpec) -> Result<Vec<Subgroup>> {
    Subgroup::whole(group).cyclic_subgroups_with_cyclic_quotient()
}

/// Invariant factors of `A / B`.
pub fn quotient_invariants(group: &GroupSpec, sub: &Subgroup) -> Result<(u64, u64)> {
    if sub.group() != group {
        return Err(Error::InvalidSubgroup(format!("{sub} is not a subgroup of {group}")));
    }
    Subgroup::whole(group).quotient_invariants_by(sub)
}

/// One representative (the smallest element) of each coset generating the
/// cyclic quotient `A / B`, sorted.
pub fn quotient_generators(group: &GroupSpec, sub: &Subgroup) -> Result<Vec<GroupElement>> {
    let (d1, n) = quotient_invariants(group, sub)?;
    if d1 != 1 {
        return Err(Error::Precondition(format!(
            "{group} / {sub} is not cyclic (invariants {d1}, {n})"
        )));
    }
    let g0 = group
        .elements()
        .find(|&g| sub.coset_order(g) == n)
        .expect("cyclic quotient has a generator");
    let mut reps: Vec<GroupElement> = units(n)
        .into_iter()
        .map(|u| {
            let base = group.mul(u, g0);
            sub.elements().iter().map(|&b| group.add(base, b)).min().expect("nonempty")
        })
        .collect();
    reps.sort();
    Ok(reps)
}
