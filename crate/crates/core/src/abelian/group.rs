use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{crt_pair, gcd, lcm, mul_mod, prime_divisors};
use crate::error::{Error, Result};
use crate::limits::MAX_SIZE_BOUND;

/// A finite abelian group `Z/a ⊕ Z/b` in invariant-factor form (`a | b`).
///
/// `a = 1` encodes a cyclic group. Serialized as `[a, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u64; 2]", into = "[u64; 2]")]
pub struct GroupSpec {
    a: u64,
    b: u64,
}

/// An element `(x, y)` with `x` reduced mod `a` and `y` reduced mod `b`.
///
/// Ordering is lexicographic by `(x, y)`, which is also the order of
/// [`GroupSpec::index`]. Serialized as `[x, y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct GroupElement {
    pub x: u64,
    pub y: u64,
}

impl GroupElement {
    pub const fn new(x: u64, y: u64) -> Self {
        GroupElement { x, y }
    }

    pub const ZERO: GroupElement = GroupElement { x: 0, y: 0 };
}

impl From<[u64; 2]> for GroupElement {
    fn from([x, y]: [u64; 2]) -> Self {
        GroupElement { x, y }
    }
}

impl From<GroupElement> for [u64; 2] {
    fn from(g: GroupElement) -> Self {
        [g.x, g.y]
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl TryFrom<[u64; 2]> for GroupSpec {
    type Error = Error;

    fn try_from([a, b]: [u64; 2]) -> Result<Self> {
        GroupSpec::new(a, b)
    }
}

impl From<GroupSpec> for [u64; 2] {
    fn from(g: GroupSpec) -> Self {
        [g.a, g.b]
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{} + Z/{}", self.a, self.b)
    }
}

/// Normalizes `Z/m ⊕ Z/n` to invariant factors `(gcd(m,n), lcm(m,n))`.
pub fn make_group(m: u64, n: u64) -> Result<GroupSpec> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "cyclic factor orders must be positive, got ({m}, {n})"
        )));
    }
    GroupSpec::new(gcd(m, n), lcm(m, n))
}

/// Order of `g` in `A`: `lcm(a / gcd(x, a), b / gcd(y, b))`.
pub fn element_order(group: &GroupSpec, g: GroupElement) -> u64 {
    lcm(group.a / gcd(g.x, group.a), group.b / gcd(g.y, group.b))
}

/// All `h` with `2h = 0`, identity included, in lexicographic order.
pub fn two_torsion(group: &GroupSpec) -> Vec<GroupElement> {
    let xs: &[u64] = if group.a % 2 == 0 { &[0, group.a / 2] } else { &[0] };
    let ys: &[u64] = if group.b % 2 == 0 { &[0, group.b / 2] } else { &[0] };
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| GroupElement::new(x, y)))
        .collect()
}

impl GroupSpec {
    /// Builds a group already in invariant-factor form.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(format!(
                "invariant factors must be positive, got ({a}, {b})"
            )));
        }
        if b % a != 0 {
            return Err(Error::InvalidArgument(format!(
                "({a}, {b}) is not in invariant-factor form ({a} does not divide {b})"
            )));
        }
        match a.checked_mul(b) {
            Some(order) if order <= MAX_SIZE_BOUND => Ok(GroupSpec { a, b }),
            _ => Err(Error::InvalidArgument(format!(
                "group Z/{a} + Z/{b} is larger than {MAX_SIZE_BOUND}"
            ))),
        }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn order(&self) -> u64 {
        self.a * self.b
    }

    pub fn is_cyclic(&self) -> bool {
        self.a == 1
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.x < self.a && g.y < self.b
    }

    /// Reduces an arbitrary integer pair into the group.
    pub fn reduce(&self, x: i64, y: i64) -> GroupElement {
        GroupElement::new(
            x.rem_euclid(self.a as i64) as u64,
            y.rem_euclid(self.b as i64) as u64,
        )
    }

    pub fn element(&self, x: u64, y: u64) -> Result<GroupElement> {
        let g = GroupElement::new(x, y);
        if self.contains(g) {
            Ok(g)
        } else {
            Err(Error::InvalidArgument(format!("{g} is not a reduced element of {self}")))
        }
    }

    #[inline]
    pub fn add(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        GroupElement::new((g.x + h.x) % self.a, (g.y + h.y) % self.b)
    }

    #[inline]
    pub fn sub(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.add(g, self.neg(h))
    }

    #[inline]
    pub fn neg(&self, g: GroupElement) -> GroupElement {
        GroupElement::new((self.a - g.x) % self.a, (self.b - g.y) % self.b)
    }

    #[inline]
    pub fn mul(&self, k: u64, g: GroupElement) -> GroupElement {
        GroupElement::new(mul_mod(k, g.x, self.a), mul_mod(k, g.y, self.b))
    }

    /// Position of `g` in lexicographic order.
    #[inline]
    pub fn index(&self, g: GroupElement) -> usize {
        (g.x * self.b + g.y) as usize
    }

    #[inline]
    pub fn element_at(&self, i: usize) -> GroupElement {
        let i = i as u64;
        GroupElement::new(i / self.b, i % self.b)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Exponent of the group (`b`).
    pub fn exponent(&self) -> u64 {
        self.b
    }

    /// Generators `(1,0)` and `(0,1)` (only `(0,1)` when cyclic).
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        if self.a == 1 {
            vec![GroupElement::new(0, 1)]
        } else {
            vec![GroupElement::new(1, 0), GroupElement::new(0, 1)]
        }
    }
}

/// An explicit isomorphism from `Z/m ⊕ Z/n` onto its invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub m: u64,
    pub n: u64,
    pub group: GroupSpec,
    /// Images of `(1,0)` and `(0,1)`.
    pub images: [GroupElement; 2],
}

impl Presentation {
    /// Splits both cyclic factors into primary parts and, prime by prime,
    /// routes the smaller part into `Z/a` and the larger into `Z/b`.
    pub fn new(m: u64, n: u64) -> Result<Self> {
        let group = make_group(m, n)?;
        // CRT residues of the two images, accumulated prime by prime.
        let (mut e1a, mut e1b, mut e2a, mut e2b) = ((0, 1), (0, 1), (0, 1), (0, 1));
        let push = |acc: &mut (u64, u64), r: u64, q: u64| {
            *acc = (crt_pair(acc.0, acc.1, r % q, q), acc.1 * q);
        };
        for p in prime_divisors(m * n) {
            let (mp, np) = (prime_power_part(m, p), prime_power_part(n, p));
            let (ap, bp) = (mp.min(np), mp.max(np));
            if mp <= np {
                // m's part goes to the a-slot, n's part to the b-slot.
                push(&mut e1a, 1, ap);
                push(&mut e1b, 0, bp);
                push(&mut e2a, 0, ap);
                push(&mut e2b, 1, bp);
            } else {
                push(&mut e1a, 0, ap);
                push(&mut e1b, 1, bp);
                push(&mut e2a, 1, ap);
                push(&mut e2b, 0, bp);
            }
        }
        let images = [
            GroupElement::new(e1a.0 % group.a(), e1b.0 % group.b()),
            GroupElement::new(e2a.0 % group.a(), e2b.0 % group.b()),
        ];
        Ok(Presentation { m, n, group, images })
    }

    /// Maps `(x mod m, y mod n)` into the invariant-factor group.
    pub fn apply(&self, x: u64, y: u64) -> GroupElement {
        let g = &self.group;
        g.add(g.mul(x % self.m, self.images[0]), g.mul(y % self.n, self.images[1]))
    }
}

fn prime_power_part(mut n: u64, p: u64) -> u64 {
    let mut q = 1;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_group_normalizes() {
        assert_eq!(make_group(6, 6).unwrap(), GroupSpec::new(6, 6).unwrap());
        assert_eq!(make_group(4, 2).unwrap(), GroupSpec::new(2, 4).unwrap());
        assert_eq!(make_group(10, 4).unwrap(), GroupSpec::new(2, 20).unwrap());
        assert_eq!(make_group(6, 5).unwrap(), GroupSpec::new(1, 30).unwrap());
        assert!(matches!(make_group(0, 3), Err(Error::InvalidArgument(_))));
        assert!(GroupSpec::new(4, 6).is_err());
    }

    #[test]
    fn element_orders() {
        let g66 = make_group(6, 6).unwrap();
        assert_eq!(element_order(&g66, GroupElement::new(0, 0)), 1);
        assert_eq!(element_order(&g66, GroupElement::new(0, 2)), 3);
        let g = make_group(2, 26).unwrap();
        assert_eq!(element_order(&g, GroupElement::new(1, 13)), 2);
    }

    #[test]
    fn two_torsion_sizes() {
        let g = make_group(2, 4).unwrap();
        let t: Vec<_> = two_torsion(&g).into_iter().map(<[u64; 2]>::from).collect();
        assert_eq!(t, vec![[0, 0], [0, 2], [1, 0], [1, 2]]);
        assert_eq!(two_torsion(&make_group(3, 3).unwrap()), vec![GroupElement::ZERO]);
        assert_eq!(two_torsion(&make_group(6, 6).unwrap()).len(), 4);
    }

    #[test]
    fn presentation_swaps_family_coordinates() {
        // Z/8 + Z/2 -> Z/2 + Z/8 is the coordinate swap.
        let p = Presentation::new(8, 2).unwrap();
        assert_eq!(p.group, GroupSpec::new(2, 8).unwrap());
        assert_eq!(p.apply(3, 1), GroupElement::new(1, 3));
    }

    #[test]
    fn serde_shapes() {
        let g = GroupSpec::new(2, 4).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,4]");
        assert!(serde_json::from_str::<GroupSpec>("[4,6]").is_err());
        let e: GroupElement = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(e, GroupElement::new(1, 3));
    }
}
