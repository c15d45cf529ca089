//! Constructive subgroup results: generator lifting in cyclic groups, basis
//! multiples in `Z/n ⊕ Z/n`, and extension of a cyclic subgroup with cyclic
//! quotient from a subgroup to the whole group.

use crate::arith::{crt_pair, ext_gcd, gcd, prime_divisors};
use crate::error::{Error, Result};

use super::group::{GroupElement, GroupSpec};
use super::subgroup::Subgroup;

/// Returns a unit `g` of `Z/n` with `(n/m) g ≡ h`, where `m` is the order of `h`.
///
/// Writes `h = (n/m) r` with `gcd(r, m) = 1`, then picks `τ ≡ r (mod m)` and
/// `τ ≡ 1 (mod q)`, `q` being the product of the primes dividing `n/m` but
/// not `m`.
pub fn generator_lift(n: u64, h: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let h = h % n;
    let cofactor = gcd(h, n); // n / m
    let m = n / cofactor;
    let r = (h / cofactor) % m;
    let q: u64 = prime_divisors(cofactor).into_iter().filter(|p| m % p != 0).product();
    let tau = crt_pair(r, m, 1 % q, q);
    let g = tau % n;
    debug_assert_eq!(gcd(g, n), 1);
    debug_assert_eq!((cofactor as u128 * g as u128 % n as u128) as u64, h);
    Ok(g)
}

/// `g = multiplier · basis`, with `complement` completing `basis` to a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisMultiple {
    pub basis: GroupElement,
    pub multiplier: u64,
    pub complement: GroupElement,
}

/// Writes `g ∈ Z/n ⊕ Z/n` as a multiple of a basis element.
///
/// For `g = (x, y)` with both coordinates nonzero, `d = gcd(x, y)` and the
/// basis element is `(x/d, y/d)`; a zero coordinate selects the other unit
/// vector. The complement `w` comes from a Bézout relation and is checked to
/// generate the group together with the basis element.
pub fn basis_multiple(n: u64, g: GroupElement) -> Result<BasisMultiple> {
    let group = GroupSpec::new(n, n)?;
    if !group.contains(g) {
        return Err(Error::InvalidArgument(format!("{g} is not an element of Z/{n} + Z/{n}")));
    }
    if n == 1 {
        let zero = GroupElement::ZERO;
        return Ok(BasisMultiple { basis: zero, multiplier: 0, complement: zero });
    }
    let (basis, multiplier) = match (g.x, g.y) {
        (0, 0) => (GroupElement::new(1 % n, 0), 0),
        (0, y) => (GroupElement::new(0, 1 % n), y),
        (x, 0) => (GroupElement::new(1 % n, 0), x),
        (x, y) => {
            let d = gcd(x, y);
            (GroupElement::new(x / d, y / d), d)
        }
    };
    // s*x' + t*y' = 1 gives det [[x', -t], [y', s]] = 1.
    let (one, s, t) = ext_gcd(basis.x as i64, basis.y as i64);
    if one != 1 {
        return Err(Error::Internal(format!("{basis} is not primitive")));
    }
    let complement = group.reduce(-t, s);
    let spanned = Subgroup::generated(&group, &[basis, complement])?;
    if spanned.order() != group.order() {
        return Err(Error::Internal(format!("{basis} and {complement} do not form a basis")));
    }
    Ok(BasisMultiple { basis, multiplier, complement })
}

/// Finds a cyclic `B ≤ A` with `A / B` cyclic and `A' ∩ B = B'`.
///
/// Scans the candidates in the order of
/// [`cyclic_subgroups_with_cyclic_quotient`](super::cyclic_subgroups_with_cyclic_quotient)
/// and returns the first match.
pub fn extend_cyclic_subgroup(
    group: &GroupSpec,
    aprime: &Subgroup,
    bprime: &Subgroup,
) -> Result<Subgroup> {
    if aprime.group() != group || bprime.group() != group {
        return Err(Error::InvalidArgument("subgroups must belong to the given group".into()));
    }
    if !bprime.is_subgroup_of(aprime) {
        return Err(Error::InvalidArgument(format!("{bprime} is not contained in {aprime}")));
    }
    if !bprime.is_cyclic() {
        return Err(Error::InvalidArgument(format!("{bprime} is not cyclic")));
    }
    let (d1, _) = aprime.quotient_invariants_by(bprime)?;
    if d1 != 1 {
        return Err(Error::InvalidArgument(format!("{aprime} / {bprime} is not cyclic")));
    }
    for b in Subgroup::whole(group).cyclic_subgroups_with_cyclic_quotient()? {
        if aprime.intersection(&b)? == *bprime {
            return Ok(b);
        }
    }
    Err(Error::Internal(format!(
        "no cyclic subgroup with cyclic quotient meets {aprime} in {bprime}"
    )))
}
