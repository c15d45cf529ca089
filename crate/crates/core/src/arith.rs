//! Small number-theory helpers on `u64` residues.

use num_integer::Integer;

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// `k * x mod m` without overflow for residues below 2^31.
#[inline]
pub(crate) fn mul_mod(k: u64, x: u64, m: u64) -> u64 {
    ((k % m) * (x % m)) % m
}

/// Inverse of `x` modulo `m`, if it exists.
pub(crate) fn inv_mod(x: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (x as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The residues in `[0, n)` coprime to `n`, ascending. For `n = 1` this is `[0]`.
pub(crate) fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

/// Solves `t ≡ r1 (mod m1)`, `t ≡ r2 (mod m2)` for coprime moduli; returns the
/// least nonnegative solution modulo `m1 * m2`.
pub(crate) fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    debug_assert_eq!(gcd(m1, m2), 1);
    let m = (m1 as i128) * (m2 as i128);
    let e = (m1 as i128).extended_gcd(&(m2 as i128));
    // e.x * m1 + e.y * m2 = 1
    let t = (r1 as i128) * e.y * (m2 as i128) + (r2 as i128) * e.x * (m1 as i128);
    t.rem_euclid(m) as u64
}

/// Extended gcd on signed integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}
