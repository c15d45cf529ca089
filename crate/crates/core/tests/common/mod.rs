//! Independent reference implementations and property suites shared by the
//! integration test targets. Nothing here calls the library's decision
//! procedure; it re-derives everything from raw modular arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use nonsep_core::nonsep::{search_group_with, SubgroupPresentation, SymmetryGroup};
use nonsep_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All `(a, b)` with `a | b` and `1 <= ab <= max`.
pub fn groups(max: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in (a..=max).step_by(a as usize) {
            if a * b <= max {
                out.push(GroupSpec::new(a, b).unwrap());
            }
        }
    }
    out
}

pub fn el(x: u64, y: u64) -> GroupElement {
    GroupElement::new(x, y)
}

/// Plain `Z/a ⊕ Z/b` with tuple elements.
#[derive(Clone, Copy, Debug)]
pub struct Naive {
    pub a: u64,
    pub b: u64,
}

impl Naive {
    pub fn of(g: &GroupSpec) -> Self {
        Naive { a: g.a(), b: g.b() }
    }
    pub fn order(&self) -> u64 {
        self.a * self.b
    }
    pub fn elems(&self) -> Vec<(u64, u64)> {
        (0..self.a).flat_map(|x| (0..self.b).map(move |y| (x, y))).collect()
    }
    pub fn add(&self, p: (u64, u64), q: (u64, u64)) -> (u64, u64) {
        ((p.0 + q.0) % self.a, (p.1 + q.1) % self.b)
    }
    pub fn neg(&self, p: (u64, u64)) -> (u64, u64) {
        ((self.a - p.0) % self.a, (self.b - p.1) % self.b)
    }
    pub fn times(&self, k: u64, p: (u64, u64)) -> (u64, u64) {
        let mut acc = (0, 0);
        for _ in 0..k {
            acc = self.add(acc, p);
        }
        acc
    }
    /// Least `k >= 1` with `k p` in `set`, by repeated addition.
    pub fn order_mod(&self, p: (u64, u64), set: &HashSet<(u64, u64)>) -> u64 {
        let mut acc = p;
        let mut k = 1;
        while !set.contains(&acc) {
            acc = self.add(acc, p);
            k += 1;
        }
        k
    }
    pub fn cyclic(&self, g: (u64, u64)) -> BTreeSet<(u64, u64)> {
        let mut s = BTreeSet::new();
        let mut acc = (0, 0);
        loop {
            s.insert(acc);
            acc = self.add(acc, g);
            if acc == (0, 0) {
                return s;
            }
        }
    }
}

/// Coset-number tables of every (B, generator) pair, straight from the definition.
pub struct NaiveOracle {
    pub g: Naive,
    /// One map per distinct table: element -> c.
    tables: Vec<HashMap<(u64, u64), u64>>,
}

impl NaiveOracle {
    pub fn new(spec: &GroupSpec) -> Self {
        let g = Naive::of(spec);
        let elems = g.elems();
        let mut subgroups: BTreeSet<BTreeSet<(u64, u64)>> = BTreeSet::new();
        for &e in &elems {
            subgroups.insert(g.cyclic(e));
        }
        let mut tables = Vec::new();
        let mut seen = HashSet::new();
        for b in &subgroups {
            let bset: HashSet<_> = b.iter().copied().collect();
            let n = g.order() / b.len() as u64;
            for &gen in &elems {
                if g.order_mod(gen, &bset) != n {
                    continue;
                }
                let mut t = HashMap::new();
                for c in 0..=n / 2 {
                    let base = g.times(c, gen);
                    for &x in b {
                        t.insert(g.add(base, x), c);
                    }
                }
                let key: Vec<_> = elems.iter().map(|e| t.get(e).copied()).collect();
                if seen.insert(key) {
                    tables.push(t);
                }
            }
        }
        NaiveOracle { g, tables }
    }

    pub fn context_tables(&self) -> usize {
        self.tables.len()
    }

    pub fn nonseparating(&self, reps: &[(u64, u64)]) -> bool {
        self.tables.iter().all(|t| {
            let mut c: Vec<u64> = reps
                .iter()
                .map(|&h| *t.get(&h).or_else(|| t.get(&self.g.neg(h))).expect("class has a coset"))
                .collect();
            c.sort();
            c[1] == c[2]
        })
    }
}

pub fn tuple(e: GroupElement) -> (u64, u64) {
    (e.x, e.y)
}

pub fn reps_of(h: &HSet) -> Vec<(u64, u64)> {
    h.reps().iter().map(|&e| tuple(e)).collect()
}

// ---------------------------------------------------------------------------
// Property suites

pub fn oracle_equivalence(max: u64) -> Check {
    let mut total = 0u64;
    for g in groups(max) {
        let oracle = NaiveOracle::new(&g);
        let checker = NonsepChecker::new(&g).unwrap();
        for h in enumerate_hsets(&g).unwrap() {
            total += 1;
            let lib = checker.check(&h).nonseparating;
            ensure(lib == oracle.nonseparating(&reps_of(&h)), || format!("{g} {h}: library {lib}"))?;
        }
    }
    Ok(format!("{total} H-sets agree"))
}

pub fn symmetry_invariance(max: u64) -> Check {
    let mut checked = 0u64;
    for g in groups(max) {
        let checker = NonsepChecker::new(&g).unwrap();
        let sym = SymmetryGroup::new(&g).unwrap();
        let full = search_group_with(&g, &SearchOptions { jobs: None, symmetry_reduced: false }).unwrap();
        let nonsep: HashSet<HSet> =
            full.orbits.iter().flat_map(|o| sym.orbit(&o.rep)).collect();
        ensure(nonsep.len() as u64 == full.raw_hits, || format!("{g}: orbit union differs from hits"))?;
        // Every image of a nonseparating set is nonseparating; since the action
        // is bijective the separating sets are preserved too.
        for h in &nonsep {
            for img in sym.images(h) {
                checked += 1;
                ensure(checker.check(&img).nonseparating, || format!("{g}: image {img} of {h}"))?;
            }
        }
        // Direct spot checks on random separating sets.
        let mut rng = ChaCha8Rng::seed_from_u64(g.order() * 1009 + g.a());
        let all: Vec<HSet> = enumerate_hsets(&g).unwrap().collect();
        for _ in 0..20.min(all.len()) {
            let h = all.choose(&mut rng).unwrap();
            let phi = sym.automorphisms().choose(&mut rng).unwrap();
            let t = *sym.translations().choose(&mut rng).unwrap();
            let img = sym.image(phi, t, h);
            checked += 1;
            ensure(checker.check(&img).nonseparating == checker.check(h).nonseparating, || {
                format!("{g}: {h} vs {img}")
            })?;
        }
    }
    Ok(format!("{checked} images checked"))
}

pub fn subgroup_transfer(max: u64, per_subgroup: usize) -> Check {
    let mut checked = 0u64;
    for g in groups(max) {
        let big = NonsepChecker::new(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(g.order() * 31 + g.a());
        for sub in Subgroup::whole(&g).subgroups().unwrap() {
            let pres = SubgroupPresentation::new(&g, &sub).unwrap();
            let small_group = *pres.abstract_group();
            ensure(small_group.order() == sub.order(), || format!("{g}: presentation of {sub}"))?;
            let small = NonsepChecker::new(&small_group).unwrap();
            let mut hs: Vec<HSet> = enumerate_hsets(&small_group).unwrap().collect();
            if hs.len() > per_subgroup {
                hs.shuffle(&mut rng);
                hs.truncate(per_subgroup);
            }
            for h in hs {
                checked += 1;
                let reps: Vec<_> = h.reps().iter().map(|&p| pres.to_ambient(&g, p)).collect();
                let hb = HSet::new(&g, &reps).unwrap();
                let (x, y) = (small.check(&h).nonseparating, big.check(&hb).nonseparating);
                ensure(x == y, || format!("{g} ⊇ {sub}: {h} gives {x} inside, {y} outside"))?;
            }
        }
    }
    Ok(format!("{checked} (A, A', H) triples"))
}

pub fn appendix_postconditions(lift_max: u64, basis_max: u64, extend_max: u64) -> Check {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for n in 1..=lift_max {
        for h in 0..n {
            let g = generator_lift(n, h).unwrap();
            let m = (1..=n).find(|m| (m * h) % n == 0).unwrap();
            ensure(gcd(g, n) == 1 && ((n / m) * g) % n == h, || format!("generator_lift({n},{h}) = {g}"))?;
        }
    }
    for n in 1..=basis_max {
        let ng = Naive { a: n, b: n };
        let all = ng.elems();
        for &(x, y) in &all {
            let r = basis_multiple(n, el(x, y)).unwrap();
            let v = tuple(r.basis);
            ensure(ng.times(r.multiplier, v) == (x, y), || format!("basis_multiple({n},({x},{y}))"))?;
            // Search for a complement: the determinant must be a unit mod n.
            let has_w = all.iter().any(|&(wx, wy)| gcd((v.0 * wy + n * n - v.1 * wx) % n, n) == 1);
            ensure(has_w, || format!("({},{}) is not a basis element mod {n}", v.0, v.1))?;
        }
    }
    let mut cases = 0;
    for g in groups(extend_max) {
        let subs = Subgroup::whole(&g).subgroups().unwrap();
        for aprime in &subs {
            for bprime in subs.iter().filter(|b| b.is_subgroup_of(aprime) && b.is_cyclic()) {
                if aprime.quotient_invariants_by(bprime).unwrap().0 != 1 {
                    continue;
                }
                cases += 1;
                let b = extend_cyclic_subgroup(&g, aprime, bprime).unwrap();
                ensure(
                    b.is_cyclic()
                        && quotient_invariants(&g, &b).unwrap().0 == 1
                        && aprime.intersection(&b).unwrap() == *bprime,
                    || format!("extend({g}, {aprime}, {bprime}) = {b}"),
                )?;
            }
        }
    }
    Ok(format!("{cases} extension cases"))
}

pub fn lattice_checks(max_det: i64) -> Check {
    let mut count = 0;
    for p in 1..=max_det {
        for r in 1..=max_det / p {
            if p * r < 2 {
                continue;
            }
            for q in 0..p {
                // Columns (p, 0) and (q, r).
                let l = Sublattice::new([[p, q], [0, r]]).unwrap();
                let quo = lattice_quotient(&l).unwrap();
                let det = (p * r) as u64;
                count += 1;
                ensure(quo.group.order() == 4 * det, || format!("{l:?}: order"))?;
                ensure(quo.group.a() % 2 == 0 && quo.group.b() % 2 == 0, || format!("{l:?}: parity"))?;
                // Fundamental domain of 2Λ₁: 0 <= x < 2p, 0 <= y < 2r.
                let mut image = HashSet::new();
                for x in 0..2 * p {
                    for y in 0..2 * r {
                        image.insert(quo.project([x, y]));
                    }
                }
                ensure(image.len() as u64 == 4 * det, || format!("{l:?}: projection not bijective"))?;
                // Kernel contains the generators of 2Λ₁.
                ensure(
                    quo.project([2 * p, 0]) == GroupElement::ZERO
                        && quo.project([2 * q, 2 * r]) == GroupElement::ZERO,
                    || format!("{l:?}: kernel"),
                )?;
            }
        }
    }
    Ok(format!("{count} lattices"))
}

pub fn avoiding_random(trials: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (m, n) in [(13u64, 13u64), (1, 169)] {
        let group = make_group(m, n).unwrap();
        let elems: Vec<_> = group.elements().collect();
        for _ in 0..trials {
            let k = rng.gen_range(0..=12);
            let d: Vec<_> = elems.choose_multiple(&mut rng, k).copied().collect();
            let g = find_avoiding_cyclic(&group, &d)
                .unwrap()
                .ok_or_else(|| format!("{group}: no subgroup avoids {d:?}"))?;
            ensure(
                g.is_cyclic()
                    && quotient_invariants(&group, &g).unwrap().0 == 1
                    && d.iter().all(|x| *x == GroupElement::ZERO || !g.contains(*x)),
                || format!("{group}: {g} violates the postconditions"),
            )?;
        }
    }
    Ok(format!("{} random sets", 2 * trials))
}
