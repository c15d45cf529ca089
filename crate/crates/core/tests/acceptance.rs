//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use common::*;
use nonsep_core::nonsep::{search_group_with, SymmetryGroup};
use nonsep_core::*;

fn hset(g: &GroupSpec, reps: &[(u64, u64)]) -> HSet {
    let reps: Vec<_> = reps.iter().map(|&(x, y)| el(x, y)).collect();
    HSet::new(g, &reps).unwrap()
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("{what} took {:?}, limit {limit:?}", t.elapsed()))
}

fn criterion_1() -> Check {
    let t = Instant::now();
    let fixtures = nonsep_core::fixtures::examples().map_err(|e| e.to_string())?;
    for f in &fixtures {
        let v = is_nonseparating(&f.group, &f.hset().unwrap()).unwrap();
        ensure(v.nonseparating && f.expect, || format!("{} reported separating", f.label()))?;
    }
    within(t, Duration::from_secs(5), "example suite")?;
    Ok(format!("{} named sets nonseparating in {:?}", fixtures.len(), t.elapsed()))
}

fn contexts(g: &GroupSpec) -> Vec<Context> {
    let mut out = Vec::new();
    for b in cyclic_subgroups_with_cyclic_quotient(g).unwrap() {
        for gen in quotient_generators(g, &b).unwrap() {
            out.push(Context::new(g, b.clone(), gen).unwrap());
        }
    }
    out
}

fn criterion_2() -> Check {
    let z3 = make_group(3, 3).unwrap();
    let full = hset(&z3, &[(0, 1), (1, 0), (1, 1), (1, 2)]);
    let ctx3 = contexts(&z3);
    for ctx in &ctx3 {
        let c = coset_numbers(&z3, ctx, &full).unwrap().values();
        ensure(c == [0, 1, 1, 1], || format!("Z/3+Z/3 at {ctx}: {c:?}"))?;
    }

    let z4 = make_group(4, 4).unwrap();
    let h1 = hset(&z4, &[(1, 0), (0, 1), (1, 2), (2, 1)]);
    let special: HashSet<Subgroup> =
        [(1, 1), (1, 3)].iter().map(|&(x, y)| Subgroup::cyclic(&z4, el(x, y)).unwrap()).collect();
    let ctx4 = contexts(&z4);
    let mut special_seen = 0;
    for ctx in &ctx4 {
        let c = coset_numbers(&z4, ctx, &h1).unwrap().values();
        if special.contains(ctx.subgroup()) {
            special_seen += 1;
            ensure(c == [1, 1, 1, 1], || format!("H1 at {ctx}: {c:?}"))?;
        } else {
            ensure(c[0] == 0 && c[1] == 1 && c[2] == 1, || format!("H1 at {ctx}: {c:?}"))?;
        }
    }
    ensure(special_seen == 4, || format!("expected 4 contexts over <(1,1)>, <(1,3)>, saw {special_seen}"))?;

    // Z/8 + Z/2 family, k = 3, in (2,8) coordinates.
    let z8 = make_group(2, 8).unwrap();
    let fam = hset(&z8, &[(0, 1), (0, 2), (1, 2), (0, 3)]);
    let order_two: HashSet<Subgroup> =
        [(1, 0), (1, 4)].iter().map(|&(x, y)| Subgroup::cyclic(&z8, el(x, y)).unwrap()).collect();
    let mut seen = HashSet::new();
    for ctx in contexts(&z8).iter().filter(|c| c.subgroup().order() == 2) {
        seen.insert(ctx.subgroup().clone());
        let c = coset_numbers(&z8, ctx, &fam).unwrap().values();
        ensure(c[1] == 2 && c[2] == 2, || format!("family k=3 at {ctx}: {c:?}"))?;
    }
    ensure(seen == order_two, || format!("order-2 subgroups with cyclic quotient: {seen:?}"))?;
    Ok(format!("{} + {} contexts checked, both order-2 subgroups of Z/8+Z/2 give c2=c3=2", ctx3.len(), ctx4.len()))
}

fn criterion_3() -> Check {
    let t = Instant::now();
    let z4 = make_group(4, 4).unwrap();
    let orbits = classify_nonseparating(&z4).unwrap();
    let sym = SymmetryGroup::new(&z4).unwrap();
    let named: Vec<HSet> = [
        hset(&z4, &[(1, 0), (0, 1), (1, 2), (2, 1)]),
        hset(&z4, &[(1, 0), (0, 1), (1, 1), (1, 3)]),
        hset(&z4, &[(0, 0), (1, 0), (2, 0), (1, 2)]),
    ]
    .iter()
    .map(|h| sym.canonical_form(h))
    .collect();
    ensure(orbits.len() == 3, || format!("{} orbits", orbits.len()))?;
    let reps: HashSet<HSet> = orbits.iter().map(|o| o.rep).collect();
    let named_set: HashSet<HSet> = named.iter().copied().collect();
    ensure(named_set.len() == 3, || "canonical forms of H1, H2, H3 coincide".into())?;
    ensure(reps == named_set, || format!("orbit representatives {reps:?}"))?;
    within(t, Duration::from_secs(30), "classification")?;
    let sizes: Vec<u64> = orbits.iter().map(|o| o.size).collect();
    Ok(format!("3 distinct orbits (sizes {sizes:?}) matching H1, H2, H3 in {:?}", t.elapsed()))
}

fn criterion_4() -> Check {
    let cases: [((u64, u64), u64); 6] =
        [((2, 4), 10), ((2, 26), 10), ((2, 30), 10), ((10, 10), 600), ((2, 50), 600), ((14, 14), 1800)];
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for ((a, b), secs) in cases {
        let g = make_group(a, b).unwrap();
        let t = Instant::now();
        let r = search_group_with(&g, &SearchOptions { jobs: None, symmetry_reduced: true }).unwrap();
        let dt = t.elapsed();
        lines.push(format!("({a},{b}): {} found, {} scanned, {dt:?}", r.found.len(), r.hsets_scanned));
        if !r.found.is_empty() {
            let reps: Vec<String> = r.orbits.iter().map(|o| format!("{} x{}", o.rep, o.size)).collect();
            failures.push(format!("({a},{b}) has nonseparating sets: {}", reps.join("; ")));
        }
        if dt > Duration::from_secs(secs) {
            failures.push(format!("({a},{b}) took {dt:?}"));
        }
    }
    if failures.is_empty() {
        Ok(lines.join("; "))
    } else {
        Err(format!("{} [{}]", failures.join("; "), lines.join("; ")))
    }
}

fn criterion_5() -> Check {
    let mut parts = Vec::new();
    for d in [4u64, 9] {
        let r = degree_report(d).unwrap();
        ensure(r.possible, || format!("degree {d} reported impossible"))?;
        let w = r.witness.as_ref().ok_or_else(|| format!("degree {d}: no witness"))?;
        // Re-verify the witness from scratch.
        let q = lattice_quotient(&w.lattice).unwrap();
        ensure(q.group == w.group && q.group.order() == 4 * d, || format!("degree {d}: lattice group {}", q.group))?;
        let v = constant_pullback_from_lattice(&w.lattice, &w.points).unwrap();
        ensure(v.constant && v.hset == w.hset, || format!("degree {d}: witness does not verify"))?;
        let oracle = NaiveOracle::new(&w.group);
        ensure(oracle.nonseparating(&reps_of(&w.hset)), || format!("degree {d}: oracle disagrees"))?;
        parts.push(format!("degree {d}: {} in {}", w.hset, w.group));
    }
    Ok(parts.join("; "))
}

fn criterion_6() -> Check {
    let feasible: Vec<u64> = (2..=50).filter(|&d| rh_branched_cover_feasible(d, 3)).collect();
    ensure(feasible == [2, 4], || format!("feasible degrees {feasible:?}"))?;
    let obstructed: Vec<u64> = (2..=50).filter(|&d| mcmullen_parity_obstruction(d)).collect();
    let odd: Vec<u64> = (2..=50).filter(|d| d % 2 == 1).collect();
    ensure(obstructed == odd, || format!("obstructed degrees {obstructed:?}"))?;
    Ok("feasible exactly at {2, 4}; obstruction exactly on odd degrees".into())
}

fn criterion_7() -> Check {
    let t = Instant::now();
    let results = [
        ("symmetry invariance |A|<=100", symmetry_invariance(100)),
        ("subgroup transfer |A|<=144", subgroup_transfer(144, 150)),
        ("naive oracle |A|<=64", oracle_equivalence(64)),
        ("appendix", appendix_postconditions(200, 60, 256)),
        ("lattice quotients |det|<=60", lattice_checks(60)),
        ("find_avoiding_cyclic", avoiding_random(1000)),
    ];
    let mut parts = Vec::new();
    for (name, r) in results {
        parts.push(format!("{name}: {}", r.map_err(|e| format!("{name}: {e}"))?));
    }
    within(t, Duration::from_secs(600), "property suites")?;
    Ok(format!("{} in {:?}", parts.join("; "), t.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 named examples", criterion_1),
        ("2 coset numbers", criterion_2),
        ("3 classification of Z/4+Z/4", criterion_3),
        ("4 nonexistence searches", criterion_4),
        ("5 existence in degrees 4 and 9", criterion_5),
        ("6 branched cover table", criterion_6),
        ("7 property suites", criterion_7),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
