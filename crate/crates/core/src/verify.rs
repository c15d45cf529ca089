//! Self-verification suites exposed through the CLI `verify` command.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::abelian::{
    basis_multiple, extend_cyclic_subgroup, generator_lift, make_group, quotient_invariants,
    GroupSpec, Subgroup,
};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::nonsep::{is_nonseparating, search_group};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Appendix,
    Theorems,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "examples" => Ok(Suite::Examples),
            "appendix" => Ok(Suite::Appendix),
            "theorems" => Ok(Suite::Theorems),
            _ => Err(Error::InvalidArgument(format!(
                "unknown suite {s:?}; expected examples, appendix or theorems"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Examples => "examples",
            Suite::Appendix => "appendix",
            Suite::Theorems => "theorems",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub item: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(item: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Outcome { item: item.into(), passed, detail: detail.into() }
    }
}

/// Groups whose exhaustive search must come back empty.
pub const THEOREM_GROUPS: [(u64, u64); 5] = [(2, 26), (2, 30), (10, 10), (2, 50), (14, 14)];

pub fn run(suite: Suite) -> Result<Vec<Outcome>> {
    match suite {
        Suite::Examples => examples(),
        Suite::Appendix => appendix(),
        Suite::Theorems => theorems(),
    }
}

fn examples() -> Result<Vec<Outcome>> {
    fixtures::examples()?
        .iter()
        .map(|f| {
            let v = is_nonseparating(&f.group, &f.hset()?)?;
            let detail = match &v.witness {
                None => "nonseparating".to_string(),
                Some(w) => format!("separated at {} with {}", w.context, w.coset_numbers),
            };
            Ok(Outcome::new(f.label(), v.nonseparating == f.expect, detail))
        })
        .collect()
}

fn appendix() -> Result<Vec<Outcome>> {
    let mut out = Vec::new();

    let mut bad = 0;
    let mut count = 0;
    for n in 1..=200u64 {
        for h in 0..n {
            count += 1;
            let g = generator_lift(n, h)?;
            let m = n / gcd(h, n);
            if gcd(g, n) != 1 || ((n / m) * g) % n != h {
                bad += 1;
            }
        }
    }
    out.push(Outcome::new("generator_lift, n <= 200", bad == 0, format!("{count} cases, {bad} failures")));

    let (mut bad, mut count) = (0, 0);
    for n in 1..=60u64 {
        let group = GroupSpec::new(n, n)?;
        for g in group.elements() {
            count += 1;
            let r = basis_multiple(n, g)?;
            let ok = group.mul(r.multiplier, r.basis) == g
                && group.elements().any(|w| {
                    let det = (r.basis.x * w.y % n + n - r.basis.y * w.x % n) % n;
                    gcd(det, n) == 1
                });
            if !ok {
                bad += 1;
            }
        }
    }
    out.push(Outcome::new("basis_multiple, n <= 60", bad == 0, format!("{count} cases, {bad} failures")));

    let (mut bad, mut count) = (0, 0);
    for group in groups_up_to(64) {
        {
            for aprime in Subgroup::whole(&group).subgroups()? {
                for bprime in aprime.cyclic_subgroups_with_cyclic_quotient()? {
                    count += 1;
                    let b = extend_cyclic_subgroup(&group, &aprime, &bprime)?;
                    let ok = b.is_cyclic()
                        && quotient_invariants(&group, &b)?.0 == 1
                        && aprime.intersection(&b)? == bprime;
                    if !ok {
                        bad += 1;
                    }
                }
            }
        }
    }
    out.push(Outcome::new(
        "extend_cyclic_subgroup, |A| <= 64",
        bad == 0,
        format!("{count} cases, {bad} failures"),
    ));
    Ok(out)
}

/// Every `Z/a ⊕ Z/b` with `a | b` and `ab <= max_order`.
pub fn groups_up_to(max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for a in (1..).take_while(|a| a * a <= max_order) {
        for b in (a..=max_order / a).step_by(a as usize) {
            out.push(GroupSpec::new(a, b).expect("a divides b"));
        }
    }
    out.sort_by_key(|g| (g.order(), g.a()));
    out
}

fn theorems() -> Result<Vec<Outcome>> {
    THEOREM_GROUPS
        .iter()
        .map(|&(a, b)| {
            let group = make_group(a, b)?;
            let r = search_group(&group)?;
            Ok(Outcome::new(
                format!("no nonseparating set in {group} (degree {})", group.order() / 4),
                r.found.is_empty(),
                format!("{} H-sets scanned, {} found", r.hsets_scanned, r.found.len()),
            ))
        })
        .collect()
}
