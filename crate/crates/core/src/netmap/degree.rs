use serde::Serialize;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::nonsep::{search_group_with, HSet, SearchOptions, SearchReport};

use super::lattice::{constant_pullback_from_lattice, lattice_quotient, Sublattice};

/// `Z/2s₁ ⊕ Z/2s₂` for every `s₁ | s₂` with `s₁ s₂ = d`, sorted by `s₁`.
pub fn groups_for_degree(d: u64) -> Result<Vec<GroupSpec>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {d}")));
    }
    (1..)
        .take_while(|s1| s1 * s1 <= d)
        .filter(|s1| d % s1 == 0 && (d / s1) % s1 == 0)
        .map(|s1| GroupSpec::new(2 * s1, 2 * (d / s1)))
        .collect()
}

/// A lattice realizing a nonseparating set, with the points that project to it.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeWitness {
    pub lattice: Sublattice,
    pub group: GroupSpec,
    pub hset: HSet,
    pub points: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degree: u64,
    pub per_group: Vec<SearchReport>,
    pub possible: bool,
    pub witness: Option<DegreeWitness>,
    /// Set when a group-level witness need not yield a map with exactly four
    /// postcritical points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

pub fn degree_report(d: u64) -> Result<DegreeReport> {
    degree_report_with(d, &SearchOptions::default())
}

pub fn degree_report_with(d: u64, opts: &SearchOptions) -> Result<DegreeReport> {
    let per_group = groups_for_degree(d)?
        .iter()
        .map(|g| search_group_with(g, opts))
        .collect::<Result<Vec<_>>>()?;
    let witness = match per_group.iter().find(|r| !r.found.is_empty()) {
        None => None,
        Some(r) => Some(witness_for(&r.group, &r.found[0])?),
    };
    let caveat = (witness.is_some() && (d == 2 || d == 4)).then(|| {
        format!(
            "in degree {d} the Euclidean map g may have fewer than four critical values, \
             so h∘g can have fewer than four postcritical points; the verdict is group-level only"
        )
    });
    Ok(DegreeReport { degree: d, possible: witness.is_some(), per_group, witness, caveat })
}

fn witness_for(group: &GroupSpec, hset: &HSet) -> Result<DegreeWitness> {
    let lattice = Sublattice::diagonal((group.a() / 2) as i64, (group.b() / 2) as i64)?;
    let q = lattice_quotient(&lattice)?;
    if q.group != *group {
        return Err(Error::Internal(format!("diagonal lattice gives {} not {group}", q.group)));
    }
    let points: Vec<[i64; 2]> =
        hset.elements(group).into_iter().map(|g: GroupElement| q.lift(g)).collect();
    let verdict = constant_pullback_from_lattice(&lattice, &points)?;
    if !verdict.constant || verdict.hset != *hset {
        return Err(Error::Internal(format!("witness {hset} in {group} failed re-verification")));
    }
    Ok(DegreeWitness { lattice, group: *group, hset: *hset, points })
}
