use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::GroupSpec;
use crate::error::{Error, Result};
use crate::limits::ensure_within_bound;

use super::check::NonsepChecker;
use super::hset::{pair_classes, HSet};
use super::symmetry::SymmetryGroup;

/// An orbit of nonseparating H-sets under `Aut(A) ⋉ A[2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Canonical (lexicographically least) member.
    pub rep: HSet,
    pub size: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Scan only H-sets containing a class-orbit representative.
    pub symmetry_reduced: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: None, symmetry_reduced: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub group: GroupSpec,
    /// Canonical forms of every nonseparating orbit, sorted.
    pub found: Vec<HSet>,
    pub hsets_scanned: u64,
    /// Nonseparating H-sets met during the scan (before orbit merging).
    pub raw_hits: u64,
    pub symmetry_reduced: bool,
    pub orbits: Vec<Orbit>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    /// Total number of nonseparating H-sets, summed over orbits.
    pub fn total_nonseparating(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }
}

/// Exhaustive symmetry-reduced search with default options.
pub fn search_group(group: &GroupSpec) -> Result<SearchReport> {
    search_group_with(group, &SearchOptions::default())
}

pub fn search_group_with(group: &GroupSpec, opts: &SearchOptions) -> Result<SearchReport> {
    ensure_within_bound(group.order())?;
    match opts.jobs {
        None => run(group, opts),
        Some(0) => Err(Error::InvalidArgument("jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(|| run(group, opts)),
    }
}

/// Orbit representatives and sizes of all nonseparating H-sets.
pub fn classify_nonseparating(group: &GroupSpec) -> Result<Vec<Orbit>> {
    Ok(search_group(group)?.orbits)
}

fn run(group: &GroupSpec, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    let checker = NonsepChecker::new(group)?;
    let sym = SymmetryGroup::new(group)?;
    let classes = pair_classes(group);
    let p = classes.len();
    let idx: Vec<usize> = classes.iter().map(|c| group.index(c.rep())).collect();

    let mut is_rep = vec![!opts.symmetry_reduced; p];
    if opts.symmetry_reduced {
        for r in sym.class_orbit_representatives() {
            is_rep[r] = true;
        }
    }

    let per_first: Vec<(u64, Vec<[usize; 4]>)> = (0..p.saturating_sub(3))
        .into_par_iter()
        .map(|i| {
            let mut scanned = 0u64;
            let mut hits = Vec::new();
            for j in i + 1..p {
                for k in j + 1..p {
                    for l in k + 1..p {
                        if !(is_rep[i] || is_rep[j] || is_rep[k] || is_rep[l]) {
                            continue;
                        }
                        scanned += 1;
                        if checker.is_nonseparating_indices(&[idx[i], idx[j], idx[k], idx[l]]) {
                            hits.push([i, j, k, l]);
                        }
                    }
                }
            }
            (scanned, hits)
        })
        .collect();

    let hsets_scanned = per_first.iter().map(|(s, _)| s).sum();
    let hits: Vec<HSet> = per_first
        .into_iter()
        .flat_map(|(_, h)| h)
        .map(|[i, j, k, l]| HSet::from_sorted_classes([classes[i], classes[j], classes[k], classes[l]]))
        .collect();
    let raw_hits = hits.len() as u64;

    let mut seen: HashSet<HSet> = HashSet::new();
    let mut orbits = Vec::new();
    for h in &hits {
        if seen.contains(h) {
            continue;
        }
        let orbit = sym.orbit(h);
        orbits.push(Orbit { rep: orbit[0], size: orbit.len() as u64 });
        seen.extend(orbit);
    }
    orbits.sort_by(|x, y| x.rep.cmp(&y.rep));

    Ok(SearchReport {
        group: *group,
        found: orbits.iter().map(|o| o.rep).collect(),
        hsets_scanned,
        raw_hits,
        symmetry_reduced: opts.symmetry_reduced,
        orbits,
        elapsed: start.elapsed(),
    })
}
