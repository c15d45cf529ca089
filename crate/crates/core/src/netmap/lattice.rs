use std::collections::BTreeSet;

use serde::Serialize;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::nonsep::{HSet, NonsepChecker, PairClass, Witness};

use super::snf::{apply, det, inverse_unimodular, smith_normal_form, Matrix2};

/// A sublattice `Λ₁` of `Z²` whose basis vectors are the columns of `basis`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sublattice {
    basis: Matrix2,
}

impl Sublattice {
    /// Requires covolume `|det| ≥ 2`.
    pub fn new(basis: Matrix2) -> Result<Self> {
        let d = det(&basis);
        if d == 0 {
            return Err(Error::InvalidArgument(format!("basis {basis:?} is singular")));
        }
        if d.abs() < 2 {
            return Err(Error::InvalidArgument(format!(
                "basis {basis:?} has covolume 1; it must exceed one"
            )));
        }
        Ok(Sublattice { basis })
    }

    /// `[[p, 0], [0, q]]`.
    pub fn diagonal(p: i64, q: i64) -> Result<Self> {
        Sublattice::new([[p, 0], [0, q]])
    }

    pub fn basis(&self) -> &Matrix2 {
        &self.basis
    }

    /// Index of `Λ₁` in `Z²`, which is the degree of the associated map.
    pub fn covolume(&self) -> u64 {
        det(&self.basis).unsigned_abs()
    }
}

/// `Z² / 2Λ₁` together with the transform realizing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeQuotient {
    pub lattice: Sublattice,
    pub group: GroupSpec,
    /// `u · (2L) · v = diag(group.a(), group.b())`.
    pub u: Matrix2,
    pub v: Matrix2,
}

impl LatticeQuotient {
    /// `π(w) = (U w mod d1, U w mod d2)`.
    pub fn project(&self, w: [i64; 2]) -> GroupElement {
        let [x, y] = apply(&self.u, w);
        self.group.reduce(x, y)
    }

    /// A vector of `Z²` projecting to `g`.
    pub fn lift(&self, g: GroupElement) -> [i64; 2] {
        let uinv = inverse_unimodular(&self.u).expect("u is unimodular");
        apply(&uinv, [g.x as i64, g.y as i64])
    }
}

pub fn lattice_quotient(lattice: &Sublattice) -> Result<LatticeQuotient> {
    let b = lattice.basis;
    let doubled = [[2 * b[0][0], 2 * b[0][1]], [2 * b[1][0], 2 * b[1][1]]];
    let snf = smith_normal_form(&doubled)?;
    let group = GroupSpec::new(snf.d[0] as u64, snf.d[1] as u64)?;
    debug_assert_eq!(group.order(), 4 * lattice.covolume());
    Ok(LatticeQuotient { lattice: *lattice, group, u: snf.u, v: snf.v })
}

/// Outcome of the constant-pullback criterion for a lattice and point set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackVerdict {
    pub group: GroupSpec,
    pub hset: HSet,
    pub constant: bool,
    pub witness: Option<Witness>,
}

/// Projects `points` to `Z² / 2Λ₁` and decides whether the image is a
/// nonseparating set of four pair classes.
pub fn constant_pullback_from_lattice(
    lattice: &Sublattice,
    points: &[[i64; 2]],
) -> Result<PullbackVerdict> {
    if points.len() > 8 {
        return Err(Error::InvalidHSet(format!("at most 8 points allowed, got {}", points.len())));
    }
    let q = lattice_quotient(lattice)?;
    let classes: BTreeSet<PairClass> = points
        .iter()
        .map(|&w| PairClass::new(&q.group, q.project(w)))
        .collect::<Result<_>>()?;
    if classes.len() != 4 {
        return Err(Error::InvalidHSet(format!(
            "points project to {} pair classes in {}, need 4",
            classes.len(),
            q.group
        )));
    }
    let reps: Vec<_> = classes.iter().map(|c| c.rep()).collect();
    let hset = HSet::new(&q.group, &reps)?;
    let verdict = NonsepChecker::new(&q.group)?.check(&hset);
    Ok(PullbackVerdict {
        group: q.group,
        hset,
        constant: verdict.nonseparating,
        witness: verdict.witness,
    })
}
