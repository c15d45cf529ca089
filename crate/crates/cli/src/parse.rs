//! Command-line encodings: `a,b` groups, `x,y;x,y;...` element lists and
//! four-integer matrices.

use anyhow::{bail, Context as _, Result};
use nonsep_core::{make_group, GroupElement, GroupSpec, HSet, Matrix2};

fn ints<T: std::str::FromStr>(s: &str, sep: char) -> Result<Vec<T>>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    s.split(sep)
        .map(|t| t.trim().parse::<T>().with_context(|| format!("bad integer {:?} in {s:?}", t.trim())))
        .collect()
}

pub fn group(s: &str) -> Result<GroupSpec> {
    match ints::<u64>(s, ',')?.as_slice() {
        &[m, n] => Ok(make_group(m, n)?),
        _ => bail!("group must be given as `a,b`, got {s:?}"),
    }
}

pub fn points(s: &str) -> Result<Vec<[i64; 2]>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| match ints::<i64>(p, ',')?.as_slice() {
            &[x, y] => Ok([x, y]),
            _ => bail!("point must be `x,y`, got {p:?}"),
        })
        .collect()
}

/// Four class representatives in the canonical coordinates of `group`.
pub fn hset(group: &GroupSpec, s: &str) -> Result<HSet> {
    let mut reps = Vec::new();
    for [x, y] in points(s)? {
        if x < 0 || y < 0 {
            bail!("coordinates must be nonnegative residues, got ({x},{y})");
        }
        reps.push(group.element(x as u64, y as u64)?);
    }
    Ok(HSet::new(group, &reps)?)
}

pub fn matrix(s: &str) -> Result<Matrix2> {
    match ints::<i64>(s, ',')?.as_slice() {
        &[a, b, c, d] => Ok([[a, b], [c, d]]),
        _ => bail!("matrix must be four integers `m00,m01,m10,m11` (row-major), got {s:?}"),
    }
}

pub fn element_list(h: &HSet) -> Vec<GroupElement> {
    h.reps().to_vec()
}
