use crate::abelian::{cyclic_subgroups_with_cyclic_quotient, GroupElement, GroupSpec, Subgroup};
use crate::error::{Error, Result};

/// First cyclic `G` (in the order of [`cyclic_subgroups_with_cyclic_quotient`])
/// with `M / G` cyclic and `G ∩ D ⊆ {0}`.
pub fn find_avoiding_cyclic(group: &GroupSpec, avoid: &[GroupElement]) -> Result<Option<Subgroup>> {
    if let Some(d) = avoid.iter().find(|d| !group.contains(**d)) {
        return Err(Error::InvalidArgument(format!("{d} is not an element of {group}")));
    }
    let nonzero: Vec<_> = avoid.iter().copied().filter(|d| *d != GroupElement::ZERO).collect();
    Ok(cyclic_subgroups_with_cyclic_quotient(group)?
        .into_iter()
        .find(|g| nonzero.iter().all(|d| !g.contains(*d))))
}
