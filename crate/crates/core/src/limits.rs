//! Process-wide bound on the order of groups that may be enumerated.
//!
//! The bound is read on every enumeration entry point. It is meant to be set
//! once at startup (the CLI does this from `--size-bound` or
//! `NONSEP_SIZE_BOUND`) and then only read.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_BOUND: u64 = 20_000;

/// Largest accepted bound. Element indices are `u32` and products of two
/// residues must fit in `u64`, so residues stay below 2^31.
pub const MAX_SIZE_BOUND: u64 = 1 << 31;

static SIZE_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_SIZE_BOUND);

pub fn size_bound() -> u64 {
    SIZE_BOUND.load(Ordering::Relaxed)
}

/// Sets the global size bound.
pub fn set_size_bound(bound: u64) -> Result<()> {
    if !(4..=MAX_SIZE_BOUND).contains(&bound) {
        return Err(Error::InvalidArgument(format!(
            "size bound must lie in [4, {MAX_SIZE_BOUND}], got {bound}"
        )));
    }
    // Residues are < bound, so a product of two is < 2^62.
    debug_assert!(bound.checked_mul(bound).is_some());
    SIZE_BOUND.store(bound, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn ensure_within_bound(order: u64) -> Result<()> {
    let bound = size_bound();
    if order > bound {
        Err(Error::ResourceLimit { order, bound })
    } else {
        Ok(())
    }
}
