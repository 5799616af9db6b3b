use serde::Serialize;

use super::homology::{homology, SkeletonView};
use super::pi1::pi1_presentation;
use crate::error::Result;

/// Sentinel level for a complete complex with vanishing reduced homology.
pub const ACYCLIC: i64 = i64::MAX;

/// Homological connectivity: −2 empty, −1 disconnected, otherwise the largest `c`
/// with `H̃_i = 0` for all `i ≤ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub level: i64,
    /// Only a lower bound: the skeleton ran out before a nonzero group was found.
    pub bounded: bool,
    pub pi1_trivial_certified: bool,
}

impl Connectivity {
    /// The level exceeds 0 but simple connectivity is not certified, so it is a
    /// homological statement only.
    pub fn is_proxy(&self) -> bool {
        self.level >= 1 && !self.pi1_trivial_certified
    }

    pub fn is_acyclic(&self) -> bool {
        self.level == ACYCLIC
    }
}

pub fn homological_connectivity(view: SkeletonView<'_>) -> Result<Connectivity> {
    let k = view.complex;
    if k.is_empty() {
        return Ok(Connectivity {
            level: -2,
            bounded: false,
            pi1_trivial_certified: false,
        });
    }
    if k.component_count() > 1 {
        return Ok(Connectivity {
            level: -1,
            bounded: false,
            pi1_trivial_certified: false,
        });
    }
    let dim = k.dimension() as usize;
    let (up_to, complete) = match view.bound {
        Some(b) if b <= dim => (b.saturating_sub(1), false),
        _ => (dim, true),
    };
    let certified = match view.bound {
        Some(b) if b < 2 && dim >= 2 => false,
        _ => pi1_presentation(k, 0)?.trivial_by_elimination(),
    };
    let h = homology(&view, up_to, true)?;
    let level = match h.groups.iter().position(|g| !g.is_trivial()) {
        Some(i) => i as i64 - 1,
        None if complete => ACYCLIC,
        None => up_to as i64,
    };
    Ok(Connectivity {
        level,
        bounded: !complete && level == up_to as i64,
        pi1_trivial_certified: certified,
    })
}
