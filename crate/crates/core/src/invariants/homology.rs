use std::fmt;

use serde::{Deserialize, Serialize};

use super::chain::{check_boundary_squared, CellComplex};
use super::snf::{factors_to_u64, smith_from_columns, SmithForm};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::par;

/// One homology group: `ℤ^betti ⊕ ⨁ ℤ/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub reduced: bool,
    /// Indexed by degree.
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn betti(&self, k: usize) -> usize {
        self.groups.get(k).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, k: usize) -> &[u64] {
        self.groups.get(k).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }

    /// Alternating sum of Betti numbers (unreduced).
    pub fn euler_characteristic(&self) -> i64 {
        let shift = if self.reduced { 1 } else { 0 };
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                if k % 2 == 0 {
                    g.betti as i64
                } else {
                    -(g.betti as i64)
                }
            })
            .sum::<i64>()
            + shift
    }

    pub fn table(&self) -> String {
        let mut out = String::from("dim | betti | torsion\n");
        for (k, g) in self.groups.iter().enumerate() {
            let tors: Vec<String> = g.torsion.iter().map(u64::to_string).collect();
            out.push_str(&format!("{k:>3} | {:>5} | {}\n", g.betti, tors.join(",")));
        }
        out
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = if self.reduced { "H~" } else { "H" };
        let parts: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(k, g)| format!("{h}{k}={g}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// A complex that may be only a skeleton of something larger.
#[derive(Clone, Copy, Debug)]
pub struct SkeletonView<'a> {
    pub complex: &'a SimplicialComplex,
    pub bound: Option<usize>,
}

impl<'a> SkeletonView<'a> {
    pub fn full(complex: &'a SimplicialComplex) -> Self {
        SkeletonView {
            complex,
            bound: None,
        }
    }
}

impl CellComplex for SkeletonView<'_> {
    fn cell_count(&self, k: usize) -> usize {
        self.complex.count(k)
    }
    fn top_dimension(&self) -> Option<usize> {
        self.complex.top_dimension()
    }
    fn skeleton_bound(&self) -> Option<usize> {
        self.bound
    }
    fn boundary(&self, k: usize, i: usize) -> Vec<(u32, i64)> {
        self.complex.boundary(k, i)
    }
}

/// Integral homology in degrees `0..=up_to`, from the `(up_to + 1)`-skeleton.
pub fn homology<C: CellComplex + ?Sized>(
    c: &C,
    up_to: usize,
    reduced: bool,
) -> Result<HomologyResult> {
    if let Some(b) = c.skeleton_bound() {
        if up_to + 1 > b {
            return Err(Error::InsufficientSkeleton {
                requested: up_to,
                needed: up_to + 1,
                available: b,
            });
        }
    }
    for k in 1..=up_to {
        check_boundary_squared(c, k)?;
    }
    // smith[k] describes ∂_k for k in 1..=up_to+1
    let forms: Vec<SmithForm> = par::map_range(up_to + 1, |j| {
        let k = j + 1;
        if c.cell_count(k) == 0 || c.cell_count(k - 1) == 0 {
            SmithForm {
                rank: 0,
                nontrivial: Vec::new(),
            }
        } else {
            smith_from_columns(c.cell_count(k - 1), c.cell_count(k), |i| c.boundary(k, i))
        }
    });
    let rank = |k: usize| if k == 0 { 0 } else { forms[k - 1].rank };
    let mut groups = Vec::with_capacity(up_to + 1);
    for k in 0..=up_to {
        let cells = c.cell_count(k);
        let mut betti = cells - rank(k) - rank(k + 1);
        if k == 0 && reduced && cells > 0 {
            betti -= 1;
        }
        let torsion = factors_to_u64(&forms[k].nontrivial).ok_or(Error::FactorOverflow)?;
        groups.push(HomologyGroup { betti, torsion });
    }
    Ok(HomologyResult { reduced, groups })
}

/// Homology of a fully materialized complex in every degree up to its dimension.
pub fn full_homology(k: &SimplicialComplex, reduced: bool) -> Result<HomologyResult> {
    let top = k.dimension().max(0) as usize;
    homology(k, top, reduced)
}
