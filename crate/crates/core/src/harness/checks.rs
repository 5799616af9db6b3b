use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::invariants::{full_homology, homology, pi1_presentation};
use crate::local::{depth_bound, local_homotopical_dimension};
use crate::quotient::braid_model;
use crate::retract::delta_model;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub pass: bool,
    /// Degrees compared, lowest first.
    pub degrees: Vec<usize>,
    pub details: Vec<String>,
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

/// `H_1` of the unordered model against `H_1(X)`; for simply connected `X`, also
/// `H_i` against `H_i(X)` for `2 ≤ i ≤ 2d − 2` as far as `skeleton` reaches.
pub fn braid_h1_check(
    x: &SimplicialComplex,
    n: usize,
    d: usize,
    skeleton: usize,
) -> Result<CheckOutcome> {
    require(d >= 2, "d must be at least 2")?;
    require(n >= 2, "n must be at least 2")?;
    require(x.vertex_count() >= 2, "X needs at least two vertices")?;
    require(x.component_count() == 1, "X must be connected")?;
    let hx = full_homology(x, false)?;
    let simply_connected = hx.betti(1) == 0
        && hx.torsion(1).is_empty()
        && pi1_presentation(x, 0)?.trivial_by_elimination();
    let skeleton = skeleton.max(2);
    let top = if simply_connected {
        (2 * d - 2).min(skeleton - 1).max(1)
    } else {
        1
    };
    let q = braid_model(x, n, d, skeleton)?;
    let hb = homology(&q.view(), top, false)?;
    let mut details = Vec::new();
    for i in 1..=top {
        let (a, b) = (&hb.groups[i], hx.groups.get(i).cloned().unwrap_or_default());
        if *a != b {
            details.push(format!("H{i}: model {a}, base {b}"));
        }
    }
    Ok(CheckOutcome {
        pass: details.is_empty(),
        degrees: (1..=top).collect(),
        details,
    })
}

/// Betti numbers of `X^n` from those of `X` (coefficients of the `n`-th power of
/// the Poincaré polynomial).
pub fn kunneth_betti(betti: &[usize], n: usize) -> Vec<usize> {
    let mut acc = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0usize; acc.len() + betti.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in betti.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// Below `rd + 2d − 2` the ordered model has the homology of `X^n`: acyclic for
/// acyclic `X`, Künneth otherwise (torsion-free `X` only).
pub fn depth_check(
    x: &SimplicialComplex,
    n: usize,
    d: usize,
    skeleton: usize,
) -> Result<CheckOutcome> {
    let r = local_homotopical_dimension(x)?.r;
    let bound = depth_bound(r, d)?;
    let range = (bound as usize).min(skeleton.max(1) - 1);
    let hx = full_homology(x, true)?;
    require(
        hx.groups.iter().all(|g| g.torsion.is_empty()),
        "X must have torsion-free homology",
    )?;
    let m = delta_model(x, n, d, range + 1)?;
    let hw = homology(&m.view(), range, true)?;
    let expected: Vec<usize> = if hx.is_trivial() {
        vec![0; range + 1]
    } else {
        let unreduced = full_homology(x, false)?.betti_numbers();
        let mut k = kunneth_betti(&unreduced, n);
        k[0] -= 1;
        k.resize(range + 1, 0);
        k.truncate(range + 1);
        k
    };
    let mut details = Vec::new();
    for i in 0..=range {
        let g = &hw.groups[i];
        if g.betti != expected[i] || !g.torsion.is_empty() {
            details.push(format!(
                "reduced H{i}: model {g}, expected Z^{}",
                expected[i]
            ));
        }
    }
    Ok(CheckOutcome {
        pass: details.is_empty(),
        degrees: (0..=range).collect(),
        details,
    })
}
