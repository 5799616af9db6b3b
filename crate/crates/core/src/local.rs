//! Chambers, shared faces and the local homotopical dimension of a complex.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{is_subset, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::invariants::{homological_connectivity, SkeletonView, ACYCLIC};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CellStatus {
    Cell,
    NotCell,
    Unknown,
}

/// A face that is the intersection of the two or more chambers containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharedFace {
    pub face: Vec<Vertex>,
    /// Indices into [`ChamberDecomposition::chambers`].
    pub chambers: Vec<usize>,
    /// Whether the union of those chambers is a ball or half-ball.
    pub status: CellStatus,
}

impl SharedFace {
    /// Not certified as a cell; undecided faces count as essential.
    pub fn is_essential(&self) -> bool {
        self.status != CellStatus::Cell
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberDecomposition {
    pub chambers: Vec<Vec<Vertex>>,
    pub shared_faces: Vec<SharedFace>,
}

impl ChamberDecomposition {
    pub fn is_decided(&self) -> bool {
        self.shared_faces
            .iter()
            .all(|f| f.status != CellStatus::Unknown)
    }

    /// The largest `r` with every chamber of dimension at least `r + 2` and every
    /// essential shared face of dimension at least `r + 1`.
    pub fn combinatorial_dimension(&self) -> i64 {
        let from_chambers = self.chambers.iter().map(|c| c.len() as i64 - 3);
        let from_faces = self
            .shared_faces
            .iter()
            .filter(|f| f.is_essential())
            .map(|f| f.face.len() as i64 - 2);
        from_chambers.chain(from_faces).min().unwrap_or(ACYCLIC)
    }
}

pub fn chambers(x: &SimplicialComplex) -> ChamberDecomposition {
    let chambers = x.facets();
    let rows: Vec<&[Vertex]> = x.iter().collect();
    let found: Vec<Option<SharedFace>> = par::map_slice(&rows, |s| {
        let around: Vec<usize> = (0..chambers.len())
            .filter(|&c| is_subset(s, &chambers[c]))
            .collect();
        if around.len() < 2 {
            return None;
        }
        let meet = around[1..]
            .iter()
            .fold(chambers[around[0]].clone(), |acc, &c| {
                acc.into_iter()
                    .filter(|v| chambers[c].contains(v))
                    .collect()
            });
        if meet.as_slice() != *s {
            return None;
        }
        let union = SimplicialComplex::from_facets(
            "U",
            x.labels().to_vec(),
            around.iter().map(|&c| chambers[c].clone()),
        )
        .expect("chambers are simplices of x");
        Some(SharedFace {
            face: s.to_vec(),
            status: cell_status(&union),
            chambers: around,
        })
    });
    ChamberDecomposition {
        chambers,
        shared_faces: found.into_iter().flatten().collect(),
    }
}

/// Decides whether a union of simplices is a PL ball in the situations handled:
/// dimension at most 2 outright, and 3 when it is a manifold that collapses.
pub fn cell_status(u: &SimplicialComplex) -> CellStatus {
    let (u, _) = used_part(u);
    if u.is_empty() {
        return CellStatus::NotCell;
    }
    let facets = u.facets();
    let dim = u.dimension() as usize;
    if facets.iter().any(|f| f.len() != dim + 1) || u.component_count() != 1 {
        return CellStatus::NotCell;
    }
    match dim {
        0 => CellStatus::Cell,
        1 => {
            let mut degree = vec![0usize; u.vertex_count()];
            for e in u.simplices(1).iter() {
                degree[e[0] as usize] += 1;
                degree[e[1] as usize] += 1;
            }
            if degree.iter().all(|&d| d <= 2) && u.euler_characteristic() == 1 {
                CellStatus::Cell
            } else {
                CellStatus::NotCell
            }
        }
        2 => match surface_kind(&u) {
            Some(Surface {
                boundary: true,
                euler: 1,
            }) => CellStatus::Cell,
            _ => CellStatus::NotCell,
        },
        3 => {
            if !is_three_manifold(&u) {
                CellStatus::NotCell
            } else if u.euler_characteristic() == 1 && collapses_to_point(&u) {
                CellStatus::Cell
            } else {
                CellStatus::Unknown
            }
        }
        _ => CellStatus::Unknown,
    }
}

/// Drops vertices not used by any higher simplex when the complex has positive dimension.
fn used_part(u: &SimplicialComplex) -> (SimplicialComplex, Vec<Vertex>) {
    let mut keep = vec![u.dimension() <= 0; u.vertex_count()];
    for k in 1..=u.dimension().max(0) as usize {
        for s in u.simplices(k).iter() {
            for &v in s {
                keep[v as usize] = true;
            }
        }
    }
    let facets: Vec<Vec<Vertex>> = u
        .facets()
        .into_iter()
        .filter(|f| f.iter().all(|&v| keep[v as usize]))
        .collect();
    let kept: Vec<Vertex> = (0..u.vertex_count() as Vertex)
        .filter(|&v| keep[v as usize])
        .collect();
    let index: HashMap<Vertex, Vertex> = kept
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as Vertex))
        .collect();
    let labels = kept
        .iter()
        .map(|&v| u.labels()[v as usize].clone())
        .collect();
    let facets = facets
        .into_iter()
        .map(|f| f.iter().map(|v| index[v]).collect());
    (
        SimplicialComplex::from_facets(u.name(), labels, facets)
            .expect("subset of a valid complex"),
        kept,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Surface {
    boundary: bool,
    euler: i64,
}

/// A connected pure 2-complex that is a surface, possibly with boundary.
fn surface_kind(u: &SimplicialComplex) -> Option<Surface> {
    let mut boundary = false;
    for e in u.simplices(1).iter() {
        match u.link(e).ok()?.vertex_count() {
            1 => boundary = true,
            2 => {}
            _ => return None,
        }
    }
    for v in 0..u.vertex_count() as Vertex {
        let lk = u.link(&[v]).ok()?;
        if lk.component_count() != 1 || lk.dimension() != 1 {
            return None;
        }
    }
    Some(Surface {
        boundary,
        euler: u.euler_characteristic(),
    })
}

/// Every vertex link a 2-disk or 2-sphere, every edge link an arc or circle, every
/// triangle in at most two tetrahedra.
fn is_three_manifold(u: &SimplicialComplex) -> bool {
    for t in u.simplices(2).iter() {
        if u.link(t).map_or(true, |l| l.vertex_count() > 2) {
            return false;
        }
    }
    for v in 0..u.vertex_count() as Vertex {
        let Ok(lk) = u.link(&[v]) else { return false };
        let (lk, _) = used_part(&lk);
        if lk.dimension() != 2
            || lk.component_count() != 1
            || lk.facets().iter().any(|f| f.len() != 3)
        {
            return false;
        }
        match surface_kind(&lk) {
            Some(Surface {
                boundary: true,
                euler: 1,
            })
            | Some(Surface {
                boundary: false,
                euler: 2,
            }) => {}
            _ => return false,
        }
    }
    true
}

/// Greedy elementary collapses; `true` when a single vertex remains.
pub fn collapses_to_point(u: &SimplicialComplex) -> bool {
    let mut alive: Vec<Vec<Vertex>> = u.iter().map(<[Vertex]>::to_vec).collect();
    loop {
        if alive.len() == 1 {
            return true;
        }
        let free = alive.iter().enumerate().find_map(|(i, s)| {
            let mut above = alive
                .iter()
                .enumerate()
                .filter(|(_, t)| t.len() > s.len() && is_subset(s, t));
            let first = above.next()?;
            (above.next().is_none() && first.1.len() == s.len() + 1).then_some((i, first.0))
        });
        let Some((a, b)) = free else { return false };
        let (hi, lo) = if a > b { (a, b) } else { (b, a) };
        alive.swap_remove(hi);
        alive.swap_remove(lo);
    }
}

/// The boundary of a simplex as a complex on its own vertices (empty for a vertex).
fn simplex_boundary(x: &SimplicialComplex, sigma: &[Vertex]) -> SimplicialComplex {
    let labels: Vec<String> = sigma
        .iter()
        .map(|&v| x.labels()[v as usize].clone())
        .collect();
    if sigma.len() == 1 {
        return SimplicialComplex::empty("S-1");
    }
    let m = sigma.len() as Vertex;
    let facets = (0..m).map(|skip| (0..m).filter(|&v| v != skip).collect::<Vec<_>>());
    SimplicialComplex::from_facets("dsigma", labels, facets).expect("faces of a simplex")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDimension {
    pub r: i64,
    /// A simplex whose punctured neighborhood attains `r`.
    pub witness: Vec<Vertex>,
    /// Simplices whose punctured neighborhood has positive homological connectivity
    /// without a simple-connectivity certificate.
    pub proxy: Vec<Vec<Vertex>>,
    pub chambers: ChamberDecomposition,
}

impl LocalDimension {
    /// The chamber criterion value, when every shared face was decided.
    pub fn combinatorial(&self) -> Option<i64> {
        self.chambers
            .is_decided()
            .then(|| self.chambers.combinatorial_dimension())
    }

    pub fn agrees(&self) -> Option<bool> {
        self.combinatorial().map(|c| c == self.r)
    }
}

/// Smallest homological connectivity of `∂σ ∗ lk(σ)` over all simplices `σ`;
/// this join is a model of a small punctured neighborhood of an interior point of `σ`.
pub fn local_homotopical_dimension(x: &SimplicialComplex) -> Result<LocalDimension> {
    if x.is_empty() {
        return Err(Error::Parameter("complex is empty".into()));
    }
    if x.component_count() != 1 {
        return Err(Error::Disconnected);
    }
    let rows: Vec<&[Vertex]> = x.iter().collect();
    let levels: Vec<Result<(i64, bool)>> = par::map_slice(&rows, |s| {
        let model = simplex_boundary(x, s).join(&x.link(s)?)?;
        let c = homological_connectivity(SkeletonView::full(&model))?;
        Ok((c.level, c.is_proxy()))
    });
    let mut r = ACYCLIC;
    let mut witness = Vec::new();
    let mut proxy = Vec::new();
    for (s, lv) in rows.iter().zip(levels) {
        let (level, is_proxy) = lv?;
        if level < r {
            r = level;
            witness = s.to_vec();
        }
        if is_proxy {
            proxy.push(s.to_vec());
        }
    }
    Ok(LocalDimension {
        r,
        witness,
        proxy,
        chambers: chambers(x),
    })
}

/// `rd + 2d − 2`; needs `r ≥ 0`.
pub fn depth_bound(r: i64, d: usize) -> Result<i64> {
    if r < 0 {
        return Err(Error::Hypothesis(format!(
            "local homotopical dimension {r} is negative"
        )));
    }
    if d == 0 {
        return Err(Error::Parameter("d must be at least 1".into()));
    }
    Ok(r * d as i64 + 2 * d as i64 - 2)
}
