//! Quotients of symmetric-group-invariant models by coordinate permutation.
//!
//! Two constructions are offered. [`braid_model`] subdivides the retract once more
//! and takes orbits of vertex sets, which gives an honest simplicial complex.
//! [`braid_cells`] keeps the retract as is and takes orbits of its simplices as the
//! cells of a Δ-complex; it is far smaller and has the same homology.

use serde::Serialize;

use crate::action::VertexPermutationAction;
use crate::complex::{FacePoset, SimplexTable, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::invariants::{CellComplex, SkeletonView};
use crate::par;
use crate::retract::{delta_model, RetractModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityCertificate {
    pub generators: usize,
    pub simplices_checked: usize,
    /// Number of simplex orbits in each dimension.
    pub orbit_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Regularity {
    Certified(RegularityCertificate),
    Counterexample {
        simplex: Vec<Vertex>,
        reason: String,
    },
}

impl Regularity {
    pub fn is_certified(&self) -> bool {
        matches!(self, Regularity::Certified(_))
    }
}

fn image_sorted(g: &[Vertex], s: &[Vertex], buf: &mut Vec<Vertex>) {
    buf.clear();
    buf.extend(s.iter().map(|&v| g[v as usize]));
    buf.sort_unstable();
}

/// Checks that orbits of vertex sets form a simplicial complex realizing `|L|/G`:
/// a simplex sent to itself by a generator is fixed vertex by vertex, distinct
/// vertices of a simplex lie in distinct orbits, and the orbit map is injective on
/// simplex orbits.
pub fn check_regularity(l: &SimplicialComplex, action: &VertexPermutationAction) -> Regularity {
    let reps = action.vertex_orbit_reps();
    let mut checked = 0;
    let mut orbit_counts = Vec::new();
    for k in 0..=l.dimension().max(-1) as usize {
        let table = l.simplices(k);
        let rows: Vec<&[Vertex]> = table.iter().collect();
        let verdicts: Vec<(Option<&'static str>, bool)> = par::map_slice(&rows, |s| {
            let mut buf = Vec::with_capacity(s.len());
            for g in action.generators() {
                image_sorted(g, s, &mut buf);
                if buf.as_slice() == *s && s.iter().any(|&v| g[v as usize] != v) {
                    return (Some("is mapped to itself with a vertex moved"), false);
                }
            }
            let mut r: Vec<Vertex> = s.iter().map(|&v| reps[v as usize]).collect();
            r.sort_unstable();
            if r.windows(2).any(|w| w[0] == w[1]) {
                return (Some("has two vertices in one orbit"), false);
            }
            (None, action.canonical(s).as_slice() == *s)
        });
        if let Some(i) = verdicts.iter().position(|v| v.0.is_some()) {
            return Regularity::Counterexample {
                simplex: rows[i].to_vec(),
                reason: verdicts[i].0.unwrap().into(),
            };
        }
        checked += rows.len();
        let orbits = verdicts.iter().filter(|v| v.1).count();
        let mut images: Vec<u32> = Vec::with_capacity(rows.len() * (k + 1));
        for s in &rows {
            let mut r: Vec<Vertex> = s.iter().map(|&v| reps[v as usize]).collect();
            r.sort_unstable();
            images.extend(r);
        }
        let distinct = par::sort_dedup_records(k + 1, images).len() / (k + 1);
        if distinct != orbits {
            // two simplex orbits share a vertex-orbit set; find one for the witness
            let s = rows
                .iter()
                .find(|s| {
                    let c = action.canonical(s);
                    rows.iter().any(|t| {
                        let mut a: Vec<Vertex> = s.iter().map(|&v| reps[v as usize]).collect();
                        let mut b: Vec<Vertex> = t.iter().map(|&v| reps[v as usize]).collect();
                        a.sort_unstable();
                        b.sort_unstable();
                        a == b && action.canonical(t) != c
                    })
                })
                .map_or_else(Vec::new, |s| s.to_vec());
            return Regularity::Counterexample {
                simplex: s,
                reason: "shares its vertex orbits with a simplex from another orbit".into(),
            };
        }
        orbit_counts.push(orbits);
    }
    Regularity::Certified(RegularityCertificate {
        generators: action.generators().len(),
        simplices_checked: checked,
        orbit_counts,
    })
}

/// `L/G` as a simplicial complex on orbit representatives.
#[derive(Clone, Debug)]
pub struct OrbitComplex {
    pub quotient: SimplicialComplex,
    /// For each quotient vertex, the smallest vertex of `L` in its orbit.
    pub representatives: Vec<Vertex>,
    pub base_f_vector: Vec<usize>,
    pub certificate: RegularityCertificate,
    pub skeleton_bound: Option<usize>,
}

impl OrbitComplex {
    pub fn build(
        l: &SimplicialComplex,
        action: &VertexPermutationAction,
        skeleton_bound: Option<usize>,
        name: &str,
    ) -> Result<Self> {
        let certificate = match check_regularity(l, action) {
            Regularity::Certified(c) => c,
            Regularity::Counterexample { simplex, reason } => {
                return Err(Error::Irregular {
                    witness: simplex,
                    reason,
                })
            }
        };
        let reps = action.vertex_orbit_reps();
        let mut representatives: Vec<Vertex> = reps.clone();
        representatives.sort_unstable();
        representatives.dedup();
        let mut index = vec![Vertex::MAX; l.vertex_count()];
        for (i, &r) in representatives.iter().enumerate() {
            index[r as usize] = i as Vertex;
        }
        let tables: Vec<SimplexTable> = (0..=l.dimension().max(-1) as usize)
            .map(|k| {
                let mut data = Vec::with_capacity(l.count(k) * (k + 1));
                let mut buf = Vec::with_capacity(k + 1);
                for s in l.simplices(k).iter() {
                    buf.clear();
                    buf.extend(s.iter().map(|&v| index[reps[v as usize] as usize]));
                    buf.sort_unstable();
                    data.extend_from_slice(&buf);
                }
                SimplexTable::from_unsorted(k + 1, data)
            })
            .collect();
        let labels = representatives
            .iter()
            .map(|&r| l.labels()[r as usize].clone())
            .collect();
        let quotient = SimplicialComplex::from_tables(name, labels, tables);
        Ok(OrbitComplex {
            quotient,
            representatives,
            base_f_vector: l.f_vector(),
            certificate,
            skeleton_bound,
        })
    }

    pub fn view(&self) -> SkeletonView<'_> {
        SkeletonView {
            complex: &self.quotient,
            bound: self.skeleton_bound,
        }
    }
}

/// `Σ (−1)^k` times the number of `k`-simplex orbits.
pub fn orbit_euler(q: &OrbitComplex) -> Result<i64> {
    if q.skeleton_bound.is_some() {
        return Err(Error::SkeletonBounded);
    }
    Ok(q.certificate
        .orbit_counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum())
}

/// Quotient of `Sd W^d(X, n)` by `S_n`, with `W` enumerated up to `max_dim`.
pub fn braid_model(
    x: &SimplicialComplex,
    n: usize,
    d: usize,
    max_dim: usize,
) -> Result<OrbitComplex> {
    let w = delta_model(x, n, d, max_dim)?;
    braid_model_of(&w)
}

pub fn braid_model_of(w: &RetractModel) -> Result<OrbitComplex> {
    let action = w.symmetric_action()?;
    let poset = FacePoset::new(&w.w);
    let lifted = action.induced_on_faces(&poset)?;
    let top = w.w.dimension().max(0) as usize;
    let l = poset
        .flag_skeleton(|_| true, top)
        .into_complex(&format!("Sd {}", w.w.name()));
    let name = format!("B{}({},{})", w.params.d, w.params.base, w.params.n);
    OrbitComplex::build(&l, &lifted, w.skeleton_bound, &name)
}

/// Orbits of simplices of an invariant complex on which the group preserves the
/// vertex order, as a Δ-complex. Cells are the lexicographically smallest members
/// of their orbits.
#[derive(Clone, Debug)]
pub struct OrbitCellComplex {
    elements: Vec<Vec<Vertex>>,
    cells: Vec<SimplexTable>,
    skeleton_bound: Option<usize>,
}

impl OrbitCellComplex {
    pub fn build(
        k: &SimplicialComplex,
        action: &VertexPermutationAction,
        skeleton_bound: Option<usize>,
    ) -> Result<Self> {
        for g in action.generators() {
            if let Some(e) = k
                .simplices(1)
                .iter()
                .find(|e| g[e[0] as usize] > g[e[1] as usize])
            {
                return Err(Error::Irregular {
                    witness: e.to_vec(),
                    reason: "has its vertex order reversed".into(),
                });
            }
        }
        let elements = action.elements();
        let mut out = OrbitCellComplex {
            elements,
            cells: Vec::new(),
            skeleton_bound,
        };
        for d in 0..=k.dimension().max(-1) as usize {
            let rows: Vec<&[Vertex]> = k.simplices(d).iter().collect();
            let keep = par::map_slice(&rows, |s| out.canonical(s).as_slice() == *s);
            let mut data = Vec::new();
            for (s, keep) in rows.iter().zip(keep) {
                if keep {
                    data.extend_from_slice(s);
                }
            }
            out.cells.push(SimplexTable::from_unsorted(d + 1, data));
        }
        Ok(out)
    }

    fn canonical(&self, s: &[Vertex]) -> Vec<Vertex> {
        let mut best = s.to_vec();
        let mut buf = Vec::with_capacity(s.len());
        for g in &self.elements[1..] {
            image_sorted(g, s, &mut buf);
            if buf < best {
                best.clone_from(&buf);
            }
        }
        best
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn cells(&self, k: usize) -> Option<&SimplexTable> {
        self.cells.get(k)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, t)| {
                if k % 2 == 0 {
                    t.len() as i64
                } else {
                    -(t.len() as i64)
                }
            })
            .sum()
    }
}

impl CellComplex for OrbitCellComplex {
    fn cell_count(&self, k: usize) -> usize {
        self.cells.get(k).map_or(0, SimplexTable::len)
    }

    fn top_dimension(&self) -> Option<usize> {
        self.cells.iter().rposition(|t| !t.is_empty())
    }

    fn skeleton_bound(&self) -> Option<usize> {
        self.skeleton_bound
    }

    fn boundary(&self, k: usize, i: usize) -> Vec<(u32, i64)> {
        let s = self.cells[k].get(i);
        let faces = &self.cells[k - 1];
        let mut col: Vec<(u32, i64)> = (0..s.len())
            .map(|j| {
                let face: Vec<Vertex> = s
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != j)
                    .map(|(_, &v)| v)
                    .collect();
                let row = faces
                    .position(&self.canonical(&face))
                    .expect("faces of invariant complex");
                (row as u32, if j % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        col.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(u32, i64)> = Vec::with_capacity(col.len());
        for (r, v) in col {
            match merged.last_mut() {
                Some(last) if last.0 == r => last.1 += v,
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        merged
    }
}

/// Orbit cells of `W^d(X, n)` under `S_n`.
pub fn braid_cells(
    x: &SimplicialComplex,
    n: usize,
    d: usize,
    max_dim: usize,
) -> Result<OrbitCellComplex> {
    let w = delta_model(x, n, d, max_dim)?;
    braid_cells_of(&w)
}

pub fn braid_cells_of(w: &RetractModel) -> Result<OrbitCellComplex> {
    let action = w.symmetric_action()?;
    OrbitCellComplex::build(&w.w, &action, w.skeleton_bound)
}
