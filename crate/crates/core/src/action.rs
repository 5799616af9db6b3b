//! Finite groups acting on vertex sets by permutations.

use std::collections::{HashSet, VecDeque};

use crate::complex::{FacePoset, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::par;

/// A group of vertex permutations, stored through its generators.
///
/// Orbits are computed by closing under the generators, so the group itself is
/// never enumerated unless [`VertexPermutationAction::elements`] is called.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutationAction {
    vertex_count: usize,
    generators: Vec<Vec<Vertex>>,
}

impl VertexPermutationAction {
    pub fn new(vertex_count: usize, generators: Vec<Vec<Vertex>>) -> Result<Self> {
        for g in &generators {
            if g.len() != vertex_count {
                return Err(Error::Parameter("generator has the wrong degree".into()));
            }
            let mut hit = vec![false; vertex_count];
            for &v in g {
                let slot = hit.get_mut(v as usize).ok_or_else(|| {
                    Error::Parameter("generator maps outside the vertex set".into())
                })?;
                if std::mem::replace(slot, true) {
                    return Err(Error::Parameter("generator is not a bijection".into()));
                }
            }
        }
        Ok(VertexPermutationAction {
            vertex_count,
            generators,
        })
    }

    pub fn trivial(vertex_count: usize) -> Self {
        VertexPermutationAction {
            vertex_count,
            generators: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn generators(&self) -> &[Vec<Vertex>] {
        &self.generators
    }

    #[inline]
    pub fn apply(&self, g: usize, v: Vertex) -> Vertex {
        self.generators[g][v as usize]
    }

    /// Every group element as a vertex map, identity first. Only for small groups.
    pub fn elements(&self) -> Vec<Vec<Vertex>> {
        let id: Vec<Vertex> = (0..self.vertex_count as Vertex).collect();
        let mut seen: HashSet<Vec<Vertex>> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &self.generators {
                let next: Vec<Vertex> = e.iter().map(|&v| g[v as usize]).collect();
                if seen.insert(next.clone()) {
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out
    }

    /// Smallest vertex of each vertex's orbit.
    pub fn vertex_orbit_reps(&self) -> Vec<Vertex> {
        let n = self.vertex_count;
        let mut parent: Vec<Vertex> = (0..n as Vertex).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x as usize] != x {
                let g = p[p[x as usize] as usize];
                p[x as usize] = g;
                x = g;
            }
            x
        }
        for g in &self.generators {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v as Vertex), find(&mut parent, g[v]));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
        (0..n as Vertex).map(|v| find(&mut parent, v)).collect()
    }

    /// Images of an ordered tuple under the whole group, including itself.
    pub fn tuple_orbit(&self, tuple: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut out = vec![tuple.to_vec()];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let next: Vec<Vertex> = out[i].iter().map(|&v| g[v as usize]).collect();
                if !out.contains(&next) {
                    out.push(next);
                }
            }
            i += 1;
        }
        out
    }

    /// Images of a simplex (as sorted vertex sets) under the whole group.
    pub fn simplex_orbit(&self, simplex: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut out = vec![simplex.to_vec()];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let mut next: Vec<Vertex> = out[i].iter().map(|&v| g[v as usize]).collect();
                next.sort_unstable();
                if !out.contains(&next) {
                    out.push(next);
                }
            }
            i += 1;
        }
        out
    }

    /// Lexicographically smallest image of a simplex.
    pub fn canonical(&self, simplex: &[Vertex]) -> Vec<Vertex> {
        self.simplex_orbit(simplex).into_iter().min().unwrap()
    }

    /// `Ok` if every generator maps the simplex set of `k` into (hence onto) itself.
    pub fn check_simplicial(&self, k: &SimplicialComplex) -> std::result::Result<(), Vec<Vertex>> {
        for g in &self.generators {
            for s in k.iter() {
                let mut img: Vec<Vertex> = s.iter().map(|&v| g[v as usize]).collect();
                img.sort_unstable();
                if !k.contains(&img) {
                    return Err(s.to_vec());
                }
            }
        }
        Ok(())
    }

    /// The induced action on the simplices of `poset`'s complex, i.e. on the vertices
    /// of its barycentric subdivision.
    pub fn induced_on_faces(&self, poset: &FacePoset<'_>) -> Result<VertexPermutationAction> {
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let images: Vec<Option<u32>> = par::map_range(poset.len(), |e| {
                    let mut img: Vec<Vertex> =
                        poset.element(e).iter().map(|&v| g[v as usize]).collect();
                    img.sort_unstable();
                    poset.id_of(&img).map(|i| i as u32)
                });
                images
                    .into_iter()
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(|| Error::Parameter("action is not simplicial".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexPermutationAction::new(poset.len(), generators)
    }

    /// The action on an invariant vertex subset; `kept` lists old ids in new order.
    pub fn restrict(&self, kept: &[Vertex]) -> Result<VertexPermutationAction> {
        let mut new_id = vec![Vertex::MAX; self.vertex_count];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v as usize] = i as Vertex;
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                kept.iter()
                    .map(|&v| match new_id[g[v as usize] as usize] {
                        Vertex::MAX => {
                            Err(Error::Parameter("vertex subset is not invariant".into()))
                        }
                        w => Ok(w),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        VertexPermutationAction::new(kept.len(), generators)
    }
}
