use super::{is_subset, SimplexTable, SimplicialComplex, Vertex};
use crate::error::{Error, Result, Violation};

/// Membership queries shared by explicit and facet-based complexes.
pub trait SimplexMembership {
    fn vertex_count(&self) -> usize;
    /// `simplex` must be strictly increasing.
    fn contains(&self, simplex: &[Vertex]) -> bool;
}

impl SimplexMembership for SimplicialComplex {
    fn vertex_count(&self) -> usize {
        SimplicialComplex::vertex_count(self)
    }

    fn contains(&self, simplex: &[Vertex]) -> bool {
        SimplicialComplex::contains(self, simplex)
    }
}

/// A complex given by its facets; faces are produced on demand.
#[derive(Clone, Debug)]
pub struct ImplicitComplex {
    vertex_count: usize,
    facets: Vec<Vec<Vertex>>,
    by_vertex: Vec<Vec<u32>>,
}

impl ImplicitComplex {
    pub fn new(vertex_count: usize, facets: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut by_vertex = vec![Vec::new(); vertex_count];
        let mut facets = facets;
        for (i, f) in facets.iter_mut().enumerate() {
            f.sort_unstable();
            if f.is_empty() {
                return Err(Error::Invalid(Violation::EmptySimplex));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid(Violation::NotCanonical {
                    simplex: f.clone(),
                }));
            }
            for &v in f.iter() {
                let slot = by_vertex.get_mut(v as usize).ok_or_else(|| {
                    Error::Invalid(Violation::UnknownVertex {
                        simplex: f.clone(),
                        vertex: v,
                    })
                })?;
                slot.push(i as u32);
            }
        }
        Ok(ImplicitComplex {
            vertex_count,
            facets,
            by_vertex,
        })
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    /// All simplices of dimension `k`, generated from the facets.
    pub fn simplices(&self, k: usize) -> SimplexTable {
        let w = k + 1;
        let mut data = Vec::new();
        let mut idx = Vec::with_capacity(w);
        for f in self.facets.iter().filter(|f| f.len() >= w) {
            combinations(f.len(), w, &mut idx, &mut |c| {
                data.extend(c.iter().map(|&i| f[i]))
            });
        }
        SimplexTable::from_unsorted(w, data)
    }

    pub fn materialize(&self, name: &str, labels: Vec<String>) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(name, labels, self.facets.iter().cloned())
    }
}

fn combinations(n: usize, k: usize, idx: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if idx.len() == k {
        emit(idx);
        return;
    }
    let start = idx.last().map_or(0, |&i| i + 1);
    for i in start..n {
        if n - i < k - idx.len() {
            break;
        }
        idx.push(i);
        combinations(n, k, idx, emit);
        idx.pop();
    }
}

impl SimplexMembership for ImplicitComplex {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn contains(&self, simplex: &[Vertex]) -> bool {
        let Some(&first) = simplex.first() else {
            return false;
        };
        let Some(cands) = self.by_vertex.get(first as usize) else {
            return false;
        };
        if simplex.len() == 1 {
            return true;
        }
        cands
            .iter()
            .any(|&f| is_subset(simplex, &self.facets[f as usize]))
    }
}
