//! Finite abstract simplicial complexes over an ordered vertex set.

mod flags;
mod implicit;
mod io;
mod sub;
mod table;

use std::collections::HashSet;

pub use flags::{FacePoset, FlagSimplex, FlagSkeleton};
pub use implicit::{ImplicitComplex, SimplexMembership};
pub use io::ComplexFile;
pub use sub::Subcomplex;
pub use table::SimplexTable;

use crate::error::{Error, Result, Violation};

/// Index of a vertex in the ambient vertex order.
pub type Vertex = u32;

/// An unvalidated family of simplices, as read from user input.
#[derive(Clone, Debug, Default)]
pub struct RawComplex {
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<Vertex>>,
}

impl RawComplex {
    /// Confirms canonical storage and downward closure, naming the first offender.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let nv = self.vertices.len() as Vertex;
        let mut seen: HashSet<&[Vertex]> = HashSet::with_capacity(self.simplices.len());
        for s in &self.simplices {
            if s.is_empty() {
                return Err(Violation::EmptySimplex);
            }
            if let Some(&v) = s.iter().find(|&&v| v >= nv) {
                return Err(Violation::UnknownVertex {
                    simplex: s.clone(),
                    vertex: v,
                });
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Violation::NotCanonical { simplex: s.clone() });
            }
            if !seen.insert(s.as_slice()) {
                return Err(Violation::Duplicate { simplex: s.clone() });
            }
        }
        for s in &self.simplices {
            if s.len() < 2 {
                continue;
            }
            for skip in 0..s.len() {
                let face: Vec<Vertex> = drop_index(s, skip);
                if !seen.contains(face.as_slice()) {
                    return Err(Violation::MissingFace {
                        simplex: s.clone(),
                        face,
                    });
                }
            }
        }
        Ok(())
    }

    /// Validates and converts into a [`SimplicialComplex`]. Every listed vertex becomes
    /// a 0-simplex even when the family does not mention it.
    pub fn into_complex(self, name: &str) -> Result<SimplicialComplex> {
        self.validate().map_err(Error::Invalid)?;
        let dim = self.simplices.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); dim.max(1)];
        buckets[0].extend(0..self.vertices.len() as Vertex);
        for s in &self.simplices {
            if s.len() > 1 {
                buckets[s.len() - 1].extend_from_slice(s);
            }
        }
        let skeleta = buckets
            .into_iter()
            .enumerate()
            .map(|(k, data)| SimplexTable::from_unsorted(k + 1, data))
            .collect();
        Ok(SimplicialComplex::from_tables(name, self.vertices, skeleta))
    }
}

pub(crate) fn drop_index(s: &[Vertex], skip: usize) -> Vec<Vertex> {
    s.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &v)| v)
        .collect()
}

/// A finite abstract simplicial complex with an ordered vertex set.
///
/// Simplices are stored per dimension in [`SimplexTable`]s. Every vertex in the label
/// list is a 0-simplex, and all tables are downward closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    name: String,
    labels: Vec<String>,
    skeleta: Vec<SimplexTable>,
}

impl SimplicialComplex {
    pub fn empty(name: &str) -> Self {
        SimplicialComplex {
            name: name.to_string(),
            labels: Vec::new(),
            skeleta: Vec::new(),
        }
    }

    /// Builds the closure of `facets`. Facet vertices may be given in any order.
    pub fn from_facets<I>(name: &str, labels: Vec<String>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let nv = labels.len() as Vertex;
        let mut buckets: Vec<Vec<Vertex>> = vec![(0..nv).collect()];
        for mut f in facets {
            f.sort_unstable();
            if f.is_empty() {
                return Err(Error::Invalid(Violation::EmptySimplex));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= nv) {
                return Err(Error::Invalid(Violation::UnknownVertex {
                    simplex: f,
                    vertex: v,
                }));
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid(Violation::NotCanonical { simplex: f }));
            }
            if f.len() > 30 {
                return Err(Error::Parameter(format!(
                    "facet with {} vertices is too large",
                    f.len()
                )));
            }
            while buckets.len() < f.len() {
                buckets.push(Vec::new());
            }
            let m = f.len();
            for mask in 1u32..(1u32 << m) {
                let k = mask.count_ones() as usize;
                if k == 1 {
                    continue;
                }
                let b = &mut buckets[k - 1];
                for (i, &v) in f.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        b.push(v);
                    }
                }
            }
        }
        if nv == 0 {
            return Ok(SimplicialComplex::empty(name));
        }
        let skeleta = buckets
            .into_iter()
            .enumerate()
            .map(|(k, data)| SimplexTable::from_unsorted(k + 1, data))
            .collect();
        Ok(SimplicialComplex::from_tables(name, labels, skeleta))
    }

    /// Assembles a complex from per-dimension tables that are already closed.
    pub(crate) fn from_tables(
        name: &str,
        labels: Vec<String>,
        mut skeleta: Vec<SimplexTable>,
    ) -> Self {
        while skeleta.last().is_some_and(|t| t.is_empty()) {
            skeleta.pop();
        }
        SimplicialComplex {
            name: name.to_string(),
            labels,
            skeleta,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Dimension, with −1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.skeleta.len() as isize - 1
    }

    pub fn simplices(&self, k: usize) -> &SimplexTable {
        static EMPTY: SimplexTable = SimplexTable::empty_const();
        self.skeleta.get(k).unwrap_or(&EMPTY)
    }

    pub fn count(&self, k: usize) -> usize {
        self.skeleta.get(k).map_or(0, |t| t.len())
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.skeleta.iter().map(|t| t.len()).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.skeleta.iter().map(|t| t.len()).sum()
    }

    pub fn index_of(&self, simplex: &[Vertex]) -> Option<usize> {
        if simplex.is_empty() {
            return None;
        }
        self.skeleta.get(simplex.len() - 1)?.position(simplex)
    }

    pub fn contains(&self, simplex: &[Vertex]) -> bool {
        self.index_of(simplex).is_some()
    }

    /// All simplices, by dimension and then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        self.skeleta.iter().flat_map(|t| t.iter())
    }

    pub fn simplex_label(&self, simplex: &[Vertex]) -> String {
        let parts: Vec<&str> = simplex
            .iter()
            .map(|&v| self.labels[v as usize].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Vertex)
    }

    /// Checks the structural invariants: canonical sorted tables, vertices present,
    /// downward closure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let nv = self.labels.len() as Vertex;
        if let Some(t) = self.skeleta.first() {
            if t.len() != nv as usize || t.iter().enumerate().any(|(i, s)| s[0] != i as Vertex) {
                return Err(Violation::MissingFace {
                    simplex: vec![],
                    face: vec![],
                });
            }
        } else if nv > 0 {
            return Err(Violation::MissingFace {
                simplex: vec![],
                face: vec![0],
            });
        }
        for (k, t) in self.skeleta.iter().enumerate() {
            for (i, s) in t.iter().enumerate() {
                if s.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Violation::NotCanonical {
                        simplex: s.to_vec(),
                    });
                }
                if let Some(&v) = s.iter().find(|&&v| v >= nv) {
                    return Err(Violation::UnknownVertex {
                        simplex: s.to_vec(),
                        vertex: v,
                    });
                }
                if i > 0 && t.get(i - 1) >= s {
                    return Err(Violation::Duplicate {
                        simplex: s.to_vec(),
                    });
                }
                if k > 0 {
                    for skip in 0..s.len() {
                        let face = drop_index(s, skip);
                        if !self.skeleta[k - 1].contains(&face) {
                            return Err(Violation::MissingFace {
                                simplex: s.to_vec(),
                                face,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.skeleta
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

    /// All simplices of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let skeleta = self.skeleta.iter().take(k + 1).cloned().collect();
        SimplicialComplex::from_tables(
            &format!("{}^({k})", self.name),
            self.labels.clone(),
            skeleta,
        )
    }

    /// Maximal simplices, in dimension-then-lexicographic order.
    pub fn facets(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        for k in 0..self.skeleta.len() {
            let mut covered = vec![false; self.skeleta[k].len()];
            if let Some(up) = self.skeleta.get(k + 1) {
                for s in up.iter() {
                    for skip in 0..s.len() {
                        if let Some(i) = self.skeleta[k].position(&drop_index(s, skip)) {
                            covered[i] = true;
                        }
                    }
                }
            }
            for (i, s) in self.skeleta[k].iter().enumerate() {
                if !covered[i] {
                    out.push(s.to_vec());
                }
            }
        }
        out
    }

    /// The complex induced on a vertex subset, relabeled to consecutive indices in
    /// the ambient order. Returns the complex and the old index of each new vertex.
    pub(crate) fn restrict_with(
        &self,
        name: &str,
        keep_vertex: &[bool],
        keep_simplex: impl Fn(usize, usize, &[Vertex]) -> bool,
    ) -> (SimplicialComplex, Vec<Vertex>) {
        let mut new_index = vec![Vertex::MAX; self.labels.len()];
        let mut old = Vec::new();
        for (v, &keep) in keep_vertex.iter().enumerate() {
            if keep {
                new_index[v] = old.len() as Vertex;
                old.push(v as Vertex);
            }
        }
        let labels = old
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect();
        let skeleta = self
            .skeleta
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let mut data = Vec::new();
                for (i, s) in t.iter().enumerate() {
                    if s.iter().all(|&v| keep_vertex[v as usize]) && keep_simplex(k, i, s) {
                        data.extend(s.iter().map(|&v| new_index[v as usize]));
                    }
                }
                SimplexTable::from_sorted(k + 1, data)
            })
            .collect();
        (SimplicialComplex::from_tables(name, labels, skeleta), old)
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, on the vertices it uses.
    pub fn link(&self, sigma: &[Vertex]) -> Result<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        if !self.contains(&sigma) {
            return Err(Error::SimplexNotFound(sigma));
        }
        let mut keep_vertex = vec![false; self.labels.len()];
        let mut members: HashSet<Vec<Vertex>> = HashSet::new();
        for t in self.skeleta.iter().skip(sigma.len()) {
            for s in t.iter() {
                if is_subset(&sigma, s) {
                    let rest: Vec<Vertex> = s
                        .iter()
                        .copied()
                        .filter(|v| sigma.binary_search(v).is_err())
                        .collect();
                    for &v in &rest {
                        keep_vertex[v as usize] = true;
                    }
                    members.insert(rest);
                }
            }
        }
        let name = format!("lk({})", self.simplex_label(&sigma));
        let (lk, _) =
            self.restrict_with(&name, &keep_vertex, |k, _, s| k == 0 || members.contains(s));
        Ok(lk)
    }

    /// The join; vertex labels of the two factors must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mine: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        if let Some(l) = other.labels.iter().find(|l| mine.contains(l.as_str())) {
            return Err(Error::LabelClash(l.clone()));
        }
        let shift = self.labels.len() as Vertex;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let d1 = self.skeleta.len();
        let d2 = other.skeleta.len();
        let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); d1 + d2];
        for (k, t) in self.skeleta.iter().enumerate() {
            buckets[k].extend_from_slice(t.raw());
        }
        for (k, t) in other.skeleta.iter().enumerate() {
            buckets[k].extend(t.raw().iter().map(|&v| v + shift));
        }
        for (i, a) in self.skeleta.iter().enumerate() {
            for (j, b) in other.skeleta.iter().enumerate() {
                let out = &mut buckets[i + j + 1];
                for s in a.iter() {
                    for t in b.iter() {
                        out.extend_from_slice(s);
                        out.extend(t.iter().map(|&v| v + shift));
                    }
                }
            }
        }
        let skeleta = buckets
            .into_iter()
            .enumerate()
            .map(|(k, data)| SimplexTable::from_unsorted(k + 1, data))
            .collect();
        Ok(SimplicialComplex::from_tables(
            &format!("{}*{}", self.name, other.name),
            labels,
            skeleta,
        ))
    }

    /// Connected components of the 1-skeleton, each as a subcomplex, ordered by
    /// their smallest vertex.
    pub fn connected_components(&self) -> Vec<Subcomplex<'_>> {
        let roots = self.component_roots();
        let mut order: Vec<Vertex> = Vec::new();
        let mut slot = vec![usize::MAX; self.labels.len()];
        for v in 0..self.labels.len() {
            let r = roots[v] as usize;
            if slot[r] == usize::MAX {
                slot[r] = order.len();
                order.push(r as Vertex);
            }
        }
        order
            .iter()
            .map(|&r| Subcomplex::from_predicate(self, |s| roots[s[0] as usize] == r))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let roots = self.component_roots();
        (0..roots.len()).filter(|&v| roots[v] as usize == v).count()
    }

    /// Representative (smallest vertex) of each vertex's component.
    pub(crate) fn component_roots(&self) -> Vec<Vertex> {
        let n = self.labels.len();
        let mut parent: Vec<Vertex> = (0..n as Vertex).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x as usize] != x {
                let g = p[p[x as usize] as usize];
                p[x as usize] = g;
                x = g;
            }
            x
        }
        for e in self.simplices(1).iter() {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
        (0..n as Vertex).map(|v| find(&mut parent, v)).collect()
    }

    /// First barycentric subdivision. Vertices are the simplices of `self` in
    /// dimension-then-lexicographic order; simplices are flags.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let poset = FacePoset::new(self);
        let top = self.dimension().max(0) as usize;
        poset
            .flag_skeleton(|_| true, top)
            .into_complex(&format!("Sd({})", self.name))
    }
}

pub(crate) fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut j = 0;
    for &v in small {
        while j < big.len() && big[j] < v {
            j += 1;
        }
        if j == big.len() || big[j] != v {
            return false;
        }
        j += 1;
    }
    true
}
