//! Face posets and skeleton-bounded enumeration of barycentric flags.

use super::{SimplexTable, SimplicialComplex, Vertex};
use crate::par;

/// The face poset of a complex with the full proper-coface relation.
///
/// Elements are numbered globally: dimension first, then the lexicographic order of
/// the complex's tables. This numbering is the vertex order of the subdivision, so
/// every flag is an increasing sequence of element ids.
#[derive(Debug)]
pub struct FacePoset<'a> {
    complex: &'a SimplicialComplex,
    offsets: Vec<usize>,
    coface_start: Vec<usize>,
    cofaces: Vec<u32>,
}

impl<'a> FacePoset<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        let dims = (complex.dimension() + 1).max(0) as usize;
        let mut offsets = Vec::with_capacity(dims + 1);
        let mut acc = 0usize;
        for k in 0..dims {
            offsets.push(acc);
            acc += complex.count(k);
        }
        offsets.push(acc);
        let total = acc;

        // (face, coface) pairs, generated per coface in parallel.
        let faces_of: Vec<Vec<u32>> = par::map_range(total, |g| {
            let k = offsets.partition_point(|&o| o <= g) - 1;
            let s = complex.simplices(k).get(g - offsets[k]);
            let m = s.len();
            let mut out = Vec::new();
            let mut buf = Vec::with_capacity(m);
            for mask in 1u32..((1u32 << m) - 1) {
                buf.clear();
                for (i, &v) in s.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        buf.push(v);
                    }
                }
                let fk = buf.len() - 1;
                let fi = complex
                    .simplices(fk)
                    .position(&buf)
                    .expect("complex is closed");
                out.push((offsets[fk] + fi) as u32);
            }
            out
        });
        let mut counts = vec![0usize; total + 1];
        for fs in &faces_of {
            for &f in fs {
                counts[f as usize + 1] += 1;
            }
        }
        for i in 0..total {
            counts[i + 1] += counts[i];
        }
        let coface_start = counts.clone();
        let mut fill = counts;
        let mut cofaces = vec![0u32; coface_start[total]];
        for (g, fs) in faces_of.iter().enumerate() {
            for &f in fs {
                cofaces[fill[f as usize]] = g as u32;
                fill[f as usize] += 1;
            }
        }
        FacePoset {
            complex,
            offsets,
            coface_start,
            cofaces,
        }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim_of(&self, g: usize) -> usize {
        self.offsets.partition_point(|&o| o <= g) - 1
    }

    pub fn element(&self, g: usize) -> &'a [Vertex] {
        let k = self.dim_of(g);
        self.complex.simplices(k).get(g - self.offsets[k])
    }

    pub fn id_of(&self, simplex: &[Vertex]) -> Option<usize> {
        let i = self.complex.index_of(simplex)?;
        Some(self.offsets[simplex.len() - 1] + i)
    }

    /// Proper cofaces of `g`, ascending.
    pub fn cofaces(&self, g: usize) -> &[u32] {
        &self.cofaces[self.coface_start[g]..self.coface_start[g + 1]]
    }

    /// Flags of length at most `k + 1` whose members all pass `allowed`.
    ///
    /// Enumeration runs per root element; outputs are concatenated in root order, so
    /// each dimension's table comes out sorted without a global sort.
    pub fn flag_skeleton(&self, allowed: impl Fn(usize) -> bool + Sync, k: usize) -> FlagSkeleton {
        let total = self.len();
        let allow: Vec<bool> = par::map_range(total, &allowed);
        let mut renumber = vec![u32::MAX; total];
        let mut elements = Vec::new();
        for g in 0..total {
            if allow[g] {
                renumber[g] = elements.len() as u32;
                elements.push(g as u32);
            }
        }
        let per_root: Vec<(Vec<Vec<u32>>, bool)> = par::map_slice(&elements, |&root| {
            let mut out: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
            let mut path = vec![root];
            let mut truncated = false;
            self.extend_flags(&allow, &renumber, k, &mut path, &mut out, &mut truncated);
            (out, truncated)
        });
        let mut tables_data: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
        let mut complete = true;
        for (out, truncated) in per_root {
            complete &= !truncated;
            for (len, data) in out.into_iter().enumerate() {
                tables_data[len].extend_from_slice(&data);
            }
        }
        let tables = tables_data
            .into_iter()
            .enumerate()
            .map(|(p, data)| SimplexTable::from_sorted(p + 1, data))
            .collect();
        FlagSkeleton {
            elements,
            tables,
            bound: k,
            complete,
            poset_labels: self.labels_for(),
        }
    }

    fn labels_for(&self) -> Vec<String> {
        (0..self.len())
            .map(|g| self.complex.simplex_label(self.element(g)))
            .collect()
    }

    fn extend_flags(
        &self,
        allow: &[bool],
        renumber: &[u32],
        k: usize,
        path: &mut Vec<u32>,
        out: &mut [Vec<u32>],
        truncated: &mut bool,
    ) {
        let depth = path.len() - 1;
        out[depth].extend(path.iter().map(|&g| renumber[g as usize]));
        let last = *path.last().unwrap() as usize;
        for &c in self.cofaces(last) {
            if !allow[c as usize] {
                continue;
            }
            if depth == k {
                *truncated = true;
                return;
            }
            path.push(c);
            self.extend_flags(allow, renumber, k, path, out, truncated);
            path.pop();
        }
    }
}

/// A flag `τ_0 ⊊ τ_1 ⊊ ⋯ ⊊ τ_p`, as global face-poset ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagSimplex(pub Vec<u32>);

/// The flags of a filtered face poset, up to a dimension bound.
#[derive(Clone, Debug)]
pub struct FlagSkeleton {
    /// Poset id of each vertex of the subdivision, ascending.
    pub elements: Vec<u32>,
    /// `tables[p]`: flags with `p + 1` members, over renumbered vertices.
    pub tables: Vec<SimplexTable>,
    pub bound: usize,
    /// No longer flag passes the filter.
    pub complete: bool,
    poset_labels: Vec<String>,
}

impl FlagSkeleton {
    pub fn count(&self, p: usize) -> usize {
        self.tables.get(p).map_or(0, |t| t.len())
    }

    /// Flags in dimension-then-lexicographic order, as poset ids.
    pub fn iter(&self) -> impl Iterator<Item = FlagSimplex> + '_ {
        self.tables.iter().flat_map(move |t| {
            t.iter()
                .map(move |f| FlagSimplex(f.iter().map(|&v| self.elements[v as usize]).collect()))
        })
    }

    pub fn into_complex(self, name: &str) -> SimplicialComplex {
        let labels = self
            .elements
            .iter()
            .map(|&g| self.poset_labels[g as usize].clone())
            .collect();
        SimplicialComplex::from_tables(name, labels, self.tables)
    }
}
