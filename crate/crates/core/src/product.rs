//! The staircase triangulation of `X^n`, its fat diagonals, and the coordinate
//! permutation action.

use crate::action::VertexPermutationAction;
use crate::complex::{ImplicitComplex, SimplicialComplex, Subcomplex, Vertex};
use crate::error::{Error, Result};

/// A simplex of `X^n` written as its rows: `q + 1` distinct points of `X^n`, each an
/// `n`-tuple of `X`-vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSimplex {
    pub rows: Vec<Vec<Vertex>>,
}

impl ProductSimplex {
    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn dimension(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn column(&self, k: usize) -> Vec<Vertex> {
        self.rows.iter().map(|r| r[k]).collect()
    }

    /// Rows pairwise distinct; every column weakly increasing and spanning a simplex
    /// of `x`.
    pub fn is_staircase(&self, x: &SimplicialComplex) -> bool {
        let distinct = self.rows.windows(2).all(|w| w[0] != w[1])
            && (0..self.rows.len())
                .all(|i| (i + 1..self.rows.len()).all(|j| self.rows[i] != self.rows[j]));
        distinct
            && (0..self.n()).all(|k| {
                let col = self.column(k);
                if col.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
                let mut span = col;
                span.dedup();
                x.contains(&span)
            })
    }

    /// Largest number of pairwise identical columns.
    pub fn max_equal_columns(&self) -> usize {
        let cols: Vec<Vec<Vertex>> = (0..self.n()).map(|k| self.column(k)).collect();
        (0..cols.len())
            .map(|i| cols.iter().filter(|c| **c == cols[i]).count())
            .max()
            .unwrap_or(0)
    }

    /// Whether the open simplex lies in the set where some `d + 1` coordinates agree.
    ///
    /// A point of the open simplex is `Σ t_j row_j` with every `t_j > 0`; its k-th
    /// coordinate puts weight `Σ_{j : v_jk = u} t_j` on the vertex `u`. Columns are
    /// weakly increasing, so their level sets are consecutive runs in the same vertex
    /// order, and two coordinates agree at one (equivalently every) interior point
    /// exactly when the two columns are equal.
    pub fn in_fat_diagonal(&self, d: usize) -> bool {
        self.max_equal_columns() > d
    }
}

/// `X^n` with its staircase structure. Vertex `(v_1, …, v_n)` has index
/// `Σ v_k m^{n−k}` (`m` = number of `X`-vertices), so index order is the
/// lexicographic order of tuples.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    factor: SimplicialComplex,
    n: usize,
    complex: SimplicialComplex,
}

impl ProductComplex {
    pub fn factor(&self) -> &SimplicialComplex {
        &self.factor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn decode(&self, v: Vertex) -> Vec<Vertex> {
        decode(self.factor.vertex_count() as u64, self.n, v)
    }

    pub fn encode(&self, tuple: &[Vertex]) -> Vertex {
        encode(self.factor.vertex_count() as u64, tuple)
    }

    pub fn product_simplex(&self, simplex: &[Vertex]) -> ProductSimplex {
        ProductSimplex {
            rows: simplex.iter().map(|&v| self.decode(v)).collect(),
        }
    }
}

fn decode(m: u64, n: usize, v: Vertex) -> Vec<Vertex> {
    let mut out = vec![0; n];
    let mut x = v as u64;
    for k in (0..n).rev() {
        out[k] = (x % m) as Vertex;
        x /= m;
    }
    out
}

fn encode(m: u64, tuple: &[Vertex]) -> Vertex {
    tuple.iter().fold(0u64, |acc, &v| acc * m + v as u64) as Vertex
}

/// Maximal staircase simplices: for each tuple of `X`-facets, every lattice path
/// through the product of their vertex lists.
pub fn product_facets(x: &SimplicialComplex, n: usize) -> Result<ImplicitComplex> {
    let m = x.vertex_count() as u64;
    let total = m.checked_pow(n as u32).filter(|&t| t < u32::MAX as u64);
    let Some(total) = total else {
        return Err(Error::Parameter(format!(
            "{m}^{n} product vertices do not fit"
        )));
    };
    let x_facets = x.facets();
    let mut facets = Vec::new();
    let mut choice = vec![0usize; n];
    if !x_facets.is_empty() {
        loop {
            let cols: Vec<&[Vertex]> = choice.iter().map(|&c| x_facets[c].as_slice()).collect();
            let mut pos = vec![0usize; n];
            let mut path = vec![encode(m, &cols.iter().map(|c| c[0]).collect::<Vec<_>>())];
            lattice_paths(m, &cols, &mut pos, &mut path, &mut facets);
            // next facet tuple
            let mut k = n;
            loop {
                if k == 0 {
                    return ImplicitComplex::new(total as usize, facets);
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < x_facets.len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }
    ImplicitComplex::new(total as usize, facets)
}

fn lattice_paths(
    m: u64,
    cols: &[&[Vertex]],
    pos: &mut [usize],
    path: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let mut advanced = false;
    for k in 0..cols.len() {
        if pos[k] + 1 < cols[k].len() {
            advanced = true;
            pos[k] += 1;
            let tuple: Vec<Vertex> = (0..cols.len()).map(|j| cols[j][pos[j]]).collect();
            path.push(encode(m, &tuple));
            lattice_paths(m, cols, pos, path, out);
            path.pop();
            pos[k] -= 1;
        }
    }
    if !advanced {
        out.push(path.clone());
    }
}

/// The staircase triangulation of `X^n`; vertex labels are `v1|v2|…|vn`.
pub fn product_complex(x: &SimplicialComplex, n: usize) -> Result<ProductComplex> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let implicit = product_facets(x, n)?;
    let m = x.vertex_count() as u64;
    let labels = (0..m.pow(n as u32))
        .map(|v| {
            decode(m, n, v as Vertex)
                .iter()
                .map(|&c| x.labels()[c as usize].as_str())
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    let name = format!("{}^{n}", x.name());
    let complex = implicit.materialize(&name, labels)?;
    Ok(ProductComplex {
        factor: x.clone(),
        n,
        complex,
    })
}

/// The simplices of `X^n` having `d + 1` identical columns.
pub fn fat_diagonal(p: &ProductComplex, d: usize) -> Result<Subcomplex<'_>> {
    if d < 1 {
        return Err(Error::Parameter("d must be at least 1".into()));
    }
    Ok(Subcomplex::from_predicate(p.complex(), |s| {
        p.product_simplex(s).in_fat_diagonal(d)
    }))
}

/// `Ok` when `a` is full in its parent, otherwise a parent simplex spanned by
/// vertices of `a` that is missing from `a`.
pub fn is_full(a: &Subcomplex<'_>) -> std::result::Result<(), Vec<Vertex>> {
    a.check_full()
}

/// `S_n` acting on `X^n` by permuting coordinates.
#[derive(Clone, Debug)]
pub struct CoordinateAction {
    pub n: usize,
    /// All `n!` coordinate permutations; `perm[k]` is where coordinate `k` goes.
    pub permutations: Vec<Vec<usize>>,
    /// Generated by the adjacent transpositions.
    pub vertex_action: VertexPermutationAction,
}

pub fn symmetric_action(p: &ProductComplex) -> Result<CoordinateAction> {
    let n = p.n();
    let nv = p.complex().vertex_count();
    let generators: Vec<Vec<Vertex>> = (0..n.saturating_sub(1))
        .map(|i| {
            (0..nv as Vertex)
                .map(|v| {
                    let mut t = p.decode(v);
                    t.swap(i, i + 1);
                    p.encode(&t)
                })
                .collect()
        })
        .collect();
    let vertex_action = VertexPermutationAction::new(nv, generators)?;
    if let Err(s) = vertex_action.check_simplicial(p.complex()) {
        return Err(Error::Irregular {
            witness: s,
            reason: "is mapped off the complex".into(),
        });
    }
    Ok(CoordinateAction {
        n,
        permutations: permutations(n),
        vertex_action,
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

impl CoordinateAction {
    /// Image of a product vertex under a coordinate permutation.
    pub fn permute_vertex(&self, p: &ProductComplex, perm: &[usize], v: Vertex) -> Vertex {
        let t = p.decode(v);
        let mut out = vec![0; t.len()];
        for (k, &c) in t.iter().enumerate() {
            out[perm[k]] = c;
        }
        p.encode(&out)
    }
}
