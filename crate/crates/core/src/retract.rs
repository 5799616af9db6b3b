//! Complements of full subcomplexes and the subdivided models of ordered
//! configuration spaces with bounded multiplicity.

use serde::Serialize;

use crate::action::VertexPermutationAction;
use crate::complex::{FacePoset, FlagSkeleton, SimplicialComplex, Subcomplex, Vertex};
use crate::error::{Error, Result};
use crate::invariants::SkeletonView;
use crate::product::{product_complex, symmetric_action, ProductComplex};

/// The largest subcomplex of `a.parent()` with no vertex in `a`.
///
/// For full `a` its realization is a deformation retract of the complement of `|a|`.
pub fn disjoint_complement<'a>(a: &Subcomplex<'a>) -> Result<Subcomplex<'a>> {
    a.check_full()
        .map_err(|witness| Error::NotFull { witness })?;
    let banned = a.vertex_mask();
    Ok(Subcomplex::from_predicate(a.parent(), |s| {
        s.iter().all(|&v| !banned[v as usize])
    }))
}

/// Flags of `poset` with at most `k + 1` members, all passing `filter`.
pub fn lazy_flag_skeleton(
    poset: &FacePoset<'_>,
    filter: impl Fn(&[Vertex]) -> bool + Sync,
    k: usize,
) -> FlagSkeleton {
    poset.flag_skeleton(|g| filter(poset.element(g)), k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelParameters {
    pub base: String,
    pub n: usize,
    pub d: usize,
    pub max_dim: usize,
}

#[derive(Clone, Debug)]
pub enum Ambient {
    Product(ProductComplex),
    Plain(SimplicialComplex),
}

impl Ambient {
    pub fn complex(&self) -> &SimplicialComplex {
        match self {
            Ambient::Product(p) => p.complex(),
            Ambient::Plain(k) => k,
        }
    }
}

/// A complex `K`, a set of forbidden simplices whose barycenters form a full
/// subcomplex `A` of `Sd K`, and the complement `W` of `A` in `Sd K`.
#[derive(Clone, Debug)]
pub struct RetractModel {
    pub params: ModelParameters,
    pub ambient: Ambient,
    /// `forbidden[k][i]`: whether the `i`-th `k`-simplex of `K` has its barycenter in `A`.
    pub forbidden: Vec<Vec<bool>>,
    /// Vertices are labeled by their carrier simplex in `K`.
    pub w: SimplicialComplex,
    /// Carrier of each vertex of `W`, as a simplex of `K`.
    pub carriers: Vec<Vec<Vertex>>,
    /// `Some(k)` when `W` was cut off at its `k`-skeleton.
    pub skeleton_bound: Option<usize>,
}

impl RetractModel {
    pub fn view(&self) -> SkeletonView<'_> {
        SkeletonView {
            complex: &self.w,
            bound: self.skeleton_bound,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.skeleton_bound.is_none()
    }

    pub fn is_forbidden(&self, simplex: &[Vertex]) -> bool {
        match self.ambient.complex().index_of(simplex) {
            Some(i) => self.forbidden[simplex.len() - 1][i],
            None => false,
        }
    }

    /// Index of the `W`-vertex carried by `simplex`.
    pub fn vertex_of(&self, simplex: &[Vertex]) -> Option<Vertex> {
        let key = (simplex.len(), simplex);
        self.carriers
            .binary_search_by(|c| (c.len(), c.as_slice()).cmp(&key))
            .ok()
            .map(|i| i as Vertex)
    }

    /// Coordinate permutations acting on `W` through carriers; product models only.
    pub fn symmetric_action(&self) -> Result<VertexPermutationAction> {
        let Ambient::Product(p) = &self.ambient else {
            return Err(Error::Parameter("model is not built on a product".into()));
        };
        let base = symmetric_action(p)?.vertex_action;
        let generators = (0..base.generators().len())
            .map(|g| {
                self.carriers
                    .iter()
                    .map(|c| {
                        let mut image: Vec<Vertex> = c.iter().map(|&v| base.apply(g, v)).collect();
                        image.sort_unstable();
                        self.vertex_of(&image).ok_or_else(|| Error::Irregular {
                            witness: c.clone(),
                            reason: "leaves the model".into(),
                        })
                    })
                    .collect::<Result<Vec<Vertex>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        VertexPermutationAction::new(self.carriers.len(), generators)
    }
}

fn forbidden_mask(
    k: &SimplicialComplex,
    pred: impl Fn(&[Vertex]) -> bool + Sync,
) -> Vec<Vec<bool>> {
    (0..=k.dimension().max(-1))
        .map(|d| {
            crate::par::map_slice(&k.simplices(d as usize).iter().collect::<Vec<_>>(), |s| {
                pred(s)
            })
        })
        .collect()
}

fn flag_model(
    params: ModelParameters,
    ambient: Ambient,
    forbidden: Vec<Vec<bool>>,
    name: &str,
) -> RetractModel {
    let k = ambient.complex();
    let poset = FacePoset::new(k);
    let offsets: Vec<usize> = (0..forbidden.len())
        .scan(0usize, |acc, d| {
            let o = *acc;
            *acc += forbidden[d].len();
            Some(o)
        })
        .collect();
    let skel = poset.flag_skeleton(
        |g| {
            let d = poset.dim_of(g);
            !forbidden[d][g - offsets[d]]
        },
        params.max_dim,
    );
    let carriers = skel
        .elements
        .iter()
        .map(|&g| poset.element(g as usize).to_vec())
        .collect();
    let skeleton_bound = (!skel.complete).then_some(params.max_dim);
    let w = skel.into_complex(name);
    RetractModel {
        params,
        ambient,
        forbidden,
        w,
        carriers,
        skeleton_bound,
    }
}

/// `W^d(X, n)`: flags of `X^n`-simplices avoiding the locus where `d + 1`
/// coordinates coincide, enumerated up to dimension `max_dim`.
pub fn delta_model(
    x: &SimplicialComplex,
    n: usize,
    d: usize,
    max_dim: usize,
) -> Result<RetractModel> {
    if n == 0 || d == 0 {
        return Err(Error::Parameter(format!(
            "need n >= 1 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    if x.is_empty() {
        return Err(Error::Parameter("base complex is empty".into()));
    }
    let p = product_complex(x, n)?;
    let forbidden = forbidden_mask(p.complex(), |s| p.product_simplex(s).in_fat_diagonal(d));
    let params = ModelParameters {
        base: x.name().to_string(),
        n,
        d,
        max_dim,
    };
    let name = format!("W{d}({},{n})", x.name());
    Ok(flag_model(params, Ambient::Product(p), forbidden, &name))
}

/// Whether some `d` cyclically consecutive indices of `0..n` are all absent from `face`.
fn has_consecutive_zeros(face: &[Vertex], n: usize, d: usize) -> bool {
    let present: Vec<bool> = (0..n).map(|i| face.contains(&(i as Vertex))).collect();
    (0..n).any(|start| (0..d).all(|j| !present[(start + j) % n]))
}

/// A model of the open `(n−1)`-simplex with the faces on which `d` cyclically
/// consecutive coordinates vanish added back in: the complement, in `Sd Δ_{n−1}`,
/// of the barycenters of faces with at least `d` consecutive zero coordinates.
pub fn simplex_interval_model(n: usize, d: usize) -> Result<RetractModel> {
    if n < 2 || d == 0 || d >= n {
        return Err(Error::Parameter(format!(
            "need n >= 2 and 1 <= d <= n-1, got n = {n}, d = {d}"
        )));
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    let simplex = SimplicialComplex::from_facets(
        &format!("D{}", n - 1),
        labels,
        [(0..n as Vertex).collect()],
    )?;
    let forbidden = forbidden_mask(&simplex, |s| has_consecutive_zeros(s, n, d));

    let sd = simplex.barycentric_subdivision();
    let poset = FacePoset::new(&simplex);
    let bad_vertex: Vec<bool> = (0..poset.len())
        .map(|g| {
            let s = poset.element(g);
            has_consecutive_zeros(s, n, d)
        })
        .collect();
    let a = Subcomplex::from_predicate(&sd, |s| s.iter().all(|&v| bad_vertex[v as usize]));
    let c = disjoint_complement(&a)?;
    let (w, kept) = c.to_complex_with_map(&format!("D{}({d})", n - 1));
    let carriers = kept
        .iter()
        .map(|&g| poset.element(g as usize).to_vec())
        .collect();
    let params = ModelParameters {
        base: simplex.name().to_string(),
        n,
        d,
        max_dim: n - 1,
    };
    Ok(RetractModel {
        params,
        ambient: Ambient::Plain(simplex),
        forbidden,
        w,
        carriers,
        skeleton_bound: None,
    })
}

/// Compares `W^d(A, n)` built on its own with the part of `W^d(X, n)` lying in
/// `Sd(A^n)`, simplex by simplex.
pub fn restriction_check(a: &Subcomplex<'_>, n: usize, d: usize) -> Result<bool> {
    let x = a.parent();
    let (a_complex, a_to_x) = a.to_complex_with_map("A");
    if a_complex.is_empty() {
        return Ok(true);
    }
    let top = x.dimension().max(0) as usize * n;
    let wx = delta_model(x, n, d, top)?;
    let wa = delta_model(&a_complex, n, d, top)?;
    let (Ambient::Product(px), Ambient::Product(pa)) = (&wx.ambient, &wa.ambient) else {
        unreachable!("delta models are built on products")
    };
    // W(A) vertices, carried over into X^n
    let lift: Option<Vec<Vertex>> = wa
        .carriers
        .iter()
        .map(|c| {
            let mut s: Vec<Vertex> = c
                .iter()
                .map(|&v| {
                    let t: Vec<Vertex> = pa.decode(v).iter().map(|&u| a_to_x[u as usize]).collect();
                    px.encode(&t)
                })
                .collect();
            s.sort_unstable();
            wx.vertex_of(&s)
        })
        .collect();
    let Some(lift) = lift else { return Ok(false) };
    let in_a: Vec<bool> = wx
        .carriers
        .iter()
        .map(|c| {
            (0..n).all(|k| {
                let mut col: Vec<Vertex> = c.iter().map(|&v| px.decode(v)[k]).collect();
                col.sort_unstable();
                col.dedup();
                a.contains(&col)
            })
        })
        .collect();
    for dim in 0..=wx.w.dimension().max(wa.w.dimension()).max(0) as usize {
        let mut from_a: Vec<Vec<Vertex>> =
            wa.w.simplices(dim)
                .iter()
                .map(|s| {
                    let mut t: Vec<Vertex> = s.iter().map(|&v| lift[v as usize]).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
        from_a.sort_unstable();
        let from_x: Vec<Vec<Vertex>> =
            wx.w.simplices(dim)
                .iter()
                .filter(|s| s.iter().all(|&v| in_a[v as usize]))
                .map(<[Vertex]>::to_vec)
                .collect();
        if from_a != from_x {
            return Ok(false);
        }
    }
    Ok(true)
}
