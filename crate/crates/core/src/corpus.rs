//! Small named complexes used as inputs throughout the test suites.

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

fn build(name: &str, nv: usize, facets: &[&[Vertex]]) -> SimplicialComplex {
    let labels = (0..nv).map(|i| i.to_string()).collect();
    SimplicialComplex::from_facets(name, labels, facets.iter().map(|f| f.to_vec()))
        .expect("builtin complex is valid")
}

pub fn interval() -> SimplicialComplex {
    build("interval", 2, &[&[0, 1]])
}

pub fn point() -> SimplicialComplex {
    build("point", 1, &[&[0]])
}

/// Boundary of a triangle.
pub fn circle() -> SimplicialComplex {
    build("circle", 3, &[&[0, 1], &[1, 2], &[0, 2]])
}

/// Boundary of a `k`-gon, `k ≥ 3`.
pub fn polygon(k: usize) -> SimplicialComplex {
    let labels = (0..k).map(|i| i.to_string()).collect();
    let facets = (0..k as Vertex).map(|i| {
        let j = (i + 1) % k as Vertex;
        vec![i.min(j), i.max(j)]
    });
    SimplicialComplex::from_facets(&format!("polygon{k}"), labels, facets)
        .expect("polygon is valid")
}

/// `k` triangular loops sharing the vertex `0`.
pub fn wedge_of_circles(k: usize) -> SimplicialComplex {
    let labels = (0..1 + 2 * k).map(|i| i.to_string()).collect();
    let mut facets = Vec::new();
    for j in 0..k as Vertex {
        let (a, b) = (1 + 2 * j, 2 + 2 * j);
        facets.extend([vec![0, a], vec![a, b], vec![0, b]]);
    }
    SimplicialComplex::from_facets(&format!("wedge{k}"), labels, facets).expect("wedge is valid")
}

/// Two triangles glued along the diagonal `{0,3}`.
pub fn square() -> SimplicialComplex {
    build("square", 4, &[&[0, 1, 3], &[0, 2, 3]])
}

pub fn triangle() -> SimplicialComplex {
    build("triangle", 3, &[&[0, 1, 2]])
}

pub fn solid_tetrahedron() -> SimplicialComplex {
    build("tetrahedron", 4, &[&[0, 1, 2, 3]])
}

pub fn tetrahedron_boundary() -> SimplicialComplex {
    build(
        "sphere",
        4,
        &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
    )
}

/// Three triangles sharing the edge `{0,1}`.
pub fn three_triangles() -> SimplicialComplex {
    build("book3", 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]])
}

/// The six-vertex projective plane.
pub fn projective_plane() -> SimplicialComplex {
    build(
        "rp2",
        6,
        &[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[1, 3, 4],
            &[1, 3, 5],
            &[2, 3, 5],
            &[2, 4, 5],
        ],
    )
}

/// Cone over a path with `k` edges.
pub fn fan(k: usize) -> SimplicialComplex {
    let labels = (0..k + 2).map(|i| i.to_string()).collect();
    let facets = (1..=k as Vertex).map(|i| vec![0, i, i + 1]);
    SimplicialComplex::from_facets(&format!("fan{k}"), labels, facets).expect("fan is valid")
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "point",
    "interval",
    "circle",
    "wedge2",
    "wedge3",
    "square",
    "triangle",
    "tetrahedron",
    "sphere",
    "book3",
    "rp2",
];

pub fn by_name(name: &str) -> Result<SimplicialComplex> {
    Ok(match name {
        "point" => point(),
        "interval" => interval(),
        "circle" => circle(),
        "square" => square(),
        "triangle" => triangle(),
        "tetrahedron" => solid_tetrahedron(),
        "sphere" => tetrahedron_boundary(),
        "book3" => three_triangles(),
        "rp2" => projective_plane(),
        _ => {
            if let Some(k) = name
                .strip_prefix("wedge")
                .and_then(|k| k.parse().ok())
                .filter(|&k| (1..=4).contains(&k))
            {
                wedge_of_circles(k)
            } else if let Some(k) = name
                .strip_prefix("polygon")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 3)
            {
                polygon(k)
            } else if let Some(k) = name
                .strip_prefix("fan")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 1)
            {
                fan(k)
            } else {
                return Err(Error::Parameter(format!(
                    "unknown builtin complex {name:?}"
                )));
            }
        }
    })
}

/// Every named complex, in [`NAMES`] order.
pub fn all() -> Vec<SimplicialComplex> {
    NAMES
        .iter()
        .map(|n| by_name(n).expect("listed names resolve"))
        .collect()
}
