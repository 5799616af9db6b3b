//! Structural checks run by the `core` suite. Each returns the list of violations.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::complex::{SimplicialComplex, Subcomplex, Vertex};
use crate::corpus;
use crate::error::{Error, Result};
use crate::invariants::{
    abelianization, check_boundary_squared, full_homology, pi1_presentation, smith_normal_form,
    CellComplex,
};
use crate::product::product_complex;
use crate::retract::{delta_model, restriction_check, RetractModel};

pub const NAMES: &[&str] = &[
    "boundary-squared",
    "euler-multiplicative",
    "smith-rank",
    "lazy-oracle",
    "h1-abelianization",
    "symmetric-invariance",
    "monotone-in-d",
    "connected-for-d-at-least-2",
    "restriction",
];

pub fn run(name: &str) -> Result<Vec<String>> {
    match name {
        "boundary-squared" => boundary_squared(),
        "euler-multiplicative" => euler_multiplicative(),
        "smith-rank" => smith_rank(),
        "lazy-oracle" => lazy_oracle(),
        "h1-abelianization" => h1_abelianization(),
        "symmetric-invariance" => symmetric_invariance(),
        "monotone-in-d" => monotone_in_d(),
        "connected-for-d-at-least-2" => connected_for_large_d(),
        "restriction" => restriction(),
        _ => Err(Error::Parameter(format!("unknown property {name:?}"))),
    }
}

/// Small `(X, n, d)` instances whose models are fully enumerable in well under a second.
fn small_instances() -> Vec<(SimplicialComplex, usize, usize)> {
    vec![
        (corpus::interval(), 2, 1),
        (corpus::interval(), 3, 1),
        (corpus::interval(), 3, 2),
        (corpus::circle(), 2, 1),
        (corpus::circle(), 2, 2),
        (corpus::circle(), 3, 2),
        (corpus::triangle(), 2, 1),
        (corpus::wedge_of_circles(2), 2, 1),
        (corpus::three_triangles(), 2, 1),
    ]
}

fn full_model(x: &SimplicialComplex, n: usize, d: usize) -> Result<RetractModel> {
    delta_model(x, n, d, x.dimension().max(0) as usize * n)
}

fn boundary_squared() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let mut check = |name: String, k: &SimplicialComplex| {
        for deg in 1..k.dimension().max(0) as usize {
            if check_boundary_squared(k, deg).is_err() {
                bad.push(format!("{name}: degree {deg}"));
            }
        }
    };
    for x in corpus::all() {
        check(x.name().to_string(), &x);
    }
    for (x, n, d) in small_instances() {
        let m = full_model(&x, n, d)?;
        check(m.w.name().to_string(), &m.w);
    }
    Ok(bad)
}

fn euler_multiplicative() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for x in corpus::all() {
        let top = if x.dimension() >= 3 { 2 } else { 3 };
        for n in 1..=top {
            let p = product_complex(&x, n)?;
            let (lhs, rhs) = (
                p.complex().euler_characteristic(),
                x.euler_characteristic().pow(n as u32),
            );
            if lhs != rhs {
                bad.push(format!("{}^{n}: chi {lhs} != {rhs}", x.name()));
            }
        }
    }
    Ok(bad)
}

/// Rank by fraction-free Gaussian elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..n {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].abs();
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

fn smith_rank() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let mut complexes = corpus::all();
    complexes.push(full_model(&corpus::interval(), 3, 2)?.w);
    for k in &complexes {
        for deg in 1..=k.dimension().max(0) as usize {
            let m = k.boundary_matrix(deg);
            if m.nrows() > 200 || m.ncols() > 200 {
                continue;
            }
            let snf = smith_normal_form(&m);
            if !snf.divisibility_holds() {
                bad.push(format!("{} degree {deg}: divisibility fails", k.name()));
            }
            let r = bareiss_rank(&m.to_dense());
            if r != snf.rank {
                bad.push(format!(
                    "{} degree {deg}: rank {} vs {r}",
                    k.name(),
                    snf.rank
                ));
            }
        }
    }
    Ok(bad)
}

/// The lazy flag enumeration against subdividing `X^n` in full and then deleting
/// every flag that meets a forbidden barycenter.
fn lazy_oracle() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let mut instances = small_instances();
    for x in corpus::all() {
        for n in 2..=3 {
            instances.extend((1..n).map(|d| (x.clone(), n, d)));
        }
    }
    for (x, n, d) in instances {
        let p = product_complex(&x, n)?;
        let base = p.complex();
        // the materialized subdivision has about (dim + 1)! top flags per facet
        let flags: usize = base
            .facets()
            .iter()
            .map(|f| (1..=f.len()).product::<usize>())
            .sum();
        if base.total_simplices() > 10_000 || flags > 2_000_000 {
            continue;
        }
        let m = full_model(&x, n, d)?;
        let sd = base.barycentric_subdivision();
        // vertices of sd are base simplices in dimension-then-lex order
        let carriers: Vec<&[Vertex]> = base.iter().collect();
        let allowed: Vec<bool> = carriers.iter().map(|c| !m.is_forbidden(c)).collect();
        let kept = Subcomplex::from_predicate(&sd, |s| s.iter().all(|&v| allowed[v as usize]));
        let (filtered, map) = kept.to_complex_with_map("filtered");
        let same_vertices = map.len() == m.carriers.len()
            && map
                .iter()
                .zip(&m.carriers)
                .all(|(&v, c)| carriers[v as usize] == c.as_slice());
        if !same_vertices || filtered.f_vector() != m.w.f_vector() {
            bad.push(format!("{}: vertex sets or f-vectors differ", m.w.name()));
            continue;
        }
        for k in 0..=filtered.dimension().max(0) as usize {
            if filtered.simplices(k) != m.w.simplices(k) {
                bad.push(format!("{}: {k}-simplices differ", m.w.name()));
            }
        }
    }
    Ok(bad)
}

fn h1_abelianization() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for x in corpus::all() {
        let h = full_homology(&x, false)?;
        let ab = abelianization(&pi1_presentation(&x, 0)?);
        if ab.rank != h.betti(1) || ab.torsion != h.torsion(1) {
            bad.push(format!(
                "{}: abelianization ({}, {:?}) vs H1 {}",
                x.name(),
                ab.rank,
                ab.torsion,
                h.groups[1]
            ));
        }
    }
    Ok(bad)
}

fn symmetric_invariance() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (x, n, d) in small_instances() {
        let m = full_model(&x, n, d)?;
        let action = match m.symmetric_action() {
            Ok(a) => a,
            Err(e) => {
                bad.push(format!("{}: {e}", m.w.name()));
                continue;
            }
        };
        if let Err(s) = action.check_simplicial(&m.w) {
            bad.push(format!(
                "{}: simplex {s:?} is moved off the model",
                m.w.name()
            ));
        }
    }
    Ok(bad)
}

fn carrier_simplices(m: &RetractModel) -> Vec<Vec<Vec<Vertex>>> {
    let mut out: Vec<Vec<Vec<Vertex>>> =
        m.w.iter()
            .map(|s| s.iter().map(|&v| m.carriers[v as usize].clone()).collect())
            .collect();
    out.sort();
    out
}

fn monotone_in_d() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (x, n) in [
        (corpus::interval(), 3),
        (corpus::circle(), 3),
        (corpus::triangle(), 2),
    ] {
        for d in 1..n {
            let lo = carrier_simplices(&full_model(&x, n, d)?);
            let hi = carrier_simplices(&full_model(&x, n, d + 1)?);
            if lo.iter().any(|s| hi.binary_search(s).is_err()) {
                bad.push(format!("{} n={n}: W^{d} not inside W^{}", x.name(), d + 1));
            }
        }
    }
    Ok(bad)
}

fn connected_for_large_d() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for x in corpus::all()
        .into_iter()
        .filter(|x| x.vertex_count() >= 2 && x.component_count() == 1)
    {
        let n = if x.dimension() >= 2 { 2 } else { 3 };
        let m = delta_model(&x, n, 2, 1)?;
        if m.w.component_count() != 1 {
            bad.push(format!(
                "{} n={n} d=2: {} components",
                x.name(),
                m.w.component_count()
            ));
        }
    }
    Ok(bad)
}

fn restriction() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let circle = corpus::circle();
    let square = corpus::square();
    let pairs: Vec<(&str, Subcomplex<'_>, usize, usize)> = vec![
        (
            "circle/edge",
            Subcomplex::generated_by(&circle, [vec![0, 1]]),
            2,
            1,
        ),
        (
            "circle/circle",
            Subcomplex::generated_by(&circle, [vec![0, 1], vec![1, 2], vec![0, 2]]),
            2,
            1,
        ),
        (
            "circle/vertex",
            Subcomplex::generated_by(&circle, [vec![0]]),
            2,
            1,
        ),
        (
            "square/triangle",
            Subcomplex::generated_by(&square, [vec![0, 1, 3]]),
            2,
            1,
        ),
        (
            "circle/edge n=3",
            Subcomplex::generated_by(&circle, [vec![1, 2]]),
            3,
            2,
        ),
    ];
    for (name, a, n, d) in pairs {
        if !restriction_check(&a, n, d)? {
            bad.push(format!("{name}: restriction differs"));
        }
    }
    Ok(bad)
}
