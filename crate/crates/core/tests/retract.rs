use confspace::complex::FacePoset;
use confspace::invariants::{full_homology, homology};
use confspace::product::product_complex;
use confspace::retract::{
    delta_model, disjoint_complement, lazy_flag_skeleton, restriction_check, simplex_interval_model,
};
use confspace::{corpus, Error, Subcomplex};

#[test]
fn complement_of_an_edge_in_a_tetrahedron() {
    let k = corpus::solid_tetrahedron();
    let a = Subcomplex::generated_by(&k, [vec![0, 1]]);
    let c = disjoint_complement(&a).unwrap();
    assert_eq!(c.to_complex("C").facets(), vec![vec![0, 1]]);
    assert!(c.contains(&[2, 3]));
    assert_eq!(c.count(0), 2);
}

#[test]
fn complement_of_nothing_is_everything() {
    let k = corpus::square();
    let c = disjoint_complement(&Subcomplex::empty(&k)).unwrap();
    assert_eq!(c.to_complex("C").f_vector(), k.f_vector());
}

#[test]
fn triangle_minus_its_corners() {
    let sd = corpus::triangle().barycentric_subdivision();
    // the first three vertices of the subdivision are the original corners
    let a = Subcomplex::from_predicate(&sd, |s| s.iter().all(|&v| v < 3));
    let c = disjoint_complement(&a).unwrap().to_complex("C");
    assert_eq!(c.f_vector(), vec![4, 3]);
    assert!(full_homology(&c, true).unwrap().is_trivial());
}

#[test]
fn complement_needs_a_full_subcomplex() {
    let k = corpus::triangle();
    let boundary = Subcomplex::from_predicate(&k, |s| s.len() <= 2);
    assert!(matches!(
        disjoint_complement(&boundary),
        Err(Error::NotFull { .. })
    ));
}

#[test]
fn six_orderings_of_three_distinct_points() {
    let m = delta_model(&corpus::interval(), 3, 1, 3).unwrap();
    assert!(m.is_complete());
    assert_eq!(m.w.f_vector(), vec![24, 30, 12]);
    let comps = m.w.connected_components();
    assert_eq!(comps.len(), 6);
    for c in comps {
        assert!(full_homology(&c.to_complex("c"), true)
            .unwrap()
            .is_trivial());
    }
}

fn trimmed(mut b: Vec<usize>) -> Vec<usize> {
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

#[test]
fn interval_models() {
    let m = delta_model(&corpus::interval(), 3, 2, 3).unwrap();
    let h = full_homology(&m.w, false).unwrap();
    assert_eq!(trimmed(h.betti_numbers()), vec![1, 1]);
    assert!(h.groups.iter().all(|g| g.torsion.is_empty()));

    let m = delta_model(&corpus::interval(), 4, 3, 4).unwrap();
    assert_eq!(
        trimmed(full_homology(&m.w, false).unwrap().betti_numbers()),
        vec![1, 0, 1]
    );
}

#[test]
fn skeleton_bounded_model() {
    let m = delta_model(&corpus::interval(), 3, 2, 2).unwrap();
    assert_eq!(m.skeleton_bound, Some(2));
    let h = homology(&m.view(), 1, false).unwrap();
    assert_eq!(h.betti_numbers(), vec![1, 1]);
    assert!(matches!(
        homology(&m.view(), 2, false),
        Err(Error::InsufficientSkeleton { .. })
    ));
}

#[test]
fn no_collision_locus_when_d_reaches_n() {
    let x = corpus::triangle();
    let m = delta_model(&x, 2, 2, 4).unwrap();
    let sd = product_complex(&x, 2)
        .unwrap()
        .complex()
        .barycentric_subdivision();
    assert_eq!(m.w.f_vector(), sd.f_vector());
}

#[test]
fn model_parameters_are_checked() {
    assert!(delta_model(&corpus::interval(), 0, 1, 1).is_err());
    assert!(delta_model(&corpus::interval(), 2, 0, 1).is_err());
    assert!(simplex_interval_model(3, 3).is_err());
    assert!(simplex_interval_model(1, 1).is_err());
}

#[test]
fn carriers_round_trip() {
    let m = delta_model(&corpus::circle(), 2, 1, 2).unwrap();
    for (i, c) in m.carriers.iter().enumerate() {
        assert_eq!(m.vertex_of(c), Some(i as u32));
        assert!(!m.is_forbidden(c));
    }
    let diag = product_complex(&corpus::circle(), 2)
        .unwrap()
        .encode(&[1, 1]);
    assert!(m.is_forbidden(&[diag]));
    assert_eq!(m.vertex_of(&[diag]), None);
}

#[test]
fn lazy_flags_of_a_triangle() {
    let t = corpus::triangle();
    let poset = FacePoset::new(&t);
    let all = lazy_flag_skeleton(&poset, |_| true, 2);
    assert_eq!(all.count(2), 6);
    let interior = lazy_flag_skeleton(&poset, |s| s.len() > 1, 2);
    assert_eq!(interior.into_complex("I").f_vector(), vec![4, 3]);
}

#[test]
fn simplex_fibers_are_contractible() {
    for (n, d) in [(3, 2), (4, 2), (4, 3), (3, 1), (4, 1), (5, 2)] {
        let m = simplex_interval_model(n, d).unwrap();
        assert!(!m.w.is_empty(), "n={n} d={d}");
        assert!(
            full_homology(&m.w, true).unwrap().is_trivial(),
            "n={n} d={d}"
        );
    }
}

#[test]
fn simplex_fiber_3_2_is_triangle_minus_corners() {
    let m = simplex_interval_model(3, 2).unwrap();
    // every corner has two cyclically consecutive zero coordinates
    assert!(m.carriers.iter().all(|c| c.len() >= 2));
    assert_eq!(m.w.count(0), 4);
}

#[test]
fn restriction_to_subcomplexes() {
    let circle = corpus::circle();
    let edge = Subcomplex::generated_by(&circle, [vec![0, 1]]);
    assert!(restriction_check(&edge, 2, 1).unwrap());
    let whole = Subcomplex::from_predicate(&circle, |_| true);
    assert!(restriction_check(&whole, 2, 1).unwrap());
    let vertex = Subcomplex::generated_by(&circle, [vec![2]]);
    assert!(restriction_check(&vertex, 2, 1).unwrap());
    let square = corpus::square();
    let half = Subcomplex::generated_by(&square, [vec![0, 2, 3]]);
    assert!(restriction_check(&half, 2, 1).unwrap());
}
