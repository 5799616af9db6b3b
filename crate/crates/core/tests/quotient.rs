use confspace::action::VertexPermutationAction;
use confspace::invariants::{full_homology, homology};
use confspace::product::{product_complex, symmetric_action};
use confspace::quotient::{
    braid_cells, braid_model, check_regularity, orbit_euler, OrbitComplex, Regularity,
};
use confspace::retract::delta_model;
use confspace::{corpus, Error, SimplicialComplex};

#[test]
fn flipping_an_edge_is_irregular() {
    let edge = corpus::interval();
    let flip = VertexPermutationAction::new(2, vec![vec![1, 0]]).unwrap();
    match check_regularity(&edge, &flip) {
        Regularity::Counterexample { simplex, .. } => assert_eq!(simplex, vec![0, 1]),
        other => panic!("expected a counterexample, got {other:?}"),
    }
    assert!(matches!(
        OrbitComplex::build(&edge, &flip, None, "q"),
        Err(Error::Irregular { .. })
    ));
}

#[test]
fn trivial_group_is_regular() {
    for x in corpus::all() {
        let q = OrbitComplex::build(
            &x,
            &VertexPermutationAction::trivial(x.vertex_count()),
            None,
            "q",
        )
        .unwrap();
        assert_eq!(q.quotient.f_vector(), x.f_vector());
        assert_eq!(orbit_euler(&q).unwrap(), x.euler_characteristic());
    }
}

#[test]
fn swap_on_the_staircase_square() {
    let p = product_complex(&corpus::interval(), 2).unwrap();
    let swap = symmetric_action(&p).unwrap().vertex_action;
    assert!(check_regularity(p.complex(), &swap).is_certified());

    let w = delta_model(&corpus::interval(), 2, 1, 2).unwrap();
    let action = w.symmetric_action().unwrap();
    let sd = w.w.barycentric_subdivision();
    let poset = confspace::complex::FacePoset::new(&w.w);
    let lifted = action.induced_on_faces(&poset).unwrap();
    assert!(check_regularity(&sd, &lifted).is_certified());
}

#[test]
fn symmetric_square_of_a_circle() {
    let q = braid_model(&corpus::circle(), 2, 2, 2).unwrap();
    assert_eq!(
        full_homology(&q.quotient, false).unwrap().betti_numbers(),
        vec![1, 1, 0]
    );
    assert_eq!(orbit_euler(&q).unwrap(), 0);
    assert_eq!(q.quotient.euler_characteristic(), 0);
}

#[test]
fn unordered_pairs_on_graphs() {
    for (k, b1) in [(2, 4), (3, 10)] {
        let x = corpus::wedge_of_circles(k);
        let q = braid_model(&x, 2, 1, 2).unwrap();
        let h = full_homology(&q.quotient, false).unwrap();
        assert_eq!(h.betti_numbers()[..2], [1, b1], "wedge of {k}");
        assert_eq!(1 + 3 * k * (k - 1) / 2, b1);
        assert_eq!(orbit_euler(&q).unwrap(), 1 - b1 as i64);
    }
}

#[test]
fn bounded_quotients_have_no_euler_characteristic() {
    let q = braid_model(&corpus::circle(), 3, 2, 2).unwrap();
    assert_eq!(q.skeleton_bound, Some(2));
    assert!(matches!(orbit_euler(&q), Err(Error::SkeletonBounded)));
    let h = homology(&q.view(), 1, false).unwrap();
    assert_eq!(h.betti_numbers(), vec![1, 1]);
}

/// Two independent routes to the unordered model must agree.
#[test]
fn orbit_cells_agree_with_subdivided_quotient() {
    let cases: Vec<(SimplicialComplex, usize, usize)> = vec![
        (corpus::circle(), 2, 1),
        (corpus::circle(), 2, 2),
        (corpus::circle(), 3, 2),
        (corpus::interval(), 3, 2),
        (corpus::triangle(), 2, 1),
        (corpus::wedge_of_circles(2), 2, 1),
        (corpus::three_triangles(), 2, 1),
    ];
    for (x, n, d) in cases {
        let top = x.dimension() as usize * n;
        let q = braid_model(&x, n, d, top).unwrap();
        let c = braid_cells(&x, n, d, top).unwrap();
        let a = full_homology(&q.quotient, false).unwrap();
        let b = homology(&c, top, false).unwrap();
        assert_eq!(
            a.groups[..],
            b.groups[..a.groups.len()],
            "{} n={n} d={d}",
            x.name()
        );
        assert_eq!(orbit_euler(&q).unwrap(), c.euler_characteristic());
        assert_eq!(c.group_order(), (1..=n).product::<usize>());
    }
}
