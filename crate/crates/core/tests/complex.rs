use confspace::complex::{ComplexFile, FacePoset, RawComplex};
use confspace::invariants::full_homology;
use confspace::{corpus, Error, SimplicialComplex, Subcomplex, Violation};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn raw(n: usize, simplices: &[&[u32]]) -> RawComplex {
    RawComplex {
        vertices: labels(n),
        simplices: simplices.iter().map(|s| s.to_vec()).collect(),
    }
}

#[test]
fn closed_triangle_validates() {
    let r = raw(
        3,
        &[&[0, 1, 2], &[0, 1], &[0, 2], &[1, 2], &[0], &[1], &[2]],
    );
    assert_eq!(r.validate(), Ok(()));
    assert_eq!(r.into_complex("t").unwrap().f_vector(), vec![3, 3, 1]);
}

#[test]
fn edge_without_vertices_names_missing_face() {
    let err = raw(2, &[&[0, 1]]).validate().unwrap_err();
    assert_eq!(
        err,
        Violation::MissingFace {
            simplex: vec![0, 1],
            face: vec![1]
        }
    );
    assert!(err.to_string().contains("missing face {1}"));
}

#[test]
fn other_violations() {
    assert_eq!(
        raw(2, &[&[0], &[3]]).validate(),
        Err(Violation::UnknownVertex {
            simplex: vec![3],
            vertex: 3
        })
    );
    assert_eq!(
        raw(2, &[&[0], &[1], &[1, 0]]).validate(),
        Err(Violation::NotCanonical {
            simplex: vec![1, 0]
        })
    );
    assert_eq!(
        raw(1, &[&[0], &[0]]).validate(),
        Err(Violation::Duplicate { simplex: vec![0] })
    );
    assert_eq!(raw(1, &[&[]]).validate(), Err(Violation::EmptySimplex));
}

#[test]
fn empty_complex() {
    let e = SimplicialComplex::empty("e");
    assert_eq!(e.validate(), Ok(()));
    assert_eq!(e.dimension(), -1);
    assert!(e.f_vector().is_empty());
    assert_eq!(e.euler_characteristic(), 0);
}

#[test]
fn subdivision_counts() {
    let sd = corpus::interval().barycentric_subdivision();
    assert_eq!(sd.f_vector(), vec![3, 2]);
    for q in 0..5u32 {
        let simplex = SimplicialComplex::from_facets(
            "s",
            labels(q as usize + 1),
            [(0..=q).collect::<Vec<_>>()],
        )
        .unwrap();
        let top = simplex.barycentric_subdivision().count(q as usize);
        assert_eq!(top, (1..=q as usize + 1).product::<usize>());
    }
    for x in corpus::all() {
        assert_eq!(
            x.barycentric_subdivision().euler_characteristic(),
            x.euler_characteristic(),
            "{}",
            x.name()
        );
    }
}

#[test]
fn skeleta() {
    let t = corpus::triangle();
    assert_eq!(t.skeleton(1).f_vector(), vec![3, 3]);
    assert_eq!(t.skeleton(0).f_vector(), vec![3]);
    assert_eq!(t.skeleton(2).with_name("triangle"), t);
}

#[test]
fn links() {
    let s = corpus::tetrahedron_boundary();
    let lk = s.link(&[0]).unwrap();
    assert_eq!(lk.f_vector(), vec![3, 3]);
    assert_eq!(lk.component_count(), 1);

    let book = corpus::three_triangles();
    let lk = book.link(&[0, 1]).unwrap();
    assert_eq!(lk.f_vector(), vec![3]);
    assert_eq!(lk.component_count(), 3);

    assert!(s.link(&[0, 1, 2]).unwrap().is_empty());
    assert!(matches!(
        s.link(&[0, 1, 2, 3]),
        Err(Error::SimplexNotFound(_))
    ));
}

#[test]
fn joins() {
    let circle = corpus::circle();
    let apex = SimplicialComplex::from_facets("p", vec!["apex".into()], [vec![0]]).unwrap();
    let cone = apex.join(&circle).unwrap();
    assert_eq!(cone.f_vector(), vec![4, 6, 3]);
    assert!(full_homology(&cone, true).unwrap().is_trivial());

    let s0 = |a: &str, b: &str| {
        SimplicialComplex::from_facets("s0", vec![a.into(), b.into()], [vec![0], vec![1]]).unwrap()
    };
    let square = s0("a", "b").join(&s0("c", "d")).unwrap();
    assert_eq!(square.f_vector(), vec![4, 4]);
    let h = full_homology(&square, false).unwrap();
    assert_eq!(h.betti_numbers(), vec![1, 1]);

    assert!(matches!(circle.join(&circle), Err(Error::LabelClash(_))));
}

#[test]
fn components_and_euler() {
    let two_edges =
        SimplicialComplex::from_facets("2e", labels(4), [vec![0, 1], vec![2, 3]]).unwrap();
    assert_eq!(two_edges.component_count(), 2);
    let comps = two_edges.connected_components();
    assert_eq!(comps.len(), 2);
    assert!(comps[1].contains(&[2, 3]));
    assert_eq!(corpus::circle().component_count(), 1);

    let tet = corpus::solid_tetrahedron();
    assert_eq!(tet.skeleton(1).euler_characteristic(), -2);
    assert_eq!(tet.euler_characteristic(), 1);
    assert_eq!(corpus::circle().euler_characteristic(), 0);
    assert_eq!(corpus::fan(4).euler_characteristic(), 1);
}

#[test]
fn subcomplex_fullness() {
    let t = corpus::triangle();
    let boundary = Subcomplex::from_predicate(&t, |s| s.len() <= 2);
    assert!(boundary.is_downward_closed());
    assert_eq!(boundary.check_full(), Err(vec![0, 1, 2]));
    let edge = Subcomplex::generated_by(&t, [vec![0, 1]]);
    assert!(edge.is_full());
    assert_eq!(edge.count(0), 2);
}

#[test]
fn file_round_trip() {
    for x in corpus::all() {
        let file = ComplexFile::from_complex(&x, None);
        let back = ComplexFile::from_json(&file.to_json().unwrap())
            .unwrap()
            .to_complex()
            .unwrap();
        assert_eq!(back, x);
    }
    let bad = r#"{"name": "b", "vertices": ["a", "a"], "facets": [[0, 1]]}"#;
    assert!(matches!(
        ComplexFile::from_json(bad).unwrap().to_complex(),
        Err(Error::Format(_))
    ));
    let out_of_range = r#"{"name": "b", "vertices": ["a"], "facets": [[0, 1]]}"#;
    assert!(matches!(
        ComplexFile::from_json(out_of_range).unwrap().to_complex(),
        Err(Error::Invalid(_))
    ));
}

#[test]
fn flag_skeleton_of_triangle() {
    let t = corpus::triangle();
    let poset = FacePoset::new(&t);
    let flags = poset.flag_skeleton(|_| true, 2);
    assert!(flags.complete);
    assert_eq!(flags.count(2), 6);
    let partial = poset.flag_skeleton(|_| true, 1);
    assert!(!partial.complete);
    assert_eq!(partial.into_complex("p").f_vector(), vec![7, 12]);
}

#[test]
fn corpus_is_valid() {
    for name in corpus::NAMES {
        let x = corpus::by_name(name).unwrap();
        assert_eq!(x.validate(), Ok(()), "{name}");
    }
    assert!(corpus::by_name("wedge9").is_err());
    assert_eq!(corpus::by_name("polygon5").unwrap().f_vector(), vec![5, 5]);
}

fn arb_complex_with_order() -> impl Strategy<Value = (SimplicialComplex, Vec<u32>)> {
    (3usize..7).prop_flat_map(|n| {
        let facet = proptest::collection::btree_set(0..n as u32, 1..=4.min(n));
        let k = proptest::collection::vec(facet, 1..6).prop_map(move |fs| {
            SimplicialComplex::from_facets(
                "r",
                labels(n),
                fs.into_iter().map(|f| f.into_iter().collect()),
            )
            .unwrap()
        });
        (k, Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn random_complexes_are_closed((k, _) in arb_complex_with_order()) {
        prop_assert_eq!(k.validate(), Ok(()));
        prop_assert_eq!(k.barycentric_subdivision().euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn homology_ignores_vertex_order((k, perm) in arb_complex_with_order()) {
        let relabeled = SimplicialComplex::from_facets(
            "p",
            labels(k.vertex_count()),
            k.facets().into_iter().map(|f| f.iter().map(|&v| perm[v as usize]).collect()),
        ).unwrap();
        prop_assert_eq!(relabeled.f_vector(), k.f_vector());
        prop_assert_eq!(full_homology(&relabeled, false).unwrap(), full_homology(&k, false).unwrap());
    }
}
