use confspace::harness::properties::bareiss_rank;
use confspace::invariants::{
    abelianization, check_boundary_squared, full_homology, homological_connectivity, homology,
    pi1_presentation, smith_normal_form, smith_normal_form_dense, GroupPresentation, HomologyGroup,
    SkeletonView, SparseMatrix, ACYCLIC,
};
use confspace::retract::delta_model;
use confspace::{corpus, SimplicialComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// Invariant factors as quotients of successive gcds of `k × k` minors.
fn determinantal_factors(a: &[Vec<i64>]) -> Vec<i64> {
    let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = 1i64;
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        let mut g = 0i64;
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| a[r][c]).collect())
                    .collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

proptest! {
    #[test]
    fn smith_form_matches_minors(a in (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..7, n), m)
    })) {
        let snf = smith_normal_form_dense(&a);
        let expected: Vec<BigInt> = determinantal_factors(&a).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(snf.diagonal(), expected);
        prop_assert!(snf.divisibility_holds());
    }

    #[test]
    fn rank_matches_fraction_free_elimination(a in (1usize..8, 1usize..8).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..4, n), m)
    })) {
        prop_assert_eq!(smith_normal_form_dense(&a).rank, bareiss_rank(&a));
    }

    #[test]
    fn boundaries_compose_to_zero(facets in proptest::collection::vec(
        proptest::collection::btree_set(0u32..7, 1..=4), 1..8)
    ) {
        let labels = (0..7).map(|i| i.to_string()).collect();
        let k = SimplicialComplex::from_facets("r", labels, facets.into_iter().map(|f| f.into_iter().collect())).unwrap();
        for deg in 1..4 {
            prop_assert!(check_boundary_squared(&k, deg).is_ok());
        }
        let m = k.barycentric_subdivision();
        for deg in 1..4 {
            prop_assert!(check_boundary_squared(&m, deg).is_ok());
        }
    }
}

#[test]
fn smith_examples() {
    let snf = smith_normal_form_dense(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    assert_eq!(snf.nontrivial, vec![BigInt::from(6)]);
    let zero = smith_normal_form(&SparseMatrix::zeros(3, 4));
    assert_eq!((zero.rank, zero.nontrivial.len()), (0, 0));
    let id = smith_normal_form_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(id.rank, 3);
    assert!(id.nontrivial.is_empty());
}

#[test]
fn corpus_homology() {
    let table: &[(&str, &[usize], &[&[u64]])] = &[
        ("point", &[1], &[&[]]),
        ("interval", &[1, 0], &[&[], &[]]),
        ("circle", &[1, 1], &[&[], &[]]),
        ("wedge3", &[1, 3], &[&[], &[]]),
        ("sphere", &[1, 0, 1], &[&[], &[], &[]]),
        ("tetrahedron", &[1, 0, 0, 0], &[&[], &[], &[], &[]]),
        ("book3", &[1, 0, 0], &[&[], &[], &[]]),
        ("rp2", &[1, 0, 0], &[&[], &[2], &[]]),
    ];
    for (name, betti, torsion) in table {
        let h = full_homology(&corpus::by_name(name).unwrap(), false).unwrap();
        assert_eq!(h.betti_numbers(), betti.to_vec(), "{name}");
        for (k, t) in torsion.iter().enumerate() {
            assert_eq!(h.torsion(k), *t, "{name} degree {k}");
        }
    }
}

#[test]
fn homology_display() {
    let h = full_homology(&corpus::projective_plane(), true).unwrap();
    assert_eq!(h.groups[1].to_string(), "Z/2");
    assert_eq!(h.to_string(), "H~0=0, H~1=Z/2, H~2=0");
    assert_eq!(
        HomologyGroup {
            betti: 2,
            torsion: vec![2]
        }
        .to_string(),
        "Z^2 + Z/2"
    );
    assert!(h.table().starts_with("dim | betti | torsion"));
    assert_eq!(h.euler_characteristic(), 1);
}

#[test]
fn presentations() {
    let p = pi1_presentation(&corpus::circle(), 0).unwrap();
    assert_eq!((p.generators.len(), p.relators.len()), (1, 0));
    assert_eq!(abelianization(&p).rank, 1);

    let p = pi1_presentation(&corpus::tetrahedron_boundary(), 0).unwrap();
    let ab = abelianization(&p);
    assert_eq!((ab.rank, ab.torsion.len()), (0, 0));
    assert!(p.trivial_by_elimination());

    let p = pi1_presentation(&corpus::projective_plane(), 0).unwrap();
    assert_eq!(abelianization(&p).torsion, vec![2]);
    assert!(!p.trivial_by_elimination());

    let tree = SimplicialComplex::from_facets(
        "tree",
        (0..4).map(|i| i.to_string()).collect(),
        [vec![0, 1], vec![1, 2], vec![1, 3]],
    )
    .unwrap();
    let ab = abelianization(&pi1_presentation(&tree, 0).unwrap());
    assert_eq!((ab.rank, ab.torsion.len()), (0, 0));

    let two = SimplicialComplex::from_facets("2", vec!["a".into(), "b".into()], [vec![0], vec![1]])
        .unwrap();
    assert!(pi1_presentation(&two, 0).is_err());
}

#[test]
fn abelianizing_a_cyclic_group() {
    let p = GroupPresentation {
        generators: vec!["a".into()],
        relators: vec![vec![(0, 1), (0, 1)]],
    };
    let ab = abelianization(&p);
    assert_eq!((ab.rank, ab.torsion), (0, vec![2]));
}

#[test]
fn circle_model_fundamental_group() {
    let m = delta_model(&corpus::interval(), 3, 2, 3).unwrap();
    let ab = abelianization(&pi1_presentation(&m.w, 0).unwrap());
    assert_eq!((ab.rank, ab.torsion.len()), (1, 0));
}

#[test]
fn connectivity_levels() {
    let point = corpus::point();
    let c = homological_connectivity(SkeletonView::full(&point)).unwrap();
    assert_eq!(c.level, ACYCLIC);
    assert!(c.is_acyclic());

    let two = SimplicialComplex::from_facets("2", vec!["a".into(), "b".into()], [vec![0], vec![1]])
        .unwrap();
    assert_eq!(
        homological_connectivity(SkeletonView::full(&two))
            .unwrap()
            .level,
        -1
    );
    let empty = SimplicialComplex::empty("e");
    assert_eq!(
        homological_connectivity(SkeletonView::full(&empty))
            .unwrap()
            .level,
        -2
    );

    let circle = corpus::circle();
    assert_eq!(
        homological_connectivity(SkeletonView::full(&circle))
            .unwrap()
            .level,
        0
    );

    let sphere = corpus::tetrahedron_boundary();
    let c = homological_connectivity(SkeletonView::full(&sphere)).unwrap();
    assert_eq!(c.level, 1);
    assert!(!c.is_proxy());

    let m = delta_model(&corpus::interval(), 4, 3, 2).unwrap();
    let c = homological_connectivity(m.view()).unwrap();
    assert_eq!(c.level, 1);
    assert!(c.bounded);
}

#[test]
fn bounded_views_refuse_high_degrees() {
    let m = delta_model(&corpus::circle(), 2, 1, 1).unwrap();
    assert!(homology(&m.view(), 0, false).is_ok());
    assert!(homology(&m.view(), 1, false).is_err());
}
