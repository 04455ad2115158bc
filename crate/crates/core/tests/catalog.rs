use std::collections::BTreeSet;

use hamsquare::catalog::{
    family, family_textual, l_family, lift_minus, lift_plus_t, parse_name, square_cycle_complement, star, y_hosts,
    CatalogError, FamilyId, FamilyKind, GadgetSet, LiftSpec,
};
use hamsquare::enumerate::{enumerate_family, Budget};
use hamsquare::iso::{embed_subgraph, is_isomorphic, IsolatedPolicy};
use hamsquare::Graph;
use proptest::prelude::*;

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lifts_add_one_vertex_and_t_edges(f in graph(7), t in 1usize..4) {
        prop_assume!(t <= f.order());
        let fam = lift_plus_t(&LiftSpec { base: f.clone(), t }).unwrap();
        prop_assert!(!fam.is_empty());
        prop_assert!(fam.len() <= binomial(f.order(), t));
        for m in fam.members() {
            prop_assert_eq!(m.graph.size(), f.size() + t);
            prop_assert!(m.graph.order() <= f.order() + 1);
            prop_assert!(embed_subgraph(&f, &m.graph).unwrap().is_present());
        }
    }

    #[test]
    fn deletions_remove_one_edge(f in graph(7)) {
        prop_assume!(f.size() > 0);
        let fam = lift_minus(&f).unwrap();
        prop_assert!(fam.len() <= f.size());
        for m in fam.members() {
            prop_assert_eq!(m.graph.size(), f.size() - 1);
            prop_assert!(embed_subgraph(&m.graph, &f).unwrap().is_present());
        }
    }
}

#[test]
fn lift_rejects_bad_width() {
    let f = star(4).unwrap();
    assert!(lift_plus_t(&LiftSpec { base: f.clone(), t: 0 }).is_err());
    assert!(lift_plus_t(&LiftSpec { base: f, t: 5 }).is_err());
}

#[test]
fn l_family_is_the_star_filter_of_k_n_n_minus_2() {
    for n in 9..=11 {
        let mut want = BTreeSet::new();
        let unions = [parse_name(&format!("S{}∪S4", n - 4)).unwrap(), parse_name(&format!("S{}∪K3", n - 4)).unwrap()];
        let s = star(n - 3).unwrap();
        for m in enumerate_family(n, n - 2, &Budget::unlimited()).unwrap().members() {
            let has_star = embed_subgraph(&s, &m.graph).unwrap().is_present();
            let is_union = unions.iter().any(|u| is_isomorphic(u, &m.graph, IsolatedPolicy::Drop).unwrap());
            if has_star || is_union {
                want.insert(m.code.code.clone());
            }
        }
        let got: BTreeSet<String> = l_family(n).unwrap().codes().map(String::from).collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn names_parse_to_expected_shapes() {
    let cases = [
        ("S5", 5, 4),
        ("K4", 4, 6),
        ("K4-", 4, 5),
        ("C5", 5, 5),
        ("P4", 4, 3),
        ("W5", 5, 8),
        ("F5", 5, 6),
        ("M3", 6, 3),
        ("S5,2", 5, 7),
        ("S6∪K3", 9, 8),
        ("S6|S4", 10, 8),
        ("2S3", 6, 4),
    ];
    for (name, order, size) in cases {
        let g = parse_name(name).unwrap();
        assert_eq!((g.non_isolated_count(), g.size()), (order, size), "{name}");
    }
    assert!(parse_name("Q7").is_err());
}

#[test]
fn host_is_four_regular_complement() {
    for n in 6..20 {
        let h = square_cycle_complement(n).unwrap();
        assert!((0..n).all(|u| h.degree(u) == n - 5), "n = {n}");
    }
}

#[test]
fn figure_only_members_need_gadgets() {
    let id = FamilyId::new(FamilyKind::E, 10).unwrap();
    let (textual, missing) = family_textual(id).unwrap();
    assert_eq!(missing, vec!["G1".to_string()]);
    assert!(matches!(family(id, None), Err(CatalogError::Unavailable { .. })));
    let gadgets = GadgetSet::parse("G1\tE_Nw\n", None).unwrap();
    let full = family(id, Some(&gadgets)).unwrap();
    assert_eq!(full.len(), textual.len() + 1);
}

#[test]
fn gadget_errors_carry_line_numbers() {
    let err = GadgetSet::parse("# header\nG1\tE_Nw\nG2\t!!\n", None).unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
}

#[test]
fn family_ranges_are_enforced() {
    assert!(FamilyId::new(FamilyKind::F, 16).is_err());
    assert!(FamilyId::new(FamilyKind::Y, 17).is_err());
    assert_eq!(y_hosts(18).unwrap().len(), 3);
}
