use hamsquare::catalog::{cycle_power, star};
use hamsquare::squareham::{complement_host, contains_square_hamilton, has_star, verify_witness, Method, SquareHamChecker};
use hamsquare::Graph;
use proptest::prelude::*;

fn dense_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max, 50u32..100).prop_flat_map(|(n, pct)| {
        proptest::collection::vec(0u32..100, n * (n - 1) / 2).prop_map(move |rolls| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(rolls).filter(|(_, r)| *r < pct).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn methods_agree(g in dense_graph(5, 11)) {
        let a = contains_square_hamilton(&g, Method::ComplementEmbedding).unwrap();
        let b = contains_square_hamilton(&g, Method::DirectSearch).unwrap();
        prop_assert_eq!(a.contains, b.contains);
        for r in [&a, &b] {
            match &r.witness {
                Some(w) => prop_assert!(verify_witness(&g, w)),
                None => prop_assert!(!r.contains),
            }
        }
    }
}

#[test]
fn squares_of_cycles() {
    for n in 5..16 {
        let sq = cycle_power(n, 2).unwrap();
        for m in [Method::ComplementEmbedding, Method::DirectSearch] {
            assert!(contains_square_hamilton(&sq, m).unwrap().contains, "n = {n}");
            let (u, v) = sq.edges()[0];
            let minus = sq.without_edge(u, v).unwrap();
            assert!(!contains_square_hamilton(&minus, m).unwrap().contains, "n = {n}");
        }
    }
}

#[test]
fn witness_rejects_wrong_orders() {
    let sq = cycle_power(8, 2).unwrap();
    assert!(verify_witness(&sq, &[0, 1, 2, 3, 4, 5, 6, 7]));
    assert!(!verify_witness(&sq, &[0, 2, 1, 3, 4, 5, 6, 7]));
    assert!(!verify_witness(&sq, &[0, 1, 2]));
}

#[test]
fn star_complements_block_the_square() {
    for n in 8..14 {
        let checker = SquareHamChecker::new(n).unwrap();
        let f = star(n - 3).unwrap();
        assert!(has_star(&f, n - 3));
        assert!(!checker.pattern_embeds(&f).unwrap());
        let g = complement_host(n, &f).unwrap();
        assert!(!checker.check(&g).unwrap().contains);
        assert!(checker.pattern_embeds(&star(n - 4).unwrap()).unwrap());
    }
}
