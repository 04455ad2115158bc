use hamsquare::graph6;
use hamsquare::iso::{canonical_form, embed_subgraph, is_isomorphic, IsolatedPolicy};
use hamsquare::Graph;
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Injective maps `pattern -> host` tried exhaustively.
fn brute_embeds(p: &Graph, h: &Graph) -> bool {
    fn go(p: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == p.order() {
            return true;
        }
        for v in 0..h.order() {
            if !used[v] && (0..k).all(|i| !p.has_edge(i, k) || h.has_edge(map[i], v)) {
                used[v] = true;
                map.push(v);
                if go(p, h, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    p.order() <= h.order() && go(p, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        perm.swap(i, (s % (i as u64 + 1)) as usize);
    }
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn embedding_matches_exhaustive_search(p in graph(6), h in graph(7)) {
        let w = embed_subgraph(&p, &h).unwrap();
        prop_assert_eq!(w.is_present(), brute_embeds(&p.without_isolated(), &h));
        if w.is_present() {
            prop_assert!(w.verify(&p, &h));
        }
    }

    #[test]
    fn relabelling_preserves_canonical_form(g in graph(9), seed in any::<u64>()) {
        let h = shuffled(&g, seed);
        prop_assert!(is_isomorphic(&g, &h, IsolatedPolicy::Keep).unwrap());
        prop_assert_eq!(
            canonical_form(&g, IsolatedPolicy::Keep).unwrap(),
            canonical_form(&h, IsolatedPolicy::Keep).unwrap()
        );
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = graph6::encode(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode_str(&s).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn powers_are_nested(g in graph(10), k in 1usize..4) {
        let a = g.power(k).unwrap();
        let b = g.power(k + 1).unwrap();
        for (u, v) in a.edges() {
            prop_assert!(b.has_edge(u, v));
        }
        for (u, v) in g.edges() {
            prop_assert!(a.has_edge(u, v));
        }
    }
}

#[test]
fn isolated_vertices_are_ignored_by_default() {
    let g = Graph::new(3, [(0, 1)]).unwrap();
    let h = Graph::new(5, [(3, 4)]).unwrap();
    assert!(is_isomorphic(&g, &h, IsolatedPolicy::Drop).unwrap());
    assert!(!is_isomorphic(&g, &h, IsolatedPolicy::Keep).unwrap());
}
