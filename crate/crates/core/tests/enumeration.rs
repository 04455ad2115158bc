use std::collections::BTreeSet;

use hamsquare::catalog::square_cycle_complement;
use hamsquare::enumerate::{count_by_size, enumerate_family, for_each_member, minimal_forbidden_cores, Budget};
use hamsquare::iso::{canonical_form, embed_subgraph, IsolatedPolicy};
use hamsquare::Graph;

/// All `t`-edge subsets of `K_m`, reduced to isomorphism classes, with the
/// number of non-isolated vertices of each.
fn labelled_classes(m: usize, t: usize) -> BTreeSet<(String, usize)> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    let mut pick: Vec<usize> = (0..t).collect();
    loop {
        let g = Graph::new(m, pick.iter().map(|&i| pairs[i])).unwrap();
        out.insert((canonical_form(&g, IsolatedPolicy::Drop).unwrap().code, g.non_isolated_count()));
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] < pairs.len() - t + i {
                pick[i] += 1;
                for j in i + 1..t {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[test]
fn small_families_match_labelled_enumeration() {
    for t in 1..=5 {
        let all = labelled_classes(2 * t, t);
        for n in [t + 1, 2 * t - 1, 2 * t] {
            if n < 2 {
                continue;
            }
            let want: BTreeSet<String> = all.iter().filter(|(_, k)| *k <= n).map(|(c, _)| c.clone()).collect();
            let got: BTreeSet<String> = enumerate_family(n, t, &Budget::unlimited()).unwrap().codes().map(String::from).collect();
            assert_eq!(got, want, "K({n}, {t})");
        }
    }
}

#[test]
fn counts_without_isolated_vertices() {
    // Graphs with t edges and no isolated vertices, any order.
    let known = [1, 1, 2, 5, 11, 26, 68, 177];
    let counts = count_by_size(14, 7, &Budget::unlimited()).unwrap();
    assert_eq!(counts, known);
}

#[test]
fn all_graphs_on_eight_vertices() {
    let counts = count_by_size(8, 28, &Budget::unlimited()).unwrap();
    assert_eq!(counts.iter().sum::<u64>(), 12346);
    for t in 0..=28 {
        assert_eq!(counts[t], counts[28 - t], "complement symmetry at t = {t}");
    }
}

#[test]
fn budget_stops_the_sweep() {
    let b = Budget { max_members: Some(10), max_time: None };
    assert!(count_by_size(10, 8, &b).is_err());
}

#[test]
fn minimal_cores_match_exhaustive_filtering() {
    for n in 7..=10 {
        let t_max = n - 3;
        let host = square_cycle_complement(n).unwrap();
        let mut want = BTreeSet::new();
        for t in 1..=t_max {
            for_each_member(n, t, &Budget::unlimited(), |node| {
                let f = node.graph();
                if embed_subgraph(&f, &host).unwrap().is_present() {
                    return;
                }
                let minimal = f.edges().into_iter().all(|(u, v)| {
                    embed_subgraph(&f.without_edge(u, v).unwrap(), &host).unwrap().is_present()
                });
                if minimal {
                    want.insert(canonical_form(&f, IsolatedPolicy::Drop).unwrap().code);
                }
            })
            .unwrap();
        }
        let got: BTreeSet<String> =
            minimal_forbidden_cores(n, t_max, &Budget::unlimited()).unwrap().codes().map(String::from).collect();
        assert_eq!(got, want, "n = {n}");
    }
}
