use std::collections::BTreeMap;

use lieblocks::kfunctor;
use lieblocks::zigzag::{self, Graph, ZigzagAlgebra};
use lieblocks::{Error, Exec, RootSystem, Q};
use proptest::prelude::*;

/// A random tree on `2..=max_n` vertices: vertex `i` hangs off some `j < i`.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| (1..n).map(|i| 0..i).collect::<Vec<_>>())
        .prop_map(|parents| {
            let edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            Graph::new(edges.len() + 1, &edges).unwrap()
        })
}

/// A tree plus a few extra edges, so usually not a tree.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    tree(max_n).prop_flat_map(|t| {
        let n = t.num_vertices();
        let base = t.edges().to_vec();
        prop::collection::vec((0..n, 0..n), 0..4).prop_map(move |extra| {
            let mut es = base.clone();
            for (u, v) in extra {
                if u != v && !es.contains(&(u.min(v), u.max(v))) {
                    es.push((u.min(v), u.max(v)));
                }
            }
            Graph::new(n, &es).unwrap()
        })
    })
}

fn nonzero() -> impl Strategy<Value = Q> {
    (1i64..=20, 1i64..=20, any::<bool>()).prop_map(|(p, q, neg)| Q::new(if neg { -p } else { p }, q))
}

fn scalars(g: &Graph) -> impl Strategy<Value = BTreeMap<(usize, usize), Q>> {
    let keys: Vec<(usize, usize)> = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    prop::collection::vec(nonzero(), keys.len()).prop_map(move |vals| keys.iter().copied().zip(vals).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn structure_of_random_graphs(g in graph(7)) {
        let n = g.num_vertices();
        let alg = ZigzagAlgebra::new(g.clone());
        prop_assert_eq!(alg.dim(), 2 * n + 2 * g.edges().len());
        prop_assert!(alg.is_associative(Exec::Sequential));
        prop_assert!(alg.has_identity());
        prop_assert_eq!(alg.radical_series()[3], 0);
        let adj = g.adjacency();
        let cartan = alg.cartan_matrix();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(cartan[u][v], adj[u][v] + 2 * (u == v) as i64);
            }
        }
        prop_assert!(alg.frobenius_check());
    }

    #[test]
    fn rescaled_trees_are_isomorphic((g, c) in tree(7).prop_flat_map(|g| { let s = scalars(&g); (Just(g), s) })) {
        prop_assert!(zigzag::rescaling_check(&g, &c).unwrap());
        let scaled = ZigzagAlgebra::scaled(g.clone(), &c).unwrap();
        prop_assert!(scaled.is_associative(Exec::Sequential));
    }

    #[test]
    fn k0_bridge(g in tree(7)) {
        let alg = ZigzagAlgebra::new(g.clone());
        let cartan = alg.cartan_matrix();
        for a in 0..g.num_vertices() {
            let col = kfunctor::t_matrix(&g, a).column(a);
            let want: Vec<i64> = cartan.iter().map(|row| row[a]).collect();
            prop_assert_eq!(col, want);
        }
        prop_assert!(kfunctor::k0_checks(&g).iter().all(|c| c.ok));
    }
}

#[test]
fn rescaling_needs_a_tree() {
    let cycle = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let c: BTreeMap<(usize, usize), Q> = [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]
        .into_iter()
        .map(|k| (k, Q::from_integer(2)))
        .collect();
    assert_eq!(zigzag::rescaling_check(&cycle, &c), Err(Error::NotATree));
}

#[test]
fn graph_validation() {
    assert_eq!(Graph::new(0, &[]).unwrap_err(), Error::EmptyGraph);
    assert_eq!(Graph::new(2, &[(0, 2)]).unwrap_err(), Error::BadVertex(2));
    assert!(matches!(Graph::new(2, &[(1, 1)]), Err(Error::BadGraph(_))));
    assert!(matches!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::BadGraph(_))));
}

#[test]
fn dynkin_projectives() {
    let rs = RootSystem::of("D4").unwrap();
    let alg = ZigzagAlgebra::new(Graph::dynkin(&rs));
    for a in 0..4 {
        let p = alg.projective(a).unwrap();
        let unit: Vec<usize> = (0..4).map(|v| (v == a) as usize).collect();
        assert_eq!(p.dim(), 2 + Graph::dynkin(&rs).degree(a));
        assert_eq!(p.top(&alg), unit);
        assert_eq!(p.socle(&alg), unit);
    }
}
