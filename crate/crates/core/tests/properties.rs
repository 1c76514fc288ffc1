use std::collections::BTreeSet;

use hamred_core::generate::{antiprism, medial, prism};
use hamred_core::reductions::{q_complete, stack_increment};
use hamred_core::solvers::two_factor;
use hamred_core::verify::{check_ham_cycle, check_regular, check_two_factor};
use hamred_core::{
    identify_vertices, mirror_embedding, parse_instance, serialize_instance, Budget, Coloring,
    CycleCert, Graph, Instance, PlaneGraph,
};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..12).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let mut g = Graph::empty(n);
            for (a, b) in pairs {
                if a != b && !g.has_edge(a, b) {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
    })
}

fn plane_strategy() -> impl Strategy<Value = PlaneGraph> {
    (0usize..3, 3usize..9, any::<prop::sample::Index>()).prop_map(|(family, k, face)| {
        let pg = match family {
            0 => prism(k).unwrap(),
            1 => antiprism(k).unwrap(),
            _ => medial(&prism(k).unwrap()).unwrap(),
        };
        let count = pg.faces().unwrap().len();
        pg.with_outer_face(face.index(count)).unwrap()
    })
}

proptest! {
    #[test]
    fn graph_instances_round_trip(g in graph_strategy(), seed in any::<u64>()) {
        let colors = Coloring((0..g.n()).map(|v| ((seed >> (v % 60)) % 3) as u8 + 1).collect());
        let inst = Instance::from_graph(g).with_coloring(&colors);
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_instance(&back), text);
    }

    #[test]
    fn plane_instances_round_trip(pg in plane_strategy()) {
        let n = pg.n();
        let inst = Instance::from_plane(pg).with_cycle(CycleCert((0..n).collect()));
        let back = parse_instance(&serialize_instance(&inst)).unwrap();
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn mirror_is_an_involution(pg in plane_strategy()) {
        let once = mirror_embedding(&pg);
        prop_assert!(once.is_planar());
        prop_assert_eq!(mirror_embedding(&once), pg.clone());
        let mut a: Vec<usize> = pg.faces().unwrap().iter().map(|f| f.len()).collect();
        let mut b: Vec<usize> = once.faces().unwrap().iter().map(|f| f.len()).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(pg.outer().unwrap().len(), once.outer().unwrap().len());
    }

    #[test]
    fn identification_merges_neighbourhoods(g in graph_strategy(), v in 0usize..12, w in 0usize..12) {
        prop_assume!(v < g.n() && w < g.n() && v != w);
        let (h, map) = identify_vertices(&g, v, w).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        let merged: BTreeSet<usize> = g.neighbors(v).iter().chain(g.neighbors(w))
            .filter(|&&x| x != v && x != w)
            .map(|&x| map[x])
            .collect();
        prop_assert_eq!(h.degree(map[v]), merged.len());
        prop_assert_eq!(map[v], map[w]);
    }

    #[test]
    fn two_factors_are_valid(pg in plane_strategy()) {
        prop_assume!(pg.graph().regular_degree() == Some(4));
        let tf = two_factor(pg.graph()).unwrap();
        prop_assert!(check_two_factor(pg.graph(), &tf));
    }

    #[test]
    fn q_complete_multiplies_degrees(g in graph_strategy(), q in 1usize..5) {
        let res = q_complete(&g, q, &Budget::default()).unwrap();
        prop_assert_eq!(res.graph.n(), q * g.n());
        prop_assert_eq!(res.graph.m(), q * q * g.m());
        for v in 0..g.n() {
            for i in 0..q {
                prop_assert_eq!(res.graph.degree(res.vertex(v, i)), q * g.degree(v));
            }
        }
    }

    #[test]
    fn stacking_cycles(k in 3usize..40) {
        let g = hamred_core::generate::cycle(k).unwrap();
        let (s, star) = stack_increment(&g, &CycleCert((0..k).collect())).unwrap();
        prop_assert!(check_regular(&s, 3));
        prop_assert!(check_ham_cycle(&s, &star));
    }
}
