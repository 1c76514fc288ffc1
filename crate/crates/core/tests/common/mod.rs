#![allow(dead_code)]

use hamred_core::generate::{
    antiprism, complete, cycle, k4, medial, octahedron, petersen, prism, truncate,
};
use hamred_core::{builtin_gadget, Graph, GadgetName, PlaneGraph};

/// The medial-graph instances: prisms k = 3..=20, K4, truncated K4 and
/// truncated prisms k = 3..=6.
pub fn medial_instances() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    for k in 3..=20 {
        out.push((format!("medial(prism{k})"), medial(&prism(k).unwrap()).unwrap()));
    }
    out.push(("medial(K4)".into(), medial(&k4()).unwrap()));
    out.push(("medial(trunc K4)".into(), medial(&truncate(&k4()).unwrap()).unwrap()));
    for k in 3..=6 {
        let t = truncate(&prism(k).unwrap()).unwrap();
        out.push((format!("medial(trunc prism{k})"), medial(&t).unwrap()));
    }
    out
}

/// 4-regular plane hosts with at most 16 vertices.
pub fn small_hosts() -> Vec<(String, PlaneGraph)> {
    vec![
        ("octahedron".into(), octahedron()),
        ("antiprism4".into(), antiprism(4).unwrap()),
        ("antiprism5".into(), antiprism(5).unwrap()),
        ("medial(K4)".into(), medial(&k4()).unwrap()),
        ("medial(prism3)".into(), medial(&prism(3).unwrap()).unwrap()),
        ("medial(prism4)".into(), medial(&prism(4).unwrap()).unwrap()),
        ("medial(prism5)".into(), medial(&prism(5).unwrap()).unwrap()),
    ]
}

/// Every graph the oracle cross-checks run over.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for k in 3..=9 {
        out.push((format!("C{k}"), cycle(k).unwrap()));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("K4 plane".into(), k4().graph().clone()));
    for k in 3..=6 {
        out.push((format!("prism{k}"), prism(k).unwrap().graph().clone()));
        out.push((format!("antiprism{k}"), antiprism(k).unwrap().graph().clone()));
    }
    out.push(("trunc K4".into(), truncate(&k4()).unwrap().graph().clone()));
    for (name, pg) in small_hosts() {
        out.push((name, pg.graph().clone()));
    }
    for name in GadgetName::ALL {
        out.push((format!("gadget {name}"), builtin_gadget(name).plane.graph().clone()));
    }
    out.push(("K3,3".into(), k33()));
    out.push(("W5".into(), wheel(5)));
    out.push(("W6".into(), wheel(6)));
    out
}

fn k33() -> Graph {
    Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
}

/// Wheel with `k` rim vertices and hub `k`.
fn wheel(k: usize) -> Graph {
    let mut g = cycle(k).unwrap();
    g.add_vertices(1);
    for i in 0..k {
        g.add_edge(i, k).unwrap();
    }
    g
}
