//! Instance generators.
//!
//! Small families are drawn from straight-line coordinates; derived graphs
//! (medial, truncation) inherit their rotation system from the input.

use std::collections::HashMap;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::graph::{CycleCert, Graph};
use crate::plane::{mirror_embedding, rotation_from_coordinates, PlaneGraph};

fn from_drawing(n: usize, edges: &[(usize, usize)], coords: &[(f64, f64)]) -> PlaneGraph {
    let g = Graph::from_edges(n, edges.iter().copied()).expect("generator edges are simple");
    let rot = rotation_from_coordinates(&g, coords);
    PlaneGraph::new_planar(g, rot).expect("generator drawings are crossing-free")
}

fn circle(k: usize, radius: f64, phase: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..k).map(move |i| {
        let a = TAU * (i as f64 + phase) / k as f64;
        (radius * a.cos(), radius * a.sin())
    })
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs k >= 3, got {k}")));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::from_edges(10, edges).unwrap()
}

/// K4 as a triangle around a centre vertex 3.
pub fn k4() -> PlaneGraph {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let coords: Vec<_> = circle(3, 2.0, 0.25).chain([(0.0, 0.0)]).collect();
    from_drawing(4, &edges, &coords)
}

/// Outer cycle `0..k`, inner cycle `k..2k`, spokes `i – k+i`.
pub fn prism(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("prism needs k >= 3, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    let coords: Vec<_> = circle(k, 2.0, 0.0).chain(circle(k, 1.0, 0.0)).collect();
    Ok(from_drawing(2 * k, &edges, &coords))
}

/// Outer cycle `0..k`, inner cycle `k..2k` rotated by half a step; every
/// outer vertex sees two inner ones. 4-regular, and `antiprism(3)` is the
/// octahedron.
pub fn antiprism(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("antiprism needs k >= 3, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
        edges.push((i, k + (i + 1) % k));
    }
    let coords: Vec<_> = circle(k, 2.0, 0.0).chain(circle(k, 0.8, -0.5)).collect();
    Ok(from_drawing(2 * k, &edges, &coords))
}

pub fn octahedron() -> PlaneGraph {
    antiprism(3).unwrap()
}

/// The triangle with its Hamiltonian cycle.
pub fn triangle() -> (Graph, CycleCert) {
    (complete(3), CycleCert(vec![0, 1, 2]))
}

fn edge_index(g: &Graph) -> HashMap<(usize, usize), usize> {
    g.edges().enumerate().map(|(i, e)| (e, i)).collect()
}

fn fix_orientation(g: Graph, rot: Vec<Vec<usize>>) -> Result<PlaneGraph> {
    let pg = PlaneGraph::new(g, rot)?;
    if pg.is_planar() {
        return Ok(pg);
    }
    let flipped = mirror_embedding(&pg);
    flipped.faces()?;
    Ok(flipped)
}

fn require_cubic_plane(pg: &PlaneGraph) -> Result<()> {
    pg.graph().require_regular(3)?;
    pg.faces()?;
    Ok(())
}

/// Medial graph: one vertex per edge (numbered in sorted edge order), two
/// vertices adjacent when their edges are consecutive around a face.
pub fn medial(pg: &PlaneGraph) -> Result<PlaneGraph> {
    require_cubic_plane(pg)?;
    let g = pg.graph();
    let idx = edge_index(g);
    let id = |a: usize, b: usize| idx[&(a.min(b), a.max(b))];
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Graph::empty(edges.len());
    let mut rot = Vec::with_capacity(edges.len());
    for &(u, v) in &edges {
        let me = id(u, v);
        let r = vec![
            id(u, pg.pred(u, v)),
            id(v, pg.succ(v, u)),
            id(v, pg.pred(v, u)),
            id(u, pg.succ(u, v)),
        ];
        for &w in &r {
            if me < w {
                out.add_edge(me, w)?;
            }
        }
        rot.push(r);
    }
    fix_orientation(out, rot)
}

/// Truncation of a cubic plane graph: every vertex becomes a triangle. The
/// corner of `v` towards `a` gets the id `3v + i` where `a` is the `i`-th
/// entry of `v`'s rotation.
pub fn truncate(pg: &PlaneGraph) -> Result<PlaneGraph> {
    require_cubic_plane(pg)?;
    let n = pg.n();
    let corner = |v: usize, a: usize| {
        3 * v + pg.rotation(v).iter().position(|&w| w == a).expect("adjacent")
    };
    let mut out = Graph::empty(3 * n);
    let mut rot = vec![Vec::new(); 3 * n];
    for v in 0..n {
        for &a in pg.rotation(v) {
            let me = corner(v, a);
            let r = vec![
                corner(a, v),
                corner(v, pg.succ(v, a)),
                corner(v, pg.pred(v, a)),
            ];
            for &w in &r {
                if me < w {
                    out.add_edge(me, w)?;
                }
            }
            rot[me] = r;
        }
    }
    fix_orientation(out, rot)
}
