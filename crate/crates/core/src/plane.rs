//! Combinatorial plane embeddings given by rotation systems.
//!
//! A rotation lists the neighbours of a vertex in clockwise order. Faces are
//! recovered by walking darts: after arriving at `w` along `v → w`, leave `w`
//! towards the clockwise successor of `v` in the rotation of `w`. A connected
//! rotation system is planar exactly when `n - m + f = 2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A face as the cyclic sequence of darts on its boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<(usize, usize)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in walking order (with repetitions for cut vertices).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(v, _)| v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.darts
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn contains_dart(&self, u: usize, v: usize) -> bool {
        self.darts.contains(&(u, v))
    }
}

/// A graph together with a rotation system and a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer_face: usize,
}

fn canonical_rotation(mut r: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = r.iter().enumerate().min_by_key(|&(_, &w)| w).map(|(i, _)| i) {
        r.rotate_left(pos);
    }
    r
}

impl PlaneGraph {
    /// Checks that every rotation is a permutation of the neighbourhood and
    /// stores it starting at the smallest neighbour. The outer face is 0.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::RotationMismatch {
                vertex: rotation.len().min(graph.n()),
            });
        }
        let mut canon = Vec::with_capacity(rotation.len());
        for (v, r) in rotation.into_iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::RotationMismatch { vertex: v });
            }
            canon.push(canonical_rotation(r));
        }
        Ok(PlaneGraph {
            graph,
            rotation: canon,
            outer_face: 0,
        })
    }

    /// Like [`PlaneGraph::new`] but also requires a genus-0 rotation system.
    pub fn new_planar(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let pg = PlaneGraph::new(graph, rotation)?;
        pg.faces()?;
        Ok(pg)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// Sets the outer face id, checking it against the face walk.
    pub fn with_outer_face(mut self, face: usize) -> Result<Self> {
        let count = self.walk_faces().len();
        if face >= count {
            return Err(Error::InvalidFace { face, count });
        }
        self.outer_face = face;
        Ok(self)
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.rotation[v]
            .iter()
            .position(|&x| x == w)
            .expect("dart endpoints are adjacent")
    }

    /// Clockwise successor of `w` around `v`.
    pub fn succ(&self, v: usize, w: usize) -> usize {
        let r = &self.rotation[v];
        r[(self.position(v, w) + 1) % r.len()]
    }

    /// Clockwise predecessor of `w` around `v`.
    pub fn pred(&self, v: usize, w: usize) -> usize {
        let r = &self.rotation[v];
        r[(self.position(v, w) + r.len() - 1) % r.len()]
    }

    /// All face cycles of the rotation system, without any planarity check.
    pub(crate) fn walk_faces(&self) -> Vec<Face> {
        let n = self.n();
        let offsets: Vec<usize> = self
            .rotation
            .iter()
            .scan(0, |acc, r| {
                let o = *acc;
                *acc += r.len();
                Some(o)
            })
            .collect();
        let mut seen = vec![false; 2 * self.m()];
        let mut faces = Vec::new();
        for v in 0..n {
            for (i, &w) in self.rotation[v].iter().enumerate() {
                if seen[offsets[v] + i] {
                    continue;
                }
                let mut darts = Vec::new();
                let (mut a, mut b, mut idx) = (v, w, offsets[v] + i);
                while !seen[idx] {
                    seen[idx] = true;
                    darts.push((a, b));
                    let pos = self.position(b, a);
                    let r = &self.rotation[b];
                    let next_pos = (pos + 1) % r.len();
                    let c = r[next_pos];
                    idx = offsets[b] + next_pos;
                    a = b;
                    b = c;
                }
                faces.push(Face {
                    id: faces.len(),
                    darts,
                });
            }
        }
        faces
    }

    /// `n - m + f` for the face walk.
    pub fn euler_characteristic(&self) -> i64 {
        self.n() as i64 - self.m() as i64 + self.walk_faces().len() as i64
    }

    /// All faces, numbered in discovery order (vertices ascending, darts in
    /// rotation order). Fails on disconnected graphs and on rotation systems
    /// that are not planar.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let faces = self.walk_faces();
        // An isolated vertex has no darts but still bounds one face.
        let f = faces.len().max(1) as i64;
        let euler = self.n() as i64 - self.m() as i64 + f;
        if euler != 2 {
            return Err(Error::NotPlanar { euler });
        }
        Ok(faces)
    }

    pub fn is_planar(&self) -> bool {
        self.faces().is_ok()
    }

    /// The designated outer face.
    pub fn outer(&self) -> Result<Face> {
        let mut faces = self.faces()?;
        let count = faces.len();
        if self.outer_face >= count {
            return Err(Error::InvalidFace {
                face: self.outer_face,
                count,
            });
        }
        Ok(faces.swap_remove(self.outer_face))
    }

    /// Lowest face id whose boundary contains the dart `u → v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.walk_faces()
            .iter()
            .find(|f| f.contains_dart(u, v))
            .map(|f| f.id)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()` and
    /// the outer face of `self` is kept by id.
    pub(crate) fn disjoint_union_rotations(&self, other: &PlaneGraph) -> (Graph, Vec<Vec<usize>>) {
        let off = self.n();
        let g = self.graph.disjoint_union(&other.graph);
        let mut rot = self.rotation.clone();
        rot.extend(
            other
                .rotation
                .iter()
                .map(|r| r.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        (g, rot)
    }
}

/// Reverses every rotation. The new outer face is the reversal of the old one.
pub fn mirror_embedding(pg: &PlaneGraph) -> PlaneGraph {
    let rotation: Vec<Vec<usize>> = pg
        .rotation
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    let first_dart = pg
        .walk_faces()
        .into_iter()
        .nth(pg.outer_face)
        .and_then(|f| f.darts.first().copied());
    let mut out = PlaneGraph::new(pg.graph.clone(), rotation).expect("same neighbourhoods");
    if let Some((a, b)) = first_dart {
        out.outer_face = out.face_of_dart(b, a).unwrap_or(0);
    }
    out
}

/// Makes the lowest-id face traversing `{u, v}` the outer face.
pub fn set_outer_face_containing(pg: &PlaneGraph, u: usize, v: usize) -> Result<PlaneGraph> {
    if !pg.graph.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let faces = pg.faces()?;
    let id = faces
        .iter()
        .find(|f| f.contains_edge(u, v))
        .map(|f| f.id)
        .expect("every edge lies on a face");
    let mut out = pg.clone();
    out.outer_face = id;
    Ok(out)
}

/// Computes a clockwise rotation system from straight-line coordinates.
///
/// Used by the instance generators; the caller is responsible for the drawing
/// being crossing-free.
pub fn rotation_from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let (x0, y0) = coords[v];
            let mut ns: Vec<(f64, usize)> = g
                .neighbors(v)
                .iter()
                .map(|&w| {
                    let (x, y) = coords[w];
                    ((y - y0).atan2(x - x0), w)
                })
                .collect();
            // decreasing angle is clockwise
            ns.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
            ns.into_iter().map(|(_, w)| w).collect()
        })
        .collect()
}
