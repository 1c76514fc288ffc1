//! Certificate checks. These re-derive everything from the raw adjacency and
//! rotation data and do not call into the constructions.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Coloring, CycleCert, Graph, TwoFactorCert};
use crate::plane::PlaneGraph;
use crate::solvers::{three_color, vertex_connectivity};

pub fn check_regular(g: &Graph, p: usize) -> bool {
    (0..g.n()).all(|v| g.degree(v) == p)
}

/// Rotations are permutations of the neighbourhoods and the face walk
/// satisfies `n - m + f = 2`.
pub fn check_plane(pg: &PlaneGraph) -> Result<bool> {
    let g = pg.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..n {
        let rot = pg.rotation(v);
        let mut sorted = rot.to_vec();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Ok(false);
        }
        for (i, &w) in rot.iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let mut visited: HashMap<(usize, usize), bool> = pos.keys().map(|&d| (d, false)).collect();
    let mut darts: Vec<(usize, usize)> = pos.keys().copied().collect();
    darts.sort_unstable();
    let mut faces = 0i64;
    for start in darts {
        if visited[&start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !visited[&d] {
            visited.insert(d, true);
            let (a, b) = d;
            let rot = pg.rotation(b);
            let next = rot[(pos[&(b, a)] + 1) % rot.len()];
            d = (b, next);
        }
    }
    let faces = faces.max(1);
    Ok(n as i64 - g.m() as i64 + faces == 2)
}

pub fn check_ham_cycle(g: &Graph, c: &CycleCert) -> bool {
    let n = g.n();
    let order = c.vertices();
    if order.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]))
}

/// Validity of a total colouring; a colouring of the wrong length is an
/// error rather than a negative answer.
pub fn check_coloring(g: &Graph, f: &Coloring) -> Result<bool> {
    if f.len() != g.n() {
        return Err(Error::InvalidCertificate(format!(
            "colouring covers {} of {} vertices",
            f.len(),
            g.n()
        )));
    }
    Ok(f.0.iter().all(|c| (1..=3).contains(c)) && g.edges().all(|(u, v)| f.0[u] != f.0[v]))
}

pub fn check_two_factor(g: &Graph, tf: &TwoFactorCert) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut covered = 0;
    for c in &tf.cycles {
        let k = c.len();
        if k < 3 {
            return false;
        }
        for &v in c.vertices() {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
            covered += 1;
        }
        let o = c.vertices();
        if !(0..k).all(|i| g.has_edge(o[i], o[(i + 1) % k])) {
            return false;
        }
    }
    covered == n
}

/// Whether both graphs are 3-colourable or neither is. Refuses graphs above
/// the oracle cap.
pub fn check_equiv_small(g: &Graph, g2: &Graph, budget: &Budget) -> Result<bool> {
    budget.check_oracle(g.n())?;
    budget.check_oracle(g2.n())?;
    Ok(three_color(g).is_some() == three_color(g2).is_some())
}

pub fn check_connectivity_at_least(g: &Graph, k: usize) -> bool {
    vertex_connectivity(g) >= k
}

/// Vertex connectivity by trying every vertex subset in order of size.
/// Only meant as a cross-check on small graphs.
pub fn brute_force_connectivity(g: &Graph, budget: &Budget) -> Result<usize> {
    let n = g.n();
    budget.check_brute_force(n)?;
    if n <= 1 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let connected = |alive: u32| -> bool {
        let start = alive.trailing_zeros();
        let mut reach = 1u32 << start;
        loop {
            let mut grow = reach;
            let mut rest = reach;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow |= adj[v] & alive;
            }
            if grow == reach {
                return reach == alive;
            }
            reach = grow;
        }
    };
    for size in 0..n - 1 {
        for removed in 0..=full {
            if removed.count_ones() as usize == size && !connected(full & !removed) {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}
