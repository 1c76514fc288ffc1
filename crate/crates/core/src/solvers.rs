//! Exact search procedures: 3-colouring, Euler circuits and 2-factors,
//! vertex connectivity, ordered-ness and path systems.

use std::collections::{HashMap, VecDeque};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Coloring, CycleCert, Graph, TwoFactorCert};

struct ColorSearch<'a> {
    g: &'a Graph,
    colors: Vec<u8>,
    domain: Vec<u8>,
}

impl ColorSearch<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .min_by_key(|&v| (self.domain[v].count_ones(), usize::MAX - self.g.degree(v), v))
    }

    fn solve(&mut self, max_used: u8) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        for c in 1..=3u8.min(max_used + 1) {
            let bit = 1 << (c - 1);
            if self.domain[v] & bit == 0 {
                continue;
            }
            self.colors[v] = c;
            let mut touched = Vec::new();
            let mut dead = false;
            for &w in self.g.neighbors(v) {
                if self.colors[w] == 0 && self.domain[w] & bit != 0 {
                    self.domain[w] &= !bit;
                    touched.push(w);
                    if self.domain[w] == 0 {
                        dead = true;
                    }
                }
            }
            if !dead && self.solve(max_used.max(c)) {
                return true;
            }
            for w in touched {
                self.domain[w] |= bit;
            }
            self.colors[v] = 0;
        }
        false
    }
}

/// A valid 3-colouring, or `None` if the graph has none.
///
/// Backtracking that always branches on the uncoloured vertex with the
/// fewest remaining colours (ties: higher degree, then lower id), with
/// forward checking and colour-symmetry breaking.
pub fn three_color(g: &Graph) -> Option<Coloring> {
    let n = g.n();
    let mut s = ColorSearch {
        g,
        colors: vec![0; n],
        domain: vec![0b111; n],
    };
    s.solve(0).then_some(Coloring(s.colors))
}

/// Iterator over all valid 3-colourings extending a partial one, in
/// lexicographic order of the colour vector.
#[derive(Debug)]
pub struct Colorings<'a> {
    g: &'a Graph,
    fixed: Vec<Option<u8>>,
    colors: Vec<u8>,
    started: bool,
    done: bool,
}

impl Iterator for Colorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            self.done = true;
            return Some(Coloring(Vec::new()));
        }
        let mut v = if self.started { n - 1 } else { 0 };
        self.started = true;
        loop {
            let mut found = false;
            while self.colors[v] < 3 {
                self.colors[v] += 1;
                let c = self.colors[v];
                if self.fixed[v].is_some_and(|f| f != c) {
                    continue;
                }
                if self
                    .g
                    .neighbors(v)
                    .iter()
                    .all(|&w| w > v || self.colors[w] != c)
                {
                    found = true;
                    break;
                }
            }
            if found {
                if v + 1 == n {
                    return Some(Coloring(self.colors.clone()));
                }
                v += 1;
                self.colors[v] = 0;
            } else {
                self.colors[v] = 0;
                if v == 0 {
                    self.done = true;
                    return None;
                }
                v -= 1;
            }
        }
    }
}

/// Every valid 3-colouring agreeing with `fixed`, lexicographically.
pub fn enumerate_colorings<'a>(
    g: &'a Graph,
    fixed: &[Option<u8>],
    budget: &Budget,
) -> Result<Colorings<'a>> {
    budget.check_enumeration(g.n())?;
    if fixed.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "partial colouring has {} entries, graph has {} vertices",
            fixed.len(),
            g.n()
        )));
    }
    if let Some(c) = fixed.iter().flatten().find(|c| !(1..=3).contains(*c)) {
        return Err(Error::InvalidParameter(format!("colour {c} is not in 1..=3")));
    }
    Ok(Colorings {
        g,
        fixed: fixed.to_vec(),
        colors: vec![0; g.n()],
        started: false,
        done: false,
    })
}

fn require_even_connected(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegree(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Closed walk through every edge once, as the vertex sequence
/// `(w_0, …, w_{m-1})` with `w_{m-1} – w_0` the closing edge. Starts at
/// vertex 0 and always takes the lowest-id unused edge.
pub fn euler_circuit(g: &Graph) -> Result<Vec<usize>> {
    require_even_connected(g)?;
    if g.m() == 0 {
        return Ok(Vec::new());
    }
    let ids: HashMap<(usize, usize), usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let mut used = vec![false; g.m()];
    let mut ptr = vec![0usize; g.n()];
    let mut stack = vec![0usize];
    let mut walk = Vec::with_capacity(g.m() + 1);
    while let Some(&v) = stack.last() {
        let ns = g.neighbors(v);
        while ptr[v] < ns.len() && used[ids[&(v.min(ns[ptr[v]]), v.max(ns[ptr[v]]))]] {
            ptr[v] += 1;
        }
        if ptr[v] < ns.len() {
            let w = ns[ptr[v]];
            used[ids[&(v.min(w), v.max(w))]] = true;
            stack.push(w);
        } else {
            walk.push(v);
            stack.pop();
        }
    }
    walk.reverse();
    walk.pop();
    Ok(walk)
}

fn permutation_cycles(next: &[usize]) -> TwoFactorCert {
    let mut seen = vec![false; next.len()];
    let mut cycles = Vec::new();
    for s in 0..next.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            c.push(v);
            v = next[v];
        }
        cycles.push(CycleCert(c));
    }
    TwoFactorCert::new(cycles)
}

/// Both halves of the Euler-orientation split of a connected 4-regular
/// graph. Their edge sets partition `E`.
pub fn euler_split(g: &Graph) -> Result<(TwoFactorCert, TwoFactorCert)> {
    g.require_regular(4)?;
    let walk = euler_circuit(g)?;
    let m = walk.len();
    let arcs: Vec<(usize, usize)> = (0..m).map(|i| (walk[i], walk[(i + 1) % m])).collect();
    let n = g.n();
    let mut outs = vec![Vec::with_capacity(2); n];
    let mut ins = vec![Vec::with_capacity(2); n];
    for (i, &(t, h)) in arcs.iter().enumerate() {
        outs[t].push(i);
        ins[h].push(i);
    }
    let other = |pair: &Vec<usize>, a: usize| if pair[0] == a { pair[1] } else { pair[0] };
    let mut class = vec![u8::MAX; m];
    for start in 0..m {
        if class[start] != u8::MAX {
            continue;
        }
        let mut a = start;
        loop {
            class[a] = 0;
            let b = other(&ins[arcs[a].1], a);
            class[b] = 1;
            let c = other(&outs[arcs[b].0], b);
            if class[c] != u8::MAX {
                break;
            }
            a = c;
        }
    }
    let mut next = [vec![0; n], vec![0; n]];
    for (i, &(t, h)) in arcs.iter().enumerate() {
        next[class[i] as usize][t] = h;
    }
    Ok((permutation_cycles(&next[0]), permutation_cycles(&next[1])))
}

/// A 2-factor of a connected 4-regular graph (the first half of
/// [`euler_split`]).
pub fn two_factor(g: &Graph) -> Result<TwoFactorCert> {
    Ok(euler_split(g)?.0)
}

struct FlowNet {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.adj[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(c);
        self.adj[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    /// Unit augmenting paths by BFS, stopping once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            via[s] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &e in &self.adj[x] {
                    let y = self.head[e];
                    if self.cap[e] > 0 && via[y] == usize::MAX {
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if via[t] == usize::MAX {
                break;
            }
            let mut y = t;
            while y != s {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally disjoint `s`–`t` paths for non-adjacent `s`, `t`,
/// capped at `limit`.
fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1);
        for &w in g.neighbors(v) {
            net.arc(2 * v + 1, 2 * w, 1);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Exact vertex connectivity: `n - 1` for complete graphs, 0 for
/// disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Disjoint paths joining the given endpoint pairs. With `cover` the paths
/// must together visit every vertex. Endpoints may only occur at the ends
/// of their own path.
pub fn find_path_system(g: &Graph, pairs: &[(usize, usize)], cover: bool) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut used = vec![false; n];
    for &(a, b) in pairs {
        if a >= n || b >= n || a == b || used[a] || used[b] {
            return None;
        }
        used[a] = true;
        used[b] = true;
    }
    let mut free = n - 2 * pairs.len();
    let mut paths: Vec<Vec<usize>> = Vec::new();

    fn rec(
        g: &Graph,
        pairs: &[(usize, usize)],
        cover: bool,
        used: &mut [bool],
        free: &mut usize,
        paths: &mut Vec<Vec<usize>>,
    ) -> bool {
        let k = paths.len() - 1;
        let cur = *paths[k].last().unwrap();
        let target = pairs[k].1;
        for &w in g.neighbors(cur) {
            if w == target {
                if k + 1 == pairs.len() {
                    if !cover || *free == 0 {
                        paths[k].push(w);
                        return true;
                    }
                    continue;
                }
                paths[k].push(w);
                paths.push(vec![pairs[k + 1].0]);
                if rec(g, pairs, cover, used, free, paths) {
                    return true;
                }
                paths.pop();
                paths[k].pop();
            } else if !used[w] {
                used[w] = true;
                *free -= 1;
                paths[k].push(w);
                if rec(g, pairs, cover, used, free, paths) {
                    return true;
                }
                paths[k].pop();
                *free += 1;
                used[w] = false;
            }
        }
        false
    }

    if pairs.is_empty() {
        return (!cover || n == 0).then(Vec::new);
    }
    paths.push(vec![pairs[0].0]);
    rec(g, pairs, cover, &mut used, &mut free, &mut paths).then_some(paths)
}

/// Some cycle visits the tuple's vertices in the given cyclic order.
pub fn tuple_is_ordered(g: &Graph, tuple: &[usize]) -> Result<bool> {
    let p = tuple.len();
    if p < 3 {
        return Err(Error::InvalidParameter(format!("tuple needs at least 3 vertices, got {p}")));
    }
    for &v in tuple {
        g.check_vertex(v)?;
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p {
        return Err(Error::InvalidParameter("tuple vertices must be distinct".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..p).map(|i| (tuple[i], tuple[(i + 1) % p])).collect();
    Ok(chain_paths(g, &pairs))
}

/// Internally disjoint paths `t_0 → t_1 → … → t_{p-1} → t_0` that avoid the
/// other tuple vertices.
fn chain_paths(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &(a, _) in pairs {
        blocked[a] = true;
    }

    fn rec(g: &Graph, pairs: &[(usize, usize)], k: usize, cur: usize, blocked: &mut [bool]) -> bool {
        let target = pairs[k].1;
        for &w in g.neighbors(cur) {
            if w == target {
                if k + 1 == pairs.len() || rec(g, pairs, k + 1, target, blocked) {
                    return true;
                }
            } else if !blocked[w] {
                blocked[w] = true;
                let ok = rec(g, pairs, k, w, blocked);
                blocked[w] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }

    rec(g, pairs, 0, pairs[0].0, &mut blocked)
}

/// Whether every ordered `p`-tuple of distinct vertices lies on a cycle in
/// that cyclic order. Refuses graphs above the brute-force cap.
pub fn is_p_ordered_small(g: &Graph, p: usize, budget: &Budget) -> Result<bool> {
    budget.check_brute_force(g.n())?;
    if p < 3 || p > g.n() {
        return Err(Error::InvalidParameter(format!(
            "need 3 <= p <= n, got p = {p}, n = {}",
            g.n()
        )));
    }
    let n = g.n();
    let mut tuple = Vec::with_capacity(p);
    let mut in_tuple = vec![false; n];

    // Cyclic rotations of a tuple are equivalent, so the first entry is
    // taken to be the smallest.
    fn rec(g: &Graph, p: usize, tuple: &mut Vec<usize>, in_tuple: &mut [bool]) -> bool {
        if tuple.len() == p {
            let pairs: Vec<(usize, usize)> = (0..p).map(|i| (tuple[i], tuple[(i + 1) % p])).collect();
            return chain_paths(g, &pairs);
        }
        let lo = tuple.first().map_or(0, |&f| f + 1);
        for v in lo..g.n() {
            if in_tuple[v] {
                continue;
            }
            in_tuple[v] = true;
            tuple.push(v);
            let ok = rec(g, p, tuple, in_tuple);
            tuple.pop();
            in_tuple[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    Ok(rec(g, p, &mut tuple, &mut in_tuple))
}

/// A Hamiltonian cycle by exhaustive search, or `None` if there is none.
pub fn hamiltonian_cycle(g: &Graph, budget: &Budget) -> Result<Option<CycleCert>> {
    budget.check_brute_force(g.n())?;
    let n = g.n();
    if n < 3 {
        return Ok(None);
    }
    let mut seen = vec![false; n];
    let mut order = vec![0];
    seen[0] = true;

    fn rec(g: &Graph, seen: &mut [bool], order: &mut Vec<usize>) -> bool {
        let cur = *order.last().unwrap();
        if order.len() == g.n() {
            return g.has_edge(cur, order[0]);
        }
        for &w in g.neighbors(cur) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                if rec(g, seen, order) {
                    return true;
                }
                order.pop();
                seen[w] = false;
            }
        }
        false
    }

    let found = rec(g, &mut seen, &mut order);
    Ok(found.then_some(CycleCert(order)))
}
