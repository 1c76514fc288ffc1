//! Stacking two copies to raise the degree, and q-complete products.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{CycleCert, Graph};

/// `G` plus a disjoint copy `G'` (vertex `w` becomes `n + w`) plus the edges
/// `{v_i, v'_{i+1 mod n}}` along the cycle `c = (v_0, …, v_{n-1})`. Returns
/// the cycle `(v_{n-1}, v'_0, v'_{n-1}, …, v'_1, v_0, v_1, …, v_{n-2})`.
pub fn stack_increment(g: &Graph, c: &CycleCert) -> Result<(Graph, CycleCert)> {
    g.regular_degree()
        .ok_or_else(|| Error::InvalidParameter("graph is not regular".into()))?;
    c.require_hamiltonian(g)?;
    let n = g.n();
    let o = c.vertices();
    let mut out = g.disjoint_union(g);
    for i in 0..n {
        out.add_edge(o[i], n + o[(i + 1) % n])?;
    }
    let mut star = Vec::with_capacity(2 * n);
    star.push(o[n - 1]);
    star.push(n + o[0]);
    star.extend((1..n).rev().map(|i| n + o[i]));
    star.extend_from_slice(&o[..n - 1]);
    Ok((out, CycleCert(star)))
}

/// `C_q(G)`: copy `i` of vertex `v` has id `i·n + v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCompleteResult {
    pub graph: Graph,
    pub q: usize,
    pub base_n: usize,
}

impl QCompleteResult {
    pub fn vertex(&self, v: usize, copy: usize) -> usize {
        copy * self.base_n + v
    }
}

/// `q` copies of `g` with `{u^i, v^j}` for every edge `{u, v}` and all
/// `i, j`. Refuses if `q·n` exceeds the build cap.
pub fn q_complete(g: &Graph, q: usize, budget: &Budget) -> Result<QCompleteResult> {
    if q == 0 {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let n = g.n();
    budget.check_build(q as u128 * n as u128)?;
    let mut out = Graph::empty(q * n);
    for (u, v) in g.edges() {
        for i in 0..q {
            for j in 0..q {
                out.add_edge(i * n + u, j * n + v)?;
            }
        }
    }
    Ok(QCompleteResult {
        graph: out,
        q,
        base_n: n,
    })
}

/// The concatenation `(v_0^1, …, v_{n-1}^1, v_0^2, …, v_{n-1}^q)`.
pub fn lift_qcomplete_cycle(c: &CycleCert, q: usize, res: &QCompleteResult) -> Result<CycleCert> {
    if q != res.q || c.len() != res.base_n {
        return Err(Error::InvalidCertificate(format!(
            "cycle of length {} with q = {q} does not match C_{}(G) on {} base vertices",
            c.len(),
            res.q,
            res.base_n
        )));
    }
    let lifted = CycleCert(
        (0..q)
            .flat_map(|i| c.vertices().iter().map(move |&v| i * res.base_n + v))
            .collect(),
    );
    lifted.require_hamiltonian(&res.graph)?;
    Ok(lifted)
}

/// `⌈22(p+1)/(p-1)⌉`
pub fn order_target_q(p: usize) -> Result<usize> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("p must be at least 3, got {p}")));
    }
    Ok((22 * (p + 1)).div_ceil(p - 1))
}

/// The copy counts used to go from order 3 to `p_target`.
pub fn order_schedule(p_target: usize) -> Result<Vec<usize>> {
    if p_target < 3 {
        return Err(Error::InvalidParameter(format!("p must be at least 3, got {p_target}")));
    }
    (3..p_target).map(order_target_q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, triangle};
    use crate::solvers::three_color;
    use crate::verify::{check_ham_cycle, check_regular};

    #[test]
    fn stacking_a_triangle() {
        let (g, c) = triangle();
        let (s, star) = stack_increment(&g, &c).unwrap();
        assert_eq!(s.n(), 6);
        assert!(check_regular(&s, 3));
        assert_eq!(star.vertices(), &[2, 3, 5, 4, 0, 1]);
        assert!(check_ham_cycle(&s, &star));
        assert!(three_color(&s).is_some());
    }

    #[test]
    fn stacking_k4_stays_uncolourable() {
        let k4 = complete(4);
        let (s, star) = stack_increment(&k4, &CycleCert(vec![0, 1, 2, 3])).unwrap();
        assert!(check_regular(&s, 4));
        assert!(check_ham_cycle(&s, &star));
        assert!(three_color(&s).is_none());
    }

    #[test]
    fn q_complete_basics() {
        let b = Budget::default();
        let k3 = complete(3);
        let one = q_complete(&k3, 1, &b).unwrap();
        assert_eq!(one.graph, k3);
        let two = q_complete(&k3, 2, &b).unwrap();
        assert_eq!((two.graph.n(), two.graph.m()), (6, 12));
        assert!(check_regular(&two.graph, 4));
        let c = lift_qcomplete_cycle(&CycleCert(vec![0, 1, 2]), 2, &two).unwrap();
        assert_eq!(c.len(), 6);
        assert!(q_complete(&k3, 0, &b).is_err());
        let tight = Budget { build: 5, ..b };
        assert!(q_complete(&k3, 2, &tight).unwrap_err().is_refusal());
    }

    #[test]
    fn targets() {
        assert_eq!(order_target_q(3).unwrap(), 44);
        assert_eq!(order_target_q(4).unwrap(), 37);
        assert_eq!(order_target_q(23).unwrap(), 24);
        assert!(order_target_q(2).is_err());
        assert_eq!(order_schedule(5).unwrap(), vec![44, 37]);
        assert!(order_schedule(3).unwrap().is_empty());
    }
}
