//! D-insertions along every other Hamiltonian edge.

use super::insertion::d_insertion;
use crate::error::{Error, Result};
use crate::gadgets::{builtin_paths, GadgetName};
use crate::graph::CycleCert;
use crate::plane::PlaneGraph;

/// D-insertion at `{v, u}` that also reroutes `c` through the new copy of D
/// when `{v, u}` is a cycle edge.
pub(crate) fn d_insertion_along(
    pg: &PlaneGraph,
    c: Option<&CycleCert>,
    e: (usize, usize),
) -> Result<(PlaneGraph, Option<CycleCert>)> {
    let ins = d_insertion(pg, e)?;
    let (v, u) = e;
    let path: Vec<usize> = builtin_paths(GadgetName::D, 0)[0]
        .iter()
        .map(|&t| ins.gadget_map[t])
        .collect();
    let inner = &path[1..path.len() - 1];
    let cycle = c.and_then(|c| {
        let o = c.vertices();
        let k = o.len();
        let i = (0..k).find(|&i| {
            let (a, b) = (o[i], o[(i + 1) % k]);
            (a, b) == (v, u) || (a, b) == (u, v)
        })?;
        let mut out = Vec::with_capacity(k + inner.len());
        out.extend_from_slice(&o[..=i]);
        // the path runs x ≡ v to y ≡ u
        if o[i] == v {
            out.extend_from_slice(inner);
        } else {
            out.extend(inner.iter().rev());
        }
        out.extend_from_slice(&o[i + 1..]);
        Some(CycleCert(out))
    });
    Ok((ins.plane, cycle))
}

pub(crate) fn require_even_ham(pg: &PlaneGraph, c: &CycleCert) -> Result<()> {
    let g = pg.graph();
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    g.require_regular(4)?;
    pg.faces()?;
    c.require_hamiltonian(g)
}

/// The insertion edges `{c_0, c_1}, {c_2, c_3}, …` of the canonical cycle.
pub(crate) fn alternate_edges(c: &CycleCert) -> Vec<(usize, usize)> {
    c.vertices().chunks(2).map(|p| (p[0], p[1])).collect()
}

/// Turns an even 4-regular plane Hamiltonian graph into a 5-regular one.
/// The cycle is canonicalised first (see [`CycleCert::canonical`]) and a
/// copy of D goes on each edge `{c_{2i}, c_{2i+1}}`. The returned cycle
/// detours through every copy along D's stored x–y path.
pub fn regularize_5(pg: &PlaneGraph, c: &CycleCert) -> Result<(PlaneGraph, CycleCert)> {
    require_even_ham(pg, c)?;
    let canon = c.canonical();
    let mut plane = pg.clone();
    let mut cycle = canon.clone();
    for e in alternate_edges(&canon) {
        let (p, c2) = d_insertion_along(&plane, Some(&cycle), e)?;
        plane = p;
        cycle = c2.expect("insertion edge lies on the cycle");
    }
    Ok((plane, cycle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::generate::octahedron;
    use crate::solvers::{hamiltonian_cycle, three_color};
    use crate::verify::{check_ham_cycle, check_plane, check_regular};

    #[test]
    fn octahedron_becomes_five_regular() {
        let pg = octahedron();
        let c = hamiltonian_cycle(pg.graph(), &Budget::default()).unwrap().unwrap();
        let (out, cycle) = regularize_5(&pg, &c).unwrap();
        let g = out.graph();
        assert_eq!(g.n(), 6 + 3 * 24);
        assert!(check_regular(g, 5));
        assert!(check_plane(&out).unwrap());
        assert!(check_ham_cycle(g, &cycle));
        assert!(three_color(g).is_some());
    }

    #[test]
    fn odd_order_is_rejected() {
        let pg = crate::generate::medial(&crate::generate::prism(3).unwrap()).unwrap();
        let c = hamiltonian_cycle(pg.graph(), &Budget::default()).unwrap().unwrap();
        assert_eq!(regularize_5(&pg, &c), Err(Error::OddOrder(9)));
    }
}
