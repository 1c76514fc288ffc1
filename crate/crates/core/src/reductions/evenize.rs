//! Doubling an odd 4-regular plane graph through two W copies.

use super::insertion::first_planar;
use super::merge::path_around;
use super::splice::{splice, Attach, Transfer};
use crate::error::{Error, Result};
use crate::gadgets::{builtin_gadget, builtin_paths, GadgetName};
use crate::graph::CycleCert;
use crate::plane::{mirror_embedding, PlaneGraph};

/// Result of [`evenize`] on an odd input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evenized {
    pub plane: PlaneGraph,
    pub cycle: CycleCert,
    /// The cycle edge `{u, v}` the two copies are joined at, `None` when the
    /// input was already even.
    pub edge: Option<(usize, usize)>,
}

/// Even inputs are returned unchanged. For odd `n`, a mirrored copy `G'`
/// (vertex `w` becomes `n + w`) is joined to `G` through two copies of W at
/// the lexicographically smallest cycle edge `{u, v}` where they fit (the
/// next edge is tried on a geometry mismatch): one identifies
/// `x ≡ u`, `y ≡ u'`, the other `y ≡ v`, `x ≡ v'`, and each takes over two
/// edges at every identified vertex. The result has `2n + 26` vertices.
pub fn evenize(pg: &PlaneGraph, c: &CycleCert) -> Result<Evenized> {
    let g = pg.graph();
    g.require_regular(4)?;
    pg.faces()?;
    c.require_hamiltonian(g)?;
    let n = g.n();
    if n.is_multiple_of(2) {
        return Ok(Evenized {
            plane: pg.clone(),
            cycle: c.clone(),
            edge: None,
        });
    }
    let mut edges: Vec<(usize, usize)> = c.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    let mut last = None;
    for e in edges {
        match evenize_at(pg, c, e) {
            Err(err @ Error::GeometryMismatch(_)) => last = Some(err),
            other => return other,
        }
    }
    Err(last.expect("cycle has edges"))
}

fn evenize_at(pg: &PlaneGraph, c: &CycleCert, (u, v): (usize, usize)) -> Result<Evenized> {
    let n = pg.n();

    // clockwise around u from v: v, u1, u2, u3; counter-clockwise around v
    // from u: u, v1, v2, v3
    let u2 = pg.succ(u, pg.succ(u, v));
    let u3 = pg.succ(u, u2);
    let v2 = pg.pred(v, pg.pred(v, u));
    let v3 = pg.pred(v, v2);

    let mirrored = mirror_embedding(pg);
    let (union_g, union_rot) = pg.disjoint_union_rotations(&mirrored);
    let union = PlaneGraph::new(union_g, union_rot)?;
    let sh = |w: usize| w + n;

    let w = builtin_gadget(GadgetName::W);
    let (x, y, x0, y0) = (w.label("x")?, w.label("y")?, w.label("x0")?, w.label("y0")?);

    let mut found = None;
    let wa_mirror = mirror_embedding(&w.plane);
    'outer: for wa in [&w.plane, &wa_mirror] {
        let first = splice(
            &union,
            wa,
            &[],
            &[
                Attach { gv: x, host: u, anchor: None },
                Attach { gv: y, host: sh(u), anchor: None },
            ],
            &[
                Transfer { gv: x0, host: u, take: vec![u2, u3] },
                Transfer { gv: y0, host: sh(u), take: vec![sh(u2), sh(u3)] },
            ],
        )?;
        let second = first_planar(&w, |wb| {
            splice(
                &first.plane,
                wb,
                &[],
                &[
                    Attach { gv: y, host: v, anchor: None },
                    Attach { gv: x, host: sh(v), anchor: None },
                ],
                &[
                    Transfer { gv: y0, host: v, take: vec![v2, v3] },
                    Transfer { gv: x0, host: sh(v), take: vec![sh(v2), sh(v3)] },
                ],
            )
        })?;
        if let Some(second) = second {
            found = Some((first.map, second));
            break 'outer;
        }
    }
    let (map_a, second) = found.ok_or_else(|| {
        Error::GeometryMismatch(format!("W does not fit at the cycle edge {{{u}, {v}}}"))
    })?;
    let map_b = &second.map;
    let out = second.plane;
    if out.graph().regular_degree() != Some(4) {
        return Err(Error::CorruptGadget("evenized graph is not 4-regular".into()));
    }

    // cycle through G from u to v, both W copies and G' from v' to u'
    let pg_path = path_around(c, u, v);
    let a = pg_path[1];
    let b = pg_path[n - 2];
    let via_a0 = a == u2 || a == u3;
    let via_b0 = b == v2 || b == v3;
    let route = |map: &[usize], index: usize| -> Vec<usize> {
        builtin_paths(GadgetName::W, index)[0]
            .iter()
            .map(|&t| map[t])
            .collect()
    };
    // path system 0 is x–y, 1 is x0–y0
    let wa_path = route(&map_a, usize::from(via_a0));
    let wb_path = route(map_b, usize::from(via_b0));

    let mut order: Vec<usize> = pg_path.clone();
    order[0] = wa_path[0];
    order[n - 1] = *wb_path.last().unwrap();
    // W-B runs x/x0 (on G') to y/y0 (on G); walk it backwards
    order.extend(wb_path[1..wb_path.len() - 1].iter().rev());
    let mut copy: Vec<usize> = pg_path.iter().rev().map(|&t| sh(t)).collect();
    copy[0] = wb_path[0];
    copy[n - 1] = *wa_path.last().unwrap();
    order.extend(copy);
    // W-A runs x/x0 (on G) to y/y0 (on G'); walk it backwards
    order.extend(wa_path[1..wa_path.len() - 1].iter().rev());

    let cycle = CycleCert(order);
    cycle.require_hamiltonian(out.graph())?;
    Ok(Evenized {
        plane: out,
        cycle,
        edge: Some((u, v)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::generate::{medial, octahedron, prism};
    use crate::solvers::{hamiltonian_cycle, three_color};
    use crate::verify::{check_ham_cycle, check_plane, check_regular};

    #[test]
    fn even_input_is_unchanged() {
        let pg = octahedron();
        let c = hamiltonian_cycle(pg.graph(), &Budget::default()).unwrap().unwrap();
        let out = evenize(&pg, &c).unwrap();
        assert_eq!(out.plane, pg);
        assert_eq!(out.edge, None);
    }

    #[test]
    fn odd_nine_vertex_host() {
        let pg = medial(&prism(3).unwrap()).unwrap();
        let c = hamiltonian_cycle(pg.graph(), &Budget::default()).unwrap().unwrap();
        let out = evenize(&pg, &c).unwrap();
        let g = out.plane.graph();
        assert_eq!(g.n(), 2 * 9 + 26);
        assert!(check_regular(g, 4));
        assert!(check_plane(&out.plane).unwrap());
        assert!(check_ham_cycle(g, &out.cycle));
        assert_eq!(three_color(g).is_some(), three_color(pg.graph()).is_some());
    }

    #[test]
    fn rejects_bad_certificate() {
        let pg = medial(&prism(3).unwrap()).unwrap();
        let c = CycleCert((0..9).collect());
        assert!(matches!(evenize(&pg, &c), Err(Error::InvalidCertificate(_))));
    }
}
