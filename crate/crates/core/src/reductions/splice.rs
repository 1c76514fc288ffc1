//! Rotation surgery shared by every gadget insertion.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::plane::PlaneGraph;

/// Identify gadget vertex `gv` with host vertex `host`. The gadget's edges
/// at `gv` are placed in the host rotation right after `anchor`; without an
/// anchor they take the place of the edges `host` loses.
#[derive(Debug, Clone)]
pub(crate) struct Attach {
    pub gv: usize,
    pub host: usize,
    pub anchor: Option<usize>,
}

/// Move the host edges `host – w`, `w ∈ take`, onto the fresh gadget vertex
/// `gv`.
#[derive(Debug, Clone)]
pub(crate) struct Transfer {
    pub gv: usize,
    pub host: usize,
    pub take: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct Spliced {
    pub plane: PlaneGraph,
    /// Gadget vertex id to output vertex id.
    pub map: Vec<usize>,
}

/// Rotation of `gv` read clockwise, starting just after the outer-face
/// corner at `gv`.
fn opened_rotation(gadget: &PlaneGraph, gv: usize) -> Result<Vec<usize>> {
    let outer = gadget.outer()?;
    let &(p, _) = outer
        .darts
        .iter()
        .find(|&&(_, b)| b == gv)
        .ok_or_else(|| Error::CorruptGadget(format!("vertex {gv} is not on the outer face")))?;
    let mut out = Vec::with_capacity(gadget.graph().degree(gv));
    let mut w = gadget.succ(gv, p);
    loop {
        out.push(w);
        if w == p {
            break;
        }
        w = gadget.succ(gv, w);
    }
    Ok(out)
}

/// The neighbour right before the contiguous block `removed` in `rot`.
fn anchor_before(rot: &[usize], removed: &BTreeSet<usize>, host: usize) -> Result<usize> {
    let k = rot.len();
    let starts: Vec<usize> = (0..k)
        .filter(|&i| !removed.contains(&rot[i]) && removed.contains(&rot[(i + 1) % k]))
        .collect();
    match starts.as_slice() {
        [i] => Ok(rot[*i]),
        _ => Err(Error::GeometryMismatch(format!(
            "edges removed at vertex {host} are not consecutive in its rotation"
        ))),
    }
}

/// Deletes `delete` from the host, adds the gadget, performs the attachments
/// and transfers and rebuilds the rotation system. Host ids are kept; new
/// gadget vertices are appended in gadget order. Planarity is not checked
/// here.
pub(crate) fn splice(
    host: &PlaneGraph,
    gadget: &PlaneGraph,
    delete: &[(usize, usize)],
    attach: &[Attach],
    transfers: &[Transfer],
) -> Result<Spliced> {
    let hn = host.n();
    let gn = gadget.n();
    let hg = host.graph();
    for &(a, b) in delete {
        if !hg.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
    }

    let mut map = vec![usize::MAX; gn];
    for a in attach {
        hg.check_vertex(a.host)?;
        map[a.gv] = a.host;
    }
    let mut next = hn;
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }

    let mut removed: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); hn];
    for &(a, b) in delete {
        removed[a].insert(b);
        removed[b].insert(a);
    }
    for t in transfers {
        for &w in &t.take {
            if !hg.has_edge(t.host, w) {
                return Err(Error::NotAnEdge(t.host, w));
            }
            removed[t.host].insert(w);
        }
    }

    let mut rot: Vec<Vec<usize>> = host.rotations().to_vec();
    rot.resize(next, Vec::new());

    for a in attach {
        let h = a.host;
        let anchor = match a.anchor {
            Some(x) => x,
            None => anchor_before(host.rotation(h), &removed[h], h)?,
        };
        let block: Vec<usize> = opened_rotation(gadget, a.gv)?
            .into_iter()
            .map(|w| map[w])
            .collect();
        let mut r: Vec<usize> = host
            .rotation(h)
            .iter()
            .copied()
            .filter(|w| !removed[h].contains(w))
            .collect();
        let pos = r
            .iter()
            .position(|&w| w == anchor)
            .ok_or_else(|| Error::GeometryMismatch(format!("anchor {anchor} is not a neighbour of {h}")))?;
        r.splice(pos + 1..pos + 1, block);
        rot[h] = r;
    }

    // plain deletions at vertices that are not attachment points
    let attached: BTreeSet<usize> = attach.iter().map(|a| a.host).collect();
    for v in 0..hn {
        if !attached.contains(&v) && !removed[v].is_empty() {
            rot[v].retain(|w| !removed[v].contains(w));
        }
    }

    for t in transfers {
        let id = map[t.gv];
        let run: Vec<usize> = {
            let r = host.rotation(t.host);
            let k = r.len();
            let start = (0..k)
                .find(|&i| t.take.contains(&r[i]) && !t.take.contains(&r[(i + k - 1) % k]))
                .ok_or_else(|| Error::GeometryMismatch("transfer takes every edge".into()))?;
            (0..t.take.len()).map(|i| r[(start + i) % k]).collect()
        };
        if run.iter().any(|w| !t.take.contains(w)) {
            return Err(Error::GeometryMismatch(format!(
                "transferred edges at {} are not consecutive",
                t.host
            )));
        }
        for &w in &run {
            for x in rot[w].iter_mut() {
                if *x == t.host {
                    *x = id;
                }
            }
        }
        let mut r = run;
        r.extend(opened_rotation(gadget, t.gv)?.into_iter().map(|w| map[w]));
        rot[id] = r;
    }

    for gv in 0..gn {
        let id = map[gv];
        if id >= hn && rot[id].is_empty() {
            rot[id] = gadget.rotation(gv).iter().map(|&w| map[w]).collect();
        }
    }

    let mut edges: Vec<(usize, usize)> = hg
        .edges()
        .filter(|&(a, b)| !removed[a].contains(&b) && !removed[b].contains(&a))
        .collect();
    for t in transfers {
        for &w in &t.take {
            edges.push((map[t.gv], w));
        }
    }
    edges.extend(gadget.graph().edges().map(|(a, b)| (map[a], map[b])));
    let g = Graph::from_edges(next, edges).map_err(|e| match e {
        Error::DuplicateEdge(a, b) => {
            Error::GeometryMismatch(format!("insertion would duplicate edge {{{a}, {b}}}"))
        }
        other => other,
    })?;
    let mut plane = PlaneGraph::new(g, rot)?;
    // keep the host's outer face where possible
    if let Ok(outer) = host.outer() {
        if let Some(f) = outer
            .darts
            .iter()
            .find(|&&(a, b)| plane.graph().has_edge(a, b))
            .and_then(|&(a, b)| plane.face_of_dart(a, b))
        {
            plane = plane.with_outer_face(f)?;
        }
    }
    Ok(Spliced { plane, map })
}
