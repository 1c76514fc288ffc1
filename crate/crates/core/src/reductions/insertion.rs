//! X-insertions (X = H or S) and D-insertions.

use serde::{Deserialize, Serialize};

use super::splice::{splice, Attach, Spliced};
use crate::error::{Error, Result};
use crate::gadgets::{builtin_gadget, Gadget, GadgetName};
use crate::plane::{mirror_embedding, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum XGadget {
    H,
    S,
}

impl XGadget {
    pub fn name(self) -> GadgetName {
        match self {
            XGadget::H => GadgetName::H,
            XGadget::S => GadgetName::S,
        }
    }
}

/// Result of splicing one gadget copy into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub plane: PlaneGraph,
    /// Gadget vertex id to output vertex id; host ids are unchanged.
    pub gadget_map: Vec<usize>,
}

impl From<Spliced> for Insertion {
    fn from(s: Spliced) -> Self {
        Insertion {
            plane: s.plane,
            gadget_map: s.map,
        }
    }
}

/// Tries the gadget in both orientations and keeps the first planar result.
pub(crate) fn first_planar<F>(gadget: &Gadget, mut attempt: F) -> Result<Option<Spliced>>
where
    F: FnMut(&PlaneGraph) -> Result<Spliced>,
{
    let mirrored = mirror_embedding(&gadget.plane);
    for plane in [&gadget.plane, &mirrored] {
        let s = attempt(plane)?;
        if s.plane.is_planar() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn require_edge(pg: &PlaneGraph, a: usize, b: usize) -> Result<()> {
    pg.graph().check_vertex(a)?;
    pg.graph().check_vertex(b)?;
    if pg.graph().has_edge(a, b) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(a, b))
    }
}

/// Degree of every host vertex after the splice, compared to `expected`.
fn check_degrees(before: &PlaneGraph, after: &PlaneGraph, expected: impl Fn(usize) -> usize) -> Result<()> {
    for v in 0..before.n() {
        let want = expected(v);
        let have = after.graph().degree(v);
        if have != want {
            return Err(Error::CorruptGadget(format!(
                "host vertex {v} ends with degree {have}, expected {want}"
            )));
        }
    }
    Ok(())
}

/// X-insertion at `(v', v, u, u')`: deletes `{v',v}`, `{v,u}`, `{u,u'}`, adds
/// a copy of X and identifies `y' ≡ v'`, `x' ≡ v`, `x ≡ u`, `y ≡ u'`.
///
/// The two edges removed at `v` (and at `u`) must be consecutive in its
/// rotation, so that the gadget can take their place.
pub fn x_insertion(pg: &PlaneGraph, quad: [usize; 4], which: XGadget) -> Result<Insertion> {
    let [vp, v, u, up] = quad;
    for (a, b) in [(vp, v), (v, u), (u, up)] {
        require_edge(pg, a, b)?;
    }
    let mut sorted = quad;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter(format!("quadruple {quad:?} repeats a vertex")));
    }
    let gadget = builtin_gadget(which.name());
    let delete = [(vp, v), (v, u), (u, up)];
    let attach = [
        Attach { gv: gadget.label("y'")?, host: vp, anchor: None },
        Attach { gv: gadget.label("x'")?, host: v, anchor: None },
        Attach { gv: gadget.label("x")?, host: u, anchor: None },
        Attach { gv: gadget.label("y")?, host: up, anchor: None },
    ];
    let spliced = first_planar(&gadget, |plane| splice(pg, plane, &delete, &attach, &[]))?
        .ok_or_else(|| {
            Error::GeometryMismatch(format!(
                "{} does not fit the faces around {quad:?}",
                which.name()
            ))
        })?;
    check_degrees(pg, &spliced.plane, |w| pg.graph().degree(w))?;
    Ok(spliced.into())
}

/// D-insertion at the edge `{v, u}`: adds a copy of D with `x ≡ v` and
/// `y ≡ u`. The copy goes into one of the two faces along the edge.
pub fn d_insertion(pg: &PlaneGraph, e: (usize, usize)) -> Result<Insertion> {
    let (v, u) = e;
    require_edge(pg, v, u)?;
    let gadget = builtin_gadget(GadgetName::D);
    let x = gadget.label("x")?;
    let y = gadget.label("y")?;
    let sides = [
        (pg.pred(v, u), v),
        (u, pg.pred(u, v)),
    ];
    for (at_v, at_u) in sides {
        let attach = [
            Attach { gv: x, host: v, anchor: Some(at_v) },
            Attach { gv: y, host: u, anchor: Some(at_u) },
        ];
        if let Some(s) = first_planar(&gadget, |plane| splice(pg, plane, &[], &attach, &[]))? {
            let deg = |w: usize| pg.graph().degree(w) + usize::from(w == v || w == u);
            check_degrees(pg, &s.plane, deg)?;
            return Ok(s.into());
        }
    }
    Err(Error::GeometryMismatch(format!("D does not fit along {{{v}, {u}}}")))
}
