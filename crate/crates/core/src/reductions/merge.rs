//! 2-factor merging with H- and S-insertions.

use serde::{Deserialize, Serialize};

use super::insertion::{x_insertion, XGadget};
use crate::error::{Error, Result};
use crate::gadgets::builtin_paths;
use crate::graph::{CycleCert, TwoFactorCert};
use crate::plane::PlaneGraph;

/// What a merge step did, recorded in traces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeInfo {
    pub cross_edge: (usize, usize),
    pub gadget: XGadget,
    /// `(v', v, u, u')`
    pub quad: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    pub plane: PlaneGraph,
    pub two_factor: TwoFactorCert,
    pub info: MergeInfo,
}

/// The path from `a` to `b` along `cycle` that avoids the edge `{a, b}`.
pub(crate) fn path_around(cycle: &CycleCert, a: usize, b: usize) -> Vec<usize> {
    let c = cycle.vertices();
    let k = c.len();
    let i = c.iter().position(|&x| x == a).expect("a on cycle");
    if c[(i + 1) % k] == b {
        (0..k).map(|s| c[(i + k - s) % k]).collect()
    } else {
        (0..k).map(|s| c[(i + s) % k]).collect()
    }
}

fn interior(path: &[usize]) -> impl DoubleEndedIterator<Item = usize> + '_ {
    path[1..path.len() - 1].iter().copied()
}

/// One merge: joins the two cycles at the lexicographically smallest edge
/// between distinct cycles. If a cycle edge at each end of that edge lies
/// on a common face of it, an H-insertion is made there; otherwise an
/// S-insertion at cycle edges on opposite faces.
pub fn merge_two_factor_step(pg: &PlaneGraph, tf: &TwoFactorCert) -> Result<MergeStep> {
    let g = pg.graph();
    g.require_regular(4)?;
    pg.faces()?;
    let owner = tf.cycle_index(g)?;
    if tf.len() <= 1 {
        return Err(Error::NothingToMerge);
    }
    let (u, v) = g
        .edges()
        .find(|&(a, b)| owner[a] != owner[b])
        .ok_or(Error::NoCrossEdge)?;
    let (i, j) = (owner[u], owner[v]);
    let on_cycle = |a: usize, b: usize| {
        let c = tf.cycles[owner[a]].vertices();
        let k = c.len();
        let p = c.iter().position(|&x| x == a).unwrap();
        owner[b] == owner[a] && (c[(p + 1) % k] == b || c[(p + k - 1) % k] == b)
    };
    let same_face = [
        (pg.pred(u, v), pg.succ(v, u)),
        (pg.succ(u, v), pg.pred(v, u)),
    ];
    let opposite = [
        (pg.pred(u, v), pg.pred(v, u)),
        (pg.succ(u, v), pg.succ(v, u)),
    ];
    let pick = |opts: &[(usize, usize)]| {
        opts.iter()
            .copied()
            .find(|&(up, vp)| on_cycle(u, up) && on_cycle(v, vp))
    };
    let (gadget, (up, vp)) = match pick(&same_face) {
        Some(c) => (XGadget::H, c),
        None => (
            XGadget::S,
            pick(&opposite).ok_or_else(|| {
                Error::InvalidCertificate(format!("no cycle edges around {{{u}, {v}}}"))
            })?,
        ),
    };
    let quad = [vp, v, u, up];
    let ins = x_insertion(pg, quad, gadget)?;
    let map = &ins.gadget_map;
    let paths: Vec<Vec<usize>> = builtin_paths(gadget.name(), 0)
        .iter()
        .map(|p| p.iter().map(|&w| map[w]).collect())
        .collect();

    let pi = path_around(&tf.cycles[i], u, up);
    let pj = path_around(&tf.cycles[j], v, vp);
    let mut merged = pi;
    match gadget {
        // paths x–x' (u…v) and y–y' (u'…v')
        XGadget::H => {
            merged.extend(interior(&paths[1]));
            merged.extend(pj.iter().rev());
            merged.extend(interior(&paths[0]).rev());
        }
        // paths x–y' (u…v') and x'–y (v…u')
        XGadget::S => {
            merged.extend(interior(&paths[1]).rev());
            merged.extend(pj.iter());
            merged.extend(interior(&paths[0]).rev());
        }
    }

    let mut cycles = tf.cycles.clone();
    let (lo, hi) = (i.min(j), i.max(j));
    cycles[lo] = CycleCert(merged);
    cycles.remove(hi);
    Ok(MergeStep {
        plane: ins.plane,
        two_factor: TwoFactorCert::new(cycles),
        info: MergeInfo {
            cross_edge: (u, v),
            gadget,
            quad,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{antiprism, medial, prism};
    use crate::solvers::two_factor;
    use crate::verify::{check_plane, check_regular, check_two_factor};

    #[test]
    fn path_around_avoids_the_edge() {
        let c = CycleCert(vec![0, 1, 2, 3]);
        assert_eq!(path_around(&c, 1, 2), vec![1, 0, 3, 2]);
        assert_eq!(path_around(&c, 1, 0), vec![1, 2, 3, 0]);
    }

    #[test]
    fn one_step_removes_one_cycle() {
        for pg in [antiprism(5).unwrap(), medial(&prism(4).unwrap()).unwrap()] {
            let tf = two_factor(pg.graph()).unwrap();
            if tf.len() < 2 {
                continue;
            }
            let step = merge_two_factor_step(&pg, &tf).unwrap();
            assert_eq!(step.two_factor.len(), tf.len() - 1);
            let g = step.plane.graph();
            assert!(check_two_factor(g, &step.two_factor));
            assert!(check_regular(g, 4));
            assert!(check_plane(&step.plane).unwrap());
        }
    }

    #[test]
    fn single_cycle_has_nothing_to_merge() {
        let pg = antiprism(4).unwrap();
        let c = crate::solvers::hamiltonian_cycle(pg.graph(), &Default::default())
            .unwrap()
            .unwrap();
        let tf = TwoFactorCert::new(vec![c]);
        assert_eq!(merge_two_factor_step(&pg, &tf), Err(Error::NothingToMerge));
    }
}
