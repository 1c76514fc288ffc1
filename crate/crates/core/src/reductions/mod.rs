//! Certificate-producing transformations and the pipelines built from them.
//!
//! Every operation keeps the vertex ids of its input and appends new
//! vertices, so the relabeling map of each step is the identity on the old
//! ids.

mod evenize;
mod insertion;
mod merge;
mod regular5;
pub(crate) mod splice;
mod stack;
mod trace;

use std::fmt;
use std::str::FromStr;

pub use evenize::{evenize, Evenized};
pub use insertion::{d_insertion, x_insertion, Insertion, XGadget};
pub use merge::{merge_two_factor_step, MergeInfo, MergeStep};
pub use regular5::regularize_5;
pub use stack::{
    lift_qcomplete_cycle, order_schedule, order_target_q, q_complete, stack_increment,
    QCompleteResult,
};
pub use trace::{execute, pipeline_input, replay_trace, Op, ReductionTrace, TraceStep};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{CycleCert, Graph};
use crate::io::{Body, Instance};
use crate::plane::PlaneGraph;
use crate::solvers::vertex_connectivity;
use regular5::{alternate_edges, require_even_ham};
use trace::Recorder;

/// What a pipeline produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    FourRegPlanarHam,
    EvenFourRegPlanarHam,
    FiveRegPlanarHam,
    PRegHam { p: usize },
    Ordered { p: usize },
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::FourRegPlanarHam => "4reg-planar-ham",
            Target::EvenFourRegPlanarHam => "even-4reg-planar-ham",
            Target::FiveRegPlanarHam => "5reg-planar-ham",
            Target::PRegHam { .. } => "preg-ham",
            Target::Ordered { .. } => "ordered",
        }
    }

    /// Parses a target name; `p` is required by `preg-ham` and `ordered`.
    pub fn parse(name: &str, p: Option<usize>) -> Result<Self> {
        let need_p = || {
            p.ok_or_else(|| Error::InvalidParameter(format!("target `{name}` needs --p")))
        };
        match name {
            "4reg-planar-ham" => Ok(Target::FourRegPlanarHam),
            "even-4reg-planar-ham" => Ok(Target::EvenFourRegPlanarHam),
            "5reg-planar-ham" => Ok(Target::FiveRegPlanarHam),
            "preg-ham" => Ok(Target::PRegHam { p: need_p()? }),
            "ordered" => Ok(Target::Ordered { p: need_p()? }),
            _ => Err(Error::InvalidParameter(format!("unknown target `{name}`"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::PRegHam { p } | Target::Ordered { p } => write!(f, "{} p={p}", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(" p=") {
            Some((name, p)) => {
                let p = p
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad p in `{s}`")))?;
                Target::parse(name, Some(p))
            }
            None => Target::parse(s, None),
        }
    }
}

fn hamiltonize_steps(rec: &mut Recorder) -> Result<()> {
    rec.apply(Op::TwoFactor)?;
    while rec.inst.two_factor.as_ref().is_some_and(|tf| tf.len() > 1) {
        rec.apply(Op::MergeTwoFactorStep(MergeInfo {
            cross_edge: (0, 0),
            gadget: XGadget::H,
            quad: [0; 4],
        }))?;
    }
    rec.apply(Op::CloseCycle)?;
    Ok(())
}

fn is_four_regular_plane(inst: &Instance) -> bool {
    inst.plane().is_some() && inst.graph().regular_degree() == Some(4)
}

/// Makes sure the instance carries a Hamiltonian cycle: 4-regular plane
/// inputs are hamiltonized, anything else gets an exhaustive search.
fn ensure_cycle(rec: &mut Recorder) -> Result<()> {
    if rec.inst.cycle.is_some() {
        rec.inst.require_cycle()?.require_hamiltonian(rec.inst.graph())?;
        return Ok(());
    }
    if is_four_regular_plane(&rec.inst) {
        hamiltonize_steps(rec)
    } else {
        rec.apply(Op::FindCycle).map(drop)
    }
}

fn even_steps(rec: &mut Recorder) -> Result<()> {
    ensure_cycle(rec)?;
    rec.inst.require_plane()?;
    rec.apply(Op::Evenize { edge: None })?;
    Ok(())
}

fn five_steps(rec: &mut Recorder) -> Result<()> {
    even_steps(rec)?;
    require_even_ham(rec.inst.require_plane()?, rec.inst.require_cycle()?)?;
    rec.apply(Op::CanonicalizeCycle)?;
    for (v, u) in alternate_edges(rec.inst.require_cycle()?) {
        rec.apply(Op::DInsertion { v, u })?;
    }
    Ok(())
}

fn stack_steps(rec: &mut Recorder, p: usize) -> Result<()> {
    if p >= 5 && is_four_regular_plane(&rec.inst) {
        five_steps(rec)?;
    } else {
        ensure_cycle(rec)?;
    }
    let d = rec.inst.graph().regular_degree().ok_or_else(|| {
        Error::InvalidParameter("stacking needs a regular graph".into())
    })?;
    if p < d {
        return Err(Error::InvalidParameter(format!(
            "graph is already {d}-regular, cannot reach {p}"
        )));
    }
    for _ in d..p {
        rec.apply(Op::StackIncrement)?;
    }
    Ok(())
}

fn ordered_steps(rec: &mut Recorder, p_target: usize, budget: &Budget) -> Result<()> {
    let schedule = order_schedule(p_target)?;
    ensure_cycle(rec)?;
    let d = rec.inst.graph().regular_degree().ok_or_else(|| {
        Error::InvalidParameter("ordering needs a regular graph".into())
    })?;
    let n0 = rec.inst.graph().n() as u128;
    rec.note(format!("q schedule {schedule:?} from order 3 to order {p_target}"));
    if schedule.is_empty() {
        rec.note("p = 3 is the starting order, no products needed".into());
        return Ok(());
    }
    let mut size = n0;
    for (k, &q) in schedule.iter().enumerate() {
        size = size.saturating_mul(q as u128);
        if size > budget.build {
            return Err(Error::ScheduleRefused {
                schedule: schedule.iter().map(|&q| q as u64).collect(),
                step: k + 1,
                needed: size,
                cap: budget.build,
            });
        }
    }
    let mut degree = d;
    for (k, &q) in schedule.iter().enumerate() {
        let p = 3 + k;
        rec.apply(Op::QComplete { q })?;
        degree *= q;
        let g = rec.inst.graph();
        let bound = q * (p - 1);
        let kappa = if budget.check_oracle(g.n()).is_ok() {
            let kappa = vertex_connectivity(g);
            if kappa < bound {
                return Err(Error::InvalidCertificate(format!(
                    "connectivity {kappa} is below q(p-1) = {bound}"
                )));
            }
            format!("connectivity {kappa} >= {bound}")
        } else {
            format!("connectivity bound {bound} not checked (n > oracle cap)")
        };
        rec.note(format!(
            "order {p} -> {}: q = {q}, n = {}, degree = {degree}, {kappa}",
            p + 1,
            g.n()
        ));
    }
    Ok(())
}

/// Runs the pipeline for `target` on `inst` and returns the certified output
/// together with its trace.
pub fn run_pipeline(
    inst: &Instance,
    target: Target,
    budget: &Budget,
) -> Result<(Instance, ReductionTrace)> {
    let mut rec = Recorder::new(&target.to_string(), inst, budget);
    match target {
        Target::FourRegPlanarHam => {
            rec.inst.require_plane()?;
            hamiltonize_steps(&mut rec)?
        }
        Target::EvenFourRegPlanarHam => even_steps(&mut rec)?,
        Target::FiveRegPlanarHam => five_steps(&mut rec)?,
        Target::PRegHam { p } => stack_steps(&mut rec, p)?,
        Target::Ordered { p } => ordered_steps(&mut rec, p, budget)?,
    }
    Ok(rec.finish())
}

/// Computes a 2-factor and merges its cycles until one is left.
pub fn hamiltonize_4reg_planar(pg: &PlaneGraph) -> Result<(PlaneGraph, CycleCert, ReductionTrace)> {
    let (out, trace) = run_pipeline(
        &Instance::from_plane(pg.clone()),
        Target::FourRegPlanarHam,
        &Budget::default(),
    )?;
    let cycle = out.cycle.clone().expect("pipeline closes the cycle");
    match out.body {
        Body::Plane(pg) => Ok((pg, cycle, trace)),
        Body::Graph(_) => unreachable!("hamiltonization keeps the embedding"),
    }
}

/// Raises the order of `g` from 3 to `p_target` by repeated q-complete
/// products. The whole schedule is checked against the build cap before
/// anything is built.
pub fn order_pipeline(
    g: &Graph,
    c: &CycleCert,
    p_target: usize,
    budget: &Budget,
) -> Result<(Graph, CycleCert, ReductionTrace)> {
    c.require_hamiltonian(g)?;
    let inst = Instance::from_graph(g.clone()).with_cycle(c.clone());
    let (out, trace) = run_pipeline(&inst, Target::Ordered { p: p_target }, budget)?;
    let cycle = out.cycle.clone().expect("cycle is kept");
    Ok((out.graph().clone(), cycle, trace))
}
