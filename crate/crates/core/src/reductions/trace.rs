//! Recorded pipeline steps and their replay.

use serde::{Deserialize, Serialize};

use super::evenize::evenize;
use super::merge::{merge_two_factor_step, MergeInfo};
use super::regular5::d_insertion_along;
use super::stack::{lift_qcomplete_cycle, q_complete, stack_increment};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::io::{digest, sha256_hex, Body, Instance};
use crate::solvers::{hamiltonian_cycle, two_factor};

/// One primitive transformation of an [`Instance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "params", rename_all = "snake_case")]
pub enum Op {
    /// Replace the cycle by a 2-factor of the 4-regular plane body.
    TwoFactor,
    MergeTwoFactorStep(MergeInfo),
    /// Promote a one-cycle 2-factor to the Hamiltonian cycle.
    CloseCycle,
    /// Exhaustive Hamiltonian cycle search (small graphs only).
    FindCycle,
    Evenize { edge: Option<(usize, usize)> },
    CanonicalizeCycle,
    DInsertion { v: usize, u: usize },
    StackIncrement,
    QComplete { q: usize },
}

impl Op {
    pub fn name(&self) -> &'static str {
        match self {
            Op::TwoFactor => "two_factor",
            Op::MergeTwoFactorStep(_) => "merge_two_factor_step",
            Op::CloseCycle => "close_cycle",
            Op::FindCycle => "find_cycle",
            Op::Evenize { .. } => "evenize",
            Op::CanonicalizeCycle => "canonicalize_cycle",
            Op::DInsertion { .. } => "d_insertion",
            Op::StackIncrement => "stack_increment",
            Op::QComplete { .. } => "q_complete",
        }
    }
}

/// A step as stored in a trace: operation name, parameters, the map from
/// the step's input vertex ids to output ids, and the digest after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: String,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub params: serde_json::Value,
    pub relabel: Vec<usize>,
    pub digest: String,
}

impl TraceStep {
    fn new(op: &Op, relabel: Vec<usize>, digest: String) -> Self {
        let value = serde_json::to_value(op).expect("ops serialise");
        let params = value.get("params").cloned().unwrap_or_default();
        TraceStep {
            op: op.name().to_string(),
            params,
            relabel,
            digest,
        }
    }

    pub fn to_op(&self) -> Result<Op> {
        let mut obj = serde_json::Map::new();
        obj.insert("op".into(), self.op.clone().into());
        if !self.params.is_null() {
            obj.insert("params".into(), self.params.clone());
        }
        serde_json::from_value(obj.into())
            .map_err(|e| Error::InvalidParameter(format!("trace step `{}`: {e}", self.op)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub pipeline: String,
    pub input_digest: String,
    pub output_digest: String,
    pub steps: Vec<TraceStep>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl ReductionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("traces serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Hex SHA-256 of the compact JSON form.
    pub fn digest(&self) -> String {
        sha256_hex(serde_json::to_string(self).expect("traces serialise").as_bytes())
    }

    /// Number of steps named `op`.
    pub fn count(&self, op: &str) -> usize {
        self.steps.iter().filter(|s| s.op == op).count()
    }
}

/// The part of an instance a pipeline reads: the body and the cycle.
pub fn pipeline_input(inst: &Instance) -> Instance {
    Instance {
        body: inst.body.clone(),
        cycle: inst.cycle.clone(),
        ..Instance::from_graph(crate::graph::Graph::empty(0))
    }
}

fn need_tf(inst: &Instance) -> Result<&crate::graph::TwoFactorCert> {
    inst.two_factor
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("instance has no 2-factor".into()))
}

/// Runs `op` and returns the new instance together with the op as it was
/// actually carried out (merge steps and evenize fill in their choices).
pub fn execute(inst: &Instance, op: &Op, budget: &Budget) -> Result<(Instance, Op)> {
    let mut out = inst.clone();
    let done = match op {
        Op::TwoFactor => {
            let pg = inst.require_plane()?;
            pg.graph().require_regular(4)?;
            pg.faces()?;
            out.two_factor = Some(two_factor(pg.graph())?);
            out.cycle = None;
            op.clone()
        }
        Op::MergeTwoFactorStep(_) => {
            let step = merge_two_factor_step(inst.require_plane()?, need_tf(inst)?)?;
            out.body = Body::Plane(step.plane);
            out.two_factor = Some(step.two_factor);
            Op::MergeTwoFactorStep(step.info)
        }
        Op::CloseCycle => {
            let tf = need_tf(inst)?;
            if tf.len() != 1 {
                return Err(Error::InvalidCertificate(format!(
                    "2-factor has {} cycles, expected one",
                    tf.len()
                )));
            }
            out.cycle = Some(tf.cycles[0].clone());
            out.two_factor = None;
            op.clone()
        }
        Op::FindCycle => {
            let c = hamiltonian_cycle(inst.graph(), budget)?
                .ok_or_else(|| Error::InvalidParameter("graph is not Hamiltonian".into()))?;
            out.cycle = Some(c);
            op.clone()
        }
        Op::Evenize { .. } => {
            let e = evenize(inst.require_plane()?, inst.require_cycle()?)?;
            out.body = Body::Plane(e.plane);
            out.cycle = Some(e.cycle);
            Op::Evenize { edge: e.edge }
        }
        Op::CanonicalizeCycle => {
            out.cycle = Some(inst.require_cycle()?.canonical());
            op.clone()
        }
        &Op::DInsertion { v, u } => {
            let (pg, cycle) = d_insertion_along(inst.require_plane()?, inst.cycle.as_ref(), (v, u))?;
            if inst.cycle.is_some() && cycle.is_none() {
                return Err(Error::InvalidParameter(format!(
                    "{{{v}, {u}}} is not an edge of the cycle"
                )));
            }
            out.body = Body::Plane(pg);
            out.cycle = cycle;
            op.clone()
        }
        Op::StackIncrement => {
            budget.check_build(2 * inst.graph().n() as u128)?;
            let (g, c) = stack_increment(inst.graph(), inst.require_cycle()?)?;
            out.body = Body::Graph(g);
            out.cycle = Some(c);
            op.clone()
        }
        &Op::QComplete { q } => {
            let c = inst.require_cycle()?;
            let res = q_complete(inst.graph(), q, budget)?;
            let lifted = lift_qcomplete_cycle(c, q, &res)?;
            out.body = Body::Graph(res.graph);
            out.cycle = Some(lifted);
            op.clone()
        }
    };
    Ok((out, done))
}

/// Applies ops to an instance and records them.
pub(crate) struct Recorder<'b> {
    pub inst: Instance,
    trace: ReductionTrace,
    budget: &'b Budget,
}

impl<'b> Recorder<'b> {
    pub fn new(pipeline: &str, inst: &Instance, budget: &'b Budget) -> Self {
        let inst = pipeline_input(inst);
        let d = digest(&inst);
        Recorder {
            trace: ReductionTrace {
                pipeline: pipeline.to_string(),
                input_digest: d.clone(),
                output_digest: d,
                steps: Vec::new(),
                notes: Vec::new(),
            },
            inst,
            budget,
        }
    }

    pub fn apply(&mut self, op: Op) -> Result<Op> {
        let n = self.inst.graph().n();
        let (next, done) = execute(&self.inst, &op, self.budget)?;
        self.inst = next;
        // every op keeps the ids of its input
        let relabel = (0..n).collect();
        self.trace.steps.push(TraceStep::new(&done, relabel, digest(&self.inst)));
        Ok(done)
    }

    pub fn note(&mut self, s: String) {
        self.trace.notes.push(s);
    }

    pub fn finish(mut self) -> (Instance, ReductionTrace) {
        self.trace.output_digest = digest(&self.inst);
        (self.inst, self.trace)
    }
}

/// Re-runs every step of `trace` on `input` and checks each intermediate
/// digest. Returns the final instance.
pub fn replay_trace(input: &Instance, trace: &ReductionTrace, budget: &Budget) -> Result<Instance> {
    let mut inst = pipeline_input(input);
    if digest(&inst) != trace.input_digest {
        return Err(Error::ReplayMismatch {
            step: 0,
            message: "input digest differs".into(),
        });
    }
    for (i, step) in trace.steps.iter().enumerate() {
        let op = step.to_op()?;
        let n = inst.graph().n();
        let (next, done) = execute(&inst, &op, budget)?;
        let got = TraceStep::new(&done, (0..n).collect(), digest(&next));
        if got != *step {
            let message = if got.op != step.op || got.params != step.params {
                format!("operation became {} {}", got.op, got.params)
            } else if got.relabel != step.relabel {
                "relabeling map differs".into()
            } else {
                "digest differs".into()
            };
            return Err(Error::ReplayMismatch { step: i + 1, message });
        }
        inst = next;
    }
    if digest(&inst) != trace.output_digest {
        return Err(Error::ReplayMismatch {
            step: trace.steps.len(),
            message: "output digest differs".into(),
        });
    }
    Ok(inst)
}
