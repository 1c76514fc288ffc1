//! The gadget graphs L, H, S, W, D, their contracts and an exhaustive
//! contract checker.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Coloring;
use crate::io::parse_instance;
use crate::plane::PlaneGraph;
use crate::solvers::{enumerate_colorings, find_path_system};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GadgetName {
    L,
    H,
    S,
    W,
    D,
}

impl GadgetName {
    pub const ALL: [GadgetName; 5] = [
        GadgetName::L,
        GadgetName::H,
        GadgetName::S,
        GadgetName::W,
        GadgetName::D,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetName::L => "L",
            GadgetName::H => "H",
            GadgetName::S => "S",
            GadgetName::W => "W",
            GadgetName::D => "D",
        }
    }

    fn data(self) -> &'static str {
        match self {
            GadgetName::L => include_str!("../gadgets/L.txt"),
            GadgetName::H => include_str!("../gadgets/H.txt"),
            GadgetName::S => include_str!("../gadgets/S.txt"),
            GadgetName::W => include_str!("../gadgets/W.txt"),
            GadgetName::D => include_str!("../gadgets/D.txt"),
        }
    }
}

impl fmt::Display for GadgetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GadgetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetName::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownGadget(s.to_string()))
    }
}

/// A labelled plane graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub name: String,
    pub plane: PlaneGraph,
    pub labels: BTreeMap<String, usize>,
}

impl Gadget {
    pub fn label(&self, name: &str) -> Result<usize> {
        self.labels
            .get(name)
            .copied()
            .ok_or_else(|| Error::MissingLabel(name.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorRelation {
    /// Equal colours in every valid colouring.
    ForcedEqual(String, String),
    /// Different colours in every valid colouring.
    ForcedDistinct(String, String),
    /// Three different colours in every valid colouring.
    ForcedRainbow(String, String, String),
    /// Some valid colouring matches the assignment; the empty assignment
    /// just asks for 3-colourability.
    Achievable(Vec<(String, u8)>),
    /// Every ordered pair of distinct colours occurs on the two labels.
    AchievableAllPairsDistinct(String, String),
    /// Every colour occurs on the label.
    AchievableAllColors(String),
}

impl ColorRelation {
    fn operands(&self) -> Vec<&str> {
        match self {
            ColorRelation::ForcedEqual(a, b)
            | ColorRelation::ForcedDistinct(a, b)
            | ColorRelation::AchievableAllPairsDistinct(a, b) => vec![a, b],
            ColorRelation::ForcedRainbow(a, b, c) => vec![a, b, c],
            ColorRelation::Achievable(asg) => asg.iter().map(|(l, _)| l.as_str()).collect(),
            ColorRelation::AchievableAllColors(a) => vec![a],
        }
    }
}

impl fmt::Display for ColorRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorRelation::ForcedEqual(a, b) => write!(f, "forced_equal({a}, {b})"),
            ColorRelation::ForcedDistinct(a, b) => write!(f, "forced_distinct({a}, {b})"),
            ColorRelation::ForcedRainbow(a, b, c) => write!(f, "forced_rainbow({a}, {b}, {c})"),
            ColorRelation::Achievable(asg) if asg.is_empty() => write!(f, "3-colourable"),
            ColorRelation::Achievable(asg) => {
                let parts: Vec<String> = asg.iter().map(|(l, c)| format!("{l}={c}")).collect();
                write!(f, "achievable({})", parts.join(", "))
            }
            ColorRelation::AchievableAllPairsDistinct(a, b) => {
                write!(f, "achievable_all_pairs_distinct({a}, {b})")
            }
            ColorRelation::AchievableAllColors(a) => write!(f, "achievable_all_colors({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystemSpec {
    pub pairs: Vec<(String, String)>,
    pub cover: bool,
}

/// Labels that must lie on the outer face; with `ordered` they must also
/// appear in this cyclic order, read in either direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub labels: Vec<String>,
    pub ordered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetContract {
    pub vertex_count: Option<usize>,
    pub degree_spec: BTreeMap<String, usize>,
    /// Required degree of every vertex not named in `degree_spec`.
    pub other_degree: Option<usize>,
    pub required_edges: Vec<(String, String)>,
    pub color_relations: Vec<ColorRelation>,
    pub path_systems: Vec<PathSystemSpec>,
    pub boundary: Option<BoundarySpec>,
    pub planar: bool,
}

impl GadgetContract {
    fn empty() -> Self {
        GadgetContract {
            vertex_count: None,
            degree_spec: BTreeMap::new(),
            other_degree: None,
            required_edges: Vec::new(),
            color_relations: Vec::new(),
            path_systems: Vec::new(),
            boundary: None,
            planar: false,
        }
    }

    fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.degree_spec.keys().map(String::as_str).collect();
        for (a, b) in &self.required_edges {
            out.extend([a.as_str(), b.as_str()]);
        }
        for r in &self.color_relations {
            out.extend(r.operands());
        }
        for ps in &self.path_systems {
            for (a, b) in &ps.pairs {
                out.extend([a.as_str(), b.as_str()]);
            }
        }
        if let Some(b) = &self.boundary {
            out.extend(b.labels.iter().map(String::as_str));
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn s(x: &str) -> String {
    x.to_string()
}

fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter().map(|&(a, b)| (s(a), s(b))).collect()
}

fn degrees(list: &[(&str, usize)]) -> BTreeMap<String, usize> {
    list.iter().map(|&(l, d)| (s(l), d)).collect()
}

fn x_gadget_contract(paths: &[(&str, &str)], required: &[(&str, &str)]) -> GadgetContract {
    GadgetContract {
        degree_spec: degrees(&[("x", 2), ("x'", 2), ("y", 1), ("y'", 1)]),
        other_degree: Some(4),
        required_edges: pairs(required),
        color_relations: vec![
            ColorRelation::ForcedDistinct(s("x"), s("y")),
            ColorRelation::ForcedDistinct(s("x'"), s("y'")),
            ColorRelation::ForcedDistinct(s("x"), s("x'")),
            ColorRelation::Achievable(Vec::new()),
        ],
        path_systems: vec![PathSystemSpec {
            pairs: pairs(paths),
            cover: true,
        }],
        planar: true,
        ..GadgetContract::empty()
    }
}

/// The fixed contract for a built-in gadget.
pub fn builtin_contract(name: GadgetName) -> GadgetContract {
    match name {
        GadgetName::L => GadgetContract {
            vertex_count: Some(8),
            degree_spec: degrees(&[("x", 2), ("y", 1)]),
            required_edges: pairs(&[
                ("x", "x1"),
                ("x", "x2"),
                ("z", "x1"),
                ("z", "x2"),
                ("z", "y2"),
                ("z", "y3"),
                ("y1", "y2"),
                ("y1", "y3"),
                ("y", "y1"),
            ]),
            color_relations: vec![
                ColorRelation::ForcedDistinct(s("x"), s("y")),
                ColorRelation::ForcedEqual(s("x"), s("y1")),
                ColorRelation::ForcedRainbow(s("x"), s("x1"), s("y2")),
                ColorRelation::Achievable(Vec::new()),
            ],
            planar: true,
            ..GadgetContract::empty()
        },
        GadgetName::H => GadgetContract {
            boundary: Some(BoundarySpec {
                labels: vec![s("y"), s("x"), s("x'"), s("y'")],
                ordered: true,
            }),
            ..x_gadget_contract(&[("x", "x'"), ("y", "y'")], &[("y1", "y1'")])
        },
        GadgetName::S => GadgetContract {
            boundary: Some(BoundarySpec {
                labels: vec![s("x"), s("y"), s("x'"), s("y'")],
                ordered: true,
            }),
            ..x_gadget_contract(&[("x", "y'"), ("x'", "y")], &[("z", "y1"), ("z", "x1'"), ("z", "y2'")])
        },
        GadgetName::W => GadgetContract {
            vertex_count: Some(15),
            degree_spec: degrees(&[("x", 2), ("x0", 2), ("y", 2), ("y0", 2)]),
            other_degree: Some(4),
            color_relations: vec![
                ColorRelation::ForcedEqual(s("x"), s("x0")),
                ColorRelation::ForcedEqual(s("x0"), s("y0")),
                ColorRelation::ForcedEqual(s("y0"), s("y")),
                ColorRelation::AchievableAllColors(s("x")),
                ColorRelation::Achievable(Vec::new()),
            ],
            path_systems: vec![
                PathSystemSpec {
                    pairs: pairs(&[("x", "y")]),
                    cover: true,
                },
                PathSystemSpec {
                    pairs: pairs(&[("x0", "y0")]),
                    cover: true,
                },
            ],
            boundary: Some(BoundarySpec {
                labels: vec![s("x"), s("x0"), s("y0"), s("y")],
                ordered: false,
            }),
            planar: true,
            ..GadgetContract::empty()
        },
        GadgetName::D => GadgetContract {
            degree_spec: degrees(&[("x", 1), ("y", 1)]),
            other_degree: Some(5),
            color_relations: vec![
                ColorRelation::AchievableAllPairsDistinct(s("x"), s("y")),
                ColorRelation::Achievable(Vec::new()),
            ],
            path_systems: vec![PathSystemSpec {
                pairs: pairs(&[("x", "y")]),
                cover: true,
            }],
            boundary: Some(BoundarySpec {
                labels: vec![s("x"), s("y")],
                ordered: false,
            }),
            planar: true,
            ..GadgetContract::empty()
        },
    }
}

struct Builtin {
    gadget: Gadget,
    /// One witness per path system of the contract.
    paths: Vec<Vec<Vec<usize>>>,
}

fn load(name: GadgetName) -> Builtin {
    let inst = parse_instance(name.data()).expect("gadget data parses");
    let plane = inst.plane().expect("gadget data has rotations").clone();
    let gadget = Gadget {
        name: name.to_string(),
        plane,
        labels: inst.labels,
    };
    let paths = builtin_contract(name)
        .path_systems
        .iter()
        .map(|ps| {
            let ends: Vec<(usize, usize)> = ps
                .pairs
                .iter()
                .map(|(a, b)| (gadget.labels[a], gadget.labels[b]))
                .collect();
            find_path_system(gadget.plane.graph(), &ends, ps.cover).expect("gadget path system exists")
        })
        .collect();
    Builtin { gadget, paths }
}

fn builtin(name: GadgetName) -> &'static Builtin {
    static CACHE: [OnceLock<Builtin>; 5] = [const { OnceLock::new() }; 5];
    CACHE[name as usize].get_or_init(|| load(name))
}

pub fn builtin_gadget(name: GadgetName) -> Gadget {
    builtin(name).gadget.clone()
}

/// Witness paths of the `index`-th path system of a built-in gadget.
pub(crate) fn builtin_paths(name: GadgetName, index: usize) -> &'static [Vec<usize>] {
    &builtin(name).paths[index]
}

/// The canonical text form of a built-in gadget.
pub fn gadget_data(name: GadgetName) -> &'static str {
    name.data()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClauseStatus {
    Pass,
    Fail(String),
    Refused(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseReport {
    pub clause: String,
    pub status: ClauseStatus,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub gadget: String,
    pub clauses: Vec<ClauseReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status == ClauseStatus::Pass)
    }

    pub fn refused(&self) -> bool {
        self.clauses
            .iter()
            .any(|c| matches!(c.status, ClauseStatus::Refused(_)))
    }

    pub fn clause(&self, prefix: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause.starts_with(prefix))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gadget {}", self.gadget)?;
        for c in &self.clauses {
            let status = match &c.status {
                ClauseStatus::Pass => "PASS".to_string(),
                ClauseStatus::Fail(why) => format!("FAIL ({why})"),
                ClauseStatus::Refused(why) => format!("REFUSED ({why})"),
            };
            writeln!(f, "  {status:<6} {}", c.clause)?;
            for w in &c.witnesses {
                writeln!(f, "         {w}")?;
            }
        }
        Ok(())
    }
}

fn clause(name: impl Into<String>, ok: bool, fail: impl FnOnce() -> String) -> ClauseReport {
    ClauseReport {
        clause: name.into(),
        status: if ok { ClauseStatus::Pass } else { ClauseStatus::Fail(fail()) },
        witnesses: Vec::new(),
    }
}

fn show_coloring(labels: &BTreeMap<String, usize>, f: &Coloring) -> String {
    let named: Vec<String> = labels.iter().map(|(l, &v)| format!("{l}={}", f.0[v])).collect();
    format!("{} [{}]", named.join(" "), f.0.iter().map(u8::to_string).collect::<String>())
}

/// Vertex-colour assignments a relation asks for.
type Target = Vec<(usize, u8)>;

/// Per-relation state while streaming over all colourings.
enum Tracker {
    Forced(Option<Coloring>),
    Achievable(Vec<(Target, Option<Coloring>)>),
}

fn relation_targets(r: &ColorRelation, at: &dyn Fn(&str) -> usize) -> Vec<Target> {
    match r {
        ColorRelation::Achievable(asg) => vec![asg.iter().map(|(l, c)| (at(l), *c)).collect()],
        ColorRelation::AchievableAllColors(a) => (1..=3).map(|c| vec![(at(a), c)]).collect(),
        ColorRelation::AchievableAllPairsDistinct(a, b) => (1..=3)
            .flat_map(|c| (1..=3).filter(move |&d| d != c).map(move |d| (c, d)))
            .map(|(c, d)| vec![(at(a), c), (at(b), d)])
            .collect(),
        _ => Vec::new(),
    }
}

fn holds_forced(r: &ColorRelation, at: &dyn Fn(&str) -> usize, f: &Coloring) -> bool {
    let c = |l: &str| f.0[at(l)];
    match r {
        ColorRelation::ForcedEqual(a, b) => c(a) == c(b),
        ColorRelation::ForcedDistinct(a, b) => c(a) != c(b),
        ColorRelation::ForcedRainbow(a, b, d) => c(a) != c(b) && c(b) != c(d) && c(a) != c(d),
        _ => true,
    }
}

/// Checks every clause of `contract` against `gadget`. Colouring clauses are
/// decided by enumerating all valid 3-colourings; above the enumeration cap
/// they are reported as refused.
pub fn verify_gadget(
    gadget: &Gadget,
    contract: &GadgetContract,
    budget: &Budget,
) -> Result<VerificationReport> {
    for l in contract.labels() {
        gadget.label(l)?;
    }
    let g = gadget.plane.graph();
    let at = |l: &str| gadget.labels[l];
    let mut clauses = Vec::new();

    if let Some(k) = contract.vertex_count {
        clauses.push(clause(format!("vertex count {k}"), g.n() == k, || {
            format!("gadget has {} vertices", g.n())
        }));
    }
    for (l, &d) in &contract.degree_spec {
        let have = g.degree(at(l));
        clauses.push(clause(format!("degree {l} = {d}"), have == d, || {
            format!("degree is {have}")
        }));
    }
    if let Some(d) = contract.other_degree {
        let named: Vec<usize> = contract.degree_spec.keys().map(|l| at(l)).collect();
        let bad = (0..g.n()).find(|v| !named.contains(v) && g.degree(*v) != d);
        clauses.push(clause(format!("other vertices have degree {d}"), bad.is_none(), || {
            let v = bad.unwrap();
            format!("vertex {v} has degree {}", g.degree(v))
        }));
    }
    for (a, b) in &contract.required_edges {
        clauses.push(clause(format!("edge {{{a}, {b}}}"), g.has_edge(at(a), at(b)), || {
            "missing".into()
        }));
    }

    let relations = &contract.color_relations;
    match enumerate_colorings(g, &vec![None; g.n()], budget) {
        Err(e) if e.is_refusal() => {
            for r in relations {
                clauses.push(ClauseReport {
                    clause: r.to_string(),
                    status: ClauseStatus::Refused(e.to_string()),
                    witnesses: Vec::new(),
                });
            }
        }
        Err(e) => return Err(e),
        Ok(stream) => {
            let mut trackers: Vec<Tracker> = relations
                .iter()
                .map(|r| {
                    let targets = relation_targets(r, &at);
                    if targets.is_empty() {
                        Tracker::Forced(None)
                    } else {
                        Tracker::Achievable(targets.into_iter().map(|t| (t, None)).collect())
                    }
                })
                .collect();
            let mut total = 0usize;
            for f in stream {
                total += 1;
                for (r, t) in relations.iter().zip(trackers.iter_mut()) {
                    match t {
                        Tracker::Forced(bad @ None) => {
                            if !holds_forced(r, &at, &f) {
                                *bad = Some(f.clone());
                            }
                        }
                        Tracker::Forced(Some(_)) => {}
                        Tracker::Achievable(targets) => {
                            for (want, wit) in targets.iter_mut() {
                                if wit.is_none() && want.iter().all(|&(v, c)| f.0[v] == c) {
                                    *wit = Some(f.clone());
                                }
                            }
                        }
                    }
                }
            }
            for (r, t) in relations.iter().zip(trackers) {
                let report = match t {
                    Tracker::Forced(None) => ClauseReport {
                        clause: r.to_string(),
                        status: ClauseStatus::Pass,
                        witnesses: vec![format!("holds in all {total} valid colourings")],
                    },
                    Tracker::Forced(Some(f)) => ClauseReport {
                        clause: r.to_string(),
                        status: ClauseStatus::Fail(format!(
                            "countermodel {}",
                            show_coloring(&gadget.labels, &f)
                        )),
                        witnesses: Vec::new(),
                    },
                    Tracker::Achievable(targets) => {
                        let missing: Vec<String> = targets
                            .iter()
                            .filter(|(_, w)| w.is_none())
                            .map(|(want, _)| format!("{want:?}"))
                            .collect();
                        ClauseReport {
                            clause: r.to_string(),
                            status: if missing.is_empty() {
                                ClauseStatus::Pass
                            } else {
                                ClauseStatus::Fail(format!("no colouring realises {}", missing.join(", ")))
                            },
                            witnesses: targets
                                .iter()
                                .filter_map(|(_, w)| w.as_ref())
                                .map(|f| show_coloring(&gadget.labels, f))
                                .collect(),
                        }
                    }
                };
                clauses.push(report);
            }
        }
    }

    for ps in &contract.path_systems {
        let names: Vec<String> = ps.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let name = format!(
            "disjoint paths {}{}",
            names.join(", "),
            if ps.cover { " covering all vertices" } else { "" }
        );
        let ends: Vec<(usize, usize)> = ps.pairs.iter().map(|(a, b)| (at(a), at(b))).collect();
        let found = find_path_system(g, &ends, ps.cover);
        let witnesses = found
            .iter()
            .flatten()
            .map(|p| p.iter().map(usize::to_string).collect::<Vec<_>>().join("-"))
            .collect();
        clauses.push(ClauseReport {
            clause: name,
            status: if found.is_some() {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail("no such path system".into())
            },
            witnesses,
        });
    }

    if contract.planar {
        let faces = gadget.plane.faces();
        clauses.push(clause("planar rotation system", faces.is_ok(), || {
            faces.as_ref().unwrap_err().to_string()
        }));
        if let Some(b) = &contract.boundary {
            let outer = gadget.plane.outer();
            let cyc: Vec<usize> = match &outer {
                Ok(face) => face.vertices().collect(),
                Err(_) => Vec::new(),
            };
            let on_face = b.labels.iter().all(|l| cyc.contains(&at(l)));
            let list = b.labels.join(", ");
            clauses.push(clause(format!("outer face contains {list}"), on_face, || {
                format!("outer face is {cyc:?}")
            }));
            if b.ordered && on_face {
                let want: Vec<usize> = b.labels.iter().map(|l| at(l)).collect();
                let mut seen: Vec<usize> = Vec::new();
                for v in &cyc {
                    if want.contains(v) && !seen.contains(v) {
                        seen.push(*v);
                    }
                }
                let k = want.len();
                let matches = |cand: &[usize]| (0..k).any(|r| (0..k).all(|i| cand[(i + r) % k] == want[i]));
                let mut rev = seen.clone();
                rev.reverse();
                let ok = matches(&seen) || matches(&rev);
                clauses.push(clause(format!("outer face order ({list})"), ok, || {
                    format!("boundary order is {seen:?}")
                }));
            }
        }
    }

    Ok(VerificationReport {
        gadget: gadget.name.clone(),
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete;
    use crate::graph::Graph;

    fn small(name: &str, g: Graph, labels: &[(&str, usize)]) -> Gadget {
        let rot = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        Gadget {
            name: name.into(),
            plane: PlaneGraph::new(g, rot).unwrap(),
            labels: labels.iter().map(|&(l, v)| (l.to_string(), v)).collect(),
        }
    }

    fn contract_with(relations: Vec<ColorRelation>) -> GadgetContract {
        GadgetContract {
            color_relations: relations,
            ..GadgetContract::empty()
        }
    }

    #[test]
    fn triangle_reaches_all_colours() {
        let g = small("K3", complete(3), &[("x", 0)]);
        let c = contract_with(vec![ColorRelation::AchievableAllColors(s("x"))]);
        let r = verify_gadget(&g, &c, &Budget::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.clauses[0].witnesses.len(), 3);
    }

    #[test]
    fn edge_is_not_forced_equal() {
        let g = small("K2", complete(2), &[("x", 0), ("y", 1)]);
        let c = contract_with(vec![ColorRelation::ForcedEqual(s("x"), s("y"))]);
        let r = verify_gadget(&g, &c, &Budget::default()).unwrap();
        assert!(!r.passed());
        match &r.clauses[0].status {
            ClauseStatus::Fail(why) => assert!(why.contains("x=1 y=2"), "{why}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_label_is_an_error() {
        let g = small("K2", complete(2), &[("x", 0)]);
        let c = contract_with(vec![ColorRelation::ForcedEqual(s("x"), s("y"))]);
        assert_eq!(
            verify_gadget(&g, &c, &Budget::default()),
            Err(Error::MissingLabel("y".into()))
        );
    }

    #[test]
    fn over_budget_is_refused() {
        let g = small("K2", complete(2), &[("x", 0), ("y", 1)]);
        let c = contract_with(vec![ColorRelation::ForcedDistinct(s("x"), s("y"))]);
        let tight = Budget {
            enumeration: 1,
            ..Budget::default()
        };
        let r = verify_gadget(&g, &c, &tight).unwrap();
        assert!(r.refused());
        assert!(!r.passed());
    }

    #[test]
    fn builtins_pass_their_contracts() {
        for name in GadgetName::ALL {
            let r = verify_gadget(&builtin_gadget(name), &builtin_contract(name), &Budget::default())
                .unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn builtin_shapes() {
        let l = builtin_contract(GadgetName::L);
        assert!(l
            .color_relations
            .contains(&ColorRelation::ForcedEqual(s("x"), s("y1"))));
        assert_eq!(
            builtin_contract(GadgetName::H).path_systems[0].pairs,
            pairs(&[("x", "x'"), ("y", "y'")])
        );
        assert_eq!(builtin_contract(GadgetName::W).degree_spec["x0"], 2);
        assert_eq!(builtin_gadget(GadgetName::W).plane.n(), 15);
        let h = builtin_gadget(GadgetName::H);
        assert!(h.plane.graph().has_edge(h.labels["y1"], h.labels["y1'"]));
        assert_eq!("w".parse::<GadgetName>(), Ok(GadgetName::W));
        assert!("Q".parse::<GadgetName>().is_err());
    }

    #[test]
    fn l_colourings_force_the_expected_relations() {
        let l = builtin_gadget(GadgetName::L);
        let g = l.plane.graph();
        let mut fixed = vec![None; g.n()];
        fixed[l.labels["x"]] = Some(1);
        let mut count = 0;
        for f in enumerate_colorings(g, &fixed, &Budget::default()).unwrap() {
            assert_eq!(f.0[l.labels["y1"]], 1);
            count += 1;
        }
        assert!(count > 0);
    }
}
