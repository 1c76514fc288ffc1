//! Line-oriented text format for graphs, embeddings and certificates.
//!
//! ```text
//! p <n> <m>
//! e <u> <v>
//! r <v> <k> <n1> ... <nk>     clockwise rotation
//! f <face>                    outer face
//! label <name> <v>
//! h <v0> ... <v_{n-1}>        Hamiltonian cycle
//! c <v> <colour>
//! q <t>                       followed by t `h` lines forming a 2-factor
//! ```
//!
//! `#` starts a comment. Serialization is canonical, so equal instances
//! produce equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Coloring, CycleCert, Graph, TwoFactorCert};
use crate::plane::PlaneGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Body {
    Graph(Graph),
    Plane(PlaneGraph),
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub body: Body,
    pub labels: BTreeMap<String, usize>,
    pub cycle: Option<CycleCert>,
    /// Colour lines; may be partial.
    pub colors: BTreeMap<usize, u8>,
    pub two_factor: Option<TwoFactorCert>,
}

impl Instance {
    pub fn from_graph(g: Graph) -> Self {
        Instance::with_body(Body::Graph(g))
    }

    pub fn from_plane(pg: PlaneGraph) -> Self {
        Instance::with_body(Body::Plane(pg))
    }

    fn with_body(body: Body) -> Self {
        Instance {
            body,
            labels: BTreeMap::new(),
            cycle: None,
            colors: BTreeMap::new(),
            two_factor: None,
        }
    }

    pub fn with_cycle(mut self, c: CycleCert) -> Self {
        self.cycle = Some(c);
        self
    }

    pub fn with_coloring(mut self, f: &Coloring) -> Self {
        self.colors = f.0.iter().enumerate().map(|(v, &c)| (v, c)).collect();
        self
    }

    pub fn graph(&self) -> &Graph {
        match &self.body {
            Body::Graph(g) => g,
            Body::Plane(pg) => pg.graph(),
        }
    }

    pub fn plane(&self) -> Option<&PlaneGraph> {
        match &self.body {
            Body::Graph(_) => None,
            Body::Plane(pg) => Some(pg),
        }
    }

    pub fn require_plane(&self) -> Result<&PlaneGraph> {
        self.plane().ok_or_else(|| {
            Error::InvalidParameter("instance has no rotation system".into())
        })
    }

    pub fn require_cycle(&self) -> Result<&CycleCert> {
        self.cycle
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter("instance has no Hamiltonian cycle".into()))
    }

    /// The colour lines as a total colouring, if there are any.
    pub fn coloring(&self) -> Result<Option<Coloring>> {
        if self.colors.is_empty() {
            return Ok(None);
        }
        let n = self.graph().n();
        let mut out = Vec::with_capacity(n);
        for v in 0..n {
            match self.colors.get(&v) {
                Some(&c) => out.push(c),
                None => {
                    return Err(Error::InvalidCertificate(format!(
                        "colouring is partial: vertex {v} has no colour"
                    )))
                }
            }
        }
        Ok(Some(Coloring(out)))
    }
}

struct Cursor<'a> {
    line: usize,
    tokens: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in text.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push((s + 1, &text[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            tokens.push((s + 1, &text[s..]));
        }
        Cursor {
            line,
            tokens,
            pos: 0,
        }
    }

    fn err_at(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    /// Error located at the most recently consumed token.
    fn err(&self, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(self.pos.saturating_sub(1))
            .map_or(1, |t| t.0);
        self.err_at(column, message)
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |(c, s)| c + s.len())
    }

    fn word(&mut self, what: &str) -> Result<&'a str> {
        match self.tokens.get(self.pos) {
            Some(&(_, s)) => {
                self.pos += 1;
                Ok(s)
            }
            None => Err(self.err_at(self.end_column(), format!("expected {what}"))),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let s = self.word(what)?;
        s.parse()
            .map_err(|_| self.err(format!("expected {what}, found `{s}`")))
    }

    fn rest_numbers(&mut self, what: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        while self.pos < self.tokens.len() {
            out.push(self.number(what)?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<()> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(&(col, s)) => Err(self.err_at(col, format!("unexpected `{s}`"))),
        }
    }
}

/// Parses an instance. Rotations are checked to be permutations of the
/// neighbourhoods but not for planarity; see [`crate::verify::check_plane`].
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut rotations: BTreeMap<usize, (usize, Vec<usize>)> = BTreeMap::new();
    let mut outer: Option<(usize, usize)> = None;
    let mut labels = BTreeMap::new();
    let mut cycle = None;
    let mut colors = BTreeMap::new();
    let mut pending_factor: Option<(usize, usize, Vec<CycleCert>)> = None;
    let mut two_factor = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(line_no, content);
        if cur.tokens.is_empty() {
            continue;
        }
        let kind = cur.word("record")?;
        if kind != "p" && header.is_none() {
            return Err(cur.err("the `p` header must come first"));
        }
        if let Some((_, want, _)) = &pending_factor {
            if kind != "h" {
                return Err(cur.err(format!("expected {want} more `h` line(s) for the 2-factor")));
            }
        }
        let n = graph.n();
        let vertex = |cur: &mut Cursor, what: &str| -> Result<usize> {
            let v = cur.number(what)?;
            if v >= n {
                return Err(cur.err(format!("vertex {v} out of range (n = {n})")));
            }
            Ok(v)
        };
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(cur.err("duplicate `p` header"));
                }
                let n = cur.number("vertex count")?;
                let m = cur.number("edge count")?;
                header = Some((n, m, line_no));
                graph = Graph::empty(n);
            }
            "e" => {
                let u = vertex(&mut cur, "vertex")?;
                let v = vertex(&mut cur, "vertex")?;
                graph.add_edge(u, v).map_err(|e| cur.err(e.to_string()))?;
            }
            "r" => {
                let v = vertex(&mut cur, "vertex")?;
                let k = cur.number("rotation length")?;
                let list = cur.rest_numbers("neighbour")?;
                if list.len() != k {
                    return Err(cur.err(format!("rotation announces {k} entries, has {}", list.len())));
                }
                if rotations.insert(v, (line_no, list)).is_some() {
                    return Err(cur.err_at(3, format!("duplicate rotation for vertex {v}")));
                }
            }
            "f" => {
                let f = cur.number("face index")?;
                if outer.replace((f, line_no)).is_some() {
                    return Err(cur.err("duplicate `f` line"));
                }
            }
            "label" => {
                let name = cur.word("label name")?.to_string();
                let v = vertex(&mut cur, "vertex")?;
                if labels.insert(name.clone(), v).is_some() {
                    return Err(cur.err(format!("duplicate label `{name}`")));
                }
            }
            "h" => {
                let mut order = Vec::new();
                while cur.pos < cur.tokens.len() {
                    order.push(vertex(&mut cur, "vertex")?);
                }
                let c = CycleCert(order);
                match pending_factor.as_mut() {
                    Some((_, left, cycles)) => {
                        cycles.push(c);
                        *left -= 1;
                        if *left == 0 {
                            let (_, _, cycles) = pending_factor.take().unwrap();
                            two_factor = Some(TwoFactorCert::new(cycles));
                        }
                    }
                    None => {
                        if cycle.replace(c).is_some() {
                            return Err(cur.err("duplicate `h` line"));
                        }
                    }
                }
            }
            "c" => {
                let v = vertex(&mut cur, "vertex")?;
                let c = cur.number("colour")?;
                if !(1..=3).contains(&c) {
                    return Err(cur.err(format!("colour {c} is not in 1..=3")));
                }
                if colors.insert(v, c as u8).is_some() {
                    return Err(cur.err(format!("vertex {v} coloured twice")));
                }
            }
            "q" => {
                let t = cur.number("cycle count")?;
                if two_factor.is_some() {
                    return Err(cur.err("duplicate `q` block"));
                }
                if t == 0 {
                    two_factor = Some(TwoFactorCert::new(Vec::new()));
                } else {
                    pending_factor = Some((line_no, t, Vec::new()));
                }
            }
            other => {
                return Err(cur.err_at(1, format!("unknown record `{other}`")));
            }
        }
        cur.finish()?;
    }

    let (_, m, header_line) = header.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `p` header".into(),
    })?;
    if let Some((line, left, _)) = pending_factor {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("2-factor is missing {left} `h` line(s)"),
        });
    }
    if graph.m() != m {
        return Err(Error::Parse {
            line: header_line,
            column: 1,
            message: format!("header announces {m} edges, found {}", graph.m()),
        });
    }

    let body = if rotations.is_empty() {
        if let Some((_, line)) = outer {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "`f` given without rotations".into(),
            });
        }
        Body::Graph(graph)
    } else {
        let n = graph.n();
        if let Some(v) = (0..n).find(|v| !rotations.contains_key(v)) {
            return Err(Error::Parse {
                line: header_line,
                column: 1,
                message: format!("vertex {v} has no rotation"),
            });
        }
        let lines: Vec<usize> = rotations.values().map(|(l, _)| *l).collect();
        let rot: Vec<Vec<usize>> = rotations.into_values().map(|(_, r)| r).collect();
        let pg = PlaneGraph::new(graph, rot).map_err(|e| match e {
            Error::RotationMismatch { vertex } => Error::Parse {
                line: lines[vertex],
                column: 1,
                message: e.to_string(),
            },
            other => other,
        })?;
        let pg = match outer {
            Some((f, line)) => pg.with_outer_face(f).map_err(|e| Error::Parse {
                line,
                column: 3,
                message: e.to_string(),
            })?,
            None => pg,
        };
        Body::Plane(pg)
    };

    Ok(Instance {
        body,
        labels,
        cycle,
        colors,
        two_factor,
    })
}

fn push_cycle(out: &mut String, c: &CycleCert) {
    out.push('h');
    for v in c.vertices() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

/// Canonical text form.
pub fn serialize_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    if let Some(pg) = inst.plane() {
        for v in 0..pg.n() {
            let r = pg.rotation(v);
            let _ = write!(out, "r {v} {}", r.len());
            for w in r {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "f {}", pg.outer_face());
    }
    for (name, v) in &inst.labels {
        let _ = writeln!(out, "label {name} {v}");
    }
    if let Some(c) = &inst.cycle {
        push_cycle(&mut out, c);
    }
    for (v, c) in &inst.colors {
        let _ = writeln!(out, "c {v} {c}");
    }
    if let Some(tf) = &inst.two_factor {
        let _ = writeln!(out, "q {}", tf.len());
        for c in &tf.cycles {
            push_cycle(&mut out, c);
        }
    }
    out
}

/// Hex SHA-256 of the canonical serialization.
pub fn digest(inst: &Instance) -> String {
    sha256_hex(serialize_instance(inst).as_bytes())
}

pub(crate) fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}
