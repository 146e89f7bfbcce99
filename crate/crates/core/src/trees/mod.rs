//! Decorated forests standing in for holomorphic buildings: intersection
//! numbers, edge contraction, concatenation, twisting maps and positivity.

mod automorphism;
pub mod generate;
mod ops;
mod twisting;

pub use automorphism::{aut_order, aut_order_brute_force, AUT_VERTEX_LIMIT};
pub use ops::{concatenate, EdgeRef, Match};
pub use twisting::{
    check_positivity, psi_full, psi_full_exponent, psi_mixed, psi_reduced, PositivityReport, VertexViolation,
};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TreeError {
    #[error("MalformedForest: {0}")]
    MalformedForest(String),
    #[error("NotInteriorEdge: edge {0} is not interior")]
    NotInteriorEdge(u32),
    #[error("LabelMismatch: {0}")]
    LabelMismatch(String),
    #[error("IncompatibleLevels: {0}")]
    IncompatibleLevels(String),
    #[error("NegativeExponent: U^{0} has a negative exponent")]
    NegativeExponent(i64),
    #[error("InadmissibleParameters: {0}")]
    InadmissibleParameters(String),
    #[error("TooLarge: {0} vertices exceeds the automorphism limit")]
    TooLarge(usize),
}

impl TreeError {
    pub fn name(&self) -> &'static str {
        match self {
            TreeError::MalformedForest(_) => "MalformedForest",
            TreeError::NotInteriorEdge(_) => "NotInteriorEdge",
            TreeError::LabelMismatch(_) => "LabelMismatch",
            TreeError::IncompatibleLevels(_) => "IncompatibleLevels",
            TreeError::NegativeExponent(_) => "NegativeExponent",
            TreeError::InadmissibleParameters(_) => "InadmissibleParameters",
            TreeError::TooLarge(_) => "TooLarge",
        }
    }
}

/// Reeb orbit carried by an edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub name: String,
    pub in_v: bool,
    pub p_n: i64,
    #[serde(default)]
    pub period: f64,
    #[serde(default)]
    pub link: Option<i64>,
}

impl OrbitLabel {
    pub fn new(name: &str, in_v: bool, p_n: i64) -> Self {
        OrbitLabel { name: name.to_string(), in_v, p_n, period: 0.0, link: None }
    }

    /// Intersection of the trivial cylinder over this orbit with the submanifold.
    pub fn trivial_cylinder_value(&self) -> i64 {
        if self.in_v {
            -self.p_n
        } else {
            0
        }
    }

    pub(crate) fn key(&self) -> (&str, bool, i64, u64, Option<i64>) {
        (&self.name, self.in_v, self.p_n, self.period.to_bits(), self.link)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    pub level: [u32; 2],
    pub s: i64,
    pub representable: bool,
    pub ends_in_v: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub id: u32,
    pub src: Option<u32>,
    pub dst: Option<u32>,
    pub orbit: OrbitLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Input,
    Interior,
    Output,
}

impl Edge {
    pub fn class(&self) -> EdgeClass {
        match (self.src, self.dst) {
            (None, _) => EdgeClass::Input,
            (_, None) => EdgeClass::Output,
            _ => EdgeClass::Interior,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct ForestDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// A validated decorated forest. Vertices and edges are kept sorted by id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ForestDoc", into = "ForestDoc")]
pub struct DecoratedForest {
    m: u32,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl TryFrom<ForestDoc> for DecoratedForest {
    type Error = TreeError;
    fn try_from(d: ForestDoc) -> Result<Self, TreeError> {
        let m = d.m.unwrap_or_else(|| d.vertices.iter().map(|v| v.level[1]).max().unwrap_or(0));
        DecoratedForest::new(m, d.vertices, d.edges)
    }
}

impl From<DecoratedForest> for ForestDoc {
    fn from(f: DecoratedForest) -> Self {
        ForestDoc { m: Some(f.m), vertices: f.vertices, edges: f.edges }
    }
}

impl DecoratedForest {
    pub fn new(m: u32, mut vertices: Vec<Vertex>, mut edges: Vec<Edge>) -> Result<Self, TreeError> {
        vertices.sort_by_key(|v| v.id);
        edges.sort_by_key(|e| e.id);
        let f = DecoratedForest { m, vertices, edges };
        f.validate()?;
        Ok(f)
    }

    pub fn empty() -> Self {
        DecoratedForest { m: 0, vertices: vec![], edges: vec![] }
    }

    fn validate(&self) -> Result<(), TreeError> {
        let bad = |s: String| Err(TreeError::MalformedForest(s));
        if self.vertices.windows(2).any(|w| w[0].id == w[1].id) {
            return bad("duplicate vertex id".into());
        }
        if self.edges.windows(2).any(|w| w[0].id == w[1].id) {
            return bad("duplicate edge id".into());
        }
        for v in &self.vertices {
            let [i, j] = v.level;
            if i > j || j > self.m {
                return bad(format!("vertex {} has level ({i},{j}) outside 0 ≤ i ≤ j ≤ {}", v.id, self.m));
            }
        }
        let mut incoming: BTreeMap<u32, usize> = BTreeMap::new();
        for e in &self.edges {
            if !(e.orbit.p_n == 0 || e.orbit.p_n == 1) {
                return bad(format!("edge {} has parity {} ∉ {{0,1}}", e.id, e.orbit.p_n));
            }
            if !(e.orbit.period.is_finite() && e.orbit.period >= 0.0) {
                return bad(format!("edge {} has an invalid period", e.id));
            }
            let src = match e.src {
                Some(s) => Some(self.vertex(s).ok_or_else(|| TreeError::MalformedForest(format!("edge {} has unknown source {s}", e.id)))?),
                None => None,
            };
            let dst = match e.dst {
                Some(d) => Some(self.vertex(d).ok_or_else(|| TreeError::MalformedForest(format!("edge {} has unknown target {d}", e.id)))?),
                None => None,
            };
            match (src, dst) {
                (None, None) => return bad(format!("edge {} has no endpoints", e.id)),
                (None, Some(d)) if d.level[0] != 0 => {
                    return bad(format!("input edge {} enters vertex {} at level {}", e.id, d.id, d.level[0]))
                }
                (Some(s), None) if s.level[1] != self.m => {
                    return bad(format!("output edge {} leaves vertex {} at level {} ≠ {}", e.id, s.id, s.level[1], self.m))
                }
                (Some(s), Some(d)) if s.level[1] != d.level[0] => {
                    return bad(format!("interior edge {} joins levels {} and {}", e.id, s.level[1], d.level[0]))
                }
                _ => {}
            }
            if let Some(d) = e.dst {
                *incoming.entry(d).or_default() += 1;
            }
        }
        for v in &self.vertices {
            let n = incoming.get(&v.id).copied().unwrap_or(0);
            if n != 1 {
                return bad(format!("vertex {} has {n} incoming edges", v.id));
            }
        }
        for v in &self.vertices {
            let mut seen = BTreeSet::new();
            let mut cur = v.id;
            while let Some(p) = self.parent(cur) {
                if !seen.insert(p) || p == v.id {
                    return bad(format!("cycle through vertex {}", v.id));
                }
                cur = p;
            }
        }
        Ok(())
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, id: u32) -> Option<&Vertex> {
        self.vertices.binary_search_by_key(&id, |v| v.id).ok().map(|i| &self.vertices[i])
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok().map(|i| &self.edges[i])
    }

    pub fn incoming(&self, v: u32) -> &Edge {
        self.edges.iter().find(|e| e.dst == Some(v)).expect("validated forests have one incoming edge per vertex")
    }

    pub fn outgoing(&self, v: u32) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.src == Some(v))
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        self.edges.iter().find(|e| e.dst == Some(v)).and_then(|e| e.src)
    }

    pub fn edges_of(&self, class: EdgeClass) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.class() == class)
    }

    /// Level symbol of an edge: 0 for inputs, m for outputs, the shared level otherwise.
    pub fn edge_level(&self, e: &Edge) -> u32 {
        match (e.src, e.dst) {
            (None, _) => 0,
            (_, None) => self.m,
            (Some(s), _) => self.vertex(s).map_or(0, |v| v.level[1]),
        }
    }

    /// Σ s_v − Σ_{interior e} c_e.
    pub fn intersection_number(&self) -> i64 {
        let s: i64 = self.vertices.iter().map(|v| v.s).sum();
        let c: i64 = self.edges_of(EdgeClass::Interior).map(|e| e.orbit.trivial_cylinder_value()).sum();
        s - c
    }

    /// Output edges whose orbit lies in the submanifold.
    pub fn outputs_in_v(&self) -> usize {
        self.edges_of(EdgeClass::Output).filter(|e| e.orbit.in_v).count()
    }

    pub fn interior_in_v(&self) -> usize {
        self.edges_of(EdgeClass::Interior).filter(|e| e.orbit.in_v).count()
    }

    /// Sorted labels of the exterior edges.
    pub fn exterior_labels(&self) -> Vec<(EdgeClass, OrbitLabel)> {
        let mut out: Vec<(EdgeClass, OrbitLabel)> = self
            .edges
            .iter()
            .filter(|e| e.class() != EdgeClass::Interior)
            .map(|e| (e.class(), e.orbit.clone()))
            .collect();
        out.sort_by(|a, b| (a.0 == EdgeClass::Output, a.1.key()).partial_cmp(&(b.0 == EdgeClass::Output, b.1.key())).unwrap());
        out
    }

    /// Renumbers vertices (roots first, parents before children, ties broken by
    /// subtree labels) and edges, giving a representation independent of ids.
    pub fn canonical(&self) -> DecoratedForest {
        let sig = self.subtree_signatures();
        let mut order: Vec<u32> = Vec::new();
        let mut frontier: Vec<u32> = self.edges_of(EdgeClass::Input).filter_map(|e| e.dst).collect();
        while !frontier.is_empty() {
            frontier.sort_by(|a, b| sig[a].cmp(&sig[b]).then(a.cmp(b)));
            let mut next = Vec::new();
            for v in &frontier {
                order.push(*v);
                next.extend(self.outgoing(*v).filter_map(|e| e.dst));
            }
            frontier = next;
        }
        let new_id: BTreeMap<u32, u32> = order.iter().enumerate().map(|(k, v)| (*v, k as u32)).collect();
        let vertices: Vec<Vertex> = order
            .iter()
            .map(|v| Vertex { id: new_id[v], ..self.vertex(*v).unwrap().clone() })
            .collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge { id: 0, src: e.src.map(|s| new_id[&s]), dst: e.dst.map(|d| new_id[&d]), orbit: e.orbit.clone() })
            .collect();
        edges.sort_by(|a, b| {
            let ka = (a.src.map_or(-1, i64::from), a.dst.map_or(i64::MAX, i64::from));
            let kb = (b.src.map_or(-1, i64::from), b.dst.map_or(i64::MAX, i64::from));
            ka.cmp(&kb).then_with(|| a.orbit.key().partial_cmp(&b.orbit.key()).unwrap())
        });
        for (k, e) in edges.iter_mut().enumerate() {
            e.id = k as u32;
        }
        DecoratedForest { m: self.m, vertices, edges }
    }

    /// A string determined by the labelled subtree hanging below each vertex.
    pub(crate) fn subtree_signatures(&self) -> BTreeMap<u32, String> {
        fn go(f: &DecoratedForest, v: u32, memo: &mut BTreeMap<u32, String>) -> String {
            if let Some(s) = memo.get(&v) {
                return s.clone();
            }
            let x = f.vertex(v).unwrap();
            let inc = &f.incoming(v).orbit;
            let mut outs: Vec<String> = f.outgoing(v).filter(|e| e.dst.is_none()).map(|e| label_sig(&e.orbit)).collect();
            outs.sort();
            let mut kids: Vec<String> = f.outgoing(v).filter_map(|e| e.dst).map(|c| go(f, c, memo)).collect();
            kids.sort();
            let s = format!(
                "({},{};{};{}{};{};[{}];[{}])",
                x.level[0],
                x.level[1],
                x.s,
                x.representable as u8,
                x.ends_in_v as u8,
                label_sig(inc),
                outs.join(","),
                kids.join(",")
            );
            memo.insert(v, s.clone());
            s
        }
        let mut memo = BTreeMap::new();
        for v in &self.vertices {
            go(self, v.id, &mut memo);
        }
        memo
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.canonical()).expect("forests serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Debug, Error)]
#[error("{0}")]
pub struct FormatError(#[from] serde_json::Error);

pub(crate) fn label_sig(l: &OrbitLabel) -> String {
    format!("{}:{}:{}:{}:{:?}", l.name, l.in_v as u8, l.p_n, l.period, l.link)
}
