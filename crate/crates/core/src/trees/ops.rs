use super::{DecoratedForest, Edge, EdgeClass, TreeError, Vertex};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// An edge of one part in a concatenation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeRef {
    pub part: usize,
    pub edge: u32,
}

/// Glues an output edge of one part to an input edge of another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Match {
    pub upper: EdgeRef,
    pub lower: EdgeRef,
}

impl DecoratedForest {
    /// Merges the endpoints of an interior edge into one vertex, which keeps
    /// the id of the upper endpoint.
    pub fn contract_edge(&self, e: u32) -> Result<DecoratedForest, TreeError> {
        let edge = self.edge(e).ok_or(TreeError::NotInteriorEdge(e))?;
        let (Some(up), Some(down)) = (edge.src, edge.dst) else {
            return Err(TreeError::NotInteriorEdge(e));
        };
        let (u, d) = (self.vertex(up).unwrap(), self.vertex(down).unwrap());
        if u.level[1] != d.level[1] && self.outgoing(up).any(|x| x.id != e) {
            return Err(TreeError::IncompatibleLevels(format!(
                "vertex {up} keeps ends at level {} but the merged vertex ends at level {}",
                u.level[1], d.level[1]
            )));
        }
        let merged = Vertex {
            id: up,
            level: [u.level[0], d.level[1]],
            s: u.s + d.s - edge.orbit.trivial_cylinder_value(),
            representable: u.representable && d.representable,
            ends_in_v: u.ends_in_v && d.ends_in_v,
        };
        let vertices = self
            .vertices
            .iter()
            .filter(|v| v.id != down)
            .map(|v| if v.id == up { merged.clone() } else { v.clone() })
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|x| x.id != e)
            .map(|x| Edge { src: if x.src == Some(down) { Some(up) } else { x.src }, ..x.clone() })
            .collect();
        DecoratedForest::new(self.m, vertices, edges)
    }

    /// Contracts interior edges until none can be contracted without leaving
    /// a vertex with ends on two different levels.
    pub fn contract_all(&self) -> DecoratedForest {
        let mut f = self.clone();
        loop {
            let next = f.edges_of(EdgeClass::Interior).find_map(|e| f.contract_edge(e.id).ok());
            match next {
                Some(g) => f = g,
                None => return f,
            }
        }
    }
}

/// Stacks `parts`, turning each matched output/input pair into an interior
/// edge. A lower part sits `m` levels below the part it is glued to.
/// Vertices and edges are renumbered consecutively in part order.
pub fn concatenate(parts: &[DecoratedForest], matching: &[Match]) -> Result<DecoratedForest, TreeError> {
    let mut used = BTreeSet::new();
    for mt in matching {
        for r in [mt.upper, mt.lower] {
            if !used.insert(r) {
                return Err(TreeError::LabelMismatch(format!("edge {} of part {} is matched twice", r.edge, r.part)));
            }
        }
        if mt.upper.part == mt.lower.part {
            return Err(TreeError::IncompatibleLevels(format!("part {} is glued to itself", mt.upper.part)));
        }
        let up = lookup(parts, mt.upper)?;
        let low = lookup(parts, mt.lower)?;
        if up.class() != EdgeClass::Output {
            return Err(TreeError::LabelMismatch(format!("edge {} of part {} is not an output", up.id, mt.upper.part)));
        }
        if low.class() != EdgeClass::Input {
            return Err(TreeError::LabelMismatch(format!("edge {} of part {} is not an input", low.id, mt.lower.part)));
        }
        if up.orbit != low.orbit {
            return Err(TreeError::LabelMismatch(format!("orbit `{}` cannot be glued to orbit `{}`", up.orbit.name, low.orbit.name)));
        }
    }

    let offsets = level_offsets(parts, matching)?;
    let m = parts.iter().zip(&offsets).map(|(p, o)| p.m() + o).max().unwrap_or(0);

    let mut vid: BTreeMap<(usize, u32), u32> = BTreeMap::new();
    let mut vertices = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        for v in p.vertices() {
            let id = vertices.len() as u32;
            vid.insert((k, v.id), id);
            vertices.push(Vertex { id, level: [v.level[0] + offsets[k], v.level[1] + offsets[k]], ..v.clone() });
        }
    }
    let glued_below: BTreeMap<EdgeRef, EdgeRef> = matching.iter().map(|mt| (mt.upper, mt.lower)).collect();
    let absorbed: BTreeSet<EdgeRef> = matching.iter().map(|mt| mt.lower).collect();
    let mut edges = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        for e in p.edges() {
            let here = EdgeRef { part: k, edge: e.id };
            if absorbed.contains(&here) {
                continue;
            }
            let dst = match glued_below.get(&here) {
                Some(low) => lookup(parts, *low)?.dst.map(|d| vid[&(low.part, d)]),
                None => e.dst.map(|d| vid[&(k, d)]),
            };
            edges.push(Edge { id: edges.len() as u32, src: e.src.map(|s| vid[&(k, s)]), dst, orbit: e.orbit.clone() });
        }
    }
    DecoratedForest::new(m, vertices, edges)
}

fn lookup(parts: &[DecoratedForest], r: EdgeRef) -> Result<&Edge, TreeError> {
    parts
        .get(r.part)
        .and_then(|p| p.edge(r.edge))
        .ok_or_else(|| TreeError::LabelMismatch(format!("no edge {} in part {}", r.edge, r.part)))
}

fn level_offsets(parts: &[DecoratedForest], matching: &[Match]) -> Result<Vec<u32>, TreeError> {
    let mut offset: Vec<Option<i64>> = vec![None; parts.len()];
    let mut adj: Vec<Vec<(usize, i64)>> = vec![vec![]; parts.len()];
    for mt in matching {
        let shift = parts[mt.upper.part].m() as i64;
        adj[mt.upper.part].push((mt.lower.part, shift));
        adj[mt.lower.part].push((mt.upper.part, -shift));
    }
    for start in 0..parts.len() {
        if offset[start].is_some() {
            continue;
        }
        offset[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        let mut component = vec![start];
        while let Some(a) = queue.pop_front() {
            let oa = offset[a].unwrap();
            for &(b, shift) in &adj[a] {
                match offset[b] {
                    None => {
                        offset[b] = Some(oa + shift);
                        component.push(b);
                        queue.push_back(b);
                    }
                    Some(ob) if ob != oa + shift => {
                        return Err(TreeError::IncompatibleLevels(format!("parts {a} and {b} are glued at inconsistent heights")));
                    }
                    _ => {}
                }
            }
        }
        let low = component.iter().map(|&c| offset[c].unwrap()).min().unwrap();
        for &c in &component {
            offset[c] = Some(offset[c].unwrap() - low);
        }
    }
    Ok(offset.into_iter().map(|o| o.unwrap() as u32).collect())
}
