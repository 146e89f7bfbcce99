//! Random decorated forests for property tests, satisfying the per-vertex
//! positivity bounds so that they can stand for representable buildings.

use super::ops::{concatenate, EdgeRef, Match};
use super::{DecoratedForest, Edge, EdgeClass, OrbitLabel, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// Seed for randomized drivers, from `SFTKIT_SEED` when set.
pub fn seed_from_env() -> u64 {
    std::env::var("SFTKIT_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0x5EED_2024)
}

#[derive(Debug, Clone)]
pub struct ForestParams {
    pub max_vertices: usize,
    /// Number of cobordism levels spanned.
    pub m: u32,
    pub max_outputs: usize,
    /// Extra slack added above the positivity bound for each s_v.
    pub max_excess: i64,
    pub palette: Vec<OrbitLabel>,
}

impl Default for ForestParams {
    fn default() -> Self {
        ForestParams { max_vertices: 8, m: 0, max_outputs: 2, max_excess: 2, palette: default_palette() }
    }
}

/// Orbits in V have parity 1; orbits off V carry either parity.
pub fn default_palette() -> Vec<OrbitLabel> {
    vec![
        OrbitLabel { name: "g1".into(), in_v: true, p_n: 1, period: 1.0, link: Some(0) },
        OrbitLabel { name: "g2".into(), in_v: true, p_n: 1, period: 2.0, link: Some(0) },
        OrbitLabel { name: "h1".into(), in_v: false, p_n: 0, period: 1.5, link: Some(1) },
        OrbitLabel { name: "h2".into(), in_v: false, p_n: 1, period: 2.5, link: Some(2) },
        OrbitLabel { name: "h3".into(), in_v: false, p_n: 0, period: 3.0, link: Some(1) },
    ]
}

pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, p: &ForestParams) -> DecoratedForest {
    let n = rng.gen_range(1..=p.max_vertices.max(1));
    let roots = rng.gen_range(1..=n.min(3));
    let labels: Vec<OrbitLabel> = (0..roots).map(|_| p.palette.choose(rng).unwrap().clone()).collect();
    random_forest_with_roots(rng, p, &labels, n)
}

/// A forest with exactly one root per label in `roots` and `n ≥ roots.len()` vertices.
pub fn random_forest_with_roots<R: Rng + ?Sized>(rng: &mut R, p: &ForestParams, roots: &[OrbitLabel], n: usize) -> DecoratedForest {
    let n = n.max(roots.len());
    let mut level = vec![[0u32, 0u32]; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for k in 0..n {
        if k >= roots.len() {
            let q = rng.gen_range(0..k);
            parent[k] = Some(q);
            level[k][0] = level[q][1];
        }
        let i = level[k][0];
        level[k][1] = if p.m == 0 { 0 } else { rng.gen_range(i..=p.m) };
    }
    let mut edges: Vec<Edge> = Vec::new();
    for k in 0..n {
        let orbit = match parent[k] {
            None => roots[k].clone(),
            Some(_) => p.palette.choose(rng).unwrap().clone(),
        };
        edges.push(Edge { id: 0, src: parent[k].map(|q| q as u32), dst: Some(k as u32), orbit });
    }
    for k in 0..n {
        if level[k][1] == p.m {
            for _ in 0..rng.gen_range(0..=p.max_outputs) {
                edges.push(Edge { id: 0, src: Some(k as u32), dst: None, orbit: p.palette.choose(rng).unwrap().clone() });
            }
        }
    }
    edges.shuffle(rng);
    for (i, e) in edges.iter_mut().enumerate() {
        e.id = i as u32;
    }
    let vertices = (0..n)
        .map(|k| {
            let id = k as u32;
            let ends_in_v = edges.iter().filter(|e| e.src == Some(id) || e.dst == Some(id)).all(|e| e.orbit.in_v);
            let out_v = edges.iter().filter(|e| e.src == Some(id) && e.orbit.in_v).count() as i64;
            let bound = if ends_in_v { -out_v } else { 0 };
            Vertex { id, level: level[k], s: bound + rng.gen_range(0..=p.max_excess), representable: true, ends_in_v }
        })
        .collect();
    DecoratedForest::new(p.m, vertices, edges).expect("generator builds valid forests")
}

/// Two or three random parts glued along randomly chosen matching labels.
/// Parts spanning levels are stacked so that every output of an upper part
/// is glued; symplectization parts are glued along a random subset.
pub fn random_concatenation<R: Rng + ?Sized>(rng: &mut R, p: &ForestParams) -> (Vec<DecoratedForest>, Vec<Match>) {
    let count = rng.gen_range(2..=3);
    let mut parts = vec![random_forest(rng, p)];
    let mut matching = Vec::new();
    for k in 1..count {
        let upper = rng.gen_range(0..k);
        let outs: Vec<(u32, OrbitLabel)> = parts[upper]
            .edges_of(EdgeClass::Output)
            .filter(|e| !matching.iter().any(|m: &Match| m.upper == EdgeRef { part: upper, edge: e.id }))
            .map(|e| (e.id, e.orbit.clone()))
            .collect();
        let chosen: Vec<(u32, OrbitLabel)> = if p.m == 0 {
            outs.into_iter().filter(|_| rng.gen_bool(0.6)).collect()
        } else if upper == k - 1 && k == 1 {
            outs
        } else {
            vec![]
        };
        let labels: Vec<OrbitLabel> = chosen.iter().map(|(_, l)| l.clone()).collect();
        let n = labels.len().max(1) + rng.gen_range(0..=p.max_vertices.saturating_sub(labels.len() + 1).min(3));
        let part = if labels.is_empty() {
            random_forest(rng, p)
        } else {
            random_forest_with_roots(rng, p, &labels, n)
        };
        for (root, (edge, _)) in chosen.iter().enumerate() {
            let input = part.edges().iter().find(|e| e.src.is_none() && e.dst == Some(root as u32)).unwrap().id;
            matching.push(Match { upper: EdgeRef { part: upper, edge: *edge }, lower: EdgeRef { part: k, edge: input } });
        }
        parts.push(part);
        if p.m > 0 {
            break;
        }
    }
    debug_assert!(concatenate(&parts, &matching).is_ok());
    (parts, matching)
}
