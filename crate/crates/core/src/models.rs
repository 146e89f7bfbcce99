//! The open-book model: orbit and chord generators with their gradings and
//! linking numbers, the linearized rank table, the cyclic window and the
//! surgery cone pattern.

use crate::cyclic::cyclic_complex;
use crate::dga::{homology, BasisCell, ChainComplex, Dga, Generator, Grading, Mode};
use crate::ring::RingTag;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("WindowNotGuaranteed: interior orbits have index above {bound}, below the window {window}")]
    WindowNotGuaranteed { bound: i64, window: i64 },
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("OddDimension: n = {0} is odd")]
    OddDimension(i64),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
}

impl ModelError {
    pub fn name(&self) -> &'static str {
        match self {
            ModelError::WindowNotGuaranteed { .. } => "WindowNotGuaranteed",
            ModelError::OutOfRange(_) => "OutOfRange",
            ModelError::OddDimension(_) => "OddDimension",
            ModelError::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub n: i64,
    pub a: f64,
    /// Index window: orbits with CZ below this value are listed.
    pub window: i64,
    /// Length of the shortest closed geodesic.
    pub rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    OrbitA,
    OrbitB,
    ChordA,
    ChordB,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelGenerator {
    pub name: String,
    pub family: Family,
    pub cover: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cz: Option<i64>,
    pub degree: i64,
    pub link: i64,
}

fn require_dimension(n: i64) -> Result<(), ModelError> {
    if n < 4 {
        return Err(ModelError::OutOfRange(format!("the model needs n ≥ 4, got {n}")));
    }
    Ok(())
}

/// ⌊aρ/π⌋, a strict lower bound for the index of orbits away from the
/// binding neighbourhood. Quotients within 1e-12 of an integer snap to it.
pub fn interior_orbit_bound(a: f64, rho: f64) -> Result<i64, ModelError> {
    if !(a > 0.0 && rho > 0.0 && a.is_finite() && rho.is_finite()) {
        return Err(ModelError::InvalidParameter(format!("a = {a} and rho = {rho} must be positive")));
    }
    let q = a * rho / PI;
    let r = q.round();
    Ok(if (q - r).abs() <= 1e-12 * r.abs().max(1.0) { r as i64 } else { q.floor() as i64 })
}

/// The least a with interior_orbit_bound(a, rho) ≥ window.
pub fn window_threshold(window: i64, rho: f64) -> f64 {
    window as f64 * PI / rho
}

/// Covers of the two simple orbits with CZ below the window: CZ = 2k and
/// CZ = n − 1 + 2k, degree CZ + n − 3, link k.
pub fn model_orbits(p: &ModelParams) -> Result<Vec<ModelGenerator>, ModelError> {
    require_dimension(p.n)?;
    let bound = interior_orbit_bound(p.a, p.rho)?;
    if bound < p.window {
        return Err(ModelError::WindowNotGuaranteed { bound, window: p.window });
    }
    let mut out = Vec::new();
    for (family, offset, tag) in [(Family::OrbitA, 0, "ga"), (Family::OrbitB, p.n - 1, "gb")] {
        let mut k = 1;
        while offset + 2 * k < p.window {
            let cz = offset + 2 * k;
            out.push(ModelGenerator { name: format!("{tag}_{k}"), family, cover: k, cz: Some(cz), degree: cz + p.n - 3, link: k });
            k += 1;
        }
    }
    Ok(out)
}

/// Chords a_k of degree 2k − 1 and b_k of degree n − 2 + 2k, link k, for
/// k ≤ max_link.
pub fn model_chords(n: i64, max_link: i64) -> Result<Vec<ModelGenerator>, ModelError> {
    require_dimension(n)?;
    let mut out = Vec::new();
    for k in 1..=max_link {
        out.push(ModelGenerator { name: format!("a{k}"), family: Family::ChordA, cover: k, cz: None, degree: 2 * k - 1, link: k });
    }
    for k in 1..=max_link {
        out.push(ModelGenerator { name: format!("b{k}"), family: Family::ChordB, cover: k, cz: None, degree: n - 2 + 2 * k, link: k });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Generators with CZ ≢ 2·link mod (n − 1).
    pub violations: Vec<String>,
    /// Pairs (x, y) with |x| − |y| = 1 and equal link, which could carry a
    /// linearized differential term.
    pub open_pairs: Vec<(String, String)>,
    pub zero_differential: bool,
}

/// Checks the index–winding congruence on every orbit and that no
/// bidegree (−1, 0) term fits between table generators.
pub fn parity_obstruction(n: i64, table: &[ModelGenerator]) -> ParityReport {
    let modulus = n - 1;
    let violations: Vec<String> = table
        .iter()
        .filter(|g| g.cz.is_some_and(|cz| (cz - 2 * g.link).rem_euclid(modulus) != 0))
        .map(|g| g.name.clone())
        .collect();
    let mut open_pairs = Vec::new();
    for x in table {
        for y in table {
            if x.degree - y.degree == 1 && x.link == y.link {
                open_pairs.push((x.name.clone(), y.name.clone()));
            }
        }
    }
    let zero_differential = violations.is_empty() && open_pairs.is_empty();
    ParityReport { violations, open_pairs, zero_differential }
}

/// Rank per CZ value k with 0 ≤ k < window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub n: i64,
    pub window: i64,
    pub ranks: Vec<(i64, usize)>,
}

impl RankTable {
    pub fn rank(&self, k: i64) -> usize {
        self.ranks.iter().find(|(j, _)| *j == k).map_or(0, |(_, r)| *r)
    }
}

/// Q ⊕ Q on the overlap of the even indices 0 < k < window and the indices
/// n − 1 + 2j, Q on the rest of their union, 0 elsewhere.
pub fn linearized_ranks(n: i64, window: i64) -> Result<RankTable, ModelError> {
    require_dimension(n)?;
    let even = |k: i64| k > 0 && k % 2 == 0;
    let shifted = |k: i64| k >= n + 1 && (k - (n - 1)) % 2 == 0;
    let ranks = (0..window.max(0)).map(|k| (k, usize::from(even(k)) + usize::from(shifted(k)))).collect();
    Ok(RankTable { n, window, ranks })
}

/// The zero-differential complex on the model orbits.
pub fn orbit_complex(table: &[ModelGenerator]) -> ChainComplex {
    let basis: Vec<BasisCell> =
        table.iter().map(|g| BasisCell { label: g.name.clone(), degree: g.degree, link: Some(g.link) }).collect();
    let columns = vec![vec![]; basis.len()];
    ChainComplex::new(RingTag::Q, Grading::Z, basis, columns)
}

/// The rank table read off from the homology of `orbit_complex`, keyed by CZ.
pub fn ranks_from_homology(n: i64, window: i64, table: &[ModelGenerator]) -> RankTable {
    let c = orbit_complex(table);
    let shift = n - 3;
    let h = homology(&c, shift, window - 1 + shift);
    let ranks = (0..window.max(0))
        .map(|k| (k, h.iter().find(|g| g.degree == k + shift).map_or(0, |g| g.free_rank)))
        .collect();
    RankTable { n, window, ranks }
}

/// The free algebra on a generator table with zero differential.
pub fn model_algebra(table: &[ModelGenerator], mode: Mode) -> Dga {
    let gens = table.iter().map(|g| Generator::orbit(&g.name, g.degree).with_link(g.link)).collect();
    Dga::new(RingTag::Q, mode, Grading::Z, gens, &[]).expect("model generators are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcWindow {
    pub n: i64,
    pub degree: i64,
    pub link: i64,
    pub rank: usize,
    pub classes: Vec<String>,
    pub below: usize,
    pub above: usize,
}

/// Reduced cyclic homology of the chord algebra at link 2 and degree 2n.
/// The chain groups at 2n ± 1 vanish, so the rank does not depend on the
/// (unknown) differential.
pub fn hc_window(n: i64) -> Result<HcWindow, ModelError> {
    if n % 2 != 0 {
        return Err(ModelError::OddDimension(n));
    }
    require_dimension(n)?;
    let chords = model_chords(n, 2)?;
    let a = model_algebra(&chords, Mode::Associative { components: 1 });
    let top = 2 * n;
    let c = cyclic_complex(&a, top - 1, top + 1, Some(2)).expect("link-2 window is finite");
    let count = |k: i64| c.cells_in_degree(k).len();
    let (below, above) = (count(top - 1), count(top + 1));
    let classes: Vec<String> = c.cells_in_degree(top).into_iter().map(|i| c.basis()[i].label.clone()).collect();
    let rank = homology(&c, top, top)[0].free_rank;
    Ok(HcWindow { n, degree: top, link: 2, rank, classes, below, above })
}

/// Ranks of the surgery cone for an isotropic sphere of dimension k:
/// Q in degrees n − k + 2j up to `top`.
pub fn surgery_cone_ranks(k: i64, n: i64, top: i64) -> Result<Vec<(i64, usize)>, ModelError> {
    if !(1..=n - 2).contains(&k) {
        return Err(ModelError::OutOfRange(format!("sphere dimension {k} is not subcritical for n = {n}")));
    }
    Ok((0..=top).map(|d| (d, usize::from(d >= n - k && (d - (n - k)) % 2 == 0))).collect())
}

/// Bounds on the ranks of the third term C of an exact triangle
/// A → B → C → A[−1], from per-degree ranks of A and B starting at degree 0.
pub fn triangle_bounds(a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    (0..a.len().max(b.len()))
        .map(|i| {
            let (ai, bi) = (at(a, i), at(b, i));
            let (prev_a, prev_b) = if i == 0 { (0, 0) } else { (at(a, i - 1), at(b, i - 1)) };
            let lower = bi.saturating_sub(ai) + prev_a.saturating_sub(prev_b);
            (lower, bi + prev_a)
        })
        .collect()
}

pub fn triangle_consistent(a: &[usize], b: &[usize], c: &[usize]) -> bool {
    let bounds = triangle_bounds(a, b);
    (0..bounds.len().max(c.len())).all(|i| {
        let (lo, hi) = bounds.get(i).copied().unwrap_or((0, 0));
        let r = c.get(i).copied().unwrap_or(0);
        lo <= r && r <= hi
    })
}
