use super::{DecoratedForest, EdgeClass, TreeError};
use crate::energy::{compare_scaled_exp, EnergyError};
use crate::ring::{int, Rational, UPoly};
use num_traits::Signed;
use std::cmp::Ordering;

/// Exponent of the full twisting map: intersection number plus outputs in V.
pub fn psi_full_exponent(t: &DecoratedForest) -> i64 {
    t.intersection_number() + t.outputs_in_v() as i64
}

pub fn psi_full(t: &DecoratedForest) -> Result<UPoly, TreeError> {
    let k = psi_full_exponent(t);
    if k < 0 {
        return Err(TreeError::NegativeExponent(k));
    }
    Ok(UPoly::u_pow(k as usize))
}

/// 1 exactly when the forest misses the submanifold entirely.
pub fn psi_reduced(t: &DecoratedForest) -> u8 {
    (t.intersection_number() == 0 && t.edges().iter().all(|e| !e.orbit.in_v)) as u8
}

/// The mixed twisting map, defined when r⁺ ≥ 2e^E·r⁻ and r⁺ > 2/R_min.
pub fn psi_mixed(t: &DecoratedForest, r_plus: &Rational, r_minus: &Rational, energy: &Rational, r_min: &Rational) -> Result<u8, TreeError> {
    if !r_min.is_positive() {
        return Err(TreeError::InadmissibleParameters("R_min must be positive".into()));
    }
    let gate = compare_scaled_exp(r_plus, &int(2), energy, r_minus).map_err(|e| match e {
        EnergyError::NearEquality(s) => TreeError::InadmissibleParameters(format!("undecidable gate: {s}")),
        other => TreeError::InadmissibleParameters(other.to_string()),
    })?;
    if gate == Ordering::Less {
        return Err(TreeError::InadmissibleParameters("r⁺ < 2·e^E·r⁻".into()));
    }
    if r_plus * r_min <= int(2) {
        return Err(TreeError::InadmissibleParameters("r⁺ ≤ 2/R_min".into()));
    }
    Ok((t.intersection_number() == 0 && t.edges().iter().all(|e| !e.orbit.in_v)) as u8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexViolation {
    pub vertex: u32,
    pub s: i64,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityReport {
    pub vertex_violations: Vec<VertexViolation>,
    /// Vertices not flagged representable; the bounds are only promised for the others.
    pub unrepresentable: Vec<u32>,
    /// Edges in V whose normal parity is not 1; the global bound needs parity 1.
    pub even_parity_edges: Vec<u32>,
    pub intersection: i64,
    pub global_bound: i64,
}

impl PositivityReport {
    pub fn per_vertex_ok(&self) -> bool {
        self.vertex_violations.is_empty()
    }

    pub fn global_ok(&self) -> bool {
        self.intersection >= self.global_bound
    }

    pub fn passes(&self) -> bool {
        self.per_vertex_ok() && self.global_ok() && self.unrepresentable.is_empty() && self.even_parity_edges.is_empty()
    }
}

pub fn check_positivity(t: &DecoratedForest) -> PositivityReport {
    let mut vertex_violations = Vec::new();
    for v in t.vertices() {
        let bound = if v.ends_in_v { -(t.outgoing(v.id).filter(|e| e.orbit.in_v).count() as i64) } else { 0 };
        if v.s < bound {
            vertex_violations.push(VertexViolation { vertex: v.id, s: v.s, bound });
        }
    }
    PositivityReport {
        vertex_violations,
        unrepresentable: t.vertices().iter().filter(|v| !v.representable).map(|v| v.id).collect(),
        even_parity_edges: t
            .edges()
            .iter()
            .filter(|e| e.class() != EdgeClass::Input && e.orbit.in_v && e.orbit.p_n != 1)
            .map(|e| e.id)
            .collect(),
        intersection: t.intersection_number(),
        global_bound: -(t.outputs_in_v() as i64),
    }
}
