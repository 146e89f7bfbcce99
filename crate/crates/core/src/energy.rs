//! Energies of Type A and Type B cobordism decompositions and the
//! admissibility gates comparing r⁺ with e^E·r⁻.

use crate::ring::{format_rational, to_f64, Rational};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

/// Relative gap (in log scale) below which an exponential comparison is refused.
pub const EXP_COMPARISON_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EnergyError {
    #[error("BoundaryConditionViolated: {0}")]
    BoundaryConditionViolated(String),
    #[error("NotSupported: energy is only additive when one factor is a symplectization")]
    NotSupported,
    #[error("NearEquality: {0}")]
    NearEquality(String),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
}

impl EnergyError {
    pub fn name(&self) -> &'static str {
        match self {
            EnergyError::BoundaryConditionViolated(_) => "BoundaryConditionViolated",
            EnergyError::NotSupported => "NotSupported",
            EnergyError::NearEquality(_) => "NearEquality",
            EnergyError::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeADecomposition {
    pub c_minus: Rational,
    pub c_plus: Rational,
    pub empty_negative_end: bool,
}

impl TypeADecomposition {
    pub fn new(c_minus: Rational, c_plus: Rational, empty_negative_end: bool) -> Result<Self, EnergyError> {
        if empty_negative_end && !c_minus.is_zero() {
            return Err(EnergyError::InvalidParameter("an empty negative end forces C₋ = 0".into()));
        }
        Ok(TypeADecomposition { c_minus, c_plus, empty_negative_end })
    }

    /// The decomposition of a symplectization with equal forms at both ends.
    pub fn symplectization() -> Self {
        TypeADecomposition { c_minus: Rational::zero(), c_plus: Rational::zero(), empty_negative_end: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeAEnergy {
    pub value: Rational,
    /// Fillings admit decompositions of arbitrarily negative energy.
    pub unbounded_below: bool,
}

pub fn type_a_energy(d: &TypeADecomposition) -> TypeAEnergy {
    TypeAEnergy { value: &d.c_minus + &d.c_plus, unbounded_below: d.empty_negative_end }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeBSample {
    pub t: Rational,
    pub c2: Rational,
    pub c1: Rational,
    pub c1_tilde: Rational,
    pub c0: Rational,
}

impl TypeBSample {
    pub fn value(&self) -> Rational {
        &self.c2 + &self.c0 - &self.c1 - &self.c1_tilde
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeBDecomposition {
    samples: Vec<TypeBSample>,
}

impl TypeBDecomposition {
    /// Samples are sorted by parameter; the first one must sit at t = 0.
    pub fn new(mut samples: Vec<TypeBSample>) -> Result<Self, EnergyError> {
        samples.sort_by(|a, b| a.t.cmp(&b.t));
        let first = samples.first().ok_or_else(|| EnergyError::InvalidParameter("no samples".into()))?;
        if !first.t.is_zero() {
            return Err(EnergyError::BoundaryConditionViolated("the family must be sampled at t = 0".into()));
        }
        if samples.windows(2).any(|w| w[0].t == w[1].t) {
            return Err(EnergyError::InvalidParameter("repeated sample parameter".into()));
        }
        if first.c1_tilde != -&first.c1 {
            return Err(EnergyError::BoundaryConditionViolated(format!(
                "C̃₁(0) = {} but −C₁(0) = {}",
                format_rational(&first.c1_tilde),
                format_rational(&-&first.c1)
            )));
        }
        Ok(TypeBDecomposition { samples })
    }

    pub fn samples(&self) -> &[TypeBSample] {
        &self.samples
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeBEnergy {
    /// Supremum over the samples; a lower bound for the supremum of the family.
    pub energy: Rational,
    pub attained_at: Rational,
    pub induced_at_zero: Rational,
    pub induced_at_infinity: Rational,
}

pub fn type_b_energy(d: &TypeBDecomposition) -> TypeBEnergy {
    let best = d.samples.iter().max_by(|a, b| a.value().cmp(&b.value())).expect("nonempty by construction");
    let first = &d.samples[0];
    let last = &d.samples[d.samples.len() - 1];
    let out = TypeBEnergy {
        energy: best.value(),
        attained_at: best.t.clone(),
        induced_at_zero: &first.c2 + &first.c0,
        induced_at_infinity: last.value(),
    };
    debug_assert!(out.induced_at_zero <= out.energy && out.induced_at_infinity <= out.energy);
    out
}

pub fn glue_energy(e1: &Rational, e2: &Rational, one_is_symplectization: bool) -> Result<Rational, EnergyError> {
    if one_is_symplectization {
        Ok(e1 + e2)
    } else {
        Err(EnergyError::NotSupported)
    }
}

/// Compares `lhs` with `factor · e^energy · rhs`. Exact when `energy = 0`
/// or `rhs = 0`; otherwise decided in log scale, refusing near-ties.
pub fn compare_scaled_exp(lhs: &Rational, factor: &Rational, energy: &Rational, rhs: &Rational) -> Result<Ordering, EnergyError> {
    if lhs.is_negative() || rhs.is_negative() || !factor.is_positive() {
        return Err(EnergyError::InvalidParameter("radii must be non-negative and the factor positive".into()));
    }
    if rhs.is_zero() || energy.is_zero() {
        return Ok(lhs.cmp(&(factor * rhs)));
    }
    if lhs.is_zero() {
        return Ok(Ordering::Less);
    }
    let ratio = to_f64(&(lhs / (factor * rhs)));
    let e = to_f64(energy);
    if !ratio.is_finite() || ratio == 0.0 || !e.is_finite() {
        return Err(EnergyError::InvalidParameter("parameters out of floating range".into()));
    }
    let gap = ratio.ln() - e;
    if gap.abs() <= EXP_COMPARISON_TOLERANCE * e.abs().max(1.0) {
        return Err(EnergyError::NearEquality(format!(
            "{} and {}·e^{}·{} agree to within {:e}",
            format_rational(lhs),
            format_rational(factor),
            format_rational(energy),
            format_rational(rhs),
            EXP_COMPARISON_TOLERANCE
        )));
    }
    Ok(if gap > 0.0 { Ordering::Greater } else { Ordering::Less })
}

/// Strict gate r⁺ > e^E·r⁻, or the relaxed symplectization gate r⁺ ≥ r⁻.
pub fn admissible(r_plus: &Rational, r_minus: &Rational, energy: &Rational, relaxed: bool) -> Result<bool, EnergyError> {
    if !r_plus.is_positive() {
        return Err(EnergyError::InvalidParameter("r⁺ must be positive".into()));
    }
    if r_minus.is_negative() {
        return Err(EnergyError::InvalidParameter("r⁻ must be non-negative".into()));
    }
    if relaxed {
        return Ok(r_plus >= r_minus);
    }
    Ok(compare_scaled_exp(r_plus, &Rational::one(), energy, r_minus)? == Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn type_a() {
        let d = TypeADecomposition::new(rat(7, 10), rat(1, 2), false).unwrap();
        assert_eq!(type_a_energy(&d).value, rat(6, 5));
        assert_eq!(type_a_energy(&TypeADecomposition::symplectization()).value, int(0));
        let filling = TypeADecomposition::new(int(0), int(1), true).unwrap();
        assert!(type_a_energy(&filling).unbounded_below);
        assert!(TypeADecomposition::new(int(1), int(1), true).is_err());
    }

    fn sample(t: i64, c2: Rational, c1: Rational, c1t: Rational, c0: Rational) -> TypeBSample {
        TypeBSample { t: int(t), c2, c1, c1_tilde: c1t, c0 }
    }

    #[test]
    fn type_b() {
        let s = (0..4).map(|t| sample(t, rat(1, 2), int(0), int(0), rat(1, 2))).collect();
        let e = type_b_energy(&TypeBDecomposition::new(s).unwrap());
        assert_eq!(e.energy, int(1));
        assert_eq!(e.induced_at_zero, int(1));
        let bad = vec![sample(0, int(0), int(1), int(1), int(0))];
        assert!(matches!(TypeBDecomposition::new(bad), Err(EnergyError::BoundaryConditionViolated(_))));
    }

    #[test]
    fn gluing() {
        assert_eq!(glue_energy(&rat(3, 10), &rat(2, 5), true), Ok(rat(7, 10)));
        assert_eq!(glue_energy(&int(0), &rat(5, 3), true), Ok(rat(5, 3)));
        assert_eq!(glue_energy(&rat(3, 10), &rat(2, 5), false), Err(EnergyError::NotSupported));
    }

    #[test]
    fn gates() {
        assert_eq!(admissible(&int(2), &int(1), &rat(1, 2), false), Ok(true));
        assert_eq!(admissible(&int(1), &int(1), &int(0), true), Ok(true));
        assert_eq!(admissible(&int(5), &int(0), &int(40), false), Ok(true));
        assert_eq!(admissible(&int(1), &int(1), &int(0), false), Ok(false));
        assert_eq!(admissible(&int(1), &int(2), &int(-1), false), Ok(true));
        assert_eq!(admissible(&int(3), &int(1), &int(1), false), Ok(true));
        assert!(admissible(&int(0), &int(1), &int(0), false).is_err());
    }

    #[test]
    fn near_ties_are_refused() {
        // 2.718281828459045 vs e
        let r = crate::ring::parse_rational("2.718281828459045").unwrap();
        assert!(matches!(admissible(&r, &int(1), &int(1), false), Err(EnergyError::NearEquality(_))));
        let far = crate::ring::parse_rational("2.7182").unwrap();
        assert_eq!(admissible(&far, &int(1), &int(1), false), Ok(false));
    }
}
