//! Conley–Zehnder and Robbin–Salamon indices for the path families that
//! occur in the local models: rotations, shear blocks, elliptic normal
//! blocks, and monotone exponential paths counted by integer crossings.

use crate::ring::{to_f64, Rational};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::f64::consts::PI;
use std::fmt;
use thiserror::Error;

/// Distance to an integer below which a floating endpoint counts as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CzError {
    #[error("DegeneratePath: {0}")]
    DegeneratePath(String),
    #[error("GenericityViolated: {0}")]
    GenericityViolated(String),
    #[error("BadResonance: {0}")]
    BadResonance(String),
    #[error("InvalidPath: {0}")]
    InvalidPath(String),
}

impl CzError {
    pub fn name(&self) -> &'static str {
        match self {
            CzError::DegeneratePath(_) => "DegeneratePath",
            CzError::GenericityViolated(_) => "GenericityViolated",
            CzError::BadResonance(_) => "BadResonance",
            CzError::InvalidPath(_) => "InvalidPath",
        }
    }
}

/// An element of ½Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_halves(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    pub fn as_int(self) -> Option<i64> {
        self.0.is_even().then_some(self.0 / 2)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ellipticity {
    #[default]
    Positive,
    Negative,
}

/// Eigenvalue trajectories λ(t), t ∈ [0,1], of monotone paths exp(P(t)).
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorPath {
    /// λ(t) = t·λ(1) with λ(1) exact.
    Linear(Rational),
    /// Piecewise-linear interpolation of (t, λ) samples covering [0,1].
    Sampled(Vec<(f64, f64)>),
    /// The tubular orbit at the centre: λ(t) = t·a·P_U/4π.
    Gamma1 { period_u: f64, a: f64 },
    /// The tubular orbit at radius r₀ winding m times.
    Gamma2 { r0: f64, m: u32 },
}

impl GeneratorPath {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            GeneratorPath::Linear(l) => t * to_f64(l),
            GeneratorPath::Sampled(s) => interpolate(s, t),
            GeneratorPath::Gamma1 { period_u, a } => t * a * period_u / (4.0 * PI),
            GeneratorPath::Gamma2 { r0, m } => {
                let m = *m as f64;
                let r4 = r0.powi(4);
                let inner = 4.0 * m * m * t * t - r4 / (8.0 * PI * PI) * (1.0 - (4.0 * PI * m * t).cos());
                inner.max(0.0).sqrt() / (2.0 - r0 * r0)
            }
        }
    }

    /// Exact endpoint λ(1) when the family is closed-form over Q.
    pub fn exact_endpoint(&self) -> Option<&Rational> {
        match self {
            GeneratorPath::Linear(l) => Some(l),
            _ => None,
        }
    }
}

fn interpolate(s: &[(f64, f64)], t: f64) -> f64 {
    let i = s.partition_point(|&(ts, _)| ts <= t);
    if i == 0 {
        return s[0].1;
    }
    if i == s.len() {
        return s[s.len() - 1].1;
    }
    let (t0, l0) = s[i - 1];
    let (t1, l1) = s[i];
    l0 + (l1 - l0) * (t - t0) / (t1 - t0)
}

#[derive(Debug, Clone, PartialEq)]
pub enum PathSpec {
    Rotation { lambda: Rational, ellipticity: Ellipticity },
    Shear { blocks: u32, loop_k: i64 },
    EllipticLocal { c: Rational, period: Rational, ellipticity: Ellipticity },
    MonotoneExp(GeneratorPath),
}

impl PathSpec {
    /// Index of the path; integral except for degenerate shear blocks.
    pub fn index(&self) -> Result<HalfInt, CzError> {
        match self {
            PathSpec::Rotation { lambda, ellipticity } => Ok(HalfInt::from_int(signed(cz_rotation(lambda)?, *ellipticity))),
            PathSpec::Shear { blocks, loop_k } => Ok(rs_shear(*blocks, *loop_k)),
            PathSpec::EllipticLocal { c, period, ellipticity } => {
                if c.is_negative() || period.is_negative() {
                    return Err(CzError::InvalidPath("elliptic data must be non-negative".into()));
                }
                Ok(HalfInt::from_int(signed(cz_rotation(&(c * period))?, *ellipticity)))
            }
            PathSpec::MonotoneExp(g) => Ok(HalfInt::from_int(cz_crossing(g, 1024)?)),
        }
    }
}

fn signed(cz: i64, e: Ellipticity) -> i64 {
    match e {
        Ellipticity::Positive => cz,
        Ellipticity::Negative => -cz,
    }
}

/// 1 + 2⌊λ⌋ for a rotation by 2πλ.
pub fn cz_rotation(lambda: &Rational) -> Result<i64, CzError> {
    if lambda.is_negative() {
        return Err(CzError::InvalidPath(format!("rotation parameter {lambda} is negative")));
    }
    if lambda.is_integer() {
        return Err(CzError::DegeneratePath(format!("rotation parameter {lambda} is an integer")));
    }
    Ok(1 + 2 * floor_i64(lambda))
}

pub fn cz_rotation_signed(lambda: &Rational, e: Ellipticity) -> Result<i64, CzError> {
    cz_rotation(lambda).map(|cz| signed(cz, e))
}

fn floor_i64(q: &Rational) -> i64 {
    q.floor().to_integer().to_i64().expect("index out of i64 range")
}

/// Robbin–Salamon index of `blocks` degenerate shear blocks after `loop_k` full loops.
pub fn rs_shear(blocks: u32, loop_k: i64) -> HalfInt {
    HalfInt::from_halves(blocks as i64 + 4 * loop_k)
}

/// Crossing times of λ(t) with the integers on (0,1), each isolated by bisection.
pub fn crossing_times(path: &GeneratorPath, subdivisions: usize) -> Result<Vec<f64>, CzError> {
    if subdivisions == 0 {
        return Err(CzError::InvalidPath("need at least one subdivision".into()));
    }
    if let GeneratorPath::Sampled(s) = path {
        validate_samples(s)?;
    }
    let start = path.eval(0.0);
    if start.abs() > DEGENERACY_TOLERANCE {
        return Err(CzError::InvalidPath(format!("λ(0) = {start}, expected 0")));
    }
    match path.exact_endpoint() {
        Some(l) if l.is_integer() => return Err(CzError::DegeneratePath(format!("λ(1) = {l} is an integer"))),
        Some(l) if !l.is_positive() => return Err(CzError::InvalidPath("λ must be strictly increasing".into())),
        Some(_) => {}
        None => {
            let end = path.eval(1.0);
            if (end - end.round()).abs() <= DEGENERACY_TOLERANCE {
                return Err(CzError::DegeneratePath(format!("λ(1) = {end} is within tolerance of an integer")));
            }
        }
    }
    let grid: Vec<f64> = (0..=subdivisions).map(|i| i as f64 / subdivisions as f64).collect();
    let values: Vec<f64> = grid.iter().map(|&t| path.eval(t)).collect();
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CzError::InvalidPath("λ is not strictly increasing on the grid".into()));
    }
    let mut times = Vec::new();
    for i in 0..subdivisions {
        let (lo, hi) = (values[i], values[i + 1]);
        // integers k with lo < k ≤ hi, excluding t = 1 itself
        let mut k = lo.floor() + 1.0;
        while k <= hi {
            if i + 1 == subdivisions && k >= hi {
                break;
            }
            times.push(bisect(path, grid[i], grid[i + 1], k));
            k += 1.0;
        }
    }
    let exact_count = path.exact_endpoint().map(|l| floor_i64(l) as usize);
    if let Some(n) = exact_count {
        if n != times.len() {
            return Err(CzError::InvalidPath(format!("bisection found {} crossings, exact endpoint implies {n}", times.len())));
        }
    }
    Ok(times)
}

fn bisect(path: &GeneratorPath, mut lo: f64, mut hi: f64, target: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if path.eval(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn validate_samples(s: &[(f64, f64)]) -> Result<(), CzError> {
    if s.len() < 2 {
        return Err(CzError::InvalidPath("need at least two samples".into()));
    }
    if s[0].0 != 0.0 || s[s.len() - 1].0 != 1.0 {
        return Err(CzError::InvalidPath("samples must cover t ∈ [0,1]".into()));
    }
    if s.iter().any(|(t, l)| !t.is_finite() || !l.is_finite()) {
        return Err(CzError::InvalidPath("samples must be finite".into()));
    }
    if s.windows(2).any(|w| w[1].0 <= w[0].0 || w[1].1 <= w[0].1) {
        return Err(CzError::InvalidPath("samples must be strictly increasing in t and λ".into()));
    }
    Ok(())
}

/// 1 + 2·#{t ∈ (0,1) : λ(t) ∈ Z}.
pub fn cz_crossing(path: &GeneratorPath, subdivisions: usize) -> Result<i64, CzError> {
    crossing_times(path, subdivisions).map(|t| 1 + 2 * t.len() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaKind {
    Gamma1,
    Gamma2 { r0: f64, m: u32, n_cover: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaOrbitIndex {
    pub cz: i64,
    pub period: f64,
    /// λ(1), whose floor enters the index.
    pub rotation: f64,
}

const RESONANCE_TOLERANCE: f64 = 1e-9;

/// Index of an orbit of the tubular model around an orbit of period `period_u`.
/// `cz_base` is the index of the underlying orbit (its n-fold cover for γ₂).
pub fn cz_gamma_orbit(kind: GammaKind, period_u: f64, a: f64, cz_base: i64) -> Result<GammaOrbitIndex, CzError> {
    if !(period_u > 0.0 && a > 0.0 && period_u.is_finite() && a.is_finite()) {
        return Err(CzError::InvalidPath("P_U and a must be positive".into()));
    }
    let (rotation, period) = match kind {
        GammaKind::Gamma1 => (a * period_u / (4.0 * PI), period_u),
        GammaKind::Gamma2 { r0, m, n_cover } => {
            if !(r0 > 0.0 && r0 < 1.0) {
                return Err(CzError::BadResonance(format!("r0 = {r0} is outside (0,1)")));
            }
            if m == 0 || n_cover == 0 {
                return Err(CzError::BadResonance("m and n must be positive".into()));
            }
            let ratio = a * period_u / (4.0 * PI * (1.0 - r0 * r0).sqrt());
            let target = m as f64 / n_cover as f64;
            if (ratio - target).abs() > RESONANCE_TOLERANCE * target.max(1.0) {
                return Err(CzError::BadResonance(format!("a·P_U/(4π√(1−r0²)) = {ratio}, expected {m}/{n_cover}")));
            }
            let s = 2.0 - r0 * r0;
            let p2 = s * 2.0 * PI * m as f64 / a;
            (a * p2 / (PI * s * s), p2)
        }
    };
    if (rotation - rotation.round()).abs() <= DEGENERACY_TOLERANCE * rotation.max(1.0) {
        return Err(CzError::GenericityViolated(format!("λ(1) = {rotation} is an integer, the orbit is degenerate")));
    }
    Ok(GammaOrbitIndex { cz: 1 + 2 * rotation.floor() as i64 + cz_base, period, rotation })
}

/// Parity data of a normal index: p = α⁺ − α⁻ with α∓ = ⌊cz/2⌋, ⌈cz/2⌉.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalIndexData {
    pub cz_n: i64,
    pub p_n: i64,
    pub alpha_minus: i64,
    pub alpha_plus: i64,
}

pub fn normal_index_data(cz_n: i64) -> NormalIndexData {
    let alpha_minus = cz_n.div_euclid(2);
    let alpha_plus = alpha_minus + cz_n.rem_euclid(2);
    NormalIndexData { cz_n, p_n: alpha_plus - alpha_minus, alpha_minus, alpha_plus }
}

pub fn cz_direct_sum(parts: &[i64]) -> i64 {
    parts.iter().sum()
}

/// Index of an orbit inside the submanifold for a form whose normal block
/// rotates by `normal_rotation`, with tangential index supplied by the caller.
pub fn cz_adapted(normal_rotation: &Rational, cz_tangent: i64) -> Result<i64, CzError> {
    Ok(cz_direct_sum(&[cz_rotation(normal_rotation)?, cz_tangent]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_rational, rat};

    #[test]
    fn rotation_examples() {
        assert_eq!(cz_rotation(&parse_rational("1.3").unwrap()), Ok(3));
        assert_eq!(cz_rotation(&rat(1, 2)), Ok(1));
        assert!(matches!(cz_rotation(&parse_rational("2.0").unwrap()), Err(CzError::DegeneratePath(_))));
        assert_eq!(cz_rotation_signed(&rat(13, 10), Ellipticity::Negative), Ok(-3));
    }

    #[test]
    fn shear_examples() {
        assert_eq!(rs_shear(3, 2), HalfInt::from_halves(11));
        assert_eq!(rs_shear(1, 0).to_string(), "1/2");
        assert_eq!(rs_shear(3, 0).to_string(), "3/2");
        assert_eq!(rs_shear(2, 1).to_string(), "3");
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(cz_crossing(&GeneratorPath::Linear(rat(13, 10)), 64), Ok(3));
        assert_eq!(cz_crossing(&GeneratorPath::Linear(rat(9, 10)), 64), Ok(1));
        let times = crossing_times(&GeneratorPath::Linear(rat(12, 5)), 7).unwrap();
        assert_eq!(times.len(), 2);
        assert!((times[0] - 1.0 / 2.4).abs() < 1e-12);
        assert!((times[1] - 2.0 / 2.4).abs() < 1e-12);
        assert!(matches!(cz_crossing(&GeneratorPath::Linear(rat(2, 1)), 8), Err(CzError::DegeneratePath(_))));
    }

    #[test]
    fn sampled_paths() {
        let s = GeneratorPath::Sampled(vec![(0.0, 0.0), (0.5, 0.4), (1.0, 2.4)]);
        assert_eq!(cz_crossing(&s, 10), Ok(5));
        let flat = GeneratorPath::Sampled(vec![(0.0, 0.0), (0.5, 0.5), (1.0, 0.5)]);
        assert!(cz_crossing(&flat, 10).is_err());
        let degenerate = GeneratorPath::Sampled(vec![(0.0, 0.0), (1.0, 2.0)]);
        assert!(matches!(cz_crossing(&degenerate, 10), Err(CzError::DegeneratePath(_))));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(cz_gamma_orbit(GammaKind::Gamma1, 1.0, 10.0, 2).unwrap().cz, 3);
        assert_eq!(cz_gamma_orbit(GammaKind::Gamma1, 1.0, 4.0 * PI * 1.5, 0).unwrap().cz, 3);
        let bad = cz_gamma_orbit(GammaKind::Gamma2 { r0: 1.0, m: 1, n_cover: 1 }, 1.0, 10.0, 0);
        assert!(matches!(bad, Err(CzError::BadResonance(_))));
        assert!(matches!(cz_gamma_orbit(GammaKind::Gamma1, 1.0, 8.0 * PI, 0), Err(CzError::GenericityViolated(_))));
    }

    #[test]
    fn gamma2_formula_matches_crossings() {
        let (r0, m, n) = (0.6f64, 3u32, 2u32);
        let pu = 1.0;
        let a = (m as f64 / n as f64) * 4.0 * PI * (1.0 - r0 * r0).sqrt() / pu;
        let idx = cz_gamma_orbit(GammaKind::Gamma2 { r0, m, n_cover: n }, pu, a, 0).unwrap();
        let s = 2.0 - r0 * r0;
        assert!((idx.period - s * 2.0 * PI * m as f64 / a).abs() < 1e-12);
        assert_eq!(idx.cz, 1 + 2 * (2.0 * m as f64 / s).floor() as i64);
        let by_crossing = cz_crossing(&GeneratorPath::Gamma2 { r0, m }, 4096).unwrap();
        assert_eq!(by_crossing, idx.cz);
        assert!(cz_gamma_orbit(GammaKind::Gamma2 { r0, m, n_cover: n + 1 }, pu, a, 0).is_err());
    }

    #[test]
    fn normal_data() {
        let d = normal_index_data(5);
        assert_eq!((d.p_n, d.alpha_minus, d.alpha_plus), (1, 2, 3));
        let d = normal_index_data(4);
        assert_eq!((d.p_n, d.alpha_minus, d.alpha_plus), (0, 2, 2));
        let d = normal_index_data(1);
        assert_eq!((d.p_n, d.alpha_minus, d.alpha_plus), (1, 0, 1));
        let d = normal_index_data(-3);
        assert_eq!((d.p_n, d.alpha_minus, d.alpha_plus), (1, -2, -1));
    }

    #[test]
    fn direct_sums() {
        assert_eq!(cz_direct_sum(&[3, 2]), 5);
        assert_eq!(cz_direct_sum(&[]), 0);
        assert_eq!(cz_adapted(&rat(7, 5), 4), Ok(7));
    }

    #[test]
    fn path_spec_dispatch() {
        let e = PathSpec::EllipticLocal { c: rat(1, 2), period: rat(3, 1), ellipticity: Ellipticity::Positive };
        assert_eq!(e.index().unwrap(), HalfInt::from_int(3));
        assert_eq!(PathSpec::Shear { blocks: 3, loop_k: 1 }.index().unwrap().to_string(), "7/2");
        assert_eq!(PathSpec::MonotoneExp(GeneratorPath::Gamma1 { period_u: 1.0, a: 10.0 }).index().unwrap(), HalfInt::from_int(1));
    }
}
