//! Free graded dg-algebras over Q or Q[U], in supercommutative or
//! associative (chord) mode, with Koszul-signed normalization, the Leibniz
//! differential, augmentations, linearization and homology.

mod augmentation;
pub mod catalog;
mod complex;
mod format;

pub use augmentation::{augment, linearize, Augmentation};
pub(crate) use complex::enumerate_words;
pub use complex::{homology, word_complex, BasisCell, ChainComplex, HomologyGroup, WordFilter};
pub use format::{DgaDoc, FormatError};

use crate::ring::{format_rational, Rational, RingTag, UPoly};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DgaError {
    #[error("NonComposable: {0}")]
    NonComposable(String),
    #[error("BadGenerator: `{0}` is a bad orbit and cannot generate the algebra")]
    BadGenerator(String),
    #[error("UnknownGenerator: `{0}`")]
    UnknownGenerator(String),
    #[error("DuplicateGenerator: `{0}`")]
    DuplicateGenerator(String),
    #[error("DegreeMismatch: {0}")]
    DegreeMismatch(String),
    #[error("RingMismatch: {0}")]
    RingMismatch(String),
    #[error("NotAChainMap: ε(d{generator}) = {value}")]
    NotAChainMap { generator: String, value: String },
    #[error("NotGradingPreserving: ε({0}) is nonzero on a generator of nonzero degree")]
    NotGradingPreserving(String),
    #[error("DSquaredNonzero: d(d{generator}) = {residue}")]
    DSquaredNonzero { generator: String, residue: String },
    #[error("InfiniteBasis: {0}")]
    InfiniteBasis(String),
    #[error("Unsupported: {0}")]
    Unsupported(String),
}

impl DgaError {
    pub fn name(&self) -> &'static str {
        match self {
            DgaError::NonComposable(_) => "NonComposable",
            DgaError::BadGenerator(_) => "BadGenerator",
            DgaError::UnknownGenerator(_) => "UnknownGenerator",
            DgaError::DuplicateGenerator(_) => "DuplicateGenerator",
            DgaError::DegreeMismatch(_) => "DegreeMismatch",
            DgaError::RingMismatch(_) => "RingMismatch",
            DgaError::NotAChainMap { .. } => "NotAChainMap",
            DgaError::NotGradingPreserving(_) => "NotGradingPreserving",
            DgaError::DSquaredNonzero { .. } => "DSquaredNonzero",
            DgaError::InfiniteBasis(_) => "InfiniteBasis",
            DgaError::Unsupported(_) => "Unsupported",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Orbit,
    /// A Reeb chord from component `source` to component `target`.
    Chord { source: usize, target: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    pub link: Option<i64>,
    pub good: bool,
    pub kind: GenKind,
}

impl Generator {
    pub fn orbit(name: &str, degree: i64) -> Self {
        Generator { name: name.to_string(), degree, link: None, good: true, kind: GenKind::Orbit }
    }

    pub fn chord(name: &str, degree: i64, source: usize, target: usize) -> Self {
        Generator { name: name.to_string(), degree, link: None, good: true, kind: GenKind::Chord { source, target } }
    }

    pub fn with_link(mut self, link: i64) -> Self {
        self.link = Some(link);
        self
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }

    fn order_key(&self) -> (i64, Option<i64>, &str) {
        (self.degree, self.link, &self.name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Commutative,
    /// Words of chords over a semisimple base with `components` idempotents.
    Associative { components: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Grading {
    #[default]
    Z,
    Z2,
}

/// A word is a list of generator indices; indices follow the canonical
/// generator order (degree, link, name).
pub type Word = Vec<usize>;

/// Finite Q[U]-linear combination of normalized words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Word, UPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::term(vec![], UPoly::one())
    }

    pub fn term(w: Word, c: UPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &UPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[usize]) -> UPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: UPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-UPoly::one()))
    }

    pub fn scale(&self, c: &UPoly) -> Element {
        let mut out = Element::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&UPoly) -> UPoly) -> Element {
        let mut out = Element::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), f(x));
        }
        out
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> UPoly {
        self.coeff(&[])
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (w, c.to_string()))).finish()
    }
}

/// A differential term as written by a user: coefficient · U^upow · word.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTerm {
    pub coeff: Rational,
    pub upow: usize,
    pub word: Vec<String>,
}

impl RawTerm {
    pub fn new(coeff: Rational, upow: usize, word: &[&str]) -> Self {
        RawTerm { coeff, upow, word: word.iter().map(|s| s.to_string()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dga {
    ring: RingTag,
    mode: Mode,
    grading: Grading,
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    differential: Vec<Element>,
}

impl Dga {
    /// Builds and validates an algebra. Generators are reordered canonically;
    /// generators missing from `differential` are cycles.
    pub fn new(
        ring: RingTag,
        mode: Mode,
        grading: Grading,
        generators: Vec<Generator>,
        differential: &[(String, Vec<RawTerm>)],
    ) -> Result<Self, DgaError> {
        let mut generators = generators;
        if let Some(bad) = generators.iter().find(|g| !g.good) {
            return Err(DgaError::BadGenerator(bad.name.clone()));
        }
        if grading == Grading::Z2 {
            for g in &mut generators {
                g.degree = g.degree.rem_euclid(2);
            }
        }
        generators.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(DgaError::DuplicateGenerator(g.name.clone()));
            }
            match (mode, g.kind) {
                (Mode::Commutative, GenKind::Chord { .. }) => {
                    return Err(DgaError::Unsupported(format!("chord `{}` in a commutative algebra", g.name)))
                }
                (Mode::Associative { components }, GenKind::Chord { source, target }) if source >= components || target >= components => {
                    return Err(DgaError::NonComposable(format!("chord `{}` refers to a missing component", g.name)))
                }
                _ => {}
            }
        }
        let mut a = Dga { ring, mode, grading, generators, index, differential: vec![] };
        let mut diff = vec![Element::zero(); a.generators.len()];
        for (name, terms) in differential {
            let x = a.lookup(name)?;
            let mut dx = Element::zero();
            for t in terms {
                if ring == RingTag::Q && t.upow > 0 {
                    return Err(DgaError::RingMismatch(format!("U appears in d{name} over Q")));
                }
                let letters = t.word.iter().map(|s| a.lookup(s)).collect::<Result<Vec<_>, _>>()?;
                let (sign, word) = match a.normalize(&letters)? {
                    Some(x) => x,
                    None => continue,
                };
                let deg = a.word_degree(&word);
                if !a.degrees_agree(deg, a.generators[x].degree - 1) {
                    return Err(DgaError::DegreeMismatch(format!(
                        "d{name} contains `{}` of degree {deg}, expected {}",
                        t.word.join(" "),
                        a.generators[x].degree - 1
                    )));
                }
                a.check_endpoints(x, &word)?;
                dx.add_term(word, UPoly::monomial(&t.coeff * Rational::from_integer(sign.into()), t.upow));
            }
            diff[x] = diff[x].add(&dx);
        }
        a.differential = diff;
        Ok(a)
    }

    fn degrees_agree(&self, a: i64, b: i64) -> bool {
        match self.grading {
            Grading::Z => a == b,
            Grading::Z2 => (a - b).rem_euclid(2) == 0,
        }
    }

    fn check_endpoints(&self, x: usize, w: &[usize]) -> Result<(), DgaError> {
        let GenKind::Chord { source, target } = self.generators[x].kind else { return Ok(()) };
        let ok = match self.word_ends(w) {
            Some((s, t)) => s == source && t == target,
            None if w.is_empty() => source == target,
            None => true,
        };
        if ok {
            Ok(())
        } else {
            Err(DgaError::NonComposable(format!("d{} leaves the components of the chord", self.generators[x].name)))
        }
    }

    /// (source, target) of a composable chord word: the source of its last
    /// chord and the target of its first. None if the word has no chords.
    pub fn word_ends(&self, w: &[usize]) -> Option<(usize, usize)> {
        let chords: Vec<(usize, usize)> = w
            .iter()
            .filter_map(|&i| match self.generators[i].kind {
                GenKind::Chord { source, target } => Some((source, target)),
                GenKind::Orbit => None,
            })
            .collect();
        Some((chords.last()?.0, chords.first()?.1))
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn lookup(&self, name: &str) -> Result<usize, DgaError> {
        self.index.get(name).copied().ok_or_else(|| DgaError::UnknownGenerator(name.to_string()))
    }

    pub fn differential_of(&self, i: usize) -> &Element {
        &self.differential[i]
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        let d: i64 = w.iter().map(|&i| self.generators[i].degree).sum();
        match self.grading {
            Grading::Z => d,
            Grading::Z2 => d.rem_euclid(2),
        }
    }

    pub fn word_link(&self, w: &[usize]) -> Option<i64> {
        w.iter().map(|&i| self.generators[i].link).sum()
    }

    fn odd(&self, i: usize) -> bool {
        self.generators[i].is_odd()
    }

    /// Canonical form of a raw word: Some((sign, word)), or None when the
    /// word vanishes (a repeated odd generator in commutative mode).
    /// Associative words must be composable.
    pub fn normalize(&self, w: &[usize]) -> Result<Option<(i64, Word)>, DgaError> {
        match self.mode {
            Mode::Commutative => {
                let mut word = w.to_vec();
                let mut sign = 1;
                for i in 1..word.len() {
                    let mut j = i;
                    while j > 0 && word[j - 1] > word[j] {
                        if self.odd(word[j - 1]) && self.odd(word[j]) {
                            sign = -sign;
                        }
                        word.swap(j - 1, j);
                        j -= 1;
                    }
                }
                if word.windows(2).any(|p| p[0] == p[1] && self.odd(p[0])) {
                    return Ok(None);
                }
                Ok(Some((sign, word)))
            }
            Mode::Associative { .. } => {
                if !self.composable(w) {
                    let names: Vec<&str> = w.iter().map(|&i| self.generators[i].name.as_str()).collect();
                    return Err(DgaError::NonComposable(names.join(" ")));
                }
                Ok(Some((1, w.to_vec())))
            }
        }
    }

    /// Whether consecutive chords compose: c_ij · c_kl ≠ 0 requires i = l.
    pub fn composable(&self, w: &[usize]) -> bool {
        let chords: Vec<(usize, usize)> = w
            .iter()
            .filter_map(|&i| match self.generators[i].kind {
                GenKind::Chord { source, target } => Some((source, target)),
                GenKind::Orbit => None,
            })
            .collect();
        chords.windows(2).all(|p| p[0].0 == p[1].1)
    }

    /// Product of two normalized words, or None if it vanishes.
    pub fn mul_words(&self, a: &[usize], b: &[usize]) -> Option<(i64, Word)> {
        let w: Word = a.iter().chain(b).copied().collect();
        match self.mode {
            Mode::Commutative => self.normalize(&w).ok().flatten(),
            Mode::Associative { .. } => self.composable(&w).then_some((1, w)),
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                if let Some((sign, w)) = self.mul_words(a, b) {
                    out.add_term(w, (ca * cb).scale(&Rational::from_integer(sign.into())));
                }
            }
        }
        out
    }

    pub fn word_element(&self, w: &[usize]) -> Element {
        match self.normalize(w) {
            Ok(Some((sign, word))) => Element::term(word, UPoly::constant(Rational::from_integer(sign.into()))),
            _ => Element::zero(),
        }
    }

    pub fn generator_element(&self, name: &str) -> Result<Element, DgaError> {
        Ok(Element::term(vec![self.lookup(name)?], UPoly::one()))
    }

    /// Leibniz extension: d(γ₁…γₗ) = Σ (−1)^{|γ₁…γᵢ₋₁|} γ₁…γᵢ₋₁ dγᵢ γᵢ₊₁…γₗ.
    pub fn apply_differential(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            let mut prefix_degree = 0;
            for (i, &g) in w.iter().enumerate() {
                let dg = &self.differential[g];
                if !dg.is_zero() {
                    let sign = if prefix_degree % 2 == 0 { 1 } else { -1 };
                    let prefix = Element::term(w[..i].to_vec(), UPoly::one());
                    let suffix = Element::term(w[i + 1..].to_vec(), UPoly::one());
                    let piece = self.mul(&self.mul(&prefix, dg), &suffix);
                    out = out.add(&piece.scale(&c.scale(&Rational::from_integer(sign.into()))));
                }
                prefix_degree += self.generators[g].degree;
            }
        }
        out
    }

    /// Generators x with d(dx) ≠ 0, with the residue.
    pub fn check_d_squared(&self) -> Vec<(String, Element)> {
        (0..self.generators.len())
            .filter_map(|i| {
                let r = self.apply_differential(&self.differential[i]);
                (!r.is_zero()).then(|| (self.generators[i].name.clone(), r))
            })
            .collect()
    }

    /// Terms of dx whose link degree differs from that of x. Only generators
    /// and words carrying link degrees are checked.
    pub fn check_bidegree(&self) -> Vec<(String, Word)> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let Some(l) = g.link else { continue };
            for (w, _) in self.differential[i].terms() {
                if let Some(wl) = self.word_link(w) {
                    if wl != l {
                        out.push((g.name.clone(), w.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_bigraded(&self) -> bool {
        !self.generators.is_empty() && self.generators.iter().all(|g| g.link.is_some())
    }

    /// Substitutes U = s in every coefficient, giving an algebra over Q.
    pub fn evaluate_u(&self, s: &Rational) -> Dga {
        let differential = self.differential.iter().map(|e| e.map_coeffs(|p| UPoly::constant(p.eval(s)))).collect();
        Dga { ring: RingTag::Q, differential, ..self.clone() }
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&i| self.generators[i].name.as_str()).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in x.terms() {
            let coeff = if c.is_constant() {
                format_rational(&c.coeff(0))
            } else {
                format!("({c})")
            };
            parts.push(match (coeff.as_str(), w.is_empty()) {
                (_, true) => coeff.clone(),
                ("1", false) => self.format_word(w),
                ("-1", false) => format!("-{}", self.format_word(w)),
                _ => format!("{coeff} {}", self.format_word(w)),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub(crate) mod fixtures {
    use super::*;
    use crate::ring::int;

    pub fn t(c: i64, upow: usize, w: &[&str]) -> RawTerm {
        RawTerm::new(int(c), upow, w)
    }

    pub fn diff(name: &str, terms: Vec<RawTerm>) -> (String, Vec<RawTerm>) {
        (name.to_string(), terms)
    }
}
