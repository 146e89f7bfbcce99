use super::{Dga, DgaError, GenKind, Generator, Grading, Mode, RawTerm};
use crate::ring::{format_rational, parse_rational, RingTag};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed algebra document: {0}")]
    Syntax(String),
    #[error(transparent)]
    Domain(#[from] DgaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ModeDoc {
    Commutative,
    Associative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum KindDoc {
    Orbit(String),
    Chord([usize; 2]),
}

fn yes() -> bool {
    true
}

fn orbit() -> KindDoc {
    KindDoc::Orbit("orbit".into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct GenDoc {
    name: String,
    deg: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    link: Option<i64>,
    #[serde(default = "yes")]
    good: bool,
    #[serde(default = "orbit")]
    kind: KindDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TermDoc {
    coeff: String,
    #[serde(default)]
    upow: usize,
    word: Vec<String>,
}

/// The JSON interchange form of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgaDoc {
    ring: RingTag,
    mode: ModeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grading: Option<String>,
    generators: Vec<GenDoc>,
    #[serde(default)]
    differential: BTreeMap<String, Vec<TermDoc>>,
}

impl DgaDoc {
    pub fn parse(text: &str) -> Result<DgaDoc, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Syntax(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra documents serialize")
    }

    pub fn build(&self) -> Result<Dga, FormatError> {
        let mode = match self.mode {
            ModeDoc::Commutative => Mode::Commutative,
            ModeDoc::Associative => Mode::Associative { components: self.components.unwrap_or(1) },
        };
        let grading = match self.grading.as_deref() {
            None | Some("Z") => Grading::Z,
            Some("Z2") => Grading::Z2,
            Some(other) => return Err(FormatError::Syntax(format!("unknown grading `{other}`"))),
        };
        let mut generators = Vec::new();
        for g in &self.generators {
            let kind = match &g.kind {
                KindDoc::Orbit(s) if s == "orbit" => GenKind::Orbit,
                KindDoc::Orbit(s) => return Err(FormatError::Syntax(format!("unknown generator kind `{s}`"))),
                KindDoc::Chord([source, target]) => GenKind::Chord { source: *source, target: *target },
            };
            generators.push(Generator { name: g.name.clone(), degree: g.deg, link: g.link, good: g.good, kind });
        }
        let mut differential = Vec::new();
        for (name, terms) in &self.differential {
            let mut raw = Vec::new();
            for t in terms {
                let coeff = parse_rational(&t.coeff).map_err(|e| FormatError::Syntax(e.to_string()))?;
                raw.push(RawTerm { coeff, upow: t.upow, word: t.word.clone() });
            }
            differential.push((name.clone(), raw));
        }
        Ok(Dga::new(self.ring, mode, grading, generators, &differential)?)
    }

    /// Canonical document of an algebra: generators in canonical order,
    /// normalized words, one term per U-power.
    pub fn from_dga(a: &Dga) -> DgaDoc {
        let (mode, components) = match a.mode() {
            Mode::Commutative => (ModeDoc::Commutative, None),
            Mode::Associative { components } => (ModeDoc::Associative, Some(components)),
        };
        let generators = a
            .generators()
            .iter()
            .map(|g| GenDoc {
                name: g.name.clone(),
                deg: g.degree,
                link: g.link,
                good: g.good,
                kind: match g.kind {
                    GenKind::Orbit => orbit(),
                    GenKind::Chord { source, target } => KindDoc::Chord([source, target]),
                },
            })
            .collect();
        let mut differential = BTreeMap::new();
        for (i, g) in a.generators().iter().enumerate() {
            let dx = a.differential_of(i);
            if dx.is_zero() {
                continue;
            }
            let mut terms = Vec::new();
            for (w, c) in dx.terms() {
                for (upow, q) in c.terms() {
                    terms.push(TermDoc {
                        coeff: format_rational(q),
                        upow,
                        word: w.iter().map(|&j| a.generator(j).name.clone()).collect(),
                    });
                }
            }
            differential.insert(g.name.clone(), terms);
        }
        DgaDoc {
            ring: a.ring(),
            mode,
            components,
            grading: (a.grading() == Grading::Z2).then(|| "Z2".to_string()),
            generators,
            differential,
        }
    }
}

impl Dga {
    pub fn from_json(text: &str) -> Result<Dga, FormatError> {
        DgaDoc::parse(text)?.build()
    }

    pub fn to_json(&self) -> String {
        DgaDoc::from_dga(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = r#"{
        "ring": "Q", "mode": "associative",
        "generators": [
            {"name": "a1", "deg": 0}, {"name": "a2", "deg": 0}, {"name": "a3", "deg": 0},
            {"name": "b1", "deg": 1}, {"name": "b2", "deg": 1}
        ],
        "differential": {
            "b1": [{"coeff": "1", "word": []}, {"coeff": "1", "word": ["a1"]}, {"coeff": "1", "word": ["a3"]},
                   {"coeff": "1", "word": ["a1", "a2", "a3"]}],
            "b2": [{"coeff": "-1", "word": []}, {"coeff": "-1", "word": ["a1"]}, {"coeff": "-1", "word": ["a3"]},
                   {"coeff": "-1", "word": ["a3", "a2", "a1"]}]
        }
    }"#;

    #[test]
    fn round_trip() {
        let a = Dga::from_json(TREFOIL).unwrap();
        let text = a.to_json();
        let b = Dga::from_json(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_json(), text);
    }

    #[test]
    fn errors_are_classified() {
        assert!(matches!(Dga::from_json("{"), Err(FormatError::Syntax(_))));
        let unknown = r#"{"ring":"Q","mode":"commutative","generators":[{"name":"a","deg":1}],"differential":{"a":[{"coeff":"1","word":["z"]}]}}"#;
        assert!(matches!(Dga::from_json(unknown), Err(FormatError::Domain(DgaError::UnknownGenerator(_)))));
        let chord = r#"{"ring":"QU","mode":"associative","components":2,"generators":[{"name":"c","deg":1,"kind":[0,1]}]}"#;
        let a = Dga::from_json(chord).unwrap();
        assert_eq!(a.generator(0).kind, GenKind::Chord { source: 0, target: 1 });
    }
}
