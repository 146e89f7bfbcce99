use super::complex::{BasisCell, ChainComplex};
use super::{Dga, DgaError, Element};
use crate::ring::{RingTag, UPoly};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A verified augmentation: the value of ε on each generator, indexed like
/// the generators of the algebra it was checked against.
#[derive(Debug, Clone, PartialEq)]
pub struct Augmentation {
    values: Vec<UPoly>,
}

impl Augmentation {
    pub fn values(&self) -> &[UPoly] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &UPoly {
        &self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// ε extended multiplicatively to an element.
    pub fn eval(&self, x: &Element) -> UPoly {
        let mut total = UPoly::zero();
        for (w, c) in x.terms() {
            let v = w.iter().fold(c.clone(), |acc, &i| &acc * &self.values[i]);
            total = &total + &v;
        }
        total
    }
}

/// Checks that `eps` (unlisted generators map to 0) preserves degree and
/// commutes with the differential.
pub fn augment(a: &Dga, eps: &BTreeMap<String, UPoly>) -> Result<Augmentation, DgaError> {
    let mut values = vec![UPoly::zero(); a.generators().len()];
    for (name, v) in eps {
        let i = a.lookup(name)?;
        if v.is_zero() {
            continue;
        }
        if a.generator(i).degree != 0 {
            return Err(DgaError::NotGradingPreserving(name.clone()));
        }
        if a.ring() == RingTag::Q && !v.is_constant() {
            return Err(DgaError::RingMismatch(format!("ε({name}) = {v} involves U over Q")));
        }
        values[i] = v.clone();
    }
    let aug = Augmentation { values };
    for (i, g) in a.generators().iter().enumerate() {
        let v = aug.eval(a.differential_of(i));
        if !v.is_zero() {
            return Err(DgaError::NotAChainMap { generator: g.name.clone(), value: v.to_string() });
        }
    }
    Ok(aug)
}

/// The linearized complex ker ε/(ker ε)²: basis the generators, differential
/// the linear part of dx after substituting y ↦ y + ε(y).
pub fn linearize(a: &Dga, eps: &Augmentation) -> ChainComplex {
    let basis = a
        .generators()
        .iter()
        .map(|g| BasisCell { label: g.name.clone(), degree: g.degree, link: g.link })
        .collect();
    let mut columns = Vec::with_capacity(a.generators().len());
    for i in 0..a.generators().len() {
        let mut col: BTreeMap<usize, UPoly> = BTreeMap::new();
        for (w, c) in a.differential_of(i).terms() {
            for (pos, &g) in w.iter().enumerate() {
                let mut coeff = c.clone();
                for (other, &h) in w.iter().enumerate() {
                    if other != pos {
                        coeff = &coeff * eps.value(h);
                    }
                }
                if !coeff.is_zero() {
                    let entry = col.entry(g).or_default();
                    *entry = &*entry + &coeff;
                }
            }
        }
        columns.push(col.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    ChainComplex::new(a.ring(), a.grading(), basis, columns)
}

impl Augmentation {
    pub fn zero(a: &Dga) -> Result<Augmentation, DgaError> {
        augment(a, &BTreeMap::new())
    }

    pub fn constant(a: &Dga, values: &[(&str, crate::ring::Rational)]) -> Result<Augmentation, DgaError> {
        let map = values.iter().map(|(n, v)| (n.to_string(), UPoly::constant(v.clone()))).collect();
        augment(a, &map)
    }
}
