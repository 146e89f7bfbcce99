//! Reduced cyclic homology of a free associative dg-algebra: words modulo
//! the Koszul-signed rotation, with the induced differential.

use crate::dga::{homology, BasisCell, ChainComplex, Dga, DgaError, Element, Generator, Grading, HomologyGroup, Mode, Word, WordFilter};
use crate::ring::{RingTag, UPoly};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// A nonzero coinvariant class, stored by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicWord {
    pub word: Word,
    pub label: String,
    pub degree: i64,
    pub link: Option<i64>,
}

/// How `reduced_cyclic_homology` got its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Enumerating coinvariant classes of the algebra itself.
    Words,
    /// Linear differential over Q: classes of words in the homology of the
    /// generating complex, which carry no differential.
    Formal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicHomology {
    pub groups: Vec<HomologyGroup>,
    pub route: Route,
}

impl CyclicHomology {
    pub fn rank(&self, degree: i64) -> usize {
        self.groups.iter().find(|g| g.degree == degree).map_or(0, |g| g.free_rank)
    }
}

fn require_associative(a: &Dga) -> Result<(), DgaError> {
    match a.mode() {
        Mode::Associative { .. } => Ok(()),
        Mode::Commutative => Err(DgaError::Unsupported("cyclic words need an associative algebra".into())),
    }
}

/// τ(γ₁…γₗ) = (−1)^{|γ₁|(|γ₂|+…+|γₗ|)} γ₂…γₗγ₁.
pub fn rotate(a: &Dga, w: &[usize]) -> (i64, Word) {
    if w.is_empty() {
        return (1, vec![]);
    }
    let first = a.generator(w[0]).degree;
    let rest: i64 = w[1..].iter().map(|&i| a.generator(i).degree).sum();
    let sign = if (first * rest).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut r = w[1..].to_vec();
    r.push(w[0]);
    (sign, r)
}

/// Whether the chords of `w` close up into a loop.
pub fn cyclically_composable(a: &Dga, w: &[usize]) -> bool {
    a.composable(w) && a.word_ends(w).is_none_or(|(s, t)| s == t)
}

/// [w] = sign·[rep] with rep the least rotation, or None when some rotation
/// returns w with sign −1 and the class vanishes.
pub fn canonical_class(a: &Dga, w: &[usize]) -> Option<(i64, Word)> {
    if w.is_empty() {
        return None;
    }
    let mut best = (1, w.to_vec());
    let (mut sign, mut cur) = (1, w.to_vec());
    for _ in 1..w.len() {
        let (s, next) = rotate(a, &cur);
        sign *= s;
        cur = next;
        if cur == w && sign == -1 {
            return None;
        }
        if cur < best.1 {
            best = (sign, cur.clone());
        }
    }
    Some(best)
}

fn cyclic_word(a: &Dga, w: Word) -> CyclicWord {
    CyclicWord { label: a.format_word(&w), degree: a.word_degree(&w), link: a.word_link(&w), word: w }
}

/// One canonical representative per nonzero class with degree in `lo..=hi`.
pub fn cyclic_basis(a: &Dga, lo: i64, hi: i64, link: Option<i64>) -> Result<Vec<CyclicWord>, DgaError> {
    require_associative(a)?;
    if link.is_none() && a.generators().iter().any(|g| g.degree == 0) {
        return Err(DgaError::InfiniteBasis("degree-0 generators make every cyclic degree infinite".into()));
    }
    let words = crate::dga::enumerate_words(a, lo, hi, WordFilter { link, reduced: true })?;
    Ok(words
        .into_iter()
        .filter(|w| cyclically_composable(a, w))
        .filter(|w| canonical_class(a, w).is_some_and(|(s, r)| s == 1 && &r == w))
        .map(|w| cyclic_word(a, w))
        .collect())
}

/// Projects an algebra element to coinvariants, keyed by representative.
pub fn project(a: &Dga, x: &Element) -> BTreeMap<Word, UPoly> {
    let mut out: BTreeMap<Word, UPoly> = BTreeMap::new();
    for (w, c) in x.terms() {
        if let Some((s, r)) = canonical_class(a, w) {
            let e = out.entry(r).or_default();
            *e = &*e + &c.scale(&crate::ring::int(s));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// d[w]: the algebra differential of w, projected to coinvariants.
pub fn cyclic_differential(a: &Dga, w: &[usize]) -> BTreeMap<Word, UPoly> {
    project(a, &a.apply_differential(&a.word_element(w)))
}

/// The coinvariant complex in degrees `lo−1..=hi+1`.
pub fn cyclic_complex(a: &Dga, lo: i64, hi: i64, link: Option<i64>) -> Result<ChainComplex, DgaError> {
    let basis = cyclic_basis(a, lo - 1, hi + 1, link)?;
    let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, c)| (&c.word, i)).collect();
    let columns = basis
        .iter()
        .map(|c| cyclic_differential(a, &c.word).into_iter().filter_map(|(w, v)| index.get(&w).map(|&i| (i, v))).collect())
        .collect();
    let cells = basis.iter().map(|c| BasisCell { label: c.label.clone(), degree: c.degree, link: c.link }).collect();
    Ok(ChainComplex::new(a.ring(), a.grading(), cells, columns))
}

/// Reduced cyclic homology by enumerating coinvariant classes.
pub fn reduced_cyclic_homology_words(a: &Dga, lo: i64, hi: i64, link: Option<i64>) -> Result<Vec<HomologyGroup>, DgaError> {
    Ok(homology(&cyclic_complex(a, lo, hi, link)?, lo, hi))
}

fn linear_over_q(a: &Dga) -> bool {
    a.ring() == RingTag::Q
        && a.grading() == Grading::Z
        && a.mode() == Mode::Associative { components: 1 }
        && (0..a.generators().len()).all(|i| a.differential_of(i).terms().all(|(w, _)| w.len() == 1))
}

/// The zero-differential algebra on a basis of the homology of the
/// generating complex, split by degree and link.
pub fn homology_letters(a: &Dga) -> Dga {
    let mut by_link: BTreeMap<Option<i64>, Vec<usize>> = BTreeMap::new();
    for (i, g) in a.generators().iter().enumerate() {
        by_link.entry(g.link).or_default().push(i);
    }
    let mut letters = Vec::new();
    for (link, members) in by_link {
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let cells = members
            .iter()
            .map(|&i| BasisCell { label: a.generator(i).name.clone(), degree: a.generator(i).degree, link })
            .collect();
        let columns = members
            .iter()
            .map(|&i| a.differential_of(i).terms().filter_map(|(w, c)| pos.get(&w[0]).map(|&p| (p, c.clone()))).collect())
            .collect();
        let v = ChainComplex::new(RingTag::Q, Grading::Z, cells, columns);
        let lo = members.iter().map(|&i| a.generator(i).degree).min().unwrap_or(0);
        let hi = members.iter().map(|&i| a.generator(i).degree).max().unwrap_or(0);
        for g in homology(&v, lo, hi) {
            for r in 0..g.free_rank {
                let name = match link {
                    Some(l) => format!("h{}_{}_{}", g.degree, l, r),
                    None => format!("h{}_{}", g.degree, r),
                };
                let mut gen = Generator::orbit(&name, g.degree);
                gen.link = link;
                letters.push(gen);
            }
        }
    }
    Dga::new(RingTag::Q, Mode::Associative { components: 1 }, Grading::Z, letters, &[]).expect("homology letters are distinct")
}

/// Reduced cyclic homology in degrees `lo..=hi`, optionally restricted to
/// one link degree. Linear differentials over Q take the formal route.
pub fn reduced_cyclic_homology(a: &Dga, lo: i64, hi: i64, link: Option<i64>) -> Result<CyclicHomology, DgaError> {
    require_associative(a)?;
    if linear_over_q(a) {
        let letters = homology_letters(a);
        let groups = reduced_cyclic_homology_words(&letters, lo, hi, link)?;
        return Ok(CyclicHomology { groups, route: Route::Formal });
    }
    Ok(CyclicHomology { groups: reduced_cyclic_homology_words(a, lo, hi, link)?, route: Route::Words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::catalog;
    use crate::ring::RingTag;

    fn free(gens: Vec<Generator>, d: &[(String, Vec<crate::dga::RawTerm>)]) -> Dga {
        Dga::new(RingTag::Q, Mode::Associative { components: 1 }, Grading::Z, gens, d).unwrap()
    }

    #[test]
    fn sign_killed_classes() {
        let a = free(vec![Generator::orbit("x", 1)], &[]);
        let x = a.lookup("x").unwrap();
        assert_eq!(canonical_class(&a, &[x, x]), None);
        assert_eq!(canonical_class(&a, &[x]), Some((1, vec![x])));
        let b = free(vec![Generator::orbit("b", 2)], &[]);
        assert_eq!(canonical_class(&b, &[0, 0]), Some((1, vec![0, 0])));
        let labels: Vec<String> = cyclic_basis(&a, 0, 5, None).unwrap().into_iter().map(|c| c.label).collect();
        assert_eq!(labels, ["x", "x x x", "x x x x x"]);
    }

    #[test]
    fn differential_of_a_square() {
        use crate::dga::RawTerm;
        let a = free(
            vec![Generator::orbit("a", 2), Generator::orbit("b", 1)],
            &[("a".to_string(), vec![RawTerm::new(crate::ring::int(1), 0, &["b"])])],
        );
        let (ia, ib) = (a.lookup("a").unwrap(), a.lookup("b").unwrap());
        let d = cyclic_differential(&a, &[ia]);
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(vec![ib], UPoly::one())]);
        let d = cyclic_differential(&a, &[ia, ia]);
        let (_, rep) = canonical_class(&a, &[ia, ib]).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(rep, UPoly::constant(crate::ring::int(2)))]);
    }

    #[test]
    fn powers_of_one_even_generator() {
        let a = free(vec![Generator::orbit("g", 2)], &[]);
        let h = reduced_cyclic_homology(&a, 0, 12, None).unwrap();
        for k in 0..=12 {
            assert_eq!(h.rank(k), usize::from(k > 0 && k % 2 == 0), "degree {k}");
        }
    }

    #[test]
    fn empty_algebra() {
        let a = free(vec![], &[]);
        let h = reduced_cyclic_homology(&a, 0, 6, None).unwrap();
        assert!(h.groups.iter().all(|g| g.free_rank == 0));
    }

    #[test]
    fn unit_killer_has_odd_classes() {
        let h = reduced_cyclic_homology(&catalog::unit_killer(), 0, 9, None).unwrap();
        assert_eq!(h.route, Route::Words);
        let ranks: Vec<usize> = (0..=9).map(|k| h.rank(k)).collect();
        assert_eq!(ranks, [0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn formal_route_matches_words() {
        let a = catalog::acyclic_family(&[1, 2], Mode::Associative { components: 1 });
        let fast = reduced_cyclic_homology(&a, 0, 6, None).unwrap();
        assert_eq!(fast.route, Route::Formal);
        let slow = reduced_cyclic_homology_words(&a, 0, 6, None).unwrap();
        assert_eq!(fast.groups, slow);
        let g = free(vec![Generator::orbit("c", 2), Generator::orbit("e", 3), Generator::orbit("f", 4)], &[("f".into(), vec![crate::dga::RawTerm::new(crate::ring::int(1), 0, &["e"])])]);
        assert_eq!(reduced_cyclic_homology(&g, 0, 8, None).unwrap().groups, reduced_cyclic_homology_words(&g, 0, 8, None).unwrap());
    }

    #[test]
    fn commutative_is_rejected() {
        let a = catalog::koszul();
        assert!(matches!(cyclic_basis(&a, 0, 3, None), Err(DgaError::Unsupported(_))));
    }

    use num_traits::One;
}
