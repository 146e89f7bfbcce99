use super::{Dga, DgaError, Grading, Mode, Word};
use crate::ring::{invariant_factors, rank, EuclideanRing, Matrix, Rational, RingTag, UPoly};
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCell {
    pub label: String,
    pub degree: i64,
    pub link: Option<i64>,
}

/// A finite complex of free modules. `columns[j]` lists the nonzero
/// coefficients of d(basis j).
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex {
    ring: RingTag,
    grading: Grading,
    basis: Vec<BasisCell>,
    columns: Vec<Vec<(usize, UPoly)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: i64,
    pub free_rank: usize,
    /// Non-unit invariant factors p, one summand Q[U]/(p) each.
    pub torsion: Vec<UPoly>,
}

impl ChainComplex {
    pub fn new(ring: RingTag, grading: Grading, basis: Vec<BasisCell>, columns: Vec<Vec<(usize, UPoly)>>) -> Self {
        assert_eq!(basis.len(), columns.len(), "one column per basis element");
        ChainComplex { ring, grading, basis, columns }
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn basis(&self) -> &[BasisCell] {
        &self.basis
    }

    pub fn column(&self, j: usize) -> &[(usize, UPoly)] {
        &self.columns[j]
    }

    fn class(&self, k: i64) -> i64 {
        match self.grading {
            Grading::Z => k,
            Grading::Z2 => k.rem_euclid(2),
        }
    }

    pub fn cells_in_degree(&self, k: i64) -> Vec<usize> {
        let k = self.class(k);
        (0..self.basis.len()).filter(|&i| self.class(self.basis[i].degree) == k).collect()
    }

    /// Matrix of d: C_k → C_{k−1}, rows indexed by degree k−1 cells.
    pub fn differential_matrix(&self, k: i64) -> Matrix<UPoly> {
        let cols = self.cells_in_degree(k);
        let rows = self.cells_in_degree(k - 1);
        let row_of: HashMap<usize, usize> = rows.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (c, &j) in cols.iter().enumerate() {
            for (i, v) in &self.columns[j] {
                if let Some(&r) = row_of.get(i) {
                    m.set(r, c, v.clone());
                }
            }
        }
        m
    }

    /// Whether every coefficient of d lowers degree by one.
    pub fn degrees_ok(&self) -> bool {
        self.columns.iter().enumerate().all(|(j, col)| {
            col.iter().all(|(i, _)| self.class(self.basis[*i].degree) == self.class(self.basis[j].degree - 1))
        })
    }

    pub fn d_squared_is_zero(&self) -> bool {
        (0..self.basis.len()).all(|j| {
            let mut acc: HashMap<usize, UPoly> = HashMap::new();
            for (i, c) in &self.columns[j] {
                for (h, c2) in &self.columns[*i] {
                    let e = acc.entry(*h).or_default();
                    *e = &*e + &(c * c2);
                }
            }
            acc.values().all(Zero::is_zero)
        })
    }

    pub fn evaluate_u(&self, s: &Rational) -> ChainComplex {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, p)| (*i, UPoly::constant(p.eval(s))))
                    .filter(|(_, p)| !p.is_zero())
                    .collect()
            })
            .collect();
        ChainComplex { ring: RingTag::Q, grading: self.grading, basis: self.basis.clone(), columns }
    }

    fn rank_of(&self, m: &Matrix<UPoly>) -> usize {
        match self.ring {
            RingTag::Q => rank(&m.map(|p| p.coeff(0))),
            RingTag::QU => invariant_factors(m).len(),
        }
    }
}

/// Homology in each degree of `lo..=hi` (degrees 0 and 1 for Z/2 gradings):
/// ranks over Q, or free rank and torsion over Q[U].
pub fn homology(c: &ChainComplex, lo: i64, hi: i64) -> Vec<HomologyGroup> {
    let degrees: Vec<i64> = match c.grading {
        Grading::Z => (lo..=hi).collect(),
        Grading::Z2 => vec![0, 1],
    };
    degrees
        .into_iter()
        .map(|k| {
            let dim = c.cells_in_degree(k).len();
            let out = c.differential_matrix(k);
            let inc = c.differential_matrix(k + 1);
            let r_out = c.rank_of(&out);
            let (r_in, torsion) = match c.ring {
                RingTag::Q => (c.rank_of(&inc), vec![]),
                RingTag::QU => {
                    let f = invariant_factors(&inc);
                    let t = f.iter().filter(|p| !p.is_unit()).cloned().collect();
                    (f.len(), t)
                }
            };
            HomologyGroup { degree: k, free_rank: dim - r_out - r_in, torsion }
        })
        .collect()
}

/// Which words enter a word complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WordFilter {
    /// Keep only words of this total link degree.
    pub link: Option<i64>,
    /// Drop the empty word (the unit).
    pub reduced: bool,
}

/// All normalized words with degree in `lo..=hi` passing `filter`.
/// Commutative words are sorted index lists; associative words are
/// composable sequences.
pub(crate) fn enumerate_words(a: &Dga, lo: i64, hi: i64, filter: WordFilter) -> Result<Vec<Word>, DgaError> {
    let gens = a.generators();
    let commutative = a.mode() == Mode::Commutative;
    let degree_bounded = a.grading() == Grading::Z
        && gens.iter().all(|g| g.degree > 0 || (commutative && g.is_odd()));
    let link_bounded = filter.link.is_some() && gens.iter().all(|g| g.link.is_some_and(|l| l > 0));
    if !degree_bounded && !link_bounded {
        return Err(DgaError::InfiniteBasis(
            "words of a fixed degree are unbounded; generators need positive degree or a positive link filter".into(),
        ));
    }
    let slack: i64 = if commutative { gens.iter().filter(|g| g.degree < 0).map(|g| g.degree).sum() } else { 0 };
    let mut out = Vec::new();
    let mut word = Vec::new();
    struct Ctx<'a> {
        a: &'a Dga,
        lo: i64,
        hi: i64,
        slack: i64,
        filter: WordFilter,
        degree_bounded: bool,
        commutative: bool,
    }
    fn go(cx: &Ctx, word: &mut Word, deg: i64, link: i64, out: &mut Vec<Word>) {
        let a = cx.a;
        let deg_class = match a.grading() {
            Grading::Z => deg,
            Grading::Z2 => deg.rem_euclid(2),
        };
        let link_ok = cx.filter.link.is_none_or(|l| l == link);
        if (!word.is_empty() || !cx.filter.reduced) && deg_class >= cx.lo && deg_class <= cx.hi && link_ok {
            out.push(word.clone());
        }
        let start = if cx.commutative { word.last().copied().unwrap_or(0) } else { 0 };
        for g in start..a.generators().len() {
            let gen = a.generator(g);
            if cx.commutative && word.last() == Some(&g) && gen.is_odd() {
                continue;
            }
            let nd = deg + gen.degree;
            let nl = link + gen.link.unwrap_or(0);
            if cx.degree_bounded && nd + cx.slack > cx.hi {
                continue;
            }
            if let Some(l) = cx.filter.link {
                if gen.link.is_some_and(|x| x > 0) && nl > l {
                    continue;
                }
            }
            if !cx.commutative && !a.composable(&[word.as_slice(), &[g]].concat()) {
                continue;
            }
            word.push(g);
            go(cx, word, nd, nl, out);
            word.pop();
        }
    }
    let cx = Ctx { a, lo, hi, slack, filter, degree_bounded, commutative };
    go(&cx, &mut word, 0, 0, &mut out);
    out.sort_by(|x, y| a.word_degree(x).cmp(&a.word_degree(y)).then(x.len().cmp(&y.len())).then(x.cmp(y)));
    Ok(out)
}

/// The algebra itself as a complex, truncated to words of degree
/// `lo−1..=hi+1` so that homology is exact in `lo..=hi`.
pub fn word_complex(a: &Dga, lo: i64, hi: i64, filter: WordFilter) -> Result<ChainComplex, DgaError> {
    let words = enumerate_words(a, lo - 1, hi + 1, filter)?;
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let basis = words
        .iter()
        .map(|w| BasisCell { label: a.format_word(w), degree: a.word_degree(w), link: a.word_link(w) })
        .collect();
    let columns = words
        .iter()
        .map(|w| {
            let dw = a.apply_differential(&a.word_element(w));
            let mut col: Vec<(usize, UPoly)> =
                dw.terms().filter_map(|(v, c)| index.get(v).map(|&i| (i, c.clone()))).collect();
            col.sort_by_key(|(i, _)| *i);
            col
        })
        .collect();
    Ok(ChainComplex::new(a.ring(), a.grading(), basis, columns))
}
