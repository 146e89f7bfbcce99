mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sftkit::dga::catalog;
use sftkit::dga::*;
use sftkit::ring::{int, rat, Matrix, RingTag, UPoly};

/// Words over `degrees` of length at most 2 with total degree `target`.
fn short_words(names: &[String], degrees: &[i64], target: i64) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for i in 0..names.len() {
        if degrees[i] == target {
            out.push(vec![names[i].clone()]);
        }
        for j in 0..names.len() {
            if degrees[i] + degrees[j] == target {
                out.push(vec![names[i].clone(), names[j].clone()]);
            }
        }
    }
    out
}

/// A random algebra on up to five generators of degree 1..4 whose
/// differential is any degree-compatible combination of short words.
fn random_dga(rng: &mut ChaCha8Rng, mode: Mode, ring: RingTag) -> Dga {
    let count = rng.gen_range(1..=5);
    let names: Vec<String> = (0..count).map(|i| format!("x{i}")).collect();
    let degrees: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=4)).collect();
    let gens = names.iter().zip(&degrees).map(|(n, &d)| Generator::orbit(n, d)).collect();
    let mut diff = Vec::new();
    for (n, &d) in names.iter().zip(&degrees) {
        let mut terms = Vec::new();
        for w in short_words(&names, &degrees, d - 1) {
            if rng.gen_bool(0.4) {
                let upow = if ring == RingTag::QU { rng.gen_range(0..=2) } else { 0 };
                let refs: Vec<&str> = w.iter().map(String::as_str).collect();
                terms.push(RawTerm::new(rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)), upow, &refs));
            }
        }
        diff.push((n.clone(), terms));
    }
    Dga::new(ring, mode, Grading::Z, gens, &diff).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, a: &Dga, max_len: usize) -> Vec<usize> {
    let n = a.generators().len();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

fn leibniz_holds(a: &Dga, w: &[usize], v: &[usize]) -> bool {
    let (ew, ev) = (a.word_element(w), a.word_element(v));
    let lhs = a.apply_differential(&a.mul(&ew, &ev));
    let sign = if a.word_degree(w) % 2 == 0 { int(1) } else { int(-1) };
    let rhs = a.mul(&a.apply_differential(&ew), &ev).add(&a.mul(&ew, &a.apply_differential(&ev)).scale(&UPoly::constant(sign)));
    lhs == rhs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leibniz_on_random_word_pairs(seed in any::<u64>(), commutative in any::<bool>(), deformed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mode = if commutative { Mode::Commutative } else { Mode::Associative { components: 1 } };
        let ring = if deformed { RingTag::QU } else { RingTag::Q };
        let a = random_dga(&mut rng, mode, ring);
        let (w, v) = (random_word(&mut rng, &a, 3), random_word(&mut rng, &a, 3));
        prop_assert!(leibniz_holds(&a, &w, &v));
    }

    #[test]
    fn normalization_is_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_dga(&mut rng, Mode::Commutative, RingTag::Q);
        let w = random_word(&mut rng, &a, 5);
        match a.normalize(&w).unwrap() {
            None => prop_assert!(a.word_element(&w).is_zero()),
            Some((s, n)) => {
                prop_assert_eq!(a.normalize(&n).unwrap(), Some((1, n.clone())));
                if w.len() >= 2 {
                    let i = rng.gen_range(0..w.len() - 1);
                    let mut t = w.clone();
                    t.swap(i, i + 1);
                    let odd = |g: usize| a.generator(g).is_odd();
                    let koszul = if odd(w[i]) && odd(w[i + 1]) { -1 } else { 1 };
                    prop_assert_eq!(a.normalize(&t).unwrap(), Some((s * koszul, n)));
                }
            }
        }
    }

    #[test]
    fn zero_augmentation_keeps_length_one_terms(seed in any::<u64>(), commutative in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mode = if commutative { Mode::Commutative } else { Mode::Associative { components: 1 } };
        let a = random_dga(&mut rng, mode, RingTag::QU);
        let lin = linearize(&a, &Augmentation::zero(&a).unwrap());
        for i in 0..a.generators().len() {
            let want: Vec<(usize, UPoly)> =
                a.differential_of(i).terms().filter(|(w, _)| w.len() == 1).map(|(w, c)| (w[0], c.clone())).collect();
            prop_assert_eq!(lin.column(i), want.as_slice());
        }
    }

    #[test]
    fn evaluation_agrees_with_free_rank(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng);
        prop_assert!(c.d_squared_is_zero());
        let over_qu = homology(&c, 0, 2);
        let generic = homology(&c.evaluate_u(&rat(97, 13)), 0, 2);
        let at_one = homology(&c.evaluate_u(&int(1)), 0, 2);
        for k in 0..3 {
            prop_assert_eq!(generic[k].free_rank, over_qu[k].free_rank);
            prop_assert!(at_one[k].free_rank >= over_qu[k].free_rank);
        }
    }
}

/// Unitriangular matrix with random polynomial entries above the diagonal.
fn unitriangular(rng: &mut ChaCha8Rng, n: usize) -> Matrix<UPoly> {
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                m.set(i, j, UPoly::from_ints(&[rng.gen_range(-2..=2), rng.gen_range(-1..=1)]));
            }
        }
    }
    m
}

fn inverse_unitriangular(t: &Matrix<UPoly>) -> Matrix<UPoly> {
    let n = t.rows();
    let mut minus_nil = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            minus_nil.set(i, j, -t.get(i, j).clone());
        }
    }
    let mut sum = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for _ in 1..n {
        power = power.mul(&minus_nil);
        for i in 0..n {
            for j in 0..n {
                let v = sum.get(i, j) + power.get(i, j);
                sum.set(i, j, v);
            }
        }
    }
    sum
}

/// Direct sum of free cells and pairs e → p·f in degrees 0..=3, then a
/// random unimodular change of basis in every degree.
fn random_complex(rng: &mut ChaCha8Rng) -> ChainComplex {
    let mut dims = [0usize; 4];
    let mut pieces = Vec::new();
    for _ in 0..rng.gen_range(1..=5) {
        let k = rng.gen_range(0..3);
        if rng.gen_bool(0.3) {
            pieces.push((k, None, dims[k]));
            dims[k] += 1;
        } else {
            let p = match rng.gen_range(0..4) {
                0 => UPoly::from_ints(&[1]),
                1 => UPoly::u_pow(1),
                2 => UPoly::from_ints(&[-1, 1]),
                _ => UPoly::from_ints(&[0, 0, 2]),
            };
            pieces.push((k, Some((dims[k + 1], p)), dims[k]));
            dims[k] += 1;
            dims[k + 1] += 1;
        }
    }
    let mut d: Vec<Matrix<UPoly>> = (1..4).map(|k| Matrix::zeros(dims[k - 1], dims[k])).collect();
    for (k, pair, row) in &pieces {
        if let Some((col, p)) = pair {
            d[*k].set(*row, *col, p.clone());
        }
    }
    let change: Vec<Matrix<UPoly>> = dims.iter().map(|&n| unitriangular(rng, n)).collect();
    let d: Vec<Matrix<UPoly>> = (0..3).map(|k| change[k].mul(&d[k]).mul(&inverse_unitriangular(&change[k + 1]))).collect();
    let offsets: Vec<usize> = dims.iter().scan(0, |acc, &n| {
        let o = *acc;
        *acc += n;
        Some(o)
    }).collect();
    let mut basis = Vec::new();
    let mut columns = Vec::new();
    for (k, &n) in dims.iter().enumerate() {
        for j in 0..n {
            basis.push(BasisCell { label: format!("e{k}_{j}"), degree: k as i64, link: None });
            let col = if k == 0 {
                vec![]
            } else {
                (0..dims[k - 1])
                    .filter(|&i| !d[k - 1].get(i, j).is_zero())
                    .map(|i| (offsets[k - 1] + i, d[k - 1].get(i, j).clone()))
                    .collect()
            };
            columns.push(col);
        }
    }
    ChainComplex::new(RingTag::QU, Grading::Z, basis, columns)
}

#[test]
fn stored_examples_are_bigraded_complexes() {
    for (name, a) in catalog::stored() {
        assert!(a.check_d_squared().is_empty(), "{name}");
        if a.is_bigraded() {
            assert!(a.check_bidegree().is_empty(), "{name}");
            for i in 0..a.generators().len() {
                for (w, _) in a.differential_of(i).terms() {
                    assert_eq!(a.word_degree(w), a.generator(i).degree - 1, "{name}");
                }
            }
        }
    }
}

#[test]
fn leibniz_on_stored_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(sftkit::trees::generate::seed_from_env());
    for (_, a) in catalog::stored() {
        for _ in 0..40 {
            let (w, v) = (random_word(&mut rng, &a, 3), random_word(&mut rng, &a, 3));
            if a.normalize(&w).is_ok() && a.normalize(&v).is_ok() {
                assert!(leibniz_holds(&a, &w, &v));
            }
        }
    }
}

#[test]
fn set_u_examples() {
    assert_eq!(UPoly::from_ints(&[1, 0, 1]).eval(&int(1)), int(2));
    let a = catalog::deformed();
    let zero = a.evaluate_u(&int(0));
    let p = zero.lookup("p").unwrap();
    assert!(zero.differential_of(p).is_zero());
    assert!(zero.check_d_squared().is_empty());
    let one = a.evaluate_u(&int(1));
    assert!(one.check_d_squared().is_empty());
    let _ = common::zero_poly();
}
