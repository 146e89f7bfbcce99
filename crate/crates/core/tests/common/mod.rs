#![allow(dead_code)]

use num_traits::Zero;
use proptest::prelude::*;
use sftkit::ring::{gcd, int, normalize, EuclideanRing, Matrix, Rational, UPoly};

/// Cofactor-expansion determinant; independent of the elimination code.
pub fn det<R: EuclideanRing>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].times(&det(&minor));
                acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Normalized gcd of all k×k minors.
pub fn minor_gcd<R: EuclideanRing>(m: &Matrix<R>, k: usize) -> R {
    let mut g = R::zero();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub: Vec<Vec<R>> = rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
            g = gcd(&g, &det(&sub));
        }
    }
    normalize(&g)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| sftkit::ring::rat(n, d))
}

pub fn small_upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 4 => -3i64..=3], 0..=max_deg + 1)
        .prop_map(|cs| UPoly::new(cs.into_iter().map(int).collect()))
}

pub fn upoly_matrix(rows: usize, cols: usize, max_deg: usize) -> impl Strategy<Value = Matrix<UPoly>> {
    prop::collection::vec(small_upoly(max_deg), rows * cols)
        .prop_map(move |v| Matrix::from_rows(v.chunks(cols).map(<[UPoly]>::to_vec).collect()))
}

pub fn product<R: EuclideanRing>(xs: &[R]) -> R {
    xs.iter().fold(R::one(), |acc, x| acc.times(x))
}

pub fn is_one<R: EuclideanRing>(x: &R) -> bool {
    *x == R::one()
}

pub fn zero_poly() -> UPoly {
    UPoly::zero()
}
