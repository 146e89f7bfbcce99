use super::{EuclideanRing, Matrix};

/// Smith normal form `left * m * right = diagonal` with unimodular `left`,
/// `right`. `factors` are the nonzero diagonal entries, each normalized and
/// each dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm<R> {
    pub factors: Vec<R>,
    pub diagonal: Matrix<R>,
    pub left: Matrix<R>,
    pub right: Matrix<R>,
}

impl<R: EuclideanRing> SmithForm<R> {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Checks `left * m * right == diagonal` exactly.
    pub fn certifies(&self, m: &Matrix<R>) -> bool {
        self.diagonal.is_diagonal() && self.left.mul(m).mul(&self.right) == self.diagonal
    }
}

pub fn smith_normal_form<R: EuclideanRing>(m: &Matrix<R>) -> SmithForm<R> {
    let (diagonal, left, right) = reduce(m, true);
    let factors = (0..diagonal.rows().min(diagonal.cols()))
        .map(|i| diagonal.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect();
    SmithForm { factors, diagonal, left, right }
}

/// Invariant factors only, skipping the transform bookkeeping.
pub fn invariant_factors<R: EuclideanRing>(m: &Matrix<R>) -> Vec<R> {
    let (d, _, _) = reduce(m, false);
    (0..d.rows().min(d.cols()))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

pub fn rank<R: EuclideanRing>(m: &Matrix<R>) -> usize {
    invariant_factors(m).len()
}

fn reduce<R: EuclideanRing>(m: &Matrix<R>, track: bool) -> (Matrix<R>, Matrix<R>, Matrix<R>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let (mut l, mut r) = if track {
        (Matrix::identity(rows), Matrix::identity(cols))
    } else {
        (Matrix::zeros(0, 0), Matrix::zeros(0, 0))
    };
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if track {
            l.swap_rows(t, pi);
            r.swap_cols(t, pj);
        }
        loop {
            let mut moved = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, rem) = a.get(i, t).div_rem(a.get(t, t));
                let q = q.negated();
                a.add_row(i, t, &q);
                if track {
                    l.add_row(i, t, &q);
                }
                if !rem.is_zero() {
                    a.swap_rows(t, i);
                    if track {
                        l.swap_rows(t, i);
                    }
                    moved = true;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, rem) = a.get(t, j).div_rem(a.get(t, t));
                let q = q.negated();
                a.add_col(j, t, &q);
                if track {
                    r.add_col(j, t, &q);
                }
                if !rem.is_zero() {
                    a.swap_cols(t, j);
                    if track {
                        r.swap_cols(t, j);
                    }
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            if let Some(i) = non_divisible_row(&a, t) {
                a.add_row(t, i, &R::one());
                if track {
                    l.add_row(t, i, &R::one());
                }
                continue;
            }
            break;
        }
        let u = a.get(t, t).normalizing_unit();
        a.scale_row(t, &u);
        if track {
            l.scale_row(t, &u);
        }
    }
    (a, l, r)
}

fn smallest_entry<R: EuclideanRing>(a: &Matrix<R>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let s = x.size();
            if best.is_none_or(|(_, _, b)| s < b) {
                best = Some((i, j, s));
                if s == 0 {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn non_divisible_row<R: EuclideanRing>(a: &Matrix<R>, t: usize) -> Option<usize> {
    let p = a.get(t, t);
    (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !a.get(i, j).div_rem(p).1.is_zero()))
}
