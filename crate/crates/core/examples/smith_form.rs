//! Smith normal form of a differential over Q[U], and the homology it implies.

use sftkit::ring::{int, smith_normal_form, Matrix, UPoly};

fn main() {
    let u = UPoly::u_pow(1);
    let u2 = UPoly::u_pow(2);
    let zero = UPoly::constant(int(0));
    let m = Matrix::from_rows(vec![
        vec![u.clone(), u2.clone(), zero.clone()],
        vec![u2.clone(), u.clone(), u2.clone()],
    ]);
    println!("matrix:\n{m}");
    let s = smith_normal_form(&m);
    println!("diagonal:\n{}", s.diagonal);
    println!("certified: {}", s.certifies(&m));
    let torsion: Vec<String> = s.factors.iter().filter(|f| f.degree() > Some(0)).map(|f| format!("Q[U]/({f})")).collect();
    println!("rank {}, torsion {}", s.rank(), if torsion.is_empty() { "none".into() } else { torsion.join(" + ") });
}
