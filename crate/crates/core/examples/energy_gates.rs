//! Energies of cobordism decompositions and the admissibility gate.

use sftkit::energy::*;
use sftkit::ring::{int, rat};

fn main() {
    let a = TypeADecomposition::new(rat(1, 2), rat(-1, 4), false).unwrap();
    let e = type_a_energy(&a);
    println!("type A energy: {}", e.value);
    let samples = vec![
        TypeBSample { t: int(0), c2: int(1), c1: int(1), c1_tilde: int(-1), c0: int(0) },
        TypeBSample { t: int(1), c2: int(0), c1: int(2), c1_tilde: int(1), c0: rat(1, 2) },
    ];
    let b = type_b_energy(&TypeBDecomposition::new(samples).unwrap());
    println!("type B energy: {} (ends {} and {})", b.energy, b.induced_at_zero, b.induced_at_infinity);
    for (rp, rm) in [(int(2), int(1)), (int(1), int(1)), (rat(3, 2), int(1))] {
        println!("r+ = {rp}, r- = {rm}, E = 1/4: strict {:?}, relaxed {:?}", admissible(&rp, &rm, &rat(1, 4), false), admissible(&rp, &rm, &rat(1, 4), true));
    }
    let glued = glue_energy(&e.value, &int(0), true).unwrap();
    println!("glued with a symplectization: {glued}");
}
