//! Conley–Zehnder indices from rotation, crossings, shears and the tubular model.

use sftkit::czindex::*;
use sftkit::ring::rat;

fn main() {
    for lambda in [rat(1, 2), rat(13, 10), rat(37, 7)] {
        let rot = cz_rotation(&lambda).unwrap();
        let cross = cz_crossing(&GeneratorPath::Linear(lambda.clone()), 32).unwrap();
        println!("rotation by {lambda}: formula {rot}, crossings {cross}");
    }
    println!("integer rotation: {}", cz_rotation(&rat(2, 1)).unwrap_err());
    for k in 0..3 {
        println!("shear with 3 blocks, loop {k}: {}", rs_shear(3, k));
    }
    let g = cz_gamma_orbit(GammaKind::Gamma1, 1.0, 10.0, 2).unwrap();
    println!("tubular orbit: cz {}, period {}, rotation {:.4}", g.cz, g.period, g.rotation);
    println!("direct sum 3 + 1 + (-2): {}", cz_direct_sum(&[3, 1, -2]));
    for cz in [2, 3] {
        let d = normal_index_data(cz);
        println!("normal index {cz}: alpha- {}, alpha+ {}, parity {}", d.alpha_minus, d.alpha_plus, d.p_n);
    }
}
