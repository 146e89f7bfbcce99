//! Generators, rank tables and cyclic windows of the explicit open book model.

use sftkit::models::*;

fn main() {
    let p = ModelParams { n: 5, a: 200.0, window: 12, rho: 1.0 };
    for g in model_orbits(&p).unwrap() {
        println!("{:<6} cz {:>3}  degree {:>3}  link {}", g.name, g.cz.unwrap_or_default(), g.degree, g.link);
    }
    let table = linearized_ranks(5, 12).unwrap();
    println!("ranks {:?}", table.ranks);
    println!("matches homology: {}", ranks_from_homology(5, 12, &model_orbits(&p).unwrap()) == table);
    println!("small action: {}", model_orbits(&ModelParams { a: 2.0, ..p }).unwrap_err());
    let chords = model_chords(4, 2).unwrap();
    let parity = parity_obstruction(4, &chords);
    println!("chord parity: {} violations, zero differential {}", parity.violations.len(), parity.zero_differential);
    let w = hc_window(4).unwrap();
    println!("cyclic window: rank {} at ({}, {}) spanned by {:?}", w.rank, w.degree, w.link, w.classes);
    let cone = surgery_cone_ranks(2, 5, 10).unwrap();
    println!("surgery cone: Q at {:?}", cone.iter().filter(|(_, r)| *r > 0).map(|(d, _)| d).collect::<Vec<_>>());
}
