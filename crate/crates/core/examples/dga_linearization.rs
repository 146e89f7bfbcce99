//! Loading a stored algebra, checking it and computing linearized homology.

use sftkit::dga::*;
use sftkit::ring::int;

fn load(name: &str) -> Dga {
    let path = format!("{}/data/{name}.dga.json", env!("CARGO_MANIFEST_DIR"));
    Dga::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn main() {
    let a = load("trefoil");
    println!("d² residues: {}", a.check_d_squared().len());
    println!("zero augmentation: {}", Augmentation::zero(&a).unwrap_err());
    let eps = Augmentation::constant(&a, &[("a1", int(-1))]).unwrap();
    let lin = linearize(&a, &eps);
    for g in homology(&lin, 0, 1) {
        println!("trefoil linearized H_{}: rank {}", g.degree, g.free_rank);
    }

    let d = load("deformed");
    let c = word_complex(&d, 0, 4, WordFilter { link: Some(2), reduced: true }).unwrap();
    for g in homology(&c, 0, 4) {
        let torsion: Vec<String> = g.torsion.iter().map(|t| format!("({t})")).collect();
        println!("deformed H_{} at link 2: free {}, torsion {}", g.degree, g.free_rank, torsion.join(" "));
    }
    for g in homology(&c.evaluate_u(&int(1)), 0, 4) {
        println!("at U = 1, H_{}: {}", g.degree, g.free_rank);
    }
}
