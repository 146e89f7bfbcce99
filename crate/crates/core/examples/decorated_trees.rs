//! Twisting maps on a stored forest and on random buildings.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sftkit::ring::rat;
use sftkit::trees::generate::{random_concatenation, random_forest, seed_from_env, ForestParams};
use sftkit::trees::*;

fn main() {
    let path = format!("{}/data/two_level.forest.json", env!("CARGO_MANIFEST_DIR"));
    let f = DecoratedForest::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    println!("stored forest: intersection {}, psi_full {}, psi_reduced {}", f.intersection_number(), psi_full(&f).unwrap(), psi_reduced(&f));
    println!("positivity: {}", check_positivity(&f).passes());
    println!("mixed at (8, 1, 0, 1): {:?}", psi_mixed(&f, &rat(8, 1), &rat(1, 1), &rat(0, 1), &rat(1, 1)));

    let mut rng = ChaCha8Rng::seed_from_u64(seed_from_env());
    let g = random_forest(&mut rng, &ForestParams { m: 1, ..Default::default() });
    println!("random forest: {} vertices, psi_full {}", g.vertices().len(), psi_full(&g).unwrap());
    for e in g.edges_of(EdgeClass::Interior) {
        if let Ok(c) = g.contract_edge(e.id) {
            println!("  contract edge {}: psi_full {}", e.id, psi_full(&c).unwrap());
        }
    }
    let (parts, matching) = random_concatenation(&mut rng, &ForestParams::default());
    let glued = concatenate(&parts, &matching).unwrap();
    let factors: Vec<String> = parts.iter().map(|p| psi_full(p).unwrap().to_string()).collect();
    println!("concatenation of [{}] gives {}", factors.join(", "), psi_full(&glued).unwrap());
}
