//! Reduced cyclic homology of small algebras by both routes.

use sftkit::cyclic::{canonical_class, reduced_cyclic_homology, reduced_cyclic_homology_words};
use sftkit::dga::{catalog, Mode};

fn main() {
    let killer = catalog::unit_killer();
    let h = reduced_cyclic_homology(&killer, 0, 9, None).unwrap();
    let ranks: Vec<usize> = (0..=9).map(|k| h.rank(k)).collect();
    println!("unit killer ({:?}): {ranks:?}", h.route);

    let pair = catalog::acyclic_family(&[1, 2], Mode::Associative { components: 1 });
    let formal = reduced_cyclic_homology(&pair, 0, 9, None).unwrap();
    let words = reduced_cyclic_homology_words(&pair, 0, 9, None).unwrap();
    let by_words: Vec<usize> = words.iter().map(|g| g.free_rank).collect();
    println!("acyclic pair: {:?} {:?}, words {by_words:?}", formal.route, (0..=9).map(|k| formal.rank(k)).collect::<Vec<_>>());

    let b = pair.lookup("b1").unwrap();
    println!("class of b1 b1: {:?}", canonical_class(&pair, &[b, b]));
    let a = pair.lookup("a1").unwrap();
    println!("class of a1 a1: {:?}", canonical_class(&pair, &[a, a]));
}
