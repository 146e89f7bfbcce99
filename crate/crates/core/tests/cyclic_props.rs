use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sftkit::cyclic::*;
use sftkit::dga::catalog;
use sftkit::dga::*;
use sftkit::ring::{int, RingTag, UPoly};
use std::collections::BTreeMap;

/// Associative algebra on up to four positive-degree generators with a
/// random differential into letters and products of two letters.
fn random_associative(rng: &mut ChaCha8Rng, linear_only: bool) -> Dga {
    let count = rng.gen_range(1..=4);
    let names: Vec<String> = (0..count).map(|i| format!("y{i}")).collect();
    let degrees: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=3)).collect();
    let gens = names.iter().zip(&degrees).map(|(n, &d)| Generator::orbit(n, d)).collect();
    let mut diff = Vec::new();
    for (n, &d) in names.iter().zip(&degrees) {
        let mut terms = Vec::new();
        for i in 0..count {
            if degrees[i] == d - 1 && rng.gen_bool(0.6) {
                terms.push(RawTerm::new(int(rng.gen_range(-2..=2)), 0, &[&names[i]]));
            }
            for j in 0..count {
                if !linear_only && degrees[i] + degrees[j] == d - 1 && rng.gen_bool(0.4) {
                    terms.push(RawTerm::new(int(rng.gen_range(-2..=2)), 0, &[&names[i], &names[j]]));
                }
            }
        }
        diff.push((n.clone(), terms));
    }
    Dga::new(RingTag::Q, Mode::Associative { components: 1 }, Grading::Z, gens, &diff).unwrap()
}

fn scaled(m: BTreeMap<Vec<usize>, UPoly>, s: i64) -> BTreeMap<Vec<usize>, UPoly> {
    m.into_iter().map(|(w, c)| (w, c.scale(&int(s)))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn differential_does_not_depend_on_the_representative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_associative(&mut rng, false);
        let len = rng.gen_range(1..=4);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..a.generators().len())).collect();
        let (s, rotated) = rotate(&a, &w);
        prop_assert_eq!(scaled(cyclic_differential(&a, &rotated), s), cyclic_differential(&a, &w));
    }

    #[test]
    fn cyclic_differential_squares_to_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_associative(&mut rng, false);
        prop_assume!(a.check_d_squared().is_empty());
        let c = cyclic_complex(&a, 0, 6, None).unwrap();
        prop_assert!(c.d_squared_is_zero());
    }

    #[test]
    fn formal_route_agrees_with_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_associative(&mut rng, true);
        prop_assume!(a.check_d_squared().is_empty());
        let fast = reduced_cyclic_homology(&a, 0, 6, None).unwrap();
        prop_assert_eq!(fast.route, Route::Formal);
        prop_assert_eq!(fast.groups, reduced_cyclic_homology_words(&a, 0, 6, None).unwrap());
    }
}

#[test]
fn stored_associative_examples() {
    for (name, a) in catalog::stored() {
        let Ok(c) = cyclic_complex(&a, 0, 7, None) else { continue };
        assert!(c.d_squared_is_zero(), "{name}");
        for cell in c.basis() {
            assert!(!cell.label.is_empty());
        }
    }
    let two = catalog::two_strands();
    let c = cyclic_complex(&two, 0, 6, None).unwrap();
    assert!(c.basis().iter().all(|b| b.label != "c01" && b.label != "c10"));
    assert!(c.basis().iter().any(|b| b.label == "c01 c10" || b.label == "c10 c01"));
}

#[test]
fn unit_killer_pattern() {
    let h = reduced_cyclic_homology(&catalog::unit_killer(), 0, 15, None).unwrap();
    for k in 0..=15 {
        assert_eq!(h.rank(k), usize::from(k % 2 == 1), "degree {k}");
    }
}

#[test]
fn deformed_cyclic_homology_over_qu() {
    let a = catalog::deformed();
    let h = reduced_cyclic_homology(&a, 0, 5, None).unwrap();
    assert_eq!(h.route, Route::Words);
    let at_zero = reduced_cyclic_homology(&a.evaluate_u(&int(0)), 0, 5, None).unwrap();
    for k in 0..=5 {
        assert!(at_zero.rank(k) >= h.rank(k));
        assert!(h.groups.iter().all(|g| g.torsion.iter().all(|p| !p.is_zero())));
    }
}
