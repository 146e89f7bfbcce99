//! Small named algebras used by the examples, the CLI and the tests.

use super::fixtures::{diff, t};
use super::{Dga, Generator, Grading, Mode};
use crate::ring::RingTag;

/// Generators a_i of degree d_i + 1 and b_i of degree d_i with da_i = b_i.
pub fn acyclic_family(degrees: &[i64], mode: Mode) -> Dga {
    let mut gens = Vec::new();
    let mut d = Vec::new();
    for (i, &k) in degrees.iter().enumerate() {
        let (a, b) = (format!("a{}", i + 1), format!("b{}", i + 1));
        gens.push(Generator::orbit(&a, k + 1));
        gens.push(Generator::orbit(&b, k));
        d.push(diff(&a, vec![t(1, 0, &[&b])]));
    }
    Dga::new(RingTag::Q, mode, Grading::Z, gens, &d).expect("acyclic family is well formed")
}

/// One odd generator x with dx = 1, so the whole algebra is acyclic.
pub fn unit_killer() -> Dga {
    Dga::new(
        RingTag::Q,
        Mode::Associative { components: 1 },
        Grading::Z,
        vec![Generator::orbit("x", 1)],
        &[diff("x", vec![t(1, 0, &[])])],
    )
    .expect("unit killer is well formed")
}

/// The Chekanov–Eliashberg algebra of a right-handed trefoil over Q.
pub fn trefoil() -> Dga {
    Dga::new(
        RingTag::Q,
        Mode::Associative { components: 1 },
        Grading::Z,
        vec![
            Generator::orbit("a1", 0),
            Generator::orbit("a2", 0),
            Generator::orbit("a3", 0),
            Generator::orbit("b1", 1),
            Generator::orbit("b2", 1),
        ],
        &[
            diff("b1", vec![t(1, 0, &[]), t(1, 0, &["a1"]), t(1, 0, &["a3"]), t(1, 0, &["a1", "a2", "a3"])]),
            diff("b2", vec![t(-1, 0, &[]), t(-1, 0, &["a1"]), t(-1, 0, &["a3"]), t(-1, 0, &["a3", "a2", "a1"])]),
        ],
    )
    .expect("trefoil is well formed")
}

/// A bigraded algebra over Q[U] whose differential only survives with U.
pub fn deformed() -> Dga {
    Dga::new(
        RingTag::QU,
        Mode::Associative { components: 1 },
        Grading::Z,
        vec![
            Generator::orbit("q", 1).with_link(1),
            Generator::orbit("p", 2).with_link(1),
            Generator::orbit("r", 3).with_link(2),
            Generator::orbit("s", 2).with_link(2),
        ],
        &[diff("p", vec![t(1, 1, &["q"])]), diff("r", vec![t(1, 1, &["s"]), t(1, 0, &["q", "q"])])],
    )
    .expect("deformed example is well formed")
}

/// A supercommutative algebra with a Koszul sign in its differential.
pub fn koszul() -> Dga {
    Dga::new(
        RingTag::Q,
        Mode::Commutative,
        Grading::Z,
        vec![
            Generator::orbit("e1", 1),
            Generator::orbit("e2", 1),
            Generator::orbit("f", 3),
            Generator::orbit("g", 2),
            Generator::orbit("h", 5),
        ],
        &[diff("f", vec![t(1, 0, &["e2", "e1"])]), diff("h", vec![t(1, 0, &["e1", "f"]), t(1, 0, &["g", "g"])])],
    )
    .expect("koszul example is well formed")
}

/// Two chords between two strands and a loop chord on each.
pub fn two_strands() -> Dga {
    Dga::new(
        RingTag::QU,
        Mode::Associative { components: 2 },
        Grading::Z,
        vec![
            Generator::chord("c01", 1, 0, 1),
            Generator::chord("c10", 1, 1, 0),
            Generator::chord("e0", 3, 0, 0),
            Generator::chord("e1", 3, 1, 1),
        ],
        &[diff("e0", vec![t(1, 1, &["c10", "c01"])]), diff("e1", vec![t(-1, 1, &["c01", "c10"])])],
    )
    .expect("two strands example is well formed")
}

pub fn stored() -> Vec<(&'static str, Dga)> {
    vec![
        ("acyclic_pair", acyclic_family(&[1], Mode::Associative { components: 1 })),
        ("acyclic_triple", acyclic_family(&[1, 2, 4], Mode::Associative { components: 1 })),
        ("acyclic_commutative", acyclic_family(&[1], Mode::Commutative)),
        ("unit_killer", unit_killer()),
        ("trefoil", trefoil()),
        ("deformed", deformed()),
        ("koszul", koszul()),
        ("two_strands", two_strands()),
    ]
}
