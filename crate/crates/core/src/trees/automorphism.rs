use super::{label_sig, DecoratedForest, TreeError};
use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;

pub const AUT_VERTEX_LIMIT: usize = 12;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of ways to permute identically labelled output edges at each vertex.
fn output_permutations(t: &DecoratedForest) -> BigUint {
    let mut total = BigUint::one();
    for v in t.vertices() {
        let mut groups: BTreeMap<String, usize> = BTreeMap::new();
        for e in t.outgoing(v.id).filter(|e| e.dst.is_none()) {
            *groups.entry(label_sig(&e.orbit)).or_default() += 1;
        }
        for n in groups.values() {
            total *= factorial(*n);
        }
    }
    total
}

/// Order of the label-preserving automorphism group, computed from the
/// isomorphism classes of labelled subtrees.
pub fn aut_order(t: &DecoratedForest) -> Result<BigUint, TreeError> {
    if t.vertices().len() > AUT_VERTEX_LIMIT {
        return Err(TreeError::TooLarge(t.vertices().len()));
    }
    let sig = t.subtree_signatures();
    let mut total = output_permutations(t);
    let mut permute_siblings = |ids: Vec<u32>| {
        let mut groups: BTreeMap<&str, usize> = BTreeMap::new();
        for id in &ids {
            *groups.entry(sig[id].as_str()).or_default() += 1;
        }
        for n in groups.values() {
            total *= factorial(*n);
        }
    };
    permute_siblings(t.edges().iter().filter(|e| e.src.is_none()).filter_map(|e| e.dst).collect());
    for v in t.vertices() {
        permute_siblings(t.outgoing(v.id).filter_map(|e| e.dst).collect());
    }
    Ok(total)
}

/// Counts automorphisms by enumerating every vertex bijection.
pub fn aut_order_brute_force(t: &DecoratedForest) -> Result<BigUint, TreeError> {
    let n = t.vertices().len();
    if n > AUT_VERTEX_LIMIT {
        return Err(TreeError::TooLarge(n));
    }
    let local: Vec<String> = t
        .vertices()
        .iter()
        .map(|v| {
            let mut outs: Vec<String> = t.outgoing(v.id).filter(|e| e.dst.is_none()).map(|e| label_sig(&e.orbit)).collect();
            outs.sort();
            format!("{:?};{};{}{};{};{}", v.level, v.s, v.representable, v.ends_in_v, label_sig(&t.incoming(v.id).orbit), outs.join(","))
        })
        .collect();
    let index: BTreeMap<u32, usize> = t.vertices().iter().enumerate().map(|(i, v)| (v.id, i)).collect();
    let parent: Vec<Option<usize>> = t.vertices().iter().map(|v| t.parent(v.id).map(|p| index[&p])).collect();

    fn go(k: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, local: &[String], parent: &[Option<usize>]) -> u64 {
        let n = local.len();
        if k == n {
            return 1;
        }
        let mut count = 0;
        for w in 0..n {
            if used[w] || local[w] != local[k] {
                continue;
            }
            // parents are checked once both ends are assigned
            let consistent = (0..k).chain([k]).all(|a| {
                let img = if a == k { w } else { image[a] };
                match parent[a] {
                    Some(p) if p <= k => Some(if p == k { w } else { image[p] }) == parent[img],
                    Some(_) => true,
                    None => parent[img].is_none(),
                }
            });
            if !consistent {
                continue;
            }
            used[w] = true;
            image.push(w);
            count += go(k + 1, image, used, local, parent);
            image.pop();
            used[w] = false;
        }
        count
    }
    let bijections = go(0, &mut Vec::new(), &mut vec![false; n], &local, &parent);
    Ok(BigUint::from(bijections) * output_permutations(t))
}
