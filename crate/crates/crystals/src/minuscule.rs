//! The level-1 perfect crystals of types E6(1) and E7(1), built from the
//! Weyl orbit of a minuscule fundamental weight.
//!
//! Elements are the level-0 lifts of the orbit weights; every string in
//! every color (including color 0) has length at most one, so the arrows
//! are forced by the weight pairings: there is an i-arrow out of mu exactly
//! when <mu, h_i> = 1, landing on mu - alpha_i.

use crate::cartan::AffineType;
use crate::graph::Crystal;
use crate::weight::Weight;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// The classical node whose fundamental weight generates the crystal.
pub fn canonical_node(ty: AffineType) -> usize {
    match ty {
        AffineType::E6 => 1,
        AffineType::E7 => 7,
        AffineType::E8 => panic!("type E8 has no minuscule classical node"),
    }
}

/// Build the orbit crystal for a given minuscule classical node.
pub fn from_node(ty: AffineType, node: usize) -> Result<Crystal> {
    let spec = ty.spec();
    if node == 0 || !spec.minuscule.contains(&node) {
        return Err(Error::NodeNotMinuscule(node));
    }
    // Level-0 lift of the fundamental weight at `node`.
    let mut seed = Weight::fundamental(ty, node);
    seed.lambda[0] = -spec.marks[node];
    debug_assert_eq!(seed.level(), 0);

    let mut orbit: BTreeSet<Weight> = BTreeSet::from([seed.clone()]);
    let mut frontier = vec![seed];
    while let Some(mu) = frontier.pop() {
        for i in spec.classical_nodes() {
            let k = mu.pair(i);
            if k == 0 {
                continue;
            }
            let refl = mu.clone() - Weight::alpha_classical(ty, i) * k;
            if orbit.insert(refl.clone()) {
                frontier.push(refl);
            }
        }
    }

    let weights: Vec<Weight> = orbit.into_iter().collect();
    let index = |w: &Weight| -> Option<u32> {
        weights.binary_search(w).ok().map(|i| i as u32)
    };
    let mut arrows = Vec::new();
    for (x, mu) in weights.iter().enumerate() {
        for i in spec.nodes() {
            let k = mu.pair(i);
            if k.abs() > 1 {
                return Err(Error::StringsTooLong(format!(
                    "<mu, h_{i}> = {k} in the orbit of node {node}"
                )));
            }
            if k == 1 {
                let target = mu.clone() - Weight::alpha_classical(ty, i);
                let y = index(&target).ok_or_else(|| {
                    Error::DataInvalid(format!("orbit not closed under lowering in color {i}"))
                })?;
                arrows.push((i, x as u32, y));
            }
        }
    }

    // Labels list the raising colors, a bar, then the lowering colors.
    let labels: Vec<String> = weights
        .iter()
        .map(|mu| {
            let ins: String = spec
                .nodes()
                .filter(|&i| mu.pair(i) == -1)
                .map(|i| i.to_string())
                .collect();
            let outs: String = spec
                .nodes()
                .filter(|&i| mu.pair(i) == 1)
                .map(|i| i.to_string())
                .collect();
            format!("{ins}|{outs}")
        })
        .collect();

    let elements = weights.into_iter().zip(labels).collect();
    Crystal::build(ty, elements, &arrows)
}

/// The perfect crystal B for types E6 and E7.
pub fn crystal(ty: AffineType) -> Crystal {
    from_node(ty, canonical_node(ty)).expect("canonical node is minuscule")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(crystal(AffineType::E6).len(), 27);
        assert_eq!(crystal(AffineType::E7).len(), 56);
    }

    #[test]
    fn rejects_non_minuscule_nodes() {
        for node in [0usize, 2, 3, 4, 5] {
            assert!(matches!(
                from_node(AffineType::E6, node),
                Err(Error::NodeNotMinuscule(_))
            ));
        }
    }

    #[test]
    fn labels_are_unique() {
        for ty in [AffineType::E6, AffineType::E7] {
            let b = crystal(ty);
            let mut seen = BTreeSet::new();
            for x in 0..b.len() as u32 {
                assert!(seen.insert(b.label(x).to_string()), "duplicate {}", b.label(x));
            }
        }
    }

    #[test]
    fn dual_e6_orbit_also_has_27_elements() {
        assert_eq!(from_node(AffineType::E6, 6).unwrap().len(), 27);
    }
}
