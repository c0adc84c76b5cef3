//! The level-1 perfect crystal of type E8(1), with 249 elements: one
//! element x_alpha per root alpha, one element y_i per classical node, and
//! a vacuum element of weight zero.
//!
//! Arrows in a classical color i: x_alpha -> x_{alpha - alpha_i} whenever
//! the difference is a root, plus the chain x_{alpha_i} -> y_i -> x_{-alpha_i}.
//! Arrows in color 0 add the highest root theta: x_alpha -> x_{alpha+theta}
//! whenever the sum is a root, plus the chain x_{-theta} -> vac -> x_theta.

use crate::cartan::AffineType;
use crate::graph::Crystal;
use crate::roots::RootSystem;
use crate::weight::Weight;

/// Element id of x_alpha for the root with the given index.
pub fn x_id(root_index: usize) -> u32 {
    root_index as u32
}

/// Element id of y_i for a classical node i.
pub fn y_id(rs: &RootSystem, i: usize) -> u32 {
    debug_assert!(i >= 1 && i <= rs.ty.rank());
    (rs.len() + i - 1) as u32
}

/// Element id of the vacuum element.
pub fn vac_id(rs: &RootSystem) -> u32 {
    (rs.len() + rs.ty.rank()) as u32
}

/// Build the perfect crystal from a type E8 root system.
pub fn crystal(rs: &RootSystem) -> Crystal {
    assert_eq!(rs.ty, AffineType::E8);
    let ty = rs.ty;
    let n = ty.rank();
    let mut elements: Vec<(Weight, String)> = rs
        .roots
        .iter()
        .map(|r| (rs.weight(r), r.label()))
        .collect();
    for i in 1..=n {
        elements.push((Weight::zero(ty), format!("y{i}")));
    }
    elements.push((Weight::zero(ty), "vac".to_string()));

    let mut arrows: Vec<(usize, u32, u32)> = Vec::new();
    for (k, alpha) in rs.roots.iter().enumerate() {
        for i in 1..=n {
            let mut beta = alpha.clone();
            beta.coords[i] -= 1;
            if let Some(t) = rs.idx(&beta) {
                arrows.push((i, x_id(k), x_id(t)));
            }
        }
        let mut up = alpha.clone();
        for j in 1..=n {
            up.coords[j] += rs.theta.coords[j];
        }
        if let Some(t) = rs.idx(&up) {
            arrows.push((0, x_id(k), x_id(t)));
        }
    }
    for i in 1..=n {
        let simple = rs.simple(i);
        arrows.push((i, x_id(rs.idx(&simple).unwrap()), y_id(rs, i)));
        arrows.push((i, y_id(rs, i), x_id(rs.idx(&simple.neg()).unwrap())));
    }
    let theta_idx = rs.idx(&rs.theta).unwrap();
    let neg_theta_idx = rs.idx(&rs.theta.neg()).unwrap();
    arrows.push((0, x_id(neg_theta_idx), vac_id(rs)));
    arrows.push((0, vac_id(rs), x_id(theta_idx)));

    Crystal::build(ty, elements, &arrows).expect("root crystal must satisfy crystal axioms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_count() {
        let rs = RootSystem::new(AffineType::E8);
        assert_eq!(crystal(&rs).len(), 249);
    }

    #[test]
    fn layer_census_and_zero_strings() {
        let rs = RootSystem::new(AffineType::E8);
        let counts: Vec<usize> = (-2..=2)
            .map(|k| rs.roots.iter().filter(|r| rs.layer(r) == k).count())
            .collect();
        assert_eq!(counts, vec![1, 56, 126, 56, 1]);

        // Color-0 strings: one chain of length two through the vacuum, and
        // one arrow per layer -1 root.
        let b = crystal(&rs);
        let zero_arrows = b.arrows().iter().filter(|&&(i, _, _)| i == 0).count();
        assert_eq!(zero_arrows, 56 + 2);
        assert_eq!(b.eps(0, vac_id(&rs)), 1);
        assert_eq!(b.phi(0, vac_id(&rs)), 1);
    }

    #[test]
    fn extremal_elements_are_the_root_vectors() {
        let rs = RootSystem::new(AffineType::E8);
        let b = crystal(&rs);
        let ext = b.extremal_elements();
        assert_eq!(ext.len(), rs.len());
        assert!(ext.iter().all(|&x| (x as usize) < rs.len()));
    }
}
