//! Independent cross-checks: crystal axioms on the built graphs, root
//! system counts, distinguished elements, frozen ground energy cycles,
//! closed-form tensor operators against the signature scan, and tensor
//! associativity.

use std::collections::BTreeSet;

use crystals::energy::EnergyTable;
use crystals::perfect;
use crystals::tables;
use crystals::tensor;
use crystals::{AffineType, Crystal, RootSystem, Weight};

fn level_one(ty: AffineType) -> Crystal {
    perfect::level_one_crystal(ty)
}

#[test]
fn crystal_axioms_hold_on_every_element() {
    for ty in AffineType::ALL {
        let b = level_one(ty);
        for x in 0..b.len() as u32 {
            for i in 0..=ty.rank() {
                assert_eq!(b.phi(i, x) - b.eps(i, x), b.wt(x).pair(i));
                if let Some(y) = b.f(i, x) {
                    // B carries weights in the classical section, so the
                    // step by alpha_i holds up to a multiple of delta.
                    let step = b.wt(x).clone() - Weight::alpha(ty, i) - b.wt(y).clone();
                    assert!(step.is_delta_multiple());
                    assert_eq!(b.e(i, y), Some(x));
                }
            }
        }
    }
}

#[test]
fn root_systems_have_frozen_counts() {
    for (ty, count) in [(AffineType::E6, 72), (AffineType::E7, 126), (AffineType::E8, 240)] {
        let rs = RootSystem::new(ty);
        assert_eq!(rs.len(), count);
        assert!(rs.theta.is_positive());
        assert!(rs.contains(&rs.theta));
        let tallest = rs.positive().map(|r| r.height()).max().unwrap();
        assert_eq!(rs.theta.height(), tallest);
    }
}

#[test]
fn zero_arrows_have_frozen_counts() {
    for (ty, zeros) in [(AffineType::E6, 6), (AffineType::E7, 12), (AffineType::E8, 58)] {
        let b = level_one(ty);
        let count = b.arrows().iter().filter(|(i, _, _)| *i == 0).count();
        assert_eq!(count, zeros, "{}", ty.name());
    }
}

// The minimal elements are exactly the distinguished elements in both of
// their parametrizations, one for each level-one node.
#[test]
fn minimal_elements_are_the_distinguished_ones() {
    for ty in AffineType::ALL {
        let b = level_one(ty);
        let nodes = perfect::level_one_nodes(ty);
        let minimal: BTreeSet<u32> = perfect::minimal_elements(&b).into_iter().collect();
        assert_eq!(minimal.len(), nodes.len());

        let lower: BTreeSet<u32> =
            nodes.iter().map(|&n| perfect::b_lambda(&b, n).unwrap()).collect();
        let upper: BTreeSet<u32> =
            nodes.iter().map(|&n| perfect::b_upper_lambda(&b, n).unwrap()).collect();
        assert_eq!(minimal, lower);
        assert_eq!(minimal, upper);

        for (node, label) in tables::b_lambda_labels(ty) {
            assert_eq!(b.label(perfect::b_lambda(&b, node).unwrap()), label);
        }
        for (node, label) in tables::b_upper_lambda_labels(ty) {
            assert_eq!(b.label(perfect::b_upper_lambda(&b, node).unwrap()), label);
        }
    }
}

#[test]
fn ground_energy_cycles_match_the_embedded_tables() {
    for row in tables::ground_tables() {
        let b = level_one(row.ty);
        let et = EnergyTable::new(&b).unwrap();
        let cycle: Vec<u32> = row
            .base_cycle
            .iter()
            .map(|l| b.find_label(l).expect("cycle label exists"))
            .collect();
        let n = cycle.len();
        for r in 0..n {
            assert_eq!(
                et.h(cycle[(r + 1) % n], cycle[r]),
                row.h_cycle[r],
                "{} L{} position {r}",
                row.ty.name(),
                row.lambda_node
            );
        }
        let mut m = row.m0;
        for (r, expect) in row.m_first6.iter().enumerate() {
            assert_eq!(m, *expect, "{} L{} power {r}", row.ty.name(), row.lambda_node);
            m += 1 - row.h_cycle[r % n];
        }
    }
}

// The signature scan must agree with the closed form for two factors:
// phi and eps combine through max(0, ..) brackets, the lowering operator
// acts on the left factor exactly when its phi exceeds the right eps, and
// the raising operator acts on the right exactly when its eps exceeds the
// left phi.
#[test]
fn tensor_operators_match_the_two_factor_closed_form() {
    for ty in [AffineType::E6, AffineType::E7] {
        let b = level_one(ty);
        let t = tensor::tensor(&b, &b);
        let n = b.len();
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                let id = tensor::pair_id(x, y, n);
                for i in 0..=ty.rank() {
                    let (px, ex) = (b.phi(i, x), b.eps(i, x));
                    let (py, ey) = (b.phi(i, y), b.eps(i, y));
                    assert_eq!(t.phi(i, id), py + 0.max(px - ey));
                    assert_eq!(t.eps(i, id), ex + 0.max(ey - px));

                    let down = if px > ey {
                        b.f(i, x).map(|fx| tensor::pair_id(fx, y, n))
                    } else {
                        b.f(i, y).map(|fy| tensor::pair_id(x, fy, n))
                    };
                    assert_eq!(t.f(i, id), down);

                    let up = if ey > px {
                        b.e(i, y).map(|z| tensor::pair_id(x, z, n))
                    } else {
                        b.e(i, x).map(|z| tensor::pair_id(z, y, n))
                    };
                    assert_eq!(t.e(i, id), up);
                }
            }
        }
    }
}

// Both bracketings of a triple product index elements identically, so the
// crystals must match arrow for arrow.
#[test]
fn tensor_product_is_associative() {
    let ty = AffineType::E6;
    let b = level_one(ty);
    let left = tensor::tensor(&tensor::tensor(&b, &b), &b);
    let right = tensor::tensor(&b, &tensor::tensor(&b, &b));
    assert_eq!(left.len(), right.len());
    for x in 0..left.len() as u32 {
        assert_eq!(left.wt(x), right.wt(x));
        for i in 0..=ty.rank() {
            assert_eq!(left.f(i, x), right.f(i, x));
        }
    }
}
