//! Golden tests for the Young column models: frozen figure data, class
//! censuses, ground column anchors and the locate/concrete inverse pair.

use crystals::column::{shape_census, ColumnModel, ColumnSet};
use crystals::tables;
use crystals::AffineType;

use proptest::prelude::*;

fn model(ty: AffineType) -> ColumnModel {
    ColumnModel::build(ty).expect("column model builds")
}

fn class_label(cm: &ColumnModel, class: u32) -> &str {
    cm.b.label(cm.psi[class as usize])
}

#[test]
fn class_counts_match_crystal_sizes() {
    for (ty, n) in [(AffineType::E6, 27), (AffineType::E7, 56), (AffineType::E8, 249)] {
        let cm = model(ty);
        assert_eq!(cm.classes.len(), n);
        assert_eq!(cm.crystal.len(), n);
        assert_eq!(cm.b.len(), n);
    }
}

#[test]
fn shape_census_counts_gravity_and_exceptional_classes() {
    for (ty, expect) in [
        (AffineType::E6, (27, 0)),
        (AffineType::E7, (56, 0)),
        (AffineType::E8, (247, 2)),
    ] {
        let cm = model(ty);
        assert_eq!(shape_census(&cm.pat, 600).unwrap(), expect, "{}", ty.name());
    }
}

#[test]
fn drawn_ground_columns_realize_their_crystal_elements() {
    for g in tables::ground_columns() {
        let cm = model(g.ty);
        let col = cm.ground_concrete(g.lambda_node).expect("ground column drawn");
        assert!(cm.valid(&col));
        let (class, _) = cm.locate(&col).expect("ground column is a known class");
        let expect = tables::b_lambda_labels(g.ty)
            .iter()
            .find(|(n, _)| *n == g.lambda_node)
            .map(|(_, l)| *l)
            .expect("lambda node has a distinguished element");
        assert_eq!(class_label(&cm, class), expect, "{} L{}", g.ty.name(), g.lambda_node);
    }
}

// A frozen chain of columns around the tallest drawn example: the column
// with blocks up to slot 31 over a full stack realizes the root vector of
// beta + a8 - theta where beta = 2a1+2a2+3a3+4a4+3a5+2a6+a7. Filling the
// 0-slot at 30 climbs to beta + a8 one period down, and filling the 8-slot
// at 34 climbs to beta.
#[test]
fn tall_column_chain_realizes_frozen_root_vectors() {
    let cm = model(AffineType::E8);

    let c1 = ColumnSet::new(21, [21, 22, 24, 25, 27, 29, 31]);
    let (k1, u1) = cm.locate(&c1).expect("first chain column");
    assert_eq!(class_label(&cm, k1), "-a2-a3-2a4-2a5-2a6-2a7-a8");
    assert_eq!(u1, 0);

    assert_eq!(cm.pat.color_of(30), 0);
    let c2 = c1.with_block(30).expect("slot 30 is empty");
    let (k2, u2) = cm.locate(&c2).expect("second chain column");
    assert_eq!(class_label(&cm, k2), "2a1+2a2+3a3+4a4+3a5+2a6+a7+a8");
    assert_eq!(u2, -1);

    assert_eq!(cm.pat.color_of(34), 8);
    let c3 = c2.with_block(34).expect("slot 34 is empty");
    let (k3, u3) = cm.locate(&c3).expect("third chain column");
    assert_eq!(class_label(&cm, k3), "2a1+2a2+3a3+4a4+3a5+2a6+a7");
    assert_eq!(u3, -1);
}

// The two shapes that violate the gravity rule sit in a short chain around
// the length-two 0-string: a2 -> y2 -> -a2, connected by single blocks.
#[test]
fn exceptional_shapes_chain_through_the_zero_string() {
    let cm = model(AffineType::E8);

    let xa = cm.exceptional_concrete("a2").expect("named exceptional shape");
    assert_eq!(xa, ColumnSet::new(13, [14, 15, 17]));
    let (ka, ua) = cm.locate(&xa).expect("exceptional shape is a class");
    assert_eq!(class_label(&cm, ka), "a2");
    assert_eq!(ua, 0);

    let y2 = xa.with_block(13).expect("slot 13 is the hanging gap");
    assert_eq!(y2, ColumnSet::new(16, [17]));
    let (ky, _) = cm.locate(&y2).expect("middle of the chain");
    assert_eq!(class_label(&cm, ky), "y2");

    let xm = y2.with_block(19).expect("slot 19 is empty");
    assert_eq!(Some(xm.clone()), cm.exceptional_concrete("-a2"));
    let (km, _) = cm.locate(&xm).expect("end of the chain");
    assert_eq!(class_label(&cm, km), "-a2");
}

#[test]
fn only_the_vacuum_column_sits_inside_a_zero_string() {
    let cm = model(AffineType::E8);
    let class = cm.blocked_zero_class().expect("unique interior class");
    assert_eq!(class_label(&cm, class), "vac");

    for ty in [AffineType::E6, AffineType::E7] {
        assert!(model(ty).blocked_zero_class().is_err(), "{} has no length-two 0-string", ty.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Random add/remove block walks stay valid columns, and locate/concrete
    // stay mutually inverse along the way.
    #[test]
    fn random_block_walks_keep_locate_and_concrete_inverse(
        word in proptest::collection::vec((0usize..9, any::<bool>(), 0usize..4), 0..20)
    ) {
        static CM: std::sync::OnceLock<ColumnModel> = std::sync::OnceLock::new();
        let cm = CM.get_or_init(|| model(AffineType::E8));
        let vac = cm.psi_inv[cm.b.find_label("vac").unwrap() as usize];
        let mut col = cm.concrete(vac, 0);
        for (color, adding, pick) in word {
            let slots = if adding { cm.addable(&col, color) } else { cm.removable(&col, color) };
            if slots.is_empty() {
                continue;
            }
            let s = slots[pick % slots.len()];
            col = if adding { col.with_block(s).unwrap() } else { col.without_block(s).unwrap() };
            prop_assert!(cm.valid(&col));
            let (class, u) = cm.locate(&col).expect("walk stays inside the class set");
            prop_assert_eq!(cm.concrete(class, u), col.clone());
        }
    }
}
