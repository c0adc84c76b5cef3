//! Golden tests for Young walls: two frozen drawn examples, delta insertion
//! and reduction, highest weight Fock walls, the wall/path equivalence, and
//! crystal axioms on random operator words.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crystals::column::{ColumnModel, ColumnSet};
use crystals::energy::EnergyTable;
use crystals::path::{path_to_wall, wall_to_path, Path, PathModel};
use crystals::tables;
use crystals::wall::{Wall, WallModel};
use crystals::{AffineType, Weight};

use proptest::prelude::*;

fn e6() -> &'static (ColumnModel, EnergyTable) {
    static CTX: OnceLock<(ColumnModel, EnergyTable)> = OnceLock::new();
    CTX.get_or_init(|| {
        let cm = ColumnModel::build(AffineType::E6).unwrap();
        let et = EnergyTable::new(&cm.b).unwrap();
        (cm, et)
    })
}

fn block_colors(wm: &WallModel, w: &Wall, r: usize) -> Vec<i64> {
    (0..=wm.cm.ty.rank()).map(|i| wm.block_diff(w, r, Some(i))).collect()
}

// The first drawn wall: fifteen blocks over the ground column at position 0
// (a full stack up to slot 42) and two over position 1. Every adjacent pair
// has affine energy 1, so the wall is reduced.
#[test]
fn drawn_reduced_wall_has_frozen_block_counts() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();

    let y0 = cm.locate(&ColumnSet::full_below(42)).expect("tall drawn column");
    let y1 = cm.locate(&ColumnSet::full_below(33)).expect("short drawn column");
    let w = wm.wall_from_cols(vec![y0, y1]).unwrap();

    assert!(wm.is_reduced(&w));
    assert!(wm.is_normally_ordered(&w));
    assert_eq!(wm.h_aff(&w, 0), 1);
    assert_eq!(wm.h_aff(&w, 1), 1);

    assert_eq!(wm.block_diff(&w, 0, None), 15);
    assert_eq!(block_colors(&wm, &w, 0), [2, 1, 3, 2, 4, 2, 1]);
    assert_eq!(wm.block_diff(&w, 1, None), 2);
    assert_eq!(block_colors(&wm, &w, 1), [0, 0, 0, 0, 0, 1, 1]);
    assert_eq!(wm.block_diff(&w, 2, None), 0);

    let ty = AffineType::E6;
    let expect = Weight::fundamental(ty, 3) - Weight::fundamental(ty, 6)
        - Weight::delta(ty) - Weight::delta(ty);
    assert_eq!(wm.weight(&w), expect);
    assert_eq!(wm.weight_by_blocks(&w), expect);
}

// The drawn column at position 1 is the ground column with one addable
// 6-block and then one addable 5-block filled in; the next wanted block on
// top is a 4-block.
#[test]
fn drawn_short_column_is_ground_plus_two_blocks() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();

    let g1 = cm.concrete(wm.col(&Wall::ground(), 1).0, wm.m(1));
    assert_eq!(g1, ColumnSet::new(28, [29, 30, 32]));

    let six = cm.addable(&g1, 6);
    assert_eq!(six, [28]);
    let col = g1.with_block(28).unwrap();
    let five = cm.addable(&col, 5);
    assert_eq!(five, [31]);
    let col = col.with_block(31).unwrap();

    assert_eq!(col, ColumnSet::full_below(33));
    assert_eq!(cm.pat.color_of(33), 4);
}

// The second drawn wall keeps the same column at position 1 but cuts the
// tall column down to three blocks over ground. It is still a wall made of
// valid columns, but the pair at position 0 has affine energy 0: neither
// reduced nor normally ordered.
#[test]
fn drawn_non_reduced_wall_fails_the_energy_conditions() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();

    let tall = cm.locate(&ColumnSet::full_below(42)).unwrap();
    let cut = cm.locate(&ColumnSet::full_below(30)).unwrap();
    assert_eq!(cut.0, tall.0);
    assert_eq!(cut.1, tall.1 + 1);
    assert_eq!(cm.pat.period, 12);

    let y1 = cm.locate(&ColumnSet::full_below(33)).unwrap();
    let w = wm.wall_from_cols(vec![cut, y1]).unwrap();

    assert!(!wm.is_reduced(&w));
    assert!(!wm.is_normally_ordered(&w));
    assert_eq!(wm.h_aff(&w, 0), 0);
    assert_eq!(wm.h_aff(&w, 1), 1);

    assert_eq!(wm.block_diff(&w, 0, None), 3);
    assert_eq!(block_colors(&wm, &w, 0), [1, 0, 1, 0, 1, 0, 0]);

    let ty = AffineType::E6;
    let expect = Weight::fundamental(ty, 3) - Weight::fundamental(ty, 6) - Weight::delta(ty);
    assert_eq!(wm.weight(&w), expect);
    assert_eq!(wm.weight_by_blocks(&w), expect);
}

#[test]
fn delta_insertion_and_reduction_are_inverse() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();

    let y0 = cm.locate(&ColumnSet::full_below(42)).unwrap();
    let y1 = cm.locate(&ColumnSet::full_below(33)).unwrap();
    let w = wm.wall_from_cols(vec![y0, y1]).unwrap();
    assert_eq!(wm.reduce(&w), (w.clone(), 0));

    let fat = wm.add_delta(&w, 0).expect("a delta fits on the rightmost column");
    assert!(wm.is_normally_ordered(&fat));
    assert!(!wm.is_reduced(&fat));
    assert_eq!(wm.h_aff(&fat, 0), 2);
    assert_eq!(wm.block_diff(&fat, 0, None), 15 + cm.pat.period as i64);
    assert_eq!(wm.reduce(&fat), (w, 1));
}

#[test]
fn highest_weight_fock_walls_come_from_partitions() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();
    for k in 0..=5usize {
        let parts = tables::partitions(k);
        for p in &parts {
            let w = wm.hw_wall(p).expect("partition wall builds");
            assert!(wm.is_normally_ordered(&w));
            assert!(wm.is_highest_weight(&w), "partition {p:?}");
            let mut expect = Weight::fundamental(AffineType::E6, 0);
            for _ in 0..k {
                expect = expect - Weight::delta(AffineType::E6);
            }
            assert_eq!(wm.weight(&w), expect);
        }
        let distinct: BTreeSet<Wall> =
            parts.iter().map(|p| wm.hw_wall(p).unwrap()).collect();
        assert_eq!(distinct.len(), parts.len());
    }
}

#[test]
fn wall_and_path_models_enumerate_the_same_crystal() {
    let (cm, et) = e6();
    let wm = WallModel::new(cm, et, 0).unwrap();
    let pm = PathModel::new(&cm.b, et, 0).unwrap();

    let walls = wm.enumerate(3);
    let paths = pm.enumerate(3);
    assert_eq!(walls.len(), paths.len());

    let image: BTreeSet<Path> = walls
        .iter()
        .map(|(w, _)| wall_to_path(&wm, &pm, w).expect("wall converts"))
        .collect();
    let expect: BTreeSet<Path> = paths.into_iter().map(|(p, _)| p).collect();
    assert_eq!(image, expect);

    for (w, _) in &walls {
        let p = wall_to_path(&wm, &pm, w).unwrap();
        assert_eq!(pm.weight(&p), wm.weight(w));
        assert_eq!(path_to_wall(&pm, &wm, &p).unwrap(), *w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Crystal axioms along random operator words on the reduced walls, and
    // agreement with the tensor-product path realization at every step.
    #[test]
    fn random_wall_words_satisfy_crystal_axioms(
        word in proptest::collection::vec(0usize..7, 0..14)
    ) {
        let (cm, et) = e6();
        let wm = WallModel::new(cm, et, 0).unwrap();
        let pm = PathModel::new(&cm.b, et, 0).unwrap();
        let ty = AffineType::E6;

        let mut w = Wall::ground();
        let mut p = Path::ground();
        for i in word {
            for j in 0..=ty.rank() {
                prop_assert_eq!(wm.phi(&w, j) - wm.eps(&w, j), wm.weight(&w).pair(j));
            }
            let wn = wm.f(&w, i);
            let pn = pm.f(&p, i);
            prop_assert_eq!(wn.is_some(), pn.is_some());
            let (Some(wn), Some(pn)) = (wn, pn) else { continue };
            prop_assert_eq!(wm.weight(&wn), wm.weight(&w) - Weight::alpha(ty, i));
            prop_assert_eq!(wm.e(&wn, i), Some(w.clone()));
            prop_assert_eq!(pm.e(&pn, i), Some(p.clone()));
            prop_assert_eq!(&wall_to_path(&wm, &pm, &wn).unwrap(), &pn);
            w = wn;
            p = pn;
        }
    }
}
