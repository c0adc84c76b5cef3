//! Young walls: semi-infinite sequences of columns, ground beyond a finite
//! head, carrying the affine crystal structure through the signature rule.
//!
//! Position r = 0 is the rightmost column and positions grow to the left.
//! Each column is a (shift class, z-power) pair; beyond the head the wall
//! agrees with the ground sequence of the chosen fundamental weight. Walls
//! whose adjacent affine energies are all at least 1 are normally ordered
//! (the Fock space crystal); walls with all energies exactly 1 are reduced
//! (the highest-weight crystal).

use crate::column::ColumnModel;
use crate::energy::EnergyTable;
use crate::tensor::{scan, OpTarget, StringScan};
use crate::weight::Weight;
use crate::{Error, Result};
use std::collections::{BTreeMap, HashSet};

/// A wall, stored as its non-ground head: entry r is (class, z-power) of the
/// column at position r. Trailing entries equal to the ground column are
/// trimmed, so equal walls compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    head: Vec<(u32, i64)>,
}

impl Wall {
    pub fn ground() -> Wall {
        Wall { head: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.head.len()
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty()
    }

    pub fn head(&self) -> &[(u32, i64)] {
        &self.head
    }
}

/// Wall crystal for one fundamental weight, tying the column model and the
/// energy table together.
pub struct WallModel<'a> {
    pub node: usize,
    pub cm: &'a ColumnModel,
    pub et: &'a EnergyTable,
    /// Ground cycle as elements of the perfect crystal.
    pub gelem: Vec<u32>,
    /// Ground cycle as column classes.
    pub gclass: Vec<u32>,
    /// lambda[r] is the level-1 weight with phi-weight(ground_r) = lambda[r].
    lambda: Vec<Weight>,
    m0: i64,
    h_cycle: Vec<i64>,
}

impl<'a> WallModel<'a> {
    pub fn new(cm: &'a ColumnModel, et: &'a EnergyTable, node: usize) -> Result<WallModel<'a>> {
        let ty = cm.ty;
        let gt = crate::tables::ground_table(ty, node)?;
        let gelem: Vec<u32> = gt
            .base_cycle
            .iter()
            .map(|l| {
                cm.b.find_label(l)
                    .ok_or_else(|| Error::DataInvalid(format!("ground label {l} missing")))
            })
            .collect::<Result<_>>()?;
        let cycle = gelem.len();
        let colors: Vec<usize> = (0..=ty.rank()).collect();

        // The embedded ground data must agree with the live energy table and
        // the live crystal: H values, the m recursion, and the interlocking
        // phi/eps weights along the sequence.
        let mut h_cycle = Vec::with_capacity(cycle);
        for r in 0..cycle {
            let h = et.h(gelem[(r + 1) % cycle], gelem[r]);
            if h != gt.h_cycle[r] {
                return Err(Error::TableMismatch(format!(
                    "ground H at position {r} is {h}, table says {}",
                    gt.h_cycle[r]
                )));
            }
            h_cycle.push(h);
        }
        let mut m = gt.m0;
        for (r, &expect) in gt.m_first6.iter().enumerate() {
            if m != expect {
                return Err(Error::TableMismatch(format!(
                    "ground power m_{r} is {m}, table says {expect}"
                )));
            }
            m += 1 - h_cycle[r % cycle];
        }
        let lambda: Vec<Weight> = gelem
            .iter()
            .map(|&x| cm.b.phi_weight(x, &colors))
            .collect();
        if lambda[0] != Weight::fundamental(ty, node) {
            return Err(Error::TableMismatch(format!(
                "phi-weight of b_0 is {}, not the requested fundamental weight",
                lambda[0]
            )));
        }
        for r in 0..cycle {
            let eps = cm.b.eps_weight(gelem[r], &colors);
            if eps != lambda[(r + 1) % cycle] {
                return Err(Error::TableMismatch(format!(
                    "eps-weight of ground element {r} does not continue the sequence"
                )));
            }
        }
        let gclass = gelem.iter().map(|&x| cm.psi_inv[x as usize]).collect();
        Ok(WallModel { node, cm, et, gelem, gclass, lambda, m0: gt.m0, h_cycle })
    }

    pub fn cycle(&self) -> usize {
        self.gelem.len()
    }

    /// Ground z-power at position r.
    pub fn m(&self, r: usize) -> i64 {
        let mut m = self.m0;
        for s in 0..r {
            m += 1 - self.h_cycle[s % self.h_cycle.len()];
        }
        m
    }

    /// Column of a wall at any position.
    pub fn col(&self, w: &Wall, r: usize) -> (u32, i64) {
        if r < w.head.len() {
            w.head[r]
        } else {
            (self.gclass[r % self.cycle()], self.m(r))
        }
    }

    fn is_ground_col(&self, r: usize, col: (u32, i64)) -> bool {
        col == (self.gclass[r % self.cycle()], self.m(r))
    }

    fn make(&self, mut head: Vec<(u32, i64)>) -> Wall {
        while let Some(&last) = head.last() {
            if self.is_ground_col(head.len() - 1, last) {
                head.pop();
            } else {
                break;
            }
        }
        Wall { head }
    }

    /// Build a wall from explicit columns, validating classes and trimming.
    pub fn wall_from_cols(&self, cols: Vec<(u32, i64)>) -> Result<Wall> {
        for &(c, _) in &cols {
            if c as usize >= self.cm.classes.len() {
                return Err(Error::DataInvalid(format!("no column class {c}")));
            }
        }
        Ok(self.make(cols))
    }

    /// Affine energy between positions r+1 and r.
    pub fn h_aff(&self, w: &Wall, r: usize) -> i64 {
        let (c1, u1) = self.col(w, r + 1);
        let (c0, u0) = self.col(w, r);
        self.et.h_aff(u1, self.cm.psi[c1 as usize], u0, self.cm.psi[c0 as usize])
    }

    pub fn is_normally_ordered(&self, w: &Wall) -> bool {
        (0..w.head.len()).all(|r| self.h_aff(w, r) >= 1)
    }

    pub fn is_reduced(&self, w: &Wall) -> bool {
        (0..w.head.len()).all(|r| self.h_aff(w, r) == 1)
    }

    fn scan_color(&self, w: &Wall, i: usize) -> StringScan {
        let factors: Vec<(i64, i64)> = w
            .head
            .iter()
            .map(|&(c, _)| (self.cm.crystal.eps(i, c), self.cm.crystal.phi(i, c)))
            .collect();
        let tail = self.lambda[w.head.len() % self.cycle()].pair(i);
        scan(tail, &factors)
    }

    pub fn eps(&self, w: &Wall, i: usize) -> i64 {
        self.scan_color(w, i).eps
    }

    pub fn phi(&self, w: &Wall, i: usize) -> i64 {
        self.scan_color(w, i).phi
    }

    pub fn is_highest_weight(&self, w: &Wall) -> bool {
        (0..=self.cm.ty.rank()).all(|i| self.eps(w, i) == 0)
    }

    pub fn f(&self, w: &Wall, i: usize) -> Option<Wall> {
        let target = self.scan_color(w, i).f_target?;
        let mut head = w.head.clone();
        let r = match target {
            OpTarget::Factor(r) => r,
            OpTarget::Tail => {
                let r = head.len();
                head.push((self.gclass[r % self.cycle()], self.m(r)));
                r
            }
        };
        let (c, u) = head[r];
        let c2 = self.cm.crystal.f(i, c).expect("scan promised an addable block");
        head[r] = (c2, u - i64::from(i == 0));
        Some(self.make(head))
    }

    pub fn e(&self, w: &Wall, i: usize) -> Option<Wall> {
        let r = self.scan_color(w, i).e_target?;
        let mut head = w.head.clone();
        let (c, u) = head[r];
        let c2 = self.cm.crystal.e(i, c).expect("scan promised a removable block");
        head[r] = (c2, u + i64::from(i == 0));
        Some(self.make(head))
    }

    /// Affine weight: lambda plus the classical differences against the
    /// ground columns plus delta times the total z-power difference.
    pub fn weight(&self, w: &Wall) -> Weight {
        let ty = self.cm.ty;
        let mut out = Weight::fundamental(ty, self.node);
        for r in 0..w.head.len() {
            let (c, u) = w.head[r];
            out += self.cm.crystal.wt(c).clone() - self.cm.b.wt(self.gelem[r % self.cycle()]).clone();
            out.delta += u - self.m(r);
        }
        out
    }

    /// The same weight computed geometrically, as lambda minus one simple
    /// root per block added to the concrete ground columns.
    pub fn weight_by_blocks(&self, w: &Wall) -> Weight {
        let ty = self.cm.ty;
        let mut out = Weight::fundamental(ty, self.node);
        for i in 0..=ty.rank() {
            let mut k = 0;
            for r in 0..w.head.len() {
                k += self.block_diff(w, r, Some(i));
            }
            out -= Weight::alpha(ty, i) * k;
        }
        out
    }

    /// Signed block count of column r relative to the concrete ground column
    /// at the same position, optionally restricted to one color.
    pub fn block_diff(&self, w: &Wall, r: usize, color: Option<usize>) -> i64 {
        let (c, u) = self.col(w, r);
        let col = self.cm.concrete(c, u);
        let ground = self.cm.concrete(self.gclass[r % self.cycle()], self.m(r));
        col.signed_diff(&ground, &self.cm.pat, color)
    }

    /// Number of blocks the wall adds to the ground wall.
    pub fn block_count(&self, w: &Wall) -> i64 {
        (0..w.head.len()).map(|r| self.block_diff(w, r, None)).sum()
    }

    /// Whether a full period can be removed from column r keeping the wall
    /// normally ordered (the inverse of add_delta).
    pub fn remove_delta(&self, w: &Wall, r: usize) -> Option<Wall> {
        if self.h_aff(w, r) < 2 {
            return None;
        }
        let mut head = self.extended_head(w, r + 1);
        head[r].1 += 1;
        Some(self.make(head))
    }

    /// Add a full period of blocks to column r; the result is normally
    /// ordered iff column r did not already stick out against column r-1.
    pub fn add_delta(&self, w: &Wall, r: usize) -> Option<Wall> {
        if r > 0 && self.h_aff(w, r - 1) < 2 {
            return None;
        }
        let mut head = self.extended_head(w, r + 1);
        head[r].1 -= 1;
        Some(self.make(head))
    }

    fn extended_head(&self, w: &Wall, len: usize) -> Vec<(u32, i64)> {
        let mut head = w.head.clone();
        for r in head.len()..len {
            head.push((self.gclass[r % self.cycle()], self.m(r)));
        }
        head
    }

    /// Remove periods until every adjacent affine energy is exactly 1; the
    /// classes never change, so the result is the unique reduced wall over
    /// the same class sequence. Returns it and the number of removed periods.
    pub fn reduce(&self, w: &Wall) -> (Wall, i64) {
        let mut cur = w.clone();
        let mut removed = 0;
        loop {
            let mut acted = false;
            for r in 0..cur.head.len() {
                if let Some(next) = self.remove_delta(&cur, r) {
                    cur = next;
                    removed += 1;
                    acted = true;
                    break;
                }
            }
            if !acted {
                return (cur, removed);
            }
        }
    }

    /// The highest-weight normally ordered wall with parts[r] extra periods
    /// on column r; parts must be weakly decreasing. Its weight is lambda
    /// minus (sum of parts) times delta.
    pub fn hw_wall(&self, parts: &[i64]) -> Result<Wall> {
        for r in 0..parts.len() {
            if parts[r] < 0 || (r > 0 && parts[r] > parts[r - 1]) {
                return Err(Error::BadWeight(format!("not a partition: {parts:?}")));
            }
        }
        let head = (0..parts.len())
            .map(|r| (self.gclass[r % self.cycle()], self.m(r) - parts[r]))
            .collect();
        Ok(self.make(head))
    }

    /// All walls reachable from the ground wall by at most `depth` lowering
    /// operators, with the number of added blocks (= operators applied).
    pub fn enumerate(&self, depth: usize) -> Vec<(Wall, usize)> {
        let mut seen: HashSet<Wall> = HashSet::new();
        let mut out: Vec<(Wall, usize)> = Vec::new();
        let mut frontier = vec![Wall::ground()];
        seen.insert(Wall::ground());
        out.push((Wall::ground(), 0));
        for d in 1..=depth {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..=self.cm.ty.rank() {
                    if let Some(v) = self.f(w, i) {
                        if seen.insert(v.clone()) {
                            out.push((v.clone(), d));
                            next.push(v);
                        }
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Independent enumeration of the same depth slice by column-by-column
    /// constrained search, no crystal operators involved: all walls whose
    /// columns each contain their ground column, satisfy the model predicate
    /// (reduced or normally ordered), and add at most `depth` blocks in
    /// total. Positions up to depth + 2 cycles are searched, which covers
    /// every wall the operator closure can reach at this depth; agreement of
    /// the two enumerations is asserted by the verification suite.
    pub fn enumerate_slice(&self, depth: usize, reduced: bool) -> Vec<Wall> {
        let cycle = self.cycle();
        let p = self.cm.pat.period as i64;
        let r_hi = depth + 2 * cycle;
        let nclasses = self.cm.classes.len();
        // base_cost[rho][c] = added blocks of class c at ground alignment;
        // at relative power n the cost is base_cost - n * period.
        let mut base_cost = vec![vec![0i64; nclasses]; cycle];
        for rho in 0..cycle {
            let ground_rep = &self.cm.rep[self.gclass[rho] as usize];
            for c in 0..nclasses {
                base_cost[rho][c] =
                    self.cm.rep[c].signed_diff(ground_rep, &self.cm.pat, None);
            }
        }
        let contains = |c: usize, rho: usize, n: i64| -> bool {
            let ground_rep = &self.cm.rep[self.gclass[rho] as usize];
            let inner = self.cm.rep[c].shifted_down(n * p);
            ground_rep.subset_of(&inner)
        };

        let mut out = Vec::new();
        // Columns are chosen left to right; cols[k] is the column at
        // position r_hi - 1 - k.
        let mut cols: Vec<(u32, i64)> = Vec::with_capacity(r_hi);
        struct Search<'m, 'b> {
            wm: &'b WallModel<'m>,
            base_cost: &'b [Vec<i64>],
            out: &'b mut Vec<Wall>,
            reduced: bool,
            p: i64,
        }
        impl Search<'_, '_> {
            fn go(
                &mut self,
                r: usize,
                left: (u32, i64),
                budget: i64,
                cols: &mut Vec<(u32, i64)>,
                contains: &dyn Fn(usize, usize, i64) -> bool,
            ) {
                let rho = r % self.wm.cycle();
                let m_r = self.wm.m(r);
                let left_elem = self.wm.cm.psi[left.0 as usize];
                for c in 0..self.wm.cm.classes.len() {
                    let h = self.wm.et.h(left_elem, self.wm.cm.psi[c]);
                    // Largest power keeping H_aff(left, here) at least 1;
                    // reduced walls must sit exactly there.
                    let pin = left.1 - 1 + h;
                    let n_lo = div_ceil_i64(self.base_cost[rho][c] - budget, self.p);
                    let u_lo = m_r + n_lo;
                    let u_range: Vec<i64> = if self.reduced {
                        vec![pin]
                    } else {
                        (u_lo..=pin).rev().collect()
                    };
                    for u in u_range {
                        let n = u - m_r;
                        let cost = self.base_cost[rho][c] - n * self.p;
                        if cost < 0 || cost > budget || !contains(c, rho, n) {
                            continue;
                        }
                        cols.push((c as u32, u));
                        if r == 0 {
                            let mut head = cols.clone();
                            head.reverse();
                            self.out.push(self.wm.make(head));
                        } else {
                            self.go(r - 1, (c as u32, u), budget - cost, cols, contains);
                        }
                        cols.pop();
                    }
                }
            }
        }
        let start = (self.gclass[r_hi % cycle], self.m(r_hi));
        Search { wm: self, base_cost: &base_cost, out: &mut out, reduced, p }.go(
            r_hi - 1,
            start,
            depth as i64,
            &mut cols,
            &contains,
        );
        out.sort();
        out.dedup();
        out
    }

    /// Per-weight element counts of an enumeration.
    pub fn weight_census(&self, walls: &[(Wall, usize)]) -> BTreeMap<Weight, usize> {
        let mut census = BTreeMap::new();
        for (w, _) in walls {
            *census.entry(self.weight(w)).or_insert(0) += 1;
        }
        census
    }

    /// One line per head column: position, class label under the perfect
    /// crystal, z-power, and the affine energy to the right neighbor.
    pub fn describe(&self, w: &Wall) -> String {
        let mut out = String::new();
        if w.is_empty() {
            out.push_str("ground wall\n");
        }
        for r in (0..w.head.len()).rev() {
            let (c, u) = w.head[r];
            let label = self.cm.b.label(self.cm.psi[c as usize]);
            let h = if r == 0 {
                String::new()
            } else {
                format!("  H_aff(r, r-1) = {}", self.h_aff(w, r - 1))
            };
            out.push_str(&format!(
                "r={r}: column {label} z^{u} ({} blocks over ground){h}\n",
                self.block_diff(w, r, None)
            ));
        }
        out
    }
}

fn div_ceil_i64(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect;

    fn setup() -> (ColumnModel, EnergyTable) {
        let cm = ColumnModel::build(crate::AffineType::E6).unwrap();
        let et = EnergyTable::new(&perfect::level_one_crystal(crate::AffineType::E6)).unwrap();
        (cm, et)
    }

    #[test]
    fn ground_wall_is_reduced_and_has_weight_lambda() {
        let (cm, et) = setup();
        for node in [0usize, 1, 6] {
            let wm = WallModel::new(&cm, &et, node).unwrap();
            let g = Wall::ground();
            assert!(wm.is_reduced(&g));
            assert!(wm.is_highest_weight(&g));
            assert_eq!(wm.weight(&g), Weight::fundamental(cm.ty, node));
            assert_eq!(wm.weight_by_blocks(&g), Weight::fundamental(cm.ty, node));
        }
    }

    #[test]
    fn first_zero_arrow_adds_delta_minus_theta() {
        let (cm, et) = setup();
        let wm = WallModel::new(&cm, &et, 0).unwrap();
        let g = Wall::ground();
        let w = wm.f(&g, 0).expect("the ground wall accepts a 0-block");
        assert_eq!(wm.weight(&w), Weight::fundamental(cm.ty, 0) - Weight::alpha(cm.ty, 0));
        assert_eq!(wm.weight(&w), wm.weight_by_blocks(&w));
        assert!(wm.is_reduced(&w));
        assert_eq!(wm.block_count(&w), 1);
        let back = wm.e(&w, 0).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn hw_walls_carry_delta_multiples() {
        let (cm, et) = setup();
        let wm = WallModel::new(&cm, &et, 0).unwrap();
        let w = wm.hw_wall(&[2, 1]).unwrap();
        assert!(wm.is_normally_ordered(&w));
        assert!(wm.is_highest_weight(&w));
        let expect = Weight::fundamental(cm.ty, 0) + Weight::delta(cm.ty) * -3;
        assert_eq!(wm.weight(&w), expect);
        let (red, removed) = wm.reduce(&w);
        assert_eq!(red, Wall::ground());
        assert_eq!(removed, 3);
    }
}
