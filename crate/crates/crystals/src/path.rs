//! Paths: semi-infinite sequences of perfect-crystal elements agreeing with
//! the ground sequence far out, realizing the highest-weight crystal. The
//! crystal structure is the same signature rule as for walls; the embedding
//! into walls pins the z-powers so that every adjacent affine energy is 1.

use crate::energy::EnergyTable;
use crate::graph::Crystal;
use crate::tensor::{scan, OpTarget, StringScan};
use crate::wall::{Wall, WallModel};
use crate::weight::Weight;
use crate::{Error, Result};
use std::collections::HashSet;

/// A path, stored as its non-ground head: entry r is the element at
/// position r, position 0 rightmost. Trailing ground entries are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    head: Vec<u32>,
}

impl Path {
    pub fn ground() -> Path {
        Path { head: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.head.len()
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty()
    }

    pub fn head(&self) -> &[u32] {
        &self.head
    }
}

/// Path crystal for one fundamental weight.
pub struct PathModel<'a> {
    pub node: usize,
    pub b: &'a Crystal,
    pub et: &'a EnergyTable,
    /// Ground cycle b_0, b_1, ...
    pub gelem: Vec<u32>,
    /// lambda[r] is the phi-weight of ground element r.
    lambda: Vec<Weight>,
    h_cycle: Vec<i64>,
}

impl<'a> PathModel<'a> {
    pub fn new(b: &'a Crystal, et: &'a EnergyTable, node: usize) -> Result<PathModel<'a>> {
        let ty = b.ty;
        let gt = crate::tables::ground_table(ty, node)?;
        let gelem: Vec<u32> = gt
            .base_cycle
            .iter()
            .map(|l| {
                b.find_label(l)
                    .ok_or_else(|| Error::DataInvalid(format!("ground label {l} missing")))
            })
            .collect::<Result<_>>()?;
        let cycle = gelem.len();
        let colors: Vec<usize> = (0..=ty.rank()).collect();
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
        let lambda: Vec<Weight> = gelem.iter().map(|&x| b.phi_weight(x, &colors)).collect();
        if lambda[0] != Weight::fundamental(ty, node) {
            return Err(Error::TableMismatch(format!(
                "phi-weight of b_0 is {}, not the requested fundamental weight",
                lambda[0]
            )));
        }
        for r in 0..cycle {
            if b.eps_weight(gelem[r], &colors) != lambda[(r + 1) % cycle] {
                return Err(Error::TableMismatch(format!(
                    "eps-weight of ground element {r} does not continue the sequence"
                )));
            }
        }
        Ok(PathModel { node, b, et, gelem, lambda, h_cycle })
    }

    pub fn cycle(&self) -> usize {
        self.gelem.len()
    }

    /// Element of a path at any position.
    pub fn at(&self, p: &Path, r: usize) -> u32 {
        if r < p.head.len() {
            p.head[r]
        } else {
            self.gelem[r % self.cycle()]
        }
    }

    fn make(&self, mut head: Vec<u32>) -> Path {
        while let Some(&last) = head.last() {
            if last == self.gelem[(head.len() - 1) % self.cycle()] {
                head.pop();
            } else {
                break;
            }
        }
        Path { head }
    }

    fn scan_color(&self, p: &Path, i: usize) -> StringScan {
        let factors: Vec<(i64, i64)> = p
            .head
            .iter()
            .map(|&x| (self.b.eps(i, x), self.b.phi(i, x)))
            .collect();
        let tail = self.lambda[p.head.len() % self.cycle()].pair(i);
        scan(tail, &factors)
    }

    pub fn eps(&self, p: &Path, i: usize) -> i64 {
        self.scan_color(p, i).eps
    }

    pub fn phi(&self, p: &Path, i: usize) -> i64 {
        self.scan_color(p, i).phi
    }

    pub fn is_highest_weight(&self, p: &Path) -> bool {
        (0..=self.b.ty.rank()).all(|i| self.eps(p, i) == 0)
    }

    pub fn f(&self, p: &Path, i: usize) -> Option<Path> {
        let target = self.scan_color(p, i).f_target?;
        let mut head = p.head.clone();
        let r = match target {
            OpTarget::Factor(r) => r,
            OpTarget::Tail => {
                let r = head.len();
                head.push(self.gelem[r % self.cycle()]);
                r
            }
        };
        head[r] = self.b.f(i, head[r]).expect("scan promised phi > 0");
        Some(self.make(head))
    }

    pub fn e(&self, p: &Path, i: usize) -> Option<Path> {
        let r = self.scan_color(p, i).e_target?;
        let mut head = p.head.clone();
        head[r] = self.b.e(i, head[r]).expect("scan promised eps > 0");
        Some(self.make(head))
    }

    /// Affine weight: lambda plus the classical differences against the
    /// ground elements, with the delta coefficient recovered from the
    /// position-weighted energy differences along the sequence.
    pub fn weight(&self, p: &Path) -> Weight {
        let ty = self.b.ty;
        let mut out = Weight::fundamental(ty, self.node);
        for r in 0..p.head.len() {
            out += self.b.wt(p.head[r]).clone() - self.b.wt(self.gelem[r % self.cycle()]).clone();
        }
        for s in 0..p.head.len() {
            let h = self.et.h(self.at(p, s + 1), self.at(p, s));
            out.delta += (s as i64 + 1) * (h - self.h_cycle[s % self.cycle()]);
        }
        out
    }

    /// All paths reachable from the ground path by at most `depth` lowering
    /// operators, with their distance from the ground path.
    pub fn enumerate(&self, depth: usize) -> Vec<(Path, usize)> {
        let mut seen: HashSet<Path> = HashSet::new();
        let mut out = Vec::new();
        let mut frontier = vec![Path::ground()];
        seen.insert(Path::ground());
        out.push((Path::ground(), 0));
        for d in 1..=depth {
            let mut next = Vec::new();
            for p in &frontier {
                for i in 0..=self.b.ty.rank() {
                    if let Some(q) = self.f(p, i) {
                        if seen.insert(q.clone()) {
                            out.push((q.clone(), d));
                            next.push(q);
                        }
                    }
                }
            }
            frontier = next;
        }
        out
    }
}

/// Map a reduced wall to its path: forget the z-powers, keep the elements.
pub fn wall_to_path(wm: &WallModel, pm: &PathModel, w: &Wall) -> Result<Path> {
    if wm.node != pm.node || wm.cm.ty != pm.b.ty {
        return Err(Error::DataInvalid("wall and path models disagree".to_string()));
    }
    if !wm.is_reduced(w) {
        return Err(Error::DataInvalid("only reduced walls embed into paths".to_string()));
    }
    let head = w.head().iter().map(|&(c, _)| wm.cm.psi[c as usize]).collect();
    Ok(pm.make(head))
}

/// Map a path to the reduced wall over the same elements: the z-powers are
/// pinned by requiring every adjacent affine energy to equal 1.
pub fn path_to_wall(pm: &PathModel, wm: &WallModel, p: &Path) -> Result<Wall> {
    if wm.node != pm.node || wm.cm.ty != pm.b.ty {
        return Err(Error::DataInvalid("wall and path models disagree".to_string()));
    }
    let len = p.len();
    let mut us = vec![0i64; len + 1];
    us[len] = wm.m(len);
    for r in (0..len).rev() {
        us[r] = us[r + 1] - 1 + pm.et.h(pm.at(p, r + 1), pm.at(p, r));
    }
    let cols = (0..len)
        .map(|r| (wm.cm.psi_inv[p.head()[r] as usize], us[r]))
        .collect();
    let w = wm.wall_from_cols(cols)?;
    if !wm.is_reduced(&w) {
        return Err(Error::Inconsistent("pinned wall is not reduced".to_string()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::column::ColumnModel;
    use crate::perfect;

    #[test]
    fn paths_and_walls_match_through_the_embedding() {
        let ty = crate::AffineType::E6;
        let b = perfect::level_one_crystal(ty);
        let et = EnergyTable::new(&b).unwrap();
        let cm = ColumnModel::build(ty).unwrap();
        let pm = PathModel::new(&b, &et, 0).unwrap();
        let wm = WallModel::new(&cm, &et, 0).unwrap();

        let walls = wm.enumerate(3);
        let paths = pm.enumerate(3);
        assert_eq!(walls.len(), paths.len());
        let path_set: HashSet<Path> = paths.iter().map(|(p, _)| p.clone()).collect();
        for (w, _) in &walls {
            let p = wall_to_path(&wm, &pm, w).unwrap();
            assert!(path_set.contains(&p));
            assert_eq!(pm.weight(&p), wm.weight(w));
            assert_eq!(path_to_wall(&pm, &wm, &p).unwrap(), *w);
            for i in 0..=ty.rank() {
                let lhs = wm.f(w, i).map(|v| wall_to_path(&wm, &pm, &v).unwrap());
                let rhs = pm.f(&p, i);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
