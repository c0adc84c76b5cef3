//! Young columns: semi-infinite stacks of colored blocks following a
//! periodic pattern, their crystal structure, and the isomorphism onto the
//! level-1 perfect crystal.
//!
//! A column is a downward-closed-up-to-finitely-many-exceptions set of
//! filled slots. Shifting a column down by one period realizes the action
//! of z on the affinization, so the finite crystal lives on shift classes,
//! while each class keeps one anchored absolute realization to make the
//! z-power bookkeeping exact.

pub mod pattern;

use crate::cartan::AffineType;
use crate::graph::Crystal;
use crate::perfect;
use crate::weight::Weight;
use crate::{Error, Result};
use pattern::ColumnPattern;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// A set of filled slots: everything below `base`, plus `extra`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSet {
    base: i64,
    extra: BTreeSet<i64>,
}

impl ColumnSet {
    pub fn full_below(base: i64) -> ColumnSet {
        ColumnSet { base, extra: BTreeSet::new() }
    }

    pub fn new(base: i64, extra: impl IntoIterator<Item = i64>) -> ColumnSet {
        let mut col = ColumnSet { base, extra: extra.into_iter().collect() };
        col.normalize();
        col
    }

    fn normalize(&mut self) {
        assert!(self.extra.iter().all(|&s| s >= self.base));
        while self.extra.remove(&self.base) {
            self.base += 1;
        }
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    /// Highest filled slot.
    pub fn top(&self) -> i64 {
        self.extra.iter().next_back().copied().unwrap_or(self.base - 1)
    }

    pub fn filled(&self, s: i64) -> bool {
        s < self.base || self.extra.contains(&s)
    }

    pub fn extra_slots(&self) -> impl Iterator<Item = i64> + '_ {
        self.extra.iter().copied()
    }

    pub fn with_block(&self, s: i64) -> Option<ColumnSet> {
        if self.filled(s) {
            return None;
        }
        let mut out = self.clone();
        out.extra.insert(s);
        out.normalize();
        Some(out)
    }

    pub fn without_block(&self, s: i64) -> Option<ColumnSet> {
        if !self.filled(s) {
            return None;
        }
        let mut out = self.clone();
        if !out.extra.remove(&s) {
            for t in s + 1..out.base {
                out.extra.insert(t);
            }
            out.base = s;
        }
        out.normalize();
        Some(out)
    }

    /// Shift every slot down by `k` slots (up for negative `k`).
    pub fn shifted_down(&self, k: i64) -> ColumnSet {
        ColumnSet {
            base: self.base - k,
            extra: self.extra.iter().map(|&s| s - k).collect(),
        }
    }

    /// Whether every filled slot of `self` is filled in `other`.
    pub fn subset_of(&self, other: &ColumnSet) -> bool {
        if self.base > other.base {
            for s in other.base..self.base {
                if !other.filled(s) {
                    return false;
                }
            }
        }
        self.extra.iter().all(|&s| other.filled(s))
    }

    /// Signed count of slots in `self` and not in `other`, minus the count
    /// the other way around, optionally restricted to one color.
    pub fn signed_diff(&self, other: &ColumnSet, pat: &ColumnPattern, color: Option<usize>) -> i64 {
        let lo = self.base.min(other.base);
        let hi = self.top().max(other.top());
        let mut diff = 0;
        for s in lo..=hi {
            if color.map(|c| pat.color_of(s) != c).unwrap_or(false) {
                continue;
            }
            match (self.filled(s), other.filled(s)) {
                (true, false) => diff += 1,
                (false, true) => diff -= 1,
                _ => {}
            }
        }
        diff
    }
}

/// The finite crystal of column shift classes, together with the anchored
/// absolute realizations and the isomorphism onto the perfect crystal.
#[derive(Debug)]
pub struct ColumnModel {
    pub ty: AffineType,
    pub pat: ColumnPattern,
    /// The perfect crystal the classes map onto.
    pub b: Crystal,
    /// Canonical shape (top slot in the first period) per class.
    pub classes: Vec<ColumnSet>,
    index: HashMap<ColumnSet, u32>,
    /// Anchored absolute realization per class.
    pub rep: Vec<ColumnSet>,
    /// canonical = rep shifted down by this many periods.
    can_shift: Vec<i64>,
    /// Crystal structure on class ids.
    pub crystal: Crystal,
    /// Class id -> element of the perfect crystal.
    pub psi: Vec<u32>,
    /// Element of the perfect crystal -> class id.
    pub psi_inv: Vec<u32>,
}

impl ColumnModel {
    pub fn build(ty: AffineType) -> Result<ColumnModel> {
        ColumnModel::build_with(ty, ColumnPattern::load(ty))
    }

    pub fn build_with(ty: AffineType, pat: ColumnPattern) -> Result<ColumnModel> {
        let b = perfect::level_one_crystal(ty);
        // Anchor: the drawn ground column for E6/E7, the first exceptional
        // shape for E8; each is matched with the crystal element it realizes.
        let (anchor_col, anchor_label) = match ty {
            AffineType::E6 | AffineType::E7 => {
                let g = crate::tables::ground_column(ty, 0).unwrap();
                (realize_ground(&pat, &g), crate::tables::b_lambda_labels(ty)[0].1.to_string())
            }
            AffineType::E8 => {
                let shape = &pat.exceptional[0];
                (realize_exceptional(&pat, shape), shape.label.clone())
            }
        };
        let anchor_elem = b
            .find_label(&anchor_label)
            .ok_or_else(|| Error::DataInvalid(format!("anchor label {anchor_label} missing")))?;

        let mut builder = ModelBuilder::new(ty, pat);
        builder.bfs(anchor_col.clone())?;
        let ModelBuilder { pat, classes, index, rep, can_shift, arrows, .. } = builder;

        // Class weights: propagate from the anchor element's weight by
        // signed per-color block differences of the anchored realizations.
        let anchor_class = index[&canonicalize(&pat, &anchor_col).0];
        let base_weight = b.wt(anchor_elem).clone();
        let elements: Vec<(Weight, String)> = (0..classes.len())
            .map(|c| {
                let mut w = base_weight.clone();
                for i in 0..=ty.rank() {
                    let d = rep[c].signed_diff(&rep[anchor_class as usize], &pat, Some(i));
                    w -= Weight::alpha_classical(ty, i) * d;
                }
                (w, format!("c{c}"))
            })
            .collect();
        let crystal = Crystal::build(ty, elements, &arrows)?;
        let psi = crystal.find_isomorphism(&b, &[(anchor_class, anchor_elem)])?;
        let mut psi_inv = vec![0u32; b.len()];
        for (c, &x) in psi.iter().enumerate() {
            psi_inv[x as usize] = c as u32;
        }
        Ok(ColumnModel { ty, pat, b, classes, index, rep, can_shift, crystal, psi, psi_inv })
    }

    /// Identify a concrete column: its class and the power u with
    /// column = rep(class) shifted down by u periods.
    pub fn locate(&self, col: &ColumnSet) -> Option<(u32, i64)> {
        let (canon, k) = canonicalize(&self.pat, col);
        let class = *self.index.get(&canon)?;
        Some((class, self.can_shift[class as usize] - k))
    }

    /// The concrete column realizing (class, u).
    pub fn concrete(&self, class: u32, u: i64) -> ColumnSet {
        self.rep[class as usize].shifted_down(u * self.pat.period as i64)
    }

    /// Whether a shape is a valid column.
    pub fn valid(&self, col: &ColumnSet) -> bool {
        is_valid(&self.pat, col)
    }

    /// Absolute slots where an i-block can be added keeping validity.
    pub fn addable(&self, col: &ColumnSet, color: usize) -> Vec<i64> {
        op_candidates(&self.pat, col, color, true)
    }

    /// Absolute slots where an i-block can be removed keeping validity.
    pub fn removable(&self, col: &ColumnSet, color: usize) -> Vec<i64> {
        op_candidates(&self.pat, col, color, false)
    }

    /// The class of the vacuum-like column: the unique class sitting inside
    /// a 0-string of length two.
    pub fn blocked_zero_class(&self) -> Result<u32> {
        let mut hits = Vec::new();
        for c in 0..self.classes.len() as u32 {
            if color_moves(self.ty, &self.pat, &self.rep[c as usize], 0)?.interior {
                hits.push(c);
            }
        }
        match hits.as_slice() {
            [c] => Ok(*c),
            other => Err(Error::Inconsistent(format!(
                "{} classes sit inside a 0-string of length two",
                other.len()
            ))),
        }
    }

    /// The concrete ground column of one fundamental weight, where drawn.
    pub fn ground_concrete(&self, node: usize) -> Option<ColumnSet> {
        crate::tables::ground_column(self.ty, node).map(|g| realize_ground(&self.pat, &g))
    }

    /// The concrete realization of a named exceptional shape.
    pub fn exceptional_concrete(&self, label: &str) -> Option<ColumnSet> {
        self.pat
            .exceptional
            .iter()
            .find(|s| s.label == label)
            .map(|s| realize_exceptional(&self.pat, s))
    }

    /// Text rendering of a column around its boundary region.
    pub fn render(&self, col: &ColumnSet) -> String {
        let p = self.pat.period as i64;
        let lo = col.base() - p;
        let hi = col.top().max(col.base()) + p;
        let mut out = String::new();
        for s in (lo..=hi).rev() {
            let (r, q) = self.pat.residue_of(s);
            let slot = &self.pat.slots[r];
            let mark = if col.filled(s) { format!("[{}]", slot.color) } else { " . ".into() };
            out.push_str(&format!(
                "{mark} slot {s} (residue {r}, period {q}, cube {})\n",
                slot.cube as i64 + q * self.pat.cubes as i64
            ));
        }
        out
    }
}

/// Canonical form: shift down so the top slot lies in the first period.
/// Returns (canonical, periods shifted down).
fn canonicalize(pat: &ColumnPattern, col: &ColumnSet) -> (ColumnSet, i64) {
    let p = pat.period as i64;
    let k = col.top().div_euclid(p);
    (col.shifted_down(k * p), k)
}

fn realize_ground(pat: &ColumnPattern, g: &crate::tables::GroundColumnShape) -> ColumnSet {
    ColumnSet::new(
        g.full_below,
        g.extras.iter().map(|&(r, q)| pat.slot_index(r, q)),
    )
}

fn realize_exceptional(pat: &ColumnPattern, shape: &pattern::ExceptionalShape) -> ColumnSet {
    ColumnSet::new(
        shape.full_below,
        shape.plus.iter().map(|&(r, q)| pat.slot_index(r, q)),
    )
}

fn gravity_valid(pat: &ColumnPattern, col: &ColumnSet) -> bool {
    col.extra_slots().all(|s| {
        let (r, q) = pat.residue_of(s);
        pat.slots[r]
            .supports
            .iter()
            .all(|&(sr, off)| col.filled(pat.slot_index(sr, q + off)))
    })
}

fn is_exceptional(pat: &ColumnPattern, col: &ColumnSet) -> bool {
    let p = pat.period as i64;
    pat.exceptional.iter().any(|shape| {
        let reference = realize_exceptional(pat, shape);
        let gap = col.top() - reference.top();
        gap % p == 0 && *col == reference.shifted_down(-gap)
    })
}

fn is_valid(pat: &ColumnPattern, col: &ColumnSet) -> bool {
    gravity_valid(pat, col) || is_exceptional(pat, col)
}

fn op_candidates(pat: &ColumnPattern, col: &ColumnSet, color: usize, add: bool) -> Vec<i64> {
    let p = pat.period as i64;
    let lo = col.base() - 2 * p;
    let hi = col.top().max(col.base()) + 2 * p;
    let mut out = Vec::new();
    for s in lo..=hi {
        if pat.color_of(s) != color {
            continue;
        }
        let next = if add { col.with_block(s) } else { col.without_block(s) };
        if let Some(next) = next {
            if is_valid(pat, &next) {
                out.push(s);
            }
        }
    }
    out
}

/// Independent census of valid column shapes modulo period shift, found by
/// closing the canonical full column under single-block additions and
/// removals. Uses only the validity predicate, not the crystal operators.
/// Returns (gravity-stable count, exceptional-only count).
pub fn shape_census(pat: &ColumnPattern, cap: usize) -> Result<(usize, usize)> {
    let p = pat.period as i64;
    let seed = canonicalize(pat, &ColumnSet::full_below(0)).0;
    let mut seen: BTreeSet<ColumnSet> = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(col) = queue.pop_front() {
        if seen.len() > cap {
            return Err(Error::DepthOverflow(format!(
                "shape census exceeded {cap} classes"
            )));
        }
        let lo = col.base() - 2 * p;
        let hi = col.top().max(col.base()) + 2 * p;
        for s in lo..=hi {
            for next in [col.with_block(s), col.without_block(s)].into_iter().flatten() {
                if is_valid(pat, &next) {
                    let canon = canonicalize(pat, &next).0;
                    if seen.insert(canon.clone()) {
                        queue.push_back(canon);
                    }
                }
            }
        }
    }
    let gravity = seen.iter().filter(|c| gravity_valid(pat, c)).count();
    Ok((gravity, seen.len() - gravity))
}

struct ModelBuilder {
    ty: AffineType,
    pat: ColumnPattern,
    classes: Vec<ColumnSet>,
    index: HashMap<ColumnSet, u32>,
    rep: Vec<ColumnSet>,
    can_shift: Vec<i64>,
    arrows: Vec<(usize, u32, u32)>,
    arrow_seen: BTreeSet<(usize, u32, u32)>,
}

impl ModelBuilder {
    fn new(ty: AffineType, pat: ColumnPattern) -> ModelBuilder {
        ModelBuilder {
            ty,
            pat,
            classes: Vec::new(),
            index: HashMap::new(),
            rep: Vec::new(),
            can_shift: Vec::new(),
            arrows: Vec::new(),
            arrow_seen: BTreeSet::new(),
        }
    }

    /// Register a class given an absolute realization; error if the same
    /// class reappears with an inconsistent shift.
    fn register(&mut self, abs: &ColumnSet) -> Result<u32> {
        let (canon, k) = canonicalize(&self.pat, abs);
        if let Some(&c) = self.index.get(&canon) {
            if self.rep[c as usize] != *abs {
                return Err(Error::Conflict(format!(
                    "class {c} reached with two different absolute alignments"
                )));
            }
            return Ok(c);
        }
        if self.classes.len() >= 600 {
            return Err(Error::DepthOverflow(
                "column class closure exceeded 600 classes".to_string(),
            ));
        }
        let c = self.classes.len() as u32;
        self.index.insert(canon.clone(), c);
        self.classes.push(canon);
        self.rep.push(abs.clone());
        self.can_shift.push(k);
        Ok(c)
    }

    fn bfs(&mut self, anchor: ColumnSet) -> Result<()> {
        if !is_valid(&self.pat, &anchor) {
            return Err(Error::DataInvalid("anchor column is not valid".to_string()));
        }
        let start = self.register(&anchor)?;
        let mut queue = VecDeque::from([start]);
        let mut done: BTreeSet<u32> = BTreeSet::new();
        while let Some(c) = queue.pop_front() {
            if !done.insert(c) {
                continue;
            }
            let col = self.rep[c as usize].clone();
            let moves: Vec<ColorMoves> = (0..=self.ty.rank())
                .map(|i| color_moves(self.ty, &self.pat, &col, i))
                .collect::<Result<_>>()?;
            let interior: Vec<usize> =
                (0..=self.ty.rank()).filter(|&i| moves[i].interior).collect();
            if interior.len() > 1 {
                return Err(Error::DataInvalid(format!(
                    "class {c} (base {} extras {:?}) sits inside strings of colors {interior:?}",
                    col.base(),
                    col.extra_slots().collect::<Vec<_>>()
                )));
            }
            for i in 0..=self.ty.rank() {
                // A column inside a length-two i-string carries no other
                // arrows, whatever blocks its shape happens to expose.
                if let Some(&bi) = interior.first() {
                    if i != bi {
                        continue;
                    }
                }
                let p = self.pat.period as i64;
                if let Some(s) = moves[i].add {
                    let next = col.with_block(s).unwrap();
                    // Adding a 0-block raises the column by one period's
                    // worth of z-power; shift the realization back down.
                    let next = next.shifted_down(if i == 0 { p } else { 0 });
                    let t = self.register(&next)?;
                    if self.arrow_seen.insert((i, c, t)) {
                        self.arrows.push((i, c, t));
                    }
                    queue.push_back(t);
                }
                if let Some(s) = moves[i].remove {
                    let prev = col.without_block(s).unwrap();
                    let prev = prev.shifted_down(if i == 0 { -p } else { 0 });
                    let t = self.register(&prev)?;
                    if self.arrow_seen.insert((i, t, c)) {
                        self.arrows.push((i, t, c));
                    }
                    queue.push_back(t);
                }
            }
        }
        Ok(())
    }
}

/// Choose the slot acted on when several candidates exist: the higher slot
/// for adding, the lower for removing, except that the doubled color of the
/// E8 pattern discriminates by residue (the partner resting on a 5-block
/// receives additions, the partner resting on a 3-block gives removals).
fn pick(
    ty: AffineType,
    pat: &ColumnPattern,
    color: usize,
    candidates: &[i64],
    add: bool,
) -> Result<Option<i64>> {
    match candidates {
        [] => Ok(None),
        [s] => Ok(Some(*s)),
        [a, b] => {
            if ty == AffineType::E8 && color == 4 {
                let want = if add { 16 } else { 17 };
                let hits: Vec<i64> = candidates
                    .iter()
                    .copied()
                    .filter(|&s| pat.residue_of(s).0 == want)
                    .collect();
                match hits.as_slice() {
                    [s] => Ok(Some(*s)),
                    _ => Err(Error::DataInvalid(format!(
                        "expected one residue-{want} candidate among {candidates:?}"
                    ))),
                }
            } else if add {
                Ok(Some(*a.max(b)))
            } else {
                Ok(Some(*a.min(b)))
            }
        }
        _ => Err(Error::DataInvalid(format!(
            "more than two candidate {color}-slots: {candidates:?}"
        ))),
    }
}

struct ColorMoves {
    add: Option<i64>,
    remove: Option<i64>,
    interior: bool,
}

/// Resolve the add and remove slots for one color on one column, and decide
/// whether the column sits strictly inside an i-string of length two. A shape
/// can expose both an addable and a removable i-block without being interior:
/// it counts only if undoing the removal is itself undone by the add rule
/// (the column is an f-image), or undoing the addition is undone by the
/// remove rule (an e-image). Interior columns admit no arrows of other
/// colors, which silences such incidental exposures elsewhere.
fn color_moves(
    ty: AffineType,
    pat: &ColumnPattern,
    col: &ColumnSet,
    color: usize,
) -> Result<ColorMoves> {
    let add = pick(ty, pat, color, &op_candidates(pat, col, color, true), true)?;
    let remove = pick(ty, pat, color, &op_candidates(pat, col, color, false), false)?;
    let mut interior = false;
    if let (Some(a), Some(r)) = (add, remove) {
        let prev = col.without_block(r).unwrap();
        let f_image =
            pick(ty, pat, color, &op_candidates(pat, &prev, color, true), true)? == Some(r);
        let next = col.with_block(a).unwrap();
        let e_image =
            pick(ty, pat, color, &op_candidates(pat, &next, color, false), false)? == Some(a);
        interior = f_image || e_image;
    }
    Ok(ColorMoves { add, remove, interior })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_set_normalization() {
        let col = ColumnSet::new(0, [0, 1, 3]);
        assert_eq!(col.base(), 2);
        assert_eq!(col.top(), 3);
        assert!(col.filled(-5) && col.filled(3) && !col.filled(2));
        let removed = col.without_block(-2).unwrap();
        assert_eq!(removed.base(), -2);
        assert!(!removed.filled(-2) && removed.filled(-1) && removed.filled(3));
        let back = removed.with_block(-2).unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn shift_and_subset() {
        let col = ColumnSet::new(0, [2]);
        let down = col.shifted_down(3);
        assert_eq!(down.base(), -3);
        assert!(down.subset_of(&col));
        assert!(!col.subset_of(&down));
    }
}
