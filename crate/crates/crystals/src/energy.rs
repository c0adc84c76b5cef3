//! Energy functions on tensor squares of the perfect crystals.
//!
//! The energy H on B (x) B is constant along arrows of every classical
//! color, increases by 1 across a 0-arrow acting on the left factor, and
//! decreases by 1 across a 0-arrow acting on the right factor. It is
//! normalized to vanish on x (x) x for the extremal elements x. For a pair
//! of affinized elements, H_aff(z^m x (x) z^n y) = H(x (x) y) + m - n.

use crate::graph::Crystal;
use crate::tensor;
use crate::{Error, Result};
use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct EnergyTable {
    /// Size of the underlying crystal.
    pub n: usize,
    h: Vec<i64>,
    /// The extremal element whose diagonal pair is pinned to zero.
    pub normalization: u32,
}

impl EnergyTable {
    /// Compute the energy on the tensor square of `b` by propagation from
    /// a single anchor, then normalize on the extremal diagonal.
    pub fn new(b: &Crystal) -> Result<EnergyTable> {
        let square = tensor::tensor(b, b);
        let nb = b.len();
        let mut rel: Vec<Option<i64>> = vec![None; square.len()];
        rel[0] = Some(0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(u) = queue.pop_front() {
            let hu = rel[u as usize].unwrap();
            for i in 0..square.ncolors() {
                let steps = [(square.f(i, u), 1i64), (square.e(i, u), -1i64)];
                for (v, dir) in steps {
                    let Some(v) = v else { continue };
                    let delta = if i != 0 {
                        0
                    } else {
                        let (lu, _) = tensor::pair_of(u, nb);
                        let (lv, _) = tensor::pair_of(v, nb);
                        // A 0-arrow on the left factor raises the energy in
                        // the lowering direction.
                        if lu != lv {
                            dir
                        } else {
                            -dir
                        }
                    };
                    let hv = hu + delta;
                    match rel[v as usize] {
                        None => {
                            rel[v as usize] = Some(hv);
                            queue.push_back(v);
                        }
                        Some(prev) if prev != hv => {
                            return Err(Error::Inconsistent(format!(
                                "energy propagation conflict across color {i} at {}",
                                square.label(v)
                            )));
                        }
                        _ => {}
                    }
                }
            }
        }
        if rel.iter().any(|v| v.is_none()) {
            return Err(Error::Inconsistent(
                "tensor square is not connected as an affine crystal".to_string(),
            ));
        }
        let ext = b.extremal_elements();
        let anchor = *ext
            .iter()
            .min_by_key(|&&x| b.label(x))
            .ok_or_else(|| Error::Inconsistent("no extremal elements".to_string()))?;
        let base = rel[tensor::pair_id(anchor, anchor, nb) as usize].unwrap();
        let h: Vec<i64> = rel.into_iter().map(|v| v.unwrap() - base).collect();
        for &x in &ext {
            let d = h[tensor::pair_id(x, x, nb) as usize];
            if d != 0 {
                return Err(Error::Inconsistent(format!(
                    "extremal diagonal pair {} has energy {d}",
                    b.label(x)
                )));
            }
        }
        Ok(EnergyTable { n: nb, h, normalization: anchor })
    }

    /// H(x (x) y) with x the left factor.
    pub fn h(&self, x: u32, y: u32) -> i64 {
        self.h[x as usize * self.n + y as usize]
    }

    /// H_aff of the affinized pair z^m x (x) z^n y.
    pub fn h_aff(&self, m: i64, x: u32, n: i64, y: u32) -> i64 {
        self.h(x, y) + m - n
    }
}

/// dist[a][b] = minimum number of 0-arrows over directed arrow paths from a
/// to b, for every ordered pair; errors if some pair is unreachable.
pub fn zero_arrow_distances(b: &Crystal) -> Result<Vec<Vec<i64>>> {
    let n = b.len();
    let mut all = Vec::with_capacity(n);
    for src in 0..n as u32 {
        let mut dist = vec![i64::MAX; n];
        dist[src as usize] = 0;
        let mut dq = VecDeque::from([src]);
        while let Some(u) = dq.pop_front() {
            let du = dist[u as usize];
            for i in 0..b.ncolors() {
                let Some(v) = b.f(i, u) else { continue };
                let w = if i == 0 { 1 } else { 0 };
                if du + w < dist[v as usize] {
                    dist[v as usize] = du + w;
                    if w == 0 {
                        dq.push_front(v);
                    } else {
                        dq.push_back(v);
                    }
                }
            }
        }
        if dist.iter().any(|&d| d == i64::MAX) {
            return Err(Error::Inconsistent(format!(
                "element {src} cannot reach the whole crystal"
            )));
        }
        all.push(dist);
    }
    Ok(all)
}

/// Simple bitset over crystal elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    pub fn set(&mut self, i: u32) {
        self.0[i as usize / 64] |= 1 << (i % 64);
    }
    pub fn get(&self, i: u32) -> bool {
        self.0[i as usize / 64] >> (i % 64) & 1 == 1
    }
    pub fn or_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// Forward reachability closure using classical arrows only; row a holds
/// every element reachable from a, including a itself.
pub fn classical_reach(b: &Crystal) -> Vec<Bits> {
    let n = b.len();
    // Reverse topological propagation would need a DAG; classical arrows
    // form one (each arrow strictly lowers the finite weight), so iterate
    // until stable for simplicity and let the DAG make it converge fast.
    let mut rows: Vec<Bits> = (0..n as u32)
        .map(|x| {
            let mut r = Bits::new(n);
            r.set(x);
            r
        })
        .collect();
    loop {
        let mut changed = false;
        for x in 0..n as u32 {
            for i in 1..b.ncolors() {
                if let Some(y) = b.f(i, x) {
                    let row_y = rows[y as usize].clone();
                    let before = rows[x as usize].clone();
                    rows[x as usize].or_with(&row_y);
                    if rows[x as usize] != before {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    rows
}

/// For each element a, whether some directed path from a back to a crosses
/// exactly `k` 0-arrows (with any classical arrows in between).
pub fn exact_zero_drop_self_path(b: &Crystal, k: usize) -> Vec<bool> {
    let n = b.len();
    let reach = classical_reach(b);
    let zero_arrows: Vec<(u32, u32)> = b
        .arrows()
        .into_iter()
        .filter(|&(i, _, _)| i == 0)
        .map(|(_, u, v)| (u, v))
        .collect();
    (0..n as u32)
        .map(|a| {
            let mut set = reach[a as usize].clone();
            for _ in 0..k {
                let mut next = Bits::new(n);
                for &(u, v) in &zero_arrows {
                    if set.get(u) {
                        next.or_with(&reach[v as usize]);
                    }
                }
                set = next;
            }
            set.get(a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AffineType;
    use crate::perfect::level_one_crystal;

    #[test]
    fn energy_matches_zero_arrow_distance_e6() {
        let b = level_one_crystal(AffineType::E6);
        let table = EnergyTable::new(&b).unwrap();
        let dist = zero_arrow_distances(&b).unwrap();
        for x in 0..b.len() as u32 {
            for y in 0..b.len() as u32 {
                assert_eq!(table.h(x, y), dist[y as usize][x as usize]);
            }
        }
    }

    #[test]
    fn diagonal_extremal_energy_vanishes_e7() {
        let b = level_one_crystal(AffineType::E7);
        let table = EnergyTable::new(&b).unwrap();
        for &x in &b.extremal_elements() {
            assert_eq!(table.h(x, x), 0);
        }
    }
}
