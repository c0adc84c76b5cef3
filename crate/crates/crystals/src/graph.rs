//! Finite colored crystal graphs with exact weights.
//!
//! A crystal is stored as a dense element table plus one partial injection
//! per color for the lowering operators; raising operators are the inverse
//! maps. String statistics are precomputed so that signature computations
//! on tensor products and walls are constant time per factor.

use crate::cartan::AffineType;
use crate::weight::Weight;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Sentinel for "no arrow" in the dense arrow tables.
pub const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Crystal {
    pub ty: AffineType,
    weights: Vec<Weight>,
    labels: Vec<String>,
    /// f[i][x] = target of the i-arrow out of x, or NONE.
    f: Vec<Vec<u32>>,
    /// e[i][x] = source of the i-arrow into x, or NONE.
    e: Vec<Vec<u32>>,
    /// eps[i][x] = length of the raising string above x in color i.
    eps: Vec<Vec<u32>>,
    /// phi[i][x] = length of the lowering string below x in color i.
    phi: Vec<Vec<u32>>,
}

impl Crystal {
    /// Assemble a crystal from elements and lowering arrows, checking that
    /// each color is a partial injection without cycles and that weights are
    /// compatible with the arrows and with the string statistics.
    pub fn build(
        ty: AffineType,
        elements: Vec<(Weight, String)>,
        arrows: &[(usize, u32, u32)],
    ) -> Result<Crystal> {
        let ncolors = ty.rank() + 1;
        let n = elements.len();
        let (weights, labels): (Vec<Weight>, Vec<String>) = elements.into_iter().unzip();
        let mut f = vec![vec![NONE; n]; ncolors];
        let mut e = vec![vec![NONE; n]; ncolors];
        for &(i, from, to) in arrows {
            if i >= ncolors || from as usize >= n || to as usize >= n {
                return Err(Error::DataInvalid(format!(
                    "arrow ({i}, {from}, {to}) out of range"
                )));
            }
            if f[i][from as usize] != NONE {
                return Err(Error::DataInvalid(format!(
                    "two {i} arrows out of element {from}"
                )));
            }
            if e[i][to as usize] != NONE {
                return Err(Error::DataInvalid(format!(
                    "two {i} arrows into element {to}"
                )));
            }
            f[i][from as usize] = to;
            e[i][to as usize] = from;
        }
        let mut eps = vec![vec![0u32; n]; ncolors];
        let mut phi = vec![vec![0u32; n]; ncolors];
        for i in 0..ncolors {
            let mut visited = vec![false; n];
            for head in 0..n {
                if e[i][head] != NONE {
                    continue;
                }
                let mut chain = Vec::new();
                let mut x = head as u32;
                loop {
                    if visited[x as usize] {
                        return Err(Error::DataInvalid(format!("color {i} chain revisit")));
                    }
                    visited[x as usize] = true;
                    chain.push(x);
                    match f[i][x as usize] {
                        NONE => break,
                        next => x = next,
                    }
                }
                let len = chain.len();
                for (pos, &y) in chain.iter().enumerate() {
                    eps[i][y as usize] = pos as u32;
                    phi[i][y as usize] = (len - 1 - pos) as u32;
                }
            }
            if visited.iter().any(|&v| !v) {
                return Err(Error::DataInvalid(format!("color {i} contains a cycle")));
            }
        }
        let crystal = Crystal { ty, weights, labels, f, e, eps, phi };
        crystal.validate_axioms()?;
        Ok(crystal)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn ncolors(&self) -> usize {
        self.ty.rank() + 1
    }

    pub fn wt(&self, x: u32) -> &Weight {
        &self.weights[x as usize]
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn f(&self, i: usize, x: u32) -> Option<u32> {
        match self.f[i][x as usize] {
            NONE => None,
            y => Some(y),
        }
    }

    pub fn e(&self, i: usize, x: u32) -> Option<u32> {
        match self.e[i][x as usize] {
            NONE => None,
            y => Some(y),
        }
    }

    pub fn eps(&self, i: usize, x: u32) -> i64 {
        self.eps[i][x as usize] as i64
    }

    pub fn phi(&self, i: usize, x: u32) -> i64 {
        self.phi[i][x as usize] as i64
    }

    /// Repeated lowering: f_i applied k times.
    pub fn f_pow(&self, i: usize, x: u32, k: i64) -> Option<u32> {
        let mut y = x;
        for _ in 0..k {
            y = self.f(i, y)?;
        }
        Some(y)
    }

    /// Repeated raising: e_i applied k times.
    pub fn e_pow(&self, i: usize, x: u32, k: i64) -> Option<u32> {
        let mut y = x;
        for _ in 0..k {
            y = self.e(i, y)?;
        }
        Some(y)
    }

    /// All lowering arrows as (color, from, to).
    pub fn arrows(&self) -> Vec<(usize, u32, u32)> {
        let mut out = Vec::new();
        for (i, row) in self.f.iter().enumerate() {
            for (x, &y) in row.iter().enumerate() {
                if y != NONE {
                    out.push((i, x as u32, y));
                }
            }
        }
        out
    }

    /// Sum of eps_i(x) Lambda_i over the given colors.
    pub fn eps_weight(&self, x: u32, colors: &[usize]) -> Weight {
        let mut w = Weight::zero(self.ty);
        for &i in colors {
            w.lambda[i] = self.eps(i, x);
        }
        w
    }

    /// Sum of phi_i(x) Lambda_i over the given colors.
    pub fn phi_weight(&self, x: u32, colors: &[usize]) -> Weight {
        let mut w = Weight::zero(self.ty);
        for &i in colors {
            w.lambda[i] = self.phi(i, x);
        }
        w
    }

    fn validate_axioms(&self) -> Result<()> {
        for x in 0..self.len() as u32 {
            for i in 0..self.ncolors() {
                if self.phi(i, x) - self.eps(i, x) != self.wt(x).pair(i) {
                    return Err(Error::WeightConflict(format!(
                        "phi - eps != <wt, h_{i}> at element {x} ({})",
                        self.label(x)
                    )));
                }
                if let Some(y) = self.f(i, x) {
                    let expect = self.wt(x).clone() - Weight::alpha_classical(self.ty, i);
                    if *self.wt(y) != expect {
                        return Err(Error::WeightConflict(format!(
                            "arrow {i}: {} -> {} does not shift weight by alpha_{i}",
                            self.label(x),
                            self.label(y)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Longest i-string over the given colors.
    pub fn max_string_length(&self, colors: &[usize]) -> i64 {
        let mut best = 0;
        for &i in colors {
            for x in 0..self.len() as u32 {
                best = best.max(self.eps(i, x) + self.phi(i, x));
            }
        }
        best
    }

    /// Connected components under the given colors, ignoring direction.
    /// Component lists and their order are deterministic.
    pub fn components(&self, colors: &[usize]) -> Vec<Vec<u32>> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for start in 0..self.len() as u32 {
            if comp[start as usize] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            comp[start as usize] = id;
            while let Some(x) = queue.pop_front() {
                members.push(x);
                for &i in colors {
                    for y in [self.f(i, x), self.e(i, x)].into_iter().flatten() {
                        if comp[y as usize] == usize::MAX {
                            comp[y as usize] = id;
                            queue.push_back(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Elements annihilated by every raising operator in the given colors.
    pub fn highest_weight_elements(&self, colors: &[usize]) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| colors.iter().all(|&i| self.eps(i, x) == 0))
            .collect()
    }

    /// Extremal elements: the largest subset X of elements with
    /// min(eps_i, phi_i) = 0 for every color that is closed under all string
    /// reflections S_i.
    pub fn extremal_elements(&self) -> Vec<u32> {
        let mut in_set: Vec<bool> = (0..self.len() as u32)
            .map(|x| (0..self.ncolors()).all(|i| self.eps(i, x).min(self.phi(i, x)) == 0))
            .collect();
        loop {
            let mut changed = false;
            for x in 0..self.len() as u32 {
                if !in_set[x as usize] {
                    continue;
                }
                for i in 0..self.ncolors() {
                    let k = self.wt(x).pair(i);
                    let y = if k >= 0 { self.f_pow(i, x, k) } else { self.e_pow(i, x, -k) };
                    if y.map(|y| !in_set[y as usize]).unwrap_or(true) {
                        in_set[x as usize] = false;
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..self.len() as u32).filter(|&x| in_set[x as usize]).collect()
    }

    /// Propagate a weight from one anchor element across all arrows and
    /// check the result against the stored weights.
    pub fn weights_from_anchor(&self, anchor: u32, w: Weight) -> Result<Vec<Weight>> {
        let mut out: Vec<Option<Weight>> = vec![None; self.len()];
        out[anchor as usize] = Some(w);
        let mut queue = VecDeque::from([anchor]);
        while let Some(x) = queue.pop_front() {
            let wx = out[x as usize].clone().unwrap();
            for i in 0..self.ncolors() {
                let alpha = Weight::alpha_classical(self.ty, i);
                let steps = [
                    (self.f(i, x), wx.clone() - alpha.clone()),
                    (self.e(i, x), wx.clone() + alpha),
                ];
                for (y, wy) in steps {
                    if let Some(y) = y {
                        match &out[y as usize] {
                            None => {
                                out[y as usize] = Some(wy);
                                queue.push_back(y);
                            }
                            Some(prev) if *prev != wy => {
                                return Err(Error::WeightConflict(format!(
                                    "element {} reached with two different weights",
                                    self.label(y)
                                )));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(x, w)| {
                w.ok_or_else(|| Error::WeightConflict(format!("element {x} not reached")))
            })
            .collect()
    }

    /// Unique colored-graph isomorphism onto `other` extending the anchor
    /// pairs, walking both lowering and raising arrows in every color.
    pub fn find_isomorphism(&self, other: &Crystal, anchors: &[(u32, u32)]) -> Result<Vec<u32>> {
        if self.len() != other.len() {
            return Err(Error::NoIso(format!(
                "size mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        let mut map = vec![NONE; self.len()];
        let mut rmap = vec![NONE; other.len()];
        let mut queue = VecDeque::new();
        for &(a, b) in anchors {
            map[a as usize] = b;
            rmap[b as usize] = a;
            queue.push_back(a);
        }
        while let Some(a) = queue.pop_front() {
            let b = map[a as usize];
            for i in 0..self.ncolors() {
                let pairs = [(self.f(i, a), other.f(i, b)), (self.e(i, a), other.e(i, b))];
                for (na, nb) in pairs {
                    match (na, nb) {
                        (None, None) => {}
                        (Some(na), Some(nb)) => {
                            if map[na as usize] == NONE && rmap[nb as usize] == NONE {
                                map[na as usize] = nb;
                                rmap[nb as usize] = na;
                                queue.push_back(na);
                            } else if map[na as usize] != nb {
                                return Err(Error::Conflict(format!(
                                    "color {i} forces two images for element {na}"
                                )));
                            }
                        }
                        _ => {
                            return Err(Error::NoIso(format!(
                                "color {i} arrow exists on one side only at pair ({}, {})",
                                self.label(a),
                                other.label(b)
                            )));
                        }
                    }
                }
            }
        }
        if map.iter().any(|&b| b == NONE) {
            return Err(Error::NoIso("anchors do not reach every element".into()));
        }
        Ok(map)
    }

    /// Index of the first element carrying the given label.
    pub fn find_label(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|x| x as u32)
    }

    /// Index of the unique element with the given weight, if unique.
    pub fn find_weight(&self, w: &Weight) -> Option<u32> {
        let mut found = None;
        for x in 0..self.len() as u32 {
            if self.wt(x) == w {
                if found.is_some() {
                    return None;
                }
                found = Some(x);
            }
        }
        found
    }
}
