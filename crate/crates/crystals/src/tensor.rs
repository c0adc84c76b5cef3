//! Tensor products of crystals and the signature rule.
//!
//! Conventions: in a two-factor product b (x) b' the LEFT factor is written
//! first and the lowering operator prefers it:
//!   f_i(b (x) b') = f_i b (x) b'  when phi_i(b) >  eps_i(b'),
//!                 = b (x) f_i b'  otherwise,
//!   e_i(b (x) b') = e_i b (x) b'  when phi_i(b) >= eps_i(b'),
//!                 = b (x) e_i b'  otherwise.
//! The signature scan generalizes this rule to arbitrarily many factors,
//! including a semi-infinite ground tail on the left, and is shared by the
//! path and wall models.

use crate::graph::Crystal;
use crate::weight::Weight;

/// Identify an element of a two-factor tensor with a flat index.
pub fn pair_id(left: u32, right: u32, right_size: usize) -> u32 {
    left * right_size as u32 + right
}

/// Recover the two factors from a flat tensor index.
pub fn pair_of(id: u32, right_size: usize) -> (u32, u32) {
    (id / right_size as u32, id % right_size as u32)
}

/// The tensor product of two crystals as a crystal on flat pair indices.
pub fn tensor(a: &Crystal, b: &Crystal) -> Crystal {
    assert_eq!(a.ty, b.ty);
    let nb = b.len();
    let mut elements = Vec::with_capacity(a.len() * nb);
    for x in 0..a.len() as u32 {
        for y in 0..nb as u32 {
            let w = a.wt(x).clone() + b.wt(y).clone();
            elements.push((w, format!("{}*{}", a.label(x), b.label(y))));
        }
    }
    let mut arrows = Vec::new();
    for x in 0..a.len() as u32 {
        for y in 0..nb as u32 {
            for i in 0..a.ncolors() {
                let target = if a.phi(i, x) > b.eps(i, y) {
                    a.f(i, x).map(|fx| pair_id(fx, y, nb))
                } else {
                    b.f(i, y).map(|fy| pair_id(x, fy, nb))
                };
                if let Some(t) = target {
                    arrows.push((i, pair_id(x, y, nb), t));
                }
            }
        }
    }
    Crystal::build(a.ty, elements, &arrows).expect("tensor product must satisfy crystal axioms")
}

/// Weight of a tensor element, for callers that avoid building the product.
pub fn tensor_weight(a: &Crystal, b: &Crystal, x: u32, y: u32) -> Weight {
    a.wt(x).clone() + b.wt(y).clone()
}

/// Where a lowering operator lands in a signature scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpTarget {
    /// The operator acts on the ground tail just beyond the stored factors;
    /// the caller extends the sequence by one ground factor and acts there.
    Tail,
    /// The operator acts on the stored factor with this index, counted from
    /// the right (index 0 is the rightmost factor).
    Factor(usize),
}

/// Result of a signature scan over one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringScan {
    /// Number of surviving minus signs: eps_i of the whole sequence.
    pub eps: i64,
    /// Number of surviving plus signs: phi_i of the whole sequence.
    pub phi: i64,
    /// Factor index (from the right) receiving the raising operator.
    pub e_target: Option<usize>,
    /// Position receiving the lowering operator.
    pub f_target: Option<OpTarget>,
}

/// Run the signature rule for one color over a right-to-left factor list.
///
/// `factors[r]` holds (eps_i, phi_i) of the factor at position r, with
/// position 0 the rightmost tensor factor. `tail_plus` is the number of plus
/// signs contributed by the ground tail to the left of the stored factors.
/// Scanning left to right, each factor contributes eps_i minus signs then
/// phi_i plus signs; adjacent "+ -" pairs cancel; the lowering operator acts
/// at the leftmost surviving plus and the raising operator at the rightmost
/// surviving minus.
pub fn scan(tail_plus: i64, factors: &[(i64, i64)]) -> StringScan {
    assert!(tail_plus >= 0);
    // Stack entries are the sources of currently unmatched plus signs.
    let mut plus_stack: Vec<OpTarget> = Vec::new();
    let mut eps = 0i64;
    let mut e_target: Option<usize> = None;
    for _ in 0..tail_plus {
        plus_stack.push(OpTarget::Tail);
    }
    for r in (0..factors.len()).rev() {
        let (fe, fp) = factors[r];
        for _ in 0..fe {
            if plus_stack.pop().is_none() {
                eps += 1;
                e_target = Some(r);
            }
        }
        for _ in 0..fp {
            plus_stack.push(OpTarget::Factor(r));
        }
    }
    StringScan {
        eps,
        phi: plus_stack.len() as i64,
        e_target,
        f_target: plus_stack.first().copied(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_factor_scan_matches_closed_form() {
        // Over all small statistics the scan must agree with the closed-form
        // two-factor tensor rule with no tail.
        for e1 in 0..4i64 {
            for p1 in 0..4i64 {
                for e0 in 0..4i64 {
                    for p0 in 0..4i64 {
                        // factor 1 is the left factor, factor 0 the right.
                        let s = scan(0, &[(e0, p0), (e1, p1)]);
                        let eps = e1 + 0.max(e0 - p1);
                        let phi = p0 + 0.max(p1 - e0);
                        assert_eq!(s.eps, eps);
                        assert_eq!(s.phi, phi);
                        // Lowering prefers the left factor on strict surplus.
                        if phi > 0 {
                            let expect = if p1 > e0 { 1 } else { 0 };
                            match s.f_target.unwrap() {
                                OpTarget::Factor(r) => assert_eq!(r, expect),
                                OpTarget::Tail => panic!("no tail used"),
                            }
                        }
                        // Raising prefers the left factor on weak surplus.
                        if eps > 0 {
                            let expect = if p1 >= e0 { 1 } else { 0 };
                            assert_eq!(s.e_target.unwrap(), expect);
                        }
                    }
                }
            }
        }
    }
}
