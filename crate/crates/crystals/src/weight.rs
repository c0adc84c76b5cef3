//! Affine weights in fundamental-weight coordinates.
//!
//! A weight is stored as integer coefficients on the fundamental weights
//! Lambda_0..Lambda_n plus an integer multiple of the null root delta.
//! Classical (level-0) weights of crystal elements are represented with
//! delta = 0; the delta coordinate is used by affinizations and by wall
//! weights, where the delta degree carries real information.

use crate::cartan::AffineType;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Weight {
    pub ty: AffineType,
    /// Coefficient of Lambda_i for each node i = 0..=n.
    pub lambda: Vec<i64>,
    /// Coefficient of delta.
    pub delta: i64,
}

impl Weight {
    pub fn zero(ty: AffineType) -> Weight {
        Weight { ty, lambda: vec![0; ty.rank() + 1], delta: 0 }
    }

    /// The fundamental weight Lambda_i.
    pub fn fundamental(ty: AffineType, i: usize) -> Weight {
        let mut w = Weight::zero(ty);
        w.lambda[i] = 1;
        w
    }

    /// The null root delta.
    pub fn delta(ty: AffineType) -> Weight {
        let mut w = Weight::zero(ty);
        w.delta = 1;
        w
    }

    /// The simple root alpha_j, with alpha_0 carrying one copy of delta.
    pub fn alpha(ty: AffineType, j: usize) -> Weight {
        let spec = ty.spec();
        let mut w = Weight::zero(ty);
        for i in spec.nodes() {
            w.lambda[i] = spec.a(i, j);
        }
        if j == 0 {
            w.delta = 1;
        }
        w
    }

    /// The classical projection of alpha_j: same Lambda coordinates but no
    /// delta, so that the classical alpha_0 equals minus the highest root.
    pub fn alpha_classical(ty: AffineType, j: usize) -> Weight {
        let mut w = Weight::alpha(ty, j);
        w.delta = 0;
        w
    }

    /// Pairing with the coroot h_i.
    pub fn pair(&self, i: usize) -> i64 {
        self.lambda[i]
    }

    /// Level: pairing with the canonical central element. Marks and comarks
    /// agree in simply-laced types.
    pub fn level(&self) -> i64 {
        let spec = self.ty.spec();
        spec.nodes().map(|i| spec.marks[i] * self.lambda[i]).sum()
    }

    /// True if the Lambda part is zero (the weight is a multiple of delta).
    pub fn is_delta_multiple(&self) -> bool {
        self.lambda.iter().all(|&c| c == 0)
    }

    /// True if every Lambda coefficient is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&c| c >= 0)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        assert_eq!(self.ty, rhs.ty);
        for (a, b) in self.lambda.iter_mut().zip(rhs.lambda.iter()) {
            *a += b;
        }
        self.delta += rhs.delta;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        assert_eq!(self.ty, rhs.ty);
        for (a, b) in self.lambda.iter_mut().zip(rhs.lambda.iter()) {
            *a -= b;
        }
        self.delta -= rhs.delta;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(mut self) -> Weight {
        for a in self.lambda.iter_mut() {
            *a = -*a;
        }
        self.delta = -self.delta;
        self
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(mut self, k: i64) -> Weight {
        for a in self.lambda.iter_mut() {
            *a *= k;
        }
        self.delta *= k;
        self
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.lambda.iter().enumerate() {
            if c != 0 {
                terms.push(match c {
                    1 => format!("L{i}"),
                    -1 => format!("-L{i}"),
                    c => format!("{c}*L{i}"),
                });
            }
        }
        if self.delta != 0 {
            terms.push(match self.delta {
                1 => "d".to_string(),
                -1 => "-d".to_string(),
                c => format!("{c}*d"),
            });
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_pairings_match_cartan_matrix() {
        for ty in AffineType::ALL {
            let spec = ty.spec();
            for j in spec.nodes() {
                let a = Weight::alpha(ty, j);
                for i in spec.nodes() {
                    assert_eq!(a.pair(i), spec.a(i, j));
                }
                assert_eq!(a.level(), 0);
            }
        }
    }

    #[test]
    fn fundamental_levels_are_marks() {
        for ty in AffineType::ALL {
            let spec = ty.spec();
            for i in spec.nodes() {
                assert_eq!(Weight::fundamental(ty, i).level(), spec.marks[i]);
            }
        }
    }

    #[test]
    fn delta_is_sum_of_marked_alphas() {
        for ty in AffineType::ALL {
            let spec = ty.spec();
            let mut sum = Weight::zero(ty);
            for i in spec.nodes() {
                sum += Weight::alpha(ty, i) * spec.marks[i];
            }
            let mut delta = Weight::zero(ty);
            delta.delta = 1;
            assert_eq!(sum, delta);
        }
    }
}
