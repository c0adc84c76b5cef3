//! The shift automorphism of the affinized perfect crystal.
//!
//! Each type carries an automorphism sigma of the affinization that sends
//! the ground column at position r+1 to the one at position r. It permutes
//! arrow colors by a diagram automorphism pi and shifts z-powers:
//! sigma(z^n b) = z^{n + p(b)} c(b). The pair (c, p) is computed by an
//! anchored equivariant traversal: c(f_i b) = f_{pi(i)} c(b) and
//! p(f_i b) = p(b) + [i = 0] - [pi(i) = 0].

use crate::cartan::AffineType;
use crate::graph::Crystal;
use crate::{Error, Result};
use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct Sigma {
    /// Color permutation.
    pub perm: Vec<usize>,
    /// Image element c(b) per element.
    pub map: Vec<u32>,
    /// z-power shift p(b) per element.
    pub zpow: Vec<i64>,
}

/// The color permutation used by sigma in each type.
pub fn color_perm(ty: AffineType) -> Vec<usize> {
    match ty {
        // (0 1 6)(2 3 5), fixing 4.
        AffineType::E6 => vec![1, 6, 3, 5, 4, 2, 0],
        // (0 7)(1 6)(3 5), fixing 2 and 4.
        AffineType::E7 => vec![7, 6, 2, 5, 4, 3, 1, 0],
        AffineType::E8 => (0..=8).collect(),
    }
}

/// Check that a color permutation preserves the Cartan matrix.
pub fn check_diagram_automorphism(ty: AffineType, perm: &[usize]) -> Result<()> {
    let spec = ty.spec();
    for i in spec.nodes() {
        for j in spec.nodes() {
            if spec.a(perm[i], perm[j]) != spec.a(i, j) {
                return Err(Error::DataInvalid(format!(
                    "permutation breaks the Cartan matrix at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Propagate (c, p) over the whole crystal from one anchor value.
pub fn compute(
    b: &Crystal,
    perm: &[usize],
    anchor: u32,
    anchor_image: u32,
    anchor_pow: i64,
) -> Result<Sigma> {
    check_diagram_automorphism(b.ty, perm)?;
    let n = b.len();
    let mut map: Vec<Option<u32>> = vec![None; n];
    let mut zpow: Vec<i64> = vec![0; n];
    map[anchor as usize] = Some(anchor_image);
    zpow[anchor as usize] = anchor_pow;
    let mut queue = VecDeque::from([anchor]);
    while let Some(x) = queue.pop_front() {
        let cx = map[x as usize].unwrap();
        let px = zpow[x as usize];
        for i in 0..b.ncolors() {
            let dp = (i == 0) as i64 - (perm[i] == 0) as i64;
            let steps = [
                (b.f(i, x), b.f(perm[i], cx), px + dp),
                (b.e(i, x), b.e(perm[i], cx), px - dp),
            ];
            for (y, cy, py) in steps {
                match (y, cy) {
                    (None, None) => {}
                    (Some(y), Some(cy)) => match map[y as usize] {
                        None => {
                            map[y as usize] = Some(cy);
                            zpow[y as usize] = py;
                            queue.push_back(y);
                        }
                        Some(prev) => {
                            if prev != cy || zpow[y as usize] != py {
                                return Err(Error::Conflict(format!(
                                    "two images for element {} via color {i}",
                                    b.label(y)
                                )));
                            }
                        }
                    },
                    _ => {
                        return Err(Error::NoIso(format!(
                            "color {i} arrow mismatch at element {}",
                            b.label(x)
                        )));
                    }
                }
            }
        }
    }
    let map: Option<Vec<u32>> = map.into_iter().collect();
    let map = map.ok_or_else(|| Error::NoIso("anchor does not reach every element".into()))?;
    Ok(Sigma { perm: perm.to_vec(), map, zpow })
}

/// Sigma in the direction that sends the ground column at r+1 to the one
/// at r. The anchor values are forced by the ground-state z-powers.
pub fn rightward(b: &Crystal) -> Result<Sigma> {
    let perm = color_perm(b.ty);
    let (from, to, pow) = match b.ty {
        AffineType::E6 => ("1|6", "6|0", 1),
        AffineType::E7 => ("0|7", "7|0", 2),
        AffineType::E8 => ("vac", "vac", 1),
    };
    let anchor = b
        .find_label(from)
        .ok_or_else(|| Error::DataInvalid(format!("anchor label {from} missing")))?;
    let image = b
        .find_label(to)
        .ok_or_else(|| Error::DataInvalid(format!("anchor label {to} missing")))?;
    compute(b, &perm, anchor, image, pow)
}

/// Sigma in the opposite direction (ground column at r to the one at r+1),
/// used for table comparison in type E7.
pub fn leftward(b: &Crystal) -> Result<Sigma> {
    let perm = color_perm(b.ty);
    let (from, to, pow) = match b.ty {
        AffineType::E6 => ("6|0", "1|6", -1),
        AffineType::E7 => ("7|0", "0|7", -2),
        AffineType::E8 => ("vac", "vac", -1),
    };
    let anchor = b.find_label(from).unwrap();
    let image = b.find_label(to).unwrap();
    compute(b, &perm, anchor, image, pow)
}

/// All rows (label, image label, z-power shift), sorted by label.
pub fn rows(b: &Crystal, s: &Sigma) -> Vec<(String, String, i64)> {
    let mut out: Vec<(String, String, i64)> = (0..b.len() as u32)
        .map(|x| {
            (
                b.label(x).to_string(),
                b.label(s.map[x as usize]).to_string(),
                s.zpow[x as usize],
            )
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect;

    #[test]
    fn perms_are_diagram_automorphisms() {
        for ty in AffineType::ALL {
            check_diagram_automorphism(ty, &color_perm(ty)).unwrap();
        }
    }

    #[test]
    fn e8_sigma_is_the_power_shift() {
        let b = perfect::level_one_crystal(AffineType::E8);
        let s = rightward(&b).unwrap();
        for x in 0..b.len() as u32 {
            assert_eq!(s.map[x as usize], x);
            assert_eq!(s.zpow[x as usize], 1);
        }
    }

    #[test]
    fn leftward_inverts_rightward_e7() {
        let b = perfect::level_one_crystal(AffineType::E7);
        let r = rightward(&b).unwrap();
        let l = leftward(&b).unwrap();
        for x in 0..b.len() as u32 {
            let y = r.map[x as usize];
            assert_eq!(l.map[y as usize], x);
            assert_eq!(l.zpow[y as usize], -r.zpow[x as usize]);
        }
    }
}
