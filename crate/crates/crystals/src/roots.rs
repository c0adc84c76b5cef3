//! Finite root systems of the classical subdiagrams (types E6, E7, E8),
//! generated exactly by reflection closure over the simple roots.

use crate::cartan::AffineType;
use crate::weight::Weight;
use std::collections::HashMap;

/// A root in simple-root coordinates. `coords[j]` is the coefficient of
/// alpha_j for classical nodes j = 1..=n; `coords[0]` is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|&c| -c).collect() }
    }

    /// Compact display such as "a1+2a3-a4".
    pub fn label(&self) -> String {
        let mut out = String::new();
        for (j, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c > 0 && !out.is_empty() {
                out.push('+');
            }
            if c == -1 {
                out.push('-');
            } else if c != 1 {
                out.push_str(&c.to_string());
            }
            out.push_str(&format!("a{j}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// The full set of roots of the finite subsystem, with constant-time
/// membership lookup.
#[derive(Debug)]
pub struct RootSystem {
    pub ty: AffineType,
    /// All roots, sorted by (height, coordinates) so ids are deterministic.
    pub roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// The highest root.
    pub theta: Root,
}

impl RootSystem {
    pub fn new(ty: AffineType) -> RootSystem {
        let spec = ty.spec();
        let n = spec.n;
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut roots: Vec<Root> = Vec::new();
        for j in 1..=n {
            let mut coords = vec![0i64; n + 1];
            coords[j] = 1;
            seen.insert(coords.clone(), roots.len());
            roots.push(Root { coords });
        }
        let mut frontier: Vec<usize> = (0..roots.len()).collect();
        while let Some(k) = frontier.pop() {
            for i in 1..=n {
                let pairing: i64 = (1..=n).map(|j| spec.a(i, j) * roots[k].coords[j]).sum();
                let mut coords = roots[k].coords.clone();
                coords[i] -= pairing;
                if !seen.contains_key(&coords) {
                    seen.insert(coords.clone(), roots.len());
                    roots.push(Root { coords });
                    frontier.push(roots.len() - 1);
                }
            }
        }
        roots.sort_by_key(|r| (r.height(), r.coords.clone()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
        let mut theta_coords = vec![0i64; n + 1];
        for j in 1..=n {
            theta_coords[j] = spec.marks[j];
        }
        let theta = Root { coords: theta_coords };
        assert!(index.contains_key(&theta.coords), "highest root must be a root");
        assert_eq!(
            roots.iter().map(|r| r.height()).max(),
            Some(theta.height()),
            "the marked root must have maximal height"
        );
        RootSystem { ty, roots, index, theta }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn idx(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coords).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coords)
    }

    pub fn simple(&self, j: usize) -> Root {
        let mut coords = vec![0i64; self.ty.rank() + 1];
        coords[j] = 1;
        Root { coords }
    }

    /// Symmetric bilinear form normalized so every root has squared length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let spec = self.ty.spec();
        let n = spec.n;
        let mut sum = 0;
        for i in 1..=n {
            for j in 1..=n {
                sum += a.coords[i] * spec.a(i, j) * b.coords[j];
            }
        }
        sum
    }

    /// Coefficient of the simple root attached to the affine node. Runs over
    /// {-2,-1,0,1,2} and grades the 0-arrow structure of the adjoint crystal.
    pub fn layer(&self, r: &Root) -> i64 {
        r.coords[self.ty.spec().zero_neighbor()]
    }

    /// The classical (level-0) weight of a root.
    pub fn weight(&self, r: &Root) -> Weight {
        let mut w = Weight::zero(self.ty);
        for j in 1..=self.ty.rank() {
            if r.coords[j] != 0 {
                w += Weight::alpha_classical(self.ty, j) * r.coords[j];
            }
        }
        w
    }

    pub fn positive(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    /// Positive roots orthogonal to the highest root.
    pub fn theta_orthogonal_positive(&self) -> Vec<&Root> {
        self.positive().filter(|r| self.inner(r, &self.theta) == 0).collect()
    }

    /// The unique height-maximal positive root orthogonal to the highest
    /// root. Panics if the maximum is not unique.
    pub fn top_theta_orthogonal(&self) -> Root {
        let orth = self.theta_orthogonal_positive();
        let max_h = orth.iter().map(|r| r.height()).max().expect("nonempty");
        let tops: Vec<&&Root> = orth.iter().filter(|r| r.height() == max_h).collect();
        assert_eq!(tops.len(), 1, "height-maximal orthogonal root must be unique");
        (**tops[0]).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::new(AffineType::E6).len(), 72);
        assert_eq!(RootSystem::new(AffineType::E7).len(), 126);
        assert_eq!(RootSystem::new(AffineType::E8).len(), 240);
    }

    #[test]
    fn closed_under_negation_and_symmetric_layers() {
        for ty in AffineType::ALL {
            let rs = RootSystem::new(ty);
            for r in &rs.roots {
                assert!(rs.contains(&r.neg()));
                assert!(rs.layer(r).abs() <= 2);
            }
        }
    }

    #[test]
    fn all_roots_have_length_two() {
        for ty in AffineType::ALL {
            let rs = RootSystem::new(ty);
            for r in &rs.roots {
                assert_eq!(rs.inner(r, r), 2);
            }
        }
    }

    #[test]
    fn theta_is_dominant() {
        for ty in AffineType::ALL {
            let rs = RootSystem::new(ty);
            let w = rs.weight(&rs.theta);
            for i in ty.spec().classical_nodes() {
                assert!(w.pair(i) >= 0);
            }
        }
    }
}
