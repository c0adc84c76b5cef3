//! Affine Cartan data for the simply-laced exceptional types E6(1), E7(1)
//! and E8(1): Dynkin diagrams, Cartan matrices, marks and the level-1
//! dominant nodes.

use crate::{Error, Result};
use std::sync::OnceLock;

/// The three affine types handled by this crate.
#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    serde::Serialize,
    serde::Deserialize,
)]
pub enum AffineType {
    E6,
    E7,
    E8,
}

impl AffineType {
    pub const ALL: [AffineType; 3] = [AffineType::E6, AffineType::E7, AffineType::E8];

    /// Classical rank n; the affine diagram has nodes 0..=n.
    pub fn rank(self) -> usize {
        match self {
            AffineType::E6 => 6,
            AffineType::E7 => 7,
            AffineType::E8 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AffineType::E6 => "E6",
            AffineType::E7 => "E7",
            AffineType::E8 => "E8",
        }
    }

    /// Parse "E6"/"e6"/"E7"/... into a type tag.
    pub fn parse(s: &str) -> Result<AffineType> {
        match s.to_ascii_uppercase().as_str() {
            "E6" => Ok(AffineType::E6),
            "E7" => Ok(AffineType::E7),
            "E8" => Ok(AffineType::E8),
            _ => Err(Error::DataInvalid(format!("unknown affine type {s:?}"))),
        }
    }

    /// The shared static Cartan data for this type.
    pub fn spec(self) -> &'static CartanSpec {
        static SPECS: OnceLock<[CartanSpec; 3]> = OnceLock::new();
        let specs = SPECS.get_or_init(|| {
            [
                CartanSpec::new(
                    AffineType::E6,
                    &[(0, 2), (2, 4), (1, 3), (3, 4), (4, 5), (5, 6)],
                    &[1, 1, 2, 2, 3, 2, 1],
                ),
                CartanSpec::new(
                    AffineType::E7,
                    &[(0, 1), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
                    &[1, 2, 2, 3, 4, 3, 2, 1],
                ),
                CartanSpec::new(
                    AffineType::E8,
                    &[(0, 8), (8, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 1), (2, 4)],
                    &[1, 2, 3, 4, 6, 5, 4, 3, 2],
                ),
            ]
        });
        match self {
            AffineType::E6 => &specs[0],
            AffineType::E7 => &specs[1],
            AffineType::E8 => &specs[2],
        }
    }
}

/// Affine Cartan matrix plus the diagram combinatorics derived from it.
///
/// Nodes are 0..=n with 0 the affine node; the classical subdiagram is on
/// nodes 1..=n. All three types are simply laced, so marks and comarks
/// coincide.
#[derive(Debug, Clone)]
pub struct CartanSpec {
    pub ty: AffineType,
    /// Classical rank.
    pub n: usize,
    /// Undirected diagram edges.
    pub edges: Vec<(usize, usize)>,
    /// Cartan matrix entries a(i, j), indexed by node.
    pub cartan: Vec<Vec<i64>>,
    /// Marks a_i: the highest root is sum a_i alpha_i over classical i, and
    /// delta = sum a_i alpha_i over all i with a_0 = 1.
    pub marks: Vec<i64>,
    /// Nodes i whose fundamental weight has level 1.
    pub minuscule: Vec<usize>,
}

impl CartanSpec {
    fn new(ty: AffineType, edges: &[(usize, usize)], marks: &[i64]) -> CartanSpec {
        let n = ty.rank();
        let mut cartan = vec![vec![0i64; n + 1]; n + 1];
        for i in 0..=n {
            cartan[i][i] = 2;
        }
        for &(i, j) in edges {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        let minuscule = (0..=n).filter(|&i| marks[i] == 1).collect();
        let spec = CartanSpec {
            ty,
            n,
            edges: edges.to_vec(),
            cartan,
            marks: marks.to_vec(),
            minuscule,
        };
        spec.validate().expect("built-in Cartan data must be valid");
        spec
    }

    /// Cartan matrix entry <alpha_j, h_i>.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// All node indices 0..=n.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        0..=self.n
    }

    /// Classical node indices 1..=n.
    pub fn classical_nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Diagram neighbors of node i.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.nodes().filter(|&j| j != i && self.cartan[i][j] == -1).collect()
    }

    /// The unique classical node attached to the affine node 0.
    pub fn zero_neighbor(&self) -> usize {
        let nb = self.neighbors(0);
        debug_assert_eq!(nb.len(), 1);
        nb[0]
    }

    /// Check that the diagram is connected, the marks are the kernel of the
    /// Cartan matrix with a_0 = 1, and the minuscule nodes are exactly the
    /// mark-1 nodes.
    pub fn validate(&self) -> Result<()> {
        if self.marks.len() != self.n + 1 || self.marks[0] != 1 {
            return Err(Error::DataInvalid(format!(
                "{}: marks must have length n+1 with a_0 = 1",
                self.ty.name()
            )));
        }
        for i in 0..=self.n {
            let dot: i64 = (0..=self.n).map(|j| self.cartan[i][j] * self.marks[j]).sum();
            if dot != 0 {
                return Err(Error::DataInvalid(format!(
                    "{}: marks are not a null vector of the Cartan matrix at row {i}",
                    self.ty.name()
                )));
            }
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::DataInvalid(format!(
                "{}: Dynkin diagram is not connected",
                self.ty.name()
            )));
        }
        Ok(())
    }
}

/// Display color assigned to each node index in diagram drawings.
pub fn color_name(i: usize) -> &'static str {
    match i {
        0 => "black",
        1 => "red",
        2 => "yellow",
        3 => "green",
        4 => "purple",
        5 => "blue",
        6 => "orange",
        7 => "pink",
        8 => "brown",
        _ => "gray",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_validate() {
        for ty in AffineType::ALL {
            let spec = ty.spec();
            assert_eq!(spec.ty, ty);
            spec.validate().unwrap();
        }
    }

    #[test]
    fn minuscule_nodes() {
        assert_eq!(AffineType::E6.spec().minuscule, vec![0, 1, 6]);
        assert_eq!(AffineType::E7.spec().minuscule, vec![0, 7]);
        assert_eq!(AffineType::E8.spec().minuscule, vec![0]);
    }

    #[test]
    fn zero_neighbor() {
        assert_eq!(AffineType::E6.spec().zero_neighbor(), 2);
        assert_eq!(AffineType::E7.spec().zero_neighbor(), 1);
        assert_eq!(AffineType::E8.spec().zero_neighbor(), 8);
    }
}
