//! Embedded reference tables: ground-state sequences of the level-1
//! modules, their z-power corrections, the shift automorphism in row form,
//! distinguished element labels, and the drawn ground columns of the Young
//! column models.

use crate::cartan::AffineType;
use crate::{Error, Result};

/// Ground-state data for one level-1 highest weight.
#[derive(Debug, Clone)]
pub struct GroundTable {
    pub ty: AffineType,
    pub lambda_node: usize,
    /// Labels of the ground elements b_0, b_1, ... repeating with this cycle.
    pub base_cycle: &'static [&'static str],
    /// h_cycle[r] = H(b_{r+1} (x) b_r), indexed modulo the cycle length.
    pub h_cycle: &'static [i64],
    /// Starting z-power of the ground Fock sequence.
    pub m0: i64,
    /// First six z-powers m_0..m_5 for cross-checking the recursion.
    pub m_first6: [i64; 6],
}

pub fn ground_tables() -> Vec<GroundTable> {
    use AffineType::*;
    vec![
        GroundTable {
            ty: E6,
            lambda_node: 0,
            base_cycle: &["6|0", "1|6", "0|1"],
            h_cycle: &[2, 2, 0],
            m0: 0,
            m_first6: [0, -1, -2, -1, -2, -3],
        },
        GroundTable {
            ty: E6,
            lambda_node: 1,
            base_cycle: &["0|1", "6|0", "1|6"],
            h_cycle: &[0, 2, 2],
            m0: -2,
            m_first6: [-2, -1, -2, -3, -2, -3],
        },
        GroundTable {
            ty: E6,
            lambda_node: 6,
            base_cycle: &["1|6", "0|1", "6|0"],
            h_cycle: &[2, 0, 2],
            m0: -1,
            m_first6: [-1, -2, -1, -2, -3, -2],
        },
        GroundTable {
            ty: E7,
            lambda_node: 0,
            base_cycle: &["7|0", "0|7"],
            h_cycle: &[3, 0],
            m0: 0,
            m_first6: [0, -2, -1, -3, -2, -4],
        },
        GroundTable {
            ty: E7,
            lambda_node: 7,
            base_cycle: &["0|7", "7|0"],
            h_cycle: &[0, 3],
            m0: -2,
            m_first6: [-2, -1, -3, -2, -4, -3],
        },
        GroundTable {
            ty: E8,
            lambda_node: 0,
            base_cycle: &["vac"],
            h_cycle: &[2],
            m0: 0,
            m_first6: [0, -1, -2, -3, -4, -5],
        },
    ]
}

pub fn ground_table(ty: AffineType, lambda_node: usize) -> Result<GroundTable> {
    ground_tables()
        .into_iter()
        .find(|t| t.ty == ty && t.lambda_node == lambda_node)
        .ok_or_else(|| {
            Error::NodeNotMinuscule(lambda_node)
        })
}

/// Labels of the elements b_lambda (phi-weight Lambda_node), as
/// (node, label) pairs.
pub fn b_lambda_labels(ty: AffineType) -> Vec<(usize, &'static str)> {
    match ty {
        AffineType::E6 => vec![(0, "6|0"), (1, "0|1"), (6, "1|6")],
        AffineType::E7 => vec![(0, "7|0"), (7, "0|7")],
        AffineType::E8 => vec![(0, "vac")],
    }
}

/// Labels of the elements b^lambda (eps-weight Lambda_node).
pub fn b_upper_lambda_labels(ty: AffineType) -> Vec<(usize, &'static str)> {
    match ty {
        AffineType::E6 => vec![(6, "6|0"), (1, "1|6"), (0, "0|1")],
        AffineType::E7 => vec![(7, "7|0"), (0, "0|7")],
        AffineType::E8 => vec![(0, "vac")],
    }
}

/// Reference rows (label, image label, z-power) of the rightward shift
/// automorphism for type E6.
pub fn sigma_table_e6() -> Vec<(&'static str, &'static str, i64)> {
    vec![
        ("0|1", "1|6", 1),
        ("01|3", "16|5", 1),
        ("03|4", "15|4", 1),
        ("04|25", "14|23", 1),
        ("05|26", "12|03", 1),
        ("2|5", "3|2", 1),
        ("06|2", "01|3", 0),
        ("25|46", "23|04", 1),
        ("26|4", "03|4", 0),
        ("4|36", "4|05", 1),
        ("46|35", "04|25", 0),
        ("3|16", "5|06", 1),
        ("5|3", "2|5", 0),
        ("36|15", "05|26", 0),
        ("1|6", "6|0", 1),
        ("35|14", "25|46", 0),
        ("16|5", "06|2", 0),
        ("4|12", "4|36", 0),
        ("15|4", "26|4", 0),
        ("2|01", "3|16", 0),
        ("14|23", "46|35", 0),
        ("12|03", "36|15", 0),
        ("3|2", "5|3", 0),
        ("23|04", "35|14", 0),
        ("4|05", "4|12", 0),
        ("5|06", "2|01", 0),
        ("6|0", "0|1", -1),
    ]
}

/// Reference rows of the leftward shift automorphism for type E7.
pub fn sigma_table_e7() -> Vec<(&'static str, &'static str, i64)> {
    vec![
        ("0|7", "7|0", 1),
        ("07|6", "07|1", 0),
        ("06|5", "17|3", 0),
        ("05|4", "37|4", 0),
        ("04|23", "47|25", 0),
        ("03|12", "57|26", 0),
        ("02|3", "27|5", 0),
        ("1|2", "6|2", 0),
        ("023|14", "257|46", 0),
        ("12|4", "26|4", 0),
        ("04|15", "47|36", 0),
        ("14|35", "46|35", 0),
        ("05|16", "37|16", 0),
        ("3|5", "5|3", 0),
        ("15|36", "36|15", 0),
        ("06|17", "17|06", 0),
        ("35|46", "35|14", 0),
        ("16|37", "16|05", 0),
        ("07|1", "07|6", -1),
        ("4|26", "4|12", 0),
        ("36|47", "15|04", 0),
        ("17|3", "06|5", -1),
        ("2|6", "2|1", 0),
        ("46|257", "14|023", 0),
        ("37|4", "05|4", -1),
        ("26|57", "12|03", 0),
        ("5|27", "3|02", 0),
        ("47|25", "04|23", -1),
        ("25|47", "23|04", 0),
        ("27|5", "02|3", -1),
        ("57|26", "03|12", -1),
        ("4|37", "4|05", 0),
        ("257|46", "023|14", -1),
        ("6|2", "1|2", -1),
        ("3|17", "5|06", 0),
        ("47|36", "04|15", -1),
        ("26|4", "12|4", -1),
        ("1|07", "6|07", 0),
        ("37|16", "05|16", -1),
        ("46|35", "14|35", -1),
        ("17|06", "06|17", -1),
        ("36|15", "15|36", -1),
        ("5|3", "3|5", -1),
        ("16|05", "16|37", -1),
        ("35|14", "35|46", -1),
        ("15|04", "36|47", -1),
        ("4|12", "4|26", -1),
        ("14|023", "46|257", -1),
        ("2|1", "2|6", -1),
        ("3|02", "5|27", -1),
        ("12|03", "26|57", -1),
        ("23|04", "25|47", -1),
        ("4|05", "4|37", -1),
        ("5|06", "3|17", -1),
        ("6|07", "1|07", -1),
        ("7|0", "0|7", -2),
    ]
}

/// A ground column as drawn: all slots below `full_below` are filled, plus
/// the listed (residue, period) slots.
#[derive(Debug, Clone)]
pub struct GroundColumnShape {
    pub ty: AffineType,
    pub lambda_node: usize,
    pub full_below: i64,
    pub extras: &'static [(usize, i64)],
}

pub fn ground_columns() -> Vec<GroundColumnShape> {
    use AffineType::*;
    vec![
        GroundColumnShape {
            ty: E6,
            lambda_node: 0,
            full_below: 24,
            extras: &[(1, 2), (3, 2), (4, 2)],
        },
        GroundColumnShape {
            ty: E6,
            lambda_node: 6,
            full_below: 16,
            extras: &[(5, 1), (6, 1), (8, 1)],
        },
        GroundColumnShape {
            ty: E6,
            lambda_node: 1,
            full_below: 8,
            extras: &[(9, 0), (11, 0), (0, 1)],
        },
        GroundColumnShape {
            ty: E7,
            lambda_node: 0,
            full_below: 0,
            extras: &[(1, 0), (2, 0), (4, 0), (5, 0), (8, 0), (11, 0)],
        },
        GroundColumnShape {
            ty: E7,
            lambda_node: 7,
            full_below: 9,
            extras: &[(9, 0), (10, 0), (12, 0), (15, 0), (16, 0), (0, 1)],
        },
    ]
}

pub fn ground_column(ty: AffineType, lambda_node: usize) -> Option<GroundColumnShape> {
    ground_columns()
        .into_iter()
        .find(|g| g.ty == ty && g.lambda_node == lambda_node)
}

/// All partitions of `k` as weakly decreasing positive parts.
pub fn partitions(k: usize) -> Vec<Vec<i64>> {
    fn go(rem: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k as i64, k as i64, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of 0..=n, by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let pents = [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2];
            let mut any = false;
            for g in pents {
                if g as usize <= m {
                    any = true;
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    total += sign * p[m - g as usize];
                }
            }
            if !any {
                break;
            }
            k += 1;
        }
        p[m] = total;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn sigma_tables_are_permutations() {
        for rows in [sigma_table_e6(), sigma_table_e7()] {
            let src: BTreeSet<&str> = rows.iter().map(|r| r.0).collect();
            let dst: BTreeSet<&str> = rows.iter().map(|r| r.1).collect();
            assert_eq!(src.len(), rows.len());
            assert_eq!(src, dst);
        }
    }

    #[test]
    fn m_powers_satisfy_the_recursion() {
        for t in ground_tables() {
            let mut m = t.m0;
            for r in 0..5 {
                assert_eq!(m, t.m_first6[r]);
                m += 1 - t.h_cycle[r % t.h_cycle.len()];
            }
            assert_eq!(m, t.m_first6[5]);
        }
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_counts(6), vec![1, 1, 2, 3, 5, 7, 11]);
    }
}
