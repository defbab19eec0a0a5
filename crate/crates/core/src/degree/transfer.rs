//! The 5x5 matrix carrying a vertex's class row from level `n` to `n + 1`
//! when the vertex sits in copy 0, and the column swaps selecting the
//! sub-copy.

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ClassRow;
use crate::exact::{int, pow_q, RationalJson};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub n: u32,
    pub entries: [[BigRational; 5]; 5],
}

/// `C_n`, entry by entry, with `a = 3^n`, `b = 5^n`, `d = 5^(n+1) - 3^(n+1)`.
pub fn transfer_matrix(n: u32) -> TransferMatrix {
    let k = n as i64;
    let a = pow_q(3, k);
    let b = pow_q(5, k);
    let d = int(5) * &b - int(3) * &a;
    let (a2, b2) = (&a * &a, &b * &b);
    let two_bd = int(2) * &b * &d;
    let bd2 = &b * &d * &d;
    let bma = &b - &a;
    let z = BigRational::zero;

    let top_mixed = (int(3) * &b2 - &a2) / (&b * &d);
    let diag = (&a2 - int(4) * &a * &b + int(3) * &b2) / &two_bd;
    let off = &bma * &bma / &two_bd;
    let to_r = (&b2 - &a2) / &two_bd;
    let to_l = (int(7) * &b2 * &b + &a2 * &b + &a2 * &a - int(9) * &a * &b2) / (int(2) * &bd2);
    let edge = &bma / (int(6) * &b);

    let entries = [
        [
            (int(2) * &b + &a) / (int(3) * &b),
            top_mixed.clone(),
            top_mixed,
            (&b + &a) * (&b + &a) / &two_bd,
            (int(6) * &b2 - int(2) * &a2) / (&d * &d),
        ],
        [
            edge.clone(),
            diag.clone(),
            off.clone(),
            to_r.clone(),
            to_l.clone(),
        ],
        [edge, off, diag, to_r, to_l],
        [
            z(),
            z(),
            z(),
            (int(2) * &b2 - &a2 - &a * &b) / (&b * &d),
            int(2) * &bma * (int(3) * &b2 - &a2) / &bd2,
        ],
        [
            z(),
            z(),
            z(),
            int(3) * &bma * &bma / &two_bd,
            int(3) * (int(2) * &b - &a) * &bma * &bma / &bd2,
        ],
    ];
    TransferMatrix { n, entries }
}

impl TransferMatrix {
    /// Row vector times matrix.
    pub fn apply_row(&self, row: &ClassRow) -> ClassRow {
        std::array::from_fn(|c| {
            row.iter()
                .zip(&self.entries)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, r)| x * &r[c])
                .sum()
        })
    }

    pub fn column_sums(&self) -> [BigRational; 5] {
        std::array::from_fn(|c| self.entries.iter().map(|r| r[c].clone()).sum())
    }
}

impl Serialize for TransferMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<RationalJson>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(RationalJson).collect())
            .collect();
        let mut st = serializer.serialize_struct("TransferMatrix", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

/// Column permutations `E_0` (identity), `E_1` (swap T and R) and `E_2`
/// (swap P and R). `E_k` relabels the classes under the peg swap `0 <-> k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassPermutation {
    E0,
    E1,
    E2,
}

impl ClassPermutation {
    pub fn for_subcopy(k: u8) -> Self {
        match k {
            0 => ClassPermutation::E0,
            1 => ClassPermutation::E1,
            2 => ClassPermutation::E2,
            _ => panic!("sub-copy index out of range"),
        }
    }

    /// `perm[c]` is the column of the input row landing in column `c`.
    fn perm(self) -> [usize; 5] {
        match self {
            ClassPermutation::E0 => [0, 1, 2, 3, 4],
            ClassPermutation::E1 => [0, 1, 3, 2, 4],
            ClassPermutation::E2 => [0, 3, 2, 1, 4],
        }
    }

    pub fn matrix(self) -> [[u8; 5]; 5] {
        let mut m = [[0; 5]; 5];
        for (c, &r) in self.perm().iter().enumerate() {
            m[r][c] = 1;
        }
        m
    }

    pub fn apply_row(self, row: &ClassRow) -> ClassRow {
        let p = self.perm();
        std::array::from_fn(|c| row[p[c]].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::{One, Signed};

    #[test]
    fn printed_entries_at_level_one() {
        let c = transfer_matrix(1);
        assert_eq!(c.entries[0][0], rat(13, 15));
        assert_eq!(c.entries[3][0], rat(0, 1));
        assert_eq!(c.entries[1][0], rat(1, 15));
        // (3*25 - 9) / (5 * 16)
        assert_eq!(c.entries[0][1], rat(66, 80));
    }

    #[test]
    fn zero_block_and_positive_block() {
        for n in 1..=12 {
            let c = transfer_matrix(n);
            for r in 3..5 {
                for col in 0..3 {
                    assert!(c.entries[r][col].is_zero());
                }
            }
            for r in 0..3 {
                for col in 0..3 {
                    assert!(c.entries[r][col].is_positive(), "n={n} ({r},{col})");
                }
            }
        }
    }

    #[test]
    fn columns_are_stochastic() {
        for n in 1..=15 {
            for s in transfer_matrix(n).column_sums() {
                assert!(s.is_one(), "level {n}");
            }
        }
    }

    #[test]
    fn elementary_matrices_as_printed() {
        let e1 = [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1],
        ];
        let e2 = [
            [1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1],
        ];
        assert_eq!(ClassPermutation::E1.matrix(), e1);
        assert_eq!(ClassPermutation::E2.matrix(), e2);
        let id = ClassPermutation::E0.matrix();
        for (i, row) in id.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, (i == j) as u8);
            }
        }
    }

    #[test]
    fn apply_row_is_row_times_matrix() {
        let row = [rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11)];
        for e in [
            ClassPermutation::E0,
            ClassPermutation::E1,
            ClassPermutation::E2,
        ] {
            let m = e.matrix();
            let direct: ClassRow =
                std::array::from_fn(|c| (0..5).map(|r| &row[r] * rat(m[r][c] as i64, 1)).sum());
            assert_eq!(e.apply_row(&row), direct);
        }
    }
}
