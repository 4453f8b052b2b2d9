//! Smith normal form over arbitrary-precision integers.
//!
//! Pivoting always selects the smallest nonzero entry of the remaining
//! submatrix, so the Euclidean reduction steps shrink fast; no modular
//! shortcuts are taken and torsion is exact.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

fn smallest_nonzero(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows {
        for j in k..m.cols {
            if m[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if m[(i, j)].abs() < m[b].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols {
            let (x, y) = (m[(a, j)].clone(), m[(b, j)].clone());
            m[(a, j)] = y;
            m[(b, j)] = x;
        }
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for i in 0..m.rows {
            let (x, y) = (m[(i, a)].clone(), m[(i, b)].clone());
            m[(i, a)] = y;
            m[(i, b)] = x;
        }
    }
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    // row[target] -= q * row[source]
    for j in 0..m.cols {
        let delta = q * &m[(source, j)];
        m[(target, j)] -= delta;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for i in 0..m.rows {
        let delta = q * &m[(i, source)];
        m[(i, target)] -= delta;
    }
}

/// Nonzero invariant factors d_1 | d_2 | ... of the matrix, all positive.
pub fn smith_invariants(mut m: IntMatrix) -> Vec<BigInt> {
    let mut invariants = Vec::new();
    let mut k = 0usize;
    while k < m.rows && k < m.cols {
        let Some((pi, pj)) = smallest_nonzero(&m, k) else {
            break;
        };
        swap_rows(&mut m, k, pi);
        swap_cols(&mut m, k, pj);
        loop {
            // clear column k with Euclidean steps; a nonzero remainder is a
            // smaller pivot and takes over
            let mut dirty = false;
            for i in k + 1..m.rows {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let q = &m[(i, k)] / &m[(k, k)];
                row_axpy(&mut m, i, k, &q);
                if !m[(i, k)].is_zero() {
                    swap_rows(&mut m, k, i);
                    dirty = true;
                }
            }
            for j in k + 1..m.cols {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let q = &m[(k, j)] / &m[(k, k)];
                col_axpy(&mut m, j, k, &q);
                if !m[(k, j)].is_zero() {
                    swap_cols(&mut m, k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: pivot must divide the remaining submatrix
            let mut offender = None;
            'scan: for i in k + 1..m.rows {
                for j in k + 1..m.cols {
                    if !(&m[(i, j)] % &m[(k, k)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // fold the offending row into row k and keep reducing
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut m, k, i, &minus_one);
                }
                None => break,
            }
        }
        let d = m[(k, k)].abs();
        invariants.push(d);
        k += 1;
    }
    invariants
}

/// Abelian invariants of the group presented by `gens` generators and the
/// given relator exponent matrix (one row per relator): free rank plus the
/// torsion factors (> 1, in divisibility order).
pub fn abelian_invariants(gens: usize, relator_rows: &[Vec<i64>]) -> (usize, Vec<BigInt>) {
    if relator_rows.is_empty() {
        return (gens, Vec::new());
    }
    let m = IntMatrix::from_rows(relator_rows);
    assert_eq!(
        m.cols, gens,
        "relator matrix width must match generator count"
    );
    let inv = smith_invariants(m);
    let rank = gens - inv.len();
    let one = BigInt::from(1);
    let torsion: Vec<BigInt> = inv.into_iter().filter(|d| d > &one).collect();
    (rank, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_invariants(IntMatrix::from_rows(rows))
            .into_iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn single_entry() {
        assert_eq!(inv(&[vec![2]]), vec![2]);
        assert_eq!(inv(&[vec![0]]), Vec::<i64>::new());
        assert_eq!(inv(&[vec![-6]]), vec![6]);
    }

    #[test]
    fn diagonal_gets_divisibility_chain() {
        assert_eq!(inv(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(inv(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn known_small_matrix() {
        // diag(1, 3, 21, 0) up to unimodular equivalence
        let m = &[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ];
        assert_eq!(inv(m), vec![1, 3, 21]);
    }

    #[test]
    fn klein_bottle_relator() {
        // <a, b | a b a b^-1> abelianizes to Z + Z/2
        let (rank, torsion) = abelian_invariants(2, &[vec![2, 0]]);
        assert_eq!(rank, 1);
        assert_eq!(torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn commutator_rows_leave_free_group() {
        let (rank, torsion) = abelian_invariants(3, &[vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(rank, 3);
        assert!(torsion.is_empty());
    }

    #[test]
    fn divisibility_chain_property() {
        let m = &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]];
        let factors = smith_invariants(IntMatrix::from_rows(m));
        for w in factors.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "{:?} not a divisibility chain",
                factors
            );
        }
    }
}
