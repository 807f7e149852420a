//! Integer linear algebra: Smith normal form diagonals.

use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDiagonal {
    /// Nonzero diagonal entries, each dividing the next.
    pub diagonal: Vec<i128>,
}

impl SmithDiagonal {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Entries greater than one in absolute value: the torsion coefficients
    /// of the cokernel.
    pub fn torsion(&self) -> Vec<u64> {
        self.diagonal
            .iter()
            .map(|d| d.unsigned_abs() as u64)
            .filter(|&d| d > 1)
            .collect()
    }
}

/// Smith normal form diagonal of an integer matrix given as rows of length
/// `ncols`. Fails if an intermediate entry overflows `i128`.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, ncols: usize) -> Result<SmithDiagonal> {
    let nrows = m.len();
    if m.iter().any(|r| r.len() != ncols) {
        return invalid("ragged matrix");
    }
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize, i128)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(_, _, b)| v.abs() < b) {
                    best = Some((i, j, v.abs()));
                    if v.abs() == 1 {
                        break;
                    }
                }
            }
            if matches!(best, Some((_, _, 1))) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut done = true;
            // clear column
            for i in t + 1..nrows {
                if m[i][t] != 0 {
                    let q = m[i][t].div_euclid(p);
                    for j in t..ncols {
                        let sub = checked_mul(q, m[t][j])?;
                        m[i][j] = checked_sub(m[i][j], sub)?;
                    }
                    if m[i][t] != 0 {
                        done = false;
                    }
                }
            }
            // clear row
            for j in t + 1..ncols {
                if m[t][j] != 0 {
                    let q = m[t][j].div_euclid(p);
                    for row in m.iter_mut().skip(t) {
                        let sub = checked_mul(q, row[t])?;
                        row[j] = checked_sub(row[j], sub)?;
                    }
                    if m[t][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                // divisibility: if pivot fails to divide some entry, fold that row in
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        for j in t..ncols {
                            m[t][j] = checked_add(m[t][j], m[i][j])?;
                        }
                    }
                    None => break,
                }
            }
            // move smallest nonzero of row/column t into the pivot
            let mut best = (t, t, m[t][t].abs());
            for i in t..nrows {
                let v = m[i][t].abs();
                if v != 0 && (best.2 == 0 || v < best.2) {
                    best = (i, t, v);
                }
            }
            for j in t..ncols {
                let v = m[t][j].abs();
                if v != 0 && (best.2 == 0 || v < best.2) {
                    best = (t, j, v);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Ok(SmithDiagonal { diagonal: diag })
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .map_or_else(|| invalid("integer overflow in Smith normal form"), Ok)
}

fn checked_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b)
        .map_or_else(|| invalid("integer overflow in Smith normal form"), Ok)
}

fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b)
        .map_or_else(|| invalid("integer overflow in Smith normal form"), Ok)
}

/// Rank of an integer matrix over the rationals.
pub fn rank(m: Vec<Vec<i128>>, ncols: usize) -> Result<usize> {
    Ok(smith_diagonal(m, ncols)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_small_matrices() {
        let d = smith_diagonal(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3).unwrap();
        assert_eq!(d.diagonal, vec![2, 6, 12]);
        let d = smith_diagonal(vec![vec![2, 0], vec![0, 3]], 2).unwrap();
        assert_eq!(d.diagonal, vec![1, 6]);
        let d = smith_diagonal(vec![vec![0, 0]], 2).unwrap();
        assert_eq!(d.rank(), 0);
    }
}
