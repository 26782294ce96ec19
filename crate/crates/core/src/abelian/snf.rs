//! Smith normal form over the integers by elementary row and column
//! operations, always pivoting on an entry of least absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` nonnegative entries `d_1 | d_2 | …`, zeros last.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && *d != &BigInt::from(1))
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = least_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t) / a.get(t, t);
                if !q.is_zero() {
                    row_axpy(&mut a, i, t, &q, t);
                }
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j) / a.get(t, t);
                if !q.is_zero() {
                    col_axpy(&mut a, j, t, &q, t);
                }
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a strictly smaller remainder now sits in row or column t
                let (pi, pj) = least_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // the pivot must divide the remaining block
            let pivot = a.get(t, t).clone();
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => row_axpy(&mut a, t, i, &BigInt::from(-1), t),
                None => break,
            }
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..n).map(|i| a.get(i, i).abs()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SmithForm { diagonal, rank }
}

fn least_entry(
    a: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let unit = abs == BigInt::from(1);
                best = Some((i, j, abs));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn least_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let col = least_entry(a, t..a.rows(), t..t + 1);
    let row = least_entry(a, t..t + 1, t..a.cols());
    match (col, row) {
        (Some(c), Some(r)) => {
            if a.get(c.0, c.1).abs() <= a.get(r.0, r.1).abs() {
                c
            } else {
                r
            }
        }
        (Some(c), None) => c,
        (None, Some(r)) => r,
        (None, None) => unreachable!("cross of a nonzero pivot is nonzero"),
    }
}

/// row[dst] -= q * row[src], touching columns from `from` on.
fn row_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt, from: usize) {
    for j in from..a.cols() {
        let s = a.get(src, j);
        if !s.is_zero() {
            let delta = q * s;
            *a.get_mut(dst, j) -= delta;
        }
    }
}

/// col[dst] -= q * col[src], touching rows from `from` on.
fn col_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt, from: usize) {
    for i in from..a.rows() {
        let s = a.get(i, src);
        if !s.is_zero() {
            let delta = q * s;
            *a.get_mut(i, dst) -= delta;
        }
    }
}

/// Rank of the reduction of `m` modulo the prime `p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| m.get(i, j).mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = inverse_mod(a[rank][c], p);
        for v in a[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul_mod(factor, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}
