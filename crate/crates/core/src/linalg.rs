//! Sparse exact linear algebra: fraction-free echelon forms over the
//! integers and modular ranks for fast certified lower bounds.
//!
//! Rows are kept as sorted `(column, value)` lists. The exact path stores
//! primitive integer rows (content stripped, positive pivot) and maintains a
//! fully reduced form: every stored row is zero at the other rows' pivot
//! columns, so expressing a row-space vector in the basis is a pivot lookup
//! plus one division by the pivot value.

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, Zero};
use rayon::prelude::*;

pub type SparseIntRow = Vec<(u32, BigInt)>;

#[derive(Clone, Debug)]
pub struct SparseIntMatrix {
    pub ncols: usize,
    pub rows: Vec<SparseIntRow>,
}

impl SparseIntMatrix {
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// Deterministic 31-bit primes for the modular method.
pub const DEFAULT_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 998_244_353];

/// Rank of the matrix modulo `p` by sparse elimination. Rows are processed
/// shortest first to limit fill-in.
pub fn modular_rank(matrix: &SparseIntMatrix, p: u64) -> usize {
    let mut order: Vec<usize> = (0..matrix.rows.len()).collect();
    order.sort_by_key(|&i| matrix.rows[i].len());
    let mut echelon: Vec<(u32, Vec<(u32, u64)>)> = Vec::new(); // (pivot, row)
    for &i in &order {
        let row = &matrix.rows[i];
        let mut cur: Vec<(u32, u64)> = row
            .iter()
            .filter_map(|(c, v)| {
                let r = mod_big(v, p);
                (r != 0).then_some((*c, r))
            })
            .collect();
        while let Some(&(lead, lead_val)) = cur.first() {
            match echelon.binary_search_by_key(&lead, |e| e.0) {
                Err(pos) => {
                    // Normalize so the pivot is 1.
                    let inv = mod_inverse(lead_val, p);
                    for (_, v) in cur.iter_mut() {
                        *v = mulmod(*v, inv, p);
                    }
                    echelon.insert(pos, (lead, cur));
                    break;
                }
                Ok(idx) => {
                    let factor = p - lead_val; // cur += factor * pivot row
                    cur = add_scaled_mod(&cur, &echelon[idx].1, factor, p);
                }
            }
        }
    }
    echelon.len()
}

/// Ranks modulo each prime, in parallel. The maximum is a certified lower
/// bound for the rational rank, equal to it for all but finitely many
/// primes.
pub fn modular_rank_multi(matrix: &SparseIntMatrix, primes: &[u64]) -> Vec<usize> {
    primes
        .par_iter()
        .map(|&p| modular_rank(matrix, p))
        .collect()
}

fn mod_big(v: &BigInt, p: u64) -> u64 {
    let m: BigInt = v % BigInt::from(p);
    let m = if m.sign() == Sign::Minus {
        m + BigInt::from(p)
    } else {
        m
    };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    result
}

fn add_scaled_mod(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&(ca, va)), Some(&(cb, vb))) => {
                if ca < cb {
                    i += 1;
                    (ca, va)
                } else if cb < ca {
                    j += 1;
                    (cb, mulmod(vb, factor, p))
                } else {
                    i += 1;
                    j += 1;
                    (ca, (va + mulmod(vb, factor, p)) % p)
                }
            }
            (Some(&(ca, va)), None) => {
                i += 1;
                (ca, va)
            }
            (None, Some(&(cb, vb))) => {
                j += 1;
                (cb, mulmod(vb, factor, p))
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    out
}

/// Fraction-free fully reduced echelon basis with primitive integer rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// Sorted by pivot column.
    rows: Vec<SparseIntRow>,
    pivots: Vec<u32>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseIntRow] {
        &self.rows
    }

    pub fn pivot_value(&self, i: usize) -> &BigInt {
        let p = self.pivots[i];
        let row = &self.rows[i];
        let idx = row.binary_search_by_key(&p, |e| e.0).expect("pivot entry");
        &row[idx].1
    }

    pub fn entry(&self, i: usize, col: u32) -> BigInt {
        match self.rows[i].binary_search_by_key(&col, |e| e.0) {
            Ok(idx) => self.rows[i][idx].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Forward-reduces a row against the basis; the result has no support on
    /// pivot columns. An empty result means membership in the row space.
    pub fn reduce(&self, row: SparseIntRow) -> SparseIntRow {
        let mut cur = row;
        loop {
            let hit = cur.iter().find_map(|(c, v)| {
                self.pivots
                    .binary_search(c)
                    .ok()
                    .map(|idx| (idx, v.clone()))
            });
            let Some((idx, val)) = hit else {
                return cur;
            };
            let pivot_val = self.pivot_value(idx).clone();
            cur = combine_primitive(&cur, &pivot_val, &self.rows[idx], &-val);
        }
    }

    /// Inserts a row; returns true when the rank grew. Keeps the basis fully
    /// reduced by eliminating the new pivot column from all existing rows.
    pub fn insert(&mut self, row: SparseIntRow) -> bool {
        let mut reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        normalize_primitive(&mut reduced);
        let pivot = reduced[0].0;
        let pivot_val = reduced[0].1.clone();
        let pos = self.pivots.partition_point(|&p| p < pivot);
        for i in 0..self.rows.len() {
            let coeff = match self.rows[i].binary_search_by_key(&pivot, |e| e.0) {
                Ok(idx) => self.rows[i][idx].1.clone(),
                Err(_) => continue,
            };
            self.rows[i] = combine_primitive(&self.rows[i], &pivot_val, &reduced, &-coeff);
        }
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, reduced);
        true
    }
}

/// `(a * a_scale + b * b_scale)`, content-stripped and sign-normalized.
fn combine_primitive(
    a: &SparseIntRow,
    a_scale: &BigInt,
    b: &SparseIntRow,
    b_scale: &BigInt,
) -> SparseIntRow {
    let mut out: SparseIntRow = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va * a_scale));
                    i += 1;
                } else if cb < ca {
                    out.push((*cb, vb * b_scale));
                    j += 1;
                } else {
                    let v = va * a_scale + vb * b_scale;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va * a_scale));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, vb * b_scale));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    normalize_primitive(&mut out);
    out
}

fn normalize_primitive(row: &mut SparseIntRow) {
    if row.is_empty() {
        return;
    }
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
        if content.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &content;
        }
    }
}

/// Exact rank over the rationals by incremental fraction-free elimination.
pub fn exact_rank(matrix: &SparseIntMatrix) -> usize {
    let mut basis = EchelonBasis::new();
    // Short rows first keeps fill-in low.
    let mut order: Vec<usize> = (0..matrix.rows.len()).collect();
    order.sort_by_key(|&i| matrix.rows[i].len());
    for i in order {
        basis.insert(matrix.rows[i].clone());
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: Vec<Vec<i64>>) -> SparseIntMatrix {
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        SparseIntMatrix {
            ncols,
            rows: rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .enumerate()
                        .filter(|(_, v)| *v != 0)
                        .map(|(c, v)| (c as u32, BigInt::from(v)))
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn exact_rank_small() {
        let m = matrix(vec![
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![0, 1, 1],
            vec![1, 3, 4],
        ]);
        assert_eq!(exact_rank(&m), 2);
        for p in DEFAULT_PRIMES {
            assert_eq!(modular_rank(&m, p), 2);
        }
    }

    #[test]
    fn modular_rank_drops_exactly_at_bad_primes() {
        // determinant 7: the rank collapses mod 7 only
        let m = matrix(vec![vec![1, 3], vec![-2, 1]]);
        assert_eq!(exact_rank(&m), 2);
        assert_eq!(modular_rank(&m, 7), 1);
        assert_eq!(modular_rank(&m, 5), 2);
    }

    #[test]
    fn echelon_is_fully_reduced() {
        let mut basis = EchelonBasis::new();
        basis.insert(vec![(0, BigInt::from(2)), (1, BigInt::from(4))]);
        basis.insert(vec![(0, BigInt::from(1)), (2, BigInt::from(3))]);
        assert_eq!(basis.rank(), 2);
        for i in 0..basis.rank() {
            for (j, &p) in basis.pivots().iter().enumerate() {
                if i != j {
                    assert!(basis.entry(i, p).is_zero());
                }
            }
        }
    }

    #[test]
    fn reduce_detects_membership() {
        let mut basis = EchelonBasis::new();
        basis.insert(vec![(0, BigInt::from(1)), (1, BigInt::from(1))]);
        basis.insert(vec![(1, BigInt::from(2))]);
        assert!(basis
            .reduce(vec![(0, BigInt::from(3)), (1, BigInt::from(5))])
            .is_empty());
        assert!(!basis.reduce(vec![(2, BigInt::from(1))]).is_empty());
    }
}
