//! Young tableaux and standard-tableau enumeration.

use num::BigUint;

use super::partitions::Partition;
use super::SymfunError;
use crate::perm::Permutation;

/// Enumeration is exponential; cap where the backtracking stays instant.
const ENUMERATION_CAP: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungTableau {
    shape: Partition,
    /// Entries 1..=n, row by row.
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Option<Self> {
        let n = shape.size();
        if rows.len() != shape.num_parts() {
            return None;
        }
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i) {
                return None;
            }
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return None;
                }
                seen[e] = true;
            }
        }
        Some(YoungTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(j).copied())
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.shape.part(0)
    }

    pub fn is_standard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for j in 0..self.num_columns() {
            let col = self.column(j);
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        true
    }

    /// Row-major reading word, the key for the lexicographic order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// All permutations preserving each row setwise, acting on `0..n-1`
    /// (tableau entries shifted down by one).
    pub fn row_stabilizer(&self) -> Vec<Permutation> {
        group_product(self.n(), &self.rows)
    }

    /// All permutations preserving each column setwise.
    pub fn column_stabilizer(&self) -> Vec<Permutation> {
        let cols: Vec<Vec<usize>> = (0..self.num_columns())
            .map(|j| self.column(j))
            .collect();
        group_product(self.n(), &cols)
    }
}

/// Direct product of the symmetric groups on the given blocks, embedded in
/// permutations of `0..n-1`.
fn group_product(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut result = vec![Permutation::identity(n)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let mut next = Vec::with_capacity(result.len() * factorial(block.len()));
        for outer in &result {
            for inner in Permutation::all(block.len()) {
                let mut images: Vec<usize> = outer.images().to_vec();
                for (slot, &entry) in block.iter().enumerate() {
                    images[entry - 1] = outer.apply(block[inner.apply(slot)] - 1);
                }
                next.push(Permutation::from_images(images).expect("block permutation"));
            }
        }
        result = next;
    }
    result
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All standard tableaux of the shape, sorted by row-major reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    let n = shape.size();
    let mut column_heights = vec![0usize; shape.part(0)];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_parts()];
    let mut out = Vec::new();
    fill(shape, n, 1, &mut column_heights, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

fn fill(
    shape: &Partition,
    n: usize,
    next: usize,
    column_heights: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<YoungTableau>,
) {
    if next > n {
        out.push(YoungTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..shape.num_parts() {
        let j = rows[i].len();
        // The next cell in row i must exist and extend a taller-or-equal
        // column profile: rows fill left to right, columns top to bottom.
        if j < shape.part(i) && column_heights[j] == i {
            rows[i].push(next);
            column_heights[j] += 1;
            fill(shape, n, next + 1, column_heights, rows, out);
            rows[i].pop();
            column_heights[j] -= 1;
        }
    }
}

/// Exhaustive count of standard tableaux; the independent cross-check for
/// the hook-length dimension formula.
pub fn count_standard_tableaux(shape: &Partition) -> Result<BigUint, SymfunError> {
    let n = shape.size();
    if n > ENUMERATION_CAP {
        return Err(SymfunError::TooLarge {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(BigUint::from(standard_tableaux(shape).len()))
}
