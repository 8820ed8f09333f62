//! Integer partitions with a fixed reverse-lexicographic enumeration order.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Parts must be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rectangle(part: usize, rows: usize) -> Self {
        Partition(vec![part; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (0..cols)
            .map(|j| self.0.iter().filter(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Cells as 0-based (row, column) pairs.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1, ..., 1)` last. `partitions(0)` is the single empty partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}
