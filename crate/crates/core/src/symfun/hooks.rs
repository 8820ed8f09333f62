//! Hook lengths, irreducible dimensions, and the exact rational bounds
//! derived from them.

use num::{BigInt, BigRational, BigUint, One};

use super::partitions::Partition;

pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let conj = shape.conjugate();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| (len - j) + (conj.part(j) - i) - 1)
                .collect()
        })
        .collect()
}

/// Dimension of the irreducible representation of the given shape:
/// `n! / product of hooks`.
pub fn hook_dimension(shape: &Partition) -> BigUint {
    let n = shape.size();
    let mut numerator = BigUint::one();
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::one();
    for row in hook_lengths(shape) {
        for h in row {
            denominator *= BigUint::from(h);
        }
    }
    debug_assert!((&numerator % &denominator) == BigUint::ZERO);
    numerator / denominator
}

/// The polynomial colength bound for a d-dimensional algebra:
/// `d * (n + 1)^(d^2 + d)`.
pub fn colength_polynomial_bound(dim: usize, n: usize) -> BigUint {
    BigUint::from(dim) * BigUint::from(n + 1).pow((dim * dim + dim) as u32)
}

#[derive(Clone, Debug)]
pub struct RectangleBoundCheck {
    pub m: usize,
    pub dimension: BigUint,
    /// `4^(8m) / (8m)^5` as an exact rational.
    pub lower_bound: BigRational,
    pub holds: bool,
}

/// Exact check that the four-row rectangle `(2m, 2m, 2m, 2m)` has
/// irreducible dimension at least `4^n / n^5` with `n = 8m`.
pub fn rectangle_bound_check(m: usize) -> RectangleBoundCheck {
    assert!(m >= 1, "block count must be positive");
    let shape = Partition::rectangle(2 * m, 4);
    let dimension = hook_dimension(&shape);
    let n = 8 * m;
    let lower_bound = BigRational::new(
        BigInt::from(4u32).pow(n as u32),
        BigInt::from(n).pow(5),
    );
    let holds = BigRational::from_integer(BigInt::from(dimension.clone())) >= lower_bound;
    RectangleBoundCheck {
        m,
        dimension,
        lower_bound,
        holds,
    }
}
