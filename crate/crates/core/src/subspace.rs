//! Subspaces in canonical reduced row-echelon form.
//!
//! The echelon form is the equality test for spans: two computations of the
//! same span produce identical rows, so `PartialEq` on rows is span equality.

use num::{One, Zero};

use crate::algebra::Element;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Reduced echelon rows: pivots strictly increasing, pivot entries 1,
    /// pivot columns zero elsewhere. No zero rows.
    rows: Vec<Element>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_spanning(ambient: usize, vectors: Vec<Element>) -> Self {
        let mut space = Subspace::empty(ambient);
        for v in vectors {
            space.insert(v);
        }
        space
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero_space(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Element] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon rows; the remainder is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &Element) -> Element {
        assert_eq!(v.dim(), self.ambient, "ambient dimension mismatch");
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.coord(p).clone();
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Adds a vector to the span; returns true when the dimension grew.
    pub fn insert(&mut self, v: Element) -> bool {
        let mut v = self.reduce(&v);
        let Some(pivot) = (0..self.ambient).find(|&i| !v.coord(i).is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / v.coord(pivot).clone();
        v = v.scale(&inv);
        // Back-eliminate the new pivot from existing rows.
        for row in &mut self.rows {
            let c = row.coord(pivot).clone();
            if !c.is_zero() {
                row.add_scaled(&v, &-c);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }

    /// Coordinates of `v` in the echelon basis, `None` when outside the span.
    pub fn coordinates_of(&self, v: &Element) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.coord(p).clone()).collect())
    }
}

/// Solves `target = sum of coefficients * basis[i]` for an arbitrary (not
/// necessarily echelon) spanning list. The elimination is performed once at
/// construction, so solving many targets against the same basis is cheap.
pub struct BasisSolver {
    rows: Vec<(Element, Vec<Scalar>)>,
    pivots: Vec<(usize, usize)>, // (row index, pivot column)
    basis_len: usize,
}

impl BasisSolver {
    pub fn new(basis: &[Element]) -> Self {
        let mut rows: Vec<(Element, Vec<Scalar>)> = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            let mut rhs = vec![Scalar::zero(); basis.len()];
            rhs[i] = Scalar::one();
            rows.push((b.clone(), rhs));
        }
        let ambient = basis.first().map(Element::dim).unwrap_or(0);
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for r in 0..rows.len() {
            // Reduce row r against prior pivots (pivot rows precede r).
            for &(pr, pc) in &pivots {
                let c = rows[r].0.coord(pc).clone();
                if !c.is_zero() {
                    let (head, tail) = rows.split_at_mut(r);
                    let src = &head[pr];
                    let dst = &mut tail[0];
                    dst.0.add_scaled(&src.0, &-c.clone());
                    for (a, b) in dst.1.iter_mut().zip(&src.1) {
                        *a += -&c * b;
                    }
                }
            }
            let Some(pc) = (0..ambient).find(|&i| !rows[r].0.coord(i).is_zero()) else {
                continue;
            };
            let inv = Scalar::one() / rows[r].0.coord(pc).clone();
            rows[r].0 = rows[r].0.scale(&inv);
            for a in rows[r].1.iter_mut() {
                *a *= &inv;
            }
            pivots.push((r, pc));
        }
        BasisSolver {
            rows,
            pivots,
            basis_len: basis.len(),
        }
    }

    pub fn solve(&self, target: &Element) -> Option<Vec<Scalar>> {
        let mut v = target.clone();
        let mut v_rhs = vec![Scalar::zero(); self.basis_len];
        for &(pr, pc) in &self.pivots {
            let c = v.coord(pc).clone();
            if !c.is_zero() {
                v.add_scaled(&self.rows[pr].0, &-c.clone());
                for (a, b) in v_rhs.iter_mut().zip(&self.rows[pr].1) {
                    *a += -&c * b;
                }
            }
        }
        v.is_zero().then(|| v_rhs.iter().map(|c| -c).collect())
    }
}

/// One-shot convenience over [`BasisSolver`].
pub fn express_in_basis(basis: &[Element], target: &Element) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    BasisSolver::new(basis).solve(target)
}
