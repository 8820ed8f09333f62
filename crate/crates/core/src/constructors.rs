//! Constructors for the concrete algebras under study: upper-triangular and
//! full matrix algebras, their involutions, the doubled graded algebra of
//! 2x2 blocks, and the solvable superalgebra family built from them.

use std::collections::BTreeMap;

use num::{One, Zero};
use thiserror::Error;

use crate::algebra::{super_bracket_algebra, Algebra, AlgebraError, Element, Parity};
use crate::scalar::{scalar, Scalar};
use crate::subspace::{BasisSolver, Subspace};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("matrix size must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },
    #[error("involution is not an anti-automorphism of order 2")]
    BadInvolution,
    #[error("bracket of basis pair ({0}, {1}) leaves the subspace; construction bug")]
    ClosureFailure(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixKind {
    UpperTriangular,
    Full,
}

/// A matrix algebra together with its unit-position bookkeeping.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub algebra: Algebra,
    pub t: usize,
    pub kind: MatrixKind,
    /// 1-based matrix positions of the basis units, in basis order.
    pub positions: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl MatrixAlgebra {
    pub fn unit_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index.get(&(i, j)).copied()
    }
}

fn matrix_algebra(t: usize, kind: MatrixKind) -> Result<MatrixAlgebra, ConstructError> {
    if t < 1 {
        return Err(ConstructError::SizeTooSmall { min: 1, got: t });
    }
    let mut positions = Vec::new();
    for i in 1..=t {
        for j in 1..=t {
            if kind == MatrixKind::Full || i <= j {
                positions.push((i, j));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = positions
        .iter()
        .enumerate()
        .map(|(n, &p)| (p, n))
        .collect();
    let names = positions.iter().map(|&(i, j)| format!("e{i}_{j}")).collect();
    let mut entries = Vec::new();
    // e_ij e_kl = delta_jk e_il
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(k, l)) in positions.iter().enumerate() {
            if j == k {
                if let Some(c) = index.get(&(i, l)) {
                    entries.push((a, b, *c, Scalar::one()));
                }
            }
        }
    }
    let algebra = Algebra::new(positions.len(), names, entries, None)?;
    Ok(MatrixAlgebra {
        algebra,
        t,
        kind,
        positions,
        index,
    })
}

/// The associative algebra of t x t upper-triangular matrices, basis the
/// matrix units `e_ij` with `i <= j`.
pub fn ut_algebra(t: usize) -> Result<MatrixAlgebra, ConstructError> {
    matrix_algebra(t, MatrixKind::UpperTriangular)
}

/// The full t x t matrix algebra.
pub fn full_matrix_algebra(t: usize) -> Result<MatrixAlgebra, ConstructError> {
    matrix_algebra(t, MatrixKind::Full)
}

/// A linear involution given by the images of the basis vectors.
#[derive(Clone, Debug)]
pub struct Involution {
    images: Vec<Element>,
}

impl Involution {
    pub fn from_basis_images(images: Vec<Element>) -> Self {
        Involution { images }
    }

    pub fn image_of_basis(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::zero(self.images[0].dim());
        for (i, c) in e.nonzero_support() {
            out.add_scaled(&self.images[i], c);
        }
        out
    }

    /// Checks `(x*)* = x` and `(xy)* = y* x*` on all basis pairs.
    pub fn verify(&self, algebra: &Algebra) -> Result<(), ConstructError> {
        for i in 0..algebra.dim() {
            if self.apply(&self.images[i]) != algebra.basis_element(i) {
                return Err(ConstructError::BadInvolution);
            }
        }
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                let lhs = self.apply(&algebra.multiply_basis(i, j));
                let rhs = algebra
                    .multiply(&self.images[j], &self.images[i])
                    .expect("same algebra");
                if lhs != rhs {
                    return Err(ConstructError::BadInvolution);
                }
            }
        }
        Ok(())
    }
}

/// Reflection across the secondary diagonal: `e_ij -> e_{t+1-j, t+1-i}`.
pub fn secondary_diagonal_involution(r: &MatrixAlgebra) -> Result<Involution, ConstructError> {
    let t = r.t;
    let mut images = Vec::with_capacity(r.algebra.dim());
    for &(i, j) in &r.positions {
        let target = (t + 1 - j, t + 1 - i);
        let idx = r
            .unit_index(target.0, target.1)
            .expect("reflection keeps upper-triangular positions upper-triangular");
        images.push(r.algebra.basis_element(idx));
    }
    let inv = Involution { images };
    inv.verify(&r.algebra)?;
    Ok(inv)
}

/// Matrix transpose as an involution (full matrix algebra).
pub fn transpose_involution(r: &MatrixAlgebra) -> Result<Involution, ConstructError> {
    let mut images = Vec::with_capacity(r.algebra.dim());
    for &(i, j) in &r.positions {
        let idx = r
            .unit_index(j, i)
            .ok_or(ConstructError::BadInvolution)?;
        images.push(r.algebra.basis_element(idx));
    }
    let inv = Involution { images };
    inv.verify(&r.algebra)?;
    Ok(inv)
}

/// Symmetric (`x* = x`) and skew (`x* = -x`) parts of `R`; their dimensions
/// add up to `dim R` in characteristic zero.
pub fn split_symmetric_skew(r: &Algebra, inv: &Involution) -> (Subspace, Subspace) {
    let mut sym = Vec::new();
    let mut skew = Vec::new();
    for i in 0..r.dim() {
        let e = r.basis_element(i);
        let star = inv.apply(&e);
        sym.push(e.add(&star));
        skew.push(e.sub(&star));
    }
    (
        Subspace::from_spanning(r.dim(), sym),
        Subspace::from_spanning(r.dim(), skew),
    )
}

/// Block position inside the doubled algebra of 2x2 matrices over `R`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

const BLOCKS: [Block; 4] = [
    Block::UpperLeft,
    Block::UpperRight,
    Block::LowerLeft,
    Block::LowerRight,
];

impl Block {
    fn row_col(self) -> (usize, usize) {
        match self {
            Block::UpperLeft => (0, 0),
            Block::UpperRight => (0, 1),
            Block::LowerLeft => (1, 0),
            Block::LowerRight => (1, 1),
        }
    }

    fn parity(self) -> Parity {
        let (r, c) = self.row_col();
        if r == c {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn ordinal(self) -> usize {
        BLOCKS.iter().position(|&b| b == self).unwrap()
    }
}

/// The graded associative algebra of 2x2 matrices over `R`: diagonal blocks
/// even, off-diagonal blocks odd.
#[derive(Clone, Debug)]
pub struct DoubledAlgebra {
    pub algebra: Algebra,
    pub r_dim: usize,
    pub involution: Involution,
}

impl DoubledAlgebra {
    /// Basis index of `r`-basis vector `u` placed in `block`.
    pub fn block_index(&self, block: Block, u: usize) -> usize {
        block.ordinal() * self.r_dim + u
    }

    /// Embeds an `R` element into the chosen block.
    pub fn embed(&self, block: Block, u: &Element) -> Element {
        let mut out = Element::zero(self.algebra.dim());
        for (i, c) in u.nonzero_support() {
            out.add_scaled(
                &self.algebra.basis_element(self.block_index(block, i)),
                c,
            );
        }
        out
    }
}

/// Builds the doubled graded algebra over `r`. The involution is verified
/// here and carried along for the superalgebra constructions.
pub fn build_doubled(r: &Algebra, inv: &Involution) -> Result<DoubledAlgebra, ConstructError> {
    r.check_associative()?;
    inv.verify(r)?;
    let d = r.dim();
    let mut entries = Vec::new();
    for b1 in BLOCKS {
        let (r1, c1) = b1.row_col();
        for b2 in BLOCKS {
            let (r2, c2) = b2.row_col();
            if c1 != r2 {
                continue;
            }
            let out_block = BLOCKS
                .iter()
                .copied()
                .find(|b| b.row_col() == (r1, c2))
                .unwrap();
            for (u, v, k, c) in r.table_entries() {
                entries.push((
                    b1.ordinal() * d + u,
                    b2.ordinal() * d + v,
                    out_block.ordinal() * d + k,
                    c.clone(),
                ));
            }
        }
    }
    let mut names = Vec::with_capacity(4 * d);
    for b in BLOCKS {
        let (r0, c0) = b.row_col();
        for n in r.basis_names() {
            names.push(format!("q{}{}:{}", r0 + 1, c0 + 1, n));
        }
    }
    let parity = BLOCKS
        .iter()
        .flat_map(|b| std::iter::repeat_n(b.parity(), d))
        .collect();
    let algebra = Algebra::new(4 * d, names, entries, Some(parity))?;
    Ok(DoubledAlgebra {
        algebra,
        r_dim: d,
        involution: inv.clone(),
    })
}

/// A superalgebra built as a bracket-closed subspace of an ambient doubled
/// algebra, remembering the embedding for cross-checks.
#[derive(Clone, Debug)]
pub struct SuperalgebraConstruction {
    pub algebra: Algebra,
    pub ambient: DoubledAlgebra,
    /// Ambient bracket algebra of the doubled algebra.
    pub ambient_bracket: Algebra,
    /// Images of the constructed basis inside the ambient algebra.
    pub basis_in_ambient: Vec<Element>,
}

fn superalgebra_from_subspace(
    doubled: DoubledAlgebra,
    basis: Vec<Element>,
    parity: Vec<Parity>,
    names: Vec<String>,
) -> Result<SuperalgebraConstruction, ConstructError> {
    let bracket = super_bracket_algebra(&doubled.algebra)?;
    let dim = basis.len();
    let solver = BasisSolver::new(&basis);
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let prod = bracket.multiply(&basis[i], &basis[j]).expect("ambient");
            let coords = solver
                .solve(&prod)
                .ok_or(ConstructError::ClosureFailure(i, j))?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let algebra = Algebra::new(dim, names, entries, Some(parity))?;
    Ok(SuperalgebraConstruction {
        algebra,
        ambient: doubled,
        ambient_bracket: bracket,
        basis_in_ambient: basis,
    })
}

/// The solvable superalgebra over upper-triangular t x t matrices: even part
/// the pairs `diag(u, -u*)`, odd part the symmetric elements in the upper
/// block and skew elements in the lower block.
pub fn build_s(t: usize) -> Result<SuperalgebraConstruction, ConstructError> {
    if t < 2 {
        return Err(ConstructError::SizeTooSmall { min: 2, got: t });
    }
    let r = ut_algebra(t)?;
    let inv = secondary_diagonal_involution(&r)?;
    build_super_from(&r, &inv, None)
}

/// The analogue over the full matrix algebra with transpose involution and
/// traceless even part. Construction only; closure and axioms are checkable,
/// no identity computations are implied.
pub fn build_p_tilde(t: usize) -> Result<SuperalgebraConstruction, ConstructError> {
    if t < 3 {
        return Err(ConstructError::SizeTooSmall { min: 3, got: t });
    }
    let r = full_matrix_algebra(t)?;
    let inv = transpose_involution(&r)?;
    let traceless = traceless_subspace(&r);
    build_super_from(&r, &inv, Some(traceless))
}

fn traceless_subspace(r: &MatrixAlgebra) -> Subspace {
    let mut vectors = Vec::new();
    for (n, &(i, j)) in r.positions.iter().enumerate() {
        if i != j {
            vectors.push(r.algebra.basis_element(n));
        }
    }
    for i in 1..r.t {
        let a = r.unit_index(i, i).unwrap();
        let b = r.unit_index(i + 1, i + 1).unwrap();
        vectors.push(
            r.algebra
                .basis_element(a)
                .sub(&r.algebra.basis_element(b)),
        );
    }
    Subspace::from_spanning(r.algebra.dim(), vectors)
}

fn build_super_from(
    r: &MatrixAlgebra,
    inv: &Involution,
    even_restriction: Option<Subspace>,
) -> Result<SuperalgebraConstruction, ConstructError> {
    let doubled = build_doubled(&r.algebra, inv)?;
    let (sym, skew) = split_symmetric_skew(&r.algebra, inv);
    let mut basis = Vec::new();
    let mut parity = Vec::new();
    let mut names = Vec::new();
    let even_rows: Vec<Element> = match &even_restriction {
        None => (0..r.algebra.dim())
            .map(|i| r.algebra.basis_element(i))
            .collect(),
        Some(s) => s.rows().to_vec(),
    };
    for (n, u) in even_rows.iter().enumerate() {
        let star = inv.apply(u);
        let mut e = doubled.embed(Block::UpperLeft, u);
        e.add_assign(&doubled.embed(Block::LowerRight, &star.neg()));
        basis.push(e);
        parity.push(Parity::Even);
        names.push(format!("h{n}"));
    }
    for (n, y) in sym.rows().iter().enumerate() {
        basis.push(doubled.embed(Block::UpperRight, y));
        parity.push(Parity::Odd);
        names.push(format!("p{n}"));
    }
    for (n, z) in skew.rows().iter().enumerate() {
        basis.push(doubled.embed(Block::LowerLeft, z));
        parity.push(Parity::Odd);
        names.push(format!("k{n}"));
    }
    superalgebra_from_subspace(doubled, basis, parity, names)
}

/// The canonical 6-dimensional solvable superalgebra with basis
/// `a, b, c, d, x, y`; `a, d, x` even and `b, c, y` odd. The table is
/// hand-coded independently of [`build_s`] so the two constructions
/// cross-check each other.
pub fn s2_canonical() -> Algebra {
    let names = ["a", "b", "c", "d", "x", "y"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let parity = vec![
        Parity::Even,
        Parity::Odd,
        Parity::Odd,
        Parity::Even,
        Parity::Even,
        Parity::Odd,
    ];
    let (a, b, c, d, x, y) = (0, 1, 2, 3, 4, 5);
    let entries = vec![
        // bc = cb = a
        (b, c, a, scalar(1)),
        (c, b, a, scalar(1)),
        // bd = -db = -2b
        (b, d, b, scalar(-2)),
        (d, b, b, scalar(2)),
        // cd = -dc = 2c
        (c, d, c, scalar(2)),
        (d, c, c, scalar(-2)),
        // xa = -ax = -2x
        (x, a, x, scalar(-2)),
        (a, x, x, scalar(2)),
        // xb = -bx = 2y
        (x, b, y, scalar(2)),
        (b, x, y, scalar(-2)),
        // ya = -ay = -2y
        (y, a, y, scalar(-2)),
        (a, y, y, scalar(2)),
        // yc = cy = -x
        (y, c, x, scalar(-1)),
        (c, y, x, scalar(-1)),
        // yd = -dy = -2y
        (y, d, y, scalar(-2)),
        (d, y, y, scalar(2)),
    ];
    Algebra::new(6, names, entries, Some(parity)).expect("canonical table is valid")
}

/// The matrices realizing the canonical basis inside the doubled algebra
/// over upper-triangular 2x2 matrices, used to match [`s2_canonical`]
/// against [`build_s`]`(2)`.
pub fn s2_canonical_ambient(doubled: &DoubledAlgebra, r: &MatrixAlgebra) -> Vec<Element> {
    assert_eq!(r.t, 2);
    let e11 = r.unit_index(1, 1).unwrap();
    let e12 = r.unit_index(1, 2).unwrap();
    let e22 = r.unit_index(2, 2).unwrap();
    let unit = |i: usize| r.algebra.basis_element(i);
    let diff = unit(e11).sub(&unit(e22));
    let sum = unit(e11).add(&unit(e22));
    let mid = unit(e12);
    let mut a = doubled.embed(Block::UpperLeft, &diff);
    a.add_assign(&doubled.embed(Block::LowerRight, &diff));
    let b = doubled.embed(Block::UpperRight, &sum);
    let c = doubled.embed(Block::LowerLeft, &diff);
    let mut d = doubled.embed(Block::UpperLeft, &sum);
    d.add_assign(&doubled.embed(Block::LowerRight, &sum.neg()));
    let mut x = doubled.embed(Block::UpperLeft, &mid);
    x.add_assign(&doubled.embed(Block::LowerRight, &mid.neg()));
    let y = doubled.embed(Block::UpperRight, &mid);
    vec![a, b, c, d, x, y]
}
