//! Structure-constant algebras over the rationals, with optional Z2-grading.
//!
//! An [`Algebra`] is a finite-dimensional (generally nonassociative) algebra
//! given by its multiplication table on a fixed basis. The table is sparse:
//! absent `(i, j)` entries mean the product of the corresponding basis
//! vectors is zero. When a parity vector is present, construction checks that
//! every structure constant respects the grading.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::scalar::{format_term, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: element has {element} coordinates, algebra has {dim}")]
    DimensionMismatch { element: usize, dim: usize },
    #[error("parity list has length {got}, expected {dim}")]
    ParityLength { got: usize, dim: usize },
    #[error(
        "grading violated: product of basis {i} and {j} has a component on basis {k} \
         of the wrong parity"
    )]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("duplicate table entry for ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("algebra is not graded (no parity data)")]
    NotGraded,
    #[error("algebra is not associative: first failing basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("subspace is not closed under the product")]
    NotClosed,
    #[error("basis name count {got} does not match dimension {dim}")]
    NameCount { got: usize, dim: usize },
}

/// Finite-dimensional algebra given by structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    basis_names: Vec<String>,
    table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    parity: Option<Vec<Parity>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim={}, nonzero products={})",
            self.dim,
            self.table.len()
        )
    }
}

impl Algebra {
    /// Builds an algebra, validating indices, merging duplicate `(i,j,k)`
    /// contributions is rejected, and checking grading consistency when a
    /// parity vector is supplied. Indices are 0-based.
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        parity: Option<Vec<Parity>>,
    ) -> Result<Self, AlgebraError> {
        if basis_names.len() != dim {
            return Err(AlgebraError::NameCount {
                got: basis_names.len(),
                dim,
            });
        }
        if let Some(p) = &parity {
            if p.len() != dim {
                return Err(AlgebraError::ParityLength { got: p.len(), dim });
            }
        }
        let mut table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            if c.is_zero() {
                continue;
            }
            let cell = table.entry((i, j)).or_default();
            if cell.iter().any(|(k0, _)| *k0 == k) {
                return Err(AlgebraError::DuplicateEntry { i, j, k });
            }
            cell.push((k, c));
        }
        for cell in table.values_mut() {
            cell.sort_by_key(|(k, _)| *k);
        }
        let algebra = Algebra {
            dim,
            basis_names,
            table,
            parity,
        };
        algebra.check_grading()?;
        Ok(algebra)
    }

    fn check_grading(&self) -> Result<(), AlgebraError> {
        let Some(parity) = &self.parity else {
            return Ok(());
        };
        for (&(i, j), cell) in &self.table {
            let expected = parity[i].combine(parity[j]);
            for (k, _) in cell {
                if parity[*k] != expected {
                    return Err(AlgebraError::GradingViolation { i, j, k: *k });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn parity(&self) -> Option<&[Parity]> {
        self.parity.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.parity.is_some()
    }

    pub fn parity_of(&self, i: usize) -> Option<Parity> {
        self.parity.as_ref().map(|p| p[i])
    }

    /// Basis indices of the given parity, in increasing order.
    pub fn homogeneous_indices(&self, parity: Parity) -> Vec<usize> {
        match &self.parity {
            None => Vec::new(),
            Some(p) => (0..self.dim).filter(|&i| p[i] == parity).collect(),
        }
    }

    /// Sparse table cell for `e_i e_j`; empty slice means zero.
    pub fn product_entries(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table
            .get(&(i, j))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Iterates over all nonzero `(i, j, k, c)` structure constants.
    pub fn table_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.table
            .iter()
            .flat_map(|(&(i, j), cell)| cell.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![Scalar::zero(); self.dim];
        coords[i] = Scalar::from_integer(1.into());
        Element { coords }
    }

    pub fn multiply_basis(&self, i: usize, j: usize) -> Element {
        let mut out = self.zero_element();
        for (k, c) in self.product_entries(i, j) {
            out.coords[*k] += c;
        }
        out
    }

    /// Bilinear extension of the structure-constant table.
    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element, AlgebraError> {
        if u.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                element: u.dim(),
                dim: self.dim,
            });
        }
        if v.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                element: v.dim(),
                dim: self.dim,
            });
        }
        let u_support: Vec<(usize, &Scalar)> = u.nonzero_support().collect();
        let v_support: Vec<(usize, &Scalar)> = v.nonzero_support().collect();
        let mut out = self.zero_element();
        for &(i, a) in &u_support {
            for &(j, b) in &v_support {
                let entries = self.product_entries(i, j);
                if entries.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in entries {
                    out.coords[*k] += c * &ab;
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive associativity check over basis triples; returns the first
    /// failing triple. Works on the sparse table directly.
    pub fn check_associative(&self) -> Result<(), AlgebraError> {
        let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product_entries(i, j);
                for k in 0..self.dim {
                    left.clear();
                    right.clear();
                    for (c, a) in ij {
                        for (out, b) in self.product_entries(*c, k) {
                            let slot = left.entry(*out).or_insert_with(Scalar::zero);
                            *slot += a * b;
                        }
                    }
                    for (c, a) in self.product_entries(j, k) {
                        for (out, b) in self.product_entries(i, *c) {
                            let slot = right.entry(*out).or_insert_with(Scalar::zero);
                            *slot += a * b;
                        }
                    }
                    left.retain(|_, v| !v.is_zero());
                    right.retain(|_, v| !v.is_zero());
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// The parity of a homogeneous element, `None` when mixed or zero-with-no-support.
    pub fn homogeneity(&self, e: &Element) -> Option<Parity> {
        let parity = self.parity.as_ref()?;
        let mut found: Option<Parity> = None;
        for (i, c) in e.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(parity[i]),
                Some(p) if p == parity[i] => {}
                Some(_) => return None,
            }
        }
        found
    }
}

/// Coordinate vector over an algebra's basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Scalar::zero(); dim],
        }
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        debug_assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        debug_assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn add_scaled(&mut self, other: &Element, s: &Scalar) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b * s;
        }
    }

    pub fn nonzero_support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    /// Renders as a signed sum over basis names, e.g. `384*y` or `a - 2*b`.
    pub fn display(&self, algebra: &Algebra) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.nonzero_support() {
            let term = format_term(c, &algebra.basis_names()[i]);
            if parts.is_empty() {
                parts.push(term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                parts.push(format!("- {stripped}"));
            } else {
                parts.push(format!("+ {term}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// First counterexample found by the superalgebra axiom checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `[e_i, e_j] != -(-1)^{|i||j|} [e_j, e_i]`
    Anticommutativity { i: usize, j: usize },
    /// Graded Jacobi fails on basis triple `(i, j, k)`.
    Jacobi { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Builds the supercommutator algebra `[x, y] = xy - (-1)^{|x||y|} yx` of an
/// associative graded algebra.
pub fn super_bracket_algebra(q: &Algebra) -> Result<Algebra, AlgebraError> {
    let parity = q.parity().ok_or(AlgebraError::NotGraded)?.to_vec();
    q.check_associative()?;
    let mut entries = Vec::new();
    for i in 0..q.dim() {
        for j in 0..q.dim() {
            let ij = q.multiply_basis(i, j);
            let ji = q.multiply_basis(j, i);
            let signed = if parity[i] == Parity::Odd && parity[j] == Parity::Odd {
                ij.add(&ji)
            } else {
                ij.sub(&ji)
            };
            for (k, c) in signed.nonzero_support() {
                entries.push((i, j, k, c.clone()));
            }
        }
    }
    Algebra::new(
        q.dim(),
        q.basis_names().to_vec(),
        entries,
        Some(parity),
    )
}

/// Verifies graded anticommutativity and the graded Jacobi identity on all
/// basis pairs/triples.
pub fn check_lie_superalgebra(l: &Algebra) -> Result<AxiomReport, AlgebraError> {
    let parity = l.parity().ok_or(AlgebraError::NotGraded)?;
    let sign = |p: Parity, q: Parity| -> Scalar {
        if p == Parity::Odd && q == Parity::Odd {
            Scalar::from_integer((-1).into())
        } else {
            Scalar::from_integer(1.into())
        }
    };
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let ij = l.multiply_basis(i, j);
            let ji = l.multiply_basis(j, i);
            // [u,v] = -(-1)^{|u||v|}[v,u]
            if ij != ji.scale(&-sign(parity[i], parity[j])) {
                return Ok(AxiomReport {
                    failure: Some(AxiomFailure::Anticommutativity { i, j }),
                });
            }
        }
    }
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            for k in 0..l.dim() {
                // (-1)^{|u||w|}[[u,v],w] + (-1)^{|v||u|}[[v,w],u] + (-1)^{|w||v|}[[w,u],v]
                acc.clear();
                let cyclic = [
                    (i, j, k, sign(parity[i], parity[k])),
                    (j, k, i, sign(parity[j], parity[i])),
                    (k, i, j, sign(parity[k], parity[j])),
                ];
                for (a, b, c, s) in cyclic {
                    for (inner, ca) in l.product_entries(a, b) {
                        for (out, cb) in l.product_entries(*inner, c) {
                            let slot = acc.entry(*out).or_insert_with(Scalar::zero);
                            *slot += ca * cb * &s;
                        }
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    return Ok(AxiomReport {
                        failure: Some(AxiomFailure::Jacobi { i, j, k }),
                    });
                }
            }
        }
    }
    Ok(AxiomReport { failure: None })
}

/// Span of all pairwise products of two subspaces.
fn product_span(l: &Algebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut products = Vec::new();
    for u in a.rows() {
        for v in b.rows() {
            products.push(l.multiply(u, v).unwrap());
            products.push(l.multiply(v, u).unwrap());
        }
    }
    Subspace::from_spanning(l.dim(), products)
}

/// Full space of the algebra as a subspace.
pub fn full_space(l: &Algebra) -> Subspace {
    Subspace::from_spanning(l.dim(), (0..l.dim()).map(|i| l.basis_element(i)).collect())
}

/// `D_0 = L`, `D_{k+1} = span(D_k · D_k)`, until stabilization.
pub fn derived_series(l: &Algebra) -> Vec<Subspace> {
    let mut chain = vec![full_space(l)];
    loop {
        let cur = chain.last().unwrap();
        let next = product_span(l, cur, cur);
        if &next == cur {
            break;
        }
        chain.push(next);
        if chain.last().unwrap().dim() == 0 {
            break;
        }
    }
    chain
}

/// `G_1 = start`, `G_{k+1} = span(G_k · start)`, until stabilization.
/// Fails when `start` is not closed under the product.
pub fn lower_central_series(
    l: &Algebra,
    start: &Subspace,
) -> Result<Vec<Subspace>, AlgebraError> {
    let closure = product_span(l, start, start);
    if !closure.is_contained_in(start) {
        return Err(AlgebraError::NotClosed);
    }
    let mut chain = vec![start.clone()];
    loop {
        let cur = chain.last().unwrap();
        let next = product_span(l, cur, start);
        if &next == cur {
            break;
        }
        chain.push(next);
        if chain.last().unwrap().dim() == 0 {
            break;
        }
    }
    Ok(chain)
}

pub fn is_solvable(l: &Algebra) -> bool {
    derived_series(l).last().unwrap().dim() == 0
}

pub fn is_nilpotent(l: &Algebra) -> bool {
    lower_central_series(l, &full_space(l))
        .expect("the full space is closed")
        .last()
        .unwrap()
        .dim()
        == 0
}

/// Restricts the product to a subspace closed under it, yielding a new
/// algebra on the subspace's echelon basis.
pub fn restrict_to_subalgebra(l: &Algebra, s: &Subspace) -> Result<Algebra, AlgebraError> {
    let rows = s.rows();
    let mut entries = Vec::new();
    for (i, u) in rows.iter().enumerate() {
        for (j, v) in rows.iter().enumerate() {
            let prod = l.multiply(u, v)?;
            let coords = s.coordinates_of(&prod).ok_or(AlgebraError::NotClosed)?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let names = (0..rows.len()).map(|i| format!("v{i}")).collect();
    // Parity carries over only when every echelon row is homogeneous.
    let parity = if l.is_graded() {
        let mut ps = Vec::with_capacity(rows.len());
        let mut ok = true;
        for row in rows {
            match l.homogeneity(row) {
                Some(p) => ps.push(p),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        ok.then_some(ps)
    } else {
        None
    };
    Algebra::new(rows.len(), names, entries, parity)
}
