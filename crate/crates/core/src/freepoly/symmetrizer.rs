//! Young symmetrizers acting on polynomials: row-symmetrize, then
//! column-antisymmetrize, through a fixed numbering of the acted-on
//! variables.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::alternating::{listing_sign, AlternatedPolynomial};
use super::monomial::{Monomial, Variable};
use super::polynomial::{Assignment, Polynomial};
use super::FreePolyError;
use crate::algebra::{Algebra, Element};
use crate::scalar::{scalar, Scalar};
use crate::symfun::YoungTableau;

/// Eagerly expanded symmetrizer image: the double sum over the row and
/// column stabilizers with the column signs. Tableau entry `k` acts on
/// `vars[k-1]`.
pub fn apply_symmetrizer(
    tableau: &YoungTableau,
    p: &Polynomial,
    vars: &[Variable],
) -> Result<Polynomial, FreePolyError> {
    if tableau.n() != vars.len() {
        return Err(FreePolyError::SizeMismatch {
            boxes: tableau.n(),
            vars: vars.len(),
        });
    }
    let mut out = Polynomial::zero();
    for row_perm in tableau.row_stabilizer() {
        for col_perm in tableau.column_stabilizer() {
            let combined = row_perm.compose(&col_perm);
            let sign = scalar(col_perm.sign());
            let image = p.act(&combined, vars)?;
            out = out.add(&image.scale(&sign));
        }
    }
    Ok(out)
}

/// Symmetrizer image of an alternated polynomial, kept as a signed sum of
/// alternated polynomials. Images that coincide up to in-set relabeling are
/// merged, which collapses the stabilizer double sum by the order of the
/// alternation groups.
#[derive(Clone, Debug)]
pub struct SymmetrizedAlternating {
    summands: Vec<(Scalar, AlternatedPolynomial)>,
}

impl SymmetrizedAlternating {
    pub fn num_summands(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[(Scalar, AlternatedPolynomial)] {
        &self.summands
    }

    pub fn evaluate(
        &self,
        algebra: &Algebra,
        assignment: &Assignment,
    ) -> Result<Element, FreePolyError> {
        let mut acc = algebra.zero_element();
        for (coeff, alt) in &self.summands {
            let value = alt.evaluate(algebra, assignment)?;
            acc.add_scaled(&value, coeff);
        }
        Ok(acc)
    }
}

pub fn symmetrize_alternating(
    tableau: &YoungTableau,
    f: &AlternatedPolynomial,
    vars: &[Variable],
) -> Result<SymmetrizedAlternating, FreePolyError> {
    if tableau.n() != vars.len() {
        return Err(FreePolyError::SizeMismatch {
            boxes: tableau.n(),
            vars: vars.len(),
        });
    }
    let mut merged: HashMap<Vec<Monomial>, (Scalar, AlternatedPolynomial)> = HashMap::new();
    for row_perm in tableau.row_stabilizer() {
        for col_perm in tableau.column_stabilizer() {
            let combined = row_perm.compose(&col_perm);
            let map: BTreeMap<Variable, Variable> = vars
                .iter()
                .enumerate()
                .map(|(i, v)| (*v, vars[combined.apply(i)]))
                .collect();
            let image = f.relabel(&map)?;
            let mut sign = scalar(col_perm.sign());
            let canonical = canonicalize(image, &mut sign);
            let key: Vec<Monomial> = canonical
                .base()
                .terms()
                .map(|(m, _)| m.clone())
                .collect();
            match merged.entry(key) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert((sign, canonical));
                }
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    debug_assert_eq!(e.get().1.sets(), canonical.sets());
                    e.get_mut().0 += sign;
                }
            }
        }
    }
    let mut summands: Vec<(Scalar, AlternatedPolynomial)> = merged
        .into_values()
        .filter(|(c, _)| !c.is_zero())
        .collect();
    summands.sort_by(|a, b| {
        let ka: Vec<&Monomial> = a.1.base().terms().map(|(m, _)| m).collect();
        let kb: Vec<&Monomial> = b.1.base().terms().map(|(m, _)| m).collect();
        ka.cmp(&kb)
    });
    Ok(SymmetrizedAlternating { summands })
}

/// Rewrites an alternated polynomial so that each alternation set appears in
/// sorted order along the leaf sequence; antisymmetry makes the two forms
/// equal up to the accumulated sign. Only single-monomial bases are
/// canonicalized (the symmetrizer use case); anything else passes through.
fn canonicalize(alt: AlternatedPolynomial, sign: &mut Scalar) -> AlternatedPolynomial {
    if alt.base().num_terms() != 1 {
        return alt;
    }
    let (mono, coeff) = alt.base().terms().next().unwrap();
    let leaves = mono.leaves();
    let mut map: BTreeMap<Variable, Variable> = BTreeMap::new();
    let mut total_sign = 1i64;
    for set in alt.sets() {
        total_sign *= listing_sign(&leaves, set);
        let in_leaf_order: Vec<Variable> = leaves
            .iter()
            .copied()
            .filter(|v| set.iter().any(|s| s.id == v.id))
            .collect();
        for (observed, sorted) in in_leaf_order.iter().zip(set.iter()) {
            map.insert(*observed, *sorted);
        }
    }
    let canonical_mono = mono.map_leaves(&|v| *map.get(&v).unwrap_or(&v));
    *sign *= scalar(total_sign);
    let mut base = Polynomial::zero();
    base.add_term(canonical_mono, coeff.clone());
    AlternatedPolynomial::new(base, alt.sets().to_vec())
        .expect("canonical relabeling preserves validity")
}
