//! Search for a standard tableau whose symmetrizer image of the witness
//! polynomial stays off the identity ideal, certifying a codimension lower
//! bound equal to the shape's irreducible dimension.
//!
//! The search walks standard tableaux of the four-row rectangle in
//! lexicographic order. For each tableau the symmetrizer image is kept as a
//! merged sum of alternated polynomials and evaluated on candidate
//! assignments, starting from the distinguished evaluation and widening to
//! its permutation orbit. Any nonzero value is a certificate; tableaux with
//! no witness among the candidates are skipped rather than declared
//! identities.

use num::{BigUint, One};
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::freepoly::{
    action_variables, fm_polynomial, fm_variable_name, symmetrize_alternating, Assignment,
    FreePolyError, Variable,
};
use crate::perm::Permutation;
use crate::symfun::{hook_dimension, standard_tableaux, Partition, YoungTableau};

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(
        "the stabilizer double sum has {terms} terms at m = {m}; \
         only m = 1 is tractable"
    )]
    StabilizerTooLarge { m: usize, terms: BigUint },
    #[error(transparent)]
    FreePoly(#[from] FreePolyError),
}

#[derive(Clone, Debug)]
pub struct TableauWitness {
    pub tableau: YoungTableau,
    /// Position of the tableau in the lexicographic enumeration.
    pub tableau_index: usize,
    /// Human-readable assignment: variable name to basis name.
    pub assignment: Vec<(String, String)>,
    pub value: Element,
    /// Irreducible dimension of the shape: the certified codimension lower
    /// bound in degree `8m + 1`.
    pub certified_bound: BigUint,
    pub degree: usize,
    pub summands: usize,
    pub candidates_tried: usize,
}

/// Upper bound on candidate assignments tried per tableau.
const CANDIDATE_CAP: usize = 50_000;

pub fn rectangle_witness_search(
    s2: &Algebra,
    m: usize,
) -> Result<Option<TableauWitness>, WitnessError> {
    let stabilizer_terms = stabilizer_order(m);
    if stabilizer_terms > BigUint::from(1_000_000u32) {
        return Err(WitnessError::StabilizerTooLarge {
            m,
            terms: stabilizer_terms,
        });
    }
    let fm = fm_polynomial(m)?;
    let vars: Vec<Variable> = action_variables(&fm);
    let shape = Partition::rectangle(2 * m, 4);
    let dimension = hook_dimension(&shape);
    let phi = fm.phi_assignment(s2)?;
    let phi_values: Vec<Element> = vars
        .iter()
        .map(|v| phi.get(v).expect("total assignment").clone())
        .collect();
    let w_value = phi.get(&fm.w).expect("total assignment").clone();

    for (tableau_index, tableau) in standard_tableaux(&shape).iter().enumerate() {
        let form = symmetrize_alternating(tableau, &fm.form, &vars)?;
        for (tried, rho) in candidate_permutations(8 * m)
            .take(CANDIDATE_CAP)
            .enumerate()
        {
            let mut asg = Assignment::new();
            asg.set(fm.w, w_value.clone());
            for (i, v) in vars.iter().enumerate() {
                asg.set(*v, phi_values[rho.apply(i)].clone());
            }
            let value = form.evaluate(s2, &asg)?;
            if !value.is_zero() {
                let mut assignment: Vec<(String, String)> = vec![(
                    fm_variable_name(fm.w),
                    basis_name(s2, &w_value),
                )];
                for (i, v) in vars.iter().enumerate() {
                    assignment.push((
                        fm_variable_name(*v),
                        basis_name(s2, &phi_values[rho.apply(i)]),
                    ));
                }
                return Ok(Some(TableauWitness {
                    tableau: tableau.clone(),
                    tableau_index,
                    assignment,
                    value,
                    certified_bound: dimension,
                    degree: 8 * m + 1,
                    summands: form.num_summands(),
                    candidates_tried: tried + 1,
                }));
            }
        }
    }
    Ok(None)
}

/// `|R| * |C|` for the four-row rectangle with rows of length 2m.
fn stabilizer_order(m: usize) -> BigUint {
    let factorial = |n: usize| -> BigUint {
        let mut out = BigUint::one();
        for k in 1..=n {
            out *= BigUint::from(k);
        }
        out
    };
    factorial(2 * m).pow(4) * factorial(4).pow(2 * m as u32)
}

/// Candidate reindexings of the distinguished evaluation: identity first,
/// then the full permutation group when it is small enough, otherwise the
/// lexicographic prefix.
fn candidate_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let all = if n <= 8 {
        Permutation::all(n)
    } else {
        let mut out = vec![Permutation::identity(n)];
        out.extend(Permutation::all(8).into_iter().map(|p| {
            let mut images: Vec<usize> = (0..n).collect();
            for (i, item) in images.iter_mut().enumerate().take(8) {
                *item = p.apply(i);
            }
            Permutation::from_images(images).expect("embedded permutation")
        }));
        out
    };
    all.into_iter()
}

fn basis_name(algebra: &Algebra, e: &Element) -> String {
    for (i, c) in e.nonzero_support() {
        if num::One::is_one(c) {
            return algebra.basis_names()[i].clone();
        }
    }
    e.display(algebra)
}
