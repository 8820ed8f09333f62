//! The multilinear witness polynomials in 2m alternating quadruples.
//!
//! Block `i` contributes the five left-normed factors
//! `(x1 z1)(x2 z2)(x3 z3) x4 z4`, and each block's x- and z-quadruples are
//! alternated independently, so the expanded form has `(4! 4!)^m` monomials
//! while the symbolic form evaluates in polynomial time.

use super::alternating::AlternatedPolynomial;
use super::monomial::{Monomial, Variable};
use super::polynomial::{Assignment, Polynomial};
use super::FreePolyError;
use crate::algebra::{Algebra, Element};

#[derive(Clone, Debug)]
pub struct FmPolynomial {
    pub m: usize,
    pub form: AlternatedPolynomial,
    pub w: Variable,
    pub x_vars: Vec<[Variable; 4]>,
    pub z_vars: Vec<[Variable; 4]>,
}

/// Variable ids follow leaf order: `w` is 0, then each block uses the next
/// eight ids interleaved `x1 z1 x2 z2 x3 z3 x4 z4`.
pub fn fm_polynomial(m: usize) -> Result<FmPolynomial, FreePolyError> {
    if m == 0 {
        return Err(FreePolyError::ZeroBlocks);
    }
    let w = Variable::new(0);
    let mut x_vars = Vec::with_capacity(m);
    let mut z_vars = Vec::with_capacity(m);
    for block in 0..m {
        let base = 1 + 8 * block as u32;
        x_vars.push([0, 1, 2, 3].map(|j| Variable::new(base + 2 * j)));
        z_vars.push([0, 1, 2, 3].map(|j| Variable::new(base + 2 * j + 1)));
    }
    let mut chain = Monomial::leaf(w);
    for block in 0..m {
        for j in 0..3 {
            let pair = Monomial::product(
                Monomial::leaf(x_vars[block][j]),
                Monomial::leaf(z_vars[block][j]),
            );
            chain = Monomial::product(chain, pair);
        }
        chain = Monomial::product(chain, Monomial::leaf(x_vars[block][3]));
        chain = Monomial::product(chain, Monomial::leaf(z_vars[block][3]));
    }
    let mut sets = Vec::with_capacity(2 * m);
    for block in 0..m {
        sets.push(x_vars[block].to_vec());
        sets.push(z_vars[block].to_vec());
    }
    let form = AlternatedPolynomial::new(Polynomial::from_monomial(chain), sets)?;
    Ok(FmPolynomial {
        m,
        form,
        w,
        x_vars,
        z_vars,
    })
}

/// The alternated variables in tableau-number order (`w` excluded).
pub fn action_variables(fm: &FmPolynomial) -> Vec<Variable> {
    let mut vars = Vec::with_capacity(8 * fm.m);
    for block in 0..fm.m {
        for j in 0..4 {
            vars.push(fm.x_vars[block][j]);
            vars.push(fm.z_vars[block][j]);
        }
    }
    vars
}

pub fn fm_variable_name(v: Variable) -> String {
    if v.id == 0 {
        return "w".to_string();
    }
    let r = (v.id - 1) % 8;
    let block = (v.id - 1) / 8 + 1;
    let j = r / 2 + 1;
    let kind = if r.is_multiple_of(2) { "x" } else { "z" };
    format!("{kind}{j}_{block}")
}

impl FmPolynomial {
    /// The distinguished evaluation: `w -> y`, x-quadruples to
    /// `(b, c, d, a)`, z-quadruples to `(c, d, b, a)`.
    pub fn phi_assignment(&self, s2: &Algebra) -> Result<Assignment, FreePolyError> {
        let elem = |name: &str| -> Result<Element, FreePolyError> {
            let i = s2
                .basis_index(name)
                .ok_or(FreePolyError::MissingAssignment(0))?;
            Ok(s2.basis_element(i))
        };
        let mut asg = Assignment::new();
        asg.set(self.w, elem("y")?);
        let x_values = ["b", "c", "d", "a"];
        let z_values = ["c", "d", "b", "a"];
        for block in 0..self.m {
            for j in 0..4 {
                asg.set(self.x_vars[block][j], elem(x_values[j])?);
                asg.set(self.z_vars[block][j], elem(z_values[j])?);
            }
        }
        Ok(asg)
    }

    pub fn phi_value(&self, s2: &Algebra) -> Result<Element, FreePolyError> {
        let asg = self.phi_assignment(s2)?;
        self.form.evaluate(s2, &asg)
    }
}

/// A single left-normed chain `w (x1 z1)(x2 z2)...(xk zk)` with the x- and
/// z-tuples alternated: the building block of the witness polynomials,
/// exposed on its own for the shorter evaluation identities.
#[derive(Clone, Debug)]
pub struct PairChain {
    pub form: AlternatedPolynomial,
    pub w: Variable,
    pub x_vars: Vec<Variable>,
    pub z_vars: Vec<Variable>,
}

pub fn pair_chain(pairs: usize) -> Result<PairChain, FreePolyError> {
    if pairs == 0 {
        return Err(FreePolyError::ZeroBlocks);
    }
    let w = Variable::new(0);
    let x_vars: Vec<Variable> = (0..pairs as u32).map(|j| Variable::new(1 + 2 * j)).collect();
    let z_vars: Vec<Variable> = (0..pairs as u32).map(|j| Variable::new(2 + 2 * j)).collect();
    let mut chain = Monomial::leaf(w);
    for j in 0..pairs {
        let pair = Monomial::product(Monomial::leaf(x_vars[j]), Monomial::leaf(z_vars[j]));
        chain = Monomial::product(chain, pair);
    }
    let form = AlternatedPolynomial::new(
        Polynomial::from_monomial(chain),
        vec![x_vars.clone(), z_vars.clone()],
    )?;
    Ok(PairChain {
        form,
        w,
        x_vars,
        z_vars,
    })
}

impl PairChain {
    /// Evaluates the chain with named basis values for `w`, the x-tuple and
    /// the z-tuple.
    pub fn evaluate_named(
        &self,
        algebra: &Algebra,
        w_name: &str,
        x_names: &[&str],
        z_names: &[&str],
    ) -> Result<Element, FreePolyError> {
        let elem = |name: &str| -> Result<Element, FreePolyError> {
            let i = algebra
                .basis_index(name)
                .ok_or(FreePolyError::MissingAssignment(0))?;
            Ok(algebra.basis_element(i))
        };
        let mut asg = Assignment::new();
        asg.set(self.w, elem(w_name)?);
        for (v, n) in self.x_vars.iter().zip(x_names) {
            asg.set(*v, elem(n)?);
        }
        for (v, n) in self.z_vars.iter().zip(z_names) {
            asg.set(*v, elem(n)?);
        }
        self.form.evaluate(algebra, &asg)
    }
}

/// Value of the witness polynomial under the distinguished evaluation,
/// right-multiplied `pad` times by the basis element `a`.
pub fn padded_phi_value(
    s2: &Algebra,
    m: usize,
    pad: usize,
) -> Result<Element, FreePolyError> {
    let fm = fm_polynomial(m)?;
    let mut value = fm.phi_value(s2)?;
    let a = s2
        .basis_index("a")
        .map(|i| s2.basis_element(i))
        .ok_or(FreePolyError::MissingAssignment(0))?;
    for _ in 0..pad {
        value = s2.multiply(&value, &a)?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigUint;

    #[test]
    fn block_count_must_be_positive() {
        assert!(matches!(fm_polynomial(0), Err(FreePolyError::ZeroBlocks)));
    }

    #[test]
    fn degree_and_monomial_count() {
        let f1 = fm_polynomial(1).unwrap();
        assert_eq!(f1.form.base().terms().next().unwrap().0.degree(), 9);
        assert_eq!(f1.form.monomial_count(), BigUint::from(576u32));
        let f2 = fm_polynomial(2).unwrap();
        assert_eq!(f2.form.base().terms().next().unwrap().0.degree(), 17);
        assert_eq!(f2.form.monomial_count(), BigUint::from(576u32 * 576));
    }

    #[test]
    fn variable_names_follow_block_layout() {
        let f2 = fm_polynomial(2).unwrap();
        assert_eq!(fm_variable_name(f2.w), "w");
        assert_eq!(fm_variable_name(f2.x_vars[0][0]), "x1_1");
        assert_eq!(fm_variable_name(f2.z_vars[0][3]), "z4_1");
        assert_eq!(fm_variable_name(f2.x_vars[1][2]), "x3_2");
    }
}
