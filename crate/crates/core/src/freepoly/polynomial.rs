//! Sparse rational combinations of monomials, the permutation action, eager
//! alternation, and evaluation into an algebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::Zero;

use super::monomial::{Monomial, VarParity, Variable};
use super::FreePolyError;
use crate::algebra::{Algebra, Element, Parity};
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// A multilinear polynomial: sorted sparse map monomial -> coefficient.
/// All stored monomials share the same variable set.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, Scalar::from_integer(1.into()));
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.is_multilinear(), "monomials must be multilinear");
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    /// Union of the variables of all terms (identical across terms for
    /// multilinear homogeneous polynomials).
    pub fn support(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            out.extend(m.leaves());
        }
        out
    }

    /// Relabels variables by a map that must be a bijection of the support
    /// (a partial map is extended by the identity, provided its key and
    /// value sets coincide).
    pub fn act_map(
        &self,
        map: &BTreeMap<Variable, Variable>,
    ) -> Result<Polynomial, FreePolyError> {
        let support = self.support();
        let keys: BTreeSet<Variable> = map.keys().copied().collect();
        let values: BTreeSet<Variable> = map.values().copied().collect();
        if keys != values || keys.len() != map.len() {
            return Err(FreePolyError::NotBijection);
        }
        if let Some(v) = keys.iter().find(|v| !support.contains(v)) {
            return Err(FreePolyError::NotInSupport(v.id));
        }
        let f = |v: Variable| *map.get(&v).unwrap_or(&v);
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_leaves(&f), c.clone());
        }
        Ok(out)
    }

    /// The symmetric-group action through a fixed variable indexing:
    /// `vars[i]` is renamed to `vars[perm(i)]`.
    pub fn act(
        &self,
        perm: &Permutation,
        vars: &[Variable],
    ) -> Result<Polynomial, FreePolyError> {
        let map: BTreeMap<Variable, Variable> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (*v, vars[perm.apply(i)]))
            .collect();
        self.act_map(&map)
    }

    /// Eagerly expanded alternation over `set`: the signed sum over all
    /// permutations of the set.
    pub fn alternate(&self, set: &[Variable]) -> Result<Polynomial, FreePolyError> {
        let support = self.support();
        let mut seen = BTreeSet::new();
        for v in set {
            if !support.contains(v) {
                return Err(FreePolyError::NotInSupport(v.id));
            }
            if !seen.insert(v.id) {
                return Err(FreePolyError::DuplicateVariable(v.id));
            }
        }
        let mut out = Polynomial::zero();
        for perm in Permutation::all(set.len()) {
            let sign = Scalar::from_integer(perm.sign().into());
            let image = self.act(&perm, set)?;
            out = out.add(&image.scale(&sign));
        }
        Ok(out)
    }

    /// Evaluates under a total assignment; parity-restricted variables must
    /// receive homogeneous values of that parity.
    pub fn evaluate(
        &self,
        algebra: &Algebra,
        assignment: &Assignment,
    ) -> Result<Element, FreePolyError> {
        assignment.check_against(algebra, &self.support())?;
        let mut acc = algebra.zero_element();
        for (m, c) in &self.terms {
            let v = eval_monomial(algebra, m, assignment)?;
            acc.add_scaled(&v, c);
        }
        Ok(acc)
    }
}

pub(super) fn eval_monomial(
    algebra: &Algebra,
    m: &Monomial,
    assignment: &Assignment,
) -> Result<Element, FreePolyError> {
    match m {
        Monomial::Leaf(v) => assignment
            .get(v)
            .cloned()
            .ok_or(FreePolyError::MissingAssignment(v.id)),
        Monomial::Product(l, r) => {
            let lv = eval_monomial(algebra, l, assignment)?;
            let rv = eval_monomial(algebra, r, assignment)?;
            Ok(algebra.multiply(&lv, &rv)?)
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{m}")?;
        }
        Ok(())
    }
}

/// Variable-to-value map for evaluation.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    map: BTreeMap<Variable, Element>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(&mut self, v: Variable, value: Element) -> &mut Self {
        self.map.insert(v, value);
        self
    }

    pub fn get(&self, v: &Variable) -> Option<&Element> {
        self.map.get(v)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, Element)>) -> Self {
        Assignment {
            map: pairs.into_iter().collect(),
        }
    }

    /// Totality and parity validation for a support set.
    pub(super) fn check_against(
        &self,
        algebra: &Algebra,
        support: &BTreeSet<Variable>,
    ) -> Result<(), FreePolyError> {
        for v in support {
            let value = self
                .map
                .get(v)
                .ok_or(FreePolyError::MissingAssignment(v.id))?;
            check_parity(algebra, v, value)?;
        }
        Ok(())
    }
}

pub(super) fn check_parity(
    algebra: &Algebra,
    v: &Variable,
    value: &Element,
) -> Result<(), FreePolyError> {
    let required = match v.parity {
        VarParity::Unrestricted => return Ok(()),
        VarParity::Even => Parity::Even,
        VarParity::Odd => Parity::Odd,
    };
    if value.is_zero() {
        return Ok(());
    }
    if algebra.homogeneity(value) != Some(required) {
        return Err(FreePolyError::ParityViolation(v.id));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::s2_canonical;
    use crate::scalar::scalar;

    fn two_vars() -> (Variable, Variable) {
        (Variable::new(0), Variable::new(1))
    }

    #[test]
    fn alternation_of_a_product_is_the_commutator_shape() {
        let (u, v) = two_vars();
        let p = Polynomial::from_monomial(Monomial::left_normed(&[u, v]).unwrap());
        let alt = p.alternate(&[u, v]).unwrap();
        let mut expected = Polynomial::from_monomial(Monomial::left_normed(&[u, v]).unwrap());
        expected.add_term(Monomial::left_normed(&[v, u]).unwrap(), scalar(-1));
        assert_eq!(alt, expected);
    }

    #[test]
    fn act_is_a_group_action() {
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                let st = p.act(&s.compose(&t), &vars).unwrap();
                let step = p.act(&t, &vars).unwrap().act(&s, &vars).unwrap();
                assert_eq!(st, step);
            }
        }
    }

    #[test]
    fn act_rejects_non_bijections() {
        let (u, v) = two_vars();
        let p = Polynomial::from_monomial(Monomial::left_normed(&[u, v]).unwrap());
        let mut map = BTreeMap::new();
        map.insert(u, v);
        assert_eq!(p.act_map(&map), Err(FreePolyError::NotBijection));
    }

    #[test]
    fn evaluate_left_normed_word_in_the_canonical_superalgebra() {
        // y a c b evaluates through ya = -2y, yc = -x, xb = 2y to 4y.
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..4).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        let names = ["y", "a", "c", "b"];
        let asg = Assignment::from_pairs(vars.iter().zip(names).map(|(v, n)| {
            (*v, s2.basis_element(s2.basis_index(n).unwrap()))
        }));
        let out = p.evaluate(&s2, &asg).unwrap();
        let y = s2.basis_element(s2.basis_index("y").unwrap());
        assert_eq!(out, y.scale(&scalar(4)));
    }

    #[test]
    fn evaluate_requires_total_assignment() {
        let (u, v) = two_vars();
        let s2 = s2_canonical();
        let p = Polynomial::from_monomial(Monomial::left_normed(&[u, v]).unwrap());
        let mut asg = Assignment::new();
        asg.set(u, s2.basis_element(0));
        assert_eq!(
            p.evaluate(&s2, &asg),
            Err(FreePolyError::MissingAssignment(1))
        );
    }

    #[test]
    fn parity_restriction_enforced() {
        let s2 = s2_canonical();
        let u = Variable::even(0);
        let v = Variable::odd(1);
        let p = Polynomial::from_monomial(Monomial::left_normed(&[u, v]).unwrap());
        let a = s2.basis_element(s2.basis_index("a").unwrap());
        let b = s2.basis_element(s2.basis_index("b").unwrap());
        let good = Assignment::from_pairs([(u, a.clone()), (v, b.clone())]);
        assert!(p.evaluate(&s2, &good).is_ok());
        let bad = Assignment::from_pairs([(u, b), (v, a)]);
        assert_eq!(
            p.evaluate(&s2, &bad),
            Err(FreePolyError::ParityViolation(0))
        );
    }
}
