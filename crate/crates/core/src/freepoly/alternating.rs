//! Alternation kept symbolic: a base polynomial plus disjoint sets of
//! variables to alternate over.
//!
//! Expanding the signed sum multiplies the term count by the product of the
//! set factorials, which is prohibitive for the high-degree evaluations this
//! crate needs. Evaluation therefore runs directly on the tree with a
//! merge-based sign bookkeeping: each subtree reports, per alternation set,
//! which values it has consumed, and combining two subtrees contributes the
//! sign of the crossing inversions. States that consumed the same values
//! merge, which keeps the evaluation polynomial-sized for chain-shaped
//! monomials even when the expansion would have hundreds of millions of
//! terms.

use std::collections::{BTreeSet, HashMap};

use num::BigUint;

use super::monomial::{Monomial, Variable};
use super::polynomial::{check_parity, Assignment, Polynomial};
use super::FreePolyError;
use crate::algebra::{Algebra, Element};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatedPolynomial {
    base: Polynomial,
    /// Pairwise disjoint, each sorted by variable id, family sorted by
    /// first member.
    sets: Vec<Vec<Variable>>,
}

impl AlternatedPolynomial {
    pub fn new(
        base: Polynomial,
        sets: Vec<Vec<Variable>>,
    ) -> Result<Self, FreePolyError> {
        let support = base.support();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut canonical = Vec::with_capacity(sets.len());
        for set in sets {
            let mut set = set;
            set.sort_by_key(|v| v.id);
            for v in &set {
                if !support.contains(v) {
                    return Err(FreePolyError::NotInSupport(v.id));
                }
                if !seen.insert(v.id) {
                    return Err(FreePolyError::OverlappingSets);
                }
            }
            if set.iter().any(|v| v.parity != set[0].parity) {
                return Err(FreePolyError::MixedParities);
            }
            if !set.is_empty() {
                canonical.push(set);
            }
        }
        canonical.sort_by_key(|s| s[0].id);
        Ok(AlternatedPolynomial {
            base,
            sets: canonical,
        })
    }

    pub fn plain(base: Polynomial) -> Self {
        AlternatedPolynomial {
            base,
            sets: Vec::new(),
        }
    }

    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn sets(&self) -> &[Vec<Variable>] {
        &self.sets
    }

    pub fn support(&self) -> BTreeSet<Variable> {
        self.base.support()
    }

    /// Number of monomials the eager expansion would have (before
    /// cancellation).
    pub fn monomial_count(&self) -> BigUint {
        let mut count = BigUint::from(self.base.num_terms());
        for set in &self.sets {
            for i in 1..=set.len() {
                count *= BigUint::from(i);
            }
        }
        count
    }

    /// Eagerly expanded signed sum.
    pub fn expand(&self) -> Result<Polynomial, FreePolyError> {
        let mut poly = self.base.clone();
        for set in &self.sets {
            poly = poly.alternate(set)?;
        }
        Ok(poly)
    }

    /// Relabels all variables; alternation sets follow the relabeling.
    pub fn relabel(
        &self,
        map: &std::collections::BTreeMap<Variable, Variable>,
    ) -> Result<AlternatedPolynomial, FreePolyError> {
        let base = self.base.act_map(map)?;
        let sets = self
            .sets
            .iter()
            .map(|s| s.iter().map(|v| *map.get(v).unwrap_or(v)).collect())
            .collect();
        AlternatedPolynomial::new(base, sets)
    }

    /// Evaluates the alternated polynomial without expanding it.
    pub fn evaluate(
        &self,
        algebra: &Algebra,
        assignment: &Assignment,
    ) -> Result<Element, FreePolyError> {
        for v in &self.support() {
            let value = assignment
                .get(v)
                .ok_or(FreePolyError::MissingAssignment(v.id))?;
            check_parity(algebra, v, value)?;
        }
        if self.sets.is_empty() {
            return self.base.evaluate(algebra, assignment);
        }
        let set_values: Vec<Vec<Element>> = self
            .sets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|v| assignment.get(v).unwrap().clone())
                    .collect()
            })
            .collect();
        let mut acc = algebra.zero_element();
        for (mono, coeff) in self.base.terms() {
            let value = self.eval_term(algebra, mono, assignment, &set_values)?;
            acc.add_scaled(&value, coeff);
        }
        Ok(acc)
    }

    fn eval_term(
        &self,
        algebra: &Algebra,
        mono: &Monomial,
        assignment: &Assignment,
        set_values: &[Vec<Element>],
    ) -> Result<Element, FreePolyError> {
        let states = self.eval_states(algebra, mono, assignment, set_values)?;
        let full: Vec<u16> = self
            .sets
            .iter()
            .map(|s| ((1u32 << s.len()) - 1) as u16)
            .collect();
        let mut value = states
            .get(&full)
            .cloned()
            .unwrap_or_else(|| algebra.zero_element());
        // The merge bookkeeping counts inversions against leaf order; the
        // alternation sign is defined against sorted variable order. The two
        // differ by the fixed parity of each set's leaf listing.
        let leaves = mono.leaves();
        for set in &self.sets {
            if listing_sign(&leaves, set) < 0 {
                value = value.neg();
            }
        }
        Ok(value)
    }

    fn eval_states(
        &self,
        algebra: &Algebra,
        mono: &Monomial,
        assignment: &Assignment,
        set_values: &[Vec<Element>],
    ) -> Result<HashMap<Vec<u16>, Element>, FreePolyError> {
        let mut states = HashMap::new();
        match mono {
            Monomial::Leaf(v) => {
                if let Some(s) = self.sets.iter().position(|s| s.contains(v)) {
                    for (t, value) in set_values[s].iter().enumerate() {
                        let mut key = vec![0u16; self.sets.len()];
                        key[s] = 1 << t;
                        states.insert(key, value.clone());
                    }
                } else {
                    let value = assignment
                        .get(v)
                        .ok_or(FreePolyError::MissingAssignment(v.id))?;
                    states.insert(vec![0u16; self.sets.len()], value.clone());
                }
            }
            Monomial::Product(l, r) => {
                let left = self.eval_states(algebra, l, assignment, set_values)?;
                let right = self.eval_states(algebra, r, assignment, set_values)?;
                for (kl, el) in &left {
                    for (kr, er) in &right {
                        if kl.iter().zip(kr).any(|(a, b)| a & b != 0) {
                            continue;
                        }
                        let mut crossings = 0u32;
                        for (a, b) in kl.iter().zip(kr) {
                            crossings += cross_inversions(*a, *b);
                        }
                        let mut value = algebra.multiply(el, er)?;
                        if crossings % 2 == 1 {
                            value = value.neg();
                        }
                        let key: Vec<u16> =
                            kl.iter().zip(kr).map(|(a, b)| a | b).collect();
                        match states.entry(key) {
                            std::collections::hash_map::Entry::Vacant(e) => {
                                e.insert(value);
                            }
                            std::collections::hash_map::Entry::Occupied(mut e) => {
                                e.get_mut().add_assign(&value);
                            }
                        }
                    }
                }
            }
        }
        Ok(states)
    }
}

/// Number of pairs `(i in a, j in b)` with `i > j`: the inversions created
/// by placing all `a`-slots before all `b`-slots.
fn cross_inversions(a: u16, b: u16) -> u32 {
    let mut count = 0;
    let mut a = a;
    while a != 0 {
        let i = a.trailing_zeros();
        count += (b & ((1 << i) - 1)).count_ones();
        a &= a - 1;
    }
    count
}

/// Sign of the permutation in which `set` members (sorted by id) appear
/// along the leaf order of a monomial.
pub(super) fn listing_sign(leaves: &[Variable], set: &[Variable]) -> i64 {
    let listing: Vec<usize> = leaves
        .iter()
        .filter_map(|v| set.iter().position(|s| s.id == v.id))
        .collect();
    debug_assert_eq!(listing.len(), set.len());
    let mut sign = 1i64;
    for i in 0..listing.len() {
        for j in i + 1..listing.len() {
            if listing[i] > listing[j] {
                sign = -sign;
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::s2_canonical;
    use crate::scalar::scalar;

    fn s2_elem(s2: &Algebra, name: &str) -> Element {
        s2.basis_element(s2.basis_index(name).unwrap())
    }

    #[test]
    fn lazy_matches_eager_on_small_cases() {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..4).map(Variable::new).collect();
        // (v0 v1)(v2 v3), alternating {v0, v2} and {v1, v3}
        let mono = Monomial::product(
            Monomial::left_normed(&vars[..2]).unwrap(),
            Monomial::left_normed(&vars[2..]).unwrap(),
        );
        let alt = AlternatedPolynomial::new(
            Polynomial::from_monomial(mono),
            vec![vec![vars[0], vars[2]], vec![vars[1], vars[3]]],
        )
        .unwrap();
        for values in [
            ["b", "c", "d", "a"],
            ["y", "c", "d", "b"],
            ["x", "b", "c", "d"],
            ["b", "b", "c", "d"],
        ] {
            let asg = Assignment::from_pairs(
                vars.iter()
                    .zip(values)
                    .map(|(v, n)| (*v, s2_elem(&s2, n))),
            );
            let lazy = alt.evaluate(&s2, &asg).unwrap();
            let eager = alt.expand().unwrap().evaluate(&s2, &asg).unwrap();
            assert_eq!(lazy, eager);
        }
    }

    #[test]
    fn repeated_values_in_a_set_vanish() {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let mono = Monomial::left_normed(&vars).unwrap();
        let alt = AlternatedPolynomial::new(
            Polynomial::from_monomial(mono),
            vec![vec![vars[1], vars[2]]],
        )
        .unwrap();
        let asg = Assignment::from_pairs([
            (vars[0], s2_elem(&s2, "y")),
            (vars[1], s2_elem(&s2, "c")),
            (vars[2], s2_elem(&s2, "c")),
        ]);
        assert!(alt.evaluate(&s2, &asg).unwrap().is_zero());
    }

    #[test]
    fn overlapping_sets_rejected() {
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let mono = Monomial::left_normed(&vars).unwrap();
        let err = AlternatedPolynomial::new(
            Polynomial::from_monomial(mono),
            vec![vec![vars[0], vars[1]], vec![vars[1], vars[2]]],
        )
        .unwrap_err();
        assert_eq!(err, FreePolyError::OverlappingSets);
    }

    #[test]
    fn double_alternation_scales_by_factorial() {
        // alternate(alternate(p, S), S) = |S|! alternate(p, S)
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        let once = p.alternate(&vars).unwrap();
        let twice = once.alternate(&vars).unwrap();
        assert_eq!(twice, once.scale(&scalar(6)));
    }
}
