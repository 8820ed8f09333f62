//! Property tests for the algebraic core: bilinearity, grading, actions,
//! alternation, echelon canonicity, and the modular/exact rank relation.

use std::collections::BTreeMap;

use num::BigInt;
use proptest::prelude::*;

use pilab_core::algebra::{Algebra, Element, Parity};
use pilab_core::constructors::s2_canonical;
use pilab_core::freepoly::{Assignment, Monomial, Polynomial, Variable};
use pilab_core::linalg::{exact_rank, modular_rank, SparseIntMatrix};
use pilab_core::perm::Permutation;
use pilab_core::scalar::{scalar, Scalar};
use pilab_core::subspace::Subspace;

const THIRTY_BIT_PRIMES: [u64; 16] = [
    536870923, 536870951, 536871001, 536871017, 536871019, 536871029, 536871061, 536871089,
    536871091, 536871119, 536871131, 536871157, 536871173, 536871191, 536871199, 536871233,
];

fn coeff() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::new(BigInt::from(n), BigInt::from(d)))
}

fn element(dim: usize) -> impl Strategy<Value = Element> {
    proptest::collection::vec(coeff(), dim).prop_map(Element::from_coords)
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_bilinear(
        u in element(6),
        u2 in element(6),
        v in element(6),
        s in coeff(),
    ) {
        let s2 = s2_canonical();
        let left = s2.multiply(&u.add(&u2), &v).unwrap();
        let split = s2.multiply(&u, &v).unwrap().add(&s2.multiply(&u2, &v).unwrap());
        prop_assert_eq!(&left, &split);
        let scaled = s2.multiply(&u.scale(&s), &v).unwrap();
        prop_assert_eq!(&scaled, &s2.multiply(&u, &v).unwrap().scale(&s));
        let scaled_right = s2.multiply(&u, &v.scale(&s)).unwrap();
        prop_assert_eq!(&scaled_right, &s2.multiply(&u, &v).unwrap().scale(&s));
    }

    #[test]
    fn homogeneous_products_respect_the_grading(i in 0usize..6, j in 0usize..6) {
        let s2 = s2_canonical();
        let product = s2.multiply_basis(i, j);
        if !product.is_zero() {
            let expected = s2.parity_of(i).unwrap().combine(s2.parity_of(j).unwrap());
            prop_assert_eq!(s2.homogeneity(&product), Some(expected));
        }
    }

    #[test]
    fn echelon_form_is_canonical(
        vectors in proptest::collection::vec(element(5), 1..6),
        shuffle in permutation(8),
    ) {
        let a = Subspace::from_spanning(5, vectors.clone());
        // a shuffled and rescaled spanning set of the same space
        let mut reordered: Vec<Element> = Vec::new();
        for i in 0..vectors.len() {
            reordered.push(vectors[shuffle.apply(i % 8) % vectors.len()].clone());
        }
        reordered.extend(vectors.iter().map(|v| v.scale(&scalar(3))));
        let b = Subspace::from_spanning(5, reordered);
        // b spans a subspace of a's span by construction; equality holds when
        // every original vector is reachable
        prop_assert!(b.is_contained_in(&a));
        let c = Subspace::from_spanning(5, vectors);
        prop_assert_eq!(a, c);
    }

    #[test]
    fn evaluation_is_linear_in_the_polynomial(
        targets in proptest::collection::vec(0usize..6, 3),
        a in coeff(),
        b in coeff(),
    ) {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        let q = Polynomial::from_monomial(
            Monomial::left_normed(&[vars[1], vars[0], vars[2]]).unwrap(),
        );
        let combo = p.scale(&a).add(&q.scale(&b));
        let asg = Assignment::from_pairs(
            vars.iter()
                .zip(targets.iter())
                .map(|(v, &t)| (*v, s2.basis_element(t))),
        );
        let lhs = combo.evaluate(&s2, &asg).unwrap();
        let rhs = p
            .evaluate(&s2, &asg)
            .unwrap()
            .scale(&a)
            .add(&q.evaluate(&s2, &asg).unwrap().scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_intertwines_evaluation(
        perm in permutation(4),
        targets in proptest::collection::vec(0usize..6, 4),
    ) {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..4).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        let values: Vec<Element> = targets.iter().map(|&t| s2.basis_element(t)).collect();
        let asg = Assignment::from_pairs(
            vars.iter().zip(values.iter()).map(|(v, e)| (*v, e.clone())),
        );
        // assignment composed with the permutation
        let composed = Assignment::from_pairs(
            vars.iter()
                .enumerate()
                .map(|(i, v)| (*v, values[perm.apply(i)].clone())),
        );
        let acted = p.act(&perm, &vars).unwrap();
        prop_assert_eq!(
            acted.evaluate(&s2, &asg).unwrap(),
            p.evaluate(&s2, &composed).unwrap()
        );
    }

    #[test]
    fn alternation_composes_with_the_factorial(
        targets in proptest::collection::vec(0usize..6, 3),
    ) {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
        let once = p.alternate(&vars).unwrap();
        let twice = once.alternate(&vars).unwrap();
        prop_assert_eq!(&twice, &once.scale(&scalar(6)));
        // evaluating with two equal alternated values gives zero
        let mut asg = Assignment::new();
        asg.set(vars[0], s2.basis_element(targets[0]));
        asg.set(vars[1], s2.basis_element(targets[1]));
        asg.set(vars[2], s2.basis_element(targets[0]));
        prop_assert!(once.evaluate(&s2, &asg).unwrap().is_zero());
    }

    #[test]
    fn modular_rank_never_exceeds_exact_rank(
        entries in proptest::collection::vec((0usize..6, 0usize..8, -20i64..=20), 0..24),
        prime_choices in proptest::collection::vec(0usize..THIRTY_BIT_PRIMES.len(), 3),
    ) {
        let mut dense = vec![vec![0i64; 8]; 6];
        for (r, c, v) in entries {
            dense[r][c] = v;
        }
        let matrix = SparseIntMatrix {
            ncols: 8,
            rows: dense
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, v)| *v != 0)
                        .map(|(c, v)| (c as u32, BigInt::from(v)))
                        .collect()
                })
                .collect(),
        };
        let exact = exact_rank(&matrix);
        let mut matched = 0usize;
        for &i in &prime_choices {
            let m = modular_rank(&matrix, THIRTY_BIT_PRIMES[i]);
            prop_assert!(m <= exact);
            matched += usize::from(m == exact);
        }
        // the exact method is the arbiter; with three independent 30-bit
        // primes at least one must see the full rank
        prop_assert!(matched >= 1);
    }

    #[test]
    fn super_bracket_of_graded_associative_passes_axioms(
        parities in proptest::collection::vec(0u8..2, 3),
    ) {
        use pilab_core::algebra::{check_lie_superalgebra, super_bracket_algebra};
        // group algebra style example: e_i e_j = e_{(i + j) mod 3} works only
        // with an even grading, so grade compatibly or use the zero product
        let compatible = parities.iter().all(|&p| p == 0);
        let entries: Vec<(usize, usize, usize, Scalar)> = if compatible {
            (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j, (i + j) % 3, scalar(1))))
                .collect()
        } else {
            Vec::new()
        };
        let parity: Vec<Parity> = parities
            .iter()
            .map(|&p| Parity::from_bit(p).unwrap())
            .collect();
        let q = Algebra::new(
            3,
            vec!["e0".into(), "e1".into(), "e2".into()],
            entries,
            Some(parity),
        )
        .unwrap();
        let bracket = super_bracket_algebra(&q).unwrap();
        prop_assert!(check_lie_superalgebra(&bracket).unwrap().passed());
    }

    #[test]
    fn lazy_alternation_agrees_with_eager_expansion(
        targets in proptest::collection::vec(0usize..6, 5),
        split in 1usize..4,
    ) {
        use pilab_core::freepoly::AlternatedPolynomial;
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..5).map(Variable::new).collect();
        // a random-ish tree: left-normed head with a trailing pair
        let head = Monomial::left_normed(&vars[..split]).unwrap();
        let tail = Monomial::left_normed(&vars[split..]).unwrap();
        let mono = Monomial::product(head, tail);
        let alt = AlternatedPolynomial::new(
            Polynomial::from_monomial(mono),
            vec![vec![vars[0], vars[2], vars[4]], vec![vars[1], vars[3]]],
        )
        .unwrap();
        let asg = Assignment::from_pairs(
            vars.iter()
                .zip(targets.iter())
                .map(|(v, &t)| (*v, s2.basis_element(t))),
        );
        let lazy = alt.evaluate(&s2, &asg).unwrap();
        let eager = alt.expand().unwrap().evaluate(&s2, &asg).unwrap();
        prop_assert_eq!(lazy, eager);
    }
}

#[test]
fn act_map_identities_and_inverses() {
    let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
    let p = Polynomial::from_monomial(Monomial::left_normed(&vars).unwrap());
    let id: BTreeMap<Variable, Variable> = vars.iter().map(|v| (*v, *v)).collect();
    assert_eq!(p.act_map(&id).unwrap(), p);
}
