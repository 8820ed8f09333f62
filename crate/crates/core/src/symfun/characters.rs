//! Irreducible symmetric-group characters via the border-strip recursion,
//! memoized on (shape, remaining cycle type).

use std::collections::HashMap;

use num::{BigInt, BigUint, One, Zero};

use super::partitions::Partition;
use super::SymfunError;

#[derive(Default)]
pub struct CharacterCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharacterCache {
    pub fn new() -> Self {
        CharacterCache::default()
    }

    /// Character value of the irreducible representation `lambda` on the
    /// conjugacy class of cycle type `class`.
    pub fn value(
        &mut self,
        lambda: &Partition,
        class: &Partition,
    ) -> Result<BigInt, SymfunError> {
        if lambda.size() != class.size() {
            return Err(SymfunError::SizeMismatch {
                lambda: lambda.size(),
                class: class.size(),
            });
        }
        Ok(self.eval(lambda.parts().to_vec(), class.parts().to_vec()))
    }

    fn eval(&mut self, lambda: Vec<usize>, class: Vec<usize>) -> BigInt {
        if lambda.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), class.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // Beta numbers: strictly decreasing "first-column hook" values.
        // Removing a border strip of length L corresponds to lowering one
        // beta number by L onto an unoccupied value; the strip height is the
        // number of beta numbers jumped over.
        let k = lambda.len();
        let betas: Vec<usize> = lambda
            .iter()
            .enumerate()
            .map(|(i, &part)| part + (k - 1 - i))
            .collect();
        let strip = class[0];
        let rest: Vec<usize> = class[1..].to_vec();
        let mut total = BigInt::zero();
        for (pos, &b) in betas.iter().enumerate() {
            if b < strip {
                continue;
            }
            let target = b - strip;
            if betas.contains(&target) {
                continue;
            }
            let jumped = betas
                .iter()
                .filter(|&&other| other < b && other > target)
                .count();
            let mut new_betas = betas.clone();
            new_betas[pos] = target;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let new_lambda = betas_to_partition(&new_betas);
            let sub = self.eval(new_lambda, rest.clone());
            if jumped % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn betas_to_partition(betas: &[usize]) -> Vec<usize> {
    let k = betas.len();
    let mut parts: Vec<usize> = betas
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (k - 1 - i))
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Size of the conjugacy class of the given cycle type in `S_n`:
/// `n! / prod_j j^{m_j} m_j!` over part multiplicities.
pub fn class_size(class: &Partition) -> BigUint {
    let n = class.size();
    let mut numerator = BigUint::one();
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::one();
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in class.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (part, m) in mult {
        denominator *= BigUint::from(part).pow(m as u32);
        for i in 1..=m {
            denominator *= BigUint::from(i);
        }
    }
    numerator / denominator
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::hooks::hook_dimension;
    use super::super::partitions::partitions;
    use crate::perm::Permutation;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn identity_class_gives_the_dimension() {
        let mut cache = CharacterCache::new();
        for n in 1..=7 {
            let identity = Partition::rectangle(1, n);
            for lambda in partitions(n) {
                let chi = cache.value(&lambda, &identity).unwrap();
                assert_eq!(chi, BigInt::from(hook_dimension(&lambda)));
            }
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        let mut cache = CharacterCache::new();
        for n in 1..=6 {
            for class in partitions(n) {
                let triv = cache.value(&part(&[n]), &class).unwrap();
                assert_eq!(triv, BigInt::one());
                let sgn = cache.value(&Partition::rectangle(1, n), &class).unwrap();
                let rep = Permutation::of_cycle_type(class.parts());
                assert_eq!(sgn, BigInt::from(rep.sign()));
            }
        }
    }

    #[test]
    fn size_mismatch_rejected() {
        let mut cache = CharacterCache::new();
        assert!(cache.value(&part(&[2, 1]), &part(&[2])).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=7usize {
            let total: BigUint = partitions(n).iter().map(class_size).sum();
            let mut order = BigUint::one();
            for k in 1..=n {
                order *= BigUint::from(k);
            }
            assert_eq!(total, order);
        }
    }
}
