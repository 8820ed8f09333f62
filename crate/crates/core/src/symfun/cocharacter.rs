//! Cocharacters: symmetric-group traces on the multilinear quotient and the
//! multiplicity decomposition they determine.
//!
//! The quotient module is the row space of the evaluation matrix. The basis
//! is a fully reduced integer echelon form, so the coefficient of a basis
//! vector in any row-space vector is a pivot-column lookup divided by the
//! pivot value; a permutation acts by reindexing tuple columns, making each
//! trace a rank-length sum of lookups.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use super::characters::{class_size, CharacterCache};
use super::hooks::{colength_polynomial_bound, hook_dimension};
use super::partitions::{partitions, Partition};
use super::SymfunError;
use crate::algebra::Algebra;
use crate::codim::{evaluation_matrix, graded_variables, Budget, EvalMatrix};
use crate::freepoly::Variable;
use crate::linalg::EchelonBasis;
use crate::perm::Permutation;
use crate::scalar::Scalar;

pub struct QuotientModule {
    pub em: EvalMatrix,
    pub echelon: EchelonBasis,
}

/// Builds the degree-n quotient module (ungraded when `vars` are
/// unrestricted, graded otherwise) with its reduced row basis.
pub fn quotient_module(
    algebra: &Algebra,
    vars: &[Variable],
    budget: &Budget,
) -> Result<QuotientModule, SymfunError> {
    let em = evaluation_matrix(algebra, vars, budget)?;
    let mut echelon = EchelonBasis::new();
    for row in &em.matrix.rows {
        echelon.insert(row.clone());
    }
    Ok(QuotientModule { em, echelon })
}

impl QuotientModule {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Trace of the module action of a permutation of the variables.
    pub fn trace_of(&self, sigma: &Permutation) -> Result<Scalar, SymfunError> {
        let mut total = BigRational::zero();
        for j in 0..self.echelon.rank() {
            let pruned_pivot = self.echelon.pivots()[j];
            let raw = self.em.kept_raw[pruned_pivot as usize];
            let (tuple, coord) = self.em.colspace.split_raw(raw);
            let permuted = self.em.colspace.permuted_tuple(tuple, sigma);
            let source_raw = self.em.colspace.raw_col(permuted, coord);
            let entry = match self.em.fate[source_raw as usize] {
                None => BigInt::zero(),
                Some(col) => self.echelon.entry(j, col),
            };
            if entry.is_zero() {
                continue;
            }
            total += BigRational::new(entry, self.echelon.pivot_value(j).clone());
        }
        Ok(total)
    }
}

#[derive(Clone, Debug)]
pub struct CocharacterEntry {
    pub lambda: Partition,
    pub multiplicity: BigUint,
    pub dimension: BigUint,
}

#[derive(Clone, Debug)]
pub struct CocharacterReport {
    pub n: usize,
    pub codimension: usize,
    /// One entry per partition of n, including zero multiplicities.
    pub entries: Vec<CocharacterEntry>,
}

impl CocharacterReport {
    pub fn colength(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| e.multiplicity.clone())
            .sum()
    }

    pub fn reconstruction(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| e.multiplicity.clone() * e.dimension.clone())
            .sum()
    }
}

fn factorial_big(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 1..=n {
        out *= BigUint::from(k);
    }
    out
}

fn to_nonnegative_integer(value: &BigRational, label: &str) -> Result<BigUint, SymfunError> {
    if !value.is_integer() || value.is_negative() {
        return Err(SymfunError::BadMultiplicity {
            lambda: label.to_string(),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Multiplicity decomposition of the degree-n quotient of the algebra.
/// Multiplicities are certified nonnegative integers and their
/// dimension-weighted sum is certified equal to the codimension.
pub fn cocharacter(
    algebra: &Algebra,
    n: usize,
    budget: &Budget,
) -> Result<CocharacterReport, SymfunError> {
    let vars: Vec<Variable> = (0..n as u32).map(Variable::new).collect();
    let module = quotient_module(algebra, &vars, budget)?;
    let classes = partitions(n);
    let traces: Vec<Scalar> = classes
        .iter()
        .map(|class| module.trace_of(&Permutation::of_cycle_type(class.parts())))
        .collect::<Result<_, _>>()?;
    let order = BigRational::from_integer(BigInt::from(factorial_big(n)));
    let mut cache = CharacterCache::new();
    let mut entries = Vec::new();
    for lambda in partitions(n) {
        let mut sum = BigRational::zero();
        for (class, trace) in classes.iter().zip(&traces) {
            let chi = cache.value(&lambda, class)?;
            let size = BigInt::from(class_size(class));
            sum += BigRational::from_integer(size * chi) * trace;
        }
        let multiplicity = to_nonnegative_integer(&(sum / &order), &lambda.to_string())?;
        let dimension = hook_dimension(&lambda);
        entries.push(CocharacterEntry {
            lambda,
            multiplicity,
            dimension,
        });
    }
    let report = CocharacterReport {
        n,
        codimension: module.rank(),
        entries,
    };
    if report.reconstruction() != BigUint::from(report.codimension) {
        return Err(SymfunError::TraceInconsistency);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ColengthReport {
    pub n: usize,
    pub colength: BigUint,
    pub bound: BigUint,
}

/// Colength with the dimension-based polynomial bound asserted.
pub fn colength(
    report: &CocharacterReport,
    algebra_dim: usize,
) -> Result<ColengthReport, SymfunError> {
    let value = report.colength();
    let bound = colength_polynomial_bound(algebra_dim, report.n);
    if value > bound {
        return Err(SymfunError::ColengthBound {
            n: report.n,
            value: value.to_string(),
        });
    }
    Ok(ColengthReport {
        n: report.n,
        colength: value,
        bound,
    })
}

#[derive(Clone, Debug)]
pub struct GradedCocharacterEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub multiplicity: BigUint,
    pub dimension_product: BigUint,
}

#[derive(Clone, Debug)]
pub struct GradedCocharacterReport {
    pub even: usize,
    pub odd: usize,
    pub codimension: usize,
    pub entries: Vec<GradedCocharacterEntry>,
}

impl GradedCocharacterReport {
    pub fn colength(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| e.multiplicity.clone())
            .sum()
    }

    pub fn reconstruction(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| e.multiplicity.clone() * e.dimension_product.clone())
            .sum()
    }
}

/// Product-group decomposition of the graded quotient for `k` even and `l`
/// odd variables: classes are pairs of cycle types, one per factor.
pub fn graded_cocharacter(
    algebra: &Algebra,
    k: usize,
    l: usize,
    budget: &Budget,
) -> Result<GradedCocharacterReport, SymfunError> {
    let vars = graded_variables(k, l);
    let module = quotient_module(algebra, &vars, budget)?;
    let even_classes = partitions(k);
    let odd_classes = partitions(l);
    let mut traces = Vec::with_capacity(even_classes.len() * odd_classes.len());
    for gamma in &even_classes {
        for delta in &odd_classes {
            let sigma = block_permutation(gamma, delta, k, l);
            traces.push(module.trace_of(&sigma)?);
        }
    }
    let order = BigRational::from_integer(BigInt::from(
        factorial_big(k) * factorial_big(l),
    ));
    let mut cache = CharacterCache::new();
    let mut entries = Vec::new();
    for lambda in partitions(k) {
        for mu in partitions(l) {
            let mut sum = BigRational::zero();
            let mut trace_iter = traces.iter();
            for gamma in &even_classes {
                for delta in &odd_classes {
                    let trace = trace_iter.next().expect("trace table aligned");
                    let chi = cache.value(&lambda, gamma)? * cache.value(&mu, delta)?;
                    let size =
                        BigInt::from(class_size(gamma)) * BigInt::from(class_size(delta));
                    sum += BigRational::from_integer(size * chi) * trace;
                }
            }
            let label = format!("{lambda}:{mu}");
            let multiplicity = to_nonnegative_integer(&(sum / &order), &label)?;
            let dimension_product = hook_dimension(&lambda) * hook_dimension(&mu);
            entries.push(GradedCocharacterEntry {
                lambda: lambda.clone(),
                mu: mu.clone(),
                multiplicity,
                dimension_product,
            });
        }
    }
    let report = GradedCocharacterReport {
        even: k,
        odd: l,
        codimension: module.rank(),
        entries,
    };
    if report.reconstruction() != BigUint::from(report.codimension) {
        return Err(SymfunError::TraceInconsistency);
    }
    Ok(report)
}

fn block_permutation(gamma: &Partition, delta: &Partition, k: usize, l: usize) -> Permutation {
    let even = Permutation::of_cycle_type(gamma.parts());
    let odd = Permutation::of_cycle_type(delta.parts());
    let mut images = Vec::with_capacity(k + l);
    for i in 0..k {
        images.push(even.apply(i));
    }
    for i in 0..l {
        images.push(k + odd.apply(i));
    }
    Permutation::from_images(images).expect("block permutation")
}

/// Total graded colength at degree n (sum over all splits), with the weak
/// polynomial-bound check reusing the ungraded bound constants.
pub fn graded_colength(
    reports: &[GradedCocharacterReport],
    n: usize,
    algebra_dim: usize,
) -> Result<ColengthReport, SymfunError> {
    let value: BigUint = reports.iter().map(|r| r.colength()).sum();
    let bound = colength_polynomial_bound(algebra_dim, n);
    if value > bound {
        return Err(SymfunError::ColengthBound {
            n,
            value: value.to_string(),
        });
    }
    Ok(ColengthReport {
        n,
        colength: value,
        bound,
    })
}

#[derive(Clone, Debug, Default)]
pub struct ShapeFilterReport {
    pub violations: Vec<String>,
}

impl ShapeFilterReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Narrow-shape filter for the 6-dimensional solvable superalgebra: nonzero
/// multiplicities may have at most 4 rows, or exactly 5 rows with the last
/// row of length 1.
pub fn shape_filter_report(report: &CocharacterReport) -> ShapeFilterReport {
    let mut violations = Vec::new();
    for e in &report.entries {
        if e.multiplicity.is_zero() {
            continue;
        }
        let rows = e.lambda.num_parts();
        let allowed = rows <= 4 || (rows == 5 && e.lambda.part(4) == 1);
        if !allowed {
            violations.push(e.lambda.to_string());
        }
    }
    ShapeFilterReport { violations }
}

fn narrow_graded_shape(p: &Partition) -> bool {
    p.num_parts() <= 2 || (p.num_parts() == 3 && p.part(2) == 1)
}

/// Graded analogue: both factors of a nonzero multiplicity must have at
/// most three rows, the third of length 1.
pub fn graded_shape_filter_report(report: &GradedCocharacterReport) -> ShapeFilterReport {
    let mut violations = Vec::new();
    for e in &report.entries {
        if e.multiplicity.is_zero() {
            continue;
        }
        if !narrow_graded_shape(&e.lambda) || !narrow_graded_shape(&e.mu) {
            violations.push(format!("{}:{}", e.lambda, e.mu));
        }
    }
    ShapeFilterReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::s2_canonical;

    #[test]
    fn degree_one_cocharacter() {
        let s2 = s2_canonical();
        let report = cocharacter(&s2, 1, &Budget::default()).unwrap();
        assert_eq!(report.codimension, 1);
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].multiplicity, BigUint::from(1u32));
        assert_eq!(report.colength(), BigUint::from(1u32));
    }

    #[test]
    fn degree_two_splits_evenly() {
        let s2 = s2_canonical();
        let report = cocharacter(&s2, 2, &Budget::default()).unwrap();
        assert_eq!(report.codimension, 2);
        // trace of the transposition is zero, so both multiplicities are 1
        for e in &report.entries {
            assert_eq!(e.multiplicity, BigUint::from(1u32));
        }
        assert_eq!(report.colength(), BigUint::from(2u32));
        colength(&report, 6).unwrap();
    }

    #[test]
    fn transposition_trace_vanishes_at_degree_two() {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..2).map(Variable::new).collect();
        let module = quotient_module(&s2, &vars, &Budget::default()).unwrap();
        let swap = Permutation::of_cycle_type(&[2]);
        assert_eq!(module.trace_of(&swap).unwrap(), BigRational::zero());
        let id = Permutation::identity(2);
        assert_eq!(
            module.trace_of(&id).unwrap(),
            BigRational::from_integer(BigInt::from(2))
        );
    }

    #[test]
    fn abelian_quotients_are_trivial() {
        let abelian = crate::algebra::Algebra::new(
            2,
            vec!["u".into(), "v".into()],
            Vec::new(),
            None,
        )
        .unwrap();
        let report = cocharacter(&abelian, 2, &Budget::default()).unwrap();
        assert_eq!(report.codimension, 0);
        assert_eq!(report.colength(), BigUint::zero());
    }

    #[test]
    fn graded_degree_one_multiplicities() {
        let s2 = s2_canonical();
        let report = graded_cocharacter(&s2, 1, 0, &Budget::default()).unwrap();
        assert_eq!(report.codimension, 1);
        assert_eq!(report.colength(), BigUint::from(1u32));
        let report = graded_cocharacter(&s2, 1, 1, &Budget::default()).unwrap();
        assert_eq!(
            report.reconstruction(),
            BigUint::from(report.codimension)
        );
        graded_shape_filter_report(&report)
            .passed()
            .then_some(())
            .unwrap();
    }
}
