//! Codimension sequences via exact rank of multilinear evaluation matrices.
//!
//! The degree-n multilinear quotient of an algebra is realized as the row
//! space of the matrix whose rows are monomials (all product trees times all
//! leaf orders) and whose columns are (basis tuple, output coordinate)
//! pairs: a multilinear polynomial is an identity exactly when it vanishes
//! on all basis tuples. The codimension is the rank of that matrix.
//!
//! Construction notes:
//! * evaluation runs over scaled integer structure constants in checked
//!   i128, after clearing denominators once (every degree-n monomial picks
//!   up the same power of the scale factor, so the rank is unchanged);
//! * shared subtrees across monomials are evaluated once per tuple through
//!   a precompiled op list;
//! * all-zero columns are dropped and exactly equal columns merged on the
//!   fly; row-space vectors take equal values on merged columns, so later
//!   coefficient lookups stay exact;
//! * tuples are processed in fixed order and merged sequentially, so
//!   reports are identical for any thread count.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, BigUint, One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Parity};
use crate::freepoly::{
    AlternatedPolynomial, Assignment, FreePolyError, Monomial, Polynomial, VarParity, Variable,
};
use crate::linalg::{
    exact_rank, modular_rank_multi, SparseIntMatrix, SparseIntRow, DEFAULT_PRIMES,
};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum CodimError {
    #[error("row budget exceeded: need {needed} rows, cap is {cap}")]
    RowBudget { needed: BigUint, cap: usize },
    #[error("column budget exceeded: more than {cap} distinct columns")]
    ColBudget { cap: usize },
    #[error("graded computation requested on an ungraded algebra")]
    GradingRequired,
    #[error("structure constants too large for the integer evaluation path")]
    Overflow,
    #[error("identity test needs {needed} evaluations, cap is {cap}")]
    TooManyTuples { needed: BigUint, cap: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    FreePoly(#[from] FreePolyError),
}

/// Hard caps on the evaluation-matrix size; override through the CLI flags.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_rows: usize,
    pub max_cols: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rows: 50_000,
            max_cols: 500_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankMethod {
    Exact,
    Modular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodUsed {
    Exact,
    Modular { primes: Vec<u64>, ranks: Vec<usize> },
}

impl fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodUsed::Exact => write!(f, "exact"),
            MethodUsed::Modular { primes, .. } => {
                let ps: Vec<String> = primes.iter().map(u64::to_string).collect();
                write!(f, "modular[{}]", ps.join(";"))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CodimReport {
    pub n: usize,
    /// `(even count, odd count)` for graded computations.
    pub split: Option<(usize, usize)>,
    pub value: usize,
    pub method: MethodUsed,
}

pub fn catalan(n: usize) -> BigUint {
    // C(2n, n) / (n + 1)
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= BigUint::from(2 * n - i);
        den *= BigUint::from(i + 1);
    }
    (num / den) / BigUint::from(n + 1)
}

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 1..=n {
        out *= BigUint::from(k);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All full binary trees with `n` leaves, as monomials over placeholder
/// variables `0..n-1` labeled in leaf order. Deterministic recursion order.
fn tree_shapes(n: usize) -> Vec<Monomial> {
    fn shapes_over(vars: &[Variable]) -> Vec<Monomial> {
        if vars.len() == 1 {
            return vec![Monomial::leaf(vars[0])];
        }
        let mut out = Vec::new();
        for split in 1..vars.len() {
            for left in shapes_over(&vars[..split]) {
                for right in shapes_over(&vars[split..]) {
                    out.push(Monomial::product(left.clone(), right));
                }
            }
        }
        out
    }
    let vars: Vec<Variable> = (0..n as u32).map(Variable::new).collect();
    shapes_over(&vars)
}

/// All multilinear monomials over the given variables: every tree shape with
/// every leaf order. Count is `Catalan(n-1) * n!`.
pub fn enumerate_monomials(vars: &[Variable]) -> Vec<Monomial> {
    let n = vars.len();
    let shapes = tree_shapes(n);
    let mut out = Vec::new();
    for shape in &shapes {
        for perm in crate::perm::Permutation::all(n) {
            out.push(shape.map_leaves(&|v: Variable| vars[perm.apply(v.id as usize)]));
        }
    }
    out
}

pub fn monomial_count(n: usize) -> BigUint {
    catalan(n - 1) * factorial(n)
}

/// Column index bookkeeping: tuples run over per-variable basis ranges (the
/// full basis, or one homogeneous part), the last variable fastest; each
/// tuple contributes one column per output coordinate.
#[derive(Clone, Debug)]
pub struct ColumnSpace {
    pub ranges: Vec<Vec<usize>>,
    pub dim: usize,
}

impl ColumnSpace {
    pub fn num_tuples(&self) -> usize {
        self.ranges.iter().map(Vec::len).product()
    }

    pub fn raw_cols(&self) -> usize {
        self.num_tuples() * self.dim
    }

    /// Decodes a tuple index into per-variable positions within the ranges.
    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.ranges.len()];
        for (i, range) in self.ranges.iter().enumerate().rev() {
            out[i] = idx % range.len();
            idx /= range.len();
        }
        out
    }

    pub fn encode(&self, positions: &[usize]) -> usize {
        let mut idx = 0;
        for (i, range) in self.ranges.iter().enumerate() {
            idx = idx * range.len() + positions[i];
        }
        idx
    }

    /// Basis indices assigned by a tuple index.
    pub fn basis_tuple(&self, idx: usize) -> Vec<usize> {
        self.decode(idx)
            .into_iter()
            .enumerate()
            .map(|(i, pos)| self.ranges[i][pos])
            .collect()
    }

    /// Raw column id of (tuple, coordinate).
    pub fn raw_col(&self, tuple_idx: usize, coord: usize) -> u32 {
        (tuple_idx * self.dim + coord) as u32
    }

    pub fn split_raw(&self, raw: u32) -> (usize, usize) {
        ((raw as usize) / self.dim, (raw as usize) % self.dim)
    }

    /// Tuple index of `t o sigma` (position i reads position sigma(i)).
    /// Requires sigma to permute positions with identical ranges.
    pub fn permuted_tuple(&self, idx: usize, sigma: &crate::perm::Permutation) -> usize {
        let pos = self.decode(idx);
        let permuted: Vec<usize> = (0..pos.len()).map(|i| pos[sigma.apply(i)]).collect();
        self.encode(&permuted)
    }
}

/// Scaled integer structure constants for checked-i128 evaluation.
struct IntTable {
    dim: usize,
    cells: Vec<Vec<(u32, i128)>>,
}

impl IntTable {
    /// Clears denominators with one global factor. Every degree-n monomial
    /// evaluation picks up the factor exactly n-1 times, so the matrix is a
    /// nonzero scalar multiple of the true one and the rank is unchanged.
    fn build(algebra: &Algebra) -> Result<IntTable, CodimError> {
        use num::Integer;
        let mut lcm = BigInt::one();
        for (_, _, _, c) in algebra.table_entries() {
            lcm = lcm.lcm(c.denom());
        }
        let dim = algebra.dim();
        let mut cells = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in algebra.table_entries() {
            let scaled: BigInt = c.numer() * (&lcm / c.denom());
            let as_i128 = i128::try_from(&scaled).map_err(|_| CodimError::Overflow)?;
            cells[i * dim + j].push((k as u32, as_i128));
        }
        Ok(IntTable { dim, cells })
    }

    fn multiply(
        &self,
        u: &[i128],
        v: &[i128],
        out: &mut [i128],
    ) -> Result<(), CodimError> {
        out.fill(0);
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = a.checked_mul(b).ok_or(CodimError::Overflow)?;
                for &(k, c) in &self.cells[i * self.dim + j] {
                    let term = ab.checked_mul(c).ok_or(CodimError::Overflow)?;
                    let slot = &mut out[k as usize];
                    *slot = slot.checked_add(term).ok_or(CodimError::Overflow)?;
                }
            }
        }
        Ok(())
    }
}

/// Straight-line program evaluating all monomials with shared subtrees
/// computed once.
enum EvalOp {
    Leaf(usize),
    Mul(usize, usize),
}

struct EvalProgram {
    ops: Vec<EvalOp>,
    row_slots: Vec<usize>,
}

impl EvalProgram {
    fn compile(monomials: &[Monomial]) -> EvalProgram {
        let mut slot_of: HashMap<Monomial, usize> = HashMap::new();
        let mut ops = Vec::new();
        let mut row_slots = Vec::with_capacity(monomials.len());
        fn slot_for(
            m: &Monomial,
            slot_of: &mut HashMap<Monomial, usize>,
            ops: &mut Vec<EvalOp>,
        ) -> usize {
            if let Some(&s) = slot_of.get(m) {
                return s;
            }
            let op = match m {
                Monomial::Leaf(v) => EvalOp::Leaf(v.id as usize),
                Monomial::Product(l, r) => {
                    let ls = slot_for(l, slot_of, ops);
                    let rs = slot_for(r, slot_of, ops);
                    EvalOp::Mul(ls, rs)
                }
            };
            ops.push(op);
            let s = ops.len() - 1;
            slot_of.insert(m.clone(), s);
            s
        }
        for m in monomials {
            let s = slot_for(m, &mut slot_of, &mut ops);
            row_slots.push(s);
        }
        EvalProgram { ops, row_slots }
    }
}

/// The evaluation matrix with its column bookkeeping.
pub struct EvalMatrix {
    pub monomials: Vec<Monomial>,
    pub vars: Vec<Variable>,
    pub colspace: ColumnSpace,
    pub matrix: SparseIntMatrix,
    /// Raw column -> kept column (or none when the column is zero).
    pub fate: Vec<Option<u32>>,
    /// Representative raw column of each kept column.
    pub kept_raw: Vec<u32>,
}

type TupleColumns = Vec<(u8, Vec<(u32, i128)>)>;

pub fn evaluation_matrix(
    algebra: &Algebra,
    vars: &[Variable],
    budget: &Budget,
) -> Result<EvalMatrix, CodimError> {
    let n = vars.len();
    assert!(n >= 1, "degree must be positive");
    let expected_rows = monomial_count(n);
    if expected_rows > BigUint::from(budget.max_rows) {
        return Err(CodimError::RowBudget {
            needed: expected_rows,
            cap: budget.max_rows,
        });
    }
    let mut ranges = Vec::with_capacity(n);
    for v in vars {
        let range = match v.parity {
            VarParity::Unrestricted => (0..algebra.dim()).collect::<Vec<_>>(),
            VarParity::Even => {
                if !algebra.is_graded() {
                    return Err(CodimError::GradingRequired);
                }
                algebra.homogeneous_indices(Parity::Even)
            }
            VarParity::Odd => {
                if !algebra.is_graded() {
                    return Err(CodimError::GradingRequired);
                }
                algebra.homogeneous_indices(Parity::Odd)
            }
        };
        ranges.push(range);
    }
    let colspace = ColumnSpace {
        ranges,
        dim: algebra.dim(),
    };
    let monomials = enumerate_monomials(vars);
    let table = IntTable::build(algebra)?;
    let program = EvalProgram::compile(&monomials);
    let num_tuples = colspace.num_tuples();
    let dim = algebra.dim();

    let chunk_size = 256;
    let chunk_starts: Vec<usize> = (0..num_tuples).step_by(chunk_size).collect();
    let chunks: Vec<Result<Vec<TupleColumns>, CodimError>> = chunk_starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk_size).min(num_tuples);
            let mut out = Vec::with_capacity(end - start);
            let mut values = vec![0i128; program.ops.len() * dim];
            for tuple_idx in start..end {
                let basis_tuple = colspace.basis_tuple(tuple_idx);
                // Evaluate the shared-subtree program.
                for (s, op) in program.ops.iter().enumerate() {
                    match op {
                        EvalOp::Leaf(var_idx) => {
                            let (head, _) = values.split_at_mut((s + 1) * dim);
                            let slot = &mut head[s * dim..];
                            slot.fill(0);
                            slot[basis_tuple[*var_idx]] = 1;
                        }
                        EvalOp::Mul(a, b) => {
                            let (head, tail) = values.split_at_mut(s * dim);
                            let u = &head[a * dim..a * dim + dim];
                            let v = &head[b * dim..b * dim + dim];
                            table.multiply(u, v, &mut tail[..dim])?;
                        }
                    }
                }
                // Gather nonzero columns for this tuple; rows outermost so
                // each slot's coordinates are read contiguously.
                let mut buffers: Vec<Vec<(u32, i128)>> = vec![Vec::new(); dim];
                for (row, &slot) in program.row_slots.iter().enumerate() {
                    let coords = &values[slot * dim..slot * dim + dim];
                    for (k, &val) in coords.iter().enumerate() {
                        if val != 0 {
                            buffers[k].push((row as u32, val));
                        }
                    }
                }
                let cols: TupleColumns = buffers
                    .into_iter()
                    .enumerate()
                    .filter(|(_, col)| !col.is_empty())
                    .map(|(k, col)| (k as u8, col))
                    .collect();
                out.push(cols);
            }
            Ok(out)
        })
        .collect();

    // Sequential merge in tuple order: deterministic dedup and fates.
    let mut fate: Vec<Option<u32>> = vec![None; colspace.raw_cols()];
    let mut kept_raw: Vec<u32> = Vec::new();
    let mut dedup: HashMap<Vec<(u32, i128)>, u32> = HashMap::new();
    let mut kept_cols: Vec<Vec<(u32, i128)>> = Vec::new();
    let mut tuple_idx = 0usize;
    for chunk in chunks {
        for cols in chunk? {
            for (k, col) in cols {
                let raw = colspace.raw_col(tuple_idx, k as usize);
                let id = match dedup.entry(col) {
                    std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        let id = kept_cols.len() as u32;
                        if kept_cols.len() >= budget.max_cols {
                            return Err(CodimError::ColBudget {
                                cap: budget.max_cols,
                            });
                        }
                        kept_cols.push(e.key().clone());
                        kept_raw.push(raw);
                        e.insert(id);
                        id
                    }
                };
                fate[raw as usize] = Some(id);
            }
            tuple_idx += 1;
        }
    }

    // Transpose kept columns into sparse rows.
    let mut rows: Vec<SparseIntRow> = vec![Vec::new(); monomials.len()];
    for (col_id, col) in kept_cols.iter().enumerate() {
        for &(row, val) in col {
            rows[row as usize].push((col_id as u32, BigInt::from(val)));
        }
    }
    for row in &mut rows {
        row.sort_by_key(|e| e.0);
    }
    let matrix = SparseIntMatrix {
        ncols: kept_cols.len(),
        rows,
    };
    Ok(EvalMatrix {
        monomials,
        vars: vars.to_vec(),
        colspace,
        matrix,
        fate,
        kept_raw,
    })
}

fn rank_with(matrix: &SparseIntMatrix, method: RankMethod) -> (usize, MethodUsed) {
    match method {
        RankMethod::Exact => (exact_rank(matrix), MethodUsed::Exact),
        RankMethod::Modular => {
            let primes = DEFAULT_PRIMES.to_vec();
            let ranks = modular_rank_multi(matrix, &primes);
            let value = ranks.iter().copied().max().unwrap_or(0);
            (value, MethodUsed::Modular { primes, ranks })
        }
    }
}

/// Ungraded codimension: rank of the degree-n evaluation matrix.
pub fn codimension(
    algebra: &Algebra,
    n: usize,
    method: RankMethod,
    budget: &Budget,
) -> Result<CodimReport, CodimError> {
    let vars: Vec<Variable> = (0..n as u32).map(Variable::new).collect();
    let em = evaluation_matrix(algebra, &vars, budget)?;
    let (value, method) = rank_with(&em.matrix, method);
    Ok(CodimReport {
        n,
        split: None,
        value,
        method,
    })
}

pub fn graded_variables(k: usize, l: usize) -> Vec<Variable> {
    let mut vars = Vec::with_capacity(k + l);
    for i in 0..k as u32 {
        vars.push(Variable::even(i));
    }
    for i in 0..l as u32 {
        vars.push(Variable::odd(k as u32 + i));
    }
    vars
}

/// Graded codimension for `k` even and `l` odd variables.
pub fn graded_codimension(
    algebra: &Algebra,
    k: usize,
    l: usize,
    method: RankMethod,
    budget: &Budget,
) -> Result<CodimReport, CodimError> {
    if !algebra.is_graded() {
        return Err(CodimError::GradingRequired);
    }
    let vars = graded_variables(k, l);
    let em = evaluation_matrix(algebra, &vars, budget)?;
    let (value, method) = rank_with(&em.matrix, method);
    Ok(CodimReport {
        n: k + l,
        split: Some((k, l)),
        value,
        method,
    })
}

/// Total graded codimension: the binomially weighted sum over splits.
pub fn graded_codim_total(
    algebra: &Algebra,
    n: usize,
    method: RankMethod,
    budget: &Budget,
) -> Result<(BigUint, Vec<CodimReport>), CodimError> {
    let mut total = BigUint::zero();
    let mut reports = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let report = graded_codimension(algebra, k, n - k, method, budget)?;
        total += binomial(n, k) * BigUint::from(report.value);
        reports.push(report);
    }
    Ok((total, reports))
}

const IDENTITY_EVAL_CAP: u64 = 20_000_000;

fn parity_range(algebra: &Algebra, parity: VarParity) -> Result<Vec<usize>, CodimError> {
    match parity {
        VarParity::Unrestricted => Ok((0..algebra.dim()).collect()),
        VarParity::Even | VarParity::Odd => {
            if !algebra.is_graded() {
                return Err(CodimError::GradingRequired);
            }
            let p = if parity == VarParity::Even {
                Parity::Even
            } else {
                Parity::Odd
            };
            Ok(algebra.homogeneous_indices(p))
        }
    }
}

/// Identity test for an expanded multilinear polynomial: vanishing on all
/// basis tuples (restricted to homogeneous parts for parity-marked
/// variables), which suffices by multilinearity.
pub fn is_identity(p: &Polynomial, algebra: &Algebra) -> Result<bool, CodimError> {
    if p.is_zero() {
        return Ok(true);
    }
    let support: Vec<Variable> = p.support().into_iter().collect();
    let ranges: Result<Vec<Vec<usize>>, CodimError> = support
        .iter()
        .map(|v| parity_range(algebra, v.parity))
        .collect();
    let ranges = ranges?;
    let mut tuples = BigUint::one();
    for r in &ranges {
        tuples *= BigUint::from(r.len());
    }
    let work = tuples.clone() * BigUint::from(p.num_terms());
    if work > BigUint::from(IDENTITY_EVAL_CAP) {
        return Err(CodimError::TooManyTuples {
            needed: work,
            cap: IDENTITY_EVAL_CAP,
        });
    }
    let mut positions = vec![0usize; support.len()];
    loop {
        let asg = Assignment::from_pairs(
            support
                .iter()
                .enumerate()
                .map(|(i, v)| (*v, algebra.basis_element(ranges[i][positions[i]]))),
        );
        if !p.evaluate(algebra, &asg)?.is_zero() {
            return Ok(false);
        }
        if !increment(&mut positions, &ranges) {
            return Ok(true);
        }
    }
}

fn increment(positions: &mut [usize], ranges: &[Vec<usize>]) -> bool {
    for i in (0..positions.len()).rev() {
        positions[i] += 1;
        if positions[i] < ranges[i].len() {
            return true;
        }
        positions[i] = 0;
    }
    false
}

/// Identity test for an alternated polynomial without expansion. Values with
/// a repeat inside an alternation set vanish by antisymmetry and permuting
/// values within a set only flips signs, so it is enough to test tuples that
/// are strictly increasing on each set.
pub fn is_identity_alternated(
    f: &AlternatedPolynomial,
    algebra: &Algebra,
) -> Result<bool, CodimError> {
    let support: Vec<Variable> = f.support().into_iter().collect();
    let in_set: Vec<bool> = support
        .iter()
        .map(|v| f.sets().iter().any(|s| s.contains(v)))
        .collect();
    let spectators: Vec<Variable> = support
        .iter()
        .zip(&in_set)
        .filter(|(_, &b)| !b)
        .map(|(v, _)| *v)
        .collect();
    let spectator_ranges: Result<Vec<Vec<usize>>, CodimError> = spectators
        .iter()
        .map(|v| parity_range(algebra, v.parity))
        .collect();
    let spectator_ranges = spectator_ranges?;
    let set_ranges: Result<Vec<Vec<usize>>, CodimError> = f
        .sets()
        .iter()
        .map(|s| parity_range(algebra, s[0].parity))
        .collect();
    let set_ranges = set_ranges?;

    let mut total = BigUint::one();
    for r in &spectator_ranges {
        total *= BigUint::from(r.len());
    }
    for (set, r) in f.sets().iter().zip(&set_ranges) {
        total *= binomial(r.len(), set.len());
    }
    if total > BigUint::from(IDENTITY_EVAL_CAP / 100) {
        return Err(CodimError::TooManyTuples {
            needed: total,
            cap: IDENTITY_EVAL_CAP / 100,
        });
    }

    let mut spectator_pos = vec![0usize; spectators.len()];
    loop {
        // Iterate strictly increasing combinations per set.
        let mut combos: Vec<Vec<usize>> = f
            .sets()
            .iter()
            .map(|s| (0..s.len()).collect::<Vec<_>>())
            .collect();
        loop {
            let mut asg = Assignment::new();
            for (i, v) in spectators.iter().enumerate() {
                asg.set(
                    *v,
                    algebra.basis_element(spectator_ranges[i][spectator_pos[i]]),
                );
            }
            for (s, set) in f.sets().iter().enumerate() {
                for (j, v) in set.iter().enumerate() {
                    asg.set(*v, algebra.basis_element(set_ranges[s][combos[s][j]]));
                }
            }
            if !f.evaluate(algebra, &asg)?.is_zero() {
                return Ok(false);
            }
            if !next_combination_multi(&mut combos, f.sets(), &set_ranges) {
                break;
            }
        }
        if !increment(&mut spectator_pos, &spectator_ranges) {
            return Ok(true);
        }
    }
}

fn next_combination_multi(
    combos: &mut [Vec<usize>],
    sets: &[Vec<Variable>],
    ranges: &[Vec<usize>],
) -> bool {
    for s in (0..combos.len()).rev() {
        if next_combination(&mut combos[s], ranges[s].len()) {
            return true;
        }
        combos[s] = (0..sets[s].len()).collect();
    }
    false
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct ExpEstimateRow {
    pub n: usize,
    pub value: BigUint,
    /// Decimal string of value^(1/n), six fractional digits, computed with
    /// integer arithmetic only.
    pub root: String,
}

/// Finite-n root table; no convergence claim is implied.
pub fn exp_estimate(
    algebra: &Algebra,
    n_max: usize,
    graded: bool,
    method: RankMethod,
    budget: &Budget,
) -> Result<Vec<ExpEstimateRow>, CodimError> {
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let value = if graded {
            graded_codim_total(algebra, n, method, budget)?.0
        } else {
            BigUint::from(codimension(algebra, n, method, budget)?.value)
        };
        out.push(ExpEstimateRow {
            n,
            root: nth_root_decimal(&value, n),
            value,
        });
    }
    Ok(out)
}

/// `floor(10^6 * v^(1/n))` rendered as `i.ffffff`.
pub fn nth_root_decimal(v: &BigUint, n: usize) -> String {
    if v.is_zero() {
        return "0.000000".to_string();
    }
    let scaled = v * BigUint::from(10u32).pow(6 * n as u32);
    let root = scaled.nth_root(n as u32);
    let int_part = &root / BigUint::from(1_000_000u32);
    let frac = &root % BigUint::from(1_000_000u32);
    format!("{int_part}.{frac:06}")
}

/// Row vector of a polynomial over the kept columns of an evaluation
/// matrix, for membership-style identity cross-checks.
pub fn polynomial_row(
    p: &Polynomial,
    em: &EvalMatrix,
    algebra: &Algebra,
) -> Result<SparseIntRow, CodimError> {
    // Evaluate p on every kept tuple column by direct rational evaluation,
    // then scale to integers by the common denominator.
    let mut values: Vec<Scalar> = Vec::with_capacity(em.kept_raw.len());
    for &raw in &em.kept_raw {
        let (tuple_idx, coord) = em.colspace.split_raw(raw);
        let basis_tuple = em.colspace.basis_tuple(tuple_idx);
        let asg = Assignment::from_pairs(
            em.vars
                .iter()
                .zip(&basis_tuple)
                .map(|(v, &b)| (*v, algebra.basis_element(b))),
        );
        let value = p.evaluate(algebra, &asg)?;
        values.push(value.coord(coord).clone());
    }
    use num::Integer;
    let mut lcm = BigInt::one();
    for v in &values {
        lcm = lcm.lcm(v.denom());
    }
    Ok(values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c as u32, v.numer() * (&lcm / v.denom())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::s2_canonical;

    #[test]
    fn catalan_and_counts() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(2), BigUint::from(2u32));
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(monomial_count(1), BigUint::from(1u32));
        assert_eq!(monomial_count(3), BigUint::from(12u32));
        assert_eq!(monomial_count(4), BigUint::from(120u32));
    }

    #[test]
    fn enumerate_monomial_lists() {
        let vars: Vec<Variable> = (0..3).map(Variable::new).collect();
        let monos = enumerate_monomials(&vars);
        assert_eq!(monos.len(), 12);
        // all distinct
        let set: std::collections::BTreeSet<_> = monos.iter().collect();
        assert_eq!(set.len(), 12);
    }

    #[test]
    fn column_space_roundtrip() {
        let cs = ColumnSpace {
            ranges: vec![vec![0, 1, 2], vec![0, 1], vec![0, 1, 2, 3]],
            dim: 5,
        };
        for idx in 0..cs.num_tuples() {
            assert_eq!(cs.encode(&cs.decode(idx)), idx);
        }
    }

    #[test]
    fn first_codimensions_of_the_canonical_superalgebra() {
        let s2 = s2_canonical();
        let budget = Budget::default();
        let c1 = codimension(&s2, 1, RankMethod::Exact, &budget).unwrap();
        assert_eq!(c1.value, 1);
        let c2 = codimension(&s2, 2, RankMethod::Exact, &budget).unwrap();
        assert_eq!(c2.value, 2);
    }

    #[test]
    fn abelian_codimensions_vanish() {
        let abelian = Algebra::new(
            3,
            vec!["u".into(), "v".into(), "w".into()],
            Vec::new(),
            None,
        )
        .unwrap();
        let budget = Budget::default();
        // degree one never vanishes on a nonzero algebra
        assert_eq!(
            codimension(&abelian, 1, RankMethod::Exact, &budget)
                .unwrap()
                .value,
            1
        );
        for n in 2..=3 {
            assert_eq!(
                codimension(&abelian, n, RankMethod::Exact, &budget)
                    .unwrap()
                    .value,
                0
            );
        }
    }

    #[test]
    fn row_budget_enforced() {
        let s2 = s2_canonical();
        let budget = Budget {
            max_rows: 100,
            max_cols: 500_000,
        };
        assert!(matches!(
            codimension(&s2, 4, RankMethod::Exact, &budget),
            Err(CodimError::RowBudget { .. })
        ));
    }

    #[test]
    fn graded_degree_one() {
        let s2 = s2_canonical();
        let budget = Budget::default();
        let c10 = graded_codimension(&s2, 1, 0, RankMethod::Exact, &budget).unwrap();
        let c01 = graded_codimension(&s2, 0, 1, RankMethod::Exact, &budget).unwrap();
        assert_eq!((c10.value, c01.value), (1, 1));
        let (total, _) = graded_codim_total(&s2, 1, RankMethod::Exact, &budget).unwrap();
        assert_eq!(total, BigUint::from(2u32));
    }

    #[test]
    fn identity_tests_small() {
        let s2 = s2_canonical();
        let vars: Vec<Variable> = (0..2).map(Variable::new).collect();
        let commutator = Polynomial::from_monomial(
            Monomial::left_normed(&vars).unwrap(),
        )
        .alternate(&vars)
        .unwrap();
        // not an identity of the superalgebra (bd = -2b != db = 2b)
        assert!(!is_identity(&commutator, &s2).unwrap());
        let abelian =
            Algebra::new(2, vec!["u".into(), "v".into()], Vec::new(), None).unwrap();
        assert!(is_identity(&commutator, &abelian).unwrap());
    }

    #[test]
    fn nth_root_formatting() {
        assert_eq!(nth_root_decimal(&BigUint::from(8u32), 3), "2.000000");
        assert_eq!(nth_root_decimal(&BigUint::from(2u32), 2), "1.414213");
        assert_eq!(nth_root_decimal(&BigUint::zero(), 4), "0.000000");
    }
}
