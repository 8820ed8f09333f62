//! Variables and product-tree monomials.

use std::collections::BTreeSet;
use std::fmt;

use super::FreePolyError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarParity {
    Unrestricted,
    Even,
    Odd,
}

/// A variable of the free algebra. Identity is the numeric id; the parity
/// restricts which values the variable may take in graded evaluations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub id: u32,
    pub parity: VarParity,
}

impl Variable {
    pub fn new(id: u32) -> Self {
        Variable {
            id,
            parity: VarParity::Unrestricted,
        }
    }

    pub fn even(id: u32) -> Self {
        Variable {
            id,
            parity: VarParity::Even,
        }
    }

    pub fn odd(id: u32) -> Self {
        Variable {
            id,
            parity: VarParity::Odd,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.id)
    }
}

/// A full binary product tree whose leaves are variables. Multilinearity
/// (no repeated leaves) is enforced by the constructors that build
/// polynomials, not by the tree type itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Monomial {
    Leaf(Variable),
    Product(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn leaf(v: Variable) -> Self {
        Monomial::Leaf(v)
    }

    pub fn product(left: Monomial, right: Monomial) -> Self {
        Monomial::Product(Box::new(left), Box::new(right))
    }

    /// Left-combed product tree: `abc = (ab)c`, `abcd = (abc)d`.
    pub fn left_normed(vars: &[Variable]) -> Result<Self, FreePolyError> {
        if vars.is_empty() {
            return Err(FreePolyError::EmptyProduct);
        }
        let mut seen = BTreeSet::new();
        for v in vars {
            if !seen.insert(v.id) {
                return Err(FreePolyError::DuplicateVariable(v.id));
            }
        }
        let mut iter = vars.iter();
        let mut acc = Monomial::leaf(*iter.next().unwrap());
        for v in iter {
            acc = Monomial::product(acc, Monomial::leaf(*v));
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Product(l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<Variable> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Variable>) {
        match self {
            Monomial::Leaf(v) => out.push(*v),
            Monomial::Product(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn is_multilinear(&self) -> bool {
        let leaves = self.leaves();
        let set: BTreeSet<u32> = leaves.iter().map(|v| v.id).collect();
        set.len() == leaves.len()
    }

    pub fn map_leaves(&self, f: &impl Fn(Variable) -> Variable) -> Monomial {
        match self {
            Monomial::Leaf(v) => Monomial::Leaf(f(*v)),
            Monomial::Product(l, r) => {
                Monomial::product(l.map_leaves(f), r.map_leaves(f))
            }
        }
    }

    /// Renders with the left-normed bracket elision: `((ab)c)d` prints as
    /// `a b c d`, while right factors keep their parentheses.
    pub fn display_with(&self, name: &impl Fn(Variable) -> String) -> String {
        match self {
            Monomial::Leaf(v) => name(*v),
            Monomial::Product(l, r) => {
                let left = l.display_with(name);
                let right = match **r {
                    Monomial::Leaf(_) => r.display_with(name),
                    Monomial::Product(..) => format!("({})", r.display_with(name)),
                };
                format!("{left} {right}")
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|v: Variable| format!("v{}", v.id)))
    }
}
