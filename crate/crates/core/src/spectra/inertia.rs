use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::tree::Tree;

/// Signature of `L - τI`: how many eigenvalues lie below, at and above `τ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.n_neg + self.n_zero + self.n_pos
    }

    /// Eigenvalues at or above `τ`.
    pub fn at_or_above(&self) -> usize {
        self.n_zero + self.n_pos
    }

    fn record(&mut self, sign: Sign) {
        match sign {
            Sign::Neg => self.n_neg += 1,
            Sign::Zero => self.n_zero += 1,
            Sign::Pos => self.n_pos += 1,
        }
    }
}

#[derive(Clone, Copy)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Scalar field the elimination runs over.
trait Pivot: Default {
    fn sign(&self) -> Sign;
    /// `self -= 1 / other`, with `other` nonzero.
    fn sub_recip(&mut self, other: &Self);
}

impl Pivot for BigRational {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_negative() {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    fn sub_recip(&mut self, other: &Self) {
        *self -= other.recip();
    }
}

impl Pivot for f64 {
    fn sign(&self) -> Sign {
        if *self < 0.0 {
            Sign::Neg
        } else if *self > 0.0 {
            Sign::Pos
        } else {
            Sign::Zero
        }
    }

    fn sub_recip(&mut self, other: &Self) {
        *self -= other.recip();
    }
}

/// Bottom-up elimination of `L - τI` over a rooted tree.
///
/// Each vertex starts at `deg(v) - τ` and absorbs `-1/d(c)` from every child
/// still attached to it. A child whose value is exactly zero forms a 2x2 pivot
/// with its parent: the pair contributes one positive and one negative
/// eigenvalue and the parent is detached from its own parent.
fn eliminate<P: Pivot>(tree: &Tree, mut value: Vec<P>) -> Inertia {
    let (order, parent) = tree.bfs_order(0);
    let mut detached = vec![false; tree.vertex_count()];
    let mut inertia = Inertia::default();

    for &v in order.iter().rev() {
        let children = || {
            tree.neighbors(v)
                .iter()
                .copied()
                .filter(|&c| c != parent[v] && !detached[c])
        };
        if let Some(z) = children().find(|&c| matches!(value[c].sign(), Sign::Zero)) {
            inertia.n_pos += 1;
            inertia.n_neg += 1;
            for c in children().filter(|&c| c != z) {
                inertia.record(value[c].sign());
            }
            detached[v] = true;
        } else {
            let mut acc = std::mem::take(&mut value[v]);
            for c in children() {
                acc.sub_recip(&value[c]);
                inertia.record(value[c].sign());
            }
            value[v] = acc;
        }
    }
    let root = order[0];
    if !detached[root] {
        inertia.record(value[root].sign());
    }
    debug_assert_eq!(inertia.total(), tree.vertex_count());
    inertia
}

/// Exact inertia of `L - τI`.
pub fn inertia_at(tree: &Tree, tau: &BigRational) -> Inertia {
    let value = (0..tree.vertex_count())
        .map(|v| BigRational::from_integer(BigInt::from(tree.degree(v))) - tau)
        .collect();
    eliminate(tree, value)
}

/// Exact inertia of `L - τI` for integer `τ`.
pub fn inertia_at_int(tree: &Tree, tau: i64) -> Inertia {
    inertia_at(tree, &BigRational::from_integer(BigInt::from(tau)))
}

/// Number of Laplacian eigenvalues `≥ 4`, computed exactly.
pub fn count_n4plus(tree: &Tree) -> usize {
    inertia_at_int(tree, 4).at_or_above()
}

/// Floating-point count of eigenvalues strictly below `τ`.
///
/// Same elimination as [`inertia_at`] in `f64`; reliable away from the
/// eigenvalues themselves, which is all bisection needs.
pub fn count_below(tree: &Tree, tau: f64) -> usize {
    let value = (0..tree.vertex_count())
        .map(|v| tree.degree(v) as f64 - tau)
        .collect();
    eliminate(tree, value).n_neg
}
