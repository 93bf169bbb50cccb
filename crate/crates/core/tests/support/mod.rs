//! Independent oracles and random tree generators shared by the
//! integration tests. Nothing here calls into the elimination code.

#![allow(dead_code)]

use dendrite_core::{Inertia, Tree};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn dense_laplacian(tree: &Tree) -> Vec<Vec<i64>> {
    let n = tree.vertex_count();
    let mut l = vec![vec![0i64; n]; n];
    for (u, v) in tree.edges() {
        l[u][v] -= 1;
        l[v][u] -= 1;
        l[u][u] += 1;
        l[v][v] += 1;
    }
    l
}

/// Coefficients of `det(xI - A)`, lowest degree first, by Faddeev–LeVerrier
/// in exact arithmetic.
pub fn charpoly(a: &[Vec<i64>]) -> Vec<BigRational> {
    let n = a.len();
    let a: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::from_integer(1.into());
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !m[l][j].is_zero() {
                        s += &a[i][l] * &m[l][j];
                    }
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &m[l][i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Taylor shift: coefficients of `p(y + tau)`.
fn shift(p: &[BigRational], tau: &BigRational) -> Vec<BigRational> {
    let mut q = p.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &q[j + 1] * tau;
            q[j] += t;
        }
    }
    q
}

/// Inertia of `A - τI` from the characteristic polynomial of a symmetric `A`.
///
/// All roots are real, so Descartes' rule of signs on `p(y + τ)` is exact:
/// trailing zero coefficients count roots at `τ`, sign variations count
/// roots above it.
pub fn charpoly_inertia(coeffs: &[BigRational], tau: &BigRational) -> Inertia {
    let n = coeffs.len() - 1;
    let q = shift(coeffs, tau);
    let n_zero = q.iter().take_while(|c| c.is_zero()).count();
    let signs: Vec<bool> = q[n_zero..]
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    let n_pos = signs.windows(2).filter(|w| w[0] != w[1]).count();
    Inertia {
        n_neg: n - n_zero - n_pos,
        n_zero,
        n_pos,
    }
}

/// Dense symmetric eigensolve, ascending.
pub fn dense_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j]);
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

pub fn dense_tree_eigenvalues(tree: &Tree) -> Vec<f64> {
    let l: Vec<Vec<f64>> = dense_laplacian(tree)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    dense_eigenvalues(&l)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    let mut det = 0.0;
    for j in 0..n {
        if a[0][j] == 0.0 {
            continue;
        }
        let minor: Vec<Vec<f64>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * a[0][j] * cofactor_det(&minor);
    }
    det
}

/// Uniform random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Tree {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|v| (perm[rng.random_range(0..v)], perm[v]))
        .collect();
    Tree::from_edges(n, &edges).unwrap()
}

/// Random tree with maximum degree 3.
pub fn random_tree_max_deg3<R: Rng>(rng: &mut R, n: usize) -> Tree {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < 3).collect();
        let u = open[rng.random_range(0..open.len())];
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Tree::from_edges(n, &edges).unwrap()
}

/// Segments of uniform trees glued into one tree.
///
/// Each segment is a spine of `t` junctions with trunk length `m`. Every
/// segment after the first hangs off a random junction of the earlier ones
/// through a connector as long as a branch. Finally each junction is topped
/// up to degree 3 with branches of length `min_branch..=max_branch`.
pub fn uniform_mixture<R: Rng>(rng: &mut R, min_branch: usize, max_branch: usize) -> Tree {
    let mut degree: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut junctions: Vec<usize> = Vec::new();

    fn add_vertex(degree: &mut Vec<usize>) -> usize {
        degree.push(0);
        degree.len() - 1
    }
    fn link(
        path: usize,
        a: usize,
        b: usize,
        degree: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
    ) {
        let mut prev = a;
        for _ in 0..path {
            let v = add_vertex(degree);
            edges.push((prev, v));
            degree[prev] += 1;
            degree[v] += 1;
            prev = v;
        }
        edges.push((prev, b));
        degree[prev] += 1;
        degree[b] += 1;
    }

    let segments = rng.random_range(1..=4);
    for s in 0..segments {
        let m = rng.random_range(0..=3usize);
        let t = rng.random_range(2..=6usize);
        let first = add_vertex(&mut degree);
        if s > 0 {
            let open: Vec<usize> = junctions
                .iter()
                .copied()
                .filter(|&j| degree[j] < 3)
                .collect();
            let host = open[rng.random_range(0..open.len())];
            let connector = rng.random_range(min_branch..=max_branch);
            link(connector, host, first, &mut degree, &mut edges);
        }
        junctions.push(first);
        let mut prev = first;
        for _ in 1..t {
            let j = add_vertex(&mut degree);
            link(m, prev, j, &mut degree, &mut edges);
            junctions.push(j);
            prev = j;
        }
    }
    for &j in &junctions {
        while degree[j] < 3 {
            let len = rng.random_range(min_branch..=max_branch);
            let mut prev = j;
            for _ in 0..len {
                let v = add_vertex(&mut degree);
                edges.push((prev, v));
                degree[prev] += 1;
                degree[v] += 1;
                prev = v;
            }
        }
    }
    Tree::from_edges(degree.len(), &edges).unwrap()
}
