//! Trees as adjacency lists, generators for the families studied here
//! (uniform trees, paths, starlike trees) and the junction/trunk/branch
//! decomposition used by the spike estimator.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, TreeError};

/// An undirected tree on vertices `0..n`.
///
/// Construction always validates: the edge set must be connected and acyclic,
/// with no self-loops or repeated edges. Neighbor lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut dsu = DisjointSets::new(n);
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if !dsu.union(u, v) {
                return Err(TreeError::Cycle { u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        if edges.len() != n - 1 {
            // acyclic with fewer than n-1 edges
            let unreached = (0..n).find(|&v| dsu.find(v) != dsu.find(0)).unwrap_or(0);
            return Err(TreeError::Disconnected { unreached });
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Tree { adjacency })
    }

    /// A single isolated vertex.
    pub fn singleton() -> Self {
        Tree {
            adjacency: vec![Vec::new()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of vertices of degree exactly 3.
    pub fn t_junction_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.len() == 3).count()
    }

    /// Number of vertices of degree at least 3.
    pub fn junction_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.len() >= 3).count()
    }

    /// Edges `(u, v)` with `u < v`, in vertex order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Returns a copy of the tree with a new pendant vertex attached to `v`.
    pub fn with_pendant(&self, v: usize) -> Tree {
        let n = self.vertex_count();
        assert!(v < n, "vertex {v} out of range");
        let mut adjacency = self.adjacency.clone();
        adjacency[v].push(n);
        adjacency.push(vec![v]);
        Tree { adjacency }
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut adjacency = vec![Vec::new(); n];
        for (u, list) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adjacency[perm[u]] = mapped;
        }
        Tree { adjacency }
    }

    /// Breadth-first order from `root` together with the parent of each vertex
    /// (`usize::MAX` for the root).
    pub fn bfs_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Parameters of a uniform tree `H_{m,k}` with `t` T-junctions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformTreeSpec {
    /// Trunk length: degree-2 vertices between adjacent T-junctions.
    pub m: usize,
    /// Branch length: vertices per branch, pendant included.
    pub k: usize,
    /// Number of T-junctions.
    pub t: usize,
}

impl UniformTreeSpec {
    pub fn new(m: usize, k: usize, t: usize) -> Result<Self, Error> {
        let spec = UniformTreeSpec { m, k, t };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.t < 2 {
            return Err(Error::InvalidSpec("t must be ≥ 2".into()));
        }
        if self.k < 1 {
            return Err(Error::InvalidSpec("k must be ≥ 1".into()));
        }
        Ok(())
    }

    /// `t + (t-1)m + (t+2)k`
    pub fn vertex_count(&self) -> usize {
        self.t + (self.t - 1) * self.m + (self.t + 2) * self.k
    }
}

/// Builds `H_{m,k}`: a spine of `t` T-junctions separated by `m` trunk
/// vertices, one branch of `k` vertices on every interior junction and two on
/// each end junction, so every junction has degree 3.
///
/// Vertex numbering: spine left to right, then branches in spine order.
pub fn build_uniform_tree(spec: UniformTreeSpec) -> Result<Tree, Error> {
    spec.validate()?;
    let UniformTreeSpec { m, k, t } = spec;
    let n = spec.vertex_count();
    let spine_len = t + (t - 1) * m;
    let mut edges = Vec::with_capacity(n - 1);
    edges.extend((1..spine_len).map(|v| (v - 1, v)));

    let mut next = spine_len;
    for j in 0..t {
        let junction = j * (m + 1);
        let branches = if j == 0 || j == t - 1 { 2 } else { 1 };
        for _ in 0..branches {
            let mut prev = junction;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    debug_assert_eq!(next, n);
    Ok(Tree::from_edges(n, &edges)?)
}

/// The path `P_n` on vertices `0..n` in order.
pub fn build_path(n: usize) -> Result<Tree, Error> {
    if n == 0 {
        return Err(Error::InvalidSpec("path needs at least one vertex".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Tree::from_edges(n, &edges)?)
}

/// A starlike tree: center `0` with one path per entry of `arm_lengths`.
pub fn build_starlike(arm_lengths: &[usize]) -> Result<Tree, Error> {
    if arm_lengths.len() < 3 {
        return Err(Error::InvalidSpec(format!(
            "starlike tree needs at least 3 arms, got {}",
            arm_lengths.len()
        )));
    }
    if arm_lengths.contains(&0) {
        return Err(Error::InvalidSpec("arm lengths must be ≥ 1".into()));
    }
    let n = 1 + arm_lengths.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in arm_lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Tree::from_edges(n, &edges)?)
}

/// A maximal chain of degree-2 vertices joining two junctions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trunk {
    pub a: usize,
    pub b: usize,
    /// Interior (degree-2) vertex count; 0 when the junctions are adjacent.
    pub length: usize,
}

/// A path hanging off a junction and ending at a pendant vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub junction: usize,
    pub pendant: usize,
    /// Vertices on the branch excluding the junction.
    pub length: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// Vertices of degree ≥ 3, ascending.
    pub junctions: Vec<usize>,
    pub trunks: Vec<Trunk>,
    pub branches: Vec<Branch>,
    /// Set when the tree has no junction at all (a path).
    pub junction_free: bool,
}

impl Decomposition {
    /// Trunks incident to junction `v`.
    pub fn trunks_at(&self, v: usize) -> impl Iterator<Item = &Trunk> {
        self.trunks.iter().filter(move |tr| tr.a == v || tr.b == v)
    }
}

/// Splits a tree into junctions, trunks and branches by walking every maximal
/// degree-2 chain that leaves a junction.
pub fn decompose(tree: &Tree) -> Decomposition {
    let junctions: Vec<usize> = (0..tree.vertex_count())
        .filter(|&v| tree.degree(v) >= 3)
        .collect();
    let mut out = Decomposition {
        junction_free: junctions.is_empty(),
        ..Default::default()
    };
    for &start in &junctions {
        for &first in tree.neighbors(start) {
            let (mut prev, mut cur, mut interior) = (start, first, 0usize);
            while tree.degree(cur) == 2 {
                let next = tree.neighbors(cur).iter().copied().find(|&w| w != prev);
                // degree 2 always has a second neighbor
                let next = next.expect("degree-2 vertex with a single neighbor");
                prev = cur;
                cur = next;
                interior += 1;
            }
            if tree.degree(cur) >= 3 {
                // each trunk is seen from both ends; keep one
                if start < cur {
                    out.trunks.push(Trunk {
                        a: start,
                        b: cur,
                        length: interior,
                    });
                }
            } else {
                out.branches.push(Branch {
                    junction: start,
                    pendant: cur,
                    length: interior + 1,
                });
            }
        }
    }
    out.junctions = junctions;
    out
}
