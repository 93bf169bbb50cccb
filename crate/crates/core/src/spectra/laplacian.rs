use crate::tree::Tree;

/// Read-only view of `L = D - A` for a tree. Entries are integers.
#[derive(Debug, Clone, Copy)]
pub struct LaplacianView<'a> {
    tree: &'a Tree,
}

pub fn laplacian_entries(tree: &Tree) -> LaplacianView<'_> {
    LaplacianView { tree }
}

impl LaplacianView<'_> {
    pub fn dim(&self) -> usize {
        self.tree.vertex_count()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.tree.degree(i) as i64
        } else if self.tree.neighbors(i).binary_search(&j).is_ok() {
            -1
        } else {
            0
        }
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.get(i, i)).collect()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}
