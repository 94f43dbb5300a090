//! Disjoint-set forest with path halving and union by size.

use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns true if `i` and `j` were in different sets.
    pub(crate) fn union(&mut self, i: usize, j: usize) -> bool {
        let (mut ri, mut rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        if self.size[ri] < self.size[rj] {
            core::mem::swap(&mut ri, &mut rj);
        }
        self.parent[rj] = ri;
        self.size[ri] += self.size[rj];
        true
    }

    /// Members of each set, sets ordered by their smallest member.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = alloc::vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_after_unions() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(0, 3));
        assert!(uf.union(4, 3));
        assert!(!uf.union(0, 4));
        assert!(uf.union(1, 5));
        assert_eq!(uf.groups(), [alloc::vec![0, 3, 4], alloc::vec![1, 5], alloc::vec![2]]);
    }
}
