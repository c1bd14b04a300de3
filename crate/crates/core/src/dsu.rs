/// Disjoint sets with union by size, a per-set integer weight, and rollback
/// to any earlier checkpoint. No path compression, so every change is a
/// constant-size log entry.
#[derive(Debug, Clone)]
pub struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    weight: Vec<i64>,
    log: Vec<Undo>,
}

#[derive(Debug, Clone, Copy)]
enum Undo {
    Union { child: usize, root: usize },
    Weight { root: usize, delta: i64 },
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], weight: vec![0; n], log: Vec::new() }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the sets of `a` and `b`; false if they were already one set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut x, mut y) = (self.find(a), self.find(b));
        if x == y {
            return false;
        }
        if self.size[x] < self.size[y] {
            std::mem::swap(&mut x, &mut y);
        }
        self.parent[y] = x;
        self.size[x] += self.size[y];
        self.weight[x] += self.weight[y];
        self.log.push(Undo::Union { child: y, root: x });
        true
    }

    pub fn add_weight(&mut self, x: usize, delta: i64) {
        if delta == 0 {
            return;
        }
        let root = self.find(x);
        self.weight[root] += delta;
        self.log.push(Undo::Weight { root, delta });
    }

    /// Weight of the set containing `x`.
    pub fn weight(&self, x: usize) -> i64 {
        self.weight[self.find(x)]
    }

    pub fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, checkpoint: usize) {
        while self.log.len() > checkpoint {
            match self.log.pop().expect("log entry") {
                Undo::Union { child, root } => {
                    self.parent[child] = child;
                    self.size[root] -= self.size[child];
                    self.weight[root] -= self.weight[child];
                }
                Undo::Weight { root, delta } => self.weight[root] -= delta,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn union_and_rollback() {
        let mut d = RollbackDsu::new(4);
        d.add_weight(0, 2);
        let t = d.checkpoint();
        assert!(d.union(0, 1));
        d.add_weight(1, 5);
        assert!(!d.union(1, 0));
        assert_eq!(d.weight(0), 7);
        d.rollback(t);
        assert!(!d.same(0, 1));
        assert_eq!(d.weight(0), 2);
        assert_eq!(d.weight(1), 0);
    }

    proptest! {
        #[test]
        fn rollback_restores_partition(ops in prop::collection::vec((0usize..8, 0usize..8), 0..20),
                                       more in prop::collection::vec((0usize..8, 0usize..8), 0..20)) {
            let mut d = RollbackDsu::new(8);
            for &(a, b) in &ops { d.union(a, b); }
            let before: Vec<bool> = (0..64).map(|i| d.same(i / 8, i % 8)).collect();
            let t = d.checkpoint();
            for &(a, b) in &more { d.union(a, b); d.add_weight(a, 1); }
            d.rollback(t);
            let after: Vec<bool> = (0..64).map(|i| d.same(i / 8, i % 8)).collect();
            prop_assert_eq!(before, after);
            prop_assert!((0..8).all(|v| d.weight(v) == 0));
        }
    }
}
