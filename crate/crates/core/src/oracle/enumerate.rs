//! Exhaustive count of connecting edge subsets.
//!
//! Subsets are walked depth-first, deciding one edge at a time, over a
//! union-find that supports rollback (union by rank, no path compression).
//! Each step of the walk adds or removes a single edge. Once source and
//! terminal are joined every completion of the current partial subset
//! connects too, so those `2^r` subsets are counted in one step with
//! binomial weights. The first few edge decisions are split across rayon
//! workers, each with a private union-find and counter array.

use rayon::prelude::*;

use super::graph::TwoTerminalGraph;

/// Edges decided up front to form independent work items.
const PREFIX_BITS: usize = 10;

struct RollbackDsu {
    parent: Vec<u32>,
    rank: Vec<u8>,
    history: Vec<(u32, bool)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            history: Vec::with_capacity(64),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a as u32), self.find(b as u32));
        if a == b {
            return;
        }
        if self.rank[a as usize] < self.rank[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        // b hangs under a
        self.parent[b as usize] = a;
        let bumped = self.rank[a as usize] == self.rank[b as usize];
        if bumped {
            self.rank[a as usize] += 1;
        }
        self.history.push((b, bumped));
    }

    fn mark(&self) -> usize {
        self.history.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let (b, bumped) = self.history.pop().expect("history above mark");
            let a = self.parent[b as usize];
            self.parent[b as usize] = b;
            if bumped {
                self.rank[a as usize] -= 1;
            }
        }
    }

    fn connected(&self, a: usize, b: usize) -> bool {
        self.find(a as u32) == self.find(b as u32)
    }
}

struct Walker<'a> {
    edges: &'a [(usize, usize)],
    source: usize,
    terminal: usize,
    pascal: &'a [Vec<u64>],
}

impl Walker<'_> {
    fn walk(&self, idx: usize, chosen: usize, dsu: &mut RollbackDsu, counts: &mut [u64]) {
        if dsu.connected(self.source, self.terminal) {
            let rest = self.edges.len() - idx;
            for (j, c) in self.pascal[rest].iter().enumerate() {
                counts[chosen + j] += c;
            }
            return;
        }
        if idx == self.edges.len() {
            return;
        }
        let mark = dsu.mark();
        let (u, v) = self.edges[idx];
        dsu.union(u, v);
        self.walk(idx + 1, chosen + 1, dsu, counts);
        dsu.rollback(mark);
        self.walk(idx + 1, chosen, dsu, counts);
    }
}

fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![1u64; r + 1];
        for k in 1..r {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

/// `counts[k]` = number of `k`-edge subsets joining source and terminal.
/// Callers enforce the edge cap; counts fit `u64` for up to 62 edges.
pub(crate) fn count_connecting(g: &TwoTerminalGraph) -> Vec<u64> {
    let edges = g.edges();
    let n = edges.len();
    let table = pascal(n);
    let walker = Walker {
        edges,
        source: g.source(),
        terminal: g.terminal(),
        pascal: &table,
    };
    let split = n.min(PREFIX_BITS);

    (0u64..1 << split)
        .into_par_iter()
        .fold(
            || (RollbackDsu::new(g.vertices()), vec![0u64; n + 1]),
            |(mut dsu, mut counts), prefix| {
                let mark = dsu.mark();
                for (i, &(u, v)) in edges.iter().enumerate().take(split) {
                    if prefix >> i & 1 == 1 {
                        dsu.union(u, v);
                    }
                }
                walker.walk(split, prefix.count_ones() as usize, &mut dsu, &mut counts);
                dsu.rollback(mark);
                (dsu, counts)
            },
        )
        .map(|(_, counts)| counts)
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rollback_restores_state() {
        let mut d = RollbackDsu::new(5);
        d.union(0, 1);
        let m = d.mark();
        d.union(1, 2);
        d.union(3, 4);
        d.union(2, 4);
        assert!(d.connected(0, 3));
        d.rollback(m);
        assert!(d.connected(0, 1));
        assert!(!d.connected(0, 2));
        assert!(!d.connected(3, 4));
        assert_eq!(d.rank.iter().map(|&r| r as u32).sum::<u32>(), 1);
    }

    #[test]
    fn triangle_counts() {
        // s-t direct edge plus a two-edge detour
        let g = TwoTerminalGraph::new(3, vec![(0, 1), (0, 2), (2, 1)], 0, 1).unwrap();
        assert_eq!(count_connecting(&g), vec![0, 1, 3, 1]);
    }

    #[test]
    fn no_edges() {
        let g = TwoTerminalGraph::new(2, vec![], 0, 1).unwrap();
        assert_eq!(count_connecting(&g), vec![0]);
    }
}
