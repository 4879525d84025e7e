use std::fmt;

use super::graph::TwoTerminalGraph;
use crate::poly::HammockDims;

/// Parity of the brick pattern of junctions between neighbouring wires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HammockVariant {
    /// Rows `i` and `i+1` are joined at column `j` when `i + j` is even.
    BrickA,
    /// Rows `i` and `i+1` are joined at column `j` when `i + j` is odd.
    BrickB,
}

impl HammockVariant {
    pub const ALL: [HammockVariant; 2] = [HammockVariant::BrickA, HammockVariant::BrickB];

    fn parity(self) -> usize {
        match self {
            HammockVariant::BrickA => 0,
            HammockVariant::BrickB => 1,
        }
    }
}

impl fmt::Display for HammockVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HammockVariant::BrickA => "brick-a",
            HammockVariant::BrickB => "brick-b",
        })
    }
}

struct Merge(Vec<usize>);

impl Merge {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn join(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// `w` wires of `l` devices between source and terminal, with adjacent
/// wires shorted together at alternate interior columns. Junctions are
/// vertex identifications, so the graph has exactly `l * w` edges.
pub fn make_hammock(dims: HammockDims, variant: HammockVariant) -> TwoTerminalGraph {
    let (l, w) = (dims.l(), dims.w());
    // grid point (row i, column j), j = 0..=l
    let id = |i: usize, j: usize| i * (l + 1) + j;
    let mut merge = Merge((0..w * (l + 1)).collect());
    for i in 1..w {
        merge.join(id(0, 0), id(i, 0));
        merge.join(id(0, l), id(i, l));
    }
    for j in 1..l {
        for i in 0..w.saturating_sub(1) {
            if (i + j) % 2 == variant.parity() {
                merge.join(id(i, j), id(i + 1, j));
            }
        }
    }

    // relabel classes densely: source 0, terminal 1, the rest in scan order
    let mut label = vec![usize::MAX; w * (l + 1)];
    let source = merge.find(id(0, 0));
    let terminal = merge.find(id(0, l));
    label[source] = 0;
    label[terminal] = 1;
    let mut next = 2;
    let mut vertex = |merge: &mut Merge, p: usize| {
        let root = merge.find(p);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        label[root]
    };
    let mut edges = Vec::with_capacity(l * w);
    for i in 0..w {
        for j in 0..l {
            let u = vertex(&mut merge, id(i, j));
            let v = vertex(&mut merge, id(i, j + 1));
            edges.push((u, v));
        }
    }
    TwoTerminalGraph::new(next, edges, 0, 1).expect("hammock construction is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_and_vertex_counts() {
        let g = make_hammock(HammockDims::new(5, 3).unwrap(), HammockVariant::BrickA);
        assert_eq!(g.edges().len(), 15);
        // 3 rows * 4 interior columns = 12 points, 4 merges leave 8, plus s and t
        assert_eq!(g.vertices(), 10);
    }

    #[test]
    fn single_column_is_parallel() {
        let g = make_hammock(HammockDims::new(1, 4).unwrap(), HammockVariant::BrickB);
        assert_eq!(g.vertices(), 2);
        assert!(g.edges().iter().all(|&e| e == (0, 1)));
    }

    #[test]
    fn single_wire_is_series() {
        let g = make_hammock(HammockDims::new(4, 1).unwrap(), HammockVariant::BrickA);
        assert_eq!(g.vertices(), 5);
        assert_eq!(g.edges(), &[(0, 2), (2, 3), (3, 4), (4, 1)]);
    }
}
