//! Second counting route: enumerate every simple source-terminal path as an
//! edge mask, then test each subset for containment of some path. Shares
//! nothing with the union-find walk.

use super::graph::TwoTerminalGraph;
use crate::error::{Error, Result};
use crate::poly::ExactCoeffVector;

/// Edge cap for the path-set route (it scans all `2^n` masks directly).
pub const PATH_SET_CAP: usize = 20;

/// Edge masks of all simple source-terminal paths. Parallel edges give
/// distinct paths.
pub fn simple_path_masks(g: &TwoTerminalGraph) -> Vec<u64> {
    let mut adj = vec![Vec::new(); g.vertices()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertices()];
    on_path[g.source()] = true;
    extend(&adj, g.source(), g.terminal(), 0, &mut on_path, &mut out);
    out
}

fn extend(
    adj: &[Vec<(usize, usize)>],
    at: usize,
    target: usize,
    mask: u64,
    on_path: &mut [bool],
    out: &mut Vec<u64>,
) {
    if at == target {
        out.push(mask);
        return;
    }
    for &(next, e) in &adj[at] {
        if !on_path[next] {
            on_path[next] = true;
            extend(adj, next, target, mask | 1 << e, on_path, out);
            on_path[next] = false;
        }
    }
}

pub fn exact_coeffs_by_paths(g: &TwoTerminalGraph) -> Result<ExactCoeffVector> {
    let n = g.edges().len();
    if n > PATH_SET_CAP {
        return Err(Error::EdgeCap {
            edges: n,
            cap: PATH_SET_CAP,
        });
    }
    let paths = simple_path_masks(g);
    let mut counts = vec![0u64; n + 1];
    for subset in 0u64..1 << n {
        if paths.iter().any(|&p| subset & p == p) {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    ExactCoeffVector::from_u64(&counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bridge_network_paths() {
        // Wheatstone bridge: s=0, t=3, middle rung 1-2
        let g =
            TwoTerminalGraph::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)], 0, 3).unwrap();
        let mut masks = simple_path_masks(&g);
        masks.sort_unstable();
        assert_eq!(masks, vec![0b00101, 0b01010, 0b10110, 0b11001]);
        let v = exact_coeffs_by_paths(&g).unwrap();
        assert_eq!(v, ExactCoeffVector::from_u64(&[0, 0, 2, 8, 5, 1]).unwrap());
    }
}
