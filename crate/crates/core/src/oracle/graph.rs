use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Undirected multigraph with a distinguished source and terminal. Each
/// edge is one device.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTerminalGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    source: usize,
    terminal: usize,
}

impl TwoTerminalGraph {
    pub fn new(
        vertices: usize,
        edges: Vec<(usize, usize)>,
        source: usize,
        terminal: usize,
    ) -> Result<Self> {
        if source >= vertices || terminal >= vertices {
            return Err(Error::Graph(format!(
                "source {source} / terminal {terminal} out of range for {vertices} vertices"
            )));
        }
        if source == terminal {
            return Err(Error::Graph("source and terminal coincide".into()));
        }
        if let Some((i, &(u, v))) = edges
            .iter()
            .enumerate()
            .find(|(_, &(u, v))| u >= vertices || v >= vertices)
        {
            return Err(Error::Graph(format!(
                "edge {i} ({u}, {v}) has an endpoint out of range"
            )));
        }
        Ok(TwoTerminalGraph {
            vertices,
            edges,
            source,
            terminal,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn terminal(&self) -> usize {
        self.terminal
    }

    /// Same graph with its edge list reordered by `perm` (`perm[i]` is the
    /// old index of new edge `i`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.edges.len()];
        if perm.len() != self.edges.len()
            || perm
                .iter()
                .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::Graph("not a permutation of the edge list".into()));
        }
        let edges = perm.iter().map(|&i| self.edges[i]).collect();
        Ok(TwoTerminalGraph { edges, ..*self })
    }

    /// Text form: `n_vertices source terminal`, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.vertices, self.source, self.terminal);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl FromStr for TwoTerminalGraph {
    type Err = Error;

    /// Blank lines and `#` comments are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let parse_fields = |lineno: usize, line: &str, want: usize| -> Result<Vec<usize>> {
            let fields = line
                .split_whitespace()
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("line {lineno}: {f:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if fields.len() != want {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected {want} fields, found {}",
                    fields.len()
                )));
            }
            Ok(fields)
        };

        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph description".into()))?;
        let h = parse_fields(lineno, header, 3)?;
        let edges = lines
            .map(|(lineno, l)| parse_fields(lineno, l, 2).map(|f| (f[0], f[1])))
            .collect::<Result<Vec<_>>>()?;
        TwoTerminalGraph::new(h[0], edges, h[1], h[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let g: TwoTerminalGraph = "# series pair\n3 0 2\n0 1\n\n1 2 # second\n"
            .parse()
            .unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.to_text().parse::<TwoTerminalGraph>().unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<TwoTerminalGraph>().is_err());
        assert!("2 0".parse::<TwoTerminalGraph>().is_err());
        assert!("2 0 1\n0 x".parse::<TwoTerminalGraph>().is_err());
        assert!("2 0 1\n0 1 1".parse::<TwoTerminalGraph>().is_err());
        assert!("2 0 1\n0 5".parse::<TwoTerminalGraph>().is_err());
        assert!("2 1 1\n0 1".parse::<TwoTerminalGraph>().is_err());
    }

    #[test]
    fn permutation_checked() {
        let g = TwoTerminalGraph::new(3, vec![(0, 1), (1, 2), (0, 2)], 0, 2).unwrap();
        assert_eq!(
            g.permuted(&[2, 0, 1]).unwrap().edges(),
            &[(0, 2), (0, 1), (1, 2)]
        );
        assert!(g.permuted(&[0, 0, 1]).is_err());
        assert!(g.permuted(&[0, 1]).is_err());
    }
}
