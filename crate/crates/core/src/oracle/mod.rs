//! Exact ground truth for N-form coefficients by exhaustive enumeration.

mod enumerate;
mod graph;
mod hammock;
mod paths;

pub use graph::TwoTerminalGraph;
pub use hammock::{make_hammock, HammockVariant};
pub use paths::{exact_coeffs_by_paths, simple_path_masks, PATH_SET_CAP};

use crate::error::{Error, Result};
use crate::poly::{ExactCoeffVector, HammockDims};

/// Largest edge count accepted by [`exact_coeffs`].
pub const EDGE_CAP: usize = 30;

/// `N_k` for every `k`: the number of `k`-edge subsets connecting source to
/// terminal.
pub fn exact_coeffs(g: &TwoTerminalGraph) -> Result<ExactCoeffVector> {
    let n = g.edges().len();
    if n > EDGE_CAP {
        return Err(Error::EdgeCap {
            edges: n,
            cap: EDGE_CAP,
        });
    }
    ExactCoeffVector::from_u64(&enumerate::count_connecting(g))
}

/// Exact coefficients of a generated hammock, tagged with its dimensions.
pub fn hammock_coeffs(dims: HammockDims, variant: HammockVariant) -> Result<ExactCoeffVector> {
    if dims.n() > EDGE_CAP {
        return Err(Error::EdgeCap {
            edges: dims.n(),
            cap: EDGE_CAP,
        });
    }
    exact_coeffs(&make_hammock(dims, variant))?.with_dims(dims)
}

/// Entries where a variant's coefficients differ from the expected table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantMismatch {
    pub variant: HammockVariant,
    /// `(k, expected, computed)`.
    pub diffs: Vec<(usize, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conformance {
    pub matched: Option<HammockVariant>,
    pub mismatches: Vec<VariantMismatch>,
}

/// Finds the brick variant whose exact coefficients equal `expected`.
/// Variants are tried in order; the first match wins.
pub fn conformance_variant(dims: HammockDims, expected: &ExactCoeffVector) -> Result<Conformance> {
    let mut mismatches = Vec::new();
    for variant in HammockVariant::ALL {
        let got = hammock_coeffs(dims, variant)?;
        if got.coeffs() == expected.coeffs() {
            return Ok(Conformance {
                matched: Some(variant),
                mismatches,
            });
        }
        let len = got.coeffs().len().max(expected.coeffs().len());
        let show = |v: &ExactCoeffVector, k: usize| {
            v.coeffs()
                .get(k)
                .map_or_else(|| "-".to_string(), |c| c.to_string())
        };
        let diffs = (0..len)
            .filter(|&k| got.coeffs().get(k) != expected.coeffs().get(k))
            .map(|k| (k, show(expected, k), show(&got, k)))
            .collect();
        mismatches.push(VariantMismatch { variant, diffs });
    }
    Ok(Conformance {
        matched: None,
        mismatches,
    })
}
