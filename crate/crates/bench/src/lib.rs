//! Inputs shared by the criterion benches.

use hammock_core::{HammockDims, KnownAnchors};

pub fn dims_5x3() -> HammockDims {
    HammockDims::new(5, 3).expect("valid dims")
}

pub fn dims_5x5() -> HammockDims {
    HammockDims::new(5, 5).expect("valid dims")
}

/// Anchors of the l=5, w=3 hammock with s = t = 1.
pub fn anchors_5x3() -> KnownAnchors {
    KnownAnchors::from_u64(dims_5x3(), 1, 1, 21, 194, 16, 178).expect("valid anchors")
}

/// Anchors of the self-dual l=w=5 hammock with s = t = 1.
pub fn anchors_5x5() -> KnownAnchors {
    KnownAnchors::from_u64(dims_5x5(), 1, 1, 52, 994, 52, 994).expect("valid anchors")
}
