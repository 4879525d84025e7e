//! Where exact coefficients and anchors come from.

use std::path::Path;

use hammock_core::oracle::hammock_coeffs;
use hammock_core::{ExactCoeffVector, HammockDims, KnownAnchors};
use serde::Deserialize;

use crate::{ApproximateArgs, Failure, SourceArgs};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new("E_IO", format!("{}: {e}", path.display())))
}

fn load_exact(path: &Path, dims: HammockDims) -> Result<ExactCoeffVector, Failure> {
    let v: ExactCoeffVector = serde_json::from_str(&read(path)?)?;
    match v.dims() {
        Some(d) if d != dims => Err(Failure::new(
            "E_DIMS",
            format!("{} holds {d}, expected {dims}", path.display()),
        )),
        Some(_) => Ok(v),
        None => Ok(v.with_dims(dims)?),
    }
}

/// Exact file, then fixture directory, then enumeration.
pub fn exact_for(dims: HammockDims, src: &SourceArgs) -> Result<ExactCoeffVector, Failure> {
    if let Some(path) = &src.exact_file {
        return load_exact(path, dims);
    }
    if let Some(dir) = &src.fixture_dir {
        let path = dir.join(format!("hammock_l{}_w{}.json", dims.l(), dims.w()));
        if path.is_file() {
            return load_exact(&path, dims);
        }
    }
    Ok(hammock_coeffs(dims, src.variant.into())?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AnchorsFile {
    t: usize,
    s: usize,
    n_l: u64,
    n_lt: u64,
    n_w_dual: u64,
    n_ws_dual: u64,
}

pub fn anchors_for(a: &ApproximateArgs) -> Result<KnownAnchors, Failure> {
    let dims = a.dims.dims()?;
    let (t, s) = (a.spline.t, a.spline.s);
    if let (Some(nl), Some(nlt), Some(nw), Some(nws)) = (a.nl, a.nlt, a.nw_dual, a.nws_dual) {
        return Ok(KnownAnchors::from_u64(dims, t, s, nl, nlt, nw, nws)?);
    }
    if let Some(path) = &a.anchors_file {
        let f: AnchorsFile = serde_json::from_str(&read(path)?)?;
        return Ok(KnownAnchors::from_u64(
            dims,
            f.t,
            f.s,
            f.n_l,
            f.n_lt,
            f.n_w_dual,
            f.n_ws_dual,
        )?);
    }
    if a.auto_anchors {
        return Ok(KnownAnchors::from_exact(
            &exact_for(dims, &a.source)?,
            t,
            s,
        )?);
    }
    Err(Failure::new(
        "E_ANCHORS",
        "no anchors: pass --auto-anchors, --anchors-file or --nl/--nlt/--nw-dual/--nws-dual",
    ))
}
