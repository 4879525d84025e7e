use std::fmt::Write as _;
use std::path::Path;

use hammock_core::{
    binomial_row, bound_polynomials, eval_nform, exact_coeffs, fmt_real, stanley_bounds,
    stanley_bounds_from_exact, unit_grid, Approximation, BoundsPair, ExactCoeffVector, HammockDims,
    KnownAnchors, TwoTerminalGraph,
};
use serde_json::{json, Value};

use crate::source::{anchors_for, exact_for};
use crate::{
    emit, ApproximateArgs, BoundsArgs, CompareArgs, CurvesArgs, ErrorBoundArgs, ExactArgs, Failure,
    Format, OutputArgs, SourceArgs, SplineArgs,
};

/// Right-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&parts.join("  "));
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn csv_text(headers: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::new("E_IO", e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::new("E_IO", e.to_string()))
}

fn json_text(v: &impl serde::Serialize) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn format_of(out: &OutputArgs, default: Format) -> Format {
    out.format.unwrap_or(default)
}

fn approximate_with(
    exact: &ExactCoeffVector,
    spline: &SplineArgs,
) -> Result<Approximation, Failure> {
    let anchors = KnownAnchors::from_exact(exact, spline.t, spline.s)?;
    Ok(hammock_core::approximate(&anchors, spline.mode())?)
}

pub fn exact(a: &ExactArgs) -> Result<String, Failure> {
    let (title, v) = match (&a.graph, a.l, a.w) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::new("E_IO", format!("{}: {e}", path.display())))?;
            let g: TwoTerminalGraph = text.parse()?;
            let title = format!(
                "graph {}: {} vertices, {} edges",
                path.display(),
                g.vertices(),
                g.edges().len()
            );
            (title, exact_coeffs(&g)?)
        }
        (None, Some(l), Some(w)) => {
            let dims = HammockDims::new(l, w)?;
            (format!("hammock {dims}"), exact_for(dims, &a.source)?)
        }
        _ => return Err(Failure::new("E_USAGE", "pass --l and --w, or --graph")),
    };
    let row = binomial_row(v.n());
    let rows: Vec<Vec<String>> = (0..=v.n())
        .map(|k| vec![k.to_string(), v.get(k).to_string(), row.get(k).to_string()])
        .collect();
    let headers = ["k", "N_k", "C(n,k)"];
    match format_of(&a.out, Format::Text) {
        Format::Json => json_text(&v),
        Format::Csv => csv_text(&headers, &rows),
        Format::Text => Ok(format!("{title}, n={}\n{}", v.n(), table(&headers, &rows))),
    }
}

pub fn approximate(a: &ApproximateArgs) -> Result<String, Failure> {
    let anchors = anchors_for(a)?;
    let out = hammock_core::approximate(&anchors, a.spline.mode())?;
    let (p, d) = (&out.primal, &out.dual);
    let (pr, dr) = (p.rounded(), d.rounded());
    let rows: Vec<Vec<String>> = (0..=p.n())
        .map(|k| {
            vec![
                k.to_string(),
                fmt_real(p.coeffs()[k]),
                pr[k].to_string(),
                fmt_real(d.coeffs()[k]),
                dr[k].to_string(),
            ]
        })
        .collect();
    match format_of(&a.out, Format::Text) {
        Format::Json => json_text(&json!({
            "primal": out.primal,
            "dual": out.dual,
            "model": out.model,
        })),
        Format::Csv => csv_text(
            &["k", "f_lw", "f_lw_rounded", "f_wl", "f_wl_rounded"],
            &rows,
        ),
        Format::Text => {
            let dims = anchors.dims();
            let params = out.model.params();
            let [ca, cb, cc, cd] = out.model.controls();
            let mut s = format!(
                "hammock {dims}, n={}, t={}, s={}, mode {}, bridge points {} and {}\n",
                dims.n(),
                anchors.t(),
                anchors.s(),
                match params.mode {
                    hammock_core::SolveMode::Unique => "unique",
                    hammock_core::SolveMode::General => "general",
                },
                params.x1,
                params.x2
            );
            s.push_str(&format!(
                "controls a={} b={} c={} d={}\n",
                fmt_real(ca),
                fmt_real(cb),
                fmt_real(cc),
                fmt_real(cd)
            ));
            s.push_str(&table(
                &["k", "f_(l,w)(k)", "rounded", "f_(w,l)(k)", "rounded"],
                &rows,
            ));
            Ok(s)
        }
    }
}

fn bounds_pair(a: &BoundsArgs) -> Result<BoundsPair, Failure> {
    let dims = a.dims.dims()?;
    if let (Some(nl), Some(nl1), Some(nnw1), Some(nnw)) = (a.nl, a.nl1, a.nnw1, a.nnw) {
        return Ok(stanley_bounds(
            dims,
            &nl.into(),
            &nl1.into(),
            &nnw1.into(),
            &nnw.into(),
        )?);
    }
    Ok(stanley_bounds_from_exact(&exact_for(dims, &a.source)?)?)
}

pub fn bounds(a: &BoundsArgs) -> Result<String, Failure> {
    let bp = bounds_pair(a)?;
    let rows: Vec<Vec<String>> = (0..=bp.n())
        .map(|k| {
            vec![
                k.to_string(),
                bp.lb()[k].to_string(),
                bp.ub()[k].to_string(),
            ]
        })
        .collect();
    let headers = ["k", "LB", "UB"];
    match format_of(&a.out, Format::Text) {
        Format::Json => json_text(&json!({
            "dims": bp.dims(),
            "lb": bp.lb_vector(),
            "ub": bp.ub_vector(),
        })),
        Format::Csv => csv_text(&headers, &rows),
        Format::Text => Ok(format!(
            "hammock {}, n={}\n{}",
            bp.dims(),
            bp.n(),
            table(&headers, &rows)
        )),
    }
}

/// Everything `compare` and `curves` share.
struct Run {
    dims: HammockDims,
    exact: ExactCoeffVector,
    approx: Approximation,
    bounds: BoundsPair,
    grid: Vec<f64>,
}

impl Run {
    fn new(
        dims: &crate::DimsArgs,
        src: &SourceArgs,
        spline: &SplineArgs,
        grid: u32,
    ) -> Result<Self, Failure> {
        let dims = dims.dims()?;
        let exact = exact_for(dims, src)?;
        let approx = approximate_with(&exact, spline)?;
        let bounds = stanley_bounds_from_exact(&exact)?;
        Ok(Run {
            dims,
            exact,
            approx,
            bounds,
            grid: unit_grid(grid as usize),
        })
    }

    /// Rows `p, h_exact, h_approx, h_dual_approx, lb, ub`.
    fn curve_rows(&self) -> Result<Vec<[f64; 6]>, Failure> {
        let (lb, ub) = bound_polynomials(&self.bounds, &self.grid)?;
        let mut rows = Vec::with_capacity(self.grid.len());
        for (i, &p) in self.grid.iter().enumerate() {
            rows.push([
                p,
                eval_nform(&self.exact, p)?,
                eval_nform(&self.approx.primal, p)?,
                eval_nform(&self.approx.dual, p)?,
                lb[i],
                ub[i],
            ]);
        }
        Ok(rows)
    }

    /// `(max |h - h~|, argmax p, max |1 - h~(p) - h~'(1-p)|)` over the grid.
    fn grid_errors(&self) -> Result<(f64, f64, f64), Failure> {
        let diff: Vec<f64> = self
            .exact
            .to_f64()
            .iter()
            .zip(self.approx.primal.coeffs())
            .map(|(e, a)| e - a)
            .collect();
        let (mut worst, mut at, mut cum) = (0.0f64, 0.0, 0.0f64);
        for &p in &self.grid {
            let e = eval_nform(&diff[..], p)?.abs();
            if e > worst {
                worst = e;
                at = p;
            }
            let h = eval_nform(&self.approx.primal, p)?;
            let hd = eval_nform(&self.approx.dual, 1.0 - p)?;
            cum = cum.max((1.0 - h - hd).abs());
        }
        Ok((worst, at, cum))
    }
}

const CURVE_HEADERS: [&str; 6] = ["p", "h_exact", "h_approx", "h_dual_approx", "lb", "ub"];

fn curve_csv(rows: &[[f64; 6]]) -> Result<String, Failure> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| fmt_real(x)).collect())
        .collect();
    csv_text(&CURVE_HEADERS, &text)
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::new("E_IO", format!("{}: {e}", path.display())))
}

pub fn compare(a: &CompareArgs) -> Result<(), Failure> {
    let run = Run::new(&a.dims, &a.source, &a.spline, a.grid)?;
    let eb = hammock_core::error_bound(run.dims)?;
    let (worst, at, cum) = run.grid_errors()?;
    let within = eb.admits(worst);
    let within_cum = cum <= eb.cumulative;

    let (l, n) = (run.dims.l(), run.dims.n());
    let top = n - run.dims.w();
    let binoms = binomial_row(n);
    let f = run.approx.primal.rounded();
    let rows: Vec<Vec<String>> = (l..=top)
        .map(|k| {
            vec![
                k.to_string(),
                run.bounds.lb()[k].to_string(),
                f[k].to_string(),
                run.exact.get(k).to_string(),
                run.bounds.ub()[k].to_string(),
                binoms.get(k).to_string(),
            ]
        })
        .collect();
    let headers = ["k", "LB", "f", "N_k", "UB", "C(n,k)"];
    let yes_no = |b: bool| if b { "yes" } else { "no" };

    let body = match format_of(&a.out, Format::Text) {
        Format::Csv => csv_text(&headers, &rows)?,
        Format::Json => {
            let table: Vec<Value> = (l..=top)
                .map(|k| {
                    json!({
                        "k": k,
                        "lb": run.bounds.lb()[k].to_string(),
                        "f": fmt_real(run.approx.primal.coeffs()[k]),
                        "f_rounded": f[k],
                        "n_k": run.exact.get(k).to_string(),
                        "ub": run.bounds.ub()[k].to_string(),
                        "binomial": binoms.get(k).to_string(),
                    })
                })
                .collect();
            json_text(&json!({
                "dims": run.dims,
                "params": run.approx.model.params(),
                "table": table,
                "grid": run.grid.len(),
                "max_error": fmt_real(worst),
                "max_error_at": fmt_real(at),
                "error_bound": fmt_real(eb.per_network),
                "within_bound": within,
                "max_complement_error": fmt_real(cum),
                "cumulative_bound": fmt_real(eb.cumulative),
                "within_cumulative_bound": within_cum,
            }))?
        }
        Format::Text => {
            let mut s = format!("hammock {}, n={n}\n", run.dims);
            s.push_str(&table(&headers, &rows));
            let _ = writeln!(s, "grid points: {}", run.grid.len());
            let _ = writeln!(
                s,
                "max |h - h~|: {} at p = {}",
                fmt_real(worst),
                fmt_real(at)
            );
            let _ = writeln!(s, "error bound: {}", fmt_real(eb.per_network));
            let _ = writeln!(s, "within bound: {}", yes_no(within));
            let _ = writeln!(s, "max |1 - h~(p) - h~'(1-p)|: {}", fmt_real(cum));
            let _ = writeln!(s, "cumulative bound: {}", fmt_real(eb.cumulative));
            let _ = writeln!(s, "within cumulative bound: {}", yes_no(within_cum));
            s
        }
    };
    if let Some(path) = &a.curves {
        write_file(path, &curve_csv(&run.curve_rows()?)?)?;
    }
    emit(&a.out, &body)?;
    if within && within_cum {
        Ok(())
    } else {
        Err(Failure::new(
            "E_BOUND",
            format!(
                "grid error {} exceeds the bound {}",
                fmt_real(worst),
                fmt_real(eb.per_network)
            ),
        ))
    }
}

pub fn error_bound(a: &ErrorBoundArgs) -> Result<String, Failure> {
    let dims = a.dims.dims()?;
    let eb = hammock_core::error_bound(dims)?;
    match format_of(&a.out, Format::Text) {
        Format::Json => json_text(&json!({
            "dims": dims,
            "n": dims.n(),
            "m": eb.m.to_string(),
            "exact": eb.exact.to_string(),
            "bound": fmt_real(eb.per_network),
            "cumulative": fmt_real(eb.cumulative),
        })),
        Format::Csv => csv_text(
            &["l", "w", "n", "m", "bound", "cumulative"],
            &[vec![
                dims.l().to_string(),
                dims.w().to_string(),
                dims.n().to_string(),
                eb.m.to_string(),
                fmt_real(eb.per_network),
                fmt_real(eb.cumulative),
            ]],
        ),
        Format::Text => Ok(format!(
            "hammock {dims}, n={}\nM = {}\nbound = {}\nbound (exact) = {}\ncumulative = {}\n",
            dims.n(),
            eb.m,
            fmt_real(eb.per_network),
            eb.exact,
            fmt_real(eb.cumulative)
        )),
    }
}

pub fn curves(a: &CurvesArgs) -> Result<String, Failure> {
    let run = Run::new(&a.dims, &a.source, &a.spline, a.grid)?;
    let format = format_of(&a.out, Format::Csv);
    if a.points {
        let dual = hammock_core::dual_coeffs(&run.exact)?;
        let headers = ["k", "N_k", "f_lw", "N_dual_k", "f_wl"];
        let rows: Vec<Vec<String>> = (0..=run.dims.n())
            .map(|k| {
                vec![
                    k.to_string(),
                    run.exact.get(k).to_string(),
                    fmt_real(run.approx.primal.coeffs()[k]),
                    dual.get(k).to_string(),
                    fmt_real(run.approx.dual.coeffs()[k]),
                ]
            })
            .collect();
        return match format {
            Format::Json => {
                let mut obj = serde_json::Map::new();
                for (c, h) in headers.iter().enumerate() {
                    obj.insert(
                        h.to_string(),
                        rows.iter().map(|r| Value::from(r[c].clone())).collect(),
                    );
                }
                json_text(&obj)
            }
            _ => csv_text(&headers, &rows),
        };
    }
    let rows = run.curve_rows()?;
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (c, h) in CURVE_HEADERS.iter().enumerate() {
                obj.insert(
                    h.to_string(),
                    rows.iter().map(|r| Value::from(r[c])).collect(),
                );
            }
            json_text(&obj)
        }
        _ => curve_csv(&rows),
    }
}
