//! Small dense linear systems.
//!
//! Systems are assembled with exact integer entries. A 2x2 system is solved
//! by the determinant formula in exact arithmetic; anything larger goes
//! through Gaussian elimination with partial pivoting in `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Pivots below this fraction of the row scale are treated as zero.
pub const PIVOT_TOLERANCE: f64 = 1e-12;
/// Maximum accepted relative residual of a solved system.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Square system `A x = b` with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSystem {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
}

impl IntegerSystem {
    pub fn new(rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rhs.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Length {
                expected: dim,
                got: rhs.len(),
            });
        }
        Ok(IntegerSystem { rows, rhs })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[BigInt] {
        &self.rhs
    }

    pub fn to_f64(&self) -> (Vec<Vec<f64>>, Vec<f64>) {
        let m = self
            .rows
            .iter()
            .map(|r| r.iter().map(big_to_f64).collect())
            .collect();
        let b = self.rhs.iter().map(big_to_f64).collect();
        (m, b)
    }

    /// Largest `|A_i x - b_i| / max(|b_i|, sum_j |A_ij x_j|)` over the rows.
    pub fn relative_residual(&self, x: &[f64]) -> f64 {
        let (m, b) = self.to_f64();
        relative_residual(&m, &b, x)
    }
}

fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn relative_residual(m: &[Vec<f64>], b: &[f64], x: &[f64]) -> f64 {
    m.iter()
        .zip(b)
        .map(|(row, &bi)| {
            let ax: f64 = row.iter().zip(x).map(|(a, xi)| a * xi).sum();
            let scale = row
                .iter()
                .zip(x)
                .map(|(a, xi)| (a * xi).abs())
                .sum::<f64>()
                .max(bi.abs());
            if scale == 0.0 {
                0.0
            } else {
                (ax - bi).abs() / scale
            }
        })
        .fold(0.0, f64::max)
}

/// Exact solution of a 2x2 integer system by Cramer's rule.
pub fn solve_2x2_exact(sys: &IntegerSystem) -> Result<[BigRational; 2]> {
    if sys.dim() != 2 {
        return Err(Error::Length {
            expected: 2,
            got: sys.dim(),
        });
    }
    let [a11, a12] = [&sys.rows[0][0], &sys.rows[0][1]];
    let [a21, a22] = [&sys.rows[1][0], &sys.rows[1][1]];
    let [b1, b2] = [&sys.rhs[0], &sys.rhs[1]];
    let det = a11 * a22 - a12 * a21;
    if det.is_zero() {
        return Err(Error::Singular("2x2 determinant is zero".into()));
    }
    let x = BigRational::new(b1 * a22 - a12 * b2, det.clone());
    let y = BigRational::new(a11 * b2 - a21 * b1, det);
    Ok([x, y])
}

/// Gaussian elimination with partial pivoting.
pub fn gauss_solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let dim = m.len();
    if b.len() != dim || m.iter().any(|r| r.len() != dim) {
        return Err(Error::Length {
            expected: dim,
            got: b.len(),
        });
    }
    let mut scale_of: Vec<f64> = m
        .iter()
        .map(|r| r.iter().fold(0.0f64, |acc, v| acc.max(v.abs())))
        .collect();
    if let Some(i) = scale_of.iter().position(|&s| s == 0.0) {
        return Err(Error::Singular(format!("row {i} is zero")));
    }

    for col in 0..dim {
        let pivot = (col..dim)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty pivot range");
        if m[pivot][col].abs() < PIVOT_TOLERANCE * scale_of[pivot] {
            return Err(Error::Singular(format!(
                "pivot {:e} in column {col} below tolerance",
                m[pivot][col]
            )));
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        scale_of.swap(col, pivot);
        for row in col + 1..dim {
            let factor = m[row][col] / m[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..dim {
                m[row][k] -= factor * m[col][k];
            }
            b[row] -= factor * b[col];
        }
    }

    let mut x = vec![0.0; dim];
    for row in (0..dim).rev() {
        let tail: f64 = (row + 1..dim).map(|k| m[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / m[row][row];
    }
    Ok(x)
}

/// Solves an integer system: exact Cramer for 2x2, pivoting elimination
/// otherwise. The residual is checked against [`RESIDUAL_TOLERANCE`].
pub fn solve(sys: &IntegerSystem) -> Result<Vec<f64>> {
    let x = if sys.dim() == 2 {
        solve_2x2_exact(sys)?
            .iter()
            .map(|r| r.to_f64().unwrap_or(f64::NAN))
            .collect()
    } else {
        let (m, b) = sys.to_f64();
        gauss_solve(m, b)?
    };
    let residual = sys.relative_residual(&x);
    if residual.is_nan() || residual > RESIDUAL_TOLERANCE {
        return Err(Error::Residual {
            residual,
            tolerance: RESIDUAL_TOLERANCE,
        });
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(rows: &[&[i64]], rhs: &[i64]) -> IntegerSystem {
        IntegerSystem::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
            rhs.iter().map(|&v| BigInt::from(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cramer_on_3x5_rows() {
        let s = sys(&[&[108, 18], &[18, 108]], &[61567, 312296]);
        let [a, b] = solve_2x2_exact(&s).unwrap();
        assert_eq!(a, BigRational::new(57106.into(), 630.into()));
        assert_eq!(a, BigRational::new(4079.into(), 45.into()));
        assert!((b.to_f64().unwrap() - 2876.5222222).abs() < 1e-6);
    }

    #[test]
    fn identity_returns_rhs() {
        let s = sys(
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
            &[3, -1, 4, 7],
        );
        assert_eq!(solve(&s).unwrap(), vec![3.0, -1.0, 4.0, 7.0]);
        let s2 = sys(&[&[1, 0], &[0, 1]], &[5, 9]);
        assert_eq!(solve(&s2).unwrap(), vec![5.0, 9.0]);
    }

    #[test]
    fn duplicated_rows_are_singular() {
        let s = sys(
            &[&[1, 2, 3, 4], &[2, 1, 0, 1], &[1, 2, 3, 4], &[0, 0, 1, 1]],
            &[1, 2, 1, 3],
        );
        assert!(matches!(solve(&s), Err(Error::Singular(_))));
        let s2 = sys(&[&[2, 4], &[1, 2]], &[1, 1]);
        assert!(matches!(solve(&s2), Err(Error::Singular(_))));
        let zero_row = sys(&[&[0, 0, 0], &[1, 2, 3], &[3, 1, 2]], &[0, 1, 1]);
        assert!(matches!(solve(&zero_row), Err(Error::Singular(_))));
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let s = sys(&[&[0, 2, 1], &[1, 1, 1], &[2, 0, 3]], &[5, 6, 13]);
        let x = solve(&s).unwrap();
        for (got, want) in x.iter().zip([2.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!(s.relative_residual(&x) < 1e-15);
    }

    #[test]
    fn mismatched_shapes_rejected() {
        assert!(IntegerSystem::new(vec![vec![BigInt::from(1)]], vec![]).is_err());
        assert!(gauss_solve(vec![vec![1.0, 2.0]], vec![1.0]).is_err());
    }
}
