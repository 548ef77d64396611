//! Exact Gaussian elimination over an arbitrary field scalar.

use thiserror::Error;

use crate::scalar::FieldScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinSolveError {
    #[error("singular system: no usable pivot in column {0}")]
    Singular(usize),
    #[error("dimension mismatch between matrix and right-hand side")]
    Dimension,
}

/// Solves `A x = b` in place by elimination with row exchanges.
/// Pivots are the first nonzero entries in each column; over symbolic
/// fields a structurally singular system surfaces as [`LinSolveError::Singular`].
pub fn solve_linear_system<F: FieldScalar>(
    a: &[Vec<F>],
    b: &[F],
) -> Result<Vec<F>, LinSolveError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(LinSolveError::Dimension);
    }
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(LinSolveError::Singular(col))?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for j in col..=n {
            m[col][j] = m[col][j].clone() / pivot.clone();
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..=n {
                let delta = factor.clone() * m[col][j].clone();
                m[r][j] = m[r][j].clone() - delta;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn solves_small_rational_system() {
        // x + y = 1, x - y = 1/3  =>  x = 2/3, y = 1/3
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let b = vec![rat(1, 1), rat(1, 3)];
        let x = solve_linear_system(&a, &b).unwrap();
        assert_eq!(x, vec![rat(2, 3), rat(1, 3)]);
    }

    #[test]
    fn reports_singularity() {
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        let b = vec![rat(1, 1), rat(2, 1)];
        assert!(matches!(
            solve_linear_system(&a, &b),
            Err(LinSolveError::Singular(_))
        ));
    }
}
