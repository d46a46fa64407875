//! Exact Gaussian elimination over any scalar field.

use crate::error::Result;
use crate::scalars::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<C: Scalar>(rows: &mut [Vec<C>], ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv()?;
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in 0..ncols {
                if !rows[r][j].is_zero() {
                    rows[i][j] = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(pivots)
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace<C: Scalar>(mut rows: Vec<Vec<C>>, ncols: usize) -> Result<Vec<Vec<C>>> {
    let pivots = rref(&mut rows, ncols)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![C::zero(); ncols];
            v[f] = C::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect())
}

pub fn rank<C: Scalar>(mut rows: Vec<Vec<C>>, ncols: usize) -> Result<usize> {
    Ok(rref(&mut rows, ncols)?.len())
}
