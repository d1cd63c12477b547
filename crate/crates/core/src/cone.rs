//! Exact feasibility of open polyhedral cones `{ω ≥ 0 : r_k·ω > 0 for all k}`.
//!
//! By homogeneity the open cone is non-empty iff `{ω ≥ 0 : r_k·ω ≥ 1}` is
//! feasible. That system is decided with a phase-one simplex over
//! `BigRational` using Bland's rule, so no floating point is involved.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Strict inequalities `r_k·ω > 0` over the nonnegative orthant of `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSystem {
    dim: usize,
    rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    Empty,
    /// A point of the open cone.
    NonEmpty(Vec<BigRational>),
}

impl ConeStatus {
    pub fn is_empty(&self) -> bool {
        matches!(self, ConeStatus::Empty)
    }

    pub fn witness(&self) -> Option<&[BigRational]> {
        match self {
            ConeStatus::NonEmpty(w) => Some(w),
            ConeStatus::Empty => None,
        }
    }
}

impl ConeSystem {
    pub fn new(dim: usize) -> Self {
        ConeSystem { dim, rows: Vec::new() }
    }

    pub fn from_rows(dim: usize, rows: Vec<Vec<i64>>) -> Self {
        let mut c = Self::new(dim);
        for r in rows {
            c.add_row(r);
        }
        c
    }

    /// Adds `r·ω > 0`; duplicate rows are ignored.
    pub fn add_row(&mut self, row: Vec<i64>) {
        assert_eq!(row.len(), self.dim, "row length must match the cone dimension");
        debug_assert!(row.iter().any(|&x| x != 0), "zero row in cone system");
        if !self.rows.contains(&row) {
            self.rows.push(row);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// True when every row is strictly positive at `omega` and `omega ≥ 0`.
    pub fn satisfied_by(&self, omega: &[BigRational]) -> bool {
        omega.iter().all(|w| !w.is_negative())
            && self.rows.iter().all(|r| {
                r.iter()
                    .zip(omega)
                    .fold(BigRational::zero(), |acc, (&a, w)| acc + w * BigRational::from_integer(a.into()))
                    .is_positive()
            })
    }

    pub fn solve(&self) -> ConeStatus {
        if self.rows.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return ConeStatus::Empty;
        }
        if self.rows.is_empty() {
            return ConeStatus::NonEmpty(vec![BigRational::one(); self.dim]);
        }
        let status = match phase_one(self.dim, &self.rows) {
            Some(omega) => ConeStatus::NonEmpty(omega),
            None => ConeStatus::Empty,
        };
        if let ConeStatus::NonEmpty(w) = &status {
            assert!(self.satisfied_by(w), "simplex witness failed re-substitution");
        }
        status
    }
}

/// Decides emptiness of the open cone; see [`ConeSystem::solve`].
pub fn cone_is_empty(c: &ConeSystem) -> ConeStatus {
    c.solve()
}

/// Phase-one simplex for `R ω - s + a = 1`, all variables nonnegative,
/// minimizing `Σ a`. Returns `ω` when the optimum is zero.
fn phase_one(dim: usize, rows: &[Vec<i64>]) -> Option<Vec<BigRational>> {
    let m = rows.len();
    // columns: ω (dim), s (m), a (m), rhs
    let ncols = dim + 2 * m;
    let int = |x: i64| BigRational::from_integer(x.into());
    let mut t: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut row = vec![BigRational::zero(); ncols + 1];
            for (j, &x) in r.iter().enumerate() {
                row[j] = int(x);
            }
            row[dim + k] = -BigRational::one();
            row[dim + m + k] = BigRational::one();
            row[ncols] = BigRational::one();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (0..m).map(|k| dim + m + k).collect();

    // reduced costs d_j = c_j - Σ_k t[k][j] (all basic costs are 1), last entry = -objective
    let mut cost = vec![BigRational::zero(); ncols + 1];
    for j in 0..=ncols {
        let c = if (dim + m..ncols).contains(&j) { BigRational::one() } else { BigRational::zero() };
        let s = t.iter().fold(BigRational::zero(), |acc, row| acc + &row[j]);
        cost[j] = c - s;
    }

    // Bland: lowest-index improving column
    while let Some(enter) = (0..ncols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for k in 0..m {
            if t[k][enter].is_positive() {
                let ratio = &t[k][ncols] / &t[k][enter];
                let better = match &leave {
                    None => true,
                    Some((lk, best)) => ratio < *best || (ratio == *best && basis[k] < basis[*lk]),
                };
                if better {
                    leave = Some((k, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so an entering column always has a pivot
        let (row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, row, enter);
        basis[row] = enter;
    }

    // objective value is -cost[ncols]
    if !cost[ncols].is_zero() {
        return None;
    }
    let mut omega = vec![BigRational::zero(); dim];
    for (k, &b) in basis.iter().enumerate() {
        if b < dim {
            omega[b] = t[k][ncols].clone();
        }
    }
    Some(omega)
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x = &*x / &p;
    }
    let pivot_row = t[row].clone();
    for (k, r) in t.iter_mut().enumerate() {
        if k != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_systems() {
        let c = ConeSystem::new(2);
        assert_eq!(c.solve().witness().unwrap(), &[BigRational::one(), BigRational::one()]);
        let c = ConeSystem::from_rows(2, vec![vec![1, -1], vec![-1, 1]]);
        assert!(c.solve().is_empty());
        let c = ConeSystem::from_rows(2, vec![vec![1, -1]]);
        let w = c.solve();
        assert!(c.satisfied_by(w.witness().unwrap()));
    }

    #[test]
    fn orthant_matters() {
        // ω1 < 0 is impossible on the nonnegative orthant
        assert!(ConeSystem::from_rows(2, vec![vec![-1, 0]]).solve().is_empty());
        // -ω1 - ω2 > 0 likewise
        assert!(ConeSystem::from_rows(3, vec![vec![-1, -1, 0], vec![0, 0, 1]]).solve().is_empty());
        let c = ConeSystem::from_rows(3, vec![vec![2, -3, 0], vec![-1, 2, -1], vec![0, 0, 1]]);
        assert!(!c.solve().is_empty());
    }

    #[test]
    fn duplicate_rows_are_merged() {
        let mut c = ConeSystem::new(2);
        c.add_row(vec![1, 0]);
        c.add_row(vec![1, 0]);
        assert_eq!(c.rows().len(), 1);
    }
}
