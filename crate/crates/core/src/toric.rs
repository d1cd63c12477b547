//! Integer kernels through Hermite normal form column reduction, and
//! generating sets of toric ideals `I_A`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::{Binomial, BinomialSet, VariableSpace};
use crate::cone::{ConeStatus, ConeSystem};
use crate::error::{Error, Result};
use crate::groebner::saturate_all;
use crate::matrices::IntMatrix;

/// Basis of the lattice `ker_Z(A)`; vectors are columns `v` with `A v = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    vectors: Vec<Vec<i64>>,
}

impl LatticeBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }
    pub fn len(&self) -> usize {
        self.vectors.len()
    }
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Column-style Hermite reduction of `a` (rows x cols). Returns the reduced
/// matrix, the unimodular transform `U` with `a·U = reduced`, and the rank.
/// The first `rank` columns of the result are in echelon form, the remaining
/// ones are zero.
pub(crate) fn column_hermite(a: &[Vec<BigInt>], cols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, usize) {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let rows = m.len();

    // combine columns c1, c2 by the 2x2 unimodular matrix [[x, -b/g], [y, a/g]]
    let combine = |mat: &mut Vec<Vec<BigInt>>, c1: usize, c2: usize, x: &BigInt, y: &BigInt, s: &BigInt, t: &BigInt| {
        for row in mat.iter_mut() {
            let (v1, v2) = (row[c1].clone(), row[c2].clone());
            row[c1] = x * &v1 + y * &v2;
            row[c2] = s * &v1 + t * &v2;
        }
    };

    let mut pivot_col = 0;
    for r in 0..rows {
        if pivot_col == cols {
            break;
        }
        for c in pivot_col + 1..cols {
            if m[r][c].is_zero() {
                continue;
            }
            let (a1, b1) = (m[r][pivot_col].clone(), m[r][c].clone());
            let e = a1.extended_gcd(&b1);
            let g = e.gcd;
            // new pivot = x*a + y*b = g ; new c = -(b/g)*a + (a/g)*b = 0
            let s = -(&b1 / &g);
            let t = &a1 / &g;
            combine(&mut m, pivot_col, c, &e.x, &e.y, &s, &t);
            combine(&mut u, pivot_col, c, &e.x, &e.y, &s, &t);
        }
        if m[r][pivot_col].is_zero() {
            continue;
        }
        if m[r][pivot_col].is_negative() {
            for row in m.iter_mut().chain(u.iter_mut()) {
                row[pivot_col] = -row[pivot_col].clone();
            }
        }
        // reduce earlier columns modulo the pivot
        let piv = m[r][pivot_col].clone();
        for c in 0..pivot_col {
            let f = m[r][c].div_floor(&piv);
            if !f.is_zero() {
                for row in m.iter_mut().chain(u.iter_mut()) {
                    let d = &f * &row[pivot_col];
                    row[c] -= d;
                }
            }
        }
        pivot_col += 1;
    }
    (m, u, pivot_col)
}

fn to_big(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow("kernel entry does not fit in 64 bits".into()))
}

/// Lattice basis of `{v in Z^N : A v = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> Result<LatticeBasis> {
    let n = a.cols();
    let (_, u, rank) = column_hermite(&to_big(a), n);
    let vectors =
        (rank..n).map(|c| (0..n).map(|i| to_i64(&u[i][c])).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    Ok(LatticeBasis { dim: n, vectors })
}

/// Absolute value of the gcd of the maximal minors of the matrix whose rows
/// are `vectors`; 1 exactly when they span a saturated sublattice.
pub fn maximal_minor_gcd(vectors: &[Vec<i64>], dim: usize) -> BigInt {
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (m, _, rank) = column_hermite(&rows, dim);
    if rank < rows.len() {
        return BigInt::zero();
    }
    (0..rank).fold(BigInt::one(), |acc, i| acc * m[i][i].abs())
}

/// A strictly positive integer vector `w` with `w·d = 0` for every `d` in
/// `differences`, if one exists. Binomials with these exponent differences
/// are then homogeneous for the positive grading `w`.
pub fn positive_grading(differences: &[Vec<i64>], dim: usize) -> Result<Option<Vec<i64>>> {
    if differences.is_empty() {
        return Ok(Some(vec![1; dim]));
    }
    let d = IntMatrix::from_rows(dim, differences)?;
    let kernel = kernel_basis(&d)?;
    if kernel.is_empty() {
        return Ok(None);
    }
    // w = Σ λ_i k_i with λ = λ⁺ - λ⁻ ≥ 1 coordinatewise
    let m = kernel.len();
    let rows: Vec<Vec<i64>> = (0..dim)
        .map(|j| {
            let mut r: Vec<i64> = kernel.vectors().iter().map(|k| k[j]).collect();
            r.extend(kernel.vectors().iter().map(|k| -k[j]));
            r
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    if rows.len() < dim {
        return Ok(None);
    }
    let ConeStatus::NonEmpty(lambda) = ConeSystem::from_rows(2 * m, rows).solve() else { return Ok(None) };
    let coeffs: Vec<BigRational> = (0..m).map(|i| &lambda[i] - &lambda[m + i]).collect();
    let w: Vec<BigRational> = (0..dim)
        .map(|j| {
            kernel
                .vectors()
                .iter()
                .zip(&coeffs)
                .fold(BigRational::zero(), |acc, (k, c)| acc + c * BigRational::from_integer(k[j].into()))
        })
        .collect();
    let denom = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let out = ints.iter().map(|x| to_i64(&(x / &g))).collect::<Result<Vec<_>>>()?;
    debug_assert!(out.iter().all(|&x| x > 0));
    Ok(Some(out))
}

/// Lattice-basis binomials `x^{v⁺} - x^{v⁻}` for a kernel basis of `a`.
pub fn lattice_basis_ideal(a: &IntMatrix, space: &VariableSpace) -> Result<BinomialSet> {
    if space.dim() != a.cols() {
        return Err(Error::DimensionMismatch { expected: a.cols(), got: space.dim() });
    }
    let kernel = kernel_basis(a)?;
    let gens = kernel.vectors().iter().map(|v| Binomial::from_difference(v)).collect::<Result<Vec<_>>>()?;
    Ok(BinomialSet::new(space.clone(), gens))
}

/// Generators of the toric ideal `I_A`: the lattice-basis ideal saturated
/// at the product of all variables.
pub fn toric_ideal(a: &IntMatrix, space: &VariableSpace) -> Result<BinomialSet> {
    saturate_all(&lattice_basis_ideal(a, space)?)
}
