//! Arithmetic in GF(p^r) through discrete-log tables.
//!
//! Nonzero elements are stored as powers of the primitive element `α` with
//! exponents in `1..=q-1`, so that `1 = α^(q-1)`. Addition goes through the
//! coordinate vector of each element in the polynomial basis
//! `{1, α, ..., α^(r-1)}`; projections onto a user supplied F_p-basis are
//! tabulated once at construction.

use std::fmt;

use crate::error::{Error, Result};

/// Element of a finite field: zero or a power `α^k` with `1 <= k <= q-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    Power(u32),
}

impl FieldElement {
    pub fn is_zero(self) -> bool {
        matches!(self, FieldElement::Zero)
    }
}

/// A word of F_q^n, written as a row vector.
pub type Word = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    basis: Vec<FieldElement>,
    /// `poly[k]` is the polynomial-basis code of `α^k`, `0 <= k < q-1`.
    poly: Vec<u32>,
    /// Inverse of `poly`: polynomial code -> exponent in `1..=q-1` (0 for zero).
    log: Vec<u32>,
    /// `proj[code]` holds the coordinates in the chosen basis, indexed by the
    /// element code (0 = zero, k = α^k).
    proj: Vec<Vec<u32>>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and a != 0 mod p
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Inverts an r x r matrix over F_p, `None` when singular.
fn invert_mod_p(m: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_multiple_of(p))?;
        a.swap(col, pivot);
        let inv = inv_mod(a[col][col], p);
        for v in a[col].iter_mut() {
            *v = (*v as u64 * inv as u64 % p as u64) as u32;
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    let sub = (f as u64 * y as u64 % p as u64) as u32;
                    *x = (*x + p - sub) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl FiniteField {
    /// Builds GF(p^r) from the monic modulus `c_0, ..., c_r` of the primitive
    /// element and an optional ordered F_p-basis (default `1, α, ..., α^(r-1)`).
    ///
    /// For `r = 1` the modulus `0,1` is accepted as the trivial description of
    /// the prime field; `α` is then the smallest primitive root mod p.
    pub fn new(p: u32, r: u32, modulus: &[u32], basis: Option<&[FieldElement]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if r == 0 {
            return Err(Error::InvalidField("degree r must be positive".into()));
        }
        let q = p
            .checked_pow(r)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::InvalidField(format!("field {p}^{r} is too large")))?;
        if modulus.len() != r as usize + 1 || modulus[r as usize] != 1 {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {r} (got {} coefficients)",
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0,p)".into()));
        }
        let mut modulus = modulus.to_vec();
        if r == 1 && modulus[0] == 0 {
            let root = (1..p)
                .find(|&g| Self::multiplicative_order(g, p) == p - 1)
                .expect("every prime field has a primitive root");
            modulus[0] = (p - root) % p;
        }

        let r_us = r as usize;
        let encode = |coeffs: &[u32]| coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mut poly = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u32; r_us];
        cur[0] = 1;
        for k in 0..q - 1 {
            let code = encode(&cur);
            if code == 0 || (k > 0 && code == 1) {
                return Err(Error::NonPrimitiveModulus);
            }
            poly.push(code);
            log[code as usize] = if k == 0 { q - 1 } else { k };
            // multiply by α: shift and reduce with α^r = -(c_{r-1} α^{r-1} + ... + c_0)
            let top = cur[r_us - 1];
            for i in (1..r_us).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..r_us {
                cur[i] = (cur[i] + (p - modulus[i]) * top) % p;
            }
        }
        if encode(&cur) != 1 {
            return Err(Error::NonPrimitiveModulus);
        }

        let basis: Vec<FieldElement> = match basis {
            Some(b) => b.to_vec(),
            None => (0..r).map(|i| FieldElement::Power(if i == 0 { q - 1 } else { i })).collect(),
        };
        let mut field = FiniteField { p, r, q, modulus, basis, poly, log, proj: Vec::new() };
        field.check_element_range()?;
        field.proj = field.projection_table()?;
        Ok(field)
    }

    fn multiplicative_order(g: u32, p: u32) -> u32 {
        let mut x = g % p;
        let mut k = 1;
        while x != 1 {
            if x == 0 {
                return 0;
            }
            x = x * g % p;
            k += 1;
        }
        k
    }

    fn check_element_range(&self) -> Result<()> {
        if self.basis.len() != self.r as usize {
            return Err(Error::DependentBasis);
        }
        for &b in &self.basis {
            self.check(b)?;
        }
        Ok(())
    }

    fn projection_table(&self) -> Result<Vec<Vec<u32>>> {
        let r = self.r as usize;
        // column i = polynomial coordinates of b_i
        let cols: Vec<Vec<u32>> = self.basis.iter().map(|&b| self.poly_coords(b)).collect();
        let m: Vec<Vec<u32>> = (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect();
        let inv = invert_mod_p(&m, self.p).ok_or(Error::DependentBasis)?;
        let table = (0..self.q)
            .map(|code| {
                let e = self.from_code(code);
                let c = self.poly_coords(e);
                (0..r)
                    .map(|i| {
                        let s: u64 = (0..r).map(|j| inv[i][j] as u64 * c[j] as u64).sum();
                        (s % self.p as u64) as u32
                    })
                    .collect()
            })
            .collect();
        Ok(table)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    /// Checks that a `Power` exponent lies in `1..=q-1`.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        match a {
            FieldElement::Power(k) if k == 0 || k >= self.q => {
                Err(Error::BadElement(format!("exponent {k} outside 1..={}", self.q - 1)))
            }
            _ => Ok(a),
        }
    }

    /// Code 0 for zero, k for `α^k`.
    pub fn code(&self, a: FieldElement) -> u32 {
        match a {
            FieldElement::Zero => 0,
            FieldElement::Power(k) => k,
        }
    }

    pub fn from_code(&self, code: u32) -> FieldElement {
        if code == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Power(code)
        }
    }

    /// Every element, zero first then `α^1, ..., α^(q-1)`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|c| self.from_code(c))
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::Power(self.q - 1)
    }

    pub fn alpha_pow(&self, k: i64) -> FieldElement {
        let e = k.rem_euclid(self.q as i64 - 1) as u32;
        FieldElement::Power(if e == 0 { self.q - 1 } else { e })
    }

    /// The integer `c` read as `c * 1` in the prime subfield.
    pub fn from_int(&self, c: i64) -> FieldElement {
        let c = c.rem_euclid(self.p as i64) as u32;
        // c*1 has polynomial coordinates (c, 0, ..., 0)
        self.element_of_poly_code(c)
    }

    fn element_of_poly_code(&self, code: u32) -> FieldElement {
        if code == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Power(self.log[code as usize])
        }
    }

    fn poly_code(&self, a: FieldElement) -> u32 {
        match a {
            FieldElement::Zero => 0,
            FieldElement::Power(k) => self.poly[(k % (self.q - 1)) as usize],
        }
    }

    /// Coordinates in the polynomial basis `1, α, ..., α^(r-1)`.
    pub fn poly_coords(&self, a: FieldElement) -> Vec<u32> {
        let mut code = self.poly_code(a);
        (0..self.r)
            .map(|_| {
                let d = code % self.p;
                code /= self.p;
                d
            })
            .collect()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.poly_coords(a), self.poly_coords(b));
        let code = x.iter().zip(&y).rev().fold(0u32, |acc, (&s, &t)| acc * self.p + (s + t) % self.p);
        self.element_of_poly_code(code)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let code = self.poly_coords(a).iter().rev().fold(0u32, |acc, &s| acc * self.p + (self.p - s) % self.p);
        self.element_of_poly_code(code)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Power(i), FieldElement::Power(j)) => self.alpha_pow(i as i64 + j as i64),
            _ => FieldElement::Zero,
        }
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        match a {
            FieldElement::Zero => None,
            FieldElement::Power(k) => Some(self.alpha_pow(-(k as i64))),
        }
    }

    /// `c * a` for an integer `c`, reduced mod p.
    pub fn scale(&self, c: i64, a: FieldElement) -> FieldElement {
        self.mul(self.from_int(c), a)
    }

    /// The projection `π_i` onto the i-th basis element, `i` counted from 1.
    pub fn projection(&self, a: FieldElement, i: usize) -> Result<u32> {
        if i == 0 || i > self.r as usize {
            return Err(Error::IndexOutOfRange { index: i, len: self.r as usize });
        }
        Ok(self.proj[self.code(a) as usize][i - 1])
    }

    /// `(π_1(a), ..., π_r(a))`.
    pub fn canonical_coords(&self, a: FieldElement) -> &[u32] {
        &self.proj[self.code(a) as usize]
    }

    /// Inverse of [`canonical_coords`](Self::canonical_coords); coordinates are read mod p.
    pub fn from_coords(&self, coords: &[i64]) -> FieldElement {
        self.basis.iter().zip(coords).fold(FieldElement::Zero, |acc, (&b, &c)| self.add(acc, self.scale(c, b)))
    }

    /// Crossing map ▲: each position becomes a block of length q-1 holding the
    /// unit vector of its exponent (zero block for zero).
    pub fn cross_up(&self, w: &[FieldElement]) -> Vec<i64> {
        let block = (self.q - 1) as usize;
        let mut out = vec![0i64; w.len() * block];
        for (j, &a) in w.iter().enumerate() {
            if let FieldElement::Power(k) = a {
                out[j * block + k as usize - 1] = 1;
            }
        }
        out
    }

    /// Map ▼: block j of `v` evaluates to `Σ_s v[j,s] α^s`.
    pub fn cross_down(&self, v: &[i64]) -> Word {
        let block = (self.q - 1) as usize;
        assert_eq!(v.len() % block, 0, "length must be a multiple of q-1");
        v.chunks(block)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(FieldElement::Zero, |acc, (s, &c)| self.add(acc, self.scale(c, self.alpha_pow(s as i64 + 1))))
            })
            .collect()
    }

    /// Dot product over F_q.
    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter().zip(b).fold(FieldElement::Zero, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    pub fn format_element(&self, a: FieldElement) -> String {
        match a {
            FieldElement::Zero => "0".to_string(),
            FieldElement::Power(k) if k == self.q - 1 => "1".to_string(),
            FieldElement::Power(1) => "a".to_string(),
            FieldElement::Power(k) => format!("a^{k}"),
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.r)
    }
}
