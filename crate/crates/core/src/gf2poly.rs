//! Polynomials over Z2.
//!
//! Coefficients are stored densely in ascending order with no trailing zeros,
//! so the zero polynomial is the empty sequence and has no degree
//! ([`BinPoly::degree`] returns `None`).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::{Error, Result};

/// A polynomial over Z2.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinPoly {
    coeffs: Vec<u8>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        BinPoly { coeffs }
    }

    /// `x^n + 1`, which equals `x^n - 1` over Z2.
    pub fn x_n_minus_1(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs[0] ^= 1;
        p.trim();
        p
    }

    /// Builds a polynomial from ascending coefficients, reducing each mod 2.
    pub fn from_coeffs<I: IntoIterator<Item = u8>>(coeffs: I) -> Self {
        let mut p = BinPoly {
            coeffs: coeffs.into_iter().map(|c| c & 1).collect(),
        };
        p.trim();
        p
    }

    /// Sum of `x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let len = exponents.iter().max().map_or(0, |&e| e + 1);
        let mut coeffs = vec![0u8; len];
        for &e in exponents {
            coeffs[e] ^= 1;
        }
        let mut p = BinPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    ///
    /// Panics on the zero polynomial; callers use it where the surrounding
    /// algebra guarantees a nonzero value.
    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c == 1).count()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        BinPoly { coeffs }
    }

    /// Quotient and remainder of division by `d`.
    pub fn div_rem(&self, d: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = d.degree().ok_or(Error::DivisorZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 1 {
                quot[i - dd] = 1;
                for (j, &c) in d.coeffs.iter().enumerate() {
                    rem[i - dd + j] ^= c;
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &BinPoly) -> Result<BinPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient `self / d`, failing with [`Error::NotADivisor`] on a nonzero remainder.
    pub fn exact_div(&self, d: &BinPoly) -> Result<BinPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor)
        }
    }

    /// True when `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &BinPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Reduction modulo `x^n - 1`, folding exponents mod `n`.
    pub fn rem_xn_minus_1(&self, n: usize) -> BinPoly {
        assert!(n > 0, "x^0 - 1 is the zero polynomial");
        let mut coeffs = vec![0u8; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] ^= c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul_mod_xn_minus_1(&self, other: &BinPoly, n: usize) -> BinPoly {
        (self * other).rem_xn_minus_1(n)
    }

    /// Monic greatest common divisor, with `gcd(a, 0) = a`.
    pub fn gcd(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `x^deg(p) p(1/x)`: the coefficient sequence reversed down to the leading term.
    pub fn reciprocal(&self) -> Result<BinPoly> {
        if self.is_zero() {
            return Err(Error::ReciprocalOfZero);
        }
        Ok(Self::from_coeffs(self.coeffs.iter().rev().copied()))
    }

    /// `θ_m(x^n) = Σ_{i<m} x^{i n}`.
    pub fn theta(m: usize, n: usize) -> Result<BinPoly> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "theta needs m, n >= 1 (got m={m}, n={n})"
            )));
        }
        let exps: Vec<usize> = (0..m).map(|i| i * n).collect();
        Ok(Self::from_exponents(&exps))
    }

    /// Inverse of `self` modulo `m` by the extended Euclidean algorithm.
    pub fn inverse_mod(&self, m: &BinPoly) -> Result<BinPoly> {
        match m.degree() {
            None => return Err(Error::DivisorZero),
            Some(0) => {
                return Err(Error::InvalidParameter(
                    "modulus must have degree at least 1".into(),
                ))
            }
            Some(_) => {}
        }
        // Invariant: s_i * self ≡ r_i (mod m).
        let (mut r0, mut r1) = (m.clone(), self.rem(m)?);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if !r0.is_one() {
            return Err(Error::NotInvertible);
        }
        s0.rem(m)
    }

    /// The distinct monic irreducible factors of `x^n - 1` for odd `n`, sorted
    /// by degree and then by coefficients.
    pub fn factor_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if n.is_multiple_of(2) {
            return Err(Error::EvenLengthUnsupported(n));
        }
        let mut factors = berlekamp(&Self::x_n_minus_1(n));
        factors.sort_by(canonical_order);
        Ok(factors)
    }

    /// Every monic divisor of `x^n - 1` over Z2, for any `n >= 1`.
    ///
    /// With `n = 2^e m` and `m` odd, `x^n - 1 = (x^m - 1)^(2^e)`, so each
    /// irreducible factor of `x^m - 1` appears with multiplicity up to `2^e`.
    pub fn divisors_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let e = n.trailing_zeros();
        let odd = n >> e;
        let mult = 1usize << e;
        let factors = Self::factor_xn_minus_1(odd)?;
        let mut divisors = vec![Self::one()];
        for p in &factors {
            let mut next = Vec::with_capacity(divisors.len() * (mult + 1));
            for d in &divisors {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..mult {
                    acc = &acc * p;
                    next.push(acc.clone());
                }
            }
            divisors = next;
        }
        divisors.sort_by(canonical_order);
        Ok(divisors)
    }
}

/// Orders by degree first, then by ascending coefficient sequence.
pub(crate) fn canonical_order(a: &BinPoly, b: &BinPoly) -> std::cmp::Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// Berlekamp factorization of a squarefree monic polynomial over Z2.
fn berlekamp(f: &BinPoly) -> Vec<BinPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i holds x^{2i} mod f. A polynomial v with v^2 ≡ v (mod f) satisfies
    // Σ v_i row_i = v, i.e. v lies in the left kernel of Q - I.
    let mut q = vec![vec![0u8; n]; n];
    let x2 = BinPoly::monomial(2).rem(f).expect("f is nonzero");
    let mut power = BinPoly::one();
    for row in q.iter_mut() {
        for (j, c) in row.iter_mut().enumerate() {
            *c = power.coeff(j);
        }
        power = (&power * &x2).rem(f).expect("f is nonzero");
    }
    // Transposed system (Q - I)^T v = 0.
    let mut m: Vec<Vec<u8>> = (0..n)
        .map(|j| (0..n).map(|i| q[i][j] ^ u8::from(i == j)).collect())
        .collect();
    let basis = gf2_kernel(&mut m, n);
    let k = basis.len();

    let mut factors = vec![f.clone()];
    for v in basis {
        if factors.len() == k {
            break;
        }
        let v = BinPoly::from_coeffs(v);
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.deg() <= 1 {
                next.push(u);
                continue;
            }
            let mut rest = u.clone();
            for shift in [BinPoly::zero(), BinPoly::one()] {
                let cand = &v + &shift;
                let d = rest.gcd(&cand).expect("rest is nonzero");
                if d.deg() > 0 && d.deg() < rest.deg() {
                    rest = rest.exact_div(&d).expect("gcd divides");
                    next.push(d);
                }
            }
            next.push(rest);
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), k);
    factors
}

/// Basis of the right kernel of an `n × n` matrix over Z2. Destroys `m`.
fn gf2_kernel(m: &mut [Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| m[r][col] == 1) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..n {
            if r != row && m[r][col] == 1 {
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d ^= s;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = m[r][fc];
            }
            v
        })
        .collect()
}

impl Add for &BinPoly {
    type Output = BinPoly;

    fn add(self, rhs: &BinPoly) -> BinPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinPoly::from_coeffs((0..len).map(|i| self.coeff(i) ^ rhs.coeff(i)))
    }
}

impl Sub for &BinPoly {
    type Output = BinPoly;

    // Characteristic 2: subtraction is addition.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &BinPoly) -> BinPoly {
        self + rhs
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: &BinPoly) -> BinPoly {
        if self.is_zero() || rhs.is_zero() {
            return BinPoly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 1 {
                for (j, &b) in rhs.coeffs.iter().enumerate() {
                    out[i + j] ^= b;
                }
            }
        }
        BinPoly::from_coeffs(out)
    }
}

impl Add for BinPoly {
    type Output = BinPoly;

    fn add(self, rhs: BinPoly) -> BinPoly {
        &self + &rhs
    }
}

impl Mul for BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: BinPoly) -> BinPoly {
        &self * &rhs
    }
}

impl fmt::Display for BinPoly {
    /// Descending exponents, e.g. `x^3+x+1`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().copied())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

/// Shared human-readable writer for Z2 and Z4 coefficient sequences.
pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, coeffs: I) -> fmt::Result
where
    I: DoubleEndedIterator<Item = u8> + ExactSizeIterator,
{
    let len = coeffs.len();
    let mut first = true;
    for (k, c) in coeffs.rev().enumerate() {
        let e = len - 1 - k;
        if c == 0 {
            continue;
        }
        if !first {
            f.write_str("+")?;
        }
        first = false;
        match (c, e) {
            (_, 0) => write!(f, "{c}")?,
            (1, 1) => f.write_str("x")?,
            (1, _) => write!(f, "x^{e}")?,
            (_, 1) => write!(f, "{c}x")?,
            _ => write!(f, "{c}x^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
