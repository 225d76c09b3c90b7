//! Polynomials over Z4 and Hensel lifting of binary divisors of `x^β - 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::gf2poly::{write_terms, BinPoly};
use crate::{Error, Result};

/// A polynomial over Z4, dense ascending coefficients in `0..4`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatPoly {
    coeffs: Vec<u8>,
}

impl QuatPoly {
    pub fn zero() -> Self {
        QuatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QuatPoly { coeffs: vec![1] }
    }

    pub fn constant(c: u8) -> Self {
        Self::from_coeffs([c])
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QuatPoly { coeffs }
    }

    /// `x^n - 1`, i.e. `x^n + 3`.
    pub fn x_n_minus_1(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs[0] = (p.coeffs[0] + 3) % 4;
        p.trim();
        p
    }

    /// Builds a polynomial from ascending coefficients, reducing each mod 4.
    pub fn from_coeffs<I: IntoIterator<Item = u8>>(coeffs: I) -> Self {
        let mut p = QuatPoly {
            coeffs: coeffs.into_iter().map(|c| c % 4).collect(),
        };
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

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> Option<u8> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    pub fn scale(&self, c: u8) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| a * (c % 4)))
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QuatPoly { coeffs }
    }

    /// Reduces every coefficient mod 2.
    pub fn reduce_mod2(&self) -> BinPoly {
        BinPoly::from_coeffs(self.coeffs.iter().copied())
    }

    /// Coefficient sequence reversed down to the leading term.
    pub fn reciprocal(&self) -> Result<QuatPoly> {
        if self.is_zero() {
            return Err(Error::ReciprocalOfZero);
        }
        Ok(Self::from_coeffs(self.coeffs.iter().rev().copied()))
    }

    /// The monic associate `u·p` for a unit `u`, if the leading coefficient is a unit.
    pub fn normalized_monic(&self) -> Option<QuatPoly> {
        match self.leading_coeff()? {
            1 => Some(self.clone()),
            3 => Some(self.scale(3)),
            _ => None,
        }
    }

    /// Reduction modulo `x^n - 1` for any `n >= 1`.
    pub fn rem_xn_minus_1(&self, n: usize) -> QuatPoly {
        assert!(n > 0, "x^0 - 1 is the zero polynomial");
        let mut coeffs = vec![0u8; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = (coeffs[i % n] + c) % 4;
        }
        Self::from_coeffs(coeffs)
    }

    pub(crate) fn mul_mod_xn_minus_1(&self, other: &QuatPoly, n: usize) -> QuatPoly {
        (self * other).rem_xn_minus_1(n)
    }

    /// `a·b mod (x^β - 1)` for odd `β`.
    pub fn mul_mod(&self, other: &QuatPoly, beta: usize) -> Result<QuatPoly> {
        check_odd(beta)?;
        Ok(self.mul_mod_xn_minus_1(other, beta))
    }

    /// Long division by a monic divisor.
    pub fn div_rem_monic(&self, d: &QuatPoly) -> Result<(QuatPoly, QuatPoly)> {
        let dd = d.degree().ok_or(Error::DivisorZero)?;
        if !d.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                quot[i - dd] = c;
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    rem[i - dd + j] = (rem[i - dd + j] + 4 * 4 - c * dc) % 4;
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `self / d` for monic `d`, failing on a nonzero remainder.
    pub fn exact_div(&self, d: &QuatPoly) -> Result<QuatPoly> {
        let (q, r) = self.div_rem_monic(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor)
        }
    }

    /// True when monic `self` divides `other`.
    pub fn divides(&self, other: &QuatPoly) -> bool {
        matches!(other.div_rem_monic(self), Ok((_, r)) if r.is_zero())
    }

    /// The monic quotient `(x^β - 1) / d` for a monic divisor `d` and odd `β`.
    pub fn exact_divide_xbeta(d: &QuatPoly, beta: usize) -> Result<QuatPoly> {
        check_odd(beta)?;
        if d.is_zero() {
            return Err(Error::DivisorZero);
        }
        if !d.is_monic() {
            return Err(Error::NotMonic);
        }
        Self::x_n_minus_1(beta).exact_div(d)
    }
}

fn check_odd(beta: usize) -> Result<()> {
    if beta == 0 {
        Err(Error::InvalidParameter("length must be positive".into()))
    } else if beta.is_multiple_of(2) {
        Err(Error::EvenLengthUnsupported(beta))
    } else {
        Ok(())
    }
}

/// The unique monic divisor of `x^β - 1` over Z4 reducing to `d` mod 2.
///
/// Graeffe root squaring: write the {0,1}-lift of `d` as `e(x) + o(x)` with
/// `e` the even-exponent part and `o` the odd part. Then `e² - o²` is a
/// polynomial in `x²` whose roots are the squares of the roots of `d`; for
/// `d | x^β - 1` with `β` odd these squares are exactly the Teichmüller lifts
/// of the roots of `d`. Substituting `x² -> x` and fixing the sign gives the lift.
pub fn hensel_lift(d: &BinPoly, beta: usize) -> Result<QuatPoly> {
    check_odd(beta)?;
    if d.is_zero() || !d.divides(&BinPoly::x_n_minus_1(beta)) {
        return Err(Error::NotADivisor);
    }
    let even =
        QuatPoly::from_coeffs(
            d.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 0 { c } else { 0 }),
        );
    let odd =
        QuatPoly::from_coeffs(
            d.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { c } else { 0 }),
        );
    let sq = &(&even * &even) - &(&odd * &odd);
    debug_assert!(sq.coeffs.iter().skip(1).step_by(2).all(|&c| c == 0));
    let lifted = QuatPoly::from_coeffs(sq.coeffs.iter().step_by(2).copied());
    let lifted = lifted
        .normalized_monic()
        .expect("Graeffe transform of a monic polynomial has unit leading coefficient");
    debug_assert!(lifted.divides(&QuatPoly::x_n_minus_1(beta)));
    Ok(lifted)
}

impl From<&BinPoly> for QuatPoly {
    /// Embeds binary coefficients as the quaternary values 0 and 1.
    fn from(p: &BinPoly) -> Self {
        QuatPoly {
            coeffs: p.coeffs().to_vec(),
        }
    }
}

impl Add for &QuatPoly {
    type Output = QuatPoly;

    fn add(self, rhs: &QuatPoly) -> QuatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QuatPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Neg for &QuatPoly {
    type Output = QuatPoly;

    fn neg(self) -> QuatPoly {
        QuatPoly::from_coeffs(self.coeffs.iter().map(|&c| 4 - c))
    }
}

impl Sub for &QuatPoly {
    type Output = QuatPoly;

    fn sub(self, rhs: &QuatPoly) -> QuatPoly {
        self + &(-rhs)
    }
}

impl Mul for &QuatPoly {
    type Output = QuatPoly;

    fn mul(self, rhs: &QuatPoly) -> QuatPoly {
        if self.is_zero() || rhs.is_zero() {
            return QuatPoly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % 4;
            }
        }
        QuatPoly::from_coeffs(out)
    }
}

impl Add for QuatPoly {
    type Output = QuatPoly;

    fn add(self, rhs: QuatPoly) -> QuatPoly {
        &self + &rhs
    }
}

impl Sub for QuatPoly {
    type Output = QuatPoly;

    fn sub(self, rhs: QuatPoly) -> QuatPoly {
        &self - &rhs
    }
}

impl Mul for QuatPoly {
    type Output = QuatPoly;

    fn mul(self, rhs: QuatPoly) -> QuatPoly {
        &self * &rhs
    }
}

impl fmt::Display for QuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().copied())
    }
}

impl fmt::Debug for QuatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuatPoly({self})")
    }
}
