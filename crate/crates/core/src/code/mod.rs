//! Z2Z4-additive cyclic codes and the ambient space `Z2^α × Z4^β`.
//!
//! A vector `(u | u')` corresponds to the pair of polynomials
//! `(Σ u_i x^i | Σ u'_j x^j)`, so multiplying by `x` rotates both blocks
//! one step.

mod enumerate;
mod spec;

use std::fmt;
use std::str::FromStr;

use crate::gf2poly::BinPoly;
use crate::z4poly::QuatPoly;
use crate::{Error, Result};

pub use enumerate::{
    additive_span, cardinality, cardinality_family, contains, enumerate_codewords, module_closure,
    project_xy, spanning_set, subcode_order_two, Block, Caps, CardinalityFamily, CodeSet, CodeSize,
    SpanningRow, DEFAULT_AMBIENT_CAP, DEFAULT_ENUMERATION_CAP,
};
pub use spec::{code_type, validate_spec, CodeType, CyclicCodeSpec, SpecViolation};

/// A vector `(u | u')` with `u ∈ Z2^α` and `u' ∈ Z4^β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    u: Vec<u8>,
    uq: Vec<u8>,
}

impl Codeword {
    /// Fails with [`Error::InvalidParameter`] when an entry is out of range.
    pub fn new(u: Vec<u8>, uq: Vec<u8>) -> Result<Self> {
        if let Some(&c) = u.iter().find(|&&c| c > 1) {
            return Err(Error::InvalidParameter(format!("binary entry {c}")));
        }
        if let Some(&c) = uq.iter().find(|&&c| c > 3) {
            return Err(Error::InvalidParameter(format!("quaternary entry {c}")));
        }
        Ok(Codeword { u, uq })
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        Codeword {
            u: vec![0; alpha],
            uq: vec![0; beta],
        }
    }

    /// The vector of `(p mod (x^α - 1) | q mod (x^β - 1))`.
    pub fn from_polys(p: &BinPoly, q: &QuatPoly, alpha: usize, beta: usize) -> Self {
        let p = p.rem_xn_minus_1(alpha);
        let q = q.rem_xn_minus_1(beta);
        Codeword {
            u: (0..alpha).map(|i| p.coeff(i)).collect(),
            uq: (0..beta).map(|i| q.coeff(i)).collect(),
        }
    }

    pub fn alpha(&self) -> usize {
        self.u.len()
    }

    pub fn beta(&self) -> usize {
        self.uq.len()
    }

    pub fn binary(&self) -> &[u8] {
        &self.u
    }

    pub fn quaternary(&self) -> &[u8] {
        &self.uq
    }

    pub fn binary_poly(&self) -> BinPoly {
        BinPoly::from_coeffs(self.u.iter().copied())
    }

    pub fn quaternary_poly(&self) -> QuatPoly {
        QuatPoly::from_coeffs(self.uq.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().chain(&self.uq).all(|&c| c == 0)
    }

    fn check_ambient(&self, other: &Codeword) -> Result<()> {
        if self.alpha() != other.alpha() || self.beta() != other.beta() {
            return Err(Error::AmbientMismatch(
                self.alpha(),
                self.beta(),
                other.alpha(),
                other.beta(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Codeword) -> Result<Codeword> {
        self.check_ambient(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Codeword) -> Codeword {
        Codeword {
            u: self.u.iter().zip(&other.u).map(|(a, b)| a ^ b).collect(),
            uq: self
                .uq
                .iter()
                .zip(&other.uq)
                .map(|(a, b)| (a + b) % 4)
                .collect(),
        }
    }

    /// `k·w` for an integer `k`; the binary block is scaled mod 2.
    pub fn scale(&self, k: u8) -> Codeword {
        Codeword {
            u: self.u.iter().map(|&a| (a * k) & 1).collect(),
            uq: self.uq.iter().map(|&a| (a * (k % 4)) % 4).collect(),
        }
    }

    /// True when `w + w = 0`, i.e. the quaternary block lies in `{0, 2}`.
    pub fn has_order_at_most_two(&self) -> bool {
        self.uq.iter().all(|&c| c % 2 == 0)
    }

    /// Hamming weight of the Gray image.
    pub fn lee_weight(&self) -> usize {
        let bin = self.u.iter().filter(|&&c| c == 1).count();
        let quat: usize = self
            .uq
            .iter()
            .map(|&c| match c {
                0 => 0,
                2 => 2,
                _ => 1,
            })
            .sum();
        bin + quat
    }
}

impl fmt::Display for Codeword {
    /// `u0 u1 … | q0 q1 …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u8]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} | {}", join(&self.u), join(&self.uq))
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Codeword {
    type Err = Error;

    /// Accepts `u0 u1 … | q0 q1 …`; digits may also be written without spaces
    /// (`101|200`).
    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = s
            .split_once('|')
            .ok_or_else(|| Error::parse(0, "codeword needs a '|' separator"))?;
        let digits = |part: &str, offset: usize, modulus: u8| -> Result<Vec<u8>> {
            part.char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(i, c)| match c.to_digit(10) {
                    Some(d) if (d as u8) < modulus => Ok(d as u8),
                    _ => Err(Error::parse(
                        offset + i,
                        format!("expected a digit below {modulus}, found '{c}'"),
                    )),
                })
                .collect()
        };
        let u = digits(left, 0, 2)?;
        let uq = digits(right, left.len() + 1, 4)?;
        Ok(Codeword { u, uq })
    }
}

/// The `i`-th cyclic shift `(u_{j+i} | u'_{j+i})`, indices read mod α and mod β.
pub fn cyclic_shift(w: &Codeword, i: i64) -> Codeword {
    let rot = |v: &[u8]| -> Vec<u8> {
        let n = v.len() as i64;
        if n == 0 {
            return Vec::new();
        }
        (0..n).map(|j| v[(j + i).rem_euclid(n) as usize]).collect()
    };
    Codeword {
        u: rot(&w.u),
        uq: rot(&w.uq),
    }
}

/// `λ ⋆ (p | q) = (λ p mod 2 mod (x^α - 1) | λ q mod (x^β - 1))`.
pub fn star_action(
    lambda: &QuatPoly,
    p: &BinPoly,
    q: &QuatPoly,
    alpha: usize,
    beta: usize,
) -> (BinPoly, QuatPoly) {
    let bin = lambda.reduce_mod2().mul_mod_xn_minus_1(p, alpha);
    let quat = lambda.mul_mod_xn_minus_1(q, beta);
    (bin, quat)
}

/// The Gray image: binary block copied, each quaternary symbol expanded by
/// `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`.
pub fn gray_map(w: &Codeword) -> Vec<u8> {
    let mut out = Vec::with_capacity(w.alpha() + 2 * w.beta());
    out.extend_from_slice(&w.u);
    for &c in &w.uq {
        let pair = match c {
            0 => [0, 0],
            1 => [0, 1],
            2 => [1, 1],
            _ => [1, 0],
        };
        out.extend_from_slice(&pair);
    }
    out
}

/// `2 Σ u_i v_i + Σ u'_j v'_j ∈ Z4`.
pub fn inner_product(w1: &Codeword, w2: &Codeword) -> Result<u8> {
    w1.check_ambient(w2)?;
    Ok(inner_product_unchecked(w1, w2))
}

pub(crate) fn inner_product_unchecked(w1: &Codeword, w2: &Codeword) -> u8 {
    inner_product_raw(&w1.u, &w1.uq, &w2.u, &w2.uq)
}

pub(crate) fn inner_product_raw(u1: &[u8], q1: &[u8], u2: &[u8], q2: &[u8]) -> u8 {
    let bin: u32 = u1.iter().zip(u2).map(|(&a, &b)| u32::from(a & b)).sum();
    let quat: u32 = q1.iter().zip(q2).map(|(&a, &b)| u32::from(a * b)).sum();
    ((2 * bin + quat) % 4) as u8
}

/// The `∘` pairing into `Z4[x]/(x^𝔪 - 1)`, `𝔪 = lcm(α, β)`.
///
/// Its coefficient at `x^{𝔪-1-i}` is the inner product of `w1` with the
/// `i`-th shift of `w2`.
pub fn circ_product(w1: &Codeword, w2: &Codeword) -> Result<QuatPoly> {
    w1.check_ambient(w2)?;
    let (alpha, beta) = (w1.alpha(), w1.beta());
    let m = lcm(alpha, beta);
    let mut total = QuatPoly::zero();

    let v = w2.binary_poly();
    if let Some(dv) = v.degree() {
        let u = QuatPoly::from(&w1.binary_poly());
        let theta = QuatPoly::from(&BinPoly::theta(m / alpha, alpha)?);
        let v_rec = QuatPoly::from(&v.reciprocal()?);
        let term = (&(&u * &theta) * &v_rec).shift(m - 1 - dv).scale(2);
        total = &total + &term;
    }
    let vq = w2.quaternary_poly();
    if let Some(dv) = vq.degree() {
        let u = w1.quaternary_poly();
        let theta = QuatPoly::from(&BinPoly::theta(m / beta, beta)?);
        let v_rec = vq.reciprocal()?;
        let term = (&(&u * &theta) * &v_rec).shift(m - 1 - dv);
        total = &total + &term;
    }
    Ok(total.rem_xn_minus_1(m))
}

/// True when `w1` is orthogonal to `w2` and all of its cyclic shifts.
pub fn orthogonal_all_shifts(w1: &Codeword, w2: &Codeword) -> Result<bool> {
    Ok(circ_product(w1, w2)?.is_zero())
}

pub(crate) fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd_usize(a, b) * b
}
