use std::fmt;

use serde::Serialize;

use super::{CodeSet, Codeword};
use crate::gf2poly::BinPoly;
use crate::z4poly::QuatPoly;
use crate::{Error, Result};

/// Which defining condition of a generator tuple failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    AlphaZero,
    BetaZero,
    BetaEven(usize),
    /// `b` does not divide `x^α - 1` over Z2.
    BNotDividingXAlpha,
    FNotMonic,
    HNotMonic,
    /// `f·h` does not divide `x^β - 1` over Z4.
    FhNotDividingXBeta,
    /// `ℓ ≠ 0` and `deg ℓ >= deg b`.
    EllDegree,
    /// `b ∤ g·h·ℓ` mod 2.
    BNotDividingGhEll,
    /// `b ∤ g·h·gcd(b, ℓ)` mod 2.
    BNotDividingGhGcd,
    /// `b ∤ h·gcd(b, ℓ·g)` mod 2.
    BNotDividingHGcd,
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::AlphaZero => f.write_str("alpha must be at least 1"),
            SpecViolation::BetaZero => f.write_str("beta must be at least 1"),
            SpecViolation::BetaEven(b) => write!(f, "beta={b} must be odd"),
            SpecViolation::BNotDividingXAlpha => f.write_str("b does not divide x^alpha-1"),
            SpecViolation::FNotMonic => f.write_str("f is not monic"),
            SpecViolation::HNotMonic => f.write_str("h is not monic"),
            SpecViolation::FhNotDividingXBeta => {
                f.write_str("f*h does not divide x^beta-1 over Z4")
            }
            SpecViolation::EllDegree => f.write_str("deg(ell) must be less than deg(b)"),
            SpecViolation::BNotDividingGhEll => f.write_str("b does not divide g*h*ell (mod 2)"),
            SpecViolation::BNotDividingGhGcd => {
                f.write_str("b does not divide g*h*gcd(b, ell) (mod 2)")
            }
            SpecViolation::BNotDividingHGcd => {
                f.write_str("b does not divide h*gcd(b, ell*g) (mod 2)")
            }
        }
    }
}

pub(crate) type SortKey = (usize, usize, usize, Vec<u8>, Vec<u8>, Vec<u8>, Vec<u8>);

/// A canonical generator tuple `(α, β, b, ℓ, f, h)` with derived
/// `g = (x^β - 1)/(f h)`, defining `C = ⟨(b | 0), (ℓ | fh + 2f)⟩`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicCodeSpec {
    alpha: usize,
    beta: usize,
    b: BinPoly,
    ell: BinPoly,
    f: QuatPoly,
    h: QuatPoly,
    g: QuatPoly,
}

/// Checks every defining condition and derives `g`.
pub fn validate_spec(
    alpha: usize,
    beta: usize,
    b: BinPoly,
    ell: BinPoly,
    f: QuatPoly,
    h: QuatPoly,
) -> Result<CyclicCodeSpec> {
    let bad = |v| Err(Error::InvalidSpec(v));
    if alpha == 0 {
        return bad(SpecViolation::AlphaZero);
    }
    if beta == 0 {
        return bad(SpecViolation::BetaZero);
    }
    if beta.is_multiple_of(2) {
        return bad(SpecViolation::BetaEven(beta));
    }
    if b.is_zero() || !b.divides(&BinPoly::x_n_minus_1(alpha)) {
        return bad(SpecViolation::BNotDividingXAlpha);
    }
    if !f.is_monic() {
        return bad(SpecViolation::FNotMonic);
    }
    if !h.is_monic() {
        return bad(SpecViolation::HNotMonic);
    }
    let g = match QuatPoly::exact_divide_xbeta(&(&f * &h), beta) {
        Ok(g) => g,
        Err(_) => return bad(SpecViolation::FhNotDividingXBeta),
    };
    if let Some(dl) = ell.degree() {
        if dl >= b.deg() {
            return bad(SpecViolation::EllDegree);
        }
    }
    let spec = CyclicCodeSpec {
        alpha,
        beta,
        b,
        ell,
        f,
        h,
        g,
    };
    let gh = (&spec.g * &spec.h).reduce_mod2();
    if !spec.b.divides(&(&gh * &spec.ell)) {
        return bad(SpecViolation::BNotDividingGhEll);
    }
    if !spec.b.divides(&(&gh * &spec.gcd_b_ell())) {
        return bad(SpecViolation::BNotDividingGhGcd);
    }
    if !spec
        .b
        .divides(&(&spec.h.reduce_mod2() * &spec.gcd_b_ell_g()))
    {
        return bad(SpecViolation::BNotDividingHGcd);
    }
    Ok(spec)
}

impl CyclicCodeSpec {
    pub fn new(
        alpha: usize,
        beta: usize,
        b: BinPoly,
        ell: BinPoly,
        f: QuatPoly,
        h: QuatPoly,
    ) -> Result<Self> {
        validate_spec(alpha, beta, b, ell, f, h)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn b(&self) -> &BinPoly {
        &self.b
    }

    pub fn ell(&self) -> &BinPoly {
        &self.ell
    }

    pub fn f(&self) -> &QuatPoly {
        &self.f
    }

    pub fn h(&self) -> &QuatPoly {
        &self.h
    }

    pub fn g(&self) -> &QuatPoly {
        &self.g
    }

    /// `fh + 2f`, the quaternary half of the second generator.
    pub fn fh_plus_2f(&self) -> QuatPoly {
        &(&self.f * &self.h) + &self.f.scale(2)
    }

    /// `ℓ g mod 2`.
    pub fn ell_g_mod2(&self) -> BinPoly {
        &self.ell * &self.g.reduce_mod2()
    }

    /// `gcd(b, ℓ)`, equal to `b` when `ℓ = 0`.
    pub fn gcd_b_ell(&self) -> BinPoly {
        self.b.gcd(&self.ell).expect("b is nonzero")
    }

    /// `gcd(b, ℓ g mod 2)`, equal to `b` when `ℓ = 0`.
    pub fn gcd_b_ell_g(&self) -> BinPoly {
        self.b.gcd(&self.ell_g_mod2()).expect("b is nonzero")
    }

    /// `ℓ = 0`.
    pub fn is_separable_form(&self) -> bool {
        self.ell.is_zero()
    }

    /// The generators `(b | 0)` and `(ℓ | fh + 2f)` as vectors.
    pub fn generators(&self) -> [Codeword; 2] {
        [
            Codeword::from_polys(&self.b, &QuatPoly::zero(), self.alpha, self.beta),
            Codeword::from_polys(&self.ell, &self.fh_plus_2f(), self.alpha, self.beta),
        ]
    }

    /// Key used to order search results: `(α, β, deg b, coefficients of b, ℓ, f, h)`.
    pub(crate) fn sort_key(&self) -> SortKey {
        (
            self.alpha,
            self.beta,
            self.b.deg(),
            self.b.coeffs().to_vec(),
            self.ell.coeffs().to_vec(),
            self.f.coeffs().to_vec(),
            self.h.coeffs().to_vec(),
        )
    }
}

impl fmt::Debug for CyclicCodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CyclicCodeSpec(alpha={}, beta={}, b={}, ell={}, f={}, h={}, g={})",
            self.alpha, self.beta, self.b, self.ell, self.f, self.h, self.g
        )
    }
}

impl fmt::Display for CyclicCodeSpec {
    /// The key=value spec file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha={}", self.alpha)?;
        writeln!(f, "beta={}", self.beta)?;
        writeln!(f, "b={}", self.b)?;
        writeln!(f, "ell={}", self.ell)?;
        writeln!(f, "f={}", self.f)?;
        write!(f, "h={}", self.h)
    }
}

/// The type `(α, β; γ, δ; κ)` with the refinements `κ = κ1 + κ2`, `δ = δ1 + δ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
    pub kappa1: usize,
    pub kappa2: usize,
    pub delta1: usize,
    pub delta2: usize,
}

/// Type parameters from generator degrees.
pub fn code_type(spec: &CyclicCodeSpec) -> CodeType {
    let alpha = spec.alpha;
    let deg_b = spec.b.deg();
    let deg_gcd_lg = spec.gcd_b_ell_g().deg();
    let deg_gcd_l = spec.gcd_b_ell().deg();
    let deg_g = spec.g.deg();
    let delta1 = deg_gcd_lg - deg_gcd_l;
    CodeType {
        alpha,
        beta: spec.beta,
        gamma: alpha - deg_b + spec.h.deg(),
        delta: deg_g,
        kappa: alpha - deg_gcd_lg,
        kappa1: alpha - deg_b,
        kappa2: deg_b - deg_gcd_lg,
        delta1,
        delta2: deg_g - delta1,
    }
}

impl CodeType {
    /// Type parameters read off a full codeword set, straight from the
    /// subgroup definitions:
    ///
    /// * `|C| = 2^{γ+2δ}` and the order-two subcode has `2^{γ+δ}` words;
    /// * `κ` is the dimension of the binary projection of the order-two subcode;
    /// * `κ1` is the dimension of `{(u | 0) ∈ C}`;
    /// * `δ2` is the number of Z4 factors of `{(0 | u') ∈ C}`.
    ///
    /// Panics if `codewords` is not a subgroup of a power-of-two size.
    pub fn from_codewords(alpha: usize, beta: usize, codewords: &CodeSet) -> CodeType {
        let log2 = |n: usize| -> usize {
            assert!(
                n.is_power_of_two(),
                "subgroup size {n} is not a power of two"
            );
            n.trailing_zeros() as usize
        };
        let total = log2(codewords.len());
        let order_two: Vec<&Codeword> = codewords
            .iter()
            .filter(|w| w.has_order_at_most_two())
            .collect();
        let t2 = log2(order_two.len());
        let delta = total - t2;
        let gamma = t2 - delta;
        let x_proj: std::collections::BTreeSet<&[u8]> =
            order_two.iter().map(|w| w.binary()).collect();
        let kappa = log2(x_proj.len());
        let kappa1 = log2(
            codewords
                .iter()
                .filter(|w| w.quaternary().iter().all(|&c| c == 0))
                .count(),
        );
        let y_sub: Vec<&Codeword> = codewords
            .iter()
            .filter(|w| w.binary().iter().all(|&c| c == 0))
            .collect();
        let y_total = log2(y_sub.len());
        let y_two = log2(y_sub.iter().filter(|w| w.has_order_at_most_two()).count());
        let delta2 = y_total - y_two;
        CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
            kappa1,
            kappa2: kappa - kappa1,
            delta1: delta - delta2,
            delta2,
        }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{};{})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}
