//! Generator polynomials of the dual code.
//!
//! For `C = ⟨(b | 0), (ℓ | fh + 2f)⟩` the dual is again cyclic,
//! `C⊥ = ⟨(b̄ | 0), (ℓ̄ | f̄h̄ + 2f̄)⟩`, and every dual generator has a closed
//! form in terms of `b, ℓ, f, h`. [`brute_force_dual`] computes `C⊥` straight
//! from the definition so the closed forms can be checked.

use serde::Serialize;

use crate::code::{
    code_type, enumerate_codewords, inner_product_raw, lcm, Caps, CodeSet, Codeword, CyclicCodeSpec,
};
use crate::gf2poly::BinPoly;
use crate::z4poly::{hensel_lift, QuatPoly};
use crate::Result;

/// Degrees of the dual generators and the dual type, predicted from `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualDegrees {
    pub deg_b: usize,
    pub deg_f: usize,
    pub deg_h: usize,
    pub deg_g: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

pub fn dual_degrees(spec: &CyclicCodeSpec) -> DualDegrees {
    let t = code_type(spec);
    let alpha = spec.alpha();
    let d_b = spec.b().deg();
    let d_l = spec.gcd_b_ell().deg();
    let d_lg = spec.gcd_b_ell_g().deg();
    DualDegrees {
        deg_b: alpha - d_l,
        deg_f: spec.g().deg() + d_l - d_lg,
        deg_h: spec.h().deg() + 2 * d_lg - d_b - d_l,
        deg_g: spec.f().deg() + d_b - d_lg,
        gamma: alpha + t.gamma - 2 * t.kappa,
        delta: spec.beta() + t.kappa - t.gamma - t.delta,
        kappa: alpha - t.kappa,
    }
}

/// Auxiliary polynomials of the non-separable case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTerms {
    /// `ρ = ℓ / gcd(b, ℓ)`.
    pub rho: BinPoly,
    /// `x^{deg ℓ} (ρ*)^{-1} mod b*/gcd(b, ℓg)*`.
    pub mu1: BinPoly,
    /// `x^{deg ℓ} (ρ*)^{-1} mod b*/gcd(b, ℓ)*`.
    pub mu2: BinPoly,
}

/// The dual generator tuple `(b̄, ℓ̄, f̄, h̄)` as a validated spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualResult {
    pub spec: CyclicCodeSpec,
    /// `None` on the separable path (`ℓ = 0`).
    pub mu: Option<MuTerms>,
}

impl DualResult {
    pub fn b_bar(&self) -> &BinPoly {
        self.spec.b()
    }

    pub fn ell_bar(&self) -> &BinPoly {
        self.spec.ell()
    }

    pub fn f_bar(&self) -> &QuatPoly {
        self.spec.f()
    }

    pub fn h_bar(&self) -> &QuatPoly {
        self.spec.h()
    }

    pub fn g_bar(&self) -> &QuatPoly {
        self.spec.g()
    }
}

fn recip(p: &BinPoly) -> BinPoly {
    p.reciprocal().expect("divisors of x^n - 1 are nonzero")
}

fn exact(a: &BinPoly, d: &BinPoly, what: &str) -> BinPoly {
    a.exact_div(d)
        .unwrap_or_else(|e| panic!("{what}: {d} does not divide {a} ({e})"))
}

/// `x^{deg ℓ} (ρ*)^{-1}` reduced modulo `m`; zero when `m = 1`.
fn mu_term(rho_rec: &BinPoly, deg_ell: usize, m: &BinPoly) -> BinPoly {
    if m.deg() == 0 {
        return BinPoly::zero();
    }
    let inv = rho_rec
        .inverse_mod(m)
        .unwrap_or_else(|e| panic!("rho* = {rho_rec} not invertible mod {m}: {e}"));
    inv.shift(deg_ell).rem(m).expect("m is nonzero")
}

/// Closed-form dual generators.
///
/// * `b̄ = (x^α - 1) / gcd(b, ℓ)*`;
/// * `f̄h̄` lifts `(x^β - 1) gcd(b, ℓg)* / (f* b*)`;
/// * `f̄` lifts `(x^β - 1) gcd(b, ℓ)* / (f* h* gcd(b, ℓg)*)`;
/// * `ℓ̄ = (x^α - 1)/b* · (gcd(b,ℓg)*/gcd(b,ℓ)* x^{𝔪 - deg f} μ1
///   + b*/gcd(b,ℓg)* x^{𝔪 - deg fh} μ2)`, reduced mod `x^α - 1` and then
///   mod `b̄` so that `deg ℓ̄ < deg b̄`.
///
/// With `ℓ = 0` the code is separable and `C⊥ = ⟨((x^α - 1)/b* | 0), (0 | g*h* + 2g*)⟩`.
///
/// Panics if an intermediate division or inversion fails, which would mean the
/// input violated an invariant that [`CyclicCodeSpec`] guarantees.
pub fn dual_generators(spec: &CyclicCodeSpec) -> Result<DualResult> {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    let x_alpha = BinPoly::x_n_minus_1(alpha);

    if spec.is_separable_form() {
        let b_bar = exact(&x_alpha, &recip(spec.b()), "b_bar");
        let f_bar = spec
            .g()
            .reciprocal()?
            .normalized_monic()
            .expect("g(0) is a unit");
        let h_bar = spec
            .h()
            .reciprocal()?
            .normalized_monic()
            .expect("h(0) is a unit");
        let dual = CyclicCodeSpec::new(alpha, beta, b_bar, BinPoly::zero(), f_bar, h_bar)
            .unwrap_or_else(|e| panic!("separable dual of {spec:?} is invalid: {e}"));
        return Ok(DualResult {
            spec: dual,
            mu: None,
        });
    }

    let m = lcm(alpha, beta);
    let x_beta = BinPoly::x_n_minus_1(beta);
    let gcd_l = spec.gcd_b_ell();
    let gcd_lg = spec.gcd_b_ell_g();
    let b_rec = recip(spec.b());
    let gcd_l_rec = recip(&gcd_l);
    let gcd_lg_rec = recip(&gcd_lg);
    let f_rec = recip(&spec.f().reduce_mod2());
    let h_rec = recip(&spec.h().reduce_mod2());

    let b_bar = exact(&x_alpha, &gcd_l_rec, "b_bar");

    // b*/gcd(b, ℓg)* divides (x^β - 1)/f* because b | h gcd(b, ℓg).
    let b_over_lg = exact(&b_rec, &gcd_lg_rec, "b*/gcd(b,lg)*");
    let fh_bar_bin = exact(&exact(&x_beta, &f_rec, "f*"), &b_over_lg, "fh_bar");
    let lg_over_l = exact(&gcd_lg_rec, &gcd_l_rec, "gcd(b,lg)*/gcd(b,l)*");
    let f_bar_bin = exact(
        &exact(&x_beta, &(&f_rec * &h_rec), "f*h*"),
        &lg_over_l,
        "f_bar",
    );
    let fh_bar = hensel_lift(&fh_bar_bin, beta)
        .unwrap_or_else(|e| panic!("lift of {fh_bar_bin} failed: {e}"));
    let f_bar =
        hensel_lift(&f_bar_bin, beta).unwrap_or_else(|e| panic!("lift of {f_bar_bin} failed: {e}"));
    let h_bar = fh_bar
        .exact_div(&f_bar)
        .unwrap_or_else(|e| panic!("f_bar = {f_bar} does not divide fh_bar = {fh_bar}: {e}"));

    let deg_ell = spec.ell().deg();
    let rho = exact(spec.ell(), &gcd_l, "rho");
    let rho_rec = recip(&rho);
    let b_over_l = exact(&b_rec, &gcd_l_rec, "b*/gcd(b,l)*");
    let mu1 = mu_term(&rho_rec, deg_ell, &b_over_lg);
    let mu2 = mu_term(&rho_rec, deg_ell, &b_over_l);

    let deg_f = spec.f().deg();
    let deg_fh = deg_f + spec.h().deg();
    let e1 = (m - deg_f) % alpha;
    let e2 = (m - deg_fh) % alpha;
    let inner = &(&lg_over_l * &mu1).shift(e1) + &(&b_over_lg * &mu2).shift(e2);
    let prefix = exact(&x_alpha, &b_rec, "(x^alpha-1)/b*");
    let ell_bar = (&prefix * &inner)
        .rem_xn_minus_1(alpha)
        .rem(&b_bar)
        .expect("b_bar is nonzero");

    let dual = CyclicCodeSpec::new(alpha, beta, b_bar, ell_bar, f_bar, h_bar)
        .unwrap_or_else(|e| panic!("dual of {spec:?} is invalid: {e}"));
    Ok(DualResult {
        spec: dual,
        mu: Some(MuTerms { rho, mu1, mu2 }),
    })
}

/// `C⊥` by scanning the whole ambient space and keeping every vector whose
/// inner product with every codeword of `C` vanishes.
pub fn brute_force_dual(spec: &CyclicCodeSpec, caps: &Caps) -> Result<CodeSet> {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    Caps::check(caps.ambient, alpha + 2 * beta, "ambient space")?;
    let code: Vec<Codeword> = enumerate_codewords(spec, caps)?
        .into_iter()
        .filter(|w| !w.is_zero())
        .collect();
    let total: u64 = 1 << (alpha + 2 * beta);
    let mut u = vec![0u8; alpha];
    let mut uq = vec![0u8; beta];
    let mut dual = CodeSet::new();
    for index in 0..total {
        let mut bits = index;
        for c in u.iter_mut() {
            *c = (bits & 1) as u8;
            bits >>= 1;
        }
        for c in uq.iter_mut() {
            *c = (bits & 3) as u8;
            bits >>= 2;
        }
        if code
            .iter()
            .all(|w| inner_product_raw(w.binary(), w.quaternary(), &u, &uq) == 0)
        {
            dual.insert(Codeword::new(u.clone(), uq.clone())?);
        }
    }
    Ok(dual)
}

/// True when the Hensel lift of `b / gcd(b, ℓg)` divides `h`; this holds for
/// every valid spec.
pub fn hensel_divisibility_check(spec: &CyclicCodeSpec) -> bool {
    let Ok(quot) = spec.b().exact_div(&spec.gcd_b_ell_g()) else {
        return false;
    };
    match hensel_lift(&quot, spec.beta()) {
        Ok(lift) => lift.divides(spec.h()),
        Err(_) => false,
    }
}
