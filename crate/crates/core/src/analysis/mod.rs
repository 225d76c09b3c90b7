//! Distance, optimality and duality tests, named constructions and search.

mod report;
mod search;

use crate::code::{code_type, cyclic_shift, enumerate_codewords, Caps, CodeSet, CyclicCodeSpec};
use crate::dual::dual_generators;
use crate::gf2poly::BinPoly;
use crate::z4poly::QuatPoly;
use crate::{Error, Result};

pub use report::{report, CodeReport, ReportRecord};
pub use search::{search_codes, valid_specs, Predicate, SearchHit};

/// Minimum Hamming weight of the Gray image over nonzero codewords.
pub fn min_distance(spec: &CyclicCodeSpec, caps: &Caps) -> Result<usize> {
    let set = enumerate_codewords(spec, caps)?;
    min_distance_of(&set)
}

pub(crate) fn min_distance_of(set: &CodeSet) -> Result<usize> {
    set.iter()
        .filter(|w| !w.is_zero())
        .map(|w| w.lee_weight())
        .min()
        .ok_or(Error::TrivialCode)
}

/// Twice the slack of the Singleton-type bound `(d-1)/2 <= α/2 + β - γ/2 - δ`,
/// i.e. `α + 2β - γ - 2δ - (d - 1)`. Never negative for a genuine code.
pub fn singleton_slack(spec: &CyclicCodeSpec, d: usize) -> i64 {
    let t = code_type(spec);
    (t.alpha + 2 * t.beta) as i64 - (t.gamma + 2 * t.delta) as i64 - (d as i64 - 1)
}

/// True when the Singleton-type bound holds with equality.
pub fn is_mdss(spec: &CyclicCodeSpec, caps: &Caps) -> Result<bool> {
    let d = min_distance(spec, caps)?;
    Ok(singleton_slack(spec, d) == 0)
}

/// `C = C⊥`, decided by comparing the codeword set of `C` with that of the
/// closed-form dual.
pub fn is_self_dual(spec: &CyclicCodeSpec, caps: &Caps) -> Result<bool> {
    let log2 = crate::code::cardinality(spec).log2();
    if 2 * log2 != spec.alpha() + 2 * spec.beta() {
        return Ok(false);
    }
    let dual = dual_generators(spec)?;
    Ok(enumerate_codewords(spec, caps)? == enumerate_codewords(&dual.spec, caps)?)
}

/// `κ2 = 0` and `δ1 = 0`.
pub fn is_separable(spec: &CyclicCodeSpec) -> bool {
    let t = code_type(spec);
    t.kappa2 == 0 && t.delta1 == 0
}

/// `C = C_X × C_Y`, decided from the codeword set. Since `C ⊆ C_X × C_Y`
/// always holds, comparing sizes suffices.
pub fn is_separable_by_enumeration(spec: &CyclicCodeSpec, caps: &Caps) -> Result<bool> {
    let set = enumerate_codewords(spec, caps)?;
    let xs: std::collections::BTreeSet<&[u8]> = set.iter().map(|w| w.binary()).collect();
    let ys: std::collections::BTreeSet<&[u8]> = set.iter().map(|w| w.quaternary()).collect();
    Ok(xs.len() * ys.len() == set.len())
}

/// True when every cyclic shift of every codeword is again a codeword.
pub fn is_cyclic(set: &CodeSet) -> bool {
    set.iter().all(|w| set.contains(&cyclic_shift(w, 1)))
}

/// The self-dual code `b = x^{α/2} - 1, ℓ = 0, f = 1, h = x^β - 1` of type
/// `(α, β; β + α/2, 0; α/2)`.
pub fn construct_self_dual_family(alpha: usize, beta: usize) -> Result<CyclicCodeSpec> {
    if alpha == 0 || alpha % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "alpha={alpha} must be even and positive"
        )));
    }
    CyclicCodeSpec::new(
        alpha,
        beta,
        BinPoly::x_n_minus_1(alpha / 2),
        BinPoly::zero(),
        QuatPoly::one(),
        QuatPoly::x_n_minus_1(beta),
    )
}

/// The MDSS code `b = x - 1, ℓ = 1, f = h = 1` of type `(α, β; α-1, β; α-1)`,
/// whose Gray image is the even-weight code.
pub fn construct_mdss(alpha: usize, beta: usize) -> Result<CyclicCodeSpec> {
    CyclicCodeSpec::new(
        alpha,
        beta,
        BinPoly::from_coeffs([1, 1]),
        BinPoly::one(),
        QuatPoly::one(),
        QuatPoly::one(),
    )
}
