use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{is_self_dual, is_separable, min_distance, report, singleton_slack, CodeReport};
use crate::code::{cardinality, enumerate_codewords, Caps, CodeSet, CyclicCodeSpec};
use crate::gf2poly::BinPoly;
use crate::z4poly::{hensel_lift, QuatPoly};
use crate::{Error, Result};

/// Search filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    SelfDual,
    Mdss,
    Separable,
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "self-dual" | "self_dual" => Ok(Predicate::SelfDual),
            "mdss" => Ok(Predicate::Mdss),
            "separable" => Ok(Predicate::Separable),
            other => Err(Error::parse(0, format!("unknown predicate '{other}'"))),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Predicate::SelfDual => "self-dual",
            Predicate::Mdss => "mdss",
            Predicate::Separable => "separable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub spec: CyclicCodeSpec,
    pub report: CodeReport,
}

/// Every monic factorization `f h g = x^β - 1` over Z4, as `(f, h)` pairs.
///
/// For odd `β` monic Z4 divisors of `x^β - 1` are exactly the Hensel lifts of
/// binary divisors, so it suffices to distribute the binary irreducible
/// factors of `x^β - 1` among `f`, `h` and `g`.
fn z4_factor_pairs(beta: usize) -> Result<Vec<(QuatPoly, QuatPoly)>> {
    let factors = BinPoly::factor_xn_minus_1(beta)?;
    let k = factors.len();
    let mut pairs = Vec::with_capacity(3usize.pow(k as u32));
    for code in 0..3usize.pow(k as u32) {
        let (mut f, mut h) = (BinPoly::one(), BinPoly::one());
        let mut c = code;
        for p in &factors {
            match c % 3 {
                0 => f = &f * p,
                1 => h = &h * p,
                _ => {}
            }
            c /= 3;
        }
        pairs.push((hensel_lift(&f, beta)?, hensel_lift(&h, beta)?));
    }
    Ok(pairs)
}

/// Every valid generator tuple for the ambient `(α, β)`, in canonical order.
///
/// `ℓ` ranges over residues mod `b` with `b | g h ℓ` mod 2, which are the
/// multiples of `b / gcd(b, gh)` of degree below `deg b`.
pub fn valid_specs(alpha: usize, beta: usize) -> Result<Vec<CyclicCodeSpec>> {
    let bs = BinPoly::divisors_xn_minus_1(alpha)?;
    let pairs = z4_factor_pairs(beta)?;
    let mut specs = Vec::new();
    for b in &bs {
        for (f, h) in &pairs {
            let gh = BinPoly::x_n_minus_1(beta).exact_div(&f.reduce_mod2())?;
            let common = b.gcd(&gh)?;
            let step = b.exact_div(&common)?;
            let free = common.deg();
            for k in 0..(1u64 << free) {
                let mult = BinPoly::from_coeffs((0..free).map(|i| ((k >> i) & 1) as u8));
                let ell = &mult * &step;
                specs.push(CyclicCodeSpec::new(
                    alpha,
                    beta,
                    b.clone(),
                    ell,
                    f.clone(),
                    h.clone(),
                )?);
            }
        }
    }
    specs.sort_by_key(|s| s.sort_key());
    Ok(specs)
}

fn matches(spec: &CyclicCodeSpec, predicate: Predicate, caps: &Caps) -> Result<bool> {
    match predicate {
        Predicate::SelfDual => is_self_dual(spec, caps),
        Predicate::Separable => Ok(is_separable(spec)),
        Predicate::Mdss => match min_distance(spec, caps) {
            Ok(d) => Ok(singleton_slack(spec, d) == 0),
            Err(Error::TrivialCode) => Ok(false),
            Err(e) => Err(e),
        },
    }
}

/// All codes for `1 <= α <= alpha_max` and `β ∈ beta_set` satisfying the
/// predicate, one representative tuple per distinct codeword set.
///
/// Results are sorted by `(α, β, deg b, coefficients)` and the first tuple
/// of each codeword set is kept.
pub fn search_codes(
    alpha_max: usize,
    beta_set: &[usize],
    predicate: Predicate,
    caps: &Caps,
) -> Result<Vec<SearchHit>> {
    let mut betas = beta_set.to_vec();
    betas.sort_unstable();
    betas.dedup();
    let mut specs = Vec::new();
    for alpha in 1..=alpha_max {
        for &beta in &betas {
            specs.extend(valid_specs(alpha, beta)?);
        }
    }
    for s in &specs {
        Caps::check(caps.enumeration, cardinality(s).log2(), "code")?;
    }
    let keep: Vec<bool> = specs
        .par_iter()
        .map(|s| matches(s, predicate, caps))
        .collect::<Result<_>>()?;
    let mut hits: Vec<CyclicCodeSpec> = specs
        .into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect();
    hits.sort_by_key(|s| s.sort_key());

    let sets: Vec<CodeSet> = hits
        .par_iter()
        .map(|s| enumerate_codewords(s, caps))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<(usize, usize, CodeSet)> = HashSet::new();
    let mut unique = Vec::new();
    for (spec, set) in hits.into_iter().zip(sets) {
        if seen.insert((spec.alpha(), spec.beta(), set)) {
            unique.push(spec);
        }
    }
    unique
        .into_par_iter()
        .map(|spec| {
            let report = report(&spec, caps)?;
            Ok(SearchHit { spec, report })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{construct_mdss, construct_self_dual_family};
    use crate::code::gray_map;

    #[test]
    fn factor_pairs_cover_all_divisor_triples() {
        assert_eq!(z4_factor_pairs(1).unwrap().len(), 3);
        assert_eq!(z4_factor_pairs(7).unwrap().len(), 27);
        for (f, h) in z4_factor_pairs(7).unwrap() {
            assert!(QuatPoly::exact_divide_xbeta(&(&f * &h), 7).is_ok());
        }
    }

    #[test]
    fn valid_specs_are_sorted_and_valid() {
        let specs = valid_specs(3, 3).unwrap();
        assert!(!specs.is_empty());
        assert!(specs.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        // C1 is among them.
        assert!(specs.iter().any(|s| s.b() == &BinPoly::x_n_minus_1(3)
            && s.ell() == &BinPoly::from_coeffs([1, 1])
            && s.f().is_one()
            && s.h() == &QuatPoly::from_coeffs([1, 1, 1])));
    }

    #[test]
    fn small_self_dual_search() {
        let caps = Caps::default();
        let hits = search_codes(2, &[1], Predicate::SelfDual, &caps).unwrap();
        let fam = enumerate_codewords(&construct_self_dual_family(2, 1).unwrap(), &caps).unwrap();
        assert!(hits
            .iter()
            .any(|h| enumerate_codewords(&h.spec, &caps).unwrap() == fam));
        assert!(hits.iter().all(|h| h.report.is_self_dual));
    }

    #[test]
    fn small_mdss_search() {
        let caps = Caps::default();
        let hits = search_codes(3, &[3], Predicate::Mdss, &caps).unwrap();
        for alpha in 1..=3 {
            let target = enumerate_codewords(&construct_mdss(alpha, 3).unwrap(), &caps).unwrap();
            assert!(hits.iter().any(|h| h.spec.alpha() == alpha
                && enumerate_codewords(&h.spec, &caps).unwrap() == target));
        }
        for h in &hits {
            let d = h.report.min_distance.unwrap();
            if d > 2 {
                // Only the repetition-type duals exceed distance 2.
                let set = enumerate_codewords(&h.spec, &caps).unwrap();
                assert_eq!(set.len(), 2);
                let ones = set.iter().find(|w| !w.is_zero()).unwrap();
                assert!(gray_map(ones).iter().all(|&b| b == 1));
            }
        }
    }
}
