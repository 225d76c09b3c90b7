use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    is_cyclic, is_separable, is_separable_by_enumeration, min_distance_of, singleton_slack,
};
use crate::code::{
    cardinality, circ_product, code_type, cyclic_shift, enumerate_codewords, inner_product, lcm,
    module_closure, Caps, CodeType, Codeword, CyclicCodeSpec,
};
use crate::dual::{brute_force_dual, dual_degrees, dual_generators, hensel_divisibility_check};
use crate::{Error, Result};

/// Random pairs drawn for each `∘` check.
const CIRC_SAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn random_word(rng: &mut ChaCha8Rng, alpha: usize, beta: usize) -> Codeword {
    let u = (0..alpha).map(|_| rng.gen_range(0..2)).collect();
    let uq = (0..beta).map(|_| rng.gen_range(0..4)).collect();
    Codeword::new(u, uq).expect("entries in range")
}

/// Every coefficient of `w1 ∘ w2` against the matching shifted inner product.
fn circ_matches_shifts(w1: &Codeword, w2: &Codeword) -> Result<bool> {
    let m = lcm(w1.alpha(), w1.beta());
    let c = circ_product(w1, w2)?;
    for i in 0..m {
        if c.coeff(m - 1 - i) != inner_product(w1, &cyclic_shift(w2, i as i64))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every closed-form versus brute-force comparison on `spec`.
pub fn verify(spec: &CyclicCodeSpec, caps: &Caps, seed: u64) -> Result<Vec<Check>> {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    let mut out = Vec::new();
    let set = enumerate_codewords(spec, caps)?;

    let formula = code_type(spec);
    let observed = CodeType::from_codewords(alpha, beta, &set);
    out.push(check(
        "type",
        formula == observed,
        format!("type from degrees {formula} = type from codewords {observed}"),
    ));
    let size = cardinality(spec);
    out.push(check(
        "cardinality",
        Some(set.len() as u128) == size.to_u128(),
        format!(
            "|C| = 2^(alpha-deg b) 4^(deg g) 2^(deg h) = {size}: {} codewords",
            set.len()
        ),
    ));
    let closure = module_closure(&spec.generators(), alpha, beta, caps.enumeration)?;
    out.push(check(
        "spanning set",
        closure == set,
        format!(
            "spanning set = module closure of generators: {} codewords",
            closure.len()
        ),
    ));
    out.push(check(
        "cyclic",
        is_cyclic(&set),
        "closed under cyclic shift".into(),
    ));

    let dual = dual_generators(spec)?;
    let formula_dual = enumerate_codewords(&dual.spec, caps)?;
    let brute = brute_force_dual(spec, caps)?;
    out.push(check(
        "dual",
        formula_dual == brute,
        format!("formula dual = brute-force dual: {} codewords", brute.len()),
    ));
    out.push(check(
        "dual size",
        (set.len() as u128) * (brute.len() as u128) == 1u128 << (alpha + 2 * beta),
        format!("|C| |C_perp| = 2^{}", alpha + 2 * beta),
    ));
    let dd = dual_degrees(spec);
    let actual = (
        dual.b_bar().deg(),
        dual.f_bar().deg(),
        dual.h_bar().deg(),
        dual.g_bar().deg(),
    );
    out.push(check(
        "dual degrees",
        actual == (dd.deg_b, dd.deg_f, dd.deg_h, dd.deg_g),
        format!(
            "deg (b_bar, f_bar, h_bar, g_bar) = ({}, {}, {}, {})",
            dd.deg_b, dd.deg_f, dd.deg_h, dd.deg_g
        ),
    ));
    let dt = CodeType::from_codewords(alpha, beta, &brute);
    out.push(check(
        "dual type",
        (dt.gamma, dt.delta, dt.kappa) == (dd.gamma, dd.delta, dd.kappa)
            && dt == code_type(&dual.spec),
        format!("dual type {dt}"),
    ));
    let twice = dual_generators(&dual.spec)?;
    out.push(check(
        "involution",
        enumerate_codewords(&twice.spec, caps)? == set,
        "dual of dual = C".into(),
    ));
    out.push(check(
        "hensel",
        hensel_divisibility_check(spec),
        "lift of b/gcd(b, ell g) divides h".into(),
    ));
    let (by_type, by_form, by_set) = (
        is_separable(spec),
        spec.is_separable_form(),
        is_separable_by_enumeration(spec, caps)?,
    );
    out.push(check(
        "separability",
        by_type == by_form && by_form == by_set,
        format!("separable={by_set} by type, by ell = 0 and by projections"),
    ));
    out.push(match min_distance_of(&set) {
        Ok(d) => check(
            "singleton",
            singleton_slack(spec, d) >= 0,
            format!("d = {d} within the Singleton-type bound"),
        ),
        Err(Error::TrivialCode) => check("singleton", true, "trivial code".into()),
        Err(e) => return Err(e),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    for _ in 0..CIRC_SAMPLES {
        let w1 = random_word(&mut rng, alpha, beta);
        let w2 = random_word(&mut rng, alpha, beta);
        ok &= circ_matches_shifts(&w1, &w2)?;
    }
    out.push(check(
        "circ",
        ok,
        format!("circ product coefficients = shifted inner products on {CIRC_SAMPLES} random pairs (seed {seed})"),
    ));
    let code: Vec<&Codeword> = set.iter().collect();
    let perp: Vec<&Codeword> = brute.iter().collect();
    let mut ok = true;
    for _ in 0..CIRC_SAMPLES {
        let c = code[rng.gen_range(0..code.len())];
        let d = perp[rng.gen_range(0..perp.len())];
        ok &= circ_product(c, d)?.is_zero();
    }
    out.push(check(
        "circ dual",
        ok,
        format!("circ product vanishes on {CIRC_SAMPLES} random pairs from C x C_perp"),
    ));
    Ok(out)
}
