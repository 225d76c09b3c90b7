//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every budget below is a hard limit on wall-clock time.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z2z4::analysis::{
    construct_mdss, construct_self_dual_family, is_mdss, is_self_dual, is_separable,
    is_separable_by_enumeration, min_distance, valid_specs,
};
use z2z4::code::{
    circ_product, code_type, cyclic_shift, enumerate_codewords, gray_map, inner_product,
    module_closure, spanning_set, Caps, CodeSet, CodeType, Codeword, CyclicCodeSpec,
};
use z2z4::dual::{brute_force_dual, dual_generators, hensel_divisibility_check};
use z2z4::z4poly::hensel_lift;
use z2z4::{BinPoly, QuatPoly};

const BUDGET_C1: Duration = Duration::from_secs(1);
const BUDGET_ORACLE: Duration = Duration::from_secs(300);
const BUDGET_CARDINALITY: Duration = Duration::from_secs(300);
const BUDGET_TABLE: Duration = Duration::from_secs(120);
const BUDGET_FAMILY: Duration = Duration::from_secs(120);
const BUDGET_MDSS: Duration = Duration::from_secs(60);
const BUDGET_HENSEL: Duration = Duration::from_secs(120);
const BUDGET_CIRC: Duration = Duration::from_secs(60);
const BUDGET_INVOLUTION: Duration = Duration::from_secs(300);

/// Ambient sizes of the exhaustive family.
const FAMILY_ALPHA_MAX: usize = 5;
const FAMILY_BETAS: [usize; 3] = [1, 3, 5];
const CIRC_PAIRS: usize = 1000;
const CIRC_SEED: u64 = 20_240_601;

type Verdict = Result<String, String>;

fn caps() -> Caps {
    Caps::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A matrix row written with the highest-degree coefficient first, as in the
/// standard generator matrices, converted to a codeword.
fn row_highest_first(s: &str) -> Codeword {
    let (u, q) = s.split_once('|').unwrap();
    let rev = |t: &str| t.chars().rev().collect::<String>();
    format!("{}|{}", rev(u), rev(q)).parse().unwrap()
}

fn family() -> Vec<CyclicCodeSpec> {
    let mut out = Vec::new();
    for alpha in 1..=FAMILY_ALPHA_MAX {
        for beta in FAMILY_BETAS {
            out.extend(valid_specs(alpha, beta).expect("family enumerates"));
        }
    }
    out
}

fn c1() -> CyclicCodeSpec {
    CyclicCodeSpec::new(
        3,
        3,
        BinPoly::x_n_minus_1(3),
        BinPoly::from_coeffs([1, 1]),
        QuatPoly::one(),
        QuatPoly::from_coeffs([1, 1, 1]),
    )
    .unwrap()
}

fn criterion_1() -> Verdict {
    let spec = c1();
    let t = code_type(&spec);
    ensure(t.to_string() == "(3,3;2,1;2)", || format!("type {t}"))?;
    let set = enumerate_codewords(&spec, &caps()).unwrap();
    ensure(set.len() == 16, || format!("|C| = {}", set.len()))?;
    for row in ["101|200", "011|220", "000|111"] {
        ensure(set.contains(&row_highest_first(row)), || {
            format!("G row {row} missing")
        })?;
    }
    let d = dual_generators(&spec).unwrap();
    ensure(d.b_bar() == &BinPoly::from_coeffs([1, 1, 1]), || {
        format!("b_bar = {}", d.b_bar())
    })?;
    ensure(d.ell_bar() == &BinPoly::x(), || {
        format!("ell_bar = {}", d.ell_bar())
    })?;
    ensure(d.f_bar() == &QuatPoly::from_coeffs([3, 1]), || {
        format!("f_bar = {}", d.f_bar())
    })?;
    ensure(d.h_bar().is_one(), || format!("h_bar = {}", d.h_bar()))?;
    let dual = enumerate_codewords(&d.spec, &caps()).unwrap();
    ensure(dual.len() == 32, || format!("|C_perp| = {}", dual.len()))?;
    for row in ["111|000", "100|310", "001|301"] {
        ensure(dual.contains(&row_highest_first(row)), || {
            format!("H row {row} missing")
        })?;
    }
    let dt = code_type(&d.spec);
    ensure(dt.to_string() == "(3,3;1,2;1)", || {
        format!("dual type {dt}")
    })?;
    Ok("type (3,3;2,1;2), 16 codewords incl. G, dual x^2+x+1 | x | x-1 | 1 with 32 codewords incl. H".into())
}

fn criterion_2(specs: &[CyclicCodeSpec]) -> Verdict {
    let mut mismatches = Vec::new();
    for spec in specs {
        let n = spec.alpha() + 2 * spec.beta();
        let formula = enumerate_codewords(&dual_generators(spec).unwrap().spec, &caps()).unwrap();
        let brute = brute_force_dual(spec, &caps()).unwrap();
        let size = enumerate_codewords(spec, &caps()).unwrap().len() as u64;
        if formula != brute || size * brute.len() as u64 != 1 << n {
            mismatches.push(format!("{spec:?}"));
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!(
        "{} specs, formula dual = brute-force dual, |C||C_perp| = 2^(alpha+2beta)",
        specs.len()
    ))
}

fn criterion_3(specs: &[CyclicCodeSpec]) -> Verdict {
    for spec in specs {
        let set = enumerate_codewords(spec, &caps()).unwrap();
        let log2 = spec.alpha() - spec.b().degree().unwrap()
            + 2 * spec.g().degree().unwrap()
            + spec.h().degree().unwrap();
        ensure(set.len() == 1 << log2, || {
            format!("|C| = {} vs 2^{log2} for {spec:?}", set.len())
        })?;
        let observed = CodeType::from_codewords(spec.alpha(), spec.beta(), &set);
        let formula = code_type(spec);
        ensure(observed == formula, || {
            format!("{observed:?} vs {formula:?} for {spec:?}")
        })?;
        let closure =
            module_closure(&spec.generators(), spec.alpha(), spec.beta(), 1 << 20).unwrap();
        ensure(closure == set, || format!("closure differs for {spec:?}"))?;
    }
    Ok(format!(
        "{} specs, sizes and (gamma, delta, kappa, kappa1, kappa2, delta1, delta2) agree",
        specs.len()
    ))
}

/// `C ⊆ C⊥` from pairwise orthogonality of all shifts of the spanning rows,
/// which with `|C|^2 = 2^{α+2β}` forces `C = C⊥` without the dual formulas.
fn self_dual_by_rows(spec: &CyclicCodeSpec, set: &CodeSet) -> bool {
    let rows: Vec<Codeword> = spanning_set(spec).into_iter().map(|r| r.word).collect();
    let period = lcm(spec.alpha(), spec.beta()) as i64;
    let orthogonal = rows.iter().all(|a| {
        rows.iter()
            .all(|b| (0..period).all(|i| inner_product(a, &cyclic_shift(b, i)).unwrap() == 0))
    });
    orthogonal && (set.len() as u128).pow(2) == 1u128 << (spec.alpha() + 2 * spec.beta())
}

fn criterion_4() -> Verdict {
    let rows = [
        (
            CyclicCodeSpec::new(
                14,
                7,
                BinPoly::from_exponents(&[10, 8, 7, 3, 1, 0]),
                BinPoly::from_exponents(&[6, 4, 1, 0]),
                QuatPoly::one(),
                QuatPoly::from_coeffs([1, 1, 3, 2, 1]),
            )
            .unwrap(),
            "(14,7;8,3;7)",
            14,
        ),
        (
            CyclicCodeSpec::new(
                10,
                5,
                BinPoly::x_n_minus_1(5),
                BinPoly::zero(),
                QuatPoly::one(),
                QuatPoly::x_n_minus_1(5),
            )
            .unwrap(),
            "(10,5;10,0;5)",
            10,
        ),
    ];
    for (spec, ty, log2) in &rows {
        let t = code_type(spec);
        ensure(t.to_string() == *ty, || format!("type {t}, expected {ty}"))?;
        let set = enumerate_codewords(spec, &caps()).unwrap();
        ensure(set.len() == 1 << log2, || format!("|C| = {}", set.len()))?;
        let dual = enumerate_codewords(&dual_generators(spec).unwrap().spec, &caps()).unwrap();
        ensure(dual == set, || format!("C != formula dual for {ty}"))?;
        ensure(self_dual_by_rows(spec, &set), || {
            format!("rows not self-orthogonal for {ty}")
        })?;
    }
    Ok("(14,7;8,3;7) with 2^14 and (10,5;10,0;5) with 2^10 codewords are self-dual".into())
}

fn criterion_5() -> Verdict {
    let mut count = 0;
    for alpha in (2..=10).step_by(2) {
        for beta in (1..=7).step_by(2) {
            let spec = construct_self_dual_family(alpha, beta).unwrap();
            let t = code_type(&spec);
            let want = (alpha, beta, beta + alpha / 2, 0, alpha / 2);
            ensure((t.alpha, t.beta, t.gamma, t.delta, t.kappa) == want, || {
                format!("type {t} for ({alpha},{beta})")
            })?;
            ensure(is_self_dual(&spec, &caps()).unwrap(), || {
                format!("({alpha},{beta}) not self-dual")
            })?;
            let set = enumerate_codewords(&spec, &caps()).unwrap();
            ensure(self_dual_by_rows(&spec, &set), || {
                format!("({alpha},{beta}) rows")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} family members self-dual with type (a,b;b+a/2,0;a/2)"
    ))
}

fn gray_images(set: &CodeSet) -> BTreeSet<Vec<u8>> {
    set.iter().map(gray_map).collect()
}

fn criterion_6() -> Verdict {
    let mut count = 0;
    for alpha in 1..=4 {
        for beta in [1, 3, 5] {
            let n = alpha + 2 * beta;
            let spec = construct_mdss(alpha, beta).unwrap();
            let images = gray_images(&enumerate_codewords(&spec, &caps()).unwrap());
            let even = images.len() == 1 << (n - 1)
                && images
                    .iter()
                    .all(|v| v.len() == n && v.iter().filter(|&&b| b == 1).count() % 2 == 0);
            ensure(even, || {
                format!("({alpha},{beta}) Gray image is not the even-weight code")
            })?;
            ensure(min_distance(&spec, &caps()).unwrap() == 2, || {
                format!("({alpha},{beta}) d")
            })?;
            ensure(is_mdss(&spec, &caps()).unwrap(), || {
                format!("({alpha},{beta}) not MDSS")
            })?;

            let d = dual_generators(&spec).unwrap();
            ensure(d.b_bar() == &BinPoly::x_n_minus_1(alpha), || {
                format!("b_bar = {}", d.b_bar())
            })?;
            ensure(d.ell_bar() == &BinPoly::theta(alpha, 1).unwrap(), || {
                format!("ell_bar = {}", d.ell_bar())
            })?;
            let theta_b = QuatPoly::from(&BinPoly::theta(beta, 1).unwrap());
            ensure(d.f_bar() == &theta_b, || format!("f_bar = {}", d.f_bar()))?;
            ensure(d.h_bar() == &QuatPoly::from_coeffs([3, 1]), || {
                format!("h_bar = {}", d.h_bar())
            })?;
            let dual_images = gray_images(&enumerate_codewords(&d.spec, &caps()).unwrap());
            let rep: BTreeSet<Vec<u8>> = [vec![0; n], vec![1; n]].into();
            ensure(dual_images == rep, || {
                format!("({alpha},{beta}) dual Gray image")
            })?;
            ensure(min_distance(&d.spec, &caps()).unwrap() == n, || {
                format!("({alpha},{beta}) dual d")
            })?;
            ensure(is_mdss(&d.spec, &caps()).unwrap(), || {
                format!("({alpha},{beta}) dual not MDSS")
            })?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} MDSS pairs: even-weight code (d=2) and repetition code (d=a+2b)"
    ))
}

/// Every monic divisor of `x^β - 1` over Z4, by exhaustive trial division.
fn all_monic_z4_divisors(beta: usize) -> Vec<QuatPoly> {
    let target = QuatPoly::x_n_minus_1(beta);
    let mut out = Vec::new();
    for deg in 0..=beta {
        for low in 0..4u64.pow(deg as u32) {
            let mut c: Vec<u8> = (0..deg).map(|i| ((low >> (2 * i)) & 3) as u8).collect();
            c.push(1);
            let p = QuatPoly::from_coeffs(c);
            if p.divides(&target) {
                out.push(p);
            }
        }
    }
    out
}

fn criterion_7(specs: &[CyclicCodeSpec]) -> Verdict {
    let mut lifts = 0;
    for beta in [1, 3, 5, 7, 9, 15] {
        let divisors = BinPoly::divisors_xn_minus_1(beta).unwrap();
        let exhaustive = (beta <= 9).then(|| all_monic_z4_divisors(beta));
        if let Some(all) = &exhaustive {
            ensure(all.len() == divisors.len(), || {
                format!(
                    "beta={beta}: {} Z4 divisors vs {} binary",
                    all.len(),
                    divisors.len()
                )
            })?;
        }
        for d in &divisors {
            let lift = hensel_lift(d, beta).unwrap();
            ensure(lift.is_monic() && &lift.reduce_mod2() == d, || {
                format!("lift of {d} is {lift}")
            })?;
            ensure(lift.divides(&QuatPoly::x_n_minus_1(beta)), || {
                format!("{lift} does not divide x^{beta}-1")
            })?;
            if let Some(all) = &exhaustive {
                let same: Vec<&QuatPoly> = all.iter().filter(|p| &p.reduce_mod2() == d).collect();
                ensure(same == [&lift], || {
                    format!("beta={beta}: lifts of {d}: {same:?}")
                })?;
            }
            lifts += 1;
        }
    }
    for spec in specs {
        ensure(hensel_divisibility_check(spec), || {
            format!("lift of b/gcd(b, ell g) does not divide h for {spec:?}")
        })?;
    }
    Ok(format!(
        "{lifts} lifts unique and correct, lift divisibility on {} specs",
        specs.len()
    ))
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn random_word(rng: &mut ChaCha8Rng, alpha: usize, beta: usize) -> Codeword {
    let u = (0..alpha).map(|_| rng.gen_range(0..2)).collect();
    let q = (0..beta).map(|_| rng.gen_range(0..4)).collect();
    Codeword::new(u, q).unwrap()
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(CIRC_SEED);
    let mut orthogonal_pairs = 0;
    for k in 0..CIRC_PAIRS {
        let alpha = rng.gen_range(1..=6);
        let beta = rng.gen_range(1..=7);
        // Every other pair is drawn from C x C⊥ so both outcomes occur.
        let (w1, w2) = if k % 2 == 0 || beta % 2 == 0 {
            (
                random_word(&mut rng, alpha, beta),
                random_word(&mut rng, alpha, beta),
            )
        } else {
            let specs = valid_specs(alpha, beta).unwrap();
            let spec = &specs[rng.gen_range(0..specs.len())];
            let code: Vec<Codeword> = enumerate_codewords(spec, &caps())
                .unwrap()
                .into_iter()
                .collect();
            let perp: Vec<Codeword> =
                enumerate_codewords(&dual_generators(spec).unwrap().spec, &caps())
                    .unwrap()
                    .into_iter()
                    .collect();
            (
                code[rng.gen_range(0..code.len())].clone(),
                perp[rng.gen_range(0..perp.len())].clone(),
            )
        };
        let m = lcm(alpha, beta);
        let all_vanish =
            (0..m).all(|i| inner_product(&w1, &cyclic_shift(&w2, i as i64)).unwrap() == 0);
        let circ = circ_product(&w1, &w2).unwrap();
        ensure(circ.is_zero() == all_vanish, || {
            format!("pair {k}: {w1} / {w2}")
        })?;
        orthogonal_pairs += usize::from(all_vanish);

        let w3 = random_word(&mut rng, alpha, beta);
        let left = circ_product(&w1.try_add(&w3).unwrap(), &w2).unwrap();
        let right = circ_product(&w1, &w2.try_add(&w3).unwrap()).unwrap();
        ensure(left == &circ + &circ_product(&w3, &w2).unwrap(), || {
            format!("left linearity at {k}")
        })?;
        ensure(right == &circ + &circ_product(&w1, &w3).unwrap(), || {
            format!("right linearity at {k}")
        })?;
    }
    ensure(
        orthogonal_pairs > 0 && orthogonal_pairs < CIRC_PAIRS,
        || "degenerate sample".into(),
    )?;
    Ok(format!(
        "{CIRC_PAIRS} pairs (seed {CIRC_SEED}), {orthogonal_pairs} orthogonal under all shifts, bilinear"
    ))
}

fn criterion_9(specs: &[CyclicCodeSpec]) -> Verdict {
    let mut separable = 0;
    for spec in specs {
        let set = enumerate_codewords(spec, &caps()).unwrap();
        let twice = dual_generators(&dual_generators(spec).unwrap().spec).unwrap();
        ensure(
            enumerate_codewords(&twice.spec, &caps()).unwrap() == set,
            || format!("dual of dual differs for {spec:?}"),
        )?;
        let by_type = is_separable(spec);
        let by_ell = spec.ell().is_zero();
        let by_set = is_separable_by_enumeration(spec, &caps()).unwrap();
        ensure(by_type == by_ell && by_ell == by_set, || {
            format!("separability {by_type}/{by_ell}/{by_set} for {spec:?}")
        })?;
        separable += usize::from(by_set);
    }
    Ok(format!(
        "{} specs: involution holds, {separable} separable by all three tests",
        specs.len()
    ))
}

fn main() {
    let mut failures = 0;
    let mut report = |n: usize, name: &str, budget: Duration, f: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let verdict = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "{} criterion {n} ({name}): {detail} [{:.2}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    };

    let specs = family();
    report(1, "worked example", BUDGET_C1, &mut criterion_1);
    report(2, "oracle equivalence", BUDGET_ORACLE, &mut || {
        criterion_2(&specs)
    });
    report(3, "cardinality law", BUDGET_CARDINALITY, &mut || {
        criterion_3(&specs)
    });
    report(4, "self-dual table", BUDGET_TABLE, &mut criterion_4);
    report(5, "self-dual family", BUDGET_FAMILY, &mut criterion_5);
    report(6, "MDSS pair", BUDGET_MDSS, &mut criterion_6);
    report(7, "Hensel lifts", BUDGET_HENSEL, &mut || {
        criterion_7(&specs)
    });
    report(8, "circ map", BUDGET_CIRC, &mut criterion_8);
    report(
        9,
        "involution and separability",
        BUDGET_INVOLUTION,
        &mut || criterion_9(&specs),
    );

    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
