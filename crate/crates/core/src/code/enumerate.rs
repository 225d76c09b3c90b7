//! Spanning sets, cardinalities and exhaustive enumeration.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use super::{cyclic_shift, lcm, star_action, CodeType, Codeword, CyclicCodeSpec};
use crate::gf2poly::BinPoly;
use crate::z4poly::QuatPoly;
use crate::{Error, Result};

/// A set of codewords, ordered for deterministic output.
pub type CodeSet = BTreeSet<Codeword>;

pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 22;
pub const DEFAULT_AMBIENT_CAP: u64 = 1 << 24;

/// Upper bounds on the sets that may be materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest code that may be enumerated.
    pub enumeration: u64,
    /// Largest ambient space `2^α 4^β` that may be scanned.
    pub ambient: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            ambient: DEFAULT_AMBIENT_CAP,
        }
    }
}

impl Caps {
    pub(crate) fn check(cap: u64, log2_size: usize, what: &'static str) -> Result<()> {
        if log2_size >= 64 || (1u64 << log2_size) > cap {
            return Err(Error::TooLarge {
                what,
                log2_size,
                cap,
            });
        }
        Ok(())
    }
}

/// A set size stored as its base-2 logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CodeSize(pub usize);

impl CodeSize {
    pub fn log2(self) -> usize {
        self.0
    }

    pub fn to_u128(self) -> Option<u128> {
        1u128.checked_shl(self.0 as u32)
    }
}

impl fmt::Display for CodeSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u128() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "2^{}", self.0),
        }
    }
}

/// `|C| = 2^{α - deg b} 4^{deg g} 2^{deg h}`.
pub fn cardinality(spec: &CyclicCodeSpec) -> CodeSize {
    CodeSize(spec.alpha() - spec.b().deg() + 2 * spec.g().deg() + spec.h().deg())
}

/// Sizes of `C`, its projections and their duals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CardinalityFamily {
    pub code: CodeSize,
    pub dual: CodeSize,
    pub x_projection: CodeSize,
    pub x_projection_dual: CodeSize,
    pub y_projection: CodeSize,
    pub y_projection_dual: CodeSize,
}

/// The six sizes determined by a type.
pub fn cardinality_family(t: &CodeType) -> CardinalityFamily {
    let (a, b, g, d, k, k1, d1) = (
        t.alpha, t.beta, t.gamma, t.delta, t.kappa, t.kappa1, t.delta1,
    );
    CardinalityFamily {
        code: CodeSize(g + 2 * d),
        dual: CodeSize(a + g - 2 * k + 2 * (b + k - g - d)),
        x_projection: CodeSize(k + d1),
        x_projection_dual: CodeSize(a - k - d1),
        y_projection: CodeSize(g - k1 + 2 * d),
        y_projection_dual: CodeSize(g - k1 + 2 * (b + k1 - g - d)),
    }
}

/// Which of the three families of a spanning set a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Block {
    /// `x^i ⋆ (b | 0)`, `0 <= i < α - deg b`.
    S1,
    /// `x^i ⋆ (ℓ | fh + 2f)`, `0 <= i < deg g`.
    S2,
    /// `x^i ⋆ (ℓ g | 2fg)`, `0 <= i < deg h`.
    S3,
}

impl Block {
    /// Additive order of the rows in this block.
    pub fn order(self) -> u8 {
        match self {
            Block::S2 => 4,
            Block::S1 | Block::S3 => 2,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::S1 => "S1",
            Block::S2 => "S2",
            Block::S3 => "S3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningRow {
    pub block: Block,
    pub shift: usize,
    pub word: Codeword,
}

/// The minimal Z4-spanning set `S1 ∪ S2 ∪ S3`, in that order.
pub fn spanning_set(spec: &CyclicCodeSpec) -> Vec<SpanningRow> {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    let mut rows = Vec::new();
    let mut push = |block, count: usize, p: &BinPoly, q: &QuatPoly| {
        for i in 0..count {
            let (bp, qp) = star_action(&QuatPoly::monomial(i), p, q, alpha, beta);
            rows.push(SpanningRow {
                block,
                shift: i,
                word: Codeword::from_polys(&bp, &qp, alpha, beta),
            });
        }
    };
    push(
        Block::S1,
        alpha - spec.b().deg(),
        spec.b(),
        &QuatPoly::zero(),
    );
    let second = spec.fh_plus_2f();
    push(Block::S2, spec.g().deg(), spec.ell(), &second);
    let (lg, fg2) = star_action(spec.g(), spec.ell(), &second, alpha, beta);
    push(Block::S3, spec.h().deg(), &lg, &fg2);
    rows
}

/// All Z4-combinations of the spanning set.
///
/// Rows of `S1` and `S3` have order two, so their coefficients range over
/// `{0, 1}`; rows of `S2` take coefficients in `{0, 1, 2, 3}`.
pub fn enumerate_codewords(spec: &CyclicCodeSpec, caps: &Caps) -> Result<CodeSet> {
    let size = cardinality(spec);
    Caps::check(caps.enumeration, size.log2(), "code")?;
    let rows = spanning_set(spec);
    let mut words = vec![Codeword::zero(spec.alpha(), spec.beta())];
    for row in &rows {
        let multiples: Vec<Codeword> = (1..row.block.order()).map(|k| row.word.scale(k)).collect();
        let mut next = Vec::with_capacity(words.len() * multiples.len() + words.len());
        for w in &words {
            next.push(w.clone());
            for m in &multiples {
                next.push(w.add_unchecked(m));
            }
        }
        words = next;
    }
    Ok(words.into_iter().collect())
}

/// Membership by enumeration.
pub fn contains(spec: &CyclicCodeSpec, w: &Codeword, caps: &Caps) -> Result<bool> {
    if w.alpha() != spec.alpha() || w.beta() != spec.beta() {
        return Err(Error::AmbientMismatch(
            spec.alpha(),
            spec.beta(),
            w.alpha(),
            w.beta(),
        ));
    }
    Ok(enumerate_codewords(spec, caps)?.contains(w))
}

/// The subgroup generated by `words` under addition.
pub fn additive_span(words: &[Codeword], alpha: usize, beta: usize, cap: u64) -> Result<CodeSet> {
    let mut set: HashSet<Codeword> = HashSet::from([Codeword::zero(alpha, beta)]);
    for v in words {
        if v.alpha() != alpha || v.beta() != beta {
            return Err(Error::AmbientMismatch(alpha, beta, v.alpha(), v.beta()));
        }
        if set.contains(v) {
            continue;
        }
        let base: Vec<Codeword> = set.iter().cloned().collect();
        let mut multiple = v.clone();
        while !set.contains(&multiple) {
            for s in &base {
                set.insert(s.add_unchecked(&multiple));
            }
            multiple = multiple.add_unchecked(v);
        }
        if set.len() as u64 > cap {
            return Err(Error::TooLarge {
                what: "span",
                log2_size: (set.len() as f64).log2().ceil() as usize,
                cap,
            });
        }
    }
    Ok(set.into_iter().collect())
}

/// The `Z4[x]`-submodule generated by `generators`: the additive span of all
/// their cyclic shifts.
///
/// This ignores the spanning-set structure entirely, so it serves as an
/// independent check of [`enumerate_codewords`].
pub fn module_closure(
    generators: &[Codeword],
    alpha: usize,
    beta: usize,
    cap: u64,
) -> Result<CodeSet> {
    let period = lcm(alpha, beta) as i64;
    let mut shifted = Vec::new();
    for g in generators {
        for i in 0..period {
            shifted.push(cyclic_shift(g, i));
        }
    }
    additive_span(&shifted, alpha, beta, cap)
}

/// Generators `(b | 0)`, `(ℓ g | 2fg)` and `(0 | 2fh)` of the subcode of
/// codewords of order at most two, as polynomial pairs reduced into the ambient.
pub fn subcode_order_two(spec: &CyclicCodeSpec) -> [(BinPoly, QuatPoly); 3] {
    let (alpha, beta) = (spec.alpha(), spec.beta());
    let fg2 = (spec.f() * spec.g()).scale(2).rem_xn_minus_1(beta);
    let fh2 = (spec.f() * spec.h()).scale(2).rem_xn_minus_1(beta);
    [
        (spec.b().rem_xn_minus_1(alpha), QuatPoly::zero()),
        (spec.ell_g_mod2().rem_xn_minus_1(alpha), fg2),
        (BinPoly::zero(), fh2),
    ]
}

/// Generators of the projections: `C_X = ⟨gcd(b, ℓ)⟩` and `C_Y = ⟨fh + 2f⟩`.
pub fn project_xy(spec: &CyclicCodeSpec) -> (BinPoly, QuatPoly) {
    (spec.gcd_b_ell(), spec.fh_plus_2f())
}
