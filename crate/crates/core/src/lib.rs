//! Z2Z4-additive cyclic codes.
//!
//! A code `C ⊆ Z2^α × Z4^β` that is invariant under the simultaneous cyclic
//! shift of its binary and quaternary blocks is a `Z4[x]`-submodule of
//! `Z2[x]/(x^α-1) × Z4[x]/(x^β-1)` and can be written as
//! `⟨(b | 0), (ℓ | fh + 2f)⟩` with `fhg = x^β - 1` over Z4.
//!
//! The crate is split into:
//!
//! * [`gf2poly`] and [`z4poly`]: exact polynomial arithmetic over Z2 and Z4,
//!   including Hensel lifting of binary divisors of `x^β - 1`;
//! * [`code`]: generator tuples, spanning sets, type parameters, the Gray map,
//!   the inner product and enumeration oracles;
//! * [`dual`]: closed-form generator polynomials of the dual code together with
//!   a brute-force dual used to check them;
//! * [`analysis`]: minimum distance, MDSS and self-duality tests, named
//!   constructions and exhaustive small-parameter search;
//! * [`cli`]: the command-line front end.

pub mod analysis;
pub mod cli;
pub mod code;
pub mod dual;
mod error;
pub mod gf2poly;
pub mod z4poly;

pub use error::{Error, Result};
pub use gf2poly::BinPoly;
pub use z4poly::QuatPoly;
