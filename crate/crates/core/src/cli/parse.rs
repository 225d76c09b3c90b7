//! Text forms of polynomials and code specs.
//!
//! A polynomial is either a human string (`x^3+x+1`, terms in any order,
//! `x` or `y` as the variable, optional `-` signs and integer coefficients)
//! or an ascending coefficient list (`1,1,0,1`).

use std::str::FromStr;

use crate::code::CyclicCodeSpec;
use crate::gf2poly::BinPoly;
use crate::z4poly::QuatPoly;
use crate::{Error, Result};

/// Ascending coefficients of `s` read modulo `modulus` (2 or 4), trailing
/// zeros stripped.
pub fn parse_coeffs(s: &str, modulus: u8) -> Result<Vec<u8>> {
    if s.trim().is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut coeffs = if s.contains(',') {
        parse_list(s, modulus)?
    } else {
        parse_human(s, modulus)?
    };
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

pub fn parse_binpoly(s: &str) -> Result<BinPoly> {
    parse_coeffs(s, 2).map(BinPoly::from_coeffs)
}

pub fn parse_quatpoly(s: &str) -> Result<QuatPoly> {
    parse_coeffs(s, 4).map(QuatPoly::from_coeffs)
}

impl FromStr for BinPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_binpoly(s)
    }
}

impl FromStr for QuatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_quatpoly(s)
    }
}

fn range_error(pos: usize, c: u64, modulus: u8) -> Error {
    Error::parse(pos, format!("coefficient {c} is outside 0..{modulus}"))
}

fn parse_list(s: &str, modulus: u8) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut start = 0;
    for item in s.split(',') {
        let trimmed = item.trim();
        let pos = start + item.len() - item.trim_start().len();
        let c: u64 = trimmed
            .parse()
            .map_err(|_| Error::parse(pos, format!("expected a coefficient, found '{trimmed}'")))?;
        if c >= modulus as u64 {
            return Err(range_error(pos, c, modulus));
        }
        out.push(c as u8);
        start += item.len() + 1;
    }
    Ok(out)
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    src: &'a str,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.at)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |&(p, _)| p)
    }

    fn number(&mut self) -> Option<(usize, u64)> {
        self.skip_ws();
        let start = self.at;
        while self
            .chars
            .get(self.at)
            .is_some_and(|(_, c)| c.is_ascii_digit())
        {
            self.at += 1;
        }
        if start == self.at {
            return None;
        }
        let text: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        Some((self.chars[start].0, text.parse().unwrap_or(u64::MAX)))
    }
}

fn parse_human(s: &str, modulus: u8) -> Result<Vec<u8>> {
    let mut lx = Lexer {
        chars: s.char_indices().collect(),
        at: 0,
        src: s,
    };
    let mut coeffs: Vec<u64> = Vec::new();
    let mut first = true;
    let mut var: Option<char> = None;
    while lx.peek().is_some() {
        let mut negative = false;
        match lx.peek() {
            Some('+') if !first => lx.at += 1,
            Some('-') => {
                negative = true;
                lx.at += 1;
            }
            Some(c) if !first => {
                return Err(Error::parse(
                    lx.pos(),
                    format!("expected '+' or '-', found '{c}'"),
                ));
            }
            _ => {}
        }
        first = false;

        let coeff_pos = lx.pos();
        let coeff = lx.number();
        if let Some((p, c)) = coeff {
            if c >= modulus as u64 {
                return Err(range_error(p, c, modulus));
            }
            if lx.peek() == Some('*') {
                lx.at += 1;
            }
        }
        let exp = match lx.peek() {
            Some(c @ ('x' | 'y')) => {
                if var.is_some_and(|v| v != c) {
                    return Err(Error::parse(lx.pos(), "mixed variables"));
                }
                var = Some(c);
                lx.at += 1;
                if lx.peek() == Some('^') {
                    lx.at += 1;
                    let p = lx.pos();
                    match lx.number() {
                        Some((_, e)) if e <= 1 << 20 => e as usize,
                        Some(_) => return Err(Error::parse(p, "exponent too large")),
                        None => return Err(Error::parse(p, "expected an exponent after '^'")),
                    }
                } else {
                    1
                }
            }
            _ if coeff.is_some() => 0,
            Some(c) => return Err(Error::parse(lx.pos(), format!("unexpected '{c}'"))),
            None => return Err(Error::parse(coeff_pos, "expected a term")),
        };
        let c = coeff.map_or(1, |(_, c)| c);
        let m = modulus as u64;
        let signed = if negative { (m - c % m) % m } else { c % m };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = (coeffs[exp] + signed) % m;
    }
    Ok(coeffs.into_iter().map(|c| c as u8).collect())
}

/// Builder for a spec from `key=value` pairs, shared by the file format and
/// the inline flags.
#[derive(Debug, Default, Clone)]
pub struct SpecFields {
    pub alpha: Option<usize>,
    pub beta: Option<usize>,
    pub b: Option<String>,
    pub ell: Option<String>,
    pub f: Option<String>,
    pub h: Option<String>,
    /// `fh` may be given in place of `h`; then `h = fh / f`.
    pub fh: Option<String>,
}

impl SpecFields {
    fn set(&mut self, key: &str, value: &str, pos: usize) -> Result<()> {
        let int = |v: &str| -> Result<usize> {
            v.parse().map_err(|_| {
                Error::parse(pos, format!("expected an integer for '{key}', found '{v}'"))
            })
        };
        match key {
            "alpha" => self.alpha = Some(int(value)?),
            "beta" => self.beta = Some(int(value)?),
            "b" => self.b = Some(value.to_string()),
            "ell" | "l" => self.ell = Some(value.to_string()),
            "f" => self.f = Some(value.to_string()),
            "h" => self.h = Some(value.to_string()),
            "fh" => self.fh = Some(value.to_string()),
            other => return Err(Error::parse(pos, format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Parses the spec file format: one `key=value` per line, `#` starts a
    /// comment. Error positions are byte offsets into `text`.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut fields = SpecFields::default();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            if !body.trim().is_empty() {
                let (k, v) = body
                    .split_once('=')
                    .ok_or_else(|| Error::parse(offset, "expected key=value"))?;
                fields.set(k.trim(), v.trim(), offset)?;
            }
            offset += line.len();
        }
        Ok(fields)
    }

    pub fn build(&self) -> Result<CyclicCodeSpec> {
        let missing = |k: &str| Error::parse(0, format!("missing key '{k}'"));
        let alpha = self.alpha.ok_or_else(|| missing("alpha"))?;
        let beta = self.beta.ok_or_else(|| missing("beta"))?;
        let b = parse_binpoly(self.b.as_deref().ok_or_else(|| missing("b"))?)?;
        let ell = match &self.ell {
            Some(s) => parse_binpoly(s)?,
            None => BinPoly::zero(),
        };
        let f = match &self.f {
            Some(s) => parse_quatpoly(s)?,
            None => QuatPoly::one(),
        };
        let h = match (&self.h, &self.fh) {
            (Some(h), None) => parse_quatpoly(h)?,
            (None, Some(fh)) => parse_quatpoly(fh)?
                .exact_div(&f)
                .map_err(|_| Error::parse(0, "f does not divide fh"))?,
            (Some(h), Some(fh)) => {
                let h = parse_quatpoly(h)?;
                if &f * &h != parse_quatpoly(fh)? {
                    return Err(Error::parse(0, "fh is not the product of f and h"));
                }
                h
            }
            (None, None) => return Err(missing("h")),
        };
        CyclicCodeSpec::new(alpha, beta, b, ell, f, h)
    }
}

/// Parses a spec file.
pub fn parse_spec(text: &str) -> Result<CyclicCodeSpec> {
    SpecFields::from_text(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_and_list_forms() {
        assert_eq!(
            parse_coeffs("x^4+2x^3+3x^2+x+1", 4).unwrap(),
            vec![1, 1, 3, 2, 1]
        );
        assert_eq!(
            parse_coeffs("y^4 + 2y^3 + 3y^2 + y + 1", 4).unwrap(),
            vec![1, 1, 3, 2, 1]
        );
        assert_eq!(parse_binpoly("0").unwrap(), BinPoly::zero());
        assert_eq!(
            parse_binpoly("1,1,0,1").unwrap(),
            BinPoly::from_coeffs([1, 1, 0, 1])
        );
        assert_eq!(
            parse_binpoly("1 + x^3 + x").unwrap(),
            BinPoly::from_coeffs([1, 1, 0, 1])
        );
        assert_eq!(
            parse_quatpoly("x-1").unwrap(),
            QuatPoly::from_coeffs([3, 1])
        );
        assert_eq!(
            parse_quatpoly("-x^2").unwrap(),
            QuatPoly::from_coeffs([0, 0, 3])
        );
        assert_eq!(parse_quatpoly("2*x+x+x").unwrap(), QuatPoly::zero());
        assert_eq!(parse_binpoly("x-1").unwrap(), BinPoly::from_coeffs([1, 1]));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_binpoly("x^3+2x"),
            Err(Error::parse(4, "coefficient 2 is outside 0..2"))
        );
        assert!(matches!(
            parse_quatpoly("1,4"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_quatpoly("x^"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_quatpoly("x+z"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_quatpoly("x x"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_quatpoly("x+"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(parse_quatpoly(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_quatpoly("x+y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        for s in ["x^4+2x^3+3x^2+x+1", "3", "0", "x^7+2x"] {
            let p = parse_quatpoly(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_quatpoly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn spec_file() {
        let text = "# C1\nalpha=3\nbeta=3\nb=x^3+1\nell=x+1\nf=1\nh=x^2+x+1\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.g(), &QuatPoly::from_coeffs([3, 1]));
        assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);

        let row = "alpha=14\nbeta=7\nb=x^10+x^8+x^7+x^3+x+1\nell=x^6+x^4+x+1\nfh=x^4+2x^3+3x^2+x+1\nf=1\n";
        assert_eq!(
            parse_spec(row).unwrap().h(),
            &QuatPoly::from_coeffs([1, 1, 3, 2, 1])
        );

        assert!(matches!(
            parse_spec("alpha=3\nbogus=1\n"),
            Err(Error::Parse { position: 8, .. })
        ));
        assert!(matches!(
            parse_spec("alpha=3\nbeta=3\nb=x^2+1\nh=1\n"),
            Err(Error::InvalidSpec(_))
        ));
    }
}
