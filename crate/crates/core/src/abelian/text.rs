//! Text form: `Z_{p^2}^2 + Z_p^3`, with `1` for the trivial group.
//!
//! The parser also accepts the spellings used in typeset tables:
//! `Z_{p^2}^{(2)}`, `Z_p^(3)`, `⊕` as the separator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::AbelianType;
use crate::error::Error;

fn base_symbolic(e: u32) -> String {
    if e == 1 {
        "Z_p".to_string()
    } else {
        format!("Z_{{p^{e}}}")
    }
}

impl AbelianType {
    fn render(&self, base: impl Fn(u32) -> String) -> String {
        if self.is_trivial() {
            return "1".to_string();
        }
        self.grouped()
            .into_iter()
            .map(|(e, n)| {
                if n == 1 {
                    base(e)
                } else {
                    format!("{}^{n}", base(e))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Renders with `p` instantiated, e.g. `Z_25^2 + Z_5^3`.
    pub fn display_at(&self, prime: u64) -> String {
        self.render(|e| format!("Z_{}", BigUint::from(prime).pow(e)))
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(base_symbolic))
    }
}

/// Parses one `Z_...` summand, returning `(exponent, multiplicity)`.
fn parse_summand(s: &str) -> Result<(u32, usize), Error> {
    let err = || Error::Parse(format!("bad cyclic summand {s:?}"));
    let rest = s.strip_prefix("Z_").ok_or_else(err)?;
    let (exp, rest) = if let Some(r) = rest.strip_prefix("p") {
        (1, r)
    } else if let Some(r) = rest.strip_prefix("{p}") {
        (1, r)
    } else if let Some(r) = rest.strip_prefix("{p^") {
        let (r, braced) = match r.strip_prefix('{') {
            Some(r) => (r, true),
            None => (r, false),
        };
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        let exp = r[..end].parse::<u32>().map_err(|_| err())?;
        let r = &r[end..];
        let r = if braced { r.strip_prefix('}').ok_or_else(err)? } else { r };
        (exp, r.strip_prefix('}').ok_or_else(err)?)
    } else {
        return Err(err());
    };
    let mult = match rest.strip_prefix('^') {
        None if rest.is_empty() => 1,
        None => return Err(err()),
        Some(m) => {
            let m = m.trim_matches(|c| matches!(c, '{' | '}' | '(' | ')'));
            m.parse::<usize>().map_err(|_| err())?
        }
    };
    if exp == 0 || mult == 0 {
        return Err(err());
    }
    Ok((exp, mult))
}

impl FromStr for AbelianType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" || compact == "0" {
            return Ok(Self::trivial());
        }
        if compact.is_empty() {
            return Err(Error::Parse("empty group type".into()));
        }
        let mut exps = Vec::new();
        for part in compact.split(['+', '⊕']) {
            let (e, n) = parse_summand(part)?;
            exps.extend(std::iter::repeat_n(e, n));
        }
        Ok(Self::new(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn renders_symbolically() {
        let a = AbelianType::new([2, 2, 1, 1, 1]);
        assert_eq!(a.to_string(), "Z_{p^2}^2 + Z_p^3");
        assert_eq!(AbelianType::trivial().to_string(), "1");
        assert_eq!(a.display_at(5), "Z_25^2 + Z_5^3");
    }

    #[test]
    fn parses_typeset_spellings() {
        let want = AbelianType::new([2, 1, 1, 1]);
        for s in [
            "Z_{p^2} + Z_p^3",
            "Z_p^{(3)} ⊕ Z_{p^2}",
            "Z_{p}^(3)+Z_{p^{2}}",
            "Z_p + Z_p^2 + Z_{p^2}",
        ] {
            assert_eq!(s.parse::<AbelianType>().unwrap(), want, "{s}");
        }
        assert!("1".parse::<AbelianType>().unwrap().is_trivial());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "Z_q", "Z_p^0", "Z_{p^x}", "E1"] {
            assert!(s.parse::<AbelianType>().is_err(), "{s}");
        }
    }

    proptest! {
        #[test]
        fn text_roundtrip(exps in proptest::collection::vec(0u32..6, 0..8)) {
            let a = AbelianType::new(exps);
            prop_assert_eq!(a.to_string().parse::<AbelianType>().unwrap(), a);
        }
    }
}
