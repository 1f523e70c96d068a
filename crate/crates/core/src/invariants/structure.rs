use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::abelian::AbelianType;
use crate::error::Error;

/// `E₁ × A` or plain `A`, where `E₁` is the extraspecial group of order `p³`
/// and exponent `p`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorStructure {
    pub e1_factor: bool,
    pub abelian_part: AbelianType,
}

impl TensorStructure {
    pub fn abelian(a: AbelianType) -> Self {
        Self {
            e1_factor: false,
            abelian_part: a,
        }
    }

    pub fn with_e1(a: AbelianType) -> Self {
        Self {
            e1_factor: true,
            abelian_part: a,
        }
    }

    pub fn is_abelian(&self) -> bool {
        !self.e1_factor
    }

    pub fn log_order(&self) -> u32 {
        self.abelian_part.log_order() + if self.e1_factor { 3 } else { 0 }
    }

    pub fn order(&self, prime: u64) -> BigUint {
        BigUint::from(prime).pow(self.log_order())
    }

    /// `E₁` has exponent `p`, so it never raises the exponent above `p` unless
    /// the abelian part does.
    pub fn log_exponent(&self) -> u32 {
        self.abelian_part.log_exponent().max(u32::from(self.e1_factor))
    }

    /// Same `E₁` flag, abelian part extended by `extra`.
    pub fn direct_sum(&self, extra: &AbelianType) -> Self {
        Self {
            e1_factor: self.e1_factor,
            abelian_part: self.abelian_part.direct_sum(extra),
        }
    }

    pub fn display_at(&self, prime: u64) -> String {
        self.render(self.abelian_part.display_at(prime))
    }

    fn render(&self, abelian: String) -> String {
        match (self.e1_factor, self.abelian_part.is_trivial()) {
            (false, _) => abelian,
            (true, true) => "E1".to_string(),
            (true, false) => format!("E1 x {abelian}"),
        }
    }
}

impl From<AbelianType> for TensorStructure {
    fn from(a: AbelianType) -> Self {
        Self::abelian(a)
    }
}

impl fmt::Display for TensorStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.abelian_part.to_string()))
    }
}

impl FromStr for TensorStructure {
    type Err = Error;

    /// `E1 x Z_p^3`, `E_1 × Z_p^(3)`, `E1`, or any abelian type.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let rest = ["E1", "E_1", "E_{1}"].iter().find_map(|h| t.strip_prefix(h));
        let Some(rest) = rest else {
            return Ok(Self::abelian(t.parse()?));
        };
        let rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(Self::with_e1(AbelianType::trivial()));
        }
        let rest = ["x", "×", "\\times"]
            .iter()
            .find_map(|sep| rest.strip_prefix(sep))
            .ok_or_else(|| Error::Parse(format!("expected a product after E1 in {s:?}")))?;
        Ok(Self::with_e1(rest.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e1_text_forms() {
        let t: TensorStructure = "E1 x Z_p^3".parse().unwrap();
        assert!(t.e1_factor);
        assert_eq!(t.abelian_part, AbelianType::elementary(3));
        assert_eq!(t.log_order(), 6);
        assert_eq!(t.to_string(), "E1 x Z_p^3");
        assert_eq!("E_1 × Z_p^(3)".parse::<TensorStructure>().unwrap(), t);
        assert_eq!(t.display_at(5), "E1 x Z_5^3");
        assert_eq!("E1".parse::<TensorStructure>().unwrap().to_string(), "E1");
    }

    #[test]
    fn abelian_passthrough() {
        let t: TensorStructure = "Z_{p^2} + Z_p".parse().unwrap();
        assert!(t.is_abelian());
        assert_eq!(t.log_exponent(), 2);
        assert!("E1 Z_p".parse::<TensorStructure>().is_err());
    }
}
