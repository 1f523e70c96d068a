//! Relation templates for the seventy presentation families.
//!
//! Omitted relations are trivial: `g_i^p = 1` and `[g_j, g_i] = 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pc_engine::{PcPresentation, NGENS};

/// Exponent appearing on a generator in a relation right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coef {
    One,
    /// The primitive root `w`.
    W,
    /// `w^k`.
    WPowK,
    /// `w^{k-1}`.
    WPowKMinus1,
    /// `w^a`.
    WPowA,
    /// `w^b`.
    WPowB,
    /// `p - 1`.
    PMinus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lhs {
    /// `g_i^p`
    Power(u8),
    /// `[g_j, g_i]`, `j > i`
    Comm(u8, u8),
}

#[derive(Clone, Copy, Debug)]
pub struct Relation {
    pub lhs: Lhs,
    pub rhs: &'static [(u8, Coef)],
}

/// Which named parameter a family depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    None,
    K,
    A,
    B,
}

#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub number: u8,
    pub param: ParamKind,
    /// Families whose table row splits on `k = (p-1)/2`.
    pub splits_on_k: bool,
    pub relations: &'static [Relation],
}

/// Parameter values; each family reads only the one it uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub k: i64,
    pub a: i64,
    pub b: i64,
}

impl Default for Params {
    fn default() -> Self {
        Self { k: 1, a: 1, b: 1 }
    }
}

/// A row of the summary tables: a family, plus the `k`-subcase for the
/// families whose invariants depend on whether `k = (p-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowId {
    pub family: u8,
    pub subcase: Option<u8>,
}

impl RowId {
    pub const fn plain(family: u8) -> Self {
        Self {
            family,
            subcase: None,
        }
    }

    pub const fn sub(family: u8, subcase: u8) -> Self {
        Self {
            family,
            subcase: Some(subcase),
        }
    }

    pub fn spec(&self) -> &'static FamilySpec {
        family(self.family).expect("row ids refer to known families")
    }
}

impl fmt::Display for RowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.subcase {
            return write!(f, "G{},{}", self.family, s);
        }
        let suffix = match family(self.family).map(|s| s.param) {
            Some(ParamKind::K) if self.family != 49 => "k",
            Some(ParamKind::A) => "a",
            Some(ParamKind::B) => "b",
            _ => "",
        };
        write!(f, "G{}{}", self.family, suffix)
    }
}

impl FromStr for RowId {
    type Err = Error;

    /// Accepts `G12k`, `12`, `11,2`, `G48.1`, `29a`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix(['G', 'g']).unwrap_or(t);
        let t = t.trim_end_matches(['k', 'a', 'b']);
        let (num, sub) = match t.split_once([',', '.', '_']) {
            Some((n, s)) => (n, Some(s)),
            None => (t, None),
        };
        let family: u8 = num.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
        let spec = self::family(family).ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let subcase = match sub {
            None if spec.splits_on_k => return Err(Error::UnknownFamily(format!("{s} (name the subcase, e.g. {family},1)"))),
            None => None,
            Some(x) => {
                let v: u8 = x.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
                if !spec.splits_on_k || !(1..=2).contains(&v) {
                    return Err(Error::UnknownFamily(s.to_string()));
                }
                Some(v)
            }
        };
        Ok(Self { family, subcase })
    }
}

impl Serialize for RowId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RowId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All table rows in order, including the `k`-subcases.
pub fn all_rows() -> Vec<RowId> {
    FAMILIES
        .iter()
        .flat_map(|f| {
            if f.splits_on_k {
                vec![RowId::sub(f.number, 1), RowId::sub(f.number, 2)]
            } else {
                vec![RowId::plain(f.number)]
            }
        })
        .collect()
}

pub fn families() -> &'static [FamilySpec] {
    &FAMILIES
}

pub fn family(number: u8) -> Option<&'static FamilySpec> {
    FAMILIES.get(usize::from(number).checked_sub(1)?)
}

/// Smallest positive primitive root mod `p`, by brute-force order checks.
pub fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&w| multiplicative_order(w, p) == p - 1)
        .unwrap_or(1)
}

pub fn multiplicative_order(w: u64, p: u64) -> u64 {
    let mut x = w % p;
    let mut n = 1;
    while x != 1 {
        x = x * w % p;
        n += 1;
        if n > p {
            return 0;
        }
    }
    n
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl FamilySpec {
    pub fn k_domain(p: u32) -> std::ops::RangeInclusive<i64> {
        1..=i64::from((p - 1) / 2)
    }

    /// Table row for this family at `(p, params)`.
    pub fn row(&self, p: u32, params: &Params) -> RowId {
        if self.splits_on_k {
            let sub = if params.k == i64::from((p - 1) / 2) { 2 } else { 1 };
            RowId::sub(self.number, sub)
        } else {
            RowId::plain(self.number)
        }
    }

    /// A parameter choice realizing the given row (`k = (p-1)/2` for the
    /// second subcase, otherwise the defaults).
    pub fn params_for_row(row: RowId, p: u32) -> Params {
        let mut params = Params::default();
        if row.subcase == Some(2) {
            params.k = i64::from((p - 1) / 2);
        }
        params
    }

    fn check_params(&self, p: u32, params: &Params) -> Result<()> {
        match self.param {
            ParamKind::K => {
                let dom = Self::k_domain(p);
                if !dom.contains(&params.k) {
                    return Err(Error::BadParam {
                        name: "k".into(),
                        value: params.k,
                        domain: format!("{}..={}", dom.start(), dom.end()),
                    });
                }
            }
            ParamKind::A | ParamKind::B => {
                let (name, value) = if self.param == ParamKind::A {
                    ("a", params.a)
                } else {
                    ("b", params.b)
                };
                if value < 0 {
                    return Err(Error::BadParam {
                        name: name.into(),
                        value,
                        domain: "non-negative integers (exponent of w)".into(),
                    });
                }
            }
            ParamKind::None => {}
        }
        Ok(())
    }

    fn coef_value(&self, c: Coef, p: u32, w: u64, params: &Params) -> u8 {
        let p64 = u64::from(p);
        let v = match c {
            Coef::One => 1,
            Coef::W => w,
            Coef::WPowK => pow_mod(w, params.k as u64, p64),
            Coef::WPowKMinus1 => pow_mod(w, (params.k - 1) as u64, p64),
            Coef::WPowA => pow_mod(w, params.a as u64, p64),
            Coef::WPowB => pow_mod(w, params.b as u64, p64),
            Coef::PMinus1 => p64 - 1,
        };
        (v % p64) as u8
    }

    /// Instantiates the relation templates at `p` with `w` the smallest
    /// primitive root.
    pub fn build(&self, p: u32, params: &Params) -> Result<PcPresentation> {
        let mut pc = PcPresentation::new(p)?;
        self.check_params(p, params)?;
        let w = primitive_root(p.into());
        for rel in self.relations {
            let mut tail = [0u8; NGENS];
            for &(g, c) in rel.rhs {
                tail[usize::from(g) - 1] = self.coef_value(c, p, w, params);
            }
            match rel.lhs {
                Lhs::Power(i) => pc.set_power(i.into(), tail)?,
                Lhs::Comm(j, i) => pc.set_commutator(j.into(), i.into(), tail)?,
            }
        }
        Ok(pc)
    }
}

use Coef::*;

const fn pw(i: u8, rhs: &'static [(u8, Coef)]) -> Relation {
    Relation {
        lhs: Lhs::Power(i),
        rhs,
    }
}

const fn cm(j: u8, i: u8, rhs: &'static [(u8, Coef)]) -> Relation {
    Relation {
        lhs: Lhs::Comm(j, i),
        rhs,
    }
}

const fn fam(number: u8, relations: &'static [Relation]) -> FamilySpec {
    FamilySpec {
        number,
        param: ParamKind::None,
        splits_on_k: false,
        relations,
    }
}

const fn fam_p(number: u8, param: ParamKind, splits_on_k: bool, relations: &'static [Relation]) -> FamilySpec {
    FamilySpec {
        number,
        param,
        splits_on_k,
        relations,
    }
}

const fn g(i: u8) -> [(u8, Coef); 1] {
    [(i, One)]
}

static FAMILIES: [FamilySpec; 70] = [
    fam(1, &[pw(1, &g(2)), pw(2, &g(3)), pw(3, &g(4)), pw(4, &g(5))]),
    fam(2, &[cm(2, 1, &g(3)), pw(1, &g(4)), pw(2, &g(5))]),
    fam(3, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &g(5))]),
    fam(4, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(2, &g(5))]),
    fam(5, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(2, &g(4))]),
    fam(6, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(2, &[(4, W)])]),
    fam(7, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(1, &g(4)), pw(2, &g(5))]),
    fam(8, &[cm(2, 1, &g(3)), cm(3, 1, &[(4, One), (5, One)]), cm(3, 2, &g(5)), pw(1, &g(4)), pw(2, &g(5))]),
    fam(9, &[cm(2, 1, &g(3)), cm(3, 1, &[(4, One), (5, W)]), cm(3, 2, &g(5)), pw(1, &g(4)), pw(2, &g(5))]),
    fam(10, &[cm(2, 1, &g(3)), cm(3, 1, &[(5, W)]), cm(3, 2, &g(4)), pw(1, &g(4)), pw(2, &g(5))]),
    fam_p(11, ParamKind::K, true, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(3, 2, &[(5, WPowK)]), pw(1, &g(4)), pw(2, &g(5))]),
    fam_p(12, ParamKind::K, false, &[
        cm(2, 1, &g(3)),
        cm(3, 1, &[(4, One), (5, WPowK)]),
        cm(3, 2, &[(4, WPowKMinus1), (5, One)]),
        pw(1, &g(4)),
        pw(2, &g(5)),
    ]),
    fam(13, &[pw(1, &g(3)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(14, &[cm(2, 1, &g(5)), pw(1, &g(3)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(15, &[cm(2, 1, &g(3)), pw(1, &g(4)), pw(4, &g(5))]),
    fam(16, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5))]),
    fam(17, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5)), pw(2, &g(5))]),
    fam(18, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &[(5, W)]), pw(2, &g(5))]),
    fam(19, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5)), pw(4, &g(5))]),
    fam(20, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5)), cm(3, 2, &g(5))]),
    fam(21, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5)), cm(3, 2, &g(5)), pw(2, &g(5))]),
    fam(22, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &g(5)), cm(3, 2, &g(5)), pw(4, &g(5))]),
    fam(23, &[cm(2, 1, &g(3)), pw(1, &g(4)), cm(3, 1, &[(5, W)]), cm(3, 2, &[(5, W)]), pw(4, &g(5))]),
    fam(24, &[
        cm(2, 1, &g(3)),
        pw(1, &g(4)),
        pw(2, &g(3)),
        cm(3, 1, &g(5)),
        cm(4, 2, &[(5, PMinus1)]),
        pw(3, &g(5)),
    ]),
    fam(25, &[cm(2, 1, &g(3)), pw(1, &g(4)), pw(2, &g(3)), pw(4, &g(5))]),
    fam(26, &[pw(1, &g(3)), pw(3, &g(4)), pw(4, &g(5))]),
    fam(27, &[pw(1, &g(3)), pw(3, &g(4)), pw(4, &g(5)), cm(2, 1, &g(5))]),
    fam(28, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(4, 1, &g(5))]),
    fam_p(29, ParamKind::A, false, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(4, 1, &[(5, WPowA)]), pw(2, &g(5))]),
    fam(30, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(4, 1, &g(5)), pw(1, &g(5))]),
    fam(31, &[cm(2, 1, &g(3)), cm(3, 1, &g(4)), cm(4, 1, &g(5)), cm(3, 2, &g(5))]),
    fam_p(32, ParamKind::A, false, &[
        cm(2, 1, &g(3)),
        cm(3, 1, &g(4)),
        cm(4, 1, &[(5, WPowA)]),
        cm(3, 2, &[(5, WPowA)]),
        pw(2, &g(5)),
    ]),
    fam_p(33, ParamKind::B, false, &[
        cm(2, 1, &g(3)),
        cm(3, 1, &g(4)),
        cm(4, 1, &[(5, WPowB)]),
        cm(3, 2, &[(5, WPowB)]),
        pw(1, &g(5)),
    ]),
    fam(34, &[cm(2, 1, &g(4)), cm(3, 1, &g(5))]),
    fam(35, &[cm(2, 1, &g(4)), pw(3, &g(5))]),
    fam(36, &[cm(2, 1, &g(4)), cm(3, 2, &g(5)), pw(3, &g(5))]),
    fam(37, &[cm(3, 2, &g(4)), pw(3, &g(5))]),
    fam(38, &[cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(3, &g(5))]),
    fam(39, &[cm(2, 1, &g(4)), cm(3, 2, &g(5)), pw(3, &g(4))]),
    fam(40, &[cm(3, 2, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(41, &[cm(3, 1, &g(4)), cm(3, 2, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(42, &[cm(2, 1, &g(4)), cm(3, 2, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(43, &[pw(2, &g(4)), pw(3, &g(5))]),
    fam(44, &[cm(2, 1, &g(4)), cm(3, 1, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(45, &[cm(2, 1, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(46, &[cm(2, 1, &[(4, One), (5, One)]), cm(3, 1, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam(47, &[cm(3, 1, &g(5)), pw(2, &g(4)), pw(3, &g(5))]),
    fam_p(48, ParamKind::K, true, &[cm(2, 1, &g(4)), cm(3, 1, &[(5, WPowK)]), pw(2, &g(4)), pw(3, &g(5))]),
    fam_p(49, ParamKind::K, false, &[cm(2, 1, &[(5, WPowK)]), cm(3, 1, &g(4)), pw(2, &g(4)), pw(3, &g(5))]),
    fam_p(50, ParamKind::K, false, &[
        cm(2, 1, &[(4, One), (5, WPowK)]),
        cm(3, 1, &[(4, WPowKMinus1), (5, One)]),
        pw(2, &g(4)),
        pw(3, &g(5)),
    ]),
    fam(51, &[pw(1, &g(4)), pw(4, &g(5))]),
    fam(52, &[pw(1, &g(4)), pw(4, &g(5)), cm(3, 2, &g(5))]),
    fam(53, &[pw(1, &g(4)), pw(4, &g(5)), cm(3, 1, &g(5))]),
    fam(54, &[cm(2, 1, &g(4)), cm(4, 2, &g(5))]),
    fam(55, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), pw(3, &g(5))]),
    fam(56, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), pw(2, &g(5))]),
    fam(57, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), pw(1, &g(5))]),
    fam(58, &[cm(2, 1, &g(4)), cm(4, 2, &[(5, W)]), pw(1, &g(5))]),
    fam(59, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), cm(3, 1, &g(5))]),
    fam(60, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), cm(3, 1, &g(5)), pw(3, &g(5))]),
    fam(61, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), cm(3, 1, &g(5)), pw(2, &g(5))]),
    fam(62, &[cm(2, 1, &g(4)), cm(4, 2, &g(5)), cm(3, 1, &g(5)), pw(1, &g(5))]),
    fam(63, &[cm(2, 1, &g(4)), cm(4, 2, &[(5, W)]), cm(3, 1, &[(5, W)]), pw(1, &g(5))]),
    fam(64, &[cm(2, 1, &g(5))]),
    fam(65, &[cm(2, 1, &g(5)), cm(4, 3, &g(5))]),
    fam(66, &[pw(1, &g(5))]),
    fam(67, &[cm(2, 1, &g(5)), pw(1, &g(5))]),
    fam(68, &[cm(2, 1, &g(5)), pw(3, &g(5))]),
    fam(69, &[cm(2, 1, &g(5)), cm(4, 3, &g(5)), pw(4, &g(5))]),
    fam(70, &[]),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc_engine::Element;

    #[test]
    fn numbering_is_dense() {
        for (i, f) in families().iter().enumerate() {
            assert_eq!(usize::from(f.number), i + 1);
        }
        assert_eq!(all_rows().len(), 72);
    }

    #[test]
    fn primitive_roots_by_brute_force() {
        // Orders of 2 mod 5: 2,4,3,1 -> 4 = p-1.
        assert_eq!(primitive_root(5), 2);
        // 2 mod 7 has order 3; 3 has order 6.
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(11), 2);
        assert_eq!(primitive_root(13), 2);
    }

    #[test]
    fn builds_instantiate_w_and_p_minus_one() {
        let g70 = family(70).unwrap().build(5, &Params::default()).unwrap();
        assert!(g70.relations().is_empty());
        let g9 = family(9).unwrap().build(5, &Params::default()).unwrap();
        assert_eq!(g9.comm_tail(3, 1), Element([0, 0, 0, 1, 2]));
        let g24 = family(24).unwrap().build(5, &Params::default()).unwrap();
        assert_eq!(g24.comm_tail(4, 2), Element([0, 0, 0, 0, 4]));
    }

    #[test]
    fn k_domain_is_enforced() {
        let f = family(11).unwrap();
        let bad = Params { k: 3, ..Params::default() };
        assert!(matches!(f.build(5, &bad), Err(Error::BadParam { .. })));
        assert!(f.build(7, &bad).is_ok());
        let bad = Params { k: 0, ..Params::default() };
        assert!(f.build(7, &bad).is_err());
    }

    #[test]
    fn split_rows_follow_k() {
        let f = family(48).unwrap();
        assert_eq!(f.row(5, &Params { k: 2, ..Params::default() }), RowId::sub(48, 2));
        assert_eq!(f.row(7, &Params { k: 2, ..Params::default() }), RowId::sub(48, 1));
        assert_eq!(f.row(7, &Params { k: 3, ..Params::default() }), RowId::sub(48, 2));
    }

    #[test]
    fn row_ids_print_and_parse() {
        for row in all_rows() {
            assert_eq!(row.to_string().parse::<RowId>().unwrap(), row);
        }
        assert_eq!(RowId::plain(12).to_string(), "G12k");
        assert_eq!(RowId::plain(29).to_string(), "G29a");
        assert_eq!(RowId::plain(49).to_string(), "G49");
        assert_eq!("11,2".parse::<RowId>().unwrap(), RowId::sub(11, 2));
        assert_eq!("g48.1".parse::<RowId>().unwrap(), RowId::sub(48, 1));
        assert!("71".parse::<RowId>().is_err());
        assert!("3,1".parse::<RowId>().is_err());
    }
}
