//! Stored identities, each checked by expanding both sides.

use num_bigint::BigInt;

use crate::congruence::pk_table;
use crate::qexpr::{compare_series, parse, IdentityReport, ParseError};
use crate::series::LaurentSeries;

/// `zeta = E1 / (q E25)`.
pub const ZETA: &str = "E1/(q*E25)";
/// `T = E5^6 / (q^5 E25^6)`.
pub const T: &str = "E5^6/(q^5*E25^6)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Expr(&'static str),
    /// `sum_n p_-colors(modulus n + residue) q^n`.
    Progression {
        colors: u32,
        modulus: u64,
        residue: u64,
    },
}

impl Side {
    pub fn expand(&self, bound: i64) -> Result<LaurentSeries, ParseError> {
        match *self {
            Side::Expr(text) => Ok(parse(text)?.evaluate(bound)),
            Side::Progression {
                colors,
                modulus,
                residue,
            } => {
                let terms = bound.max(0) as u64;
                let table = pk_table(colors, modulus * terms.saturating_sub(1) + residue);
                Ok(table
                    .progression_series(modulus, residue, terms)
                    .expect("table sized for the progression"))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityFixture {
    pub name: &'static str,
    pub lhs: Side,
    pub rhs: Side,
    /// Compare modulo this number instead of exactly.
    pub modulus: Option<u32>,
}

impl IdentityFixture {
    pub fn verify(&self, bound: i64) -> Result<IdentityReport, ParseError> {
        let lhs = self.lhs.expand(bound)?;
        let rhs = self.rhs.expand(bound)?;
        let m = self.modulus.map(BigInt::from);
        Ok(compare_series(&lhs, &rhs, m.as_ref()))
    }
}

const fn prog(colors: u32, modulus: u64, residue: u64) -> Side {
    Side::Progression {
        colors,
        modulus,
        residue,
    }
}

const fn exact(name: &'static str, lhs: Side, rhs: Side) -> IdentityFixture {
    IdentityFixture {
        name,
        lhs,
        rhs,
        modulus: None,
    }
}

const fn mod25(name: &'static str, lhs: Side, rhs: Side) -> IdentityFixture {
    IdentityFixture {
        name,
        lhs,
        rhs,
        modulus: Some(25),
    }
}

const E1_OVER_E25: &str = "1/R(q^5) - q - q^2*R(q^5)";

const E5_6_OVER_E25_6: &str = "1/R(q^5)^5 - 11*q^5 - q^10*R(q^5)^5";

const INV_E1: &str = "E25^5/E5^6*(1/R(q^5)^4 + q/R(q^5)^3 + 2*q^2/R(q^5)^2 + 3*q^3/R(q^5) \
    + 5*q^4 - 3*q^5*R(q^5) + 2*q^6*R(q^5)^2 - q^7*R(q^5)^3 + q^8*R(q^5)^4)";

const INV_E1_2: &str = "E25^10/E5^12*(1/R(q^5)^8 + 2*q/R(q^5)^7 + 5*q^2/R(q^5)^6 \
    + 10*q^3/R(q^5)^5 + 20*q^4/R(q^5)^4 + 16*q^5/R(q^5)^3 + 27*q^6/R(q^5)^2 + 20*q^7/R(q^5) \
    + 15*q^8 - 20*q^9*R(q^5) + 27*q^10*R(q^5)^2 - 16*q^11*R(q^5)^3 + 20*q^12*R(q^5)^4 \
    - 10*q^13*R(q^5)^5 + 5*q^14*R(q^5)^6 - 2*q^15*R(q^5)^7 + q^16*R(q^5)^8)";

const E1_8_OVER_E5_5: &str = "E25^8/E5^5*(1/R(q^5)^8 - 8*q/R(q^5)^7 + 20*q^2/R(q^5)^6 \
    - 70*q^4/R(q^5)^4 + 56*q^5/R(q^5)^3 + 112*q^6/R(q^5)^2 - 120*q^7/R(q^5) - 125*q^8 \
    + 120*q^9*R(q^5) + 112*q^10*R(q^5)^2 - 56*q^11*R(q^5)^3 - 70*q^12*R(q^5)^4 \
    + 20*q^14*R(q^5)^6 + 8*q^15*R(q^5)^7 + q^16*R(q^5)^8)";

const E1_14_OVER_E5_5: &str = "E25^14/E5^5*(1/R(q^5)^14 - 14*q/R(q^5)^13 + 77*q^2/R(q^5)^12 \
    - 182*q^3/R(q^5)^11 + 910*q^5/R(q^5)^9 - 1365*q^6/R(q^5)^8 - 1430*q^7/R(q^5)^7 \
    + 5005*q^8/R(q^5)^6 - 10010*q^10/R(q^5)^4 + 3640*q^11/R(q^5)^3 + 14105*q^12/R(q^5)^2 \
    - 6930*q^13/R(q^5) - 15625*q^14 + 6930*q^15*R(q^5) + 14105*q^16*R(q^5)^2 \
    - 3640*q^17*R(q^5)^3 - 10010*q^18*R(q^5)^4 + 5005*q^20*R(q^5)^6 + 1430*q^21*R(q^5)^7 \
    - 1365*q^22*R(q^5)^8 - 910*q^23*R(q^5)^9 + 182*q^25*R(q^5)^11 + 77*q^26*R(q^5)^12 \
    + 14*q^27*R(q^5)^13 + q^28*R(q^5)^14)";

const GF6_5N4: &str = "315*E5^6/E1^12 + 32500*q*E5^12/E1^18 + 984375*q^2*E5^18/E1^24 \
    + 11718750*q^3*E5^24/E1^30 + 48828125*q^4*E5^30/E1^36";

const GF7_5N3: &str = "140*E5^5/E1^12 + 30625*q*E5^11/E1^18 + 1640625*q^2*E5^17/E1^24 \
    + 35546875*q^3*E5^23/E1^30 + 341796875*q^4*E5^29/E1^36 + 1220703125*q^5*E5^35/E1^42";

/// Identities among the R(q^5) dissections, the explicit progression generating
/// functions, and their reductions modulo 25.
pub const IDENTITIES: &[IdentityFixture] = &[
    exact(
        "E1/E25 dissection",
        Side::Expr("E1/E25"),
        Side::Expr(E1_OVER_E25),
    ),
    exact(
        "E5^6/E25^6 dissection",
        Side::Expr("E5^6/E25^6"),
        Side::Expr(E5_6_OVER_E25_6),
    ),
    exact("1/E1 dissection", Side::Expr("1/E1"), Side::Expr(INV_E1)),
    exact("p(5n+4)", prog(1, 5, 4), Side::Expr("5*E5^5/E1^6")),
    mod25("p(5n+4) mod 25", prog(1, 5, 4), Side::Expr("5*E5^4/E1")),
    exact(
        "1/E1^2 dissection",
        Side::Expr("1/E1^2"),
        Side::Expr(INV_E1_2),
    ),
    exact(
        "p_-2(5n+3)",
        prog(2, 5, 3),
        Side::Expr("10*E5^4/E1^6 + 125*q*E5^10/E1^12"),
    ),
    mod25("p_-2(5n+3) mod 25", prog(2, 5, 3), Side::Expr("10*E5^3/E1")),
    exact(
        "E1^8/E5^5 dissection",
        Side::Expr("E1^8/E5^5"),
        Side::Expr(E1_8_OVER_E5_5),
    ),
    mod25(
        "1/E1^17 dissection mod 25",
        Side::Expr("1/E1^17"),
        Side::Expr(E1_8_OVER_E5_5),
    ),
    mod25("p_-17(5n+3) mod 25", prog(17, 5, 3), Side::Expr("0")),
    exact(
        "E1^14/E5^5 dissection",
        Side::Expr("E1^14/E5^5"),
        Side::Expr(E1_14_OVER_E5_5),
    ),
    mod25(
        "1/E1^11 dissection mod 25",
        Side::Expr("1/E1^11"),
        Side::Expr(E1_14_OVER_E5_5),
    ),
    mod25("p_-11(5n+4) mod 25", prog(11, 5, 4), Side::Expr("0")),
    exact("p_-6(5n+4)", prog(6, 5, 4), Side::Expr(GF6_5N4)),
    mod25(
        "p_-6(5n+4) mod 25",
        prog(6, 5, 4),
        Side::Expr("315*E5^4/E1^2"),
    ),
    exact("p_-7(5n+3)", prog(7, 5, 3), Side::Expr(GF7_5N3)),
    mod25(
        "p_-7(5n+3) mod 25",
        prog(7, 5, 3),
        Side::Expr("140*E5^3/E1^2"),
    ),
];

pub fn find(name: &str) -> Option<&'static IdentityFixture> {
    IDENTITIES.iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        for f in IDENTITIES {
            for side in [f.lhs, f.rhs] {
                if let Side::Expr(text) = side {
                    parse(text).unwrap_or_else(|e| panic!("{}: {e}", f.name));
                }
            }
        }
    }

    #[test]
    fn term_counts() {
        assert_eq!(parse(INV_E1).unwrap().terms.len(), 9);
        assert_eq!(parse(INV_E1_2).unwrap().terms.len(), 17);
        assert_eq!(parse(E1_8_OVER_E5_5).unwrap().terms.len(), 15);
        assert_eq!(parse(E1_14_OVER_E5_5).unwrap().terms.len(), 25);
    }

    #[test]
    fn small_bound_checks() {
        for f in IDENTITIES {
            let r = f.verify(40).unwrap();
            assert!(r.equal, "{}: {:?}", f.name, r.mismatch);
        }
    }
}
