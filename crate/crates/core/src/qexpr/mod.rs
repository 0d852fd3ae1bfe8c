//! Expression language for sums of q-shifted eta quotients and `R(q^k)` powers.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+'|'-') term)* ;
//! term   := ['-'] atom (('*'|'/') atom)* ;
//! atom   := INT | 'q' ['^' INT] | 'E' INT ['^' SINT]
//!         | 'G(' INT ',' INT ')' ['^' SINT] | 'R(q^' INT ')' ['^' SINT]
//!         | '(' expr ')' ;
//! ```
//!
//! A parsed expression is a flat list of [`Term`]s: products are distributed over
//! parenthesized sums, but nothing is collected or cancelled. Equality of two
//! expressions is only ever decided by expanding both sides.

mod parser;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::etaq::{self, EtaFactor, GenEtaFactor, RFactor};
use crate::series::LaurentSeries;

pub use parser::{parse, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Eta(EtaFactor),
    GenEta(GenEtaFactor),
    R(RFactor),
}

impl Factor {
    pub fn exponent(&self) -> i64 {
        match self {
            Factor::Eta(f) => f.exponent,
            Factor::GenEta(f) => f.exponent,
            Factor::R(f) => f.exponent,
        }
    }

    pub fn with_exponent(self, exponent: i64) -> Self {
        match self {
            Factor::Eta(f) => Factor::Eta(EtaFactor { exponent, ..f }),
            Factor::GenEta(f) => Factor::GenEta(GenEtaFactor { exponent, ..f }),
            Factor::R(f) => Factor::R(RFactor { exponent, ..f }),
        }
    }

    pub fn eta(base: u32, exponent: i64) -> Self {
        Factor::Eta(EtaFactor { base, exponent })
    }

    pub fn gen_eta(residue: u32, modulus: u32, exponent: i64) -> Self {
        Factor::GenEta(GenEtaFactor {
            residue,
            modulus,
            exponent,
        })
    }

    pub fn r(arg_power: u32, exponent: i64) -> Self {
        Factor::R(RFactor {
            arg_power,
            exponent,
        })
    }

    fn base(&self) -> Factor {
        self.with_exponent(1)
    }

    fn expand_base(&self, bound: i64) -> LaurentSeries {
        match self {
            Factor::Eta(f) => etaq::expand_eta(f.base, bound),
            Factor::GenEta(f) => etaq::expand_gen_eta(f.residue, f.modulus, bound),
            Factor::R(f) => etaq::expand_r(f.arg_power, bound),
        }
    }
}

/// `coeff * q^qshift * prod(factors)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigInt,
    pub qshift: i64,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(coeff: impl Into<BigInt>, qshift: i64, factors: Vec<Factor>) -> Self {
        Term {
            coeff: coeff.into(),
            qshift,
            factors,
        }
    }

    pub fn constant(coeff: impl Into<BigInt>) -> Self {
        Term::new(coeff, 0, Vec::new())
    }

    fn times(&self, other: &Term) -> Term {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Term {
            coeff: &self.coeff * &other.coeff,
            qshift: self.qshift + other.qshift,
            factors,
        }
    }

    fn negated(mut self) -> Term {
        self.coeff = -self.coeff;
        self
    }
}

/// A sum of terms; the empty sum is 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QExpression {
    pub terms: Vec<Term>,
}

impl From<Term> for QExpression {
    fn from(t: Term) -> Self {
        QExpression {
            terms: alloc::vec![t],
        }
    }
}

impl QExpression {
    pub fn new(terms: Vec<Term>) -> Self {
        QExpression { terms }
    }

    pub fn zero() -> Self {
        QExpression::default()
    }

    /// Expands the expression so that the result is exact below `q^bound`.
    ///
    /// Every factor has constant term 1, so a term shifted by `q^s` only needs its
    /// factors to precision `bound - s`. The returned series always has
    /// `trunc() == bound`.
    pub fn evaluate(&self, bound: i64) -> LaurentSeries {
        let mut needed: BTreeMap<Factor, i64> = BTreeMap::new();
        for t in &self.terms {
            let b = bound - t.qshift;
            if b <= 0 || t.coeff.is_zero() {
                continue;
            }
            for f in &t.factors {
                let slot = needed.entry(*f).or_insert(b);
                *slot = (*slot).max(b);
            }
        }
        let mut bases: BTreeMap<Factor, LaurentSeries> = BTreeMap::new();
        for (f, &b) in &needed {
            let base = f.base();
            let have = bases.get(&base).map_or(i64::MIN, LaurentSeries::trunc);
            if have < b {
                bases.insert(base, base.expand_base(b));
            }
        }
        let powers: BTreeMap<Factor, LaurentSeries> = needed
            .iter()
            .map(|(f, &b)| (*f, etaq::power(&bases[&f.base()].truncate(b), f.exponent())))
            .collect();

        let mut acc = LaurentSeries::zero(bound);
        for t in &self.terms {
            let b = bound - t.qshift;
            if b <= 0 || t.coeff.is_zero() {
                continue;
            }
            let mut prod = LaurentSeries::one(b);
            for f in &t.factors {
                prod = prod.mul(&powers[f].truncate(b));
            }
            acc = acc.add(&prod.scale(&t.coeff).shift(t.qshift));
        }
        acc
    }

    /// Multiplies two expressions by distributing.
    pub fn times(&self, other: &QExpression) -> QExpression {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.times(b));
            }
        }
        QExpression { terms }
    }
}

/// First exponent where two expansions disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of comparing two expansions below a common bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub equal: bool,
    /// Every exponent below this bound was compared.
    pub achieved_truncation: i64,
    pub modulus: Option<BigInt>,
    pub mismatch: Option<Mismatch>,
}

/// Compares two series coefficientwise (optionally modulo `modulus`) below the
/// smaller of their bounds.
pub fn compare_series(
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
    modulus: Option<&BigInt>,
) -> IdentityReport {
    let bound = lhs.trunc().min(rhs.trunc());
    let start = lhs.offset().min(rhs.offset());
    let zero = BigInt::zero();
    let mut mismatch = None;
    for e in start..bound {
        let a = lhs.get(e).unwrap_or(&zero);
        let b = rhs.get(e).unwrap_or(&zero);
        let differ = match modulus {
            Some(m) => !(a - b).is_multiple_of(m),
            None => a != b,
        };
        if differ {
            mismatch = Some(Mismatch {
                exponent: e,
                lhs: a.clone(),
                rhs: b.clone(),
            });
            break;
        }
    }
    IdentityReport {
        equal: mismatch.is_none(),
        achieved_truncation: bound,
        modulus: modulus.cloned(),
        mismatch,
    }
}

/// Expands both sides below `q^bound` and compares them, exactly or modulo `modulus`.
pub fn verify_identity(
    lhs: &QExpression,
    rhs: &QExpression,
    bound: i64,
    modulus: Option<&BigInt>,
) -> IdentityReport {
    compare_series(&lhs.evaluate(bound), &rhs.evaluate(bound), modulus)
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Eta(e) => write!(f, "E{}", e.base)?,
            Factor::GenEta(g) => write!(f, "G({},{})", g.residue, g.modulus)?,
            Factor::R(r) => write!(f, "R(q^{})", r.arg_power)?,
        }
        match self.exponent() {
            1 => Ok(()),
            e => write!(f, "^{e}"),
        }
    }
}

/// Writes the term without its sign.
fn write_magnitude(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mag = t.coeff.abs();
    let mut parts = 0;
    if !(mag.is_one() && (t.qshift > 0 || !t.factors.is_empty())) {
        write!(f, "{mag}")?;
        parts += 1;
    }
    if t.qshift > 0 {
        if parts > 0 {
            f.write_str("*")?;
        }
        match t.qshift {
            1 => f.write_str("q")?,
            s => write!(f, "q^{s}")?,
        }
        parts += 1;
    }
    for factor in &t.factors {
        if parts > 0 {
            f.write_str("*")?;
        }
        write!(f, "{factor}")?;
        parts += 1;
    }
    match t.qshift {
        s if s >= 0 => Ok(()),
        -1 => f.write_str("/q"),
        s => write!(f, "/q^{}", -s),
    }
}

/// Canonical printer; [`parse`] reads it back to the same value.
impl fmt::Display for QExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_magnitude(t, f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_forms() {
        let e = parse("5*E5^5/E1^6").unwrap();
        assert_eq!(e.to_string(), "5*E5^5*E1^-6");
        let e = parse("1/R(q^5) - q - q^2*R(q^5)").unwrap();
        assert_eq!(e.to_string(), "R(q^5)^-1 - q - q^2*R(q^5)");
        let e = parse("E1/(q*E25)").unwrap();
        assert_eq!(e.to_string(), "E1*E25^-1/q");
        assert_eq!(parse("-3/q^2").unwrap().to_string(), "-3/q^2");
        assert_eq!(QExpression::zero().to_string(), "0");
    }

    #[test]
    fn evaluate_zeta_head() {
        let z = parse("E1/(q*E25)").unwrap().evaluate(5);
        assert_eq!(z, LaurentSeries::from_i64s(-1, &[1, -1, -1, 0, 0, 1], 5));
    }

    #[test]
    fn evaluate_zero_and_far_shift() {
        assert_eq!(parse("0").unwrap().evaluate(4), LaurentSeries::zero(4));
        let e = parse("q^10*E1 + 1").unwrap().evaluate(4);
        assert_eq!(e, LaurentSeries::one(4));
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let r = verify_identity(&parse("E1").unwrap(), &parse("E5").unwrap(), 10, None);
        assert!(!r.equal);
        let m = r.mismatch.unwrap();
        assert_eq!(m.exponent, 1);
        assert_eq!(m.lhs, BigInt::from(-1));
        assert_eq!(m.rhs, BigInt::zero());
        assert_eq!(r.achieved_truncation, 10);
    }
}
