//! The huffing operator and m-dissections of Laurent series.
//!
//! `huff(a, m, r)` keeps the terms `q^e` with `e ≡ r (mod m)`; `collapse(a, m, r)`
//! additionally divides out `q^r` and substitutes `q^m -> q`. Negative exponents
//! are handled like any other residue class.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrices::Matrices;
use crate::qexpr::{compare_series, Factor, IdentityReport, QExpression, Term};
use crate::series::LaurentSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DissectError {
    #[error("need the coefficient of q^{needed} but the series is exact only below q^{available}")]
    InsufficientTruncation { needed: i64, available: i64 },
    #[error("peeling left a nonzero coefficient at q^{exponent}")]
    ResidualNonZero { exponent: i64 },
}

/// The `q^(m n + r)` part of a series with `q^r` divided out and `q^m -> q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DissectionComponent {
    pub residue: u32,
    pub modulus: u32,
    pub collapsed: LaurentSeries,
}

fn ceil_div(x: i64, m: i64) -> i64 {
    -((-x).div_euclid(m))
}

/// Keeps exactly the coefficients at exponents `≡ r (mod m)`.
pub fn huff(a: &LaurentSeries, m: u32, r: u32) -> LaurentSeries {
    assert!(m >= 1 && r < m, "need 0 <= r < m");
    let (m, r) = (m as i64, r as i64);
    let coeffs = a
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if (a.offset() + i as i64 - r).rem_euclid(m) == 0 {
                c.clone()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    LaurentSeries::new(a.offset(), coeffs, a.trunc())
}

/// `b` with `b_n = a_(m n + r)`, exact below `ceil((a.trunc - r) / m)`.
pub fn collapse(a: &LaurentSeries, m: u32, r: u32) -> LaurentSeries {
    assert!(m >= 1 && r < m, "need 0 <= r < m");
    let (mi, ri) = (m as i64, r as i64);
    let trunc = ceil_div(a.trunc() - ri, mi);
    let start = ceil_div(a.offset() - ri, mi);
    let coeffs = (start..trunc)
        .map(|n| a.get(mi * n + ri).cloned().unwrap_or_default())
        .collect();
    LaurentSeries::new(start, coeffs, trunc)
}

/// All `m` components of `a`, by residue.
pub fn dissect(a: &LaurentSeries, m: u32) -> Vec<DissectionComponent> {
    (0..m)
        .map(|r| DissectionComponent {
            residue: r,
            modulus: m,
            collapsed: collapse(a, m, r),
        })
        .collect()
}

impl DissectionComponent {
    /// `q^r * collapsed(q^m)`.
    pub fn expand(&self) -> LaurentSeries {
        self.collapsed
            .substitute(self.modulus)
            .shift(self.residue as i64)
    }
}

/// Sums the re-expanded components.
pub fn reassemble(components: &[DissectionComponent]) -> LaurentSeries {
    let mut parts = components.iter().map(DissectionComponent::expand);
    let first = parts.next().expect("at least one component");
    parts.fold(first, |acc, p| acc.add(&p))
}

/// `zeta^-i = q^i E25^i / E1^i`.
pub fn inverse_zeta_power(i: u32) -> QExpression {
    let i = i as i64;
    Term::new(1, i, alloc::vec![Factor::eta(25, i), Factor::eta(1, -i)]).into()
}

/// `T^-j = q^(5j) E25^(6j) / E5^(6j)`.
pub fn inverse_t_power(j: u32) -> QExpression {
    let j = j as i64;
    Term::new(
        1,
        5 * j,
        alloc::vec![Factor::eta(25, 6 * j), Factor::eta(5, -6 * j)],
    )
    .into()
}

/// Recovers `m(i, 1..=j_max)` from series alone.
///
/// `H(zeta^-i)` is peeled against `T^-1, T^-2, ...`: since `T^-j = q^(5j)(1 + ...)`,
/// the residual's coefficient at `q^(5j)` is `m(i,j)`. Peeling runs through
/// `max(i, j_max)` and the residual must then vanish below the bound, which
/// checks that the expansion in powers of `1/T` stops at `j = i`.
pub fn m_oracle(i: u32, j_max: u32, bound: i64) -> Result<Vec<BigInt>, DissectError> {
    let h = huff(&inverse_zeta_power(i).evaluate(bound), 5, 0);
    let last = i.max(j_max);
    let needed = 5 * last as i64;
    if needed >= h.trunc() {
        return Err(DissectError::InsufficientTruncation {
            needed,
            available: h.trunc(),
        });
    }
    let mut residual = h;
    let mut out = Vec::with_capacity(last as usize);
    for j in 1..=last {
        let e = 5 * j as i64;
        if residual.offset() < e {
            return Err(DissectError::ResidualNonZero {
                exponent: residual.offset(),
            });
        }
        let mij = residual.coeff_at(e).expect("checked against the bound");
        if !mij.is_zero() {
            let t = inverse_t_power(j).evaluate(residual.trunc());
            residual = residual.sub(&t.scale(&mij));
        }
        out.push(mij);
    }
    if !residual.is_zero() {
        return Err(DissectError::ResidualNonZero {
            exponent: residual.offset(),
        });
    }
    out.truncate(j_max as usize);
    Ok(out)
}

/// The two huffing identities for the 6th-power families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HVariant {
    /// `H(q^(i-5) E5^(6i-1)/E1^(6i)) = sum_j m(6i, i+j) q^(5j-5) E25^(6j)/E5^(6j+1)`
    H1,
    /// `H(q^(i-4) E5^(6i)/E1^(6i+1)) = sum_j m(6i+1, i+j) q^(5j-5) E25^(6j-1)/E5^(6j)`
    H2,
}

/// Left side (already huffed) and right side expression of an `HVariant` instance.
pub fn h_lemma_sides(
    i: u32,
    variant: HVariant,
    bound: i64,
    mats: &mut Matrices,
) -> (LaurentSeries, QExpression) {
    let ii = i as i64;
    let (lhs, row) = match variant {
        HVariant::H1 => (
            Term::new(
                1,
                ii - 5,
                alloc::vec![Factor::eta(5, 6 * ii - 1), Factor::eta(1, -6 * ii)],
            ),
            6 * i,
        ),
        HVariant::H2 => (
            Term::new(
                1,
                ii - 4,
                alloc::vec![Factor::eta(5, 6 * ii), Factor::eta(1, -6 * ii - 1)],
            ),
            6 * i + 1,
        ),
    };
    let lhs = huff(&QExpression::from(lhs).evaluate(bound), 5, 0);
    let mut rhs = QExpression::zero();
    // m(row, i+j) = 0 once i+j > row
    for j in 1..=(row - i) {
        let shift = 5 * j as i64 - 5;
        if shift >= bound {
            break;
        }
        let coeff = mats.m_entry(row, i + j);
        if coeff.is_zero() {
            continue;
        }
        let jj = j as i64;
        let factors = match variant {
            HVariant::H1 => alloc::vec![Factor::eta(25, 6 * jj), Factor::eta(5, -6 * jj - 1)],
            HVariant::H2 => alloc::vec![Factor::eta(25, 6 * jj - 1), Factor::eta(5, -6 * jj)],
        };
        rhs.terms.push(Term::new(coeff, shift, factors));
    }
    (lhs, rhs)
}

/// Expands both sides of an `HVariant` instance below `q^bound` and compares exactly.
pub fn verify_h_lemma(
    i: u32,
    variant: HVariant,
    bound: i64,
    mats: &mut Matrices,
) -> IdentityReport {
    let (lhs, rhs) = h_lemma_sides(i, variant, bound, mats);
    compare_series(&lhs, &rhs.evaluate(bound), None)
}
