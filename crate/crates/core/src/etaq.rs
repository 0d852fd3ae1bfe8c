//! Expansions of eta products `E_j = (q^j; q^j)_inf`, generalized eta products
//! `(q^a; q^m)_inf`, and the Rogers–Ramanujan quotient `R(q^k)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::LaurentSeries;

/// `E_base^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EtaFactor {
    pub base: u32,
    pub exponent: i64,
}

/// `(q^residue; q^modulus)_inf^exponent`, with `1 <= residue <= modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenEtaFactor {
    pub residue: u32,
    pub modulus: u32,
    pub exponent: i64,
}

/// `R(q^arg_power)^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RFactor {
    pub arg_power: u32,
    pub exponent: i64,
}

/// `(q^j; q^j)_inf` below `q^bound`, from Euler's pentagonal number theorem.
pub fn expand_eta(j: u32, bound: i64) -> LaurentSeries {
    assert!(j >= 1, "eta base must be positive");
    if bound <= 0 {
        return LaurentSeries::zero(bound);
    }
    let n = bound as usize;
    let j = j as usize;
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[0] = BigInt::one();
    for k in 1.. {
        let g1 = j * k * (3 * k - 1) / 2;
        if g1 >= n {
            break;
        }
        let sign = if k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        coeffs[g1] = sign.clone();
        let g2 = j * k * (3 * k + 1) / 2;
        if g2 < n {
            coeffs[g2] = sign;
        }
    }
    LaurentSeries::new(0, coeffs, bound)
}

/// `prod_{n>=0} (1 - q^(a + m n))` below `q^bound`.
pub fn expand_gen_eta(a: u32, m: u32, bound: i64) -> LaurentSeries {
    assert!(1 <= a && a <= m, "generalized eta needs 1 <= a <= m");
    if bound <= 0 {
        return LaurentSeries::zero(bound);
    }
    let n = bound as usize;
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[0] = BigInt::one();
    for t in (a as usize..n).step_by(m as usize) {
        mul_binomial(&mut coeffs, t);
    }
    LaurentSeries::new(0, coeffs, bound)
}

/// In place: `c <- c * (1 - q^t)`.
fn mul_binomial(c: &mut [BigInt], t: usize) {
    for i in (t..c.len()).rev() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] -= &lo[i - t];
    }
}

/// In place: `c <- c / (1 - q^t)`.
fn div_binomial(c: &mut [BigInt], t: usize) {
    for i in t..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] += &lo[i - t];
    }
}

/// `R(q^k)` below `q^bound`, normalized to constant term 1.
pub fn expand_r(k: u32, bound: i64) -> LaurentSeries {
    assert!(k >= 1, "R argument power must be positive");
    if bound <= 0 {
        return LaurentSeries::zero(bound);
    }
    let k = k as i64;
    let inner = (bound + k - 1) / k;
    let n = inner as usize;
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs[0] = BigInt::one();
    for (residue, numerator) in [(1usize, true), (4, true), (2, false), (3, false)] {
        for t in (residue..n).step_by(5) {
            if numerator {
                mul_binomial(&mut coeffs, t);
            } else {
                div_binomial(&mut coeffs, t);
            }
        }
    }
    LaurentSeries::new(0, coeffs, inner)
        .substitute(k as u32)
        .truncate(bound)
}

impl EtaFactor {
    pub fn expand(&self, bound: i64) -> LaurentSeries {
        power(&expand_eta(self.base, bound), self.exponent)
    }
}

impl GenEtaFactor {
    pub fn expand(&self, bound: i64) -> LaurentSeries {
        power(
            &expand_gen_eta(self.residue, self.modulus, bound),
            self.exponent,
        )
    }
}

impl RFactor {
    pub fn expand(&self, bound: i64) -> LaurentSeries {
        power(&expand_r(self.arg_power, bound), self.exponent)
    }
}

/// Integer power of a series with constant term 1.
pub(crate) fn power(base: &LaurentSeries, e: i64) -> LaurentSeries {
    match e {
        1 => base.clone(),
        _ => base
            .pow_recurrence(e)
            .expect("eta-type products have constant term 1"),
    }
}

/// `E_j^e` below `q^bound`.
pub fn eta_power(j: u32, e: i64, bound: i64) -> LaurentSeries {
    EtaFactor {
        base: j,
        exponent: e,
    }
    .expand(bound)
}

/// Checks `E_alpha^p == E_(p alpha) (mod p)` and
/// `E_1^(p^alpha) == E_p^(p^(alpha-1)) (mod p^alpha)` below `q^bound`.
pub fn binomial_congruence_check(p: u32, alpha: u32, bound: i64) -> bool {
    assert!(alpha >= 1, "alpha must be positive");
    let pb = BigInt::from(p);
    let first = eta_power(alpha, p as i64, bound).reduce_mod(&pb)
        == expand_eta(p * alpha, bound).reduce_mod(&pb);
    let modulus = num_traits::pow(pb, alpha as usize);
    let high = (p as i64).pow(alpha);
    let second = eta_power(1, high, bound).reduce_mod(&modulus)
        == eta_power(p, high / p as i64, bound).reduce_mod(&modulus);
    first && second
}

/// Pentagonal exponents `k(3k-1)/2, k(3k+1)/2` below `bound`, with signs `(-1)^k`.
pub fn pentagonal_terms(bound: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for k in 1.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 >= bound {
            break;
        }
        let negative = k % 2 == 1;
        out.push((g1, negative));
        let g2 = k * (3 * k + 1) / 2;
        if g2 < bound {
            out.push((g2, negative));
        }
    }
    out
}
