//! Truncated formal Laurent series with exact big-integer coefficients.
//!
//! A [`LaurentSeries`] stores the coefficients of `q^offset, ..., q^(trunc-1)`.
//! Everything at or above `trunc` is unknown. Every operation returns the
//! tightest truncation bound that its inputs justify, so a coefficient read
//! below `trunc` is always exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series is zero up to its truncation bound")]
    ZeroSeries,
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(BigInt),
    #[error("coefficient of q^{exponent} is unknown: series is exact only below q^{trunc}")]
    BeyondTruncation { exponent: i64, trunc: i64 },
}

/// Exact Laurent series `sum c_i q^(offset+i)`, known for exponents `< trunc`.
///
/// Canonical form: either `coeffs` is empty and `offset == trunc`, or the
/// first stored coefficient is nonzero. Two series are equal iff they agree on
/// every known coefficient and have the same bound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    offset: i64,
    coeffs: Vec<BigInt>,
    trunc: i64,
}

/// A nonzero coefficient, with the common `±1` case kept out of bignum multiplication.
#[derive(Clone)]
enum Coef {
    One,
    MinusOne,
    Big(BigInt),
}

impl Coef {
    fn of(c: &BigInt) -> Self {
        if c.is_one() {
            Coef::One
        } else if (-c).is_one() {
            Coef::MinusOne
        } else {
            Coef::Big(c.clone())
        }
    }

    fn mul_add(&self, acc: &mut BigInt, x: &BigInt) {
        match self {
            Coef::One => *acc += x,
            Coef::MinusOne => *acc -= x,
            Coef::Big(c) => *acc += c * x,
        }
    }
}

fn sparse(coeffs: &[BigInt], skip: usize) -> Vec<(usize, Coef)> {
    coeffs
        .iter()
        .enumerate()
        .skip(skip)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, Coef::of(c)))
        .collect()
}

impl LaurentSeries {
    /// Builds a series from the coefficients of `q^offset, q^(offset+1), ...`.
    ///
    /// Coefficients at or beyond `trunc` are dropped and missing ones are zero.
    pub fn new(offset: i64, mut coeffs: Vec<BigInt>, trunc: i64) -> Self {
        if offset >= trunc {
            return Self::zero(trunc);
        }
        coeffs.resize((trunc - offset) as usize, BigInt::zero());
        let mut s = LaurentSeries {
            offset,
            coeffs,
            trunc,
        };
        s.canonicalize();
        s
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64], trunc: i64) -> Self {
        Self::new(
            offset,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            trunc,
        )
    }

    pub fn zero(trunc: i64) -> Self {
        LaurentSeries {
            offset: trunc,
            coeffs: Vec::new(),
            trunc,
        }
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(BigInt::one(), 0, trunc)
    }

    /// `c * q^e`, exact below `trunc`.
    pub fn monomial(c: BigInt, e: i64, trunc: i64) -> Self {
        Self::new(e, vec![c], trunc)
    }

    fn canonicalize(&mut self) {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(0) => {}
            Some(z) => {
                self.coeffs.drain(..z);
                self.offset += z as i64;
            }
            None => {
                self.coeffs.clear();
                self.offset = self.trunc;
            }
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of known coefficients counted from the leading term.
    pub fn precision(&self) -> i64 {
        self.trunc - self.offset
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Exact coefficient of `q^e`; errors past the truncation bound.
    pub fn coeff_at(&self, e: i64) -> Result<BigInt, SeriesError> {
        if e >= self.trunc {
            return Err(SeriesError::BeyondTruncation {
                exponent: e,
                trunc: self.trunc,
            });
        }
        Ok(self.get(e).cloned().unwrap_or_default())
    }

    /// Borrowing variant of [`coeff_at`](Self::coeff_at) for in-range exponents
    /// inside the stored support; `None` otherwise.
    pub fn get(&self, e: i64) -> Option<&BigInt> {
        if e < self.offset || e >= self.trunc {
            None
        } else {
            self.coeffs.get((e - self.offset) as usize)
        }
    }

    /// Iterates over `(exponent, coefficient)` for the nonzero known terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Lowers the truncation bound to `min(self.trunc, bound)`.
    pub fn truncate(&self, bound: i64) -> Self {
        if bound >= self.trunc {
            return self.clone();
        }
        if bound <= self.offset {
            return Self::zero(bound);
        }
        let mut s = self.clone();
        s.coeffs.truncate((bound - s.offset) as usize);
        s.trunc = bound;
        s.canonicalize();
        s
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
            trunc: self.trunc + k,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            trunc: self.trunc,
        }
    }

    /// Substitutes `q -> q^m`. Exact below `m * trunc`.
    pub fn substitute(&self, m: u32) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let m = m as i64;
        if self.is_zero() {
            return Self::zero(self.trunc * m);
        }
        let offset = self.offset * m;
        let trunc = self.trunc * m;
        let mut coeffs = vec![BigInt::zero(); (trunc - offset) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m as usize] = c.clone();
        }
        LaurentSeries {
            offset,
            coeffs,
            trunc,
        }
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let offset = self.offset.min(other.offset);
        if offset >= trunc {
            return Self::zero(trunc);
        }
        let mut coeffs = vec![BigInt::zero(); (trunc - offset) as usize];
        for (e, c) in self.terms() {
            if e < trunc {
                coeffs[(e - offset) as usize] += c;
            }
        }
        for (e, c) in other.terms() {
            if e < trunc {
                let slot = &mut coeffs[(e - offset) as usize];
                if negate_other {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        let mut s = LaurentSeries {
            offset,
            coeffs,
            trunc,
        };
        s.canonicalize();
        s
    }

    /// Coefficientwise sum, exact below `min(a.trunc, b.trunc)`.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            trunc: self.trunc,
        }
    }

    /// Cauchy product, exact below `min(a.trunc + b.offset, b.trunc + a.offset)`.
    pub fn mul(&self, other: &Self) -> Self {
        let offset = self.offset + other.offset;
        let trunc = (self.trunc + other.offset).min(other.trunc + self.offset);
        if self.is_zero() || other.is_zero() {
            return Self::zero(trunc);
        }
        let len = (trunc - offset) as usize;
        let (outer, inner) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in sparse(&outer.coeffs[..len.min(outer.coeffs.len())], 0) {
            for (j, b) in inner.coeffs[..len - i].iter().enumerate() {
                if !b.is_zero() {
                    a.mul_add(&mut coeffs[i + j], b);
                }
            }
        }
        let mut s = LaurentSeries {
            offset,
            coeffs,
            trunc,
        };
        s.canonicalize();
        s
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn unit_leading(&self) -> Result<BigInt, SeriesError> {
        let lead = self.leading().ok_or(SeriesError::ZeroSeries)?;
        if lead.abs().is_one() {
            Ok(lead.clone())
        } else {
            Err(SeriesError::NonUnitLeading(lead.clone()))
        }
    }

    /// Multiplicative inverse of a series with leading coefficient `±1`.
    ///
    /// The result has offset `-self.offset` and the same relative precision.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let lead = self.unit_leading()?;
        let prec = self.precision() as usize;
        let tail = sparse(&self.coeffs, 1);
        let mut inv: Vec<BigInt> = Vec::with_capacity(prec);
        inv.push(lead.clone());
        for n in 1..prec {
            let mut acc = BigInt::zero();
            for (k, a) in tail.iter().take_while(|(k, _)| *k <= n) {
                a.mul_add(&mut acc, &inv[n - k]);
            }
            // lead * inv[n] + acc = 0 and lead = 1/lead
            if lead.is_one() {
                inv.push(-acc);
            } else {
                inv.push(acc);
            }
        }
        Ok(LaurentSeries {
            offset: -self.offset,
            coeffs: inv,
            trunc: prec as i64 - self.offset,
        })
    }

    /// `self^e` by binary exponentiation; negative powers go through [`inverse`](Self::inverse).
    pub fn int_pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.precision()));
        }
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc: Option<Self> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => Self::mul(&a, &base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = Self::mul(&base, &base);
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// `self^e` through the power-series ODE recurrence
    /// `n g_n = sum_{k=1}^{n} ((e+1)k - n) u_k g_{n-k}` on the unit-normalized series.
    ///
    /// Cost is `O(precision * nonzero terms)` independent of `e`, which makes it the
    /// right tool for high powers of sparse eta products. Same result and bound as
    /// [`int_pow`](Self::int_pow).
    pub fn pow_recurrence(&self, e: i64) -> Result<Self, SeriesError> {
        if e == 0 {
            return Ok(Self::one(self.precision()));
        }
        let lead = self.unit_leading()?;
        let prec = self.precision() as usize;
        let negate = !lead.is_one();
        let tail: Vec<(usize, Coef)> = sparse(&self.coeffs, 1)
            .into_iter()
            .map(|(k, c)| {
                let c = match (c, negate) {
                    (c, false) => c,
                    (Coef::One, true) => Coef::MinusOne,
                    (Coef::MinusOne, true) => Coef::One,
                    (Coef::Big(b), true) => Coef::Big(-b),
                };
                (k, c)
            })
            .collect();
        let mut g: Vec<BigInt> = Vec::with_capacity(prec);
        g.push(BigInt::one());
        let e1 = e as i128 + 1;
        for n in 1..prec {
            let mut acc = BigInt::zero();
            for (k, u) in tail.iter().take_while(|(k, _)| *k <= n) {
                let weight = e1 * *k as i128 - n as i128;
                if weight != 0 {
                    u.mul_add(&mut acc, &(&g[n - k] * weight));
                }
            }
            let (q, r) = acc.div_rem(&BigInt::from(n));
            debug_assert!(r.is_zero(), "power recurrence produced a non-integer");
            g.push(q);
        }
        if negate && e % 2 != 0 {
            for c in g.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        let offset = self.offset * e;
        Ok(LaurentSeries {
            offset,
            coeffs: g,
            trunc: offset + prec as i64,
        })
    }

    /// Least nonnegative residues of every coefficient modulo `m` (`m >= 2`).
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        assert!(*m >= BigInt::from(2), "modulus must be at least 2");
        let mut s = LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(m)).collect(),
            trunc: self.trunc,
        };
        s.canonicalize();
        s
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries({self})")
    }
}

/// Renders as `1 - q - q^2 + q^5 + O(q^8)`.
impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => f.write_str("q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag}*q")?,
                (false, _) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            write!(f, "O(q^{})", self.trunc)
        } else {
            write!(f, " + O(q^{})", self.trunc)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(self, rhs)
            }
        }
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(&self)
    }
}
