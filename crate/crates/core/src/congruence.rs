//! k-colored partition tables and drivers for congruences modulo powers of 5.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dissect::collapse;
use crate::etaq::pentagonal_terms;
use crate::matrices::{pi5, Family, Matrices, Valuation};
use crate::qexpr::{compare_series, Factor, IdentityReport, QExpression, Term};
use crate::series::LaurentSeries;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("theorem {theorem}: progression formula is not integral at alpha = {alpha}")]
    NonIntegralProgression { theorem: &'static str, alpha: u32 },
    #[error("progression parameters overflow 64 bits")]
    Overflow,
    #[error("table for p_-{colors} stops at n = {have}, need n = {need}")]
    InsufficientTable { colors: u32, have: u64, need: u64 },
    #[error("left side is exact below q^{achieved}, need q^{needed}")]
    InsufficientTruncation { needed: i64, achieved: i64 },
    #[error("theorem {0} is not of this kind")]
    WrongKind(&'static str),
}

/// `p_-k(0..=n)`, the coefficients of `1/E1^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    colors: u32,
    coeffs: Vec<BigInt>,
}

/// In place: `c <- c / E1`.
fn divide_by_eta(c: &mut [BigInt], pent: &[(usize, bool)]) {
    for n in 1..c.len() {
        let (lo, hi) = c.split_at_mut(n);
        let slot = &mut hi[0];
        for &(g, negative) in pent.iter().take_while(|(g, _)| *g <= n) {
            // E1 = 1 + sum s_g q^g, so b_n = c_n - sum s_g b_(n-g)
            if negative {
                *slot += &lo[n - g];
            } else {
                *slot -= &lo[n - g];
            }
        }
    }
}

impl PartitionTable {
    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Largest `n` in the table.
    pub fn max_n(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        self.coeffs.get(n as usize)
    }

    /// The table for `colors + extra` colors, by `extra` further divisions by `E1`.
    pub fn with_more_colors(&self, extra: u32) -> PartitionTable {
        let mut coeffs = self.coeffs.clone();
        let pent = pentagonal_terms(coeffs.len());
        for _ in 0..extra {
            divide_by_eta(&mut coeffs, &pent);
        }
        PartitionTable {
            colors: self.colors + extra,
            coeffs,
        }
    }

    /// `sum p_-k(n) q^n`, exact below `q^(max_n + 1)`.
    pub fn to_series(&self) -> LaurentSeries {
        LaurentSeries::new(0, self.coeffs.clone(), self.coeffs.len() as i64)
    }

    /// `sum_n p_-k(A n + B) q^n`, exact below `q^terms`.
    pub fn progression_series(
        &self,
        a: u64,
        b: u64,
        terms: u64,
    ) -> Result<LaurentSeries, CongruenceError> {
        let need = if terms == 0 { b } else { a * (terms - 1) + b };
        if need > self.max_n() {
            return Err(CongruenceError::InsufficientTable {
                colors: self.colors,
                have: self.max_n(),
                need,
            });
        }
        let coeffs = (0..terms)
            .map(|n| self.coeffs[(a * n + b) as usize].clone())
            .collect();
        Ok(LaurentSeries::new(0, coeffs, terms as i64))
    }
}

/// `p_-k(0..=n)` by `k` successive divisions by the pentagonal expansion of `E1`.
pub fn pk_table(k: u32, n: u64) -> PartitionTable {
    let mut coeffs = alloc::vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = BigInt::one();
    PartitionTable { colors: 0, coeffs }.with_more_colors(k)
}

/// Tables for every `k` in `ks`, each up to `n`, built along one chain of divisions.
pub fn pk_tables(ks: &[u32], n: u64) -> BTreeMap<u32, PartitionTable> {
    let mut wanted: Vec<u32> = ks.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let mut out = BTreeMap::new();
    let mut current = pk_table(0, n);
    for k in wanted {
        current = current.with_more_colors(k - current.colors);
        out.insert(k, current.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: u64,
    pub value: BigInt,
}

/// Result of checking `p_-k(A n + B) ≡ 0 (mod 5^alpha)` for `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub label: String,
    pub colors: u32,
    pub modulus: u64,
    pub residue: u64,
    pub alpha: u32,
    pub n_max: u64,
    pub status: Status,
    pub min_valuation: Valuation,
    pub counterexample: Option<Counterexample>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A claimed congruence `p_-colors(modulus n + residue) ≡ 0 (mod 5^alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Progression {
    pub label: String,
    pub colors: u32,
    pub modulus: u64,
    pub residue: u64,
    pub alpha: u32,
}

impl Progression {
    /// Largest `n_max` with `modulus * n_max + residue <= budget` (0 if none fits).
    pub fn n_max_within(&self, budget: u64) -> u64 {
        budget.saturating_sub(self.residue) / self.modulus
    }

    /// Checks the progression against an existing table.
    pub fn check(
        &self,
        table: &PartitionTable,
        n_max: u64,
    ) -> Result<CongruenceReport, CongruenceError> {
        assert_eq!(
            table.colors(),
            self.colors,
            "table has the wrong number of colors"
        );
        let need = self.modulus * n_max + self.residue;
        if need > table.max_n() {
            return Err(CongruenceError::InsufficientTable {
                colors: self.colors,
                have: table.max_n(),
                need,
            });
        }
        let mut min_valuation = Valuation::Infinite;
        let mut counterexample = None;
        for n in 0..=n_max {
            let value = &table.coeffs[(self.modulus * n + self.residue) as usize];
            let v = pi5(value);
            if counterexample.is_none() && !v.at_least(self.alpha as i64) {
                counterexample = Some(Counterexample {
                    n,
                    value: value.clone(),
                });
            }
            min_valuation = min_valuation.min(v);
        }
        let status = if min_valuation.at_least(self.alpha as i64) {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(CongruenceReport {
            label: self.label.clone(),
            colors: self.colors,
            modulus: self.modulus,
            residue: self.residue,
            alpha: self.alpha,
            n_max,
            status,
            min_valuation,
            counterexample,
        })
    }
}

/// Builds the table and checks `p_-k(A n + B) ≡ 0 (mod 5^alpha)` for `n <= n_max`.
pub fn verify_progression(k: u32, a: u64, b: u64, alpha: u32, n_max: u64) -> CongruenceReport {
    assert!(
        a >= 1 && b < a && alpha >= 1,
        "need A >= 1, 0 <= B < A, alpha >= 1"
    );
    let p = Progression {
        label: format!("p_-{k}({a}n+{b}) mod 5^{alpha}"),
        colors: k,
        modulus: a,
        residue: b,
        alpha,
    };
    let table = pk_table(k, a * n_max + b);
    p.check(&table, n_max)
        .expect("table sized for the progression")
}

/// The inverse of 24 modulo `5^alpha`, in `[0, 5^alpha)`.
pub fn delta_alpha(alpha: u32) -> BigInt {
    assert!(alpha >= 1, "alpha must be positive");
    let m = num_traits::pow(BigInt::from(5), alpha as usize);
    let g = BigInt::from(24).extended_gcd(&m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(&m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `p_-2` modulo powers of 5.
    Thm1_1,
    /// `p_-6` modulo powers of 5.
    Thm1_2,
    /// `p_-7` modulo powers of 5.
    Thm1_3,
    /// `p_-(25r+k)(25n+25-k) ≡ 0 (mod 25)` for `k in {1,2,6,7,11,17}`.
    Mod25,
    /// `p(5^a n + delta_a) ≡ 0 (mod 5^a)`.
    Watson,
    /// The `25r+16`, `25r+21`, `25r+22` families modulo 25.
    Corollary,
    /// Generating functions for `p_-2` progressions in terms of `a(j,k)`.
    Gf4_1,
    /// Generating functions for `p_-6` progressions in terms of `b(j,k)`.
    Gf4_4,
    /// Generating functions for `p_-7` progressions in terms of `c(j,k)`.
    Gf4_6,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Thm1_1,
        TheoremId::Thm1_2,
        TheoremId::Thm1_3,
        TheoremId::Mod25,
        TheoremId::Watson,
        TheoremId::Corollary,
        TheoremId::Gf4_1,
        TheoremId::Gf4_4,
        TheoremId::Gf4_6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm1_1 => "1.1",
            TheoremId::Thm1_2 => "1.2",
            TheoremId::Thm1_3 => "1.3",
            TheoremId::Mod25 => "mod25",
            TheoremId::Watson => "watson",
            TheoremId::Corollary => "corollary",
            TheoremId::Gf4_1 => "gf4.1",
            TheoremId::Gf4_4 => "gf4.4",
            TheoremId::Gf4_6 => "gf4.6",
        }
    }

    pub fn is_generating_function(self) -> bool {
        matches!(self, TheoremId::Gf4_1 | TheoremId::Gf4_4 | TheoremId::Gf4_6)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.into()))
    }
}

/// Default largest `A n + B` examined per instance.
pub const DEFAULT_BUDGET: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremParams {
    pub alpha_max: u32,
    pub r_max: u32,
    /// Caps `n_max` per instance; `None` means "as far as the budget allows".
    pub count: Option<u64>,
    pub budget: u64,
}

impl Default for TheoremParams {
    fn default() -> Self {
        TheoremParams {
            alpha_max: 2,
            r_max: 1,
            count: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn pow5(e: u32) -> Result<u64, CongruenceError> {
    5u64.checked_pow(e).ok_or(CongruenceError::Overflow)
}

/// `(c * 5^e + add) / den`, insisting on exact division.
fn progression_residue(
    theorem: TheoremId,
    alpha: u32,
    c: u64,
    e: u32,
    add: u64,
    den: u64,
) -> Result<u64, CongruenceError> {
    let num = c
        .checked_mul(pow5(e)?)
        .and_then(|x| x.checked_add(add))
        .ok_or(CongruenceError::Overflow)?;
    if num % den != 0 {
        return Err(CongruenceError::NonIntegralProgression {
            theorem: theorem.as_str(),
            alpha,
        });
    }
    Ok(num / den)
}

/// Every progression a congruence theorem claims, for `alpha <= alpha_max` and `r <= r_max`.
pub fn theorem_progressions(
    id: TheoremId,
    params: &TheoremParams,
) -> Result<Vec<Progression>, CongruenceError> {
    let mut out = Vec::new();
    let mut push = |label: String, colors: u32, modulus: u64, residue: u64, alpha: u32| {
        out.push(Progression {
            label,
            colors,
            modulus,
            residue,
            alpha,
        })
    };
    let t = id.as_str();
    match id {
        TheoremId::Thm1_1 => {
            for a in 1..=params.alpha_max {
                let b = progression_residue(id, a, 7, 2 * a - 1, 1, 12)?;
                push(format!("{t}/odd/alpha={a}"), 2, pow5(2 * a - 1)?, b, a);
                let b = progression_residue(id, a, 11, 2 * a, 1, 12)?;
                push(format!("{t}/even/alpha={a}"), 2, pow5(2 * a)?, b, a + 1);
            }
        }
        TheoremId::Thm1_2 => {
            for a in 1..=params.alpha_max {
                let b = progression_residue(id, a, 3, a, 1, 4)?;
                push(format!("{t}/branch1/alpha={a}"), 6, pow5(a)?, b, a);
                let b = progression_residue(id, a, 11, a, 1, 4)?;
                push(format!("{t}/branch2/alpha={a}"), 6, pow5(a + 1)?, b, a + 1);
                let b = progression_residue(id, a, 19, a, 1, 4)?;
                push(format!("{t}/branch3/alpha={a}"), 6, pow5(a + 1)?, b, a + 1);
            }
        }
        TheoremId::Thm1_3 => {
            for a in 1..=params.alpha_max {
                let b = progression_residue(id, a, 13, 2 * a - 1, 7, 24)?;
                push(format!("{t}/branch1/alpha={a}"), 7, pow5(2 * a - 1)?, b, a);
                let b = progression_residue(id, a, 17, 2 * a, 7, 24)?;
                push(format!("{t}/branch2/alpha={a}"), 7, pow5(2 * a)?, b, a + 1);
                let b = progression_residue(id, a, 61, 2 * a - 1, 7, 24)?;
                push(format!("{t}/branch3/alpha={a}"), 7, pow5(2 * a)?, b, a + 1);
                let b = progression_residue(id, a, 109, 2 * a - 1, 7, 24)?;
                push(format!("{t}/branch4/alpha={a}"), 7, pow5(2 * a)?, b, a + 1);
            }
        }
        TheoremId::Mod25 => {
            for r in 0..=params.r_max {
                for k in [1u32, 2, 6, 7, 11, 17] {
                    let colors = 25 * r + k;
                    push(format!("{t}/r={r}/k={k}"), colors, 25, 25 - k as u64, 2);
                }
            }
        }
        TheoremId::Watson => {
            for a in 1..=params.alpha_max {
                let d: u64 = delta_alpha(a)
                    .try_into()
                    .map_err(|_| CongruenceError::Overflow)?;
                push(format!("{t}/alpha={a}"), 1, pow5(a)?, d, a);
            }
        }
        TheoremId::Corollary => {
            let families: [(u32, &[u64]); 3] = [
                (16, &[19, 24]),
                (21, &[9, 14, 19, 24]),
                (22, &[8, 13, 18, 23]),
            ];
            for r in 0..=params.r_max {
                for (k, residues) in families {
                    for &b in residues {
                        push(format!("{t}/r={r}/k={k}/B={b}"), 25 * r + k, 25, b, 2);
                    }
                }
            }
        }
        TheoremId::Gf4_1 | TheoremId::Gf4_4 | TheoremId::Gf4_6 => {
            return Err(CongruenceError::WrongKind(id.as_str()))
        }
    }
    Ok(out)
}

fn n_max_for(p: &Progression, params: &TheoremParams) -> u64 {
    let by_budget = p.n_max_within(params.budget);
    params.count.map_or(by_budget, |c| c.min(by_budget))
}

/// Checks every instance of a congruence theorem, sharing one table per color count.
pub fn run_theorem(
    id: TheoremId,
    params: &TheoremParams,
) -> Result<Vec<CongruenceReport>, CongruenceError> {
    let progs = theorem_progressions(id, params)?;
    let need = progs
        .iter()
        .map(|p| p.modulus * n_max_for(p, params) + p.residue)
        .max()
        .unwrap_or(0);
    let ks: Vec<u32> = progs.iter().map(|p| p.colors).collect();
    let tables = pk_tables(&ks, need);
    progs
        .iter()
        .map(|p| p.check(&tables[&p.colors], n_max_for(p, params)))
        .collect()
}

/// One generating-function identity: `sum_n p_-k(A n + B) q^n` against a matrix-weighted
/// sum `sum_l entry(row, l) q^(l-1) E5^(e5(l)) / E1^(e1(l))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfInstance {
    pub label: String,
    pub colors: u32,
    pub family: Family,
    pub row: u32,
    pub modulus: u64,
    pub residue: u64,
    /// `(e5, e1)` as `(slope, intercept)` pairs: `e5 = 6l + e5_off`, `e1 = 6l + e1_off`.
    pub e5_offset: i64,
    pub e1_offset: i64,
}

/// The generating-function instances of a theorem for `1 <= j <= j_max`.
pub fn gf_instances(id: TheoremId, j_max: u32) -> Result<Vec<GfInstance>, CongruenceError> {
    let t = id.as_str();
    let mut out = Vec::new();
    for j in 1..=j_max {
        match id {
            TheoremId::Gf4_1 => {
                let odd = 2 * j - 1;
                out.push(GfInstance {
                    label: format!("{t}/odd/j={j}"),
                    colors: 2,
                    family: Family::A,
                    row: odd,
                    modulus: pow5(odd)?,
                    residue: progression_residue(id, j, 7, odd, 1, 12)?,
                    e5_offset: -2,
                    e1_offset: 0,
                });
                out.push(GfInstance {
                    label: format!("{t}/even/j={j}"),
                    colors: 2,
                    family: Family::A,
                    row: 2 * j,
                    modulus: pow5(2 * j)?,
                    residue: progression_residue(id, j, 11, 2 * j, 1, 12)?,
                    e5_offset: 0,
                    e1_offset: 2,
                });
            }
            TheoremId::Gf4_4 => out.push(GfInstance {
                label: format!("{t}/j={j}"),
                colors: 6,
                family: Family::B,
                row: j,
                modulus: pow5(j)?,
                residue: progression_residue(id, j, 3, j, 1, 4)?,
                e5_offset: 0,
                e1_offset: 6,
            }),
            TheoremId::Gf4_6 => {
                let odd = 2 * j - 1;
                out.push(GfInstance {
                    label: format!("{t}/odd/j={j}"),
                    colors: 7,
                    family: Family::C,
                    row: odd,
                    modulus: pow5(odd)?,
                    residue: progression_residue(id, j, 13, odd, 7, 24)?,
                    e5_offset: -1,
                    e1_offset: 6,
                });
                out.push(GfInstance {
                    label: format!("{t}/even/j={j}"),
                    colors: 7,
                    family: Family::C,
                    row: 2 * j,
                    modulus: pow5(2 * j)?,
                    residue: progression_residue(id, j, 17, 2 * j, 7, 24)?,
                    e5_offset: 0,
                    e1_offset: 7,
                });
            }
            _ => return Err(CongruenceError::WrongKind(id.as_str())),
        }
    }
    Ok(out)
}

impl GfInstance {
    /// Largest table index the left side needs for `terms` coefficients.
    pub fn table_need(&self, terms: u64) -> u64 {
        self.modulus * terms.saturating_sub(1) + self.residue
    }

    /// Left side by repeated 5-collapses of `1/E1^k` along the base-5 digits of `B`.
    pub fn lhs(&self, table: &PartitionTable) -> LaurentSeries {
        let mut series = table.to_series();
        let mut rest = self.residue;
        let mut a = self.modulus;
        while a > 1 {
            series = collapse(&series, 5, (rest % 5) as u32);
            rest /= 5;
            a /= 5;
        }
        series
    }

    /// Right side, keeping the terms that can reach below `q^terms`.
    pub fn rhs(&self, mats: &mut Matrices, terms: u64) -> QExpression {
        let mut expr = QExpression::zero();
        for l in 1..=terms as u32 {
            let coeff = mats.entry(self.family, self.row, l);
            if coeff.is_zero() {
                continue;
            }
            let ll = l as i64;
            expr.terms.push(Term::new(
                coeff,
                ll - 1,
                alloc::vec![
                    Factor::eta(5, 6 * ll + self.e5_offset),
                    Factor::eta(1, -(6 * ll + self.e1_offset))
                ],
            ));
        }
        expr
    }

    pub fn verify(
        &self,
        table: &PartitionTable,
        mats: &mut Matrices,
        terms: u64,
    ) -> Result<IdentityReport, CongruenceError> {
        let lhs = self.lhs(table);
        let n = terms as i64;
        if lhs.trunc() < n {
            return Err(CongruenceError::InsufficientTruncation {
                needed: n,
                achieved: lhs.trunc(),
            });
        }
        let rhs = self.rhs(mats, terms).evaluate(n);
        Ok(compare_series(&lhs.truncate(n), &rhs, None))
    }
}

/// Checks each generating-function instance to `terms` coefficients.
pub fn verify_gf_theorem(
    id: TheoremId,
    j_max: u32,
    terms: u64,
    mats: &mut Matrices,
) -> Result<Vec<(GfInstance, IdentityReport)>, CongruenceError> {
    let instances = gf_instances(id, j_max)?;
    let need = instances
        .iter()
        .map(|g| g.table_need(terms))
        .max()
        .unwrap_or(0);
    let ks: Vec<u32> = instances.iter().map(|g| g.colors).collect();
    let tables = pk_tables(&ks, need);
    instances
        .into_iter()
        .map(|g| {
            let report = g.verify(&tables[&g.colors], mats, terms)?;
            Ok((g, report))
        })
        .collect()
}

/// An empirically observed progression; not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub colors: u32,
    pub modulus: u64,
    pub residue: u64,
    pub alpha: u32,
    pub n_max: u64,
    pub min_valuation: Valuation,
}

/// All residues `B mod m` with `5^alpha | p_-k(m n + B)` for every `n <= n_max`.
pub fn search(k_range: RangeInclusive<u32>, alpha: u32, m: u64, n_max: u64) -> Vec<SearchHit> {
    assert!(m >= 2, "progression modulus must be at least 2");
    let ks: Vec<u32> = k_range.collect();
    let tables = pk_tables(&ks, m * n_max + m - 1);
    let mut hits = Vec::new();
    for k in ks {
        let table = &tables[&k];
        for b in 0..m {
            let p = Progression {
                label: String::new(),
                colors: k,
                modulus: m,
                residue: b,
                alpha,
            };
            let r = p.check(table, n_max).expect("table sized for the search");
            if r.passed() {
                hits.push(SearchHit {
                    colors: k,
                    modulus: m,
                    residue: b,
                    alpha,
                    n_max,
                    min_valuation: r.min_valuation,
                });
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            pk_table(1, 6).coeffs(),
            ints(&[1, 1, 2, 3, 5, 7, 11]).as_slice()
        );
        assert_eq!(pk_table(2, 4).coeffs(), ints(&[1, 2, 5, 10, 20]).as_slice());
        assert_eq!(pk_table(7, 3).coeffs()[3], BigInt::from(140));
        assert_eq!(pk_table(0, 3).coeffs(), ints(&[1, 0, 0, 0]).as_slice());
    }

    #[test]
    fn chained_tables_match_direct() {
        let t = pk_tables(&[3, 1, 7], 40);
        assert_eq!(t.len(), 3);
        for (k, table) in &t {
            assert_eq!(table, &pk_table(*k, 40));
        }
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_alpha(1), BigInt::from(4));
        assert_eq!(delta_alpha(2), BigInt::from(24));
        assert_eq!(delta_alpha(3), BigInt::from(99));
    }

    #[test]
    fn ramanujan_mod5() {
        let r = verify_progression(1, 5, 4, 1, 500);
        assert!(r.passed());
        assert!(r.counterexample.is_none());
        assert_eq!(r.min_valuation, Valuation::Finite(1));
    }

    #[test]
    fn failing_progression_reports_counterexample() {
        let r = verify_progression(1, 5, 3, 1, 10);
        assert_eq!(r.status, Status::Fail);
        // p(3) = 3
        assert_eq!(
            r.counterexample,
            Some(Counterexample {
                n: 0,
                value: BigInt::from(3)
            })
        );
        assert_eq!(r.min_valuation, Valuation::Finite(0));
    }

    #[test]
    fn theorem_progressions_are_integral() {
        let p = TheoremParams {
            alpha_max: 3,
            ..TheoremParams::default()
        };
        let t12 = theorem_progressions(TheoremId::Thm1_2, &p).unwrap();
        assert_eq!((t12[0].modulus, t12[0].residue, t12[0].alpha), (5, 4, 1));
        let t13 = theorem_progressions(TheoremId::Thm1_3, &p).unwrap();
        assert_eq!((t13[1].modulus, t13[1].residue, t13[1].alpha), (25, 18, 2));
        let m25 = theorem_progressions(TheoremId::Mod25, &p).unwrap();
        let k11 = m25.iter().find(|p| p.colors == 11).unwrap();
        assert_eq!((k11.modulus, k11.residue), (25, 14));
        let w = theorem_progressions(TheoremId::Watson, &p).unwrap();
        assert_eq!(w.iter().map(|p| p.residue).collect::<Vec<_>>(), [4, 24, 99]);
        assert_eq!(
            theorem_progressions(TheoremId::Gf4_1, &p),
            Err(CongruenceError::WrongKind("gf4.1"))
        );
    }

    #[test]
    fn non_integral_formula_is_rejected() {
        assert_eq!(
            progression_residue(TheoremId::Thm1_1, 1, 7, 1, 2, 12),
            Err(CongruenceError::NonIntegralProgression {
                theorem: "1.1",
                alpha: 1
            })
        );
    }

    #[test]
    fn theorem_ids_parse() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("1.4".parse::<TheoremId>().is_err());
    }

    #[test]
    fn progression_series_bounds() {
        let t = pk_table(2, 20);
        let s = t.progression_series(5, 3, 4).unwrap();
        assert_eq!(s, LaurentSeries::from_i64s(0, &[10, 185, 1770, 12230], 4));
        assert!(t.progression_series(5, 3, 5).is_err());
    }
}
