//! The integer matrices `m(i,j)`, `a(j,k)`, `b(j,k)`, `c(j,k)` and 5-adic valuations.
//!
//! `m` is seeded by its first column `(5, 10, 9, 4, 1, 0, 0, ...)` and extended by
//!
//! ```text
//! m(i,j) = 25 m(i-1,j-1) + 25 m(i-2,j-1) + 15 m(i-3,j-1) + 5 m(i-4,j-1) + m(i-5,j-1)
//! ```
//!
//! with out-of-range indices contributing 0. The families `a`, `b`, `c` have a
//! seeded first row and each later row is a finite combination of the previous
//! row with entries of `m`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

const M_SEED: [i64; 5] = [5, 10, 9, 4, 1];
const M_WEIGHTS: [i64; 5] = [25, 25, 15, 5, 1];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    M,
    A,
    B,
    C,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::M => "m",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "m" => Some(Family::M),
            "a" => Some(Family::A),
            "b" => Some(Family::B),
            "c" => Some(Family::C),
            _ => None,
        }
    }

    /// First row of `a`, `b` or `c`; entries past the end are zero.
    fn seed_row(self) -> Vec<BigInt> {
        let p = |c: u64, e: u32| BigInt::from(c) * BigInt::from(5u32).pow(e);
        match self {
            Family::M => Vec::new(),
            Family::A => [p(10, 0), p(125, 0)].into(),
            Family::B => [p(315, 0), p(52, 4), p(63, 6), p(6, 9), p(1, 11)].into(),
            Family::C => [p(140, 0), p(49, 4), p(21, 7), p(91, 8), p(7, 11), p(1, 13)].into(),
        }
    }

    /// Row `j+1` is `sum_i row_j(i) * m(6i + shift, i + k + lag)`; returns `(shift, lag)`.
    fn step(self, j: u32) -> (u32, u32) {
        let odd = j % 2 == 1;
        match self {
            Family::M => unreachable!("m has its own recurrence"),
            Family::A if odd => (0, 0),
            Family::A => (2, 0),
            Family::B => (6, 1),
            Family::C if odd => (6, 1),
            Family::C => (7, 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Memoized entries of one matrix family.
#[derive(Debug, Clone)]
pub struct MatrixTable {
    family: Family,
    memo: BTreeMap<(u32, u32), BigInt>,
}

impl MatrixTable {
    fn new(family: Family) -> Self {
        MatrixTable {
            family,
            memo: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of cached entries.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }
}

/// All four families, sharing one cache of `m`.
///
/// Entries are deterministic; a table is an append-only cache and is meant to be
/// owned by one worker at a time.
#[derive(Debug, Clone)]
pub struct Matrices {
    m: MatrixTable,
    a: MatrixTable,
    b: MatrixTable,
    c: MatrixTable,
}

impl Default for Matrices {
    fn default() -> Self {
        Self::new()
    }
}

impl Matrices {
    pub fn new() -> Self {
        Matrices {
            m: MatrixTable::new(Family::M),
            a: MatrixTable::new(Family::A),
            b: MatrixTable::new(Family::B),
            c: MatrixTable::new(Family::C),
        }
    }

    pub fn m_entry(&mut self, i: u32, j: u32) -> BigInt {
        if i == 0 || j == 0 {
            return BigInt::zero();
        }
        if j == 1 {
            return M_SEED
                .get(i as usize - 1)
                .map_or_else(BigInt::zero, |&v| BigInt::from(v));
        }
        if let Some(v) = self.m.memo.get(&(i, j)) {
            return v.clone();
        }
        let mut acc = BigInt::zero();
        for (t, w) in (1..=5u32).zip(M_WEIGHTS) {
            if i > t {
                let prev = self.m_entry(i - t, j - 1);
                if !prev.is_zero() {
                    acc += prev * w;
                }
            }
        }
        self.m.memo.insert((i, j), acc.clone());
        acc
    }

    pub fn a_entry(&mut self, j: u32, k: u32) -> BigInt {
        self.derived(Family::A, j, k)
    }

    pub fn b_entry(&mut self, j: u32, k: u32) -> BigInt {
        self.derived(Family::B, j, k)
    }

    pub fn c_entry(&mut self, j: u32, k: u32) -> BigInt {
        self.derived(Family::C, j, k)
    }

    pub fn entry(&mut self, family: Family, row: u32, col: u32) -> BigInt {
        match family {
            Family::M => self.m_entry(row, col),
            _ => self.derived(family, row, col),
        }
    }

    fn table(&mut self, family: Family) -> &mut MatrixTable {
        match family {
            Family::M => &mut self.m,
            Family::A => &mut self.a,
            Family::B => &mut self.b,
            Family::C => &mut self.c,
        }
    }

    fn derived(&mut self, family: Family, j: u32, k: u32) -> BigInt {
        if j == 0 || k == 0 {
            return BigInt::zero();
        }
        if j == 1 {
            return family
                .seed_row()
                .get(k as usize - 1)
                .cloned()
                .unwrap_or_default();
        }
        if let Some(v) = self.table(family).memo.get(&(j, k)) {
            return v.clone();
        }
        let (shift, lag) = family.step(j - 1);
        // m(6i+shift, i+k+lag) vanishes once 6i+shift > 5(i+k+lag).
        let i_max = (5 * (k + lag)).saturating_sub(shift);
        let mut acc = BigInt::zero();
        for i in 1..=i_max {
            let prev = self.derived(family, j - 1, i);
            if prev.is_zero() {
                continue;
            }
            let m = self.m_entry(6 * i + shift, i + k + lag);
            if !m.is_zero() {
                acc += prev * m;
            }
        }
        self.table(family).memo.insert((j, k), acc.clone());
        acc
    }

    /// Dense `rows x cols` window starting at `(1,1)`.
    pub fn window(&mut self, family: Family, rows: u32, cols: u32) -> Vec<Vec<BigInt>> {
        (1..=rows)
            .map(|r| (1..=cols).map(|c| self.entry(family, r, c)).collect())
            .collect()
    }

    pub fn cached(&self, family: Family) -> usize {
        match family {
            Family::M => self.m.cached(),
            Family::A => self.a.cached(),
            Family::B => self.b.cached(),
            Family::C => self.c.cached(),
        }
    }
}

/// 5-adic valuation; `Infinite` is the valuation of 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    /// Whether this valuation is at least `bound` (always true for `Infinite`).
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => bound <= 0 || v >= bound as u64,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// Highest power of 5 dividing `n`; `+inf` for 0.
pub fn pi5(n: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let five = BigInt::from(5);
    let mut v = 0;
    let mut x = n.clone();
    loop {
        let (q, r) = x.div_rem(&five);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        x = q;
        v += 1;
    }
}

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

/// Lower bound on the valuation of an entry of `family` at `(row, col)`.
///
/// - `m(i,j)`: `floor((5j - i - 1)/2)`
/// - `a(2j-1,k)`, `c(2j-1,k)`: `j + floor((5k-5)/2)`
/// - `a(2j,k)`, `c(2j,k)`: `j + floor((5k-3)/2)`
/// - `b(j,k)`: `j + floor((5k-5)/2)`
pub fn valuation_bound(family: Family, row: u32, col: u32) -> i64 {
    let (r, c) = (row as i64, col as i64);
    match family {
        Family::M => floor_half(5 * c - r - 1),
        Family::B => r + floor_half(5 * c - 5),
        Family::A | Family::C if row % 2 == 1 => (r + 1) / 2 + floor_half(5 * c - 5),
        Family::A | Family::C => r / 2 + floor_half(5 * c - 3),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub row: u32,
    pub col: u32,
    pub valuation: Valuation,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub family: Family,
    pub rows: RangeInclusive<u32>,
    pub cols: RangeInclusive<u32>,
    pub checked: usize,
    pub violations: Vec<BoundViolation>,
    /// Entries whose valuation equals the bound exactly.
    pub tight: Vec<(u32, u32)>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every entry in the window against [`valuation_bound`].
pub fn verify_valuation_bounds(
    mats: &mut Matrices,
    family: Family,
    rows: RangeInclusive<u32>,
    cols: RangeInclusive<u32>,
) -> BoundReport {
    let mut report = BoundReport {
        family,
        rows: rows.clone(),
        cols: cols.clone(),
        checked: 0,
        violations: Vec::new(),
        tight: Vec::new(),
    };
    for row in rows {
        for col in cols.clone() {
            let valuation = pi5(&mats.entry(family, row, col));
            let bound = valuation_bound(family, row, col);
            report.checked += 1;
            if !valuation.at_least(bound) {
                report.violations.push(BoundViolation {
                    row,
                    col,
                    valuation,
                    bound,
                });
            } else if bound >= 0 && valuation == Valuation::Finite(bound as u64) {
                report.tight.push((row, col));
            }
        }
    }
    report
}

/// Indices in `1..=i_max x 1..=j_max` where `m(i,j) != 0` although `j > i` or `i > 5j`.
pub fn m_vanishing_violations(mats: &mut Matrices, i_max: u32, j_max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=i_max {
        for j in 1..=j_max {
            if (j > i || i > 5 * j) && !mats.m_entry(i, j).is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}
