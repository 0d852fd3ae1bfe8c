//! Independent recomputations checked against the library, plus worked examples.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use penta5_core::congruence::{
    delta_alpha, pk_table, pk_tables, run_theorem, search, verify_gf_theorem, verify_progression,
    TheoremId, TheoremParams,
};
use penta5_core::dissect::{collapse, dissect, m_oracle, reassemble, verify_h_lemma, HVariant};
use penta5_core::etaq::{binomial_congruence_check, expand_eta, expand_gen_eta, expand_r};
use penta5_core::fixtures;
use penta5_core::matrices::{pi5, Family, Matrices, Valuation};
use penta5_core::qexpr::parse;
use penta5_core::LaurentSeries;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sums `prod_i C(m_i + k - 1, k - 1)` over partitions of `n`, where `m_i` is the multiplicity of part `i`.
fn colored_partitions(k: u64, n: u64) -> BigInt {
    fn go(k: u64, rest: u64, max_part: u64) -> BigInt {
        if rest == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for part in (1..=max_part.min(rest)).rev() {
            for mult in 1..=rest / part {
                let ways = binomial(mult + k - 1, k - 1);
                total += ways * go(k, rest - mult * part, part - 1);
            }
        }
        total
    }
    go(k, n, n)
}

/// `prod_{n >= 0} (1 - q^(a + m n))` below `q^bound` by schoolbook multiplication.
fn product_oracle(a: usize, m: usize, bound: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); bound];
    c[0] = BigInt::one();
    let mut e = a;
    while e < bound {
        let prev = c.clone();
        for i in e..bound {
            c[i] -= &prev[i - e];
        }
        e += m;
    }
    c
}

fn dense(s: &LaurentSeries, bound: i64) -> Vec<BigInt> {
    (0..bound).map(|e| s.coeff_at(e).unwrap()).collect()
}

#[test]
fn pk_matches_brute_force_colored_partitions() {
    for k in 1..=6u32 {
        let t = pk_table(k, 25);
        for n in 0..=25u64 {
            assert_eq!(
                t.get(n).unwrap(),
                &colored_partitions(k as u64, n),
                "k={k} n={n}"
            );
        }
    }
}

#[test]
fn pk_matches_eta_quotient_evaluation() {
    for k in [1u32, 2, 6, 7, 11, 17] {
        let t = pk_table(k, 200);
        let s = parse(&format!("E1^-{k}")).unwrap().evaluate(201);
        assert_eq!(dense(&s, 201), t.coeffs(), "k={k}");
    }
}

#[test]
fn pk_progressions_reassemble() {
    let t = pk_table(7, 249);
    let parts = dissect(&t.to_series(), 5);
    assert_eq!(reassemble(&parts), t.to_series());
    for (r, part) in parts.iter().enumerate() {
        assert_eq!(
            part.collapsed,
            t.progression_series(5, r as u64, 50).unwrap()
        );
    }
}

#[test]
fn eta_expansions_match_products() {
    for j in [1u32, 2, 5, 25] {
        let s = expand_eta(j, 120);
        assert_eq!(
            dense(&s, 120),
            product_oracle(j as usize, j as usize, 120),
            "E{j}"
        );
    }
    for (a, m) in [(1u32, 5u32), (2, 5), (3, 5), (4, 5), (3, 7)] {
        let s = expand_gen_eta(a, m, 120);
        assert_eq!(
            dense(&s, 120),
            product_oracle(a as usize, m as usize, 120),
            "({a};{m})"
        );
    }
}

#[test]
fn rogers_ramanujan_quotient_matches_products() {
    let n = 150;
    let num = LaurentSeries::new(0, product_oracle(1, 5, n), n as i64).mul(&LaurentSeries::new(
        0,
        product_oracle(4, 5, n),
        n as i64,
    ));
    let den = LaurentSeries::new(0, product_oracle(2, 5, n), n as i64).mul(&LaurentSeries::new(
        0,
        product_oracle(3, 5, n),
        n as i64,
    ));
    let r = num.mul(&den.inverse().unwrap());
    assert_eq!(expand_r(1, n as i64), r);
    assert_eq!(expand_r(5, n as i64), r.substitute(5).truncate(n as i64));
}

#[test]
fn binomial_lemma() {
    for p in [2u32, 3, 5] {
        for alpha in 1..=2 {
            assert!(
                binomial_congruence_check(p, alpha, 100),
                "p={p} alpha={alpha}"
            );
        }
    }
}

#[test]
fn eta_worked_examples() {
    assert_eq!(
        dense(&expand_eta(1, 8), 8),
        ints(&[1, -1, -1, 0, 0, 1, 0, 1])
    );
    let five = parse("5*E5^5/E1^6").unwrap().evaluate(5);
    assert_eq!(dense(&five, 5), ints(&[5, 30, 135, 490, 1575]));
    let e1 = expand_eta(1, 8).reduce_mod(&BigInt::from(5));
    assert_eq!(dense(&e1, 8), ints(&[1, 4, 4, 0, 0, 1, 0, 1]));
}

#[test]
fn m_oracle_agrees_with_recurrence() {
    let mut mats = Matrices::new();
    for i in 1..=12u32 {
        let row = m_oracle(i, i, 5 * i as i64 + 6).unwrap();
        let expected: Vec<BigInt> = (1..=i).map(|j| mats.m_entry(i, j)).collect();
        assert_eq!(row, expected, "row {i}");
    }
}

#[test]
fn h_lemma_instances() {
    let mut mats = Matrices::new();
    for i in 1..=2 {
        for v in [HVariant::H1, HVariant::H2] {
            let r = verify_h_lemma(i, v, 120, &mut mats);
            assert!(r.equal, "i={i} {v:?}: {:?}", r.mismatch);
        }
    }
}

#[test]
fn congruence_worked_examples() {
    assert!(verify_progression(1, 5, 4, 1, 500).passed());
    for b in 2..=4 {
        assert!(verify_progression(2, 5, b, 1, 500).passed(), "B={b}");
    }
    let k17 = verify_progression(17, 5, 3, 2, 300);
    assert!(k17.passed());
    assert!(k17.min_valuation.at_least(2));
    assert_eq!(delta_alpha(3), BigInt::from(99));
}

#[test]
fn search_worked_examples() {
    let two: Vec<u64> = search(2..=2, 1, 5, 400).iter().map(|h| h.residue).collect();
    assert_eq!(two, [2, 3, 4]);
    assert!(search(6..=6, 1, 5, 400).iter().any(|h| h.residue == 4));
    // three colors: no residue class survives
    assert!(search(3..=3, 1, 5, 400).is_empty());
}

#[test]
fn small_theorem_runs_pass() {
    let params = TheoremParams {
        alpha_max: 2,
        r_max: 1,
        count: Some(30),
        ..TheoremParams::default()
    };
    for id in [
        TheoremId::Thm1_1,
        TheoremId::Watson,
        TheoremId::Mod25,
        TheoremId::Corollary,
    ] {
        for r in run_theorem(id, &params).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.label, r.counterexample);
        }
    }
}

#[test]
fn gf_theorems_first_row() {
    let mut mats = Matrices::new();
    for id in [TheoremId::Gf4_1, TheoremId::Gf4_4, TheoremId::Gf4_6] {
        for (g, r) in verify_gf_theorem(id, 1, 100, &mut mats).unwrap() {
            assert!(r.equal, "{}: {:?}", g.label, r.mismatch);
            assert_eq!(r.achieved_truncation, 100);
        }
    }
}

#[test]
fn gf_first_rows_are_the_explicit_displays() {
    // b(1, l) and a(1, l) are the coefficients of the explicit p_-6 and p_-2 formulas
    let mut mats = Matrices::new();
    let b: Vec<BigInt> = (1..=5).map(|l| mats.b_entry(1, l)).collect();
    assert_eq!(b, ints(&[315, 32500, 984375, 11718750, 48828125]));
    let a: Vec<BigInt> = (1..=3).map(|l| mats.a_entry(1, l)).collect();
    assert_eq!(a, ints(&[10, 125, 0]));
    assert_eq!(pi5(&BigInt::zero()), Valuation::Infinite);
    assert_eq!(mats.entry(Family::C, 1, 1), BigInt::from(140));
}

#[test]
fn chained_tables_extend_colors() {
    let tables = pk_tables(&[2, 6, 7], 100);
    assert_eq!(tables[&7], pk_table(7, 100));
    assert_eq!(tables[&6].with_more_colors(1), tables[&7]);
}

#[test]
fn collapse_of_pk_matches_progression() {
    let t = pk_table(2, 200);
    assert_eq!(
        collapse(&t.to_series(), 5, 3),
        t.progression_series(5, 3, 40).unwrap()
    );
}

#[test]
fn fixtures_to_moderate_bound() {
    for f in fixtures::IDENTITIES {
        let r = f.verify(120).unwrap();
        assert!(r.equal, "{}: {:?}", f.name, r.mismatch);
        assert_eq!(r.achieved_truncation, 120);
    }
}
