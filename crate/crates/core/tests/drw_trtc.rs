use kaxes_core::drw::{big_decompose, evaluate, s_index, BaseRing, Symbol};
use kaxes_core::trtc::{ell, stabilization_index, tc, tr_graded, Representation};
use kaxes_core::FinAbGroup;
use proptest::prelude::*;

/// `s(m, d)` = number of `k ≥ 0` with `p^k d ≤ m`.
fn s_oracle(m: u64, d: u64, p: u64) -> u32 {
    let mut k = 0;
    let mut x = d;
    while x <= m {
        k += 1;
        x *= p;
    }
    k
}

/// Evaluated `TR^n_{q-λ_i}(F_p; p)` straight from the ℓ-windows: only the
/// degree-zero term `m = q/2` survives, and its length is `n - r` for the
/// least `r` with `⌊i/p^r⌋ ≤ m`.
fn tr_oracle(q: i64, i: u64, n: u32, p: u64) -> FinAbGroup {
    if q < 0 || q % 2 != 0 {
        return FinAbGroup::zero();
    }
    let m = (q / 2) as u64;
    let r = (0..).find(|&r| i / p.pow(r) <= m).unwrap();
    if r >= n {
        FinAbGroup::zero()
    } else {
        FinAbGroup::prime_power(p, n - r).unwrap()
    }
}

fn eval(sum: &kaxes_core::GradedSum, p: u64) -> FinAbGroup {
    evaluate(sum, &BaseRing::prime_field(p).unwrap())
        .unwrap()
        .into_group()
        .unwrap()
}

#[test]
fn big_witt_checksum() {
    for p in [2, 3, 5] {
        for m in 1..=200 {
            let parts = big_decompose(m, 0, p).unwrap();
            let total: i64 = parts
                .iter()
                .map(|(_, s)| match s {
                    Symbol::PTypical { s, .. } => *s,
                    _ => unreachable!(),
                })
                .sum();
            assert_eq!(total, m as i64, "m={m} p={p}");
            for (d, sym) in parts {
                assert_eq!(
                    sym,
                    Symbol::PTypical {
                        s: s_oracle(m, d, p) as i64,
                        j: 0
                    }
                );
            }
        }
    }
}

#[test]
fn s_index_bracket() {
    for p in [2u64, 3, 5, 7] {
        for m in 1..=300u64 {
            for d in (1..=m).filter(|d| d % p != 0) {
                let s = s_index(m, d, p).unwrap();
                assert!(p.pow(s - 1) * d <= m && m < p.pow(s) * d);
            }
        }
    }
}

#[test]
fn ell_of_lambda_is_floor() {
    for p in [2u64, 3, 5] {
        for i in 0..=1000u64 {
            let lam = Representation::lambda(i);
            for r in 0..6 {
                assert_eq!(ell(&lam, r, p), i / p.pow(r));
            }
        }
    }
}

#[test]
fn tr_matches_window_oracle() {
    for p in [2u64, 3, 5] {
        for i in 0..=30 {
            let lam = Representation::lambda(i);
            for n in 1..=4 {
                for q in -2..=30 {
                    assert_eq!(
                        eval(&tr_graded(q, &lam, n, p).unwrap(), p),
                        tr_oracle(q, i, n, p),
                        "q={q} i={i} n={n} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn stabilization_for_all_small_parameters() {
    for p in [2u64, 3] {
        for d in (1..=7u64).filter(|d| d % p != 0) {
            for r in 2..=5u32 {
                let top = p.pow(r - 1) * d;
                for q in 0..=30i64 {
                    if q < 2 * top as i64 {
                        let here = tr_graded(q, &Representation::lambda(top), r, p).unwrap();
                        let below =
                            tr_graded(q, &Representation::lambda(top / p), r - 1, p).unwrap();
                        assert_eq!(eval(&here, p), eval(&below, p), "p={p} d={d} r={r} q={q}");
                    }
                }
            }
        }
    }
}

#[test]
fn stabilization_index_is_least() {
    for p in [2u64, 3, 5] {
        for d in 1..=10 {
            for q in 0..=60 {
                let r = stabilization_index(q, d, p).unwrap();
                assert!(q < 2 * (p.pow(r - 1) * d) as i64);
                if r > 1 {
                    assert!(q >= 2 * (p.pow(r - 2) * d) as i64);
                }
            }
        }
    }
}

#[test]
fn tc_vanishes_in_odd_and_low_degrees() {
    for p in [2, 3, 5] {
        let base = BaseRing::prime_field(p).unwrap();
        for q in (-3..=25).filter(|q| q % 2 != 0 || *q <= 1) {
            assert!(tc(q, p, &base).unwrap().into_group().unwrap().is_zero());
        }
    }
}

proptest! {
    #[test]
    fn tr_graded_terms_have_valid_indices(
        weights in prop::collection::vec(1u64..30, 0..8),
        q in -4i64..40,
        n in 1u32..5,
        p in prop::sample::select(vec![2u64, 3, 5]),
    ) {
        let lam = Representation::new(weights).unwrap();
        for (sym, _) in tr_graded(q, &lam, n, p).unwrap().terms() {
            match sym {
                Symbol::PTypical { s, j } => {
                    prop_assert!(s >= 1 && s <= n as i64);
                    prop_assert!(j >= 0 && j <= q);
                }
                _ => prop_assert!(false),
            }
        }
    }
}
