use kaxes_core::kgroups::{crosscheck, k_relative, k_relative_expanded};
use kaxes_core::{BaseRing, Evaluation, FinAbGroup, Symbol};
use num_bigint::BigUint;

fn k(q: i64, p: u64, f: u32) -> FinAbGroup {
    k_relative(q, &BaseRing::fq(p, f).unwrap())
        .unwrap()
        .into_group()
        .unwrap()
}

/// `K_{2n}(A, I)` over `F_{p^f}` is `⊕_{d ≤ n, p ∤ d} (Z/p^{s(n,d)})^f`.
fn k_oracle(n: u64, p: u64, f: u32) -> FinAbGroup {
    let mut g = FinAbGroup::zero();
    for d in (1..=n).filter(|d| d % p != 0) {
        let s = (0..).take_while(|&k| p.pow(k) * d <= n).count() as u32;
        g = g.direct_sum(&FinAbGroup::prime_power(p, s).unwrap().power(f as usize));
    }
    g
}

#[test]
fn k_groups_match_the_direct_formula() {
    for (p, f) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1)] {
        for n in 1..=30 {
            assert_eq!(
                k(2 * n as i64, p, f),
                k_oracle(n, p, f),
                "K_{} over F_{p}^{f}",
                2 * n
            );
        }
    }
}

#[test]
fn order_is_p_to_the_n() {
    for p in [2u64, 3, 5] {
        for n in 1..=50u32 {
            assert_eq!(k(2 * n as i64, p, 1).order(), Some(BigUint::from(p).pow(n)));
        }
    }
}

#[test]
fn odd_and_low_degrees_vanish() {
    for p in [2, 3, 5] {
        for q in -5..=25 {
            if q % 2 != 0 || q <= 1 {
                assert!(k(q, p, 1).is_zero(), "K_{q} over F_{p}");
            }
        }
    }
}

#[test]
fn pipelines_agree() {
    for p in [2, 3] {
        for f in [1, 2] {
            for q in 0..=24 {
                assert!(crosscheck(q, p, f).unwrap(), "q={q} p={p} f={f}");
            }
        }
    }
    for q in 0..=14 {
        assert!(crosscheck(q, 5, 1).unwrap());
    }
}

#[test]
fn symbolic_bases() {
    let Evaluation::Symbolic(sum) = k_relative(6, &"sym-q".parse().unwrap()).unwrap() else {
        panic!()
    };
    assert_eq!(
        sum.terms().collect::<Vec<_>>(),
        vec![
            (Symbol::Kaehler { j: 0 }, 1),
            (Symbol::Kaehler { j: 2 }, 1),
            (Symbol::Kaehler { j: 4 }, 1)
        ]
    );
    let Evaluation::Symbolic(sum) = k_relative(4, &"sym-fp:3".parse().unwrap()).unwrap() else {
        panic!()
    };
    assert_eq!(sum.len(), 2);
    let Evaluation::Symbolic(expanded) =
        k_relative_expanded(4, &"sym-fp:3".parse().unwrap()).unwrap()
    else {
        panic!()
    };
    // 𝐖_1Ω^2 = W_1Ω^2 and 𝐖_2Ω^0 = W_1Ω^0 ⊕ W_1Ω^0
    assert_eq!(
        expanded.terms().collect::<Vec<_>>(),
        vec![
            (Symbol::PTypical { s: 1, j: 0 }, 2),
            (Symbol::PTypical { s: 1, j: 2 }, 1)
        ]
    );
}
