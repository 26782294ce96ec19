//! The acceptance criteria, one line each. Run with
//! `cargo test -p kaxes --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::Instant;

use kaxes_core::drw::{big_decompose, evaluate, Symbol};
use kaxes_core::kgroups::k_relative;
use kaxes_core::nerve::{
    component_homology, enumerate_cyclic_words, hochschild_homology, CyclicWord, PointedMonoid,
};
use kaxes_core::trtc::{tc, tr_birelative, tr_graded, Representation};
use kaxes_core::witt::{group_structure, IntWitt, WittRing};
use kaxes_core::{BaseRing, FinAbGroup};
use num_bigint::BigInt;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn cli_group(args: &[&str]) -> Result<FinAbGroup, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kaxes"))
        .args(args)
        .output()
        .map_err(fail)?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    serde_json::from_slice(&out.stdout).map_err(fail)
}

fn cyclic(n: u64) -> FinAbGroup {
    FinAbGroup::cyclic(n).unwrap()
}

fn k_group(q: i64, base: &BaseRing) -> Result<FinAbGroup, String> {
    k_relative(q, base)
        .and_then(|e| e.into_group())
        .map_err(fail)
}

fn k2() -> Check {
    for p in [2u64, 3, 5] {
        let g = cli_group(&["kgroup", "--q", "2", "--base", &format!("fq:{p}:1")])?;
        ensure(g == cyclic(p), || format!("K_2 over F_{p} = {g}"))?;
    }
    Ok(())
}

fn k4() -> Check {
    for (p, want) in [
        (2u64, cyclic(4)),
        (3, cyclic(3).power(2)),
        (5, cyclic(5).power(2)),
    ] {
        let g = cli_group(&["kgroup", "--q", "4", "--base", &format!("fq:{p}:1")])?;
        ensure(g == want, || {
            format!("K_4 over F_{p} = {g}, expected {want}")
        })?;
    }
    Ok(())
}

fn exponent() -> Check {
    for p in [2u64, 3, 5] {
        let base = BaseRing::prime_field(p).map_err(fail)?;
        for n in 1..=100u64 {
            let mut claimed = p;
            while claimed <= n {
                claimed *= p;
            }
            let g = k_group(2 * n as i64, &base)?;
            let computed = g.exponent().ok_or("infinite exponent")?;
            ensure(computed == claimed.into(), || {
                format!(
                    "K_{} over F_{p}: exponent {computed}, claimed {claimed}",
                    2 * n
                )
            })?;
        }
    }
    Ok(())
}

fn crosscheck() -> Check {
    for p in [2u64, 3] {
        for f in [1u32, 2] {
            let base = BaseRing::fq(p, f).map_err(fail)?;
            for q in 0..=24 {
                let k = k_group(q, &base)?;
                let t = tc(q, p, &base).and_then(|e| e.into_group()).map_err(fail)?;
                ensure(k == t, || {
                    format!("q={q} over F_{p}^{f}: K = {k}, TC = {t}")
                })?;
            }
        }
    }
    Ok(())
}

fn stabilization() -> Check {
    for p in [2u64, 3] {
        let base = BaseRing::prime_field(p).map_err(fail)?;
        let ev = |q, i, n| {
            tr_graded(q, &Representation::lambda(i), n, p)
                .and_then(|s| evaluate(&s, &base))
                .and_then(|e| e.into_group())
                .map_err(fail)
        };
        for d in (1..=5u64).filter(|d| d % p != 0) {
            for r in 2..=5u32 {
                let top = p.pow(r - 1) * d;
                for q in (0..=20i64).filter(|&q| q < 2 * top as i64) {
                    let (here, below) = (ev(q, top, r)?, ev(q, top / p, r - 1)?);
                    ensure(here == below, || {
                        format!("p={p} d={d} r={r} q={q}: {here} vs {below}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn predicted(word: &CyclicWord) -> Vec<FinAbGroup> {
    let m = word.len();
    let alternating = m.is_multiple_of(2) && word.representative() == "xy".repeat(m / 2);
    (0..=m)
        .map(|n| {
            if alternating && n + 1 >= m {
                FinAbGroup::free(1)
            } else {
                FinAbGroup::zero()
            }
        })
        .collect()
}

fn nerve() -> Check {
    let mut checked = 0;
    for m in 1..=8 {
        for w in enumerate_cyclic_words(m)
            .map_err(fail)?
            .into_iter()
            .filter(|w| w.period() >= 2)
        {
            let h = component_homology(&w).map_err(fail)?;
            ensure(h == predicted(&w), || format!("component {w}: {h:?}"))?;
            checked += 1;
        }
    }
    // 93 necklaces of length 1..=8, less x^m and y^m for each length
    ensure(checked == 77, || {
        format!("checked {checked} components, expected 77")
    })
}

fn hochschild() -> Check {
    let n = 4;
    let hh = hochschild_homology(&PointedMonoid::pi2(n as u32), n, Some(n as u32)).map_err(fail)?;
    let mut sum = vec![FinAbGroup::zero(); n + 1];
    let mut words = vec![CyclicWord::empty()];
    for m in 1..=n {
        words.extend(enumerate_cyclic_words(m).map_err(fail)?);
    }
    for w in &words {
        for (deg, g) in component_homology(w)
            .map_err(fail)?
            .into_iter()
            .enumerate()
            .take(n + 1)
        {
            sum[deg] = sum[deg].direct_sum(&g);
        }
    }
    ensure(hh == sum, || {
        format!("HH = {hh:?}, components give {sum:?}")
    })
}

fn witt() -> Check {
    for (p, f, s) in [
        (2u64, 1u32, 1usize),
        (2, 1, 2),
        (2, 1, 3),
        (3, 1, 1),
        (3, 1, 2),
        (2, 2, 1),
        (2, 2, 2),
    ] {
        let g = group_structure(p, f, s).map_err(fail)?;
        let want = FinAbGroup::prime_power(p, s as u32)
            .unwrap()
            .power(f as usize);
        ensure(g == want, || format!("W_{s}(F_{p}^{f}) = {g}"))?;
    }
    // ghost map on integral Witt vectors of length 3
    for p in [2u64, 3, 5] {
        let ghost = |a: &[i64]| -> Vec<BigInt> {
            (0..3)
                .map(|i| {
                    (0..=i)
                        .map(|j| {
                            BigInt::from(p).pow(j as u32)
                                * BigInt::from(a[j]).pow((p as u32).pow((i - j) as u32))
                        })
                        .sum()
                })
                .collect()
        };
        let vectors: Vec<[i64; 3]> = (0..125)
            .map(|k| [k % 5 - 2, (k / 5) % 5 - 2, k / 25 - 2])
            .collect();
        for a in &vectors {
            for b in vectors.iter().step_by(7) {
                let (wa, wb) = (
                    IntWitt::from_i64(p, a).map_err(fail)?,
                    IntWitt::from_i64(p, b).map_err(fail)?,
                );
                let (ga, gb) = (ghost(a), ghost(b));
                let sum: Vec<BigInt> = ga.iter().zip(&gb).map(|(x, y)| x + y).collect();
                let prod: Vec<BigInt> = ga.iter().zip(&gb).map(|(x, y)| x * y).collect();
                ensure(wa.add(&wb).map_err(fail)?.ghost() == sum, || {
                    format!("ghost(a + b) for {a:?}, {b:?}")
                })?;
                ensure(wa.mul(&wb).map_err(fail)?.ghost() == prod, || {
                    format!("ghost(ab) for {a:?}, {b:?}")
                })?;
            }
        }
    }
    // FV = p
    for (p, f, s) in [(2u64, 1u32, 3usize), (3, 1, 3), (2, 2, 2), (5, 1, 2)] {
        let ring = WittRing::new(p, f, s).map_err(fail)?;
        let short = ring.truncated().map_err(fail)?;
        for a in ring.elements() {
            let fv = ring
                .verschiebung(&a)
                .and_then(|v| ring.frobenius(&v))
                .map_err(fail)?;
            let pa = ring
                .restrict(&a)
                .and_then(|r| short.scalar_mul(&r, p))
                .map_err(fail)?;
            ensure(fv == pa, || format!("FV != p in W_{s}(F_{p}^{f})"))?;
        }
    }
    Ok(())
}

fn checksum() -> Check {
    for p in [2u64, 3, 5] {
        for m in 1..=200u64 {
            let mut total = 0;
            for (d, sym) in big_decompose(m, 0, p).map_err(fail)? {
                let Symbol::PTypical { s, .. } = sym else {
                    return Err(format!("unexpected {sym}"));
                };
                // independent bracket check p^{s-1} d ≤ m < p^s d
                let s32 = s as u32;
                ensure(p.pow(s32 - 1) * d <= m && m < p.pow(s32) * d, || {
                    format!("s({m},{d}) = {s} for p={p}")
                })?;
                total += s;
            }
            ensure(total == m as i64, || format!("m={m} p={p}: Σ s = {total}"))?;
        }
    }
    Ok(())
}

fn vanishing() -> Check {
    for (p, f) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2)] {
        let base = BaseRing::fq(p, f).map_err(fail)?;
        for q in -3..=25i64 {
            let k = k_group(q, &base)?;
            if q <= 1 || q % 2 != 0 {
                ensure(k.is_zero(), || format!("K_{q} over {base} = {k}"))?;
            }
            let mut groups = vec![
                k,
                tc(q, p, &base).and_then(|e| e.into_group()).map_err(fail)?,
            ];
            for n in 1..=3 {
                groups.push(
                    tr_birelative(q, n, p, &base)
                        .and_then(|e| e.into_group())
                        .map_err(fail)?,
                );
            }
            for g in groups {
                ensure(g.is_p_primary(p) && g.free_rank() == 0, || {
                    format!("degree {q} over {base}: {g}")
                })?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("K_2 = Z/p over F_p, p in {2,3,5}", k2),
        ("K_4 case split over F_2, F_3, F_5", k4),
        ("exponent of K_2n over F_p is p^s, n <= 100", exponent),
        ("K and TC pipelines agree, q <= 24", crosscheck),
        ("group-level stabilization of TR", stabilization),
        (
            "nerve components match predicted homology, length <= 8",
            nerve,
        ),
        ("Hochschild oracle at N = 4", hochschild),
        ("Witt structure, ghost and FV = p suites", witt),
        ("big Witt checksum, m <= 200", checksum),
        ("vanishing and p-primary torsion", vanishing),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {:>2}  {name}  ({ms} ms)", i + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}  ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
