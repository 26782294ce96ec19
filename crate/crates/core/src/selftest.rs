//! The invariant suite behind `kaxes selftest`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::abelian::FinAbGroup;
use crate::drw::{big_decompose_with, evaluate, s_index, BaseRing, Symbol};
use crate::error::Result;
use crate::kgroups::{crosscheck, exponent_check, k_relative};
use crate::nerve::{
    component_complex, enumerate_cyclic_words, hochschild_homology, necklace_count,
    predicted_homology, wedge_decomposition_check, CyclicWord, PointedMonoid,
};
use crate::trtc::{ell, tc, tr_birelative, tr_graded, Representation};
use crate::witt::{group_structure, IntWitt, WittRing, WittVector};

/// Ranges swept by the suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub exponent_nmax: u64,
    pub crosscheck_qmax: i64,
    pub checksum_mmax: u64,
    pub nerve_maxlen: usize,
    pub hochschild_n: usize,
    pub vanishing_qmax: i64,
    pub stabilization_rmax: u32,
}

impl Limits {
    pub fn full() -> Self {
        Limits {
            exponent_nmax: 100,
            crosscheck_qmax: 24,
            checksum_mmax: 200,
            nerve_maxlen: 8,
            hochschild_n: 4,
            vanishing_qmax: 25,
            stabilization_rmax: 5,
        }
    }

    pub fn quick() -> Self {
        Limits {
            exponent_nmax: 20,
            crosscheck_qmax: 10,
            checksum_mmax: 40,
            nerve_maxlen: 5,
            hochschild_n: 3,
            vanishing_qmax: 9,
            stabilization_rmax: 3,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::full()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_outcome(name: &str, outcome: Result<Option<String>>) -> Self {
        let (passed, detail) = match outcome {
            Ok(None) => (true, "ok".to_string()),
            Ok(Some(failure)) => (false, failure),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub limits: Limits,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `None` on success, otherwise a description of the first failure.
type Outcome = Result<Option<String>>;

fn fp(p: u64) -> Result<BaseRing> {
    BaseRing::prime_field(p)
}

fn k_group(q: i64, base: &BaseRing) -> Result<FinAbGroup> {
    k_relative(q, base)?.into_group()
}

pub fn check_k2() -> Outcome {
    for p in [2, 3, 5] {
        let g = k_group(2, &fp(p)?)?;
        if g != FinAbGroup::cyclic(p)? {
            return Ok(Some(format!("K_2 over F_{p} is {g}")));
        }
    }
    Ok(None)
}

pub fn check_k4() -> Outcome {
    let expected = [
        (2, FinAbGroup::cyclic(4)?),
        (3, FinAbGroup::cyclic(3)?.power(2)),
        (5, FinAbGroup::cyclic(5)?.power(2)),
    ];
    for (p, want) in expected {
        let g = k_group(4, &fp(p)?)?;
        if g != want {
            return Ok(Some(format!("K_4 over F_{p} is {g}, expected {want}")));
        }
    }
    Ok(None)
}

pub fn check_exponents(nmax: u64) -> Outcome {
    for p in [2, 3, 5] {
        for n in 1..=nmax {
            let c = exponent_check(n, p)?;
            if !c.matches {
                return Ok(Some(format!(
                    "K_{} over F_{p}: exponent {} != {}",
                    2 * n,
                    c.computed,
                    c.claimed
                )));
            }
        }
    }
    Ok(None)
}

pub fn check_crosscheck(qmax: i64) -> Outcome {
    for p in [2, 3] {
        for f in [1, 2] {
            for q in 0..=qmax {
                if !crosscheck(q, p, f)? {
                    return Ok(Some(format!("K_{q} and TC_{q} differ over F_{{{p}^{f}}}")));
                }
            }
        }
    }
    Ok(None)
}

/// Group-level stabilization: the level-`r` term agrees with its
/// predecessor under restriction whenever `q < 2 p^{r-1} d`.
pub fn check_stabilization(rmax: u32) -> Outcome {
    for p in [2, 3] {
        let base = fp(p)?;
        for d in (1..=5u64).filter(|d| d % p != 0) {
            for r in 2..=rmax {
                let top = p.pow(r - 1) * d;
                for q in 0..=20i64 {
                    if q >= 2 * top as i64 {
                        continue;
                    }
                    let here = evaluate(&tr_graded(q, &Representation::lambda(top), r, p)?, &base)?
                        .into_group()?;
                    let below = evaluate(
                        &tr_graded(q, &Representation::lambda(top / p), r - 1, p)?,
                        &base,
                    )?
                    .into_group()?;
                    if here != below {
                        return Ok(Some(format!("p={p} d={d} r={r} q={q}: {here} vs {below}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn check_nerve(maxlen: usize) -> Outcome {
    for m in 1..=maxlen {
        let words = enumerate_cyclic_words(m)?;
        if words.len() as u64 != necklace_count(m as u32) {
            return Ok(Some(format!(
                "{} necklaces of length {m}, expected {}",
                words.len(),
                necklace_count(m as u32)
            )));
        }
        for w in words.iter().filter(|w| w.period() >= 2) {
            let c = component_complex(w)?;
            c.check_boundary_squared()?;
            let h = c.homology()?;
            let want = predicted_homology(w)?;
            if h != want {
                return Ok(Some(format!(
                    "component {w}: homology {h:?} differs from prediction"
                )));
            }
        }
    }
    Ok(None)
}

pub fn check_hochschild(n: usize) -> Outcome {
    let hh = hochschild_homology(&PointedMonoid::pi2(n as u32), n, Some(n as u32))?;
    let mut sum = vec![FinAbGroup::zero(); n + 1];
    let mut words = vec![CyclicWord::empty()];
    for m in 1..=n {
        words.extend(enumerate_cyclic_words(m)?);
    }
    for w in &words {
        for (deg, g) in component_complex(w)?
            .homology()?
            .into_iter()
            .enumerate()
            .take(n + 1)
        {
            sum[deg] = sum[deg].direct_sum(&g);
        }
    }
    if hh != sum {
        return Ok(Some(format!(
            "Hochschild homology {hh:?} differs from the component sum {sum:?}"
        )));
    }
    if !wedge_decomposition_check(n)? {
        return Ok(Some(
            "simplex counts do not split over cyclical words".into(),
        ));
    }
    Ok(None)
}

pub fn check_witt() -> Outcome {
    let cases = [
        (2, 1, 1),
        (2, 1, 2),
        (2, 1, 3),
        (3, 1, 1),
        (3, 1, 2),
        (2, 2, 1),
        (2, 2, 2),
    ];
    for (p, f, s) in cases {
        let g = group_structure(p, f, s)?;
        let want = FinAbGroup::prime_power(p, s as u32)?.power(f as usize);
        if g != want {
            return Ok(Some(format!(
                "W_{s}(F_{{{p}^{f}}}) is {g}, expected {want}"
            )));
        }
    }
    for (p, s) in [(2, 3), (3, 2)] {
        let ring = WittRing::prime_field(p, s)?;
        let short = ring.truncated()?;
        let elems: Vec<_> = ring.elements().collect();
        for a in &elems {
            let fv = ring.frobenius(&ring.verschiebung(a)?)?;
            if fv != short.scalar_mul(&ring.restrict(a)?, p)? {
                return Ok(Some(format!("FV != p on W_{s}(F_{p})")));
            }
            for b in &elems {
                if !ghost_congruent(&ring, a, b)? {
                    return Ok(Some(format!(
                        "ghost map is not a ring map mod p on W_{s}(F_{p})"
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// The `i`-th ghost component of a coordinatewise lift is determined
/// mod `p^{i+1}` by the residues, so ghost additivity and multiplicativity
/// must hold in `Z/p^{i+1}`.
fn ghost_congruent(ring: &WittRing, a: &WittVector, b: &WittVector) -> Result<bool> {
    let ghost = |v: &WittVector| IntWitt::lift(ring, v).map(|w| w.ghost());
    let (ga, gb) = (ghost(a)?, ghost(b)?);
    let gs = ghost(&ring.add(a, b)?)?;
    let gp = ghost(&ring.mul(a, b)?)?;
    let p = BigInt::from(ring.prime());
    let mut modulus = p.clone();
    for i in 0..ring.length() {
        if !((&ga[i] + &gb[i] - &gs[i]) % &modulus).is_zero()
            || !((&ga[i] * &gb[i] - &gp[i]) % &modulus).is_zero()
        {
            return Ok(false);
        }
        modulus *= &p;
    }
    Ok(true)
}

/// `Σ_d s(m, d) = m` for the decomposition of `𝐖_mΩ^0`, using `index` as
/// the rule for `s(m, d)`.
pub fn check_checksum_with(
    mmax: u64,
    index: impl Fn(u64, u64, u64) -> Result<u32> + Copy,
) -> Outcome {
    for p in [2, 3, 5] {
        for m in 1..=mmax {
            let total: i64 = big_decompose_with(m, 0, p, index)?
                .into_iter()
                .map(|(_, sym)| match sym {
                    Symbol::PTypical { s, .. } => s,
                    _ => 0,
                })
                .sum();
            if total != m as i64 {
                return Ok(Some(format!("m={m} p={p}: Σ s = {total}")));
            }
        }
    }
    Ok(None)
}

pub fn check_checksum(mmax: u64) -> Outcome {
    check_checksum_with(mmax, s_index)
}

pub fn check_vanishing(qmax: i64) -> Outcome {
    for (p, f) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)] {
        let base = BaseRing::fq(p, f)?;
        for q in -2..=qmax {
            let k = k_group(q, &base)?;
            if (q <= 1 || q % 2 == 1) && !k.is_zero() {
                return Ok(Some(format!("K_{q} over {base} is {k}")));
            }
            let groups = [
                k,
                tc(q, p, &base)?.into_group()?,
                tr_birelative(q, 1, p, &base)?.into_group()?,
                tr_birelative(q, 2, p, &base)?.into_group()?,
            ];
            if let Some(g) = groups
                .iter()
                .find(|g| !g.is_p_primary(p) || g.free_rank() != 0)
            {
                return Ok(Some(format!(
                    "degree {q} over {base}: {g} is not a finite p-group"
                )));
            }
        }
    }
    Ok(None)
}

pub fn check_ell_formula() -> Outcome {
    for p in [2, 3, 5] {
        for i in 0..=200u64 {
            let lam = Representation::lambda(i);
            for r in 0..5 {
                if ell(&lam, r, p) != i / p.pow(r) {
                    return Ok(Some(format!("ℓ_{r}(λ_{i}) wrong for p={p}")));
                }
            }
        }
    }
    Ok(None)
}

pub fn run(limits: &Limits) -> Report {
    let checks = vec![
        CheckResult::from_outcome("k2", check_k2()),
        CheckResult::from_outcome("k4-case-split", check_k4()),
        CheckResult::from_outcome("exponent", check_exponents(limits.exponent_nmax)),
        CheckResult::from_outcome(
            "pipeline-crosscheck",
            check_crosscheck(limits.crosscheck_qmax),
        ),
        CheckResult::from_outcome(
            "stabilization",
            check_stabilization(limits.stabilization_rmax),
        ),
        CheckResult::from_outcome("nerve-components", check_nerve(limits.nerve_maxlen)),
        CheckResult::from_outcome("hochschild-oracle", check_hochschild(limits.hochschild_n)),
        CheckResult::from_outcome("witt-structure", check_witt()),
        CheckResult::from_outcome("big-witt-checksum", check_checksum(limits.checksum_mmax)),
        CheckResult::from_outcome("vanishing", check_vanishing(limits.vanishing_qmax)),
        CheckResult::from_outcome("ell-sequence", check_ell_formula()),
    ];
    Report {
        limits: limits.clone(),
        checks,
    }
}
