//! Relative K-groups `K_q(A, I)` of `A = k[x,y]/(xy)`, `I = (x,y)`:
//! `K_q(A, I) ≅ ⊕_{m ≥ 1} 𝐖_mΩ_k^{q-2m}` for regular `F_p`-algebras `k`,
//! and `⊕_{m ≥ 1} Ω_k^{q-2m}` for regular `Q`-algebras.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::require_prime;
use crate::drw::{evaluate, s_index, BaseRing, Evaluation, GradedSum, Symbol};
use crate::error::{Error, Result};
use crate::trtc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KQuery {
    pub q: i64,
    pub base: BaseRing,
}

impl KQuery {
    pub fn new(q: i64, base: BaseRing) -> Self {
        KQuery { q, base }
    }

    pub fn evaluate(&self) -> Result<Evaluation> {
        k_relative(self.q, &self.base)
    }
}

/// `⊕_{1 ≤ m ≤ q/2} 𝐖_mΩ^{q-2m}`, unevaluated.
pub fn k_relative_symbolic(q: i64) -> GradedSum {
    (1..=q.max(0) / 2)
        .map(|m| {
            (
                Symbol::Big {
                    m: m as u64,
                    j: q - 2 * m,
                },
                1,
            )
        })
        .collect()
}

/// `⊕_{1 ≤ m ≤ q/2} Ω^{q-2m}`, the answer for regular `Q`-algebras.
pub fn k_relative_rational(q: i64) -> GradedSum {
    (1..=q.max(0) / 2)
        .map(|m| (Symbol::Kaehler { j: q - 2 * m }, 1))
        .collect()
}

/// `K_q(A, I)`. Over `F_q` this is a finite p-group; over a symbolic regular
/// `F_p`-algebra the big symbols are returned undecomposed, and over a
/// regular `Q`-algebra the Kähler-form formula is returned.
pub fn k_relative(q: i64, base: &BaseRing) -> Result<Evaluation> {
    match *base {
        BaseRing::SymbolicRegularQ => Ok(Evaluation::Symbolic(k_relative_rational(q))),
        BaseRing::SymbolicRegularFp { .. } => evaluate(&k_relative_symbolic(q), base),
        BaseRing::Fq { p, .. } => {
            let value = evaluate(&k_relative_symbolic(q), base)?;
            let g = value.group().expect("finite fields evaluate numerically");
            if !g.is_p_primary(p) {
                return Err(Error::internal(format!(
                    "K_{q} = {g} is not p-primary torsion"
                )));
            }
            Ok(value)
        }
    }
}

/// [`k_relative`] with big symbols expanded into p-typical ones.
pub fn k_relative_expanded(q: i64, base: &BaseRing) -> Result<Evaluation> {
    match *base {
        BaseRing::SymbolicRegularFp { p } => {
            Ok(Evaluation::Symbolic(k_relative_symbolic(q).expand_big(p)?))
        }
        _ => k_relative(q, base),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentCheck {
    pub n: u64,
    pub p: u64,
    /// `p^s` with `p^{s-1} ≤ n < p^s`
    pub claimed: u64,
    /// exponent of `K_{2n}(A, I)` over `F_p`
    pub computed: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn exponent_check(n: u64, p: u64) -> Result<ExponentCheck> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let s = s_index(n, 1, p)?;
    let claimed = p
        .checked_pow(s)
        .ok_or_else(|| Error::invalid("claimed exponent overflows"))?;
    let q = i64::try_from(2 * n).map_err(|_| Error::invalid("n too large"))?;
    let group = k_relative(q, &BaseRing::prime_field(p)?)?.into_group()?;
    let computed = group
        .exponent()
        .as_ref()
        .and_then(BigUint::to_u64)
        .ok_or_else(|| Error::internal("exponent of a finite group must be finite"))?;
    Ok(ExponentCheck {
        n,
        p,
        claimed,
        computed,
        matches: claimed == computed,
    })
}

/// Whether `K_q(A, I)` and `TC_q(A, B, I; p)` agree over `F_{p^f}`.
pub fn crosscheck(q: i64, p: u64, f: u32) -> Result<bool> {
    let base = BaseRing::fq(p, f)?;
    let k = k_relative(q, &base)?.into_group()?;
    let tc = trtc::tc(q, p, &base)?.into_group()?;
    Ok(k == tc)
}
