//! Equivariant grading of TR groups and the resulting formulas for the
//! bi-relative TR, TF and TC groups of the coordinate axes.
//!
//! Only the group-level consequences are computed: the restriction and
//! Frobenius maps never appear as maps, and the limit over restrictions is
//! represented by the level at which the system becomes constant.

use std::fmt;

use crate::arith::require_prime;
use crate::drw::{evaluate, BaseRing, Evaluation, GradedSum, Symbol};
use crate::error::{Error, Result};

/// A complex `T`-representation `⊕ C(t)`, stored as its multiset of
/// weights `t ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    weights: Vec<u64>,
}

impl Representation {
    pub fn new(mut weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::invalid("representation weights must be positive"));
        }
        weights.sort_unstable();
        Ok(Representation { weights })
    }

    /// `λ_i = C(1) ⊕ … ⊕ C(i)`.
    pub fn lambda(i: u64) -> Self {
        Representation {
            weights: (1..=i).collect(),
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn complex_dim(&self) -> u64 {
        self.weights.len() as u64
    }

    pub fn ell_sequence(&self, p: u64) -> Result<EllSequence> {
        EllSequence::new(self, p)
    }
}

/// `ℓ_r = dim_C λ^{C_{p^r}}`: `C(t)` is fixed by `C_{p^r}` iff `p^r | t`.
pub fn ell(lambda: &Representation, r: u32, p: u64) -> u64 {
    match (p as u128).checked_pow(r) {
        Some(pr) => lambda
            .weights
            .iter()
            .filter(|&&t| (t as u128).is_multiple_of(pr))
            .count() as u64,
        None => 0,
    }
}

/// A value of the ℓ-sequence; `ℓ_{-1}` is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EllValue {
    Finite(u64),
    Infinite,
}

impl EllValue {
    fn exceeds(self, m: u64) -> bool {
        match self {
            EllValue::Finite(v) => v > m,
            EllValue::Infinite => true,
        }
    }
}

impl fmt::Display for EllValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllValue::Finite(v) => write!(f, "{v}"),
            EllValue::Infinite => write!(f, "∞"),
        }
    }
}

/// `ℓ_0 ≥ ℓ_1 ≥ … ≥ ℓ_R = ℓ_∞`, truncated once it has stabilized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllSequence {
    values: Vec<u64>,
}

impl EllSequence {
    pub fn new(lambda: &Representation, p: u64) -> Result<Self> {
        require_prime(p)?;
        let mut values = vec![lambda.complex_dim()];
        let mut r = 1;
        while *values.last().unwrap() > 0 {
            values.push(ell(lambda, r, p));
            r += 1;
        }
        Ok(EllSequence { values })
    }

    /// `ℓ_r` for `r ≥ -1`.
    pub fn get(&self, r: i64) -> EllValue {
        if r < 0 {
            return EllValue::Infinite;
        }
        let r = r as usize;
        EllValue::Finite(
            *self
                .values
                .get(r)
                .unwrap_or_else(|| self.values.last().unwrap()),
        )
    }

    pub fn limit(&self) -> u64 {
        *self.values.last().unwrap()
    }

    /// Index from which the sequence is constant.
    pub fn stabilization(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// The unique integer `s` with `ℓ_{n-s} ≤ m < ℓ_{n-1-s}`. Values `s ≤ 0`
/// (returned as 0) mean the summand vanishes.
pub fn grading_index(ells: &EllSequence, n: u32, m: u64) -> i64 {
    // windows ℓ_r ≤ m < ℓ_{r-1} for r = 0..n give s = n - r ≥ 1
    for r in 0..n as i64 {
        if !ells.get(r).exceeds(m) && ells.get(r - 1).exceeds(m) {
            return n as i64 - r;
        }
    }
    0
}

/// `TR^n_{q-λ}(k; p) ≅ ⊕_{m ≥ ℓ_∞} W_sΩ^{q-2m}` as a formal sum, for a
/// regular `F_p`-algebra `k`. Terms with `s ≤ 0` or negative form degree
/// are dropped.
pub fn tr_graded(q: i64, lambda: &Representation, n: u32, p: u64) -> Result<GradedSum> {
    if n == 0 {
        return Err(Error::invalid("TR level n must be positive"));
    }
    let ells = lambda.ell_sequence(p)?;
    let mut out = GradedSum::new();
    if q < 0 {
        return Ok(out);
    }
    for m in ells.limit()..=(q as u64 / 2) {
        let s = grading_index(&ells, n, m);
        if s > 0 {
            out.add(
                Symbol::PTypical {
                    s,
                    j: q - 2 * m as i64,
                },
                1,
            );
        }
    }
    Ok(out)
}

fn lambda_at(r: u32, d: u64, p: u64) -> Result<Representation> {
    let scale = p.checked_pow(r - 1).and_then(|pr| pr.checked_mul(d));
    scale
        .map(Representation::lambda)
        .ok_or_else(|| Error::invalid("representation dimension overflows"))
}

/// `TR^r_{q-λ_{p^{r-1}d}}` as a formal sum.
fn tr_term(q: i64, r: u32, d: u64, p: u64) -> Result<GradedSum> {
    // zero below dimension: q < 2d
    if q < 2 * d as i64 {
        return Ok(GradedSum::new());
    }
    tr_graded(q, &lambda_at(r, d, p)?, r, p)
}

/// `TR^n_q(A, B, I; p)` as the finite sum over `d` of the contributions
/// of `S^{λ_d} ∧ (T/C_d)_+`, before passing to the Frobenius limit.
pub fn tr_birelative_graded(q: i64, n: u32, p: u64) -> Result<GradedSum> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("TR level n must be positive"));
    }
    let mut out = GradedSum::new();
    if q + 1 < 2 {
        return Ok(out);
    }
    let dmax = ((q + 1) / 2) as u64;
    for d in 1..=dmax {
        out.extend(&tr_term(q + 1, n, d, p)?);
        out.extend(&tr_term(q, n, d, p)?);
    }
    for r in 1..n {
        for d in (1..=dmax).filter(|d| d % p != 0) {
            out.extend(&tr_term(q + 1, r, d, p)?);
            out.extend(&tr_term(q, r, d, p)?);
        }
    }
    Ok(out)
}

pub fn tr_birelative(q: i64, n: u32, p: u64, base: &BaseRing) -> Result<Evaluation> {
    check_base(p, base)?;
    let sum = tr_birelative_graded(q, n, p)?;
    finish(evaluate(&sum, base)?, p)
}

/// Least `r ≥ 1` with `q < 2 p^{r-1} d`; from there on the restriction
/// maps of the limit system are isomorphisms.
pub fn stabilization_index(q: i64, d: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    if d == 0 {
        return Err(Error::invalid("d must be positive"));
    }
    let mut r = 1;
    let mut dim: i128 = 2 * d as i128;
    while (q as i128) >= dim {
        dim *= p as i128;
        r += 1;
    }
    Ok(r)
}

/// The `(r, d)` factor `TR^r_{q-λ_{p^{r-1}d}}` of the product describing
/// `TF_q(A, B, I; p)`.
pub fn tf_factor(q: i64, r: u32, d: u64, p: u64, base: &BaseRing) -> Result<Evaluation> {
    check_base(p, base)?;
    if r == 0 {
        return Err(Error::invalid("TR level r must be positive"));
    }
    if d == 0 || d.is_multiple_of(p) {
        return Err(Error::invalid(format!(
            "d = {d} must be positive and prime to p = {p}"
        )));
    }
    finish(evaluate(&tr_term(q, r, d, p)?, base)?, p)
}

/// One factor `lim_R TR^r_{q-λ_{p^{r-1}d}}` of the TC product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcFactor {
    pub d: u64,
    /// level at which the limit is attained
    pub level: u32,
    pub sum: GradedSum,
}

/// The nonzero factors of the TC product: `d` prime to `p` with `2d ≤ q`.
pub fn tc_factors(q: i64, p: u64) -> Result<Vec<TcFactor>> {
    require_prime(p)?;
    if q < 2 {
        return Ok(Vec::new());
    }
    (1..=(q / 2) as u64)
        .filter(|d| d % p != 0)
        .map(|d| {
            let level = stabilization_index(q, d, p)?;
            Ok(TcFactor {
                d,
                level,
                sum: tr_term(q, level, d, p)?,
            })
        })
        .collect()
}

pub fn tc_graded(q: i64, p: u64) -> Result<GradedSum> {
    let mut out = GradedSum::new();
    for factor in tc_factors(q, p)? {
        out.extend(&factor.sum);
    }
    Ok(out)
}

/// `TC_q(A, B, I; p) ≅ ∏_{d ∈ I_p} lim_R TR^r_{q-λ_{p^{r-1}d}}(k; p)`.
pub fn tc(q: i64, p: u64, base: &BaseRing) -> Result<Evaluation> {
    check_base(p, base)?;
    finish(evaluate(&tc_graded(q, p)?, base)?, p)
}

fn check_base(p: u64, base: &BaseRing) -> Result<()> {
    require_prime(p)?;
    match base.characteristic() {
        Some(c) if c == p => Ok(()),
        Some(c) => Err(Error::invalid(format!(
            "base ring has characteristic {c}, not {p}"
        ))),
        None => Err(Error::invalid(
            "TR and TC are computed here for F_p-algebras only",
        )),
    }
}

/// Groups over `F_q` must be finite p-groups.
fn finish(value: Evaluation, p: u64) -> Result<Evaluation> {
    if let Evaluation::Group(g) = &value {
        if !g.is_p_primary(p) {
            return Err(Error::internal(format!(
                "computed group {g} is not p-primary torsion"
            )));
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;

    fn f(p: u64) -> BaseRing {
        BaseRing::prime_field(p).unwrap()
    }

    fn group(e: Evaluation) -> FinAbGroup {
        e.into_group().unwrap()
    }

    fn pt(s: i64, j: i64) -> Symbol {
        Symbol::PTypical { s, j }
    }

    #[test]
    fn ell_examples() {
        let l4 = Representation::lambda(4);
        assert_eq!(
            (0..4).map(|r| ell(&l4, r, 2)).collect::<Vec<_>>(),
            vec![4, 2, 1, 0]
        );
        let l0 = Representation::lambda(0);
        assert!((0..5).all(|r| ell(&l0, r, 3) == 0));
        let l6 = Representation::lambda(6);
        assert_eq!(
            (0..3).map(|r| ell(&l6, r, 3)).collect::<Vec<_>>(),
            vec![6, 2, 0]
        );
    }

    #[test]
    fn ell_sequence_shape() {
        let seq = Representation::lambda(4).ell_sequence(2).unwrap();
        assert_eq!(seq.values(), &[4, 2, 1, 0]);
        assert_eq!(seq.get(-1), EllValue::Infinite);
        assert_eq!(seq.get(10), EllValue::Finite(0));
        assert_eq!(seq.stabilization(), 3);
        assert!(Representation::new(vec![1, 0]).is_err());
    }

    #[test]
    fn tr_graded_examples() {
        assert_eq!(
            tr_graded(2, &Representation::lambda(1), 1, 2).unwrap(),
            GradedSum::single(pt(1, 0))
        );
        assert_eq!(
            tr_graded(2, &Representation::lambda(2), 2, 2).unwrap(),
            GradedSum::single(pt(1, 0))
        );
        assert!(tr_graded(1, &Representation::lambda(1), 1, 2)
            .unwrap()
            .is_empty());
        assert!(tr_graded(-3, &Representation::lambda(1), 1, 2)
            .unwrap()
            .is_empty());
        assert!(tr_graded(2, &Representation::lambda(1), 0, 2).is_err());
    }

    #[test]
    fn repeated_ell_values_give_empty_windows() {
        // λ = C(1) ⊕ C(3), p = 2: ℓ = (2, 0); m = 1 lies in [ℓ_1, ℓ_0)
        let lam = Representation::new(vec![1, 3]).unwrap();
        let ells = lam.ell_sequence(2).unwrap();
        assert_eq!(grading_index(&ells, 3, 1), 2);
        assert_eq!(grading_index(&ells, 3, 2), 3);
        assert_eq!(grading_index(&ells, 1, 0), 0);
    }

    #[test]
    fn stabilization_examples() {
        assert_eq!(stabilization_index(2, 1, 2).unwrap(), 2);
        assert_eq!(stabilization_index(0, 1, 2).unwrap(), 1);
        assert_eq!(stabilization_index(10, 3, 2).unwrap(), 2);
        assert_eq!(stabilization_index(-5, 1, 3).unwrap(), 1);
        assert!(stabilization_index(2, 0, 2).is_err());
    }

    #[test]
    fn tf_factor_examples() {
        let two = FinAbGroup::cyclic(2).unwrap();
        assert_eq!(group(tf_factor(2, 1, 1, 2, &f(2)).unwrap()), two);
        assert_eq!(
            group(tf_factor(2, 5, 1, 2, &f(2)).unwrap()),
            group(tf_factor(2, 2, 1, 2, &f(2)).unwrap())
        );
        assert_eq!(
            group(tf_factor(2, 1, 3, 2, &f(2)).unwrap()),
            FinAbGroup::zero()
        );
        assert!(tf_factor(2, 1, 2, 2, &f(2)).is_err());
    }

    #[test]
    fn tc_examples() {
        assert_eq!(
            group(tc(2, 2, &f(2)).unwrap()),
            FinAbGroup::cyclic(2).unwrap()
        );
        assert_eq!(group(tc(1, 2, &f(2)).unwrap()), FinAbGroup::zero());
        let k6 = FinAbGroup::cyclic(4)
            .unwrap()
            .direct_sum(&FinAbGroup::cyclic(2).unwrap());
        assert_eq!(group(tc(6, 2, &f(2)).unwrap()), k6);
        let factors = tc_factors(6, 2).unwrap();
        assert_eq!(
            factors.iter().map(|t| (t.d, t.level)).collect::<Vec<_>>(),
            vec![(1, 3), (3, 2)]
        );
    }

    #[test]
    fn birelative_examples() {
        assert_eq!(
            group(tr_birelative(0, 1, 2, &f(2)).unwrap()),
            FinAbGroup::zero()
        );
        assert_eq!(
            group(tr_birelative(2, 1, 2, &f(2)).unwrap()),
            FinAbGroup::cyclic(2).unwrap()
        );
        let nine = FinAbGroup::cyclic(3).unwrap().power(2);
        assert_eq!(group(tr_birelative(2, 2, 3, &f(3)).unwrap()), nine);
    }

    #[test]
    fn base_must_match_prime() {
        assert!(tc(2, 3, &f(2)).is_err());
        assert!(tc(2, 2, &BaseRing::SymbolicRegularQ).is_err());
        let symbolic = tc(4, 2, &BaseRing::SymbolicRegularFp { p: 2 }).unwrap();
        assert!(matches!(symbolic, Evaluation::Symbolic(_)));
    }
}
