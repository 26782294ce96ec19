use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// A cyclic summand `Z/p^e` with `e ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exponent: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if exponent == 0 {
            return Err(Error::invalid("prime power exponent must be positive"));
        }
        Ok(PrimePower { prime, exponent })
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.exponent)
    }
}

/// A finitely generated abelian group `Z^r ⊕ ⊕ Z/p_i^{e_i}`.
///
/// The torsion part is kept as a sorted multiset of prime powers, so two
/// groups are isomorphic iff they compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinAbGroup {
    torsion: Vec<PrimePower>,
    free_rank: usize,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// `Z/n`. `n = 1` gives the zero group.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::from_cyclic_orders(&[BigUint::from(n)])
    }

    pub fn prime_power(prime: u64, exponent: u32) -> Result<Self> {
        Ok(FinAbGroup {
            torsion: vec![PrimePower::new(prime, exponent)?],
            free_rank: 0,
        })
    }

    pub fn from_parts(torsion: impl IntoIterator<Item = PrimePower>, free_rank: usize) -> Self {
        let mut torsion: Vec<_> = torsion.into_iter().collect();
        torsion.sort();
        FinAbGroup { torsion, free_rank }
    }

    /// `⊕ Z/n_i` for the given orders; factors equal to one are dropped and
    /// zero orders denote free summands.
    pub fn from_cyclic_orders(orders: &[BigUint]) -> Result<Self> {
        let mut torsion = Vec::new();
        let mut free_rank = 0;
        for n in orders {
            if n.is_zero() {
                free_rank += 1;
                continue;
            }
            for (prime, exponent) in factorize(n)? {
                torsion.push(PrimePower { prime, exponent });
            }
        }
        Ok(Self::from_parts(torsion, free_rank))
    }

    /// Recovers a finite abelian p-group from the sizes of its p-power
    /// torsion subgroups: `sizes[k] = |{g : p^k g = 0}|` for `k = 0, 1, …`,
    /// ending once the whole group is reached.
    pub fn from_p_kernel_sizes(p: u64, sizes: &[u128]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let logs: Vec<u32> = sizes
            .iter()
            .map(|&n| log_exact(p, n))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::internal("kernel size is not a power of p"))?;
        if logs.first().copied().unwrap_or(0) != 0 {
            return Err(Error::internal("trivial kernel must have size 1"));
        }
        // logs[k] - logs[k-1] counts the cyclic factors of exponent ≥ k.
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1].saturating_sub(w[0])).collect();
        if logs.windows(2).any(|w| w[1] < w[0]) || at_least.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::internal(
                "kernel sizes are not those of an abelian p-group",
            ));
        }
        let mut torsion = Vec::new();
        for (k, &count) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(count - next) {
                torsion.push(PrimePower {
                    prime: p,
                    exponent: k as u32 + 1,
                });
            }
        }
        Ok(Self::from_parts(torsion, 0))
    }

    pub fn torsion(&self) -> &[PrimePower] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Finite and annihilated by a power of `p`.
    pub fn is_p_primary(&self, p: u64) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|f| f.prime == p)
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        Self::from_parts(
            self.torsion.iter().chain(other.torsion.iter()).copied(),
            self.free_rank + other.free_rank,
        )
    }

    /// `G^n`.
    pub fn power(&self, n: usize) -> FinAbGroup {
        let mut torsion = Vec::with_capacity(self.torsion.len() * n);
        for _ in 0..n {
            torsion.extend_from_slice(&self.torsion);
        }
        Self::from_parts(torsion, self.free_rank * n)
    }

    /// Least common multiple of the torsion orders, or `None` when there
    /// is a free summand. The zero group has exponent 1.
    pub fn exponent(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            return None;
        }
        Some(
            self.torsion
                .iter()
                .fold(BigUint::one(), |acc, f| acc.lcm(&f.order())),
        )
    }

    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().map(PrimePower::order).product())
    }

    /// Invariant factors `n_1 | n_2 | … | n_k` of the torsion part, all > 1.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        let mut by_prime: Vec<Vec<PrimePower>> = Vec::new();
        for f in &self.torsion {
            match by_prime.last_mut() {
                Some(v) if v[0].prime == f.prime => v.push(*f),
                _ => by_prime.push(vec![*f]),
            }
        }
        let len = by_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![BigUint::one(); len];
        for powers in &by_prime {
            // powers are ascending; align the largest with the last factor
            let offset = len - powers.len();
            for (i, f) in powers.iter().enumerate() {
                out[offset + i] *= f.order();
            }
        }
        out
    }
}

fn log_exact(p: u64, mut n: u128) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p as u128) {
            return None;
        }
        n /= p as u128;
        k += 1;
    }
    Some(k)
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        // largest summand first within each prime
        let mut torsion = self.torsion.clone();
        torsion.sort_by(|a, b| a.prime.cmp(&b.prime).then(b.exponent.cmp(&a.exponent)));
        parts.extend(torsion.iter().map(|t| format!("Z/{}", t.order())));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    torsion: Vec<(u64, u32)>,
    free_rank: usize,
}

impl Serialize for FinAbGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GroupRepr {
            torsion: self.torsion.iter().map(|t| (t.prime, t.exponent)).collect(),
            free_rank: self.free_rank,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinAbGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GroupRepr::deserialize(deserializer)?;
        let torsion = repr
            .torsion
            .into_iter()
            .map(|(p, e)| PrimePower::new(p, e))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(FinAbGroup::from_parts(torsion, repr.free_rank))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(orders: &[u64]) -> FinAbGroup {
        let orders: Vec<BigUint> = orders.iter().map(|&n| BigUint::from(n)).collect();
        FinAbGroup::from_cyclic_orders(&orders).unwrap()
    }

    #[test]
    fn direct_sums() {
        let sum = g(&[2]).direct_sum(&g(&[4]));
        assert_eq!(
            sum,
            FinAbGroup::from_parts(
                [
                    PrimePower::new(2, 1).unwrap(),
                    PrimePower::new(2, 2).unwrap()
                ],
                0
            )
        );
        assert_eq!(FinAbGroup::zero().direct_sum(&g(&[3, 9])), g(&[3, 9]));
        assert_eq!(g(&[4, 2]).direct_sum(&g(&[2])), g(&[2, 2, 4]));
    }

    #[test]
    fn exponents() {
        assert_eq!(g(&[2, 4]).exponent(), Some(BigUint::from(4u32)));
        assert_eq!(FinAbGroup::zero().exponent(), Some(BigUint::one()));
        assert_eq!(g(&[3, 9, 2]).exponent(), Some(BigUint::from(18u32)));
        assert_eq!(FinAbGroup::free(1).exponent(), None);
    }

    #[test]
    fn cyclic_orders_split_into_prime_powers() {
        assert_eq!(g(&[6]), g(&[2, 3]));
        assert_eq!(g(&[1, 1]), FinAbGroup::zero());
        assert_eq!(g(&[0, 12]).to_string(), "Z ⊕ Z/4 ⊕ Z/3");
        assert_eq!(g(&[2, 4]).to_string(), "Z/4 ⊕ Z/2");
    }

    #[test]
    fn invariant_factor_view() {
        let inv: Vec<u64> = g(&[2, 4, 3])
            .invariant_factors()
            .iter()
            .map(|n| n.to_u64_digits()[0])
            .collect();
        assert_eq!(inv, vec![2, 12]);
    }

    #[test]
    fn kernel_sizes() {
        // Z/4 ⊕ Z/2: |G[1]| = 1, |G[2]| = 4, |G[4]| = 8
        assert_eq!(
            FinAbGroup::from_p_kernel_sizes(2, &[1, 4, 8]).unwrap(),
            g(&[4, 2])
        );
        assert_eq!(
            FinAbGroup::from_p_kernel_sizes(3, &[1, 3, 9]).unwrap(),
            g(&[9])
        );
        assert_eq!(
            FinAbGroup::from_p_kernel_sizes(2, &[1]).unwrap(),
            FinAbGroup::zero()
        );
        assert!(FinAbGroup::from_p_kernel_sizes(2, &[1, 3]).is_err());
        // increments must be non-increasing
        assert!(FinAbGroup::from_p_kernel_sizes(2, &[1, 2, 8]).is_err());
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&g(&[4])).unwrap();
        assert_eq!(json, r#"{"torsion":[[2,2]],"free_rank":0}"#);
        let zero = serde_json::to_string(&FinAbGroup::zero()).unwrap();
        assert_eq!(zero, r#"{"torsion":[],"free_rank":0}"#);
        let bad: std::result::Result<FinAbGroup, _> =
            serde_json::from_str(r#"{"torsion":[[4,1]],"free_rank":0}"#);
        assert!(bad.is_err());
    }

    fn arb_group() -> impl Strategy<Value = FinAbGroup> {
        (
            prop::collection::vec((prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..4), 0..5),
            0usize..3,
        )
            .prop_map(|(t, r)| {
                FinAbGroup::from_parts(
                    t.into_iter().map(|(p, e)| PrimePower {
                        prime: p,
                        exponent: e,
                    }),
                    r,
                )
            })
    }

    proptest! {
        #[test]
        fn direct_sum_commutative_associative(a in arb_group(), b in arb_group(), c in arb_group()) {
            prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
            prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        }

        #[test]
        fn json_round_trip(a in arb_group()) {
            let text = serde_json::to_string(&a).unwrap();
            let back: FinAbGroup = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn invariant_factors_recover_group(a in arb_group()) {
            let mut orders = a.invariant_factors();
            orders.extend(std::iter::repeat_n(BigUint::zero(), a.free_rank()));
            prop_assert_eq!(FinAbGroup::from_cyclic_orders(&orders).unwrap(), a);
        }
    }
}
