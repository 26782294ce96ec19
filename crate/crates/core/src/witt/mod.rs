//! p-typical Witt vectors of finite length.
//!
//! No sum or product polynomials are tabulated. Coordinates over `F_{p^f}`
//! are lifted to the torsion-free ring `Z[T]/(g̃)`, combined in ghost
//! coordinates, and recovered by triangular back-substitution; each exact
//! division by `p^i` along the way doubles as an integrity check.

mod field;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::FinAbGroup;
use crate::arith::require_prime;
use crate::error::{Error, Result};

pub use field::{FieldElem, FiniteField, Integers, LiftRing, LiftedField};

/// Largest group [`group_structure`] will enumerate by default.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1_000_000;

/// Ghost components `w_i = Σ_{j≤i} p^j a_j^{p^{i-j}}`, `i = 0..len`.
pub fn ghost_in<R: LiftRing>(ring: &R, p: u64, coords: &[R::Elem]) -> Vec<R::Elem> {
    (0..coords.len())
        .map(|i| {
            let mut acc = ring.zero();
            for (j, a) in coords[..=i].iter().enumerate() {
                let term = ring.pow(a, p.pow((i - j) as u32));
                acc = ring.add(&acc, &ring.scale(&term, &BigInt::from(p).pow(j as u32)));
            }
            acc
        })
        .collect()
}

/// Inverse of [`ghost_in`] by back-substitution.
pub fn unghost_in<R: LiftRing>(ring: &R, p: u64, ghost: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let mut coords: Vec<R::Elem> = Vec::with_capacity(ghost.len());
    for (i, w) in ghost.iter().enumerate() {
        let mut rest = w.clone();
        for (j, a) in coords.iter().enumerate() {
            let term = ring.pow(a, p.pow((i - j) as u32));
            rest = ring.sub(&rest, &ring.scale(&term, &BigInt::from(p).pow(j as u32)));
        }
        let a = ring
            .div_exact(&rest, &BigInt::from(p).pow(i as u32))
            .ok_or(Error::NotGhostVector { index: i })?;
        coords.push(a);
    }
    Ok(coords)
}

/// A Witt vector with integer coordinates, `W_s(Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntWitt {
    p: u64,
    coords: Vec<BigInt>,
}

impl IntWitt {
    pub fn new(p: u64, coords: Vec<BigInt>) -> Result<Self> {
        require_prime(p)?;
        if coords.is_empty() {
            return Err(Error::invalid("Witt vectors have positive length"));
        }
        Ok(IntWitt { p, coords })
    }

    pub fn from_i64(p: u64, coords: &[i64]) -> Result<Self> {
        Self::new(p, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_ghost(p: u64, ghost: &[BigInt]) -> Result<Self> {
        Self::new(p, unghost_in(&Integers, p, ghost)?)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn ghost(&self) -> Vec<BigInt> {
        ghost_in(&Integers, self.p, &self.coords)
    }

    fn combine(&self, other: &IntWitt, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntWitt> {
        if self.p != other.p || self.len() != other.len() {
            return Err(Error::invalid("Witt vectors of different prime or length"));
        }
        let ghost: Vec<BigInt> = self
            .ghost()
            .iter()
            .zip(other.ghost().iter())
            .map(|(a, b)| op(a, b))
            .collect();
        Self::from_ghost(self.p, &ghost)
    }

    pub fn add(&self, other: &IntWitt) -> Result<IntWitt> {
        self.combine(other, |a, b| a + b)
    }

    pub fn mul(&self, other: &IntWitt) -> Result<IntWitt> {
        self.combine(other, |a, b| a * b)
    }
}

/// `W_s(F_{p^f})` as a concrete ring: a residue field plus a length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittRing {
    field: FiniteField,
    length: usize,
}

/// Element of a [`WittRing`]; coordinates are field elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WittVector {
    coords: Vec<FieldElem>,
}

impl WittVector {
    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinates of a vector over a prime field as plain residues.
    pub fn residues(&self) -> Vec<u64> {
        self.coords.iter().map(|c| c[0]).collect()
    }
}

impl WittRing {
    pub fn new(p: u64, f: u32, length: usize) -> Result<Self> {
        if length == 0 {
            return Err(Error::invalid("Witt vector length must be positive"));
        }
        Ok(WittRing {
            field: FiniteField::new(p, f)?,
            length,
        })
    }

    pub fn prime_field(p: u64, length: usize) -> Result<Self> {
        Self::new(p, 1, length)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of elements, `p^{f·s}`.
    pub fn order(&self) -> u128 {
        self.field
            .order()
            .checked_pow(self.length as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn element(&self, coords: Vec<FieldElem>) -> Result<WittVector> {
        if coords.len() != self.length || !coords.iter().all(|c| self.field.is_element(c)) {
            return Err(Error::invalid(format!(
                "expected {} coordinates in F_{}^{}",
                self.length,
                self.prime(),
                self.field.degree()
            )));
        }
        Ok(WittVector { coords })
    }

    /// Vector over a prime field from residues; values are reduced mod `p`.
    pub fn from_residues(&self, residues: &[i64]) -> Result<WittVector> {
        if self.field.degree() != 1 {
            return Err(Error::invalid("residue coordinates need a prime field"));
        }
        let p = self.prime() as i64;
        self.element(
            residues
                .iter()
                .map(|&a| vec![a.rem_euclid(p) as u64])
                .collect(),
        )
    }

    pub fn zero(&self) -> WittVector {
        WittVector {
            coords: vec![self.field.zero(); self.length],
        }
    }

    pub fn one(&self) -> WittVector {
        let mut coords = vec![self.field.zero(); self.length];
        coords[0] = self.field.one();
        WittVector { coords }
    }

    /// The same field with length `s - 1`.
    pub fn truncated(&self) -> Result<WittRing> {
        if self.length < 2 {
            return Err(Error::invalid("cannot truncate a Witt vector of length 1"));
        }
        Ok(WittRing {
            field: self.field.clone(),
            length: self.length - 1,
        })
    }

    fn lifted_ghost(&self, ring: &LiftedField, a: &WittVector) -> Vec<Vec<BigInt>> {
        let lifted: Vec<_> = a.coords.iter().map(|c| self.field.lift(c)).collect();
        ghost_in(ring, self.prime(), &lifted)
    }

    fn vector_from_lifted_ghost(
        &self,
        ring: &LiftedField,
        ghost: &[Vec<BigInt>],
    ) -> Result<WittVector> {
        let coords = unghost_in(ring, self.prime(), ghost)?;
        Ok(WittVector {
            coords: coords.iter().map(|c| self.field.reduce(c)).collect(),
        })
    }

    fn check(&self, a: &WittVector) -> Result<()> {
        if a.len() != self.length {
            return Err(Error::invalid(format!(
                "expected a Witt vector of length {}",
                self.length
            )));
        }
        Ok(())
    }

    fn combine(
        &self,
        a: &WittVector,
        b: &WittVector,
        op: impl Fn(&LiftedField, &Vec<BigInt>, &Vec<BigInt>) -> Vec<BigInt>,
    ) -> Result<WittVector> {
        self.check(a)?;
        self.check(b)?;
        let ring = LiftedField::new(&self.field);
        let ga = self.lifted_ghost(&ring, a);
        let gb = self.lifted_ghost(&ring, b);
        let ghost: Vec<_> = ga.iter().zip(&gb).map(|(x, y)| op(&ring, x, y)).collect();
        self.vector_from_lifted_ghost(&ring, &ghost)
    }

    pub fn add(&self, a: &WittVector, b: &WittVector) -> Result<WittVector> {
        self.combine(a, b, |r, x, y| r.add(x, y))
    }

    pub fn mul(&self, a: &WittVector, b: &WittVector) -> Result<WittVector> {
        self.combine(a, b, |r, x, y| r.mul(x, y))
    }

    pub fn neg(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let ring = LiftedField::new(&self.field);
        let ghost: Vec<_> = self
            .lifted_ghost(&ring, a)
            .iter()
            .map(|x| ring.sub(&ring.zero(), x))
            .collect();
        self.vector_from_lifted_ghost(&ring, &ghost)
    }

    /// `n · a` by repeated doubling.
    pub fn scalar_mul(&self, a: &WittVector, n: u64) -> Result<WittVector> {
        let mut acc = self.zero();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: &WittVector) -> Result<u128> {
        let mut order = 1u128;
        let mut cur = a.clone();
        let zero = self.zero();
        while cur != zero {
            cur = self.add(&cur, a)?;
            order += 1;
        }
        Ok(order)
    }

    /// `V(a_0, …, a_{s-1}) = (0, a_0, …, a_{s-2})`, kept at length `s`.
    pub fn verschiebung(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let mut coords = Vec::with_capacity(self.length);
        coords.push(self.field.zero());
        coords.extend(a.coords[..self.length - 1].iter().cloned());
        Ok(WittVector { coords })
    }

    /// Frobenius `W_s → W_{s-1}`, shifting ghost components by one.
    pub fn frobenius(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let short = self.truncated()?;
        let ring = LiftedField::new(&self.field);
        let ghost = self.lifted_ghost(&ring, a);
        short.vector_from_lifted_ghost(&ring, &ghost[1..])
    }

    /// Restriction `W_s → W_{s-1}`, dropping the last coordinate.
    pub fn restrict(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        self.truncated()?;
        Ok(WittVector {
            coords: a.coords[..self.length - 1].to_vec(),
        })
    }

    /// Every element, in counting order of the coordinates.
    pub fn elements(&self) -> impl Iterator<Item = WittVector> + '_ {
        let q = self.field.order();
        let all: Vec<FieldElem> = self.field.elements().collect();
        (0..self.order()).map(move |mut n| {
            let coords = (0..self.length)
                .map(|_| {
                    let c = all[(n % q) as usize].clone();
                    n /= q;
                    c
                })
                .collect();
            WittVector { coords }
        })
    }

    /// Additive group structure by enumeration: counts the elements killed
    /// by each power of `p`.
    pub fn group_structure(&self, budget: u128) -> Result<FinAbGroup> {
        let order = self.order();
        if order > budget {
            return Err(Error::BudgetExceeded {
                required: order,
                budget,
            });
        }
        let p = self.prime();
        let zero = self.zero();
        // killed_at[k] = #{a : p^k a = 0}
        let mut killed_at = vec![0u128; self.length * self.field.degree() as usize + 1];
        for a in self.elements() {
            let mut cur = a;
            let mut k = 0;
            while cur != zero {
                cur = self.scalar_mul(&cur, p)?;
                k += 1;
                if k >= killed_at.len() {
                    return Err(Error::internal("element order exceeds the group order"));
                }
            }
            killed_at[k] += 1;
        }
        let mut sizes = Vec::with_capacity(killed_at.len());
        let mut running = 0u128;
        for count in killed_at {
            running += count;
            sizes.push(running);
            if running == order {
                break;
            }
        }
        if running != order {
            return Err(Error::internal("enumeration missed elements"));
        }
        FinAbGroup::from_p_kernel_sizes(p, &sizes)
    }
}

/// `W_s(F_{p^f})` as an abelian group, by brute-force enumeration.
pub fn group_structure(p: u64, f: u32, s: usize) -> Result<FinAbGroup> {
    WittRing::new(p, f, s)?.group_structure(DEFAULT_ENUMERATION_BUDGET)
}

impl IntWitt {
    /// Integer lift of a prime-field vector with residues in `0..p`.
    pub fn lift(ring: &WittRing, a: &WittVector) -> Result<IntWitt> {
        if ring.field().degree() != 1 {
            return Err(Error::invalid("integer lifts need a prime field"));
        }
        IntWitt::new(
            ring.prime(),
            a.residues().into_iter().map(BigInt::from).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }
}
