//! Finite fields `F_{p^f} = F_p[T]/(g)` and their torsion-free integral
//! lifts `Z[T]/(g̃)`, where `g̃` lifts `g` with coefficients in `0..p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::require_prime;
use crate::error::{Error, Result};

/// Coefficients of a field element, lowest degree first, length `f`.
pub type FieldElem = Vec<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    degree: u32,
    /// monic, lowest degree first, length `degree + 1`
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, degree: u32) -> Result<Self> {
        require_prime(p)?;
        if degree == 0 {
            return Err(Error::invalid("field degree must be positive"));
        }
        let modulus = least_irreducible(p, degree);
        Ok(FiniteField { p, degree, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.degree)
    }

    pub fn zero(&self) -> FieldElem {
        vec![0; self.degree as usize]
    }

    pub fn one(&self) -> FieldElem {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    pub fn is_element(&self, a: &[u64]) -> bool {
        a.len() == self.degree as usize && a.iter().all(|&c| c < self.p)
    }

    /// All elements, in base-`p` counting order of their coefficients.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(move |mut n| {
            (0..self.degree)
                .map(|_| {
                    let c = (n % self.p as u128) as u64;
                    n /= self.p as u128;
                    c
                })
                .collect()
        })
    }

    pub(crate) fn lift(&self, a: &[u64]) -> Vec<BigInt> {
        a.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub(crate) fn reduce(&self, a: &[BigInt]) -> FieldElem {
        let p = BigInt::from(self.p);
        a.iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("residue fits"))
            .collect()
    }
}

/// Lexicographically least monic irreducible of degree `f` over `F_p`,
/// comparing coefficients from `T^{f-1}` down to the constant term.
fn least_irreducible(p: u64, f: u32) -> Vec<u64> {
    let count = (p as u128).pow(f);
    for n in 0..count {
        let mut poly = Vec::with_capacity(f as usize + 1);
        let mut rest = n;
        for _ in 0..f {
            poly.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    // brute force: no monic divisor of degree 1..=deg/2
    for d in 1..=deg / 2 {
        for n in 0..(p as u128).pow(d as u32) {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = n;
            for _ in 0..d {
                divisor.push((rest % p as u128) as u64);
                rest /= p as u128;
            }
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u64], monic: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - d;
        for (i, &c) in monic[..d].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
    }
    r
}

/// Arithmetic in a torsion-free commutative ring where divisibility by an
/// integer can be decided exactly; ghost components live here.
pub trait LiftRing {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &BigInt) -> Self::Elem;
    /// `a / k` if it exists in the ring.
    fn div_exact(&self, a: &Self::Elem, k: &BigInt) -> Option<Self::Elem>;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc: Option<Self::Elem> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(x) => self.mul(&x, &base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc.unwrap_or_else(|| self.one())
    }

    fn one(&self) -> Self::Elem;
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl LiftRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn scale(&self, a: &BigInt, k: &BigInt) -> BigInt {
        a * k
    }
    fn div_exact(&self, a: &BigInt, k: &BigInt) -> Option<BigInt> {
        let (q, r) = a.div_rem(k);
        r.is_zero().then_some(q)
    }
}

/// `Z[T]/(g̃)` for the lifted modulus of a finite field; free over `Z` on
/// `1, T, …, T^{f-1}`.
#[derive(Clone, Debug)]
pub struct LiftedField {
    modulus: Vec<BigInt>,
}

impl LiftedField {
    pub fn new(field: &FiniteField) -> Self {
        LiftedField {
            modulus: field.lift(field.modulus()),
        }
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

impl LiftRing for LiftedField {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.degree()]
    }
    fn one(&self) -> Vec<BigInt> {
        let mut e = self.zero();
        e[0] = BigInt::from(1);
        e
    }
    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        // reduce by the monic modulus from the top down
        for k in (d..prod.len()).rev() {
            let lead = std::mem::take(&mut prod[k]);
            if lead.is_zero() {
                continue;
            }
            for (i, c) in self.modulus[..d].iter().enumerate() {
                prod[k - d + i] -= &lead * c;
            }
        }
        prod.truncate(d);
        prod
    }
    fn scale(&self, a: &Vec<BigInt>, k: &BigInt) -> Vec<BigInt> {
        a.iter().map(|x| x * k).collect()
    }
    fn div_exact(&self, a: &Vec<BigInt>, k: &BigInt) -> Option<Vec<BigInt>> {
        a.iter().map(|x| Integers.div_exact(x, k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles() {
        assert_eq!(FiniteField::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // T^2 + 1 is irreducible mod 3 and precedes T^2 + T + 2
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert!(FiniteField::new(4, 1).is_err());
    }

    #[test]
    fn lifted_multiplication_reduces_to_field() {
        let field = FiniteField::new(2, 2).unwrap();
        let ring = LiftedField::new(&field);
        // T · T = T + 1 in F_4
        let t = field.lift(&[0, 1]);
        assert_eq!(field.reduce(&ring.mul(&t, &t)), vec![1, 1]);
        // every nonzero element has multiplicative order dividing 3
        for a in field.elements().skip(1) {
            let cube = ring.pow(&field.lift(&a), 3);
            assert_eq!(field.reduce(&cube), field.one());
        }
    }

    #[test]
    fn element_enumeration() {
        let field = FiniteField::new(3, 2).unwrap();
        let all: Vec<_> = field.elements().collect();
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|a| field.is_element(a)));
    }
}
