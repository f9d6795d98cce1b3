//! Exact arithmetic in GF(p^m).
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` where
//! `c_i` are the coefficients (low degree first) of the polynomial representative
//! modulo the defining polynomial. `0` is zero and `1` is one in every field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Largest supported field size. Root finding and several searches enumerate
/// the whole field.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Fields with at most this many elements get full addition tables.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parameters naming a finite field, as they appear in configuration files.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "default_degree")]
    pub m: u32,
}

fn default_degree() -> u32 {
    1
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = w^i` for a fixed primitive element `w`, doubled in length.
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// The finite field GF(p^m) with its lexicographically smallest monic
/// irreducible modulus. Cheap to clone.
#[derive(Clone)]
pub struct FiniteField(Arc<Tables>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE as u64);
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p, m });
        };
        let q = q as u32;
        let modulus = smallest_irreducible(p, m);

        // Multiplication by polynomial arithmetic, only used to build the tables.
        let poly_mul = |a: u32, b: u32| -> u32 {
            let a = digits(a, p, m);
            let b = digits(b, p, m);
            let mut prod = vec![0u32; 2 * m as usize];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            reduce_mod(&mut prod, &modulus, p);
            undigits(&prod[..m as usize], p)
        };

        let order_of = |x: u32| -> u32 {
            let mut acc = x;
            let mut k = 1;
            while acc != 1 {
                acc = poly_mul(acc, x);
                k += 1;
            }
            k
        };
        let generator = (1..q).find(|&x| order_of(x) == q - 1).unwrap_or(1);

        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for i in 0..(q - 1) {
            exp[i as usize] = acc;
            log[acc as usize] = i;
            acc = poly_mul(acc, generator);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q as usize - 1)];
        }

        let digit_add = |a: u32, b: u32| -> u32 {
            let da = digits(a, p, m);
            let db = digits(b, p, m);
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            undigits(&s, p)
        };
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, m).iter().map(|&x| (p - x) % p).collect();
                undigits(&d, p)
            })
            .collect();
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b);
                }
            }
            t
        });

        Ok(FiniteField(Arc::new(Tables { p, m, q, modulus, exp, log, add, neg })))
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self, FieldError> {
        Self::new(spec.p, spec.m)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.0.p, m: self.0.m }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, low degree first (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.0.q, "element index {index} out of range for {self:?}");
        FieldElement(index)
    }

    /// Image of an integer under `Z -> GF(p) <= GF(p^m)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.m as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(FieldError::BadCoefficients(coeffs.to_vec()));
        }
        Ok(FieldElement(undigits(coeffs, self.0.p)))
    }

    /// Coefficient list over GF(p), low degree first, trailing zeros trimmed.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut d = digits(a.0, self.0.p, self.0.m);
        while d.last() == Some(&0) {
            d.pop();
        }
        d
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.0;
        if t.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if t.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= t.p { s - t.p } else { s });
        }
        match &t.add {
            Some(table) => FieldElement(table[(a.0 * t.q + b.0) as usize]),
            None => {
                let mut x = a.0;
                let mut y = b.0;
                let mut out = 0;
                let mut place = 1;
                for _ in 0..t.m {
                    out += ((x % t.p + y % t.p) % t.p) * place;
                    x /= t.p;
                    y /= t.p;
                    place *= t.p;
                }
                FieldElement(out)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.0;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let t = &*self.0;
        let l = t.log[a.0 as usize];
        Ok(FieldElement(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let t = &*self.0;
        let l = (t.log[a.0 as usize] as u64 * (e % (t.q as u64 - 1))) % (t.q as u64 - 1);
        FieldElement(t.exp[l as usize])
    }

    /// `a + b*c`, the inner loop of most linear algebra here.
    #[inline]
    pub fn mul_add(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> FieldElement {
        self.add(a, self.mul(b, c))
    }
}

fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Reduce `poly` (low degree first, coefficients mod p) modulo a monic `modulus` in place.
fn reduce_mod(poly: &mut Vec<u32>, modulus: &[u32], p: u32) {
    let deg = modulus.len() - 1;
    while poly.len() > deg {
        let lead = poly.pop().unwrap();
        if lead != 0 {
            let shift = poly.len() - deg;
            for (i, &c) in modulus[..deg].iter().enumerate() {
                poly[shift + i] = (poly[shift + i] + (p - lead) * c % p) % p;
            }
        }
    }
}

fn poly_rem_is_zero(a: &[u32], b: &[u32], p: u32) -> bool {
    // b monic
    let mut r = a.to_vec();
    reduce_mod(&mut r, b, p);
    r.iter().all(|&c| c == 0)
}

fn monic_polys_of_degree(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(d);
    (0..count).map(move |i| {
        let mut c = digits(i, p, d);
        c.push(1);
        c
    })
}

/// Irreducibility by trial division with every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        if monic_polys_of_degree(p, d).any(|f| poly_rem_is_zero(poly, &f, p)) {
            return false;
        }
    }
    true
}

/// The first monic irreducible of degree `m` when lower coefficients are
/// compared from the highest degree down (equivalently, by the integer
/// `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`).
fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    monic_polys_of_degree(p, m)
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_one_plus_one() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn gf3_inverse_of_two() {
        let f = FiniteField::new(3, 1).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.inv(two).unwrap(), two);
    }

    #[test]
    fn gf4_omega_squared() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let omega = f.from_coeffs(&[0, 1]).unwrap();
        let omega_plus_one = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(omega, omega), omega_plus_one);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = FiniteField::new(5, 1).unwrap();
        assert!(matches!(f.inv(f.zero()), Err(FieldError::DivisionByZero)));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 17).is_err());
        assert!(FiniteField::new(3, 0).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (2, 5), (2, 6)] {
            let f = FiniteField::new(p, m).unwrap();
            assert!(f.size() <= 64);
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // Frobenius is additive on the field.
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.pow(f.add(a, b), p as u64), f.add(f.pow(a, p as u64), f.pow(b, p as u64)));
                }
                assert_eq!(f.pow(a, f.size() as u64), a);
            }
        }
    }

    #[test]
    fn large_field_without_add_table() {
        let f = FiniteField::new(3, 6).unwrap();
        assert_eq!(f.size(), 729);
        let a = f.element(500);
        let b = f.element(321);
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.pow(a, 729), a);
        assert!(is_irreducible(f.modulus(), 3));
    }

    #[test]
    fn coefficients_round_trip() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
    }
}
