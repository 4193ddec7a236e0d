//! Arithmetic in GF(p^m).
//!
//! Elements are packed integer codes: the coefficient of `α^i` (α a root of
//! the modulus) is the base-`p` digit `i`. In characteristic 2 that is a
//! plain bit vector, so addition is xor and multiplication is a carry-less
//! product followed by reduction. Code order is the canonical element order
//! (zero first, then ascending representation).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::poly::Poly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Raw element code, meaningful only together with its [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, low degree first, length m + 1. Present iff m > 1.
    modulus: Option<Vec<u32>>,
    /// Modulus bits without the leading term, characteristic 2 only.
    modulus_bits: u32,
}

/// A validated description of GF(p^m). Cheap to clone; equality is
/// structural on (p, m, modulus).
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.m.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "GF({})", self.0.p),
            Some(m) => {
                let coeffs: Vec<String> = m.iter().map(u32::to_string).collect();
                write!(
                    f,
                    "GF({}^{}) mod [{}]",
                    self.0.p,
                    self.0.m,
                    coeffs.join(",")
                )
            }
        }
    }
}

impl FieldSpec {
    /// GF(p) for a prime `p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Builds GF(p^m). For `m > 1` the modulus, when given, must be a monic
    /// irreducible of degree `m` over GF(p) (coefficients low degree first).
    /// When omitted, the first monic irreducible of degree `m` in
    /// [`Poly::canonical_cmp`] order is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !numtheory::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let q = (p as u128)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_SIZE as u128);
        let q =
            q.ok_or_else(|| Error::OutOfRange(format!("{p}^{m} exceeds {MAX_FIELD_SIZE}")))? as u32;
        let p = p as u32;
        if m == 1 {
            if let Some(md) = modulus {
                // a degree-1 modulus carries no information; accept x + c only
                if md.len() != 2 || md[1] != 1 || md[0] >= p {
                    return Err(Error::DegreeMismatch {
                        expected: 1,
                        found: md.len().saturating_sub(1),
                    });
                }
            }
            return Ok(Self::from_parts(p, 1, q, None));
        }
        let base = Self::from_parts(p, 1, p, None);
        let modulus = match modulus {
            Some(md) => {
                let mut md = md.to_vec();
                while md.last() == Some(&0) {
                    md.pop();
                }
                if md.len() != m as usize + 1 || md[m as usize] != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        found: md.len().saturating_sub(1),
                    });
                }
                if md.iter().any(|&c| c >= p) {
                    return Err(Error::Parse(format!(
                        "modulus coefficient not reduced mod {p}"
                    )));
                }
                let poly = Poly::new(&base, md.iter().map(|&c| Elem(c)).collect());
                if !poly.is_irreducible()? {
                    return Err(Error::ReducibleModulus(p));
                }
                md
            }
            None => crate::poly::first_irreducible(&base, m as usize)?
                .coeffs()
                .iter()
                .map(|e| e.0)
                .collect(),
        };
        Ok(Self::from_parts(p, m, q, Some(modulus)))
    }

    /// GF(q) from the field size alone, with the default modulus.
    pub fn with_size(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, m, None)
    }

    fn from_parts(p: u32, m: u32, q: u32, modulus: Option<Vec<u32>>) -> Self {
        let modulus_bits = match (&modulus, p) {
            (Some(md), 2) => md[..m as usize]
                .iter()
                .enumerate()
                .fold(0u32, |acc, (i, &c)| acc | (c << i)),
            _ => 0,
        };
        FieldSpec(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            modulus_bits,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    /// GF(p) coefficients of `a`, low degree first, length m.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        let p = self.0.p;
        Elem(digits.iter().rev().fold(0u32, |acc, &d| acc * p + d))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 || a.is_zero() {
            return a;
        }
        if self.0.m == 1 {
            return Elem(p - a.0);
        }
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (p - x) % p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.m == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % inner.p as u64) as u32);
        }
        if inner.p == 2 {
            return Elem(self.mul_char2(a.0, b.0));
        }
        let p = inner.p as u64;
        let m = inner.m as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let md = inner
            .modulus
            .as_ref()
            .expect("extension field has a modulus");
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // x^k = x^{k-m} * x^m and x^m = -(md[0] + ... + md[m-1] x^{m-1})
            for (i, &mc) in md[..m].iter().enumerate() {
                let t = c * mc as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - t) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    fn mul_char2(&self, mut a: u32, b: u32) -> u32 {
        let m = self.0.m;
        let top = 1u32 << m;
        let mut acc = 0u32;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= top | self.0.modulus_bits;
            }
        }
        acc
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique `b` with `b^p = a` (Frobenius is an automorphism).
    pub fn pth_root(&self, a: Elem) -> Elem {
        // a^{p^{m-1}}
        let mut r = a;
        for _ in 1..self.0.m {
            r = self.pow(r, self.0.p as u64);
        }
        r
    }

    /// Text form: an integer for prime fields, a comma-separated GF(p)
    /// coefficient list (low degree first) for extension fields.
    pub fn format_elem(&self, a: Elem) -> String {
        if self.is_prime_field() {
            return a.0.to_string();
        }
        let mut d = self.digits(a);
        while d.len() > 1 && d.last() == Some(&0) {
            d.pop();
        }
        d.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn parse_elem(&self, token: &str) -> Result<Elem> {
        let token = token.trim();
        let bad = || Error::Parse(format!("invalid element {token:?} for {self}"));
        let parse_digit = |s: &str| -> Result<u32> {
            let v: i64 = s.trim().parse().map_err(|_| bad())?;
            if self.is_prime_field() {
                return Ok(self.from_int(v).0);
            }
            if !(0..self.0.p as i64).contains(&v) {
                return Err(bad());
            }
            Ok(v as u32)
        };
        if self.is_prime_field() {
            return Ok(Elem(parse_digit(token)?));
        }
        let digits = token
            .split(',')
            .map(parse_digit)
            .collect::<Result<Vec<_>>>()?;
        if digits.len() > self.0.m as usize {
            return Err(bad());
        }
        Ok(self.from_digits(&digits))
    }

    pub fn element(&self, a: Elem) -> Result<FieldElement> {
        if !self.contains(a) {
            return Err(Error::Parse(format!("code {} outside {self}", a.0)));
        }
        Ok(FieldElement {
            field: self.clone(),
            value: a,
        })
    }
}

/// `q = p^m` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fac = numtheory::factorize(q).ok()?;
    match fac.pairs() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// An element bundled with its field, for checked arithmetic across API
/// boundaries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldSpec,
    value: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: Elem) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(self.field.pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<FieldSpec> {
        [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16]
            .iter()
            .map(|&q| FieldSpec::with_size(q).unwrap())
            .collect()
    }

    #[test]
    fn construction() {
        let f2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f2.size(), 2);
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(FieldSpec::new(3, 1, None).unwrap().size(), 3);
        assert_eq!(FieldSpec::new(4, 1, None), Err(Error::NotPrime(4)));
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(2))
        );
        assert!(matches!(
            FieldSpec::new(2, 3, Some(&[1, 1, 1])),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(FieldSpec::new(2, 21, None).is_err());
    }

    #[test]
    fn default_moduli() {
        assert_eq!(
            FieldSpec::new(3, 2, None).unwrap().modulus(),
            Some(&[1, 0, 1][..])
        );
        assert_eq!(
            FieldSpec::new(2, 3, None).unwrap().modulus(),
            Some(&[1, 1, 0, 1][..])
        );
    }

    #[test]
    fn small_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.add(Elem(1), Elem(1)), Elem(0));
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.inv(Elem(2)).unwrap(), Elem(2));
        let f4 = FieldSpec::with_size(4).unwrap();
        let x = f4.parse_elem("0,1").unwrap();
        assert_eq!(f4.format_elem(f4.mul(x, x)), "1,1");
        assert_eq!(f4.inv(Elem(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn element_order() {
        let f4 = FieldSpec::with_size(4).unwrap();
        let shown: Vec<String> = f4.elements().map(|a| f4.format_elem(a)).collect();
        assert_eq!(shown, ["0", "1", "0,1", "1,1"]);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(
            f3.elements().collect::<Vec<_>>(),
            vec![Elem(0), Elem(1), Elem(2)]
        );
    }

    #[test]
    fn field_axioms_small_fields() {
        for f in small_fields() {
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(f.inv(a).unwrap(), a), Elem::ONE, "{f}");
                    assert_eq!(f.pow(a, f.size() as u64 - 1), Elem::ONE, "{f}");
                    assert_eq!(f.pow(f.pth_root(a), f.characteristic() as u64), a);
                }
            }
            // sampled triples
            for (i, &a) in els.iter().enumerate() {
                let b = els[(i * 7 + 3) % els.len()];
                let c = els[(i * 5 + 1) % els.len()];
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
            // the multiplicative group has q - 1 elements and is closed
            let nonzero: std::collections::BTreeSet<Elem> =
                els.iter().filter(|a| !a.is_zero()).copied().collect();
            assert_eq!(nonzero.len() as u32, f.size() - 1);
            let g = *nonzero.iter().next_back().unwrap();
            assert!(nonzero.iter().all(|&a| nonzero.contains(&f.mul(a, g))));
        }
    }

    #[test]
    fn checked_elements() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f5 = FieldSpec::prime(5).unwrap();
        let a = f3.element(Elem(2)).unwrap();
        let b = f5.element(Elem(2)).unwrap();
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&a).unwrap().to_string(), "1");
        assert_eq!(a.inv().unwrap().value(), Elem(2));
        assert_eq!(a.neg().to_string(), "1");
        assert_eq!(a.pow(2).to_string(), "1");
    }

    #[test]
    fn structural_equality() {
        let a = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let b = FieldSpec::new(2, 3, None).unwrap();
        let c = FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_elements() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_elem("-1").unwrap(), Elem(4));
        assert_eq!(f5.parse_elem("7").unwrap(), Elem(2));
        assert!(f5.parse_elem("x").is_err());
        let f9 = FieldSpec::with_size(9).unwrap();
        assert_eq!(f9.parse_elem("2,1").unwrap(), Elem(2 + 3));
        assert!(f9.parse_elem("3").is_err());
        assert!(f9.parse_elem("1,1,1").is_err());
    }
}
