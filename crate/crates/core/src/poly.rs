//! Dense univariate polynomials over GF(q), factorization and the order
//! function θ(g) = min { j ≥ 1 : g | 1 − x^j }.
//!
//! One total order is used for every tie-break (enumeration, factor lists,
//! construction): degree first, then coefficient codes compared from the
//! leading term down. For monic polynomials of a fixed degree this is the
//! numeric order of the packed code `Σ c_i q^i`, see [`Poly::from_code`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::numtheory::{self, checked_pow};

/// Seed for equal-degree splitting when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_1e1d;

/// Default bound on the number of candidates scanned by enumerations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Above this φ(T), order-T irreducibles are found by scanning instead of
/// splitting the cyclotomic polynomial.
const CYCLOTOMIC_DEGREE_LIMIT: u64 = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Poly {
    /// Coefficients low degree first; trailing zeros are dropped.
    pub fn new(field: &FieldSpec, coeffs: Vec<Elem>) -> Self {
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, Elem::ONE)
    }

    pub fn constant(field: &FieldSpec, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c · x^k`
    pub fn monomial(field: &FieldSpec, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, Elem::ONE, 1)
    }

    /// `1 − x`
    pub fn one_minus_x(field: &FieldSpec) -> Self {
        Self::new(field, vec![Elem::ONE, field.neg(Elem::ONE)])
    }

    /// The polynomial whose coefficients are the base-q digits of `code`.
    pub fn from_code(field: &FieldSpec, mut code: u64) -> Self {
        let q = field.size() as u64;
        let mut coeffs = Vec::new();
        while code > 0 {
            coeffs.push(Elem((code % q) as u32));
            code /= q;
        }
        Self::new(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn constant_term(&self) -> Elem {
        self.coeff(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    pub fn eval(&self, at: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, at), c))
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Self::new(f, coeffs)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self * other)
    }

    /// Quotient and remainder; the remainder has degree below the divisor's.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[k - dd] = t;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(t, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NoSuchPolynomial(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// `x^e mod self`.
    pub fn x_pow_mod(&self, e: u64) -> Result<Poly> {
        Poly::x(&self.field).pow_mod(e, self)
    }

    /// Degree first, then coefficient codes from the leading term down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Rabin's test: no factor of degree `i ≤ deg/2`, checked via
    /// `gcd(g, x^{q^i} − x)`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let deg = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::DegreeZero),
            Some(d) => d,
        };
        if deg == 1 {
            return Ok(true);
        }
        let q = self.field.size() as u64;
        let x = Poly::x(&self.field);
        let mut h = x.clone();
        for _ in 1..=deg / 2 {
            h = h.pow_mod(q, self)?;
            if !self.gcd(&(&h - &x))?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn factor(&self) -> Result<Factorization> {
        self.factor_with_seed(DEFAULT_SEED)
    }

    /// Squarefree decomposition, distinct-degree then equal-degree splitting.
    /// The seed drives the random splitting elements; the result does not
    /// depend on it.
    pub fn factor_with_seed(&self, seed: u64) -> Result<Factorization> {
        match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::DegreeZero),
            _ => {}
        }
        let unit = self.leading();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors: Vec<(Poly, u32)> = Vec::new();
        for (part, mult) in squarefree_decomposition(&self.monic())? {
            for (block, d) in distinct_degree(&part)? {
                for irr in equal_degree(&block, d, &mut rng)? {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        // a squarefree decomposition never repeats a factor, but merge anyway
        factors.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Ok(Factorization {
            field: self.field.clone(),
            unit,
            factors,
        })
    }

    /// θ(g), computed from the factorization: per irreducible factor the
    /// order divides q^m − 1; coprime parts combine by lcm; multiplicity b
    /// contributes p^t with p^t ≥ b.
    pub fn order(&self) -> Result<u64> {
        self.check_order_input()?;
        if self.degree() == Some(0) {
            return Ok(1);
        }
        let fac = self.factor()?;
        let parts = fac
            .factors
            .iter()
            .map(|(g, b)| Ok((irreducible_order(g)?, *b)))
            .collect::<Result<Vec<_>>>()?;
        combine_orders(self.field.characteristic() as u64, &parts)
    }

    /// θ(g) straight from the definition: the least `j ≤ cap` with
    /// `x^j ≡ 1 (mod g)`.
    pub fn order_by_search(&self, cap: u64) -> Result<u64> {
        self.check_order_input()?;
        if self.degree() == Some(0) {
            return Ok(1);
        }
        let one = Poly::one(&self.field).rem(self)?;
        let x = Poly::x(&self.field);
        let mut h = x.rem(self)?;
        let mut j = 1u64;
        while h != one {
            if j >= cap {
                return Err(Error::CapExceeded { needed: j + 1, cap });
            }
            h = h.mul_mod(&x, self)?;
            j += 1;
        }
        Ok(j)
    }

    fn check_order_input(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(())
    }

    /// Parses a low-degree-first coefficient list. Coefficients are separated
    /// by `,` over prime fields and by `;` over extension fields (whose
    /// element tokens are themselves comma lists).
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Poly> {
        let sep = if field.is_prime_field() { ',' } else { ';' };
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = text
            .split(sep)
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    /// Inverse of [`Poly::parse`]; the zero polynomial prints as `0`.
    pub fn to_list_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sep = if self.field.is_prime_field() {
            ","
        } else {
            ";"
        };
        self.coeffs
            .iter()
            .map(|&c| self.field.format_elem(c))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Poly {
    /// Human form, e.g. `1 + x + x^2`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let f = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                out.write_str(" + ")?;
            }
            first = false;
            let cs = f.format_elem(c);
            let cs = if cs.contains(',') {
                format!("({cs})")
            } else {
                cs
            };
            match (i, c == Elem::ONE) {
                (0, _) => out.write_str(&cs)?,
                (1, true) => out.write_str("x")?,
                (1, false) => write!(out, "{cs}x")?,
                (_, true) => write!(out, "x^{i}")?,
                (_, false) => write!(out, "{cs}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {})", self.field)
    }
}

impl Add for &Poly {
    type Output = Poly;

    /// Panics on mismatched fields; see [`Poly::checked_add`].
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(f, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    /// Panics on mismatched fields; see [`Poly::checked_mul`].
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

/// `unit · Π factor^multiplicity` with monic irreducible factors in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    field: FieldSpec,
    pub unit: Elem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn reconstruct(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(&self.field, self.unit), |acc, (g, b)| {
                &acc * &g.pow(*b as u64)
            })
    }

    /// Multiplicity of `g`, zero when absent.
    pub fn multiplicity(&self, g: &Poly) -> u32 {
        let g = g.monic();
        self.factors
            .iter()
            .find(|(h, _)| *h == g)
            .map_or(0, |(_, b)| *b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, b)| b == 1)
    }
}

/// Splits a monic polynomial into pairwise coprime squarefree parts with
/// their multiplicities.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let field = f.field();
    let p = field.characteristic();
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?;
        if z.degree() > Some(0) {
            out.push((z, i));
        }
        w = y;
        c = c.exact_div(&w)?;
        i += 1;
    }
    if c.degree() > Some(0) {
        // c is a polynomial in x^p: take the p-th root coefficient-wise
        let root_coeffs = c
            .coeffs()
            .iter()
            .step_by(p as usize)
            .map(|&a| field.pth_root(a))
            .collect();
        let root = Poly::new(field, root_coeffs);
        for (g, m) in squarefree_decomposition(&root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Groups the irreducible factors of a monic squarefree polynomial by
/// degree: returns `(product of all degree-d factors, d)`.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let q = field.size() as u64;
    let x = Poly::x(field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = rest.gcd(&(&h - &x))?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor–Zassenhaus: splits a monic squarefree product of degree-`d`
/// irreducibles into its factors.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field.size() as u64;
    let one = Poly::one(field);
    loop {
        let a = Poly::new(
            field,
            (0..n)
                .map(|_| Elem(rng.gen_range(0..field.size())))
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd(&a)?;
        let candidate = if !g.is_one() {
            g
        } else if field.characteristic() == 2 {
            // absolute trace to GF(2): Σ a^{2^j}, j < m·d
            let steps = field.degree() as usize * d;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                t = t.mul_mod(&t, f)?;
                acc = &acc + &t;
            }
            f.gcd(&acc)?
        } else {
            // a^{(q^d - 1)/2} = (Π_{j<d} a^{q^j})^{(q - 1)/2}
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = t.pow_mod(q, f)?;
                norm = norm.mul_mod(&t, f)?;
            }
            let b = norm.pow_mod((q - 1) / 2, f)?;
            f.gcd(&(&b - &one))?
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let other = f.exact_div(&candidate)?;
            let mut out = equal_degree(&candidate, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

/// Order of an irreducible `g` with `g(0) ≠ 0`: the order of `x` in
/// GF(q)[x]/(g), which divides q^m − 1.
pub fn irreducible_order(g: &Poly) -> Result<u64> {
    g.check_order_input()?;
    let m = match g.degree() {
        Some(0) => return Ok(1),
        Some(m) => m,
        None => return Err(Error::ZeroPolynomial),
    };
    let q = g.field().size() as u64;
    let group = checked_pow(q, m as u32)? - 1;
    let one = Poly::one(g.field()).rem(g)?;
    let mut failure = None;
    let order = numtheory::order_in_group(group, |k| match g.x_pow_mod(k) {
        Ok(h) => h == one,
        Err(e) => {
            failure = Some(e);
            false
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(order),
    }
}

/// Combines `(order of irreducible, multiplicity)` pairs into the order of
/// their product: lcm of the orders times p^t with t minimal such that
/// p^t ≥ max multiplicity.
pub fn combine_orders(p: u64, parts: &[(u64, u32)]) -> Result<u64> {
    let mut acc = 1u64;
    let mut max_mult = 0u32;
    for &(ord, b) in parts {
        if b == 0 {
            continue;
        }
        acc = numtheory::lcm(acc, ord)?;
        max_mult = max_mult.max(b);
    }
    let mut pt = 1u64;
    while pt < max_mult as u64 {
        pt = pt
            .checked_mul(p)
            .ok_or_else(|| Error::OutOfRange("p-power in order".into()))?;
    }
    acc.checked_mul(pt)
        .ok_or_else(|| Error::OutOfRange("order exceeds 64 bits".into()))
}

/// Number of monic degree-`m` candidates, or `CapExceeded`.
fn monic_count(field: &FieldSpec, m: usize, cap: u64) -> Result<u64> {
    let n = (field.size() as u64)
        .checked_pow(m as u32)
        .filter(|&n| n <= cap)
        .ok_or(Error::CapExceeded {
            needed: (field.size() as u64).saturating_pow(m as u32),
            cap,
        })?;
    Ok(n)
}

/// Monic degree-`m` polynomials in canonical order.
fn monic_candidates(field: &FieldSpec, count: u64) -> impl Iterator<Item = Poly> + '_ {
    (count..2 * count).map(move |code| Poly::from_code(field, code))
}

/// First monic irreducible of degree `m` in canonical order (no cap: one is
/// found within the first q^m/m candidates or so).
pub fn first_irreducible(field: &FieldSpec, m: usize) -> Result<Poly> {
    if m == 0 {
        return Err(Error::DegreeZero);
    }
    let start = checked_pow(field.size() as u64, m as u32)?;
    for code in start..2 * start {
        let g = Poly::from_code(field, code);
        if g.is_irreducible()? {
            return Ok(g);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// All monic irreducibles of degree `m`, canonical order.
pub fn irreducibles(field: &FieldSpec, m: usize) -> Result<Vec<Poly>> {
    irreducibles_with_cap(field, m, DEFAULT_ENUMERATION_CAP)
}

pub fn irreducibles_with_cap(field: &FieldSpec, m: usize, cap: u64) -> Result<Vec<Poly>> {
    if m == 0 {
        return Err(Error::DegreeZero);
    }
    let count = monic_count(field, m, cap)?;
    let mut out = Vec::new();
    for g in monic_candidates(field, count) {
        if g.is_irreducible()? {
            out.push(g);
        }
    }
    Ok(out)
}

/// δ(m, e) in closed form: φ(e)/m when m is the multiplicative order of q
/// modulo e, otherwise 0.
pub fn count_irreducibles_of_order(field: &FieldSpec, m: usize, e: u64) -> Result<u64> {
    if e < 2 {
        return Err(Error::OutOfRange(format!("order {e} < 2")));
    }
    let q = field.size() as u64;
    let ord = numtheory::multiplicative_order(q, e)?;
    if ord != m as u64 {
        return Ok(0);
    }
    Ok(numtheory::euler_phi(e)? / m as u64)
}

fn check_order_target(field: &FieldSpec, m: usize, t: u64) -> Result<bool> {
    if t < 2 {
        return Err(Error::OutOfRange(format!("order {t} < 2")));
    }
    if m == 0 {
        return Err(Error::DegreeZero);
    }
    let q = field.size() as u64;
    Ok(numtheory::multiplicative_order(q, t)? == m as u64)
}

/// `x^t ≡ 1 (mod g)` and no proper divisor `t/ℓ` works.
fn has_exact_order(g: &Poly, t: u64, primes: &[u64]) -> Result<bool> {
    if g.constant_term().is_zero() {
        return Ok(false);
    }
    let one = Poly::one(g.field());
    if !g.x_pow_mod(t)?.eq(&one) {
        return Ok(false);
    }
    for &l in primes {
        if g.x_pow_mod(t / l)? == one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The canonically smallest monic irreducible of degree `m` and order `t`.
pub fn irreducible_of_order(field: &FieldSpec, m: usize, t: u64) -> Result<Poly> {
    irreducible_of_order_with_cap(field, m, t, DEFAULT_ENUMERATION_CAP)
}

pub fn irreducible_of_order_with_cap(
    field: &FieldSpec,
    m: usize,
    t: u64,
    cap: u64,
) -> Result<Poly> {
    if !check_order_target(field, m, t)? {
        return Err(Error::NoSuchPolynomial(format!(
            "no irreducible of degree {m} and order {t} over {field}"
        )));
    }
    let primes: Vec<u64> = numtheory::factorize(t)?.primes().collect();
    let count = (field.size() as u64)
        .checked_pow(m as u32)
        .unwrap_or(u64::MAX);
    for (scanned, g) in monic_candidates(field, count).enumerate() {
        if scanned as u64 >= cap {
            return Err(Error::CapExceeded { needed: count, cap });
        }
        // products such as (1+x)(1+x+x^2)(1+x+x^3) over GF(2) reach order 21
        // in degree ord_21(2) = 6, so irreducibility is checked separately
        if has_exact_order(&g, t, &primes)? && g.is_irreducible()? {
            return Ok(g);
        }
    }
    unreachable!("δ(m, t) > 0 guarantees a candidate")
}

/// Every monic irreducible of degree `m` and order `t`, canonical order.
///
/// These are exactly the irreducible factors of the cyclotomic polynomial
/// Φ_t; small φ(t) splits Φ_t directly, larger ones fall back to a scan of
/// the q^m monic candidates (bounded by `cap`).
pub fn irreducibles_of_order(field: &FieldSpec, m: usize, t: u64, cap: u64) -> Result<Vec<Poly>> {
    if !check_order_target(field, m, t)? {
        return Ok(Vec::new());
    }
    let phi = numtheory::euler_phi(t)?;
    let mut out = if phi <= CYCLOTOMIC_DEGREE_LIMIT {
        let cyc = cyclotomic(field, t)?;
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        equal_degree(&cyc, m, &mut rng)?
    } else {
        let count = monic_count(field, m, cap)?;
        let primes: Vec<u64> = numtheory::factorize(t)?.primes().collect();
        let mut found = Vec::new();
        for g in monic_candidates(field, count) {
            if has_exact_order(&g, t, &primes)? && g.is_irreducible()? {
                found.push(g);
            }
        }
        found
    };
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// Φ_n over GF(q) for `gcd(n, q) = 1`, via Π_{d | n} (x^d − 1)^{μ(n/d)}.
pub fn cyclotomic(field: &FieldSpec, n: u64) -> Result<Poly> {
    let q = field.size() as u64;
    if n == 0 || numtheory::gcd(n, q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    let x_pow_minus_one = |d: u64| -> Poly {
        let mut p = Poly::monomial(field, Elem::ONE, d as usize);
        p = &p - &Poly::one(field);
        p
    };
    let mut num = Poly::one(field);
    let mut den = Poly::one(field);
    for d in numtheory::divisors(n)? {
        match mobius(n / d)? {
            1 => num = &num * &x_pow_minus_one(d),
            -1 => den = &den * &x_pow_minus_one(d),
            _ => {}
        }
    }
    num.exact_div(&den)
}

fn mobius(n: u64) -> Result<i32> {
    let fac = numtheory::factorize(n)?;
    if fac.pairs().iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if fac.pairs().len() % 2 == 0 { 1 } else { -1 })
}
