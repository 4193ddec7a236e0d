//! Exact 64-bit integer number theory: totient, divisors, factorization and
//! multiplicative order.
//!
//! Factorization is trial division up to [`TRIAL_DIVISION_LIMIT`], then
//! Miller-Rabin plus Brent's variant of Pollard rho driven by a fixed-seed
//! generator, so results and running time are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

const RHO_SEED: u64 = 0x6c72_735f_7268_6f00;

/// Prime-power factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimePowerFactorization(Vec<(u64, u32)>);

impl PrimePowerFactorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u128 {
        self.0.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| Error::OutOfRange(format!("lcm({a}, {b})")))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `base^exp` or `OutOfRange` when it does not fit in 64 bits.
pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::OutOfRange(format!("{base}^{exp}")))
}

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle-finding rho. `n` must be odd and composite.
fn rho_split(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let m = 128;
        let mut g = 1;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = y;
        let mut ys = y;
        let f = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot; retrace one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn push_factor(out: &mut Vec<u64>, n: u64, rng: &mut ChaCha8Rng) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_split(n, rng);
    push_factor(out, d, rng);
    push_factor(out, n / d, rng);
}

/// Exact prime-power factorization of `n ≥ 1`; empty for `n = 1`.
pub fn factorize(n: u64) -> Result<PrimePowerFactorization> {
    if n == 0 {
        return Err(Error::OutOfRange("factorize(0)".into()));
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT && d * d <= rest {
        while rest.is_multiple_of(d) {
            primes.push(d);
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if d * d > rest {
            primes.push(rest);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
            push_factor(&mut primes, rest, &mut rng);
        }
    }
    primes.sort_unstable();
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match pairs.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    Ok(PrimePowerFactorization(pairs))
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let fac = factorize(n)?;
    Ok(fac.pairs().iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fac = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in fac.pairs() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Smallest `m ≥ 1` with `q^m ≡ 1 (mod e)`.
///
/// Starts from φ(e) and strips prime factors while the congruence survives.
pub fn multiplicative_order(q: u64, e: u64) -> Result<u64> {
    if e == 0 {
        return Err(Error::OutOfRange("modulus 0".into()));
    }
    if gcd(q, e) != 1 {
        return Err(Error::NotCoprime(q, e));
    }
    if e == 1 {
        return Ok(1);
    }
    order_in_group(euler_phi(e)?, |k| pow_mod(q, k, e) == 1)
}

/// Order of an element in a group whose exponent divides `group_exponent`,
/// given a predicate telling whether `g^k` is the identity.
pub(crate) fn order_in_group(
    group_exponent: u64,
    mut is_identity: impl FnMut(u64) -> bool,
) -> Result<u64> {
    let mut order = group_exponent;
    for p in factorize(group_exponent)?.primes() {
        while order.is_multiple_of(p) && is_identity(order / p) {
            order /= p;
        }
    }
    Ok(order)
}
