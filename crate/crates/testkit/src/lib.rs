//! Slow, obviously-correct reference implementations over prime fields.
//!
//! Nothing here depends on `lrs-core`. Polynomials are plain `Vec<u64>`
//! coefficient lists, lowest degree first, with entries in `0..p`.
//! Recurrences are simulated symbol by symbol and cycles are found by
//! walking every state.

use std::collections::BTreeSet;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// φ(n) by counting.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Smallest `k ≥ 1` with `q^k ≡ 1 (mod e)`, found by stepping.
pub fn multiplicative_order(q: u64, e: u64) -> u64 {
    assert_eq!(gcd(q, e), 1);
    if e == 1 {
        return 1;
    }
    let mut acc = q % e;
    let mut k = 1;
    while acc != 1 {
        acc = acc * q % e;
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducibles of degree `m` over GF(q) (necklace formula).
pub fn irreducible_count(q: u64, m: u32) -> u64 {
    let total: i64 = (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .map(|d| mobius(d as u64) * q.pow(m / d) as i64)
        .sum();
    (total / m as i64) as u64
}

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub fn pow(p: u64, a: &[u64], e: u32) -> Vec<u64> {
    (0..e).fold(vec![1], |acc, _| mul(p, &acc, a))
}

fn inv(p: u64, a: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero element")
}

/// Remainder of `a` modulo nonzero `b`, by schoolbook long division.
pub fn rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = degree(b).expect("nonzero divisor");
    let lead_inv = inv(p, b[db]);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * lead_inv % p;
        for i in 0..=db {
            r[dr - db + i] = (r[dr - db + i] + p - c * b[i] % p) % p;
        }
        r = trim(r);
    }
    r
}

/// All monic polynomials of exact degree `m`, in counting order.
pub fn monic_polys(p: u64, m: usize) -> Vec<Vec<u64>> {
    let count = p.pow(m as u32);
    (0..count)
        .map(|mut code| {
            let mut v = Vec::with_capacity(m + 1);
            for _ in 0..m {
                v.push(code % p);
                code /= p;
            }
            v.push(1);
            v
        })
        .collect()
}

/// Irreducible iff no monic polynomial of degree `1..=deg/2` divides it.
pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let Some(n) = degree(f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    (1..=n / 2).all(|d| monic_polys(p, d).iter().all(|g| !rem(p, f, g).is_empty()))
}

/// Least `j ≥ 1` with `g | x^j − 1`, by multiplying by x until the residue is 1.
pub fn order(p: u64, g: &[u64]) -> u64 {
    assert!(!g[0].is_multiple_of(p), "order needs g(0) != 0");
    let n = degree(g).unwrap();
    if n == 0 {
        return 1;
    }
    let mut acc = rem(p, &[0, 1], g);
    let mut j = 1;
    while acc != [1] {
        acc = rem(p, &mul(p, &acc, &[0, 1]), g);
        j += 1;
        assert!(j <= p.pow(n as u32), "no order found");
    }
    j
}

/// Every degree-`r` polynomial with constant term 1, in counting order.
pub fn char_polys(p: u64, r: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 1..p {
        for mid in 0..p.pow(r.saturating_sub(1) as u32) {
            let mut f = vec![1];
            let mut code = mid;
            for _ in 1..r {
                f.push(code % p);
                code /= p;
            }
            f.push(lead);
            out.push(f);
        }
    }
    out
}

/// Recurrence taps `c_i = −f_i` for `f = 1 − Σ c_i x^i`.
pub fn taps(p: u64, f: &[u64]) -> Vec<u64> {
    f[1..].iter().map(|&a| (p - a % p) % p).collect()
}

/// One shift: `(a_{−r}, …, a_{−1}) ↦ (a_{−r+1}, …, a_0)`.
pub fn step(p: u64, c: &[u64], state: &[u64]) -> Vec<u64> {
    let r = state.len();
    let next = (1..=r).map(|i| c[i - 1] * state[r - i]).sum::<u64>() % p;
    let mut out = state[1..].to_vec();
    out.push(next);
    out
}

/// `a_0 … a_{n−1}` produced from the given initial state.
pub fn sequence(p: u64, f: &[u64], state: &[u64], n: usize) -> Vec<u64> {
    let c = taps(p, f);
    let mut s = state.to_vec();
    (0..n)
        .map(|_| {
            s = step(p, &c, &s);
            *s.last().unwrap()
        })
        .collect()
}

pub fn all_states(p: u64, r: usize) -> Vec<Vec<u64>> {
    (0..p.pow(r as u32))
        .map(|mut code| {
            let mut s = vec![0; r];
            for slot in s.iter_mut().rev() {
                *slot = code % p;
                code /= p;
            }
            s
        })
        .collect()
}

/// Sorted multiset of cycle lengths of the state graph of `f`.
pub fn cycle_lengths(p: u64, f: &[u64]) -> Vec<u64> {
    let r = f.len() - 1;
    let c = taps(p, f);
    let states = all_states(p, r);
    let index = |s: &[u64]| s.iter().fold(0u64, |acc, &a| acc * p + a) as usize;
    let mut seen = vec![false; states.len()];
    let mut lengths = Vec::new();
    for start in &states {
        if seen[index(start)] {
            continue;
        }
        let mut s = start.clone();
        let mut len = 0;
        loop {
            seen[index(&s)] = true;
            s = step(p, &c, &s);
            len += 1;
            if s == *start {
                break;
            }
            assert!(!seen[index(&s)], "state map is not a permutation");
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

pub fn period_set(p: u64, f: &[u64]) -> BTreeSet<u64> {
    cycle_lengths(p, f).into_iter().collect()
}

/// `Some(T)` when the cycle-length set is exactly `{1, T}`.
pub fn biperiod(p: u64, f: &[u64]) -> Option<u64> {
    let set: Vec<u64> = period_set(p, f).into_iter().collect();
    match set.as_slice() {
        [1, t] => Some(*t),
        _ => None,
    }
}

/// Cycles of `f` as lists of concatenated-digit strings, each rotated to
/// start at its smallest state. Prime fields with `p ≤ 9` only.
pub fn cycles_as_strings(p: u64, f: &[u64]) -> BTreeSet<Vec<String>> {
    assert!(p <= 9);
    let r = f.len() - 1;
    let c = taps(p, f);
    let show = |s: &[u64]| s.iter().map(|d| d.to_string()).collect::<String>();
    let mut out = BTreeSet::new();
    for start in all_states(p, r) {
        let mut cyc = vec![show(&start)];
        let mut s = step(p, &c, &start);
        while s != start {
            cyc.push(show(&s));
            s = step(p, &c, &s);
        }
        let min = cyc
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| v.as_str())
            .unwrap()
            .0;
        cyc.rotate_left(min);
        out.insert(cyc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_facts() {
        assert_eq!(totient(12), 4);
        assert_eq!(multiplicative_order(2, 15), 4);
        assert_eq!(irreducible_count(2, 4), 3);
        assert_eq!(irreducible_count(3, 2), 3);
        assert!(is_irreducible(2, &[1, 1, 0, 1]));
        assert!(!is_irreducible(2, &[1, 0, 1]));
        assert_eq!(order(2, &[1, 1, 1, 1, 1]), 5);
        assert_eq!(cycle_lengths(2, &[1, 1, 1, 1, 1]), [1, 5, 5, 5]);
        assert_eq!(char_polys(3, 2).len(), 6);
        assert_eq!(sequence(2, &[1, 1], &[1], 3), [1, 1, 1]);
    }
}
