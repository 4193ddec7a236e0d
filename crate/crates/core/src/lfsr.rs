//! The shift-register state machine `a_n = Σ c_i a_{n−i}` over GF(q).
//!
//! A state `(a_{−r}, …, a_{−1})` is stored oldest symbol first. With
//! `c_r ≠ 0` the transition map is a bijection of GF(q)^r, so the state
//! space splits into disjoint cycles and every sequence is purely periodic.
//!
//! States are also addressed by their index: the base-q number whose most
//! significant digit is `a_{−r}`. Index order is the lexicographic state
//! order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::poly::Poly;

/// Default bound on q^r for full state-space enumeration.
pub const DEFAULT_STATE_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State(pub Vec<Elem>);

impl State {
    pub fn zero(r: usize) -> Self {
        State(vec![Elem::ZERO; r])
    }

    /// `(β, …, β)`
    pub fn constant(r: usize, beta: Elem) -> Self {
        State(vec![beta; r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }
}

/// Coefficients `c_1..c_r` with `c_r ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    field: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Recurrence {
    pub fn new(field: &FieldSpec, coeffs: Vec<Elem>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::DegreeZero),
            Some(c) if c.is_zero() => Err(Error::ZeroLastCoefficient),
            Some(_) => {
                if let Some(bad) = coeffs.iter().find(|c| !field.contains(**c)) {
                    return Err(Error::Parse(format!("code {} outside {field}", bad.0)));
                }
                Ok(Recurrence {
                    field: field.clone(),
                    coeffs,
                })
            }
        }
    }

    /// Recurrence whose characteristic polynomial `1 − Σ c_i x^i` is `f`.
    pub fn from_char_poly(f: &Poly) -> Result<Self> {
        if f.constant_term() != Elem::ONE {
            return Err(Error::BadConstantTerm);
        }
        let r = f.degree().unwrap_or(0);
        if r == 0 {
            return Err(Error::DegreeZero);
        }
        let field = f.field();
        let coeffs = (1..=r).map(|i| field.neg(f.coeff(i))).collect();
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// `c_1..c_r`
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn char_poly(&self) -> Poly {
        let f = &self.field;
        let mut c = vec![Elem::ONE];
        c.extend(self.coeffs.iter().map(|&ci| f.neg(ci)));
        Poly::new(f, c)
    }

    /// q^r, or `None` on overflow.
    pub fn state_count(&self) -> Option<u64> {
        (self.field.size() as u64).checked_pow(self.order() as u32)
    }

    fn check_len(&self, s: &State) -> Result<()> {
        if s.len() != self.order() {
            return Err(Error::LengthMismatch {
                expected: self.order(),
                found: s.len(),
            });
        }
        Ok(())
    }

    /// `Σ c_i a_{−i}` for the state held in `s`.
    fn next_symbol(&self, s: &[Elem]) -> Elem {
        let f = &self.field;
        let r = s.len();
        self.coeffs
            .iter()
            .enumerate()
            .fold(Elem::ZERO, |acc, (i, &c)| {
                f.add(acc, f.mul(c, s[r - 1 - i]))
            })
    }

    pub fn step(&self, s: &State) -> Result<State> {
        self.check_len(s)?;
        let next = self.next_symbol(&s.0);
        let mut out = s.0[1..].to_vec();
        out.push(next);
        Ok(State(out))
    }

    /// The unique state leading to `s`.
    pub fn predecessor(&self, s: &State) -> Result<State> {
        self.check_len(s)?;
        let f = &self.field;
        let r = self.order();
        let y = &s.0;
        // y_r = Σ_{i<r} c_i y_{r−i} + c_r b
        let partial = (1..r).fold(Elem::ZERO, |acc, i| {
            f.add(acc, f.mul(self.coeffs[i - 1], y[r - 1 - i]))
        });
        let b = f.div(f.sub(y[r - 1], partial), self.coeffs[r - 1])?;
        let mut out = Vec::with_capacity(r);
        out.push(b);
        out.extend_from_slice(&y[..r - 1]);
        Ok(State(out))
    }

    /// `a_0 … a_{n−1}` of the sequence started from `s`.
    pub fn generate(&self, s: &State, n: usize) -> Result<Vec<Elem>> {
        self.check_len(s)?;
        let mut window = s.0.clone();
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = self.next_symbol(&window);
            window.remove(0);
            window.push(next);
            out.push(next);
        }
        Ok(out)
    }

    /// Length of the cycle through `s`, which is the period of its sequence.
    /// Walks only that cycle.
    pub fn period_of(&self, s: &State) -> Result<u64> {
        self.check_len(s)?;
        let start = &s.0;
        let mut window = start.clone();
        let mut n = 0u64;
        loop {
            let next = self.next_symbol(&window);
            window.rotate_left(1);
            *window.last_mut().expect("r >= 1") = next;
            n += 1;
            if window == *start {
                return Ok(n);
            }
        }
    }

    pub fn state_index(&self, s: &State) -> Result<u64> {
        self.check_len(s)?;
        let q = self.field.size() as u64;
        Ok(s.0.iter().fold(0u64, |acc, e| acc * q + e.0 as u64))
    }

    pub fn state_from_index(&self, mut idx: u64) -> State {
        let q = self.field.size() as u64;
        let mut v = vec![Elem::ZERO; self.order()];
        for slot in v.iter_mut().rev() {
            *slot = Elem((idx % q) as u32);
            idx /= q;
        }
        State(v)
    }

    /// D(x; s) with `d_j = Σ_{k=1}^{r−j} c_{j+k} a_{−k}`, so that
    /// D(x; s)/f(x) is the generating function of the sequence from `s`.
    pub fn numerator_poly(&self, s: &State) -> Result<Poly> {
        self.check_len(s)?;
        let f = &self.field;
        let r = self.order();
        let a_neg = |k: usize| s.0[r - k];
        let d = (0..r)
            .map(|j| {
                (1..=r - j).fold(Elem::ZERO, |acc, k| {
                    f.add(acc, f.mul(self.coeffs[j + k - 1], a_neg(k)))
                })
            })
            .collect();
        Ok(Poly::new(f, d))
    }

    /// The unique state with `numerator_poly(s) = h`, by back-substitution
    /// from `a_{−1}` outwards.
    pub fn state_for_numerator(&self, h: &Poly) -> Result<State> {
        if h.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let r = self.order();
        if let Some(deg) = h.degree().filter(|&d| d >= r) {
            return Err(Error::DegreeTooHigh {
                max: r - 1,
                found: deg,
            });
        }
        let f = &self.field;
        let cr_inv = f.inv(self.coeffs[r - 1])?;
        // a_neg[k] = a_{−k}
        let mut a_neg = vec![Elem::ZERO; r + 1];
        for i in 1..=r {
            let known = (1..i).fold(Elem::ZERO, |acc, k| {
                f.add(acc, f.mul(self.coeffs[r - i + k - 1], a_neg[k]))
            });
            a_neg[i] = f.mul(cr_inv, f.sub(h.coeff(r - i), known));
        }
        Ok(State((1..=r).rev().map(|k| a_neg[k]).collect()))
    }
}

/// First `n` coefficients of the power series `numerator / denominator`.
pub fn expand_series(numerator: &Poly, denominator: &Poly, n: usize) -> Result<Vec<Elem>> {
    if numerator.field() != denominator.field() {
        return Err(Error::FieldMismatch);
    }
    if denominator.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = denominator.field();
    let d0_inv = f
        .inv(denominator.constant_term())
        .map_err(|_| Error::ZeroConstantTerm)?;
    let dd = denominator.degree().unwrap_or(0);
    let mut out: Vec<Elem> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = numerator.coeff(k);
        for i in 1..=dd.min(k) {
            acc = f.sub(acc, f.mul(denominator.coeff(i), out[k - i]));
        }
        out.push(f.mul(acc, d0_inv));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest admissible q^r.
    pub cap: u64,
    /// Worker threads; 1 walks the state space on the calling thread.
    pub threads: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            cap: DEFAULT_STATE_CAP,
            threads: 1,
        }
    }
}

/// Disjoint cycles covering GF(q)^r, each listed from its smallest state in
/// transition order, sorted by (length, first state).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    rec: Recurrence,
    cycles: Vec<Vec<u64>>,
}

impl CycleDecomposition {
    pub fn recurrence(&self) -> &Recurrence {
        &self.rec
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycles as state indices.
    pub fn cycle_indices(&self) -> &[Vec<u64>] {
        &self.cycles
    }

    pub fn cycles(&self) -> impl Iterator<Item = Vec<State>> + '_ {
        self.cycles
            .iter()
            .map(|c| c.iter().map(|&i| self.rec.state_from_index(i)).collect())
    }

    pub fn lengths(&self) -> Vec<u64> {
        self.cycles.iter().map(|c| c.len() as u64).collect()
    }

    /// Cycle length -> number of cycles of that length.
    pub fn length_histogram(&self) -> BTreeMap<u64, u64> {
        let mut h = BTreeMap::new();
        for c in &self.cycles {
            *h.entry(c.len() as u64).or_insert(0) += 1;
        }
        h
    }

    /// The set of cycle lengths.
    pub fn period_set(&self) -> Vec<u64> {
        self.length_histogram().into_keys().collect()
    }

    /// One line per cycle, e.g. `0001 -> 0011 -> ... -> 0001`.
    pub fn render(&self) -> Vec<String> {
        let f = self.rec.field();
        self.cycles()
            .map(|cyc| {
                let mut parts: Vec<String> = cyc.iter().map(|s| format_state(f, s)).collect();
                parts.push(parts[0].clone());
                parts.join(" -> ")
            })
            .collect()
    }
}

/// Full cycle decomposition with the default cap, single-threaded.
pub fn cycle_decomposition(rec: &Recurrence) -> Result<CycleDecomposition> {
    cycle_decomposition_with(rec, EnumerationOptions::default())
}

pub fn cycle_decomposition_with(
    rec: &Recurrence,
    opts: EnumerationOptions,
) -> Result<CycleDecomposition> {
    let total = rec
        .state_count()
        .filter(|&n| n <= opts.cap)
        .ok_or(Error::CapExceeded {
            needed: rec.state_count().unwrap_or(u64::MAX),
            cap: opts.cap,
        })?;
    let visited = AtomicBitset::new(total);
    let mut cycles = if opts.threads <= 1 {
        let mut out = Vec::new();
        for start in 0..total {
            if visited.get(start) {
                continue;
            }
            // every smaller state is already placed, so `start` is the
            // minimum of its cycle
            let cyc = walk_cycle(rec, start);
            for &i in &cyc {
                visited.set(i);
            }
            out.push(cyc);
        }
        out
    } else {
        let claimed = AtomicBitset::new(total);
        let threads = opts.threads.min(total as usize).max(1);
        let chunk = total.div_ceil(threads as u64);
        let mut per_worker: Vec<Vec<Vec<u64>>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|w| {
                    let (visited, claimed) = (&visited, &claimed);
                    scope.spawn(move || {
                        let mut found = Vec::new();
                        let lo = w * chunk;
                        let hi = ((w + 1) * chunk).min(total);
                        for start in lo..hi {
                            if visited.get(start) {
                                continue;
                            }
                            let mut cyc = walk_cycle(rec, start);
                            for &i in &cyc {
                                visited.set(i);
                            }
                            let (pos, &min) = cyc
                                .iter()
                                .enumerate()
                                .min_by_key(|&(_, v)| *v)
                                .expect("cycles are nonempty");
                            // several workers may walk the same cycle; the
                            // one that claims its minimum reports it
                            if !claimed.test_and_set(min) {
                                cyc.rotate_left(pos);
                                found.push(cyc);
                            }
                        }
                        found
                    })
                })
                .collect();
            per_worker = handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect();
        });
        per_worker.into_iter().flatten().collect()
    };
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then(a[0].cmp(&b[0])));
    Ok(CycleDecomposition {
        rec: rec.clone(),
        cycles,
    })
}

/// State indices of the cycle through `start`, in transition order.
fn walk_cycle(rec: &Recurrence, start: u64) -> Vec<u64> {
    let q = rec.field().size() as u64;
    let r = rec.order() as u32;
    let high = q.pow(r - 1);
    let mut window = rec.state_from_index(start).0;
    let mut idx = start;
    let mut out = vec![start];
    loop {
        let next = rec.next_symbol(&window);
        window.rotate_left(1);
        *window.last_mut().expect("r >= 1") = next;
        idx = (idx % high) * q + next.0 as u64;
        if idx == start {
            return out;
        }
        out.push(idx);
    }
}

struct AtomicBitset(Vec<AtomicU64>);

impl AtomicBitset {
    fn new(n: u64) -> Self {
        AtomicBitset((0..n.div_ceil(64)).map(|_| AtomicU64::new(0)).collect())
    }

    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize].load(Ordering::Relaxed) & (1 << (i % 64)) != 0
    }

    fn set(&self, i: u64) {
        self.0[(i / 64) as usize].fetch_or(1 << (i % 64), Ordering::Relaxed);
    }

    /// Sets bit `i`, returning its previous value.
    fn test_and_set(&self, i: u64) -> bool {
        let bit = 1 << (i % 64);
        self.0[(i / 64) as usize].fetch_or(bit, Ordering::AcqRel) & bit != 0
    }
}

/// Concatenated symbols for GF(p), p ≤ 9 (`0001`); comma-separated tokens
/// for larger prime fields; `;`-separated comma lists for extension fields.
pub fn format_state(field: &FieldSpec, s: &State) -> String {
    let toks = s.0.iter().map(|&e| field.format_elem(e));
    if field.is_prime_field() && field.size() <= 9 {
        toks.collect()
    } else if field.is_prime_field() {
        toks.collect::<Vec<_>>().join(",")
    } else {
        toks.collect::<Vec<_>>().join(";")
    }
}

pub fn parse_state(field: &FieldSpec, text: &str) -> Result<State> {
    let text = text.trim();
    let elems = if field.is_prime_field() && field.size() <= 9 && !text.contains(',') {
        text.chars()
            .map(|c| field.parse_elem(&c.to_string()))
            .collect::<Result<Vec<_>>>()?
    } else {
        let sep = if field.is_prime_field() { ',' } else { ';' };
        text.split(sep)
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(State(elems))
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "recurrence with characteristic polynomial {} over {}",
            self.char_poly(),
            self.field
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn rec2(f: &[i64]) -> Recurrence {
        Recurrence::from_char_poly(&Poly::from_ints(&gf2(), f)).unwrap()
    }

    fn st(rec: &Recurrence, s: &str) -> State {
        parse_state(rec.field(), s).unwrap()
    }

    fn bits(v: &[Elem]) -> Vec<u32> {
        v.iter().map(|e| e.0).collect()
    }

    #[test]
    fn from_char_poly_examples() {
        assert_eq!(bits(rec2(&[1, 1, 1, 1, 1]).coeffs()), [1, 1, 1, 1]);
        assert_eq!(bits(rec2(&[1, 0, 0, 1, 1]).coeffs()), [0, 0, 1, 1]);
        assert_eq!(bits(rec2(&[1, 1]).coeffs()), [1]);
        let f = Poly::from_ints(&gf2(), &[0, 1, 1]);
        assert_eq!(Recurrence::from_char_poly(&f), Err(Error::BadConstantTerm));
        let f3 = FieldSpec::prime(3).unwrap();
        let g = Poly::from_ints(&f3, &[2, 1]);
        assert_eq!(Recurrence::from_char_poly(&g), Err(Error::BadConstantTerm));
        assert_eq!(
            Recurrence::new(&gf2(), vec![Elem(1), Elem(0)]),
            Err(Error::ZeroLastCoefficient)
        );
    }

    #[test]
    fn char_poly_round_trip() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f = Poly::from_ints(&f3, &[1, 2, 0, 1]);
        assert_eq!(Recurrence::from_char_poly(&f).unwrap().char_poly(), f);
    }

    #[test]
    fn step_and_predecessor() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        let f2 = rec2(&[1, 0, 0, 1, 1]);
        let f3 = rec2(&[1, 0, 1, 1, 1]);
        assert_eq!(f1.step(&st(&f1, "0001")).unwrap(), st(&f1, "0011"));
        assert_eq!(f1.step(&State::zero(4)).unwrap(), State::zero(4));
        assert_eq!(f3.step(&st(&f3, "0111")).unwrap(), st(&f3, "1110"));
        assert_eq!(f1.predecessor(&st(&f1, "0011")).unwrap(), st(&f1, "0001"));
        assert_eq!(f1.predecessor(&State::zero(4)).unwrap(), State::zero(4));
        assert_eq!(f2.predecessor(&st(&f2, "0001")).unwrap(), st(&f2, "1000"));
        assert!(matches!(
            f1.step(&State::zero(3)),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 3
            })
        ));
    }

    #[test]
    fn generate_examples() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        assert_eq!(
            bits(&f1.generate(&st(&f1, "0001"), 10).unwrap()),
            [1, 0, 0, 0, 1, 1, 0, 0, 0, 1]
        );
        assert!(f1
            .generate(&State::zero(4), 7)
            .unwrap()
            .iter()
            .all(|e| e.is_zero()));
        let one = rec2(&[1, 1]);
        assert_eq!(
            bits(&one.generate(&st(&one, "1"), 4).unwrap()),
            [1, 1, 1, 1]
        );
    }

    #[test]
    fn decomposition_examples() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        let dec = cycle_decomposition(&f1).unwrap();
        assert_eq!(dec.lengths(), [1, 5, 5, 5]);
        assert!(dec
            .render()
            .contains(&"0001 -> 0011 -> 0110 -> 1100 -> 1000 -> 0001".to_string()));
        let f0 = rec2(&[1, 0, 1, 0, 1]);
        assert_eq!(cycle_decomposition(&f0).unwrap().lengths(), [1, 3, 6, 6]);
        let fixed = rec2(&[1, 1]);
        let dec = cycle_decomposition(&fixed).unwrap();
        assert_eq!(dec.render(), ["0 -> 0", "1 -> 1"]);
    }

    #[test]
    fn decomposition_cap() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        let opts = EnumerationOptions { cap: 8, threads: 1 };
        assert_eq!(
            cycle_decomposition_with(&f1, opts),
            Err(Error::CapExceeded { needed: 16, cap: 8 })
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let f3 = FieldSpec::prime(3).unwrap();
        for coeffs in [
            [1i64, 0, 2, 1, 1, 2],
            [1, 1, 0, 0, 0, 1],
            [1, 2, 2, 1, 0, 1],
        ] {
            let rec = Recurrence::from_char_poly(&Poly::from_ints(&f3, &coeffs)).unwrap();
            let seq = cycle_decomposition(&rec).unwrap();
            for threads in [2, 3, 8] {
                let par = cycle_decomposition_with(
                    &rec,
                    EnumerationOptions {
                        threads,
                        ..Default::default()
                    },
                )
                .unwrap();
                assert_eq!(par, seq);
            }
        }
    }

    #[test]
    fn period_examples() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        let f3 = rec2(&[1, 0, 1, 1, 1]);
        assert_eq!(f1.period_of(&st(&f1, "0001")).unwrap(), 5);
        assert_eq!(f1.period_of(&State::zero(4)).unwrap(), 1);
        assert_eq!(f3.period_of(&st(&f3, "1111")).unwrap(), 1);
    }

    #[test]
    fn numerator_examples() {
        let r = rec2(&[1, 1, 1]);
        assert!(r.numerator_poly(&State::zero(2)).unwrap().is_zero());
        assert_eq!(
            r.numerator_poly(&st(&r, "01")).unwrap(),
            Poly::from_ints(&gf2(), &[1, 1])
        );

        let f1 = rec2(&[1, 1, 1, 1, 1]);
        let s = st(&f1, "0001");
        let d = f1.numerator_poly(&s).unwrap();
        assert!(d.degree().unwrap() <= 3);
        assert_eq!(
            expand_series(&d, &f1.char_poly(), 20).unwrap(),
            f1.generate(&s, 20).unwrap()
        );
    }

    #[test]
    fn state_for_numerator_examples() {
        let f1 = rec2(&[1, 1, 1, 1, 1]);
        assert_eq!(
            f1.state_for_numerator(&Poly::zero(&gf2())).unwrap(),
            State::zero(4)
        );
        for i in 0..16 {
            let s = f1.state_from_index(i);
            let h = f1.numerator_poly(&s).unwrap();
            assert_eq!(f1.state_for_numerator(&h).unwrap(), s);
        }
        let f3 = rec2(&[1, 0, 1, 1, 1]);
        let h = Poly::from_ints(&gf2(), &[1, 1, 0, 1]);
        let s = f3.state_for_numerator(&h).unwrap();
        assert_eq!(s, st(&f3, "1111"));
        assert_eq!(f3.period_of(&s).unwrap(), 1);
        assert!(matches!(
            f3.state_for_numerator(&Poly::from_ints(&gf2(), &[1, 0, 0, 0, 1])),
            Err(Error::DegreeTooHigh { max: 3, found: 4 })
        ));
    }

    #[test]
    fn series_examples() {
        let f = gf2();
        let den = Poly::one_minus_x(&f);
        assert!(expand_series(&Poly::zero(&f), &den, 6)
            .unwrap()
            .iter()
            .all(|e| e.is_zero()));
        assert_eq!(
            bits(&expand_series(&Poly::one(&f), &den, 5).unwrap()),
            [1, 1, 1, 1, 1]
        );
        assert_eq!(
            expand_series(&Poly::one(&f), &Poly::x(&f), 3),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn state_text() {
        let f5 = FieldSpec::prime(5).unwrap();
        let s = State(vec![Elem(4), Elem(0), Elem(2)]);
        assert_eq!(format_state(&f5, &s), "402");
        assert_eq!(parse_state(&f5, "402").unwrap(), s);
        let f11 = FieldSpec::prime(11).unwrap();
        let t = State(vec![Elem(10), Elem(3)]);
        assert_eq!(format_state(&f11, &t), "10,3");
        assert_eq!(parse_state(&f11, "10,3").unwrap(), t);
        let f4 = FieldSpec::with_size(4).unwrap();
        let u = State(vec![Elem(3), Elem(0)]);
        assert_eq!(format_state(&f4, &u), "1,1;0");
        assert_eq!(parse_state(&f4, "1,1;0").unwrap(), u);
    }
}
