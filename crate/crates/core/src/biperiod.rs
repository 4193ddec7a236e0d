//! Period sets and biperiodic characteristic polynomials.
//!
//! The period set of `f` (the set of cycle lengths of its state space) is
//! the set of orders of all divisors of `f`. `f` is biperiodic with
//! biperiod `T ≥ 2` when that set is exactly `{1, T}`.
//!
//! Existence of a degree-`r` biperiodic polynomial over GF(q) splits on
//! `gcd(T, q)`:
//!
//! * coprime: `f = (1 − x)^{d₀} · α · h₁ ⋯ h_l` with `d₀ ∈ {0, 1}` and `l`
//!   distinct monic irreducibles of order `T`, all of degree
//!   `m = ord_T(q)`. Possible iff `T | q^{r−d₀} − 1` and `φ(T) ≥ r − d₀`
//!   (and `r − d₀ ≥ 1`).
//! * `p | T`: only `T = p` works, with `f = (1 − x)^r` and `1 < r ≤ p`.

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::lfsr::State;
use crate::numtheory::{self, checked_pow};
use crate::poly::{
    self, combine_orders, irreducible_order, Factorization, Poly, DEFAULT_ENUMERATION_CAP,
    DEFAULT_SEED,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub char_poly: Poly,
    pub factorization: Factorization,
    /// Order of each distinct monic irreducible factor, aligned with
    /// `factorization.factors`.
    pub factor_orders: Vec<u64>,
    /// Ascending; always contains 1.
    pub period_set: Vec<u64>,
    /// Every monic divisor (the trivial divisor 1 first) with its order.
    pub divisors: Vec<(Poly, u64)>,
}

impl PeriodReport {
    /// `Some(T)` iff the period set is `{1, T}`.
    pub fn biperiod(&self) -> Option<u64> {
        match self.period_set.as_slice() {
            [1, t] => Some(*t),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let f = self.char_poly.field();
        let factors: Vec<Value> = self
            .factorization
            .factors
            .iter()
            .zip(&self.factor_orders)
            .map(|((g, b), ord)| {
                json!({ "poly": g.to_list_string(), "pretty": g.to_string(), "multiplicity": b, "order": ord })
            })
            .collect();
        let divisors: Vec<Value> = self
            .divisors
            .iter()
            .map(|(g, ord)| json!({ "poly": g.to_list_string(), "pretty": g.to_string(), "order": ord }))
            .collect();
        json!({
            "char_poly": self.char_poly.to_list_string(),
            "pretty": self.char_poly.to_string(),
            "field": f.to_string(),
            "degree": self.char_poly.degree(),
            "factorization": {
                "unit": f.format_elem(self.factorization.unit),
                "factors": factors,
            },
            "period_set": self.period_set,
            "divisors": divisors,
            "biperiod": self.biperiod(),
        })
    }
}

fn check_char_poly(f: &Poly) -> Result<usize> {
    if f.constant_term() != Elem::ONE {
        return Err(Error::BadConstantTerm);
    }
    match f.degree() {
        Some(0) | None => Err(Error::DegreeZero),
        Some(r) => Ok(r),
    }
}

pub fn period_set(f: &Poly) -> Result<PeriodReport> {
    period_set_with_seed(f, DEFAULT_SEED)
}

/// Factors `f`, walks every exponent vector of its factorization and
/// collects the orders of the resulting divisors.
pub fn period_set_with_seed(f: &Poly, seed: u64) -> Result<PeriodReport> {
    check_char_poly(f)?;
    let field = f.field();
    let p = field.characteristic() as u64;
    let factorization = f.factor_with_seed(seed)?;
    let factor_orders = factorization
        .factors
        .iter()
        .map(|(g, _)| irreducible_order(g))
        .collect::<Result<Vec<_>>>()?;
    let mut divisors = Vec::new();
    let ranges = factorization.factors.iter().map(|(_, b)| 0..=*b);
    for exps in ranges.multi_cartesian_product() {
        let parts: Vec<(u64, u32)> = factor_orders
            .iter()
            .copied()
            .zip(exps.iter().copied())
            .collect();
        let order = combine_orders(p, &parts)?;
        let divisor = factorization
            .factors
            .iter()
            .zip(&exps)
            .fold(Poly::one(field), |acc, ((g, _), &e)| {
                &acc * &g.pow(e as u64)
            });
        divisors.push((divisor, order));
    }
    if divisors.is_empty() {
        // multi_cartesian_product of nothing yields nothing
        divisors.push((Poly::one(field), 1));
    }
    divisors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut period_set: Vec<u64> = divisors.iter().map(|&(_, o)| o).collect();
    period_set.sort_unstable();
    period_set.dedup();
    Ok(PeriodReport {
        char_poly: f.clone(),
        factorization,
        factor_orders,
        period_set,
        divisors,
    })
}

/// `Some(T)` iff `f` is biperiodic with biperiod `T`.
pub fn is_biperiodic(f: &Poly) -> Result<Option<u64>> {
    Ok(period_set(f)?.biperiod())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `gcd(T, q) = 1`
    Coprime,
    /// `p | T`
    PBranch,
    None,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Coprime => "coprime",
            Branch::PBranch => "p-branch",
            Branch::None => "none",
        }
    }
}

/// Verdict on "is there a degree-r polynomial over GF(q) with biperiod T".
///
/// In the coprime branch the scalar fields describe the smallest valid
/// `d₀`; `d0_candidates` lists every valid one (both can hold when
/// `T | q − 1` and `φ(T) ≥ r`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiperiodReport {
    pub field: FieldSpec,
    pub r: u32,
    pub t: u64,
    pub exists: bool,
    /// Which existence test applies: `Coprime` or `PBranch` by `gcd(T, q)`.
    pub branch: Branch,
    /// Power of `(1 − x)` in `f`; `r` in the p-branch.
    pub d0: Option<u32>,
    pub d0_candidates: Vec<u32>,
    /// Number of order-T irreducible factors.
    pub l: Option<u64>,
    pub factor_degree: Option<u64>,
    /// Cycles with T states.
    pub n_cycles: Option<u64>,
    /// All cycles, fixed points included.
    pub total_cycles: Option<u64>,
    pub witness: Option<Poly>,
    pub failure_reason: Option<String>,
}

impl BiperiodReport {
    /// Number of single-state cycles predicted for a witness.
    pub fn fixed_point_count(&self) -> Option<u64> {
        Some(self.total_cycles? - self.n_cycles?)
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        json!({
            "field": f.to_string(),
            "p": f.characteristic(),
            "m": f.degree(),
            "q": f.size(),
            "r": self.r,
            "T": self.t,
            "exists": self.exists,
            "branch": self.branch.as_str(),
            "d0": self.d0,
            "d0_candidates": self.d0_candidates,
            "l": self.l,
            "factor_degree": self.factor_degree,
            "N": self.n_cycles,
            "L": self.total_cycles,
            "witness": self.witness.as_ref().map(Poly::to_list_string),
            "failure_reason": self.failure_reason,
        })
    }
}

fn check_target(r: u32, t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::OutOfRange(format!("biperiod {t} < 2")));
    }
    if r == 0 {
        return Err(Error::DegreeZero);
    }
    Ok(())
}

/// Decides existence of a degree-`r` polynomial with biperiod `t`.
/// Non-existence is reported, not raised.
pub fn exists_biperiodic(field: &FieldSpec, r: u32, t: u64) -> Result<BiperiodReport> {
    check_target(r, t)?;
    let q = field.size() as u64;
    let p = field.characteristic() as u64;
    let mut report = BiperiodReport {
        field: field.clone(),
        r,
        t,
        exists: false,
        branch: Branch::None,
        d0: None,
        d0_candidates: Vec::new(),
        l: None,
        factor_degree: None,
        n_cycles: None,
        total_cycles: None,
        witness: None,
        failure_reason: None,
    };
    let q_r = checked_pow(q, r)?;

    if numtheory::gcd(t, q) == 1 {
        report.branch = Branch::Coprime;
        let phi = numtheory::euler_phi(t)?;
        let mut reasons = Vec::new();
        for d0 in 0..=1u32 {
            let k = r - d0.min(r);
            if k == 0 {
                reasons.push(format!("d0={d0}: r - d0 = 0 leaves no factor of order {t}"));
                continue;
            }
            let divides = numtheory::pow_mod(q, k as u64, t) == 1;
            let enough = phi >= k as u64;
            match (divides, enough) {
                (true, true) => report.d0_candidates.push(d0),
                (false, _) => reasons.push(format!("d0={d0}: {t} does not divide {q}^{k} - 1")),
                (true, false) => reasons.push(format!("d0={d0}: phi({t}) = {phi} < {k}")),
            }
        }
        let Some(&d0) = report.d0_candidates.first() else {
            report.failure_reason = Some(reasons.join("; "));
            return Ok(report);
        };
        let k = (r - d0) as u64;
        // largest divisor j of r - d0 with T | q^{(r - d0)/j} - 1
        let l = numtheory::divisors(k)?
            .into_iter()
            .rev()
            .find(|&j| numtheory::pow_mod(q, k / j, t) == 1)
            .expect("j = 1 qualifies");
        let fixed = q.pow(d0);
        let n = (q_r - fixed) / t;
        report.exists = true;
        report.d0 = Some(d0);
        report.l = Some(l);
        report.factor_degree = Some(k / l);
        report.n_cycles = Some(n);
        report.total_cycles = Some(n + fixed);
        return Ok(report);
    }

    report.branch = Branch::PBranch;
    let mut u = 0u32;
    let mut rest = t;
    while rest.is_multiple_of(p) {
        rest /= p;
        u += 1;
    }
    let reason = if rest != 1 {
        Some(format!("T = {p}^{u} * {rest} with cofactor {rest} >= 2"))
    } else if u != 1 {
        Some(format!("T = {p}^{u} with exponent {u} >= 2"))
    } else if r == 1 {
        Some("r = 1: (1 - x) has period set {1}".to_string())
    } else if r as u64 > p {
        Some(format!("r = {r} > p = {p}"))
    } else {
        None
    };
    if let Some(reason) = reason {
        report.failure_reason = Some(reason);
        return Ok(report);
    }
    let n = (q_r - q) / p;
    report.exists = true;
    report.d0 = Some(r);
    report.d0_candidates = vec![r];
    report.n_cycles = Some(n);
    report.total_cycles = Some(n + q);
    Ok(report)
}

/// [`exists_biperiodic`] with the witness filled in when one exists.
pub fn exists_with_witness(field: &FieldSpec, r: u32, t: u64) -> Result<BiperiodReport> {
    let mut report = exists_biperiodic(field, r, t)?;
    if report.exists {
        report.witness = Some(build(&report, report.d0.expect("set when exists"))?);
    }
    Ok(report)
}

/// `(1 − x)^{d0}` times `factors`, scaled so the constant term is 1.
fn normalized_product(field: &FieldSpec, d0: u32, factors: &[&Poly]) -> Result<Poly> {
    let mut f = Poly::one_minus_x(field).pow(d0 as u64);
    for h in factors {
        f = &f * h;
    }
    let alpha = field.inv(f.constant_term())?;
    Ok(f.scale(alpha))
}

fn order_t_irreducibles(report: &BiperiodReport, d0: u32) -> Result<(Vec<Poly>, usize)> {
    let m = numtheory::multiplicative_order(report.field.size() as u64, report.t)? as usize;
    let k = (report.r - d0) as usize;
    let hs = poly::irreducibles_of_order(&report.field, m, report.t, DEFAULT_ENUMERATION_CAP)?;
    Ok((hs, k / m))
}

fn build(report: &BiperiodReport, d0: u32) -> Result<Poly> {
    match report.branch {
        Branch::PBranch => Ok(normalized_product(&report.field, report.r, &[])?),
        Branch::Coprime => {
            let (hs, l) = order_t_irreducibles(report, d0)?;
            let chosen: Vec<&Poly> = hs.iter().take(l).collect();
            debug_assert_eq!(chosen.len(), l);
            normalized_product(&report.field, d0, &chosen)
        }
        Branch::None => Err(Error::NotConstructible("no applicable branch".into())),
    }
}

fn not_constructible(report: &BiperiodReport) -> Error {
    Error::NotConstructible(format!(
        "no degree-{} polynomial over {} has biperiod {}: {}",
        report.r,
        report.field,
        report.t,
        report
            .failure_reason
            .as_deref()
            .unwrap_or("condition fails")
    ))
}

/// A degree-`r` polynomial with `f(0) = 1` and biperiod `t`, built from the
/// canonically smallest order-`t` irreducibles.
pub fn construct_biperiodic(field: &FieldSpec, r: u32, t: u64) -> Result<Poly> {
    let report = exists_biperiodic(field, r, t)?;
    if !report.exists {
        return Err(not_constructible(&report));
    }
    build(&report, report.d0.expect("set when exists"))
}

pub fn enumerate_biperiodic(field: &FieldSpec, r: u32, t: u64) -> Result<Vec<Poly>> {
    enumerate_biperiodic_with_cap(field, r, t, DEFAULT_ENUMERATION_CAP)
}

/// Every degree-`r` polynomial with `f(0) = 1` and biperiod exactly `t`:
/// all `l`-subsets of the order-`t` irreducibles of the right degree, for
/// each valid `d₀`, or `(1 − x)^r` in the p-branch.
pub fn enumerate_biperiodic_with_cap(
    field: &FieldSpec,
    r: u32,
    t: u64,
    cap: u64,
) -> Result<Vec<Poly>> {
    let report = exists_biperiodic(field, r, t)?;
    if !report.exists {
        return Err(not_constructible(&report));
    }
    if report.branch == Branch::PBranch {
        return Ok(vec![build(&report, r)?]);
    }
    let mut out = Vec::new();
    for &d0 in &report.d0_candidates {
        let (hs, l) = order_t_irreducibles(&report, d0)?;
        let count = binomial(hs.len() as u64, l as u64);
        if count.is_none_or(|c| c + out.len() as u64 > cap) {
            return Err(Error::CapExceeded {
                needed: count.unwrap_or(u64::MAX),
                cap,
            });
        }
        for combo in hs.iter().combinations(l) {
            out.push(normalized_product(field, d0, &combo)?);
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `(N, L)`: cycles of length T and total cycles.
pub fn predicted_cycle_counts(report: &BiperiodReport) -> Result<(u64, u64)> {
    match (report.exists, report.n_cycles, report.total_cycles) {
        (true, Some(n), Some(l)) => Ok((n, l)),
        _ => Err(not_constructible(report)),
    }
}

/// States forming single-state cycles: the constant states `β·(1, …, 1)`
/// are fixed exactly when `f(1) = 0`; the zero state always is.
pub fn fixed_states(f: &Poly) -> Result<Vec<State>> {
    let r = check_char_poly(f)?;
    let field = f.field();
    if f.eval(Elem::ONE).is_zero() {
        Ok(field.elements().map(|b| State::constant(r, b)).collect())
    } else {
        Ok(vec![State::zero(r)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfsr::{cycle_decomposition, Recurrence};

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::with_size(q).unwrap()
    }

    fn p2(c: &[i64]) -> Poly {
        Poly::from_ints(&gf(2), c)
    }

    #[test]
    fn period_set_examples() {
        assert_eq!(
            period_set(&p2(&[1, 0, 1, 0, 1])).unwrap().period_set,
            [1, 3, 6]
        );
        assert_eq!(
            period_set(&p2(&[1, 1, 1, 1, 1])).unwrap().period_set,
            [1, 5]
        );
        assert_eq!(
            period_set(&p2(&[1, 0, 1, 1, 1])).unwrap().period_set,
            [1, 7]
        );
        assert_eq!(period_set(&p2(&[0, 1])), Err(Error::BadConstantTerm));
    }

    #[test]
    fn period_report_invariants() {
        let f = p2(&[1, 0, 1, 0, 1]);
        let rep = period_set(&f).unwrap();
        assert_eq!(rep.divisors[0], (Poly::one(&gf(2)), 1));
        assert_eq!(rep.divisors.len(), 3);
        for (g, ord) in &rep.divisors {
            assert!(g.divides(&f).unwrap());
            assert!(rep.period_set.contains(ord));
        }
    }

    #[test]
    fn biperiodic_examples() {
        assert_eq!(is_biperiodic(&p2(&[1, 0, 0, 1, 1])).unwrap(), Some(15));
        assert_eq!(is_biperiodic(&p2(&[1, 0, 1, 0, 1])).unwrap(), None);
        let f3 = gf(3);
        let cube = Poly::one_minus_x(&f3).pow(3);
        assert_eq!(is_biperiodic(&cube).unwrap(), Some(3));
        assert_eq!(is_biperiodic(&p2(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn exists_examples() {
        let f2 = gf(2);
        let rep = exists_biperiodic(&f2, 4, 5).unwrap();
        assert!(rep.exists);
        assert_eq!(
            (rep.d0, rep.l, rep.n_cycles, rep.total_cycles),
            (Some(0), Some(1), Some(3), Some(4))
        );

        let rep = exists_biperiodic(&f2, 4, 3).unwrap();
        assert!(!rep.exists);
        let reason = rep.failure_reason.unwrap();
        assert!(
            reason.contains("d0=0") && reason.contains("d0=1"),
            "{reason}"
        );

        let rep = exists_biperiodic(&f2, 4, 7).unwrap();
        assert!(rep.exists);
        assert_eq!(
            (rep.d0, rep.l, rep.n_cycles, rep.total_cycles),
            (Some(1), Some(1), Some(2), Some(4))
        );

        let rep = exists_biperiodic(&gf(3), 3, 3).unwrap();
        assert!(rep.exists);
        assert_eq!(rep.branch, Branch::PBranch);
        assert_eq!((rep.n_cycles, rep.total_cycles), (Some(8), Some(11)));

        let rep = exists_biperiodic(&f2, 4, 2).unwrap();
        assert!(!rep.exists);
        assert_eq!(rep.branch, Branch::PBranch);
    }

    #[test]
    fn exists_rejects_bad_targets() {
        assert!(matches!(
            exists_biperiodic(&gf(2), 4, 1),
            Err(Error::OutOfRange(_))
        ));
        assert_eq!(exists_biperiodic(&gf(2), 0, 3), Err(Error::DegreeZero));
        let rep = exists_biperiodic(&gf(3), 1, 3).unwrap();
        assert!(!rep.exists);
        assert!(rep.failure_reason.unwrap().starts_with("r = 1"));
    }

    #[test]
    fn construct_examples() {
        let f2 = gf(2);
        assert_eq!(
            construct_biperiodic(&f2, 4, 5).unwrap(),
            p2(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            construct_biperiodic(&f2, 4, 7).unwrap(),
            &p2(&[1, 1]) * &p2(&[1, 1, 0, 1])
        );
        assert_eq!(
            construct_biperiodic(&gf(3), 3, 3).unwrap(),
            Poly::from_ints(&gf(3), &[1, 0, 0, 2])
        );
        assert!(matches!(
            construct_biperiodic(&f2, 4, 3),
            Err(Error::NotConstructible(_))
        ));
    }

    #[test]
    fn enumerate_examples() {
        let f2 = gf(2);
        let all = enumerate_biperiodic(&f2, 4, 15).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&p2(&[1, 0, 0, 1, 1])));
        assert_eq!(
            enumerate_biperiodic(&f2, 4, 5).unwrap(),
            vec![p2(&[1, 1, 1, 1, 1])]
        );
        assert!(matches!(
            enumerate_biperiodic(&f2, 4, 3),
            Err(Error::NotConstructible(_))
        ));
        assert!(matches!(
            enumerate_biperiodic_with_cap(&f2, 4, 15, 1),
            Err(Error::CapExceeded { needed: 2, cap: 1 })
        ));
    }

    #[test]
    fn predicted_counts_examples() {
        let f2 = gf(2);
        assert_eq!(
            predicted_cycle_counts(&exists_biperiodic(&f2, 4, 15).unwrap()).unwrap(),
            (1, 2)
        );
        assert_eq!(
            predicted_cycle_counts(&exists_biperiodic(&f2, 4, 7).unwrap()).unwrap(),
            (2, 4)
        );
        let rep = exists_biperiodic(&f2, 2, 2).unwrap();
        assert_eq!(predicted_cycle_counts(&rep).unwrap(), (1, 3));
        let dec =
            cycle_decomposition(&Recurrence::from_char_poly(&p2(&[1, 0, 1])).unwrap()).unwrap();
        assert_eq!(dec.lengths(), [1, 1, 2]);
        let none = exists_biperiodic(&f2, 4, 3).unwrap();
        assert!(matches!(
            predicted_cycle_counts(&none),
            Err(Error::NotConstructible(_))
        ));
    }

    #[test]
    fn fixed_state_examples() {
        assert_eq!(
            fixed_states(&p2(&[1, 1, 1, 1, 1])).unwrap(),
            vec![State::zero(4)]
        );
        assert_eq!(
            fixed_states(&p2(&[1, 0, 1, 1, 1])).unwrap(),
            vec![State::zero(4), State::constant(4, Elem::ONE)]
        );
        let f3 = gf(3);
        let sq = Poly::one_minus_x(&f3).pow(2);
        let fixed = fixed_states(&sq).unwrap();
        assert_eq!(fixed.len(), 3);
        let dec = cycle_decomposition(&Recurrence::from_char_poly(&sq).unwrap()).unwrap();
        let brute: Vec<State> = dec
            .cycles()
            .filter(|c| c.len() == 1)
            .map(|c| c[0].clone())
            .collect();
        assert_eq!(fixed, brute);
    }

    #[test]
    fn scalar_multiples_keep_period_set() {
        // scaling a factor by a unit leaves divisibility against 1 - x^j alone
        let f5 = gf(5);
        let g = poly::irreducible_of_order(&f5, 1, 4).unwrap();
        for c in 1..5 {
            assert_eq!(g.scale(Elem(c)).order().unwrap(), 4);
        }
        let f = construct_biperiodic(&f5, 2, 4).unwrap();
        assert_eq!(f.constant_term(), Elem::ONE);
        assert_eq!(is_biperiodic(&f).unwrap(), Some(4));
    }

    #[test]
    fn both_d0_branches_when_t_divides_q_minus_1() {
        let f5 = gf(5);
        let rep = exists_biperiodic(&f5, 2, 4).unwrap();
        assert_eq!(rep.d0_candidates, [0, 1]);
        let all = enumerate_biperiodic(&f5, 2, 4).unwrap();
        let with_root_one = all.iter().filter(|f| f.eval(Elem::ONE).is_zero()).count();
        assert_eq!((all.len(), with_root_one), (3, 2));
        for f in &all {
            assert_eq!(is_biperiodic(f).unwrap(), Some(4));
        }
    }

    #[test]
    fn json_keys_sorted() {
        let rep = exists_with_witness(&gf(2), 4, 7).unwrap();
        let text = serde_json::to_string(&rep.to_json()).unwrap();
        let v: serde_json::Map<String, Value> = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = v.keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["witness"], "1,0,1,1,1");
        assert_eq!(v["N"], 2);
    }
}
