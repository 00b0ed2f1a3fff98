//! Minimum weights by exhaustive enumeration.
//!
//! Codewords are visited in Gray-code order over the information vectors, so
//! each step adds a single (scaled) generator row. Over GF(q) with `q > 2`
//! only one representative per projective class is visited. The message space
//! is split into disjoint prefix partitions that an [`Executor`] may run in
//! parallel; the only shared state is a monotonically decreasing best weight.
//! The search stops as soon as it meets a proven lower bound (the BCH bound
//! of the outer code), so results never depend on scheduling.

use alloc::{format, string::ToString, vec, vec::Vec};
use core::fmt;
use core::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cyclic::CyclicCode;
use crate::galois::Field;
use crate::{Error, Result};

/// Default cap on enumerated codewords, 2^28.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Exhaustive,
    MacWilliams,
    /// The value is only a lower bound (BCH bound).
    BoundOnly,
}

impl Method {
    pub fn is_exact(self) -> bool {
        self != Method::BoundOnly
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::MacWilliams => "macwilliams",
            Method::BoundOnly => "bound-only",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a minimum-weight search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub value: u32,
    pub method: Method,
    /// Size of the enumerated codeword space (every codeword is either
    /// visited or excluded by the lower-bound cutoff).
    pub enumerated: u128,
    pub budget: u64,
    /// The searched set had no nonzero codeword. For a set difference `C \ D`
    /// with `C = D` the value falls back to the minimum weight of `C`; for the
    /// zero code it is 0.
    pub vacuous: bool,
}

impl WeightReport {
    pub fn is_exact(&self) -> bool {
        self.method.is_exact()
    }

    pub fn bound(value: u32, budget: u64) -> WeightReport {
        WeightReport { value, method: Method::BoundOnly, enumerated: 0, budget, vacuous: false }
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "≥{}", self.value)
        }
    }
}

/// Runs independent jobs, possibly in parallel.
pub trait Executor: Sync {
    /// Calls `job(i)` exactly once for every `i < jobs`, in any order.
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) + Sync));

    fn workers(&self) -> usize {
        1
    }
}

/// Runs jobs in order on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Serial;

impl Executor for Serial {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
        (0..jobs).for_each(job);
    }
}

static SERIAL: Serial = Serial;

/// `counts[w]` = number of codewords of weight `w`, `0 <= w <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<u128>,
    pub method: Method,
}

impl WeightDistribution {
    pub fn n(&self) -> u32 {
        self.counts.len() as u32 - 1
    }

    /// Nonzero `(weight, count)` pairs.
    pub fn pairs(&self) -> Vec<(u32, u128)> {
        self.counts.iter().enumerate().filter(|(_, &c)| c != 0).map(|(w, &c)| (w as u32, c)).collect()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<u32> {
        self.counts.iter().skip(1).position(|&c| c != 0).map(|i| i as u32 + 1)
    }
}

fn binary_fast_path(code: &CyclicCode) -> bool {
    code.q() == 2 && code.n() <= 128
}

/// Codewords visited for a dimension-`k` code over GF(q).
fn search_size(q: u32, k: u32) -> u128 {
    if q == 2 {
        return if k >= 128 { u128::MAX } else { 1u128 << k };
    }
    let mut total: u128 = 1;
    let mut power: u128 = 1;
    for _ in 1..k {
        power = power.saturating_mul(q as u128);
        total = total.saturating_add(power);
    }
    // one representative per projective class, plus the zero word
    if k == 0 {
        1
    } else {
        total.saturating_add(1)
    }
}

fn bit_rows(rows: &[Vec<u32>]) -> Vec<u128> {
    rows.iter().map(|r| r.iter().enumerate().fold(0u128, |acc, (i, &b)| acc | ((b as u128 & 1) << i))).collect()
}

/// Prefix bits used to split a `k`-bit message space into parallel jobs.
fn prefix_bits(k: usize) -> usize {
    k.saturating_sub(12).min(10)
}

fn binary_min(rows: &[u128], checks: Option<&[u128]>, floor: u32, executor: &dyn Executor) -> Option<u32> {
    let k = rows.len();
    let p = prefix_bits(k);
    let low = k - p;
    let best = AtomicU32::new(u32::MAX);
    let done = AtomicBool::new(false);
    let outside_inner = |w: u128| match checks {
        None => true,
        Some(c) => c.iter().any(|r| (r & w).count_ones() & 1 == 1),
    };
    executor.run(1 << p, &|job| {
        if done.load(Ordering::Relaxed) {
            return;
        }
        let mut w = (0..p).filter(|b| job >> b & 1 == 1).fold(0u128, |acc, b| acc ^ rows[low + b]);
        let mut local = best.load(Ordering::Relaxed);
        let visit = |w: u128, local: &mut u32| -> bool {
            let wt = w.count_ones();
            if w != 0 && wt < *local && outside_inner(w) {
                *local = wt;
                best.fetch_min(wt, Ordering::Relaxed);
                if wt <= floor {
                    done.store(true, Ordering::Relaxed);
                    return true;
                }
            }
            false
        };
        if visit(w, &mut local) {
            return;
        }
        for t in 1u64..(1u64 << low) {
            w ^= rows[t.trailing_zeros() as usize];
            if visit(w, &mut local) {
                return;
            }
            if t & 0xfff == 0 {
                if done.load(Ordering::Relaxed) {
                    return;
                }
                local = local.min(best.load(Ordering::Relaxed));
            }
        }
    });
    match best.load(Ordering::Relaxed) {
        u32::MAX => None,
        v => Some(v),
    }
}

fn binary_distribution(rows: &[u128], n: usize, executor: &dyn Executor) -> Vec<u128> {
    let k = rows.len();
    let p = prefix_bits(k);
    let low = k - p;
    let counts: Vec<AtomicU64> = (0..=n).map(|_| AtomicU64::new(0)).collect();
    executor.run(1 << p, &|job| {
        let mut local = vec![0u64; n + 1];
        let mut w = (0..p).filter(|b| job >> b & 1 == 1).fold(0u128, |acc, b| acc ^ rows[low + b]);
        local[w.count_ones() as usize] += 1;
        for t in 1u64..(1u64 << low) {
            w ^= rows[t.trailing_zeros() as usize];
            local[w.count_ones() as usize] += 1;
        }
        for (c, l) in counts.iter().zip(local) {
            c.fetch_add(l, Ordering::Relaxed);
        }
    });
    counts.into_iter().map(|c| c.into_inner() as u128).collect()
}

/// Projective enumeration over GF(q): messages whose first nonzero coordinate
/// (the pivot) is 1.
struct Projective<'a> {
    field: &'a Field,
    rows: &'a [Vec<u32>],
    /// `(pivot, prefix digits, prefix value)` per job.
    jobs: Vec<(usize, usize, u64)>,
}

impl<'a> Projective<'a> {
    fn new(field: &'a Field, rows: &'a [Vec<u32>]) -> Projective<'a> {
        let q = field.q() as u64;
        let k = rows.len();
        let mut max_prefix = 0usize;
        while q.pow(max_prefix as u32 + 1) <= 256 {
            max_prefix += 1;
        }
        let mut jobs = Vec::new();
        for pivot in 0..k {
            let free = k - 1 - pivot;
            let digits = free.min(max_prefix).min(free.saturating_sub(4));
            for prefix in 0..q.pow(digits as u32) {
                jobs.push((pivot, digits, prefix));
            }
        }
        Projective { field, rows, jobs }
    }

    fn add_scaled(&self, w: &mut [u32], row: usize, c: u32) {
        if c == 0 {
            return;
        }
        for (x, &r) in w.iter_mut().zip(&self.rows[row]) {
            *x = self.field.add(*x, self.field.mul(c, r));
        }
    }

    /// Visits every codeword of job `j`; `visit` returns true to stop early.
    fn walk(&self, j: usize, mut visit: impl FnMut(&[u32]) -> bool) {
        let (pivot, digits, mut prefix) = self.jobs[j];
        let k = self.rows.len();
        let q = self.field.q() as u64;
        let mut w = self.rows[pivot].clone();
        for d in 0..digits {
            self.add_scaled(&mut w, k - digits + d, (prefix % q) as u32);
            prefix /= q;
        }
        if visit(&w) {
            return;
        }
        let first = pivot + 1;
        let len = k - digits - first;
        let mut vals = vec![0u32; len];
        let total = q.pow(len as u32);
        for t in 1..total {
            let (mut j, mut rest) = (0usize, t);
            while rest % q == 0 {
                rest /= q;
                j += 1;
            }
            let old = vals[j];
            let new = ((old as u64 + 1) % q) as u32;
            vals[j] = new;
            self.add_scaled(&mut w, first + j, self.field.sub(new, old));
            if visit(&w) {
                return;
            }
        }
    }
}

fn weight_of(v: &[u32]) -> u32 {
    v.iter().filter(|&&x| x != 0).count() as u32
}

fn general_min(code: &CyclicCode, checks: Option<&[Vec<u32>]>, floor: u32, executor: &dyn Executor) -> Option<u32> {
    let field = code.space().base();
    let rows = code.generator_matrix().rows().to_vec();
    let walker = Projective::new(field, &rows);
    let best = AtomicU32::new(u32::MAX);
    let done = AtomicBool::new(false);
    let dot = |a: &[u32], b: &[u32]| a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)));
    let outside_inner = |w: &[u32]| match checks {
        None => true,
        Some(c) => c.iter().any(|r| dot(r, w) != 0),
    };
    executor.run(walker.jobs.len(), &|j| {
        if done.load(Ordering::Relaxed) {
            return;
        }
        let mut local = best.load(Ordering::Relaxed);
        let mut steps = 0u32;
        walker.walk(j, |w| {
            let wt = weight_of(w);
            if wt < local && outside_inner(w) {
                local = wt;
                best.fetch_min(wt, Ordering::Relaxed);
                if wt <= floor {
                    done.store(true, Ordering::Relaxed);
                    return true;
                }
            }
            steps = steps.wrapping_add(1);
            if steps & 0x3ff == 0 {
                local = local.min(best.load(Ordering::Relaxed));
                return done.load(Ordering::Relaxed);
            }
            false
        });
    });
    match best.load(Ordering::Relaxed) {
        u32::MAX => None,
        v => Some(v),
    }
}

fn general_distribution(code: &CyclicCode, executor: &dyn Executor) -> Vec<u128> {
    let field = code.space().base();
    let n = code.n() as usize;
    let rows = code.generator_matrix().rows().to_vec();
    let walker = Projective::new(field, &rows);
    let counts: Vec<AtomicU64> = (0..=n).map(|_| AtomicU64::new(0)).collect();
    executor.run(walker.jobs.len(), &|j| {
        let mut local = vec![0u64; n + 1];
        walker.walk(j, |w| {
            local[weight_of(w) as usize] += 1;
            false
        });
        for (c, l) in counts.iter().zip(local) {
            c.fetch_add(l, Ordering::Relaxed);
        }
    });
    let scale = (field.q() - 1) as u128;
    let mut out: Vec<u128> = counts.into_iter().map(|c| c.into_inner() as u128 * scale).collect();
    out[0] += 1;
    out
}

/// Budgeted weight computations bound to an executor.
#[derive(Clone, Copy)]
pub struct WeightEngine<'a> {
    budget: u64,
    executor: &'a dyn Executor,
}

impl WeightEngine<'static> {
    pub fn serial(budget: u64) -> WeightEngine<'static> {
        WeightEngine { budget, executor: &SERIAL }
    }
}

impl<'a> WeightEngine<'a> {
    pub fn new(budget: u64, executor: &'a dyn Executor) -> WeightEngine<'a> {
        WeightEngine { budget, executor }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn executor(&self) -> &'a dyn Executor {
        self.executor
    }

    /// Codewords an exhaustive search over `code` visits.
    pub fn enumeration_size(code: &CyclicCode) -> u128 {
        search_size(code.q(), code.k())
    }

    fn affordable(&self, code: &CyclicCode) -> Result<u128> {
        let required = Self::enumeration_size(code);
        if required > self.budget as u128 {
            return Err(Error::BudgetExceeded { required, budget: self.budget });
        }
        Ok(required)
    }

    fn report(&self, value: u32, method: Method, enumerated: u128) -> WeightReport {
        WeightReport { value, method, enumerated, budget: self.budget, vacuous: false }
    }

    /// Exact minimum nonzero weight: exhaustive when `q^k` fits the budget,
    /// otherwise through the MacWilliams transform of the dual's distribution.
    pub fn min_weight(&self, code: &CyclicCode) -> Result<WeightReport> {
        if code.k() == 0 {
            return Ok(WeightReport { vacuous: true, ..self.report(0, Method::Exhaustive, 1) });
        }
        match self.affordable(code) {
            Ok(size) => {
                let value = self.search(code, None)?;
                Ok(self.report(value, Method::Exhaustive, size))
            }
            Err(direct) => {
                let dual = code.dual()?;
                if self.affordable(&dual).is_err() {
                    return Err(direct);
                }
                let dist = self.weight_distribution(code)?;
                let value = dist
                    .min_nonzero_weight()
                    .ok_or_else(|| Error::Internal("nonzero code without nonzero codewords".to_string()))?;
                Ok(self.report(value, Method::MacWilliams, Self::enumeration_size(&dual)))
            }
        }
    }

    /// Minimum weight over `outer \ inner`; requires `inner ⊆ outer`.
    pub fn min_weight_difference(&self, outer: &CyclicCode, inner: &CyclicCode) -> Result<WeightReport> {
        if !outer.contains(inner)? {
            return Err(Error::NotNested(format!("{inner:?} is not a subcode of {outer:?}")));
        }
        if inner.k() == outer.k() {
            let mut r = self.min_weight(outer)?;
            r.vacuous = true;
            return Ok(r);
        }
        if inner.k() == 0 {
            return self.min_weight(outer);
        }
        let size = self.affordable(outer)?;
        let value = self.search(outer, Some(inner))?;
        Ok(self.report(value, Method::Exhaustive, size))
    }

    /// [`Self::min_weight`], degrading to the BCH bound when over budget.
    pub fn min_weight_or_bound(&self, code: &CyclicCode) -> Result<WeightReport> {
        match self.min_weight(code) {
            Err(e) if e.is_budget() => Ok(WeightReport::bound(code.bch_bound(), self.budget)),
            other => other,
        }
    }

    /// [`Self::min_weight_difference`], degrading to the BCH bound of `outer`.
    pub fn min_weight_difference_or_bound(&self, outer: &CyclicCode, inner: &CyclicCode) -> Result<WeightReport> {
        match self.min_weight_difference(outer, inner) {
            Err(e) if e.is_budget() => Ok(WeightReport {
                vacuous: inner.k() == outer.k(),
                ..WeightReport::bound(outer.bch_bound(), self.budget)
            }),
            other => other,
        }
    }

    fn search(&self, outer: &CyclicCode, inner: Option<&CyclicCode>) -> Result<u32> {
        let floor = outer.bch_bound();
        let checks = inner.map(|c| c.parity_check_matrix().rows().to_vec());
        let found = if binary_fast_path(outer) {
            let rows = bit_rows(outer.generator_matrix().rows());
            let checks = checks.as_deref().map(bit_rows);
            binary_min(&rows, checks.as_deref(), floor, self.executor)
        } else {
            general_min(outer, checks.as_deref(), floor, self.executor)
        };
        found.ok_or_else(|| Error::Internal(format!("no codeword of {outer:?} outside the subcode")))
    }

    /// Full weight distribution, directly or via the dual and MacWilliams.
    pub fn weight_distribution(&self, code: &CyclicCode) -> Result<WeightDistribution> {
        let n = code.n() as usize;
        if code.k() == 0 {
            let mut counts = vec![0u128; n + 1];
            counts[0] = 1;
            return Ok(WeightDistribution { counts, method: Method::Exhaustive });
        }
        match self.affordable(code) {
            Ok(_) => Ok(WeightDistribution { counts: self.enumerate(code), method: Method::Exhaustive }),
            Err(direct) => {
                let dual = code.dual()?;
                if self.affordable(&dual).is_err() {
                    return Err(direct);
                }
                let dual_dist = WeightDistribution { counts: self.enumerate(&dual), method: Method::Exhaustive };
                let mut dist = macwilliams_transform(&dual_dist, code.n(), code.q(), dual.k())?;
                dist.method = Method::MacWilliams;
                Ok(dist)
            }
        }
    }

    fn enumerate(&self, code: &CyclicCode) -> Vec<u128> {
        if code.k() == 0 {
            let mut counts = vec![0u128; code.n() as usize + 1];
            counts[0] = 1;
            return counts;
        }
        if binary_fast_path(code) {
            let rows = bit_rows(code.generator_matrix().rows());
            binary_distribution(&rows, code.n() as usize, self.executor)
        } else {
            general_distribution(code, self.executor)
        }
    }
}

/// Serial [`WeightEngine::min_weight`].
pub fn min_weight(code: &CyclicCode, budget: u64) -> Result<WeightReport> {
    WeightEngine::serial(budget).min_weight(code)
}

/// Serial [`WeightEngine::min_weight_difference`].
pub fn min_weight_difference(outer: &CyclicCode, inner: &CyclicCode, budget: u64) -> Result<WeightReport> {
    WeightEngine::serial(budget).min_weight_difference(outer, inner)
}

/// Serial [`WeightEngine::weight_distribution`].
pub fn weight_distribution(code: &CyclicCode, budget: u64) -> Result<WeightDistribution> {
    WeightEngine::serial(budget).weight_distribution(code)
}

/// Distribution of the dual of a `[n, k]_q` code with distribution `dist`:
/// `B_j = q^{-k} sum_i A_i K_j(i)` where `K_j(i)` is the coefficient of `z^j`
/// in `(1 + (q-1) z)^(n-i) (1 - z)^i`.
pub fn macwilliams_transform(dist: &WeightDistribution, n: u32, q: u32, k: u32) -> Result<WeightDistribution> {
    let n_us = n as usize;
    if dist.counts.len() != n_us + 1 {
        return Err(Error::MalformedDistribution(format!("expected {} entries, got {}", n_us + 1, dist.counts.len())));
    }
    if dist.counts[0] != 1 {
        return Err(Error::MalformedDistribution("A_0 must be 1".to_string()));
    }
    let size = BigInt::from(q).pow(k);
    let total: BigInt = dist.counts.iter().map(|&c| BigInt::from(c)).sum();
    if total != size {
        return Err(Error::MalformedDistribution(format!("counts sum to {total}, expected {q}^{k}")));
    }
    let mut acc = vec![BigInt::zero(); n_us + 1];
    let qm1 = BigInt::from(q - 1);
    for (i, &a) in dist.counts.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mut poly = vec![BigInt::from(1)];
        for _ in 0..n_us - i {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d] += c;
                next[d + 1] += c * &qm1;
            }
            poly = next;
        }
        for _ in 0..i {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d] += c;
                next[d + 1] -= c;
            }
            poly = next;
        }
        let a = BigInt::from(a);
        for (j, c) in poly.iter().enumerate() {
            acc[j] += &a * c;
        }
    }
    let mut counts = Vec::with_capacity(n_us + 1);
    for (j, v) in acc.into_iter().enumerate() {
        let rem = &v % &size;
        if !rem.is_zero() {
            return Err(Error::MalformedDistribution(format!("B_{j} is not an integer")));
        }
        let b = (v / &size)
            .to_u128()
            .ok_or_else(|| Error::MalformedDistribution(format!("B_{j} is negative or too large")))?;
        counts.push(b);
    }
    Ok(WeightDistribution { counts, method: dist.method })
}

pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Positions `i` with `(a_i, b_i) != (0, 0)`.
pub fn symplectic_weight(a: &[u32], b: &[u32]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    Ok(a.iter().zip(b).filter(|(&x, &y)| x != 0 || y != 0).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::CodeSpace;

    fn code(n: u32, t: &[u32]) -> CyclicCode {
        CyclicCode::from_defining_set(&CodeSpace::new(n, 2).unwrap(), t.iter().copied()).unwrap()
    }

    #[test]
    fn hamming_and_repetition() {
        let ham = code(15, &[1, 2, 4, 8]);
        let r = min_weight(&ham, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.value, r.method), (3, Method::Exhaustive));
        let rep = code(15, &(1..15).collect::<Vec<_>>());
        assert_eq!(rep.k(), 1);
        assert_eq!(min_weight(&rep, DEFAULT_BUDGET).unwrap().value, 15);
        let zero = code(7, &(0..7).collect::<Vec<_>>());
        let z = min_weight(&zero, DEFAULT_BUDGET).unwrap();
        assert!(z.vacuous);
    }

    #[test]
    fn budget_and_macwilliams_route() {
        let ham = code(15, &[1, 2, 4, 8]);
        // 2^11 codewords do not fit in 100, but the 16-word dual does.
        let r = min_weight(&ham, 100).unwrap();
        assert_eq!((r.value, r.method), (3, Method::MacWilliams));
        let bch = code(15, &[1, 2, 3, 4, 6, 8, 9, 12]);
        assert_eq!(min_weight(&bch, 100).unwrap_err(), Error::BudgetExceeded { required: 128, budget: 100 });
        let b = WeightEngine::serial(100).min_weight_or_bound(&bch).unwrap();
        assert_eq!((b.value, b.method), (5, Method::BoundOnly));
        assert_eq!(format!("{b}"), "≥5");
    }

    #[test]
    fn differences() {
        let ham = code(15, &[1, 2, 4, 8]);
        let bch = code(15, &[1, 2, 3, 4, 6, 8, 9, 12]);
        let w = min_weight_difference(&ham, &bch.dual().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(w.value, 3);
        let w = min_weight_difference(&bch, &ham.dual().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(w.value, 5);
        let zero = code(15, &(0..15).collect::<Vec<_>>());
        assert_eq!(min_weight_difference(&bch, &zero, DEFAULT_BUDGET).unwrap().value, 5);
        assert!(matches!(min_weight_difference(&bch, &ham, DEFAULT_BUDGET), Err(Error::NotNested(_))));
        let same = min_weight_difference(&bch, &bch, DEFAULT_BUDGET).unwrap();
        assert!(same.vacuous);
        assert_eq!(same.value, 5);
    }

    #[test]
    fn distributions() {
        let ham7 = code(7, &[1, 2, 4]);
        let d = weight_distribution(&ham7, DEFAULT_BUDGET).unwrap();
        assert_eq!(d.pairs(), vec![(0, 1), (3, 7), (4, 7), (7, 1)]);
        let zero = code(7, &(0..7).collect::<Vec<_>>());
        assert_eq!(weight_distribution(&zero, DEFAULT_BUDGET).unwrap().pairs(), vec![(0, 1)]);
        let ham15 = code(15, &[1, 2, 4, 8]);
        let d = weight_distribution(&ham15, DEFAULT_BUDGET).unwrap();
        let simplex = macwilliams_transform(&d, 15, 2, 11).unwrap();
        assert_eq!(simplex.pairs(), vec![(0, 1), (8, 15)]);
        let direct = weight_distribution(&ham15.dual().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(direct.counts, simplex.counts);
    }

    #[test]
    fn transform_edge_cases() {
        let full = code(7, &[]);
        let d = weight_distribution(&full, DEFAULT_BUDGET).unwrap();
        assert_eq!(macwilliams_transform(&d, 7, 2, 7).unwrap().pairs(), vec![(0, 1)]);
        let ham7 = code(7, &[1, 2, 4]);
        let d = weight_distribution(&ham7, DEFAULT_BUDGET).unwrap();
        let back = macwilliams_transform(&macwilliams_transform(&d, 7, 2, 4).unwrap(), 7, 2, 3).unwrap();
        assert_eq!(back.counts, d.counts);
        let bad = WeightDistribution { counts: vec![1, 0, 0], method: Method::Exhaustive };
        assert!(macwilliams_transform(&bad, 2, 2, 1).is_err());
        let bad = WeightDistribution { counts: vec![2, 0, 0], method: Method::Exhaustive };
        assert!(macwilliams_transform(&bad, 2, 2, 1).is_err());
        let bad = WeightDistribution { counts: vec![1, 1], method: Method::Exhaustive };
        assert!(macwilliams_transform(&bad, 2, 2, 1).is_err());
    }

    #[test]
    fn nonbinary_codes() {
        let t = crate::galois::ModulusTable::builtin();
        let rs = CyclicCode::rs(8, 3, 1, &t).unwrap();
        assert_eq!(min_weight(&rs, DEFAULT_BUDGET).unwrap().value, 3);
        let rs = CyclicCode::rs(4, 2, 1, &t).unwrap();
        assert_eq!(min_weight(&rs, DEFAULT_BUDGET).unwrap().value, 2);
        let rs = CyclicCode::rs(4, 3, 1, &t).unwrap();
        assert_eq!(min_weight(&rs, DEFAULT_BUDGET).unwrap().value, 3);
        let d = weight_distribution(&CyclicCode::rs(8, 3, 1, &t).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.total(), 8u128.pow(5));
        // MDS [7,5,3]_8: A_3 = C(7,3) (q-1) = 245
        assert_eq!(d.counts[3], 245);
        let ternary = CyclicCode::hamming(3, 3, &t).unwrap();
        assert_eq!(min_weight(&ternary, DEFAULT_BUDGET).unwrap().value, 3);
    }

    #[test]
    fn symplectic() {
        assert_eq!(symplectic_weight(&[0, 0], &[0, 0]).unwrap(), 0);
        assert_eq!(symplectic_weight(&[1, 0, 1, 0], &[0, 0, 1, 1]).unwrap(), 3);
        let a = [1, 0, 2, 0, 1];
        assert_eq!(symplectic_weight(&a, &[0; 5]).unwrap(), hamming_weight(&a));
        assert!(symplectic_weight(&[1], &[1, 0]).is_err());
    }
}
