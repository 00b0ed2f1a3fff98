//! Cyclic codes identified by `(n, q, T)`.
//!
//! The defining set is authoritative: intersections, sums, duals and
//! containment are computed by set arithmetic on `T` and the generator
//! polynomial is derived from it. Every polynomial-side route is kept as a
//! cross-check and a disagreement surfaces as [`Error::Internal`].

use alloc::{collections::BTreeSet, format, string::ToString, vec, vec::Vec};
use core::fmt;

use crate::descriptor::CodeDescriptor;
use crate::galois::{Field, ModulusTable};
use crate::polyring::{format_set, CodeSpace, CyclotomicCoset, Poly};
use crate::{numtheory, Error, Result};

/// A set of residues mod n closed under multiplication by q.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefiningSet {
    n: u32,
    q: u32,
    members: BTreeSet<u32>,
}

impl DefiningSet {
    /// Rejects residues outside Z_n and sets that are not unions of cosets.
    pub fn new(n: u32, q: u32, members: impl IntoIterator<Item = u32>) -> Result<DefiningSet> {
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&r) = members.iter().find(|&&r| r >= n) {
            return Err(Error::ResidueOutOfRange { residue: r, n });
        }
        for &s in &members {
            let coset = CyclotomicCoset::of(n, q, s)?;
            if !coset.members().iter().all(|m| members.contains(m)) {
                return Err(Error::NotCosetClosed { residue: s, coset: coset.to_string() });
            }
        }
        Ok(DefiningSet { n, q, members })
    }

    /// Smallest union of cosets containing `residues` (taken mod n).
    pub fn closure(n: u32, q: u32, residues: impl IntoIterator<Item = u32>) -> Result<DefiningSet> {
        let mut members = BTreeSet::new();
        for r in residues {
            let coset = CyclotomicCoset::of(n, q, r % n)?;
            members.extend(coset.members().iter().copied());
        }
        Ok(DefiningSet { n, q, members })
    }

    pub fn empty(n: u32, q: u32) -> DefiningSet {
        DefiningSet { n, q, members: BTreeSet::new() }
    }

    pub fn full(n: u32, q: u32) -> DefiningSet {
        DefiningSet { n, q, members: (0..n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: u32) -> bool {
        self.members.contains(&r)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn same(&self, other: &DefiningSet) -> Result<()> {
        if self.n == other.n && self.q == other.q {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn with(&self, members: BTreeSet<u32>) -> DefiningSet {
        DefiningSet { n: self.n, q: self.q, members }
    }

    pub fn union(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.same(other)?;
        Ok(self.with(self.members.union(&other.members).copied().collect()))
    }

    pub fn intersection(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.same(other)?;
        Ok(self.with(self.members.intersection(&other.members).copied().collect()))
    }

    pub fn difference(&self, other: &DefiningSet) -> Result<DefiningSet> {
        self.same(other)?;
        Ok(self.with(self.members.difference(&other.members).copied().collect()))
    }

    pub fn is_subset(&self, other: &DefiningSet) -> Result<bool> {
        self.same(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    /// `Z_n \ T`.
    pub fn complement(&self) -> DefiningSet {
        self.with((0..self.n).filter(|r| !self.members.contains(r)).collect())
    }

    /// `T^{-1} = {-t mod n}`.
    pub fn negated(&self) -> DefiningSet {
        self.with(self.members.iter().map(|&t| (self.n - t) % self.n).collect())
    }

    /// Longest run `b, b+1, ..., b+l-1` (cyclically) inside `a T` over units `a`,
    /// plus one. Multipliers are only scanned for `n <= 4096`.
    pub fn bch_bound(&self) -> u32 {
        let n = self.n;
        if self.members.len() == n as usize {
            return n + 1;
        }
        let multipliers: Vec<u32> = if n <= 4096 {
            (1..n.max(2)).filter(|&a| numtheory::gcd(a as u64, n as u64) == 1).collect()
        } else {
            vec![1]
        };
        let mut best = 0usize;
        let mut mask = vec![false; n as usize];
        for a in multipliers {
            mask.iter_mut().for_each(|m| *m = false);
            for &t in &self.members {
                mask[((t as u64 * a as u64) % n as u64) as usize] = true;
            }
            best = best.max(longest_cyclic_run(&mask));
        }
        best as u32 + 1
    }
}

fn longest_cyclic_run(mask: &[bool]) -> usize {
    let n = mask.len();
    let Some(start) = mask.iter().position(|&m| !m) else {
        return n;
    };
    let (mut best, mut run) = (0, 0);
    for i in 1..=n {
        if mask[(start + i) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(self.iter()))
    }
}

impl fmt::Debug for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{self} mod {} (q={})", self.n, self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixRole {
    Generator,
    Parity,
}

/// A dense matrix over a field whose rows generate a code (or its dual).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckMatrix {
    field: Field,
    cols: usize,
    rows: Vec<Vec<u32>>,
    role: MatrixRole,
}

impl CheckMatrix {
    pub fn new(field: &Field, cols: usize, rows: Vec<Vec<u32>>, role: MatrixRole) -> Result<CheckMatrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, got: r.len() });
        }
        if let Some(&value) = rows.iter().flatten().find(|&&v| !field.contains(v)) {
            return Err(Error::InvalidElement { value, q: field.q() });
        }
        Ok(CheckMatrix { field: field.clone(), cols, rows, role })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn role(&self) -> MatrixRole {
        self.role
    }

    fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.field.add(acc, self.field.mul(x, y)))
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &CheckMatrix) -> Result<Vec<Vec<u32>>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch);
        }
        Ok(self.rows.iter().map(|a| other.rows.iter().map(|b| self.dot(a, b)).collect()).collect())
    }

    /// True when every row is orthogonal to `v`.
    pub fn annihilates(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        Ok(self.rows.iter().all(|r| self.dot(r, v) == 0))
    }

    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = f.inv(m[rank][col]).expect("pivot is nonzero");
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || row[col] == 0 {
                    continue;
                }
                let factor = f.mul(row[col], inv);
                for (dst, &src) in row[col..self.cols].iter_mut().zip(&pivot_row[col..self.cols]) {
                    *dst = f.sub(*dst, f.mul(factor, src));
                }
            }
            rank += 1;
        }
        rank
    }
}

/// A cyclic code of length `n` over GF(q) given by its defining set.
#[derive(Clone)]
pub struct CyclicCode {
    space: CodeSpace,
    defining: DefiningSet,
    generator: Poly,
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &CyclicCode) -> bool {
        self.space == other.space && self.defining == other.defining
    }
}

impl Eq for CyclicCode {}

impl CyclicCode {
    pub fn from_defining_set(space: &CodeSpace, members: impl IntoIterator<Item = u32>) -> Result<CyclicCode> {
        let set = DefiningSet::new(space.n(), space.q(), members)?;
        CyclicCode::from_set(space, set)
    }

    pub fn from_set(space: &CodeSpace, set: DefiningSet) -> Result<CyclicCode> {
        if set.n() != space.n() || set.q() != space.q() {
            return Err(Error::SpaceMismatch);
        }
        let mut generator = Poly::one(space.base());
        for (i, coset) in space.cosets().iter().enumerate() {
            if set.contains(coset.representative()) {
                generator = &generator * space.minimal_by_index(i);
            }
        }
        Ok(CyclicCode { space: space.clone(), defining: set, generator })
    }

    /// Every cyclic code of the space, one per subset of cyclotomic cosets,
    /// ordered by the subset bitmask. Fails beyond `max_cosets` cosets.
    pub fn all(space: &CodeSpace, max_cosets: usize) -> Result<Vec<CyclicCode>> {
        let cosets = space.cosets();
        if cosets.len() > max_cosets {
            return Err(Error::InvalidParameters(format!(
                "{} cyclotomic cosets give 2^{} cyclic codes, limit is 2^{max_cosets}",
                cosets.len(),
                cosets.len()
            )));
        }
        (0u64..1 << cosets.len())
            .map(|mask| {
                let members = cosets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .flat_map(|(_, c)| c.members().iter().copied());
                CyclicCode::from_defining_set(space, members)
            })
            .collect()
    }

    /// The whole space `[n, n, 1]` (empty defining set).
    pub fn full(space: &CodeSpace) -> CyclicCode {
        CyclicCode::from_set(space, DefiningSet::empty(space.n(), space.q())).expect("empty set is closed")
    }

    pub fn zero(space: &CodeSpace) -> CyclicCode {
        CyclicCode::from_set(space, DefiningSet::full(space.n(), space.q())).expect("Z_n is closed")
    }

    /// BCH code with designed distance `delta` and offset `b`: the cosets of
    /// `b, b+1, ..., b+delta-2`.
    pub fn bch(space: &CodeSpace, delta: u32, b: u32) -> Result<CyclicCode> {
        let n = space.n();
        if delta < 2 || delta > n {
            return Err(Error::DeltaOutOfRange { delta, n });
        }
        let residues = (0..delta - 1).map(|j| ((b as u64 + j as u64) % n as u64) as u32);
        let set = DefiningSet::closure(n, space.q(), residues)?;
        CyclicCode::from_set(space, set)
    }

    /// Reed-Solomon code of length `q - 1`.
    pub fn rs(q: u32, delta: u32, b: u32, table: &ModulusTable) -> Result<CyclicCode> {
        if q < 3 {
            return Err(Error::InvalidParameters(format!("Reed-Solomon codes need q >= 3, got {q}")));
        }
        let space = CodeSpace::with_table(q - 1, q, table)?;
        CyclicCode::bch(&space, delta, b)
    }

    /// Cyclic Hamming code of length `(q^m - 1)/(q - 1)`; requires `gcd(m, q - 1) = 1`.
    pub fn hamming(m: u32, q: u32, table: &ModulusTable) -> Result<CyclicCode> {
        if m < 2 {
            return Err(Error::InvalidParameters("Hamming codes need m >= 2".to_string()));
        }
        if numtheory::gcd(m as u64, q as u64 - 1) != 1 {
            return Err(Error::InvalidParameters(format!("no cyclic Hamming code for m={m}, q={q}")));
        }
        let qm = (q as u64)
            .checked_pow(m)
            .filter(|&v| v <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParameters("Hamming length too large".to_string()))?;
        let n = ((qm - 1) / (q as u64 - 1)) as u32;
        let space = CodeSpace::with_table(n, q, table)?;
        let set = DefiningSet::closure(n, q, [1])?;
        CyclicCode::from_set(&space, set)
    }

    pub fn space(&self) -> &CodeSpace {
        &self.space
    }

    pub fn n(&self) -> u32 {
        self.space.n()
    }

    pub fn q(&self) -> u32 {
        self.space.q()
    }

    pub fn k(&self) -> u32 {
        self.n() - self.defining.len() as u32
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn check_polynomial(&self) -> Poly {
        let (h, r) = self.space.x_n_minus_1().div_rem(&self.generator).expect("g is nonzero");
        debug_assert!(r.is_zero());
        h
    }

    pub fn bch_bound(&self) -> u32 {
        self.defining.bch_bound()
    }

    fn same_space(&self, other: &CyclicCode) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Euclidean dual. The defining set `Z_n \ (-T)` must generate the same code
    /// as the reversed check polynomial `x^k h(1/x) / h(0)`.
    pub fn dual(&self) -> Result<CyclicCode> {
        let set = self.defining.negated().complement();
        let dual = CyclicCode::from_set(&self.space, set)?;
        let h = self.check_polynomial();
        let reversed = h.reciprocal().monic();
        if reversed != dual.generator {
            return Err(Error::Internal(format!(
                "dual generator {} disagrees with reversed check polynomial {}",
                dual.generator, reversed
            )));
        }
        Ok(dual)
    }

    /// `C1 ∩ C2`, defining set `T1 ∪ T2`.
    pub fn intersect(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.same_space(other)?;
        CyclicCode::from_set(&self.space, self.defining.union(&other.defining)?)
    }

    /// `C1 + C2`, defining set `T1 ∩ T2`.
    pub fn sum(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.same_space(other)?;
        CyclicCode::from_set(&self.space, self.defining.intersection(&other.defining)?)
    }

    /// True iff `other ⊆ self`. Defining-set inclusion `T_self ⊆ T_other`,
    /// `g_self | g_other` and `h_other | h_self` are all evaluated and must agree.
    pub fn contains(&self, other: &CyclicCode) -> Result<bool> {
        self.same_space(other)?;
        let by_set = self.defining.is_subset(&other.defining)?;
        let by_generator = self.generator.divides(&other.generator)?;
        let by_check = other.check_polynomial().divides(&self.check_polynomial())?;
        if by_set != by_generator || by_set != by_check {
            return Err(Error::Internal(format!(
                "containment criteria disagree: set={by_set} generator={by_generator} check={by_check}"
            )));
        }
        Ok(by_set)
    }

    /// `k x n`, rows are the shifts `x^i g(x)`.
    pub fn generator_matrix(&self) -> CheckMatrix {
        let n = self.n() as usize;
        let rows = (0..self.k() as usize)
            .map(|i| {
                let mut row = vec![0u32; n];
                row[i..i + self.generator.coeffs().len()].copy_from_slice(self.generator.coeffs());
                row
            })
            .collect();
        CheckMatrix::new(self.space.base(), n, rows, MatrixRole::Generator).expect("well-formed rows")
    }

    /// `(n - k) x n`, rows are the shifts of the reversed check polynomial.
    pub fn parity_check_matrix(&self) -> CheckMatrix {
        let n = self.n() as usize;
        let reversed = self.check_polynomial().reciprocal();
        let rows = (0..n - self.k() as usize)
            .map(|i| {
                let mut row = vec![0u32; n];
                row[i..i + reversed.coeffs().len()].copy_from_slice(reversed.coeffs());
                row
            })
            .collect();
        CheckMatrix::new(self.space.base(), n, rows, MatrixRole::Parity).expect("well-formed rows")
    }

    /// `c(x) = m(x) g(x)` as a length-n vector.
    pub fn encode(&self, message: &Poly) -> Result<Vec<u32>> {
        if message.field() != self.space.base() {
            return Err(Error::FieldMismatch);
        }
        if let Some(d) = message.degree().finite() {
            if d >= self.k() as usize {
                return Err(Error::MessageTooLong { degree: d, k: self.k() as usize });
            }
        }
        message.checked_mul(&self.generator)?.to_vector(self.n() as usize)
    }

    /// `c(alpha^i) = 0` for every `i` in the defining set.
    pub fn is_codeword(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.n() as usize {
            return Err(Error::LengthMismatch { expected: self.n() as usize, got: v.len() });
        }
        if let Some(&value) = v.iter().find(|&&c| !self.space.base().contains(c)) {
            return Err(Error::InvalidElement { value, q: self.q() });
        }
        Ok(self.defining.iter().all(|i| self.space.eval_at_root(v, i) == 0))
    }

    /// Canonical explicit descriptor `q=.. n=.. T={..}`.
    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor::Explicit { q: self.q(), n: self.n(), members: self.defining.to_vec() }
    }
}

impl fmt::Display for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{}", self.n(), self.k(), self.q())
    }
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicCode({self} T={})", self.defining)
    }
}
