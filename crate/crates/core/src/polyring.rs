//! Polynomials over GF(q), cyclotomic cosets and the factorization of x^n - 1.

use alloc::{
    collections::BTreeMap,
    format,
    string::{String, ToString},
    sync::Arc,
    vec,
    vec::Vec,
};
use core::{fmt, ops};

use crate::galois::{Field, FieldElement, ModulusTable};
use crate::{numtheory, text, Error, Result};

/// Polynomial degree with `-inf` for the zero polynomial, so that
/// `deg(a * b) = deg(a) + deg(b)` holds without special cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial over a [`Field`], constant term first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::monomial(field, 1, 0)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    pub fn monomial(field: &Field, c: u32, e: usize) -> Poly {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Poly::from_raw(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Poly::from_raw(field, coeffs)
    }

    /// Validates every coefficient and trims trailing zeros.
    pub fn new(field: &Field, coeffs: Vec<u32>) -> Result<Poly> {
        if let Some(&value) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidElement { value, q: field.q() });
        }
        Ok(Poly::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Parses `x^4 + x + 1`, `a^3*x^2 + 2*x` and similar.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let coeffs = text::dense(text, |tok| field.parse_element(tok), |a, b| field.add(a, b))?;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            l => Degree::Finite(l - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len).map(|i| self.field.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::from_raw(&self.field, out))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len).map(|i| self.field.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::from_raw(&self.field, out))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::from_raw(f, out))
    }

    /// `(quotient, remainder)` with `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let Some(lead) = divisor.leading() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let lead_inv = f.inv(lead)?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dlen - 1], lead_inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dlen - 1);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    pub fn scale(&self, c: u32) -> Poly {
        let out = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::from_raw(&self.field, out)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs.iter().rev().fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// `x^deg * p(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::from_raw(&self.field, c)
    }

    /// Coefficients padded to length `n`.
    pub fn to_vector(&self, n: usize) -> Result<Vec<u32>> {
        if self.coeffs.len() > n {
            return Err(Error::LengthMismatch { expected: n, got: self.coeffs.len() });
        }
        let mut v = self.coeffs.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Re-expresses the coefficients in another field; `None` if `map` rejects one.
    pub fn map_field(&self, target: &Field, map: impl Fn(u32) -> Option<u32>) -> Option<Poly> {
        let coeffs = self.coeffs.iter().map(|&c| map(c)).collect::<Option<Vec<_>>>()?;
        Some(Poly::from_raw(target, coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = self.field.format_element(c);
            match (e, c) {
                (0, _) => f.write_str(&coef)?,
                (1, 1) => f.write_str("x")?,
                (_, 1) => write!(f, "x^{e}")?,
                (1, _) => write!(f, "{coef}*x")?,
                _ => write!(f, "{coef}*x^{e}")?,
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

macro_rules! poly_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl ops::$trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
    };
}

poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

/// An orbit `{s q^j mod n}` in Z_n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicCoset {
    n: u32,
    q: u32,
    members: Vec<u32>,
}

impl CyclotomicCoset {
    /// The coset of `s` modulo `n` under multiplication by `q`.
    pub fn of(n: u32, q: u32, s: u32) -> Result<CyclotomicCoset> {
        if numtheory::gcd(q as u64 % n as u64, n as u64) != 1 && n > 1 {
            return Err(Error::RepeatedRoots { n, q });
        }
        if s >= n {
            return Err(Error::ResidueOutOfRange { residue: s, n });
        }
        Ok(CyclotomicCoset { n, q, members: orbit(n, q, s) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn representative(&self) -> u32 {
        self.members[0]
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: u32) -> bool {
        self.members.binary_search(&r).is_ok()
    }

    /// Closed under multiplication by `q` modulo `n`.
    pub fn is_closed(&self) -> bool {
        let qn = (self.q % self.n.max(1)) as u64;
        self.members.iter().all(|&s| self.contains(((s as u64 * qn) % self.n as u64) as u32))
    }
}

impl fmt::Display for CyclotomicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(self.members.iter().copied()))
    }
}

/// `{a,b,c}` in ascending order.
pub fn format_set(items: impl IntoIterator<Item = u32>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Parses `{1,2,4,8}`, `1,2,4,8` or `{}`.
pub fn parse_set(text: &str) -> Result<Vec<u32>> {
    let inner = text.trim();
    let inner = inner.strip_prefix('{').unwrap_or(inner);
    let inner = inner.strip_suffix('}').unwrap_or(inner).trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad residue `{t}`")))).collect()
}

fn orbit(n: u32, q: u32, s: u32) -> Vec<u32> {
    let qn = (q % n) as u64;
    let mut members = vec![s];
    let mut x = (s as u64 * qn % n as u64) as u32;
    while x != s {
        members.push(x);
        x = (x as u64 * qn % n as u64) as u32;
    }
    members.sort_unstable();
    members
}

/// Partition of Z_n into cyclotomic cosets, sorted by representative.
pub fn cyclotomic_cosets(n: u32, q: u32) -> Result<Vec<CyclotomicCoset>> {
    if n == 0 {
        return Err(Error::InvalidParameters("length must be positive".to_string()));
    }
    if numtheory::gcd(q as u64, n as u64) != 1 {
        return Err(Error::RepeatedRoots { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let members = orbit(n, q, s);
        for &m in &members {
            seen[m as usize] = true;
        }
        out.push(CyclotomicCoset { n, q, members });
    }
    Ok(out)
}

struct SpaceInner {
    n: u32,
    base: Field,
    ext: Field,
    /// Primitive n-th root of unity in `ext`.
    alpha: u32,
    /// Base-field value -> its image in `ext`.
    embed: Vec<u32>,
    unembed: BTreeMap<u32, u32>,
    cosets: Vec<CyclotomicCoset>,
    coset_index: Vec<u32>,
    minimal: Vec<Poly>,
}

/// The ring GF(q)[x]/(x^n - 1) together with everything needed to move
/// between defining sets and polynomials: the splitting field, a fixed
/// primitive n-th root of unity alpha, the subfield embedding, the cyclotomic
/// cosets and their minimal polynomials. Cheap to clone.
#[derive(Clone)]
pub struct CodeSpace(Arc<SpaceInner>);

impl CodeSpace {
    pub fn new(n: u32, q: u32) -> Result<CodeSpace> {
        CodeSpace::with_table(n, q, &ModulusTable::builtin())
    }

    pub fn with_table(n: u32, q: u32, table: &ModulusTable) -> Result<CodeSpace> {
        let base = table.field_of_size(q)?;
        let (ext, alpha) = table.nth_root_field(n, q)?;
        let (embed, unembed) = subfield_embedding(&base, &ext)?;
        let cosets = cyclotomic_cosets(n, q)?;
        let mut coset_index = vec![0u32; n as usize];
        for (i, c) in cosets.iter().enumerate() {
            for &m in c.members() {
                coset_index[m as usize] = i as u32;
            }
        }
        let mut inner =
            SpaceInner { n, base, ext, alpha: alpha.value(), embed, unembed, cosets, coset_index, minimal: Vec::new() };
        let minimal = inner.cosets.iter().map(|c| expand_minimal(&inner, c)).collect::<Result<Vec<_>>>()?;
        inner.minimal = minimal;
        Ok(CodeSpace(Arc::new(inner)))
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn q(&self) -> u32 {
        self.0.base.q()
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }

    pub fn ext(&self) -> &Field {
        &self.0.ext
    }

    pub fn alpha(&self) -> FieldElement {
        self.0.ext.element(self.0.alpha).expect("alpha lies in the extension field")
    }

    /// `alpha^i` as an extension-field value.
    pub fn alpha_pow(&self, i: u64) -> u32 {
        self.0.ext.pow(self.0.alpha, i)
    }

    pub fn embed(&self, v: u32) -> u32 {
        self.0.embed[v as usize]
    }

    pub fn unembed(&self, v: u32) -> Option<u32> {
        self.0.unembed.get(&v).copied()
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.0.cosets
    }

    pub fn coset_index(&self, residue: u32) -> usize {
        self.0.coset_index[residue as usize] as usize
    }

    pub fn coset_containing(&self, residue: u32) -> &CyclotomicCoset {
        &self.0.cosets[self.coset_index(residue)]
    }

    pub(crate) fn minimal_by_index(&self, i: usize) -> &Poly {
        &self.0.minimal[i]
    }

    /// Minimal polynomial over GF(q) of `alpha^s` for `s` in the coset.
    pub fn minimal_polynomial(&self, coset: &CyclotomicCoset) -> Result<Poly> {
        if coset.n() != self.n() || coset.is_empty() || !coset.is_closed() {
            return Err(Error::InvalidParameters(format!(
                "{coset} is not a cyclotomic coset modulo {} over GF({})",
                self.n(),
                self.q()
            )));
        }
        let i = self.coset_index(coset.representative());
        if self.0.cosets[i] != *coset {
            return Err(Error::InvalidParameters(format!("{coset} is not closed under multiplication by q")));
        }
        Ok(self.0.minimal[i].clone())
    }

    /// `x^n - 1` as the product of the minimal polynomials, one per coset.
    pub fn factor_xn_minus_1(&self) -> Vec<(CyclotomicCoset, Poly)> {
        self.0.cosets.iter().cloned().zip(self.0.minimal.iter().cloned()).collect()
    }

    pub fn x_n_minus_1(&self) -> Poly {
        Poly::x_n_minus_1(&self.0.base, self.0.n as usize)
    }

    /// `v(alpha^i)` for a coefficient vector over the base field.
    pub fn eval_at_root(&self, v: &[u32], i: u32) -> u32 {
        let ext = &self.0.ext;
        let x = self.alpha_pow(i as u64);
        v.iter().rev().fold(0, |acc, &c| ext.add(ext.mul(acc, x), self.embed(c)))
    }
}

impl PartialEq for CodeSpace {
    fn eq(&self, other: &CodeSpace) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n && self.0.base == other.0.base && self.0.ext == other.0.ext)
    }
}

impl Eq for CodeSpace {}

impl fmt::Debug for CodeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeSpace(n={}, q={}, ext={:?})", self.n(), self.q(), self.ext())
    }
}

/// GF(q) inside GF(Q): map the base primitive element to a root of the base
/// modulus among the elements `g^(t (Q-1)/(q-1))` of the subfield.
fn subfield_embedding(base: &Field, ext: &Field) -> Result<(Vec<u32>, BTreeMap<u32, u32>)> {
    let (q, order) = (base.q() as u64, ext.order());
    if base.p() != ext.p() || !ext.m().is_multiple_of(base.m()) {
        return Err(Error::Internal(format!("{base} is not a subfield of {ext}")));
    }
    let step = order / (q - 1);
    let eval_modulus = |x: u32| base.modulus().iter().rev().fold(0, |acc, &c| ext.add(ext.mul(acc, x), c));
    let rho = (1..q.max(2))
        .filter(|&t| numtheory::gcd(t, q - 1) == 1)
        .map(|t| ext.exp(t * step))
        .find(|&x| eval_modulus(x) == 0)
        .ok_or_else(|| Error::Internal(format!("no root of the {base} modulus in {ext}")))?;
    let mut embed = vec![0u32; base.q() as usize];
    let mut unembed = BTreeMap::new();
    unembed.insert(0, 0);
    let mut image = 1u32;
    for l in 0..q - 1 {
        let v = base.exp(l);
        embed[v as usize] = image;
        unembed.insert(image, v);
        image = ext.mul(image, rho);
    }
    Ok((embed, unembed))
}

fn expand_minimal(space: &SpaceInner, coset: &CyclotomicCoset) -> Result<Poly> {
    let ext = &space.ext;
    let mut prod = vec![1u32];
    for &s in coset.members() {
        let root = ext.pow(space.alpha, s as u64);
        let neg_root = ext.neg(root);
        let mut next = vec![0u32; prod.len() + 1];
        for (i, &c) in prod.iter().enumerate() {
            next[i + 1] = ext.add(next[i + 1], c);
            next[i] = ext.add(next[i], ext.mul(c, neg_root));
        }
        prod = next;
    }
    let coeffs = prod.iter().map(|c| space.unembed.get(c).copied()).collect::<Option<Vec<_>>>().ok_or_else(|| {
        Error::Internal(format!("minimal polynomial of coset {coset} has a coefficient outside GF({})", space.base.q()))
    })?;
    Ok(Poly::from_raw(&space.base, coeffs))
}

/// See [`CodeSpace::minimal_polynomial`]; builds the space with built-in moduli.
pub fn minimal_polynomial(n: u32, q: u32, coset: &CyclotomicCoset) -> Result<Poly> {
    CodeSpace::new(n, q)?.minimal_polynomial(coset)
}

/// See [`CodeSpace::factor_xn_minus_1`].
pub fn factor_xn_minus_1(n: u32, q: u32) -> Result<Vec<(CyclotomicCoset, Poly)>> {
    Ok(CodeSpace::new(n, q)?.factor_xn_minus_1())
}
