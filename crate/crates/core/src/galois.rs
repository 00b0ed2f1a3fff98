//! Finite fields GF(p^m).
//!
//! Elements are integer-encoded polynomial residues: digit `i` in base `p` is
//! the coefficient of `x^i` modulo the field's primitive modulus. Fields with
//! at most 2^16 elements carry log/antilog tables; larger ones (up to 2^20)
//! multiply residues directly.

use alloc::{
    collections::BTreeMap,
    format,
    string::{String, ToString},
    sync::Arc,
    vec,
    vec::Vec,
};
use core::{fmt, ops};

use crate::{numtheory, text, Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 20;
const TABLE_LIMIT: u32 = 1 << 16;
const MAX_DEGREE: usize = 20;

/// Table-free residue arithmetic modulo a monic polynomial over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Residues {
    p: u32,
    m: usize,
    /// Constant term first, `len == m + 1`, leading coefficient 1.
    modulus: Vec<u32>,
}

impl Residues {
    fn digits(&self, mut v: u32) -> [u64; MAX_DEGREE] {
        let mut d = [0u64; MAX_DEGREE];
        for slot in d.iter_mut().take(self.m) {
            *slot = (v % self.p) as u64;
            v /= self.p;
        }
        d
    }

    fn compose(&self, d: &[u64]) -> u32 {
        d[..self.m].iter().rev().fold(0u32, |acc, &c| acc * self.p + (c % self.p as u64) as u32)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut s = [0u64; MAX_DEGREE];
        for i in 0..self.m {
            s[i] = da[i] + db[i];
        }
        self.compose(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u64;
        let mut d = self.digits(a);
        for c in d.iter_mut().take(self.m) {
            *c = (p - *c) % p;
        }
        self.compose(&d)
    }

    /// Reduces a coefficient vector of arbitrary length modulo the modulus.
    fn reduce(&self, t: &mut [u64]) -> u32 {
        let p = self.p as u64;
        for i in (self.m..t.len()).rev() {
            let c = t[i] % p;
            t[i] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..self.m {
                let k = i - self.m + j;
                t[k] = (t[k] + (p - c) * self.modulus[j] as u64) % p;
            }
        }
        if t.len() < self.m {
            let mut padded = [0u64; MAX_DEGREE];
            padded[..t.len()].copy_from_slice(t);
            return self.compose(&padded);
        }
        self.compose(t)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut t = [0u64; 2 * MAX_DEGREE];
        let p = self.p as u64;
        for i in 0..self.m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..self.m {
                t[i + j] = (t[i + j] + da[i] * db[j]) % p;
            }
        }
        self.reduce(&mut t[..(2 * self.m).max(1)])
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The residue of `x`; it is `p` for `m >= 2` and `-c0` for `m = 1`.
    fn x(&self) -> u32 {
        let mut t = [0u64, 1u64];
        self.reduce(&mut t)
    }

    fn is_primitive(&self) -> bool {
        let q = (self.p as u64).pow(self.m as u32);
        let order = q - 1;
        let x = self.x();
        if self.pow(x, order) != 1 {
            return false;
        }
        numtheory::prime_factors(order).into_iter().all(|r| self.pow(x, order / r) != 1)
    }
}

fn field_size(p: u32, m: u32) -> Result<u32> {
    if !numtheory::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::UnsupportedField { p, m });
    }
    match p.checked_pow(m) {
        Some(q) if q <= MAX_FIELD_SIZE => Ok(q),
        _ => Err(Error::UnsupportedField { p, m }),
    }
}

/// Lexicographically smallest primitive polynomial of degree `m` over GF(p),
/// ordering candidates by their integer encoding `sum c_i p^i`.
pub fn default_modulus(p: u32, m: u32) -> Result<Vec<u32>> {
    let q = field_size(p, m)?;
    for low in 0..q {
        let mut modulus = Vec::with_capacity(m as usize + 1);
        let mut rest = low;
        for _ in 0..m {
            modulus.push(rest % p);
            rest /= p;
        }
        modulus.push(1);
        if modulus[0] == 0 {
            continue;
        }
        let r = Residues { p, m: m as usize, modulus };
        if r.is_primitive() {
            return Ok(r.modulus);
        }
    }
    Err(Error::Internal(format!("no primitive polynomial found for GF({p}^{m})")))
}

struct Tables {
    /// `exp[i] = primitive^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    arith: Residues,
    q: u32,
    primitive: u32,
    tables: Option<Tables>,
}

/// A finite field GF(p^m) with a primitive modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl Field {
    /// GF(p^m) with the built-in (smallest primitive) modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        Field::with_modulus(p, m, &default_modulus(p, m)?)
    }

    /// GF(p^m) with an explicit modulus, constant term first. The modulus must
    /// be monic, of degree `m`, and primitive.
    pub fn with_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Field> {
        let q = field_size(p, m)?;
        let invalid = |reason: &str| Error::InvalidModulus { p, m, reason: reason.to_string() };
        if modulus.len() != m as usize + 1 {
            return Err(invalid("degree does not match m"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(invalid("coefficient not in GF(p)"));
        }
        if modulus[m as usize] != 1 {
            return Err(invalid("not monic"));
        }
        let arith = Residues { p, m: m as usize, modulus: modulus.to_vec() };
        if !arith.is_primitive() {
            return Err(invalid("not primitive"));
        }
        let primitive = arith.x();
        let tables = (q <= TABLE_LIMIT).then(|| {
            let order = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * order.max(1)];
            let mut log = vec![0u32; q as usize];
            let mut acc = 1u32;
            for (i, e) in exp[..order].iter_mut().enumerate() {
                *e = acc;
                log[acc as usize] = i as u32;
                acc = arith.mul(acc, primitive);
            }
            exp.copy_within(0..order, order);
            if order == 0 {
                exp[0] = 1;
            }
            Tables { exp, log }
        });
        Ok(Field(Arc::new(Inner { arith, q, primitive, tables })))
    }

    pub fn p(&self) -> u32 {
        self.0.arith.p
    }

    pub fn m(&self) -> u32 {
        self.0.arith.m as u32
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn order(&self) -> u64 {
        self.0.q as u64 - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.arith.modulus
    }

    /// Encoded value of the primitive element (the residue of `x`).
    pub fn primitive(&self) -> u32 {
        self.0.primitive
    }

    pub fn is_prime_field(&self) -> bool {
        self.m() == 1
    }

    pub fn contains(&self, v: u32) -> bool {
        v < self.0.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.0.arith.add(a, b)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.0.arith.neg(a)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None => self.0.arith.mul(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => t.exp[self.order() as usize - t.log[a as usize] as usize],
            None => self.0.arith.pow(a, self.order() - 1),
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        match &self.0.tables {
            Some(t) => {
                let l = (t.log[a as usize] as u64 * (e % self.order().max(1))) % self.order().max(1);
                t.exp[l as usize]
            }
            None => self.0.arith.pow(a, e),
        }
    }

    /// `primitive^i`.
    pub fn exp(&self, i: u64) -> u32 {
        match &self.0.tables {
            Some(t) => t.exp[(i % self.order().max(1)) as usize],
            None => self.0.arith.pow(self.0.primitive, i),
        }
    }

    /// Discrete logarithm to the primitive base; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u64> {
        if a == 0 || !self.contains(a) {
            return None;
        }
        match &self.0.tables {
            Some(t) => Some(t.log[a as usize] as u64),
            None => {
                let mut acc = 1u32;
                for i in 0..self.order() {
                    if acc == a {
                        return Some(i);
                    }
                    acc = self.0.arith.mul(acc, self.0.primitive);
                }
                None
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        let order = self.order();
        self.log(a).map(|l| order / numtheory::gcd(l, order))
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::InvalidElement { value, q: self.q() });
        }
        Ok(FieldElement { field: self.clone(), value })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 1 }
    }

    pub fn alpha(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: self.0.primitive }
    }

    /// Decimal in prime fields; `a^k` powers of the primitive element otherwise.
    pub fn format_element(&self, v: u32) -> String {
        if self.is_prime_field() || v <= 1 {
            return v.to_string();
        }
        match self.log(v) {
            Some(1) => "a".to_string(),
            Some(k) => format!("a^{k}"),
            None => v.to_string(),
        }
    }

    /// Inverse of [`Field::format_element`]; plain integers are taken as encoded values.
    pub fn parse_element(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        let value = if s == "a" {
            self.primitive()
        } else if let Some(e) = s.strip_prefix("a^") {
            let e: u64 = e.trim().parse().map_err(|_| Error::Parse(format!("bad power `{s}`")))?;
            self.exp(e)
        } else {
            s.parse::<u32>().map_err(|_| Error::Parse(format!("bad field element `{s}`")))?
        };
        if !self.contains(value) {
            return Err(Error::InvalidElement { value, q: self.q() });
        }
        Ok(value)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.arith == other.0.arith
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {})", self.p(), self.m(), format_prime_poly(self.modulus()))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

fn format_prime_poly(coeffs: &[u32]) -> String {
    let mut parts = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        };
        parts.push(match (c, e) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    parts.join(" + ")
}

/// An element tied to its field. Operators panic on mixed fields; the
/// `checked_*` methods report [`Error::FieldMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        self.field.element_order(self.value)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format_element(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.value))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("operands from different fields")
            }
        }
        impl ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let v = self.field.neg(self.value);
        self.with(v)
    }
}

/// Per-(p, m) modulus overrides on top of the built-in table.
///
/// Text format, one entry per line, `#` starts a comment:
///
/// ```text
/// p=2 m=4 modulus=x^4 + x^3 + 1
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModulusTable {
    overrides: BTreeMap<(u32, u32), Vec<u32>>,
}

impl ModulusTable {
    pub fn builtin() -> ModulusTable {
        ModulusTable::default()
    }

    pub fn is_empty(&self) -> bool {
        self.overrides.is_empty()
    }

    /// Validates and stores an override.
    pub fn insert(&mut self, p: u32, m: u32, modulus: Vec<u32>) -> Result<()> {
        Field::with_modulus(p, m, &modulus)?;
        self.overrides.insert((p, m), modulus);
        Ok(())
    }

    pub fn parse(text: &str) -> Result<ModulusTable> {
        let mut table = ModulusTable::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
            let at = line.find("modulus=").ok_or_else(|| bad("missing modulus="))?;
            let (head, poly) = (&line[..at], &line[at + "modulus=".len()..]);
            let (mut p, mut m) = (None, None);
            for tok in head.split_whitespace() {
                let (key, value) = tok.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                let value: u32 = value.parse().map_err(|_| bad("bad integer"))?;
                match key {
                    "p" => p = Some(value),
                    "m" => m = Some(value),
                    _ => return Err(bad("unknown key")),
                }
            }
            let (p, m) = (p.ok_or_else(|| bad("missing p"))?, m.ok_or_else(|| bad("missing m"))?);
            if !numtheory::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let coeffs = text::dense(
                poly,
                |tok| {
                    let c: u32 = tok.parse().map_err(|_| bad("bad coefficient"))?;
                    Ok(c % p)
                },
                |a, b| (a + b) % p,
            )?;
            table.insert(p, m, coeffs)?;
        }
        Ok(table)
    }

    pub fn modulus(&self, p: u32, m: u32) -> Result<Vec<u32>> {
        match self.overrides.get(&(p, m)) {
            Some(v) => Ok(v.clone()),
            None => default_modulus(p, m),
        }
    }

    pub fn field(&self, p: u32, m: u32) -> Result<Field> {
        Field::with_modulus(p, m, &self.modulus(p, m)?)
    }

    pub fn field_of_size(&self, q: u32) -> Result<Field> {
        let (p, m) = numtheory::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        self.field(p, m)
    }

    /// The splitting field of `x^n - 1` over GF(q), GF(q^m') with
    /// `m' = ord_n(q)`, and an element of multiplicative order exactly `n`.
    pub fn nth_root_field(&self, n: u32, q: u32) -> Result<(Field, FieldElement)> {
        let (p, m0) = numtheory::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if n == 0 {
            return Err(Error::InvalidParameters("length must be positive".to_string()));
        }
        let ord = numtheory::multiplicative_order(q as u64, n as u64).ok_or(Error::RepeatedRoots { n, q })?;
        let ext = self.field(p, m0 * ord)?;
        let alpha = ext.exp(ext.order() / n as u64);
        let alpha = ext.element(alpha)?;
        Ok((ext, alpha))
    }
}

/// GF(p^m) with the built-in modulus.
pub fn make_field(p: u32, m: u32) -> Result<Field> {
    Field::new(p, m)
}

/// See [`ModulusTable::nth_root_field`]; uses the built-in moduli.
pub fn nth_root_field(n: u32, q: u32) -> Result<(Field, FieldElement)> {
    ModulusTable::builtin().nth_root_field(n, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_gf2() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.primitive(), 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.modulus(), &[1, 1]);
    }

    #[test]
    fn gf16_default_modulus_and_reduction() {
        let f = make_field(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        let a = f.primitive();
        // alpha^4 = alpha + 1
        assert_eq!(f.pow(a, 4), f.add(a, 1));
        // alpha^5 = alpha^2 + alpha, by reducing alpha * alpha^4 by hand
        let a4 = 0b0011;
        let a5_oracle = {
            let shifted = a4 << 1; // alpha * (alpha + 1) = alpha^2 + alpha, no reduction needed
            shifted & 0xf
        };
        assert_eq!(f.pow(a, 5), a5_oracle);
        assert_eq!(f.pow(a, 5), 0b0110);
        assert_eq!(f.inv(a).unwrap(), f.pow(a, 14));
    }

    #[test]
    fn gf16_alpha_has_order_15() {
        let f = make_field(2, 4).unwrap();
        let a = f.primitive();
        let mut acc = 1;
        for j in 1..15 {
            acc = f.mul(acc, a);
            assert_ne!(acc, 1, "alpha^{j} = 1");
        }
        assert_eq!(f.mul(acc, a), 1);
    }

    #[test]
    fn known_smallest_primitive_polynomials() {
        assert_eq!(default_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(default_modulus(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(default_modulus(2, 5).unwrap(), vec![1, 0, 1, 0, 0, 1]);
        assert_eq!(default_modulus(2, 7).unwrap(), vec![1, 1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(default_modulus(2, 8).unwrap(), vec![1, 0, 1, 1, 1, 0, 0, 0, 1]);
        // GF(3): x + 1 has root 2, a generator of GF(3)*.
        assert_eq!(default_modulus(3, 1).unwrap(), vec![1, 1]);
        assert_eq!(default_modulus(3, 2).unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn primitive_element_generates_group() {
        for (p, m) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (2, 8),
            (3, 1),
            (3, 2),
            (3, 3),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
            (2, 10),
            (3, 5),
        ] {
            let f = make_field(p, m).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut acc = 1;
            for _ in 0..f.order() {
                assert!(seen.insert(acc), "GF({p}^{m}) repeats");
                acc = f.mul(acc, f.primitive());
            }
            assert_eq!(acc, 1);
            assert_eq!(seen.len() as u64, f.order());
            assert!(!seen.contains(&0));
        }
    }

    #[test]
    fn inverses_exhaustive_small_fields() {
        for (p, m) in [(2, 1), (2, 4), (2, 8), (3, 2), (5, 3), (7, 2), (13, 2), (251, 1)] {
            let f = make_field(p, m).unwrap();
            assert!(f.q() <= 256);
            for a in 1..f.q() {
                assert_eq!(f.mul(f.inv(a).unwrap(), a), 1, "GF({p}^{m}) a={a}");
            }
            assert_eq!(f.inv(0), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn tableless_matches_tables() {
        // GF(2^17) has no tables; compare against raw arithmetic identities.
        let f = make_field(2, 17).unwrap();
        let a = f.primitive();
        assert_eq!(f.pow(a, f.order()), 1);
        let x = f.exp(12345);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        assert_eq!(f.log(x), Some(12345));
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field(2, 21), Err(Error::UnsupportedField { .. })));
        assert!(matches!(make_field(2, 0), Err(Error::UnsupportedField { .. })));
        assert!(matches!(Field::with_modulus(2, 4, &[1, 1, 1, 1, 1]), Err(Error::InvalidModulus { .. })));
        let f = make_field(2, 4).unwrap();
        let g = make_field(2, 3).unwrap();
        assert_eq!(f.alpha().checked_add(&g.alpha()), Err(Error::FieldMismatch));
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert!(f.element(16).is_err());
    }

    #[test]
    fn element_wrapper() {
        let f = make_field(2, 4).unwrap();
        let a = f.alpha();
        assert_eq!(a.order(), Some(15));
        assert_eq!(a.inv().unwrap(), a.pow(14));
        assert_eq!((a.clone() * a.pow(14)).value(), 1);
        assert_eq!((a.clone() + a.clone()).value(), 0);
        assert_eq!(f.one() - f.one(), f.zero());
        assert_eq!(a.pow(15), f.one());
        assert_eq!(format!("{}", a.pow(5)), "a^5");
    }

    #[test]
    fn nth_roots() {
        let (f, a) = nth_root_field(15, 2).unwrap();
        assert_eq!(f.q(), 16);
        assert_eq!(a.value(), f.primitive());
        assert_eq!(a.order(), Some(15));

        let (f, a) = nth_root_field(7, 2).unwrap();
        assert_eq!(f.q(), 8);
        assert_eq!(a.order(), Some(7));

        let (f, a) = nth_root_field(5, 4).unwrap();
        assert_eq!(f.q(), 16);
        assert_eq!(a.order(), Some(5));
        assert_eq!(a.value(), f.exp(3));

        assert_eq!(nth_root_field(6, 2).unwrap_err(), Error::RepeatedRoots { n: 6, q: 2 });
        assert_eq!(nth_root_field(5, 6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn modulus_table_text() {
        let t = ModulusTable::parse("# comment\np=2 m=4 modulus=x^4 + x^3 + 1\n\n").unwrap();
        assert_eq!(t.modulus(2, 4).unwrap(), vec![1, 0, 0, 1, 1]);
        assert_eq!(t.modulus(2, 3).unwrap(), vec![1, 1, 0, 1]);
        let f = t.field(2, 4).unwrap();
        assert_eq!(f.pow(f.primitive(), 4), f.add(f.pow(f.primitive(), 3), 1));
        assert!(ModulusTable::parse("p=2 m=4 modulus=x^4 + x^3 + x^2 + x + 1").is_err());
        assert!(ModulusTable::parse("p=2 modulus=x^4 + x + 1").is_err());
        assert!(ModulusTable::parse("p=2 m=4").is_err());
        assert!(ModulusTable::parse("p=6 m=1 modulus=x+1").is_err());
    }

    #[test]
    fn element_text_round_trip() {
        let f = make_field(2, 3).unwrap();
        for v in f.elements() {
            assert_eq!(f.parse_element(&f.format_element(v)).unwrap(), v);
        }
    }

    fn frobenius_holds(p: u32, m: u32, a: u32, b: u32) {
        let f = make_field(p, m).unwrap();
        let (a, b) = (a % f.q(), b % f.q());
        let lhs = f.pow(f.add(a, b), p as u64);
        let rhs = f.add(f.pow(a, p as u64), f.pow(b, p as u64));
        assert_eq!(lhs, rhs);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn frobenius_gf256(a in 0u32..256, b in 0u32..256) { frobenius_holds(2, 8, a, b); }

        #[test]
        fn frobenius_gf3_5(a in 0u32..243, b in 0u32..243) { frobenius_holds(3, 5, a, b); }

        #[test]
        fn frobenius_gf2_17(a in 0u32..(1 << 17), b in 0u32..(1 << 17)) { frobenius_holds(2, 17, a, b); }

        #[test]
        fn distributive_gf49(a in 0u32..49, b in 0u32..49, c in 0u32..49) {
            let f = make_field(7, 2).unwrap();
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}
