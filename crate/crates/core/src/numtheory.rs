use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Smallest `e >= 1` with `q^e = 1 (mod n)`; `None` unless `gcd(q, n) = 1`.
pub fn multiplicative_order(q: u64, n: u64) -> Option<u32> {
    match n {
        0 => return None,
        1 => return Some(1),
        _ => {}
    }
    let base = q % n;
    if gcd(base, n) != 1 {
        return None;
    }
    let mut acc = base;
    let mut e = 1u32;
    while acc != 1 {
        acc = acc * base % n;
        e += 1;
    }
    Some(e)
}

/// `(p, m)` with `q = p^m`, or `None` when `q` is not a prime power.
pub(crate) fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q as u64)[0] as u32;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}
