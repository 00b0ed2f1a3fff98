//! Defining-set algebra checked against brute-force codeword sets.
//!
//! Codewords are bitmasks (bit i = coefficient of x^i). Code membership, duals,
//! sums and intersections are recomputed here with plain GF(2) linear algebra,
//! and generator roots with an independent GF(2^m) implementation.

use std::collections::BTreeSet;

use aqcc_core::cyclic::CyclicCode;
use aqcc_core::polyring::CodeSpace;

type Words = BTreeSet<u32>;

fn to_mask(coeffs: &[u32]) -> u32 {
    coeffs.iter().enumerate().fold(0, |acc, (i, &c)| acc | (c & 1) << i)
}

fn span(gens: &[u32]) -> Words {
    let mut basis: Vec<u32> = Vec::new();
    for &g in gens {
        let mut v = g;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let mut out = BTreeSet::from([0u32]);
    for &b in &basis {
        let more: Vec<u32> = out.iter().map(|w| w ^ b).collect();
        out.extend(more);
    }
    out
}

/// The shifts `x^i g(x)`, `i < n - deg g`.
fn shifts(code: &CyclicCode) -> Vec<u32> {
    let g = to_mask(code.generator().coeffs());
    let deg = 31 - g.leading_zeros();
    (0..code.n() - deg).map(|i| g << i).collect()
}

fn oracle_code(code: &CyclicCode) -> Words {
    span(&shifts(code))
}

fn oracle_dual(basis: &[u32], n: u32) -> Words {
    (0u32..1 << n).filter(|v| basis.iter().all(|c| (c & v).count_ones() % 2 == 0)).collect()
}

/// Multiplication in GF(2^m) modulo `modulus` (bitmask including x^m).
fn gf_mul(mut a: u32, mut b: u32, m: u32, modulus: u32) -> u32 {
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

fn gf_pow(a: u32, e: u32, m: u32, modulus: u32) -> u32 {
    (0..e).fold(1, |acc, _| gf_mul(acc, a, m, modulus))
}

/// `g(alpha^i) == 0` with alpha = x, for binary g.
fn is_root(g: u32, i: u32, m: u32, modulus: u32) -> bool {
    let point = gf_pow(2, i, m, modulus);
    let mut acc = 0;
    for d in (0..32).rev() {
        acc = gf_mul(acc, point, m, modulus);
        if g >> d & 1 == 1 {
            acc ^= 1;
        }
    }
    acc == 0
}

fn family(n: u32, m: u32, modulus: u32) -> (Vec<CyclicCode>, Vec<Words>) {
    let space = CodeSpace::new(n, 2).unwrap();
    let codes = CyclicCode::all(&space, 8).unwrap();
    let words: Vec<Words> = codes.iter().map(oracle_code).collect();
    for (c, w) in codes.iter().zip(&words) {
        assert_eq!(w.len(), 1usize << c.k(), "{c}");
        let g = to_mask(c.generator().coeffs());
        for i in 0..n {
            assert_eq!(is_root(g, i, m, modulus), c.defining_set().contains(i), "{c} at alpha^{i}");
        }
    }
    (codes, words)
}

fn check_family(n: u32, m: u32, modulus: u32, expected_codes: usize) {
    let (codes, words) = family(n, m, modulus);
    assert_eq!(codes.len(), expected_codes);
    let mut mismatches = 0;
    for (i, a) in codes.iter().enumerate() {
        let dual = a.dual().unwrap();
        mismatches += (oracle_dual(&shifts(a), n) != oracle_code(&dual)) as usize;
        for (j, b) in codes.iter().enumerate() {
            let inter: Words = words[i].intersection(&words[j]).copied().collect();
            mismatches += (oracle_code(&a.intersect(b).unwrap()) != inter) as usize;
            let sum = span(&words[i].iter().chain(&words[j]).copied().collect::<Vec<_>>());
            mismatches += (oracle_code(&a.sum(b).unwrap()) != sum) as usize;
            mismatches += (a.contains(b).unwrap() != words[j].is_subset(&words[i])) as usize;
        }
    }
    assert_eq!(mismatches, 0);
}

#[test]
fn length_7_oracle() {
    check_family(7, 3, 0b1011, 8);
}

#[test]
fn length_15_oracle() {
    check_family(15, 4, 0b10011, 32);
}

#[test]
fn sum_of_dual_and_intersection_dual() {
    // (C1 ∩ C2)^⊥ = C1^⊥ + C2^⊥ over every pair at n = 15
    let space = CodeSpace::new(15, 2).unwrap();
    let codes = CyclicCode::all(&space, 8).unwrap();
    for a in &codes {
        for b in &codes {
            let lhs = a.intersect(b).unwrap().dual().unwrap();
            let rhs = a.dual().unwrap().sum(&b.dual().unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
