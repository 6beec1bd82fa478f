//! Exact integer combinatorics: factorials, binomial coefficients,
//! derangement numbers, and Hamming-sphere volumes on S_n, together with the
//! logarithmic helpers needed to compare counts far beyond `f64` range.
//!
//! Every counting function here is exact; nothing in this module rounds.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CombinatoricsError {
    #[error("binary entropy is defined on [0, 1], got {0}")]
    EntropyDomain(f64),
    #[error("log2 of a zero count is undefined")]
    LogOfZero,
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// C(n, k), with the usual convention that out-of-range `k` gives 0.
///
/// The signed `k` keeps range-edge terms of larger sums uniform: callers can
/// form `k` by subtraction without clamping first.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The derangement number D_k: permutations of k symbols with no fixed point.
///
/// Computed by the integer recurrence D_k = (k-1)(D_{k-1} + D_{k-2}) with
/// D_0 = 1, D_1 = 0. The floating identity D_k = round(k!/e) is a
/// cross-check only, never the computation.
pub fn derangements(k: u64) -> BigUint {
    match k {
        0 => BigUint::from(1u32),
        1 => BigUint::zero(),
        _ => {
            let mut prev2 = BigUint::from(1u32); // D_0
            let mut prev1 = BigUint::zero(); // D_1
            for i in 2..=k {
                let next = (&prev1 + &prev2) * (i - 1);
                prev2 = prev1;
                prev1 = next;
            }
            prev1
        }
    }
}

/// Volume of a Hamming sphere of radius `r` in S_n:
/// V(n, r) = sum over k in 0..=r of C(n, k) * D_k.
///
/// `r < 0` gives 0 and `r >= n` gives the whole space, n!.
pub fn sphere_volume(n: u64, r: i64) -> BigUint {
    assert!(n >= 1, "sphere_volume requires n >= 1");
    if r < 0 {
        return BigUint::zero();
    }
    if r as u64 >= n {
        return factorial(n);
    }
    let r = r as u64;
    // Running C(n, k) and D_k avoid recomputing each term from scratch.
    let mut total = BigUint::from(1u32); // k = 0 term
    let mut choose = BigUint::from(1u32);
    let mut der_prev = BigUint::from(1u32); // D_{k-1}, starting at D_0
    let mut der_prev2 = BigUint::zero(); // D_{k-2}, unused until k = 2
    for k in 1..=r {
        choose *= n - (k - 1);
        choose /= k;
        let der = if k == 1 {
            BigUint::zero()
        } else {
            (&der_prev + &der_prev2) * (k - 1)
        };
        total += &choose * &der;
        der_prev2 = std::mem::replace(&mut der_prev, der);
    }
    total
}

/// Binary entropy h2(x) = -x log2(x) - (1-x) log2(1-x), with the continuous
/// extension h2(0) = h2(1) = 0.
pub fn binary_entropy(x: f64) -> Result<f64, CombinatoricsError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(CombinatoricsError::EntropyDomain(x));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    // ln_1p keeps the complement term accurate when x is tiny.
    let complement = (1.0 - x) * ((-x).ln_1p() / std::f64::consts::LN_2);
    Ok(-x * x.log2() - complement)
}

/// log2 of an exact count, accurate to well under 1e-9 absolutely for any
/// count this crate produces.
///
/// Large counts are handled by reading off the bit length and taking the
/// logarithm of a 53-bit mantissa window, so nothing overflows regardless of
/// magnitude (300! has about 2500 bits).
pub fn log2_of_count(v: &BigUint) -> Result<f64, CombinatoricsError> {
    if v.is_zero() {
        return Err(CombinatoricsError::LogOfZero);
    }
    let bits = v.bits();
    if bits <= 53 {
        return Ok((v.to_u64().expect("fits in 53 bits") as f64).log2());
    }
    let shift = bits - 53;
    let window = (v >> shift).to_u64().expect("53-bit window");
    Ok((window as f64).log2() + shift as f64)
}

/// Natural log of an exact count; same accuracy contract as [`log2_of_count`].
pub fn ln_of_count(v: &BigUint) -> Result<f64, CombinatoricsError> {
    log2_of_count(v).map(|l2| l2 * std::f64::consts::LN_2)
}

/// Precomputed factorials, derangement numbers, and a Pascal table, shared by
/// the profile sums in the bounds module so the inner loops only multiply.
pub(crate) struct CombTable {
    fact: Vec<BigUint>,
    der: Vec<BigUint>,
    choose: Vec<Vec<BigUint>>,
    zero: BigUint,
}

impl CombTable {
    /// Tables for arguments up to `n`, with binomial columns up to `k_max`.
    pub fn new(n: u64, k_max: u64) -> Self {
        let n = n as usize;
        let k_max = k_max as usize;
        let mut fact = Vec::with_capacity(n + 1);
        fact.push(BigUint::from(1u32));
        for i in 1..=n {
            let next = &fact[i - 1] * i;
            fact.push(next);
        }
        let mut der = Vec::with_capacity(n + 1);
        der.push(BigUint::from(1u32));
        if n >= 1 {
            der.push(BigUint::zero());
        }
        for i in 2..=n {
            let next = (&der[i - 1] + &der[i - 2]) * (i - 1);
            der.push(next);
        }
        // Pascal rows truncated at column k_max; that covers every lookup the
        // profile sums make (all their lower arguments are at most d).
        let mut choose: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        for a in 0..=n {
            let cols = a.min(k_max);
            let mut row: Vec<BigUint> = Vec::with_capacity(cols + 1);
            row.push(BigUint::from(1u32));
            for b in 1..=cols {
                let prev = &choose[a - 1];
                let diag = &prev[b - 1];
                // C(a, b) = C(a-1, b) + C(a-1, b-1); the first addend is 0
                // when b exceeds the previous row (only at b == a).
                let val = if b < prev.len() { &prev[b] + diag } else { diag.clone() };
                row.push(val);
            }
            choose.push(row);
        }
        CombTable {
            fact,
            der,
            choose,
            zero: BigUint::zero(),
        }
    }

    pub fn fact(&self, i: u64) -> &BigUint {
        &self.fact[i as usize]
    }

    pub fn der(&self, i: u64) -> &BigUint {
        &self.der[i as usize]
    }

    /// C(a, b) with the out-of-range-means-zero convention.
    ///
    /// Panics if `min(b, a - b)` exceeds the table's column cap; callers in
    /// this crate never form such a lookup.
    pub fn choose(&self, a: u64, b: i64) -> &BigUint {
        if b < 0 || b as u64 > a {
            return &self.zero;
        }
        let a = a as usize;
        let mut b = b as usize;
        // Rows are truncated at k_max; use symmetry for the upper half.
        if b >= self.choose[a].len() {
            b = a - b;
        }
        assert!(b < self.choose[a].len(), "CombTable column out of range");
        &self.choose[a][b]
    }
}
