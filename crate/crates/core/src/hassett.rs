//! Numerical conditions on discriminants of special cubic fourfolds.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HassettError {
    #[error("discriminant must be positive, got {0}")]
    NonPositive(i64),
    #[error("discriminant must be even, got {0}")]
    Odd(i64),
}

/// The Hassett divisor of discriminant `d` is nonempty: `d > 6` and
/// `d ≡ 0, 2 (mod 6)`.
pub fn admissible(d: i64) -> bool {
    d > 6 && matches!(d.rem_euclid(6), 0 | 2)
}

/// Least `n ∈ [0, d)` with `d | 2n² + 2n + 2`, if any.
///
/// The expression is periodic in `n` modulo `d`, so scanning one full
/// residue system decides the condition.
pub fn star2(d: i64) -> Result<Option<i64>, HassettError> {
    if d <= 0 {
        return Err(HassettError::NonPositive(d));
    }
    let m = d as u64;
    // f(n) = 2n² + 2n + 2, f(n+1) − f(n) = 4n + 4
    let mut value = 2 % m;
    for n in 0..m {
        if value == 0 {
            return Ok(Some(n as i64));
        }
        let step = (4 * (n % m) + 4) % m;
        value = (value + step) % m;
    }
    Ok(None)
}

/// Primes `p ≡ 2 (mod 3)` occur with even exponent in `d/2`.
pub fn star2prime(d: i64) -> Result<bool, HassettError> {
    if d <= 0 {
        return Err(HassettError::NonPositive(d));
    }
    if d % 2 != 0 {
        return Err(HassettError::Odd(d));
    }
    Ok(factorize((d / 2) as u64)
        .into_iter()
        .all(|(p, e)| p % 3 != 2 || e % 2 == 0))
}

/// Trial-division factorization into `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Discriminant `3x − y²` of the lattice spanned by `h²` and a surface class
/// `T` with `T² = x` and `h²·T = y`.
pub fn discriminant_from_cycle(x: i64, y: i64) -> i128 {
    3 * i128::from(x) - i128::from(y) * i128::from(y)
}

/// `y ≡ ±1 (mod 3)`.
pub fn torsor_trivializable(y: i64) -> bool {
    y.rem_euclid(3) != 0
}

/// `d` admissible and `d ≡ 2 (mod 6)`.
pub fn lsv(d: i64) -> bool {
    admissible(d) && d.rem_euclid(6) == 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HassettReport {
    pub d: i64,
    pub admissible: bool,
    pub mod6: i64,
    pub star2: bool,
    pub star2prime: bool,
    pub witness_n: Option<i64>,
    pub lsv: bool,
}

/// All predicates for one discriminant. `star2prime` is reported false for
/// odd `d`, where it is undefined.
pub fn report(d: i64) -> Result<HassettReport, HassettError> {
    let witness_n = star2(d)?;
    Ok(HassettReport {
        d,
        admissible: admissible(d),
        mod6: d.rem_euclid(6),
        star2: witness_n.is_some(),
        star2prime: d % 2 == 0 && star2prime(d)?,
        witness_n,
        lsv: lsv(d),
    })
}

/// Reports for every admissible `d ≤ max_d`, ascending.
pub fn enumerate(max_d: i64) -> Vec<HassettReport> {
    (7..=max_d)
        .filter(|&d| admissible(d))
        .map(|d| report(d).expect("admissible discriminants are positive"))
        .collect()
}
