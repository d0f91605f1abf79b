//! Exact binomial coefficients and composition counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of ways to write `total` as an ordered sum of `parts` positive
/// integers. `compositions(0, 0) = 1`.
pub fn compositions(total: u64, parts: u64) -> BigUint {
    match (total, parts) {
        (0, 0) => BigUint::one(),
        (0, _) | (_, 0) => BigUint::zero(),
        (t, p) => binomial(t - 1, p - 1),
    }
}
