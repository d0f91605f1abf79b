//! Exact evaluation of query-count bounds: the Krasikov–Roditty length
//! threshold, Lyndon-word counts, the resulting baselines, and the bounds
//! achieved by block-word reconstruction.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binomial, compositions};
use crate::error::{Error, Result};
use crate::multi::general::{frequency_order, general_bound};
use crate::words::{BigCount, Word};

/// The Möbius function; `mobius(0)` is taken as 0.
pub fn mobius(mut d: u64) -> i8 {
    if d == 0 {
        return 0;
    }
    let mut sign = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Number of Lyndon words of length `i` over `q` letters.
pub fn lyndon_count(q: u64, i: u64) -> BigCount {
    if i == 0 {
        return BigCount::zero();
    }
    let mut total = BigInt::zero();
    for d in (1..=i).filter(|d| i.is_multiple_of(*d)) {
        let term = BigInt::from(q).pow((i / d) as u32);
        match mobius(d) {
            1 => total += term,
            -1 => total -= term,
            _ => {}
        }
    }
    (total / BigInt::from(i))
        .to_biguint()
        .expect("necklace counts are non-negative")
}

/// `⌊16 √n / 7⌋ + 5`, computed as `⌊isqrt(256 n) / 7⌋ + 5`.
pub fn kr_threshold(n: u64) -> u64 {
    (256 * n as u128).sqrt() as u64 / 7 + 5
}

/// Lyndon words over two letters of length at most [`kr_threshold`]`(n)`.
pub fn binary_baseline(n: u64) -> BigCount {
    (1..=kr_threshold(n)).map(|i| lyndon_count(2, i)).sum()
}

/// `binary_baseline(n)` for every `n` in `1..=max_n`, sharing prefix sums.
pub fn binary_baselines(max_n: u64) -> Vec<BigCount> {
    let top = kr_threshold(max_n.max(1));
    let mut prefix = vec![BigCount::zero()];
    for i in 1..=top {
        let next = prefix.last().expect("non-empty") + lyndon_count(2, i);
        prefix.push(next);
    }
    (1..=max_n)
        .map(|n| prefix[kr_threshold(n) as usize].clone())
        .collect()
}

/// `a + b √r` with rational `a`, `b`; `r` is not a perfect square unless
/// `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    rational: BigRational,
    irrational: BigRational,
    radicand: BigUint,
}

impl QuadraticSurd {
    pub fn from_rational(a: BigRational) -> Self {
        QuadraticSurd {
            rational: a,
            irrational: BigRational::zero(),
            radicand: BigUint::one(),
        }
    }

    /// `a + b √r`, folding a perfect-square `r` into `a`.
    pub fn new(a: BigRational, b: BigRational, r: BigUint) -> Self {
        let root = r.sqrt();
        if &root * &root == r {
            let folded = a + b * BigRational::from_integer(BigInt::from(root));
            return Self::from_rational(folded);
        }
        QuadraticSurd {
            rational: a,
            irrational: b,
            radicand: r,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irrational
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    fn compatible(&self, other: &Self) -> bool {
        self.irrational.is_zero() || other.irrational.is_zero() || self.radicand == other.radicand
    }

    /// Sum of two values over the same radicand.
    pub fn add(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "radicands differ");
        let radicand = if self.irrational.is_zero() {
            other.radicand.clone()
        } else {
            self.radicand.clone()
        };
        QuadraticSurd {
            rational: &self.rational + &other.rational,
            irrational: &self.irrational + &other.irrational,
            radicand,
        }
    }

    pub fn sub_integer(&self, m: &BigInt) -> Self {
        QuadraticSurd {
            rational: &self.rational - BigRational::from_integer(m.clone()),
            ..self.clone()
        }
    }

    /// Sign of the value, decided exactly.
    pub fn signum(&self) -> Ordering {
        let a = &self.rational;
        let b = &self.irrational;
        let sa = a.cmp(&BigRational::zero());
        let sb = b.cmp(&BigRational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a² with b² r
        let r = BigRational::from_integer(BigInt::from(self.radicand.clone()));
        match (a * a).cmp(&(b * b * r)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_integer(&self, m: &BigInt) -> Ordering {
        self.sub_integer(m).signum()
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        // value = (p + s √r) / d
        let d = self.rational.denom().lcm(self.irrational.denom());
        let p = self.rational.numer() * (&d / self.rational.denom());
        let s = self.irrational.numer() * (&d / self.irrational.denom());
        let square = (s.magnitude() * s.magnitude()) * &self.radicand;
        let root = BigInt::from(square.sqrt());
        let exact = BigInt::from(square) == &root * &root;
        let floor_t = match s.sign() {
            Sign::Minus if exact => -root,
            Sign::Minus => -root - 1,
            _ => root,
        };
        (p + floor_t).div_floor(&d)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irrational.is_zero() {
            return write!(f, "{}", self.rational);
        }
        let sign = if self.irrational.is_negative() {
            "-"
        } else {
            "+"
        };
        write!(
            f,
            "{} {} {}*sqrt({})",
            self.rational,
            sign,
            self.irrational.abs(),
            self.radicand
        )
    }
}

/// `Σ_{i=1}^{α} (1/i)((q+1)^{i/2} − 1)/q` with `α` = [`kr_threshold`]`(n)`.
pub fn general_baseline(n: u64, q: u64) -> Result<QuadraticSurd> {
    if q < 3 {
        return Err(Error::Parse(format!(
            "general baseline needs q >= 3, got {q}"
        )));
    }
    let base = BigInt::from(q + 1);
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for i in 1..=kr_threshold(n) {
        let scale = BigRational::new(BigInt::one(), BigInt::from(i * q));
        let power = BigRational::from_integer(base.pow((i / 2) as u32));
        a -= &scale;
        if i % 2 == 0 {
            a += &scale * power;
        } else {
            b += &scale * power;
        }
    }
    Ok(QuadraticSurd::new(a, b, BigUint::from(q + 1)))
}

/// Largest `Σ_i |w|_i (q + 1 − i)` over words of length `n`: all letters
/// equal to the first one.
pub fn general_worst_case(n: u64, q: u64) -> u64 {
    q * n
}

/// `min(|w|_a, |w|_b) + 1`.
pub fn our_binary_bound(w: &Word) -> Result<usize> {
    if w.alphabet().size() != 2 {
        return Err(Error::NotBinary(w.alphabet().size()));
    }
    Ok(w.count(0).min(w.count(1)) + 1)
}

/// `Σ_i |w|_i (q + 1 − i)` in alphabet order.
pub fn our_general_bound(w: &Word) -> usize {
    let order: Vec<_> = w.alphabet().letters().collect();
    general_bound(w, &order).expect("alphabet order is a permutation")
}

/// The same sum with the rarest letter first.
pub fn our_general_bound_by_frequency(w: &Word) -> usize {
    general_bound(w, &frequency_order(w)).expect("frequency order is a permutation")
}

/// Decompositions `(s_1, …, s_{k+1})` of a word with `k` letters `a` out of
/// `n` whose count of `a^ℓ b` equals `m ≤ ℓ`: the gap after the `ℓ`-th `a`
/// holds `m` letters, later gaps are empty, and the first `ℓ` gaps share the
/// rest.
pub fn count_small_coefficient_words(n: u64, k: u64, level: u64, m: u64) -> Result<BigCount> {
    if k > n {
        return Err(Error::CountExceedsLength {
            count: k as usize,
            n: n as usize,
        });
    }
    if level > k {
        return Err(Error::LevelOutOfRange {
            level: level as usize,
            max: k as usize,
        });
    }
    if m > level {
        return Err(Error::ValueOutOfRange {
            value: m.to_string(),
            max: level.to_string(),
        });
    }
    let Some(rest) = (n - k).checked_sub(m) else {
        return Ok(BigCount::zero());
    };
    Ok((0..=level)
        .map(|i| binomial(level, level - i) * compositions(rest, i))
        .sum())
}

/// One row of the bound comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub q: u64,
    pub kr_threshold: u64,
    pub baseline: QuadraticSurd,
    /// Worst case over words of length `n` of the block-word bound.
    pub ours: u64,
    pub margin: QuadraticSurd,
}

impl BoundReport {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n == 0 || q < 2 {
            return Err(Error::Parse(format!(
                "bound report needs n >= 1 and q >= 2, got n={n}, q={q}"
            )));
        }
        let (baseline, ours) = if q == 2 {
            let b = BigRational::from_integer(BigInt::from(binary_baseline(n)));
            (QuadraticSurd::from_rational(b), n / 2 + 1)
        } else {
            (general_baseline(n, q)?, general_worst_case(n, q))
        };
        let margin = baseline.sub_integer(&BigInt::from(ours));
        Ok(BoundReport {
            n,
            q,
            kr_threshold: kr_threshold(n),
            baseline,
            ours,
            margin,
        })
    }

    /// Whether the baseline strictly exceeds our worst case.
    pub fn improves(&self) -> bool {
        self.margin.signum() == Ordering::Greater
    }

    pub const HEADER: &'static str = "n\tkr_threshold\tbaseline\tours_worst_case\tmargin";

    /// Tab-separated row; irrational values print as their floor.
    pub fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.n,
            self.kr_threshold,
            self.baseline.floor(),
            self.ours,
            self.margin.floor()
        )
    }
}

/// `⌊n/2⌋ + 1` as a u64, the binary worst case.
pub fn binary_worst_case(n: u64) -> u64 {
    n / 2 + 1
}

/// Convenience for sweeps: the first `n` in the range where the baseline
/// fails to exceed our worst case.
pub fn first_binary_violation(from: u64, to: u64) -> Option<u64> {
    let baselines = binary_baselines(to);
    (from..=to).find(|&n| baselines[n as usize - 1] <= BigCount::from(binary_worst_case(n)))
}

/// Numeric approximation for display.
pub fn approximate(x: &QuadraticSurd) -> f64 {
    let a = x.rational.to_f64().unwrap_or(f64::NAN);
    let b = x.irrational.to_f64().unwrap_or(f64::NAN);
    let r = x.radicand.to_f64().unwrap_or(f64::NAN);
    a + b * r.sqrt()
}
