//! Lyndon words and the reduction of arbitrary scattered-factor counts to
//! counts of Lyndon words.
//!
//! For a non-Lyndon `u` with a split `u = xy` such that every word of
//! `x ⧢ y` is lexicographically at most `u`,
//!
//! ```text
//! C(w,u) = ( C(w,x)·C(w,y) − Σ_{v ≠ u} (x ↓ y, v)·C(w,v) ) / (x ⧢ y, u)
//! ```
//!
//! holds for every `w`. Applying it recursively leaves only Lyndon words.
//! The result is kept as an expanded polynomial in the Lyndon counts with
//! rational coefficients ([`LyndonExpression`]).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::{infiltrate, shuffle};
use crate::words::{count_letters, Alphabet, BigCount, Letter, Word};

/// True iff `w` is strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let l = w.letters();
    Ok((1..l.len()).all(|i| {
        let rotation = l[i..].iter().chain(&l[..i]);
        l.iter().lt(rotation)
    }))
}

/// All Lyndon words of length `1..=max_len`, in lexicographic order.
pub fn lyndon_words(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<Word> {
    let q = alphabet.size() as Letter;
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    // Duval's successor walk.
    let mut w: Vec<Letter> = vec![0];
    loop {
        out.push(Word::from_letters(alphabet, w.clone()));
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(q - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Finds `u = xy` (shortest `x` first) such that every word of `x ⧢ y` is
/// lexicographically at most `u`.
pub fn lyndon_split(u: &Word) -> Result<(Word, Word)> {
    split_with_shuffle_coefficient(u).map(|(x, y, _)| (x, y))
}

fn split_with_shuffle_coefficient(u: &Word) -> Result<(Word, Word, BigCount)> {
    if u.len() < 2 {
        return Err(Error::TooShort(u.to_string()));
    }
    if is_lyndon(u)? {
        return Err(Error::AlreadyLyndon(u.to_string()));
    }
    for cut in 1..u.len() {
        let x = u.slice(0..cut);
        let y = u.slice(cut..u.len());
        let product = shuffle(&x, &y)?;
        if product.max_word().is_some_and(|top| top <= u) {
            let c = product.coefficient(u);
            return Ok((x, y, c));
        }
    }
    Err(Error::NoValidSplit(u.to_string()))
}

/// Product of Lyndon-word leaves, kept sorted. The empty monomial is `1`.
type Monomial = Vec<Word>;

/// Polynomial in the counts `C(w, v)` of Lyndon words `v`, with rational
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LyndonExpression {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LyndonExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(value: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), value);
        e
    }

    pub fn integer(value: i64) -> Self {
        Self::constant(BigRational::from_integer(value.into()))
    }

    /// The count `C(w, v)` as a single leaf.
    pub fn leaf(v: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(vec![v], BigRational::one());
        e
    }

    fn add_term(&mut self, mut monomial: Monomial, coefficient: BigRational) {
        monomial.sort();
        let slot = self.terms.entry(monomial).or_insert_with(BigRational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let mut out = Self::zero();
        if factor.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * factor);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                m.extend(m2.iter().cloned());
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// Distinct words appearing as leaves.
    pub fn leaves(&self) -> BTreeSet<&Word> {
        self.terms.keys().flatten().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Word], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Evaluates with every leaf replaced by its count in `w`.
    pub fn evaluate(&self, w: &Word) -> Result<BigRational> {
        let mut cache: HashMap<&Word, BigInt> = HashMap::new();
        let mut total = BigRational::zero();
        for (monomial, c) in &self.terms {
            let mut product = BigInt::one();
            for v in monomial {
                w.check_same_alphabet(v)?;
                let value = cache
                    .entry(v)
                    .or_insert_with(|| BigInt::from(count_letters(w.letters(), v.letters())));
                product *= &*value;
            }
            total += c * BigRational::from_integer(product);
        }
        Ok(total)
    }
}

impl fmt::Display for LyndonExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (monomial, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if monomial.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            for v in monomial {
                write!(f, "({v})")?;
            }
        }
        Ok(())
    }
}

/// Expresses `C(·, u)` through counts of Lyndon words `v ≤ u` with `|v| ≤ |u|`.
pub fn reduce_to_lyndon(u: &Word) -> Result<LyndonExpression> {
    let mut memo = HashMap::new();
    reduce(u, &mut memo)
}

fn reduce(u: &Word, memo: &mut HashMap<Word, LyndonExpression>) -> Result<LyndonExpression> {
    if let Some(e) = memo.get(u) {
        return Ok(e.clone());
    }
    let expr = if u.is_empty() {
        LyndonExpression::integer(1)
    } else if is_lyndon(u)? {
        LyndonExpression::leaf(u.clone())
    } else {
        let (x, y, c) = split_with_shuffle_coefficient(u)?;
        let mut body = reduce(&x, memo)?.mul(&reduce(&y, memo)?);
        for (v, k) in infiltrate(&x, &y)?.iter() {
            if v == u {
                continue;
            }
            let k = BigRational::from_integer(BigInt::from(k.clone()));
            body = body.sub(&reduce(v, memo)?.scale(&k));
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(c));
        body.scale(&inv)
    };
    memo.insert(u.clone(), expr.clone());
    Ok(expr)
}

/// Evaluates a reduction at `w`; the result must be a non-negative integer.
pub fn eval_reduction(expr: &LyndonExpression, w: &Word) -> Result<BigCount> {
    let value = expr.evaluate(w)?;
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral(value.to_string()));
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::NonIntegral(value.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> Word {
        Word::parse(&Alphabet::binary(), s).unwrap()
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&ab("aab")).unwrap());
        assert!(!is_lyndon(&ab("aba")).unwrap());
        assert!(!is_lyndon(&ab("ba")).unwrap());
        assert!(is_lyndon(&ab("a")).unwrap());
        assert!(!is_lyndon(&ab("aa")).unwrap());
        for l in 0..8 {
            let mut s = "a".repeat(l);
            s.push('b');
            assert!(is_lyndon(&ab(&s)).unwrap());
        }
        assert_eq!(is_lyndon(&ab("")), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_listing() {
        let words: Vec<String> = lyndon_words(&Alphabet::binary(), 3)
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["a", "aab", "ab", "abb", "b"]);
        let unary = Alphabet::parse("a").unwrap();
        assert_eq!(lyndon_words(&unary, 5).len(), 1);
        assert!(lyndon_words(&unary, 0).is_empty());
    }

    #[test]
    fn splits() {
        assert_eq!(lyndon_split(&ab("ba")).unwrap(), (ab("b"), ab("a")));
        assert_eq!(lyndon_split(&ab("baa")).unwrap(), (ab("b"), ab("aa")));
        assert_eq!(lyndon_split(&ab("aba")).unwrap(), (ab("ab"), ab("a")));
        assert!(matches!(
            lyndon_split(&ab("ab")),
            Err(Error::AlreadyLyndon(_))
        ));
        assert!(matches!(lyndon_split(&ab("b")), Err(Error::TooShort(_))));
    }

    #[test]
    fn reduction_of_ba() {
        let e = reduce_to_lyndon(&ab("ba")).unwrap();
        let expected = LyndonExpression::leaf(ab("a"))
            .mul(&LyndonExpression::leaf(ab("b")))
            .sub(&LyndonExpression::leaf(ab("ab")));
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "(a)(b) - (ab)");
    }

    #[test]
    fn evaluation() {
        let ba = reduce_to_lyndon(&ab("ba")).unwrap();
        assert_eq!(eval_reduction(&ba, &ab("baba")).unwrap(), 3u32.into());
        assert_eq!(eval_reduction(&ba, &ab("aaaa")).unwrap(), 0u32.into());
        let aba = reduce_to_lyndon(&ab("aba")).unwrap();
        assert_eq!(eval_reduction(&aba, &ab("abba")).unwrap(), 2u32.into());
        for w in ["", "a", "abab", "bbaab", "aabbaba"] {
            let w = ab(w);
            assert_eq!(
                eval_reduction(&aba, &w).unwrap(),
                crate::words::scattered_factor_count(&w, &ab("aba")).unwrap()
            );
        }
    }

    #[test]
    fn non_integral_values_are_reported() {
        let half = LyndonExpression::constant(BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            eval_reduction(&half, &ab("ab")),
            Err(Error::NonIntegral(_))
        ));
        let neg = LyndonExpression::integer(-1);
        assert!(eval_reduction(&neg, &ab("ab")).is_err());
    }
}
