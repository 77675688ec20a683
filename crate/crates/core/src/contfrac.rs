//! Integer sequences, continuants and continued fractions.
//!
//! The continuant `K` is the polynomial with `K() = 1`, `K(x1) = x1` and
//! `K(x1..xn) = xn K(x1..x(n-1)) + K(x1..x(n-2))`. It is defined for
//! arbitrary integer entries, including zeros and negatives, which is what
//! the angle-curvature machinery relies on.

use std::fmt;
use std::ops::Deref;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{gcd, Int};

/// A finite integer sequence; concatenation makes these a monoid with the
/// empty sequence as identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSeq(pub Vec<Int>);

impl IntSeq {
    pub fn new() -> Self {
        IntSeq(Vec::new())
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        IntSeq(values.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn concat(&self, other: &IntSeq) -> IntSeq {
        let mut out = self.0.clone();
        out.extend(other.0.iter().cloned());
        IntSeq(out)
    }

    /// `self ∘ (value)`.
    pub fn with(&self, value: Int) -> IntSeq {
        let mut out = self.0.clone();
        out.push(value);
        IntSeq(out)
    }

    pub fn push(&mut self, value: Int) {
        self.0.push(value);
    }

    pub fn extend_from(&mut self, other: &IntSeq) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn reversed(&self) -> IntSeq {
        reverse(self)
    }

    pub fn negated(&self) -> IntSeq {
        negate(self)
    }

    /// The sequence without its first element.
    pub fn tail(&self) -> IntSeq {
        IntSeq(self.0.iter().skip(1).cloned().collect())
    }

    /// The sequence without its last element.
    pub fn init(&self) -> IntSeq {
        let n = self.0.len().saturating_sub(1);
        IntSeq(self.0[..n].to_vec())
    }

    pub fn into_inner(self) -> Vec<Int> {
        self.0
    }
}

impl Deref for IntSeq {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl From<Vec<Int>> for IntSeq {
    fn from(v: Vec<Int>) -> Self {
        IntSeq(v)
    }
}

impl FromIterator<Int> for IntSeq {
    fn from_iter<I: IntoIterator<Item = Int>>(iter: I) -> Self {
        IntSeq(iter.into_iter().collect())
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub fn reverse(s: &IntSeq) -> IntSeq {
    IntSeq(s.0.iter().rev().cloned().collect())
}

pub fn negate(s: &IntSeq) -> IntSeq {
    IntSeq(s.0.iter().map(|v| -v).collect())
}

/// A point of the projective line `Q ∪ {∞}` in canonical form:
/// `gcd(num, den) = 1`, `den >= 0`, and `∞` is stored as `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjRational {
    num: Int,
    den: Int,
}

impl ProjRational {
    /// Canonicalizes `num/den`; non-canonical inputs such as `2/-5` are
    /// accepted. Returns `None` only for `0/0`.
    pub fn new(num: Int, den: Int) -> Option<Self> {
        if num.is_zero() && den.is_zero() {
            return None;
        }
        if den.is_zero() {
            return Some(Self::infinity());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some(ProjRational { num, den })
    }

    pub fn integer(value: Int) -> Self {
        ProjRational { num: value, den: Int::one() }
    }

    pub fn infinity() -> Self {
        ProjRational { num: Int::one(), den: Int::zero() }
    }

    pub fn num(&self) -> &Int {
        &self.num
    }

    pub fn den(&self) -> &Int {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        ProjRational::new(self.den.clone(), self.num.clone()).expect("canonical value is never 0/0")
    }

    /// `a + x`, with `a + ∞ = ∞`.
    pub fn add_integer(&self, a: &Int) -> Self {
        if self.is_infinite() {
            return Self::infinity();
        }
        ProjRational { num: &self.num + a * &self.den, den: self.den.clone() }
    }
}

impl fmt::Display for ProjRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "∞")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The continuant `K(s)`, by the three-term recurrence.
pub fn continuant(s: &[Int]) -> Int {
    // (K(x1..x(i-1)), K(x1..xi)) with K of the "minus first" prefix taken as 0
    let mut prev = Int::zero();
    let mut cur = Int::one();
    for x in s {
        let next = x * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(K(b1..bk), K(b0..bk))` from the product of the matrices
/// `[[0, 1], [1, b]]` for `b = bk, ..., b0, b(-1) = 0` applied to `(1, 0)`.
///
/// The empty sequence yields `(0, 1)`.
pub fn continuant_pair(s: &[Int]) -> (Int, Int) {
    // rightmost factor [[0,1],[1,0]] applied to (1,0)
    let (mut top, mut bottom) = (Int::zero(), Int::one());
    for b in s.iter().rev() {
        // [[0,1],[1,b]] (top, bottom) = (bottom, top + b * bottom)
        let next = &top + b * &bottom;
        top = std::mem::replace(&mut bottom, next);
    }
    (top, bottom)
}

/// The value `[a0; a1 : ... : an]` on the projective line, using
/// `1/0 = ∞`, `a + ∞ = ∞` and `1/∞ = 0`. The empty sequence evaluates to `∞`.
pub fn cf_eval(s: &[Int]) -> ProjRational {
    let mut iter = s.iter().rev();
    let Some(last) = iter.next() else {
        return ProjRational::infinity();
    };
    iter.fold(ProjRational::integer(last.clone()), |value, a| value.recip().add_integer(a))
}

/// The unique odd-length expansion of `p/q` with positive entries.
pub fn cf_expand_odd(p: &Int, q: &Int) -> Result<IntSeq> {
    if !(q.is_positive() && p >= q && gcd(p, q).is_one()) {
        return Err(Error::InvalidTangent { p: p.clone(), q: q.clone() });
    }
    let mut out = Vec::new();
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (quot, rem) = a.div_rem(&b);
        out.push(quot);
        a = b;
        b = rem;
    }
    // regular form: last entry >= 2 unless the whole expansion is (1)
    if out.len() % 2 == 0 {
        let last = out.pop().expect("even length is nonzero here");
        out.push(last - 1);
        out.push(Int::one());
    }
    Ok(IntSeq(out))
}

/// `⌊p / q⌋`, rounding toward negative infinity.
pub fn floor_div(p: &Int, q: &Int) -> Result<Int> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(p.div_floor(q))
}
