//! Exact arithmetic in the golden field `Q(τ)`.
//!
//! Every element is stored in the basis `{1, τ}` with `τ² = τ + 1`, over an
//! arbitrary-width integer numerator and a positive common denominator.
//! Values are kept in canonical form (`gcd(a, b, den) = 1`, `den > 0`) after
//! every operation, so structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("division by zero in the golden field")]
    DivisionByZero,
    #[error("value {0} is outside the floating-point range")]
    OutOfRange(String),
    #[error("invalid golden number: {0}")]
    Parse(String),
}

/// An element `a + bτ` of the ring `Z[τ]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        GoldenInt::default()
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    pub fn tau() -> Self {
        GoldenInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate: `τ ↦ 1 − τ`, i.e. `a + bτ ↦ (a + b) − bτ`.
    pub fn conj(&self) -> Self {
        GoldenInt { a: &self.a + &self.b, b: -&self.b }
    }

    /// Field norm `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real value `a + bτ`.
    pub fn signum(&self) -> i32 {
        // 2(a + bτ) = (2a + b) + b√5
        sign_with_sqrt5(&(BigInt::from(2) * &self.a + &self.b), &self.b)
    }

    fn content(&self) -> BigInt {
        self.a.gcd(&self.b)
    }
}

impl Mul for &GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let bd = &self.b * &rhs.b;
        GoldenInt {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Add for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

/// Sign of `p + q√5` decided by integer squaring.
pub(crate) fn sign_with_sqrt5(p: &BigInt, q: &BigInt) -> i32 {
    let sp = p.signum().to_i32().unwrap_or(0);
    let sq = q.signum().to_i32().unwrap_or(0);
    if sp >= 0 && sq >= 0 {
        return if sp == 0 && sq == 0 { 0 } else { 1 };
    }
    if sp <= 0 && sq <= 0 {
        return -1;
    }
    // opposite signs: compare p² with 5q²
    let lhs = p * p;
    let rhs = BigInt::from(5) * q * q;
    let diff = match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    };
    if sp > 0 {
        diff
    } else {
        -diff
    }
}

/// An element `(a + bτ) / den` of `Q(τ)` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoldenRational {
    num: GoldenInt,
    den: BigInt,
}

impl Default for GoldenRational {
    fn default() -> Self {
        GoldenRational::zero()
    }
}

impl GoldenRational {
    /// Builds `(a + bτ) / den`, reducing to canonical form.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::try_new(a, b, den).expect("zero denominator")
    }

    pub fn try_new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        den: impl Into<BigInt>,
    ) -> Result<Self, GoldenError> {
        let den = den.into();
        if den.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        Ok(Self::canonical(GoldenInt::new(a, b), den))
    }

    fn canonical(mut num: GoldenInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            num.a = -num.a;
            num.b = -num.b;
            den = -den;
        }
        if num.is_zero() {
            return GoldenRational { num, den: BigInt::one() };
        }
        let g = num.content().gcd(&den);
        if !g.is_one() {
            num.a /= &g;
            num.b /= &g;
            den /= &g;
        }
        GoldenRational { num, den }
    }

    pub fn zero() -> Self {
        GoldenRational { num: GoldenInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        GoldenRational { num: GoldenInt::new(n, 0), den: BigInt::one() }
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::new(n, 0, d)
    }

    pub fn from_golden_int(num: GoldenInt) -> Self {
        Self::canonical(num, BigInt::one())
    }

    /// The golden ratio `(1 + √5) / 2`.
    pub fn tau() -> Self {
        Self::new(0, 1, 1)
    }

    /// The conjugate root `σ = 1 − τ = −1/τ`.
    pub fn sigma() -> Self {
        Self::new(1, -1, 1)
    }

    /// `√5 = 2τ − 1`.
    pub fn sqrt5() -> Self {
        Self::new(-1, 2, 1)
    }

    /// `τⁿ = F(n)·τ + F(n−1)` for any integer `n`.
    pub fn tau_pow(n: i64) -> Self {
        Self::from_golden_int(GoldenInt { a: fibonacci(n - 1), b: fibonacci(n) })
    }

    pub fn numerator(&self) -> &GoldenInt {
        &self.num
    }

    /// Coefficient of `1` in the numerator.
    pub fn a(&self) -> &BigInt {
        &self.num.a
    }

    /// Coefficient of `τ` in the numerator.
    pub fn b(&self) -> &BigInt {
        &self.num.b
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.b.is_zero() && self.num.a == self.den
    }

    /// True when the value lies in `Q` (no `τ` component).
    pub fn is_rational(&self) -> bool {
        self.num.b.is_zero()
    }

    /// True when the value lies in `Z[τ]`.
    pub fn is_golden_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn signum(&self) -> i32 {
        self.num.signum()
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn conj(&self) -> Self {
        Self::canonical(self.num.conj(), self.den.clone())
    }

    /// `x · conj(x)` as a rational `(numerator, denominator)` pair.
    pub fn norm(&self) -> (BigInt, BigInt) {
        let n = self.num.norm();
        let d = &self.den * &self.den;
        let g = n.gcd(&d);
        if g.is_zero() {
            return (n, d);
        }
        (n / &g, d / g)
    }

    pub fn inv(&self) -> Result<Self, GoldenError> {
        if self.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        // 1/x = den · conj(num) / N(num)
        let c = self.num.conj();
        let n = self.num.norm();
        Ok(Self::canonical(
            GoldenInt { a: &c.a * &self.den, b: &c.b * &self.den },
            n,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, GoldenError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self, GoldenError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact square root when the value is a perfect square in `Q(τ)`.
    ///
    /// Returns the non-negative root, or `None` for negative values and
    /// non-squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // x = (p + q√5) / d with p = 2a + b, q = b, d = 2·den;
        // √x = √(p·d + q·d·√5) / d.
        let d = BigInt::from(2) * &self.den;
        let u = (BigInt::from(2) * &self.num.a + &self.num.b) * &d;
        let v = &self.num.b * &d;
        let norm = &u * &u - BigInt::from(5) * &v * &v;
        if norm.is_negative() {
            return None;
        }
        let m = norm.sqrt();
        if &m * &m != norm {
            return None;
        }
        for c2 in [(&u + &m, BigInt::from(2)), (&u - &m, BigInt::from(2))] {
            let Some((cn, cd)) = rational_sqrt(&c2.0, &c2.1) else {
                continue;
            };
            // root = c + d√5 with c = cn/cd
            let (dn, dd) = if cn.is_zero() {
                // c = 0: u = 5·d², v = 0
                match rational_sqrt(&u, &BigInt::from(5)) {
                    Some(r) => r,
                    None => continue,
                }
            } else {
                // d = v / (2c) = v·cd / (2·cn)
                (&v * &cd, BigInt::from(2) * &cn)
            };
            // c + d√5 = (c − d) + 2d·τ
            let c = Self::from_ratio(cn, cd);
            let dq = Self::from_ratio(dn, dd);
            let root = &(&c - &dq) + &(&Self::from_int(2) * &dq * Self::tau());
            let root = &root * &Self::from_ratio(1, d.clone());
            let root = root.abs();
            if &root * &root == *self {
                return Some(root);
            }
        }
        None
    }

    /// Nearest binary floating value of the real embedding.
    ///
    /// For `|a|, |b| < 2⁵⁰` and a denominator below `2⁵³` the relative error
    /// is at most 4 units in the last place; cancellation between the two
    /// terms is removed by rationalising against the conjugate.
    pub fn embed(&self) -> Result<f64, GoldenError> {
        let p = BigInt::from(2) * &self.num.a + &self.num.b;
        let q = self.num.b.clone();
        let den2 = BigInt::from(2) * &self.den;
        let sqrt5 = 5f64.sqrt();
        let value = if p.signum() * q.signum() >= BigInt::zero() {
            let (pm, pe) = scaled(&p);
            let (qm, qe) = scaled(&q);
            let (dm, de) = scaled(&den2);
            let e = pe.max(qe);
            let sum = pm * pow2(pe - e) + qm * sqrt5 * pow2(qe - e);
            (sum / dm) * pow2(e - de)
        } else {
            // (p + q√5) = (p² − 5q²) / (p − q√5)
            let n = &p * &p - BigInt::from(5) * &q * &q;
            let (nm, ne) = scaled(&n);
            let (pm, pe) = scaled(&p);
            let (qm, qe) = scaled(&q);
            let (dm, de) = scaled(&den2);
            let e = pe.max(qe);
            let conj = pm * pow2(pe - e) - qm * sqrt5 * pow2(qe - e);
            (nm / (conj * dm)) * pow2(ne - e - de)
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(GoldenError::OutOfRange(self.to_string()))
        }
    }

    /// Floating image, panicking only for values outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        self.embed().expect("golden value outside f64 range")
    }
}

/// `m · 2^e ≈ x` with `m` holding the top bits of `x`.
fn scaled(x: &BigInt) -> (f64, i64) {
    let bits = x.bits() as i64;
    if bits <= 1000 {
        return (x.to_f64().unwrap_or(0.0), 0);
    }
    let shift = bits - 64;
    let top: BigInt = x >> (shift as usize);
    (top.to_f64().unwrap_or(0.0), shift)
}

fn pow2(e: i64) -> f64 {
    if e > 2000 {
        f64::INFINITY
    } else if e < -2000 {
        0.0
    } else {
        let mut v = 1.0f64;
        let mut k = e;
        while k > 1000 {
            v *= 2f64.powi(1000);
            k -= 1000;
        }
        while k < -1000 {
            v *= 2f64.powi(-1000);
            k += 1000;
        }
        v * 2f64.powi(k as i32)
    }
}

fn rational_sqrt(n: &BigInt, d: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() || d.is_zero() {
        return None;
    }
    let g = n.gcd(d);
    let (mut n, mut d) = (n / &g, d / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if n.is_negative() {
        return None;
    }
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == n && &rd * &rd == d).then_some((rn, rd))
}

/// Fibonacci numbers extended to negative indices, `F(1) = F(2) = 1`.
pub fn fibonacci(n: i64) -> BigInt {
    let k = n.unsigned_abs();
    let (f, _) = fib_pair(k);
    if n < 0 && k % 2 == 0 {
        -f
    } else {
        f
    }
}

// fast doubling: returns (F(k), F(k+1))
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    if k == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(k / 2);
    let c = &a * (BigInt::from(2) * &b - &a);
    let d = &a * &a + &b * &b;
    if k % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

impl PartialOrd for GoldenRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn add(self, rhs: &GoldenRational) -> GoldenRational {
        if self.den == rhs.den {
            return GoldenRational::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let a = &self.num.a * &rhs.den + &rhs.num.a * &self.den;
        let b = &self.num.b * &rhs.den + &rhs.num.b * &self.den;
        GoldenRational::canonical(GoldenInt { a, b }, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn sub(self, rhs: &GoldenRational) -> GoldenRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn mul(self, rhs: &GoldenRational) -> GoldenRational {
        GoldenRational::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    /// # Panics
    ///
    /// Panics on division by zero; use [`GoldenRational::checked_div`] otherwise.
    fn div(self, rhs: &GoldenRational) -> GoldenRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational {
            num: GoldenInt { a: -&self.num.a, b: -&self.num.b },
            den: self.den.clone(),
        }
    }
}

impl Neg for GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: GoldenRational) -> GoldenRational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: &GoldenRational) -> GoldenRational { (&self).$m(rhs) }
        }
        impl<'a> $tr<GoldenRational> for &'a GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: GoldenRational) -> GoldenRational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for GoldenRational {
    fn sum<I: Iterator<Item = GoldenRational>>(iter: I) -> Self {
        iter.fold(GoldenRational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for GoldenRational {
    fn from(n: i64) -> Self {
        GoldenRational::from_int(n)
    }
}

impl From<GoldenInt> for GoldenRational {
    fn from(n: GoldenInt) -> Self {
        GoldenRational::from_golden_int(n)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau_part = if self.b.is_one() {
            "tau".to_string()
        } else if self.b == -BigInt::one() {
            "-tau".to_string()
        } else {
            format!("{}*tau", self.b)
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{tau_part}"),
            (false, false) if self.a.is_negative() => write!(f, "{tau_part}-{}", -&self.a),
            (false, false) => write!(f, "{tau_part}+{}", self.a),
        }
    }
}

impl fmt::Display for GoldenRational {
    /// ASCII form: `tau`, `2*tau+1`, `(7*tau+4)/2`, `1/12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if !self.num.a.is_zero() && !self.num.b.is_zero() {
            write!(f, "({})/{}", self.num, self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GoldenRepr {
    a: String,
    b: String,
    den: String,
}

impl Serialize for GoldenRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GoldenRepr {
            a: self.num.a.to_string(),
            b: self.num.b.to_string(),
            den: self.den.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GoldenRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = GoldenRepr::deserialize(d)?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| D::Error::custom(GoldenError::Parse(s.to_string())))
        };
        let den = parse(&repr.den)?;
        if !den.is_positive() {
            return Err(D::Error::custom(GoldenError::Parse(format!(
                "denominator must be positive, got {den}"
            ))));
        }
        Ok(GoldenRational::canonical(
            GoldenInt { a: parse(&repr.a)?, b: parse(&repr.b)? },
            den,
        ))
    }
}
