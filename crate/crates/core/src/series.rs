//! Truncated formal power series and Laurent series over exact rationals.
//!
//! Every genus and index computation in this crate reduces to arithmetic on
//! these two types. Coefficients are arbitrary-precision [`BigRational`]s:
//! the index pairings cancel large rationals down to small integers, and any
//! floating-point shortcut would corrupt that silently.
//!
//! A [`RationalSeries`] is a power series truncated at an inclusive degree
//! `order`; binary operations truncate to the smaller order of the two
//! operands. A [`LaurentSeries`] additionally allows a pole of finite order
//! at the origin and knows how to extract its residue, the coefficient of
//! `x^-1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact coefficient type used throughout the crate.
pub type Coeff = BigRational;

/// Errors from series arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion requires a nonzero constant term (power series) or a
    /// nonzero leading coefficient (Laurent series).
    #[error("cannot invert a series whose leading coefficient vanishes")]
    ZeroConstantTerm,
    /// The truncation order excludes degree -1, so the residue is unknown.
    #[error("truncation order {order} excludes degree -1; residue is not determined")]
    InsufficientOrder { order: i64 },
}

/// Convenience constructor for exact rationals in tests and coefficients.
pub fn rat(numer: i64, denom: i64) -> Coeff {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// A power series with exact rational coefficients, truncated at an
/// inclusive degree.
///
/// `coeffs[i]` is the coefficient of `x^i`; the vector always has exactly
/// `order + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Coeff>,
}

impl RationalSeries {
    /// Builds a series from coefficients in ascending degree. The truncation
    /// order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: a series carries at least its constant
    /// term.
    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        RationalSeries { coeffs }
    }

    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![Coeff::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Coeff::zero(); order + 1];
        coeffs[0] = Coeff::one();
        RationalSeries { coeffs }
    }

    /// Inclusive truncation degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^degree`. Panics beyond the truncation order, where
    /// the coefficient is unknown rather than zero.
    pub fn coeff(&self, degree: usize) -> &Coeff {
        assert!(
            degree <= self.order(),
            "degree {} beyond truncation order {}",
            degree,
            self.order()
        );
        &self.coeffs[degree]
    }

    /// All stored coefficients in ascending degree.
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Copy truncated to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        RationalSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Degreewise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        RationalSeries { coeffs }
    }

    /// Degreewise difference, truncated to the smaller order.
    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        RationalSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Coeff::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalSeries { coeffs }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &Coeff) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Solves the convolution equations `b_0 = 1/a_0`,
    /// `b_n = -(1/a_0) * sum_{i=1..n} a_i b_{n-i}`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].recip();
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = Coeff::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out.push(-(&inv0 * acc));
        }
        Ok(RationalSeries { coeffs: out })
    }

    /// Nonnegative integer power, by binary exponentiation.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RationalSeries::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::add(self, rhs)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::sub(self, rhs)
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::mul(self, rhs)
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// The series `e^{kx/2} = sum_j (k/2)^j x^j / j!`, exact to the given order.
pub fn exp_halfk(k: i64, order: usize) -> RationalSeries {
    let half_k = BigRational::new(BigInt::from(k), BigInt::from(2));
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = Coeff::one();
    for j in 0..=order as u64 {
        if j > 0 {
            power *= &half_k;
        }
        coeffs.push(&power / BigRational::from(factorial(j)));
    }
    RationalSeries { coeffs }
}

/// The even series `sinh(a x/2) / (a x/2) = sum_j (a/2)^{2j} x^{2j} / (2j+1)!`
/// with constant term 1.
pub fn sinh_ratio(a: u64, order: usize) -> RationalSeries {
    debug_assert!(a >= 1, "sinh_ratio expects a positive degree");
    let half_a_sq = BigRational::new(BigInt::from(a * a), BigInt::from(4));
    let mut coeffs = vec![Coeff::zero(); order + 1];
    let mut power = Coeff::one();
    let mut j = 0u64;
    loop {
        let deg = (2 * j) as usize;
        if deg > order {
            break;
        }
        coeffs[deg] = &power / BigRational::from(factorial(2 * j + 1));
        power *= &half_a_sq;
        j += 1;
    }
    RationalSeries { coeffs }
}

/// A Laurent series: finitely many negative degrees, truncated above at an
/// inclusive `order`.
///
/// Normal form: the coefficient at the valuation is nonzero, or the series
/// is zero and stores no coefficients (then `valuation == order + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    order: i64,
    coeffs: Vec<Coeff>,
}

impl LaurentSeries {
    /// Builds a series whose lowest stored degree is `valuation`; the
    /// truncation order is `valuation + coeffs.len() - 1`.
    pub fn from_parts(valuation: i64, coeffs: Vec<Coeff>) -> Self {
        let order = valuation + coeffs.len() as i64 - 1;
        LaurentSeries {
            valuation,
            order,
            coeffs,
        }
        .normalized()
    }

    /// The zero series known up to the given order.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            valuation: order + 1,
            order,
            coeffs: Vec::new(),
        }
    }

    /// Embeds a truncated power series.
    pub fn from_power_series(s: &RationalSeries) -> Self {
        LaurentSeries::from_parts(0, s.coeffs().to_vec())
    }

    /// The Laurent expansion of `sinh(a x/2)`, valuation 1, to the given
    /// inclusive order: odd coefficients `(a/2)^{2j+1} / (2j+1)!`.
    pub fn sinh_half(a: u64, order: i64) -> Self {
        debug_assert!(a >= 1);
        let half_a = BigRational::new(BigInt::from(a), BigInt::from(2));
        let half_a_sq = &half_a * &half_a;
        // coefficients stored from degree 1 upward
        let len = order.max(0) as usize;
        let mut coeffs = vec![Coeff::zero(); len];
        let mut power = half_a.clone();
        let mut j = 0u64;
        loop {
            let deg = (2 * j + 1) as i64;
            if deg > order {
                break;
            }
            coeffs[(deg - 1) as usize] = &power / BigRational::from(factorial(2 * j + 1));
            power *= &half_a_sq;
            j += 1;
        }
        LaurentSeries::from_parts(1, coeffs)
    }

    fn normalized(mut self) -> Self {
        let leading = self.coeffs.iter().position(|c| !c.is_zero());
        match leading {
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.valuation = self.order + 1;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree with a nonzero coefficient (meaningless for zero).
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Inclusive truncation degree.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^degree`. Degrees below the valuation are known to be
    /// zero; degrees above the order are unknown and panic.
    pub fn coeff(&self, degree: i64) -> Coeff {
        assert!(
            degree <= self.order,
            "degree {} beyond truncation order {}",
            degree,
            self.order
        );
        if degree < self.valuation {
            return Coeff::zero();
        }
        self.coeffs[(degree - self.valuation) as usize].clone()
    }

    /// Product, with the truncation order propagated as
    /// `min(o1 + v2, o2 + v1)`: the first unknown coefficient of either
    /// factor limits what the product determines.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order + other.valuation).min(other.order + self.valuation);
        if self.is_zero() || other.is_zero() {
            return LaurentSeries::zero(order);
        }
        let valuation = self.valuation + other.valuation;
        let len = (order - valuation + 1).max(0) as usize;
        let mut coeffs = vec![Coeff::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let da = self.valuation + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let d = da + other.valuation + j as i64;
                if d > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(d - valuation) as usize] += a * b;
                }
            }
        }
        LaurentSeries::from_parts(valuation, coeffs)
    }

    /// Multiplicative inverse. Writing `self = x^v u(x)` with `u` a unit
    /// power series known to relative order `m = order - v`, the inverse is
    /// `x^{-v} u^{-1}(x)`, known to absolute order `m - v`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let unit = RationalSeries::from_coeffs(self.coeffs.clone());
        let inv = unit.invert()?;
        Ok(LaurentSeries::from_parts(-self.valuation, inv.coeffs))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i32) -> Result<Self, SeriesError> {
        if exp < 0 {
            return self.invert()?.pow(-exp);
        }
        if exp == 0 {
            // 1, carried at the relative precision of self
            let rel = (self.order - self.valuation).max(0) as usize;
            let mut coeffs = vec![Coeff::zero(); rel + 1];
            coeffs[0] = Coeff::one();
            return Ok(LaurentSeries::from_parts(0, coeffs));
        }
        let mut exp = exp as u32;
        let mut base = self.clone();
        let mut acc: Option<LaurentSeries> = None;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc.expect("exp > 0 always produces a factor"))
    }

    /// The coefficient of `x^{-1}`, provided the truncation covers it.
    pub fn residue(&self) -> Result<Coeff, SeriesError> {
        if self.order < -1 {
            return Err(SeriesError::InsufficientOrder { order: self.order });
        }
        Ok(if -1 < self.valuation {
            Coeff::zero()
        } else {
            self.coeff(-1)
        })
    }

    /// Formal derivative d/dx; the truncation order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from(BigInt::from(self.valuation + i as i64)))
            .collect();
        LaurentSeries {
            valuation: self.valuation - 1,
            order: self.order - 1,
            coeffs,
        }
        .normalized()
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            let d = self.valuation + i as i64;
            match d {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, d)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}
