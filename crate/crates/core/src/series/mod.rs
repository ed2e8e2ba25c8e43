//! Truncated formal power series in one variable `t`.
//!
//! A [`Series`] of order `N` stores the coefficients of `t^0..=t^N`. Binary
//! operations keep the smaller of the two orders. Division by a series of
//! valuation `k` cancels `t^k` first and therefore loses `k` orders.

mod cheb;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::{Error, Field, Result};

pub use cheb::{cheb_ab, cheb_v, ChebKind, ChebStream};

#[derive(Clone, Debug, PartialEq)]
pub struct Series<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Series<F> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past the order.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| F::from_i64(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(F::one(), order)
    }

    pub fn constant(c: F, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Series::monomial(1, F::one(), order)
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: F, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, or zero past the order.
    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    /// Drops the order to `order` after checking it is available.
    pub fn truncate_exact(&self, order: usize) -> Result<Self> {
        if self.order() < order {
            return Err(Error::OrderLoss { want: order, got: self.order() });
        }
        Ok(self.truncate(order))
    }

    pub fn scale(&self, c: &F) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add_scalar(&self, c: F) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = s.coeffs[0].clone() + c;
        s
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![F::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        Series { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(F, F) -> F) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|i| f(self.coeffs[i].clone(), other.coeffs[i].clone())).collect() }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![F::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series { coeffs: out }
    }

    /// `self / g`. When `g` has valuation `k`, the first `k` coefficients of
    /// `self` must vanish and the quotient has order `min(orders) - k`.
    pub fn div(&self, g: &Self) -> Result<Self> {
        let n = self.order().min(g.order());
        let k = match g.truncate(n).valuation() {
            Some(k) => k,
            None => return Err(Error::DivisionByZero(n)),
        };
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { dividend: i, divisor: k });
        }
        let m = n - k;
        let lead = g.coeffs[k].clone();
        let mut h: Vec<F> = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut acc = self.coeffs[i + k].clone();
            for (j, hj) in h.iter().enumerate() {
                let gj = &g.coeffs[k + i - j];
                if !gj.is_zero() && !hj.is_zero() {
                    acc = acc - hj.clone() * gj.clone();
                }
            }
            h.push(acc / lead.clone());
        }
        Ok(Series { coeffs: h })
    }

    /// `1 / self`; the constant term must be nonzero.
    pub fn recip(&self) -> Result<Self> {
        Series::one(self.order()).div(self)
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstant);
        }
        let n = self.order();
        let two = F::from_i64(2);
        let mut g: Vec<F> = Vec::with_capacity(n + 1);
        g.push(F::one());
        for i in 1..=n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..i {
                acc = acc - g[k].clone() * g[i - k].clone();
            }
            g.push(acc / two.clone());
        }
        Ok(Series { coeffs: g })
    }

    /// `self(g(t))`; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::ComposeConstant);
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul_ref(&g).add_scalar(self.coeffs[k].clone());
        }
        Ok(acc)
    }

    /// Integer power; negative exponents need an invertible series.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Series::one(base.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }

    /// Coefficients as integers; any non-integer coefficient is an error.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_integer().ok_or_else(|| Error::NonInteger { index: i, value: c.to_string() }))
            .collect()
    }
}

impl Series<BigRational> {
    /// Machine format: an array of `[numerator, denominator]` string pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::Array(vec![Value::String(c.numer().to_string()), Value::String(c.denom().to_string())]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("not a series: {value}"));
        let items = value.as_array().ok_or_else(bad)?;
        if items.is_empty() {
            return Err(bad());
        }
        let mut coeffs = Vec::with_capacity(items.len());
        for item in items {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let num: BigInt = pair[0].as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let den: BigInt = pair[1].as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(bad());
            }
            coeffs.push(BigRational::new(num, den));
        }
        let order = coeffs.len() - 1;
        Ok(Series::new(coeffs, order))
    }
}

impl<F: Field> fmt::Display for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<F: Field> $tr<&Series<F>> for &Series<F> {
            type Output = Series<F>;
            fn $method(self, rhs: &Series<F>) -> Series<F> {
                let f: fn(&Series<F>, &Series<F>) -> Series<F> = $body;
                f(self, rhs)
            }
        }
        impl<F: Field> $tr<Series<F>> for Series<F> {
            type Output = Series<F>;
            fn $method(self, rhs: Series<F>) -> Series<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Field> $tr<&Series<F>> for Series<F> {
            type Output = Series<F>;
            fn $method(self, rhs: &Series<F>) -> Series<F> {
                (&self).$method(rhs)
            }
        }
        impl<F: Field> $tr<Series<F>> for &Series<F> {
            type Output = Series<F>;
            fn $method(self, rhs: Series<F>) -> Series<F> {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.zip_with(b, |x, y| x + y));
binop!(Sub, sub, |a, b| a.zip_with(b, |x, y| x - y));
binop!(Mul, mul, |a, b| a.mul_ref(b));

impl<F: Field> Neg for Series<F> {
    type Output = Series<F>;
    fn neg(self) -> Series<F> {
        Series { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Neg for &Series<F> {
    type Output = Series<F>;
    fn neg(self) -> Series<F> {
        -self.clone()
    }
}
