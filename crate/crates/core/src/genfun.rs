//! Generating functions of the avoidance classes, expanded as truncated
//! power series, plus the auxiliary series they are assembled from.
//!
//! Every infinite sum or iteration is cut where a proven lower bound on the
//! valuation of the remaining terms exceeds the working order. Each term is
//! checked against its bound as it is computed.

use std::fmt;

use num_bigint::BigInt;

use crate::scalar::nonnegative;
use crate::series::{ChebKind, ChebStream, Series};
use crate::words::VincularPattern;
use crate::{Count, Error, Field, Result};

/// Extra orders carried internally to absorb valuation-cancelling divisions.
const PAD: usize = 4;

/// Patterns with a generating function. 11-1 shares the series of 1-11.
pub const GENFUN_PATTERNS: [&str; 10] = ["2-21", "3-21", "1-11", "11-1", "2-11", "21-2", "21-3", "31-2", "11-2", "21-1"];

/// Patterns with an iterated kernel evaluation.
pub const KERNEL_PATTERNS: [&str; 4] = ["21-2", "21-3", "11-2", "21-1"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    ExplicitSum,
    IteratedFunctional,
    FixedPointRecursion,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::ExplicitSum => "explicit-sum",
            Strategy::IteratedFunctional => "iterated-functional",
            Strategy::FixedPointRecursion => "fixed-point-recursion",
        })
    }
}

/// How to evaluate one generating function. `bound` is the last summation
/// index (or recursion depth) that is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfRecipe {
    pub pattern: VincularPattern,
    pub strategy: Strategy,
    pub order: usize,
    pub bound: usize,
}

impl GfRecipe {
    fn key(&self) -> String {
        self.pattern.to_string()
    }

    /// Lower bound on the valuation of term `i`.
    pub fn term_floor(&self, i: usize) -> usize {
        term_floor(&self.key(), self.strategy, i)
    }
}

fn term_floor(key: &str, strategy: Strategy, i: usize) -> usize {
    match (key, strategy) {
        ("2-21", _) => i * (i + 5) / 2,
        ("3-21", _) => 2 * i + 1,
        ("1-11" | "11-1" | "2-11", _) => i,
        ("31-2", _) => i + 1,
        // t^2 prefactor, a factor t in b, and valuation 4 per factor a.
        ("11-2", _) => (4 * i).saturating_sub(1),
        ("21-2", Strategy::ExplicitSum) => 2 * i + 1,
        ("21-2", _) => 2 * i,
        ("21-3", _) => i * i.saturating_sub(1) / 2 + 3 * i,
        ("21-1", _) => i,
        _ => unreachable!("unregistered pattern {key}"),
    }
}

fn bound_for(key: &str, strategy: Strategy, w: usize) -> usize {
    let mut i = 0;
    while term_floor(key, strategy, i + 1) <= w {
        i += 1;
    }
    i
}

fn make_recipe(pattern: &VincularPattern, order: usize, strategy: Strategy) -> Result<GfRecipe> {
    if order == 0 {
        return Err(Error::Length { min: 1, got: 0 });
    }
    let key = pattern.to_string();
    let bound = bound_for(&key, strategy, order + PAD);
    Ok(GfRecipe { pattern: pattern.clone(), strategy, order, bound })
}

/// The default recipe: the explicit formula, or the recursion for 21-1.
pub fn recipe(pattern: &VincularPattern, order: usize) -> Result<GfRecipe> {
    let key = pattern.to_string();
    if !GENFUN_PATTERNS.contains(&key.as_str()) {
        return Err(Error::Unsupported { pattern: key, method: "genfun" });
    }
    let strategy = if key == "21-1" { Strategy::FixedPointRecursion } else { Strategy::ExplicitSum };
    make_recipe(pattern, order, strategy)
}

/// The iterated functional-equation recipe.
pub fn kernel_recipe(pattern: &VincularPattern, order: usize) -> Result<GfRecipe> {
    let key = pattern.to_string();
    let strategy = match key.as_str() {
        "21-1" => Strategy::FixedPointRecursion,
        k if KERNEL_PATTERNS.contains(&k) => Strategy::IteratedFunctional,
        _ => return Err(Error::Unsupported { pattern: key, method: "iterate_kernel" }),
    };
    make_recipe(pattern, order, strategy)
}

/// `sum_n c_n(pattern) t^n` through `t^order`.
pub fn series_for<F: Field>(pattern: &VincularPattern, order: usize) -> Result<Series<F>> {
    evaluate(&recipe(pattern, order)?)
}

/// Evaluates an iterated recipe.
pub fn iterate_kernel<F: Field>(recipe: &GfRecipe) -> Result<Series<F>> {
    if recipe.strategy == Strategy::ExplicitSum {
        return Err(Error::Unsupported { pattern: recipe.key(), method: "iterate_kernel" });
    }
    evaluate(recipe)
}

/// Evaluates any recipe and checks integrality of the result.
pub fn evaluate<F: Field>(recipe: &GfRecipe) -> Result<Series<F>> {
    let w = recipe.order + PAD;
    let dropped = recipe.term_floor(recipe.bound + 1);
    if dropped <= w {
        return Err(Error::ShortBound { bound: recipe.bound, dropped, order: w });
    }
    let cx = Cx { w, bound: recipe.bound, key: recipe.key(), strategy: recipe.strategy };
    let raw = match (cx.key.as_str(), recipe.strategy) {
        ("2-21", Strategy::ExplicitSum) => cx.gf_2_21()?,
        ("3-21", Strategy::ExplicitSum) => cx.gf_3_21()?,
        ("1-11" | "11-1", Strategy::ExplicitSum) => cx.gf_1_11()?,
        ("2-11", Strategy::ExplicitSum) => cx.gf_2_11()?,
        ("21-2", Strategy::ExplicitSum) => cx.gf_21_2()?,
        ("21-2", Strategy::IteratedFunctional) => cx.kernel_21_2()?,
        ("21-3", Strategy::ExplicitSum) => cx.gf_21_3()?,
        ("21-3", Strategy::IteratedFunctional) => cx.kernel_21_3()?,
        ("31-2", Strategy::ExplicitSum) => cx.gf_31_2()?,
        ("11-2", Strategy::ExplicitSum) => cx.gf_11_2()?,
        ("11-2", Strategy::IteratedFunctional) => cx.kernel_11_2()?,
        ("21-1", Strategy::FixedPointRecursion) => cx.gf_21_1()?,
        (key, _) => return Err(Error::Unsupported { pattern: key.to_string(), method: "this strategy" }),
    };
    let s = raw.truncate_exact(recipe.order)?;
    s.to_integers()?;
    Ok(s)
}

/// `c_1, ..., c_order` read off the generating function.
pub fn sequence<F: Field, T: Count>(pattern: &VincularPattern, order: usize) -> Result<Vec<T>> {
    coefficients(&series_for::<F>(pattern, order)?)
}

/// Coefficients of `t^1, t^2, ...` as counts.
pub fn coefficients<F: Field, T: Count>(s: &Series<F>) -> Result<Vec<T>> {
    let ints: Vec<BigInt> = s.to_integers()?;
    ints.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| nonnegative(c).ok_or_else(|| Error::NonInteger { index: i, value: c.to_string() }))
        .collect()
}

/// Sums `sum_{j>=0} b(v_j) prod_{i<j} a(v_i)` with `v_{j+1} = step(v_j)`,
/// the unrolled solution of `X(v) = a(v) X(step(v)) + b(v)`.
///
/// Each factor `a(v_j)` must have positive valuation and each step must
/// raise the valuation of `v`; otherwise the iteration is refused. At most
/// `max_steps + 1` terms are taken.
pub fn unroll_affine<F: Field>(
    v0: Series<F>,
    max_steps: usize,
    step: impl Fn(&Series<F>) -> Result<Series<F>>,
    a: impl Fn(&Series<F>) -> Result<Series<F>>,
    b: impl Fn(&Series<F>) -> Result<Series<F>>,
) -> Result<Series<F>> {
    let mut v = v0;
    let mut prod = Series::one(v.order());
    let mut acc = Series::zero(v.order());
    for j in 0..=max_steps + 1 {
        if prod.is_zero() {
            return Ok(acc);
        }
        if j == max_steps + 1 {
            let dropped = prod.valuation().unwrap_or(0);
            return Err(Error::ShortBound { bound: max_steps, dropped, order: prod.order() });
        }
        acc = acc + &prod * b(&v)?;
        let av = a(&v)?;
        if av.valuation() == Some(0) {
            return Err(Error::NonContracting(j));
        }
        let next = step(&v)?;
        match (v.valuation(), next.valuation()) {
            (_, None) => {}
            (Some(x), Some(y)) if y > x => {}
            _ => return Err(Error::NonContracting(j)),
        }
        prod = prod * av;
        v = next;
    }
    unreachable!("loop returns")
}

fn check_floor<F: Field>(term: &Series<F>, index: usize, floor: usize) -> Result<()> {
    match term.valuation() {
        Some(v) if v < floor => Err(Error::ValuationBound { index, bound: floor, got: v }),
        _ => Ok(()),
    }
}

/// Binomial `C(j, 2)` as a signed exponent.
fn c2(j: i64) -> i64 {
    j * (j - 1) / 2
}

/// Series constructors at a fixed working order.
struct Cx {
    w: usize,
    bound: usize,
    key: String,
    strategy: Strategy,
}

impl Cx {
    fn p<F: Field>(&self, c: &[i64]) -> Series<F> {
        Series::from_ints(c, self.w)
    }

    fn one<F: Field>(&self) -> Series<F> {
        Series::one(self.w)
    }

    fn tp<F: Field>(&self, k: usize) -> Series<F> {
        Series::monomial(k, F::one(), self.w)
    }

    fn floor(&self, i: usize) -> usize {
        term_floor(&self.key, self.strategy, i)
    }

    fn gf_2_21<F: Field>(&self) -> Result<Series<F>> {
        let omt = self.p::<F>(&[1, -1]);
        let o2t = self.p::<F>(&[1, -2]);
        let mut r = self.tp::<F>(1).div(&o2t)?;
        for i in 1..=self.bound {
            let e: Vec<Series<F>> =
                (1..=i).map(|j| Ok(&o2t * omt.pow(j as i64)? - omt.pow(2)? * self.tp(j))).collect::<Result<_>>()?;
            let mut inner = Series::zero(self.w);
            let mut den = self.one::<F>();
            for (j, ej) in e.iter().enumerate() {
                inner = inner + omt.pow(j as i64 + 1)?.div(ej)?;
                den = den * ej;
            }
            let term = (self.tp::<F>(i * (i + 5) / 2) * &o2t * inner).div(&den)?;
            check_floor(&term, i, self.floor(i))?;
            r = if i % 2 == 1 { r + term } else { r - term };
        }
        Ok(r)
    }

    fn gf_3_21<F: Field>(&self) -> Result<Series<F>> {
        let omt = self.p::<F>(&[1, -1]);
        let o2t = self.p::<F>(&[1, -2]);
        let quad = self.p::<F>(&[1, -3, 1]);
        let mut r = self.tp::<F>(1).div(&o2t)?;
        for i in 1..=self.bound {
            let mut inner = Series::zero(self.w);
            let mut den = self.one::<F>();
            for j in 1..=i {
                let dj = &quad * omt.pow(j as i64 - 1)? - &o2t * self.tp(j);
                inner = inner + self.tp::<F>(j).div(&dj)?;
                den = den * dj;
            }
            let lead = self.tp::<F>(2 * i) * omt.pow(c2(i as i64))? * &o2t;
            let term = (lead * inner).div(&den)?;
            check_floor(&term, i, self.floor(i))?;
            r = if i % 2 == 1 { r + term } else { r - term };
        }
        Ok(r)
    }

    fn gf_1_11<F: Field>(&self) -> Result<Series<F>> {
        let mut v = ChebStream::<F>::new(ChebKind::V, self.w)?;
        let mut r = Series::zero(self.w);
        for m in 1..=self.bound {
            let den = v.value(m).clone() * v.value(m + 1);
            let term = self.tp::<F>(m).div(&den)?;
            check_floor(&term, m, self.floor(m))?;
            r = r + term;
        }
        Ok(r)
    }

    fn gf_2_11<F: Field>(&self) -> Result<Series<F>> {
        let mut v = ChebStream::<F>::new(ChebKind::V, self.w)?;
        let opt = self.p::<F>(&[1, 1]);
        let mut r = Series::zero(self.w);
        for m in 1..=self.bound {
            let den = opt.pow(m as i64 + 1)? * v.value(m) * v.value(m + 1) * v.value(m + 2);
            let term = self.tp::<F>(m).div(&den)?;
            check_floor(&term, m, self.floor(m))?;
            r = r + term;
        }
        Ok(r)
    }

    fn gf_21_2<F: Field>(&self) -> Result<Series<F>> {
        let omt = self.p::<F>(&[1, -1]);
        let o2t = self.p::<F>(&[1, -2]);
        let mut num = self.tp::<F>(1);
        let mut den = o2t.clone();
        let mut pa = self.one::<F>();
        let mut pb = self.one::<F>();
        for j in 1..=self.bound {
            let ji = j as i64;
            let a = &o2t * omt.pow(ji)? - &omt * self.tp(j);
            let b = &o2t * omt.pow(2 * ji)? - self.tp::<F>(j) * omt.pow(ji + 1)? + self.tp(2 * j + 1);
            pa = pa * a;
            pb = pb * b;
            let ratio = pa.div(&pb)?;
            let tj = self.tp::<F>(2 * j + 1);
            let nterm = &tj * omt.pow(c2(ji - 1) - 1)? * &ratio;
            let corr = &o2t * omt.pow(ji - 1)? - self.tp(j);
            let dterm = (tj * &o2t * omt.pow(c2(ji) - 1)? * ratio).div(&corr)?;
            check_floor(&nterm, j, self.floor(j))?;
            check_floor(&dterm, j, self.floor(j))?;
            num = num + nterm;
            den = den - dterm;
        }
        num.div(&den)
    }

    /// The kernel root for 21-2.
    fn x_21_2<F: Field>(&self) -> Result<Series<F>> {
        self.p::<F>(&[1, -1]).div(&self.p(&[1, -2]))
    }

    /// The kernel root for 21-3, from the quadratic it satisfies.
    fn x_21_3<F: Field>(&self) -> Result<Series<F>> {
        let rad = self.p::<F>(&[1, -10, 37, -62, 46, -12, 1]).sqrt()?;
        let num = self.p::<F>(&[1, -3, 2, -1]) - rad;
        num.div(&(self.p::<F>(&[0, 2]) * self.p::<F>(&[1, -3, 1])))
    }

    fn k_21_2<F: Field>(&self, y: &Series<F>) -> Result<Series<F>> {
        let t = self.tp::<F>(1);
        let omy = self.one::<F>() - y;
        let tail = self.tp::<F>(2).div(&self.p(&[1, -2]))?;
        Ok((y * y * t).div(&omy)? + tail + self.one())
    }

    fn k_21_3<F: Field>(&self, y: &Series<F>) -> Result<Series<F>> {
        let t = self.tp::<F>(1);
        let omy = self.one::<F>() - y;
        let tail = (y * self.tp::<F>(3)).div(&self.p(&[1, -3, 2]))?;
        Ok((y * y * t).div(&omy)? + tail + self.one())
    }

    /// `(x - 1)(1 + S1)/(1 + (1 - x) S2)` from the two kernel sums.
    fn kernel_quotient<F: Field>(&self, x: &Series<F>, s1: Series<F>, s2: Series<F>) -> Result<Series<F>> {
        let one = self.one::<F>();
        let xm1 = x - &one;
        (xm1.clone() * (&one + s1)).div(&(&one - xm1 * s2))
    }

    fn gf_21_3<F: Field>(&self) -> Result<Series<F>> {
        let x = self.x_21_3::<F>()?;
        let omt = self.p::<F>(&[1, -1]);
        let o2t = self.p::<F>(&[1, -2]);
        let mut s1 = Series::zero(self.w);
        let mut s2 = Series::zero(self.w);
        let mut pk = self.one::<F>();
        for j in 1..=self.bound {
            let ji = j as i64;
            let y = (&x * self.tp(j)).div(&omt.pow(ji)?)?;
            pk = pk * self.k_21_3(&y)?;
            let lead = self.tp::<F>(c2(ji) as usize + 3 * j) * x.pow(ji)?;
            let base = o2t.pow(ji)? * &pk;
            let t1 = lead.div(&(omt.pow(c2(ji + 1))? * &base))?;
            let tail = omt.pow(ji)? - &x * self.tp(j);
            let t2 = lead.div(&(omt.pow(c2(ji))? * base * tail))?;
            check_floor(&t1, j, self.floor(j))?;
            check_floor(&t2, j, self.floor(j))?;
            s1 = s1 + t1;
            s2 = s2 + t2;
        }
        self.kernel_quotient(&x, s1, s2)
    }

    /// Both kernel sums by unrolling the functional equation in `y`, where
    /// `a` is the per-step factor.
    fn kernel_sums<F: Field>(
        &self,
        x: &Series<F>,
        a: impl Fn(&Series<F>) -> Result<Series<F>>,
    ) -> Result<(Series<F>, Series<F>)> {
        let omt = self.p::<F>(&[1, -1]);
        let shrink = self.tp::<F>(1).div(&omt)?;
        let y1 = x * &shrink;
        let step = |y: &Series<F>| Ok(y * &shrink);
        let s1 = unroll_affine(y1.clone(), self.bound, step, &a, &a)?;
        let s2 = unroll_affine(y1, self.bound, step, &a, |y: &Series<F>| a(y)?.div(&(self.one::<F>() - y)))?;
        Ok((s1, s2))
    }

    fn kernel_21_2<F: Field>(&self) -> Result<Series<F>> {
        let x = self.x_21_2::<F>()?;
        let o2t = self.p::<F>(&[1, -2]);
        let a = |y: &Series<F>| self.tp::<F>(2).div(&(&o2t * self.k_21_2(y)?));
        let (s1, s2) = self.kernel_sums(&x, a)?;
        self.kernel_quotient(&x, s1, s2)
    }

    fn kernel_21_3<F: Field>(&self) -> Result<Series<F>> {
        let x = self.x_21_3::<F>()?;
        let o2t = self.p::<F>(&[1, -2]);
        let a = |y: &Series<F>| (self.tp::<F>(2) * y).div(&(&o2t * self.k_21_3(y)?));
        let (s1, s2) = self.kernel_sums(&x, a)?;
        self.kernel_quotient(&x, s1, s2)
    }

    fn gf_31_2<F: Field>(&self) -> Result<Series<F>> {
        let mut ab = ChebStream::<F>::new(ChebKind::AB, self.w)?;
        let mut r = self.tp::<F>(1).div(&self.p(&[1, -1]))?;
        let mut pa = self.one::<F>();
        let mut pb = ab.pair(1).1;
        for i in 1..=self.bound {
            let (ai, _) = ab.pair(i);
            let (_, bi1) = ab.pair(i + 1);
            pa = pa * ai;
            pb = pb * bi1;
            let term = (self.tp::<F>(i + 1) * &pa).div(&pb)?;
            check_floor(&term, i, self.floor(i))?;
            r = r + term;
        }
        Ok(r)
    }

    fn radical_motzkin<F: Field>(&self) -> Result<Series<F>> {
        self.p::<F>(&[1, -2, -3]).sqrt()
    }

    /// `T(t) = 1 + t M(t)`.
    fn big_t<F: Field>(&self) -> Result<Series<F>> {
        (self.p::<F>(&[1, 1]) - self.radical_motzkin()?).div(&self.p(&[0, 2]))
    }

    fn a_11_2<F: Field>(&self, t_: &Series<F>, v: &Series<F>) -> Result<Series<F>> {
        let t = self.tp::<F>(1);
        let opt = self.p::<F>(&[1, 1]);
        let tt = t_ * t_;
        let num = (&t - v) * self.tp(3) * tt.pow(4)?;
        num.div(&(opt.pow(3)? * (opt - v * tt)))
    }

    fn b_11_2<F: Field>(&self, t_: &Series<F>, v: &Series<F>) -> Result<Series<F>> {
        let one = self.one::<F>();
        let opt = self.p::<F>(&[1, 1]);
        let num = self.tp::<F>(1) * t_.pow(3)? * (self.p::<F>(&[2]) - t_);
        let den = (&one - v) * (&one + v - v * t_) * (opt - v * t_ * t_);
        num.div(&den)
    }

    /// `(1+t)(1 - t - sqrt(1-2t-3t^2))/(2t)` and `t^2 T/(1+t)`.
    fn parts_11_2<F: Field>(&self, t_: &Series<F>) -> Result<(Series<F>, Series<F>)> {
        let opt = self.p::<F>(&[1, 1]);
        let first = (&opt * (self.p::<F>(&[1, -1]) - self.radical_motzkin()?)).div(&self.p(&[0, 2]))?;
        let pre = (self.tp::<F>(2) * t_).div(&opt)?;
        Ok((first, pre))
    }

    fn gf_11_2<F: Field>(&self) -> Result<Series<F>> {
        let t_ = self.big_t::<F>()?;
        let (first, pre) = self.parts_11_2(&t_)?;
        let ratio = (self.tp::<F>(1) * &t_).div(&self.p(&[1, 1]))?;
        let mut sum = Series::zero(self.w);
        let mut prod = self.one::<F>();
        for j in 1..=self.bound {
            let ji = j as i64;
            // v_j = t^j T^(2j-1) / (1+t)^j
            let vj = ratio.pow(ji)? * t_.pow(ji - 1)?;
            let term = &pre * self.b_11_2(&t_, &vj)? * &prod;
            check_floor(&term, j, self.floor(j))?;
            sum = sum + term;
            prod = prod * self.a_11_2(&t_, &vj)?;
        }
        Ok(first + sum)
    }

    /// `P(t; v, 1)` by unrolling its functional equation.
    fn pv<F: Field>(&self, t_: &Series<F>, v: Series<F>, max_steps: usize) -> Result<Series<F>> {
        let shift = (self.tp::<F>(1) * t_ * t_).div(&self.p(&[1, 1]))?;
        unroll_affine(v, max_steps, |v| Ok(v * &shift), |v| self.a_11_2(t_, v), |v| self.b_11_2(t_, v))
    }

    fn kernel_11_2<F: Field>(&self) -> Result<Series<F>> {
        let t_ = self.big_t::<F>()?;
        let (first, pre) = self.parts_11_2(&t_)?;
        let v1 = (self.tp::<F>(1) * &t_).div(&self.p(&[1, 1]))?;
        Ok(first + pre * self.pv(&t_, v1, self.bound)?)
    }

    fn gf_21_1<F: Field>(&self) -> Result<Series<F>> {
        let t = self.tp::<F>(1);
        let omt = self.p::<F>(&[1, -1]);
        let o2t = self.p::<F>(&[1, -2]);
        let shrink = t.div(&omt)?;
        let mut vs = vec![self.one::<F>()];
        for d in 1..=self.bound {
            let next = &vs[d - 1] * &shrink;
            vs.push(next);
        }
        // R at depth bound + 1 is dropped; its prefactor has valuation above
        // the working order.
        let mut inner = Series::zero(self.w);
        for d in (0..=self.bound).rev() {
            let v = &vs[d];
            let corr = v * self.tp::<F>(3) * &inner;
            check_floor(&corr, d + 1, self.floor(d + 1))?;
            let lower = &omt * &o2t - corr;
            let upper = omt.pow(2)? * (v * self.tp::<F>(2) - (self.one::<F>() - v) * &o2t);
            let den = v * &o2t - upper.div(&lower)?;
            inner = t.div(&den)?;
        }
        Ok(inner)
    }
}

/// Argument of an auxiliary series: none, an index, or a series variable.
#[derive(Clone, Debug)]
pub enum AuxArg<F> {
    None,
    Index(usize),
    Var(Series<F>),
}

/// Names accepted by [`aux_series`].
pub const AUX_NAMES: [&str; 10] = ["H", "J", "G", "Q", "K", "P2_11", "T", "MotzkinGF", "Mv", "Pv"];

/// The auxiliary generating functions:
///
/// - `H(m)`: no-level growth words over `[m]` ending in `m`;
/// - `J(m)`: no-level growth words over `[m]`, the empty word included;
/// - `G(m)`: no-level Catalan words with largest and last letter `m - 1`
///   (`G(1) = 1`);
/// - `Q(m)`: no-level Catalan words with largest letter `m`;
/// - `K(m)`, `P2_11(m)`: the product forms used for 2-11, where `P2_11(m)`
///   counts avoiders of 2-11 with largest letter `m`;
/// - `T`, `MotzkinGF`: `1 + t M(t)` and `M(t)` for the Motzkin numbers;
/// - `Mv(v)`: `sum m_n(a) v^(a-1) t^n` evaluated at a series `v`;
/// - `Pv(v)`: `sum p_n(a) v^(a-1) t^n` evaluated at a series `v` of positive
///   valuation.
pub fn aux_series<F: Field>(name: &str, arg: AuxArg<F>, order: usize) -> Result<Series<F>> {
    let w = order + PAD;
    let cx = Cx { w, bound: w, key: String::new(), strategy: Strategy::ExplicitSum };
    let index = |min: usize| match &arg {
        AuxArg::Index(m) if *m >= min => Ok(*m),
        other => Err(Error::Index(format!("{name} needs an index >= {min}, got {other:?}"))),
    };
    let var = || match &arg {
        AuxArg::Var(v) => Ok(v.truncate(w.min(v.order()))),
        other => Err(Error::Index(format!("{name} needs a series argument, got {other:?}"))),
    };
    let q = || cx.tp::<F>(1).div(&cx.p(&[1, 1]));
    let mut vs = ChebStream::<F>::new(ChebKind::V, w)?;
    let h = |i: usize, vs: &mut ChebStream<F>| -> Result<Series<F>> {
        if i == 0 {
            return Ok(Series::zero(w));
        }
        (q()? * vs.value(i - 1)).div(&vs.value(i + 1).clone())
    };
    let j = |i: usize, vs: &mut ChebStream<F>| vs.value(i + 1).clone().recip();
    let prod_h = |upto: usize, vs: &mut ChebStream<F>| -> Result<Series<F>> {
        let mut p = cx.one::<F>();
        for i in 0..upto {
            p = p * (cx.p::<F>(&[1, -1]) - cx.tp::<F>(1) * h(i, vs)?);
        }
        Ok(p)
    };
    let out = match name {
        "H" => h(index(0)?, &mut vs)?,
        "J" => j(index(0)?, &mut vs)?,
        "G" => {
            let m = index(1)?;
            q()?.pow(m as i64 - 1)?.div(&vs.value(m).clone())?
        }
        "Q" => {
            let m = index(1)?;
            let den = vs.value(m).clone() * vs.value(m + 1);
            q()?.pow(m as i64)?.div(&den)?
        }
        "K" => {
            let m = index(1)?;
            cx.tp::<F>(m - 1).div(&prod_h(m - 1, &mut vs)?)?
        }
        "P2_11" => {
            let m = index(1)?;
            (cx.tp::<F>(m) * j(m - 1, &mut vs)?).div(&prod_h(m, &mut vs)?)?
        }
        "T" => cx.big_t::<F>()?,
        "MotzkinGF" => (cx.p::<F>(&[1, -1]) - cx.radical_motzkin()?).div(&cx.p(&[0, 0, 2]))?,
        "Mv" => {
            let v = var()?;
            let one = cx.one::<F>();
            let t = cx.tp::<F>(1);
            let num = &one + (&one - v.scale(&F::from_i64(2))) * &t - cx.radical_motzkin()?;
            let den = ((&one - &v) + (&one - &v) * &t + &v * &v * &t).scale(&F::from_i64(2));
            num.div(&den)?
        }
        "Pv" => {
            let v = var()?;
            if v.valuation().is_some_and(|x| x == 0) {
                return Err(Error::Index("Pv needs a series of positive valuation".into()));
            }
            let t_ = cx.big_t::<F>()?;
            cx.pv(&t_, v, w)?
        }
        _ => return Err(Error::UnknownSequence(name.to_string())),
    };
    out.truncate_exact(order)
}

/// `x(t)` for the 21-2 or 21-3 kernel.
pub fn kernel_root<F: Field>(pattern: &VincularPattern, order: usize) -> Result<Series<F>> {
    let cx = Cx { w: order + PAD, bound: 0, key: String::new(), strategy: Strategy::ExplicitSum };
    match pattern.to_string().as_str() {
        "21-2" => cx.x_21_2::<F>()?.truncate_exact(order),
        "21-3" => cx.x_21_3::<F>()?.truncate_exact(order),
        k => Err(Error::Unsupported { pattern: k.to_string(), method: "kernel_root" }),
    }
}

/// `(1 - x) k(t; x)` at the kernel root; vanishes identically.
pub fn kernel_residual<F: Field>(pattern: &VincularPattern, order: usize) -> Result<Series<F>> {
    let cx = Cx { w: order + PAD, bound: 0, key: String::new(), strategy: Strategy::ExplicitSum };
    let one = cx.one::<F>();
    let t = cx.tp::<F>(1);
    let (x, tail) = match pattern.to_string().as_str() {
        "21-2" => (cx.x_21_2::<F>()?, cx.tp::<F>(2).div(&cx.p(&[1, -2]))?),
        "21-3" => {
            let x = cx.x_21_3::<F>()?;
            let tail = (&x * cx.tp::<F>(3)).div(&cx.p(&[1, -3, 2]))?;
            (x, tail)
        }
        k => return Err(Error::Unsupported { pattern: k.to_string(), method: "kernel_residual" }),
    };
    let r = (&one - &x) * (&one + tail) + &x * &x * t;
    r.truncate_exact(order)
}
