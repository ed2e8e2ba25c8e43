//! Chebyshev-type sequences of series, normalized so that no half powers of
//! `t` appear.
//!
//! `V` satisfies `V_0 = V_1 = 1`, `V_n = V_{n-1} - q V_{n-2}` with
//! `q = t/(1+t)`. The pair `(alpha, beta)` shares the recurrence
//! `x_{n+2} = (1-t) x_{n+1} - t^2 x_n` with starts `(1, 1)` and `(1, 1-t)`.

use super::Series;
use crate::{Field, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    V,
    AB,
}

/// Memoized terms of one of the sequences at a fixed truncation order.
#[derive(Clone, Debug)]
pub struct ChebStream<F> {
    kind: ChebKind,
    order: usize,
    first: Vec<Series<F>>,
    second: Vec<Series<F>>,
    /// Recurrence coefficients: `x_{n+2} = a x_{n+1} + b x_n`.
    a: Series<F>,
    b: Series<F>,
}

impl<F: Field> ChebStream<F> {
    pub fn new(kind: ChebKind, order: usize) -> Result<Self> {
        let one = Series::<F>::one(order);
        let t = Series::<F>::t(order);
        Ok(match kind {
            ChebKind::V => {
                let q = t.div(&(&one + &t))?;
                ChebStream { kind, order, first: vec![one.clone(), one.clone()], second: Vec::new(), a: one, b: -q }
            }
            ChebKind::AB => {
                let a = &one - &t;
                ChebStream {
                    kind,
                    order,
                    first: vec![one.clone(), one.clone()],
                    second: vec![one, a.clone()],
                    b: -(&t * &t),
                    a,
                }
            }
        })
    }

    pub fn kind(&self) -> ChebKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn extend(seq: &mut Vec<Series<F>>, n: usize, a: &Series<F>, b: &Series<F>) {
        while seq.len() <= n {
            let k = seq.len();
            let next = a * &seq[k - 1] + b * &seq[k - 2];
            seq.push(next);
        }
    }

    /// `V_n`, or `alpha_n` for the pair sequence.
    pub fn value(&mut self, n: usize) -> &Series<F> {
        Self::extend(&mut self.first, n, &self.a, &self.b);
        &self.first[n]
    }

    /// `(alpha_n, beta_n)`; for `V` both entries are `V_n`.
    pub fn pair(&mut self, n: usize) -> (Series<F>, Series<F>) {
        let first = self.value(n).clone();
        if self.kind == ChebKind::V {
            return (first.clone(), first);
        }
        Self::extend(&mut self.second, n, &self.a, &self.b);
        (first, self.second[n].clone())
    }
}

pub fn cheb_v<F: Field>(n: usize, order: usize) -> Result<Series<F>> {
    Ok(ChebStream::new(ChebKind::V, order)?.value(n).clone())
}

pub fn cheb_ab<F: Field>(n: usize, order: usize) -> Result<(Series<F>, Series<F>)> {
    Ok(ChebStream::new(ChebKind::AB, order)?.pair(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = Series<BigRational>;

    fn q(c: &[i64], order: usize) -> Q {
        Series::from_ints(c, order)
    }

    #[test]
    fn v_examples() {
        let n = 12;
        let v2: Q = cheb_v(2, n).unwrap();
        assert_eq!(v2, Q::one(n).div(&q(&[1, 1], n)).unwrap());
        assert_eq!(cheb_v::<BigRational>(0, n).unwrap(), Q::one(n));
        assert_eq!(cheb_v::<BigRational>(1, n).unwrap(), Q::one(n));
    }

    #[test]
    fn ab_examples() {
        let n = 10;
        let (a2, b2): (Q, Q) = cheb_ab(2, n).unwrap();
        assert_eq!(a2, q(&[1, -1, -1], n));
        assert_eq!(b2, q(&[1, -2], n));
        assert_eq!(cheb_ab::<BigRational>(1, n).unwrap().1, q(&[1, -1], n));
    }

    #[test]
    fn ab_identities() {
        let n = 24;
        let mut s = ChebStream::<BigRational>::new(ChebKind::AB, n).unwrap();
        let t = Q::t(n);
        let c = q(&[1, -1, -1], n);
        let d = &t * q(&[1, -1], n);
        for j in 0..=20 {
            let (aj, bj) = s.pair(j);
            let (_, bj1) = s.pair(j + 1);
            let (_, bj2) = s.pair(j + 2);
            assert_eq!(bj1, &bj - &t * &aj, "j={j}");
            assert_eq!(bj2, &c * &bj - &d * &aj, "j={j}");
        }
    }

    #[test]
    fn h_from_v_satisfies_rational_recurrence() {
        let n = 24;
        let one = Q::one(n);
        let t = Q::t(n);
        let qq = t.div(&(&one + &t)).unwrap();
        let mut v = ChebStream::<BigRational>::new(ChebKind::V, n).unwrap();
        let h = |m: usize, v: &mut ChebStream<BigRational>| (&qq * v.value(m - 1)).div(&v.value(m + 1).clone()).unwrap();
        let mut prev = h(1, &mut v);
        assert_eq!(prev, t);
        for m in 2..=12 {
            let hm = h(m, &mut v);
            let rhs = (&t * (&one + &prev)).div(&(&one - &t * &prev)).unwrap();
            assert_eq!(hm, rhs, "m={m}");
            prev = hm;
        }
    }
}
