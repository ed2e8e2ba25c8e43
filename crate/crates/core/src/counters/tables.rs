//! Refined counting arrays filled bottom-up from their recurrences.

use super::base::{BaseSequences, Binomials};
use crate::words::VincularPattern;
use crate::Count;

/// A dense array over named integer indices. Reads outside the stored box,
/// including negative indices, return zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer<T> {
    name: &'static str,
    dims: Vec<&'static str>,
    shape: Vec<usize>,
    data: Vec<T>,
    zero: T,
}

impl<T: Count> Layer<T> {
    pub(crate) fn new(name: &'static str, dims: &[&'static str], shape: &[usize]) -> Self {
        assert_eq!(dims.len(), shape.len());
        let len = shape.iter().product();
        Layer { name, dims: dims.to_vec(), shape: shape.to_vec(), data: vec![T::zero(); len], zero: T::zero() }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dims(&self) -> &[&'static str] {
        &self.dims
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    fn offset(&self, idx: &[i64]) -> Option<usize> {
        assert_eq!(idx.len(), self.shape.len(), "layer {} has {} indices", self.name, self.shape.len());
        let mut off = 0;
        for (&i, &s) in idx.iter().zip(&self.shape) {
            if i < 0 || i as usize >= s {
                return None;
            }
            off = off * s + i as usize;
        }
        Some(off)
    }

    pub fn get(&self, idx: &[i64]) -> &T {
        self.offset(idx).map_or(&self.zero, |o| &self.data[o])
    }

    pub(crate) fn set(&mut self, idx: &[i64], value: T) {
        let o = self.offset(idx).expect("index inside the layer");
        self.data[o] = value;
    }

    /// Nonzero entries with their indices, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &T)> + '_ {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(mut o, v)| {
            let mut idx = vec![0; self.shape.len()];
            for k in (0..self.shape.len()).rev() {
                idx[k] = o % self.shape[k];
                o /= self.shape[k];
            }
            (idx, v)
        })
    }
}

/// The refined arrays behind one pattern's recurrence, filled for
/// `1 <= n <= bound`, with the per-length totals `c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTable<T> {
    pattern: VincularPattern,
    bound: usize,
    layers: Vec<Layer<T>>,
    totals: Vec<T>,
}

impl<T: Count> RefinedTable<T> {
    pub fn pattern(&self) -> &VincularPattern {
        &self.pattern
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn layers(&self) -> &[Layer<T>] {
        &self.layers
    }

    pub fn layer(&self, name: &str) -> Option<&Layer<T>> {
        self.layers.iter().find(|l| l.name == name)
    }

    /// Entry of the named layer; zero outside its domain.
    pub fn get(&self, layer: &str, idx: &[i64]) -> &T {
        self.layer(layer).unwrap_or_else(|| panic!("no layer {layer} for {}", self.pattern)).get(idx)
    }

    /// `c_n` for `1 <= n <= bound`.
    pub fn total(&self, n: usize) -> &T {
        &self.totals[n]
    }

    /// `c_1, ..., c_bound`.
    pub fn totals(&self) -> &[T] {
        &self.totals[1..]
    }
}

fn sum<T: Count>(items: impl Iterator<Item = T>) -> T {
    items.fold(T::zero(), |a, b| a + b)
}

fn one<T: Count>() -> T {
    T::one()
}

fn table<T: Count>(pattern: &VincularPattern, bound: usize, layers: Vec<Layer<T>>, totals: Vec<T>) -> RefinedTable<T> {
    debug_assert_eq!(totals.len(), bound + 1);
    RefinedTable { pattern: pattern.clone(), bound, layers, totals }
}

/// `u_n(m, a)` for 2-21 or, with `three_21` set, `v_n(m, a)` for 3-21:
/// avoiders with largest letter `m` and last letter `a`.
pub(crate) fn max_last<T: Count>(pattern: &VincularPattern, bound: usize, three_21: bool) -> RefinedTable<T> {
    let s = bound + 1;
    let name = if three_21 { "v" } else { "u" };
    let mut u = Layer::<T>::new(name, &["n", "m", "a"], &[s, s, s]);
    let b = bound as i64;
    for n in 1..=b {
        u.set(&[n, 1, 1], one());
    }
    if b >= 2 {
        u.set(&[2, 2, 2], one());
    }
    for n in 3..=b {
        for m in 2..=n {
            for a in 1..m {
                let third = if three_21 { u.get(&[n - 1, m, m]) } else { u.get(&[n - 2, m - 1, m - 1]) };
                let v = u.get(&[n - 1, m, a - 1]).clone() + u.get(&[n - 1, m, a]).clone() + third.clone();
                u.set(&[n, m, a], v);
            }
            let v = u.get(&[n - 1, m - 1, m - 1]).clone() + u.get(&[n - 1, m, m - 1]).clone() + u.get(&[n - 1, m, m]).clone();
            u.set(&[n, m, m], v);
        }
    }
    let mut totals = vec![T::zero()];
    for n in 1..=b {
        totals.push(sum((1..=n).flat_map(|m| (1..=m).map(move |a| (m, a))).map(|(m, a)| u.get(&[n, m, a]).clone())));
    }
    table(pattern, bound, vec![u], totals)
}

/// `u_n(a)` for 21-2 or `v_n(a)` for 21-3: avoiders ending in `a`.
pub(crate) fn last_letter<T: Count>(pattern: &VincularPattern, bound: usize, three: bool) -> RefinedTable<T> {
    let s = bound + 1;
    let b = bound as i64;
    let binom = Binomials::<T>::new(bound);
    let mut u = Layer::<T>::new(if three { "v" } else { "u" }, &["n", "a"], &[s, s]);
    if b >= 1 {
        u.set(&[1, 1], one());
    }
    for n in 2..=b {
        let first = sum((1..n).map(|j| u.get(&[n - 1, j]).clone()));
        u.set(&[n, 1], first);
        for a in 2..=n {
            let plus = sum((a - 1..n).map(|j| u.get(&[n - 1, j]).clone()));
            let minus = if three {
                sum((2..a).flat_map(|j| (j + 1..=n - a + 1).map(move |m| (j, m))).map(|(j, m)| {
                    binom.get(m - 2, j - 1).clone() * u.get(&[n - m, a - 1]).clone()
                }))
            } else {
                sum((1..a).flat_map(|j| (j + 1..=n - a).map(move |m| (j, m))).map(|(j, m)| {
                    binom.get(m - 2, j - 1).clone() * u.get(&[n - m, a]).clone()
                }))
            };
            assert!(plus >= minus, "negative count at n={n}, a={a}");
            u.set(&[n, a], plus - minus);
        }
    }
    let mut totals = vec![T::zero()];
    for n in 1..=b {
        totals.push(sum((1..=n).map(|a| u.get(&[n, a]).clone())));
    }
    table(pattern, bound, vec![u], totals)
}

/// `w_n(a, b)` for 31-2: avoiders with at least two distinct letters having
/// `a` ones in `b` runs of ones.
pub(crate) fn ones_runs<T: Count>(pattern: &VincularPattern, bound: usize) -> RefinedTable<T> {
    let s = bound + 1;
    let bb = bound as i64;
    let binom = Binomials::<T>::new(bound + 1);
    let mut w = Layer::<T>::new("w", &["n", "a", "b"], &[s, s, s]);
    if bb >= 2 {
        w.set(&[2, 1, 1], one());
    }
    for n in 3..=bb {
        for a in 1..n {
            for b in 1..=a {
                let lead = binom.get(a - 1, b - 1).clone();
                let mut v = lead.clone() * binom.get(n - a, b - 1).clone();
                for c in 1..n - a {
                    for d in 1..=c {
                        let x = w.get(&[n - a, c, d]);
                        if !x.is_zero() {
                            v = v + x.clone() * lead.clone() * binom.get(c - d + 1, b - 1).clone();
                        }
                    }
                }
                w.set(&[n, a, b], v);
            }
        }
    }
    let mut totals = vec![T::zero()];
    for n in 1..=bb {
        totals.push(one::<T>() + sum((1..n).flat_map(|a| (1..=a).map(move |b| (a, b))).map(|(a, b)| w.get(&[n, a, b]).clone())));
    }
    table(pattern, bound, vec![w], totals)
}

/// 11-2: `m_n(a)` (no-level Catalan words ending in `a`), `p_n(a, b)` (11-2
/// avoiding growth words over `[a]` starting with `b`) and `p_n(a)`.
pub(crate) fn eleven_two<T: Count>(pattern: &VincularPattern, bound: usize) -> RefinedTable<T> {
    let s = bound + 1;
    let nb = bound as i64;
    let motzkin = BaseSequences::<T>::new(bound);
    let mut m = Layer::<T>::new("m", &["n", "a"], &[s, s]);
    for n in 1..=nb {
        m.set(&[n, n], one());
        for a in 1..n {
            let v = m.get(&[n - 1, a - 1]).clone() + sum((a + 1..n).map(|i| m.get(&[n - 1, i]).clone()));
            m.set(&[n, a], v);
        }
    }
    let mut p = Layer::<T>::new("p", &["n", "a", "b"], &[s, s, s]);
    let mut ps = Layer::<T>::new("p_sum", &["n", "a"], &[s, s]);
    for a in 1..=nb {
        ps.set(&[0, a], one());
    }
    for n in 1..=nb {
        for a in 1..=nb {
            p.set(&[n, a, a], ps.get(&[n - 1, a]).clone());
            for b in 1..a {
                let v = if n == 1 {
                    one()
                } else {
                    p.get(&[n - 1, a, b + 1]).clone()
                        + ps.get(&[n - 2, b]).clone()
                        + sum((1..b).map(|i| p.get(&[n - 1, a, i]).clone()))
                };
                p.set(&[n, a, b], v);
            }
            let total = sum((1..=a).map(|b| p.get(&[n, a, b]).clone()));
            ps.set(&[n, a], total);
        }
    }
    let mut totals = vec![T::zero()];
    for n in 1..=nb {
        let rest = sum((1..n).flat_map(|i| (1..=i).map(move |j| (i, j))).map(|(i, j)| {
            m.get(&[i, j]).clone() * ps.get(&[n - i - 1, j]).clone()
        }));
        totals.push(motzkin.motzkin(n as usize - 1).clone() + rest);
    }
    table(pattern, bound, vec![m, p, ps], totals)
}

/// 21-1: `r_n(m, a)` (avoiders with a descent, largest letter `m`, smallest
/// descent bottom `a`) and `r_n(m)` (avoiders with largest letter `m`).
pub(crate) fn twenty_one_one<T: Count>(pattern: &VincularPattern, bound: usize) -> RefinedTable<T> {
    let s = bound + 1;
    let nb = bound as i64;
    let binom = Binomials::<T>::new(bound);
    let mut r = Layer::<T>::new("r", &["n", "m", "a"], &[s, s, s]);
    let mut rm = Layer::<T>::new("r_max", &["n", "m"], &[s, s]);
    for n in 1..=nb {
        if n == 3 {
            r.set(&[3, 2, 1], one());
        }
        if n >= 4 {
            for m in 2..n {
                for a in 2..m {
                    let v = sum((1..=n - m).map(|i| r.get(&[n - i, m - 1, a - 1]).clone()));
                    r.set(&[n, m, a], v);
                }
                let mut v = r.get(&[n - 1, m, 1]).clone() + rm.get(&[n - 2, m - 1]).clone();
                for i in 1..=m - 2 {
                    for j in i..=n - m - 1 {
                        v = v + binom.get(j - 1, i - 1).clone() * rm.get(&[n - j - 2, m - 1]).clone();
                    }
                }
                for i in 1..=m - 1 {
                    for j in m - 1..=n - i - 2 {
                        v = v + binom.get(j - 1, m - 2).clone() * rm.get(&[n - j - 2, i]).clone();
                    }
                }
                for i in 2..=m - 2 {
                    for j in m..=n - 3 {
                        let x = r.get(&[j, m - 1, i]);
                        if x.is_zero() {
                            continue;
                        }
                        let ell = (i - 1).min(n - j - 2);
                        v = v + x.clone() * sum((1..=ell).map(|k| rm.get(&[n - j - 2, k]).clone()));
                    }
                }
                r.set(&[n, m, 1], v);
            }
        }
        rm.set(&[n, n], one());
        for m in 1..n {
            let v = binom.get(n - 1, m - 1).clone() + sum((1..m).map(|a| r.get(&[n, m, a]).clone()));
            rm.set(&[n, m], v);
        }
    }
    let mut totals = vec![T::zero()];
    for n in 1..=nb {
        totals.push(sum((1..=n).map(|m| rm.get(&[n, m]).clone())));
    }
    table(pattern, bound, vec![r, rm], totals)
}

/// 22-1: `a_n = M_{n-1} + sum_{i=1}^{n-1} M_{i-1} a_{n-i}`.
pub(crate) fn twenty_two_one<T: Count>(pattern: &VincularPattern, bound: usize) -> RefinedTable<T> {
    let base = BaseSequences::<T>::new(bound);
    let mut a = Layer::<T>::new("a", &["n"], &[bound + 1]);
    for n in 1..=bound {
        let v = (1..n).fold(base.motzkin(n - 1).clone(), |acc, i| {
            acc + base.motzkin(i - 1).clone() * a.get(&[(n - i) as i64]).clone()
        });
        a.set(&[n as i64], v);
    }
    let totals = (0..=bound).map(|n| a.get(&[n as i64]).clone()).collect();
    table(pattern, bound, vec![a], totals)
}

/// 32-1: `b_n = 2 b_{n-1} + sum_{m=2}^{n-1} 2^{m-2} b_{n-m}` with `b_1 = 1`.
pub(crate) fn thirty_two_one<T: Count>(pattern: &VincularPattern, bound: usize) -> RefinedTable<T> {
    let base = BaseSequences::<T>::new(bound);
    let mut b = Layer::<T>::new("b", &["n"], &[bound + 1]);
    for n in 1..=bound as i64 {
        let v = if n == 1 {
            one()
        } else {
            let lead = b.get(&[n - 1]).clone() * T::from(2);
            (2..n).fold(lead, |acc, m| acc + base.pow2(m as usize - 2).clone() * b.get(&[n - m]).clone())
        };
        b.set(&[n], v);
    }
    let totals = (0..=bound).map(|n| b.get(&[n as i64]).clone()).collect();
    table(pattern, bound, vec![b], totals)
}
