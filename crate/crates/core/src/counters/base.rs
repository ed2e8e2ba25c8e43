//! Catalan, Motzkin, Motzkin left-factor and Fibonacci numbers, powers, and a
//! cached Pascal triangle.

use std::str::FromStr;

use crate::{Count, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseName {
    Catalan,
    Motzkin,
    LeftFactor,
    Fibonacci,
    Pow2,
    Pow3,
}

impl FromStr for BaseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "catalan" => BaseName::Catalan,
            "motzkin" => BaseName::Motzkin,
            "left_factor" => BaseName::LeftFactor,
            "fibonacci" => BaseName::Fibonacci,
            "pow2" => BaseName::Pow2,
            "pow3" => BaseName::Pow3,
            _ => return Err(Error::UnknownSequence(s.to_string())),
        })
    }
}

/// The base sequences tabulated for indices `0..=bound`.
#[derive(Clone, Debug)]
pub struct BaseSequences<T> {
    catalan: Vec<T>,
    motzkin: Vec<T>,
    left_factor: Vec<T>,
    fibonacci: Vec<T>,
    pow2: Vec<T>,
    pow3: Vec<T>,
}

fn int<T: Count>(x: u64) -> T {
    T::from(x)
}

impl<T: Count> BaseSequences<T> {
    pub fn new(bound: usize) -> Self {
        let mut catalan: Vec<T> = vec![T::one()];
        let mut motzkin: Vec<T> = vec![T::one()];
        let mut left_factor: Vec<T> = vec![T::one()];
        let mut fibonacci: Vec<T> = vec![T::zero(), T::one()];
        let mut pow2: Vec<T> = vec![T::one()];
        let mut pow3: Vec<T> = vec![T::one()];
        for n in 1..=bound {
            let c = (0..n).fold(T::zero(), |acc, k| acc + catalan[k].clone() * catalan[n - 1 - k].clone());
            catalan.push(c);
            let m = (0..n.saturating_sub(1))
                .fold(motzkin[n - 1].clone(), |acc, k| acc + motzkin[k].clone() * motzkin[n - 2 - k].clone());
            motzkin.push(m);
            let l = (1..n).fold(motzkin[n - 1].clone(), |acc, i| acc + motzkin[i - 1].clone() * left_factor[n - i].clone());
            left_factor.push(l);
            if n >= 2 {
                fibonacci.push(fibonacci[n - 1].clone() + fibonacci[n - 2].clone());
            }
            pow2.push(pow2[n - 1].clone() * int(2));
            pow3.push(pow3[n - 1].clone() * int(3));
        }
        fibonacci.truncate(bound + 1);
        BaseSequences { catalan, motzkin, left_factor, fibonacci, pow2, pow3 }
    }

    pub fn bound(&self) -> usize {
        self.catalan.len() - 1
    }

    pub fn get(&self, name: BaseName, n: usize) -> &T {
        let seq = match name {
            BaseName::Catalan => &self.catalan,
            BaseName::Motzkin => &self.motzkin,
            BaseName::LeftFactor => &self.left_factor,
            BaseName::Fibonacci => &self.fibonacci,
            BaseName::Pow2 => &self.pow2,
            BaseName::Pow3 => &self.pow3,
        };
        &seq[n]
    }

    pub fn catalan(&self, n: usize) -> &T {
        &self.catalan[n]
    }

    pub fn motzkin(&self, n: usize) -> &T {
        &self.motzkin[n]
    }

    pub fn left_factor(&self, n: usize) -> &T {
        &self.left_factor[n]
    }

    pub fn fibonacci(&self, n: usize) -> &T {
        &self.fibonacci[n]
    }

    pub fn pow2(&self, n: usize) -> &T {
        &self.pow2[n]
    }

    pub fn pow3(&self, n: usize) -> &T {
        &self.pow3[n]
    }
}

/// Value of a named base sequence at `n`.
pub fn base<T: Count>(name: &str, n: usize) -> Result<T> {
    let name: BaseName = name.parse()?;
    Ok(BaseSequences::<T>::new(n.max(1)).get(name, n).clone())
}

/// Pascal triangle up to a fixed row.
#[derive(Clone, Debug)]
pub struct Binomials<T> {
    rows: Vec<Vec<T>>,
    zero: T,
}

impl<T: Count> Binomials<T> {
    pub fn new(bound: usize) -> Self {
        let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
        for x in 1..=bound {
            let prev = &rows[x - 1];
            let row = (0..=x)
                .map(|y| {
                    let left = if y > 0 { prev[y - 1].clone() } else { T::zero() };
                    let right = prev.get(y).cloned().unwrap_or_else(T::zero);
                    left + right
                })
                .collect();
            rows.push(row);
        }
        Binomials { rows, zero: T::zero() }
    }

    /// `binom(x, y)`, zero unless `0 <= y <= x`.
    pub fn get(&self, x: i64, y: i64) -> &T {
        if x < 0 || y < 0 || y > x {
            return &self.zero;
        }
        &self.rows.get(x as usize).expect("binomial table too small")[y as usize]
    }
}
