//! Fast exact counters: closed forms and refined recurrence tables.

mod base;
mod tables;

pub use base::{base, BaseName, BaseSequences, Binomials};
pub use tables::{Layer, RefinedTable};

use crate::words::VincularPattern;
use crate::{Count, Error, Result};

/// Patterns with a closed form.
pub const CLOSED_FORM_PATTERNS: [&str; 16] = [
    "1-12", "1-21", "1-23", "2-12", "3-12", "1-22", "1-32", "2-31", "12-1", "12-2", "12-3", "23-1", "22-1", "32-1",
    "2-13", "13-2",
];

/// Patterns with a refined recurrence.
pub const RECURRENCE_PATTERNS: [&str; 9] = ["2-21", "3-21", "21-2", "21-3", "31-2", "11-2", "21-1", "22-1", "32-1"];

/// `c_n(pattern)` from its closed form, or `None` if the pattern has none.
pub fn closed_form<T: Count>(pattern: &VincularPattern, n: usize) -> Option<T> {
    let key = pattern.to_string();
    if !CLOSED_FORM_PATTERNS.contains(&key.as_str()) || n == 0 {
        return None;
    }
    let b = BaseSequences::<T>::new(2 * n);
    Some(match key.as_str() {
        "1-12" | "1-21" | "1-23" | "12-1" | "12-3" => b.pow2(n - 1).clone(),
        "2-12" | "1-32" | "23-1" => b.fibonacci(2 * n - 1).clone(),
        "3-12" | "32-1" => (b.pow3(n - 1).clone() + T::one()) / T::from(2),
        "1-22" => b.motzkin(n).clone(),
        "2-31" | "22-1" => b.left_factor(n).clone(),
        "12-2" => T::from((n * (n - 1) / 2 + 1) as u64),
        "2-13" | "13-2" => b.catalan(n).clone(),
        _ => unreachable!("listed above"),
    })
}

/// The filled refined table for `1 <= n <= bound`.
pub fn refined_table<T: Count>(pattern: &VincularPattern, bound: usize) -> Result<RefinedTable<T>> {
    if bound == 0 {
        return Err(Error::Length { min: 1, got: 0 });
    }
    Ok(match pattern.to_string().as_str() {
        "2-21" => tables::max_last(pattern, bound, false),
        "3-21" => tables::max_last(pattern, bound, true),
        "21-2" => tables::last_letter(pattern, bound, false),
        "21-3" => tables::last_letter(pattern, bound, true),
        "31-2" => tables::ones_runs(pattern, bound),
        "11-2" => tables::eleven_two(pattern, bound),
        "21-1" => tables::twenty_one_one(pattern, bound),
        "22-1" => tables::twenty_two_one(pattern, bound),
        "32-1" => tables::thirty_two_one(pattern, bound),
        _ => return Err(Error::Unsupported { pattern: pattern.to_string(), method: "recurrence" }),
    })
}

/// `c_n(pattern)` from its recurrence.
pub fn count_by_recurrence<T: Count>(pattern: &VincularPattern, n: usize) -> Result<T> {
    Ok(refined_table::<T>(pattern, n)?.total(n).clone())
}

/// `c_1, ..., c_bound` from one table fill.
pub fn sequence_by_recurrence<T: Count>(pattern: &VincularPattern, bound: usize) -> Result<Vec<T>> {
    Ok(refined_table::<T>(pattern, bound)?.totals().to_vec())
}
