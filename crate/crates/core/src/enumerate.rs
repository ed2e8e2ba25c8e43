//! Exhaustive generation of Catalan words and related word families, word
//! statistics, and the brute-force counting oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bijections::MarkedWord;
use crate::words::{avoids_in, CatalanWord, VincularPattern};
use crate::{Error, Result};

/// Lexicographic stream of the Catalan words of a fixed length.
#[derive(Clone, Debug)]
pub struct CatalanWords {
    word: Vec<u32>,
    fresh: bool,
}

impl Iterator for CatalanWords {
    type Item = CatalanWord;

    fn next(&mut self) -> Option<CatalanWord> {
        if self.word.is_empty() {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(CatalanWord::from_vec_unchecked(self.word.clone()));
        }
        let w = &mut self.word;
        let mut i = w.len() - 1;
        while i > 0 && w[i] > w[i - 1] {
            i -= 1;
        }
        if i == 0 {
            w.clear();
            return None;
        }
        w[i] += 1;
        for x in &mut w[i + 1..] {
            *x = 1;
        }
        Some(CatalanWord::from_vec_unchecked(w.clone()))
    }
}

/// All Catalan words of length `n` in lexicographic order.
pub fn gen_catalan(n: usize) -> Result<CatalanWords> {
    if n == 0 {
        return Err(Error::Length { min: 1, got: 0 });
    }
    Ok(CatalanWords { word: vec![1; n], fresh: true })
}

/// Constraints describing a family of growth words `w_{i+1} <= w_i + 1`.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub alphabet_bound: u32,
    pub forbid_levels: bool,
    pub required_last: Option<u32>,
    pub required_first: Option<u32>,
    pub avoid: Option<VincularPattern>,
    pub allow_empty: bool,
}

impl FamilySpec {
    /// Growth words over `[a]` with no further constraint.
    pub fn over(a: u32) -> Self {
        FamilySpec {
            alphabet_bound: a,
            forbid_levels: false,
            required_last: None,
            required_first: None,
            avoid: None,
            allow_empty: false,
        }
    }

    pub fn no_levels(mut self) -> Self {
        self.forbid_levels = true;
        self
    }

    pub fn ending_in(mut self, last: u32) -> Self {
        self.required_last = Some(last);
        self
    }

    pub fn starting_with(mut self, first: u32) -> Self {
        self.required_first = Some(first);
        self
    }

    pub fn avoiding(mut self, pattern: VincularPattern) -> Self {
        self.avoid = Some(pattern);
        self
    }

    pub fn with_empty(mut self) -> Self {
        self.allow_empty = true;
        self
    }

    fn check(&self) -> Result<()> {
        let a = self.alphabet_bound;
        let bad = |what: &str| Err(Error::FamilySpec(what.to_string()));
        if a == 0 {
            return bad("alphabet bound must be at least 1");
        }
        match (self.required_first, self.required_last) {
            (Some(x), _) if x == 0 || x > a => bad("required first letter outside the alphabet"),
            (_, Some(x)) if x == 0 || x > a => bad("required last letter outside the alphabet"),
            _ => Ok(()),
        }
    }
}

/// Lexicographic depth-first stream over a [`FamilySpec`].
#[derive(Clone, Debug)]
pub struct FamilyWords {
    n: usize,
    spec: FamilySpec,
    word: Vec<u32>,
    started: bool,
    done: bool,
}

impl FamilyWords {
    /// Smallest admissible letter at the next position that exceeds `after`.
    fn next_letter(&self, after: u32) -> Option<u32> {
        let spec = &self.spec;
        let (lo, hi) = match self.word.last() {
            None => match spec.required_first {
                Some(x) => (x, x),
                None => (1, spec.alphabet_bound),
            },
            Some(&prev) => (1, (prev + 1).min(spec.alphabet_bound)),
        };
        let prev = self.word.last().copied();
        (lo.max(after + 1)..=hi).find(|&x| !(spec.forbid_levels && Some(x) == prev))
    }

    fn accept(&self) -> bool {
        if self.word.is_empty() && !self.spec.allow_empty {
            return false;
        }
        if let Some(last) = self.spec.required_last {
            if self.word.last().is_some_and(|&x| x != last) {
                return false;
            }
        }
        match &self.spec.avoid {
            Some(p) => avoids_in(&self.word, p),
            None => true,
        }
    }
}

impl Iterator for FamilyWords {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let mut backtrack = self.started;
        self.started = true;
        loop {
            if backtrack {
                match self.word.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(c) => {
                        if let Some(x) = self.next_letter(c) {
                            self.word.push(x);
                            backtrack = false;
                        }
                    }
                }
            } else if self.word.len() == self.n {
                if self.accept() {
                    return Some(self.word.clone());
                }
                backtrack = true;
            } else {
                match self.next_letter(0) {
                    Some(x) => self.word.push(x),
                    None => backtrack = true,
                }
            }
        }
    }
}

/// Words of length `n` over `[a]` obeying the growth rule and the constraints
/// in `spec`. The first letter is free unless `required_first` is set.
pub fn gen_family(n: usize, spec: FamilySpec) -> Result<FamilyWords> {
    spec.check()?;
    if n == 0 && !spec.allow_empty {
        return Err(Error::Length { min: 1, got: 0 });
    }
    Ok(FamilyWords { n, spec, word: Vec::with_capacity(n), started: false, done: false })
}

/// The set of marked weakly increasing words of length `n`: the first run is
/// marked and no two adjacent runs are both marked.
pub fn gen_marked_increasing(n: usize) -> Result<Vec<MarkedWord>> {
    if n == 0 {
        return Err(Error::Length { min: 1, got: 0 });
    }
    let mut out = Vec::new();
    // Bit i of `cuts` set means a new run starts after position i + 1.
    for cuts in 0u64..(1u64 << (n - 1)) {
        let mut runs = Vec::new();
        let mut len = 1;
        for i in 0..n - 1 {
            if cuts >> i & 1 == 1 {
                runs.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        runs.push(len);
        let k = runs.len();
        // The remaining k - 1 runs carry marks with no two adjacent and the
        // second run unmarked.
        for marks in 0u64..(1u64 << (k - 1)) {
            let mut marked = vec![true];
            marked.extend((0..k - 1).map(|i| marks >> i & 1 == 1));
            if marked.windows(2).any(|w| w[0] && w[1]) {
                continue;
            }
            out.push(MarkedWord::new(runs.clone(), marked).expect("constructed valid"));
        }
    }
    Ok(out)
}

/// Word statistics used as refinement parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statistics {
    pub max_letter: u32,
    pub last_letter: u32,
    pub ones_count: u32,
    pub one_runs: u32,
    pub has_level: bool,
    /// 1-based position `i` of the first level `w_i = w_{i+1}`.
    pub first_level_index: Option<u32>,
    pub descent_count: u32,
    pub smallest_descent_bottom: Option<u32>,
    pub descent_tops: Vec<u32>,
}

pub fn stats(word: &CatalanWord) -> Statistics {
    let w = word.letters();
    let mut s = Statistics {
        max_letter: 0,
        last_letter: word.last_letter(),
        ones_count: 0,
        one_runs: 0,
        has_level: false,
        first_level_index: None,
        descent_count: 0,
        smallest_descent_bottom: None,
        descent_tops: Vec::new(),
    };
    for (i, &x) in w.iter().enumerate() {
        s.max_letter = s.max_letter.max(x);
        if x == 1 {
            s.ones_count += 1;
            if i == 0 || w[i - 1] != 1 {
                s.one_runs += 1;
            }
        }
        if i > 0 {
            let prev = w[i - 1];
            if prev == x && s.first_level_index.is_none() {
                s.has_level = true;
                s.first_level_index = Some(i as u32);
            }
            if prev > x {
                s.descent_count += 1;
                s.descent_tops.push(prev);
                s.smallest_descent_bottom = Some(s.smallest_descent_bottom.map_or(x, |b| b.min(x)));
            }
        }
    }
    s
}

/// A scalar statistic usable as a grouping key. Absent optional values are
/// reported as 0 and booleans as 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKey {
    MaxLetter,
    LastLetter,
    OnesCount,
    OneRuns,
    HasLevel,
    FirstLevelIndex,
    DescentCount,
    SmallestDescentBottom,
}

impl StatKey {
    pub fn of(self, s: &Statistics) -> u32 {
        match self {
            StatKey::MaxLetter => s.max_letter,
            StatKey::LastLetter => s.last_letter,
            StatKey::OnesCount => s.ones_count,
            StatKey::OneRuns => s.one_runs,
            StatKey::HasLevel => u32::from(s.has_level),
            StatKey::FirstLevelIndex => s.first_level_index.unwrap_or(0),
            StatKey::DescentCount => s.descent_count,
            StatKey::SmallestDescentBottom => s.smallest_descent_bottom.unwrap_or(0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StatKey::MaxLetter => "max",
            StatKey::LastLetter => "last",
            StatKey::OnesCount => "ones",
            StatKey::OneRuns => "one_runs",
            StatKey::HasLevel => "has_level",
            StatKey::FirstLevelIndex => "first_level_index",
            StatKey::DescentCount => "descents",
            StatKey::SmallestDescentBottom => "smallest_descent_bottom",
        }
    }
}

impl fmt::Display for StatKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "max" | "max_letter" => StatKey::MaxLetter,
            "last" | "last_letter" => StatKey::LastLetter,
            "ones" | "ones_count" => StatKey::OnesCount,
            "one_runs" => StatKey::OneRuns,
            "has_level" => StatKey::HasLevel,
            "first_level_index" => StatKey::FirstLevelIndex,
            "descents" | "descent_count" => StatKey::DescentCount,
            "smallest_descent_bottom" | "bottom" => StatKey::SmallestDescentBottom,
            _ => return Err(Error::UnknownStatistic(s.to_string())),
        })
    }
}

/// `|C_n(pattern)|` by filtering every Catalan word through the matcher.
pub fn count_avoiders(n: usize, pattern: &VincularPattern) -> Result<u64> {
    Ok(gen_catalan(n)?.par_bridge().filter(|w| avoids_in(w.letters(), pattern)).count() as u64)
}

/// The avoiders of length `n`, in lexicographic order.
pub fn avoiders(n: usize, pattern: &VincularPattern) -> Result<Vec<CatalanWord>> {
    Ok(gen_catalan(n)?.filter(|w| avoids_in(w.letters(), pattern)).collect())
}

/// Avoiders of length `n` grouped by the tuple of the given statistics.
pub fn refined_counts(n: usize, pattern: &VincularPattern, keys: &[StatKey]) -> Result<BTreeMap<Vec<u32>, u64>> {
    let mut out = BTreeMap::new();
    for w in gen_catalan(n)?.filter(|w| avoids_in(w.letters(), pattern)) {
        let s = stats(&w);
        *out.entry(keys.iter().map(|k| k.of(&s)).collect()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Parses a comma-separated list of statistic names.
pub fn parse_keys(text: &str) -> Result<Vec<StatKey>> {
    text.split(',').map(|k| k.trim().parse()).collect()
}
