//! Lattice paths and the constructive bijections between words and paths.

use std::fmt;
use std::str::FromStr;

use crate::words::{avoids_in, parse_pattern, CatalanWord};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H => 0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
            Step::H => 'h',
        }
    }
}

fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.trim()
        .chars()
        .map(|c| match c {
            'u' => Ok(Step::U),
            'd' => Ok(Step::D),
            'h' => Ok(Step::H),
            _ => Err(Error::InvalidPath(text.to_string())),
        })
        .collect()
}

fn format_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.symbol()).collect()
}

/// Whether the steps stay weakly above the axis and end on it.
fn is_excursion(steps: &[Step]) -> bool {
    let mut h = 0i64;
    for s in steps {
        h += s.delta();
        if h < 0 {
            return false;
        }
    }
    h == 0
}

/// Splits an excursion at its returns to the axis. A level step on the axis
/// forms a unit by itself.
pub fn units(steps: &[Step]) -> Vec<&[Step]> {
    let mut out = Vec::new();
    let mut h = 0i64;
    let mut start = 0;
    for (i, s) in steps.iter().enumerate() {
        h += s.delta();
        if h == 0 {
            out.push(&steps[start..=i]);
            start = i + 1;
        }
    }
    out
}

/// A Dyck path over `u` and `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.contains(&Step::H) || !is_excursion(&steps) {
            return Err(Error::InvalidPath(format_steps(&steps)));
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn contains_udu(&self) -> bool {
        self.0.windows(3).any(|w| w == [Step::U, Step::D, Step::U])
    }

    /// Whether every `udu` factor has both of its `u` steps ending at height one.
    pub fn is_star(&self) -> bool {
        let mut h = 0i64;
        for (i, s) in self.0.iter().enumerate() {
            if self.0[i..].starts_with(&[Step::U, Step::D, Step::U]) && h != 0 {
                return false;
            }
            h += s.delta();
        }
        true
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_steps(&self.0))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s)?)
    }
}

/// A Motzkin path over `u`, `d` and `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath(Vec<Step>);

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !is_excursion(&steps) {
            return Err(Error::InvalidPath(format_steps(&steps)));
        }
        Ok(MotzkinPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_steps(&self.0))
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MotzkinPath::new(parse_steps(s)?)
    }
}

/// All Dyck paths of semilength `n`, in lexicographic order with `u < d`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if ups < n {
            cur.push(Step::U);
            go(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::D);
            go(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// All Motzkin paths with `n` steps.
pub fn motzkin_paths(n: usize) -> Vec<MotzkinPath> {
    fn go(left: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
        if left == 0 {
            if h == 0 {
                out.push(MotzkinPath(cur.clone()));
            }
            return;
        }
        if h + 2 <= left {
            cur.push(Step::U);
            go(left - 1, h + 1, cur, out);
            cur.pop();
        }
        if h < left {
            cur.push(Step::H);
            go(left - 1, h, cur, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(Step::D);
            go(left - 1, h - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// The map sending a Catalan word to the Dyck path whose j-th up step ends
/// at height `w_j`.
pub fn word_to_dyck(word: &CatalanWord) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * word.len());
    let mut h = 0u32;
    for &x in word.letters() {
        steps.extend(std::iter::repeat_n(Step::D, (h + 1 - x) as usize));
        steps.push(Step::U);
        h = x;
    }
    steps.extend(std::iter::repeat_n(Step::D, h as usize));
    DyckPath(steps)
}

pub fn dyck_to_word(path: &DyckPath) -> Result<CatalanWord> {
    let mut h = 0u32;
    let mut letters = Vec::with_capacity(path.semilength());
    for s in path.steps() {
        match s {
            Step::U => {
                h += 1;
                letters.push(h);
            }
            Step::D => h -= 1,
            Step::H => unreachable!("Dyck paths have no level steps"),
        }
    }
    CatalanWord::new(letters).map_err(|_| Error::InvalidPath(path.to_string()))
}

fn alpha_steps(path: &[Step], out: &mut Vec<Step>) {
    let parts = units(path);
    let (last, init) = parts.split_last().expect("nonempty path");
    for unit in init {
        out.push(Step::U);
        alpha_steps(&unit[1..unit.len() - 1], out);
        out.push(Step::D);
    }
    if last.len() > 2 {
        out.push(Step::H);
        alpha_steps(&last[1..last.len() - 1], out);
    }
}

fn alpha_inv_steps(path: &[Step], out: &mut Vec<Step>) {
    let mut h = 0i64;
    let mut split = None;
    for (i, s) in path.iter().enumerate() {
        if h == 0 && *s == Step::H {
            split = Some(i);
            break;
        }
        h += s.delta();
    }
    let prefix = &path[..split.unwrap_or(path.len())];
    for unit in units(prefix) {
        out.push(Step::U);
        alpha_inv_steps(&unit[1..unit.len() - 1], out);
        out.push(Step::D);
    }
    out.push(Step::U);
    if let Some(p) = split {
        alpha_inv_steps(&path[p + 1..], out);
    }
    out.push(Step::D);
}

/// Bijection from Dyck paths of semilength `n` avoiding `udu` to Motzkin
/// paths with `n - 1` steps.
pub fn alpha(path: &DyckPath) -> Result<MotzkinPath> {
    if path.steps().is_empty() {
        return Err(Error::PathDomain { path: String::new(), reason: "empty path" });
    }
    if path.contains_udu() {
        return Err(Error::PathDomain { path: path.to_string(), reason: "contains udu" });
    }
    let mut out = Vec::with_capacity(path.semilength());
    alpha_steps(path.steps(), &mut out);
    Ok(MotzkinPath(out))
}

pub fn alpha_inv(path: &MotzkinPath) -> DyckPath {
    let mut out = Vec::with_capacity(2 * path.len() + 2);
    alpha_inv_steps(path.steps(), &mut out);
    DyckPath(out)
}

/// Bijection from Dyck paths whose `udu` factors all touch the axis to
/// Motzkin paths of the same size: a unit `ud` becomes `h`, any other unit
/// `u rho d` becomes `u alpha(rho) d`.
pub fn beta(path: &DyckPath) -> Result<MotzkinPath> {
    if !path.is_star() {
        return Err(Error::PathDomain { path: path.to_string(), reason: "udu factor above the axis" });
    }
    let mut out = Vec::with_capacity(path.semilength());
    for unit in units(path.steps()) {
        if unit.len() == 2 {
            out.push(Step::H);
        } else {
            out.push(Step::U);
            alpha_steps(&unit[1..unit.len() - 1], &mut out);
            out.push(Step::D);
        }
    }
    Ok(MotzkinPath(out))
}

pub fn beta_inv(path: &MotzkinPath) -> DyckPath {
    let mut out = Vec::with_capacity(2 * path.len());
    for unit in units(path.steps()) {
        if unit == [Step::H] {
            out.extend([Step::U, Step::D]);
        } else {
            out.push(Step::U);
            alpha_inv_steps(&unit[1..unit.len() - 1], &mut out);
            out.push(Step::D);
        }
    }
    DyckPath(out)
}

/// A weakly increasing Catalan word whose runs carry marks. The first run is
/// marked and no two adjacent runs are marked.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedWord {
    runs: Vec<usize>,
    marked: Vec<bool>,
}

impl MarkedWord {
    /// `runs[i]` is the length of the run of letter `i + 1`.
    pub fn new(runs: Vec<usize>, marked: Vec<bool>) -> Result<Self> {
        let fail = |reason: &str| Err(Error::Parse(format!("invalid marked word: {reason}")));
        if runs.is_empty() || runs.contains(&0) || runs.len() != marked.len() {
            return fail("run lengths");
        }
        if !marked[0] {
            return fail("first run must be marked");
        }
        if marked.windows(2).any(|w| w[0] && w[1]) {
            return fail("adjacent marked runs");
        }
        Ok(MarkedWord { runs, marked })
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    pub fn marked(&self) -> &[bool] {
        &self.marked
    }

    pub fn letters(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &len) in self.runs.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u32 + 1, len));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.runs.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&len, &m)) in self.runs.iter().zip(&self.marked).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let letter = crate::words::format_letters(&[i as u32 + 1]);
            for _ in 0..len {
                f.write_str(&letter)?;
            }
            if m {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MarkedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut runs = Vec::new();
        let mut marked = Vec::new();
        for (i, tok) in s.split_whitespace().enumerate() {
            let (body, m) = match tok.strip_suffix('*') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let want = char::from_digit(i as u32 + 1, 10);
            if body.is_empty() || want.is_none() || body.chars().any(|c| Some(c) != want) {
                return Err(Error::Parse(format!("invalid marked word: {s:?}")));
            }
            runs.push(body.len());
            marked.push(m);
        }
        MarkedWord::new(runs, marked)
    }
}

/// Shifts each marked section down so that it starts at 1.
pub fn omega_to_avoider(mw: &MarkedWord) -> CatalanWord {
    let mut out = Vec::with_capacity(mw.len());
    let mut shift = 0;
    for (i, (&len, &m)) in mw.runs.iter().zip(&mw.marked).enumerate() {
        let letter = i as u32 + 1;
        if m {
            shift = letter - 1;
        }
        out.extend(std::iter::repeat_n(letter - shift, len));
    }
    CatalanWord::from_vec_unchecked(out)
}

/// Run-length encoding as (letter, length) pairs.
fn run_lengths(w: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &x in w {
        match out.last_mut() {
            Some((y, len)) if *y == x => *len += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn move_run_letter(word: &CatalanWord, forward: bool) -> CatalanWord {
    let mut runs = run_lengths(word.letters());
    for value in 1..=word.max_letter() {
        let idx: Vec<usize> = (0..runs.len()).filter(|&i| runs[i].0 == value).collect();
        if idx.len() < 2 {
            continue;
        }
        let (from, to) = if forward {
            (idx[idx.len() - 1], idx[0])
        } else {
            (idx[0], idx[idx.len() - 1])
        };
        if runs[from].1 == 2 {
            runs[from].1 = 1;
            runs[to].1 += 1;
        }
    }
    let letters = runs.into_iter().flat_map(|(x, len)| std::iter::repeat_n(x, len)).collect();
    CatalanWord::from_vec_unchecked(letters)
}

/// For each letter, moves the second letter of its last run (if any) into its
/// first run. Maps avoiders of 11-1 onto avoiders of 1-11.
pub fn transfer_runs(word: &CatalanWord) -> Result<CatalanWord> {
    if !avoids_in(word.letters(), &parse_pattern("11-1").expect("literal")) {
        return Err(Error::WordDomain { word: word.to_string(), reason: "contains 11-1" });
    }
    Ok(move_run_letter(word, true))
}

pub fn transfer_runs_inv(word: &CatalanWord) -> Result<CatalanWord> {
    if !avoids_in(word.letters(), &parse_pattern("1-11").expect("literal")) {
        return Err(Error::WordDomain { word: word.to_string(), reason: "contains 1-11" });
    }
    Ok(move_run_letter(word, false))
}

/// Whether adjacent letters differ by at most one.
pub fn is_smooth(word: &CatalanWord) -> bool {
    word.letters().windows(2).all(|w| w[0].abs_diff(w[1]) <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::gen_catalan;
    use std::collections::HashSet;

    fn d(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn w(s: &str) -> CatalanWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_to_dyck_examples() {
        // u^4 d^3 u^2 d u d^2 u d^2
        let expected = ["uuuu", "ddd", "uu", "d", "u", "dd", "u", "dd"].concat();
        assert_eq!(word_to_dyck(&w("12342332")).to_string(), expected);
        assert_eq!(word_to_dyck(&w("1")).to_string(), "ud");
    }

    #[test]
    fn word_dyck_round_trip() {
        for n in 1..=8 {
            let mut seen = HashSet::new();
            for word in gen_catalan(n).unwrap() {
                let p = word_to_dyck(&word);
                assert_eq!(p.semilength(), n);
                let tail = p.steps().iter().rev().take_while(|&&s| s == Step::D).count();
                assert_eq!(tail as u32, word.last_letter());
                assert_eq!(dyck_to_word(&p).unwrap(), word);
                assert!(seen.insert(p));
            }
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&d("uuddud")).unwrap().to_string(), "ud");
        assert_eq!(alpha(&d("uuuddudd")).unwrap().to_string(), "hud");
        assert_eq!(alpha(&d("ud")).unwrap().to_string(), "");
        assert!(matches!(alpha(&d("udud")), Err(Error::PathDomain { .. })));
        assert_eq!(alpha_inv(&"hud".parse().unwrap()), d("uuuddudd"));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&d("ud")).unwrap().to_string(), "h");
        assert_eq!(beta(&d("udud")).unwrap().to_string(), "hh");
        assert_eq!(beta(&d("uudd")).unwrap().to_string(), "ud");
        assert_eq!(beta_inv(&"hh".parse().unwrap()), d("udud"));
        assert!(beta(&d("uududd")).is_err());
    }

    #[test]
    fn path_parsing_errors() {
        assert!("udd".parse::<DyckPath>().is_err());
        assert!("uhd".parse::<DyckPath>().is_err());
        assert!("ux".parse::<MotzkinPath>().is_err());
        assert!("du".parse::<MotzkinPath>().is_err());
    }

    #[test]
    fn marked_word_serialization() {
        let mw: MarkedWord = "11* 2 3*".parse().unwrap();
        assert_eq!(mw.runs(), &[2, 1, 1]);
        assert_eq!(mw.marked(), &[true, false, true]);
        assert_eq!(mw.to_string(), "11* 2 3*");
        assert_eq!(omega_to_avoider(&mw).to_string(), "1121");
        assert!("11 2*".parse::<MarkedWord>().is_err());
        assert!("1* 2*".parse::<MarkedWord>().is_err());
        assert!("1* 3".parse::<MarkedWord>().is_err());
        assert_eq!(omega_to_avoider(&"1111*".parse().unwrap()).to_string(), "1111");
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(transfer_runs(&w("1211")).unwrap().to_string(), "1121");
        assert!(matches!(transfer_runs(&w("1111")), Err(Error::WordDomain { .. })));
        assert_eq!(transfer_runs_inv(&w("1121")).unwrap().to_string(), "1211");
    }

    #[test]
    fn smooth_examples() {
        assert!(is_smooth(&w("1232")));
        assert!(!is_smooth(&w("1231")));
    }

    #[test]
    fn path_generators_count() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        let motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323];
        for n in 0..=8 {
            assert_eq!(dyck_paths(n).len(), catalan[n]);
            assert_eq!(motzkin_paths(n).len(), motzkin[n]);
        }
    }
}
