//! Catalan words, vincular patterns and the general occurrence matcher.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Returns true iff `letters` is a nonempty Catalan word: it starts with 1,
/// every letter is positive and no letter exceeds its predecessor by more
/// than one.
pub fn validate_catalan(letters: &[i64]) -> bool {
    match letters.first() {
        Some(1) => letters.windows(2).all(|w| w[1] >= 1 && w[1] <= w[0] + 1),
        _ => false,
    }
}

/// A validated Catalan word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalanWord(Vec<u32>);

impl CatalanWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let ok = letters.first() == Some(&1)
            && letters.windows(2).all(|w| w[1] >= 1 && w[1] <= w[0] + 1);
        if ok {
            Ok(CatalanWord(letters))
        } else {
            Err(Error::InvalidWord(format_letters(&letters)))
        }
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(CatalanWord::new(letters.clone()).is_ok());
        CatalanWord(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn last_letter(&self) -> u32 {
        *self.0.last().expect("Catalan words are nonempty")
    }
}

impl AsRef<[u32]> for CatalanWord {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for CatalanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl FromStr for CatalanWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalanWord::new(parse_letters(s)?)
    }
}

/// Serializes letters as a digit string when every letter is at most 9,
/// otherwise as comma-separated integers.
pub fn format_letters(letters: &[u32]) -> String {
    if letters.iter().all(|&x| x <= 9) {
        letters.iter().map(|x| char::from(b'0' + *x as u8)).collect()
    } else {
        letters.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Inverse of [`format_letters`].
pub fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a word: {s:?}"));
    if s.contains(',') {
        s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

/// A pattern split into dash-separated sections. Letters within a section
/// must be matched by adjacent letters of the host word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VincularPattern {
    sections: Vec<Vec<u8>>,
    flat: Vec<u8>,
    alphabet: u8,
}

impl VincularPattern {
    pub fn new(sections: Vec<Vec<u8>>) -> Result<Self> {
        let text = sections
            .iter()
            .map(|s| s.iter().map(|d| d.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("-");
        if sections.is_empty() || sections.iter().any(Vec::is_empty) {
            return Err(Error::PatternSyntax { text, reason: "empty section".into() });
        }
        let flat: Vec<u8> = sections.iter().flatten().copied().collect();
        if flat.iter().any(|&d| !(1..=9).contains(&d)) {
            return Err(Error::PatternSyntax { text, reason: "letters must lie in 1..=9".into() });
        }
        let alphabet = *flat.iter().max().expect("nonempty");
        if let Some(missing) = (1..=alphabet).find(|d| !flat.contains(d)) {
            return Err(Error::PatternAlphabet { text, max: alphabet, missing });
        }
        Ok(VincularPattern { sections, flat, alphabet })
    }

    pub fn sections(&self) -> &[Vec<u8>] {
        &self.sections
    }

    /// Pattern letters with the dashes removed.
    pub fn letters(&self) -> &[u8] {
        &self.flat
    }

    pub fn len(&self) -> usize {
        self.flat.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet
    }

    /// Section lengths, e.g. `(2,1,2)` for `12-3-21`.
    pub fn kind(&self) -> Vec<usize> {
        self.sections.iter().map(Vec::len).collect()
    }

    /// The same letters with every adjacency requirement dropped.
    pub fn classical(&self) -> Self {
        VincularPattern::new(self.flat.iter().map(|&d| vec![d]).collect()).expect("same letters")
    }

    /// The same letters as one consecutive block.
    pub fn consecutive(&self) -> Self {
        VincularPattern::new(vec![self.flat.clone()]).expect("same letters")
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            for d in section {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

/// Parses `section ("-" section)*` where a section is one or more digits 1-9.
pub fn parse_pattern(text: &str) -> Result<VincularPattern> {
    let syntax = |reason: &str| Error::PatternSyntax { text: text.to_string(), reason: reason.into() };
    let mut sections = Vec::new();
    for part in text.split('-') {
        if part.is_empty() {
            return Err(syntax("empty section"));
        }
        let mut section = Vec::with_capacity(part.len());
        for c in part.chars() {
            match c {
                '1'..='9' => section.push(c as u8 - b'0'),
                _ => return Err(syntax(&format!("unexpected character {c:?}"))),
            }
        }
        sections.push(section);
    }
    VincularPattern::new(sections)
}

/// Positions (1-based) of the word letters that realize a pattern occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    indices: Vec<usize>,
}

impl Occurrence {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The letters of `word` selected by this occurrence.
    pub fn subsequence(&self, word: &[u32]) -> Vec<u32> {
        self.indices.iter().map(|&i| word[i - 1]).collect()
    }

    /// Checks every defining property against a word and pattern.
    pub fn is_valid_for(&self, word: &[u32], pattern: &VincularPattern) -> bool {
        let idx = &self.indices;
        if idx.len() != pattern.len() || idx.iter().any(|&i| i == 0 || i > word.len()) {
            return false;
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        let mut p = 0;
        for section in pattern.sections() {
            if idx[p..p + section.len()].windows(2).any(|w| w[1] != w[0] + 1) {
                return false;
            }
            p += section.len();
        }
        let vals = self.subsequence(word);
        let flat = pattern.letters();
        (0..flat.len()).all(|j| (0..flat.len()).all(|k| vals[j].cmp(&vals[k]) == flat[j].cmp(&flat[k])))
    }
}

/// Searches `word` for an occurrence of `pattern`.
///
/// Works on any positive integer sequence, not only Catalan words. The search
/// places each section at every admissible start position in turn and checks
/// order-isomorphism against all earlier letters as soon as a letter is
/// placed.
pub fn find_in(word: &[u32], pattern: &VincularPattern) -> Option<Occurrence> {
    let mut chosen = Vec::with_capacity(pattern.len());
    if place(word, pattern, 0, 0, &mut chosen) {
        Some(Occurrence { indices: chosen.into_iter().map(|i| i + 1).collect() })
    } else {
        None
    }
}

fn place(word: &[u32], pattern: &VincularPattern, section: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
    let sections = pattern.sections();
    if section == sections.len() {
        return true;
    }
    let len = sections[section].len();
    // Letters still to be placed after this section bound the start position.
    let rest: usize = sections[section + 1..].iter().map(Vec::len).sum();
    let flat = pattern.letters();
    if word.len() < from + len + rest {
        return false;
    }
    for start in from..=word.len() - len - rest {
        let base = chosen.len();
        let mut ok = true;
        for off in 0..len {
            let p = base + off;
            let value = word[start + off];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(q, &i)| value.cmp(&word[i]) == flat[p].cmp(&flat[q]));
            if !consistent {
                ok = false;
                break;
            }
            chosen.push(start + off);
        }
        if ok && place(word, pattern, section + 1, start + len, chosen) {
            return true;
        }
        chosen.truncate(base);
    }
    false
}

pub fn find_occurrence(word: &CatalanWord, pattern: &VincularPattern) -> Option<Occurrence> {
    find_in(word.letters(), pattern)
}

pub fn avoids(word: &CatalanWord, pattern: &VincularPattern) -> bool {
    find_in(word.letters(), pattern).is_none()
}

/// Avoidance test on an arbitrary letter sequence.
pub fn avoids_in(word: &[u32], pattern: &VincularPattern) -> bool {
    find_in(word, pattern).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CatalanWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    /// Plain classical containment: any index triple, no adjacency.
    fn classical_contains(word: &[u32], pat: &[u8]) -> bool {
        let n = word.len();
        let m = pat.len();
        let mut idx: Vec<usize> = (0..m).collect();
        if n < m {
            return false;
        }
        loop {
            let iso = (0..m).all(|j| (0..m).all(|k| word[idx[j]].cmp(&word[idx[k]]) == pat[j].cmp(&pat[k])));
            if iso {
                return true;
            }
            let mut i = m;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < n - m + i {
                    idx[i] += 1;
                    for k in i + 1..m {
                        idx[k] = idx[k - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn window_contains(word: &[u32], pat: &[u8]) -> bool {
        let m = pat.len();
        word.windows(m).any(|win| (0..m).all(|j| (0..m).all(|k| win[j].cmp(&win[k]) == pat[j].cmp(&pat[k]))))
    }

    fn all_three_letter_patterns() -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for a in 1..=3u8 {
            for b in 1..=3u8 {
                for c in 1..=3u8 {
                    let v = vec![a, b, c];
                    let max = *v.iter().max().unwrap();
                    if (1..=max).all(|d| v.contains(&d)) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn validate_examples() {
        assert!(validate_catalan(&[1, 1, 2, 1]));
        assert!(!validate_catalan(&[1, 1, 3, 1]));
        assert!(!validate_catalan(&[2, 1, 1]));
        assert!(!validate_catalan(&[]));
        assert!(!validate_catalan(&[1, 0]));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("2-21").sections(), &[vec![2], vec![2, 1]]);
        let q = p("12-3-21");
        assert_eq!(q.sections(), &[vec![1, 2], vec![3], vec![2, 1]]);
        assert_eq!(q.kind(), vec![2, 1, 2]);
        assert!(matches!(parse_pattern("1-3"), Err(Error::PatternAlphabet { missing: 2, .. })));
        assert!(matches!(parse_pattern("1--2"), Err(Error::PatternSyntax { .. })));
        assert!(matches!(parse_pattern("1-a"), Err(Error::PatternSyntax { .. })));
        assert!(matches!(parse_pattern(""), Err(Error::PatternSyntax { .. })));
        assert!(matches!(parse_pattern("0-1"), Err(Error::PatternSyntax { .. })));
        assert_eq!(p("12-3-21").to_string(), "12-3-21");
    }

    #[test]
    fn occurrence_examples() {
        let word: Vec<u32> = parse_letters("123411232").unwrap();
        let occ = find_in(&word, &p("12-3-21")).unwrap();
        assert_eq!(format_letters(&occ.subsequence(&word)), "23432");
        assert!(occ.is_valid_for(&word, &p("12-3-21")));
        assert!(find_in(&word, &p("13-2")).is_none());
        // Classical 132 is present even though 13-2 is not.
        assert!(find_in(&word, &p("1-3-2")).is_some());

        let occ = find_occurrence(&w("111"), &p("1-11")).unwrap();
        assert_eq!(occ.indices(), &[1, 2, 3]);
    }

    #[test]
    fn avoids_examples() {
        assert!(!avoids(&w("1231"), &p("2-31")));
        assert!(avoids(&w("1234"), &p("2-13")));
        for pat in all_three_letter_patterns() {
            let pat = VincularPattern::new(vec![pat]).unwrap();
            assert!(avoids(&w("1"), &pat));
        }
    }

    #[test]
    fn word_serialization() {
        assert_eq!(w("12342332").to_string(), "12342332");
        let long: Vec<u32> = (1..=11).collect();
        let word = CatalanWord::new(long.clone()).unwrap();
        assert_eq!(word.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(word.to_string().parse::<CatalanWord>().unwrap().letters(), &long[..]);
        assert!("1131".parse::<CatalanWord>().is_err());
    }

    /// Every word over [4] of length up to 7 (not only Catalan ones).
    fn small_sequences() -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..7 {
            let mut next = Vec::new();
            for s in &frontier {
                for x in 1..=4u32 {
                    let mut t: Vec<u32> = s.clone();
                    t.push(x);
                    next.push(t);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn singleton_sections_agree_with_classical_matcher() {
        let words = small_sequences();
        for pat in all_three_letter_patterns() {
            let vp = VincularPattern::new(pat.iter().map(|&d| vec![d]).collect()).unwrap();
            for word in &words {
                assert_eq!(find_in(word, &vp).is_some(), classical_contains(word, &pat), "{vp} in {word:?}");
            }
        }
    }

    #[test]
    fn single_section_agrees_with_window_matcher() {
        let words = small_sequences();
        for pat in all_three_letter_patterns() {
            let vp = VincularPattern::new(vec![pat.clone()]).unwrap();
            for word in &words {
                assert_eq!(find_in(word, &vp).is_some(), window_contains(word, &pat), "{vp} in {word:?}");
            }
        }
    }

    #[test]
    fn witnesses_satisfy_occurrence_invariants() {
        let words = small_sequences();
        for pat in all_three_letter_patterns() {
            for splits in [vec![1, 2], vec![2, 1]] {
                let vp = VincularPattern::new(vec![pat[..splits[0]].to_vec(), pat[splits[0]..].to_vec()]).unwrap();
                for word in &words {
                    if let Some(occ) = find_in(word, &vp) {
                        assert!(occ.is_valid_for(word, &vp), "{vp} in {word:?}: {occ:?}");
                        assert!(classical_contains(word, &pat));
                    }
                }
            }
        }
    }
}
