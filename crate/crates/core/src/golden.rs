//! Published reference values, compiled in from `data/golden.txt`.

use std::sync::OnceLock;

use crate::words::{parse_pattern, VincularPattern};

const RAW: &str = include_str!("../data/golden.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    /// 1 for patterns of the form x-yz, 2 for xy-z.
    pub table: u8,
    pub pattern: VincularPattern,
    /// `c_1, c_2, ...`
    pub values: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct Golden {
    pub rows: Vec<GoldenRow>,
    /// Coefficients of `t^1..=t^20` in the 21-1 generating function.
    pub series_21_1: Vec<u64>,
}

impl Golden {
    pub fn row(&self, pattern: &str) -> Option<&GoldenRow> {
        self.rows.iter().find(|r| r.pattern.to_string() == pattern)
    }

    pub fn patterns(&self) -> impl Iterator<Item = &VincularPattern> {
        self.rows.iter().map(|r| &r.pattern)
    }
}

fn parse(raw: &str) -> Golden {
    let mut rows = Vec::new();
    let mut series = Vec::new();
    for line in raw.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), 3, "malformed golden line {line:?}");
        let pattern = parse_pattern(fields[1]).expect("golden pattern");
        let values: Vec<u64> = fields[2].split(',').map(|v| v.parse().expect("golden value")).collect();
        match fields[0] {
            "s" => series = values,
            t => rows.push(GoldenRow { table: t.parse().expect("table number"), pattern, values }),
        }
    }
    Golden { rows, series_21_1: series }
}

pub fn golden() -> &'static Golden {
    static CELL: OnceLock<Golden> = OnceLock::new();
    CELL.get_or_init(|| parse(RAW))
}
