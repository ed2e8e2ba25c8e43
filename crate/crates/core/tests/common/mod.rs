//! Checks shared by the integration tests and the acceptance harness. Each
//! returns a short summary on success and the first discrepancy on failure.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use vincular::bijections::{
    alpha, alpha_inv, beta, beta_inv, dyck_paths, dyck_to_word, is_smooth, motzkin_paths, omega_to_avoider,
    transfer_runs, transfer_runs_inv, word_to_dyck,
};
use vincular::counters::{
    closed_form, refined_table, sequence_by_recurrence, BaseSequences, CLOSED_FORM_PATTERNS, RECURRENCE_PATTERNS,
};
use vincular::enumerate::{
    avoiders, count_avoiders, gen_catalan, gen_family, gen_marked_increasing, refined_counts, FamilySpec, StatKey,
};
use vincular::genfun::{
    aux_series, iterate_kernel, kernel_recipe, kernel_residual, sequence, AuxArg, GENFUN_PATTERNS, KERNEL_PATTERNS,
};
use vincular::golden::golden;
use vincular::{avoids, parse_pattern, CatalanWord, Int, QSeries, Rational, VincularPattern};

pub type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

pub fn p(s: &str) -> VincularPattern {
    parse_pattern(s).expect("pattern literal")
}

fn big(x: u64) -> Rational {
    Rational::from_integer(x.into())
}

/// Oracle counts `c_1..c_max_n`.
pub fn oracle(pattern: &VincularPattern, max_n: usize) -> Vec<u64> {
    (1..=max_n).map(|n| count_avoiders(n, pattern).expect("n >= 1")).collect()
}

/// Every table row recomputed by brute force.
pub fn tables_reproduced() -> Check {
    let g = golden();
    for row in &g.rows {
        let got = oracle(&row.pattern, row.values.len());
        ensure!(got == row.values, "table {} row {}: oracle {:?} vs {:?}", row.table, row.pattern, got, row.values);
    }
    Ok(format!("{} rows x n=1..10", g.rows.len()))
}

/// Every available fast method against the oracle, `n <= max_n`.
pub fn three_way(max_n: usize) -> Check {
    let mut multi = 0;
    for pattern in golden().patterns() {
        let key = pattern.to_string();
        let want = oracle(pattern, max_n);
        let mut methods: Vec<(&str, Vec<u64>)> = Vec::new();
        if CLOSED_FORM_PATTERNS.contains(&key.as_str()) {
            methods.push(("closed", (1..=max_n).map(|n| closed_form(pattern, n).unwrap()).collect()));
        }
        if RECURRENCE_PATTERNS.contains(&key.as_str()) {
            methods.push(("recurrence", sequence_by_recurrence(pattern, max_n).map_err(|e| e.to_string())?));
        }
        if GENFUN_PATTERNS.contains(&key.as_str()) {
            methods.push(("genfun", sequence::<Rational, u64>(pattern, max_n).map_err(|e| e.to_string())?));
        }
        if KERNEL_PATTERNS.contains(&key.as_str()) {
            let r = kernel_recipe(pattern, max_n).map_err(|e| e.to_string())?;
            let s: QSeries = iterate_kernel(&r).map_err(|e| e.to_string())?;
            let coeffs = s.to_integers().map_err(|e| e.to_string())?;
            methods.push(("kernel", coeffs[1..].iter().map(|c| u64::try_from(c).unwrap()).collect()));
        }
        for (name, got) in &methods {
            ensure!(got == &want, "{key}: {name} {got:?} vs oracle {want:?}");
        }
        if methods.len() >= 2 {
            multi += 1;
        }
    }
    Ok(format!("{multi} patterns with two or more methods, n=1..{max_n}"))
}

/// The 21-1 series through `t^20`, by the recursion and by the recurrence.
pub fn series_21_1() -> Check {
    let want = &golden().series_21_1;
    ensure!(want.len() == 20 && want[19] == 237152119, "fixture has {} coefficients", want.len());
    let gf = sequence::<Rational, u64>(&p("21-1"), 20).map_err(|e| e.to_string())?;
    ensure!(&gf == want, "genfun {gf:?}");
    let rec = sequence_by_recurrence::<u64>(&p("21-1"), 20).map_err(|e| e.to_string())?;
    ensure!(&rec == want, "recurrence {rec:?}");
    Ok("20 coefficients".into())
}

fn nonzero<K: Ord + Clone>(m: &BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    m.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (k.clone(), *v)).collect()
}

fn family_count(n: usize, spec: FamilySpec) -> u64 {
    gen_family(n, spec).expect("valid family").count() as u64
}

/// Every refined array against grouped oracle counts, `n <= max_n`.
pub fn refined_tables(max_n: usize) -> Check {
    let nb = max_n as i64;
    let mut checked = 0usize;
    for (key, layer) in [("2-21", "u"), ("3-21", "v")] {
        let t = refined_table::<u64>(&p(key), max_n).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let want = refined_counts(n, &p(key), &[StatKey::MaxLetter, StatKey::LastLetter]).unwrap();
            let mut got = BTreeMap::new();
            for m in 1..=nb {
                for a in 1..=m {
                    got.insert(vec![m as u32, a as u32], *t.get(layer, &[n as i64, m, a]));
                }
            }
            ensure!(nonzero(&got) == want, "{key} {layer}_{n}(m, a)");
            checked += got.len();
        }
    }
    for (key, layer) in [("21-2", "u"), ("21-3", "v")] {
        let t = refined_table::<u64>(&p(key), max_n).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let want = refined_counts(n, &p(key), &[StatKey::LastLetter]).unwrap();
            let got: BTreeMap<Vec<u32>, u64> =
                (1..=nb).map(|a| (vec![a as u32], *t.get(layer, &[n as i64, a]))).collect();
            ensure!(nonzero(&got) == want, "{key} {layer}_{n}(a)");
            checked += got.len();
        }
    }
    let w = refined_table::<u64>(&p("31-2"), max_n).map_err(|e| e.to_string())?;
    for n in 1..=max_n {
        let raw = refined_counts(n, &p("31-2"), &[StatKey::MaxLetter, StatKey::OnesCount, StatKey::OneRuns]).unwrap();
        let mut want = BTreeMap::new();
        for (k, v) in raw.iter().filter(|(k, _)| k[0] >= 2) {
            *want.entry(vec![k[1], k[2]]).or_insert(0) += v;
        }
        let mut got = BTreeMap::new();
        for a in 1..=nb {
            for b in 1..=a {
                got.insert(vec![a as u32, b as u32], *w.get("w", &[n as i64, a, b]));
            }
        }
        ensure!(nonzero(&got) == want, "31-2 w_{n}(a, b)");
        checked += got.len();
    }
    let r = refined_table::<u64>(&p("21-1"), max_n).map_err(|e| e.to_string())?;
    ensure!(*r.get("r", &[6, 4, 2]) == 7, "r_6(4, 2) = {}", r.get("r", &[6, 4, 2]));
    for n in 1..=max_n {
        let raw = refined_counts(n, &p("21-1"), &[StatKey::MaxLetter, StatKey::SmallestDescentBottom]).unwrap();
        let mut want_r = BTreeMap::new();
        let mut want_max = BTreeMap::new();
        for (k, v) in &raw {
            if k[1] > 0 {
                want_r.insert(k.clone(), *v);
            }
            *want_max.entry(k[0]).or_insert(0) += v;
        }
        let mut got_r = BTreeMap::new();
        let mut got_max = BTreeMap::new();
        for m in 1..=nb {
            got_max.insert(m as u32, *r.get("r_max", &[n as i64, m]));
            for a in 1..=m {
                got_r.insert(vec![m as u32, a as u32], *r.get("r", &[n as i64, m, a]));
            }
        }
        ensure!(nonzero(&got_r) == want_r, "21-1 r_{n}(m, a)");
        ensure!(nonzero(&got_max) == want_max, "21-1 r_{n}(m)");
        checked += got_r.len() + got_max.len();
    }
    let e = refined_table::<u64>(&p("11-2"), max_n).map_err(|e| e.to_string())?;
    for n in 1..=max_n {
        for a in 1..=max_n as u32 {
            let want = family_count(n, FamilySpec::over(max_n as u32).no_levels().starting_with(1).ending_in(a));
            let got = *e.get("m", &[n as i64, a as i64]);
            ensure!(got == want, "m_{n}({a}) = {got}, oracle {want}");
            let mut sum = 0;
            for b in 1..=a {
                let want = family_count(n, FamilySpec::over(a).starting_with(b).avoiding(p("11-2")));
                let got = *e.get("p", &[n as i64, a as i64, b as i64]);
                ensure!(got == want, "p_{n}({a}, {b}) = {got}, oracle {want}");
                sum += want;
            }
            ensure!(*e.get("p_sum", &[n as i64, a as i64]) == sum, "p_{n}({a})");
            checked += a as usize + 2;
        }
    }
    Ok(format!("{checked} entries, n=1..{max_n}, r_6(4,2)=7"))
}

fn set<T: Ord>(it: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    it.into_iter().collect()
}

/// Round trips and images of every bijection on its full domain.
pub fn bijections(max_n: usize, max_path: usize) -> Check {
    let motzkin = BaseSequences::<u64>::new(max_n + 1);
    for n in 1..=max_n {
        let words: Vec<CatalanWord> = gen_catalan(n).unwrap().collect();
        let mut paths = BTreeSet::new();
        for w in &words {
            let d = word_to_dyck(w);
            ensure!(dyck_to_word(&d).as_ref() == Ok(w), "iota round trip at {w}");
            paths.insert(d);
            ensure!(is_smooth(w) == avoids(w, &p("2-31")), "smoothness at {w}");
        }
        ensure!(paths.len() == words.len(), "iota not injective at n={n}");

        let from = set(avoiders(n, &p("11-1")).unwrap());
        let to = set(avoiders(n, &p("1-11")).unwrap());
        let mut image = BTreeSet::new();
        for w in &from {
            let v = transfer_runs(w).map_err(|e| e.to_string())?;
            ensure!(transfer_runs_inv(&v).as_ref() == Ok(w), "transfer_runs round trip at {w}");
            image.insert(v);
        }
        ensure!(image == to, "transfer_runs image at n={n}");
        for w in &to {
            let v = transfer_runs_inv(w).map_err(|e| e.to_string())?;
            ensure!(transfer_runs(&v).as_ref() == Ok(w), "transfer_runs_inv round trip at {w}");
        }

        let marked = gen_marked_increasing(n).unwrap();
        let omega = set(marked.iter().map(omega_to_avoider));
        let fib = *BaseSequences::<u64>::new(2 * n).fibonacci(2 * n - 1);
        ensure!(omega.len() == marked.len(), "omega not injective at n={n}");
        ensure!(omega.len() as u64 == fib, "|omega image| = {} at n={n}", omega.len());
        ensure!(omega == set(avoiders(n, &p("1-32")).unwrap()), "omega image at n={n}");
    }
    for n in 1..=max_path {
        let all = dyck_paths(n);
        let no_level = set(gen_catalan(n).unwrap().filter(|w| avoids(w, &p("11"))).map(|w| word_to_dyck(&w)));
        let udu_free: BTreeSet<_> = all.iter().filter(|d| !d.contains_udu()).cloned().collect();
        ensure!(no_level == udu_free, "no-level words vs udu-free paths at n={n}");
        let one22 = set(avoiders(n, &p("1-22")).unwrap().iter().map(word_to_dyck));
        let star: BTreeSet<_> = all.iter().filter(|d| d.is_star()).cloned().collect();
        ensure!(one22 == star, "1-22 avoiders vs starred paths at n={n}");

        let m_prev = set(motzkin_paths(n - 1));
        ensure!(udu_free.len() as u64 == *motzkin.motzkin(n - 1), "alpha domain size at n={n}");
        let mut image = BTreeSet::new();
        for d in &udu_free {
            let m = alpha(d).map_err(|e| e.to_string())?;
            ensure!(&alpha_inv(&m) == d, "alpha round trip at {d}");
            image.insert(m);
        }
        ensure!(image == m_prev, "alpha image at n={n}");

        let m_cur = set(motzkin_paths(n));
        ensure!(star.len() as u64 == *motzkin.motzkin(n), "beta domain size at n={n}");
        let mut image = BTreeSet::new();
        for d in &star {
            let m = beta(d).map_err(|e| e.to_string())?;
            ensure!(&beta_inv(&m) == d, "beta round trip at {d}");
            image.insert(m);
        }
        ensure!(image == m_cur, "beta image at n={n}");
    }
    Ok(format!("words n<={max_n}, paths n<={max_path}"))
}

fn unit_series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-20i64..=20, order + 1).prop_map(move |mut c| {
        c[0] = 1;
        QSeries::from_ints(&c, order)
    })
}

/// Randomized square-root and division round trips plus the fixed
/// identities of the Motzkin and kernel series.
pub fn series_properties(cases: u32) -> Check {
    let order = 32;
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let pair = (unit_series(order), prop::collection::vec(-20i64..=20, order + 1));
    runner
        .run(&pair, |(f, g)| {
            let root = f.sqrt().unwrap();
            prop_assert_eq!(&root * &root, f.clone());
            let g = QSeries::from_ints(&g, order);
            prop_assert_eq!((&g * &f).div(&f).unwrap(), g.clone());
            prop_assert_eq!(g.div(&f).unwrap() * &f, g);
            Ok(())
        })
        .map_err(|e| format!("series property: {e}"))?;

    let m = aux_series::<Rational>("MotzkinGF", AuxArg::None, 30).map_err(|e| e.to_string())?;
    let mut rec = vec![1u64, 1];
    for n in 2..=30 {
        rec.push(rec[n - 1] + (0..n - 1).map(|k| rec[k] * rec[n - 2 - k]).sum::<u64>());
    }
    for (n, r) in rec.iter().enumerate() {
        ensure!(m.coeff(n) == big(*r), "Motzkin coefficient {n}: {} vs {r}", m.coeff(n));
    }

    let t_ = aux_series::<Rational>("T", AuxArg::None, 24).map_err(|e| e.to_string())?;
    let t = QSeries::t(24);
    ensure!(&t * &t_ * &t_ == QSeries::from_ints(&[1, 1], 24) * (&t_ - QSeries::one(24)), "tT^2 = (1+t)(T-1)");
    for key in ["21-2", "21-3"] {
        let r = kernel_residual::<Rational>(&p(key), 24).map_err(|e| e.to_string())?;
        ensure!(r.order() == 24 && r.is_zero(), "kernel residual for {key}: {r}");
    }
    Ok(format!("{cases} random cases at order {order}; Motzkin to 30; kernels to 24"))
}

/// Vincular/classical equivalences, the 11-1/1-11 refinement, and run-length
/// reversal.
pub fn equivalences(max_n: usize) -> Check {
    let nine = ["1-12", "1-21", "1-23", "2-12", "3-12", "12-1", "12-2", "12-3", "23-1"];
    for key in nine {
        let v = p(key);
        ensure!(oracle(&v, max_n) == oracle(&v.classical(), max_n), "{key} vs {}", v.classical());
    }
    let keys = [StatKey::MaxLetter, StatKey::LastLetter];
    for n in 1..=max_n {
        let a = refined_counts(n, &p("11-1"), &keys).unwrap();
        let b = refined_counts(n, &p("1-11"), &keys).unwrap();
        ensure!(a == b, "11-1 vs 1-11 by (max, last) at n={n}");
    }
    for (x, y) in [("1-11", "11-1"), ("1-1-1", "1-1-1"), ("1-111", "111-1"), ("1-1-11", "11-1-1"), ("1-11-111", "111-11-1")] {
        ensure!(oracle(&p(x), max_n) == oracle(&p(y), max_n), "{x} vs {y}");
    }
    Ok(format!("9 equivalences, refinement and 5 reversal pairs, n=1..{max_n}"))
}

/// Cross-checks of the auxiliary series against enumerated families.
pub fn auxiliary_families(order: usize) -> Check {
    let aux = |name: &str, m: usize| aux_series::<Rational>(name, AuxArg::Index(m), order).map_err(|e| e.to_string());
    for m in 1..=6u32 {
        let h = aux("H", m as usize)?;
        let j = aux("J", m as usize)?;
        let q = aux("Q", m as usize)?;
        let g = aux("G", m as usize + 1)?;
        let k = aux("K", m as usize + 1)?;
        let pm = aux("P2_11", m as usize)?;
        ensure!(j.coeff(0) == big(1), "J_{m} constant term");
        for n in 1..=order {
            let fam = |spec: FamilySpec| big(family_count(n, spec));
            let base = FamilySpec::over(m).no_levels();
            ensure!(h.coeff(n) == fam(base.clone().ending_in(m)), "H_{m} at t^{n}");
            ensure!(j.coeff(n) == fam(base.clone()), "J_{m} at t^{n}");
            ensure!(g.coeff(n) == fam(base.clone().starting_with(1).ending_in(m)), "G_{} at t^{n}", m + 1);
            let with_max =
                gen_family(n, base.clone().starting_with(1)).unwrap().filter(|w| w.iter().max() == Some(&m)).count();
            ensure!(q.coeff(n) == big(with_max as u64), "Q_{m} at t^{n}");
            let two11 = FamilySpec::over(m).starting_with(1).avoiding(p("2-11"));
            ensure!(k.coeff(n) == fam(two11.clone().ending_in(m)), "K_{} at t^{n}", m + 1);
            let with_max = gen_family(n, two11).unwrap().filter(|w| w.iter().max() == Some(&m)).count();
            ensure!(pm.coeff(n) == big(with_max as u64), "P_{m} at t^{n}");
        }
    }
    Ok(format!("H, J, G, Q, K, P for m<=6 through t^{order}"))
}

/// `M(t; v)` and `P(t; v, 1)` at `v = t^B`: the coefficient of `t^k` is
/// `sum_a x_{k - B(a-1)}(a)` over the matching 11-2 array.
pub fn bivariate_series(stride: usize, order: usize) -> Check {
    let v = QSeries::monomial(stride, big(1), order);
    let mv = aux_series::<Rational>("Mv", AuxArg::Var(v.clone()), order).map_err(|e| e.to_string())?;
    let pv = aux_series::<Rational>("Pv", AuxArg::Var(v), order).map_err(|e| e.to_string())?;
    let e = refined_table::<Int>(&p("11-2"), order).map_err(|e| e.to_string())?;
    let q = |x: Int| Rational::from_integer(x.into());
    for k in 0..=order {
        let cells = || (1..=k / stride + 1).map(|a| ((k - stride * (a - 1)) as i64, a as i64));
        let m: Int = cells().map(|(n, a)| e.get("m", &[n, a])).sum();
        ensure!(mv.coeff(k) == q(m.clone()), "M(t; t^{stride}) at t^{k}: {} vs {m}", mv.coeff(k));
        let ps: Int = cells().filter(|(n, _)| *n >= 1).map(|(n, a)| e.get("p_sum", &[n, a])).sum();
        ensure!(pv.coeff(k) == q(ps.clone()), "P(t; t^{stride}, 1) at t^{k}: {} vs {ps}", pv.coeff(k));
    }
    Ok(format!("v = t^{stride} through t^{order}"))
}
