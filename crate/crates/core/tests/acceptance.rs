//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rpl_core::invset::{
    act_word_set, associated_monotone, decompose, enumerate_invariant_sets, equivalent, gamma,
    reassemble, InvariantSet,
};
use rpl_core::oracle::{cross_check_parking, run_suite, shifting_words, SuiteParams};
use rpl_core::pak_stanley::{
    detect_affine_period, sorted_sequence, sp_forward, sp_invert_sorted, Variant,
};
use rpl_core::weyl::{act_word, enumerate_sommers_windows, find_fixed_point_default, WeylPoint};
use rpl_core::words::{enumerate_dyck_words, enumerate_parking_words};
use rpl_core::{Execution, ParkingWord};

type Check = std::result::Result<(), String>;

/// Name, check and optional runtime limit in seconds.
type Criterion = (&'static str, fn() -> Check, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn word(text: &str, m: usize) -> ParkingWord {
    ParkingWord::parse(text, m).unwrap()
}

fn set(min: i64, gaps: &[i64]) -> InvariantSet {
    InvariantSet::new(min, gaps.to_vec()).unwrap()
}

fn pt(xs: &[i64]) -> WeylPoint {
    WeylPoint::from_integers(xs.to_vec()).unwrap()
}

fn compact(words: impl IntoIterator<Item = ParkingWord>) -> BTreeSet<String> {
    words.into_iter().map(|w| w.to_compact().unwrap()).collect()
}

fn sorted_chars(s: &str) -> String {
    let mut c: Vec<char> = s.chars().collect();
    c.sort_unstable();
    c.into_iter().collect()
}

const PF_COLUMNS: [&[&str]; 5] = [
    &["000"],
    &["001", "010", "100"],
    &["002", "020", "200"],
    &["011", "101", "110"],
    &["012", "021", "102", "120", "201", "210"],
];

fn c1() -> Check {
    let listed: BTreeSet<String> = PF_COLUMNS
        .iter()
        .flat_map(|c| c.iter().map(|s| s.to_string()))
        .collect();
    let got = compact(enumerate_parking_words(4, 3).unwrap());
    ensure!(got == listed, "parking words {got:?}");
    let dyck = compact(
        enumerate_dyck_words(4, 3)
            .unwrap()
            .into_iter()
            .map(|d| d.word().clone()),
    );
    ensure!(dyck.len() == 5, "{} Dyck words", dyck.len());
    for col in PF_COLUMNS {
        let hits = dyck.iter().filter(|d| col.contains(&d.as_str())).count();
        ensure!(hits == 1, "column {:?} holds {hits} Dyck words", col[0]);
        ensure!(
            col.iter().all(|w| sorted_chars(w) == sorted_chars(col[0])),
            "column mixes classes"
        );
    }
    Ok(())
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c2() -> Check {
    for (m, n) in [(2, 3), (3, 2), (3, 4), (4, 3), (3, 5), (5, 3), (5, 2)] {
        let pf = enumerate_parking_words(m, n).unwrap().len() as u64;
        ensure!(pf == (m as u64).pow(n as u32 - 1), "|PF({m},{n})| = {pf}");
        let dyck = enumerate_dyck_words(m, n).unwrap().len() as u64;
        let k = (m + n) as u64;
        ensure!(dyck == binom(k, n as u64) / k, "Dyck({m},{n}) = {dyck}");
    }
    Ok(())
}

fn c3() -> Check {
    for (m, n) in [(3, 4), (4, 3), (3, 5)] {
        let r = cross_check_parking(m, n, Execution::default()).unwrap();
        ensure!(
            r.cases == m.pow(n as u32),
            "({m},{n}) checked {} words",
            r.cases
        );
        ensure!(r.passed(), "({m},{n}): {} discrepancies", r.failures.len());
    }
    Ok(())
}

fn c4() -> Check {
    let w = word("2100", 3);
    let r = find_fixed_point_default(&w);
    ensure!(
        r.is_fixed_point() && r.terminal == pt(&[-4, 0, 4]),
        "fixed point {}",
        r.terminal
    );
    let b = act_word(&pt(&[-4, 1, 3]), &w).unwrap().0;
    ensure!(b == pt(&[-3, -1, 4]), "w·a = {b}");
    let c = act_word(&b, &w).unwrap().0;
    ensure!(c == pt(&[-4, 0, 4]), "w·b = {c}");
    Ok(())
}

fn c5() -> Check {
    let d = set(0, &[1, 2, 4]);
    let (out, removed) = act_word_set(&d, &word("103", 5)).unwrap();
    ensure!(removed == vec![7, 0, 5], "removed {removed:?}");
    ensure!(out == d.shifted(3), "result {out}");
    Ok(())
}

fn c6() -> Check {
    let a = associated_monotone(&set(0, &[1, 2, 4]), 3, 5).unwrap();
    ensure!(a.to_compact().unwrap() == "11100", "got {a}");
    let b = associated_monotone(&set(0, &[1, 2, 3, 7]), 4, 6).unwrap();
    ensure!(b.to_compact().unwrap() == "311000", "got {b}");
    let grid = vec![(4, 3), (3, 4), (3, 5), (2, 5)];
    let r = run_suite(
        "monotone-uniqueness",
        &SuiteParams::new(grid),
        Execution::default(),
    )
    .unwrap();
    ensure!(r.passed(), "{:?}", r.failures.first());
    Ok(())
}

fn c7() -> Check {
    // every pair, including the monotone one, over the same grid
    let grid = vec![(4, 3), (3, 4), (3, 5), (2, 5)];
    let r = run_suite(
        "skeleton-union",
        &SuiteParams::new(grid),
        Execution::default(),
    )
    .unwrap();
    ensure!(r.passed(), "{:?}", r.failures.first());
    Ok(())
}

fn c8() -> Check {
    let d = set(0, &[1, 2, 3, 5, 7, 11]);
    let e = set(0, &[1, 2, 3, 5, 7, 9, 13]);
    let (gd, ge) = (gamma(&d, 6, 4).unwrap(), gamma(&e, 6, 4).unwrap());
    ensure!(gd == ge, "paths {} and {}", gd.word(), ge.word());
    for (m, n) in [(4, 3), (3, 4), (3, 5), (2, 5), (5, 3)] {
        let sets = enumerate_invariant_sets(m, n).unwrap();
        let mut images = BTreeSet::new();
        for s in &sets {
            let g = gamma(s, m, n).unwrap();
            let a = associated_monotone(s, m, n).unwrap();
            ensure!(*g.word() == a, "({m},{n}) {s}: rows {} vs {a}", g.word());
            images.insert(g.word().clone());
        }
        let dyck: BTreeSet<ParkingWord> = enumerate_dyck_words(m, n)
            .unwrap()
            .into_iter()
            .map(|p| p.word().clone())
            .collect();
        ensure!(images.len() == sets.len(), "({m},{n}) not injective");
        ensure!(images == dyck, "({m},{n}) not onto");
    }
    Ok(())
}

fn c9() -> Check {
    for suite in [
        "fixed-cycle-structure",
        "alcove-identity",
        "absorption",
        "unit-gap-facet",
    ] {
        let params = SuiteParams::new(vec![(3, 4), (4, 3)]);
        let r = run_suite(suite, &params, Execution::default()).unwrap();
        ensure!(r.cases == 27 + 16, "{suite}: {} cases", r.cases);
        ensure!(r.passed(), "{suite}: {:?}", r.failures.first());
    }
    Ok(())
}

fn c10() -> Check {
    let p = word("10002", 3);
    let inv = sp_invert_sorted(&p).unwrap();
    ensure!(
        inv.v[..10] == [2, 0, 1, 3, 5, 8, 4, 6, 7, 10],
        "V = {:?}",
        &inv.v[..10]
    );
    let v = sorted_sequence(&p, 40).unwrap();
    ensure!(
        (15..35).all(|i| v[i + 5] == v[i] + 5),
        "not periodic from 15"
    );
    let at15: Vec<i64> = v[15..20].iter().map(|x| x - 15).collect();
    ensure!(inv.period_start <= 15, "detected N = {}", inv.period_start);
    ensure!(at15 == inv.window.window(), "window at 15 is {at15:?}");
    ensure!(
        detect_affine_period(
            &inv.states.iter().step_by(5).cloned().collect::<Vec<_>>(),
            5
        ) == Some(inv.period_start),
        "period detection"
    );
    ensure!(inv.window.window().iter().sum::<i64>() == 10, "window sum");
    ensure!(
        sp_forward(&inv.window, 3, Variant::Inversions).as_ref() == Ok(&p),
        "round trip"
    );
    let r = run_suite(
        "placement-agreement",
        &SuiteParams::new(vec![(3, 4), (4, 3), (3, 5)]),
        Execution::default(),
    )
    .unwrap();
    ensure!(
        r.cases == 27 + 16 + 81 && r.passed(),
        "{:?}",
        r.failures.first()
    );
    let windows = enumerate_sommers_windows(4, 3).unwrap();
    ensure!(windows.len() == 16, "{} windows", windows.len());
    let images: BTreeSet<ParkingWord> = windows
        .iter()
        .map(|w| sp_forward(w, 4, Variant::Inversions).unwrap())
        .collect();
    let pf: BTreeSet<ParkingWord> = enumerate_parking_words(4, 3).unwrap().into_iter().collect();
    ensure!(images == pf, "SP image differs from PF");
    Ok(())
}

const SOMMERS_LABELS: [[i64; 3]; 16] = [
    [4, -1, 3],
    [-1, 3, 4],
    [-1, 4, 3],
    [0, 4, 2],
    [3, 1, 2],
    [1, 3, 2],
    [1, 2, 3],
    [0, 2, 4],
    [2, 0, 4],
    [-2, 2, 6],
    [3, 2, 1],
    [2, 3, 1],
    [2, 1, 3],
    [0, 1, 5],
    [1, 0, 5],
    [1, 5, 0],
];

fn c11() -> Check {
    let ws = enumerate_sommers_windows(4, 3).unwrap();
    ensure!(ws.len() == 16, "{} windows", ws.len());
    let got: BTreeSet<Vec<i64>> = ws.iter().map(|w| w.to_one_indexed()).collect();
    let want: BTreeSet<Vec<i64>> = SOMMERS_LABELS.iter().map(|l| l.to_vec()).collect();
    ensure!(got == want, "labels {got:?}");
    Ok(())
}

fn c12() -> Check {
    let d = set(0, &[1, 2, 3, 5, 7, 11]);
    let e = set(0, &[1, 2, 3, 5, 7, 9, 13]);
    ensure!(equivalent(&d, &e, 6, 4).unwrap(), "sets not equivalent");
    let dec = decompose(&d, 6, 4).unwrap();
    ensure!(
        reassemble(&dec).unwrap() == d,
        "decomposition does not reassemble"
    );
    let got = compact(shifting_words(&InvariantSet::naturals(), 3, 4).unwrap());
    let want: BTreeSet<String> = ["0000", "0001", "0011", "0010", "0100", "0002", "0012"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let extra: Vec<&String> = got.difference(&want).collect();
    let missing: Vec<&String> = want.difference(&got).collect();
    ensure!(
        got == want,
        "{} words shift Z>=0 at (3,4), not 7; unlisted {extra:?}, missing {missing:?}",
        got.len()
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("enumeration (4,3)", c1, Some(1)),
        ("counting law", c2, Some(10)),
        ("fixed point iff parking", c3, Some(60)),
        ("fixed point of 2100", c4, None),
        ("103 on Z>=0 \\ {1,2,4}", c5, None),
        ("monotone construction and uniqueness", c6, Some(10)),
        ("skeleton union", c7, None),
        ("path map", c8, None),
        ("dynamics", c9, Some(120)),
        ("sorted inverse and SP bijection", c10, Some(120)),
        ("Sommers region (4,3)", c11, None),
        ("non-coprime smoke tests", c12, Some(10)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let took = start.elapsed();
        if let (Ok(()), Some(s)) = (&outcome, limit) {
            if took > Duration::from_secs(s) {
                outcome = Err(format!("took {took:?}, limit {s} s"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
