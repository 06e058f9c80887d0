//! Parsing of words, sets, points and windows given on the command line.

use rpl_core::weyl::Rational;
use rpl_core::{AffineWindow, InvariantSet, ParkingWord, WeylPoint};

use crate::Failure;

pub fn word(text: &str, m: usize) -> Result<ParkingWord, Failure> {
    ParkingWord::parse(text, m).map_err(|e| Failure::usage(format!("--word: {e}")))
}

/// JSON `{"min":..,"gaps":[..]}`, or a comma-separated gap list for a set
/// with minimum 0 (`1,2,4` is `Z>=0 \ {1,2,4}`; an empty string is `Z>=0`).
pub fn set(text: &str) -> Result<InvariantSet, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Failure::usage(format!("set: {e}")));
    }
    let gaps = int_list(text).map_err(|e| Failure::usage(format!("set: {e}")))?;
    InvariantSet::new(0, gaps).map_err(|e| Failure::usage(format!("set: {e}")))
}

fn int_list(text: &str) -> Result<Vec<i64>, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| format!("not an integer: {s:?}"))
        })
        .collect()
}

fn rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((a, b)) => a
            .trim()
            .parse::<i64>()
            .ok()
            .zip(b.trim().parse::<i64>().ok())
            .filter(|&(_, d)| d != 0)
            .map(|(a, d)| Rational::new(a, d)),
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    };
    parsed.ok_or_else(|| format!("not a rational: {s:?}"))
}

/// JSON `{"m":..,"num":[..],"den":..}` or a list like `-4,1/2,7/2`. The
/// coordinates must be sorted and sum to zero.
pub fn point(text: &str, m: usize) -> Result<WeylPoint, Failure> {
    let text = text.trim();
    let p: WeylPoint = if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure::usage(format!("--point: {e}")))?
    } else {
        let inner = text.trim_start_matches('[').trim_end_matches(']');
        let coords = inner
            .split(',')
            .map(rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::usage(format!("--point: {e}")))?;
        WeylPoint::from_rationals(&coords).map_err(|e| Failure::usage(format!("--point: {e}")))?
    };
    if p.m() != m {
        return Err(Failure::usage(format!(
            "--point has {} coordinates, --m is {m}",
            p.m()
        )));
    }
    Ok(p)
}

/// A 0-indexed window `[a,b,c]`, or JSON `{"n":..,"window":[..]}`.
pub fn window(text: &str) -> Result<AffineWindow, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Failure::usage(format!("--window: {e}")));
    }
    let entries = int_list(text).map_err(|e| Failure::usage(format!("--window: {e}")))?;
    AffineWindow::new(entries).map_err(|e| Failure::usage(format!("--window: {e}")))
}

/// `3x4,4x3` into `[(3,4),(4,3)]`.
pub fn grid(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (a, b) = s
                .split_once('x')
                .ok_or_else(|| Failure::usage(format!("--grid entry {s:?} is not MxN")))?;
            match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(m), Ok(n)) if m > 0 && n > 0 => Ok((m, n)),
                _ => Err(Failure::usage(format!("--grid entry {s:?} is not MxN"))),
            }
        })
        .collect()
}
