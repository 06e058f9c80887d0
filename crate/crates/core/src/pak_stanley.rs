//! The Pak-Stanley map from restricted affine windows to parking words, and
//! two ways of inverting it.
//!
//! [`sp_invert_placement`] fills a table position by position, placing each
//! value `α` at the leftmost admissible slot. [`sp_invert_sorted`] follows
//! the unbalanced orbit of `{0, …, m−1}` under the periodically extended
//! word. Both produce the same sequence, and it becomes affine periodic.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{Error, Result};
use crate::weyl::{act_letter_unbalanced, AffineWindow};
use crate::words::ParkingWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `SP_u(i) = #{j > i : 0 < u(i) − u(j) < m}`; the inverse algorithms
    /// are stated against this one.
    #[default]
    Inversions,
    /// `SP_ω(α) = #{β > α : 0 < ω(β) − ω(α) < m}`.
    Ascents,
}

/// The word `(SP(0), …, SP(n−1))` in application order.
///
/// Only finitely many `j` can contribute: `u(j) = u(j mod n) + n⌊j/n⌋`, so
/// past `n + spread` (plus `m` for the second variant) every value is too
/// large.
pub fn sp_forward(w: &AffineWindow, m: usize, variant: Variant) -> Result<ParkingWord> {
    let n = w.n();
    let mi = m as i64;
    let win = w.window();
    let spread = win.iter().max().unwrap() - win.iter().min().unwrap();
    let reach = n as i64 + spread + if variant == Variant::Ascents { mi } else { 0 };
    let mut letters = Vec::with_capacity(n);
    for i in 0..n as i64 {
        let ui = w.eval(i);
        let count = ((i + 1)..=(i + reach))
            .filter(|&j| {
                let diff = match variant {
                    Variant::Inversions => ui - w.eval(j),
                    Variant::Ascents => w.eval(j) - ui,
                };
                0 < diff && diff < mi
            })
            .count();
        if count >= m {
            return Err(Error::OutsideDomain {
                letter: count,
                position: i as usize,
                m,
            });
        }
        letters.push(count);
    }
    ParkingWord::new(m, letters)
}

/// Table state of the placement algorithm.
///
/// `t[i]` holds `t_α(i)` for the next value `α` to be placed:
/// `t_α(i) = p(i) − #{β : α − m < β < α, U^{-1}(β) > i}`.
#[derive(Debug, Clone)]
pub struct Placement {
    word: ParkingWord,
    table: Vec<Option<i64>>,
    pos: Vec<usize>,
    t: Vec<i64>,
}

impl Placement {
    /// An empty table with `len` positions.
    pub fn new(word: &ParkingWord, len: usize) -> Result<Self> {
        if !word.letters().contains(&0) {
            return Err(Error::Malformed(format!(
                "{word} has no zero letter, so 0 cannot be placed"
            )));
        }
        let n = word.n();
        let t = (0..len).map(|i| word.letters()[i % n] as i64).collect();
        Ok(Placement {
            word: word.clone(),
            table: vec![None; len],
            pos: Vec::new(),
            t,
        })
    }

    /// The next value to be placed.
    pub fn next_value(&self) -> i64 {
        self.pos.len() as i64
    }

    pub fn table(&self) -> &[Option<i64>] {
        &self.table
    }

    pub fn position_of(&self, value: i64) -> Option<usize> {
        self.pos.get(usize::try_from(value).ok()?).copied()
    }

    /// The maintained counter `t_α(i)` for `α` = [`Self::next_value`].
    pub fn t(&self, i: usize) -> i64 {
        self.t[i]
    }

    /// `t_α(i)` recomputed from its definition; `α` may not exceed
    /// [`Self::next_value`].
    pub fn t_counter(&self, alpha: i64, i: usize) -> Result<i64> {
        if alpha > self.next_value() || alpha < 0 || i >= self.table.len() {
            return Err(Error::Malformed(format!(
                "t_{alpha}({i}) needs every value below {alpha} placed and a position in range"
            )));
        }
        let m = self.word.m() as i64;
        let p = self.word.letters()[i % self.word.n()] as i64;
        let later = ((alpha - m + 1).max(0)..alpha)
            .filter(|&b| self.pos[b as usize] > i)
            .count() as i64;
        Ok(p - later)
    }

    /// Places the next value and returns its position.
    pub fn place_next(&mut self) -> Result<usize> {
        let alpha = self.next_value();
        let m = self.word.m() as i64;
        let start = if alpha >= m {
            self.pos[(alpha - m) as usize] + 1
        } else {
            0
        };
        let slot = (start..self.table.len())
            .find(|&i| self.table[i].is_none() && self.t[i] == 0)
            .ok_or(Error::Stall { alpha })?;
        self.table[slot] = Some(alpha);
        self.pos.push(slot);
        // t_{α+1} = t_α − [pos(α) > i] + [pos(α + 1 − m) > i]
        let back = alpha + 1 - m;
        let back_pos = (back >= 0).then(|| self.pos[back as usize]);
        for i in 0..self.table.len() {
            if slot > i {
                self.t[i] -= 1;
            }
            if back_pos.is_some_and(|b| b > i) {
                self.t[i] += 1;
            }
        }
        Ok(slot)
    }

    /// Length of the filled prefix of the table.
    pub fn filled_prefix(&self) -> usize {
        self.table.iter().take_while(|c| c.is_some()).count()
    }
}

/// Runs the placement algorithm until the first `positions` slots are
/// filled and returns `U(0..positions)`.
pub fn sp_invert_placement(p: &ParkingWord, positions: usize) -> Result<Vec<i64>> {
    let mut state = run_placement(p, positions)?;
    Ok(state
        .table
        .drain(..positions)
        .map(|c| c.expect("prefix filled"))
        .collect())
}

/// The placement state after filling `positions` leading slots, for callers
/// that want to inspect counters.
pub fn run_placement(p: &ParkingWord, positions: usize) -> Result<Placement> {
    let len = 2 * positions + 2 * p.m() * p.n() + 2 * p.n();
    let mut state = Placement::new(p, len)?;
    while state.filled_prefix() < positions {
        if state.next_value() as usize >= len {
            return Err(Error::Stall {
                alpha: state.next_value(),
            });
        }
        state.place_next()?;
    }
    Ok(state)
}

/// Least `N = k·n` with `S_{N+n} = S_N + n`, given snapshots at steps
/// `0, n, 2n, …`.
pub fn detect_affine_period(snapshots: &[Vec<i64>], n: usize) -> Option<usize> {
    let shift = n as i64;
    snapshots
        .windows(2)
        .position(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a + shift == *b))
        .map(|k| k * n)
}

/// Output of the sorted-set inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortedInverse {
    /// `V(0), …, V(N + n − 1)`.
    #[serde(rename = "V")]
    pub v: Vec<i64>,
    #[serde(rename = "N")]
    pub period_start: usize,
    pub window: AffineWindow,
    /// `S_0, …, S_{N+n}`.
    #[serde(skip)]
    pub states: Vec<Vec<i64>>,
}

/// `V(i) = S_i[p(i)]`, `S_{i+1} = S_i \ {V(i)} ∪ {V(i) + m}` from
/// `S_0 = {0, …, m−1}`, run word by word, with at most `budget` passes
/// through the word.
pub fn sp_invert_sorted_with(p: &ParkingWord, budget: usize) -> Result<SortedInverse> {
    if !p.is_parking() {
        return Err(Error::NotParking);
    }
    let (m, n) = (p.m(), p.n());
    let mut states = vec![(0..m as i64).collect::<Vec<_>>()];
    let mut v = Vec::new();
    let mut found = None;
    for pass in 0..budget {
        for &letter in p.letters() {
            let (next, alpha) = act_letter_unbalanced(states.last().unwrap(), letter)?;
            v.push(alpha);
            states.push(next);
        }
        let (prev, cur) = (&states[pass * n], &states[(pass + 1) * n]);
        if prev.iter().zip(cur).all(|(a, b)| a + n as i64 == *b) {
            found = Some(pass * n);
            break;
        }
    }
    let start = found.ok_or(Error::PeriodNotDetected { budget })?;
    let entries: Vec<i64> = v[start..start + n]
        .iter()
        .map(|x| x - start as i64)
        .collect();
    let window = AffineWindow::new(entries.clone())
        .map_err(|e| Error::WindowValidation(format!("{entries:?} from {p}: {e}")))?;
    let back = sp_forward(&window, m, Variant::Inversions)
        .map_err(|e| Error::WindowValidation(format!("{window} from {p}: {e}")))?;
    if back != *p {
        return Err(Error::WindowValidation(format!(
            "{window} maps back to {back}, not {p}"
        )));
    }
    Ok(SortedInverse {
        v,
        period_start: start,
        window,
        states,
    })
}

/// [`sp_invert_sorted_with`] using the default orbit budget or `RPL_BUDGET`.
pub fn sp_invert_sorted(p: &ParkingWord) -> Result<SortedInverse> {
    let budget = budget::env_override().unwrap_or_else(|| budget::orbit_budget(p.m(), p.n()));
    sp_invert_sorted_with(p, budget)
}

/// Continues the sorted inverse to `len` values of `V`.
pub fn sorted_sequence(p: &ParkingWord, len: usize) -> Result<Vec<i64>> {
    let mut state: Vec<i64> = (0..p.m() as i64).collect();
    let mut v = Vec::with_capacity(len);
    for i in 0..len {
        let (next, alpha) = act_letter_unbalanced(&state, p.letters()[i % p.n()])?;
        v.push(alpha);
        state = next;
    }
    Ok(v)
}

/// Aligned text table with columns `i`, `p(i)`, `S_i`, `V(i)`.
pub fn render_table(p: &ParkingWord, inv: &SortedInverse) -> String {
    let mut rows = vec![["i".to_string(), "p(i)".into(), "S_i".into(), "V(i)".into()]];
    for (i, value) in inv.v.iter().enumerate() {
        let s: Vec<String> = inv.states[i].iter().map(i64::to_string).collect();
        rows.push([
            i.to_string(),
            p.letters()[i % p.n()].to_string(),
            format!("({})", s.join(", ")),
            value.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..4)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for r in &rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
    out
}
