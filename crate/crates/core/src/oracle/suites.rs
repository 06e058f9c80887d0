use std::collections::BTreeSet;

use num_integer::Integer;
use serde_json::json;

use super::checks::{in_closed_alcove, parking_by_sorting, parking_cases, shifting_words};
use super::sample::{
    interior_point, nearby_point, random_centroid, random_point, random_word, CaseRng,
};
use super::{find_invariant_witness, CaseResult, SuiteParams};
use crate::budget::{orbit_budget, DEFAULT_WORD_CAP};
use crate::error::{Error, Result};
use crate::invset::{
    act_letter_set, act_word_set, associated_monotone, enumerate_invariant_sets, gamma, phi,
    skeleton, InvariantSet,
};
use crate::pak_stanley::{sorted_sequence, sp_forward, sp_invert_sorted, Placement, Variant};
use crate::par::Execution;
use crate::weyl::{
    act_letter, act_word, enumerate_sommers_windows, find_fixed_point_default, is_centroid,
    orbit_analysis, star_shift, Rational, WeylPoint,
};
use crate::words::{all_words, enumerate_dyck_words, enumerate_parking_words, ParkingWord};

/// Positions compared between the two inverse algorithms.
pub const AGREEMENT_POSITIONS: usize = 50;

type Cases = Result<Vec<CaseResult>>;

fn coprime(grid: &[(usize, usize)]) -> Result<()> {
    match grid.iter().find(|(m, n)| m.gcd(n) != 1) {
        Some((m, n)) => Err(Error::Unsupported(format!(
            "this suite needs coprime (m, n); got ({m}, {n})"
        ))),
        None => Ok(()),
    }
}

/// Flattens per-grid-point work items into one indexed case list.
fn flatten<T, F>(grid: &[(usize, usize)], mut items: F) -> Result<Vec<(usize, usize, T)>>
where
    F: FnMut(usize, usize) -> Result<Vec<T>>,
{
    let mut out = Vec::new();
    for &(m, n) in grid {
        for item in items(m, n)? {
            out.push((m, n, item));
        }
    }
    Ok(out)
}

fn parking_words(grid: &[(usize, usize)]) -> Result<Vec<(usize, usize, ParkingWord)>> {
    flatten(grid, enumerate_parking_words)
}

fn sets(grid: &[(usize, usize)]) -> Result<Vec<(usize, usize, InvariantSet)>> {
    coprime(grid)?;
    flatten(grid, enumerate_invariant_sets)
}

fn word_json(m: usize, n: usize, w: &ParkingWord) -> serde_json::Value {
    json!({ "m": m, "n": n, "word": w.render() })
}

fn set_json(m: usize, n: usize, s: &InvariantSet) -> serde_json::Value {
    json!({ "m": m, "n": n, "set": s })
}

fn fixed_point(w: &ParkingWord) -> std::result::Result<WeylPoint, String> {
    let r = find_fixed_point_default(w);
    if r.is_fixed_point() {
        Ok(r.terminal)
    } else {
        Err(format!("no fixed point within {} steps", r.budget_used))
    }
}

pub fn parking_fixed_point(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let mut out = Vec::new();
    for &(m, n) in grid {
        out.extend(parking_cases(m, n, exec)?);
    }
    Ok(out)
}

/// `(seed-derived rng, m, n)` for `samples` cases per grid point.
fn sampled(params: &SuiteParams, default: usize) -> Vec<(usize, usize, usize)> {
    let per = params.samples.unwrap_or(default);
    let mut out = Vec::new();
    for &(m, n) in &params.grid {
        for _ in 0..per {
            out.push((out.len(), m, n));
        }
    }
    out
}

pub fn weak_contraction(params: &SuiteParams, exec: Execution) -> Cases {
    let cases = sampled(params, 200);
    let seed = params.seed;
    Ok(exec.map(&cases, |&(case, m, n)| {
        let mut rng = CaseRng::new(seed, case);
        let u = random_point(&mut rng, m, 2 * m as i64, 3 * m as i64);
        let v = if rng.coin() {
            nearby_point(&mut rng, &u, 4 * m as i64)
        } else {
            random_point(&mut rng, m, 2 * m as i64, 3 * m as i64)
        };
        let w = random_word(&mut rng, m, n);
        let input = json!({ "u": u, "v": v, "word": w.render() });
        let (Ok((wu, _)), Ok((wv, _))) = (act_word(&u, &w), act_word(&v, &w)) else {
            return CaseResult::fail(input, "action failed");
        };
        if wu.dist2(&wv) > u.dist2(&v) {
            CaseResult::fail(
                input,
                format!("distance grew: {} > {}", wu.dist2(&wv), u.dist2(&v)),
            )
        } else {
            CaseResult::ok()
        }
    }))
}

pub fn alcove_isometry(params: &SuiteParams, exec: Execution) -> Cases {
    let cases = sampled(params, 100);
    let seed = params.seed;
    Ok(exec.map(&cases, |&(case, m, n)| {
        let mut rng = CaseRng::new(seed, case);
        let c = random_centroid(&mut rng, m, 3);
        let u = interior_point(&mut rng, &c);
        let v = interior_point(&mut rng, &c);
        let w = random_word(&mut rng, m, n);
        let input = json!({ "u": u, "v": v, "word": w.render() });
        let (Ok((wu, tu)), Ok((wv, tv))) = (act_word(&u, &w), act_word(&v, &w)) else {
            return CaseResult::fail(input, "action failed");
        };
        if wu.dist2(&wv) != u.dist2(&v) {
            CaseResult::fail(input, "distance changed inside an alcove")
        } else if tu.sigma != tv.sigma {
            CaseResult::fail(input, "permutations differ inside an alcove")
        } else {
            CaseResult::ok()
        }
    }))
}

fn has_ties(x: &WeylPoint, i: usize) -> bool {
    let mut s = star_shift(x, i).expect("letter in range").nums().to_vec();
    s.sort_unstable();
    s.windows(2).any(|w| w[0] == w[1])
}

pub fn norm_equal_sorting(params: &SuiteParams, exec: Execution) -> Cases {
    let cases = sampled(params, 200);
    let seed = params.seed;
    Ok(exec.map(&cases, |&(case, m, _)| {
        let mut rng = CaseRng::new(seed, case);
        let u = random_point(&mut rng, m, 12 * m as i64, 2 * m as i64);
        let v = if rng.coin() {
            let c = random_centroid(&mut rng, m, 2);
            interior_point(&mut rng, &c)
        } else {
            // a nearby point, so both outcomes of the comparison occur
            nearby_point(&mut rng, &u, 4 * m as i64)
        };
        let i = rng.below(m);
        let input = json!({ "u": u, "v": v, "letter": i });
        if has_ties(&u, i) || has_ties(&v, i) {
            return CaseResult::ok().count("skipped-ties", 1);
        }
        let ((iu, su), (iv, sv)) = (act_letter(&u, i).unwrap(), act_letter(&v, i).unwrap());
        let kept = iu.dist2(&iv) == u.dist2(&v);
        if kept != (su == sv) {
            CaseResult::fail(
                input,
                format!("distance kept = {kept}, equal permutations = {}", su == sv),
            )
        } else {
            CaseResult::ok().count(if kept { "kept" } else { "shrunk" }, 1)
        }
    }))
}

pub fn fixed_cycle_structure(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let words = parking_words(grid)?;
    Ok(exec.map(&words, |(m, n, w)| {
        let input = word_json(*m, *n, w);
        let x = match fixed_point(w) {
            Ok(x) => x,
            Err(e) => return CaseResult::fail(input, e),
        };
        let d = m.gcd(n);
        let (_, trace) = act_word(&x, w).unwrap();
        let want = vec![m / d; d];
        if trace.sigma.cycle_type() != want {
            return CaseResult::fail(
                input,
                format!(
                    "cycle type {:?}, expected {want:?}",
                    trace.sigma.cycle_type()
                ),
            );
        }
        if d == 1 && !is_centroid(&x) {
            return CaseResult::fail(input, format!("fixed point {x} is not a centroid"));
        }
        CaseResult::ok()
    }))
}

pub fn alcove_identity(params: &SuiteParams, exec: Execution) -> Cases {
    let words = parking_words(&params.grid)?;
    let per = params.samples.unwrap_or(10);
    let seed = params.seed;
    let indexed: Vec<(usize, &(usize, usize, ParkingWord))> = words.iter().enumerate().collect();
    Ok(exec.map(&indexed, |&(case, (m, n, w))| {
        let input = word_json(*m, *n, w);
        let x = match fixed_point(w) {
            Ok(x) => x,
            Err(e) => return CaseResult::fail(input, e),
        };
        let mut rng = CaseRng::new(seed, case);
        let power = w.power(*m);
        let mut result = CaseResult::ok();
        for _ in 0..per {
            let y = interior_point(&mut rng, &x);
            let back = act_word(&y, &power).unwrap().0;
            if back != y {
                return CaseResult::fail(
                    json!({ "m": m, "n": n, "word": w.render(), "point": y }),
                    "p^m moved an interior point of the fixed alcove",
                );
            }
            let period = orbit_analysis(w, &y, *m + 1).map(|r| r.period);
            match period {
                Ok(Some(p)) if m % p == 0 => result = result.count(format!("period-{p}"), 1),
                other => {
                    return CaseResult::fail(
                        json!({ "m": m, "n": n, "word": w.render(), "point": y }),
                        format!("minimal period {other:?} does not divide {m}"),
                    )
                }
            }
        }
        result
    }))
}

pub fn unit_gap_facet(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let words = parking_words(grid)?;
    Ok(exec.map(&words, |(m, n, w)| {
        let input = word_json(*m, *n, w);
        let mut x = match fixed_point(w) {
            Ok(x) => x,
            Err(e) => return CaseResult::fail(input, e),
        };
        let one = Rational::from_integer(1);
        for &letter in w.letters() {
            let c = x.coords();
            if c.windows(2).any(|p| p[1] - p[0] == one) {
                return CaseResult::ok();
            }
            x = act_letter(&x, letter).unwrap().0;
        }
        CaseResult::fail(input, "no unit gap along the fixed orbit")
    }))
}

pub fn absorption(params: &SuiteParams, exec: Execution) -> Cases {
    let words = parking_words(&params.grid)?;
    let per = params.samples.unwrap_or(20);
    let seed = params.seed;
    let indexed: Vec<(usize, &(usize, usize, ParkingWord))> = words.iter().enumerate().collect();
    Ok(exec.map(&indexed, |&(case, (m, n, w))| {
        let input = word_json(*m, *n, w);
        let x = match fixed_point(w) {
            Ok(x) => x,
            Err(e) => return CaseResult::fail(input, e),
        };
        let mut rng = CaseRng::new(seed, case);
        let budget = orbit_budget(*m, *n);
        let mut result = CaseResult::ok();
        let mut drawn = 0;
        while drawn < per {
            let c = random_centroid(&mut rng, *m, 4);
            if c == x {
                continue;
            }
            drawn += 1;
            let start = json!({ "m": m, "n": n, "word": w.render(), "start": c });
            match orbit_analysis(w, &c, budget) {
                Ok(r) if in_closed_alcove(&x, &r.terminal) => {
                    result = result.count("absorbed", 1);
                    if r.terminal == x {
                        result = result.count("reached-fixed-point", 1);
                    }
                }
                Ok(r) => {
                    return CaseResult::fail(
                        start,
                        format!("orbit ends at {} outside the fixed alcove", r.terminal),
                    )
                }
                Err(e) => return CaseResult::fail(start, e.to_string()),
            }
        }
        result
    }))
}

/// Intermediate sets `Δ^(0), …, Δ^(n)` and removed elements.
fn orbit_sets(set: &InvariantSet, w: &ParkingWord) -> (Vec<InvariantSet>, Vec<i64>) {
    let mut cur = set.clone();
    let mut chain = vec![cur.clone()];
    let mut removed = Vec::new();
    for &j in w.letters() {
        let (next, a) = act_letter_set(&cur, j, w.m()).unwrap();
        removed.push(a);
        chain.push(next.clone());
        cur = next;
    }
    (chain, removed)
}

/// Runs `check` on every word that shifts the set; stops at the first
/// failure.
fn per_shifting_word<F>(grid: &[(usize, usize)], exec: Execution, check: F) -> Cases
where
    F: Fn(usize, usize, &InvariantSet, &ParkingWord) -> Option<String> + Sync + Send,
{
    let sets = sets(grid)?;
    Ok(exec.map(&sets, |(m, n, s)| {
        let words = match shifting_words(s, *m, *n) {
            Ok(w) => w,
            Err(e) => return CaseResult::fail(set_json(*m, *n, s), e.to_string()),
        };
        for w in &words {
            if let Some(reason) = check(*m, *n, s, w) {
                return CaseResult::fail(
                    json!({ "m": m, "n": n, "set": s, "word": w.render() }),
                    reason,
                );
            }
        }
        CaseResult::ok().count("shifting-pairs", words.len() as u64)
    }))
}

pub fn shift_characterization(grid: &[(usize, usize)], exec: Execution) -> Cases {
    per_shifting_word(grid, exec, |m, n, s, w| {
        if !parking_by_sorting(w.letters(), m) {
            return Some("a non-parking word shifts the set".into());
        }
        let (chain, _) = orbit_sets(s, w);
        chain
            .iter()
            .find(|d| !d.is_invariant(m, n))
            .map(|d| format!("intermediate {d} is not ({m},{n})-invariant"))
    })
}

pub fn removed_are_generators(grid: &[(usize, usize)], exec: Execution) -> Cases {
    per_shifting_word(grid, exec, |_, n, s, w| {
        let (chain, removed) = orbit_sets(s, w);
        let original = s.generators(n).unwrap();
        for (i, a) in removed.iter().enumerate() {
            if !original.contains(a) {
                return Some(format!("removed {a} is not an {n}-generator of the set"));
            }
            if !chain[i].generators(n).unwrap().contains(a) {
                return Some(format!(
                    "removed {a} is not an {n}-generator of intermediate {}",
                    chain[i]
                ));
            }
        }
        None
    })
}

pub fn skeleton_union(grid: &[(usize, usize)], exec: Execution) -> Cases {
    per_shifting_word(grid, exec, |m, n, s, w| {
        let (chain, _) = orbit_sets(s, w);
        let union: BTreeSet<i64> = chain
            .iter()
            .flat_map(|d| d.generators(m).unwrap())
            .collect();
        let skel: BTreeSet<i64> = skeleton(&s.shifted(n as i64), m, n)
            .unwrap()
            .values()
            .into_iter()
            .collect();
        (union != skel).then(|| format!("generator union {union:?} vs skeleton {skel:?}"))
    })
}

pub fn monotone_uniqueness(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let sets = sets(grid)?;
    let mut monotone = std::collections::BTreeMap::new();
    for &(m, n) in grid {
        let words: Vec<ParkingWord> = all_words(m, n, DEFAULT_WORD_CAP)?
            .into_iter()
            .filter(ParkingWord::is_monotone)
            .collect();
        monotone.insert((m, n), words);
    }
    Ok(exec.map(&sets, |(m, n, s)| {
        let input = set_json(*m, *n, s);
        let target = s.shifted(*n as i64);
        let fixers: Vec<&ParkingWord> = monotone[&(*m, *n)]
            .iter()
            .filter(|w| act_word_set(s, w).map(|r| r.0 == target).unwrap_or(false))
            .collect();
        if fixers.len() != 1 {
            let list: Vec<String> = fixers.iter().map(|w| w.render()).collect();
            return CaseResult::fail(input, format!("monotone shifting words: {list:?}"));
        }
        match associated_monotone(s, *m, *n) {
            Ok(a) if a == *fixers[0] => CaseResult::ok().count("sets", 1),
            Ok(a) => CaseResult::fail(
                input,
                format!("construction gives {a}, search gives {}", fixers[0]),
            ),
            Err(e) => CaseResult::fail(input, e.to_string()),
        }
    }))
}

pub fn gamma_bijection(grid: &[(usize, usize)], exec: Execution) -> Cases {
    coprime(grid)?;
    Ok(exec.map(grid, |&(m, n)| {
        let input = json!({ "m": m, "n": n });
        let sets = match enumerate_invariant_sets(m, n) {
            Ok(s) => s,
            Err(e) => return CaseResult::fail(input, e.to_string()),
        };
        let mut images = BTreeSet::new();
        for s in &sets {
            let g = gamma(s, m, n).unwrap();
            let a = associated_monotone(s, m, n).unwrap();
            if *g.word() != a {
                return CaseResult::fail(
                    set_json(m, n, s),
                    format!("path word {} differs from monotone word {a}", g.word()),
                );
            }
            if !images.insert(g.word().clone()) {
                return CaseResult::fail(set_json(m, n, s), "two sets share a path");
            }
        }
        let dyck: BTreeSet<ParkingWord> = enumerate_dyck_words(m, n)
            .unwrap()
            .into_iter()
            .map(|p| p.word().clone())
            .collect();
        if images != dyck {
            return CaseResult::fail(input, "image is not the set of Dyck words");
        }
        CaseResult::ok().count("sets", sets.len() as u64)
    }))
}

pub fn phi_centroid(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let sets = sets(grid)?;
    Ok(exec.map(&sets, |(m, n, s)| {
        let x = phi(s, *m).unwrap();
        if is_centroid(&x) {
            CaseResult::ok()
        } else {
            CaseResult::fail(set_json(*m, *n, s), format!("φ = {x} is not a centroid"))
        }
    }))
}

pub fn phi_equivariance(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let sets = sets(grid)?;
    Ok(exec.map(&sets, |(m, n, s)| {
        let x = phi(s, *m).unwrap();
        for j in 0..*m {
            let (moved, _) = act_letter_set(s, j, *m).unwrap();
            let (y, _) = act_letter(&x, j).unwrap();
            if phi(&moved, *m).unwrap() != y {
                return CaseResult::fail(
                    json!({ "m": m, "n": n, "set": s, "letter": j }),
                    "φ does not commute with the letter",
                );
            }
            let (far, _) = act_letter_set(&s.shifted(7), j, *m).unwrap();
            if far != moved.shifted(7) {
                return CaseResult::fail(
                    json!({ "m": m, "n": n, "set": s, "letter": j }),
                    "the set action does not commute with translation",
                );
            }
        }
        CaseResult::ok()
    }))
}

pub fn witness_existence(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let words = parking_words(grid)?;
    Ok(exec.map(&words, |(m, n, w)| {
        let input = word_json(*m, *n, w);
        match find_invariant_witness(w, None) {
            Ok(Some(set)) => {
                let x = phi(&set, *m).unwrap();
                if act_word(&x, w).unwrap().0 == x {
                    CaseResult::ok()
                } else {
                    CaseResult::fail(input, format!("φ of witness {set} is not fixed"))
                }
            }
            Ok(None) => CaseResult::fail(input, "no witness found"),
            Err(e) => CaseResult::fail(input, e.to_string()),
        }
    }))
}

/// Runs the placement algorithm while checking its counters.
fn checked_placement(p: &ParkingWord, positions: usize) -> std::result::Result<Vec<i64>, String> {
    let m = p.m() as i64;
    let len = 2 * positions + 2 * p.m() * p.n() + 2 * p.n();
    let mut st = Placement::new(p, len).map_err(|e| e.to_string())?;
    let mut previous: Option<Vec<i64>> = None;
    while st.filled_prefix() < positions {
        let alpha = st.next_value();
        if alpha as usize >= len {
            return Err(format!("stalled at {alpha}"));
        }
        let t: Vec<i64> = (0..len).map(|i| st.t(i)).collect();
        let back = if alpha >= m {
            st.position_of(alpha - m)
        } else {
            None
        };
        let right = |i: usize| back.is_none_or(|b| i > b);
        for (i, (&ti, cell)) in t.iter().zip(st.table()).enumerate() {
            if cell.is_none() && right(i) && ti < 0 {
                return Err(format!("t_{alpha}({i}) = {ti} is negative"));
            }
        }
        if let Some(prev) = &previous {
            for (i, (&before, &now)) in prev.iter().zip(&t).enumerate() {
                let drop = before - now;
                if right(i) && !(0..=1).contains(&drop) {
                    return Err(format!("t_{}({i}) − t_{alpha}({i}) = {drop}", alpha - 1));
                }
            }
        }
        let slot = st.place_next().map_err(|e| e.to_string())?;
        if let Some(b) = back {
            if b >= slot {
                return Err(format!("{alpha} placed left of {}", alpha - m));
            }
        }
        previous = Some(t);
    }
    Ok(st.table()[..positions].iter().map(|c| c.unwrap()).collect())
}

pub fn placement_agreement(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let words = parking_words(grid)?;
    Ok(exec.map(&words, |(m, n, w)| {
        let input = word_json(*m, *n, w);
        let u = match checked_placement(w, AGREEMENT_POSITIONS) {
            Ok(u) => u,
            Err(e) => return CaseResult::fail(input, e),
        };
        let v = sorted_sequence(w, AGREEMENT_POSITIONS).unwrap();
        if u != v {
            let at = u.iter().zip(&v).position(|(a, b)| a != b).unwrap();
            return CaseResult::fail(
                input,
                format!("U({at}) = {} but V({at}) = {}", u[at], v[at]),
            );
        }
        CaseResult::ok()
    }))
}

pub fn sp_roundtrip(grid: &[(usize, usize)], exec: Execution) -> Cases {
    let words = parking_words(grid)?;
    Ok(exec.map(&words, |(m, n, w)| {
        let input = word_json(*m, *n, w);
        let inv = match sp_invert_sorted(w) {
            Ok(inv) => inv,
            Err(e) => return CaseResult::fail(input, e.to_string()),
        };
        let back = sp_forward(&inv.window, *m, Variant::Inversions);
        if back.as_ref() != Ok(w) {
            return CaseResult::fail(input, format!("{} maps to {back:?}", inv.window));
        }
        if !inv.window.is_m_restricted(*m) {
            return CaseResult::fail(input, format!("{} is not {m}-restricted", inv.window));
        }
        CaseResult::ok().count(format!("N={}", inv.period_start), 1)
    }))
}

pub fn sp_bijection(grid: &[(usize, usize)], exec: Execution) -> Cases {
    coprime(grid)?;
    Ok(exec.map(grid, |&(m, n)| {
        let input = json!({ "m": m, "n": n });
        let windows = enumerate_sommers_windows(m, n).unwrap();
        let mut images = BTreeSet::new();
        for w in &windows {
            match sp_forward(w, m, Variant::Inversions) {
                Ok(p) => {
                    if !images.insert(p) {
                        return CaseResult::fail(
                            json!({ "m": m, "n": n, "window": w }),
                            "SP is not injective",
                        );
                    }
                }
                Err(e) => {
                    return CaseResult::fail(json!({ "m": m, "n": n, "window": w }), e.to_string())
                }
            }
        }
        let pf: BTreeSet<ParkingWord> =
            enumerate_parking_words(m, n).unwrap().into_iter().collect();
        if images != pf {
            return CaseResult::fail(input, "image is not the set of parking words");
        }
        let known: BTreeSet<_> = windows.iter().collect();
        for p in &pf {
            let inv = sp_invert_sorted(p).unwrap();
            if !known.contains(&inv.window) {
                return CaseResult::fail(
                    word_json(m, n, p),
                    format!("inverse {} is not restricted", inv.window),
                );
            }
        }
        CaseResult::ok().count("windows", windows.len() as u64)
    }))
}
