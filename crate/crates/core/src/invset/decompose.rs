use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::set::InvariantSet;
use super::skeleton::skeleton;
use crate::error::{Error, Result};
use crate::weyl::Rational;
use crate::weyl::WeylPoint;

/// A tuple of `d = gcd(m, n)` 0-balanced `(m/d, n/d)`-invariant sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theta {
    pub m: usize,
    pub n: usize,
    pub parts: Vec<InvariantSet>,
}

impl Theta {
    pub fn new(m: usize, n: usize, parts: Vec<InvariantSet>) -> Result<Self> {
        let d = m.gcd(&n);
        if parts.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: parts.len(),
            });
        }
        for p in &parts {
            if p.balanced() != *p {
                return Err(Error::Malformed(format!("part {p} is not 0-balanced")));
            }
            p.require_invariant((m / d) as i64)?;
            p.require_invariant((n / d) as i64)?;
        }
        Ok(Theta { m, n, parts })
    }

    pub fn d(&self) -> usize {
        self.parts.len()
    }

    fn check_shifts(&self, shifts: &[Rational]) -> Result<()> {
        if shifts.len() != self.d() {
            return Err(Error::DimensionMismatch {
                expected: self.d(),
                found: shifts.len(),
            });
        }
        if shifts.iter().copied().sum::<Rational>() != Rational::from_integer(0) {
            return Err(Error::Malformed(format!(
                "shift vector {} does not sum to zero",
                render(shifts)
            )));
        }
        Ok(())
    }

    /// Part labels of `⋃ (d·S_i + x_i)` in ascending order of value, where
    /// `S_i` is the skeleton of part `i`.
    fn interleaving(&self, shifts: &[Rational]) -> Result<Vec<usize>> {
        self.check_shifts(shifts)?;
        let d = self.d();
        let (mi, ni) = (self.m / d, self.n / d);
        let scale = Rational::from_integer(d as i64);
        let mut entries: Vec<(Rational, usize)> = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            for v in skeleton(part, mi, ni)?.values() {
                entries.push((Rational::from_integer(v) * scale + shifts[i], i));
            }
        }
        entries.sort();
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::OnWall(format!(
                "parts {} and {} meet at {} for shifts {}",
                w[0].1,
                w[1].1,
                w[0].0,
                render(shifts)
            )));
        }
        Ok(entries.into_iter().map(|(_, i)| i).collect())
    }
}

fn render(shifts: &[Rational]) -> String {
    let parts: Vec<String> = shifts.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `Δ = ⋃ (d·parts[i] + shifts[i]) + offset`, with `Σ shifts = 0`.
///
/// Parts are indexed by the residue class mod `d` they come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub d: usize,
    pub parts: Vec<InvariantSet>,
    pub shifts: Vec<Rational>,
    pub offset: Rational,
}

impl Decomposition {
    pub fn theta(&self, m: usize, n: usize) -> Result<Theta> {
        Theta::new(m, n, self.parts.clone())
    }
}

pub fn decompose(set: &InvariantSet, m: usize, n: usize) -> Result<Decomposition> {
    set.require_invariant(m as i64)?;
    set.require_invariant(n as i64)?;
    let d = m.gcd(&n);
    let di = d as i64;
    let mut parts = Vec::with_capacity(d);
    let mut translations = Vec::with_capacity(d);
    for r in 0..di {
        let first = (set.minimum()..)
            .find(|&x| x.rem_euclid(di) == r && set.contains(x))
            .expect("co-bounded sets meet every residue class");
        let gaps: Vec<i64> = set
            .gaps()
            .iter()
            .filter(|&&g| g > first && g.rem_euclid(di) == r)
            .map(|g| (g - r) / di)
            .collect();
        let class = InvariantSet::new((first - r) / di, gaps)?;
        class.require_invariant((m / d) as i64)?;
        class.require_invariant((n / d) as i64)?;
        let part = class.balanced();
        let c = part.minimum() - class.minimum();
        parts.push(part);
        translations.push(r - di * c);
    }
    let offset = Rational::new(translations.iter().sum(), di);
    let shifts = translations
        .iter()
        .map(|&t| Rational::from_integer(t) - offset)
        .collect();
    Ok(Decomposition {
        d,
        parts,
        shifts,
        offset,
    })
}

pub fn reassemble(dec: &Decomposition) -> Result<InvariantSet> {
    let di = dec.d as i64;
    if dec.parts.len() != dec.d || dec.shifts.len() != dec.d {
        return Err(Error::DimensionMismatch {
            expected: dec.d,
            found: dec.parts.len().min(dec.shifts.len()),
        });
    }
    let mut translations = Vec::with_capacity(dec.d);
    let mut residues = vec![false; dec.d];
    for s in &dec.shifts {
        let t = s + dec.offset;
        if !t.is_integer() {
            return Err(Error::Malformed(format!(
                "translation {t} is not an integer"
            )));
        }
        let t = t.to_integer();
        let r = t.rem_euclid(di) as usize;
        if residues[r] {
            return Err(Error::Collision(format!(
                "two parts land in residue class {r} mod {di}"
            )));
        }
        residues[r] = true;
        translations.push(t);
    }
    let pieces: Vec<(&InvariantSet, i64)> = dec.parts.iter().zip(translations).collect();
    let member = |x: i64| {
        pieces
            .iter()
            .any(|(p, t)| (x - t).rem_euclid(di) == 0 && p.contains((x - t) / di))
    };
    let min = pieces
        .iter()
        .map(|(p, t)| di * p.minimum() + t)
        .min()
        .unwrap();
    let cond = pieces
        .iter()
        .map(|(p, t)| di * p.conductor() + t)
        .max()
        .unwrap();
    let gaps = (min..cond).filter(|&x| !member(x)).collect();
    InvariantSet::new(min, gaps)
}

/// Whether two off-wall shift vectors give the same interleaving of the
/// shifted, scaled skeletons.
pub fn same_region(theta: &Theta, x: &[Rational], y: &[Rational]) -> Result<bool> {
    Ok(theta.interleaving(x)? == theta.interleaving(y)?)
}

/// Sorted union of `d·A_i + x_i` (with `A_i` the `m/d`-generators of part
/// `i`), minus its mean.
pub fn phi_extended(theta: &Theta, shifts: &[Rational]) -> Result<WeylPoint> {
    theta.check_shifts(shifts)?;
    let d = theta.d();
    let scale = Rational::from_integer(d as i64);
    let mut coords = Vec::with_capacity(theta.m);
    for (i, part) in theta.parts.iter().enumerate() {
        for a in part.generators(theta.m / d)? {
            coords.push(Rational::from_integer(a) * scale + shifts[i]);
        }
    }
    coords.sort();
    if let Some(w) = coords.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Collision(format!(
            "coordinate {} repeated for shifts {}",
            w[0],
            render(shifts)
        )));
    }
    WeylPoint::balanced_from_rationals(&coords)
}
