use serde::{Deserialize, Serialize};

use super::set::InvariantSet;
use crate::error::{Error, Result};
use crate::words::{DyckPath, ParkingWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EntryKind {
    #[serde(rename = "gen")]
    Generator,
    #[serde(rename = "cogen")]
    Cogenerator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkeletonEntry {
    pub v: i64,
    pub k: EntryKind,
}

/// The `m`-generators and `n`-cogenerators of a set, merged in ascending
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Skeleton {
    entries: Vec<SkeletonEntry>,
}

impl Skeleton {
    pub fn entries(&self) -> &[SkeletonEntry] {
        &self.entries
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.v).collect()
    }

    pub fn of_kind(&self, kind: EntryKind) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|e| e.k == kind)
            .map(|e| e.v)
            .collect()
    }

    /// Compact text such as `-4c 0g 2c`.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|e| {
                let tag = match e.k {
                    EntryKind::Generator => 'g',
                    EntryKind::Cogenerator => 'c',
                };
                format!("{}{}", e.v, tag)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn skeleton(set: &InvariantSet, m: usize, n: usize) -> Result<Skeleton> {
    let gens = set.generators(m)?;
    let cogens = set.cogenerators(n)?;
    let mut entries: Vec<SkeletonEntry> = gens
        .iter()
        .map(|&v| SkeletonEntry {
            v,
            k: EntryKind::Generator,
        })
        .chain(cogens.iter().map(|&v| SkeletonEntry {
            v,
            k: EntryKind::Cogenerator,
        }))
        .collect();
    entries.sort_by_key(|e| e.v);
    if let Some(w) = entries.windows(2).find(|w| w[0].v == w[1].v) {
        return Err(Error::Collision(format!(
            "{} is both an {m}-generator and an {n}-cogenerator of {set}",
            w[0].v
        )));
    }
    Ok(Skeleton { entries })
}

/// The Dyck path of a set: reading the skeleton upwards, the `i`-th
/// `n`-cogenerator gets height equal to the number of `m`-generators below it.
pub fn gamma(set: &InvariantSet, m: usize, n: usize) -> Result<DyckPath> {
    let skel = skeleton(set, m, n)?;
    let mut heights = Vec::with_capacity(n);
    let mut below = 0usize;
    for e in skel.entries() {
        match e.k {
            EntryKind::Generator => below += 1,
            EntryKind::Cogenerator => heights.push(below),
        }
    }
    // the smallest skeleton entry is always a cogenerator, so heights stay < m
    if heights.len() != n || heights.iter().any(|&h| h >= m) {
        return Err(Error::Invariant(format!(
            "skeleton of {set} does not encode a path: {}",
            skel.render()
        )));
    }
    DyckPath::from_word(ParkingWord::new(m, heights)?)
}
