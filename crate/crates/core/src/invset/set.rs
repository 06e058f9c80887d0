use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Δ = {x ≥ min : x ∉ gaps}` with finitely many gaps, all above `min`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SetJson", into = "SetJson")]
pub struct InvariantSet {
    min: i64,
    gaps: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SetJson {
    min: i64,
    gaps: Vec<i64>,
}

impl TryFrom<SetJson> for InvariantSet {
    type Error = Error;
    fn try_from(j: SetJson) -> Result<Self> {
        InvariantSet::new(j.min, j.gaps)
    }
}

impl From<InvariantSet> for SetJson {
    fn from(s: InvariantSet) -> Self {
        SetJson {
            min: s.min,
            gaps: s.gaps,
        }
    }
}

impl InvariantSet {
    /// Gaps may come in any order; duplicates and gaps `≤ min` are rejected.
    pub fn new(min: i64, mut gaps: Vec<i64>) -> Result<Self> {
        gaps.sort_unstable();
        if let Some(w) = gaps.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!("gap {} listed twice", w[0])));
        }
        if let Some(&g) = gaps.first().filter(|&&g| g <= min) {
            return Err(Error::Malformed(format!(
                "gap {g} is not above the minimum {min}"
            )));
        }
        Ok(InvariantSet { min, gaps })
    }

    /// `Z_{≥k}`.
    pub fn ray(k: i64) -> Self {
        InvariantSet {
            min: k,
            gaps: Vec::new(),
        }
    }

    /// `Z_{≥0}`.
    pub fn naturals() -> Self {
        Self::ray(0)
    }

    /// `elements ∪ Z_{≥tail}`.
    pub fn from_prefix(elements: &[i64], tail: i64) -> Result<Self> {
        let min = elements.iter().copied().chain([tail]).min().unwrap();
        let gaps = (min..tail).filter(|x| !elements.contains(x)).collect();
        Self::new(min, gaps)
    }

    pub fn minimum(&self) -> i64 {
        self.min
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Least `c` with `Z_{≥c} ⊂ Δ`.
    pub fn conductor(&self) -> i64 {
        self.gaps.last().map_or(self.min, |g| g + 1)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.min && self.gaps.binary_search(&x).is_err()
    }

    /// Elements of `Δ` below `bound`.
    pub fn elements_below(&self, bound: i64) -> Vec<i64> {
        (self.min..bound).filter(|&x| self.contains(x)).collect()
    }

    pub fn shifted(&self, k: i64) -> Self {
        InvariantSet {
            min: self.min + k,
            gaps: self.gaps.iter().map(|g| g + k).collect(),
        }
    }

    /// Translate so the minimum is `0`.
    pub fn normalized(&self) -> Self {
        self.shifted(-self.min)
    }

    /// Translate so `#(Z_{≥0} \ Δ) = #(Z_{<0} ∩ Δ)`.
    pub fn balanced(&self) -> Self {
        self.normalized().shifted(-(self.gaps.len() as i64))
    }

    pub fn is_k_invariant(&self, k: i64) -> bool {
        assert!(k >= 1, "invariance step must be positive");
        self.gaps
            .iter()
            .all(|&g| g - k < self.min || self.gaps.binary_search(&(g - k)).is_ok())
    }

    pub fn is_invariant(&self, m: usize, n: usize) -> bool {
        self.is_k_invariant(m as i64) && self.is_k_invariant(n as i64)
    }

    pub(crate) fn require_invariant(&self, k: i64) -> Result<()> {
        if k < 1 || !self.is_k_invariant(k) {
            return Err(Error::NotInvariant { k });
        }
        Ok(())
    }

    /// `{a ∈ Δ : a − k ∉ Δ}`, one per residue class mod `k`, ascending.
    pub fn generators(&self, k: usize) -> Result<Vec<i64>> {
        let ki = k as i64;
        self.require_invariant(ki)?;
        let mut found = vec![None; k];
        let mut left = k;
        let mut x = self.min;
        while left > 0 {
            if self.contains(x) {
                let slot = &mut found[x.rem_euclid(ki) as usize];
                if slot.is_none() {
                    *slot = Some(x);
                    left -= 1;
                }
            }
            x += 1;
        }
        let mut gens: Vec<i64> = found.into_iter().map(|g| g.unwrap()).collect();
        gens.sort_unstable();
        Ok(gens)
    }

    /// `{a ∉ Δ : a + k ∈ Δ}`, ascending.
    pub fn cogenerators(&self, k: usize) -> Result<Vec<i64>> {
        Ok(self
            .generators(k)?
            .into_iter()
            .map(|g| g - k as i64)
            .collect())
    }

    /// `Δ \ {a}` for an element `a`.
    pub fn without(&self, a: i64) -> Result<Self> {
        if !self.contains(a) {
            return Err(Error::Malformed(format!("{a} is not an element of {self}")));
        }
        if a == self.min {
            let mut min = a + 1;
            let mut k = 0;
            while k < self.gaps.len() && self.gaps[k] == min {
                min += 1;
                k += 1;
            }
            return Ok(InvariantSet {
                min,
                gaps: self.gaps[k..].to_vec(),
            });
        }
        let pos = self.gaps.partition_point(|&g| g < a);
        let mut gaps = self.gaps.clone();
        gaps.insert(pos, a);
        Ok(InvariantSet {
            min: self.min,
            gaps,
        })
    }
}

impl fmt::Display for InvariantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gaps.is_empty() {
            return write!(f, "Z>={}", self.min);
        }
        let gaps: Vec<String> = self.gaps.iter().map(i64::to_string).collect();
        write!(f, "Z>={} \\ {{{}}}", self.min, gaps.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(min: i64, gaps: &[i64]) -> InvariantSet {
        InvariantSet::new(min, gaps.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(set(0, &[4, 1, 2]).gaps(), &[1, 2, 4]);
        assert!(InvariantSet::new(0, vec![1, 1]).is_err());
        assert!(InvariantSet::new(0, vec![0, 1]).is_err());
        assert!(InvariantSet::new(3, vec![-1]).is_err());
        assert_eq!(
            InvariantSet::from_prefix(&[0, 3], 5).unwrap(),
            set(0, &[1, 2, 4])
        );
        assert_eq!(
            InvariantSet::from_prefix(&[], 2).unwrap(),
            InvariantSet::ray(2)
        );
        let j = serde_json::to_string(&set(0, &[1, 2, 4])).unwrap();
        assert_eq!(j, r#"{"min":0,"gaps":[1,2,4]}"#);
        assert!(serde_json::from_str::<InvariantSet>(r#"{"min":0,"gaps":[0]}"#).is_err());
    }

    #[test]
    fn invariance() {
        let d = set(0, &[1, 2, 4]);
        assert!(d.is_k_invariant(5) && d.is_k_invariant(3));
        assert!(!set(0, &[2]).is_k_invariant(2));
        for k in 1..8 {
            assert!(InvariantSet::naturals().is_k_invariant(k));
        }
    }

    #[test]
    fn generators_and_cogenerators() {
        let d = set(0, &[1, 2, 4]);
        assert_eq!(d.generators(5).unwrap(), vec![0, 3, 6, 7, 9]);
        let fig = set(0, &[1, 2]);
        assert_eq!(fig.generators(5).unwrap(), vec![0, 3, 4, 6, 7]);
        assert_eq!(fig.cogenerators(4).unwrap(), vec![-4, -1, 1, 2]);
        assert_eq!(
            InvariantSet::naturals().generators(3).unwrap(),
            vec![0, 1, 2]
        );
        assert_eq!(
            InvariantSet::naturals().cogenerators(3).unwrap(),
            vec![-3, -2, -1]
        );
        assert_eq!(
            set(0, &[2]).generators(2),
            Err(Error::NotInvariant { k: 2 })
        );
    }

    #[test]
    fn generators_by_definition() {
        let d = set(0, &[1, 2, 3, 5, 7, 11]);
        for k in [4usize, 6] {
            let direct: Vec<i64> = (d.minimum()..d.conductor() + k as i64)
                .filter(|&a| d.contains(a) && !d.contains(a - k as i64))
                .collect();
            assert_eq!(d.generators(k).unwrap(), direct);
        }
    }

    #[test]
    fn removal_and_shifts() {
        let d = set(0, &[1, 2, 4]);
        assert_eq!(d.without(0).unwrap(), set(3, &[4]));
        assert_eq!(d.without(7).unwrap(), set(0, &[1, 2, 4, 7]));
        assert!(d.without(4).is_err());
        assert_eq!(d.shifted(3).normalized(), d);
        assert_eq!(set(0, &[1]).balanced(), set(-1, &[0]));
        let b = set(5, &[6, 7, 9]).balanced();
        let nonneg_missing = (0..b.conductor()).filter(|&x| !b.contains(x)).count();
        let negative_present = (b.minimum()..0).filter(|&x| b.contains(x)).count();
        assert_eq!(nonneg_missing, negative_present);
    }
}
