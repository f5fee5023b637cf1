//! Irreducible representations of semisimple algebras and multisets of them.
//!
//! A weight of a product algebra is the concatenation of one weight per
//! simple factor.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{ProductType, RootSystem, SimpleType, WeightVector};

fn systems(t: &ProductType) -> Vec<Arc<RootSystem>> {
    t.factors().iter().map(|&s| RootSystem::get(s)).collect()
}

/// Splits a concatenated weight into one weight per factor.
pub fn split_weight(t: &ProductType, w: &WeightVector) -> Result<Vec<WeightVector>> {
    if w.len() != t.rank() {
        return Err(Error::RankMismatch {
            expected: t.rank(),
            found: w.len(),
        });
    }
    let mut out = Vec::with_capacity(t.factors().len());
    let mut at = 0;
    for f in t.factors() {
        out.push(WeightVector(w.0[at..at + f.rank()].to_vec()));
        at += f.rank();
    }
    Ok(out)
}

pub fn join_weights(parts: &[WeightVector]) -> WeightVector {
    WeightVector(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
}

/// Doubled `rho^vee` level of a concatenated weight.
pub fn product_level2(t: &ProductType, w: &WeightVector) -> i64 {
    let mut at = 0;
    let mut s = 0;
    for f in t.factors() {
        let rs = RootSystem::get(*f);
        s += rs.level2(&WeightVector(w.0[at..at + f.rank()].to_vec()));
        at += f.rank();
    }
    s
}

/// Irreducible representation of a product algebra, given by its highest
/// weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub algebra: ProductType,
    pub weight: WeightVector,
}

impl IrrepLabel {
    pub fn new(algebra: ProductType, weight: WeightVector) -> Result<Self> {
        if weight.len() != algebra.rank() {
            return Err(Error::RankMismatch {
                expected: algebra.rank(),
                found: weight.len(),
            });
        }
        if !weight.is_dominant() {
            return Err(Error::NotDominant(weight.0));
        }
        Ok(IrrepLabel { algebra, weight })
    }

    pub fn simple(t: SimpleType, weight: Vec<i64>) -> Result<Self> {
        IrrepLabel::new(ProductType::simple(t), WeightVector(weight))
    }

    /// Trivial representation.
    pub fn trivial(algebra: ProductType) -> Self {
        let n = algebra.rank();
        IrrepLabel {
            algebra,
            weight: WeightVector::zero(n),
        }
    }

    pub fn parts(&self) -> Vec<WeightVector> {
        split_weight(&self.algebra, &self.weight).expect("rank checked on construction")
    }

    pub fn dimension(&self) -> Result<u64> {
        let mut d: u64 = 1;
        for (rs, w) in systems(&self.algebra).iter().zip(self.parts()) {
            d = d
                .checked_mul(rs.weyl_dimension(&w)?)
                .ok_or(Error::Overflow("dimension"))?;
        }
        Ok(d)
    }

    /// Highest weight of the dual representation.
    pub fn dual(&self) -> IrrepLabel {
        let parts: Vec<WeightVector> = systems(&self.algebra)
            .iter()
            .zip(self.parts())
            .map(|(rs, w)| rs.dual_weight(&w))
            .collect();
        IrrepLabel {
            algebra: self.algebra.clone(),
            weight: join_weights(&parts),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// All weights with multiplicity.
    pub fn character(&self) -> Result<BTreeMap<WeightVector, u64>> {
        let mut acc: BTreeMap<WeightVector, u64> = BTreeMap::from([(WeightVector(Vec::new()), 1)]);
        for (rs, w) in systems(&self.algebra).iter().zip(self.parts()) {
            let ws = rs.weight_system(&w)?;
            let mut next = BTreeMap::new();
            for (a, ma) in &acc {
                for (b, mb) in &ws {
                    let mut v = a.0.clone();
                    v.extend_from_slice(&b.0);
                    *next.entry(WeightVector(v)).or_insert(0) += ma * mb;
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Name built from dimensions, e.g. `56`, `(4,8)` or `32′`.
    pub fn name(&self) -> String {
        let names: Vec<String> = self
            .algebra
            .factors()
            .iter()
            .zip(self.parts())
            .map(|(&t, w)| simple_irrep_name(t, &w))
            .collect();
        match names.len() {
            0 => "1".to_string(),
            1 => names.into_iter().next().expect("one"),
            _ => format!("({})", names.join(",")),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Dimension of an irreducible representation of a simple algebra, primed
/// when other irreducibles share that dimension.
///
/// Irreducibles of equal dimension are ordered by coordinate sum, then by
/// the reversed coordinate vector, largest first; the `k`-th gets `k` primes.
/// For D6 this names the half-spin representations `32` (highest weight
/// `omega_6`) and `32′` (`omega_5`).
pub fn simple_irrep_name(t: SimpleType, w: &WeightVector) -> String {
    let rs = RootSystem::get(t);
    let Ok(d) = rs.weyl_dimension(w) else {
        return format!("[{w}]");
    };
    let mut same = Vec::new();
    let mut stack = vec![WeightVector::zero(t.rank())];
    let mut seen = std::collections::HashSet::new();
    while let Some(v) = stack.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        let dv = rs.weyl_dimension(&v).unwrap_or(u64::MAX);
        if dv > d {
            continue;
        }
        if dv == d {
            same.push(v.clone());
        }
        for i in 0..t.rank() {
            let mut u = v.clone();
            u.0[i] += 1;
            stack.push(u);
        }
    }
    let key = |v: &WeightVector| {
        let s: i64 = v.0.iter().sum();
        let mut r = v.0.clone();
        r.reverse();
        (s, std::cmp::Reverse(r))
    };
    same.sort_by_key(key);
    let primes = same.iter().position(|v| v == w).unwrap_or(0);
    format!("{d}{}", "′".repeat(primes))
}

/// A finite direct sum of irreducibles of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RepMultisetRepr", into = "RepMultisetRepr")]
pub struct RepMultiset {
    algebra: ProductType,
    entries: BTreeMap<WeightVector, u64>,
}

#[derive(Serialize, Deserialize)]
struct RepEntry {
    name: String,
    weight: WeightVector,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct RepMultisetRepr {
    algebra: ProductType,
    entries: Vec<RepEntry>,
}

impl From<RepMultiset> for RepMultisetRepr {
    fn from(r: RepMultiset) -> Self {
        let entries = r
            .iter()
            .map(|(l, m)| RepEntry {
                name: l.name(),
                weight: l.weight.clone(),
                mult: m,
            })
            .collect();
        RepMultisetRepr {
            algebra: r.algebra,
            entries,
        }
    }
}

impl TryFrom<RepMultisetRepr> for RepMultiset {
    type Error = Error;
    fn try_from(r: RepMultisetRepr) -> Result<Self> {
        let mut out = RepMultiset::new(r.algebra.clone());
        for e in r.entries {
            out.add(IrrepLabel::new(r.algebra.clone(), e.weight)?, e.mult)?;
        }
        Ok(out)
    }
}

impl RepMultiset {
    pub fn new(algebra: ProductType) -> Self {
        RepMultiset {
            algebra,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_labels<I: IntoIterator<Item = IrrepLabel>>(algebra: ProductType, labels: I) -> Result<Self> {
        let mut out = RepMultiset::new(algebra);
        for l in labels {
            out.add(l, 1)?;
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &ProductType {
        &self.algebra
    }

    pub fn add(&mut self, label: IrrepLabel, mult: u64) -> Result<()> {
        if label.algebra != self.algebra {
            return Err(Error::MixedAlgebras(
                self.algebra.to_string(),
                label.algebra.to_string(),
            ));
        }
        if mult > 0 {
            *self.entries.entry(label.weight).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Direct sum.
    pub fn sum(&self, other: &RepMultiset) -> Result<RepMultiset> {
        let mut out = self.clone();
        for (l, m) in other.iter() {
            out.add(l, m)?;
        }
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (IrrepLabel, u64)> + '_ {
        self.entries.iter().map(|(w, &m)| {
            (
                IrrepLabel {
                    algebra: self.algebra.clone(),
                    weight: w.clone(),
                },
                m,
            )
        })
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        if label.algebra != self.algebra {
            return 0;
        }
        self.entries.get(&label.weight).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> Result<u64> {
        let mut d: u64 = 0;
        for (l, m) in self.iter() {
            d = l
                .dimension()?
                .checked_mul(m)
                .and_then(|x| x.checked_add(d))
                .ok_or(Error::Overflow("dimension"))?;
        }
        Ok(d)
    }

    pub fn dual(&self) -> RepMultiset {
        let mut out = RepMultiset::new(self.algebra.clone());
        for (l, m) in self.iter() {
            out.add(l.dual(), m).expect("same algebra");
        }
        out
    }

    /// Weights with multiplicity.
    pub fn character(&self) -> Result<BTreeMap<WeightVector, i64>> {
        let mut out: BTreeMap<WeightVector, i64> = BTreeMap::new();
        for (l, m) in self.iter() {
            for (w, k) in l.character()? {
                *out.entry(w).or_insert(0) += (k * m) as i64;
            }
        }
        Ok(out)
    }

    /// Decomposes a character into irreducibles by repeatedly removing the
    /// character of a highest remaining weight.
    ///
    /// The weight removed first is the one of largest `rho^vee` level, ties
    /// broken by the lexicographically largest coordinates.
    pub fn from_character(algebra: ProductType, character: &BTreeMap<WeightVector, i64>) -> Result<Self> {
        let mut rest: BTreeMap<WeightVector, i64> =
            character.iter().filter(|(_, &m)| m != 0).map(|(w, &m)| (w.clone(), m)).collect();
        if let Some((w, _)) = rest.iter().find(|(_, &m)| m < 0) {
            return Err(Error::InconsistentMultiset(format!("negative multiplicity at {w}")));
        }
        let mut out = RepMultiset::new(algebra.clone());
        while !rest.is_empty() {
            let top = rest
                .keys()
                .max_by(|a, b| {
                    product_level2(&algebra, a)
                        .cmp(&product_level2(&algebra, b))
                        .then_with(|| a.cmp(b))
                })
                .expect("nonempty")
                .clone();
            let m = rest[&top];
            let label = IrrepLabel::new(algebra.clone(), top.clone())
                .map_err(|_| Error::InconsistentMultiset(format!("top weight {top} is not dominant")))?;
            for (w, k) in label.character()? {
                let e = rest.entry(w.clone()).or_insert(0);
                *e -= m * k as i64;
                if *e < 0 {
                    return Err(Error::InconsistentMultiset(format!(
                        "removing {} drives weight {w} negative",
                        label.name()
                    )));
                }
                if *e == 0 {
                    rest.remove(&w);
                }
            }
            out.add(label, m as u64)?;
        }
        Ok(out)
    }
}

impl fmt::Display for RepMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut parts: Vec<(u64, String)> = self
            .iter()
            .map(|(l, m)| {
                let d = l.dimension().unwrap_or(0);
                let s = if m == 1 { l.name() } else { format!("{m}·{}", l.name()) };
                (d, s)
            })
            .collect();
        parts.sort();
        let strs: Vec<String> = parts.into_iter().map(|(_, s)| s).collect();
        f.write_str(&strs.join(" ⊕ "))
    }
}
