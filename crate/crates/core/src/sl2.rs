//! sl2 subalgebras: defining vectors, Dynkin indices, marked diagrams and
//! the partition description for classical types.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{inverse, q, q_frac, q_to_i64, Q};
use crate::roots::{Family, LatticeVector, RootSystem, SimpleType};

/// The Cartan element `h` of an sl2 triple, in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DefiningVector {
    pub algebra: SimpleType,
    pub h: LatticeVector,
}

impl DefiningVector {
    pub fn new(algebra: SimpleType, h: LatticeVector) -> Result<Self> {
        if h.len() != algebra.rank() {
            return Err(Error::RankMismatch {
                expected: algebra.rank(),
                found: h.len(),
            });
        }
        Ok(DefiningVector { algebra, h })
    }

    /// The element with `alpha_i(h) = labels[i]`.
    pub fn from_labels(algebra: SimpleType, labels: &[i64]) -> Result<Self> {
        let rs = RootSystem::get(algebra);
        let n = rs.rank();
        if labels.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        // alpha_j(h) = sum_k cartan[k][j] h_k, so h = (C^T)^{-1} labels.
        let ct: Vec<Vec<Q>> = (0..n).map(|j| (0..n).map(|k| q(rs.cartan()[k][j])).collect()).collect();
        let inv = inverse(&ct).expect("Cartan matrix is invertible");
        let h = (0..n)
            .map(|k| {
                let x: Q = (0..n).map(|j| &inv[k][j] * q(labels[j])).sum();
                q_to_i64(&x).ok_or(Error::NonIntegralWeight)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DefiningVector {
            algebra,
            h: LatticeVector(h),
        })
    }

    /// `alpha_i(h)` for the simple roots.
    pub fn labels(&self) -> Vec<i64> {
        let rs = RootSystem::get(self.algebra);
        let n = rs.rank();
        (0..n)
            .map(|i| (0..n).map(|k| rs.cartan()[k][i] * self.h.0[k]).sum())
            .collect()
    }

    /// Weyl conjugate with nonnegative labels.
    pub fn dominant(&self) -> DefiningVector {
        let mut h = self.clone();
        loop {
            let labels = h.labels();
            let Some(i) = labels.iter().position(|&x| x < 0) else {
                return h;
            };
            h.h.0[i] -= labels[i];
        }
    }

    pub fn marked_diagram(&self) -> Result<MarkedDiagram> {
        MarkedDiagram::new(self.algebra, self.dominant().labels())
    }

    /// `alpha(h)` for every positive root.
    pub fn positive_root_values(&self) -> Vec<i64> {
        let rs = RootSystem::get(self.algebra);
        rs.positive_weights()
            .iter()
            .map(|w| w.0.iter().zip(&self.h.0).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Dynkin index `(1 / 2 m^vee) sum_{alpha > 0} alpha(h)^2`.
    pub fn dynkin_index(&self) -> Q {
        let rs = RootSystem::get(self.algebra);
        let s: i64 = self.positive_root_values().iter().map(|x| x * x).sum();
        q_frac(s, 2 * rs.dual_coxeter())
    }

    /// `(h, h) / 2` with short coroots of squared length 2.
    pub fn half_norm(&self) -> Q {
        let rs = RootSystem::get(self.algebra);
        rs.coroot_inner(&self.h, &self.h) / q(2)
    }
}

/// Labels `alpha_i(h)` of a dominant defining vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedDiagram {
    pub algebra: SimpleType,
    pub labels: Vec<u8>,
}

impl MarkedDiagram {
    pub fn new(algebra: SimpleType, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != algebra.rank() {
            return Err(Error::RankMismatch {
                expected: algebra.rank(),
                found: labels.len(),
            });
        }
        let labels = labels
            .into_iter()
            .map(|x| u8::try_from(x).ok().filter(|&x| x <= 2))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidArgument("labels of a marked diagram lie in {0,1,2}".into()))?;
        Ok(MarkedDiagram { algebra, labels })
    }

    pub fn defining_vector(&self) -> Result<DefiningVector> {
        let l: Vec<i64> = self.labels.iter().map(|&x| x as i64).collect();
        DefiningVector::from_labels(self.algebra, &l)
    }

    /// Node number (from 1) to label.
    pub fn to_map(&self) -> BTreeMap<usize, u8> {
        self.labels.iter().enumerate().map(|(i, &l)| (i + 1, l)).collect()
    }

    /// Text picture. For E-types the labels are laid out like the diagram,
    /// with node 2 under node 4.
    pub fn render(&self) -> String {
        let l = &self.labels;
        if self.algebra.family() == Family::E {
            let mut top: Vec<String> = vec![l[0].to_string()];
            top.extend(l[2..].iter().map(|x| x.to_string()));
            format!("{}\n    {}", top.join(" "), l[1])
        } else {
            l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `C(n + 1, 3)`, the Dynkin index of the irreducible `n`-dimensional
/// representation of sl2.
pub fn irrep_index_in_sln(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sl_{n} has no sl2 subalgebra")));
    }
    Ok((n + 1) * n * (n - 1) / 6)
}

/// For each node `i` of E8, `sum_{alpha > 0} <omega_i, alpha>^2 / 60`, the
/// index of the defining vector `omega_i`.
pub fn omega_index_row_e8() -> [i64; 8] {
    let rs = RootSystem::get(SimpleType::e8());
    let mut out = [0; 8];
    for (i, o) in out.iter_mut().enumerate() {
        let s: i64 = rs.positive_roots().iter().map(|r| r.0[i] * r.0[i]).sum();
        *o = s / 60;
    }
    out
}

/// Partition of `n` describing an sl2 inside a classical algebra by the
/// sizes of the Jordan blocks of `e` in the natural representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionSpec {
    parts: Vec<u32>,
}

/// Classical algebra whose natural representation a partition refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Natural {
    /// `sl_n`
    Linear,
    /// `so_n`
    Orthogonal,
    /// `sp_n`
    Symplectic,
}

impl PartitionSpec {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.first().copied().unwrap_or(0) < 2 {
            return Err(Error::InvalidPartition {
                parts,
                reason: "some part must exceed 1".into(),
            });
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Checks that the partition occurs for the given natural
    /// representation: even parts come with even multiplicity for `so_n`,
    /// odd parts for `sp_n`.
    pub fn check(&self, kind: Natural) -> Result<()> {
        let bad_parity = match kind {
            Natural::Linear => None,
            Natural::Orthogonal => Some(0),
            Natural::Symplectic => Some(1),
        };
        if let Some(par) = bad_parity {
            for (p, m) in self.multiplicities() {
                if p % 2 == par && m % 2 == 1 {
                    return Err(Error::InvalidPartition {
                        parts: self.parts.clone(),
                        reason: format!("part {p} occurs an odd number of times"),
                    });
                }
            }
        }
        if kind == Natural::Symplectic && self.total() % 2 == 1 {
            return Err(Error::InvalidPartition {
                parts: self.parts.clone(),
                reason: "symplectic partitions have even total".into(),
            });
        }
        Ok(())
    }

    /// `true` when every part is even with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        self.multiplicities().iter().all(|(p, m)| p % 2 == 0 && m % 2 == 0)
    }

    /// Eigenvalues of `h` on the natural representation, decreasing.
    pub fn eigenvalues(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&p| {
                let p = p as i64;
                (0..p).map(move |k| p - 1 - 2 * k)
            })
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Index in `sl_n`: `sum C(n_i + 1, 3)`.
    pub fn index_in_sln(&self) -> u64 {
        self.parts
            .iter()
            .map(|&p| if p < 2 { 0 } else { irrep_index_in_sln(p as u64).expect("p >= 2") })
            .sum()
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    /// Parses `3+1^10`, `2^4+1^5` or `2,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse partition `{s}`"));
        let mut parts = Vec::new();
        for tok in s.split(['+', ',']) {
            let tok = tok.trim();
            let (p, m) = match tok.split_once('^') {
                Some((p, m)) => (p, m.trim().parse::<u32>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: u32 = p.trim().parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(p, m as usize));
        }
        PartitionSpec::new(parts)
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self
            .multiplicities()
            .iter()
            .rev()
            .map(|(p, m)| if *m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        f.write_str(&strs.join("+"))
    }
}

/// Index of the sl2 with partition `p` inside `so_n`, that is
/// `sum C(n_i + 1, 3) / 2`.
pub fn partition_index_son(p: &PartitionSpec) -> Result<Q> {
    p.check(Natural::Orthogonal)?;
    Ok(q_frac(p.index_in_sln() as i64, 2))
}

fn natural_of(t: SimpleType) -> Result<(Natural, u32)> {
    let n = t.rank() as u32;
    Ok(match t.family() {
        Family::A => (Natural::Linear, n + 1),
        Family::B => (Natural::Orthogonal, 2 * n + 1),
        Family::C => (Natural::Symplectic, 2 * n),
        Family::D => (Natural::Orthogonal, 2 * n),
        _ => return Err(Error::UnsupportedType(format!("{t} is not classical"))),
    })
}

/// Defining vectors, in simple-coroot coordinates of `t`, of the sl2 with
/// partition `p`. Very even partitions in type D give two.
pub fn partition_defining_vectors(t: SimpleType, p: &PartitionSpec) -> Result<Vec<DefiningVector>> {
    let (kind, size) = natural_of(t)?;
    if p.total() != size {
        return Err(Error::InvalidPartition {
            parts: p.parts.clone(),
            reason: format!("{t} needs a partition of {size}"),
        });
    }
    p.check(kind)?;
    let n = t.rank();
    let ev = p.eigenvalues();
    let h: Vec<i64> = ev[..n.min(ev.len())].to_vec();
    let prefix = |k: usize| -> i64 { h[..k].iter().sum() };
    let halve = |x: i64| -> Result<i64> {
        if x % 2 == 0 {
            Ok(x / 2)
        } else {
            Err(Error::NonIntegralWeight)
        }
    };
    let coords = || -> Result<Vec<i64>> {
        Ok(match t.family() {
            Family::B => {
                let mut c: Vec<i64> = (1..n).map(prefix).collect();
                c.push(halve(prefix(n))?);
                c
            }
            _ => (1..=n).map(prefix).collect(),
        })
    };
    let mut out = Vec::new();
    if t.family() == Family::D {
        let d_coords = |h: &[i64]| -> Result<Vec<i64>> {
            let pre = |k: usize| -> i64 { h[..k].iter().sum() };
            let mut c: Vec<i64> = (1..=n - 2).map(pre).collect();
            c.push(halve(pre(n - 1) - h[n - 1])?);
            c.push(halve(pre(n))?);
            Ok(c)
        };
        out.push(d_coords(&h)?);
        if p.is_very_even() {
            let mut h2 = h.clone();
            h2[n - 1] = -h2[n - 1];
            out.push(d_coords(&h2)?);
        }
    } else {
        out.push(coords()?);
    }
    out.into_iter()
        .map(|c| DefiningVector::new(t, LatticeVector(c)))
        .collect()
}

/// All partitions of `n` with parts at most `max`, in decreasing order.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every nonzero sl2 of a classical algebra, by partition, with its marked
/// diagram.
pub fn classical_sl2s(t: SimpleType) -> Result<Vec<(PartitionSpec, MarkedDiagram)>> {
    let (kind, size) = natural_of(t)?;
    let mut out = Vec::new();
    for parts in partitions(size, size) {
        let Ok(p) = PartitionSpec::new(parts) else { continue };
        if p.check(kind).is_err() {
            continue;
        }
        for dv in partition_defining_vectors(t, &p)? {
            out.push((p.clone(), dv.marked_diagram()?));
        }
    }
    Ok(out)
}

/// Defining vector in ambient coordinates of the sl2 with partition `p`
/// inside a subalgebra of type B with the given simple coroots.
pub fn defining_vector_from_partition(p: &PartitionSpec, simple_coroots: &[LatticeVector]) -> Result<LatticeVector> {
    let k = simple_coroots.len();
    let b = SimpleType::new(Family::B, k)?;
    if p.total() as usize != 2 * k + 1 {
        return Err(Error::RankMismatch {
            expected: (p.total() as usize).saturating_sub(1) / 2,
            found: k,
        });
    }
    let dv = partition_defining_vectors(b, p)?.remove(0);
    let n = simple_coroots.first().map_or(0, |c| c.len());
    let mut acc = LatticeVector::zero(n);
    for (c, beta) in dv.h.0.iter().zip(simple_coroots) {
        acc = &acc + &(*c * beta);
    }
    Ok(acc)
}

/// Marked diagrams of the sl2 subalgebras of `t` of Dynkin index at most
/// `max_index`, ordered by index and then by labels.
///
/// Every labeling by `{0,1,2}` is a candidate. For simply-laced exceptional
/// types a candidate is kept when an sl2 triple with that defining vector
/// exists; for classical types when it comes from a partition.
pub fn classify_sl2_upto_index(t: SimpleType, max_index: u64, seed: u64) -> Result<Vec<(MarkedDiagram, Q)>> {
    let n = t.rank();
    let genuine: Option<BTreeSet<MarkedDiagram>> = match t.family() {
        Family::A | Family::B | Family::C | Family::D => {
            Some(classical_sl2s(t)?.into_iter().map(|(_, d)| d).collect())
        }
        Family::E => None,
        Family::F | Family::G => {
            return Err(Error::UnsupportedType(format!("sl2 classification in {t}")));
        }
    };
    let alg = if genuine.is_none() {
        Some(ChevalleyAlgebra::new(t)?)
    } else {
        None
    };
    let alg_ref: Option<&ChevalleyAlgebra> = if t == SimpleType::e8() {
        Some(ChevalleyAlgebra::e8())
    } else {
        alg.as_ref()
    };
    let limit = q(max_index as i64);
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let labels: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 3) as i64;
                c /= 3;
                d
            })
            .collect();
        let Ok(dv) = DefiningVector::from_labels(t, &labels) else { continue };
        let idx = dv.dynkin_index();
        if idx > limit || idx.is_zero() {
            continue;
        }
        let md = MarkedDiagram::new(t, labels)?;
        let ok = match (&genuine, alg_ref) {
            (Some(set), _) => set.contains(&md),
            (None, Some(g)) => g.sl2_triple(&dv.h, &[], seed).is_ok(),
            (None, None) => unreachable!(),
        };
        if ok {
            out.push((md, idx));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.labels.cmp(&b.0.labels)));
    Ok(out)
}

/// Same as [`classify_sl2_upto_index`], keeping only index exactly `index`.
pub fn classify_sl2_of_index(t: SimpleType, index: u64, seed: u64) -> Result<Vec<MarkedDiagram>> {
    Ok(classify_sl2_upto_index(t, index, seed)?
        .into_iter()
        .filter(|(_, i)| *i == q(index as i64))
        .map(|(d, _)| d)
        .collect())
}
