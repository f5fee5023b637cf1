//! Decomposing the adjoint representation of E8 under commuting sl2
//! subalgebras and their centralizer, and branching along embeddings of
//! Cartan subalgebras.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, Identification, Sl2Triple};
use crate::error::{Error, Result};
use crate::linalg::{q, q_to_i64, Q};
use crate::reps::RepMultiset;
use crate::roots::{Family, LatticeVector, ProductType, SimpleType, WeightVector};

/// Weights of tuples of commuting sl2 subalgebras, with multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiset {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, w: &[i64]) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(w, m)| self.get(&w.iter().map(|x| -x).collect::<Vec<_>>()) == *m)
    }
}

/// Weights `(alpha(h_1), ..., alpha(h_k))` over all roots `alpha` of `g`,
/// together with the zero weight once per Cartan generator.
pub fn sl2_weights(g: &ChevalleyAlgebra, hs: &[LatticeVector]) -> Result<WeightMultiset> {
    for h in hs {
        if h.len() != g.rank() {
            return Err(Error::RankMismatch {
                expected: g.rank(),
                found: h.len(),
            });
        }
    }
    let mut out = WeightMultiset::default();
    for w in g.root_weights() {
        let key: Vec<i64> = hs
            .iter()
            .map(|h| w.0.iter().zip(&h.0).map(|(a, b)| a * b).sum())
            .collect();
        *out.entries.entry(key).or_insert(0) += 1;
    }
    *out.entries.entry(vec![0; hs.len()]).or_insert(0) += g.rank() as u64;
    Ok(out)
}

/// Checks that the given triples pairwise commute.
pub fn check_commuting(g: &ChevalleyAlgebra, triples: &[Sl2Triple]) -> Result<()> {
    for (i, a) in triples.iter().enumerate() {
        for b in &triples[i + 1..] {
            for x in a.generators() {
                for y in b.generators() {
                    if !g.bracket(&x, &y).is_zero() {
                        return Err(Error::NonCommuting);
                    }
                }
            }
        }
    }
    Ok(())
}

fn sl2_power(k: usize) -> ProductType {
    ProductType(vec![SimpleType::new(Family::A, 1).expect("A1"); k])
}

/// Multiplicity spaces of the irreducible pieces `m ⊗ n` (dimensions of the
/// two sl2 factors), optionally refined to representations of the
/// centralizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BiTableRepr", into = "BiTableRepr")]
pub struct BiTable {
    pub dims: BTreeMap<(u32, u32), u64>,
    pub contents: Option<BTreeMap<(u32, u32), RepMultiset>>,
}

#[derive(Serialize, Deserialize)]
struct ContentEntry {
    #[serde(rename = "type")]
    ty: ProductType,
    weight: WeightVector,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct BiTableRepr {
    dims: Vec<(u32, u32, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    contents: Option<Vec<(u32, u32, Vec<ContentEntry>)>>,
}

impl From<BiTable> for BiTableRepr {
    fn from(t: BiTable) -> Self {
        BiTableRepr {
            dims: t.dims.iter().map(|(&(m, n), &d)| (m, n, d)).collect(),
            contents: t.contents.map(|c| {
                c.into_iter()
                    .map(|((m, n), r)| {
                        let entries = r
                            .iter()
                            .map(|(l, k)| ContentEntry {
                                ty: l.algebra.clone(),
                                weight: l.weight.clone(),
                                mult: k,
                            })
                            .collect();
                        (m, n, entries)
                    })
                    .collect()
            }),
        }
    }
}

impl TryFrom<BiTableRepr> for BiTable {
    type Error = Error;
    fn try_from(r: BiTableRepr) -> Result<Self> {
        let dims = r.dims.into_iter().map(|(m, n, d)| ((m, n), d)).collect();
        let contents = match r.contents {
            None => None,
            Some(cs) => {
                let mut out = BTreeMap::new();
                for (m, n, entries) in cs {
                    let ty = entries
                        .first()
                        .map(|e| e.ty.clone())
                        .ok_or_else(|| Error::InvalidArgument("empty contents cell".into()))?;
                    let mut rep = RepMultiset::new(ty);
                    for e in entries {
                        rep.add(crate::reps::IrrepLabel::new(e.ty, e.weight)?, e.mult)?;
                    }
                    out.insert((m, n), rep);
                }
                Some(out)
            }
        };
        Ok(BiTable { dims, contents })
    }
}

impl BiTable {
    pub fn dim(&self, m: u32, n: u32) -> u64 {
        self.dims.get(&(m, n)).copied().unwrap_or(0)
    }

    pub fn contents(&self, m: u32, n: u32) -> Option<&RepMultiset> {
        self.contents.as_ref().and_then(|c| c.get(&(m, n)))
    }

    /// `sum m * n * dim V_{m,n}`.
    pub fn total_dimension(&self) -> u64 {
        self.dims.iter().map(|(&(m, n), &d)| m as u64 * n as u64 * d).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().all(|(&(m, n), &d)| self.dim(n, m) == d)
    }

    /// Weights of `⊕ (m ⊗ n)^{dim V_{m,n}}`.
    pub fn weights(&self) -> WeightMultiset {
        let mut out = WeightMultiset::default();
        for (&(m, n), &d) in &self.dims {
            for a in 0..m as i64 {
                for b in 0..n as i64 {
                    let w = vec![m as i64 - 1 - 2 * a, n as i64 - 1 - 2 * b];
                    *out.entries.entry(w).or_insert(0) += d;
                }
            }
        }
        out
    }

    pub fn max_m(&self) -> u32 {
        self.dims.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_n(&self) -> u32 {
        self.dims.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Aligned text table, one row per `n` and one column per `m`.
    pub fn render(&self) -> String {
        let (mm, nn) = (self.max_m(), self.max_n());
        let width = self
            .dims
            .values()
            .map(|d| d.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut s = format!("{:>5}", "");
        for m in 1..=mm {
            s.push_str(&format!(" {:>width$}", format!("m={m}")));
        }
        s.push('\n');
        for n in 1..=nn {
            s.push_str(&format!("{:>5}", format!("n={n}")));
            for m in 1..=mm {
                s.push_str(&format!(" {:>width$}", self.dim(m, n)));
            }
            s.push('\n');
        }
        if let Some(c) = &self.contents {
            for ((m, n), r) in c {
                s.push_str(&format!("V({m},{n}) = {r}\n"));
            }
        }
        s
    }
}

impl fmt::Display for BiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn to_character(w: &WeightMultiset) -> BTreeMap<WeightVector, i64> {
    w.entries
        .iter()
        .map(|(k, &m)| (WeightVector(k.clone()), m as i64))
        .collect()
}

/// Isotypic multiplicities of a representation of `sl2^k` from its weights:
/// the map from the tuple of irreducible dimensions to the multiplicity.
pub fn peel_sl2(w: &WeightMultiset) -> Result<BTreeMap<Vec<u32>, u64>> {
    let k = w.entries.keys().next().map_or(0, |x| x.len());
    let rep = RepMultiset::from_character(sl2_power(k), &to_character(w))?;
    Ok(rep
        .iter()
        .map(|(l, m)| (l.weight.0.iter().map(|&x| x as u32 + 1).collect(), m))
        .collect())
}

/// The table `dim V_{m,n}` of a representation of `sl2 × sl2`.
pub fn peel_to_bitable(w: &WeightMultiset) -> Result<BiTable> {
    if w.entries.keys().any(|k| k.len() != 2) {
        return Err(Error::InvalidArgument("expected weights of sl2 × sl2".into()));
    }
    let dims = peel_sl2(w)?
        .into_iter()
        .map(|(k, m)| ((k[0], k[1]), m))
        .collect();
    Ok(BiTable { dims, contents: None })
}

/// Decomposes the adjoint representation of `g` under `sl2^k × Z`, where
/// the sl2 factors have defining vectors `hs` and `Z` is the centralizer
/// described by `z`. Returns, for each tuple of sl2 dimensions, the
/// multiplicity space as a representation of `Z`.
pub fn refine(g: &ChevalleyAlgebra, hs: &[LatticeVector], z: &Identification) -> Result<BTreeMap<Vec<u32>, RepMultiset>> {
    let k = hs.len();
    let ty = sl2_power(k).concat(&z.ty);
    let mut ch: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for w in g.root_weights() {
        let mut key: Vec<i64> = hs
            .iter()
            .map(|h| w.0.iter().zip(&h.0).map(|(a, b)| a * b).sum())
            .collect();
        key.extend(z.restrict(w)?.0);
        *ch.entry(WeightVector(key)).or_insert(0) += 1;
    }
    *ch.entry(WeightVector::zero(ty.rank())).or_insert(0) += g.rank() as i64;
    let rep = RepMultiset::from_character(ty.clone(), &ch)?;
    let mut out: BTreeMap<Vec<u32>, RepMultiset> = BTreeMap::new();
    for (l, m) in rep.iter() {
        let key: Vec<u32> = l.weight.0[..k].iter().map(|&x| x as u32 + 1).collect();
        let zl = crate::reps::IrrepLabel::new(z.ty.clone(), WeightVector(l.weight.0[k..].to_vec()))?;
        out.entry(key)
            .or_insert_with(|| RepMultiset::new(z.ty.clone()))
            .add(zl, m)?;
    }
    Ok(out)
}

/// [`refine`] for a pair of sl2 subalgebras, as a [`BiTable`].
pub fn refine_bitable(g: &ChevalleyAlgebra, h1: &LatticeVector, h2: &LatticeVector, z: &Identification) -> Result<BiTable> {
    let cells = refine(g, &[h1.clone(), h2.clone()], z)?;
    let mut dims = BTreeMap::new();
    let mut contents = BTreeMap::new();
    for (k, r) in cells {
        dims.insert((k[0], k[1]), r.dimension()?);
        contents.insert((k[0], k[1]), r);
    }
    Ok(BiTable {
        dims,
        contents: Some(contents),
    })
}

/// Restriction of weights from an algebra `source` to a subalgebra
/// `target` whose Cartan subalgebra lies in that of `source`.
///
/// Row `i` of `matrix` holds the `i`-th simple coroot of `target` in the
/// simple coroots of `source`, so a weight `lambda` restricts to
/// `matrix * lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanEmbedding {
    pub source: ProductType,
    pub target: ProductType,
    pub matrix: Vec<Vec<Q>>,
}

/// Simple coroots of `D6` in orthogonal coordinates to simple-coroot
/// coordinates.
fn d6_coroot(v: [i64; 6]) -> Vec<Q> {
    let pre = |k: usize| -> i64 { v[..k].iter().sum() };
    let mut c: Vec<Q> = (1..=4).map(|k| q(pre(k))).collect();
    c.push(Q::new((pre(5) - v[5]).into(), 2.into()));
    c.push(Q::new(pre(6).into(), 2.into()));
    c
}

impl CartanEmbedding {
    pub fn new(source: ProductType, target: ProductType, matrix: Vec<Vec<Q>>) -> Result<Self> {
        if matrix.len() != target.rank() {
            return Err(Error::RankMismatch {
                expected: target.rank(),
                found: matrix.len(),
            });
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != source.rank()) {
            return Err(Error::RankMismatch {
                expected: source.rank(),
                found: r.len(),
            });
        }
        Ok(CartanEmbedding { source, target, matrix })
    }

    fn so12(target: &str, coroots: &[[i64; 6]]) -> Self {
        CartanEmbedding {
            source: "D6".parse().expect("D6"),
            target: target.parse().expect("valid type"),
            matrix: coroots.iter().map(|&v| d6_coroot(v)).collect(),
        }
    }

    /// `so11 ⊂ so12`, fixing one basis vector of the natural module.
    pub fn so12_so11() -> Self {
        Self::so12(
            "B5",
            &[
                [1, -1, 0, 0, 0, 0],
                [0, 1, -1, 0, 0, 0],
                [0, 0, 1, -1, 0, 0],
                [0, 0, 0, 1, -1, 0],
                [0, 0, 0, 0, 2, 0],
            ],
        )
    }

    /// `so9 ⊕ so3 ⊂ so12`, as `B4×A1`.
    pub fn so12_so9_so3() -> Self {
        Self::so12(
            "B4×A1",
            &[
                [1, -1, 0, 0, 0, 0],
                [0, 1, -1, 0, 0, 0],
                [0, 0, 1, -1, 0, 0],
                [0, 0, 0, 2, 0, 0],
                [0, 0, 0, 0, 2, 0],
            ],
        )
    }

    /// `so5 ⊕ so7 ⊂ so12`, as `B2×B3`.
    pub fn so12_so5_so7() -> Self {
        Self::so12(
            "B2×B3",
            &[
                [1, -1, 0, 0, 0, 0],
                [0, 2, 0, 0, 0, 0],
                [0, 0, 1, -1, 0, 0],
                [0, 0, 0, 1, -1, 0],
                [0, 0, 0, 0, 2, 0],
            ],
        )
    }

    /// `so11 ⊃ so9`, fixing two basis vectors of the natural module.
    pub fn so11_so9() -> Self {
        let m = vec![
            vec![q(1), q(0), q(0), q(0), q(0)],
            vec![q(0), q(1), q(0), q(0), q(0)],
            vec![q(0), q(0), q(1), q(0), q(0)],
            vec![q(0), q(0), q(0), q(2), q(1)],
        ];
        CartanEmbedding {
            source: "B5".parse().expect("B5"),
            target: "B4".parse().expect("B4"),
            matrix: m,
        }
    }

    /// The diagonal `sp4 ⊂ sp4 ⊕ sp4`.
    pub fn sp4_diagonal() -> Self {
        let m = (0..2)
            .map(|i| (0..4).map(|j| if j % 2 == i { q(1) } else { q(0) }).collect())
            .collect();
        CartanEmbedding {
            source: "C2×C2".parse().expect("C2×C2"),
            target: "C2".parse().expect("C2"),
            matrix: m,
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CartanEmbedding) -> Result<CartanEmbedding> {
        if next.source != self.target {
            return Err(Error::MixedAlgebras(self.target.to_string(), next.source.to_string()));
        }
        let matrix = next
            .matrix
            .iter()
            .map(|row| {
                (0..self.source.rank())
                    .map(|j| row.iter().zip(&self.matrix).map(|(a, r)| a * &r[j]).sum())
                    .collect()
            })
            .collect();
        CartanEmbedding::new(self.source.clone(), next.target.clone(), matrix)
    }

    pub fn restrict(&self, w: &WeightVector) -> Result<WeightVector> {
        if w.len() != self.source.rank() {
            return Err(Error::RankMismatch {
                expected: self.source.rank(),
                found: w.len(),
            });
        }
        self.matrix
            .iter()
            .map(|row| {
                let x: Q = row.iter().zip(&w.0).map(|(a, &b)| a * q(b)).sum();
                q_to_i64(&x).ok_or(Error::NonIntegralWeight)
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }

    /// Restriction of a representation of `source` to `target`.
    pub fn branch(&self, rep: &RepMultiset) -> Result<RepMultiset> {
        if rep.algebra() != &self.source {
            return Err(Error::MixedAlgebras(rep.algebra().to_string(), self.source.to_string()));
        }
        let mut ch: BTreeMap<WeightVector, i64> = BTreeMap::new();
        for (w, m) in rep.character()? {
            *ch.entry(self.restrict(&w)?).or_insert(0) += m;
        }
        RepMultiset::from_character(self.target.clone(), &ch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::IrrepLabel;

    fn vector12() -> RepMultiset {
        let d6: ProductType = "D6".parse().unwrap();
        RepMultiset::from_labels(d6.clone(), [IrrepLabel::new(d6, WeightVector(vec![1, 0, 0, 0, 0, 0])).unwrap()]).unwrap()
    }

    #[test]
    fn vector_representation_branches() {
        assert_eq!(CartanEmbedding::so12_so11().branch(&vector12()).unwrap().to_string(), "1 ⊕ 11");
        assert_eq!(
            CartanEmbedding::so12_so9_so3().branch(&vector12()).unwrap().to_string(),
            "(1,3) ⊕ (9,1)"
        );
        assert_eq!(
            CartanEmbedding::so12_so5_so7().branch(&vector12()).unwrap().to_string(),
            "(5,1) ⊕ (1,7)"
        );
    }

    #[test]
    fn composition_matches_direct_restriction() {
        let direct = CartanEmbedding::so12_so9_so3();
        let chain = CartanEmbedding::so12_so11().then(&CartanEmbedding::so11_so9()).unwrap();
        assert_eq!(chain.matrix[..], direct.matrix[..4]);
    }

    #[test]
    fn bitable_roundtrip() {
        let t = BiTable {
            dims: BTreeMap::from([((1, 1), 3), ((2, 1), 2), ((3, 2), 1)]),
            contents: None,
        };
        assert_eq!(peel_to_bitable(&t.weights()).unwrap(), t);
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with("{\"dims\":[[1,1,3]"));
        assert_eq!(serde_json::from_str::<BiTable>(&s).unwrap(), t);
    }
}
