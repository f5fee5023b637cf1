//! Candidate embeddings `SL2 × G` in the forms of E8, and the check that
//! none of them has a chiral fermion representation.
//!
//! A candidate is given by the Dynkin indices of one or two commuting sl2
//! subalgebras of the complex Lie algebra E8 and by the real form of E8 it
//! lives in. Which real forms host which subgroups, and the maximal compact
//! group `G_max` commuting with the sl2, are cataloged data; everything
//! else (centralizers, isotypic tables, branchings, reality) is computed.
//!
//! For the complex group viewed as a real group the two sl2 factors are a
//! holomorphic and an antiholomorphic copy, so the isotypic table of the
//! real group is `T ⊕ Tᵀ` with the second summand dualised, where `T` is
//! the complex table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, Identification, Sl2Triple};
use crate::decomp::{check_commuting, refine, BiTable, CartanEmbedding};
use crate::error::{Error, Result};
use crate::reality::{frobenius_schur, minus_one_in_weyl, self_conjugate, CenterElement, RealityType};
use crate::reps::RepMultiset;
use crate::roots::{LatticeVector, ProductType, RootSystem, SimpleType};

/// Which isotypic pieces are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// No piece `m ⊗ n` with `m + n > 4`.
    Toe2,
    /// No piece `m ⊗ n` with `m ≥ 4` or `n ≥ 4`.
    Toe2Prime,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "toe2" => Ok(Mode::Toe2),
            "toe2prime" | "toe2'" => Ok(Mode::Toe2Prime),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Toe2 => "toe2",
            Mode::Toe2Prime => "toe2prime",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    /// The split real form, `E8(8)`.
    #[serde(rename = "E8(8)")]
    Split,
    /// The real form with maximal compact `E7 × SU(2)`, `E8(−24)`.
    #[serde(rename = "E8(−24)")]
    Minus24,
    /// Complex E8 viewed as a real group.
    #[serde(rename = "R(E8,C)")]
    Complex,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Split => "E8(8)",
            Ambient::Minus24 => "E8(−24)",
            Ambient::Complex => "R(E8,C)",
        })
    }
}

/// Embedding of the compact group `G_max` into the centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GmaxEmbedding {
    /// `G_max` is the compact form of the centralizer.
    Whole,
    So12So11,
    So12So9So3,
    So12So5So7,
    Sp4Diagonal,
}

impl GmaxEmbedding {
    pub fn cartan_embedding(self) -> Option<CartanEmbedding> {
        match self {
            GmaxEmbedding::Whole => None,
            GmaxEmbedding::So12So11 => Some(CartanEmbedding::so12_so11()),
            GmaxEmbedding::So12So9So3 => Some(CartanEmbedding::so12_so9_so3()),
            GmaxEmbedding::So12So5So7 => Some(CartanEmbedding::so12_so5_so7()),
            GmaxEmbedding::Sp4Diagonal => Some(CartanEmbedding::sp4_diagonal()),
        }
    }
}

/// One cataloged configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateConfig {
    pub ambient: Ambient,
    /// Dynkin indices of the two sl2 factors; `0` stands for the trivial
    /// homomorphism, which only occurs for the complex group.
    pub index_pair: (u8, u8),
    /// Defining vectors in simple-coroot coordinates of E8; zero for a
    /// trivial factor.
    pub defining_vectors: [LatticeVector; 2],
    pub centralizer_type: ProductType,
    pub gmax: ProductType,
    pub gmax_name: String,
    pub embedding: GmaxEmbedding,
    /// Cataloged `V_{2,1}` and `V_{3,2}` over `G_max`, as rendered.
    pub expected_v21: String,
    pub expected_v32: String,
    /// Present only when the weaker isotypic condition is used.
    pub toe2prime_only: bool,
}

/// Defining vector of the index 1 sl2: the highest root.
pub fn h_index1() -> LatticeVector {
    LatticeVector(vec![2, 3, 4, 6, 5, 4, 3, 2])
}

/// Defining vector of the index 2 sl2: the fundamental coweight of node 1.
pub fn h_index2() -> LatticeVector {
    LatticeVector(vec![4, 5, 7, 10, 8, 6, 4, 2])
}

/// Index 1 sl2 commuting with [`h_index1`]: the highest root of E7.
pub fn h_index1_partner() -> LatticeVector {
    LatticeVector(vec![2, 2, 3, 4, 3, 2, 1, 0])
}

/// Index 2 sl2 commuting with [`h_index2`], Jordan type `2^4 1^5` in `so13`.
pub fn h_index22_b() -> LatticeVector {
    LatticeVector(vec![0, -2, -1, -2, -1, 0, 0, 0])
}

/// Index 2 sl2 commuting with [`h_index2`], Jordan type `3 1^10` in `so13`.
pub fn h_index22_a() -> LatticeVector {
    LatticeVector(vec![0, -1, 1, 0, 0, 0, 0, 0])
}

/// Index 1 sl2 commuting with [`h_index2`], Jordan type `2^2 1^9` in `so13`.
pub fn h_index12() -> LatticeVector {
    LatticeVector(vec![0, -1, 0, 0, 0, 0, 0, 0])
}

#[allow(clippy::too_many_arguments)]
fn config(
    ambient: Ambient,
    index_pair: (u8, u8),
    h: [LatticeVector; 2],
    z: &str,
    gmax: &str,
    gmax_name: &str,
    embedding: GmaxEmbedding,
    v21: &str,
    v32: &str,
    toe2prime_only: bool,
) -> CandidateConfig {
    CandidateConfig {
        ambient,
        index_pair,
        defining_vectors: h,
        centralizer_type: z.parse().expect("valid type"),
        gmax: gmax.parse().expect("valid type"),
        gmax_name: gmax_name.to_string(),
        embedding,
        expected_v21: v21.to_string(),
        expected_v32: v32.to_string(),
        toe2prime_only,
    }
}

/// All cataloged configurations, in table order.
pub fn catalog() -> Vec<CandidateConfig> {
    use Ambient::*;
    use GmaxEmbedding::*;
    let zero = LatticeVector::zero(8);
    let p11 = || [h_index1(), h_index1_partner()];
    vec![
        config(Minus24, (1, 1), p11(), "D6", "B5", "Spin(11)", So12So11, "32", "0", false),
        config(Split, (1, 1), p11(), "D6", "B2×B3", "Spin(5)×Spin(7)", So12So5So7, "(4,8)", "0", false),
        config(Minus24, (1, 1), p11(), "D6", "B4×A1", "Spin(9)×Spin(3)", So12So9So3, "(16,2)", "0", false),
        config(Complex, (1, 0), [h_index1(), zero.clone()], "E7", "E7", "E7", Whole, "56", "0", false),
        config(Complex, (1, 1), p11(), "D6", "D6", "Spin(12)", Whole, "32 ⊕ 32′", "0", false),
        config(Complex, (2, 0), [h_index2(), zero], "B6", "B6", "Spin(13)", Whole, "64", "0", false),
        config(
            Split,
            (2, 2),
            [h_index2(), h_index22_b()],
            "C2×C2",
            "C2",
            "Spin(5)",
            Sp4Diagonal,
            "4 ⊕ 16",
            "4",
            true,
        ),
        config(
            Complex,
            (2, 2),
            [h_index2(), h_index22_b()],
            "C2×C2",
            "C2×C2",
            "Spin(5)×Spin(5)",
            Whole,
            "(4,5) ⊕ (5,4)",
            "(1,4) ⊕ (4,1)",
            true,
        ),
        config(
            Complex,
            (1, 2),
            [h_index12(), h_index2()],
            "A1×B4",
            "A1×B4",
            "SU(2)×Spin(9)",
            Whole,
            "(2,9) ⊕ (2,16)",
            "(2,1)",
            true,
        ),
    ]
}

/// Configurations considered under `mode`.
pub fn enumerate_candidates(mode: Mode) -> Vec<CandidateConfig> {
    catalog()
        .into_iter()
        .filter(|c| mode == Mode::Toe2Prime || !c.toe2prime_only)
        .collect()
}

/// Commuting sl2 triples with the given defining vectors; zero vectors are
/// skipped.
pub fn commuting_triples(g: &ChevalleyAlgebra, hs: &[LatticeVector], seed: u64) -> Result<Vec<Sl2Triple>> {
    let mut triples: Vec<Sl2Triple> = Vec::new();
    for h in hs.iter().filter(|h| !h.is_zero()) {
        let t = g.sl2_triple(h, &triples, seed)?;
        triples.push(t);
    }
    check_commuting(g, &triples)?;
    Ok(triples)
}

/// Centralizer of the sl2 subalgebras with the given defining vectors,
/// with its type.
pub fn centralizer_of(g: &ChevalleyAlgebra, hs: &[LatticeVector], seed: u64) -> Result<(usize, Identification)> {
    let triples = commuting_triples(g, hs, seed)?;
    let gens: Vec<_> = triples.iter().flat_map(|t| t.generators()).collect();
    let c = g.centralizer(&gens);
    let id = g.identify_type(&c, None)?;
    Ok((c.dim(), id))
}

/// Everything computed for one configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub config: CandidateConfig,
    pub centralizer_dim: usize,
    /// Isotypic table of the real group, contents over the centralizer.
    pub bitable: BiTable,
    #[serde(rename = "V21")]
    pub v21: RepMultiset,
    #[serde(rename = "V32")]
    pub v32: RepMultiset,
    pub v22_dim: u64,
    pub v21_types: Vec<(String, RealityType)>,
    /// Whether `-1` lies in the Weyl group of the centralizer; recorded for
    /// the complex group only.
    pub minus_one_in_weyl: Option<bool>,
    pub toe2: bool,
    pub toe2prime: bool,
    pub toe3_fails: bool,
}

impl CandidateReport {
    pub fn verdict(&self) -> &'static str {
        if self.toe3_fails {
            "not chiral: V(2,1) is self-conjugate"
        } else {
            "chiral"
        }
    }
}

fn add_cells(a: &mut BTreeMap<(u32, u32), RepMultiset>, key: (u32, u32), r: RepMultiset) -> Result<()> {
    match a.get_mut(&key) {
        Some(x) => *x = x.sum(&r)?,
        None => {
            a.insert(key, r);
        }
    }
    Ok(())
}

/// Computes the report of one configuration and checks it against the
/// catalog.
pub fn evaluate_candidate(c: &CandidateConfig, seed: u64) -> Result<CandidateReport> {
    let g = ChevalleyAlgebra::e8();
    let (centralizer_dim, id) = centralizer_of(g, &c.defining_vectors, seed)?;
    if id.ty != c.centralizer_type {
        return Err(Error::Discrepancy(format!(
            "centralizer has type {}, cataloged {}",
            id.ty, c.centralizer_type
        )));
    }
    let hs: Vec<LatticeVector> = c.defining_vectors.iter().filter(|h| !h.is_zero()).cloned().collect();
    let cells = refine(g, &hs, &id)?;
    let mut t: BTreeMap<(u32, u32), RepMultiset> = BTreeMap::new();
    for (k, r) in cells {
        let key = if c.defining_vectors[0].is_zero() {
            (1, k[0])
        } else {
            (k[0], k.get(1).copied().unwrap_or(1))
        };
        add_cells(&mut t, key, r)?;
    }
    let contents = if c.ambient == Ambient::Complex {
        let mut full = t.clone();
        for (&(m, n), r) in &t {
            add_cells(&mut full, (n, m), r.dual())?;
        }
        full
    } else {
        t
    };
    let mut dims = BTreeMap::new();
    for (&k, r) in &contents {
        dims.insert(k, r.dimension()?);
    }
    let bitable = BiTable {
        dims,
        contents: Some(contents),
    };
    if bitable.total_dimension() != 248 * if c.ambient == Ambient::Complex { 2 } else { 1 } {
        return Err(Error::Discrepancy("isotypic table has the wrong total dimension".into()));
    }

    let empty = RepMultiset::new(id.ty.clone());
    let cell = |m, n| bitable.contents(m, n).cloned().unwrap_or_else(|| empty.clone());
    let to_gmax = |r: RepMultiset| -> Result<RepMultiset> {
        match c.embedding.cartan_embedding() {
            None => Ok(r),
            Some(e) => e.branch(&r),
        }
    };
    let v21 = to_gmax(cell(2, 1))?;
    let v32 = to_gmax(cell(3, 2))?;
    if v21.algebra() != &c.gmax {
        return Err(Error::Discrepancy(format!("G_max has type {}, cataloged {}", v21.algebra(), c.gmax)));
    }
    let toe2 = bitable.dims.iter().all(|(&(m, n), &d)| d == 0 || m + n <= 4);
    let toe2prime = bitable.dims.iter().all(|(&(m, n), &d)| d == 0 || (m < 4 && n < 4));
    let minus_one = (c.ambient == Ambient::Complex).then(|| minus_one_in_weyl(&id.ty));
    let toe3_fails = self_conjugate(&v21) && minus_one != Some(false);
    let report = CandidateReport {
        config: c.clone(),
        centralizer_dim,
        v22_dim: bitable.dim(2, 2),
        v21_types: v21.iter().map(|(l, _)| (l.name(), frobenius_schur(&l))).collect(),
        v21,
        v32,
        bitable,
        minus_one_in_weyl: minus_one,
        toe2,
        toe2prime,
        toe3_fails,
    };
    let v32_text = report.v32.to_string();
    if report.v21.to_string() != c.expected_v21 || v32_text != c.expected_v32 {
        return Err(Error::Discrepancy(format!(
            "{} with G_max {}: computed V(2,1) = {}, V(3,2) = {}; cataloged {}, {}",
            c.ambient, c.gmax_name, report.v21, v32_text, c.expected_v21, c.expected_v32
        )));
    }
    let passes = if c.toe2prime_only { !toe2 && toe2prime } else { toe2 };
    if !passes {
        return Err(Error::Discrepancy(format!(
            "{} with G_max {} violates the isotypic condition it is cataloged under",
            c.ambient, c.gmax_name
        )));
    }
    Ok(report)
}

/// All candidates of a mode with their verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub mode: Mode,
    pub candidates: Vec<CandidateReport>,
}

impl TheoremReport {
    /// `true` when no candidate is chiral.
    pub fn holds(&self) -> bool {
        self.candidates.iter().all(|c| c.toe3_fails)
    }

    /// Fails with a discrepancy naming every chiral candidate.
    pub fn verify(&self) -> Result<()> {
        let bad: Vec<String> = self
            .candidates
            .iter()
            .filter(|c| !c.toe3_fails)
            .map(|c| format!("{} / {}", c.config.ambient, c.config.gmax_name))
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Discrepancy(format!("chiral candidates: {}", bad.join(", "))))
        }
    }

    pub fn render(&self) -> String {
        let mut rows = vec![[
            "E8 form".to_string(),
            "indices".to_string(),
            "Z".to_string(),
            "G_max".to_string(),
            "V(2,1)".to_string(),
            "V(3,2)".to_string(),
            "dim V(2,2)".to_string(),
            "ToE3".to_string(),
        ]];
        for c in &self.candidates {
            let k = &c.config;
            rows.push([
                k.ambient.to_string(),
                format!("({},{})", k.index_pair.0, k.index_pair.1),
                k.centralizer_type.to_string(),
                k.gmax_name.clone(),
                c.v21.to_string(),
                c.v32.to_string(),
                c.v22_dim.to_string(),
                if c.toe3_fails { "FAILS" } else { "holds" }.to_string(),
            ]);
        }
        let widths: Vec<usize> = (0..8)
            .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        for (j, r) in rows.iter().enumerate() {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(x, &w)| format!("{x}{}", " ".repeat(w - x.chars().count())))
                .collect();
            s.push_str(cells.join("  ").trim_end());
            s.push('\n');
            if j == 0 {
                s.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * 7));
                s.push('\n');
            }
        }
        let failing = self.candidates.iter().filter(|c| c.toe3_fails).count();
        s.push_str(&format!(
            "\n{failing}/{} candidates fail ToE3 under {}: ",
            self.candidates.len(),
            self.mode
        ));
        s.push_str(if self.holds() {
            "no candidate is chiral.\n"
        } else {
            "DISCREPANCY, a chiral candidate was found.\n"
        });
        s
    }
}

/// Evaluates every candidate of a mode.
pub fn theorem_report(mode: Mode, seed: u64) -> Result<TheoremReport> {
    let candidates = enumerate_candidates(mode)
        .iter()
        .map(|c| evaluate_candidate(c, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { mode, candidates })
}

/// Counting argument: fermions in `generations` generations need a `-1`
/// eigenspace of dimension `2 · 2 · 15 · generations` under the central
/// element of the sl2, more than the adjoint representation of E8 offers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionNoGo {
    pub generations: u64,
    pub required: u64,
    /// `-1` eigenspace dimensions for the central elements of the index 1
    /// and index 2 sl2.
    pub available: Vec<u64>,
    pub involution_bound: u64,
    pub excluded: bool,
}

pub fn dimension_no_go(generations: u64) -> Result<DimensionNoGo> {
    let rs = RootSystem::get(SimpleType::e8());
    let mut available = Vec::new();
    for h in [h_index1(), h_index2()] {
        available.push(CenterElement::new(h).eigenspace_dims(&rs)?.1);
    }
    let required = 2 * 2 * 15 * generations;
    let bound = crate::reality::involution_bound(&rs);
    let max = available.iter().copied().max().unwrap_or(0).max(bound);
    Ok(DimensionNoGo {
        generations,
        required,
        available,
        involution_bound: bound,
        excluded: required > max,
    })
}

impl DimensionNoGo {
    pub fn render(&self) -> String {
        format!(
            "required: 2 × 2 × {} = {}\navailable: {} (involution bound {})\nverdict: {}\n",
            15 * self.generations,
            self.required,
            self.available.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
            self.involution_bound,
            if self.excluded {
                format!("{} > {}, excluded by dimension", self.required, self.involution_bound)
            } else {
                format!("{} ≤ {}, not excluded by dimension alone", self.required, self.involution_bound)
            }
        )
    }
}
