//! Chevalley bases of simply-laced Lie algebras, with E8 as the main case.
//!
//! Basis order: `x_alpha` for the positive roots in root-system order, then
//! `x_{-alpha}` in the same order, then `h_1, ..., h_n`. Structure constants
//! come from the bimultiplicative cocycle `eps` on the root lattice with
//! `eps(alpha_i, alpha_j) = -1` when `i == j` or when `i < j` are joined in
//! the Dynkin diagram, and `+1` otherwise. With `E_alpha` the Frenkel-Kac
//! generators, `x_alpha = E_alpha` for positive and `x_alpha = -E_alpha` for
//! negative roots, giving
//!
//! ```text
//! [x_a, x_b]   = s(a) s(b) s(a+b) eps(a,b) x_{a+b}   (a+b a root)
//! [x_a, x_-a]  = h_a
//! [h_i, x_a]   = <a, alpha_i^vee> x_a
//! ```
//!
//! where `s` is the sign of a root.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{inverse, q, q_to_i64, Rref, SparseVec, Q};
use crate::roots::{Family, LatticeVector, ProductType, RootSystem, SimpleType, WeightVector};

/// Element of a Chevalley algebra as a sparse rational vector over the
/// basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: SparseVec,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(k: usize) -> Self {
        AlgebraElement {
            coeffs: SparseVec::from([(k, q(1))]),
        }
    }

    pub fn from_sparse(mut coeffs: SparseVec) -> Self {
        coeffs.retain(|_, x| !x.is_zero());
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Q {
        self.coeffs.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut c = self.coeffs.clone();
        crate::linalg::axpy(&mut c, &q(1), &other.coeffs);
        AlgebraElement { coeffs: c }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut c = self.coeffs.clone();
        crate::linalg::axpy(&mut c, &q(-1), &other.coeffs);
        AlgebraElement { coeffs: c }
    }

    pub fn scale(&self, s: &Q) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(&k, x)| (k, x * s)).collect(),
        }
    }
}

/// Lie algebra of a simply-laced root system in a Chevalley basis.
#[derive(Debug)]
pub struct ChevalleyAlgebra {
    rs: Arc<RootSystem>,
    roots: Vec<LatticeVector>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Roots in fundamental-weight coordinates, same order as `roots`.
    root_weights: Vec<WeightVector>,
    /// `table[a * dim + b]` is `[b_a, b_b]` in the basis.
    table: Vec<Vec<(usize, i64)>>,
}

fn eps(t: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    // t[i][j] is 1 when eps(alpha_i, alpha_j) = -1.
    let mut e = 0;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if t[i][j] != 0 {
                e += x * y;
            }
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl ChevalleyAlgebra {
    pub fn new(t: SimpleType) -> Result<Self> {
        if !t.is_simply_laced() {
            return Err(Error::UnsupportedType(format!(
                "{t}: structure constants are only built for simply-laced types"
            )));
        }
        let rs = RootSystem::get(t);
        let n = rs.rank();
        let roots = rs.roots();
        let npos = rs.positive_roots().len();
        let root_index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let root_weights: Vec<WeightVector> = roots.iter().map(|r| rs.root_to_weight(r)).collect();
        let cocycle: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i64::from(i == j || (i < j && rs.cartan()[i][j] != 0)))
                    .collect()
            })
            .collect();
        let sign = |k: usize| if k < npos { 1 } else { -1 };
        let dim = roots.len() + n;
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                let entry = match (a < roots.len(), b < roots.len()) {
                    (false, false) => Vec::new(),
                    (false, true) => {
                        let c = root_weights[b].0[a - roots.len()];
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(b, c)]
                        }
                    }
                    (true, false) => {
                        let c = root_weights[a].0[b - roots.len()];
                        if c == 0 {
                            Vec::new()
                        } else {
                            vec![(a, -c)]
                        }
                    }
                    (true, true) => {
                        let s = &roots[a] + &roots[b];
                        if s.is_zero() {
                            roots[a]
                                .0
                                .iter()
                                .enumerate()
                                .filter(|(_, &c)| c != 0)
                                .map(|(i, &c)| (roots.len() + i, c))
                                .collect()
                        } else if let Some(&c) = root_index.get(&s.0) {
                            let e = eps(&cocycle, &roots[a].0, &roots[b].0);
                            vec![(c, sign(a) * sign(b) * sign(c) * e)]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[a * dim + b] = entry;
            }
        }
        Ok(ChevalleyAlgebra {
            rs,
            roots,
            root_index,
            root_weights,
            table,
        })
    }

    /// The shared Chevalley algebra of type E8.
    pub fn e8() -> &'static ChevalleyAlgebra {
        static E8: OnceLock<ChevalleyAlgebra> = OnceLock::new();
        E8.get_or_init(|| ChevalleyAlgebra::new(SimpleType::e8()).expect("E8 is simply laced"))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    /// Roots in basis order.
    pub fn roots(&self) -> &[LatticeVector] {
        &self.roots
    }

    pub fn root_weights(&self) -> &[WeightVector] {
        &self.root_weights
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Basis index of `x_r`.
    pub fn root_index(&self, r: &LatticeVector) -> Option<usize> {
        self.root_index.get(&r.0).copied()
    }

    /// The root vector `x_r`.
    pub fn x(&self, r: &LatticeVector) -> Result<AlgebraElement> {
        self.root_index(r)
            .map(AlgebraElement::basis)
            .ok_or_else(|| Error::InvalidArgument(format!("{r} is not a root")))
    }

    /// `h_i`, zero-based.
    pub fn h(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.roots.len() + i)
    }

    /// Cartan element with the given simple-coroot coordinates.
    pub fn cartan_element(&self, coords: &[Q]) -> AlgebraElement {
        AlgebraElement::from_sparse(
            coords
                .iter()
                .enumerate()
                .map(|(i, x)| (self.roots.len() + i, x.clone()))
                .collect(),
        )
    }

    pub fn cartan_element_int(&self, coords: &LatticeVector) -> AlgebraElement {
        let qs: Vec<Q> = coords.0.iter().map(|&x| q(x)).collect();
        self.cartan_element(&qs)
    }

    /// Cartan coordinates of `x` if it lies in the Cartan subalgebra.
    pub fn cartan_coords(&self, x: &AlgebraElement) -> Option<Vec<Q>> {
        if x.coeffs.keys().any(|&k| k < self.roots.len()) {
            return None;
        }
        Some((0..self.rank()).map(|i| x.coefficient(self.roots.len() + i)).collect())
    }

    pub fn basis_label(&self, k: usize) -> String {
        if k < self.roots.len() {
            format!("x[{}]", self.roots[k])
        } else {
            format!("h{}", k - self.roots.len() + 1)
        }
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a * self.dim() + b]
    }

    /// `N(a, b)` with `[x_a, x_b] = N(a,b) x_{a+b}`; zero when `a + b` is not
    /// a root.
    pub fn structure_constant(&self, a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
        let ia = self.root_index(a).ok_or_else(|| Error::InvalidArgument(format!("{a} is not a root")))?;
        let ib = self.root_index(b).ok_or_else(|| Error::InvalidArgument(format!("{b} is not a root")))?;
        if (a + b).is_zero() {
            return Ok(0);
        }
        Ok(self.bracket_basis(ia, ib).first().map_or(0, |&(_, c)| c))
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = SparseVec::new();
        for (&a, xa) in &x.coeffs {
            for (&b, yb) in &y.coeffs {
                let prod = xa * yb;
                for &(c, n) in self.bracket_basis(a, b) {
                    let e = out.entry(c).or_insert_with(Q::zero);
                    *e += &prod * q(n);
                }
            }
        }
        AlgebraElement::from_sparse(out)
    }

    /// Rows of the matrix of `ad x` acting on column vectors.
    pub fn ad_rows(&self, x: &AlgebraElement) -> Vec<SparseVec> {
        let dim = self.dim();
        let mut rows = vec![SparseVec::new(); dim];
        for b in 0..dim {
            for (&a, xa) in &x.coeffs {
                for &(c, n) in self.bracket_basis(a, b) {
                    let e = rows[c].entry(b).or_insert_with(Q::zero);
                    *e += xa * q(n);
                }
            }
        }
        for r in &mut rows {
            r.retain(|_, x| !x.is_zero());
        }
        rows.retain(|r| !r.is_empty());
        rows
    }

    /// Common kernel of `ad g` for the given generators.
    pub fn centralizer(&self, generators: &[AlgebraElement]) -> Subalgebra {
        let dim = self.dim();
        let mut rref = Rref::new(dim);
        for g in generators {
            for row in self.ad_rows(g) {
                rref.insert(row);
            }
        }
        let basis: Vec<AlgebraElement> = rref.nullspace().into_iter().map(AlgebraElement::from_sparse).collect();

        // Cartan part: kernel of the same rows restricted to the h columns.
        let n0 = self.roots.len();
        let mut cart = Rref::new(self.rank());
        for row in rref.rows() {
            let r: SparseVec = row
                .iter()
                .filter(|(&k, _)| k >= n0)
                .map(|(&k, x)| (k - n0, x.clone()))
                .collect();
            if !r.is_empty() {
                cart.insert(r);
            }
        }
        let cartan_part = cart
            .nullspace()
            .into_iter()
            .map(|v| {
                let coords: Vec<Q> = (0..self.rank()).map(|i| v.get(&i).cloned().unwrap_or_else(Q::zero)).collect();
                self.cartan_element(&coords)
            })
            .collect();
        Subalgebra::new(dim, basis, cartan_part)
    }

    /// `true` when the bracket of any two basis elements of `s` lies in `s`.
    pub fn is_closed(&self, s: &Subalgebra) -> bool {
        for (i, x) in s.basis.iter().enumerate() {
            for y in &s.basis[i + 1..] {
                if !s.contains(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Value of the root with basis index `k` on a Cartan element given by
    /// rational coroot coordinates.
    pub fn root_value(&self, k: usize, h: &[Q]) -> Q {
        self.root_weights[k]
            .0
            .iter()
            .zip(h)
            .filter(|(&a, _)| a != 0)
            .map(|(&a, b)| q(a) * b)
            .sum()
    }

    /// Identifies the type of a reductive subalgebra whose Cartan subalgebra
    /// is `s.cartan_part()`, and expresses its simple coroots in the ambient
    /// coroot coordinates.
    ///
    /// `chamber` is an optional ambient weight, in fundamental-weight
    /// coordinates; a root of the subalgebra is positive when the weight
    /// pairs positively with it. It must not vanish on any root. By default
    /// the weight `rho` is used, with ties broken lexicographically.
    pub fn identify_type(&self, s: &Subalgebra, chamber: Option<&[Q]>) -> Result<Identification> {
        let n = self.rank();
        let nr = self.roots.len();
        let t: Vec<Vec<Q>> = s
            .cartan_part
            .iter()
            .map(|x| self.cartan_coords(x).expect("Cartan part lies in h"))
            .collect();
        let r = t.len();
        if r == 0 {
            if s.dim() == 0 {
                return Ok(Identification {
                    ty: ProductType(Vec::new()),
                    simple_coroots: Vec::new(),
                });
            }
            return Err(Error::NotReductive("centralizer meets h trivially".into()));
        }

        // Restrictions of ambient roots to the Cartan part.
        let restrict = |k: usize| -> Vec<Q> { t.iter().map(|tv| self.root_value(k, tv)).collect() };
        let mut groups: BTreeMap<Vec<Q>, Vec<usize>> = BTreeMap::new();
        for k in 0..nr {
            groups.entry(restrict(k)).or_default().push(k);
        }
        let proj_rank = |cols: &[usize]| -> usize {
            let mut rr = Rref::new(self.dim());
            for b in &s.basis {
                let v: SparseVec = cols
                    .iter()
                    .filter_map(|&c| b.coeffs.get(&c).map(|x| (c, x.clone())))
                    .collect();
                if !v.is_empty() {
                    rr.insert(v);
                }
            }
            rr.rank()
        };
        let zero = vec![Q::zero(); r];
        let mut zero_cols: Vec<usize> = (nr..nr + n).collect();
        if let Some(ks) = groups.get(&zero) {
            zero_cols.extend(ks);
        }
        if proj_rank(&zero_cols) != r {
            return Err(Error::NotReductive(
                "the centralizer of its Cartan part is larger than the Cartan part".into(),
            ));
        }
        let mut sub_roots: Vec<Vec<Q>> = Vec::new();
        for (mu, ks) in &groups {
            if *mu == zero {
                continue;
            }
            match proj_rank(ks) {
                0 => {}
                1 => sub_roots.push(mu.clone()),
                d => {
                    return Err(Error::NotReductive(format!("root space of dimension {d}")));
                }
            }
        }
        if r + sub_roots.len() != s.dim() {
            return Err(Error::NotReductive("root spaces do not span the subalgebra".into()));
        }

        // Gram matrix of the Cartan part and the roots as vectors in it.
        let gram: Vec<Vec<Q>> = t
            .iter()
            .map(|a| t.iter().map(|b| self.rs.inner(a, b)).collect())
            .collect();
        let gi = inverse(&gram).ok_or_else(|| Error::NotReductive("degenerate Cartan part".into()))?;
        let to_h = |mu: &[Q]| -> Vec<Q> {
            let c: Vec<Q> = (0..r).map(|a| (0..r).map(|b| &gi[a][b] * &mu[b]).sum()).collect();
            (0..n).map(|i| (0..r).map(|a| &c[a] * &t[a][i]).sum()).collect()
        };
        let vecs: Vec<Vec<Q>> = sub_roots.iter().map(|m| to_h(m)).collect();

        // Sign of a root under the chamber functional, ties in the default
        // chamber broken lexicographically in the Cartan-part coordinates.
        let height = |v: &[Q], lam: Option<&[Q]>| -> Q {
            match lam {
                Some(l) => l.iter().zip(v).map(|(a, b)| a * b).sum(),
                None => v.iter().cloned().sum(),
            }
        };
        let lex = |m: &[Q]| -> Q {
            m.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(Q::zero)
        };
        let phi: Vec<Q> = vecs
            .iter()
            .zip(&sub_roots)
            .map(|(v, m)| {
                let h = height(v, chamber);
                if h.is_zero() && chamber.is_none() {
                    lex(m)
                } else {
                    h
                }
            })
            .collect();
        if phi.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidArgument("chamber is orthogonal to a root".into()));
        }
        let positive: Vec<usize> = (0..sub_roots.len()).filter(|&i| phi[i].is_positive()).collect();
        let pos_set: std::collections::HashSet<&Vec<Q>> = positive.iter().map(|&i| &sub_roots[i]).collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&i| {
                !positive.iter().any(|&j| {
                    let d: Vec<Q> = sub_roots[i].iter().zip(&sub_roots[j]).map(|(a, b)| a - b).collect();
                    pos_set.contains(&d)
                })
            })
            .collect();
        if simple.len() != r {
            return Err(Error::NotReductive(format!(
                "found {} simple roots for a Cartan part of rank {r}",
                simple.len()
            )));
        }
        let ip = |a: usize, b: usize| self.rs.inner(&vecs[a], &vecs[b]);
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|&i| {
                simple
                    .iter()
                    .map(|&j| {
                        let c = q(2) * ip(i, j) / ip(i, i);
                        q_to_i64(&c).ok_or_else(|| Error::Unidentified("non-integral Cartan entry".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;

        let mut comps: Vec<(SimpleType, Vec<usize>)> = Vec::new();
        for comp in components(&cartan) {
            let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
            let (ty, perm) = match_cartan(&sub).ok_or_else(|| {
                Error::Unidentified(format!("Cartan matrix {sub:?} matches no simple type"))
            })?;
            comps.push((ty, perm.into_iter().map(|p| comp[p]).collect()));
        }
        comps.sort_by_key(|a| a.0);
        let ty = ProductType(comps.iter().map(|c| c.0).collect());
        if ty.dimension() != s.dim() {
            return Err(Error::Unidentified(format!("type {ty} has the wrong dimension")));
        }
        let simple_coroots = comps
            .iter()
            .flat_map(|(_, idx)| idx.iter().map(|&k| simple[k]))
            .map(|i| {
                let nn = ip(i, i);
                vecs[i].iter().map(|x| q(2) * x / &nn).collect()
            })
            .collect();
        Ok(Identification { ty, simple_coroots })
    }

    /// Text table of nonzero structure constants between roots, one line
    /// per pair: `alpha beta N(alpha,beta)`.
    pub fn dump_structure_constants(&self) -> String {
        let mut s = String::new();
        for a in 0..self.roots.len() {
            for b in 0..self.roots.len() {
                if (&self.roots[a] + &self.roots[b]).is_zero() {
                    continue;
                }
                if let Some(&(_, c)) = self.bracket_basis(a, b).first() {
                    let ra: Vec<String> = self.roots[a].0.iter().map(|x| x.to_string()).collect();
                    let rb: Vec<String> = self.roots[b].0.iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(s, "{} {} {}", ra.join(","), rb.join(","), c);
                }
            }
        }
        s
    }

    /// The Cartan element `h = sum_beta beta^vee` for a set of roots.
    pub fn coroot_sum(&self, roots: &[LatticeVector]) -> LatticeVector {
        let mut acc = LatticeVector::zero(self.rank());
        for r in roots {
            acc = &acc + &self.rs.coroot(r);
        }
        acc
    }

    /// Builds an sl2 triple `(e, h, f)` with the given defining vector,
    /// commuting with every triple in `commuting_with`.
    ///
    /// First looks for mutually orthogonal roots `beta` with `beta(h) = 2`
    /// whose coroots sum to `h`, taking `e = sum x_beta` and
    /// `f = sum x_{-beta}`. If none exist, tries `e` with random
    /// coefficients in the 2-eigenspace of `ad h` and solves `[e, f] = h`
    /// exactly for `f`.
    pub fn sl2_triple(&self, h: &LatticeVector, commuting_with: &[Sl2Triple], seed: u64) -> Result<Sl2Triple> {
        if h.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: h.len(),
            });
        }
        if h.is_zero() {
            return Err(Error::NoSl2Triple(h.0.clone()));
        }
        let commutes = |k: usize| -> bool {
            let x = AlgebraElement::basis(k);
            commuting_with
                .iter()
                .all(|t| self.bracket(&x, &t.e).is_zero() && self.bracket(&x, &t.f).is_zero())
        };
        let npos = self.roots.len() / 2;
        let neg = |k: usize| if k < npos { k + npos } else { k - npos };
        let value = |k: usize| -> i64 { self.root_weights[k].0.iter().zip(&h.0).map(|(a, b)| a * b).sum() };
        let mut cands: Vec<usize> = (0..self.roots.len())
            .filter(|&k| value(k) == 2 && commutes(k) && commutes(neg(k)))
            .collect();
        let height = |k: usize| -> i64 { self.roots[k].0.iter().sum() };
        cands.sort_by_key(|&k| (-height(k), k));

        let hq: Vec<Q> = h.0.iter().map(|&x| q(x)).collect();
        if let Some(set) = self.orthogonal_decomposition(&cands, h) {
            let e = set.iter().fold(AlgebraElement::zero(), |acc, &k| acc.add(&AlgebraElement::basis(k)));
            let f = set
                .iter()
                .fold(AlgebraElement::zero(), |acc, &k| acc.add(&AlgebraElement::basis(neg(k))));
            let t = Sl2Triple {
                e,
                h: self.cartan_element(&hq),
                f,
                defining_vector: h.clone(),
            };
            if self.verify_triple(&t) {
                return Ok(t);
            }
        }

        // Random fallback on the whole 2-eigenspace of ad h that commutes
        // with the given triples.
        let plus: Vec<usize> = (0..self.roots.len()).filter(|&k| value(k) == 2).collect();
        let minus: Vec<usize> = (0..self.roots.len()).filter(|&k| value(k) == -2).collect();
        let space = self.commuting_subspace(&plus, commuting_with);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let mut e = AlgebraElement::zero();
            for b in &space {
                let c: i64 = rng.gen_range(-3..=3);
                e = e.add(&b.scale(&q(c)));
            }
            if e.is_zero() {
                continue;
            }
            // Unknown f = sum_j c_j x_{minus[j]}; [e, f] = h is linear in c.
            let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
            for (j, &m) in minus.iter().enumerate() {
                let col = self.bracket(&e, &AlgebraElement::basis(m));
                for (&o, x) in col.coeffs() {
                    rows.entry(o).or_default().insert(j, x.clone());
                }
            }
            let hh = self.cartan_element(&hq);
            let keys: Vec<usize> = rows.keys().copied().chain(hh.coeffs().keys().copied()).collect();
            let mut keys = keys;
            keys.sort();
            keys.dedup();
            let mat: Vec<SparseVec> = keys.iter().map(|k| rows.get(k).cloned().unwrap_or_default()).collect();
            let rhs: Vec<Q> = keys.iter().map(|k| hh.coefficient(*k)).collect();
            if let Some(sol) = crate::linalg::solve(&mat, &rhs, minus.len()) {
                let f = AlgebraElement::from_sparse(sol.into_iter().map(|(j, x)| (minus[j], x)).collect());
                let t = Sl2Triple {
                    e,
                    h: hh,
                    f,
                    defining_vector: h.clone(),
                };
                if self.verify_triple(&t)
                    && commuting_with.iter().all(|o| self.bracket(&t.f, &o.e).is_zero() && self.bracket(&t.f, &o.f).is_zero())
                {
                    return Ok(t);
                }
            }
        }
        Err(Error::NoSl2Triple(h.0.clone()))
    }

    /// Basis of the elements of `span{x_k : k in idx}` commuting with every
    /// given triple.
    fn commuting_subspace(&self, idx: &[usize], others: &[Sl2Triple]) -> Vec<AlgebraElement> {
        let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (g, t) in others.iter().enumerate() {
            for (side, x) in [&t.e, &t.f].into_iter().enumerate() {
                for (j, &k) in idx.iter().enumerate() {
                    let col = self.bracket(x, &AlgebraElement::basis(k));
                    for (&o, c) in col.coeffs() {
                        rows.entry((2 * g + side, o)).or_default().insert(j, c.clone());
                    }
                }
            }
        }
        crate::linalg::nullspace(rows.into_values(), idx.len())
            .into_iter()
            .map(|v| AlgebraElement::from_sparse(v.into_iter().map(|(j, x)| (idx[j], x)).collect()))
            .collect()
    }

    fn orthogonal_decomposition(&self, cands: &[usize], h: &LatticeVector) -> Option<Vec<usize>> {
        fn go(
            alg: &ChevalleyAlgebra,
            cands: &[usize],
            start: usize,
            rest: &LatticeVector,
            chosen: &mut Vec<usize>,
            budget: &mut u32,
        ) -> bool {
            if rest.is_zero() {
                return true;
            }
            if *budget == 0 || chosen.len() >= alg.rank() {
                return false;
            }
            *budget -= 1;
            let rest_w = alg.rs.root_to_weight(rest);
            for (i, &k) in cands.iter().enumerate().skip(start) {
                let r = &alg.roots[k];
                let to_rest: i64 = rest_w.0.iter().zip(&r.0).map(|(a, b)| a * b).sum();
                if to_rest != 2 {
                    continue;
                }
                let w = &alg.root_weights[k];
                if chosen
                    .iter()
                    .any(|&c| w.0.iter().zip(&alg.roots[c].0).map(|(a, b)| a * b).sum::<i64>() != 0)
                {
                    continue;
                }
                chosen.push(k);
                if go(alg, cands, i + 1, &(rest - r), chosen, budget) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        let mut budget = 200_000;
        go(self, cands, 0, h, &mut chosen, &mut budget).then_some(chosen)
    }

    /// Checks `[h,e] = 2e`, `[h,f] = -2f` and `[e,f] = h`.
    pub fn verify_triple(&self, t: &Sl2Triple) -> bool {
        self.bracket(&t.h, &t.e) == t.e.scale(&q(2))
            && self.bracket(&t.h, &t.f) == t.f.scale(&q(-2))
            && self.bracket(&t.e, &t.f) == t.h
    }
}

/// An sl2 triple `(e, h, f)` with `h` in the fixed Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: AlgebraElement,
    pub h: AlgebraElement,
    pub f: AlgebraElement,
    /// `h` in simple-coroot coordinates.
    pub defining_vector: LatticeVector,
}

impl Sl2Triple {
    pub fn generators(&self) -> [AlgebraElement; 3] {
        [self.e.clone(), self.h.clone(), self.f.clone()]
    }
}

/// Subspace of a Chevalley algebra given by a basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    basis: Vec<AlgebraElement>,
    cartan_part: Vec<AlgebraElement>,
    span: Rref,
}

impl Subalgebra {
    pub fn new(ambient_dim: usize, basis: Vec<AlgebraElement>, cartan_part: Vec<AlgebraElement>) -> Self {
        let mut span = Rref::new(ambient_dim);
        for b in &basis {
            span.insert(b.coeffs.clone());
        }
        Subalgebra {
            basis,
            cartan_part,
            span,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }

    /// Intersection with the Cartan subalgebra of the ambient algebra.
    pub fn cartan_part(&self) -> &[AlgebraElement] {
        &self.cartan_part
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.span.contains(&x.coeffs)
    }
}

/// Type of a subalgebra with its simple coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub ty: ProductType,
    /// Simple coroots of the subalgebra, factor by factor in the order of
    /// `ty`, in ambient simple-coroot coordinates.
    pub simple_coroots: Vec<Vec<Q>>,
}

impl Identification {
    /// Simple coroots as lattice vectors, when they are integral.
    pub fn integral_coroots(&self) -> Option<Vec<LatticeVector>> {
        self.simple_coroots
            .iter()
            .map(|v| v.iter().map(q_to_i64).collect::<Option<Vec<_>>>().map(LatticeVector))
            .collect()
    }

    /// Restriction of an ambient weight to the subalgebra, in its
    /// fundamental-weight coordinates.
    pub fn restrict(&self, w: &WeightVector) -> Result<WeightVector> {
        self.simple_coroots
            .iter()
            .map(|c| {
                let x: Q = w.0.iter().zip(c).map(|(&a, b)| q(a) * b).sum();
                q_to_i64(&x).ok_or(Error::NonIntegralWeight)
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }
}

fn components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..n {
                if !seen[b] && cartan[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Candidate simple types of rank `k`, in order of preference. `C2` is
/// preferred to `B2` and `A3` to `D3`.
fn candidates(k: usize) -> Vec<SimpleType> {
    let mut fams = vec![Family::A];
    if k == 2 {
        fams.extend([Family::C, Family::B]);
    } else {
        fams.extend([Family::B, Family::C]);
    }
    fams.extend([Family::D, Family::E, Family::F, Family::G]);
    fams.into_iter().filter_map(|f| SimpleType::new(f, k).ok()).collect()
}

/// Finds a simple type and an ordering `perm` of the rows of `a` with
/// `a[perm[i]][perm[j]]` equal to the standard Cartan matrix.
pub fn match_cartan(a: &[Vec<i64>]) -> Option<(SimpleType, Vec<usize>)> {
    fn extend(a: &[Vec<i64>], std: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let p = perm.len();
        if p == a.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] || a[c][c] != 2 {
                continue;
            }
            if perm.iter().enumerate().all(|(qi, &cq)| a[c][cq] == std[p][qi] && a[cq][c] == std[qi][p]) {
                used[c] = true;
                perm.push(c);
                if extend(a, std, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    for t in candidates(a.len()) {
        let rs = RootSystem::get(t);
        let mut perm = Vec::new();
        let mut used = vec![false; a.len()];
        if extend(a, rs.cartan(), &mut perm, &mut used) {
            return Some((t, perm));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn a2_jacobi_and_antisymmetry() {
        let g = ChevalleyAlgebra::new("A2".parse().unwrap()).unwrap();
        let d = g.dim();
        for a in 0..d {
            for b in 0..d {
                let x = AlgebraElement::basis(a);
                let y = AlgebraElement::basis(b);
                assert_eq!(g.bracket(&x, &y), g.bracket(&y, &x).scale(&q(-1)));
                for c in 0..d {
                    let z = AlgebraElement::basis(c);
                    let j = g
                        .bracket(&g.bracket(&x, &y), &z)
                        .add(&g.bracket(&g.bracket(&y, &z), &x))
                        .add(&g.bracket(&g.bracket(&z, &x), &y));
                    assert!(j.is_zero());
                }
            }
        }
    }

    #[test]
    fn cartan_relations() {
        let g = ChevalleyAlgebra::e8();
        let theta = g.root_system().highest_root().clone();
        let x = g.x(&theta).unwrap();
        let y = g.x(&-&theta).unwrap();
        assert_eq!(g.bracket(&x, &y), g.cartan_element_int(&theta));
        assert!(g.bracket(&g.h(0), &g.h(1)).is_zero());
    }

    #[test]
    fn match_b2_prefers_c2() {
        let (t, _) = match_cartan(&[vec![2, -1], vec![-2, 2]]).unwrap();
        assert_eq!(t.to_string(), "C2");
        let (t, _) = match_cartan(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(t.to_string(), "A3");
    }

    #[test]
    fn zero_defining_vector_has_no_triple() {
        let g = ChevalleyAlgebra::e8();
        assert!(matches!(
            g.sl2_triple(&LatticeVector::zero(8), &[], 0),
            Err(Error::NoSl2Triple(_))
        ));
    }

    #[test]
    fn highest_root_triple() {
        let g = ChevalleyAlgebra::e8();
        let h = lv(&[2, 3, 4, 6, 5, 4, 3, 2]);
        let t = g.sl2_triple(&h, &[], 0).unwrap();
        assert_eq!(t.e, g.x(&h).unwrap());
        assert_eq!(t.f, g.x(&-&h).unwrap());
    }
}
