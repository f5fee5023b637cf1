//! Root systems of the simple Lie algebras up to rank 8.
//!
//! Lattice elements are stored in simple-root coordinates and weights in
//! fundamental-weight coordinates. The invariant form is normalised so that
//! long roots have squared length 2, which makes short coroots have squared
//! length 2 as well. Simple roots are numbered as in Bourbaki; for E8 this
//! is
//!
//! ```text
//! 1 3 4 5 6 7 8
//!     2
//! ```

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{inverse, q, q_frac, q_to_i64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type such as `E8` or `B6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= 8 {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => [78, 133, 248][n - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }

    pub fn e8() -> Self {
        SimpleType {
            family: Family::E,
            rank: 8,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.to_string()
    }
}

/// A semisimple type written as an ordered product of simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ProductType(pub Vec<SimpleType>);

impl ProductType {
    pub fn simple(t: SimpleType) -> Self {
        ProductType(vec![t])
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank()).sum()
    }

    pub fn dimension(&self) -> usize {
        self.0.iter().map(|t| t.dimension()).sum()
    }

    /// Offsets of each factor inside a concatenated weight vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for t in &self.0 {
            out.push(acc);
            acc += t.rank();
        }
        out
    }

    pub fn concat(&self, other: &ProductType) -> ProductType {
        ProductType(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for ProductType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("×"))
    }
}

impl FromStr for ProductType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(ProductType(Vec::new()));
        }
        s.split(['×', 'x', '*'])
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(ProductType)
    }
}

impl TryFrom<String> for ProductType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ProductType> for String {
    fn from(t: ProductType) -> String {
        t.to_string()
    }
}

impl From<SimpleType> for ProductType {
    fn from(t: SimpleType) -> Self {
        ProductType::simple(t)
    }
}

macro_rules! int_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(n: usize) -> Self {
                $name(vec![0; n])
            }

            pub fn unit(n: usize, i: usize) -> Self {
                let mut v = vec![0; n];
                v[i] = 1;
                $name(v)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                assert_eq!(self.0.len(), o.0.len());
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                assert_eq!(self.0.len(), o.0.len());
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, o: &$name) -> $name {
                $name(o.0.iter().map(|a| self * a).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(" "))
            }
        }
    };
}

int_vector!(
    /// Element of the root (or coroot) lattice in simple-(co)root coordinates.
    LatticeVector
);
int_vector!(
    /// Integral weight in fundamental-weight coordinates.
    WeightVector
);

impl WeightVector {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// A root system together with the data derived from its Cartan matrix.
#[derive(Debug)]
pub struct RootSystem {
    ty: SimpleType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_j)`, long roots of squared length 2.
    form: Vec<Vec<Q>>,
    positive: Vec<LatticeVector>,
    index: HashMap<Vec<i64>, usize>,
    /// Fundamental weights in simple-root coordinates.
    fundamental: Vec<Vec<Q>>,
    dual_coxeter: i64,
    /// Positive roots in fundamental-weight coordinates.
    positive_weights: Vec<WeightVector>,
    /// Positive coroots in simple-coroot coordinates.
    positive_coroots: Vec<LatticeVector>,
    /// Coefficients of 2 rho-check in simple coroots.
    two_rho_check: Vec<i64>,
}

fn bonds(t: SimpleType) -> Vec<(usize, usize)> {
    let n = t.rank();
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
        Family::D => {
            let mut b = chain(n - 1);
            b.push((n - 3, n - 1));
            b
        }
        Family::E => {
            let mut b = vec![(0, 2), (1, 3)];
            b.extend((2..n - 1).map(|i| (i, i + 1)));
            b
        }
    }
}

/// Squared lengths of the simple roots.
fn simple_norms(t: SimpleType) -> Vec<Q> {
    let n = t.rank();
    match t.family() {
        Family::A | Family::D | Family::E => vec![q(2); n],
        Family::B => (0..n).map(|i| if i + 1 == n { q(1) } else { q(2) }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { q(2) } else { q(1) }).collect(),
        Family::F => vec![q(2), q(2), q(1), q(1)],
        Family::G => vec![q_frac(2, 3), q(2)],
    }
}

fn build_form(t: SimpleType) -> Vec<Vec<Q>> {
    let n = t.rank();
    let norms = simple_norms(t);
    let mut form = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        form[i][i] = norms[i].clone();
    }
    for (i, j) in bonds(t) {
        // Adjacent simple roots of lengths a <= b meet with <short, long^vee>
        // equal to -1, i.e. (alpha_i, alpha_j) = -b / 2.
        let longer = if norms[i] > norms[j] { &norms[i] } else { &norms[j] };
        let v = -longer.clone() / q(2);
        form[i][j] = v.clone();
        form[j][i] = v;
    }
    form
}

impl RootSystem {
    /// Builds the root system of `t`. Prefer [`RootSystem::get`], which
    /// shares one instance per type.
    pub fn build(t: SimpleType) -> RootSystem {
        let n = t.rank();
        let form = build_form(t);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = q(2) * &form[i][j] / &form[i][i];
                        q_to_i64(&c).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();

        // Grow the positive roots height by height using root strings.
        let mut positive: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
        let mut index: HashMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let mut layer: Vec<LatticeVector> = positive.clone();
        while !layer.is_empty() {
            let mut next: Vec<LatticeVector> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let pair: i64 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if index.contains_key(&down.0) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pair > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        if !index.contains_key(&up.0) {
                            index.insert(up.0.clone(), usize::MAX);
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let index: HashMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();

        let cartan_t: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| q(cartan[j][i])).collect())
            .collect();
        let fundamental = inverse(&cartan_t).expect("Cartan matrix is invertible");

        let positive_weights: Vec<WeightVector> = positive
            .iter()
            .map(|r| WeightVector((0..n).map(|i| (0..n).map(|j| cartan[i][j] * r.0[j]).sum()).collect()))
            .collect();
        let norm = |v: &[i64]| -> Q {
            let mut s = Q::zero();
            for i in 0..n {
                for j in 0..n {
                    if v[i] != 0 && v[j] != 0 {
                        s += q(v[i] * v[j]) * &form[i][j];
                    }
                }
            }
            s
        };
        let positive_coroots: Vec<LatticeVector> = positive
            .iter()
            .map(|r| {
                let nr = norm(&r.0);
                LatticeVector(
                    (0..n)
                        .map(|j| {
                            let d = q(r.0[j]) * &form[j][j] / &nr;
                            q_to_i64(&d).expect("coroot coordinates are integers")
                        })
                        .collect(),
                )
            })
            .collect();
        let two_rho_check: Vec<i64> = (0..n)
            .map(|j| positive_coroots.iter().map(|c| c.0[j]).sum())
            .collect();

        // m^vee = (1/2) sum over positive roots of <alpha, theta^vee>^2, with
        // theta the highest root.
        let theta_check = positive_coroots.last().expect("nonempty");
        let s: i64 = positive_weights
            .iter()
            .map(|w| {
                let p: i64 = w.0.iter().zip(&theta_check.0).map(|(a, b)| a * b).sum();
                p * p
            })
            .sum();
        let dual_coxeter = s / 2;

        RootSystem {
            ty: t,
            cartan,
            form,
            positive,
            index,
            fundamental,
            dual_coxeter,
            positive_weights,
            positive_coroots,
            two_rho_check,
        }
    }

    /// Shared, lazily built root system of `t`.
    pub fn get(t: SimpleType) -> Arc<RootSystem> {
        static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rs) = cache.lock().expect("cache poisoned").get(&t) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::build(t));
        cache
            .lock()
            .expect("cache poisoned")
            .entry(t)
            .or_insert(rs)
            .clone()
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Invariant form on simple roots.
    pub fn form(&self) -> &[Vec<Q>] {
        &self.form
    }

    /// Positive roots ordered by height, then by decreasing lexicographic
    /// order of coordinates, so that `positive_roots()[i]` is `alpha_i` for
    /// `i < rank`.
    pub fn positive_roots(&self) -> &[LatticeVector] {
        &self.positive
    }

    /// All roots: the positive roots followed by their negatives in the same
    /// order.
    pub fn roots(&self) -> Vec<LatticeVector> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|r| -r))
            .collect()
    }

    pub fn positive_weights(&self) -> &[WeightVector] {
        &self.positive_weights
    }

    pub fn positive_coroots(&self) -> &[LatticeVector] {
        &self.positive_coroots
    }

    /// Fundamental weight `omega_i` in simple-root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> &[Q] {
        &self.fundamental[i]
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn highest_root(&self) -> &LatticeVector {
        self.positive.last().expect("nonempty")
    }

    pub fn two_rho_check(&self) -> &[i64] {
        &self.two_rho_check
    }

    /// Position of a positive root in [`RootSystem::positive_roots`].
    pub fn positive_index(&self, r: &LatticeVector) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn is_root(&self, r: &LatticeVector) -> bool {
        self.index.contains_key(&r.0) || self.index.contains_key(&(-r).0)
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                found: n,
            })
        }
    }

    /// Invariant form on root-lattice elements with rational coordinates.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[j].is_zero() && !self.form[i][j].is_zero() {
                    s += &a[i] * &b[j] * &self.form[i][j];
                }
            }
        }
        s
    }

    /// Invariant form on the root lattice.
    pub fn root_inner(&self, a: &LatticeVector, b: &LatticeVector) -> Q {
        let qa: Vec<Q> = a.0.iter().map(|&x| q(x)).collect();
        let qb: Vec<Q> = b.0.iter().map(|&x| q(x)).collect();
        self.inner(&qa, &qb)
    }

    /// Invariant form on the coroot lattice, short coroots of squared
    /// length 2.
    pub fn coroot_inner(&self, a: &LatticeVector, b: &LatticeVector) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if a.0[i] != 0 && b.0[j] != 0 && !self.form[i][j].is_zero() {
                    let c = q(4) * &self.form[i][j] / (&self.form[i][i] * &self.form[j][j]);
                    s += q(a.0[i] * b.0[j]) * c;
                }
            }
        }
        s
    }

    /// Fundamental-weight coordinates of a root-lattice element.
    pub fn root_to_weight(&self, r: &LatticeVector) -> WeightVector {
        let n = self.rank();
        WeightVector(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * r.0[j]).sum())
                .collect(),
        )
    }

    /// Simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, i: usize) -> WeightVector {
        WeightVector((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    /// Coroot of a root, in simple-coroot coordinates.
    pub fn coroot(&self, r: &LatticeVector) -> LatticeVector {
        let nr = self.root_inner(r, r);
        LatticeVector(
            (0..self.rank())
                .map(|j| {
                    let d = q(r.0[j]) * &self.form[j][j] / &nr;
                    q_to_i64(&d).expect("coroot coordinates are integers")
                })
                .collect(),
        )
    }

    /// `<w, c>` for a weight `w` and a coroot-lattice element `c`.
    pub fn pairing(&self, w: &WeightVector, coroot: &LatticeVector) -> Result<i64> {
        self.check_rank(w.len())?;
        self.check_rank(coroot.len())?;
        Ok(w.0.iter().zip(&coroot.0).map(|(a, b)| a * b).sum())
    }

    /// `<r, c>` for a root-lattice element `r` and a coroot-lattice element.
    pub fn root_pairing(&self, r: &LatticeVector, coroot: &LatticeVector) -> Result<i64> {
        self.check_rank(r.len())?;
        self.pairing(&self.root_to_weight(r), coroot)
    }

    /// Height of a weight above the zero weight measured by `rho^vee`,
    /// doubled so that it is an integer.
    pub fn level2(&self, w: &WeightVector) -> i64 {
        w.0.iter().zip(&self.two_rho_check).map(|(a, b)| a * b).sum()
    }

    /// One root per line, coordinates separated by spaces.
    pub fn render_roots(&self) -> String {
        let mut s = String::new();
        for r in self.roots() {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Expresses a rational root-coordinate vector in fundamental weights.
    pub fn rational_root_to_weight(&self, v: &[Q]) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| q(self.cartan[i][j]) * &v[j]).sum())
            .collect()
    }

    /// The number of roots, positive and negative.
    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    /// `true` when `<alpha_i, alpha_j^vee>` is reproduced by the form.
    pub fn cartan_matches_form(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| q(2) * &self.form[i][j] / &self.form[i][i] == q(self.cartan[i][j]))
        })
    }
}

/// Converts an integer matrix to rationals.
pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}
