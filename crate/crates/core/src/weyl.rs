//! Weyl group actions, irreducible characters and dimensions.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::roots::{RootSystem, WeightVector};

impl RootSystem {
    fn check_weight(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: w.len(),
            });
        }
        Ok(())
    }

    fn check_dominant(&self, w: &WeightVector) -> Result<()> {
        self.check_weight(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.0.clone()))
        }
    }

    /// Applies the simple reflection `s_i` in place.
    pub fn reflect(&self, w: &mut WeightVector, i: usize) {
        let c = w.0[i];
        if c == 0 {
            return;
        }
        for j in 0..self.rank() {
            w.0[j] -= c * self.cartan()[j][i];
        }
    }

    /// Dominant representative of the Weyl orbit of `w`, and the number of
    /// reflections used to reach it.
    pub fn to_dominant(&self, w: &WeightVector) -> (WeightVector, usize) {
        let mut v = w.clone();
        let mut steps = 0;
        while let Some(i) = v.0.iter().position(|&x| x < 0) {
            self.reflect(&mut v, i);
            steps += 1;
        }
        (v, steps)
    }

    /// Weyl orbit of `w`, dominant element first.
    pub fn orbit(&self, w: &WeightVector) -> Vec<WeightVector> {
        let (start, _) = self.to_dominant(w);
        let mut seen: HashSet<WeightVector> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                if v.0[i] > 0 {
                    let mut u = v.clone();
                    self.reflect(&mut u, i);
                    if seen.insert(u.clone()) {
                        out.push(u.clone());
                        queue.push_back(u);
                    }
                }
            }
        }
        out
    }

    /// Reduced word of the longest Weyl element, found by descending from
    /// `rho` to `-rho`. Reflections are applied left to right.
    pub fn longest_word(&self) -> Vec<usize> {
        let mut v = WeightVector(vec![1; self.rank()]);
        let mut word = Vec::new();
        while let Some(i) = v.0.iter().position(|&x| x > 0) {
            self.reflect(&mut v, i);
            word.push(i);
        }
        word
    }

    /// The permutation `p` with `-w0(omega_i) = omega_{p[i]}`.
    pub fn longest_element_action(&self) -> Vec<usize> {
        let word = self.longest_word();
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut v = WeightVector::unit(n, i);
                for &k in &word {
                    self.reflect(&mut v, k);
                }
                let v = -&v;
                v.0.iter()
                    .position(|&x| x == 1)
                    .filter(|_| v.0.iter().filter(|&&x| x != 0).count() == 1)
                    .expect("-w0 permutes fundamental weights")
            })
            .collect()
    }

    /// `true` when `-1` lies in the Weyl group.
    pub fn minus_one_in_weyl(&self) -> bool {
        self.longest_element_action()
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j)
    }

    /// Highest weight of the dual of the irreducible module with highest
    /// weight `w`.
    pub fn dual_weight(&self, w: &WeightVector) -> WeightVector {
        let p = self.longest_element_action();
        let mut out = vec![0; self.rank()];
        for (i, &j) in p.iter().enumerate() {
            out[j] = w.0[i];
        }
        WeightVector(out)
    }

    /// `<w, alpha^vee>` for every positive root `alpha`.
    pub fn coroot_pairings<'a>(&'a self, w: &'a WeightVector) -> impl Iterator<Item = i64> + 'a {
        self.positive_coroots()
            .iter()
            .map(move |c| w.0.iter().zip(&c.0).map(|(a, b)| a * b).sum())
    }

    /// Dimension of the irreducible module of highest weight `w`.
    pub fn weyl_dimension(&self, w: &WeightVector) -> Result<u64> {
        self.check_dominant(w)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for c in self.positive_coroots() {
            let rho: i64 = c.0.iter().sum();
            let lam: i64 = w.0.iter().zip(&c.0).map(|(a, b)| a * b).sum();
            num *= BigInt::from(lam + rho);
            den *= BigInt::from(rho);
        }
        let (d, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        d.to_u64().ok_or(Error::Overflow("Weyl dimension"))
    }

    /// Gram matrix of the fundamental weights scaled to integers, together
    /// with the scale.
    pub fn weight_gram(&self) -> (Vec<Vec<i64>>, i64) {
        let n = self.rank();
        let f = self.fundamental_weights();
        let g: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| self.inner(&f[i], &f[j])).collect())
            .collect();
        let mut scale = BigInt::one();
        for row in &g {
            for x in row {
                scale = scale.lcm(x.denom());
            }
        }
        let s = Q::from_integer(scale.clone());
        let gi = g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * &s).to_integer().to_i64().expect("small"))
                    .collect()
            })
            .collect();
        (gi, scale.to_i64().expect("small"))
    }

    /// Invariant form on weights, as an exact rational.
    pub fn weight_inner(&self, a: &WeightVector, b: &WeightVector) -> Q {
        let (g, s) = self.weight_gram();
        q(scaled_inner(&g, &a.0, &b.0) as i64) / q(s)
    }

    /// Dominant weights of the irreducible module of highest weight `w`,
    /// ordered by decreasing level.
    pub fn dominant_weights(&self, w: &WeightVector) -> Result<Vec<WeightVector>> {
        self.check_dominant(w)?;
        let pos = self.positive_weights();
        let mut seen: HashSet<WeightVector> = HashSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(mu) = stack.pop() {
            for a in pos {
                let nu = &mu - a;
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    stack.push(nu);
                }
            }
        }
        let mut out: Vec<WeightVector> = seen.into_iter().collect();
        out.sort_by(|a, b| self.level2(b).cmp(&self.level2(a)).then_with(|| b.cmp(a)));
        Ok(out)
    }

    /// Multiplicities of the dominant weights of the irreducible module of
    /// highest weight `w`, by Freudenthal's formula.
    pub fn dominant_character(&self, w: &WeightVector) -> Result<BTreeMap<WeightVector, u64>> {
        let doms = self.dominant_weights(w)?;
        let (g, _) = self.weight_gram();
        let n = self.rank();
        let rho = WeightVector(vec![1; n]);
        let lr = w + &rho;
        let top = scaled_inner(&g, &lr.0, &lr.0);
        let pos = self.positive_weights();

        let mut mult: HashMap<WeightVector, i128> = HashMap::new();
        for mu in &doms {
            if mu == w {
                mult.insert(mu.clone(), 1);
                continue;
            }
            let mut sum: i128 = 0;
            for a in pos {
                let mut nu = mu + a;
                loop {
                    let (d, _) = self.to_dominant(&nu);
                    let Some(&m) = mult.get(&d) else { break };
                    sum += m * scaled_inner(&g, &nu.0, &a.0);
                    nu = &nu + a;
                }
            }
            let mr = mu + &rho;
            let denom = top - scaled_inner(&g, &mr.0, &mr.0);
            let m = 2 * sum / denom;
            debug_assert_eq!(2 * sum % denom, 0);
            mult.insert(mu.clone(), m);
        }
        Ok(doms
            .into_iter()
            .map(|d| {
                let m = mult[&d];
                (d, m as u64)
            })
            .collect())
    }

    /// All weights of the irreducible module of highest weight `w` with
    /// their multiplicities.
    pub fn weight_system(&self, w: &WeightVector) -> Result<BTreeMap<WeightVector, u64>> {
        let dom = self.dominant_character(w)?;
        let mut out = BTreeMap::new();
        for (d, m) in dom {
            for v in self.orbit(&d) {
                out.insert(v, m);
            }
        }
        Ok(out)
    }
}

fn scaled_inner(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i128 {
    let mut s: i128 = 0;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            s += (x as i128) * (y as i128) * (g[i][j] as i128);
        }
    }
    s
}
