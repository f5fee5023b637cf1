//! End-to-end acceptance checks, one line of output per criterion.
//!
//! Runs with `harness = false` so that the summary lines are always printed.
//! Values quoted from the literature are written out literally; derived
//! values are recomputed here by independent means where possible.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use e8toe::chevalley::{AlgebraElement, ChevalleyAlgebra};
use e8toe::decomp::{peel_to_bitable, refine, refine_bitable, sl2_weights, BiTable, CartanEmbedding};
use e8toe::reality::{frobenius_schur, involution_bound, RealityType};
use e8toe::sl2::{classify_sl2_upto_index, omega_index_row_e8};
use e8toe::toe::{
    centralizer_of, commuting_triples, dimension_no_go, h_index1, h_index12, h_index1_partner, h_index2,
    h_index22_b, theorem_report, Mode, TheoremReport,
};
use e8toe::{IrrepLabel, LatticeVector, ProductType, RepMultiset, RootSystem, SimpleType, WeightVector};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T>(r: e8toe::Result<T>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

/// The E8 lattice in R^8: 112 roots `±e_i ± e_j` and 128 roots
/// `(±1/2, ..., ±1/2)` with an even number of minus signs, doubled to stay
/// integral, with Bourbaki simple roots.
mod lattice {
    pub fn roots() -> Vec<[i64; 8]> {
        let mut out = Vec::new();
        for i in 0..8 {
            for j in i + 1..8 {
                for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                    let mut v = [0; 8];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
        for mask in 0u32..256 {
            if mask.count_ones() % 2 == 0 {
                let mut v = [1; 8];
                for (k, x) in v.iter_mut().enumerate() {
                    if mask >> k & 1 == 1 {
                        *x = -1;
                    }
                }
                out.push(v);
            }
        }
        out
    }

    pub fn simple() -> [[i64; 8]; 8] {
        let mut s = [[0; 8]; 8];
        s[0] = [1, -1, -1, -1, -1, -1, -1, 1];
        s[1][0] = 2;
        s[1][1] = 2;
        for i in 2..8 {
            s[i][i - 1] = 2;
            s[i][i - 2] = -2;
        }
        s
    }

    /// Coefficients of `v` in the simple roots.
    pub fn coefficients(v: &[i64; 8]) -> [i64; 8] {
        let s = simple();
        let mut m: Vec<Vec<f64>> = (0..8)
            .map(|r| {
                let mut row: Vec<f64> = (0..8).map(|c| s[c][r] as f64).collect();
                row.push(v[r] as f64);
                row
            })
            .collect();
        for c in 0..8 {
            let p = (c..8).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).unwrap();
            m.swap(c, p);
            for r in 0..8 {
                if r != c {
                    let f = m[r][c] / m[c][c];
                    for k in c..9 {
                        m[r][k] -= f * m[c][k];
                    }
                }
            }
        }
        let mut out = [0; 8];
        for i in 0..8 {
            let x = m[i][8] / m[i][i];
            assert!((x - x.round()).abs() < 1e-9);
            out[i] = x.round() as i64;
        }
        out
    }

    pub fn positive_coefficients() -> Vec<[i64; 8]> {
        roots()
            .iter()
            .map(coefficients)
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect()
    }
}

fn index_row() -> Check {
    let quoted = [2, 4, 7, 15, 10, 6, 3, 1];
    ensure(omega_index_row_e8() == quoted, || format!("got {:?}", omega_index_row_e8()))?;
    let pos = lattice::positive_coefficients();
    ensure(pos.len() == 120, || format!("{} positive lattice roots", pos.len()))?;
    for (i, &want) in quoted.iter().enumerate() {
        let s: i64 = pos.iter().map(|c| c[i] * c[i]).sum();
        ensure(s == 60 * want, || format!("node {}: sum {s}", i + 1))?;
    }
    Ok(())
}

fn classification() -> Check {
    let e8 = SimpleType::e8();
    let found = e(classify_sl2_upto_index(e8, 2, 0))?;
    let labels: Vec<(Vec<u8>, String)> = found.iter().map(|(d, i)| (d.labels.clone(), i.to_string())).collect();
    let want = vec![
        (vec![0, 0, 0, 0, 0, 0, 0, 1], "1".to_string()),
        (vec![1, 0, 0, 0, 0, 0, 0, 0], "2".to_string()),
    ];
    ensure(labels == want, || format!("max index 2 gave {labels:?}"))?;
    ensure(found[0].0.render() == "0 0 0 0 0 0 1\n    0", || found[0].0.render())?;
    let one = e(classify_sl2_upto_index(e8, 1, 0))?;
    ensure(one.len() == 1, || format!("max index 1 gave {} classes", one.len()))
}

fn centralizers() -> Check {
    let g = ChevalleyAlgebra::e8();
    let cases: [(Vec<LatticeVector>, usize, &str); 4] = [
        (vec![h_index1()], 133, "E7"),
        (vec![h_index2()], 78, "B6"),
        (vec![h_index2(), h_index22_b()], 20, "C2×C2"),
        (vec![h_index12(), h_index2()], 39, "A1×B4"),
    ];
    for (hs, dim, ty) in cases {
        let (d, id) = e(centralizer_of(g, &hs, 0))?;
        ensure(d == dim && id.ty.to_string() == ty, || format!("{hs:?}: {d} {}", id.ty))?;
    }
    // Simple coroots of so13 in the E8 coroot lattice, in a chamber chosen
    // to match the quoted pinning.
    let t = e(g.sl2_triple(&h_index2(), &[], 0))?;
    let c = g.centralizer(&t.generators());
    let chamber: Vec<BigRational> = [0, -100, 1, 1, 1, 1, 1, 0].iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let id = e(g.identify_type(&c, Some(&chamber)))?;
    let quoted: Vec<LatticeVector> = [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, -1, -1, -2, -2, -2, -2, 0],
    ]
    .iter()
    .map(|v| LatticeVector(v.to_vec()))
    .collect();
    ensure(id.integral_coroots() == Some(quoted), || format!("{:?}", id.integral_coroots()))
}

/// `rows[n-1][m-1]` is the multiplicity of `m ⊗ n`.
fn table_matches(t: &BiTable, rows: &[[u64; 3]; 3]) -> Check {
    for (n, row) in rows.iter().enumerate() {
        for (m, &d) in row.iter().enumerate() {
            let got = t.dim(m as u32 + 1, n as u32 + 1);
            ensure(got == d, || format!("m={} n={}: {got} vs {d}", m + 1, n + 1))?;
        }
    }
    ensure(t.max_m() <= 3 && t.max_n() <= 3, || "cells beyond 3".into())?;
    let total: u64 = t.dims.iter().map(|(&(m, n), &d)| u64::from(m * n) * d).sum();
    ensure(total == 248, || format!("sum of m·n·dim is {total}"))
}

fn tables() -> Check {
    let g = ChevalleyAlgebra::e8();
    let cases = [
        (h_index1(), h_index1_partner(), [[66, 32, 1], [32, 12, 0], [1, 0, 0]]),
        (h_index2(), h_index22_b(), [[20, 20, 6], [20, 16, 4], [6, 4, 0]]),
        (h_index12(), h_index2(), [[39, 18, 1], [32, 16, 0], [10, 2, 0]]),
    ];
    for (a, b, rows) in cases {
        let t = e(peel_to_bitable(&e(sl2_weights(g, &[a.clone(), b.clone()]))?))?;
        table_matches(&t, &rows).map_err(|m| format!("{a} / {b}: {m}"))?;
    }
    Ok(())
}

fn label(t: &str, w: &[i64]) -> IrrepLabel {
    IrrepLabel::new(t.parse().unwrap(), WeightVector(w.to_vec())).unwrap()
}

fn multiset(t: &str, ws: &[&[i64]]) -> RepMultiset {
    RepMultiset::from_labels(t.parse().unwrap(), ws.iter().map(|w| label(t, w))).unwrap()
}

fn swap_factors(r: &RepMultiset) -> RepMultiset {
    let mut out = RepMultiset::new(r.algebra().clone());
    for (l, k) in r.iter() {
        let w = &l.weight.0;
        let h = w.len() / 2;
        let s: Vec<i64> = w[h..].iter().chain(&w[..h]).copied().collect();
        out.add(label(&r.algebra().to_string(), &s), k).unwrap();
    }
    out
}

fn refinements() -> Check {
    let g = ChevalleyAlgebra::e8();
    let (_, b6) = e(centralizer_of(g, &[h_index2()], 0))?;
    let cells = e(refine(g, &[h_index2()], &b6))?;
    let want: BTreeMap<Vec<u32>, RepMultiset> = [
        (vec![1], multiset("B6", &[&[0, 1, 0, 0, 0, 0]])),
        (vec![2], multiset("B6", &[&[0, 0, 0, 0, 0, 1]])),
        (vec![3], multiset("B6", &[&[0; 6], &[1, 0, 0, 0, 0, 0]])),
    ]
    .into_iter()
    .collect();
    ensure(cells == want, || format!("so13: {cells:?}"))?;

    let hs = [h_index2(), h_index22_b()];
    let (_, z) = e(centralizer_of(g, &hs, 0))?;
    let t = e(refine_bitable(g, &hs[0], &hs[1], &z))?;
    // Written with the first factor of C2×C2 first; the computed pinning may
    // list the two factors the other way around.
    let c = "C2×C2";
    let quoted = [
        ((2, 1), multiset(c, &[&[0, 1, 1, 0]])),
        ((1, 2), multiset(c, &[&[1, 0, 0, 1]])),
        ((2, 3), multiset(c, &[&[0, 0, 1, 0]])),
        ((3, 2), multiset(c, &[&[1, 0, 0, 0]])),
        ((2, 2), multiset(c, &[&[1, 0, 1, 0]])),
    ];
    ensure(label(c, &[0, 1, 1, 0]).name() == "(5,4)", || "C2 naming".into())?;
    let got = |m, n| t.contents(m, n).cloned().unwrap_or_else(|| RepMultiset::new(c.parse().unwrap()));
    let direct = quoted.iter().all(|((m, n), r)| got(*m, *n) == *r);
    let swapped = quoted.iter().all(|((m, n), r)| got(*m, *n) == swap_factors(r));
    ensure(direct || swapped, || t.render())
}

fn summands(s: &str) -> BTreeSet<String> {
    s.split('⊕').map(|x| x.trim().replace(' ', "")).filter(|x| x != "0").collect()
}

fn reversed_factors(s: &str) -> String {
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    let mut parts: Vec<&str> = inner.split(',').collect();
    parts.reverse();
    format!("({})", parts.join(","))
}

fn results_tables() -> Check {
    let quoted: [(&str, &str, &str); 6] = [
        ("E8(−24)", "Spin(11)", "32"),
        ("E8(8)", "Spin(5)×Spin(7)", "(4,8)"),
        ("E8(−24)", "Spin(9)×Spin(3)", "(16,2)"),
        ("R(E8,C)", "E7", "56"),
        ("R(E8,C)", "Spin(12)", "32 ⊕ 32′"),
        ("R(E8,C)", "Spin(13)", "64"),
    ];
    let extra: [(&str, &str, &str, &str); 3] = [
        ("E8(8)", "Spin(5)", "4", "4 ⊕ 16"),
        ("R(E8,C)", "Spin(5)×Spin(5)", "(4,1) ⊕ (1,4)", "(4,5) ⊕ (5,4)"),
        ("R(E8,C)", "SU(2)×Spin(9)", "(2,1)", "(2,9) ⊕ (2,16)"),
    ];
    let check_row = |r: &e8toe::toe::CandidateReport, amb: &str, gmax: &str, v21: &str| -> Check {
        let got = summands(&r.v21.to_string());
        let want = summands(v21);
        let flipped: BTreeSet<String> = want.iter().map(|x| reversed_factors(x)).collect();
        ensure(
            r.config.ambient.to_string() == amb && r.config.gmax_name == gmax && (got == want || got == flipped),
            || format!("{} {} {}", r.config.ambient, r.config.gmax_name, r.v21),
        )
    };
    let t2 = e(theorem_report(Mode::Toe2, 0))?;
    ensure(t2.candidates.len() == 6, || format!("{} rows", t2.candidates.len()))?;
    for (r, (a, g, v)) in t2.candidates.iter().zip(quoted) {
        check_row(r, a, g, v)?;
    }
    let t2p = e(theorem_report(Mode::Toe2Prime, 0))?;
    ensure(t2p.candidates.len() == 9, || format!("{} rows", t2p.candidates.len()))?;
    ensure(t2p.candidates[..6] == t2.candidates[..], || "first six rows differ".into())?;
    for (r, (a, g, v32, v21)) in t2p.candidates[6..].iter().zip(extra) {
        check_row(r, a, g, v21)?;
        ensure(summands(&r.v32.to_string()) == summands(v32), || format!("V(3,2) = {}", r.v32))?;
    }
    // The split form with G_max = Spin(5): both off-diagonal pairs agree.
    let split = &t2p.candidates[6];
    let diag = CartanEmbedding::sp4_diagonal();
    let cell = |m, n| diag.branch(split.bitable.contents(m, n).unwrap()).unwrap().to_string();
    ensure(cell(2, 3) == "4" && cell(3, 2) == "4", || format!("{} {}", cell(2, 3), cell(3, 2)))?;
    ensure(cell(1, 2) == "4 ⊕ 16" && cell(2, 1) == "4 ⊕ 16", || cell(1, 2))
}

fn theorem(report: &TheoremReport) -> Check {
    for c in &report.candidates {
        ensure(e8toe::reality::self_conjugate(&c.v21) && c.toe3_fails, || {
            format!("{} / {} is chiral", c.config.ambient, c.config.gmax_name)
        })?;
    }
    ensure(report.holds(), || "report does not hold".into())?;
    report.verify().map_err(|x| x.to_string())
}

fn theorem_both_modes() -> Check {
    theorem(&e(theorem_report(Mode::Toe2, 0))?)?;
    theorem(&e(theorem_report(Mode::Toe2Prime, 0))?)
}

fn dimension_count() -> Check {
    let d = e(dimension_no_go(3))?;
    ensure(d.available == vec![112, 128], || format!("{:?}", d.available))?;
    ensure(d.required == 180 && d.involution_bound == 128 && d.excluded, || format!("{d:?}"))?;
    ensure(d.render().contains("180 > 128"), || d.render())?;
    // Independent count on the lattice model.
    let theta = [2, 0, 0, 0, 0, 0, 0, 2];
    let roots = lattice::roots();
    let odd_theta = roots.iter().filter(|r| (r.iter().zip(theta).map(|(a, b)| a * b).sum::<i64>() / 4) % 2 != 0).count();
    let odd_w1 = roots.iter().filter(|r| lattice::coefficients(r)[0] % 2 != 0).count();
    ensure(odd_theta == 112 && odd_w1 == 128, || format!("{odd_theta} {odd_w1}"))?;
    let rs = RootSystem::get(SimpleType::e8());
    ensure(involution_bound(&rs) == (248 + 8) / 2, || "bound".into())
}

/// Signed orbit of `rho` under simple reflections, in fundamental-weight
/// coordinates, where `alpha_i` has coordinates `cartan[j][i]`. `rho` is
/// regular, so breadth-first distance is the length.
fn signed_rho_orbit(cartan: &[Vec<i64>]) -> Vec<(Vec<i64>, i64)> {
    let n = cartan.len();
    let rho = vec![1; n];
    let mut seen: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    seen.insert(rho.clone(), 1);
    let mut queue = VecDeque::from([rho]);
    while let Some(w) = queue.pop_front() {
        let sign = seen[&w];
        for i in 0..n {
            let v: Vec<i64> = (0..n).map(|j| w[j] - w[i] * cartan[j][i]).collect();
            if !seen.contains_key(&v) {
                seen.insert(v.clone(), -sign);
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Multiplicities of the trivial representation in `Sym²V` and `Λ²V`.
fn trivial_in_square(rs: &RootSystem, w: &WeightVector) -> (i64, i64) {
    let chars = rs.weight_system(w).unwrap();
    let m = |v: &Vec<i64>| chars.get(&WeightVector(v.clone())).copied().unwrap_or(0) as i64;
    let n = rs.rank();
    let (mut sym, mut alt) = (0, 0);
    for (wr, sign) in signed_rho_orbit(rs.cartan()) {
        let nu: Vec<i64> = (0..n).map(|i| 1 - wr[i]).collect();
        let s: i64 = chars
            .iter()
            .map(|(mu, &k)| {
                let rest: Vec<i64> = nu.iter().zip(&mu.0).map(|(a, b)| a - b).collect();
                k as i64 * m(&rest)
            })
            .sum();
        let d = if nu.iter().all(|x| x % 2 == 0) {
            m(&nu.iter().map(|x| x / 2).collect())
        } else {
            0
        };
        sym += sign * (s + d) / 2;
        alt += sign * (s - d) / 2;
    }
    (sym, alt)
}

fn small_irreps(rs: &RootSystem, max_dim: u64) -> Vec<WeightVector> {
    let n = rs.rank();
    let mut out = BTreeSet::new();
    let mut queue = VecDeque::from([WeightVector::zero(n)]);
    while let Some(w) = queue.pop_front() {
        if out.contains(&w) || rs.weyl_dimension(&w).unwrap() > max_dim {
            continue;
        }
        for i in 0..n {
            let mut v = w.clone();
            v.0[i] += 1;
            queue.push_back(v);
        }
        out.insert(w);
    }
    out.into_iter().collect()
}

fn reality_oracle() -> Check {
    let mut checked = 0;
    for t in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"] {
        let ty: SimpleType = match t.parse() {
            Ok(x) => x,
            Err(_) if t == "D3" => continue,
            Err(x) => return Err(x.to_string()),
        };
        let rs = RootSystem::get(ty);
        for w in small_irreps(&rs, 64) {
            let (sym, alt) = trivial_in_square(&rs, &w);
            let oracle = match (sym, alt) {
                (1, 0) => RealityType::Real,
                (0, 1) => RealityType::Quaternionic,
                (0, 0) => RealityType::Complex,
                _ => return Err(format!("{t} {w}: Sym² {sym}, Λ² {alt}")),
            };
            let l = IrrepLabel::simple(ty, w.0.clone()).unwrap();
            ensure(frobenius_schur(&l) == oracle, || format!("{t} {w}: {} vs {oracle}", frobenius_schur(&l)))?;
            checked += 1;
        }
    }
    ensure(checked > 100, || format!("only {checked} irreps"))?;
    for l in 1..=8usize {
        let (ty, w) = if l == 1 {
            ("A1".parse::<SimpleType>().unwrap(), vec![1])
        } else {
            let mut w = vec![0; l];
            w[l - 1] = 1;
            (format!("B{l}").parse().unwrap(), w)
        };
        let real = frobenius_schur(&IrrepLabel::simple(ty, w).unwrap()) == RealityType::Real;
        ensure(real == matches!(l % 4, 0 | 3), || format!("spin of B{l}"))?;
    }
    Ok(())
}

fn jacobi(g: &ChevalleyAlgebra, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> bool {
    let a = g.bracket(x, &g.bracket(y, z));
    let b = g.bracket(y, &g.bracket(z, x));
    let c = g.bracket(z, &g.bracket(x, y));
    a.add(&b).add(&c).is_zero()
}

fn structural() -> Check {
    let g = ChevalleyAlgebra::e8();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let [x, y, z] = [0; 3].map(|_| AlgebraElement::basis(rng.gen_range(0..248)));
        ensure(jacobi(g, &x, &y, &z), || "Jacobi fails on a basis triple".into())?;
    }
    let two = BigRational::from_integer(2.into());
    for hs in [
        vec![h_index1(), h_index1_partner()],
        vec![h_index2(), h_index22_b()],
        vec![h_index12(), h_index2()],
    ] {
        let ts = e(commuting_triples(g, &hs, 0))?;
        for t in &ts {
            ensure(g.bracket(&t.h, &t.e) == t.e.scale(&two), || "[h,e] ≠ 2e".into())?;
            ensure(g.bracket(&t.h, &t.f) == t.f.scale(&-two.clone()), || "[h,f] ≠ -2f".into())?;
            ensure(g.bracket(&t.e, &t.f) == t.h, || "[e,f] ≠ h".into())?;
        }
        let gens: Vec<AlgebraElement> = ts.iter().flat_map(|t| t.generators()).collect();
        for a in &ts[0].generators() {
            for b in &ts[1].generators() {
                ensure(g.bracket(a, b).is_zero(), || "factors do not commute".into())?;
            }
        }
        for x in &gens {
            for y in &gens {
                for k in 0..248 {
                    ensure(jacobi(g, x, y, &AlgebraElement::basis(k)), || "Jacobi fails on sl2×sl2".into())?;
                }
            }
        }
    }

    // Freudenthal against Weyl for every label in the pipeline.
    let mut labels = BTreeSet::new();
    for mode in [Mode::Toe2, Mode::Toe2Prime] {
        for c in e(theorem_report(mode, 0))?.candidates {
            for r in c.bitable.contents.iter().flat_map(|m| m.values()).chain([&c.v21, &c.v32]) {
                labels.extend(r.iter().map(|(l, _)| l));
            }
        }
    }
    for l in &labels {
        let total: u64 = e(l.character())?.values().sum();
        ensure(total == e(l.dimension())?, || format!("{}: {total}", l.name()))?;
    }
    ensure(labels.len() > 20, || format!("{} labels", labels.len()))?;

    let vector = multiset("D6", &[&[1, 0, 0, 0, 0, 0]]);
    for (emb, want) in [
        (CartanEmbedding::so12_so11(), "1 ⊕ 11"),
        (CartanEmbedding::so12_so9_so3(), "(1,3) ⊕ (9,1)"),
        (CartanEmbedding::so12_so5_so7(), "(5,1) ⊕ (1,7)"),
    ] {
        let b = e(emb.branch(&vector))?;
        ensure(b.to_string() == want && e(b.dimension())? == 12, || b.to_string())?;
    }
    let _: ProductType = "B2×B3".parse().map_err(|x: e8toe::Error| x.to_string())?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("index row of the fundamental coweights", index_row),
        ("sl2 classes of index at most 1 and 2", classification),
        ("centralizer dimensions, types and so13 pinning", centralizers),
        ("sl2 × sl2 multiplicity tables", tables),
        ("so13 and sp4 × sp4 refinements", refinements),
        ("results tables in both modes", results_tables),
        ("every V(2,1) is self-conjugate", theorem_both_modes),
        ("dimension count for three generations", dimension_count),
        ("Frobenius-Schur against tensor squares", reality_oracle),
        ("Jacobi, Freudenthal and vector branchings", structural),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {m}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
