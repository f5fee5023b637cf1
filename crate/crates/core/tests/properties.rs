use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;

use e8toe::chevalley::{AlgebraElement, ChevalleyAlgebra};
use e8toe::decomp::{peel_sl2, sl2_weights, WeightMultiset};
use e8toe::reality::{frobenius_schur, minus_one_in_weyl, self_conjugate};
use e8toe::sl2::{irrep_index_in_sln, DefiningVector};
use e8toe::{IrrepLabel, RepMultiset, RootSystem, SimpleType, WeightVector};

const TYPES: [&str; 11] = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"];

fn any_type() -> impl Strategy<Value = SimpleType> {
    proptest::sample::select(TYPES.to_vec()).prop_map(|t| t.parse().unwrap())
}

/// A type with a small dominant weight.
fn any_weight() -> impl Strategy<Value = (SimpleType, WeightVector)> {
    any_type().prop_flat_map(|t| {
        proptest::collection::vec(0i64..=2, t.rank())
            .prop_map(move |w| (t, WeightVector(w)))
            .prop_filter("small", |(t, w)| RootSystem::get(*t).weyl_dimension(w).unwrap() <= 1500)
    })
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn positive_roots_sum_to_two_rho(t in any_type()) {
        let rs = RootSystem::get(t);
        let mut sum = WeightVector::zero(t.rank());
        for r in rs.positive_roots() {
            sum = &sum + &rs.root_to_weight(r);
        }
        prop_assert_eq!(sum.0, vec![2; t.rank()]);
        prop_assert_eq!(rs.num_roots(), t.dimension() - t.rank());
    }

    #[test]
    fn multiplicities_are_weyl_invariant((t, w) in any_weight()) {
        let rs = RootSystem::get(t);
        let ws = rs.weight_system(&w).unwrap();
        prop_assert_eq!(ws.values().sum::<u64>(), rs.weyl_dimension(&w).unwrap());
        for (mu, m) in &ws {
            for i in 0..t.rank() {
                let mut r = mu.clone();
                rs.reflect(&mut r, i);
                prop_assert_eq!(ws.get(&r), Some(m));
            }
        }
        prop_assert_eq!(rs.dual_weight(&rs.dual_weight(&w)), w);
    }

    #[test]
    fn reality_is_compatible_with_duality((t, w) in any_weight()) {
        let l = IrrepLabel::simple(t, w.0.clone()).unwrap();
        prop_assert_eq!(frobenius_schur(&l), frobenius_schur(&l.dual()));
        prop_assert_eq!(frobenius_schur(&l).is_self_conjugate(), l.is_self_dual());
        if minus_one_in_weyl(&l.algebra) {
            prop_assert!(l.is_self_dual());
        }
        let r = RepMultiset::from_labels(l.algebra.clone(), [l.clone()]).unwrap();
        prop_assert!(self_conjugate(&r.sum(&r.dual()).unwrap()));
    }

    #[test]
    fn character_peeling_round_trips((t, a) in any_weight(), b in proptest::collection::vec(0i64..=1, 8), k in 1u64..3) {
        let rs = RootSystem::get(t);
        let b = WeightVector(b[..t.rank()].to_vec());
        prop_assume!(rs.weyl_dimension(&b).unwrap() <= 1500);
        let alg = e8toe::ProductType::simple(t);
        let mut m = RepMultiset::new(alg.clone());
        m.add(IrrepLabel::simple(t, a.0.clone()).unwrap(), k).unwrap();
        m.add(IrrepLabel::simple(t, b.0.clone()).unwrap(), 1).unwrap();
        let back = RepMultiset::from_character(alg, &m.character().unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn sl2_pair_peeling_round_trips(cells in proptest::collection::btree_map((1u32..6, 1u32..6), 1u64..4, 1..5)) {
        let mut w = WeightMultiset::default();
        for (&(m, n), &k) in &cells {
            for a in 0..m as i64 {
                for b in 0..n as i64 {
                    let key = vec![m as i64 - 1 - 2 * a, n as i64 - 1 - 2 * b];
                    *w.entries.entry(key).or_default() += k;
                }
            }
        }
        let peeled = peel_sl2(&w).unwrap();
        let want: BTreeMap<Vec<u32>, u64> = cells.iter().map(|(&(m, n), &k)| (vec![m, n], k)).collect();
        prop_assert_eq!(peeled, want);
    }

    #[test]
    fn jacobi_on_basis_triples(x in 0usize..248, y in 0usize..248, z in 0usize..248) {
        let g = ChevalleyAlgebra::e8();
        let [x, y, z] = [x, y, z].map(AlgebraElement::basis);
        let a = g.bracket(&x, &g.bracket(&y, &z));
        let b = g.bracket(&y, &g.bracket(&z, &x));
        let c = g.bracket(&z, &g.bracket(&x, &y));
        prop_assert!(a.add(&b).add(&c).is_zero());
        prop_assert_eq!(g.bracket(&x, &y), g.bracket(&y, &x).scale(&q(-1)));
    }

    #[test]
    fn root_sl2_has_index_one_three_ways(k in 0usize..240) {
        let g = ChevalleyAlgebra::e8();
        let h = g.root_system().coroot(&g.roots()[k]);
        let dv = DefiningVector::new(SimpleType::e8(), h.clone()).unwrap();
        prop_assert_eq!(dv.dynkin_index(), q(1));
        prop_assert_eq!(dv.half_norm(), q(1));
        // Trace form of the adjoint: index of each sl2 summand over 2 m^vee.
        let pieces = peel_sl2(&sl2_weights(g, &[h]).unwrap()).unwrap();
        let total: u64 = pieces
            .iter()
            .filter(|(n, _)| n[0] > 1)
            .map(|(n, k)| k * irrep_index_in_sln(u64::from(n[0])).unwrap())
            .sum();
        prop_assert_eq!(total, 60);
    }

    #[test]
    fn dynkin_index_is_half_norm(labels in proptest::collection::vec(0i64..=2, 8)) {
        let dv = DefiningVector::from_labels(SimpleType::e8(), &labels).unwrap();
        prop_assert_eq!(dv.dynkin_index(), dv.half_norm());
    }
}
