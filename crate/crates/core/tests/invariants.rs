//! Properties over random orientations of A and D trees.

use proptest::prelude::*;
use tiltquiver::quiver::{d_quiver, linear_quiver, Quiver};
use tiltquiver::rep::euler_form;
use tiltquiver::tilting::{
    closed_form_counts, delta_stats, ext_table, hasse_check, leq, tilting_quiver, TiltingModule,
};

/// A random orientation of `A_n` (2..=6) or of the fork `Q_n` (3..=4).
fn oriented() -> impl Strategy<Value = Quiver> {
    let a = (2usize..=6, any::<u64>()).prop_map(|(n, code)| (linear_quiver(n), code));
    let d = (3usize..=4, any::<u64>()).prop_map(|(n, code)| (d_quiver(n, None).unwrap(), code));
    prop_oneof![a, d].prop_map(|(q, code)| {
        let bits: Vec<bool> = (0..q.edges().len()).map(|k| code >> k & 1 == 1).collect();
        q.with_orientation(&bits).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_follow_the_shape(q in oriented()) {
        let table = ext_table(&q).unwrap();
        let tq = tilting_quiver(&table).unwrap();
        let shape = q.dynkin_shape().unwrap();
        let c = closed_form_counts(shape.kind, shape.rank()).unwrap();
        prop_assert_eq!(c.vertices, tq.node_count().into());
        prop_assert_eq!(c.arrows, tq.arrow_count().into());
    }

    #[test]
    fn order_and_arrows_agree(q in oriented()) {
        let table = ext_table(&q).unwrap();
        let tq = tilting_quiver(&table).unwrap();
        prop_assert!(hasse_check(&table, &tq).holds);
        prop_assert!(delta_stats(&table, &tq).mismatches.is_empty());
        let p = TiltingModule::from_ids(table.projectives());
        prop_assert_eq!(tq.sources(), vec![tq.index_of(&p).unwrap()]);
        for &(s, t) in &tq.arrows {
            prop_assert!(leq(&table, &tq.nodes[t], &tq.nodes[s]));
            prop_assert_eq!((tq.nodes[s].mask() ^ tq.nodes[t].mask()).count_ones(), 2);
        }
    }

    #[test]
    fn ext_is_hom_minus_euler_form(q in oriented(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let table = ext_table(&q).unwrap();
        let n = table.indecs().len();
        let (i, j) = (i.index(n), j.index(n));
        let (x, y) = (&table.indecs()[i], &table.indecs()[j]);
        let euler = euler_form(&q, &x.dim, &y.dim).unwrap();
        prop_assert_eq!(table.hom(i, j) as i64 - table.ext(i, j) as i64, euler);
        // between indecomposables of a Dynkin quiver one of the two vanishes
        prop_assert!(table.hom(i, j) == 0 || table.ext(i, j) == 0);
    }

    #[test]
    fn direct_sums_decompose(q in oriented(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let table = ext_table(&q).unwrap();
        let n = table.indecs().len();
        let mut want = vec![0u32; n];
        let mut sum = table.indecs()[picks[0].index(n)].rep.clone();
        want[picks[0].index(n)] += 1;
        for p in &picks[1..] {
            sum = sum.direct_sum(&table.indecs()[p.index(n)].rep).unwrap();
            want[p.index(n)] += 1;
        }
        prop_assert_eq!(table.decompose(&sum).unwrap(), want);
    }
}
