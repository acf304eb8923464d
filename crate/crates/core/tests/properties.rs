mod common;

use coprime_core::detect::{self, verify::verify_witness, SplitPartition};
use coprime_core::embed;
use coprime_core::group::parse::parse_group;
use coprime_core::{GroupHandle, SimpleGraph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn small_group() -> impl Strategy<Value = GroupHandle> {
    let leaf = prop_oneof![
        (1u64..40).prop_map(|n| GroupHandle::cyclic(n).unwrap()),
        (1u64..30).prop_map(|m| GroupHandle::dihedral(2 * m).unwrap()),
        (2u64..12).prop_map(|m| GroupHandle::dicyclic(4 * m).unwrap()),
        (1u32..6).prop_map(|n| GroupHandle::symmetric(n).unwrap()),
        (1u32..6).prop_map(|n| GroupHandle::alternating(n).unwrap()),
    ];
    prop_oneof![
        leaf.clone(),
        (leaf.clone(), leaf).prop_map(|(a, b)| GroupHandle::direct_product(vec![a, b]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cographs_are_closed_under_complement(g in graph(12)) {
        prop_assert_eq!(detect::is_cograph(&g).holds, detect::is_cograph(&g.complement()).holds);
    }

    #[test]
    fn split_decision_is_consistent(g in graph(12)) {
        let d = detect::is_split(&g).expect("routes agree");
        match (&d.witness, &d.partition) {
            (Some(w), None) => prop_assert!(!d.holds && verify_witness(&g, w)),
            (None, Some(SplitPartition::Vertices { clique, independent })) => {
                prop_assert!(d.holds);
                prop_assert_eq!(clique.len() + independent.len(), g.len());
            }
            _ => prop_assert!(false, "inconsistent decision {:?}", d),
        }
        // split graphs are closed under complement as well
        prop_assert_eq!(d.holds, detect::is_split(&g.complement()).unwrap().holds);
    }

    #[test]
    fn detector_witnesses_verify(g in graph(10)) {
        for d in [
            detect::is_c4_free(&g),
            detect::is_star_free(&g, 3),
            detect::is_cograph(&g),
            detect::is_at_free(&g),
        ] {
            if let Some(w) = &d.witness {
                prop_assert!(verify_witness(&g, w));
            }
        }
    }

    #[test]
    fn repaired_embedding_round_trips(g in graph(9)) {
        let plan = embed::plan_embedding(&g).unwrap();
        prop_assert!(embed::verify_embedding(&g, &plan).ok());
    }

    #[test]
    fn spec_strings_round_trip(g in small_group()) {
        let parsed = parse_group(&g.to_string()).unwrap();
        prop_assert_eq!(parsed.to_string(), g.to_string());
        prop_assert_eq!(parsed.order_spectrum(), g.order_spectrum());
    }

    #[test]
    fn element_orders_are_exact(g in small_group(), seed in any::<u64>()) {
        let id = (seed % g.order()) as usize;
        let o = g.element_order(id).unwrap();
        let mut x = id;
        for k in 1..=o {
            if k == o {
                prop_assert_eq!(x, 0);
            } else {
                prop_assert_ne!(x, 0);
            }
            x = g.multiply(x, id).unwrap();
        }
    }

    #[test]
    fn spectra_sum_to_the_order(g in small_group()) {
        let s = g.order_spectrum();
        prop_assert_eq!(s.total(), g.order());
        prop_assert_eq!(s.count(1), 1);
    }
}
