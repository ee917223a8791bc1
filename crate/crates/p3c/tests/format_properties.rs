//! Randomized round-trip checks for the file formats.

use p3c::{graph6, input};
use p3c_core::Graph;
use proptest::collection::vec;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        vec(any::<bool>(), slots.max(1)).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx % mask.len()] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).expect("generated edges are simple")
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(70)) {
        let s = graph6::encode(&g);
        let back = graph6::decode(&s).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    /// Autodetection can never mistake graph6 for an edge list: graph6
    /// bytes are all above the ASCII digits.
    #[test]
    fn autodetect_accepts_encoded_graphs(g in arb_graph(30)) {
        let s = graph6::encode(&g);
        let back = input::parse_graph_text(&s, false).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }
}
