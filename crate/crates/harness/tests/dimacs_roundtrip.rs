use proptest::prelude::*;
use vc4_harness::dimacs::{parse_dimacs, write_dimacs};
use vc4_harness::generate::{gen_bounded_degree, Profile};

proptest! {
    #[test]
    fn write_then_parse_is_identity(n in 5usize..30, seed in any::<u64>(), p in 0usize..3) {
        let profile = Profile::ALL[p];
        let n = if profile == Profile::Regular3 { n + n % 2 } else { n };
        let g = gen_bounded_degree(n, seed, profile).unwrap();
        let text = write_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert!(back.warnings.is_empty());
        prop_assert_eq!(back.graph, g);
    }
}

#[test]
fn k5_round_trip() {
    let mut text = String::from("p edge 5 10\n");
    for a in 1..=5 {
        for b in a + 1..=5 {
            text.push_str(&format!("e {a} {b}\n"));
        }
    }
    let g = parse_dimacs(&text).unwrap().graph;
    assert_eq!(write_dimacs(&g), text);
}
