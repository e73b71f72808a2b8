use proptest::prelude::*;
use rlsa_core::{generate_ba, generate_er, parse_instance, write_instance, Format, Graph};

fn check_canonical(g: &Graph) {
    let degree_sum: usize = (0..g.num_nodes()).map(|v| g.degree(v)).sum();
    assert_eq!(degree_sum, 2 * g.num_edges());
    for u in 0..g.num_nodes() {
        let nb = g.neighbors(u);
        assert!(nb.windows(2).all(|w| w[0] < w[1]), "sorted, no duplicates");
        for &v in nb {
            assert_ne!(u, v);
            assert!(g.neighbors(v).contains(&u));
        }
    }
}

#[test]
fn er_mean_edge_count_matches_binomial_expectation() {
    let (n, p) = (700usize, 0.15);
    let expected = p * (n * (n - 1) / 2) as f64;
    let total: usize = (0..100)
        .map(|s| generate_er(n, p, s).unwrap().num_edges())
        .sum();
    let mean = total as f64 / 100.0;
    assert!(
        ((mean - expected) / expected).abs() < 0.02,
        "{mean} vs {expected}"
    );
}

#[test]
fn ba_round_trip() {
    let g = generate_ba(50, 2, 17).unwrap();
    for format in [Format::Dimacs, Format::EdgeList] {
        assert_eq!(
            parse_instance(&write_instance(&g, format), format).unwrap(),
            g
        );
    }
}

#[test]
fn reading_from_disk_detects_format() {
    let dir = std::env::temp_dir().join(format!("rlsa-graph-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = generate_er(30, 0.2, 3).unwrap();
    for (name, format) in [("g.dimacs", Format::Dimacs), ("g.txt", Format::EdgeList)] {
        let path = dir.join(name);
        std::fs::write(&path, write_instance(&g, format)).unwrap();
        assert_eq!(rlsa_core::read_instance(&path, None).unwrap(), g);
    }
    assert!(rlsa_core::read_instance(dir.join("missing"), None).is_err());
    std::fs::remove_dir_all(dir).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn write_then_parse_is_identity(n in 2usize..60, p in 0.0f64..1.0, m in 1usize..5, seed in any::<u64>(), ba in any::<bool>()) {
        let g = if ba && m < n { generate_ba(n, m, seed).unwrap() } else { generate_er(n, p, seed).unwrap() };
        check_canonical(&g);
        for format in [Format::Dimacs, Format::EdgeList] {
            prop_assert_eq!(&parse_instance(&write_instance(&g, format), format).unwrap(), &g);
        }
    }

    #[test]
    fn generators_are_pure(n in 2usize..80, seed in any::<u64>()) {
        prop_assert_eq!(generate_er(n, 0.3, seed).unwrap(), generate_er(n, 0.3, seed).unwrap());
        prop_assert_eq!(generate_ba(n, 1, seed).unwrap(), generate_ba(n, 1, seed).unwrap());
        prop_assert_eq!(generate_ba(n, 1, seed).unwrap().num_edges(), n - 1);
    }

    #[test]
    fn edge_list_order_is_irrelevant(edges in proptest::collection::vec((0usize..20, 0usize..20), 0..60)) {
        let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
        let mut reversed: Vec<_> = edges.iter().map(|&(u, v)| (v, u)).collect();
        reversed.reverse();
        let a = Graph::from_edge_list(20, edges).unwrap();
        check_canonical(&a);
        prop_assert_eq!(a, Graph::from_edge_list(20, reversed).unwrap());
    }
}
