use proptest::prelude::*;

use grkit::formulas::{bk_path, gr_k13_path, t_path};
use grkit::naive;
use grkit::patterns::{has_mono_pattern, has_rainbow, longest_mono_path, max_linear_forest, validate_forest};
use grkit::structure::{multipartite_ham, validate_ham, HamMode};
use grkit::{read_coloring, write_coloring, EdgeColoring, PatternSpec};

fn coloring() -> impl Strategy<Value = EdgeColoring> {
    (2usize..=7, 1u8..=4).prop_flat_map(|(n, k)| {
        prop::collection::vec(1..=k, n * (n - 1) / 2)
            .prop_map(move |colors| EdgeColoring::from_lex_colors(n, k, false, colors).unwrap())
    })
}

fn pattern() -> impl Strategy<Value = PatternSpec> {
    prop_oneof![
        (1usize..8).prop_map(PatternSpec::Path),
        (1usize..6).prop_map(PatternSpec::Star),
        (1usize..6).prop_map(PatternSpec::Kipas),
        (1usize..5).prop_map(PatternSpec::Complete),
        (1usize..6, 2usize..=3).prop_map(|(m, o)| PatternSpec::LinearForestMinEdges { min_edges: m, min_order: o }),
        prop::collection::vec(2usize..5, 1..3).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            PatternSpec::LinearForestExact(v)
        }),
        Just(PatternSpec::p4_plus()),
    ]
}

proptest! {
    #[test]
    fn ecg_round_trip(c in coloring()) {
        let text = write_coloring(&c);
        let back = read_coloring(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_coloring(&back), text);
    }

    #[test]
    fn partition_property(c in coloring()) {
        let n = c.n_vertices();
        let total: usize = (1..=c.n_colors()).map(|k| c.color_class(k).unwrap().edge_count()).sum();
        prop_assert_eq!(total, n * (n - 1) / 2);
    }

    #[test]
    fn pattern_text_round_trip(p in pattern()) {
        let back: PatternSpec = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn detectors_match_enumeration(c in coloring(), p in pattern()) {
        for col in 1..=c.n_colors() {
            let fast = has_mono_pattern(&c, col, &p).unwrap();
            prop_assert_eq!(fast.is_some(), naive::has_mono(&c, col, &p), "color {} pattern {}", col, p);
            let (order, _) = longest_mono_path(&c, col).unwrap();
            prop_assert_eq!(order, naive::longest_path(&naive::class_matrix(&c, col)).max(1));
        }
    }

    #[test]
    fn forest_witnesses_validate(c in coloring(), min in 2usize..=3) {
        for col in 1..=c.n_colors() {
            let (edges, w) = max_linear_forest(&c, col, min).unwrap();
            prop_assert_eq!(edges, w.edge_count());
            prop_assert!(validate_forest(&c, col, &w, min).is_ok());
        }
    }

    #[test]
    fn monochromatic_has_no_rainbow(n in 2usize..7, k in 1u8..4, p in pattern()) {
        let c = EdgeColoring::monochromatic(n, k, 1).unwrap();
        if p.is_concrete() && p.edge_count() >= 2 && p.order() <= 8 {
            prop_assert!(has_rainbow(&c, &p).unwrap().is_none());
        }
    }

    #[test]
    fn ham_cycles(sizes in prop::collection::vec(1usize..6, 2..5)) {
        let max = *sizes.iter().max().unwrap();
        let total: usize = sizes.iter().sum();
        let ok = total - max >= max && total >= 3;
        match multipartite_ham(&sizes, HamMode::Cycle) {
            Ok(seq) => prop_assert!(ok && validate_ham(&sizes, &seq, HamMode::Cycle)),
            Err(_) => prop_assert!(!ok),
        }
    }

    #[test]
    fn ham_paths(sizes in prop::collection::vec(1usize..6, 1..5)) {
        let max = *sizes.iter().max().unwrap();
        let total: usize = sizes.iter().sum();
        let ok = total - max + 1 == max;
        match multipartite_ham(&sizes, HamMode::Path) {
            Ok(seq) => prop_assert!(ok && validate_ham(&sizes, &seq, HamMode::Path)),
            Err(_) => prop_assert!(!ok),
        }
    }

    #[test]
    fn k13_reductions(k in 3i64..=8, n in 4i64..=60) {
        if k == 3 {
            prop_assert_eq!(gr_k13_path(3, n).unwrap(), t_path(n).unwrap());
        } else if n >= 2 * (k - 1) {
            prop_assert_eq!(gr_k13_path(k, n).unwrap(), bk_path(k, n).unwrap());
        }
    }
}
