use grkit::naive;
use grkit::search::{
    brute_force_ramsey, compute_bk, compute_t, gr_desk_verify, lemma_instance, universal_check, CheckOutcome, GrMode,
    Lemma, MonoCheck, SearchOptions,
};
use grkit::{EdgeColoring, Error, PatternSpec};

fn p(s: &str) -> PatternSpec {
    s.parse().unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

/// Every 2-coloring of `K_n`, as lexicographic color vectors.
fn all_two_colorings(n: usize) -> impl Iterator<Item = EdgeColoring> {
    let m = n * (n - 1) / 2;
    (0u64..1 << m).map(move |bits| {
        let colors = (0..m).map(|i| if bits >> i & 1 == 1 { 2 } else { 1 }).collect();
        EdgeColoring::from_lex_colors(n, 2, false, colors).unwrap()
    })
}

fn naive_hit(c: &EdgeColoring, checks: &[MonoCheck]) -> bool {
    checks.iter().any(|chk| naive::has_mono(c, chk.color.unwrap(), &chk.pattern))
}

/// The least N such that every 2-coloring of K_N has a red `red` or a blue `blue`.
fn naive_ramsey(red: &PatternSpec, blue: &PatternSpec, max_n: usize) -> Option<usize> {
    (1..=max_n).find(|&n| all_two_colorings(n).all(|c| naive::has_mono(&c, 1, red) || naive::has_mono(&c, 2, blue)))
}

#[test]
fn path_path_values() {
    for (a, b, want) in
        [("path:3", "path:3", 3), ("path:4", "path:3", 4), ("path:4", "path:4", 5), ("path:5", "path:4", 6)]
    {
        let r = brute_force_ramsey(&p(a), &p(b), 8, &opts()).unwrap();
        assert_eq!(r.value.value(), Some(want), "{a} {b}");
        assert_eq!(r.extremal_witness.unwrap().n_vertices(), want as usize - 1);
    }
}

#[test]
fn ramsey_agrees_with_enumeration() {
    let pairs = [
        ("path:3", "star:2"),
        ("star:2", "star:2"),
        ("path:4", "star:2"),
        ("k:3", "path:3"),
        ("lfx:2+2", "path:3"),
        ("star:3", "path:3"),
        ("kipas:2", "path:3"),
    ];
    for (a, b) in pairs {
        let (a, b) = (p(a), p(b));
        let want = naive_ramsey(&a, &b, 6).expect("small value");
        let got = brute_force_ramsey(&a, &b, 6, &opts()).unwrap();
        assert_eq!(got.value.value(), Some(want as i64), "{a} {b}");
    }
}

#[test]
fn lemma_one_agrees_with_enumeration() {
    for n in [4, 5] {
        let (big, red, blue) = lemma_instance(Lemma::L31i, n, None).unwrap();
        let engine = universal_check(big, 2, &red, &[], &blue, &opts()).unwrap();
        let brute = all_two_colorings(big).find(|c| !naive_hit(c, &red) && !naive_hit(c, &blue));
        assert_eq!(engine.holds(), brute.is_none(), "n={n}");
        assert!(engine.holds());
    }
}

#[test]
fn lemma_one_second_part() {
    let (big, red, blue) = lemma_instance(Lemma::L31ii, 5, None).unwrap();
    assert_eq!(big, 7);
    assert!(universal_check(big, 2, &red, &[], &blue, &opts()).unwrap().holds());
}

#[test]
fn weakened_lemma_is_refuted() {
    // Without the P_3 alternative a single blue path of order 3 escapes.
    let (big, red, _) = lemma_instance(Lemma::L31i, 5, None).unwrap();
    let blue = vec![MonoCheck { color: Some(2), pattern: p("lfx:2+2") }];
    let r = universal_check(big, 2, &red, &[], &blue, &opts()).unwrap();
    let CheckOutcome::Counterexample(c) = r.outcome else { panic!("expected a counterexample") };
    assert!(!naive_hit(&c, &red) && !naive_hit(&c, &blue));
}

#[test]
fn family_quantities() {
    let t: Vec<_> = ["path:3", "path:4", "path:5"].iter().map(|s| compute_t(&p(s), 10, &opts()).unwrap()).collect();
    assert_eq!(t.iter().map(|r| r.value.value().unwrap()).collect::<Vec<_>>(), [4, 5, 7]);
    assert_eq!(compute_bk(3, &p("path:4"), 10, &opts()).unwrap().value.value(), Some(4));
    assert_eq!(compute_bk(3, &p("path:6"), 10, &opts()).unwrap().value.value(), Some(8));
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads| {
        let o = SearchOptions { threads, ..SearchOptions::default() };
        let r = brute_force_ramsey(&p("path:5"), &p("path:4"), 8, &o).unwrap();
        let t = compute_t(&p("path:5"), 10, &o).unwrap();
        (r.value, r.extremal_witness, t.value, t.extremal_witness)
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn gr_full_small() {
    let r = gr_desk_verify(3, &p("star:3"), &p("path:4"), 5, GrMode::Full, &opts()).unwrap();
    assert!(r.holds());
    let r = gr_desk_verify(3, &p("star:3"), &p("path:4"), 4, GrMode::Full, &opts()).unwrap();
    let CheckOutcome::Counterexample(c) = r.outcome else { panic!("K_4 should escape") };
    assert!(c.is_exact() && c.is_surjective());
}

#[test]
fn structure_mode_desk_case() {
    let o = opts();
    assert!(gr_desk_verify(4, &p("path:5"), &p("path:6"), 7, GrMode::Structure, &o).unwrap().holds());
    let r = gr_desk_verify(4, &p("path:5"), &p("path:6"), 6, GrMode::Structure, &o).unwrap();
    assert!(matches!(r.outcome, CheckOutcome::Counterexample(_)));
    assert!(r.case.is_some());
}

#[test]
fn errors() {
    assert!(matches!(brute_force_ramsey(&p("path:3"), &p("path:3"), 12, &opts()), Err(Error::Capability(_))));
    assert!(matches!(compute_bk(2, &p("path:4"), 8, &opts()), Err(Error::Domain(_))));
    assert!(matches!(lemma_instance(Lemma::L31ii, 4, None), Err(Error::Domain(_))));
    let tight = SearchOptions { node_budget: Some(10), ..SearchOptions::default() };
    assert!(matches!(compute_t(&p("path:5"), 10, &tight), Err(Error::Budget { .. })));
    assert!(matches!(
        gr_desk_verify(4, &p("path:5"), &p("path:6"), 7, GrMode::Full, &opts()),
        Err(Error::Capability(_))
    ));
}
