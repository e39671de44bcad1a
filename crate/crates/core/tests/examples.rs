use grkit::constructions::{witness_bk_path, witness_kipas_linear, witness_t_path};
use grkit::formulas::{
    b3_kipas, bk_path, gr3_k13_kipas, gr_k13_path, gr_p4plus_path, gr_p5_path, r_kipas_linear_family, r_linear_forests,
    r_path_kipas, r_path_path, r_star_kipas, r_star_star, t_kipas_upper, t_path, ValueOrInterval,
};
use grkit::patterns::{has_any_mono, longest_mono_path, max_linear_forest};
use grkit::search::{brute_force_ramsey, compute_bk, compute_t, universal_check, MonoCheck, SearchOptions};
use grkit::{read_coloring, Error, PatternSpec};

fn exact(v: i64) -> ValueOrInterval {
    ValueOrInterval::exact(v)
}

#[test]
fn closed_forms() {
    assert_eq!(r_path_path(5, 4).unwrap(), exact(6));
    assert_eq!(r_linear_forests(6, 0, 3, 1).unwrap(), exact(6));
    assert_eq!(r_star_star(4, 4).unwrap(), exact(7));
    assert_eq!(r_star_star(2, 3).unwrap(), exact(5));
    assert_eq!(r_path_kipas(5, 6).unwrap(), exact(9));
    assert_eq!(r_path_kipas(4, 8).unwrap(), ValueOrInterval::interval(7, 11));
    assert_eq!(r_star_kipas(3, 7).unwrap(), exact(10));
    assert_eq!(r_star_kipas(4, 4).unwrap(), exact(9));
    assert_eq!(r_kipas_linear_family(12, 6, 3).unwrap(), exact(15));
    assert_eq!(r_kipas_linear_family(6, 3, 2).unwrap(), exact(8));
    assert_eq!(bk_path(4, 12).unwrap(), exact(17));
    assert_eq!(t_path(4).unwrap(), exact(5));
    assert_eq!(gr_p5_path(4, 6).unwrap(), exact(7));
    assert_eq!(gr_p4plus_path(5, 8).unwrap(), exact(8));
    assert_eq!(gr_k13_path(3, 6).unwrap(), exact(8));
    assert_eq!(gr_k13_path(4, 6).unwrap(), exact(6));
    assert_eq!(gr3_k13_kipas(6).unwrap(), ValueOrInterval::interval(14, 15));
    assert_eq!(gr3_k13_kipas(3).unwrap(), exact(7));
    assert_eq!(t_kipas_upper(6).unwrap().hi, 14);
    assert_eq!(b3_kipas(2).unwrap(), exact(5));
    assert!(matches!(gr3_k13_kipas(4), Err(Error::Domain(_))));
    assert!(matches!(bk_path(4, 5), Err(Error::Domain(_))));
}

#[test]
fn searched_values_match_formulas() {
    let o = SearchOptions::default();
    let kipas: PatternSpec = "kipas:4".parse().unwrap();
    let lf: PatternSpec = "lf:minedges=2,minorder=2".parse().unwrap();
    assert_eq!(brute_force_ramsey(&kipas, &lf, 6, &o).unwrap().value, r_kipas_linear_family(4, 2, 2).unwrap());
    assert_eq!(compute_bk(3, &"kipas:2".parse().unwrap(), 6, &o).unwrap().value, b3_kipas(2).unwrap());
    assert_eq!(compute_t(&"path:4".parse().unwrap(), 8, &o).unwrap().value, t_path(4).unwrap());
}

#[test]
fn kipas_linear_eleven_vertices() {
    let red = vec![MonoCheck { color: Some(1), pattern: PatternSpec::Kipas(8) }];
    let blue = vec![MonoCheck { color: Some(2), pattern: "lf:minedges=6,minorder=3".parse().unwrap() }];
    assert!(universal_check(11, 2, &red, &[], &blue, &SearchOptions::default()).unwrap().holds());
}

#[test]
fn witness_shapes() {
    let w = witness_kipas_linear(6, 4).unwrap();
    assert_eq!(w.n_vertices(), 7);
    assert_eq!(max_linear_forest(&w, 2, 2).unwrap().0, 2);
    assert_eq!(witness_bk_path(4, 10).unwrap().n_vertices(), 13);
    let t = witness_t_path(5).unwrap();
    assert_eq!(longest_mono_path(&t, 1).unwrap().0, 4);
    assert!(has_any_mono(&t, &PatternSpec::Path(5)).unwrap().is_none());
    assert_eq!(witness_t_path(4).unwrap().n_vertices(), 4);
}

#[test]
fn ecg_errors() {
    let missing = "ecg 1\n3 1 0\n0 1 1\n1 2 1\n";
    let err = read_coloring(missing.as_bytes()).unwrap_err();
    assert!(matches!(err, Error::Parse { .. }), "{err}");
    assert!(err.to_string().contains("missing edge"), "{err}");
    let tri = read_coloring("ecg 1\n3 1 0\n0 1 1\n1 2 1\n0 2 1\n".as_bytes()).unwrap();
    assert_eq!(tri.colors_used().into_iter().collect::<Vec<_>>(), [1]);
}
