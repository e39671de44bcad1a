use grkit::constructions::{build_family, FamilyDescriptor, FamilyKind};
use grkit::constructions::{shape_four_vertex, witness_b3_kipas, witness_bk_path, witness_small_kipas, witness_t_path};
use grkit::patterns::has_rainbow;
use grkit::structure::{
    classify_structure, is_member, multipartite_ham, star_forest_check, validate_descriptor, validate_ham,
    Classification, HamMode, StructureContext,
};
use grkit::{EdgeColoring, PatternSpec};

fn g2(n: usize) -> EdgeColoring {
    let d = FamilyDescriptor { special: vec![0, 1], ..FamilyDescriptor::new(FamilyKind::G2, n, 4) };
    build_family(&d).unwrap()
}

fn sorted_sizes(d: &FamilyDescriptor) -> Vec<usize> {
    let mut s: Vec<usize> = d.parts.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

#[test]
fn bk_witness_is_dominant_with_declared_parts() {
    let c = witness_bk_path(3, 6).unwrap();
    let Classification::Classified(d) = classify_structure(&c, StructureContext::K13) else { panic!("unclassified") };
    assert_eq!(d.family, FamilyKind::DominantColor);
    validate_descriptor(&c, &d).unwrap();
    let bk = is_member(&c, FamilyKind::Bk).unwrap();
    assert_eq!(sorted_sizes(&bk), [2, 5]);
}

#[test]
fn g2_special_vertices() {
    let c = g2(6);
    let cl = classify_structure(&c, StructureContext::P4Plus);
    assert_eq!(cl.label(), "G2");
    assert_eq!(cl.descriptor().unwrap().special, [0, 1]);
    assert!(star_forest_check(&c, 3));
    assert!(star_forest_check(&c, 4));
}

#[test]
fn monochromatic_minus_a_vertex() {
    // K_5 in color 1 plus vertex 5 with a rainbow star in colors 1..4.
    let c = EdgeColoring::from_fn(6, 4, |u, v| if v == 5 { [1, 2, 3, 4, 4][u] } else { 1 }).unwrap();
    assert_eq!(classify_structure(&c, StructureContext::P5).label(), "ii");
}

#[test]
fn memberships() {
    let gamma1 = witness_small_kipas(2).unwrap();
    assert!(is_member(&gamma1, FamilyKind::Bk).is_some());
    let t = is_member(&witness_t_path(5).unwrap(), FamilyKind::T).unwrap();
    assert_eq!(sorted_sizes(&t), [2, 2, 2]);
    let b3 = witness_b3_kipas(5).unwrap();
    let d = is_member(&b3, FamilyKind::Bk).unwrap();
    validate_descriptor(&b3, &d).unwrap();
    let red = EdgeColoring::monochromatic(5, 3, 1).unwrap();
    assert!(red.clone().with_exact_flag(true).is_err());
    assert!(is_member(&red, FamilyKind::Bk).is_none());
}

#[test]
fn star_forests() {
    let iv = shape_four_vertex(6, false).unwrap();
    assert!(star_forest_check(&iv, 3));
    let p4 = EdgeColoring::from_fn(5, 2, |u, v| if v == u + 1 && v < 4 { 2 } else { 1 }).unwrap();
    assert!(!star_forest_check(&p4, 2));
}

/// All surjective 4-colorings of `K_5` without a rainbow `P_4^+` land in G2, G3 or the dominant form.
#[test]
fn p4plus_completeness_on_k5() {
    let rainbow = PatternSpec::p4_plus();
    let mut seen = 0;
    for code in 0u32..4u32.pow(10) {
        let colors: Vec<u8> = (0..10).map(|i| (code / 4u32.pow(i) % 4) as u8 + 1).collect();
        if (1..=4).any(|c| !colors.contains(&c)) {
            continue;
        }
        let c = EdgeColoring::from_lex_colors(5, 4, true, colors).unwrap();
        if has_rainbow(&c, &rainbow).unwrap().is_some() {
            continue;
        }
        seen += 1;
        let cl = classify_structure(&c, StructureContext::P4Plus);
        assert!(matches!(cl.label(), "G2" | "G3" | "i"), "{:?} -> {}", c.lex_colors(), cl.label());
        validate_descriptor(&c, cl.descriptor().unwrap()).unwrap();
    }
    assert!(seen > 0);
}

#[test]
fn ham_examples() {
    let cyc = multipartite_ham(&[2, 2, 3], HamMode::Cycle).unwrap();
    assert_eq!(cyc.len(), 7);
    assert!(validate_ham(&[2, 2, 3], &cyc, HamMode::Cycle));
    let path = multipartite_ham(&[1, 2], HamMode::Path).unwrap();
    assert!(validate_ham(&[1, 2], &path, HamMode::Path));
    assert!(multipartite_ham(&[1, 1], HamMode::Cycle).is_err());
    assert!(validate_ham(&[3, 3], &multipartite_ham(&[3, 3], HamMode::Cycle).unwrap(), HamMode::Cycle));
}
