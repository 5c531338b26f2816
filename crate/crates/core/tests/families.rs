use laplab::family::all_specs;
use laplab::lab::{
    check_complete_minus_star_spectrum, check_diameter_two_auxiliary, check_gn3_deletions,
    check_gna_deletions, isomorphic, recognize_family,
};
use laplab::partitions::check_deletion_multiplicities;
use laplab::spectral::spectrum;
use laplab::{make_family, FamilyKind, FamilySpec};
use laplab_validation as oracle;

#[test]
fn recognition_is_idempotent_and_label_free() {
    for n in 1..=12 {
        for spec in all_specs(n) {
            let g = make_family(&spec).unwrap();
            let found = recognize_family(&g).unwrap_or_else(|| panic!("{spec} not recognized"));
            assert!(isomorphic(&make_family(&found).unwrap(), &g), "{spec} recognized as {found}");
            let reversed: Vec<usize> = (0..n).rev().collect();
            assert_eq!(recognize_family(&g.relabel(&reversed).unwrap()), Some(found));
        }
    }
}

#[test]
fn declared_diameters_hold() {
    for n in 1..=14 {
        for spec in all_specs(n) {
            let g = make_family(&spec).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(oracle::diameter(&g), Some(spec.declared_diameter()), "{spec}");
        }
    }
}

#[test]
fn out_of_range_parameters_are_rejected() {
    for spec in [
        FamilySpec::gndt(6, 5, 3),
        FamilySpec::gndt(8, 4, 5),
        FamilySpec::double_star(5, 3),
        FamilySpec::gnab(8, 2, 3),
        FamilySpec::complete_minus_star(5, 4),
        FamilySpec::new(FamilyKind::GnA, &[7, 1, 1]),
    ] {
        assert!(make_family(&spec).is_err(), "{spec:?}");
    }
}

#[test]
fn complete_minus_star_spectrum() {
    for n in 3..=12 {
        for s in 1..=n - 2 {
            assert!(check_complete_minus_star_spectrum(n, s).unwrap().confirmed());
            let mut expected = vec![n as f64; n - s - 1];
            expected.extend(vec![(n - 1) as f64; s - 1]);
            expected.push((n - s - 1) as f64);
            expected.push(0.0);
            let actual = spectrum(&make_family(&FamilySpec::complete_minus_star(n, s)).unwrap());
            for (i, x) in expected.iter().enumerate() {
                assert!((actual.mu(i + 1) - x).abs() < 1e-8, "n = {n}, s = {s}");
            }
        }
    }
}

#[test]
fn auxiliary_graph_multiplicities() {
    for n in 4..=14 {
        assert!(check_diameter_two_auxiliary(n).unwrap().confirmed(), "n = {n}");
    }
}

#[test]
fn edge_deletions_from_gn3() {
    for n in 6..=12 {
        for r in check_gn3_deletions(n).unwrap() {
            assert!(r.confirmed(), "n = {n}: {:?}", r.notes);
        }
    }
}

#[test]
fn edge_deletions_from_gna() {
    for n in 6..=14 {
        for a in (1..).take_while(|a| 2 * a + 4 <= n) {
            assert!(check_gna_deletions(n, a).unwrap().confirmed(), "n = {n}, a = {a}");
        }
        assert!(check_gna_deletions(n, n / 2 - 1).is_err());
    }
}

#[test]
fn deletion_multiplicities() {
    for n in 5..=12 {
        for spec in all_specs(n) {
            if matches!(spec.kind, FamilyKind::Gn3Minus2s | FamilyKind::Gn3Minus4s) {
                assert!(check_deletion_multiplicities(&spec).unwrap().confirmed(), "{spec}");
            }
        }
    }
}
