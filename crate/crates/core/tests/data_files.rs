use std::path::{Path, PathBuf};

use hecke_core::algebra::catalog::*;
use hecke_core::algebra::AugmentedSubalgebra;
use hecke_core::input::{read_input, read_resolution, InputDocument, ResolutionDocument};
use hecke_core::resolutions::{periodic_resolution, validate_resolution, ResolutionError};
use hecke_core::SparseVec;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn same_pair(a: &AugmentedSubalgebra, b: &AugmentedSubalgebra) -> bool {
    a.parent().triples() == b.parent().triples()
        && a.parent().unit() == b.parent().unit()
        && a.inclusion() == b.inclusion()
        && a.eps() == b.eps()
}

#[test]
fn inputs_match_catalog() {
    let cases: [(&str, AugmentedSubalgebra); 6] = [
        ("dual_numbers.json", dual_numbers_pair()),
        ("m2_nilpotent.json", m2_nilpotent_pair()),
        ("m2_borel.json", m2_borel_pair()),
        ("m2_trivial.json", m2_trivial_pair()),
        ("exterior.json", exterior_pair()),
        ("m2_dual.json", m2_dual_pair()),
    ];
    for (file, expected) in cases {
        let p = read_input(&data(file)).unwrap();
        assert!(same_pair(p.pair().unwrap(), &expected), "{file}");
    }
    for (file, act) in [
        ("m2_affine.json", m2_affine_action()),
        ("dual_affine.json", dual_affine_action()),
        ("m2_nilpotent.json", m2_rank1_action()),
        ("dual_numbers.json", dual_rank1_action()),
    ] {
        let p = read_input(&data(file)).unwrap();
        let got = p.lie_action().unwrap();
        assert_eq!(got.rho(), act.rho(), "{file}");
        assert_eq!(got.lie().triples(), act.lie().triples(), "{file}");
    }
}

#[test]
fn inputs_round_trip() {
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let Ok(doc) = InputDocument::from_json(&text) else {
            continue;
        };
        let problem = doc.validate().unwrap();
        let again = InputDocument::from_json(&problem.to_document().to_json())
            .unwrap()
            .validate()
            .unwrap();
        assert_eq!(problem.algebra, again.algebra, "{}", path.display());
        assert_eq!(problem.modules, again.modules, "{}", path.display());
    }
}

#[test]
fn shipped_resolutions() {
    let b = dual_numbers_pair();
    let koszul = read_resolution(&data("dual_numbers_koszul.json"), &b).unwrap();
    assert_eq!(
        koszul,
        periodic_resolution(&b, &SparseVec::unit(1), koszul.top())
    );
    assert!(validate_resolution(&koszul, &b, 6).is_ok());
    assert_eq!(
        ResolutionDocument::from_complex(&koszul)
            .to_complex(&b)
            .unwrap(),
        koszul
    );
    let bad = read_resolution(&data("dual_numbers_not_exact.json"), &b).unwrap();
    assert!(matches!(
        validate_resolution(&bad, &b, 6),
        Err(ResolutionError::NotAResolution { degree: 0, .. })
    ));
}
