use std::fs;

use levelab::magnus::fixtures::{bounding_pair, level_d};
use levelab::magnus::{boundary_preserved, in_lambda3, tau, EndoF};
use levelab::symplectic::{in_igusa, in_level, MatrixRecord, SympElement};

fn read(name: &str) -> String {
    fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn shipped_automorphisms_match_generated() {
    let (g, d) = (3, 3);
    let mut all = level_d(g, d);
    all.push(("bounding_pair", bounding_pair(g, d)));
    for (name, f) in all {
        let loaded = EndoF::from_json(&read(&format!("{name}_g{g}_d{d}.json"))).unwrap();
        assert_eq!(loaded, f, "{name}");
        assert!(boundary_preserved(&loaded), "{name}");
        let t = tau(&loaded).unwrap();
        assert!(in_lambda3(&t).unwrap(), "{name}");
    }
}

#[test]
fn shipped_matrix_record() {
    let rec: MatrixRecord = serde_json::from_str(&read("transvection_a1_pow2_g2.json")).unwrap();
    let a = SympElement::from_record(&rec).unwrap();
    assert!(in_level(&a, 2));
    assert!(!in_igusa(&a, 2).unwrap());
    assert!(in_igusa(&a.pow(2), 2).unwrap());
}
