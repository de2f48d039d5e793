//! Deliberately corrupted block files and the translation fixtures.

use std::collections::BTreeMap;
use std::path::PathBuf;

use klv_core::blockdata::{validate_block_with, ValidateOptions};
use klv_core::correspondence::{check_correspondence, Correspondence};
use klv_core::rootdata::RootDatumFile;
use klv_core::singular::{
    check_translation_square, validate_singular_block, validate_translation_datum, SingularBlock, TranslationDatum,
    TranslationSquare,
};
use klv_core::{BlockData, RootDatum};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(data(rel)).unwrap()
}

#[test]
fn each_corruption_names_its_axiom() {
    let manifest: BTreeMap<String, String> = serde_json::from_str(&read("corrupted/manifest.json")).unwrap();
    assert!(manifest.len() >= 20);
    for (file, axiom) in &manifest {
        let b = BlockData::from_json(&read(&format!("corrupted/{file}"))).unwrap();
        let v = validate_block_with(&b, ValidateOptions { braid: true });
        assert!(v.iter().any(|x| x.axiom.name() == axiom), "{file}: expected {axiom}, got {v:?}");
    }
}

#[test]
fn partial_map_is_rejected() {
    let l = BlockData::from_json(&read("blocks/sl2r.json")).unwrap();
    let c = Correspondence::from_json(&read("correspondences/sl2r_partial.json")).unwrap();
    let m = check_correspondence(&l, &l, &c);
    assert!(m.iter().any(|x| x.kind == "not total"));
}

#[test]
fn translation_fixtures() {
    let sq = TranslationSquare::from_json(&read("translation/sl2r_square.json")).unwrap();
    assert_eq!(check_translation_square(&sq).unwrap(), (true, None));

    let f: RootDatumFile = serde_json::from_str(&read("rootdata/sl2_full.json")).unwrap();
    let (d, lv) = RootDatum::from_file(&f).unwrap();
    let lv = lv.unwrap();
    let good: TranslationDatum = serde_json::from_str(&read("translation/a1_datum.json")).unwrap();
    assert!(validate_translation_datum(&d, &lv, &good).unwrap().is_empty());
    let bad: TranslationDatum = serde_json::from_str(&read("translation/a1_bad_datum.json")).unwrap();
    let v = validate_translation_datum(&d, &lv, &bad).unwrap();
    assert!(v.iter().any(|x| x.condition == "a"));
    assert!(v.iter().any(|x| x.condition == "b"));

    let s = SingularBlock::from_json(&read("translation/sl2r_singular.json")).unwrap();
    let (bv, mv) = validate_singular_block(&s);
    assert!(bv.is_empty() && mv.is_empty());
}
