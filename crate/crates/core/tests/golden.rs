//! The shipped block files, generated complex blocks, and correspondence triples.

use std::path::PathBuf;

use klv_core::blockdata::{
    generate_complex_block, is_minimal, product_block, validate_block, validate_block_with, ValidateOptions,
};
use klv_core::correspondence::{
    check_correspondence, check_image_union_of_blocks, compare_multiplicities, induced_verdict, Correspondence,
    Verdict,
};
use klv_core::hecke::{check_braid, check_quadratic};
use klv_core::{run_klv, BlockData, RootDatum, SimpleStatus};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn load(rel: &str) -> BlockData {
    BlockData::from_json(&std::fs::read_to_string(data(rel)).unwrap()).unwrap()
}

fn golden() -> Vec<(String, BlockData)> {
    let mut out: Vec<(String, BlockData)> = std::fs::read_dir(data("blocks"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.display().to_string(), BlockData::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap()))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    for (name, d) in [
        ("A1", RootDatum::sl2()),
        ("A2", RootDatum::type_a(2)),
        ("B2", RootDatum::type_b(2)),
        ("A1xA1", RootDatum::product(&RootDatum::sl2(), &RootDatum::sl2())),
    ] {
        out.push((format!("complex {name}"), generate_complex_block(&d, 10080).unwrap()));
    }
    out
}

#[test]
fn every_block_satisfies_the_axioms_and_hecke_relations() {
    for (name, b) in golden() {
        assert!(validate_block_with(&b, ValidateOptions { braid: true }).is_empty(), "{name}");
        assert!(check_quadratic(&b).unwrap().0, "{name}");
        for s in 0..b.rank() {
            for t in s + 1..b.rank() {
                assert!(check_braid(&b, s, t).unwrap(), "{name} braid {s} {t}");
            }
        }
        assert_eq!(BlockData::from_json(&b.to_json()).unwrap(), b, "{name}");
    }
}

#[test]
fn duality_and_multiplicity_invariants() {
    for (name, b) in golden() {
        let k = run_klv(&b).unwrap();
        assert!(k.invariant_violations().is_empty(), "{name}: {:?}", k.invariant_violations());
        assert!(k.negative_m_entries().is_empty(), "{name}");
        let order = k.order_labels();
        for (j, d) in order.iter().enumerate() {
            if is_minimal(&b, d).unwrap() {
                for (i, g) in order.iter().enumerate() {
                    assert_eq!(k.small_m(g, d).unwrap(), i64::from(i == j), "{name} m({g}, {d})");
                }
            }
        }
    }
}

#[test]
fn descents_drop_length_by_one() {
    for (name, b) in golden() {
        let ib = b.indexed().unwrap();
        for i in 0..ib.len() {
            for s in 0..ib.rank() {
                for t in ib.descent_targets(i, s) {
                    assert_eq!(ib.length(t), ib.length(i) - 1, "{name} {} s{s}", ib.label(i));
                }
            }
        }
    }
}

#[test]
fn products_stay_valid() {
    let small = [load("blocks/sl2r.json"), load("blocks/pgl2r.json")];
    for a in &small {
        for b in &small {
            let mut b2 = b.clone();
            for s in &mut b2.simples {
                s.name = format!("{}'", s.name);
            }
            let p = product_block(a, &b2).unwrap();
            assert!(validate_block(&p).is_empty());
            assert!(run_klv(&p).unwrap().invariant_violations().is_empty());
        }
    }
}

struct Triple {
    l: BlockData,
    g: BlockData,
    c: Correspondence,
    delta: String,
}

fn triples() -> Vec<Triple> {
    let raw: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("correspondences/triples.json")).unwrap()).unwrap();
    raw.as_array()
        .unwrap()
        .iter()
        .map(|t| Triple {
            l: load(t["l"].as_str().unwrap()),
            g: load(t["g"].as_str().unwrap()),
            c: Correspondence::from_json(&std::fs::read_to_string(data(t["map"].as_str().unwrap())).unwrap()).unwrap(),
            delta: t["delta"].as_str().unwrap().to_owned(),
        })
        .collect()
}

fn all_checks_pass(l: &BlockData, g: &BlockData, c: &Correspondence) -> bool {
    validate_block(l).is_empty()
        && validate_block(g).is_empty()
        && check_correspondence(l, g, c).is_empty()
        && check_image_union_of_blocks(g, c).map(|r| r.0).unwrap_or(false)
        && compare_multiplicities(l, g, c).unwrap_or(false)
}

#[test]
fn golden_triples_are_irreducible() {
    for t in triples() {
        assert!(all_checks_pass(&t.l, &t.g, &t.c));
        for d in t.l.labels() {
            let r = induced_verdict(&t.l, &t.g, &t.c, d).unwrap();
            assert_eq!(r.verdict, Verdict::Irreducible, "{d}: {:?}", r.reasons);
        }
        assert_eq!(induced_verdict(&t.l, &t.g, &t.c, &t.delta).unwrap().verdict, Verdict::Irreducible);
    }
}

/// Every single-field corruption of a parameter in the image.
fn mutations(g: &BlockData, image: &[String]) -> Vec<BlockData> {
    use SimpleStatus::*;
    let all = [
        ComplexAscent, ComplexDescent, CompactImaginary, NoncompactImaginaryI, NoncompactImaginaryII, RealNonparity,
        RealParityI, RealParityII,
    ];
    let labels: Vec<String> = g.labels().iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    for (i, p) in g.params.iter().enumerate() {
        if !image.contains(&p.label) {
            continue;
        }
        for delta in [-1, 1] {
            let mut m = g.clone();
            m.params[i].length += delta;
            out.push(m);
        }
        for s in 0..g.rank() {
            for st in all.iter().filter(|st| **st != p.status[s]) {
                let mut m = g.clone();
                m.params[i].status[s] = *st;
                out.push(m);
            }
            for other in labels.iter().filter(|l| **l != p.cross[s]) {
                let mut m = g.clone();
                m.params[i].cross[s] = other.clone();
                out.push(m);
            }
            for other in &labels {
                let mut m = g.clone();
                let set = &mut m.params[i].cayley[s];
                if set.contains(other) {
                    set.retain(|x| x != other);
                } else {
                    set.push(other.clone());
                }
                out.push(m);
            }
        }
    }
    out
}

#[test]
fn single_corruptions_are_caught() {
    for t in triples() {
        let image: Vec<String> = t.c.image().into_iter().map(str::to_owned).collect();
        let domain: Vec<String> = t.l.labels().iter().map(|s| s.to_string()).collect();
        let mut count = 0;
        for m in mutations(&t.g, &image) {
            assert!(!all_checks_pass(&t.l, &m, &t.c));
            count += 1;
        }
        for m in mutations(&t.l, &domain) {
            assert!(!all_checks_pass(&m, &t.g, &t.c));
            count += 1;
        }
        assert!(count > 0);
    }
}
