//! The eight acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use kl_oracle::Coxeter;
use klv_cli::run;
use klv_core::blockdata::{builtin_sl2r_block, generate_complex_block, is_minimal, validate_block};
use klv_core::correspondence::{
    check_correspondence, check_image_union_of_blocks, compare_multiplicities, induced_verdict, Correspondence,
    Verdict,
};
use klv_core::genericity::{check_hyp_d, emit_arrangement, inf_char, verdict, Conclusion, FamilyKind, Witness};
use klv_core::hecke::{check_braid, check_quadratic};
use klv_core::{run_klv, BlockData, GaussRat, LaurentPoly, LeviSelection, RootDatum, SimpleStatus};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<(), String>;

const CAP: usize = 10080;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn load(rel: &str) -> BlockData {
    BlockData::from_json(&std::fs::read_to_string(data(rel)).unwrap()).unwrap()
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("klv").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

fn golden_blocks() -> Vec<(String, BlockData)> {
    let mut out: Vec<(String, BlockData)> = std::fs::read_dir(data("blocks"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), BlockData::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap()))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn complex_data() -> Vec<(&'static str, RootDatum)> {
    vec![
        ("A1", RootDatum::sl2()),
        ("A1xA1", RootDatum::product(&RootDatum::sl2(), &RootDatum::sl2())),
        ("A2", RootDatum::type_a(2)),
        ("B2", RootDatum::type_b(2)),
        ("A3", RootDatum::type_a(3)),
    ]
}

fn all_blocks() -> Vec<(String, BlockData)> {
    let mut out = golden_blocks();
    for (name, d) in complex_data() {
        out.push((format!("complex {name}"), generate_complex_block(&d, CAP).unwrap()));
    }
    out
}

fn sl2r_golden() -> Outcome {
    let start = Instant::now();
    let k = run_klv(&builtin_sl2r_block()).map_err(|e| e.to_string())?;
    for d in ["D+", "D-"] {
        ensure!(k.p_entry(d, "P").unwrap().is_one(), "P({d}, P) != 1");
        ensure!(k.big_m(d, "P").unwrap() == -1, "M({d}, P) != -1");
        ensure!(k.small_m(d, "P").unwrap() == 1, "m({d}, P) != 1");
    }
    ensure!(k.order_labels() == ["D+", "D-", "P"], "order {:?}", k.order_labels());
    ensure!(k.mult.small_m == vec![vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 1]], "m = {:?}", k.mult.small_m);
    // [std(P)] = [irr(P)] + [irr(D+)] + [irr(D-)]
    let column: Vec<i64> = ["D+", "D-", "P"].iter().map(|g| k.small_m(g, "P").unwrap()).collect();
    ensure!(column == [1, 1, 1], "std(P) column {column:?}");
    within(start, Duration::from_secs(1), "SL(2,R) run")?;
    let (code, r) = cli(&["klv", "builtin:sl2r"]);
    ensure!(code == 0 && r["payload"]["m"] == serde_json::json!([[1, 0, 1], [0, 1, 1], [0, 0, 1]]), "cli klv output {r}");
    Ok(())
}

fn classical_oracle() -> Outcome {
    for (name, d) in complex_data() {
        let start = Instant::now();
        let block = generate_complex_block(&d, CAP).map_err(|e| e.to_string())?;
        let cox = Coxeter::from_cartan(&d.cartan_matrix(&d.simple_roots()).unwrap());
        ensure!(block.len() == cox.order(), "{name}: {} params vs group order {}", block.len(), cox.order());
        let k = run_klv(&block).map_err(|e| format!("{name}: {e}"))?;
        let table = cox.kl_table();
        for x in block.labels() {
            ensure!(cox.find(x).is_some(), "{name}: {x} not a group element");
            for w in block.labels() {
                let want = table
                    .get(&(x.to_string(), w.to_string()))
                    .map(|q| LaurentPoly::from_u_coeffs(q.iter().copied()))
                    .unwrap_or_else(LaurentPoly::zero);
                let got = k.p_entry(x, w).unwrap();
                ensure!(got == want, "{name}: P({x}, {w}) = {got}, oracle {want}");
            }
        }
        if name == "A3" {
            let p = k.p_entry("s2", "s2s1s3s2").unwrap();
            ensure!(p == LaurentPoly::from_u_coeffs([1, 1]), "A3 singular entry {p}");
            within(start, Duration::from_secs(30), "A3")?;
        }
    }
    Ok(())
}

fn duality_properties() -> Outcome {
    let start = Instant::now();
    for (name, b) in all_blocks() {
        let k = run_klv(&b).map_err(|e| format!("{name}: {e}"))?;
        let v = k.invariant_violations();
        ensure!(v.is_empty(), "{name}: {v:?}");
        let ib = b.indexed().unwrap();
        let len = |l: &str| ib.length(ib.index_of(l).unwrap());
        // Degree bounds re-derived from the emitted polynomials.
        for f in b.labels() {
            ensure!(k.r_entry(f, f).unwrap().is_one(), "{name}: R({f}, {f}) != 1");
            for g in b.labels() {
                if f == g {
                    continue;
                }
                let d = len(g) - len(f);
                let r = k.r_entry(f, g).unwrap();
                if let Some(top) = r.terms().map(|(e, _)| e).max() {
                    ensure!(i64::from(top) <= 2 * d, "{name}: deg R({f}, {g})");
                }
                let p = k.p_entry(f, g).unwrap();
                if let Some(top) = p.terms().map(|(e, _)| e).max() {
                    ensure!(i64::from(top) <= d - 1, "{name}: deg P({f}, {g})");
                }
            }
        }
        let (ok, bad) = check_quadratic(&b).unwrap();
        ensure!(ok, "{name}: quadratic relation fails at {bad:?}");
        for s in 0..b.rank() {
            for t in s + 1..b.rank() {
                ensure!(check_braid(&b, s, t).unwrap(), "{name}: braid relation for {s}, {t}");
            }
        }
    }
    within(start, Duration::from_secs(60), "duality checks")
}

fn multiplicity_algebra() -> Outcome {
    for (name, b) in all_blocks() {
        let k = run_klv(&b).map_err(|e| format!("{name}: {e}"))?;
        let (m, big) = (&k.mult.small_m, &k.mult.big_m);
        let n = m.len();
        let order = k.order_labels();
        let ib = b.indexed().unwrap();
        let len = |l: &str| ib.length(ib.index_of(l).unwrap());
        for i in 0..n {
            for j in 0..n {
                let prod: i64 = (0..n).map(|t| m[i][t] * big[t][j]).sum();
                ensure!(prod == i64::from(i == j), "{name}: (m M)[{i}][{j}] = {prod}");
                if i > j {
                    ensure!(m[i][j] == 0 && big[i][j] == 0, "{name}: not upper triangular at {i}, {j}");
                }
                ensure!(m[i][j] >= 0, "{name}: m({}, {}) < 0", order[i], order[j]);
                if i != j && m[i][j] != 0 {
                    ensure!(len(&order[i]) < len(&order[j]), "{name}: m({}, {}) breaks length order", order[i], order[j]);
                }
            }
            ensure!(m[i][i] == 1 && big[i][i] == 1, "{name}: diagonal at {i}");
            if is_minimal(&b, &order[i]).unwrap() {
                ensure!((0..n).all(|r| m[r][i] == i64::from(r == i)), "{name}: {} minimal but column not a unit", order[i]);
            }
        }
    }
    Ok(())
}

fn passes(l: &BlockData, g: &BlockData, c: &Correspondence) -> bool {
    validate_block(l).is_empty()
        && validate_block(g).is_empty()
        && check_correspondence(l, g, c).is_empty()
        && check_image_union_of_blocks(g, c).map(|r| r.0).unwrap_or(false)
        && compare_multiplicities(l, g, c).unwrap_or(false)
}

fn corruptions(b: &BlockData, labels: &[String]) -> Vec<BlockData> {
    use SimpleStatus::*;
    let statuses = [
        ComplexAscent, ComplexDescent, CompactImaginary, NoncompactImaginaryI, NoncompactImaginaryII, RealNonparity,
        RealParityI, RealParityII,
    ];
    let all: Vec<String> = b.labels().iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    for (i, p) in b.params.iter().enumerate().filter(|(_, p)| labels.contains(&p.label)) {
        let mut m = b.clone();
        m.params[i].length += 1;
        out.push(m);
        for s in 0..b.rank() {
            for st in statuses.iter().filter(|x| **x != p.status[s]) {
                let mut m = b.clone();
                m.params[i].status[s] = *st;
                out.push(m);
            }
            for t in all.iter().filter(|t| **t != p.cross[s]) {
                let mut m = b.clone();
                m.params[i].cross[s] = t.clone();
                out.push(m);
            }
            for t in &all {
                let mut m = b.clone();
                let set = &mut m.params[i].cayley[s];
                if set.contains(t) {
                    set.retain(|x| x != t);
                } else {
                    set.push(t.clone());
                }
                out.push(m);
            }
        }
    }
    out
}

fn correspondence_end_to_end() -> Outcome {
    let triples: Value = serde_json::from_str(&std::fs::read_to_string(data("correspondences/triples.json")).unwrap()).unwrap();
    let triples = triples.as_array().unwrap();
    ensure!(!triples.is_empty(), "no triples");
    for t in triples {
        let start = Instant::now();
        let (lf, gf, mf) = (t["l"].as_str().unwrap(), t["g"].as_str().unwrap(), t["map"].as_str().unwrap());
        let l = load(lf);
        let g = load(gf);
        let c = Correspondence::from_json(&std::fs::read_to_string(data(mf)).unwrap()).unwrap();
        ensure!(passes(&l, &g, &c), "{mf}: golden triple fails a check");
        let delta = t["delta"].as_str().unwrap();
        let r = induced_verdict(&l, &g, &c, delta).map_err(|e| e.to_string())?;
        ensure!(r.verdict == Verdict::Irreducible, "{mf}: verdict {:?} {:?}", r.verdict, r.reasons);
        let image: Vec<String> = c.image().into_iter().map(str::to_owned).collect();
        let domain: Vec<String> = l.labels().iter().map(|s| s.to_string()).collect();
        for m in corruptions(&g, &image) {
            ensure!(!passes(&l, &m, &c), "{mf}: a G-side corruption went unnoticed");
        }
        for m in corruptions(&l, &domain) {
            ensure!(!passes(&m, &g, &c), "{mf}: an L-side corruption went unnoticed");
        }
        within(start, Duration::from_secs(10), mf)?;
    }
    Ok(())
}

fn genericity_exactness() -> Outcome {
    let start = Instant::now();
    let d = RootDatum::sl2();
    let lv = LeviSelection::new(&d, vec![vec![2]], vec![], vec![0]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut samples: Vec<(i64, i64)> = (0..100).map(|_| (rng.gen_range(-200..=200), rng.gen_range(1..=17))).collect();
    samples.extend((-5..=5).map(|n| (n, 1)));
    for (num, den) in samples {
        let xi = inf_char(&d, &lv, vec![GaussRat::zero()], vec![GaussRat::ratio(num, den)]).map_err(|e| e.to_string())?;
        let r = verdict(&d, &lv, &xi, CAP).map_err(|e| e.to_string())?;
        let off_integers = num % den != 0;
        ensure!((r.verdict == Conclusion::Main1) == off_integers, "nu = {num}/{den}: {:?}", r.verdict);
    }
    let (lo, hi) = (BigRational::from_integer((-5).into()), BigRational::from_integer(5.into()));
    let fams = emit_arrangement(&d, &lv, &[GaussRat::zero()], &lo, &hi, CAP).map_err(|e| e.to_string())?;
    let members: Vec<GaussRat> = fams
        .iter()
        .filter(|f| f.kind == FamilyKind::IntegerCoset)
        .flat_map(|f| f.members.clone())
        .collect();
    let want: Vec<GaussRat> = (-5..=5).map(GaussRat::from_int).collect();
    ensure!(members == want, "integer-offset members {members:?}");
    within(start, Duration::from_secs(1), "genericity sampling")
}

fn hypothesis_d() -> Outcome {
    let d = RootDatum::type_a(2);
    let lv = LeviSelection::new(&d, vec![vec![1, -1, 0], vec![0, 1, -1]], vec![0], vec![2]).map_err(|e| e.to_string())?;
    // Fixed by the swap of the first two coordinates and nothing else.
    let fixed_by_s1 = inf_char(&d, &lv, vec![GaussRat::from_int(1), GaussRat::from_int(1), GaussRat::zero()], vec![GaussRat::from_int(0)])
        .map_err(|e| e.to_string())?;
    let c = check_hyp_d(&d, &lv, &fixed_by_s1, CAP).map_err(|e| e.to_string())?;
    ensure!(c.holds, "D fails for the s1-fixed point: {:?}", c.witness);
    let zero = inf_char(&d, &lv, vec![GaussRat::zero(); 3], vec![GaussRat::zero()]).map_err(|e| e.to_string())?;
    let c = check_hyp_d(&d, &lv, &zero, CAP).map_err(|e| e.to_string())?;
    ensure!(!c.holds, "D holds at 0");
    let Some(Witness::Weyl(w)) = c.witness else {
        return Err(format!("no Weyl witness: {:?}", c.witness));
    };
    let identity = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let swap01 = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
    let is_permutation = w.iter().all(|r| r.iter().filter(|x| **x == 1).count() == 1 && r.iter().all(|x| *x == 0 || *x == 1))
        && (0..3).all(|c| w.iter().filter(|r| r[c] == 1).count() == 1);
    ensure!(is_permutation, "witness {w:?} is not in the Weyl group");
    ensure!(w != identity && w != swap01, "witness {w:?} lies in the Levi Weyl group");
    Ok(())
}

fn validator_completeness() -> Outcome {
    let manifest: BTreeMap<String, String> =
        serde_json::from_str(&std::fs::read_to_string(data("corrupted/manifest.json")).unwrap()).unwrap();
    ensure!(manifest.len() >= 20, "only {} corrupted files", manifest.len());
    for (file, axiom) in &manifest {
        let path = data(&format!("corrupted/{file}"));
        let (code, r) = cli(&["validate", "--braid", path.to_str().unwrap()]);
        ensure!(code == 1, "{file}: exit {code}");
        let named = r["violations"].as_array().unwrap().iter().any(|v| v["axiom"] == axiom.as_str());
        ensure!(named, "{file}: {axiom} not reported");
    }
    for (name, _) in golden_blocks() {
        let path = data(&format!("blocks/{name}"));
        let (code, r) = cli(&["validate", "--braid", path.to_str().unwrap()]);
        ensure!(code == 0, "{name}: rejected with {}", r["violations"]);
    }
    for b in ["sl2r", "pgl2r", "su21", "complex-A1", "complex-A1xA1", "complex-A2", "complex-B2", "complex-A3"] {
        let (code, r) = cli(&["validate", "--braid", &format!("builtin:{b}")]);
        ensure!(code == 0, "builtin {b}: rejected with {}", r["violations"]);
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("SL(2,R) golden block", sl2r_golden),
        ("classical KL oracle on complex blocks", classical_oracle),
        ("duality properties", duality_properties),
        ("multiplicity algebra", multiplicity_algebra),
        ("correspondence end to end", correspondence_end_to_end),
        ("genericity exactness", genericity_exactness),
        ("hypothesis D on A2", hypothesis_d),
        ("validator completeness", validator_completeness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS {}. {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {}. {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
