//! Command-line front end. Every subcommand prints one JSON report
//! `{command, inputs, payload, violations}` with sorted keys.
//!
//! Exit codes: 0 success, 1 violations (or no conclusion under
//! `--require-verdict`), 2 malformed input or usage error.

use std::ffi::OsString;
use std::path::Path;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use klv_core::blockdata::{
    builtin_pgl2r_block, builtin_su21_block, builtin_sl2r_block, generate_complex_block, validate_block_with,
    ValidateOptions,
};
use klv_core::correspondence::{
    check_correspondence, check_image_union_of_blocks, compare_multiplicities, induced_verdict, Correspondence,
    Verdict,
};
use klv_core::gauss::parse_vector;
use klv_core::genericity::{emit_arrangement, inf_char, verdict, Conclusion};
use klv_core::hecke::{apply_t, ModuleElement};
use klv_core::klv::partition_blocks;
use klv_core::rootdata::{LeviSelection, RootDatumFile};
use klv_core::singular::{
    check_translation_square, validate_singular_block, validate_translation_datum, SingularBlock,
    TranslationDatum, TranslationSquare,
};
use klv_core::{run_klv, BlockData, Error, RootDatum};

/// Environment variable holding the Weyl-enumeration cap.
pub const WEYL_CAP_VAR: &str = "KLV_WEYL_CAP";
pub use klv_core::rootdata::DEFAULT_WEYL_CAP;

const SCHEMAS: &str = "\
Input formats (all JSON):
  block file        {simples: [{name, braid: [m(s,t)...]}], infchar_tag,
                     params: [{label, length, cartan_class, status: [...],
                               cross: [label...], cayley: [[label...]...]}]}
                    status values: ComplexAscent ComplexDescent CompactImaginary
                    NoncompactImaginaryI NoncompactImaginaryII RealNonparity
                    RealParityI RealParityII
  builtin blocks    builtin:sl2r builtin:pgl2r builtin:su21 builtin:complex-A1
                    builtin:complex-A2 builtin:complex-A3 builtin:complex-B2
                    builtin:complex-A1xA1
  correspondence    {pairs: [[L-label, G-label]...], length_shift}
  root datum        {rank, roots, coroots, theta?, levi?: {simple_base,
                     levi_simples, a_coordinates}}; without levi the torus
                     Levi on the simple roots is used
  translation datum {xi: [...], mu: [...]}
  translation square {iota_xi, iota_xi_prime, t_l: [[a, b]...], t_g: [[a, b]...]}
  singular block    block file whose params also carry pos_imaginary and
                    zero_pairing_real (lists of simple indices)
Vectors on the command line are comma-separated Gaussian rationals such as
  \"1/2,0,-3\" or \"1+2i,0\". Polynomials print in v = u^(1/2).
Environment: KLV_WEYL_CAP bounds Weyl-group enumeration (default 10080).";

#[derive(Parser, Debug)]
#[command(name = "klv", version, about = "Exact KLV polynomials, multiplicities and induction checks", after_help = SCHEMAS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the block axioms.
    Validate {
        block: String,
        /// Also check the braid relations of the Hecke action.
        #[arg(long)]
        braid: bool,
    },
    /// Apply T_s to a basis element.
    HeckeApply { block: String, simple: String, label: String },
    /// R, P and multiplicity matrices.
    Klv {
        block: String,
        /// Verify duality and all invariants; exit 1 on failure.
        #[arg(long)]
        check: bool,
    },
    /// Partition a block file into blocks.
    Blocks { block: String },
    /// Compare L and G data under a correspondence.
    Induce {
        l_block: String,
        g_block: String,
        map: String,
        #[arg(long)]
        delta: Option<String>,
        /// Exit 1 unless every verdict is Irreducible.
        #[arg(long)]
        require_verdict: bool,
    },
    /// Genericity hypotheses for xi = xi_M + nu.
    Generic {
        rootdatum: String,
        #[arg(long, allow_hyphen_values = true)]
        xi_m: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Also emit the arrangement in this window.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        window: Option<Vec<String>>,
        /// Exit 1 on NoConclusion.
        #[arg(long)]
        require_verdict: bool,
    },
    /// Excluded hyperplane families in a window.
    Arrangement {
        rootdatum: String,
        #[arg(long, allow_hyphen_values = true)]
        xi_m: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        window: Option<Vec<String>>,
    },
    /// Commutativity of a translation square, plus optional datum and marking checks.
    TranslateCheck {
        square: String,
        /// Root datum for the translation datum.
        #[arg(long, requires = "datum")]
        rootdatum: Option<String>,
        #[arg(long, requires = "rootdatum")]
        datum: Option<String>,
        /// Singular block whose markings are checked.
        #[arg(long)]
        singular: Option<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Malformed(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Ctx {
    inputs: Vec<Value>,
    cap: usize,
}

impl Ctx {
    fn read(&mut self, name: &str) -> Res<String> {
        let text = if let Some(b) = name.strip_prefix("builtin:") {
            builtin(b, self.cap)?.to_json()
        } else {
            std::fs::read_to_string(Path::new(name)).map_err(|e| Failure::Malformed(format!("{name}: {e}")))?
        };
        let digest = hex::encode(Sha256::digest(text.as_bytes()));
        self.inputs.push(json!({"name": name, "sha256": digest}));
        Ok(text)
    }

    fn block(&mut self, name: &str) -> Res<BlockData> {
        let text = self.read(name)?;
        BlockData::from_json(&text).map_err(|e| Failure::Malformed(format!("{name}: {e}")))
    }

    fn rootdatum(&mut self, name: &str) -> Res<(RootDatum, LeviSelection)> {
        let text = self.read(name)?;
        let f: RootDatumFile = serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{name}: {e}")))?;
        let (d, lv) = RootDatum::from_file(&f)?;
        let lv = match lv {
            Some(lv) => lv,
            None => LeviSelection::new(&d, d.simple_roots(), vec![], (0..d.rank()).collect())?,
        };
        Ok((d, lv))
    }
}

fn builtin(name: &str, cap: usize) -> Res<BlockData> {
    let complex = |d: RootDatum| generate_complex_block(&d, cap).map_err(Failure::from);
    match name {
        "sl2r" => Ok(builtin_sl2r_block()),
        "pgl2r" => Ok(builtin_pgl2r_block()),
        "su21" => Ok(builtin_su21_block()),
        "complex-A1" => complex(RootDatum::sl2()),
        "complex-A2" => complex(RootDatum::type_a(2)),
        "complex-A3" => complex(RootDatum::type_a(3)),
        "complex-B2" => complex(RootDatum::type_b(2)),
        "complex-A1xA1" => complex(RootDatum::product(&RootDatum::sl2(), &RootDatum::sl2())),
        _ => Err(Failure::Malformed(format!("unknown builtin block {name:?}"))),
    }
}

fn weyl_cap() -> Res<usize> {
    match std::env::var(WEYL_CAP_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Malformed(format!("{WEYL_CAP_VAR}={s:?} is not a count"))),
        Err(_) => Ok(DEFAULT_WEYL_CAP),
    }
}

fn rational(s: &str) -> Res<BigRational> {
    let bad = || Failure::Malformed(format!("window bound {s:?} is not rational"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn window(w: &Option<Vec<String>>) -> Res<(BigRational, BigRational)> {
    match w {
        Some(v) => {
            let (lo, hi) = (rational(&v[0])?, rational(&v[1])?);
            if lo > hi {
                return Err(Failure::Malformed("window has lo > hi".into()));
            }
            Ok((lo, hi))
        }
        None => Ok((BigRational::from_integer((-5).into()), BigRational::from_integer(5.into()))),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

/// Violations and payload of one command, or malformed input.
fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Res<(Value, Vec<Value>, bool)> {
    match cmd {
        Command::Validate { block, braid } => {
            let b = ctx.block(block)?;
            let v = validate_block_with(&b, ValidateOptions { braid: *braid });
            Ok((json!({"params": b.len(), "simples": b.rank()}), v.iter().map(to_value).collect(), false))
        }
        Command::HeckeApply { block, simple, label } => {
            let b = ctx.block(block)?;
            let s = b.simple_index(simple)?;
            b.param(label)?;
            let bad = validate_block_with(&b, ValidateOptions::default());
            if !bad.is_empty() {
                return Ok((Value::Null, bad.iter().map(to_value).collect(), false));
            }
            let m = apply_t(&b, s, &ModuleElement::basis(label))?;
            Ok((to_value(&m), vec![], false))
        }
        Command::Klv { block, check } => {
            let b = ctx.block(block)?;
            match run_klv(&b) {
                Ok(k) => {
                    let mut v = Vec::new();
                    if *check {
                        v.extend(k.invariant_violations().into_iter().map(Value::String));
                        v.extend(
                            k.negative_m_entries()
                                .into_iter()
                                .map(|(f, g)| Value::String(format!("m({f}, {g}) is negative"))),
                        );
                    }
                    Ok((k.to_json(), v, false))
                }
                Err(e @ (Error::Json(_) | Error::Parse(_))) => Err(e.into()),
                Err(e) => Ok((Value::Null, vec![Value::String(e.to_string())], false)),
            }
        }
        Command::Blocks { block } => {
            let b = ctx.block(block)?;
            let bad = validate_block_with(&b, ValidateOptions::default());
            if !bad.is_empty() {
                return Ok((Value::Null, bad.iter().map(to_value).collect(), false));
            }
            let ib = b.indexed()?;
            let classes: Vec<Vec<&str>> =
                partition_blocks(&ib).iter().map(|c| c.iter().map(|&i| ib.label(i)).collect()).collect();
            Ok((json!({"blocks": classes}), vec![], false))
        }
        Command::Induce { l_block, g_block, map, delta, require_verdict } => {
            let l = ctx.block(l_block)?;
            let g = ctx.block(g_block)?;
            let text = ctx.read(map)?;
            let c = Correspondence::from_json(&text).map_err(|e| Failure::Malformed(format!("{map}: {e}")))?;
            let mismatches = check_correspondence(&l, &g, &c);
            let (closed, outside) = if mismatches.is_empty() {
                check_image_union_of_blocks(&g, &c).unwrap_or((false, None))
            } else {
                (false, None)
            };
            let agree = mismatches.is_empty() && compare_multiplicities(&l, &g, &c).unwrap_or(false);
            let deltas: Vec<String> = match delta {
                Some(d) => {
                    l.param(d)?;
                    vec![d.clone()]
                }
                None => l.labels().iter().map(|s| s.to_string()).collect(),
            };
            let mut verdicts = Vec::new();
            let mut all_irreducible = true;
            for d in &deltas {
                match induced_verdict(&l, &g, &c, d) {
                    Ok(r) => {
                        all_irreducible &= r.verdict == Verdict::Irreducible;
                        verdicts.push(to_value(&r));
                    }
                    Err(e) => {
                        all_irreducible = false;
                        verdicts.push(json!({"delta": d, "verdict": "NoConclusion", "reasons": [e.to_string()]}));
                    }
                }
            }
            let payload = json!({
                "image_union_of_blocks": closed,
                "image_outside": outside,
                "multiplicities_agree": agree,
                "verdicts": verdicts,
                "interpretation": "Irreducible means the induced standard module from delta is irreducible, \
                    provided the genericity hypotheses hold; check them with `generic`.",
            });
            let v = mismatches.iter().map(to_value).collect();
            Ok((payload, v, *require_verdict && !all_irreducible))
        }
        Command::Generic { rootdatum, xi_m, nu, window: w, require_verdict } => {
            let (d, lv) = ctx.rootdatum(rootdatum)?;
            let xi = inf_char(&d, &lv, parse_vector(xi_m)?, parse_vector(nu)?)?;
            let r = verdict(&d, &lv, &xi, ctx.cap)?;
            let mut payload = to_value(&r);
            if w.is_some() {
                let (lo, hi) = window(w)?;
                let fams = emit_arrangement(&d, &lv, &xi.m_part, &lo, &hi, ctx.cap)?;
                payload["arrangement"] = to_value(&fams);
            }
            Ok((payload, vec![], *require_verdict && r.verdict == Conclusion::NoConclusion))
        }
        Command::Arrangement { rootdatum, xi_m, window: w } => {
            let (d, lv) = ctx.rootdatum(rootdatum)?;
            let (lo, hi) = window(w)?;
            let fams = emit_arrangement(&d, &lv, &parse_vector(xi_m)?, &lo, &hi, ctx.cap)?;
            Ok((json!({"families": fams}), vec![], false))
        }
        Command::TranslateCheck { square, rootdatum, datum, singular } => {
            let text = ctx.read(square)?;
            let sq = TranslationSquare::from_json(&text).map_err(|e| Failure::Malformed(format!("{square}: {e}")))?;
            let mut v = Vec::new();
            let mut payload = serde_json::Map::new();
            let (ok, first) = check_translation_square(&sq)?;
            payload.insert("commutes".into(), json!(ok));
            if let Some(g) = first {
                v.push(json!({"condition": "square", "param": g, "message": "square does not commute"}));
            }
            if let (Some(rd), Some(dt)) = (rootdatum, datum) {
                let (d, lv) = ctx.rootdatum(rd)?;
                let text = ctx.read(dt)?;
                let t: TranslationDatum =
                    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{dt}: {e}")))?;
                let tv = validate_translation_datum(&d, &lv, &t)?;
                payload.insert("datum_ok".into(), json!(tv.is_empty()));
                v.extend(tv.iter().map(to_value));
            }
            if let Some(sb) = singular {
                let text = ctx.read(sb)?;
                let b = SingularBlock::from_json(&text).map_err(|e| Failure::Malformed(format!("{sb}: {e}")))?;
                let (bv, mv) = validate_singular_block(&b);
                payload.insert("singular_ok".into(), json!(bv.is_empty() && mv.is_empty()));
                v.extend(bv.iter().map(to_value));
                v.extend(mv.iter().map(to_value));
            }
            Ok((Value::Object(payload), v, false))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::HeckeApply { .. } => "hecke-apply",
        Command::Klv { .. } => "klv",
        Command::Blocks { .. } => "blocks",
        Command::Induce { .. } => "induce",
        Command::Generic { .. } => "generic",
        Command::Arrangement { .. } => "arrangement",
        Command::TranslateCheck { .. } => "translate-check",
    }
}

/// Runs one command line (including the program name) without touching the
/// process's streams.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let fail = |msg: String| Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") };
    let cap = match weyl_cap() {
        Ok(c) => c,
        Err(Failure::Malformed(m)) => return fail(m),
    };
    let mut ctx = Ctx { inputs: Vec::new(), cap };
    match dispatch(&cli.command, &mut ctx) {
        Ok((payload, violations, inconclusive)) => {
            let code = if violations.is_empty() && !inconclusive { 0 } else { 1 };
            let report = json!({
                "command": command_name(&cli.command),
                "inputs": ctx.inputs,
                "payload": payload,
                "violations": violations,
            });
            let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
            stdout.push('\n');
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Malformed(m)) => fail(m),
    }
}
