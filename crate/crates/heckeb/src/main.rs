//! Command-line surface.  Every subcommand prints byte-deterministic text,
//! or the per-module JSON schema under `--json`.  Exit codes: 0 on success,
//! 1 on a domain error (anything the library rejects), 2 on a usage error
//! (malformed flags, handled by clap).

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use heckeb::core::{Bipartition, Order, Params};
use heckeb::decomp::{self, BlockClass};
use heckeb::fixtures;
use heckeb::fock;
use heckeb::jantzen;
use heckeb::kleshchev;
use heckeb::maya;
use heckeb::reptype::{self, ChargeSpec};
use heckeb::Result;

#[derive(Parser)]
#[command(
    name = "heckeb",
    about = "Exact block combinatorics for Iwahori-Hecke algebras of type B",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// The (e, f) pair shared by most subcommands.  `e` is an integer >= 3 or
/// `inf`; `f` is folded to min(f, e - f) on construction.
#[derive(Args)]
struct ParamArgs {
    /// Quantum characteristic: the multiplicative order of q^2 (or `inf`).
    #[arg(long)]
    e: Order,
    /// Charge difference between the two components.
    #[arg(long)]
    f: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<Params> {
        Params::new(self.e, self.f)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide FINITE/INFINITE representation type of the type-B algebra.
    #[command(group(ArgGroup::new("charge").required(true).args(["f", "f0", "generic"])))]
    Reptype {
        /// Number of strands.
        #[arg(long)]
        n: u32,
        /// Quantum characteristic (or `inf`).
        #[arg(long)]
        e: Order,
        /// Charge difference (already folded or not; folding is idempotent).
        #[arg(long)]
        f: Option<u32>,
        /// Raw charge exponent in 0..=e, folded to min(f0, e - f0).
        #[arg(long)]
        f0: Option<u32>,
        /// Generic second parameter: no charge window, bound n < 2e.
        #[arg(long)]
        generic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Test whether a bipartition is Kleshchev; print a peeling witness.
    Kleshchev {
        #[command(flatten)]
        params: ParamArgs,
        /// Bipartition literal, e.g. `4,2,1|2,2,1` or `|2,2`.
        bipartition: String,
        #[arg(long)]
        json: bool,
    },
    /// List the blocks of all bipartitions of n.
    Blocks {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Classify blocks and print their decomposition matrices.
    #[command(group(ArgGroup::new("target").required(true).args(["block_of", "all"])))]
    Decomp {
        #[command(flatten)]
        params: ParamArgs,
        /// Work on the block containing this bipartition.
        #[arg(long = "block-of")]
        block_of: Option<String>,
        /// Work on every block of size n (requires --n).
        #[arg(long, requires = "n")]
        all: bool,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a word of F-operators to the vacuum and print the result.
    Fock {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated letters, rightmost applied first, e.g.
        /// `F0,F1,F4,F0`; `F0^2` is the divided power.
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Jantzen sum of a Specht module as a combination of Spechts.
    Jantzen {
        #[command(flatten)]
        params: ParamArgs,
        bipartition: String,
        #[arg(long)]
        json: bool,
    },
    /// Two-row path display of a bipartition with region counts and the
    /// count identities.
    Maya {
        #[command(flatten)]
        params: ParamArgs,
        bipartition: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the stored-table and example ledger; print one line per check.
    VerifyFixtures {
        /// Restrict to one group (core, maya, fock, kleshchev, jantzen,
        /// decomp, table, reptype) or one check (e.g. S4_CASE1).
        #[arg(long)]
        tag: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_bip(s: &str) -> Result<Bipartition> {
    s.parse()
}

fn class_json(class: &BlockClass) -> Value {
    match class {
        BlockClass::Simple { case } => json!({ "class": "simple", "case": case.as_str() }),
        BlockClass::OneA { family, case } => json!({
            "class": "one-A",
            "case": case.as_str(),
            "family": family.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        }),
        BlockClass::OutOfRegime => json!({ "class": "out of regime" }),
    }
}

fn print_class(class: &BlockClass) {
    match class {
        BlockClass::Simple { case } => println!("class: simple, {case}"),
        BlockClass::OneA { family, case } => {
            println!("class: one-A chain of {}, {case}", family.len());
            let lits: Vec<String> = family.iter().map(|b| b.to_string()).collect();
            println!("family: {}", lits.join(" < "));
        }
        BlockClass::OutOfRegime => println!("class: out of regime"),
    }
}

fn decomp_block(block: &jantzen::Block, json_out: bool) -> Result<Value> {
    let class = decomp::classify_block(block)?;
    let matrix = decomp::decomposition_matrix(block)?;
    if json_out {
        let mut v = class_json(&class);
        v["block"] = block.to_json();
        v["matrix"] = matrix.to_json();
        Ok(v)
    } else {
        print_class(&class);
        println!("{matrix}");
        Ok(Value::Null)
    }
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Reptype { n, e, f, f0, generic, json } => {
            let (spec, charge): (ChargeSpec, Value) = if generic {
                (ChargeSpec::Generic, Value::String("generic".into()))
            } else {
                let raw = f.or(f0).expect("clap guarantees one charge flag");
                (ChargeSpec::Charge(raw), Value::from(raw))
            };
            let t = reptype::rep_type_b(n, e, spec)?;
            if json {
                println!(
                    "{}",
                    json!({ "n": n, "e": e.to_string(), "charge": charge, "type": t.as_str() })
                );
            } else {
                println!("{t}");
            }
        }
        Cmd::Kleshchev { params, bipartition, json } => {
            let p = params.params()?;
            let b = parse_bip(&bipartition)?;
            let (yes, witness) = kleshchev::is_kleshchev(&b, &p);
            if json {
                let steps: Vec<Value> = witness
                    .iter()
                    .map(|(r, x)| json!({ "residue": r, "node": [x.comp, x.row, x.col] }))
                    .collect();
                println!(
                    "{}",
                    json!({ "bipartition": b.to_string(), "kleshchev": yes, "witness": steps })
                );
            } else {
                println!("{}", if yes { "yes" } else { "no" });
                for (r, x) in &witness {
                    println!("  residue {r}: remove node ({},{},{})", x.comp, x.row, x.col);
                }
            }
        }
        Cmd::Blocks { n, params, json } => {
            let p = params.params()?;
            let bs = jantzen::blocks(n, &p)?;
            if json {
                println!("{}", Value::Array(bs.iter().map(|b| b.to_json()).collect()));
            } else {
                println!("{} blocks of n = {} at e = {}, f = {}", bs.len(), n, p.e, p.f);
                for (i, b) in bs.iter().enumerate() {
                    println!("block {}: size {}, {}", i + 1, b.size(), b);
                }
            }
        }
        Cmd::Decomp { params, block_of, all, n, json } => {
            let p = params.params()?;
            if let Some(lit) = block_of {
                let b = parse_bip(&lit)?;
                let block = jantzen::block_of(&b, &p)?;
                if !decomp::in_regime(block.n, &p) {
                    return Err(heckeb::Error::OutOfRegime);
                }
                if json {
                    println!("{}", decomp_block(&block, true)?);
                } else {
                    println!("block: {block}");
                    decomp_block(&block, false)?;
                }
            } else {
                debug_assert!(all);
                let n = n.expect("clap guarantees --n with --all");
                if !decomp::in_regime(n, &p) {
                    return Err(heckeb::Error::OutOfRegime);
                }
                let bs = jantzen::blocks(n, &p)?;
                if json {
                    let mut out = Vec::with_capacity(bs.len());
                    for block in &bs {
                        out.push(decomp_block(block, true)?);
                    }
                    println!("{}", Value::Array(out));
                } else {
                    for (i, block) in bs.iter().enumerate() {
                        if i > 0 {
                            println!();
                        }
                        println!("block {}: {block}", i + 1);
                        decomp_block(block, false)?;
                    }
                }
            }
        }
        Cmd::Fock { params, word, json } => {
            let p = params.params()?;
            let w = fock::parse_word(&word, &p)?;
            let v = fock::f_product(&w, &p)?;
            if json {
                println!("{}", v.to_json());
            } else {
                println!("{v}");
            }
        }
        Cmd::Jantzen { params, bipartition, json } => {
            let p = params.params()?;
            let b = parse_bip(&bipartition)?;
            let sum = jantzen::jantzen_sum(&b, &p)?;
            if json {
                println!("{}", sum.to_json());
            } else {
                println!("{sum}");
            }
        }
        Cmd::Maya { params, bipartition, json } => {
            let p = params.params()?;
            let b = parse_bip(&bipartition)?;
            let s = maya::bipartition_to_bipath(&b, &p);
            let rc = maya::region_counts(&s);
            let rep = maya::check_identities(&rc, &p, b.size());
            if json {
                let (lo, hi) = s.scan_range();
                let (top, bottom) = maya::render_bipath(&s, lo, hi);
                println!(
                    "{}",
                    json!({
                        "top": top,
                        "bottom": bottom,
                        "counts": {
                            "aL": rc.a_l, "aM": rc.a_m, "aR": rc.a_r,
                            "bL": rc.b_l, "bM": rc.b_m, "bR": rc.b_r,
                            "cM": rc.c_m, "cR": rc.c_r,
                            "dL": rc.d_l, "dM": rc.d_m,
                            "aTotal": rc.a_total(), "bTotal": rc.b_total(),
                        },
                        "identities": {
                            "i": rep.i, "ii": rep.ii, "iii": rep.iii,
                            "six2": rep.six2, "iv": rep.iv, "six3": rep.six3,
                            "allHold": rep.all_hold(),
                        },
                    })
                );
            } else {
                println!("{s}");
                println!(
                    "counts: aL={} aM={} aR={} bL={} bM={} bR={} cM={} cR={} dL={} dM={}",
                    rc.a_l, rc.a_m, rc.a_r, rc.b_l, rc.b_m, rc.b_r, rc.c_m, rc.c_r, rc.d_l,
                    rc.d_m
                );
                println!("totals: A={} B={}", rc.a_total(), rc.b_total());
                let opt = |o: Option<bool>| match o {
                    None => "n/a",
                    Some(true) => "ok",
                    Some(false) => "FAIL",
                };
                println!(
                    "identities: i={} ii={} iii={} 6.2={} iv={} 6.3={}",
                    opt(Some(rep.i)),
                    opt(Some(rep.ii)),
                    opt(Some(rep.iii)),
                    opt(Some(rep.six2)),
                    opt(rep.iv),
                    opt(rep.six3)
                );
                println!(
                    "{}",
                    if rep.all_hold() { "all identities hold" } else { "identity failure" }
                );
            }
        }
        Cmd::VerifyFixtures { tag, json } => {
            let outcomes = fixtures::verify(tag.as_deref())?;
            let failed = outcomes.iter().filter(|c| !c.passed).count();
            if json {
                let checks: Vec<Value> = outcomes
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "checks": checks,
                        "passed": outcomes.len() - failed,
                        "failed": failed,
                    })
                );
            } else {
                for c in &outcomes {
                    if c.passed {
                        println!("PASS {}", c.name);
                    } else {
                        println!("FAIL {}: {}", c.name, c.detail);
                    }
                }
                println!(
                    "{} checks: {} passed, {} failed",
                    outcomes.len(),
                    outcomes.len() - failed,
                    failed
                );
            }
            if failed > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
