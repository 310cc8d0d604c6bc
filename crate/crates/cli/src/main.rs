//! `zhou`: command-line front end for finite ring computations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zhou_core::predicates::{check_predicate, Params, PredicateId};
use zhou_core::{radicals, ElementSubset, Error, FiniteRing, Limits, Registry, Result};
use zhou_harness::implication::{check_implication, Cond};
use zhou_harness::report::{to_json, to_text};
use zhou_harness::search::pasting_search;
use zhou_harness::{is_whitelisted, paper_regression, Catalog, TheoremReport, Tier, Verdict};

#[derive(Parser)]
#[command(name = "zhou", version, about = "Zhou radical and ring-class predicates over finite rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// TOML manifest registering Cayley tables and algebras by name.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Largest ring order that may be built.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Loop budget for predicate evaluation.
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Order, characteristic and basic properties of a ring.
    Eval { ring: String },
    /// δ(R), or δ of a right ideal taken as a module, with route agreement.
    Delta {
        ring: String,
        /// Generator of a right ideal (repeatable); δ of that ideal as a right module.
        #[arg(long = "ideal")]
        ideal: Vec<String>,
    },
    /// Jacobson radical, socle, and maximal and essential right ideal counts.
    Radical { ring: String },
    /// Nilpotents, idempotents, units and center.
    Elements { ring: String },
    /// Evaluates one predicate.
    Check {
        predicate: String,
        ring: String,
        /// Idempotent parameter, as a structured literal.
        #[arg(long)]
        e: Option<String>,
        /// Accept e = 0.
        #[arg(long)]
        allow_trivial_e: bool,
    },
    /// Checks `premise ⇒ conclusion` over a catalog tier (`name@1` fixes e = 1).
    Implication {
        premise: String,
        conclusion: String,
        #[arg(long, default_value = "small")]
        tier: Tier,
    },
    /// Runs the regression suite.
    Regress {
        /// Only entries whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// List entry ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Searches a tier for pasting counterexamples.
    Search {
        #[arg(long, default_value = "medium")]
        tier: Tier,
    },
    /// Lists catalog rings and registered names.
    Catalog {
        #[arg(long, default_value = "large")]
        tier: Tier,
    },
}

/// Rendered output with its exit status.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            let code = error_code(&err);
            match format {
                Format::Text => eprintln!("error: {err}"),
                Format::Json => {
                    println!("{}", json!({"error": err.to_string(), "exit": code}))
                }
            }
            ExitCode::from(code)
        }
    }
}

fn error_code(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } | Error::LatticeExplosion { .. } | Error::ComplexityRefusal { .. } => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<Output> {
    let mut limits = Limits::DEFAULT;
    if let Some(m) = cli.max_order {
        limits.max_order = m;
    }
    if let Some(b) = cli.budget {
        limits.budget = b;
    }
    let registry = || -> Result<Registry> {
        let mut reg = Registry::with_builtins(&limits)?;
        if let Some(path) = &cli.manifest {
            reg.load_manifest(path)?;
        }
        Ok(reg)
    };
    let ring = |text: &str| -> Result<FiniteRing> { registry()?.eval_str(text, &limits) };
    match &cli.command {
        Command::Eval { ring: text } => eval(&ring(text)?, text),
        Command::Delta { ring: text, ideal } => delta(&ring(text)?, ideal, &limits),
        Command::Radical { ring: text } => radical(&ring(text)?, &limits),
        Command::Elements { ring: text } => elements(&ring(text)?),
        Command::Check { predicate, ring: text, e, allow_trivial_e } => {
            let r = ring(text)?;
            let id = PredicateId::from_name(predicate)?;
            let e = e.as_deref().map(|s| r.parse_elem(s)).transpose()?;
            let rep = check_predicate(id, &r, Params { e, allow_trivial_e: *allow_trivial_e }, &limits)?;
            let witness = rep.witness.as_ref().map(|w| w.render(&r));
            let mut out = format!("{id} {}: {}\n", text_name(&r, text), rep.verdict);
            if let Some(e) = rep.e {
                out += &format!("e = {}\n", r.label(e));
            }
            if let Some(w) = &witness {
                out += &format!("witness: {w}\n");
            }
            let vars: serde_json::Map<String, Value> = rep
                .witness
                .iter()
                .flat_map(|w| w.vars.iter().chain(&w.derived))
                .map(|(n, x)| (n.clone(), Value::from(r.label(*x))))
                .collect();
            let json = json!({
                "predicate": id.name(),
                "ring": text_name(&r, text),
                "e": rep.e.map(|e| r.label(e).to_string()),
                "verdict": rep.verdict,
                "witness": witness.map(|_| Value::Object(vars)),
                "condition": rep.witness.as_ref().map(|w| w.condition.clone()),
                "cost": rep.cost,
            });
            Ok(Output { text: out, json, code: if rep.verdict { 0 } else { 1 } })
        }
        Command::Implication { premise, conclusion, tier } => {
            let (p, q): (Cond, Cond) = (premise.parse()?, conclusion.parse()?);
            let cat = Catalog::build(*tier, &limits)?;
            let rep = check_implication(&cat, *tier, &format!("{p}=>{q}"), p, q);
            Ok(reports(vec![rep]))
        }
        Command::Regress { filter, list } => {
            if *list {
                let ids = zhou_harness::entry_ids();
                return Ok(Output::ok(ids.iter().map(|i| format!("{i}\n")).collect(), json!(ids)));
            }
            let cat = Catalog::build(Tier::Large, &limits)?;
            Ok(reports(paper_regression(&cat, filter.as_deref())?))
        }
        Command::Search { tier } => {
            let cat = Catalog::build(*tier, &limits)?;
            let mut out = reports(vec![pasting_search(&cat, *tier, &[])]);
            if out.code == 1 {
                out.code = 0;
            }
            Ok(out)
        }
        Command::Catalog { tier } => {
            let cat = Catalog::build(*tier, &limits)?;
            let (tables, algebras) = registry()?.names();
            let mut text = String::new();
            for e in &cat.entries {
                text += &format!("{:<28} {:>5}  {}{}\n", e.name, e.ring.order(), e.tier, if e.derived { "  derived" } else { "" });
            }
            text += &format!("tables: {}\nalgebras: {}\n", tables.join(", "), algebras.join(", "));
            let rings: Vec<Value> = cat
                .entries
                .iter()
                .map(|e| json!({"name": e.name, "order": e.ring.order(), "tier": e.tier, "derived": e.derived}))
                .collect();
            Ok(Output::ok(text, json!({"rings": rings, "tables": tables, "algebras": algebras})))
        }
    }
}

fn text_name(r: &FiniteRing, fallback: &str) -> String {
    r.name().unwrap_or(fallback).to_string()
}

/// Exit 1 on any counterexample or non-whitelisted divergence, 3 when only refusals remain.
fn reports(reps: Vec<TheoremReport>) -> Output {
    let failed = reps.iter().any(|r| match r.verdict {
        Verdict::Counterexample => true,
        Verdict::Divergence => !is_whitelisted(&r.id),
        _ => false,
    });
    let refused = reps.iter().any(|r| r.verdict == Verdict::Refused);
    let code = if failed {
        1
    } else if refused {
        3
    } else {
        0
    };
    let json = serde_json::from_str(&to_json(&reps)).expect("report json");
    Output { text: to_text(&reps), json, code }
}

fn eval(r: &FiniteRing, text: &str) -> Result<Output> {
    let char = r.characteristic();
    let out = format!(
        "ring: {}\norder: {}\ncharacteristic: {}\nunital: {}\ncommutative: {}\naxioms: ok\n",
        text_name(r, text),
        r.order(),
        char.map_or("none".into(), |c| c.to_string()),
        r.is_unital(),
        r.is_commutative(),
    );
    let json = json!({
        "ring": text_name(r, text),
        "order": r.order(),
        "characteristic": char,
        "unital": r.is_unital(),
        "commutative": r.is_commutative(),
        "axioms": "ok",
    });
    Ok(Output::ok(out, json))
}

fn route_agreement(r: &FiniteRing, d: &ElementSubset, limits: &Limits) -> String {
    if r.order() > limits.lattice_order {
        return "quasi-regular route only (order above lattice limit)".into();
    }
    let routes = [
        radicals::delta_via_essential_maximal(r, limits),
        radicals::delta_via_summand(r, limits),
        radicals::delta_via_semisimple_complement(r, limits),
        radicals::delta_via_socle_lift(r, limits),
        radicals::delta_quasi_regular(r),
    ];
    let mut agree = 0;
    for route in routes {
        match route {
            Ok(x) if x.as_subset() == d => agree += 1,
            Ok(_) => return "routes disagree".into(),
            Err(Error::NotUnital) => {}
            Err(e) => return format!("not compared: {e}"),
        }
    }
    format!("{agree} routes agree")
}

fn delta(r: &FiniteRing, ideal: &[String], limits: &Limits) -> Result<Output> {
    if !ideal.is_empty() {
        let gens = ideal.iter().map(|g| r.parse_elem(g)).collect::<Result<Vec<_>>>()?;
        let i = r.right_ideal_closure(&ElementSubset::from_elems(r.order(), gens)).into_subset();
        let d = radicals::delta_of_right_ideal_as_module(r, &i, limits)?;
        let text = format!("I = {}\nδ(I) = {}\n", r.format_set(&i), r.format_set(&d));
        let json = json!({"ideal": r.labels_of(&i), "delta": r.labels_of(&d)});
        return Ok(Output::ok(text, json));
    }
    let d = radicals::delta(r, limits)?.into_subset();
    let routes = route_agreement(r, &d, limits);
    let text = format!("δ = {}\n|δ| = {}\nroutes: {routes}\n", r.format_set(&d), d.len());
    Ok(Output::ok(text, json!({"delta": r.labels_of(&d), "order": d.len(), "routes": routes})))
}

fn radical(r: &FiniteRing, limits: &Limits) -> Result<Output> {
    let j = radicals::jacobson(r, limits)?.into_subset();
    let lattice = r.order() <= limits.lattice_order || !r.is_unital();
    let mut text = format!("J = {}\n", r.format_set(&j));
    let mut json = json!({"jacobson": r.labels_of(&j)});
    if lattice {
        let soc = radicals::socle(r, limits)?.into_subset();
        let maximal = radicals::maximal_right_ideals(r, limits)?;
        let all = radicals::all_right_ideals(r, limits)?;
        let essential = all.iter().filter(|i| radicals::is_essential(r, i.as_subset())).count();
        text += &format!(
            "Soc = {}\nright ideals: {}\nmaximal right ideals: {}\nessential right ideals: {essential}\n",
            r.format_set(&soc),
            all.len(),
            maximal.len()
        );
        json["socle"] = json!(r.labels_of(&soc));
        json["right_ideals"] = json!(all.len());
        json["maximal_right_ideals"] = json!(maximal.len());
        json["essential_right_ideals"] = json!(essential);
    } else {
        text += "Soc and ideal counts: skipped (order above lattice limit)\n";
    }
    Ok(Output::ok(text, json))
}

fn elements(r: &FiniteRing) -> Result<Output> {
    let n = r.nilpotent_elements();
    let id = r.idempotent_elements();
    let c = r.center();
    let u = if r.is_unital() { Some(r.units()?) } else { None };
    let mut text = format!("N = {}\nId = {}\n", r.format_set(&n), r.format_set(&id));
    if let Some(u) = &u {
        text += &format!("U = {}\n", r.format_set(u));
    }
    text += &format!("C = {}\n", r.format_set(&c));
    let json = json!({
        "nilpotents": r.labels_of(&n),
        "idempotents": r.labels_of(&id),
        "units": u.as_ref().map(|u| r.labels_of(u)),
        "center": r.labels_of(&c),
    });
    Ok(Output::ok(text, json))
}
