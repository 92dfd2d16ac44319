//! Command-line frontend: classification, canonicalization, isomorphism
//! testing, invariants, Cartan decomposition, matrix representations,
//! structure-constant tables and self-test sweeps.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
//! error, 3 size cap exceeded.

use std::fmt::Write as _;

use ext_clifford::{
    blade::DEFAULT_TABLE_CAP, cartan_decompose, canonical_rep, classify, parse, selftest,
    system_profile, AlgebraExpr, CanonicalDecomposition, ClassLabel, Error, ExtSignature,
    InvariantProfile, TensorList,
};
use serde_json::{json, Value};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_TOO_LARGE: i32 = 3;

const USAGE: &str = "\
usage: ext-clifford [--json] <command> [args]

commands:
  classify EXPR                classify an algebra expression
  canon EXPR [--pure-clifford] canonical representative signature
  iso EXPR EXPR                decide isomorphism of two algebras
  invariants EXPR [--brute]    predicted invariant profile; --brute also
                               runs the blade-engine oracle and compares
  decompose P Q                Cartan decomposition of Cl(P,Q)
  rep EXPR                     integer matrix generators of the canonical
                               decomposition
  table EXPR                   structure-constant table of the expression
  selftest [--max-generators K] run the verification sweeps (default K=10)

expression syntax: Cl(p,q), Cl(r,s|p,q), K(r,s), R, C, H, D, products
with '*', powers with '^', parentheses. Example: \"Cl(1,0)^3 * H\"";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

struct Opts {
    json: bool,
    pure_clifford: bool,
    brute: bool,
    help: bool,
    max_generators: u32,
    positional: Vec<String>,
}

fn parse_opts(args: &[String]) -> Result<Opts, String> {
    let mut opts = Opts {
        json: false,
        pure_clifford: false,
        brute: false,
        help: false,
        max_generators: 10,
        positional: Vec::new(),
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--json" => opts.json = true,
            "--help" | "-h" => opts.help = true,
            "--pure-clifford" => opts.pure_clifford = true,
            "--brute" => opts.brute = true,
            "--max-generators" => {
                let value = iter
                    .next()
                    .ok_or_else(|| "--max-generators needs a value".to_string())?;
                opts.max_generators = value
                    .parse()
                    .map_err(|_| format!("--max-generators: not a number: {value}"))?;
            }
            other if other.starts_with("--max-generators=") => {
                let value = &other["--max-generators=".len()..];
                opts.max_generators = value
                    .parse()
                    .map_err(|_| format!("--max-generators: not a number: {value}"))?;
            }
            other if other.starts_with("--") => {
                return Err(format!("unknown flag: {other}"));
            }
            _ => opts.positional.push(arg.clone()),
        }
    }
    Ok(opts)
}

fn run(args: &[String]) -> i32 {
    let opts = match parse_opts(args) {
        Ok(opts) => opts,
        Err(message) => return usage_error(&message),
    };
    if opts.help {
        println!("{USAGE}");
        return EXIT_OK;
    }
    if opts.positional.is_empty() {
        return usage_error("no command given");
    }
    let command = opts.positional[0].as_str();
    let rest = &opts.positional[1..];
    match command {
        "classify" => cmd_classify(rest, &opts),
        "canon" => cmd_canon(rest, &opts),
        "iso" => cmd_iso(rest, &opts),
        "invariants" => cmd_invariants(rest, &opts),
        "decompose" => cmd_decompose(rest, &opts),
        "rep" => cmd_rep(rest, &opts),
        "table" => cmd_table(rest, &opts),
        "selftest" => cmd_selftest(rest, &opts),
        "help" => {
            println!("{USAGE}");
            EXIT_OK
        }
        other => usage_error(&format!("unknown command: {other}")),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    eprintln!("{USAGE}");
    EXIT_USAGE
}

fn lib_error(error: &Error) -> i32 {
    eprintln!("error: {error}");
    match error {
        Error::TooLarge { .. } => EXIT_TOO_LARGE,
        _ => EXIT_USAGE,
    }
}

fn parse_arg(text: &str) -> Result<(AlgebraExpr, TensorList), i32> {
    match parse(text) {
        Ok(expr) => {
            let factors = expr.flatten();
            Ok((expr, factors))
        }
        Err(e) => {
            eprintln!("error in {text:?}: {e}");
            Err(EXIT_USAGE)
        }
    }
}

fn expect_args(rest: &[String], count: usize, what: &str) -> Result<(), i32> {
    if rest.len() != count {
        Err(usage_error(&format!(
            "{what} takes {count} argument{}",
            if count == 1 { "" } else { "s" }
        )))
    } else {
        Ok(())
    }
}

fn label_json(label: ClassLabel) -> Value {
    json!({
        "type": label.kind.name(),
        "M": label.big_m,
        "N": label.big_n,
    })
}

fn signature_json(sig: ExtSignature) -> Value {
    json!({ "r": sig.r, "s": sig.s, "p": sig.p, "q": sig.q })
}

fn profile_json(profile: InvariantProfile) -> Value {
    json!({
        "log2_dim": profile.log2_dim,
        "log2_center": profile.log2_center,
        "trace_sig": profile.trace_sig,
    })
}

fn derived_json(sig: ExtSignature) -> Value {
    let d = sig.derived();
    json!({ "m": d.m, "n": d.n, "M": d.big_m, "N": d.big_n, "t": d.t })
}

fn label_text(label: ClassLabel) -> String {
    format!("type {}, M = {}, N = {}", label.kind, label.big_m, label.big_n)
}

fn derived_text(sig: ExtSignature) -> String {
    let d = sig.derived();
    format!("m={}, n={}, M={}, N={}, t={}", d.m, d.n, d.big_m, d.big_n, d.t)
}

/// Classification report of one expression: label, plus the signature's
/// derived parameters when the expression is a single algebra.
fn describe(input: &str, factors: &TensorList) -> (ClassLabel, String, Value) {
    let label = factors.classify();
    let mut text = format!("{input}: {}", label_text(label));
    let mut value = json!({ "input": input, "class": label_json(label) });
    if let [single] = factors.factors() {
        let _ = write!(text, "  [{}]", derived_text(*single));
        value["signature"] = signature_json(*single);
        value["derived"] = derived_json(*single);
    }
    (label, text, value)
}

fn cmd_classify(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 1, "classify") {
        return code;
    }
    let (_, factors) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (_, text, value) = describe(&rest[0], &factors);
    emit(opts, &text, value);
    EXIT_OK
}

fn cmd_canon(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 1, "canon") {
        return code;
    }
    let (_, factors) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (label, text, mut value) = describe(&rest[0], &factors);
    let canonical = match label.canonical_signature(opts.pure_clifford) {
        Ok(sig) => sig,
        Err(e) => return lib_error(&e),
    };
    value["canonical"] = signature_json(canonical);
    value["canonical_expression"] = json!(canonical.to_string());
    emit(opts, &format!("{text}\ncanonical: {canonical}"), value);
    EXIT_OK
}

fn cmd_iso(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 2, "iso") {
        return code;
    }
    let (_, left) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (_, right) = match parse_arg(&rest[1]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (left_label, left_text, left_value) = describe(&rest[0], &left);
    let (right_label, right_text, right_value) = describe(&rest[1], &right);
    let isomorphic = left_label == right_label;
    let verdict = if isomorphic {
        "isomorphic"
    } else {
        "not isomorphic"
    };
    let text = format!("{left_text}\n{right_text}\n{verdict}");
    let value = json!({
        "left": left_value,
        "right": right_value,
        "isomorphic": isomorphic,
    });
    emit(opts, &text, value);
    EXIT_OK
}

fn cmd_invariants(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 1, "invariants") {
        return code;
    }
    let (_, factors) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (_, mut text, mut value) = describe(&rest[0], &factors);
    let predicted = match factors.profile() {
        Ok(profile) => profile,
        Err(e) => return lib_error(&e),
    };
    let _ = write!(text, "\npredicted profile: {predicted}");
    value["profile"] = profile_json(predicted);

    if opts.brute {
        let brute = match factors.brute_system().and_then(|s| system_profile(&s)) {
            Ok(profile) => profile,
            Err(e) => return lib_error(&e),
        };
        let agreement = brute == predicted;
        let _ = write!(text, "\nbrute profile:     {brute}");
        let _ = write!(
            text,
            "\n{}",
            if agreement { "agreement" } else { "DISAGREEMENT" }
        );
        value["brute"] = json!({
            "profile": profile_json(brute),
            "agrees": agreement,
        });
        emit(opts, &text, value);
        return if agreement { EXIT_OK } else { EXIT_MISMATCH };
    }
    emit(opts, &text, value);
    EXIT_OK
}

fn cmd_decompose(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 2, "decompose") {
        return code;
    }
    let (p, q) = match (rest[0].parse::<u32>(), rest[1].parse::<u32>()) {
        (Ok(p), Ok(q)) => (p, q),
        _ => return usage_error("decompose takes two nonnegative integers"),
    };
    let decomposition = cartan_decompose(p, q);
    let label = classify(ExtSignature::clifford(p, q));
    let text = format!("Cl({p},{q}) ~ {decomposition}  [{}]", label_text(label));
    let value = json!({
        "p": p,
        "q": q,
        "class": label_json(label),
        "decomposition": decomposition_json(&decomposition),
        "expression": decomposition.to_string(),
    });
    emit(opts, &text, value);
    EXIT_OK
}

fn decomposition_json(d: &CanonicalDecomposition) -> Value {
    json!({
        "count_11": d.count_11,
        "has_02": d.has_02,
        "odd_factor": d.odd_factor.map(|f| f.base().name()),
        "odd_count": d.odd_count,
    })
}

fn cmd_rep(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 1, "rep") {
        return code;
    }
    let (_, factors) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let (label, text, mut value) = describe(&rest[0], &factors);
    let decomposition = match label.decomposition() {
        Ok(d) => d,
        Err(e) => return lib_error(&e),
    };
    let rep = match canonical_rep(label) {
        Ok(rep) => rep,
        Err(e) => return lib_error(&e),
    };
    let mut out = format!("{text}\ndecomposition: {decomposition}\ndimension: {}", rep.dim());
    let mut generators = Vec::new();
    for (i, matrix) in rep.matrices.iter().enumerate() {
        let rows = matrix.to_rows();
        let square = rep.system.square(i).as_i64();
        let _ = write!(
            out,
            "\ng{} (square {square:+}): {}",
            i + 1,
            serde_json::to_string(&rows).unwrap()
        );
        generators.push(json!({ "square": square, "matrix": rows }));
    }
    value["decomposition"] = json!(decomposition.to_string());
    value["dimension"] = json!(rep.dim());
    value["generators"] = Value::Array(generators);
    emit(opts, &out, value);
    EXIT_OK
}

fn cmd_table(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 1, "table") {
        return code;
    }
    let (_, factors) = match parse_arg(&rest[0]) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let system = match factors.brute_system_with_cap(DEFAULT_TABLE_CAP) {
        Ok(system) => system,
        Err(e) => return lib_error(&e),
    };
    let table = match system.structure_constants() {
        Ok(table) => table,
        Err(e) => return lib_error(&e),
    };
    if opts.json {
        let mut rows = Vec::new();
        for a in system.blades() {
            for b in system.blades() {
                let (sign, c) = table.entry(a, b);
                rows.push(json!({
                    "a": a.indices().map(|i| i + 1).collect::<Vec<_>>(),
                    "b": b.indices().map(|i| i + 1).collect::<Vec<_>>(),
                    "sign": sign.as_i64(),
                    "c": c.indices().map(|i| i + 1).collect::<Vec<_>>(),
                }));
            }
        }
        let value = json!({
            "input": rest[0],
            "generators": table.generators(),
            "rows": rows,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print!("{}", table.to_text());
    }
    EXIT_OK
}

fn cmd_selftest(rest: &[String], opts: &Opts) -> i32 {
    if let Err(code) = expect_args(rest, 0, "selftest") {
        return code;
    }
    let outcomes = selftest::run_all(opts.max_generators);
    let mut failures = 0u64;
    let mut text = String::new();
    let mut suites = Vec::new();
    for outcome in &outcomes {
        failures += outcome.failures;
        let _ = writeln!(
            text,
            "{:<55} {:>6} cases, {} failures",
            outcome.name, outcome.cases, outcome.failures
        );
        if let Some(first) = &outcome.first_failure {
            let _ = writeln!(text, "    first failure: {first}");
        }
        suites.push(json!({
            "name": outcome.name,
            "cases": outcome.cases,
            "failures": outcome.failures,
            "first_failure": outcome.first_failure,
        }));
    }
    let passed = failures == 0;
    let _ = write!(
        text,
        "{}",
        if passed {
            format!("all {} suites passed", outcomes.len())
        } else {
            format!("{failures} failures")
        }
    );
    let value = json!({
        "max_generators": opts.max_generators,
        "suites": suites,
        "passed": passed,
    });
    emit(opts, &text, value);
    if passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn emit(opts: &Opts, text: &str, value: Value) {
    if opts.json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{text}");
    }
}
