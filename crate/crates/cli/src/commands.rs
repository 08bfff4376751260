use std::fmt::Write as _;
use std::io::Read as _;

use serde_json::{json, Value};
use vknot::braidrep::{fixture, link_group, Fixture, VirtualBraidWord};
use vknot::foxcalc::{fox_derivative_with, relator_annihilator, unimodularity_certificate, FoxConvention, Verdict};
use vknot::freegroup::{Alphabet, Word};
use vknot::ncalg::{tietze_invariance_check, verify_relation, AlgebraSpec};
use vknot::nilpotent::lcs_layers;
use vknot::presentation::{GroupPresentation, PresentationJson, TietzeMove};

use crate::{selftest, BraidOptions, Cli, Command, Input};

pub type Error = Box<dyn std::error::Error>;

/// Rendered result of one command. `verified` is false when a check the
/// command performs did not hold.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub verified: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, verified: true }
    }
}

pub fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Present { braid, options } => Ok(presentation_output(&braid_group(braid, options)?)),
        Command::Fixture { name: None } => {
            let names: Vec<&str> = Fixture::NAMES.to_vec();
            Ok(Output::ok(names.iter().map(|n| format!("{n}\n")).collect(), json!(names)))
        }
        Command::Fixture { name: Some(name) } => Ok(presentation_output(&fixture(name)?)),
        Command::Abelianize { input, options } => {
            let ab = load(input, options)?.abelianization()?;
            let json = json!({ "abelianization": ab.to_string(), "freeRank": ab.free_rank, "torsion": ab.torsion });
            Ok(Output::ok(format!("{ab}\n"), json))
        }
        Command::Annihilator { input, options } => {
            let p = load(input, options)?;
            if p.generator_count() != 2 || p.relations().len() != 1 {
                return Err("the annihilator needs a two-generator, one-relator presentation".into());
            }
            let text = relator_annihilator(&p)?.normalize_unit().factored_display();
            Ok(Output::ok(format!("{text}\n"), json!({ "annihilator": text })))
        }
        Command::Lcs { input, options, class, all } => lcs(&load(input, options)?, *class, *all),
        Command::Fox { word, vars, right } => fox(word, vars, *right),
        Command::Algebra { ideal, vars, commutative, check_relation, input, options } => {
            let group = if given(input) { Some(load(input, options)?) } else { None };
            algebra(ideal, vars.as_deref(), *commutative, *check_relation, group.as_ref(), cli.truncate)
        }
        Command::TietzeCheck { input, options, moves } => tietze(&load(input, options)?, moves, cli.truncate),
        Command::Kishino => kishino(),
        Command::Selftest { cases } => selftest::run(cli.seed, *cases),
    }
}

fn given(input: &Input) -> bool {
    input.fixture.is_some() || input.presentation.is_some() || input.braid.is_some()
}

fn load(input: &Input, options: &BraidOptions) -> Result<GroupPresentation, Error> {
    if let Some(name) = &input.fixture {
        return Ok(fixture(name)?);
    }
    if let Some(path) = &input.presentation {
        let mut text = String::new();
        if path.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut text)?;
        } else {
            text = std::fs::read_to_string(path)?;
        }
        let json: PresentationJson = serde_json::from_str(&text)?;
        return Ok(GroupPresentation::from_json(&json)?);
    }
    if let Some(braid) = &input.braid {
        return braid_group(braid, options);
    }
    Err("one of --fixture, --presentation or --braid is required".into())
}

fn braid_group(text: &str, options: &BraidOptions) -> Result<GroupPresentation, Error> {
    let strands = match options.strands {
        Some(n) => n,
        None => {
            let loose = VirtualBraidWord::parse(usize::MAX, text)?;
            match loose.letters().iter().map(|g| g.index).max() {
                Some(i) => i + 1,
                None => return Err("an empty braid needs --strands".into()),
            }
        }
    };
    Ok(link_group(options.rep, &VirtualBraidWord::parse(strands, text)?)?)
}

fn presentation_output(p: &GroupPresentation) -> Output {
    let json = p.to_json();
    let mut text = format!("generators: {}\n", json.generators.join(", "));
    for r in &json.relators {
        let _ = writeln!(text, "  {r}");
    }
    Output::ok(text, serde_json::to_value(&json).expect("presentation JSON"))
}

fn lcs(p: &GroupPresentation, class: usize, all: bool) -> Result<Output, Error> {
    let layers = lcs_layers(p, class)?;
    let shown = if all { &layers[..] } else { &layers[layers.len() - 1..] };
    let mut text = String::new();
    let mut json = Vec::new();
    for layer in shown {
        let s = layer.structure().to_string();
        if all {
            let _ = writeln!(text, "gamma_{}/gamma_{}: {s}", layer.k, layer.k + 1);
        } else {
            let _ = writeln!(text, "{s}");
        }
        let mut v = serde_json::to_value(layer)?;
        v["structure"] = json!(s);
        json.push(v);
    }
    let json = if all { Value::Array(json) } else { json.pop().expect("one layer") };
    Ok(Output::ok(text, json))
}

fn fox(word: &str, vars: &[String], right: bool) -> Result<Output, Error> {
    let alphabet = Alphabet::new(vars)?;
    let w = alphabet.parse_word(word)?;
    let convention = if right { FoxConvention::Right } else { FoxConvention::Left };
    let mut text = String::new();
    let mut derivatives = Vec::new();
    for (g, label) in alphabet.labels().iter().enumerate() {
        let d = fox_derivative_with(&alphabet, &w, g, convention).to_string();
        let _ = writeln!(text, "d/d{label}: {d}");
        derivatives.push(json!({ "generator": label, "derivative": d }));
    }
    let json = json!({
        "word": alphabet.format_word(&w),
        "convention": convention,
        "derivatives": derivatives,
    });
    Ok(Output::ok(text, json))
}

fn algebra(
    ideal: &str,
    vars: Option<&[String]>,
    commutative: bool,
    check: bool,
    group: Option<&GroupPresentation>,
    truncate: usize,
) -> Result<Output, Error> {
    let vars: Vec<String> = match (vars, group) {
        (Some(v), _) => v.to_vec(),
        (None, Some(p)) => p.alphabet().labels().iter().map(|l| l.to_uppercase()).collect(),
        (None, None) => vec!["X".into(), "Y".into()],
    };
    let spec = AlgebraSpec::parse_ideal(&vars, ideal, commutative, Some(truncate))?;
    let basis = spec.monomial_basis(truncate);
    let labels = basis.labels(spec.vars());
    let mut text = format!("algebra: {spec}\n");
    let count = basis.monomials.len();
    match basis.dimension() {
        Some(d) => {
            let _ = writeln!(text, "dimension: {d}");
        }
        None => {
            let _ = writeln!(text, "dimension: at least {count} (listed up to degree {truncate})");
        }
    }
    let _ = writeln!(text, "basis: {}", labels.join(" "));
    let mut json = json!({
        "algebra": spec.to_string(),
        "dimension": count,
        "saturated": basis.saturated,
        "basis": labels,
    });
    let mut verified = true;
    if check {
        let p = group.ok_or("--check-relation needs --fixture, --presentation or --braid")?;
        let result = verify_relation(p, &spec)?;
        let residues: Vec<String> = result.residues.iter().map(ToString::to_string).collect();
        for (i, (rel, res)) in p.relations().iter().zip(&residues).enumerate() {
            let _ = writeln!(text, "relation {i}: {}", p.format_relation(rel));
            let _ = writeln!(text, "  residue: {res}");
        }
        let _ = writeln!(text, "verdict: {}", if result.holds { "holds" } else { "fails" });
        json["relation"] = json!({ "holds": result.holds, "residues": residues });
        verified = result.holds;
    }
    Ok(Output { text, json, verified })
}

fn parse_move(text: &str, p: &GroupPresentation) -> Result<TietzeMove, Error> {
    let (head, arg) = text.split_once(':').unwrap_or((text, ""));
    let index = |s: &str| -> Result<usize, Error> {
        s.trim().parse::<usize>().map_err(|_| format!("bad index `{s}` in move `{text}`").into())
    };
    Ok(match head.trim() {
        "identity" => TietzeMove::Identity,
        "product" => {
            let (a, b) = arg.split_once(',').ok_or_else(|| format!("expected product:I,J, got `{text}`"))?;
            TietzeMove::AddRelatorProduct { first: index(a)?, second: index(b)? }
        }
        "add-generator" => {
            let (label, word) =
                arg.split_once('=').ok_or_else(|| format!("expected add-generator:T=WORD, got `{text}`"))?;
            TietzeMove::AddGenerator { label: label.trim().into(), word: p.alphabet().parse_word(word.trim())? }
        }
        "remove-generator" => TietzeMove::RemoveGenerator { generator: p.alphabet().index_of(arg.trim())? },
        "remove-relator" => TietzeMove::RemoveRedundantRelator { index: index(arg)? },
        _ => return Err(format!("unknown move `{text}`").into()),
    })
}

fn default_moves(p: &GroupPresentation) -> Vec<TietzeMove> {
    let mut moves = vec![TietzeMove::Identity];
    if let Some(last) = p.relations().len().checked_sub(1) {
        moves.push(TietzeMove::AddRelatorProduct { first: 0, second: last });
    }
    let word = match p.generator_count() {
        0 => Word::identity(),
        1 => Word::generator(0),
        _ => &Word::generator(0) * &Word::power_of(1, -1),
    };
    let mut label = "t".to_string();
    while p.alphabet().index_of(&label).is_ok() {
        label.push('t');
    }
    moves.push(TietzeMove::AddGenerator { label, word });
    moves
}

fn tietze(p: &GroupPresentation, moves: &[String], truncate: usize) -> Result<Output, Error> {
    let moves = if moves.is_empty() {
        default_moves(p)
    } else {
        moves.iter().map(|m| parse_move(m, p)).collect::<Result<_, _>>()?
    };
    let vars: Vec<String> = p.alphabet().labels().iter().map(|l| l.to_uppercase()).collect();
    let spec = AlgebraSpec::free(&vars, truncate);
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut verified = true;
    for mv in &moves {
        let check = tietze_invariance_check(p, mv, &spec)?;
        let _ = writeln!(text, "move: {}", check.movement);
        for line in &check.checks {
            let _ = writeln!(text, "  [{}] {}", if line.passed { "ok" } else { "FAILED" }, line.name);
        }
        if !check.oracle_ran && *mv != TietzeMove::Identity {
            let _ = writeln!(text, "  (algebra too large for the ideal comparison; certificate only)");
        }
        verified &= check.holds;
        reports.push(serde_json::to_value(&check)?);
    }
    let _ = writeln!(text, "verdict: {}", if verified { "invariant" } else { "not invariant" });
    Ok(Output { text, json: json!({ "algebra": spec.to_string(), "moves": reports }), verified })
}

fn kishino() -> Result<Output, Error> {
    let cert = unimodularity_certificate()?;
    let mut text = String::new();
    let _ = writeln!(text, "word: {}", cert.word);
    let _ = writeln!(text, "d/da: {}", cert.fox_derivatives.a);
    let _ = writeln!(text, "d/dc: {}", cert.fox_derivatives.c);
    let _ = writeln!(text, "d/dd: {}", cert.fox_derivatives.d);
    let _ = writeln!(text, "cleared vector: {}", cert.cleared_vector.join(", "));
    let _ = writeln!(text, "field: Q[c]/({})", cert.minimal_polynomial);
    let _ = writeln!(text, "point: a0 = {}, c0 = {}, d0 = {}", cert.point.a0, cert.point.c0, cert.point.d0);
    for e in &cert.evaluations {
        let _ = writeln!(text, "  {} -> {}", e.polynomial, e.value);
    }
    let _ = writeln!(text, "verdict: {}", cert.verdict);
    let _ = writeln!(text, "{}", cert.conclusion);
    let verified = cert.verdict == Verdict::NotUnimodular
        && cert.nonzero_monomials
        && cert.evaluations.iter().all(|e| e.value == "0");
    Ok(Output { text, json: serde_json::to_value(&cert)?, verified })
}
