use std::path::{Path, PathBuf};

use clap::ValueEnum;
use omegacanon::automata::Alphabet;
use omegacanon::blackwhite::{black_white_dba, black_white_dca};
use omegacanon::checks::{default_fdfa_subjects, Bounds, FdfaSuite, LanguageSuite, SuiteReport};
use omegacanon::colors::{build_colorful_fdfa, Color, ColorContext};
use omegacanon::fdfa::{AcceptanceMode, Fdfa};
use omegacanon::fixtures;
use omegacanon::omega::{periodic_fdfa, OmegaAutomaton, UpWord};
use omegacanon::persistent::diameter as fdfa_diameter;
use omegacanon::wagner::inclusion_measures;
use omegacanon::{Error, Limits, Result};
use serde_json::{json, Value};

use crate::doc::{self, Document, UpWordDoc};
use crate::dot;

pub struct Env {
    pub limits: Limits,
    pub bounds: Option<(usize, usize)>,
    pub out: Option<PathBuf>,
}

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

fn ok(json: Value, text: String) -> Result<Outcome> {
    Ok(Outcome { json, text, code: 0 })
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FdfaOp {
    Complement,
    Intersect,
    Union,
    Empty,
    Universal,
    Contains,
    Equiv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BwKind {
    Dba,
    Dca,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Document> {
    doc::parse_document(&read(path)?)
}

fn load_automaton(path: &Path) -> Result<OmegaAutomaton> {
    match load(path)? {
        Document::Automaton(m) => Ok(m),
        Document::Fdfa(..) => Err(Error::Input(format!("{} is an FDFA, expected an automaton", path.display()))),
    }
}

fn load_fdfa(path: &Path) -> Result<Fdfa> {
    match load(path)? {
        Document::Fdfa(f, _) => Ok(f),
        Document::Automaton(_) => Err(Error::Input(format!("{} is an automaton, expected an FDFA", path.display()))),
    }
}

fn load_upword(path: &Path, alphabet: &Alphabet) -> Result<UpWord> {
    let d: UpWordDoc =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("invalid upword document: {e}")))?;
    doc::upword_from_doc(alphabet, &d)
}

fn word_json(alphabet: &Alphabet, w: &UpWord) -> Value {
    serde_json::to_value(doc::upword_to_doc(alphabet, w)).expect("upword serializes")
}

/// Puts a produced document either into `--out` or into the stdout object under `key`.
fn emit(env: &Env, mut json: Value, key: &str, document: Value) -> Result<Value> {
    match &env.out {
        Some(path) => {
            write(path, &doc::to_json(&document))?;
            json[key] = json!({ "written": path.display().to_string() });
        }
        None => json[key] = document,
    }
    Ok(json)
}

fn upword_arg(alphabet: &Alphabet, u: &str, v: Option<&str>, file: Option<&Path>) -> Result<UpWord> {
    match file {
        Some(p) => load_upword(p, alphabet),
        None => UpWord::new(alphabet.parse_word(u)?, alphabet.parse_word(v.unwrap_or(""))?),
    }
}

pub fn wagner(env: &Env, file: &Path) -> Result<Outcome> {
    let m = load_automaton(file)?;
    let w = inclusion_measures(&m, &env.limits)?;
    let c = w.class();
    ok(
        json!({
            "m_plus": w.m_plus,
            "m_minus": w.m_minus,
            "class": { "k": c.k, "polarity": c.polarity.name() },
        }),
        format!("m+ = {}, m- = {}, class {c}", w.m_plus, w.m_minus),
    )
}

pub fn diameter(env: &Env, file: &Path) -> Result<Outcome> {
    let f = match load(file)? {
        Document::Fdfa(f, _) => f,
        Document::Automaton(m) => periodic_fdfa(&m, &env.limits)?,
    };
    let d = fdfa_diameter(&f, &env.limits)?;
    ok(
        json!({ "d_plus": d.d_plus, "d_minus": d.d_minus }),
        format!("d+ = {}, d- = {}", d.d_plus, d.d_minus),
    )
}

fn color_value(c: Color) -> Value {
    match c.value() {
        Some(v) => json!(v),
        None => json!("-inf"),
    }
}

pub fn colorful(env: &Env, file: &Path, dot_path: Option<&Path>, u: Option<&str>, v: Option<&str>) -> Result<Outcome> {
    let m = load_automaton(file)?;
    let ctx = ColorContext::new(&m, &env.limits)?;
    let cf = build_colorful_fdfa(&ctx)?;
    let f = cf.fdfa();
    let colors: Vec<Vec<u32>> = (0..f.leading().state_count()).map(|q| cf.colors(q).to_vec()).collect();
    let sizes: Vec<usize> = f.progress_all().iter().map(|p| p.state_count()).collect();
    let mut json = json!({
        "leading_states": f.leading().state_count(),
        "progress_states": sizes,
        "colors": colors,
    });
    let mut text = format!("colorful FDFA: {} leading states, progress sizes {sizes:?}, colors {colors:?}", sizes.len());
    if let Some(v) = v {
        let al = m.alphabet();
        let (u, v) = (al.parse_word(u.unwrap_or(""))?, al.parse_word(v)?);
        let c = cf.color_of(&u, &v);
        json["color"] = json!(c);
        text.push_str(&format!("; color of the query: {c}"));
    }
    if let Some(p) = dot_path {
        write(p, &dot::fdfa_dot(f, Some(&colors)))?;
    }
    let document = serde_json::to_value(doc::fdfa_to_doc(f, Some(&colors))).expect("document serializes");
    ok(emit(env, json, "fdfa", document)?, text)
}

pub fn color(env: &Env, file: &Path, u: &str, v: Option<&str>, upword: Option<&Path>, infinite: bool) -> Result<Outcome> {
    let m = load_automaton(file)?;
    let al = m.alphabet();
    let w = upword_arg(al, u, v, upword)?;
    let ctx = ColorContext::new(&m, &env.limits)?;
    let shown = word_json(al, &w);
    if infinite || upword.is_some() {
        let c = ctx.infinite_color(&w);
        ok(
            json!({ "word": shown, "infinite_color": c, "member": c % 2 == 0 }),
            format!("infinite color of {}: {c}", w.display(al)),
        )
    } else {
        let c = ctx.finite_color(&w.spoke, &w.cycle);
        let clamped = ctx.finite_color_clamped(&w.spoke, &w.cycle);
        ok(
            json!({ "word": shown, "color": color_value(c), "clamped": clamped }),
            format!("color of {}: {c} (clamped {clamped})", w.display(al)),
        )
    }
}

/// Both operands in the stronger of their modes.
fn aligned(a: &Fdfa, b: &Fdfa) -> (Fdfa, Fdfa) {
    let m: AcceptanceMode = a.mode().max(b.mode());
    (a.with_mode(m), b.with_mode(m))
}

pub fn fdfa_ops(env: &Env, op: FdfaOp, files: &[PathBuf]) -> Result<Outcome> {
    let arity = match op {
        FdfaOp::Complement | FdfaOp::Empty | FdfaOp::Universal => 1,
        _ => 2,
    };
    if files.len() != arity {
        return Err(Error::Input(format!("this operation takes {arity} FDFA file(s), got {}", files.len())));
    }
    let fs = files.iter().map(|p| load_fdfa(p)).collect::<Result<Vec<_>>>()?;
    let al = fs[0].alphabet().clone();
    let produced = match op {
        FdfaOp::Complement => Some(fs[0].complement()),
        FdfaOp::Intersect => {
            let (a, b) = aligned(&fs[0], &fs[1]);
            Some(a.intersect(&b)?)
        }
        FdfaOp::Union => {
            let (a, b) = aligned(&fs[0], &fs[1]);
            Some(a.union(&b)?)
        }
        _ => None,
    };
    if let Some(f) = produced {
        let document = serde_json::to_value(doc::fdfa_to_doc(&f, None)).expect("document serializes");
        let sizes: Vec<usize> = f.progress_all().iter().map(|p| p.state_count()).collect();
        let json = json!({ "leading_states": f.leading().state_count(), "progress_states": sizes });
        return ok(emit(env, json, "fdfa", document)?, format!("result FDFA: progress sizes {sizes:?}"));
    }
    let (name, witness) = match op {
        FdfaOp::Empty => ("empty", fs[0].emptiness_witness()),
        FdfaOp::Universal => ("universal", fs[0].universality_counterexample()),
        FdfaOp::Contains => ("contains", fs[0].containment_counterexample(&fs[1])?),
        _ => ("equivalent", fs[0].equivalence_counterexample(&fs[1])?),
    };
    let holds = witness.is_none();
    let mut json = json!({ name: holds });
    let mut text = format!("{name}: {holds}");
    if let Some(w) = witness {
        json["witness"] = word_json(&al, &w);
        text.push_str(&format!(", witness {}", w.display(&al)));
    }
    Ok(Outcome { json, text, code: if holds { 0 } else { 1 } })
}

pub fn accepts(env: &Env, file: &Path, u: &str, v: Option<&str>, upword: Option<&Path>) -> Result<Outcome> {
    let _ = env;
    match load(file)? {
        Document::Automaton(m) => {
            let w = upword_arg(m.alphabet(), u, v, upword)?;
            let a = m.accepts_up(&w);
            ok(
                json!({ "word": word_json(m.alphabet(), &w), "accepted": a }),
                format!("{}: {}", w.display(m.alphabet()), if a { "accepted" } else { "rejected" }),
            )
        }
        Document::Fdfa(f, _) => {
            let al = f.alphabet().clone();
            let w = upword_arg(&al, u, v, upword)?;
            let d = f.normalize(&w, f.mode().kind());
            let a = f.accepts(&w);
            ok(
                json!({ "word": word_json(&al, &w), "decomposition": word_json(&al, &d), "accepted": a }),
                format!(
                    "{}: {} via {}",
                    w.display(&al),
                    if a { "accepted" } else { "rejected" },
                    d.display(&al)
                ),
            )
        }
    }
}

pub fn bw(env: &Env, kind: BwKind, file: &Path) -> Result<Outcome> {
    let m = load_automaton(file)?;
    let ctx = ColorContext::new(&m, &env.limits)?;
    let r = match kind {
        BwKind::Dba => black_white_dba(&ctx)?,
        BwKind::Dca => black_white_dca(&ctx)?,
    };
    let document = serde_json::to_value(doc::automaton_to_doc(&r)).expect("document serializes");
    let json = json!({ "states": r.state_count(), "acceptance": r.acceptance().kind() });
    ok(emit(env, json, "automaton", document)?, format!("{} states, {} acceptance", r.state_count(), r.acceptance().kind()))
}

pub fn dot(env: &Env, file: &Path) -> Result<Outcome> {
    let text = match load(file)? {
        Document::Automaton(m) => dot::automaton_dot(&m),
        Document::Fdfa(f, c) => dot::fdfa_dot(&f, c.as_deref()),
    };
    if let Some(p) = &env.out {
        write(p, &text)?;
        return ok(json!({ "written": p.display().to_string() }), format!("wrote {}", p.display()));
    }
    ok(json!({ "dot": text }), text.trim_end().to_string())
}

fn report_json(r: &SuiteReport, replay: impl Fn(&omegacanon::checks::Violation) -> bool) -> Value {
    let al = fixtures::ab();
    json!({
        "subject": r.subject,
        "property": r.property,
        "param": r.param,
        "instances": r.instances,
        "violations": r.violations.iter().map(|v| json!({
            "witness": v.witness.iter().map(|w| al.format_word(w)).collect::<Vec<_>>(),
            "detail": v.detail,
            "replays": replay(v),
        })).collect::<Vec<_>>(),
    })
}

pub fn selftest(env: &Env, inject_unsaturated: bool) -> Result<Outcome> {
    let (max_u, max_v) = env.bounds.unwrap_or((2, 5));
    if max_u == 0 || max_v == 0 {
        return Err(Error::Input("selftest bounds must be at least 1,1".into()));
    }
    let bounds = Bounds { max_u, max_v, ..Bounds::default() };
    let mut failed = Vec::new();
    let mut total = 0;
    let mut lines = Vec::new();
    for (name, m) in fixtures::suite_languages() {
        let suite = LanguageSuite::new(name, &m, bounds, &env.limits)?;
        for r in suite.run() {
            total += 1;
            if !r.passed() {
                lines.push(r.to_string());
                failed.push(report_json(&r, |v| matches!(suite.replay(v), Ok(Some(_)))));
            }
        }
    }
    let mut subjects = default_fdfa_subjects(&env.limits)?;
    if inject_unsaturated {
        subjects.push(("unsaturated".into(), fixtures::unsaturated_fdfa()));
    }
    let suite = FdfaSuite::new(subjects, bounds);
    for r in suite.run()? {
        total += 1;
        if !r.passed() {
            lines.push(r.to_string());
            for v in &r.violations {
                lines.push(format!("    {}", v.describe(&fixtures::ab())));
            }
            failed.push(report_json(&r, |v| matches!(suite.replay(v), Ok(Some(_)))));
        }
    }
    let code = if failed.is_empty() { 0 } else { 1 };
    lines.push(format!("{} of {total} property reports passed", total - failed.len()));
    Ok(Outcome {
        json: json!({ "reports": total, "failed": failed.len(), "failures": failed }),
        text: lines.join("\n"),
        code,
    })
}

pub fn fixture(name: &str) -> Result<Outcome> {
    let automaton = match name {
        "inf-aa-fin-bb-dma" => Some(fixtures::inf_aa_fin_bb_dma()),
        "inf-aa-fin-bb-dpa" => Some(fixtures::inf_aa_fin_bb_dpa()),
        "inf-aa-dba" => Some(fixtures::inf_aa_dba()),
        "inf-aa-dpa" => Some(fixtures::inf_aa_dpa()),
        "fin-bb-dca" => Some(fixtures::fin_bb_dca()),
        "fin-a-dca" => Some(fixtures::fin_a_dca()),
        "inf-b-or-even-b-dpa" => Some(fixtures::inf_b_or_even_b_dpa()),
        "universal-dba" => Some(fixtures::universal_dba()),
        _ => None,
    };
    if let Some(m) = automaton {
        let v = serde_json::to_value(doc::automaton_to_doc(&m)).expect("document serializes");
        return ok(v, format!("fixture {name}"));
    }
    let (f, colors) = match name {
        "colorful-inf-aa-fin-bb" => {
            let (f, c) = fixtures::colorful_fdfa_inf_aa_fin_bb();
            (f, Some(vec![c]))
        }
        "unsaturated" => (fixtures::unsaturated_fdfa(), None),
        "inf-aa-fdfa" => (fixtures::inf_aa_fdfa(), None),
        "universal-fdfa" => (fixtures::universal_fdfa(), None),
        _ => {
            let f = fixtures::suite_fdfas()
                .into_iter()
                .find(|(n, _)| *n == name)
                .ok_or_else(|| Error::Input(format!("unknown fixture {name:?}")))?
                .1;
            (f, None)
        }
    };
    let v = serde_json::to_value(doc::fdfa_to_doc(&f, colors.as_deref())).expect("document serializes");
    ok(v, format!("fixture {name}"))
}

