//! Browser bindings. Every exported function takes and returns JSON text so
//! the page can stay plain JavaScript.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use twohead_core::analyze::{
    check_backward_deterministic, check_complete, check_deterministic, check_one_limited, check_reversible,
    classify_states, graph_analysis,
};
use twohead_core::corpus;
use twohead_core::format::AutomatonDocument;
use twohead_core::simulate::{accepts, enumerate_language, run_deterministic};
use twohead_core::words::render;
use twohead_core::{parse_automaton, serialize_automaton, Automaton};

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

fn parse(text: &str) -> Result<Automaton, String> {
    parse_automaton(text).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Step {
    state: String,
    consumed_left: String,
    window: String,
    consumed_right: String,
    read: Option<String>,
}

pub fn corpus_value() -> Value {
    json!(corpus::all()
        .iter()
        .map(|e| json!({ "name": e.name, "language": e.predicate.name(), "note": e.note }))
        .collect::<Vec<_>>())
}

pub fn builtin_value(name: &str) -> Result<Value, String> {
    let e = corpus::builtin(name).map_err(|e| e.to_string())?;
    Ok(json!({
        "text": serialize_automaton(&e.automaton),
        "automaton": AutomatonDocument::from_automaton(&e.automaton),
    }))
}

pub fn trace_value(automaton: &str, word: &str) -> Result<Value, String> {
    let a = parse(automaton)?;
    let w: Vec<char> = word.chars().collect();
    if let Some(c) = w.iter().find(|c| !a.alphabet().contains(c)) {
        return Err(format!("letter `{c}` is not in the alphabet"));
    }
    Ok(match run_deterministic(&a, &w) {
        Ok(t) => {
            let steps: Vec<Step> = t
                .steps
                .iter()
                .map(|s| Step {
                    state: a.state_name(s.config.state).to_string(),
                    consumed_left: render(&w[..s.config.left]),
                    window: render(s.config.window(&w)),
                    consumed_right: render(&w[s.config.right..]),
                    read: s.transition.map(|t| t.read.to_string()),
                })
                .collect();
            json!({ "verdict": t.verdict.label(), "steps": steps })
        }
        Err(_) => json!({
            "verdict": if accepts(&a, &w) { "accepted" } else { "rejected" },
            "steps": null,
            "note": "nondeterministic machine: membership only",
        }),
    })
}

pub fn analyze_value(automaton: &str) -> Result<Value, String> {
    let a = parse(automaton)?;
    let mut reports = vec![
        check_deterministic(&a).to_document(),
        check_backward_deterministic(&a).to_document(),
        check_reversible(&a).to_document(),
        check_one_limited(&a).to_document(),
    ];
    let mut skipped = Vec::new();
    match check_complete(&a) {
        Ok(r) => reports.push(r.to_document()),
        Err(e) => skipped.push(e.to_string()),
    }
    match classify_states(&a) {
        Ok(c) => reports.push(c.report.to_document()),
        Err(e) => skipped.push(e.to_string()),
    }
    reports.push(graph_analysis(&a).report.to_document());
    Ok(json!({ "reports": reports, "not_applicable": skipped }))
}

pub fn enumerate_value(automaton: &str, max_len: usize) -> Result<Value, String> {
    let a = parse(automaton)?;
    if max_len > 14 {
        return Err("word bound above 14 is too slow for the page".into());
    }
    let words: Vec<String> = enumerate_language(&a, max_len)
        .iter()
        .map(|w| render(w))
        .collect();
    Ok(json!(words))
}

#[wasm_bindgen]
pub fn corpus_entries() -> String {
    corpus_value().to_string()
}

#[wasm_bindgen]
pub fn load_builtin(name: &str) -> Result<String, JsValue> {
    to_js(builtin_value(name))
}

#[wasm_bindgen]
pub fn trace(automaton: &str, word: &str) -> Result<String, JsValue> {
    to_js(trace_value(automaton, word))
}

#[wasm_bindgen]
pub fn analyze(automaton: &str) -> Result<String, JsValue> {
    to_js(analyze_value(automaton))
}

#[wasm_bindgen]
pub fn enumerate(automaton: &str, max_len: usize) -> Result<String, JsValue> {
    to_js(enumerate_value(automaton, max_len))
}
