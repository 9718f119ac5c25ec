//! Bindings for the static demo page in `www/`. Every export takes plain
//! strings and returns a JSON string, so the same functions run natively in
//! tests. Failures come back as `{"error": ..., "reason": ...}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use letterplace::determinantal::{build_matrix, i_sequence, ly_ideal, terrace, verify_main, LSequence};
use letterplace::groebner::Budget;
use letterplace::homset::HomIdealJson;
use letterplace::letterplace::{coletterplace_ideal, letterplace_ideal, support, support_vars};
use letterplace::poset::PosetJson;
use letterplace::pstable::{lambda_bar, lambda_bar_inv, longest_b_chain};
use letterplace::quotient::FiberMap;
use letterplace::{HomIdeal, Poset};

// keeps the page responsive; the CLI has the full budget
const DEMO_CAP: usize = 200_000;
const DEMO_PAIRS: usize = 20_000;

fn fail(reason: &str, error: impl ToString) -> String {
    json!({ "error": error.to_string(), "reason": reason }).to_string()
}

fn core_fail(e: letterplace::Error) -> String {
    fail(e.reason(), e)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| fail("input", format!("malformed JSON: {e}")))
}

fn numbers(text: &str) -> Result<Vec<u32>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| fail("input", format!("`{t}` is not a natural number"))))
        .collect()
}

/// Letterplace and co-letterplace ideals of a poset ideal given as JSON,
/// their duality, and the projection to `k[x_P]`.
#[wasm_bindgen]
pub fn letterplace_demo(ideal_json: &str) -> String {
    letterplace_inner(ideal_json).unwrap_or_else(|e| e)
}

fn letterplace_inner(ideal_json: &str) -> Result<String, String> {
    let spec: HomIdealJson = parse(ideal_json)?;
    let j = HomIdeal::try_from(spec).map_err(core_fail)?;
    let labels = j.poset().labels();
    let l = letterplace_ideal(&j, DEMO_CAP).map_err(core_fail)?.ideal;
    let co = coletterplace_ideal(&j, DEMO_CAP).map_err(core_fail)?.ideal;
    let supp = support(&j, DEMO_CAP).map_err(core_fail)?;
    let vars = support_vars(&supp);
    let dual = co.with_universe(vars.iter().copied()).alexander_dual().map_err(core_fail)?;
    let source: Vec<(usize, u32)> = supp.into_iter().collect();
    let p1 = FiberMap::p1(source);
    let projected = p1.project_ideal(&l).map_err(core_fail)?;
    let regular = p1.regular_quotient_check(&l).map_err(core_fail)?;
    Ok(json!({
        "letterplace": l.render("x", labels),
        "coletterplace": co.render("x", labels),
        "dual_holds": dual.gens() == l.gens(),
        "support_size": vars.len(),
        "projection": projected.render("x", labels),
        "projection_regular": regular,
    })
    .to_string())
}

/// `Lambda-bar` of an isotone map, the inverse image of the result, and the
/// longest weighted chain ending at each element.
#[wasm_bindgen]
pub fn lambda_bar_demo(poset_json: &str, values: &str) -> String {
    lambda_inner(poset_json, values).unwrap_or_else(|e| e)
}

fn lambda_inner(poset_json: &str, values: &str) -> Result<String, String> {
    let spec: PosetJson = parse(poset_json)?;
    let p = Poset::try_from(spec).map_err(core_fail)?;
    let phi = numbers(values)?;
    let m = lambda_bar(&p, &phi).map_err(core_fail)?;
    let back = lambda_bar_inv(&p, &m).map_err(core_fail)?;
    let chains: Vec<Value> = (0..p.n())
        .map(|b| {
            let info = longest_b_chain(&p, &m, b).map_err(core_fail)?;
            Ok(json!({ "element": p.label(b), "length": info.length }))
        })
        .collect::<Result<_, String>>()?;
    Ok(json!({
        "monomial": m.render("x", p.labels()),
        "inverse": back.values(),
        "round_trip": back.values() == phi.as_slice(),
        "chains": chains,
    })
    .to_string())
}

/// The staircase matrix of `l`, its terrace and i-sequences, `L^Y(i)`, and a
/// Gröbner-basis check of the initial ideal under a demo budget.
#[wasm_bindgen]
pub fn det_demo(l: &str, a: u32) -> String {
    det_inner(l, a).unwrap_or_else(|e| e)
}

fn det_inner(l: &str, a: u32) -> Result<String, String> {
    let seq = LSequence::new(a, numbers(l)?).map_err(core_fail)?;
    let t = terrace(&seq);
    let i = i_sequence(&t).map_err(core_fail)?;
    let budget = Budget {
        max_pairs: DEMO_PAIRS,
        max_degree: None,
    };
    let report = verify_main(&seq, budget).map_err(core_fail)?;
    Ok(json!({
        "matrix": build_matrix(&seq).render(),
        "terrace": t.vals(),
        "i_sequence": i.vals(),
        "ly_ideal": ly_ideal(&i).render("y", None),
        "initial_ideal": report.raw.initial_ideal,
        "gb_size": report.raw.gb_size,
        "codimension": report.raw.codim.initial_height,
        "ok": report.ok,
    })
    .to_string())
}
