//! Browser bindings. Every export takes plain strings and numbers and returns a JSON string;
//! failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use spcoad::exact_linalg::{parse_rational, render_rational};
use spcoad::report::{compactness_name, run, vec_json, Command, OutputFormat, RunConfig};
use spcoad::roots_weyl::{analyze, weyl_reflection};
use spcoad::symplectic_lie::{build_sp_algebra, build_special_f};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest rank the page accepts.
pub const MAX_N: usize = 3;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn split(csv: &str) -> Vec<&str> {
    csv.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// Orbit report for `n` and comma-separated `λ`, with a handful of random checks.
#[wasm_bindgen]
pub fn orbit_report(n: usize, lambdas: &str, seed: u32) -> String {
    if n > MAX_N {
        return error(format!("n is limited to {MAX_N} in the browser"));
    }
    let mut config = RunConfig::new(Command::Orbit, n).with_lambdas(&split(lambdas));
    config.seed = seed.into();
    config.samples = 5;
    config.format = OutputFormat::Json;
    match run(&config) {
        Ok(doc) => {
            let verdicts: Vec<Value> = doc
                .verdicts
                .iter()
                .map(|v| json!({ "name": v.name, "pass": v.pass, "detail": v.detail }))
                .collect();
            json!({
                "stabilizer_dim": doc.results["stabilizer"]["dim"],
                "orbit_dim": doc.results["orbit_dim"],
                "kernel_dim": doc.results["kernel_dim"],
                "verdicts": verdicts,
            })
            .to_string()
        }
        Err(e) => error(e),
    }
}

/// Roots with their coordinates, multiplicities, compactness and sign, plus the half-sums.
#[wasm_bindgen]
pub fn root_system(n: usize, lambdas: &str) -> String {
    if n > MAX_N {
        return error(format!("n is limited to {MAX_N} in the browser"));
    }
    let parsed: Option<Vec<_>> = split(lambdas).into_iter().map(parse_rational).collect();
    let Some(parsed) = parsed else {
        return error("lambdas must be rationals p/q");
    };
    let f = match build_special_f(n, &parsed) {
        Ok(f) => f,
        Err(e) => return error(e),
    };
    let alg = build_sp_algebra(n);
    let report = match analyze(&alg, &f) {
        Ok(r) => r,
        Err(e) => return error(e),
    };
    let positive = report.positive.clone().unwrap_or_default();
    let roots: Vec<Value> = report
        .roots
        .iter()
        .zip(&positive)
        .map(|(root, p)| {
            json!({
                "weight": vec_json(&root.coordinates()),
                "multiplicity": root.multiplicity(),
                "compactness": compactness_name(root.compactness),
                "positive": p,
            })
        })
        .collect();
    json!({
        "r": parsed.len(),
        "zero_space_dim": report.zero_space_dim(),
        "roots": roots,
        "d_delta_f": report.half_sums.as_ref().map(|h| vec_json(&h.d_delta_f)),
    })
    .to_string()
}

/// `s_α(β)` for comma-separated rational vectors.
#[wasm_bindgen]
pub fn reflect(alpha: &str, beta: &str) -> String {
    let parse = |s: &str| {
        split(s)
            .into_iter()
            .map(parse_rational)
            .collect::<Option<Vec<_>>>()
    };
    let (Some(a), Some(b)) = (parse(alpha), parse(beta)) else {
        return error("vectors must be rationals p/q");
    };
    match weyl_reflection(&a, &b) {
        Ok(v) => json!({ "image": v.iter().map(render_rational).collect::<Vec<_>>() }).to_string(),
        Err(e) => error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn orbit_numbers() {
        let v = parse(&orbit_report(2, "1, 2", 0));
        assert_eq!(v["stabilizer_dim"], 2);
        assert_eq!(v["orbit_dim"], 8);
        assert!(v["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .all(|x| x["pass"] == true));
        assert!(parse(&orbit_report(2, "1,1", 0))["error"]
            .as_str()
            .unwrap()
            .contains("--lambdas"));
        assert!(parse(&orbit_report(9, "", 0)).get("error").is_some());
    }

    #[test]
    fn roots_for_diagram() {
        let v = parse(&root_system(2, "1,2"));
        assert_eq!(v["roots"].as_array().unwrap().len(), 8);
        assert_eq!(v["d_delta_f"], json!(["1", "2"]));
        let v = parse(&root_system(2, "1"));
        assert!(v["d_delta_f"].is_null());
        assert!(parse(&root_system(2, "a")).get("error").is_some());
    }

    #[test]
    fn reflection() {
        assert_eq!(parse(&reflect("1,-1", "1,0"))["image"], json!(["0", "1"]));
        assert!(parse(&reflect("0,0", "1,0")).get("error").is_some());
    }
}
