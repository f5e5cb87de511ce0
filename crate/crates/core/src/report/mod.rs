//! Runs a configured computation and assembles a report with exact rational output.

mod commands;
mod config;
mod document;
mod suites;

pub use commands::{algebra_dimension_oracle, compactness_name, hyperoctahedral_order};
pub use config::{
    validate, Command, ConfigEcho, OutputFormat, RunConfig, UsageError, ValidConfig, WEYL_BOUND,
};
pub use document::{
    complex_matrix_json, matrix_json, q_json, vec_json, ReportDocument, Verdict, VERSION,
};

/// Validates and runs `config`. Usage errors map to exit status 2; otherwise the report's
/// [`ReportDocument::exit_code`] applies.
pub fn run(config: &RunConfig) -> Result<ReportDocument, UsageError> {
    let cfg = validate(config)?;
    let (results, verdicts) = match config.command {
        Command::Algebra => commands::algebra_section(&cfg),
        Command::Orbit => commands::orbit_section(&cfg),
        Command::Roots => commands::roots_section(&cfg),
        Command::Polarize => commands::polarize_section(&cfg),
        Command::Verify => suites::verify_section(&cfg),
    };
    Ok(ReportDocument {
        config: ConfigEcho::from(&cfg),
        results,
        verdicts,
        version: VERSION,
    })
}

/// Renders in the configured format.
pub fn render(doc: &ReportDocument) -> String {
    match doc.config.format {
        OutputFormat::Json => doc.to_json(),
        OutputFormat::Text => doc.to_text(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(c: RunConfig) -> ReportDocument {
        let doc = run(&c).unwrap();
        assert!(doc.all_pass(), "{}", doc.to_text());
        doc
    }

    #[test]
    fn orbit_rank_two() {
        let doc = run_ok(RunConfig::new(Command::Orbit, 2).with_lambdas(&["1", "2"]));
        assert_eq!(doc.results["stabilizer"]["dim"], 2);
        assert_eq!(doc.results["orbit_dim"], 8);
    }

    #[test]
    fn zero_functional_orbit() {
        let doc = run_ok(RunConfig::new(Command::Orbit, 2));
        assert_eq!(doc.results["orbit_dim"], 0);
    }

    #[test]
    fn algebra_and_roots() {
        let doc = run_ok(RunConfig::new(Command::Algebra, 2));
        assert_eq!(doc.results["dim"], 10);
        let doc = run_ok(RunConfig::new(Command::Roots, 2).with_lambdas(&["1", "2"]));
        assert_eq!(
            doc.results["half_sums"]["d_delta_f"],
            serde_json::json!(["1", "2"])
        );
        assert_eq!(doc.results["weyl_group"]["order"], 8);
        let doc = run_ok(RunConfig::new(Command::Roots, 2).with_lambdas(&["1"]));
        assert!(doc.results["half_sums"].is_null());
        run_ok(RunConfig::new(Command::Roots, 1));
    }

    #[test]
    fn polarize_partial_torus() {
        let mut c = RunConfig::new(Command::Polarize, 2).with_lambdas(&["3/2"]);
        c.samples = 5;
        let doc = run_ok(c);
        assert_eq!(doc.results["polarization"]["mode"], "wholesale");
        assert_eq!(
            doc.results["radical"]["restriction"],
            serde_json::json!(["-3"])
        );
    }

    #[test]
    fn verify_small_is_deterministic() {
        let mut c = RunConfig::new(Command::Verify, 2);
        c.samples = 4;
        c.seed = 7;
        c.format = OutputFormat::Json;
        let a = render(&run_ok(c.clone()));
        let b = render(&run_ok(c));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, vec!["config", "results", "verdicts", "version"]);
    }

    #[test]
    fn usage_errors() {
        let e = run(&RunConfig::new(Command::Orbit, 2).with_lambdas(&["1", "1"])).unwrap_err();
        assert_eq!(e.flag, "--lambdas");
    }

    #[test]
    fn no_floats_in_output() {
        let mut c = RunConfig::new(Command::Polarize, 2).with_lambdas(&["1", "5/3"]);
        c.samples = 3;
        c.format = OutputFormat::Json;
        let s = render(&run_ok(c));
        fn walk(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(x) => x.is_u64() || x.is_i64(),
                serde_json::Value::Array(a) => a.iter().all(walk),
                serde_json::Value::Object(m) => m.values().all(walk),
                _ => true,
            }
        }
        assert!(walk(&serde_json::from_str(&s).unwrap()));
    }
}
