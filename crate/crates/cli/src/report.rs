//! JSON documents for the single-spec commands.

use braidforge_core::classify::{classify_t, classify_v};
use braidforge_core::invariants::{profile, Invariant, InvariantProfile};
use braidforge_core::{
    parse_spec, t_to_v, v_to_t, BraidWord, ConversionTrace, GeometricVerdict, LinkSpec, TLinkSpec, VLinkSpec,
};
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};

/// Everything the single-spec commands report about one input.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub input: String,
    pub spec: LinkSpec,
    pub v_form: VLinkSpec,
    pub t_forms: (TLinkSpec, TLinkSpec),
    pub minimal: BraidWord,
    pub trace: ConversionTrace,
    pub verdict: GeometricVerdict,
}

pub fn analyze(text: &str) -> CliResult<Analysis> {
    let spec = parse_spec(text)?;
    let (v_form, trace, mut verdict) = match &spec {
        LinkSpec::T(t) => {
            let (v, trace) = t_to_v(t)?;
            (v, trace, classify_t(t)?)
        }
        LinkSpec::V(v) => {
            let (first, _) = v_to_t(v)?;
            let (_, trace) = t_to_v(&first)?;
            (v.clone(), trace, classify_v(v)?)
        }
    };
    let t_forms = v_to_t(&v_form)?;
    let minimal = match &spec {
        LinkSpec::T(_) => v_form.braid(),
        LinkSpec::V(_) => t_to_v(&t_forms.0)?.0.braid(),
    };
    verdict.trace = None;
    Ok(Analysis { input: text.to_string(), spec, v_form, t_forms, minimal, trace, verdict })
}

impl Analysis {
    pub fn profile(&self, config: &RunConfig) -> InvariantProfile {
        profile(&self.minimal, config.jones_limit)
    }

    /// The shared document emitted by `convert`, `classify`, `profile` and
    /// `verify`.
    pub fn document(&self, command: &str, config: &RunConfig) -> CliResult<Value> {
        Ok(json!({
            "schema": 1,
            "command": command,
            "input": self.input,
            "normalized": self.spec.to_string(),
            "v_form": self.v_form.to_string(),
            "t_forms": [self.t_forms.0.to_string(), self.t_forms.1.to_string()],
            "minimal_braid": self.minimal,
            "verdict": self.verdict,
            "profile": self.profile(config),
            "trace": self.trace.steps,
            "i_bar": self.trace.i_bar,
        }))
    }

    /// Every braid presentation of the link that `verify` compares, named.
    pub fn presentations(&self, seed: u64) -> Vec<(String, BraidWord)> {
        let input = self.spec.braid();
        let mut out = vec![("input".to_string(), input.clone()), ("minimal".to_string(), self.minimal.clone())];
        out.push((format!("t_form_1 {}", self.t_forms.0), self.t_forms.0.braid()));
        out.push((format!("t_form_2 {}", self.t_forms.1), self.t_forms.1.braid()));
        if let LinkSpec::T(_) = self.spec {
            out.push((format!("v_form {}", self.v_form), self.v_form.braid()));
        }
        if !input.is_empty() {
            let offset = (seed % input.crossing_count() as u64) as usize;
            let (head, tail) = input.letters().split_at(offset);
            let letters = tail.iter().chain(head).copied().collect();
            let conjugate = BraidWord::new(input.strands(), letters).expect("rotation keeps letters in range");
            out.push((format!("conjugate by {offset}"), conjugate));
        }
        let n = self.minimal.strands();
        let mut letters = self.minimal.letters().to_vec();
        letters.push(n);
        let stabilized = BraidWord::new(n + 1, letters).expect("stabilization letter is in range");
        out.push(("stabilized minimal".to_string(), stabilized));
        out
    }
}

pub fn cmd_convert(text: &str, config: &RunConfig) -> CliResult<Value> {
    analyze(text)?.document("convert", config)
}

pub fn cmd_classify(text: &str, config: &RunConfig) -> CliResult<Value> {
    analyze(text)?.document("classify", config)
}

pub fn cmd_profile(text: &str, config: &RunConfig) -> CliResult<Value> {
    analyze(text)?.document("profile", config)
}

/// The shared document plus a `verify` section. Per invariant, `true`
/// means every presentation agrees with the input, `null` that the
/// invariant was skipped for some pair (Jones above the crossing limit).
pub fn cmd_verify(text: &str, config: &RunConfig) -> CliResult<Value> {
    let analysis = analyze(text)?;
    let mut doc = analysis.document("verify", config)?;
    let presentations = analysis.presentations(config.seed);
    let profiles: Vec<InvariantProfile> =
        presentations.iter().map(|(_, w)| profile(w, config.jones_limit)).collect();

    let mut verdicts: Vec<(Invariant, Option<bool>)> = Invariant::ALL.iter().map(|&inv| (inv, Some(true))).collect();
    let mut mismatches = Vec::new();
    for ((name, _), other) in presentations.iter().zip(&profiles).skip(1) {
        for ((inv, agreed), slot) in profiles[0].agreement(other).into_iter().zip(verdicts.iter_mut()) {
            match agreed {
                Some(false) => {
                    mismatches.push(format!("{inv} differs for {name}"));
                    slot.1 = Some(false);
                }
                None if slot.1 == Some(true) => slot.1 = None,
                _ => {}
            }
        }
    }

    let invariants: Map<String, Value> = verdicts.iter().map(|(inv, v)| (inv.name().to_string(), json!(v))).collect();
    let listed: Vec<Value> = presentations
        .iter()
        .map(|(name, w)| json!({ "name": name, "strands": w.strands(), "crossings": w.crossing_count() }))
        .collect();
    doc["verify"] = json!({
        "presentations": listed,
        "invariants": invariants,
        "consistent": mismatches.is_empty(),
        "mismatches": mismatches,
    });
    Ok(doc)
}

/// The error `verify` exits with after printing its document.
pub fn verify_status(doc: &Value) -> CliResult<()> {
    match doc["verify"]["mismatches"].as_array() {
        Some(list) if !list.is_empty() => {
            let joined: Vec<&str> = list.iter().filter_map(Value::as_str).collect();
            Err(CliError::Mismatch(joined.join("; ")))
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_input_fields() {
        let a = analyze("T[(2,2),(5,3)]").unwrap();
        assert_eq!(a.v_form.to_string(), "V[(2,~2);;(3,5)]");
        assert_eq!(a.minimal.strands(), 3);
        assert_eq!(a.trace.steps.len(), 1);
        assert!(a.verdict.trace.is_none());
    }

    #[test]
    fn v_input_keeps_its_form() {
        let a = analyze("V[(2,~2),(3,~2);(3,2);(5,5)]").unwrap();
        assert_eq!(a.v_form.to_string(), "V[(2,~2),(3,~2);(3,2);(5,5)]");
        assert_eq!(a.t_forms.0.to_string(), "T[(3,2),(5,2),(7,1),(9,2)]");
        assert!(a.minimal.strands() <= 5);
    }

    #[test]
    fn presentations_are_named_and_seeded() {
        let a = analyze("T[(2,3)]").unwrap();
        let names: Vec<String> = a.presentations(4).into_iter().map(|(n, _)| n).collect();
        assert_eq!(names[0], "input");
        assert!(names.contains(&"conjugate by 1".to_string()));
        assert!(names.contains(&"stabilized minimal".to_string()));
    }

    #[test]
    fn verify_flags_nothing_on_a_torus_knot() {
        let doc = cmd_verify("T[(3,4)]", &RunConfig::default()).unwrap();
        assert_eq!(doc["verify"]["consistent"], json!(true));
        assert_eq!(doc["verify"]["invariants"]["jones"], json!(true));
        assert!(verify_status(&doc).is_ok());
    }

    #[test]
    fn verify_status_reports_mismatches() {
        let doc = json!({ "verify": { "mismatches": ["alexander differs for minimal"] } });
        let err = verify_status(&doc).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}
