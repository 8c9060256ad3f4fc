//! Audit record of the rewrites applied during a conversion.

use serde::Serialize;

use crate::braid::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: String,
    pub params: Vec<(String, i64)>,
    /// `strands/crossings` of the word produced by this step.
    pub word: String,
}

impl TraceStep {
    pub fn new(rule: &str, params: &[(&str, i64)], word: &BraidWord) -> Self {
        TraceStep {
            rule: rule.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            word: format!("{}/{}", word.strands(), word.crossing_count()),
        }
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConversionTrace {
    pub steps: Vec<TraceStep>,
    /// Index of the partial-sum scan that stopped the T to V conversion.
    pub i_bar: Option<usize>,
}

impl ConversionTrace {
    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}
