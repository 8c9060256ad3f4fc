//! Bundled invariants of a closure and the comparison between two words.
//!
//! Invariants can refute an equivalence but never prove one, so a
//! positive answer is reported as "consistent with equivalence".

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::invariants::alexander::alexander;
use crate::invariants::jones::kauffman_jones;
use crate::invariants::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub components: usize,
    pub euler_char: i64,
    pub alexander: LaurentPoly<i64>,
    /// In `t^{1/2}` with doubled exponents; absent above the crossing limit.
    pub jones: Option<LaurentPoly<i64>>,
    pub crossings: usize,
    pub strands: usize,
}

/// The link invariants compared by [`consistent`], in comparison order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Components,
    Alexander,
    EulerChar,
    Jones,
}

impl Invariant {
    pub const ALL: [Invariant; 4] =
        [Invariant::Components, Invariant::Alexander, Invariant::EulerChar, Invariant::Jones];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Components => "components",
            Invariant::EulerChar => "euler_char",
            Invariant::Alexander => "alexander",
            Invariant::Jones => "jones",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    ConsistentWithEquivalence,
    DistinguishedBy(Invariant),
}

pub fn profile(w: &BraidWord, jones_limit: usize) -> InvariantProfile {
    InvariantProfile {
        components: w.components(),
        euler_char: w.euler_char(),
        alexander: alexander(w),
        jones: kauffman_jones(w, jones_limit),
        crossings: w.crossing_count(),
        strands: w.strands(),
    }
}

impl InvariantProfile {
    /// Per-invariant agreement. `None` means the invariant was not
    /// available on both sides.
    pub fn agreement(&self, other: &Self) -> Vec<(Invariant, Option<bool>)> {
        Invariant::ALL
            .iter()
            .map(|&inv| {
                let agrees = match inv {
                    Invariant::Components => Some(self.components == other.components),
                    Invariant::EulerChar => Some(self.euler_char == other.euler_char),
                    Invariant::Alexander => Some(self.alexander == other.alexander),
                    Invariant::Jones => match (&self.jones, &other.jones) {
                        (Some(a), Some(b)) => Some(a == b),
                        _ => None,
                    },
                };
                (inv, agrees)
            })
            .collect()
    }

    /// First invariant on which the two profiles differ.
    pub fn compare(&self, other: &Self) -> Consistency {
        self.agreement(other)
            .into_iter()
            .find(|(_, agrees)| *agrees == Some(false))
            .map_or(Consistency::ConsistentWithEquivalence, |(inv, _)| Consistency::DistinguishedBy(inv))
    }
}

/// Compare the closures of `a` and `b` on every available invariant.
pub fn consistent(a: &BraidWord, b: &BraidWord, jones_limit: usize) -> Consistency {
    profile(a, jones_limit).compare(&profile(b, jones_limit))
}
