//! Closure isotopies that trade a long torus tower for a shorter word.
//!
//! Each rewrite takes a braid `β` on `r` strands together with a tower
//! parameter pair `(p, q)` and emits the target word directly. The source
//! word, whose closure is the same link, is available from
//! [`Isotopy::source`] for checking.

use crate::braid::{ascending_run, descending_run, BraidWord};
use crate::error::{Error, Result};
use crate::trace::{ConversionTrace, TraceStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Isotopy {
    /// `β(σ_1…σ_{p-1})^q → (σ_{r-1}…σ_{r-q+1})^{p-r} β (σ_1…σ_{r-1})^q`, `0 < q ≤ r < p`.
    ShrinkAscending,
    /// `β(σ_{p-1}…σ_1)^q → β(σ_{r-q+1}…σ_{r-1})^{p-r}(σ_{r-1}…σ_1)^q`, `1 < q ≤ r < p`.
    ShrinkDescending,
    /// `β(σ_1…σ_{p-1})^q → (σ_{q-1}…σ_1)^{p-q} β (σ_1…σ_{q-1})^q`, `1 < r ≤ q < p`.
    ConjugateAscending,
    /// `β(σ_1…σ_{p-1})^q → β(σ_{q-1}…σ_1)^p`, `1 < r ≤ q < p`.
    AscendingToDescending,
    /// `β(σ_{p-1}…σ_1)^q → β(σ_1…σ_{q-1})^{p-q}(σ_{q-1}…σ_1)^q`, `1 < r ≤ q < p`.
    DescendingToMixed,
}

impl Isotopy {
    pub const ALL: [Isotopy; 5] = [
        Isotopy::ShrinkAscending,
        Isotopy::ShrinkDescending,
        Isotopy::ConjugateAscending,
        Isotopy::AscendingToDescending,
        Isotopy::DescendingToMixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Isotopy::ShrinkAscending => "shrink-ascending-tower",
            Isotopy::ShrinkDescending => "shrink-descending-tower",
            Isotopy::ConjugateAscending => "conjugate-ascending-tower",
            Isotopy::AscendingToDescending => "ascending-to-descending-tower",
            Isotopy::DescendingToMixed => "descending-to-mixed-tower",
        }
    }

    fn source_descends(self) -> bool {
        matches!(self, Isotopy::ShrinkDescending | Isotopy::DescendingToMixed)
    }

    /// Whether `(r, p, q)` satisfies the rewrite's hypotheses.
    pub fn admits(self, r: usize, p: usize, q: usize) -> bool {
        match self {
            Isotopy::ShrinkAscending => 0 < q && q <= r && r < p,
            Isotopy::ShrinkDescending => 1 < q && q <= r && r < p,
            _ => 1 < r && r <= q && q < p,
        }
    }

    fn check(self, beta: &BraidWord, p: usize, q: usize) -> Result<()> {
        let r = beta.strands();
        if self.admits(r, p, q) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{} does not apply to r={r}, p={p}, q={q}",
                self.name()
            )))
        }
    }

    /// The word `β·tower` on `p` strands whose closure the rewrite preserves.
    pub fn source(self, beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
        self.check(beta, p, q)?;
        let tower = if self.source_descends() {
            descending_run(p, p - 1, 1, q)
        } else {
            ascending_run(p, 1, p - 1, q)
        };
        beta.widen(p)?.concat(&tower)
    }

    pub fn apply(self, beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
        self.check(beta, p, q)?;
        let r = beta.strands();
        let parts = match self {
            Isotopy::ShrinkAscending => vec![
                descending_run(r, r - 1, r + 1 - q, p - r),
                beta.clone(),
                ascending_run(r, 1, r - 1, q),
            ],
            Isotopy::ShrinkDescending => vec![
                beta.clone(),
                ascending_run(r, r + 1 - q, r - 1, p - r),
                descending_run(r, r - 1, 1, q),
            ],
            Isotopy::ConjugateAscending => vec![
                descending_run(q, q - 1, 1, p - q),
                beta.widen(q)?,
                ascending_run(q, 1, q - 1, q),
            ],
            Isotopy::AscendingToDescending => vec![beta.widen(q)?, descending_run(q, q - 1, 1, p)],
            Isotopy::DescendingToMixed => vec![
                beta.widen(q)?,
                ascending_run(q, 1, q - 1, p - q),
                descending_run(q, q - 1, 1, q),
            ],
        };
        BraidWord::product(parts[0].strands(), parts.iter())
    }

    /// [`Isotopy::apply`], recording the step in `trace`.
    pub fn apply_traced(
        self,
        beta: &BraidWord,
        p: usize,
        q: usize,
        trace: &mut ConversionTrace,
    ) -> Result<BraidWord> {
        let out = self.apply(beta, p, q)?;
        trace.push(TraceStep::new(
            self.name(),
            &[("r", beta.strands() as i64), ("p", p as i64), ("q", q as i64)],
            &out,
        ));
        Ok(out)
    }
}

pub fn isotopy1(beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
    Isotopy::ShrinkAscending.apply(beta, p, q)
}

pub fn isotopy2(beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
    Isotopy::ShrinkDescending.apply(beta, p, q)
}

pub fn isotopy3(beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
    Isotopy::ConjugateAscending.apply(beta, p, q)
}

pub fn isotopy3_prime(beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
    Isotopy::AscendingToDescending.apply(beta, p, q)
}

pub fn isotopy4(beta: &BraidWord, p: usize, q: usize) -> Result<BraidWord> {
    Isotopy::DescendingToMixed.apply(beta, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::profile;
    use proptest::prelude::*;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn shrink_ascending_examples() {
        let beta = w(3, &[1, 2, 1, 2, 1, 2]);
        assert_eq!(isotopy1(&beta, 5, 2).unwrap(), w(3, &[2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]));
        assert_eq!(isotopy1(&w(2, &[1, 1]), 4, 1).unwrap(), w(2, &[1, 1, 1]));
        assert!(isotopy1(&beta, 3, 2).is_err());
        assert!(isotopy1(&beta, 5, 4).is_err());
    }

    #[test]
    fn shrink_descending_examples() {
        let beta = w(3, &[2, 1, 2, 1, 2, 1]);
        assert_eq!(isotopy2(&beta, 5, 2).unwrap(), w(3, &[2, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1]));
        assert_eq!(isotopy2(&w(2, &[1, 1]), 3, 2).unwrap(), w(2, &[1; 5]));
        assert!(isotopy2(&beta, 5, 1).is_err());
    }

    #[test]
    fn widening_rewrites() {
        let beta = w(2, &[1, 1]);
        assert_eq!(isotopy3(&beta, 5, 3).unwrap(), w(3, &[2, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 2]));
        assert_eq!(isotopy3_prime(&beta, 5, 3).unwrap(), w(3, &[1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1]));
        assert_eq!(isotopy4(&beta, 5, 3).unwrap(), w(3, &[1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1]));
        assert!(isotopy3(&beta, 3, 3).is_err());
        assert!(isotopy4(&w(3, &[1]), 5, 2).is_err());
    }

    #[test]
    fn tail_block_to_three_strands() {
        // T((2,2),(5,3)): β = σ_1^2 on 2 strands, tower (σ_1…σ_4)^3.
        let out = isotopy3_prime(&w(2, &[1, 1]), 5, 3).unwrap();
        let expected = BraidWord::product(
            3,
            [&w(3, &[1, 1]), &crate::braid::desc_left_block(3, 3, 5).unwrap()],
        )
        .unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn sources_match_hand_words() {
        assert_eq!(
            Isotopy::ShrinkAscending.source(&w(2, &[1]), 4, 1).unwrap(),
            w(4, &[1, 1, 2, 3])
        );
        assert_eq!(
            Isotopy::DescendingToMixed.source(&w(2, &[1]), 4, 2).unwrap(),
            w(4, &[1, 3, 2, 1, 3, 2, 1])
        );
    }

    #[test]
    fn traced_application_records_step() {
        let mut trace = ConversionTrace::default();
        let out = Isotopy::ShrinkAscending.apply_traced(&w(2, &[1]), 4, 2, &mut trace).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].rule, "shrink-ascending-tower");
        assert_eq!(trace.steps[0].param("p"), Some(4));
        assert_eq!(trace.steps[0].word, format!("2/{}", out.crossing_count()));
    }

    /// Derive an in-precondition instance of `kind` from free parameters.
    fn instance(kind: Isotopy, r: usize, a: usize, b: usize, raw: &[usize]) -> (BraidWord, usize, usize) {
        let (p, q) = match kind {
            Isotopy::ShrinkAscending => (r + a, 1 + b % r),
            Isotopy::ShrinkDescending => (r + a, 2 + b % (r - 1)),
            _ => (r + a + b, r + b),
        };
        assert!(kind.admits(r, p, q));
        let letters = raw.iter().map(|l| 1 + l % (r - 1)).collect();
        (BraidWord::new(r, letters).unwrap(), p, q)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rewrites_preserve_profiles(
            idx in 0usize..5,
            r in 2usize..5,
            a in 1usize..4,
            b in 0usize..3,
            raw in proptest::collection::vec(0usize..4, 0..6),
        ) {
            let kind = Isotopy::ALL[idx];
            let (beta, p, q) = instance(kind, r, a, b, &raw);
            let src = kind.source(&beta, p, q).unwrap();
            let dst = kind.apply(&beta, p, q).unwrap();
            prop_assert_eq!(
                profile(&src, 14).compare(&profile(&dst, 14)),
                crate::invariants::Consistency::ConsistentWithEquivalence
            );
        }

        #[test]
        fn shrink_ascending_euler_identity(r in 1usize..8, extra in 1usize..8, q0 in 0usize..8, c in 0usize..20) {
            let p = r + extra;
            let q = 1 + q0 % r;
            let (p, q, r, c) = (p as i64, q as i64, r as i64, c as i64);
            prop_assert_eq!(p - c - (p - 1) * q, r - c - (q - 1) * (p - r) - (r - 1) * q);
        }
    }
}
