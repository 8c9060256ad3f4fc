//! Geometric type of V-links and T-links from arithmetic conditions on
//! their parameters.
//!
//! Satellite rules build an explicit companion (and, for knotted
//! companions, the pattern). Hyperbolic rules decompose the torus
//! exponent as `q_total = k·p + q'` with `0 < q' < p` and test gcd and
//! size conditions on the outermost side blocks. When no rule applies the
//! verdict is `Unknown`.

use num_integer::Integer;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::conversion::{t_to_v, v_to_t};
use crate::error::{Error, Result};
use crate::params::{Block, TLinkSpec, VLinkSpec};
use crate::trace::ConversionTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SatelliteRule {
    /// Every tail parameter and the torus block are multiples of `d`.
    S1,
    /// The torus width factors as `q_small · a` and the tail exponents sum to `d`.
    S2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HyperbolicRule {
    /// Side blocks fit inside `q'` strands, `gcd(p, q') = 1`.
    H1,
    /// One-sided spec with `gcd(p, q') > 1`.
    H2,
    /// Outermost side block wider than `q'`, crossing-sum exclusion.
    H3,
    /// Braid form `β(σ_1…σ_{p-1})^{q+pk}` with `p > q ≥ r > 1`, `gcd(p, q) = 1`.
    B1,
    /// Braid form with `p > q > r > gcd(p, q) > 1` and a full twist in `β`.
    B2,
    /// Braid form with `p > r > q` and a full twist in `β`.
    B3,
}

impl SatelliteRule {
    pub fn name(self) -> &'static str {
        match self {
            SatelliteRule::S1 => "S1",
            SatelliteRule::S2 => "S2",
        }
    }
}

impl HyperbolicRule {
    pub fn name(self) -> &'static str {
        match self {
            HyperbolicRule::H1 => "H1",
            HyperbolicRule::H2 => "H2",
            HyperbolicRule::H3 => "H3",
            HyperbolicRule::B1 => "B1",
            HyperbolicRule::B2 => "B2",
            HyperbolicRule::B3 => "B3",
        }
    }
}

/// Parameters of the second satellite construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CablingSplit {
    pub q_small: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteWitness {
    pub rule: SatelliteRule,
    pub d: usize,
    /// Number of leading plain and overlined blocks left in the pattern.
    pub i: usize,
    pub j: usize,
    pub companion: VLinkSpec,
    pub companion_is_knot: bool,
    /// Only defined when the companion is a knot.
    pub pattern: Option<VLinkSpec>,
    pub pattern_braid: Option<BraidWord>,
    /// Full twists added to the pattern (S1 only).
    pub eta: Option<usize>,
    pub split: Option<CablingSplit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperbolicWitness {
    pub rule: HyperbolicRule,
    pub k: usize,
    pub q_prime: usize,
    /// Which alternative of a two-sided rule matched (1 or 2).
    pub bullet: Option<u8>,
    /// Side-braid crossing count, for the rules that exclude one value.
    pub crossing_sum: Option<usize>,
    /// Components of the closure; braid-form rules are only claims about knots.
    pub closure_components: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum Witness {
    Satellite(SatelliteWitness),
    Hyperbolic(HyperbolicWitness),
}

impl Witness {
    pub fn rule_name(&self) -> &'static str {
        match self {
            Witness::Satellite(w) => w.rule.name(),
            Witness::Hyperbolic(w) => w.rule.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GeometricKind {
    Torus,
    Satellite,
    Hyperbolic,
    Unknown,
}

impl GeometricKind {
    pub const ALL: [GeometricKind; 4] =
        [GeometricKind::Torus, GeometricKind::Satellite, GeometricKind::Hyperbolic, GeometricKind::Unknown];

    pub fn name(self) -> &'static str {
        match self {
            GeometricKind::Torus => "Torus",
            GeometricKind::Satellite => "Satellite",
            GeometricKind::Hyperbolic => "Hyperbolic",
            GeometricKind::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricVerdict {
    pub kind: GeometricKind,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<ConversionTrace>,
}

impl GeometricVerdict {
    /// Name of the first witness's rule, if any.
    pub fn rule(&self) -> Option<&'static str> {
        self.witnesses.first().map(Witness::rule_name)
    }
}

/// `q_total = k·p + q'` with `0 ≤ q' < p`.
pub fn decompose(p: usize, q_total: usize) -> (usize, usize) {
    q_total.div_rem(&p)
}

fn side_crossings(rev: &[Block], plain: &[Block]) -> usize {
    rev.iter().chain(plain).map(|&(w, e)| (w - 1) * e).sum()
}

/// Cabling with every tail parameter a multiple of `d`; the smallest
/// admissible `d` is reported.
pub fn satellite_case_one(v: &VLinkSpec) -> Option<SatelliteWitness> {
    let (p, q) = v.torus();
    if p < 2 {
        return None;
    }
    let g = p.gcd(&q);
    (2..p).filter(|d| g % d == 0).find_map(|d| satellite_case_one_at(v, d))
}

fn satellite_case_one_at(v: &VLinkSpec, d: usize) -> Option<SatelliteWitness> {
    let (p, q) = v.torus();
    let fits = |x: usize| x.is_multiple_of(d) && x > d;
    if !(fits(p) && fits(q)) {
        return None;
    }
    let i = v.plain().iter().take_while(|b| b.0 <= d).count();
    let j = v.rev().iter().take_while(|b| b.0 <= d).count();
    let (plain_head, plain_tail) = v.plain().split_at(i);
    let (rev_head, rev_tail) = v.rev().split_at(j);
    if !plain_tail.iter().chain(rev_tail).all(|&(w, e)| fits(w) && fits(e)) {
        return None;
    }

    let scaled = |blocks: &[Block]| blocks.iter().map(|&(w, e)| (w / d, e / d)).collect::<Vec<_>>();
    let companion = VLinkSpec::new(scaled(rev_tail), scaled(plain_tail), (p / d, q / d)).ok()?;
    let area: usize = plain_tail.iter().chain(rev_tail).map(|&(w, e)| w * e).sum::<usize>() + p * q;
    debug_assert_eq!(area % (d * d), 0);
    let eta = area / (d * d);

    let companion_is_knot = companion.is_knot();
    let pattern = if companion_is_knot {
        VLinkSpec::new(rev_head.to_vec(), plain_head.to_vec(), (d, d * eta)).ok()
    } else {
        None
    };
    Some(SatelliteWitness {
        rule: SatelliteRule::S1,
        d,
        i,
        j,
        pattern_braid: pattern.as_ref().map(VLinkSpec::braid),
        companion,
        companion_is_knot,
        pattern,
        eta: Some(eta),
        split: None,
    })
}

/// Cabling of the torus companion `V(a, b+1)` where `p = q_small · a`.
pub fn satellite_case_two(v: &VLinkSpec) -> Option<SatelliteWitness> {
    let (p, q_total) = v.torus();
    (2..p).filter(|qs| p % qs == 0).find_map(|q_small| {
        let a = p / q_small;
        let (b, c) = q_total.div_rem(&q_small);
        if c == 0 || q_small * b + c < a * q_small {
            return None;
        }
        let d = q_small - c;
        if v.rev().last().is_some_and(|&(u, _)| u > c) {
            return None;
        }
        let i = v.plain().iter().take_while(|blk| blk.0 <= d).count();
        let tail = &v.plain()[i..];
        let first_tail = tail.first()?;
        if first_tail.0 + c < p || tail.iter().map(|blk| blk.1).sum::<usize>() != d {
            return None;
        }

        let companion = VLinkSpec::torus_only(a, b + 1).ok()?;
        let companion_is_knot = companion.is_knot();
        let pattern = if companion_is_knot {
            let mut plain = v.plain()[..i].to_vec();
            if d >= 2 {
                plain.push((d, d));
            }
            let exponent = q_small * (b + (a - 1) * (b + 1)) + c;
            VLinkSpec::new(v.rev().to_vec(), plain, (q_small, exponent)).ok()
        } else {
            None
        };
        Some(SatelliteWitness {
            rule: SatelliteRule::S2,
            d,
            i,
            j: v.rev().len(),
            pattern_braid: pattern.as_ref().map(VLinkSpec::braid),
            companion,
            companion_is_knot,
            pattern,
            eta: None,
            split: Some(CablingSplit { q_small, a, b, c }),
        })
    })
}

fn hyperbolic(rule: HyperbolicRule, k: usize, q_prime: usize) -> HyperbolicWitness {
    HyperbolicWitness { rule, k, q_prime, bullet: None, crossing_sum: None, closure_components: None }
}

/// `(k, q')` when both are positive, which every hyperbolic rule needs.
/// Since `p ≤ q_total`, `k ≥ 1` whenever `q' > 0`.
fn twisted_decomposition(v: &VLinkSpec) -> Option<(usize, usize)> {
    let (p, q_total) = v.torus();
    if p < 2 {
        return None;
    }
    let (k, q_prime) = decompose(p, q_total);
    (k >= 1 && q_prime >= 1).then_some((k, q_prime))
}

fn last_width(blocks: &[Block]) -> usize {
    blocks.last().map_or(0, |b| b.0)
}

/// Side blocks no wider than `q'` with `gcd(p, q') = 1`.
pub fn hyp_rule_1(v: &VLinkSpec) -> Option<HyperbolicWitness> {
    let (k, q_prime) = twisted_decomposition(v)?;
    let p = v.width();
    let ok = last_width(v.plain()) <= q_prime
        && last_width(v.rev()) <= q_prime
        && p.gcd(&q_prime) == 1
        && !v.is_torus()
        && v.side_crossings() >= 1;
    ok.then(|| hyperbolic(HyperbolicRule::H1, k, q_prime))
}

/// One-sided specs with `gcd(p, q') > 1`.
pub fn hyp_rule_2(v: &VLinkSpec) -> Option<HyperbolicWitness> {
    let (k, q_prime) = twisted_decomposition(v)?;
    let p = v.width();
    let g = p.gcd(&q_prime);
    if g <= 1 {
        return None;
    }
    let one_sided = |own: &[Block], other: &[Block]| {
        other.is_empty()
            && own.last().is_some_and(|&(w, e)| e >= w && w > g && g.gcd(&w) == 1 && w < q_prime)
    };
    let bullet = if one_sided(v.plain(), v.rev()) {
        1
    } else if one_sided(v.rev(), v.plain()) {
        2
    } else {
        return None;
    };
    Some(HyperbolicWitness { bullet: Some(bullet), ..hyperbolic(HyperbolicRule::H2, k, q_prime) })
}

/// Outermost side block wider than `q'`, excluding one crossing count.
pub fn hyp_rule_3(v: &VLinkSpec) -> Option<HyperbolicWitness> {
    let (k, q_prime) = twisted_decomposition(v)?;
    let p = v.width();
    if p.gcd(&q_prime) != 1 {
        return None;
    }
    let crossing_sum = side_crossings(v.rev(), v.plain());
    let wide = |own: &[Block], other: &[Block]| {
        let Some(&(w, e)) = own.last() else { return false };
        e >= w
            && w > q_prime
            && q_prime >= last_width(other)
            && w < p
            && p - w >= q_prime
            && !p.is_multiple_of(w)
            && (w.gcd(&q_prime) == 1 || p.gcd(&w) == 1)
            && crossing_sum != (p - 1) * (w - q_prime)
    };
    let bullet = if wide(v.plain(), v.rev()) {
        1
    } else if wide(v.rev(), v.plain()) {
        2
    } else {
        return None;
    };
    Some(HyperbolicWitness {
        bullet: Some(bullet),
        crossing_sum: Some(crossing_sum),
        ..hyperbolic(HyperbolicRule::H3, k, q_prime)
    })
}

/// The braid-form criteria for `β(σ_1…σ_{p-1})^{q+pk}` with `β` on
/// `r = beta.strands()` strands and `0 < q < p`.
pub fn braid_hyp_thm(
    beta: &BraidWord,
    p: usize,
    q: usize,
    k: usize,
    which: HyperbolicRule,
) -> Option<HyperbolicWitness> {
    let r = beta.strands();
    if k < 1 || q < 1 {
        return None;
    }
    let g = p.gcd(&q);
    let ok = match which {
        HyperbolicRule::B1 => p > q && q >= r && r > 1 && g == 1 && !beta.is_empty(),
        HyperbolicRule::B2 => {
            p > q && q > r && r > g && g > 1 && r.gcd(&p) == 1 && r.gcd(&q) == 1 && beta.has_full_twist(r)
        }
        HyperbolicRule::B3 => {
            p > r
                && r > q
                && p - r >= q
                && !p.is_multiple_of(r)
                && (r.gcd(&q) == 1 || g == 1 || p.gcd(&r) == 1)
                && beta.has_full_twist(r)
                && beta.crossing_count() != (p - 1) * (r - q)
        }
        _ => false,
    };
    if !ok {
        return None;
    }
    let closure = beta
        .widen(p)
        .ok()?
        .concat(&crate::braid::asc_block(p, p, q + p * k).ok()?)
        .ok()?;
    Some(HyperbolicWitness {
        closure_components: Some(closure.components()),
        crossing_sum: matches!(which, HyperbolicRule::B3).then(|| beta.crossing_count()),
        ..hyperbolic(which, k, q)
    })
}

const CROSSING_SUM_NOTE: &str =
    "crossing sum counts (u_j - 1) v_j for each overlined block, i.e. the side-braid crossing number";

/// Classify a V-link. Satellite rules are tried before hyperbolic ones
/// and every matching rule contributes a witness; hyperbolic rules are
/// only consulted for knots. The V-links reached through the two T-link
/// forms are the same link, so they are classified as well: they supply
/// the verdict when the spec itself matches no rule, and any
/// disagreement between satellite and hyperbolic evidence is an error.
pub fn classify_v(v: &VLinkSpec) -> Result<GeometricVerdict> {
    let direct = classify_direct(v)?;
    if v.width() < 2 {
        return Ok(direct);
    }
    let mut verdict = direct;
    for alt in equivalent_forms(v)? {
        let other = classify_direct(&alt)?;
        let clash = matches!(
            (verdict.kind, other.kind),
            (GeometricKind::Satellite, GeometricKind::Hyperbolic) | (GeometricKind::Hyperbolic, GeometricKind::Satellite)
        );
        if clash {
            return Err(Error::InternalInconsistency(format!(
                "{v} is {} but its equivalent form {alt} is {}",
                verdict.kind.name(),
                other.kind.name()
            )));
        }
        if verdict.kind == GeometricKind::Unknown && other.kind != GeometricKind::Unknown {
            let mut notes = vec![format!("{v} matches no rule; verdict taken from equivalent form {alt}")];
            notes.extend(other.notes);
            verdict = GeometricVerdict { notes, ..other };
        }
    }
    Ok(verdict)
}

/// Minimal V-links of the two T-link forms of `v`, other than `v`.
pub fn equivalent_forms(v: &VLinkSpec) -> Result<Vec<VLinkSpec>> {
    let (first, second) = v_to_t(v)?;
    let mut out: Vec<VLinkSpec> = Vec::new();
    for t in [first, second] {
        let alt = t_to_v(&t)?.0;
        if alt != *v && !out.contains(&alt) {
            out.push(alt);
        }
    }
    Ok(out)
}

/// The rules applied to `v` alone.
pub fn classify_direct(v: &VLinkSpec) -> Result<GeometricVerdict> {
    let mut notes = Vec::new();
    if v.is_torus() {
        let (p, q) = v.torus();
        notes.push(if p == 1 {
            "unknot".to_string()
        } else {
            format!("torus link T({p},{q}) with {} components", p.gcd(&q))
        });
        return Ok(GeometricVerdict { kind: GeometricKind::Torus, witnesses: vec![], notes, trace: None });
    }

    let mut witnesses = Vec::new();
    for rule in [satellite_case_one, satellite_case_two] {
        if let Some(w) = rule(v) {
            if !w.companion_is_knot {
                notes.push(format!(
                    "{}: companion {} is a link, pattern not defined",
                    w.rule.name(),
                    w.companion
                ));
            }
            witnesses.push(Witness::Satellite(w));
        }
    }

    let is_knot = v.is_knot();
    let hyperbolic_rules: [fn(&VLinkSpec) -> Option<HyperbolicWitness>; 3] =
        [hyp_rule_1, hyp_rule_2, hyp_rule_3];
    if is_knot {
        for rule in hyperbolic_rules {
            if let Some(w) = rule(v) {
                if w.rule == HyperbolicRule::H3 {
                    notes.push(format!("H3: {CROSSING_SUM_NOTE}"));
                }
                witnesses.push(Witness::Hyperbolic(w));
            }
        }
    } else {
        notes.push(format!("{} components: hyperbolic rules need a knot", v.components()));
    }

    let satellite = witnesses.iter().any(|w| matches!(w, Witness::Satellite(_)));
    let hyperbolic = witnesses.iter().any(|w| matches!(w, Witness::Hyperbolic(_)));
    let kind = match (satellite, hyperbolic) {
        (true, true) => {
            return Err(Error::InternalInconsistency(format!(
                "{v} has both satellite and hyperbolic witnesses"
            )))
        }
        (true, false) => GeometricKind::Satellite,
        (false, true) => GeometricKind::Hyperbolic,
        (false, false) => GeometricKind::Unknown,
    };
    Ok(GeometricVerdict { kind, witnesses, notes, trace: None })
}

/// Classify a T-link through its minimal V-link form.
pub fn classify_t(t: &TLinkSpec) -> Result<GeometricVerdict> {
    let (v, trace) = t_to_v(t)?;
    let mut verdict = classify_v(&v)?;
    verdict.notes.insert(0, format!("classified as {v}"));
    verdict.trace = Some(trace);
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::asc_block;
    use crate::notation::{parse_t, parse_v};

    fn v(text: &str) -> VLinkSpec {
        parse_v(text).unwrap()
    }

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn torus_specs() {
        assert_eq!(classify_v(&v("V[;;(5,5)]")).unwrap().kind, GeometricKind::Torus);
        assert_eq!(classify_t(&parse_t("T[(2,3)]").unwrap()).unwrap().kind, GeometricKind::Torus);
        assert_eq!(classify_t(&parse_t("T[(3,5)]").unwrap()).unwrap().kind, GeometricKind::Torus);
    }

    #[test]
    fn first_cabling_rule() {
        let wit = satellite_case_one(&v("V[(2,~2);(2,1),(4,4);(6,8)]")).unwrap();
        assert_eq!(wit.d, 2);
        assert_eq!(wit.eta, Some(16));
        assert_eq!(wit.companion, v("V[;(2,2);(3,4)]"));
        assert!(wit.companion_is_knot);
        assert_eq!(wit.pattern_braid.unwrap(), w(2, &[1; 35]));
        assert_eq!((wit.i, wit.j), (1, 1));

        let wit = satellite_case_one(&v("V[;(4,4);(6,8)]")).unwrap();
        assert_eq!(wit.companion, v("V[;(2,2);(3,4)]"));
        assert_eq!((wit.i, wit.j, wit.eta), (0, 0, Some(16)));

        assert!(satellite_case_one(&v("V[;(2,2);(5,7)]")).is_none());
        assert!(satellite_case_one(&v("V[(2,~2);(2,2),(6,2);(8,10)]")).is_none());
    }

    #[test]
    fn second_cabling_rule() {
        let wit = satellite_case_two(&v("V[(2,~2);(2,2),(6,2);(8,10)]")).unwrap();
        assert_eq!(wit.split, Some(CablingSplit { q_small: 4, a: 2, b: 2, c: 2 }));
        assert_eq!((wit.d, wit.i), (2, 1));
        assert_eq!(wit.companion, v("V[;;(2,3)]"));
        assert!(wit.companion_is_knot);
        assert_eq!(wit.pattern.unwrap(), v("V[(2,~2);(2,4);(4,22)]"));
        // tail exponents sum to 3, not d = 2
        assert!(satellite_case_two(&v("V[(2,~2);(2,2),(6,3);(8,10)]")).is_none());
    }

    #[test]
    fn satellite_verdict() {
        let verdict = classify_v(&v("V[(2,~2);(2,2),(6,2);(8,10)]")).unwrap();
        assert_eq!(verdict.kind, GeometricKind::Satellite);
        assert_eq!(verdict.rule(), Some("S2"));
    }

    #[test]
    fn first_hyperbolic_rule() {
        let wit = hyp_rule_1(&v("V[;(2,2);(5,7)]")).unwrap();
        assert_eq!((wit.k, wit.q_prime), (1, 2));
        assert!(hyp_rule_1(&v("V[;(3,2);(5,7)]")).is_none());
        assert!(hyp_rule_1(&v("V[;(2,2);(4,6)]")).is_none());
        let verdict = classify_v(&v("V[;(2,2);(5,7)]")).unwrap();
        assert_eq!((verdict.kind, verdict.rule()), (GeometricKind::Hyperbolic, Some("H1")));
        let verdict = classify_t(&parse_t("T[(2,2),(5,7)]").unwrap()).unwrap();
        assert_eq!((verdict.kind, verdict.rule()), (GeometricKind::Hyperbolic, Some("H1")));
    }

    #[test]
    fn second_hyperbolic_rule() {
        let wit = hyp_rule_2(&v("V[;(3,3);(10,14)]")).unwrap();
        assert_eq!((wit.k, wit.q_prime, wit.bullet), (1, 4, Some(1)));
        assert!(hyp_rule_2(&v("V[;(3,2);(10,14)]")).is_none());
        assert_eq!(hyp_rule_2(&v("V[(3,~3);;(10,14)]")).unwrap().bullet, Some(2));
        // The examples above are two-component links, so classification
        // does not consult the rule.
        assert!(!v("V[;(3,3);(10,14)]").is_knot());
        assert_eq!(classify_v(&v("V[;(3,3);(10,14)]")).unwrap().kind, GeometricKind::Unknown);
    }

    #[test]
    fn third_hyperbolic_rule() {
        assert!(hyp_rule_3(&v("V[;(3,3);(7,9)]")).is_none());
        let wit = hyp_rule_3(&v("V[;(3,4);(7,9)]")).unwrap();
        assert_eq!((wit.bullet, wit.crossing_sum), (Some(1), Some(8)));
        assert!(hyp_rule_3(&v("V[(3,~3);;(7,9)]")).is_none());
        assert_eq!(hyp_rule_3(&v("V[(3,~4);;(7,9)]")).unwrap().bullet, Some(2));
    }

    #[test]
    fn braid_forms() {
        let wit = braid_hyp_thm(&w(2, &[1, 1]), 5, 2, 1, HyperbolicRule::B1).unwrap();
        assert_eq!(wit.closure_components, Some(1));
        let twist = asc_block(3, 3, 3).unwrap();
        let wit = braid_hyp_thm(&twist, 10, 4, 1, HyperbolicRule::B2).unwrap();
        assert_eq!(wit.closure_components, Some(2));
        assert!(braid_hyp_thm(&twist, 7, 2, 1, HyperbolicRule::B3).is_none());
        assert!(braid_hyp_thm(&asc_block(3, 3, 4).unwrap(), 7, 2, 1, HyperbolicRule::B3).is_some());
        assert!(braid_hyp_thm(&w(2, &[1, 1]), 5, 2, 0, HyperbolicRule::B1).is_none());
    }

    #[test]
    fn verdict_from_equivalent_form() {
        let spec = v("V[(2,~2),(3,~2);;(3,6)]");
        assert_eq!(classify_direct(&spec).unwrap().kind, GeometricKind::Unknown);
        let verdict = classify_v(&spec).unwrap();
        assert_eq!((verdict.kind, verdict.rule()), (GeometricKind::Hyperbolic, Some("H1")));
        assert!(verdict.notes[0].contains("V[;(2,2);(3,8)]"));
    }

    #[test]
    fn full_width_twists_are_torus() {
        let verdict = classify_t(&parse_t("T[(4,4),(6,4)]").unwrap()).unwrap();
        assert_eq!(verdict.kind, GeometricKind::Torus);
    }

    fn arb_t() -> impl proptest::strategy::Strategy<Value = TLinkSpec> {
        use proptest::prelude::*;
        proptest::collection::btree_map(2usize..9, 1usize..7, 1..4)
            .prop_filter_map("normalizes", |raw| TLinkSpec::normalize(&raw.into_iter().collect::<Vec<_>>()).ok())
    }

    proptest::proptest! {
        #[test]
        fn kind_is_stable_under_reconversion(t in arb_t()) {
            let kind = classify_t(&t).unwrap().kind;
            let (first, second) = v_to_t(&t_to_v(&t).unwrap().0).unwrap();
            proptest::prop_assert_eq!(classify_t(&first).unwrap().kind, kind);
            proptest::prop_assert_eq!(classify_t(&second).unwrap().kind, kind);
        }

        #[test]
        fn satellite_companions_decide_patterns(t in arb_t()) {
            let spec = t_to_v(&t).unwrap().0;
            for w in classify_direct(&spec).unwrap().witnesses {
                if let Witness::Satellite(s) = w {
                    proptest::prop_assert_eq!(s.pattern.is_some(), s.companion.components() == 1);
                    if let Some(eta) = s.eta {
                        let (p, q) = spec.torus();
                        proptest::prop_assert_eq!(p % s.d + q % s.d, 0);
                        let area: usize = spec.plain()[s.i..].iter().chain(&spec.rev()[s.j..])
                            .map(|&(w, e)| w * e).sum::<usize>() + p * q;
                        proptest::prop_assert_eq!(eta * s.d * s.d, area);
                    }
                }
            }
        }
    }
}
