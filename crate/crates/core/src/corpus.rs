//! Deterministic enumeration of link specifications within bounds.

use std::collections::HashSet;

use crate::notation::parse_spec;
use crate::params::{Block, LinkSpec, TLinkSpec, VLinkSpec};

/// Limits for enumeration: block widths up to `p_max`, exponents up to
/// `q_max`, at most `block_max` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub p_max: usize,
    pub q_max: usize,
    pub block_max: usize,
}

impl Bounds {
    pub fn new(p_max: usize, q_max: usize, block_max: usize) -> Self {
        Bounds { p_max, q_max, block_max }
    }
}

/// Specs used as fixed regression inputs.
pub const REFERENCE_SPECS: &[&str] = &[
    "T[(2,3)]",
    "T[(3,5)]",
    "T[(2,2)]",
    "T[(3,2),(5,5)]",
    "T[(2,2),(3,3)]",
    "T[(2,2),(5,3)]",
    "T[(3,1),(4,2)]",
    "T[(2,2),(5,7)]",
    "T[(2,1),(4,4),(6,6)]",
    "V[(2,~2),(3,~2);(3,2);(5,5)]",
    "V[(2,~2);(2,2),(6,2);(8,10)]",
    "V[(2,~2);(2,1),(4,4);(6,8)]",
    "V[;(4,4);(6,8)]",
    "V[;(2,2);(5,7)]",
    "V[;(3,3);(10,14)]",
    "V[(3,~3);;(10,14)]",
    "V[;(3,4);(7,9)]",
    "V[;(3,3);(7,9)]",
    "V[;;(5,5)]",
];

pub fn reference_specs() -> Vec<LinkSpec> {
    REFERENCE_SPECS.iter().map(|s| parse_spec(s).expect("reference spec parses")).collect()
}

/// Strictly increasing width sequences in `2..=max_width` of length
/// `1..=max_len`, in lexicographic order.
fn width_sequences(min_width: usize, max_width: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (min_width..=max_width).rev().map(|w| vec![w]).collect();
    while let Some(seq) = stack.pop() {
        if seq.len() < max_len {
            let last = *seq.last().unwrap();
            for w in (last + 1..=max_width).rev() {
                let mut next = seq.clone();
                next.push(w);
                stack.push(next);
            }
        }
        out.push(seq);
    }
    out
}

/// Every assignment of exponents `1..=q_max` to `widths`.
fn with_exponents(widths: &[usize], q_max: usize) -> Vec<Vec<Block>> {
    let mut out: Vec<Vec<Block>> = vec![Vec::new()];
    for &w in widths {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=q_max).map(move |s| {
                    let mut next = prefix.clone();
                    next.push((w, s));
                    next
                })
            })
            .collect();
    }
    out
}

/// All normalized T-links with widths up to `p_max`, exponents up to
/// `q_max` and at most `block_max` blocks, each listed once in the order
/// of its first raw tuple.
pub fn enumerate_t(bounds: Bounds) -> Vec<TLinkSpec> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for widths in width_sequences(2, bounds.p_max, bounds.block_max) {
        for raw in with_exponents(&widths, bounds.q_max) {
            if let Ok(t) = TLinkSpec::normalize(&raw) {
                if seen.insert(t.clone()) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// V-links with `2 ≤ p ≤ p_max`, at most `side_max` side blocks in total,
/// side exponents up to `q_max`, and torus exponent in `p..=q_total_max(p)`.
pub fn enumerate_v(
    p_max: usize,
    q_max: usize,
    side_max: usize,
    q_total_max: impl Fn(usize) -> usize,
) -> Vec<VLinkSpec> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in 2..=p_max {
        let mut sides: Vec<(Vec<Block>, Vec<Block>)> = vec![(vec![], vec![])];
        let rev_widths = width_sequences(2, p, side_max);
        let plain_widths = if p > 2 { width_sequences(2, p - 1, side_max) } else { vec![] };
        for rw in &rev_widths {
            for rev in with_exponents(rw, q_max) {
                sides.push((rev, vec![]));
            }
        }
        for pw in &plain_widths {
            for plain in with_exponents(pw, q_max) {
                sides.push((vec![], plain.clone()));
                for rw in rev_widths.iter().filter(|rw| rw.len() + pw.len() <= side_max) {
                    for rev in with_exponents(rw, q_max) {
                        sides.push((rev, plain.clone()));
                    }
                }
            }
        }
        for (rev, plain) in sides {
            for q in p..=q_total_max(p) {
                if let Ok(v) = VLinkSpec::new(rev.clone(), plain.clone(), (p, q)) {
                    if seen.insert(v.clone()) {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_sequences_are_increasing() {
        let seqs = width_sequences(2, 4, 2);
        assert_eq!(seqs, vec![vec![2], vec![2, 3], vec![2, 4], vec![3], vec![3, 4], vec![4]]);
    }

    #[test]
    fn t_enumeration_is_deduplicated() {
        let all = enumerate_t(Bounds::new(4, 2, 2));
        let unique: HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        // (2,1)(3,1) normalizes to (2,2), which is also enumerated directly.
        assert!(all.contains(&TLinkSpec::normalize(&[(2, 2)]).unwrap()));
        assert_eq!(all, enumerate_t(Bounds::new(4, 2, 2)));
    }

    #[test]
    fn v_enumeration_respects_side_limit() {
        let all = enumerate_v(4, 2, 2, |p| p + 1);
        assert!(all.iter().all(|v| v.rev().len() + v.plain().len() <= 2));
        assert!(all.iter().any(|v| !v.rev().is_empty() && !v.plain().is_empty()));
    }

    #[test]
    fn reference_specs_parse() {
        assert_eq!(reference_specs().len(), REFERENCE_SPECS.len());
    }
}
