//! Conversion between T-link and V-link parameters.
//!
//! `t_to_v` scans partial sums of the trailing exponents
//! `S_j = s_n + … + s_{n-j}` for the first index where the tail either
//! covers the block width (`S_j ≥ r_{n-j}`) or sits between two widths
//! (`r_{n-j-1} ≤ S_j < r_{n-j}`, with `r_0 = 0`). The V-link emitted at
//! that index has the braid index as its width. `v_to_t` goes back and
//! produces two T-links, which are generally different parameter tuples
//! for the same link.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::params::{Block, TLinkSpec, VLinkSpec};
use crate::trace::{ConversionTrace, TraceStep};

/// Which inequality stopped the partial-sum scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopCondition {
    /// `S_j ≥ r_{n-j}`: the torus block keeps width `r_{n-j}`.
    CoversWidth,
    /// `r_{n-j-1} ≤ S_j < r_{n-j}`: the torus block has width `S_j`.
    BetweenWidths,
}

/// Minimal-width V-link of a normalized T-link, with the scan recorded.
pub fn t_to_v(t: &TLinkSpec) -> Result<(VLinkSpec, ConversionTrace)> {
    let pairs = t.pairs();
    let n = pairs.len();
    let mut trace = ConversionTrace::default();
    let (r_last, s_last) = t.last();

    if s_last == 1 {
        if n == 1 {
            let v = VLinkSpec::new(vec![], vec![], (1, r_last))?;
            trace.push(TraceStep::new("unknot", &[("r", r_last as i64)], &v.braid()));
            return Ok((v, trace));
        }
        return Err(Error::NotNormalized(format!("{t} ends in a block with exponent 1")));
    }

    // r(k) = r_k with r(0) = 0; s(k) likewise, 1-based.
    let r = |k: usize| if k == 0 { 0 } else { pairs[k - 1].0 };
    let s = |k: usize| pairs[k - 1].1;

    let mut partial = Vec::with_capacity(n);
    for j in 0..n {
        let prev = partial.last().copied().unwrap_or(0);
        let sum = prev + s(n - j);
        partial.push(sum);
        let width = r(n - j);
        let stop = if sum >= width {
            StopCondition::CoversWidth
        } else if sum >= r(n - j - 1) {
            StopCondition::BetweenWidths
        } else {
            continue;
        };

        // Blocks peeled off the tail, outermost first.
        let peeled: Vec<Block> = (1..=j).map(|k| (partial[k - 1], r(n - k + 1) - r(n - k))).collect();
        let kept: Vec<Block> = pairs[..n - j - 1].to_vec();
        let (rev, plain, torus, rule) = match stop {
            StopCondition::CoversWidth => (peeled, kept, (width, sum), "tail-covers-width"),
            StopCondition::BetweenWidths => (kept, peeled, (sum, width), "tail-between-widths"),
        };
        let v = VLinkSpec::new(rev, plain, torus)?;
        trace.i_bar = Some(j);
        trace.push(TraceStep::new(
            rule,
            &[("i_bar", j as i64), ("partial_sum", sum as i64), ("width", width as i64)],
            &v.braid(),
        ));
        return Ok((v, trace));
    }
    unreachable!("the scan always stops at j = n - 1 because r_0 = 0")
}

/// Both T-link forms of a V-link, normalized.
///
/// The first reads the plain blocks followed by the rev blocks unwound
/// into the torus block; the second reads the rev blocks as ordinary
/// blocks followed by the plain blocks unwound into the transposed torus
/// block. The one-strand unknot maps to a single `(r, 1)` block.
pub fn v_to_t(v: &VLinkSpec) -> Result<(TLinkSpec, TLinkSpec)> {
    let (p, q) = v.torus();
    if p == 1 {
        let unknot = TLinkSpec::normalize(&[(q.max(2), 1)])?;
        return Ok((unknot.clone(), unknot));
    }
    let first = unwind(v.plain(), v.rev(), p, q);
    let second = unwind(v.rev(), v.plain(), q, p);
    Ok((TLinkSpec::normalize(&first)?, TLinkSpec::normalize(&second)?))
}

/// `head…, (width, height - w_k), (width + e_k, w_k - w_{k-1}), …,
/// (width + e_k + … + e_1, w_1)` for `tail = [(w_1, e_1), …, (w_k, e_k)]`.
fn unwind(head: &[Block], tail: &[Block], width: usize, height: usize) -> Vec<Block> {
    let mut out = head.to_vec();
    let widths: Vec<usize> = std::iter::once(0).chain(tail.iter().map(|b| b.0)).collect();
    let k = tail.len();
    out.push((width, height - widths[k]));
    let mut offset = width;
    for idx in (1..=k).rev() {
        offset += tail[idx - 1].1;
        out.push((offset, widths[idx] - widths[idx - 1]));
    }
    out
}

/// The other T-link form of the same link, and whether `t` was its own
/// partner.
pub fn dual_t(t: &TLinkSpec) -> Result<(TLinkSpec, bool)> {
    let (v, _) = t_to_v(t)?;
    let (first, second) = v_to_t(&v)?;
    if first != *t {
        Ok((first, false))
    } else if second != *t {
        Ok((second, false))
    } else {
        Ok((t.clone(), true))
    }
}

/// Braid on the braid-index number of strands whose closure is `t`.
pub fn minimal_braid(t: &TLinkSpec) -> Result<BraidWord> {
    Ok(t_to_v(t)?.0.braid())
}
