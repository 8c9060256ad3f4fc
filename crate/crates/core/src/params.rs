//! Parameter tuples for T-links and V-links and the braids they describe.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::{asc_block, desc_left_block, desc_right_block, BraidWord};
use crate::error::{Error, Result};

/// A block `(size, power)`: `(r, s)` for ascending blocks, `(u, v)` for
/// overlined (descending, right-aligned) blocks.
pub type Block = (usize, usize);

/// `T((r_1, s_1), …, (r_n, s_n))` in normal form: `2 <= r_1 < … < r_n`,
/// every `s_i >= 1`, and `s_n >= 2` whenever `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLinkSpec {
    pairs: Vec<Block>,
}

impl TLinkSpec {
    /// Drop empty blocks, merge neighbours of equal size, and destabilize
    /// a trailing block of power one into its predecessor.
    pub fn normalize(raw: &[Block]) -> Result<Self> {
        if let Some(&(r, _)) = raw.iter().find(|&&(r, _)| r < 2) {
            return Err(Error::InvalidParameters(format!("block size {r} is below 2")));
        }
        let mut pairs: Vec<Block> = Vec::with_capacity(raw.len());
        for &(r, s) in raw.iter().filter(|&&(_, s)| s > 0) {
            match pairs.last_mut() {
                Some(last) if last.0 == r => last.1 += s,
                Some(last) if last.0 > r => {
                    return Err(Error::InvalidParameters(format!(
                        "block sizes must increase, found {} before {r}",
                        last.0
                    )))
                }
                _ => pairs.push((r, s)),
            }
        }
        if pairs.is_empty() {
            return Err(Error::EmptyLink);
        }
        let n = pairs.len();
        if n >= 2 && pairs[n - 1].1 == 1 {
            pairs.pop();
            pairs[n - 2].1 += 1;
        }
        Ok(TLinkSpec { pairs })
    }

    /// Accept `pairs` only if they are already in normal form.
    pub fn from_normalized(pairs: Vec<Block>) -> Result<Self> {
        let t = TLinkSpec::normalize(&pairs).map_err(|e| match e {
            Error::EmptyLink => Error::NotNormalized("no blocks".into()),
            other => other,
        })?;
        if t.pairs != pairs {
            return Err(Error::NotNormalized(format!(
                "{} normalizes to {}",
                TLinkSpec { pairs },
                t
            )));
        }
        Ok(t)
    }

    pub fn pairs(&self) -> &[Block] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `r_n`, the strand count of the standard braid.
    pub fn width(&self) -> usize {
        self.pairs.last().map(|b| b.0).unwrap_or(1)
    }

    pub fn last(&self) -> Block {
        *self.pairs.last().expect("normalized T-links are nonempty")
    }

    /// `(σ_1…σ_{r_1-1})^{s_1} … (σ_1…σ_{r_n-1})^{s_n}` on `r_n` strands.
    pub fn braid(&self) -> BraidWord {
        let n = self.width();
        let blocks: Vec<BraidWord> = self
            .pairs
            .iter()
            .map(|&(r, s)| asc_block(n, r, s).expect("validated block"))
            .collect();
        BraidWord::product(n, &blocks).expect("blocks share the width")
    }

    pub fn crossing_count(&self) -> usize {
        self.pairs.iter().map(|&(r, s)| (r - 1) * s).sum()
    }

    pub fn is_knot(&self) -> bool {
        self.braid().components() == 1
    }
}

impl fmt::Display for TLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[")?;
        write_blocks(f, &self.pairs, false)?;
        write!(f, "]")
    }
}

/// `V((u_1, v̄_1), …, (u_m, v̄_m), (r_1, s_1), …, (r_n, s_n), (p, q))`.
///
/// Invariants: `2 <= u_1 < … < u_m <= p`, `2 <= r_1 < … < r_n < p`,
/// `p <= q`, all powers positive. Either side list may be empty; with
/// both empty the spec is the torus link `T(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VLinkSpec {
    rev: Vec<Block>,
    plain: Vec<Block>,
    torus: Block,
}

impl VLinkSpec {
    /// Build a V-link, dropping zero-power blocks, merging neighbours of
    /// equal size, folding a trailing plain block of size `p` and the full
    /// twists of an overlined block of size `p` (all of it when `p = 2`)
    /// into the torus block, then
    /// validating the ordering invariants.
    pub fn new(rev: Vec<Block>, plain: Vec<Block>, torus: Block) -> Result<Self> {
        let (p, mut q) = torus;
        let mut rev = merge_blocks(&rev);
        let mut plain = merge_blocks(&plain);
        // (σ_{p-1}…σ_1)^p is the central full twist, so whole twists in a
        // full-width overlined block move into the torus block. On two
        // strands the block is a power of σ_1 and moves entirely.
        if let Some(last) = rev.last_mut() {
            if last.0 == p && p >= 2 {
                let moved = if p == 2 { last.1 } else { p * (last.1 / p) };
                q += moved;
                last.1 -= moved;
                if last.1 == 0 {
                    rev.pop();
                }
            }
        }
        if let Some(&(r, s)) = plain.last() {
            if r == p {
                plain.pop();
                q += s;
            }
        }
        let v = VLinkSpec { rev, plain, torus: (p, q) };
        v.validate()?;
        Ok(v)
    }

    pub fn torus_only(p: usize, q: usize) -> Result<Self> {
        VLinkSpec::new(Vec::new(), Vec::new(), (p, q))
    }

    fn validate(&self) -> Result<()> {
        let (p, q) = self.torus;
        let bad = |m: String| Err(Error::InvalidParameters(m));
        if p == 0 || q == 0 {
            return bad(format!("torus block ({p},{q}) needs positive entries"));
        }
        if p > q {
            return bad(format!("torus block ({p},{q}) needs p <= q"));
        }
        if p == 1 && !(self.rev.is_empty() && self.plain.is_empty()) {
            return bad("side blocks need at least two strands".into());
        }
        increasing("overlined", &self.rev)?;
        increasing("plain", &self.plain)?;
        if let Some(&(u, _)) = self.rev.last() {
            if u > p {
                return bad(format!("overlined block size {u} exceeds p = {p}"));
            }
        }
        if let Some(&(r, _)) = self.plain.last() {
            if r >= p {
                return bad(format!("plain block size {r} must be below p = {p}"));
            }
        }
        Ok(())
    }

    /// Overlined blocks `(u_j, v_j)`.
    pub fn rev(&self) -> &[Block] {
        &self.rev
    }

    /// Plain blocks `(r_i, s_i)`.
    pub fn plain(&self) -> &[Block] {
        &self.plain
    }

    /// `(p, q)`, where `q` is the full exponent of the torus block.
    pub fn torus(&self) -> Block {
        self.torus
    }

    pub fn width(&self) -> usize {
        self.torus.0
    }

    pub fn is_torus(&self) -> bool {
        self.rev.is_empty() && self.plain.is_empty()
    }

    /// Crossings contributed by the side blocks:
    /// `Σ (r_i - 1) s_i + Σ (u_j - 1) v_j`.
    pub fn side_crossings(&self) -> usize {
        self.rev
            .iter()
            .chain(self.plain.iter())
            .map(|&(a, b)| (a - 1) * b)
            .sum()
    }

    /// Overlined blocks, then plain blocks, then `(σ_1…σ_{p-1})^q`.
    pub fn braid(&self) -> BraidWord {
        let (p, q) = self.torus;
        if p == 1 {
            return BraidWord::empty(1);
        }
        let mut parts = Vec::with_capacity(self.rev.len() + self.plain.len() + 1);
        parts.extend(
            self.rev
                .iter()
                .map(|&(u, v)| desc_right_block(p, u, v).expect("validated block")),
        );
        parts.extend(
            self.plain
                .iter()
                .map(|&(r, s)| asc_block(p, r, s).expect("validated block")),
        );
        parts.push(asc_block(p, p, q).expect("validated torus block"));
        BraidWord::product(p, &parts).expect("blocks share the width")
    }

    /// The presentation seen from the back of the projection plane:
    /// ascending left blocks for the overlined ones, right-aligned
    /// descending blocks for the plain ones, and `(σ_{p-1}…σ_1)^q`.
    pub fn alternate_braid(&self) -> BraidWord {
        let (p, q) = self.torus;
        if p == 1 {
            return BraidWord::empty(1);
        }
        let mut parts = Vec::with_capacity(self.rev.len() + self.plain.len() + 1);
        parts.extend(self.rev.iter().map(|&(u, v)| asc_block(p, u, v).expect("validated")));
        parts.extend(
            self.plain
                .iter()
                .map(|&(r, s)| desc_right_block(p, r, s).expect("validated")),
        );
        parts.push(desc_left_block(p, p, q).expect("validated"));
        BraidWord::product(p, &parts).expect("blocks share the width")
    }

    pub fn crossing_count(&self) -> usize {
        let (p, q) = self.torus;
        self.side_crossings() + (p - 1) * q
    }

    pub fn components(&self) -> usize {
        self.braid().components()
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }
}

impl fmt::Display for VLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V[")?;
        write_blocks(f, &self.rev, true)?;
        write!(f, ";")?;
        write_blocks(f, &self.plain, false)?;
        write!(f, ";({},{})]", self.torus.0, self.torus.1)
    }
}

/// A parsed link specification of either family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LinkSpec {
    T(TLinkSpec),
    V(VLinkSpec),
}

impl LinkSpec {
    pub fn braid(&self) -> BraidWord {
        match self {
            LinkSpec::T(t) => t.braid(),
            LinkSpec::V(v) => v.braid(),
        }
    }

    pub fn is_knot(&self) -> bool {
        self.braid().components() == 1
    }
}

impl fmt::Display for LinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkSpec::T(t) => t.fmt(f),
            LinkSpec::V(v) => v.fmt(f),
        }
    }
}

macro_rules! serialize_as_text {
    ($($ty:ty),*) => {$(
        /// Serialized as the canonical text form.
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_text!(TLinkSpec, VLinkSpec, LinkSpec);

fn merge_blocks(blocks: &[Block]) -> Vec<Block> {
    let mut out: Vec<Block> = Vec::with_capacity(blocks.len());
    for &(a, b) in blocks.iter().filter(|&&(_, b)| b > 0) {
        match out.last_mut() {
            Some(last) if last.0 == a => last.1 += b,
            _ => out.push((a, b)),
        }
    }
    out
}

fn increasing(what: &str, blocks: &[Block]) -> Result<()> {
    if let Some(&(a, _)) = blocks.first() {
        if a < 2 {
            return Err(Error::InvalidParameters(format!("{what} block size {a} is below 2")));
        }
    }
    for pair in blocks.windows(2) {
        if pair[0].0 >= pair[1].0 {
            return Err(Error::InvalidParameters(format!(
                "{what} block sizes must increase strictly, found {} then {}",
                pair[0].0, pair[1].0
            )));
        }
    }
    Ok(())
}

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Block], overlined: bool) -> fmt::Result {
    for (k, &(a, b)) in blocks.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        if overlined {
            write!(f, "({a},~{b})")?;
        } else {
            write!(f, "({a},{b})")?;
        }
    }
    Ok(())
}
