//! Positive braid words and the elementary operations on them.
//!
//! Letters are 1-based generator indices: letter `i` is the positive
//! crossing `σ_i` between strands `i` and `i + 1`. Words are immutable
//! values; every operation returns a new word.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParameters("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::LetterOutOfRange { strands, letter: bad });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    /// `strands - crossings`, the Euler characteristic of the fiber surface
    /// of a positive braid closure.
    pub fn euler_char(&self) -> i64 {
        self.strands as i64 - self.letters.len() as i64
    }

    /// The same letters viewed on `width >= strands` strands.
    pub fn widen(&self, width: usize) -> Result<Self> {
        if width < self.strands {
            return Err(Error::WidthMismatch { left: self.strands, right: width });
        }
        Ok(BraidWord { strands: width, letters: self.letters.clone() })
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::WidthMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Concatenate a sequence of words sharing one width.
    pub fn product<'a, I>(strands: usize, parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        parts
            .into_iter()
            .try_fold(BraidWord::empty(strands), |acc, w| acc.concat(w))
    }

    /// Turn the projection plane over along the horizontal axis:
    /// `σ_i ↦ σ_{n-i}` with the letter order kept.
    pub fn rotate180(&self) -> Self {
        let n = self.strands;
        BraidWord {
            strands: n,
            letters: self.letters.iter().map(|&i| n - i).collect(),
        }
    }

    pub fn permutation(&self) -> StrandPermutation {
        // occupant[pos] = strand that currently sits at position pos
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for &i in &self.letters {
            occupant.swap(i - 1, i);
        }
        let mut image = vec![0; self.strands];
        for (pos, &strand) in occupant.iter().enumerate() {
            image[strand] = pos;
        }
        StrandPermutation { image }
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Markov destabilization on the rightmost strand.
    ///
    /// Succeeds only when `σ_{n-1}` occurs exactly once and every letter
    /// after it commutes with it (index at most `n - 3`), so the letter can
    /// be slid to the end of the word and removed.
    pub fn destabilize_right(&self) -> Result<Self> {
        let n = self.strands;
        if n < 2 {
            return Err(Error::NotDestabilizable { strands: n, reason: "fewer than two strands" });
        }
        let top = n - 1;
        let hits: Vec<usize> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &i)| i == top)
            .map(|(k, _)| k)
            .collect();
        let at = match hits.as_slice() {
            [k] => *k,
            [] => {
                return Err(Error::NotDestabilizable {
                    strands: n,
                    reason: "last generator does not occur",
                })
            }
            _ => {
                return Err(Error::NotDestabilizable {
                    strands: n,
                    reason: "last generator occurs more than once",
                })
            }
        };
        if self.letters[at + 1..].iter().any(|&i| i + 2 > top) {
            return Err(Error::NotDestabilizable {
                strands: n,
                reason: "last generator is blocked by a non-commuting letter",
            });
        }
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != at)
            .map(|(_, &i)| i)
            .collect();
        Ok(BraidWord { strands: n - 1, letters })
    }

    /// Whether `(σ_1 … σ_{r-1})^r` occurs as a consecutive subword.
    ///
    /// Syntactic test only: it recognizes the full twist in the contiguous
    /// form every constructor here emits, not every word equal to it in the
    /// braid group.
    pub fn has_full_twist(&self, r: usize) -> bool {
        if r == 0 || r > self.strands {
            return false;
        }
        if r == 1 {
            return true;
        }
        let twist: Vec<usize> = (0..r).flat_map(|_| 1..r).collect();
        self.letters.windows(twist.len()).any(|w| w == twist.as_slice())
    }
}

fn check_block(width: usize, size: usize) -> Result<()> {
    if size < 2 || size > width {
        return Err(Error::BlockOutOfRange { width, size });
    }
    Ok(())
}

fn repeat(width: usize, unit: Vec<usize>, times: usize) -> BraidWord {
    let letters = unit.iter().copied().cycle().take(unit.len() * times).collect();
    BraidWord { strands: width, letters }
}

/// `(σ_1 σ_2 … σ_{r-1})^s` on `width` strands.
pub fn asc_block(width: usize, r: usize, s: usize) -> Result<BraidWord> {
    check_block(width, r)?;
    Ok(repeat(width, (1..r).collect(), s))
}

/// `(σ_{p-1} σ_{p-2} … σ_{p-u+1})^v`: a descending block hugging the
/// right edge of a width-`p` braid.
pub fn desc_right_block(p: usize, u: usize, v: usize) -> Result<BraidWord> {
    check_block(p, u)?;
    Ok(repeat(p, (p - u + 1..p).rev().collect(), v))
}

/// `(σ_{r-1} … σ_1)^s`: a descending block on the leftmost `r` strands.
pub fn desc_left_block(width: usize, r: usize, s: usize) -> Result<BraidWord> {
    check_block(width, r)?;
    Ok(repeat(width, (1..r).rev().collect(), s))
}

/// `(σ_1 … σ_{r-1})^s`, the ascending block that takes the place of a
/// descending right-edge block once the plane is turned over.
pub fn asc_right_block(width: usize, r: usize, s: usize) -> Result<BraidWord> {
    asc_block(width, r, s)
}

/// `(σ_{lo} σ_{lo+1} … σ_{hi})^times` for `1 <= lo`, `hi < width`;
/// empty when `lo > hi`.
pub(crate) fn ascending_run(width: usize, lo: usize, hi: usize, times: usize) -> BraidWord {
    debug_assert!(lo >= 1 && (hi < width || lo > hi));
    repeat(width, (lo..=hi).collect(), times)
}

/// `(σ_{hi} σ_{hi-1} … σ_{lo})^times`; empty when `lo > hi`.
pub(crate) fn descending_run(width: usize, hi: usize, lo: usize, times: usize) -> BraidWord {
    debug_assert!(lo >= 1 && (hi < width || lo > hi));
    repeat(width, (lo..=hi).rev().collect(), times)
}

/// Bijection of strand positions `0..n` induced by a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        StrandPermutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// 0-based image of the 0-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn block_constructors() {
        assert_eq!(asc_block(3, 3, 2).unwrap().letters(), &[1, 2, 1, 2]);
        assert!(asc_block(5, 2, 0).unwrap().is_empty());
        let big = asc_block(5, 5, 5).unwrap();
        assert_eq!(big.crossing_count(), 20);
        assert_eq!(&big.letters()[..4], &[1, 2, 3, 4]);
        assert!(asc_block(3, 4, 1).is_err());
        assert!(asc_block(3, 1, 1).is_err());

        assert_eq!(desc_right_block(5, 2, 2).unwrap().letters(), &[4, 4]);
        assert_eq!(desc_right_block(5, 3, 2).unwrap().letters(), &[4, 3, 4, 3]);
        assert!(desc_right_block(4, 4, 0).unwrap().is_empty());
        assert!(desc_right_block(4, 5, 1).is_err());

        assert_eq!(desc_left_block(3, 3, 1).unwrap().letters(), &[2, 1]);
        let d = desc_left_block(5, 5, 5).unwrap();
        assert_eq!(d.letters(), [4, 3, 2, 1].repeat(5).as_slice());
        assert_eq!(asc_right_block(4, 2, 3).unwrap().letters(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn concat_widths() {
        let e = BraidWord::empty(5);
        let x = asc_block(5, 3, 2).unwrap();
        assert_eq!(e.concat(&x).unwrap(), x);
        let y = asc_block(5, 5, 5).unwrap();
        assert_eq!(x.concat(&y).unwrap().crossing_count(), 24);
        assert!(x.concat(&BraidWord::empty(4)).is_err());
    }

    #[test]
    fn rotation_of_the_five_strand_word() {
        let original = w(5, &[4, 4, 4, 3, 4, 3, 1, 2, 1, 2])
            .concat(&asc_block(5, 5, 5).unwrap())
            .unwrap();
        let expected = w(5, &[1, 1, 1, 2, 1, 2, 4, 3, 4, 3])
            .concat(&desc_left_block(5, 5, 5).unwrap())
            .unwrap();
        assert_eq!(original.rotate180(), expected);
        assert_eq!(BraidWord::empty(3).rotate180(), BraidWord::empty(3));
    }

    #[test]
    fn component_counts() {
        assert_eq!(w(2, &[1, 1, 1]).components(), 1);
        assert_eq!(w(2, &[1, 1]).components(), 2);
        assert_eq!(BraidWord::empty(4).components(), 4);
        // Closure of (σ_1 … σ_{p-1})^q: the q-th power of a p-cycle has
        // gcd(p, q) cycles.
        for p in 2..=8usize {
            for q in 1..=8usize {
                let t = asc_block(p, p, q).unwrap();
                assert_eq!(t.components(), p.gcd(&q), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn destabilization() {
        assert_eq!(w(3, &[1, 2]).destabilize_right().unwrap(), w(2, &[1]));
        assert!(matches!(
            w(2, &[1, 1, 1]).destabilize_right(),
            Err(Error::NotDestabilizable { .. })
        ));
        // σ_3 followed by σ_2 cannot slide past it.
        assert!(w(4, &[3, 2]).destabilize_right().is_err());
        assert_eq!(w(4, &[3, 1]).destabilize_right().unwrap(), w(3, &[1]));
        // T((2,3),(4,1)) -> T((2,4))
        let t = w(4, &[1, 1, 1, 1, 2, 3]);
        let d = t.destabilize_right().unwrap().destabilize_right().unwrap();
        assert_eq!(d, w(2, &[1, 1, 1, 1]));
    }

    #[test]
    fn euler_characteristic() {
        let x = asc_block(3, 3, 2).unwrap();
        assert_eq!((x.crossing_count(), x.euler_char()), (4, -1));
        assert_eq!(w(2, &[1, 1, 1]).euler_char(), -1);
    }

    #[test]
    fn full_twist_detection() {
        assert!(asc_block(3, 3, 3).unwrap().has_full_twist(3));
        assert!(!asc_block(3, 3, 2).unwrap().has_full_twist(3));
        assert!(w(3, &[2, 1, 1, 1]).has_full_twist(2));
        assert!(!w(3, &[2]).has_full_twist(4));
    }

    fn arb_word() -> impl Strategy<Value = BraidWord> {
        (2usize..7).prop_flat_map(|n| {
            proptest::collection::vec(1..n, 0..30).prop_map(move |l| BraidWord::new(n, l).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rotate_is_an_involution(x in arb_word()) {
            prop_assert_eq!(x.rotate180().rotate180(), x.clone());
            prop_assert_eq!(x.rotate180().crossing_count(), x.crossing_count());
            prop_assert_eq!(x.rotate180().permutation().cycle_type(), x.permutation().cycle_type());
        }

        #[test]
        fn components_bounded_and_twist_stable(x in arb_word()) {
            let n = x.strands();
            let c = x.components();
            prop_assert!(c >= 1 && c <= n);
            let twisted = x.concat(&asc_block(n, n, n).unwrap()).unwrap();
            prop_assert_eq!(twisted.components(), c);
        }

        #[test]
        fn concat_is_associative(a in arb_word(), seed in proptest::collection::vec(1usize..100, 0..20)) {
            let n = a.strands();
            let b = BraidWord::new(n, seed.iter().map(|s| 1 + s % (n - 1)).collect()).unwrap();
            let c = b.rotate180();
            prop_assert_eq!(
                a.concat(&b.concat(&c).unwrap()).unwrap(),
                a.concat(&b).unwrap().concat(&c).unwrap()
            );
        }
    }
}
