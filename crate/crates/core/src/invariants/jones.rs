//! Jones polynomial of a braid closure through the Kauffman bracket.
//!
//! The braid is swept top to bottom while a linear combination of
//! Temperley–Lieb diagrams is maintained: each diagram is a non-crossing
//! matching of the `2n` boundary points (top `0..n`, bottom `n..2n`) and
//! each crossing contributes `A·id + A⁻¹·e_i`. Closing up counts loops.
//! The number of live diagrams is bounded by the Catalan number of `n`,
//! while the crossing limit bounds the degree.
//!
//! Output convention: the polynomial is returned in `s = t^{1/2}`, so a
//! knot has only even exponents. Positive braids land on the
//! negative-exponent side, e.g. the closure of `σ₁³` gives
//! `-s^-8 + s^-6 + s^-2`.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::invariants::laurent::LaurentPoly;

pub const DEFAULT_JONES_LIMIT: usize = 16;

type Poly = LaurentPoly<i64>;

/// `d = -A^2 - A^-2`, the value of a removable loop.
fn loop_value() -> Poly {
    Poly::from_terms([(2, -1), (-2, -1)])
}

/// Kauffman bracket `<D>` in `A`, normalized so the empty closure on one
/// strand is `1`.
pub fn kauffman_bracket(w: &BraidWord) -> Poly {
    let n = w.strands();
    let identity: Vec<u16> = (0..2 * n).map(|k| ((k + n) % (2 * n)) as u16).collect();
    let mut states: HashMap<Vec<u16>, Poly> = HashMap::new();
    states.insert(identity, Poly::one());
    let d = loop_value();
    let a = Poly::monomial(1, 1);
    let a_inv = Poly::monomial(1, -1);

    for &letter in w.letters() {
        let (x, y) = (n + letter - 1, n + letter);
        let mut next: HashMap<Vec<u16>, Poly> = HashMap::with_capacity(states.len() * 2);
        for (diagram, coeff) in states {
            let (smoothed, closed_loop) = cap_and_cup(&diagram, x, y);
            let b_coeff = if closed_loop { &(&coeff * &a_inv) * &d } else { &coeff * &a_inv };
            accumulate(&mut next, smoothed, b_coeff);
            accumulate(&mut next, diagram, &coeff * &a);
        }
        states = next;
    }

    let mut total = Poly::zero();
    for (diagram, coeff) in states {
        let loops = closure_loops(&diagram, n);
        total = &total + &(&coeff * &d.pow(loops as u32 - 1));
    }
    total
}

fn accumulate(map: &mut HashMap<Vec<u16>, Poly>, key: Vec<u16>, value: Poly) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(existing) => {
            let sum = &*existing + &value;
            if sum.is_zero() {
                map.remove(&key);
            } else {
                *existing = sum;
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

/// Stack `e_i` under `diagram`: the bottom points `x` and `y` are capped
/// off and a fresh cup joins them again. Reports whether the cap closed a
/// loop.
fn cap_and_cup(diagram: &[u16], x: usize, y: usize) -> (Vec<u16>, bool) {
    let mut out = diagram.to_vec();
    let px = diagram[x] as usize;
    let py = diagram[y] as usize;
    let closed = px == y;
    if !closed {
        out[px] = py as u16;
        out[py] = px as u16;
    }
    out[x] = y as u16;
    out[y] = x as u16;
    (out, closed)
}

/// Loops formed by joining top point `k` to bottom point `n + k`.
fn closure_loops(diagram: &[u16], n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = diagram[p] as usize;
            seen[q] = true;
            // Leave through the closure arc on the other side.
            p = if q < n { q + n } else { q - n };
            if seen[p] {
                break;
            }
        }
    }
    loops
}

/// Jones polynomial in `s = t^{1/2}` from a bracket in `A`, using
/// `V = (-A^3)^{-w} <D>` and `A = s^{1/2}`.
pub fn jones_from_bracket(bracket: &Poly, writhe: i64) -> Poly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let corrected = bracket.shift(-3 * writhe).scale(&sign);
    LaurentPoly::from_terms(corrected.terms().map(|(e, &c)| {
        assert!(e % 2 == 0, "bracket exponent {e} is not even after writhe correction");
        (e / 2, c)
    }))
}

/// Jones polynomial of the closure, or `None` when the word has more
/// than `limit` crossings.
pub fn kauffman_jones(w: &BraidWord, limit: usize) -> Option<Poly> {
    if w.crossing_count() > limit {
        return None;
    }
    let bracket = kauffman_bracket(w);
    Some(jones_from_bracket(&bracket, w.crossing_count() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::asc_block;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> Poly {
        Poly::from_terms(terms.iter().copied())
    }

    #[test]
    fn trefoil_and_unknots() {
        assert_eq!(kauffman_jones(&w(2, &[1, 1, 1]), 16).unwrap(), poly(&[(-8, -1), (-6, 1), (-2, 1)]));
        assert_eq!(kauffman_jones(&w(2, &[1]), 16).unwrap(), Poly::one());
        assert_eq!(kauffman_jones(&w(3, &[1, 2]), 16).unwrap(), Poly::one());
        assert_eq!(kauffman_jones(&BraidWord::empty(1), 16).unwrap(), Poly::one());
    }

    #[test]
    fn hopf_link_and_unlink() {
        // -t^{-1/2} - t^{-5/2}
        assert_eq!(kauffman_jones(&w(2, &[1, 1]), 16).unwrap(), poly(&[(-1, -1), (-5, -1)]));
        // two-component unlink: -t^{1/2} - t^{-1/2}
        assert_eq!(kauffman_jones(&BraidWord::empty(2), 16).unwrap(), poly(&[(1, -1), (-1, -1)]));
    }

    #[test]
    fn torus_knot_three_four() {
        // V(T(3,4)) mirrored: -t^-8 + t^-5 + t^-3 in the negative convention
        let v = kauffman_jones(&asc_block(3, 3, 4).unwrap(), 16).unwrap();
        assert_eq!(v, poly(&[(-16, -1), (-10, 1), (-6, 1)]));
    }

    #[test]
    fn limit_is_respected() {
        assert!(kauffman_jones(&w(2, &[1; 5]), 4).is_none());
        assert!(kauffman_jones(&w(2, &[1; 5]), 5).is_some());
    }
}
