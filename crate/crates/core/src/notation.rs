//! Text form of link specifications.
//!
//! ```text
//! T[(r,s),(r,s),...]
//! V[(u,~v),...;(r,s),...;(p,q)]
//! ```
//!
//! `~` marks an overlined block. Whitespace is ignored and either side
//! list of a V-link may be empty. The `Display` impls of the spec types
//! print this same form.

use crate::error::{Error, Result};
use crate::params::{Block, LinkSpec, TLinkSpec, VLinkSpec};

/// Parse, validate and normalize a spec string.
pub fn parse_spec(text: &str) -> Result<LinkSpec> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let spec = match p.peek() {
        Some('T') => {
            p.bump();
            p.expect('[')?;
            let pairs = p.block_list(']', Overline::Forbidden)?;
            p.expect(']')?;
            LinkSpec::T(TLinkSpec::normalize(&pairs)?)
        }
        Some('V') => {
            p.bump();
            p.expect('[')?;
            let rev = p.block_list(';', Overline::Required)?;
            p.expect(';')?;
            let plain = p.block_list(';', Overline::Forbidden)?;
            p.expect(';')?;
            let torus = p.block(Overline::Forbidden)?;
            p.expect(']')?;
            LinkSpec::V(VLinkSpec::new(rev, plain, torus)?)
        }
        _ => return Err(p.error("expected 'T[' or 'V['")),
    };
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(spec)
}

pub fn parse_t(text: &str) -> Result<TLinkSpec> {
    match parse_spec(text)? {
        LinkSpec::T(t) => Ok(t),
        LinkSpec::V(_) => Err(Error::Syntax { position: 0, message: "expected a T-link".into() }),
    }
}

pub fn parse_v(text: &str) -> Result<VLinkSpec> {
    match parse_spec(text)? {
        LinkSpec::V(v) => Ok(v),
        LinkSpec::T(_) => Err(Error::Syntax { position: 0, message: "expected a V-link".into() }),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Overline {
    Required,
    Forbidden,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a decimal integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax { position: start, message: "integer out of range".into() })
    }

    fn block(&mut self, overline: Overline) -> Result<Block> {
        self.expect('(')?;
        let a = self.number()?;
        self.expect(',')?;
        self.skip_ws();
        let marked = self.peek() == Some('~');
        match (marked, overline) {
            (true, Overline::Forbidden) => return Err(self.error("'~' is only allowed in the first V-link list")),
            (false, Overline::Required) => return Err(self.error("expected '~' marking an overlined block")),
            (true, Overline::Required) => self.bump(),
            (false, Overline::Forbidden) => {}
        }
        let b = self.number()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn block_list(&mut self, end: char, overline: Overline) -> Result<Vec<Block>> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(end) {
            return Ok(out);
        }
        loop {
            out.push(self.block(overline)?);
            self.skip_ws();
            if self.peek() == Some(',') {
                self.bump();
            } else {
                return Ok(out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_t("T[(2,3)]").unwrap().pairs(), &[(2, 3)]);
        let v = parse_v("V[(2,~2),(3,~2);(3,2);(5,5)]").unwrap();
        assert_eq!(v.rev(), &[(2, 2), (3, 2)]);
        assert_eq!(v.plain(), &[(3, 2)]);
        assert_eq!(v.torus(), (5, 5));
        assert_eq!(parse_spec("T[(3,0)]"), Err(Error::EmptyLink));
        let v = parse_v(" V [ ; ( 2 , 2 ) ; ( 5 , 7 ) ] ").unwrap();
        assert_eq!(v.to_string(), "V[;(2,2);(5,7)]");
        assert_eq!(parse_v("V[;;(3,4)]").unwrap().torus(), (3, 4));
    }

    #[test]
    fn reports_positions() {
        match parse_spec("T[(2,3)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_spec("X[(2,3)]"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_spec("V[(2,2);;(3,3)]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_spec("V[;(2,~2);(3,3)]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_spec("T[(2,3)] x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_spec("V[;(4,1);(3,3)]"), Err(Error::InvalidParameters(_))));
    }

    fn arb_v() -> impl Strategy<Value = VLinkSpec> {
        (2usize..9, 0usize..6).prop_flat_map(|(p, extra)| {
            let rev = proptest::collection::btree_map(2..=p, 1usize..5, 0..3);
            let plain = proptest::collection::btree_map(2..p.max(3), 1usize..5, 0..3);
            (rev, plain).prop_filter_map("valid", move |(rev, plain)| {
                let plain: Vec<Block> = plain.into_iter().filter(|&(r, _)| r < p).collect();
                VLinkSpec::new(rev.into_iter().collect(), plain, (p, p + extra)).ok()
            })
        })
    }

    proptest! {
        #[test]
        fn v_text_round_trips(v in arb_v()) {
            prop_assert_eq!(parse_v(&v.to_string()).unwrap(), v);
        }

        #[test]
        fn t_text_round_trips(raw in proptest::collection::btree_map(2usize..12, 1usize..6, 1..5)) {
            let t = TLinkSpec::normalize(&raw.into_iter().collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(parse_t(&t.to_string()).unwrap(), t);
        }
    }
}
