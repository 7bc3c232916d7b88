//! The ideal text format.
//!
//! ```text
//! input   := [ "ring" INT [";" | ":"] ] body
//! body    := "" | "0" | term { "," term }
//! term    := "1" | factor { "*" factor }
//! factor  := "x" INT [ "^" INT ]
//! ```
//!
//! Whitespace is insignificant. Variables are 1-based. Without a `ring`
//! header the ring is the largest variable index that occurs.

use std::fmt;

use stanley_core::{Monomial, MonomialIdeal, MAX_VARS};

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(format!("expected {what}"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError { offset: start, message: format!("{what} out of range") })
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Exponent vectors as `(variable, exponent)` lists, before the ring is known.
type RawTerm = Vec<(usize, u32)>;

/// Parse `text` into a minimalized ideal.
///
/// `ring` overrides the header and the inferred ring size. Exponents above
/// `exponent_cap` are rejected.
pub fn parse_ideal(text: &str, ring: Option<usize>, exponent_cap: u32) -> Result<MonomialIdeal, ParseError> {
    let mut sc = Scanner { src: text.as_bytes(), pos: 0 };
    let mut header = None;
    if sc.keyword("ring") {
        let at = sc.pos;
        let n = sc.int("number of variables after `ring`")?;
        header = Some((n as usize, at));
        if !sc.eat(b';') {
            sc.eat(b':');
        }
    }

    let mut terms: Vec<(RawTerm, usize)> = Vec::new();
    let mut zero = false;
    if !sc.at_end() {
        if sc.peek() == Some(b'0') {
            let at = sc.pos;
            sc.pos += 1;
            if !sc.at_end() {
                return Err(ParseError { offset: at, message: "`0` must be the whole ideal".into() });
            }
            zero = true;
        } else {
            loop {
                let at = sc.pos;
                terms.push((term(&mut sc, exponent_cap)?, at));
                if sc.at_end() {
                    break;
                }
                if !sc.eat(b',') {
                    return sc.error("expected `,` or end of input");
                }
            }
        }
    }

    let largest = terms.iter().flat_map(|(t, _)| t.iter().map(|&(i, _)| i + 1)).max().unwrap_or(0);
    let n = match (ring, header) {
        (Some(n), _) => n,
        (None, Some((n, _))) => n,
        (None, None) if largest > 0 => largest,
        (None, None) => {
            return Err(ParseError { offset: 0, message: "cannot infer the ring; give `ring <n>` or --ring".into() })
        }
    };
    let at = header.map_or(0, |h| h.1);
    if n == 0 || n > MAX_VARS {
        return Err(ParseError { offset: at, message: format!("ring size {n} outside 1..={MAX_VARS}") });
    }
    if largest > n {
        return Err(ParseError { offset: at, message: format!("variable x{largest} outside a ring of {n} variables") });
    }
    if zero {
        return Ok(MonomialIdeal::zero(n));
    }
    let gens = terms
        .into_iter()
        .map(|(t, _)| {
            let mut e = vec![0u32; n];
            for (i, x) in t {
                e[i] += x;
            }
            Monomial::new(e)
        })
        .collect::<Vec<_>>();
    let ideal = MonomialIdeal::new(n, gens).expect("ring checked above");
    if let Err(stanley_core::Error::ExponentCap { exponent, cap }) = ideal.check_exponent_cap(exponent_cap) {
        return Err(ParseError { offset: 0, message: format!("exponent {exponent} exceeds the cap {cap}") });
    }
    Ok(ideal)
}

fn term(sc: &mut Scanner<'_>, exponent_cap: u32) -> Result<RawTerm, ParseError> {
    if sc.peek() == Some(b'1') {
        sc.pos += 1;
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    loop {
        if !sc.eat(b'x') {
            return sc.error("expected a variable `x<i>`");
        }
        let at = sc.pos;
        let i = sc.int("variable index")?;
        if i == 0 || i > MAX_VARS as u64 {
            return Err(ParseError { offset: at, message: format!("variable index {i} outside 1..={MAX_VARS}") });
        }
        let mut e = 1u64;
        if sc.eat(b'^') {
            let at = sc.pos;
            e = sc.int("exponent")?;
            if e > u64::from(exponent_cap) {
                return Err(ParseError { offset: at, message: format!("exponent {e} exceeds the cap {exponent_cap}") });
            }
        }
        out.push((i as usize - 1, e as u32));
        if !sc.eat(b'*') {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<MonomialIdeal, ParseError> {
        parse_ideal(s, None, 64)
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    #[test]
    fn example_ideal() {
        assert_eq!(parse("x1^2, x2*x3").unwrap(), ideal(3, &[&[2, 0, 0], &[0, 1, 1]]));
        assert_eq!(parse("  x1 ^ 2 ,x2 *  x3 ").unwrap(), ideal(3, &[&[2, 0, 0], &[0, 1, 1]]));
    }

    #[test]
    fn minimalizes() {
        assert_eq!(parse("x1, x1^2").unwrap(), ideal(1, &[&[1]]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse("x1^^2").unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(parse("x1, y2").unwrap_err().offset, 4);
        assert_eq!(parse("x1 x2").unwrap_err().offset, 3);
        assert!(parse("x0").is_err());
        assert!(parse("x1,").is_err());
        assert!(parse("x1^").is_err());
    }

    #[test]
    fn ring_header_and_override() {
        assert_eq!(parse("ring 4; x1").unwrap().nvars(), 4);
        assert_eq!(parse("ring 4 x1*x2").unwrap().nvars(), 4);
        assert_eq!(parse_ideal("x1", Some(3), 64).unwrap().nvars(), 3);
        assert!(parse("ring 2: x3").is_err());
        assert!(parse_ideal("x3", Some(2), 64).is_err());
    }

    #[test]
    fn zero_and_unit() {
        assert!(parse("ring 2: 0").unwrap().is_zero());
        assert!(parse("ring 2").unwrap().is_zero());
        assert!(parse("ring 2: 1, x1").unwrap().is_unit());
        assert!(parse("0").is_err());
        assert!(parse("ring 2: 0, x1").is_err());
    }

    #[test]
    fn exponent_cap() {
        assert!(parse_ideal("x1^65", None, 64).is_err());
        assert!(parse_ideal("x1^64", None, 64).is_ok());
        assert!(parse_ideal("x1^3", None, 2).is_err());
        // repeated factors multiply
        assert!(parse_ideal("x1^2*x1^2", None, 3).is_err());
        assert_eq!(parse("x1*x1").unwrap(), ideal(1, &[&[2]]));
    }

    #[test]
    fn display_round_trips() {
        for s in ["x1^2, x2*x3", "x1*x2^3, x3", "ring 5: x2*x4, x5^2"] {
            let i = parse(s).unwrap();
            assert_eq!(parse_ideal(&i.to_string(), Some(i.nvars()), 64).unwrap(), i);
        }
    }

    proptest::proptest! {
        #[test]
        fn display_round_trips_random_ideals(
            n in 1usize..=6,
            gens in proptest::collection::vec(proptest::collection::vec(0u32..=5, 6), 1..=5),
        ) {
            let gens: Vec<Monomial> = gens.into_iter().map(|g| Monomial::new(g[..n].to_vec())).collect();
            let i = MonomialIdeal::new(n, gens).unwrap();
            let text = format!("ring {n}: {i}");
            proptest::prop_assert_eq!(parse(&text).unwrap(), i);
        }
    }
}
