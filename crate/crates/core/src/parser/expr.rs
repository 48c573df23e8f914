use super::{ParseError, ParseErrorKind};
use crate::poly::{Monomial, Polynomial, RingRef};

/// Exponent cap for bases with more than one term.
const MAX_EXPANDED_EXPONENT: u64 = 255;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(src: &str, line0: usize, col0: usize) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Num(s), l, k));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Ident(s), l, k));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::new(
                    l,
                    k,
                    ParseErrorKind::Unexpected {
                        found: format!("character `{other}`"),
                        expected: "an expression".into(),
                    },
                ))
            }
        };
        chars.next();
        col += 1;
        toks.push((tok, l, k));
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let (l, c) = self.here();
        ParseError::new(
            l,
            c,
            ParseErrorKind::Unexpected { found: self.peek().describe(), expected: expected.into() },
        )
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Tok::Minus => {
                    negate = !negate;
                    self.bump();
                }
                Tok::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (l, c) = self.here();
        let e = match self.peek().clone() {
            Tok::Num(digits) => {
                self.bump();
                digits.parse::<u64>().map_err(|_| {
                    ParseError::new(l, c, ParseErrorKind::ExponentTooLarge(u64::MAX))
                })?
            }
            Tok::Minus => return Err(ParseError::new(l, c, ParseErrorKind::NegativeExponent)),
            _ => return Err(self.error("a natural-number exponent")),
        };
        let cap = if base.len() <= 1 { u32::MAX as u64 / 2 } else { MAX_EXPANDED_EXPONENT };
        if e > cap {
            return Err(ParseError::new(l, c, ParseErrorKind::ExponentTooLarge(e)));
        }
        let e = e as u32;
        if base.len() == 1 {
            let (m, coef) = &base.terms()[0];
            let f = self.ring.field();
            return Ok(Polynomial::term(self.ring, f.pow(*coef, e as u64) as i64, m.pow(e)));
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let (l, c) = self.here();
        match self.peek().clone() {
            Tok::Num(digits) => {
                self.bump();
                let q = self.ring.field().order() as u64;
                let v = digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % q);
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::term(self.ring, 1, Monomial::var(i, self.ring.nvars()))),
                    None => Err(ParseError::new(l, c, ParseErrorKind::UnknownIdentifier(name))),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a number, variable, or `(`")),
        }
    }
}

/// Parse an expression into a polynomial of `ring`. Integer literals are
/// reduced modulo the field characteristic.
pub fn parse_polynomial(src: &str, ring: &RingRef) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(src, ring, 1, 1)
}

/// As [`parse_polynomial`], reporting positions relative to `(line, column)`.
pub fn parse_polynomial_at(
    src: &str,
    ring: &RingRef,
    line: usize,
    column: usize,
) -> Result<Polynomial, ParseError> {
    let lexer = lex(src, line, column)?;
    let mut p = Parser { toks: lexer.toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, Ring};
    use proptest::prelude::*;

    fn ring(q: u64, vars: &[&str]) -> RingRef {
        Ring::new(PrimeField::new(q).unwrap(), vars.iter().copied(), MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn parses_examples() {
        let r = ring(5, &["y1", "y2"]);
        let p = parse_polynomial("y1*y2", &r).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].0.exponents(), &[1, 1]);
        assert_eq!(p.terms()[0].1, 1);

        let c = parse_polynomial("7", &r).unwrap();
        assert_eq!(c, Polynomial::constant(&r, 2));

        let r2 = ring(2, &["y1"]);
        let sq = parse_polynomial("(y1+1)^2", &r2).unwrap();
        assert_eq!(sq, parse_polynomial("y1^2 + 1", &r2).unwrap());
    }

    #[test]
    fn unary_minus_and_precedence() {
        let r = ring(5, &["a", "b"]);
        let p = parse_polynomial("-a + 2*b^2 - -a", &r).unwrap();
        assert_eq!(p, parse_polynomial("2*b^2", &r).unwrap());
        let p = parse_polynomial("a - b*a^2", &r).unwrap();
        assert_eq!(p.render(), "4*a^2*b + a");
    }

    #[test]
    fn reports_errors_with_positions() {
        let r = ring(5, &["y1", "y2"]);
        let e = parse_polynomial("y1y2", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("y1y2".into()));
        assert_eq!((e.line, e.column), (1, 1));

        let e = parse_polynomial("y1 + y3", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("y3".into()));
        assert_eq!(e.column, 6);

        let e = parse_polynomial("y1^-2", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NegativeExponent);

        let e = parse_polynomial("(y1 + 1", &r).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Unexpected { .. }));
        assert_eq!(e.column, 8);

        assert!(parse_polynomial("", &r).is_err());
        assert!(parse_polynomial("y1 y2", &r).is_err());
        assert!(parse_polynomial("y1 / y2", &r).is_err());
        assert!(matches!(
            parse_polynomial("(y1+y2)^1000", &r).unwrap_err().kind,
            ParseErrorKind::ExponentTooLarge(1000)
        ));
    }

    fn expr_strategy() -> impl Strategy<Value = String> {
        let leaf = prop_oneof![
            (0u32..20).prop_map(|n| n.to_string()),
            Just("x".to_string()),
            Just("y".to_string()),
            Just("z".to_string()),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
                (inner.clone(), 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
                inner.prop_map(|a| format!("(-({a}))")),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_reparses_to_same_polynomial(src in expr_strategy(), q in prop::sample::select(vec![2u64, 3, 5, 7])) {
            let r = ring(q, &["x", "y", "z"]);
            let p = parse_polynomial(&src, &r).unwrap();
            let back = parse_polynomial(&p.render(), &r).unwrap();
            prop_assert_eq!(p, back);
        }

        #[test]
        fn arbitrary_input_never_panics(src in "[xyz0-9+*^() \\-/a]{0,40}") {
            let r = ring(3, &["x", "y", "z"]);
            let _ = parse_polynomial(&src, &r);
        }
    }
}
