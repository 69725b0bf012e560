//! Reader for ideal files.
//!
//! ```text
//! # comment
//! ring QQ[x,y,z];
//! I = ideal(x^3, y^3, z^3, x*y*(x+y+z));
//! ```
//!
//! Statements end in `;`. A file holds one `ring` declaration followed by
//! any number of named ideals. Coefficients may be integers or rational
//! literals `a/b`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (lineno + 1, i + 1);
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    line,
                    col,
                });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            } else if "+-*^/()[],;=".contains(c) {
                out.push(Token {
                    tok: Tok::Sym(c),
                    line,
                    col,
                });
                i += 1;
            } else {
                return Err(Error::syntax(line, col, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}

/// A parsed ideal file: the ring and its named ideals in file order.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub ring: Ring,
    pub ideals: Vec<(String, Ideal)>,
}

impl SourceFile {
    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.ideals.iter().map(|(n, _)| n.as_str())
    }
}

/// Parses an ideal file using the field from its ring declaration.
pub fn parse_source(text: &str) -> Result<SourceFile> {
    parse_source_with_field(text, None)
}

/// Parses an ideal file, optionally replacing the declared field.
pub fn parse_source_with_field(text: &str, field: Option<FieldSpec>) -> Result<SourceFile> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring: None,
        end: end_position(text),
    };
    let mut ideals: Vec<(String, Ideal)> = Vec::new();
    while !p.at_end() {
        let (name, line, col) = p.ident()?;
        if name == "ring" {
            if p.ring.is_some() {
                return Err(Error::syntax(line, col, "ring declared twice"));
            }
            p.ring_decl(field)?;
            continue;
        }
        let ring = match &p.ring {
            Some(r) => r.clone(),
            None => return Err(Error::syntax(line, col, "ideal declared before ring")),
        };
        p.expect('=')?;
        p.keyword("ideal")?;
        p.expect('(')?;
        let mut gens = vec![p.expr()?];
        while p.eat(',') {
            gens.push(p.expr()?);
        }
        p.expect(')')?;
        p.expect(';')?;
        if ideals.iter().any(|(n, _)| *n == name) {
            return Err(Error::DuplicateIdeal(name));
        }
        ideals.push((name, Ideal::new(&ring, gens)));
    }
    let ring = p
        .ring
        .ok_or_else(|| Error::syntax(p.end.0, p.end.1, "missing ring declaration"))?;
    Ok(SourceFile { ring, ideals })
}

/// Parses a single polynomial expression in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        ring: Some(ring.clone()),
        end: end_position(text),
    };
    let f = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::syntax(t.line, t.col, "trailing input"));
    }
    Ok(f)
}

fn end_position(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.lines().collect();
    match lines.last() {
        Some(l) => (lines.len(), l.chars().count() + 1),
        None => (1, 1),
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ring: Option<Ring>,
    end: (usize, usize),
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(Error::syntax(l, c, msg))
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        match self.peek() {
            Some(Token {
                tok: Tok::Ident(s),
                line,
                col,
            }) => {
                let r = (s.clone(), *line, *col);
                self.pos += 1;
                Ok(r)
            }
            _ => self.err("expected identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let (l, c) = self.here();
        let (s, _, _) = self.ident()?;
        if s == kw {
            Ok(())
        } else {
            Err(Error::syntax(l, c, format!("expected `{kw}`")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Token { tok: Tok::Int(n), .. }) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected integer"),
        }
    }

    fn ring_decl(&mut self, override_field: Option<FieldSpec>) -> Result<()> {
        let (l, c) = self.here();
        let (kind, _, _) = self.ident()?;
        let field = match kind.as_str() {
            "QQ" => FieldSpec::Rationals,
            "ZZ" => {
                self.expect('/')?;
                let p = self.int()?;
                let p = p.to_u64().ok_or(Error::CharacteristicOutOfRange(u64::MAX))?;
                FieldSpec::prime(p)?
            }
            _ => return Err(Error::syntax(l, c, "expected `QQ` or `ZZ/p`")),
        };
        self.expect('[')?;
        let mut vars = Vec::new();
        loop {
            let (l, c) = self.here();
            let (v, _, _) = self.ident()?;
            if vars.contains(&v) {
                return Err(Error::syntax(l, c, format!("variable `{v}` declared twice")));
            }
            vars.push(v);
            if !self.eat(',') {
                break;
            }
        }
        self.expect(']')?;
        self.expect(';')?;
        self.ring = Some(RingContext::new(override_field.unwrap_or(field), vars)?);
        Ok(())
    }

    fn ring(&self) -> &Ring {
        self.ring.as_ref().expect("ring declared")
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    // unary := '-' unary | '+' unary | power
    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    // power := atom ('^' INT)?
    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let (l, c) = self.here();
            let e = self.int()?;
            let e = e
                .to_u32()
                .ok_or_else(|| Error::syntax(l, c, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    // atom := INT ('/' INT)? | ident | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial> {
        let Some(t) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        let field = self.ring().field();
        match t.tok {
            Tok::Int(n) => {
                self.pos += 1;
                if self.eat('/') {
                    let den = self.int()?;
                    let c = field.from_ratio(&n, &den).ok_or_else(|| {
                        Error::syntax(
                            t.line,
                            t.col,
                            format!("denominator {den} vanishes in {field}"),
                        )
                    })?;
                    Ok(Polynomial::constant(self.ring(), c))
                } else {
                    Ok(Polynomial::constant(self.ring(), field.from_bigint(&n)))
                }
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match self.ring().var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring(), i)),
                    None => Err(Error::UnknownVariable {
                        line: t.line,
                        column: t.col,
                        name,
                    }),
                }
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym(c) => self.err(format!("unexpected `{c}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_file() {
        let src = parse_source("ring QQ[x,y]; I = ideal(x+y);").unwrap();
        assert_eq!(src.ring.nvars(), 2);
        assert_eq!(src.ring.field(), FieldSpec::Rationals);
        assert_eq!(src.ideal("I").unwrap().gens().len(), 1);
    }

    #[test]
    fn product_expands_in_char_two() {
        let src = parse_source("ring ZZ/2[x,y,z]; I = ideal(x^3, x*y*(x+y+z));").unwrap();
        assert_eq!(src.ring.field(), FieldSpec::PrimeField(2));
        let g = &src.ideal("I").unwrap().gens()[1];
        assert_eq!(g.to_string(), "x^2*y + x*y^2 + x*y*z");
    }

    #[test]
    fn composite_characteristic() {
        assert_eq!(
            parse_source("ring ZZ/4[x];").unwrap_err(),
            Error::CompositeCharacteristic(4)
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_source("ring QQ[x,y];\nI = ideal(x + w);").unwrap_err();
        assert_eq!(
            e,
            Error::UnknownVariable {
                line: 2,
                column: 15,
                name: "w".into()
            }
        );
        let e = parse_source("ring QQ[x];\nI = ideal(x +);").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, column: 14, .. }), "{e:?}");
        let e = parse_source("ring QQ[x];\nI = ideal(x);\nI = ideal(x^2);").unwrap_err();
        assert_eq!(e, Error::DuplicateIdeal("I".into()));
        assert!(matches!(parse_source("I = ideal(x);"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_source("# nothing\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rational_literals() {
        let src = parse_source("ring QQ[x]; I = ideal(1/2*x - 3/4);").unwrap();
        assert_eq!(src.ideal("I").unwrap().gens()[0].to_string(), "1/2*x - 3/4");
        let src = parse_source("ring ZZ/5[x]; I = ideal(1/2*x);").unwrap();
        assert_eq!(src.ideal("I").unwrap().gens()[0].to_string(), "-2*x");
        assert!(matches!(
            parse_source("ring ZZ/3[x]; I = ideal(1/3*x);"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn comments_and_field_override() {
        let text = "# header\nring QQ[x,y]; # trailing\nJ = ideal(2*x - y^2);\n";
        let src = parse_source_with_field(text, Some(FieldSpec::PrimeField(2))).unwrap();
        assert_eq!(src.ideal("J").unwrap().gens()[0].to_string(), "y^2");
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let r = RingContext::with_names(FieldSpec::Rationals, &["x"]).unwrap();
        assert_eq!(parse_polynomial(&r, "-x^2").unwrap().to_string(), "-x^2");
        assert_eq!(parse_polynomial(&r, "(-x)^3").unwrap().to_string(), "-x^3");
    }
}
