//! Lie expressions and words acting on the highest weight vector.
//!
//! ```text
//! expr  := ('+'|'-')? term (('+'|'-') term)*
//! term  := rational? atom
//! atom  := 'L[' int ',' int ']' | 'C' | '[' expr ',' expr ']' | '(' expr ')'
//! word  := atom ('.' atom)* '.v'
//! input := ('+'|'-')? wterm (('+'|'-') wterm)*      wterm := rational? (word | 'v')
//! ```
//!
//! Whitespace (including newlines) is ignored between tokens.

use std::fmt;

use blockalg::{parse_rational, Element, Rational, Vector, Weight};
use blockalg::verma::{ModuleVector, Strategy, Straightener};
use num_traits::One;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Gen(i64, i64),
    Central,
    Scale(Rational, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
}

/// A scalar times a word; no factors means `v` itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordTerm {
    pub coeff: Rational,
    pub factors: Vec<Expr>,
}

/// What the `act` command accepts: a plain Lie expression, or a combination of words on `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Input {
    Element(Expr),
    Vector(Vec<WordTerm>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl Expr {
    pub fn eval(&self) -> Element {
        match self {
            Expr::Gen(a, i) => Element::gen(*a, *i),
            Expr::Central => Element::central(),
            Expr::Scale(q, e) => e.eval().scale(q),
            Expr::Neg(e) => -e.eval(),
            Expr::Add(a, b) => a.eval() + b.eval(),
            Expr::Sub(a, b) => a.eval() - b.eval(),
            Expr::Bracket(a, b) => a.eval().bracket(&b.eval()),
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Expr::Gen(..) | Expr::Central | Expr::Bracket(..))
    }

    fn is_term(&self) -> bool {
        self.is_atom() || matches!(self, Expr::Scale(..))
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_term() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

/// Canonical rendering; [`parse_expr`] reads it back to the same tree
/// whenever every `Scale` factor is nonnegative, as parsed trees are.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(a, i) => write!(f, "L[{a},{i}]"),
            Expr::Central => f.write_str("C"),
            Expr::Scale(q, e) => {
                write!(f, "{q} ")?;
                e.fmt_atom(f)
            }
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_term(f)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write!(f, "{a}")?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.fmt_term(f)
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

impl fmt::Display for WordTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coeff.is_one() {
            write!(f, "{} ", self.coeff)?;
        }
        for e in &self.factors {
            e.fmt_atom(f)?;
            f.write_str(".")?;
        }
        f.write_str("v")
    }
}

/// Applies each word, rightmost factor first, and sums.
pub fn eval_words(terms: &[WordTerm], weight: &Weight) -> Vector {
    let mut st = Straightener::new(weight, Strategy::Leftmost);
    let mut out = ModuleVector::zero();
    for t in terms {
        let mut v = Vector::vacuum();
        for e in t.factors.iter().rev() {
            v = st.act(&e.eval(), &v);
        }
        out.add_scaled(&v, &t.coeff);
    }
    out
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_input(src: &str) -> Result<Input, ParseError> {
    let mut p = Parser::new(src);
    let out = p.input()?;
    p.finish()?;
    Ok(out)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Self { chars: src.chars().collect(), pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            return Ok(());
        }
        let found = match self.chars.get(self.pos) {
            Some(x) => format!("'{x}'"),
            None => "end of input".into(),
        };
        Err(self.error_at(self.pos, format!("expected '{c}', found {found}")))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error_at(self.pos, format!("unexpected '{c}'"))),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error_at(self.pos, "expected an integer"));
        }
        let n: i64 = d.parse().map_err(|_| self.error_at(start, "integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    /// Unsigned `p` or `p/q`, if the next token is a number.
    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let start = self.pos;
        let mut text = self.digits();
        if self.eat('/') {
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                return Err(self.error_at(self.pos, "expected a denominator"));
            }
            text = format!("{text}/{d}");
        }
        parse_rational(&text).map(Some).map_err(|e| self.error_at(start, e.to_string()))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('L') => {
                self.pos += 1;
                self.expect('[')?;
                let a = self.int()?;
                self.expect(',')?;
                let i = self.int()?;
                self.expect(']')?;
                Ok(Expr::Gen(a, i))
            }
            Some('C') => {
                self.pos += 1;
                Ok(Expr::Central)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                if self.peek() == Some(']') {
                    return Err(self.error_at(start, "a bracket needs two arguments"));
                }
                self.expect(',')?;
                let b = self.expr()?;
                if self.peek() == Some(',') {
                    return Err(self.error_at(start, "a bracket takes exactly two arguments"));
                }
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(')' | ']' | ',') | None => Err(self.error_at(self.pos, "expected 'L[a,i]', 'C', '[' or '('")),
            Some(c) => Err(self.error_at(self.pos, format!("unexpected '{c}'"))),
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let q = self.rational()?;
        let a = self.atom()?;
        Ok(match q {
            Some(q) => Expr::Scale(q, Box::new(a)),
            None => a,
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn input(&mut self) -> Result<Input, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        if !self.chars.contains(&'v') {
            self.pos = start;
            return self.expr().map(Input::Element);
        }
        self.pos = start;
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') {
            -Rational::one()
        } else {
            self.eat('+');
            Rational::one()
        };
        loop {
            let q = self.rational()?.unwrap_or_else(Rational::one);
            let factors = self.word_strict()?;
            terms.push(WordTerm { coeff: sign * q, factors });
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                return Ok(Input::Vector(terms));
            }
        }
    }

    fn word_strict(&mut self) -> Result<Vec<Expr>, ParseError> {
        if self.eat('v') {
            return Ok(Vec::new());
        }
        let mut factors = Vec::new();
        loop {
            factors.push(self.atom()?);
            self.expect('.')?;
            if self.eat('v') {
                return Ok(factors);
            }
        }
    }
}
