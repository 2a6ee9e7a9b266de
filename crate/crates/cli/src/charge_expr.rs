//! Arithmetic on charge tokens such as `e0`, `-2pi/e0` or `3*g0`.
//!
//! Grammar: sums and differences of products; juxtaposition multiplies
//! (`2pi/e0` is `2 * pi / e0`). Symbols are `e0`, `g0`, `pi` and `alpha`.
//! A digit run followed directly by `e0` is read as a product, so `2e0`
//! means two elementary charges; write `2.0` for the number.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Values bound to the symbols of an expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Symbols {
    pub e0: f64,
    pub g0: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Op(char),
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // exponent, unless this is the symbol e0 written after a coefficient
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let is_symbol = chars.get(i + 1) == Some(&'0')
                    && !chars.get(i + 2).is_some_and(|c| c.is_ascii_digit());
                let mut j = i + 1;
                if matches!(chars.get(j), Some('+') | Some('-')) {
                    j += 1;
                }
                if !is_symbol && chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse().map_err(|_| format!("malformed number `{text}`"))?;
            out.push(Token::Num(v));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "e0" | "g0" | "pi" | "alpha" => out.push(Token::Ident(word)),
                _ => return Err(format!("unknown symbol `{word}`")),
            }
        } else if "+-*/".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '(' {
            out.push(Token::Open);
            i += 1;
        } else if c == ')' {
            out.push(Token::Close);
            i += 1;
        } else {
            return Err(format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    symbols: &'a Symbols,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<f64, String> {
        let mut v = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.term()?;
            v = if op == '+' { v + rhs } else { v - rhs };
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<f64, String> {
        let mut v = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Op('*')) => {
                    self.pos += 1;
                    v *= self.unary()?;
                }
                Some(Token::Op('/')) => {
                    self.pos += 1;
                    v /= self.unary()?;
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::Open) => v *= self.atom()?,
                _ => return Ok(v),
            }
        }
    }

    fn unary(&mut self) -> Result<f64, String> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<f64, String> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(v)) => Ok(v),
            Some(Token::Ident(name)) => Ok(match name.as_str() {
                "e0" => self.symbols.e0,
                "g0" => self.symbols.g0,
                "pi" => std::f64::consts::PI,
                _ => self.symbols.alpha,
            }),
            Some(Token::Open) => {
                let v = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err("missing `)`".into());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

/// Evaluates `text` with the given symbol values.
pub fn evaluate(text: &str, symbols: &Symbols) -> Result<f64, String> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err("empty charge expression".into());
    }
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        symbols,
    };
    let v = p.expr()?;
    if p.pos != tokens.len() {
        return Err(format!("trailing input in `{text}`"));
    }
    if !v.is_finite() {
        return Err(format!("`{text}` does not evaluate to a finite number"));
    }
    Ok(v)
}

/// A syntactically valid charge expression, evaluated once the unit
/// convention is known.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeToken(pub String);

impl ChargeToken {
    pub fn value(&self, symbols: &Symbols) -> Result<f64, String> {
        evaluate(&self.0, symbols)
    }
}

impl FromStr for ChargeToken {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let probe = Symbols {
            e0: 0.3,
            g0: 20.0,
            alpha: 0.007,
        };
        evaluate(s, &probe).map_err(|e| format!("malformed charge `{s}`: {e}"))?;
        Ok(Self(s.to_string()))
    }
}

impl fmt::Display for ChargeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for ChargeToken {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ChargeToken {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Text(s) => s,
            Raw::Number(v) => format!("{v:e}"),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}
