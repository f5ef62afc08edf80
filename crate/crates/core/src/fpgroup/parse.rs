//! Text format for presentations and words.
//!
//! ```text
//! file    := "gens" ident+ ";" "rels" relator ("," relator)*
//! word    := factor ("*" factor)*
//! factor  := atom ("^" integer)?
//! atom    := ident | "(" word ")" | "[" word "," word "]"
//! ```
//!
//! Whitespace is insignificant, `#` starts a comment running to the end of
//! the line, and `[a,b]` expands to `a⁻¹b⁻¹ab`.

use super::{Presentation, Word};
use thiserror::Error;

/// Longest exponent accepted in a factor.
const MAX_EXPONENT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{name}` at {line}:{column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("relator {index} is empty after free reduction")]
    EmptyRelator { index: usize },
    #[error("generator `{name}` declared twice")]
    DuplicateGenerator { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '#' {
            while chars.next_if(|&d| d != '\n').is_some() {}
        } else if c.is_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphanumeric() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(s), line: tl, column: tc });
        } else if c.is_ascii_digit() || c == '-' {
            let mut s = String::new();
            if c == '-' {
                s.push(c);
                chars.next();
                column += 1;
            }
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let value = s.parse::<i64>().ok().filter(|v| v.unsigned_abs() <= MAX_EXPONENT);
            match value {
                Some(v) => out.push(Token { tok: Tok::Int(v), line: tl, column: tc }),
                None => {
                    return Err(ParseError::Syntax {
                        line: tl,
                        column: tc,
                        message: format!("invalid integer `{s}`"),
                    })
                }
            }
        } else if "()[],*^;".contains(c) {
            chars.next();
            column += 1;
            out.push(Token { tok: Tok::Punct(c), line: tl, column: tc });
        } else {
            return Err(ParseError::Syntax {
                line: tl,
                column: tc,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    generators: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, t: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Punct(c) {
            Ok(())
        } else {
            self.error(&t, format!("expected `{c}`, found {}", describe(&t.tok)))
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut w = self.factor()?;
        while self.peek().tok == Tok::Punct('*') {
            self.next();
            w = w.concat(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        if self.peek().tok == Tok::Punct('^') {
            self.next();
            let t = self.next();
            match t.tok {
                Tok::Int(e) => Ok(base.pow(e)),
                _ => self.error(&t, format!("expected exponent, found {}", describe(&t.tok))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(name) => match self.generators.iter().position(|g| g == name) {
                Some(g) => Ok(Word::generator(g)),
                None => Err(ParseError::UnknownGenerator {
                    name: name.clone(),
                    line: t.line,
                    column: t.column,
                }),
            },
            Tok::Punct('(') => {
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Tok::Punct('[') => {
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(Word::commutator(&a, &b))
            }
            other => self.error(&t, format!("expected generator, `(` or `[`, found {}", describe(other))),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            self.error(&t, format!("unexpected {}", describe(&t.tok)))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Int(v) => format!("integer `{v}`"),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::Eof => "end of input".to_string(),
    }
}

/// Parses a single word over `generators`, freely reducing it.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        generators,
    };
    let w = parser.word()?;
    parser.end()?;
    Ok(w)
}

/// Parses a presentation in the `gens ... ; rels ...` format.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let keyword = |pos: &mut usize, kw: &str| -> Result<(), ParseError> {
        let t = &tokens[*pos];
        if t.tok == Tok::Ident(kw.to_string()) {
            *pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected `{kw}`, found {}", describe(&t.tok)),
            })
        }
    };

    keyword(&mut pos, "gens")?;
    let mut generators: Vec<String> = Vec::new();
    while let Tok::Ident(name) = &tokens[pos].tok {
        if name == "rels" || name == "gens" {
            break;
        }
        if generators.contains(name) {
            return Err(ParseError::DuplicateGenerator { name: name.clone() });
        }
        generators.push(name.clone());
        pos += 1;
    }
    let t = &tokens[pos];
    if generators.is_empty() {
        return Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: "expected at least one generator".into(),
        });
    }
    if t.tok != Tok::Punct(';') {
        return Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("expected `;`, found {}", describe(&t.tok)),
        });
    }
    pos += 1;
    keyword(&mut pos, "rels")?;

    let mut parser = Parser {
        tokens,
        pos,
        generators: &generators,
    };
    let mut relators = Vec::new();
    loop {
        let w = parser.word()?;
        if w.is_empty() {
            return Err(ParseError::EmptyRelator {
                index: relators.len() + 1,
            });
        }
        relators.push(w);
        if parser.peek().tok == Tok::Punct(',') {
            parser.next();
        } else {
            break;
        }
    }
    parser.end()?;
    Ok(Presentation::new(generators, relators))
}
