use std::collections::HashMap;

use super::ConjunctiveQuery;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Turnstile,
}

fn syntax(message: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '#' => {
                while chars.next_if(|&d| d != '\n').is_some() {}
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            ':' => {
                chars.next();
                if chars.next() != Some('-') {
                    return Err(syntax("expected `:-`"));
                }
                tokens.push(Token::Turnstile);
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(ident));
            }
            other => return Err(syntax(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(syntax(format!("expected {what}"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.next() {
            Some(Token::Ident(s)) => Ok(s),
            _ => Err(syntax(format!("expected {what}"))),
        }
    }

    /// `var ("," var)* ")"`
    fn var_list(&mut self) -> Result<Vec<String>> {
        let mut vars = vec![self.ident("variable")?];
        loop {
            match self.next() {
                Some(Token::Comma) => vars.push(self.ident("variable")?),
                Some(Token::RParen) => return Ok(vars),
                _ => return Err(syntax("expected `,` or `)`")),
            }
        }
    }
}

/// Parses `name(x1,..,xk) :- E(a,b), E(c,d), ...`. `#` starts a comment
/// running to the end of the line.
///
/// Head variables become the free variables in head order; body-only
/// variables follow in order of first appearance.
pub fn parse_query(text: &str) -> Result<ConjunctiveQuery> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    p.ident("query name")?;
    p.expect(Token::LParen, "`(` after query name")?;
    let head = p.var_list()?;
    p.expect(Token::Turnstile, "`:-`")?;

    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    for v in &head {
        if index.insert(v.clone(), names.len()).is_some() {
            return Err(syntax(format!("head variable `{v}` repeated")));
        }
        names.push(v.clone());
    }

    let mut atoms = Vec::new();
    loop {
        let rel = p.ident("atom")?;
        if rel != "E" {
            return Err(syntax(format!("unknown relation `{rel}`")));
        }
        p.expect(Token::LParen, "`(` after E")?;
        let args = p.var_list()?;
        if args.len() != 2 {
            return Err(syntax("atoms take exactly two variables"));
        }
        if args[0] == args[1] {
            return Err(Error::SelfLoopAtom(args[0].clone()));
        }
        let mut ids = [0usize; 2];
        for (slot, a) in ids.iter_mut().zip(&args) {
            *slot = *index.entry(a.clone()).or_insert_with(|| {
                names.push(a.clone());
                names.len() - 1
            });
        }
        atoms.push((ids[0], ids[1]));
        match p.next() {
            Some(Token::Comma) => continue,
            None => break,
            Some(_) => return Err(syntax("expected `,` or end of query")),
        }
    }

    let graph = Graph::new(names.len(), atoms)?;
    if let Some(v) = (0..head.len()).find(|&v| graph.degree(v) == 0) {
        return Err(Error::IsolatedVariable(names[v].clone()));
    }
    ConjunctiveQuery::new(graph, (0..head.len()).collect())?.with_names(names)
}
