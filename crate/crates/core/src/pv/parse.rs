use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{PvError, PvProgram, Step, StepKind};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Punct(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Number(n) => format!("number `{n}`"),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::Eof => "end of input".to_string(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, PvError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, cl) = (line, col);
        let mut bump = |ch: char| {
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        };
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(c);
                chars.next();
            }
        } else if c.is_whitespace() {
            bump(c);
            chars.next();
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                s.push(c);
                bump(c);
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: l,
                col: cl,
            });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !c.is_ascii_alphanumeric() && c != '_' {
                    break;
                }
                s.push(c);
                bump(c);
                chars.next();
            }
            out.push(Token {
                tok: Tok::Number(s),
                line: l,
                col: cl,
            });
        } else if matches!(c, ';' | ':' | '.' | '(' | ')') {
            bump(c);
            chars.next();
            out.push(Token {
                tok: Tok::Punct(c),
                line: l,
                col: cl,
            });
        } else {
            return Err(PvError::Syntax {
                line: l,
                col: cl,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, t: &Token, expected: &str) -> Result<T, PvError> {
        Err(PvError::Syntax {
            line: t.line,
            col: t.col,
            message: format!("expected {expected}, found {}", describe(&t.tok)),
        })
    }

    fn punct(&mut self, c: char) -> Result<Token, PvError> {
        let t = self.next();
        if t.tok == Tok::Punct(c) {
            Ok(t)
        } else {
            self.error(&t, &format!("`{c}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Token), PvError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            _ => self.error(&t, what),
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn step(&mut self) -> Result<Step, PvError> {
        let (op, t) = self.ident("a step `P(..)`, `V(..)` or `A(..)`")?;
        if !matches!(op.as_str(), "P" | "V" | "A") {
            return self.error(&t, "a step `P(..)`, `V(..)` or `A(..)`");
        }
        self.punct('(')?;
        let (arg, _) = self.ident("a name")?;
        self.punct(')')?;
        let kind = match op.as_str() {
            "P" => StepKind::Acquire(arg),
            "V" => StepKind::Release(arg),
            _ => StepKind::Act(arg),
        };
        Ok(Step {
            kind,
            line: t.line,
            col: t.col,
        })
    }
}

/// Parses a PV program and checks that every resource is declared and every
/// release happens while the process holds the resource.
pub fn parse_pv(text: &str) -> Result<PvProgram, PvError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let mut prog = PvProgram::default();

    while p.is_keyword("res") {
        p.next();
        let (name, at) = p.ident("a resource name")?;
        let cap_tok = p.next();
        let Tok::Number(digits) = &cap_tok.tok else {
            return p.error(&cap_tok, "a capacity");
        };
        let cap: u32 = digits.parse().map_err(|_| PvError::Syntax {
            line: cap_tok.line,
            col: cap_tok.col,
            message: format!("bad capacity `{digits}`"),
        })?;
        p.punct(';')?;
        if cap == 0 {
            return Err(PvError::ZeroCapacity {
                name,
                line: at.line,
                col: at.col,
            });
        }
        if prog.resources.insert(name.clone(), cap).is_some() {
            return Err(PvError::DuplicateResource {
                name,
                line: at.line,
                col: at.col,
            });
        }
    }

    while p.is_keyword("proc") {
        p.next();
        p.punct(':')?;
        let mut steps = alloc::vec![p.step()?];
        while p.peek().tok == Tok::Punct('.') {
            p.next();
            steps.push(p.step()?);
        }
        prog.processes.push(steps);
    }

    let t = p.peek().clone();
    if t.tok != Tok::Eof {
        let expected = if prog.processes.is_empty() {
            "`res` or `proc`"
        } else {
            "`proc` or end of input"
        };
        return p.error(&t, expected);
    }
    if prog.processes.is_empty() {
        return Err(PvError::NoProcesses);
    }
    check(&prog)?;
    Ok(prog)
}

fn check(prog: &PvProgram) -> Result<(), PvError> {
    for (k, steps) in prog.processes.iter().enumerate() {
        let mut held: BTreeMap<&str, u32> = BTreeMap::new();
        for s in steps {
            let (name, acquire) = match &s.kind {
                StepKind::Acquire(r) => (r, true),
                StepKind::Release(r) => (r, false),
                StepKind::Act(_) => continue,
            };
            if !prog.resources.contains_key(name) {
                return Err(PvError::UnknownResource {
                    name: name.clone(),
                    line: s.line,
                    col: s.col,
                });
            }
            let count = held.entry(name).or_default();
            if acquire {
                *count += 1;
            } else if *count == 0 {
                return Err(PvError::ReleaseWithoutHold {
                    process: k,
                    name: name.clone(),
                    line: s.line,
                    col: s.col,
                });
            } else {
                *count -= 1;
            }
        }
    }
    Ok(())
}
