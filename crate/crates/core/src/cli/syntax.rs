//! Textual expression syntax.
//!
//! ```text
//! expr    := into ('+' into)*
//! into    := tips ('>>' tips)*
//! tips    := pits ('><' pits)*
//! pits    := atom ('<>' atom)*
//! atom    := 'e' | label | '(' expr ')'
//! label   := [alphanumeric or _]+ | '"' (char | '\"' | '\\')* '"'
//! ```
//!
//! `<>` binds tightest, then `><`, then `>>`, then `+`; all operators
//! associate to the left. The symbols `ε`, `≫`, `⋄` (or `◇`) and `×` are
//! accepted as aliases. A bare `e` is the empty graph, so an edge named `e`
//! has to be quoted.

use std::fmt;

use crate::term::{BinOp, EdgeTerm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("SyntaxError: line {line}, column {column}: expected {expected}, found {found}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Label(String),
    Empty,
    Op(BinOp),
    Open,
    Close,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Label(s) => write!(f, "label {}", render_label(s)),
            Tok::Empty => f.write_str("`e`"),
            Tok::Op(op) => write!(f, "`{op}`"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn advance(c: char, line: &mut usize, column: &mut usize) {
    if c == '\n' {
        *line += 1;
        *column = 1;
    } else {
        *column += 1;
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, column);
        let err = |expected: &str, found: String| SyntaxError {
            line: l0,
            column: c0,
            expected: expected.to_string(),
            found,
        };
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut line, &mut column);
            continue;
        }
        let tok = match c {
            '+' | '(' | ')' | '≫' | '⋄' | '◇' | '×' => {
                chars.next();
                advance(c, &mut line, &mut column);
                match c {
                    '+' => Tok::Op(BinOp::Overlay),
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    '≫' => Tok::Op(BinOp::Into),
                    '×' => Tok::Op(BinOp::Tips),
                    _ => Tok::Op(BinOp::Pits),
                }
            }
            '>' | '<' => {
                chars.next();
                advance(c, &mut line, &mut column);
                let next = chars.peek().copied();
                let op = match (c, next) {
                    ('>', Some('>')) => BinOp::Into,
                    ('<', Some('>')) => BinOp::Pits,
                    ('>', Some('<')) => BinOp::Tips,
                    _ => {
                        let found = match next {
                            Some(n) => format!("`{c}{n}`"),
                            None => format!("`{c}`"),
                        };
                        return Err(err("one of `>>`, `<>`, `><`", found));
                    }
                };
                chars.next();
                advance(next.unwrap(), &mut line, &mut column);
                Tok::Op(op)
            }
            '"' => {
                chars.next();
                advance(c, &mut line, &mut column);
                let mut label = String::new();
                loop {
                    match chars.next() {
                        None => return Err(err("closing `\"`", "end of input".into())),
                        Some('"') => {
                            advance('"', &mut line, &mut column);
                            break;
                        }
                        Some('\\') => {
                            advance('\\', &mut line, &mut column);
                            match chars.next() {
                                Some(e @ ('"' | '\\')) => {
                                    advance(e, &mut line, &mut column);
                                    label.push(e);
                                }
                                Some(other) => {
                                    return Err(SyntaxError {
                                        line,
                                        column,
                                        expected: "`\\\"` or `\\\\`".into(),
                                        found: format!("`\\{other}`"),
                                    })
                                }
                                None => return Err(err("closing `\"`", "end of input".into())),
                            }
                        }
                        Some(other) => {
                            advance(other, &mut line, &mut column);
                            label.push(other);
                        }
                    }
                }
                if label.is_empty() {
                    return Err(err("a nonempty label", "`\"\"`".into()));
                }
                Tok::Label(label)
            }
            c if is_word_char(c) => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if !is_word_char(c) {
                        break;
                    }
                    word.push(c);
                    chars.next();
                    advance(c, &mut line, &mut column);
                }
                if word == "e" || word == "ε" {
                    Tok::Empty
                } else {
                    Tok::Label(word)
                }
            }
            other => {
                return Err(err(
                    "a label, operator or parenthesis",
                    format!("`{other}`"),
                ))
            }
        };
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const LEVELS: [BinOp; 4] = [BinOp::Overlay, BinOp::Into, BinOp::Tips, BinOp::Pits];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let at = self.peek();
        SyntaxError {
            line: at.line,
            column: at.column,
            expected: expected.to_string(),
            found: at.tok.to_string(),
        }
    }

    // Operators of one precedence level, left-associated.
    fn level(&mut self, depth: usize) -> Result<EdgeTerm<String>, SyntaxError> {
        if depth == LEVELS.len() {
            return self.atom();
        }
        let op = LEVELS[depth];
        let mut acc = self.level(depth + 1)?;
        while self.peek().tok == Tok::Op(op) {
            self.pos += 1;
            let rhs = self.level(depth + 1)?;
            acc = EdgeTerm::binary(op, acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<EdgeTerm<String>, SyntaxError> {
        match self.peek().tok.clone() {
            Tok::Label(s) => {
                self.pos += 1;
                Ok(EdgeTerm::Edge(s))
            }
            Tok::Empty => {
                self.pos += 1;
                Ok(EdgeTerm::Empty)
            }
            Tok::Open => {
                self.pos += 1;
                let inner = self.level(0)?;
                if self.peek().tok != Tok::Close {
                    return Err(self.error("an operator or `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("a label, `e` or `(`")),
        }
    }
}

/// Parses an expression.
pub fn parse_expr(text: &str) -> Result<EdgeTerm<String>, SyntaxError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let term = parser.level(0)?;
    if parser.peek().tok != Tok::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(term)
}

/// A label as it appears in expressions: bare when it is a word other than
/// `e`, quoted otherwise.
pub fn render_label(label: &str) -> String {
    let bare = !label.is_empty() && label.chars().all(is_word_char) && label != "e" && label != "ε";
    if bare {
        return label.to_string();
    }
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn level_of<L>(t: &EdgeTerm<L>) -> usize {
    match t.as_binary() {
        Some((op, _, _)) => LEVELS.iter().position(|l| *l == op).unwrap(),
        None => LEVELS.len(),
    }
}

fn render_into<L: AsRef<str>>(t: &EdgeTerm<L>, out: &mut String) {
    match t {
        EdgeTerm::Empty => out.push('e'),
        EdgeTerm::Edge(x) => out.push_str(&render_label(x.as_ref())),
        _ => {
            let (op, a, b) = t.as_binary().unwrap();
            let mine = level_of(t);
            let side = |child: &EdgeTerm<L>, parens: bool, out: &mut String| {
                if parens {
                    out.push('(');
                    render_into(child, out);
                    out.push(')');
                } else {
                    render_into(child, out);
                }
            };
            side(a, level_of(a) < mine, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            side(b, level_of(b) <= mine, out);
        }
    }
}

/// Renders a term with the fewest parentheses that parse back to it.
pub fn render_expr<L: AsRef<str>>(t: &EdgeTerm<L>) -> String {
    let mut out = String::new();
    render_into(t, &mut out);
    out
}
