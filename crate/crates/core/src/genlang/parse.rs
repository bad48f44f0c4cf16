//! Prefix s-expression syntax for generator programs.
//!
//! Programs are written as one s-expression, e.g. `(* (indeg j) 2)`.
//! Variables are spelled `i`, `j`, `(indeg i)`, `(indeg j)`, `(outdeg i)`,
//! `(outdeg j)`, `du`, `dd`, `dr`. Lines starting with `#` (and trailing
//! `#` comments) are ignored, so program files can carry annotations.

use super::ast::{ExprNode, GeneratorProgram, LangError, Op, Var};

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    LParen(usize),
    RParen(usize),
    Atom(usize, &'a str),
}

impl Token<'_> {
    fn pos(&self) -> usize {
        match self {
            Token::LParen(p) | Token::RParen(p) | Token::Atom(p, _) => *p,
        }
    }
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        match bytes[pos] {
            b'#' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            b'(' => {
                tokens.push(Token::LParen(pos));
                pos += 1;
            }
            b')' => {
                tokens.push(Token::RParen(pos));
                pos += 1;
            }
            c if c.is_ascii_whitespace() => pos += 1,
            _ => {
                let start = pos;
                while pos < bytes.len()
                    && !bytes[pos].is_ascii_whitespace()
                    && !matches!(bytes[pos], b'(' | b')' | b'#')
                {
                    pos += 1;
                }
                tokens.push(Token::Atom(start, &text[start..pos]));
            }
        }
    }
    tokens
}

fn syntax(pos: usize, msg: impl Into<String>) -> LangError {
    LangError::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn op_for(token: &str) -> Option<Op> {
    Op::ALL.iter().copied().find(|op| op.token() == token)
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    cursor: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn next(&mut self) -> Option<&Token<'a>> {
        let t = self.tokens.get(self.cursor);
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<ExprNode, LangError> {
        let token = self
            .next()
            .cloned()
            .ok_or_else(|| syntax(self.len, "unexpected end of input"))?;
        match token {
            Token::Atom(pos, text) => atom(pos, text),
            Token::RParen(pos) => Err(syntax(pos, "unexpected `)`")),
            Token::LParen(pos) => {
                let head = self
                    .next()
                    .cloned()
                    .ok_or_else(|| syntax(self.len, "unclosed `(`"))?;
                let head_text = match head {
                    Token::Atom(_, t) => t,
                    other => return Err(syntax(other.pos(), "expected operator name")),
                };
                if head_text == "indeg" || head_text == "outdeg" {
                    return self.degree_var(pos, head_text);
                }
                let op = op_for(head_text)
                    .ok_or_else(|| syntax(head.pos(), format!("unknown operator `{head_text}`")))?;
                let mut children = Vec::with_capacity(op.arity());
                loop {
                    match self.tokens.get(self.cursor) {
                        None => return Err(syntax(self.len, "unclosed `(`")),
                        Some(Token::RParen(_)) => {
                            self.cursor += 1;
                            break;
                        }
                        Some(_) => children.push(self.expr()?),
                    }
                }
                if children.len() != op.arity() {
                    return Err(LangError::Arity {
                        op: op.token().to_string(),
                        expected: op.arity(),
                        found: children.len(),
                    });
                }
                Ok(ExprNode::Op(op, children))
            }
        }
    }

    fn degree_var(&mut self, open_pos: usize, which: &str) -> Result<ExprNode, LangError> {
        let arg = self
            .next()
            .cloned()
            .ok_or_else(|| syntax(self.len, "unclosed `(`"))?;
        let var = match (which, &arg) {
            ("indeg", Token::Atom(_, "i")) => Var::InDegI,
            ("indeg", Token::Atom(_, "j")) => Var::InDegJ,
            ("outdeg", Token::Atom(_, "i")) => Var::OutDegI,
            ("outdeg", Token::Atom(_, "j")) => Var::OutDegJ,
            _ => {
                return Err(syntax(
                    arg.pos(),
                    format!("`{which}` takes `i` or `j`"),
                ))
            }
        };
        match self.next() {
            Some(Token::RParen(_)) => Ok(ExprNode::Var(var)),
            Some(t) => Err(syntax(t.pos(), format!("`{which}` takes one argument"))),
            None => Err(syntax(open_pos, "unclosed `(`")),
        }
    }
}

fn atom(pos: usize, text: &str) -> Result<ExprNode, LangError> {
    match text {
        "i" => return Ok(ExprNode::Var(Var::I)),
        "j" => return Ok(ExprNode::Var(Var::J)),
        "du" => return Ok(ExprNode::Var(Var::DistU)),
        "dd" => return Ok(ExprNode::Var(Var::DistD)),
        "dr" => return Ok(ExprNode::Var(Var::DistR)),
        _ => {}
    }
    match text.parse::<f64>() {
        Ok(value) if value.is_finite() => Ok(ExprNode::Const(value)),
        Ok(_) => Err(syntax(pos, "constant out of range")),
        Err(_) => Err(syntax(pos, format!("unknown symbol `{text}`"))),
    }
}

/// Parse one expression; trailing input is an error.
pub fn parse_expr(text: &str) -> Result<ExprNode, LangError> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(syntax(text.len(), "empty program"));
    }
    let mut parser = Parser {
        tokens,
        cursor: 0,
        len: text.len(),
    };
    let node = parser.expr()?;
    if let Some(extra) = parser.next() {
        return Err(syntax(extra.pos(), "trailing input after expression"));
    }
    Ok(node)
}

/// Parse and validate a whole program for the given mode.
pub fn parse_program(text: &str, directed: bool) -> Result<GeneratorProgram, LangError> {
    GeneratorProgram::new(parse_expr(text)?, directed)
}

/// Render a program as its canonical s-expression text.
pub fn print_program(program: &GeneratorProgram) -> String {
    program.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_preferential_attachment() {
        let e = parse_expr("(* (indeg j) 2)").unwrap();
        assert_eq!(
            e,
            ExprNode::Op(Op::Mul, vec![ExprNode::Var(Var::InDegJ), ExprNode::Const(2.0)])
        );
        assert_eq!(e.to_string(), "(* (indeg j) 2)");
    }

    #[test]
    fn parses_affinity() {
        let e = parse_expr("(psi 3 1 0.5)").unwrap();
        match &e {
            ExprNode::Op(Op::Affinity, children) => assert_eq!(children.len(), 3),
            other => panic!("unexpected tree: {other:?}"),
        }
    }

    #[test]
    fn unbalanced_is_a_syntax_error() {
        let err = parse_expr("(min (indeg i)").unwrap_err();
        assert!(matches!(err, LangError::Syntax { .. }), "{err}");
    }

    #[test]
    fn arity_mismatch_reported() {
        let err = parse_expr("(+ 1 2 3)").unwrap_err();
        assert_eq!(
            err,
            LangError::Arity {
                op: "+".into(),
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn directed_variable_rejected_in_undirected_mode() {
        let err = parse_program("(outdeg i)", false).unwrap_err();
        assert!(matches!(err, LangError::DirectedOnly(_)));
        assert!(parse_program("(outdeg i)", true).is_ok());
    }

    #[test]
    fn comments_and_whitespace_ignored() {
        let text = "# preferential attachment\n  (indeg j) # tail comment\n";
        let p = parse_program(text, true).unwrap();
        assert_eq!(p.to_string(), "(indeg j)");
    }

    #[test]
    fn unknown_symbol_has_position() {
        let err = parse_expr("(+ 1 bogus)").unwrap_err();
        match err {
            LangError::Syntax { pos, .. } => assert_eq!(pos, 5),
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn constants_round_trip_through_text() {
        for c in [0.0, 2.0, -3.5, 0.1, 1.0 / 3.0, 9.999999] {
            let printed = ExprNode::Const(c).to_string();
            assert_eq!(parse_expr(&printed).unwrap(), ExprNode::Const(c));
        }
    }
}
