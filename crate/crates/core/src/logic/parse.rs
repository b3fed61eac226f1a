use super::formula::Formula;
use super::judgement::Judgement;
use super::LogicError;

/// Parses the ASCII formula grammar: identifiers are atoms, postfix `^` is
/// the dual, infix `&` and `(+)` are the connectives, with parentheses for
/// grouping. `⊥` and `⊕` are accepted as aliases. The two connectives share
/// one precedence level; mixing them without parentheses is an ambiguity
/// error. Duals are pushed to atoms, so `A^^` parses to `A` and `(A & B)^`
/// to `A^ (+) B^`.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, cursor: 0 };
    let formula = parser.parse_chain()?;
    match parser.peek() {
        None => Ok(formula),
        Some(token) => Err(LogicError::Syntax {
            position: token.position,
            message: format!("unexpected {}", token.kind.describe()),
        }),
    }
}

/// Parses the judgement serialization: `|- F` for assertions and `F |-` for
/// falsity judgements (`⊢` accepted as an alias).
pub fn parse_judgement(text: &str) -> Result<Judgement, LogicError> {
    let trimmed = text.trim();
    for turnstile in ["|-", "\u{22a2}"] {
        if let Some(rest) = trimmed.strip_prefix(turnstile) {
            return Ok(Judgement::assertion(parse_formula(rest)?));
        }
        if let Some(rest) = trimmed.strip_suffix(turnstile) {
            return Ok(Judgement::falsity(parse_formula(rest)?));
        }
    }
    Err(LogicError::Syntax {
        position: 1,
        message: "judgement must start or end with '|-'".to_string(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Ident(String),
    Dual,
    Conj,
    Disj,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier '{name}'"),
            TokenKind::Dual => "'^'".to_string(),
            TokenKind::Conj => "'&'".to_string(),
            TokenKind::Disj => "'(+)'".to_string(),
            TokenKind::LParen => "'('".to_string(),
            TokenKind::RParen => "')'".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    /// 1-based character position in the input.
    position: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, LogicError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let position = i + 1;
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => {
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                tokens.push(Token {
                    kind: TokenKind::Ident(name),
                    position,
                });
            }
            '^' | '\u{22a5}' => {
                tokens.push(Token {
                    kind: TokenKind::Dual,
                    position,
                });
                i += 1;
            }
            '&' => {
                tokens.push(Token {
                    kind: TokenKind::Conj,
                    position,
                });
                i += 1;
            }
            '\u{2295}' => {
                tokens.push(Token {
                    kind: TokenKind::Disj,
                    position,
                });
                i += 1;
            }
            '(' => {
                if chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') {
                    tokens.push(Token {
                        kind: TokenKind::Disj,
                        position,
                    });
                    i += 3;
                } else {
                    tokens.push(Token {
                        kind: TokenKind::LParen,
                        position,
                    });
                    i += 1;
                }
            }
            ')' => {
                tokens.push(Token {
                    kind: TokenKind::RParen,
                    position,
                });
                i += 1;
            }
            other => {
                return Err(LogicError::Syntax {
                    position,
                    message: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.cursor).cloned();
        if token.is_some() {
            self.cursor += 1;
        }
        token
    }

    fn end_position(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.position + 1)
            .unwrap_or(1)
    }

    /// A chain `term (op term)*` where every `op` must be the same connective.
    fn parse_chain(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.parse_term()?;
        let mut chain_op: Option<TokenKind> = None;
        while let Some(token) = self.peek() {
            let op = match token.kind {
                TokenKind::Conj => TokenKind::Conj,
                TokenKind::Disj => TokenKind::Disj,
                _ => break,
            };
            let position = token.position;
            match &chain_op {
                Some(previous) if *previous != op => {
                    return Err(LogicError::AmbiguousMix { position });
                }
                _ => chain_op = Some(op.clone()),
            }
            self.advance();
            let rhs = self.parse_term()?;
            acc = match op {
                TokenKind::Conj => Formula::conj(acc, rhs),
                _ => Formula::disj(acc, rhs),
            };
        }
        Ok(acc)
    }

    /// A primary (identifier or parenthesized chain) with any number of
    /// postfix duals applied.
    fn parse_term(&mut self) -> Result<Formula, LogicError> {
        let token = self.advance().ok_or_else(|| LogicError::Syntax {
            position: self.end_position(),
            message: "expected a formula".to_string(),
        })?;
        let mut formula = match token.kind {
            TokenKind::Ident(name) => Formula::atom(name),
            TokenKind::LParen => {
                let inner = self.parse_chain()?;
                match self.advance() {
                    Some(Token {
                        kind: TokenKind::RParen,
                        ..
                    }) => inner,
                    Some(other) => {
                        return Err(LogicError::Syntax {
                            position: other.position,
                            message: format!("expected ')', found {}", other.kind.describe()),
                        })
                    }
                    None => {
                        return Err(LogicError::Syntax {
                            position: self.end_position(),
                            message: "unclosed '('".to_string(),
                        })
                    }
                }
            }
            other => {
                return Err(LogicError::Syntax {
                    position: token.position,
                    message: format!("expected a formula, found {}", other.describe()),
                })
            }
        };
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Dual)) {
            self.advance();
            formula = formula.dual();
        }
        Ok(formula)
    }
}
