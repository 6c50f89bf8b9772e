use super::error::SourceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// `prefix:local`; the prefix is empty for the default namespace.
    PName(String, String),
    Var(String),
    Word(String),
    Iri(String),
    /// Trailing quote marks after a name, counted.
    Quotes(usize),
    Sym(char),
    Sub,
    Literal,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub struct Source<'a> {
    lines: Vec<&'a str>,
}

impl<'a> Source<'a> {
    pub fn new(text: &'a str) -> Self {
        Source {
            lines: text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l)).collect(),
        }
    }

    pub fn lines(&self) -> &[&'a str] {
        &self.lines
    }

    pub fn error(&self, line: usize, column: usize, message: impl Into<String>) -> SourceError {
        SourceError {
            line,
            column,
            message: message.into(),
            snippet: self.lines.get(line.wrapping_sub(1)).copied().unwrap_or("").to_string(),
        }
    }

    pub fn end_error(&self, message: impl Into<String>) -> SourceError {
        let line = self.lines.len().max(1);
        let column = self.lines.last().map_or(0, |l| l.chars().count()) + 1;
        self.error(line, column, message)
    }
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits one line into tokens. `#` starts a comment that runs to the end of
/// the line.
pub fn lex_line(src: &Source<'_>, line_no: usize, out: &mut Vec<Token>) -> Result<(), SourceError> {
    let line = src.lines()[line_no - 1];
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: line_no, column });
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == '?' || c == '$' {
            let start = i + 1;
            i = start;
            while i < chars.len() && is_ident(chars[i]) {
                i += 1;
            }
            if i == start {
                // A bare `?` is a property path modifier.
                push(out, Tok::Sym('?'));
            } else {
                push(out, Tok::Var(chars[start..i].iter().collect()));
            }
        } else if c == ':' || ((c.is_alphabetic() || c == '_') && pname_ahead(&chars, i)) {
            let pstart = i;
            while chars[i] != ':' {
                i += 1;
            }
            let prefix: String = chars[pstart..i].iter().collect();
            i += 1;
            let start = i;
            while i < chars.len() && is_ident(chars[i]) {
                i += 1;
            }
            if i == start && !prefix.is_empty() {
                return Err(src.error(line_no, column, "expected a local name after the prefix"));
            }
            push(out, Tok::PName(prefix, chars[start..i].iter().collect()));
            let q = i;
            while i < chars.len() && chars[i] == '\'' {
                i += 1;
            }
            if i > q {
                out.push(Token {
                    tok: Tok::Quotes(i - q),
                    line: line_no,
                    column: q + 1,
                });
            }
        } else if is_ident(c) {
            let start = i;
            while i < chars.len() && is_ident(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word.chars().all(|d| d.is_ascii_digit()) {
                push(out, Tok::Literal);
            } else {
                push(out, Tok::Word(word));
            }
        } else if c == '<' {
            if chars.get(i + 1) == Some(&':') {
                push(out, Tok::Sub);
                i += 2;
            } else {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i] != '>' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(src.error(line_no, column, "unterminated IRI"));
                }
                push(out, Tok::Iri(chars[start..i].iter().collect()));
                i += 1;
            }
        } else if c == '"' {
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                i += 1;
            }
            i += 1;
            push(out, Tok::Literal);
        } else {
            let tok = match c {
                '⊑' => Tok::Sub,
                '⊤' => Tok::Word("Top".into()),
                '⊥' => Tok::Word("Bottom".into()),
                '¬' => Tok::Word("not".into()),
                '⊓' => Tok::Word("and".into()),
                '⊔' => Tok::Word("or".into()),
                '∃' => Tok::Word("exists".into()),
                '∀' => Tok::Word("forall".into()),
                _ => Tok::Sym(c),
            };
            push(out, tok);
            i += 1;
        }
    }
    Ok(())
}

fn pname_ahead(chars: &[char], mut i: usize) -> bool {
    while i < chars.len() && is_ident(chars[i]) {
        i += 1;
    }
    chars.get(i) == Some(&':')
}

pub fn describe(tok: &Tok) -> String {
    match tok {
        Tok::PName(p, l) => format!("`{}:{}`", p, l),
        Tok::Var(v) => format!("`?{}`", v),
        Tok::Word(w) => format!("`{}`", w),
        Tok::Iri(i) => format!("`<{}>`", i),
        Tok::Quotes(n) => format!("`{}`", "'".repeat(*n)),
        Tok::Sym(c) => format!("`{}`", c),
        Tok::Sub => "`<:`".into(),
        Tok::Literal => "a literal".into(),
    }
}

/// A token cursor with error helpers.
pub struct Cursor<'s, 'a> {
    pub src: &'s Source<'a>,
    pub toks: Vec<Token>,
    pub pos: usize,
}

impl<'s, 'a> Cursor<'s, 'a> {
    pub fn new(src: &'s Source<'a>, toks: Vec<Token>) -> Self {
        Cursor { src, toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn error_here(&self, message: impl Into<String>) -> SourceError {
        match self.toks.get(self.pos) {
            Some(t) => self.src.error(t.line, t.column, message),
            None => match self.toks.last() {
                Some(t) => {
                    let len = self.src.lines()[t.line - 1].chars().count();
                    self.src.error(t.line, len + 1, message)
                }
                None => self.src.end_error(message),
            },
        }
    }

    pub fn unexpected(&self, expected: &str) -> SourceError {
        match self.peek() {
            Some(t) => self.error_here(format!("expected {}, found {}", expected, describe(t))),
            None => self.error_here(format!("expected {}, found end of input", expected)),
        }
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_word(&mut self, w: &str) -> bool {
        match self.peek() {
            Some(Tok::Word(x)) if x == w => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    pub fn eat_keyword(&mut self, w: &str) -> bool {
        match self.peek() {
            Some(Tok::Word(x)) if x.eq_ignore_ascii_case(w) => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), SourceError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", c)))
        }
    }
}
