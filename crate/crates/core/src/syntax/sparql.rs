use super::error::{ParseError, SourceError};
use super::lexer::{describe, lex_line, Cursor, Source, Tok};
use crate::model::{vars_of, ConceptName, Individual, Query, QueryAtom, RoleName, Term, Variable};

const UNSUPPORTED_KEYWORDS: &[&str] = &[
    "OPTIONAL", "FILTER", "UNION", "MINUS", "BIND", "VALUES", "GRAPH", "SERVICE", "SELECT", "ASK",
    "DESCRIBE", "BASE",
];

/// Parses a `CONSTRUCT { ... } WHERE { ... }` query made of `.`-separated
/// triples over `?variables`, `:names` and `a`. `PREFIX` lines are skipped.
pub fn parse_query(text: &str) -> Result<Query, ParseError> {
    let src = Source::new(text);
    let mut toks = Vec::new();
    for n in 1..=src.lines().len() {
        lex_line(&src, n, &mut toks).map_err(ParseError::Syntax)?;
    }
    let mut p = QueryParser {
        cur: Cursor::new(&src, toks),
    };
    p.query()
}

struct QueryParser<'s, 'a> {
    cur: Cursor<'s, 'a>,
}

struct Located {
    atom: QueryAtom,
    at: SourceError,
}

impl QueryParser<'_, '_> {
    fn syntax<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax(self.cur.unexpected(expected)))
    }

    fn check_unsupported(&self) -> Result<(), ParseError> {
        let feature = match self.cur.peek() {
            Some(Tok::Word(w)) if UNSUPPORTED_KEYWORDS.iter().any(|k| w.eq_ignore_ascii_case(k)) => w.to_uppercase(),
            Some(Tok::Sym(c @ ('/' | '|' | '^' | '*' | '+' | '?' | '!'))) => format!("property path `{}`", c),
            Some(Tok::Sym(';')) => "predicate-object list `;`".into(),
            Some(Tok::Sym(',')) => "object list `,`".into(),
            Some(Tok::Sym('[')) => "blank node `[`".into(),
            Some(Tok::Literal) => "literal".into(),
            Some(Tok::PName(p, _)) if p == "_" => "blank node".into(),
            _ => return Ok(()),
        };
        Err(ParseError::Unsupported {
            at: self.cur.error_here(format!("{} is not supported", feature)),
            feature,
        })
    }

    fn query(&mut self) -> Result<Query, ParseError> {
        while self.cur.eat_keyword("PREFIX") {
            match self.cur.next().map(|t| t.tok) {
                Some(Tok::PName(_, l)) if l.is_empty() => {}
                _ => {
                    self.cur.pos -= 1;
                    return self.syntax("a prefix name such as `:`");
                }
            }
            match self.cur.next().map(|t| t.tok) {
                Some(Tok::Iri(_)) => {}
                _ => {
                    self.cur.pos -= 1;
                    return self.syntax("an IRI in angle brackets");
                }
            }
        }
        self.check_unsupported()?;
        if !self.cur.eat_keyword("CONSTRUCT") {
            return self.syntax("`CONSTRUCT`");
        }
        let template = self.group()?;
        if !self.cur.eat_keyword("WHERE") {
            self.check_unsupported()?;
            return self.syntax("`WHERE`");
        }
        let pattern = self.group()?;
        if !self.cur.at_end() {
            self.check_unsupported()?;
            return self.syntax("end of query");
        }
        let pvars = vars_of(pattern.iter().map(|l| &l.atom));
        for l in &template {
            if let Some(v) = l.atom.vars().find(|v| !pvars.contains(v)) {
                return Err(ParseError::UnboundTemplateVariable {
                    var: v.as_str().to_string(),
                    at: l.at.clone(),
                });
            }
        }
        Ok(Query::new(template.into_iter().map(|l| l.atom), pattern.into_iter().map(|l| l.atom))
            .expect("template variables checked above"))
    }

    fn group(&mut self) -> Result<Vec<Located>, ParseError> {
        if !self.cur.eat_sym('{') {
            return self.syntax("`{`");
        }
        let mut atoms = Vec::new();
        loop {
            self.check_unsupported()?;
            if self.cur.eat_sym('}') {
                return Ok(atoms);
            }
            if self.cur.peek() == Some(&Tok::Sym('{')) {
                return Err(ParseError::Unsupported {
                    feature: "nested group".into(),
                    at: self.cur.error_here("nested groups are not supported"),
                });
            }
            atoms.push(self.triple()?);
            self.check_unsupported()?;
            if !self.cur.eat_sym('.') && self.cur.peek() != Some(&Tok::Sym('}')) {
                return self.syntax("`.` or `}`");
            }
        }
    }

    fn triple(&mut self) -> Result<Located, ParseError> {
        let at = self.cur.error_here("in this triple");
        let subject = self.term("a subject")?;
        self.check_unsupported()?;
        if self.cur.eat_word("a") {
            self.check_unsupported()?;
            let class = match self.cur.peek() {
                Some(Tok::Var(_)) => {
                    return Err(ParseError::Unsupported {
                        feature: "variable in class position".into(),
                        at: self.cur.error_here("class must be a name, not a variable"),
                    })
                }
                _ => self.name("a class name")?,
            };
            return Ok(Located {
                atom: QueryAtom::Concept(subject, ConceptName::new(&class)),
                at,
            });
        }
        let pred = match self.cur.peek() {
            Some(Tok::Var(_)) => {
                return Err(ParseError::Unsupported {
                    feature: "variable in predicate position".into(),
                    at: self.cur.error_here("predicate must be a name, not a variable"),
                })
            }
            _ => self.name("a predicate or `a`")?,
        };
        self.check_unsupported()?;
        let object = self.term("an object")?;
        Ok(Located {
            atom: QueryAtom::Role(subject, object, RoleName::new(&pred)),
            at,
        })
    }

    fn term(&mut self, what: &str) -> Result<Term, ParseError> {
        self.check_unsupported()?;
        if let Some(Tok::Var(v)) = self.cur.peek() {
            let v = Variable::new(v);
            self.cur.next();
            return Ok(Term::Var(v));
        }
        Ok(Term::Ind(Individual::new(&self.name(what)?)))
    }

    fn name(&mut self, what: &str) -> Result<String, ParseError> {
        match self.cur.peek() {
            Some(Tok::PName(p, l)) if p.is_empty() && !l.is_empty() => {
                let l = l.clone();
                self.cur.next();
                Ok(l)
            }
            Some(Tok::PName(p, _)) if !p.is_empty() => Err(ParseError::Syntax(self.cur.error_here(format!(
                "only the default prefix `:` is supported, found `{}:`",
                p
            )))),
            Some(Tok::Iri(_)) => Err(ParseError::Unsupported {
                feature: "full IRI".into(),
                at: self.cur.error_here("write names as `:local`"),
            }),
            Some(t) => {
                let msg = format!("expected {}, found {}", what, describe(t));
                Err(ParseError::Syntax(self.cur.error_here(msg)))
            }
            None => self.syntax(what),
        }
    }
}
