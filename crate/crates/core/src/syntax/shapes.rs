use super::error::{ParseError, SourceError};
use super::lexer::{lex_line, Cursor, Source, Tok};
use crate::model::{is_target, Axiom, ConceptExpr, ConceptName, Individual, Marking, Role, RoleName, Variable};

/// Parses a shapes file: one axiom `C <: D` per line, `#` comments.
/// Left-hand sides must be shape targets (`:A` or `exists ρ . Top`).
pub fn parse_shapes(text: &str) -> Result<Vec<Axiom>, ParseError> {
    parse_lines(text, false)
}

/// Parses axioms without restricting the left-hand side. Also accepts role
/// inclusions (`role :p <: :r-`), marked names (`:A'`, `:A''`) and variable
/// concepts (`V(?x)`), so debug dumps read back in.
pub fn parse_axioms(text: &str) -> Result<Vec<Axiom>, ParseError> {
    parse_lines(text, true)
}

pub fn parse_concept(text: &str) -> Result<ConceptExpr, ParseError> {
    let src = Source::new(text);
    let mut toks = Vec::new();
    for n in 1..=src.lines().len() {
        lex_line(&src, n, &mut toks).map_err(ParseError::Syntax)?;
    }
    let mut p = ShapeParser {
        cur: Cursor::new(&src, toks),
        internal: true,
    };
    let c = p.concept().map_err(ParseError::Syntax)?;
    if !p.cur.at_end() {
        return Err(ParseError::Syntax(p.cur.unexpected("end of concept")));
    }
    Ok(c)
}

fn parse_lines(text: &str, internal: bool) -> Result<Vec<Axiom>, ParseError> {
    let src = Source::new(text);
    let mut out = Vec::new();
    for n in 1..=src.lines().len() {
        let mut toks = Vec::new();
        lex_line(&src, n, &mut toks).map_err(ParseError::Syntax)?;
        if toks.is_empty() {
            continue;
        }
        let mut p = ShapeParser {
            cur: Cursor::new(&src, toks),
            internal,
        };
        out.push(p.axiom()?);
    }
    Ok(out)
}

struct ShapeParser<'s, 'a> {
    cur: Cursor<'s, 'a>,
    internal: bool,
}

impl ShapeParser<'_, '_> {
    fn axiom(&mut self) -> Result<Axiom, ParseError> {
        if self.internal && self.cur.eat_word("role") {
            let r = self.role().map_err(ParseError::Syntax)?;
            self.sub()?;
            let s = self.role().map_err(ParseError::Syntax)?;
            self.end()?;
            return Ok(Axiom::Role(r, s));
        }
        let start = self.cur.error_here("");
        let lhs = self.concept().map_err(ParseError::Syntax)?;
        if !self.internal && !is_target(&lhs) {
            return Err(ParseError::InvalidTarget(SourceError {
                message: "shape target must be a concept name or `exists ρ . Top`".into(),
                ..start
            }));
        }
        self.sub()?;
        let rhs = self.concept().map_err(ParseError::Syntax)?;
        self.end()?;
        Ok(Axiom::Concept(lhs, rhs))
    }

    fn sub(&mut self) -> Result<(), ParseError> {
        match self.cur.peek() {
            Some(Tok::Sub) => {
                self.cur.next();
                Ok(())
            }
            _ => Err(ParseError::Syntax(self.cur.unexpected("`<:`"))),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if self.cur.at_end() {
            Ok(())
        } else {
            Err(ParseError::Syntax(self.cur.unexpected("end of line")))
        }
    }

    fn concept(&mut self) -> Result<ConceptExpr, SourceError> {
        let first = self.conjunction()?;
        if self.cur.eat_word("or") {
            Ok(ConceptExpr::or(first, self.concept()?))
        } else {
            Ok(first)
        }
    }

    fn conjunction(&mut self) -> Result<ConceptExpr, SourceError> {
        let first = self.unary()?;
        if self.cur.eat_word("and") {
            Ok(ConceptExpr::and(first, self.conjunction()?))
        } else {
            Ok(first)
        }
    }

    fn unary(&mut self) -> Result<ConceptExpr, SourceError> {
        if self.cur.eat_word("not") {
            return Ok(ConceptExpr::not(self.unary()?));
        }
        for (kw, exists) in [("exists", true), ("forall", false)] {
            if self.cur.eat_word(kw) {
                let r = self.role()?;
                self.cur.expect_sym('.')?;
                let body = self.unary()?;
                return Ok(if exists {
                    ConceptExpr::exists(r, body)
                } else {
                    ConceptExpr::forall(r, body)
                });
            }
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<ConceptExpr, SourceError> {
        if self.cur.eat_word("Top") {
            return Ok(ConceptExpr::Top);
        }
        if self.cur.eat_word("Bottom") {
            return Ok(ConceptExpr::Bottom);
        }
        if self.cur.eat_sym('(') {
            let c = self.concept()?;
            self.cur.expect_sym(')')?;
            return Ok(c);
        }
        if self.cur.eat_sym('{') {
            let (name, _) = self.name("an individual name")?;
            self.cur.expect_sym('}')?;
            return Ok(ConceptExpr::Nominal(Individual::new(&name)));
        }
        if self.internal && self.cur.peek() == Some(&Tok::Word("V".into())) && self.cur.peek_at(1) == Some(&Tok::Sym('(')) {
            self.cur.pos += 2;
            let v = match self.cur.next().map(|t| t.tok) {
                Some(Tok::Var(v)) => v,
                _ => {
                    self.cur.pos -= 1;
                    return Err(self.cur.unexpected("a variable"));
                }
            };
            self.cur.expect_sym(')')?;
            return Ok(ConceptExpr::Atom(ConceptName::var(&Variable::new(&v))));
        }
        let (name, marking) = self.name("a concept")?;
        Ok(ConceptExpr::Atom(ConceptName::new(&name).with_marking(marking)))
    }

    fn role(&mut self) -> Result<Role, SourceError> {
        let (name, marking) = self.name("a role name")?;
        let r = Role::new(RoleName::new(&name).with_marking(marking));
        Ok(if self.cur.eat_sym('-') { r.inverted() } else { r })
    }

    fn name(&mut self, what: &str) -> Result<(String, Marking), SourceError> {
        let (prefix, local) = match self.cur.peek() {
            Some(Tok::PName(p, l)) => (p.clone(), l.clone()),
            _ => return Err(self.cur.unexpected(what)),
        };
        if !prefix.is_empty() {
            return Err(self.cur.error_here(format!(
                "only the default prefix `:` is supported, found `{}:`",
                prefix
            )));
        }
        if local.is_empty() {
            return Err(self.cur.error_here("expected a name after `:`"));
        }
        self.cur.next();
        let mut marking = Marking::Plain;
        if let Some(Tok::Quotes(n)) = self.cur.peek() {
            let n = *n;
            if !self.internal {
                return Err(self.cur.error_here("marked names are not allowed in shape files"));
            }
            marking = match n {
                1 => Marking::Med,
                2 => Marking::Out,
                _ => return Err(self.cur.error_here("a name takes at most two marks")),
            };
            self.cur.next();
        }
        Ok((local, marking))
    }
}
