use std::fmt;

/// A position in a source text together with the offending line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub snippet: String,
}

impl fmt::Display for SourceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        writeln!(f, "  {}", self.snippet)?;
        write!(f, "  {}^", " ".repeat(self.column.saturating_sub(1)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{0}")]
    Syntax(SourceError),
    #[error("unsupported feature `{feature}`\n{at}")]
    Unsupported { feature: String, at: SourceError },
    #[error("template variable ?{var} does not occur in the WHERE clause\n{at}")]
    UnboundTemplateVariable { var: String, at: SourceError },
    #[error("shape target must be a concept name or `exists ρ . Top`\n{0}")]
    InvalidTarget(SourceError),
}

impl ParseError {
    pub fn location(&self) -> &SourceError {
        match self {
            ParseError::Syntax(e) | ParseError::InvalidTarget(e) => e,
            ParseError::Unsupported { at, .. } | ParseError::UnboundTemplateVariable { at, .. } => at,
        }
    }
}
