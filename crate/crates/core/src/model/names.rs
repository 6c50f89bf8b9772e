use std::fmt;
use std::sync::Arc;

/// Which copy of the vocabulary a name belongs to.
///
/// Plain names describe the input graph, `Med` names the pattern matches
/// and `Out` names the query result.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marking {
    #[default]
    Plain,
    Med,
    Out,
}

impl Marking {
    pub fn suffix(self) -> &'static str {
        match self {
            Marking::Plain => "",
            Marking::Med => "'",
            Marking::Out => "''",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(Arc<str>);

impl Variable {
    pub fn new(name: &str) -> Self {
        Variable(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Individual(Arc<str>);

impl Individual {
    pub fn new(name: &str) -> Self {
        Individual(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Individual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, ":{}", self.0)
    }
}

/// A concept name. `Var(x)` is the concept collecting every value the
/// query variable `x` takes across all matches of the pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConceptName {
    Named { marking: Marking, base: Arc<str> },
    Var(Variable),
}

impl ConceptName {
    pub fn new(base: &str) -> Self {
        ConceptName::Named {
            marking: Marking::Plain,
            base: Arc::from(base),
        }
    }

    pub fn var(v: &Variable) -> Self {
        ConceptName::Var(v.clone())
    }

    pub fn marking(&self) -> Marking {
        match self {
            ConceptName::Named { marking, .. } => *marking,
            ConceptName::Var(_) => Marking::Plain,
        }
    }

    pub fn base(&self) -> &str {
        match self {
            ConceptName::Named { base, .. } => base,
            ConceptName::Var(v) => v.as_str(),
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, ConceptName::Var(_))
    }

    /// Variable concepts carry no marking and are returned unchanged.
    pub fn with_marking(&self, m: Marking) -> Self {
        match self {
            ConceptName::Named { base, .. } => ConceptName::Named {
                marking: m,
                base: base.clone(),
            },
            ConceptName::Var(_) => self.clone(),
        }
    }
}

impl fmt::Display for ConceptName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptName::Named { marking, base } => write!(f, ":{}{}", base, marking.suffix()),
            ConceptName::Var(v) => write!(f, "V({})", v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoleName {
    pub marking: Marking,
    pub base: Arc<str>,
}

impl RoleName {
    pub fn new(base: &str) -> Self {
        RoleName {
            marking: Marking::Plain,
            base: Arc::from(base),
        }
    }

    pub fn with_marking(&self, m: Marking) -> Self {
        RoleName {
            marking: m,
            base: self.base.clone(),
        }
    }
}

impl fmt::Display for RoleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, ":{}{}", self.base, self.marking.suffix())
    }
}

/// A role name or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Role {
    pub name: RoleName,
    pub inverse: bool,
}

impl Role {
    pub fn new(name: RoleName) -> Self {
        Role {
            name,
            inverse: false,
        }
    }

    pub fn inv(name: RoleName) -> Self {
        Role {
            name,
            inverse: true,
        }
    }

    pub fn inverted(&self) -> Self {
        Role {
            name: self.name.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn with_marking(&self, m: Marking) -> Self {
        Role {
            name: self.name.with_marking(m),
            inverse: self.inverse,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}-", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}
