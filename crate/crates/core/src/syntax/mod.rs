//! Text formats: the shape language and the supported SPARQL subset.
//!
//! Shapes are written one per line, e.g. `:A <: exists :p . :B` or
//! `exists :r- . Top <: forall :p . :E`. Operators are `not`, `and`, `or`,
//! `exists`, `forall`, `Top`, `Bottom` and nominals `{:a}`; `and` binds
//! tighter than `or` and quantifier bodies are single operands.

mod error;
mod lexer;
mod render;
mod shapes;
mod sparql;

pub use error::{ParseError, SourceError};
pub use render::{render_axiom, render_axioms, render_concept, render_graph, render_query, render_shape};
pub use shapes::{parse_axioms, parse_concept, parse_shapes};
pub use sparql::parse_query;
