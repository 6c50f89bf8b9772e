//! Infers the SHACL shapes that every result of a SPARQL CONSTRUCT query
//! satisfies, given shapes that hold on the queried graph.
//!
//! The pipeline turns the query into description logic axioms that relate
//! the input graph, the pattern matches and the query result, then keeps each
//! candidate shape over the result vocabulary that a tableau reasoner proves
//! entailed.

pub mod axioms;
pub mod candidates;
pub mod model;
pub mod oracle;
pub mod par;
pub mod pipeline;
pub mod reasoner;
pub mod syntax;
