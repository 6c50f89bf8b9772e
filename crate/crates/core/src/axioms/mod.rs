//! Builds the axioms that describe a query's extended graph: closed-world
//! axioms for the pattern and template, inclusions between variable concepts
//! found through component maps, and role inclusions.
//!
//! Every axiom holds on the extended graph of any input graph that satisfies
//! the input shapes. The closed-world section is the exception when the
//! query mentions individuals and has no match, since nominals are never
//! empty.

mod closure;
mod maps;
mod roles;
mod vcg;

use crate::model::{Axiom, Query};

pub use closure::{cwa, term_concept, una};
pub use maps::{component_maps, ext_atoms, ma_sin, max_ext, ComponentMap};
pub use roles::rs;
pub use vcg::{components, is_acyclic, Vcg};

/// The axiom set used for filtering, kept in sections for inspection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigmaBundle {
    pub input: Vec<Axiom>,
    pub una: Vec<Axiom>,
    pub cwa: Vec<Axiom>,
    pub map: Vec<Axiom>,
    pub prop: Vec<Axiom>,
}

impl SigmaBundle {
    pub fn all(&self) -> Vec<Axiom> {
        [&self.input, &self.una, &self.cwa, &self.map, &self.prop]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }

    pub fn len(&self) -> usize {
        self.input.len() + self.una.len() + self.cwa.len() + self.map.len() + self.prop.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn build_sigma(q: &Query, sin: &[Axiom]) -> SigmaBundle {
    SigmaBundle {
        input: sin.to_vec(),
        una: una(q),
        cwa: cwa(q),
        map: ma_sin(q, sin),
        prop: rs(q),
    }
}
