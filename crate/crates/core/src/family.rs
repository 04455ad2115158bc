//! Finite sets of graphs up to isomorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalCode, IsolatedPolicy};

/// Where a family member came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    /// Built by a constructor from its textual definition.
    Constructed,
    /// Produced by exhaustive enumeration.
    Enumerated,
    /// Read from a gadget file; `reconstruction` marks best-effort entries.
    GadgetFile { path: String, line: usize, reconstruction: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub name: Option<String>,
    pub graph: Graph,
    pub code: CanonicalCode,
    pub provenance: Provenance,
}

/// Graphs keyed by canonical code (isolated vertices dropped), in code order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFamily {
    pub label: String,
    /// Host order bound, when the family has one.
    pub n: Option<usize>,
    /// Common edge count, when all members share one.
    pub t: Option<usize>,
    members: BTreeMap<String, FamilyMember>,
}

impl GraphFamily {
    pub fn new(label: impl Into<String>) -> Self {
        GraphFamily { label: label.into(), ..Default::default() }
    }

    pub fn with_bounds(mut self, n: Option<usize>, t: Option<usize>) -> Self {
        self.n = n;
        self.t = t;
        self
    }

    /// Inserts a graph; returns `false` if an isomorphic member was already present.
    pub fn insert(&mut self, name: Option<&str>, graph: Graph, provenance: Provenance) -> Result<bool, GraphError> {
        let code = canonical_form(&graph, IsolatedPolicy::Drop)?;
        Ok(self.insert_coded(name, graph, code, provenance))
    }

    pub fn insert_coded(&mut self, name: Option<&str>, graph: Graph, code: CanonicalCode, provenance: Provenance) -> bool {
        if self.members.contains_key(&code.code) {
            return false;
        }
        self.members.insert(
            code.code.clone(),
            FamilyMember { name: name.map(str::to_owned), graph, code, provenance },
        );
        true
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &FamilyMember> {
        self.members.values()
    }

    pub fn contains_code(&self, code: &CanonicalCode) -> bool {
        self.members.contains_key(&code.code)
    }

    pub fn contains(&self, g: &Graph) -> Result<bool, GraphError> {
        Ok(self.contains_code(&canonical_form(g, IsolatedPolicy::Drop)?))
    }

    pub fn get(&self, g: &Graph) -> Result<Option<&FamilyMember>, GraphError> {
        Ok(self.members.get(&canonical_form(g, IsolatedPolicy::Drop)?.code))
    }

    /// Member names, `?` standing in for unnamed members.
    pub fn names(&self) -> Vec<String> {
        self.members().map(|m| m.name.clone().unwrap_or_else(|| format!("?{}", m.code))).collect()
    }

    pub fn codes(&self) -> impl Iterator<Item = &str> {
        self.members.keys().map(String::as_str)
    }

    /// Renames members isomorphic to a graph in `named`, leaving others untouched.
    pub fn adopt_names(&mut self, named: &GraphFamily) {
        for (code, m) in self.members.iter_mut() {
            if let Some(other) = named.members.get(code) {
                if other.name.is_some() {
                    m.name = other.name.clone();
                }
            }
        }
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&FamilyMember) -> bool) {
        self.members.retain(|_, m| keep(m));
    }
}
