//! JSON input formats.
//!
//! Groups:
//!
//! ```json
//! {"kind": "table", "mul": [[0, 1], [1, 0]]}
//! {"kind": "permutation", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
//! ```
//!
//! A table group may also carry `identity`, `inv` and `labels`; supplied
//! identity and inverses are verified rather than trusted.
//!
//! Actions:
//!
//! ```json
//! {"group": <group>, "degree": 2, "act": [[0, 1], [1, 0]]}
//! {"kind": "evaluation", "group": {"kind": "permutation", ...}}
//! {"kind": "corpus", "name": "symmetric", "params": {"n": "3"}}
//! ```
//!
//! Functions on `X` are `{"values": [<scalar>, ...]}` and functions on an
//! invariant subset are `{"subset": [points...], "values": [...]}`. A scalar
//! is a pair of strings `["num/den", "num/den"]` (real, imaginary); the
//! integer shorthand `"3"` is accepted. Partitions are
//! `{"degree": n, "cells": [[...], ...]}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::action::{GroupAction, Partition, Point};
use crate::corpus;
use crate::error::{Error, InputError};
use crate::exact_arith::GaussianRational;
use crate::function_space::FunctionOnX;
use crate::group::{Element, FiniteGroup, Permutation, PermutationGroup};
use crate::res_ind::{FunctionOnY, InvariantSubset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Table {
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<Element>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        inv: Option<Vec<Element>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

/// A validated group, with its permutations when it was given by generators.
pub struct ResolvedGroup {
    pub group: FiniteGroup,
    pub permutations: Option<PermutationGroup>,
}

impl GroupSpec {
    pub fn resolve(&self, cap: usize) -> Result<ResolvedGroup, Error> {
        match self {
            GroupSpec::Table {
                mul,
                identity,
                inv,
                labels,
            } => {
                let mut group = FiniteGroup::from_table(mul.clone(), *identity, inv.clone())?;
                if let Some(labels) = labels {
                    if labels.len() != group.order() {
                        return Err(schema(format!(
                            "{} labels for a group of order {}",
                            labels.len(),
                            group.order()
                        )));
                    }
                    group = group.with_labels(labels.clone());
                }
                Ok(ResolvedGroup {
                    group,
                    permutations: None,
                })
            }
            GroupSpec::Permutation { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::new(g.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                let pg = PermutationGroup::from_generators(*degree, &gens, cap)?;
                Ok(ResolvedGroup {
                    group: pg.group.clone(),
                    permutations: Some(pg),
                })
            }
        }
    }

    /// The table form of a group.
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupSpec::Table {
            mul: g.table(),
            identity: None,
            inv: None,
            labels: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act: Option<Vec<Vec<Point>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
}

impl ActionSpec {
    pub fn resolve(&self, cap: usize) -> Result<GroupAction, Error> {
        match self.kind.as_deref() {
            None | Some("table") => {
                let group = self
                    .group
                    .as_ref()
                    .ok_or_else(|| schema("action needs a \"group\""))?;
                let act = self
                    .act
                    .clone()
                    .ok_or_else(|| schema("action needs an \"act\" table"))?;
                let resolved = group.resolve(cap)?;
                if let (Some(n), Some(row)) = (self.degree, act.first()) {
                    if row.len() != n {
                        return Err(schema(format!(
                            "degree {n} but act rows have length {}",
                            row.len()
                        )));
                    }
                }
                Ok(GroupAction::new(Arc::new(resolved.group), act)?)
            }
            Some("evaluation") => {
                let group = self
                    .group
                    .as_ref()
                    .ok_or_else(|| schema("evaluation needs a \"group\""))?;
                let pg = group
                    .resolve(cap)?
                    .permutations
                    .ok_or_else(|| schema("evaluation needs a permutation group"))?;
                if pg.degree == 0 {
                    return Err(crate::action::ActionError::EmptyDomain.into());
                }
                Ok(GroupAction::evaluation(&pg))
            }
            Some("corpus") => {
                let name = self
                    .name
                    .as_deref()
                    .ok_or_else(|| schema("corpus action needs a \"name\""))?;
                let params = self.params.clone().unwrap_or_default();
                Ok(corpus::build(name, &params)?.action)
            }
            Some(other) => Err(schema(format!("unknown action kind {other:?}"))),
        }
    }

    /// The explicit table form of an action.
    pub fn from_action(action: &GroupAction) -> Self {
        ActionSpec {
            group: Some(GroupSpec::from_group(action.group())),
            degree: Some(action.degree()),
            act: Some(action.table()),
            ..ActionSpec::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    pub values: Vec<GaussianRational>,
}

impl FunctionSpec {
    pub fn resolve(&self, act: &GroupAction) -> Result<FunctionOnX, Error> {
        let f = FunctionOnX::new(self.values.clone());
        crate::function_space::check_degree(act, &f)?;
        Ok(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetFunctionSpec {
    pub subset: Vec<Point>,
    pub values: Vec<GaussianRational>,
}

impl SubsetFunctionSpec {
    /// Values are listed in the order of `subset` as written; they are
    /// re-indexed to the sorted point order.
    pub fn resolve(&self, act: &GroupAction) -> Result<FunctionOnY, Error> {
        if self.values.len() != self.subset.len() {
            return Err(schema(format!(
                "{} values for a subset of {} points",
                self.values.len(),
                self.subset.len()
            )));
        }
        let y = InvariantSubset::new(act, &self.subset)?;
        if y.len() != self.subset.len() {
            return Err(schema("subset lists a point twice"));
        }
        let mut values = vec![GaussianRational::zero(); y.len()];
        for (&p, v) in self.subset.iter().zip(&self.values) {
            values[y.position(p).expect("point in subset")] = v.clone();
        }
        Ok(FunctionOnY::new(y, values)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionJson {
    pub degree: usize,
    pub cells: Vec<Vec<Point>>,
}

impl PartitionJson {
    pub fn resolve(&self) -> Result<Partition, Error> {
        Ok(Partition::new(self.degree, self.cells.clone())?)
    }
}

fn schema(message: impl Into<String>) -> Error {
    InputError::Schema {
        message: message.into(),
    }
    .into()
}
