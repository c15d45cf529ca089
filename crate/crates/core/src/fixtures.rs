//! Named example sets shipped with the crate (`data/examples.json`).
//!
//! Each entry is `{name?, group: [a, b], classes: [[x, y], ...], expect}`
//! with the group in invariant-factor form.

use serde::{Deserialize, Serialize};

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::nonsep::HSet;

pub const EXAMPLES_JSON: &str = include_str!("../data/examples.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: GroupSpec,
    pub classes: Vec<GroupElement>,
    pub expect: bool,
}

impl Fixture {
    pub fn hset(&self) -> Result<HSet> {
        HSet::new(&self.group, &self.classes)
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("{} {:?}", self.group, self.classes))
    }
}

pub fn parse_fixtures(json: &str) -> Result<Vec<Fixture>> {
    serde_json::from_str(json).map_err(|e| Error::InvalidArgument(format!("bad fixture file: {e}")))
}

/// The built-in examples.
pub fn examples() -> Result<Vec<Fixture>> {
    parse_fixtures(EXAMPLES_JSON)
}
