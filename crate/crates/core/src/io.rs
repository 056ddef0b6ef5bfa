//! Covering JSON documents.
//!
//! ```json
//! {"universe": ["a","b","c"], "blocks": [["a","b"],["a","c"]]}
//! ```
//!
//! Block order and the order of labels inside a block carry no meaning. The
//! printer emits the universe in stored order and blocks sorted by mask.

use serde::{Deserialize, Serialize};

use crate::covering::Covering;
use crate::error::Result;
use crate::universe::{Universe, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringDoc {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl CoveringDoc {
    pub fn into_covering(self, cap: usize) -> Result<Covering> {
        let universe = Universe::with_cap(self.universe, cap)?;
        Covering::from_labels(&universe, &self.blocks)
    }
}

impl From<&Covering> for CoveringDoc {
    fn from(c: &Covering) -> Self {
        CoveringDoc {
            universe: c.universe().labels().to_vec(),
            blocks: c.to_labels(),
        }
    }
}

pub fn parse_covering(text: &str) -> Result<Covering> {
    parse_covering_with_cap(text, DEFAULT_CAP)
}

pub fn parse_covering_with_cap(text: &str, cap: usize) -> Result<Covering> {
    serde_json::from_str::<CoveringDoc>(text)?.into_covering(cap)
}

/// Canonical single-line form.
pub fn print_covering(c: &Covering) -> String {
    serde_json::to_string(&CoveringDoc::from(c)).expect("covering document serializes")
}
