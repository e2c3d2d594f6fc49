//! JSON records emitted under `--json`. Partitions and index values are
//! integer arrays; unbounded counts are decimal strings.

use hookmonoid::quotient::ClassRow;
use hookmonoid::{IndexSet, Matrix3};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub query: String,
    pub method: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub partition: Vec<u32>,
    /// Each hook as a partition.
    pub hooks: Vec<Vec<u32>>,
    pub hooktype: Vec<u32>,
    pub delta: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRecord {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub product: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvertRecord {
    pub n: u64,
    pub from: IndexSet,
    pub to: IndexSet,
    pub value: Vec<u32>,
    pub result: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixSource {
    Partition,
    Delta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub source: MatrixSource,
    pub input: Vec<u32>,
    pub matrix: Matrix3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub hooktype: Vec<u32>,
    pub delta: Vec<u32>,
    pub pi: Vec<u32>,
    pub card: String,
}

impl From<&ClassRow> for ClassRecord {
    fn from(row: &ClassRow) -> Self {
        ClassRecord {
            hooktype: row.hook_type.ks().to_vec(),
            delta: row.delta.ds().to_vec(),
            pi: row.pi.mus().to_vec(),
            card: row.card.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremesRecord {
    pub values: Vec<u32>,
    pub min: Vec<u32>,
    pub max: Vec<u32>,
    pub min_weight: u64,
    pub max_weight: u64,
    pub spread: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderRecord {
    pub partition: Vec<u32>,
    pub cartesian: bool,
    pub hooks: bool,
    pub rows: Vec<String>,
}
