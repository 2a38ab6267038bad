//! Witness records: a partition certifying that a target is an eigenvalue.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::partition::Partition;

/// One step in how a witness was produced, outermost first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainStep {
    Family(FamilyId),
    /// The witness is the conjugate of the one produced by the remaining steps.
    Conjugate,
    /// A head part `n1` was prepended to a residual witness.
    Head(u32),
    /// Found by partition enumeration.
    Oracle,
}

impl fmt::Display for ChainStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainStep::Family(id) => id.fmt(f),
            ChainStep::Conjugate => f.write_str("conjugate"),
            ChainStep::Head(n1) => write!(f, "head:{n1}"),
            ChainStep::Oracle => f.write_str("Oracle"),
        }
    }
}

impl FromStr for ChainStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conjugate" => Ok(ChainStep::Conjugate),
            "Oracle" => Ok(ChainStep::Oracle),
            _ => {
                if let Some(head) = s.strip_prefix("head:") {
                    head.parse()
                        .map(ChainStep::Head)
                        .map_err(|_| Error::Config(format!("bad head step {s:?}")))
                } else {
                    s.parse().map(ChainStep::Family)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WitnessJson", into = "WitnessJson")]
pub struct WitnessRecord {
    pub n: u32,
    pub target: i64,
    pub partition: Partition,
    pub family_chain: Vec<ChainStep>,
    /// Set only after re-evaluating the partition's eigenvalue.
    pub verified: bool,
}

impl WitnessRecord {
    /// Builds the record and evaluates `partition` to decide `verified`.
    pub fn new(n: u32, target: i64, partition: Partition, family_chain: Vec<ChainStep>) -> Self {
        let verified = partition.n() == u64::from(n)
            && partition
                .eigenvalue()
                .is_ok_and(|value| value.get() == target);
        Self {
            n,
            target,
            partition,
            family_chain,
            verified,
        }
    }

    /// The innermost constructive source: the last family in the chain, or
    /// `Oracle` when enumeration produced the base witness.
    pub fn family(&self) -> String {
        self.family_chain
            .iter()
            .rev()
            .find(|step| matches!(step, ChainStep::Family(_) | ChainStep::Oracle))
            .map_or_else(|| "unknown".to_owned(), ToString::to_string)
    }

    /// Heads prepended along the chain, outermost first.
    pub fn heads(&self) -> Vec<u32> {
        self.family_chain
            .iter()
            .filter_map(|step| match step {
                ChainStep::Head(n1) => Some(*n1),
                _ => None,
            })
            .collect()
    }

    /// Conjugated record certifying `-target`.
    pub fn conjugated(self) -> WitnessRecord {
        let mut chain = Vec::with_capacity(self.family_chain.len() + 1);
        chain.push(ChainStep::Conjugate);
        chain.extend(self.family_chain);
        WitnessRecord::new(self.n, -self.target, self.partition.conjugate(), chain)
    }

    /// Errors unless the record verified.
    pub fn into_verified(self) -> Result<WitnessRecord> {
        if self.verified {
            Ok(self)
        } else {
            let got = self.partition.eigenvalue().map_or(i64::MIN, |v| v.get());
            Err(Error::VerificationFailed {
                n: self.n,
                target: self.target,
                got,
            })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    n: u32,
    target: i64,
    family: String,
    partition: Partition,
    verified: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    chain: Vec<String>,
}

impl From<WitnessRecord> for WitnessJson {
    fn from(r: WitnessRecord) -> Self {
        let family = r.family();
        let chain = if r.family_chain.len() > 1 {
            r.family_chain.iter().map(ToString::to_string).collect()
        } else {
            Vec::new()
        };
        WitnessJson {
            n: r.n,
            target: r.target,
            family,
            partition: r.partition,
            verified: r.verified,
            chain,
        }
    }
}

impl TryFrom<WitnessJson> for WitnessRecord {
    type Error = Error;

    fn try_from(j: WitnessJson) -> Result<Self> {
        let family_chain = if j.chain.is_empty() {
            vec![j.family.parse()?]
        } else {
            j.chain
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<ChainStep>>>()?
        };
        Ok(WitnessRecord {
            n: j.n,
            target: j.target,
            partition: j.partition,
            family_chain,
            verified: j.verified,
        })
    }
}
