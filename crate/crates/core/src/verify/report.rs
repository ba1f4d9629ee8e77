use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::ClaimId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Self::Lt => "<",
            Self::Le => "<=",
            Self::Eq => "=",
            Self::Ge => ">=",
            Self::Gt => ">",
        }
    }

    pub fn admits(&self, ord: Ordering) -> bool {
        match self {
            Self::Lt => ord.is_lt(),
            Self::Le => ord.is_le(),
            Self::Eq => ord.is_eq(),
            Self::Ge => ord.is_ge(),
            Self::Gt => ord.is_gt(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// An exact value stored as a rational; integers have denominator 1.
pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn nat(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `lhs relation rhs`. Whether it holds is always recomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: &'static str,
    pub lhs: BigRational,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Comparison {
    pub fn new(
        label: &'static str,
        lhs: BigRational,
        relation: Relation,
        rhs: BigRational,
    ) -> Self {
        Self {
            label,
            lhs,
            relation,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation.admits(self.lhs.cmp(&self.rhs))
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "lhs": self.lhs.to_string(),
            "relation": self.relation.symbol(),
            "rhs": self.rhs.to_string(),
            "holds": self.holds(),
            "is_equality": self.is_equality(),
        })
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {}",
            self.label, self.lhs, self.relation, self.rhs
        )
    }
}

/// Verdict for one instance of a claim. Chained claims (lower and upper
/// bound) carry one comparison per bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub claim_id: ClaimId,
    pub witness: String,
    pub comparisons: Vec<Comparison>,
}

impl InequalityReport {
    pub fn new(
        claim_id: ClaimId,
        witness: impl Into<String>,
        comparisons: Vec<Comparison>,
    ) -> Self {
        Self {
            claim_id,
            witness: witness.into(),
            comparisons,
        }
    }

    pub fn holds(&self) -> bool {
        self.comparisons.iter().all(Comparison::holds)
    }

    /// Every comparison is tight.
    pub fn is_equality(&self) -> bool {
        self.comparisons.iter().all(Comparison::is_equality)
    }

    /// Labels of the tight comparisons.
    pub fn tight(&self) -> Vec<&'static str> {
        self.comparisons
            .iter()
            .filter(|c| c.is_equality())
            .map(|c| c.label)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim_id": self.claim_id.as_str(),
            "witness": self.witness,
            "comparisons": self.comparisons.iter().map(Comparison::to_json).collect::<Vec<_>>(),
            "holds": self.holds(),
            "is_equality": self.is_equality(),
        })
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}:", self.claim_id, self.witness)?;
        for c in &self.comparisons {
            write!(f, " {c};")?;
        }
        write!(f, " holds={}", self.holds())
    }
}
