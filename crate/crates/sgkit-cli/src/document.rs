//! The machine-readable analysis report.
//!
//! Serialization is deterministic: struct fields appear in declaration
//! order, every set is a sorted index array, and nothing time- or
//! environment-dependent enters the document, so identical input yields
//! byte-identical output.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use sgkit::error::Error;
use sgkit::factor::{self, Factorization};
use sgkit::set::ElementSet;
use sgkit::structure::{self, Partition};
use sgkit::table::{AssocStatus, CayleyTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    /// SHA-256 of the canonical table text (order line plus row lines).
    pub digest: String,
    pub order: usize,
    pub associativity: AssociativityDoc,
    pub predicates: PredicatesDoc,
    pub idempotents: Vec<usize>,
    /// One profile per idempotent; empty when the table is not associative.
    pub profiles: Vec<ProfileDoc>,
    /// Present only for associative tables.
    pub partitions: Option<PartitionsDoc>,
    /// Present only when factorization enumeration was requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factorizations: Option<Vec<FactorizationDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityDoc {
    pub status: String,
    /// The lexicographically first violating triple, when invalid.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicatesDoc {
    pub band: bool,
    pub left_zero: bool,
    pub right_zero: bool,
    /// `None` when the table is not associative.
    pub rectangular_band: Option<bool>,
    pub right_group: bool,
    pub left_group: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub e: usize,
    pub lz: Vec<usize>,
    pub rz: Vec<usize>,
    pub local_monoid: Vec<usize>,
    pub left_monoid: Vec<usize>,
    pub right_monoid: Vec<usize>,
    pub zero_maximal: Vec<usize>,
    pub h: Vec<usize>,
    pub rg: Vec<usize>,
    pub lg: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionsDoc {
    pub lz: PartitionDoc,
    pub rz: PartitionDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub classes: Vec<Vec<usize>>,
    pub non_idempotents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDoc {
    pub kind: String,
    pub anchor: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub product: Vec<usize>,
}

/// SHA-256 over the canonical text form of the table.
pub fn table_digest(table: &CayleyTable) -> String {
    let mut canonical = format!("{}\n", table.order());
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        canonical.push_str(&cells.join(" "));
        canonical.push('\n');
    }
    let hash = Sha256::digest(canonical.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in hash {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

fn set_vec(set: &ElementSet) -> Vec<usize> {
    set.to_vec()
}

fn partition_doc(partition: &Partition) -> PartitionDoc {
    PartitionDoc {
        classes: partition.classes().iter().map(set_vec).collect(),
        non_idempotents: set_vec(partition.non_idempotents()),
    }
}

fn factorization_doc(f: &Factorization) -> FactorizationDoc {
    FactorizationDoc {
        kind: f.kind.to_string(),
        anchor: f.anchor,
        left: set_vec(&f.left),
        right: set_vec(&f.right),
        product: set_vec(&f.product),
    }
}

impl AnalysisDocument {
    /// Analyzes a parsed (validated) table. Structural sections are filled
    /// only for associative tables; the equational predicates are reported
    /// either way.
    pub fn build(table: &CayleyTable, with_factorizations: bool) -> Result<Self, Error> {
        let associative = matches!(table.status(), AssocStatus::Valid);
        let associativity = match table.status() {
            AssocStatus::Valid => AssociativityDoc {
                status: "valid".to_string(),
                witness: None,
            },
            AssocStatus::Invalid(w) => AssociativityDoc {
                status: "invalid".to_string(),
                witness: Some([w.i, w.j, w.k]),
            },
            AssocStatus::Unchecked => AssociativityDoc {
                status: "unchecked".to_string(),
                witness: None,
            },
        };

        let predicates = PredicatesDoc {
            band: table.is_band(),
            left_zero: table.is_left_zero(),
            right_zero: table.is_right_zero(),
            rectangular_band: if associative {
                Some(table.is_rectangular_band()?)
            } else {
                None
            },
            right_group: table.is_right_group(),
            left_group: table.is_left_group(),
        };

        let idempotents = structure::idempotents(table).to_vec();

        let mut profiles = Vec::new();
        let mut partitions = None;
        let mut factorizations = None;
        if associative {
            for profile in structure::idempotent_profiles(table)? {
                profiles.push(ProfileDoc {
                    e: profile.e,
                    lz: set_vec(&profile.lz),
                    rz: set_vec(&profile.rz),
                    local_monoid: set_vec(&profile.local_monoid),
                    left_monoid: set_vec(&profile.left_monoid),
                    right_monoid: set_vec(&profile.right_monoid),
                    zero_maximal: set_vec(&profile.zero_maximal),
                    h: set_vec(&profile.h),
                    rg: set_vec(&profile.rg),
                    lg: set_vec(&profile.lg),
                });
            }
            partitions = Some(PartitionsDoc {
                lz: partition_doc(&structure::lz_partition(table)?),
                rz: partition_doc(&structure::rz_partition(table)?),
            });
            if with_factorizations {
                let mut docs = Vec::new();
                for &e in &idempotents {
                    for f in factor::enumerate_rect_bands(table, e)? {
                        docs.push(factorization_doc(&f));
                    }
                    for f in factor::enumerate_right_subgroups(table, e)? {
                        docs.push(factorization_doc(&f));
                    }
                    for f in factor::enumerate_left_subgroups(table, e)? {
                        docs.push(factorization_doc(&f));
                    }
                }
                factorizations = Some(docs);
            }
        }

        Ok(AnalysisDocument {
            digest: table_digest(table),
            order: table.order(),
            associativity,
            predicates,
            idempotents,
            profiles,
            partitions,
            factorizations,
        })
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("document serialization cannot fail");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_table_str;

    #[test]
    fn json_round_trips_losslessly() {
        let table = parse_table_str("4\n0 1 0 1\n0 1 0 1\n2 3 2 3\n2 3 2 3\n").unwrap();
        let doc = AnalysisDocument::build(&table, true).unwrap();
        let json = doc.to_json();
        let back: AnalysisDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn json_output_is_stable() {
        let table = parse_table_str("2\n0 0\n1 1\n").unwrap();
        let a = AnalysisDocument::build(&table, false).unwrap().to_json();
        let b = AnalysisDocument::build(&table, false).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn digest_ignores_layout_but_not_content() {
        let a = parse_table_str("2\n0 0\n1 1\n").unwrap();
        let b = parse_table_str("# comment\n2\n  0 0 1 1").unwrap();
        let c = parse_table_str("2\n0 1\n1 0\n").unwrap();
        assert_eq!(table_digest(&a), table_digest(&b));
        assert_ne!(table_digest(&a), table_digest(&c));
    }

    #[test]
    fn non_associative_document_skips_structures() {
        let table = parse_table_str("2\n1 1\n0 0\n").unwrap();
        let doc = AnalysisDocument::build(&table, true).unwrap();
        assert_eq!(doc.associativity.status, "invalid");
        assert_eq!(doc.associativity.witness, Some([0, 0, 0]));
        assert_eq!(doc.predicates.rectangular_band, None);
        assert!(doc.profiles.is_empty());
        assert!(doc.partitions.is_none());
        assert!(doc.factorizations.is_none());
    }
}
