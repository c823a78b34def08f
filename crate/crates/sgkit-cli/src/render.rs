//! Human-readable output, using the same notation as the analysis sets:
//! `LZ(0) = {0, 2}`.

use sgkit::factor::{FactorKind, Factorization};

use crate::document::{AnalysisDocument, PartitionDoc};

pub fn fmt_set(members: &[usize]) -> String {
    let cells: Vec<String> = members.iter().map(usize::to_string).collect();
    format!("{{{}}}", cells.join(", "))
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

fn partition_line(doc: &PartitionDoc) -> String {
    let mut parts: Vec<String> = doc.classes.iter().map(|c| fmt_set(c)).collect();
    if !doc.non_idempotents.is_empty() {
        parts.push(format!("non-idempotents: {}", fmt_set(&doc.non_idempotents)));
    }
    parts.join(" | ")
}

pub fn render_analysis(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line(format!("order: {}", doc.order));
    line(format!("digest: {}", doc.digest));
    match &doc.associativity.witness {
        None => line(format!(
            "associative: {}",
            yes_no(doc.associativity.status == "valid")
        )),
        Some([i, j, k]) => {
            line("associative: no".to_string());
            line(format!("witness: ({i}·{j})·{k} ≠ {i}·({j}·{k})"));
        }
    }
    line(format!("band: {}", yes_no(doc.predicates.band)));
    line(format!(
        "left zero semigroup: {}",
        yes_no(doc.predicates.left_zero)
    ));
    line(format!(
        "right zero semigroup: {}",
        yes_no(doc.predicates.right_zero)
    ));
    match doc.predicates.rectangular_band {
        Some(value) => line(format!("rectangular band: {}", yes_no(value))),
        None => line("rectangular band: n/a".to_string()),
    }
    line(format!("right group: {}", yes_no(doc.predicates.right_group)));
    line(format!("left group: {}", yes_no(doc.predicates.left_group)));
    line(format!("idempotents: {}", fmt_set(&doc.idempotents)));

    for profile in &doc.profiles {
        let e = profile.e;
        line(format!("e = {e}:"));
        line(format!("  LZ({e}) = {}", fmt_set(&profile.lz)));
        line(format!("  RZ({e}) = {}", fmt_set(&profile.rz)));
        line(format!("  eSe = {}", fmt_set(&profile.local_monoid)));
        line(format!("  Se = {}", fmt_set(&profile.left_monoid)));
        line(format!("  eS = {}", fmt_set(&profile.right_monoid)));
        line(format!("  zero-maximal = {}", fmt_set(&profile.zero_maximal)));
        line(format!("  H({e}) = {}", fmt_set(&profile.h)));
        line(format!("  RG({e}) = {}", fmt_set(&profile.rg)));
        line(format!("  LG({e}) = {}", fmt_set(&profile.lg)));
    }

    if let Some(partitions) = &doc.partitions {
        line(format!("LZ partition: {}", partition_line(&partitions.lz)));
        line(format!("RZ partition: {}", partition_line(&partitions.rz)));
    }

    if let Some(factorizations) = &doc.factorizations {
        line(format!("factorizations: {}", factorizations.len()));
        for f in factorizations {
            line(format!(
                "  [{}] e = {}: left = {}, right = {}, product = {}",
                f.kind,
                f.anchor,
                fmt_set(&f.left),
                fmt_set(&f.right),
                fmt_set(&f.product)
            ));
        }
    }

    out
}

/// One factorization as a text line, with the factor names the kind uses.
pub fn factorization_line(f: &Factorization) -> String {
    let (left_name, right_name) = match f.kind {
        FactorKind::RectBand => ("T_L", "T_R"),
        FactorKind::RightGroup => ("H'", "RZ'"),
        FactorKind::LeftGroup => ("LZ'", "H'"),
    };
    format!(
        "{left_name} = {}  {right_name} = {}  T = {}",
        fmt_set(&f.left.to_vec()),
        fmt_set(&f.right.to_vec()),
        fmt_set(&f.product.to_vec())
    )
}
