//! Comparison engine: generates a multiplet for every designated-zero group
//! of a reference table and checks each row against it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use multiplex_core::{generate_multiplet, ParabolicSpec, Signature};

use crate::catalog::{evaluate_fixture, ConcreteEntry, FixtureTable};
use crate::rng::SplitMix64;
use crate::CliError;

/// Seed of the default sampled assignments.
pub const DEFAULT_SEED: u64 = 0x6D75_6C74_6970_6C65;

/// Number of pseudo-random assignments tried besides all-ones.
pub const SAMPLED_ASSIGNMENTS: usize = 5;

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub context: String,
    pub expected: String,
    pub actual: String,
}

/// matched/checked tallies per comparison category.
#[derive(Debug, Clone, Copy, Default)]
pub struct Tally {
    pub matched: usize,
    pub checked: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) -> bool {
        self.checked += 1;
        self.matched += usize::from(ok);
        ok
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyCounts {
    pub signatures: Tally,
    pub c_values: Tally,
    pub embeddings: Tally,
    pub pairs: Tally,
    pub partners: Tally,
    pub completeness: Tally,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub fixture: String,
    pub assignments: Vec<Vec<i64>>,
    pub counts: VerifyCounts,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "fixture {}", self.fixture);
        let _ = writeln!(
            out,
            "assignments ({}): {}",
            self.assignments.len(),
            self.assignments
                .iter()
                .map(|a| format!("{a:?}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let c = &self.counts;
        let _ = writeln!(
            out,
            "signatures {}/{}  c values {}/{}  embeddings {}/{}  pairs {}/{}  partner checks {}/{}  completeness {}/{}",
            c.signatures.matched, c.signatures.checked,
            c.c_values.matched, c.c_values.checked,
            c.embeddings.matched, c.embeddings.checked,
            c.pairs.matched, c.pairs.checked,
            c.partners.matched, c.partners.checked,
            c.completeness.matched, c.completeness.checked,
        );
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "MISMATCH {}: expected {}, got {}",
                m.context, m.expected, m.actual
            );
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.ok() { "PASS" } else { "FAIL" }
        );
        out
    }
}

/// Runs a table against freshly generated multiplets.
///
/// With no explicit labels, uses the all-ones assignment plus
/// [`SAMPLED_ASSIGNMENTS`] seeded pseudo-random positive ones. Designated
/// zero positions are forced to zero per group either way.
pub fn verify(
    table: &FixtureTable,
    labels: Option<&[i64]>,
    seed: u64,
) -> Result<VerifyReport, CliError> {
    let rank = table.matrix_size - 1;
    let mut report = VerifyReport {
        fixture: table.name.clone(),
        assignments: Vec::new(),
        counts: VerifyCounts::default(),
        mismatches: Vec::new(),
        notes: Vec::new(),
    };

    match labels {
        Some(given) => {
            if given.len() != rank {
                return Err(CliError::Domain(format!(
                    "expected {rank} labels for {}, got {}",
                    table.name,
                    given.len()
                )));
            }
            if let Some(bad) = given.iter().find(|&&v| v < 0) {
                return Err(CliError::Domain(format!("negative inducing label {bad}")));
            }
            report.assignments.push(given.to_vec());
        }
        None => {
            report.assignments.push(vec![1; rank]);
            let mut rng = SplitMix64::new(seed);
            for _ in 0..SAMPLED_ASSIGNMENTS {
                report
                    .assignments
                    .push((0..rank).map(|_| rng.positive_below(9)).collect());
            }
        }
    }

    for entry in &table.entries {
        for e in &entry.errata {
            report.notes.push(format!(
                "chi {} field {}: skipped literal source reading (errata); checked documented interpretation [{}]",
                entry.id, e.field, e.note
            ));
        }
    }

    let spec = ParabolicSpec::new(table.matrix_size, table.removed_index)?;
    let assignments = report.assignments.clone();
    for base in &assignments {
        let concrete = evaluate_fixture(table, base)?;
        for (zeros, entries) in table.groups() {
            let mut assignment = base.clone();
            for &z in &zeros {
                if assignment[z - 1] != 0 && labels.is_some() {
                    report.notes.push(format!(
                        "label m{z} = {} overridden to 0 (designated zero of {})",
                        assignment[z - 1],
                        table.name
                    ));
                }
                assignment[z - 1] = 0;
            }
            let multiplet = generate_multiplet(&spec, &assignment)?;
            let group_ids: BTreeSet<u32> = entries.iter().map(|e| e.id).collect();
            let rows: Vec<&ConcreteEntry> =
                concrete.iter().filter(|c| group_ids.contains(&c.id)).collect();
            let find_row = |id: u32| rows.iter().find(|r| r.id == id).copied();
            let ctx = |what: &str, id: u32| format!("{what} chi {id} at {assignment:?}");

            for row in &rows {
                let sig = Signature::new(row.signature.clone());
                let vertex = match multiplet.find_vertex(&sig) {
                    Some(v) => {
                        report.counts.signatures.record(true);
                        v
                    }
                    None => {
                        report.counts.signatures.record(false);
                        report.mismatches.push(Mismatch {
                            context: ctx("signature", row.id),
                            expected: format!("member {sig}"),
                            actual: "absent from generated multiplet".into(),
                        });
                        continue;
                    }
                };
                if !report.counts.c_values.record(vertex.c.twice() == row.c2) {
                    report.mismatches.push(Mismatch {
                        context: ctx("conformal factor", row.id),
                        expected: format!("2c = {}", row.c2),
                        actual: format!("2c = {}", vertex.c.twice()),
                    });
                }
                for (from, root, degree) in &row.embeds {
                    let found = find_row(*from)
                        .and_then(|src| multiplet.find_vertex(&Signature::new(src.signature.clone())))
                        .map(|src| {
                            multiplet.arrows.iter().any(|a| {
                                a.source == src.id
                                    && a.target == vertex.id
                                    && a.root == *root
                                    && a.degree == *degree
                            })
                        })
                        .unwrap_or(false);
                    if !report.counts.embeddings.record(found) {
                        report.mismatches.push(Mismatch {
                            context: ctx("embedding", row.id),
                            expected: format!("arrow chi {from} -> chi {} via {root}, degree {degree}", row.id),
                            actual: "no such arrow".into(),
                        });
                    }
                }
                if let Some(pair_id) = row.pair {
                    // count each unordered pair once
                    if pair_id >= row.id {
                        let linked = find_row(pair_id)
                            .and_then(|p| {
                                multiplet.find_vertex(&Signature::new(p.signature.clone()))
                            })
                            .map(|p| vertex.ks_partner == Some(p.id))
                            .unwrap_or(false);
                        if !report.counts.pairs.record(linked) {
                            report.mismatches.push(Mismatch {
                                context: ctx("pair", row.id),
                                expected: format!("partner of chi {} is chi {pair_id}", row.id),
                                actual: "partner link differs".into(),
                            });
                        }
                    }
                }
                if table.dual {
                    let partner_ok = vertex
                        .ks_partner
                        .map(|p| {
                            let partner = multiplet.vertex(p);
                            partner.c == -vertex.c
                                && partner.m_left == vertex.m_right
                                && partner.m_right == vertex.m_left
                        })
                        .unwrap_or(false);
                    if !report.counts.partners.record(partner_ok) {
                        report.mismatches.push(Mismatch {
                            context: ctx("duality", row.id),
                            expected: "partner with negated c and block-swapped labels".into(),
                            actual: "partner data differs".into(),
                        });
                    }
                }
            }

            if !table.partial
                && !report
                    .counts
                    .completeness
                    .record(multiplet.vertices.len() == rows.len())
            {
                report.mismatches.push(Mismatch {
                    context: format!("member count at {assignment:?}"),
                    expected: format!("{} members", rows.len()),
                    actual: format!("{} members", multiplet.vertices.len()),
                });
            }
        }
    }
    Ok(report)
}
