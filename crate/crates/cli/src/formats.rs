//! Output renderings of a multiplet: plain-text table, lossless JSON
//! document, and DOT digraph.

use std::fmt::Write as _;

use multiplex_core::{
    covering_arrows, Arrow, Degeneration, HalfInt, KsPair, Multiplet, MultipletKind,
    MultipletVertex, OperatorKind, PairRelation, ParabolicSpec, Root, Signature,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Which arrow set to render: every shift, or the transitive reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowsMode {
    All,
    Covering,
}

fn selected_arrows(multiplet: &Multiplet, mode: ArrowsMode) -> Vec<Arrow> {
    match mode {
        ArrowsMode::All => multiplet.arrows.clone(),
        ArrowsMode::Covering => covering_arrows(multiplet),
    }
}

fn block_labels(v: &MultipletVertex) -> String {
    let join = |xs: &[i64]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("({} ; {})", join(&v.m_left), join(&v.m_right))
}

fn degeneration_line(d: &Degeneration) -> String {
    match d {
        Degeneration::InheritedDifferential {
            source,
            target,
            root,
            degree,
        } => format!("inherited differential {source} -> {target}: {root}, degree {degree}"),
        Degeneration::DegenerateKnappStein {
            minus,
            plus,
            exponent,
            dalembertian_power,
        } => {
            let mut line = format!(
                "degenerate Knapp-Stein doublet {minus} <-> {plus}: {}, exponent {exponent}",
                OperatorKind::DegenerateKnappStein
            );
            if let Some(n) = dalembertian_power {
                let _ = write!(line, ", d'Alembertian power {n}");
            }
            line
        }
    }
}

/// Human-readable table.
pub fn render_table(multiplet: &Multiplet, mode: ArrowsMode) -> String {
    let mut out = String::new();
    let n = multiplet.spec.matrix_size();
    let _ = writeln!(
        out,
        "algebra sl({n},R)   parabolic: removed simple root k={}   kind: {}",
        multiplet.spec.removed_index(),
        multiplet.kind
    );
    let _ = writeln!(
        out,
        "inducing labels {:?}   members: {}",
        multiplet.inducing_labels,
        multiplet.vertices.len()
    );
    let _ = writeln!(out, "{:>4} {:>4}  {:<24} {:>6}  {:<20} {:>7}", "id", "len", "signature", "c", "m-labels", "partner");
    for v in &multiplet.vertices {
        let partner = v
            .ks_partner
            .map(|p| p.to_string())
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{:>4} {:>4}  {:<24} {:>6}  {:<20} {:>7}",
            v.id,
            v.coset_length,
            v.signature.to_string(),
            v.c.to_string(),
            block_labels(v),
            partner
        );
    }
    let arrows = selected_arrows(multiplet, mode);
    let _ = writeln!(
        out,
        "arrows ({}, {}):",
        match mode {
            ArrowsMode::All => "all",
            ArrowsMode::Covering => "covering",
        },
        arrows.len()
    );
    for a in &arrows {
        let _ = writeln!(
            out,
            "  {} -> {}   {}   degree {}   {}",
            a.source, a.target, a.root, a.degree, a.kind
        );
    }
    let _ = writeln!(out, "knapp-stein pairs ({}):", multiplet.pairs.len());
    for p in &multiplet.pairs {
        let _ = writeln!(out, "  {} <-> {}   {}", p.a, p.b, p.relation);
    }
    if !multiplet.degenerations.is_empty() {
        let _ = writeln!(out, "annotations:");
        for d in &multiplet.degenerations {
            let _ = writeln!(out, "  {}", degeneration_line(d));
        }
    }
    out
}

/// DOT digraph: one node per member labeled with signature and c, ranks
/// grouped by c so the drawing reads upward from the most negative factor.
pub fn render_dot(multiplet: &Multiplet, mode: ArrowsMode) -> String {
    let mut out = String::new();
    out.push_str("digraph multiplet {\n");
    out.push_str("    rankdir=BT;\n");
    out.push_str("    node [shape=box];\n");
    for v in &multiplet.vertices {
        let _ = writeln!(
            out,
            "    v{} [label=\"{}\\nc={}\"];",
            v.id, v.signature, v.c
        );
    }
    let mut by_c: Vec<(HalfInt, Vec<usize>)> = Vec::new();
    for v in &multiplet.vertices {
        match by_c.iter_mut().find(|(c, _)| *c == v.c) {
            Some((_, ids)) => ids.push(v.id),
            None => by_c.push((v.c, vec![v.id])),
        }
    }
    by_c.sort_by_key(|(c, _)| *c);
    for (_, ids) in &by_c {
        if ids.len() > 1 {
            let names: Vec<String> = ids.iter().map(|id| format!("v{id}")).collect();
            let _ = writeln!(out, "    {{ rank=same; {}; }}", names.join("; "));
        }
    }
    for a in selected_arrows(multiplet, mode) {
        let _ = writeln!(
            out,
            "    v{} -> v{} [label=\"{}, m={}\"];",
            a.source, a.target, a.root, a.degree
        );
    }
    out.push_str("}\n");
    out
}

// --- JSON document -------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub series: String,
    pub matrix_size: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ParabolicDoc {
    pub removed_index: usize,
}

/// Exact half-integer as an explicit fraction over 2.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct HalfIntDoc {
    pub num: i64,
    pub den: i64,
}

impl From<HalfInt> for HalfIntDoc {
    fn from(h: HalfInt) -> HalfIntDoc {
        HalfIntDoc {
            num: h.twice(),
            den: 2,
        }
    }
}

impl HalfIntDoc {
    fn to_half_int(self) -> Result<HalfInt, CliError> {
        if self.den != 2 {
            return Err(CliError::Usage(format!(
                "conformal factor denominator must be 2, got {}",
                self.den
            )));
        }
        Ok(HalfInt::from_twice(self.num))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexDoc {
    pub id: usize,
    pub signature: Vec<i64>,
    pub c: HalfIntDoc,
    pub m_left: Vec<i64>,
    pub m_right: Vec<i64>,
    pub ks_partner: Option<usize>,
    pub coset_length: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowDoc {
    pub from: usize,
    pub to: usize,
    pub root: [usize; 2],
    pub degree: i64,
    pub operator_kind: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairDoc {
    pub a: usize,
    pub b: usize,
    pub relation: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind")]
pub enum DegenerationDoc {
    #[serde(rename = "inherited-differential")]
    Inherited {
        source: usize,
        target: usize,
        root: [usize; 2],
        degree: i64,
    },
    #[serde(rename = "degenerate-KS")]
    DegenerateKnappStein {
        minus: usize,
        plus: usize,
        operator_kind: String,
        exponent: HalfIntDoc,
        dalembertian_power: Option<i64>,
    },
}

/// The full JSON form of a multiplet; round-trips losslessly.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MultipletDoc {
    pub algebra: AlgebraDoc,
    pub parabolic: ParabolicDoc,
    pub inducing_labels: Vec<i64>,
    pub kind: String,
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
    pub pairs: Vec<PairDoc>,
    pub degenerations: Vec<DegenerationDoc>,
}

pub fn to_doc(multiplet: &Multiplet) -> MultipletDoc {
    MultipletDoc {
        algebra: AlgebraDoc {
            series: "A".into(),
            matrix_size: multiplet.spec.matrix_size(),
        },
        parabolic: ParabolicDoc {
            removed_index: multiplet.spec.removed_index(),
        },
        inducing_labels: multiplet.inducing_labels.clone(),
        kind: multiplet.kind.to_string(),
        vertices: multiplet
            .vertices
            .iter()
            .map(|v| VertexDoc {
                id: v.id,
                signature: v.signature.labels().to_vec(),
                c: v.c.into(),
                m_left: v.m_left.clone(),
                m_right: v.m_right.clone(),
                ks_partner: v.ks_partner,
                coset_length: v.coset_length,
            })
            .collect(),
        arrows: multiplet
            .arrows
            .iter()
            .map(|a| ArrowDoc {
                from: a.source,
                to: a.target,
                root: [a.root.p, a.root.q],
                degree: a.degree,
                operator_kind: a.kind.to_string(),
            })
            .collect(),
        pairs: multiplet
            .pairs
            .iter()
            .map(|p| PairDoc {
                a: p.a,
                b: p.b,
                relation: p.relation.to_string(),
            })
            .collect(),
        degenerations: multiplet
            .degenerations
            .iter()
            .map(|d| match *d {
                Degeneration::InheritedDifferential {
                    source,
                    target,
                    root,
                    degree,
                } => DegenerationDoc::Inherited {
                    source,
                    target,
                    root: [root.p, root.q],
                    degree,
                },
                Degeneration::DegenerateKnappStein {
                    minus,
                    plus,
                    exponent,
                    dalembertian_power,
                } => DegenerationDoc::DegenerateKnappStein {
                    minus,
                    plus,
                    operator_kind: OperatorKind::DegenerateKnappStein.to_string(),
                    exponent: exponent.into(),
                    dalembertian_power,
                },
            })
            .collect(),
    }
}

fn parse_kind(s: &str) -> Result<MultipletKind, CliError> {
    Ok(match s {
        "main" => MultipletKind::Main,
        "reduced" => MultipletKind::Reduced,
        "singlet" => MultipletKind::Singlet,
        other => return Err(CliError::Usage(format!("unknown multiplet kind '{other}'"))),
    })
}

fn parse_relation(s: &str) -> Result<PairRelation, CliError> {
    Ok(match s {
        "weyl-shift" => PairRelation::WeylShift,
        "flip" => PairRelation::Flip,
        "self-dual" => PairRelation::SelfDual,
        other => return Err(CliError::Usage(format!("unknown pair relation '{other}'"))),
    })
}

fn parse_operator_kind(s: &str) -> Result<OperatorKind, CliError> {
    Ok(match s {
        "simple-power-differential" => OperatorKind::SimplePowerDifferential,
        "general-differential" => OperatorKind::GeneralDifferential,
        "degenerate-KS-differential" => OperatorKind::DegenerateKnappStein,
        other => return Err(CliError::Usage(format!("unknown operator kind '{other}'"))),
    })
}

fn parse_root(pair: [usize; 2]) -> Result<Root, CliError> {
    Root::new(pair[0], pair[1]).map_err(|e| CliError::Usage(e.to_string()))
}

/// Rebuilds the in-memory multiplet from its JSON form.
pub fn from_doc(doc: &MultipletDoc) -> Result<Multiplet, CliError> {
    if doc.algebra.series != "A" {
        return Err(CliError::Usage(format!(
            "unsupported series '{}'",
            doc.algebra.series
        )));
    }
    let spec = ParabolicSpec::new(doc.algebra.matrix_size, doc.parabolic.removed_index)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Multiplet {
        spec,
        inducing_labels: doc.inducing_labels.clone(),
        kind: parse_kind(&doc.kind)?,
        vertices: doc
            .vertices
            .iter()
            .map(|v| {
                Ok(MultipletVertex {
                    id: v.id,
                    signature: Signature::new(v.signature.clone()),
                    c: v.c.to_half_int()?,
                    m_left: v.m_left.clone(),
                    m_right: v.m_right.clone(),
                    ks_partner: v.ks_partner,
                    coset_length: v.coset_length,
                })
            })
            .collect::<Result<_, CliError>>()?,
        arrows: doc
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    source: a.from,
                    target: a.to,
                    root: parse_root(a.root)?,
                    degree: a.degree,
                    kind: parse_operator_kind(&a.operator_kind)?,
                })
            })
            .collect::<Result<_, CliError>>()?,
        pairs: doc
            .pairs
            .iter()
            .map(|p| {
                Ok(KsPair {
                    a: p.a,
                    b: p.b,
                    relation: parse_relation(&p.relation)?,
                })
            })
            .collect::<Result<_, CliError>>()?,
        degenerations: doc
            .degenerations
            .iter()
            .map(|d| {
                Ok(match d {
                    DegenerationDoc::Inherited {
                        source,
                        target,
                        root,
                        degree,
                    } => Degeneration::InheritedDifferential {
                        source: *source,
                        target: *target,
                        root: parse_root(*root)?,
                        degree: *degree,
                    },
                    DegenerationDoc::DegenerateKnappStein {
                        minus,
                        plus,
                        exponent,
                        dalembertian_power,
                        ..
                    } => Degeneration::DegenerateKnappStein {
                        minus: *minus,
                        plus: *plus,
                        exponent: exponent.to_half_int()?,
                        dalembertian_power: *dalembertian_power,
                    },
                })
            })
            .collect::<Result<_, CliError>>()?,
    })
}

/// Pretty JSON body. The document always carries the full arrow set.
pub fn render_json(multiplet: &Multiplet) -> String {
    let mut body = serde_json::to_string_pretty(&to_doc(multiplet)).expect("serializable");
    body.push('\n');
    body
}

pub fn parse_json(text: &str) -> Result<Multiplet, CliError> {
    let doc: MultipletDoc =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad JSON: {e}")))?;
    from_doc(&doc)
}
