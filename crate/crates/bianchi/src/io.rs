//! Interchange formats: the JSON bracket file, the serialized classification
//! report, and DOT rendering of the closure poset.
//!
//! Exact values always travel as canonical scalar strings (`p/q`,
//! `p/q+r/si`); floating point appears only in display-only fields such as
//! `h_approx`. Rendering is deterministic: entries are sorted, zero entries
//! are omitted, and serialization uses a fixed field order, so identical data
//! produces byte-identical text.

use serde::{Deserialize, Serialize};

use crate::classify::ClassificationReport;
use crate::error::{Error, Result};
use crate::orbits::ClosurePoset;
use crate::scalar::{FieldMode, Scalar};
use crate::tensor::{Bracket, PAIRS};

/// Version of both text schemas (bracket files and reports).
pub const SCHEMA_VERSION: u32 = 1;

/// One structure constant: `[i, j, k, value]` with 1-based indices, `i < j`,
/// and the value as a canonical scalar string.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ConstantEntry(pub u8, pub u8, pub u8, pub String);

/// The on-disk form of a bracket: schema version, field mode marker
/// (`"rational"` or `"gaussian"`), and the nonzero structure constants.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BracketFile {
    pub schema: u32,
    pub mode: String,
    pub constants: Vec<ConstantEntry>,
}

impl BracketFile {
    /// Canonical document for a bracket: constants sorted by `(i, j, k)`,
    /// zeros omitted.
    pub fn from_bracket(c: &Bracket, mode: FieldMode) -> BracketFile {
        let mut constants = Vec::new();
        for &(i, j) in &PAIRS {
            for k in 0..3 {
                let v = c.structure_constant(i, j, k);
                if !v.is_zero() {
                    constants.push(ConstantEntry(
                        i as u8 + 1,
                        j as u8 + 1,
                        k as u8 + 1,
                        v.to_string(),
                    ));
                }
            }
        }
        constants.sort_by_key(|e| (e.0, e.1, e.2));
        BracketFile {
            schema: SCHEMA_VERSION,
            mode: mode.name().to_string(),
            constants,
        }
    }

    /// Parses and validates the document text.
    pub fn parse(text: &str) -> Result<BracketFile> {
        let doc: BracketFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                self.schema
            )));
        }
        if FieldMode::from_name(&self.mode).is_none() {
            return Err(Error::Parse(format!(
                "unknown mode {:?} (expected \"rational\" or \"gaussian\")",
                self.mode
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.constants {
            let ConstantEntry(i, j, k, _) = e;
            if !(1..=3).contains(i) || !(1..=3).contains(j) || !(1..=3).contains(k) {
                return Err(Error::Parse(format!(
                    "indices out of range in entry [{i}, {j}, {k}]"
                )));
            }
            if i >= j {
                return Err(Error::Parse(format!(
                    "entry [{i}, {j}, {k}] must have i < j"
                )));
            }
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Parse(format!("duplicate entry for ({i}, {j}, {k})")));
            }
        }
        Ok(())
    }

    /// Builds the bracket and reports which field the file declares.
    pub fn to_bracket(&self) -> Result<(Bracket, FieldMode)> {
        self.validate()?;
        let mode = FieldMode::from_name(&self.mode).expect("validated mode");
        let mut c = Bracket::zero();
        for ConstantEntry(i, j, k, value) in &self.constants {
            let v: Scalar = value
                .parse()
                .map_err(|e| Error::Parse(format!("entry ({i}, {j}, {k}): {e}")))?;
            if mode == FieldMode::Real && !v.is_real() {
                return Err(Error::Parse(format!(
                    "entry ({i}, {j}, {k}) has an imaginary part in a rational-mode file"
                )));
            }
            c.set_structure_constant(
                *i as usize - 1,
                *j as usize - 1,
                *k as usize - 1,
                v,
            );
        }
        Ok((c, mode))
    }

    /// Deterministic pretty-printed JSON, newline-terminated.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable document");
        s.push('\n');
        s
    }
}

/// Parses bracket-file text straight to a bracket and its declared mode.
pub fn parse_bracket_text(text: &str) -> Result<(Bracket, FieldMode)> {
    BracketFile::parse(text)?.to_bracket()
}

/// Renders a bracket as canonical bracket-file text.
pub fn render_bracket(c: &Bracket, mode: FieldMode) -> String {
    BracketFile::from_bracket(c, mode).render()
}

/// Fixed 12-decimal rendering of an approximate value; complex values render
/// as `a+bi` / `a-bi` with both parts at 12 decimals.
pub fn format_approx(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:.12}")
    } else if im < 0.0 {
        format!("{re:.12}-{:.12}i", -im)
    } else {
        format!("{re:.12}+{im:.12}i")
    }
}

/// Automorphism-group block of the report.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AutDoc {
    pub name: Option<String>,
    pub dimension: u8,
    pub description: String,
}

/// The serialized classification report. Field order is fixed; exact scalars
/// are canonical strings, so parsing back yields identical exact values.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ReportDoc {
    pub schema: u32,
    pub mode: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub h2: Option<String>,
    pub h_approx: Option<String>,
    pub class: String,
    pub labels: Vec<String>,
    pub unimodular: bool,
    pub derived_dim: u8,
    pub rank: u8,
    pub abs_signature: Option<u8>,
    pub invariant_c: Option<String>,
    pub orbit_dim: u8,
    pub aut: AutDoc,
    pub matrix: [[String; 3]; 3],
    pub nu: [String; 3],
}

impl ReportDoc {
    pub fn from_report(r: &ClassificationReport) -> ReportDoc {
        let matrix = std::array::from_fn(|i| {
            std::array::from_fn(|j| r.decomposition.m.entry(i, j).to_string())
        });
        let nu = std::array::from_fn(|i| r.decomposition.nu.0[i].to_string());
        ReportDoc {
            schema: SCHEMA_VERSION,
            mode: r.mode.name().to_string(),
            ty: r.ty.label().as_str().to_string(),
            h2: r.ty.h_squared().map(|h| h.to_string()),
            h_approx: r.h_approx.map(|(re, im)| format_approx(re, im)),
            class: r.ty.class().as_str().to_string(),
            labels: r.labels.iter().map(|l| l.as_str().to_string()).collect(),
            unimodular: r.unimodular,
            derived_dim: r.derived_dim,
            rank: r.rank_sig.rank,
            abs_signature: r.rank_sig.abs_signature,
            invariant_c: r.invariant_c.as_ref().map(|c| c.to_string()),
            orbit_dim: r.orbit_dim,
            aut: AutDoc {
                name: r.aut.name.map(str::to_string),
                dimension: r.aut.dimension,
                description: r.aut.description.to_string(),
            },
            matrix,
            nu,
        }
    }

    pub fn parse(text: &str) -> Result<ReportDoc> {
        let doc: ReportDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                doc.schema
            )));
        }
        Ok(doc)
    }

    /// Deterministic pretty-printed JSON, newline-terminated.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable document");
        s.push('\n');
        s
    }
}

/// DOT digraph of the closure poset. Node order follows the poset's
/// deterministic (dimension, name) order; union nodes are dashed; an edge
/// `a -> b` means b's orbits lie in the closure of a's.
pub fn render_dot(poset: &ClosurePoset) -> String {
    let mut s = String::new();
    s.push_str("digraph closure_poset {\n");
    s.push_str("  rankdir=TB;\n");
    s.push_str("  node [shape=box];\n");
    for n in &poset.nodes {
        let style = if n.is_union() { ", style=dashed" } else { "" };
        s.push_str(&format!(
            "  \"{}\" [label=\"{} (dim {})\"{}];\n",
            n.name(),
            n.name(),
            n.dim(),
            style
        ));
    }
    for (a, b) in &poset.edges {
        s.push_str(&format!("  \"{}\" -> \"{}\";\n", a.name(), b.name()));
    }
    s.push_str("}\n");
    s
}
