//! Row schema shared by every subcommand, and its emitters.
//!
//! One schema serves all subcommands: `index` and `hilbert` fill their
//! optional sections, everything fills `manifold`, `bound`, and `checks`.
//! JSON output round-trips through serde; CSV and markdown flatten the
//! always-present fields.

use serde::{Deserialize, Serialize};
use spinc_bounds::bounds::{bound_closed_form, bound_from_k0};
use spinc_bounds::indextheory::{index, index_lattice_sum, index_residue, CompleteIntersection};

#[derive(Debug, Serialize, Deserialize)]
pub struct Manifold {
    pub n: u32,
    pub degrees: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IndexReport {
    pub k: i64,
    /// Exact integer, as a decimal string.
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_sum: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HilbertReport {
    /// Human-readable exact form, e.g. `(k^2 - 1)/8`.
    pub polynomial: String,
    /// Exact coefficients `p/q` in ascending degree.
    pub coefficients: Vec<String>,
    /// Zeros among valid-parity integers in `[-2n, 2n]`.
    pub zeros: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub value: i64,
    pub case: String,
    pub k0: u64,
    /// Closed-form table value equals the minimal-twist search value.
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Checks {
    pub triple_agreement: bool,
    pub recursion: bool,
    pub symmetry: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Row {
    pub manifold: Manifold,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<IndexReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertReport>,
    pub bound: BoundReport,
    pub checks: Checks,
}

impl Row {
    /// The always-present part of a row: bound data plus regression checks.
    pub fn base(ci: &CompleteIntersection) -> Row {
        let table = bound_closed_form(ci);
        let search = bound_from_k0(ci).expect("search terminates on valid descriptors");
        Row {
            manifold: Manifold {
                n: ci.n(),
                degrees: ci.degrees().to_vec(),
            },
            index: None,
            hilbert: None,
            bound: BoundReport {
                value: table.value,
                case: table.case.label().to_string(),
                k0: search.k0,
                agree: table.value == search.value && table.k0 == search.k0,
                note: table.note.map(str::to_string),
            },
            checks: run_checks(ci),
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.bound.agree
            && self.checks.triple_agreement
            && self.checks.recursion
            && self.checks.symmetry
    }
}

/// Regression checks on one manifold over the valid-parity twists with
/// `|k| <= 2n + 2`.
fn run_checks(ci: &CompleteIntersection) -> Checks {
    let bound = 2 * ci.n() as i64 + 2;
    let twists: Vec<i64> = (-bound..=bound).filter(|&k| ci.valid_parity(k)).collect();
    let triple_agreement = twists.iter().all(|&k| {
        let v = index(ci, k);
        v == index_residue(ci, k) && v == index_lattice_sum(ci, k)
    });
    let recursion = match ci.hyperplane_section() {
        Ok(w) => twists
            .iter()
            .all(|&k| index(ci, k) - index(ci, k - 2) == index(&w, k - 1)),
        Err(_) => true, // no section in dimension 1
    };
    let symmetry = twists.iter().all(|&k| {
        let mirrored = index(ci, -k);
        let direct = index(ci, k);
        if ci.n().is_multiple_of(2) {
            mirrored == direct
        } else {
            mirrored == -direct
        }
    });
    Checks {
        triple_agreement,
        recursion,
        symmetry,
    }
}

fn degrees_label(degrees: &[u32]) -> String {
    if degrees.is_empty() {
        "-".to_string()
    } else {
        degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn manifold_label(m: &Manifold) -> String {
    if m.degrees.is_empty() {
        format!("CP^{}", m.n)
    } else {
        format!(
            "V^{}({})",
            m.n,
            m.degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

pub fn emit_json(rows: &[Row]) -> String {
    if rows.len() == 1 {
        serde_json::to_string_pretty(&rows[0]).expect("rows serialize")
    } else {
        serde_json::to_string_pretty(rows).expect("rows serialize")
    }
}

pub fn emit_csv(rows: &[Row]) -> String {
    let mut out = String::from(
        "n,degrees,total_degree,spin,bound,case,k0,agree,triple_agreement,recursion,symmetry\n",
    );
    for row in rows {
        let total: u32 = row.manifold.degrees.iter().sum();
        let spin = (row.manifold.n + row.manifold.degrees.len() as u32 + 1) % 2 == total % 2;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            row.manifold.n,
            degrees_label(&row.manifold.degrees),
            total,
            spin,
            row.bound.value,
            row.bound.case,
            row.bound.k0,
            row.bound.agree,
            row.checks.triple_agreement,
            row.checks.recursion,
            row.checks.symmetry
        ));
    }
    out
}

pub fn emit_markdown(rows: &[Row]) -> String {
    let mut out = String::from(
        "| manifold | bound | case | k0 | agree | triple | recursion | symmetry |\n\
         |---|---|---|---|---|---|---|---|\n",
    );
    for row in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            manifold_label(&row.manifold),
            row.bound.value,
            row.bound.case,
            row.bound.k0,
            row.bound.agree,
            row.checks.triple_agreement,
            row.checks.recursion,
            row.checks.symmetry
        ));
    }
    out
}
