//! The JSON result document and its oracle cross-check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{is_solution, Assignment, BipolarSystem};
use crate::oracle::{grid_solutions, refute_among, Direction, GridSpec};
use crate::single_eq::LowerDescription;
use crate::system::SolutionSummary;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub j_plus: Vec<usize>,
    pub j_minus: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerDoc {
    pub kind: String,
    pub tuples: Vec<Vec<String>>,
}

/// Field order here is the output order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub solvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible_pairs: Option<Vec<PairDoc>>,
    /// Absent when not requested, `null` when there is no greatest solution.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "double_option"
    )]
    pub greatest: Option<Option<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<LowerDoc>,
    #[serde(default)]
    pub diagnostics: Vec<String>,
}

mod double_option {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<Option<Vec<String>>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        value.as_ref().expect("skipped when absent").serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Option<Vec<String>>>, D::Error> {
        Option::<Vec<String>>::deserialize(d).map(Some)
    }
}

/// Which parts of the summary go into the document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Selection {
    pub greatest: bool,
    pub maximal: bool,
    /// `minimal` and `least` both select the lower description.
    pub lower: bool,
    pub pairs: bool,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            greatest: true,
            maximal: true,
            lower: true,
            pairs: true,
        }
    }

    pub fn solvable_only() -> Self {
        Selection::default()
    }
}

impl ResultDocument {
    pub fn from_summary(summary: &SolutionSummary, selection: Selection) -> Self {
        let tuples = |xs: &[Assignment]| xs.iter().map(Assignment::to_strings).collect::<Vec<_>>();
        ResultDocument {
            solvable: summary.solvable,
            feasible_pairs: selection.pairs.then(|| {
                summary
                    .pairs
                    .pairs()
                    .map(|p| PairDoc {
                        j_plus: p.j_plus.to_one_based(),
                        j_minus: p.j_minus.to_one_based(),
                    })
                    .collect()
            }),
            greatest: selection
                .greatest
                .then(|| summary.greatest.as_ref().map(Assignment::to_strings)),
            maximal: selection.maximal.then(|| tuples(&summary.maximal)),
            lower: selection.lower.then(|| match &summary.lower {
                Some(lower) => LowerDoc {
                    kind: lower.kind().to_string(),
                    tuples: tuples(lower.tuples()),
                },
                None => LowerDoc {
                    kind: LowerDescription::NoMinimalElements.kind().to_string(),
                    tuples: Vec::new(),
                },
            }),
            diagnostics: summary.diagnostics.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain data");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))
    }
}

fn parse_tuple(values: &[String], m: usize, what: &str) -> Result<Assignment> {
    let refs: Vec<&str> = values.iter().map(String::as_str).collect();
    let x = Assignment::parse(&refs)?;
    if x.len() != m {
        return Err(Error::Shape(format!(
            "{what} has {} components, expected {m}",
            x.len()
        )));
    }
    Ok(x)
}

/// Checks every tuple claimed by `doc` against the equations and the grid.
///
/// Returns one line per violation; an empty list means the document
/// survived every check.
pub fn verify_document(
    system: &BipolarSystem,
    doc: &ResultDocument,
    grid: GridSpec,
) -> Result<Vec<String>> {
    let m = system.m();
    let mut claims: Vec<(String, Assignment, Option<Direction>)> = Vec::new();
    if let Some(Some(g)) = &doc.greatest {
        claims.push(("greatest".into(), parse_tuple(g, m, "greatest")?, None));
    }
    for (k, t) in doc.maximal.iter().flatten().enumerate() {
        let label = format!("maximal #{}", k + 1);
        claims.push((
            label.clone(),
            parse_tuple(t, m, &label)?,
            Some(Direction::Above),
        ));
    }
    if let Some(lower) = &doc.lower {
        for (k, t) in lower.tuples.iter().enumerate() {
            let label = format!("{} #{}", lower.kind, k + 1);
            claims.push((
                label.clone(),
                parse_tuple(t, m, &label)?,
                Some(Direction::Below),
            ));
        }
    }

    let solutions = grid_solutions(system, grid)?;
    let mut violations = Vec::new();
    if !doc.solvable && !solutions.is_empty() {
        violations.push(format!(
            "claimed unsolvable, but {} solves the system",
            solutions[0]
        ));
    }
    for (label, x, direction) in &claims {
        if !is_solution(system, x)? {
            violations.push(format!("{label} {x} is not a solution"));
            continue;
        }
        if let Some(d) = direction {
            if let Some(y) = refute_among(&solutions, x, *d) {
                let rel = if *d == Direction::Above {
                    "above"
                } else {
                    "below"
                };
                violations.push(format!("{label} {x} is refuted by {y} strictly {rel} it"));
            }
        }
    }
    if let Some(Some(g)) = &doc.greatest {
        let g = parse_tuple(g, m, "greatest")?;
        if let Some(y) = solutions.iter().find(|y| !Assignment::le(y, &g)) {
            violations.push(format!("greatest {g} does not dominate solution {y}"));
        }
    }
    if let Some(lower) = doc.lower.as_ref().filter(|l| l.kind == "least") {
        if let Some(t) = lower.tuples.first() {
            let z = parse_tuple(t, m, "least")?;
            if let Some(y) = solutions.iter().find(|y| !Assignment::le(&z, y)) {
                violations.push(format!("least {z} is not below solution {y}"));
            }
        }
    }
    Ok(violations)
}
