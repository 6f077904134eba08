//! Equations, systems and candidate solutions.
//!
//! A system row reads
//!
//! ```text
//! max_j  max( a⁺_j * x_j , a⁻_j * n(x_j) )  =  b
//! ```
//!
//! where `n` is the product negation. Instance files are JSON with every
//! number written as a decimal string:
//!
//! ```json
//! { "a_plus": [["0.4","0.2","0.5"]], "a_minus": [["0.7","0.1","0.2"]], "b": ["0.3"] }
//! ```
//!
//! Indices in files and diagnostics are 1-based.

use std::fmt;

use serde_json::{Map, Value};

use crate::algebra::{max, neg_product, tnorm_product, Scalar};
use crate::columns::ColumnSet;
use crate::error::{Error, Result};

/// One bipolar equation over `m` unknowns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipolarEquation {
    a_plus: Vec<Scalar>,
    a_minus: Vec<Scalar>,
    b: Scalar,
}

impl BipolarEquation {
    pub fn new(a_plus: Vec<Scalar>, a_minus: Vec<Scalar>, b: Scalar) -> Result<Self> {
        if a_plus.is_empty() {
            return Err(Error::Shape(
                "an equation needs at least one variable".into(),
            ));
        }
        if a_plus.len() != a_minus.len() {
            return Err(Error::Shape(format!(
                "a_plus has {} coefficients but a_minus has {}",
                a_plus.len(),
                a_minus.len()
            )));
        }
        Ok(BipolarEquation { a_plus, a_minus, b })
    }

    /// Convenience constructor from decimal strings.
    pub fn parse(a_plus: &[&str], a_minus: &[&str], b: &str) -> Result<Self> {
        let parse_all = |xs: &[&str], name: &str| -> Result<Vec<Scalar>> {
            xs.iter()
                .enumerate()
                .map(|(j, x)| Scalar::parse_at(x, &format!("{name}[{}]", j + 1)))
                .collect()
        };
        Self::new(
            parse_all(a_plus, "a_plus")?,
            parse_all(a_minus, "a_minus")?,
            Scalar::parse_at(b, "b")?,
        )
    }

    pub fn m(&self) -> usize {
        self.a_plus.len()
    }

    pub fn a_plus(&self) -> &[Scalar] {
        &self.a_plus
    }

    pub fn a_minus(&self) -> &[Scalar] {
        &self.a_minus
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }
}

/// `n >= 1` equations sharing the same `m >= 1` unknowns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipolarSystem {
    rows: Vec<BipolarEquation>,
}

impl BipolarSystem {
    pub fn new(rows: Vec<BipolarEquation>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Shape("a system needs at least one equation".into()));
        };
        let m = first.m();
        for (i, row) in rows.iter().enumerate() {
            if row.m() != m {
                return Err(Error::Shape(format!(
                    "row {} has {} columns, expected {m}",
                    i + 1,
                    row.m()
                )));
            }
        }
        Ok(BipolarSystem { rows })
    }

    pub fn single(eq: BipolarEquation) -> Self {
        BipolarSystem { rows: vec![eq] }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows[0].m()
    }

    pub fn rows(&self) -> &[BipolarEquation] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BipolarEquation {
        &self.rows[i]
    }

    pub fn a_plus(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i].a_plus[j]
    }

    pub fn a_minus(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i].a_minus[j]
    }

    pub fn b(&self, i: usize) -> &Scalar {
        &self.rows[i].b
    }
}

/// A point of `[0,1]^m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<Scalar>);

impl Assignment {
    pub fn new(values: Vec<Scalar>) -> Self {
        Assignment(values)
    }

    pub fn zeros(m: usize) -> Self {
        Assignment(vec![Scalar::zero(); m])
    }

    pub fn ones(m: usize) -> Self {
        Assignment(vec![Scalar::one(); m])
    }

    pub fn parse(values: &[&str]) -> Result<Self> {
        values
            .iter()
            .enumerate()
            .map(|(j, x)| Scalar::parse_at(x, &format!("x[{}]", j + 1)))
            .collect::<Result<Vec<_>>>()
            .map(Assignment)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn get(&self, j: usize) -> &Scalar {
        &self.0[j]
    }

    pub fn with(&self, j: usize, value: Scalar) -> Assignment {
        let mut values = self.0.clone();
        values[j] = value;
        Assignment(values)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Assignment) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    /// Componentwise `self <= other` with `self != other`.
    pub fn strictly_below(&self, other: &Assignment) -> bool {
        self != other && self.le(other)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(Scalar::to_string).collect()
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Split of the coordinates of a tuple into strictly positive and zero
/// ones (0-based indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportPattern {
    pub positive: Vec<usize>,
    pub zero: Vec<usize>,
}

pub fn support_pattern(x: &Assignment) -> SupportPattern {
    let (positive, zero) = (0..x.len()).partition(|&j| x.get(j).is_positive());
    SupportPattern { positive, zero }
}

impl SupportPattern {
    /// The pattern as a `(J⁺, J⁻)` candidate pair.
    pub fn as_pair(&self) -> Result<(ColumnSet, ColumnSet)> {
        Ok((
            ColumnSet::from_indices(self.positive.iter().copied())?,
            ColumnSet::from_indices(self.zero.iter().copied())?,
        ))
    }
}

/// The contribution `max(a⁺ * x, a⁻ * n(x))` of one column.
pub fn column_term(a_plus: &Scalar, a_minus: &Scalar, x: &Scalar) -> Scalar {
    let direct = tnorm_product(a_plus, x);
    let negated = tnorm_product(a_minus, &neg_product(x));
    max(&direct, &negated).clone()
}

pub fn evaluate_equation(eq: &BipolarEquation, x: &Assignment) -> Result<Scalar> {
    if x.len() != eq.m() {
        return Err(Error::Dimension {
            expected: eq.m(),
            found: x.len(),
        });
    }
    Ok(eq
        .a_plus
        .iter()
        .zip(&eq.a_minus)
        .zip(x.values())
        .map(|((ap, am), xj)| column_term(ap, am, xj))
        .max()
        .unwrap_or_else(Scalar::zero))
}

pub fn is_solution(system: &BipolarSystem, x: &Assignment) -> Result<bool> {
    for row in system.rows() {
        if evaluate_equation(row, x)? != *row.b() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn location(matrix: &str, i: usize, j: Option<usize>) -> String {
    match j {
        Some(j) => format!("{matrix} row {} column {}", i + 1, j + 1),
        None => format!("{matrix} row {}", i + 1),
    }
}

fn scalar_at(value: &Value, loc: &str) -> Result<Scalar> {
    match value {
        Value::String(text) => Scalar::parse_at(text, loc),
        other => Err(Error::InvalidNumber {
            location: loc.to_string(),
            text: other.to_string(),
            reason: "numbers must be written as decimal strings, e.g. \"0.3\"".into(),
        }),
    }
}

fn matrix_rows<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Vec<Value>> {
    match obj.get(name) {
        Some(Value::Array(rows)) => Ok(rows),
        Some(_) => Err(Error::Syntax(format!("field {name:?} must be an array"))),
        None => Err(Error::Syntax(format!("missing field {name:?}"))),
    }
}

/// Parses the JSON instance format.
pub fn parse_system(text: &str) -> Result<BipolarSystem> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(Error::Syntax("top level must be an object".into()));
    };
    for key in obj.keys() {
        if !matches!(key.as_str(), "a_plus" | "a_minus" | "b") {
            return Err(Error::Syntax(format!("unknown field {key:?}")));
        }
    }
    let a_plus = matrix_rows(&obj, "a_plus")?;
    let a_minus = matrix_rows(&obj, "a_minus")?;
    let b = matrix_rows(&obj, "b")?;

    let n = b.len();
    if n == 0 {
        return Err(Error::Shape(
            "the system has no equations (b is empty)".into(),
        ));
    }
    for (name, matrix) in [("a_plus", a_plus), ("a_minus", a_minus)] {
        if matrix.len() != n {
            return Err(Error::Shape(format!(
                "{name} has {} rows but b has {n} entries",
                matrix.len()
            )));
        }
    }

    let mut m = None;
    let mut read_matrix = |name: &str, matrix: &Vec<Value>| -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::with_capacity(n);
        for (i, row) in matrix.iter().enumerate() {
            let Value::Array(cells) = row else {
                return Err(Error::Syntax(format!(
                    "{} must be an array",
                    location(name, i, None)
                )));
            };
            match m {
                None if cells.is_empty() => {
                    return Err(Error::Shape(format!(
                        "{} has no columns",
                        location(name, i, None)
                    )))
                }
                None => m = Some(cells.len()),
                Some(width) if width != cells.len() => {
                    return Err(Error::Shape(format!(
                        "{} has {} columns, expected {width}",
                        location(name, i, None),
                        cells.len()
                    )))
                }
                Some(_) => {}
            }
            let parsed = cells
                .iter()
                .enumerate()
                .map(|(j, cell)| scalar_at(cell, &location(name, i, Some(j))))
                .collect::<Result<Vec<_>>>()?;
            out.push(parsed);
        }
        Ok(out)
    };
    let plus = read_matrix("a_plus", a_plus)?;
    let minus = read_matrix("a_minus", a_minus)?;

    let rows = plus
        .into_iter()
        .zip(minus)
        .zip(b)
        .enumerate()
        .map(|(i, ((ap, am), bi))| {
            let bi = scalar_at(bi, &format!("b entry {}", i + 1))?;
            BipolarEquation::new(ap, am, bi)
        })
        .collect::<Result<Vec<_>>>()?;
    BipolarSystem::new(rows)
}

/// Serializes to the instance format; `parse_system` inverts it exactly.
pub fn system_to_json(system: &BipolarSystem) -> String {
    let row = |xs: &[Scalar]| {
        let cells: Vec<String> = xs.iter().map(|x| format!("\"{x}\"")).collect();
        format!("[{}]", cells.join(", "))
    };
    let matrix = |pick: fn(&BipolarEquation) -> &[Scalar]| {
        let rows: Vec<String> = system
            .rows()
            .iter()
            .map(|r| format!("    {}", row(pick(r))))
            .collect();
        format!("[\n{}\n  ]", rows.join(",\n"))
    };
    let b: Vec<Scalar> = system.rows().iter().map(|r| r.b().clone()).collect();
    format!(
        "{{\n  \"a_plus\": {},\n  \"a_minus\": {},\n  \"b\": {}\n}}\n",
        matrix(BipolarEquation::a_plus),
        matrix(BipolarEquation::a_minus),
        row(&b)
    )
}
