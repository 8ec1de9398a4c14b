use serde_json::{json, Map, Value};

use hecke_core::complexes::{GradedAlgebraTable, ProductConvention};
use hecke_core::linalg::format_scalar;
use hecke_core::SparseVec;

/// A command's output: text lines and the same content as JSON.
pub struct Report {
    pub lines: Vec<String>,
    pub json: Map<String, Value>,
    /// Some check reported FAIL.
    pub failed: bool,
    /// Some requested degree is not stable under raising the window.
    pub unstable: bool,
}

impl Report {
    pub fn new(command: &str, input: Option<&str>) -> Self {
        let mut json = Map::new();
        json.insert("command".into(), json!(command));
        if let Some(name) = input {
            json.insert("input".into(), json!(name));
        }
        Self {
            lines: Vec::new(),
            json,
            failed: false,
            unstable: false,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }

    /// Record a named check in both outputs.
    pub fn check(&mut self, name: &str, ok: bool) {
        self.line(format!("{name}: {}", if ok { "PASS" } else { "FAIL" }));
        let checks = self
            .json
            .entry("checks")
            .or_insert_with(|| Value::Object(Map::new()));
        checks
            .as_object_mut()
            .expect("checks is an object")
            .insert(name.into(), json!(ok));
        self.failed |= !ok;
    }

    pub fn render(&self, json_mode: bool) -> String {
        if json_mode {
            let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone()))
                .expect("reports serialize");
            s.push('\n');
            s
        } else {
            let mut s = self.lines.join("\n");
            s.push('\n');
            s
        }
    }
}

pub fn vector(v: &SparseVec) -> Value {
    Value::Array(
        v.iter()
            .map(|(i, c)| json!([i, format_scalar(c)]))
            .collect(),
    )
}

pub fn dims_map<'a>(dims: impl IntoIterator<Item = (&'a i64, &'a usize)>) -> Value {
    Value::Object(
        dims.into_iter()
            .map(|(n, d)| (n.to_string(), json!(d)))
            .collect(),
    )
}

pub fn convention(c: ProductConvention) -> &'static str {
    match c {
        ProductConvention::Composition => "composition",
        ProductConvention::Opposite => "opposite",
    }
}

/// `h^n_i` basis notation for cohomology classes.
pub fn class_name(prefix: &str, n: i64, i: usize) -> String {
    format!("{prefix}^{n}_{i}")
}

pub fn format_class(prefix: &str, n: i64, v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| {
            let name = class_name(prefix, n, i);
            if c == &hecke_core::linalg::one() {
                name
            } else if c == &-hecke_core::linalg::one() {
                format!("-{name}")
            } else {
                format!("{}*{name}", format_scalar(c))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Text and JSON rendering of a graded product table.
pub fn table(report: &mut Report, prefix: &str, t: &GradedAlgebraTable) {
    let mut products = Vec::new();
    for ((n, m), rows) in &t.products {
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                report.line(format!(
                    "  {} * {} = {}",
                    class_name(prefix, *n, i),
                    class_name(prefix, *m, j),
                    format_class(prefix, n + m, v)
                ));
                products.push(json!({ "left": [n, i], "right": [m, j], "result": vector(v) }));
            }
        }
    }
    let unit = t.unit.as_ref().map(vector);
    if let Some(u) = &t.unit {
        report.line(format!("  unit = {}", format_class(prefix, 0, u)));
    }
    report.set(
        "table",
        json!({
            "convention": convention(t.convention),
            "dims": dims_map(&t.dims),
            "products": products,
            "unavailable": t.unavailable,
            "unit": unit,
        }),
    );
}
