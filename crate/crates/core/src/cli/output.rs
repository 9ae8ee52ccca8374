use serde_json::{json, Map, Value};

/// Fixed 9-significant-digit scientific notation.
pub fn format_number(v: f64) -> String {
    format!("{v:.8e}")
}

/// The value a reader of [`format_number`] output sees.
pub fn rounded(v: f64) -> Value {
    format_number(v)
        .parse::<f64>()
        .ok()
        .and_then(|x| serde_json::Number::from_f64(x).map(Value::Number))
        .unwrap_or(Value::Null)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Number(f64),
    Integer(i64),
    Flag(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match *self {
            Cell::Number(v) => format_number(v),
            Cell::Integer(v) => v.to_string(),
            Cell::Flag(v) => v.to_string(),
        }
    }

    fn json(&self) -> Value {
        match *self {
            Cell::Number(v) => rounded(v),
            Cell::Integer(v) => json!(v),
            Cell::Flag(v) => json!(v),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Number(v)
    }
}

/// Rows of named columns, rendered either as CSV or as
/// `{"columns": [...], "rows": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        json!({ "columns": self.columns, "rows": rows })
    }

    /// A single row as a JSON object keyed by column name.
    pub fn record_json(&self) -> Value {
        let mut map = Map::new();
        if let Some(row) = self.rows.first() {
            for (name, cell) in self.columns.iter().zip(row) {
                map.insert((*name).to_string(), cell.json());
            }
        }
        Value::Object(map)
    }
}
