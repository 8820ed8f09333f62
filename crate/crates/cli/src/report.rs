//! Report emission: CSV with a header row, or the JSON mirror. Reports are
//! built from exact data only, so they are byte-identical across runs and
//! thread counts; wall-clock timing goes to stderr.

use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.clone(), Value::String(v.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({ "rows": rows })).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            self.to_json()
        } else {
            self.to_csv()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_shapes() {
        let mut t = Table::new(&["n", "value"]);
        t.push(vec!["1".into(), "2".into()]);
        assert_eq!(t.to_csv(), "n,value\n1,2\n");
        let parsed: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(parsed["rows"][0]["value"], "2");
    }
}
