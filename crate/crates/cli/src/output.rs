use std::io::{self, Write};

use serde_json::value::RawValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One output value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    /// An exact rational already rendered as `num/den`.
    Exact(String),
    Text(String),
    IntList(Vec<u64>),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => float17(*v),
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::IntList(v) => v.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => {
                let raw = RawValue::from_string(float17(*v)).expect("finite float is valid JSON");
                raw.get().to_owned()
            }
            Cell::Exact(s) | Cell::Text(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::IntList(v) => serde_json::to_string(v).expect("list serializes"),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

/// 17 significant digits, scientific notation.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

/// A command's result: run parameters plus a table of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub params: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Single-column documents whose JSON rows are bare values.
    pub flat: bool,
}

impl Document {
    pub fn new(params: Vec<(&'static str, Cell)>, columns: Vec<&'static str>) -> Self {
        Self {
            params,
            columns,
            rows: Vec::new(),
            flat: false,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            writeln!(out, "{}", line.join(","))?;
        }
        Ok(())
    }

    fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        write!(out, "{{\"schema_version\":1,\"params\":{{")?;
        for (i, (key, value)) in self.params.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(out, "\"{key}\":{}", value.json())?;
        }
        write!(out, "}},\"rows\":[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            if self.flat {
                write!(out, "{}", row[0].json())?;
                continue;
            }
            write!(out, "{{")?;
            for (j, (key, value)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    write!(out, ",")?;
                }
                write!(out, "\"{key}\":{}", value.json())?;
            }
            write!(out, "}}")?;
        }
        writeln!(out, "]}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_doc() -> Document {
        let mut doc = Document::new(
            vec![("n", Cell::Int(3)), ("k", Cell::Int(1))],
            vec!["n", "pmf_exact", "pmf_float", "mode"],
        );
        doc.push(vec![
            Cell::Int(1),
            Cell::Exact("1/3".into()),
            Cell::Float(1.0 / 3.0),
            Cell::IntList(vec![1, 2, 3]),
        ]);
        doc
    }

    fn render(doc: &Document, format: Format) -> String {
        let mut buf = Vec::new();
        doc.write(format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn float_has_seventeen_significant_digits() {
        assert_eq!(float17(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(float17(0.0), "0.0000000000000000e0");
        assert_eq!(float17(2.75), "2.7500000000000000e0");
        let back: f64 = float17(0.1).parse().unwrap();
        assert_eq!(back, 0.1);
    }

    #[test]
    fn csv_layout() {
        let text = render(&sample_doc(), Format::Csv);
        assert_eq!(text, "n,pmf_exact,pmf_float,mode\n1,1/3,3.3333333333333331e-1,1;2;3\n");
    }

    #[test]
    fn json_layout() {
        let text = render(&sample_doc(), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["params"]["n"], 3);
        assert_eq!(v["rows"][0]["pmf_exact"], "1/3");
        assert_eq!(v["rows"][0]["pmf_float"].as_f64().unwrap(), 1.0 / 3.0);
        assert_eq!(v["rows"][0]["mode"], serde_json::json!([1, 2, 3]));
    }

    #[test]
    fn flat_json_rows() {
        let mut doc = Document::new(vec![], vec!["value"]);
        doc.flat = true;
        doc.push(vec![Cell::Int(4)]);
        doc.push(vec![Cell::Int(2)]);
        assert_eq!(render(&doc, Format::Json), "{\"schema_version\":1,\"params\":{},\"rows\":[4,2]}\n");
    }
}
