use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// What a subcommand produced. `plain` replaces the table when set, for
/// results that are a single value or a list of objects.
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub plain: Option<String>,
    pub json: Value,
}

impl Report {
    pub fn single(column: &'static str, value: String, json: Value) -> Self {
        Self {
            columns: vec![column],
            rows: vec![vec![value.clone()]],
            plain: Some(value),
            json,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 fields")
            }
            Format::Table => match &self.plain {
                Some(text) if text.is_empty() => String::new(),
                Some(text) => format!("{text}\n"),
                None => table(&self.columns, &self.rows),
            },
        }
    }
}

fn table(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(columns.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_quotes_commas() {
        let r = Report {
            columns: vec!["target", "count"],
            rows: vec![vec!["A:2,1".into(), "10".into()]],
            plain: None,
            json: json!({}),
        };
        assert_eq!(r.render(Format::Csv), "target,count\n\"A:2,1\",10\n");
        assert_eq!(r.render(Format::Table), "target  count\nA:2,1   10\n");
    }
}
