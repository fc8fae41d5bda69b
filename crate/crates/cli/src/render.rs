//! Table, JSON-lines and CSV output.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Rows of strings under a header, rendered in any format.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Space-aligned columns.
    pub fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (c, w))| if i + 1 == cells.len() { c.clone() } else { format!("{c:<w$}") })
                .collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

/// One JSON document per line.
pub fn json_lines<T: Serialize>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| serde_json::to_string(x).expect("serializable") + "\n")
        .collect()
}

/// Renders records: JSON lines of the records themselves, otherwise the
/// table built from them.
pub fn render<T: Serialize>(format: Format, items: &[T], table: impl FnOnce(&[T]) -> Table) -> String {
    match format {
        Format::Json => json_lines(items),
        Format::Table => table(items).aligned(),
        Format::Csv => table(items).csv(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tables_keep_headers() {
        let t = Table::new(&["a", "bb"]);
        assert_eq!(t.aligned(), "a  bb\n");
        assert_eq!(t.csv(), "a,bb\n");
        assert_eq!(json_lines::<u8>(&[]), "");
    }

    #[test]
    fn alignment() {
        let mut t = Table::new(&["x", "y"]);
        t.push(vec!["long".into(), "1".into()]);
        assert_eq!(t.aligned(), "x     y\nlong  1\n");
    }
}
