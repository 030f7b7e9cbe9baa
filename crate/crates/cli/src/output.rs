//! JSON and CSV rendering. Rationals are always `p/q` strings.

use serde::Serialize;

pub const TOOL: &str = "defrost";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// CSV with an unquoted leading integer column and quoted string cells.
/// Short rows are padded with empty cells to the header width.
pub fn csv(header: &[String], rows: &[(usize, Vec<String>)]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    let width = header.len();
    for (index, cells) in rows {
        out.push_str(&index.to_string());
        for cell in cells {
            out.push_str(",\"");
            out.push_str(&cell.replace('"', "\"\""));
            out.push('"');
        }
        for _ in cells.len() + 1..width {
            out.push(',');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_and_pads() {
        let header = vec!["n".to_string(), "c0".to_string(), "c1".to_string()];
        let rows = vec![(0, vec!["1".to_string()]), (1, vec!["-1/2".to_string(), "1".to_string()])];
        assert_eq!(csv(&header, &rows), "n,c0,c1\n0,\"1\",\n1,\"-1/2\",\"1\"\n");
    }
}
