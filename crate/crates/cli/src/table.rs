use std::fmt::Write as _;

/// Left-aligned text table with two-space gutters.
pub fn render(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let text: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", text.join("  ").trim_end()).unwrap();
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn csv(tag: &str, headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("# {tag} v1\n{}\n", headers.join(","));
    for row in rows {
        writeln!(out, "{}", row.join(",")).unwrap();
    }
    out
}
