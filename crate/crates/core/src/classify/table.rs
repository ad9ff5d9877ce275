//! Count tables laid out with one row per length, one column per dimension.

use std::fmt::Write;

use crate::classify::engine::CountTable;

/// Renders `n | Σ | k=...` rows. Empty cells stay blank.
pub fn render_table(title: &str, table: &CountTable) -> String {
    let ks: Vec<usize> = table.values().flat_map(|row| row.keys().copied()).collect();
    let (lo, hi) = match (ks.iter().min(), ks.iter().max()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return format!("{title}\n(no classes)\n"),
    };
    let mut out = String::new();
    writeln!(out, "{title}").unwrap();
    write!(out, "{:>4} | {:>6} |", "n", "Σ").unwrap();
    for k in lo..=hi {
        write!(out, " {:>5}", format!("k={k}")).unwrap();
    }
    out.push('\n');
    writeln!(out, "{}", "-".repeat(16 + 6 * (hi - lo + 1))).unwrap();
    for (n, row) in table {
        let total: usize = row.values().sum();
        write!(out, "{n:>4} | {total:>6} |").unwrap();
        for k in lo..=hi {
            match row.get(&k) {
                Some(c) => write!(out, " {c:>5}").unwrap(),
                None => out.push_str("      "),
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let mut t = CountTable::new();
        t.entry(7).or_default().insert(3, 1);
        t.entry(8).or_default().insert(4, 1);
        let s = render_table("demo", &t);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "demo");
        assert!(lines[1].contains("k=3") && lines[1].contains("k=4"));
        assert_eq!(lines[3], "   7 |      1 |     1");
        assert_eq!(lines[4], "   8 |      1 |           1");
    }
}
