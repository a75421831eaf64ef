use serde::Serialize;
use thetasg::SemigroupProfile;

use crate::CliError;

/// Members below `limit` laid out by residue modulo `c` (rows) and by
/// quotient `n / c` (columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberTable {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub limit: u128,
    pub columns: u128,
    pub minimal_generators: Vec<u128>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub residue: u128,
    pub values: Vec<u128>,
}

/// Members below `limit`, read off the Apéry set.
pub fn members_below(
    profile: &SemigroupProfile,
    limit: u128,
    cap: u128,
) -> Result<Vec<u128>, CliError> {
    let c = profile.params.c();
    let mut count: u128 = 0;
    for &x in &profile.apery {
        if x < limit {
            count = count.saturating_add((limit - x - 1) / c + 1);
        }
    }
    if count > cap {
        return Err(CliError::Usage(format!(
            "{count} members below {limit} exceeds the list cap {cap}"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    for &x in &profile.apery {
        let mut v = x;
        while v < limit {
            out.push(v);
            match v.checked_add(c) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn build(profile: &SemigroupProfile, limit: u128, cap: u128) -> Result<MemberTable, CliError> {
    let p = profile.params;
    let c = p.c();
    let columns = limit.div_ceil(c);
    if columns > cap {
        return Err(CliError::Usage(format!(
            "{columns} table columns exceeds the list cap {cap}"
        )));
    }
    let members = members_below(profile, limit, cap)?;
    let mut rows: Vec<TableRow> = Vec::new();
    let mut by_residue: Vec<(u128, u128)> = members.iter().map(|&m| (m % c, m)).collect();
    by_residue.sort_unstable();
    for (r, m) in by_residue {
        match rows.last_mut() {
            Some(row) if row.residue == r => row.values.push(m),
            _ => rows.push(TableRow {
                residue: r,
                values: vec![m],
            }),
        }
    }
    Ok(MemberTable {
        a: p.a(),
        b: p.b(),
        c,
        limit,
        columns,
        minimal_generators: profile.min_generators.clone(),
        rows,
    })
}

const BOLD: &str = "\x1b[1m";
const RESET: &str = "\x1b[0m";

impl MemberTable {
    /// Grid with one `|`-delimited line per row; minimal generators carry a
    /// trailing `*`.
    pub fn render(&self, highlight: bool) -> String {
        let width = self
            .rows
            .iter()
            .flat_map(|r| &r.values)
            .map(|v| v.to_string().len() + 1)
            .max()
            .unwrap_or(1);
        let mut out = format!(
            "members of G_{{{},{}}}({}) below {}; * marks a minimal generator\n",
            self.a, self.b, self.c, self.limit
        );
        for row in &self.rows {
            let mut cells = vec![" ".repeat(width); self.columns as usize];
            for &v in &row.values {
                let generator = self.minimal_generators.contains(&v);
                let text = format!(
                    "{:>w$}",
                    format!("{v}{}", if generator { "*" } else { " " }),
                    w = width
                );
                cells[(v / self.c) as usize] = if generator && highlight {
                    format!("{BOLD}{text}{RESET}")
                } else {
                    text
                };
            }
            out.push_str("| ");
            out.push_str(&cells.join(" | "));
            out.push_str(" |\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use thetasg::{semigroup, Params};

    fn table(a: u128, b: u128, c: u128, limit: u128) -> MemberTable {
        let p = Params::new(a, b, c).unwrap();
        build(&semigroup::profile(&p).unwrap(), limit, u128::MAX).unwrap()
    }

    #[test]
    fn rows_follow_residues() {
        let t = table(2, 3, 4, 28);
        assert_eq!(t.columns, 7);
        let residues: Vec<u128> = t.rows.iter().map(|r| r.residue).collect();
        assert_eq!(residues, vec![0, 1, 2, 3]);
        assert_eq!(t.rows[1].values, vec![25]);
        assert_eq!(t.rows[2].values, vec![22, 26]);
        assert_eq!(t.rows[3].values, vec![11, 15, 19, 23, 27]);
    }

    #[test]
    fn render_places_values_by_quotient() {
        let text = table(3, 1, 3, 21).render(false);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "|  0  |  3* |  6  |  9  | 12  | 15  | 18  |");
        assert_eq!(lines[2], "|     |     |     | 10* | 13  | 16  | 19  |");
        assert_eq!(lines[3], "|     |     |     |     |     |     | 20  |");
    }

    #[test]
    fn highlight_only_wraps_generators() {
        let text = table(3, 1, 3, 21).render(true);
        assert_eq!(text.matches(BOLD).count(), 2);
        assert!(text.contains(&format!("{BOLD}10*{RESET}")));
    }

    #[test]
    fn cap_is_enforced() {
        let p = Params::new(3, 1, 3).unwrap();
        let profile = semigroup::profile(&p).unwrap();
        assert_eq!(members_below(&profile, 21, 12).unwrap().len(), 12);
        assert!(members_below(&profile, 21, 11).is_err());
        assert!(members_below(&profile, u128::MAX, 1000).is_err());
        assert_eq!(members_below(&profile, 0, 0).unwrap(), Vec::<u128>::new());
    }
}
