//! Appendix tables, recomputed from first principles, in text and tsv form.

use std::fmt::Write;

use rwinv_core::chern::monomial_name;
use rwinv_core::genera::{chi_in_c_table, chi_y_hilbert, chi_y_kummer, inversion_table, invert_chi, ChiVector};
use rwinv_core::homology::{basis, inverse_expressions, polywheel_matrix};
use rwinv_core::partition::even_partitions;
use rwinv_core::spaces::{hilbert_name, kummer_name, make_hilbert, make_kummer, virtual_ck, Engine, Space};
use rwinv_core::{Partition, Q};

use crate::error::CliError;
use crate::names::parse_space;

/// Largest degree tabulated.
pub const TABLE_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub id: String,
    pub degree: usize,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    fn new(id: &str, degree: usize, title: &str, columns: Vec<String>) -> Self {
        Table { id: id.to_string(), degree, title: title.to_string(), columns, rows: Vec::new() }
    }

    fn push(&mut self, label: impl Into<String>, cells: Vec<String>) {
        self.rows.push(Row { label: label.into(), cells });
    }

    /// The cell in the row with this label and the column with this name.
    pub fn cell(&self, label: &str, column: &str) -> Option<&str> {
        let j = self.columns.iter().position(|c| c == column)?;
        let row = self.rows.iter().find(|r| r.label == label)?;
        row.cells.get(j).map(String::as_str)
    }
}

fn cells(v: &[Q]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn monomial(prefix: &str, l: &Partition) -> String {
    monomial_name(prefix, l).replace(' ', "*")
}

/// `a s + b` written like `-8s+8238720`.
fn affine_in_s(a: &Q, b: &Q) -> String {
    let zero = Q::from_integer(0.into());
    let one = Q::from_integer(1.into());
    let mut out = String::new();
    if *a != zero {
        if *a == one {
            out.push('s');
        } else if *a == -one.clone() {
            out.push_str("-s");
        } else {
            let _ = write!(out, "{a}s");
        }
    }
    if *b != zero || out.is_empty() {
        if !out.is_empty() && *b > zero {
            out.push('+');
        }
        let _ = write!(out, "{b}");
    }
    out
}

fn class_columns(k: usize) -> Result<Vec<String>, CliError> {
    Ok(basis(k)?.classes().iter().map(ToString::to_string).collect())
}

fn appendix_a() -> Result<Vec<Table>, CliError> {
    let mut out = Vec::new();
    for k in 1..=TABLE_DEGREE {
        let b = basis(k)?;
        let mut t = Table::new("A.1", k, "polywheels in the graph homology basis", class_columns(k)?);
        for (lam, row) in polywheel_matrix(&b)? {
            t.push(lam.to_string(), cells(&row));
        }
        out.push(t);
        let exprs = inverse_expressions(&b)?;
        let mut columns: Vec<String> = exprs[0].1.polywheels.iter().map(|(l, _)| l.to_string()).collect();
        columns.extend(exprs[0].1.extras.iter().map(|(c, _)| c.to_string()));
        let mut t = Table::new("A.2", k, "basis classes in polywheels and extra classes", columns);
        for (c, e) in exprs {
            let mut row: Vec<Q> = e.polywheels.into_iter().map(|(_, x)| x).collect();
            row.extend(e.extras.into_iter().map(|(_, x)| x));
            t.push(c.to_string(), cells(&row));
        }
        out.push(t);
    }
    Ok(out)
}

fn chi_columns(n: usize) -> Vec<String> {
    (0..n).map(|m| format!("chi^{m}")).collect()
}

fn appendix_b() -> Result<Vec<Table>, CliError> {
    let mut out = Vec::new();
    for k in 1..=TABLE_DEGREE {
        let (parts, rows) = chi_in_c_table(k)?;
        let mut t = Table::new("B.1", k, "chi^m in Chern numbers", parts.iter().map(|l| monomial("c", l)).collect());
        for (m, row) in rows.iter().enumerate() {
            let v: Vec<Q> = parts.iter().map(|l| row.get(l).cloned().unwrap_or_default()).collect();
            t.push(format!("chi^{m}"), cells(&v));
        }
        out.push(t);
    }
    for (id, prefix, c_basis) in [("B.2c", "c", true), ("B.2s", "s", false)] {
        for k in 1..=TABLE_DEGREE {
            let (parts, m) = inversion_table(k, c_basis)?;
            let mut columns = chi_columns(k);
            if k == 4 {
                columns.push("s".to_string());
            }
            let mut t = Table::new(id, k, "Chern numbers in the chi_y genus", columns);
            for (l, row) in parts.iter().zip(m) {
                t.push(monomial(prefix, l), cells(&row));
            }
            out.push(t);
        }
    }
    Ok(out)
}

fn chi_rows() -> Result<Vec<(String, Vec<Q>)>, CliError> {
    let mut rows = Vec::new();
    for k in 1..=TABLE_DEGREE {
        rows.push((hilbert_name(k), chi_y_hilbert(k)?));
    }
    for k in 2..=TABLE_DEGREE {
        rows.push((kummer_name(k), chi_y_kummer(k)?));
    }
    Ok(rows)
}

fn appendix_c() -> Result<Vec<Table>, CliError> {
    let columns = (0..=2 * TABLE_DEGREE).map(|m| format!("y^{m}")).collect();
    let mut t =
        Table::new("C", TABLE_DEGREE, "chi_y genus of Hilbert schemes and generalized Kummer varieties", columns);
    for (name, v) in chi_rows()? {
        t.push(name, cells(&v));
    }
    Ok(vec![t])
}

fn appendix_d() -> Result<Vec<Table>, CliError> {
    let mut out = Vec::new();
    let mut engine = Engine::new();
    for k in 1..=TABLE_DEGREE {
        let parts = even_partitions(k as u32);
        let columns: Vec<String> = parts.iter().map(|l| monomial("s", l)).collect();
        let spaces = [make_hilbert(&mut engine, k)?, make_kummer(&mut engine, k)?];
        if k == 4 {
            let mut line = Table::new("D.s", k, "Chern numbers along the chi_y line", columns.clone());
            for x in &spaces {
                let chi = x.chi().expect("irreducible spaces carry chi_y");
                let inv = invert_chi(chi)?;
                let dir = inv.direction.as_ref().expect("degree four has a free parameter");
                let row = parts
                    .iter()
                    .map(|l| Ok(affine_in_s(&dir.s(l)?, &inv.base.s(l)?)))
                    .collect::<Result<Vec<_>, rwinv_core::Error>>()?;
                line.push(x.name(), row);
            }
            out.push(line);
        }
        let mut t = Table::new("D", k, "Chern numbers", columns);
        for x in &spaces {
            let label = match x.s_parameter() {
                Some(s) => format!("{} s={s}", x.name()),
                None => x.name().to_string(),
            };
            let v: Vec<Q> = parts.iter().map(|l| x.chern().s(l)).collect::<Result<_, _>>()?;
            t.push(label, cells(&v));
        }
        out.push(t);
    }
    Ok(out)
}

fn invariant_tables(id: &str, k: usize, title: &str, spaces: &[Space]) -> Result<[Table; 2], CliError> {
    let columns = class_columns(k)?;
    let mut values = Table::new(id, k, title, columns.clone());
    let mut via = Table::new(&format!("{id}p"), k, "provenance", columns);
    for x in spaces {
        let entries = x.report().entries();
        let (v, p): (Vec<String>, Vec<String>) = entries
            .iter()
            .map(|e| match &e.value {
                Some((v, p)) => (v.to_string(), p.to_string()),
                None => ("unknown".to_string(), "unknown".to_string()),
            })
            .unzip();
        values.push(x.name(), v);
        via.push(x.name(), p);
    }
    Ok([values, via])
}

/// Products tabulated in the reducible part of appendix E.
pub fn reducible_names(k: usize) -> &'static [&'static str] {
    match k {
        2 => &["S^2"],
        3 => &["SxS^[2]", "SxT^[[2]]", "S^3"],
        4 => &["SxS^[3]", "S^[2]xS^[2]", "S^2xS^[2]", "S^4"],
        _ => &[],
    }
}

fn appendix_e() -> Result<Vec<Table>, CliError> {
    let mut out = Vec::new();
    let mut engine = Engine::new();
    for k in 1..=TABLE_DEGREE {
        let spaces = [make_hilbert(&mut engine, k)?, make_kummer(&mut engine, k)?];
        out.extend(invariant_tables("E.1", k, "Rozansky-Witten invariants of irreducible spaces", &spaces)?);
    }
    for k in 2..=TABLE_DEGREE {
        let spaces = reducible_names(k).iter().map(|n| parse_space(&mut engine, n)).collect::<Result<Vec<_>, _>>()?;
        out.extend(invariant_tables("E.2", k, "Rozansky-Witten invariants of products", &spaces)?);
    }
    for k in 1..=TABLE_DEGREE {
        let c = virtual_ck(&mut engine, k)?;
        out.extend(invariant_tables("E.3", k, "su(2) virtual spaces", &[c])?);
    }
    Ok(out)
}

pub fn appendix(letter: char) -> Result<Vec<Table>, CliError> {
    match letter.to_ascii_uppercase() {
        'A' => appendix_a(),
        'B' => appendix_b(),
        'C' => appendix_c(),
        'D' => appendix_d(),
        'E' => appendix_e(),
        other => Err(CliError::usage(format!("unknown appendix `{other}`, expected one of A B C D E"))),
    }
}

pub fn render_text(tables: &[Table]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "[{}] {}, degree {}", t.id, t.title, t.degree);
        let _ = writeln!(out, "columns: {}", t.columns.join(" "));
        for r in &t.rows {
            let _ = writeln!(out, "{}: {}", r.label, r.cells.join(" "));
        }
    }
    out
}

pub fn render_tsv(tables: &[Table]) -> String {
    let mut out = String::new();
    for t in tables {
        let _ = writeln!(out, "#table\t{}\t{}\t{}", t.id, t.degree, t.title);
        let _ = writeln!(out, "label\t{}", t.columns.join("\t"));
        for r in &t.rows {
            let _ = writeln!(out, "{}\t{}", r.label, r.cells.join("\t"));
        }
    }
    out
}

pub fn parse_tsv(text: &str) -> Result<Vec<Table>, CliError> {
    let mut out: Vec<Table> = Vec::new();
    let mut expect_header = false;
    for (n, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields[0] == "#table" {
            if fields.len() != 4 {
                return Err(CliError::input(format!("line {n}: table header needs id, degree and title")));
            }
            let degree = fields[2].parse().map_err(|_| CliError::input(format!("line {n}: bad degree")))?;
            out.push(Table::new(fields[1], degree, fields[3], Vec::new()));
            expect_header = true;
            continue;
        }
        let t = out.last_mut().ok_or_else(|| CliError::input(format!("line {n}: row outside a table")))?;
        if expect_header {
            if fields[0] != "label" {
                return Err(CliError::input(format!("line {n}: expected the column header")));
            }
            t.columns = fields[1..].iter().map(|s| s.to_string()).collect();
            expect_header = false;
        } else {
            t.push(fields[0], fields[1..].iter().map(|s| s.to_string()).collect());
        }
    }
    Ok(out)
}

/// Text for `chi_y` rows, as in the appendix C table.
pub fn chi_line(name: &str, chi: &ChiVector) -> String {
    format!("{name}: {}", cells(chi.values()).join(" "))
}
