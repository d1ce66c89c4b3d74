#[path = "../../core/tests/reference/mod.rs"]
mod reference;

use reference::*;
use rwinv::tables::{appendix, parse_tsv, render_text, render_tsv, Table};

const APPENDICES: [char; 5] = ['A', 'B', 'C', 'D', 'E'];

fn fixture(letter: char) -> String {
    let path = format!("{}/tests/fixtures/appendix_{}.txt", env!("CARGO_MANIFEST_DIR"), letter.to_ascii_lowercase());
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Reads the text rendering back into tables.
fn parse_text(text: &str) -> Vec<Table> {
    let mut out: Vec<Table> = Vec::new();
    for line in text.lines().filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix('[') {
            let (id, rest) = rest.split_once("] ").unwrap();
            let (title, degree) = rest.rsplit_once(", degree ").unwrap();
            out.push(Table {
                id: id.to_string(),
                degree: degree.parse().unwrap(),
                title: title.to_string(),
                columns: Vec::new(),
                rows: Vec::new(),
            });
        } else if let Some(cols) = line.strip_prefix("columns: ") {
            out.last_mut().unwrap().columns = cols.split(' ').map(String::from).collect();
        } else {
            let (label, cells) = line.rsplit_once(": ").unwrap();
            let cells = cells.split(' ').map(String::from).collect();
            out.last_mut().unwrap().rows.push(rwinv::tables::Row { label: label.to_string(), cells });
        }
    }
    out
}

fn find<'a>(tables: &'a [Table], id: &str, degree: usize) -> &'a Table {
    tables.iter().find(|t| t.id == id && t.degree == degree).unwrap_or_else(|| panic!("[{id}] degree {degree}"))
}

fn class_name(s: &str) -> String {
    rwinv_core::ClassName::parse(s).unwrap().to_string()
}

fn partition_name(s: &str) -> String {
    rwinv_core::Partition::new(s.split(',').map(|x| x.parse().unwrap()).collect()).to_string()
}

/// `s2^2*s4` style names: ascending parts, repeated parts as powers.
fn monomial(prefix: &str, p: &[u32]) -> String {
    let mut parts = p.to_vec();
    parts.sort_unstable();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let m = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        out.push(if m == 1 { format!("{prefix}{}", parts[i]) } else { format!("{prefix}{}^{m}", parts[i]) });
        i += m;
    }
    out.join("*")
}

#[test]
fn emitted_tables_match_golden_files() {
    for letter in APPENDICES {
        let text = render_text(&appendix(letter).unwrap());
        assert_eq!(text, fixture(letter), "appendix {letter}");
    }
}

#[test]
fn text_and_tsv_round_trip() {
    for letter in APPENDICES {
        let tables = appendix(letter).unwrap();
        assert_eq!(parse_tsv(&render_tsv(&tables)).unwrap(), tables, "appendix {letter}");
        assert_eq!(parse_text(&render_text(&tables)), tables, "appendix {letter}");
    }
}

#[test]
fn malformed_tsv_is_rejected() {
    assert!(parse_tsv("x\t1\n").is_err());
    assert!(parse_tsv("#table\tC\n").is_err());
    assert!(parse_tsv("#table\tC\tfour\ttitle\n").is_err());
    assert!(parse_tsv("#table\tC\t4\ttitle\nS\t1\n").is_err());
    assert!(parse_tsv("").unwrap().is_empty());
}

#[test]
fn documented_rows() {
    assert!(fixture('C').contains("\nS^[4]: 5 -86 785 -4556 14786 -4556 785 -86 5\n"));
    assert!(fixture('D').contains("\nT^[[4]] s=490000: "));
    assert!(fixture('E').contains("\nC_4: 1296 432 144 144 48 24\n"));
}

// The fixtures are audited cell by cell against the reference transcriptions.

#[test]
fn fixture_a_matches_reference() {
    let tables = parse_text(&fixture('A'));
    for (lam, terms) in A1 {
        let weight: usize = lam.split(',').map(|x| x.parse::<usize>().unwrap()).sum();
        let t = find(&tables, "A.1", weight / 2);
        let row = t.rows.iter().find(|r| r.label == partition_name(lam)).unwrap();
        for (col, cell) in t.columns.iter().zip(&row.cells) {
            let want = terms.iter().find(|(c, _)| class_name(c) == *col).map_or("0", |(_, v)| v);
            assert_eq!(cell, want, "A.1 {lam} {col}");
        }
    }
    for (class, terms) in A2 {
        let k = rwinv_core::ClassName::parse(class).unwrap().degree() as usize;
        let t = find(&tables, "A.2", k);
        let row = t.rows.iter().find(|r| r.label == class_name(class)).unwrap();
        for (col, cell) in t.columns.iter().zip(&row.cells) {
            let want = terms
                .iter()
                .find(|(c, _)| {
                    if c.starts_with(|ch: char| ch.is_ascii_digit()) {
                        partition_name(c) == *col
                    } else {
                        class_name(c) == *col
                    }
                })
                .map_or("0", |(_, v)| v);
            assert_eq!(cell, want, "A.2 {class} {col}");
        }
    }
}

#[test]
fn fixture_b_matches_reference() {
    let tables = parse_text(&fixture('B'));
    for &(k, m, den, terms) in CHI_IN_C {
        let t = find(&tables, "B.1", k);
        for (p, c) in terms {
            let want = rwinv_core::Q::new((*c).into(), den.into()).to_string();
            assert_eq!(t.cell(&format!("chi^{m}"), &monomial("c", p)), Some(want.as_str()), "B.1 k={k} m={m}");
        }
    }
    for (id, rows, prefix) in [("B.2c", C_IN_CHI, "c"), ("B.2s", S_IN_CHI, "s")] {
        for &(k, p, coeffs) in rows {
            let t = find(&tables, id, k);
            let row = t.rows.iter().find(|r| r.label == monomial(prefix, p)).unwrap();
            let want: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            assert_eq!(row.cells, want, "{id} {}", row.label);
        }
    }
}

#[test]
fn fixture_c_matches_reference() {
    let tables = parse_text(&fixture('C'));
    let t = find(&tables, "C", 4);
    for (k, row) in HILBERT_CHI.iter().enumerate() {
        let label = if k == 0 { "S".to_string() } else { format!("S^[{}]", k + 1) };
        let got = &t.rows.iter().find(|r| r.label == label).unwrap().cells;
        assert_eq!(got, &row.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    for (k, row) in KUMMER_CHI.iter().enumerate() {
        let label = format!("T^[[{}]]", k + 2);
        let got = &t.rows.iter().find(|r| r.label == label).unwrap().cells;
        assert_eq!(got, &row.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
}

#[test]
fn fixture_d_matches_reference() {
    let tables = parse_text(&fixture('D'));
    for &(k, p, h, t) in CHERN_LOW {
        let table = find(&tables, "D", k);
        let (hl, tl) =
            if k == 1 { ("S".to_string(), "T^[[1]]".to_string()) } else { (format!("S^[{k}]"), format!("T^[[{k}]]")) };
        assert_eq!(table.cell(&hl, &monomial("s", p)), Some(h.to_string().as_str()));
        assert_eq!(table.cell(&tl, &monomial("s", p)), Some(t.to_string().as_str()));
    }
    let (sh, st) = S_PARAMETERS;
    let table = find(&tables, "D", 4);
    let line = find(&tables, "D.s", 4);
    for &(p, a, h, t) in CHERN_FOUR {
        let col = monomial("s", p);
        assert_eq!(table.cell(&format!("S^[4] s={sh}"), &col), Some((a * sh + h).to_string().as_str()));
        assert_eq!(table.cell(&format!("T^[[4]] s={st}"), &col), Some((a * st + t).to_string().as_str()));
        let constant = |c: i64| if c == 0 { String::new() } else { format!("+{c}") };
        assert_eq!(line.cell("S^[4]", &col), Some(format!("{a}s{}", constant(h)).as_str()));
        assert_eq!(line.cell("T^[[4]]", &col), Some(format!("{a}s{}", constant(t)).as_str()));
    }
}

#[test]
fn fixture_e_matches_reference() {
    let tables = parse_text(&fixture('E'));
    let row_of = |id: &str, k: usize, label: &str| -> Vec<String> {
        find(&tables, id, k)
            .rows
            .iter()
            .find(|r| r.label == label)
            .unwrap_or_else(|| panic!("{id} {label}"))
            .cells
            .clone()
    };
    for k in 1..=4 {
        let t = find(&tables, "E.1", k);
        let want_cols: Vec<String> = CLASSES[k - 1].iter().map(|c| class_name(c)).collect();
        let mut got_cols = t.columns.clone();
        got_cols.sort();
        let mut sorted = want_cols.clone();
        sorted.sort();
        assert_eq!(got_cols, sorted);
        let reorder = |v: &[i64]| -> Vec<String> {
            t.columns.iter().map(|c| v[want_cols.iter().position(|w| w == c).unwrap()].to_string()).collect()
        };
        let h = if k == 1 { "S".to_string() } else { format!("S^[{k}]") };
        assert_eq!(row_of("E.1", k, &h), reorder(HILBERT_B[k - 1]));
        assert_eq!(row_of("E.1", k, &format!("T^[[{k}]]")), reorder(KUMMER_B[k - 1]));
        assert_eq!(row_of("E.3", k, &format!("C_{k}")), reorder(VIRTUAL_B[k - 1]));
        assert!(row_of("E.1p", k, &h).iter().all(|p| p != "unknown"));
    }
    for (name, values) in PRODUCT_B {
        let k = CLASSES.iter().position(|c| c.len() == values.len()).unwrap() + 1;
        let t = find(&tables, "E.2", k);
        let want_cols: Vec<String> = CLASSES[k - 1].iter().map(|c| class_name(c)).collect();
        let want: Vec<String> =
            t.columns.iter().map(|c| values[want_cols.iter().position(|w| w == c).unwrap()].to_string()).collect();
        assert_eq!(row_of("E.2", k, name), want, "{name}");
    }
    assert_eq!(find(&tables, "E.2p", 4).cell("S^[2]xS^[2]", "theta2^2"), Some("product-split"));
}
