use std::fmt::Write as _;

use cohomog7::abelian::AbelianGroup;
use cohomog7::classify::ClassificationReport;
use num_bigint::BigUint;

const SUPERSCRIPT: [&str; 8] = ["⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷"];

fn h(k: usize) -> String {
    format!("H{}", SUPERSCRIPT[k])
}

fn pretty_product(p: &str) -> String {
    p.replace("^2", "²")
}

fn r_text(rep: &ClassificationReport) -> String {
    rep.r.as_ref().map(BigUint::to_string).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn info_text(rep: &ClassificationReport) -> String {
    let mut out = String::new();
    if !rep.valid {
        let _ = writeln!(out, "{}: invalid parameters", rep.params);
        for e in &rep.errors {
            let _ = writeln!(out, "  - {} [{}]", e.message, e.rule);
        }
        return out;
    }
    let _ = writeln!(out, "{}", rep.params);
    for (k, g) in rep.groups.iter().enumerate() {
        let _ = writeln!(out, "  {} = {g}", h(k));
    }
    let _ = writeln!(out, "  r = {}", r_text(rep));
    if rep.is_type_er {
        let _ = writeln!(
            out,
            "  type E_{}, Eschenburg ring: {}",
            r_text(rep),
            yes_no(rep.eschenburg_ring)
        );
    } else {
        let _ = writeln!(
            out,
            "  not type E_r; {} ≅ {}, {} ≅ {}",
            h(3),
            rep.groups[3],
            h(4),
            rep.groups[4]
        );
    }
    if rep.known_eschenburg_space {
        let _ = writeln!(out, "  known Eschenburg space");
    }
    let _ = writeln!(
        out,
        "  ring generators: {} ({})",
        rep.ring_generators.join(", "),
        if rep.ring_complete { "complete" } else { "partial" }
    );
    for p in &rep.ring_products {
        let _ = writeln!(
            out,
            "  {} generates {}",
            pretty_product(&p.product),
            h(p.generates as usize)
        );
    }
    for n in &rep.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

/// Degrees that differ from the `(Z,0,Z,0,Z_r,Z,0,Z)` pattern.
fn deviations(rep: &ClassificationReport) -> Vec<String> {
    let z = AbelianGroup::integers();
    let expected = |k: usize| match k {
        0 | 2 | 5 | 7 => Some(z.clone()),
        1 | 3 | 6 => Some(AbelianGroup::trivial()),
        _ => None,
    };
    rep.groups
        .iter()
        .enumerate()
        .filter(|(k, g)| match expected(*k) {
            Some(e) => **g != e,
            None => !g.is_finite(),
        })
        .map(|(k, g)| format!("{} = {g}", h(k)))
        .collect()
}

pub fn summary(rep: &ClassificationReport) -> String {
    if !rep.valid {
        return "invalid".into();
    }
    let mut parts = Vec::new();
    if rep.is_type_er {
        let r = rep.r.as_ref().expect("valid reports carry r");
        let parity = if r.bit(0) { "odd" } else { "even" };
        parts.push(format!("type E_{r}, r {parity}"));
        if rep.eschenburg_ring {
            parts.push("Eschenburg ring".into());
        }
        if rep.known_eschenburg_space {
            parts.push("known Eschenburg space".into());
        }
    } else {
        parts.extend(deviations(rep));
        if rep.family == cohomog7::Family::M {
            parts.push("S³-bundle over S⁴ ring".into());
        }
    }
    if !rep.ring_complete {
        parts.push("ring generators partial".into());
    }
    parts.join(", ")
}

fn groups_compact(rep: &ClassificationReport) -> String {
    rep.groups.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str(" | ");
            }
            line.push_str(cell);
            if c + 1 < cols {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn table_text(reports: &[ClassificationReport]) -> String {
    let mut rows = vec![vec![
        "params".to_string(),
        "r".to_string(),
        "H⁰..H⁷".to_string(),
        "ring generators".to_string(),
        "summary".to_string(),
    ]];
    for rep in reports {
        rows.push(vec![
            rep.params.to_string(),
            r_text(rep),
            if rep.valid { groups_compact(rep) } else { String::new() },
            rep.ring_generators.join(", "),
            summary(rep),
        ]);
    }
    align(&rows)
}

pub fn search_text(reports: &[ClassificationReport], spec: &str) -> String {
    let mut out = format!("# {} candidates for {spec}\n", reports.len());
    for rep in reports {
        let _ = writeln!(out, "{}  r = {}  {}", rep.params, r_text(rep), summary(rep));
    }
    out
}

const CSV_HEADER: [&str; 16] = [
    "family",
    "params",
    "valid",
    "r",
    "H0",
    "H1",
    "H2",
    "H3",
    "H4",
    "H5",
    "H6",
    "H7",
    "is_type_Er",
    "eschenburg_ring",
    "ring_generators",
    "ring_complete",
];

pub fn csv(reports: &[ClassificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for rep in reports {
        let mut row = vec![
            rep.family.to_string(),
            rep.params.to_string(),
            rep.valid.to_string(),
            r_text(rep),
        ];
        for k in 0..8 {
            row.push(rep.groups.get(k).map(|g| g.to_string()).unwrap_or_default());
        }
        row.push(rep.is_type_er.to_string());
        row.push(rep.eschenburg_ring.to_string());
        row.push(rep.ring_generators.join(" "));
        row.push(rep.ring_complete.to_string());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn json_lines(reports: &[ClassificationReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        out.push_str(&rep.to_json());
        out.push('\n');
    }
    out
}
