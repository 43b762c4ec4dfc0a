//! Text, ASCII-art and Graphviz renderings of the bijection chain.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bijections::{append_zero, tau, to_arc_diagram};
use crate::error::{Error, Result};
use crate::matchings::{Matching, MatchingPair};
use crate::perm::{write_word, CyclePermutation, PeakSet, Permutation};
use crate::Label;

/// Every intermediate object of the chain from an alternating permutation
/// to its arc diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapTrace {
    pub sigma: Permutation,
    /// `sigma` with a trailing 0; present for odd lengths only.
    pub extended: Option<Permutation>,
    pub reversed: Permutation,
    #[serde(serialize_with = "cycles_as_lists")]
    pub cycles: CyclePermutation,
    pub pair: MatchingPair,
    pub closers: PeakSet,
    pub peaks: PeakSet,
}

fn cycles_as_lists<S: serde::Serializer>(
    cp: &CyclePermutation,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    cp.cycles().serialize(s)
}

/// Runs the even or odd chain on `sigma` and keeps every stage.
pub fn trace(sigma: &Permutation) -> Result<MapTrace> {
    if !sigma.has_labels_from(1) {
        return Err(Error::WrongLabelSet {
            expected: format!("1..={}", sigma.len()),
            found: format!("{:?}", sigma.labels()),
        });
    }
    if !sigma.is_alternating() {
        return Err(Error::NotAlternating(sigma.to_string()));
    }
    let extended = (sigma.len() % 2 == 1).then(|| append_zero(sigma));
    let reversed = extended.as_ref().unwrap_or(sigma).reverse();
    let cycles = tau(&reversed)?;
    let pair = to_arc_diagram(&cycles)?;
    Ok(MapTrace {
        sigma: sigma.clone(),
        peaks: sigma.peak_values()?,
        closers: pair.closer_set(),
        extended,
        reversed,
        cycles,
        pair,
    })
}

pub fn arcs_text(m: &Matching) -> String {
    m.to_string()
}

impl MapTrace {
    /// One `name = value` line per stage.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |name: &str, value: String| {
            let _ = writeln!(out, "{name:<12} = {value}");
        };
        line("sigma", self.sigma.to_string());
        if let Some(ext) = &self.extended {
            line("append 0", ext.to_string());
        }
        line("reverse", self.reversed.to_string());
        line("tau", self.cycles.to_string());
        line("above arcs", arcs_text(self.pair.above()));
        line("below arcs", arcs_text(self.pair.below()));
        line("closer set", self.closers.to_string());
        line("peak set", self.peaks.to_string());
        out
    }
}

const CELL: usize = 4;

/// Assigns each arc a row so that no two arcs on the same row overlap;
/// shorter arcs sit closer to the vertex line.
fn levels(labels: &[Label], arcs: &[(Label, Label)]) -> Vec<usize> {
    let col = |x: Label| labels.binary_search(&x).unwrap();
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| (col(arcs[i].1) - col(arcs[i].0), col(arcs[i].0)));
    let mut level = vec![0; arcs.len()];
    let mut rows: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in order {
        let span = (col(arcs[i].0), col(arcs[i].1));
        let free = rows
            .iter()
            .position(|row| row.iter().all(|&(a, b)| span.1 < a || b < span.0));
        let r = free.unwrap_or_else(|| {
            rows.push(Vec::new());
            rows.len() - 1
        });
        rows[r].push(span);
        level[i] = r + 1;
    }
    level
}

fn arc_rows(labels: &[Label], arcs: &[(Label, Label)]) -> Vec<String> {
    let col = |x: Label| labels.binary_search(&x).unwrap() * CELL;
    let lv = levels(labels, arcs);
    let height = lv.iter().copied().max().unwrap_or(0);
    let width = labels.len().max(1) * CELL;
    // rows[0] is adjacent to the vertex line
    (1..=height)
        .map(|row| {
            let mut cells = vec![' '; width];
            for (&(o, c), &l) in arcs.iter().zip(&lv) {
                if l == row {
                    for cell in &mut cells[col(o) + 1..col(c)] {
                        *cell = '-';
                    }
                }
            }
            for (&(o, c), &l) in arcs.iter().zip(&lv) {
                if l == row {
                    cells[col(o)] = '+';
                    cells[col(c)] = '+';
                } else if l > row {
                    cells[col(o)] = '|';
                    cells[col(c)] = '|';
                }
            }
            cells.into_iter().collect::<String>().trim_end().to_string()
        })
        .collect()
}

fn vertex_line(labels: &[Label]) -> String {
    let mut s = String::new();
    for (i, l) in labels.iter().enumerate() {
        let pad = i * CELL;
        while s.len() < pad {
            s.push(' ');
        }
        let _ = write!(s, "{l}");
    }
    s
}

/// Above arcs stacked over the vertex line, below arcs hanging under it.
pub fn ascii_arc_diagram(pair: &MatchingPair) -> String {
    let labels = pair.labels();
    let mut out = String::new();
    for row in arc_rows(labels, pair.above().arcs()).iter().rev() {
        out.push_str(row);
        out.push('\n');
    }
    out.push_str(&vertex_line(labels));
    out.push('\n');
    for row in arc_rows(labels, pair.below().arcs()) {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// A single matching drawn above the vertex line.
pub fn ascii_matching(m: &Matching) -> String {
    let mut out = String::new();
    for row in arc_rows(m.labels(), m.arcs()).iter().rev() {
        out.push_str(row);
        out.push('\n');
    }
    out.push_str(&vertex_line(m.labels()));
    out.push('\n');
    out
}

/// Graphviz source: vertices in label order on one rank, above arcs as plain
/// edges, below arcs dashed.
pub fn dot_arc_diagram(pair: &MatchingPair) -> String {
    let labels = pair.labels();
    let mut out = String::from("graph arc_diagram {\n");
    out.push_str("    rankdir=LR;\n");
    out.push_str("    node [shape=circle];\n");
    out.push_str("    { rank=same;");
    for l in labels {
        let _ = write!(out, " {l};");
    }
    out.push_str(" }\n");
    if labels.len() > 1 {
        out.push_str("    ");
        let mut spine = String::new();
        write_word(&mut spine, labels).unwrap();
        out.push_str(&spine.replace(' ', " -- "));
        out.push_str(" [style=invis];\n");
    }
    for &(o, c) in pair.above().arcs() {
        let _ = writeln!(out, "    {o} -- {c} [class=above];");
    }
    for &(o, c) in pair.below().arcs() {
        let _ = writeln!(out, "    {o} -- {c} [class=below, style=dashed];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_example_trace() {
        let t = trace(&"5 3 8 1 4 2 7 6".parse().unwrap()).unwrap();
        assert_eq!(
            t.to_text(),
            "\
sigma        = 5 3 8 1 4 2 7 6
reverse      = 6 7 2 4 1 8 3 5
tau          = (6,7)(2,4)(1,8,3,5)
above arcs   = {2,4} {3,5} {6,7} {1,8}
below arcs   = {2,4} {1,5} {6,7} {3,8}
closer set   = {4,5,7,8}
peak set     = {4,5,7,8}
"
        );
    }

    #[test]
    fn even_example_ascii() {
        let t = trace(&"5 3 8 1 4 2 7 6".parse().unwrap()).unwrap();
        assert_eq!(
            ascii_arc_diagram(&t.pair),
            "\
+---------------------------+
|       +-------+           |
|   +---|---+   |   +---+   |
1   2   3   4   5   6   7   8
|   +---|---+   |   +---+   |
+-------|-------+           |
        +-------------------+
"
        );
    }

    #[test]
    fn trace_rejects_non_alternating() {
        assert!(matches!(
            trace(&"1 2".parse().unwrap()),
            Err(Error::NotAlternating(_))
        ));
        assert!(trace(&"3 2".parse().unwrap()).is_err());
    }

    #[test]
    fn dot_output() {
        let t = trace(&"2 1".parse().unwrap()).unwrap();
        assert_eq!(
            dot_arc_diagram(&t.pair),
            "\
graph arc_diagram {
    rankdir=LR;
    node [shape=circle];
    { rank=same; 1; 2; }
    1 -- 2 [style=invis];
    1 -- 2 [class=above];
    1 -- 2 [class=below, style=dashed];
}
"
        );
    }
}
