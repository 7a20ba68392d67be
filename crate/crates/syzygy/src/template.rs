use std::fmt::Write;

use syzygy_core::template::TemplateGrid;

const LEGEND: &str = "\
# legend
#   *  nonzero by N_q
#   -  zero by N_q
#   0  zero in every characteristic
#   o  zero when p is good for i
#   ^  zero if t_{i+q} <= t_i + t_q
#   v  no information
#   p  row: the prime that is not good for i
";

pub fn render(t: &TemplateGrid) -> String {
    let mut s = format!(
        "# Betti template for N_{}, columns 0..{}, rows 0..{}\n",
        t.q, t.i_max, t.j_max
    );
    s.push_str(LEGEND);
    let mut line = String::from("   |");
    for i in 0..=t.i_max {
        write!(line, "{i:>3}").unwrap();
    }
    push_line(&mut s, &line);
    for (j, row) in t.cells.iter().enumerate() {
        let mut line = format!("{j:>2} |");
        for c in row {
            write!(line, "{:>3}", c.symbol()).unwrap();
        }
        push_line(&mut s, &line);
    }
    let mut line = String::from(" p |");
    for p in &t.bottom {
        match p {
            Some(p) => write!(line, "{p:>3}").unwrap(),
            None => line.push_str("   "),
        }
    }
    push_line(&mut s, &line);
    s
}

fn push_line(s: &mut String, line: &str) {
    s.push_str(line.trim_end());
    s.push('\n');
}
