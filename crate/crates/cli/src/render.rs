//! ASCII picture of a path: one row per up-step, top row first.
//!
//! Row `i` has `|` at column `2 a_i` and `_` along the following run of
//! right-steps. A `.` marks the boundary `x = m(i-1)` where nothing else is
//! drawn. The step word is printed underneath.

use mtamari::paths::to_step_word;
use mtamari::PathSeq;

pub fn render(seq: &PathSeq, m: u32) -> String {
    let n = seq.len();
    let end = m as usize * n;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let x = seq.at(i) as usize;
        let next = if i < n { seq.at(i + 1) as usize } else { end };
        let mut row = vec![' '; 2 * end + 1];
        row[2 * m as usize * (i - 1)] = '.';
        row[2 * x] = '|';
        for c in row.iter_mut().take(2 * next).skip(2 * x + 1) {
            *c = '_';
        }
        let line: String = row.into_iter().collect();
        rows.push(line.trim_end().to_string());
    }
    rows.reverse();
    let mut out = rows.join("\n");
    out.push('\n');
    out.push_str(&to_step_word(seq, m).to_string());
    out.push('\n');
    out
}
