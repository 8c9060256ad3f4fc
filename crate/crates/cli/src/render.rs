//! ASCII braid diagrams: one row per letter, strands in the even columns.

use braidforge_core::BraidWord;

/// Row for `σ_i` on `n` strands: `|` for each untouched strand and `X`
/// between strands `i` and `i + 1`, whose own columns are left blank.
pub fn render_letter(n: usize, letter: usize) -> String {
    (0..2 * n - 1)
        .map(|col| {
            let (left, right) = (2 * (letter - 1), 2 * letter);
            if col == left + 1 {
                'X'
            } else if col == left || col == right {
                ' '
            } else if col % 2 == 0 {
                '|'
            } else {
                ' '
            }
        })
        .collect()
}

pub fn render(w: &BraidWord) -> String {
    let mut out = String::new();
    for &letter in w.letters() {
        out.push_str(&render_letter(w.strands(), letter));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidforge_core::parse_t;

    #[test]
    fn single_crossing() {
        assert_eq!(render(&BraidWord::new(2, vec![1]).unwrap()), " X \n");
    }

    #[test]
    fn rows_and_width() {
        let text = render(&parse_t("T[(2,3)]").unwrap().braid());
        assert_eq!(text.lines().count(), 3);
        let w = BraidWord::new(4, vec![1, 3, 2]).unwrap();
        let rows: Vec<String> = render(&w).lines().map(str::to_string).collect();
        assert_eq!(rows, [" X  | |", "| |  X ", "|  X  |"]);
        for row in &rows {
            assert_eq!(row.chars().count(), 7);
            assert_eq!(row.chars().step_by(2).filter(|&c| c == '|').count(), 2);
        }
    }
}
