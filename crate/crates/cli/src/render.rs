//! Text rendering shared by the subcommands.

use std::collections::HashMap;

use pathtoggles::snakes::Snake;
use pathtoggles::OrbitBoard;

const LETTERS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

pub fn snake_letter(index: usize) -> char {
    LETTERS[index % LETTERS.len()] as char
}

/// Draws a board with row labels; 1-cells show their snake letter when a
/// decomposition is supplied, otherwise `1`. Empty cells show `.`.
pub fn board_text(board: &OrbitBoard<'_>, snakes: Option<&[Snake]>) -> String {
    let n = board.n();
    let len = board.len();
    let mut cell_letter: HashMap<(usize, usize), char> = HashMap::new();
    if let Some(snakes) = snakes {
        for (idx, snake) in snakes.iter().enumerate() {
            for (row, col) in snake.board_cells(len) {
                cell_letter.insert((row, col), snake_letter(idx));
            }
        }
    }
    let label_width = format!("S{}", len - 1).len().max(2);
    let mut out = String::new();
    out.push_str(&" ".repeat(label_width + 2));
    for j in 1..=n {
        out.push_str(&format!("{j:>2} "));
    }
    out.push('\n');
    for i in 0..len {
        out.push_str(&format!(
            "{:<width$}  ",
            format!("S{i}"),
            width = label_width
        ));
        let state = board.row(i as i64);
        for j in 1..=n {
            let mark = if state.contains(j) {
                cell_letter.get(&(i, j)).copied().unwrap_or('1')
            } else {
                '.'
            };
            out.push_str(&format!("{mark:>2} "));
        }
        out.push('\n');
    }
    out
}

pub fn join_usize(values: &[usize], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
