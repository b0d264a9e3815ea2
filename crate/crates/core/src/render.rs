//! Monospace drawings of every object kind. Output is stable and ends with
//! a newline; trailing spaces are trimmed.

use crate::convert::Object;
use crate::paths::{DyckPath, DyckStep, MotzkinStep, TwoMotzkinPath};
use crate::perm::Permutation;
use crate::polyomino::{SkewDiagram, StaircaseDiagram};

pub fn render(obj: &Object) -> String {
    match obj {
        Object::Perm(p) => render_perm(p),
        Object::Step(s) => render_polyomino_cells(&step_cells(s), s.height()),
        Object::Parallelogram(q) => render_polyomino_cells(&q.cells(), q.height()),
        Object::Skew(d) => render_skew(d),
        Object::Staircase(d) => render_staircase(d),
        Object::Dyck(d) => render_dyck(d),
        Object::Motzkin2(c) => render_motzkin(c),
    }
}

fn step_cells(s: &crate::polyomino::StepPolyomino) -> Vec<(usize, usize)> {
    (0..s.width())
        .flat_map(|j| {
            let (b, t) = s.column_span(j);
            (b..t).map(move |y| (j, y))
        })
        .collect()
}

fn finish(lines: Vec<String>) -> String {
    let mut out = String::new();
    for l in lines {
        out.push_str(l.trim_end());
        out.push('\n');
    }
    out
}

/// Boxes for cells given as `(column, row)` with row 0 at the top.
fn boxes(cells: &[(usize, usize)]) -> String {
    let Some(w) = cells.iter().map(|c| c.0 + 1).max() else {
        return String::new();
    };
    let h = cells.iter().map(|c| c.1 + 1).max().unwrap();
    let mut grid = vec![vec![b' '; 4 * w + 1]; 2 * h + 1];
    for &(x, y) in cells {
        let (r, c) = (2 * y, 4 * x);
        for dc in [0, 4] {
            grid[r][c + dc] = b'+';
            grid[r + 2][c + dc] = b'+';
            grid[r + 1][c + dc] = b'|';
        }
        for dc in 1..4 {
            grid[r][c + dc] = b'-';
            grid[r + 2][c + dc] = b'-';
        }
    }
    finish(grid.into_iter().map(|row| String::from_utf8(row).unwrap()).collect())
}

fn render_polyomino_cells(cells: &[(usize, usize)], height: usize) -> String {
    let flipped: Vec<(usize, usize)> = cells.iter().map(|&(x, y)| (x, height - 1 - y)).collect();
    boxes(&flipped)
}

fn render_skew(d: &SkewDiagram) -> String {
    let cells: Vec<(usize, usize)> = d.cells().into_iter().map(|(r, c)| (c, r)).collect();
    boxes(&cells)
}

fn render_staircase(d: &StaircaseDiagram) -> String {
    let cells: Vec<(usize, usize)> =
        d.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (c, r))).collect();
    if cells.is_empty() {
        return "(empty)\n".to_string();
    }
    boxes(&cells)
}

/// Value rows from `n` down to 1; `o` marks `π_i`, `*` marks an excedance.
fn render_perm(p: &Permutation) -> String {
    let n = p.len();
    let width = n.to_string().len();
    let mut lines = Vec::new();
    for v in (1..=n).rev() {
        let mut line = format!("{v:>width$} |");
        for i in 1..=n {
            let mark = if p.at(i) != v {
                '.'
            } else if p.is_excedance(i) {
                '*'
            } else {
                'o'
            };
            line.push(' ');
            line.push(mark);
        }
        lines.push(line);
    }
    lines.push(format!("{} +{}", " ".repeat(width), "--".repeat(n)));
    finish(lines)
}

fn draw_path(steps: &[(i64, char)]) -> String {
    let mut h = 0i64;
    let mut placed = Vec::new();
    let mut top = 0;
    for &(delta, glyph) in steps {
        let row = if delta < 0 { h - 1 } else { h };
        placed.push((row, glyph));
        h += delta;
        top = top.max(row);
    }
    let mut lines = Vec::new();
    for row in (0..=top).rev() {
        lines.push(placed.iter().map(|&(r, g)| if r == row { g } else { ' ' }).collect());
    }
    finish(lines)
}

fn render_dyck(d: &DyckPath) -> String {
    if d.is_empty() {
        return "(empty)\n".to_string();
    }
    let steps: Vec<(i64, char)> =
        d.steps().iter().map(|s| if *s == DyckStep::U { (1, '/') } else { (-1, '\\') }).collect();
    draw_path(&steps)
}

/// `_` is a solid level step, `.` a broken one.
fn render_motzkin(c: &TwoMotzkinPath) -> String {
    if c.is_empty() {
        return "(empty)\n".to_string();
    }
    let steps: Vec<(i64, char)> = c
        .steps()
        .iter()
        .map(|s| match s {
            MotzkinStep::U => (1, '/'),
            MotzkinStep::D => (-1, '\\'),
            MotzkinStep::S => (0, '_'),
            MotzkinStep::B => (0, '.'),
        })
        .collect();
    draw_path(&steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::Kind;

    fn draw(kind: Kind, payload: &str) -> String {
        render(&Object::parse(kind, payload).unwrap())
    }

    #[test]
    fn single_cell_and_tiny_paths() {
        assert_eq!(draw(Kind::Parallelogram, "gamma=1 delta=1"), "+---+\n|   |\n+---+\n");
        assert_eq!(draw(Kind::Dyck, "UD"), "/\\\n");
        assert_eq!(draw(Kind::Motzkin2, "usbd"), " _.\n/  \\\n");
        assert_eq!(draw(Kind::Motzkin2, "ud"), "/\\\n");
        assert_eq!(draw(Kind::Motzkin2, ""), "(empty)\n");
        assert_eq!(draw(Kind::Perm, "2 1"), "2 | * .\n1 | . o\n  +----\n");
    }

    #[test]
    fn step_and_parallelogram_agree_in_shape_count() {
        let s = draw(Kind::Step, "alpha=1,4,1,3,1 beta=1,1,3,4,1");
        let q = draw(Kind::Parallelogram, "gamma=1,3,0,2,0 delta=0,0,2,3,1");
        assert_eq!(s.lines().count(), 2 * 11 + 1);
        assert_eq!(q.lines().count(), 2 * 6 + 1);
    }
}
