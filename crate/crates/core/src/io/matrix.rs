//! Adjacency-matrix text: `n` non-empty lines of `n` entries from `{0, 1}`, symmetric with a
//! zero diagonal. Whitespace between entries is ignored; lines starting with `#` are comments.

use thiserror::Error;

use crate::graph::Graph;

/// Rows and columns are 1-based in messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("empty adjacency matrix")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("entry {found:?} at row {row}, column {col} is not 0 or 1")]
    InvalidEntry { row: usize, col: usize, found: char },
    #[error("matrix is asymmetric at row {row}, column {col}")]
    Asymmetric { row: usize, col: usize },
    #[error("nonzero diagonal entry at row {row}")]
    NonzeroDiagonal { row: usize },
}

pub fn parse_adjacency_matrix(text: &str) -> Result<Graph, MatrixError> {
    let rows: Vec<Vec<char>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.chars().filter(|c| !c.is_whitespace()).collect())
        .collect();
    let n = rows.len();
    if n == 0 {
        return Err(MatrixError::Empty);
    }
    let mut bits = vec![false; n * n];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(MatrixError::NonSquare {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
        }
        for (j, &c) in row.iter().enumerate() {
            bits[i * n + j] = match c {
                '0' => false,
                '1' => true,
                found => {
                    return Err(MatrixError::InvalidEntry {
                        row: i + 1,
                        col: j + 1,
                        found,
                    })
                }
            };
        }
    }
    for i in 0..n {
        if bits[i * n + i] {
            return Err(MatrixError::NonzeroDiagonal { row: i + 1 });
        }
        for j in i + 1..n {
            if bits[i * n + j] != bits[j * n + i] {
                return Err(MatrixError::Asymmetric { row: i + 1, col: j + 1 });
            }
        }
    }
    Ok(Graph::from_adjacency_fn(n, |u, v| bits[u * n + v]))
}

/// One line per row, no separators.
pub fn encode_adjacency_matrix(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * (n + 1));
    for u in 0..n {
        out.extend((0..n).map(|v| if g.is_adjacent(u, v) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_adjacency_matrix("01\n10\n").unwrap(), complete(2));
        let k3 = parse_adjacency_matrix("0 1 1\n1 0 1\n1 1 0").unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(k3, cycle(3));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_adjacency_matrix("# K2\n\n0 1\n\n1 0\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn errors_carry_coordinates() {
        assert_eq!(
            parse_adjacency_matrix("011\n000\n100"),
            Err(MatrixError::Asymmetric { row: 1, col: 2 })
        );
        assert_eq!(
            parse_adjacency_matrix("01\n1"),
            Err(MatrixError::NonSquare { row: 2, len: 1, expected: 2 })
        );
        assert_eq!(
            parse_adjacency_matrix("11\n10"),
            Err(MatrixError::NonzeroDiagonal { row: 1 })
        );
        assert_eq!(
            parse_adjacency_matrix("0x\nx0"),
            Err(MatrixError::InvalidEntry { row: 1, col: 2, found: 'x' })
        );
        assert_eq!(parse_adjacency_matrix(" \n# nothing\n"), Err(MatrixError::Empty));
    }

    #[test]
    fn round_trip() {
        let p = petersen();
        assert_eq!(parse_adjacency_matrix(&encode_adjacency_matrix(&p)).unwrap(), p);
    }
}
