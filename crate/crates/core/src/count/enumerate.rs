use super::adjacency::PrimeAdjacency;
use crate::permutation::Permutation;

/// Lazily yields every valid permutation in lexicographic order of one-line
/// notation.
///
/// Row `k` tries its allowed columns in ascending order. Alongside the search
/// a perfect matching between the unassigned rows and the free columns is
/// kept. A candidate is accepted only if that matching can be repaired (one
/// augmenting path) after the assignment, so every accepted prefix extends to
/// a full solution and the search never walks into a dead subtree.
#[derive(Debug, Clone)]
pub struct Solutions {
    adj: PrimeAdjacency,
    image: Vec<usize>,
    /// Smallest column still to try at each depth.
    next_column: Vec<usize>,
    matching: Matching,
    remaining: Option<usize>,
    done: bool,
}

/// Perfect matching between unassigned rows and free columns. Indices are
/// 1-based; 0 means unmatched.
#[derive(Debug, Clone)]
struct Matching {
    used: Vec<bool>,
    row_mate: Vec<usize>,
    col_mate: Vec<usize>,
    /// Column `c` was visited in the current search iff `seen[c] == stamp`.
    seen: Vec<u32>,
    stamp: u32,
}

impl Matching {
    fn new(n: usize) -> Self {
        Matching {
            used: vec![false; n + 1],
            row_mate: vec![0; n + 1],
            col_mate: vec![0; n + 1],
            seen: vec![0; n + 1],
            stamp: 0,
        }
    }

    fn fresh_search(&mut self) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.fill(0);
            self.stamp = 1;
        }
    }

    /// Kuhn's augmenting-path step from `row` over free columns.
    fn augment(&mut self, adj: &PrimeAdjacency, row: usize) -> bool {
        for col in adj.neighbors(row) {
            if self.used[col] || self.seen[col] == self.stamp {
                continue;
            }
            self.seen[col] = self.stamp;
            let holder = self.col_mate[col];
            if holder == 0 || self.augment(adj, holder) {
                self.row_mate[row] = col;
                self.col_mate[col] = row;
                return true;
            }
        }
        false
    }

    /// Assigns `col` to `row` if the remaining rows can still be completed.
    fn try_assign(&mut self, adj: &PrimeAdjacency, row: usize, col: usize) -> bool {
        let old_col = self.row_mate[row];
        let old_row = self.col_mate[col];
        self.used[col] = true;
        self.row_mate[row] = 0;
        self.col_mate[col] = 0;
        if old_row == row {
            return true;
        }
        self.col_mate[old_col] = 0;
        self.row_mate[old_row] = 0;
        self.fresh_search();
        if self.augment(adj, old_row) {
            return true;
        }
        self.used[col] = false;
        self.row_mate[row] = old_col;
        self.col_mate[old_col] = row;
        self.row_mate[old_row] = col;
        self.col_mate[col] = old_row;
        false
    }

    /// Returns an assignment to the pool; it rejoins the matching as-is.
    fn release(&mut self, row: usize, col: usize) {
        self.used[col] = false;
        self.row_mate[row] = col;
        self.col_mate[col] = row;
    }
}

impl Solutions {
    pub(crate) fn new(adj: PrimeAdjacency, limit: Option<usize>) -> Self {
        let n = adj.n();
        let mut matching = Matching::new(n);
        let mut done = limit == Some(0);
        for row in 1..=n {
            matching.fresh_search();
            if !matching.augment(&adj, row) {
                done = true;
                break;
            }
        }
        Solutions {
            image: Vec::with_capacity(n),
            next_column: vec![1; n + 1],
            matching,
            remaining: limit,
            done,
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.n()
    }

    fn pop(&mut self) {
        let col = self.image.pop().expect("pop below depth zero");
        self.matching.release(self.image.len() + 1, col);
    }

    fn search(&mut self) -> Option<Permutation> {
        let n = self.n();
        loop {
            let depth = self.image.len();
            if depth == n {
                let found = Permutation::from_image_unchecked(self.image.clone());
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(found);
            }
            let row = depth + 1;
            let start = self.next_column[depth];
            let adj = &self.adj;
            let matching = &mut self.matching;
            let chosen = adj
                .neighbors(row)
                .skip_while(|&c| c < start)
                .find(|&c| !matching.used[c] && matching.try_assign(adj, row, c));
            match chosen {
                Some(col) => {
                    self.next_column[depth] = col + 1;
                    self.image.push(col);
                    self.next_column[depth + 1] = 1;
                }
                None if depth == 0 => {
                    self.done = true;
                    return None;
                }
                None => self.pop(),
            }
        }
    }
}

impl Iterator for Solutions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let found = self.search();
        if let Some(left) = self.remaining.as_mut() {
            *left -= 1;
            if *left == 0 {
                self.done = true;
            }
        }
        found
    }
}
