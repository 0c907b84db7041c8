//! Backtracking exact cover over small bitset rows.
//!
//! Columns are `0..columns`; a solution is a set of pairwise disjoint rows
//! whose union is every column not marked as pre-covered.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::set::ElementSet;

/// How the next column to branch on is picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnChoice {
    /// Lowest-index uncovered column.
    FirstUncovered,
    /// Uncovered column with the fewest compatible rows (ties: lowest index).
    MostConstrained,
}

#[derive(Clone, Debug)]
pub struct ExactCover {
    columns: usize,
    rows: Vec<ElementSet>,
    by_column: Vec<Vec<usize>>,
    precovered: ElementSet,
}

impl ExactCover {
    pub fn new(columns: usize) -> Self {
        ExactCover {
            columns,
            rows: Vec::new(),
            by_column: alloc::vec![Vec::new(); columns],
            precovered: ElementSet::empty(columns),
        }
    }

    /// Adds a row and returns its index. Rows are tried in insertion order.
    pub fn add_row<I: IntoIterator<Item = usize>>(&mut self, cols: I) -> usize {
        let row = ElementSet::from_elements(self.columns, cols);
        let id = self.rows.len();
        for c in row.iter() {
            self.by_column[c].push(id);
        }
        self.rows.push(row);
        id
    }

    /// Marks a column as already covered; rows touching it become unusable.
    pub fn precover(&mut self, col: usize) {
        self.precovered.insert(col);
    }

    pub fn row(&self, id: usize) -> &ElementSet {
        &self.rows[id]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Calls `visit` with each solution (row ids, ascending) until it breaks.
    pub fn for_each_solution<F>(&self, choice: ColumnChoice, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut chosen = Vec::new();
        let _ = self.search(&self.precovered.clone(), &mut chosen, choice, &mut visit);
    }

    pub fn first_solution(&self, choice: ColumnChoice) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_solution(choice, |s| {
            found = Some(s.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn all_solutions(&self, choice: ColumnChoice) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_solution(choice, |s| {
            out.push(s.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    fn search<F>(
        &self,
        covered: &ElementSet,
        chosen: &mut Vec<usize>,
        choice: ColumnChoice,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let open = |c: &usize| !covered.contains(*c);
        let column = match choice {
            ColumnChoice::FirstUncovered => (0..self.columns).find(open),
            ColumnChoice::MostConstrained => (0..self.columns)
                .filter(open)
                .min_by_key(|&c| self.candidates(c, covered).count()),
        };
        let Some(column) = column else {
            let mut sol = chosen.clone();
            sol.sort_unstable();
            return visit(&sol);
        };
        for r in self.candidates(column, covered) {
            let next = covered.union(&self.rows[r]);
            chosen.push(r);
            let flow = self.search(&next, chosen, choice, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn candidates<'a>(
        &'a self,
        column: usize,
        covered: &'a ElementSet,
    ) -> impl Iterator<Item = usize> + 'a {
        self.by_column[column]
            .iter()
            .copied()
            .filter(move |&r| self.rows[r].is_disjoint(covered))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Knuth's running example; the unique cover is rows {0, 3, 4}.
    fn knuth() -> ExactCover {
        let mut ec = ExactCover::new(7);
        ec.add_row([2, 4, 5]);
        ec.add_row([0, 3, 6]);
        ec.add_row([1, 2, 5]);
        ec.add_row([0, 3]);
        ec.add_row([1, 6]);
        ec.add_row([3, 4, 6]);
        ec
    }

    #[test]
    fn unique_cover() {
        for choice in [ColumnChoice::FirstUncovered, ColumnChoice::MostConstrained] {
            assert_eq!(knuth().all_solutions(choice), vec![vec![0, 3, 4]]);
        }
    }

    #[test]
    fn precovered_columns() {
        let mut ec = ExactCover::new(3);
        ec.add_row([0, 1]);
        ec.add_row([1]);
        ec.add_row([2]);
        ec.precover(0);
        assert_eq!(ec.all_solutions(ColumnChoice::FirstUncovered), vec![vec![1, 2]]);
    }

    #[test]
    fn no_cover() {
        let mut ec = ExactCover::new(2);
        ec.add_row([0, 1]);
        ec.add_row([1]);
        ec.precover(0);
        ec.add_row([0]);
        assert_eq!(ec.first_solution(ColumnChoice::MostConstrained), Some(vec![1]));
        let mut ec = ExactCover::new(2);
        ec.add_row([0]);
        assert_eq!(ec.first_solution(ColumnChoice::MostConstrained), None);
    }

    #[test]
    fn zero_columns_has_the_empty_cover() {
        assert_eq!(
            ExactCover::new(0).all_solutions(ColumnChoice::FirstUncovered),
            vec![Vec::<usize>::new()]
        );
    }
}
