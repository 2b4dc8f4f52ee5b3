//! Set-partition enumeration via restricted growth strings.

use crate::error::Error;
use crate::situation::Subset;
use crate::value::StateId;

/// Number of set partitions of an n-element set.
pub fn bell(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    if n == 0 { 1 } else { *row.last().unwrap() }
}

/// All partitions of `{0, .., n-1}` into nonempty cells, in lexicographic
/// restricted-growth-string order. Cells are indexed by first occurrence,
/// so cell 0 always contains state 0.
pub fn partitions(n: usize, budget: u64) -> Result<Vec<Vec<Subset>>, Error> {
    let count = bell(n);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "set-partition enumeration".to_string(),
            required: count,
            unit: "partitions",
            budget,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut rgs = vec![0usize; n];
    loop {
        let cells = rgs.iter().max().map_or(0, |m| m + 1);
        let mut partition = vec![Subset::EMPTY; cells];
        for (i, &cell) in rgs.iter().enumerate() {
            partition[cell] = partition[cell].union(Subset::singleton(StateId(i as u32)));
        }
        out.push(partition);
        // Advance to the next restricted growth string.
        let mut pos = n;
        loop {
            if pos <= 1 {
                return Ok(out);
            }
            pos -= 1;
            let cap = rgs[..pos].iter().max().unwrap() + 1;
            if rgs[pos] < cap {
                rgs[pos] += 1;
                for later in rgs.iter_mut().skip(pos + 1) {
                    *later = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        assert_eq!(bell(1), 1);
        assert_eq!(bell(2), 2);
        assert_eq!(bell(3), 5);
        assert_eq!(bell(4), 15);
        assert_eq!(bell(6), 203);
    }

    #[test]
    fn partitions_of_three_in_rgs_order() {
        let parts = partitions(3, 203).unwrap();
        assert_eq!(parts.len(), 5);
        let rendered: Vec<Vec<Vec<u32>>> = parts
            .iter()
            .map(|p| p.iter().map(|c| c.members().map(|s| s.0).collect()).collect())
            .collect();
        assert_eq!(
            rendered,
            vec![
                vec![vec![0, 1, 2]],
                vec![vec![0, 1], vec![2]],
                vec![vec![0, 2], vec![1]],
                vec![vec![0], vec![1, 2]],
                vec![vec![0], vec![1], vec![2]],
            ]
        );
    }

    #[test]
    fn cells_are_nonempty_and_cover() {
        for n in 1..=5 {
            for p in partitions(n, 100).unwrap() {
                let mut union = Subset::EMPTY;
                for cell in &p {
                    assert!(!cell.is_empty());
                    assert!(union.is_disjoint(*cell));
                    union = union.union(*cell);
                }
                assert_eq!(union, Subset::full(n));
            }
        }
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(partitions(7, 203), Err(Error::BudgetExceeded { .. })));
    }
}
