//! Exact rank over the rationals by fraction-free sparse elimination.

use std::collections::BTreeMap;

/// Sparse integer row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, i64)>;

type Row = Vec<(usize, i128)>;

/// Rank over `Q` of the matrix with the given rows.
///
/// Rows are combined as `p*r - q*pivot` and divided by their content, so all
/// arithmetic stays in the integers. Overflow of `i128` aborts.
pub fn rank_q(rows: Vec<SparseRow>) -> usize {
    // Rows bucketed by leading column.
    let mut buckets: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
    for r in rows {
        let row: Row = r.into_iter().filter(|&(_, v)| v != 0).map(|(c, v)| (c, v as i128)).collect();
        if let Some(&(c, _)) = row.first() {
            buckets.entry(c).or_default().push(row);
        }
    }
    let mut rank = 0;
    while let Some((_, mut group)) = buckets.pop_first() {
        // Pivot: smallest leading magnitude, then sparsest.
        let best = (0..group.len())
            .min_by_key(|&i| (group[i][0].1.unsigned_abs(), group[i].len()))
            .expect("non-empty bucket");
        let pivot = group.swap_remove(best);
        rank += 1;
        for row in group {
            let reduced = eliminate(&row, &pivot);
            if let Some(&(c, _)) = reduced.first() {
                buckets.entry(c).or_default().push(reduced);
            }
        }
    }
    rank
}

/// `p*row - q*pivot` where both share the leading column, normalized by content.
fn eliminate(row: &Row, pivot: &Row) -> Row {
    let p = pivot[0].1;
    let q = row[0].1;
    let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i128;
    let (p, q) = (p / g, q / g);
    let mut out: Row = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    let scale = |a: i128, b: i128| a.checked_mul(b).expect("exact rank: i128 overflow");
    while i < row.len() || j < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(j)) {
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (ca, scale(p, va).checked_sub(scale(q, vb)).expect("exact rank: i128 overflow"))
            }
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, scale(p, va))
            }
            (Some(&(ca, va)), None) => {
                i += 1;
                (ca, scale(p, va))
            }
            (_, Some(&(cb, vb))) => {
                j += 1;
                (cb, -scale(q, vb))
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    let content = out.iter().fold(0u128, |acc, &(_, v)| gcd(acc, v.unsigned_abs()));
    if content > 1 {
        let c = content as i128;
        for e in &mut out {
            e.1 /= c;
        }
    }
    out
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_q(vec![]), 0);
        assert_eq!(rank_q(dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_q(dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_q(dense(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank_q(dense(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5], &[2, 3, 5]])), 3);
    }

    #[test]
    fn characteristic_zero_not_two() {
        // Singular mod 2 (det = 2), full rank over Q.
        assert_eq!(rank_q(dense(&[&[1, 1], &[1, -1]])), 2);
        // Boundary of a triangle: rank 2.
        assert_eq!(rank_q(dense(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]])), 2);
    }
}
