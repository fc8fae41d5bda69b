use crate::error::{Error, Result};
use crate::hn::nu;
use crate::rational::Rational;

/// Lower bound for `ind` of a cusp with the given `lambda`.
pub fn ind_lower_bound(lambda: u64) -> Rational {
    match lambda {
        0 => Rational::zero(),
        1..=6 => nu(lambda).expect("lambda >= 1"),
        _ => Rational::frac(1, 2),
    }
}

/// Non-increasing `lambda`-tuples of length `c` with `sum <= 3 p2 + 7` and
/// the sum of lower bounds for `ind` at most `5 - p2`, in descending
/// lexicographic order.
pub fn feasible_lambda_tuples(c: usize, p2: u64) -> Result<Vec<Vec<u64>>> {
    if !(4..=5).contains(&c) {
        return Err(Error::Invalid(format!("number of cusps must be 4 or 5, got {c}")));
    }
    if p2 > 2 {
        return Err(Error::Invalid(format!("p2 must be in 0..=2, got {p2}")));
    }
    let budget = 3 * p2 + 7;
    let ind_cap = Rational::from_integer(5 - p2 as i64);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(c);
    fill(c, budget, budget, &ind_cap, &mut cur, &mut out);
    Ok(out)
}

fn fill(c: usize, max: u64, left: u64, cap: &Rational, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let slots = (c - cur.len()) as u64;
    if slots == 0 {
        let s: Rational = cur.iter().map(|&l| ind_lower_bound(l)).sum();
        if s <= *cap {
            out.push(cur.clone());
        }
        return;
    }
    // Each remaining slot needs at least 1.
    let hi = max.min(left + 1 - slots);
    for l in (1..=hi).rev() {
        cur.push(l);
        fill(c, l, left - l, cap, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cusps() {
        assert_eq!(feasible_lambda_tuples(5, 1).unwrap(), vec![vec![6, 1, 1, 1, 1]]);
        assert_eq!(
            feasible_lambda_tuples(5, 0).unwrap(),
            vec![vec![3, 1, 1, 1, 1], vec![2, 2, 1, 1, 1], vec![2, 1, 1, 1, 1], vec![1, 1, 1, 1, 1]]
        );
        assert!(feasible_lambda_tuples(5, 2).unwrap().is_empty());
    }

    #[test]
    fn four_cusps() {
        let p0 = feasible_lambda_tuples(4, 0).unwrap();
        assert!(p0.contains(&vec![4, 1, 1, 1]) && !p0.contains(&vec![5, 1, 1, 1]));
        let p1 = feasible_lambda_tuples(4, 1).unwrap();
        for t in [[7, 1, 1, 1], [6, 2, 1, 1], [5, 3, 1, 1], [5, 2, 2, 1], [6, 1, 1, 1], [5, 2, 1, 1], [5, 1, 1, 1]] {
            assert!(p1.contains(&t.to_vec()));
        }
        let big: Vec<_> = p1.iter().filter(|t| t[0] >= 5).collect();
        assert_eq!(big.len(), 7);
        let p2: Vec<_> = feasible_lambda_tuples(4, 2).unwrap().into_iter().filter(|t| t[1] > 1).collect();
        assert_eq!(p2, vec![vec![7, 4, 1, 1], vec![6, 5, 1, 1]]);
        assert!(feasible_lambda_tuples(3, 0).is_err());
    }
}
