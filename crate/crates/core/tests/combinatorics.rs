use luqikeng_core::combin::{eulerian_number, eulerian_polynomial, factorial, stirling2, stirling2_row};
use num_bigint::BigUint;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

/// Number of set partitions of `{0..n}` into exactly `k` blocks, by
/// restricted growth strings.
fn partitions(n: usize, k: usize) -> usize {
    fn go(i: usize, n: usize, used: usize, k: usize) -> usize {
        if i == n {
            return usize::from(used == k);
        }
        (0..=used.min(k - 1)).map(|b| go(i + 1, n, used.max(b + 1), k)).sum()
    }
    if k == 0 {
        return usize::from(n == 0);
    }
    go(0, n, 0, k)
}

#[test]
fn eulerian_numbers_count_permutations_by_ascents() {
    for n in 1..=7 {
        let mut by_ascents = vec![0u64; n];
        for p in permutations(n) {
            by_ascents[p.windows(2).filter(|w| w[0] < w[1]).count()] += 1;
        }
        for (j, count) in by_ascents.into_iter().enumerate() {
            assert_eq!(eulerian_number(n, j + 1).unwrap(), BigUint::from(count), "n={n} j={j}");
        }
    }
}

#[test]
fn eulerian_rows_are_symmetric_and_sum_to_factorial() {
    for n in 1..=25 {
        let p = eulerian_polynomial(n).unwrap();
        assert_eq!(p.degree(), Some(n - 1));
        assert_eq!(p, p.reversed());
        let sum: num_bigint::BigInt = p.coeffs().iter().sum();
        assert_eq!(sum, factorial(n as u64).into());
    }
    assert!(eulerian_number(3, 0).is_err());
    assert!(eulerian_number(3, 4).is_err());
    assert!(eulerian_polynomial(0).is_err());
}

#[test]
fn stirling_numbers_count_set_partitions() {
    assert_eq!(stirling2(4, 2), BigUint::from(7u32));
    for n in 0..=8 {
        let row = stirling2_row(n);
        assert_eq!(row.len(), n + 1);
        for (k, s) in row.iter().enumerate() {
            assert_eq!(*s, BigUint::from(partitions(n, k)), "S({n},{k})");
            assert_eq!(&stirling2(n, k), s);
        }
    }
}
