use std::collections::BTreeMap;

use gencartan::arith::{c_pr, d_p, exponents, theta, v_p};
use gencartan::partitions::{
    block_class, class_regular_partitions, count_tuples, ell_core, enumerate_partition_maps,
    enumerate_partitions, iota_join, iota_split, is_ell_core, is_p_power_partition, power_partitions,
    Partition,
};
use num_bigint::BigUint;
use num_traits::One;

const PARTITION_COUNTS: [usize; 13] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];

/// Removes rim hooks of length `ell` on the diagram until none is left.
fn core_by_diagram(lambda: &Partition, ell: usize) -> Partition {
    let mut rows = lambda.parts().to_vec();
    'outer: loop {
        let conj = Partition::from_unsorted(rows.clone()).conjugate();
        let cols = conj.parts();
        for i in 0..rows.len() {
            for (j, &col) in cols.iter().enumerate().take(rows[i]) {
                let arm = rows[i] - j - 1;
                let leg = col - i - 1;
                if arm + leg + 1 != ell {
                    continue;
                }
                let last = col - 1;
                for r in i..last {
                    rows[r] = rows[r + 1] - 1;
                }
                rows[last] = j;
                rows.retain(|&x| x > 0);
                continue 'outer;
            }
        }
        return Partition::from_unsorted(rows);
    }
}

fn brute_tuples(b: usize, a: usize) -> usize {
    if b == 0 {
        return usize::from(a == 0);
    }
    (0..=a).map(|k| PARTITION_COUNTS[k] * brute_tuples(b - 1, a - k)).sum()
}

#[test]
fn partition_counts() {
    for (w, &c) in PARTITION_COUNTS.iter().enumerate() {
        let ps = enumerate_partitions(w);
        assert_eq!(ps.len(), c);
        assert!(ps.windows(2).all(|x| x[0] < x[1]));
        assert!(ps.iter().all(|l| l.size() == w));
    }
}

#[test]
fn cores_match_diagram_removal() {
    for n in 0..=12 {
        for lambda in enumerate_partitions(n) {
            for ell in 2..=6 {
                let core = core_by_diagram(&lambda, ell);
                assert_eq!(ell_core(&lambda, ell), core, "{lambda} ell={ell}");
                assert!(is_ell_core(&core, ell));
                assert_eq!((n - core.size()) % ell, 0);
            }
        }
    }
}

#[test]
fn tuple_counts() {
    for b in 0..=4 {
        for a in 0..=8 {
            assert_eq!(count_tuples(b, a), BigUint::from(brute_tuples(b, a)), "k({b},{a})");
        }
    }
    for t in 1..=3 {
        for w in 0..=5 {
            assert_eq!(enumerate_partition_maps(t, w).len(), brute_tuples(t, w));
        }
    }
}

#[test]
fn iota_is_a_bijection() {
    for p in [2usize, 3, 5] {
        for w in 0..=10 {
            let mut per_class: BTreeMap<Partition, usize> = BTreeMap::new();
            for lambda in enumerate_partitions(w) {
                let split = iota_split(&lambda, p);
                assert_eq!(iota_join(&split), lambda);
                for (j, comp) in &split {
                    assert_ne!(j % p, 0);
                    assert!(!comp.is_empty());
                    assert!(is_p_power_partition(comp, p));
                }
                *per_class.entry(block_class(&lambda, p)).or_default() += 1;
            }
            let classes = class_regular_partitions(w, p);
            assert_eq!(per_class.keys().cloned().collect::<Vec<_>>(), classes);
            for nu in classes {
                let expected: usize =
                    nu.multiplicities().iter().map(|&(_, m)| power_partitions(m, p).len()).product();
                assert_eq!(per_class[&nu], expected, "p={p} nu={nu}");
            }
        }
    }
}

#[test]
fn c_pr_splits_along_iota() {
    for p in [2usize, 3] {
        for r in 0..=3 {
            for w in 0..=10 {
                for lambda in enumerate_partitions(w) {
                    let parts: u64 =
                        iota_split(&lambda, p).values().map(|l| c_pr(l, p as u64, r)).sum();
                    assert_eq!(c_pr(&lambda, p as u64, r), parts);
                }
            }
        }
    }
}

#[test]
fn exponents_add_up() {
    for p in [2u64, 3, 5] {
        for r in 0..=3 {
            for w in 0..=12 {
                for lambda in power_partitions(w, p as usize) {
                    let e = exponents(&lambda, p, r).unwrap();
                    assert_eq!(e.e + e.f, c_pr(&lambda, p, r));
                    assert_eq!(e.k, e.f as i64 - e.e as i64);
                }
            }
        }
    }
}

#[test]
fn legendre() {
    let mut fact = num_bigint::BigInt::one();
    for s in 1..=200u64 {
        fact *= s;
        for p in [2u64, 3, 5, 7] {
            assert_eq!(d_p(s, p), v_p(fact.clone(), p).unwrap());
        }
    }
    for s in 1..=10_000u64 {
        for p in [2u64, 3, 5, 7, 11] {
            assert!(d_p(s, p) < s);
        }
    }
}

#[test]
fn theta_is_multiplicative() {
    for w in 0..=7 {
        for lambda in enumerate_partitions(w) {
            assert!(theta(&lambda, 1).is_one());
            for a in 1..=12u64 {
                for b in 1..=12u64 {
                    if num_integer::gcd(a, b) == 1 {
                        assert_eq!(theta(&lambda, a * b), theta(&lambda, a) * theta(&lambda, b));
                    }
                }
            }
            for (p, r) in [(2u64, 1u32), (2, 3), (3, 2), (7, 1)] {
                let want = BigUint::from(p).pow(c_pr(&lambda, p, r) as u32);
                assert_eq!(theta(&lambda, p.pow(r)), want);
            }
        }
    }
}
