//! Brute-force reference computations, independent of the library's Smith
//! form and determinant code. Everything here is explicit enumeration, on
//! machine integers except for the big Leibniz determinant.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of a finite abelian group given the order of every
/// element. For each prime `p`, `#{x : p^j x = 0} = p^(Σ min(e_i, j))`
/// determines the partition of the `p`-primary part.
pub fn invariants_from_element_orders(orders: &[u64]) -> Vec<u64> {
    let size = orders.len() as u64;
    let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(size) {
        let mut logs = vec![0u32];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u64;
            let mut log = 0;
            let mut c = count;
            while c > 1 {
                assert_eq!(c % p, 0, "p-torsion count must be a power of p");
                c /= p;
                log += 1;
            }
            if log == *logs.last().unwrap() {
                break;
            }
            logs.push(log);
        }
        // parts of size >= j: logs[j] - logs[j-1]
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let parts = at_least[0] as usize;
        let mut exps = vec![0u32; parts];
        for (j, &n) in at_least.iter().enumerate() {
            for e in exps.iter_mut().take(n as usize) {
                *e = j as u32 + 1;
            }
        }
        // exps is non-increasing; store ascending
        exps.reverse();
        per_prime.insert(p, exps);
    }
    let k = per_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; k];
    for (p, exps) in &per_prime {
        let offset = k - exps.len();
        for (i, e) in exps.iter().enumerate() {
            out[offset + i] *= p.pow(*e);
        }
    }
    assert_eq!(out.iter().product::<u64>(), size);
    out
}

/// `Z_{a_1} × ... × Z_{a_k}` by enumeration; every `a_i ≥ 1`.
pub fn direct_product_invariants(moduli: &[u64]) -> Vec<u64> {
    let mut orders = vec![1u64];
    for &a in moduli {
        let mut next = Vec::with_capacity(orders.len() * a as usize);
        for &o in &orders {
            for x in 0..a {
                let ox = a / gcd(x as i128, a as i128) as u64;
                next.push(lcm(o as i128, ox as i128) as u64);
            }
        }
        orders = next;
    }
    invariants_from_element_orders(&orders)
}

pub fn det2(a: [[i128; 2]; 2]) -> i128 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Invariant factors of `Z² / A·Z²` for `det A ≠ 0`.
///
/// `v ↦ adj(A)·v mod N`, `N = |det A|`, is a homomorphism `Z² → (Z_N)²`
/// with kernel exactly `A·Z²`, so the cokernel is the subgroup of `(Z_N)²`
/// generated by the columns of `adj(A)`. That subgroup is enumerated
/// breadth-first and read off from its element orders.
pub fn cokernel2_invariants(a: [[i128; 2]; 2]) -> Vec<u64> {
    let det = det2(a);
    assert_ne!(det, 0);
    let n = det.abs();
    let adj = [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]];
    let gens = [
        [adj[0][0].rem_euclid(n), adj[1][0].rem_euclid(n)],
        [adj[0][1].rem_euclid(n), adj[1][1].rem_euclid(n)],
    ];
    let mut seen: HashSet<[i128; 2]> = HashSet::new();
    let mut queue = VecDeque::from([[0i128, 0]]);
    seen.insert([0, 0]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = [(v[0] + g[0]) % n, (v[1] + g[1]) % n];
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    assert_eq!(seen.len() as i128, n, "coset count equals |det|");
    let orders: Vec<u64> = seen
        .iter()
        .map(|v| lcm(n / gcd(v[0], n), n / gcd(v[1], n)) as u64)
        .collect();
    invariants_from_element_orders(&orders)
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let term: i128 = (0..n).map(|i| m[i][p[i]]).product();
        total += if inversions % 2 == 0 { term } else { -term };
    });
    total
}

/// Exact Leibniz expansion over arbitrary precision integers.
pub fn leibniz_det_big(m: &[Vec<num_bigint::BigInt>]) -> num_bigint::BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = num_bigint::BigInt::from(0);
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term: num_bigint::BigInt = (0..n).map(|i| &m[i][p[i]]).product();
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `k` with a nonzero `k × k` minor.
pub fn rank_by_minors(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                if leibniz_det(&minor) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// Closed forms of `r` evaluated in `i128`.
pub fn r_closed_l(pm: i128, qm: i128, pp: i128, qp: i128) -> i128 {
    let d = (pp * pp * qm * qm - pm * pm * qp * qp).abs();
    if pp % 2 != 0 {
        assert_eq!(d % 4, 0);
        d / 4
    } else {
        d
    }
}

pub fn r_closed_m(pm: i128, qm: i128, pp: i128, qp: i128) -> i128 {
    let d = (pp * pp * qm * qm - pm * pm * qp * qp).abs();
    assert_eq!(d % 8, 0);
    d / 8
}

pub fn r_closed_n(pm: i128, qm: i128, pp: i128, qp: i128) -> i128 {
    (pm * pm * qp * qp - pp * pp * qm * qm).abs()
}

pub fn r_closed_o(p: i128, q: i128) -> i128 {
    (p * p - q * q).abs()
}
