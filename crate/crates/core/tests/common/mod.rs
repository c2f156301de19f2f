//! Shared generators and brute-force oracles for the integration tests.
//! Nothing here calls the deletion–contraction engine.
#![allow(dead_code)]

use chromex::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Order `n`, random density.
pub fn random_graph_of(rng: &mut impl Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.1..0.9);
    random_graph(rng, n, p)
}

/// Random order in `lo..=hi` and random density.
pub fn random_graph_in(rng: &mut impl Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.1..0.9);
    random_graph(rng, n, p)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Every labelled graph on `n` vertices, in edge-bitmask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Mean number of colours used over all proper `n`-colourings, by direct
/// enumeration of the `n^n` assignments.
pub fn mu_by_coloring_enumeration(g: &Graph) -> BigRational {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0usize; n];
    let (mut total_used, mut proper) = (0u64, 0u64);
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            let mut seen = vec![false; n];
            colors.iter().for_each(|&c| seen[c] = true);
            total_used += seen.iter().filter(|&&s| s).count() as u64;
            proper += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return BigRational::new(total_used.into(), proper.into());
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Coefficients (ascending) of the unique polynomial of degree < len
/// through `(x, values[x])` for x = 0, 1, .., by Lagrange interpolation
/// over the rationals.
pub fn interpolate(values: &[BigInt]) -> Vec<BigRational> {
    let m = values.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (i, yi) in values.iter().enumerate() {
        // basis polynomial Π_{j≠i} (x - j)/(i - j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..m {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
        }
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * BigRational::from_integer(yi.clone()) / &denom;
        }
    }
    coeffs
}

/// Stirling numbers of the second kind S(n, k) for k = 1..=n.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m {
                &row[k] * BigInt::from(k)
            } else {
                BigInt::zero()
            };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row.into_iter().skip(1).collect()
}
