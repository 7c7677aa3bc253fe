//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's eigensolver, clique enumeration or solvers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specpart::Graph;

// ---------------------------------------------------------------------------
// Exact spectra: characteristic polynomial, square-free factorization, Sturm.

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn deriv(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Quotient and remainder.
fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead = b.last().expect("nonzero divisor").clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    let lead = p.last().unwrap().clone();
    p.into_iter().map(|c| c / &lead).collect()
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = divmod(&a, &b).1;
        a = b;
        b = r;
    }
    monic(a)
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
                x - y
            })
            .collect(),
    )
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Yun's algorithm: `f = Π a_i^i`, returned as `(a_i, i)` with `deg a_i > 0`.
fn square_free_factors(f: &Poly) -> Vec<(Poly, usize)> {
    let f = monic(trim(f.clone()));
    let df = deriv(&f);
    let a0 = gcd(&f, &df);
    let mut b = divmod(&f, &a0).0;
    let c = divmod(&df, &a0).0;
    let mut d = sub(&c, &deriv(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        let next_b = divmod(&b, &a).0;
        let next_c = divmod(&d, &a).0;
        if a.len() > 1 {
            out.push((a, i));
        }
        d = sub(&next_c, &deriv(&next_b));
        b = next_b;
        i += 1;
    }
    out
}

struct Sturm(Vec<Poly>);

impl Sturm {
    fn new(f: &Poly) -> Self {
        let mut seq = vec![f.clone(), deriv(f)];
        while seq.last().unwrap().len() > 1 {
            let n = seq.len();
            let r = divmod(&seq[n - 2], &seq[n - 1]).1;
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm(seq)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .0
            .iter()
            .map(|p| eval(p, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn to_f64(x: &BigRational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    n.to_string().parse::<f64>().unwrap() / d.to_string().parse::<f64>().unwrap()
}

/// Roots of a square-free polynomial with only real roots.
fn real_roots(f: &Poly, width: f64) -> Vec<f64> {
    let sturm = Sturm::new(f);
    let lead = f.last().unwrap().abs();
    let cauchy = f.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |a, b| a.max(b))
        + BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let width = BigRational::from_float(width).unwrap();
    let mut out = Vec::new();
    let mut stack = vec![(-cauchy.clone(), cauchy)];
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => {
                // A simple root in (a, b]: bisect on the sign of `f` alone,
                // against `f(b)` since `a` may be a root of a neighbour.
                let (mut lo, mut hi) = (a, b);
                let f_hi = eval(f, &hi);
                if f_hi.is_zero() {
                    lo = hi.clone();
                }
                let hi_positive = f_hi.is_positive();
                while &hi - &lo > width {
                    let mid = (&lo + &hi) / &two;
                    let fm = eval(f, &mid);
                    if fm.is_zero() {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if fm.is_positive() == hi_positive {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push(to_f64(&((lo + hi) / &two)));
            }
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out
}

/// Characteristic polynomial `det(xI - A)`, coefficients from `x^0` up, by
/// Faddeev–LeVerrier in exact integer arithmetic.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &a[i][l] * &m[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i][l] * &m[l][i];
            }
        }
        c[n - k] = -trace / BigInt::from(k);
    }
    c
}

thread_local! {
    /// Small factors such as `x`, `x + 1` recur across a corpus.
    static ROOTS: std::cell::RefCell<std::collections::HashMap<Poly, Vec<f64>>> = Default::default();
}

/// Eigenvalues of an integer symmetric matrix, descending, with
/// multiplicity.
pub fn oracle_eigenvalues(a: &[Vec<i64>]) -> Vec<f64> {
    let p: Poly = char_poly(a).into_iter().map(BigRational::from_integer).collect();
    let mut out = Vec::new();
    for (factor, mult) in square_free_factors(&p) {
        let roots = ROOTS.with(|cache| {
            cache
                .borrow_mut()
                .entry(factor.clone())
                .or_insert_with(|| real_roots(&factor, 1e-12))
                .clone()
        });
        for r in roots {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(|x, y| y.total_cmp(x));
    out
}

pub fn adjacency(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| i64::from(g.has_edge(u, v))).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Graph corpora.

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Canonical code: the smallest edge bitmask over all relabelings.
struct Canon {
    pairs: Vec<(usize, usize)>,
    /// For each permutation, where each pair bit goes.
    maps: Vec<Vec<u8>>,
}

impl Canon {
    fn new(n: usize) -> Self {
        let pairs = pair_index(n);
        let mut id = vec![vec![0u8; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            id[u][v] = i as u8;
            id[v][u] = i as u8;
        }
        let maps = permutations(n)
            .into_iter()
            .map(|p| pairs.iter().map(|&(u, v)| id[p[u]][p[v]]).collect())
            .collect();
        Canon { pairs, maps }
    }

    fn canonical(&self, code: u32) -> u32 {
        self.maps
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|&(i, _)| code >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap()
    }

    fn graph(&self, n: usize, code: u32) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    }
}

/// One representative of every isomorphism class of graphs on `n ≤ 7`
/// vertices, built by adding a vertex to each class on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let mut classes: Vec<u32> = vec![0];
    for k in 2..=n {
        let canon = Canon::new(k);
        let prev_pairs = pair_index(k - 1);
        let pairs = pair_index(k);
        let mut seen = std::collections::BTreeSet::new();
        for &code in &classes {
            for nbrs in 0u32..(1 << (k - 1)) {
                let mut new = 0u32;
                for (i, &(u, v)) in prev_pairs.iter().enumerate() {
                    if code >> i & 1 == 1 {
                        new |= 1 << pairs.iter().position(|&p| p == (u, v)).unwrap();
                    }
                }
                for w in 0..k - 1 {
                    if nbrs >> w & 1 == 1 {
                        new |= 1 << pairs.iter().position(|&p| p == (w, k - 1)).unwrap();
                    }
                }
                seen.insert(canon.canonical(new));
            }
        }
        classes = seen.into_iter().collect();
    }
    if n <= 1 {
        return vec![Graph::empty(n)];
    }
    let canon = Canon::new(n);
    classes.into_iter().map(|c| canon.graph(n, c)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pair_index(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn bfs_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Random connected graph on `n_range` vertices with at most `max_edges`
/// edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n_range: std::ops::RangeInclusive<usize>, max_edges: usize) -> Graph {
    loop {
        let n = rng.gen_range(n_range.clone());
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(rng, n, p);
        if g.m() > 0 && g.m() <= max_edges && bfs_connected(&g) {
            return g;
        }
    }
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_connected(g)
}

// ---------------------------------------------------------------------------
// Exhaustive clique partitions and packings.

/// All cliques with `2..=t` vertices, as vertex bitmasks, by brute force
/// over vertex subsets.
pub fn brute_cliques(g: &Graph, t: usize) -> Vec<u32> {
    let n = g.n();
    (1u32..1 << n)
        .filter(|s| {
            let k = s.count_ones() as usize;
            k >= 2
                && k <= t
                && (0..n).all(|u| {
                    s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v))
                })
        })
        .collect()
}

fn edge_mask(g: &Graph, clique: u32) -> u64 {
    let ids = edge_ids(g);
    let n = g.n();
    let mut mask = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if clique >> u & 1 == 1 && clique >> v & 1 == 1 {
                mask |= 1 << ids[u * n + v];
            }
        }
    }
    mask
}

fn edge_ids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut ids = vec![usize::MAX; n * n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                ids[u * n + v] = k;
                k += 1;
            }
        }
    }
    ids
}

/// Minimum number of cliques and minimum total size over all clique
/// partitions with cliques of at most `t` vertices, found by enumerating
/// every partition.
pub fn naive_cp_pi(g: &Graph, t: usize) -> (usize, usize) {
    assert!(g.m() <= 64);
    let cliques: Vec<(u64, usize)> = brute_cliques(g, t)
        .into_iter()
        .map(|c| (edge_mask(g, c), c.count_ones() as usize))
        .collect();
    let full: u64 = if g.m() == 64 { u64::MAX } else { (1 << g.m()) - 1 };
    let mut best = (usize::MAX, usize::MAX);
    fn go(cliques: &[(u64, usize)], full: u64, covered: u64, count: usize, size: usize, best: &mut (usize, usize)) {
        if covered == full {
            best.0 = best.0.min(count);
            best.1 = best.1.min(size);
            return;
        }
        let e = (!covered).trailing_zeros();
        for &(mask, k) in cliques {
            if mask >> e & 1 == 1 && mask & covered == 0 {
                go(cliques, full, covered | mask, count + 1, size + k, best);
            }
        }
    }
    go(&cliques, full, 0, 0, 0, &mut best);
    if g.m() == 0 {
        (0, 0)
    } else {
        best
    }
}

/// Maximum number of edge-disjoint `t`-cliques, by enumerating every
/// packing.
pub fn naive_kt(g: &Graph, t: usize) -> usize {
    let cliques: Vec<u64> = brute_cliques(g, t)
        .into_iter()
        .filter(|c| c.count_ones() as usize == t)
        .map(|c| edge_mask(g, c))
        .collect();
    fn go(cliques: &[u64], covered: u64, count: usize) -> usize {
        let mut best = count;
        for (i, &mask) in cliques.iter().enumerate() {
            if mask & covered == 0 {
                best = best.max(go(&cliques[i + 1..], covered | mask, count + 1));
            }
        }
        best
    }
    go(&cliques, 0, 0)
}

/// Clique number by brute force.
pub fn naive_omega(g: &Graph) -> usize {
    brute_cliques(g, g.n())
        .into_iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(usize::from(g.n() > 0))
}

/// Checks `B Bᵀ = A + D` and `Bᵀ B = A(Ω) + E` entrywise for a list of
/// cliques partitioning `g`.
pub fn gram_identities_hold(g: &Graph, cliques: &[Vec<usize>]) -> bool {
    let n = g.n();
    let v = cliques.len();
    let b = |u: usize, i: usize| i64::from(cliques[i].contains(&u));
    let q_degree = |u: usize| (0..v).map(|i| b(u, i)).sum::<i64>();
    for x in 0..n {
        for y in 0..n {
            let bbt: i64 = (0..v).map(|i| b(x, i) * b(y, i)).sum();
            let expected = if x == y { q_degree(x) } else { i64::from(g.has_edge(x, y)) };
            if bbt != expected {
                return false;
            }
        }
    }
    for i in 0..v {
        for j in 0..v {
            let btb: i64 = (0..n).map(|u| b(u, i) * b(u, j)).sum();
            let expected = if i == j {
                cliques[i].len() as i64
            } else {
                i64::from(cliques[i].iter().any(|u| cliques[j].contains(u)))
            };
            if btb != expected {
                return false;
            }
        }
    }
    true
}
