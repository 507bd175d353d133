//! Exhaustive companions of the closed-form bound: the fractional
//! transversal check and the exact largest code via maximum independent set.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::channel::{error_ball, error_sphere, ErrorKind};
use crate::error::Result;
use crate::guard::Guard;
use crate::words::Word;

/// Outcome of checking `sum_{v in B_t(x)} T(v) >= 1` for every `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransversalReport {
    pub feasible: bool,
    /// Words whose ball weight falls short of 1, with that weight.
    pub deficits: Vec<(Word, BigRational)>,
    /// Sum of the weights over every vertex, i.e. the implied bound.
    pub total_weight: BigRational,
}

/// Builds the tandem-deletion transversal (weight 1 on irreducible words,
/// `1 / |S_t(v)|` on the remaining words of length `n - t l`, 0 elsewhere)
/// and checks it against every ball of radius `t` around `Z_q^n`.
pub fn transversal_check(
    n: usize,
    l: usize,
    t: usize,
    q: u32,
    guard: Guard,
) -> Result<TransversalReport> {
    guard.check(n, q)?;
    let kind = ErrorKind::TandemDel(l);
    let floor = n.checked_sub(t * l);
    let mut weights: HashMap<Word, BigRational> = HashMap::new();
    for i in 0..=t {
        let Some(m) = n.checked_sub(i * l) else { break };
        let level: Vec<(Word, BigRational)> = Word::enumerate(m, q)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|v| {
                let size = error_sphere(&v, kind, t).len();
                let weight = if size == 0 {
                    BigRational::one()
                } else if Some(m) == floor {
                    BigRational::new(BigInt::one(), BigInt::from(size))
                } else {
                    BigRational::zero()
                };
                (v, weight)
            })
            .collect();
        weights.extend(level);
    }
    let total_weight = weights.values().fold(BigRational::zero(), |acc, w| acc + w);

    let mut deficits: Vec<(Word, BigRational)> = Word::enumerate(n, q)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|x| {
            let sum = error_ball(&x, kind, t)
                .iter()
                .fold(BigRational::zero(), |acc, v| acc + &weights[v]);
            (sum < BigRational::one()).then_some((x, sum))
        })
        .collect();
    deficits.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(TransversalReport {
        feasible: deficits.is_empty(),
        deficits,
        total_weight,
    })
}

/// A largest code in `Z_q^n` correcting `t` errors of `kind`, as the
/// lexicographically first maximum independent set found by the search.
/// Two words conflict when their radius-`t` balls intersect.
pub fn maximum_code(
    n: usize,
    kind: ErrorKind,
    t: usize,
    q: u32,
    guard: Guard,
) -> Result<Vec<Word>> {
    guard.check(n, q)?;
    let words: Vec<Word> = Word::enumerate(n, q).collect();
    let balls: Vec<Vec<Word>> = words
        .par_iter()
        .map(|x| error_ball(x, kind, t).into_iter().collect())
        .collect();

    let mut owners: HashMap<&Word, Vec<usize>> = HashMap::new();
    for (i, ball) in balls.iter().enumerate() {
        for v in ball {
            owners.entry(v).or_default().push(i);
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for group in owners.values() {
        for (k, &a) in group.iter().enumerate() {
            for &b in &group[k + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }

    let components = components(&adj);
    let chosen: Vec<Vec<usize>> = components
        .par_iter()
        .map(|comp| {
            let local = LocalGraph::new(comp, &adj);
            local.solve().into_iter().map(|k| comp[k]).collect()
        })
        .collect();
    let mut code: Vec<Word> = chosen
        .into_iter()
        .flatten()
        .map(|i| words[i].clone())
        .collect();
    code.sort();
    Ok(code)
}

/// `A(n, t)` for the given error kind.
pub fn exact_optimum(n: usize, kind: ErrorKind, t: usize, q: u32, guard: Guard) -> Result<usize> {
    Ok(maximum_code(n, kind, t, q, guard)?.len())
}

/// Connected components, each sorted ascending, ordered by smallest vertex.
fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            for &b in &adj[comp[k]] {
                if !seen[b] {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

type Bits = Vec<u64>;

fn bit_get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn bit_clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

fn bit_count_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn bit_iter(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// One component with vertices relabelled `0..size` in word order.
struct LocalGraph {
    size: usize,
    adj: Vec<Bits>,
}

impl LocalGraph {
    fn new(comp: &[usize], global: &[Vec<usize>]) -> Self {
        let size = comp.len();
        let blocks = size.div_ceil(64);
        let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let adj = comp
            .iter()
            .map(|&g| {
                let mut bits = vec![0u64; blocks];
                for b in &global[g] {
                    let k = local[b];
                    bits[k / 64] |= 1 << (k % 64);
                }
                bits
            })
            .collect();
        LocalGraph { size, adj }
    }

    fn full(&self) -> Bits {
        let mut bits = vec![u64::MAX; self.size.div_ceil(64)];
        if !self.size.is_multiple_of(64) {
            *bits.last_mut().unwrap() = (1u64 << (self.size % 64)) - 1;
        }
        bits
    }

    fn remove_closed_neighbourhood(&self, cand: &mut Bits, v: usize) {
        for (c, a) in cand.iter_mut().zip(&self.adj[v]) {
            *c &= !a;
        }
        bit_clear(cand, v);
    }

    fn greedy(&self) -> Vec<usize> {
        let mut cand = self.full();
        let mut chosen = Vec::new();
        loop {
            let pick = bit_iter(&cand).min_by_key(|&v| bit_count_and(&self.adj[v], &cand));
            let Some(v) = pick else { break };
            chosen.push(v);
            self.remove_closed_neighbourhood(&mut cand, v);
        }
        chosen
    }

    /// Number of cliques in a greedy clique cover of `cand`: an upper bound
    /// on any independent set inside it.
    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut joinable: Vec<Bits> = Vec::new();
        for v in bit_iter(cand) {
            match joinable.iter_mut().find(|c| bit_get(c, v)) {
                Some(c) => {
                    for (x, a) in c.iter_mut().zip(&self.adj[v]) {
                        *x &= a;
                    }
                }
                None => joinable.push(self.adj[v].clone()),
            }
        }
        joinable.len()
    }

    fn solve(&self) -> Vec<usize> {
        let mut best = self.greedy();
        let mut chosen = Vec::new();
        self.branch(self.full(), &mut chosen, &mut best);
        best.sort_unstable();
        best
    }

    fn branch(&self, mut cand: Bits, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
        let mark = chosen.len();
        // a vertex with at most one candidate neighbour is always safe to take
        loop {
            let pick = bit_iter(&cand).find(|&v| bit_count_and(&self.adj[v], &cand) <= 1);
            let Some(v) = pick else { break };
            chosen.push(v);
            self.remove_closed_neighbourhood(&mut cand, v);
        }
        if cand.iter().all(|&w| w == 0) {
            if chosen.len() > best.len() {
                *best = chosen.clone();
            }
        } else if chosen.len() + self.clique_cover(&cand) > best.len() {
            let v = bit_iter(&cand)
                .max_by_key(|&v| (bit_count_and(&self.adj[v], &cand), std::cmp::Reverse(v)))
                .expect("nonempty candidate set");
            let mut with = cand.clone();
            self.remove_closed_neighbourhood(&mut with, v);
            chosen.push(v);
            self.branch(with, chosen, best);
            chosen.pop();
            bit_clear(&mut cand, v);
            self.branch(cand, chosen, best);
        }
        chosen.truncate(mark);
    }
}
