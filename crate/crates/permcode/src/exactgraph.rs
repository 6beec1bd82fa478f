//! The distance graph on S_n, built explicitly for small n: two permutations
//! are adjacent when their Hamming distance is positive but below d, so a
//! permutation code with minimum distance d is exactly an independent set.
//!
//! Vertices are identified with lexicographic ranks, adjacency rows are flat
//! u64 bitsets, and construction translates a single distance ball around the
//! identity across the group (right-invariance of the metric) instead of
//! evaluating all pairwise distances.

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::CodeParameters;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on graph construction: S_7 (5040 vertices, ~3.2 MiB).
pub const DEFAULT_GRAPH_CAP: u32 = 7;

/// Absolute cap: S_8 (40320 vertices, ~203 MiB), behind an explicit opt-in.
pub const MAX_GRAPH_CAP: u32 = 8;

/// Exact independence search runs unconditionally up to this n.
pub const DEFAULT_ALPHA_CAP: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("permutation length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error(
        "n = {n} exceeds the graph cap of {cap}: the adjacency bitset for S_{n} \
         would need about {estimate_mib} MiB (n = 8 is available behind the explicit override)"
    )]
    GraphTooLarge { n: u32, cap: u32, estimate_mib: u64 },
    #[error(
        "exact independence number is capped at n <= {DEFAULT_ALPHA_CAP} \
         (n = 6 behind the long-run flag); got n = {n}"
    )]
    AlphaCapExceeded { n: u32 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("empty permutation")]
    Empty,
    #[error("image {value} at position {position} is out of range for n = {n}")]
    ImageOutOfRange { position: usize, value: u16, n: usize },
    #[error("image {value} appears more than once (positions {first} and {second})")]
    DuplicateImage { value: u16, first: usize, second: usize },
}

// ------------------------------------------------------------------------
// Permutations
// ------------------------------------------------------------------------

/// A permutation of {0, .., n-1}; position i maps to `images[i]`.
/// Stored 0-indexed, displayed 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Validates that `images` is a bijection on {0, .., n-1}.
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermutationError> {
        if images.is_empty() {
            return Err(PermutationError::Empty);
        }
        let n = images.len();
        let mut seen_at = vec![usize::MAX; n];
        for (position, &value) in images.iter().enumerate() {
            if value as usize >= n {
                return Err(PermutationError::ImageOutOfRange { position, value, n });
            }
            let prev = seen_at[value as usize];
            if prev != usize::MAX {
                return Err(PermutationError::DuplicateImage {
                    value,
                    first: prev,
                    second: position,
                });
            }
            seen_at[value as usize] = position;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// (self . inner)(i) = self(inner(i)): apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Self {
        debug_assert_eq!(self.n(), inner.n());
        Permutation {
            images: inner.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Number of non-fixed points; equals the Hamming distance from the
    /// identity.
    pub fn moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v as usize)
            .count()
    }

    /// Lexicographic rank in 0..n! (requires n <= 20 so the rank fits u64).
    pub fn lex_rank(&self) -> u64 {
        let n = self.n();
        assert!(n <= 20, "lexicographic rank overflows u64 beyond n = 20");
        let mut rank = 0u64;
        let mut suffix_factorial = 1u64;
        // Lehmer code, accumulated from the right.
        for i in (0..n).rev() {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count() as u64;
            rank += smaller_later * suffix_factorial;
            suffix_factorial *= (n - i) as u64;
        }
        rank
    }

    /// Inverse of [`lex_rank`].
    pub fn from_lex_rank(n: usize, rank: u64) -> Self {
        assert!(n >= 1 && n <= 20);
        let mut factorial = 1u64;
        for i in 2..=n as u64 {
            factorial *= i;
        }
        assert!(rank < factorial, "rank {rank} out of range for n = {n}");
        let mut remaining: Vec<u16> = (0..n as u16).collect();
        let mut images = Vec::with_capacity(n);
        let mut rank = rank;
        for i in 0..n {
            factorial /= (n - i) as u64;
            let index = (rank / factorial) as usize;
            rank %= factorial;
            images.push(remaining.remove(index));
        }
        Permutation { images }
    }

    /// Advances to the lexicographic successor in place; returns false (and
    /// leaves the permutation unchanged) when already at the maximum.
    pub fn lex_advance(&mut self) -> bool {
        let a = &mut self.images;
        if a.len() < 2 {
            return false;
        }
        let mut pivot = a.len() - 1;
        while pivot > 0 && a[pivot - 1] >= a[pivot] {
            pivot -= 1;
        }
        if pivot == 0 {
            return false;
        }
        let mut swap = a.len() - 1;
        while a[swap] <= a[pivot - 1] {
            swap -= 1;
        }
        a.swap(pivot - 1, swap);
        a[pivot..].reverse();
        true
    }
}

impl std::fmt::Display for Permutation {
    /// Space-separated 1-indexed images, matching the code file format.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Number of positions where the two permutations differ. Never 1 for
/// distinct permutations.
pub fn hamming_distance(a: &Permutation, b: &Permutation) -> Result<usize, GraphError> {
    if a.n() != b.n() {
        return Err(GraphError::LengthMismatch { left: a.n(), right: b.n() });
    }
    Ok(a.images
        .iter()
        .zip(&b.images)
        .filter(|(x, y)| x != y)
        .count())
}

// ------------------------------------------------------------------------
// Bitset rows
// ------------------------------------------------------------------------

mod bits {
    #[inline]
    pub fn set(row: &mut [u64], i: usize) {
        row[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn test(row: &[u64], i: usize) -> bool {
        row[i / 64] & (1u64 << (i % 64)) != 0
    }

    #[inline]
    pub fn clear(row: &mut [u64], i: usize) {
        row[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn count(row: &[u64]) -> u64 {
        row.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn count_and(a: &[u64], b: &[u64]) -> u64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x & y).count_ones() as u64)
            .sum()
    }

    pub fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| x & y).collect()
    }

    pub fn and_not_assign(a: &mut [u64], b: &[u64]) {
        for (x, y) in a.iter_mut().zip(b) {
            *x &= !y;
        }
    }

    pub fn is_empty(row: &[u64]) -> bool {
        row.iter().all(|&w| w == 0)
    }

    pub fn first(row: &[u64]) -> Option<usize> {
        for (w, &word) in row.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

// ------------------------------------------------------------------------
// The graph
// ------------------------------------------------------------------------

/// Explicit adjacency for the distance graph on S_n: vertex v is the
/// permutation of lexicographic rank v, and {u, v} is an edge iff
/// 1 <= d(perm_u, perm_v) <= d - 1.
#[derive(Debug, Clone)]
pub struct DistanceGraph {
    params: CodeParameters,
    vertex_count: usize,
    words_per_row: usize,
    adjacency: Vec<u64>,
}

impl DistanceGraph {
    pub fn params(&self) -> &CodeParameters {
        &self.params
    }

    pub fn n(&self) -> u32 {
        self.params.n()
    }

    pub fn d(&self) -> u32 {
        self.params.d()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn degree(&self, v: usize) -> u64 {
        bits::count(self.row(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    /// The permutation behind a vertex rank.
    pub fn permutation_of(&self, v: usize) -> Permutation {
        Permutation::from_lex_rank(self.n() as usize, v as u64)
    }
}

fn adjacency_estimate_mib(n: u32) -> u64 {
    let nf = (1..=n as u128).product::<u128>();
    let words = nf.div_ceil(64);
    ((nf * words * 8) >> 20) as u64
}

/// Builds the distance graph, refusing n beyond [`DEFAULT_GRAPH_CAP`].
pub fn build_graph(params: &CodeParameters) -> Result<DistanceGraph, GraphError> {
    build_graph_with_cap(params, DEFAULT_GRAPH_CAP)
}

/// Builds with an explicit cap override; caps above [`MAX_GRAPH_CAP`] clamp.
pub fn build_graph_with_cap(
    params: &CodeParameters,
    cap: u32,
) -> Result<DistanceGraph, GraphError> {
    let cap = cap.min(MAX_GRAPH_CAP);
    if params.n() > cap {
        return Err(GraphError::GraphTooLarge {
            n: params.n(),
            cap,
            estimate_mib: adjacency_estimate_mib(params.n()),
        });
    }
    Ok(build_rows(params, true))
}

/// Sequential twin of [`build_graph`]; bit-identical adjacency.
pub fn build_graph_sequential(params: &CodeParameters) -> Result<DistanceGraph, GraphError> {
    if params.n() > DEFAULT_GRAPH_CAP {
        return Err(GraphError::GraphTooLarge {
            n: params.n(),
            cap: DEFAULT_GRAPH_CAP,
            estimate_mib: adjacency_estimate_mib(params.n()),
        });
    }
    Ok(build_rows(params, false))
}

fn build_rows(params: &CodeParameters, parallel: bool) -> DistanceGraph {
    let n = params.n() as usize;
    let d = params.d() as usize;
    let vertex_count = (1..=n as u64).product::<u64>() as usize;
    let words_per_row = vertex_count.div_ceil(64);

    // The ball {beta : 1 <= d(id, beta) < d}; every adjacency row is this
    // ball translated by right multiplication.
    let mut ball = Vec::new();
    let mut p = Permutation::identity(n);
    loop {
        let moved = p.moved_points();
        if moved >= 1 && moved < d {
            ball.push(p.clone());
        }
        if !p.lex_advance() {
            break;
        }
    }

    let mut adjacency = vec![0u64; vertex_count * words_per_row];
    let fill = |(v, row): (usize, &mut [u64])| {
        let sigma = Permutation::from_lex_rank(n, v as u64);
        for beta in &ball {
            let tau = beta.compose(&sigma);
            bits::set(row, tau.lex_rank() as usize);
        }
    };

    #[cfg(feature = "parallel")]
    if parallel {
        adjacency
            .par_chunks_mut(words_per_row)
            .enumerate()
            .for_each(fill);
    } else {
        adjacency.chunks_mut(words_per_row).enumerate().for_each(fill);
    }

    #[cfg(not(feature = "parallel"))]
    {
        let _ = parallel;
        adjacency.chunks_mut(words_per_row).enumerate().for_each(fill);
    }

    DistanceGraph {
        params: *params,
        vertex_count,
        words_per_row,
        adjacency,
    }
}

// ------------------------------------------------------------------------
// Neighborhood statistics
// ------------------------------------------------------------------------

/// Exact per-vertex ground truth for the locally-sparse bounds: the common
/// degree, the edge count inside the identity's neighborhood, and the total
/// triangle count obtained from it by vertex transitivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodStats {
    pub degree: u64,
    /// Edges of the subgraph induced by the neighbors of the identity.
    pub neighborhood_edges: u64,
    /// Triangles in the whole graph: |V| * neighborhood_edges / 3, since
    /// each triangle is incident with exactly 3 vertices.
    pub triangles_total: u64,
}

pub fn neighborhood_stats(graph: &DistanceGraph) -> NeighborhoodStats {
    let identity_row = graph.row(0);
    let degree = bits::count(identity_row);
    let twice_edges: u64 = {
        let count_for = |u: usize| bits::count_and(graph.row(u), identity_row);
        #[cfg(feature = "parallel")]
        {
            bits::iter(identity_row)
                .collect::<Vec<_>>()
                .par_iter()
                .map(|&u| count_for(u))
                .sum()
        }
        #[cfg(not(feature = "parallel"))]
        {
            bits::iter(identity_row).map(count_for).sum()
        }
    };
    debug_assert_eq!(twice_edges % 2, 0);
    let neighborhood_edges = twice_edges / 2;
    let product = graph.vertex_count() as u128 * neighborhood_edges as u128;
    debug_assert_eq!(product % 3, 0, "3T = |V| E* must divide exactly");
    NeighborhoodStats {
        degree,
        neighborhood_edges,
        triangles_total: (product / 3).to_u64().expect("fits u64 for n <= 8"),
    }
}

/// Edge count of the subgraph induced by the neighborhood of an arbitrary
/// vertex, by direct scan. Cross-checks vertex transitivity.
pub fn neighborhood_edges_at(graph: &DistanceGraph, v: usize) -> u64 {
    let row = graph.row(v);
    let twice: u64 = bits::iter(row)
        .map(|u| bits::count_and(graph.row(u), row))
        .sum();
    twice / 2
}

// ------------------------------------------------------------------------
// Independence number
// ------------------------------------------------------------------------

/// Exact maximum independent set, as a maximum clique search on the
/// complement with greedy-coloring bounds and a greedy initial incumbent.
///
/// Capped at n <= 5 by default; n = 6 runs only with `allow_long_run`
/// (it can take a long time), larger n is refused outright.
pub fn exact_alpha(
    graph: &DistanceGraph,
    allow_long_run: bool,
) -> Result<(usize, Vec<Permutation>), GraphError> {
    let n = graph.n();
    if n > DEFAULT_ALPHA_CAP && !(n == 6 && allow_long_run) {
        return Err(GraphError::AlphaCapExceeded { n });
    }

    let count = graph.vertex_count();
    let words = graph.words_per_row;
    // Complement adjacency: distinct vertices at distance >= d.
    let mut complement = vec![0u64; count * words];
    for v in 0..count {
        let dst = &mut complement[v * words..(v + 1) * words];
        for (w, word) in dst.iter_mut().enumerate() {
            *word = !graph.adjacency[v * words + w];
        }
        // Mask tail bits beyond the vertex count, and the diagonal.
        let tail = count % 64;
        if tail != 0 {
            dst[words - 1] &= (1u64 << tail) - 1;
        }
        bits::clear(dst, v);
    }

    let mut search = CliqueSearch {
        rows: &complement,
        words,
        best: Vec::new(),
        current: Vec::new(),
    };

    // Greedy incumbent: lexicographic greedy clique in the complement.
    let mut full = vec![u64::MAX; words];
    let tail = count % 64;
    if tail != 0 {
        full[words - 1] = (1u64 << tail) - 1;
    }
    for v in 0..count {
        if search.best.iter().all(|&u| bits::test(search.row(u), v)) {
            search.best.push(v);
        }
    }

    search.expand(full);
    let mut witness_ranks = search.best;
    witness_ranks.sort_unstable();
    let witness = witness_ranks
        .iter()
        .map(|&v| graph.permutation_of(v))
        .collect::<Vec<_>>();
    Ok((witness_ranks.len(), witness))
}

struct CliqueSearch<'a> {
    rows: &'a [u64],
    words: usize,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Greedy sequential coloring of `candidates`; returns vertices grouped
    /// by color class with the class index as an upper bound on any clique
    /// inside the remaining prefix.
    fn color_sort(&self, candidates: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut uncolored = candidates.to_vec();
        let mut color = 0usize;
        while let Some(seed) = bits::first(&uncolored) {
            color += 1;
            let mut available = uncolored.clone();
            let mut v = seed;
            loop {
                bits::clear(&mut uncolored, v);
                bits::clear(&mut available, v);
                bits::and_not_assign(&mut available, self.row(v));
                order.push(v);
                bounds.push(color);
                match bits::first(&available) {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, mut candidates: Vec<u64>) {
        let (order, bounds) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            let next = bits::and(&candidates, self.row(v));
            self.current.push(v);
            if bits::is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            bits::clear(&mut candidates, v);
        }
    }
}

/// Search strategies for [`heuristic_alpha`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeuristicStrategy {
    /// Vertices in lexicographic rank order.
    GreedyLex,
    /// Vertices in a seeded shuffled order.
    RandomGreedy,
    /// Best of k seeded runs (seeds `seed`, `seed+1`, ..).
    BestOfK,
}

/// Greedy independent sets; deterministic given (strategy, seed, k).
pub fn heuristic_alpha(
    graph: &DistanceGraph,
    strategy: HeuristicStrategy,
    seed: u64,
    k: u32,
) -> (usize, Vec<Permutation>) {
    let ranks = match strategy {
        HeuristicStrategy::GreedyLex => greedy_in_order(graph, None),
        HeuristicStrategy::RandomGreedy => greedy_in_order(graph, Some(seed)),
        HeuristicStrategy::BestOfK => {
            let mut best: Option<Vec<usize>> = None;
            for i in 0..k.max(1) as u64 {
                let run = greedy_in_order(graph, Some(seed.wrapping_add(i)));
                if best.as_ref().is_none_or(|b| run.len() > b.len()) {
                    best = Some(run);
                }
            }
            best.expect("k >= 1")
        }
    };
    let mut ranks = ranks;
    ranks.sort_unstable();
    let witness = ranks
        .iter()
        .map(|&v| graph.permutation_of(v))
        .collect::<Vec<_>>();
    (ranks.len(), witness)
}

fn greedy_in_order(graph: &DistanceGraph, shuffle_seed: Option<u64>) -> Vec<usize> {
    let count = graph.vertex_count();
    let mut order: Vec<usize> = (0..count).collect();
    if let Some(seed) = shuffle_seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    let mut chosen_mask = vec![0u64; graph.words_per_row];
    let mut chosen = Vec::new();
    for v in order {
        if bits::count_and(graph.row(v), &chosen_mask) == 0 {
            bits::set(&mut chosen_mask, v);
            chosen.push(v);
        }
    }
    chosen
}

// ------------------------------------------------------------------------
