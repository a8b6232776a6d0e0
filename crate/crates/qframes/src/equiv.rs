//! Projective invariants and equivalence of quaternionic frames.
//!
//! Two frames `(v_j)` and `(w_j)` are projectively unitarily equivalent when
//! `w_j = (U v_j) alpha_j` for a unitary `U` and unit scalars `alpha_j`.
//! The tools here decide that relation as far as possible:
//!
//! * [`m_product`] / [`reduced_m_product`] — cyclic products of inner
//!   products whose reduction `(Re, | |)` is a projective invariant,
//! * [`frame_graph`] / [`cycle_basis`] — the support graph of the Gramian
//!   and a fundamental system of cycles for it,
//! * [`necessary_projective_equivalent`] — the invariant screen,
//! * [`symmetry_candidates`] — permutations preserving all short-cycle
//!   invariants,
//! * [`recover_phase`] / [`recover_unitary`] — reconstruction of the unit
//!   scalars and the unitary, yielding a checkable [`SymmetryCertificate`],
//! * [`projective_symmetry_group`] — the certified symmetry group of a
//!   frame together with the matrix group generated by its unitary lifts,
//! * [`equivalence_verdict`] — a three-way verdict: certified equivalent,
//!   provably inequivalent, or undetermined.

use crate::error::{Error, Result};
use crate::frames::Frame;
use crate::groupframes::{group_closure, MatrixGroup};
use crate::qlinalg::{inner_product, inner_product_slices, QMatrix};
use crate::quat::Quat;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};

/// Longest cycle length inspected by the exhaustive invariant checks.
///
/// Distinct-index cycles of length up to six already separate every case the
/// shorter invariants cannot (the six equiangular lines in dimension two
/// need their five-cycles), while keeping enumeration tractable.
pub const MAX_CYCLE_LEN: usize = 6;

/// Default cap on backtracking nodes for the symmetry search.
pub const DEFAULT_SEARCH_CAP: usize = 2_000_000;

/// Support graph of a frame: vertices are frame vectors, and `j < k` are
/// adjacent when the inner product of vectors `j` and `k` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameGraph {
    /// Number of frame vectors.
    pub vertex_count: usize,
    /// Edges `(j, k)` with `j < k`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
}

/// An m-product of frame vectors along a cycle of indices, together with its
/// projectively invariant reduction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MProduct {
    /// The index cycle `(j_1, ..., j_m)`.
    pub cycle: Vec<usize>,
    /// `<v_{j_2}, v_{j_1}> <v_{j_3}, v_{j_2}> ... <v_{j_1}, v_{j_m}>`.
    pub value: Quat,
    /// `(Re value, |value|)` — invariant under cyclic rotation and reversal
    /// of the cycle and under projective unitary transformations.
    pub reduced: (f64, f64),
}

/// A verified projective symmetry: `v_{sigma j} = (U v_j) alpha_j` for all
/// `j`, up to the recorded defect.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryCertificate {
    /// The permutation, as the image list `sigma[j]`.
    pub sigma: Vec<usize>,
    /// Unit scalars `alpha_j`, one per frame vector.
    pub alphas: Vec<Quat>,
    /// The unitary `U`.
    pub unitary: QMatrix,
    /// Largest violation over the unitarity check and the per-vector
    /// residuals `|(U v_j) alpha_j - v_{sigma j}|`.
    pub defect: f64,
}

/// Certified projective symmetry group of a frame.
#[derive(Clone, Debug)]
pub struct SymmetryGroupReport {
    /// Certified permutations, lexicographically sorted.
    pub permutations: Vec<Vec<usize>>,
    /// One certificate per certified permutation, in the same order.
    pub certificates: Vec<SymmetryCertificate>,
    /// Candidate permutations that passed all invariant checks but could not
    /// be certified by a unitary lift.
    pub uncertified: Vec<Vec<usize>>,
    /// The matrix group generated by the certified unitaries.
    pub unitary_group: MatrixGroup,
    /// Largest certificate defect.
    pub max_defect: f64,
}

/// Outcome of an equivalence test between two frames.
#[derive(Clone, Debug)]
pub enum EquivalenceVerdict {
    /// A projective invariant differs: the frames cannot be equivalent.
    Inequivalent,
    /// An explicit `(U, alpha)` pair maps one frame onto the other.
    CertifiedEquivalent(Box<SymmetryCertificate>),
    /// All computed invariants agree but no certificate was found.
    Undetermined,
}

/// The m-product of frame vectors along `cycle`, multiplied left to right:
/// `<v_{j_2}, v_{j_1}> <v_{j_3}, v_{j_2}> ... <v_{j_1}, v_{j_m}>`.
///
/// Indices may repeat; the cycle must be nonempty and in range.
pub fn m_product(f: &Frame, cycle: &[usize]) -> Result<MProduct> {
    if cycle.is_empty() {
        return Err(Error::InvalidArgument(
            "m-product needs a nonempty index cycle".into(),
        ));
    }
    for &j in cycle {
        if j >= f.len() {
            return Err(Error::InvalidArgument(format!(
                "cycle index {j} out of range for a frame of {} vectors",
                f.len()
            )));
        }
    }
    let mut value = Quat::ONE;
    for t in 0..cycle.len() {
        let j = cycle[t];
        let k = cycle[(t + 1) % cycle.len()];
        value = value * f.inner(k, j);
    }
    Ok(MProduct {
        cycle: cycle.to_vec(),
        value,
        reduced: (value.re(), value.abs()),
    })
}

/// The reduction `(Re, | |)` of the m-product along `cycle`.
pub fn reduced_m_product(f: &Frame, cycle: &[usize]) -> Result<(f64, f64)> {
    Ok(m_product(f, cycle)?.reduced)
}

/// The support graph of the frame's Gramian, with edges wherever
/// `|<v_j, v_k>|` reaches the frame tolerance.
pub fn frame_graph(f: &Frame) -> FrameGraph {
    let eps = f.tol().eps();
    let n = f.len();
    let mut edges = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            if f.inner(j, k).abs() >= eps {
                edges.push((j, k));
            }
        }
    }
    FrameGraph {
        vertex_count: n,
        edges,
    }
}

/// Fundamental cycles of a breadth-first spanning forest of the graph.
///
/// Each non-tree edge contributes one cycle, listed as a sequence of
/// distinct vertices (the closing edge is implicit); the count is
/// `|E| - |V| + #components`.
pub fn cycle_basis(g: &FrameGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree = HashSet::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    tree.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for &(a, b) in &g.edges {
        if tree.contains(&(a, b)) {
            continue;
        }
        let (mut u, mut v) = (a, b);
        let mut left = vec![u];
        let mut right = vec![v];
        while depth[u] > depth[v] {
            u = parent[u];
            left.push(u);
        }
        while depth[v] > depth[u] {
            v = parent[v];
            right.push(v);
        }
        while u != v {
            u = parent[u];
            left.push(u);
            v = parent[v];
            right.push(v);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        cycles.push(left);
    }
    cycles
}

/// Whether a permutation (as an image list) is even.
pub fn permutation_is_even(sigma: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut transpositions = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut t = start;
        while !seen[t] {
            seen[t] = true;
            t = sigma[t];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn validate_permutation(n: usize, sigma: &[usize]) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {} but the frame has {} vectors",
            sigma.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::InvalidArgument(
                "image list is not a permutation".into(),
            ));
        }
        seen[s] = true;
    }
    Ok(())
}

/// Cached projective invariants of a frame.
struct Invariants {
    n: usize,
    eps: f64,
    gram: QMatrix,
    norms: Vec<f64>,
    /// `|<v_k, v_j>|^2`, symmetric.
    pair: Vec<Vec<f64>>,
    /// `|<v_k, v_j>|`, symmetric; edges of the frame graph are entries
    /// at or above `eps`.
    pair_abs: Vec<Vec<f64>>,
    /// Reduced 3-products keyed by sorted index triples.
    triple: HashMap<(usize, usize, usize), (f64, f64)>,
}

impl Invariants {
    fn new(f: &Frame) -> Invariants {
        let n = f.len();
        let gram = f.gramian();
        let norms: Vec<f64> = (0..n).map(|j| gram[(j, j)].re()).collect();
        let mut pair = vec![vec![0.0f64; n]; n];
        let mut pair_abs = vec![vec![0.0f64; n]; n];
        for j in 0..n {
            for k in 0..n {
                pair[j][k] = gram[(j, k)].abs_sq();
                pair_abs[j][k] = gram[(j, k)].abs();
            }
        }
        let mut triple = HashMap::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let v = cycle_value(&gram, &[a, b, c]);
                    triple.insert((a, b, c), (v.re(), v.abs()));
                }
            }
        }
        Invariants {
            n,
            eps: f.tol().eps(),
            gram,
            norms,
            pair,
            pair_abs,
            triple,
        }
    }

    fn value(&self, cycle: &[usize]) -> Quat {
        cycle_value(&self.gram, cycle)
    }

    fn reduced(&self, cycle: &[usize]) -> (f64, f64) {
        let v = self.value(cycle);
        (v.re(), v.abs())
    }

    fn triple_of(&self, a: usize, b: usize, c: usize) -> (f64, f64) {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.triple[&(key[0], key[1], key[2])]
    }

    /// Whether every consecutive pair of the cycle is an edge of the
    /// support graph (cycles through a zero inner product vanish on both
    /// sides of any comparison once pair invariants agree).
    fn cycle_in_graph(&self, cycle: &[usize]) -> bool {
        let m = cycle.len();
        (0..m).all(|t| self.pair_abs[cycle[t]][cycle[(t + 1) % m]] >= self.eps)
    }
}

/// Product of Gramian entries along a cycle, left to right.
fn cycle_value(gram: &QMatrix, cycle: &[usize]) -> Quat {
    let m = cycle.len();
    let mut v = Quat::ONE;
    for t in 0..m {
        v = v * gram[(cycle[t], cycle[(t + 1) % m])];
    }
    v
}

/// All cycles of `m` distinct indices drawn from `0..n`, one representative
/// per rotation/reversal class: the smallest index comes first and, for
/// cycles of length at least three, the second entry is smaller than the
/// last. Since reduced m-products are invariant under rotation and
/// reversal, these representatives enumerate every distinct-index reduced
/// value exactly once.
pub fn canonical_cycles(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 || m > n {
        return out;
    }
    let mut combo = Vec::with_capacity(m);
    fn combos(n: usize, m: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if combo.len() == m {
            push_cycles_for_combo(combo, out);
            return;
        }
        for v in start..n {
            combo.push(v);
            combos(n, m, v + 1, combo, out);
            combo.pop();
        }
    }
    combos(n, m, 0, &mut combo, &mut out);
    out
}

fn push_cycles_for_combo(combo: &[usize], out: &mut Vec<Vec<usize>>) {
    let m = combo.len();
    if m <= 2 {
        out.push(combo.to_vec());
        return;
    }
    let head = combo[0];
    let rest = &combo[1..];
    fn rec(
        rest: &[usize],
        used: &mut [bool],
        perm: &mut Vec<usize>,
        head: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if perm.len() == rest.len() {
            if perm[0] < perm[perm.len() - 1] {
                let mut cycle = Vec::with_capacity(rest.len() + 1);
                cycle.push(head);
                cycle.extend_from_slice(perm);
                out.push(cycle);
            }
            return;
        }
        for i in 0..rest.len() {
            if !used[i] {
                used[i] = true;
                perm.push(rest[i]);
                rec(rest, used, perm, head, out);
                perm.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; rest.len()];
    let mut perm = Vec::with_capacity(rest.len());
    rec(rest, &mut used, &mut perm, head, out);
}

/// Necessary conditions for projective unitary equivalence: equal support
/// graphs, matching vector norms and pairwise products, and matching reduced
/// m-products along a fundamental cycle system of the support graph.
///
/// A `false` is conclusive; a `true` is only a screen (invariants beyond the
/// basis cycles may still differ).
pub fn necessary_projective_equivalent(f: &Frame, g: &Frame) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot compare frames with {} and {} vectors",
            f.len(),
            g.len()
        )));
    }
    let eps = f.tol().eps().max(g.tol().eps());
    let graph_f = frame_graph(f);
    let graph_g = frame_graph(g);
    if graph_f != graph_g {
        return Ok(false);
    }
    let inv_f = Invariants::new(f);
    let inv_g = Invariants::new(g);
    let n = f.len();
    for j in 0..n {
        if (inv_f.norms[j] - inv_g.norms[j]).abs() > eps {
            return Ok(false);
        }
    }
    for j in 0..n {
        for k in (j + 1)..n {
            if (inv_f.pair[j][k] - inv_g.pair[j][k]).abs() > eps {
                return Ok(false);
            }
        }
    }
    for cycle in cycle_basis(&graph_f) {
        let (ra, aa) = inv_f.reduced(&cycle);
        let (rb, ab) = inv_g.reduced(&cycle);
        if (ra - rb).abs() > eps || (aa - ab).abs() > eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the reduced m-products of all short distinct-index cycles agree
/// between `inv_f` at `cycle` and `inv_g` at the mapped cycle, for
/// `min_len <= m <= MAX_CYCLE_LEN` (only cycles supported by the graph).
fn short_cycles_match(
    inv_f: &Invariants,
    inv_g: &Invariants,
    map: &[usize],
    cycles: &[Vec<usize>],
    eps: f64,
) -> bool {
    let mut image = Vec::new();
    for cycle in cycles {
        if !inv_f.cycle_in_graph(cycle) {
            continue;
        }
        image.clear();
        image.extend(cycle.iter().map(|&j| map[j]));
        let (ra, aa) = inv_f.reduced(cycle);
        let (rb, ab) = inv_g.reduced(&image);
        if (ra - rb).abs() > eps || (aa - ab).abs() > eps {
            return false;
        }
    }
    true
}

fn search_order(inv: &Invariants) -> Vec<usize> {
    // Cluster reduced 3-product values into classes at tolerance eps.
    let mut values: Vec<(f64, f64)> = inv.triple.values().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut classes: Vec<(f64, f64)> = Vec::new();
    for v in values {
        let is_new = classes
            .last()
            .map_or(true, |c| (c.0 - v.0).abs() > inv.eps || (c.1 - v.1).abs() > inv.eps);
        if is_new {
            classes.push(v);
        }
    }
    let class_of = |v: (f64, f64)| -> usize {
        classes
            .iter()
            .position(|c| (c.0 - v.0).abs() <= inv.eps && (c.1 - v.1).abs() <= inv.eps)
            .unwrap_or(classes.len())
    };
    let mut score = vec![HashSet::new(); inv.n];
    for (&(a, b, c), &v) in &inv.triple {
        let id = class_of(v);
        score[a].insert(id);
        score[b].insert(id);
        score[c].insert(id);
    }
    let mut order: Vec<usize> = (0..inv.n).collect();
    order.sort_by_key(|&v| (usize::MAX - score[v].len(), v));
    order
}

/// Permutations `sigma` under which every reduced m-product of distinct
/// indices with `m <= MAX_CYCLE_LEN` is preserved, found by backtracking
/// over images with pruning by norms, pairwise products, and 3-products.
///
/// The search visits at most `cap` nodes before giving up. The result is
/// sorted lexicographically; for an orthonormal basis every permutation
/// qualifies, so expect `n!` entries there.
pub fn symmetry_candidates(f: &Frame, cap: usize) -> Result<Vec<Vec<usize>>> {
    let inv = Invariants::new(f);
    let n = inv.n;
    let order = search_order(&inv);
    let mut final_cycles = Vec::new();
    for m in 4..=n.min(MAX_CYCLE_LEN) {
        final_cycles.extend(
            canonical_cycles(n, m)
                .into_iter()
                .filter(|c| inv.cycle_in_graph(c)),
        );
    }
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut nodes = 0usize;
    let mut found = Vec::new();

    fn backtrack(
        inv: &Invariants,
        order: &[usize],
        depth: usize,
        final_cycles: &[Vec<usize>],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        nodes: &mut usize,
        cap: usize,
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let n = order.len();
        let eps = inv.eps;
        if depth == n {
            if short_cycles_match(inv, inv, assign, final_cycles, eps) {
                found.push(assign.clone());
            }
            return Ok(());
        }
        let v = order[depth];
        'cand: for w in 0..n {
            if used[w] || (inv.norms[v] - inv.norms[w]).abs() > eps {
                continue;
            }
            for &u in &order[..depth] {
                let x = assign[u];
                if (inv.pair[v][u] - inv.pair[w][x]).abs() > eps {
                    continue 'cand;
                }
            }
            for i in 0..depth {
                for t in (i + 1)..depth {
                    let (u, up) = (order[i], order[t]);
                    let a = inv.triple_of(v, u, up);
                    let b = inv.triple_of(w, assign[u], assign[up]);
                    if (a.0 - b.0).abs() > eps || (a.1 - b.1).abs() > eps {
                        continue 'cand;
                    }
                }
            }
            *nodes += 1;
            if *nodes > cap {
                return Err(Error::SearchCapExceeded { cap });
            }
            assign[v] = w;
            used[w] = true;
            backtrack(
                inv,
                order,
                depth + 1,
                final_cycles,
                assign,
                used,
                nodes,
                cap,
                found,
            )?;
            used[w] = false;
            assign[v] = usize::MAX;
        }
        Ok(())
    }

    backtrack(
        &inv,
        &order,
        0,
        &final_cycles,
        &mut assign,
        &mut used,
        &mut nodes,
        cap,
        &mut found,
    )?;
    found.sort();
    Ok(found)
}

// ---------------------------------------------------------------------------
// Phase recovery
// ---------------------------------------------------------------------------

fn mat4_vec(m: &[[f64; 4]; 4], x: &[f64; 4]) -> [f64; 4] {
    let mut y = [0.0f64; 4];
    for r in 0..4 {
        for c in 0..4 {
            y[r] += m[r][c] * x[c];
        }
    }
    y
}

fn vec4_norm(x: &[f64; 4]) -> f64 {
    x.iter().map(|t| t * t).sum::<f64>().sqrt()
}

fn vec4_dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(s, t)| s * t).sum()
}

fn rayleigh(m: &[[f64; 4]; 4], x: &[f64; 4]) -> f64 {
    vec4_dot(&mat4_vec(m, x), x)
}

/// Accumulates the normal matrix of the linear system
/// `alpha * img - orig * alpha = 0` over the given triples; each block is
/// `R(img) - L(orig)` acting on the real coordinates of `alpha`.
///
/// Returns the 4x4 normal matrix and the number of informative triples
/// (those with at least one of the two products nonzero).
fn phase_normal_matrix(
    inv_f: &Invariants,
    inv_g: &Invariants,
    sigma: &[usize],
    j: usize,
    triples: &[(usize, usize, usize)],
    eps: f64,
) -> Result<([[f64; 4]; 4], usize)> {
    let mut m = [[0.0f64; 4]; 4];
    let mut count = 0usize;
    for &(a, b, c) in triples {
        if a != j {
            return Err(Error::InvalidArgument(
                "every triple must start at the index whose scalar is sought".into(),
            ));
        }
        if a == b || a == c || b == c {
            return Err(Error::InvalidArgument(
                "triple indices must be distinct".into(),
            ));
        }
        if b >= inv_f.n || c >= inv_f.n {
            return Err(Error::InvalidArgument(
                "triple index out of range".into(),
            ));
        }
        let orig = inv_f.value(&[a, b, c]);
        let img = inv_g.value(&[sigma[a], sigma[b], sigma[c]]);
        if orig.abs() < eps && img.abs() < eps {
            continue;
        }
        let left = orig.left_mult_matrix();
        let right = img.right_mult_matrix();
        let mut block = [[0.0f64; 4]; 4];
        for r in 0..4 {
            for s in 0..4 {
                block[r][s] = right[r][s] - left[r][s];
            }
        }
        // m += block^T block
        for r in 0..4 {
            for s in 0..4 {
                let mut acc = 0.0;
                for t in 0..4 {
                    acc += block[t][r] * block[t][s];
                }
                m[r][s] += acc;
            }
        }
        count += 1;
    }
    Ok((m, count))
}

/// Power iteration on `cI - M` (optionally deflated against a known
/// direction) from each coordinate start; returns the direction with the
/// smallest Rayleigh quotient for `M`.
fn complement_power_iteration(
    m: &[[f64; 4]; 4],
    c: f64,
    deflate: Option<&[f64; 4]>,
) -> [f64; 4] {
    let orth = |x: &mut [f64; 4], d: &[f64; 4]| {
        let p = vec4_dot(x, d);
        for t in 0..4 {
            x[t] -= p * d[t];
        }
    };
    let mut best: Option<(f64, [f64; 4])> = None;
    for start in 0..4 {
        let mut x = [0.0f64; 4];
        x[start] = 1.0;
        if let Some(d) = deflate {
            orth(&mut x, d);
        }
        let nn = vec4_norm(&x);
        if nn < 1e-6 {
            continue;
        }
        for t in 0..4 {
            x[t] /= nn;
        }
        for _ in 0..600 {
            let mv = mat4_vec(m, &x);
            let mut y = [0.0f64; 4];
            for t in 0..4 {
                y[t] = c * x[t] - mv[t];
            }
            if let Some(d) = deflate {
                orth(&mut y, d);
            }
            let ny = vec4_norm(&y);
            if ny < 1e-300 {
                break;
            }
            for t in 0..4 {
                x[t] = y[t] / ny;
            }
        }
        let r = rayleigh(m, &x);
        if best.as_ref().map_or(true, |(br, _)| r < *br) {
            best = Some((r, x));
        }
    }
    best.expect("at least one admissible start").1
}

/// Two smallest eigenpairs of a symmetric positive semidefinite 4x4 matrix.
fn smallest_two_eigenpairs(m: &[[f64; 4]; 4]) -> ((f64, [f64; 4]), (f64, [f64; 4])) {
    let trace = m[0][0] + m[1][1] + m[2][2] + m[3][3];
    let c = trace + 1.0;
    let x1 = complement_power_iteration(m, c, None);
    let l1 = rayleigh(m, &x1);
    let x2 = complement_power_iteration(m, c, Some(&x1));
    let l2 = rayleigh(m, &x2);
    ((l1, x1), (l2, x2))
}

fn canonical_sign(q: Quat) -> Quat {
    let coords = q.coords();
    let mut lead = 0usize;
    for t in 1..4 {
        if coords[t].abs() > coords[lead].abs() {
            lead = t;
        }
    }
    if coords[lead] < 0.0 {
        -q
    } else {
        q
    }
}

fn phase_from_system(
    inv_f: &Invariants,
    inv_g: &Invariants,
    sigma: &[usize],
    j: usize,
    triples: &[(usize, usize, usize)],
    eps: f64,
) -> Result<Quat> {
    let (m, count) = phase_normal_matrix(inv_f, inv_g, sigma, j, triples, eps)?;
    if count == 0 {
        return Err(Error::PhaseUnderdetermined);
    }
    let ((l1, x1), (l2, _)) = smallest_two_eigenpairs(&m);
    let scale = 1.0 + m[0][0] + m[1][1] + m[2][2] + m[3][3];
    if l1 > 1e-10 * scale {
        return Err(Error::PhaseInconsistent {
            residual: l1.max(0.0).sqrt(),
        });
    }
    if l2 < 1e-10 * scale {
        return Err(Error::PhaseUnderdetermined);
    }
    let alpha = Quat::from_coords(x1)
        .normalized()
        .ok_or(Error::PhaseUnderdetermined)?;
    Ok(canonical_sign(alpha))
}

/// Recovers the unit scalar `alpha_j` of a candidate symmetry `sigma` from
/// 3-product constraints `alpha_j D(v_{sigma j}, v_{sigma k}, v_{sigma l}) =
/// D(v_j, v_k, v_l) alpha_j` over the given triples `(j, k, l)`.
///
/// The scalar is determined up to sign exactly when the informative
/// 3-products span a genuinely quaternionic set; the sign returned is
/// canonical (leading coordinate positive). With no informative triples, or
/// a null space of dimension two or more, the recovery is
/// [`Error::PhaseUnderdetermined`]; if the constraints admit no unit
/// solution it is [`Error::PhaseInconsistent`].
pub fn recover_phase(
    f: &Frame,
    sigma: &[usize],
    j: usize,
    triples: &[(usize, usize, usize)],
) -> Result<Quat> {
    validate_permutation(f.len(), sigma)?;
    if j >= f.len() {
        return Err(Error::InvalidArgument(format!(
            "index {j} out of range for a frame of {} vectors",
            f.len()
        )));
    }
    let inv = Invariants::new(f);
    phase_from_system(&inv, &inv, sigma, j, triples, f.tol().eps())
}

/// Candidate unit scalars for `alpha_j` when certifying a map: the trivial
/// scalar first, then the null directions of the 3-product system (two when
/// the system is degenerate, as for complex frames).
fn phase_candidates(
    inv_f: &Invariants,
    inv_g: &Invariants,
    sigma: &[usize],
    j: usize,
    triples: &[(usize, usize, usize)],
    eps: f64,
) -> Vec<Quat> {
    let mut candidates = vec![Quat::ONE];
    if let Ok((m, count)) = phase_normal_matrix(inv_f, inv_g, sigma, j, triples, eps) {
        if count > 0 {
            let ((l1, x1), (l2, x2)) = smallest_two_eigenpairs(&m);
            let scale = 1.0 + m[0][0] + m[1][1] + m[2][2] + m[3][3];
            if l1 <= 1e-8 * scale {
                if let Some(a) = Quat::from_coords(x1).normalized() {
                    candidates.push(canonical_sign(a));
                }
            }
            if l2 <= 1e-8 * scale {
                if let Some(a) = Quat::from_coords(x2).normalized() {
                    candidates.push(canonical_sign(a));
                }
            }
        }
    }
    candidates.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    candidates
}

// ---------------------------------------------------------------------------
// Unitary recovery
// ---------------------------------------------------------------------------

/// Indices of a maximal set of linearly independent frame vectors, found by
/// greedy orthogonalisation in column order.
fn independent_columns(f: &Frame) -> Result<Vec<usize>> {
    let d = f.dim();
    let mut ortho: Vec<Vec<Quat>> = Vec::new();
    let mut idx = Vec::new();
    for j in 0..f.len() {
        if idx.len() == d {
            break;
        }
        let mut v = f.synthesis().col_vec(j);
        for o in &ortho {
            let coeff = inner_product_slices(&v, o);
            for (ve, oe) in v.iter_mut().zip(o) {
                *ve -= *oe * coeff;
            }
        }
        let norm = v.iter().map(|q| q.abs_sq()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            let s = norm.recip();
            ortho.push(v.iter().map(|&q| q * s).collect());
            idx.push(j);
        }
    }
    if idx.len() < d {
        return Err(Error::InvalidArgument(
            "frame vectors do not span the space".into(),
        ));
    }
    Ok(idx)
}

fn column_residual(u_col: &QMatrix, alpha: Quat, target: &QMatrix) -> f64 {
    let mut acc = 0.0f64;
    for r in 0..u_col.rows() {
        let diff = u_col[(r, 0)] * alpha - target[(r, 0)];
        acc += diff.abs_sq();
    }
    acc.sqrt()
}

/// Core of the unitary recovery, mapping columns of `f` onto columns of `g`
/// permuted by `sigma`: tries all `2^d` sign patterns on the basis scalars,
/// forms `U = [w_{sigma j}] [v_j alpha_j]^{-1}`, checks unitarity, fits the
/// best unit scalar for every vector, and returns the certificate with the
/// smallest defect.
fn lift_unitary(
    f: &Frame,
    g: &Frame,
    sigma: &[usize],
    basis: &[usize],
    alphas: &[Quat],
) -> Result<SymmetryCertificate> {
    let d = f.dim();
    let n = f.len();
    if g.dim() != d || g.len() != n {
        return Err(Error::InvalidArgument(
            "frames must share dimension and vector count".into(),
        ));
    }
    if basis.len() != d || alphas.len() != d {
        return Err(Error::InvalidArgument(format!(
            "need exactly {d} basis indices and scalars"
        )));
    }
    for &b in basis {
        if b >= n {
            return Err(Error::InvalidArgument(format!(
                "basis index {b} out of range"
            )));
        }
    }
    let tol = f.tol();
    let accept = tol.eps();
    let mut best: Option<SymmetryCertificate> = None;
    for mask in 0..(1usize << d) {
        let scaled = QMatrix::from_fn(d, d, |r, t| {
            let sign = if (mask >> t) & 1 == 1 { -1.0 } else { 1.0 };
            f.synthesis()[(r, basis[t])] * (alphas[t] * sign)
        });
        let inverse = match scaled.solve_inverse(tol) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let images = QMatrix::from_fn(d, d, |r, t| g.synthesis()[(r, sigma[basis[t]])]);
        let unitary = images.mul(&inverse);
        let mut defect = unitary.unitary_defect();
        if defect > accept {
            continue;
        }
        let mapped = unitary.mul(f.synthesis());
        let mut fitted = Vec::with_capacity(n);
        let mut ok = true;
        for t in 0..n {
            let u_col = mapped.col(t);
            let target = g.col(sigma[t]);
            let alpha = match inner_product(&target, &u_col).normalized() {
                Some(a) => a,
                None => {
                    ok = false;
                    break;
                }
            };
            let resid = column_residual(&u_col, alpha, &target);
            defect = defect.max(resid);
            if resid > accept {
                ok = false;
                break;
            }
            fitted.push(alpha);
        }
        if !ok {
            continue;
        }
        let cert = SymmetryCertificate {
            sigma: sigma.to_vec(),
            alphas: fitted,
            unitary,
            defect,
        };
        if best.as_ref().map_or(true, |b| cert.defect < b.defect) {
            best = Some(cert);
        }
    }
    best.ok_or(Error::NoUnitaryLift)
}

/// Builds the unitary of a candidate symmetry from recovered basis scalars:
/// `U = [v_{sigma j}] [v_j alpha_j]^{-1}` over the given basis indices,
/// trying both signs of every scalar, and certifies it against the whole
/// frame.
///
/// `alphas` supplies one unit scalar per basis index (signs free). The
/// certificate records fitted scalars for all vectors and the worst
/// residual; if no sign pattern yields a unitary that carries every vector
/// onto its image line, the result is [`Error::NoUnitaryLift`].
pub fn recover_unitary(
    f: &Frame,
    sigma: &[usize],
    basis_indices: &[usize],
    alphas: &[Quat],
) -> Result<SymmetryCertificate> {
    validate_permutation(f.len(), sigma)?;
    lift_unitary(f, f, sigma, basis_indices, alphas)
}

/// Full certification pipeline for a map from `f` onto `g` along `sigma`:
/// recovers the scalar of the first basis vector from 3-products, derives
/// the remaining basis scalars through the pairwise Gramian congruence, and
/// lifts to a unitary.
fn certify_map(f: &Frame, g: &Frame, sigma: &[usize]) -> Result<SymmetryCertificate> {
    validate_permutation(f.len(), sigma)?;
    if g.dim() != f.dim() || g.len() != f.len() {
        return Err(Error::InvalidArgument(
            "frames must share dimension and vector count".into(),
        ));
    }
    let n = f.len();
    let d = f.dim();
    let eps = f.tol().eps();
    let basis = independent_columns(f)?;
    let inv_f = Invariants::new(f);
    let inv_g = Invariants::new(g);
    let j1 = basis[0];
    let mut triples = Vec::new();
    for k in 0..n {
        for l in (k + 1)..n {
            if k != j1 && l != j1 {
                triples.push((j1, k, l));
            }
        }
    }
    let candidates = phase_candidates(&inv_f, &inv_g, sigma, j1, &triples, eps);
    let mut last_err = Error::NoUnitaryLift;
    for alpha1 in candidates {
        let mut alphas = vec![Quat::ONE; d];
        alphas[0] = alpha1;
        let mut derivable = true;
        for t in 1..d {
            let jt = basis[t];
            // <v_{j1}, v_{jt}> and its image <w_{j1}, w_{jt}>.
            let q = inv_f.gram[(jt, j1)];
            let p = inv_g.gram[(sigma[jt], sigma[j1])];
            if q.abs() >= eps && p.abs() >= eps {
                let denom = match (q * alpha1).inverse() {
                    Some(inv) => inv,
                    None => {
                        derivable = false;
                        break;
                    }
                };
                match (p * denom).conj().normalized() {
                    Some(a) => alphas[t] = a,
                    None => {
                        derivable = false;
                        break;
                    }
                }
            }
        }
        if !derivable {
            continue;
        }
        match lift_unitary(f, g, sigma, &basis, &alphas) {
            Ok(cert) => return Ok(cert),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Certified projective symmetry group of a frame.
///
/// Every candidate permutation from [`symmetry_candidates`] is put through
/// phase and unitary recovery; the certified unitaries are then closed into
/// a matrix group. For highly symmetric systems the closure is the double
/// cover of the permutation group (both signs of each lift occur).
pub fn projective_symmetry_group(f: &Frame, cap: usize) -> Result<SymmetryGroupReport> {
    let candidates = symmetry_candidates(f, cap)?;
    let mut permutations = Vec::new();
    let mut certificates = Vec::new();
    let mut uncertified = Vec::new();
    let mut max_defect = 0.0f64;
    for sigma in candidates {
        match certify_map(f, f, &sigma) {
            Ok(cert) => {
                max_defect = max_defect.max(cert.defect);
                permutations.push(sigma);
                certificates.push(cert);
            }
            Err(_) => uncertified.push(sigma),
        }
    }
    let generators: Vec<QMatrix> = certificates.iter().map(|c| c.unitary.clone()).collect();
    let closure_cap = 4 * generators.len().max(4) + 64;
    let unitary_group = group_closure(&generators, closure_cap)?;
    Ok(SymmetryGroupReport {
        permutations,
        certificates,
        uncertified,
        unitary_group,
        max_defect,
    })
}

/// Decides projective unitary equivalence of two frames as far as the
/// invariant theory allows.
///
/// The frames are compared in their given vector order (no permutation is
/// searched): a mismatch in any invariant — support graph, norms, pairwise
/// products, or reduced m-products along short distinct-index cycles — is
/// conclusive [`EquivalenceVerdict::Inequivalent`]; a successful scalar and
/// unitary recovery yields [`EquivalenceVerdict::CertifiedEquivalent`]; and
/// agreement of all invariants without a certificate is reported honestly as
/// [`EquivalenceVerdict::Undetermined`].
pub fn equivalence_verdict(f: &Frame, g: &Frame) -> Result<EquivalenceVerdict> {
    if f.len() != g.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot compare frames with {} and {} vectors",
            f.len(),
            g.len()
        )));
    }
    if f.dim() != g.dim() {
        return Ok(EquivalenceVerdict::Inequivalent);
    }
    if !necessary_projective_equivalent(f, g)? {
        return Ok(EquivalenceVerdict::Inequivalent);
    }
    let n = f.len();
    let eps = f.tol().eps().max(g.tol().eps());
    let inv_f = Invariants::new(f);
    let inv_g = Invariants::new(g);
    let identity: Vec<usize> = (0..n).collect();
    // Stronger-than-basis screen: every short distinct-index cycle is a
    // projective invariant, so any mismatch proves inequivalence.
    for m in 3..=n.min(MAX_CYCLE_LEN) {
        let cycles = canonical_cycles(n, m);
        if !short_cycles_match(&inv_f, &inv_g, &identity, &cycles, eps) {
            return Ok(EquivalenceVerdict::Inequivalent);
        }
    }
    match certify_map(f, g, &identity) {
        Ok(cert) => Ok(EquivalenceVerdict::CertifiedEquivalent(Box::new(cert))),
        Err(_) => Ok(EquivalenceVerdict::Undetermined),
    }
}
