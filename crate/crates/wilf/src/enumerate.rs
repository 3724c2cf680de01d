//! Enumeration of all numerical semigroups up to a genus bound via the
//! semigroup tree.
//!
//! The tree is rooted at Z>=0. A child is obtained by removing one
//! *effective generator* (a minimal generator exceeding the Frobenius
//! number), which raises the genus by exactly 1 and makes the removed
//! element the child's Frobenius number. Every numerical semigroup appears
//! exactly once.
//!
//! Nodes carry a membership bitset over [0, 3g+3]. For a genus-g semigroup
//! f <= 2g-1 and m <= g+1, so every minimal generator is <= f+m <= 3g; the
//! extra 3 bits cover the children's windows one level down. A completely
//! independent brute-force oracle over candidate gap sets cross-validates
//! the tree walk.

use rayon::prelude::*;
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

/// Brute-force oracle cap: candidate gap-set enumeration is exponential in
/// the genus and is meant for cross-validation only.
pub const ORACLE_MAX_GENUS: u32 = 15;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum EnumerateError {
    #[error("brute-force oracle supports max_genus <= {ORACLE_MAX_GENUS}, got {0}")]
    OracleBoundExceeded(u32),
    #[error("embedding-dimension filter must be >= 2, got {0}")]
    InvalidFilter(i64),
}

/// Restriction of an enumeration to a fixed embedding dimension, or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SigmaFilter {
    e: Option<i64>,
}

impl SigmaFilter {
    /// No restriction.
    pub fn none() -> Self {
        SigmaFilter { e: None }
    }

    /// Keep only semigroups with the given embedding dimension (>= 2).
    pub fn embedding_dim(e: i64) -> Result<Self, EnumerateError> {
        if e < 2 {
            return Err(EnumerateError::InvalidFilter(e));
        }
        Ok(SigmaFilter { e: Some(e) })
    }

    pub fn from_option(e: Option<i64>) -> Result<Self, EnumerateError> {
        match e {
            None => Ok(Self::none()),
            Some(e) => Self::embedding_dim(e),
        }
    }

    pub fn matches(&self, e: i64) -> bool {
        self.e.is_none_or(|want| want == e)
    }

    pub fn dim(&self) -> Option<i64> {
        self.e
    }
}

fn words_for_genus(g: u32) -> usize {
    (3 * g as usize + 4).div_ceil(64)
}

/// Membership bitset. Invariant: every allocated bit (also those past the
/// nominal 3g+3 capacity, up to the word boundary) holds the true
/// membership value. Since everything above the Frobenius number is a
/// member, trailing bits are all ones.
#[derive(Debug, Clone, PartialEq, Eq)]
struct MemberBits {
    words: Vec<u64>,
}

impl MemberBits {
    fn full(words: usize) -> Self {
        MemberBits {
            words: vec![!0u64; words],
        }
    }

    #[inline]
    fn contains(&self, x: i64) -> bool {
        let x = x as usize;
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    fn remove(&mut self, x: i64) {
        let x = x as usize;
        self.words[x / 64] &= !(1u64 << (x % 64));
    }

    fn grown(&self, words: usize) -> Self {
        let mut w = self.words.clone();
        w.resize(words, !0u64);
        MemberBits { words: w }
    }
}

/// One node of the semigroup tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    member: MemberBits,
    f: i64,
    g: u32,
    eff_gens: Vec<i64>,
}

/// The root: Z>=0, genus 0, f = -1, sole effective generator 1. Internal
/// only; enumeration never emits it.
pub fn tree_root() -> TreeNode {
    TreeNode {
        member: MemberBits::full(words_for_genus(0)),
        f: -1,
        g: 0,
        eff_gens: vec![1],
    }
}

impl TreeNode {
    pub fn frobenius(&self) -> i64 {
        self.f
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    /// Minimal generators strictly greater than the Frobenius number.
    /// Removing any one of them yields a child semigroup of genus g+1.
    pub fn effective_generators(&self) -> &[i64] {
        &self.eff_gens
    }

    /// Membership within this node's bitset range.
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.member.contains(x)
    }

    /// One child per effective generator, ascending.
    pub fn children(&self) -> Vec<TreeNode> {
        let child_words = words_for_genus(self.g + 1);
        let mut out = Vec::with_capacity(self.eff_gens.len());
        for &x in &self.eff_gens {
            let mut member = self.member.grown(child_words);
            member.remove(x);

            // Child multiplicity: smallest nonzero member. x+1 > f' is
            // always a member, so the scan terminates within the window.
            let mut m = x + 1;
            for t in 1..=x {
                if member.contains(t) {
                    m = t;
                    break;
                }
            }

            // New effective generators live in (x, x+m]: anything above
            // x+m splits off the multiplicity.
            let mut eff = Vec::new();
            for y in x + 1..=x + m {
                if is_minimal_generator(&member, m, y) {
                    eff.push(y);
                }
            }
            out.push(TreeNode {
                member,
                f: x,
                g: self.g + 1,
                eff_gens: eff,
            });
        }
        out
    }

    /// Materialize the full semigroup (Apéry set, atoms) from the bitset.
    /// Only meaningful below the root.
    pub fn to_semigroup(&self) -> NumericalSemigroup {
        assert!(
            self.g >= 1,
            "the root Z>=0 is not a numerical semigroup here"
        );
        let mut m = self.f + 1;
        for t in 1..=self.f.max(1) {
            if self.member.contains(t) {
                m = t;
                break;
            }
        }
        let mut apery = vec![i64::MIN; m as usize];
        apery[0] = 0;
        let mut found = 1;
        let mut t = m;
        while found < m as usize {
            if self.member.contains(t) {
                let r = (t % m) as usize;
                if apery[r] == i64::MIN {
                    apery[r] = t;
                    found += 1;
                }
            }
            t += 1;
        }
        NumericalSemigroup::from_apery(m, apery)
    }
}

fn is_minimal_generator(member: &MemberBits, m: i64, y: i64) -> bool {
    if !member.contains(y) {
        return false;
    }
    for a in m..=y / 2 {
        if member.contains(a) && member.contains(y - a) {
            return false;
        }
    }
    true
}

/// Visit every numerical semigroup with 1 <= genus <= max_g passing the
/// filter, exactly once, in depth-first order (children by ascending
/// removed generator).
pub fn enumerate_by_genus<F>(max_g: u32, filter: &SigmaFilter, mut visitor: F)
where
    F: FnMut(&NumericalSemigroup),
{
    fn dfs<F: FnMut(&NumericalSemigroup)>(
        node: &TreeNode,
        max_g: u32,
        filter: &SigmaFilter,
        visitor: &mut F,
    ) {
        if node.g >= 1 {
            let s = node.to_semigroup();
            if filter.matches(s.embedding_dim()) {
                visitor(&s);
            }
        }
        if node.g < max_g {
            for child in node.children() {
                dfs(&child, max_g, filter, visitor);
            }
        }
    }
    if max_g >= 1 {
        dfs(&tree_root(), max_g, filter, &mut visitor);
    }
}

/// counts[g] = number of numerical semigroups of genus exactly g, for
/// g in 0..=max_g. counts[0] = 1 for the root, which streams never emit.
pub fn count_by_genus(max_g: u32) -> Vec<u64> {
    let mut counts = vec![0u64; max_g as usize + 1];
    counts[0] = 1;
    fn dfs(node: &TreeNode, max_g: u32, counts: &mut [u64]) {
        if node.g < max_g {
            for child in node.children() {
                counts[child.g as usize] += 1;
                dfs(&child, max_g, counts);
            }
        }
    }
    dfs(&tree_root(), max_g, &mut counts);
    counts
}

/// How a parallel walk is split: nodes with genus <= split_depth are
/// expanded sequentially, the genus == split_depth nodes seed a work queue,
/// and each subtree is folded independently. Partial results are merged in
/// queue order, so aggregates do not depend on the thread count.
#[derive(Debug, Clone, Copy)]
pub struct ParallelConfig {
    /// Worker threads; 0 means the rayon default (machine parallelism).
    pub threads: usize,
    pub split_depth: u32,
}

impl Default for ParallelConfig {
    fn default() -> Self {
        ParallelConfig {
            threads: 0,
            split_depth: 9,
        }
    }
}

/// Fold a visitor over every tree node with 1 <= genus <= max_g.
///
/// `visit` receives raw tree nodes; callers materialize a full
/// [`NumericalSemigroup`] only if they need more than (f, g). `merge` must
/// be associative; partial accumulators are combined in deterministic
/// depth-first frontier order regardless of thread count.
pub fn par_fold<T, I, V, M>(max_g: u32, cfg: &ParallelConfig, init: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&TreeNode, &mut T) + Sync,
    M: Fn(T, T) -> T,
{
    let mut acc0 = init();
    if max_g == 0 {
        return acc0;
    }
    let split = cfg.split_depth.min(max_g);

    fn expand<T>(
        node: TreeNode,
        split: u32,
        max_g: u32,
        visit: &impl Fn(&TreeNode, &mut T),
        acc: &mut T,
        frontier: &mut Vec<TreeNode>,
    ) {
        if node.g >= 1 {
            visit(&node, acc);
        }
        if node.g == split {
            if split < max_g {
                frontier.push(node);
            }
            return;
        }
        for child in node.children() {
            expand(child, split, max_g, visit, acc, frontier);
        }
    }

    let mut frontier = Vec::new();
    expand(tree_root(), split, max_g, &visit, &mut acc0, &mut frontier);
    if frontier.is_empty() {
        return acc0;
    }

    fn subtree<T>(node: &TreeNode, max_g: u32, visit: &impl Fn(&TreeNode, &mut T), acc: &mut T) {
        for child in node.children() {
            visit(&child, acc);
            if child.g < max_g {
                subtree(&child, max_g, visit, acc);
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .expect("failed to build worker pool");
    let parts: Vec<T> = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|node| {
                let mut acc = init();
                subtree(&node, max_g, &visit, &mut acc);
                acc
            })
            .collect()
    });
    parts.into_iter().fold(acc0, merge)
}

/// Brute-force oracle: enumerate candidate gap sets directly and keep those
/// whose complement is additively closed. Returns the gap sets (sorted
/// ascending) of every numerical semigroup with 1 <= genus <= max_g, in
/// (genus, gap-set) order. Completely independent of the tree code path.
///
/// A genus-g gap set lies inside [1, 2g-1] (at most one of x and f-x can be
/// a member for each x), so candidates are the g-element subsets of that
/// interval, walked as bitmasks.
pub fn brute_force_enumerate(max_g: u32) -> Result<Vec<Vec<i64>>, EnumerateError> {
    if max_g > ORACLE_MAX_GENUS {
        return Err(EnumerateError::OracleBoundExceeded(max_g));
    }
    let mut out = Vec::new();
    for g in 1..=max_g {
        let width = 2 * g as u64 - 1; // candidate gaps occupy bits 1..=width
        let limit = 1u64 << width;
        // Gosper's hack over g-bit subsets of `width` positions; shift by 1
        // so bit v stands for the integer v.
        let mut mask = (1u64 << g) - 1;
        while mask < limit {
            let gaps = mask << 1;
            if complement_is_closed(gaps, width) {
                let list: Vec<i64> = (1..=width as i64).filter(|&v| gaps >> v & 1 == 1).collect();
                out.push(list);
            }
            // next subset with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(out)
}

/// Is the complement of `gaps` (bits 1..=width) additively closed? Only sums
/// that could land on a gap matter, so members above `width` are irrelevant.
fn complement_is_closed(gaps: u64, width: u64) -> bool {
    let range = (1u64 << (width + 1)) - 2; // bits 1..=width
    let members = !gaps & range;
    let mut rest = members;
    while rest != 0 {
        let x = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        if 2 * x > width {
            break; // sums x + y >= 2x overshoot every gap
        }
        if (members << x) & gaps != 0 {
            return false;
        }
    }
    true
}
