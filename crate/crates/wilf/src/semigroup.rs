//! Numerical semigroups in Apéry-set representation.
//!
//! A numerical semigroup is an additively closed subset of the nonnegative
//! integers that contains 0 and misses only finitely many positive integers
//! (its *gaps*). We store the Apéry set with respect to the multiplicity m:
//! `apery[i]` is the least element of S congruent to i mod m. Every invariant
//! used by this crate falls out of that table in O(m), and membership is O(1).
//!
//! All arithmetic in this module is exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest multiplicity accepted by [`NumericalSemigroup::from_generators`].
/// The Apéry table has one entry per residue class mod m, so m bounds both
/// memory and construction time.
pub const MULTIPLICITY_LIMIT: i64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SemigroupError {
    /// The generator list is empty.
    #[error("generator set is empty")]
    Empty,
    /// gcd of the generators is not 1, so the complement would be infinite.
    #[error("generator gcd must be 1")]
    GcdNotOne,
    /// 1 generates all of Z>=0, which is excluded.
    #[error("generators must not contain 1 (the full semigroup Z>=0 is excluded)")]
    ContainsOne,
    /// A generator was zero or negative.
    #[error("generator {0} is invalid: generators must be integers >= 2")]
    InvalidElement(i64),
    /// The smallest generator exceeds [`MULTIPLICITY_LIMIT`].
    #[error("multiplicity {0} exceeds the supported limit {MULTIPLICITY_LIMIT}")]
    MultiplicityTooLarge(i64),
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A validated generator set: strictly increasing integers >= 2 with gcd 1.
///
/// The input need not be minimal; redundant generators are dropped when the
/// semigroup is constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<i64>,
}

impl GeneratorSet {
    pub fn new(mut elements: Vec<i64>) -> Result<Self, SemigroupError> {
        if elements.is_empty() {
            return Err(SemigroupError::Empty);
        }
        elements.sort_unstable();
        elements.dedup();
        if elements.contains(&1) {
            return Err(SemigroupError::ContainsOne);
        }
        if let Some(&bad) = elements.iter().find(|&&x| x < 2) {
            return Err(SemigroupError::InvalidElement(bad));
        }
        let g = elements.iter().fold(0i64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne);
        }
        if elements[0] > MULTIPLICITY_LIMIT {
            return Err(SemigroupError::MultiplicityTooLarge(elements[0]));
        }
        Ok(GeneratorSet { elements })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }
}

/// Exact density (f+1-g)/(f+1): the fraction of [0, f] lying in S.
///
/// Stored unreduced so that `num == 1` directly detects the semigroups whose
/// interval [0, f] contains no positive element. All comparisons against
/// other rationals go through cross-multiplication; no floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityValue {
    /// f + 1 - g (always >= 1: 0 is an element of [0, f] and of S).
    pub num: i64,
    /// f + 1 (always >= 2, since 1 is a gap of every semigroup here).
    pub den: i64,
}

impl DensityValue {
    /// Compare against the rational num/den (den > 0) exactly.
    pub fn cmp_ratio(&self, num: i128, den: i128) -> Ordering {
        assert!(den > 0, "comparison denominator must be positive");
        let lhs = self.num as i128 * den;
        let rhs = num * self.den as i128;
        lhs.cmp(&rhs)
    }

    /// True iff f + 1 - g = 1, i.e. 0 is the only element of S in [0, f].
    pub fn is_unit_numerator(&self) -> bool {
        self.num == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn log10(&self) -> f64 {
        (self.num as f64).log10() - (self.den as f64).log10()
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}/{}", self.num, self.den)
    }
}

/// Bundle of the basic invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub f: i64,
    pub g: i64,
    pub e: i64,
    pub m: i64,
    pub density: DensityValue,
}

/// A numerical semigroup, canonically represented by its Apéry set with
/// respect to the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    m: i64,
    /// apery[i] is the least s in S with s = i (mod m); apery[0] = 0.
    apery: Vec<i64>,
    f: i64,
    g: i64,
    atoms: Vec<i64>,
}

impl NumericalSemigroup {
    /// Build the smallest numerical semigroup containing the given generators.
    ///
    /// Validates the input (see [`SemigroupError`]) and recomputes the minimal
    /// generators, so redundant inputs are dropped.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        let set = GeneratorSet::new(gens.to_vec())?;
        Ok(Self::from_generator_set(&set))
    }

    /// As [`from_generators`](Self::from_generators), for a pre-validated set.
    pub fn from_generator_set(gens: &GeneratorSet) -> Self {
        let elems = gens.elements();
        let m = elems[0];
        // Shortest-path relaxation over the residue cycle graph: apery[j]
        // relaxes through apery[i] + a for each generator a. Round-robin
        // passes reach a fixed point after at most m sweeps (Bellman-Ford).
        let mut apery = vec![i64::MAX; m as usize];
        apery[0] = 0;
        loop {
            let mut changed = false;
            for i in 0..m as usize {
                let v = apery[i];
                if v == i64::MAX {
                    continue;
                }
                for &a in &elems[1..] {
                    let j = ((i as i64 + a) % m) as usize;
                    let cand = v + a;
                    if cand < apery[j] {
                        apery[j] = cand;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert!(
            apery.iter().all(|&x| x != i64::MAX),
            "gcd 1 guarantees every residue class is hit"
        );
        Self::from_apery(m, apery)
    }

    /// Internal constructor from a complete Apéry table. Derives f, g and the
    /// atoms; the enumeration module uses this to materialize tree nodes.
    pub(crate) fn from_apery(m: i64, apery: Vec<i64>) -> Self {
        debug_assert_eq!(apery.len(), m as usize);
        debug_assert_eq!(apery[0], 0);
        debug_assert!(apery.iter().enumerate().all(|(i, &w)| w % m == i as i64));

        let f = apery.iter().copied().max().unwrap() - m;
        // Selmer's formula: g = (sum_i apery[i] - m(m-1)/2) / m, exactly.
        let sum: i64 = apery.iter().sum();
        let num = sum - m * (m - 1) / 2;
        debug_assert_eq!(num % m, 0);
        let g = num / m;

        // An Apéry element apery[i] (i != 0) is an atom unless it splits as
        // apery[j] + apery[k] with j, k nonzero and j + k = i (mod m). The
        // multiplicity itself is always an atom.
        let mut atoms = vec![m];
        'outer: for i in 1..m as usize {
            for j in 1..m as usize {
                let k = (i + m as usize - j) % m as usize;
                if k == 0 {
                    continue;
                }
                if apery[j] + apery[k] == apery[i] {
                    continue 'outer;
                }
            }
            atoms.push(apery[i]);
        }
        atoms.sort_unstable();

        NumericalSemigroup {
            m,
            apery,
            f,
            g,
            atoms,
        }
    }

    /// Multiplicity: the smallest atom.
    pub fn multiplicity(&self) -> i64 {
        self.m
    }

    /// Frobenius number: the largest gap.
    pub fn frobenius(&self) -> i64 {
        self.f
    }

    /// Genus: the number of gaps.
    pub fn genus(&self) -> i64 {
        self.g
    }

    /// Embedding dimension: the number of atoms.
    pub fn embedding_dim(&self) -> i64 {
        self.atoms.len() as i64
    }

    /// The minimal generators, sorted ascending.
    pub fn atoms(&self) -> &[i64] {
        &self.atoms
    }

    /// The Apéry set with respect to the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Membership test; x >= 0. O(1).
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[(x % self.m) as usize]
    }

    /// All gaps, sorted ascending. The length equals the genus.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.f).filter(|&x| !self.contains(x)).collect()
    }

    /// Exact density (f+1-g)/(f+1), unreduced.
    pub fn density(&self) -> DensityValue {
        DensityValue {
            num: self.f + 1 - self.g,
            den: self.f + 1,
        }
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            f: self.f,
            g: self.g,
            e: self.embedding_dim(),
            m: self.m,
            density: self.density(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "<")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(fm, ",")?;
            }
            write!(fm, "{a}")?;
        }
        write!(fm, ">")
    }
}
