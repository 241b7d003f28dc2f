//! Coxeter matrices and subsets of generators.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of generators a [`CoxeterMatrix`] may have. Subsets of
/// generators are stored as 64-bit masks.
pub const MAX_GENERATORS: usize = 64;

/// The exponent `m_st` in the relator `(st)^m_st`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl Exponent {
    pub fn is_finite(self) -> bool {
        matches!(self, Exponent::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Exponent::Finite(m) => Some(m),
            Exponent::Infinite => None,
        }
    }

    /// An edge of the Coxeter diagram: the two generators do not commute.
    pub fn is_diagram_edge(self) -> bool {
        self != Exponent::Finite(2)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(m) => write!(f, "{m}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(m) => s.serialize_u32(*m),
            Exponent::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(m) => Ok(Exponent::Finite(m)),
            Raw::Text(t) if t == "inf" => Ok(Exponent::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "expected an integer or \"inf\", found {t:?}"
            ))),
        }
    }
}

/// A set of generators, as a bitmask over generator indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn singleton(i: usize) -> Self {
        GenSet(1 << i)
    }

    /// The first `n` generators.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(GenSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        GenSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        GenSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: GenSet) -> Self {
        GenSet(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSet) -> Self {
        GenSet(self.0 & o.0)
    }

    pub fn difference(self, o: GenSet) -> Self {
        GenSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: GenSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted index lists.
    pub fn lex_cmp(self, o: GenSet) -> std::cmp::Ordering {
        self.iter().cmp(o.iter())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("a Coxeter system needs at least one generator")]
    NoGenerators,
    #[error("at most {MAX_GENERATORS} generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("relation between {0:?} and itself")]
    DiagonalRelation(String),
    #[error("exponent for {0:?},{1:?} must be at least 2, got {2}")]
    ExponentTooSmall(String, String, u32),
    #[error("pair {0:?},{1:?} given twice")]
    DuplicatePair(String, String),
}

/// A Coxeter system `(W, S)` given by its generators and Coxeter matrix.
///
/// Generators keep their declaration order; every ordering the crate
/// produces follows it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    /// Row-major `n x n`, diagonal `Finite(1)`.
    entries: Vec<Exponent>,
}

impl CoxeterMatrix {
    /// Builds a matrix where every pair not listed in `relations` gets
    /// exponent `default`.
    pub fn new<S: AsRef<str>>(
        generators: &[S],
        relations: &[(usize, usize, Exponent)],
        default: Exponent,
    ) -> Result<Self, CoxeterError> {
        let generators: Vec<String> = generators.iter().map(|s| s.as_ref().to_owned()).collect();
        let n = generators.len();
        if n == 0 {
            return Err(CoxeterError::NoGenerators);
        }
        if n > MAX_GENERATORS {
            return Err(CoxeterError::TooManyGenerators(n));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(CoxeterError::DuplicateGenerator(g.clone()));
            }
        }
        let mut entries = vec![default; n * n];
        let mut seen = vec![false; n * n];
        for i in 0..n {
            entries[i * n + i] = Exponent::Finite(1);
        }
        for &(i, j, m) in relations {
            if i >= n || j >= n {
                return Err(CoxeterError::UnknownGenerator(format!("#{}", i.max(j))));
            }
            if i == j {
                return Err(CoxeterError::DiagonalRelation(generators[i].clone()));
            }
            if let Exponent::Finite(v) = m {
                if v < 2 {
                    return Err(CoxeterError::ExponentTooSmall(
                        generators[i].clone(),
                        generators[j].clone(),
                        v,
                    ));
                }
            }
            if seen[i * n + j] {
                return Err(CoxeterError::DuplicatePair(
                    generators[i].clone(),
                    generators[j].clone(),
                ));
            }
            seen[i * n + j] = true;
            seen[j * n + i] = true;
            entries[i * n + j] = m;
            entries[j * n + i] = m;
        }
        Ok(CoxeterMatrix { generators, entries })
    }

    /// The right-angled system of a simple graph: `m = 2` on edges and
    /// `m = inf` on non-edges.
    pub fn right_angled<S: AsRef<str>>(
        generators: &[S],
        edges: &[(usize, usize)],
    ) -> Result<Self, CoxeterError> {
        let rels: Vec<_> = edges.iter().map(|&(i, j)| (i, j, Exponent::Finite(2))).collect();
        Self::new(generators, &rels, Exponent::Infinite)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn name(&self, i: usize) -> &str {
        &self.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn m(&self, i: usize, j: usize) -> Exponent {
        self.entries[i * self.rank() + j]
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn is_right_angled(&self) -> bool {
        self.pairs()
            .all(|(_, _, m)| matches!(m, Exponent::Finite(2) | Exponent::Infinite))
    }

    /// All unordered pairs `i < j` with their exponent.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Exponent)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.m(i, j))))
    }

    /// Generators that commute with every element of `t` (outside `t`).
    pub fn commuting_with(&self, t: GenSet) -> GenSet {
        let mut out = self.all().difference(t);
        for i in t.iter() {
            for j in out.iter() {
                if self.m(i, j) != Exponent::Finite(2) {
                    out = out.without(j);
                }
            }
        }
        out
    }

    /// Returns a copy with `m_ij` replaced.
    pub fn with_exponent(&self, i: usize, j: usize, m: Exponent) -> Result<Self, CoxeterError> {
        if i == j {
            return Err(CoxeterError::DiagonalRelation(self.generators[i].clone()));
        }
        if let Exponent::Finite(v) = m {
            if v < 2 {
                return Err(CoxeterError::ExponentTooSmall(
                    self.generators[i].clone(),
                    self.generators[j].clone(),
                    v,
                ));
            }
        }
        let n = self.rank();
        let mut out = self.clone();
        out.entries[i * n + j] = m;
        out.entries[j * n + i] = m;
        Ok(out)
    }

    /// Names of the generators in `t`, in declaration order.
    pub fn names(&self, t: GenSet) -> Vec<String> {
        t.iter().map(|i| self.generators[i].clone()).collect()
    }
}
