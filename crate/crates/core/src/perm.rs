//! Permutations of `{0, …, n−1}` and finite permutation groups.
//!
//! A [`Permutation`] is stored as its image array: `images[i] = g(i)`.
//! Composition follows function composition, `(g ∘ h)(i) = g(h(i))`, and
//! permutations act on vectors on the left by moving the entry at position
//! `i` to position `g(i)`:
//!
//! ```text
//! (g · v)[g(i)] = v[i]        equivalently        (g · v)[i] = v[g⁻¹(i)]
//! ```
//!
//! Groups are materialized by full closure. At the sizes this crate targets
//! (`n ≤ 8`, `|G| ≤ 40320`) enumeration is cheap and avoids any base and
//! strong generating set machinery.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::time::{Duration, Instant};

use crate::{Error, Result};

/// Default upper bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image array, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::input(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p >= n {
                    return Err(Error::input(format!("point {p} out of range for degree {n}")));
                }
                if used[p] {
                    return Err(Error::input(format!("point {p} repeated in cycles")));
                }
                used[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::input(format!(
                "cannot compose permutations of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    /// Left action on a vector: the entry at position `i` moves to `self(i)`.
    pub fn act_on_vector<T: Clone>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.degree() {
            return Err(Error::input(format!(
                "vector of length {} acted on by permutation of degree {}",
                v.len(),
                self.degree()
            )));
        }
        Ok(self.act_unchecked(v))
    }

    pub(crate) fn act_unchecked<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        self.act_into(v, &mut out);
        out
    }

    /// Writes `self · v` into `out` without allocating.
    #[inline]
    pub(crate) fn act_into<T: Clone>(&self, v: &[T], out: &mut [T]) {
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
    }

    /// Cycle lengths, sorted in decreasing order; they sum to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

/// Prints 1-based cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// A finite permutation group with all of its elements enumerated.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    closure_time: Duration,
}

impl PermGroup {
    /// Closure of `generators` in `Sₙ` with the default element cap.
    pub fn closure(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::closure_with_cap(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    /// Breadth-first closure: multiply every new element by every generator
    /// until no new element appears.
    pub fn closure_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let start = Instant::now();
        if degree == 0 {
            return Err(Error::input("group degree must be at least 1"));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "group closure exceeds the cap of {cap} elements"
                        )));
                    }
                    seen.insert(y.clone());
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
            closure_time: start.elapsed(),
        })
    }

    /// The trivial group on `n` points.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::closure(n, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Wall time spent computing the closure.
    pub fn closure_time(&self) -> Duration {
        self.closure_time
    }

    /// Number of cosets `n!/|G|`.
    pub fn index_in_symmetric(&self) -> usize {
        factorial(self.degree) / self.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// The orbit `{g · v : g ∈ G}`, computed by closing `{v}` under the
    /// generators. Returned in lexicographically increasing order.
    pub fn orbit_of_vector<T>(&self, v: &[T]) -> Result<Vec<Vec<T>>>
    where
        T: Clone + Eq + Hash + Ord,
    {
        if v.len() != self.degree {
            return Err(Error::input(format!(
                "vector of length {} for a group of degree {}",
                v.len(),
                self.degree
            )));
        }
        let mut orbit = self.orbit_unsorted(v);
        orbit.sort();
        Ok(orbit)
    }

    pub(crate) fn orbit_unsorted<T>(&self, v: &[T]) -> Vec<Vec<T>>
    where
        T: Clone + Eq + Hash,
    {
        let mut seen: HashSet<Vec<T>> = HashSet::new();
        let mut orbit = vec![v.to_vec()];
        seen.insert(v.to_vec());
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.generators {
                let w = g.act_unchecked(&orbit[k]);
                if seen.insert(w.clone()) {
                    orbit.push(w);
                }
            }
            k += 1;
        }
        orbit
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
