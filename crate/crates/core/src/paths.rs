//! Catamorphisms over edge graphs and the semiring path family.
//!
//! Any function out of the free edge graph algebra is a fold with a
//! [`GraphAlgebra`]. This module provides the standard instances (identity,
//! underlying edge set, transpose) and the path algebra: a graph is folded
//! into a [`UspState`], the pair of its edge set and a map from ordered
//! pairs of edge ends to weights, which is closed once at the end.
//!
//! Path weights live in a [`Semiring`]: `plus` chooses between alternative
//! paths, `times` composes along a path, `one` is the weight of standing
//! still and `zero`, never stored, marks unreachable pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::term::EdgeTerm;
pub use crate::term::GraphAlgebra;

/// Runs the catamorphism of `alg` over `term`.
pub fn cata<L, A: GraphAlgebra<L> + ?Sized>(term: &EdgeTerm<L>, alg: &A) -> A::Carrier {
    term.fold(alg)
}

/// `(e, edge, +, >>, <>, ><)`: rebuilds the term.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityAlgebra;

impl<L: Clone> GraphAlgebra<L> for IdentityAlgebra {
    type Carrier = EdgeTerm<L>;
    fn empty(&self) -> EdgeTerm<L> {
        EdgeTerm::Empty
    }
    fn edge(&self, x: &L) -> EdgeTerm<L> {
        EdgeTerm::Edge(x.clone())
    }
    fn overlay(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::overlay(a, b)
    }
    fn into(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::into(a, b)
    }
    fn pits(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::pits(a, b)
    }
    fn tips(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::tips(a, b)
    }
}

/// `(∅, {x}, ∪, ∪, ∪, ∪)`: the set of edges.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnderlyingAlgebra;

impl<L: Ord + Clone> GraphAlgebra<L> for UnderlyingAlgebra {
    type Carrier = BTreeSet<L>;
    fn empty(&self) -> BTreeSet<L> {
        BTreeSet::new()
    }
    fn edge(&self, x: &L) -> BTreeSet<L> {
        BTreeSet::from([x.clone()])
    }
    fn overlay(&self, mut a: BTreeSet<L>, mut b: BTreeSet<L>) -> BTreeSet<L> {
        a.append(&mut b);
        a
    }
    fn into(&self, a: BTreeSet<L>, b: BTreeSet<L>) -> BTreeSet<L> {
        self.overlay(a, b)
    }
    fn pits(&self, a: BTreeSet<L>, b: BTreeSet<L>) -> BTreeSet<L> {
        self.overlay(a, b)
    }
    fn tips(&self, a: BTreeSet<L>, b: BTreeSet<L>) -> BTreeSet<L> {
        self.overlay(a, b)
    }
}

/// `(e, edge, +, flip >>, ><, <>)`: reverses every edge.
#[derive(Debug, Clone, Copy, Default)]
pub struct TransposeAlgebra;

impl<L: Clone> GraphAlgebra<L> for TransposeAlgebra {
    type Carrier = EdgeTerm<L>;
    fn empty(&self) -> EdgeTerm<L> {
        EdgeTerm::Empty
    }
    fn edge(&self, x: &L) -> EdgeTerm<L> {
        EdgeTerm::Edge(x.clone())
    }
    fn overlay(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::overlay(a, b)
    }
    fn into(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::into(b, a)
    }
    fn pits(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::tips(a, b)
    }
    fn tips(&self, a: EdgeTerm<L>, b: EdgeTerm<L>) -> EdgeTerm<L> {
        EdgeTerm::pits(a, b)
    }
}

pub fn underlying<L: Ord + Clone>(term: &EdgeTerm<L>) -> BTreeSet<L> {
    cata(term, &UnderlyingAlgebra)
}

pub fn transpose<L: Clone>(term: &EdgeTerm<L>) -> EdgeTerm<L> {
    cata(term, &TransposeAlgebra)
}

/// One end of an edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End<L> {
    Pit(L),
    Tip(L),
}

impl<L> End<L> {
    pub fn label(&self) -> &L {
        match self {
            End::Pit(x) | End::Tip(x) => x,
        }
    }

    /// The same label at the other end.
    pub fn flip(self) -> Self {
        match self {
            End::Pit(x) => End::Tip(x),
            End::Tip(x) => End::Pit(x),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            End::Pit(_) => "Pit",
            End::Tip(_) => "Tip",
        }
    }
}

impl<L: fmt::Display> fmt::Display for End<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind(), self.label())
    }
}

/// A semiring of path weights.
///
/// Implementors promise: `plus` is commutative, associative and idempotent
/// with unit `zero`; `times` is associative with unit `one` and distributes
/// over `plus`. Idempotency of `plus` is what lets the closure terminate.
pub trait Semiring {
    type Weight: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Weight;
    fn one(&self) -> Self::Weight;
    fn plus(&self, a: &Self::Weight, b: &Self::Weight) -> Self::Weight;
    fn times(&self, a: &Self::Weight, b: &Self::Weight) -> Self::Weight;
}

/// `(min, +)` with zero `+inf` and one `0`: shortest paths. Supported on
/// nonnegative weights.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tropical;

impl Semiring for Tropical {
    type Weight = f64;
    fn zero(&self) -> f64 {
        f64::INFINITY
    }
    fn one(&self) -> f64 {
        0.0
    }
    fn plus(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }
    fn times(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
}

/// `(min, max)` with zero `+inf` and one `-inf`: the smallest bottleneck
/// along any path.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MinMax;

impl Semiring for MinMax {
    type Weight = f64;
    fn zero(&self) -> f64 {
        f64::INFINITY
    }
    fn one(&self) -> f64 {
        f64::NEG_INFINITY
    }
    fn plus(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }
    fn times(&self, a: &f64, b: &f64) -> f64 {
        a.max(*b)
    }
}

/// `(max, min)` with zero `-inf` and one `+inf`: the widest path.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MaxMin;

impl Semiring for MaxMin {
    type Weight = f64;
    fn zero(&self) -> f64 {
        f64::NEG_INFINITY
    }
    fn one(&self) -> f64 {
        f64::INFINITY
    }
    fn plus(&self, a: &f64, b: &f64) -> f64 {
        a.max(*b)
    }
    fn times(&self, a: &f64, b: &f64) -> f64 {
        a.min(*b)
    }
}

/// Run-time choice among the numeric presets.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum SemiringKind {
    #[default]
    Tropical,
    MinMax,
    MaxMin,
}

impl SemiringKind {
    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Tropical => "tropical",
            SemiringKind::MinMax => "minmax",
            SemiringKind::MaxMin => "maxmin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown semiring {0:?} (expected tropical, minmax or maxmin)")]
pub struct UnknownSemiring(pub String);

impl FromStr for SemiringKind {
    type Err = UnknownSemiring;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tropical" => Ok(SemiringKind::Tropical),
            "minmax" => Ok(SemiringKind::MinMax),
            "maxmin" => Ok(SemiringKind::MaxMin),
            _ => Err(UnknownSemiring(s.to_string())),
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Semiring for SemiringKind {
    type Weight = f64;
    fn zero(&self) -> f64 {
        match self {
            SemiringKind::Tropical => Tropical.zero(),
            SemiringKind::MinMax => MinMax.zero(),
            SemiringKind::MaxMin => MaxMin.zero(),
        }
    }
    fn one(&self) -> f64 {
        match self {
            SemiringKind::Tropical => Tropical.one(),
            SemiringKind::MinMax => MinMax.one(),
            SemiringKind::MaxMin => MaxMin.one(),
        }
    }
    fn plus(&self, a: &f64, b: &f64) -> f64 {
        match self {
            SemiringKind::Tropical => Tropical.plus(a, b),
            SemiringKind::MinMax => MinMax.plus(a, b),
            SemiringKind::MaxMin => MaxMin.plus(a, b),
        }
    }
    fn times(&self, a: &f64, b: &f64) -> f64 {
        match self {
            SemiringKind::Tropical => Tropical.times(a, b),
            SemiringKind::MinMax => MinMax.times(a, b),
            SemiringKind::MaxMin => MaxMin.times(a, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("NonConvergence: closure did not reach a fixpoint within {passes} passes")]
    NonConvergence { passes: usize },
}

impl PathError {
    pub fn code(&self) -> &'static str {
        match self {
            PathError::NonConvergence { .. } => "NonConvergence",
        }
    }
}

/// Weights between ordered pairs of edge ends. Absent pairs are unreachable.
#[derive(Debug, Clone, PartialEq)]
pub struct PathMap<L, W> {
    entries: BTreeMap<(End<L>, End<L>), W>,
}

impl<L, W> Default for PathMap<L, W> {
    fn default() -> Self {
        PathMap {
            entries: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone, W: Clone + PartialEq> PathMap<L, W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, from: &End<L>, to: &End<L>) -> Option<&W> {
        // BTreeMap lookups on tuple keys need an owned key
        self.entries.get(&(from.clone(), to.clone()))
    }

    /// The weight of a pair, reporting unreachable pairs as `zero`.
    pub fn weight<S: Semiring<Weight = W>>(&self, from: &End<L>, to: &End<L>, semiring: &S) -> W {
        self.get(from, to)
            .cloned()
            .unwrap_or_else(|| semiring.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&End<L>, &End<L>, &W)> + '_ {
        self.entries.iter().map(|((a, b), w)| (a, b, w))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Combines `weight` into the entry for `(from, to)` with `plus`.
    /// Returns whether the map changed. `zero` is never stored.
    pub fn relax<S: Semiring<Weight = W>>(
        &mut self,
        from: End<L>,
        to: End<L>,
        weight: W,
        semiring: &S,
    ) -> bool {
        let zero = semiring.zero();
        let key = (from, to);
        let combined = match self.entries.get(&key) {
            Some(old) => {
                let new = semiring.plus(old, &weight);
                if new == *old {
                    return false;
                }
                new
            }
            None => weight,
        };
        if combined == zero {
            return self.entries.remove(&key).is_some();
        }
        self.entries.insert(key, combined);
        true
    }

    /// Applies `f` to every key, keeping the weights.
    pub fn map_keys(&self, mut f: impl FnMut(&End<L>, &End<L>) -> (End<L>, End<L>)) -> Self {
        PathMap {
            entries: self
                .entries
                .iter()
                .map(|((a, b), w)| (f(a, b), w.clone()))
                .collect(),
        }
    }
}

impl<L: Ord, W> FromIterator<((End<L>, End<L>), W)> for PathMap<L, W> {
    fn from_iter<I: IntoIterator<Item = ((End<L>, End<L>), W)>>(iter: I) -> Self {
        PathMap {
            entries: iter.into_iter().collect(),
        }
    }
}

/// Edge set paired with the path map built so far.
#[derive(Debug, Clone, PartialEq)]
pub struct UspState<L, W> {
    pub edges: BTreeSet<L>,
    pub paths: PathMap<L, W>,
}

impl<L, W> Default for UspState<L, W> {
    fn default() -> Self {
        UspState {
            edges: BTreeSet::new(),
            paths: PathMap::default(),
        }
    }
}

impl<L: Ord + Clone, W: Clone + PartialEq> UspState<L, W> {
    /// The state of a single edge: both ends reach themselves at `one`,
    /// and the pit reaches the tip at `weight`.
    pub fn edge<S: Semiring<Weight = W>>(label: L, weight: W, semiring: &S) -> Self {
        let mut paths = PathMap::new();
        paths.relax(
            End::Pit(label.clone()),
            End::Pit(label.clone()),
            semiring.one(),
            semiring,
        );
        paths.relax(
            End::Pit(label.clone()),
            End::Tip(label.clone()),
            weight,
            semiring,
        );
        paths.relax(
            End::Tip(label.clone()),
            End::Tip(label.clone()),
            semiring.one(),
            semiring,
        );
        UspState {
            edges: BTreeSet::from([label]),
            paths,
        }
    }
}

/// Unions edge sets and path maps, resolving collisions with `plus`.
pub fn usp_overlay<L, S>(
    a: UspState<L, S::Weight>,
    b: UspState<L, S::Weight>,
    semiring: &S,
) -> UspState<L, S::Weight>
where
    L: Ord + Clone,
    S: Semiring,
{
    let (mut big, small) = if a.paths.len() >= b.paths.len() {
        (a, b)
    } else {
        (b, a)
    };
    big.edges.extend(small.edges);
    for ((from, to), w) in small.paths.entries {
        big.paths.relax(from, to, w, semiring);
    }
    big
}

/// Overlays the two states and identifies `left_end(x)` with
/// `right_end(y)` at weight `one`, in both directions, for every edge `x`
/// of `a` and `y` of `b`.
pub fn usp_connect<L, S>(
    left_end: fn(L) -> End<L>,
    right_end: fn(L) -> End<L>,
    a: UspState<L, S::Weight>,
    b: UspState<L, S::Weight>,
    semiring: &S,
) -> UspState<L, S::Weight>
where
    L: Ord + Clone,
    S: Semiring,
{
    let left: Vec<L> = a.edges.iter().cloned().collect();
    let right: Vec<L> = b.edges.iter().cloned().collect();
    let mut out = usp_overlay(a, b, semiring);
    let one = semiring.one();
    for x in &left {
        for y in &right {
            let (l, r) = (left_end(x.clone()), right_end(y.clone()));
            out.paths.relax(l.clone(), r.clone(), one.clone(), semiring);
            out.paths.relax(r, l, one.clone(), semiring);
        }
    }
    out
}

/// Reflexive transitive closure by repeated relaxation: every pair of
/// entries `(u, v) -> x`, `(v, w) -> y` contributes `times(x, y)` to
/// `(u, w)`.
///
/// At most `|ends|^2 + 1` passes are made, where `|ends|` is twice the edge
/// count; a semiring that breaks the idempotency contract (tropical weights
/// with a negative cycle, say) fails with [`PathError::NonConvergence`].
pub fn usp_closure<L, S>(
    state: UspState<L, S::Weight>,
    semiring: &S,
) -> Result<UspState<L, S::Weight>, PathError>
where
    L: Ord + Clone,
    S: Semiring,
{
    let UspState { edges, mut paths } = state;
    let ends = 2 * edges.len();
    let cap = ends * ends + 1;
    for _ in 0..cap {
        let mut successors: BTreeMap<&End<L>, Vec<(&End<L>, &S::Weight)>> = BTreeMap::new();
        for ((from, to), w) in &paths.entries {
            successors.entry(from).or_default().push((to, w));
        }
        let mut next = paths.clone();
        let mut changed = false;
        for ((from, mid), x) in &paths.entries {
            if let Some(steps) = successors.get(mid) {
                for (to, y) in steps {
                    changed |=
                        next.relax(from.clone(), (*to).clone(), semiring.times(x, y), semiring);
                }
            }
        }
        drop(successors);
        if !changed {
            return Ok(UspState { edges, paths });
        }
        paths = next;
    }
    Err(PathError::NonConvergence { passes: cap })
}

/// The unclosed path algebra; [`semiring_paths`] closes its result once.
pub struct UspAlgebra<'a, S, F> {
    pub semiring: &'a S,
    pub weight: F,
}

impl<L, S, F> GraphAlgebra<L> for UspAlgebra<'_, S, F>
where
    L: Ord + Clone,
    S: Semiring,
    F: Fn(&L) -> S::Weight,
{
    type Carrier = UspState<L, S::Weight>;

    fn empty(&self) -> Self::Carrier {
        UspState::default()
    }
    fn edge(&self, x: &L) -> Self::Carrier {
        UspState::edge(x.clone(), (self.weight)(x), self.semiring)
    }
    fn overlay(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier {
        usp_overlay(a, b, self.semiring)
    }
    fn into(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier {
        usp_connect(End::Tip, End::Pit, a, b, self.semiring)
    }
    fn pits(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier {
        usp_connect(End::Pit, End::Pit, a, b, self.semiring)
    }
    fn tips(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier {
        usp_connect(End::Tip, End::Tip, a, b, self.semiring)
    }
}

/// Closed path weights between all pairs of edge ends of `term`.
pub fn semiring_paths<L, S, F>(
    term: &EdgeTerm<L>,
    weight: F,
    semiring: &S,
) -> Result<PathMap<L, S::Weight>, PathError>
where
    L: Ord + Clone,
    S: Semiring,
    F: Fn(&L) -> S::Weight,
{
    let state = cata(term, &UspAlgebra { semiring, weight });
    Ok(usp_closure(state, semiring)?.paths)
}

/// Shortest distances in the tropical semiring.
pub fn shortest_paths<L, F>(term: &EdgeTerm<L>, weight: F) -> Result<PathMap<L, f64>, PathError>
where
    L: Ord + Clone,
    F: Fn(&L) -> f64,
{
    semiring_paths(term, weight, &Tropical)
}
