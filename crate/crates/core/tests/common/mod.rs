//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use edgegraph::paths::{End, PathMap, Semiring};
use edgegraph::{BinOp, EdgeTerm, FlowGraph, FlowNode, Multigraph, NodalFlow};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Term = EdgeTerm<u8>;
pub type Graph = FlowGraph<u8>;

pub fn eval(t: &Term) -> Graph {
    FlowGraph::eval(t)
}

pub fn e(x: u8) -> Term {
    EdgeTerm::edge(x)
}

/// Random terms over labels `0..alphabet`; at most `depth` nodes from root
/// to leaf.
pub fn term_with(alphabet: u8, depth: u32) -> BoxedStrategy<Term> {
    let leaf = prop_oneof![
        1 => Just(EdgeTerm::Empty),
        4 => (0..alphabet).prop_map(EdgeTerm::Edge),
    ];
    leaf.prop_recursive(depth.saturating_sub(1), 48, 2, |inner| {
        (
            prop::sample::select(BinOp::ALL.to_vec()),
            inner.clone(),
            inner,
        )
            .prop_map(|(op, a, b)| EdgeTerm::binary(op, a, b))
    })
    .boxed()
}

/// Five labels, depth at most seven.
pub fn term() -> BoxedStrategy<Term> {
    term_with(5, 7)
}

pub fn nonempty_term() -> BoxedStrategy<Term> {
    term()
        .prop_filter("graph has an edge", |t| !eval(t).is_empty())
        .boxed()
}

pub fn graph() -> BoxedStrategy<Graph> {
    term().prop_map(|t| eval(&t)).boxed()
}

/// Graphs with at most `max_edges` edges drawn from `alphabet` labels.
pub fn small_graph(alphabet: u8, max_edges: usize) -> BoxedStrategy<Graph> {
    term_with(alphabet, 6)
        .prop_map(|t| eval(&t))
        .prop_filter("few edges", move |g| g.underlying().len() <= max_edges)
        .boxed()
}

/// Multigraphs with up to five named nodes and up to six edges.
pub fn multigraph() -> BoxedStrategy<Multigraph<u8, char>> {
    (
        1usize..=5,
        prop::collection::btree_map(0u8..8, (0usize..5, 0usize..5), 0..=6),
    )
        .prop_map(|(n, edges)| {
            let names: Vec<char> = ('a'..='e').take(n).collect();
            Multigraph::new(
                names.clone(),
                edges
                    .into_iter()
                    .map(|(l, (p, t))| (l, names[p % n], names[t % n])),
            )
            .expect("endpoints drawn from the node set")
        })
        .boxed()
}

/// Nodal flows built straight from random triples.
pub fn nodal_flow() -> impl Strategy<Value = NodalFlow<u8, char>> {
    (
        1usize..=5,
        prop::collection::btree_map(0u8..8, (0usize..5, 0usize..5), 0..=6),
    )
        .prop_map(|(n, edges)| {
            let mut triples: Vec<(BTreeSet<u8>, BTreeSet<u8>, char)> = ('a'..='e')
                .take(n)
                .map(|c| (BTreeSet::new(), BTreeSet::new(), c))
                .collect();
            for (label, (tip, pit)) in edges {
                triples[tip % n].0.insert(label);
                triples[pit % n].1.insert(label);
            }
            NodalFlow::new(triples).expect("each label has one tip and one pit")
        })
}

/// Searches for a bijection of non-isolated nodes that carries one
/// multigraph onto the other.
pub fn witness_exists<N: Ord + Clone, M: Ord + Clone>(
    a: &Multigraph<u8, N>,
    b: &Multigraph<u8, M>,
) -> bool {
    let la: BTreeSet<u8> = a.edges().copied().collect();
    let lb: BTreeSet<u8> = b.edges().copied().collect();
    if la != lb {
        return false;
    }
    let na: Vec<&N> = a.non_isolated().into_iter().collect();
    let nb: Vec<&M> = b.non_isolated().into_iter().collect();
    if na.len() != nb.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..nb.len()).collect();
    let check = |perm: &[usize]| {
        let phi: BTreeMap<&N, &M> = na.iter().zip(perm).map(|(n, &i)| (*n, nb[i])).collect();
        la.iter().all(|x| {
            phi[a.pit_of(x).unwrap()] == b.pit_of(x).unwrap()
                && phi[a.tip_of(x).unwrap()] == b.tip_of(x).unwrap()
        })
    };
    permutations(&mut perm, 0, &check)
}

fn permutations(perm: &mut Vec<usize>, k: usize, check: &dyn Fn(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, check) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Weights in `[0, 20]` for labels `0..8`.
pub fn weights() -> BoxedStrategy<BTreeMap<u8, f64>> {
    prop::collection::vec(0u32..=20, 8)
        .prop_map(|ws| {
            ws.into_iter()
                .enumerate()
                .map(|(i, w)| (i as u8, w as f64))
                .collect()
        })
        .boxed()
}

/// Draws values from strategies with a fixed seed.
pub struct Sampler {
    runner: TestRunner,
}

impl Sampler {
    pub fn new(seed: u8) -> Self {
        let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]);
        Sampler {
            runner: TestRunner::new_with_rng(Config::default(), rng),
        }
    }

    pub fn draw<S: Strategy>(&mut self, s: &S) -> S::Value {
        s.new_tree(&mut self.runner)
            .expect("strategy produced a value")
            .current()
    }
}

// ---------------------------------------------------------------------------
// Literal constructions: classes of touching nodes, and one helper graph per
// label pair for connects.

/// Join as the set of unions of the classes of the transitive closure of
/// "shares a tip or a pit", computed by merging until stable.
pub fn literal_overlay(g: &Graph, h: &Graph) -> Graph {
    let mut classes: Vec<FlowNode<u8>> = g.nodes().chain(h.nodes()).cloned().collect();
    loop {
        let mut merged = false;
        'scan: for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                if classes[i].touches(&classes[j]) {
                    let other = classes.remove(j);
                    classes[i].absorb(other);
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    FlowGraph::validate(classes.into_iter().collect::<BTreeSet<_>>())
        .expect("join of valid graphs is valid")
}

fn flow(nodes: &[(&[u8], &[u8])]) -> Graph {
    FlowGraph::validate(
        nodes
            .iter()
            .map(|(t, p)| FlowNode::new(t.iter().copied(), p.iter().copied()))
            .collect::<BTreeSet<_>>(),
    )
    .expect("helper graph is valid")
}

pub fn helper_graph(op: BinOp, d: u8, e: u8) -> Graph {
    match op {
        BinOp::Into if d == e => flow(&[(&[d], &[d])]),
        BinOp::Into => flow(&[(&[], &[d]), (&[d], &[e]), (&[e], &[])]),
        BinOp::Pits => flow(&[(&[], &[d, e]), (&[d], &[]), (&[e], &[])]),
        BinOp::Tips => flow(&[(&[], &[d]), (&[], &[e]), (&[d, e], &[])]),
        BinOp::Overlay => panic!("overlay has no helper graph"),
    }
}

/// `g + h + sum of helper(d, e)` over all `d` in `|g|`, `e` in `|h|`.
pub fn literal_connect(op: BinOp, g: &Graph, h: &Graph) -> Graph {
    let mut acc = literal_overlay(g, h);
    for d in g.underlying() {
        for e in h.underlying() {
            acc = literal_overlay(&acc, &helper_graph(op, d, e));
        }
    }
    acc
}

/// Evaluates a term with only the literal constructions.
pub fn literal_eval(t: &Term) -> Graph {
    match t {
        EdgeTerm::Empty => FlowGraph::empty(),
        EdgeTerm::Edge(x) => FlowGraph::edge(*x),
        _ => {
            let (op, a, b) = t.as_binary().unwrap();
            let (a, b) = (literal_eval(a), literal_eval(b));
            match op {
                BinOp::Overlay => literal_overlay(&a, &b),
                _ => literal_connect(op, &a, &b),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force paths: walks over the graph of edge ends, built from the flow
// representation, extended one step at a time until nothing improves.

pub fn brute_force_paths<S: Semiring<Weight = f64>>(
    g: &Graph,
    weight: &BTreeMap<u8, f64>,
    s: &S,
) -> PathMap<u8, f64> {
    let mut step: BTreeMap<(End<u8>, End<u8>), f64> = BTreeMap::new();
    let add = |map: &mut BTreeMap<(End<u8>, End<u8>), f64>, k: (End<u8>, End<u8>), w: f64| {
        let v = match map.get(&k) {
            Some(old) => s.plus(old, &w),
            None => w,
        };
        map.insert(k, v);
    };
    for x in g.underlying() {
        add(&mut step, (End::Pit(x), End::Tip(x)), weight[&x]);
    }
    for node in g.nodes() {
        let here: Vec<End<u8>> = node
            .tips
            .iter()
            .map(|x| End::Tip(*x))
            .chain(node.pits.iter().map(|x| End::Pit(*x)))
            .collect();
        for u in &here {
            for v in &here {
                add(&mut step, (u.clone(), v.clone()), s.one());
            }
        }
    }
    let mut dist = step.clone();
    loop {
        let mut next = dist.clone();
        for ((u, v), x) in &dist {
            for ((v2, w), y) in &step {
                if v == v2 {
                    add(&mut next, (u.clone(), w.clone()), s.times(x, y));
                }
            }
        }
        if next == dist {
            break;
        }
        dist = next;
    }
    let zero = s.zero();
    dist.into_iter().filter(|(_, w)| *w != zero).collect()
}

// ---------------------------------------------------------------------------
// Random rewriting with the axioms, applied at random positions.

fn nonempty(t: &Term) -> bool {
    !eval(t).is_empty()
}

fn bin(op: BinOp, a: &Term, b: &Term) -> Term {
    EdgeTerm::binary(op, a.clone(), b.clone())
}

fn sum3(a: Term, b: Term, c: Term) -> Term {
    EdgeTerm::overlay(EdgeTerm::overlay(a, b), c)
}

fn split(t: &Term) -> Option<(BinOp, &Term, &Term)> {
    t.as_binary()
}

/// One of the six transitive axioms, as `(pairwise sum, compound)` shapes.
/// Returns `(lhs, rhs)` for operands `a, b, c`.
pub fn transitive(k: usize, a: &Term, b: &Term, c: &Term) -> (Term, Term) {
    use BinOp::*;
    let s = |x: Term, y: Term| EdgeTerm::overlay(x, y);
    match k {
        0 => (
            s(bin(Pits, a, b), bin(Pits, a, c)),
            bin(Pits, &bin(Pits, a, b), c),
        ),
        1 => (
            s(bin(Into, b, a), bin(Pits, a, c)),
            bin(Into, b, &bin(Pits, a, c)),
        ),
        2 => (
            s(bin(Into, a, b), bin(Into, a, c)),
            bin(Into, a, &bin(Pits, b, c)),
        ),
        3 => (
            s(bin(Tips, a, b), bin(Into, a, c)),
            bin(Into, &bin(Tips, a, b), c),
        ),
        4 => (
            s(bin(Into, b, a), bin(Into, c, a)),
            bin(Into, &bin(Tips, b, c), a),
        ),
        5 => (
            s(bin(Tips, a, b), bin(Tips, a, c)),
            bin(Tips, &bin(Tips, a, b), c),
        ),
        _ => unreachable!(),
    }
}

/// Tries to match `t` against the sum side of transitive axiom `k`.
fn match_transitive_sum(k: usize, t: &Term) -> Option<Term> {
    use BinOp::*;
    let (Overlay, l, r) = split(t)? else {
        return None;
    };
    let (lo, l1, l2) = split(l)?;
    let (ro, r1, r2) = split(r)?;
    // (a, b, c) recovered from the positions each axiom uses
    let (a, b, c) = match k {
        0 if lo == Pits && ro == Pits && l1 == r1 => (l1, l2, r2),
        1 if lo == Into && ro == Pits && l2 == r1 => (l2, l1, r2),
        2 if lo == Into && ro == Into && l1 == r1 => (l1, l2, r2),
        3 if lo == Tips && ro == Into && l1 == r1 => (l1, l2, r2),
        4 if lo == Into && ro == Into && l2 == r2 => (l2, l1, r1),
        5 if lo == Tips && ro == Tips && l1 == r1 => (l1, l2, r2),
        _ => return None,
    };
    if !nonempty(a) {
        return None;
    }
    Some(transitive(k, a, b, c).1)
}

/// Tries to match `t` against the compound side of transitive axiom `k`.
fn match_transitive_compound(k: usize, t: &Term) -> Option<Term> {
    use BinOp::*;
    let (o, x, y) = split(t)?;
    let (a, b, c) = match k {
        0 if o == Pits => {
            let (Pits, a, b) = split(x)? else { return None };
            (a, b, y)
        }
        1 if o == Into => {
            let (Pits, a, c) = split(y)? else { return None };
            (a, x, c)
        }
        2 if o == Into => {
            let (Pits, b, c) = split(y)? else { return None };
            (x, b, c)
        }
        3 if o == Into => {
            let (Tips, a, b) = split(x)? else { return None };
            (a, b, y)
        }
        4 if o == Into => {
            let (Tips, b, c) = split(x)? else { return None };
            (y, b, c)
        }
        5 if o == Tips => {
            let (Tips, a, b) = split(x)? else { return None };
            (a, b, y)
        }
        _ => return None,
    };
    if !nonempty(a) {
        return None;
    }
    Some(transitive(k, a, b, c).0)
}

const RULES: usize = 16;

fn apply_rule(rule: usize, t: &Term, rng: &mut StdRng) -> Option<Term> {
    use BinOp::*;
    let any_op = |rng: &mut StdRng| BinOp::ALL[rng.random_range(0..4)];
    match rule {
        // units
        0 => {
            let op = any_op(rng);
            Some(if rng.random() {
                bin(op, t, &EdgeTerm::Empty)
            } else {
                bin(op, &EdgeTerm::Empty, t)
            })
        }
        1 => {
            let (_, a, b) = split(t)?;
            match (a.is_empty_leaf(), b.is_empty_leaf()) {
                (_, true) => Some(a.clone()),
                (true, _) => Some(b.clone()),
                _ => None,
            }
        }
        // commutativity of +, <>, ><
        2 => {
            let (op, a, b) = split(t)?;
            (op != Into).then(|| bin(op, b, a))
        }
        // associativity, both directions
        3 => {
            let (op, x, c) = split(t)?;
            let (op2, a, b) = split(x)?;
            (op == op2).then(|| bin(op, a, &bin(op, b, c)))
        }
        4 => {
            let (op, a, y) = split(t)?;
            let (op2, b, c) = split(y)?;
            (op == op2).then(|| bin(op, &bin(op, a, b), c))
        }
        // idempotency of +
        5 => Some(EdgeTerm::overlay(t.clone(), t.clone())),
        6 => {
            let (Overlay, a, b) = split(t)? else {
                return None;
            };
            (a == b).then(|| a.clone())
        }
        // decomposition, expanding
        7 => {
            let (op, a, y) = split(t)?;
            let (op2, b, c) = split(y)?;
            (op != Overlay && op2 != Overlay)
                .then(|| sum3(bin(op, a, b), bin(op, a, c), bin(op2, b, c)))
        }
        8 => {
            let (op2, x, c) = split(t)?;
            let (op, a, b) = split(x)?;
            (op != Overlay && op2 != Overlay)
                .then(|| sum3(bin(op, a, b), bin(op2, a, c), bin(op2, b, c)))
        }
        // decomposition, contracting: a□b + a□c + b■c -> a□(b■c)
        9 => {
            let (Overlay, l, z) = split(t)? else {
                return None;
            };
            let (Overlay, x, y) = split(l)? else {
                return None;
            };
            let (op, a, b) = split(x)?;
            let (op_y, a2, c) = split(y)?;
            let (op2, b2, c2) = split(z)?;
            (op != Overlay && op == op_y && op2 != Overlay && a == a2 && b == b2 && c == c2)
                .then(|| bin(op, a, &bin(op2, b, c)))
        }
        // containment: a□b -> a□b + a / + b, and back
        10 => {
            let (op, a, b) = split(t)?;
            if op == Overlay {
                return None;
            }
            let part = if rng.random() { a } else { b };
            Some(EdgeTerm::overlay(t.clone(), part.clone()))
        }
        11 => {
            let (Overlay, x, p) = split(t)? else {
                return None;
            };
            let (op, a, b) = split(x)?;
            (op != Overlay && (p == a || p == b)).then(|| x.clone())
        }
        // transitive axioms
        12 => {
            let k = rng.random_range(0..6);
            match_transitive_sum(k, t).or_else(|| (0..6).find_map(|k| match_transitive_sum(k, t)))
        }
        13 => {
            let k = rng.random_range(0..6);
            match_transitive_compound(k, t)
                .or_else(|| (0..6).find_map(|k| match_transitive_compound(k, t)))
        }
        // reflexive axioms
        14 => match t {
            EdgeTerm::Edge(_) => {
                let op = if rng.random() { Pits } else { Tips };
                Some(bin(op, t, t))
            }
            _ => None,
        },
        15 => {
            let (op, a, b) = split(t)?;
            (matches!(op, Pits | Tips) && matches!(a, EdgeTerm::Edge(_)) && a == b)
                .then(|| a.clone())
        }
        _ => unreachable!(),
    }
}

fn replace_nth(t: &Term, n: &mut usize, f: &mut dyn FnMut(&Term) -> Option<Term>) -> Option<Term> {
    if *n == 0 {
        return f(t);
    }
    *n -= 1;
    let (op, a, b) = t.as_binary()?;
    if let Some(a2) = replace_nth(a, n, f) {
        return Some(bin(op, &a2, b));
    }
    if *n == usize::MAX {
        return None;
    }
    let b2 = replace_nth(b, n, f)?;
    Some(bin(op, a, &b2))
}

/// Applies one randomly chosen axiom at a random position.
pub fn rewrite_once(t: &Term, rng: &mut StdRng) -> Term {
    let size = t.size();
    for _ in 0..200 {
        let target = rng.random_range(0..size);
        let rule = rng.random_range(0..RULES);
        let mut n = target;
        let mut f = |s: &Term| apply_rule(rule, s, rng);
        if let Some(out) = replace_nth(t, &mut n, &mut f) {
            return out;
        }
    }
    // unit introduction at the root always applies
    EdgeTerm::overlay(t.clone(), EdgeTerm::Empty)
}

/// Applies `steps` random axiom rewrites, capping growth of the term.
pub fn rewrite(t: &Term, steps: usize, seed: u64) -> Term {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut cur = t.clone();
    for _ in 0..steps {
        let next = rewrite_once(&cur, &mut rng);
        if next.size() <= 400 {
            cur = next;
        }
    }
    cur
}

/// `(term, rewritten term)` pairs using 1 to 5 rewrites.
pub fn rewritten_pair() -> BoxedStrategy<(Term, Term)> {
    (term(), 1usize..=5, any::<u64>())
        .prop_map(|(t, steps, seed)| {
            let r = rewrite(&t, steps, seed);
            (t, r)
        })
        .boxed()
}
