//! Deep embedding of the edge graph algebra.
//!
//! An [`EdgeTerm`] is pure syntax: nothing is simplified at construction time
//! and two terms that denote the same graph are generally different values.
//! Semantics is recovered with [`EdgeTerm::fold`].

use std::collections::BTreeSet;
use std::fmt;

/// The four binary constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    /// `+`, least upper bound of two graphs.
    Overlay,
    /// `>>`, tips of the left graph meet pits of the right graph.
    Into,
    /// `<>`, pits of both graphs meet.
    Pits,
    /// `><`, tips of both graphs meet.
    Tips,
}

impl BinOp {
    pub const ALL: [BinOp; 4] = [BinOp::Overlay, BinOp::Into, BinOp::Pits, BinOp::Tips];
    /// The operators that are not overlay.
    pub const CONNECT: [BinOp; 3] = [BinOp::Into, BinOp::Pits, BinOp::Tips];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Overlay => "+",
            BinOp::Into => ">>",
            BinOp::Pits => "<>",
            BinOp::Tips => "><",
        }
    }
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A term over the six edge graph constructors.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeTerm<L> {
    #[default]
    Empty,
    Edge(L),
    Overlay(Box<EdgeTerm<L>>, Box<EdgeTerm<L>>),
    Into(Box<EdgeTerm<L>>, Box<EdgeTerm<L>>),
    Pits(Box<EdgeTerm<L>>, Box<EdgeTerm<L>>),
    Tips(Box<EdgeTerm<L>>, Box<EdgeTerm<L>>),
}

impl<L> EdgeTerm<L> {
    pub fn empty() -> Self {
        EdgeTerm::Empty
    }

    pub fn edge(label: L) -> Self {
        EdgeTerm::Edge(label)
    }

    pub fn overlay(left: Self, right: Self) -> Self {
        EdgeTerm::Overlay(Box::new(left), Box::new(right))
    }

    pub fn into(left: Self, right: Self) -> Self {
        EdgeTerm::Into(Box::new(left), Box::new(right))
    }

    pub fn pits(left: Self, right: Self) -> Self {
        EdgeTerm::Pits(Box::new(left), Box::new(right))
    }

    pub fn tips(left: Self, right: Self) -> Self {
        EdgeTerm::Tips(Box::new(left), Box::new(right))
    }

    /// Builds the binary node for `op`.
    pub fn binary(op: BinOp, left: Self, right: Self) -> Self {
        match op {
            BinOp::Overlay => Self::overlay(left, right),
            BinOp::Into => Self::into(left, right),
            BinOp::Pits => Self::pits(left, right),
            BinOp::Tips => Self::tips(left, right),
        }
    }

    /// Splits a binary node into its operator and operands.
    pub fn as_binary(&self) -> Option<(BinOp, &Self, &Self)> {
        match self {
            EdgeTerm::Empty | EdgeTerm::Edge(_) => None,
            EdgeTerm::Overlay(a, b) => Some((BinOp::Overlay, a, b)),
            EdgeTerm::Into(a, b) => Some((BinOp::Into, a, b)),
            EdgeTerm::Pits(a, b) => Some((BinOp::Pits, a, b)),
            EdgeTerm::Tips(a, b) => Some((BinOp::Tips, a, b)),
        }
    }

    /// Owned counterpart of [`EdgeTerm::as_binary`].
    pub fn into_binary(self) -> Result<(BinOp, Self, Self), Self> {
        match self {
            EdgeTerm::Overlay(a, b) => Ok((BinOp::Overlay, *a, *b)),
            EdgeTerm::Into(a, b) => Ok((BinOp::Into, *a, *b)),
            EdgeTerm::Pits(a, b) => Ok((BinOp::Pits, *a, *b)),
            EdgeTerm::Tips(a, b) => Ok((BinOp::Tips, *a, *b)),
            leaf => Err(leaf),
        }
    }

    pub fn is_empty_leaf(&self) -> bool {
        matches!(self, EdgeTerm::Empty)
    }

    /// Number of constructor nodes in the term.
    pub fn size(&self) -> usize {
        self.fold(&Size)
    }

    /// Length of the longest root-to-leaf path, counting nodes.
    pub fn depth(&self) -> usize {
        self.fold(&Depth)
    }

    /// Labels occurring syntactically in the term.
    pub fn labels(&self) -> BTreeSet<&L>
    where
        L: Ord,
    {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                EdgeTerm::Empty => {}
                EdgeTerm::Edge(x) => {
                    out.insert(x);
                }
                _ => {
                    let (_, a, b) = t.as_binary().expect("binary node");
                    stack.push(a);
                    stack.push(b);
                }
            }
        }
        out
    }

    /// Maps every label, keeping the shape of the term.
    pub fn map_labels<M>(&self, mut f: impl FnMut(&L) -> M) -> EdgeTerm<M> {
        struct Relabel<'f, F>(std::cell::RefCell<&'f mut F>);
        impl<L, M, F: FnMut(&L) -> M> GraphAlgebra<L> for Relabel<'_, F> {
            type Carrier = EdgeTerm<M>;
            fn empty(&self) -> EdgeTerm<M> {
                EdgeTerm::Empty
            }
            fn edge(&self, label: &L) -> EdgeTerm<M> {
                EdgeTerm::Edge((self.0.borrow_mut())(label))
            }
            fn overlay(&self, a: EdgeTerm<M>, b: EdgeTerm<M>) -> EdgeTerm<M> {
                EdgeTerm::overlay(a, b)
            }
            fn into(&self, a: EdgeTerm<M>, b: EdgeTerm<M>) -> EdgeTerm<M> {
                EdgeTerm::into(a, b)
            }
            fn pits(&self, a: EdgeTerm<M>, b: EdgeTerm<M>) -> EdgeTerm<M> {
                EdgeTerm::pits(a, b)
            }
            fn tips(&self, a: EdgeTerm<M>, b: EdgeTerm<M>) -> EdgeTerm<M> {
                EdgeTerm::tips(a, b)
            }
        }
        self.fold(&Relabel(std::cell::RefCell::new(&mut f)))
    }

    /// Structural recursion: replaces every constructor by the matching
    /// function of `alg`, bottom up.
    ///
    /// Runs on an explicit stack, so deeply nested terms (long builder
    /// chains, say) do not exhaust the call stack.
    pub fn fold<A>(&self, alg: &A) -> A::Carrier
    where
        A: GraphAlgebra<L> + ?Sized,
    {
        enum Frame<'a, L> {
            Visit(&'a EdgeTerm<L>),
            Combine(BinOp),
        }

        let mut work = vec![Frame::Visit(self)];
        let mut values: Vec<A::Carrier> = Vec::new();
        while let Some(frame) = work.pop() {
            match frame {
                Frame::Visit(EdgeTerm::Empty) => values.push(alg.empty()),
                Frame::Visit(EdgeTerm::Edge(x)) => values.push(alg.edge(x)),
                Frame::Visit(t) => {
                    let (op, a, b) = t.as_binary().expect("binary node");
                    work.push(Frame::Combine(op));
                    work.push(Frame::Visit(b));
                    work.push(Frame::Visit(a));
                }
                Frame::Combine(op) => {
                    let right = values.pop().expect("right operand");
                    let left = values.pop().expect("left operand");
                    values.push(alg.combine(op, left, right));
                }
            }
        }
        debug_assert_eq!(values.len(), 1);
        values.pop().expect("fold result")
    }
}

/// The target of a catamorphism: one function per constructor.
///
/// For a fold to be well defined on graphs (rather than just on terms) the
/// functions must satisfy the edge graph axioms on the carrier. That is a
/// contract on implementors; it is checked per instance by the test suite.
pub trait GraphAlgebra<L> {
    type Carrier;

    fn empty(&self) -> Self::Carrier;
    fn edge(&self, label: &L) -> Self::Carrier;
    fn overlay(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier;
    fn into(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier;
    fn pits(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier;
    fn tips(&self, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier;

    fn combine(&self, op: BinOp, a: Self::Carrier, b: Self::Carrier) -> Self::Carrier {
        match op {
            BinOp::Overlay => self.overlay(a, b),
            BinOp::Into => self.into(a, b),
            BinOp::Pits => self.pits(a, b),
            BinOp::Tips => self.tips(a, b),
        }
    }
}

struct Size;

impl<L> GraphAlgebra<L> for Size {
    type Carrier = usize;
    fn empty(&self) -> usize {
        1
    }
    fn edge(&self, _: &L) -> usize {
        1
    }
    fn overlay(&self, a: usize, b: usize) -> usize {
        a + b + 1
    }
    fn into(&self, a: usize, b: usize) -> usize {
        a + b + 1
    }
    fn pits(&self, a: usize, b: usize) -> usize {
        a + b + 1
    }
    fn tips(&self, a: usize, b: usize) -> usize {
        a + b + 1
    }
}

struct Depth;

impl<L> GraphAlgebra<L> for Depth {
    type Carrier = usize;
    fn empty(&self) -> usize {
        1
    }
    fn edge(&self, _: &L) -> usize {
        1
    }
    fn overlay(&self, a: usize, b: usize) -> usize {
        a.max(b) + 1
    }
    fn into(&self, a: usize, b: usize) -> usize {
        a.max(b) + 1
    }
    fn pits(&self, a: usize, b: usize) -> usize {
        a.max(b) + 1
    }
    fn tips(&self, a: usize, b: usize) -> usize {
        a.max(b) + 1
    }
}
