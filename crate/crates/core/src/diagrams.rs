//! Canonical diagrams over the one-relation presentation `<x | x^2 = x>`,
//! encoded as pairs of binary forests with a shared leaf sequence.
//!
//! The top forest holds the splitting cells (`x -> x^2`) read from the top
//! path down to the longest positive path, the bottom forest holds the merging
//! cells read from the bottom path up. Leaves of both forests are the edges of
//! the longest path, numbered `0..L` from the left.
//!
//! A diagram is *reduced* when no leaf position `k` carries a caret with leaf
//! children `k, k+1` in both forests, and *canonical* when in addition its last
//! leaf is not a bare root in both forests. The identity is the one-leaf pair
//! `ε(x)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{GenWord, Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Caret(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn caret(left: Tree, right: Tree) -> Tree {
        Tree::Caret(Box::new(left), Box::new(right))
    }

    /// A single caret over two leaves.
    pub fn wedge() -> Tree {
        Tree::caret(Tree::Leaf, Tree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn caret_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Caret(l, r) => 1 + l.caret_count() + r.caret_count(),
        }
    }

    /// Replaces leaves left to right with trees drawn from `subs`.
    fn graft(&self, subs: &mut impl Iterator<Item = Tree>) -> Tree {
        match self {
            Tree::Leaf => subs.next().expect("graft: substitution list too short"),
            Tree::Caret(l, r) => {
                let l = l.graft(subs);
                let r = r.graft(subs);
                Tree::caret(l, r)
            }
        }
    }

    /// Pushes the leftmost leaf index of every caret, in preorder.
    fn caret_starts(&self, offset: usize, out: &mut Vec<usize>) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(l, r) => {
                out.push(offset);
                let nl = l.caret_starts(offset, out);
                let nr = r.caret_starts(offset + nl, out);
                nl + nr
            }
        }
    }

    /// Pushes `(start, width)` for every node, leaves included.
    fn spans(&self, offset: usize, out: &mut Vec<(usize, usize)>) -> usize {
        let width = match self {
            Tree::Leaf => 1,
            Tree::Caret(l, r) => {
                let nl = l.spans(offset, out);
                nl + r.spans(offset + nl, out)
            }
        };
        out.push((offset, width));
        width
    }

    /// Pushes the left leaf position of every caret whose children are both leaves.
    fn exposed(&self, offset: usize, out: &mut Vec<usize>) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(l, r) => {
                if l.is_leaf() && r.is_leaf() {
                    out.push(offset);
                    return 2;
                }
                let nl = l.exposed(offset, out);
                nl + r.exposed(offset + nl, out)
            }
        }
    }

    /// Collapses exposed carets whose left leaf position is in the sorted slice
    /// `targets` (positions measured before collapsing).
    fn collapse(self, offset: usize, targets: &[usize]) -> (Tree, usize) {
        match self {
            Tree::Leaf => (Tree::Leaf, 1),
            Tree::Caret(l, r) => {
                if l.is_leaf() && r.is_leaf() && targets.binary_search(&offset).is_ok() {
                    return (Tree::Leaf, 2);
                }
                let (l, nl) = l.collapse(offset, targets);
                let (r, nr) = r.collapse(offset + nl, targets);
                (Tree::caret(l, r), nl + nr)
            }
        }
    }

    fn write_key(&self, out: &mut String) {
        match self {
            Tree::Leaf => out.push('.'),
            Tree::Caret(l, r) => {
                out.push('(');
                l.write_key(out);
                r.write_key(out);
                out.push(')');
            }
        }
    }
}

/// Least common refinement of two trees over the same root edge. Appends to
/// `a_exp` the subtree each leaf of `a` expands to, and likewise for `b`.
fn refine(a: &Tree, b: &Tree, a_exp: &mut Vec<Tree>, b_exp: &mut Vec<Tree>) {
    match (a, b) {
        (Tree::Leaf, _) => {
            a_exp.push(b.clone());
            b_exp.extend(std::iter::repeat_n(Tree::Leaf, b.leaf_count()));
        }
        (_, Tree::Leaf) => {
            b_exp.push(a.clone());
            a_exp.extend(std::iter::repeat_n(Tree::Leaf, a.leaf_count()));
        }
        (Tree::Caret(al, ar), Tree::Caret(bl, br)) => {
            refine(al, bl, a_exp, b_exp);
            refine(ar, br, a_exp, b_exp);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    /// Panics on an empty tree list.
    pub fn new(trees: Vec<Tree>) -> Forest {
        assert!(!trees.is_empty(), "a forest has at least one tree");
        Forest { trees }
    }

    pub fn leaves(n: usize) -> Forest {
        Forest::new(vec![Tree::Leaf; n])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn root_count(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn caret_count(&self) -> usize {
        self.trees.iter().map(Tree::caret_count).sum()
    }

    fn pad(&mut self, extra: usize) {
        self.trees.extend(std::iter::repeat_n(Tree::Leaf, extra));
    }

    fn graft(&self, subs: Vec<Tree>) -> Forest {
        let mut it = subs.into_iter();
        let trees = self.trees.iter().map(|t| t.graft(&mut it)).collect();
        debug_assert!(it.next().is_none());
        Forest { trees }
    }

    /// Leftmost leaf index of every caret, per tree left to right, each tree in
    /// preorder. The result is nondecreasing.
    pub fn caret_starts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            offset += t.caret_starts(offset, &mut out);
        }
        out
    }

    /// `(start, width)` of every node of the forest (leaves, carets, roots).
    pub fn spans(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            offset += t.spans(offset, &mut out);
        }
        out
    }

    /// Leaf positions that are whole trees (bare roots).
    pub fn root_leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            if t.is_leaf() {
                out.push(offset);
            }
            offset += t.leaf_count();
        }
        out
    }

    fn exposed(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            offset += t.exposed(offset, &mut out);
        }
        out
    }

    fn collapse(&mut self, targets: &[usize]) {
        let mut offset = 0;
        let trees = std::mem::take(&mut self.trees);
        self.trees = trees
            .into_iter()
            .map(|t| {
                let (t, n) = t.collapse(offset, targets);
                offset += n;
                t
            })
            .collect();
    }

    fn write_key(&self, out: &mut String) {
        for t in &self.trees {
            t.write_key(out);
        }
    }
}

/// Sorted intersection of two sorted position lists.
fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// A canonical diagram; the unique representative of an element of F.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    top: Forest,
    bottom: Forest,
}

impl Diagram {
    /// The identity `ε(x)`.
    pub fn identity() -> Diagram {
        Diagram { top: Forest::leaves(1), bottom: Forest::leaves(1) }
    }

    /// Builds a diagram from a forest pair, cancelling dipoles and stripping
    /// trailing common edges.
    pub fn from_forests(top: Forest, bottom: Forest) -> Result<Diagram> {
        if top.leaf_count() != bottom.leaf_count() {
            return Err(Error::Domain(format!("forests have {} and {} leaves", top.leaf_count(), bottom.leaf_count())));
        }
        let mut d = Diagram { top, bottom };
        d.reduce();
        d.make_canonical();
        Ok(d)
    }

    pub fn top(&self) -> &Forest {
        &self.top
    }

    pub fn bottom(&self) -> &Forest {
        &self.bottom
    }

    /// Number of edges on the longest positive path.
    pub fn leaf_count(&self) -> usize {
        self.top.leaf_count()
    }

    pub fn is_identity(&self) -> bool {
        self.top.caret_count() == 0 && self.bottom.caret_count() == 0
    }

    /// Total number of cells.
    pub fn cell_count(&self) -> usize {
        self.top.caret_count() + self.bottom.caret_count()
    }

    pub fn is_reduced(&self) -> bool {
        intersect_sorted(&self.top.exposed(), &self.bottom.exposed()).is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        if self.is_identity() {
            return self.leaf_count() == 1;
        }
        let last_bare = |f: &Forest| f.trees.last().is_some_and(Tree::is_leaf);
        self.is_reduced() && !(last_bare(&self.top) && last_bare(&self.bottom))
    }

    /// Cancels dipoles left to right until none remain.
    fn reduce(&mut self) {
        loop {
            let common = intersect_sorted(&self.top.exposed(), &self.bottom.exposed());
            if common.is_empty() {
                return;
            }
            self.top.collapse(&common);
            self.bottom.collapse(&common);
        }
    }

    fn make_canonical(&mut self) {
        while self.top.trees.len() > 1
            && self.bottom.trees.len() > 1
            && self.top.trees.last().is_some_and(Tree::is_leaf)
            && self.bottom.trees.last().is_some_and(Tree::is_leaf)
        {
            self.top.trees.pop();
            self.bottom.trees.pop();
        }
        if self.is_identity() {
            *self = Diagram::identity();
        }
    }

    pub fn inverse(&self) -> Diagram {
        invert(self)
    }

    pub fn compose(&self, other: &Diagram) -> Diagram {
        compose(self, other)
    }

    /// Right multiplication by a single generator letter.
    pub fn mul_letter(&self, letter: Letter) -> Diagram {
        compose(self, &letter_diagram(letter))
    }

    pub fn normal_form(&self) -> NormalForm {
        to_normal_form(self)
    }

    pub fn key(&self) -> String {
        canonical_key(self)
    }

    /// Parses a canonical key produced by [`canonical_key`]. The parsed pair
    /// must already be canonical.
    pub fn from_key(key: &str) -> Result<Diagram> {
        let bad = || Error::Domain(format!("malformed diagram key `{key}`"));
        let (t, b) = key.split_once('/').ok_or_else(bad)?;
        let top = parse_forest(t).ok_or_else(bad)?;
        let bottom = parse_forest(b).ok_or_else(bad)?;
        let d = Diagram { top, bottom };
        if d.top.leaf_count() != d.bottom.leaf_count() || !d.is_canonical() {
            return Err(bad());
        }
        Ok(d)
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Option<Tree> {
    match bytes.get(*pos)? {
        b'.' => {
            *pos += 1;
            Some(Tree::Leaf)
        }
        b'(' => {
            *pos += 1;
            let l = parse_tree(bytes, pos)?;
            let r = parse_tree(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return None;
            }
            *pos += 1;
            Some(Tree::caret(l, r))
        }
        _ => None,
    }
}

fn parse_forest(s: &str) -> Option<Forest> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut trees = Vec::new();
    while pos < bytes.len() {
        trees.push(parse_tree(bytes, &mut pos)?);
    }
    (!trees.is_empty()).then_some(Forest { trees })
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&canonical_key(self))
    }
}

/// The diagram of the generator `x_i`.
pub fn atomic(i: usize) -> Diagram {
    let mut top = vec![Tree::Leaf; i];
    top.push(Tree::wedge());
    Diagram { top: Forest::new(top), bottom: Forest::leaves(i + 2) }
}

pub fn letter_diagram(letter: Letter) -> Diagram {
    match letter.sign {
        Sign::Pos => atomic(letter.index),
        Sign::Neg => invert(&atomic(letter.index)),
    }
}

/// Mirror image.
pub fn invert(d: &Diagram) -> Diagram {
    Diagram { top: d.bottom.clone(), bottom: d.top.clone() }
}

/// Product `d1 · d2` (apply `d1`, then `d2`).
pub fn compose(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut top1 = d1.top.clone();
    let mut bot1 = d1.bottom.clone();
    let mut top2 = d2.top.clone();
    let mut bot2 = d2.bottom.clone();

    let (r1, r2) = (bot1.root_count(), top2.root_count());
    if r1 < r2 {
        top1.pad(r2 - r1);
        bot1.pad(r2 - r1);
    } else if r2 < r1 {
        top2.pad(r1 - r2);
        bot2.pad(r1 - r2);
    }

    let mut exp1 = Vec::with_capacity(bot1.leaf_count());
    let mut exp2 = Vec::with_capacity(top2.leaf_count());
    for (b, t) in bot1.trees.iter().zip(&top2.trees) {
        refine(b, t, &mut exp1, &mut exp2);
    }

    let mut d = Diagram { top: top1.graft(exp1), bottom: bot2.graft(exp2) };
    d.reduce();
    d.make_canonical();
    debug_assert!(d.is_canonical(), "compose produced a non-canonical diagram {d}");
    d
}

pub fn from_word(w: &GenWord) -> Diagram {
    w.letters.iter().fold(Diagram::identity(), |acc, &l| acc.mul_letter(l))
}

/// Balanced-parenthesis serialization: a leaf is `.`, a caret is
/// `(` left right `)`, trees are concatenated, and the two forests are joined
/// by `/` (top first). The identity is `./.`.
pub fn canonical_key(d: &Diagram) -> String {
    let mut out = String::with_capacity(4 * (d.cell_count() + d.leaf_count()) + 1);
    d.top.write_key(&mut out);
    out.push('/');
    d.bottom.write_key(&mut out);
    out
}

pub fn cell_count(d: &Diagram) -> usize {
    d.cell_count()
}

/// The normal form `x_{i_1} ... x_{i_s} x_{j_t}^-1 ... x_{j_1}^-1` with
/// `pos = [i_1 <= ... <= i_s]` and `neg = [j_1 <= ... <= j_t]`.
///
/// Valid normal forms satisfy: whenever `i` occurs in both `pos` and `neg`,
/// `i + 1` occurs in one of them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

impl NormalForm {
    pub fn new(pos: Vec<usize>, neg: Vec<usize>) -> NormalForm {
        NormalForm { pos, neg }
    }

    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<()> {
        for (name, seq) in [("pos", &self.pos), ("neg", &self.neg)] {
            if seq.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidNormalForm(format!("{name} is not nondecreasing")));
            }
        }
        for &i in &self.pos {
            if self.neg.binary_search(&i).is_ok()
                && self.pos.binary_search(&(i + 1)).is_err()
                && self.neg.binary_search(&(i + 1)).is_err()
            {
                return Err(Error::InvalidNormalForm(format!(
                    "x{i} occurs with both signs but x{} does not occur",
                    i + 1
                )));
            }
        }
        if let (Some(a), Some(b)) = (self.pos.last(), self.neg.last()) {
            if a == b {
                return Err(Error::InvalidNormalForm(format!("x{a} x{a}^-1 cancels freely")));
            }
        }
        Ok(())
    }

    pub fn to_word(&self) -> GenWord {
        let letters = self
            .pos
            .iter()
            .map(|&i| Letter::pos(i))
            .chain(self.neg.iter().rev().map(|&j| Letter::neg(j)))
            .collect::<Vec<_>>();
        GenWord::new(letters)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::words::format_word(&self.to_word()))
    }
}

pub fn to_normal_form(d: &Diagram) -> NormalForm {
    NormalForm { pos: d.top.caret_starts(), neg: d.bottom.caret_starts() }
}

pub fn from_normal_form(nf: &NormalForm) -> Result<Diagram> {
    nf.validate()?;
    Ok(from_word(&nf.to_word()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn c(l: Tree, r: Tree) -> Tree {
        Tree::caret(l, r)
    }
    const L: Tree = Tree::Leaf;

    fn w(s: &str) -> Diagram {
        from_word(&parse_word(s).unwrap())
    }

    fn example_g() -> Diagram {
        from_normal_form(&NormalForm::new(vec![0, 0, 1, 6], vec![0, 0, 3])).unwrap()
    }

    #[test]
    fn atomic_shapes() {
        let a0 = atomic(0);
        assert_eq!(a0.top().trees(), &[Tree::wedge()]);
        assert_eq!(a0.bottom().trees(), &[L, L]);
        let a1 = atomic(1);
        assert_eq!(a1.top().trees(), &[L, Tree::wedge()]);
        assert_eq!(a1.bottom().trees(), &[L, L, L]);
        for i in [0, 1, 5, 6] {
            assert_eq!(atomic(i).cell_count(), 1);
            assert!(atomic(i).is_canonical());
        }
    }

    #[test]
    fn inversion() {
        assert_eq!(invert(&Diagram::identity()), Diagram::identity());
        let i0 = invert(&atomic(0));
        assert_eq!(i0.top().trees(), &[L, L]);
        assert_eq!(i0.bottom().trees(), &[Tree::wedge()]);
    }

    #[test]
    fn defining_relation() {
        for j in 1..8 {
            for i in 0..j {
                assert_eq!(compose(&atomic(j), &atomic(i)), compose(&atomic(i), &atomic(j + 1)));
            }
        }
        assert_eq!(w("x1 x0"), w("x0 x2"));
        assert_ne!(w("x1 x0"), w("x0 x1"));
    }

    #[test]
    fn square_of_x0() {
        let d = compose(&atomic(0), &atomic(0));
        assert_eq!(d.top().trees(), &[c(Tree::wedge(), L)]);
        assert_eq!(d.bottom().trees(), &[L, L, L]);
        assert_eq!(d.normal_form(), NormalForm::new(vec![0, 0], vec![]));
    }

    #[test]
    fn relators_of_two_generator_presentation() {
        for r in crate::words::two_generator_relators() {
            assert!(from_word(&r).is_identity(), "{r}");
        }
        // x2 = x0^-1 x1 x0 and x3 = x0^-2 x1 x0^2 commute with x0 x1^-1
        let a = w("x0 x1^-1");
        for x in [w("x0^-1 x1 x0"), w("x0^-1 x0^-1 x1 x0 x0")] {
            assert_eq!(compose(&a, &x), compose(&x, &a));
        }
    }

    #[test]
    fn identity_cases() {
        assert_eq!(from_word(&GenWord::empty()), Diagram::identity());
        assert_eq!(canonical_key(&Diagram::identity()), "./.");
        assert_eq!(w("x3 x1^-1 x1 x3^-1"), Diagram::identity());
        assert_eq!(to_normal_form(&Diagram::identity()), NormalForm::default());
    }

    #[test]
    fn worked_example_round_trip() {
        let g = example_g();
        assert_eq!(g.cell_count(), 7);
        assert_eq!(g.leaf_count(), 8);
        assert_eq!(g.normal_form(), NormalForm::new(vec![0, 0, 1, 6], vec![0, 0, 3]));
        assert_eq!(g, w("x0 x0 x1 x6 x3^-1 x0^-1 x0^-1"));
    }

    #[test]
    fn normal_form_validation() {
        assert!(from_normal_form(&NormalForm::new(vec![0], vec![0])).is_err());
        assert!(from_normal_form(&NormalForm::new(vec![1, 0], vec![])).is_err());
        assert!(from_normal_form(&NormalForm::new(vec![0, 1], vec![0])).is_ok());
        assert!(from_normal_form(&NormalForm::new(vec![0, 2], vec![0, 2])).is_err());
        assert_eq!(from_normal_form(&NormalForm::default()).unwrap(), Diagram::identity());
    }

    #[test]
    fn keys() {
        assert_eq!(w("x1 x0").key(), w("x0 x2").key());
        assert_ne!(atomic(0).key(), atomic(1).key());
        assert_eq!(atomic(1).key(), ".(..)/...");
        let g = example_g();
        assert_eq!(Diagram::from_key(&g.key()).unwrap(), g);
        assert!(Diagram::from_key("(..)/..").is_ok());
        assert!(Diagram::from_key("../..").is_err());
        assert!(Diagram::from_key("(..)/(..)").is_err());
        assert!(Diagram::from_key("(.)/..").is_err());
    }

    #[test]
    fn from_forests_reduces() {
        let d =
            Diagram::from_forests(Forest::new(vec![Tree::wedge(), L]), Forest::new(vec![Tree::wedge(), L])).unwrap();
        assert_eq!(d, Diagram::identity());
        assert!(Diagram::from_forests(Forest::leaves(2), Forest::leaves(3)).is_err());
    }

    fn arb_word(max_index: usize, max_len: usize) -> impl Strategy<Value = GenWord> {
        prop::collection::vec((0..=max_index, any::<bool>()), 0..=max_len).prop_map(|v| {
            v.into_iter().map(|(i, p)| if p { Letter::pos(i) } else { Letter::neg(i) }).collect::<Vec<_>>().into()
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in arb_word(4, 8), b in arb_word(4, 8), c in arb_word(4, 8)) {
            let (a, b, c) = (from_word(&a), from_word(&b), from_word(&c));
            prop_assert_eq!(compose(&compose(&a, &b), &c), compose(&a, &compose(&b, &c)));
        }

        #[test]
        fn inverse_laws(a in arb_word(5, 10), b in arb_word(5, 10)) {
            let (a, b) = (from_word(&a), from_word(&b));
            prop_assert!(compose(&a, &invert(&a)).is_identity());
            prop_assert_eq!(invert(&invert(&a)), a.clone());
            prop_assert_eq!(invert(&compose(&a, &b)), compose(&invert(&b), &invert(&a)));
        }

        #[test]
        fn word_inverse_matches_mirror(a in arb_word(5, 12)) {
            prop_assert_eq!(from_word(&a.inverse()), invert(&from_word(&a)));
        }

        #[test]
        fn results_are_canonical(a in arb_word(6, 14)) {
            let d = from_word(&a);
            prop_assert!(d.is_canonical());
            prop_assert_eq!(d.top().leaf_count(), d.bottom().leaf_count());
        }

        #[test]
        fn normal_form_round_trip(a in arb_word(6, 14)) {
            let d = from_word(&a);
            let nf = d.normal_form();
            prop_assert!(nf.validate().is_ok());
            prop_assert_eq!(nf.len(), d.cell_count());
            prop_assert_eq!(from_normal_form(&nf).unwrap(), d.clone());
            prop_assert_eq!(Diagram::from_key(&d.key()).unwrap(), d);
        }
    }
}
