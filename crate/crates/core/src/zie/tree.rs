use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::ZieElement;
use crate::error::{Error, Result};
use crate::setcomp::{Composition, FiniteSet, Label};
use crate::species::SigElement;
use crate::Scalar;

/// A planar full binary tree whose leaves carry disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Tree {
    Leaf(FiniteSet),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(block: FiniteSet) -> Result<Tree> {
        if block.is_empty() {
            return Err(Error::InvalidTree("empty leaf block".into()));
        }
        Ok(Tree::Leaf(block))
    }

    pub fn node(left: Tree, right: Tree) -> Result<Tree> {
        if !left.ground().is_disjoint(&right.ground()) {
            return Err(Error::InvalidTree("branches share a label".into()));
        }
        Ok(Tree::Node(Box::new(left), Box::new(right)))
    }

    pub fn ground(&self) -> FiniteSet {
        match self {
            Tree::Leaf(b) => b.clone(),
            Tree::Node(l, r) => l.ground().union(&r.ground()),
        }
    }

    /// Leaf blocks left to right.
    pub fn debracket(&self) -> Composition {
        let mut lumps = Vec::new();
        self.collect_leaves(&mut lumps);
        Composition::from_lumps_unchecked(lumps)
    }

    fn collect_leaves(&self, out: &mut Vec<FiniteSet>) {
        match self {
            Tree::Leaf(b) => out.push(b.clone()),
            Tree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Every branch-swapped variant with its sign `(-1)^{#swaps}`.
    fn antisymmetrize(&self) -> Vec<(Vec<FiniteSet>, bool)> {
        match self {
            Tree::Leaf(b) => vec![(vec![b.clone()], false)],
            Tree::Node(l, r) => {
                let (ls, rs) = (l.antisymmetrize(), r.antisymmetrize());
                let mut out = Vec::with_capacity(2 * ls.len() * rs.len());
                for (a, sa) in &ls {
                    for (b, sb) in &rs {
                        let sign = sa ^ sb;
                        out.push(([a.clone(), b.clone()].concat(), sign));
                        out.push(([b.clone(), a.clone()].concat(), !sign));
                    }
                }
                out
            }
        }
    }

    /// `Q_T`: the signed sum of `Q_{F_{T'}}` over branch swaps, in the
    /// H-basis.
    pub fn to_q(&self) -> ZieElement {
        let coords = self.antisymmetrize().into_iter().map(|(lumps, neg)| {
            let c = if neg { -Scalar::one() } else { Scalar::one() };
            (Composition::from_lumps_unchecked(lumps), c)
        });
        let q = SigElement::from_terms(self.ground(), coords).expect("leaves cover the ground");
        ZieElement::new(q.from_q_coords()).expect("Q_T is primitive")
    }
}

impl fmt::Display for Tree {
    /// `[[24,[1,9]],678]`; a lone leaf prints as `[4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn block(b: &FiniteSet) -> String {
            let compact = Label::compact(b.labels());
            let parts: Vec<String> = b.iter().map(|l| l.to_string()).collect();
            parts.join(if compact { "" } else { " " })
        }
        fn inner(t: &Tree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                Tree::Leaf(b) => f.write_str(&block(b)),
                Tree::Node(l, r) => {
                    f.write_str("[")?;
                    inner(l, f)?;
                    f.write_str(",")?;
                    inner(r, f)?;
                    f.write_str("]")
                }
            }
        }
        match self {
            Tree::Leaf(b) => write!(f, "[{}]", block(b)),
            node => inner(node, f),
        }
    }
}

struct TreeParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() != Some(c) {
            return Err(Error::Parse(format!("expected '{}' at byte {}", c as char, self.pos)));
        }
        self.pos += 1;
        Ok(())
    }

    fn block(&mut self) -> Result<Tree> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == b',' || c == b'[' || c == b']' {
                break;
            }
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos])
            .map_err(|_| Error::Parse("invalid utf-8 in tree".into()))?;
        let comp: Composition = format!("({text})").parse()?;
        match comp.lumps() {
            [b] => Tree::leaf(b.clone()),
            _ => Err(Error::Parse(format!("bad leaf block {text:?}"))),
        }
    }

    fn item(&mut self, depth: usize) -> Result<Tree> {
        if depth > 64 {
            return Err(Error::Parse("tree nested too deeply".into()));
        }
        if self.peek() == Some(b'[') {
            self.bracket(depth + 1)
        } else {
            self.block()
        }
    }

    /// `[item,item]` or `[block]`.
    fn bracket(&mut self, depth: usize) -> Result<Tree> {
        self.expect(b'[')?;
        let left = self.item(depth)?;
        if self.peek() == Some(b']') {
            self.pos += 1;
            return match left {
                Tree::Leaf(_) => Ok(left),
                _ => Err(Error::Parse("a bracket must hold two branches".into())),
            };
        }
        self.expect(b',')?;
        let right = self.item(depth)?;
        self.expect(b']')?;
        Tree::node(left, right)
    }
}

impl FromStr for Tree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tree> {
        let trimmed = s.trim();
        let mut p = TreeParser {
            s: trimmed.as_bytes(),
            pos: 0,
        };
        let t = p.bracket(0)?;
        if p.pos != trimmed.len() {
            return Err(Error::Parse("trailing input after tree".into()));
        }
        Ok(t)
    }
}
