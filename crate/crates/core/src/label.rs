//! Vertex labels.
//!
//! Every vertex of every complex carries a [`VertexLabel`]. Base complexes use
//! atoms; derived constructions build composite labels out of the labels of
//! the complex they were built from, so that a vertex of, say, the
//! barycentric subdivision of a power names the simplex of tuples it stands
//! for.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Characters reserved by the canonical serialization.
const RESERVED: &[char] = &['(', ')', '{', '}', '[', ']', ',', '|'];

/// A recursive vertex name.
///
/// Labels are totally ordered: first by kind (`Atom < Tuple < Bary < Orbit`),
/// then lexicographically on their members. `Bary` and `Orbit` member lists
/// are kept sorted and duplicate-free by their constructors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Atom(String),
    /// A vertex of an ordered power: one coordinate per factor.
    Tuple(Vec<VertexLabel>),
    /// The barycenter of the simplex spanned by the members.
    Bary(Vec<VertexLabel>),
    /// A group orbit of vertices.
    Orbit(Vec<VertexLabel>),
}

impl VertexLabel {
    pub fn atom(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.contains(RESERVED) {
            return Err(Error::InvalidAtom(name));
        }
        Ok(VertexLabel::Atom(name))
    }

    pub fn tuple(coords: Vec<VertexLabel>) -> Self {
        VertexLabel::Tuple(coords)
    }

    pub fn bary(mut members: Vec<VertexLabel>) -> Self {
        members.sort();
        members.dedup();
        VertexLabel::Bary(members)
    }

    pub fn orbit(mut members: Vec<VertexLabel>) -> Self {
        members.sort();
        members.dedup();
        VertexLabel::Orbit(members)
    }

    fn kind_rank(&self) -> u8 {
        match self {
            VertexLabel::Atom(_) => 0,
            VertexLabel::Tuple(_) => 1,
            VertexLabel::Bary(_) => 2,
            VertexLabel::Orbit(_) => 3,
        }
    }

    /// Members of a composite label; empty for atoms.
    pub fn members(&self) -> &[VertexLabel] {
        match self {
            VertexLabel::Atom(_) => &[],
            VertexLabel::Tuple(m) | VertexLabel::Bary(m) | VertexLabel::Orbit(m) => m,
        }
    }

    /// `Bary([v])` becomes `v`; every other label is returned unchanged.
    pub fn unwrap_singleton_bary(&self) -> VertexLabel {
        match self {
            VertexLabel::Bary(m) if m.len() == 1 => m[0].clone(),
            other => other.clone(),
        }
    }

    /// Parses the canonical serialization produced by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parser = Parser { src: text, pos: 0 };
        let label = parser.label()?;
        if parser.pos != text.len() {
            return Err(Error::Document(format!("trailing input in label {text:?}")));
        }
        Ok(label)
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (VertexLabel::Atom(a), VertexLabel::Atom(b)) => a.cmp(b),
            _ => self
                .kind_rank()
                .cmp(&other.kind_rank())
                .then_with(|| self.members().cmp(other.members())),
        }
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, items: &[VertexLabel], sep: &str) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(a) => f.write_str(a),
            VertexLabel::Tuple(m) => {
                f.write_str("(")?;
                write_joined(f, m, ",")?;
                f.write_str(")")
            }
            VertexLabel::Bary(m) => {
                f.write_str("{")?;
                write_joined(f, m, ",")?;
                f.write_str("}")
            }
            VertexLabel::Orbit(m) => {
                f.write_str("[")?;
                write_joined(f, m, "|")?;
                f.write_str("]")
            }
        }
    }
}

impl From<&str> for VertexLabel {
    /// Shorthand for tests and examples. Panics on a reserved character.
    fn from(s: &str) -> Self {
        VertexLabel::atom(s).expect("valid atom")
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::Document(format!("expected {c:?} at offset {} in {:?}", self.pos, self.src)))
        }
    }

    fn list(&mut self, close: char, sep: char) -> Result<Vec<VertexLabel>> {
        let mut items = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.label()?);
            match self.peek() {
                Some(c) if c == sep => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return Err(Error::Document(format!("unterminated list in {:?}", self.src))),
            }
        }
    }

    fn label(&mut self) -> Result<VertexLabel> {
        match self.peek() {
            Some('(') => {
                self.expect('(')?;
                Ok(VertexLabel::Tuple(self.list(')', ',')?))
            }
            Some('{') => {
                self.expect('{')?;
                Ok(VertexLabel::bary(self.list('}', ',')?))
            }
            Some('[') => {
                self.expect('[')?;
                Ok(VertexLabel::orbit(self.list(']', '|')?))
            }
            _ => {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if RESERVED.contains(&c) {
                        break;
                    }
                    self.pos += c.len_utf8();
                }
                VertexLabel::atom(&self.src[start..self.pos])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(s: &str) -> VertexLabel {
        VertexLabel::from(s)
    }

    #[test]
    fn kinds_order_before_members() {
        let atom = a("z");
        let tuple = VertexLabel::tuple(vec![a("0")]);
        let bary = VertexLabel::bary(vec![a("0")]);
        let orbit = VertexLabel::orbit(vec![a("0")]);
        assert!(atom < tuple && tuple < bary && bary < orbit);
    }

    #[test]
    fn bary_members_are_sorted_and_deduplicated() {
        let b = VertexLabel::bary(vec![a("2"), a("0"), a("2")]);
        assert_eq!(b.to_string(), "{0,2}");
    }

    #[test]
    fn canonical_strings() {
        let t = VertexLabel::tuple(vec![a("1"), a("0")]);
        assert_eq!(t.to_string(), "(1,0)");
        let o = VertexLabel::orbit(vec![VertexLabel::bary(vec![t.clone()]), VertexLabel::bary(vec![a("x")])]);
        assert_eq!(o.to_string(), "[{x}|{(1,0)}]");
    }

    #[test]
    fn reserved_characters_are_rejected() {
        assert!(VertexLabel::atom("a,b").is_err());
        assert!(VertexLabel::atom("").is_err());
    }

    fn arb_label() -> impl Strategy<Value = VertexLabel> {
        let leaf = "[a-z0-9']{1,3}".prop_map(VertexLabel::Atom);
        leaf.prop_recursive(3, 16, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 1..4).prop_map(VertexLabel::tuple),
                prop::collection::vec(inner.clone(), 1..4).prop_map(VertexLabel::bary),
                prop::collection::vec(inner, 1..4).prop_map(VertexLabel::orbit),
            ]
        })
    }

    proptest! {
        #[test]
        fn serialization_is_injective(x in arb_label(), y in arb_label()) {
            prop_assert_eq!(x == y, x.to_string() == y.to_string());
        }

        #[test]
        fn parse_inverts_display(x in arb_label()) {
            prop_assert_eq!(VertexLabel::parse(&x.to_string()).unwrap(), x);
        }
    }
}
