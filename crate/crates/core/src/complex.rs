//! Finite abstract simplicial complexes with a linear vertex order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// Position of a vertex in the owning complex's vertex order.
pub type VertexId = u32;

/// A nonempty set of vertices, stored sorted by the owning complex's order.
///
/// A `Simplex` is only meaningful together with the complex whose vertex
/// ids it refers to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Box<[VertexId]>);

impl Simplex {
    /// Sorts the ids; `None` if empty or if an id repeats.
    pub fn new(mut ids: Vec<VertexId>) -> Option<Self> {
        if ids.is_empty() {
            return None;
        }
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Simplex(ids.into_boxed_slice()))
    }

    pub(crate) fn from_sorted(ids: Vec<VertexId>) -> Self {
        debug_assert!(!ids.is_empty() && ids.windows(2).all(|w| w[0] < w[1]));
        Simplex(ids.into_boxed_slice())
    }

    pub fn vertex(id: VertexId) -> Self {
        Simplex(Box::new([id]))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The codimension-one faces, in the order obtained by dropping vertex
    /// 0, 1, 2, ... of the sorted vertex list. Empty for a vertex.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            let ids: Vec<VertexId> = self
                .0
                .iter()
                .enumerate()
                .filter_map(|(i, &v)| (i != skip).then_some(v))
                .collect();
            Simplex(ids.into_boxed_slice())
        })
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let k = self.0.len();
        (1u64..(1u64 << k))
            .map(|mask| {
                let ids: Vec<VertexId> =
                    (0..k).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect();
                Simplex(ids.into_boxed_slice())
            })
            .collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains_vertex(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut ids: Vec<VertexId> = self.0.iter().chain(other.0.iter()).copied().collect();
        ids.sort_unstable();
        ids.dedup();
        Simplex(ids.into_boxed_slice())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

/// Simplex counts by dimension; `counts[k]` is the number of k-simplices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl<const N: usize> PartialEq<[usize; N]> for FVector {
    fn eq(&self, other: &[usize; N]) -> bool {
        self.0 == other
    }
}

/// An immutable finite abstract simplicial complex.
///
/// The full downward-closed family of simplices is stored, grouped by
/// dimension and sorted lexicographically within each dimension. The vertex
/// order is the order of `vertex_labels()`; simplices store vertex ids in
/// that order.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<VertexLabel>,
    index: HashMap<VertexLabel, VertexId>,
    by_dim: Vec<Vec<Simplex>>,
    lookup: HashSet<Simplex>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices.iter().map(|l| l.to_string()).collect::<Vec<_>>())
            .field("f_vector", &self.f_vector().0)
            .finish()
    }
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            index: HashMap::new(),
            by_dim: Vec::new(),
            lookup: HashSet::new(),
        }
    }

    /// Closure of `facets` over the given vertex order. Every listed vertex
    /// becomes a 0-simplex even if no facet mentions it.
    pub fn from_facets<F, S>(vertex_order: Vec<VertexLabel>, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = S>,
        S: AsRef<[VertexLabel]>,
    {
        let mut index = HashMap::with_capacity(vertex_order.len());
        for (i, label) in vertex_order.iter().enumerate() {
            if index.insert(label.clone(), i as VertexId).is_some() {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        let mut closed = Vec::new();
        for facet in facets {
            let mut ids = Vec::with_capacity(facet.as_ref().len());
            for label in facet.as_ref() {
                let id = *index.get(label).ok_or_else(|| Error::UnknownLabel(label.clone()))?;
                ids.push(id);
            }
            ids.sort_unstable();
            if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateInSimplex(vertex_order[w[0] as usize].clone()));
            }
            if ids.is_empty() {
                return Err(Error::EmptySimplex);
            }
            closed.push(Simplex::from_sorted(ids));
        }
        Ok(Self::close(vertex_order, index, closed))
    }

    /// Closure of facets given by vertex ids. `vertices` must be
    /// duplicate-free and every id must be in range.
    pub(crate) fn from_id_facets(vertices: Vec<VertexLabel>, facets: impl IntoIterator<Item = Simplex>) -> Self {
        let index = vertices.iter().enumerate().map(|(i, l)| (l.clone(), i as VertexId)).collect();
        debug_assert_eq!(vertices.len(), HashMap::len(&index));
        Self::close(vertices, index, facets)
    }

    fn close(
        vertices: Vec<VertexLabel>,
        index: HashMap<VertexLabel, VertexId>,
        facets: impl IntoIterator<Item = Simplex>,
    ) -> Self {
        let mut levels: Vec<HashSet<Simplex>> = Vec::new();
        for s in facets {
            let d = s.dim();
            if levels.len() <= d {
                levels.resize_with(d + 1, HashSet::new);
            }
            levels[d].insert(s);
        }
        if !vertices.is_empty() && levels.is_empty() {
            levels.push(HashSet::new());
        }
        for d in (1..levels.len()).rev() {
            let (lower, upper) = levels.split_at_mut(d);
            let below = &mut lower[d - 1];
            for s in upper[0].iter() {
                for face in s.boundary_faces() {
                    below.insert(face);
                }
            }
        }
        if let Some(level0) = levels.first_mut() {
            for v in 0..vertices.len() {
                level0.insert(Simplex::vertex(v as VertexId));
            }
        }
        let mut lookup = HashSet::new();
        let by_dim: Vec<Vec<Simplex>> = levels
            .into_iter()
            .map(|set| {
                let mut v: Vec<Simplex> = set.into_iter().collect();
                v.sort_unstable();
                lookup.extend(v.iter().cloned());
                v
            })
            .collect();
        SimplicialComplex { vertices, index, by_dim, lookup }
    }

    pub fn vertex_labels(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.vertices[v as usize]
    }

    pub fn id_of(&self, label: &VertexLabel) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// The k-simplices in lexicographic order of their vertex ids.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All simplices, by increasing dimension.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.lookup.len()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.lookup.contains(s)
    }

    /// Whether `ids` (in any order) span a simplex; false on repeats.
    pub fn contains_ids(&self, ids: &[VertexId]) -> bool {
        Simplex::new(ids.to_vec()).is_some_and(|s| self.lookup.contains(&s))
    }

    /// `contains_simplex`: whether the label set is a simplex of the complex.
    /// Unknown labels and repeated labels give `false`.
    pub fn contains_simplex(&self, labels: &[VertexLabel]) -> bool {
        self.simplex_from_labels(labels).is_ok_and(|s| self.contains(&s))
    }

    /// Converts labels to a sorted id set without checking membership.
    pub fn simplex_from_labels(&self, labels: &[VertexLabel]) -> Result<Simplex> {
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            ids.push(self.id_of(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?);
        }
        let sorted = {
            let mut s = ids.clone();
            s.sort_unstable();
            s
        };
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateInSimplex(self.label(w[0]).clone()));
        }
        Simplex::new(ids).ok_or(Error::EmptySimplex)
    }

    pub fn labels_of(&self, s: &Simplex) -> Vec<VertexLabel> {
        s.vertices().iter().map(|&v| self.label(v).clone()).collect()
    }

    pub fn format_simplex(&self, s: &Simplex) -> String {
        let parts: Vec<String> = s.vertices().iter().map(|&v| self.label(v).to_string()).collect();
        format!("<{}>", parts.join(" "))
    }

    /// Maximal simplices, by increasing dimension.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: HashSet<&Simplex> = HashSet::new();
        let mut out = Vec::new();
        for k in (0..self.by_dim.len()).rev() {
            for s in &self.by_dim[k] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            if k > 0 {
                for s in &self.by_dim[k] {
                    for face in s.boundary_faces() {
                        if let Some(stored) = self.lookup.get(&face) {
                            covered.insert(stored);
                        }
                    }
                }
            }
        }
        out.reverse();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.by_dim.iter().map(Vec::len).collect())
    }

    /// Alternating sum of simplex counts, read directly off the store.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|s| if s.dim() % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Translates a simplex of `other` into this complex's ids by label.
    pub fn translate(&self, other: &SimplicialComplex, s: &Simplex) -> Option<Simplex> {
        let ids: Option<Vec<VertexId>> =
            s.vertices().iter().map(|&v| self.id_of(other.label(v))).collect();
        Simplex::new(ids?)
    }

    /// Keeps the simplices satisfying `keep`, which must be closed under
    /// taking faces. Vertices without a kept 0-simplex are dropped; the
    /// vertex order is the restriction of this one.
    pub fn subcomplex_where(&self, mut keep: impl FnMut(&Simplex) -> bool) -> SimplicialComplex {
        let kept: Vec<&Simplex> = self.iter().filter(|s| keep(s)).collect();
        let mut new_id = vec![VertexId::MAX; self.vertices.len()];
        let mut labels = Vec::new();
        for s in kept.iter().filter(|s| s.dim() == 0) {
            let v = s.vertices()[0] as usize;
            new_id[v] = 0;
        }
        for (v, slot) in new_id.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = labels.len() as VertexId;
                labels.push(self.vertices[v].clone());
            }
        }
        let facets = kept.into_iter().map(|s| {
            Simplex::from_sorted(s.vertices().iter().map(|&v| new_id[v as usize]).collect())
        });
        SimplicialComplex::from_id_facets(labels, facets.collect::<Vec<_>>())
    }

    /// All simplices whose vertices lie in `subset`.
    pub fn induced_subcomplex(&self, subset: &[VertexLabel]) -> Result<SimplicialComplex> {
        let mut inside = vec![false; self.vertices.len()];
        for l in subset {
            let v = self.id_of(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            inside[v as usize] = true;
        }
        Ok(self.subcomplex_where(|s| s.vertices().iter().all(|&v| inside[v as usize])))
    }

    /// Whether every simplex of `sub` is a simplex of `self` (by label).
    /// `sub` is closed by construction.
    pub fn is_subcomplex(&self, sub: &SimplicialComplex) -> bool {
        sub.iter().all(|s| self.translate(sub, s).is_some_and(|t| self.contains(&t)))
    }

    fn require_subcomplex(&self, sub: &SimplicialComplex) -> Result<()> {
        for s in sub.iter() {
            if !self.translate(sub, s).is_some_and(|t| self.contains(&t)) {
                return Err(Error::NotSubcomplex(format!(
                    "simplex {} is missing from the ambient complex",
                    sub.format_simplex(s)
                )));
            }
        }
        Ok(())
    }

    /// Membership mask of `sub`'s simplices, in this complex's ids.
    pub(crate) fn embed(&self, sub: &SimplicialComplex) -> Result<HashSet<Simplex>> {
        self.require_subcomplex(sub)?;
        Ok(sub.iter().filter_map(|s| self.translate(sub, s)).collect())
    }

    /// Whether every simplex of `self` with all vertices in `sub` lies in `sub`.
    pub fn is_full_subcomplex(&self, sub: &SimplicialComplex) -> Result<bool> {
        let inner = self.embed(sub)?;
        let in_sub: HashSet<VertexId> =
            sub.vertex_labels().iter().filter_map(|l| self.id_of(l)).collect();
        Ok(self
            .iter()
            .filter(|s| s.vertices().iter().all(|v| in_sub.contains(v)))
            .all(|s| inner.contains(s)))
    }

    /// Simplices not in `sub` all of whose proper faces are in `sub`, ordered
    /// by dimension and then lexicographically. Vertices outside `sub`
    /// qualify vacuously.
    pub fn minimal_nonfaces(&self, sub: &SimplicialComplex) -> Result<Vec<Simplex>> {
        let inner = self.embed(sub)?;
        Ok(self
            .iter()
            .filter(|s| !inner.contains(*s) && s.boundary_faces().all(|f| inner.contains(&f)))
            .cloned()
            .collect())
    }

    /// Same labels and same simplices as label sets, ignoring vertex order.
    pub fn label_eq(&self, other: &SimplicialComplex) -> bool {
        self.vertices.len() == other.vertices.len()
            && self.num_simplices() == other.num_simplices()
            && other.iter().all(|s| self.translate(other, s).is_some_and(|t| self.contains(&t)))
    }

    /// Renames every vertex; the vertex order is kept. Fails if two vertices
    /// receive the same name.
    pub fn relabel(&self, mut f: impl FnMut(&VertexLabel) -> VertexLabel) -> Result<SimplicialComplex> {
        let labels: Vec<VertexLabel> = self.vertices.iter().map(&mut f).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Ok(SimplicialComplex::from_id_facets(labels, self.facets()))
    }

    /// Every subcomplex (including the empty one), or `None` once more than
    /// `limit` have been found. Each keeps the restricted vertex order.
    pub fn subcomplexes(&self, limit: usize) -> Option<Vec<SimplicialComplex>> {
        let all: Vec<&Simplex> = self.iter().collect();
        let position: HashMap<&Simplex, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let faces: Vec<Vec<usize>> = all
            .iter()
            .map(|s| s.boundary_faces().map(|f| position[&f]).collect())
            .collect();
        let mut chosen = vec![false; all.len()];
        let mut found: Vec<Vec<bool>> = Vec::new();

        // Simplices come by increasing dimension, so faces are decided first.
        fn walk(i: usize, faces: &[Vec<usize>], chosen: &mut Vec<bool>, found: &mut Vec<Vec<bool>>, limit: usize) -> bool {
            if i == faces.len() {
                found.push(chosen.clone());
                return found.len() <= limit;
            }
            if !walk(i + 1, faces, chosen, found, limit) {
                return false;
            }
            if faces[i].iter().all(|&f| chosen[f]) {
                chosen[i] = true;
                let ok = walk(i + 1, faces, chosen, found, limit);
                chosen[i] = false;
                return ok;
            }
            true
        }

        if !walk(0, &faces, &mut chosen, &mut found, limit) {
            return None;
        }
        Some(
            found
                .into_iter()
                .map(|mask| {
                    let keep: HashSet<&Simplex> = all.iter().zip(&mask).filter(|e| *e.1).map(|e| *e.0).collect();
                    self.subcomplex_where(|s| keep.contains(s))
                })
                .collect(),
        )
    }

    /// Same complex with the vertex order given by `order`, a permutation of
    /// the existing labels.
    pub fn reordered(&self, order: Vec<VertexLabel>) -> Result<SimplicialComplex> {
        let facets: Vec<Vec<VertexLabel>> = self.facets().iter().map(|s| self.labels_of(s)).collect();
        if order.len() != self.vertices.len() {
            return Err(Error::Document("vertex order must list every vertex exactly once".into()));
        }
        SimplicialComplex::from_facets(order, facets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(names: &[&str]) -> Vec<VertexLabel> {
        names.iter().map(|&n| VertexLabel::from(n)).collect()
    }

    fn complex(verts: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(labels(verts), facets.iter().map(|f| labels(f))).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        complex(&["0", "1", "2"], &[&["0", "1"], &["0", "2"], &["1", "2"]])
    }

    fn triangle() -> SimplicialComplex {
        complex(&["0", "1", "2"], &[&["0", "1", "2"]])
    }

    fn subdivided_triangle() -> SimplicialComplex {
        complex(&["0", "1", "2", "c"], &[&["0", "1", "c"], &["0", "2", "c"], &["1", "2", "c"]])
    }

    #[test]
    fn facet_closure_counts() {
        assert_eq!(triangle_boundary().f_vector(), [3, 3]);
        assert_eq!(triangle().f_vector(), [3, 3, 1]);
        assert_eq!(subdivided_triangle().f_vector(), [4, 6, 3]);
    }

    #[test]
    fn build_errors() {
        let err = SimplicialComplex::from_facets(labels(&["0", "1"]), [labels(&["0", "7"])]);
        assert!(matches!(err, Err(Error::UnknownLabel(_))));
        let err = SimplicialComplex::from_facets(labels(&["0", "0"]), Vec::<Vec<VertexLabel>>::new());
        assert!(matches!(err, Err(Error::DuplicateVertex(_))));
        let err = SimplicialComplex::from_facets(labels(&["0", "1"]), [labels(&["0", "0"])]);
        assert!(matches!(err, Err(Error::DuplicateInSimplex(_))));
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let k = complex(&["0", "1", "2"], &[&["0", "1"]]);
        assert_eq!(k.f_vector(), [3, 1]);
        assert_eq!(k.facets().len(), 2);
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::empty();
        assert_eq!(k.dim(), None);
        assert_eq!(k.f_vector(), []);
        assert_eq!(k.euler_characteristic(), 0);
        assert!(triangle().is_subcomplex(&k));
        assert!(k.minimal_nonfaces(&k).unwrap().is_empty());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(triangle_boundary().euler_characteristic(), 0);
        assert_eq!(triangle().euler_characteristic(), 1);
        assert_eq!(subdivided_triangle().euler_characteristic(), 1);
    }

    #[test]
    fn simplex_membership() {
        let all = labels(&["0", "1", "2"]);
        assert!(!triangle_boundary().contains_simplex(&all));
        assert!(triangle().contains_simplex(&all));
        assert!(!triangle().contains_simplex(&labels(&["0", "9"])));
    }

    #[test]
    fn induced_subcomplexes() {
        let edge = triangle().induced_subcomplex(&labels(&["0", "1"])).unwrap();
        assert_eq!(edge.f_vector(), [2, 1]);
        let t = triangle();
        assert!(t.induced_subcomplex(t.vertex_labels()).unwrap().label_eq(&t));
        assert!(t.induced_subcomplex(&labels(&["q"])).is_err());
    }

    #[test]
    fn subcomplex_and_fullness() {
        assert!(triangle().is_subcomplex(&triangle_boundary()));
        assert!(!triangle_boundary().is_subcomplex(&triangle()));
        assert!(!triangle().is_full_subcomplex(&triangle_boundary()).unwrap());
        assert!(subdivided_triangle().is_full_subcomplex(&triangle_boundary()).unwrap());
        assert!(matches!(
            triangle_boundary().is_full_subcomplex(&triangle()),
            Err(Error::NotSubcomplex(_))
        ));
    }

    #[test]
    fn minimal_nonfaces_of_boundary() {
        let t = triangle();
        let m = t.minimal_nonfaces(&triangle_boundary()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(t.labels_of(&m[0]), labels(&["0", "1", "2"]));
        assert!(t.minimal_nonfaces(&t).unwrap().is_empty());
    }

    #[test]
    fn subcomplex_enumeration() {
        // Subcomplexes of an edge: empty, {0}, {1}, {0,1}, the edge.
        let edge = complex(&["0", "1"], &[&["0", "1"]]);
        assert_eq!(edge.subcomplexes(100).unwrap().len(), 5);
        let all = triangle_boundary().subcomplexes(1000).unwrap();
        assert!(all.iter().all(|a| triangle_boundary().is_subcomplex(a)));
        assert!(triangle().subcomplexes(3).is_none());
    }

    #[test]
    fn relabel_rejects_collisions() {
        let t = triangle();
        assert!(t.relabel(|_| VertexLabel::from("x")).is_err());
        let r = t.relabel(|l| VertexLabel::bary(vec![l.clone()])).unwrap();
        assert_eq!(r.f_vector(), [3, 3, 1]);
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=6).prop_flat_map(|n| {
            let facet = prop::collection::btree_set(0..n, 1..=n.min(4));
            prop::collection::vec(facet, 0..6).prop_map(move |facets| {
                let verts: Vec<VertexLabel> = (0..n).map(|i| VertexLabel::from(i.to_string().as_str())).collect();
                let fs: Vec<Vec<VertexLabel>> =
                    facets.iter().map(|f| f.iter().map(|&i| verts[i].clone()).collect()).collect();
                SimplicialComplex::from_facets(verts, fs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn stored_family_is_closed(k in arb_complex()) {
            for s in k.iter() {
                for face in s.faces() {
                    prop_assert!(k.contains(&face));
                }
            }
            for v in 0..k.vertex_count() {
                prop_assert!(k.contains(&Simplex::vertex(v as VertexId)));
            }
        }

        #[test]
        fn euler_matches_f_vector(k in arb_complex()) {
            prop_assert_eq!(k.f_vector().euler_characteristic(), k.euler_characteristic());
        }

        #[test]
        fn induced_subcomplex_is_monotone(k in arb_complex(), mask_a in 0u32..64, mask_b in 0u32..64) {
            let pick = |mask: u32| -> Vec<VertexLabel> {
                k.vertex_labels().iter().enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone()).collect()
            };
            let small = k.induced_subcomplex(&pick(mask_a & mask_b)).unwrap();
            let large = k.induced_subcomplex(&pick(mask_a)).unwrap();
            prop_assert!(large.is_subcomplex(&small));
            prop_assert!(k.is_full_subcomplex(&large).unwrap());
        }

        #[test]
        fn minimal_nonfaces_are_minimal(k in arb_complex(), pick in 0usize..1000) {
            // A random subcomplex: closure of a subset of the facets.
            let facets = k.facets();
            let chosen: Vec<Vec<VertexLabel>> = facets.iter().enumerate()
                .filter(|(i, _)| pick >> (i % 10) & 1 == 1)
                .map(|(_, s)| k.labels_of(s)).collect();
            let mut verts: Vec<VertexLabel> = chosen.iter().flatten().cloned().collect();
            verts.sort_by_key(|l| k.id_of(l));
            verts.dedup();
            let a = SimplicialComplex::from_facets(verts, chosen).unwrap();
            let inner = k.embed(&a).unwrap();
            let full = k.is_full_subcomplex(&a).unwrap();
            for m in k.minimal_nonfaces(&a).unwrap() {
                prop_assert!(!inner.contains(&m));
                for f in m.faces().into_iter().filter(|f| f != &m) {
                    prop_assert!(inner.contains(&f));
                }
                if full {
                    prop_assert_eq!(m.dim(), 0);
                }
            }
        }
    }
}
