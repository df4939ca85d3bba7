//! Nerves of covers, computed combinatorially.
//!
//! For the open-star cover `{U_σ : σ a minimal non-face of A in X}` only the
//! intersection rule is needed: `U_σ0 ∩ ... ∩ U_σd` is nonempty exactly when
//! `σ0 ∪ ... ∪ σd` is a simplex of `X`, and then it equals `U` of the union.

use std::collections::HashSet;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::constructions::simplicial_difference;
use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// What generates one member of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverGenerator {
    /// The open star of a simplex of the ambient complex.
    OpenStar(Simplex),
    /// The i-th part of a cover by subcomplexes.
    Part(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverElement {
    pub label: VertexLabel,
    pub generator: CoverGenerator,
}

/// The index set of a cover, sorted by label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverIndex {
    pub elements: Vec<CoverElement>,
}

impl CoverIndex {
    /// The cover of `|X| - |A|` by open stars of minimal non-faces.
    pub fn minimal_nonfaces(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<Self> {
        let mut elements: Vec<CoverElement> = x
            .minimal_nonfaces(a)?
            .into_iter()
            .map(|s| CoverElement { label: VertexLabel::bary(x.labels_of(&s)), generator: CoverGenerator::OpenStar(s) })
            .collect();
        elements.sort_by(|p, q| p.label.cmp(&q.label));
        Ok(CoverIndex { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> Vec<VertexLabel> {
        self.elements.iter().map(|e| e.label.clone()).collect()
    }
}

/// Whether `U_σ0 ∩ ... ∩ U_σd` is nonempty.
pub fn open_stars_meet(x: &SimplicialComplex, generators: &[Simplex]) -> bool {
    let Some((first, rest)) = generators.split_first() else {
        return false;
    };
    let union = rest.iter().fold(first.clone(), |u, s| u.union(s));
    x.contains(&union)
}

/// The nerve of the minimal-non-face cover, on `Bary` labels.
pub fn minimal_nonface_nerve(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<SimplicialComplex> {
    let cover = CoverIndex::minimal_nonfaces(x, a)?;
    let generators: Vec<&Simplex> = cover
        .elements
        .iter()
        .map(|e| match &e.generator {
            CoverGenerator::OpenStar(s) => s,
            CoverGenerator::Part(_) => unreachable!("open-star cover"),
        })
        .collect();

    fn extend(
        x: &SimplicialComplex,
        generators: &[&Simplex],
        chosen: &mut Vec<VertexId>,
        union: &Simplex,
        out: &mut Vec<Simplex>,
    ) {
        out.push(Simplex::from_sorted(chosen.clone()));
        let next = chosen.last().map_or(0, |&l| l as usize + 1);
        for j in next..generators.len() {
            let wider = union.union(generators[j]);
            if x.contains(&wider) {
                chosen.push(j as VertexId);
                extend(x, generators, chosen, &wider, out);
                chosen.pop();
            }
        }
    }

    let mut simplices = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        extend(x, &generators, &mut vec![i as VertexId], g, &mut simplices);
    }
    Ok(SimplicialComplex::from_id_facets(cover.labels(), simplices))
}

/// The nerve of a cover of `k` by subcomplexes: parts `i_0, ..., i_d` span a
/// simplex when they share a simplex, i.e. a vertex. Nerve vertices are the
/// atoms `0, 1, ...` in part order.
pub fn nerve_of_subcomplex_cover(k: &SimplicialComplex, parts: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let mut vertex_sets: Vec<HashSet<VertexId>> = Vec::with_capacity(parts.len());
    let mut covered: HashSet<Simplex> = HashSet::new();
    for part in parts {
        covered.extend(k.embed(part)?);
        vertex_sets.push(part.vertex_labels().iter().filter_map(|l| k.id_of(l)).collect());
    }
    if let Some(missing) = k.iter().find(|s| !covered.contains(*s)) {
        return Err(Error::CoverIncomplete(k.format_simplex(missing)));
    }

    fn extend(sets: &[HashSet<VertexId>], chosen: &mut Vec<VertexId>, common: &HashSet<VertexId>, out: &mut Vec<Simplex>) {
        out.push(Simplex::from_sorted(chosen.clone()));
        let next = chosen.last().map_or(0, |&l| l as usize + 1);
        for j in next..sets.len() {
            let meet: HashSet<VertexId> = common.intersection(&sets[j]).copied().collect();
            if !meet.is_empty() {
                chosen.push(j as VertexId);
                extend(sets, chosen, &meet, out);
                chosen.pop();
            }
        }
    }

    let mut simplices = Vec::new();
    for (i, set) in vertex_sets.iter().enumerate() {
        if !set.is_empty() {
            extend(&vertex_sets, &mut vec![i as VertexId], set, &mut simplices);
        }
    }
    let labels: Vec<VertexLabel> = (0..parts.len()).map(|i| VertexLabel::Atom(i.to_string())).collect();
    let nerve = SimplicialComplex::from_id_facets(labels, simplices);
    // Empty parts meet nothing and contribute no vertex.
    Ok(nerve.subcomplex_where(|s| s.vertices().iter().all(|&v| !vertex_sets[v as usize].is_empty())))
}

/// Whether the minimal-non-face nerve and the simplicial difference agree
/// as labelled complexes.
pub fn nerve_matches_difference(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<bool> {
    Ok(minimal_nonface_nerve(x, a)?.label_eq(&simplicial_difference(x, a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn part(k: &SimplicialComplex, names: &[&[&str]]) -> SimplicialComplex {
        let facets: Vec<Vec<VertexLabel>> =
            names.iter().map(|f| f.iter().map(|&n| VertexLabel::from(n)).collect()).collect();
        let mut verts: Vec<VertexLabel> = facets.iter().flatten().cloned().collect();
        verts.sort_by_key(|l| k.id_of(l));
        verts.dedup();
        SimplicialComplex::from_facets(verts, facets).unwrap()
    }

    #[test]
    fn triangle_minus_boundary_is_a_point() {
        let n = minimal_nonface_nerve(&standard::simplex(2), &standard::boundary(2)).unwrap();
        assert_eq!(n.f_vector(), [1]);
        assert!(nerve_matches_difference(&standard::simplex(2), &standard::boundary(2)).unwrap());
    }

    #[test]
    fn nerve_of_whole_complex_is_empty() {
        let x = standard::boundary(2);
        assert!(minimal_nonface_nerve(&x, &x).unwrap().is_empty());
        assert!(nerve_matches_difference(&x, &SimplicialComplex::empty()).unwrap());
    }

    #[test]
    fn interval_halves() {
        let k = standard::path(2);
        let parts = [part(&k, &[&["0", "1"]]), part(&k, &[&["1", "2"]])];
        assert_eq!(nerve_of_subcomplex_cover(&k, &parts).unwrap().f_vector(), [2, 1]);
    }

    #[test]
    fn circle_by_three_edges() {
        let k = standard::boundary(2);
        let parts = [part(&k, &[&["0", "1"]]), part(&k, &[&["0", "2"]]), part(&k, &[&["1", "2"]])];
        assert_eq!(nerve_of_subcomplex_cover(&k, &parts).unwrap().f_vector(), [3, 3]);
    }

    #[test]
    fn single_part_cover() {
        let k = standard::projective_plane();
        assert_eq!(nerve_of_subcomplex_cover(&k, std::slice::from_ref(&k)).unwrap().f_vector(), [1]);
    }

    #[test]
    fn incomplete_cover_is_rejected() {
        let k = standard::boundary(2);
        let parts = [part(&k, &[&["0", "1"]]), part(&k, &[&["1", "2"]])];
        assert!(matches!(nerve_of_subcomplex_cover(&k, &parts), Err(Error::CoverIncomplete(_))));
        let bad = [standard::simplex(2)];
        assert!(matches!(nerve_of_subcomplex_cover(&k, &bad), Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn open_star_rule_matches_union() {
        let x = standard::simplex(2);
        let v = |i: u32| Simplex::vertex(i);
        assert!(open_stars_meet(&x, &[v(0), v(1), v(2)]));
        let circle = standard::boundary(2);
        assert!(!open_stars_meet(&circle, &[v(0), v(1), v(2)]));
        assert!(!open_stars_meet(&circle, &[]));
    }
}
