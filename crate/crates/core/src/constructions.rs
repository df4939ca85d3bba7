//! Builders for the configuration-space models: ordered powers, the fat
//! diagonal, barycentric subdivision, simplicial difference and the
//! complement model, plus the composite models `C(X,n)` and `C_bs(X,n)`.

use std::collections::HashMap;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// A simplex of an ordered power written as an `n x k` matrix of base
/// vertex ids: one row per factor, one column per vertex of the power.
///
/// Columns are kept in lexicographic order, which is the only order that can
/// make every row non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSimplexMatrix {
    rows: Vec<Vec<VertexId>>,
}

impl PowerSimplexMatrix {
    /// Builds the matrix from columns given as tuples of base vertex ids.
    pub fn from_id_columns(n: usize, mut columns: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.len() == n));
        columns.sort();
        let rows = (0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        PowerSimplexMatrix { rows }
    }

    /// Builds the matrix from `Tuple` labels over the vertices of `base`.
    pub fn from_columns(base: &SimplicialComplex, n: usize, columns: &[VertexLabel]) -> Result<Self> {
        let mut cols = Vec::with_capacity(columns.len());
        for col in columns {
            let coords = match col {
                VertexLabel::Tuple(c) if c.len() == n => c,
                other => return Err(Error::MalformedTuple(other.clone(), n)),
            };
            let ids = coords
                .iter()
                .map(|l| base.id_of(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
                .collect::<Result<Vec<_>>>()?;
            cols.push(ids);
        }
        Ok(Self::from_id_columns(n, cols))
    }

    pub fn rows(&self) -> &[Vec<VertexId>] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column(&self, j: usize) -> Vec<VertexId> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Distinct columns, every row non-decreasing, every row's value set a
    /// simplex of `base`.
    pub fn is_simplex_of_power(&self, base: &SimplicialComplex) -> bool {
        let k = self.num_columns();
        if k == 0 {
            return false;
        }
        let distinct = (1..k).all(|j| self.column(j - 1) != self.column(j));
        distinct
            && self.rows.iter().all(|row| {
                row.windows(2).all(|w| w[0] <= w[1]) && {
                    let mut set = row.clone();
                    set.dedup();
                    base.contains_ids(&set)
                }
            })
    }

    /// Whether two distinct rows coincide.
    pub fn has_equal_rows(&self) -> bool {
        let n = self.rows.len();
        (0..n).any(|i| (i + 1..n).any(|j| self.rows[i] == self.rows[j]))
    }
}

/// Coordinates of the power vertex `id` over a base with `base_len` vertices.
fn decode_tuple(mut id: usize, base_len: usize, n: usize) -> Vec<VertexId> {
    let mut coords = vec![0; n];
    for slot in coords.iter_mut().rev() {
        *slot = (id % base_len) as VertexId;
        id /= base_len;
    }
    coords
}

fn encode_tuple(coords: &[VertexId], base_len: usize) -> VertexId {
    coords.iter().fold(0usize, |acc, &c| acc * base_len + c as usize) as VertexId
}

/// `X^n` with the order-product structure: vertices are n-tuples in
/// lexicographic order, simplices are the vertex sets whose matrix has
/// distinct columns and rows that are non-decreasing simplices of `X`.
pub fn ordered_power(base: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let m = base.vertex_count();
    if m == 0 {
        return Ok(SimplicialComplex::empty());
    }
    let count = (m as u128).checked_pow(n as u32).filter(|&c| c < VertexId::MAX as u128);
    let count = count.ok_or(Error::TooLarge { count: u128::MAX, cap: VertexId::MAX as u128 })? as usize;
    let labels: Vec<VertexLabel> = (0..count)
        .map(|id| {
            let coords = decode_tuple(id, m, n);
            VertexLabel::tuple(coords.iter().map(|&c| base.label(c).clone()).collect())
        })
        .collect();

    let facets = base.facets();
    let mut maximal = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let chosen: Vec<&[VertexId]> = choice.iter().map(|&f| facets[f].vertices()).collect();
        staircases(&chosen, m, &mut maximal);
        // Advance the facet tuple like an odometer.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(SimplicialComplex::from_id_facets(labels, maximal));
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < facets.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Pushes every staircase (monotone lattice path) triangulating the product
/// of the given simplices.
fn staircases(factors: &[&[VertexId]], base_len: usize, out: &mut Vec<Simplex>) {
    fn walk(
        factors: &[&[VertexId]],
        pos: &mut Vec<usize>,
        path: &mut Vec<VertexId>,
        base_len: usize,
        out: &mut Vec<Simplex>,
    ) {
        let mut moved = false;
        for i in 0..factors.len() {
            if pos[i] + 1 < factors[i].len() {
                moved = true;
                pos[i] += 1;
                let coords: Vec<VertexId> = pos.iter().zip(factors).map(|(&p, f)| f[p]).collect();
                path.push(encode_tuple(&coords, base_len));
                walk(factors, pos, path, base_len, out);
                path.pop();
                pos[i] -= 1;
            }
        }
        if !moved {
            let mut ids = path.clone();
            ids.sort_unstable();
            out.push(Simplex::from_sorted(ids));
        }
    }
    let mut pos = vec![0; factors.len()];
    let start: Vec<VertexId> = factors.iter().map(|f| f[0]).collect();
    let mut path = vec![encode_tuple(&start, base_len)];
    walk(factors, &mut pos, &mut path, base_len, out);
}

/// Whether the columns (n-tuples over `base`) span a simplex of `X^n`.
pub fn is_power_simplex(base: &SimplicialComplex, n: usize, columns: &[VertexLabel]) -> Result<bool> {
    Ok(PowerSimplexMatrix::from_columns(base, n, columns)?.is_simplex_of_power(base))
}

/// Reads the matrix of a simplex of `ordered_power(base, n)`.
pub fn power_matrix(power: &SimplicialComplex, base: &SimplicialComplex, n: usize, s: &Simplex) -> Result<PowerSimplexMatrix> {
    PowerSimplexMatrix::from_columns(base, n, &power.labels_of(s))
}

/// The fat diagonal `F_n`: simplices of `X^n` whose matrix has two equal
/// rows. Empty for `n = 1`.
pub fn fat_diagonal(base: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    let power = ordered_power(base, n)?;
    Ok(fat_diagonal_of_power(&power, base.vertex_count(), n))
}

pub(crate) fn fat_diagonal_of_power(power: &SimplicialComplex, base_len: usize, n: usize) -> SimplicialComplex {
    power.subcomplex_where(|s| {
        let cols: Vec<Vec<VertexId>> =
            s.vertices().iter().map(|&v| decode_tuple(v as usize, base_len, n)).collect();
        PowerSimplexMatrix::from_id_columns(n, cols).has_equal_rows()
    })
}

/// Exact simplex count of `bs(K)`: a k-simplex is the top of
/// `Fubini(k + 1)` chains.
pub fn barycentric_subdivision_size(k: &SimplicialComplex) -> u128 {
    let f = k.f_vector();
    let mut fubini: Vec<u128> = vec![1];
    for m in 1..=f.0.len() {
        // a(m) = sum_{j=1..m} C(m, j) a(m - j)
        let mut total = 0u128;
        let mut binom = 1u128;
        for j in 1..=m {
            binom = binom * (m - j + 1) as u128 / j as u128;
            total = total.saturating_add(binom.saturating_mul(fubini[m - j]));
        }
        fubini.push(total);
    }
    f.0.iter().enumerate().map(|(d, &c)| (c as u128).saturating_mul(fubini[d + 1])).sum()
}

fn for_each_permutation(items: &mut Vec<VertexId>, k: usize, visit: &mut impl FnMut(&[VertexId])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// The barycentric subdivision: one `Bary` vertex per simplex, simplices are
/// chains under strict inclusion. Vertices are ordered by reverse
/// inclusion: higher-dimensional barycenters first, ties broken by label.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let mut entries: Vec<(usize, VertexLabel, &Simplex)> = k
        .iter()
        .map(|s| (s.dim(), VertexLabel::bary(k.labels_of(s)), s))
        .collect();
    entries.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let id_of: HashMap<&Simplex, VertexId> =
        entries.iter().enumerate().map(|(i, e)| (e.2, i as VertexId)).collect();

    let mut chains = Vec::new();
    for facet in k.facets() {
        let mut verts = facet.vertices().to_vec();
        for_each_permutation(&mut verts, 0, &mut |perm| {
            let mut ids = Vec::with_capacity(perm.len());
            for len in 1..=perm.len() {
                let face = Simplex::new(perm[..len].to_vec()).expect("distinct vertices");
                ids.push(id_of[&face]);
            }
            chains.push(Simplex::new(ids).expect("distinct barycenters"));
        });
    }
    let labels = entries.into_iter().map(|e| e.1).collect();
    SimplicialComplex::from_id_facets(labels, chains)
}

/// The simplicial difference `X ⊖ A`: vertices are the minimal non-faces of
/// `A` in `X` (as `Bary` labels), and a collection of them is a simplex
/// exactly when its union is a simplex of `X`.
pub fn simplicial_difference(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<SimplicialComplex> {
    let minimal = x.minimal_nonfaces(a)?;
    let labels: Vec<VertexLabel> = minimal.iter().map(|s| VertexLabel::bary(x.labels_of(s))).collect();
    let mut order: Vec<usize> = (0..minimal.len()).collect();
    order.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
    let mut new_id = vec![0 as VertexId; minimal.len()];
    for (pos, &i) in order.iter().enumerate() {
        new_id[i] = pos as VertexId;
    }
    // A family has union in X iff it sits inside one facet of X.
    let mut facets = Vec::new();
    for tau in x.facets() {
        let inside: Vec<VertexId> = minimal
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_face_of(&tau))
            .map(|(i, _)| new_id[i])
            .collect();
        if let Some(s) = Simplex::new(inside) {
            facets.push(s);
        }
    }
    let sorted_labels = order.iter().map(|&i| labels[i].clone()).collect();
    Ok(SimplicialComplex::from_id_facets(sorted_labels, facets))
}

/// Result of [`complement_model`].
#[derive(Clone, Debug)]
pub struct ComplementModel {
    pub complex: SimplicialComplex,
    /// Whether `A` was full in `X`. When it is not, the complement is not a
    /// deformation retract of `|X| - |A|` and should be read with care.
    pub full: bool,
}

impl ComplementModel {
    pub fn warning(&self) -> Option<&'static str> {
        (!self.full).then_some("subcomplex is not full; the complement model need not be homotopy equivalent to |X|-|A|")
    }
}

/// `C_{X,A}`: the simplices of `X` with no vertex in `A`.
pub fn complement_model(x: &SimplicialComplex, a: &SimplicialComplex) -> Result<ComplementModel> {
    let full = x.is_full_subcomplex(a)?;
    let mut in_a = vec![false; x.vertex_count()];
    for l in a.vertex_labels() {
        if let Some(v) = x.id_of(l) {
            in_a[v as usize] = true;
        }
    }
    let complex = x.subcomplex_where(|s| s.vertices().iter().all(|&v| !in_a[v as usize]));
    Ok(ComplementModel { complex, full })
}

/// `C(X,n) = X^n ⊖ F_n`.
pub fn conf_model(base: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    let power = ordered_power(base, n)?;
    let fat = fat_diagonal_of_power(&power, base.vertex_count(), n);
    simplicial_difference(&power, &fat)
}

/// `C_bs(X,n) = C_{bs(X^n), bs(F_n)}`.
pub fn conf_model_bs(base: &SimplicialComplex, n: usize) -> Result<SimplicialComplex> {
    let power = ordered_power(base, n)?;
    let fat = fat_diagonal_of_power(&power, base.vertex_count(), n);
    Ok(complement_model(&barycentric_subdivision(&power), &barycentric_subdivision(&fat))?.complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn tuple(coords: &[&str]) -> VertexLabel {
        VertexLabel::tuple(coords.iter().map(|&c| VertexLabel::from(c)).collect())
    }

    #[test]
    fn power_of_one_is_a_copy() {
        let x = standard::boundary(2);
        let p = ordered_power(&x, 1).unwrap();
        assert_eq!(p.f_vector(), [3, 3]);
        assert!(p.contains_simplex(&[tuple(&["0"]), tuple(&["2"])]));
    }

    #[test]
    fn power_of_edge_is_split_square() {
        let p = ordered_power(&standard::simplex(1), 2).unwrap();
        assert_eq!(p.f_vector(), [4, 5, 2]);
        assert!(p.contains_simplex(&[tuple(&["0", "0"]), tuple(&["1", "1"])]));
        assert!(!p.contains_simplex(&[tuple(&["0", "1"]), tuple(&["1", "0"])]));
    }

    #[test]
    fn zero_power_is_rejected() {
        assert!(matches!(ordered_power(&standard::simplex(1), 0), Err(Error::ZeroPower)));
    }

    #[test]
    fn power_membership_examples() {
        let x = standard::boundary(2);
        assert!(is_power_simplex(&x, 2, &[tuple(&["0", "0"]), tuple(&["2", "1"])]).unwrap());
        assert!(!is_power_simplex(&x, 2, &[tuple(&["0", "1"]), tuple(&["1", "0"])]).unwrap());
        assert!(is_power_simplex(&x, 2, &[tuple(&["0", "0"])]).unwrap());
        assert!(matches!(
            is_power_simplex(&x, 2, &[tuple(&["0"])]),
            Err(Error::MalformedTuple(_, 2))
        ));
    }

    #[test]
    fn fat_diagonal_of_circle_square() {
        let x = standard::boundary(2);
        let f = fat_diagonal(&x, 2).unwrap();
        assert_eq!(f.f_vector(), [3, 3]);
        assert!(f.contains_simplex(&[tuple(&["0", "0"]), tuple(&["1", "1"])]));
        assert!(fat_diagonal(&x, 1).unwrap().is_empty());
    }

    #[test]
    fn subdivision_small_cases() {
        assert_eq!(barycentric_subdivision(&standard::simplex(1)).f_vector(), [3, 2]);
        assert_eq!(barycentric_subdivision(&standard::boundary(2)).f_vector(), [6, 6]);
        assert!(barycentric_subdivision(&SimplicialComplex::empty()).is_empty());
    }

    #[test]
    fn subdivision_vertex_order_is_reverse_inclusion() {
        let bs = barycentric_subdivision(&standard::simplex(1));
        let names: Vec<String> = bs.vertex_labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["{0,1}", "{0}", "{1}"]);
    }

    #[test]
    fn subdivision_size_formula() {
        for k in [standard::boundary(2), standard::simplex(3), standard::projective_plane()] {
            let bs = barycentric_subdivision(&k);
            assert_eq!(barycentric_subdivision_size(&k), bs.num_simplices() as u128);
        }
    }

    #[test]
    fn difference_of_triangle_and_boundary_is_a_point() {
        let d = simplicial_difference(&standard::simplex(2), &standard::boundary(2)).unwrap();
        assert_eq!(d.f_vector(), [1]);
        assert_eq!(d.vertex_labels()[0].to_string(), "{0,1,2}");
    }

    #[test]
    fn difference_with_empty_subcomplex_copies() {
        let x = standard::boundary(2);
        let d = simplicial_difference(&x, &SimplicialComplex::empty()).unwrap();
        let back = d.relabel(VertexLabel::unwrap_singleton_bary).unwrap();
        assert!(back.label_eq(&x));
    }

    #[test]
    fn difference_requires_subcomplex() {
        let r = simplicial_difference(&standard::boundary(2), &standard::simplex(2));
        assert!(matches!(r, Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn complement_of_subdivided_triangle() {
        let c = complement_model(&standard::subdivided_triangle(), &standard::boundary(2)).unwrap();
        assert!(c.full && c.warning().is_none());
        assert_eq!(c.complex.f_vector(), [1]);
        assert_eq!(c.complex.vertex_labels()[0], VertexLabel::from("c"));
    }

    #[test]
    fn complement_warns_when_not_full() {
        let c = complement_model(&standard::simplex(2), &standard::boundary(2)).unwrap();
        assert!(!c.full);
        assert!(c.warning().is_some());
        assert!(c.complex.is_empty());
        let x = standard::boundary(2);
        assert!(complement_model(&x, &SimplicialComplex::empty()).unwrap().complex.label_eq(&x));
    }

    #[test]
    fn configuration_models_of_a_point() {
        let pt = standard::simplex(0);
        assert_eq!(conf_model(&pt, 1).unwrap().f_vector(), [1]);
        assert_eq!(conf_model_bs(&pt, 1).unwrap().f_vector(), [1]);
    }
}
