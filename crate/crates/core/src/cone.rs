//! Pointed full-dimensional rational cones.
//!
//! A [`Cone`] carries both descriptions: primitive extreme-ray generators
//! and primitive inward facet normals. Faces are identified by the set of
//! facets they lie on, which makes them canonical keys for memoization.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, dot, LatticeVector, LinearForm};
use crate::poset::GradedPoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    generators: Vec<LatticeVector>,
    facets: Vec<LinearForm>,
    degree_form: Option<LinearForm>,
}

impl Cone {
    /// Builds the cone spanned by `gens` in a lattice of rank `rank`.
    ///
    /// Facet normals come from a double-description pass; generators are
    /// reduced to primitive extreme rays. Errors if the cone is not pointed
    /// or not full-dimensional.
    pub fn from_generators(rank: usize, gens: &[LatticeVector]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::structure("cone of rank 0"));
        }
        let mut rays: Vec<Vec<BigInt>> = Vec::new();
        let mut seen = BTreeSet::new();
        for g in gens {
            if g.rank() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    got: g.rank(),
                });
            }
            if g.is_zero() {
                continue;
            }
            let p = g.primitive().into_coords();
            if seen.insert(p.clone()) {
                rays.push(p);
            }
        }
        if lattice::rank(&rays) < rank {
            return Err(Error::structure("generators do not span the ambient space"));
        }
        let facets = dual_extreme_rays(&rays, rank);
        if lattice::rank(&facets) < rank {
            return Err(Error::structure("cone is not pointed"));
        }
        let generators: Vec<LatticeVector> = rays
            .into_iter()
            .filter(|g| {
                let tight: Vec<Vec<BigInt>> = facets
                    .iter()
                    .filter(|f| dot(g, f).is_zero())
                    .cloned()
                    .collect();
                lattice::rank(&tight) == rank - 1
            })
            .map(LatticeVector::new)
            .collect();
        let facets: Vec<LinearForm> = facets.into_iter().map(LinearForm::new).collect();
        Ok(Self::assemble(rank, generators, facets))
    }

    fn assemble(
        rank: usize,
        mut generators: Vec<LatticeVector>,
        mut facets: Vec<LinearForm>,
    ) -> Self {
        generators.sort();
        facets.sort();
        let degree_form = lattice::solve_degree_form(&generators);
        Cone {
            rank,
            generators,
            facets,
            degree_form,
        }
    }

    /// The dual cone `C* = {z : <e, z> >= 0 for all e in C}`.
    ///
    /// The facet normals of `C` are the generators of `C*` and vice versa;
    /// the index order of both lists is preserved across the swap.
    pub fn dual(&self) -> Cone {
        let generators: Vec<LatticeVector> = self
            .facets
            .iter()
            .cloned()
            .map(LinearForm::into_vector)
            .collect();
        let facets: Vec<LinearForm> = self
            .generators
            .iter()
            .cloned()
            .map(LatticeVector::into_form)
            .collect();
        let degree_form = lattice::solve_degree_form(&generators);
        Cone {
            rank: self.rank,
            generators,
            facets,
            degree_form,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn facets(&self) -> &[LinearForm] {
        &self.facets
    }

    /// The form `n_C` with `<g, n_C> = 1` on every primitive ray, if the
    /// cone is Gorenstein.
    pub fn degree_form(&self) -> Option<&LinearForm> {
        self.degree_form.as_ref()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.degree_form.is_some()
    }

    /// Degree form and supporting polytope `Δ(C) = {z in C : <z, n_C> = 1}`.
    pub fn gorenstein_data(&self) -> Option<(LinearForm, Polytope)> {
        let n = self.degree_form.clone()?;
        let poly = Polytope {
            rank: self.rank,
            vertices: self.generators.clone(),
        };
        Some((n, poly))
    }

    /// Index `r = <m_{C*}, n_C>` if both `C` and `C*` are Gorenstein.
    pub fn reflexive_index(&self) -> Option<BigInt> {
        let n = self.degree_form.as_ref()?;
        let dual_gens: Vec<LatticeVector> = self
            .facets
            .iter()
            .cloned()
            .map(LinearForm::into_vector)
            .collect();
        let m = lattice::solve_degree_form(&dual_gens)?;
        Some(dot(m.coords(), n.coords()))
    }

    /// True if `p` satisfies every facet inequality.
    pub fn contains(&self, p: &LatticeVector) -> bool {
        self.facets
            .iter()
            .all(|f| !dot(p.coords(), f.coords()).is_negative())
    }

    /// Degree `<m, n_C>` of a point.
    pub fn degree(&self, m: &LatticeVector) -> Result<BigInt> {
        let n = self.degree_form.as_ref().ok_or(Error::NotGorenstein)?;
        lattice::pair(m, n)
    }

    /// Set of facets on which generator `i` lies.
    fn facets_of_generator(&self, i: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.facets.len());
        for (j, f) in self.facets.iter().enumerate() {
            if dot(self.generators[i].coords(), f.coords()).is_zero() {
                s.insert(j);
            }
        }
        s
    }

    /// Set of generators lying on facet `j`.
    fn generators_of_facet(&self, j: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if dot(g.coords(), self.facets[j].coords()).is_zero() {
                s.insert(i);
            }
        }
        s
    }

    /// Enumerates all faces and returns the face lattice.
    pub fn face_lattice(&self) -> FaceLattice {
        let nf = self.facets.len();
        let ng = self.generators.len();
        let on_facet: Vec<FixedBitSet> = (0..nf).map(|j| self.generators_of_facet(j)).collect();
        let gen_facets: Vec<FixedBitSet> = (0..ng).map(|i| self.facets_of_generator(i)).collect();

        // closure of a generator set: facets containing all of it, then the
        // generators on all of those facets
        let close = |gens: &FixedBitSet| -> (FixedBitSet, FixedBitSet) {
            let mut incident = FixedBitSet::with_capacity(nf);
            incident.insert_range(..);
            for i in gens.ones() {
                incident.intersect_with(&gen_facets[i]);
            }
            let mut closed = FixedBitSet::with_capacity(ng);
            closed.insert_range(..);
            for j in incident.ones() {
                closed.intersect_with(&on_facet[j]);
            }
            (incident, closed)
        };

        let mut all = FixedBitSet::with_capacity(ng);
        all.insert_range(..);
        let top = close(&all);
        let mut found: HashMap<FixedBitSet, FixedBitSet> = HashMap::new();
        found.insert(top.0.clone(), top.1.clone());
        let mut queue = vec![top];
        while let Some((incident, gens)) = queue.pop() {
            for j in 0..nf {
                if incident.contains(j) {
                    continue;
                }
                let mut sub = gens.clone();
                sub.intersect_with(&on_facet[j]);
                let (inc, closed) = close(&sub);
                if !found.contains_key(&inc) {
                    found.insert(inc.clone(), closed.clone());
                    queue.push((inc, closed));
                }
            }
        }

        let mut faces: Vec<Face> = found
            .into_iter()
            .map(|(incident, gens)| {
                let rows: Vec<Vec<BigInt>> = gens
                    .ones()
                    .map(|i| self.generators[i].coords().to_vec())
                    .collect();
                let dim = if rows.is_empty() {
                    0
                } else {
                    lattice::rank(&rows)
                };
                Face {
                    incident,
                    generators: gens,
                    dim,
                }
            })
            .collect();
        faces.sort_by(|a, b| {
            a.dim
                .cmp(&b.dim)
                .then_with(|| a.generators.ones().cmp(b.generators.ones()))
        });
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.incident.clone(), i))
            .collect();
        let poset = GradedPoset::from_order(faces.len(), |x, y| {
            faces[x].generators.is_subset(&faces[y].generators)
        })
        .expect("face poset of a pointed cone is graded");
        FaceLattice {
            poset,
            faces,
            index,
        }
    }
}

/// Extreme rays of `{z : <a_i, z> >= 0}` for the rows `a_i`, which must
/// span `Q^rank`. Double description, adding one constraint at a time.
fn dual_extreme_rays(rows: &[Vec<BigInt>], rank: usize) -> Vec<Vec<BigInt>> {
    let basis = lattice::independent_rows(rows);
    debug_assert_eq!(basis.len(), rank);
    let square: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = lattice::inverse(&square).expect("independent rows form an invertible matrix");
    let mut rays: Vec<Vec<BigInt>> = (0..rank)
        .map(|j| {
            let col: Vec<_> = (0..rank).map(|i| inv[i][j].clone()).collect();
            lattice::clear_denominators(&col)
        })
        .collect();

    let mut processed: Vec<usize> = basis.clone();
    let zero_set = |ray: &Vec<BigInt>, processed: &[usize]| -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(rows.len());
        for &k in processed {
            if dot(&rows[k], ray).is_zero() {
                s.insert(k);
            }
        }
        s
    };

    for k in 0..rows.len() {
        if basis.contains(&k) {
            continue;
        }
        let a = &rows[k];
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
        let zsets: Vec<FixedBitSet> = rays.iter().map(|r| zero_set(r, &processed)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            processed.push(k);
            continue;
        }
        let mut next: Vec<Vec<BigInt>> = (0..rays.len())
            .filter(|&i| !vals[i].is_negative())
            .map(|i| rays[i].clone())
            .collect();
        for &p in &pos {
            for &n in &neg {
                let common: FixedBitSet = zsets[p].intersection(&zsets[n]).collect();
                if common.count_ones(..) + 2 < rank {
                    continue;
                }
                let adjacent =
                    (0..rays.len()).all(|o| o == p || o == n || !common.is_subset(&zsets[o]));
                if !adjacent {
                    continue;
                }
                let combo: Vec<BigInt> = rays[n]
                    .iter()
                    .zip(&rays[p])
                    .map(|(rn, rp)| &vals[p] * rn - &vals[n] * rp)
                    .collect();
                next.push(lattice::primitive(&combo));
            }
        }
        rays = next;
        processed.push(k);
    }
    rays.sort();
    rays.dedup();
    rays
}

/// A face of a cone, recorded relative to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Facets of the parent cone containing the face.
    pub incident: FixedBitSet,
    /// Parent generators lying on the face.
    pub generators: FixedBitSet,
    pub dim: usize,
}

/// The Eulerian poset of faces of a cone, with geometry attached.
///
/// Element `i` of [`FaceLattice::poset`] is face `faces[i]`. Faces are
/// sorted by dimension, so the zero face is element 0 and the cone itself
/// is the last element.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub poset: GradedPoset,
    pub faces: Vec<Face>,
    index: HashMap<FixedBitSet, usize>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom()
    }

    pub fn top(&self) -> usize {
        self.poset.top()
    }

    /// Face index by its set of incident facets.
    pub fn find(&self, incident: &FixedBitSet) -> Option<usize> {
        self.index.get(incident).copied()
    }

    /// Number of faces of each dimension `0..=d`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.poset.rank();
        let mut out = vec![0; d + 1];
        for f in &self.faces {
            out[f.dim] += 1;
        }
        out
    }

    /// Index of the face of `dual_lattice` dual to face `i`:
    /// `F* = {z in C* : <z', z> = 0 for all z' in F}`.
    ///
    /// `dual_lattice` must be the face lattice of `cone.dual()`, whose
    /// generators are the facets of `cone` in the same order.
    pub fn dual_face(&self, i: usize, dual_lattice: &FaceLattice) -> Result<usize> {
        let f = self
            .faces
            .get(i)
            .ok_or_else(|| Error::Argument(format!("no face with index {i}")))?;
        dual_lattice.find(&f.generators).ok_or_else(|| {
            Error::structure("dual face not found; lattice does not belong to the dual cone")
        })
    }
}

/// A lattice polytope given by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    rank: usize,
    vertices: Vec<LatticeVector>,
}

impl Polytope {
    /// Convex hull of `points`; keeps only the extreme points.
    pub fn from_points(rank: usize, points: &[LatticeVector]) -> Result<Self> {
        let mut pts: Vec<LatticeVector> = Vec::new();
        for p in points {
            if p.rank() != rank {
                return Err(Error::Dimension {
                    expected: rank,
                    got: p.rank(),
                });
            }
            if !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        if pts.is_empty() {
            return Err(Error::structure("polytope without points"));
        }
        if pts.len() == 1 {
            return Ok(Polytope {
                rank,
                vertices: pts,
            });
        }
        // project onto coordinates that are injective on the affine hull
        let diffs: Vec<Vec<BigInt>> = pts[1..]
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .zip(pts[0].coords())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let transposed: Vec<Vec<BigInt>> = (0..rank)
            .map(|c| diffs.iter().map(|row| row[c].clone()).collect())
            .collect();
        let coords = lattice::independent_rows(&transposed);
        let lifted: Vec<LatticeVector> = pts
            .iter()
            .map(|p| {
                let mut c = vec![BigInt::one()];
                c.extend(coords.iter().map(|&j| p.coords()[j].clone()));
                LatticeVector::new(c)
            })
            .collect();
        let cone = Cone::from_generators(coords.len() + 1, &lifted)?;
        let mut vertices: Vec<LatticeVector> = pts
            .into_iter()
            .zip(&lifted)
            .filter(|(_, l)| cone.generators().contains(l))
            .map(|(p, _)| p)
            .collect();
        vertices.sort();
        Ok(Polytope { rank, vertices })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        let diffs: Vec<Vec<BigInt>> = self.vertices[1..]
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .zip(self.vertices[0].coords())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        if diffs.is_empty() {
            0
        } else {
            lattice::rank(&diffs)
        }
    }

    /// The cone over `Δ × {1}` in rank `rank + 1`, height in coordinate 0.
    pub fn cone_over(&self) -> Result<Cone> {
        let gens: Vec<LatticeVector> = self
            .vertices
            .iter()
            .map(|v| {
                let mut c = vec![BigInt::one()];
                c.extend(v.coords().iter().cloned());
                LatticeVector::new(c)
            })
            .collect();
        Cone::from_generators(self.rank + 1, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn cone(rank: usize, gens: &[&[i64]]) -> Result<Cone> {
        let g: Vec<LatticeVector> = gens.iter().map(|c| v(c)).collect();
        Cone::from_generators(rank, &g)
    }

    fn forms(c: &[&[i64]]) -> Vec<LinearForm> {
        let mut out: Vec<LinearForm> = c.iter().map(|x| LinearForm::from_i64(x)).collect();
        out.sort();
        out
    }

    fn square() -> Cone {
        cone(3, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]]).unwrap()
    }

    #[test]
    fn planar_facets() {
        // normals are the rays rotated by 90 degrees, oriented inwards
        let c = cone(2, &[&[1, 0], &[1, 3]]).unwrap();
        assert_eq!(c.facets(), forms(&[&[0, 1], &[3, -1]]).as_slice());
    }

    #[test]
    fn square_cone_has_four_facets() {
        let c = square();
        assert_eq!(
            c.facets(),
            forms(&[&[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1]]).as_slice()
        );
    }

    #[test]
    fn orthant_is_self_dual() {
        for d in 1..5 {
            let gens: Vec<LatticeVector> = (0..d).map(|i| LatticeVector::basis(d, i)).collect();
            let c = Cone::from_generators(d, &gens).unwrap();
            let basis: Vec<LinearForm> = (0..d).map(|i| LinearForm::basis(d, i)).collect();
            let mut sorted = basis.clone();
            sorted.sort();
            assert_eq!(c.facets(), sorted.as_slice());
            assert_eq!(c.dual().generators(), c.generators());
        }
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = cone(2, &[&[2, 0], &[1, 1], &[1, 2], &[0, 3], &[0, 0]]).unwrap();
        assert_eq!(c.generators(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn structural_errors() {
        assert!(cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]).is_err());
        assert!(cone(3, &[&[1, 0, 0], &[0, 1, 0]]).is_err());
        assert!(cone(2, &[&[1, 0, 0]]).is_err());
    }

    #[test]
    fn double_dual_is_identity() {
        let c = square();
        assert_eq!(c.dual().dual(), c);
        let rebuilt = Cone::from_generators(3, c.dual().generators()).unwrap();
        assert_eq!(rebuilt.generators(), c.dual().generators());
    }

    #[test]
    fn dual_of_reflexive_triangle_cone() {
        let c = cone(3, &[&[1, 1, 0], &[1, 0, 1], &[1, -1, -1]]).unwrap();
        let expect = cone(3, &[&[1, 2, -1], &[1, -1, 2], &[1, -1, -1]]).unwrap();
        assert_eq!(c.dual().generators(), expect.generators());
    }

    #[test]
    fn face_counts() {
        let orthant = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(orthant.face_lattice().f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(square().face_lattice().f_vector(), vec![1, 4, 4, 1]);
        assert_eq!(
            cone(1, &[&[5]]).unwrap().face_lattice().f_vector(),
            vec![1, 1]
        );
        assert!(square().face_lattice().poset.is_eulerian());
    }

    #[test]
    fn dual_faces() {
        let c = square();
        let dual = c.dual();
        let (fl, dl) = (c.face_lattice(), dual.face_lattice());
        for i in 0..fl.len() {
            let j = fl.dual_face(i, &dl).unwrap();
            assert_eq!(fl.face(i).dim + dl.face(j).dim, 3);
            assert_eq!(dl.dual_face(j, &fl).unwrap(), i);
            for k in 0..fl.len() {
                let jk = fl.dual_face(k, &dl).unwrap();
                assert_eq!(fl.poset.leq(i, k), dl.poset.leq(jk, j));
            }
        }
        assert_eq!(fl.dual_face(fl.bottom(), &dl).unwrap(), dl.top());
        assert_eq!(fl.dual_face(fl.top(), &dl).unwrap(), dl.bottom());
    }

    #[test]
    fn orthant_facet_dualizes_to_ray() {
        let gens: Vec<LatticeVector> = (0..3).map(|i| LatticeVector::basis(3, i)).collect();
        let c = Cone::from_generators(3, &gens).unwrap();
        let (fl, dl) = (c.face_lattice(), c.dual().face_lattice());
        let facet = (0..fl.len())
            .find(|&i| {
                let f = fl.face(i);
                f.dim == 2
                    && f.generators
                        .ones()
                        .all(|g| c.generators()[g] != LatticeVector::basis(3, 2))
            })
            .unwrap();
        let ray = fl.dual_face(facet, &dl).unwrap();
        let g: Vec<usize> = dl.face(ray).generators.ones().collect();
        assert_eq!(g.len(), 1);
        assert_eq!(c.dual().generators()[g[0]], LatticeVector::basis(3, 2));
    }

    #[test]
    fn gorenstein_and_index() {
        let (n, delta) = square().gorenstein_data().unwrap();
        assert_eq!(n, LinearForm::from_i64(&[1, 0, 0]));
        assert_eq!(delta.vertices().len(), 4);
        let orthant = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(
            orthant.degree_form(),
            Some(&LinearForm::from_i64(&[1, 1, 1]))
        );
        assert!(cone(2, &[&[2, 1], &[1, 2]])
            .unwrap()
            .gorenstein_data()
            .is_none());

        let triangle = cone(3, &[&[1, 1, 0], &[1, 0, 1], &[1, -1, -1]]).unwrap();
        assert_eq!(triangle.reflexive_index(), Some(BigInt::from(1)));
        let centered = cone(3, &[&[1, 1, 1], &[1, -1, 1], &[1, 1, -1], &[1, -1, -1]]).unwrap();
        assert_eq!(centered.reflexive_index(), Some(BigInt::from(1)));
        // the uncentered unit square is the Cayley cone of two unit segments
        assert_eq!(square().reflexive_index(), Some(BigInt::from(2)));
        // the dual of the cone over [0, 3] is not Gorenstein
        let seg = cone(2, &[&[1, 0], &[1, 3]]).unwrap();
        assert_eq!(seg.reflexive_index(), None);
    }

    #[test]
    fn polytope_vertices() {
        let pts: Vec<LatticeVector> = [[0, 0], [1, 0], [0, 1], [1, 1], [0, 0]]
            .iter()
            .map(|p| v(p))
            .collect();
        let sq = Polytope::from_points(2, &pts).unwrap();
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(sq.dim(), 2);
        let seg = Polytope::from_points(3, &[v(&[0, 0, 0]), v(&[1, 1, 0]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(seg.vertices(), &[v(&[0, 0, 0]), v(&[2, 2, 0])]);
        assert_eq!(seg.dim(), 1);
        let pt = Polytope::from_points(2, &[v(&[3, 4])]).unwrap();
        assert_eq!(pt.dim(), 0);
    }
}
