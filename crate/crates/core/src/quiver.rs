//! Bound quiver algebras Λ = kQ/I realized on a path basis.
//!
//! The quotient is taken with respect to the declared relations together with
//! all paths of length >= the nilpotency bound m, working inside the truncated
//! path algebra kQ/R^m. Path words follow function composition: the word
//! [β, α] means "apply α, then β", so consecutive arrows satisfy
//! source(w[k]) = target(w[k+1]) and the word βα names the path 1 → 2 → 3
//! when α: 1 → 2 and β: 2 → 3.

use crate::field::Fp;
use crate::matrix::DenseMatrix;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// 0-based vertex ids.
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let mut seen = HashMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= self.vertex_count || a.target >= self.vertex_count {
                return Err(AlgebraError::BadArrow {
                    name: a.name.clone(),
                });
            }
            if seen.insert(a.name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateArrow {
                    name: a.name.clone(),
                });
            }
        }
        Ok(())
    }
}

/// One term of a relation: an integer coefficient on a path word (arrow
/// indices, leftmost applied last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: i64,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub quiver: Quiver,
    pub relations: Vec<Vec<RelationTerm>>,
    pub nilpotency: usize,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("arrow {name:?} has an endpoint outside the declared vertex range")]
    BadArrow { name: String },
    #[error("arrow name {name:?} declared twice")]
    DuplicateArrow { name: String },
    #[error("relation {index}: {reason}")]
    MalformedRelation { index: usize, reason: String },
    #[error(
        "not admissible at the declared bound: the nonzero length-{len} path {path:?} \
         is truncated to zero but the relations do not imply it; increase m or add relations"
    )]
    NotAdmissible { len: usize, path: String },
    #[error("nilpotency bound must be at least 2, got {0}")]
    BadNilpotency(usize),
}

/// A path of the quiver: arrow indices in function-composition order.
/// The empty word tagged with a vertex is the idempotent e_vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl PathWord {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// u.compose(v) is "u after v"; defined when source(u) = target(v).
    pub fn compose(&self, v: &PathWord) -> Option<PathWord> {
        if self.source != v.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&v.arrows);
        Some(PathWord {
            arrows,
            source: v.source,
            target: self.target,
        })
    }
}

/// Sparse linear combination of basis classes, indexed into `basis`.
pub type ClassVector = Vec<(usize, u64)>;

pub struct BoundQuiverAlgebra {
    field: Fp,
    quiver: Quiver,
    nilpotency: usize,
    /// All paths of length < m, enumeration order: by length, then creation order.
    paths: Vec<PathWord>,
    path_index: HashMap<PathWord, usize>,
    /// Path ids forming the linear basis of Λ.
    basis: Vec<usize>,
    /// position of a basis path id in `basis`
    basis_pos: HashMap<usize, usize>,
    /// normal form of every path id as a combination of basis classes
    normal: Vec<ClassVector>,
    /// basis positions grouped as e_target Λ e_source
    pair_basis: Vec<Vec<Vec<usize>>>,
    cartan: Vec<Vec<usize>>,
}

impl BoundQuiverAlgebra {
    pub fn build(field: Fp, spec: &AlgebraSpec) -> Result<Self, AlgebraError> {
        spec.quiver.validate()?;
        if spec.nilpotency < 2 {
            return Err(AlgebraError::BadNilpotency(spec.nilpotency));
        }
        let m = spec.nilpotency;
        let q = &spec.quiver;
        validate_relations(q, &spec.relations)?;

        // enumerate paths of length <= m (length m needed for the admissibility check)
        let (paths_ext, index_ext) = enumerate_paths(q, m);
        let short: Vec<usize> = (0..paths_ext.len())
            .filter(|&i| paths_ext[i].len() < m)
            .collect();

        // ideal generators truncated at length m (classes of u r v in kQ/R^m)
        let gens_short = ideal_generators(field, q, &spec.relations, &paths_ext, &index_ext, m);
        let (normal_short, basis_short) = reduce_modulo(field, &short, paths_ext.len(), &gens_short);

        // admissibility: every length-m path that extends a nonzero class must
        // already lie in the ideal computed one degree higher
        let long: Vec<usize> = (0..paths_ext.len()).collect();
        let gens_long = ideal_generators(field, q, &spec.relations, &paths_ext, &index_ext, m + 1);
        let (normal_long, _) = reduce_modulo(field, &long, paths_ext.len(), &gens_long);
        for (id, path) in paths_ext.iter().enumerate() {
            if path.len() != m {
                continue;
            }
            let head = PathWord {
                arrows: path.arrows[1..].to_vec(),
                source: path.source,
                target: q.arrows[path.arrows[0]].source,
            };
            let tail = PathWord {
                arrows: path.arrows[..m - 1].to_vec(),
                source: q.arrows[path.arrows[m - 1]].target,
                target: path.target,
            };
            let head_nonzero = !normal_short[index_ext[&head]].is_empty();
            let tail_nonzero = !normal_short[index_ext[&tail]].is_empty();
            if (head_nonzero || tail_nonzero) && !normal_long[id].is_empty() {
                return Err(AlgebraError::NotAdmissible {
                    len: m,
                    path: word_name(q, path),
                });
            }
        }

        let basis = basis_short;
        let mut basis_pos = HashMap::new();
        for (pos, &id) in basis.iter().enumerate() {
            basis_pos.insert(id, pos);
        }
        let paths: Vec<PathWord> = short.iter().map(|&i| paths_ext[i].clone()).collect();
        // `short` is a prefix of the extended enumeration (paths ordered by length)
        debug_assert!(short.iter().enumerate().all(|(k, &i)| k == i));
        let mut path_index = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            path_index.insert(p.clone(), i);
        }
        let normal: Vec<ClassVector> = (0..paths.len()).map(|i| normal_short[i].clone()).collect();

        let n = q.vertex_count;
        let mut pair_basis = vec![vec![Vec::new(); n]; n];
        let mut cartan = vec![vec![0usize; n]; n];
        for (pos, &id) in basis.iter().enumerate() {
            let p = &paths[id];
            pair_basis[p.target][p.source].push(pos);
            cartan[p.target][p.source] += 1;
        }

        Ok(BoundQuiverAlgebra {
            field,
            quiver: q.clone(),
            nilpotency: m,
            paths,
            path_index,
            basis,
            basis_pos,
            normal,
            pair_basis,
            cartan,
        })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// C[j][i] = dim e_j Λ e_i
    pub fn cartan(&self) -> &Vec<Vec<usize>> {
        &self.cartan
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_path(&self, pos: usize) -> &PathWord {
        &self.paths[self.basis[pos]]
    }

    /// Basis positions spanning e_target Λ e_source.
    pub fn pair_basis(&self, target: usize, source: usize) -> &[usize] {
        &self.pair_basis[target][source]
    }

    /// Position of the idempotent e_vertex in the global basis.
    pub fn idempotent_pos(&self, vertex: usize) -> usize {
        let word = PathWord {
            arrows: vec![],
            source: vertex,
            target: vertex,
        };
        let id = self.path_index[&word];
        self.basis_pos[&id]
    }

    /// Normal form of a path id.
    pub fn path_class(&self, path: &PathWord) -> Option<&ClassVector> {
        self.path_index.get(path).map(|&i| &self.normal[i])
    }

    /// Product of two basis classes, as a sparse combination of basis classes.
    pub fn mul_basis(&self, left: usize, right: usize) -> ClassVector {
        let lp = &self.paths[self.basis[left]];
        let rp = &self.paths[self.basis[right]];
        match lp.compose(rp) {
            None => vec![],
            Some(w) => {
                if w.len() >= self.nilpotency {
                    vec![]
                } else {
                    self.normal[self.path_index[&w]].clone()
                }
            }
        }
    }

    /// Product of sparse class vectors.
    pub fn mul_classes(&self, left: &ClassVector, right: &ClassVector) -> ClassVector {
        let f = self.field;
        let mut acc: HashMap<usize, u64> = HashMap::new();
        for &(lb, lc) in left {
            for &(rb, rc) in right {
                let c = f.mul(lc, rc);
                if c == 0 {
                    continue;
                }
                for &(b, s) in self.mul_basis(lb, rb).iter() {
                    let e = acc.entry(b).or_insert(0);
                    *e = f.add(*e, f.mul(c, s));
                }
            }
        }
        let mut out: ClassVector = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_by_key(|&(b, _)| b);
        out
    }

    pub fn add_classes(&self, left: &ClassVector, right: &ClassVector) -> ClassVector {
        let f = self.field;
        let mut acc: HashMap<usize, u64> = left.iter().copied().collect();
        for &(b, c) in right {
            let e = acc.entry(b).or_insert(0);
            *e = f.add(*e, c);
        }
        let mut out: ClassVector = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_by_key(|&(b, _)| b);
        out
    }

    pub fn scale_class(&self, v: &ClassVector, c: u64) -> ClassVector {
        let f = self.field;
        if c == 0 {
            return vec![];
        }
        v.iter().map(|&(b, s)| (b, f.mul(s, c))).collect()
    }

    pub fn class_of_idempotent(&self, vertex: usize) -> ClassVector {
        vec![(self.idempotent_pos(vertex), 1)]
    }

    /// Dense coordinates of a class restricted to e_j Λ e_i, in pair-basis order.
    pub fn class_to_pair_coords(&self, target: usize, source: usize, v: &ClassVector) -> Vec<u64> {
        let slots = &self.pair_basis[target][source];
        let mut out = vec![0u64; slots.len()];
        for &(b, c) in v {
            if let Some(k) = slots.iter().position(|&s| s == b) {
                out[k] = c;
            }
        }
        out
    }

    /// Class from dense e_j Λ e_i coordinates.
    pub fn pair_coords_to_class(&self, target: usize, source: usize, coords: &[u64]) -> ClassVector {
        let slots = &self.pair_basis[target][source];
        assert_eq!(coords.len(), slots.len());
        slots
            .iter()
            .zip(coords)
            .filter(|&(_, &c)| c != 0)
            .map(|(&s, &c)| (s, c))
            .collect()
    }

    /// Inverse of an element of e_i Λ e_i whose e_i-coefficient is nonzero.
    /// Such elements are units of the local ring e_i Λ e_i: write
    /// x = c(e_i - ρ) with ρ nilpotent and sum the geometric series.
    pub fn local_inverse(&self, vertex: usize, x: &ClassVector) -> Option<ClassVector> {
        let f = self.field;
        let e_pos = self.idempotent_pos(vertex);
        let c = x.iter().find(|&&(b, _)| b == e_pos).map(|&(_, c)| c)?;
        if c == 0 {
            return None;
        }
        let cinv = f.inv(c);
        // ρ = e_i - c^{-1} x
        let mut rho = self.add_classes(
            &self.class_of_idempotent(vertex),
            &self.scale_class(x, f.neg(cinv)),
        );
        // inverse = c^{-1} (e_i + ρ + ρ^2 + ...)
        let mut acc = self.class_of_idempotent(vertex);
        let mut term = rho.clone();
        for _ in 0..self.nilpotency {
            if term.is_empty() {
                break;
            }
            acc = self.add_classes(&acc, &term);
            term = self.mul_classes(&term, &rho);
        }
        rho.clear();
        Some(self.scale_class(&acc, cinv))
    }

    /// Matrix of left multiplication by `w` (an element of e_j Λ e_i) as a map
    /// e_i' = e_? ... specifically e_a Λ e_l restricted: for fixed l,
    /// left-mult w: e_i Λ e_l -> e_j Λ e_l, where w ∈ e_j Λ e_i.
    pub fn left_mult_matrix(&self, w: &ClassVector, j: usize, i: usize, l: usize) -> DenseMatrix {
        let f = self.field;
        let src = self.pair_basis[i][l].to_vec();
        let dst = &self.pair_basis[j][l];
        let mut m = DenseMatrix::zeros(f, dst.len(), src.len());
        for (col, &sb) in src.iter().enumerate() {
            let prod = self.mul_classes(w, &vec![(sb, 1)]);
            for &(b, c) in &prod {
                if let Some(row) = dst.iter().position(|&x| x == b) {
                    m.set(row, col, c);
                }
            }
        }
        m
    }

    /// For fixed l, right-mult by w ∈ e_j Λ e_i: e_l Λ e_j -> e_l Λ e_i.
    pub fn right_mult_matrix(&self, w: &ClassVector, j: usize, i: usize, l: usize) -> DenseMatrix {
        let f = self.field;
        let src = self.pair_basis[l][j].to_vec();
        let dst = &self.pair_basis[l][i];
        let mut m = DenseMatrix::zeros(f, dst.len(), src.len());
        for (col, &sb) in src.iter().enumerate() {
            let prod = self.mul_classes(&vec![(sb, 1)], w);
            for &(b, c) in &prod {
                if let Some(row) = dst.iter().position(|&x| x == b) {
                    m.set(row, col, c);
                }
            }
        }
        m
    }

    pub fn basis_word_name(&self, pos: usize) -> String {
        word_name(&self.quiver, self.basis_path(pos))
    }
}

fn word_name(q: &Quiver, p: &PathWord) -> String {
    if p.is_trivial() {
        format!("e{}", p.source + 1)
    } else {
        p.arrows
            .iter()
            .map(|&a| q.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("")
    }
}

fn validate_relations(q: &Quiver, relations: &[Vec<RelationTerm>]) -> Result<(), AlgebraError> {
    for (idx, rel) in relations.iter().enumerate() {
        if rel.is_empty() {
            return Err(AlgebraError::MalformedRelation {
                index: idx,
                reason: "empty relation".into(),
            });
        }
        let mut endpoints = None;
        for term in rel {
            if term.word.is_empty() {
                return Err(AlgebraError::MalformedRelation {
                    index: idx,
                    reason: "trivial path in relation".into(),
                });
            }
            for &a in &term.word {
                if a >= q.arrows.len() {
                    return Err(AlgebraError::MalformedRelation {
                        index: idx,
                        reason: "unknown arrow index".into(),
                    });
                }
            }
            for k in 0..term.word.len() - 1 {
                if q.arrows[term.word[k]].source != q.arrows[term.word[k + 1]].target {
                    return Err(AlgebraError::MalformedRelation {
                        index: idx,
                        reason: "word is not composable".into(),
                    });
                }
            }
            let src = q.arrows[*term.word.last().unwrap()].source;
            let tgt = q.arrows[term.word[0]].target;
            match endpoints {
                None => endpoints = Some((src, tgt)),
                Some(e) if e != (src, tgt) => {
                    return Err(AlgebraError::MalformedRelation {
                        index: idx,
                        reason: "terms are not parallel".into(),
                    });
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// All paths of length <= bound, ordered by length then discovery order.
fn enumerate_paths(q: &Quiver, bound: usize) -> (Vec<PathWord>, HashMap<PathWord, usize>) {
    let mut paths = Vec::new();
    for v in 0..q.vertex_count {
        paths.push(PathWord {
            arrows: vec![],
            source: v,
            target: v,
        });
    }
    let mut level_start = 0;
    for _len in 1..=bound {
        let level_end = paths.len();
        for idx in level_start..level_end {
            let p = paths[idx].clone();
            for (ai, arrow) in q.arrows.iter().enumerate() {
                if arrow.source == p.target {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&p.arrows);
                    paths.push(PathWord {
                        arrows,
                        source: p.source,
                        target: arrow.target,
                    });
                }
            }
        }
        level_start = level_end;
        if level_start == paths.len() {
            break;
        }
    }
    let mut index = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        index.insert(p.clone(), i);
    }
    (paths, index)
}

/// Dense vectors (over path ids) spanning the image of the two-sided ideal
/// generated by the relations inside kQ/R^bound: truncations of u·r·v.
fn ideal_generators(
    field: Fp,
    q: &Quiver,
    relations: &[Vec<RelationTerm>],
    paths: &[PathWord],
    index: &HashMap<PathWord, usize>,
    bound: usize,
) -> Vec<Vec<u64>> {
    let mut gens = Vec::new();
    for rel in relations {
        let rel_src = q.arrows[*rel[0].word.last().unwrap()].source;
        let rel_tgt = q.arrows[rel[0].word[0]].target;
        let min_len = rel.iter().map(|t| t.word.len()).min().unwrap();
        for u in paths.iter().filter(|u| u.source == rel_tgt) {
            for v in paths.iter().filter(|v| v.target == rel_src) {
                if u.len() + min_len + v.len() >= bound {
                    continue;
                }
                let mut vec_out = vec![0u64; paths.len()];
                let mut nonzero = false;
                for term in rel {
                    let total = u.len() + term.word.len() + v.len();
                    if total >= bound {
                        continue;
                    }
                    let mut arrows = u.arrows.clone();
                    arrows.extend_from_slice(&term.word);
                    arrows.extend_from_slice(&v.arrows);
                    let w = PathWord {
                        arrows,
                        source: v.source,
                        target: u.target,
                    };
                    let id = index[&w];
                    let c = field.from_i64(term.coeff);
                    vec_out[id] = field.add(vec_out[id], c);
                    nonzero = true;
                }
                if nonzero && vec_out.iter().any(|&x| x != 0) {
                    gens.push(vec_out);
                }
            }
        }
    }
    gens
}

/// Row-reduce the generators over the allowed path columns; returns the normal
/// form of each path id and the ids of the surviving basis paths.
fn reduce_modulo(
    field: Fp,
    columns: &[usize],
    total_paths: usize,
    gens: &[Vec<u64>],
) -> (Vec<ClassVector>, Vec<usize>) {
    let ncols = columns.len();
    let col_of: HashMap<usize, usize> = columns.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let mut m = DenseMatrix::zeros(field, gens.len(), ncols);
    for (r, g) in gens.iter().enumerate() {
        for (&id, &k) in &col_of {
            if g[id] != 0 {
                m.set(r, k, g[id]);
            }
        }
    }
    let pivots = m.rref();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let basis: Vec<usize> = (0..ncols).filter(|&c| !pivot_set[c]).map(|c| columns[c]).collect();
    let basis_col_pos: HashMap<usize, usize> = (0..ncols)
        .filter(|&c| !pivot_set[c])
        .enumerate()
        .map(|(pos, c)| (c, pos))
        .collect();
    let mut normal: Vec<ClassVector> = vec![vec![]; total_paths];
    for (k, &id) in columns.iter().enumerate() {
        if let Some(&pos) = basis_col_pos.get(&k) {
            normal[id] = vec![(pos, 1)];
        } else {
            // pivot column: row r with pivot at k expresses it via free columns
            let r = pivots.iter().position(|&p| p == k).unwrap();
            let mut v: ClassVector = Vec::new();
            for (c, &pos) in basis_col_pos.iter() {
                let coeff = m.get(r, *c);
                if coeff != 0 {
                    v.push((pos, field.neg(coeff)));
                }
            }
            v.sort_by_key(|&(b, _)| b);
            normal[id] = v;
        }
    }
    (normal, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, DEFAULT_PRIME};
    use crate::test_fixtures::*;

    fn f() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn a2_dimensions() {
        let alg = BoundQuiverAlgebra::build(f(), &a2_spec()).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(*alg.cartan(), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn k3_dimensions() {
        let alg = BoundQuiverAlgebra::build(f(), &kronecker_spec(3)).unwrap();
        assert_eq!(alg.dim(), 5);
        assert_eq!(*alg.cartan(), vec![vec![1, 0], vec![3, 1]]);
    }

    #[test]
    fn a3_with_relation() {
        let alg = BoundQuiverAlgebra::build(f(), &a3_rel_spec()).unwrap();
        // basis {e1, e2, e3, α, β}; βα killed
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.cartan()[2][0], 0);
    }

    #[test]
    fn a3_without_relation() {
        let alg = BoundQuiverAlgebra::build(f(), &a3_spec()).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(alg.cartan()[2][0], 1);
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        // one vertex, one loop, no relations: the length-2 truncation silently
        // changes the algebra, which the contract reports as NotAdmissible
        let spec = AlgebraSpec {
            quiver: Quiver {
                vertex_count: 1,
                arrows: vec![Arrow {
                    name: "x".into(),
                    source: 0,
                    target: 0,
                }],
            },
            relations: vec![],
            nilpotency: 2,
        };
        match BoundQuiverAlgebra::build(f(), &spec) {
            Err(AlgebraError::NotAdmissible { .. }) => {}
            other => panic!("expected NotAdmissible, got {:?}", other.map(|a| a.dim())),
        }
    }

    #[test]
    fn loop_with_square_zero_relation() {
        let spec = AlgebraSpec {
            quiver: Quiver {
                vertex_count: 1,
                arrows: vec![Arrow {
                    name: "x".into(),
                    source: 0,
                    target: 0,
                }],
            },
            relations: vec![vec![RelationTerm {
                coeff: 1,
                word: vec![0, 0],
            }]],
            nilpotency: 2,
        };
        let alg = BoundQuiverAlgebra::build(f(), &spec).unwrap();
        // k[x]/(x^2)
        assert_eq!(alg.dim(), 2);
    }

    #[test]
    fn malformed_relation_rejected() {
        let mut spec = a3_spec();
        // α and β are not parallel
        spec.relations = vec![vec![
            RelationTerm {
                coeff: 1,
                word: vec![0],
            },
            RelationTerm {
                coeff: 1,
                word: vec![1],
            },
        ]];
        assert!(matches!(
            BoundQuiverAlgebra::build(f(), &spec),
            Err(AlgebraError::MalformedRelation { .. })
        ));
    }

    #[test]
    fn multiplication_is_associative_on_basis() {
        for spec in [a2_spec(), a3_rel_spec(), kronecker_spec(2), a3_spec()] {
            let alg = BoundQuiverAlgebra::build(f(), &spec).unwrap();
            let d = alg.basis_len();
            for a in 0..d {
                for b in 0..d {
                    let ab = alg.mul_basis(a, b);
                    for c in 0..d {
                        let bc = alg.mul_basis(b, c);
                        let left = alg.mul_classes(&ab, &vec![(c, 1)]);
                        let right = alg.mul_classes(&vec![(a, 1)], &bc);
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn local_inverse_roundtrip() {
        let alg = BoundQuiverAlgebra::build(
            f(),
            &AlgebraSpec {
                quiver: Quiver {
                    vertex_count: 1,
                    arrows: vec![Arrow {
                        name: "x".into(),
                        source: 0,
                        target: 0,
                    }],
                },
                relations: vec![vec![RelationTerm {
                    coeff: 1,
                    word: vec![0, 0, 0],
                }]],
                nilpotency: 3,
            },
        )
        .unwrap();
        // invert 2*e + 5*x + x^2
        let e = alg.idempotent_pos(0);
        let x_pos = (0..alg.basis_len())
            .find(|&i| alg.basis_path(i).len() == 1)
            .unwrap();
        let x2_pos = (0..alg.basis_len())
            .find(|&i| alg.basis_path(i).len() == 2)
            .unwrap();
        let elt = vec![(e, 2), (x_pos, 5), (x2_pos, 1)];
        let inv = alg.local_inverse(0, &elt).unwrap();
        let prod = alg.mul_classes(&elt, &inv);
        assert_eq!(prod, vec![(e, 1)]);
    }
}
