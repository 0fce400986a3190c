//! Finite-dimensional Λ-modules as quiver representations, and the
//! homological toolkit built on them: hom spaces, Ext^1, kernels, cokernels,
//! radicals, projective covers, minimal presentations and the AR translate.

use crate::matrix::DenseMatrix;
use crate::quiver::{BoundQuiverAlgebra, PathWord};
use std::sync::Arc;

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    /// arrows[k]: d_{t(k)} x d_{s(k)}
    arrows: Vec<DenseMatrix>,
}

/// Layout of a standard projective (or injective) sum: one entry per copy,
/// listing the defining vertex. Copies are ordered by vertex, then copy index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumLayout {
    pub copies: Vec<usize>,
}

impl SumLayout {
    pub fn from_multiplicities(mults: &[usize]) -> Self {
        let mut copies = Vec::new();
        for (v, &m) in mults.iter().enumerate() {
            for _ in 0..m {
                copies.push(v);
            }
        }
        SumLayout { copies }
    }

    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0usize; n];
        for &v in &self.copies {
            m[v] += 1;
        }
        m
    }

    /// Offset of copy `c` inside the vertex-`v` component of a projective sum.
    pub fn proj_offset(&self, alg: &BoundQuiverAlgebra, v: usize, c: usize) -> usize {
        self.copies[..c]
            .iter()
            .map(|&i| alg.cartan()[v][i])
            .sum()
    }

    /// Offset of copy `c` inside the vertex-`v` component of an injective sum
    /// (vertex-v block of I_(i) has dimension C[i][v]).
    pub fn inj_offset(&self, alg: &BoundQuiverAlgebra, v: usize, c: usize) -> usize {
        self.copies[..c]
            .iter()
            .map(|&i| alg.cartan()[i][v])
            .sum()
    }
}

impl Representation {
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        arrows: Vec<DenseMatrix>,
    ) -> Self {
        assert_eq!(dims.len(), algebra.vertex_count());
        assert_eq!(arrows.len(), algebra.quiver().arrows.len());
        for (k, a) in algebra.quiver().arrows.iter().enumerate() {
            assert_eq!(arrows[k].rows(), dims[a.target]);
            assert_eq!(arrows[k].cols(), dims[a.source]);
        }
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    pub fn zero(algebra: Arc<BoundQuiverAlgebra>) -> Self {
        let f = algebra.field();
        let dims = vec![0; algebra.vertex_count()];
        let arrows = algebra
            .quiver()
            .arrows
            .iter()
            .map(|_| DenseMatrix::zeros(f, 0, 0))
            .collect();
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    pub fn simple(algebra: Arc<BoundQuiverAlgebra>, vertex: usize) -> Self {
        let f = algebra.field();
        let mut dims = vec![0; algebra.vertex_count()];
        dims[vertex] = 1;
        let arrows = algebra
            .quiver()
            .arrows
            .iter()
            .map(|a| DenseMatrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    /// Λe_i as a representation: vertex-j space has basis e_j Λ e_i.
    pub fn projective(algebra: Arc<BoundQuiverAlgebra>, vertex: usize) -> Self {
        let mut mults = vec![0; algebra.vertex_count()];
        mults[vertex] = 1;
        Self::projective_sum(algebra, &mults).0
    }

    /// ⊕_i P_(i)^{mults_i} with the canonical path bases.
    pub fn projective_sum(
        algebra: Arc<BoundQuiverAlgebra>,
        mults: &[usize],
    ) -> (Self, SumLayout) {
        let f = algebra.field();
        let layout = SumLayout::from_multiplicities(mults);
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|v| layout.copies.iter().map(|&i| algebra.cartan()[v][i]).sum())
            .collect();
        let arrows = algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let alpha = arrow_class(&algebra, k);
                let mut m = DenseMatrix::zeros(f, dims[a.target], dims[a.source]);
                for (c, &i) in layout.copies.iter().enumerate() {
                    let block = algebra.left_mult_matrix(&alpha, a.target, a.source, i);
                    let ro = layout.proj_offset(&algebra, a.target, c);
                    let co = layout.proj_offset(&algebra, a.source, c);
                    for r in 0..block.rows() {
                        for cc in 0..block.cols() {
                            m.set(ro + r, co + cc, block.get(r, cc));
                        }
                    }
                }
                m
            })
            .collect();
        (
            Representation {
                algebra,
                dims,
                arrows,
            },
            layout,
        )
    }

    /// D(e_i Λ) as a representation: vertex-j space is the dual of e_i Λ e_j.
    pub fn injective(algebra: Arc<BoundQuiverAlgebra>, vertex: usize) -> Self {
        let mut mults = vec![0; algebra.vertex_count()];
        mults[vertex] = 1;
        Self::injective_sum(algebra, &mults).0
    }

    pub fn injective_sum(
        algebra: Arc<BoundQuiverAlgebra>,
        mults: &[usize],
    ) -> (Self, SumLayout) {
        let f = algebra.field();
        let layout = SumLayout::from_multiplicities(mults);
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|v| layout.copies.iter().map(|&i| algebra.cartan()[i][v]).sum())
            .collect();
        let arrows = algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let beta = arrow_class(&algebra, k);
                let mut m = DenseMatrix::zeros(f, dims[a.target], dims[a.source]);
                for (c, &i) in layout.copies.iter().enumerate() {
                    // right-mult by β: e_i Λ e_t -> e_i Λ e_s; the arrow acts
                    // on the duals as the transpose
                    let block = algebra
                        .right_mult_matrix(&beta, a.target, a.source, i)
                        .transpose();
                    let ro = layout.inj_offset(&algebra, a.target, c);
                    let co = layout.inj_offset(&algebra, a.source, c);
                    for r in 0..block.rows() {
                        for cc in 0..block.cols() {
                            m.set(ro + r, co + cc, block.get(r, cc));
                        }
                    }
                }
                m
            })
            .collect();
        (
            Representation {
                algebra,
                dims,
                arrows,
            },
            layout,
        )
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, k: usize) -> &DenseMatrix {
        &self.arrows[k]
    }

    /// Matrix of the action of a path word (rightmost arrow applied first).
    pub fn path_action(&self, path: &PathWord) -> DenseMatrix {
        let f = self.algebra.field();
        if path.is_trivial() {
            return DenseMatrix::identity(f, self.dims[path.source]);
        }
        let mut m = self.arrows[path.arrows[0]].clone();
        for &a in &path.arrows[1..] {
            m = m.mul(&self.arrows[a]);
        }
        m
    }

    /// Every relation of the algebra must evaluate to zero.
    pub fn satisfies_relations(&self) -> bool {
        let f = self.algebra.field();
        // relations are already folded into the multiplication of the basis;
        // check that every nilpotency-killed or relation-killed path class acts
        // consistently: evaluate all length < m paths against their normal forms
        // is overkill, so verify declared relations directly via path actions.
        for rel in relation_actions(self) {
            if !rel.is_zero() {
                return false;
            }
        }
        let _ = f;
        true
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let f = self.algebra.field();
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(&a, &b)| a + b)
            .collect();
        let arrows = self
            .arrows
            .iter()
            .zip(&other.arrows)
            .enumerate()
            .map(|(k, (a, b))| {
                let arr = &self.algebra.quiver().arrows[k];
                let mut m = DenseMatrix::zeros(f, dims[arr.target], dims[arr.source]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        Representation {
            algebra: Arc::clone(&self.algebra),
            dims,
            arrows,
        }
    }
}

fn relation_actions(rep: &Representation) -> Vec<DenseMatrix> {
    // The algebra stores only its basis; relations are recoverable from path
    // normal forms: for every non-basis path of length < m, the action of the
    // path must equal the action of its normal form.
    let alg = rep.algebra();
    let f = alg.field();
    let mut out = Vec::new();
    for pos in 0..alg.basis_len() {
        // products arrow * basis path must agree with their normal forms
        let p = alg.basis_path(pos);
        for (k, a) in alg.quiver().arrows.iter().enumerate() {
            if a.source != p.target {
                continue;
            }
            let mut arrows = vec![k];
            arrows.extend_from_slice(&p.arrows);
            let w = PathWord {
                arrows,
                source: p.source,
                target: a.target,
            };
            let actual = rep.arrows[k].mul(&rep.path_action(p));
            let expected = match alg.path_class(&w) {
                Some(class) => {
                    let mut m = DenseMatrix::zeros(f, rep.dims[w.target], rep.dims[w.source]);
                    for &(b, c) in class {
                        m = m.add(&rep.path_action(alg.basis_path(b)).scale(c));
                    }
                    m
                }
                None => DenseMatrix::zeros(f, rep.dims[w.target], rep.dims[w.source]),
            };
            out.push(actual.sub(&expected));
        }
    }
    out
}

fn arrow_class(alg: &BoundQuiverAlgebra, k: usize) -> crate::quiver::ClassVector {
    let a = &alg.quiver().arrows[k];
    let w = PathWord {
        arrows: vec![k],
        source: a.source,
        target: a.target,
    };
    alg.path_class(&w).cloned().unwrap_or_default()
}

#[derive(Clone)]
pub struct ModuleMorphism {
    pub source: Representation,
    pub target: Representation,
    /// maps[v]: target.dims[v] x source.dims[v]
    pub maps: Vec<DenseMatrix>,
}

impl ModuleMorphism {
    pub fn zero(source: Representation, target: Representation) -> Self {
        let f = source.algebra().field();
        let maps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| DenseMatrix::zeros(f, t, s))
            .collect();
        ModuleMorphism {
            source,
            target,
            maps,
        }
    }

    /// f_{t(α)} M_α = N_α f_{s(α)} for every arrow.
    pub fn is_valid(&self) -> bool {
        for (k, a) in self.source.algebra().quiver().arrows.iter().enumerate() {
            let lhs = self.maps[a.target].mul(self.source.arrow_matrix(k));
            let rhs = self.target.arrow_matrix(k).mul(&self.maps[a.source]);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    pub fn compose(&self, then: &ModuleMorphism) -> ModuleMorphism {
        let maps = self
            .maps
            .iter()
            .zip(&then.maps)
            .map(|(first, second)| second.mul(first))
            .collect();
        ModuleMorphism {
            source: self.source.clone(),
            target: then.target.clone(),
            maps,
        }
    }

    pub fn is_vertexwise_invertible(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    pub fn vertexwise_inverse(&self) -> Option<ModuleMorphism> {
        let maps: Option<Vec<DenseMatrix>> = self.maps.iter().map(|m| m.inverse()).collect();
        Some(ModuleMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            maps: maps?,
        })
    }
}

/// Exact dimension and basis of Hom_Λ(M, N).
pub fn hom_space(m: &Representation, n: &Representation) -> (usize, Vec<ModuleMorphism>) {
    let sys = hom_system(m, n);
    let ns = sys.nullspace_basis();
    let dim = ns.cols();
    let basis = (0..dim)
        .map(|k| unflatten_morphism(m, n, &ns.column(k)))
        .collect();
    (dim, basis)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_system(m, n).nullity()
}

fn hom_system(m: &Representation, n: &Representation) -> DenseMatrix {
    let alg = m.algebra();
    let f = alg.field();
    let nverts = alg.vertex_count();
    let var_offsets: Vec<usize> = {
        let mut acc = 0;
        (0..nverts)
            .map(|v| {
                let o = acc;
                acc += n.dims[v] * m.dims[v];
                o
            })
            .collect()
    };
    let total_vars: usize = (0..nverts).map(|v| n.dims[v] * m.dims[v]).sum();
    let total_rows: usize = alg
        .quiver()
        .arrows
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut sys = DenseMatrix::zeros(f, total_rows, total_vars);
    let mut row0 = 0;
    for (k, a) in alg.quiver().arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = m.arrow_matrix(k);
        let na = n.arrow_matrix(k);
        // equation (f_t M_α - N_α f_s)[r][c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let row = row0 + r * m.dims[s] + c;
                // f_t entries: f_t[r][j] * M_α[j][c]
                for j in 0..m.dims[t] {
                    let coeff = ma.get(j, c);
                    if coeff != 0 {
                        let var = var_offsets[t] + r * m.dims[t] + j;
                        sys.set(row, var, f.add(sys.get(row, var), coeff));
                    }
                }
                // -N_α[r][j] * f_s[j][c]
                for j in 0..n.dims[s] {
                    let coeff = na.get(r, j);
                    if coeff != 0 {
                        let var = var_offsets[s] + j * m.dims[s] + c;
                        sys.set(row, var, f.sub(sys.get(row, var), coeff));
                    }
                }
            }
        }
        row0 += n.dims[t] * m.dims[s];
    }
    sys
}

fn unflatten_morphism(m: &Representation, n: &Representation, flat: &[u64]) -> ModuleMorphism {
    let alg = m.algebra();
    let f = alg.field();
    let mut maps = Vec::new();
    let mut off = 0;
    for v in 0..alg.vertex_count() {
        let (rows, cols) = (n.dims[v], m.dims[v]);
        let mut mat = DenseMatrix::zeros(f, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                mat.set(r, c, flat[off + r * cols + c]);
            }
        }
        off += rows * cols;
        maps.push(mat);
    }
    ModuleMorphism {
        source: m.clone(),
        target: n.clone(),
        maps,
    }
}

/// Subrepresentation spanned by the given per-vertex bases (columns must be
/// closed under the arrow action); returns the subrep and its inclusion.
pub fn subrep_from_bases(
    rep: &Representation,
    bases: Vec<DenseMatrix>,
) -> (Representation, ModuleMorphism) {
    let alg = Arc::clone(rep.algebra());
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let arrows = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let image = rep.arrow_matrix(k).mul(&bases[a.source]);
            bases[a.target]
                .solve_matrix(&image)
                .expect("subspace not closed under arrows")
        })
        .collect();
    let sub = Representation::new(Arc::clone(&alg), dims, arrows);
    let incl = ModuleMorphism {
        source: sub.clone(),
        target: rep.clone(),
        maps: bases,
    };
    (sub, incl)
}

/// Kernel of a morphism, with its inclusion into the source.
pub fn kernel(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let bases: Vec<DenseMatrix> = f.maps.iter().map(|m| m.nullspace_basis()).collect();
    subrep_from_bases(&f.source, bases)
}

/// Image of a morphism, as a subrepresentation of the target.
pub fn image(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let bases: Vec<DenseMatrix> = f.maps.iter().map(|m| m.column_space_basis()).collect();
    subrep_from_bases(&f.target, bases)
}

/// Cokernel of a morphism, with the projection from the target.
pub fn cokernel(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let alg = Arc::clone(f.target.algebra());
    let fl = alg.field();
    // projection = basis of the left kernel of the image
    let projs: Vec<DenseMatrix> = f
        .maps
        .iter()
        .map(|m| m.column_space_basis().left_nullspace())
        .collect();
    let dims: Vec<usize> = projs.iter().map(|p| p.rows()).collect();
    // right inverses of the projections transfer the arrow action
    let right_invs: Vec<DenseMatrix> = projs
        .iter()
        .map(|p| {
            p.solve_matrix(&DenseMatrix::identity(fl, p.rows()))
                .expect("projection is surjective")
        })
        .collect();
    let arrows = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(k, a)| {
            projs[a.target]
                .mul(f.target.arrow_matrix(k))
                .mul(&right_invs[a.source])
        })
        .collect();
    let coker = Representation::new(Arc::clone(&alg), dims, arrows);
    let proj = ModuleMorphism {
        source: f.target.clone(),
        target: coker.clone(),
        maps: projs,
    };
    (coker, proj)
}

/// Per-vertex bases of rad M = (rad Λ)M = Σ_α im(M_α).
pub fn radical_bases(rep: &Representation) -> Vec<DenseMatrix> {
    let alg = rep.algebra();
    let f = alg.field();
    (0..alg.vertex_count())
        .map(|v| {
            let mut stacked = DenseMatrix::zeros(f, rep.dims[v], 0);
            for (k, a) in alg.quiver().arrows.iter().enumerate() {
                if a.target == v {
                    stacked = stacked.hstack(rep.arrow_matrix(k));
                }
            }
            stacked.column_space_basis()
        })
        .collect()
}

/// Multiplicity of each simple in top M = M / rad M.
pub fn top_multiplicities(rep: &Representation) -> Vec<usize> {
    radical_bases(rep)
        .iter()
        .enumerate()
        .map(|(v, b)| rep.dims[v] - b.cols())
        .collect()
}

pub fn radical(rep: &Representation) -> Representation {
    subrep_from_bases(rep, radical_bases(rep)).0
}

/// Projective cover P(top M) -> M; surjective by Nakayama's lemma.
pub fn projective_cover(rep: &Representation) -> (ModuleMorphism, SumLayout) {
    let alg = Arc::clone(rep.algebra());
    let f = alg.field();
    let tops = top_multiplicities(rep);
    let rad = radical_bases(rep);
    let (cover_rep, layout) = Representation::projective_sum(Arc::clone(&alg), &tops);
    // pick generators: unit vectors completing rad M to e_i M, per vertex
    let mut generators: Vec<Vec<u64>> = Vec::new(); // per copy, vector in e_i M
    for (i, &t) in tops.iter().enumerate() {
        if t == 0 {
            continue;
        }
        let mut chosen = rad[i].clone();
        let mut count = 0;
        for k in 0..rep.dims[i] {
            if count == t {
                break;
            }
            let mut unit = DenseMatrix::zeros(f, rep.dims[i], 1);
            unit.set(k, 0, 1);
            let cand = chosen.hstack(&unit);
            if cand.rank() > chosen.rank() {
                chosen = cand;
                let mut v = vec![0u64; rep.dims[i]];
                v[k] = 1;
                generators.push(v);
                count += 1;
            }
        }
        assert_eq!(count, t, "failed to complete radical to a basis");
    }
    // cover map: basis path q of e_v Λ e_i in copy c maps to q · generator_c
    let maps: Vec<DenseMatrix> = (0..alg.vertex_count())
        .map(|v| {
            let mut m = DenseMatrix::zeros(f, rep.dims[v], cover_rep.dims[v]);
            for (c, &i) in layout.copies.iter().enumerate() {
                let off = layout.proj_offset(&alg, v, c);
                for (k, &bpos) in alg.pair_basis(v, i).iter().enumerate() {
                    let action = rep.path_action(alg.basis_path(bpos));
                    let img = action.apply(&generators[c]);
                    for (r, &val) in img.iter().enumerate() {
                        m.set(r, off + k, val);
                    }
                }
            }
            m
        })
        .collect();
    (
        ModuleMorphism {
            source: cover_rep,
            target: rep.clone(),
            maps,
        },
        layout,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, DEFAULT_PRIME};
    use crate::test_fixtures::*;
    use crate::quiver::BoundQuiverAlgebra;

    fn alg(spec: &crate::quiver::AlgebraSpec) -> Arc<BoundQuiverAlgebra> {
        Arc::new(BoundQuiverAlgebra::build(Fp::new(DEFAULT_PRIME).unwrap(), spec).unwrap())
    }

    #[test]
    fn projective_dimension_vectors() {
        let a2 = alg(&a2_spec());
        let p1 = Representation::projective(Arc::clone(&a2), 0);
        assert_eq!(p1.dims(), &[1, 1]);
        let p2 = Representation::projective(Arc::clone(&a2), 1);
        assert_eq!(p2.dims(), &[0, 1]);
        let k3 = alg(&kronecker_spec(3));
        let p1 = Representation::projective(Arc::clone(&k3), 0);
        assert_eq!(p1.dims(), &[1, 3]);
        // dim P_(i) at vertex j equals the Cartan entry, on all fixtures
        for spec in [a2_spec(), a3_spec(), a3_rel_spec(), kronecker_spec(2)] {
            let a = alg(&spec);
            for i in 0..a.vertex_count() {
                let p = Representation::projective(Arc::clone(&a), i);
                for j in 0..a.vertex_count() {
                    assert_eq!(p.dims()[j], a.cartan()[j][i]);
                }
                assert!(p.satisfies_relations());
            }
        }
    }

    #[test]
    fn injective_dimension_vectors() {
        let a2 = alg(&a2_spec());
        let i2 = Representation::injective(Arc::clone(&a2), 1);
        assert_eq!(i2.dims(), &[1, 1]);
        let i1 = Representation::injective(Arc::clone(&a2), 0);
        assert_eq!(i1.dims(), &[1, 0]);
        let a1 = alg(&a1_spec());
        let i = Representation::injective(Arc::clone(&a1), 0);
        assert_eq!(i.dims(), &[1]);
        assert!(i2.satisfies_relations());
    }

    #[test]
    fn hom_examples_a2() {
        let a2 = alg(&a2_spec());
        let p1 = Representation::projective(Arc::clone(&a2), 0);
        let s1 = Representation::simple(Arc::clone(&a2), 0);
        let s2 = Representation::simple(Arc::clone(&a2), 1);
        assert_eq!(hom_dim(&p1, &s1), 1);
        assert_eq!(hom_dim(&s1, &s2), 0);
        assert_eq!(hom_dim(&p1, &p1), 1);
        let (d, basis) = hom_space(&p1, &p1);
        assert_eq!(d, 1);
        assert!(basis[0].is_valid());
    }

    #[test]
    fn radical_and_top_examples() {
        let a2 = alg(&a2_spec());
        let p1 = Representation::projective(Arc::clone(&a2), 0);
        assert_eq!(top_multiplicities(&p1), vec![1, 0]);
        let r = radical(&p1);
        assert_eq!(r.dims(), &[0, 1]); // S_2
        let s1 = Representation::simple(Arc::clone(&a2), 0);
        assert_eq!(top_multiplicities(&s1), vec![1, 0]);
        assert_eq!(radical(&s1).total_dim(), 0);
    }

    #[test]
    fn cover_of_projective_is_iso() {
        for spec in [a2_spec(), a3_rel_spec(), kronecker_spec(3)] {
            let a = alg(&spec);
            for i in 0..a.vertex_count() {
                let p = Representation::projective(Arc::clone(&a), i);
                let (cover, layout) = projective_cover(&p);
                assert!(cover.is_valid());
                assert!(cover.is_vertexwise_invertible());
                assert_eq!(layout.copies, vec![i]);
            }
        }
    }

    #[test]
    fn cokernel_of_inclusion() {
        let a2 = alg(&a2_spec());
        let p1 = Representation::projective(Arc::clone(&a2), 0);
        let p2 = Representation::projective(Arc::clone(&a2), 1);
        // the inclusion P_2 -> P_1 given by right multiplication with α
        let (_, homs) = hom_space(&p2, &p1);
        assert_eq!(homs.len(), 1);
        let (coker, proj) = cokernel(&homs[0]);
        assert_eq!(coker.dims(), &[1, 0]); // S_1
        assert!(proj.is_valid());
        // zero map: cokernel is P_1 itself
        let zero = ModuleMorphism::zero(p2.clone(), p1.clone());
        let (c0, _) = cokernel(&zero);
        assert_eq!(c0.dims(), p1.dims());
    }

    #[test]
    fn kernel_image_dimensions() {
        let a2 = alg(&a2_spec());
        let p1 = Representation::projective(Arc::clone(&a2), 0);
        let s1 = Representation::simple(Arc::clone(&a2), 0);
        let (_, homs) = hom_space(&p1, &s1);
        let f = &homs[0];
        let (ker, incl) = kernel(f);
        assert_eq!(ker.dims(), &[0, 1]);
        assert!(incl.is_valid());
        let (img, incl2) = image(f);
        assert_eq!(img.dims(), &[1, 0]);
        assert!(incl2.is_valid());
    }
}
