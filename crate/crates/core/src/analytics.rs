//! Numerics attached to generically tau-reduced components: d(g), dim Z_g,
//! component counts, sampled min-hom estimates, the wild/tame verdict, and the
//! closed-form Cartan pairing.

use crate::calc::{split, Session};
use crate::pres::GVector;
use crate::rep::hom_dim;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

pub type DimensionVector = Vec<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyticsError {
    #[error("generic decomposition contains a negative direct summand")]
    NegativeSummandPresent,
    #[error("a general presentation is not injective; the closed form does not apply")]
    NotGenericallyInjective,
}

/// ⟨g, d⟩ = Σ g_i·d_i (projectives paired against simples).
pub fn pairing(g: &GVector, d: &DimensionVector) -> i64 {
    g.iter().zip(d).map(|(&x, &y)| x * y as i64).sum()
}

/// Σ d_i² = dim GL_d.
pub fn gl_dim(d: &DimensionVector) -> i64 {
    d.iter().map(|&x| (x * x) as i64).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct WildnessVerdict {
    pub wild: bool,
    pub pairing: i64,
    pub min_hom_self: usize,
    /// e-invariant cross-check via isTame; disagreement marks a sampling
    /// failure and is surfaced, never hidden.
    pub tame_probe_agrees: bool,
    pub low_confidence: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauReducedSumReport {
    pub ok: bool,
    /// sampled e(g_i, g_j); diagonal included for context
    pub e_matrix: Vec<Vec<usize>>,
    /// dual formulation: sampled min hom(Coker_i, tau Coker_j)
    pub tau_hom_matrix: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub g: GVector,
    pub d_of_g: DimensionVector,
    pub dim_z: i64,
    pub component_count: usize,
    pub tame: bool,
    pub pairing: i64,
    pub min_hom_self: Option<usize>,
    pub e_self: usize,
    /// negative summands dropped from the component count, with multiplicity
    pub negative_summands: Vec<(GVector, usize)>,
    pub low_confidence: bool,
}

fn is_negative_g(g: &GVector) -> bool {
    g.iter().all(|&x| x <= 0) && g.iter().any(|&x| x < 0)
}

impl Session {
    /// Modal dimension vector of cokernels of rank-maximal samples; the flag
    /// reports disagreement among the surviving samples.
    pub fn d_of_g(&self, g: &GVector) -> (DimensionVector, bool) {
        let samples = self.sample_general(g);
        let with_rank: Vec<(usize, DimensionVector)> = samples
            .iter()
            .map(|p| {
                let (_, rp, f) = p.realize();
                let mut total_rank = 0;
                let mut dims = Vec::new();
                for (v, m) in f.maps.iter().enumerate() {
                    let r = m.rank();
                    total_rank += r;
                    dims.push(rp.dims()[v] - r);
                }
                (total_rank, dims)
            })
            .collect();
        let max_rank = with_rank.iter().map(|(r, _)| *r).max().unwrap();
        let mut votes: BTreeMap<DimensionVector, usize> = BTreeMap::new();
        for (r, d) in &with_rank {
            if *r == max_rank {
                *votes.entry(d.clone()).or_insert(0) += 1;
            }
        }
        let disagreement = votes.len() > 1;
        let modal = votes
            .into_iter()
            .max_by(|(ka, ca), (kb, cb)| ca.cmp(cb).then_with(|| kb.cmp(ka)))
            .unwrap()
            .0;
        (modal, disagreement)
    }

    /// dim Z_g = Σ d(g)_i² − ⟨g, d(g)⟩.
    pub fn dim_z(&self, g: &GVector) -> (i64, bool) {
        let (d, low) = self.d_of_g(g);
        (gl_dim(&d) - pairing(g, &d), low)
    }

    fn negative_summands_of(&self, g: &GVector) -> Vec<(GVector, usize)> {
        self.generic_decomposition(g)
            .summands
            .into_iter()
            .filter(|s| is_negative_g(&s.g))
            .map(|s| (s.g, s.multiplicity))
            .collect()
    }

    /// min over sampled cokernel pairs of hom; upper bound with
    /// whp-equality semantics, same contract as the e-invariant.
    pub fn min_hom(&self, g: &GVector, h: &GVector) -> Result<usize, AnalyticsError> {
        if !self.negative_summands_of(g).is_empty() || !self.negative_summands_of(h).is_empty() {
            return Err(AnalyticsError::NegativeSummandPresent);
        }
        Ok(self.min_hom_unchecked(g, h))
    }

    fn min_hom_unchecked(&self, g: &GVector, h: &GVector) -> usize {
        let gs: Vec<_> = self
            .sample_general(g)
            .iter()
            .map(|p| p.cokernel_module())
            .collect();
        let hs: Vec<_> = self
            .sample_general(h)
            .iter()
            .map(|p| p.cokernel_module())
            .collect();
        let mut best = usize::MAX;
        for a in &gs {
            for b in &hs {
                best = best.min(hom_dim(a, b));
            }
        }
        best
    }

    /// Wild iff sampled minHom(g,g) > ⟨g, d(g)⟩. Negative summands are
    /// stripped first; the verdict applies to the stripped g-vector.
    pub fn wildness_verdict(&self, g: &GVector) -> WildnessVerdict {
        let negatives = self.negative_summands_of(g);
        let mut eff = g.clone();
        for (ng, m) in &negatives {
            for (acc, &x) in eff.iter_mut().zip(ng) {
                *acc -= *m as i64 * x;
            }
        }
        let (d, mut low) = self.d_of_g(&eff);
        let p = pairing(&eff, &d);
        let mh = self.min_hom_unchecked(&eff, &eff);
        let wild = (mh as i64) > p;
        let tame_probe = self.is_tame(&eff);
        let agree = wild == !tame_probe;
        low |= !agree;
        WildnessVerdict {
            wild,
            pairing: p,
            min_hom_self: mh,
            tame_probe_agrees: agree,
            low_confidence: low,
        }
    }

    /// Σ_{i,j} g_i·g_j·dim e_jΛe_i, Cartan data only. Requires a general
    /// presentation of g to be injective, verified on the samples.
    pub fn closed_form_pairing(&self, g: &GVector) -> Result<i64, AnalyticsError> {
        let injective = self.sample_general(g).iter().any(|p| {
            let (rm, _, f) = p.realize();
            (0..f.maps.len()).all(|v| f.maps[v].rank() == rm.dims()[v])
        });
        if !injective {
            return Err(AnalyticsError::NotGenericallyInjective);
        }
        let c = self.algebra().cartan();
        let n = g.len();
        let mut total = 0i64;
        for i in 0..n {
            for j in 0..n {
                total += g[i] * g[j] * c[j][i] as i64;
            }
        }
        Ok(total)
    }

    /// Off-diagonal e-matrix vanishing, with the dual tau-hom formulation
    /// computed independently for cross-validation.
    pub fn tau_reduced_sum_check(
        &self,
        gs: &[GVector],
    ) -> Result<TauReducedSumReport, AnalyticsError> {
        for g in gs {
            if !self.negative_summands_of(g).is_empty() {
                return Err(AnalyticsError::NegativeSummandPresent);
            }
        }
        let k = gs.len();
        let mut e_matrix = vec![vec![0usize; k]; k];
        let mut tau_hom_matrix = vec![vec![0usize; k]; k];
        let cokernels: Vec<Vec<_>> = gs
            .iter()
            .map(|g| {
                self.sample_general(g)
                    .iter()
                    .map(|p| p.cokernel_module())
                    .collect()
            })
            .collect();
        let taus: Vec<Vec<_>> = cokernels
            .iter()
            .map(|ms| ms.iter().map(crate::pres::tau).collect::<Vec<_>>())
            .collect();
        let mut ok = true;
        for i in 0..k {
            for j in 0..k {
                e_matrix[i][j] = self.e_invariant(&gs[i], &gs[j]);
                // min hom(Z_i, tau Z_j)
                let mut best = usize::MAX;
                for m in &cokernels[i] {
                    for t in &taus[j] {
                        best = best.min(hom_dim(m, t));
                    }
                }
                tau_hom_matrix[i][j] = best;
                if i != j && (e_matrix[i][j] != 0 || tau_hom_matrix[j][i] != 0) {
                    ok = false;
                }
            }
        }
        Ok(TauReducedSumReport {
            ok,
            e_matrix,
            tau_hom_matrix,
        })
    }

    pub fn component_report(&self, g: &GVector) -> ComponentReport {
        let dec = self.generic_decomposition(g);
        let mut low = dec.low_confidence;
        let negatives: Vec<(GVector, usize)> = dec
            .summands
            .iter()
            .filter(|s| is_negative_g(&s.g))
            .map(|s| (s.g.clone(), s.multiplicity))
            .collect();
        let component_count = dec
            .summands
            .iter()
            .filter(|s| !is_negative_g(&s.g))
            .count();
        let (d, dlow) = self.d_of_g(g);
        low |= dlow;
        // d additivity across the decomposition
        let mut d_sum = vec![0usize; d.len()];
        for s in &dec.summands {
            let (ds, l) = self.d_of_g(&s.g);
            low |= l;
            for (acc, &x) in d_sum.iter_mut().zip(&ds) {
                *acc += s.multiplicity * x;
            }
        }
        if d_sum != d {
            low = true;
        }
        let p = pairing(g, &d);
        let min_hom_self = if negatives.is_empty() {
            Some(self.min_hom_unchecked(g, g))
        } else {
            None
        };
        let e_self = self.e_invariant(g, g);
        let tame = e_self == 0;
        let dim_z = gl_dim(&d) - p;
        ComponentReport {
            g: g.clone(),
            d_of_g: d,
            dim_z,
            component_count,
            tame,
            pairing: p,
            min_hom_self,
            e_self,
            negative_summands: negatives,
            low_confidence: low,
        }
    }
}

/// Split sanity used by callers assembling reports: g = g+ − g− componentwise.
pub fn split_check(g: &GVector) -> bool {
    let (plus, minus) = split(g);
    g.iter()
        .zip(plus.iter().zip(&minus))
        .all(|(&x, (&p, &m))| x == p as i64 - m as i64 && (p == 0 || m == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calc::{SampleConfig, Session};
    use crate::test_fixtures::*;

    fn session(spec: crate::quiver::AlgebraSpec) -> Session {
        Session::new(spec, SampleConfig::default()).unwrap()
    }

    #[test]
    fn d_of_g_examples() {
        let k3 = session(kronecker_spec(3));
        let (d, low) = k3.d_of_g(&vec![1, -1]);
        assert_eq!(d, vec![1, 2]);
        assert!(!low);
        let a2 = session(a2_spec());
        let (d, _) = a2.d_of_g(&vec![1, 0]);
        assert_eq!(d, vec![1, 1]); // P_(1)
        let (d, _) = a2.d_of_g(&vec![0, -1]);
        assert_eq!(d, vec![0, 0]);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&vec![1, -1], &vec![1, 2]), -1);
        assert_eq!(pairing(&vec![0, 1], &vec![3, 5]), 5);
        assert_eq!(pairing(&vec![1, -1], &vec![1, 0]), 1);
    }

    #[test]
    fn dim_z_examples() {
        let k3 = session(kronecker_spec(3));
        assert_eq!(k3.dim_z(&vec![1, -1]).0, 6);
        let k2 = session(kronecker_spec(2));
        assert_eq!(k2.dim_z(&vec![1, -1]).0, 2);
        let a2 = session(a2_spec());
        assert_eq!(a2.dim_z(&vec![1, -1]).0, 0);
    }

    #[test]
    fn min_hom_examples() {
        let a2 = session(a2_spec());
        assert_eq!(a2.min_hom(&vec![1, -1], &vec![1, -1]), Ok(1));
        assert_eq!(a2.min_hom(&vec![1, 0], &vec![1, 0]), Ok(1));
        let k2 = session(kronecker_spec(2));
        assert_eq!(k2.min_hom(&vec![1, -1], &vec![1, -1]), Ok(0));
        // (1,-2) on A2 decomposes with a negative summand (0,-1)
        assert_eq!(
            a2.min_hom(&vec![1, -2], &vec![1, -1]),
            Err(AnalyticsError::NegativeSummandPresent)
        );
    }

    #[test]
    fn wildness_examples() {
        let k3 = session(kronecker_spec(3));
        let v = k3.wildness_verdict(&vec![1, -1]);
        assert!(v.wild);
        assert_eq!(v.pairing, -1);
        assert!(v.tame_probe_agrees);
        let a2 = session(a2_spec());
        let v = a2.wildness_verdict(&vec![1, -1]);
        assert!(!v.wild);
        assert_eq!(v.pairing, 1);
        assert_eq!(v.min_hom_self, 1);
        let v = a2.wildness_verdict(&vec![1, 0]);
        assert!(!v.wild);
    }

    #[test]
    fn closed_form_examples() {
        let a2 = session(a2_spec());
        assert_eq!(a2.closed_form_pairing(&vec![1, -1]), Ok(1));
        let k3 = session(kronecker_spec(3));
        assert_eq!(k3.closed_form_pairing(&vec![1, -1]), Ok(-1));
        // A3 without relations, g = [P_1] - [P_3]
        let a3 = session(a3_spec());
        let g = vec![1, 0, -1];
        let cf = a3.closed_form_pairing(&g).unwrap();
        assert_eq!(cf, 1);
        let (d, _) = a3.d_of_g(&g);
        assert_eq!(cf, pairing(&g, &d));
    }

    #[test]
    fn tau_reduced_sum_examples() {
        let a2 = session(a2_spec());
        let rep = a2
            .tau_reduced_sum_check(&[vec![1, 0], vec![0, 1]])
            .unwrap();
        assert!(rep.ok);
        let rep = a2
            .tau_reduced_sum_check(&[vec![1, -1], vec![1, 0]])
            .unwrap();
        assert!(rep.ok);
        let k3 = session(kronecker_spec(3));
        let rep = k3
            .tau_reduced_sum_check(&[vec![1, -1], vec![1, -1]])
            .unwrap();
        assert!(!rep.ok);
    }

    #[test]
    fn component_report_examples() {
        let a2 = session(a2_spec());
        let rep = a2.component_report(&vec![2, -1]);
        assert_eq!(rep.component_count, 2);
        assert_eq!(rep.d_of_g, vec![2, 1]);
        assert!(rep.tame);
        assert!(!rep.low_confidence);

        let rep = a2.component_report(&vec![0, -1]);
        assert_eq!(rep.component_count, 0);
        assert_eq!(rep.d_of_g, vec![0, 0]);
        assert_eq!(rep.dim_z, 0);

        let k3 = session(kronecker_spec(3));
        let rep = k3.component_report(&vec![1, -1]);
        assert_eq!(rep.component_count, 1);
        assert!(!rep.tame);
        assert_eq!(rep.pairing, -1);
    }

    #[test]
    fn tame_sign_corollary() {
        for spec in [a2_spec(), a3_rel_spec(), kronecker_spec(2)] {
            let s = session(spec);
            for g in [vec![1, -1], vec![1, 0], vec![2, -1]] {
                let g = g[..s.algebra().vertex_count().min(g.len())].to_vec();
                if g.len() != s.algebra().vertex_count() {
                    continue;
                }
                if s.is_tame(&g) {
                    let (d, _) = s.d_of_g(&g);
                    assert!(pairing(&g, &d) >= 0, "tame g with negative pairing: {g:?}");
                }
            }
        }
    }
}
