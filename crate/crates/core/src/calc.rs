//! The g-vector calculus: sampled E-invariants, direct-sum and tameness
//! probes, generic decomposition with modal voting and cross-prime
//! confirmation, and the bounded condition checks (ray, regularity,
//! non-decreasing).

use crate::field::{next_prime_after, FieldError, Fp};
use crate::pres::{fitting_split, homotopy_hom_dim, GVector, Presentation};
use crate::rep::SumLayout;
use crate::quiver::{AlgebraError, AlgebraSpec, BoundQuiverAlgebra, ClassVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Clone, Debug, Serialize)]
pub struct SampleConfig {
    pub prime: u64,
    pub seed: u64,
    pub samples: usize,
    pub fitting_rounds: usize,
    pub cross_primes: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            prime: crate::field::DEFAULT_PRIME,
            seed: 0,
            samples: 7,
            fitting_rounds: 12,
            cross_primes: 2,
        }
    }
}

#[derive(Debug, Error)]
pub enum CalcError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("samples must be at least 1")]
    BadConfig,
}

/// plus_i = max(g_i, 0), minus_i = max(−g_i, 0); supports are disjoint.
pub fn split(g: &GVector) -> (Vec<usize>, Vec<usize>) {
    let plus = g.iter().map(|&x| x.max(0) as usize).collect();
    let minus = g.iter().map(|&x| (-x).max(0) as usize).collect();
    (plus, minus)
}

/// Exact integer rank test by fraction-free (Bareiss) elimination.
pub fn linear_independence(vs: &[GVector]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let rows = vs.len();
    let cols = vs[0].len();
    if rows > cols {
        return false;
    }
    let mut m: Vec<Vec<i128>> = vs
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        for i in 0..rows {
            if i == r {
                continue;
            }
            for j in 0..cols {
                if j == c {
                    continue;
                }
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r == rows
}

pub fn scale_g(g: &GVector, t: i64) -> GVector {
    g.iter().map(|&x| t * x).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SummandEntry {
    pub g: GVector,
    pub multiplicity: usize,
    pub indecomposable: bool,
    pub tame: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericDecompositionReport {
    pub summands: Vec<SummandEntry>,
    /// Fraction of primary-prime samples that produced the modal decomposition.
    pub agreement_ratio: f64,
    pub low_confidence: bool,
    pub config: SampleConfig,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "outcome")]
pub enum SearchOutcome {
    Found { t: usize },
    Exhausted,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status")]
pub enum ConditionStatus {
    /// Holds vacuously or by a positive certificate.
    Pass,
    /// No counterexample up to tMax; never a proof.
    PassExhausted,
    Fail { summand: GVector, t: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionsReport {
    pub wild_summands: Vec<GVector>,
    pub ray: ConditionStatus,
    pub regularity: ConditionStatus,
    pub non_decreasing: ConditionStatus,
    /// ray-pass ⇒ regularity-pass ⇒ nonDecreasing-pass, at equal tMax.
    pub implication_chain_ok: bool,
    pub low_confidence: bool,
}

/// Per-algebra sampling session. All randomness is derived from
/// (seed, tag, index, prime) so results do not depend on evaluation order.
pub struct Session {
    spec: AlgebraSpec,
    cfg: SampleConfig,
    /// primes[0] is the primary prime; the rest confirm decompositions
    algebras: Vec<(u64, Arc<BoundQuiverAlgebra>)>,
}

impl Session {
    pub fn new(spec: AlgebraSpec, cfg: SampleConfig) -> Result<Self, CalcError> {
        if cfg.samples < 1 || cfg.fitting_rounds < 1 || cfg.cross_primes < 1 {
            return Err(CalcError::BadConfig);
        }
        let mut algebras = Vec::new();
        let mut p = cfg.prime;
        for k in 0..cfg.cross_primes {
            if k > 0 {
                p = next_prime_after(p);
            }
            let field = Fp::new(p)?;
            algebras.push((p, Arc::new(BoundQuiverAlgebra::build(field, &spec)?)));
        }
        Ok(Session {
            spec,
            cfg,
            algebras,
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn config(&self) -> &SampleConfig {
        &self.cfg
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebras[0].1
    }

    fn rng(&self, tag: &str, payload: &[i64], index: u64, prime: u64) -> ChaCha8Rng {
        let mut h = 0xcbf29ce484222325u64;
        let mut mix = |byte: u64| {
            h ^= byte;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.cfg.seed);
        for b in tag.bytes() {
            mix(b as u64);
        }
        for &x in payload {
            mix(x as u64);
        }
        mix(index);
        mix(prime);
        // final avalanche (splitmix64 tail)
        h ^= h >> 30;
        h = h.wrapping_mul(0xbf58476d1ce4e5b9);
        h ^= h >> 27;
        h = h.wrapping_mul(0x94d049bb133111eb);
        h ^= h >> 31;
        ChaCha8Rng::seed_from_u64(h)
    }

    fn sample_general_at(
        &self,
        alg: &Arc<BoundQuiverAlgebra>,
        prime: u64,
        g: &GVector,
        index: u64,
    ) -> Presentation {
        let f = alg.field();
        let (plus, minus) = split(g);
        let minus_layout = SumLayout::from_multiplicities(&minus);
        let plus_layout = SumLayout::from_multiplicities(&plus);
        let mut rng = self.rng("sample", g, index, prime);
        let blocks: Vec<Vec<ClassVector>> = plus_layout
            .copies
            .iter()
            .map(|&i| {
                minus_layout
                    .copies
                    .iter()
                    .map(|&j| {
                        let coords: Vec<u64> = (0..alg.cartan()[j][i])
                            .map(|_| f.random_element(&mut rng))
                            .collect();
                        alg.pair_coords_to_class(j, i, &coords)
                    })
                    .collect()
            })
            .collect();
        Presentation::new(Arc::clone(alg), minus_layout, plus_layout, blocks)
    }

    /// s general presentations of g over the primary prime.
    pub fn sample_general(&self, g: &GVector) -> Vec<Presentation> {
        let (prime, alg) = &self.algebras[0];
        (0..self.cfg.samples as u64)
            .map(|i| self.sample_general_at(alg, *prime, g, i))
            .collect()
    }

    /// min over s×s sampled pairs of homotopyHomDim; an upper bound for the
    /// true e(g,h), equal with high probability.
    pub fn e_invariant(&self, g: &GVector, h: &GVector) -> usize {
        let gs = self.sample_general(g);
        let hs = self.sample_general(h);
        let mut best = usize::MAX;
        for a in &gs {
            for b in &hs {
                best = best.min(homotopy_hom_dim(a, b));
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    pub fn is_direct_sum(&self, g: &GVector, h: &GVector) -> bool {
        self.e_invariant(g, h) == 0 && self.e_invariant(h, g) == 0
    }

    pub fn is_tame(&self, g: &GVector) -> bool {
        self.is_direct_sum(g, g)
    }

    /// Decomposition of one sample, as a canonical multiset of g-vectors.
    fn decompose_sample(
        &self,
        alg: &Arc<BoundQuiverAlgebra>,
        prime: u64,
        g: &GVector,
        index: u64,
    ) -> BTreeMap<GVector, usize> {
        let pres = self.sample_general_at(alg, prime, g, index);
        let mut rng = self.rng("fit", g, index, prime);
        let groups = fitting_split(&pres, &mut rng, self.cfg.fitting_rounds);
        let mut out: BTreeMap<GVector, usize> = BTreeMap::new();
        for grp in groups {
            let gs = grp.pres.g_vector();
            assert!(
                gs.iter().any(|&x| x != 0),
                "contractible summand in a disjoint-support sample"
            );
            let d = grp.residue_degree;
            let minus = grp.pres.minus_multiplicities();
            let plus = grp.pres.plus_multiplicities();
            let divisible = d > 1
                && minus.iter().chain(plus.iter()).all(|&m| m % d == 0);
            if divisible {
                // residue field F_{p^d}: over the algebraic closure the
                // summand is d conjugate copies of g/d
                let small: GVector = gs.iter().map(|&x| x / d as i64).collect();
                *out.entry(small).or_insert(0) += d * grp.multiplicity;
            } else {
                *out.entry(gs).or_insert(0) += grp.multiplicity;
            }
        }
        out
    }

    /// Modal decomposition over the primary prime's samples; ties broken
    /// toward more summands, then lexicographically.
    fn modal_decomposition(
        &self,
        alg: &Arc<BoundQuiverAlgebra>,
        prime: u64,
        g: &GVector,
    ) -> (BTreeMap<GVector, usize>, usize) {
        let mut votes: BTreeMap<Vec<(GVector, usize)>, usize> = BTreeMap::new();
        for i in 0..self.cfg.samples as u64 {
            let dec = self.decompose_sample(alg, prime, g, i);
            let key: Vec<(GVector, usize)> = dec.into_iter().collect();
            *votes.entry(key).or_insert(0) += 1;
        }
        let winner = votes
            .iter()
            .max_by(|(ka, &ca), (kb, &cb)| {
                let sa: usize = ka.iter().map(|(_, m)| m).sum();
                let sb: usize = kb.iter().map(|(_, m)| m).sum();
                ca.cmp(&cb)
                    .then(sa.cmp(&sb))
                    .then_with(|| kb.cmp(ka)) // prefer the smaller key
            })
            .expect("at least one sample");
        (winner.0.iter().cloned().collect(), *winner.1)
    }

    pub fn generic_decomposition(&self, g: &GVector) -> GenericDecompositionReport {
        let (prime0, alg0) = &self.algebras[0];
        let (modal, count) = self.modal_decomposition(alg0, *prime0, g);
        let agreement_ratio = count as f64 / self.cfg.samples as f64;
        let mut low_confidence = agreement_ratio < 0.6;
        for (prime, alg) in &self.algebras[1..] {
            let (other, _) = self.modal_decomposition(alg, *prime, g);
            if other != modal {
                low_confidence = true;
            }
        }
        // exact recomposition
        let n = g.len();
        let mut total = vec![0i64; n];
        for (gv, m) in &modal {
            for (acc, &x) in total.iter_mut().zip(gv) {
                *acc += *m as i64 * x;
            }
        }
        assert_eq!(&total, g, "summands do not recompose the input");
        // pairwise coherence of the returned summands
        let keys: Vec<GVector> = modal.keys().cloned().collect();
        for (i, a) in keys.iter().enumerate() {
            for b in keys.iter().skip(i + 1) {
                if !self.is_direct_sum(a, b) {
                    low_confidence = true;
                }
            }
        }
        let summands = modal
            .into_iter()
            .map(|(gv, m)| {
                let tame = self.is_tame(&gv);
                SummandEntry {
                    g: gv,
                    multiplicity: m,
                    indecomposable: true,
                    tame,
                }
            })
            .collect();
        GenericDecompositionReport {
            summands,
            agreement_ratio,
            low_confidence,
            config: self.cfg.clone(),
        }
    }

    /// Deduplicated summand set; second component is the low-confidence flag.
    pub fn ind_summands(&self, g: &GVector) -> (Vec<GVector>, bool) {
        let rep = self.generic_decomposition(g);
        (
            rep.summands.into_iter().map(|s| s.g).collect(),
            rep.low_confidence,
        )
    }

    /// Bounded search for t with h + t·h = h ⊕ t·h.
    pub fn in_d_self(&self, h: &GVector, t_max: usize) -> SearchOutcome {
        assert!(t_max >= 1);
        for t in 1..=t_max {
            if self.is_direct_sum(h, &scale_g(h, t as i64)) {
                return SearchOutcome::Found { t };
            }
        }
        SearchOutcome::Exhausted
    }

    pub fn check_conditions(&self, g: &GVector, t_max: usize) -> ConditionsReport {
        assert!(t_max >= 1);
        let (inds, mut low_confidence) = self.ind_summands(g);
        let wild: Vec<GVector> = inds
            .into_iter()
            .filter(|h| !self.is_tame(h))
            .collect();
        let mut ray = if wild.is_empty() {
            ConditionStatus::Pass
        } else {
            ConditionStatus::PassExhausted
        };
        let mut regularity = ray.clone();
        let mut non_decreasing = ray.clone();
        for h in &wild {
            for t in 1..=t_max {
                let th = scale_g(h, t as i64);
                if ray != ConditionStatus::Pass && !matches!(ray, ConditionStatus::Fail { .. }) {
                    let rep = self.generic_decomposition(&th);
                    low_confidence |= rep.low_confidence;
                    let singleton = rep.summands.len() == 1 && rep.summands[0].multiplicity == 1;
                    if !singleton {
                        ray = ConditionStatus::Fail {
                            summand: h.clone(),
                            t,
                        };
                    }
                }
                if !matches!(regularity, ConditionStatus::Fail { .. }) && self.is_tame(&th) {
                    regularity = ConditionStatus::Fail {
                        summand: h.clone(),
                        t,
                    };
                }
            }
            if !matches!(non_decreasing, ConditionStatus::Fail { .. }) {
                if let SearchOutcome::Found { t } = self.in_d_self(h, t_max) {
                    non_decreasing = ConditionStatus::Fail {
                        summand: h.clone(),
                        t,
                    };
                }
            }
        }
        let passes = |s: &ConditionStatus| !matches!(s, ConditionStatus::Fail { .. });
        let implication_chain_ok = (!passes(&ray) || passes(&regularity))
            && (!passes(&regularity) || passes(&non_decreasing));
        ConditionsReport {
            wild_summands: wild,
            ray,
            regularity,
            non_decreasing,
            implication_chain_ok,
            low_confidence,
        }
    }

    /// |ind(g)|; the flag warns when the Theorem bound |ind(g)| ≤ n fails.
    pub fn count_ind(&self, g: &GVector) -> (usize, bool, bool) {
        let (inds, low) = self.ind_summands(g);
        let n = self.algebra().vertex_count();
        (inds.len(), inds.len() > n, low)
    }
}

impl Session {
    /// Convenience for tests: uniform random g with entries in [-bound, bound].
    pub fn random_g<R: Rng>(&self, bound: i64, rng: &mut R) -> GVector {
        (0..self.algebra().vertex_count())
            .map(|_| rng.gen_range(-bound..=bound))
            .collect()
    }
}
