//! Univariate polynomials over F_p and irreducible factorization
//! (squarefree split, distinct-degree, Cantor-Zassenhaus equal-degree).
//!
//! Only used by the Fitting splitter to break characteristic polynomials of
//! endomorphisms into generalized eigenspace factors.

use crate::field::Fp;
use rand::Rng;

/// Coefficients low degree first; invariant: no trailing zeros (zero poly = empty vec).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![0, 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap()
    }

    pub fn monic(&self, f: Fp) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(self.lead());
        Poly::new(self.coeffs.iter().map(|&c| f.mul(c, inv)).collect())
    }

    pub fn add(&self, f: Fp, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out[i] = f.add(a, b);
        }
        Poly::new(out)
    }

    pub fn sub(&self, f: Fp, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out[i] = f.sub(a, b);
        }
        Poly::new(out)
    }

    pub fn mul(&self, f: Fp, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// (quotient, remainder) with `other` nonzero.
    pub fn divrem(&self, f: Fp, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero());
        if self.is_zero() || self.degree() < other.degree() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - other.degree();
        let mut quot = vec![0u64; dq + 1];
        let linv = f.inv(other.lead());
        for k in (0..=dq).rev() {
            let c = f.mul(rem[k + other.degree()], linv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, b));
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, f: Fp, other: &Poly) -> Poly {
        self.divrem(f, other).1
    }

    pub fn gcd(&self, f: Fp, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: Fp) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64) % f.modulus()))
            .collect();
        Poly::new(out)
    }

    /// self^e mod m
    pub fn powmod(&self, f: Fp, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Evaluate at a matrix-free scalar point.
    pub fn eval(&self, f: Fp, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }
}

/// Full factorization into monic irreducibles with multiplicities.
/// Randomized (Cantor-Zassenhaus) but deterministic for a fixed rng state.
pub fn factor<R: Rng>(f: Fp, poly: &Poly, rng: &mut R) -> Vec<(Poly, usize)> {
    assert!(!poly.is_zero());
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let monic = poly.monic(f);
    if monic.degree() == 0 {
        return out;
    }
    for (sq, mult) in squarefree_parts(f, &monic) {
        for (dd, deg) in distinct_degree(f, &sq) {
            for irr in equal_degree(f, &dd, deg, rng) {
                out.push((irr, mult));
            }
        }
    }
    // canonical order so callers see a deterministic result
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
    });
    out
}

/// Yun's algorithm; yields (squarefree factor, multiplicity). p is far larger
/// than any characteristic polynomial degree here, so the inseparable case
/// (f' = 0) cannot occur; asserted.
fn squarefree_parts(f: Fp, poly: &Poly) -> Vec<(Poly, usize)> {
    assert!((poly.degree() as u64) < f.modulus(), "degree exceeds modulus");
    let mut out = Vec::new();
    let d0 = poly.derivative(f);
    let g = poly.gcd(f, &d0);
    let mut c = poly.divrem(f, &g).0;
    let mut w = d0.divrem(f, &g).0;
    let mut i = 1usize;
    while c.degree() > 0 {
        let y = w.sub(f, &c.derivative(f));
        let fi = c.gcd(f, &y);
        if fi.degree() > 0 {
            out.push((fi.clone(), i));
        }
        c = c.divrem(f, &fi).0;
        w = y.divrem(f, &fi).0;
        i += 1;
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal
/// degree; yields (product, degree).
fn distinct_degree(f: Fp, poly: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = poly.clone();
    let mut xq = Poly::x().powmod(f, f.modulus(), &rest); // x^p mod rest
    let mut d = 1usize;
    while rest.degree() >= 2 * d {
        let g = xq.sub(f, &Poly::x()).gcd(f, &rest);
        if g.degree() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(f, &g).0;
            xq = xq.rem(f, &rest);
        }
        d += 1;
        if rest.degree() == 0 {
            break;
        }
        xq = xq.powmod(f, f.modulus(), &rest);
    }
    if rest.degree() > 0 {
        out.push((rest.clone(), rest.degree()));
    }
    out
}

/// Cantor-Zassenhaus split of a product of irreducibles all of degree `d`.
fn equal_degree<R: Rng>(f: Fp, poly: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    if poly.degree() == d {
        return vec![poly.monic(f)];
    }
    let p = f.modulus();
    loop {
        let a = Poly::new((0..poly.degree()).map(|_| rng.gen_range(0..p)).collect());
        if a.is_zero() || a.degree() == 0 {
            continue;
        }
        let b = pow_pd_half(f, &a, d, poly);
        let g = b.sub(f, &Poly::one()).gcd(f, poly);
        if g.degree() > 0 && g.degree() < poly.degree() {
            let rest = poly.divrem(f, &g).0;
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &rest, d, rng));
            return out;
        }
    }
}

/// a^((p^d - 1)/2) mod m via a^((p-1)/2 * (1 + p + ... + p^{d-1}))
fn pow_pd_half(f: Fp, a: &Poly, d: usize, m: &Poly) -> Poly {
    // s = a^(1 + p + p^2 + ... + p^{d-1}) computed by Frobenius-free ladder:
    // s_1 = a; s_{k+1} = s_k^p * a
    let mut s = a.rem(f, m);
    for _ in 1..d {
        s = s.powmod(f, f.modulus(), m).mul(f, a).rem(f, m);
    }
    s.powmod(f, (f.modulus() - 1) / 2, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, DEFAULT_PRIME};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let field = f();
        let a = Poly::new(vec![1, 2, 3, 4, 5]);
        let b = Poly::new(vec![7, 1, 2]);
        let (q, r) = a.divrem(field, &b);
        let back = q.mul(field, &b).add(field, &r);
        assert_eq!(back, a);
        assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn factor_product_of_linears() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // (x-2)(x-3)^2
        let l2 = Poly::new(vec![field.from_i64(-2), 1]);
        let l3 = Poly::new(vec![field.from_i64(-3), 1]);
        let prod = l2.mul(field, &l3).mul(field, &l3);
        let factors = factor(field, &prod, &mut rng);
        assert_eq!(factors.len(), 2);
        let mut mults: Vec<(u64, usize)> = factors
            .iter()
            .map(|(p, m)| (field.neg(p.coeffs[0]), *m))
            .collect();
        mults.sort();
        assert_eq!(mults, vec![(2, 1), (3, 2)]);
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        // x^2 + 1 is irreducible mod 1e9+7 (p ≡ 3 mod 4)
        let q = Poly::new(vec![1, 0, 1]);
        let factors = factor(field, &q, &mut rng);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.degree(), 2);
        assert_eq!(factors[0].1, 1);
    }

    #[test]
    fn factor_mixed() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // (x^2+1)(x-7)
        let q = Poly::new(vec![1, 0, 1]);
        let l = Poly::new(vec![field.from_i64(-7), 1]);
        let prod = q.mul(field, &l);
        let factors = factor(field, &prod, &mut rng);
        assert_eq!(factors.len(), 2);
        let product = factors
            .iter()
            .fold(Poly::one(), |acc, (p, m)| {
                let mut a = acc;
                for _ in 0..*m {
                    a = a.mul(field, p);
                }
                a
            });
        assert_eq!(product, prod.monic(field));
    }
}
