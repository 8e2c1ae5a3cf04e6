//! The hypergeometric layer: rank-jump queries against the exceptional
//! arrangement, the generic rank vol(A), and the finiteness certificate for
//! the symbol quotient C[xi]/(in(I_F) + Euler forms).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::conegeom::{normalized_volume, Face};
use crate::gring::{
    buchberger, expo_divides, face_ideal, initial_ideal_total_degree, Expo, GradedIdeal,
    GradedPolynomial, RingContext,
};
use crate::localcoh::{ExceptionalArrangement, ExceptionalStratum};
use crate::{Error, Result};

/// A Gaussian-rational number a + b*i; the exceptional strata are defined
/// over Q, so membership splits into real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// A parameter point beta with exact Gaussian-rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint {
    pub coords: Vec<GaussianRational>,
}

impl ParameterPoint {
    pub fn rational(coords: Vec<BigRational>) -> Self {
        ParameterPoint {
            coords: coords.into_iter().map(GaussianRational::from_rational).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Exact stratum membership: beta - shift must lie in the complex span of
/// the face, i.e. both the real and imaginary parts in the rational span.
pub fn stratum_contains(ctx: &RingContext, stratum: &ExceptionalStratum, beta: &ParameterPoint) -> bool {
    let d = ctx.d();
    assert_eq!(beta.len(), d);
    let basis = crate::gmod::face_span_basis(ctx, &stratum.face);
    let re: Vec<BigRational> = (0..d).map(|i| &beta.coords[i].re - &stratum.shift[i]).collect();
    let im: Vec<BigRational> = (0..d).map(|i| beta.coords[i].im.clone()).collect();
    crate::gmod::in_span(d, &basis, &re) && crate::gmod::in_span(d, &basis, &im)
}

/// Decide whether beta is rank-jumping; on success returns the witness
/// stratum.  Computes the arrangement internally; use
/// [`is_rank_jumping_in`] to reuse a precomputed arrangement.
pub fn is_rank_jumping(
    ctx: &RingContext,
    beta: &ParameterPoint,
) -> Result<Option<ExceptionalStratum>> {
    let arrangement = crate::localcoh::exceptional_arrangement(ctx)?;
    Ok(is_rank_jumping_in(ctx, &arrangement, beta))
}

pub fn is_rank_jumping_in(
    ctx: &RingContext,
    arrangement: &ExceptionalArrangement,
    beta: &ParameterPoint,
) -> Option<ExceptionalStratum> {
    arrangement.strata.iter().find(|s| stratum_contains(ctx, s, beta)).cloned()
}

/// Approximate verdict for floating-point parameters; exact answers need
/// rational coordinates.
#[derive(Clone, Debug)]
pub struct ApproxVerdict {
    /// Whether the nearest-stratum distance is (numerically) zero.
    pub jumping_within_tolerance: bool,
    /// Euclidean distance from beta to the nearest stratum; infinite when
    /// the arrangement is empty.
    pub distance: f64,
}

/// Float convenience wrapper: reports the distance from beta to the nearest
/// stratum instead of an exact membership answer.
pub fn is_rank_jumping_f64(
    ctx: &RingContext,
    arrangement: &ExceptionalArrangement,
    beta: &[f64],
    tolerance: f64,
) -> ApproxVerdict {
    let d = ctx.d();
    assert_eq!(beta.len(), d);
    let mut best = f64::INFINITY;
    for s in &arrangement.strata {
        let basis = crate::gmod::face_span_basis(ctx, &s.face);
        let bf: Vec<Vec<f64>> = basis
            .iter()
            .map(|col| col.iter().map(rational_to_f64).collect::<Vec<f64>>())
            .collect();
        let diff: Vec<f64> =
            (0..d).map(|i| beta[i] - rational_to_f64(&s.shift[i])).collect();
        best = best.min(distance_to_span(&bf, &diff));
    }
    ApproxVerdict { jumping_within_tolerance: best <= tolerance, distance: best }
}

fn rational_to_f64(q: &BigRational) -> f64 {
    use num::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Distance from v to the span of the given columns, via Gram-Schmidt.
fn distance_to_span(cols: &[Vec<f64>], v: &[f64]) -> f64 {
    let mut residual = v.to_vec();
    let mut ortho: Vec<Vec<f64>> = Vec::new();
    for c in cols {
        let mut w = c.clone();
        for o in &ortho {
            let t = dot_f(&w, o) / dot_f(o, o);
            for i in 0..w.len() {
                w[i] -= t * o[i];
            }
        }
        if dot_f(&w, &w) > 1e-18 {
            ortho.push(w);
        }
    }
    for o in &ortho {
        let t = dot_f(&residual, o) / dot_f(o, o);
        for i in 0..residual.len() {
            residual[i] -= t * o[i];
        }
    }
    dot_f(&residual, &residual).sqrt()
}

fn dot_f(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Generic holonomic rank: the normalized volume vol(A).  This is the rank
/// for every non-exceptional parameter; the library does not re-derive that
/// identification, it consumes it.
pub fn generic_rank(ctx: &RingContext) -> BigInt {
    normalized_volume(ctx.pointed())
}

/// Certificate that C[xi]/(in(I_F) + <Euler forms at x>) is
/// finite-dimensional at a sample point with nonzero coordinates.
#[derive(Clone, Debug)]
pub struct CoherenceCertificate {
    pub face: Face,
    pub sample_point: Vec<BigRational>,
    pub quotient_dimension: usize,
}

/// Compute the standard-monomial count of in(I_F) + the Euler forms
/// specialized at the sample.  Errors with InfiniteDimensional when some
/// variable has no pure power in the lead ideal.
pub fn coherence_certificate(
    ctx: &RingContext,
    face: &Face,
    sample: &[BigRational],
) -> Result<CoherenceCertificate> {
    let ring = ctx.ring();
    let n = ctx.n();
    assert_eq!(sample.len(), n);
    if sample.iter().any(|x| x.is_zero()) {
        return Err(Error::InvalidInput("sample point must have nonzero coordinates".into()));
    }
    let init = initial_ideal_total_degree(ring, &face_ideal(ctx, face));
    let mut gens = init.generators.clone();
    for i in 0..ctx.d() {
        // in(E_i) = sum_j a_ij x_j xi_j at x = sample.
        let terms: Vec<(BigRational, Expo)> = (0..n)
            .filter_map(|j| {
                let a = ctx.pointed().column(j)[i].clone();
                if a.is_zero() {
                    return None;
                }
                let mut e = vec![0u32; n];
                e[j] = 1;
                Some((BigRational::from_integer(a) * &sample[j], e))
            })
            .collect();
        let form = GradedPolynomial::from_terms(ring, terms);
        if !form.is_zero() {
            gens.push(form);
        }
    }
    let gb = buchberger(ring, &gens);
    let leads: Vec<Expo> = gb.iter().map(|g| g.lead().unwrap().1.clone()).collect();
    // Finiteness: every variable needs a pure power among the leads.
    let mut bound = vec![0u32; n];
    for j in 0..n {
        let pure = leads
            .iter()
            .filter(|e| e.iter().enumerate().all(|(k, &p)| k == j || p == 0))
            .map(|e| e[j])
            .min();
        match pure {
            Some(p) => bound[j] = p,
            None => return Err(Error::InfiniteDimensional { face: face.columns.clone() }),
        }
    }
    // Count monomials below the bounds not divisible by any lead monomial.
    let mut count = 0usize;
    let mut cur = vec![0u32; n];
    count_standard(&leads, &bound, 0, &mut cur, &mut count);
    Ok(CoherenceCertificate {
        face: face.clone(),
        sample_point: sample.to_vec(),
        quotient_dimension: count,
    })
}

fn count_standard(leads: &[Expo], bound: &[u32], var: usize, cur: &mut Expo, count: &mut usize) {
    if var == cur.len() {
        if !leads.iter().any(|l| expo_divides(l, cur)) {
            *count += 1;
        }
        return;
    }
    for p in 0..=bound[var].saturating_sub(1).max(0) {
        cur[var] = p;
        // Prune: once divisible by a lead, larger exponents stay divisible.
        count_standard(leads, bound, var + 1, cur, count);
        if p + 1 >= bound[var] {
            break;
        }
    }
    cur[var] = 0;
}

/// Deterministic odd sample coordinates in 1..17 for coherence probing.
pub fn odd_sample(n: usize, seed: u64) -> Vec<BigRational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let k: i64 = rng.gen_range(0..9);
            BigRational::from_integer(BigInt::from(2 * k + 1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conegeom::make_pointed_matrix;
    use crate::intlinalg::IntMatrix;

    fn ctx(rows: &[Vec<i64>]) -> RingContext {
        RingContext::new(make_pointed_matrix(IntMatrix::from_rows(rows)).unwrap())
    }

    fn ctx_0134() -> RingContext {
        ctx(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]])
    }

    fn beta(v: &[i64]) -> ParameterPoint {
        ParameterPoint::rational(
            v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect(),
        )
    }

    #[test]
    fn no_jumps_for_polynomial_ring() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        assert!(is_rank_jumping(&c, &beta(&[5, 7])).unwrap().is_none());
        assert!(is_rank_jumping(&c, &beta(&[0, 0])).unwrap().is_none());
    }

    #[test]
    fn jump_of_0134_at_1_2() {
        let c = ctx_0134();
        let hit = is_rank_jumping(&c, &beta(&[1, 2])).unwrap();
        let stratum = hit.expect("(1,2) is rank-jumping");
        assert!(stratum.face.columns.is_empty());
        assert!(is_rank_jumping(&c, &beta(&[0, 0])).unwrap().is_none());
    }

    #[test]
    fn gaussian_point_off_stratum() {
        let c = ctx_0134();
        let arrangement = crate::localcoh::exceptional_arrangement(&c).unwrap();
        // (1 + i, 2): imaginary part off the zero-dimensional stratum.
        let p = ParameterPoint {
            coords: vec![
                GaussianRational { re: BigRational::one(), im: BigRational::one() },
                GaussianRational {
                    re: BigRational::from_integer(BigInt::from(2)),
                    im: BigRational::zero(),
                },
            ],
        };
        assert!(is_rank_jumping_in(&c, &arrangement, &p).is_none());
    }

    #[test]
    fn float_wrapper_distances() {
        let c = ctx_0134();
        let arrangement = crate::localcoh::exceptional_arrangement(&c).unwrap();
        let on = is_rank_jumping_f64(&c, &arrangement, &[1.0, 2.0], 1e-9);
        assert!(on.jumping_within_tolerance);
        let off = is_rank_jumping_f64(&c, &arrangement, &[1.0, 2.5], 1e-9);
        assert!(!off.jumping_within_tolerance);
        assert!((off.distance - 0.5).abs() < 1e-9);
    }

    #[test]
    fn generic_ranks() {
        assert_eq!(generic_rank(&ctx(&[vec![1, 0], vec![0, 1]])), BigInt::from(1));
        assert_eq!(generic_rank(&ctx_0134()), BigInt::from(4));
        assert_eq!(generic_rank(&ctx(&[vec![1, 1, 1], vec![0, 1, 2]])), BigInt::from(2));
    }

    #[test]
    fn coherence_empty_face() {
        let c = ctx_0134();
        let fl = c.face_lattice();
        let sample: Vec<BigRational> =
            [1, 1, 1, 1].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        let cert = coherence_certificate(&c, fl.empty_face(), &sample).unwrap();
        assert_eq!(cert.quotient_dimension, 1);
    }

    #[test]
    fn coherence_identity_full_face() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let fl = c.face_lattice();
        let sample: Vec<BigRational> =
            [1, 1].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        let cert = coherence_certificate(&c, fl.full_face(), &sample).unwrap();
        assert_eq!(cert.quotient_dimension, 1);
    }

    #[test]
    fn coherence_0134_full_face_finite() {
        let c = ctx_0134();
        let fl = c.face_lattice();
        for seed in 0..3u64 {
            let sample = odd_sample(4, seed);
            let cert = coherence_certificate(&c, fl.full_face(), &sample).unwrap();
            assert!(cert.quotient_dimension >= 1);
        }
    }

    #[test]
    fn coherence_rejects_zero_sample() {
        let c = ctx_0134();
        let fl = c.face_lattice();
        let mut sample = odd_sample(4, 0);
        sample[2] = BigRational::zero();
        assert!(coherence_certificate(&c, fl.full_face(), &sample).is_err());
    }

    #[test]
    fn jump_invariant_under_column_permutation() {
        let c1 = ctx_0134();
        let c2 = ctx(&[vec![1, 1, 1, 1], vec![4, 3, 1, 0]]);
        for b in [[1, 2], [0, 0], [2, 2], [1, 1]] {
            let r1 = is_rank_jumping(&c1, &beta(&b)).unwrap().is_some();
            let r2 = is_rank_jumping(&c2, &beta(&b)).unwrap().is_some();
            assert_eq!(r1, r2, "disagreement at {:?}", b);
        }
    }
}
