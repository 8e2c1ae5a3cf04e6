//! Finitely generated Z^d-graded modules over R: presentations, module
//! Groebner bases, syzygies, minimal free resolutions, graded Ext, toric
//! filtrations, quasi-degree sets, and exact Hilbert functions.
//!
//! Free modules record the degree of each basis element; a basis element
//! with shift alpha represents a generator in degree alpha, so the free
//! module is R(-alpha) in the usual twist notation and dualizing negates
//! shifts.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::conegeom::Face;
use crate::gring::{
    expo_divides, expo_lcm, expo_sub, face_ideal, normal_form, Expo, GradedIdeal,
    GradedPolynomial, PolyRing, RingContext,
};
use crate::intlinalg::{rational_rank, solve_rational};
use crate::{Error, Result};

/// Free module with a Z^d-degree per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    pub shifts: Vec<Vec<BigInt>>,
}

impl GradedFreeModule {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn dual(&self) -> GradedFreeModule {
        GradedFreeModule {
            shifts: self.shifts.iter().map(|s| s.iter().map(|x| -x).collect()).collect(),
        }
    }
}

/// Element of a free module, dense by position.
#[derive(Clone, PartialEq, Eq)]
pub struct ModVec {
    pub comps: Vec<GradedPolynomial>,
}

impl std::fmt::Debug for ModVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|p| format!("{:?}", p)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl ModVec {
    pub fn zero(rank: usize) -> Self {
        ModVec { comps: vec![GradedPolynomial::zero(); rank] }
    }

    pub fn unit(rank: usize, pos: usize, ring: &PolyRing) -> Self {
        let mut v = Self::zero(rank);
        v.comps[pos] = GradedPolynomial::one(ring);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    /// Leading module monomial under position-over-term order (lower
    /// position dominates, ties broken by the ring order).
    pub fn lead(&self) -> Option<(usize, &(BigRational, Expo))> {
        for (i, p) in self.comps.iter().enumerate() {
            if let Some(t) = p.lead() {
                return Some((i, t));
            }
        }
        None
    }

    pub fn add(&self, ring: &PolyRing, other: &Self) -> Self {
        ModVec {
            comps: self
                .comps
                .iter()
                .zip(other.comps.iter())
                .map(|(a, b)| a.add(ring, b))
                .collect(),
        }
    }

    pub fn sub(&self, ring: &PolyRing, other: &Self) -> Self {
        ModVec {
            comps: self
                .comps
                .iter()
                .zip(other.comps.iter())
                .map(|(a, b)| a.sub(ring, b))
                .collect(),
        }
    }

    pub fn mul_term(&self, coeff: &BigRational, e: &Expo) -> Self {
        ModVec { comps: self.comps.iter().map(|p| p.mul_term(coeff, e)).collect() }
    }

    pub fn mul_poly(&self, ring: &PolyRing, f: &GradedPolynomial) -> Self {
        ModVec { comps: self.comps.iter().map(|p| p.mul(ring, f)).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, (c, _))) => {
                let inv = c.recip();
                ModVec { comps: self.comps.iter().map(|p| p.scale(&inv)).collect() }
            }
        }
    }

    /// Z^d-degree of a homogeneous element of the free module with the
    /// given shifts.
    pub fn degree(&self, ctx: &RingContext, shifts: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
        let mut deg: Option<Vec<BigInt>> = None;
        for (i, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let pd = p.homogeneous_degree(ctx)?;
            let total: Vec<BigInt> = pd.iter().zip(shifts[i].iter()).map(|(a, b)| a + b).collect();
            match &deg {
                None => deg = Some(total),
                Some(d) if *d == total => {}
                _ => return None,
            }
        }
        deg
    }
}

/// Graded map between free modules; columns are the images of the source
/// basis elements.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    pub target: GradedFreeModule,
    pub source: GradedFreeModule,
    pub cols: Vec<ModVec>,
}

impl GradedMatrix {
    pub fn apply(&self, ring: &PolyRing, v: &ModVec) -> ModVec {
        let mut out = ModVec::zero(self.target.rank());
        for (j, col) in self.cols.iter().enumerate() {
            if !v.comps[j].is_zero() {
                out = out.add(ring, &col.mul_poly(ring, &v.comps[j]));
            }
        }
        out
    }

    /// Transpose as a map between the dual free modules.
    pub fn transpose(&self) -> GradedMatrix {
        let tr = self.target.rank();
        let sr = self.source.rank();
        let cols: Vec<ModVec> = (0..tr)
            .map(|i| ModVec { comps: (0..sr).map(|j| self.cols[j].comps[i].clone()).collect() })
            .collect();
        GradedMatrix { target: self.source.dual(), source: self.target.dual(), cols }
    }

    pub fn compose_is_zero(&self, ring: &PolyRing, next: &GradedMatrix) -> bool {
        next.cols.iter().all(|c| self.apply(ring, c).is_zero())
    }

    /// Entries that are nonzero constants.
    fn unit_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, p) in col.comps.iter().enumerate() {
                if p.terms.len() == 1 && p.terms[0].1.iter().all(|&x| x == 0) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Module presented as the cokernel of `relations` into the free module on
/// `generators`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub generators: GradedFreeModule,
    pub relations: Vec<ModVec>,
}

impl GradedPresentation {
    pub fn free(shifts: Vec<Vec<BigInt>>) -> Self {
        GradedPresentation { generators: GradedFreeModule { shifts }, relations: Vec::new() }
    }

    pub fn zero_module() -> Self {
        GradedPresentation {
            generators: GradedFreeModule { shifts: Vec::new() },
            relations: Vec::new(),
        }
    }

    /// R/I as a presentation with a single generator in the given degree.
    pub fn cyclic(_ctx: &RingContext, ideal: &GradedIdeal, shift: Vec<BigInt>) -> Self {
        let gens = GradedFreeModule { shifts: vec![shift] };
        let relations = ideal
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| ModVec { comps: vec![g.clone()] })
            .collect();
        GradedPresentation { generators: gens, relations }
    }

    pub fn is_zero(&self, ring: &PolyRing) -> bool {
        if self.generators.rank() == 0 {
            return true;
        }
        let gb = buchberger_mod(ring, &self.relations);
        (0..self.generators.rank()).all(|i| {
            normal_form_mod(ring, &ModVec::unit(self.generators.rank(), i, ring), &gb).is_zero()
        })
    }
}

// ---------------------------------------------------------------------------
// Module Groebner bases
// ---------------------------------------------------------------------------

fn cmp_mod_mono(ring: &PolyRing, a: (usize, &Expo), b: (usize, &Expo)) -> Ordering {
    // Position over term; earlier positions dominate.
    match a.0.cmp(&b.0) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => ring.cmp_expo(a.1, b.1),
    }
}

/// Total normal form of a module element against a list of reducers.
pub fn normal_form_mod(ring: &PolyRing, v: &ModVec, basis: &[ModVec]) -> ModVec {
    if v.is_zero() {
        return v.clone();
    }
    let rank = v.rank();
    let mut remainder = ModVec::zero(rank);
    let mut work = v.clone();
    'outer: while let Some((pos, (lc, le))) = work.lead().map(|(p, t)| (p, t.clone())) {
        for g in basis {
            let Some((gp, (gc, ge))) = g.lead() else { continue };
            if gp == pos && expo_divides(ge, &le) {
                let factor = &lc / gc;
                let shift = expo_sub(&le, ge);
                work = work.sub(ring, &g.mul_term(&factor, &shift));
                continue 'outer;
            }
        }
        // Move the leading term to the remainder.
        remainder.comps[pos].terms.push((lc.clone(), le.clone()));
        work.comps[pos].terms.remove(0);
    }
    remainder
}

fn s_vector(ring: &PolyRing, f: &ModVec, g: &ModVec) -> ModVec {
    let (fp, (fc, fe)) = f.lead().expect("nonzero");
    let (gp, (gc, ge)) = g.lead().expect("nonzero");
    debug_assert_eq!(fp, gp);
    let l = expo_lcm(fe, ge);
    let a = f.mul_term(&fc.recip(), &expo_sub(&l, fe));
    let b = g.mul_term(&gc.recip(), &expo_sub(&l, ge));
    a.sub(ring, &b)
}

/// Reduced Groebner basis of the submodule generated by `gens` under the
/// position-over-term order.
pub fn buchberger_mod(ring: &PolyRing, gens: &[ModVec]) -> Vec<ModVec> {
    let mut basis: Vec<ModVec> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let same_pos = |basis: &[ModVec], i: usize, j: usize| {
        basis[i].lead().unwrap().0 == basis[j].lead().unwrap().0
    };
    for i in 0..basis.len() {
        for j in 0..i {
            if same_pos(&basis, j, i) {
                pairs.push((j, i));
            }
        }
    }
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, (i1, j1)), (_, (i2, j2))| {
                let p1 = basis[*i1].lead().unwrap();
                let q1 = basis[*j1].lead().unwrap();
                let p2 = basis[*i2].lead().unwrap();
                let q2 = basis[*j2].lead().unwrap();
                let l1 = expo_lcm(&p1.1 .1, &q1.1 .1);
                let l2 = expo_lcm(&p2.1 .1, &q2.1 .1);
                cmp_mod_mono(ring, (p1.0, &l1), (p2.0, &l2)).then_with(|| (i1, j1).cmp(&(i2, j2)))
            })
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let s = s_vector(ring, &basis[i], &basis[j]);
        let nf = normal_form_mod(ring, &s, &basis);
        if !nf.is_zero() {
            let k = basis.len();
            basis.push(nf.monic());
            for t in 0..k {
                if same_pos(&basis, t, k) {
                    pairs.push((t, k));
                }
            }
        }
    }
    reduce_basis_mod(ring, basis)
}

fn reduce_basis_mod(ring: &PolyRing, mut basis: Vec<ModVec>) -> Vec<ModVec> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        let (ap, at) = a.lead().unwrap();
        let (bp, bt) = b.lead().unwrap();
        cmp_mod_mono(ring, (ap, &at.1), (bp, &bt.1)).reverse()
    });
    let mut keep: Vec<ModVec> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let (gp, gt) = g.lead().unwrap();
        let dominated = basis.iter().enumerate().any(|(j, h)| {
            j != i && {
                let (hp, ht) = h.lead().unwrap();
                hp == gp && expo_divides(&ht.1, &gt.1) && (ht.1 != gt.1 || j < i)
            }
        });
        if !dominated {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<ModVec> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let r = normal_form_mod(ring, &keep[i], &others);
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    out.sort_by(|a, b| {
        let (ap, at) = a.lead().unwrap();
        let (bp, bt) = b.lead().unwrap();
        cmp_mod_mono(ring, (ap, &at.1), (bp, &bt.1)).reverse()
    });
    out
}

/// Generators of the syzygy module of the given columns: all (l_1..l_k)
/// with sum l_j cols_j = 0.  Computed by a Groebner basis of the graph
/// module in F + R^k under an elimination order that prioritizes F.
pub fn syzygies(ring: &PolyRing, cols: &[ModVec]) -> Vec<ModVec> {
    if cols.is_empty() {
        return Vec::new();
    }
    let rank = cols[0].rank();
    let k = cols.len();
    let augmented: Vec<ModVec> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut comps = c.comps.clone();
            comps.extend((0..k).map(|t| {
                if t == j {
                    GradedPolynomial::one(ring)
                } else {
                    GradedPolynomial::zero()
                }
            }));
            ModVec { comps }
        })
        .collect();
    let gb = buchberger_mod(ring, &augmented);
    gb.into_iter()
        .filter(|g| g.comps[..rank].iter().all(|p| p.is_zero()))
        .map(|g| ModVec { comps: g.comps[rank..].to_vec() })
        .collect()
}

// ---------------------------------------------------------------------------
// Minimal free resolutions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct GradedResolution {
    /// modules[0] is the module's generator module; maps[i] sends
    /// modules[i+1] into modules[i].
    pub modules: Vec<GradedFreeModule>,
    pub maps: Vec<GradedMatrix>,
    pub minimal: bool,
}

impl GradedResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Projective dimension of the resolved module.
    pub fn projective_dimension(&self) -> usize {
        self.maps.len()
    }

    pub fn verify(&self, ring: &PolyRing) -> bool {
        for i in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[i].compose_is_zero(ring, &self.maps[i + 1]) {
                return false;
            }
        }
        !self.minimal || self.maps.iter().all(|m| m.unit_entries().is_empty())
    }

    /// Largest absolute coordinate over all shifts; drives default degree
    /// boxes downstream.
    pub fn max_shift_coordinate(&self) -> BigInt {
        let mut best = BigInt::zero();
        for m in &self.modules {
            for s in &m.shifts {
                for x in s {
                    let a = x.abs();
                    if a > best {
                        best = a;
                    }
                }
            }
        }
        best
    }
}

fn relations_matrix(ctx: &RingContext, pres: &GradedPresentation) -> GradedMatrix {
    let cols: Vec<ModVec> = pres.relations.iter().filter(|c| !c.is_zero()).cloned().collect();
    let source_shifts: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|c| {
            c.degree(ctx, &pres.generators.shifts)
                .expect("relation columns must be homogeneous")
        })
        .collect();
    GradedMatrix {
        target: pres.generators.clone(),
        source: GradedFreeModule { shifts: source_shifts },
        cols,
    }
}

/// Remove one unit entry from maps[pos], adjusting the neighbors.
fn prune_unit(
    ring: &PolyRing,
    modules: &mut [GradedFreeModule],
    maps: &mut [GradedMatrix],
    pos: usize,
    r: usize,
    c: usize,
) {
    let pivot = maps[pos].cols[c].comps[r].clone();
    let pivot_inv = pivot.lead().unwrap().0.recip();
    // Column operations clearing row r; fix the next map's rows.
    let lambdas: Vec<GradedPolynomial> = (0..maps[pos].cols.len())
        .map(|s| maps[pos].cols[s].comps[r].scale(&pivot_inv))
        .collect();
    for s in 0..maps[pos].cols.len() {
        if s == c || lambdas[s].is_zero() {
            continue;
        }
        let sub = maps[pos].cols[c].mul_poly(ring, &lambdas[s]);
        maps[pos].cols[s] = maps[pos].cols[s].sub(ring, &sub);
        if pos + 1 < maps.len() {
            // Source basis change e_s -> e_s - lambda_s e_c transposes to
            // row_c += lambda_s * row_s on the following map.
            for col in &mut maps[pos + 1].cols {
                let add = col.comps[s].mul(ring, &lambdas[s]);
                col.comps[c] = col.comps[c].add(ring, &add);
            }
        }
    }
    // Row operations clearing column c; fix the previous map's columns.
    let mus: Vec<GradedPolynomial> = (0..modules[pos].rank())
        .map(|k| maps[pos].cols[c].comps[k].scale(&pivot_inv))
        .collect();
    for k in 0..modules[pos].rank() {
        if k == r || mus[k].is_zero() {
            continue;
        }
        for s in 0..maps[pos].cols.len() {
            let sub = maps[pos].cols[s].comps[r].mul(ring, &mus[k]);
            maps[pos].cols[s].comps[k] = maps[pos].cols[s].comps[k].sub(ring, &sub);
        }
        if pos > 0 {
            // Target basis change e'_r = e_r + mu_k e_k transposes to
            // col_r += mu_k * col_k on the previous map.
            let add = maps[pos - 1].cols[k].mul_poly(ring, &mus[k]);
            maps[pos - 1].cols[r] = maps[pos - 1].cols[r].add(ring, &add);
        }
    }
    // The cleared row and column split off; adjacent slices must vanish.
    if pos > 0 {
        debug_assert!(maps[pos - 1].cols[r].is_zero());
    }
    if pos + 1 < maps.len() {
        debug_assert!(maps[pos + 1].cols.iter().all(|col| col.comps[c].is_zero()));
    }
    // Delete column c (source basis element).
    maps[pos].cols.remove(c);
    maps[pos].source.shifts.remove(c);
    modules[pos + 1].shifts.remove(c);
    if pos + 1 < maps.len() {
        for col in &mut maps[pos + 1].cols {
            col.comps.remove(c);
        }
        maps[pos + 1].target.shifts.remove(c);
    }
    // Delete row r (target basis element).
    for col in &mut maps[pos].cols {
        col.comps.remove(r);
    }
    maps[pos].target.shifts.remove(r);
    modules[pos].shifts.remove(r);
    if pos > 0 {
        maps[pos - 1].cols.remove(r);
        maps[pos - 1].source.shifts.remove(r);
    }
}

fn minimize(ring: &PolyRing, modules: &mut Vec<GradedFreeModule>, maps: &mut Vec<GradedMatrix>) {
    loop {
        let mut pruned = false;
        for pos in 0..maps.len() {
            if let Some(&(r, c)) = maps[pos].unit_entries().first() {
                prune_unit(ring, modules, maps, pos, r, c);
                pruned = true;
                break;
            }
        }
        if !pruned {
            break;
        }
    }
    // Zero columns of the last map are redundant kernel generators.
    if let Some(last) = maps.last_mut() {
        let keep: Vec<usize> =
            (0..last.cols.len()).filter(|&j| !last.cols[j].is_zero()).collect();
        if keep.len() != last.cols.len() {
            last.cols = keep.iter().map(|&j| last.cols[j].clone()).collect();
            last.source.shifts = keep.iter().map(|&j| last.source.shifts[j].clone()).collect();
            let lvl = maps.len();
            modules[lvl].shifts = maps[lvl - 1].source.shifts.clone();
        }
    }
    while maps.last().map(|m| m.cols.is_empty()).unwrap_or(false) {
        maps.pop();
        modules.pop();
    }
}

/// Minimal Z^d-graded free resolution of the presented module, of length at
/// most `max_length` (the Hilbert syzygy bound n always suffices).
pub fn minimal_free_resolution(
    ctx: &RingContext,
    pres: &GradedPresentation,
    max_length: usize,
) -> GradedResolution {
    let ring = ctx.ring();
    let mut modules = vec![pres.generators.clone()];
    let mut maps: Vec<GradedMatrix> = Vec::new();
    let first = relations_matrix(ctx, pres);
    if !first.cols.is_empty() {
        modules.push(first.source.clone());
        maps.push(first);
        minimize(ring, &mut modules, &mut maps);
    }
    while !maps.is_empty() && maps.len() < max_length {
        let last = maps.last().unwrap();
        let syz = syzygies(ring, &last.cols);
        if syz.is_empty() {
            break;
        }
        let source_shifts: Vec<Vec<BigInt>> = syz
            .iter()
            .map(|s| {
                s.degree(ctx, &maps.last().unwrap().source.shifts)
                    .expect("syzygies of homogeneous columns are homogeneous")
            })
            .collect();
        let m = GradedMatrix {
            target: maps.last().unwrap().source.clone(),
            source: GradedFreeModule { shifts: source_shifts.clone() },
            cols: syz,
        };
        modules.push(GradedFreeModule { shifts: source_shifts });
        maps.push(m);
        minimize(ring, &mut modules, &mut maps);
    }
    let res = GradedResolution { modules, maps, minimal: true };
    debug_assert!(res.verify(ring));
    res
}

// ---------------------------------------------------------------------------
// Ext modules
// ---------------------------------------------------------------------------

/// Presentation of Ext^j_R(M, R) from a free resolution of M, with the
/// duality convention that dualizing R(-alpha) gives R(alpha).
pub fn ext_module(ctx: &RingContext, res: &GradedResolution, j: usize) -> GradedPresentation {
    let ring = ctx.ring();
    if j > res.maps.len() {
        return GradedPresentation::zero_module();
    }
    // Cochain maps D_i = maps[i]^T : modules[i]^* -> modules[i+1]^*.
    let kernel_gens: Vec<ModVec> = if j < res.maps.len() {
        let d_j = res.maps[j].transpose();
        syzygies(ring, &d_j.cols)
    } else {
        let rank = res.modules[j].rank();
        (0..rank).map(|i| ModVec::unit(rank, i, ring)).collect()
    };
    if kernel_gens.is_empty() {
        return GradedPresentation::zero_module();
    }
    let dual_shifts = res.modules[j].dual().shifts;
    let gen_shifts: Vec<Vec<BigInt>> = kernel_gens
        .iter()
        .map(|k| k.degree(ctx, &dual_shifts).expect("kernel generators are homogeneous"))
        .collect();
    // Relations: combinations of kernel generators landing in the image of
    // the previous cochain map.
    let image_cols: Vec<ModVec> =
        if j >= 1 { res.maps[j - 1].transpose().cols } else { Vec::new() };
    let mut combined = kernel_gens.clone();
    combined.extend(image_cols);
    let relations: Vec<ModVec> = syzygies(ring, &combined)
        .into_iter()
        .map(|s| ModVec { comps: s.comps[..kernel_gens.len()].to_vec() })
        .filter(|s| !s.is_zero())
        .collect();
    let pres =
        GradedPresentation { generators: GradedFreeModule { shifts: gen_shifts }, relations };
    minimize_presentation(ctx, pres)
}

/// Prune unit entries from a presentation (same operation as minimizing the
/// first step of a resolution).
pub fn minimize_presentation(ctx: &RingContext, pres: GradedPresentation) -> GradedPresentation {
    let ring = ctx.ring();
    let mut modules = vec![pres.generators.clone()];
    let mut maps: Vec<GradedMatrix> = Vec::new();
    let first = relations_matrix(ctx, &pres);
    if first.cols.is_empty() {
        return pres;
    }
    modules.push(first.source.clone());
    maps.push(first);
    minimize(ring, &mut modules, &mut maps);
    if maps.is_empty() {
        GradedPresentation { generators: modules[0].clone(), relations: Vec::new() }
    } else {
        GradedPresentation { generators: modules[0].clone(), relations: maps[0].cols.clone() }
    }
}

// ---------------------------------------------------------------------------
// Hilbert functions
// ---------------------------------------------------------------------------

/// dim_Q of the degree-alpha piece of the presented module, by exact linear
/// algebra on the degree strand.
pub fn hilbert_function(ctx: &RingContext, pres: &GradedPresentation, alpha: &[BigInt]) -> usize {
    let mut basis: Vec<(usize, Expo)> = Vec::new();
    for (i, shift) in pres.generators.shifts.iter().enumerate() {
        let poly_deg: Vec<BigInt> = alpha.iter().zip(shift.iter()).map(|(a, s)| a - s).collect();
        for e in ctx.monomials_of_degree(&poly_deg) {
            basis.push((i, e));
        }
    }
    if basis.is_empty() {
        return 0;
    }
    if pres.relations.is_empty() {
        return basis.len();
    }
    let index: std::collections::HashMap<(usize, Expo), usize> =
        basis.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for rel in &pres.relations {
        let Some(rel_deg) = rel.degree(ctx, &pres.generators.shifts) else { continue };
        let mult_deg: Vec<BigInt> =
            alpha.iter().zip(rel_deg.iter()).map(|(a, s)| a - s).collect();
        for m in ctx.monomials_of_degree(&mult_deg) {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (i, p) in rel.comps.iter().enumerate() {
                for (c, e) in &p.terms {
                    let key = (i, crate::gring::expo_add(e, &m));
                    let k = index[&key];
                    row[k] = &row[k] + c;
                }
            }
            rows.push(row);
        }
    }
    basis.len() - rational_rank(&rows)
}

// ---------------------------------------------------------------------------
// Toric filtrations and quasi-degrees
// ---------------------------------------------------------------------------

/// A filtration of a toric module: steps (F_k, alpha_k) whose successive
/// quotients are the face semigroup rings S_{F_k}(-alpha_k).
#[derive(Clone, Debug)]
pub struct ToricFiltration {
    pub steps: Vec<(Face, Vec<BigInt>)>,
}

/// Colon module (N : f) = { v : f v in N } inside the ambient free module.
fn module_colon_poly(
    ring: &PolyRing,
    rank: usize,
    rel_gens: &[ModVec],
    f: &GradedPolynomial,
) -> Vec<ModVec> {
    let mut cols: Vec<ModVec> = (0..rank)
        .map(|i| {
            let mut v = ModVec::zero(rank);
            v.comps[i] = f.clone();
            v
        })
        .collect();
    let base = cols.len();
    cols.extend(rel_gens.iter().cloned());
    syzygies(ring, &cols)
        .into_iter()
        .map(|s| ModVec { comps: s.comps[..base].to_vec() })
        .filter(|s| !s.is_zero())
        .collect()
}

/// Intersection of two submodules of the same free module.
fn module_intersect(ring: &PolyRing, a: &[ModVec], b: &[ModVec]) -> Vec<ModVec> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols = a.to_vec();
    cols.extend(b.iter().cloned());
    let mut out = Vec::new();
    for s in syzygies(ring, &cols) {
        let mut v = ModVec::zero(a[0].rank());
        for (j, lam) in s.comps[..a.len()].iter().enumerate() {
            if !lam.is_zero() {
                v = v.add(ring, &a[j].mul_poly(ring, lam));
            }
        }
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// Colon module (N : I) for an ideal I.
fn module_colon_ideal(
    ring: &PolyRing,
    rank: usize,
    rel_gens: &[ModVec],
    ideal: &GradedIdeal,
) -> Vec<ModVec> {
    let gens: Vec<&GradedPolynomial> =
        ideal.generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        // (N : 0) is everything.
        return (0..rank).map(|i| ModVec::unit(rank, i, ring)).collect();
    }
    let mut acc = module_colon_poly(ring, rank, rel_gens, gens[0]);
    for f in &gens[1..] {
        if acc.is_empty() {
            break;
        }
        let next = module_colon_poly(ring, rank, rel_gens, f);
        acc = module_intersect(ring, &acc, &next);
    }
    acc
}

/// Annihilator ideal of the class of v in the presented quotient.
fn annihilator_of_element(
    ring: &PolyRing,
    v: &ModVec,
    rel_gens: &[ModVec],
) -> Vec<GradedPolynomial> {
    let mut cols = vec![v.clone()];
    cols.extend(rel_gens.iter().cloned());
    syzygies(ring, &cols)
        .into_iter()
        .map(|s| s.comps[0].clone())
        .filter(|p| !p.is_zero())
        .collect()
}

/// Build a toric filtration by repeatedly splitting off a cyclic submodule
/// isomorphic to a shifted face semigroup ring.
///
/// Faces are probed in increasing dimension, so the first face ideal with
/// a nonzero colon is a maximal associated prime; every homogeneous element
/// it kills then has annihilator exactly that face ideal, which is verified
/// and reported as NotToric on failure.
pub fn toric_filtration(ctx: &RingContext, pres: &GradedPresentation) -> Result<ToricFiltration> {
    let ring = ctx.ring();
    let rank = pres.generators.rank();
    let lattice = ctx.face_lattice();
    let face_ideals: Vec<GradedIdeal> =
        lattice.faces.iter().map(|f| face_ideal(ctx, f)).collect();
    let mut rels: Vec<ModVec> =
        pres.relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut steps: Vec<(Face, Vec<BigInt>)> = Vec::new();
    if rank == 0 {
        return Ok(ToricFiltration { steps });
    }
    loop {
        let rel_gb = buchberger_mod(ring, &rels);
        let nonzero = (0..rank)
            .any(|i| !normal_form_mod(ring, &ModVec::unit(rank, i, ring), &rel_gb).is_zero());
        if !nonzero {
            break;
        }
        let mut advanced = false;
        for (fi, face) in lattice.faces.iter().enumerate() {
            let colon = module_colon_ideal(ring, rank, &rel_gb, &face_ideals[fi]);
            let witness = colon
                .iter()
                .map(|u| normal_form_mod(ring, u, &rel_gb))
                .find(|r| !r.is_zero());
            let Some(w) = witness else { continue };
            // The annihilator must be exactly I_F; containment of I_F in
            // Ann(w) holds by construction.
            let ann = annihilator_of_element(ring, &w, &rel_gb);
            let fgb = face_ideals[fi].groebner(ring);
            for a in &ann {
                if !normal_form(ring, a, fgb).is_zero() {
                    return Err(Error::NotToric(format!(
                        "annihilator of a socle element strictly contains the face ideal of {:?}",
                        face.columns
                    )));
                }
            }
            let deg = w.degree(ctx, &pres.generators.shifts).ok_or_else(|| {
                Error::InternalInconsistency("inhomogeneous filtration witness".into())
            })?;
            steps.push((face.clone(), deg));
            rels.push(w);
            advanced = true;
            break;
        }
        if !advanced {
            return Err(Error::NotToric(
                "no face ideal annihilates a socle element of the nonzero module".into(),
            ));
        }
        if steps.len() > 10_000 {
            return Err(Error::InternalInconsistency("filtration does not terminate".into()));
        }
    }
    Ok(ToricFiltration { steps })
}

// ---------------------------------------------------------------------------
// Quasi-degree sets
// ---------------------------------------------------------------------------

/// A finite union of translated complex face spans, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiDegreeSet {
    pub strata: Vec<QuasiDegreeStratum>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiDegreeStratum {
    /// Canonical representative of the translate modulo the face span.
    pub shift: Vec<BigRational>,
    pub face: Face,
}

impl QuasiDegreeStratum {
    /// Exact membership of a rational point in shift + span(F).
    pub fn contains_rational(&self, ctx: &RingContext, beta: &[BigRational]) -> bool {
        let diff: Vec<BigRational> =
            beta.iter().zip(self.shift.iter()).map(|(b, s)| b - s).collect();
        in_span(ctx.d(), &face_span_basis(ctx, &self.face), &diff)
    }
}

/// Independent columns of the face submatrix, as rational vectors.
pub fn face_span_basis(ctx: &RingContext, face: &Face) -> Vec<Vec<BigRational>> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut current_rank = 0usize;
    for &j in &face.columns {
        let col: Vec<BigRational> =
            ctx.pointed().column(j).into_iter().map(BigRational::from_integer).collect();
        let mut rows: Vec<Vec<BigRational>> = basis.clone();
        rows.push(col.clone());
        if rational_rank(&rows) > current_rank {
            current_rank += 1;
            basis.push(col);
        }
    }
    basis
}

pub fn in_span(d: usize, basis: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    let m: Vec<Vec<BigRational>> =
        (0..d).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    solve_rational(&m, v).is_some()
}

/// Reduce alpha to the canonical representative modulo the face span: zero
/// on the pivot coordinates of the span.
fn canonical_residue(
    d: usize,
    basis: &[Vec<BigRational>],
    alpha: &[BigRational],
) -> Vec<BigRational> {
    if basis.is_empty() {
        return alpha.to_vec();
    }
    let k = basis.len();
    let mut m: Vec<Vec<BigRational>> =
        (0..d).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut col = 0usize;
    let mut row_start = 0usize;
    while col < k && row_start < d {
        let Some(p) = (row_start..d).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(row_start, p);
        perm.swap(row_start, p);
        for r in 0..d {
            if r != row_start && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[row_start][col];
                for cc in 0..k {
                    let sub = &f * &m[row_start][cc];
                    m[r][cc] = &m[r][cc] - &sub;
                }
            }
        }
        pivots.push(perm[row_start]);
        row_start += 1;
        col += 1;
    }
    // Solve span * x = alpha restricted to pivot coordinates.
    let sub_m: Vec<Vec<BigRational>> =
        pivots.iter().map(|&i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    let sub_rhs: Vec<BigRational> = pivots.iter().map(|&i| alpha[i].clone()).collect();
    let x = solve_rational(&sub_m, &sub_rhs).expect("pivot rows are invertible");
    let mut out = alpha.to_vec();
    for (bi, b) in basis.iter().enumerate() {
        for i in 0..d {
            let sub = &x[bi] * &b[i];
            out[i] = &out[i] - &sub;
        }
    }
    out
}

/// Quasi-degree set of a toric module: the union over filtration steps of
/// the closures shift + C F.
pub fn quasidegrees(ctx: &RingContext, pres: &GradedPresentation) -> Result<QuasiDegreeSet> {
    let filtration = toric_filtration(ctx, pres)?;
    Ok(quasidegrees_of_filtration(ctx, &filtration))
}

pub fn quasidegrees_of_filtration(ctx: &RingContext, f: &ToricFiltration) -> QuasiDegreeSet {
    let strata: Vec<QuasiDegreeStratum> = f
        .steps
        .iter()
        .map(|(face, alpha)| {
            let alpha_q: Vec<BigRational> =
                alpha.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            QuasiDegreeStratum { shift: alpha_q, face: face.clone() }
        })
        .collect();
    canonicalize(ctx, strata)
}

/// Canonical form: residues reduced modulo spans, duplicates merged, strata
/// contained in another dropped, deterministic order.
pub fn canonicalize(ctx: &RingContext, strata: Vec<QuasiDegreeStratum>) -> QuasiDegreeSet {
    let d = ctx.d();
    let mut reduced: Vec<QuasiDegreeStratum> = strata
        .into_iter()
        .map(|s| {
            let basis = face_span_basis(ctx, &s.face);
            QuasiDegreeStratum { shift: canonical_residue(d, &basis, &s.shift), face: s.face }
        })
        .collect();
    reduced.sort_by(|a, b| {
        (a.face.dimension, &a.face.columns, &a.shift).cmp(&(
            b.face.dimension,
            &b.face.columns,
            &b.shift,
        ))
    });
    reduced.dedup_by(|a, b| a.face.columns == b.face.columns && a.shift == b.shift);
    let keep: Vec<bool> = reduced
        .iter()
        .map(|s| !reduced.iter().any(|t| stratum_contained(ctx, s, t)))
        .collect();
    let strata =
        reduced.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect();
    QuasiDegreeSet { strata }
}

/// Is stratum s strictly contained in stratum t?
fn stratum_contained(ctx: &RingContext, s: &QuasiDegreeStratum, t: &QuasiDegreeStratum) -> bool {
    if s.face.columns == t.face.columns && s.shift == t.shift {
        return false;
    }
    let sb = face_span_basis(ctx, &s.face);
    let tb = face_span_basis(ctx, &t.face);
    let d = ctx.d();
    for col in &sb {
        if !in_span(d, &tb, col) {
            return false;
        }
    }
    let diff: Vec<BigRational> =
        s.shift.iter().zip(t.shift.iter()).map(|(a, b)| a - b).collect();
    in_span(d, &tb, &diff)
}

// ---------------------------------------------------------------------------
// Z-graded multiplicity from the Hilbert series
// ---------------------------------------------------------------------------

/// When (1,...,1) lies in the row span of A, the module is Z-graded by the
/// corresponding weight; this extracts the multiplicity (degree) of S_A from
/// the graded free resolution: the numerator K(t) divided by (1-t)^{n-d}
/// and evaluated at t = 1.  Returns None when (1..1) is not in the row span.
pub fn z_graded_multiplicity(ctx: &RingContext, res: &GradedResolution) -> Option<BigInt> {
    let d = ctx.d();
    let n = ctx.n();
    // lambda with lambda . a_j = 1 for all j: solve A^T lambda = (1..1).
    let at: Vec<Vec<BigRational>> = (0..n)
        .map(|j| ctx.pointed().column(j).into_iter().map(BigRational::from_integer).collect())
        .collect();
    let ones = vec![BigRational::one(); n];
    let lambda = solve_rational(&at, &ones)?;
    for j in 0..n {
        let s: BigRational = lambda
            .iter()
            .zip(ctx.pointed().column(j).iter())
            .map(|(l, a)| l * BigRational::from_integer(a.clone()))
            .sum();
        if s != BigRational::one() {
            return None;
        }
    }
    // K(t) = sum_i (-1)^i sum_shifts t^{w}, w = -lambda . shift.
    let mut coeffs: std::collections::BTreeMap<u64, BigInt> = std::collections::BTreeMap::new();
    for (i, module) in res.modules.iter().enumerate() {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for shift in &module.shifts {
            let w: BigRational = lambda
                .iter()
                .zip(shift.iter())
                .map(|(l, s)| l * BigRational::from_integer(-s.clone()))
                .sum();
            assert!(w.is_integer() && !w.is_negative(), "weights must be nonnegative integers");
            let k = u64::try_from(w.to_integer()).expect("desk-scale weight");
            *coeffs.entry(k).or_insert_with(BigInt::zero) += &sign;
        }
    }
    let deg = *coeffs.keys().max()?;
    let mut poly: Vec<BigInt> =
        (0..=deg).map(|k| coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)).collect();
    // Divide by (1-t) exactly n-d times.
    for _ in 0..n - d {
        let mut quotient: Vec<BigInt> = Vec::with_capacity(poly.len());
        let mut acc = BigInt::zero();
        for c in &poly {
            acc += c;
            quotient.push(acc.clone());
        }
        assert!(
            quotient.last().map(|x| x.is_zero()).unwrap_or(true),
            "K(t) must vanish to order n-d at t=1"
        );
        quotient.pop();
        poly = quotient;
        if poly.is_empty() {
            return Some(BigInt::zero());
        }
    }
    Some(poly.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conegeom::make_pointed_matrix;
    use crate::gring::toric_ideal;
    use crate::intlinalg::IntMatrix;

    fn ctx(rows: &[Vec<i64>]) -> RingContext {
        RingContext::new(make_pointed_matrix(IntMatrix::from_rows(rows)).unwrap())
    }

    fn ctx_0134() -> RingContext {
        ctx(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]])
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sa_presentation(c: &RingContext) -> GradedPresentation {
        GradedPresentation::cyclic(c, &toric_ideal(c), vec![BigInt::zero(); c.d()])
    }

    /// R/m with all variables as relations.
    fn point_module(c: &RingContext, shift: Vec<BigInt>) -> GradedPresentation {
        let ring = c.ring();
        let gens = GradedFreeModule { shifts: vec![shift] };
        let relations = (0..c.n())
            .map(|j| ModVec { comps: vec![GradedPolynomial::variable(ring, j)] })
            .collect();
        GradedPresentation { generators: gens, relations }
    }

    #[test]
    fn syzygy_of_regular_element_is_zero() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let ring = c.ring();
        let col = ModVec { comps: vec![GradedPolynomial::variable(ring, 0)] };
        assert!(syzygies(ring, &[col]).is_empty());
    }

    #[test]
    fn koszul_syzygy() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let ring = c.ring();
        let cols = vec![
            ModVec { comps: vec![GradedPolynomial::variable(ring, 0)] },
            ModVec { comps: vec![GradedPolynomial::variable(ring, 1)] },
        ];
        let syz = syzygies(ring, &cols);
        assert_eq!(syz.len(), 1);
        // The syzygy module is spanned by (-x2, x1) up to sign.
        let expected = ModVec {
            comps: vec![
                GradedPolynomial::variable(ring, 1).neg(),
                GradedPolynomial::variable(ring, 0),
            ],
        };
        let gb = buchberger_mod(ring, &syz);
        assert!(normal_form_mod(ring, &expected, &gb).is_zero());
        let gb2 = buchberger_mod(ring, &[expected]);
        assert!(normal_form_mod(ring, &syz[0], &gb2).is_zero());
    }

    #[test]
    fn syzygy_composition_and_generic_rank() {
        let c = ctx_0134();
        let ring = c.ring();
        let pres = sa_presentation(&c);
        let m = relations_matrix(&c, &pres);
        let syz = syzygies(ring, &m.cols);
        assert!(!syz.is_empty());
        for s in &syz {
            assert!(m.apply(ring, s).is_zero());
        }
        // Rank count at a random rational point: the localized strand
        // F2(x) -> F1(x) -> F0(x) is exact at F1 for generic x.
        let point: Vec<BigRational> =
            [3, 5, 7, 11].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        let eval = |p: &GradedPolynomial| -> BigRational {
            p.terms
                .iter()
                .map(|(c, e)| {
                    let mut v = c.clone();
                    for (j, &pw) in e.iter().enumerate() {
                        for _ in 0..pw {
                            v *= &point[j];
                        }
                    }
                    v
                })
                .sum()
        };
        let m_eval: Vec<Vec<BigRational>> =
            vec![m.cols.iter().map(|col| eval(&col.comps[0])).collect()];
        let s_eval: Vec<Vec<BigRational>> = (0..m.cols.len())
            .map(|j| syz.iter().map(|s| eval(&s.comps[j])).collect())
            .collect();
        let rank_m = rational_rank(&m_eval);
        let rank_s = rational_rank(&s_eval);
        assert_eq!(rank_m + rank_s, m.cols.len());
    }

    #[test]
    fn resolution_of_free_module() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let pres = GradedPresentation::free(vec![bi(&[0, 0])]);
        let res = minimal_free_resolution(&c, &pres, 10);
        assert_eq!(res.length(), 0);
        assert_eq!(res.modules.len(), 1);
    }

    #[test]
    fn resolution_koszul() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let pres = point_module(&c, bi(&[0, 0]));
        let res = minimal_free_resolution(&c, &pres, 10);
        assert_eq!(res.length(), 2);
        let ranks: Vec<usize> = res.modules.iter().map(|m| m.rank()).collect();
        assert_eq!(ranks, vec![1, 2, 1]);
        assert!(res.verify(c.ring()));
    }

    #[test]
    fn resolution_0134_pd3() {
        let c = ctx_0134();
        let pres = sa_presentation(&c);
        let res = minimal_free_resolution(&c, &pres, 10);
        // Projective dimension 3 > n - d = 2 witnesses non-CM.
        assert_eq!(res.projective_dimension(), 3);
        assert!(res.verify(c.ring()));
        // Second run with permuted columns gives the same Betti numbers.
        let cp = ctx(&[vec![1, 1, 1, 1], vec![4, 3, 1, 0]]);
        let resp = minimal_free_resolution(&cp, &sa_presentation(&cp), 10);
        assert_eq!(resp.projective_dimension(), 3);
        let ranks: Vec<usize> = res.modules.iter().map(|m| m.rank()).collect();
        let ranksp: Vec<usize> = resp.modules.iter().map(|m| m.rank()).collect();
        assert_eq!(ranks, ranksp);
    }

    #[test]
    fn ext_of_free_module() {
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let pres = GradedPresentation::free(vec![bi(&[0, 0])]);
        let res = minimal_free_resolution(&c, &pres, 10);
        let e0 = ext_module(&c, &res, 0);
        assert_eq!(e0.generators.rank(), 1);
        assert!(e0.relations.is_empty());
        let e1 = ext_module(&c, &res, 1);
        assert!(e1.is_zero(c.ring()));
    }

    #[test]
    fn ext_koszul_self_duality() {
        // Ext^n(R/m, R) = (R/m) shifted by eps_A; lower Ext vanishes.
        let c = ctx(&[vec![1, 0], vec![0, 1]]);
        let pres = point_module(&c, bi(&[0, 0]));
        let res = minimal_free_resolution(&c, &pres, 10);
        let e2 = ext_module(&c, &res, 2);
        assert!(!e2.is_zero(c.ring()));
        // eps_A = (1, 1); the only true degree is eps_A.
        let eps = bi(&[1, 1]);
        assert_eq!(hilbert_function(&c, &e2, &eps), 1);
        for off in [[1, 0], [0, 1], [-1, 0], [2, 1]] {
            let alpha: Vec<BigInt> =
                eps.iter().zip(off.iter()).map(|(e, o)| e + BigInt::from(*o)).collect();
            assert_eq!(hilbert_function(&c, &e2, &alpha), 0);
        }
        for j in 0..2 {
            assert!(ext_module(&c, &res, j).is_zero(c.ring()));
        }
    }

    #[test]
    fn ext3_0134_nonzero_finite() {
        let c = ctx_0134();
        let res = minimal_free_resolution(&c, &sa_presentation(&c), 10);
        let e3 = ext_module(&c, &res, 3);
        assert!(!e3.is_zero(c.ring()));
        // Finite length: the filtration uses only the empty face.
        let filt = toric_filtration(&c, &e3).unwrap();
        assert!(!filt.steps.is_empty());
        assert!(filt.steps.iter().all(|(f, _)| f.columns.is_empty()));
    }

    #[test]
    fn cm_vanishing_for_rational_normal_curve() {
        // pd = n - d = 1, so Ext^j(S_A, R) = 0 for j > 1.
        let c = ctx(&[vec![1, 1, 1], vec![0, 1, 2]]);
        let res = minimal_free_resolution(&c, &sa_presentation(&c), 10);
        assert_eq!(res.projective_dimension(), 1);
        for j in 2..=3 {
            assert!(ext_module(&c, &res, j).is_zero(c.ring()));
        }
    }

    #[test]
    fn hilbert_semigroup_ring_is_01() {
        let c = ctx_0134();
        let pres = sa_presentation(&c);
        // Degrees in tdeg(S_A) = -NA have dimension 1.
        assert_eq!(hilbert_function(&c, &pres, &bi(&[-2, -2])), 1);
        assert_eq!(hilbert_function(&c, &pres, &bi(&[0, 0])), 1);
        assert_eq!(hilbert_function(&c, &pres, &bi(&[-1, -4])), 1);
        // Degrees outside have dimension 0 (including the hole -(1,2)).
        assert_eq!(hilbert_function(&c, &pres, &bi(&[-1, -2])), 0);
        assert_eq!(hilbert_function(&c, &pres, &bi(&[1, 0])), 0);
    }

    #[test]
    fn hilbert_of_r_matches_monomial_count() {
        let c = ctx_0134();
        let free = GradedPresentation::free(vec![bi(&[0, 0])]);
        // Degree -(2,2): solutions of A u = (2,2) in N^4; the bounded
        // enumeration oracle finds exactly one, namely (0,2,0,0).
        let ms = c.monomials_of_degree(&bi(&[-2, -2]));
        assert_eq!(ms, vec![vec![0u32, 2, 0, 0]]);
        assert_eq!(hilbert_function(&c, &free, &bi(&[-2, -2])), ms.len());
    }

    #[test]
    fn filtration_of_shifted_face_ring() {
        let c = ctx_0134();
        let fl = c.face_lattice();
        let ray = fl.faces.iter().find(|f| f.columns == vec![0]).unwrap().clone();
        let shift = bi(&[2, 3]);
        let pres = GradedPresentation::cyclic(&c, &face_ideal(&c, &ray), shift.clone());
        let filt = toric_filtration(&c, &pres).unwrap();
        assert_eq!(filt.steps.len(), 1);
        assert_eq!(filt.steps[0].0.columns, vec![0]);
        assert_eq!(filt.steps[0].1, shift);
    }

    #[test]
    fn filtration_of_point_module() {
        let c = ctx_0134();
        let pres = point_module(&c, bi(&[0, 0]));
        let filt = toric_filtration(&c, &pres).unwrap();
        assert_eq!(filt.steps.len(), 1);
        assert!(filt.steps[0].0.columns.is_empty());
        assert_eq!(filt.steps[0].1, bi(&[0, 0]));
    }

    #[test]
    fn filtration_hilbert_additivity() {
        let c = ctx_0134();
        let res = minimal_free_resolution(&c, &sa_presentation(&c), 10);
        let e3 = ext_module(&c, &res, 3);
        let filt = toric_filtration(&c, &e3).unwrap();
        for x in -2i64..=8 {
            for y in -2i64..=12 {
                let alpha = bi(&[x, y]);
                let lhs = hilbert_function(&c, &e3, &alpha);
                let rhs: usize = filt
                    .steps
                    .iter()
                    .map(|(face, shift)| {
                        let pres =
                            GradedPresentation::cyclic(&c, &face_ideal(&c, face), shift.clone());
                        hilbert_function(&c, &pres, &alpha)
                    })
                    .sum();
                assert_eq!(lhs, rhs, "additivity fails at ({x},{y})");
            }
        }
    }

    #[test]
    fn quasidegrees_of_semigroup_ring_span_everything() {
        let c = ctx_0134();
        let q = quasidegrees(&c, &sa_presentation(&c)).unwrap();
        assert_eq!(q.strata.len(), 1);
        assert_eq!(q.strata[0].face.columns, vec![0, 1, 2, 3]);
        let beta = vec![BigRational::from_integer(BigInt::from(7)), BigRational::zero()];
        assert!(q.strata[0].contains_rational(&c, &beta));
    }

    #[test]
    fn quasidegrees_of_point_modules() {
        let c = ctx_0134();
        let q = quasidegrees(&c, &point_module(&c, bi(&[0, 0]))).unwrap();
        assert_eq!(q.strata.len(), 1);
        assert!(q.strata[0].face.columns.is_empty());
        assert!(q.strata[0].shift.iter().all(|x| x.is_zero()));
        // Shifted: single point at the shift.
        let q2 = quasidegrees(&c, &point_module(&c, bi(&[3, -1]))).unwrap();
        assert_eq!(q2.strata.len(), 1);
        let expected: Vec<BigRational> =
            bi(&[3, -1]).into_iter().map(BigRational::from_integer).collect();
        assert_eq!(q2.strata[0].shift, expected);
    }

    #[test]
    fn quasidegree_canonicalization_merges() {
        let c = ctx_0134();
        let fl = c.face_lattice();
        let full = fl.full_face().clone();
        let ray = fl.faces.iter().find(|f| f.columns == vec![0]).unwrap().clone();
        let strata = vec![
            QuasiDegreeStratum {
                shift: vec![BigRational::zero(), BigRational::zero()],
                face: full.clone(),
            },
            // A point stratum inside the full span is dropped.
            QuasiDegreeStratum { shift: vec![BigRational::one(), BigRational::zero()], face: ray },
        ];
        let q = canonicalize(&c, strata);
        assert_eq!(q.strata.len(), 1);
        assert_eq!(q.strata[0].face.columns, full.columns);
        // Two translates of the same face differing by a span vector merge.
        let ray = fl.faces.iter().find(|f| f.columns == vec![0]).unwrap().clone();
        let s1 = QuasiDegreeStratum {
            shift: vec![BigRational::zero(), BigRational::from_integer(BigInt::from(2))],
            face: ray.clone(),
        };
        let s2 = QuasiDegreeStratum {
            shift: vec![
                BigRational::from_integer(BigInt::from(5)),
                BigRational::from_integer(BigInt::from(2)),
            ],
            face: ray,
        };
        let q2 = canonicalize(&c, vec![s1, s2]);
        assert_eq!(q2.strata.len(), 1);
    }

    #[test]
    fn multiplicity_matches_volume() {
        for rows in [
            vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]],
            vec![vec![1, 1, 1], vec![0, 1, 2]],
            vec![vec![1, 0], vec![0, 1]],
        ] {
            let c = ctx(&rows);
            let res = minimal_free_resolution(&c, &sa_presentation(&c), 10);
            let m = z_graded_multiplicity(&c, &res).expect("(1..1) in row span");
            assert_eq!(m, crate::conegeom::normalized_volume(c.pointed()));
        }
    }
}
