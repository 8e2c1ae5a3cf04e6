//! Graded local cohomology of the semigroup ring through two independent
//! paths: homological (graded Ext plus Z^d-graded local duality, with the
//! canonical twist eps_A) and combinatorial (the face-indexed cochain
//! complex of localizations), plus the exceptional arrangement E_A built
//! from the quasi-degrees of the Ext modules.
//!
//! The duality bookkeeping lives in exactly one place: `dual_degree` maps a
//! local-cohomology degree alpha to the Ext degree eps_A - alpha, and the
//! cross-check certifies the convention degree by degree over a box.

use std::collections::{BTreeSet, HashMap};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{ToPrimitive, Zero};

use crate::conegeom::{Face, FaceMembershipOracle};
use crate::gmod::{
    ext_module, minimal_free_resolution, toric_filtration, GradedPresentation, GradedResolution,
    QuasiDegreeStratum, ToricFiltration,
};
use crate::gring::{toric_ideal, RingContext};
use crate::intlinalg::solve_rational;
use crate::{Error, Result};

/// Local cohomology dimensions of S_A at one degree: dims[i] is
/// dim H^i_m(S_A)_alpha for i = 0..d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohSlice {
    pub degree: Vec<BigInt>,
    pub dims: Vec<usize>,
}

/// One stratum of the exceptional arrangement: the translate shift + C F,
/// annotated with the cohomological indices i <= d-1 contributing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalStratum {
    pub shift: Vec<BigRational>,
    pub face: Face,
    pub indices: BTreeSet<usize>,
}

/// The exceptional arrangement E_A in the beta-coordinates of the parameter
/// space, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalArrangement {
    pub strata: Vec<ExceptionalStratum>,
}

impl ExceptionalArrangement {
    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }
}

// ---------------------------------------------------------------------------
// The Ishida-style combinatorial oracle
// ---------------------------------------------------------------------------

/// The face-indexed cochain complex of localizations of S_A, with
/// membership oracles and incidence signs precomputed; slices over distinct
/// degrees reuse the memoized membership tables.
pub struct IshidaComplex<'c> {
    ctx: &'c RingContext,
    oracles: Vec<FaceMembershipOracle>,
    /// Signs for covering pairs (face index, face index) with dim + 1.
    incidence: HashMap<(usize, usize), i64>,
}

impl<'c> IshidaComplex<'c> {
    pub fn new(ctx: &'c RingContext) -> Self {
        let lattice = ctx.face_lattice();
        let a = ctx.pointed();
        let oracles: Vec<FaceMembershipOracle> =
            lattice.faces.iter().map(|f| FaceMembershipOracle::new(a, f)).collect();
        let mut incidence = HashMap::new();
        for (i, f) in lattice.faces.iter().enumerate() {
            for (j, g) in lattice.faces.iter().enumerate() {
                if g.dimension == f.dimension + 1
                    && f.columns.iter().all(|c| g.columns.contains(c))
                {
                    incidence.insert((i, j), orientation_sign(ctx, f, g));
                }
            }
        }
        IshidaComplex { ctx, oracles, incidence }
    }

    /// Cohomology dimensions of the degree-alpha strand.
    pub fn slice(&mut self, alpha: &[BigInt]) -> LocalCohSlice {
        let d = self.ctx.d();
        let lattice = self.ctx.face_lattice();
        let minus_alpha: Vec<BigInt> = alpha.iter().map(|x| -x).collect();
        let active: Vec<bool> =
            (0..lattice.faces.len()).map(|i| self.oracles[i].contains(&minus_alpha)).collect();
        // Active faces per cohomological position.
        let by_dim: Vec<Vec<usize>> = (0..=d)
            .map(|p| {
                lattice
                    .faces
                    .iter()
                    .enumerate()
                    .filter(|(i, f)| f.dimension == p && active[*i])
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        // Differential matrices D_p : C^p -> C^{p+1}.
        let mats: Vec<Vec<Vec<i64>>> = (0..d)
            .map(|p| {
                by_dim[p + 1]
                    .iter()
                    .map(|&gi| {
                        by_dim[p]
                            .iter()
                            .map(|&fi| self.incidence.get(&(fi, gi)).copied().unwrap_or(0))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        // d^2 = 0, asserted on the active strand.
        for p in 0..d.saturating_sub(1) {
            let rows_a = &mats[p + 1];
            let rows_b = &mats[p];
            for (ri, row) in rows_a.iter().enumerate() {
                for c in 0..by_dim[p].len() {
                    let s: i64 =
                        (0..by_dim[p + 1].len()).map(|k| row[k] * rows_b[k][c]).sum();
                    assert_eq!(s, 0, "Ishida differential fails d^2 = 0 at row {ri}");
                }
            }
        }
        let ranks: Vec<usize> = mats.iter().map(|m| rank_i64(m)).collect();
        let dims: Vec<usize> = (0..=d)
            .map(|p| {
                let total = by_dim[p].len();
                let out = if p < d { ranks[p] } else { 0 };
                let inc = if p > 0 { ranks[p - 1] } else { 0 };
                total - out - inc
            })
            .collect();
        LocalCohSlice { degree: alpha.to_vec(), dims }
    }
}

/// Orientation sign for a covering pair F < G: compare the basis of F
/// extended by a column of G off span(F) against the basis of G.
fn orientation_sign(ctx: &RingContext, f: &Face, g: &Face) -> i64 {
    let fb = crate::gmod::face_span_basis(ctx, f);
    let gb = crate::gmod::face_span_basis(ctx, g);
    let ext_col = g
        .columns
        .iter()
        .find(|j| !f.columns.contains(j))
        .map(|&j| {
            ctx.pointed().column(j).into_iter().map(BigRational::from_integer).collect::<Vec<_>>()
        })
        .expect("covering face has an extra column");
    let mut extended = fb;
    extended.push(ext_col);
    let k = gb.len();
    debug_assert_eq!(extended.len(), k);
    // Solve gb * X = extended restricted to pivot rows of gb.
    let d = ctx.d();
    let mut pivot_rows: Vec<usize> = Vec::new();
    {
        let mut m: Vec<Vec<BigRational>> =
            (0..d).map(|i| gb.iter().map(|b| b[i].clone()).collect()).collect();
        let mut perm: Vec<usize> = (0..d).collect();
        let mut row_start = 0;
        for col in 0..k {
            let Some(p) = (row_start..d).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(row_start, p);
            perm.swap(row_start, p);
            for r in 0..d {
                if r != row_start && !m[r][col].is_zero() {
                    let factor = &m[r][col] / &m[row_start][col];
                    for cc in 0..k {
                        let sub = &factor * &m[row_start][cc];
                        m[r][cc] = &m[r][cc] - &sub;
                    }
                }
            }
            pivot_rows.push(perm[row_start]);
            row_start += 1;
        }
    }
    let gsub: Vec<Vec<BigRational>> =
        pivot_rows.iter().map(|&i| gb.iter().map(|b| b[i].clone()).collect()).collect();
    let mut x_cols: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    for col in &extended {
        let rhs: Vec<BigRational> = pivot_rows.iter().map(|&i| col[i].clone()).collect();
        x_cols.push(solve_rational(&gsub, &rhs).expect("columns lie in the span"));
    }
    let det = rational_det(&x_cols);
    match det.cmp(&BigRational::zero()) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => panic!("degenerate orientation"),
    }
}

fn rational_det(cols: &[Vec<BigRational>]) -> BigRational {
    let k = cols.len();
    if k == 0 {
        return BigRational::from_integer(BigInt::from(1));
    }
    let mut m: Vec<Vec<BigRational>> =
        (0..k).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut det = BigRational::from_integer(BigInt::from(1));
    for i in 0..k {
        let Some(p) = (i..k).find(|&r| !m[r][i].is_zero()) else {
            return BigRational::zero();
        };
        if p != i {
            m.swap(i, p);
            det = -det;
        }
        det *= &m[i][i];
        for r in i + 1..k {
            if !m[r][i].is_zero() {
                let f = &m[r][i] / &m[i][i];
                for c in i..k {
                    let sub = &f * &m[i][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    det
}

/// Rank over Q of a small integer matrix, by fraction-free elimination.
fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] != 0 {
                let a = m[rank][col];
                let b = m[r][col];
                let g = gcd_i128(a.abs(), b.abs());
                let (fa, fb) = (b / g, a / g);
                for c in 0..cols {
                    m[r][c] = m[r][c] * fb - m[rank][c] * fa;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd_i128(b, a % b)
    }
}

/// One-shot slice (the reusable [`IshidaComplex`] is cheaper over boxes).
pub fn ishida_slice(ctx: &RingContext, alpha: &[BigInt]) -> LocalCohSlice {
    IshidaComplex::new(ctx).slice(alpha)
}

// ---------------------------------------------------------------------------
// The homological path
// ---------------------------------------------------------------------------

/// Presentation of S_A as a cyclic module in degree 0.
pub fn semigroup_ring_presentation(ctx: &RingContext) -> GradedPresentation {
    GradedPresentation::cyclic(ctx, &toric_ideal(ctx), vec![BigInt::zero(); ctx.d()])
}

/// Degree bookkeeping for Z^d-graded local duality: H^i_m(S_A)_alpha is
/// dual to Ext^{n-i}_R(S_A, R)_{eps_A - alpha}.  This is the single place
/// where the twist lives.
pub fn dual_degree(ctx: &RingContext, alpha: &[BigInt]) -> Vec<BigInt> {
    ctx.epsilon().iter().zip(alpha.iter()).map(|(e, a)| e - a).collect()
}

/// The Ext modules Ext^{n-i}(S_A, R) for i = 0..=d, with toric filtrations,
/// reused by the cross-check and the arrangement.
pub struct ExtPath {
    pub resolution: GradedResolution,
    /// Indexed by i (cohomological degree of H^i_m); entry is the Ext
    /// module presentation and its filtration.
    pub exts: Vec<(GradedPresentation, ToricFiltration)>,
}

impl ExtPath {
    pub fn new(ctx: &RingContext) -> Result<Self> {
        let pres = semigroup_ring_presentation(ctx);
        let resolution = minimal_free_resolution(ctx, &pres, ctx.n() + 1);
        let mut exts = Vec::new();
        for i in 0..=ctx.d() {
            let j = ctx.n() - i;
            let ext = ext_module(ctx, &resolution, j);
            let filt = toric_filtration(ctx, &ext)?;
            exts.push((ext, filt));
        }
        Ok(ExtPath { resolution, exts })
    }

    /// dim Ext^{n-i}(S_A, R) in the given degree, from the filtration
    /// (Hilbert additivity makes this a sum of 0/1 face-semigroup counts).
    pub fn ext_dim_at(
        &self,
        i: usize,
        delta: &[BigInt],
        face_oracles: &mut FaceSemigroupOracles,
    ) -> usize {
        self.exts[i]
            .1
            .steps
            .iter()
            .filter(|(face, shift)| {
                let v: Vec<BigInt> =
                    shift.iter().zip(delta.iter()).map(|(s, x)| s - x).collect();
                face_oracles.contains(&face.columns, &v)
            })
            .count()
    }
}

/// Memoized membership in the subsemigroup N F generated by the columns of
/// a face (not localized; used for tdeg of shifted face rings).
pub struct FaceSemigroupOracles {
    cols: Vec<Vec<BigInt>>,
    costs: Vec<BigRational>,
    memos: HashMap<Vec<usize>, HashMap<Vec<BigInt>, bool>>,
    certificate: Vec<BigRational>,
}

impl FaceSemigroupOracles {
    pub fn new(ctx: &RingContext) -> Self {
        let a = ctx.pointed();
        let cols: Vec<Vec<BigInt>> = (0..a.n()).map(|j| a.column(j)).collect();
        let costs: Vec<BigRational> =
            cols.iter().map(|c| crate::conegeom::dot_qz(a.certificate(), c)).collect();
        FaceSemigroupOracles {
            cols,
            costs,
            memos: HashMap::new(),
            certificate: a.certificate().to_vec(),
        }
    }

    pub fn contains(&mut self, face_columns: &[usize], v: &[BigInt]) -> bool {
        if !self.memos.contains_key(face_columns) {
            self.memos.insert(face_columns.to_vec(), HashMap::new());
        }
        // Split borrows: clone the small per-face data.
        let cols: Vec<Vec<BigInt>> =
            face_columns.iter().map(|&j| self.cols[j].clone()).collect();
        let costs: Vec<BigRational> =
            face_columns.iter().map(|&j| self.costs[j].clone()).collect();
        let cert = self.certificate.clone();
        let memo = self.memos.get_mut(face_columns).unwrap();
        fn dfs(
            v: Vec<BigInt>,
            cols: &[Vec<BigInt>],
            costs: &[BigRational],
            cert: &[BigRational],
            memo: &mut HashMap<Vec<BigInt>, bool>,
        ) -> bool {
            if v.iter().all(|x| x.is_zero()) {
                return true;
            }
            if let Some(&hit) = memo.get(&v) {
                return hit;
            }
            let budget = crate::conegeom::dot_qz(cert, &v);
            let mut ok = false;
            for (j, col) in cols.iter().enumerate() {
                if costs[j] <= budget {
                    let next: Vec<BigInt> =
                        v.iter().zip(col.iter()).map(|(a, b)| a - b).collect();
                    if dfs(next, cols, costs, cert, memo) {
                        ok = true;
                        break;
                    }
                }
            }
            memo.insert(v, ok);
            ok
        }
        dfs(v.to_vec(), &cols, &costs, &cert, memo)
    }
}

// ---------------------------------------------------------------------------
// Cross-check of the two paths
// ---------------------------------------------------------------------------

/// Box of degrees |alpha_i| <= half_width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBox {
    pub half_width: i64,
}

impl DegreeBox {
    pub fn degrees(&self, d: usize) -> Vec<Vec<BigInt>> {
        let b = self.half_width;
        let mut out = Vec::new();
        let mut cur = vec![-b; d];
        loop {
            out.push(cur.iter().map(|&x| BigInt::from(x)).collect());
            let mut k = d;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < b {
                    cur[k] += 1;
                    for c in cur.iter_mut().skip(k + 1) {
                        *c = -b;
                    }
                    break;
                }
            }
        }
    }
}

/// Default cross-check box: all degrees with |alpha_i| bounded by
/// max(8, 2 * max shift coordinate of the resolution).
pub fn default_box(res: &GradedResolution) -> DegreeBox {
    let m = res.max_shift_coordinate().to_i64().unwrap_or(8);
    DegreeBox { half_width: 8.max(2 * m) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMismatch {
    pub degree: Vec<BigInt>,
    pub cohomological_index: usize,
    pub ishida_dim: usize,
    pub ext_dim: usize,
}

/// Per-degree agreement table between the Ext/duality path and the Ishida
/// oracle over a box.
#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub box_half_width: i64,
    pub degrees_checked: usize,
    /// Number of degrees with nonzero H^i, indexed by i = 0..=d.
    pub nonzero_counts: Vec<usize>,
    /// True exceptional degrees found in the box, in beta-coordinates
    /// (negated tdeg), with the contributing indices i <= d-1.
    pub true_exceptional_degrees: Vec<(Vec<BigInt>, BTreeSet<usize>)>,
    pub mismatches: Vec<DegreeMismatch>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the two local cohomology computations dimension by dimension on
/// every degree of the box.
pub fn cross_check_report(ctx: &RingContext, ext_path: &ExtPath, bx: DegreeBox) -> CrossCheckReport {
    let d = ctx.d();
    let mut ishida = IshidaComplex::new(ctx);
    let mut face_oracles = FaceSemigroupOracles::new(ctx);
    let mut mismatches = Vec::new();
    let mut nonzero_counts = vec![0usize; d + 1];
    let mut true_exceptional: Vec<(Vec<BigInt>, BTreeSet<usize>)> = Vec::new();
    let degrees = bx.degrees(d);
    for alpha in &degrees {
        let slice = ishida.slice(alpha);
        let delta = dual_degree(ctx, alpha);
        let mut exc_indices: BTreeSet<usize> = BTreeSet::new();
        for i in 0..=d {
            let ext_dim = ext_path.ext_dim_at(i, &delta, &mut face_oracles);
            if slice.dims[i] != ext_dim {
                mismatches.push(DegreeMismatch {
                    degree: alpha.clone(),
                    cohomological_index: i,
                    ishida_dim: slice.dims[i],
                    ext_dim,
                });
            }
            if slice.dims[i] > 0 {
                nonzero_counts[i] += 1;
                if i < d {
                    exc_indices.insert(i);
                }
            }
        }
        if !exc_indices.is_empty() {
            // beta-coordinates: a true exceptional degree is -alpha.
            let beta: Vec<BigInt> = alpha.iter().map(|x| -x).collect();
            true_exceptional.push((beta, exc_indices));
        }
    }
    CrossCheckReport {
        box_half_width: bx.half_width,
        degrees_checked: degrees.len(),
        nonzero_counts,
        true_exceptional_degrees: true_exceptional,
        mismatches,
    }
}

/// Strict variant: any disagreement is a convention error.
pub fn cross_check(ctx: &RingContext, bx: Option<DegreeBox>) -> Result<CrossCheckReport> {
    let ext_path = ExtPath::new(ctx)?;
    let bx = bx.unwrap_or_else(|| default_box(&ext_path.resolution));
    let report = cross_check_report(ctx, &ext_path, bx);
    if report.is_clean() {
        Ok(report)
    } else {
        let first = &report.mismatches[0];
        Err(Error::ConventionMismatch {
            count: report.mismatches.len(),
            first: format!(
                "degree {:?}, i = {}: ishida {} vs ext {}",
                first.degree, first.cohomological_index, first.ishida_dim, first.ext_dim
            ),
        })
    }
}

// ---------------------------------------------------------------------------
// Exceptional arrangement and the Cohen-Macaulay test
// ---------------------------------------------------------------------------

/// E_A = union over i <= d-1 of qdeg(Ext^{n-i}(S_A, omega_R)), reported in
/// the beta-coordinates of the parameter space.  The omega twist shifts the
/// Ext(-, R) quasi-degrees by -eps_A; no further sign flip is needed
/// because local duality already negates the local cohomology degrees.
pub fn exceptional_arrangement(ctx: &RingContext) -> Result<ExceptionalArrangement> {
    let ext_path = ExtPath::new(ctx)?;
    exceptional_arrangement_from(ctx, &ext_path)
}

pub fn exceptional_arrangement_from(
    ctx: &RingContext,
    ext_path: &ExtPath,
) -> Result<ExceptionalArrangement> {
    let d = ctx.d();
    let eps = ctx.epsilon();
    let mut tagged: Vec<(QuasiDegreeStratum, usize)> = Vec::new();
    for i in 0..d {
        let q = crate::gmod::quasidegrees_of_filtration(ctx, &ext_path.exts[i].1);
        for s in q.strata {
            let shifted = QuasiDegreeStratum {
                shift: s
                    .shift
                    .iter()
                    .zip(eps.iter())
                    .map(|(x, e)| x - BigRational::from_integer(e.clone()))
                    .collect(),
                face: s.face,
            };
            tagged.push((shifted, i));
        }
    }
    // Canonicalize while keeping track of the contributing indices.
    let canonical = crate::gmod::canonicalize(
        ctx,
        tagged.iter().map(|(s, _)| s.clone()).collect(),
    );
    let strata: Vec<ExceptionalStratum> = canonical
        .strata
        .into_iter()
        .map(|s| {
            let indices: BTreeSet<usize> = tagged
                .iter()
                .filter(|(t, _)| {
                    t.face.columns == s.face.columns
                        && stratum_equivalent(ctx, t, &s)
                })
                .map(|(_, i)| *i)
                .collect();
            ExceptionalStratum { shift: s.shift, face: s.face, indices }
        })
        .collect();
    // Codimension at least 2 (a theorem, enforced as an assertion).
    for s in &strata {
        if s.face.dimension + 2 > d {
            return Err(Error::InternalInconsistency(format!(
                "exceptional stratum of face dimension {} violates codimension >= 2 in d = {}",
                s.face.dimension, d
            )));
        }
    }
    Ok(ExceptionalArrangement { strata })
}

fn stratum_equivalent(ctx: &RingContext, a: &QuasiDegreeStratum, b: &QuasiDegreeStratum) -> bool {
    if a.face.columns != b.face.columns {
        return false;
    }
    let basis = crate::gmod::face_span_basis(ctx, &a.face);
    let diff: Vec<BigRational> =
        a.shift.iter().zip(b.shift.iter()).map(|(x, y)| x - y).collect();
    crate::gmod::in_span(ctx.d(), &basis, &diff)
}

/// Cohen-Macaulayness of S_A with its certificate: the arrangement must be
/// empty exactly when the projective dimension is n - d.
#[derive(Clone, Debug)]
pub struct CmCertificate {
    pub is_cm: bool,
    pub projective_dimension: usize,
    pub expected_projective_dimension: usize,
    pub arrangement: ExceptionalArrangement,
}

pub fn is_cohen_macaulay(ctx: &RingContext) -> Result<CmCertificate> {
    let ext_path = ExtPath::new(ctx)?;
    let arrangement = exceptional_arrangement_from(ctx, &ext_path)?;
    let pd = ext_path.resolution.projective_dimension();
    let expected = ctx.n() - ctx.d();
    let by_arrangement = arrangement.is_empty();
    let by_pd = pd == expected;
    if by_arrangement != by_pd {
        return Err(Error::InternalInconsistency(format!(
            "empty arrangement = {by_arrangement} but pd = {pd} (n - d = {expected})"
        )));
    }
    Ok(CmCertificate {
        is_cm: by_arrangement,
        projective_dimension: pd,
        expected_projective_dimension: expected,
        arrangement,
    })
}
